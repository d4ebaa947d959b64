use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Pauli token `{0}`")]
    MalformedToken(String),

    #[error("expected {expected} site tokens, found {found}")]
    TokenCount { expected: usize, found: usize },

    #[error("register count mismatch: {left} vs {right}")]
    RegisterMismatch { left: usize, right: usize },

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(i64),

    #[error("{0} is not prime")]
    NotPrime(i64),

    #[error("generators {i} and {j} do not commute mod {modulus} (product {product})")]
    NonCommuting {
        i: usize,
        j: usize,
        product: i128,
        modulus: i64,
    },

    #[error("generator {0} is neither pure-X nor pure-Z")]
    NotCss(usize),

    #[error("code is not local-dimension-invariant ({0} nonzero pairwise products)")]
    NotLdi(usize),

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("search needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("logical operators inconsistent with the code: {0}")]
    Inconsistent(String),

    #[error("code file, line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Budget exhaustion is reported separately from domain errors by the CLI.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
