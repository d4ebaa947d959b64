//! Exact linear algebra over prime fields, ℤ_m and ℤ.

mod canonical;
mod intmatrix;
mod modp;
mod smith;

pub use canonical::{canonical_form, CanonicalForm, ElementaryOp};
pub use intmatrix::IntMatrix;
pub use modp::{inv_mod, kernel_mod_p, rank_mod_prime, rref_mod_p, SpanModP};
pub use smith::{integer_kernel, rank_mod, smith_normal_form, RowLattice, SmithDecomposition};

/// Deterministic trial division; moduli here are small.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
