//! Stabilizer codes whose generators commute for every local dimension.
//!
//! Codes are stored in the φ representation: each generator `X^a Z^b` on
//! `n` registers is the integer vector `(a | b)`. Start with
//! [`symplectic`], turn any qudit code into a local-dimension-invariant one
//! with [`ldi::make_ldi`], then certify distances with [`distance`] and
//! cutoffs with [`bounds`].

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod codefile;
pub mod cv;
pub mod distance;
pub mod error;
pub mod ldi;
pub mod linalg;
pub mod statecheck;
pub mod symplectic;

pub use error::{Error, Result};
pub use symplectic::{GeneratorMatrix, LocalDimension, PauliVector};
