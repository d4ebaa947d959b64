//! Distance certification by exhaustive search, error classification and
//! logical operators.
//!
//! Every search takes an explicit candidate budget and fails with
//! [`Error::BudgetExceeded`] instead of silently truncating.

mod logical;
mod search;

pub use logical::{logical_operators, LogicalPair};
pub use search::{
    d_star, d_star_budgeted, distance_mod, distance_mod_budgeted, phase_space_distance,
    phase_space_distance_budgeted, phase_space_norm, PhaseSpaceDistance,
};

use crate::error::{Error, Result};
use crate::linalg::RowLattice;
use crate::symplectic::{syndrome_of, GeneratorMatrix, PauliVector, Syndrome};

/// Default cap on enumerated candidates.
pub const DEFAULT_BUDGET: u128 = 4_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictTag {
    /// Equal mod p to an element of the stabilizer group.
    InGroup,
    /// Some syndrome value is nonzero mod p.
    Detectable,
    /// Zero syndrome over ℤ; undetectable for every local dimension.
    Unavoidable,
    /// Syndrome nonzero over ℤ but zero mod p.
    Artifact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorVerdict {
    pub tag: VerdictTag,
    /// Integer (unreduced) syndrome.
    pub witness_syndrome: Syndrome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub d: Option<usize>,
    pub searched_weight: usize,
    pub witness: Option<PauliVector>,
}

pub fn classify_error(m: &GeneratorMatrix, e: &PauliVector, p: i64) -> Result<ErrorVerdict> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    let syndrome = syndrome_of(m, e, None)?;
    let tag = if !syndrome.is_zero_mod(p) {
        VerdictTag::Detectable
    } else if RowLattice::from_i64_rows(&m.row_vectors(), 2 * m.n()).contains_mod(e.entries(), p) {
        VerdictTag::InGroup
    } else if syndrome.is_zero() {
        VerdictTag::Unavoidable
    } else {
        VerdictTag::Artifact
    };
    Ok(ErrorVerdict {
        tag,
        witness_syndrome: syndrome,
    })
}

/// All `w`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if w > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..w).rev().find(|&i| idx[i] != i + n - w) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..w {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub(crate) fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(())
}
