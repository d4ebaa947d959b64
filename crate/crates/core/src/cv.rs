//! Additive (quadrature) forms of LDI generators, `X^a Z^b ↦ a·x + b·p`.

use std::fmt;

use crate::distance::logical_operators;
use crate::error::{Error, Result};
use crate::ldi::verify_ldi;
use crate::symplectic::{GeneratorMatrix, PauliVector};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nullifier {
    pub x_coeffs: Vec<i64>,
    pub p_coeffs: Vec<i64>,
}

impl Nullifier {
    pub fn n(&self) -> usize {
        self.x_coeffs.len()
    }

    pub fn is_pure_x(&self) -> bool {
        self.p_coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_pure_p(&self) -> bool {
        self.x_coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_pauli(&self) -> PauliVector {
        PauliVector::from_parts(&self.x_coeffs, &self.p_coeffs).expect("equal halves")
    }
}

impl From<&PauliVector> for Nullifier {
    fn from(v: &PauliVector) -> Self {
        Nullifier {
            x_coeffs: v.x().to_vec(),
            p_coeffs: v.z().to_vec(),
        }
    }
}

/// Terms by register, `x` before `p`; unit coefficients are implicit and a
/// zero form prints as `0`.
impl fmt::Display for Nullifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = (0..self.n()).flat_map(|j| {
            [("x", self.x_coeffs[j]), ("p", self.p_coeffs[j])]
                .into_iter()
                .map(move |(sym, c)| (sym, c, j + 1))
        });
        let mut first = true;
        for (sym, c, j) in terms.filter(|t| t.1 != 0) {
            let sign = match (c < 0, first) {
                (true, _) => "-",
                (false, true) => "",
                (false, false) => "+",
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{sym}{j}")?;
            } else {
                write!(f, "{sign}{mag}{sym}{j}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Row-for-row additive form. Rejects non-LDI input, whose nullifiers would
/// not commute.
pub fn to_nullifiers(m: &GeneratorMatrix) -> Result<Vec<Nullifier>> {
    let report = verify_ldi(m);
    if !report.is_ldi {
        return Err(Error::NotLdi(report.violations.len()));
    }
    Ok(m.rows().iter().map(Nullifier::from).collect())
}

/// `[A[u], A[v]] = a_u·b_v − a_v·b_u` in units of `[x, p]`.
pub fn additive_commutator(u: &Nullifier, v: &Nullifier) -> Result<i128> {
    if u.n() != v.n() {
        return Err(Error::RegisterMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    let dot = |a: &[i64], b: &[i64]| -> i128 {
        a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
    };
    Ok(dot(&u.x_coeffs, &v.p_coeffs) - dot(&v.x_coeffs, &u.p_coeffs))
}

/// Additive forms of the logical operators, `x̄` then `p̄` for each pair.
pub fn logical_quadratures(m: &GeneratorMatrix, p: i64) -> Result<Vec<Nullifier>> {
    Ok(logical_operators(m, p)?
        .iter()
        .flat_map(|pair| [Nullifier::from(&pair.x), Nullifier::from(&pair.z)])
        .collect())
}
