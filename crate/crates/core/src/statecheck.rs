//! Dense qudit statevectors for checking codewords at small sizes.
//!
//! Register 0 is the most significant digit of the basis index.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::is_prime;
use crate::symplectic::{GeneratorMatrix, PauliVector};

/// Largest Hilbert-space dimension handled by default.
pub const DEFAULT_MAX_DIMENSION: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    pub q: usize,
    pub n: usize,
    pub amplitudes: Vec<Complex64>,
}

fn dimension(q: usize, n: usize, max: usize) -> Result<usize> {
    let dim = u32::try_from(n)
        .ok()
        .and_then(|n| q.checked_pow(n))
        .filter(|&d| d <= max)
        .ok_or_else(|| Error::BudgetExceeded {
            required: (q as f64).powi(n as i32).min(u128::MAX as f64) as u128,
            budget: max as u128,
        })?;
    Ok(dim)
}

impl DenseState {
    /// The computational basis ket with the given digits.
    pub fn basis(q: usize, digits: &[usize]) -> Result<Self> {
        let n = digits.len();
        let dim = dimension(q, n, DEFAULT_MAX_DIMENSION)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index_of(q, digits)] = Complex64::new(1.0, 0.0);
        Ok(DenseState { q, n, amplitudes })
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, digits: &[usize]) -> Complex64 {
        self.amplitudes[index_of(self.q, digits)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &DenseState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    fn normalized(mut self) -> Self {
        let norm = self.norm();
        self.amplitudes.iter_mut().for_each(|a| *a /= norm);
        self
    }

    /// `|⟨ψ|P|ψ⟩|`, which is 1 exactly when `P` fixes the state up to phase.
    pub fn stabilizer_overlap(&self, v: &PauliVector) -> Result<f64> {
        Ok(self.inner(&apply_pauli(self, v)?).norm())
    }

    pub fn digits(&self, index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.n];
        let mut rest = index;
        for d in digits.iter_mut().rev() {
            *d = rest % self.q;
            rest /= self.q;
        }
        digits
    }
}

fn index_of(q: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * q + d % q)
}

fn omega(q: usize, power: usize) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * (power % q) as f64 / q as f64)
}

/// `Z^b X^a`: shift each register by `a_j`, then multiply by `ω^{b_j · j}`.
pub fn apply_pauli(state: &DenseState, v: &PauliVector) -> Result<DenseState> {
    if v.n() != state.n {
        return Err(Error::RegisterMismatch {
            left: state.n,
            right: v.n(),
        });
    }
    let q = state.q;
    let qi = q as i64;
    let shift: Vec<usize> = v.x().iter().map(|a| a.rem_euclid(qi) as usize).collect();
    let phase: Vec<usize> = v.z().iter().map(|b| b.rem_euclid(qi) as usize).collect();
    let mut out = vec![Complex64::new(0.0, 0.0); state.dimension()];
    for (idx, amp) in state.amplitudes.iter().enumerate() {
        if *amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut digits = state.digits(idx);
        let mut power = 0usize;
        for j in 0..state.n {
            digits[j] = (digits[j] + shift[j]) % q;
            power += phase[j] * digits[j];
        }
        out[index_of(q, &digits)] += amp * omega(q, power);
    }
    Ok(DenseState {
        q,
        n: state.n,
        amplitudes: out,
    })
}

const ZERO_TOLERANCE: f64 = 1e-9;

/// Projects onto the eigenspace of `g` whose eigenvalue is the principal
/// `q`-th root of the scalar `g^q`.
fn project(state: &DenseState, g: &PauliVector, q: usize) -> Result<DenseState> {
    // g^q is a scalar multiple of the identity; read it off |0…0⟩.
    let probe = DenseState::basis(q, &vec![0; state.n])?;
    let mut power = probe.clone();
    for _ in 0..q {
        power = apply_pauli(&power, g)?;
    }
    let scalar = probe.inner(&power);
    let lambda_inv = scalar.powf(1.0 / q as f64).inv();

    let mut acc = state.clone();
    let mut term = state.clone();
    let mut factor = Complex64::new(1.0, 0.0);
    for _ in 1..q {
        term = apply_pauli(&term, g)?;
        factor *= lambda_inv;
        for (a, t) in acc.amplitudes.iter_mut().zip(&term.amplitudes) {
            *a += factor * t;
        }
    }
    acc.amplitudes.iter_mut().for_each(|a| *a /= q as f64);
    Ok(acc)
}

/// A unit vector fixed (up to phase) by every generator, built from the
/// first computational basis ket with nonzero projection.
pub fn stabilized_state(m: &GeneratorMatrix, q: i64) -> Result<DenseState> {
    stabilized_state_budgeted(m, q, DEFAULT_MAX_DIMENSION)
}

pub fn stabilized_state_budgeted(m: &GeneratorMatrix, q: i64, max_dimension: usize) -> Result<DenseState> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    m.check_commuting_mod(q)?;
    let (qu, n) = (q as usize, m.n());
    let dim = dimension(qu, n, max_dimension)?;
    for start in 0..dim {
        let mut state = DenseState {
            q: qu,
            n,
            amplitudes: vec![Complex64::new(0.0, 0.0); dim],
        };
        state.amplitudes[start] = Complex64::new(1.0, 0.0);
        for g in m.rows() {
            state = project(&state, g, qu)?;
            if state.norm() < ZERO_TOLERANCE {
                break;
            }
        }
        if state.norm() >= ZERO_TOLERANCE {
            return Ok(state.normalized());
        }
    }
    Err(Error::Inconsistent("generators have no common eigenvector".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::LocalDimension;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-10
    }

    #[test]
    fn shifts_and_phases() {
        let s = DenseState::basis(2, &[0]).unwrap();
        let x = apply_pauli(&s, &PauliVector::parse("X").unwrap()).unwrap();
        assert!(close(x.amplitude(&[1]), Complex64::new(1.0, 0.0)));

        let s = DenseState::basis(3, &[1]).unwrap();
        let z = apply_pauli(&s, &PauliVector::parse("Z").unwrap()).unwrap();
        assert!(close(z.amplitude(&[1]), omega(3, 1)));

        let s = DenseState::basis(3, &[2, 1]).unwrap();
        assert_eq!(apply_pauli(&s, &PauliVector::zeros(2)).unwrap(), s);
        assert!(apply_pauli(&s, &PauliVector::zeros(3)).is_err());
    }

    #[test]
    fn two_register_codeword() {
        for q in [2i64, 3, 5] {
            let m = GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Prime(q)).unwrap();
            let psi = stabilized_state(&m, q).unwrap();
            let qu = q as usize;
            let amp = 1.0 / (q as f64).sqrt();
            for a in 0..qu {
                for b in 0..qu {
                    let expected = if (a + b) % qu == 0 { amp } else { 0.0 };
                    assert!((psi.amplitude(&[a, b]).norm() - expected).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn qubit_y_type_generator() {
        let m = GeneratorMatrix::from_paulis(&["XZ"], LocalDimension::Prime(2)).unwrap();
        let psi = stabilized_state(&m, 2).unwrap();
        assert!((psi.stabilizer_overlap(&m.rows()[0]).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn dimension_budget() {
        let m = GeneratorMatrix::from_paulis(&["Z Z Z"], LocalDimension::Prime(5)).unwrap();
        assert!(stabilized_state_budgeted(&m, 5, 100).unwrap_err().is_budget());
    }
}
