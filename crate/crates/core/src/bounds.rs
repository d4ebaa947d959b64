//! Exact cutoffs `p*` above which an LDI code keeps its distance.
//!
//! Everything is evaluated in arbitrary precision. Half-integer exponents are
//! rounded up, which keeps each value an upper bound on the real cutoff.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::ldi::verify_ldi;
use crate::symplectic::GeneratorMatrix;

fn check(b: u64, d: u64) -> Result<()> {
    if b < 1 {
        return Err(Error::Domain(format!("B must be at least 1, got {b}")));
    }
    if d < 2 {
        return Err(Error::Domain(format!("d must be at least 2, got {d}")));
    }
    Ok(())
}

/// `⌈base^(exp/2)⌉`
pub fn ceil_half_power(base: u64, exp: u64) -> BigUint {
    if exp == 0 {
        return BigUint::one();
    }
    if exp.is_multiple_of(2) {
        return BigUint::from(base).pow(exp / 2);
    }
    let full: BigUint = BigUint::from(base).pow(exp);
    let root = full.sqrt();
    if &root * &root == full {
        root
    } else {
        root + 1u32
    }
}

/// `B^{2(d−1)} · (2(d−1))^{d−1}`
pub fn pstar_hadamard(b: u64, d: u64) -> Result<BigUint> {
    check(b, d)?;
    let e = d - 1;
    Ok(BigUint::from(b).pow(2 * e) * BigUint::from(2 * e).pow(e))
}

/// `(B(q−1)(d−1)(1 + (d−1)²(q−1)^{d−1}(d−2)^{(d−2)/2}))^{d−1}`
pub fn pstar_alternative(b: u64, q: u64, d: u64) -> Result<BigUint> {
    check(b, d)?;
    if q < 2 {
        return Err(Error::Domain(format!("q must be at least 2, got {q}")));
    }
    let e = d - 1;
    let inner = BigUint::one()
        + BigUint::from(e).pow(2u32) * BigUint::from(q - 1).pow(e) * ceil_half_power(d - 2, d - 2);
    let base = BigUint::from(b) * BigUint::from(q - 1) * BigUint::from(e) * inner;
    Ok(base.pow(e))
}

/// `B^{d−1} · (d−1)^{(d−1)/2}`, for CSS codes.
pub fn pstar_css(b: u64, d: u64) -> Result<BigUint> {
    check(b, d)?;
    let e = d - 1;
    Ok(BigUint::from(b).pow(e) * ceil_half_power(e, e))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub b: u64,
    pub q: u64,
    pub d: u64,
    pub p_star_hadamard: BigUint,
    pub p_star_alternative: BigUint,
    pub p_star_css: Option<BigUint>,
    /// Smallest applicable cutoff is below `2π`, i.e. at most 6.
    pub rotor_ok: bool,
}

impl BoundReport {
    pub fn from_parameters(b: u64, q: u64, d: u64, css: bool) -> Result<Self> {
        let p_star_hadamard = pstar_hadamard(b, d)?;
        let p_star_alternative = pstar_alternative(b, q, d)?;
        let p_star_css = if css { Some(pstar_css(b, d)?) } else { None };
        let rotor_ok = min_bound(&p_star_hadamard, &p_star_alternative, p_star_css.as_ref())
            <= BigUint::from(6u32);
        Ok(BoundReport {
            b,
            q,
            d,
            p_star_hadamard,
            p_star_alternative,
            p_star_css,
            rotor_ok,
        })
    }

    pub fn min_p_star(&self) -> BigUint {
        min_bound(
            &self.p_star_hadamard,
            &self.p_star_alternative,
            self.p_star_css.as_ref(),
        )
    }
}

fn min_bound(h: &BigUint, a: &BigUint, c: Option<&BigUint>) -> BigUint {
    let m = h.min(a);
    c.map_or(m, |c| m.min(c)).clone()
}

/// Bounds for an LDI code, with `B` read off the matrix.
pub fn report_for(m: &GeneratorMatrix, q: u64, d: u64) -> Result<BoundReport> {
    let report = verify_ldi(m);
    if !report.is_ldi {
        return Err(Error::NotLdi(report.violations.len()));
    }
    let b = u64::try_from(report.b.max(1)).map_err(|_| Error::Overflow("B"))?;
    BoundReport::from_parameters(b, q, d, m.is_css())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::LocalDimension;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn hadamard_values() {
        assert_eq!(pstar_hadamard(1, 3).unwrap(), big(16));
        assert_eq!(pstar_hadamard(1, 2).unwrap(), big(2));
        assert_eq!(pstar_hadamard(3, 3).unwrap(), big(1296));
        assert!(pstar_hadamard(1, 1).is_err());
        assert!(pstar_hadamard(0, 3).is_err());
    }

    #[test]
    fn alternative_values() {
        assert_eq!(pstar_alternative(1, 2, 2).unwrap(), big(2));
        // (1·1·2·(1 + 4·1·1))²
        assert_eq!(pstar_alternative(1, 2, 3).unwrap(), big(100));
        assert_eq!(pstar_alternative(2, 3, 3).unwrap(), big(18496));
        assert!(pstar_alternative(1, 1, 3).is_err());
    }

    #[test]
    fn css_values() {
        assert_eq!(pstar_css(1, 3).unwrap(), big(2));
        assert_eq!(pstar_css(1, 2).unwrap(), big(1));
        assert_eq!(pstar_css(2, 3).unwrap(), big(8));
        // 3^{3/2} ≈ 5.196
        assert_eq!(pstar_css(1, 4).unwrap(), big(6));
    }

    #[test]
    fn half_powers_round_up() {
        assert_eq!(ceil_half_power(0, 0), big(1));
        assert_eq!(ceil_half_power(1, 1), big(1));
        assert_eq!(ceil_half_power(2, 1), big(2));
        assert_eq!(ceil_half_power(4, 1), big(2));
        assert_eq!(ceil_half_power(5, 3), big(12));
    }

    #[test]
    fn rotor_checks() {
        let r = BoundReport::from_parameters(1, 2, 3, true).unwrap();
        assert!(r.rotor_ok);
        assert_eq!(r.min_p_star(), big(2));
        let r = BoundReport::from_parameters(1, 2, 2, false).unwrap();
        assert_eq!(r.p_star_hadamard, big(2));
        assert!(r.rotor_ok);
        assert!(!BoundReport::from_parameters(5, 2, 4, true).unwrap().rotor_ok);
    }

    #[test]
    fn report_requires_ldi() {
        let m = GeneratorMatrix::from_paulis(&["X X", "Z Z"], LocalDimension::Prime(2)).unwrap();
        assert!(report_for(&m, 2, 2).is_err());
        let m = GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Prime(2)).unwrap();
        let r = report_for(&m, 2, 2).unwrap();
        assert_eq!(r.b, 1);
        assert!(r.rotor_ok);
    }
}
