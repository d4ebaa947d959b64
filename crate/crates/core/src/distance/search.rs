use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{binomial, check_budget, combinations, DistanceResult, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::ldi::verify_ldi;
use crate::linalg::{integer_kernel, is_prime, rank_mod, IntMatrix, RowLattice, SpanModP};
use crate::symplectic::{GeneratorMatrix, PauliVector};

enum GroupSpan {
    Field(SpanModP),
    Ring(RowLattice, i64),
}

impl GroupSpan {
    fn new(m: &GeneratorMatrix, p: i64) -> Self {
        if is_prime(p) {
            GroupSpan::Field(SpanModP::new(&m.row_vectors(), p))
        } else {
            GroupSpan::Ring(RowLattice::from_i64_rows(&m.row_vectors(), 2 * m.n()), p)
        }
    }

    fn rank(&self, m: &GeneratorMatrix) -> Result<usize> {
        match self {
            GroupSpan::Field(span) => Ok(span.dim()),
            GroupSpan::Ring(_, p) => rank_mod(&IntMatrix::from_i64_rows(&m.row_vectors(), 2 * m.n()), *p),
        }
    }

    fn contains(&self, v: &[i64]) -> bool {
        match self {
            GroupSpan::Field(span) => span.contains(v),
            GroupSpan::Ring(lattice, p) => lattice.contains_mod(v, *p),
        }
    }
}

/// Calls `visit` on every assignment of `choices[0]` to the first slot and
/// `choices[1]` to the rest, odometer order (first slot slowest). Stops at
/// the first `Some`.
fn odometer<T>(
    slots: usize,
    first: &[(i64, i64)],
    rest: &[(i64, i64)],
    mut visit: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if slots == 0 {
        return None;
    }
    let mut digits = vec![0usize; slots];
    let limit = |i: usize| if i == 0 { first.len() } else { rest.len() };
    loop {
        if let Some(hit) = visit(&digits) {
            return Some(hit);
        }
        let mut i = slots;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < limit(i) {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn weight_range(n: usize, w_max: usize) -> Result<std::ops::RangeInclusive<usize>> {
    if w_max == 0 {
        return Err(Error::Domain("w_max must be at least 1".into()));
    }
    Ok(1..=w_max.min(n))
}

/// Least weight of an error undetectable mod `p` and outside the mod-`p`
/// stabilizer group, by exhaustive enumeration up to `w_max`.
pub fn distance_mod(m: &GeneratorMatrix, p: i64, w_max: usize) -> Result<DistanceResult> {
    distance_mod_budgeted(m, p, w_max, DEFAULT_BUDGET)
}

pub fn distance_mod_budgeted(
    m: &GeneratorMatrix,
    p: i64,
    w_max: usize,
    budget: u128,
) -> Result<DistanceResult> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    let weights = weight_range(m.n(), w_max)?;
    m.check_commuting_mod(p)?;
    let n = m.n();

    let values: Vec<(i64, i64)> = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    // Over a field, undetectability and group membership are invariant under
    // scaling, so the first site can be normalised to a leading 1.
    let leading: Vec<(i64, i64)> = if is_prime(p) {
        std::iter::once((0, 1))
            .chain((0..p).map(|b| (1, b)))
            .collect()
    } else {
        values.clone()
    };

    let required: u128 = weights
        .clone()
        .map(|w| {
            binomial(n, w)
                .saturating_mul(leading.len() as u128)
                .saturating_mul((values.len() as u128).saturating_pow(w as u32 - 1))
        })
        .fold(0u128, u128::saturating_add);
    check_budget(required, budget)?;

    let rows = m.rows();
    let contribution = |site: usize, (a, b): (i64, i64)| -> Vec<i64> {
        rows.iter()
            .map(|r| (r.x()[site] * b - r.z()[site] * a).rem_euclid(p))
            .collect()
    };
    // table[site][a * p + b]
    let table: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|s| {
            (0..p)
                .flat_map(|a| (0..p).map(move |b| (a, b)))
                .map(|v| contribution(s, v))
                .collect()
        })
        .collect();
    let span = GroupSpan::new(m, p);
    // With no logical qudits the distance counts every nonzero undetectable
    // vector, stabilizers included.
    let stabilizer_state = span.rank(m)? == n;
    let r = rows.len();

    for w in weights.clone() {
        let supports = combinations(n, w);
        let hit = supports.par_iter().find_map_first(|support| {
            let mut acc = vec![0i64; r];
            odometer(w, &leading, &values, |digits| {
                acc.iter_mut().for_each(|a| *a = 0);
                for (slot, (&site, &d)) in support.iter().zip(digits).enumerate() {
                    let (a, b) = if slot == 0 { leading[d] } else { values[d] };
                    for (x, c) in acc.iter_mut().zip(&table[site][(a * p + b) as usize]) {
                        *x += c;
                    }
                }
                if acc.iter().any(|x| x % p != 0) {
                    return None;
                }
                let mut e = PauliVector::zeros(n);
                for (slot, (&site, &d)) in support.iter().zip(digits).enumerate() {
                    e.set_site(site, if slot == 0 { leading[d] } else { values[d] });
                }
                (stabilizer_state || !span.contains(e.entries())).then_some(e)
            })
        });
        if let Some(witness) = hit {
            return Ok(DistanceResult {
                d: Some(w),
                searched_weight: w,
                witness: Some(witness),
            });
        }
    }
    Ok(DistanceResult {
        d: None,
        searched_weight: *weights.end(),
        witness: None,
    })
}

const MAX_KERNEL_RADIUS: i64 = 8;

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow("kernel vector"))
}

/// Searches the support for a zero-integer-syndrome vector that is nonzero on
/// every listed register and lies outside the stabilizer lattice.
fn unavoidable_on_support(
    m: &GeneratorMatrix,
    lattice: &RowLattice,
    support: &[usize],
    stabilizer_state: bool,
) -> Result<Option<PauliVector>> {
    let outside = |v: &PauliVector| stabilizer_state || !lattice.contains(v.entries());
    let (n, w) = (m.n(), support.len());
    // Column 2t multiplies the X power on support[t], column 2t+1 the Z power.
    let mut a = IntMatrix::zeros(m.num_rows(), 2 * w);
    for (i, row) in m.rows().iter().enumerate() {
        for (t, &s) in support.iter().enumerate() {
            a[(i, 2 * t)] = BigInt::from(-row.z()[s]);
            a[(i, 2 * t + 1)] = BigInt::from(row.x()[s]);
        }
    }
    let kernel = integer_kernel(&a);
    if kernel.is_empty() {
        return Ok(None);
    }
    let covered = |t: usize| {
        kernel
            .iter()
            .any(|k| k[2 * t] != BigInt::from(0) || k[2 * t + 1] != BigInt::from(0))
    };
    if !(0..w).all(covered) {
        return Ok(None);
    }

    let basis = kernel
        .iter()
        .map(|k| {
            let mut e = PauliVector::zeros(n);
            for (t, &s) in support.iter().enumerate() {
                e.set_site(s, (to_i64(&k[2 * t])?, to_i64(&k[2 * t + 1])?));
            }
            Ok(e)
        })
        .collect::<Result<Vec<_>>>()?;
    if !basis.iter().any(outside) {
        return Ok(None);
    }

    // A good vector exists: neither the stabilizer sublattice nor any of the
    // site-vanishing sublattices is all of the kernel, and a lattice is never
    // a finite union of such proper pieces. Search outward by radius.
    let dim = basis.len();
    for radius in 1..=MAX_KERNEL_RADIUS {
        let span: Vec<(i64, i64)> = (-radius..=radius).map(|c| (c, 0)).collect();
        let found = odometer(dim, &span, &span, |digits| {
            let coeffs: Vec<i64> = digits.iter().map(|&d| span[d].0).collect();
            if coeffs.iter().all(|c| c.abs() < radius) {
                return None;
            }
            let mut v = PauliVector::zeros(n);
            for (c, b) in coeffs.iter().zip(&basis) {
                if *c != 0 {
                    v = &v + &b.scaled(*c);
                }
            }
            (v.weight() == w && outside(&v)).then_some(v)
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Err(Error::Inconsistent(format!(
        "no unavoidable witness on support {support:?} within radius {MAX_KERNEL_RADIUS}"
    )))
}

/// Least weight of an unavoidable error: zero syndrome over ℤ and outside the
/// integer stabilizer lattice. Searches support sets by integer kernels.
pub fn d_star(m: &GeneratorMatrix, w_max: usize) -> Result<DistanceResult> {
    d_star_budgeted(m, w_max, DEFAULT_BUDGET)
}

pub fn d_star_budgeted(m: &GeneratorMatrix, w_max: usize, budget: u128) -> Result<DistanceResult> {
    let report = verify_ldi(m);
    if !report.is_ldi {
        return Err(Error::NotLdi(report.violations.len()));
    }
    let weights = weight_range(m.n(), w_max)?;
    let n = m.n();
    let required = weights
        .clone()
        .map(|w| binomial(n, w))
        .fold(0u128, u128::saturating_add);
    check_budget(required, budget)?;

    let lattice = RowLattice::from_i64_rows(&m.row_vectors(), 2 * n);
    let stabilizer_state = lattice.rank() == n;
    for w in weights.clone() {
        let supports = combinations(n, w);
        let hit = supports
            .par_iter()
            .find_map_first(|s| unavoidable_on_support(m, &lattice, s, stabilizer_state).transpose());
        if let Some(witness) = hit.transpose()? {
            return Ok(DistanceResult {
                d: Some(w),
                searched_weight: w,
                witness: Some(witness),
            });
        }
    }
    Ok(DistanceResult {
        d: None,
        searched_weight: *weights.end(),
        witness: None,
    })
}

/// `√(‖a‖² + ‖b‖²)`
pub fn phase_space_norm(v: &PauliVector) -> f64 {
    (v.norm_squared() as f64).sqrt()
}

/// Shortest logical operator of the integer code found inside the search box.
/// This certifies the minimum only within the box.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpaceDistance {
    pub value: Option<f64>,
    pub norm_squared: Option<i128>,
    pub witness: Option<PauliVector>,
    pub coeff_bound: i64,
    pub w_max: usize,
}

pub fn phase_space_distance(
    m: &GeneratorMatrix,
    coeff_bound: i64,
    w_max: usize,
) -> Result<PhaseSpaceDistance> {
    phase_space_distance_budgeted(m, coeff_bound, w_max, DEFAULT_BUDGET)
}

pub fn phase_space_distance_budgeted(
    m: &GeneratorMatrix,
    coeff_bound: i64,
    w_max: usize,
    budget: u128,
) -> Result<PhaseSpaceDistance> {
    let report = verify_ldi(m);
    if !report.is_ldi {
        return Err(Error::NotLdi(report.violations.len()));
    }
    if coeff_bound < 1 {
        return Err(Error::Domain("coefficient bound must be at least 1".into()));
    }
    let weights = weight_range(m.n(), w_max)?;
    let n = m.n();
    let values: Vec<(i64, i64)> = (-coeff_bound..=coeff_bound)
        .flat_map(|a| (-coeff_bound..=coeff_bound).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let required = weights
        .clone()
        .map(|w| binomial(n, w).saturating_mul((values.len() as u128).saturating_pow(w as u32)))
        .fold(0u128, u128::saturating_add);
    check_budget(required, budget)?;

    let rows = m.rows();
    let r = rows.len();
    let lattice = RowLattice::from_i64_rows(&m.row_vectors(), 2 * n);
    let stabilizer_state = lattice.rank() == n;
    let mut best: Option<(i128, PauliVector)> = None;

    for w in weights.clone() {
        // Weight-w vectors have squared norm at least w; ties go to lower weight.
        if best.as_ref().is_some_and(|(nsq, _)| *nsq <= w as i128) {
            break;
        }
        let supports = combinations(n, w);
        let level = supports
            .par_iter()
            .filter_map(|support| {
                let mut local: Option<(i128, PauliVector)> = None;
                let mut acc = vec![0i64; r];
                odometer::<()>(w, &values, &values, |digits| {
                    acc.iter_mut().for_each(|a| *a = 0);
                    let mut nsq: i128 = 0;
                    for (&site, &d) in support.iter().zip(digits) {
                        let (a, b) = values[d];
                        nsq += (a * a + b * b) as i128;
                        for (x, row) in acc.iter_mut().zip(rows) {
                            *x += row.x()[site] * b - row.z()[site] * a;
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        return None;
                    }
                    if local.as_ref().is_some_and(|(best, _)| *best < nsq) {
                        return None;
                    }
                    let mut e = PauliVector::zeros(n);
                    for (&site, &d) in support.iter().zip(digits) {
                        e.set_site(site, values[d]);
                    }
                    if !stabilizer_state && lattice.contains(e.entries()) {
                        return None;
                    }
                    let better = match &local {
                        None => true,
                        Some((b, v)) => (nsq, &e) < (*b, v),
                    };
                    if better {
                        local = Some((nsq, e));
                    }
                    None
                });
                local
            })
            .min_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        if let Some(candidate) = level {
            if best.as_ref().is_none_or(|b| candidate.0 < b.0) {
                best = Some(candidate);
            }
        }
    }

    Ok(PhaseSpaceDistance {
        value: best.as_ref().map(|(nsq, _)| (*nsq as f64).sqrt()),
        norm_squared: best.as_ref().map(|(nsq, _)| *nsq),
        witness: best.map(|(_, v)| v),
        coeff_bound,
        w_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{syndrome_of, LocalDimension};

    fn two_register() -> GeneratorMatrix {
        GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Integers).unwrap()
    }

    #[test]
    fn odometer_visits_everything_once() {
        let first = [(0, 1), (1, 0)];
        let rest = [(1, 1), (2, 2), (3, 3)];
        let mut seen = Vec::new();
        odometer::<()>(3, &first, &rest, |d| {
            seen.push(d.to_vec());
            None
        });
        assert_eq!(seen.len(), 2 * 3 * 3);
        assert_eq!(seen[0], vec![0, 0, 0]);
        assert_eq!(seen[1], vec![0, 0, 1]);
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), seen.len());
    }

    #[test]
    fn two_register_distance_mod_5() {
        let res = distance_mod(&two_register(), 5, 2).unwrap();
        assert_eq!(res.d, Some(2));
        let w = res.witness.unwrap();
        assert_eq!(w.weight(), 2);
        assert!(syndrome_of(&two_register(), &w, Some(5)).unwrap().is_zero());
    }

    #[test]
    fn two_register_d_star() {
        let res = d_star(&two_register(), 2).unwrap();
        assert_eq!(res.d, Some(2));
        let w = res.witness.unwrap();
        assert!(syndrome_of(&two_register(), &w, None).unwrap().is_zero());
    }

    #[test]
    fn stabilizer_state_counts_group_elements() {
        let m = GeneratorMatrix::from_paulis(&["X"], LocalDimension::Integers).unwrap();
        assert_eq!(d_star(&m, 1).unwrap().d, Some(1));
        assert_eq!(distance_mod(&m, 3, 1).unwrap().d, Some(1));
    }

    #[test]
    fn no_logicals_below_w_max() {
        let m = GeneratorMatrix::from_paulis(&["X X X X", "Z Z Z Z"], LocalDimension::Prime(2)).unwrap();
        let res = distance_mod(&m, 2, 1).unwrap();
        assert_eq!(res.d, None);
        assert_eq!(res.searched_weight, 1);
        assert_eq!(distance_mod(&m, 2, 2).unwrap().d, Some(2));
    }

    #[test]
    fn budget_is_enforced() {
        let err = distance_mod_budgeted(&two_register(), 5, 2, 10).unwrap_err();
        assert!(err.is_budget());
        let err = d_star_budgeted(&two_register(), 2, 2).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn non_ldi_rejected() {
        let m = GeneratorMatrix::from_paulis(&["X X", "Z Z"], LocalDimension::Prime(2)).unwrap();
        assert_eq!(d_star(&m, 2), Err(Error::NotLdi(1)));
        assert!(phase_space_distance(&m, 1, 2).is_err());
    }

    #[test]
    fn phase_space_distance_of_stabilizer_state() {
        let res = phase_space_distance(&two_register(), 1, 2).unwrap();
        assert_eq!(res.norm_squared, Some(2));
    }

    #[test]
    fn norm_of_lone_logical() {
        let v = PauliVector::from_parts(&[1, 2, 3], &[0, 0, 0]).unwrap();
        assert!((phase_space_norm(&v) - 14f64.sqrt()).abs() < 1e-12);
    }
}
