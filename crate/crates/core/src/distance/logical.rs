use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ldi::verify_ldi;
use crate::linalg::{inv_mod, is_prime, kernel_mod_p, smith_normal_form, IntMatrix, SpanModP};
use crate::symplectic::{GeneratorMatrix, PauliVector};

/// One conjugate pair of logical operators, `x ⊙ z ≡ 1 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalPair {
    pub x: PauliVector,
    pub z: PauliVector,
}

fn product_mod(u: &[i64], v: &[i64], n: usize, p: i64) -> i64 {
    let mut acc = 0i128;
    for j in 0..n {
        acc += u[j] as i128 * v[n + j] as i128 - u[n + j] as i128 * v[j] as i128;
    }
    acc.rem_euclid(p as i128) as i64
}

/// `k = n − rank` conjugate pairs spanning the normalizer modulo the
/// stabilizer group mod `p`.
///
/// Transversal `X` and `Z` are tried first as seeds when they are logical.
/// For LDI codes the representatives are lifted to integer vectors with zero
/// integer syndrome, so they stay logical for every local dimension.
pub fn logical_operators(m: &GeneratorMatrix, p: i64) -> Result<Vec<LogicalPair>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    m.check_commuting_mod(p)?;
    let n = m.n();
    let rows = m.row_vectors();
    let stabilizers = SpanModP::new(&rows, p);
    let k = n - stabilizers.dim();

    let constraints: Vec<Vec<i64>> = m
        .rows()
        .iter()
        .map(|r| r.z().iter().map(|&b| -b).chain(r.x().iter().copied()).collect())
        .collect();
    let in_normalizer = |v: &[i64]| {
        rows.iter().all(|r| product_mod(r, v, n, p) == 0)
    };

    let transversal_x: Vec<i64> = (0..2 * n).map(|j| i64::from(j < n)).collect();
    let transversal_z: Vec<i64> = (0..2 * n).map(|j| i64::from(j >= n)).collect();
    let mut pool: Vec<Vec<i64>> = [transversal_x, transversal_z]
        .into_iter()
        .filter(|v| in_normalizer(v))
        .chain(kernel_mod_p(&constraints, 2 * n, p))
        .collect();

    let mut span = stabilizers;
    let mut pairs = Vec::with_capacity(k);
    while pairs.len() < k {
        let i = pool
            .iter()
            .position(|v| !span.contains(v))
            .ok_or_else(|| Error::Inconsistent("normalizer basis exhausted".into()))?;
        let v = pool.remove(i);
        let j = pool
            .iter()
            .position(|w| product_mod(&v, w, n, p) != 0)
            .ok_or_else(|| Error::Inconsistent("logical operator without partner".into()))?;
        let w_raw = pool.remove(j);
        let scale = inv_mod(product_mod(&v, &w_raw, n, p), p);
        let w: Vec<i64> = w_raw.iter().map(|e| (e * scale).rem_euclid(p)).collect();
        span.insert(&v);
        span.insert(&w);
        for u in pool.iter_mut() {
            let (uw, uv) = (product_mod(u, &w, n, p), product_mod(u, &v, n, p));
            for t in 0..2 * n {
                u[t] = (u[t] - uw * v[t] + uv * w[t]).rem_euclid(p);
            }
        }
        pairs.push((v, w));
    }

    let lift_ok = verify_ldi(m).is_ldi;
    pairs
        .into_iter()
        .map(|(x, z)| {
            let (x, z) = if lift_ok {
                (lift(m, &constraints, &x, p)?, lift(m, &constraints, &z, p)?)
            } else {
                (x, z)
            };
            Ok(LogicalPair {
                x: PauliVector::from_entries(x)?,
                z: PauliVector::from_entries(z)?,
            })
        })
        .collect()
}

/// Integer representative of `v mod p` with zero integer syndrome.
fn lift(m: &GeneratorMatrix, constraints: &[Vec<i64>], v: &[i64], p: i64) -> Result<Vec<i64>> {
    let n = m.n();
    let mut out = vec![0i64; 2 * n];
    let mut syndrome = vec![0i128; constraints.len()];
    let order = (0..n).flat_map(|s| [s, n + s]);
    for t in order {
        let c = v[t].rem_euclid(p);
        if c == 0 {
            continue;
        }
        let cost = |value: i64| -> i128 {
            constraints
                .iter()
                .zip(&syndrome)
                .map(|(row, s)| (s + row[t] as i128 * value as i128).abs())
                .sum()
        };
        let choice = [c, c - p]
            .into_iter()
            .min_by_key(|&x| (cost(x), x.abs(), -x))
            .expect("two candidates");
        out[t] = choice;
        for (s, row) in syndrome.iter_mut().zip(constraints) {
            *s += row[t] as i128 * choice as i128;
        }
    }
    if syndrome.iter().all(|&s| s == 0) {
        return Ok(out);
    }

    // Each syndrome entry is a multiple of p; absorb it with p·t.
    let a = IntMatrix::from_i64_rows(constraints, 2 * n);
    let rhs: Vec<BigInt> = syndrome.iter().map(|&s| BigInt::from(-s / p as i128)).collect();
    let t = smith_normal_form(&a)
        .solve(&rhs)
        .ok_or_else(|| Error::Inconsistent("logical operator has no integer lift".into()))?;
    out.iter_mut().zip(&t).try_for_each(|(o, ti)| {
        *o = ti
            .to_i64()
            .and_then(|ti| ti.checked_mul(p))
            .and_then(|d| o.checked_add(d))
            .ok_or(Error::Overflow("logical lift"))?;
        Ok::<(), Error>(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{symplectic_product, syndrome_of, LocalDimension};

    #[test]
    fn two_register_pair_is_conjugate() {
        let m = GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Integers).unwrap();
        let pairs = logical_operators(&m, 3).unwrap();
        assert_eq!(pairs.len(), 0);

        let m = GeneratorMatrix::from_paulis(&["Z Z"], LocalDimension::Integers).unwrap();
        let pairs = logical_operators(&m, 5).unwrap();
        assert_eq!(pairs.len(), 1);
        let LogicalPair { x, z } = &pairs[0];
        assert_eq!(symplectic_product(x, z).unwrap().rem_euclid(5), 1);
        assert!(syndrome_of(&m, x, None).unwrap().is_zero());
        assert!(syndrome_of(&m, z, None).unwrap().is_zero());
    }

    #[test]
    fn non_ldi_code_keeps_residues() {
        let m = GeneratorMatrix::from_paulis(&["X X I", "Z Z I"], LocalDimension::Prime(2)).unwrap();
        let pairs = logical_operators(&m, 2).unwrap();
        assert_eq!(pairs.len(), 1);
        let LogicalPair { x, z } = &pairs[0];
        assert!(x.entries().iter().chain(z.entries()).all(|e| (0..2).contains(e)));
        assert_eq!(symplectic_product(x, z).unwrap().rem_euclid(2), 1);
        assert!(logical_operators(&m, 4).is_err());
    }
}
