//! Gaussian elimination over the prime field ℤ_p on `i64` rows.

/// Inverse of `a` modulo prime `p`. Panics if `a ≡ 0`.
pub fn inv_mod(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    assert!(a != 0, "zero has no inverse mod {p}");
    let (mut r0, mut r1) = (p, a);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(p)
}

/// Reduced row echelon form mod `p`, zero rows dropped. Returns the rows and
/// their pivot columns.
pub fn rref_mod_p(rows: &[Vec<i64>], p: i64) -> (Vec<Vec<i64>>, Vec<usize>) {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|e| e.rem_euclid(p)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, found);
        let inv = inv_mod(m[r][c], p);
        for e in m[r].iter_mut() {
            *e = (*e * inv) % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (e, &pv) in row.iter_mut().zip(&pivot_row) {
                    *e = (*e - f * pv).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_mod_prime(rows: &[Vec<i64>], p: i64) -> usize {
    rref_mod_p(rows, p).1.len()
}

/// Basis of `{x : A x ≡ 0 (mod p)}` for `A` given by rows of width `cols`.
pub fn kernel_mod_p(rows: &[Vec<i64>], cols: usize, p: i64) -> Vec<Vec<i64>> {
    let (rref, pivots) = rref_mod_p(rows, p);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![0; cols];
            x[f] = 1;
            for (row, &c) in rref.iter().zip(&pivots) {
                x[c] = (-row[f]).rem_euclid(p);
            }
            x
        })
        .collect()
}

/// Row span over ℤ_p, kept in reduced echelon form for membership tests.
#[derive(Debug, Clone)]
pub struct SpanModP {
    p: i64,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl SpanModP {
    pub fn new(rows: &[Vec<i64>], p: i64) -> Self {
        let (rows, pivots) = rref_mod_p(rows, p);
        SpanModP { p, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `v` minus its projection onto the span along pivot columns.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let p = self.p;
        let mut w: Vec<i64> = v.iter().map(|e| e.rem_euclid(p)).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let f = w[c];
            if f != 0 {
                for (wj, rj) in w.iter_mut().zip(row) {
                    *wj = (*wj - f * rj).rem_euclid(p);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&e| e == 0)
    }

    /// Adds `v` if independent; returns whether the span grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        *self = SpanModP::new(&rows, self.p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!((a * inv_mod(a, p)) % p, 1);
            }
        }
        assert_eq!(inv_mod(-1, 5), 4);
    }

    #[test]
    fn rref_and_rank() {
        let rows = vec![vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1]];
        assert_eq!(rank_mod_prime(&rows, 3), 2);
        let (r, piv) = rref_mod_p(&rows, 3);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, vec![vec![1, 0, 2], vec![0, 1, 1]]);
        // 2 ≡ 0 mod 2
        assert_eq!(rank_mod_prime(&[vec![2, 2, 2]], 2), 0);
        assert_eq!(rank_mod_prime(&[], 5), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![vec![1, 2, 3, 4], vec![0, 1, 1, 2]];
        for p in [2, 3, 5, 7] {
            let k = kernel_mod_p(&rows, 4, p);
            assert_eq!(k.len(), 4 - rank_mod_prime(&rows, p));
            for x in &k {
                for r in &rows {
                    let s: i64 = r.iter().zip(x).map(|(a, b)| a * b).sum();
                    assert_eq!(s.rem_euclid(p), 0);
                }
            }
        }
    }

    #[test]
    fn span_membership() {
        let mut span = SpanModP::new(&[vec![1, 1, 0, 0], vec![0, 0, 1, 1]], 2);
        assert!(span.contains(&[1, 1, 1, 1]));
        assert!(span.contains(&[3, -1, 0, 2]));
        assert!(!span.contains(&[1, 0, 0, 0]));
        assert!(span.insert(&[1, 0, 0, 0]));
        assert!(!span.insert(&[0, 1, 0, 0]));
        assert_eq!(span.dim(), 3);
    }
}
