//! Smith normal form over ℤ and the lattice computations built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal with
/// `D[i] | D[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// The `min(rows, cols)` diagonal entries, non-negative.
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Number of nonzero diagonal entries (rank over ℚ).
    pub rank: usize,
}

impl SmithDecomposition {
    /// `D` as a full `rows × cols` matrix.
    pub fn d_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.u.num_rows(), self.v.num_rows(), &self.diagonal)
    }

    /// Some integer solution of `A t = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let ub = self.u.mul_vec(b);
        let cols = self.v.num_rows();
        let mut z = vec![BigInt::zero(); cols];
        for (i, c) in ub.iter().enumerate() {
            if i < self.rank {
                let (q, r) = c.div_rem(&self.diagonal[i]);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&z))
    }
}

fn min_abs_in(a: &IntMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let e = &a[(i, j)];
        if e.is_zero() {
            continue;
        }
        let abs = e.abs();
        if best.as_ref().is_none_or(|(_, b)| abs < *b) {
            best = Some(((i, j), abs));
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form by repeated division with the smallest remaining pivot.
/// Plain big-integer arithmetic; the output depends only on the input.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.num_rows(), a.num_cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut t = 0;

    while t < rows.min(cols) {
        let cells = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = min_abs_in(&d, cells) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Bring the smallest entry of row t / column t to the pivot.
            let line = (t..rows)
                .map(|i| (i, t))
                .chain((t + 1..cols).map(|j| (t, j)));
            let (pi, pj) = min_abs_in(&d, line).expect("pivot line is nonzero");
            if pi != t {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            } else if pj != t {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let pivot = d[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let diagonal: Vec<BigInt> = (0..rows.min(cols)).map(|i| d[(i, i)].clone()).collect();
    let rank = diagonal.iter().filter(|x| !x.is_zero()).count();
    SmithDecomposition {
        diagonal,
        u,
        v,
        rank,
    }
}

/// Number of invariant factors that do not vanish mod `m`.
pub fn rank_mod(a: &IntMatrix, m: i64) -> Result<usize> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    let snf = smith_normal_form(a);
    let m = BigInt::from(m);
    Ok(snf
        .diagonal
        .iter()
        .filter(|d| !d.is_multiple_of(&m))
        .count())
}

/// Row-style Hermite reduction of a lattice basis: echelon shape, positive
/// pivots, entries above each pivot reduced into `[0, pivot)`.
fn hermite_reduce(mut basis: IntMatrix) -> IntMatrix {
    let (rows, cols) = (basis.num_rows(), basis.num_cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        while let Some((i, _)) = min_abs_in(&basis, (r..rows).map(|i| (i, c))) {
            basis.swap_rows(r, i);
            let pivot = basis[(r, c)].clone();
            let mut done = true;
            for i in r + 1..rows {
                if !basis[(i, c)].is_zero() {
                    let q = -basis[(i, c)].div_floor(&pivot);
                    basis.add_row_multiple(i, r, &q);
                    done &= basis[(i, c)].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if basis[(r, c)].is_zero() {
            continue;
        }
        if basis[(r, c)].is_negative() {
            basis.negate_row(r);
        }
        let pivot = basis[(r, c)].clone();
        for i in 0..r {
            let q = -basis[(i, c)].div_floor(&pivot);
            basis.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    basis
}

/// Lattice basis of `{x ∈ ℤ^cols : A x = 0}`, Hermite-reduced. Empty iff `A`
/// has full column rank.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let cols = a.num_cols();
    let basis: Vec<Vec<BigInt>> = (snf.rank..cols).map(|j| snf.v.column(j)).collect();
    if basis.is_empty() {
        return basis;
    }
    hermite_reduce(IntMatrix::from_rows(basis, cols)).to_rows()
}

/// The row lattice `{x · M : x ∈ ℤ^r}` of a matrix, with membership tests over
/// ℤ, ℚ and ℤ_m.
#[derive(Debug, Clone)]
pub struct RowLattice {
    snf: SmithDecomposition,
}

impl RowLattice {
    pub fn new(m: &IntMatrix) -> Self {
        // x M = v  ⇔  (x U⁻¹) D = v V
        RowLattice {
            snf: smith_normal_form(m),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        RowLattice::new(&IntMatrix::from_i64_rows(rows, cols))
    }

    pub fn rank(&self) -> usize {
        self.snf.rank
    }

    fn transformed(&self, v: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = v.iter().map(|&e| BigInt::from(e)).collect();
        self.snf.v.left_mul_vec(&v)
    }

    /// Membership in the integer row lattice.
    pub fn contains(&self, v: &[i64]) -> bool {
        let w = self.transformed(v);
        w.iter().enumerate().all(|(j, wj)| {
            if j < self.snf.rank {
                wj.is_multiple_of(&self.snf.diagonal[j])
            } else {
                wj.is_zero()
            }
        })
    }

    /// Membership in the rational span of the rows.
    pub fn in_rational_span(&self, v: &[i64]) -> bool {
        self.transformed(v)
            .iter()
            .skip(self.snf.rank)
            .all(Zero::is_zero)
    }

    /// Membership in the row span over ℤ_m.
    pub fn contains_mod(&self, v: &[i64], m: i64) -> bool {
        let m = BigInt::from(m);
        let w = self.transformed(v);
        w.iter().enumerate().all(|(j, wj)| {
            let g = if j < self.snf.diagonal.len() {
                self.snf.diagonal[j].gcd(&m)
            } else {
                m.clone()
            };
            wj.is_multiple_of(&g)
        })
    }

    /// Whether the lattice equals its rational span intersected with ℤ^cols.
    pub fn is_saturated(&self) -> bool {
        self.snf.diagonal[..self.snf.rank]
            .iter()
            .all(|d| d.to_i64() == Some(1))
    }
}
