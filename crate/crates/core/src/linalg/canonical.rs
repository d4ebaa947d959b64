//! Gaussian elimination of a stabilizer generator matrix over ℤ_q into the
//! canonical shape `[I_r X₂ | Z₁ Z₂]`.
//!
//! Allowed moves are row additions, row swaps, row scaling by a unit,
//! register swaps, and a per-register discrete Fourier transform that
//! exchanges X and Z powers up to sign. Every move is logged so the result can
//! be replayed from the input and vectors can be mapped between frames.

use super::modp::inv_mod;
use crate::error::{Error, Result};
use crate::linalg::is_prime;
use crate::symplectic::{GeneratorMatrix, PauliVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryOp {
    /// `row[dst] += coeff · row[src]`
    AddRow { dst: usize, src: usize, coeff: i64 },
    SwapRows(usize, usize),
    ScaleRow { row: usize, factor: i64 },
    SwapRegisters(usize, usize),
    /// `(a, b) ↦ (b, −a)` on one register.
    DftSwap(usize),
    /// Keep the first `n` rows; the rest are zero.
    Truncate(usize),
}

fn apply_register_op(op: ElementaryOp, v: &mut [i64], n: usize) {
    match op {
        ElementaryOp::SwapRegisters(a, b) => {
            v.swap(a, b);
            v.swap(n + a, n + b);
        }
        ElementaryOp::DftSwap(j) => {
            let (a, b) = (v[j], v[n + j]);
            v[j] = b;
            v[n + j] = -a;
        }
        _ => {}
    }
}

fn apply_op(op: ElementaryOp, rows: &mut Vec<Vec<i64>>, n: usize, q: i64) {
    match op {
        ElementaryOp::AddRow { dst, src, coeff } => {
            let src_row = rows[src].clone();
            for (d, s) in rows[dst].iter_mut().zip(src_row) {
                *d = (*d + coeff * s).rem_euclid(q);
            }
        }
        ElementaryOp::SwapRows(a, b) => rows.swap(a, b),
        ElementaryOp::ScaleRow { row, factor } => {
            for e in rows[row].iter_mut() {
                *e = (*e * factor).rem_euclid(q);
            }
        }
        ElementaryOp::SwapRegisters(..) | ElementaryOp::DftSwap(_) => {
            for r in rows.iter_mut() {
                apply_register_op(op, r, n);
                for e in r.iter_mut() {
                    *e = e.rem_euclid(q);
                }
            }
        }
        ElementaryOp::Truncate(k) => rows.truncate(k),
    }
}

/// Result of [`canonical_form`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `[I_r X₂ | Z₁ Z₂]` with entries in `[0, q)`, in the permuted frame.
    pub matrix: GeneratorMatrix,
    /// Original-frame column of each pivot (`n + j` when the pivot came from
    /// the Z power of register `j` via a DFT swap).
    pub pivot_cols: Vec<usize>,
    pub ops_log: Vec<ElementaryOp>,
    pub q: i64,
}

impl CanonicalForm {
    pub fn rank(&self) -> usize {
        self.matrix.num_rows()
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    fn block(&self, x_side: bool, cols: std::ops::Range<usize>) -> Vec<Vec<i64>> {
        let n = self.n();
        let offset = if x_side { 0 } else { n };
        self.matrix
            .rows()
            .iter()
            .map(|r| r.entries()[offset + cols.start..offset + cols.end].to_vec())
            .collect()
    }

    /// `r × k` block to the right of the identity.
    pub fn x2(&self) -> Vec<Vec<i64>> {
        self.block(true, self.rank()..self.n())
    }

    pub fn z1(&self) -> Vec<Vec<i64>> {
        self.block(false, 0..self.rank())
    }

    pub fn z2(&self) -> Vec<Vec<i64>> {
        self.block(false, self.rank()..self.n())
    }

    /// Re-applies the logged moves to `input`, reducing mod `q`.
    pub fn replay(&self, input: &GeneratorMatrix) -> GeneratorMatrix {
        replay(&self.ops_log, input, self.q)
    }

    /// Maps a vector written in the original register frame into the
    /// canonical frame.
    pub fn to_canonical_frame(&self, v: &PauliVector) -> PauliVector {
        let n = v.n();
        let mut e = v.entries().to_vec();
        for &op in &self.ops_log {
            apply_register_op(op, &mut e, n);
        }
        PauliVector::from_entries(e).expect("even length")
    }

    /// Undoes the register swaps and DFT swaps; integer entries are kept as
    /// they are (no reduction).
    pub fn to_original_frame(&self, v: &PauliVector) -> PauliVector {
        let n = v.n();
        let mut e = v.entries().to_vec();
        for &op in self.ops_log.iter().rev() {
            match op {
                ElementaryOp::SwapRegisters(..) => apply_register_op(op, &mut e, n),
                ElementaryOp::DftSwap(j) => {
                    let (a, b) = (e[j], e[n + j]);
                    e[j] = -b;
                    e[n + j] = a;
                }
                _ => {}
            }
        }
        PauliVector::from_entries(e).expect("even length")
    }
}

pub(crate) fn replay(ops: &[ElementaryOp], input: &GeneratorMatrix, q: i64) -> GeneratorMatrix {
    let n = input.n();
    let mut rows = input.reduced(q).row_vectors();
    for &op in ops {
        apply_op(op, &mut rows, n, q);
    }
    GeneratorMatrix::from_rows(n, &rows, input.dim()).expect("shape preserved")
}

/// Row-reduces `m` over ℤ_q (q prime) into `[I_r X₂ | Z₁ Z₂]`.
///
/// Pivot choice: the smallest X column among the unprocessed registers that
/// has a nonzero entry in an unprocessed row, the lowest such row first. When
/// no X column qualifies the smallest qualifying Z column is DFT-swapped in.
pub fn canonical_form(m: &GeneratorMatrix, q: i64) -> Result<CanonicalForm> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    m.check_commuting_mod(q)?;

    let n = m.n();
    let mut rows = m.reduced(q).row_vectors();
    let mut ops = Vec::new();
    let mut pivot_cols = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut swapped = vec![false; n];

    let push = |op: ElementaryOp, rows: &mut Vec<Vec<i64>>, ops: &mut Vec<ElementaryOp>| {
        apply_op(op, rows, n, q);
        ops.push(op);
    };

    let find_in = |rows: &[Vec<i64>], start: usize, offset: usize| {
        (start..n).find_map(|reg| {
            (start..rows.len())
                .find(|&r| rows[r][offset + reg] != 0)
                .map(|r| (reg, r))
        })
    };

    let mut i = 0;
    while i < rows.len() && i < n {
        let (reg, row) = match find_in(&rows, i, 0) {
            Some(hit) => hit,
            None => match find_in(&rows, i, n) {
                Some((reg, row)) => {
                    push(ElementaryOp::DftSwap(reg), &mut rows, &mut ops);
                    swapped[reg] = !swapped[reg];
                    (reg, row)
                }
                None => break,
            },
        };
        pivot_cols.push(if swapped[reg] { n + perm[reg] } else { perm[reg] });
        if row != i {
            push(ElementaryOp::SwapRows(i, row), &mut rows, &mut ops);
        }
        if reg != i {
            push(ElementaryOp::SwapRegisters(i, reg), &mut rows, &mut ops);
            perm.swap(i, reg);
            swapped.swap(i, reg);
        }
        let pivot = rows[i][i];
        if pivot != 1 {
            let factor = inv_mod(pivot, q);
            push(ElementaryOp::ScaleRow { row: i, factor }, &mut rows, &mut ops);
        }
        for r in 0..rows.len() {
            if r != i && rows[r][i] != 0 {
                let coeff = (q - rows[r][i]) % q;
                push(
                    ElementaryOp::AddRow { dst: r, src: i, coeff },
                    &mut rows,
                    &mut ops,
                );
            }
        }
        i += 1;
    }

    if rows[i..].iter().any(|r| r.iter().any(|&e| e != 0)) {
        // Cannot happen for commuting rows; see the commutation argument on
        // the pivot registers.
        return Err(Error::Inconsistent(
            "residual rows after elimination".into(),
        ));
    }
    if i < rows.len() {
        push(ElementaryOp::Truncate(i), &mut rows, &mut ops);
    }

    Ok(CanonicalForm {
        matrix: GeneratorMatrix::from_rows(n, &rows, m.dim())?,
        pivot_cols,
        ops_log: ops,
        q,
    })
}
