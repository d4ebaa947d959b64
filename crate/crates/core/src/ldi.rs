//! Local-dimension-invariant (LDI) forms: generator sets whose pairwise
//! symplectic products vanish over ℤ, so they commute for every local
//! dimension.

use crate::error::{Error, Result};
use crate::linalg::{canonical_form, is_prime, rref_mod_p, CanonicalForm};
use crate::symplectic::{symplectic_product, GeneratorMatrix, PauliVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LdiVariant {
    /// `[I X₂ | Z₁+L Z₂]` with `L` the strictly lower triangular matrix of
    /// pairwise products.
    LowerTriangular,
    /// Keeps every generator pure-X or pure-Z.
    Css,
}

impl std::str::FromStr for LdiVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower_triangular" | "lower-triangular" | "lt" => Ok(LdiVariant::LowerTriangular),
            "css" => Ok(LdiVariant::Css),
            other => Err(Error::Domain(format!("unknown LDI variant `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdiReport {
    pub matrix: GeneratorMatrix,
    pub is_ldi: bool,
    /// `(i, j, row_i ⊙ row_j)` for every `i < j` with a nonzero product.
    pub violations: Vec<(usize, usize, i128)>,
    /// Largest absolute entry.
    pub b: i64,
}

pub fn verify_ldi(m: &GeneratorMatrix) -> LdiReport {
    let rows = m.rows();
    let mut violations = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let product = symplectic_product(&rows[i], &rows[j]).expect("rows share n");
            if product != 0 {
                violations.push((i, j, product));
            }
        }
    }
    LdiReport {
        matrix: m.clone(),
        is_ldi: violations.is_empty(),
        violations,
        b: m.max_abs_entry(),
    }
}

/// The lower-triangular construction, kept in the canonical frame.
#[derive(Debug, Clone)]
pub struct LdiConstruction {
    pub canonical: CanonicalForm,
    /// `r × r`, strictly lower triangular.
    pub l: Vec<Vec<i64>>,
    /// `[I X₂ | Z₁+L Z₂]`, canonical frame.
    pub framed: GeneratorMatrix,
}

impl LdiConstruction {
    /// The LDI generators on the original registers (register swaps and DFT
    /// swaps undone, which preserves every symplectic product).
    pub fn original_frame(&self) -> GeneratorMatrix {
        let rows = self
            .framed
            .rows()
            .iter()
            .map(|r| self.canonical.to_original_frame(r))
            .collect();
        GeneratorMatrix::new(self.framed.n(), rows, self.framed.dim()).expect("same n")
    }
}

pub fn lower_triangular_construction(m: &GeneratorMatrix, q: i64) -> Result<LdiConstruction> {
    let canonical = canonical_form(m, q)?;
    let rows = canonical.matrix.rows();
    let (n, r) = (canonical.n(), canonical.rank());
    let mut l = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..i {
            let product = symplectic_product(&rows[i], &rows[j])?;
            l[i][j] = i64::try_from(product).map_err(|_| Error::Overflow("L matrix"))?;
        }
    }
    let framed_rows = rows
        .iter()
        .zip(&l)
        .map(|(row, l_row)| {
            let mut e = row.entries().to_vec();
            for (k, &lk) in l_row.iter().enumerate() {
                e[n + k] += lk;
            }
            PauliVector::from_entries(e)
        })
        .collect::<Result<Vec<_>>>()?;
    let framed = GeneratorMatrix::new(n, framed_rows, m.dim())?;
    Ok(LdiConstruction {
        canonical,
        l,
        framed,
    })
}

fn css_construction(m: &GeneratorMatrix, q: i64) -> Result<GeneratorMatrix> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if let Some(i) = m
        .rows()
        .iter()
        .position(|r| !(r.is_x_type() || r.is_z_type()))
    {
        return Err(Error::NotCss(i));
    }
    m.check_commuting_mod(q)?;

    let n = m.n();
    let x_parts: Vec<Vec<i64>> = m
        .rows()
        .iter()
        .filter(|r| !r.is_zero() && r.is_x_type())
        .map(|r| r.x().to_vec())
        .collect();
    let z_parts: Vec<Vec<i64>> = m
        .rows()
        .iter()
        .filter(|r| !r.is_zero() && r.is_z_type())
        .map(|r| r.z().to_vec())
        .collect();
    let (x_rows, x_pivots) = rref_mod_p(&x_parts, q);
    let (mut z_rows, _) = rref_mod_p(&z_parts, q);

    // X pivot columns are zero in every other X row, so fixing the product
    // with X row i at its pivot leaves the other products alone.
    for z in z_rows.iter_mut() {
        for (x, &c) in x_rows.iter().zip(&x_pivots) {
            let product: i64 = x.iter().zip(z.iter()).map(|(a, b)| a * b).sum();
            z[c] -= product;
        }
    }

    let zeros = vec![0; n];
    let rows = x_rows
        .iter()
        .map(|x| PauliVector::from_parts(x, &zeros))
        .chain(z_rows.iter().map(|z| PauliVector::from_parts(&zeros, z)))
        .collect::<Result<Vec<_>>>()?;
    GeneratorMatrix::new(n, rows, m.dim())
}

/// An LDI generator set that reduces mod `q` to the same code as `m`.
/// Dependent rows are dropped, so the output has `rank_q(m)` rows.
pub fn make_ldi(m: &GeneratorMatrix, q: i64, variant: LdiVariant) -> Result<GeneratorMatrix> {
    match variant {
        LdiVariant::LowerTriangular => Ok(lower_triangular_construction(m, q)?.original_frame()),
        LdiVariant::Css => css_construction(m, q),
    }
}

/// Entry bound `(2 + k(q−1))(q−1)` of the lower-triangular construction.
pub fn b_entry_bound(q: i64, k: i64) -> Result<i64> {
    if q < 2 || k < 0 {
        return Err(Error::Domain(format!("need q ≥ 2 and k ≥ 0, got q={q}, k={k}")));
    }
    Ok((2 + k * (q - 1)) * (q - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SpanModP;
    use crate::symplectic::LocalDimension;

    fn same_code_mod(a: &GeneratorMatrix, b: &GeneratorMatrix, q: i64) -> bool {
        let sa = SpanModP::new(&a.row_vectors(), q);
        let sb = SpanModP::new(&b.row_vectors(), q);
        sa.dim() == sb.dim() && b.row_vectors().iter().all(|v| sa.contains(v))
    }

    #[test]
    fn two_register_example() {
        let m = GeneratorMatrix::from_paulis(&["X X", "Z Z"], LocalDimension::Prime(2)).unwrap();
        let report = verify_ldi(&m);
        assert!(!report.is_ldi);
        assert_eq!(report.violations, vec![(0, 1, 2)]);

        let ldi = make_ldi(&m, 2, LdiVariant::LowerTriangular).unwrap();
        assert!(verify_ldi(&ldi).is_ldi);
        assert!(same_code_mod(&m, &ldi, 2));
        let expected =
            GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Prime(2)).unwrap();
        assert_eq!(ldi, expected);
    }

    #[test]
    fn already_ldi_input_has_zero_l() {
        let m = GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Prime(3)).unwrap();
        let c = lower_triangular_construction(&m, 3).unwrap();
        assert!(c.l.iter().flatten().all(|&e| e == 0));
        let out = c.original_frame();
        assert!(verify_ldi(&out).is_ldi);
        assert!(same_code_mod(&m, &out, 3));
    }

    #[test]
    fn framed_shape_is_canonical_plus_l() {
        let m = GeneratorMatrix::from_paulis(
            &["X Z Z X I", "I X Z Z X", "X I X Z Z", "Z X I X Z"],
            LocalDimension::Prime(2),
        )
        .unwrap();
        let c = lower_triangular_construction(&m, 2).unwrap();
        let (n, r) = (c.canonical.n(), c.canonical.rank());
        assert_eq!(r, 4);
        for (i, (row, canon)) in c.framed.rows().iter().zip(c.canonical.matrix.rows()).enumerate() {
            for j in 0..n {
                assert_eq!(row.x()[j], canon.x()[j]);
                let lij = if j < r { c.l[i][j] } else { 0 };
                assert_eq!(row.z()[j], canon.z()[j] + lij);
            }
            for j in i..r {
                assert_eq!(c.l[i][j], 0);
            }
        }
        assert!(verify_ldi(&c.framed).is_ldi);
        let out = c.original_frame();
        assert!(verify_ldi(&out).is_ldi);
        assert!(same_code_mod(&m, &out, 2));
    }

    #[test]
    fn css_variant_on_steane() {
        let m = GeneratorMatrix::from_paulis(
            &[
                "X X X X I I I",
                "I X X I X X I",
                "I I X X I X X",
                "Z Z Z Z I I I",
                "I Z Z I Z Z I",
                "I I Z Z I Z Z",
            ],
            LocalDimension::Prime(2),
        )
        .unwrap();
        let out = make_ldi(&m, 2, LdiVariant::Css).unwrap();
        assert!(out.is_css());
        assert!(verify_ldi(&out).is_ldi);
        assert!(same_code_mod(&m, &out, 2));
        assert_eq!(out.num_rows(), 6);
    }

    #[test]
    fn css_variant_rejects_mixed_rows() {
        let m = GeneratorMatrix::from_paulis(&["XZ XZ"], LocalDimension::Prime(2)).unwrap();
        assert_eq!(make_ldi(&m, 2, LdiVariant::Css), Err(Error::NotCss(0)));
    }

    #[test]
    fn single_row_is_ldi() {
        let m = GeneratorMatrix::from_paulis(&["XZ^2 X"], LocalDimension::Prime(3)).unwrap();
        assert!(verify_ldi(&m).is_ldi);
    }

    #[test]
    fn entry_bound() {
        assert_eq!(b_entry_bound(2, 1).unwrap(), 3);
        assert_eq!(b_entry_bound(2, 0).unwrap(), 2);
        assert_eq!(b_entry_bound(3, 1).unwrap(), 8);
        assert!(b_entry_bound(1, 0).is_err());
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("css".parse::<LdiVariant>().unwrap(), LdiVariant::Css);
        assert_eq!(
            "lower_triangular".parse::<LdiVariant>().unwrap(),
            LdiVariant::LowerTriangular
        );
        assert!("nope".parse::<LdiVariant>().is_err());
    }
}
