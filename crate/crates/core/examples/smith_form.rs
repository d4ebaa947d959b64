//! Exact integer linear algebra on a generator matrix: Smith form,
//! integer kernel and lattice membership.

use num_bigint::BigInt;
use qudit_ldi::catalog;
use qudit_ldi::linalg::{integer_kernel, smith_normal_form, IntMatrix, RowLattice};

fn main() {
    let m = catalog::steane_ldi().matrix;
    let a = IntMatrix::from_i64_rows(&m.row_vectors(), 2 * m.n());
    let snf = smith_normal_form(&a);
    let diag: Vec<String> = snf.diagonal.iter().map(BigInt::to_string).collect();
    println!("invariant factors: {}", diag.join(" "));
    assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d_matrix());

    let kernel = integer_kernel(&a.transpose());
    println!("left kernel dimension: {}", kernel.len());

    let lattice = RowLattice::new(&a);
    let sum: Vec<i64> = (0..2 * m.n())
        .map(|j| m.rows()[0].entries()[j] + m.rows()[3].entries()[j])
        .collect();
    let doubled: Vec<i64> = m.rows()[0].entries().iter().map(|x| x * 2).collect();
    println!("row0 + row3 in lattice: {}", lattice.contains(&sum));
    println!("2·row0 in lattice: {}", lattice.contains(&doubled));
    println!("saturated: {}", lattice.is_saturated());
}
