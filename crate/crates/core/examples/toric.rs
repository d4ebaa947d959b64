//! Signed toric codes: integer-commuting at every size, distance L.

use qudit_ldi::catalog;
use qudit_ldi::distance::distance_mod;
use qudit_ldi::ldi::verify_ldi;
use qudit_ldi::linalg::{rank_mod, IntMatrix, RowLattice};

fn main() -> qudit_ldi::Result<()> {
    for size in 2..=3 {
        let entry = catalog::toric_code(size)?;
        let m = &entry.matrix;
        let a = IntMatrix::from_i64_rows(&m.row_vectors(), 2 * m.n());
        let report = verify_ldi(m);
        println!(
            "L={size} n={} rows={} is_ldi={} rank_Z={} rank_2={} rank_3={}",
            m.n(),
            m.num_rows(),
            report.is_ldi,
            RowLattice::new(&a).rank(),
            rank_mod(&a, 2)?,
            rank_mod(&a, 3)?
        );
        for p in [2, 3, 5] {
            println!("  p={p} d={:?}", distance_mod(m, p, size)?.d);
        }
    }
    Ok(())
}
