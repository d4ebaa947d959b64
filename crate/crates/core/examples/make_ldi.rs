//! Lifting qubit codes to integer-commuting forms, both constructions.

use qudit_ldi::catalog;
use qudit_ldi::codefile::render_code_file;
use qudit_ldi::ldi::{make_ldi, verify_ldi, LdiVariant};
use qudit_ldi::linalg::canonical_form;

fn main() -> qudit_ldi::Result<()> {
    let steane = catalog::steane_standard().matrix;
    let canon = canonical_form(&steane, 2)?;
    println!("rank={} pivots={:?}", canon.rank(), canon.pivot_cols);

    for variant in [LdiVariant::LowerTriangular, LdiVariant::Css] {
        let ldi = make_ldi(&steane, 2, variant)?;
        let report = verify_ldi(&ldi);
        println!("\n{variant:?}: is_ldi={} B={}", report.is_ldi, report.b);
        print!("{}", render_code_file(&ldi)?);
    }
    Ok(())
}
