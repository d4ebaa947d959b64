//! Thresholds above which the distance of an integer-commuting code is
//! guaranteed not to drop.

use qudit_ldi::bounds::{report_for, BoundReport};
use qudit_ldi::catalog;

fn main() -> qudit_ldi::Result<()> {
    println!("{:>3} {:>3} {:>14} {:>14} {:>10}", "B", "d", "hadamard", "alternative", "css");
    for b in 1..=3 {
        for d in [2, 3, 5] {
            let r = BoundReport::from_parameters(b, 2, d, true)?;
            println!(
                "{b:>3} {d:>3} {:>14} {:>14} {:>10}",
                r.p_star_hadamard,
                r.p_star_alternative,
                r.p_star_css.unwrap()
            );
        }
    }

    let steane = catalog::steane_ldi().matrix;
    let r = report_for(&steane, 2, 3)?;
    println!("\nsigned Steane: min p* = {} rotor_ok={}", r.min_p_star(), r.rotor_ok);
    Ok(())
}
