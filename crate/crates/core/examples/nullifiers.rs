//! Reading an integer-commuting code as a continuous-variable code.

use qudit_ldi::catalog;
use qudit_ldi::cv::{additive_commutator, logical_quadratures, to_nullifiers};

fn main() -> qudit_ldi::Result<()> {
    let steane = catalog::steane_ldi().matrix;
    let nullifiers = to_nullifiers(&steane)?;
    for n in &nullifiers {
        println!("{n}");
    }
    for (i, a) in nullifiers.iter().enumerate() {
        for b in &nullifiers[i + 1..] {
            assert_eq!(additive_commutator(a, b)?, 0);
        }
    }
    println!("all nullifiers commute");

    let logical = logical_quadratures(&steane, 5)?;
    println!("x̄ = {}", logical[0]);
    println!("p̄ = {}", logical[1]);
    println!("[x̄, p̄] = {}", additive_commutator(&logical[0], &logical[1])?);
    Ok(())
}
