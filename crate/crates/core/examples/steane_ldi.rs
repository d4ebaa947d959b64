//! The signed Steane code: integer-commuting, distance 3 at every prime.

use qudit_ldi::catalog;
use qudit_ldi::distance::{d_star, distance_mod, logical_operators};
use qudit_ldi::ldi::verify_ldi;
use qudit_ldi::symplectic::phi_decode;

fn main() -> qudit_ldi::Result<()> {
    let entry = catalog::steane_ldi();
    println!("{}: {}", entry.name, entry.notes);
    let report = verify_ldi(&entry.matrix);
    println!("is_ldi={} B={}", report.is_ldi, report.b);

    for p in [2, 3, 5, 7] {
        println!("p={p} d={:?}", distance_mod(&entry.matrix, p, 3)?.d);
    }
    println!("d*={:?}", d_star(&entry.matrix, 3)?.d);

    for pair in logical_operators(&entry.matrix, 5)? {
        println!("X_L = {}", phi_decode(&pair.x));
        println!("Z_L = {}", phi_decode(&pair.z));
    }

    // The unsigned matrix only commutes mod 2.
    let plain = verify_ldi(&catalog::steane_standard().matrix);
    println!("standard Steane: is_ldi={} violations={}", plain.is_ldi, plain.violations.len());
    Ok(())
}
