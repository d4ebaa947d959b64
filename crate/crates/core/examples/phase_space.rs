//! Euclidean phase-space distance: the shortest undetectable integer
//! displacement, searched over bounded coefficients.

use qudit_ldi::catalog;
use qudit_ldi::distance::phase_space_distance;
use qudit_ldi::symplectic::phi_decode;

fn main() -> qudit_ldi::Result<()> {
    for name in ["two_register", "steane_ldi", "toric:2"] {
        let m = catalog::by_name(name)?.matrix;
        let res = phase_space_distance(&m, 2, 4)?;
        match (res.value, res.norm_squared, res.witness) {
            (Some(v), Some(nsq), Some(w)) => {
                println!("{name:<13} d_ps={v:.4} (√{nsq}) witness={}", phi_decode(&w))
            }
            _ => println!("{name:<13} none within the search box"),
        }
    }
    Ok(())
}
