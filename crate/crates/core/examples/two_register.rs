//! The two-register code `⟨X X⁻¹, Z Z⟩` is invariant in the local dimension:
//! it commutes over ℤ and keeps distance 2 for every prime.

use qudit_ldi::distance::{d_star, distance_mod};
use qudit_ldi::ldi::verify_ldi;
use qudit_ldi::statecheck::stabilized_state;
use qudit_ldi::symplectic::phi_decode;
use qudit_ldi::{GeneratorMatrix, LocalDimension};

fn main() -> qudit_ldi::Result<()> {
    let code = GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Integers)?;
    let report = verify_ldi(&code);
    println!("is_ldi={} B={}", report.is_ldi, report.b);

    for p in [2, 3, 5, 7, 11] {
        let res = distance_mod(&code, p, 2)?;
        let witness = res.witness.as_ref().map(phi_decode).unwrap_or_default();
        println!("p={p:<2} d={:?} witness={witness}", res.d);
    }
    println!("d* = {:?}", d_star(&code, 2)?.d);

    let psi = stabilized_state(&code, 3)?;
    for idx in 0..psi.dimension() {
        let amp = psi.amplitudes[idx];
        if amp.norm() > 1e-9 {
            println!("|{:?}> {:.4}", psi.digits(idx), amp.re);
        }
    }
    Ok(())
}
