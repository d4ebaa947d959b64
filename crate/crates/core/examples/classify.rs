//! Sorting undetectable errors into those that fail at every prime and
//! those that are artifacts of one particular prime.

use qudit_ldi::distance::classify_error;
use qudit_ldi::symplectic::phi_encode;
use qudit_ldi::{GeneratorMatrix, LocalDimension};

fn main() -> qudit_ldi::Result<()> {
    let code = GeneratorMatrix::from_paulis(&["X X^-1", "Z Z"], LocalDimension::Integers)?;
    for (error, p) in [("X X", 2), ("X X", 3), ("X^3 I", 3), ("X I", 5), ("Z Z^-1", 7)] {
        let e = phi_encode(error, code.n())?;
        let v = classify_error(&code, &e, p)?;
        println!("{error:<8} p={p} {:?} syndrome={:?}", v.tag, v.witness_syndrome.values);
    }
    Ok(())
}
