//! Distance of several catalog codes across a range of primes, with the
//! p-independent d* alongside.

use qudit_ldi::catalog;
use qudit_ldi::distance::{d_star, distance_mod};

const PRIMES: [i64; 5] = [2, 3, 5, 7, 11];

fn main() -> qudit_ldi::Result<()> {
    print!("{:<14}", "code");
    for p in PRIMES {
        print!(" p={p:<3}");
    }
    println!("   d*");
    for name in ["two_register", "steane_ldi", "hamming:4", "toric:2", "toric:3"] {
        let m = catalog::by_name(name)?.matrix;
        print!("{name:<14}");
        for p in PRIMES {
            let d = distance_mod(&m, p, 3)?.d.map_or("-".into(), |d| d.to_string());
            print!(" {d:<5}");
        }
        let star = d_star(&m, 3)?.d.map_or("-".into(), |d| d.to_string());
        println!(" {star:>4}");
    }
    Ok(())
}
