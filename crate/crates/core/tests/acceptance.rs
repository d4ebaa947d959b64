//! Acceptance criteria, one test each. Every test writes a single
//! `criterion NN: PASS|FAIL ...` line to stderr (bypassing libtest capture)
//! before asserting.

use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qudit_ldi::bounds::{pstar_css, pstar_hadamard, BoundReport};
use qudit_ldi::catalog::{
    hamming_family, random_commuting_code, steane_ldi, toric_code, two_register_example,
};
use qudit_ldi::cv::{additive_commutator, logical_quadratures, to_nullifiers, Nullifier};
use qudit_ldi::distance::{
    classify_error, d_star, distance_mod, logical_operators, phase_space_distance,
    phase_space_norm, VerdictTag,
};
use qudit_ldi::ldi::{make_ldi, verify_ldi, LdiVariant};
use qudit_ldi::linalg::{rank_mod, rank_mod_prime, IntMatrix, RowLattice, SpanModP};
use qudit_ldi::statecheck::stabilized_state;
use qudit_ldi::symplectic::{symplectic_product, syndrome_of, GeneratorMatrix, LocalDimension, PauliVector};

fn report(id: u32, title: &str, failures: &[String]) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {id:02}: {verdict} {title}");
    if !failures.is_empty() {
        line.push_str(" -- ");
        line.push_str(&failures.join("; "));
    }
    writeln!(std::io::stderr(), "{line}").ok();
    assert!(failures.is_empty(), "{line}");
}

fn expect(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

// Transcribed independently from the printed equation.
#[rustfmt::skip]
const PRINTED_STEANE: [[i64; 14]; 6] = [
    [1, 1, 1, 1, 0, 0, 0,  0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0,  0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 1, 1,  0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0,  1, -1, 1, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0,  0, 1, -1, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0,  0, 0, 1, -1, 0, -1, 1],
];

const PRINTED_NULLIFIERS: [&str; 6] = [
    "x1+x2+x3+x4",
    "x2+x3+x5+x6",
    "x3+x4+x6+x7",
    "p1-p2+p3-p4",
    "p2-p3+p5-p6",
    "p3-p4-p6+p7",
];

#[test]
fn criterion_01_symplectic_ground_truth() {
    let mut f = Vec::new();
    let xx = PauliVector::parse("X X").unwrap();
    let xxi = PauliVector::parse("X X^-1").unwrap();
    let zz = PauliVector::parse("Z Z").unwrap();
    let a = symplectic_product(&xx, &zz).unwrap();
    let b = symplectic_product(&xxi, &zz).unwrap();
    expect(&mut f, a == 2, || format!("XX⊙ZZ = {a}"));
    expect(&mut f, b == 0, || format!("XX^-1⊙ZZ = {b}"));
    report(1, "symplectic products 2 and 0", &f);
}

#[test]
fn criterion_02_steane_ldi_fidelity() {
    let mut f = Vec::new();
    let m = steane_ldi().matrix;
    let rows = m.row_vectors();
    for (i, printed) in PRINTED_STEANE.iter().enumerate() {
        for (j, &e) in printed.iter().enumerate() {
            if rows[i][j] != e {
                f.push(format!("entry ({}, {}) is {} but printed {}", i + 1, j + 1, rows[i][j], e));
            }
        }
    }
    let r = verify_ldi(&m);
    expect(&mut f, r.is_ldi && r.b == 1, || format!("is_ldi={} B={}", r.is_ldi, r.b));
    let printed = GeneratorMatrix::from_rows(
        7,
        &PRINTED_STEANE.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        LocalDimension::Prime(2),
    )
    .unwrap();
    let pr = verify_ldi(&printed);
    expect(&mut f, pr.is_ldi, || {
        format!("printed matrix itself is not LDI, products {:?}", pr.violations)
    });
    report(2, "steane_ldi equals the printed matrix and is LDI with B = 1", &f);
}

fn same_span_mod(a: &GeneratorMatrix, b: &GeneratorMatrix, q: i64) -> bool {
    let sa = SpanModP::new(&a.row_vectors(), q);
    let sb = SpanModP::new(&b.row_vectors(), q);
    sa.dim() == sb.dim() && b.row_vectors().iter().all(|v| sa.contains(v))
}

#[test]
fn criterion_03_ldi_constructor_soundness() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d1);
    let mut checked = 0;
    for trial in 0..600 {
        let q = [2i64, 3, 5][trial % 3];
        let n = rng.gen_range(1..=6);
        let r = rng.gen_range(1..=n);
        let m = random_commuting_code(&mut rng, n, r, q).unwrap();
        let out = match make_ldi(&m, q, LdiVariant::LowerTriangular) {
            Ok(out) => out,
            Err(e) => {
                f.push(format!("trial {trial}: {e}"));
                continue;
            }
        };
        let rank_q = rank_mod_prime(&m.row_vectors(), q);
        let lattice = RowLattice::from_i64_rows(&out.row_vectors(), 2 * n);
        let ok = verify_ldi(&out).is_ldi
            && same_span_mod(&m, &out, q)
            && rank_mod_prime(&out.row_vectors(), q) == rank_q
            && lattice.rank() == out.num_rows();
        expect(&mut f, ok, || format!("trial {trial} (n={n}, q={q}) failed"));
        checked += 1;
    }
    expect(&mut f, checked >= 500, || format!("only {checked} codes checked"));
    report(3, "make_ldi sound on 600 random commuting codes", &f);
}

#[test]
fn criterion_04_distance_promise() {
    let mut f = Vec::new();
    let codes = [
        ("steane_ldi", steane_ldi().matrix),
        ("hamming:4", hamming_family(4).unwrap().matrix),
    ];
    for (name, m) in &codes {
        for p in [2, 3, 5, 7] {
            let d = distance_mod(m, p, 3).unwrap().d;
            expect(&mut f, d == Some(3), || format!("{name} p={p}: d={d:?}"));
        }
    }
    report(4, "distance 3 for every p in {2,3,5,7}", &f);
}

#[test]
fn criterion_05_d_star() {
    let mut f = Vec::new();
    let m = steane_ldi().matrix;
    let res = d_star(&m, 3).unwrap();
    expect(&mut f, res.d == Some(3), || format!("d*={:?}", res.d));
    if let Some(w) = &res.witness {
        expect(&mut f, w.weight() == 3, || format!("witness weight {}", w.weight()));
        expect(&mut f, syndrome_of(&m, w, None).unwrap().is_zero(), || "witness syndrome nonzero".into());
        for p in [2, 3, 5] {
            let tag = classify_error(&m, w, p).unwrap().tag;
            expect(&mut f, tag == VerdictTag::Unavoidable, || format!("witness at p={p}: {tag:?}"));
        }
    } else {
        f.push("no witness".into());
    }
    let x567 = PauliVector::parse("I I I I X X X").unwrap();
    for p in [2, 3, 5, 7] {
        let tag = classify_error(&m, &x567, p).unwrap().tag;
        expect(&mut f, tag == VerdictTag::Unavoidable, || format!("x5+x6+x7 at p={p}: {tag:?}"));
    }
    report(5, "d* = 3 with an unavoidable weight-3 witness", &f);
}

#[test]
fn criterion_06_bounds() {
    let mut f = Vec::new();
    let css = pstar_css(1, 3).unwrap();
    let had = pstar_hadamard(1, 3).unwrap();
    expect(&mut f, css == 2u32.into(), || format!("css={css}"));
    expect(&mut f, had == 16u32.into(), || format!("hadamard={had}"));
    let r = BoundReport::from_parameters(1, 2, 3, true).unwrap();
    expect(&mut f, r.rotor_ok, || "rotor check false".into());
    report(6, "p*_css(1,3) = 2, p*_H(1,3) = 16, rotor check", &f);
}

#[test]
fn criterion_07_additive_form_lemma() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let mut draw = || {
            let e: Vec<i64> = (0..2 * n).map(|_| rng.gen_range(-50..=50)).collect();
            PauliVector::from_entries(e).unwrap()
        };
        let (u, v) = (draw(), draw());
        let lhs = additive_commutator(&Nullifier::from(&u), &Nullifier::from(&v)).unwrap();
        let rhs = symplectic_product(&u, &v).unwrap();
        if lhs != rhs {
            f.push(format!("trial {trial}: {lhs} vs {rhs}"));
            break;
        }
    }
    report(7, "additive commutator equals symplectic product on 10^4 pairs", &f);
}

#[test]
fn criterion_08_nullifier_reproduction() {
    let mut f = Vec::new();
    let m = steane_ldi().matrix;
    match to_nullifiers(&m) {
        Ok(ns) => {
            for (i, (n, want)) in ns.iter().zip(PRINTED_NULLIFIERS).enumerate() {
                let got = n.to_string();
                expect(&mut f, got == want, || format!("row {}: `{got}` vs printed `{want}`", i + 1));
            }
        }
        Err(e) => f.push(format!("to_nullifiers: {e}")),
    }
    let logical: Vec<String> = logical_quadratures(&m, 2)
        .unwrap()
        .iter()
        .map(Nullifier::to_string)
        .collect();
    let want = ["x1+x2+x3+x4+x5+x6+x7", "p1-p2+p3-p4+p5-p6+p7"];
    expect(&mut f, logical == want, || format!("logical quadratures {logical:?}"));
    report(8, "nullifier and logical quadrature strings", &f);
}

#[test]
fn criterion_09_phase_space_distance() {
    let mut f = Vec::new();
    let res = phase_space_distance(&steane_ldi().matrix, 2, 4).unwrap();
    let v = res.value.unwrap_or(f64::NAN);
    expect(&mut f, (v - 3f64.sqrt()).abs() < 1e-12, || format!("d_ps={v}"));
    let lone = PauliVector::from_parts(&[1, 2, 3], &[0, 0, 0]).unwrap();
    let n14 = phase_space_norm(&lone);
    expect(&mut f, (n14 - 14f64.sqrt()).abs() < 1e-12, || format!("norm={n14}"));
    report(9, "d_ps = √3 and the √14 norm", &f);
}

#[test]
fn criterion_10_toric_family() {
    let mut f = Vec::new();
    for size in [2usize, 3] {
        let m = toric_code(size).unwrap().matrix;
        expect(&mut f, verify_ldi(&m).is_ldi, || format!("toric:{size} not LDI"));
        let a = IntMatrix::from_i64_rows(&m.row_vectors(), 2 * m.n());
        for modulus in 2..=6 {
            let r = rank_mod(&a, modulus).unwrap();
            expect(&mut f, r == 2 * size * size - 2, || format!("toric:{size} rank mod {modulus} = {r}"));
        }
    }
    let d = distance_mod(&toric_code(2).unwrap().matrix, 3, 2).unwrap().d;
    expect(&mut f, d == Some(2), || format!("toric:2 distance mod 3 = {d:?}"));
    report(10, "toric codes LDI with rank 2N²−2 and distance 2", &f);
}

#[test]
fn criterion_11_codeword_oracle() {
    let mut f = Vec::new();
    for q in [2i64, 3, 5] {
        let m = two_register_example(q).matrix;
        let psi = stabilized_state(&m, q).unwrap();
        let qu = q as usize;
        let reference = psi.amplitude(&[0, 0]);
        let unit = 1.0 / (q as f64).sqrt();
        for a in 0..qu {
            for b in 0..qu {
                let amp = psi.amplitude(&[a, b]);
                let want = if (a + b) % qu == 0 { reference } else { Complex64::new(0.0, 0.0) };
                let ok = (amp - want).norm() < 1e-8 && (reference.norm() - unit).abs() < 1e-8;
                expect(&mut f, ok, || format!("q={q} amplitude |{a},{b}> = {amp}"));
            }
        }
    }
    let m = steane_ldi().matrix;
    let zbar = logical_operators(&m, 2).unwrap()[0].z.clone();
    let with_logical = m.with_row(zbar.clone()).unwrap();
    let psi = stabilized_state(&with_logical, 2).unwrap();
    for (i, g) in m.rows().iter().chain([&zbar]).enumerate() {
        let overlap = psi.stabilizer_overlap(g).unwrap();
        expect(&mut f, overlap >= 1.0 - 1e-8, || format!("generator {} overlap {overlap}", i + 1));
    }
    report(11, "two-register codewords and Steane |0_L>", &f);
}

/// Independent lattice membership: row-style Hermite form over i128 and
/// back-substitution.
struct NaiveLattice {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

impl NaiveLattice {
    fn new(rows: &[Vec<i64>]) -> Self {
        let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&e| e as i128).collect()).collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..cols {
            loop {
                let nz: Vec<usize> = (top..m.len()).filter(|&i| m[i][c] != 0).collect();
                if nz.is_empty() {
                    break;
                }
                let best = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
                m.swap(top, best);
                let mut clean = true;
                for i in top + 1..m.len() {
                    let factor = m[i][c] / m[top][c];
                    if factor != 0 {
                        let src = m[top].clone();
                        for (x, s) in m[i].iter_mut().zip(&src) {
                            *x -= factor * s;
                        }
                    }
                    clean &= m[i][c] == 0;
                }
                if clean {
                    pivots.push(c);
                    top += 1;
                    break;
                }
            }
            if top == m.len() {
                break;
            }
        }
        m.truncate(top);
        NaiveLattice { rows: m, pivots }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn contains(&self, v: &[i64]) -> bool {
        let mut w: Vec<i128> = v.iter().map(|&e| e as i128).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if w[c] % row[c] != 0 {
                return false;
            }
            let t = w[c] / row[c];
            for (x, r) in w.iter_mut().zip(row) {
                *x -= t * r;
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

/// Least weight of a vector with entries in [−3, 3], zero integer syndrome,
/// and outside the lattice (any nonzero vector when the rank is n).
fn naive_d_star(m: &GeneratorMatrix) -> Option<usize> {
    let n = m.n();
    let lattice = NaiveLattice::new(&m.row_vectors());
    let stabilizer_state = lattice.rank() == n;
    let values: Vec<(i64, i64)> = (-3..=3)
        .flat_map(|a| (-3..=3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    for w in 1..=n {
        let mut found = false;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != w || found {
                continue;
            }
            let support: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
            let total = values.len().pow(w as u32);
            for mut code in 0..total {
                let mut e = PauliVector::zeros(n);
                for &s in &support {
                    e.set_site(s, values[code % values.len()]);
                    code /= values.len();
                }
                let zero = m.rows().iter().all(|r| symplectic_product(r, &e).unwrap() == 0);
                if zero && (stabilizer_state || !lattice.contains(e.entries())) {
                    found = true;
                    break;
                }
            }
        }
        if found {
            return Some(w);
        }
    }
    None
}

#[test]
fn criterion_12_oracle_equivalence() {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut compared = 0;
    while compared < 200 {
        let q = [2i64, 3][compared % 2];
        let n = rng.gen_range(1..=4);
        let r = rng.gen_range(1..=n);
        let m = random_commuting_code(&mut rng, n, r, q).unwrap();
        let ldi = make_ldi(&m, q, LdiVariant::LowerTriangular).unwrap();
        let fast = d_star(&ldi, n).unwrap().d;
        let slow = naive_d_star(&ldi);
        if fast != slow {
            f.push(format!("code {compared} (n={n}, q={q}): kernel {fast:?} vs naive {slow:?} on {:?}", ldi.row_vectors()));
        }
        compared += 1;
    }
    report(12, "kernel d* equals naive enumeration on 200 random codes", &f);
}
