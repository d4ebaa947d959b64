//! Built-in example codes and random code generators.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{kernel_mod_p, is_prime, SpanModP};
use crate::symplectic::{GeneratorMatrix, LocalDimension, PauliVector};

/// Declared code parameters `[[n, k, d]]` and local dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Declared {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub dim: LocalDimension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub matrix: GeneratorMatrix,
    pub declared: Declared,
    pub ldi: bool,
    pub notes: String,
}

fn rows(n: usize, data: &[&[i64]], dim: LocalDimension) -> GeneratorMatrix {
    let owned: Vec<Vec<i64>> = data.iter().map(|r| r.to_vec()).collect();
    GeneratorMatrix::from_rows(n, &owned, dim).expect("well-formed catalog rows")
}

/// `⟨X X⁻¹, Z Z⟩`, whose single codeword is `Σ_j |j, −j⟩`.
pub fn two_register_example(q_display: i64) -> CatalogEntry {
    let dim = LocalDimension::from_modulus(q_display).unwrap_or(LocalDimension::Integers);
    CatalogEntry {
        name: "two_register".into(),
        matrix: rows(2, &[&[1, -1, 0, 0], &[0, 0, 1, 1]], dim),
        declared: Declared {
            n: 2,
            k: 0,
            d: Some(2),
            dim,
        },
        ldi: true,
        notes: "two-register LDI pair; one stabilized state for every q".into(),
    }
}

#[rustfmt::skip]
const STEANE_AS_PRINTED: [[i64; 14]; 6] = [
    [1, 1, 1, 1, 0, 0, 0,  0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0,  0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 1, 1,  0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0,  1, -1, 1, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0,  0, 1, -1, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0,  0, 0, 1, -1, 0, -1, 1],
];

/// The signed Steane matrix as it is usually printed. Rows 3 and 5 have
/// symplectic product −2, so it is not LDI.
pub fn steane_ldi_as_printed() -> GeneratorMatrix {
    let data: Vec<&[i64]> = STEANE_AS_PRINTED.iter().map(|r| &r[..]).collect();
    rows(7, &data, LocalDimension::Prime(2))
}

/// LDI form of the Steane code: all-ones X checks and signed Z checks.
/// Identical to [`steane_ldi_as_printed`] except for the signs on registers
/// 5 and 6 of row 5, which are the only ones making every product vanish.
pub fn steane_ldi() -> CatalogEntry {
    let mut data = STEANE_AS_PRINTED;
    data[4][7 + 4] = -1;
    data[4][7 + 5] = 1;
    let data: Vec<&[i64]> = data.iter().map(|r| &r[..]).collect();
    let dim = LocalDimension::Prime(2);
    CatalogEntry {
        name: "steane_ldi".into(),
        matrix: rows(7, &data, dim),
        declared: Declared {
            n: 7,
            k: 1,
            d: Some(3),
            dim,
        },
        ldi: true,
        notes: "LDI form of the Steane code; differs from the qubit code only in signs".into(),
    }
}

/// The qubit Steane code with all powers `+1`; not LDI.
pub fn steane_standard() -> CatalogEntry {
    let supports: [[usize; 4]; 3] = [[0, 1, 2, 3], [1, 2, 4, 5], [2, 3, 5, 6]];
    let mut data = Vec::new();
    for z in [false, true] {
        for s in &supports {
            let mut row = vec![0i64; 14];
            for &j in s {
                row[j + if z { 7 } else { 0 }] = 1;
            }
            data.push(row);
        }
    }
    let dim = LocalDimension::Prime(2);
    CatalogEntry {
        name: "steane_standard".into(),
        matrix: GeneratorMatrix::from_rows(7, &data, dim).expect("width 14"),
        declared: Declared {
            n: 7,
            k: 1,
            d: Some(3),
            dim,
        },
        ldi: false,
        notes: "qubit Steane code, same supports as steane_ldi".into(),
    }
}

const MAX_HAMMING_ORDER: u32 = 10;

/// Quantum Hamming code `[[2^N−1, 2^N−1−2N, 3]]` with `B = 1`.
///
/// Column `c` of the parity-check matrix is `c` in binary. X checks are the
/// plain rows; Z checks carry the sign `(−1)^{popcount(c)}` on column `c`.
/// Two checks overlap on `2^{N−2}` columns (a check with itself on
/// `2^{N−1}`), half of each parity, so every product vanishes.
pub fn hamming_family(order: u32) -> Result<CatalogEntry> {
    if !(3..=MAX_HAMMING_ORDER).contains(&order) {
        return Err(Error::Domain(format!(
            "Hamming order must be in 3..={MAX_HAMMING_ORDER}, got {order}"
        )));
    }
    let n = (1usize << order) - 1;
    let checks: Vec<Vec<i64>> = (0..order)
        .map(|bit| (1..=n).map(|col| ((col >> bit) & 1) as i64).collect())
        .collect();
    let signed: Vec<Vec<i64>> = checks
        .iter()
        .map(|h| {
            h.iter()
                .zip(1..=n)
                .map(|(&e, c)| if c.count_ones() % 2 == 0 { e } else { -e })
                .collect()
        })
        .collect();
    let zeros = vec![0i64; n];
    let paulis = checks
        .iter()
        .map(|h| PauliVector::from_parts(h, &zeros))
        .chain(signed.iter().map(|h| PauliVector::from_parts(&zeros, h)))
        .collect::<Result<Vec<_>>>()?;
    let dim = LocalDimension::Prime(2);
    let matrix = GeneratorMatrix::new(n, paulis, dim)?;
    Ok(CatalogEntry {
        name: format!("hamming:{order}"),
        matrix,
        declared: Declared {
            n,
            k: n - 2 * order as usize,
            d: Some(3),
            dim,
        },
        ldi: true,
        notes: "CSS code from the binary Hamming parity checks".into(),
    })
}

const MAX_TORIC_SIZE: usize = 32;

/// Toric code on an `N × N` torus with opposing edges of each generator
/// carrying opposite powers.
///
/// Registers `0..N²` are horizontal edges `(r, c) → (r, c+1)`, registers
/// `N²..2N²` vertical edges `(r, c) → (r+1, c)`. Plaquette `X` generators
/// carry `+1` on north and east, `−1` on south and west; vertex `Z`
/// generators carry `+1` on east and south, `−1` on west and north. The last
/// plaquette and last vertex are dropped.
pub fn toric_code(size: usize) -> Result<CatalogEntry> {
    if !(2..=MAX_TORIC_SIZE).contains(&size) {
        return Err(Error::Domain(format!(
            "toric size must be in 2..={MAX_TORIC_SIZE}, got {size}"
        )));
    }
    let l = size;
    let n = 2 * l * l;
    let h = |r: usize, c: usize| (r % l) * l + (c % l);
    let v = |r: usize, c: usize| l * l + (r % l) * l + (c % l);

    let mut data = Vec::with_capacity(2 * l * l - 2);
    for r in 0..l {
        for c in 0..l {
            if r == l - 1 && c == l - 1 {
                continue;
            }
            let mut row = vec![0i64; 2 * n];
            row[h(r, c)] = 1;
            row[v(r, c + 1)] = 1;
            row[h(r + 1, c)] = -1;
            row[v(r, c)] = -1;
            data.push(row);
        }
    }
    for r in 0..l {
        for c in 0..l {
            if r == l - 1 && c == l - 1 {
                continue;
            }
            let mut row = vec![0i64; 2 * n];
            row[n + h(r, c)] = 1;
            row[n + v(r, c)] = 1;
            row[n + h(r, c + l - 1)] = -1;
            row[n + v(r + l - 1, c)] = -1;
            data.push(row);
        }
    }
    let dim = LocalDimension::Integers;
    Ok(CatalogEntry {
        name: format!("toric:{size}"),
        matrix: GeneratorMatrix::from_rows(n, &data, dim)?,
        declared: Declared {
            n,
            k: 2,
            d: Some(size),
            dim,
        },
        ldi: true,
        notes: "toric code valid for every local dimension".into(),
    })
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "two_register[:q]",
    "steane_ldi",
    "steane_standard",
    "hamming:N",
    "toric:N",
];

/// Looks up `two_register`, `steane_ldi`, `steane_standard`, `hamming:N` or
/// `toric:N`.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b, Some(a)),
        None => (name, None),
    };
    let parse_arg = |default: Option<i64>| -> Result<i64> {
        match arg {
            Some(a) => a
                .parse()
                .map_err(|_| Error::Domain(format!("bad catalog parameter `{a}`"))),
            None => default.ok_or_else(|| Error::Domain(format!("`{base}` needs a parameter"))),
        }
    };
    let no_arg = || match arg {
        Some(a) => Err(Error::Domain(format!("`{base}` takes no parameter, got `{a}`"))),
        None => Ok(()),
    };
    match base {
        "two_register" => Ok(two_register_example(parse_arg(Some(0))?)),
        "steane_ldi" => no_arg().map(|_| steane_ldi()),
        "steane_standard" => no_arg().map(|_| steane_standard()),
        "hamming" => {
            let order = u32::try_from(parse_arg(None)?)
                .map_err(|_| Error::Domain("negative Hamming order".into()))?;
            hamming_family(order)
        }
        "toric" => {
            let size = usize::try_from(parse_arg(None)?)
                .map_err(|_| Error::Domain("negative toric size".into()))?;
            toric_code(size)
        }
        other => Err(Error::Domain(format!("unknown catalog entry `{other}`"))),
    }
}

/// A small default listing.
pub fn standard_entries() -> Vec<CatalogEntry> {
    vec![
        two_register_example(0),
        steane_ldi(),
        steane_standard(),
        hamming_family(3).expect("valid order"),
        hamming_family(4).expect("valid order"),
        toric_code(2).expect("valid size"),
        toric_code(3).expect("valid size"),
    ]
}

const MAX_ATTEMPTS: usize = 64;

/// Up to `r` independent rows in `[0, q)^{2n}` that commute mod the prime
/// `q`. Fewer rows come back only when no further independent commuting row
/// exists.
pub fn random_commuting_code<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    r: usize,
    q: i64,
) -> Result<GeneratorMatrix> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let mut chosen: Vec<Vec<i64>> = Vec::new();
    let mut span = SpanModP::new(&[], q);
    while chosen.len() < r.min(n) {
        let constraints: Vec<Vec<i64>> = chosen
            .iter()
            .map(|row| {
                row[n..]
                    .iter()
                    .map(|b| (-b).rem_euclid(q))
                    .chain(row[..n].iter().copied())
                    .collect()
            })
            .collect();
        let basis = kernel_mod_p(&constraints, 2 * n, q);
        let candidate = (0..MAX_ATTEMPTS).find_map(|_| {
            let mut v = vec![0i64; 2 * n];
            for b in &basis {
                let c = rng.gen_range(0..q);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = (*vi + c * bi).rem_euclid(q);
                }
            }
            (!span.contains(&v)).then_some(v)
        });
        match candidate {
            Some(v) => {
                span.insert(&v);
                chosen.push(v);
            }
            None => break,
        }
    }
    GeneratorMatrix::from_rows(n, &chosen, LocalDimension::Prime(q))
}

/// CSS code mod `q`: `rx` random X rows and up to `rz` Z rows orthogonal to
/// them.
pub fn random_css_code<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    rx: usize,
    rz: usize,
    q: i64,
) -> Result<GeneratorMatrix> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let x_rows: Vec<Vec<i64>> = (0..rx)
        .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
        .collect();
    let x_rows: Vec<Vec<i64>> = SpanModP::new(&x_rows, q).basis().to_vec();
    let dual = kernel_mod_p(&x_rows, n, q);
    let mut z_span = SpanModP::new(&[], q);
    let mut z_rows = Vec::new();
    for _ in 0..MAX_ATTEMPTS {
        if z_rows.len() >= rz || z_span.dim() >= dual.len() {
            break;
        }
        let mut z = vec![0i64; n];
        for b in &dual {
            let c = rng.gen_range(0..q);
            for (zi, bi) in z.iter_mut().zip(b) {
                *zi = (*zi + c * bi).rem_euclid(q);
            }
        }
        if z_span.insert(&z) {
            z_rows.push(z);
        }
    }
    let zeros = vec![0i64; n];
    let paulis = x_rows
        .iter()
        .map(|x| PauliVector::from_parts(x, &zeros))
        .chain(z_rows.iter().map(|z| PauliVector::from_parts(&zeros, z)))
        .collect::<Result<Vec<_>>>()?;
    GeneratorMatrix::new(n, paulis, LocalDimension::Prime(q))
}
