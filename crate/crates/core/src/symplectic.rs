//! The φ representation of generalized Pauli operators.
//!
//! An `n`-register Pauli `X^a Z^b` (phase quotiented out) is stored as the
//! length-`2n` integer vector `(a_1..a_n | b_1..b_n)`. Entries are plain
//! integers; nothing is reduced unless a caller asks for it, so the same
//! vector serves the prime, modular and integer settings.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Local dimension a code is declared over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalDimension {
    Prime(i64),
    /// Composite modulus, i.e. the ring ℤ_m.
    Modulo(i64),
    Integers,
    /// Non-negative reals below `p`, wrapping.
    RealsModulo(i64),
    Reals,
}

impl LocalDimension {
    /// `Prime(m)` when `m` is prime, `Modulo(m)` otherwise.
    pub fn from_modulus(m: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        Ok(if crate::linalg::is_prime(m) {
            LocalDimension::Prime(m)
        } else {
            LocalDimension::Modulo(m)
        })
    }

    /// The finite modulus, if this is a finite ring.
    pub fn modulus(&self) -> Option<i64> {
        match *self {
            LocalDimension::Prime(q) | LocalDimension::Modulo(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for LocalDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalDimension::Prime(q) | LocalDimension::Modulo(q) => write!(f, "{q}"),
            LocalDimension::Integers => f.write_str("Z"),
            LocalDimension::RealsModulo(p) => write!(f, "R{p}"),
            LocalDimension::Reals => f.write_str("R"),
        }
    }
}

/// φ image of an `n`-register Pauli: X-powers followed by Z-powers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliVector {
    n: usize,
    entries: Vec<i64>,
}

impl PauliVector {
    pub fn zeros(n: usize) -> Self {
        PauliVector {
            n,
            entries: vec![0; 2 * n],
        }
    }

    pub fn from_entries(entries: Vec<i64>) -> Result<Self> {
        if !entries.len().is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "a Pauli vector needs an even number of entries, got {}",
                entries.len()
            )));
        }
        Ok(PauliVector {
            n: entries.len() / 2,
            entries,
        })
    }

    pub fn from_parts(x: &[i64], z: &[i64]) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::RegisterMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        let mut entries = x.to_vec();
        entries.extend_from_slice(z);
        Ok(PauliVector { n: x.len(), entries })
    }

    /// Parses whitespace separated site tokens, inferring `n`.
    pub fn parse(text: &str) -> Result<Self> {
        let n = text.split_whitespace().count();
        phi_encode(text, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [i64] {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn x(&self) -> &[i64] {
        &self.entries[..self.n]
    }

    pub fn z(&self) -> &[i64] {
        &self.entries[self.n..]
    }

    /// `(a_i, b_i)` for register `i`.
    pub fn site(&self, i: usize) -> (i64, i64) {
        (self.entries[i], self.entries[self.n + i])
    }

    pub fn set_site(&mut self, i: usize, (a, b): (i64, i64)) {
        self.entries[i] = a;
        self.entries[self.n + i] = b;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn weight(&self) -> usize {
        pauli_weight(self)
    }

    /// Registers carrying a non-identity factor.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.site(i) != (0, 0))
            .collect()
    }

    pub fn is_x_type(&self) -> bool {
        self.z().iter().all(|&b| b == 0)
    }

    pub fn is_z_type(&self) -> bool {
        self.x().iter().all(|&a| a == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn scaled(&self, c: i64) -> Self {
        PauliVector {
            n: self.n,
            entries: self.entries.iter().map(|&e| e * c).collect(),
        }
    }

    /// Entries reduced into `[0, m)`.
    pub fn reduced(&self, m: i64) -> Self {
        PauliVector {
            n: self.n,
            entries: self.entries.iter().map(|&e| e.rem_euclid(m)).collect(),
        }
    }

    /// Squared Euclidean norm `‖a‖² + ‖b‖²`.
    pub fn norm_squared(&self) -> i128 {
        self.entries.iter().map(|&e| (e as i128) * (e as i128)).sum()
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RegisterMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl Add for &PauliVector {
    type Output = PauliVector;

    fn add(self, rhs: &PauliVector) -> PauliVector {
        assert_eq!(self.n, rhs.n, "register count mismatch");
        PauliVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PauliVector {
    type Output = PauliVector;

    fn sub(self, rhs: &PauliVector) -> PauliVector {
        assert_eq!(self.n, rhs.n, "register count mismatch");
        PauliVector {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &PauliVector {
    type Output = PauliVector;

    fn neg(self) -> PauliVector {
        self.scaled(-1)
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&phi_decode(self))
    }
}

/// Stabilizer generators, one φ vector per row, plus the local dimension the
/// code was written for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<PauliVector>,
    dim: LocalDimension,
}

impl GeneratorMatrix {
    pub fn new(n: usize, rows: Vec<PauliVector>, dim: LocalDimension) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.n() != n) {
            return Err(Error::RegisterMismatch {
                left: n,
                right: bad.n(),
            });
        }
        Ok(GeneratorMatrix { n, rows, dim })
    }

    /// Builds from raw rows of `2n` integers.
    pub fn from_rows(n: usize, rows: &[Vec<i64>], dim: LocalDimension) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                if r.len() != 2 * n {
                    return Err(Error::Domain(format!(
                        "row has {} entries, expected {}",
                        r.len(),
                        2 * n
                    )));
                }
                PauliVector::from_entries(r.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratorMatrix::new(n, rows, dim)
    }

    /// Builds from Pauli strings such as `"X X^-1"`.
    pub fn from_paulis(texts: &[&str], dim: LocalDimension) -> Result<Self> {
        let rows = texts
            .iter()
            .map(|t| PauliVector::parse(t))
            .collect::<Result<Vec<_>>>()?;
        let n = rows.first().map_or(0, PauliVector::n);
        GeneratorMatrix::new(n, rows, dim)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PauliVector] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> LocalDimension {
        self.dim
    }

    pub fn with_dim(mut self, dim: LocalDimension) -> Self {
        self.dim = dim;
        self
    }

    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| r.entries().to_vec()).collect()
    }

    /// Every row pure-X or pure-Z.
    pub fn is_css(&self) -> bool {
        self.rows.iter().all(|r| r.is_x_type() || r.is_z_type())
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.rows.iter().map(PauliVector::max_abs).max().unwrap_or(0)
    }

    pub fn reduced(&self, m: i64) -> Self {
        GeneratorMatrix {
            n: self.n,
            rows: self.rows.iter().map(|r| r.reduced(m)).collect(),
            dim: self.dim,
        }
    }

    /// Appends a row, e.g. a logical operator fixing a codeword.
    pub fn with_row(&self, row: PauliVector) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.push(row);
        GeneratorMatrix::new(self.n, rows, self.dim)
    }

    /// Fails with [`Error::NonCommuting`] on the first pair whose product is
    /// nonzero mod `m`.
    pub fn check_commuting_mod(&self, m: i64) -> Result<()> {
        for i in 0..self.rows.len() {
            for j in i + 1..self.rows.len() {
                let product = symplectic_product(&self.rows[i], &self.rows[j])?;
                if product.rem_euclid(m as i128) != 0 {
                    return Err(Error::NonCommuting {
                        i,
                        j,
                        product,
                        modulus: m,
                    });
                }
            }
        }
        Ok(())
    }
}

/// One syndrome value per generator row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    pub values: Vec<i128>,
}

impl Syndrome {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_zero_mod(&self, m: i64) -> bool {
        self.values.iter().all(|&v| v.rem_euclid(m as i128) == 0)
    }
}

fn parse_exponent(s: &str) -> Option<(i64, &str)> {
    let Some(rest) = s.strip_prefix('^') else {
        return Some((1, s));
    };
    let end = rest
        .char_indices()
        .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+'))))
        .map_or(rest.len(), |(i, _)| i);
    let value = rest[..end].parse().ok()?;
    Some((value, &rest[end..]))
}

fn parse_site(token: &str) -> Result<(i64, i64)> {
    let bad = || Error::MalformedToken(token.to_string());
    if token == "I" {
        return Ok((0, 0));
    }
    let (mut a, mut b) = (0, 0);
    let mut rest = token;
    if let Some(r) = rest.strip_prefix('X') {
        let (e, r) = parse_exponent(r).ok_or_else(bad)?;
        a = e;
        rest = r;
    }
    if let Some(r) = rest.strip_prefix('Z') {
        let (e, r) = parse_exponent(r).ok_or_else(bad)?;
        b = e;
        rest = r;
    }
    if !rest.is_empty() || rest.len() == token.len() {
        return Err(bad());
    }
    Ok((a, b))
}

/// φ: whitespace separated site tokens (`I`, `X^a`, `Z^b`, `X^aZ^b`, omitted
/// exponent meaning 1) to the integer vector `(a | b)`.
pub fn phi_encode(text: &str, n: usize) -> Result<PauliVector> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != n {
        return Err(Error::TokenCount {
            expected: n,
            found: tokens.len(),
        });
    }
    let mut v = PauliVector::zeros(n);
    for (i, token) in tokens.iter().enumerate() {
        v.set_site(i, parse_site(token)?);
    }
    Ok(v)
}

fn render_power(letter: char, power: i64, out: &mut String) {
    out.push(letter);
    if power != 1 {
        out.push('^');
        out.push_str(&power.to_string());
    }
}

/// Inverse of [`phi_encode`]; phases are never emitted.
pub fn phi_decode(v: &PauliVector) -> String {
    let mut out = String::new();
    for i in 0..v.n() {
        if i > 0 {
            out.push(' ');
        }
        match v.site(i) {
            (0, 0) => out.push('I'),
            (a, b) => {
                if a != 0 {
                    render_power('X', a, &mut out);
                }
                if b != 0 {
                    render_power('Z', b, &mut out);
                }
            }
        }
    }
    out
}

/// `a_u·b_v − b_u·a_v` over the integers.
pub fn symplectic_product(u: &PauliVector, v: &PauliVector) -> Result<i128> {
    u.check_same_n(v)?;
    let (ux, uz) = (u.x(), u.z());
    let (vx, vz) = (v.x(), v.z());
    let mut acc: i128 = 0;
    for k in 0..u.n() {
        acc += ux[k] as i128 * vz[k] as i128 - uz[k] as i128 * vx[k] as i128;
    }
    Ok(acc)
}

/// Number of registers where the operator is not the identity.
pub fn pauli_weight(v: &PauliVector) -> usize {
    (0..v.n()).filter(|&i| v.site(i) != (0, 0)).count()
}

/// Row-wise symplectic products with `e`, optionally reduced mod `modulus`.
pub fn syndrome_of(m: &GeneratorMatrix, e: &PauliVector, modulus: Option<i64>) -> Result<Syndrome> {
    if e.n() != m.n() {
        return Err(Error::RegisterMismatch {
            left: m.n(),
            right: e.n(),
        });
    }
    if let Some(q) = modulus {
        if q < 2 {
            return Err(Error::BadModulus(q));
        }
    }
    let values = m
        .rows()
        .iter()
        .map(|row| {
            let s = symplectic_product(row, e)?;
            Ok(match modulus {
                Some(q) => s.rem_euclid(q as i128),
                None => s,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Syndrome { values })
}
