//! The `qldi` command line. [`run`] does all the work and returns the exit
//! code with the captured output, so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand};

use crate::bounds::{report_for, BoundReport};
use crate::catalog::{self, CatalogEntry};
use crate::codefile::{parse_code_file, render_code_file};
use crate::cv::{logical_quadratures, to_nullifiers};
use crate::distance::{
    classify_error, d_star_budgeted, distance_mod_budgeted, logical_operators,
    phase_space_distance_budgeted, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::ldi::{make_ldi, verify_ldi, LdiVariant};
use crate::linalg::{canonical_form, rank_mod, IntMatrix, RowLattice};
use crate::statecheck::stabilized_state;
use crate::symplectic::{phi_decode, phi_encode, GeneratorMatrix, LocalDimension};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "qldi", version, about = "Local-dimension-invariant stabilizer code toolkit")]
struct Cli {
    /// Machine-readable CSV output where supported.
    #[arg(long, global = true)]
    csv: bool,
    /// Cap on enumerated candidates for searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Worker threads for searches.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

/// `CODE` is a QEC1 file path or a catalog name such as `steane_ldi` or
/// `toric:3`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form `[I X₂ | Z₁ Z₂]` over a prime.
    Canon {
        code: String,
        #[arg(long)]
        q: Option<i64>,
    },
    /// LDI generator set for the same code.
    Ldi {
        code: String,
        #[arg(long, default_value = "lower_triangular")]
        variant: LdiVariant,
        #[arg(long)]
        q: Option<i64>,
    },
    /// Checks pairwise products over ℤ.
    Verify { code: String },
    /// Distance mod each `p` by exhaustive search.
    Distance {
        code: String,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<i64>,
        #[arg(long)]
        w_max: usize,
    },
    /// Least weight of an error with zero integer syndrome.
    Dstar {
        code: String,
        #[arg(long)]
        w_max: usize,
    },
    /// Classifies a Pauli error such as `"X X^-1 I"`.
    Classify {
        code: String,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        error: String,
    },
    /// Conjugate pairs of logical operators mod `p`.
    Logicals {
        code: String,
        #[arg(long)]
        p: i64,
    },
    /// Cutoffs `p*` from parameters, or from an LDI code with `--code`.
    Bounds {
        #[arg(long = "B")]
        b: Option<u64>,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        css: bool,
        #[arg(long)]
        code: Option<String>,
    },
    /// Quadrature nullifiers, optionally with logical quadratures mod `p`.
    Nullifiers {
        code: String,
        #[arg(long)]
        logicals: Option<i64>,
    },
    /// Shortest logical vector within a coefficient box.
    Dps {
        code: String,
        #[arg(long, default_value_t = 2)]
        coeff_bound: i64,
        #[arg(long, default_value_t = 4)]
        w_max: usize,
    },
    /// Lists built-in codes, or prints one as a QEC1 file.
    Catalog { name: Option<String> },
    /// Rank over ℤ_m, or over ℤ with `--m Z`.
    Rank {
        code: String,
        #[arg(long)]
        m: String,
    },
    /// Dense stabilized state for small codes.
    Stabilize {
        code: String,
        #[arg(long)]
        q: Option<i64>,
    },
}

struct Loaded {
    name: String,
    matrix: GeneratorMatrix,
}

fn load(code: &str) -> Result<Loaded> {
    let path = Path::new(code);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read {code}: {e}")))?;
        let name = path
            .file_stem()
            .map_or_else(|| code.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(Loaded {
            name,
            matrix: parse_code_file(&text)?,
        });
    }
    match catalog::by_name(code) {
        Ok(entry) => Ok(Loaded {
            name: entry.name,
            matrix: entry.matrix,
        }),
        Err(_) => Err(Error::Domain(format!(
            "`{code}` is neither a readable file nor a catalog entry"
        ))),
    }
}

fn modulus_or(q: Option<i64>, m: &GeneratorMatrix) -> Result<i64> {
    q.or_else(|| m.dim().modulus()).ok_or_else(|| {
        Error::Domain(format!("local dimension {} has no modulus; pass --q", m.dim()))
    })
}

fn describe_entry(e: &CatalogEntry) -> String {
    format!(
        "{} n={} k={} d={} dim={} ldi={}",
        e.name,
        e.declared.n,
        e.declared.k,
        e.declared.d.map_or("?".into(), |d| d.to_string()),
        e.declared.dim,
        e.ldi
    )
}

fn fmt_component(x: f64) -> f64 {
    if x.abs() < 5e-13 {
        0.0
    } else {
        x
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<()> {
    let budget = cli.budget;
    match &cli.command {
        Command::Canon { code, q } => {
            let code = load(code)?;
            let q = modulus_or(*q, &code.matrix)?;
            let c = canonical_form(&code.matrix, q)?;
            let pivots: Vec<String> = c.pivot_cols.iter().map(usize::to_string).collect();
            writeln!(out, "# rank={} pivots={}", c.rank(), pivots.join(",")).ok();
            let framed = c.matrix.clone().with_dim(LocalDimension::from_modulus(q)?);
            out.push_str(&render_code_file(&framed)?);
        }
        Command::Ldi { code, variant, q } => {
            let code = load(code)?;
            let q = modulus_or(*q, &code.matrix)?;
            let ldi = make_ldi(&code.matrix, q, *variant)?;
            out.push_str(&render_code_file(&ldi)?);
        }
        Command::Verify { code } => {
            let report = verify_ldi(&load(code)?.matrix);
            writeln!(out, "is_ldi={} B={}", report.is_ldi, report.b).ok();
            for (i, j, product) in &report.violations {
                writeln!(out, "violation rows={i},{j} product={product}").ok();
            }
        }
        Command::Distance { code, p, w_max } => {
            let code = load(code)?;
            if cli.csv {
                writeln!(out, "code,p,w_max,d,witness").ok();
            }
            for &p in p {
                let res = distance_mod_budgeted(&code.matrix, p, *w_max, budget)?;
                let d = res.d.map_or(String::new(), |d| d.to_string());
                let witness = res.witness.as_ref().map_or(String::new(), phi_decode);
                if cli.csv {
                    writeln!(out, "{},{p},{w_max},{d},{witness}", code.name).ok();
                } else {
                    let d = if d.is_empty() { format!(">{}", res.searched_weight) } else { d };
                    writeln!(out, "p={p} w_max={w_max} d={d} witness={witness}").ok();
                }
            }
        }
        Command::Dstar { code, w_max } => {
            let res = d_star_budgeted(&load(code)?.matrix, *w_max, budget)?;
            let d = res.d.map_or(format!(">{}", res.searched_weight), |d| d.to_string());
            let witness = res.witness.as_ref().map_or(String::new(), phi_decode);
            writeln!(out, "w_max={w_max} d_star={d} witness={witness}").ok();
        }
        Command::Classify { code, p, error } => {
            let m = load(code)?.matrix;
            let e = phi_encode(error, m.n())?;
            let verdict = classify_error(&m, &e, *p)?;
            let syndrome: Vec<String> = verdict
                .witness_syndrome
                .values
                .iter()
                .map(i128::to_string)
                .collect();
            writeln!(out, "verdict={:?} syndrome={}", verdict.tag, syndrome.join(",")).ok();
        }
        Command::Logicals { code, p } => {
            for (i, pair) in logical_operators(&load(code)?.matrix, *p)?.iter().enumerate() {
                writeln!(out, "X{}: {}", i + 1, phi_decode(&pair.x)).ok();
                writeln!(out, "Z{}: {}", i + 1, phi_decode(&pair.z)).ok();
            }
        }
        Command::Bounds {
            b,
            q,
            d,
            css,
            code,
        } => {
            let report = match (code, b) {
                (Some(code), _) => report_for(&load(code)?.matrix, *q, *d)?,
                (None, Some(b)) => BoundReport::from_parameters(*b, *q, *d, *css)?,
                (None, None) => return Err(Error::Domain("pass --B or --code".into())),
            };
            write!(
                out,
                "B={} q={} d={} hadamard={} alternative={}",
                report.b, report.q, report.d, report.p_star_hadamard, report.p_star_alternative
            )
            .ok();
            if let Some(c) = &report.p_star_css {
                write!(out, " css={c}").ok();
            }
            writeln!(out, " rotor_ok={}", report.rotor_ok).ok();
        }
        Command::Nullifiers { code, logicals } => {
            let m = load(code)?.matrix;
            for nullifier in to_nullifiers(&m)? {
                writeln!(out, "{nullifier}").ok();
            }
            if let Some(p) = logicals {
                for (i, pair) in logical_quadratures(&m, *p)?.chunks(2).enumerate() {
                    writeln!(out, "xbar{} = {}", i + 1, pair[0]).ok();
                    writeln!(out, "pbar{} = {}", i + 1, pair[1]).ok();
                }
            }
        }
        Command::Dps {
            code,
            coeff_bound,
            w_max,
        } => {
            let res = phase_space_distance_budgeted(&load(code)?.matrix, *coeff_bound, *w_max, budget)?;
            match (&res.value, &res.norm_squared, &res.witness) {
                (Some(v), Some(nsq), Some(w)) => writeln!(
                    out,
                    "d_ps={v} norm_squared={nsq} witness={} coeff_bound={coeff_bound} w_max={w_max}",
                    phi_decode(w)
                ),
                _ => writeln!(out, "d_ps=none coeff_bound={coeff_bound} w_max={w_max}"),
            }
            .ok();
        }
        Command::Catalog { name } => match name {
            Some(name) => {
                let entry = catalog::by_name(name)?;
                writeln!(out, "# {}", describe_entry(&entry)).ok();
                writeln!(out, "# {}", entry.notes).ok();
                out.push_str(&render_code_file(&entry.matrix)?);
            }
            None => {
                for entry in catalog::standard_entries() {
                    writeln!(out, "{}", describe_entry(&entry)).ok();
                }
                writeln!(out, "# names: {}", catalog::NAMES.join(" ")).ok();
            }
        },
        Command::Rank { code, m } => {
            let matrix = load(code)?.matrix;
            let a = IntMatrix::from_i64_rows(&matrix.row_vectors(), 2 * matrix.n());
            let rank = if m == "Z" {
                RowLattice::new(&a).rank()
            } else {
                let modulus: i64 = m
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad modulus `{m}`")))?;
                rank_mod(&a, modulus)?
            };
            writeln!(out, "rank={rank}").ok();
        }
        Command::Stabilize { code, q } => {
            let m = load(code)?.matrix;
            let q = modulus_or(*q, &m)?;
            let state = stabilized_state(&m, q)?;
            for (idx, amp) in state.amplitudes.iter().enumerate() {
                if amp.norm() < 1e-9 {
                    continue;
                }
                let digits: Vec<String> = state.digits(idx).iter().map(usize::to_string).collect();
                writeln!(
                    out,
                    "|{}> {:.6}{:+.6}i",
                    digits.join(","),
                    fmt_component(amp.re),
                    fmt_component(amp.im)
                )
                .ok();
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code: EXIT_DOMAIN,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CliOutput {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };

    let mut stdout = String::new();
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli, &mut stdout)),
            Err(e) => Err(Error::Domain(format!("cannot start {t} threads: {e}"))),
        },
        None => execute(&cli, &mut stdout),
    };
    match result {
        Ok(()) => CliOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: if e.is_budget() { EXIT_BUDGET } else { EXIT_DOMAIN },
            stdout,
            stderr: format!("error: {e}\n"),
        },
    }
}
