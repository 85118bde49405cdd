//! Command-line front end for the `coinvariant` library.
//!
//! [`run`] parses arguments and returns the exit status together with the
//! text destined for stdout and stderr, so the binary is a thin shell.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use coinvariant::oracle::verify_cell;
use coinvariant::series::{
    catalan_series, character_series, cyclic_character_series, cyclic_dimension, cyclic_hilbert, dimension,
    hilbert_series,
};
use coinvariant::superring::{basis_enumerate, cyclic_basis_enumerate};
use coinvariant::{GradingPoly, GroupKind, Layout};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "coinv",
    version,
    about = "Coinvariant rings of dihedral and cyclic groups in bosonic and fermionic variables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Universal character series
    Char {
        #[command(flatten)]
        cell: Cell,
        /// Also print the multiplicity of each character as a polynomial
        #[arg(long)]
        expand: bool,
    },
    /// Multigraded Hilbert series
    Hilb {
        #[command(flatten)]
        cell: Cell,
    },
    /// Total dimension
    Dim {
        #[command(flatten)]
        cell: Cell,
    },
    /// Monomial basis, one monomial per line
    Basis {
        #[command(flatten)]
        cell: Cell,
    },
    /// Graded multiplicity of the sign character (dihedral only)
    Catalan {
        #[command(flatten)]
        cell: Cell,
    },
    /// Check closed forms against the invariant-theory oracle over a sweep
    Verify {
        #[arg(long, value_enum, default_value_t = Group::Dihedral)]
        group: Group,
        /// Order or range, e.g. `3` or `2-5`
        #[arg(long)]
        n: Span,
        #[arg(long, default_value = "0")]
        k: Span,
        #[arg(long, default_value = "0")]
        j: Span,
        /// Highest total degree examined by the oracle (default n + 2)
        #[arg(long)]
        degree_cap: Option<u32>,
        /// Random monomials checked for ideal membership per cell
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct Cell {
    #[arg(long, value_enum, default_value_t = Group::Dihedral)]
    group: Group,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    j: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Dihedral,
    Cyclic,
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Dihedral => GroupKind::Dihedral,
            Group::Cyclic => GroupKind::Cyclic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Inclusive integer range written `a` or `a-b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Span {
    lo: u32,
    hi: u32,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("expected an integer or range, got `{s}`"));
        let span = match s.split_once('-') {
            Some((a, b)) => Span { lo: parse(a)?, hi: parse(b)? },
            None => {
                let v = parse(s)?;
                Span { lo: v, hi: v }
            }
        };
        if span.lo > span.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(span)
    }
}

impl Span {
    fn values(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::usage(text) };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn header(cell: &Cell) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("group".into(), json!(GroupKind::from(cell.group).to_string()));
    m.insert("n".into(), json!(cell.n));
    m.insert("k".into(), json!(cell.k));
    m.insert("j".into(), json!(cell.j));
    m
}

fn emit(format: Format, text: String, mut json: serde_json::Map<String, Value>, command: &str) -> Outcome {
    match format {
        Format::Text => Outcome::ok(text),
        Format::Json => {
            json.insert("command".into(), json!(command));
            Outcome::ok(render_json(&Value::Object(json)))
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn poly_json(p: &GradingPoly) -> Value {
    let mut v = serde_json::to_value(p.to_serial()).expect("polynomials serialize");
    if let Value::Object(m) = &mut v {
        m.insert("text".into(), json!(p.to_string()));
    }
    v
}

fn execute(command: Command) -> coinvariant::Result<Outcome> {
    Ok(match command {
        Command::Char { cell, expand } => {
            let series = match cell.group {
                Group::Dihedral => character_series(cell.n, cell.k, cell.j)?,
                Group::Cyclic => cyclic_character_series(cell.n, cell.k, cell.j)?,
            };
            let labels = series.label_polynomials();
            let mut text = format!("{series}\n");
            if expand {
                for (label, poly) in &labels {
                    let _ = writeln!(text, "{label}: {poly}");
                }
            }
            let mut json = header(&cell);
            json.insert("series".into(), json!(series.to_string()));
            if expand {
                let map: BTreeMap<String, Value> = labels.iter().map(|(l, p)| (l.to_string(), poly_json(p))).collect();
                json.insert("expansion".into(), json!(map));
            }
            emit(cell.format, text, json, "char")
        }
        Command::Hilb { cell } => {
            let h = match cell.group {
                Group::Dihedral => hilbert_series(cell.n, cell.k, cell.j)?,
                Group::Cyclic => cyclic_hilbert(cell.n, cell.k, cell.j)?,
            };
            let mut json = header(&cell);
            json.insert("series".into(), poly_json(&h));
            emit(cell.format, format!("{h}\n"), json, "hilb")
        }
        Command::Dim { cell } => {
            let d = match cell.group {
                Group::Dihedral => dimension(cell.n, cell.k, cell.j)?,
                Group::Cyclic => cyclic_dimension(cell.n, cell.k, cell.j)?,
            };
            let mut json = header(&cell);
            json.insert("dimension".into(), json!(d.to_string()));
            emit(cell.format, format!("{d}\n"), json, "dim")
        }
        Command::Basis { cell } => {
            let (layout, basis) = match cell.group {
                Group::Dihedral => (Layout::dihedral(cell.k, cell.j)?, basis_enumerate(cell.n, cell.k, cell.j)?),
                Group::Cyclic => (Layout::cyclic(cell.k, cell.j)?, cyclic_basis_enumerate(cell.n, cell.k, cell.j)?),
            };
            let names: Vec<String> = basis.iter().map(|m| layout.format_monomial(m)).collect();
            let mut text = String::new();
            for name in &names {
                let _ = writeln!(text, "{name}");
            }
            let mut json = header(&cell);
            json.insert("count".into(), json!(names.len().to_string()));
            json.insert("monomials".into(), json!(names));
            emit(cell.format, text, json, "basis")
        }
        Command::Catalan { cell } => {
            if cell.group != Group::Dihedral {
                return Ok(Outcome::usage("error: catalan is defined for the dihedral group only\n"));
            }
            let c = catalan_series(cell.n, cell.k, cell.j)?;
            let mut json = header(&cell);
            json.insert("series".into(), poly_json(&c));
            emit(cell.format, format!("{c}\n"), json, "catalan")
        }
        Command::Verify { group, n, k, j, degree_cap, samples, format } => {
            let kind = GroupKind::from(group);
            let cells: Vec<(u32, usize, usize)> = n
                .values()
                .flat_map(|n| k.values().flat_map(move |k| j.values().map(move |j| (n, k as usize, j as usize))))
                .collect();
            for &(n, _, _) in &cells {
                kind.check_order(n)?;
                if let Some(cap) = degree_cap {
                    if cap < n + 1 {
                        return Err(coinvariant::Error::DegreeCapTooSmall { cap, min: n + 1 });
                    }
                }
            }
            let reports = cells
                .par_iter()
                .map(|&(n, k, j)| verify_cell(kind, n, k, j, degree_cap, samples))
                .collect::<coinvariant::Result<Vec<_>>>()?;
            let passed = reports.iter().filter(|r| r.passed).count();
            let all = passed == reports.len();
            let mut text = String::new();
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    text,
                    "{status} {} n={} k={} j={} cap={} basis={}",
                    r.group, r.n, r.k, r.j, r.cap, r.certificate.basis_size
                );
                for m in &r.mismatches {
                    let _ = writeln!(
                        text,
                        "  mismatch at {:?}: expected {}, oracle {}",
                        m.multidegree, m.expected, m.found
                    );
                }
                for v in &r.violations {
                    let _ = writeln!(text, "  nonzero component above the top degree at {v:?}");
                }
                for f in &r.certificate.failures {
                    let _ = writeln!(text, "  {} check failed at {:?}: {}", f.check, f.multidegree, f.witness);
                }
            }
            let _ = writeln!(text, "{passed} of {} cells passed", reports.len());
            let mut json = serde_json::Map::new();
            json.insert("group".into(), json!(kind.to_string()));
            json.insert("passed".into(), json!(all));
            json.insert("cells".into(), serde_json::to_value(&reports).expect("reports serialize"));
            let mut out = emit(format, text, json, "verify");
            if !all {
                out.code = EXIT_VERIFY;
            }
            out
        }
    })
}
