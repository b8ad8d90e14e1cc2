//! Front end for the `qtwist` binary: suite runner, element printer and report emitter.
//!
//! [`run`] never touches the process state beyond an optional `--out` file, so
//! tests drive it in-process.

mod elements;
mod suites;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qtwist::coideal::Case;
use qtwist::report::{VerificationReport, REPORT_SCHEMA_VERSION};
use qtwist::Error;
use serde::Serialize;

pub use elements::print_element;
pub use suites::{run_suite, SuiteConfig, SUITES};

/// The JSON schema every `--format json` document validates against.
pub const SCHEMA: &str = include_str!("../schema/output.schema.json");

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qtwist", version, about = "Exact verifier for quantum twisted algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include per-entry timings (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an identity suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "N", default_value_t = 2)]
        big_n: usize,
        /// Rank for suites indexed by it (qds); defaults to N.
        #[arg(long = "n")]
        rank: Option<usize>,
        #[arg(long, default_value = "orth")]
        case: String,
        /// Affine coefficient order `a,b`.
        #[arg(long, default_value = "1,1")]
        order: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long = "max-len", default_value_t = 5)]
        max_len: usize,
    },
    /// The Sklyanin determinant as a short formula or fusion product.
    Sdet {
        #[arg(long, default_value = "orth")]
        case: String,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, value_enum, default_value_t = Method::Short)]
        method: Method,
        #[arg(long, default_value = "gl")]
        image: String,
    },
    /// The quantum determinant of T(u) or Tbar(u).
    Qdet {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        tbar: bool,
    },
    /// The Capelli-type polynomial C(u).
    Casimir {
        #[arg(long = "N")]
        big_n: usize,
        /// Print only the coefficient of u^k.
        #[arg(long)]
        coeff: Option<usize>,
    },
    /// The map pi_N on a permutation.
    PiMap {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        perm: String,
    },
    /// The characteristic identity suite.
    Charid {
        #[arg(long = "N")]
        big_n: usize,
    },
    /// Print a named element.
    Print { id: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Short,
    Fusion,
}

/// What a run produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A computed element in JSON form.
#[derive(Serialize)]
struct ElementDoc<'a> {
    schema_version: &'static str,
    kind: &'static str,
    command: &'a str,
    params: &'a BTreeMap<String, String>,
    value: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<&'a [String]>,
}

/// An element result: canonical text plus optional term list.
pub struct Element {
    pub value: String,
    pub terms: Option<Vec<String>>,
}

impl From<String> for Element {
    fn from(value: String) -> Self {
        Element { value, terms: None }
    }
}

/// Exit code for a kernel error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidGenerator(_) | Error::UnknownVariable(_) | Error::Dimension(_) => {
            EXIT_USAGE
        }
        _ => EXIT_FAIL,
    }
}

/// Exit code for a finished report.
pub fn report_code(r: &VerificationReport) -> i32 {
    let limited = r.entries.iter().any(|e| e.witness.as_deref().is_some_and(|w| w.contains("resource limit exceeded")));
    if limited {
        EXIT_RESOURCE
    } else if r.is_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn parse_case(s: &str) -> Result<Case, Error> {
    s.parse()
}

/// Permutation from `"312"` or `"3,1,2"`.
pub fn parse_perm(s: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::Parse(format!("bad permutation {s:?}"));
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect()
    }
}

enum Produced {
    Report(VerificationReport),
    Element { command: &'static str, params: BTreeMap<String, String>, element: Element },
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn dispatch(cmd: Command) -> Result<Produced, Error> {
    Ok(match cmd {
        Command::Verify { suite, big_n, rank, case, order, seed, trials, max_len } => {
            let cfg = SuiteConfig { n: big_n, rank: rank.unwrap_or(big_n), case: parse_case(&case)?, order: suites::parse_order(&order)?, seed, trials, max_len };
            Produced::Report(run_suite(&suite, &cfg)?)
        }
        Command::Sdet { case, big_n, method, image } => {
            let c = parse_case(&case)?;
            let (id, m) = match method {
                Method::Short => {
                    if c != Case::Orth {
                        return Err(Error::InvalidArgument("the short formula is available for the orth case only".into()));
                    }
                    (format!("sdet:short:{big_n}"), "short")
                }
                Method::Fusion => (format!("sdet:fusion:{c}:{big_n}:{image}"), "fusion"),
            };
            let mut p = params(&[("case", c.to_string()), ("N", big_n.to_string()), ("method", m.into())]);
            if method == Method::Fusion {
                p.insert("image".into(), image);
            }
            Produced::Element { command: "sdet", params: p, element: print_element(&id)? }
        }
        Command::Qdet { big_n, tbar } => {
            let id = if tbar { format!("qdet:{big_n}:tbar") } else { format!("qdet:{big_n}") };
            let p = params(&[("N", big_n.to_string()), ("which", if tbar { "tbar" } else { "t" }.into())]);
            Produced::Element { command: "qdet", params: p, element: print_element(&id)? }
        }
        Command::Casimir { big_n, coeff } => {
            let id = match coeff {
                Some(k) => format!("casimir:{big_n}:coeff:{k}"),
                None => format!("casimir:{big_n}"),
            };
            let mut p = params(&[("N", big_n.to_string())]);
            if let Some(k) = coeff {
                p.insert("coeff".into(), k.to_string());
            }
            Produced::Element { command: "casimir", params: p, element: print_element(&id)? }
        }
        Command::PiMap { n, perm } => {
            let p = parse_perm(&perm)?;
            if p.len() != n {
                return Err(Error::InvalidArgument(format!("permutation {perm:?} has length {}, expected {n}", p.len())));
            }
            let img = qtwist::determinants::pi_map(&p)?;
            let pr = params(&[("n", n.to_string()), ("perm", qtwist::determinants::word(&p))]);
            Produced::Element { command: "pi-map", params: pr, element: img.to_string().into() }
        }
        Command::Charid { big_n } => Produced::Report(qtwist::determinants::characteristic_identity(big_n)),
        Command::Print { id } => {
            let p = params(&[("id", id.clone())]);
            Produced::Element { command: "print", params: p, element: print_element(&id)? }
        }
    })
}

fn render(produced: Produced, format: Format, timings: bool) -> (String, i32) {
    match produced {
        Produced::Report(r) => {
            let r = if timings { r } else { r.without_timings() };
            let code = report_code(&r);
            let text = match format {
                Format::Text => format!("{r}\n"),
                Format::Json => to_json(&r),
            };
            (text, code)
        }
        Produced::Element { command, params, element } => {
            let text = match format {
                Format::Text => format!("{}\n", element.value),
                Format::Json => to_json(&ElementDoc {
                    schema_version: REPORT_SCHEMA_VERSION,
                    kind: "element",
                    command,
                    params: &params,
                    value: &element.value,
                    terms: element.terms.as_deref(),
                }),
            };
            (text, EXIT_PASS)
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses `argv` (program name first), runs the command and returns its output and exit code.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let (text, code) = match dispatch(cli.cmd) {
        Ok(p) => render(p, cli.format, cli.timings),
        Err(e) => return Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    match cli.out {
        Some(path) => match std::fs::write(&path, &text) {
            Ok(()) => Outcome { code, ..Default::default() },
            Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}
