//! Suite names and their verifiers.

use qtwist::coideal::{self, Case};
use qtwist::determinants as det;
use qtwist::presentations::verify_pbw;
use qtwist::report::VerificationReport;
use qtwist::tensorcalc::verify_tensor_identities;
use qtwist::Error;

/// Suite names accepted by `verify --suite`, aliases excluded.
pub const SUITES: &[&str] = &[
    "tensor",
    "presentations",
    "reflection-finite",
    "sbar",
    "coideal",
    "eval-hom",
    "affine-reflection",
    "dmatrix",
    "qds",
    "minors",
    "qdet",
    "sdet",
    "sdet-short",
    "determinants",
    "pi",
    "casimir",
    "charid",
];

/// Validated parameters of a suite run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    /// Rank for `qds`.
    pub rank: usize,
    pub case: Case,
    pub order: (usize, usize),
    pub seed: u64,
    pub trials: usize,
    pub max_len: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 2, rank: 2, case: Case::Orth, order: (1, 1), seed: 7, trials: 500, max_len: 5 }
    }
}

pub(crate) fn parse_order(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("bad order {s:?}; expected a,b"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn canonical(name: &str) -> Option<&'static str> {
    let alias = match name {
        "evalhom" => "eval-hom",
        "affine" => "affine-reflection",
        "pbw" => "presentations",
        "thm" => "sdet",
        other => other,
    };
    SUITES.iter().copied().find(|s| *s == alias)
}

/// Runs the named suite.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    let suite = canonical(name).ok_or_else(|| Error::InvalidArgument(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", "))))?;
    if cfg.n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    let (n, c) = (cfg.n, cfg.case);
    if matches!(suite, "reflection-finite" | "sbar" | "coideal" | "eval-hom" | "affine-reflection" | "sdet") {
        c.check_n(n)?;
    }
    Ok(match suite {
        "tensor" => verify_tensor_identities(n),
        "presentations" => verify_pbw(cfg.trials, cfg.max_len, cfg.seed),
        "reflection-finite" => coideal::verify_reflection_finite(c, n),
        "sbar" => coideal::verify_sbar_relations(c, n),
        "coideal" => coideal::verify_coideal(c, n),
        "eval-hom" => coideal::verify_eval_hom(c, n),
        "affine-reflection" => coideal::verify_affine_reflection(c, n, cfg.order),
        "dmatrix" => coideal::verify_dmatrix_family(n),
        "qds" => coideal::verify_central_qds(cfg.rank),
        "minors" => det::verify_minor_identities(n),
        "qdet" => det::verify_qdet(n),
        "sdet" => det::verify_thm_sdetqdet(c, n),
        "sdet-short" => det::verify_short_formula(n),
        "determinants" => {
            let mut rep = VerificationReport::new("determinants").param("n", n).param("case", c);
            rep.absorb("minors: ", det::verify_minor_identities(n));
            rep.absorb("qdet: ", det::verify_qdet(n));
            if c.check_n(n).is_ok() {
                rep.absorb("sdet: ", det::verify_thm_sdetqdet(c, n));
            }
            rep
        }
        "pi" => det::verify_pi(n),
        "casimir" => det::verify_casimir(n),
        "charid" => det::characteristic_identity(n),
        _ => unreachable!("suite list and dispatch agree"),
    })
}
