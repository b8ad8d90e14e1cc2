//! Named elements for `print`.
//!
//! Grammar (colon separated):
//! `gamma:<case>:<N>`, `qdet:<N>[:tbar]`, `minor:<N>:<rows>:<cols>[:tbar]`,
//! `casimir:<N>`, `casimir:<N>:coeff:<k>`, `casimir:3:closed`,
//! `sdet:short:<N>`, `sdet:fusion:<case>:<N>[:gl|:twisted]`, `pi:<perm>`.

use qtwist::coideal::Case;
use qtwist::determinants::{self as det, CasimirBackend, GlEval, Image, QuantumMinorKey, Which};
use qtwist::Error;

use crate::{parse_perm, Element};

fn num(s: &str) -> Result<usize, Error> {
    s.parse().map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))
}

fn unknown(id: &str) -> Error {
    Error::InvalidArgument(format!("unknown element id {id:?}"))
}

fn which(flag: Option<&str>, id: &str) -> Result<Which, Error> {
    match flag {
        None | Some("t") => Ok(Which::T),
        Some("tbar") => Ok(Which::Tbar),
        _ => Err(unknown(id)),
    }
}

/// Canonical text of the element named by `id`.
pub fn print_element(id: &str) -> Result<Element, Error> {
    let parts: Vec<&str> = id.split(':').collect();
    let text = match parts.as_slice() {
        ["gamma", case, n] => det::gamma(case.parse::<Case>()?, num(n)?)?.to_string(),
        ["qdet", n, rest @ ..] if rest.len() <= 1 => {
            let ctx = GlEval::new(num(n)?)?;
            det::qdet(&ctx, which(rest.first().copied(), id)?)?.to_string()
        }
        ["minor", n, a, b, rest @ ..] if rest.len() <= 1 => {
            let ctx = GlEval::new(num(n)?)?;
            let key = QuantumMinorKey::new(which(rest.first().copied(), id)?, &parse_perm(a)?, &parse_perm(b)?);
            det::quantum_minor(&ctx, &key)?.to_string()
        }
        ["casimir", "3", "closed"] => det::closed_form_3()?.to_string(),
        ["casimir", n] => det::capelli_polynomial(num(n)?, CasimirBackend::Abstract)?.as_poly()?.to_string(),
        ["casimir", n, "coeff", k] => {
            let cp = det::capelli_polynomial(num(n)?, CasimirBackend::Abstract)?;
            let k = num(k)?;
            cp.coeffs.get(k).map(|c| c.to_string()).unwrap_or_else(|| "0".into())
        }
        ["sdet", "short", n] => {
            let f = det::sdet_short(num(n)?)?;
            let terms = f.terms.iter().map(|t| t.to_string()).collect();
            return Ok(Element { value: f.to_string(), terms: Some(terms) });
        }
        ["sdet", "fusion", case, n, rest @ ..] if rest.len() <= 1 => {
            let image = match rest.first().copied() {
                None | Some("gl") => Image::Gl,
                Some("twisted") => Image::Twisted,
                _ => return Err(unknown(id)),
            };
            let c: Case = case.parse()?;
            let n = num(n)?;
            c.check_n(n)?;
            det::sdet_fusion(c, n, image)?.to_string()
        }
        ["pi", p] => det::pi_map(&parse_perm(p)?)?.to_string(),
        _ => return Err(unknown(id)),
    };
    Ok(text.into())
}
