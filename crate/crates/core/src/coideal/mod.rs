//! The matrices `S` and `S̄` inside `U_q(gl_N)` and the identities they satisfy.

mod affine;
mod eval;
pub(crate) mod finite;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use affine::{affine_s_matrix, verify_affine_reflection};
pub use eval::{eval_image, verify_eval_hom, EvalImage};
pub use finite::{verify_central_qds, verify_coideal, verify_dmatrix_family, verify_reflection_finite, verify_sbar_relations};

use crate::error::{Error, Result};
use crate::freealg::{prime, GenSym, NcPoly, Word};
use crate::presentations::{lift_scalars, shared, t_matrix, tb_matrix, AlgMatrix, Kind, Presentation};
use crate::report::CheckResult;
use crate::scalars::{LaurentPoly, VarTable};
use crate::tensorcalc::{index_to_tuple, r_const, ConstVariant, OperatorMatrix};

/// Orthogonal (`S = T T̄ᵗ`) or symplectic (`S = T G T̄ᵗ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    Orth,
    Sympl,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Orth => "orth",
            Case::Sympl => "sympl",
        })
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orth" => Ok(Case::Orth),
            "sympl" => Ok(Case::Sympl),
            _ => Err(Error::Parse(format!("unknown case {s:?}; expected orth or sympl"))),
        }
    }
}

impl Case {
    pub fn check_n(self, n: usize) -> Result<()> {
        if n == 0 || (self == Case::Sympl && n % 2 != 0) {
            return Err(Error::InvalidArgument(format!("{self} case needs {} N, got {n}", if self == Case::Sympl { "even" } else { "positive" })));
        }
        Ok(())
    }
}

/// `S` and `S̄` with entries in host normal form.
pub struct SMatrixPair {
    pub case: Case,
    pub n: usize,
    pub host: Arc<Presentation>,
    pub s: AlgMatrix,
    pub sbar: AlgMatrix,
}

impl SMatrixPair {
    /// Entry `s_ij` (1-based).
    pub fn s_at(&self, i: usize, j: usize) -> NcPoly {
        self.s.get(&*self.host, i - 1, j - 1)
    }

    pub fn sbar_at(&self, i: usize, j: usize) -> NcPoly {
        self.sbar.get(&*self.host, i - 1, j - 1)
    }

    /// `s_ii'⁻¹ = q⁻¹ t_i'i' t̄_ii` for odd `i`.
    pub fn s_inv(&self, i: usize) -> Result<NcPoly> {
        sinv_host(&self.host, i)
    }
}

pub(crate) fn sinv_host(host: &Presentation, i: usize) -> Result<NcPoly> {
    let ip = prime(i);
    let w = Word::from_slice(&[GenSym::t(ip, ip)?, GenSym::tb(i, i)?]);
    host.normal_form(&NcPoly::term(w, LaurentPoly::q_pow(&host.vars, -1)))
}

pub(crate) fn host(n: usize) -> Result<Arc<Presentation>> {
    shared(Kind::UqglN, n, None)
}

/// `G` for the symplectic case, the identity otherwise.
pub(crate) fn form_matrix(case: Case, n: usize, vars: &VarTable) -> Result<AlgMatrix> {
    match case {
        Case::Orth => lift_scalars(&OperatorMatrix::identity(&crate::tensorcalc::Scalars(vars.clone()), n, 1)),
        Case::Sympl => lift_scalars(&r_const(vars, n, ConstVariant::G)?),
    }
}

pub(crate) fn scalar(vars: &VarTable, v: ConstVariant, n: usize) -> Result<AlgMatrix> {
    lift_scalars(&r_const(vars, n, v)?)
}

/// Builds `S` and `S̄` in the host `U_q(gl_N)`.
pub fn s_matrix(case: Case, n: usize) -> Result<SMatrixPair> {
    case.check_n(n)?;
    let host = host(n)?;
    let vars = host.vars.clone();
    let (t, tb) = (t_matrix(n, &vars), tb_matrix(n, &vars));
    let g = form_matrix(case, n, &vars)?;
    let s = OperatorMatrix::product(&*host, &[&t, &g, &tb.transpose()])?;
    let sbar = OperatorMatrix::product(&*host, &[&tb, &g, &t.transpose()])?;
    Ok(SMatrixPair { case, n, host, s, sbar })
}

/// Normal form of every entry.
pub(crate) fn nf_matrix(host: &Presentation, m: &AlgMatrix) -> Result<AlgMatrix> {
    m.map(|p| host.normal_form(p), |p: &NcPoly| p.is_zero())
}

/// Compares two matrices whose entries are already in normal form.
pub(crate) fn same(lhs: &AlgMatrix, rhs: &AlgMatrix) -> CheckResult {
    let keys: std::collections::BTreeSet<(usize, usize)> =
        lhs.entries().keys().chain(rhs.entries().keys()).copied().collect();
    for (i, j) in keys {
        let zero = || NcPoly::zero(&VarTable::q());
        let a = lhs.entries().get(&(i, j)).cloned().unwrap_or_else(zero);
        let b = rhs.entries().get(&(i, j)).cloned().unwrap_or_else(zero);
        let d = a.sub(&b);
        if !d.is_zero() {
            let (ti, tj) = (index_to_tuple(lhs.n(), lhs.factors(), i), index_to_tuple(lhs.n(), lhs.factors(), j));
            return Ok(Some(format!("entry {ti:?},{tj:?}: lhs - rhs = {d}")));
        }
    }
    Ok(None)
}

/// Zero check for one polynomial, with the polynomial as witness.
pub(crate) fn zero(p: &NcPoly) -> CheckResult {
    Ok(if p.is_zero() { None } else { Some(format!("remainder {p}")) })
}

/// `x₁` and `x₂` in the twofold tensor product.
pub(crate) fn legs(m: &AlgMatrix) -> Result<(AlgMatrix, AlgMatrix)> {
    Ok((m.embed(&[1], 2)?, m.embed(&[2], 2)?))
}

/// Product of a chain in the host, entries normal-formed along the way.
pub(crate) fn prod(host: &Presentation, chain: &[&AlgMatrix]) -> Result<AlgMatrix> {
    OperatorMatrix::product(host, chain)
}

pub(crate) fn add(host: &Presentation, a: &AlgMatrix, b: &AlgMatrix) -> Result<AlgMatrix> {
    a.add(host, b)
}

pub(crate) fn scaled(host: &Presentation, a: &AlgMatrix, c: &LaurentPoly) -> AlgMatrix {
    a.scale(host, c)
}

pub(crate) fn q(vars: &VarTable, k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(vars, k)
}
