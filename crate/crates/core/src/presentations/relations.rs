use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::freealg::{prime, GenSym, NcPoly, Word};
use crate::scalars::{LaurentPoly, VarTable};
use crate::tensorcalc::{FreeAlgebra, OperatorMatrix};

pub type AlgMatrix = OperatorMatrix<NcPoly>;

/// Entry-wise differences `lhs − rhs`, deduplicated up to sign.
pub fn derive_relations(lhs: &AlgMatrix, rhs: &AlgMatrix) -> Result<Vec<NcPoly>> {
    if lhs.n() != rhs.n() || lhs.factors() != rhs.factors() {
        return Err(Error::Dimension(format!(
            "({}, {}) vs ({}, {})",
            lhs.n(),
            lhs.factors(),
            rhs.n(),
            rhs.factors()
        )));
    }
    let vars = lhs.entries().values().chain(rhs.entries().values()).fold(VarTable::q(), |v, p| {
        v.join(p.vars()).unwrap_or(v)
    });
    let diff = lhs.sub(&FreeAlgebra(vars), rhs)?;
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    for p in diff.entries().values() {
        let key = p.to_string();
        let neg = p.neg().to_string();
        if seen.contains(&key) || seen.contains(&neg) {
            continue;
        }
        seen.insert(key);
        out.push(p.clone());
    }
    Ok(out)
}

/// A scalar matrix viewed as a matrix over the free algebra.
pub fn lift_scalars(m: &OperatorMatrix<LaurentPoly>) -> Result<AlgMatrix> {
    m.map(|c| Ok(NcPoly::scalar(c.clone())), |p: &NcPoly| p.is_zero())
}

/// One-factor matrix from an entry function.
pub fn gen_matrix(n: usize, vars: &VarTable, f: impl Fn(usize, usize) -> Option<NcPoly>) -> AlgMatrix {
    let ring = FreeAlgebra(vars.clone());
    let mut m = OperatorMatrix::zero(n, 1);
    for i in 1..=n {
        for j in 1..=n {
            if let Some(p) = f(i, j) {
                m.set(&ring, i - 1, j - 1, p);
            }
        }
    }
    m
}

fn g(gs: Result<GenSym>, vars: &VarTable) -> Option<NcPoly> {
    gs.ok().map(|g| NcPoly::gen(g, vars))
}

pub fn t_matrix(n: usize, vars: &VarTable) -> AlgMatrix {
    gen_matrix(n, vars, |i, j| g(GenSym::t(i, j), vars))
}

pub fn tb_matrix(n: usize, vars: &VarTable) -> AlgMatrix {
    gen_matrix(n, vars, |i, j| g(GenSym::tb(i, j), vars))
}

/// The orthogonal generator matrix: unit diagonal, zero above it.
pub fn s_orth_matrix(n: usize, vars: &VarTable) -> AlgMatrix {
    gen_matrix(n, vars, |i, j| if i == j { Some(NcPoly::one(vars)) } else { g(GenSym::s_orth(i, j), vars) })
}

/// The symplectic generator matrix: lower block triangular.
pub fn s_sympl_matrix(n: usize, vars: &VarTable) -> AlgMatrix {
    gen_matrix(n, vars, |i, j| g(GenSym::s_sympl(i, j), vars))
}

/// `Σ_{r ≤ d} x^(r) z^{sign·r}` for the series `T(z)` (sign −1) or `T̄(z)` (sign +1).
pub fn series_matrix(n: usize, d: usize, vars: &VarTable, bar: bool, z: &str, sign: i32) -> Result<AlgMatrix> {
    let ring = FreeAlgebra(vars.clone());
    let mut m = OperatorMatrix::zero(n, 1);
    for r in 0..=d {
        let zr = LaurentPoly::var_pow(vars, z, sign * r as i32)?;
        for i in 1..=n {
            for j in 1..=n {
                let gs = if bar { GenSym::tb_deg(r, i, j) } else { GenSym::t_deg(r, i, j) };
                if let Ok(gs) = gs {
                    m.add_at(&ring, i - 1, j - 1, &NcPoly::term(Word::single(gs), zr.clone()));
                }
            }
        }
    }
    Ok(m)
}

/// Relations `q^{k}`-free unit pairs `a·b − 1`.
pub fn unit_relations(pairs: &[(GenSym, GenSym)], vars: &VarTable) -> Vec<NcPoly> {
    pairs
        .iter()
        .map(|&(a, b)| NcPoly::term(Word::from_slice(&[a, b]), LaurentPoly::one(vars)).sub(&NcPoly::one(vars)))
        .collect()
}

/// `R S₁ Rᵗ S₂ − S₂ Rᵗ S₁ R` as relations.
pub fn reflection_relations(s: &AlgMatrix, vars: &VarTable) -> Result<Vec<NcPoly>> {
    let n = s.n();
    let ring = FreeAlgebra(vars.clone());
    let r = crate::tensorcalc::r_const(vars, n, crate::tensorcalc::ConstVariant::R)?;
    let rt = r.partial_transpose(1)?;
    let (r, rt) = (lift_scalars(&r)?, lift_scalars(&rt)?);
    let (s1, s2) = (s.embed(&[1], 2)?, s.embed(&[2], 2)?);
    let lhs = OperatorMatrix::product(&ring, &[&r, &s1, &rt, &s2])?;
    let rhs = OperatorMatrix::product(&ring, &[&s2, &rt, &s1, &r])?;
    derive_relations(&lhs, &rhs)
}

/// `R X₁ Y₂ − Y₂ X₁ R` for one-factor matrices `X`, `Y`.
pub fn rtt_relations(r: &AlgMatrix, x: &AlgMatrix, y: &AlgMatrix, vars: &VarTable) -> Result<Vec<NcPoly>> {
    let ring = FreeAlgebra(vars.clone());
    let (x1, y2) = (x.embed(&[1], 2)?, y.embed(&[2], 2)?);
    let lhs = OperatorMatrix::product(&ring, &[r, &x1, &y2])?;
    let rhs = OperatorMatrix::product(&ring, &[&y2, &x1, r])?;
    derive_relations(&lhs, &rhs)
}

/// `s_{i'i'}s_ii − q² s_{i'i}s_{ii'} − q³` for odd `i`.
pub fn qds_element(i: usize, vars: &VarTable) -> Result<NcPoly> {
    let ip = prime(i);
    let w = |a: GenSym, b: GenSym| Word::from_slice(&[a, b]);
    let mut p = NcPoly::term(w(GenSym::s_sympl(ip, ip)?, GenSym::s_sympl(i, i)?), LaurentPoly::one(vars));
    p.add_term(w(GenSym::s_sympl(ip, i)?, GenSym::s_sympl(i, ip)?), -LaurentPoly::q_pow(vars, 2));
    Ok(p.sub(&NcPoly::scalar(LaurentPoly::q_pow(vars, 3))))
}

/// Splits a relation with spectral coefficients into its coefficients of `u^a v^b`.
pub fn split_spectral(p: &NcPoly, target: &VarTable) -> Result<Vec<((i32, i32), NcPoly)>> {
    let mut out = Vec::new();
    for (a, pa) in p.split_var("u")? {
        for (b, pb) in pa.split_var("v")? {
            out.push(((a, b), pb.with_vars(target)?));
        }
    }
    Ok(out)
}
