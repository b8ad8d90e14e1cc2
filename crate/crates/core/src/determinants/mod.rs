//! Quantum minors, quantum and Sklyanin determinants, the `π_N` map and the
//! Capelli-type polynomial of the orthogonal algebra.
//!
//! Series are handled through the evaluation map `T(u) ↦ T − T̄u⁻¹`,
//! `T̄(u) ↦ T̄ − Tu`, under which every series becomes a Laurent polynomial in `u`.

mod casimir;
mod minors;
mod pimap;
mod sdet;

use std::sync::Arc;

pub use casimir::{capelli_polynomial, closed_form_3, characteristic_identity, verify_casimir, CasimirBackend, CasimirPolynomial};
pub use minors::{qdet, quantum_minor, verify_minor_identities, verify_qdet, QuantumMinorKey};
pub use pimap::{fixed_points, pi_map, verify_pi, word, PermImage};
pub use sdet::{gamma, sdet_fusion, sdet_short, verify_short_formula, verify_thm_sdetqdet, Image, ShortFactor, ShortFormula, ShortTerm};

use crate::coideal::{form_matrix, Case};
use crate::error::Result;
use crate::freealg::NcPoly;
use crate::presentations::{lift_scalars, shared, t_matrix, tb_matrix, AlgMatrix, Kind, Presentation};
use crate::scalars::{LaurentPoly, VarTable};
use crate::tensorcalc::OperatorMatrix;

/// `T(u)` or `T̄(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    T,
    Tbar,
}

/// Images of `T(u)` and `T̄(u)` in `U_q(gl_N)[u^±]`. The variable table is
/// `(q, u, v)` so that a second spectral parameter is available.
pub struct GlEval {
    pub n: usize,
    pub host: Arc<Presentation>,
    pub vars: VarTable,
    pub t: AlgMatrix,
    pub tb: AlgMatrix,
}

impl GlEval {
    pub fn new(n: usize) -> Result<Self> {
        let host = shared(Kind::UqglN, n, None)?;
        let vars = VarTable::new(&["q", "u", "v"])?;
        let u = LaurentPoly::var(&vars, "u")?;
        let ui = LaurentPoly::var_pow(&vars, "u", -1)?;
        let (t0, tb0) = (t_matrix(n, &vars), tb_matrix(n, &vars));
        let t = t0.sub(&*host, &tb0.scale(&*host, &ui))?;
        let tb = tb0.sub(&*host, &t0.scale(&*host, &u))?;
        Ok(GlEval { n, host, vars, t, tb })
    }

    pub fn matrix(&self, which: Which) -> &AlgMatrix {
        match which {
            Which::T => &self.t,
            Which::Tbar => &self.tb,
        }
    }

    /// `m_ij(z)` for a monomial argument `z`.
    pub fn entry_at(&self, which: Which, i: usize, j: usize, z: &LaurentPoly) -> Result<NcPoly> {
        let e = self.matrix(which).get(&*self.host, i - 1, j - 1).with_vars(&self.vars)?;
        e.subst("u", z)
    }

    /// A matrix with `u ↦ z`.
    pub fn matrix_at(&self, m: &AlgMatrix, z: &LaurentPoly) -> Result<AlgMatrix> {
        m.map(|p| p.with_vars(&self.vars)?.subst("u", z), |p: &NcPoly| p.is_zero())
    }

    /// `S(u) = T(u) G T̄(u⁻¹)ᵗ` and `S̄(u) = T̄(u) G T(u⁻¹)ᵗ`.
    pub fn s_series(&self, case: Case) -> Result<(AlgMatrix, AlgMatrix)> {
        let h = &*self.host;
        let ui = LaurentPoly::var_pow(&self.vars, "u", -1)?;
        let g = form_matrix(case, self.n, &self.vars)?;
        let t_inv = self.matrix_at(&self.t, &ui)?;
        let tb_inv = self.matrix_at(&self.tb, &ui)?;
        let s = OperatorMatrix::product(h, &[&self.t, &g, &tb_inv.transpose()])?;
        let sbar = OperatorMatrix::product(h, &[&self.tb, &g, &t_inv.transpose()])?;
        Ok((s, sbar))
    }

    pub fn u(&self, k: i32, e: i32) -> LaurentPoly {
        spectral(&self.vars, "u", k, e)
    }
}

/// `q^k · name^e`.
pub(crate) fn spectral(vars: &VarTable, name: &str, k: i32, e: i32) -> LaurentPoly {
    &LaurentPoly::q_pow(vars, k) * &LaurentPoly::var_pow(vars, name, e).expect("variable present")
}

/// `(−q)^k`.
pub(crate) fn mq(vars: &VarTable, k: i32) -> LaurentPoly {
    let p = LaurentPoly::q_pow(vars, k);
    if k.rem_euclid(2) == 1 {
        -p
    } else {
        p
    }
}

/// Inversion count.
pub(crate) fn inversions(p: &[usize]) -> usize {
    crate::tensorcalc::perm_length(p)
}

/// `Σ_k c_k u^k` split into coefficients in the table `target`.
pub(crate) fn u_coefficients(p: &NcPoly, target: &VarTable) -> Result<std::collections::BTreeMap<i32, NcPoly>> {
    let mut out = std::collections::BTreeMap::new();
    for (k, c) in p.split_var("u")? {
        out.insert(k, c.with_vars(target)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
