use std::fmt;

use super::minors::{central_in_host, minor_at};
use super::*;
use crate::coideal::{eval_image, s_matrix};
use crate::error::Error;
use crate::presentations::rank_of_rows;
use crate::report::{CheckResult, VerificationReport};
use crate::scalars::ScalarFraction;
use crate::tensorcalc::{permutations, q_antisymmetrizer, r_spectral_at, tuple_to_index};

/// Where `S(u)` is sent before fusing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Image {
    /// `S(u) = T(u) G T̄(u⁻¹)ᵗ` under the evaluation of `U_q(ĝl_N)`.
    Gl,
    /// `S(u) ↦ S + c u⁻¹ S̄` in the finite twisted algebra inside `U_q(gl_N)`.
    Twisted,
}

impl fmt::Display for Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Image::Gl => "gl",
            Image::Twisted => "twisted",
        })
    }
}

/// `γ_N(u)` over `(q, u)`.
pub fn gamma(case: Case, n: usize) -> Result<ScalarFraction> {
    case.check_n(n)?;
    let vars = VarTable::new(&["q", "u"])?;
    let mut num = LaurentPoly::one(&vars);
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            num = &num * &(&spectral(&vars, "u", 2 * i - 2, -1) - &spectral(&vars, "u", -2 * j + 2, 1));
        }
    }
    let den = match case {
        Case::Orth => LaurentPoly::one(&vars),
        Case::Sympl => {
            let h = (n / 2) as i32;
            num = &num * &(&LaurentPoly::q_pow(&vars, h - 2) - &spectral(&vars, "u", h, 2));
            &LaurentPoly::q_pow(&vars, 2 * h - 2) - &spectral(&vars, "u", -2 * h, 2)
        }
    };
    ScalarFraction::new(num, den)
}

/// The Sklyanin determinant by fusion: the `((1..N), (1..N))` entry of
/// `A_N S₁(u₁) R₁₂ᵗ ⋯ R₁Nᵗ S₂(u₂) ⋯ S_N(u_N)`, `u_i = q^{−2i+2}u`,
/// `R_ijᵗ = R_ijᵗ(u_i⁻¹, u_j)`. Only the needed row of `A_N` is carried.
pub fn sdet_fusion(case: Case, n: usize, image: Image) -> Result<NcPoly> {
    case.check_n(n)?;
    match image {
        Image::Gl => {
            let ctx = GlEval::new(n)?;
            let (s, _) = ctx.s_series(case)?;
            fuse(&ctx.host, &ctx.vars, n, |z| ctx.matrix_at(&s, z))
        }
        Image::Twisted => {
            let img = eval_image(case, n)?;
            let host = s_matrix(case, n)?.host;
            let vars = img.vars.clone();
            fuse(&host, &vars, n, |z| img.s_u.map(|p| p.subst("u", z), |p: &NcPoly| p.is_zero()))
        }
    }
}

fn fuse(h: &Presentation, vars: &VarTable, n: usize, s_at: impl Fn(&LaurentPoly) -> Result<AlgMatrix>) -> Result<NcPoly> {
    let args: Vec<LaurentPoly> = (0..n as i32).map(|i| spectral(vars, "u", -2 * i, 1)).collect();
    let diag: Vec<usize> = (1..=n).collect();
    let top = tuple_to_index(n, &diag);
    let a = q_antisymmetrizer(vars, n, n)?;
    let mut row = OperatorMatrix::zero(n, n);
    for (&(i, j), c) in a.entries() {
        if i == top {
            row.set(h, i, j, NcPoly::scalar(c.clone()));
        }
    }
    for i in 0..n {
        row = row.mul(h, &s_at(&args[i])?.embed(&[i + 1], n)?)?;
        for j in i + 1..n {
            let inv = args[i].unit_inverse().ok_or_else(|| Error::InvalidArgument("spectral argument".into()))?;
            let rt = r_spectral_at(vars, n, &inv, &args[j])?.partial_transpose(1)?;
            row = row.mul(h, &lift_scalars(&rt)?.embed(&[i + 1, j + 1], n)?)?;
        }
    }
    Ok(row.get(h, top, top))
}

/// One factor `s̄ᵗ_ij(q^k u⁻¹)` or `s_ij(q^k u)` of the short formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortFactor {
    pub bar: bool,
    pub i: usize,
    pub j: usize,
    pub q_shift: i32,
}

impl ShortFactor {
    fn arg(&self, vars: &VarTable) -> LaurentPoly {
        spectral(vars, "u", self.q_shift, if self.bar { -1 } else { 1 })
    }
}

impl fmt::Display for ShortFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = VarTable::new(&["q", "u"]).expect("valid table");
        let name = if self.bar { "sbar^t" } else { "s" };
        write!(f, "{name}[{},{}]({})", self.i, self.j, self.arg(&vars))
    }
}

/// `(−q)^k` times a product of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortTerm {
    pub q_power: i32,
    pub factors: Vec<ShortFactor>,
}

impl fmt::Display for ShortTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.factors.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("*");
        let c = mq(&VarTable::q(), self.q_power);
        if c.is_one() {
            write!(f, "{body}")
        } else if (-&c).is_one() {
            write!(f, "-{body}")
        } else {
            write!(f, "{c}*{body}")
        }
    }
}

/// The short formula for `c(u) = γ_N(u)⁻¹ sdet S(u)`, orthogonal case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortFormula {
    pub n: usize,
    pub terms: Vec<ShortTerm>,
}

impl fmt::Display for ShortFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            let s = t.to_string();
            match (k, s.strip_prefix('-')) {
                (0, _) => write!(f, "{s}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// The term list, one term per permutation in lexicographic order.
pub fn sdet_short(n: usize) -> Result<ShortFormula> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("short formula needs N >= 2, got {n}")));
    }
    let half = n / 2;
    let mut terms = Vec::new();
    for p in permutations(n) {
        let pp = pi_map(&p)?.p_prime;
        let factors = (1..=n)
            .map(|k| {
                let bar = k <= half;
                let q_shift = if bar { 2 * k as i32 - 2 } else { -2 * k as i32 + 2 };
                ShortFactor { bar, i: p[k - 1], j: pp[k - 1], q_shift }
            })
            .collect();
        terms.push(ShortTerm { q_power: inversions(&pp) as i32 - inversions(&p) as i32, factors });
    }
    Ok(ShortFormula { n, terms })
}

impl ShortFormula {
    /// The formula in the evaluation image of `U_q(ĝl_N)`.
    pub fn evaluate(&self) -> Result<NcPoly> {
        let ctx = GlEval::new(self.n)?;
        let (s, sbar) = ctx.s_series(Case::Orth)?;
        let h = &*ctx.host;
        let mut acc = NcPoly::zero(&ctx.vars);
        for t in &self.terms {
            let mut x = NcPoly::scalar(mq(&ctx.vars, t.q_power));
            for f in &t.factors {
                let (m, r, c) = if f.bar { (&sbar, f.j, f.i) } else { (&s, f.i, f.j) };
                let e = m.get(h, r - 1, c - 1).with_vars(&ctx.vars)?.subst("u", &f.arg(&ctx.vars))?;
                x = h.mul(&x, &e)?;
            }
            acc.add_assign(&x);
        }
        Ok(acc)
    }
}

/// `γ · short = sdet_fusion` in the evaluation image, orthogonal case.
pub fn verify_short_formula(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("sdet-short").param("n", n);
    rep.check("gamma * short formula = fusion", || {
        let short = sdet_short(n)?.evaluate()?;
        let fused = sdet_fusion(Case::Orth, n, Image::Gl)?;
        let g = gamma(Case::Orth, n)?;
        let g = g.as_poly().ok_or_else(|| Error::InvalidArgument("orthogonal gamma is a polynomial".into()))?;
        let d = short.scale(&g).sub(&fused);
        Ok((!d.is_zero()).then(|| format!("difference {d}")))
    });
    rep
}

/// `sdet S(u) = γ_N(u) qdet T(u) qdet T̄(q^{2N−2}u⁻¹)` cross-multiplied, centrality
/// of the fused coefficients in both images, and independence of `c₁, c₂`.
pub fn verify_thm_sdetqdet(case: Case, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("sdet").param("case", case).param("n", n);
    let setup = (|| -> Result<_> {
        let ctx = GlEval::new(n)?;
        let fused = sdet_fusion(case, n, Image::Gl)?;
        let all: Vec<usize> = (1..=n).collect();
        let d = minor_at(&ctx, &QuantumMinorKey::new(Which::T, &all, &all), &ctx.u(0, 1))?;
        let db = minor_at(&ctx, &QuantumMinorKey::new(Which::Tbar, &all, &all), &ctx.u(2 * n as i32 - 2, -1))?;
        let c = ctx.host.mul(&d, &db)?;
        Ok((ctx, fused, c))
    })();
    let (ctx, fused, c) = match setup {
        Ok(x) => x,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    let h = &*ctx.host;
    rep.check("den * sdet = num * qdet T(u) qdet Tbar(q^(2N-2) u^-1)", || {
        let g = gamma(case, n)?;
        let d = fused.scale(g.den()).sub(&c.scale(g.num()));
        Ok((!d.is_zero()).then(|| format!("difference {d}")))
    });
    rep.check("sdet coefficients are central in U_q(gl_N)", || central_in_host(h, &fused));
    rep.check("c(u) = 1 + c_1 u^-1 + ...", || {
        let cs = u_coefficients(&c, &h.vars)?;
        let top = cs.keys().next_back().copied();
        let c0 = cs.get(&0).cloned().unwrap_or_else(|| NcPoly::zero(&h.vars));
        Ok(if top != Some(0) || c0 != NcPoly::one(&h.vars) {
            Some(format!("leading part {c0}, top power {top:?}"))
        } else {
            None
        })
    });
    if n >= 2 {
        rep.check("c_1 and c_2 are linearly independent", || independent(&c, &h.vars));
    }
    rep.check("twisted image: sdet coefficients commute with S and Sbar", || twisted_central(case, n));
    if case == Case::Orth {
        rep.check("twisted image: sdet matches the Capelli polynomial", || twisted_capelli(n));
    }
    rep
}

fn independent(c: &NcPoly, host_vars: &VarTable) -> CheckResult {
    let cs = u_coefficients(c, host_vars)?;
    let picked: Vec<NcPoly> = (1..).map_while(|k| cs.get(&-k).cloned()).filter(|x| x.as_scalar().is_none()).take(2).collect();
    if picked.len() < 2 {
        return Ok(Some(format!("only {} non-scalar coefficients", picked.len())));
    }
    let words: std::collections::BTreeSet<_> = picked.iter().flat_map(|p| p.terms().keys().cloned()).collect();
    let rows: Vec<Vec<LaurentPoly>> = picked.iter().map(|p| words.iter().map(|w| p.coeff(w)).collect()).collect();
    let r = rank_of_rows(&rows)?;
    Ok((r != 2).then(|| format!("rank {r}")))
}

fn twisted_central(case: Case, n: usize) -> CheckResult {
    let pair = s_matrix(case, n)?;
    let h = &*pair.host;
    let fused = sdet_fusion(case, n, Image::Twisted)?;
    let gens: Vec<NcPoly> = pair.s.entries().values().chain(pair.sbar.entries().values()).cloned().collect();
    for (k, x) in u_coefficients(&fused, &h.vars)? {
        for g in &gens {
            let d = h.mul(&x, g)?.sub(&h.mul(g, &x)?);
            if !d.is_zero() {
                return Ok(Some(format!("coefficient of u^{k} vs {g}: {d}")));
            }
        }
    }
    Ok(None)
}

/// `sdet · Π_k (1 + q^{2k−1}u⁻¹) · u^N = γ · Π_k (1 + q^{2k−3}u⁻¹) · C(u)`, `k ≤ ⌊N/2⌋`.
fn twisted_capelli(n: usize) -> CheckResult {
    let fused = sdet_fusion(Case::Orth, n, Image::Twisted)?;
    let cap = capelli_polynomial(n, CasimirBackend::Host)?.as_poly()?;
    let vars = VarTable::new(&["q", "u"])?;
    let fused = fused.with_vars(&vars)?;
    let one = LaurentPoly::one(&vars);
    let mut lhs_f = spectral(&vars, "u", 0, n as i32);
    let mut rhs_f = gamma(Case::Orth, n)?.as_poly().expect("polynomial").with_vars(&vars)?;
    for k in 1..=(n / 2) as i32 {
        lhs_f = &lhs_f * &(&one + &spectral(&vars, "u", 2 * k - 1, -1));
        rhs_f = &rhs_f * &(&one + &spectral(&vars, "u", 2 * k - 3, -1));
    }
    let d = fused.scale(&lhs_f).sub(&cap.with_vars(&vars)?.scale(&rhs_f));
    Ok((!d.is_zero()).then(|| format!("difference {d}")))
}
