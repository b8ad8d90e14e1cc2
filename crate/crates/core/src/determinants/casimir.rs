use super::*;
use crate::coideal::s_matrix;
use crate::freealg::GenSym;
use crate::presentations::s_orth_matrix;
use crate::report::{CheckResult, VerificationReport};
use crate::tensorcalc::permutations;

/// Where `S` and `S̄` live when building `C(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirBackend {
    /// The abstract orthogonal twisted algebra, `s̄_ij = q s_ji` above the diagonal.
    Abstract,
    /// The image `S = T Tbarᵗ` inside `U_q(gl_N)`.
    Host,
}

/// `C(u) = Σ_k coeffs[k] u^k`.
pub struct CasimirPolynomial {
    pub n: usize,
    pub host: Arc<Presentation>,
    pub coeffs: Vec<NcPoly>,
}

impl CasimirPolynomial {
    /// `C(u)` as one element over `(q, u)`.
    pub fn as_poly(&self) -> Result<NcPoly> {
        let vars = uvars()?;
        let mut acc = NcPoly::zero(&vars);
        for (k, c) in self.coeffs.iter().enumerate() {
            acc.add_assign(&c.with_vars(&vars)?.scale(&spectral(&vars, "u", 0, k as i32)));
        }
        Ok(acc)
    }
}

fn uvars() -> Result<VarTable> {
    VarTable::new(&["q", "u"])
}

/// `S` and `S̄` of the chosen backend, entries over `q`.
fn pair(n: usize, backend: CasimirBackend) -> Result<(Arc<Presentation>, AlgMatrix, AlgMatrix)> {
    match backend {
        CasimirBackend::Host => {
            let p = s_matrix(Case::Orth, n)?;
            Ok((p.host, p.s, p.sbar))
        }
        CasimirBackend::Abstract => {
            let h = shared(Kind::TwOrth, n, None)?;
            let v = h.vars.clone();
            let s = s_orth_matrix(n, &v);
            let mut sbar = OperatorMatrix::zero(n, 1);
            for i in 1..=n {
                sbar.set(&*h, i - 1, i - 1, NcPoly::one(&v));
                for j in i + 1..=n {
                    sbar.set(&*h, i - 1, j - 1, NcPoly::gen(GenSym::s_orth(j, i)?, &v).scale(&LaurentPoly::q_pow(&v, 1)));
                }
            }
            Ok((h, s, sbar))
        }
    }
}

/// The Capelli-type polynomial
/// `Σ_p (−q)^{−l(p)+l(p′)} [uS̄ + qS]_{p′₁p₁} ⋯ [uS̄ + q^{2n−1}S]_{p′_n p_n}
///  [uS + q^{2n−1}S̄]_{p_{n+1}p′_{n+1}} ⋯ [uS + q^{2N−3}S̄]_{p_N p′_N}`, `n = ⌊N/2⌋`.
pub fn capelli_polynomial(n: usize, backend: CasimirBackend) -> Result<CasimirPolynomial> {
    if n == 0 {
        return Err(crate::error::Error::InvalidArgument("N must be at least 1".into()));
    }
    let (h, s, sbar) = pair(n, backend)?;
    let vars = uvars()?;
    let u = spectral(&vars, "u", 0, 1);
    let entry = |m: &AlgMatrix, i: usize, j: usize| m.get(&*h, i - 1, j - 1).with_vars(&vars);
    let half = n / 2;
    let mut acc = NcPoly::zero(&vars);
    for p in permutations(n) {
        let pp = if n == 1 { p.clone() } else { pi_map(&p)?.p_prime };
        let mut term = NcPoly::scalar(mq(&vars, inversions(&pp) as i32 - inversions(&p) as i32));
        for k in 1..=n {
            let (a, b) = (p[k - 1], pp[k - 1]);
            let f = if k <= half {
                entry(&sbar, b, a)?.scale(&u).add(&entry(&s, b, a)?.scale(&LaurentPoly::q_pow(&vars, 2 * k as i32 - 1)))
            } else {
                entry(&s, a, b)?.scale(&u).add(&entry(&sbar, a, b)?.scale(&LaurentPoly::q_pow(&vars, 2 * k as i32 - 3)))
            };
            term = h.mul(&term, &f)?;
        }
        acc.add_assign(&term);
    }
    let split = u_coefficients(&acc, &h.vars)?;
    let top = split.keys().next_back().copied().unwrap_or(0).max(0) as usize;
    let coeffs = (0..=top).map(|k| split.get(&(k as i32)).cloned().unwrap_or_else(|| NcPoly::zero(&h.vars))).collect();
    Ok(CasimirPolynomial { n, host: h, coeffs })
}

/// `(u + q)((u + q)(u + q³) − q²u C)` with `C = s₂₁² + q²s₃₂² + s₃₁² − q s₂₁s₃₂s₃₁`,
/// in normal form of the abstract algebra at `N = 3`.
pub fn closed_form_3() -> Result<NcPoly> {
    let h = shared(Kind::TwOrth, 3, None)?;
    let vars = uvars()?;
    let g = |i, j| -> Result<NcPoly> { Ok(NcPoly::gen(GenSym::s_orth(i, j)?, &vars)) };
    let qk = |k| LaurentPoly::q_pow(&vars, k);
    let (s21, s31, s32) = (g(2, 1)?, g(3, 1)?, g(3, 2)?);
    let c = h
        .mul(&s21, &s21)?
        .add(&h.mul(&s32, &s32)?.scale(&qk(2)))
        .add(&h.mul(&s31, &s31)?)
        .sub(&h.mul(&h.mul(&s21, &s32)?, &s31)?.scale(&qk(1)));
    let u = spectral(&vars, "u", 0, 1);
    let lin = |k: i32| NcPoly::scalar(&u + &qk(k));
    let inner = h.mul(&lin(1), &lin(3))?.sub(&c.scale(&(&qk(2) * &u)));
    h.mul(&lin(1), &inner)
}

/// Monic of degree `N`, central coefficients, and the closed form at `N = 3`.
pub fn verify_casimir(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("casimir").param("n", n);
    let cp = match capelli_polynomial(n, CasimirBackend::Abstract) {
        Ok(c) => c,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    let h = &*cp.host;
    rep.check("C(u) is monic of degree N", || {
        let lead = cp.coeffs.last().cloned();
        Ok(if cp.coeffs.len() != n + 1 || lead != Some(NcPoly::one(&h.vars)) {
            Some(format!("degree {}, leading coefficient {lead:?}", cp.coeffs.len() as i64 - 1))
        } else {
            None
        })
    });
    rep.check("coefficients commute with every generator", || {
        for (k, c) in cp.coeffs.iter().enumerate() {
            for &g in h.alphabet() {
                let x = h.gen(g);
                let d = h.mul(c, &x)?.sub(&h.mul(&x, c)?);
                if !d.is_zero() {
                    return Ok(Some(format!("coefficient of u^{k} vs {g}: {d}")));
                }
            }
        }
        Ok(None)
    });
    if n == 3 {
        rep.check("C(u) = (u + q)((u + q)(u + q^3) - q^2 u C)", || {
            let d = cp.as_poly()?.sub(&closed_form_3()?);
            Ok((!d.is_zero()).then(|| format!("difference {d}")))
        });
    }
    rep
}

/// `S⁻¹` for lower unitriangular `S`: `L_ij = −Σ_{j≤k<i} S_ik L_kj`.
fn unitriangular_inverse(h: &Presentation, s: &AlgMatrix, n: usize) -> Result<AlgMatrix> {
    let v = &h.vars;
    let mut l = OperatorMatrix::zero(n, 1);
    for j in 0..n {
        l.set(h, j, j, NcPoly::one(v));
        for i in j + 1..n {
            let mut acc = NcPoly::zero(v);
            for k in j..i {
                acc.add_assign(&h.mul(&s.get(h, i, k), &l.get(h, k, j))?);
            }
            l.set(h, i, j, acc.neg());
        }
    }
    Ok(l)
}

fn is_identity(h: &Presentation, m: &AlgMatrix, n: usize) -> CheckResult {
    let id = OperatorMatrix::identity(h, n, 1);
    Ok(m.first_difference(h, &id).map(|(i, j, a, b)| format!("entry {i:?},{j:?}: {a} vs {b}")))
}

/// `C(−q^{2N−3} S̄ S⁻¹) = 0` in the abstract orthogonal algebra, with the
/// coefficients placed on the left and, separately, on the right.
pub fn characteristic_identity(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("charid").param("n", n);
    let setup = (|| -> Result<_> {
        let cp = capelli_polynomial(n, CasimirBackend::Abstract)?;
        let (h, s, sbar) = pair(n, CasimirBackend::Abstract)?;
        let l = unitriangular_inverse(&h, &s, n)?;
        let x = sbar.mul(&*h, &l)?.scale(&*h, &(-&LaurentPoly::q_pow(&h.vars, 2 * n as i32 - 3)));
        let mut powers = vec![OperatorMatrix::identity(&*h, n, 1)];
        for k in 1..cp.coeffs.len() {
            let next = powers[k - 1].mul(&*h, &x)?;
            powers.push(next);
        }
        Ok((cp, h, s, l, powers))
    })();
    let (cp, h, s, l, powers) = match setup {
        Ok(x) => x,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    let h = &*h;
    rep.check("S S^-1 = 1", || is_identity(h, &s.mul(h, &l)?, n));
    rep.check("S^-1 S = 1", || is_identity(h, &l.mul(h, &s)?, n));
    for left in [true, false] {
        let id = if left { "C(X) = 0, coefficients on the left" } else { "C(X) = 0, coefficients on the right" };
        rep.check(id, || {
            let mut acc = OperatorMatrix::zero(n, 1);
            for (c, xk) in cp.coeffs.iter().zip(&powers) {
                let placed = xk.map(|e| if left { h.mul(c, e) } else { h.mul(e, c) }, |p: &NcPoly| p.is_zero())?;
                acc = acc.add(h, &placed)?;
            }
            Ok(acc.entries().iter().next().map(|((i, j), e)| format!("entry ({},{}) = {e}", i + 1, j + 1)))
        });
    }
    rep
}
