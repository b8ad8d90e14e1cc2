use super::finite::{series_relation_parts, with_pair};
use super::*;
use crate::report::VerificationReport;
use crate::tensorcalc::FreeAlgebra;

/// Image of `S(u)` and `S̄(u)` under the twisted evaluation map, over `ℚ[q^±, u^±]`.
///
/// `S(u) ↦ S + c u⁻¹ S̄` with `c = q⁻¹` (orth) or `c = q` (sympl); `S̄(u)` maps to
/// `sbar_num / sbar_den`.
pub struct EvalImage {
    pub case: Case,
    pub n: usize,
    pub vars: VarTable,
    pub s_u: AlgMatrix,
    pub sbar_num: AlgMatrix,
    pub sbar_den: LaurentPoly,
    host: Arc<Presentation>,
}

pub fn eval_image(case: Case, n: usize) -> Result<EvalImage> {
    let p = s_matrix(case, n)?;
    let h = p.host.clone();
    let vars = VarTable::new(&["q", "u"])?;
    let u = LaurentPoly::var(&vars, "u")?;
    let ui = LaurentPoly::var_pow(&vars, "u", -1)?;
    let qk = |k: i32| q(&vars, k);
    let c = match case {
        Case::Orth => qk(-1),
        Case::Sympl => qk(1),
    };
    let s_u = add(&h, &p.s, &scaled(&h, &p.sbar, &(&c * &ui)))?;
    let (sbar_num, sbar_den) = match case {
        // (1 + u q⁻¹)(S̄ + q u S) / (1 + u q)
        Case::Orth => {
            let inner = add(&h, &p.sbar, &scaled(&h, &p.s, &(&qk(1) * &u)))?;
            (scaled(&h, &inner, &(&qk(0) + &(&u * &qk(-1)))), &qk(0) + &(&u * &qk(1)))
        }
        // solved from the series relation with S(u⁻¹) ↦ S + q u S̄
        Case::Sympl => {
            let s_inv = add(&h, &p.s, &scaled(&h, &p.sbar, &(&qk(1) * &u)))?;
            let free = FreeAlgebra(vars.clone());
            let get = |a: usize, b: usize| s_inv.get(&free, a - 1, b - 1);
            let mut num = OperatorMatrix::zero(n, 1);
            let mut den = LaurentPoly::zero(&vars);
            for i in 1..=n {
                for j in 1..=n {
                    let (f, rhs) = series_relation_parts(case, &vars, &get, i, j)?;
                    num.set(&free, i - 1, j - 1, rhs);
                    den = f;
                }
            }
            (num, den)
        }
    };
    // entries untouched by u still carry the host table
    let widen = |m: &AlgMatrix| m.map(|p| p.with_vars(&vars), |p: &NcPoly| p.is_zero());
    let (s_u, sbar_num) = (widen(&s_u)?, widen(&sbar_num)?);
    Ok(EvalImage { case, n, vars, s_u, sbar_num, sbar_den, host: h })
}

impl EvalImage {
    /// `S(u⁻¹)` in the image.
    pub fn s_inverse_arg(&self) -> Result<AlgMatrix> {
        let ui = LaurentPoly::var_pow(&self.vars, "u", -1)?;
        self.s_u.map(|p| p.subst("u", &ui), |p: &NcPoly| p.is_zero())
    }

    /// The series relation for entry `(i, j)`, cross-multiplied by the denominator.
    pub fn check_sbar_closed_form(&self, i: usize, j: usize) -> CheckResult {
        let free = FreeAlgebra(self.vars.clone());
        let s_inv = self.s_inverse_arg()?;
        let get = |a: usize, b: usize| s_inv.get(&free, a - 1, b - 1);
        let (factor, rhs) = series_relation_parts(self.case, &self.vars, &get, i, j)?;
        let lhs = self.sbar_num.get(&free, i - 1, j - 1).scale(&factor);
        zero(&lhs.sub(&rhs.scale(&self.sbar_den)))
    }

    /// Coefficient of `u^k` in `S(u)`.
    pub fn s_coefficient(&self, k: i32) -> Result<AlgMatrix> {
        self.s_u.map(|p| Ok(p.coeff_of_var("u", k)?.with_vars(&self.host.vars)?), |p: &NcPoly| p.is_zero())
    }
}

/// The relations the evaluation map must respect: eight auxiliary identities,
/// four combined relations, the `Q` identities and the full spectral
/// reflection relation after substitution.
pub fn verify_eval_hom(case: Case, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("eval-hom").param("case", case).param("n", n);
    with_pair(&mut rep, case, n, |rep, p| {
        let h = &*p.host;
        let v = h.vars.clone();
        let mats = (|| -> Result<_> {
            let r = scalar(&v, ConstVariant::R, n)?;
            let rtil = scalar(&v, ConstVariant::Rtilde, n)?;
            let qm = scalar(&v, ConstVariant::Q, n)?;
            let (s1, s2) = legs(&p.s)?;
            let (b1, b2) = legs(&p.sbar)?;
            Ok((r.partial_transpose(1)?, rtil.partial_transpose(1)?, r, rtil, qm, s1, s2, b1, b2))
        })();
        let (rt, rtilt, r, rtil, qm, s1, s2, b1, b2) = match mats {
            Ok(m) => m,
            Err(e) => return rep.fail("setup", format!("error: {e}")),
        };
        let qk = |k: i32| q(&v, k);

        // X S1 Y S2 = S2 Y S1 X, S-type factors as listed
        let aux: [(&str, &AlgMatrix, &AlgMatrix, &AlgMatrix, &AlgMatrix); 8] = [
            ("aux R S1 Rt S2", &r, &s1, &rt, &s2),
            ("aux Rtilde S1 Rt S2", &rtil, &s1, &rt, &s2),
            ("aux R Sbar1 Rt S2", &r, &b1, &rt, &s2),
            ("aux Rtilde Sbar1 Rtilde^t Sbar2", &rtil, &b1, &rtilt, &b2),
            ("aux R Sbar1 Rtilde^t S2", &r, &b1, &rtilt, &s2),
            ("aux Rtilde S1 Rtilde^t Sbar2", &rtil, &s1, &rtilt, &b2),
            ("aux R Sbar1 Rtilde^t Sbar2", &r, &b1, &rtilt, &b2),
            ("aux Rtilde S1 Rt Sbar2", &rtil, &s1, &rt, &b2),
        ];
        for (id, x, a, y, b) in aux {
            rep.check(id, || same(&prod(h, &[x, a, y, b])?, &prod(h, &[b, y, a, x])?));
        }

        let kappa = match case {
            Case::Orth => qk(-2),
            Case::Sympl => qk(2),
        };
        let lin = |terms: &[(LaurentPoly, [&AlgMatrix; 4])]| -> Result<AlgMatrix> {
            let mut acc = OperatorMatrix::zero(n, 2);
            for (c, chain) in terms {
                acc = add(h, &acc, &scaled(h, &prod(h, chain)?, c))?;
            }
            Ok(acc)
        };
        let one = qk(0);
        let m1 = -qk(0);
        let mk = -&kappa;
        let four: [(&str, Vec<(LaurentPoly, [&AlgMatrix; 4])>, Vec<(LaurentPoly, [&AlgMatrix; 4])>); 4] = [
            (
                "R S1 Rt Sbar2 - Rtilde Sbar1 Rt S2 = Sbar2 Rt S1 R - S2 Rt Sbar1 Rtilde",
                vec![(one.clone(), [&r, &s1, &rt, &b2]), (m1.clone(), [&rtil, &b1, &rt, &s2])],
                vec![(one.clone(), [&b2, &rt, &s1, &r]), (m1.clone(), [&s2, &rt, &b1, &rtil])],
            ),
            (
                "R S1 Rtilde^t Sbar2 - Rtilde Sbar1 Rtilde^t S2 = Sbar2 Rtilde^t S1 R - S2 Rtilde^t Sbar1 Rtilde",
                vec![(one.clone(), [&r, &s1, &rtilt, &b2]), (m1.clone(), [&rtil, &b1, &rtilt, &s2])],
                vec![(one.clone(), [&b2, &rtilt, &s1, &r]), (m1.clone(), [&s2, &rtilt, &b1, &rtil])],
            ),
            (
                "Rtilde S1 Rtilde^t S2 - k Rtilde Sbar1 Rt Sbar2 = S2 Rtilde^t S1 Rtilde - k Sbar2 Rt Sbar1 Rtilde",
                vec![(one.clone(), [&rtil, &s1, &rtilt, &s2]), (mk.clone(), [&rtil, &b1, &rt, &b2])],
                vec![(one.clone(), [&s2, &rtilt, &s1, &rtil]), (mk.clone(), [&b2, &rt, &b1, &rtil])],
            ),
            (
                "R S1 Rtilde^t S2 - k R Sbar1 Rt Sbar2 = S2 Rtilde^t S1 R - k Sbar2 Rt Sbar1 R",
                vec![(one.clone(), [&r, &s1, &rtilt, &s2]), (mk.clone(), [&r, &b1, &rt, &b2])],
                vec![(one.clone(), [&s2, &rtilt, &s1, &r]), (mk.clone(), [&b2, &rt, &b1, &r])],
            ),
        ];
        for (id, lhs, rhs) in four {
            rep.check(id, || same(&lin(&lhs)?, &lin(&rhs)?));
        }

        let (c1, c2) = match case {
            Case::Orth => (qk(-1), qk(1)),
            Case::Sympl => (-qk(1), -qk(-1)),
        };
        rep.check("Rtilde S1 Q = c Sbar2 Q", || {
            same(&prod(h, &[&rtil, &s1, &qm])?, &scaled(h, &prod(h, &[&b2, &qm])?, &c1))
        });
        let qids: [(&str, [&AlgMatrix; 4], [&AlgMatrix; 3], &LaurentPoly); 4] = [
            ("Rtilde S1 Q S2 = c Sbar2 Q S2", [&rtil, &s1, &qm, &s2], [&b2, &qm, &s2], &c1),
            ("R Sbar1 Q Sbar2 = c' S2 Q Sbar2", [&r, &b1, &qm, &b2], [&s2, &qm, &b2], &c2),
            ("S2 Q S1 Rtilde = c S2 Q Sbar2", [&s2, &qm, &s1, &rtil], [&s2, &qm, &b2], &c1),
            ("Sbar2 Q Sbar1 R = c' Sbar2 Q S2", [&b2, &qm, &b1, &r], [&b2, &qm, &s2], &c2),
        ];
        for (id, lhs, rhs, c) in qids {
            rep.check(id, || same(&prod(h, &lhs)?, &scaled(h, &prod(h, &rhs)?, c)));
        }

        rep.check("spectral reflection relation under evaluation", || full_relation(case, h, n, p));
    });
    rep
}

/// `(uR̃ − vR)(A(u))₁(R̃ᵗ − uvRᵗ)(A(v))₂ = (A(v))₂(R̃ᵗ − uvRᵗ)(A(u))₁(uR̃ − vR)`, where
/// `A(u) = quS + S̄` (orth) or `uS + qS̄` (sympl).
fn full_relation(case: Case, h: &Presentation, n: usize, p: &SMatrixPair) -> CheckResult {
    let vars = VarTable::new(&["q", "u", "v"])?;
    let u = LaurentPoly::var(&vars, "u")?;
    let v = LaurentPoly::var(&vars, "v")?;
    let qk = |k: i32| q(&vars, k);
    let r = scalar(&vars, ConstVariant::R, n)?;
    let rtil = scalar(&vars, ConstVariant::Rtilde, n)?;
    let (rt, rtilt) = (r.partial_transpose(1)?, rtil.partial_transpose(1)?);
    let a = |z: &LaurentPoly| -> Result<AlgMatrix> {
        match case {
            Case::Orth => add(h, &scaled(h, &p.s, &(&qk(1) * z)), &p.sbar),
            Case::Sympl => add(h, &scaled(h, &p.s, z), &scaled(h, &p.sbar, &qk(1))),
        }
    };
    let x = scaled(h, &rtil, &u).sub(h, &scaled(h, &r, &v))?;
    let y = rtilt.sub(h, &scaled(h, &rt, &(&u * &v)))?;
    let a1 = a(&u)?.embed(&[1], 2)?;
    let a2 = a(&v)?.embed(&[2], 2)?;
    same(&prod(h, &[&x, &a1, &y, &a2])?, &prod(h, &[&a2, &y, &a1, &x])?)
}
