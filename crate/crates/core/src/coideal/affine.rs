use super::*;
use crate::presentations::gen_matrix;
use crate::report::VerificationReport;
use crate::tensorcalc::FreeAlgebra;

/// `S^{(r)} = Σ_{x+y=r} T^{(x)} G (T̄^{(y)})ᵗ` as a matrix over the free algebra
/// (no reduction).
pub fn affine_s_matrix(case: Case, n: usize, r: usize, vars: &VarTable) -> Result<AlgMatrix> {
    case.check_n(n)?;
    let free = FreeAlgebra(vars.clone());
    let g = form_matrix(case, n, vars)?;
    let mut acc = OperatorMatrix::zero(n, 1);
    for x in 0..=r {
        let t = gen_matrix(n, vars, |i, j| GenSym::t_deg(x, i, j).ok().map(|g| NcPoly::gen(g, vars)));
        let tb = gen_matrix(n, vars, |i, j| GenSym::tb_deg(r - x, i, j).ok().map(|g| NcPoly::gen(g, vars)));
        acc = acc.add(&free, &OperatorMatrix::product(&free, &[&t, &g, &tb.transpose()])?)?;
    }
    Ok(acc)
}

/// The reflection relation for `S(u)` coefficient by coefficient: `(a, b)` is
/// the coefficient of `u^{-a} v^{-b}` in `v^{-2}(LHS − RHS)`, so `(0, 0)` is the
/// finite relation on the degree-zero part. Every `(a', b') ≤ (a, b)` is checked
/// in the affine host cut at window `max(a + b, 2)`.
pub fn verify_affine_reflection(case: Case, n: usize, ab: (usize, usize)) -> VerificationReport {
    let (a, b) = ab;
    let window = (a + b).max(2);
    let mut rep = VerificationReport::new("affine-reflection")
        .param("case", case)
        .param("n", n)
        .param("a", a)
        .param("b", b)
        .param("window", window);
    let setup = (|| -> Result<_> {
        case.check_n(n)?;
        let h = shared(Kind::UqglHatWindow, n, Some(window))?;
        let v = h.vars.clone();
        let mut s = Vec::new();
        for r in 0..=a + b {
            s.push(nf_matrix(&h, &affine_s_matrix(case, n, r, &v)?)?);
        }
        let r = scalar(&v, ConstVariant::R, n)?;
        let rtil = scalar(&v, ConstVariant::Rtilde, n)?;
        Ok((h, s, r, rtil))
    })();
    let (h, s, r, rtil) = match setup {
        Ok(x) => x,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    for a2 in 0..=a {
        for b2 in 0..=b {
            let id = if (a2, b2) == (0, 0) {
                "u^0 v^0 (degree-zero relation)".to_string()
            } else {
                format!("u^-{a2} v^-{b2}")
            };
            rep.check(id, || slice(&h, n, &s, &r, &rtil, a2, b2));
        }
    }
    rep
}

fn slice(h: &Presentation, n: usize, s: &[AlgMatrix], r: &AlgMatrix, rtil: &AlgMatrix, a: usize, b: usize) -> CheckResult {
    let rt = r.partial_transpose(1)?;
    let rtilt = rtil.partial_transpose(1)?;
    let mr = r.neg(h);
    let mrt = rt.neg(h);
    let mut lhs = OperatorMatrix::zero(n, 2);
    let mut rhs = OperatorMatrix::zero(n, 2);
    for e1 in 0..=1usize {
        for e3 in 0..=1usize {
            let Some(rr) = (a + e1).checked_sub(e3) else { continue };
            let Some(pp) = b.checked_sub(e1 + e3) else { continue };
            let x = if e1 == 1 { rtil } else { &mr };
            let y = if e3 == 1 { &rtilt } else { &mrt };
            let s1 = s[rr].embed(&[1], 2)?;
            let s2 = s[pp].embed(&[2], 2)?;
            lhs = lhs.add(h, &prod(h, &[x, &s1, y, &s2])?)?;
            rhs = rhs.add(h, &prod(h, &[&s2, y, &s1, x])?)?;
        }
    }
    same(&lhs, &rhs)
}
