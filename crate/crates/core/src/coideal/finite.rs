use super::*;
use crate::freealg::{delta_affine, delta_finite, tensor2_apply_delta, NcPoly2};
use crate::presentations::s_orth_matrix;
use crate::report::VerificationReport;
use crate::tensorcalc::FreeAlgebra;

/// Runs `body` on the S-matrices, recording a setup failure as one entry.
pub(crate) fn with_pair(rep: &mut VerificationReport, case: Case, n: usize, body: impl FnOnce(&mut VerificationReport, &SMatrixPair)) {
    match s_matrix(case, n) {
        Ok(pair) => body(rep, &pair),
        Err(e) => rep.fail("setup", format!("error: {e}")),
    }
}

/// `R S₁ Rᵗ S₂ = S₂ Rᵗ S₁ R` in the host, plus the two relations it rests on.
pub fn verify_reflection_finite(case: Case, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("reflection-finite").param("case", case).param("n", n);
    with_pair(&mut rep, case, n, |rep, p| {
        let h = &*p.host;
        let v = &h.vars;
        let built = (|| -> Result<_> {
            let r = scalar(v, ConstVariant::R, n)?;
            let rt = r.partial_transpose(1)?;
            Ok((r, rt))
        })();
        let (r, rt) = match built {
            Ok(x) => x,
            Err(e) => return rep.fail("setup", format!("error: {e}")),
        };
        rep.check("R S1 Rt S2 = S2 Rt S1 R", || {
            let (s1, s2) = legs(&p.s)?;
            same(&prod(h, &[&r, &s1, &rt, &s2])?, &prod(h, &[&s2, &rt, &s1, &r])?)
        });
        rep.check("Tb1^t Rt T2 = T2 Rt Tb1^t", || {
            let tbt1 = tb_matrix(n, v).transpose().embed(&[1], 2)?;
            let t2 = t_matrix(n, v).embed(&[2], 2)?;
            same(&prod(h, &[&tbt1, &rt, &t2])?, &prod(h, &[&t2, &rt, &tbt1])?)
        });
        rep.check("R Tb1^t Tb2^t = Tb2^t Tb1^t R", || {
            let (a1, a2) = legs(&tb_matrix(n, v).transpose())?;
            same(&prod(h, &[&r, &a1, &a2])?, &prod(h, &[&a2, &a1, &r])?)
        });
        rep.check("R Rt = Rt R", || same(&prod(h, &[&r, &rt])?, &prod(h, &[&rt, &r])?));
        if case == Case::Sympl {
            rep.check("R G1 Rt G2 = G2 Rt G1 R", || {
                let (g1, g2) = legs(&form_matrix(case, n, v)?)?;
                same(&prod(h, &[&r, &g1, &rt, &g2])?, &prod(h, &[&g2, &rt, &g1, &r])?)
            });
        }
    });
    rep
}

/// `S̄` expressed through `S`, entry by entry, and the series relations
/// between `S̄(u)` and `S(u⁻¹)` in the evaluation image.
pub fn verify_sbar_relations(case: Case, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("sbar").param("case", case).param("n", n);
    with_pair(&mut rep, case, n, |rep, p| {
        let h = &*p.host;
        let v = h.vars.clone();
        let qk = |k: i32| q(&v, k);
        for i in 1..=n {
            for j in 1..=n {
                let expected = match case {
                    Case::Orth => match i.cmp(&j) {
                        std::cmp::Ordering::Less => p.s_at(j, i).scale(&qk(1)),
                        std::cmp::Ordering::Equal => NcPoly::one(&v),
                        std::cmp::Ordering::Greater => NcPoly::zero(&v),
                    },
                    Case::Sympl => sympl_sbar(p, i, j),
                };
                rep.check(format!("sbar[{i},{j}]"), || zero(&p.sbar_at(i, j).sub(&expected)));
            }
        }
        if case == Case::Orth {
            // t̄_ia t_ja = q t_ja t̄_ia for i < j
            for i in 1..=n {
                for j in i + 1..=n {
                    for a in 1..=n {
                        let (Ok(tb), Ok(t)) = (GenSym::tb(i, a), GenSym::t(j, a)) else { continue };
                        rep.check(format!("tbar[{i},{a}] t[{j},{a}] = q t[{j},{a}] tbar[{i},{a}]"), || {
                            let lhs = NcPoly::term(Word::from_slice(&[tb, t]), qk(0));
                            let rhs = NcPoly::term(Word::from_slice(&[t, tb]), qk(1));
                            zero(&h.normal_form(&lhs.sub(&rhs))?)
                        });
                    }
                }
            }
        }
        let series = match series_in_host(case, n, h) {
            Ok(x) => x,
            Err(e) => return rep.fail("series setup", format!("error: {e}")),
        };
        for i in 1..=n {
            for j in 1..=n {
                rep.check(format!("series[{i},{j}] under evaluation"), || series_relation(case, &series, i, j));
            }
        }
        if case == Case::Orth {
            match eval_image(case, n) {
                Ok(img) => {
                    for i in 1..=n {
                        for j in 1..=n {
                            rep.check(format!("series[{i},{j}] in the twisted image"), || img.check_sbar_closed_form(i, j));
                        }
                    }
                }
                Err(e) => rep.fail("twisted image setup", format!("error: {e}")),
            }
        }
    });
    rep
}

fn sympl_sbar(p: &SMatrixPair, i: usize, j: usize) -> NcPoly {
    let v = &p.host.vars;
    let qk = |k: i32| q(v, k);
    let (lo, hi) = (i.min(j), i.max(j));
    let same_block = lo % 2 == 1 && hi == lo + 1;
    if i == j {
        return p.s_at(i, i).scale(&-qk(-2));
    }
    if same_block {
        let odd = lo;
        let even = hi;
        if i == even {
            // s̄_i'i = −q⁻¹ s_ii'
            return p.s_at(odd, even).scale(&-qk(-1));
        }
        // s̄_ii' = −q⁻¹ s_i'i + (1 − q⁻²) s_ii'
        return p.s_at(even, odd).scale(&-qk(-1)).add(&p.s_at(odd, even).scale(&(&qk(0) - &qk(-2))));
    }
    if i < j {
        p.s_at(j, i).scale(&-qk(-1))
    } else {
        NcPoly::zero(v)
    }
}

/// Images of `S(u⁻¹)` and `S̄(u)` under `T(u) ↦ T − T̄u⁻¹`, `T̄(u) ↦ T̄ − Tu`.
pub(crate) struct SeriesImages {
    pub s_inv: AlgMatrix,
    pub sbar: AlgMatrix,
    pub vars: VarTable,
}

pub(super) fn series_in_host(case: Case, n: usize, h: &Presentation) -> Result<SeriesImages> {
    let vars = VarTable::new(&["q", "u"])?;
    let u = LaurentPoly::var(&vars, "u")?;
    let (t, tb) = (t_matrix(n, &vars), tb_matrix(n, &vars));
    let g = form_matrix(case, n, &vars)?;
    // T(u⁻¹) ↦ T − T̄u and T̄(u) ↦ T̄ − Tu
    let t_inv = t.sub(h, &tb.scale(h, &u))?;
    let tb_u = tb.sub(h, &t.scale(h, &u))?;
    let s_inv = prod(h, &[&t_inv, &g, &tb_u.transpose()])?;
    let sbar = prod(h, &[&tb_u, &g, &t_inv.transpose()])?;
    Ok(SeriesImages { s_inv, sbar, vars })
}

/// The relation between `s̄_ij(u)` and `s_ji(u⁻¹)`, `s_ij(u⁻¹)` with both sides
/// given as matrices over `ℚ[q^±, u^±]`.
pub(crate) fn series_relation_parts(
    case: Case,
    vars: &VarTable,
    s_inv: &dyn Fn(usize, usize) -> NcPoly,
    i: usize,
    j: usize,
) -> Result<(LaurentPoly, NcPoly)> {
    let u = LaurentPoly::var(vars, "u")?;
    let ui = LaurentPoly::var_pow(vars, "u", -1)?;
    let qk = |k: i32| q(vars, k);
    let d = i32::from(i == j);
    let lhs_factor = match case {
        Case::Orth => &(&u * &qk(1)) - &(&ui * &qk(-1)),
        Case::Sympl => &(&ui * &qk(1)) - &(&u * &qk(-1)),
    };
    let first = &(&u * &qk(d)) - &(&ui * &qk(-d));
    let (up, down) = match case {
        Case::Orth => (j < i, i < j),
        Case::Sympl => (j < i, i < j),
    };
    let mut second = LaurentPoly::zero(vars);
    if up {
        second = &second + &u;
    }
    if down {
        second = &second + &ui;
    }
    let second = &second * &(&qk(1) - &qk(-1));
    Ok((lhs_factor, s_inv(j, i).scale(&first).add(&s_inv(i, j).scale(&second))))
}

pub(super) fn series_relation(case: Case, im: &SeriesImages, i: usize, j: usize) -> CheckResult {
    let ring = FreeAlgebra(im.vars.clone());
    let get = |a: usize, b: usize| im.s_inv.get(&ring, a - 1, b - 1);
    let (factor, rhs) = series_relation_parts(case, &im.vars, &get, i, j)?;
    let lhs = im.sbar.get(&ring, i - 1, j - 1).scale(&factor);
    zero(&lhs.sub(&rhs))
}

fn nf2(h: &Presentation, x: &NcPoly2) -> Result<NcPoly2> {
    let mut out = NcPoly2::zero(&h.vars);
    for ((a, b), c) in x.terms() {
        let one = LaurentPoly::one(&h.vars);
        let na = h.normal_form(&NcPoly::term(a.clone(), one.clone()))?;
        let nb = h.normal_form(&NcPoly::term(b.clone(), one))?;
        out.add_assign(&NcPoly2::tensor(&na, &nb).scale(c));
    }
    Ok(out)
}

fn same2(a: &NcPoly2, b: &NcPoly2) -> CheckResult {
    let d = a.sub(b);
    Ok(if d.is_zero() { None } else { Some(format!("difference {d}")) })
}

/// `Δ(s_ij) = Σ_{k,l} t_ik t̄_jl ⊗ s_kl`, finite and for series coefficients of order ≤ 1.
pub fn verify_coideal(case: Case, n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("coideal").param("case", case).param("n", n).param("affine_orders", "0..=1");
    with_pair(&mut rep, case, n, |rep, p| {
        let h = &*p.host;
        let v = h.vars.clone();
        let free = FreeAlgebra(v.clone());
        rep.check("Delta(1) = 1 (x) 1", || {
            let d = tensor2_apply_delta(&NcPoly::one(&v), &|g| delta_finite(g, &v))?;
            same2(&d, &NcPoly2::one(&v))
        });
        let raw = match (|| -> Result<AlgMatrix> {
            let g = form_matrix(case, n, &v)?;
            OperatorMatrix::product(&free, &[&t_matrix(n, &v), &g, &tb_matrix(n, &v).transpose()])
        })() {
            Ok(m) => m,
            Err(e) => return rep.fail("setup", format!("error: {e}")),
        };
        for i in 1..=n {
            for j in 1..=n {
                let expr = raw.get(&free, i - 1, j - 1);
                if expr.is_zero() {
                    continue;
                }
                rep.check(format!("Delta(s[{i},{j}])"), || {
                    let lhs = nf2(h, &tensor2_apply_delta(&expr, &|g| delta_finite(g, &v))?)?;
                    let mut rhs = NcPoly2::zero(&v);
                    for k in 1..=n {
                        for l in 1..=n {
                            let (Ok(t), Ok(tb)) = (GenSym::t(i, k), GenSym::tb(j, l)) else { continue };
                            let s = p.s_at(k, l);
                            if s.is_zero() {
                                continue;
                            }
                            let left = h.normal_form(&NcPoly::term(Word::from_slice(&[t, tb]), q(&v, 0)))?;
                            rhs.add_assign(&NcPoly2::tensor(&left, &s));
                        }
                    }
                    same2(&lhs, &rhs)
                });
            }
        }
        if case == Case::Sympl {
            for i in (1..=n).step_by(2) {
                let ip = prime(i);
                rep.check(format!("Delta(sinv[{i},{ip}]) = t[{ip},{ip}] tbar[{i},{i}] (x) sinv[{i},{ip}]"), || {
                    let inv = p.s_inv(i)?;
                    // the host inverse really inverts s_ii'
                    if !h.mul(&p.s_at(i, ip), &inv)?.sub(&NcPoly::one(&v)).is_zero() {
                        return Ok(Some(format!("{inv} does not invert s[{i},{ip}]")));
                    }
                    let lhs = nf2(h, &tensor2_apply_delta(&inv, &|g| delta_finite(g, &v))?)?;
                    let left = NcPoly::term(Word::from_slice(&[GenSym::t(ip, ip)?, GenSym::tb(i, i)?]), q(&v, 0));
                    same2(&lhs, &NcPoly2::tensor(&h.normal_form(&left)?, &inv))
                });
            }
        }
        affine_coideal(rep, case, n);
    });
    rep
}

/// Coefficients of `u^{-r}`, `r ≤ 1`, of the series coproduct, in the affine host with window 1.
fn affine_coideal(rep: &mut VerificationReport, case: Case, n: usize) {
    let h = match shared(Kind::UqglHatWindow, n, Some(1)) {
        Ok(h) => h,
        Err(e) => return rep.fail("affine setup", format!("error: {e}")),
    };
    let v = h.vars.clone();
    let raw: Vec<AlgMatrix> = match (0..=1).map(|r| affine_s_matrix(case, n, r, &v)).collect::<Result<Vec<_>>>() {
        Ok(m) => m,
        Err(e) => return rep.fail("affine setup", format!("error: {e}")),
    };
    let free = FreeAlgebra(v.clone());
    for r in 0..=1usize {
        for i in 1..=n {
            for j in 1..=n {
                let expr = raw[r].get(&free, i - 1, j - 1);
                if expr.is_zero() {
                    continue;
                }
                rep.check(format!("Delta(s{r}[{i},{j}])"), || {
                    let lhs = nf2(&h, &tensor2_apply_delta(&expr, &|g| delta_affine(g, n, &v))?)?;
                    let mut rhs = NcPoly2::zero(&v);
                    for a in 0..=r {
                        for b in 0..=r - a {
                            let c = r - a - b;
                            for k in 1..=n {
                                for l in 1..=n {
                                    let (Ok(t), Ok(tb)) = (GenSym::t_deg(a, i, k), GenSym::tb_deg(b, j, l)) else {
                                        continue;
                                    };
                                    let s = h.normal_form(&raw[c].get(&free, k - 1, l - 1))?;
                                    if s.is_zero() {
                                        continue;
                                    }
                                    let left = h.normal_form(&NcPoly::term(Word::from_slice(&[t, tb]), q(&v, 0)))?;
                                    rhs.add_assign(&NcPoly2::tensor(&left, &s));
                                }
                            }
                        }
                    }
                    same2(&lhs, &rhs)
                });
            }
        }
    }
}

/// The quadratic central elements of the symplectic algebra: their value in
/// the host, the elimination of `s_i'i` they imply, and centrality in the
/// abstract presentation.
pub fn verify_central_qds(n: usize) -> VerificationReport {
    let n2 = 2 * n;
    let mut rep = VerificationReport::new("qds").param("n", n);
    if n == 0 {
        rep.fail("setup", "error: n must be at least 1");
        return rep;
    }
    with_pair(&mut rep, Case::Sympl, n2, |rep, p| {
        let h = &*p.host;
        let v = h.vars.clone();
        for i in (1..=n2).step_by(2) {
            let ip = prime(i);
            rep.check(format!("s[{ip},{ip}] s[{i},{i}] - q^2 s[{ip},{i}] s[{i},{ip}] = q^3 in the host"), || {
                let a = h.mul(&p.s_at(ip, ip), &p.s_at(i, i))?;
                let b = h.mul(&p.s_at(ip, i), &p.s_at(i, ip))?.scale(&q(&v, 2));
                zero(&a.sub(&b).sub(&NcPoly::scalar(q(&v, 3))))
            });
            rep.check(format!("s[{ip},{i}] = q^-2 s[{ip},{ip}] s[{i},{i}] sinv - q sinv in the host"), || {
                let inv = p.s_inv(i)?;
                let a = h.mul(&h.mul(&p.s_at(ip, ip), &p.s_at(i, i))?, &inv)?.scale(&q(&v, -2));
                zero(&p.s_at(ip, i).sub(&a).add(&inv.scale(&q(&v, 1))))
            });
        }
        let abs = match shared(Kind::TwSympl, n2, None) {
            Ok(a) => a,
            Err(e) => return rep.fail("abstract setup", format!("error: {e}")),
        };
        for i in (1..=n2).step_by(2) {
            let ip = prime(i);
            let e = match (|| -> Result<NcPoly> {
                let w = |a: GenSym, b: GenSym| Word::from_slice(&[a, b]);
                let mut e = NcPoly::term(w(GenSym::s_sympl(ip, ip)?, GenSym::s_sympl(i, i)?), q(&v, 0));
                e.add_term(w(GenSym::s_sympl(ip, i)?, GenSym::s_sympl(i, ip)?), -q(&v, 2));
                Ok(e)
            })() {
                Ok(e) => e,
                Err(err) => return rep.fail("abstract setup", format!("error: {err}")),
            };
            for &g in abs.alphabet() {
                rep.check(format!("[central element {i}, {g}] = 0"), || {
                    zero(&abs.normal_form(&e.nc_commutator(&abs.gen(g)))?)
                });
            }
        }
    });
    rep
}

/// Rescalings of `S`: `S ↦ CSC` preserves the abstract reflection relation, and
/// `S = T D T̄ᵗ` satisfies it in the host, for symbolic diagonal `C` and `D`.
pub fn verify_dmatrix_family(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("dmatrix").param("n", n);
    if n == 0 {
        rep.fail("setup", "error: n must be at least 1");
        return rep;
    }
    let names = |p: &str| -> Vec<String> {
        let mut v = vec!["q".to_string()];
        v.extend((1..=n).map(|i| format!("{p}{i}")));
        v
    };
    rep.check("C = 1", || {
        let abs = shared(Kind::TwOrth, n, None)?;
        let v = VarTable::q();
        let s = s_orth_matrix(n, &v);
        rsrs_vanishes_abstract(&abs, &s, &v, &[])
    });
    rep.check("C S C with symbolic diagonal C", || {
        let abs = shared(Kind::TwOrth, n, None)?;
        let cn = names("c");
        let v = VarTable::new(&cn)?;
        let free = FreeAlgebra(v.clone());
        let c = diag(&v, &cn[1..])?;
        let m = OperatorMatrix::product(&free, &[&c, &s_orth_matrix(n, &v), &c])?;
        rsrs_vanishes_abstract(&abs, &m, &v, &cn[1..])
    });
    rep.check("T D Tb^t with symbolic diagonal D", || {
        let h = host(n)?;
        let dn = names("d");
        let v = VarTable::new(&dn)?;
        let d = diag(&v, &dn[1..])?;
        let s = prod(&h, &[&t_matrix(n, &v), &d, &tb_matrix(n, &v).transpose()])?;
        let r = scalar(&v, ConstVariant::R, n)?;
        let rt = r.partial_transpose(1)?;
        let (s1, s2) = legs(&s)?;
        same(&prod(&h, &[&r, &s1, &rt, &s2])?, &prod(&h, &[&s2, &rt, &s1, &r])?)
    });
    rep
}

fn diag(v: &VarTable, names: &[String]) -> Result<AlgMatrix> {
    let free = FreeAlgebra(v.clone());
    let mut m = OperatorMatrix::zero(names.len(), 1);
    for (k, name) in names.iter().enumerate() {
        m.set(&free, k, k, NcPoly::scalar(LaurentPoly::var(v, name)?));
    }
    Ok(m)
}

/// Every coefficient (in the extra scalar variables) of every entry of the
/// reflection relation for `s` reduces to zero in `abs`.
fn rsrs_vanishes_abstract(abs: &Presentation, s: &AlgMatrix, v: &VarTable, extra: &[String]) -> CheckResult {
    let free = FreeAlgebra(v.clone());
    let r = scalar(v, ConstVariant::R, s.n())?;
    let rt = r.partial_transpose(1)?;
    let (s1, s2) = legs(s)?;
    let diff = OperatorMatrix::product(&free, &[&r, &s1, &rt, &s2])?
        .sub(&free, &OperatorMatrix::product(&free, &[&s2, &rt, &s1, &r])?)?;
    let qv = VarTable::q();
    for p in diff.entries().values() {
        let mut parts = vec![p.clone()];
        for name in extra {
            let mut next = Vec::new();
            for x in parts {
                next.extend(x.split_var(name)?.into_values());
            }
            parts = next;
        }
        for x in parts {
            let nf = abs.normal_form(&x.with_vars(&qv)?)?;
            if !nf.is_zero() {
                return Ok(Some(format!("coefficient {x} reduces to {nf}")));
            }
        }
    }
    Ok(None)
}
