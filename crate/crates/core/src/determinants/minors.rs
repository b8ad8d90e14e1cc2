use super::*;
use crate::error::Error;
use crate::report::{CheckResult, VerificationReport};
use crate::tensorcalc::permutations;

/// `t^{a₁…a_r}_{b₁…b_r}(u)` for `T(u)` or `T̄(u)`, arguments `u, q⁻²u, …, q^{−2r+2}u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumMinorKey {
    pub which: Which,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl QuantumMinorKey {
    pub fn new(which: Which, a: &[usize], b: &[usize]) -> Self {
        QuantumMinorKey { which, a: a.to_vec(), b: b.to_vec() }
    }

    fn check(&self, n: usize) -> Result<()> {
        let r = self.a.len();
        if r == 0 || r != self.b.len() || r > n {
            return Err(Error::InvalidArgument(format!("minor of size {r} x {} in N = {n}", self.b.len())));
        }
        if self.a.iter().chain(&self.b).any(|&i| i == 0 || i > n) {
            return Err(Error::InvalidArgument(format!("minor indices {:?};{:?} out of 1..{n}", self.a, self.b)));
        }
        Ok(())
    }
}

fn has_repeat(x: &[usize]) -> bool {
    (0..x.len()).any(|i| x[i + 1..].contains(&x[i]))
}

/// `Σ_σ (−q)^{−l(σ)} m_{a_σ(1) b_1}(z) ⋯ m_{a_σ(r) b_r}(q^{−2r+2}z)`.
pub(crate) fn top_formula(ctx: &GlEval, which: Which, a: &[usize], b: &[usize], z: &LaurentPoly) -> Result<NcPoly> {
    let h = &*ctx.host;
    let r = a.len();
    let mut acc = NcPoly::zero(&ctx.vars);
    for s in permutations(r) {
        let mut term = NcPoly::scalar(mq(&ctx.vars, -(inversions(&s) as i32)));
        for k in 0..r {
            let zk = &LaurentPoly::q_pow(&ctx.vars, -2 * k as i32) * z;
            term = h.mul(&term, &ctx.entry_at(which, a[s[k] - 1], b[k], &zk)?)?;
        }
        acc.add_assign(&term);
    }
    Ok(acc)
}

/// `Σ_σ (−q)^{l(σ)} m_{a_r b_σ(r)}(q^{−2r+2}z) ⋯ m_{a_1 b_σ(1)}(z)`.
pub(crate) fn bottom_formula(ctx: &GlEval, which: Which, a: &[usize], b: &[usize], z: &LaurentPoly) -> Result<NcPoly> {
    let h = &*ctx.host;
    let r = a.len();
    let mut acc = NcPoly::zero(&ctx.vars);
    for s in permutations(r) {
        let mut term = NcPoly::scalar(mq(&ctx.vars, inversions(&s) as i32));
        for k in (0..r).rev() {
            let zk = &LaurentPoly::q_pow(&ctx.vars, -2 * k as i32) * z;
            term = h.mul(&term, &ctx.entry_at(which, a[k], b[s[k] - 1], &zk)?)?;
        }
        acc.add_assign(&term);
    }
    Ok(acc)
}

/// The minor at argument `z`: zero on repeated indices, otherwise the top
/// indices are sorted and the sign `(−q)^{l(τ)}` restored.
pub(crate) fn minor_at(ctx: &GlEval, key: &QuantumMinorKey, z: &LaurentPoly) -> Result<NcPoly> {
    key.check(ctx.n)?;
    if has_repeat(&key.a) || has_repeat(&key.b) {
        return Ok(NcPoly::zero(&ctx.vars));
    }
    let mut sorted = key.a.clone();
    sorted.sort_unstable();
    let sign = mq(&ctx.vars, inversions(&key.a) as i32);
    Ok(top_formula(ctx, key.which, &sorted, &key.b, z)?.scale(&sign))
}

/// The quantum minor in the evaluation image, as a Laurent polynomial in `u`.
pub fn quantum_minor(ctx: &GlEval, key: &QuantumMinorKey) -> Result<NcPoly> {
    minor_at(ctx, key, &ctx.u(0, 1))
}

/// `qdet T(u)` or `qdet T̄(u)`.
pub fn qdet(ctx: &GlEval, which: Which) -> Result<NcPoly> {
    let all: Vec<usize> = (1..=ctx.n).collect();
    quantum_minor(ctx, &QuantumMinorKey::new(which, &all, &all))
}

/// Sorted `r`-subsets of `1..n`.
pub(crate) fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, r, &mut Vec::new(), &mut out);
    out
}

fn permuted(x: &[usize], s: &[usize]) -> Vec<usize> {
    s.iter().map(|&k| x[k - 1]).collect()
}

fn differ(label: impl FnOnce() -> String, lhs: &NcPoly, rhs: &NcPoly) -> Option<String> {
    let d = lhs.sub(rhs);
    (!d.is_zero()).then(|| format!("{}: difference {d}", label()))
}

/// Every coefficient of `p` in `u` commutes with every generator of the host.
pub(crate) fn central_in_host(h: &Presentation, p: &NcPoly) -> CheckResult {
    for (k, c) in u_coefficients(p, &h.vars)? {
        for &g in h.alphabet() {
            let x = h.gen(g);
            let d = h.mul(&c, &x)?.sub(&h.mul(&x, &c)?);
            if !d.is_zero() {
                return Ok(Some(format!("coefficient of u^{k} vs {g}: {d}")));
            }
        }
    }
    Ok(None)
}

/// Antisymmetry in top and bottom indices, agreement of the two expansions,
/// vanishing on repeated indices, the column expansion and the commutation
/// of generator series with minors, for `T` and `T̄` in `U_q(gl_N)`.
pub fn verify_minor_identities(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("minors").param("n", n);
    let ctx = match GlEval::new(n) {
        Ok(c) => c,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    let u = ctx.u(0, 1);
    let whichs = [Which::T, Which::Tbar];
    let sets = |r: usize| subsets(n, r);

    rep.check("top and bottom expansions agree on sorted indices", || {
        for w in whichs {
            for r in 1..=n {
                for a in sets(r) {
                    for b in sets(r) {
                        let lhs = top_formula(&ctx, w, &a, &b, &u)?;
                        let rhs = bottom_formula(&ctx, w, &a, &b, &u)?;
                        if let Some(m) = differ(|| format!("{w:?} {a:?};{b:?}"), &lhs, &rhs) {
                            return Ok(Some(m));
                        }
                    }
                }
            }
        }
        Ok(None)
    });

    rep.check("top antisymmetry: minor(a.tau; b) = (-q)^l(tau) minor(a; b)", || {
        for w in whichs {
            for r in 2..=n {
                for a in sets(r) {
                    let base: Vec<(Vec<usize>, NcPoly)> =
                        sets(r).into_iter().map(|b| Ok((b.clone(), top_formula(&ctx, w, &a, &b, &u)?))).collect::<Result<_>>()?;
                    for s in permutations(r) {
                        let at = permuted(&a, &s);
                        let sign = mq(&ctx.vars, inversions(&s) as i32);
                        for (b, m) in &base {
                            let lhs = bottom_formula(&ctx, w, &at, b, &u)?;
                            if let Some(x) = differ(|| format!("{w:?} {at:?};{b:?}"), &lhs, &m.scale(&sign)) {
                                return Ok(Some(x));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    });

    rep.check("bottom antisymmetry: minor(a; b.tau) = (-q)^-l(tau) minor(a; b)", || {
        for w in whichs {
            for r in 2..=n {
                for b in sets(r) {
                    for a in sets(r) {
                        let m = bottom_formula(&ctx, w, &a, &b, &u)?;
                        for s in permutations(r) {
                            let bt = permuted(&b, &s);
                            let sign = mq(&ctx.vars, -(inversions(&s) as i32));
                            let lhs = top_formula(&ctx, w, &a, &bt, &u)?;
                            if let Some(x) = differ(|| format!("{w:?} {a:?};{bt:?}"), &lhs, &m.scale(&sign)) {
                                return Ok(Some(x));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    });

    rep.check("repeated top or bottom indices give zero", || {
        for w in whichs {
            for r in 2..=n {
                for a in sets(r) {
                    for i in 0..r {
                        for j in 0..r {
                            if i == j {
                                continue;
                            }
                            let mut rep_ix = a.clone();
                            rep_ix[j] = a[i];
                            for b in sets(r) {
                                let x = top_formula(&ctx, w, &a, &rep_ix, &u)?;
                                let y = bottom_formula(&ctx, w, &rep_ix, &b, &u)?;
                                if !x.is_zero() || !y.is_zero() {
                                    return Ok(Some(format!("{w:?} repeated {rep_ix:?}: {x} / {y}")));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    });

    rep.check("column expansion along b_1", || {
        let h = &*ctx.host;
        let shifted = ctx.u(-2, 1);
        for w in whichs {
            for r in 2..=n {
                for a in sets(r) {
                    for b in sets(r) {
                        let mut sum = NcPoly::zero(&ctx.vars);
                        for l in 0..r {
                            let mut rest = a.clone();
                            rest.remove(l);
                            let sub = QuantumMinorKey::new(w, &rest, &b[1..]);
                            let term = h.mul(&ctx.entry_at(w, a[l], b[0], &u)?, &minor_at(&ctx, &sub, &shifted)?)?;
                            sum.add_assign(&term.scale(&mq(&ctx.vars, -(l as i32))));
                        }
                        let direct = top_formula(&ctx, w, &a, &b, &u)?;
                        if let Some(x) = differ(|| format!("{w:?} {a:?};{b:?}"), &sum, &direct) {
                            return Ok(Some(x));
                        }
                    }
                }
            }
        }
        Ok(None)
    });

    rep.check("[m_{c_i d_j}(u), minor^c_d(v)] = 0", || {
        let h = &*ctx.host;
        let v = spectral(&ctx.vars, "v", 0, 1);
        for wm in whichs {
            for r in 1..=n {
                for c in sets(r) {
                    for d in sets(r) {
                        let m = minor_at(&ctx, &QuantumMinorKey::new(wm, &c, &d), &v)?;
                        for wg in whichs {
                            for &ci in &c {
                                for &dj in &d {
                                    let g = ctx.entry_at(wg, ci, dj, &u)?;
                                    let x = h.mul(&g, &m)?.sub(&h.mul(&m, &g)?);
                                    if !x.is_zero() {
                                        return Ok(Some(format!("{wg:?}[{ci},{dj}] vs {wm:?} {c:?};{d:?}: {x}")));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    });
    rep
}

/// Centrality of both quantum determinants and `d₀ d̄₀ = 1`.
pub fn verify_qdet(n: usize) -> VerificationReport {
    let mut rep = VerificationReport::new("qdet").param("n", n);
    let ctx = match GlEval::new(n) {
        Ok(c) => c,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    let h = &*ctx.host;
    let dets = (|| -> Result<_> { Ok((qdet(&ctx, Which::T)?, qdet(&ctx, Which::Tbar)?)) })();
    let (d, db) = match dets {
        Ok(x) => x,
        Err(e) => {
            rep.fail("setup", format!("error: {e}"));
            return rep;
        }
    };
    rep.check("qdet T(u) coefficients are central", || central_in_host(h, &d));
    rep.check("qdet Tbar(u) coefficients are central", || central_in_host(h, &db));
    rep.check("d0 dbar0 = 1", || {
        let d0 = d.coeff_of_var("u", 0)?.with_vars(&h.vars)?;
        let db0 = db.coeff_of_var("u", 0)?.with_vars(&h.vars)?;
        let p = h.mul(&d0, &db0)?;
        Ok((p != NcPoly::one(&h.vars)).then(|| format!("d0 dbar0 = {p}")))
    });
    rep
}
