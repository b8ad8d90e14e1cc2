use super::constants::*;
use super::matrix::OperatorMatrix;
use super::ring::Scalars;
use crate::error::Result;
use crate::report::{CheckResult, VerificationReport};
use crate::scalars::{LaurentPoly, VarTable};

/// Compares two scalar matrices and describes the first differing entry.
pub fn compare(ring: &Scalars, lhs: &ScalarMatrix, rhs: &ScalarMatrix) -> CheckResult {
    Ok(lhs
        .first_difference(ring, rhs)
        .map(|(i, j, a, b)| format!("entry {i:?},{j:?}: lhs = {a}, rhs = {b}")))
}

fn prod(ring: &Scalars, ms: &[&ScalarMatrix]) -> Result<ScalarMatrix> {
    OperatorMatrix::product(ring, ms)
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` for a given two-factor operator.
pub fn ybe_const_check(vars: &VarTable, r: &ScalarMatrix) -> CheckResult {
    let ring = Scalars(vars.clone());
    let r12 = r.embed(&[1, 2], 3)?;
    let r13 = r.embed(&[1, 3], 3)?;
    let r23 = r.embed(&[2, 3], 3)?;
    compare(&ring, &prod(&ring, &[&r12, &r13, &r23])?, &prod(&ring, &[&r23, &r13, &r12])?)
}

/// The trigonometric matrix written out entry by entry, independently of
/// the decomposition through R and R̃.
pub fn r_spectral_display(vars: &VarTable, n: usize, u: &LaurentPoly, v: &LaurentPoly) -> Result<ScalarMatrix> {
    let ring = Scalars(vars.clone());
    let q = LaurentPoly::q_pow(vars, 1);
    let qi = LaurentPoly::q_pow(vars, -1);
    let mut m = OperatorMatrix::zero(n, 2);
    let idx = |a: usize, b: usize| super::matrix::tuple_to_index(n, &[a, b]);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                m.add_at(&ring, idx(i, i), idx(i, i), &(&(&qi * u) - &(&q * v)));
            } else {
                m.add_at(&ring, idx(i, j), idx(i, j), &(u - v));
                let c = if i > j { &(&qi - &q) * u } else { &(&qi - &q) * v };
                m.add_at(&ring, idx(i, j), idx(j, i), &c);
            }
        }
    }
    Ok(m)
}

fn pass_if(b: bool, what: &str) -> CheckResult {
    Ok(if b { None } else { Some(what.to_string()) })
}

/// Scalar-level identities among the R-matrices, permutation operators,
/// q-antisymmetrizers and (for even `n`) the form G.
pub fn verify_tensor_identities(n: usize) -> VerificationReport {
    let vars = VarTable::quvw();
    let ring = Scalars(vars.clone());
    let mut rep = VerificationReport::new("tensor").param("N", n);
    let lp = |k: i32| LaurentPoly::q_pow(&vars, k);
    let var = |s: &str| LaurentPoly::var(&vars, s).expect("variable");

    let mk = |v: ConstVariant| r_const(&vars, n, v).expect("constant matrix");
    let (r, rt, p, qm) = (mk(ConstVariant::R), mk(ConstVariant::Rtilde), mk(ConstVariant::P), mk(ConstVariant::Q));
    let id2 = OperatorMatrix::identity(&ring, n, 2);

    rep.check("yang-baxter-constant", || ybe_const_check(&vars, &r));
    rep.check("yang-baxter-spectral", || {
        let (u, v, w) = (var("u"), var("v"), var("w"));
        let r12 = r_spectral_at(&vars, n, &u, &v)?.embed(&[1, 2], 3)?;
        let r13 = r_spectral_at(&vars, n, &u, &w)?.embed(&[1, 3], 3)?;
        let r23 = r_spectral_at(&vars, n, &v, &w)?.embed(&[2, 3], 3)?;
        compare(&ring, &prod(&ring, &[&r12, &r13, &r23])?, &prod(&ring, &[&r23, &r13, &r12])?)
    });
    rep.check("r-minus-rtilde", || compare(&ring, &r.sub(&ring, &rt)?, &p.scale(&ring, &(&lp(1) - &lp(-1)))));
    rep.check("rtilde-is-p-rinv-p", || compare(&ring, &prod(&ring, &[&r, &p, &rt, &p])?, &id2));
    rep.check("spectral-decomposition", || {
        let (u, v) = (var("u"), var("v"));
        let display = r_spectral_display(&vars, n, &u, &v)?;
        compare(&ring, &display, &rt.scale(&ring, &u).sub(&ring, &r.scale(&ring, &v))?)
    });
    rep.check("r-rt-commute", || {
        let rtr = r.partial_transpose(1)?;
        compare(&ring, &r.mul(&ring, &rtr)?, &rtr.mul(&ring, &r)?)
    });
    rep.check("p-squared", || compare(&ring, &p.mul(&ring, &p)?, &id2));
    rep.check("q-is-pt", || compare(&ring, &p.partial_transpose(1)?, &qm));
    rep.check("pq-qp-q", || {
        let a = p.mul(&ring, &qm)?;
        let b = qm.mul(&ring, &p)?;
        pass_if(a == qm && b == qm, "PQ or QP differs from Q")
    });
    rep.check("q-squared", || {
        compare(&ring, &qm.mul(&ring, &qm)?, &qm.scale(&ring, &LaurentPoly::from_int(&vars, n as i64)))
    });
    rep.check("rtilde-q", || {
        let target = qm.scale(&ring, &lp(-1));
        let a = rt.mul(&ring, &qm)?;
        let b = qm.mul(&ring, &rt)?;
        match compare(&ring, &a, &target)? {
            Some(w) => Ok(Some(w)),
            None => compare(&ring, &b, &target),
        }
    });
    rep.check("pq-braid", || {
        let pq = mk(ConstVariant::Pq);
        let a = pq.embed(&[1, 2], 3)?;
        let b = pq.embed(&[2, 3], 3)?;
        if let Some(w) = compare(&ring, &pq.mul(&ring, &pq)?, &id2)? {
            return Ok(Some(format!("involution: {w}")));
        }
        compare(&ring, &prod(&ring, &[&a, &b, &a])?, &prod(&ring, &[&b, &a, &b])?)
    });
    for rr in 1..=3usize {
        rep.check(format!("antisymmetrizer-quasi-idempotent-r{rr}"), || {
            let a = q_antisymmetrizer(&vars, n, rr)?;
            let fact: i64 = (1..=rr as i64).product();
            compare(&ring, &a.mul(&ring, &a)?, &a.scale(&ring, &LaurentPoly::from_int(&vars, fact)))
        });
    }
    rep.check("antisymmetrizer-identity-coefficient", || {
        let a = q_antisymmetrizer(&vars, n, n)?;
        let t: Vec<usize> = (1..=n).collect();
        let c = a.at(&ring, &t, &t);
        pass_if(c.is_one(), &format!("coefficient is {c}"))
    });
    for rr in 2..=3usize {
        rep.check(format!("fused-r-antisymmetrizer-r{rr}"), || {
            let args: Vec<LaurentPoly> = (0..rr as i32).map(|i| lp(-2 * i)).collect();
            let lhs = r_long(&vars, n, &args)?;
            let a = q_antisymmetrizer(&vars, n, rr)?;
            compare(&ring, &lhs, &a.scale(&ring, &antisymmetrizer_factor(&vars, rr)))
        });
    }
    if n % 2 == 0 {
        let g = mk(ConstVariant::G);
        let (g1, g2) = (g.embed(&[1], 2).expect("embed"), g.embed(&[2], 2).expect("embed"));
        let rtt = rt.partial_transpose(1).expect("transpose");
        let rtr = r.partial_transpose(1).expect("transpose");
        let cases: [(&str, &ScalarMatrix, &ScalarMatrix); 4] = [
            ("g-reflection", &r, &rtr),
            ("g-reflection-rtilde-rt", &rt, &rtr),
            ("g-reflection-r-rtildet", &r, &rtt),
            ("g-reflection-rtilde-rtildet", &rt, &rtt),
        ];
        for (id, a, b) in cases {
            rep.check(id, || compare(&ring, &prod(&ring, &[a, &g1, b, &g2])?, &prod(&ring, &[&g2, b, &g1, a])?));
        }
        rep.check("g-reflection-q", || {
            compare(&ring, &prod(&ring, &[&r, &g1, &qm, &g2])?, &prod(&ring, &[&g2, &qm, &g1, &r])?)
        });
        rep.check("g-reflection-spectral", || {
            let (u, v) = (var("u"), var("v"));
            let ruv = r_spectral_at(&vars, n, &u, &v)?;
            let rtuv = r_spectral_at(&vars, n, &LaurentPoly::var_pow(&vars, "u", -1)?, &v)?.partial_transpose(1)?;
            compare(&ring, &prod(&ring, &[&ruv, &g1, &rtuv, &g2])?, &prod(&ring, &[&g2, &rtuv, &g1, &ruv])?)
        });
        rep.check("rtilde-g-q", || {
            compare(&ring, &prod(&ring, &[&rt, &g1, &qm])?, &g2.mul(&ring, &qm)?.scale(&ring, &-&lp(1)))
        });
    }
    rep
}

/// Multiplies the first stored entry by `q`; used to check that the suite catches a corrupted matrix.
pub fn mutate_entry(m: &ScalarMatrix, vars: &VarTable) -> ScalarMatrix {
    let ring = Scalars(vars.clone());
    let mut out = m.clone();
    if let Some((&(i, j), v)) = m.entries().iter().next() {
        out.set(&ring, i, j, v * &LaurentPoly::q_pow(vars, 1));
    }
    out
}
