use proptest::prelude::*;
use qtwist::coideal::{
    eval_image, s_matrix, verify_affine_reflection, verify_central_qds, verify_coideal, verify_dmatrix_family,
    verify_eval_hom, verify_reflection_finite, verify_sbar_relations, Case,
};
use qtwist::freealg::NcPoly;
use qtwist::presentations::{lift_scalars, shared, Kind};
use qtwist::report::{Status, VerificationReport};
use qtwist::scalars::{LaurentPoly, Rational, VarTable};
use qtwist::tensorcalc::{r_const, ConstVariant, OperatorMatrix};

fn vars() -> VarTable {
    VarTable::q()
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(&vars(), k)
}

fn nf(n: usize, s: &str) -> NcPoly {
    let h = shared(Kind::UqglN, n, None).unwrap();
    h.normal_form(&NcPoly::parse(s, &vars()).unwrap()).unwrap()
}

fn assert_pass(rep: &VerificationReport) {
    let bad: Vec<_> = rep.entries.iter().filter(|e| e.status != Status::Pass).collect();
    assert!(bad.is_empty(), "{}: {bad:?}", rep.suite);
}

fn has(rep: &VerificationReport, id: &str) -> bool {
    rep.entries.iter().any(|e| e.id == id && e.status == Status::Pass)
}

#[test]
fn orth2_entries() {
    let p = s_matrix(Case::Orth, 2).unwrap();
    assert_eq!(p.s_at(2, 1), nf(2, "t[2,1]*tb[1,1] + t[2,2]*tb[1,2]"));
    assert_eq!(p.s_at(1, 1), NcPoly::one(&vars()));
    assert_eq!(p.s_at(2, 2), NcPoly::one(&vars()));
    assert!(p.s_at(1, 2).is_zero());
    assert_eq!(p.sbar_at(1, 2), p.s_at(2, 1).scale(&q(1)));
}

#[test]
fn orth3_is_lower_unitriangular() {
    let p = s_matrix(Case::Orth, 3).unwrap();
    for i in 1..=3 {
        for j in 1..=3 {
            let s = p.s_at(i, j);
            match i.cmp(&j) {
                std::cmp::Ordering::Less => assert!(s.is_zero()),
                std::cmp::Ordering::Equal => assert_eq!(s, NcPoly::one(&vars())),
                std::cmp::Ordering::Greater => assert!(!s.is_zero()),
            }
        }
    }
}

#[test]
fn sympl2_entries_in_generators() {
    let p = s_matrix(Case::Sympl, 2).unwrap();
    assert_eq!(p.s_at(1, 1), nf(2, "q*t[1,1]*tb[1,2]"));
    assert_eq!(p.s_at(1, 2), nf(2, "q*t[1,1]*tb[2,2]"));
    assert_eq!(p.s_at(2, 2), nf(2, "q*t[2,1]*tb[2,2]"));
    assert_eq!(p.s_at(2, 1), nf(2, "q*t[2,1]*tb[1,2] - t[2,2]*tb[1,1]"));
    assert!(p.sbar_at(2, 1).add(&p.s_at(1, 2).scale(&q(-1))).is_zero());
}

#[test]
fn sympl2_inverse_generator() {
    let p = s_matrix(Case::Sympl, 2).unwrap();
    let inv = p.s_inv(1).unwrap();
    assert_eq!(inv, nf(2, "q^-1*t[2,2]*tb[1,1]"));
    assert_eq!(p.host.mul(&p.s_at(1, 2), &inv).unwrap(), NcPoly::one(&vars()));
}

#[test]
fn odd_symplectic_size_is_rejected() {
    assert!(s_matrix(Case::Sympl, 3).is_err());
    assert!(!verify_reflection_finite(Case::Sympl, 3).is_pass());
}

#[test]
fn reflection_finite_passes() {
    for (c, n) in [(Case::Orth, 2), (Case::Orth, 3), (Case::Sympl, 2), (Case::Sympl, 4)] {
        let rep = verify_reflection_finite(c, n);
        assert_pass(&rep);
        assert!(has(&rep, "R S1 Rt S2 = S2 Rt S1 R"));
        assert!(has(&rep, "Tb1^t Rt T2 = T2 Rt Tb1^t"));
    }
}

#[test]
fn perturbed_s_breaks_reflection() {
    // at N = 2 the relation is empty, so perturb at N = 3
    let p = s_matrix(Case::Orth, 3).unwrap();
    let h = &*p.host;
    let mut s = p.s.clone();
    s.set(h, 1, 0, p.s_at(2, 1).scale(&q(1)));
    let r = lift_scalars(&r_const(&vars(), 3, ConstVariant::R).unwrap()).unwrap();
    let rt = r.partial_transpose(1).unwrap();
    let (s1, s2) = (s.embed(&[1], 2).unwrap(), s.embed(&[2], 2).unwrap());
    let lhs = OperatorMatrix::product(h, &[&r, &s1, &rt, &s2]).unwrap();
    let rhs = OperatorMatrix::product(h, &[&s2, &rt, &s1, &r]).unwrap();
    assert!(lhs.first_difference(h, &rhs).is_some());
}

#[test]
fn sbar_relations_pass() {
    for (c, n) in [(Case::Orth, 2), (Case::Orth, 3), (Case::Sympl, 2), (Case::Sympl, 4)] {
        assert_pass(&verify_sbar_relations(c, n));
    }
    let rep = verify_sbar_relations(Case::Orth, 2);
    assert!(has(&rep, "tbar[1,1] t[2,1] = q t[2,1] tbar[1,1]"));
    assert!(has(&rep, "series[2,1] in the twisted image"));
}

#[test]
fn coideal_passes() {
    for (c, n) in [(Case::Orth, 2), (Case::Orth, 3), (Case::Sympl, 2)] {
        let rep = verify_coideal(c, n);
        assert_pass(&rep);
        assert!(has(&rep, "Delta(1) = 1 (x) 1"));
        assert!(has(&rep, "Delta(s1[2,1])"));
    }
    let rep = verify_coideal(Case::Sympl, 2);
    assert!(has(&rep, "Delta(sinv[1,2]) = t[2,2] tbar[1,1] (x) sinv[1,2]"));
    assert!(has(&rep, "Delta(s[2,1])"));
}

#[test]
fn eval_image_coefficients() {
    for (c, k) in [(Case::Orth, -1), (Case::Sympl, 1)] {
        let img = eval_image(c, 2).unwrap();
        let p = s_matrix(c, 2).unwrap();
        let h = &*p.host;
        assert!(img.s_coefficient(0).unwrap().first_difference(h, &p.s).is_none());
        assert!(img.s_coefficient(-1).unwrap().first_difference(h, &p.sbar.scale(h, &q(k))).is_none());
        assert!(img.s_coefficient(-2).unwrap().is_zero());
    }
}

#[test]
fn eval_hom_passes() {
    for (c, n) in [(Case::Orth, 2), (Case::Orth, 3), (Case::Sympl, 2)] {
        let rep = verify_eval_hom(c, n);
        assert_pass(&rep);
        assert_eq!(rep.count(Status::Pass), 18);
    }
    assert!(has(&verify_eval_hom(Case::Orth, 2), "Rtilde S1 Q S2 = c Sbar2 Q S2"));
    assert!(has(&verify_eval_hom(Case::Sympl, 2), "Rtilde S1 Q = c Sbar2 Q"));
}

#[test]
fn affine_reflection_orders() {
    for c in [Case::Orth, Case::Sympl] {
        for ab in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let rep = verify_affine_reflection(c, 2, ab);
            assert_pass(&rep);
            assert_eq!(rep.count(Status::Skip), 0);
            assert_eq!(rep.params["window"], "2");
            assert_eq!(rep.entries.len(), (ab.0 + 1) * (ab.1 + 1));
        }
    }
}

#[test]
fn affine_order_two_runs_in_wider_window() {
    let rep = verify_affine_reflection(Case::Orth, 2, (2, 0));
    assert_pass(&rep);
    assert_eq!(rep.params["window"], "2");
}

#[test]
fn central_qds() {
    for n in [1, 2] {
        let rep = verify_central_qds(n);
        assert_pass(&rep);
    }
    assert!(has(&verify_central_qds(2), "s[4,4] s[3,3] - q^2 s[4,3] s[3,4] = q^3 in the host"));
    assert!(!verify_central_qds(0).is_pass());
}

#[test]
fn dmatrix_family() {
    for n in [2, 3] {
        let rep = verify_dmatrix_family(n);
        assert_pass(&rep);
        assert_eq!(rep.count(Status::Pass), 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// `C S C` for a numeric diagonal `C` still satisfies the reflection relation in the host.
    #[test]
    fn numeric_rescaling_preserves_reflection(c in proptest::collection::vec(1i64..6, 3)) {
        let p = s_matrix(Case::Orth, 3).unwrap();
        let h = &*p.host;
        let v = vars();
        let mut cm = OperatorMatrix::zero(3, 1);
        for (k, x) in c.iter().enumerate() {
            cm.set(h, k, k, NcPoly::scalar(LaurentPoly::constant(&v, Rational::from_int(*x))));
        }
        let s = OperatorMatrix::product(h, &[&cm, &p.s, &cm]).unwrap();
        let r = lift_scalars(&r_const(&v, 3, ConstVariant::R).unwrap()).unwrap();
        let rt = r.partial_transpose(1).unwrap();
        let (s1, s2) = (s.embed(&[1], 2).unwrap(), s.embed(&[2], 2).unwrap());
        let lhs = OperatorMatrix::product(h, &[&r, &s1, &rt, &s2]).unwrap();
        let rhs = OperatorMatrix::product(h, &[&s2, &rt, &s1, &r]).unwrap();
        prop_assert!(lhs.first_difference(h, &rhs).is_none());
    }
}
