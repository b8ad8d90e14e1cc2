use proptest::prelude::*;
use qtwist::freealg::{delta_affine, delta_finite, prime, tensor2_apply_delta, GenSym, NcPoly, NcPoly2, Word};
use qtwist::scalars::{LaurentPoly, Rational, VarTable};

fn vars() -> VarTable {
    VarTable::quvw()
}

fn finite_gens(n: usize) -> Vec<GenSym> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            out.extend(GenSym::t(i, j).ok());
            out.extend(GenSym::tb(i, j).ok());
        }
    }
    out
}

fn affine_gens(n: usize, d: usize) -> Vec<GenSym> {
    let mut out = Vec::new();
    for r in 0..=d {
        for i in 1..=n {
            for j in 1..=n {
                out.extend(GenSym::t_deg(r, i, j).ok());
                out.extend(GenSym::tb_deg(r, i, j).ok());
            }
        }
    }
    out
}

fn poly(alphabet: Vec<GenSym>) -> impl Strategy<Value = NcPoly> {
    let term = (prop::collection::vec(prop::sample::select(alphabet), 0..4), -5i64..=5, -2i32..=2, -1i32..=1);
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        let v = vars();
        let mut p = NcPoly::zero(&v);
        for (w, c, qe, ue) in terms {
            p.add_term(Word::from_slice(&w), LaurentPoly::monomial(&v, Rational::from_int(c), &[qe, ue]));
        }
        p
    })
}

#[test]
fn generator_constraints_are_exhaustive() {
    for i in 1..=4 {
        for j in 1..=4 {
            assert_eq!(GenSym::t(i, j).is_ok(), i >= j, "t[{i},{j}]");
            assert_eq!(GenSym::tb(i, j).is_ok(), i <= j, "tb[{i},{j}]");
            assert_eq!(GenSym::s_orth(i, j).is_ok(), i > j, "s[{i},{j}] orth");
            assert_eq!(GenSym::s_sympl(i, j).is_ok(), i >= j || (i % 2 == 1 && j == prime(i)), "s[{i},{j}] sympl");
            assert_eq!(GenSym::t_deg(0, i, j).is_ok(), i >= j);
            assert!(GenSym::t_deg(2, i, j).is_ok());
        }
        assert_eq!(GenSym::sinv(i).is_ok(), i % 2 == 1);
    }
}

#[test]
fn generator_text_round_trip() {
    let v = vars();
    for g in affine_gens(3, 2).into_iter().chain(finite_gens(3)) {
        let p = NcPoly::gen(g, &v);
        assert_eq!(NcPoly::parse(&p.to_string(), &v).unwrap(), p, "{g}");
    }
}

#[test]
fn delta_of_generators() {
    let v = vars();
    let rule = |g: GenSym| delta_finite(g, &v);
    assert_eq!(tensor2_apply_delta(&NcPoly::one(&v), &rule).unwrap(), NcPoly2::one(&v));
    // t_31 -> t_31 (x) t_11 + t_32 (x) t_21 + t_33 (x) t_31
    let t = |i, j| NcPoly::gen(GenSym::t(i, j).unwrap(), &v);
    let mut expect = NcPoly2::zero(&v);
    for k in 1..=3 {
        expect.add_assign(&NcPoly2::tensor(&t(3, k), &t(k, 1)));
    }
    assert_eq!(tensor2_apply_delta(&t(3, 1), &rule).unwrap(), expect);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_is_associative_and_unital(a in poly(finite_gens(3)), b in poly(finite_gens(3)), c in poly(finite_gens(3))) {
        prop_assert_eq!(a.nc_mul(&b).nc_mul(&c), a.nc_mul(&b.nc_mul(&c)));
        let one = NcPoly::one(&vars());
        prop_assert_eq!(one.nc_mul(&a), a.clone());
        prop_assert_eq!(a.nc_mul(&one), a.clone());
        prop_assert_eq!(a.nc_mul(&b.add(&c)), a.nc_mul(&b).add(&a.nc_mul(&c)));
    }

    #[test]
    fn delta_is_multiplicative(x in poly(finite_gens(3)), y in poly(finite_gens(3))) {
        let v = vars();
        let rule = |g: GenSym| delta_finite(g, &v);
        let d = |p: &NcPoly| tensor2_apply_delta(p, &rule).unwrap();
        prop_assert_eq!(d(&x.nc_mul(&y)), d(&x).mul(&d(&y)));
        prop_assert_eq!(d(&x.add(&y)), { let mut s = d(&x); s.add_assign(&d(&y)); s });
    }

    #[test]
    fn affine_delta_is_multiplicative(x in poly(affine_gens(2, 2)), y in poly(affine_gens(2, 2))) {
        let v = vars();
        let rule = |g: GenSym| delta_affine(g, 2, &v);
        let d = |p: &NcPoly| tensor2_apply_delta(p, &rule).unwrap();
        prop_assert_eq!(d(&x.nc_mul(&y)), d(&x).mul(&d(&y)));
    }

    #[test]
    fn text_round_trip(p in poly(affine_gens(3, 2))) {
        prop_assert_eq!(NcPoly::parse(&p.to_string(), &vars()).unwrap(), p);
    }

    #[test]
    fn no_zero_coefficients(a in poly(finite_gens(2)), b in poly(finite_gens(2))) {
        for p in [a.add(&b), a.sub(&b), a.nc_mul(&b), a.nc_commutator(&b)] {
            prop_assert!(p.terms().values().all(|c| !c.is_zero()));
        }
        prop_assert!(a.sub(&a).is_zero());
    }
}
