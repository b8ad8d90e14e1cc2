use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;
use qtwist::scalars::{cmp_exps, frac_eq, LaurentPoly, Rational, ScalarFraction, VarTable};

fn vars() -> VarTable {
    VarTable::quvw()
}

fn lp(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s, &vars()).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

/// Up to five terms, exponents in -3..=3, over (q, u, v, w).
fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((rational(), prop::array::uniform4(-3i32..=3)), 0..5).prop_map(|terms| {
        let v = vars();
        let mut acc = LaurentPoly::zero(&v);
        for (c, e) in terms {
            acc = &acc + &LaurentPoly::monomial(&v, c, &e);
        }
        acc
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

/// Nonzero coefficients, exponent vectors padded implicitly with zeros (so at
/// most one entry per variable and no trailing zero), strictly sorted.
fn well_formed(p: &LaurentPoly) -> bool {
    let t = p.terms();
    t.iter().all(|(e, c)| !c.is_zero() && e.len() <= p.vars().len() && e.last() != Some(&0))
        && t.windows(2).all(|w| cmp_exps(&w[0].0, &w[1].0) == std::cmp::Ordering::Less)
}

#[test]
fn worked_examples() {
    assert!((&lp("q") + &lp("-q")).is_zero());
    assert_eq!(&lp("q - q^-1") * &lp("q + q^-1"), lp("q^2 - q^-2"));
    assert_eq!(&lp("u - v") * &lp("q^-1*u - q*v"), lp("q^-1*u^2 - q*u*v - q^-1*u*v + q*v^2"));
    let shift = lp("q^-2*u");
    assert_eq!(lp("u^2").subst("u", &shift).unwrap(), lp("q^-4*u^2"));
    assert_eq!(lp("u - v").subst("u", &lp("u^-1")).unwrap(), lp("u^-1 - v"));
    assert_eq!(lp("u^-1 - q^-2*u").subst("u", &shift).unwrap(), lp("q^2*u^-1 - q^-4*u"));
}

#[test]
fn fraction_examples() {
    let f = |a: &str, b: &str| ScalarFraction::new(lp(a), lp(b)).unwrap();
    assert!(frac_eq(&f("q", "1"), &f("q^2", "q")).unwrap());
    assert!(frac_eq(&f("u - v", "1"), &f("u^2 - v^2", "u + v")).unwrap());
    assert!(!frac_eq(&f("u - v", "1"), &f("u^2 - v^2", "u - v")).unwrap());
    assert!(ScalarFraction::new(lp("q"), lp("0")).is_err());
}

#[test]
fn mismatched_tables_are_rejected() {
    let a = LaurentPoly::parse("q", &VarTable::new(&["q", "u"]).unwrap()).unwrap();
    let b = LaurentPoly::parse("x", &VarTable::new(&["x"]).unwrap()).unwrap();
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&b).is_err());
}

#[test]
fn unknown_variable_in_subst() {
    assert!(lp("q").subst("z", &lp("q")).is_err());
    assert!(LaurentPoly::parse("z", &vars()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(&vars()), a.clone());
    }

    #[test]
    fn results_are_well_formed(a in laurent(), b in laurent()) {
        for p in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(well_formed(&p));
        }
    }

    #[test]
    fn rational_is_reduced(n in -10_000i64..10_000, d in prop::num::i64::ANY.prop_filter("nonzero", |d| *d != 0 && *d != i64::MIN)) {
        let r = Rational::new(n, d);
        prop_assert!(r.denom().is_positive());
        prop_assert!(r.numer().gcd(&r.denom()).is_one() || r.numer() == 0.into());
        prop_assert_eq!(Rational::parse(&r.to_string()), Some(r));
    }

    #[test]
    fn rational_field(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Some(inv) = a.recip() {
            prop_assert!((&a * &inv).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn subst_shift_round_trip(p in laurent()) {
        let there = p.subst("u", &lp("q^-2*u")).unwrap();
        prop_assert_eq!(there.subst("u", &lp("q^2*u")).unwrap(), p.clone());
        let inv = p.subst("v", &lp("v^-1")).unwrap();
        prop_assert_eq!(inv.subst("v", &lp("v^-1")).unwrap(), p);
    }

    #[test]
    fn subst_is_a_ring_map(a in laurent(), b in laurent()) {
        let s = |p: &LaurentPoly| p.subst("w", &lp("-3*q*w^-2")).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn text_round_trip(p in laurent()) {
        prop_assert_eq!(LaurentPoly::parse(&p.to_string(), &vars()).unwrap(), p);
    }

    #[test]
    fn frac_eq_is_an_equivalence(
        n in laurent(), d in nonzero_laurent(),
        s in nonzero_laurent(), t in nonzero_laurent(),
        other in laurent(), od in nonzero_laurent(),
    ) {
        let a = ScalarFraction::new(n.clone(), d.clone()).unwrap();
        let b = ScalarFraction::new(&n * &s, &d * &s).unwrap();
        let c = ScalarFraction::new(&(&n * &s) * &t, &(&d * &s) * &t).unwrap();
        let x = ScalarFraction::new(other, od).unwrap();
        prop_assert!(frac_eq(&a, &a).unwrap());
        prop_assert!(frac_eq(&a, &b).unwrap() && frac_eq(&b, &a).unwrap());
        prop_assert!(frac_eq(&b, &c).unwrap() && frac_eq(&a, &c).unwrap());
        prop_assert_eq!(frac_eq(&a, &x).unwrap(), frac_eq(&x, &a).unwrap());
        if frac_eq(&a, &x).unwrap() {
            prop_assert!(frac_eq(&c, &x).unwrap());
        }
    }
}
