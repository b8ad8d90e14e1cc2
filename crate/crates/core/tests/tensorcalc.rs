use proptest::prelude::*;
use qtwist::report::Status;
use qtwist::scalars::{LaurentPoly, Rational, VarTable};
use qtwist::tensorcalc::*;

fn vars() -> VarTable {
    VarTable::quvw()
}

fn lp(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s, &vars()).unwrap()
}

/// `Σ c · E_ij ⊗ E_kl` from a list of `(i, j, k, l, c)`.
fn from_units(n: usize, units: &[(usize, usize, usize, usize, LaurentPoly)]) -> ScalarMatrix {
    let ring = Scalars(vars());
    let mut m = OperatorMatrix::zero(n, 2);
    for (i, j, k, l, c) in units {
        m.add_at(&ring, tuple_to_index(n, &[*i, *k]), tuple_to_index(n, &[*j, *l]), c);
    }
    m
}

/// The four constant matrices written out term by term.
fn oracle(n: usize, which: ConstVariant) -> ScalarMatrix {
    let one = LaurentPoly::one(&vars());
    let mut u = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            match which {
                ConstVariant::P => u.push((i, j, j, i, one.clone())),
                ConstVariant::Q => u.push((i, j, i, j, one.clone())),
                ConstVariant::R | ConstVariant::Rtilde => {
                    let tilde = which == ConstVariant::Rtilde;
                    if i == j {
                        u.push((i, i, i, i, lp(if tilde { "q^-1" } else { "q" })));
                    } else {
                        u.push((i, i, j, j, one.clone()));
                    }
                    if !tilde && i < j {
                        u.push((i, j, j, i, lp("q - q^-1")));
                    }
                    if tilde && i > j {
                        u.push((i, j, j, i, lp("q^-1 - q")));
                    }
                }
                _ => unreachable!(),
            }
        }
    }
    from_units(n, &u)
}

#[test]
fn constants_match_term_by_term_expansion() {
    for n in 1..=4 {
        for c in [ConstVariant::R, ConstVariant::Rtilde, ConstVariant::P, ConstVariant::Q] {
            assert_eq!(r_const(&vars(), n, c).unwrap(), oracle(n, c), "{c:?} at N={n}");
        }
    }
}

#[test]
fn rtilde_is_p_rinv_p() {
    let ring = Scalars(vars());
    for n in 2..=3 {
        let (r, rt, p) = (oracle(n, ConstVariant::R), oracle(n, ConstVariant::Rtilde), oracle(n, ConstVariant::P));
        let prod = OperatorMatrix::product(&ring, &[&r, &p, &rt, &p]).unwrap();
        assert_eq!(prod, OperatorMatrix::identity(&ring, n, 2));
    }
}

#[test]
fn r_minus_rtilde_and_q_relations() {
    let ring = Scalars(vars());
    for n in 2..=3 {
        let c = |v| r_const(&vars(), n, v).unwrap();
        let (r, rt, p, q) = (c(ConstVariant::R), c(ConstVariant::Rtilde), c(ConstVariant::P), c(ConstVariant::Q));
        assert_eq!(r.sub(&ring, &rt).unwrap(), p.scale(&ring, &lp("q - q^-1")));
        assert_eq!(rt.mul(&ring, &q).unwrap(), q.scale(&ring, &lp("q^-1")));
        assert_eq!(q.mul(&ring, &rt).unwrap(), q.scale(&ring, &lp("q^-1")));
        assert_eq!(q.mul(&ring, &q).unwrap(), q.scale(&ring, &LaurentPoly::from_int(&vars(), n as i64)));
        assert_eq!(p.mul(&ring, &q).unwrap(), q);
        assert_eq!(p.mul(&ring, &p).unwrap(), OperatorMatrix::identity(&ring, n, 2));
    }
}

#[test]
fn antisymmetrizer_properties() {
    let ring = Scalars(vars());
    for n in 1..=3 {
        for r in 1..=3 {
            let a = q_antisymmetrizer(&vars(), n, r).unwrap();
            let fact: i64 = (1..=r as i64).product();
            assert_eq!(a.mul(&ring, &a).unwrap(), a.scale(&ring, &LaurentPoly::from_int(&vars(), fact)), "N={n} r={r}");
        }
        let a = q_antisymmetrizer(&vars(), n, n).unwrap();
        let top: Vec<usize> = (1..=n).collect();
        assert!(a.at(&ring, &top, &top).is_one());
    }
    // r > N: the antisymmetrizer vanishes.
    assert!(q_antisymmetrizer(&vars(), 2, 3).unwrap().is_zero());
}

#[test]
fn suite_passes_with_g_only_for_even_n() {
    for n in 2..=4 {
        let rep = verify_tensor_identities(n);
        assert!(rep.is_pass(), "{rep}");
        let has_g = rep.entries.iter().any(|e| e.id.starts_with("g-reflection"));
        assert_eq!(has_g, n % 2 == 0);
        assert_eq!(rep.count(Status::Skip), 0);
    }
}

#[test]
fn mutations_are_detected() {
    let ring = Scalars(vars());
    let r = r_const(&vars(), 3, ConstVariant::R).unwrap();
    assert!(ybe_const_check(&vars(), &r).unwrap().is_none());
    let bad = mutate_entry(&r, &vars());
    assert!(ybe_const_check(&vars(), &bad).unwrap().is_some());
    let a = q_antisymmetrizer(&vars(), 2, 2).unwrap();
    let bad_a = mutate_entry(&a, &vars());
    let sq = bad_a.mul(&ring, &bad_a).unwrap();
    assert!(compare(&ring, &sq, &bad_a.scale(&ring, &LaurentPoly::from_int(&vars(), 2))).unwrap().is_some());
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, prop::array::uniform3(-2i32..=2)), 1..3).prop_map(|terms| {
        let v = vars();
        let mut acc = LaurentPoly::zero(&v);
        for (c, e) in terms {
            acc = &acc + &LaurentPoly::monomial(&v, Rational::from_int(c), &e);
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `R₁₂(x,y) R₁₃(x,z) R₂₃(y,z) = R₂₃(y,z) R₁₃(x,z) R₁₂(x,y)` at arbitrary scalar points.
    #[test]
    fn spectral_ybe_at_random_points(x in small_laurent(), y in small_laurent(), z in small_laurent()) {
        let ring = Scalars(vars());
        let r = |a: &LaurentPoly, b: &LaurentPoly, pos: [usize; 2]| r_spectral_at(&vars(), 2, a, b).unwrap().embed(&pos, 3).unwrap();
        let lhs = OperatorMatrix::product(&ring, &[&r(&x, &y, [1, 2]), &r(&x, &z, [1, 3]), &r(&y, &z, [2, 3])]).unwrap();
        let rhs = OperatorMatrix::product(&ring, &[&r(&y, &z, [2, 3]), &r(&x, &z, [1, 3]), &r(&x, &y, [1, 2])]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn index_tuple_bijection(n in 1usize..=4, r in 1usize..=4, seed in any::<usize>()) {
        let k = seed % n.pow(r as u32);
        let t = index_to_tuple(n, r, k);
        prop_assert!(t.iter().all(|&x| (1..=n).contains(&x)));
        prop_assert_eq!(tuple_to_index(n, &t), k);
    }

    #[test]
    fn transposes_reverse_products(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
        let ring = Scalars(vars());
        let mk = |x: &LaurentPoly, v| r_const(&vars(), 2, v).unwrap().scale(&ring, x);
        let m1 = mk(&a, ConstVariant::R).add(&ring, &mk(&b, ConstVariant::Q)).unwrap();
        let m2 = mk(&c, ConstVariant::Rtilde).add(&ring, &mk(&a, ConstVariant::P)).unwrap();
        prop_assert_eq!(m1.mul(&ring, &m2).unwrap().transpose(), m2.transpose().mul(&ring, &m1.transpose()).unwrap());
        for f in 1..=2 {
            prop_assert_eq!(m1.partial_transpose(f).unwrap().partial_transpose(f).unwrap(), m1.clone());
        }
        let full = m1.partial_transpose(1).unwrap().partial_transpose(2).unwrap();
        prop_assert_eq!(full, m1.transpose());
    }

    #[test]
    fn reduced_words_have_minimal_length(p in (1usize..=5).prop_flat_map(|r| Just((1..=r).collect::<Vec<_>>()).prop_shuffle())) {
        let w = reduced_word(&p);
        prop_assert_eq!(w.len(), perm_length(&p));
        // Swapping positions left to right along the word rebuilds p from the identity.
        let mut x: Vec<usize> = (1..=p.len()).collect();
        for &s in &w {
            x.swap(s - 1, s);
        }
        prop_assert_eq!(x, p);
    }
}
