use std::collections::BTreeSet;

use proptest::prelude::*;
use qtwist::freealg::{prime, GenSym, NcPoly, Word};
use qtwist::presentations::{
    confluence_probe, corrupt_one_rule, derive_relations, independence_rank, orient, qds_element, reflection_relations,
    rule_is_valid, s_orth_matrix, shared, t_matrix, tb_matrix, AlgMatrix, GeneratorOrder, Presentation,
};
use qtwist::scalars::{LaurentPoly, VarTable};
use qtwist::tensorcalc::{FreeAlgebra, OperatorMatrix};
use qtwist::Error;

fn vars() -> VarTable {
    VarTable::q()
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(&vars(), k)
}

fn parse(s: &str) -> NcPoly {
    NcPoly::parse(s, &vars()).unwrap()
}

fn pres(name: &str) -> std::sync::Arc<Presentation> {
    let (kind, n, w) = Presentation::parse_name(name).unwrap();
    shared(kind, n, w).unwrap()
}

#[test]
fn uqgl2_sample_normal_forms() {
    let p = pres("uqgl:2");
    assert_eq!(p.normal_form(&parse("t[2,1]*t[1,1]")).unwrap(), parse("q*t[1,1]*t[2,1]"));
    assert_eq!(p.normal_form(&parse("tb[1,1]*t[1,1]")).unwrap(), NcPoly::one(&vars()));
    assert_eq!(p.normal_form(&parse("t[1,1]*tb[1,1]")).unwrap(), NcPoly::one(&vars()));
    // same row, a > b: t_ia t_ib -> q t_ib t_ia
    assert_eq!(p.normal_form(&parse("t[2,2]*t[2,1]")).unwrap(), parse("q*t[2,1]*t[2,2]"));
}

#[test]
fn uqgl2_has_mixed_rule() {
    let p = pres("uqgl:2");
    let lhs = parse("tb[1,2]*t[2,1]");
    let nf = p.normal_form(&lhs).unwrap();
    assert_ne!(nf, lhs);
    assert!(nf.terms().keys().all(|w| p.order.is_ordered(w)));
    assert_eq!(p.alphabet().len(), 6);
}

#[test]
fn tworth2_is_free_on_one_generator() {
    let p = pres("tworth:2");
    assert_eq!(p.alphabet().len(), 1);
    assert!(p.rules.is_empty());
    let s = parse("s[2,1]");
    assert_eq!(p.normal_form(&s).unwrap(), s);
}

#[test]
fn twsympl2_alphabet_and_central_identity() {
    let p = pres("twsympl:2");
    let names: BTreeSet<String> = p.alphabet().iter().map(|g| g.to_string()).collect();
    let want: BTreeSet<String> =
        ["s[1,1]", "s[2,1]", "s[2,2]", "s[1,2]", "sinv[1,2]"].iter().map(|s| s.to_string()).collect();
    assert_eq!(names, want);
    let e = qds_element(1, &vars()).unwrap();
    assert!(p.normal_form(&e).unwrap().is_zero());
    assert_eq!(p.normal_form(&parse("s[1,2]*sinv[1,2]")).unwrap(), NcPoly::one(&vars()));
    assert_eq!(p.normal_form(&parse("sinv[1,2]*s[1,2]")).unwrap(), NcPoly::one(&vars()));
}

#[test]
fn orient_examples() {
    let order = GeneratorOrder::new(vec![GenSym::t(1, 1).unwrap(), GenSym::t(2, 1).unwrap()]);
    let rel = parse("t[2,1]*t[1,1] - q*t[1,1]*t[2,1]");
    let rule = orient(&rel, &order).unwrap();
    assert_eq!(rule.lhs.to_string(), "t[2,1]*t[1,1]");
    assert_eq!(rule.rhs, parse("q*t[1,1]*t[2,1]"));
    assert!(rule_is_valid(&rule, &order));

    let both_ordered = parse("t[1,1]*t[2,1] - q*t[1,1]*t[1,1]");
    assert!(matches!(orient(&both_ordered, &order), Err(Error::NotOrientable(_))));
}

#[test]
fn derive_relations_identity_is_empty() {
    let ring = FreeAlgebra(vars());
    let id: AlgMatrix = OperatorMatrix::identity(&ring, 2, 2);
    assert!(derive_relations(&id, &id).unwrap().is_empty());
    let small: AlgMatrix = OperatorMatrix::identity(&ring, 2, 1);
    assert!(matches!(derive_relations(&id, &small), Err(Error::Dimension(_))));
}

/// Entry-wise reflection relation of the orthogonal algebra, expanded by hand:
/// q^{δaj+δij} s_ia s_jb − q^{δab+δib} s_jb s_ia
///   = (q−q⁻¹) q^{δai} (δ_{b<a} − δ_{i<j}) s_ja s_ib
///   + (q−q⁻¹)(q^{δab} δ_{b<i} s_ji s_ba − q^{δij} δ_{a<j} s_ij s_ab)
///   + (q−q⁻¹)² (δ_{b<a<i} − δ_{a<i<j}) s_ji s_ab
fn hand_relation(n: usize, i: usize, j: usize, a: usize, b: usize) -> NcPoly {
    let v = vars();
    let s = |x: usize, y: usize| -> NcPoly {
        match x.cmp(&y) {
            std::cmp::Ordering::Equal => NcPoly::one(&v),
            std::cmp::Ordering::Less => NcPoly::zero(&v),
            std::cmp::Ordering::Greater => NcPoly::gen(GenSym::s_orth(x, y).unwrap(), &v),
        }
    };
    assert!(i <= n && j <= n && a <= n && b <= n);
    let d = |c: bool| i32::from(c);
    let h = &q(1) - &q(-1);
    let mut p = s(i, a).nc_mul(&s(j, b)).scale(&q(d(a == j) + d(i == j)));
    p = p.sub(&s(j, b).nc_mul(&s(i, a)).scale(&q(d(a == b) + d(i == b))));
    let c1 = d(b < a) - d(i < j);
    if c1 != 0 {
        let c = (&h * &q(d(a == i))).scale(&qtwist::scalars::Rational::from_int(c1 as i64));
        p = p.sub(&s(j, a).nc_mul(&s(i, b)).scale(&c));
    }
    if b < i {
        p = p.sub(&s(j, i).nc_mul(&s(b, a)).scale(&(&h * &q(d(a == b)))));
    }
    if a < j {
        p = p.add(&s(i, j).nc_mul(&s(a, b)).scale(&(&h * &q(d(i == j)))));
    }
    let c3 = d(b < a && a < i) - d(a < i && i < j);
    if c3 != 0 {
        let c = (&h * &h).scale(&qtwist::scalars::Rational::from_int(c3 as i64));
        p = p.sub(&s(j, i).nc_mul(&s(a, b)).scale(&c));
    }
    p
}

fn up_to_sign(ps: impl IntoIterator<Item = NcPoly>) -> BTreeSet<String> {
    ps.into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let (a, b) = (p.to_string(), p.neg().to_string());
            a.min(b)
        })
        .collect()
}

#[test]
fn orthogonal_reflection_relations_match_hand_expansion() {
    for n in [2usize, 3] {
        let derived = reflection_relations(&s_orth_matrix(n, &vars()), &vars()).unwrap();
        let mut hand = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for a in 1..=n {
                    for b in 1..=n {
                        hand.push(hand_relation(n, i, j, a, b));
                    }
                }
            }
        }
        assert_eq!(up_to_sign(derived), up_to_sign(hand), "n = {n}");
    }
}

#[test]
fn hand_relations_vanish_in_tworth3() {
    let p = pres("tworth:3");
    for i in 1..=3 {
        for j in 1..=3 {
            for a in 1..=3 {
                for b in 1..=3 {
                    let r = hand_relation(3, i, j, a, b);
                    assert!(p.normal_form(&r).unwrap().is_zero(), "({i},{j},{a},{b}): {r}");
                }
            }
        }
    }
}

const ALL: [&str; 10] = [
    "uqgl:1", "uqgl:2", "uqgl:3", "tworth:2", "tworth:3", "twsympl:2", "twsympl:4", "uqglhat:1:2", "uqglhat:2:1",
    "uqglhat:2:2",
];

#[test]
fn every_presentation_is_orientation_valid() {
    for name in ALL {
        assert!(pres(name).orientation_valid(), "{name}");
    }
}

#[test]
fn confluence_probes_pass() {
    for name in ALL {
        let rep = confluence_probe(&pres(name), 5, 200, 11);
        assert!(rep.is_pass(), "{rep}");
    }
}

#[test]
fn uqgl2_probe_500_trials() {
    let rep = confluence_probe(&pres("uqgl:2"), 4, 500, 1);
    assert!(rep.is_pass(), "{rep}");
}

#[test]
fn corrupted_rule_is_caught() {
    let p = pres("uqgl:2");
    let mut caught = 0;
    for pick in 0..5 {
        let bad = corrupt_one_rule(&p, pick);
        if !confluence_probe(&bad, 4, 500, 3).is_pass() {
            caught += 1;
        }
    }
    assert!(caught > 0, "no corrupted rule set failed the probe");
}

#[test]
fn window_is_enforced() {
    let p = pres("uqglhat:2:1");
    let outside = NcPoly::gen(GenSym::t_deg(1, 1, 1).unwrap(), &vars())
        .nc_mul(&NcPoly::gen(GenSym::t_deg(1, 2, 1).unwrap(), &vars()));
    assert!(matches!(p.normal_form(&outside), Err(Error::WindowInsufficient(_))));
}

fn ordered_monomials(gens: &[GenSym], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier: Vec<(Word, usize)> = vec![(Word::empty(), 0)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (w, start) in &frontier {
            for (k, &g) in gens.iter().enumerate().skip(*start) {
                let mut x = w.clone();
                x.push(g);
                out.push(x.clone());
                next.push((x, k));
            }
        }
        frontier = next;
    }
    out
}

fn mat_entry(m: &AlgMatrix, i: usize, j: usize) -> NcPoly {
    m.get(&FreeAlgebra(vars()), i - 1, j - 1)
}

/// `S = T T̄ᵗ` (orthogonal) or `T G T̄ᵗ` (symplectic) inside the host.
fn host_s(host: &Presentation, sympl: bool) -> AlgMatrix {
    let ring = FreeAlgebra(vars());
    let n = host.n;
    let t = t_matrix(n, &vars());
    let tbt = tb_matrix(n, &vars()).transpose();
    let prod = if sympl {
        let g = qtwist::tensorcalc::r_const(&vars(), n, qtwist::tensorcalc::ConstVariant::G).unwrap();
        let g = g.map(|c| Ok(NcPoly::scalar(c.clone())), |p: &NcPoly| p.is_zero()).unwrap();
        OperatorMatrix::product(&ring, &[&t, &g, &tbt]).unwrap()
    } else {
        OperatorMatrix::product(&ring, &[&t, &tbt]).unwrap()
    };
    prod.map(|p| host.normal_form(p), |p: &NcPoly| p.is_zero()).unwrap()
}

#[test]
fn pbw_rank_tworth() {
    for (n, count) in [(2usize, 3usize), (3, 10)] {
        let abs = pres(&format!("tworth:{n}"));
        let host = pres(&format!("uqgl:{n}"));
        let s = host_s(&host, false);
        let monos = ordered_monomials(abs.alphabet(), 2);
        assert_eq!(monos.len(), count);
        let embed = |g: GenSym| Ok(mat_entry(&s, g.row(), g.col()));
        assert_eq!(independence_rank(&monos, &embed, &host).unwrap(), count, "n = {n}");
    }
}

#[test]
fn pbw_rank_trivial_cases() {
    let host = pres("uqgl:2");
    let s = host_s(&host, false);
    let embed = |g: GenSym| Ok(mat_entry(&s, g.row(), g.col()));
    assert_eq!(independence_rank(&[Word::empty()], &embed, &host).unwrap(), 1);
    let s21 = Word::single(GenSym::s_orth(2, 1).unwrap());
    assert_eq!(independence_rank(&[s21.clone(), s21], &embed, &host).unwrap(), 1);
}

#[test]
fn pbw_rank_twsympl2() {
    let abs = pres("twsympl:2");
    let host = pres("uqgl:2");
    let s = host_s(&host, true);
    let sinv = GenSym::sinv(1).unwrap();
    // s_12 = q t_11 t̄_22, so its inverse is q⁻¹ t_22 t̄_11
    let inv = host.normal_form(&parse("q^-1*t[2,2]*tb[1,1]")).unwrap();
    assert!(host.mul(&mat_entry(&s, 1, 2), &inv).unwrap() == NcPoly::one(&vars()));
    let gens: Vec<GenSym> =
        abs.alphabet().iter().copied().filter(|g| *g != GenSym::s_sympl(2, 1).unwrap()).collect();
    let monos: Vec<Word> = ordered_monomials(&gens, 2)
        .into_iter()
        .filter(|w| abs.is_normal(&NcPoly::term(w.clone(), q(0))))
        .collect();
    assert_eq!(monos.len(), 14);
    let embed = |g: GenSym| Ok(if g == sinv { inv.clone() } else { mat_entry(&s, g.row(), g.col()) });
    assert_eq!(independence_rank(&monos, &embed, &host).unwrap(), 14);
}

#[test]
fn pbw_rank_affine_window() {
    let host = pres("uqglhat:2:2");
    let v = vars();
    // s^(r)_ij = Σ_{k+l=r} Σ_a t^(k)_ia t̄^(l)_ja
    let embed = |g: GenSym| -> qtwist::Result<NcPoly> {
        let (r, i, j) = (g.degree(), g.row(), g.col());
        let mut acc = NcPoly::zero(&v);
        for k in 0..=r {
            for a in 1..=2 {
                if let (Ok(t), Ok(tb)) = (GenSym::t_deg(k, i, a), GenSym::tb_deg(r - k, j, a)) {
                    acc = acc.add(&NcPoly::gen(t, &v).nc_mul(&NcPoly::gen(tb, &v)));
                }
            }
        }
        host.normal_form(&acc)
    };
    let mut gens = vec![GenSym::s_orth_deg(0, 2, 1).unwrap()];
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        gens.push(GenSym::s_orth_deg(1, i, j).unwrap());
    }
    let monos = ordered_monomials(&gens, 2);
    assert_eq!(monos.len(), 21);
    assert_eq!(independence_rank(&monos, &embed, &host).unwrap(), 21);
}

#[test]
fn symplectic_central_element_commutes() {
    for n2 in [2usize, 4] {
        let p = pres(&format!("twsympl:{n2}"));
        for i in (1..=n2).step_by(2) {
            let ip = prime(i);
            let e = parse(&format!("s[{ip},{ip}]*s[{i},{i}] - q^2*s[{ip},{i}]*s[{i},{ip}]"));
            for &g in p.alphabet() {
                let c = e.nc_commutator(&p.gen(g));
                assert!(p.normal_form(&c).unwrap().is_zero(), "n = {n2}, i = {i}, g = {g}");
            }
        }
    }
}

fn word_strategy(alpha: Vec<GenSym>, window: Option<usize>) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(alpha), 1..=5)
        .prop_filter("fits window", move |w| window.map_or(true, |d| w.iter().map(|g| g.degree()).sum::<usize>() <= d))
        .prop_map(|v| Word::from_slice(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree_uqgl3(w in word_strategy(pres("uqgl:3").alphabet().to_vec(), None)) {
        let p = pres("uqgl:3");
        let x = NcPoly::term(w, q(0));
        let a = p.reduce_with(&x, qtwist::presentations::Strategy::Leftmost, None).unwrap();
        let b = p.reduce_with(&x, qtwist::presentations::Strategy::Rightmost, None).unwrap();
        let c = p.normal_form(&x).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &c);
        prop_assert!(a.terms().keys().all(|w| p.order.is_ordered(w)));
    }

    #[test]
    fn normal_form_is_multiplicative_twsympl4(
        x in word_strategy(pres("twsympl:4").alphabet().to_vec(), None),
        y in word_strategy(pres("twsympl:4").alphabet().to_vec(), None),
    ) {
        let p = pres("twsympl:4");
        let (x, y) = (NcPoly::term(x, q(0)), NcPoly::term(y, q(0)));
        let whole = p.normal_form(&x.nc_mul(&y)).unwrap();
        let parts = p.mul(&p.normal_form(&x).unwrap(), &p.normal_form(&y).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn normal_form_is_idempotent_affine(w in word_strategy(pres("uqglhat:2:2").alphabet().to_vec(), Some(2))) {
        let p = pres("uqglhat:2:2");
        let nf = p.normal_form(&NcPoly::term(w, q(0))).unwrap();
        prop_assert!(p.is_normal(&nf));
        prop_assert_eq!(p.normal_form(&nf).unwrap(), nf);
    }
}

#[test]
fn pbw_suite_passes() {
    let rep = qtwist::presentations::verify_pbw(500, 5, 7);
    let bad: Vec<_> = rep.entries.iter().filter(|e| e.status != qtwist::report::Status::Pass).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(rep.entries.len(), 5 * 3 + 2);
}
