use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::order::GeneratorOrder;
use super::rules::{RuleSet, Strategy};
use super::Presentation;
use crate::freealg::{NcPoly, Word};
use crate::report::VerificationReport;
use crate::scalars::LaurentPoly;

/// A uniformly random word of length `1..=max_len` that fits the window.
pub fn random_word(pres: &Presentation, max_len: usize, rng: &mut ChaCha8Rng) -> Word {
    let alpha = pres.alphabet();
    loop {
        let len = rng.gen_range(1..=max_len.max(1));
        let w: Word = (0..len).map(|_| alpha[rng.gen_range(0..alpha.len())]).collect();
        match pres.window {
            Some(d) if GeneratorOrder::weight(&w) > d => continue,
            _ => return w,
        }
    }
}

/// Reduces random words under several strategies and requires identical results.
pub fn confluence_probe(pres: &Presentation, max_len: usize, trials: usize, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("confluence")
        .param("presentation", &pres.name)
        .param("max_len", max_len)
        .param("trials", trials)
        .param("seed", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = (0..trials).map(|_| random_word(pres, max_len, &mut rng)).collect();
    let mut agree = None;
    let mut ordered = None;
    let mut error = None;
    for (k, w) in words.iter().enumerate() {
        let p = NcPoly::term(w.clone(), LaurentPoly::one(&pres.vars));
        let mut strat_rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let results = [
            pres.reduce_with(&p, Strategy::Leftmost, None),
            pres.reduce_with(&p, Strategy::Rightmost, None),
            pres.reduce_with(&p, Strategy::Random, Some(&mut strat_rng)),
            pres.normal_form(&p),
        ];
        let mut vals = Vec::new();
        for r in results {
            match r {
                Ok(v) => vals.push(v),
                Err(e) => {
                    error.get_or_insert_with(|| format!("{w}: {e}"));
                }
            }
        }
        if vals.len() < 4 {
            continue;
        }
        if agree.is_none() && vals.iter().any(|v| *v != vals[0]) {
            let names = ["leftmost", "rightmost", "random", "memo"];
            let shown: Vec<String> = vals.iter().zip(names).map(|(v, n)| format!("{n}: {v}")).collect();
            agree = Some(format!("{w}: {}", shown.join("; ")));
        }
        if ordered.is_none() {
            if let Some(bad) = vals[0].terms().keys().find(|x| !pres.order.is_ordered(x)) {
                ordered = Some(format!("{w} reduces to a term with unordered word {bad}"));
            }
        }
    }
    rep.check("strategy-agreement", || Ok(agree));
    rep.check("normal-words-ordered", || Ok(ordered));
    rep.check("within-limits", || Ok(error));
    rep
}

/// The same presentation with one right-hand coefficient multiplied by `q`.
pub fn corrupt_one_rule(pres: &Presentation, pick: usize) -> Presentation {
    let sorted = pres.rules.sorted(&pres.order);
    let candidates: Vec<_> = sorted.iter().filter(|r| !r.rhs.is_zero()).collect();
    let mut rules = RuleSet::new();
    let victim = candidates.get(pick % candidates.len().max(1)).map(|r| r.lhs.clone());
    for r in &sorted {
        if Some(&r.lhs) == victim.as_ref() {
            let (w, c) = r.rhs.terms().iter().next().expect("nonzero rhs");
            let mut rhs = r.rhs.clone();
            rhs.add_term(w.clone(), &(c * &LaurentPoly::q_pow(&pres.vars, 1)) - c);
            rules.insert(r.lhs.clone(), rhs);
        } else {
            rules.insert(r.lhs.clone(), r.rhs.clone());
        }
    }
    pres.with_rules(rules, &format!("{} (corrupted)", pres.name))
}
