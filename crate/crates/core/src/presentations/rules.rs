use std::collections::BTreeMap;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use super::order::{GeneratorOrder, WordKey};
use super::Limits;
use crate::error::{Error, Result};
use crate::freealg::{NcPoly, Word};
use crate::scalars::{LaurentPoly, VarTable};

/// An oriented relation `lhs → rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

/// Which occurrence of a rule left-hand side to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random,
}

/// Rules indexed by left-hand side.
#[derive(Clone, Debug, Default)]
pub struct RuleSet {
    rules: FxHashMap<Word, NcPoly>,
    max_lhs: usize,
}

impl RuleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn max_lhs(&self) -> usize {
        self.max_lhs
    }

    pub fn get(&self, lhs: &Word) -> Option<&NcPoly> {
        self.rules.get(lhs)
    }

    pub fn insert(&mut self, lhs: Word, rhs: NcPoly) {
        self.max_lhs = self.max_lhs.max(lhs.len());
        self.rules.insert(lhs, rhs);
    }

    pub fn remove(&mut self, lhs: &Word) -> Option<NcPoly> {
        let out = self.rules.remove(lhs);
        self.max_lhs = self.rules.keys().map(|w| w.len()).max().unwrap_or(0);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &NcPoly)> {
        self.rules.iter()
    }

    /// Rules sorted by left-hand side under `order`.
    pub fn sorted(&self, order: &GeneratorOrder) -> Vec<RewriteRule> {
        let mut v: Vec<RewriteRule> =
            self.rules.iter().map(|(l, r)| RewriteRule { lhs: l.clone(), rhs: r.clone() }).collect();
        v.sort_by(|a, b| order.cmp_words(&a.lhs, &b.lhs));
        v
    }

    /// Occurrences `(start, len)` of left-hand sides inside `w`.
    pub fn matches(&self, w: &Word) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for start in 0..w.len() {
            for len in 1..=self.max_lhs.min(w.len() - start) {
                if self.rules.contains_key(&Word::from_slice(&w[start..start + len])) {
                    out.push((start, len));
                }
            }
        }
        out
    }

    fn first_match(&self, w: &Word, rightmost: bool) -> Option<(usize, usize)> {
        let n = w.len();
        let starts: Box<dyn Iterator<Item = usize>> =
            if rightmost { Box::new((0..n).rev()) } else { Box::new(0..n) };
        for start in starts {
            for len in 1..=self.max_lhs.min(n - start) {
                if self.rules.contains_key(&Word::from_slice(&w[start..start + len])) {
                    return Some((start, len));
                }
            }
        }
        None
    }

    /// True when no left-hand side occurs in `w`.
    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.first_match(w, false).is_none()
    }

    /// Exhaustive rewriting, always expanding the largest remaining word.
    pub fn reduce(
        &self,
        p: &NcPoly,
        order: &GeneratorOrder,
        strategy: Strategy,
        mut rng: Option<&mut ChaCha8Rng>,
        limits: &Limits,
    ) -> Result<NcPoly> {
        let vars = p.vars().clone();
        let mut work: BTreeMap<WordKey, (Word, LaurentPoly)> = BTreeMap::new();
        for (w, c) in p.terms() {
            push(&mut work, order, w.clone(), c.clone());
        }
        let mut out = NcPoly::zero(&vars);
        let mut steps = 0usize;
        while let Some((_, (w, c))) = work.pop_last() {
            let hit = match strategy {
                Strategy::Leftmost => self.first_match(&w, false),
                Strategy::Rightmost => self.first_match(&w, true),
                Strategy::Random => {
                    let all = self.matches(&w);
                    if all.is_empty() {
                        None
                    } else {
                        let k = match rng.as_deref_mut() {
                            Some(r) => r.gen_range(0..all.len()),
                            None => 0,
                        };
                        Some(all[k])
                    }
                }
            };
            let Some((start, len)) = hit else {
                out.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > limits.max_steps {
                return Err(Error::ResourceLimit(format!("more than {} rewrite steps", limits.max_steps)));
            }
            let rhs = &self.rules[&Word::from_slice(&w[start..start + len])];
            let prefix = Word::from_slice(&w[..start]);
            let suffix = Word::from_slice(&w[start + len..]);
            for (m, d) in rhs.terms() {
                push(&mut work, order, prefix.concat(m).concat(&suffix), &c * d);
            }
            if work.len() > limits.max_terms {
                return Err(Error::ResourceLimit(format!(
                    "intermediate polynomial exceeds {} terms (at {w})",
                    limits.max_terms
                )));
            }
        }
        Ok(out)
    }
}

fn push(work: &mut BTreeMap<WordKey, (Word, LaurentPoly)>, order: &GeneratorOrder, w: Word, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let key = order.key(&w);
    match work.get_mut(&key) {
        Some(slot) => {
            slot.1 = &slot.1 + &c;
            if slot.1.is_zero() {
                work.remove(&key);
            }
        }
        None => {
            work.insert(key, (w, c));
        }
    }
}

/// Leading word and coefficient under `order`.
pub fn leading(p: &NcPoly, order: &GeneratorOrder) -> Option<(Word, LaurentPoly)> {
    p.terms().iter().max_by(|a, b| order.cmp_words(a.0, b.0)).map(|(w, c)| (w.clone(), c.clone()))
}

/// Solves a relation for its leading word.
pub fn orient(rel: &NcPoly, order: &GeneratorOrder) -> Result<RewriteRule> {
    let (lw, lc) = leading(rel, order).ok_or_else(|| Error::NotOrientable("zero relation".into()))?;
    let inv = match lc.unit_inverse() {
        Some(inv) => inv,
        None => {
            // exact division of every coefficient by the leading one
            let mut rhs = NcPoly::zero(rel.vars());
            for (w, c) in rel.terms() {
                if *w == lw {
                    continue;
                }
                let d = c
                    .div_exact(&lc)
                    .ok_or_else(|| Error::NotOrientable(format!("leading coefficient {lc} of {lw} is not invertible in {rel}")))?;
                rhs.add_term(w.clone(), -d);
            }
            return check_rule(RewriteRule { lhs: lw, rhs }, order, rel);
        }
    };
    let mut rhs = NcPoly::zero(rel.vars());
    for (w, c) in rel.terms() {
        if *w != lw {
            rhs.add_term(w.clone(), -(c * &inv));
        }
    }
    check_rule(RewriteRule { lhs: lw, rhs }, order, rel)
}

fn check_rule(rule: RewriteRule, order: &GeneratorOrder, rel: &NcPoly) -> Result<RewriteRule> {
    let n = rule.lhs.len();
    if n > 1 && rel.terms().keys().all(|w| w.len() == n && order.is_ordered(w)) {
        return Err(Error::NotOrientable(format!("all words of {rel} are normal-ordered")));
    }
    Ok(rule)
}

/// Orientation validity: every right-hand word is smaller than the left-hand side.
pub fn rule_is_valid(rule: &RewriteRule, order: &GeneratorOrder) -> bool {
    rule.rhs.terms().keys().all(|w| order.cmp_words(w, &rule.lhs).is_lt())
}

/// Interreducing completion-free builder: orients relations one at a time,
/// keeping left-hand sides irreducible with respect to each other.
pub struct Builder {
    pub order: GeneratorOrder,
    pub rules: RuleSet,
    pub vars: VarTable,
    pub limits: Limits,
    pub log: Vec<String>,
    /// Relations whose leading coefficient was not yet invertible.
    pub deferred: Vec<NcPoly>,
}

impl Builder {
    pub fn new(order: GeneratorOrder, vars: VarTable, limits: Limits) -> Self {
        Builder { order, rules: RuleSet::new(), vars, limits, log: Vec::new(), deferred: Vec::new() }
    }

    pub fn reduce(&self, p: &NcPoly) -> Result<NcPoly> {
        self.rules.reduce(p, &self.order, Strategy::Leftmost, None, &self.limits)
    }

    /// Adds relations; returns the number of new rules.
    pub fn add(&mut self, rels: impl IntoIterator<Item = NcPoly>) -> Result<usize> {
        let mut queue: std::collections::VecDeque<NcPoly> = rels.into_iter().collect();
        let mut added = 0;
        while let Some(rel) = queue.pop_front() {
            let r = self.reduce(&rel)?;
            if r.is_zero() {
                continue;
            }
            let (_, lc) = leading(&r, &self.order).expect("nonzero");
            if !lc.is_unit() && orient(&r, &self.order).is_err() {
                self.deferred.push(r);
                continue;
            }
            let rule = orient(&r, &self.order).map_err(|e| match e {
                Error::NotOrientable(m) => Error::NotOrientable(format!("{m}; original relation {rel}")),
                other => other,
            })?;
            let stale: Vec<Word> =
                self.rules.iter().filter(|(l, _)| contains(l, &rule.lhs)).map(|(l, _)| l.clone()).collect();
            for l in stale {
                let rhs = self.rules.remove(&l).expect("present");
                queue.push_back(NcPoly::term(l, LaurentPoly::one(&self.vars)).sub(&rhs));
            }
            if std::env::var_os("QTWIST_TRACE").is_some() {
                eprintln!("rule {} -> {}", rule.lhs, rule.rhs);
            }
            self.rules.insert(rule.lhs, rule.rhs);
            added += 1;
        }
        Ok(added)
    }

    /// Retries deferred relations until none is left or no progress is made.
    pub fn finish(&mut self) -> Result<()> {
        loop {
            let pending = std::mem::take(&mut self.deferred);
            if pending.is_empty() {
                break;
            }
            let before = pending.len();
            self.add(pending)?;
            if self.deferred.len() >= before {
                let first = &self.deferred[0];
                let (lw, lc) = leading(first, &self.order).expect("nonzero");
                return Err(Error::NotOrientable(format!(
                    "{} relations stuck; e.g. leading coefficient {lc} of {lw} in {first}",
                    self.deferred.len()
                )));
            }
        }
        self.interreduce()
    }

    /// Fully reduces every right-hand side.
    pub fn interreduce(&mut self) -> Result<()> {
        let lhs: Vec<Word> = self.rules.iter().map(|(l, _)| l.clone()).collect();
        for l in lhs {
            let rhs = self.rules.get(&l).expect("present").clone();
            let red = self.reduce(&rhs)?;
            self.rules.insert(l, red);
        }
        Ok(())
    }
}

fn contains(hay: &Word, needle: &Word) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == &needle[..])
}
