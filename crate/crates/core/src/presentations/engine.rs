use std::sync::Arc;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use super::rules::RuleSet;
use super::Limits;
use crate::error::{Error, Result};
use crate::freealg::{GenSym, NcPoly, Word};
use crate::scalars::{LaurentPoly, VarTable};

/// Read-through cache of `NF(w·x)` for normal words `w`.
#[derive(Default)]
pub struct InsertCache {
    map: RwLock<FxHashMap<(Word, GenSym), Arc<NcPoly>>>,
}

impl InsertCache {
    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().clear();
    }
}

/// Normal forms by inserting letters one at a time into normal words.
pub struct InsertEngine<'a> {
    pub rules: &'a RuleSet,
    pub cache: &'a InsertCache,
    pub limits: &'a Limits,
    pub vars: &'a VarTable,
}

impl InsertEngine<'_> {
    /// Normal form of `w·x`, assuming `w` is normal.
    pub fn insert(&self, w: &Word, x: GenSym, depth: usize) -> Result<Arc<NcPoly>> {
        if depth > self.limits.max_depth {
            return Err(Error::ResourceLimit(format!("reduction depth exceeds {} at {w}*{x}", self.limits.max_depth)));
        }
        let key = (w.clone(), x);
        if let Some(hit) = self.cache.map.read().get(&key) {
            return Ok(hit.clone());
        }
        let mut full = w.clone();
        full.push(x);
        let n = full.len();
        let mut result = None;
        for k in 1..=self.rules.max_lhs().min(n) {
            let suffix = Word::from_slice(&full[n - k..]);
            if let Some(rhs) = self.rules.get(&suffix) {
                let prefix = Word::from_slice(&full[..n - k]);
                let mut acc = NcPoly::zero(self.vars);
                for (m, c) in rhs.terms() {
                    let part = self.concat(&prefix, m, depth + 1)?;
                    acc.add_scaled(&part, c);
                    self.check_size(&acc, &full)?;
                }
                result = Some(acc);
                break;
            }
        }
        let result = Arc::new(result.unwrap_or_else(|| NcPoly::term(full, LaurentPoly::one(self.vars))));
        self.cache.map.write().insert(key, result.clone());
        Ok(result)
    }

    /// Normal form of `prefix·m` for a normal `prefix` and arbitrary `m`.
    pub fn concat(&self, prefix: &Word, m: &Word, depth: usize) -> Result<NcPoly> {
        let mut acc = NcPoly::term(prefix.clone(), LaurentPoly::one(self.vars));
        for &x in m.iter() {
            let mut next = NcPoly::zero(self.vars);
            for (v, c) in acc.terms() {
                let part = self.insert(v, x, depth)?;
                next.add_scaled(&part, c);
            }
            self.check_size(&next, m)?;
            acc = next;
        }
        Ok(acc)
    }

    fn check_size(&self, p: &NcPoly, at: &Word) -> Result<()> {
        if p.len() > self.limits.max_terms {
            return Err(Error::ResourceLimit(format!(
                "intermediate polynomial exceeds {} terms while reducing {at}",
                self.limits.max_terms
            )));
        }
        Ok(())
    }

    /// Normal form of an arbitrary polynomial.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero(&self.vars.join(p.vars())?);
        for (w, c) in p.terms() {
            let part = self.concat(&Word::empty(), w, 0)?;
            out.add_scaled(&part, c);
        }
        Ok(out)
    }

    /// `a·b` in normal form, assuming `a` is already normal.
    pub fn mul_normal(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        let vars = self.vars.join(a.vars())?.join(b.vars())?;
        let mut out = NcPoly::zero(&vars);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                let part = self.concat(wa, wb, 0)?;
                out.add_scaled(&part, &(ca * cb));
            }
        }
        Ok(out)
    }
}
