use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{write_term, GenSym, NcPoly, Word};
use crate::error::{Error, Result};
use crate::scalars::{LaurentPoly, VarTable};

/// An element of A ⊗ A as a combination of word pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct NcPoly2 {
    vars: VarTable,
    terms: BTreeMap<(Word, Word), LaurentPoly>,
}

impl NcPoly2 {
    pub fn zero(vars: &VarTable) -> Self {
        NcPoly2 { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarTable) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Word::empty(), Word::empty(), LaurentPoly::one(vars));
        p
    }

    /// `a ⊗ b`.
    pub fn tensor(a: &NcPoly, b: &NcPoly) -> Self {
        let vars = a.vars().join(b.vars()).expect("variable table mismatch");
        let mut p = Self::zero(&vars);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                p.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), LaurentPoly> {
        &self.terms
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        if !c.vars().is_prefix_of(&self.vars) {
            self.vars = self.vars.join(c.vars()).expect("variable table mismatch");
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NcPoly2) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &NcPoly2) -> NcPoly2 {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &LaurentPoly) -> NcPoly2 {
        let mut out = NcPoly2::zero(&self.vars);
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c * s);
        }
        out
    }

    /// Componentwise concatenation product, unreduced.
    pub fn mul(&self, other: &NcPoly2) -> NcPoly2 {
        let vars = self.vars.join(&other.vars).expect("variable table mismatch");
        let mut out = NcPoly2::zero(&vars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.add_term(a1.concat(a2), b1.concat(b2), c1 * c2);
            }
        }
        out
    }
}

/// Extends a generator map multiplicatively to words and linearly to sums.
pub fn tensor2_apply_delta(x: &NcPoly, rule: &dyn Fn(GenSym) -> Option<NcPoly2>) -> Result<NcPoly2> {
    let mut out = NcPoly2::zero(x.vars());
    let mut cache: BTreeMap<GenSym, NcPoly2> = BTreeMap::new();
    for (w, c) in x.terms() {
        let mut acc = NcPoly2::one(x.vars());
        for &g in w.iter() {
            let img = match cache.get(&g) {
                Some(i) => i.clone(),
                None => {
                    let i = rule(g).ok_or_else(|| Error::MissingImage(g.to_string()))?;
                    cache.insert(g, i.clone());
                    i
                }
            };
            acc = acc.mul(&img);
        }
        out.add_assign(&acc.scale(c));
    }
    Ok(out)
}

impl fmt::Display for NcPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            write_term(f, &format!("({a} (x) {b})"), c, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
