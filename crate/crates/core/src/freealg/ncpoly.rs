use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::{GenSym, Word};
use crate::error::{Error, Result};
use crate::scalars::{parse_expr, write_monomial, LaurentPoly, ParseTarget, Rational, VarTable};

/// A finite linear combination of words with Laurent-polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NcPoly {
    vars: VarTable,
    terms: BTreeMap<Word, LaurentPoly>,
}

impl NcPoly {
    pub fn zero(vars: &VarTable) -> Self {
        NcPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::scalar(LaurentPoly::one(vars))
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        let mut p = Self::zero(c.vars());
        p.add_term(Word::empty(), c);
        p
    }

    pub fn from_int(vars: &VarTable, n: i64) -> Self {
        Self::scalar(LaurentPoly::from_int(vars, n))
    }

    pub fn gen(g: GenSym, vars: &VarTable) -> Self {
        Self::term(Word::single(g), LaurentPoly::one(vars))
    }

    pub fn term(w: Word, c: LaurentPoly) -> Self {
        let mut p = Self::zero(c.vars());
        p.add_term(w, c);
        p
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Word, LaurentPoly> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, LaurentPoly> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value if only the empty word occurs.
    pub fn as_scalar(&self) -> Option<LaurentPoly> {
        match self.terms.len() {
            0 => Some(LaurentPoly::zero(&self.vars)),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| LaurentPoly::zero(&self.vars))
    }

    /// Longest word length present.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        if !c.vars().is_prefix_of(&self.vars) {
            self.vars = self.vars.join(c.vars()).expect("variable table mismatch");
        }
        match self.terms.entry(w) {
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

    pub fn add_assign(&mut self, other: &NcPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &NcPoly, s: &LaurentPoly) {
        if s.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * s);
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &LaurentPoly) -> NcPoly {
        let mut out = NcPoly::zero(&self.vars.join(s.vars()).expect("variable table mismatch"));
        if s.is_zero() {
            return out;
        }
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> NcPoly {
        let mut out = NcPoly::zero(&self.vars);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.scale(r));
        }
        out
    }

    /// Concatenation product without any reduction.
    pub fn nc_mul(&self, other: &NcPoly) -> NcPoly {
        let vars = self.vars.join(&other.vars).expect("variable table mismatch");
        let mut out = NcPoly::zero(&vars);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// `ab − ba`, unreduced.
    pub fn nc_commutator(&self, other: &NcPoly) -> NcPoly {
        self.nc_mul(other).sub(&other.nc_mul(self))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> NcPoly {
        let mut out = NcPoly::zero(&self.vars);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn subst(&self, var: &str, replacement: &LaurentPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero(&self.vars.join(replacement.vars())?);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.subst(var, replacement)?);
        }
        Ok(out)
    }

    /// Splits by the power of the scalar variable `name`.
    pub fn split_var(&self, name: &str) -> Result<BTreeMap<i32, NcPoly>> {
        let k = self.vars.index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out: BTreeMap<i32, NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            for (p, part) in c.split_var(k) {
                out.entry(p).or_insert_with(|| NcPoly::zero(&self.vars)).add_term(w.clone(), part);
            }
        }
        Ok(out)
    }

    /// Coefficient of `name^p`.
    pub fn coeff_of_var(&self, name: &str, p: i32) -> Result<NcPoly> {
        Ok(self.split_var(name)?.remove(&p).unwrap_or_else(|| NcPoly::zero(&self.vars)))
    }

    pub fn generators(&self) -> Vec<GenSym> {
        let mut gs: Vec<GenSym> = self.terms.keys().flat_map(|w| w.iter().copied()).collect();
        gs.sort();
        gs.dedup();
        gs
    }

    pub fn with_vars(&self, vars: &VarTable) -> Result<NcPoly> {
        let mut out = NcPoly::zero(vars);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.with_vars(vars)?);
        }
        Ok(out)
    }

    pub fn parse(text: &str, vars: &VarTable) -> Result<NcPoly> {
        parse_expr(text, vars)
    }
}

impl ParseTarget for NcPoly {
    fn scalar(p: LaurentPoly) -> Self {
        NcPoly::scalar(p)
    }
    fn generator(vars: &VarTable, name: &str, idx: &[u32]) -> Result<Self> {
        Ok(NcPoly::gen(GenSym::parse_parts(name, idx)?, vars))
    }
    fn add(self, other: Self) -> Self {
        NcPoly::add(&self, &other)
    }
    fn mul(self, other: Self) -> Self {
        self.nc_mul(&other)
    }
    fn neg(self) -> Self {
        NcPoly::neg(&self)
    }
}

/// Writes one `coefficient·word` term in canonical form.
pub(crate) fn write_term(f: &mut impl fmt::Write, w: &str, c: &LaurentPoly, first: bool) -> fmt::Result {
    if c.is_single_term() {
        let (e, r) = &c.terms()[0];
        let neg = r.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        let r = r.abs();
        if !r.is_one() {
            write!(f, "{r}*")?;
        }
        f.write_str(w)?;
        if !e.is_empty() {
            f.write_str("*")?;
            write_monomial(f, c.vars(), e, &Rational::one(), false)?;
        }
        Ok(())
    } else {
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "{w}*({c})")
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.as_scalar() {
            return write!(f, "{s}");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if w.is_empty() {
                if c.is_single_term() {
                    // A bare scalar term prints as its coefficient.
                    let (e, r) = &c.terms()[0];
                    let neg = r.is_negative();
                    if first {
                        if neg {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if neg { " - " } else { " + " })?;
                    }
                    write_monomial(f, c.vars(), e, &r.abs(), true)?;
                } else {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({c})")?;
                }
            } else {
                write_term(f, &w.to_string(), c, first)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
