//! Sparse multivariate Laurent polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use super::{Rational, VarTable};
use crate::error::{Error, Result};

/// Exponent vector with trailing zeros trimmed, so that its meaning does not
/// depend on how long the ambient variable table is.
pub type Exps = SmallVec<[i16; 4]>;

/// Lexicographic comparison with implicit trailing zeros.
pub fn cmp_exps(a: &[i16], b: &[i16]) -> Ordering {
    let n = a.len().max(b.len());
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn trim(e: &mut Exps) {
    while e.last() == Some(&0) {
        e.pop();
    }
}

fn add_exps(a: &[i16], b: &[i16]) -> Exps {
    let n = a.len().max(b.len());
    let mut out: Exps = SmallVec::with_capacity(n);
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        out.push(x.checked_add(y).expect("exponent overflow"));
    }
    trim(&mut out);
    out
}

/// An element of ℚ[x₁^±1, …, x_k^±1] over a [`VarTable`].
///
/// Terms are kept sorted ascending by exponent vector; no stored coefficient
/// is zero.
#[derive(Clone)]
pub struct LaurentPoly {
    vars: VarTable,
    terms: Vec<(Exps, Rational)>,
}

impl LaurentPoly {
    pub fn zero(vars: &VarTable) -> Self {
        LaurentPoly { vars: vars.clone(), terms: Vec::new() }
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarTable, c: Rational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Exps::new(), c)] };
        LaurentPoly { vars: vars.clone(), terms }
    }

    pub fn from_int(vars: &VarTable, n: i64) -> Self {
        Self::constant(vars, Rational::from_int(n))
    }

    /// `c · ∏ x_k^{e_k}` with exponents listed by variable position.
    pub fn monomial(vars: &VarTable, c: Rational, exps: &[i32]) -> Self {
        assert!(exps.len() <= vars.len(), "exponent vector longer than variable table");
        if c.is_zero() {
            return Self::zero(vars);
        }
        let mut e: Exps = exps.iter().map(|&x| i16::try_from(x).expect("exponent overflow")).collect();
        trim(&mut e);
        LaurentPoly { vars: vars.clone(), terms: vec![(e, c)] }
    }

    /// The variable `name` raised to `exp`.
    pub fn var_pow(vars: &VarTable, name: &str, exp: i32) -> Result<Self> {
        let k = vars.index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; k + 1];
        e[k] = exp;
        Ok(Self::monomial(vars, Rational::one(), &e))
    }

    pub fn var(vars: &VarTable, name: &str) -> Result<Self> {
        Self::var_pow(vars, name, 1)
    }

    /// `c·q^k` over `vars`, assuming `q` is the first variable.
    pub fn q_pow(vars: &VarTable, k: i32) -> Self {
        debug_assert_eq!(vars.names().first().map(String::as_str), Some("q"));
        Self::monomial(vars, Rational::one(), &[k])
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(vars: &VarTable, mut terms: Vec<(Exps, Rational)>) -> Self {
        for (e, _) in terms.iter_mut() {
            trim(e);
        }
        terms.sort_by(|a, b| cmp_exps(&a.0, &b.0));
        let mut out: Vec<(Exps, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if cmp_exps(le, &e) == Ordering::Equal => *lc = &*lc + &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { vars: vars.clone(), terms: out }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exps, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_empty() && self.terms[0].1.is_one()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if e.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    /// A single nonzero term, hence a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = &self.terms[0];
        let inv: Exps = e.iter().map(|x| -x).collect();
        Some(LaurentPoly { vars: self.vars.clone(), terms: vec![(inv, c.recip()?)] })
    }

    /// Re-tables the polynomial; the new table must be compatible.
    pub fn with_vars(&self, vars: &VarTable) -> Result<Self> {
        if self.vars.is_prefix_of(vars) {
            return Ok(LaurentPoly { vars: vars.clone(), terms: self.terms.clone() });
        }
        if vars.is_prefix_of(&self.vars) {
            if self.terms.iter().any(|(e, _)| e.len() > vars.len()) {
                return Err(Error::VarTableMismatch(format!(
                    "cannot restrict {} to {}",
                    self.vars, vars
                )));
            }
            return Ok(LaurentPoly { vars: vars.clone(), terms: self.terms.clone() });
        }
        Err(Error::VarTableMismatch(format!("{} vs {}", self.vars, vars)))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let vars = self.vars.join(&other.vars)?;
        Ok(Self::merge(&vars, &self.terms, &other.terms, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let vars = self.vars.join(&other.vars)?;
        Ok(Self::merge(&vars, &self.terms, &other.terms, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let vars = self.vars.join(&other.vars)?;
        Ok(Self::product(&vars, &self.terms, &other.terms))
    }

    fn merge(vars: &VarTable, a: &[(Exps, Rational)], b: &[(Exps, Rational)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                cmp_exps(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentPoly { vars: vars.clone(), terms: out }
    }

    fn product(vars: &VarTable, a: &[(Exps, Rational)], b: &[(Exps, Rational)]) -> Self {
        if a.is_empty() || b.is_empty() {
            return Self::zero(vars);
        }
        if a.len() == 1 || b.len() == 1 {
            // Multiplying by a monomial preserves the order of the other factor.
            let (m, p) = if a.len() == 1 { (&a[0], b) } else { (&b[0], a) };
            let terms = p.iter().map(|(e, c)| (add_exps(e, &m.0), c * &m.1)).collect();
            return LaurentPoly { vars: vars.clone(), terms };
        }
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for (ea, ca) in a {
            for (eb, cb) in b {
                terms.push((add_exps(ea, eb), ca * cb));
            }
        }
        Self::from_terms(vars, terms)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `var ↦ c·m` where `m` is a Laurent monomial.
    pub fn subst(&self, var: &str, replacement: &LaurentPoly) -> Result<Self> {
        let k = self.vars.index(var).ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        if !replacement.is_unit() {
            return Err(Error::InvalidArgument("substitution value must be a single monomial".into()));
        }
        let vars = self.vars.join(&replacement.vars)?;
        let (re, rc) = &replacement.terms[0];
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let p = e.get(k).copied().unwrap_or(0) as i32;
            let mut base: Exps = e.clone();
            if base.len() > k {
                base[k] = 0;
            }
            let scaled: Exps = re.iter().map(|x| (*x as i32 * p) as i16).collect();
            let coef = if p >= 0 {
                rc.pow(p as u32)
            } else {
                rc.recip().expect("nonzero monomial").pow((-p) as u32)
            };
            out.push((add_exps(&base, &scaled), c * &coef));
        }
        Ok(Self::from_terms(&vars, out))
    }

    /// Groups terms by the power of variable `k`.
    pub fn split_var(&self, k: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut groups: BTreeMap<i32, Vec<(Exps, Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let p = e.get(k).copied().unwrap_or(0) as i32;
            let mut rest = e.clone();
            if rest.len() > k {
                rest[k] = 0;
                trim(&mut rest);
            }
            groups.entry(p).or_default().push((rest, c.clone()));
        }
        groups.into_iter().map(|(p, t)| (p, Self::from_terms(&self.vars, t))).collect()
    }

    /// Lowest and highest exponent of variable `k`, if nonzero.
    pub fn degree_range(&self, k: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.iter().map(|(e, _)| e.get(k).copied().unwrap_or(0) as i32);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Evaluates at rational points for every variable.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &x) in e.iter().enumerate() {
                let v = point.get(k)?;
                let f = if x >= 0 { v.pow(x as u32) } else { v.recip()?.pow((-x) as u32) };
                t = &t * &f;
            }
            acc = &acc + &t;
        }
        Some(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        let vars = self.vars.join(&d.vars).ok()?;
        if self.is_zero() {
            return Some(Self::zero(&vars));
        }
        if let Some(inv) = d.unit_inverse() {
            return Some(Self::product(&vars, &self.terms, &inv.terms));
        }
        let nv = vars.len();
        let mins = |p: &LaurentPoly| -> Vec<i32> {
            (0..nv).map(|k| p.degree_range(k).map(|r| r.0).unwrap_or(0)).collect()
        };
        let (ma, md) = (mins(self), mins(d));
        let shift = |p: &LaurentPoly, m: &[i32]| -> BTreeMap<Vec<i32>, Rational> {
            p.terms
                .iter()
                .map(|(e, c)| ((0..nv).map(|k| e.get(k).copied().unwrap_or(0) as i32 - m[k]).collect(), c.clone()))
                .collect()
        };
        let mut rem = shift(self, &ma);
        let dd = shift(d, &md);
        let (lt_e, lt_c) = dd.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut quot: Vec<(Exps, Rational)> = Vec::new();
        while let Some((e, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lt_e).any(|(x, y)| x < y) {
                return None;
            }
            let qe: Vec<i32> = e.iter().zip(&lt_e).map(|(x, y)| x - y).collect();
            let qc = c.div(&lt_c)?;
            for (de, dc) in &dd {
                let te: Vec<i32> = de.iter().zip(&qe).map(|(x, y)| x + y).collect();
                let v = rem.entry(te.clone()).or_insert_with(Rational::zero);
                *v = &*v - &(dc * &qc);
                if v.is_zero() {
                    rem.remove(&te);
                }
            }
            let mut qx: Exps = qe.iter().zip(ma.iter().zip(&md)).map(|(x, (a, b))| (x + a - b) as i16).collect();
            trim(&mut qx);
            quot.push((qx, qc));
        }
        Some(Self::from_terms(&vars, quot))
    }

    /// Canonical text with an explicit variable table; ignores stored names.
    fn write_terms(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            write_monomial(f, &self.vars, e, &c.abs(), true)?;
        }
        Ok(())
    }

    /// True when the polynomial prints as a single signed factor product.
    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }
}

/// Writes `|c|*x^a*y^b`, omitting a unit coefficient when a variable follows.
pub(crate) fn write_monomial(
    f: &mut impl fmt::Write,
    vars: &VarTable,
    e: &[i16],
    c: &Rational,
    show_unit: bool,
) -> fmt::Result {
    let mut first = true;
    if !c.is_one() || (e.is_empty() && show_unit) {
        write!(f, "{c}")?;
        first = false;
    }
    for (k, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        let name = vars.names().get(k).map(String::as_str).unwrap_or("?");
        if x == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{x}")?;
        }
    }
    Ok(())
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(&other.terms)
                .all(|(a, b)| cmp_exps(&a.0, &b.0) == Ordering::Equal && a.1 == b.1)
    }
}

impl Eq for LaurentPoly {}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable table mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable table mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable table mismatch")
    }
}

impl<'a> Neg for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
