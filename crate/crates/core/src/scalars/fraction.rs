use std::fmt;

use super::{LaurentPoly, Rational, VarTable};
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials, compared by cross-multiplication.
#[derive(Clone)]
pub struct ScalarFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarFraction {
    /// Builds `num/den`, moving monomial content and the leading rational
    /// coefficient of the denominator into the numerator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let vars = num.vars().join(den.vars())?;
        let nv = vars.len();
        let shift: Vec<i32> = (0..nv).map(|k| den.degree_range(k).map(|r| r.0).unwrap_or(0)).collect();
        let lead = den.terms().last().map(|t| t.1.clone()).unwrap();
        let m = LaurentPoly::monomial(&vars, lead, &shift);
        let minv = m.unit_inverse().unwrap();
        Ok(ScalarFraction { num: &num * &minv, den: &den * &minv })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.vars());
        ScalarFraction { num: p, den }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &VarTable {
        self.num.vars()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        Self::new(n, self.den.checked_mul(&other.den)?)
    }

    /// The polynomial value when the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn subst(&self, var: &str, replacement: &LaurentPoly) -> Result<Self> {
        Self::new(self.num.subst(var, replacement)?, self.den.subst(var, replacement)?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ScalarFraction { num: self.num.scale(c), den: self.den.clone() }
    }
}

/// Equality of fractions by cross-multiplication.
pub fn frac_eq(a: &ScalarFraction, b: &ScalarFraction) -> Result<bool> {
    if a.den.is_zero() || b.den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(a.num.checked_mul(&b.den)? == b.num.checked_mul(&a.den)?)
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
