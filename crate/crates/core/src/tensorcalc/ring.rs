use crate::error::Result;
use crate::freealg::NcPoly;
use crate::scalars::{LaurentPoly, VarTable};

/// Coefficient ring for operator matrices.
pub trait Ring: Sync {
    type Elem: Clone + Send + Sync + PartialEq + std::fmt::Display;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn from_scalar(&self, c: &LaurentPoly) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &LaurentPoly) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// Commutative Laurent-polynomial scalars.
#[derive(Clone)]
pub struct Scalars(pub VarTable);

impl Ring for Scalars {
    type Elem = LaurentPoly;
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero(&self.0)
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(&self.0)
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a + b
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        -a
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        a.checked_mul(b)
    }
    fn from_scalar(&self, c: &LaurentPoly) -> LaurentPoly {
        c.clone()
    }
    fn scale(&self, a: &LaurentPoly, c: &LaurentPoly) -> LaurentPoly {
        a * c
    }
}

/// The free algebra: products are concatenations.
#[derive(Clone)]
pub struct FreeAlgebra(pub VarTable);

impl Ring for FreeAlgebra {
    type Elem = NcPoly;
    fn zero(&self) -> NcPoly {
        NcPoly::zero(&self.0)
    }
    fn one(&self) -> NcPoly {
        NcPoly::one(&self.0)
    }
    fn is_zero(&self, a: &NcPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.add(b)
    }
    fn neg(&self, a: &NcPoly) -> NcPoly {
        a.neg()
    }
    fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        Ok(a.nc_mul(b))
    }
    fn from_scalar(&self, c: &LaurentPoly) -> NcPoly {
        NcPoly::scalar(c.clone())
    }
    fn scale(&self, a: &NcPoly, c: &LaurentPoly) -> NcPoly {
        a.scale(c)
    }
}
