//! Exact scalars: rationals, Laurent polynomials and their fractions.

mod fraction;
mod laurent;
mod parse;
mod rational;
mod vartable;

pub use fraction::{frac_eq, ScalarFraction};
pub use laurent::{cmp_exps, Exps, LaurentPoly};
pub(crate) use laurent::write_monomial;
pub use parse::{parse_expr, ParseTarget};
pub use rational::Rational;
pub use vartable::VarTable;
