//! Exact scalars: rationals, Gaussian rationals, Laurent polynomials and
//! rational functions, together with exact rank and kernel computations.

mod gaussian;
mod laurent;
pub mod linalg;
mod matrix;
mod ratfunc;

use std::fmt::Debug;

pub use gaussian::GaussianRational;
pub use laurent::{default_var_names as laurent_var_names, Exponent, LaurentPoly};
pub(crate) use laurent::write_term;
pub use matrix::Matrix;
pub use ratfunc::{RationalFunction, ReducePolicy};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from machine integers.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Minimal ring interface shared by every coefficient type the engines
/// operate on. Zero and one are produced relative to an existing element
/// because several rings (polynomials, group rings) carry context.
pub trait RingElement: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}
