use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::One;

use super::{GaussianRational, LaurentPoly, RingElement};
use crate::error::{Error, Result};

/// How aggressively rational functions are normalized after arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReducePolicy {
    /// Keep numerator and denominator exactly as produced.
    #[default]
    None,
    /// Strip the monomial content of the denominator and make its leading
    /// coefficient 1.
    Content,
}

/// Quotient `num / den` of Laurent polynomials. Not reduced to lowest
/// terms; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert_eq!(num.nvars(), den.nvars());
        if num.is_zero() {
            return Ok(Self::zero(num.nvars()));
        }
        Ok(Self { num, den })
    }

    pub fn zero(nvars: usize) -> Self {
        Self { num: LaurentPoly::zero(nvars), den: LaurentPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        Self { num: p, den: LaurentPoly::one(n) }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the denominator divides the
    /// numerator.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num: self.den.clone(), den: self.num.clone() })
    }

    /// Divides numerator and denominator by the monomial content and leading
    /// coefficient of the denominator. Both are units, so the value is
    /// unchanged.
    pub fn reduce_content(&self) -> Self {
        let Some((lo, _)) = self.den.exponent_box() else {
            return self.clone();
        };
        let neg: Vec<i64> = lo.iter().map(|x| -x).collect();
        let den = self.den.shift(&neg);
        let num = self.num.shift(&neg);
        let lc = den.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(GaussianRational::one);
        let inv = lc.inv().expect("nonzero leading coefficient");
        let num = num.scale(&inv);
        let den = den.scale(&inv);
        // a numerator that the denominator divides collapses to a polynomial
        if !den.is_one() {
            if let Some(q) = num.exact_div(&den) {
                return Self::from_poly(q);
            }
        }
        Self { num, den }
    }

    pub fn normalized(&self, policy: ReducePolicy) -> Self {
        match policy {
            ReducePolicy::None => self.clone(),
            ReducePolicy::Content => self.reduce_content(),
        }
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Option<GaussianRational> {
        let d = self.den.eval(point)?;
        let n = self.num.eval(point)?;
        Some(&n * &d.inv()?)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            return self.num.display_with(names);
        }
        let num = self.num.display_with(names);
        let num = if self.num.num_terms() > 1 || num.contains('(') { format!("({num})") } else { num };
        // a bare power of one variable is the only denominator left unwrapped
        let bare = self.den.terms().iter().all(|(e, c)| c.is_one() && e.iter().filter(|&&x| x != 0).count() == 1)
            && self.den.num_terms() == 1;
        let den = self.den.display_with(names);
        let den = if bare { den } else { format!("({den})") };
        format!("{num}/{den}")
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl RingElement for RationalFunction {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&super::laurent::default_var_names(self.nvars())))
    }
}
