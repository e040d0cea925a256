use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{GaussianRational, RingElement};

/// Integer exponent vector of a Laurent monomial. Ordered lexicographically.
pub type Exponent = Vec<i64>;

/// Multivariate Laurent polynomial with Gaussian-rational coefficients.
///
/// Terms are kept in a `BTreeMap`, so the lexicographically largest
/// monomial is always the last entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, GaussianRational>,
}

/// Default variable names: `z, w, u, v` for up to four variables, `t1..tn`
/// beyond that.
pub fn default_var_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["z", "w", "u", "v"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("t{i}")).collect()
    }
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussianRational::one())
    }

    pub fn constant(nvars: usize, c: GaussianRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exponent, c: GaussianRational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { nvars, terms }
    }

    /// The variable `t_i` (zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, GaussianRational::one())
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, GaussianRational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, GaussianRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// True if the polynomial is a single term, i.e. a unit of the Laurent ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, e: &[i64]) -> GaussianRational {
        self.terms.get(e).cloned().unwrap_or_else(GaussianRational::zero)
    }

    fn add_term(&mut self, e: Exponent, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "Laurent polynomials over different variable sets");
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &GaussianRational)> {
        self.terms.last_key_value()
    }

    /// Per-variable minimum and maximum exponent; `None` for zero.
    pub fn exponent_box(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for e in it {
            for k in 0..self.nvars {
                lo[k] = lo[k].min(e[k]);
                hi[k] = hi[k].max(e[k]);
            }
        }
        Some((lo, hi))
    }

    /// Largest absolute value of any exponent.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().flat_map(|e| e.iter().map(|x| x.abs())).max().unwrap_or(0)
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does
    /// not divide `self`.
    ///
    /// Lex-leading-term division. If `self = q·d` then the exponent box of
    /// `q` is `[lo(self) - lo(d), hi(self) - hi(d)]`; any quotient monomial
    /// outside that box proves non-divisibility, which also bounds the loop.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        self.check(d);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (lo_a, hi_a) = self.exponent_box()?;
        let (lo_d, hi_d) = d.exponent_box()?;
        let lo: Vec<i64> = lo_a.iter().zip(&lo_d).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_a.iter().zip(&hi_d).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return None;
        }
        let (lead_e, lead_c) = d.leading_term()?;
        let lead_inv = lead_c.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term() {
            let qe: Exponent = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().enumerate().any(|(k, &x)| x < lo[k] || x > hi[k]) {
                return None;
            }
            let qc = rc * &lead_inv;
            for (de, dc) in &d.terms {
                let e: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(e, &-(dc * &qc));
            }
            quot.add_term(qe, &qc);
        }
        Some(quot)
    }

    /// Evaluates at a point with nonzero coordinates wherever a negative
    /// exponent occurs. Returns `None` if a needed inverse does not exist.
    pub fn eval(&self, point: &[GaussianRational]) -> Option<GaussianRational> {
        assert_eq!(point.len(), self.nvars);
        let mut inverses = Vec::with_capacity(point.len());
        for p in point {
            inverses.push(p.inv());
        }
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &x) in e.iter().enumerate() {
                let base = if x >= 0 { point[k].clone() } else { inverses[k].clone()? };
                for _ in 0..x.unsigned_abs() {
                    t = &t * &base;
                }
            }
            acc += &t;
        }
        Some(acc)
    }

    /// Applies a linear substitution of exponents, `e ↦ M·e`. Used for the
    /// automorphisms of ℤⁿ acting on its group ring.
    pub fn substitute_exponents(&self, map: impl Fn(&[i64]) -> Exponent) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(map(e), c);
        }
        out
    }

    /// Formats with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| if x == 1 { names[k].clone() } else { format!("{}^{}", names[k], x) })
                .collect();
            write_term(&mut out, idx == 0, c, &factors.join("*"));
        }
        out
    }
}

/// Appends one `coefficient*monomial` term to a sum, taking care of signs
/// and parenthesising genuinely complex coefficients. An empty monomial
/// means the unit.
pub(crate) fn write_term(out: &mut String, first: bool, c: &GaussianRational, mono: &str) {
    use num_traits::Signed;
    let real_neg = c.is_real() && c.re().is_negative();
    let imag_only_neg = c.re().is_zero() && c.im().is_negative();
    let negative = real_neg || imag_only_neg;
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let mag = if negative { -c } else { c.clone() };
    let complex = !mag.re().is_zero() && !mag.im().is_zero();
    let coeff = if complex { format!("({mag})") } else { mag.to_string() };
    if mono.is_empty() {
        out.push_str(&coeff);
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&coeff);
        out.push('*');
        out.push_str(mono);
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_var_names(self.nvars)))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c);
        }
        big
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check(rhs);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl RingElement for LaurentPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars)
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

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> LaurentPoly {
        LaurentPoly::var(2, 0)
    }
    fn w() -> LaurentPoly {
        LaurentPoly::var(2, 1)
    }
    fn one() -> LaurentPoly {
        LaurentPoly::one(2)
    }

    #[test]
    fn zero_tests() {
        assert!(LaurentPoly::zero(1).is_zero());
        assert!((&z() - &z()).is_zero());
        let lhs = &(&z() - &one()) * &(&z() + &one());
        let rhs = &(&z() * &z()) - &one();
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn exact_division() {
        let f = &z() - &one();
        let g = &w() + &z().pow(2);
        let h = &f * &g;
        assert_eq!(h.exact_div(&f), Some(g.clone()));
        assert_eq!(h.exact_div(&g), Some(f.clone()));
        // z + 1 does not divide z - 1
        assert_eq!(f.exact_div(&(&z() + &one())), None);
        // monomials are units
        let zi = LaurentPoly::monomial(vec![-1, 0], GaussianRational::one());
        assert_eq!(f.exact_div(&zi), Some(f.shift(&[1, 0])));
    }

    #[test]
    fn evaluation() {
        let p = &LaurentPoly::monomial(vec![-1, 2], GaussianRational::from_int(3)) + &one();
        let v = p.eval(&[GaussianRational::from_int(2), GaussianRational::from_int(3)]).unwrap();
        assert_eq!(v, GaussianRational::from_frac(29, 2));
        assert!(p.eval(&[GaussianRational::zero(), GaussianRational::one()]).is_none());
    }

    #[test]
    fn display() {
        let p = &(&z() - &one()) * &w();
        assert_eq!(p.to_string(), "z*w - w");
        let q = LaurentPoly::monomial(vec![2, -1], GaussianRational::new(super::super::rational(3, 2), super::super::rational(1, 2)));
        assert_eq!(q.to_string(), "(3/2+1/2i)*z^2*w^-1");
        assert_eq!(LaurentPoly::constant(1, GaussianRational::from_int(-2)).to_string(), "-2");
    }
}
