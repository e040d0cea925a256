use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::scalars::{GaussianRational, LaurentPoly, RingElement};

/// Element `Σ a_g g` of the group ring ℚ(i)Γ, with finitely many nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Group,
    terms: BTreeMap<GroupElement, GaussianRational>,
}

impl GroupRingElement {
    pub fn zero(group: &Group) -> Self {
        Self { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &Group) -> Self {
        Self::scalar(group, GaussianRational::from_int(1))
    }

    pub fn scalar(group: &Group, c: GaussianRational) -> Self {
        Self::term(group, group.identity(), c)
    }

    /// `c·g`. Panics if `g` is not an element of `group`.
    pub fn term(group: &Group, g: GroupElement, c: GaussianRational) -> Self {
        assert!(group.contains(&g), "element does not belong to {group}");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        Self { group: group.clone(), terms }
    }

    pub fn basis(group: &Group, g: GroupElement) -> Self {
        Self::term(group, g, GaussianRational::from_int(1))
    }

    pub fn from_terms<I>(group: &Group, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, GaussianRational)>,
    {
        let mut out = Self::zero(group);
        for (g, c) in terms {
            if !group.contains(&g) {
                return Err(Error::MismatchedGroups);
            }
            out.add_term(g, &c);
        }
        Ok(out)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, GaussianRational> {
        &self.terms
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &GroupElement) -> GaussianRational {
        self.terms.get(g).cloned().unwrap_or_else(|| GaussianRational::from_int(0))
    }

    pub(crate) fn add_term(&mut self, g: GroupElement, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c.clone());
            }
        }
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::MismatchedGroups)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        Ok(out)
    }

    /// Convolution product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut out = Self::zero(&self.group);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(self.group.mul_unchecked(g, h), &(a * b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(&self.group);
        for (g, a) in &self.terms {
            out.add_term(g.clone(), &(a * c));
        }
        out
    }

    /// The involution `Σ a_g g ↦ Σ conj(a_g) g⁻¹`.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(&self.group);
        for (g, a) in &self.terms {
            out.add_term(self.group.inverse(g), &a.conj());
        }
        out
    }

    /// The von Neumann trace on the group ring: the coefficient of the identity.
    pub fn trace(&self) -> GaussianRational {
        self.coeff(&self.group.identity())
    }

    /// Moves the element along a map of groups, e.g. a subgroup inclusion.
    /// The map must be a homomorphism for products to be preserved.
    pub fn map_group(&self, target: &Group, f: impl Fn(&GroupElement) -> GroupElement) -> Result<Self> {
        let mut out = Self::zero(target);
        for (g, a) in &self.terms {
            let h = f(g);
            if !target.contains(&h) {
                return Err(Error::MismatchedGroups);
            }
            out.add_term(h, a);
        }
        Ok(out)
    }

    /// Identifies ℚ(i)[ℤⁿ] with Laurent polynomials.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        let Group::FreeAbelian(a) = &self.group else {
            return Err(Error::UnsupportedGroup(format!("{} is not free abelian", self.group)));
        };
        Ok(LaurentPoly::from_terms(
            a.rank(),
            self.terms.iter().map(|(g, c)| match g {
                GroupElement::Abelian(v) => (v.clone(), c.clone()),
                _ => unreachable!("abelian group ring holds exponent vectors"),
            }),
        ))
    }

    pub fn from_laurent(group: &Group, p: &LaurentPoly) -> Result<Self> {
        Self::from_terms(group, p.terms().iter().map(|(e, c)| (GroupElement::Abelian(e.clone()), c.clone())))
    }

    /// Image under a ring homomorphism determined by its values on group
    /// elements (e.g. a matrix representation).
    pub fn eval_with<T: RingElement>(&self, zero: &T, embed: impl Fn(&GroupElement) -> T, scalar: impl Fn(&GaussianRational, &T) -> T) -> T {
        let mut acc = zero.clone();
        for (g, c) in &self.terms {
            acc = acc.add_ref(&scalar(c, &embed(g)));
        }
        acc
    }
}

impl<'a> Add<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.checked_add(rhs).expect("group ring elements over different groups")
    }
}

impl<'a> Sub<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.checked_add(&-rhs).expect("group ring elements over different groups")
    }
}

impl<'a> Mul<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        self.checked_mul(rhs).expect("group ring elements over different groups")
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl RingElement for GroupRingElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero(&self.group)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.group)
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

/// Renders in the element syntax, e.g. `(3/2+1/2i)*x^2*y^-1 + 2`.
impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let id = self.group.identity();
        let mut out = String::new();
        // identity first, then the remaining elements in their normal order
        let ordered = self.terms.iter().filter(|(g, _)| **g == id).chain(self.terms.iter().filter(|(g, _)| **g != id));
        for (idx, (g, c)) in ordered.enumerate() {
            let mono = if *g == id { String::new() } else { self.group.display_element(g) };
            crate::scalars::write_term(&mut out, idx == 0, c, &mono);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn free2() -> (Group, GroupRingElement, GroupRingElement) {
        let g = Group::free(2);
        let x = GroupRingElement::basis(&g, GroupElement::Word(vec![1]));
        let y = GroupRingElement::basis(&g, GroupElement::Word(vec![2]));
        (g, x, y)
    }

    #[test]
    fn trace_examples() {
        let (g, x, _) = free2();
        let x_inv = x.star();
        let a = &(&GroupRingElement::scalar(&g, GaussianRational::from_int(2)) + &x.scale(&GaussianRational::from_int(3)))
            + &x_inv.scale(&GaussianRational::from_frac(1, 2));
        assert_eq!(a.trace(), GaussianRational::from_int(2));
        assert_eq!(GroupRingElement::zero(&g).trace(), GaussianRational::from_int(0));
        assert_eq!((&x * &x_inv).trace(), GaussianRational::from_int(1));
    }

    #[test]
    fn trace_of_star_product_is_squared_norm() {
        let (g, x, y) = free2();
        let a = &(&x.scale(&GaussianRational::new(crate::scalars::rational(2, 1), crate::scalars::rational(1, 1))) - &y) + &GroupRingElement::one(&g);
        let t = (&a.star() * &a).trace();
        assert_eq!(t, GaussianRational::from_int(5 + 1 + 1));
    }

    #[test]
    fn mismatched_groups() {
        let (_, x, _) = free2();
        let c2 = Group::finite(FiniteGroup::cyclic(2));
        let gc = GroupRingElement::one(&c2);
        assert_eq!(x.checked_mul(&gc).unwrap_err(), Error::MismatchedGroups);
    }

    #[test]
    fn display() {
        let (g, x, y) = free2();
        let c = GaussianRational::new(crate::scalars::rational(3, 2), crate::scalars::rational(1, 2));
        let x2yi = GroupRingElement::term(&g, GroupElement::Word(vec![1, 1, -2]), c);
        let a = &(&x2yi - &y) + &GroupRingElement::one(&g);
        assert_eq!(a.to_string(), "1 + (3/2+1/2i)*x^2*y^-1 - y");
        assert_eq!((&x - &x).to_string(), "0");
    }
}
