use std::collections::BTreeMap;
use std::sync::Arc;

use super::GroupRingElement;
use crate::error::{Error, Result};
use crate::group::{CrossedProductData, Group, GroupElement};
use crate::scalars::GaussianRational;

/// Element `Σ_h r_h μ(h)` of a crossed product `R∗H`, stored H-graded with
/// coefficients in the base group ring `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProductElement {
    data: Arc<CrossedProductData>,
    terms: BTreeMap<GroupElement, GroupRingElement>,
}

impl CrossedProductElement {
    pub fn zero(data: &Arc<CrossedProductData>) -> Self {
        Self { data: data.clone(), terms: BTreeMap::new() }
    }

    /// `r·μ(h)`.
    pub fn graded(data: &Arc<CrossedProductData>, h: GroupElement, r: GroupRingElement) -> Result<Self> {
        if r.group() != data.base() || !data.contains_acting(&h) {
            return Err(Error::MismatchedGroups);
        }
        let mut out = Self::zero(data);
        out.add_graded(h, &r);
        Ok(out)
    }

    pub fn data(&self) -> &Arc<CrossedProductData> {
        &self.data
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, GroupRingElement> {
        &self.terms
    }

    /// Coefficient of μ(h), i.e. the restriction to the base at degree `h`.
    pub fn component(&self, h: &GroupElement) -> GroupRingElement {
        self.terms.get(h).cloned().unwrap_or_else(|| GroupRingElement::zero(self.data.base()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_graded(&mut self, h: GroupElement, r: &GroupRingElement) {
        if r.is_zero() {
            return;
        }
        let sum = match self.terms.get(&h) {
            Some(v) => v + r,
            None => r.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&h);
        } else {
            self.terms.insert(h, sum);
        }
    }

    /// Splits an element of the group ring of the crossed-product group.
    pub fn from_group_ring(a: &GroupRingElement) -> Result<Self> {
        let Group::Crossed(data) = a.group() else {
            return Err(Error::UnsupportedGroup(format!("{} is not a crossed product", a.group())));
        };
        let mut out = Self::zero(data);
        for (g, c) in a.terms() {
            let GroupElement::Pair(n, h) = g else { unreachable!() };
            out.add_graded((**h).clone(), &GroupRingElement::term(data.base(), (**n).clone(), c.clone()));
        }
        Ok(out)
    }

    pub fn to_group_ring(&self) -> GroupRingElement {
        let group = Group::Crossed(self.data.clone());
        let mut out = GroupRingElement::zero(&group);
        for (h, r) in &self.terms {
            for (n, c) in r.terms() {
                out.add_term(GroupElement::Pair(Box::new(n.clone()), Box::new(h.clone())), c);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.data != other.data {
            return Err(Error::MismatchedGroups);
        }
        let mut out = self.clone();
        for (h, r) in &other.terms {
            out.add_graded(h.clone(), r);
        }
        Ok(out)
    }

    /// `(r μ(h))(r' μ(h')) = r·α_h(r')·τ(h,h')·μ(hh')`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.data != other.data {
            return Err(Error::MismatchedGroups);
        }
        let base = self.data.base();
        let mut out = Self::zero(&self.data);
        for (h, r) in &self.terms {
            for (h2, r2) in &other.terms {
                let twisted = act_on_ring(&self.data, h, r2);
                let tau = GroupRingElement::basis(base, self.data.cocycle_at(h, h2));
                out.add_graded(self.data.acting_mul(h, h2), &(&(r * &twisted) * &tau));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(&self.data);
        for (h, r) in &self.terms {
            out.add_graded(h.clone(), &r.scale(c));
        }
        out
    }
}

/// `c_{μ(h)}` restricted to the base ring: `Σ r_n n ↦ Σ r_n α_h(n)`.
pub fn act_on_ring(data: &CrossedProductData, h: &GroupElement, r: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero(data.base());
    for (n, c) in r.terms() {
        out.add_term(data.act(h, n), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_graded_law_matches_convolution() {
        let d = Group::infinite_dihedral();
        let Group::Crossed(data) = &d else { unreachable!() };
        let gens = d.generators();
        let z = GroupRingElement::basis(&d, gens[0].1.clone());
        let s = GroupRingElement::basis(&d, gens[1].1.clone());
        let a = &(&z * &s) + &GroupRingElement::one(&d);
        let b = &(&s * &z) - &z;
        let pa = CrossedProductElement::from_group_ring(&a).unwrap();
        let pb = CrossedProductElement::from_group_ring(&b).unwrap();
        assert_eq!(pa.mul(&pb).unwrap().to_group_ring(), &a * &b);
        assert_eq!(pa.data(), data);
    }
}
