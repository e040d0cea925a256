//! Concrete group models: finite groups, ℤⁿ, free groups and crossed
//! products (group extensions with an explicit section and cocycle).

mod crossed;
mod finite;
mod free;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use crossed::{ActingGroup, BaseAutomorphism, CrossedProductData};
pub use finite::FiniteGroup;
pub use free::{FreeGroup, Letter};

use crate::error::{Error, Result};
use crate::scalars::laurent_var_names;

/// ℤⁿ; elements are exponent vectors, written multiplicatively as
/// monomials `z^a*w^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeAbelianGroup {
    rank: usize,
}

impl FreeAbelianGroup {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "free abelian group needs rank >= 1");
        Self { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// A group element in normal form. Elements carry no reference to their
/// group; [`Group`] methods check membership.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Finite(usize),
    Abelian(Vec<i64>),
    Word(Vec<Letter>),
    /// `(n, h)` in a crossed product, meaning `n·μ(h)`.
    Pair(Box<GroupElement>, Box<GroupElement>),
}

/// One of the supported group models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    Finite(Arc<FiniteGroup>),
    FreeAbelian(FreeAbelianGroup),
    Free(FreeGroup),
    Crossed(Arc<CrossedProductData>),
}

impl Group {
    pub fn finite(g: FiniteGroup) -> Self {
        Self::Finite(Arc::new(g))
    }

    pub fn free_abelian(rank: usize) -> Self {
        Self::FreeAbelian(FreeAbelianGroup::new(rank))
    }

    pub fn free(rank: usize) -> Self {
        Self::Free(FreeGroup::new(rank))
    }

    pub fn crossed(data: CrossedProductData) -> Self {
        Self::Crossed(Arc::new(data))
    }

    pub fn trivial() -> Self {
        Self::finite(FiniteGroup::trivial())
    }

    pub fn infinite_dihedral() -> Self {
        Self::crossed(CrossedProductData::infinite_dihedral())
    }

    /// Textual description matching the CLI group syntax.
    pub fn spec(&self) -> String {
        match self {
            Self::Finite(f) => format!("finite {}", f.label()),
            Self::FreeAbelian(a) => format!("abelian {}", a.rank()),
            Self::Free(f) => format!("free {}", f.rank()),
            Self::Crossed(c) => c.label().to_string(),
        }
    }

    /// Group order, `None` for infinite groups.
    pub fn order(&self) -> Option<usize> {
        match self {
            Self::Finite(f) => Some(f.order()),
            Self::Crossed(c) => match (c.base().order(), c.acting_finite()) {
                (Some(n), Some(h)) => Some(n * h.order()),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Self::Finite(f) => GroupElement::Finite(f.identity()),
            Self::FreeAbelian(a) => GroupElement::Abelian(vec![0; a.rank()]),
            Self::Free(_) => GroupElement::Word(Vec::new()),
            Self::Crossed(c) => GroupElement::Pair(Box::new(c.base().identity()), Box::new(c.acting_identity())),
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        match (self, x) {
            (Self::Finite(f), GroupElement::Finite(k)) => *k < f.order(),
            (Self::FreeAbelian(a), GroupElement::Abelian(v)) => v.len() == a.rank(),
            (Self::Free(f), GroupElement::Word(w)) => {
                FreeGroup::is_reduced(w) && w.iter().all(|l| l.unsigned_abs() as usize <= f.rank())
            }
            (Self::Crossed(c), GroupElement::Pair(n, h)) => c.base().contains(n) && c.contains_acting(h),
            _ => false,
        }
    }

    /// Group law; fails if either element is not from this model.
    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::MismatchedGroups);
        }
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (Self::Finite(f), GroupElement::Finite(x), GroupElement::Finite(y)) => GroupElement::Finite(f.mul(*x, *y)),
            (Self::FreeAbelian(_), GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Self::Free(f), GroupElement::Word(x), GroupElement::Word(y)) => GroupElement::Word(f.multiply(x, y)),
            (Self::Crossed(c), GroupElement::Pair(n, h), GroupElement::Pair(n2, h2)) => {
                let (m, k) = c.mul_pair(n, h, n2, h2);
                GroupElement::Pair(Box::new(m), Box::new(k))
            }
            _ => panic!("group element does not belong to {}", self.spec()),
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (Self::Finite(f), GroupElement::Finite(x)) => GroupElement::Finite(f.inv(*x)),
            (Self::FreeAbelian(_), GroupElement::Abelian(x)) => GroupElement::Abelian(x.iter().map(|v| -v).collect()),
            (Self::Free(f), GroupElement::Word(w)) => GroupElement::Word(f.inverse(w)),
            (Self::Crossed(c), GroupElement::Pair(n, h)) => {
                let (m, k) = c.inverse_pair(n, h);
                GroupElement::Pair(Box::new(m), Box::new(k))
            }
            _ => panic!("group element does not belong to {}", self.spec()),
        }
    }

    pub fn pow(&self, a: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inverse(a) } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul_unchecked(&acc, &base);
        }
        acc
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        *a == self.identity()
    }

    /// Named generators, as understood by the element parser.
    pub fn generators(&self) -> Vec<(String, GroupElement)> {
        match self {
            Self::Finite(f) => f.generators().iter().map(|(n, k)| (n.clone(), GroupElement::Finite(*k))).collect(),
            Self::FreeAbelian(a) => laurent_var_names(a.rank())
                .into_iter()
                .enumerate()
                .map(|(i, n)| (n, GroupElement::Abelian((0..a.rank()).map(|j| i64::from(i == j)).collect())))
                .collect(),
            Self::Free(f) => f
                .generator_names()
                .into_iter()
                .enumerate()
                .map(|(i, n)| (n, GroupElement::Word(vec![i as Letter + 1])))
                .collect(),
            Self::Crossed(c) => {
                let base_id = c.base().identity();
                let mut gens: Vec<(String, GroupElement)> = c
                    .base()
                    .generators()
                    .into_iter()
                    .map(|(n, g)| (n, GroupElement::Pair(Box::new(g), Box::new(c.acting_identity()))))
                    .collect();
                gens.extend(
                    c.acting_names()
                        .into_iter()
                        .map(|(n, h)| (n, GroupElement::Pair(Box::new(base_id.clone()), Box::new(h)))),
                );
                gens
            }
        }
    }

    /// Orders of finite subgroups: enumerated for finite groups, `{1}` for
    /// torsion-free models, and the declared set for crossed products.
    pub fn finite_subgroup_orders(&self) -> BTreeSet<u64> {
        match self {
            Self::Finite(f) => f.subgroup_orders(),
            Self::FreeAbelian(_) | Self::Free(_) => BTreeSet::from([1]),
            Self::Crossed(c) => c.declared_orders().clone(),
        }
    }

    /// Renders an element in the syntax accepted by the element parser.
    pub fn display_element(&self, x: &GroupElement) -> String {
        match (self, x) {
            (Self::Finite(f), GroupElement::Finite(k)) => f.name(*k).to_string(),
            (Self::FreeAbelian(a), GroupElement::Abelian(v)) => {
                let names = laurent_var_names(a.rank());
                let parts: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e != 0)
                    .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                    .collect();
                if parts.is_empty() { "e".into() } else { parts.join("*") }
            }
            (Self::Free(f), GroupElement::Word(w)) => f.display_word(w),
            (Self::Crossed(c), GroupElement::Pair(n, h)) => {
                let base = c.base().display_element(n);
                let top = c.display_acting(h);
                match (base == "e", top == "e") {
                    (true, true) => "e".into(),
                    (false, true) => base,
                    (true, false) => top,
                    (false, false) => format!("{base}*{top}"),
                }
            }
            _ => format!("{x:?}"),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_examples() {
        let f = Group::free(2);
        let x = GroupElement::Word(vec![1]);
        let x_inv = GroupElement::Word(vec![-1]);
        assert_eq!(f.multiply(&x, &x_inv).unwrap(), f.identity());

        let a = Group::free_abelian(2);
        let p = a.multiply(&GroupElement::Abelian(vec![1, 0]), &GroupElement::Abelian(vec![0, 1])).unwrap();
        assert_eq!(p, GroupElement::Abelian(vec![1, 1]));

        let c2 = Group::finite(FiniteGroup::cyclic(2));
        assert_eq!(c2.multiply(&GroupElement::Finite(1), &GroupElement::Finite(1)).unwrap(), c2.identity());
    }

    #[test]
    fn mismatched_models_rejected() {
        let f = Group::free(2);
        let r = f.multiply(&GroupElement::Abelian(vec![1, 0]), &f.identity());
        assert_eq!(r.unwrap_err(), Error::MismatchedGroups);
        // generator 3 is not in the free group of rank 2
        assert!(f.multiply(&GroupElement::Word(vec![3]), &f.identity()).is_err());
    }

    #[test]
    fn subgroup_orders() {
        assert_eq!(Group::free(2).finite_subgroup_orders(), BTreeSet::from([1]));
        assert_eq!(Group::free_abelian(3).finite_subgroup_orders(), BTreeSet::from([1]));
        assert_eq!(Group::finite(FiniteGroup::cyclic(2)).finite_subgroup_orders(), BTreeSet::from([1, 2]));
        assert_eq!(Group::infinite_dihedral().finite_subgroup_orders(), BTreeSet::from([1, 2]));
    }

    #[test]
    fn display_round_names() {
        let d = Group::infinite_dihedral();
        let gens = d.generators();
        let names: Vec<&str> = gens.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["z", "s"]);
        let zs = d.multiply(&gens[0].1, &gens[1].1).unwrap();
        assert_eq!(d.display_element(&zs), "z*s");
        let sz = d.multiply(&gens[1].1, &gens[0].1).unwrap();
        assert_eq!(d.display_element(&sz), "z^-1*s");
    }
}
