use std::collections::BTreeSet;
use std::sync::Arc;

use super::{FiniteGroup, Group, GroupElement};
use crate::error::{Error, Result};

/// The group H acting on the base in a crossed product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActingGroup {
    Finite(Arc<FiniteGroup>),
    /// ℤ with generator named as given; elements are integers.
    InfiniteCyclic(String),
}

/// Automorphism of the base group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseAutomorphism {
    /// `e ↦ M·e` on ℤⁿ, with the exact integer inverse stored alongside.
    Linear { matrix: Vec<Vec<i64>>, inverse: Vec<Vec<i64>> },
    /// Element permutation of a finite base group.
    Permutation { map: Vec<usize>, inverse: Vec<usize> },
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Inverse of a unimodular integer matrix via the adjugate; `None` if the
/// determinant is not ±1.
fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    fn det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let d = det(m);
    if d != 1 && d != -1 {
        return None;
    }
    let mut inv = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, x)| *x).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = s * det(&minor) * d;
        }
    }
    Some(inv)
}

impl BaseAutomorphism {
    /// Linear automorphism of ℤⁿ; fails unless `matrix` is in GL_n(ℤ).
    pub fn linear(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let inverse = unimodular_inverse(&matrix)
            .ok_or_else(|| Error::InvalidGroupData("action matrix is not in GL_n(Z)".into()))?;
        Ok(Self::Linear { matrix, inverse })
    }

    /// Permutation automorphism of a finite base group; checked to be a
    /// bijective homomorphism.
    pub fn permutation(base: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        let n = base.order();
        let bad = |m: &str| Error::InvalidGroupData(m.into());
        if map.len() != n || map.iter().any(|&x| x >= n) {
            return Err(bad("permutation has wrong size"));
        }
        let mut inverse = vec![usize::MAX; n];
        for (a, &b) in map.iter().enumerate() {
            if inverse[b] != usize::MAX {
                return Err(bad("action is not a bijection"));
            }
            inverse[b] = a;
        }
        for a in 0..n {
            for b in 0..n {
                if map[base.mul(a, b)] != base.mul(map[a], map[b]) {
                    return Err(bad("action is not a homomorphism"));
                }
            }
        }
        Ok(Self::Permutation { map, inverse })
    }

    pub fn identity_on(base: &Group) -> Self {
        match base {
            Group::FreeAbelian(a) => {
                let n = a.rank();
                let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
                Self::Linear { matrix: id.clone(), inverse: id }
            }
            Group::Finite(f) => {
                let id: Vec<usize> = (0..f.order()).collect();
                Self::Permutation { map: id.clone(), inverse: id }
            }
            _ => unreachable!("base groups are abelian or finite"),
        }
    }

    fn apply_raw(&self, x: &GroupElement, inverse: bool) -> GroupElement {
        match (self, x) {
            (Self::Linear { matrix, inverse: inv }, GroupElement::Abelian(v)) => {
                GroupElement::Abelian(mat_vec(if inverse { inv } else { matrix }, v))
            }
            (Self::Permutation { map, inverse: inv }, GroupElement::Finite(k)) => {
                GroupElement::Finite(if inverse { inv[*k] } else { map[*k] })
            }
            _ => panic!("automorphism applied to an element of the wrong base"),
        }
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        self.apply_raw(x, false)
    }

    pub fn apply_inverse(&self, x: &GroupElement) -> GroupElement {
        self.apply_raw(x, true)
    }

    /// Applies the `k`-th power (negative powers use the inverse).
    pub fn apply_power(&self, x: &GroupElement, k: i64) -> GroupElement {
        let mut y = x.clone();
        for _ in 0..k.unsigned_abs() {
            y = self.apply_raw(&y, k < 0);
        }
        y
    }

    fn is_identity(&self) -> bool {
        match self {
            Self::Linear { matrix, .. } => {
                matrix.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
            }
            Self::Permutation { map, .. } => map.iter().enumerate().all(|(i, &x)| i == x),
        }
    }
}

/// Data of a crossed product `R∗H`, equivalently of a group extension
/// `1 → N → Γ → H → 1` with a set-theoretic section μ. Group elements of Γ
/// are pairs `(n, h)` meaning `n·μ(h)`, multiplied by
/// `(n, h)(n', h') = (n·α_h(n')·τ(h, h'), hh')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedProductData {
    label: String,
    base: Group,
    acting: ActingGroup,
    /// For finite H: one automorphism per element of H. For ℤ: the generator's.
    action: Vec<BaseAutomorphism>,
    /// τ(h, h') at `h·|H| + h'`; empty (trivial) for ℤ.
    cocycle: Vec<GroupElement>,
    declared_orders: BTreeSet<u64>,
}

impl CrossedProductData {
    /// Builds and validates crossed-product data with finite H.
    ///
    /// Checked: the base is ℤⁿ or finite; α_e = id; τ is normalized
    /// (τ(e, h) = τ(h, e) = e); α_h∘α_h' = c_τ(h,h')∘α_hh' on base
    /// generators; and the cocycle identity
    /// τ(h,h')·τ(hh',h'') = α_h(τ(h',h''))·τ(h,h'h'') on all triples.
    pub fn new_finite(
        label: impl Into<String>,
        base: Group,
        acting: Arc<FiniteGroup>,
        action: Vec<BaseAutomorphism>,
        cocycle: Vec<GroupElement>,
        declared_orders: BTreeSet<u64>,
    ) -> Result<Self> {
        let bad = |m: String| Error::InvalidGroupData(m);
        if !matches!(base, Group::FreeAbelian(_) | Group::Finite(_)) {
            return Err(bad("crossed-product base must be free abelian or finite".into()));
        }
        let h = acting.order();
        if action.len() != h {
            return Err(bad(format!("expected {h} automorphisms, got {}", action.len())));
        }
        if cocycle.len() != h * h {
            return Err(bad(format!("expected {} cocycle values, got {}", h * h, cocycle.len())));
        }
        for a in &action {
            let ok = matches!(
                (a, &base),
                (BaseAutomorphism::Linear { matrix, .. }, Group::FreeAbelian(ab)) if matrix.len() == ab.rank()
            ) || matches!(
                (a, &base),
                (BaseAutomorphism::Permutation { map, .. }, Group::Finite(f)) if map.len() == f.order()
            );
            if !ok {
                return Err(bad("automorphism does not match the base group".into()));
            }
        }
        for t in &cocycle {
            if !base.contains(t) {
                return Err(bad("cocycle value is not a base group element".into()));
            }
        }
        let data = Self {
            label: label.into(),
            base,
            acting: ActingGroup::Finite(acting),
            action,
            cocycle,
            declared_orders,
        };
        data.validate_finite()?;
        Ok(data)
    }

    fn validate_finite(&self) -> Result<()> {
        let bad = |m: String| Error::InvalidGroupData(m);
        let ActingGroup::Finite(hg) = &self.acting else { unreachable!() };
        let n = hg.order();
        let e = hg.identity();
        let base_id = self.base.identity();
        if !self.action[e].is_identity() {
            return Err(bad("identity of H must act trivially".into()));
        }
        for h in 0..n {
            if self.tau(e, h) != &base_id || self.tau(h, e) != &base_id {
                return Err(bad("cocycle is not normalized".into()));
            }
        }
        let probes = self.base_probes();
        for h in 0..n {
            for k in 0..n {
                let hk = hg.mul(h, k);
                let t = self.tau(h, k);
                let t_inv = self.base.inverse(t);
                for x in &probes {
                    let lhs = self.action[h].apply(&self.action[k].apply(x));
                    let inner = self.action[hk].apply(x);
                    let rhs = self.base.mul_unchecked(&self.base.mul_unchecked(t, &inner), &t_inv);
                    if lhs != rhs {
                        return Err(bad(format!("action is not compatible with the cocycle at ({h}, {k})")));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = hg.mul(a, b);
                    let bc = hg.mul(b, c);
                    let lhs = self.base.mul_unchecked(self.tau(a, b), self.tau(ab, c));
                    let rhs = self.base.mul_unchecked(&self.action[a].apply(self.tau(b, c)), self.tau(a, bc));
                    if lhs != rhs {
                        return Err(bad(format!("cocycle identity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Base elements on which automorphism identities are tested: the unit
    /// vectors for ℤⁿ (enough, the maps are linear) and every element of a
    /// finite base.
    fn base_probes(&self) -> Vec<GroupElement> {
        match &self.base {
            Group::FreeAbelian(a) => (0..a.rank())
                .map(|i| GroupElement::Abelian((0..a.rank()).map(|j| i64::from(i == j)).collect()))
                .collect(),
            Group::Finite(f) => (0..f.order()).map(GroupElement::Finite).collect(),
            _ => unreachable!(),
        }
    }

    /// Semidirect product `N ⋊ ℤ` with the generator acting by `action`.
    pub fn new_cyclic(
        label: impl Into<String>,
        base: Group,
        generator: impl Into<String>,
        action: BaseAutomorphism,
        declared_orders: BTreeSet<u64>,
    ) -> Result<Self> {
        if !matches!(base, Group::FreeAbelian(_) | Group::Finite(_)) {
            return Err(Error::InvalidGroupData("crossed-product base must be free abelian or finite".into()));
        }
        Ok(Self {
            label: label.into(),
            base,
            acting: ActingGroup::InfiniteCyclic(generator.into()),
            action: vec![action],
            cocycle: Vec::new(),
            declared_orders,
        })
    }

    /// The infinite dihedral group ℤ ⋊ ℤ/2, with `s·z·s⁻¹ = z⁻¹`. Base
    /// generator `z`, section generator `s`, finite subgroups of order 1, 2.
    pub fn infinite_dihedral() -> Self {
        let base = Group::free_abelian(1);
        let h = Arc::new(FiniteGroup::cyclic_named(2, "s"));
        let action = vec![BaseAutomorphism::linear(vec![vec![1]]).unwrap(), BaseAutomorphism::linear(vec![vec![-1]]).unwrap()];
        let e = GroupElement::Abelian(vec![0]);
        Self::new_finite("dihedral_inf", base, h, action, vec![e; 4], BTreeSet::from([1, 2]))
            .expect("infinite dihedral data is valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn base(&self) -> &Group {
        &self.base
    }

    pub fn acting(&self) -> &ActingGroup {
        &self.acting
    }

    pub fn acting_finite(&self) -> Option<&Arc<FiniteGroup>> {
        match &self.acting {
            ActingGroup::Finite(f) => Some(f),
            ActingGroup::InfiniteCyclic(_) => None,
        }
    }

    pub fn declared_orders(&self) -> &BTreeSet<u64> {
        &self.declared_orders
    }

    /// τ(h, h') for finite H.
    pub fn tau(&self, h: usize, k: usize) -> &GroupElement {
        let n = self.acting_finite().expect("finite acting group").order();
        &self.cocycle[h * n + k]
    }

    /// α_h applied to a base element; `h` is an H element.
    pub fn act(&self, h: &GroupElement, x: &GroupElement) -> GroupElement {
        match (&self.acting, h) {
            (ActingGroup::Finite(_), GroupElement::Finite(k)) => self.action[*k].apply(x),
            (ActingGroup::InfiniteCyclic(_), GroupElement::Abelian(v)) => self.action[0].apply_power(x, v[0]),
            _ => panic!("element does not belong to the acting group"),
        }
    }

    fn act_inverse(&self, h: &GroupElement, x: &GroupElement) -> GroupElement {
        match (&self.acting, h) {
            (ActingGroup::Finite(_), GroupElement::Finite(k)) => self.action[*k].apply_inverse(x),
            (ActingGroup::InfiniteCyclic(_), GroupElement::Abelian(v)) => self.action[0].apply_power(x, -v[0]),
            _ => panic!("element does not belong to the acting group"),
        }
    }

    pub fn acting_identity(&self) -> GroupElement {
        match &self.acting {
            ActingGroup::Finite(f) => GroupElement::Finite(f.identity()),
            ActingGroup::InfiniteCyclic(_) => GroupElement::Abelian(vec![0]),
        }
    }

    pub(crate) fn acting_mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (&self.acting, a, b) {
            (ActingGroup::Finite(f), GroupElement::Finite(x), GroupElement::Finite(y)) => GroupElement::Finite(f.mul(*x, *y)),
            (ActingGroup::InfiniteCyclic(_), GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(vec![x[0] + y[0]])
            }
            _ => panic!("element does not belong to the acting group"),
        }
    }

    pub(crate) fn acting_inverse(&self, a: &GroupElement) -> GroupElement {
        match (&self.acting, a) {
            (ActingGroup::Finite(f), GroupElement::Finite(x)) => GroupElement::Finite(f.inv(*x)),
            (ActingGroup::InfiniteCyclic(_), GroupElement::Abelian(x)) => GroupElement::Abelian(vec![-x[0]]),
            _ => panic!("element does not belong to the acting group"),
        }
    }

    /// τ as a group element for arbitrary H elements (trivial for ℤ).
    pub fn cocycle_at(&self, h: &GroupElement, k: &GroupElement) -> GroupElement {
        match (h, k) {
            (GroupElement::Finite(a), GroupElement::Finite(b)) => self.tau(*a, *b).clone(),
            _ => self.base.identity(),
        }
    }

    pub(crate) fn contains_acting(&self, h: &GroupElement) -> bool {
        match (&self.acting, h) {
            (ActingGroup::Finite(f), GroupElement::Finite(k)) => *k < f.order(),
            (ActingGroup::InfiniteCyclic(_), GroupElement::Abelian(v)) => v.len() == 1,
            _ => false,
        }
    }

    /// Product of `(n, h)·(n', h')` in Γ.
    pub fn mul_pair(&self, n: &GroupElement, h: &GroupElement, n2: &GroupElement, h2: &GroupElement) -> (GroupElement, GroupElement) {
        let twisted = self.act(h, n2);
        let tau = self.cocycle_at(h, h2);
        let base = self.base.mul_unchecked(&self.base.mul_unchecked(n, &twisted), &tau);
        (base, self.acting_mul(h, h2))
    }

    /// Inverse of `(n, h)`: `(α_h⁻¹(n⁻¹·τ(h, h⁻¹)⁻¹), h⁻¹)`.
    pub fn inverse_pair(&self, n: &GroupElement, h: &GroupElement) -> (GroupElement, GroupElement) {
        let h_inv = self.acting_inverse(h);
        let tau = self.cocycle_at(h, &h_inv);
        let inner = self.base.mul_unchecked(&self.base.inverse(n), &self.base.inverse(&tau));
        (self.act_inverse(h, &inner), h_inv)
    }

    pub fn acting_names(&self) -> Vec<(String, GroupElement)> {
        match &self.acting {
            ActingGroup::Finite(f) => f.generators().iter().map(|(n, k)| (n.clone(), GroupElement::Finite(*k))).collect(),
            ActingGroup::InfiniteCyclic(name) => vec![(name.clone(), GroupElement::Abelian(vec![1]))],
        }
    }

    pub fn display_acting(&self, h: &GroupElement) -> String {
        match (&self.acting, h) {
            (ActingGroup::Finite(f), GroupElement::Finite(k)) => f.name(*k).to_string(),
            (ActingGroup::InfiniteCyclic(name), GroupElement::Abelian(v)) => match v[0] {
                0 => "e".into(),
                1 => name.clone(),
                k => format!("{name}^{k}"),
            },
            _ => "?".into(),
        }
    }
}
