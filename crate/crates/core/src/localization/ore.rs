use crate::error::{Error, Result};
use crate::group::Group;
use crate::group_ring::GroupRingElement;
use crate::scalars::{LaurentPoly, RingElement};

/// A multiplicative subset `T` of a ring satisfying the right Ore condition:
/// for `a ∈ R`, `s ∈ T` there are `b ∈ R`, `t ∈ T` with `a·t = s·b`.
pub trait OreSet {
    type Elem: RingElement;

    fn describe(&self) -> String;
    fn contains(&self, s: &Self::Elem) -> bool;
    fn one(&self) -> Self::Elem;
    fn is_commutative(&self) -> bool;

    /// Returns `(b, t)` with `t ∈ T` and `a·t = s·b`.
    fn ore_pair(&self, a: &Self::Elem, s: &Self::Elem) -> Result<(Self::Elem, Self::Elem)>;

    /// Optional size reduction of a fraction; must preserve its class.
    fn simplify(&self, num: Self::Elem, den: Self::Elem) -> (Self::Elem, Self::Elem) {
        (num, den)
    }
}

/// `{fᵏ : k ≥ 0}` in a Laurent polynomial ring, for non-constant `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowersOf {
    f: LaurentPoly,
}

impl PowersOf {
    pub fn new(f: LaurentPoly) -> Result<Self> {
        if f.max_abs_exponent() == 0 {
            return Err(Error::InvalidOreSet("powers of a constant are not supported".into()));
        }
        Ok(Self { f })
    }

    pub fn base(&self) -> &LaurentPoly {
        &self.f
    }

    /// `k` with `s = fᵏ`, if any. A power `fᵏ` has an exponent of absolute
    /// value at least `k/2`, which bounds the search.
    pub fn exponent_of(&self, s: &LaurentPoly) -> Option<u32> {
        let bound = 2 * s.max_abs_exponent() + 1;
        let mut cur = s.clone();
        for k in 0..=bound {
            if cur.is_one() {
                return Some(k as u32);
            }
            cur = cur.exact_div(&self.f)?;
        }
        None
    }
}

fn has_negative_exponents(p: &LaurentPoly) -> bool {
    p.terms().keys().any(|e| e.iter().any(|&x| x < 0))
}

impl OreSet for PowersOf {
    type Elem = LaurentPoly;

    fn describe(&self) -> String {
        format!("powers of {}", self.f)
    }

    fn contains(&self, s: &LaurentPoly) -> bool {
        s.nvars() == self.f.nvars() && self.exponent_of(s).is_some()
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.f.nvars())
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn ore_pair(&self, a: &LaurentPoly, s: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        Ok((a.clone(), s.clone()))
    }

    /// Cancels common factors `f` while the numerator stays polynomial.
    fn simplify(&self, mut num: LaurentPoly, mut den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        let polynomial = !has_negative_exponents(&num);
        while !den.is_one() {
            let (Some(n), Some(d)) = (num.exact_div(&self.f), den.exact_div(&self.f)) else { break };
            if polynomial && has_negative_exponents(&n) {
                break;
            }
            num = n;
            den = d;
        }
        (num, den)
    }
}

/// All nonzero Laurent polynomials in `nvars` variables; the localization
/// is the rational-function field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonzeroElements {
    nvars: usize,
}

impl NonzeroElements {
    pub fn new(nvars: usize) -> Self {
        Self { nvars }
    }
}

impl OreSet for NonzeroElements {
    type Elem = LaurentPoly;

    fn describe(&self) -> String {
        format!("nonzero Laurent polynomials in {} variable{}", self.nvars, if self.nvars == 1 { "" } else { "s" })
    }

    fn contains(&self, s: &LaurentPoly) -> bool {
        s.nvars() == self.nvars && !s.is_zero()
    }

    fn one(&self) -> LaurentPoly {
        LaurentPoly::one(self.nvars)
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn ore_pair(&self, a: &LaurentPoly, s: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        Ok((a.clone(), s.clone()))
    }
}

/// Trivial units `c·g` (`c ≠ 0`, `g ∈ Γ`) of a group ring. Already
/// invertible, so the Ore pair is `(s⁻¹a, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElements {
    group: Group,
}

impl GroupElements {
    pub fn new(group: Group) -> Self {
        Self { group }
    }

    fn invert(&self, s: &GroupRingElement) -> Option<GroupRingElement> {
        if s.support_len() != 1 || s.group() != &self.group {
            return None;
        }
        let (g, c) = s.terms().iter().next()?;
        Some(GroupRingElement::term(&self.group, self.group.inverse(g), c.inv()?))
    }
}

impl OreSet for GroupElements {
    type Elem = GroupRingElement;

    fn describe(&self) -> String {
        format!("trivial units of the group ring of {}", self.group)
    }

    fn contains(&self, s: &GroupRingElement) -> bool {
        self.invert(s).is_some()
    }

    fn one(&self) -> GroupRingElement {
        GroupRingElement::one(&self.group)
    }

    fn is_commutative(&self) -> bool {
        matches!(self.group, Group::FreeAbelian(_)) || self.group.order() == Some(1)
    }

    fn ore_pair(&self, a: &GroupRingElement, s: &GroupRingElement) -> Result<(GroupRingElement, GroupRingElement)> {
        let s_inv = self.invert(s).ok_or_else(|| Error::InvalidOreSet("denominator is not a trivial unit".into()))?;
        Ok((s_inv.checked_mul(a)?, self.one()))
    }
}

/// Nonzero elements of a free group ring. Not an Ore set: pairs cannot be
/// produced and every query reports the missing oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroupNonzero {
    group: Group,
}

impl FreeGroupNonzero {
    pub fn new(rank: usize) -> Self {
        Self { group: Group::free(rank) }
    }
}

impl OreSet for FreeGroupNonzero {
    type Elem = GroupRingElement;

    fn describe(&self) -> String {
        format!("nonzero elements of the group ring of {}", self.group)
    }

    fn contains(&self, s: &GroupRingElement) -> bool {
        s.group() == &self.group && !s.is_zero()
    }

    fn one(&self) -> GroupRingElement {
        GroupRingElement::one(&self.group)
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn ore_pair(&self, _: &GroupRingElement, _: &GroupRingElement) -> Result<(GroupRingElement, GroupRingElement)> {
        Err(Error::UnsupportedOracle(format!(
            "{} has no common right multiples in general; see the Ore-failure certificate",
            self.describe()
        )))
    }
}

/// Checks the set axioms on sample data: `1 ∈ T`, `0 ∉ T`, products of
/// sampled members are members, and members do not annihilate nonzero
/// samples from either side.
pub fn spot_check<S: OreSet>(set: &S, members: &[S::Elem], samples: &[S::Elem]) -> Result<()> {
    let bad = |m: String| Err(Error::InvalidOreSet(m));
    let one = set.one();
    if !set.contains(&one) {
        return bad("1 is not a member".into());
    }
    if set.contains(&one.zero_like()) {
        return bad("0 is a member".into());
    }
    for s in members {
        if !set.contains(s) {
            return bad(format!("{s:?} is not a member"));
        }
        for t in members {
            if !set.contains(&s.mul_ref(t)) {
                return bad("not closed under products".into());
            }
        }
        for x in samples.iter().filter(|x| !x.is_zero()) {
            if s.mul_ref(x).is_zero() || x.mul_ref(s).is_zero() {
                return bad("member is a zero divisor".into());
            }
        }
    }
    Ok(())
}

/// `a·t⁻¹` with `t ∈ T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreFraction<E> {
    num: E,
    den: E,
}

impl<E: RingElement> OreFraction<E> {
    pub fn new<S: OreSet<Elem = E>>(set: &S, num: E, den: E) -> Result<Self> {
        if !set.contains(&den) {
            return Err(Error::InvalidOreSet(format!("denominator {den:?} is not in {}", set.describe())));
        }
        Ok(Self { num, den })
    }

    pub fn from_element<S: OreSet<Elem = E>>(set: &S, a: E) -> Self {
        Self { num: a, den: set.one() }
    }

    pub fn num(&self) -> &E {
        &self.num
    }

    pub fn den(&self) -> &E {
        &self.den
    }
}

/// `(a, t) ≡ (b, s)` iff `a·u = b·v` for some `u, v` with `t·u = s·v ∈ T`.
/// For commutative sets this is `a·s = b·t`. Otherwise `t·u = s·v` with
/// `u ∈ T` comes from the Ore pair of `(t, s)`; as members are non-zero
/// divisors the verdict does not depend on that choice.
pub fn ore_eq<S: OreSet>(set: &S, f: &OreFraction<S::Elem>, g: &OreFraction<S::Elem>) -> Result<bool> {
    if set.is_commutative() {
        return Ok(f.num.mul_ref(&g.den) == g.num.mul_ref(&f.den));
    }
    let (v, u) = set.ore_pair(&f.den, &g.den)?;
    Ok(f.num.mul_ref(&u) == g.num.mul_ref(&v))
}

/// `a t⁻¹ + b s⁻¹ = (a u + b v)(t u)⁻¹` where `t u = s v`.
pub fn ore_add<S: OreSet>(set: &S, f: &OreFraction<S::Elem>, g: &OreFraction<S::Elem>) -> Result<OreFraction<S::Elem>> {
    let (v, u) = set.ore_pair(&f.den, &g.den)?;
    let num = f.num.mul_ref(&u).add_ref(&g.num.mul_ref(&v));
    let (num, den) = set.simplify(num, f.den.mul_ref(&u));
    Ok(OreFraction { num, den })
}

/// `a t⁻¹ · b s⁻¹ = a b' (s t')⁻¹` where `b t' = t b'`.
pub fn ore_mul<S: OreSet>(set: &S, f: &OreFraction<S::Elem>, g: &OreFraction<S::Elem>) -> Result<OreFraction<S::Elem>> {
    let (b2, t2) = set.ore_pair(&g.num, &f.den)?;
    let (num, den) = set.simplify(f.num.mul_ref(&b2), g.den.mul_ref(&t2));
    Ok(OreFraction { num, den })
}

pub fn ore_neg<S: OreSet>(f: &OreFraction<S::Elem>) -> OreFraction<S::Elem> {
    OreFraction { num: f.num.neg_ref(), den: f.den.clone() }
}
