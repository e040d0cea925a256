use super::PresentedModule;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};

/// Induction `M ↦ ℂΓ ⊗_ℂH M` along an injective homomorphism `H → Γ`:
/// the presentation matrix is pushed forward entrywise.
pub fn induce(m: &PresentedModule, target: &Group, embed: impl Fn(&GroupElement) -> GroupElement) -> Result<PresentedModule> {
    Ok(PresentedModule::new(m.matrix().map_group(target, embed)?))
}

/// The base `N` of a crossed product together with `n ↦ (n, e)`.
pub fn base_inclusion(gamma: &Group) -> Result<(Group, impl Fn(&GroupElement) -> GroupElement)> {
    let Group::Crossed(data) = gamma else {
        return Err(Error::UnsupportedGroup(format!("{gamma} is not a crossed product")));
    };
    let base = data.base().clone();
    let e = data.acting_identity();
    Ok((base, move |n: &GroupElement| GroupElement::Pair(Box::new(n.clone()), Box::new(e.clone()))))
}

/// A finite acting group `H` together with `h ↦ (e, h)`. The section is a
/// homomorphism only when the cocycle is trivial, which is required.
pub fn section_inclusion(gamma: &Group) -> Result<(Group, impl Fn(&GroupElement) -> GroupElement)> {
    let Group::Crossed(data) = gamma else {
        return Err(Error::UnsupportedGroup(format!("{gamma} is not a crossed product")));
    };
    let Some(h) = data.acting_finite() else {
        return Err(Error::UnsupportedGroup(format!("{gamma} has infinite acting group")));
    };
    let base_id = data.base().identity();
    let trivial = (0..h.order()).all(|a| (0..h.order()).all(|b| *data.tau(a, b) == base_id));
    if !trivial {
        return Err(Error::InvalidGroupData("section is not a homomorphism: cocycle is nontrivial".into()));
    }
    let acting = Group::Finite(h.clone());
    Ok((acting, move |k: &GroupElement| GroupElement::Pair(Box::new(base_id.clone()), Box::new(k.clone()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::dim_fp;
    use crate::group_ring::{GroupRingElement, GroupRingMatrix};
    use crate::scalars::rational;

    #[test]
    fn trivial_rep_of_reflection_induces_to_half() {
        let d = Group::infinite_dihedral();
        let (h, embed) = section_inclusion(&d).unwrap();
        let s = GroupRingElement::basis(&h, h.generators()[0].1.clone());
        let a = GroupRingMatrix::scalar(&GroupRingElement::one(&h) - &s);
        let m = PresentedModule::new(a);
        assert_eq!(dim_fp(&m).unwrap().value(), &rational(1, 2));
        let induced = induce(&m, &d, embed).unwrap();
        assert_eq!(dim_fp(&induced).unwrap().value(), &rational(1, 2));
    }

    #[test]
    fn base_induction_preserves_dimension() {
        let d = Group::infinite_dihedral();
        let (z, embed) = base_inclusion(&d).unwrap();
        let zg = GroupRingElement::basis(&z, z.generators()[0].1.clone());
        let m = PresentedModule::new(GroupRingMatrix::scalar(&zg - &GroupRingElement::one(&z)));
        let induced = induce(&m, &d, embed).unwrap();
        assert_eq!(dim_fp(&induced).unwrap().value(), dim_fp(&m).unwrap().value());
    }
}
