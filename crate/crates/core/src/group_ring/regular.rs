use super::{CrossedProductElement, GroupRingElement, GroupRingMatrix};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::scalars::Matrix;

/// Finite-index inclusion `N ≤ Γ` used to restrict a Γ-matrix to the base.
enum View<'a> {
    /// Finite Γ over the trivial group.
    Finite(&'a crate::group::FiniteGroup),
    Crossed(&'a crate::group::CrossedProductData),
}

/// The base group over which [`regular_representation`] realizes matrices
/// of `group`: the trivial group for finite groups, the declared base for
/// crossed products with finite H.
pub fn restriction_base(group: &Group) -> Result<Group> {
    match group {
        Group::Finite(_) => Ok(Group::trivial()),
        Group::Crossed(c) if c.acting_finite().is_some() => Ok(c.base().clone()),
        _ => Err(Error::UnsupportedGroup(format!("{group} has no declared finite-index base"))),
    }
}

/// Index `|Γ : N|` of the restriction base.
pub fn restriction_index(group: &Group) -> Result<usize> {
    match group {
        Group::Finite(f) => Ok(f.order()),
        Group::Crossed(c) => c
            .acting_finite()
            .map(|h| h.order())
            .ok_or_else(|| Error::UnsupportedGroup(format!("{group} has infinite acting group"))),
        _ => Err(Error::UnsupportedGroup(format!("{group} has no declared finite-index base"))),
    }
}

/// Right multiplication by `a` on the free base module with basis μ(H),
/// in row-vector convention: entry `(j, jh)` collects `α_j(r_h)·τ(j, h)`.
/// Products are preserved: `ρ(ab) = ρ(a)ρ(b)`.
pub fn regular_representation(a: &GroupRingElement) -> Result<GroupRingMatrix> {
    regular_representation_matrix(&GroupRingMatrix::scalar(a.clone()))
}

/// Blockwise [`regular_representation`]: an `n×m` matrix becomes
/// `n|H| × m|H|` over the base.
pub fn regular_representation_matrix(a: &GroupRingMatrix) -> Result<GroupRingMatrix> {
    let group = a.group();
    let base = restriction_base(group)?;
    let k = restriction_index(group)?;
    let view = match group {
        Group::Finite(f) => View::Finite(f),
        Group::Crossed(c) => View::Crossed(c),
        _ => unreachable!(),
    };
    let zero = GroupRingElement::zero(&base);
    let mut out = Matrix::zeros_like(&zero, a.rows() * k, a.cols() * k);
    for i in 0..a.rows() {
        for l in 0..a.cols() {
            let entry = a.get(i, l);
            match view {
                View::Finite(f) => {
                    let id = base.identity();
                    for (g, c) in entry.terms() {
                        let GroupElement::Finite(h) = g else { unreachable!() };
                        for j in 0..k {
                            out[(i * k + j, l * k + f.mul(j, *h))].add_term(id.clone(), c);
                        }
                    }
                }
                View::Crossed(data) => {
                    let graded = CrossedProductElement::from_group_ring(entry)?;
                    for (h, r) in graded.terms() {
                        let GroupElement::Finite(hi) = h else { unreachable!() };
                        for j in 0..k {
                            let jg = GroupElement::Finite(j);
                            let twisted = super::act_on_ring(data, &jg, r);
                            let tau = GroupRingElement::basis(&base, data.tau(j, *hi).clone());
                            let col = data.acting_finite().expect("finite acting group").mul(j, *hi);
                            let cell = &mut out[(i * k + j, l * k + col)];
                            *cell = &*cell + &(&twisted * &tau);
                        }
                    }
                }
            }
        }
    }
    GroupRingMatrix::new(&base, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::scalars::{GaussianRational, LaurentPoly};

    #[test]
    fn cyclic_two() {
        let c2 = Group::finite(FiniteGroup::cyclic(2));
        let g = c2.generators()[0].1.clone();
        let a = &GroupRingElement::one(&c2) + &GroupRingElement::basis(&c2, g);
        let rho = regular_representation(&a).unwrap().to_scalars().unwrap();
        let one = GaussianRational::from_int(1);
        assert!(rho.iter().all(|x| *x == one));
        assert_eq!(rho.shape(), (2, 2));
    }

    #[test]
    fn dihedral_z_s() {
        let d = Group::infinite_dihedral();
        let gens = d.generators();
        let zs = GroupRingElement::basis(&d, d.multiply(&gens[0].1, &gens[1].1).unwrap());
        let rho = regular_representation(&zs).unwrap().to_laurent().unwrap();
        let z = LaurentPoly::var(1, 0);
        let z_inv = LaurentPoly::monomial(vec![-1], GaussianRational::from_int(1));
        // H = {e, s} with e at index 0
        assert!(rho.get(0, 0).is_zero() && rho.get(1, 1).is_zero());
        assert_eq!(rho.get(0, 1), &z);
        assert_eq!(rho.get(1, 0), &z_inv);
    }

    #[test]
    fn identity_goes_to_identity() {
        let d = Group::infinite_dihedral();
        let rho = regular_representation(&GroupRingElement::one(&d)).unwrap();
        assert_eq!(rho, GroupRingMatrix::identity(&Group::free_abelian(1), 2));
    }

    #[test]
    fn free_group_unsupported() {
        let f = Group::free(2);
        assert!(matches!(regular_representation(&GroupRingElement::one(&f)), Err(Error::UnsupportedGroup(_))));
    }
}
