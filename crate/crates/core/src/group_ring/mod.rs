//! The group ring ℚ(i)Γ, crossed products `R∗H`, matrices over them, the
//! trace and the restriction to a finite-index base.

mod crossed;
mod element;
mod matrix;
mod regular;

pub use crossed::{act_on_ring, CrossedProductElement};
pub use element::GroupRingElement;
pub use matrix::GroupRingMatrix;
pub use regular::{regular_representation, regular_representation_matrix, restriction_base, restriction_index};

use crate::dimension::{Backend, DimensionValue};
use crate::error::{Error, Result};
use crate::scalars::GaussianRational;

/// `tr(ab) == tr(ba)`.
pub fn trace_property_check(a: &GroupRingElement, b: &GroupRingElement) -> Result<bool> {
    Ok(a.checked_mul(b)?.trace() == b.checked_mul(a)?.trace())
}

/// Γ-dimension of the projective module `ℂΓⁿ·p` for an idempotent `p`:
/// the sum of the traces of the diagonal entries.
pub fn dim_from_idempotent(p: &GroupRingMatrix) -> Result<DimensionValue> {
    let (rows, cols) = p.shape();
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    if p.mul(p)? != *p {
        return Err(Error::NotIdempotent);
    }
    let t: GaussianRational = p.trace_sum()?;
    if !t.is_real() {
        return Err(Error::NonRealTrace(t.to_string()));
    }
    Ok(DimensionValue::exact(t.re().clone(), Backend::Trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, Group};
    use crate::scalars::rational;

    fn c2() -> (Group, GroupRingElement) {
        let g = Group::finite(FiniteGroup::cyclic(2));
        let gen = GroupRingElement::basis(&g, g.generators()[0].1.clone());
        (g, gen)
    }

    #[test]
    fn idempotent_dimensions() {
        let (g, s) = c2();
        let half = GaussianRational::from_frac(1, 2);
        let p = (&GroupRingElement::one(&g) + &s).scale(&half);
        let d = dim_from_idempotent(&GroupRingMatrix::scalar(p)).unwrap();
        assert_eq!(d.value(), &rational(1, 2));
        let id = dim_from_idempotent(&GroupRingMatrix::identity(&g, 1)).unwrap();
        assert_eq!(id.value(), &rational(1, 1));
        let z = dim_from_idempotent(&GroupRingMatrix::zeros(&g, 1, 1)).unwrap();
        assert_eq!(z.value(), &rational(0, 1));
    }

    #[test]
    fn idempotent_errors() {
        let (g, s) = c2();
        let not_idem = GroupRingMatrix::scalar(&GroupRingElement::one(&g) + &s);
        assert_eq!(dim_from_idempotent(&not_idem).unwrap_err(), Error::NotIdempotent);
        assert!(matches!(dim_from_idempotent(&GroupRingMatrix::zeros(&g, 1, 2)), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn trace_property_small() {
        let (g, s) = c2();
        let a = &GroupRingElement::scalar(&g, GaussianRational::from_int(3)) + &s.scale(&GaussianRational::i());
        let b = &GroupRingElement::one(&g) - &s.scale(&GaussianRational::from_frac(2, 3));
        assert!(trace_property_check(&a, &b).unwrap());
    }
}
