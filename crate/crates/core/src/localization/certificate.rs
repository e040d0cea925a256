use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, Letter};
use crate::group_ring::GroupRingElement;
use crate::scalars::linalg::kernel_basis;
use crate::scalars::{GaussianRational, Matrix};

/// Result of an exact kernel computation for `(u, v) ↦ p·u + q·v`
/// restricted to `u, v` supported in a ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub radius: usize,
    /// `2·|ball(radius)|`.
    pub domain_dim: usize,
    /// Number of group elements the image can reach.
    pub codomain_dim: usize,
    /// Kernel basis, as pairs `(u, v)`.
    pub kernel: Vec<(GroupRingElement, GroupRingElement)>,
}

impl KernelReport {
    pub fn is_injective(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Kernel of `(u, v) ↦ p·u + q·v` on pairs supported in `ball(radius)` of
/// a free group.
pub fn pair_map_kernel(p: &GroupRingElement, q: &GroupRingElement, radius: usize) -> Result<KernelReport> {
    let Group::Free(f) = p.group() else {
        return Err(Error::UnsupportedGroup(format!("{} is not a free group", p.group())));
    };
    if q.group() != p.group() {
        return Err(Error::MismatchedGroups);
    }
    let group = p.group();
    let ball: Vec<GroupElement> = f.ball(radius).into_iter().map(GroupElement::Word).collect();
    let mut rows: BTreeMap<GroupElement, usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, GaussianRational)>> = Vec::with_capacity(2 * ball.len());
    for factor in [p, q] {
        for w in &ball {
            let image = factor.checked_mul(&GroupRingElement::basis(group, w.clone()))?;
            let mut col = Vec::with_capacity(image.support_len());
            for (g, c) in image.terms() {
                let next = rows.len();
                let idx = *rows.entry(g.clone()).or_insert(next);
                col.push((idx, c.clone()));
            }
            columns.push(col);
        }
    }
    let zero = GaussianRational::from_int(0);
    let mut m = Matrix::zeros_like(&zero, rows.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col {
            m[(*i, j)] = c.clone();
        }
    }
    let n = ball.len();
    let kernel = kernel_basis(&m)
        .into_iter()
        .map(|v| {
            let split = |part: &[GaussianRational]| {
                GroupRingElement::from_terms(group, ball.iter().cloned().zip(part.iter().cloned()))
                    .expect("ball elements belong to the group")
            };
            (split(&v[..n]), split(&v[n..]))
        })
        .collect();
    Ok(KernelReport { radius, domain_dim: 2 * n, codomain_dim: rows.len(), kernel })
}

/// Verdict on `(u, v) ↦ (x−1)·u + (y−1)·v` over the free group on `x, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OreFailureCertificate {
    pub radius: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub kernel_dim: usize,
    /// True iff the kernel on `ball(radius)` is zero.
    pub certified: bool,
}

/// Exact check that `(x−1)·u + (y−1)·v = 0` forces `u = v = 0` for `u, v`
/// supported in `ball(radius)`.
pub fn ore_failure_certificate(radius: usize) -> OreFailureCertificate {
    let g = Group::free(2);
    let one = GroupRingElement::one(&g);
    let letter = |l: Letter| GroupRingElement::basis(&g, GroupElement::Word(vec![l]));
    let report = pair_map_kernel(&(&letter(1) - &one), &(&letter(2) - &one), radius).expect("free group of rank 2");
    OreFailureCertificate {
        radius,
        domain_dim: report.domain_dim,
        codomain_dim: report.codomain_dim,
        kernel_dim: report.kernel.len(),
        certified: report.is_injective(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_radii_certified() {
        for r in 0..=2 {
            let c = ore_failure_certificate(r);
            assert!(c.certified, "radius {r}");
            let f = crate::group::FreeGroup::new(2);
            assert_eq!(c.domain_dim, 2 * f.ball_size(r));
            assert!(c.codomain_dim <= f.ball_size(r + 1));
        }
    }

    #[test]
    fn degenerate_pair_has_kernel() {
        let g = Group::free(2);
        let x = GroupRingElement::basis(&g, GroupElement::Word(vec![1]));
        let a = &x - &GroupRingElement::one(&g);
        let report = pair_map_kernel(&a, &a, 1).unwrap();
        assert!(!report.is_injective());
        let one = GroupRingElement::one(&g);
        assert_eq!(report.kernel.len(), 5);
        for (u, v) in &report.kernel {
            assert!((&(&a * u) + &(&a * v)).is_zero());
        }
        // a multiple of (1, -1)
        assert!(report.kernel.iter().any(|(u, v)| *v == one && *u == -&one));
    }
}
