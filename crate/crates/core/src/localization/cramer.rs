use crate::dimension::{Certainty, DimensionEngine};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::group_ring::GroupRingMatrix;
use crate::scalars::linalg::{determinant_laurent, is_triangular};
use crate::scalars::{LaurentPoly, Matrix, RationalFunction, RingElement};

/// Whether a square Laurent matrix becomes invertible over the
/// rational-function field, i.e. has nonzero determinant.
pub fn sigma_member_laurent(a: &Matrix<LaurentPoly>, nvars: usize) -> Result<bool> {
    // the Laurent ring is a domain
    if a.is_square() && is_triangular(a) {
        return Ok((0..a.rows()).all(|i| !a.get(i, i).is_zero()));
    }
    Ok(!determinant_laurent(a, nvars)?.is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaVerdict {
    pub member: bool,
    pub certainty: Certainty,
}

/// Σ-membership for a square group-ring matrix: exact for ℤⁿ (nonzero
/// determinant); for other groups, full rank under the engine's rank
/// backend, inheriting its certainty.
pub fn sigma_member(a: &GroupRingMatrix, engine: &DimensionEngine) -> Result<SigmaVerdict> {
    let (rows, cols) = a.shape();
    if rows != cols {
        return Err(Error::NonSquare { rows, cols });
    }
    if let Group::FreeAbelian(z) = a.group() {
        let member = sigma_member_laurent(&a.to_laurent()?, z.rank())?;
        return Ok(SigmaVerdict { member, certainty: Certainty::Exact });
    }
    let r = engine.rank_gamma(a)?;
    Ok(SigmaVerdict { member: *r.value() == crate::scalars::rational(rows as i64, 1), certainty: r.certainty() })
}

/// Witness for `s·(1 ⊕ a)·[[1, x], [0, 1]] = b` with `s ∈ Σ` and `s, b`
/// over the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CramerWitness {
    pub nvars: usize,
    pub a: Matrix<RationalFunction>,
    pub s: Matrix<LaurentPoly>,
    pub x: Matrix<RationalFunction>,
    pub b: Matrix<LaurentPoly>,
}

fn lift(m: &Matrix<LaurentPoly>) -> Matrix<RationalFunction> {
    m.map(|p| RationalFunction::from_poly(p.clone()))
}

impl CramerWitness {
    /// `1 ⊕ a`.
    pub fn extended(&self) -> Matrix<RationalFunction> {
        let one = RationalFunction::one(self.nvars);
        let unit = Matrix::identity_like(&one, 1);
        unit.block_diag(&self.a, &one)
    }

    /// Recomputes the defining identity and the determinant of `s`.
    pub fn verify(&self) -> Result<()> {
        let one = RationalFunction::one(self.nvars);
        let q = self.a.cols();
        if self.x.shape() != (1, q) {
            return Err(Error::ShapeMismatch(format!("x must be 1x{q}")));
        }
        let shear = Matrix::from_fn(q + 1, q + 1, |i, j| match (i, j) {
            _ if i == j => one.clone(),
            (0, j) => self.x.get(0, j - 1).clone(),
            _ => one.zero_like(),
        });
        let lhs = lift(&self.s).mul(&self.extended(), &one)?.mul(&shear, &one)?;
        if lhs != lift(&self.b) {
            return Err(Error::VerificationFailed("s·(1⊕a)·(1 x; 0 1) differs from b".into()));
        }
        if !sigma_member_laurent(&self.s, self.nvars)? {
            return Err(Error::VerificationFailed("s is singular".into()));
        }
        Ok(())
    }
}

/// Canonical witness: `x = 0`, `s = diag(1, d₁, …, d_p)` with `dᵢ` the
/// product of the denominators in row `i`, and `b = s·(1 ⊕ a)`. Verified
/// before returning.
pub fn cramer_factorize(a: &Matrix<RationalFunction>) -> Result<CramerWitness> {
    let nvars = a
        .iter()
        .next()
        .map(RationalFunction::nvars)
        .ok_or_else(|| Error::ShapeMismatch("empty matrix".into()))?;
    let (p, q) = a.shape();
    let unit = LaurentPoly::one(nvars);
    let zero = LaurentPoly::zero(nvars);
    let mut s = Matrix::zeros_like(&zero, p + 1, p + 1);
    let mut b = Matrix::zeros_like(&zero, p + 1, q + 1);
    s[(0, 0)] = unit.clone();
    b[(0, 0)] = unit.clone();
    for i in 0..p {
        let row = a.row(i);
        s[(i + 1, i + 1)] = row.iter().fold(unit.clone(), |acc, f| &acc * f.denom());
        for j in 0..q {
            // dᵢ·(n/dⱼ) with the j-th denominator left out
            let others = row.iter().enumerate().filter(|&(k, _)| k != j).fold(unit.clone(), |acc, (_, f)| &acc * f.denom());
            b[(i + 1, j + 1)] = row[j].numer() * &others;
        }
    }
    let x = Matrix::zeros_like(&RationalFunction::zero(nvars), 1, q);
    let w = CramerWitness { nvars, a: a.clone(), s, x, b };
    w.verify()?;
    Ok(w)
}

/// `f = p/q` as an entry of the inverse of a matrix over the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linearization {
    pub f: RationalFunction,
    /// `[[q, −p], [0, 1]]`.
    pub matrix: Matrix<LaurentPoly>,
    /// `[[1/q, p/q], [0, 1]]`; `f` sits at `(0, 1)`.
    pub inverse: Matrix<RationalFunction>,
}

impl Linearization {
    pub fn entry(&self) -> &RationalFunction {
        self.inverse.get(0, 1)
    }
}

pub fn rational_closure_linearize(f: &RationalFunction) -> Result<Linearization> {
    let n = f.nvars();
    let (p, q) = (f.numer().clone(), f.denom().clone());
    let one = LaurentPoly::one(n);
    let zero = LaurentPoly::zero(n);
    let matrix = Matrix::new(2, 2, vec![q.clone(), -&p, zero.clone(), one.clone()]);
    let rf = |x: LaurentPoly| RationalFunction::from_poly(x);
    let q_inv = RationalFunction::new(one.clone(), q.clone())?;
    let inverse = Matrix::new(2, 2, vec![q_inv, f.clone(), rf(zero), rf(one)]);
    if !sigma_member_laurent(&matrix, n)? {
        return Err(Error::VerificationFailed("linearization matrix is singular".into()));
    }
    let unit = RationalFunction::one(n);
    let id = Matrix::identity_like(&unit, 2);
    let lifted = lift(&matrix);
    if lifted.mul(&inverse, &unit)? != id || inverse.mul(&lifted, &unit)? != id {
        return Err(Error::VerificationFailed("claimed inverse is wrong".into()));
    }
    Ok(Linearization { f: f.clone(), matrix, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> LaurentPoly {
        LaurentPoly::var(1, 0)
    }

    fn rf(n: LaurentPoly, d: LaurentPoly) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    #[test]
    fn cramer_examples() {
        let one = LaurentPoly::one(1);
        let zm1 = &z() - &one;
        let w = cramer_factorize(&Matrix::new(1, 1, vec![rf(one.clone(), zm1.clone())])).unwrap();
        assert_eq!(w.s, Matrix::new(2, 2, vec![one.clone(), LaurentPoly::zero(1), LaurentPoly::zero(1), zm1.clone()]));
        assert_eq!(w.b, Matrix::identity_like(&one, 2));

        let w = cramer_factorize(&Matrix::new(1, 1, vec![RationalFunction::from_poly(z())])).unwrap();
        assert_eq!(w.s, Matrix::identity_like(&one, 2));
        assert_eq!(w.b.get(1, 1), &z());

        let zero = RationalFunction::zero(1);
        let a = Matrix::new(2, 2, vec![rf(one.clone(), z()), RationalFunction::one(1), zero, rf(one.clone(), zm1.clone())]);
        let w = cramer_factorize(&a).unwrap();
        let diag: Vec<LaurentPoly> = (0..3).map(|i| w.s.get(i, i).clone()).collect();
        assert_eq!(diag, vec![one, z(), zm1]);
    }

    #[test]
    fn linearize_examples() {
        let one = LaurentPoly::one(1);
        let zm1 = &z() - &one;
        let l = rational_closure_linearize(&rf(one.clone(), zm1.clone())).unwrap();
        assert_eq!(l.matrix, Matrix::new(2, 2, vec![zm1.clone(), -&one, LaurentPoly::zero(1), one.clone()]));
        assert_eq!(l.inverse.get(0, 0), &rf(one.clone(), zm1.clone()));
        assert_eq!(l.entry(), &rf(one.clone(), zm1.clone()));

        let l = rational_closure_linearize(&RationalFunction::from_poly(z())).unwrap();
        assert_eq!(l.matrix.get(0, 0), &one);
        assert_eq!(l.matrix.get(0, 1), &-&z());

        let l = rational_closure_linearize(&rf(&z() + &one, zm1.clone())).unwrap();
        assert_eq!(l.matrix.get(0, 1), &-&(&z() + &one));
    }

    #[test]
    fn sigma_examples() {
        let one = LaurentPoly::one(1);
        let zm1 = &z() - &one;
        assert!(sigma_member_laurent(&Matrix::new(1, 1, vec![zm1.clone()]), 1).unwrap());
        let zero = LaurentPoly::zero(1);
        assert!(!sigma_member_laurent(&Matrix::new(2, 2, vec![zm1, zero.clone(), zero.clone(), zero]), 1).unwrap());
        let (z2, w2) = (LaurentPoly::var(2, 0), LaurentPoly::var(2, 1));
        let o2 = LaurentPoly::one(2);
        assert!(sigma_member_laurent(&Matrix::new(2, 2, vec![o2.clone(), z2, w2, o2]), 2).unwrap());
        assert!(matches!(
            sigma_member_laurent(&Matrix::new(1, 2, vec![one.clone(), one]), 1),
            Err(Error::NonSquare { .. })
        ));
    }
}
