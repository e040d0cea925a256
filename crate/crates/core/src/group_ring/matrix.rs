use std::fmt;

use super::GroupRingElement;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::scalars::{GaussianRational, LaurentPoly, Matrix};

/// Matrix over the group ring of a fixed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    group: Group,
    entries: Matrix<GroupRingElement>,
}

impl GroupRingMatrix {
    pub fn new(group: &Group, entries: Matrix<GroupRingElement>) -> Result<Self> {
        if entries.iter().any(|e| e.group() != group) {
            return Err(Error::MismatchedGroups);
        }
        Ok(Self { group: group.clone(), entries })
    }

    /// Builds from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(group: &Group, rows: Vec<Vec<GroupRingElement>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("every row must have {cols} entries")));
        }
        let n = rows.len();
        Self::new(group, Matrix::new(n, cols, rows.into_iter().flatten().collect()))
    }

    pub fn zeros(group: &Group, rows: usize, cols: usize) -> Self {
        Self { group: group.clone(), entries: Matrix::zeros_like(&GroupRingElement::zero(group), rows, cols) }
    }

    pub fn identity(group: &Group, n: usize) -> Self {
        Self { group: group.clone(), entries: Matrix::identity_like(&GroupRingElement::zero(group), n) }
    }

    /// 1×1 matrix.
    pub fn scalar(a: GroupRingElement) -> Self {
        Self { group: a.group().clone(), entries: Matrix::new(1, 1, vec![a]) }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn entries(&self) -> &Matrix<GroupRingElement> {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.entries.shape()
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        self.entries.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    fn zero(&self) -> GroupRingElement {
        GroupRingElement::zero(&self.group)
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::MismatchedGroups)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        Ok(Self { group: self.group.clone(), entries: self.entries.mul(&other.entries, &self.zero())? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        Ok(Self { group: self.group.clone(), entries: self.entries.add(&other.entries)? })
    }

    pub fn neg(&self) -> Self {
        Self { group: self.group.clone(), entries: self.entries.map(|e| -e) }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Conjugate transpose with respect to the group-ring involution.
    pub fn star(&self) -> Self {
        Self { group: self.group.clone(), entries: self.entries.transpose().map(GroupRingElement::star) }
    }

    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        if self.rows() != other.rows() {
            return Err(Error::ShapeMismatch(format!("hconcat of {} and {} rows", self.rows(), other.rows())));
        }
        let (a, b) = (self, other);
        Ok(Self {
            group: self.group.clone(),
            entries: Matrix::from_fn(a.rows(), a.cols() + b.cols(), |i, j| {
                if j < a.cols() { a.get(i, j).clone() } else { b.get(i, j - a.cols()).clone() }
            }),
        })
    }

    pub fn vconcat(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        if self.cols() != other.cols() {
            return Err(Error::ShapeMismatch(format!("vconcat of {} and {} columns", self.cols(), other.cols())));
        }
        let (a, b) = (self, other);
        Ok(Self {
            group: self.group.clone(),
            entries: Matrix::from_fn(a.rows() + b.rows(), a.cols(), |i, j| {
                if i < a.rows() { a.get(i, j).clone() } else { b.get(i - a.rows(), j).clone() }
            }),
        })
    }

    pub fn block_diag(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        Ok(Self { group: self.group.clone(), entries: self.entries.block_diag(&other.entries, &self.zero()) })
    }

    /// `Σ_i tr(a_ii)`; requires a square matrix.
    pub fn trace_sum(&self) -> Result<GaussianRational> {
        if !self.entries.is_square() {
            return Err(Error::NonSquare { rows: self.rows(), cols: self.cols() });
        }
        let mut acc = GaussianRational::from_int(0);
        for i in 0..self.rows() {
            acc += &self.get(i, i).trace();
        }
        Ok(acc)
    }

    /// Entrywise image along a group homomorphism.
    pub fn map_group(&self, target: &Group, f: impl Fn(&GroupElement) -> GroupElement) -> Result<Self> {
        let mut data = Vec::with_capacity(self.rows() * self.cols());
        for e in self.entries.iter() {
            data.push(e.map_group(target, &f)?);
        }
        Ok(Self { group: target.clone(), entries: Matrix::new(self.rows(), self.cols(), data) })
    }

    /// The same matrix over Laurent polynomials (ℤⁿ only).
    pub fn to_laurent(&self) -> Result<Matrix<LaurentPoly>> {
        let data = self.entries.iter().map(GroupRingElement::to_laurent).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::new(self.rows(), self.cols(), data))
    }

    pub fn from_laurent(group: &Group, m: &Matrix<LaurentPoly>) -> Result<Self> {
        let data = m.iter().map(|p| GroupRingElement::from_laurent(group, p)).collect::<Result<Vec<_>>>()?;
        Ok(Self { group: group.clone(), entries: Matrix::new(m.rows(), m.cols(), data) })
    }

    /// Scalar matrix for a group ring over the trivial group.
    pub fn to_scalars(&self) -> Result<Matrix<GaussianRational>> {
        if self.group.order() != Some(1) {
            return Err(Error::UnsupportedGroup(format!("{} is not trivial", self.group)));
        }
        Ok(self.entries.map(GroupRingElement::trace))
    }
}

impl fmt::Display for GroupRingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows() {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = self.entries.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
