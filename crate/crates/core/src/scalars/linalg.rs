//! Exact elimination: Gauss–Jordan over the Gaussian rationals and
//! fraction-free (Bareiss) elimination over Laurent polynomial rings.

use num_traits::{One, Zero};

use super::{GaussianRational, LaurentPoly, Matrix, RationalFunction};
use crate::error::{Error, Result};

/// Reduced row echelon form over ℚ(i) together with the pivot columns.
/// Pivots are chosen as the first nonzero entry in each column.
pub fn rref(m: &Matrix<GaussianRational>) -> (Matrix<GaussianRational>, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<GaussianRational>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][c].inv().expect("pivot is nonzero");
        let support: Vec<usize> = (c..cols).filter(|&j| !a[rank][j].is_zero()).collect();
        for &j in &support {
            a[rank][j] = &a[rank][j] * &inv;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                let t = &f * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    (Matrix::new(rows, cols, a.into_iter().flatten().collect()), pivots)
}

pub fn rank_gaussian(m: &Matrix<GaussianRational>) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel `{v : m·v = 0}`; empty iff `m` is injective.
pub fn kernel_basis(m: &Matrix<GaussianRational>) -> Vec<Vec<GaussianRational>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![GaussianRational::zero(); cols];
        v[free] = GaussianRational::one();
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(k, free);
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse of a square matrix over ℚ(i), or `None` if singular.
pub fn inverse_gaussian(m: &Matrix<GaussianRational>) -> Option<Matrix<GaussianRational>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

/// Fraction-free forward elimination. Returns the echelon form, the pivot
/// columns and the number of row swaps. Pivot rule: first nonzero entry in
/// row order, column by column. Every division is exact by Sylvester's
/// identity (entries are minors of the input).
fn bareiss(m: &Matrix<LaurentPoly>, nvars: usize) -> (Matrix<LaurentPoly>, Vec<usize>, usize) {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut prev = LaurentPoly::one(nvars);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[(r, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap_rows(p, rank);
            swaps += 1;
        }
        let piv = a[(rank, c)].clone();
        for i in rank + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let mut t = &piv * &a[(i, j)];
                if !lead.is_zero() && !a[(rank, j)].is_zero() {
                    t = &t - &(&lead * &a[(rank, j)]);
                }
                a[(i, j)] = if prev.is_one() {
                    t
                } else {
                    t.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
            a[(i, c)] = LaurentPoly::zero(nvars);
        }
        prev = piv;
        pivots.push(c);
        rank += 1;
    }
    (a, pivots, swaps)
}

fn nvars_of(m: &Matrix<LaurentPoly>) -> usize {
    m.iter().next().map_or(0, |p| p.nvars())
}

/// Rank over the fraction field of a Laurent polynomial ring.
pub fn rank_laurent(m: &Matrix<LaurentPoly>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    // eliminate along the shorter side
    let m = if m.rows() > m.cols() { m.transpose() } else { m.clone() };
    bareiss(&m, nvars_of(&m)).1.len()
}

pub fn determinant_laurent(m: &Matrix<LaurentPoly>, nvars: usize) -> Result<LaurentPoly> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(LaurentPoly::one(nvars));
    }
    if is_triangular(m) {
        return Ok((0..n).fold(LaurentPoly::one(nvars), |acc, i| &acc * m.get(i, i)));
    }
    let (a, pivots, swaps) = bareiss(m, nvars);
    if pivots.len() < n {
        return Ok(LaurentPoly::zero(nvars));
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if swaps % 2 == 1 { -d } else { d })
}

pub(crate) fn is_triangular(m: &Matrix<LaurentPoly>) -> bool {
    let n = m.rows();
    let zero_where = |below: bool| (0..n).all(|i| (0..n).all(|j| (if below { i > j } else { i < j }) <= m.get(i, j).is_zero()));
    m.is_square() && (zero_where(true) || zero_where(false))
}

/// Multiplies each row by the product of its distinct non-unit
/// denominators, producing a Laurent polynomial matrix with the same row
/// space over the function field.
pub fn clear_row_denominators(m: &Matrix<RationalFunction>) -> Matrix<LaurentPoly> {
    let nvars = m.iter().next().map_or(0, |f| f.nvars());
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        let row = m.row(i);
        let mut dens: Vec<&LaurentPoly> = Vec::new();
        for f in row {
            let d = f.denom();
            if !f.is_zero() && !d.is_monomial() && !dens.contains(&d) {
                dens.push(d);
            }
        }
        for f in row {
            if f.is_zero() {
                data.push(LaurentPoly::zero(nvars));
                continue;
            }
            let d = f.denom();
            let mut acc = f.numer().clone();
            if d.is_monomial() {
                let (e, c) = d.leading_term().expect("nonzero");
                let inv_e: Vec<i64> = e.iter().map(|x| -x).collect();
                acc = acc.shift(&inv_e).scale(&c.inv().expect("nonzero"));
            }
            let mut skipped = false;
            for &other in &dens {
                if !skipped && other == d {
                    skipped = true;
                    continue;
                }
                acc = &acc * other;
            }
            data.push(acc);
        }
    }
    Matrix::new(m.rows(), m.cols(), data)
}

/// Exact rank of a matrix of rational functions over the rational function
/// field. Deterministic; the empty matrix has rank 0.
pub fn rank_exact(m: &Matrix<RationalFunction>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    rank_laurent(&clear_row_denominators(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn gm(rows: Vec<Vec<i64>>) -> Matrix<GaussianRational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect()).unwrap()
    }

    fn is_multiple(v: &[GaussianRational], w: &[GaussianRational]) -> bool {
        let k = v.iter().position(|x| !x.is_zero()).unwrap();
        let f = &w[k] / &v[k];
        v.iter().zip(w).all(|(a, b)| &(a * &f) == b)
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&gm(vec![vec![1, 0], vec![0, 1]])).is_empty());
        let k = kernel_basis(&gm(vec![vec![1, 1]]));
        assert_eq!(k.len(), 1);
        assert!(is_multiple(&k[0], &[q(1), q(-1)]));
        let k = kernel_basis(&gm(vec![vec![1, 1], vec![1, 1]]));
        assert_eq!(k.len(), 1);
        assert!(is_multiple(&k[0], &[q(1), q(-1)]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = gm(vec![vec![2, 1], vec![7, 4]]);
        let inv = inverse_gaussian(&m).unwrap();
        assert_eq!(m.mul(&inv, &q(0)).unwrap(), Matrix::identity_like(&q(0), 2));
        assert!(inverse_gaussian(&gm(vec![vec![1, 2], vec![2, 4]])).is_none());
    }

    fn z() -> LaurentPoly {
        LaurentPoly::var(2, 0)
    }
    fn w() -> LaurentPoly {
        LaurentPoly::var(2, 1)
    }
    fn rf(p: LaurentPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    #[test]
    fn rank_examples() {
        let one = LaurentPoly::one(2);
        let a = Matrix::new(1, 1, vec![rf(&z() - &one)]);
        assert_eq!(rank_exact(&a), 1);
        let b = Matrix::new(1, 2, vec![rf(&z() - &one), rf(&w() - &one)]);
        assert_eq!(rank_exact(&b), 1);
        let c = Matrix::new(1, 1, vec![RationalFunction::zero(2)]);
        assert_eq!(rank_exact(&c), 0);
        assert_eq!(rank_exact(&Matrix::<RationalFunction>::new(0, 3, vec![])), 0);
    }

    #[test]
    fn rank_deficient_polynomial_matrix() {
        // rows (f, g, fg) and (zf, zg, zfg) are proportional
        let one = LaurentPoly::one(2);
        let f = &z() - &one;
        let g = &w() + &z();
        let r1 = vec![f.clone(), g.clone(), &f * &g];
        let r2: Vec<LaurentPoly> = r1.iter().map(|p| p * &z()).collect();
        let r3 = vec![one.clone(), LaurentPoly::zero(2), w()];
        let m = Matrix::from_rows(vec![r1, r2, r3]).unwrap();
        assert_eq!(rank_laurent(&m), 2);
        assert!(determinant_laurent(&m, 2).unwrap().is_zero());
    }

    #[test]
    fn determinant_of_two_by_two() {
        let one = LaurentPoly::one(2);
        let m = Matrix::from_rows(vec![vec![one.clone(), z()], vec![w(), one.clone()]]).unwrap();
        let det = determinant_laurent(&m, 2).unwrap();
        assert_eq!(det, &one - &(&z() * &w()));
        let swapped = m.permute_rows(&[1, 0]);
        assert_eq!(determinant_laurent(&swapped, 2).unwrap(), -&det);
    }

    #[test]
    fn triangular_determinant_agrees_with_elimination() {
        let one = LaurentPoly::one(2);
        let zero = LaurentPoly::zero(2);
        let a = &z() + &one;
        let b = &w() - &z();
        let t = Matrix::from_rows(vec![
            vec![a.clone(), w(), one.clone()],
            vec![zero.clone(), b.clone(), z()],
            vec![zero.clone(), zero.clone(), &a * &b],
        ])
        .unwrap();
        assert!(is_triangular(&t) && is_triangular(&t.transpose()));
        let det = determinant_laurent(&t, 2).unwrap();
        assert_eq!(det, &(&a * &b) * &(&a * &b));
        // a row swap leaves the triangular shortcut and goes through Bareiss
        let swapped = t.permute_rows(&[1, 0, 2]);
        assert!(!is_triangular(&swapped));
        assert_eq!(determinant_laurent(&swapped, 2).unwrap(), -&det);
    }

    #[test]
    fn denominators_cleared_per_row() {
        let one = LaurentPoly::one(2);
        let zm1 = &z() - &one;
        let a = RationalFunction::new(one.clone(), zm1.clone()).unwrap();
        let b = RationalFunction::new(w(), z()).unwrap();
        let m = Matrix::new(1, 2, vec![a, b]);
        let c = clear_row_denominators(&m);
        assert_eq!(c.get(0, 0), &one);
        assert_eq!(c.get(0, 1), &(&w() * &zm1).shift(&[-1, 0]));
    }
}
