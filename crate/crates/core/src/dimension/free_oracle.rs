use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Certainty;
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::group_ring::GroupRingMatrix;
use crate::scalars::linalg::{inverse_gaussian, rank_gaussian};
use crate::scalars::{rational, GaussianRational, Matrix, Rational};

/// Settings for probabilistic rank oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub seed: u64,
    /// Matrix sizes tried in order.
    pub ladder: Vec<usize>,
    /// Random evaluations per size; the maximal rank is kept.
    pub samples: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { seed: 0, ladder: vec![2, 4, 6, 8], samples: 3 }
    }
}

/// Estimates `rank_Γ` for matrices over free group rings.
pub trait FreeRankOracle: Send + Sync {
    fn rank(&self, a: &GroupRingMatrix, config: &OracleConfig) -> Result<(Rational, Certainty)>;
}

/// Default oracle: substitutes random invertible `d×d` Gaussian-rational
/// matrices for the generators and returns `rank(A(X))/d`, stopping once two
/// consecutive ladder sizes agree.
#[derive(Clone, Copy, Debug, Default)]
pub struct MatrixEvaluationOracle;

impl MatrixEvaluationOracle {
    fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> (Matrix<GaussianRational>, Matrix<GaussianRational>) {
        loop {
            let m = Matrix::from_fn(d, d, |_, _| {
                GaussianRational::new(rational(rng.gen_range(-2..=2), 1), rational(rng.gen_range(-1..=1), 1))
            });
            if let Some(inv) = inverse_gaussian(&m) {
                return (m, inv);
            }
        }
    }

    fn evaluate(a: &GroupRingMatrix, gens: &[(Matrix<GaussianRational>, Matrix<GaussianRational>)], d: usize) -> Matrix<GaussianRational> {
        let zero = GaussianRational::from_int(0);
        let mut out = Matrix::zeros_like(&zero, a.rows() * d, a.cols() * d);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                for (g, c) in a.get(i, j).terms() {
                    let GroupElement::Word(w) = g else { unreachable!() };
                    let mut m = Matrix::identity_like(&zero, d);
                    for &l in w {
                        let (x, x_inv) = &gens[l.unsigned_abs() as usize - 1];
                        m = m.mul(if l > 0 { x } else { x_inv }, &zero).expect("square factors");
                    }
                    for p in 0..d {
                        for q in 0..d {
                            let v = c * m.get(p, q);
                            out[(i * d + p, j * d + q)] += &v;
                        }
                    }
                }
            }
        }
        out
    }
}

impl FreeRankOracle for MatrixEvaluationOracle {
    fn rank(&self, a: &GroupRingMatrix, config: &OracleConfig) -> Result<(Rational, Certainty)> {
        let Group::Free(f) = a.group() else {
            return Err(Error::UnsupportedGroup(format!("matrix evaluation needs a free group, got {}", a.group())));
        };
        if config.ladder.is_empty() || config.ladder.contains(&0) || config.samples == 0 {
            return Err(Error::UnsupportedOracle("oracle ladder must list positive sizes and samples > 0".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let mut previous: Option<Rational> = None;
        let mut last = rational(0, 1);
        for &d in &config.ladder {
            let mut best = 0;
            for _ in 0..config.samples {
                let gens: Vec<_> = (0..f.rank()).map(|_| Self::random_invertible(&mut rng, d)).collect();
                best = best.max(rank_gaussian(&Self::evaluate(a, &gens, d)));
            }
            let value = rational(best as i64, d as i64);
            if previous.as_ref() == Some(&value) {
                return Ok((value, Certainty::MonteCarlo));
            }
            previous = Some(value.clone());
            last = value;
        }
        Ok((last, Certainty::MonteCarlo))
    }
}

/// Rank bounds over the division closure of a free group ring that hold
/// with certainty: nonzero group-ring elements are invertible there, so a
/// submatrix that is triangular with nonzero diagonal after permutation
/// gives a lower bound, and the numbers of nonzero rows and columns give
/// upper bounds.
pub fn forced_rank_bounds(a: &GroupRingMatrix) -> (usize, usize) {
    let (n, m) = a.shape();
    let nonzero_rows = (0..n).filter(|&i| (0..m).any(|j| !a.get(i, j).is_zero())).count();
    let nonzero_cols = (0..m).filter(|&j| (0..n).any(|i| !a.get(i, j).is_zero())).count();
    let upper = nonzero_rows.min(nonzero_cols);
    let lower = triangular_peel(a, false).max(triangular_peel(a, true)).max(usize::from(upper > 0));
    (lower, upper)
}

/// Greedily removes a row (or column) with exactly one nonzero entry among
/// the remaining columns (rows), together with that column (row). The
/// removed entries form a triangular block with nonzero diagonal.
fn triangular_peel(a: &GroupRingMatrix, by_cols: bool) -> usize {
    let (n, m) = if by_cols { (a.cols(), a.rows()) } else { a.shape() };
    let nz = |i: usize, j: usize| if by_cols { !a.get(j, i).is_zero() } else { !a.get(i, j).is_zero() };
    let mut rows_left: Vec<usize> = (0..n).collect();
    let mut cols_left: Vec<usize> = (0..m).collect();
    let mut count = 0;
    loop {
        let found = rows_left.iter().enumerate().find_map(|(ri, &i)| {
            let hits: Vec<usize> = cols_left.iter().copied().filter(|&j| nz(i, j)).collect();
            (hits.len() == 1).then(|| (ri, hits[0]))
        });
        let Some((ri, j)) = found else { return count };
        rows_left.remove(ri);
        cols_left.retain(|&c| c != j);
        count += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_ring::GroupRingElement;

    fn xy() -> (Group, GroupRingElement, GroupRingElement) {
        let g = Group::free(2);
        let gens = g.generators();
        let x = GroupRingElement::basis(&g, gens[0].1.clone());
        let y = GroupRingElement::basis(&g, gens[1].1.clone());
        (g, x, y)
    }

    #[test]
    fn oracle_on_row() {
        let (g, x, y) = xy();
        let one = GroupRingElement::one(&g);
        let a = GroupRingMatrix::from_rows(&g, vec![vec![&x - &one, &y - &one]], 2).unwrap();
        let (r, c) = MatrixEvaluationOracle.rank(&a, &OracleConfig::default()).unwrap();
        assert_eq!(r, rational(1, 1));
        assert_eq!(c, Certainty::MonteCarlo);
    }

    #[test]
    fn oracle_sees_inner_rank_one() {
        let (g, x, y) = xy();
        let one = GroupRingElement::one(&g);
        let yx = &y * &x;
        let a = GroupRingMatrix::from_rows(&g, vec![vec![one, x], vec![y, yx]], 2).unwrap();
        let (r, _) = MatrixEvaluationOracle.rank(&a, &OracleConfig::default()).unwrap();
        assert_eq!(r, rational(1, 1));
        assert_eq!(forced_rank_bounds(&a), (1, 2));
    }

    #[test]
    fn bounds() {
        let (g, x, y) = xy();
        let one = GroupRingElement::one(&g);
        let zero = GroupRingElement::zero(&g);
        let tri = GroupRingMatrix::from_rows(&g, vec![vec![&x - &one, zero.clone()], vec![y.clone(), &y - &one]], 2).unwrap();
        assert_eq!(forced_rank_bounds(&tri), (2, 2));
        let z = GroupRingMatrix::zeros(&g, 2, 3);
        assert_eq!(forced_rank_bounds(&z), (0, 0));
    }
}
