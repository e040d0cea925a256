//! Random instance generators and independent reference computations
//! shared by the property and acceptance suites.
#![allow(dead_code)]

use l2dim::group::{FiniteGroup, Group, GroupElement};
use l2dim::group_ring::{GroupRingElement, GroupRingMatrix};
use l2dim::scalars::{GaussianRational, LaurentPoly, Matrix, Rational, RationalFunction};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn gq(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    GaussianRational::new(q(re.0, re.1), q(im.0, im.1))
}

// ---- proptest strategies ----

/// Fixed case count, no regression files.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

pub fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

pub fn gaussian_strategy() -> impl Strategy<Value = GaussianRational> {
    (rational_strategy(), rational_strategy()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

pub fn laurent_strategy(nvars: usize, max_terms: usize, deg: i64) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-deg..=deg, nvars), gaussian_strategy()), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(nvars, terms))
}

pub fn nonzero_laurent_strategy(nvars: usize, max_terms: usize, deg: i64) -> impl Strategy<Value = LaurentPoly> {
    laurent_strategy(nvars, max_terms, deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfunc_strategy(nvars: usize) -> impl Strategy<Value = RationalFunction> {
    (laurent_strategy(nvars, 3, 2), nonzero_laurent_strategy(nvars, 3, 2))
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

// ---- seeded generators ----

pub fn small_gaussian(r: &mut impl Rng) -> GaussianRational {
    let re = q(r.gen_range(-4..=4), r.gen_range(1..=3));
    let im = if r.gen_bool(0.3) { q(r.gen_range(-3..=3), r.gen_range(1..=2)) } else { Rational::zero() };
    GaussianRational::new(re, im)
}

pub fn integer_gaussian(r: &mut impl Rng) -> GaussianRational {
    GaussianRational::from_int(r.gen_range(-3..=3))
}

/// Up to `max_terms` terms, exponents in `[-deg, deg]`, possibly zero.
pub fn random_laurent(r: &mut impl Rng, nvars: usize, max_terms: usize, deg: i64) -> LaurentPoly {
    let k = r.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        nvars,
        (0..k).map(|_| ((0..nvars).map(|_| r.gen_range(-deg..=deg)).collect(), small_gaussian(r))),
    )
}

pub fn random_nonzero_laurent(r: &mut impl Rng, nvars: usize, max_terms: usize, deg: i64) -> LaurentPoly {
    loop {
        let p = random_laurent(r, nvars, max_terms.max(1), deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial with total exponent range `[0, deg]` in each variable.
pub fn random_polynomial(r: &mut impl Rng, nvars: usize, max_terms: usize, deg: i64) -> LaurentPoly {
    let k = r.gen_range(1..=max_terms);
    LaurentPoly::from_terms(nvars, (0..k).map(|_| ((0..nvars).map(|_| r.gen_range(0..=deg)).collect(), small_gaussian(r))))
}

pub fn random_ratfunc(r: &mut impl Rng, nvars: usize, deg: i64) -> RationalFunction {
    let num = if r.gen_bool(0.15) { LaurentPoly::zero(nvars) } else { random_polynomial(r, nvars, 3, deg) };
    let den = loop {
        let d = random_polynomial(r, nvars, 3, deg);
        if !d.is_zero() {
            break d;
        }
    };
    RationalFunction::new(num, den).unwrap()
}

pub fn random_laurent_matrix(r: &mut impl Rng, rows: usize, cols: usize, nvars: usize) -> Matrix<LaurentPoly> {
    Matrix::from_fn(rows, cols, |_, _| random_laurent(r, nvars, 3, 2))
}

/// Matrices of low generic rank are common: with probability ½ the result
/// is a product `B·C` through a smaller inner dimension.
pub fn random_rank_deficient(r: &mut impl Rng, rows: usize, cols: usize, nvars: usize) -> Matrix<LaurentPoly> {
    let zero = LaurentPoly::zero(nvars);
    if r.gen_bool(0.5) || rows.min(cols) <= 1 {
        return random_laurent_matrix(r, rows, cols, nvars);
    }
    let inner = r.gen_range(1..rows.min(cols));
    let b = Matrix::from_fn(rows, inner, |_, _| random_laurent(r, nvars, 2, 1));
    let c = Matrix::from_fn(inner, cols, |_, _| random_laurent(r, nvars, 2, 1));
    b.mul(&c, &zero).unwrap()
}

pub fn group_models() -> Vec<Group> {
    vec![
        Group::finite(FiniteGroup::cyclic(5)),
        Group::finite(FiniteGroup::dihedral(4)),
        Group::free_abelian(2),
        Group::free(2),
        Group::infinite_dihedral(),
    ]
}

/// Product of a random word in the named generators and their inverses.
pub fn random_element(r: &mut impl Rng, g: &Group, max_len: usize) -> GroupElement {
    let gens = g.generators();
    let mut x = g.identity();
    if gens.is_empty() {
        return x;
    }
    for _ in 0..r.gen_range(0..=max_len) {
        let (_, s) = &gens[r.gen_range(0..gens.len())];
        let s = if r.gen_bool(0.5) { g.inverse(s) } else { s.clone() };
        x = g.multiply(&x, &s).unwrap();
    }
    x
}

pub fn random_group_ring(r: &mut impl Rng, g: &Group, max_terms: usize, max_len: usize) -> GroupRingElement {
    let k = r.gen_range(0..=max_terms);
    GroupRingElement::from_terms(g, (0..k).map(|_| (random_element(r, g, max_len), small_gaussian(r)))).unwrap()
}

pub fn random_group_ring_matrix(r: &mut impl Rng, g: &Group, rows: usize, cols: usize) -> GroupRingMatrix {
    let data = (0..rows).map(|_| (0..cols).map(|_| random_group_ring(r, g, 3, 2)).collect()).collect();
    GroupRingMatrix::from_rows(g, data, cols).unwrap()
}

pub fn generators(g: &Group) -> Vec<GroupRingElement> {
    g.generators().into_iter().map(|(_, x)| GroupRingElement::basis(g, x)).collect()
}

// ---- independent reference computations ----

/// Rank over ℚ(i) by plain Gaussian elimination.
pub fn reference_rank(m: &[Vec<GaussianRational>]) -> usize {
    let mut a: Vec<Vec<GaussianRational>> = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][c].inv().unwrap();
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for j in c..cols {
                    let t = &f * &a[rank][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `Σ c·Π tᵢ^eᵢ`, computed term by term.
pub fn reference_eval(p: &LaurentPoly, point: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (e, c) in p.terms() {
        let mut t = c.clone();
        for (x, &k) in point.iter().zip(e.iter()) {
            let base = if k < 0 { x.inv().unwrap() } else { x.clone() };
            for _ in 0..k.unsigned_abs() {
                t = &t * &base;
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Nonzero integer evaluation points away from the unit circle's torsion.
pub fn random_point(r: &mut impl Rng, nvars: usize) -> Vec<GaussianRational> {
    (0..nvars)
        .map(|_| {
            let v: i64 = r.gen_range(2..=500);
            GaussianRational::from_int(if r.gen_bool(0.5) { v } else { -v })
        })
        .collect()
}

/// Generic rank of a Laurent matrix as the maximum rank over `samples`
/// random specializations. A specialization never exceeds the generic
/// rank, and it attains it off a proper Zariski-closed set.
pub fn evaluation_rank(m: &Matrix<LaurentPoly>, nvars: usize, r: &mut impl Rng, samples: usize) -> usize {
    (0..samples)
        .map(|_| {
            let pt = random_point(r, nvars);
            let rows: Vec<Vec<GaussianRational>> =
                (0..m.rows()).map(|i| (0..m.cols()).map(|j| reference_eval(m.get(i, j), &pt)).collect()).collect();
            reference_rank(&rows)
        })
        .max()
        .unwrap_or(0)
}

/// Same for rational functions, skipping points where a denominator
/// vanishes.
pub fn evaluation_rank_rf(m: &Matrix<RationalFunction>, nvars: usize, r: &mut impl Rng, samples: usize) -> usize {
    let mut best = 0;
    let mut done = 0;
    while done < samples {
        let pt = random_point(r, nvars);
        let mut rows = Vec::with_capacity(m.rows());
        let mut ok = true;
        for i in 0..m.rows() {
            let mut row = Vec::with_capacity(m.cols());
            for j in 0..m.cols() {
                let f = m.get(i, j);
                let d = reference_eval(f.denom(), &pt);
                if d.is_zero() {
                    ok = false;
                    break;
                }
                row.push(&reference_eval(f.numer(), &pt) * &d.inv().unwrap());
            }
            if !ok {
                break;
            }
            rows.push(row);
        }
        if ok {
            best = best.max(reference_rank(&rows));
            done += 1;
        }
    }
    best
}

/// Rank over ℚ(i) of the permutation-style regular representation of a
/// finite-group matrix, built directly from the multiplication table:
/// row `(i, x)`, column `(j, y)` carries the coefficient of `x⁻¹y` in `A_ij`.
pub fn reference_finite_rank(a: &GroupRingMatrix) -> Rational {
    let g = a.group();
    let elems: Vec<GroupElement> = match g {
        Group::Finite(f) => (0..f.order()).map(GroupElement::Finite).collect(),
        _ => panic!("finite groups only"),
    };
    let n = elems.len();
    let mut rows = vec![vec![GaussianRational::zero(); a.cols() * n]; a.rows() * n];
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for (xi, x) in elems.iter().enumerate() {
                for (yi, y) in elems.iter().enumerate() {
                    let k = g.multiply(&g.inverse(x), y).unwrap();
                    rows[i * n + xi][j * n + yi] = a.get(i, j).coeff(&k);
                }
            }
        }
    }
    Rational::new((reference_rank(&rows) as i64).into(), (n as i64).into())
}

pub fn alternating_sum(values: impl IntoIterator<Item = Rational>) -> Rational {
    values
        .into_iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (p, v)| if p % 2 == 0 { acc + v } else { acc - v })
}

pub fn one_gaussian() -> GaussianRational {
    GaussianRational::one()
}

/// Elementary matrix `I + c·e_{ij}` and its inverse `I − c·e_{ij}`.
pub fn elementary(n: usize, i: usize, j: usize, c: &LaurentPoly) -> (Matrix<LaurentPoly>, Matrix<LaurentPoly>) {
    let mut e = Matrix::identity_like(&LaurentPoly::one(c.nvars()), n);
    let mut f = e.clone();
    if i != j {
        e[(i, j)] = c.clone();
        f[(i, j)] = -c;
    }
    (e, f)
}

/// Product of a few random elementary matrices, with its inverse.
pub fn random_unimodular(r: &mut impl Rng, n: usize, nvars: usize) -> (Matrix<LaurentPoly>, Matrix<LaurentPoly>) {
    let zero = LaurentPoly::zero(nvars);
    let mut u = Matrix::identity_like(&LaurentPoly::one(nvars), n);
    let mut v = u.clone();
    if n < 2 {
        return (u, v);
    }
    for _ in 0..r.gen_range(0..=3) {
        let i = r.gen_range(0..n);
        let j = (i + r.gen_range(1..n)) % n;
        let c = random_laurent(r, nvars, 2, 1);
        let (e, f) = elementary(n, i, j, &c);
        u = u.mul(&e, &zero).unwrap();
        v = f.mul(&v, &zero).unwrap();
    }
    (u, v)
}

/// A random valid chain complex over ℤⁿ: a direct sum of Koszul pieces and
/// single maps, with each chain module mixed by a unimodular change of
/// basis.
pub fn random_complex(r: &mut impl Rng, nvars: usize) -> (Vec<usize>, Vec<Matrix<LaurentPoly>>) {
    let zero = LaurentPoly::zero(nvars);
    let top = r.gen_range(1..=3);
    let mut ranks = vec![0usize; top + 1];
    // pieces: (start degree, ranks, maps)
    let mut pieces: Vec<(usize, Vec<usize>, Vec<Matrix<LaurentPoly>>)> = Vec::new();
    for _ in 0..r.gen_range(1..=3) {
        if top >= 2 && r.gen_bool(0.5) {
            let start = r.gen_range(0..=top - 2);
            let f = random_laurent(r, nvars, 2, 1);
            let g = random_laurent(r, nvars, 2, 1);
            let d1 = Matrix::new(1, 2, vec![f.clone(), g.clone()]);
            let d2 = Matrix::new(2, 1, vec![-&g, f]);
            pieces.push((start, vec![1, 2, 1], vec![d1, d2]));
        } else {
            let start = r.gen_range(0..top);
            let (a, b) = (r.gen_range(0..=2), r.gen_range(0..=2));
            pieces.push((start, vec![a, b], vec![random_rank_deficient(r, a, b, nvars)]));
        }
    }
    if r.gen_bool(0.3) {
        pieces.push((r.gen_range(0..=top), vec![r.gen_range(1..=2)], vec![]));
    }
    for (s, rk, _) in &pieces {
        for (k, n) in rk.iter().enumerate() {
            ranks[s + k] += n;
        }
    }
    let mut boundaries: Vec<Matrix<LaurentPoly>> =
        (1..=top).map(|p| Matrix::zeros_like(&zero, ranks[p - 1], ranks[p])).collect();
    let mut offset = vec![0usize; top + 1];
    for (s, rk, maps) in &pieces {
        for (k, d) in maps.iter().enumerate() {
            let p = s + k + 1;
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    boundaries[p - 1][(offset[p - 1] + i, offset[p] + j)] = d.get(i, j).clone();
                }
            }
        }
        for (k, n) in rk.iter().enumerate() {
            offset[s + k] += n;
        }
    }
    let changes: Vec<_> = ranks.iter().map(|&n| random_unimodular(r, n, nvars)).collect();
    let boundaries = boundaries
        .iter()
        .enumerate()
        .map(|(i, d)| {
            // d'_p = U_{p−1} · d_p · U_p⁻¹
            changes[i].0.mul(d, &zero).unwrap().mul(&changes[i + 1].1, &zero).unwrap()
        })
        .collect();
    (ranks, boundaries)
}
