mod common;

use common::*;
use l2dim::scalars::linalg::{rank_exact, rank_laurent};
use l2dim::scalars::{GaussianRational, Matrix, RationalFunction, ReducePolicy};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rf_one() -> RationalFunction {
    RationalFunction::one(2)
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn gaussian_field_axioms(a in gaussian_strategy(), b in gaussian_strategy(), c in gaussian_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &GaussianRational::zero(), a.clone());
        prop_assert_eq!(&a * &GaussianRational::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        }
    }

    #[test]
    fn rational_function_field_axioms(a in ratfunc_strategy(2), b in ratfunc_strategy(2), c in ratfunc_strategy(2)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &rf_one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), rf_one());
        }
        prop_assert_eq!(a.normalized(ReducePolicy::Content), a.clone());
    }

    #[test]
    fn cross_multiplication_is_an_equivalence(a in ratfunc_strategy(1), k in nonzero_laurent_strategy(1, 2, 2), m in nonzero_laurent_strategy(1, 2, 2)) {
        // b and c are a rewritten with extra common factors
        let b = RationalFunction::new(a.numer() * &k, a.denom() * &k).unwrap();
        let c = RationalFunction::new(b.numer() * &m, b.denom() * &m).unwrap();
        prop_assert_eq!(&a, &a);
        prop_assert_eq!(&a == &b, &b == &a);
        prop_assert!(a == b && b == c);
        prop_assert_eq!(&a, &c);
        let shifted = &a + &RationalFunction::one(1);
        prop_assert_ne!(&shifted, &a);
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn rank_exact_matches_evaluation(seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=3) {
        let mut r = rng(seed);
        let a = random_rank_deficient(&mut r, rows, cols, 2);
        let lifted = a.map(|p| RationalFunction::from_poly(p.clone()));
        let exact = rank_exact(&lifted);
        prop_assert_eq!(exact, rank_laurent(&a));
        prop_assert_eq!(exact, evaluation_rank(&a, 2, &mut r, 4));
    }

    #[test]
    fn rank_exact_on_fractions_matches_evaluation(seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=3) {
        let mut r = rng(seed);
        let a = Matrix::from_fn(rows, cols, |_, _| random_ratfunc(&mut r, 2, 2));
        prop_assert_eq!(rank_exact(&a), evaluation_rank_rf(&a, 2, &mut r, 4));
    }

    #[test]
    fn rank_exact_invariances(seed in any::<u64>(), rows in 1usize..=3, cols in 1usize..=3) {
        let mut r = rng(seed);
        let a = Matrix::from_fn(rows, cols, |_, _| random_ratfunc(&mut r, 2, 1));
        let base = rank_exact(&a);
        let row_perm: Vec<usize> = (0..rows).rev().collect();
        let col_shift = seed as usize % cols;
        let permuted = Matrix::from_fn(rows, cols, |i, j| a.get(row_perm[i], (j + col_shift) % cols).clone());
        prop_assert_eq!(rank_exact(&permuted), base);
        let mut scaled = a.clone();
        let f = loop {
            let f = random_ratfunc(&mut r, 2, 2);
            if !f.is_zero() {
                break f;
            }
        };
        let i = seed as usize % rows;
        for j in 0..cols {
            scaled[(i, j)] = &scaled.get(i, j).clone() * &f;
        }
        prop_assert_eq!(rank_exact(&scaled), base);
    }
}
