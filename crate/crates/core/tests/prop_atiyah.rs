mod common;

use common::*;
use l2dim::atiyah::{atiyah_check, rank_function_report, subgroup_lcm};
use l2dim::dimension::{DimensionEngine, OracleConfig, PresentedModule};
use l2dim::group::{FiniteGroup, Group};
use proptest::prelude::*;
use rand::Rng;

/// Every subgroup order divides `|G|` and `G` is its own subgroup, so the
/// lcm is the order; ℤⁿ and free groups are torsion-free; D∞ has only
/// reflections of order 2.
fn expected_lcm(g: &Group) -> u64 {
    match g {
        Group::Finite(f) => f.order() as u64,
        Group::Crossed(_) => 2,
        _ => 1,
    }
}

fn exact_groups() -> Vec<Group> {
    vec![
        Group::finite(FiniteGroup::cyclic(5)),
        Group::finite(FiniteGroup::dihedral(4)),
        Group::finite(FiniteGroup::dihedral(3)),
        Group::free_abelian(2),
        Group::infinite_dihedral(),
    ]
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn exact_dimensions_are_integral(seed in any::<u64>()) {
        let mut r = rng(seed);
        let engine = DimensionEngine::default();
        for g in exact_groups() {
            let (n, m) = (r.gen_range(1..=2), r.gen_range(0..=2));
            let module = PresentedModule::new(random_group_ring_matrix(&mut r, &g, n, m));
            let v = atiyah_check(&engine, &module).unwrap();
            prop_assert_eq!(v.lcm, expected_lcm(&g), "{}", g);
            prop_assert_eq!(subgroup_lcm(&g), v.lcm);
            prop_assert!(v.pass && v.certified, "{}: {}", g, v.dimension);
            prop_assert_eq!(v.status(), "pass");
            prop_assert_eq!(v.conditional, matches!(g, Group::Crossed(_)));
        }
    }

    #[test]
    fn finite_dimensions_have_group_order_denominators(seed in any::<u64>(), n in 1usize..=2, m in 1usize..=2) {
        let mut r = rng(seed);
        let g = Group::finite(FiniteGroup::dihedral(3));
        let a = random_group_ring_matrix(&mut r, &g, n, m);
        let expected = q(n as i64, 1) - reference_finite_rank(&a);
        let v = atiyah_check(&DimensionEngine::default(), &PresentedModule::new(a)).unwrap();
        prop_assert_eq!(v.dimension.value().clone(), expected.clone());
        prop_assert!((expected * q(6, 1)).is_integer());
    }

    #[test]
    fn verdicts_are_deterministic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = Group::free(2);
        let module = PresentedModule::new(random_group_ring_matrix(&mut r, &g, 2, 2));
        let config = OracleConfig { seed, ..OracleConfig::default() };
        let first = atiyah_check(&DimensionEngine::new(config.clone()), &module).unwrap();
        let second = atiyah_check(&DimensionEngine::new(config), &module).unwrap();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(first.lcm, 1);
        prop_assert!(!first.conditional);
    }

    #[test]
    fn dimensions_form_a_rank_function(seed in any::<u64>()) {
        let mut r = rng(seed);
        let engine = DimensionEngine::default();
        for g in exact_groups() {
            let samples: Vec<PresentedModule> = (0..3)
                .map(|_| {
                    let (n, m) = (r.gen_range(0..=2), r.gen_range(0..=2));
                    PresentedModule::new(random_group_ring_matrix(&mut r, &g, n, m))
                })
                .collect();
            let report = rank_function_report(&engine, &samples).unwrap();
            prop_assert!(report.pass(), "{}: {:?}", g, report);
        }
    }
}
