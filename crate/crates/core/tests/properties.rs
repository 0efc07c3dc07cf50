use proptest::prelude::*;

use invforge::hilbert::{hilbert_count, molien};
use invforge::invariants::{basis_transition, invariant_dimension, ProductMode};

fn small_alpha() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=4, 1..=2).prop_filter("nonzero", |a| a.iter().sum::<u32>() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transitions_are_triangular(n in 1usize..=3, q in 1u32..=2, alpha in small_alpha(), sigma in any::<bool>()) {
        let mode = if sigma { ProductMode::Sigma } else { ProductMode::Bracket };
        let r = basis_transition(n, q, &alpha, mode).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
        prop_assert_eq!(r.size, invariant_dimension(n, q, &alpha));
    }

    #[test]
    fn molien_matches_count(n in 1usize..=3, q in 1u32..=2, m in 1usize..=2, t in 1u32..=5) {
        let a = molien(n, q, m, t).unwrap();
        let b = hilbert_count(n, q, m, t);
        prop_assert!(a.agrees_with(&b));
    }

    #[test]
    fn dimension_grows_with_points(n in 1usize..=3, q in 1u32..=2, alpha in small_alpha()) {
        prop_assert!(invariant_dimension(n, q, &alpha) <= invariant_dimension(n + 1, q, &alpha));
    }
}
