mod common;

use common::{dense_graphs, graphs};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_ham::closure::{
    chvatal_cycle_witness, chvatal_path_witness, cycle_from_closure, k_closure, k_closure_with_order,
    ore_cycle_check, ore_path_check, path_from_closure,
};
use spectral_ham::oracle::{ham_cycle, ham_path};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_is_idempotent(g in graphs(1, 10), k in 0usize..20) {
        let (c, _) = k_closure(&g, k);
        let (cc, trace) = k_closure(&c, k);
        prop_assert_eq!(cc, c);
        prop_assert!(trace.added_edges.is_empty());
    }

    #[test]
    fn closure_ignores_scan_order(g in dense_graphs(2, 10), seed in any::<u64>()) {
        let n = g.order();
        let k = n;
        let (reference, _) = k_closure(&g, k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for _ in 0..20 {
            pairs.shuffle(&mut rng);
            let (c, trace) = k_closure_with_order(&g, k, &pairs);
            prop_assert_eq!(&c, &reference);
            prop_assert_eq!(trace.replay(&g), Some(c));
        }
    }

    #[test]
    fn degree_conditions_agree_with_oracle(g in dense_graphs(1, 9)) {
        let cycle = ham_cycle(&g).unwrap().is_some();
        let path = ham_path(&g).unwrap().is_some();
        if g.order() >= 3 {
            if chvatal_cycle_witness(&g).unwrap().is_none() {
                prop_assert!(cycle);
            }
            if ore_cycle_check(&g).unwrap() {
                prop_assert!(cycle);
            }
        }
        if g.order() >= 2 && chvatal_path_witness(&g).unwrap().is_none() {
            prop_assert!(path);
        }
        if ore_path_check(&g) {
            prop_assert!(path);
        }
    }

    #[test]
    fn unwinding_yields_hamiltonian_sequences(g in dense_graphs(3, 12)) {
        let n = g.order();
        let identity: Vec<usize> = (0..n).collect();
        let (c, trace) = k_closure(&g, n);
        if c.is_complete() {
            let cycle = cycle_from_closure(&g, &trace, &identity).unwrap();
            prop_assert!(g.is_hamiltonian_sequence(&cycle, true));
        }
        let (c, trace) = k_closure(&g, n - 1);
        if c.is_complete() {
            let path = path_from_closure(&g, &trace, &identity).unwrap();
            prop_assert!(g.is_hamiltonian_sequence(&path, false));
        }
    }
}
