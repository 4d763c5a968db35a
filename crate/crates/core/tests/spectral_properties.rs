mod common;

use common::{dense_graphs, graphs};
use num_rational::BigRational;
use proptest::prelude::*;
use spectral_ham::spectral::bounds::{hsf_f, hsf_upper_bound};
use spectral_ham::spectral::exact::{int, ten_pow_neg};
use spectral_ham::spectral::{default_tolerance, rayleigh_quotient, spectral_radius};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn interval_is_certified(g in graphs(1, 14)) {
        let tol = default_tolerance();
        let e = spectral_radius(&g, &tol).unwrap();
        prop_assert!(e.lambda_lo <= e.lambda_hi);
        prop_assert!(&e.lambda_hi - &e.lambda_lo <= tol);
        prop_assert_eq!(rayleigh_quotient(&g, &e.witness).unwrap(), e.lambda_lo.clone());
        prop_assert!(hsf_upper_bound(&g) >= e.lambda_lo);
    }

    #[test]
    fn rayleigh_never_exceeds_upper_bound(g in graphs(1, 10), v in proptest::collection::vec(-20i64..20, 10)) {
        let n = g.order();
        let v: Vec<BigRational> = v[..n].iter().map(|&x| int(x)).collect();
        prop_assume!(v.iter().any(|x| *x != int(0)));
        let e = spectral_radius(&g, &default_tolerance()).unwrap();
        prop_assert!(rayleigh_quotient(&g, &v).unwrap() <= e.lambda_hi);
    }

    #[test]
    fn deleting_an_edge_never_raises_the_radius(g in dense_graphs(2, 12), pick in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let tol = default_tolerance();
        let full = spectral_radius(&g, &tol).unwrap();
        let h = g.without_edge(u, v).unwrap();
        let less = spectral_radius(&h, &tol).unwrap();
        prop_assert!(less.lambda_hi <= &full.lambda_lo + &tol * int(2));
        if g.is_connected() {
            // Perron–Frobenius: strictly smaller for connected graphs.
            prop_assert!(less.lambda_lo < full.lambda_hi);
            prop_assert!(less.lambda_hi < &full.lambda_hi + ten_pow_neg(13));
        }
    }

    #[test]
    fn degree_substitution_step(g in dense_graphs(2, 14), k in 0usize..6) {
        let delta = g.min_degree();
        prop_assume!(k <= delta);
        let (m, n) = (g.size(), g.order());
        let at_k = hsf_f(&int(k as i64), m, n).unwrap();
        let at_delta = hsf_f(&int(delta as i64), m, n).unwrap();
        prop_assert_ne!(at_k.cmp_exact(&at_delta), std::cmp::Ordering::Less);
    }
}
