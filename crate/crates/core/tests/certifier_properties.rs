mod common;

use common::dense_graphs;
use proptest::prelude::*;
use spectral_ham::certifier::{certify_cycle, certify_path, CertifyOptions, VerdictKind};
use spectral_ham::graph::{build_extremal, ExtremalSpec, Family};
use spectral_ham::oracle::{ham_cycle, ham_path};
use spectral_ham::spectral::spectral_radius;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn verdicts_are_sound_and_certificates_valid(g in dense_graphs(4, 13)) {
        prop_assume!(g.min_degree() >= 1);
        let opts = CertifyOptions::default();
        let v = certify_cycle(&g, None, &opts).unwrap();
        let cycle = ham_cycle(&g).unwrap().is_some();
        match v.kind {
            VerdictKind::CertifiedHamiltonianCycle => {
                prop_assert!(cycle);
                prop_assert!(g.is_hamiltonian_sequence(v.certificate.as_ref().unwrap(), true));
            }
            VerdictKind::Exceptional(_) => prop_assert!(!cycle),
            _ => {}
        }
        let v = certify_path(&g, Some(1), &opts).unwrap();
        let path = ham_path(&g).unwrap().is_some();
        match v.kind {
            VerdictKind::CertifiedHamiltonianPath => {
                prop_assert!(path);
                prop_assert!(g.is_hamiltonian_sequence(v.certificate.as_ref().unwrap(), false));
            }
            VerdictKind::Exceptional(_) => prop_assert!(!path),
            _ => {}
        }
    }
}

/// The k = 2 cycle case and the k = 1 path case of the general engines agree
/// with the specialised statements (λ ≥ n − 3 with δ ≥ 2; λ > n − 3 with δ ≥ 1)
/// wherever the general order bounds hold.
#[test]
fn small_k_statements_agree() {
    let opts = CertifyOptions::default();
    for n in 10..=14 {
        for f in [Family::L, Family::M] {
            let g = build_extremal(&ExtremalSpec::new(f, 2, n).unwrap()).unwrap().0;
            let v = certify_cycle(&g, Some(2), &opts).unwrap();
            assert_eq!(v.kind, VerdictKind::Exceptional(f));
            // Dropping a Z–Z edge keeps δ = 2 and falls below n − 3.
            let last = n - 1;
            let h = g.without_edge(last - 1, last).unwrap();
            let v = certify_cycle(&h, Some(2), &opts).unwrap();
            assert_eq!(v.kind, VerdictKind::Inconclusive);
        }
    }
    for n in 7..=14 {
        let g = build_extremal(&ExtremalSpec::new(Family::N, 1, n).unwrap()).unwrap().0;
        let lambda = spectral_radius(&g, &opts.tol).unwrap();
        assert!(lambda.lambda_lo > spectral_ham::spectral::exact::int(n as i64 - 3));
        assert_eq!(certify_path(&g, Some(1), &opts).unwrap().kind, VerdictKind::Exceptional(Family::N));
    }
}
