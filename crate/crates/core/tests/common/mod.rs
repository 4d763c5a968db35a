#![allow(dead_code)]

use proptest::prelude::*;
use spectral_ham::Graph;

/// Graphs on `lo..=hi` vertices, each pair present independently.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let mut edges = vec![];
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[i] {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Denser graphs: each pair present with probability about 3/4.
pub fn dense_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(0u8..4, pairs))
    })
    .prop_map(|(n, draws)| {
        let mut edges = vec![];
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if draws[i] > 0 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

/// A permutation of `0..n` as a strategy.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
