//! Bondy–Chvátal k-closure, the classical degree conditions of Ore and
//! Chvátal, and extraction of Hamiltonian cycles/paths by unwinding a closure.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{degrees_ascending, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("graph order {n} is below the minimum of {min} for this test")]
    TooSmall { n: usize, min: usize },
    #[error("trace threshold {threshold} does not match the required {required}")]
    Threshold { threshold: usize, required: usize },
    #[error("input sequence is not a Hamiltonian cycle of the closure")]
    NotHamiltonian,
    #[error("no crossing pair found while removing edge {{{0}, {1}}}")]
    NoRotation(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedEdge {
    pub u: usize,
    pub v: usize,
    /// d(u) + d(v) in the graph just before the edge was added.
    pub degree_sum: usize,
}

/// Record of a closure computation: the threshold and the edges added, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTrace {
    pub threshold: usize,
    pub added_edges: Vec<AddedEdge>,
}

impl ClosureTrace {
    /// Re-applies the trace to `g`, checking each recorded degree sum.
    pub fn replay(&self, g: &Graph) -> Option<Graph> {
        let mut h = g.clone();
        for e in &self.added_edges {
            if h.has_edge(e.u, e.v)
                || h.degree(e.u) + h.degree(e.v) != e.degree_sum
                || e.degree_sum < self.threshold
            {
                return None;
            }
            h.set(e.u, e.v);
        }
        Some(h)
    }
}

/// Computes cl_k(G) with repeated lexicographic sweeps over nonadjacent pairs.
pub fn k_closure(g: &Graph, k: usize) -> (Graph, ClosureTrace) {
    let n = g.order();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    k_closure_with_order(g, k, &pairs)
}

/// Closure where each sweep visits candidate pairs in the given order.
/// The resulting graph does not depend on the order; the trace does.
pub fn k_closure_with_order(g: &Graph, k: usize, order: &[(usize, usize)]) -> (Graph, ClosureTrace) {
    let mut h = g.clone();
    let mut trace = ClosureTrace { threshold: k, added_edges: Vec::new() };
    loop {
        let mut changed = false;
        for &(u, v) in order {
            if u != v && !h.has_edge(u, v) {
                let s = h.degree(u) + h.degree(v);
                if s >= k {
                    h.set(u, v);
                    trace.added_edges.push(AddedEdge { u, v, degree_sum: s });
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    (h, trace)
}

/// True iff every nonadjacent pair has degree sum at most `k − 1`.
pub fn closure_main_property_check(g: &Graph, k: usize) -> bool {
    g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) < k)
}

/// Ore's condition d(u) + d(v) >= n on all nonadjacent pairs.
pub fn ore_cycle_check(g: &Graph) -> Result<bool, ClosureError> {
    let n = g.order();
    if n < 3 {
        return Err(ClosureError::TooSmall { n, min: 3 });
    }
    Ok(g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) >= n))
}

/// Ore-type condition d(u) + d(v) >= n − 1, which forces a Hamiltonian path.
pub fn ore_path_check(g: &Graph) -> bool {
    let n = g.order();
    n <= 1 || g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) + 1 >= n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OreConnectedOutcome {
    Holds,
    Fails,
    NotTwoConnected,
}

/// Ore's Hamiltonian-connectedness condition d(u) + d(v) >= n + 1, for
/// 2-connected graphs.
pub fn ore_hamconnected_check(g: &Graph) -> OreConnectedOutcome {
    if !g.is_biconnected() {
        return OreConnectedOutcome::NotTwoConnected;
    }
    let n = g.order();
    if g.non_edges().all(|(u, v)| g.degree(u) + g.degree(v) > n) {
        OreConnectedOutcome::Holds
    } else {
        OreConnectedOutcome::Fails
    }
}

/// Index `s` of a degree-sequence obstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChvatalWitness {
    pub s: usize,
}

/// Least `s < n/2` with d_s <= s and d_{n−s} <= n − s − 1 (1-based, ascending
/// degrees). `None` means Chvátal's condition forces a Hamiltonian cycle.
pub fn chvatal_cycle_witness(g: &Graph) -> Result<Option<ChvatalWitness>, ClosureError> {
    let n = g.order();
    if n < 3 {
        return Err(ClosureError::TooSmall { n, min: 3 });
    }
    let d = degrees_ascending(g);
    let at = |i: usize| d[i - 1];
    Ok((1..)
        .take_while(|&s| 2 * s < n)
        .find(|&s| at(s) <= s && at(n - s) + s < n)
        .map(|s| ChvatalWitness { s }))
}

/// Least `s < (n+1)/2` with d_s <= s − 1 and d_{n−s+1} <= n − s − 1.
/// `None` means the condition forces a Hamiltonian path.
pub fn chvatal_path_witness(g: &Graph) -> Result<Option<ChvatalWitness>, ClosureError> {
    let n = g.order();
    if n < 2 {
        return Err(ClosureError::TooSmall { n, min: 2 });
    }
    let d = degrees_ascending(g);
    let at = |i: usize| d[i - 1];
    Ok((1..)
        .take_while(|&s| 2 * s < n + 1)
        .find(|&s| at(s) < s && at(n - s + 1) + s < n)
        .map(|s| ChvatalWitness { s }))
}

/// Turns a Hamiltonian cycle of cl_n(G) into one of `g` by removing the
/// trace's edges in reverse and rotating around each removed edge.
pub fn cycle_from_closure(
    g: &Graph,
    trace: &ClosureTrace,
    cycle_in_closure: &[usize],
) -> Result<Vec<usize>, ClosureError> {
    let n = g.order();
    if trace.threshold != n {
        return Err(ClosureError::Threshold { threshold: trace.threshold, required: n });
    }
    let mut h = trace.replay(g).ok_or(ClosureError::NotHamiltonian)?;
    if !h.is_hamiltonian_sequence(cycle_in_closure, true) {
        return Err(ClosureError::NotHamiltonian);
    }
    let mut cycle = cycle_in_closure.to_vec();
    for e in trace.added_edges.iter().rev() {
        h.unset(e.u, e.v);
        if let Some(rotated) = rotate_off_edge(&h, &cycle, e.u, e.v) {
            cycle = rotated;
        } else if uses_edge(&cycle, e.u, e.v) {
            return Err(ClosureError::NoRotation(e.u, e.v));
        }
        debug_assert!(h.is_hamiltonian_sequence(&cycle, true));
    }
    Ok(cycle)
}

/// Hamiltonian path of `g` from a Hamiltonian path of cl_{n−1}(G).
///
/// Adding a universal vertex turns the path problem into the cycle problem
/// one order up, where the closure thresholds line up.
pub fn path_from_closure(
    g: &Graph,
    trace: &ClosureTrace,
    path_in_closure: &[usize],
) -> Result<Vec<usize>, ClosureError> {
    let n = g.order();
    if trace.threshold + 1 != n {
        return Err(ClosureError::Threshold { threshold: trace.threshold, required: n - 1 });
    }
    let closed = trace.replay(g).ok_or(ClosureError::NotHamiltonian)?;
    if !closed.is_hamiltonian_sequence(path_in_closure, false) {
        return Err(ClosureError::NotHamiltonian);
    }
    if n == 1 {
        return Ok(path_in_closure.to_vec());
    }
    let apex = n;
    let mut cone = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        cone.set(u, v);
    }
    for v in 0..n {
        cone.set(v, apex);
    }
    let lifted = ClosureTrace {
        threshold: n + 1,
        added_edges: trace
            .added_edges
            .iter()
            .map(|e| crate::closure::AddedEdge { degree_sum: e.degree_sum + 2, ..*e })
            .collect(),
    };
    let mut cycle = path_in_closure.to_vec();
    cycle.push(apex);
    let cycle = cycle_from_closure(&cone, &lifted, &cycle)?;
    let pos = cycle.iter().position(|&v| v == apex).expect("apex is on the cycle");
    Ok(cycle[pos + 1..].iter().chain(&cycle[..pos]).copied().collect())
}

fn uses_edge(cycle: &[usize], u: usize, v: usize) -> bool {
    let n = cycle.len();
    (0..n).any(|i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % n]);
        (a == u && b == v) || (a == v && b == u)
    })
}

/// If `cycle` uses `{u, v}`, rotate it into a cycle of `h` avoiding that edge.
/// Returns `None` when the cycle does not use the edge or no crossing pair exists.
fn rotate_off_edge(h: &Graph, cycle: &[usize], u: usize, v: usize) -> Option<Vec<usize>> {
    let n = cycle.len();
    let iu = cycle.iter().position(|&w| w == u)?;
    // Lay the cycle out as a path u = p[0], ..., p[n−1] = v.
    let path: Vec<usize> = if cycle[(iu + n - 1) % n] == v {
        (0..n).map(|i| cycle[(iu + i) % n]).collect()
    } else if cycle[(iu + 1) % n] == v {
        (0..n).map(|i| cycle[(iu + n - i) % n]).collect()
    } else {
        return None;
    };
    // Crossing pair: u ~ p[i+1] and v ~ p[i]; first match wins.
    let i = (1..n - 2).find(|&i| h.has_edge(u, path[i + 1]) && h.has_edge(v, path[i]))?;
    let mut out = path[..=i].to_vec();
    out.extend(path[i + 1..].iter().rev());
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_edgeless, build_extremal, ExtremalSpec, Family};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn m_graph(k: usize, n: usize) -> Graph {
        build_extremal(&ExtremalSpec::new(Family::M, k, n).unwrap()).unwrap().0
    }

    #[test]
    fn closure_examples() {
        let (c, trace) = k_closure(&cycle(4), 4);
        assert_eq!(c, build_complete(4).unwrap());
        assert_eq!(trace.added_edges.len(), 2);
        assert!(trace.added_edges.iter().all(|e| e.degree_sum >= 4));
        assert_eq!(trace.replay(&cycle(4)).unwrap(), c);

        let e3 = build_edgeless(3).unwrap();
        assert_eq!(k_closure(&e3, 1).0, e3);
        // P_4: best nonadjacent sum is d_b + d_d = 3 < 4.
        assert_eq!(k_closure(&path(4), 4).0, path(4));
    }

    #[test]
    fn main_property() {
        assert!(closure_main_property_check(&build_complete(6).unwrap(), 0));
        assert!(closure_main_property_check(&cycle(5), 5));
        assert!(!closure_main_property_check(&cycle(5), 4));
        let (c, _) = k_closure(&path(6), 3);
        assert!(closure_main_property_check(&c, 3));
    }

    #[test]
    fn ore_examples() {
        assert_eq!(ore_cycle_check(&cycle(4)), Ok(true));
        assert_eq!(ore_cycle_check(&path(4)), Ok(false));
        assert_eq!(ore_cycle_check(&m_graph(2, 9)), Ok(false));
        assert!(ore_cycle_check(&path(2)).is_err());

        assert_eq!(ore_hamconnected_check(&build_complete(4).unwrap()), OreConnectedOutcome::Holds);
        assert_eq!(ore_hamconnected_check(&cycle(5)), OreConnectedOutcome::Fails);
        assert_eq!(ore_hamconnected_check(&path(5)), OreConnectedOutcome::NotTwoConnected);
    }

    #[test]
    fn ore_hamconnected_on_clique_core() {
        // K_2 joined with a P_3 on three "X" vertices: k = 3, l = 2. The only
        // nonadjacent pair is the two ends of the P_3, each of degree 3, and
        // 2k = 6 > k + l = 5.
        let h = Graph::from_edges(
            5,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)],
        )
        .unwrap();
        assert_eq!(h.degree(2) + h.degree(4), 6);
        assert_eq!(ore_hamconnected_check(&h), OreConnectedOutcome::Holds);
    }

    #[test]
    fn chvatal_examples() {
        let star = Graph::from_edges(4, [(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_eq!(chvatal_cycle_witness(&star).unwrap(), Some(ChvatalWitness { s: 1 }));
        assert_eq!(chvatal_cycle_witness(&build_complete(5).unwrap()).unwrap(), None);
        assert_eq!(chvatal_cycle_witness(&m_graph(2, 9)).unwrap(), Some(ChvatalWitness { s: 2 }));

        assert_eq!(
            chvatal_path_witness(&build_edgeless(2).unwrap()).unwrap(),
            Some(ChvatalWitness { s: 1 })
        );
        assert_eq!(chvatal_path_witness(&build_complete(2).unwrap()).unwrap(), None);
        let n15 = build_extremal(&ExtremalSpec::new(Family::N, 1, 5).unwrap()).unwrap().0;
        assert_eq!(chvatal_path_witness(&n15).unwrap(), Some(ChvatalWitness { s: 2 }));
    }

    #[test]
    fn unwinding_c4() {
        let c4 = cycle(4);
        let (k4, trace) = k_closure(&c4, 4);
        assert!(k4.is_complete());
        for start in [[0, 1, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]] {
            let out = cycle_from_closure(&c4, &trace, &start).unwrap();
            assert!(c4.is_hamiltonian_sequence(&out, true), "{out:?}");
        }
        let empty = ClosureTrace { threshold: 4, added_edges: vec![] };
        assert_eq!(cycle_from_closure(&c4, &empty, &[0, 1, 2, 3]).unwrap(), vec![0, 1, 2, 3]);
        assert!(matches!(
            cycle_from_closure(&c4, &ClosureTrace { threshold: 3, added_edges: vec![] }, &[0, 1, 2, 3]),
            Err(ClosureError::Threshold { .. })
        ));
    }

    #[test]
    fn unwinding_path() {
        let p = path(5);
        let (c, trace) = k_closure(&p, 4);
        assert!(c.is_hamiltonian_sequence(&[0, 1, 2, 3, 4], false));
        let order: Vec<usize> = vec![4, 2, 0, 1, 3];
        if c.is_hamiltonian_sequence(&order, false) {
            let out = path_from_closure(&p, &trace, &order).unwrap();
            assert!(p.is_hamiltonian_sequence(&out, false));
        }
        let out = path_from_closure(&p, &trace, &[0, 1, 2, 3, 4]).unwrap();
        assert!(p.is_hamiltonian_sequence(&out, false));
    }
}
