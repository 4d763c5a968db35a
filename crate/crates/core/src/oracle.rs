//! Exact Hamiltonicity decisions for small graphs.
//!
//! Bitmask dynamic programming up to [`DP_LIMIT`] vertices, memoized
//! backtracking with degree and connectivity cuts above that, and an explicit
//! error beyond [`ORACLE_LIMIT`].

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;

pub const DP_LIMIT: usize = 20;
pub const ORACLE_LIMIT: usize = 24;
pub const HAM_CONNECTED_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle out of range: n = {n} exceeds {limit}")]
    OutOfRange { n: usize, limit: usize },
}

fn guard(g: &Graph, limit: usize) -> Result<(), OracleError> {
    if g.order() > limit {
        Err(OracleError::OutOfRange { n: g.order(), limit })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbor_mask(v)).collect()
}

/// A Hamiltonian cycle (as a vertex sequence without repetition of the first
/// vertex), or `None`. Graphs with fewer than three vertices have none.
pub fn ham_cycle(g: &Graph) -> Result<Option<Vec<usize>>, OracleError> {
    guard(g, ORACLE_LIMIT)?;
    if g.order() <= DP_LIMIT {
        Ok(ham_cycle_dp(g))
    } else {
        Ok(ham_cycle_backtrack(g))
    }
}

/// A Hamiltonian path, or `None`.
pub fn ham_path(g: &Graph) -> Result<Option<Vec<usize>>, OracleError> {
    guard(g, ORACLE_LIMIT)?;
    if g.order() <= DP_LIMIT {
        Ok(ham_path_dp(g))
    } else {
        Ok(ham_path_backtrack(g))
    }
}

fn cycle_trivially_absent(g: &Graph) -> bool {
    g.order() < 3 || g.min_degree() < 2 || !g.is_connected()
}

fn path_trivially_absent(g: &Graph) -> bool {
    g.order() == 0 || !g.is_connected()
}

/// Ends reachable from `start`: `dp[mask]` has bit `v` iff some path starting
/// at `start` visits exactly `mask` and ends at `v`. Masks without `start`
/// stay zero.
fn reach_from(adj: &[u64], start: usize) -> Vec<u32> {
    let n = adj.len();
    let mut dp = vec![0u32; 1 << n];
    dp[1 << start] = 1 << start;
    for mask in 0..(1usize << n) {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = adj[v] as u32 & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }
    dp
}

/// Walks a DP table back from `(full, end)` to a vertex sequence.
fn unwind(adj: &[u64], dp: &[u32], full: usize, mut end: usize) -> Vec<usize> {
    let mut seq = vec![end];
    let mut mask = full;
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << end);
        let cand = dp[prev_mask] & adj[end] as u32;
        let prev = cand.trailing_zeros() as usize;
        seq.push(prev);
        mask = prev_mask;
        end = prev;
    }
    seq.reverse();
    seq
}

pub fn ham_cycle_dp(g: &Graph) -> Option<Vec<usize>> {
    assert!(g.order() <= DP_LIMIT);
    if cycle_trivially_absent(g) {
        return None;
    }
    let adj = masks(g);
    let full = (1usize << g.order()) - 1;
    let dp = reach_from(&adj, 0);
    let closing = dp[full] & adj[0] as u32;
    if closing == 0 {
        return None;
    }
    Some(unwind(&adj, &dp, full, closing.trailing_zeros() as usize))
}

pub fn ham_path_dp(g: &Graph) -> Option<Vec<usize>> {
    assert!(g.order() <= DP_LIMIT);
    if path_trivially_absent(g) {
        return None;
    }
    let n = g.order();
    let adj = masks(g);
    let full = (1usize << n) - 1;
    // Ends of Hamiltonian paths of each vertex subset, any start.
    let mut dp = vec![0u32; 1 << n];
    for v in 0..n {
        dp[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut ends = 0u32;
        let mut m = mask as u32;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if dp[mask & !(1 << v)] & adj[v] as u32 != 0 {
                ends |= 1 << v;
            }
        }
        dp[mask] = ends;
    }
    if dp[full] == 0 {
        return None;
    }
    Some(unwind(&adj, &dp, full, dp[full].trailing_zeros() as usize))
}

struct Search<'a> {
    adj: &'a [u64],
    full: u64,
    closed: bool,
    start: usize,
    /// `(visited, end)` states already known to lead nowhere.
    dead: HashSet<u64>,
}

impl Search<'_> {
    /// Cheap necessary conditions for completing the walk from `end`: the
    /// unvisited vertices induce a connected graph, and each needs two usable
    /// neighbours (one for at most one future path end).
    fn feasible(&self, visited: u64, end: usize) -> bool {
        let open = self.full & !visited;
        let mut usable = open | 1 << end;
        if self.closed {
            usable |= 1 << self.start;
        }
        let mut dead_ends = 0;
        let mut m = open;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let d = (self.adj[v] & usable).count_ones();
            if d == 0 {
                return false;
            }
            if d == 1 {
                dead_ends += 1;
                if self.closed || dead_ends > 1 {
                    return false;
                }
            }
        }
        let first = open.trailing_zeros() as usize;
        let mut seen = 1u64 << first;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & open & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == open
    }

    fn extend(&mut self, path: &mut Vec<usize>, visited: u64) -> bool {
        let end = *path.last().expect("nonempty path");
        if visited == self.full {
            return !self.closed || self.adj[end] >> self.start & 1 == 1;
        }
        let key = visited | (end as u64) << 32;
        if self.dead.contains(&key) {
            return false;
        }
        if self.feasible(visited, end) {
            let mut next = self.adj[end] & !visited;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                path.push(w);
                if self.extend(path, visited | 1 << w) {
                    return true;
                }
                path.pop();
            }
        }
        self.dead.insert(key);
        false
    }
}

pub fn ham_cycle_backtrack(g: &Graph) -> Option<Vec<usize>> {
    assert!(g.order() <= ORACLE_LIMIT);
    if cycle_trivially_absent(g) {
        return None;
    }
    let adj = masks(g);
    let mut search =
        Search { adj: &adj, full: (1u64 << g.order()) - 1, closed: true, start: 0, dead: HashSet::new() };
    let mut path = vec![0];
    search.extend(&mut path, 1).then_some(path)
}

pub fn ham_path_backtrack(g: &Graph) -> Option<Vec<usize>> {
    assert!(g.order() <= ORACLE_LIMIT);
    if path_trivially_absent(g) {
        return None;
    }
    let adj = masks(g);
    let full = (1u64 << g.order()) - 1;
    // A degree-one vertex must be an end, so start there when one exists.
    let mut starts: Vec<usize> = (0..g.order()).collect();
    starts.sort_by_key(|&v| g.degree(v));
    let mut search = Search { adj: &adj, full, closed: false, start: 0, dead: HashSet::new() };
    for s in starts {
        // Dead states depend only on (visited, end), not on the start.
        search.start = s;
        let mut path = vec![s];
        if search.extend(&mut path, 1 << s) {
            return Some(path);
        }
    }
    None
}

/// Whether every pair of distinct vertices is joined by a Hamiltonian path.
pub fn is_ham_connected(g: &Graph) -> Result<bool, OracleError> {
    guard(g, HAM_CONNECTED_LIMIT)?;
    let n = g.order();
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let adj = masks(g);
    let full = (1usize << n) - 1;
    for s in 0..n {
        let dp = reach_from(&adj, s);
        let others = full as u32 & !(1 << s);
        if dp[full] & others != others {
            return Ok(false);
        }
    }
    Ok(true)
}
