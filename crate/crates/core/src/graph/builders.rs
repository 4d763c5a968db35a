use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// K_s.
pub fn build_complete(s: usize) -> Result<Graph, GraphError> {
    if s == 0 {
        return Err(GraphError::EmptyOrder);
    }
    let mut g = Graph::empty(s);
    for u in 0..s {
        for v in u + 1..s {
            g.set(u, v);
        }
    }
    Ok(g)
}

/// The edgeless graph on `s` vertices.
pub fn build_edgeless(s: usize) -> Result<Graph, GraphError> {
    if s == 0 {
        return Err(GraphError::EmptyOrder);
    }
    Ok(Graph::empty(s))
}

/// Disjoint union with `h` shifted past `g`'s vertices.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut out = Graph::empty(off + h.order());
    for (u, v) in g.edges() {
        out.set(u, v);
    }
    for (u, v) in h.edges() {
        out.set(u + off, v + off);
    }
    out
}

/// Disjoint union plus every cross edge; `g`'s vertices come first.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut out = disjoint_union(g, h);
    for u in 0..off {
        for v in 0..h.order() {
            out.set(u, v + off);
        }
    }
    out
}

/// Sorted copy of the degree sequence; the first entry is δ(G).
pub fn degrees_ascending(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees().to_vec();
    d.sort_unstable();
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// K_1 ∨ (K_{n−k−1} + K_k)
    L,
    /// K_k ∨ (K_{n−2k} + K̄_k)
    M,
    /// K_k ∨ (K_{n−2k−1} + K̄_{k+1})
    N,
    /// K_{n−k−1} + K_{k+1}
    #[serde(rename = "SPLIT")]
    Split,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::L => "L",
            Family::M => "M",
            Family::N => "N",
            Family::Split => "SPLIT",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "L" => Ok(Family::L),
            "M" => Ok(Family::M),
            "N" => Ok(Family::N),
            "SPLIT" => Ok(Family::Split),
            other => Err(format!("unknown family `{other}` (expected L, M, N or split)")),
        }
    }
}

/// One of the extremal graphs together with its parameters.
///
/// `k = 0` is accepted for the `N` family only, where `N_0(n) = K_{n−1} + K_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub family: Family,
    pub k: usize,
    pub n: usize,
}

impl ExtremalSpec {
    pub fn new(family: Family, k: usize, n: usize) -> Result<Self, GraphError> {
        if k == 0 && family != Family::N {
            return Err(GraphError::InvalidSpec(format!("{family} requires k >= 1")));
        }
        if n < 2 * k + 1 {
            return Err(GraphError::InvalidSpec(format!(
                "{family}_{k}({n}) requires n >= 2k+1 = {}",
                2 * k + 1
            )));
        }
        if n < 2 {
            return Err(GraphError::InvalidSpec("n must be at least 2".into()));
        }
        Ok(ExtremalSpec { family, k, n })
    }

    /// Sizes of the canonical classes (X, Y, Z).
    pub fn class_sizes(&self) -> (usize, usize, usize) {
        let (k, n) = (self.k, self.n);
        match self.family {
            Family::L => (k, 1, n - k - 1),
            Family::M => (k, k, n - 2 * k),
            Family::N => (k + 1, k, n - 2 * k - 1),
            Family::Split => (k + 1, 0, n - k - 1),
        }
    }

    pub fn edge_count(&self) -> usize {
        let (x, y, z) = self.class_sizes();
        let c2 = |s: usize| s * s.saturating_sub(1) / 2;
        match self.family {
            Family::L => c2(x + 1) + c2(z + 1),
            Family::M | Family::N => c2(y + z) + x * y,
            Family::Split => c2(x) + c2(z),
        }
    }
}

impl fmt::Display for ExtremalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Split => write!(f, "K_{}+K_{}", self.n - self.k - 1, self.k + 1),
            fam => write!(f, "{}_{}({})", fam, self.k, self.n),
        }
    }
}

/// Vertex classes of an extremal graph (or of a recovered match).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

impl Partition {
    pub fn class_of(&self, v: usize) -> Option<char> {
        if self.x.contains(&v) {
            Some('X')
        } else if self.y.contains(&v) {
            Some('Y')
        } else if self.z.contains(&v) {
            Some('Z')
        } else {
            None
        }
    }

    /// Vertices in X, Y, Z order.
    pub fn ordered(&self) -> Vec<usize> {
        self.x.iter().chain(&self.y).chain(&self.z).copied().collect()
    }
}

/// Builds the extremal graph with vertices labelled X, then Y, then Z.
pub fn build_extremal(spec: &ExtremalSpec) -> Result<(Graph, Partition), GraphError> {
    let spec = ExtremalSpec::new(spec.family, spec.k, spec.n)?;
    let (xs, ys, _) = spec.class_sizes();
    let x: Vec<usize> = (0..xs).collect();
    let y: Vec<usize> = (xs..xs + ys).collect();
    let z: Vec<usize> = (xs + ys..spec.n).collect();
    let mut g = Graph::empty(spec.n);
    let clique = |g: &mut Graph, vs: &[usize]| {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                g.set(u, v);
            }
        }
    };
    match spec.family {
        Family::L => {
            let xy: Vec<usize> = x.iter().chain(&y).copied().collect();
            let yz: Vec<usize> = y.iter().chain(&z).copied().collect();
            clique(&mut g, &xy);
            clique(&mut g, &yz);
        }
        Family::M | Family::N => {
            let yz: Vec<usize> = y.iter().chain(&z).copied().collect();
            clique(&mut g, &yz);
            for &u in &x {
                for &w in &y {
                    g.set(u, w);
                }
            }
        }
        Family::Split => {
            clique(&mut g, &x);
            clique(&mut g, &z);
        }
    }
    debug_assert_eq!(g.size(), spec.edge_count());
    g.debug_check();
    Ok((g, Partition { x, y, z }))
}
