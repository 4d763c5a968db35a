//! Theorem engines: spectral sufficient conditions for Hamiltonian cycles and
//! paths, exceptional-family recognition, and certificate production.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::{
    chvatal_cycle_witness, chvatal_path_witness, cycle_from_closure, k_closure, ore_cycle_check,
    ore_path_check, path_from_closure,
};
use crate::graph::{build_extremal, ExtremalSpec, Family, Graph, Partition};
use crate::oracle::{self, DP_LIMIT};
use crate::spectral::bounds::{edge_bound_diagnostic, edge_bound_path_diagnostic};
use crate::spectral::exact::{int, rat};
use crate::spectral::quotient::{quotient_lambda, Deletion};
use crate::spectral::{lambda_at_least, spectral_radius, SpectralError, SpectralEstimate};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertifierError {
    #[error("minimum degree {delta} is below k = {k}")]
    DegreeBelowK { k: usize, delta: usize },
    #[error("{0} requires k >= 1")]
    KZero(Theorem),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Cycle,
    Path,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cycle" => Ok(Mode::Cycle),
            "path" => Ok(Mode::Path),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "mtc")]
    Mtc,
    #[serde(rename = "mtp")]
    Mtp,
    #[serde(rename = "li-ning-cycle")]
    LiNingCycle,
    #[serde(rename = "li-ning-path")]
    LiNingPath,
    #[serde(rename = "ore-cycle")]
    OreCycle,
    #[serde(rename = "ore-path")]
    OrePath,
    #[serde(rename = "chvatal-cycle")]
    ChvatalCycle,
    #[serde(rename = "chvatal-path")]
    ChvatalPath,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Mtc => "mtc",
            Theorem::Mtp => "mtp",
            Theorem::LiNingCycle => "li-ning-cycle",
            Theorem::LiNingPath => "li-ning-path",
            Theorem::OreCycle => "ore-cycle",
            Theorem::OrePath => "ore-path",
            Theorem::ChvatalCycle => "chvatal-cycle",
            Theorem::ChvatalPath => "chvatal-path",
        }
    }

    pub fn mode(self) -> Mode {
        match self {
            Theorem::Mtc | Theorem::LiNingCycle | Theorem::OreCycle | Theorem::ChvatalCycle => Mode::Cycle,
            _ => Mode::Path,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    CertifiedHamiltonianCycle,
    CertifiedHamiltonianPath,
    Exceptional(Family),
    Inconclusive,
}

impl VerdictKind {
    pub fn name(self) -> &'static str {
        match self {
            VerdictKind::CertifiedHamiltonianCycle => "CertifiedHamiltonianCycle",
            VerdictKind::CertifiedHamiltonianPath => "CertifiedHamiltonianPath",
            VerdictKind::Exceptional(_) => "Exceptional",
            VerdictKind::Inconclusive => "Inconclusive",
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(self, VerdictKind::CertifiedHamiltonianCycle | VerdictKind::CertifiedHamiltonianPath)
    }
}

/// Outcome of comparing λ(G) with a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    AtLeast,
    Below,
    Undetermined,
}

/// How a comparison was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Interval,
    TightenedInterval,
    ExactShift,
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateSource {
    Oracle,
    Closure,
    /// The theorem guarantees existence but no explicit sequence was produced.
    Missing,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Premises {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    /// Least order the theorem allows, and whether `n` reaches it.
    pub n_bound: BigRational,
    pub n_bound_ok: bool,
    /// `[lo, hi]` for λ(G); absent for the purely combinatorial engines.
    pub lambda: Option<(BigRational, BigRational)>,
    /// `[lo, hi]` for the threshold; a single point except for the Li–Ning engines.
    pub threshold: Option<(BigRational, BigRational)>,
    pub comparison: Option<Comparison>,
    pub method: Option<Method>,
    /// Edge count the proofs show a non-Hamiltonian graph must reach.
    pub edge_bound: Option<BigRational>,
}

impl Premises {
    pub fn edge_bound_met(&self) -> Option<bool> {
        self.edge_bound.as_ref().map(|b| int(self.m as i64) >= *b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalMatch {
    pub family: Family,
    pub k: usize,
    pub partition: Partition,
    /// |Y|.
    pub l: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub theorem: Theorem,
    pub premises: Premises,
    pub certificate: Option<Vec<usize>>,
    pub certificate_source: Option<CertificateSource>,
    pub matched: Option<ExtremalMatch>,
    /// Failing premise for inconclusive verdicts.
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertifyOptions {
    pub tol: BigRational,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { tol: crate::spectral::default_tolerance() }
    }
}

/// Recovers the partition of `family` with parameter `k` from `g`, verified by
/// exact adjacency equality with the canonical construction.
pub fn match_family(g: &Graph, family: Family, k: usize) -> Option<ExtremalMatch> {
    let n = g.order();
    let spec = ExtremalSpec::new(family, k, n).ok()?;
    if g.size() != spec.edge_count() {
        return None;
    }
    let (xs, ys, _) = spec.class_sizes();
    let y: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    if y.len() != ys {
        return None;
    }
    let rest: Vec<usize> = (0..n).filter(|v| !y.contains(v)).collect();
    let x: Vec<usize> = match family {
        Family::M | Family::N => {
            let isolated: Vec<usize> = rest.iter().copied().filter(|&v| g.degree(v) == ys).collect();
            if isolated.len() < xs {
                return None;
            }
            isolated[..xs].to_vec()
        }
        Family::L | Family::Split => {
            let h = g.induced_subgraph(&rest);
            let comp = h.components().into_iter().find(|c| c.len() == xs)?;
            comp.into_iter().map(|i| rest[i]).collect()
        }
    };
    let z: Vec<usize> = rest.into_iter().filter(|v| !x.contains(v)).collect();
    let mut perm = vec![0; n];
    for (pos, &v) in x.iter().chain(&y).chain(&z).enumerate() {
        perm[v] = pos;
    }
    let (canonical, _) = build_extremal(&spec).ok()?;
    if g.relabel(&perm) != canonical {
        return None;
    }
    let l = y.len();
    Some(ExtremalMatch { family, k, partition: Partition { x, y, z }, l })
}

/// First family among M, L, N, SPLIT that `g` is, with parameter `k`.
pub fn match_extremal(g: &Graph, k: usize) -> Option<ExtremalMatch> {
    [Family::M, Family::L, Family::N, Family::Split]
        .into_iter()
        .find_map(|f| match_family(g, f, k))
}

fn resolve_k(g: &Graph, k: Option<usize>, theorem: Theorem, allow_zero: bool) -> Result<usize, CertifierError> {
    let delta = g.min_degree();
    let k = k.unwrap_or(delta);
    if k == 0 && !allow_zero {
        return Err(CertifierError::KZero(theorem));
    }
    if delta < k {
        return Err(CertifierError::DegreeBelowK { k, delta });
    }
    Ok(k)
}

struct Decision {
    lambda: (BigRational, BigRational),
    comparison: Comparison,
    method: Method,
}

fn estimate(g: &Graph, tol: &BigRational) -> Result<(BigRational, BigRational), SpectralError> {
    match spectral_radius(g, tol) {
        Ok(SpectralEstimate { lambda_lo, lambda_hi, .. }) => Ok((lambda_lo, lambda_hi)),
        Err(SpectralError::NotConverged { lo, hi, .. }) => Ok((lo, hi)),
        Err(e) => Err(e),
    }
}

/// Decides λ(G) ≥ threshold, where the threshold is known to lie in `[t_lo, t_hi]`.
/// A point threshold gets an exact fallback when the interval straddles it.
fn decide(g: &Graph, t_lo: &BigRational, t_hi: &BigRational, tol: &BigRational) -> Result<Decision, SpectralError> {
    let first = estimate(g, tol)?;
    let settle = |(lo, hi): &(BigRational, BigRational)| {
        if lo >= t_hi {
            Some(Comparison::AtLeast)
        } else if hi < t_lo {
            Some(Comparison::Below)
        } else {
            None
        }
    };
    if let Some(c) = settle(&first) {
        return Ok(Decision { lambda: first, comparison: c, method: Method::Interval });
    }
    let tighter = tol / int(1000);
    let second = estimate(g, &tighter)?;
    if let Some(c) = settle(&second) {
        return Ok(Decision { lambda: second, comparison: c, method: Method::TightenedInterval });
    }
    if t_lo == t_hi {
        let c = if lambda_at_least(g, t_lo) { Comparison::AtLeast } else { Comparison::Below };
        return Ok(Decision { lambda: second, comparison: c, method: Method::ExactShift });
    }
    Ok(Decision { lambda: second, comparison: Comparison::Undetermined, method: Method::Unresolved })
}

/// Hamiltonian cycle or path of `g` for a certified verdict, validated edge by edge.
fn produce_certificate(g: &Graph, mode: Mode) -> (Option<Vec<usize>>, CertificateSource) {
    let n = g.order();
    let closed = mode == Mode::Cycle;
    let found = if n <= DP_LIMIT {
        let seq = match mode {
            Mode::Cycle => oracle::ham_cycle(g).ok().flatten(),
            Mode::Path => oracle::ham_path(g).ok().flatten(),
        };
        seq.map(|s| (s, CertificateSource::Oracle))
    } else {
        let identity: Vec<usize> = (0..n).collect();
        let seq = match mode {
            Mode::Cycle => {
                let (cl, trace) = k_closure(g, n);
                cl.is_complete().then(|| cycle_from_closure(g, &trace, &identity).ok()).flatten()
            }
            Mode::Path => {
                let (cl, trace) = k_closure(g, n - 1);
                cl.is_complete().then(|| path_from_closure(g, &trace, &identity).ok()).flatten()
            }
        };
        seq.map(|s| (s, CertificateSource::Closure))
    };
    match found {
        Some((seq, src)) if g.is_hamiltonian_sequence(&seq, closed) => (Some(seq), src),
        _ => (None, CertificateSource::Missing),
    }
}

fn certified_kind(mode: Mode) -> VerdictKind {
    match mode {
        Mode::Cycle => VerdictKind::CertifiedHamiltonianCycle,
        Mode::Path => VerdictKind::CertifiedHamiltonianPath,
    }
}

fn base_premises(g: &Graph, k: usize, n_bound: BigRational) -> Premises {
    let n = g.order();
    Premises {
        k,
        n,
        m: g.size(),
        min_degree: g.min_degree(),
        n_bound_ok: int(n as i64) >= n_bound,
        n_bound,
        lambda: None,
        threshold: None,
        comparison: None,
        method: None,
        edge_bound: None,
    }
}

/// Shared flow of the spectral engines once the threshold and exceptions are fixed.
fn spectral_engine(
    g: &Graph,
    theorem: Theorem,
    k: usize,
    n_bound: BigRational,
    threshold: (BigRational, BigRational),
    exceptions: &[Family],
    opts: &CertifyOptions,
) -> Result<Verdict, CertifierError> {
    let n = g.order();
    let mode = theorem.mode();
    let mut premises = base_premises(g, k, n_bound);
    if k >= 1 && n > k {
        premises.edge_bound = Some(match mode {
            Mode::Cycle => edge_bound_diagnostic(n, k),
            Mode::Path => edge_bound_path_diagnostic(n, k),
        });
    }
    let decision = decide(g, &threshold.0, &threshold.1, &opts.tol)?;
    premises.lambda = Some(decision.lambda);
    premises.threshold = Some(threshold);
    premises.comparison = Some(decision.comparison);
    premises.method = Some(decision.method);
    let mut verdict = Verdict {
        kind: VerdictKind::Inconclusive,
        theorem,
        premises,
        certificate: None,
        certificate_source: None,
        matched: None,
        reason: None,
    };
    if !verdict.premises.n_bound_ok {
        verdict.reason = Some(format!("order {n} is below the n-bound {}", verdict.premises.n_bound));
        return Ok(verdict);
    }
    let matched = exceptions.iter().find_map(|&f| match_family(g, f, k));
    if let Some(m) = matched {
        // An exceptional graph is named whenever it is the input; for the
        // Li–Ning engines this also settles the tie λ(G) = threshold.
        verdict.kind = VerdictKind::Exceptional(m.family);
        verdict.matched = Some(m);
        return Ok(verdict);
    }
    match decision.comparison {
        Comparison::AtLeast => {
            let (cert, src) = produce_certificate(g, mode);
            verdict.kind = certified_kind(mode);
            verdict.certificate = cert;
            verdict.certificate_source = Some(src);
        }
        Comparison::Below => {
            verdict.reason = Some("spectral radius below the threshold".into());
        }
        Comparison::Undetermined => {
            verdict.reason = Some("spectral radius indistinguishable from the threshold".into());
        }
    }
    Ok(verdict)
}

/// λ(G) ≥ n − k − 1 with δ(G) ≥ k and 2n ≥ k³ + 2k + 8 gives a Hamiltonian
/// cycle unless G is L_k(n) or M_k(n).
pub fn certify_cycle(g: &Graph, k: Option<usize>, opts: &CertifyOptions) -> Result<Verdict, CertifierError> {
    let k = resolve_k(g, k, Theorem::Mtc, false)?;
    let (n, ki) = (g.order() as i64, k as i64);
    let n_bound = rat(ki * ki * ki + 2 * ki + 8, 2);
    let t = int(n - ki - 1);
    // L_1(n) and M_1(n) coincide; M is listed first so k = 1 reports M.
    spectral_engine(g, Theorem::Mtc, k, n_bound, (t.clone(), t), &[Family::M, Family::L], opts)
}

/// λ(G) ≥ n − k − 2 with δ(G) ≥ k and 2n ≥ k³ + k² + 2k + 10 gives a
/// Hamiltonian path unless G is N_k(n) or K_{n−k−1} + K_{k+1}.
pub fn certify_path(g: &Graph, k: Option<usize>, opts: &CertifyOptions) -> Result<Verdict, CertifierError> {
    let k = resolve_k(g, k, Theorem::Mtp, false)?;
    let (n, ki) = (g.order() as i64, k as i64);
    let n_bound = rat(ki * ki * ki + ki * ki + 2 * ki + 10, 2);
    let t = int(n - ki - 2);
    spectral_engine(g, Theorem::Mtp, k, n_bound, (t.clone(), t), &[Family::N, Family::Split], opts)
}

/// λ(G) ≥ λ(M_k(n)) (cycle) or λ(N_k(n)) (path) for large enough `n`.
pub fn certify_li_ning(g: &Graph, k: Option<usize>, mode: Mode, opts: &CertifyOptions) -> Result<Verdict, CertifierError> {
    let theorem = match mode {
        Mode::Cycle => Theorem::LiNingCycle,
        Mode::Path => Theorem::LiNingPath,
    };
    let k = resolve_k(g, k, theorem, mode == Mode::Path)?;
    let n = g.order();
    let ki = k as i64;
    let (n_bound, family) = match mode {
        Mode::Cycle => (std::cmp::max(int(6 * ki + 5), rat(ki * ki + 6 * ki + 4, 2)), Family::M),
        Mode::Path => (std::cmp::max(int(6 * ki + 10), rat(ki * ki + 7 * ki + 8, 2)), Family::N),
    };
    let Ok(spec) = ExtremalSpec::new(family, k, n) else {
        let mut premises = base_premises(g, k, n_bound);
        premises.n_bound_ok = false;
        return Ok(Verdict {
            kind: VerdictKind::Inconclusive,
            theorem,
            premises,
            certificate: None,
            certificate_source: None,
            matched: None,
            reason: Some(format!("{family}_{k}({n}) is not defined")),
        });
    };
    let q = quotient_lambda(&spec, Deletion::None)?;
    spectral_engine(g, theorem, k, n_bound, (q.lambda_lo, q.lambda_hi), &[family], opts)
}

/// Ore's condition (cycle: d(u) + d(v) ≥ n; path: ≥ n − 1 for nonadjacent pairs).
pub fn certify_ore(g: &Graph, mode: Mode) -> Verdict {
    let n = g.order();
    let (theorem, holds, bound) = match mode {
        Mode::Cycle => (Theorem::OreCycle, ore_cycle_check(g).unwrap_or(false), int(3)),
        Mode::Path => (Theorem::OrePath, n >= 1 && ore_path_check(g), int(1)),
    };
    combinatorial_verdict(g, theorem, holds, bound, "Ore's degree-sum condition fails")
}

/// Chvátal's degree-sequence condition, with the least obstructing `s` reported on failure.
pub fn certify_chvatal(g: &Graph, mode: Mode) -> Verdict {
    let (theorem, witness, bound) = match mode {
        Mode::Cycle => (Theorem::ChvatalCycle, chvatal_cycle_witness(g), int(3)),
        Mode::Path => (Theorem::ChvatalPath, chvatal_path_witness(g), int(2)),
    };
    let (holds, why) = match witness {
        Ok(None) => (true, String::new()),
        Ok(Some(w)) => (false, format!("degree sequence obstructed at s = {}", w.s)),
        Err(e) => (false, e.to_string()),
    };
    combinatorial_verdict(g, theorem, holds, bound, &why)
}

fn combinatorial_verdict(g: &Graph, theorem: Theorem, holds: bool, n_bound: BigRational, why: &str) -> Verdict {
    let premises = base_premises(g, g.min_degree(), n_bound);
    let mut verdict = Verdict {
        kind: VerdictKind::Inconclusive,
        theorem,
        premises,
        certificate: None,
        certificate_source: None,
        matched: None,
        reason: None,
    };
    if holds && verdict.premises.n_bound_ok {
        let (cert, src) = produce_certificate(g, theorem.mode());
        verdict.kind = certified_kind(theorem.mode());
        verdict.certificate = cert;
        verdict.certificate_source = Some(src);
    } else if !verdict.premises.n_bound_ok {
        verdict.reason = Some(format!("order {} is below {}", g.order(), verdict.premises.n_bound));
    } else {
        verdict.reason = Some(why.to_string());
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, disjoint_union};

    fn extremal(f: Family, k: usize, n: usize) -> Graph {
        build_extremal(&ExtremalSpec::new(f, k, n).unwrap()).unwrap().0
    }

    fn opts() -> CertifyOptions {
        CertifyOptions::default()
    }

    #[test]
    fn matching_examples() {
        let m = match_extremal(&extremal(Family::M, 2, 9), 2).unwrap();
        assert_eq!((m.family, m.l), (Family::M, 2));
        let g = extremal(Family::M, 2, 9).without_edge(8, 7).unwrap();
        assert!(match_extremal(&g, 2).is_none());
        assert!(match_extremal(&build_complete(9).unwrap(), 2).is_none());
        let g = disjoint_union(&build_complete(6).unwrap(), &build_complete(2).unwrap());
        assert_eq!(match_extremal(&g, 1).unwrap().family, Family::Split);
    }

    #[test]
    fn matching_survives_relabeling() {
        let g = extremal(Family::L, 2, 8);
        let perm = [5, 3, 7, 0, 1, 6, 2, 4];
        let m = match_extremal(&g.relabel(&perm), 2).unwrap();
        assert_eq!((m.family, m.l), (Family::L, 1));
        let g = extremal(Family::N, 1, 5);
        let m = match_extremal(&g.relabel(&[4, 2, 0, 1, 3]), 1).unwrap();
        assert_eq!(m.family, Family::N);
    }

    #[test]
    fn cycle_examples() {
        let v = certify_cycle(&build_complete(6).unwrap(), Some(1), &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::CertifiedHamiltonianCycle);
        assert_eq!(v.certificate_source, Some(CertificateSource::Oracle));
        let v = certify_cycle(&extremal(Family::M, 1, 6), Some(1), &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::Exceptional(Family::M));
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let v = certify_cycle(&c6, Some(1), &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::Inconclusive);
        assert_eq!(v.premises.comparison, Some(Comparison::Below));
    }

    #[test]
    fn path_examples() {
        let v = certify_path(&build_complete(7).unwrap(), Some(1), &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::CertifiedHamiltonianPath);
        let g = disjoint_union(&build_complete(6).unwrap(), &build_complete(2).unwrap());
        let v = certify_path(&g, Some(1), &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::Exceptional(Family::Split));
        let v = certify_path(&extremal(Family::N, 1, 7), Some(1), &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::Exceptional(Family::N));
    }

    #[test]
    fn integer_threshold_is_reached() {
        // λ(K_5 + K_2) = 4 = n − k − 2 exactly for n = 7, k = 1.
        let g = disjoint_union(&build_complete(5).unwrap(), &build_complete(2).unwrap());
        let v = certify_path(&g, Some(1), &opts()).unwrap();
        assert_eq!(v.premises.comparison, Some(Comparison::AtLeast));
    }

    #[test]
    fn exact_fallback_inside_interval() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let tol = crate::spectral::default_tolerance();
        let (lo, _) = estimate(&p3, &(&tol / int(1000))).unwrap();
        let t = lo + rat(1, 100_000_000_000_000_000);
        let d = decide(&p3, &t, &t, &tol).unwrap();
        assert_eq!((d.comparison, d.method), (Comparison::Below, Method::ExactShift));
    }

    #[test]
    fn li_ning_examples() {
        let v = certify_li_ning(&extremal(Family::M, 2, 20), Some(2), Mode::Cycle, &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::Exceptional(Family::M));
        let v = certify_li_ning(&build_complete(20).unwrap(), Some(2), Mode::Cycle, &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::CertifiedHamiltonianCycle);
        let star = Graph::from_edges(10, (1..10).map(|i| (0, i))).unwrap();
        let v = certify_li_ning(&star, Some(0), Mode::Path, &opts()).unwrap();
        assert_eq!(v.kind, VerdictKind::Inconclusive);
        assert_eq!(v.premises.threshold.as_ref().unwrap().0, int(8));
    }

    #[test]
    fn input_errors() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(certify_cycle(&c6, Some(3), &opts()), Err(CertifierError::DegreeBelowK { k: 3, delta: 2 }));
        let star = Graph::from_edges(4, (1..4).map(|i| (0, i))).unwrap();
        assert!(certify_cycle(&star.with_edge(1, 2).unwrap(), Some(0), &opts()).is_err());
    }

    #[test]
    fn large_certificate_from_closure() {
        let v = certify_cycle(&build_complete(22).unwrap(), Some(3), &opts()).unwrap();
        assert_eq!(v.certificate_source, Some(CertificateSource::Closure));
        let v = certify_path(&build_complete(22).unwrap(), Some(1), &opts()).unwrap();
        assert_eq!(v.certificate_source, Some(CertificateSource::Closure));
        assert_eq!(v.certificate.unwrap().len(), 22);
    }

    #[test]
    fn combinatorial_engines() {
        let k5 = build_complete(5).unwrap();
        assert_eq!(certify_ore(&k5, Mode::Cycle).kind, VerdictKind::CertifiedHamiltonianCycle);
        assert_eq!(certify_chvatal(&k5, Mode::Path).kind, VerdictKind::CertifiedHamiltonianPath);
        let n15 = extremal(Family::N, 1, 5);
        assert_eq!(certify_chvatal(&n15, Mode::Path).kind, VerdictKind::Inconclusive);
    }
}
