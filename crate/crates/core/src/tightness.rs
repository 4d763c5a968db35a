//! Near-extremal constructions showing the order bounds are almost sharp, and
//! a scanner locating where the strict spectral bounds start to hold.
//!
//! The test vectors live in Q(√R): every entry is a rational multiple of one
//! shared square root, so norms and Rayleigh quotients are exact rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{build_extremal, ExtremalSpec, Family, Graph, GraphError};
use crate::spectral::exact::{int, rat, rational_string, to_f64};
use crate::spectral::{lambda_at_least, spectral_radius, SpectralError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TightnessError {
    #[error("k must be at least 2, got {0}")]
    SmallK(usize),
    #[error("vertex {0} lies in X; deleting an edge there drops the minimum degree")]
    VertexInX(usize),
    #[error("deleting {{{0}, {1}}} drops the minimum degree below k")]
    DegreeDrop(usize, usize),
    #[error("scan supports the families M and N only, not {0}")]
    ScanFamily(Family),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Vector whose `i`-th entry is `coeffs[i]·√radicand`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadicalVector {
    pub radicand: BigRational,
    pub coeffs: Vec<BigRational>,
}

impl RadicalVector {
    pub fn norm_squared(&self) -> BigRational {
        &self.radicand * self.coeffs.iter().map(|c| c * c).sum::<BigRational>()
    }

    /// ⟨A(g)v, v⟩ / ⟨v, v⟩; the radical cancels.
    pub fn rayleigh(&self, g: &Graph) -> BigRational {
        let den: BigRational = self.coeffs.iter().map(|c| c * c).sum();
        let mut num = BigRational::zero();
        for (a, b) in g.edges() {
            num += &self.coeffs[a] * &self.coeffs[b];
        }
        num * int(2) / den
    }

    pub fn entry_f64(&self, i: usize) -> f64 {
        to_f64(&self.coeffs[i]) * to_f64(&self.radicand).sqrt()
    }
}

/// Which pair of classes the deleted edge joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DeletionOrbit {
    YY,
    YZ,
    ZZ,
}

pub const ORBITS: [DeletionOrbit; 3] = [DeletionOrbit::YY, DeletionOrbit::YZ, DeletionOrbit::ZZ];

/// Representative edge of `orbit` in the canonical build of `spec`, if the
/// classes are large enough.
pub fn orbit_edge(spec: &ExtremalSpec, orbit: DeletionOrbit) -> Option<(usize, usize)> {
    let (xs, ys, zs) = spec.class_sizes();
    let (y0, z0) = (xs, xs + ys);
    match orbit {
        DeletionOrbit::YY if ys >= 2 => Some((y0, y0 + 1)),
        DeletionOrbit::YZ if ys >= 1 && zs >= 1 => Some((y0, z0)),
        DeletionOrbit::ZZ if zs >= 2 => Some((z0, z0 + 1)),
        _ => None,
    }
}

/// `spec` with the `orbit` edge deleted, provided the minimum degree stays at least k.
pub fn admissible_deletion(spec: &ExtremalSpec, orbit: DeletionOrbit) -> Option<Graph> {
    let (u, v) = orbit_edge(spec, orbit)?;
    let (g, _) = build_extremal(spec).ok()?;
    let h = g.without_edge(u, v).ok()?;
    (h.min_degree() >= spec.k).then_some(h)
}

/// Proper subgraph of the base family graph used by the construction: one
/// edge inside Y∪Z removed.
fn construction_graph(family: Family, k: usize, n: usize, u: usize, v: usize) -> Result<Graph, TightnessError> {
    if k < 2 {
        return Err(TightnessError::SmallK(k));
    }
    let spec = ExtremalSpec::new(family, k, n)?;
    let (g, part) = build_extremal(&spec)?;
    for w in [u, v] {
        if part.x.contains(&w) {
            return Err(TightnessError::VertexInX(w));
        }
    }
    let h = g.without_edge(u, v)?;
    if h.min_degree() < k {
        return Err(TightnessError::DegreeDrop(u, v));
    }
    Ok(h)
}

/// M_k(n) minus the edge `{u, v}` with `u, v ∈ Y ∪ Z`.
pub fn prop1_graph(k: usize, n: usize, u: usize, v: usize) -> Result<Graph, TightnessError> {
    construction_graph(Family::M, k, n, u, v)
}

/// N_k(n) minus the edge `{u, v}` with `u, v ∈ Y ∪ Z`.
pub fn prop2_graph(k: usize, n: usize, u: usize, v: usize) -> Result<Graph, TightnessError> {
    construction_graph(Family::N, k, n, u, v)
}

/// Unit vector with `x = 2/(k²√R)` on X and `y = 1/√R` on Y∪Z, `R = n − k + 4/k³`.
pub fn prop1_vector(k: usize, n: usize) -> RadicalVector {
    let (ki, ni) = (k as i64, n as i64);
    let r = int(ni - ki) + rat(4, ki * ki * ki);
    let x = rat(2, ki * ki) / &r;
    let y = BigRational::one() / &r;
    let coeffs = (0..n).map(|i| if i < k { x.clone() } else { y.clone() }).collect();
    RadicalVector { radicand: r, coeffs }
}

/// Unit vector with `x = 2/(k(k+1)√R)` on X and `y = 1/√R` on Y∪Z,
/// `R = n − k − 1 + 4/(k²(k+1))`.
pub fn prop2_vector(k: usize, n: usize) -> RadicalVector {
    let (ki, ni) = (k as i64, n as i64);
    let r = int(ni - ki - 1) + rat(4, ki * ki * (ki + 1));
    let x = rat(2, ki * (ki + 1)) / &r;
    let y = BigRational::one() / &r;
    let coeffs = (0..n).map(|i| if i <= k { x.clone() } else { y.clone() }).collect();
    RadicalVector { radicand: r, coeffs }
}

/// Largest `n` of the construction range: `k³/2 + k + 1` (M) or
/// `k³/2 + k²/2 + k + 2` (N), rounded down.
pub fn construction_n_max(family: Family, k: usize) -> usize {
    let k3 = k * k * k;
    match family {
        Family::N => (k3 + k * k) / 2 + k + 2,
        _ => k3 / 2 + k + 1,
    }
}

/// Smallest `n` covered by the strict-bound theorem: `k³/2 + k + 4` (M, L) or
/// `k³/2 + k²/2 + k + 5` (N, SPLIT).
pub fn theorem_n_bound(family: Family, k: usize) -> BigRational {
    let ki = k as i64;
    match family {
        Family::M | Family::L => rat(ki * ki * ki + 2 * ki + 8, 2),
        Family::N | Family::Split => rat(ki * ki * ki + ki * ki + 2 * ki + 10, 2),
    }
}

/// Spectral threshold of the strict-bound theorem for `family`.
pub fn family_threshold(family: Family, k: usize, n: usize) -> BigRational {
    match family {
        Family::M | Family::L => int(n as i64 - k as i64 - 1),
        Family::N | Family::Split => int(n as i64 - k as i64 - 2),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessReport {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub construction: DeletionOrbit,
    pub deleted: (usize, usize),
    #[serde(serialize_with = "ser_rat")]
    pub norm_squared: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub rayleigh: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub closed_form: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub threshold: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub margin: BigRational,
    pub in_range: bool,
    #[serde(serialize_with = "ser_rat")]
    pub lambda_lo: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub lambda_hi: BigRational,
    /// λ(G) ≥ threshold, proven.
    pub at_least_threshold: bool,
    /// λ_lo > threshold, i.e. strictness certified.
    pub strict: bool,
}

fn ser_rat<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

fn prop_closed_form(family: Family, k: usize, n: usize, r: &BigRational) -> BigRational {
    let (ki, ni) = (k as i64, n as i64);
    match family {
        Family::M => {
            let c = rat(4, ki * ki * ki) / r;
            int(ni - ki - 1) - c * (int(ni - ki - 1) - rat(ki * ki * ki, 2))
        }
        _ => {
            let c = rat(4, ki * ki * (ki + 1)) / r;
            int(ni - ki - 2) - c * (int(ni - ki - 2) - rat(ki * ki * (ki + 1), 2))
        }
    }
}

fn prop_verify(family: Family, k: usize, n: usize) -> Result<TightnessReport, TightnessError> {
    if k < 2 {
        return Err(TightnessError::SmallK(k));
    }
    let spec = ExtremalSpec::new(family, k, n)?;
    let orbit = if orbit_edge(&spec, DeletionOrbit::ZZ).is_some() { DeletionOrbit::ZZ } else { DeletionOrbit::YY };
    let (u, v) = orbit_edge(&spec, orbit).expect("k >= 2 gives |Y| >= 2");
    let g = construction_graph(family, k, n, u, v)?;
    let vec = match family {
        Family::M => prop1_vector(k, n),
        _ => prop2_vector(k, n),
    };
    let rayleigh = vec.rayleigh(&g);
    let closed_form = prop_closed_form(family, k, n, &vec.radicand);
    let threshold = family_threshold(family, k, n);
    let est = spectral_radius(&g, &crate::spectral::default_tolerance())?;
    let at_least = est.lambda_lo >= threshold || lambda_at_least(&g, &threshold);
    Ok(TightnessReport {
        family,
        k,
        n,
        construction: orbit,
        deleted: (u, v),
        norm_squared: vec.norm_squared(),
        margin: &rayleigh - &threshold,
        rayleigh,
        closed_form,
        in_range: n <= construction_n_max(family, k),
        strict: est.lambda_lo > threshold,
        threshold,
        lambda_lo: est.lambda_lo,
        lambda_hi: est.lambda_hi,
        at_least_threshold: at_least,
    })
}

/// Rayleigh quotient of the unit test vector on M_k(n) minus one Y∪Z edge,
/// against `n − k − 1`.
pub fn prop1_verify(k: usize, n: usize) -> Result<TightnessReport, TightnessError> {
    prop_verify(Family::M, k, n)
}

/// Same for N_k(n), against `n − k − 2`.
pub fn prop2_verify(k: usize, n: usize) -> Result<TightnessReport, TightnessError> {
    prop_verify(Family::N, k, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// Every admissible deletion is certified below the threshold.
    Theorem,
    /// Some admissible deletion reaches the threshold.
    Proposition,
    /// Some interval could not be separated from the threshold.
    Unresolved,
    /// No edge can be deleted without lowering the minimum degree.
    NoDeletion,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitResult {
    pub orbit: DeletionOrbit,
    #[serde(serialize_with = "ser_rat")]
    pub lambda_lo: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub lambda_hi: BigRational,
    /// `Some(true)` at or above the threshold, `Some(false)` below, `None` unresolved.
    pub reaches_threshold: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    #[serde(serialize_with = "ser_rat")]
    pub threshold: BigRational,
    pub orbits: Vec<OrbitResult>,
    pub regime: Regime,
}

impl ScanRow {
    pub fn max_lambda_lo(&self) -> Option<&BigRational> {
        self.orbits.iter().map(|o| &o.lambda_lo).max()
    }

    pub fn max_lambda_hi(&self) -> Option<&BigRational> {
        self.orbits.iter().map(|o| &o.lambda_hi).max()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub rows: Vec<ScanRow>,
    /// Least scanned `n` from which every row is in the theorem regime.
    pub crossover: Option<usize>,
    /// Largest scanned `n` in the proposition regime.
    pub last_proposition: Option<usize>,
    #[serde(serialize_with = "ser_rat")]
    pub theorem_bound: BigRational,
    /// `⌈theorem_bound⌉ − crossover`.
    pub gap: Option<i64>,
}

/// Certified comparison of λ(G) with `t`: interval first, exact shift test if
/// the interval straddles `t`.
pub fn compare_with_threshold(g: &Graph, t: &BigRational, tol: &BigRational) -> Result<OrbitCompare, SpectralError> {
    let est = match spectral_radius(g, tol) {
        Ok(e) => (e.lambda_lo, e.lambda_hi),
        Err(SpectralError::NotConverged { lo, hi, .. }) => (lo, hi),
        Err(e) => return Err(e),
    };
    let reaches = if est.0 >= *t {
        Some(true)
    } else if est.1 < *t {
        Some(false)
    } else {
        Some(lambda_at_least(g, t))
    };
    Ok(OrbitCompare { lambda_lo: est.0, lambda_hi: est.1, reaches })
}

pub struct OrbitCompare {
    pub lambda_lo: BigRational,
    pub lambda_hi: BigRational,
    pub reaches: Option<bool>,
}

/// One row of the scan: every admissible single deletion of `spec`, orbit
/// representatives only, compared with the family threshold.
pub fn scan_row(spec: &ExtremalSpec, tol: &BigRational) -> Result<ScanRow, TightnessError> {
    let threshold = family_threshold(spec.family, spec.k, spec.n);
    let mut orbits = Vec::new();
    for orbit in ORBITS {
        if let Some(g) = admissible_deletion(spec, orbit) {
            let c = compare_with_threshold(&g, &threshold, tol)?;
            orbits.push(OrbitResult {
                orbit,
                lambda_lo: c.lambda_lo,
                lambda_hi: c.lambda_hi,
                reaches_threshold: c.reaches,
            });
        }
    }
    let regime = if orbits.is_empty() {
        Regime::NoDeletion
    } else if orbits.iter().any(|o| o.reaches_threshold == Some(true)) {
        Regime::Proposition
    } else if orbits.iter().all(|o| o.reaches_threshold == Some(false)) {
        Regime::Theorem
    } else {
        Regime::Unresolved
    };
    Ok(ScanRow { family: spec.family, k: spec.k, n: spec.n, threshold, orbits, regime })
}

/// Scans `n` over `n_range` (orders below `2k + 1` are skipped).
pub fn threshold_scan(
    family: Family,
    k: usize,
    n_range: std::ops::RangeInclusive<usize>,
    tol: &BigRational,
) -> Result<ScanSummary, TightnessError> {
    if !matches!(family, Family::M | Family::N) {
        return Err(TightnessError::ScanFamily(family));
    }
    let ns: Vec<usize> = n_range.filter(|&n| n >= 2 * k + 1).collect();
    let rows: Vec<ScanRow> = ns
        .par_iter()
        .map(|&n| scan_row(&ExtremalSpec::new(family, k, n)?, tol))
        .collect::<Result<_, _>>()?;
    let mut crossover = None;
    for row in rows.iter().rev() {
        if row.regime != Regime::Theorem {
            break;
        }
        crossover = Some(row.n);
    }
    let last_proposition = rows.iter().filter(|r| r.regime == Regime::Proposition).map(|r| r.n).max();
    let theorem_bound = theorem_n_bound(family, k);
    let ceil = theorem_bound.ceil().to_integer();
    let gap = crossover.map(|c| i64::try_from(ceil).expect("small bound") - c as i64);
    Ok(ScanSummary { rows, crossover, last_proposition, theorem_bound, gap })
}

#[derive(Serialize)]
struct CsvRow {
    family: Family,
    k: usize,
    n: usize,
    threshold: String,
    max_lambda_lo: String,
    max_lambda_hi: String,
    max_lambda_approx: Option<f64>,
    regime: Regime,
}

/// CSV table with one line per scanned order; header only when empty.
pub fn scan_to_csv(rows: &[ScanRow]) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
    w.write_record(["family", "k", "n", "threshold", "max_lambda_lo", "max_lambda_hi", "max_lambda_approx", "regime"])?;
    for r in rows {
        w.serialize(CsvRow {
            family: r.family,
            k: r.k,
            n: r.n,
            threshold: rational_string(&r.threshold),
            max_lambda_lo: r.max_lambda_lo().map(rational_string).unwrap_or_default(),
            max_lambda_hi: r.max_lambda_hi().map(rational_string).unwrap_or_default(),
            max_lambda_approx: r.max_lambda_lo().map(to_f64),
            regime: r.regime,
        })?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// CSV table of construction reports.
pub fn reports_to_csv(reports: &[TightnessReport]) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
    w.write_record([
        "family", "k", "n", "construction", "norm_squared", "rayleigh", "threshold", "margin", "in_range", "strict",
    ])?;
    for r in reports {
        w.write_record([
            r.family.to_string(),
            r.k.to_string(),
            r.n.to_string(),
            format!("{:?}", r.construction),
            rational_string(&r.norm_squared),
            rational_string(&r.rayleigh),
            rational_string(&r.threshold),
            rational_string(&r.margin),
            r.in_range.to_string(),
            r.strict.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::default_tolerance;

    #[test]
    fn prop1_examples() {
        let r = prop1_verify(2, 7).unwrap();
        assert_eq!(r.rayleigh, int(4));
        assert_eq!(r.margin, int(0));
        assert!(r.strict);
        let r = prop1_verify(2, 5).unwrap();
        assert_eq!(r.rayleigh, int(2) + rat(2, 7));
        assert_eq!(r.rayleigh, r.closed_form);
        let r = prop1_verify(3, 10).unwrap();
        assert!(r.margin > int(0));
    }

    #[test]
    fn prop1_vector_entries() {
        let v = prop1_vector(2, 7);
        assert_eq!(v.radicand, rat(11, 2));
        assert_eq!(v.norm_squared(), int(1));
        assert_eq!(&v.coeffs[0] / &v.coeffs[2], rat(1, 2));
        assert!(v.coeffs.iter().all(|c| *c > int(0)));
        let v = prop1_vector(2, 5);
        assert_eq!(&v.coeffs[0] / &v.coeffs[4], rat(1, 2));
    }

    #[test]
    fn prop1_graph_checks() {
        let g = prop1_graph(2, 7, 5, 6).unwrap();
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.size() + 1, ExtremalSpec::new(Family::M, 2, 7).unwrap().edge_count());
        assert_eq!(prop1_graph(2, 7, 0, 5), Err(TightnessError::VertexInX(0)));
        let g = prop1_graph(3, 9, 3, 6).unwrap();
        assert_eq!(g.size() + 1, ExtremalSpec::new(Family::M, 3, 9).unwrap().edge_count());
    }

    #[test]
    fn prop2_examples() {
        let r = prop2_verify(2, 9).unwrap();
        assert!(r.margin > int(0));
        let r = prop2_verify(2, 10).unwrap();
        assert_eq!(r.margin, int(0));
        assert_eq!(prop2_vector(3, 12).norm_squared(), int(1));
        assert_eq!(construction_n_max(Family::N, 2), 10);
        assert_eq!(construction_n_max(Family::M, 3), 17);
    }

    #[test]
    fn orbit_representatives_cover_all_deletions() {
        // Every admissible deletion of N_2(9) has the spectral radius of its orbit representative.
        let spec = ExtremalSpec::new(Family::N, 2, 9).unwrap();
        let (g, part) = build_extremal(&spec).unwrap();
        let tol = default_tolerance();
        let reps: Vec<_> = ORBITS
            .iter()
            .filter_map(|&o| admissible_deletion(&spec, o))
            .map(|h| spectral_radius(&h, &tol).unwrap())
            .collect();
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v).unwrap();
            if h.min_degree() < 2 {
                assert!(part.x.contains(&u) || part.x.contains(&v));
                continue;
            }
            let e = spectral_radius(&h, &tol).unwrap();
            assert!(reps.iter().any(|r| r.lambda_lo <= e.lambda_hi && e.lambda_lo <= r.lambda_hi));
        }
    }

    #[test]
    fn scan_small_m() {
        let s = threshold_scan(Family::M, 2, 5..=5, &default_tolerance()).unwrap();
        assert_eq!(s.rows[0].regime, Regime::Proposition);
        let empty = threshold_scan(Family::M, 2, 9..=8, &default_tolerance()).unwrap();
        assert!(empty.rows.is_empty());
        assert_eq!(scan_to_csv(&empty.rows).unwrap().lines().count(), 1);
        assert!(threshold_scan(Family::L, 2, 5..=6, &default_tolerance()).is_err());
    }
}
