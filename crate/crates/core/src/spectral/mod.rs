//! Spectral radius of the adjacency matrix with exact, certified bounds.
//!
//! Lower bounds are exact Rayleigh quotients of rational vectors; upper bounds
//! come from an exact proof that `c·I − A` is positive definite. Floating
//! point only proposes the vector and never enters a certificate.

pub mod bounds;
pub mod exact;
pub mod psd;
pub mod quotient;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;
use exact::{ceil_to, dyadic_denominator, ten_pow_neg};
pub use psd::shift_is_positive_definite;

pub const DEFAULT_MAX_ITERATIONS: u64 = 1_000_000;

/// Default certified interval width, 10⁻¹².
pub fn default_tolerance() -> BigRational {
    ten_pow_neg(12)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("vector length {found} does not match graph order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("zero vector has no Rayleigh quotient")]
    ZeroVector,
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error(
        "no interval of the requested width after {iterations} iterations; best certified [{lo}, {hi}]"
    )]
    NotConverged { lo: BigRational, hi: BigRational, iterations: u64 },
    #[error("radicand is negative at x = {0}")]
    NegativeRadicand(BigRational),
    #[error("{0}")]
    Quotient(String),
}

/// ⟨A(G)v, v⟩ / ⟨v, v⟩, exactly.
pub fn rayleigh_quotient(g: &Graph, v: &[BigRational]) -> Result<BigRational, SpectralError> {
    if v.len() != g.order() {
        return Err(SpectralError::LengthMismatch { expected: g.order(), found: v.len() });
    }
    let den: BigRational = v.iter().map(|x| x * x).sum();
    if den.is_zero() {
        return Err(SpectralError::ZeroVector);
    }
    let mut num = BigRational::zero();
    for (a, b) in g.edges() {
        num += &v[a] * &v[b];
    }
    Ok(num * BigRational::from_integer(BigInt::from(2)) / den)
}

/// Integer-vector Rayleigh quotient; avoids rational normalisation in the hot path.
fn rayleigh_int(g: &Graph, w: &[BigInt]) -> BigRational {
    let den: BigInt = w.iter().map(|x| x * x).sum();
    let mut num = BigInt::zero();
    for (a, b) in g.edges() {
        num += &w[a] * &w[b];
    }
    BigRational::new(num * 2, den)
}

/// Certified enclosure of λ(G).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEstimate {
    pub lambda_lo: BigRational,
    pub lambda_hi: BigRational,
    /// Nonnegative vector whose exact Rayleigh quotient is `lambda_lo`;
    /// positive on the component that attains the radius.
    pub witness: Vec<BigRational>,
    pub iterations: u64,
}

impl SpectralEstimate {
    pub fn width(&self) -> BigRational {
        &self.lambda_hi - &self.lambda_lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lambda_lo + &self.lambda_hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lambda_lo <= x && x <= &self.lambda_hi
    }
}

#[derive(Debug, Clone)]
pub struct SpectralOptions {
    pub tol: BigRational,
    pub max_iterations: u64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions { tol: default_tolerance(), max_iterations: DEFAULT_MAX_ITERATIONS }
    }
}

impl SpectralOptions {
    pub fn with_tol(tol: BigRational) -> Self {
        SpectralOptions { tol, ..Default::default() }
    }
}

/// Certified spectral radius with default iteration cap.
pub fn spectral_radius(g: &Graph, tol: &BigRational) -> Result<SpectralEstimate, SpectralError> {
    spectral_radius_with(g, &SpectralOptions::with_tol(tol.clone()))
}

pub fn spectral_radius_with(
    g: &Graph,
    opts: &SpectralOptions,
) -> Result<SpectralEstimate, SpectralError> {
    if !opts.tol.is_positive() {
        return Err(SpectralError::NonPositiveTolerance);
    }
    let n = g.order();
    let mut best: Option<(SpectralEstimate, Vec<usize>)> = None;
    let mut hi_all = BigRational::zero();
    let mut iterations = 0;
    let mut failure: Option<(BigRational, BigRational)> = None;
    for comp in g.components() {
        let est = if comp.len() == 1 {
            SpectralEstimate {
                lambda_lo: BigRational::zero(),
                lambda_hi: BigRational::zero(),
                witness: vec![BigRational::one()],
                iterations: 0,
            }
        } else {
            let sub = g.induced_subgraph(&comp);
            match certify_connected(&sub, opts) {
                Ok(e) => e,
                Err(SpectralError::NotConverged { lo, hi, iterations: it }) => {
                    iterations += it;
                    failure = Some(match failure {
                        None => (lo.clone(), hi.clone()),
                        Some((a, b)) => (a.max(lo.clone()), b.max(hi.clone())),
                    });
                    SpectralEstimate { lambda_lo: lo, lambda_hi: hi, witness: vec![], iterations: 0 }
                }
                Err(e) => return Err(e),
            }
        };
        iterations += est.iterations;
        if est.lambda_hi > hi_all {
            hi_all = est.lambda_hi.clone();
        }
        let better = match &best {
            None => true,
            Some((b, _)) => est.lambda_lo > b.lambda_lo,
        };
        if better && !est.witness.is_empty() {
            best = Some((est, comp));
        }
    }
    let Some((best, comp)) = best else {
        // n = 0 or every component failed.
        if let Some((lo, hi)) = failure {
            return Err(SpectralError::NotConverged { lo, hi, iterations });
        }
        return Ok(SpectralEstimate {
            lambda_lo: BigRational::zero(),
            lambda_hi: BigRational::zero(),
            witness: vec![],
            iterations: 0,
        });
    };
    if let Some((lo, hi)) = failure {
        return Err(SpectralError::NotConverged {
            lo: lo.max(best.lambda_lo.clone()),
            hi: hi.max(hi_all),
            iterations,
        });
    }
    let mut witness = vec![BigRational::zero(); n];
    for (i, &v) in comp.iter().enumerate() {
        witness[v] = best.witness[i].clone();
    }
    Ok(SpectralEstimate { lambda_lo: best.lambda_lo, lambda_hi: hi_all, witness, iterations })
}

/// Exact decision of `λ(G) >= t`.
pub fn lambda_at_least(g: &Graph, t: &BigRational) -> bool {
    !shift_is_positive_definite(g, t)
}

/// Power iteration on `A + I` from the current vector. Returns the number of
/// steps taken and whether successive iterates agreed to working precision.
fn power_steps(adj: &[Vec<usize>], x: &mut Vec<f64>, budget: u64) -> (u64, bool) {
    let n = adj.len();
    let mut y = vec![0.0; n];
    let mut settled = 0;
    for step in 1..=budget {
        for (i, nb) in adj.iter().enumerate() {
            y[i] = x[i] + nb.iter().map(|&j| x[j]).sum::<f64>();
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut diff: f64 = 0.0;
        for i in 0..n {
            let v = y[i] / norm;
            diff = diff.max((v - x[i]).abs());
            x[i] = v;
        }
        if diff < 1e-15 {
            settled += 1;
            // A few extra sweeps once stable shave off the last rounding noise.
            if settled >= 8 {
                return (step, true);
            }
        }
    }
    (budget, false)
}

/// Scales a positive float vector to integers with about 50 significant bits.
fn integerize(x: &[f64]) -> Vec<BigInt> {
    let max = x.iter().cloned().fold(0.0f64, f64::max);
    let scale = (1u64 << 50) as f64 / max;
    x.iter()
        .map(|&v| {
            let r = (v * scale).round();
            BigInt::from(r.max(1.0) as u64)
        })
        .collect()
}

fn certify_connected(g: &Graph, opts: &SpectralOptions) -> Result<SpectralEstimate, SpectralError> {
    let adj: Vec<Vec<usize>> = (0..g.order()).map(|v| g.neighbors(v).collect()).collect();
    let mut x: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
    let den = dyadic_denominator(&(&opts.tol / BigRational::from_integer(2.into())));
    let half_tol = &opts.tol / BigRational::from_integer(2.into());
    let mut used = 0u64;
    let mut budget = 256u64;
    let mut best: Option<(BigRational, BigRational)> = None;
    loop {
        let step_budget = budget.min(opts.max_iterations - used);
        let (steps, _settled) = power_steps(&adj, &mut x, step_budget);
        used += steps;
        let w = integerize(&x);
        let lo = rayleigh_int(g, &w);
        let hi = certify_upper(g, &lo, &half_tol, &opts.tol, &den);
        if &hi - &lo <= opts.tol {
            let witness = w.into_iter().map(BigRational::from_integer).collect();
            return Ok(SpectralEstimate { lambda_lo: lo, lambda_hi: hi, witness, iterations: used });
        }
        best = Some(match best {
            None => (lo, hi),
            Some((a, b)) => (a.max(lo), b.min(hi)),
        });
        if used >= opts.max_iterations {
            let (lo, hi) = best.expect("at least one attempt");
            return Err(SpectralError::NotConverged { lo, hi, iterations: used });
        }
        budget = budget.saturating_mul(4);
    }
}

/// Smallest certified upper bound reachable from `lo`: first tries
/// `lo + tol/2`, otherwise doubles the gap until certified and then bisects
/// back down while certification still succeeds.
fn certify_upper(
    g: &Graph,
    lo: &BigRational,
    half_tol: &BigRational,
    tol: &BigRational,
    den: &BigInt,
) -> BigRational {
    let mut gap = half_tol.clone();
    let mut hi = ceil_to(&(lo + &gap), den);
    if shift_is_positive_definite(g, &hi) {
        return hi;
    }
    loop {
        gap = &gap * BigRational::from_integer(2.into());
        hi = ceil_to(&(lo + &gap), den);
        if shift_is_positive_definite(g, &hi) {
            break;
        }
    }
    // Bisection on the gap; stops once the midpoint fails to certify.
    while &(&hi - lo) > tol {
        let mid = ceil_to(&(lo + (&hi - lo) / BigRational::from_integer(2.into())), den);
        if mid >= hi || !shift_is_positive_definite(g, &mid) {
            break;
        }
        hi = mid;
    }
    hi
}
