//! JSON records for verdicts and spectral estimates.
//!
//! Rationals are written as exact `"p/q"` strings (integers bare), each with a
//! float `_approx` companion. Field order is fixed, so identical inputs give
//! byte-identical output.

use num_rational::BigRational;
use serde::Serialize;

use crate::certifier::{CertificateSource, Comparison, Method, Verdict, VerdictKind};
use crate::graph::{Family, Partition};
use crate::spectral::exact::{rational_string, to_f64};
use crate::spectral::SpectralEstimate;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictRecord {
    pub kind: &'static str,
    pub theorem: &'static str,
    pub k: usize,
    pub n: usize,
    pub lambda_lo: Option<String>,
    pub lambda_lo_approx: Option<f64>,
    pub lambda_hi: Option<String>,
    pub lambda_hi_approx: Option<f64>,
    pub threshold: Option<String>,
    pub threshold_approx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold_hi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional_family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
    pub premises: PremiseRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PremiseRecord {
    pub m: usize,
    pub min_degree: usize,
    pub n_bound: String,
    pub n_bound_ok: bool,
    pub comparison: Option<Comparison>,
    pub method: Option<Method>,
    pub edge_bound: Option<String>,
    pub edge_bound_met: Option<bool>,
    pub certificate_source: Option<CertificateSource>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn s(q: &BigRational) -> String {
    rational_string(q)
}

impl From<&Verdict> for VerdictRecord {
    fn from(v: &Verdict) -> Self {
        let p = &v.premises;
        let lambda = p.lambda.as_ref();
        let threshold = p.threshold.as_ref();
        VerdictRecord {
            kind: v.kind.name(),
            theorem: v.theorem.name(),
            k: p.k,
            n: p.n,
            lambda_lo: lambda.map(|l| s(&l.0)),
            lambda_lo_approx: lambda.map(|l| to_f64(&l.0)),
            lambda_hi: lambda.map(|l| s(&l.1)),
            lambda_hi_approx: lambda.map(|l| to_f64(&l.1)),
            threshold: threshold.map(|t| s(&t.0)),
            threshold_approx: threshold.map(|t| to_f64(&t.0)),
            threshold_hi: threshold.filter(|t| t.0 != t.1).map(|t| s(&t.1)),
            exceptional_family: match v.kind {
                VerdictKind::Exceptional(f) => Some(f),
                _ => None,
            },
            certificate: v.certificate.clone(),
            premises: PremiseRecord {
                m: p.m,
                min_degree: p.min_degree,
                n_bound: s(&p.n_bound),
                n_bound_ok: p.n_bound_ok,
                comparison: p.comparison,
                method: p.method,
                edge_bound: p.edge_bound.as_ref().map(s),
                edge_bound_met: p.edge_bound_met(),
                certificate_source: v.certificate_source,
                partition: v.matched.as_ref().map(|m| m.partition.clone()),
                l: v.matched.as_ref().map(|m| m.l),
                reason: v.reason.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateRecord {
    pub lambda_lo: String,
    pub lambda_lo_approx: f64,
    pub lambda_hi: String,
    pub lambda_hi_approx: f64,
    pub iterations: u64,
}

impl From<&SpectralEstimate> for EstimateRecord {
    fn from(e: &SpectralEstimate) -> Self {
        EstimateRecord {
            lambda_lo: s(&e.lambda_lo),
            lambda_lo_approx: to_f64(&e.lambda_lo),
            lambda_hi: s(&e.lambda_hi),
            lambda_hi_approx: to_f64(&e.lambda_hi),
            iterations: e.iterations,
        }
    }
}

pub fn verdict_json(v: &Verdict) -> String {
    serde_json::to_string(&VerdictRecord::from(v)).expect("records always serialize")
}
