//! Edge and minimum-degree upper bound on the spectral radius.
//!
//! `f(x) = (x−1)/2 + √(2m − nx + (x+1)²/4)` bounds λ(G) from above at
//! `x = δ(G)` and is nonincreasing in `x` up to `n − 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::exact::{int, rat, QuadraticSurd};
use super::SpectralError;
use crate::graph::Graph;

fn hsf_parts(x: &BigRational, m: usize, n: usize) -> (BigRational, BigRational) {
    let two = int(2);
    let one = int(1);
    let rational = (x - &one) / &two;
    let xp = x + &one;
    let radicand = int(2 * m as i64) - int(n as i64) * x + &xp * &xp / int(4);
    (rational, radicand)
}

/// `f(x)` as an exact surd.
pub fn hsf_f(x: &BigRational, m: usize, n: usize) -> Result<QuadraticSurd, SpectralError> {
    let (rational, radicand) = hsf_parts(x, m, n);
    if radicand.is_negative() {
        return Err(SpectralError::NegativeRadicand(x.clone()));
    }
    Ok(QuadraticSurd::new(rational, radicand))
}

/// Upper-rounded `f(δ)`; never below λ(G).
pub fn hsf_upper_bound(g: &Graph) -> BigRational {
    let delta = int(g.min_degree() as i64);
    let surd = hsf_f(&delta, g.size(), g.order()).expect("2m >= n·δ for every graph");
    surd.upper(&BigInt::from(1u64 << 40))
}

/// Exact value of the bound at `δ(G)`.
pub fn hsf_exact(g: &Graph) -> QuadraticSurd {
    hsf_f(&int(g.min_degree() as i64), g.size(), g.order()).expect("2m >= n·δ for every graph")
}

/// True iff `f` is nonincreasing along the ascending `grid`, all of whose
/// points must be at most `n − 1`.
pub fn hsf_monotone_check(m: usize, n: usize, grid: &[BigRational]) -> Result<bool, SpectralError> {
    let top = int(n as i64 - 1);
    let mut prev: Option<QuadraticSurd> = None;
    for x in grid {
        if *x > top {
            return Ok(false);
        }
        let cur = hsf_f(x, m, n)?;
        if let Some(p) = &prev {
            if p.cmp_exact(&cur) == std::cmp::Ordering::Less {
                return Ok(false);
            }
        }
        prev = Some(cur);
    }
    Ok(true)
}

/// Evenly spaced grid of `points` rationals on `[0, n − 1]`.
pub fn uniform_grid(n: usize, points: usize) -> Vec<BigRational> {
    assert!(points >= 2);
    let top = n as i64 - 1;
    (0..points as i64).map(|i| rat(i * top, points as i64 - 1)).collect()
}

/// Edge count a cycle-critical graph must reach: `(n² − 2kn + 2k² + k − n)/2`.
pub fn edge_bound_diagnostic(n: usize, k: usize) -> BigRational {
    let (n, k) = (n as i64, k as i64);
    rat(n * n - 2 * k * n + 2 * k * k + k - n, 2)
}

/// Path variant: `(n² − 2kn + 2k² + 4k − 3n + 2)/2`.
pub fn edge_bound_path_diagnostic(n: usize, k: usize) -> BigRational {
    let (n, k) = (n as i64, k as i64);
    rat(n * n - 2 * k * n + 2 * k * k + 4 * k - 3 * n + 2, 2)
}

/// Whether the radicand stays nonnegative on all of `[0, n − 1]`. It is
/// decreasing there (its minimum sits at `x = 2n − 1`), so the right end decides.
pub fn hsf_domain_ok(m: usize, n: usize) -> bool {
    !hsf_parts(&int(n as i64 - 1), m, n).1.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_edgeless};

    #[test]
    fn regular_examples_are_exact() {
        assert_eq!(hsf_upper_bound(&build_complete(5).unwrap()), int(4));
        assert_eq!(hsf_upper_bound(&build_edgeless(4).unwrap()), int(0));
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(hsf_upper_bound(&c5), int(2));
    }

    #[test]
    fn f_examples() {
        let v = hsf_f(&int(4), 10, 5).unwrap();
        assert_eq!(v.cmp_rational(&int(4)), std::cmp::Ordering::Equal);
        for n in 2..9usize {
            let m = n * (n - 1) / 2;
            let v = hsf_f(&int(n as i64 - 1), m, n).unwrap();
            assert_eq!(v.cmp_rational(&int(n as i64 - 1)), std::cmp::Ordering::Equal);
        }
        let grid: Vec<_> = (0..=4).map(int).collect();
        assert!(hsf_monotone_check(10, 6, &grid).unwrap());
        // At x = 5 the radicand is 20 − 30 + 9 < 0.
        let grid: Vec<_> = (0..=5).map(int).collect();
        assert!(hsf_monotone_check(10, 6, &grid).is_err());
        assert!(!hsf_domain_ok(10, 6));
        assert!(hsf_domain_ok(11, 6));
    }

    #[test]
    fn negative_radicand_is_reported() {
        // m = 0, n = 6: radicand at x = 3 is 0 − 18 + 4 < 0.
        assert!(matches!(hsf_f(&int(3), 0, 6), Err(SpectralError::NegativeRadicand(_))));
    }

    #[test]
    fn edge_bounds() {
        assert_eq!(edge_bound_diagnostic(6, 1), rat(21, 2));
        assert_eq!(edge_bound_diagnostic(5, 1), rat(13, 2));
        assert_eq!(edge_bound_path_diagnostic(7, 1), int(11));
    }
}
