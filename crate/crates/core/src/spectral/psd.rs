//! Exact positive-definiteness test for `c·I − A(G)`.
//!
//! Sylvester's criterion on the leading principal minors, computed with
//! fraction-free (Bareiss) elimination over the integers. With `c = p/q` the
//! test runs on `p·I − q·A`, which has the same signature.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::graph::Graph;

/// True iff `c·I − A(g)` is positive definite, i.e. `λ(g) < c`.
pub fn shift_is_positive_definite(g: &Graph, c: &BigRational) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if !c.is_positive() {
        // Diagonal entry c <= 0 is already a non-positive 1×1 minor.
        return false;
    }
    let p = c.numer().clone();
    let q = c.denom().clone();
    let neg_q = -q;
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        p.clone()
                    } else if g.has_edge(i, j) {
                        neg_q.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_leading_minors_positive(&mut m)
}

/// Runs Bareiss elimination in place on a symmetric integer matrix and
/// returns whether every leading principal minor is positive.
pub(crate) fn bareiss_leading_minors_positive(m: &mut [Vec<BigInt>]) -> bool {
    let n = m.len();
    let mut prev = BigInt::from(1);
    for k in 0..n {
        // m[k][k] now equals the (k+1)-th leading principal minor.
        if !m[k][k].is_positive() {
            return false;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let mik = m[i][k].clone();
            for j in i..n {
                let mut v = &m[i][j] * &pivot;
                if !mik.is_zero() && !m[k][j].is_zero() {
                    v -= &mik * &m[k][j];
                }
                // Exact by Sylvester's identity.
                m[i][j] = v / &prev;
            }
            for j in k + 1..i {
                // Keep the lower triangle symmetric for later pivots.
                m[i][j] = m[j][i].clone();
            }
        }
        prev = pivot;
    }
    true
}
