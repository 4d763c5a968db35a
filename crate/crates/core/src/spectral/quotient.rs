//! Quotient matrices of the equitable partitions of the extremal families.
//!
//! For an equitable partition every vertex of class `i` has the same number
//! `B[i][j]` of neighbours in class `j`; the largest eigenvalue of `B` is the
//! spectral radius of the graph. The families are treated intact (classes X,
//! Y, Z) or with one edge `{u, v}` inside Z removed (classes X, Y, Z∖{u,v},
//! {u,v}).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::exact::{from_f64, to_f64};
use super::SpectralError;
use crate::graph::{build_extremal, ExtremalSpec, Family, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassLabel {
    X,
    Y,
    Z,
    UV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Deletion {
    None,
    WithinZ,
}

#[derive(Debug, Clone)]
pub struct QuotientSystem {
    pub spec: ExtremalSpec,
    pub deletion: Deletion,
    /// `(size, label)` per class, empty classes omitted.
    pub classes: Vec<(usize, ClassLabel)>,
    /// Class members in the underlying graph.
    pub members: Vec<Vec<usize>>,
    /// `matrix[i][j]` = neighbours a class-`i` vertex has in class `j`.
    pub matrix: Vec<Vec<usize>>,
    pub lambda_lo: BigRational,
    pub lambda_hi: BigRational,
    /// Eigenvector entry per class, scaled so the lifted vector has unit norm.
    pub profile: Vec<f64>,
    pub graph: Graph,
}

impl QuotientSystem {
    pub fn lambda_f64(&self) -> f64 {
        (to_f64(&self.lambda_lo) + to_f64(&self.lambda_hi)) / 2.0
    }

    pub fn value(&self, label: ClassLabel) -> Option<f64> {
        self.classes.iter().position(|&(_, l)| l == label).map(|i| self.profile[i])
    }

    /// Profile spread over every vertex of the underlying graph.
    pub fn lift_profile(&self) -> Vec<f64> {
        let mut v = vec![0.0; self.graph.order()];
        for (c, members) in self.members.iter().enumerate() {
            for &u in members {
                v[u] = self.profile[c];
            }
        }
        v
    }

    /// ‖A·p − λ·p‖_∞ for the lifted profile `p`.
    pub fn lift_residual(&self) -> f64 {
        let p = self.lift_profile();
        let lambda = self.lambda_f64();
        (0..self.graph.order())
            .map(|u| {
                let ap: f64 = self.graph.neighbors(u).map(|w| p[w]).sum();
                (ap - lambda * p[u]).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Largest deviation of the profile from the closed-form solution of the
    /// deleted-edge eigenequations, relative to `y`. `None` when the system is
    /// intact, belongs to SPLIT, or lacks one of the four classes.
    pub fn closed_form_residual(&self) -> Option<f64> {
        if self.deletion != Deletion::WithinZ || self.classes.len() != 4 {
            return None;
        }
        let (x, y, z, t) = (
            self.value(ClassLabel::X)?,
            self.value(ClassLabel::Y)?,
            self.value(ClassLabel::Z)?,
            self.value(ClassLabel::UV)?,
        );
        let l = self.lambda_f64();
        let k = self.spec.k as f64;
        let (xp, zp) = match self.spec.family {
            Family::M => (k / l * y, (1.0 - k * k / (l * (l + 1.0))) * y),
            Family::L => {
                let a = l - k + 1.0;
                (y / a, (1.0 - k / (a * (l + 1.0))) * y)
            }
            Family::N => (k / l * y, (1.0 - k * (k + 1.0) / (l * (l + 1.0))) * y),
            Family::Split => return None,
        };
        let tp = (l + 1.0) / (l + 2.0) * zp;
        let dev = [(x - xp).abs(), (z - zp).abs(), (t - tp).abs()].into_iter().fold(0.0, f64::max);
        Some(dev / y.abs())
    }
}

/// Builds the quotient system for `spec` and certifies its largest eigenvalue
/// to width at most 10⁻¹².
pub fn quotient_lambda(spec: &ExtremalSpec, deletion: Deletion) -> Result<QuotientSystem, SpectralError> {
    let (mut g, part) = build_extremal(spec).map_err(|e| SpectralError::Quotient(e.to_string()))?;
    let mut z = part.z.clone();
    let mut uv = Vec::new();
    if deletion == Deletion::WithinZ {
        if z.len() < 2 {
            return Err(SpectralError::Quotient(format!(
                "{spec} has |Z| = {} < 2, no edge inside Z to delete",
                z.len()
            )));
        }
        uv = z.split_off(z.len() - 2);
        g = g.without_edge(uv[0], uv[1]).expect("Z is a clique");
    }
    let all = [
        (part.x.clone(), ClassLabel::X),
        (part.y.clone(), ClassLabel::Y),
        (z, ClassLabel::Z),
        (uv, ClassLabel::UV),
    ];
    let (members, labels): (Vec<Vec<usize>>, Vec<ClassLabel>) =
        all.into_iter().filter(|(m, _)| !m.is_empty()).unzip();
    let matrix = equitable_matrix(&g, &members)
        .ok_or_else(|| SpectralError::Quotient(format!("partition of {spec} is not equitable")))?;
    let classes = members.iter().zip(&labels).map(|(m, &l)| (m.len(), l)).collect();
    let (lambda_lo, lambda_hi, block_vec) = certified_perron(&matrix)?;
    let sizes: Vec<f64> = members.iter().map(|m| m.len() as f64).collect();
    let norm = block_vec.iter().zip(&sizes).map(|(v, s)| v * v * s).sum::<f64>().sqrt();
    let profile = block_vec.iter().map(|v| v / norm).collect();
    Ok(QuotientSystem {
        spec: *spec,
        deletion,
        classes,
        members,
        matrix,
        lambda_lo,
        lambda_hi,
        profile,
        graph: g,
    })
}

/// Neighbour-count matrix of `classes`, or `None` if the partition is not
/// equitable in `g`.
pub fn equitable_matrix(g: &Graph, classes: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let mut class_of = vec![usize::MAX; g.order()];
    for (c, ms) in classes.iter().enumerate() {
        for &v in ms {
            class_of[v] = c;
        }
    }
    if class_of.contains(&usize::MAX) {
        return None;
    }
    let counts = |v: usize| {
        let mut row = vec![0usize; classes.len()];
        for w in g.neighbors(v) {
            row[class_of[w]] += 1;
        }
        row
    };
    let matrix: Vec<Vec<usize>> = classes.iter().map(|ms| counts(ms[0])).collect();
    for (c, ms) in classes.iter().enumerate() {
        if ms.iter().any(|&v| counts(v) != matrix[c]) {
            return None;
        }
    }
    Some(matrix)
}

/// Largest eigenvalue of a nonnegative integer matrix whose support is
/// symmetric, as a certified Collatz–Wielandt interval, plus a float Perron
/// vector (zero outside the attaining block).
fn certified_perron(b: &[Vec<usize>]) -> Result<(BigRational, BigRational, Vec<f64>), SpectralError> {
    let n = b.len();
    let blocks = support_blocks(b);
    let mut best: Option<(BigRational, BigRational, Vec<f64>)> = None;
    let mut hi_all = BigRational::zero();
    for block in blocks {
        let (lo, hi, v) = block_perron(b, &block)?;
        if hi > hi_all {
            hi_all = hi.clone();
        }
        if best.as_ref().is_none_or(|(l, _, _)| lo > *l) {
            let mut full = vec![0.0; n];
            for (i, &c) in block.iter().enumerate() {
                full[c] = v[i];
            }
            best = Some((lo, hi, full));
        }
    }
    let (lo, _, v) = best.ok_or_else(|| SpectralError::Quotient("empty quotient".into()))?;
    let width = &hi_all - &lo;
    if width > super::exact::ten_pow_neg(12) {
        return Err(SpectralError::Quotient(format!("quotient interval too wide: {width}")));
    }
    Ok((lo, hi_all, v))
}

fn support_blocks(b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = b.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = vec![];
        while let Some(u) = stack.pop() {
            comp.push(u);
            for w in 0..n {
                if !seen[w] && (b[u][w] > 0 || b[w][u] > 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn block_perron(b: &[Vec<usize>], block: &[usize]) -> Result<(BigRational, BigRational, Vec<f64>), SpectralError> {
    let m = block.len();
    let sub: Vec<Vec<BigRational>> = block
        .iter()
        .map(|&i| block.iter().map(|&j| BigRational::from_integer(BigInt::from(b[i][j]))).collect())
        .collect();
    if m == 1 {
        let v = sub[0][0].clone();
        return Ok((v.clone(), v, vec![1.0]));
    }
    // Float power iteration on B + I.
    let bf: Vec<Vec<f64>> = block.iter().map(|&i| block.iter().map(|&j| b[i][j] as f64).collect()).collect();
    let mut x = vec![1.0; m];
    let mut mu = 0.0;
    for _ in 0..100_000 {
        let y: Vec<f64> = (0..m).map(|i| x[i] + (0..m).map(|j| bf[i][j] * x[j]).sum::<f64>()).collect();
        let s: f64 = y.iter().sum();
        let y: Vec<f64> = y.iter().map(|v| v / s).collect();
        let diff = y.iter().zip(&x).map(|(a, c)| (a - c).abs()).fold(0.0, f64::max);
        x = y;
        let bx: Vec<f64> = (0..m).map(|i| (0..m).map(|j| bf[i][j] * x[j]).sum::<f64>()).collect();
        mu = bx.iter().sum::<f64>() / x.iter().sum::<f64>();
        if diff < 1e-16 {
            break;
        }
    }
    // One exact inverse-iteration step with the float estimate as shift.
    let v0: Vec<BigRational> = x.iter().map(|&v| from_f64(v)).collect();
    let shift = from_f64(mu);
    let refined = solve_shifted(&sub, &shift, &v0)
        .and_then(|v| {
            let sign = if v[0].is_negative() { -BigRational::one() } else { BigRational::one() };
            let v: Vec<BigRational> = v.into_iter().map(|e| e * &sign).collect();
            v.iter().all(|e| e.is_positive()).then_some(v)
        })
        .unwrap_or(v0);
    let bv: Vec<BigRational> = (0..m)
        .map(|i| (0..m).map(|j| &sub[i][j] * &refined[j]).sum())
        .collect();
    let ratios: Vec<BigRational> = bv.iter().zip(&refined).map(|(a, c)| a / c).collect();
    let lo = ratios.iter().min().cloned().expect("nonempty block");
    let hi = ratios.iter().max().cloned().expect("nonempty block");
    let total: BigRational = refined.iter().sum();
    let profile = refined.iter().map(|v| to_f64(&(v / &total))).collect();
    Ok((lo, hi, profile))
}

/// Solves `(B − μI)v = rhs` exactly; `None` if singular.
fn solve_shifted(b: &[Vec<BigRational>], mu: &BigRational, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = b.len();
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..m)
                .map(|j| if i == j { &b[i][j] - mu } else { b[i][j].clone() })
                .collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..m {
        let piv = (col..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for c in col..=m {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                }
            }
        }
    }
    Some((0..m).map(|i| &a[i][m] / &a[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::exact::int;

    fn spec(f: Family, k: usize, n: usize) -> ExtremalSpec {
        ExtremalSpec::new(f, k, n).unwrap()
    }

    #[test]
    fn deleted_m_rows_match_eigenequations() {
        for (k, n) in [(1, 6), (2, 9), (3, 12)] {
            let q = quotient_lambda(&spec(Family::M, k, n), Deletion::WithinZ).unwrap();
            let expect = vec![
                vec![0, k, 0, 0],
                vec![k, k - 1, n - 2 * k - 2, 2],
                vec![0, k, n - 2 * k - 3, 2],
                vec![0, k, n - 2 * k - 2, 0],
            ];
            assert_eq!(q.matrix, expect);
            assert!(q.closed_form_residual().unwrap() < 1e-9);
        }
    }

    #[test]
    fn deleted_l_and_n_rows() {
        let (k, n) = (2, 10);
        let q = quotient_lambda(&spec(Family::L, k, n), Deletion::WithinZ).unwrap();
        assert_eq!(
            q.matrix,
            vec![
                vec![k - 1, 1, 0, 0],
                vec![k, 0, n - k - 3, 2],
                vec![0, 1, n - k - 4, 2],
                vec![0, 1, n - k - 3, 0],
            ]
        );
        let q = quotient_lambda(&spec(Family::N, k, n), Deletion::WithinZ).unwrap();
        assert_eq!(
            q.matrix,
            vec![
                vec![0, k, 0, 0],
                vec![k + 1, k - 1, n - 2 * k - 3, 2],
                vec![0, k, n - 2 * k - 4, 2],
                vec![0, k, n - 2 * k - 3, 0],
            ]
        );
        assert!(q.closed_form_residual().unwrap() < 1e-9);
    }

    #[test]
    fn split_is_exact() {
        for (k, n) in [(1, 5), (2, 9), (3, 8)] {
            let q = quotient_lambda(&spec(Family::Split, k, n), Deletion::None).unwrap();
            assert_eq!(q.lambda_lo, int((n - k - 2) as i64));
            assert_eq!(q.lambda_hi, int((n - k - 2) as i64));
        }
    }

    #[test]
    fn m_1_5_matches_k4_plus_pendant() {
        let q = quotient_lambda(&spec(Family::M, 1, 5), Deletion::None).unwrap();
        let est = crate::spectral::spectral_radius(&q.graph, &crate::spectral::default_tolerance()).unwrap();
        assert!((q.lambda_f64() - est.midpoint_f64()).abs() < 1e-9);
        assert!(q.lift_residual() < 1e-9);
    }

    #[test]
    fn rejects_missing_z_edge() {
        assert!(quotient_lambda(&spec(Family::M, 2, 5), Deletion::WithinZ).is_err());
        assert!(quotient_lambda(&spec(Family::M, 2, 6), Deletion::WithinZ).is_ok());
    }

    #[test]
    fn non_equitable_partition_is_detected() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(equitable_matrix(&p3, &[vec![0, 1], vec![2]]).is_none());
        assert_eq!(equitable_matrix(&p3, &[vec![0, 2], vec![1]]), Some(vec![vec![0, 1], vec![2, 0]]));
    }
}
