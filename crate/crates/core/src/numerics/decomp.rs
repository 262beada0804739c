//! Rank, SVD and least-squares helpers for the small coefficient-space
//! systems that show up around `ad` matrices and Gram matrices.

use super::complex::ComplexMatrix;
use super::real::{dot, RealMatrix};
use super::tolerance::Tolerance;

const SVD_MAX_SWEEPS: usize = 100;

/// Numerical rank by Gaussian elimination with full pivoting. A pivot counts
/// when its modulus exceeds `abs + rel·max|entry|` of the input.
pub fn rank_with_tol(a: &ComplexMatrix, tol: Tolerance) -> usize {
    let threshold = tol.threshold(a.max_abs());
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for step in 0..rows.min(cols) {
        let mut best = (step, step, 0.0f64);
        for i in step..rows {
            for j in step..cols {
                let v = m[(i, j)].norm();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        if best.2 <= threshold {
            break;
        }
        m.swap_rows(step, best.0);
        m.swap_cols(step, best.1);
        let p = m[(step, step)];
        for i in (step + 1)..rows {
            let f = m[(i, step)] / p;
            for j in step..cols {
                let v = m[(step, j)];
                m[(i, j)] -= f * v;
            }
        }
        rank += 1;
    }
    rank
}

/// Real-matrix convenience wrapper around [`rank_with_tol`].
pub fn real_rank(a: &RealMatrix, tol: Tolerance) -> usize {
    rank_with_tol(&a.to_complex(), tol)
}

/// Thin singular value decomposition `A = U Σ Vᵀ` with singular values in
/// descending order. `u` is `rows × cols`, `v` is `cols × cols`.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: RealMatrix,
    pub singular: Vec<f64>,
    pub v: RealMatrix,
}

impl Svd {
    pub fn largest(&self) -> f64 {
        self.singular.first().copied().unwrap_or(0.0)
    }

    pub fn smallest(&self) -> f64 {
        self.singular.last().copied().unwrap_or(0.0)
    }

    pub fn cutoff(&self, tol: Tolerance) -> f64 {
        tol.threshold(self.largest())
    }

    pub fn rank(&self, tol: Tolerance) -> usize {
        let cut = self.cutoff(tol);
        self.singular.iter().filter(|&&s| s > cut).count()
    }

    /// Orthonormal basis of the right null space.
    pub fn null_space(&self, tol: Tolerance) -> Vec<Vec<f64>> {
        let cut = self.cutoff(tol);
        self.singular
            .iter()
            .enumerate()
            .filter(|(_, &s)| s <= cut)
            .map(|(j, _)| self.v.column(j))
            .collect()
    }

    /// Minimum-norm least-squares solution of `A x = b`.
    pub fn solve_min_norm(&self, b: &[f64], tol: Tolerance) -> Vec<f64> {
        let cut = self.cutoff(tol);
        let n = self.v.rows();
        let mut x = vec![0.0; n];
        for (j, &s) in self.singular.iter().enumerate() {
            if s <= cut {
                continue;
            }
            let coeff = dot(&self.u.column(j), b) / s;
            for (i, xi) in x.iter_mut().enumerate() {
                *xi += coeff * self.v[(i, j)];
            }
        }
        x
    }
}

/// One-sided (Hestenes) Jacobi SVD: orthogonalizes the columns of `A` by
/// plane rotations accumulated into `V`.
pub fn svd(a: &RealMatrix) -> Svd {
    let (m, n) = (a.rows(), a.cols());
    let mut w = a.clone();
    let mut v = RealMatrix::identity(n);
    for _ in 0..SVD_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for k in 0..m {
                    alpha += w[(k, p)] * w[(k, p)];
                    beta += w[(k, q)] * w[(k, q)];
                    gamma += w[(k, p)] * w[(k, q)];
                }
                if gamma == 0.0 || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..m {
                    let (x, y) = (w[(k, p)], w[(k, q)]);
                    w[(k, p)] = c * x - s * y;
                    w[(k, q)] = s * x + c * y;
                }
                for k in 0..n {
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * x - s * y;
                    v[(k, q)] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|k| w[(k, j)] * w[(k, j)]).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]));

    let singular: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let u = RealMatrix::from_fn(m, n, |i, j| {
        let s = norms[order[j]];
        if s > 0.0 {
            w[(i, order[j])] / s
        } else {
            0.0
        }
    });
    let v = RealMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Svd { u, singular, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn rank_of_trivial_matrices() {
        let tol = Tolerance::default();
        assert_eq!(rank_with_tol(&ComplexMatrix::zeros(3, 3), tol), 0);
        assert_eq!(rank_with_tol(&ComplexMatrix::identity(4), tol), 4);
    }

    #[test]
    fn rank_of_rank_one_outer_product() {
        let a = ComplexMatrix::from_fn(4, 3, |i, j| Complex64::new((i + 1) as f64, 0.5) * (j as f64 - 1.5));
        assert_eq!(rank_with_tol(&a, Tolerance::default()), 1);
    }

    #[test]
    fn svd_reconstructs_and_orders() {
        let a = RealMatrix::from_fn(4, 3, |i, j| ((i * 3 + j) as f64).sin());
        let d = svd(&a);
        assert!(d.singular.windows(2).all(|w| w[0] >= w[1]));
        let sigma = RealMatrix::diagonal(&d.singular);
        let back = &(&d.u * &sigma) * &d.v.transpose();
        assert!(back.distance(&a) < 1e-13);
        assert!((&d.v.transpose() * &d.v).distance(&RealMatrix::identity(3)) < 1e-13);
    }

    #[test]
    fn min_norm_solution_is_orthogonal_to_kernel() {
        // kernel spanned by (1, 1, 0)
        let a = RealMatrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) => 1.0,
            (0, 1) => -1.0,
            (1, 2) => 2.0,
            _ => 0.0,
        });
        let d = svd(&a);
        let tol = Tolerance::default();
        assert_eq!(d.rank(tol), 2);
        let x = d.solve_min_norm(&[2.0, 4.0, 0.0], tol);
        assert!((x[0] - 1.0).abs() < 1e-14 && (x[1] + 1.0).abs() < 1e-14 && (x[2] - 2.0).abs() < 1e-14);
        let null = d.null_space(tol);
        assert_eq!(null.len(), 1);
        assert!((null[0][0].abs() - 0.5f64.sqrt()).abs() < 1e-14);
    }
}
