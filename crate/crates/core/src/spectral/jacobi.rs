//! Cyclic Jacobi diagonalisation of dense symmetric matrices.

use super::DenseMatrix;

const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug)]
pub struct SymmetricEigen {
    /// Eigenvalues in the order of the columns of `vectors`.
    pub values: Vec<f64>,
    /// Column `j` (stored row-major) is the eigenvector of `values[j]`.
    pub vectors: DenseMatrix,
    pub sweeps: usize,
}

impl SymmetricEigen {
    pub fn vector(&self, j: usize) -> Vec<f64> {
        (0..self.vectors.dim())
            .map(|i| self.vectors.get(i, j))
            .collect()
    }

    /// Index of the largest eigenvalue (lowest index on exact ties).
    pub fn largest_index(&self) -> usize {
        let mut best = 0;
        for (j, &v) in self.values.iter().enumerate() {
            if v > self.values[best] {
                best = j;
            }
        }
        best
    }

    /// Eigenvalues sorted in non-increasing order.
    pub fn sorted_values(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }
}

fn off_diagonal_norm2(a: &DenseMatrix) -> f64 {
    let n = a.dim();
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| a.get(i, j).powi(2))
        .sum()
}

/// Row-cyclic Jacobi sweeps until the off-diagonal mass is negligible.
/// Panics if `a` is not symmetric.
pub fn symmetric_eigen(a: &DenseMatrix) -> SymmetricEigen {
    assert!(a.is_symmetric(), "Jacobi needs a symmetric matrix");
    let n = a.dim();
    let mut a = a.clone();
    let mut v = DenseMatrix::zeros(n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let total: f64 = (0..n).flat_map(|i| a.row(i).to_vec()).map(|x| x * x).sum();
    let target = (f64::EPSILON * f64::EPSILON) * total;
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        if off_diagonal_norm2(&a) <= target {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let np = c * akp - s * akq;
                    let nq = s * akp + c * akq;
                    a.set(k, p, np);
                    a.set(p, k, np);
                    a.set(k, q, nq);
                    a.set(q, k, nq);
                }
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    SymmetricEigen {
        values: (0..n).map(|i| a.get(i, i)).collect(),
        vectors: v,
        sweeps,
    }
}
