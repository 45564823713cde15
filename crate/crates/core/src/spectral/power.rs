//! Power iteration with Rayleigh quotients, used to cross-check Jacobi.
//!
//! Only meaningful for positive semidefinite input such as `Q(G)`, where the
//! dominant eigenvalue in modulus is the largest one.

use super::{rayleigh, residual, DenseMatrix};

#[derive(Clone, Debug)]
pub struct PowerResult {
    pub value: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Iterates `x <- Qx / |Qx|` from the normalised all-ones vector until the
/// residual `|Qx - rx|` drops below `tol * max(1, r)`.
pub fn power_iteration(q: &DenseMatrix, tol: f64, max_iter: usize) -> PowerResult {
    let n = q.dim();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut value = rayleigh(q, &x);
    for it in 0..max_iter {
        if residual(q, &x, value) <= tol * value.max(1.0) {
            return PowerResult {
                value,
                vector: x,
                iterations: it,
                converged: true,
            };
        }
        let y = q.mul_vec(&x);
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm == 0.0 {
            return PowerResult {
                value: 0.0,
                vector: x,
                iterations: it,
                converged: true,
            };
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        value = rayleigh(q, &x);
    }
    PowerResult {
        value,
        vector: x,
        iterations: max_iter,
        converged: false,
    }
}
