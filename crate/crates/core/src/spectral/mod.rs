//! Signless Laplacian spectra.
//!
//! `q(G)` is the largest eigenvalue of `Q(G) = D(G) + A(G)`. The numeric path
//! diagonalises `Q` with cyclic Jacobi and cross-checks the result with power
//! iteration; the [`exact`] module gives integer characteristic polynomials
//! used to settle floating-point ties.

pub mod bounds;
pub mod closed;
pub mod exact;
pub mod jacobi;
pub mod power;
pub mod quotient;

use serde::Serialize;

use crate::graph::Graph;

pub use bounds::{das_bound, degree_pressure, max_degree_pressure, neighborhood_decomposition};
pub use closed::{
    closed_q_friendship, closed_q_splitstar2, closed_q_splitstarplus1, q_cone_over_triangles,
    CubicSpec,
};
pub use quotient::{largest_eigenvalue_small, PartitionMode, QuotientMatrix};

/// Residual every [`SpectralResult`] is guaranteed to meet.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        DenseMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.data[i * self.n + j] = x;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// `Q(G)`: degrees on the diagonal, adjacency off it.
pub fn signless_laplacian(g: &Graph) -> DenseMatrix {
    let n = g.order();
    let mut q = DenseMatrix::zeros(n);
    for v in 0..n {
        q.set(v, v, g.deg(v) as f64);
    }
    for (u, v) in g.edges() {
        q.set(u, v, 1.0);
        q.set(v, u, 1.0);
    }
    q
}

/// `Q(G)` with integer entries, for exact characteristic polynomials.
pub fn signless_laplacian_int(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        g.deg(u) as i64
                    } else {
                        i64::from(g.has_edge(u, v))
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralResult {
    /// Largest eigenvalue of `Q(G)`.
    pub q: f64,
    /// Unit eigenvector for `q`, first nonzero entry positive.
    pub vector: Vec<f64>,
    /// `||Q x - q x||_2`.
    pub residual: f64,
    /// Jacobi sweeps.
    pub iterations: usize,
    /// Rayleigh quotient reached by power iteration.
    pub power_estimate: f64,
    pub power_iterations: usize,
}

/// Largest signless Laplacian eigenvalue with its eigenvector.
pub fn q_max(g: &Graph) -> SpectralResult {
    let q = signless_laplacian(g);
    let eig = jacobi::symmetric_eigen(&q);
    let top = eig.largest_index();
    let mut vector = eig.vector(top);
    normalize_sign(&mut vector);
    let mut value = eig.values[top];
    let mut res = residual(&q, &vector, value);
    if res > RESIDUAL_TOLERANCE {
        (value, res) = polish(&q, &mut vector, value);
    }
    let power = power::power_iteration(&q, 1e-11, 100_000);
    SpectralResult {
        q: value,
        vector,
        residual: res,
        iterations: eig.sweeps,
        power_estimate: power.value,
        power_iterations: power.iterations,
    }
}

fn polish(q: &DenseMatrix, x: &mut [f64], mut value: f64) -> (f64, f64) {
    for _ in 0..50 {
        let y = q.mul_vec(x);
        let norm = y.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm == 0.0 {
            break;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        value = rayleigh(q, x);
        if residual(q, x, value) <= RESIDUAL_TOLERANCE {
            break;
        }
    }
    normalize_sign(x);
    (value, residual(q, x, value))
}

pub(crate) fn rayleigh(q: &DenseMatrix, x: &[f64]) -> f64 {
    let y = q.mul_vec(x);
    let num: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
    let den: f64 = x.iter().map(|a| a * a).sum();
    num / den
}

pub fn residual(q: &DenseMatrix, x: &[f64], value: f64) -> f64 {
    q.mul_vec(x)
        .iter()
        .zip(x)
        .map(|(y, xi)| (y - value * xi).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn normalize_sign(x: &mut [f64]) {
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    let flip = x.iter().find(|a| a.abs() > 1e-12).is_some_and(|a| *a < 0.0);
    let s = if flip { -1.0 / norm } else { 1.0 / norm };
    for a in x.iter_mut() {
        *a *= s;
    }
}
