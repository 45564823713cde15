//! Quotient matrices of equitable partitions.

use serde::Serialize;

use super::exact::{char_poly, IntPoly};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionMode {
    /// `b_ij` = neighbours a block-`i` vertex has in block `j`.
    Adjacency,
    /// Adjacency counts plus the common block degree on the diagonal.
    SignlessLaplacian,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientMatrix {
    pub mode: PartitionMode,
    #[serde(skip)]
    pub partition: Vec<VertexSet>,
    pub entries: Vec<Vec<i64>>,
}

impl QuotientMatrix {
    /// Checks that `partition` is a disjoint cover by nonempty blocks and that
    /// it is equitable, then builds the quotient.
    pub fn new(g: &Graph, partition: &[VertexSet], mode: PartitionMode) -> Result<Self> {
        let mut covered = 0u64;
        for (i, block) in partition.iter().enumerate() {
            if block.universe() != g.order() {
                return Err(Error::UniverseMismatch {
                    set: block.universe(),
                    graph: g.order(),
                });
            }
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            if covered & block.bits() != 0 {
                return Err(Error::InvalidPartition(format!(
                    "block {i} overlaps an earlier block"
                )));
            }
            covered |= block.bits();
        }
        if covered != g.vertices().bits() {
            return Err(Error::InvalidPartition(
                "blocks do not cover every vertex".into(),
            ));
        }
        let k = partition.len();
        let mut entries = vec![vec![0i64; k]; k];
        for (i, block) in partition.iter().enumerate() {
            let first = block.iter().next().expect("nonempty");
            for (j, target) in partition.iter().enumerate() {
                let count = |v: usize| (g.row(v) & target.bits()).count_ones() as i64;
                let want = count(first);
                if let Some(second) = block.iter().find(|&v| count(v) != want) {
                    return Err(Error::NotEquitable {
                        block: i,
                        target: j,
                        first,
                        second,
                    });
                }
                entries[i][j] = want;
            }
            if mode == PartitionMode::SignlessLaplacian {
                entries[i][i] += g.deg(first) as i64;
            }
        }
        Ok(QuotientMatrix {
            mode,
            partition: partition.to_vec(),
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn char_poly(&self) -> IntPoly {
        char_poly(&self.entries)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| x as f64).collect())
            .collect()
    }

    pub fn largest_eigenvalue(&self) -> f64 {
        largest_eigenvalue_small(&self.to_f64())
    }
}

/// Characteristic polynomial `det(xI - B)`, highest degree first, by
/// Faddeev-LeVerrier.
fn char_poly_f64(b: &[Vec<f64>]) -> Vec<f64> {
    let k = b.len();
    let mut coeffs = vec![1.0];
    let mut m = vec![vec![0.0; k]; k];
    for step in 1..=k {
        // M_step = B M_{step-1} + c_{step-1} I
        let prev = m.clone();
        for i in 0..k {
            for j in 0..k {
                m[i][j] = (0..k).map(|l| b[i][l] * prev[l][j]).sum::<f64>();
            }
            m[i][i] += coeffs[step - 1];
        }
        let trace: f64 = (0..k)
            .map(|i| (0..k).map(|l| b[i][l] * m[l][i]).sum::<f64>())
            .sum();
        coeffs.push(-trace / step as f64);
    }
    coeffs
}

fn horner(p: &[f64], x: f64) -> f64 {
    p.iter().fold(0.0, |acc, c| acc * x + c)
}

fn derivative(p: &[f64]) -> Vec<f64> {
    let d = p.len() - 1;
    p[..d]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (d - i) as f64)
        .collect()
}

fn bisect(p: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let neg_lo = horner(p, lo) < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (horner(p, mid) < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sorted real roots of a polynomial (highest degree first, nonzero lead),
/// found by bisection between consecutive critical points inside the Cauchy
/// bound.
fn real_roots(p: &[f64]) -> Vec<f64> {
    let deg = p.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-p[1] / p[0]];
    }
    let bound = 1.0 + p[1..].iter().map(|c| (c / p[0]).abs()).fold(0.0, f64::max);
    let mut knots = vec![-bound];
    knots.extend(
        real_roots(&derivative(p))
            .into_iter()
            .filter(|c| c.abs() < bound),
    );
    knots.push(bound);
    let scale = p.iter().map(|c| c.abs()).fold(0.0, f64::max) * bound.powi(deg as i32);
    let mut roots = Vec::new();
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (horner(p, a), horner(p, b));
        if fa.abs() <= 1e-14 * scale {
            if roots.last().is_none_or(|&r: &f64| (r - a).abs() > 1e-9) {
                roots.push(a);
            }
        } else if (fa < 0.0) != (fb < 0.0) && fb.abs() > 1e-14 * scale {
            roots.push(bisect(p, a, b));
        }
    }
    let last = *knots.last().expect("nonempty");
    if horner(p, last).abs() <= 1e-14 * scale
        && roots.last().is_none_or(|&r| (r - last).abs() > 1e-9)
    {
        roots.push(last);
    }
    roots
}

/// Largest real eigenvalue of a small (at most 4 x 4) real matrix.
pub fn largest_eigenvalue_small(b: &[Vec<f64>]) -> f64 {
    assert!(b.len() <= 4 && !b.is_empty(), "expects a 1x1 to 4x4 matrix");
    assert!(
        b.iter().all(|r| r.len() == b.len()),
        "matrix must be square"
    );
    let p = char_poly_f64(b);
    real_roots(&p).into_iter().fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::spectral::q_max;

    fn plus_partition(n: usize) -> (Graph, Vec<VertexSet>) {
        let g = split_star_plus(n, 1).unwrap();
        let blocks = vec![
            g.vertex_set([0]).unwrap(),
            g.vertex_set([1, 2]).unwrap(),
            g.vertex_set(3..n).unwrap(),
        ];
        (g, blocks)
    }

    #[test]
    fn split_star_plus_quotient() {
        for n in [6usize, 9, 23] {
            let (g, blocks) = plus_partition(n);
            let qm = QuotientMatrix::new(&g, &blocks, PartitionMode::SignlessLaplacian).unwrap();
            let m = n as i64;
            assert_eq!(
                qm.entries,
                vec![vec![m - 1, 2, m - 3], vec![1, 3, 0], vec![1, 0, 1]]
            );
            assert_eq!(
                qm.char_poly().high_first_i64().unwrap(),
                vec![1, -(m + 3), 3 * m, -4]
            );
            assert!((qm.largest_eigenvalue() - q_max(&g).q).abs() < 1e-9);
        }
    }

    #[test]
    fn complete_bipartite_adjacency_quotient() {
        let (a, b) = (3, 5);
        let g = complete_bipartite(a, b).unwrap();
        let blocks = vec![g.vertex_set(0..a).unwrap(), g.vertex_set(a..a + b).unwrap()];
        let qm = QuotientMatrix::new(&g, &blocks, PartitionMode::Adjacency).unwrap();
        assert_eq!(qm.entries, vec![vec![0, 5], vec![3, 0]]);
        assert!((qm.largest_eigenvalue() - 15f64.sqrt()).abs() < 1e-12);
        assert!(
            (largest_eigenvalue_small(&[vec![0.0, 7.0], vec![2.0, 0.0]]) - 14f64.sqrt()).abs()
                < 1e-12
        );
    }

    #[test]
    fn antipodal_partition_of_c6() {
        let g = cycle(6).unwrap();
        let blocks: Vec<_> = (0..3).map(|i| g.vertex_set([i, i + 3]).unwrap()).collect();
        let qm = QuotientMatrix::new(&g, &blocks, PartitionMode::Adjacency).unwrap();
        assert_eq!(
            qm.entries,
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        assert!((qm.largest_eigenvalue() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn non_equitable_partition_is_reported() {
        let g = path(4).unwrap();
        let blocks = vec![g.vertex_set([0, 1]).unwrap(), g.vertex_set([2, 3]).unwrap()];
        let err = QuotientMatrix::new(&g, &blocks, PartitionMode::Adjacency).unwrap_err();
        assert_eq!(
            err,
            Error::NotEquitable {
                block: 0,
                target: 1,
                first: 0,
                second: 1
            }
        );
        let err = QuotientMatrix::new(&g, &blocks[..1], PartitionMode::Adjacency).unwrap_err();
        assert!(matches!(err, Error::InvalidPartition(_)));
    }

    #[test]
    fn repeated_roots() {
        // (x-2)^2 (x+1): double root at the top
        let b = vec![
            vec![2.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, -1.0],
        ];
        assert!((largest_eigenvalue_small(&b) - 2.0).abs() < 1e-9);
        let j4 = vec![vec![1.0; 4]; 4];
        assert!((largest_eigenvalue_small(&j4) - 4.0).abs() < 1e-9);
    }
}
