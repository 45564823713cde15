//! Degree-based upper bounds on `q` and the neighbourhood edge decomposition.
//!
//! For a vertex `u` the degree pressure is `d(u) + (sum of d(w), w ~ u) / d(u)`.
//! Its maximum bounds `q(G)` from above and is itself bounded by
//! `2m/(n-1) + n - 2`.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

fn nonisolated(g: &Graph, u: usize) -> Result<usize> {
    let d = g.degree(u)?;
    if d == 0 {
        Err(Error::IsolatedVertex(u))
    } else {
        Ok(d)
    }
}

/// Exact degree pressure of `u` as a fraction.
pub fn degree_pressure_exact(g: &Graph, u: usize) -> Result<Ratio<i64>> {
    let d = nonisolated(g, u)? as i64;
    let s: i64 = Bits(g.row(u)).map(|w| g.deg(w) as i64).sum();
    Ok(Ratio::new(d * d + s, d))
}

pub fn degree_pressure(g: &Graph, u: usize) -> Result<f64> {
    let r = degree_pressure_exact(g, u)?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

/// Lowest-indexed vertex of maximum degree pressure, with the exact value.
pub fn max_degree_pressure_exact(g: &Graph) -> Result<(usize, Ratio<i64>)> {
    let mut best = (0, degree_pressure_exact(g, 0)?);
    for v in 1..g.order() {
        let p = degree_pressure_exact(g, v)?;
        if p > best.1 {
            best = (v, p);
        }
    }
    Ok(best)
}

pub fn max_degree_pressure(g: &Graph) -> Result<(usize, f64)> {
    let (v, r) = max_degree_pressure_exact(g)?;
    Ok((v, *r.numer() as f64 / *r.denom() as f64))
}

/// `2m/(n-1) + n - 2` as a fraction.
pub fn das_bound_exact(g: &Graph) -> Result<Ratio<i64>> {
    let n = g.order() as i64;
    if n < 2 {
        return Err(Error::InvalidParameters {
            family: "das-bound",
            reason: "need n >= 2".into(),
        });
    }
    let m = g.size() as i64;
    Ok(Ratio::new(2 * m, n - 1) + Ratio::from_integer(n - 2))
}

pub fn das_bound(g: &Graph) -> Result<f64> {
    let r = das_bound_exact(g)?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

/// Degree of `u`, edges inside `N(u)`, and edges from `N(u)` to `N^2(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodDecomposition {
    pub degree: usize,
    pub inner_edges: usize,
    pub outer_edges: usize,
}

impl NeighborhoodDecomposition {
    /// `d + 2 e(N(u)) + e(N(u), N^2(u))`, which equals the degree sum over `N(u)`.
    pub fn degree_sum(&self) -> usize {
        self.degree + 2 * self.inner_edges + self.outer_edges
    }
}

pub fn neighborhood_decomposition(g: &Graph, u: usize) -> Result<NeighborhoodDecomposition> {
    let degree = nonisolated(g, u)?;
    let n1 = g.neighbors(u)?;
    let n2 = g.second_neighborhood(u)?;
    Ok(NeighborhoodDecomposition {
        degree,
        inner_edges: g.edges_within(&n1)?,
        outer_edges: g.edges_between(&n1, &n2)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;
    use crate::spectral::q_max;

    #[test]
    fn pressure_equality_cases() {
        let p3 = path(3).unwrap();
        for v in 0..3 {
            assert_eq!(degree_pressure(&p3, v).unwrap(), 3.0);
        }
        assert!((q_max(&p3).q - 3.0).abs() < 1e-12);

        let k4 = complete(4).unwrap();
        assert_eq!(max_degree_pressure(&k4).unwrap(), (0, 6.0));
        assert!((q_max(&k4).q - 6.0).abs() < 1e-12);
    }

    #[test]
    fn pressure_strict_for_friendship() {
        let f5 = friendship(5).unwrap();
        assert_eq!(degree_pressure(&f5, 0).unwrap(), 6.0);
        let (v, p) = max_degree_pressure(&f5).unwrap();
        assert_eq!((v, p), (0, 6.0));
        assert!(p > q_max(&f5).q + 0.4);
    }

    #[test]
    fn das_examples() {
        for n in 2..10 {
            let k = complete(n).unwrap();
            assert_eq!(das_bound(&k).unwrap(), 2.0 * n as f64 - 2.0);
            assert_eq!(
                das_bound_exact(&k).unwrap(),
                max_degree_pressure_exact(&k).unwrap().1
            );
            let s = star(n).unwrap();
            assert_eq!(das_bound_exact(&s).unwrap(), Ratio::from_integer(n as i64));
            assert_eq!(
                max_degree_pressure_exact(&s).unwrap().1,
                Ratio::from_integer(n as i64)
            );
        }
        let c5 = cycle(5).unwrap();
        assert_eq!(das_bound(&c5).unwrap(), 5.5);
        assert_eq!(max_degree_pressure(&c5).unwrap().1, 4.0);
    }

    #[test]
    fn isolated_vertices_are_rejected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(degree_pressure(&g, 2), Err(Error::IsolatedVertex(2)));
        assert_eq!(max_degree_pressure(&g), Err(Error::IsolatedVertex(2)));
        assert!(das_bound(&complete(1).unwrap()).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = neighborhood_decomposition(&friendship(7).unwrap(), 0).unwrap();
        assert_eq!((d.degree, d.inner_edges, d.outer_edges), (6, 3, 0));
        let d = neighborhood_decomposition(&witness_g3(6).unwrap(), 0).unwrap();
        assert_eq!((d.degree, d.inner_edges, d.outer_edges), (4, 1, 3));
        let d = neighborhood_decomposition(&star(5).unwrap(), 0).unwrap();
        assert_eq!((d.degree, d.inner_edges, d.outer_edges), (4, 0, 0));
        assert!(neighborhood_decomposition(&Graph::empty(2).unwrap(), 0).is_err());
    }
}
