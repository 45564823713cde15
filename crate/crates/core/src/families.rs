//! Named graph families with fixed, documented labelings.
//!
//! Hubs, poles and apexes always come first so that fixtures and canonical
//! keys are stable across runs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn invalid(family: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("star", format!("need n >= 2, got {n}")));
    }
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete-bipartite", "both sides must be nonempty"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Friendship graph: centre 0 and triangles `{0, 2i+1, 2i+2}`. For even `n`
/// the last vertex is a pendant attached to the centre.
pub fn friendship(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("friendship", format!("need n >= 3, got {n}")));
    }
    let odd = if n % 2 == 1 { n } else { n - 1 };
    let mut edges: Vec<(usize, usize)> = (1..odd).map(|v| (0, v)).collect();
    edges.extend((1..odd).step_by(2).map(|v| (v, v + 1)));
    if n.is_multiple_of(2) {
        edges.push((0, n - 1));
    }
    Graph::from_edges(n, edges)
}

/// `S_{n,k}`: clique on `0..k` joined to the independent set `k..n`.
pub fn split_star(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || k + 2 > n {
        return Err(invalid(
            "split-star",
            format!("need 1 <= k <= n-2, got n={n}, k={k}"),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .collect();
    edges.extend((0..k).flat_map(|u| (k..n).map(move |v| (u, v))));
    Graph::from_edges(n, edges)
}

/// `S_{n,k}` plus the edge `{k, k+1}` inside the independent set.
pub fn split_star_plus(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || k + 2 > n {
        return Err(invalid(
            "split-star-plus",
            format!("need k >= 1 and n-k >= 2, got n={n}, k={k}"),
        ));
    }
    split_star(n, k)?.with_edge(k, k + 1)
}

/// Two poles (0 and 1) joined by internally disjoint paths of the given
/// lengths. Internal vertices are numbered path by path, shortest path first.
pub fn generalized_theta(lengths: &[usize]) -> Result<Graph> {
    let mut ls = lengths.to_vec();
    ls.sort_unstable();
    if ls.len() < 2 {
        return Err(invalid("theta", "need at least two paths"));
    }
    if ls[0] == 0 {
        return Err(invalid("theta", "path lengths must be positive"));
    }
    if ls[1] < 2 {
        return Err(invalid("theta", "at most one path may have length 1"));
    }
    let n = 2 + ls.iter().map(|l| l - 1).sum::<usize>();
    if n > MAX_ORDER {
        return Err(Error::CapacityExceeded(n));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for &l in &ls {
        let mut prev = 0;
        for _ in 1..l {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edges(n, edges)
}

pub fn theta(l1: usize, l2: usize, l3: usize) -> Result<Graph> {
    generalized_theta(&[l1, l2, l3])
}

/// Star `K_{1,n-1}` (hub 0) whose leaf 1 is also joined to leaves `2..=k+2`.
pub fn h_graph(n: usize, k: usize) -> Result<Graph> {
    if k < 3 || k + 3 > n {
        return Err(invalid(
            "h-graph",
            format!("need 3 <= k <= n-3, got n={n}, k={k}"),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    edges.extend((2..k + 3).map(|v| (1, v)));
    Graph::from_edges(n, edges)
}

/// Apex 0 joined to the disjoint triangles `{3i+1, 3i+2, 3i+3}`.
pub fn cone_over_triangles(n: usize) -> Result<Graph> {
    if n < 4 || n % 3 != 1 {
        return Err(invalid(
            "cone-over-triangles",
            format!("need n >= 4 with n = 1 mod 3, got {n}"),
        ));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    for base in (1..n).step_by(3) {
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
    }
    Graph::from_edges(n, edges)
}

/// Hub 0 with neighbourhood `1..=n-2` and one outside vertex `n-1`.
/// `matching` lists the edges inside the neighbourhood; the outside vertex
/// gets `outside`.
fn hub_with_outside(n: usize, matching: &[(usize, usize)], outside: &[usize]) -> Result<Graph> {
    let w = n - 1;
    let mut edges: Vec<(usize, usize)> = (1..w).map(|v| (0, v)).collect();
    edges.extend_from_slice(matching);
    edges.extend(outside.iter().map(|&v| (w, v)));
    Graph::from_edges(n, edges)
}

/// Odd order: the neighbourhood carries `(n-3)/2` matching edges
/// `{1,2}, {3,4}, ...` plus the isolated vertex `n-2`; the outside vertex
/// sees the lower end of each matching edge and the isolated vertex.
pub fn witness_g1(n: usize) -> Result<Graph> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(invalid("witness-g1", format!("need odd n >= 7, got {n}")));
    }
    let matching: Vec<_> = (1..n - 2).step_by(2).map(|v| (v, v + 1)).collect();
    let mut outside: Vec<_> = matching.iter().map(|&(a, _)| a).collect();
    outside.push(n - 2);
    hub_with_outside(n, &matching, &outside)
}

/// Even order: perfect matching `{1,2}, ..., {n-3,n-2}` on the neighbourhood;
/// the outside vertex sees the lower end of each edge.
pub fn witness_g2(n: usize) -> Result<Graph> {
    if n < 6 || n % 2 == 1 {
        return Err(invalid("witness-g2", format!("need even n >= 6, got {n}")));
    }
    let matching: Vec<_> = (1..n - 1).step_by(2).map(|v| (v, v + 1)).collect();
    let outside: Vec<_> = matching.iter().map(|&(a, _)| a).collect();
    hub_with_outside(n, &matching, &outside)
}

/// One edge `{1,2}` in the neighbourhood; the outside vertex sees every
/// neighbourhood vertex except 2, i.e. `n-3` of them.
pub fn witness_g3(n: usize) -> Result<Graph> {
    if n < 6 {
        return Err(invalid("witness-g3", format!("need n >= 6, got {n}")));
    }
    let outside: Vec<_> = std::iter::once(1).chain(3..n - 1).collect();
    hub_with_outside(n, &[(1, 2)], &outside)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Friendship,
    SplitStar,
    SplitStarPlus,
    Theta,
    GeneralizedTheta,
    HGraph,
    ConeOverTriangles,
    WitnessG1,
    WitnessG2,
    WitnessG3,
    Path,
    Cycle,
    Complete,
    Star,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Friendship,
        Family::SplitStar,
        Family::SplitStarPlus,
        Family::Theta,
        Family::GeneralizedTheta,
        Family::HGraph,
        Family::ConeOverTriangles,
        Family::WitnessG1,
        Family::WitnessG2,
        Family::WitnessG3,
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Friendship => "friendship",
            Family::SplitStar => "split-star",
            Family::SplitStarPlus => "split-star-plus",
            Family::Theta => "theta",
            Family::GeneralizedTheta => "generalized-theta",
            Family::HGraph => "h-graph",
            Family::ConeOverTriangles => "cone-over-triangles",
            Family::WitnessG1 => "witness-g1",
            Family::WitnessG2 => "witness-g2",
            Family::WitnessG3 => "witness-g3",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                value: s.to_string(),
            })
    }
}

/// A family together with its integer parameters.
///
/// Parameter layout: `[n]` for single-order families, `[n, k]` for the split
/// stars and the H-graph, `[l1, l2, l3]` for `Theta` and any list of lengths
/// for `GeneralizedTheta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        FamilySpec { family, params }
    }

    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        let arity = |k: usize| -> Result<()> {
            if p.len() == k {
                Ok(())
            } else {
                Err(invalid(
                    self.family.name(),
                    format!("expected {k} parameter(s), got {}", p.len()),
                ))
            }
        };
        match self.family {
            Family::Friendship => arity(1).and_then(|_| friendship(p[0])),
            Family::SplitStar => arity(2).and_then(|_| split_star(p[0], p[1])),
            Family::SplitStarPlus => arity(2).and_then(|_| split_star_plus(p[0], p[1])),
            Family::Theta => arity(3).and_then(|_| theta(p[0], p[1], p[2])),
            Family::GeneralizedTheta => generalized_theta(p),
            Family::HGraph => arity(2).and_then(|_| h_graph(p[0], p[1])),
            Family::ConeOverTriangles => arity(1).and_then(|_| cone_over_triangles(p[0])),
            Family::WitnessG1 => arity(1).and_then(|_| witness_g1(p[0])),
            Family::WitnessG2 => arity(1).and_then(|_| witness_g2(p[0])),
            Family::WitnessG3 => arity(1).and_then(|_| witness_g3(p[0])),
            Family::Path => arity(1).and_then(|_| path(p[0])),
            Family::Cycle => arity(1).and_then(|_| cycle(p[0])),
            Family::Complete => arity(1).and_then(|_| complete(p[0])),
            Family::Star => arity(1).and_then(|_| star(p[0])),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_key(a).unwrap() == canonical_key(b).unwrap()
    }

    #[test]
    fn friendship_shapes() {
        let f5 = friendship(5).unwrap();
        assert_eq!((f5.order(), f5.size()), (5, 6));
        assert_eq!(f5.degree_sequence(), vec![4, 2, 2, 2, 2]);

        let f6 = friendship(6).unwrap();
        assert_eq!((f6.order(), f6.size()), (6, 7));
        assert_eq!(f6.degree_sequence(), vec![5, 2, 2, 2, 2, 1]);

        assert_eq!(friendship(3).unwrap(), complete(3).unwrap());
        assert!(friendship(2).is_err());
    }

    #[test]
    fn split_star_shapes() {
        assert_eq!(split_star(6, 2).unwrap().size(), 9);
        let sp = split_star_plus(6, 1).unwrap();
        assert_eq!(sp.size(), 6);
        assert_eq!(sp.degree_sequence(), vec![5, 2, 2, 1, 1, 1]);
        // K4 minus an edge
        assert!(iso(&split_star(4, 2).unwrap(), &theta(1, 2, 2).unwrap()));
        assert!(split_star(5, 4).is_err());
        assert!(split_star(5, 0).is_err());
        assert!(split_star_plus(4, 3).is_err());
    }

    #[test]
    fn theta_shapes() {
        let t = theta(1, 2, 2).unwrap();
        assert_eq!((t.order(), t.size()), (4, 5));
        assert!(iso(&t, &complete(4).unwrap().without_edge(2, 3).unwrap()));

        let t = theta(1, 2, 3).unwrap();
        assert_eq!((t.order(), t.size()), (5, 6));

        assert!(iso(
            &generalized_theta(&[2, 2, 2]).unwrap(),
            &complete_bipartite(2, 3).unwrap()
        ));

        for ls in [[1usize, 3, 4], [2, 2, 5], [3, 3, 3]] {
            let g = generalized_theta(&ls).unwrap();
            assert_eq!(g.order(), 2 + ls.iter().map(|l| l - 1).sum::<usize>());
            assert_eq!(g.size(), ls.iter().sum::<usize>());
        }
        // order of the lengths is irrelevant
        assert_eq!(theta(3, 1, 2).unwrap(), theta(1, 2, 3).unwrap());

        assert!(theta(1, 1, 2).is_err());
        assert!(theta(0, 2, 2).is_err());
        assert!(generalized_theta(&[3]).is_err());
    }

    #[test]
    fn h_graph_shapes() {
        assert_eq!(h_graph(7, 3).unwrap().size(), 10);
        assert_eq!(
            h_graph(8, 3).unwrap().degree_sequence(),
            vec![7, 5, 2, 2, 2, 2, 1, 1]
        );
        let h = h_graph(6, 3).unwrap();
        assert_eq!(h.size(), 9);
        assert!(iso(&h, &split_star(6, 2).unwrap()));
        for (n, k) in [(6, 2), (6, 4), (8, 6)] {
            assert!(h_graph(n, k).is_err());
        }
    }

    #[test]
    fn cone_shapes() {
        assert_eq!(cone_over_triangles(4).unwrap(), complete(4).unwrap());
        let c = cone_over_triangles(7).unwrap();
        assert_eq!((c.order(), c.size()), (7, 12));
        assert!(cone_over_triangles(6).is_err());
        assert!(cone_over_triangles(1).is_err());
    }

    #[test]
    fn witness_shapes() {
        let g1 = witness_g1(7).unwrap();
        let hood = g1.induced_subgraph(&g1.neighbors(0).unwrap()).unwrap();
        assert_eq!(hood.size(), 2);
        assert_eq!(g1.degree(6).unwrap(), 3);
        assert_eq!(g1.degree(0).unwrap(), 5);

        let g2 = witness_g2(6).unwrap();
        let n1 = g2.neighbors(0).unwrap();
        let hood = g2.induced_subgraph(&n1).unwrap();
        assert_eq!(hood, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        let n2 = g2.second_neighborhood(0).unwrap();
        assert_eq!(g2.edges_between(&n1, &n2).unwrap(), 2);

        let g3 = witness_g3(6).unwrap();
        let n1 = g3.neighbors(0).unwrap();
        let n2 = g3.second_neighborhood(0).unwrap();
        assert_eq!(g3.edges_between(&n1, &n2).unwrap(), 3);
        assert_eq!(g3.edges_within(&n1).unwrap(), 1);

        assert!(witness_g1(8).is_err());
        assert!(witness_g2(7).is_err());
        assert!(witness_g3(5).is_err());
    }

    #[test]
    fn size_formulas_over_parameter_ranges() {
        for n in 3..=40 {
            let f = friendship(n).unwrap();
            assert_eq!(f.size(), 3 * ((n - 1) / 2) + usize::from(n % 2 == 0));
            for k in 1..=n - 2 {
                assert_eq!(
                    split_star(n, k).unwrap().size(),
                    k * (k - 1) / 2 + k * (n - k)
                );
                assert_eq!(
                    split_star_plus(n, k).unwrap().size(),
                    k * (k - 1) / 2 + k * (n - k) + 1
                );
            }
            for k in 3..=n.saturating_sub(3) {
                assert_eq!(h_graph(n, k).unwrap().size(), n + k);
            }
        }
    }

    #[test]
    fn spec_builds_by_name() {
        let spec = FamilySpec::new("split-star".parse().unwrap(), vec![6, 2]);
        assert_eq!(spec.build().unwrap(), split_star(6, 2).unwrap());
        assert!(FamilySpec::new(Family::Friendship, vec![]).build().is_err());
        assert!("petersen".parse::<Family>().is_err());
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }
}
