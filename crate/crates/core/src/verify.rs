//! Exhaustive checks of the extremal and enumerative claims at small orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_key, CanonicalKey};
use crate::enumerate::{enumerate, Constraints, ENUM_MAX_ORDER};
use crate::error::{Error, Result};
use crate::families::{complete, friendship, h_graph, split_star, split_star_plus};
use crate::forbidden::{has_path_subgraph, is_free, Pattern};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::bounds::{das_bound_exact, max_degree_pressure_exact};
use crate::spectral::exact::{char_poly, cmp_largest_roots, is_largest_root, ratio, IntPoly};
use crate::spectral::{
    closed_q_friendship, closed_q_splitstar2, closed_q_splitstarplus1, q_max,
    signless_laplacian_int,
};

/// Numeric values this close are compared exactly.
pub const TIE_BAND: f64 = 1e-9;

/// Agreement required between the numeric maximum and a closed form.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-8;

fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

fn q_poly(g: &Graph) -> IntPoly {
    char_poly(&signless_laplacian_int(g))
}

/// The `q`-maximisers of a list of graphs, ties settled exactly.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Maximum {
    pub max_q: f64,
    pub witnesses: Vec<CanonicalKey>,
    /// `max_q` minus the largest `q` among non-maximisers.
    pub runner_up_gap: Option<f64>,
}

pub fn maximize(graphs: &[Graph]) -> Option<Maximum> {
    if graphs.is_empty() {
        return None;
    }
    let qs = par_map(graphs, |g| q_max(g).q);
    let top = qs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let band: Vec<usize> = (0..graphs.len())
        .filter(|&i| qs[i] >= top - TIE_BAND)
        .collect();
    let polys: Vec<IntPoly> = band.iter().map(|&i| q_poly(&graphs[i])).collect();
    let mut best = 0;
    for j in 1..band.len() {
        if cmp_largest_roots(&polys[j], &polys[best]) == Ordering::Greater {
            best = j;
        }
    }
    let is_witness: Vec<bool> = (0..band.len())
        .map(|j| j == best || cmp_largest_roots(&polys[j], &polys[best]) == Ordering::Equal)
        .collect();
    let mut witnesses = Vec::new();
    let mut max_q = f64::NEG_INFINITY;
    for (j, &i) in band.iter().enumerate() {
        if is_witness[j] {
            witnesses.push(canonical_key(&graphs[i]).expect("enumerated orders are small"));
            max_q = max_q.max(qs[i]);
        }
    }
    witnesses.sort_unstable();
    witnesses.dedup();
    let runner_up = (0..graphs.len())
        .filter(|i| band.binary_search(i).map_or(true, |j| !is_witness[j]))
        .map(|i| qs[i])
        .fold(None, |acc: Option<f64>, q| {
            Some(acc.map_or(q, |a| a.max(q)))
        });
    Some(Maximum {
        max_q,
        witnesses,
        runner_up_gap: runner_up.map(|r| max_q - r),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub family: Vec<String>,
    /// Graphs searched before the freeness filter.
    pub universe: usize,
    pub count_free: usize,
    pub max_q: f64,
    pub witnesses: Vec<CanonicalKey>,
    pub unique: bool,
    pub runner_up_gap: Option<f64>,
}

fn report(
    n: usize,
    family: &[Pattern],
    universe: usize,
    graphs: &[Graph],
) -> Result<ExtremalReport> {
    let m = maximize(graphs).ok_or_else(|| Error::InvalidParameters {
        family: "extremal-search",
        reason: format!("no admissible graphs of order {n}"),
    })?;
    Ok(ExtremalReport {
        n,
        family: family.iter().map(|p| p.name().to_string()).collect(),
        universe,
        count_free: graphs.len(),
        max_q: m.max_q,
        unique: m.witnesses.len() == 1,
        witnesses: m.witnesses,
        runner_up_gap: m.runner_up_gap,
    })
}

/// Maximum `q` over the `family`-free graphs of order `n` without isolated
/// vertices.
pub fn extremal_search(n: usize, family: &[Pattern]) -> Result<ExtremalReport> {
    let all: Vec<Graph> = enumerate(n, Constraints::NO_ISOLATED)?.collect();
    let keep = par_map(&all, |g| is_free(g, family));
    let free: Vec<Graph> = all
        .iter()
        .zip(keep)
        .filter(|&(_g, k)| k)
        .map(|(g, _k)| g.clone())
        .collect();
    report(n, family, all.len(), &free)
}

/// The three forbidden families with a known unique maximiser.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtremalClaim {
    /// θ(1,2,2)-free: the friendship graph.
    #[serde(rename = "theta-1-2-2")]
    Theta122,
    /// θ(1,2,3)-free: `S_{n,2}`.
    #[serde(rename = "theta-1-2-3")]
    Theta123,
    /// {θ(1,2,2), F_5}-free: `S_{n,1}^+`.
    #[serde(rename = "theta-1-2-2,f5")]
    Theta122F5,
}

impl ExtremalClaim {
    pub const ALL: [ExtremalClaim; 3] = [
        ExtremalClaim::Theta122,
        ExtremalClaim::Theta123,
        ExtremalClaim::Theta122F5,
    ];

    pub fn patterns(self) -> Vec<Pattern> {
        let names: &[&str] = match self {
            ExtremalClaim::Theta122 => &["theta-1-2-2"],
            ExtremalClaim::Theta123 => &["theta-1-2-3"],
            ExtremalClaim::Theta122F5 => &["theta-1-2-2", "f5"],
        };
        names
            .iter()
            .map(|s| s.parse().expect("built-in pattern"))
            .collect()
    }

    pub fn extremal_graph(self, n: usize) -> Result<Graph> {
        match self {
            ExtremalClaim::Theta122 => friendship(n),
            ExtremalClaim::Theta123 => split_star(n, 2),
            ExtremalClaim::Theta122F5 => split_star_plus(n, 1),
        }
    }

    pub fn closed_form(self, n: usize) -> Result<f64> {
        match self {
            ExtremalClaim::Theta122 => closed_q_friendship(n),
            ExtremalClaim::Theta123 => closed_q_splitstar2(n),
            ExtremalClaim::Theta122F5 => closed_q_splitstarplus1(n),
        }
    }

    /// Smallest order at which the claim is asserted.
    pub fn min_order(self) -> usize {
        6
    }
}

impl fmt::Display for ExtremalClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .patterns()
            .iter()
            .map(|p| p.name().to_string())
            .collect();
        write!(f, "{{{}}}-free", names.join(","))
    }
}

impl FromStr for ExtremalClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta-1-2-2" => Ok(ExtremalClaim::Theta122),
            "theta-1-2-3" => Ok(ExtremalClaim::Theta123),
            "theta-1-2-2,f5" | "f5,theta-1-2-2" => Ok(ExtremalClaim::Theta122F5),
            _ => Err(Error::Unknown {
                kind: "claim",
                value: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimVerdict {
    pub claim: ExtremalClaim,
    pub n: usize,
    /// The expected maximiser.
    pub expected: CanonicalKey,
    pub expected_q: f64,
    /// `None` below the asserted range: the result is reported only.
    pub pass: Option<bool>,
    pub report: ExtremalReport,
}

/// Checks that the expected graph is the unique maximiser and that its `q`
/// matches the closed form. Orders 4 and 5 are searched but not judged.
pub fn verify_claim(claim: ExtremalClaim, n: usize) -> Result<ClaimVerdict> {
    if n < 4 {
        return Err(Error::InvalidParameters {
            family: "verify",
            reason: format!("need n >= 4, got {n}"),
        });
    }
    if n > ENUM_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: ENUM_MAX_ORDER,
        });
    }
    let expected = claim.extremal_graph(n)?;
    let expected_key = canonical_key(&expected)?;
    let expected_q = claim.closed_form(n)?;
    let report = extremal_search(n, &claim.patterns())?;
    let pass = (n >= claim.min_order()).then(|| {
        report.unique
            && report.witnesses[0] == expected_key
            && (report.max_q - expected_q).abs() <= CLOSED_FORM_TOLERANCE
    });
    Ok(ClaimVerdict {
        claim,
        n,
        expected: expected_key,
        expected_q,
        pass,
        report,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathBoundReport {
    pub n: usize,
    pub k: usize,
    /// Number of `P_{k+1}`-free classes of order `n`.
    pub free_count: usize,
    pub max_edges: usize,
    /// `(k-1)n/2`.
    pub bound: f64,
    /// Free graphs with exactly `(k-1)n/2` edges.
    pub equality: Vec<CanonicalKey>,
    pub pass: bool,
}

fn is_union_of_cliques(g: &Graph, k: usize) -> bool {
    g.components()
        .iter()
        .all(|c| c.len() == k && g.edges_within(c).expect("same universe") == k * (k - 1) / 2)
}

/// Edge bound for graphs without a path on `k + 1` vertices, with equality
/// exactly for disjoint unions of `K_k`.
pub fn verify_path_bound(n: usize, k: usize) -> Result<PathBoundReport> {
    if n > 7 || k < 2 || k > n {
        return Err(Error::InvalidParameters {
            family: "path-bound",
            reason: format!("need n <= 7 and 2 <= k <= n, got n={n}, k={k}"),
        });
    }
    let free: Vec<Graph> = enumerate(n, Constraints::NONE)?
        .filter(|g| !has_path_subgraph(g, k + 1))
        .collect();
    let twice_bound = (k - 1) * n;
    let max_edges = free.iter().map(Graph::size).max().unwrap_or(0);
    let eq: Vec<&Graph> = free
        .iter()
        .filter(|g| 2 * g.size() == twice_bound)
        .collect();
    let pass = 2 * max_edges <= twice_bound
        && eq.iter().all(|g| is_union_of_cliques(g, k))
        && if n.is_multiple_of(k) {
            eq.len() == 1
        } else {
            eq.is_empty()
        };
    Ok(PathBoundReport {
        n,
        k,
        free_count: free.len(),
        max_edges,
        bound: twice_bound as f64 / 2.0,
        equality: eq
            .iter()
            .map(|g| canonical_key(g).expect("small"))
            .collect(),
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HGraphReport {
    pub n: usize,
    pub k: usize,
    pub expected: CanonicalKey,
    pub report: ExtremalReport,
    pub pass: bool,
}

/// `H_{n,k}` against every connected graph with `n + k` edges.
pub fn verify_h_graph_max(n: usize, k: usize) -> Result<HGraphReport> {
    let expected = h_graph(n, k)?;
    let graphs: Vec<Graph> = enumerate(n, Constraints::CONNECTED)?
        .filter(|g| g.size() == n + k)
        .collect();
    let report = report(n, &[], graphs.len(), &graphs)?;
    let expected = canonical_key(&expected)?;
    let pass = report.unique && report.witnesses[0] == expected;
    Ok(HGraphReport {
        n,
        k,
        expected,
        report,
        pass,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct DegreeBoundsReport {
    pub n: usize,
    /// Classes of order `n` without isolated vertices.
    pub graphs: usize,
    pub connected: usize,
    /// Graphs where `q <= pressure <= das` fails.
    pub chain_violations: Vec<String>,
    /// Connected graphs with `q` equal to the maximum degree pressure.
    pub equality_connected: usize,
    /// Connected regular or semi-regular bipartite graphs.
    pub expected_connected: usize,
    pub mismatches_connected: Vec<String>,
    pub equality_disconnected: usize,
    pub mismatches_disconnected: Vec<String>,
    pub pass: bool,
}

/// Whether `q(g)` equals its maximum degree pressure, decided exactly.
pub fn pressure_equality(g: &Graph) -> Result<bool> {
    let (_, p) = max_degree_pressure_exact(g)?;
    let pf = *p.numer() as f64 / *p.denom() as f64;
    if (q_max(g).q - pf).abs() > TIE_BAND {
        return Ok(false);
    }
    Ok(is_largest_root(&q_poly(g), &ratio(*p.numer(), *p.denom())))
}

/// Predicted equality: some component is regular or semi-regular bipartite
/// and attains the maximum degree pressure of the whole graph. For connected
/// graphs this is just "regular or semi-regular bipartite".
pub fn pressure_equality_predicted(g: &Graph) -> Result<bool> {
    let (_, p) = max_degree_pressure_exact(g)?;
    for c in g.components() {
        let h = g.induced_subgraph(&c)?;
        if (h.is_regular() || h.is_semiregular_bipartite()) && max_degree_pressure_exact(&h)?.1 == p
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The bound chain and its equality cases over every graph of order `n`
/// without isolated vertices.
pub fn verify_degree_bounds(n: usize) -> Result<DegreeBoundsReport> {
    if !(2..=7).contains(&n) {
        return Err(Error::InvalidParameters {
            family: "degree-bounds",
            reason: format!("need 2 <= n <= 7, got {n}"),
        });
    }
    let graphs: Vec<Graph> = enumerate(n, Constraints::NO_ISOLATED)?.collect();
    let rows = par_map(&graphs, |g| -> Result<(bool, bool, bool)> {
        let (_, p) = max_degree_pressure_exact(g)?;
        let pf = *p.numer() as f64 / *p.denom() as f64;
        let chain = q_max(g).q <= pf + TIE_BAND && p <= das_bound_exact(g)?;
        Ok((
            chain,
            pressure_equality(g)?,
            pressure_equality_predicted(g)?,
        ))
    });
    let mut r = DegreeBoundsReport {
        n,
        graphs: graphs.len(),
        ..Default::default()
    };
    for (g, row) in graphs.iter().zip(rows) {
        let (chain, eq, predicted) = row?;
        let code = graph6::encode(g);
        if !chain {
            r.chain_violations.push(code.clone());
        }
        if g.is_connected() {
            r.connected += 1;
            r.equality_connected += usize::from(eq);
            r.expected_connected += usize::from(g.is_regular() || g.is_semiregular_bipartite());
            if eq != (g.is_regular() || g.is_semiregular_bipartite()) {
                r.mismatches_connected.push(code);
            }
        } else {
            r.equality_disconnected += usize::from(eq);
            if eq != predicted {
                r.mismatches_disconnected.push(code);
            }
        }
    }
    r.pass = r.chain_violations.is_empty()
        && r.mismatches_connected.is_empty()
        && r.mismatches_disconnected.is_empty();
    Ok(r)
}

/// `n K_k`, the equality graph of the path bound.
pub fn clique_union(n: usize, k: usize) -> Result<Graph> {
    let mut g = complete(k)?;
    for _ in 1..n / k {
        g = g.disjoint_union(&complete(k)?)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims_at_six() {
        for claim in ExtremalClaim::ALL {
            let v = verify_claim(claim, 6).unwrap();
            assert_eq!(v.pass, Some(true), "{claim}: {:?}", v.report);
            assert!(v.report.runner_up_gap.unwrap() > 0.0);
        }
        let v = verify_claim(ExtremalClaim::Theta123, 6).unwrap();
        assert!((v.report.max_q - (4.0 + 2.0 * 3f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn small_orders_are_reported_not_judged() {
        let v = verify_claim(ExtremalClaim::Theta122, 5).unwrap();
        assert_eq!(v.pass, None);
        assert!(verify_claim(ExtremalClaim::Theta122, 3).is_err());
        assert!(verify_claim(ExtremalClaim::Theta122, 9).is_err());
    }

    #[test]
    fn path_bound_examples() {
        let r = verify_path_bound(6, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_edges, 6);
        assert_eq!(
            r.equality,
            vec![canonical_key(&clique_union(6, 3).unwrap()).unwrap()]
        );
        let r = verify_path_bound(5, 3).unwrap();
        assert!(r.pass && r.equality.is_empty());
        assert_eq!(r.max_edges, 4);
        let r = verify_path_bound(4, 2).unwrap();
        assert_eq!(r.max_edges, 2);
        assert_eq!(r.equality.len(), 1);
    }

    #[test]
    fn h_graph_small() {
        assert!(verify_h_graph_max(7, 3).unwrap().pass);
        assert!(verify_h_graph_max(7, 5).is_err());
    }

    #[test]
    fn degree_bounds_small() {
        for n in 2..=6 {
            let r = verify_degree_bounds(n).unwrap();
            assert!(r.pass, "{r:?}");
        }
        // K3 + K2 attains equality without being regular
        let g = complete(3)
            .unwrap()
            .disjoint_union(&complete(2).unwrap())
            .unwrap();
        assert!(pressure_equality(&g).unwrap());
        assert!(pressure_equality_predicted(&g).unwrap());
    }

    #[test]
    fn report_serialises_witnesses_as_graph6() {
        let v = verify_claim(ExtremalClaim::Theta122F5, 6).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["claim"], "theta-1-2-2,f5");
        assert_eq!(json["report"]["witnesses"][0], v.expected.to_graph6());
        assert_eq!(
            json["report"]["family"],
            serde_json::json!(["theta-1-2-2", "f5"])
        );
    }

    #[test]
    fn maximize_settles_exact_ties() {
        // two isomorphic copies are one witness; a cospectral-free pair is not a tie
        let a = friendship(5).unwrap();
        let b = a.relabel(&[4, 3, 2, 1, 0]).unwrap();
        let m = maximize(&[a.clone(), b, split_star(5, 1).unwrap()]).unwrap();
        assert_eq!(m.witnesses.len(), 1);
        assert!(maximize(&[]).is_none());
    }
}
