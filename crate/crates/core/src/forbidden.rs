//! Subgraph containment (not induced) by backtracking.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{friendship, generalized_theta, path};
use crate::graph::{Bits, Graph};

/// A forbidden graph `H`. Isolated vertices are rejected since they never
/// constrain containment beyond the host order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    target: Graph,
    /// Pattern vertices in search order.
    order: Vec<usize>,
}

impl Pattern {
    pub fn new(name: impl Into<String>, target: Graph) -> Result<Pattern> {
        if let Some(v) = target.vertices().iter().find(|&v| target.deg(v) == 0) {
            return Err(Error::IsolatedVertex(v));
        }
        let order = search_order(&target);
        Ok(Pattern {
            name: name.into(),
            target,
            order,
        })
    }

    pub fn theta(lengths: &[usize]) -> Result<Pattern> {
        let mut ls = lengths.to_vec();
        ls.sort_unstable();
        let name = std::iter::once("theta".to_string())
            .chain(ls.iter().map(|l| l.to_string()))
            .collect::<Vec<_>>()
            .join("-");
        Pattern::new(name, generalized_theta(&ls)?)
    }

    /// `P_k`: the path on `k >= 2` vertices.
    pub fn path(k: usize) -> Result<Pattern> {
        if k < 2 {
            return Err(Error::InvalidParameters {
                family: "path",
                reason: format!("pattern paths need k >= 2, got {k}"),
            });
        }
        Pattern::new(format!("p{k}"), path(k)?)
    }

    pub fn friendship(n: usize) -> Result<Pattern> {
        Pattern::new(format!("f{n}"), friendship(n)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name)
    }
}

/// Accepts `theta-a-b-c` (any number of lengths), `f<n>` and `p<k>`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        let unknown = || Error::Unknown {
            kind: "pattern",
            value: s.to_string(),
        };
        if let Some(rest) = s.strip_prefix("theta-") {
            let ls = rest
                .split('-')
                .map(|t| t.parse::<usize>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>>>()?;
            return Pattern::theta(&ls);
        }
        let number = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
        if let Some(rest) = s.strip_prefix('f') {
            return Pattern::friendship(number(rest)?);
        }
        if let Some(rest) = s.strip_prefix('p') {
            return Pattern::path(number(rest)?);
        }
        Err(unknown())
    }
}

/// Parses a comma-separated pattern list such as `theta-1-2-2,f5`.
pub fn parse_patterns(list: &str) -> Result<Vec<Pattern>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

/// Injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn is_valid(&self, host: &Graph, pattern: &Pattern) -> bool {
        let t = &pattern.target;
        let distinct: HashSet<_> = self.map.iter().collect();
        self.map.len() == t.order()
            && distinct.len() == t.order()
            && self.map.iter().all(|&h| h < host.order())
            && t.edges()
                .all(|(a, b)| host.has_edge(self.map[a], self.map[b]))
    }
}

/// Highest degree first, then always the unplaced vertex with the most
/// placed neighbours (ties by degree, then label).
fn search_order(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (t.row(v) & placed).count_ones(),
                    t.deg(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

/// First embedding in search order, if any.
pub fn contains_subgraph(host: &Graph, pattern: &Pattern) -> Option<Embedding> {
    let t = &pattern.target;
    if t.order() > host.order() || t.size() > host.size() || t.max_degree() > host.max_degree() {
        return None;
    }
    let mut map = vec![usize::MAX; t.order()];
    if extend(host, pattern, 0, 0, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn extend(host: &Graph, pattern: &Pattern, depth: usize, used: u64, map: &mut [usize]) -> bool {
    let t = &pattern.target;
    if depth == pattern.order.len() {
        return true;
    }
    let p = pattern.order[depth];
    let mut cand = host.vertices().bits() & !used;
    for q in pattern.order[..depth].iter().copied() {
        if t.has_edge(p, q) {
            cand &= host.row(map[q]);
        }
    }
    let need = t.deg(p);
    for h in Bits(cand) {
        if host.deg(h) < need {
            continue;
        }
        map[p] = h;
        if extend(host, pattern, depth + 1, used | 1 << h, map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

/// True iff none of the patterns embeds in `host`.
pub fn is_free(host: &Graph, family: &[Pattern]) -> bool {
    family.iter().all(|p| contains_subgraph(host, p).is_none())
}

/// Whether `host` contains a path on `k` vertices.
pub fn has_path_subgraph(host: &Graph, k: usize) -> bool {
    let n = host.order();
    if k == 0 || k == 1 {
        return k <= n;
    }
    if k > n {
        return false;
    }
    // (visited set, endpoint) pairs already known not to extend to k vertices
    let mut dead: HashSet<(u64, usize)> = HashSet::new();
    (0..n).any(|v| grow(host, k, 1 << v, v, &mut dead))
}

fn grow(
    host: &Graph,
    k: usize,
    visited: u64,
    end: usize,
    dead: &mut HashSet<(u64, usize)>,
) -> bool {
    if visited.count_ones() as usize == k {
        return true;
    }
    if dead.contains(&(visited, end)) {
        return false;
    }
    for w in Bits(host.row(end) & !visited) {
        if grow(host, k, visited | 1 << w, w, dead) {
            return true;
        }
    }
    dead.insert((visited, end));
    false
}
