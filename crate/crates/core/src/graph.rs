//! Immutable simple undirected graphs with one `u64` adjacency row per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order; an adjacency row is one machine word.
pub const MAX_ORDER: usize = 64;

/// A set of vertices drawn from `0..universe`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    universe: usize,
    bits: u64,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet { universe, bits: 0 }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            universe,
            bits: low_mask(universe),
        }
    }

    pub fn new<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet { universe, bits })
    }

    pub(crate) fn from_bits(universe: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !low_mask(universe), 0);
        VertexSet { universe, bits }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.bits >> v & 1 == 1
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_bits(self.universe, self.bits | other.bits)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_bits(self.universe, self.bits & other.bits)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_bits(self.universe, self.bits & !other.bits)
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet::from_bits(self.universe, !self.bits & low_mask(self.universe))
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;

    fn into_iter(self) -> Bits {
        Bits(self.bits)
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone, Debug)]
pub struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { n, rows })
    }

    /// Builds from adjacency rows; rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        let n = rows.len();
        debug_assert!((1..=MAX_ORDER).contains(&n));
        debug_assert!((0..n).all(|v| rows[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|u| Bits(rows[u]).all(|v| rows[v] >> u & 1 == 1)));
        Graph { n, rows }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, members: I) -> Result<VertexSet> {
        VertexSet::new(self.n, members)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                set: s.universe(),
                graph: self.n,
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(self.n, self.rows[v]))
    }

    /// Vertices at distance exactly two from `u`.
    pub fn second_neighborhood(&self, u: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        let first = self.rows[u];
        let reach = Bits(first).fold(0u64, |acc, w| acc | self.rows[w]);
        Ok(VertexSet::from_bits(self.n, reach & !first & !(1 << u)))
    }

    /// Number of edges with one end in `x` and the other in `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        self.check_set(y)?;
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingSets);
        }
        Ok(x.iter()
            .map(|v| (self.rows[v] & y.bits()).count_ones() as usize)
            .sum())
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> Result<usize> {
        self.check_set(s)?;
        let inside: usize = s
            .iter()
            .map(|v| (self.rows[v] & s.bits()).count_ones() as usize)
            .sum();
        Ok(inside / 2)
    }

    /// `G[S]`, relabelled `0..|S|` in ascending original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let members: Vec<usize> = s.iter().collect();
        let rows = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.rows[v] >> w & 1 == 1)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    /// Vertices of `self` keep their labels, those of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two blocks.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::CapacityExceeded(n));
        }
        let left = low_mask(self.n);
        let right = low_mask(n) & !left;
        let mut rows = Vec::with_capacity(n);
        rows.extend(self.rows.iter().map(|&r| if cross { r | right } else { r }));
        rows.extend(other.rows.iter().map(|&r| {
            let shifted = r << self.n;
            if cross {
                shifted | left
            } else {
                shifted
            }
        }));
        Ok(Graph::from_rows(rows))
    }

    /// Graph with old vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters {
                family: "relabel",
                reason: format!("permutation of length {} for order {}", perm.len(), self.n),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen != low_mask(self.n) {
            return Err(Error::InvalidParameters {
                family: "relabel",
                reason: "not a permutation".into(),
            });
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            rows[perm[u]] = Bits(self.rows[u]).fold(0, |acc, v| acc | 1 << perm[v]);
        }
        Graph::from_rows(rows)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph::from_rows(rows))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut rows = self.rows.clone();
        rows[u] &= !(1 << v);
        rows[v] &= !(1 << u);
        Ok(Graph::from_rows(rows))
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.contains(&0)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let next = Bits(frontier).fold(0u64, |acc, w| acc | self.rows[w]) & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(VertexSet::from_bits(self.n, comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_regular(&self) -> bool {
        let d = self.deg(0);
        (1..self.n).all(|v| self.deg(v) == d)
    }

    /// A two-colouring as a pair of sides, if one exists.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in Bits(self.rows[v]) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == 0);
        let left = VertexSet::new(self.n, left).expect("in range");
        Some((left, left.complement()))
    }

    /// Connected bipartite graph whose degree is constant on each side.
    pub fn is_semiregular_bipartite(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let Some((a, b)) = self.bipartition() else {
            return false;
        };
        let constant = |s: VertexSet| {
            let mut it = s.iter().map(|v| self.deg(v));
            match it.next() {
                Some(d) => it.all(|e| e == d),
                None => true,
            }
        };
        constant(a) && constant(b)
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidOrder(n))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
