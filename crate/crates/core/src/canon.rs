//! Exact canonical forms for small graphs.
//!
//! The key is the lexicographically smallest upper-triangle encoding over the
//! labelings reached by colour refinement and individualization. Colour
//! refinement and the choice of target cell depend only on the isomorphism
//! class, so the set of leaf encodings (and hence its minimum) does too.
//! Vertices in a target cell that are twins (`N(v) - w == N(w) - v`) are
//! interchanged by an automorphism fixing every earlier choice, so only one
//! twin per class is explored.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order handled by the exact canonicaliser.
pub const CANON_MAX_ORDER: usize = 10;

/// Canonical adjacency encoding: the upper triangle in column order
/// `(0,1), (0,2), (1,2), (0,3), ...` packed most-significant-first, so that
/// numeric order is lexicographic order of the bit string.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u8,
    bits: u64,
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The encoding as bytes: order, then the packed triangle big-endian.
    pub fn bytes(&self) -> [u8; 9] {
        let mut out = [0u8; 9];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.bits.to_be_bytes());
        out
    }

    /// The canonical representative, whose own encoding is this key.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * (n - 1) / 2;
        let mut rows = vec![0u64; n];
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - pos) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                pos += 1;
            }
        }
        Graph::from_rows(rows)
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_graph6())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

/// Encoding of `g` under its current labeling.
pub fn encoding(g: &Graph) -> CanonicalKey {
    encode_with(g, &(0..g.order()).collect::<Vec<_>>())
}

/// Encoding of `g` after renaming vertex `v` to `pos[v]`.
fn encode_with(g: &Graph, pos: &[usize]) -> CanonicalKey {
    let n = g.order();
    let total = n * (n - 1) / 2;
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        let (i, j) = if pos[u] < pos[v] {
            (pos[u], pos[v])
        } else {
            (pos[v], pos[u])
        };
        let p = j * (j - 1) / 2 + i;
        bits |= 1 << (total - 1 - p);
    }
    CanonicalKey { n: n as u8, bits }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_form(g).map(|(k, _)| k)
}

/// The canonical key together with a labeling realising it: vertex `v` of
/// `g` becomes `labeling[v]` in `key.to_graph()`.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: CANON_MAX_ORDER,
        });
    }
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut best: Option<(CanonicalKey, Vec<usize>)> = None;
    search(g, colors, &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

/// Whether `g` is exactly its own canonical representative.
pub fn is_canonical(g: &Graph) -> Result<bool> {
    Ok(canonical_key(g)? == encoding(g))
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(CanonicalKey, Vec<usize>)>) {
    let n = g.order();
    let k = 1 + *colors.iter().max().unwrap_or(&0) as usize;
    if k == n {
        let pos: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let key = encode_with(g, &pos);
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, pos));
        }
        return;
    }
    let mut sizes = vec![0usize; k];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = sizes
        .iter()
        .position(|&s| s > 1)
        .expect("non-discrete colouring") as u32;
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(c == target && w != v))
            .collect();
        rerank(&mut next);
        refine(g, &mut next);
        search(g, next, best);
    }
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    let ma = !(1u64 << a | 1u64 << b);
    g.row(a) & ma == g.row(b) & ma
}

/// Replace colours by their rank among the distinct values.
fn rerank(colors: &mut [u32]) {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).expect("present") as u32;
    }
}

/// Iterated colour refinement to the coarsest equitable refinement. Colours
/// are ranks of (old colour, neighbour counts per colour) signatures.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.order();
    rerank(colors);
    let mut k = 1 + *colors.iter().max().unwrap_or(&0) as usize;
    loop {
        if k == n {
            return;
        }
        let mut classes = vec![0u64; k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c as usize] |= 1 << v;
        }
        let mut sigs: Vec<(Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(colors[v]);
                sig.extend(classes.iter().map(|&m| (g.row(v) & m).count_ones()));
                (sig, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                next += 1;
            }
            colors[sigs[i].1] = next;
        }
        let k_new = next as usize + 1;
        if k_new == k {
            return;
        }
        k = k_new;
    }
}

#[cfg(test)]
fn heap_permutations(perm: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(perm, k - 1, visit);
        if k.is_multiple_of(2) {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
    heap_permutations(perm, k - 1, visit);
}
