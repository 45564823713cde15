//! Brute-force reference implementations shared by the integration tests.
//! Nothing here uses refinement, pruning or the library's own search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use spectra_core::Graph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lower-triangle adjacency bits under the renaming `v -> perm[v]`.
fn code(edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    edges.iter().fold(0u64, |acc, &(u, v)| {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        acc | 1 << (b * (b - 1) / 2 + a)
    })
}

/// Smallest code over all `n!` relabelings.
pub fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<_> = g.edges().collect();
    perms.iter().map(|p| code(&edges, p)).min().unwrap_or(0)
}

/// Every labeled graph on `n` vertices, indexed by its pair mask.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Isomorphism classes of order `n` as brute-force keys, optionally
/// restricted by a predicate.
pub fn brute_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<u64> {
    let perms = permutations(n);
    all_labeled(n)
        .filter(|g| keep(g))
        .map(|g| brute_key(&g, &perms))
        .collect()
}

pub fn has_isolated(g: &Graph) -> bool {
    (0..g.order()).any(|v| g.degree(v).unwrap() == 0)
}

/// Connectivity by repeated closure over the edge list.
pub fn connected(g: &Graph) -> bool {
    let mut reach = vec![false; g.order()];
    reach[0] = true;
    let edges: Vec<_> = g.edges().collect();
    loop {
        let mut changed = false;
        for &(u, v) in &edges {
            if reach[u] != reach[v] {
                reach[u] = true;
                reach[v] = true;
                changed = true;
            }
        }
        if !changed {
            return reach.iter().all(|&r| r);
        }
    }
}

/// Tries every injective map from the pattern's vertices into the host.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        if map.len() == pattern.order() {
            return pattern.edges().all(|(a, b)| host.has_edge(map[a], map[b]));
        }
        for h in 0..host.order() {
            if !map.contains(&h) {
                map.push(h);
                if rec(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.order() <= host.order() && rec(host, pattern, &mut Vec::new())
}

/// Path on `k` vertices by trying every ordered vertex sequence.
pub fn brute_has_path(host: &Graph, k: usize) -> bool {
    let p = spectra_core::families::path(k).unwrap();
    brute_contains(host, &p)
}
