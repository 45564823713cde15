//! All graphs of a small order, one per isomorphism class.
//!
//! Classes of order `n` are grown from those of order `n - 1` by adding a
//! vertex with every possible neighbourhood and keeping one graph per
//! canonical key. Every graph of order `n` arises this way (delete its last
//! vertex), so the result is complete; exact keys make it repetition-free.
//! Each order is computed once per process and cached.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the exhaustive engine accepts.
pub const ENUM_MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    pub no_isolated: bool,
    pub connected: bool,
}

impl Constraints {
    pub const NONE: Constraints = Constraints {
        no_isolated: false,
        connected: false,
    };
    pub const NO_ISOLATED: Constraints = Constraints {
        no_isolated: true,
        connected: false,
    };
    pub const CONNECTED: Constraints = Constraints {
        no_isolated: false,
        connected: true,
    };

    pub fn admits(&self, g: &Graph) -> bool {
        (!self.no_isolated || !g.has_isolated_vertex()) && (!self.connected || g.is_connected())
    }
}

static CLASSES: [OnceLock<Arc<Vec<Graph>>>; ENUM_MAX_ORDER + 1] =
    [const { OnceLock::new() }; ENUM_MAX_ORDER + 1];

/// Canonical representatives of every class of order `n`, sorted by key.
pub fn classes(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if n > ENUM_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: ENUM_MAX_ORDER,
        });
    }
    if let Some(c) = CLASSES[n].get() {
        return Ok(Arc::clone(c));
    }
    let built = if n == 1 {
        vec![Graph::empty(1)?]
    } else {
        grow(&classes(n - 1)?)
    };
    Ok(Arc::clone(CLASSES[n].get_or_init(|| Arc::new(built))))
}

fn children(parent: &Graph, into: &mut HashSet<CanonicalKey>) {
    let m = parent.order();
    for nbrs in 0u64..1 << m {
        let mut rows: Vec<u64> = (0..m)
            .map(|v| parent.row(v) | (nbrs >> v & 1) << m)
            .collect();
        rows.push(nbrs);
        let child = Graph::from_rows(rows);
        into.insert(canonical_key(&child).expect("order within canonical range"));
    }
}

fn grow(parents: &[Graph]) -> Vec<Graph> {
    #[cfg(feature = "parallel")]
    let keys = parents
        .par_iter()
        .fold(HashSet::new, |mut acc, p| {
            children(p, &mut acc);
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    #[cfg(not(feature = "parallel"))]
    let keys = {
        let mut acc = HashSet::new();
        for p in parents {
            children(p, &mut acc);
        }
        acc
    };
    let mut keys: Vec<CanonicalKey> = keys.into_iter().collect();
    keys.sort_unstable();
    keys.iter().map(CanonicalKey::to_graph).collect()
}

/// Iterator over the classes of one order that satisfy the constraints, in
/// canonical key order.
#[derive(Clone, Debug)]
pub struct EnumerationStream {
    n: usize,
    constraints: Constraints,
    classes: Arc<Vec<Graph>>,
    cursor: usize,
}

impl EnumerationStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> Constraints {
        self.constraints
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(g) = self.classes.get(self.cursor) {
            self.cursor += 1;
            if self.constraints.admits(g) {
                return Some(g.clone());
            }
        }
        None
    }
}

pub fn enumerate(n: usize, constraints: Constraints) -> Result<EnumerationStream> {
    Ok(EnumerationStream {
        n,
        constraints,
        classes: classes(n)?,
        cursor: 0,
    })
}

/// Sets the worker count for parallel enumeration and search. Returns false
/// if the pool was already started (the existing pool keeps running) or the
/// crate was built without parallelism.
pub fn set_jobs(jobs: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_canonical;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| classes(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
        assert_eq!(enumerate(4, Constraints::NO_ISOLATED).unwrap().count(), 7);
        assert_eq!(enumerate(5, Constraints::CONNECTED).unwrap().count(), 21);
        assert_eq!(enumerate(3, Constraints::NONE).unwrap().count(), 4);
    }

    #[test]
    fn representatives_are_canonical_and_sorted() {
        let c = classes(6).unwrap();
        assert!(c.iter().all(|g| is_canonical(g).unwrap()));
        assert!(c
            .windows(2)
            .all(|w| crate::canon::encoding(&w[0]) < crate::canon::encoding(&w[1])));
    }

    #[test]
    fn constraints_are_honoured() {
        for g in enumerate(
            6,
            Constraints {
                no_isolated: true,
                connected: true,
            },
        )
        .unwrap()
        {
            assert!(g.min_degree() >= 1 && g.is_connected());
        }
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate(0, Constraints::NONE).is_err());
        assert_eq!(
            enumerate(9, Constraints::NONE).unwrap_err(),
            Error::OrderTooLarge { order: 9, max: 8 }
        );
    }
}
