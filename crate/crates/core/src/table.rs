//! Closed forms, numeric values and bounds for the extremal families.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{cone_over_triangles, friendship, split_star, split_star_plus};
use crate::graph::Graph;
use crate::spectral::{
    closed_q_friendship, closed_q_splitstar2, closed_q_splitstarplus1, das_bound,
    max_degree_pressure, q_cone_over_triangles, q_max,
};

pub const TABLE_MIN_ORDER: usize = 4;
pub const TABLE_MAX_ORDER: usize = 40;

/// Closed form, numeric `q`, maximum degree pressure and the Das bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FamilyValues {
    pub closed: f64,
    pub q: f64,
    pub pressure: f64,
    pub das: f64,
}

impl FamilyValues {
    fn of(g: &Graph, closed: f64) -> Result<Self> {
        Ok(FamilyValues {
            closed,
            q: q_max(g).q,
            pressure: max_degree_pressure(g)?.1,
            das: das_bound(g)?,
        })
    }

    /// `q <= pressure <= das`, with slack for the numeric `q`.
    pub fn chain_holds(&self) -> bool {
        self.q <= self.pressure + 1e-9 && self.pressure <= self.das
    }
}

/// One order's worth of the bounds table. Inequality columns are `None`
/// where the inequality is not claimed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsRow {
    pub n: usize,
    pub friendship: FamilyValues,
    /// `n+2/(n-1) < q < n+2/(n-2)` for odd `n`, `n+2/n < q < n+2/(n-1)` for even `n`; from `n = 5`.
    pub friendship_sandwich: Option<bool>,
    pub split_star2: FamilyValues,
    /// `q > n + 2 - 4/(n+1)`.
    pub split_star2_lower: bool,
    pub split_star_plus1: FamilyValues,
    /// `n < q < n + 1`; from `n = 6`.
    pub split_star_plus1_bracket: Option<bool>,
    /// Numeric `q` of the cone over triangles when `n = 1 mod 3`, `n >= 7`.
    pub cone_q: Option<f64>,
    pub cone_closed: Option<f64>,
    /// Cone value strictly below `q(S_{n,2})`.
    pub cone_below_split_star2: Option<bool>,
}

impl BoundsRow {
    pub fn all_hold(&self) -> bool {
        self.friendship.chain_holds()
            && self.split_star2.chain_holds()
            && self.split_star_plus1.chain_holds()
            && self.friendship_sandwich != Some(false)
            && self.split_star2_lower
            && self.split_star_plus1_bracket != Some(false)
            && self.cone_below_split_star2 != Some(false)
    }
}

pub fn bounds_row(n: usize) -> Result<BoundsRow> {
    if !(TABLE_MIN_ORDER..=TABLE_MAX_ORDER).contains(&n) {
        return Err(Error::InvalidParameters {
            family: "bounds-report",
            reason: format!("need {TABLE_MIN_ORDER} <= n <= {TABLE_MAX_ORDER}, got {n}"),
        });
    }
    let m = n as f64;
    let fr = FamilyValues::of(&friendship(n)?, closed_q_friendship(n)?)?;
    let s2 = FamilyValues::of(&split_star(n, 2)?, closed_q_splitstar2(n)?)?;
    let sp = FamilyValues::of(&split_star_plus(n, 1)?, closed_q_splitstarplus1(n)?)?;
    let friendship_sandwich = (n >= 5).then(|| {
        let (lo, hi) = if n % 2 == 1 {
            (m + 2.0 / (m - 1.0), m + 2.0 / (m - 2.0))
        } else {
            (m + 2.0 / m, m + 2.0 / (m - 1.0))
        };
        lo < fr.q && fr.q < hi
    });
    let cone = if n >= 7 && n % 3 == 1 {
        Some((q_max(&cone_over_triangles(n)?).q, q_cone_over_triangles(n)?))
    } else {
        None
    };
    Ok(BoundsRow {
        n,
        friendship: fr,
        friendship_sandwich,
        split_star2: s2,
        split_star2_lower: s2.q > m + 2.0 - 4.0 / (m + 1.0),
        split_star_plus1: sp,
        split_star_plus1_bracket: (n >= 6).then_some(m < sp.q && sp.q < m + 1.0),
        cone_q: cone.map(|c| c.0),
        cone_closed: cone.map(|c| c.1),
        cone_below_split_star2: cone.map(|c| c.0 < s2.q),
    })
}

pub fn bounds_table(n_min: usize, n_max: usize) -> Result<Vec<BoundsRow>> {
    if n_min > n_max {
        return Err(Error::InvalidParameters {
            family: "bounds-report",
            reason: format!("empty range {n_min}..={n_max}"),
        });
    }
    (n_min..=n_max).map(bounds_row).collect()
}
