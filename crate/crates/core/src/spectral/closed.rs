//! Closed-form values of `q` for the extremal families.

use serde::Serialize;

use crate::error::{Error, Result};

/// Monic cubic `x^3 + a x^2 + b x + c` with a bracket expected to hold its
/// largest real root.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CubicSpec {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub lo: f64,
    pub hi: f64,
}

impl CubicSpec {
    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.a) * x + self.b) * x + self.c
    }

    /// Root in the bracket by bisection to `1e-12`. If the endpoints do not
    /// straddle a sign change the bracket is widened by one on each side.
    pub fn root(&self) -> Result<f64> {
        let (mut lo, mut hi) = (self.lo, self.hi);
        if self.eval(lo) > 0.0 || self.eval(hi) < 0.0 {
            lo -= 1.0;
            hi += 1.0;
        }
        let (flo, fhi) = (self.eval(lo), self.eval(hi));
        if flo == 0.0 {
            return Ok(lo);
        }
        if fhi == 0.0 {
            return Ok(hi);
        }
        if flo > 0.0 || fhi < 0.0 {
            return Err(Error::NoSignChange { lo, hi });
        }
        while hi - lo > 1e-12 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.eval(mid) <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

fn domain(family: &'static str, reason: String) -> Error {
    Error::InvalidParameters { family, reason }
}

/// Cubic whose largest root is `q(F_n)` for even `n`.
pub fn friendship_even_cubic(n: usize) -> CubicSpec {
    let m = n as f64;
    CubicSpec {
        a: -(m + 3.0),
        b: 3.0 * m,
        c: -2.0 * m + 4.0,
        lo: m + 2.0 / m,
        hi: m + 2.0 / (m - 1.0),
    }
}

/// Cubic whose largest root is `q(S_{n,1}^+)`.
pub fn splitstarplus1_cubic(n: usize) -> CubicSpec {
    let m = n as f64;
    CubicSpec {
        a: -(m + 3.0),
        b: 3.0 * m,
        c: -4.0,
        lo: m,
        hi: m + 1.0,
    }
}

/// `q(F_n)`: radical for odd `n >= 3`, cubic root for even `n >= 4`.
pub fn closed_q_friendship(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(domain("friendship", format!("need n >= 3, got {n}")));
    }
    if n % 2 == 1 {
        let m = n as f64;
        Ok((m + 2.0 + ((m - 2.0).powi(2) + 8.0).sqrt()) / 2.0)
    } else {
        friendship_even_cubic(n).root()
    }
}

/// `q(S_{n,2}) = (n + 2 + sqrt(n^2 + 4n - 12)) / 2` for `n >= 4`.
pub fn closed_q_splitstar2(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(domain("split-star", format!("need n >= 4, got {n}")));
    }
    let m = n as f64;
    Ok((m + 2.0 + (m * m + 4.0 * m - 12.0).sqrt()) / 2.0)
}

/// Largest root of `x^3 - (n+3)x^2 + 3nx - 4` for `n >= 4`.
pub fn closed_q_splitstarplus1(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(domain("split-star-plus", format!("need n >= 4, got {n}")));
    }
    splitstarplus1_cubic(n).root()
}

/// `q(K_1 v ((n-1)/3) K_3) = (n + 4 + sqrt((n-4)^2 + 16)) / 2`.
pub fn q_cone_over_triangles(n: usize) -> Result<f64> {
    if n < 4 || n % 3 != 1 {
        return Err(domain(
            "cone-over-triangles",
            format!("need n >= 4 with n = 1 mod 3, got {n}"),
        ));
    }
    let m = n as f64;
    Ok((m + 4.0 + ((m - 4.0).powi(2) + 16.0).sqrt()) / 2.0)
}
