//! Exact integer characteristic polynomials and real-root comparisons.
//!
//! Characteristic polynomials come from Berkowitz's division-free algorithm.
//! Largest real roots are isolated with Sturm sequences over the rationals,
//! which lets two graphs whose floating-point `q` values fall inside the tie
//! band be ordered exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial with coefficients stored low degree first and no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// From coefficients listed highest degree first, e.g. `[1, -3, 2]` is
    /// `x^2 - 3x + 2`.
    pub fn from_high_first(coeffs: &[i64]) -> Self {
        let mut c: Vec<BigInt> = coeffs.iter().rev().map(|&x| BigInt::from(x)).collect();
        trim(&mut c);
        IntPoly { coeffs: c }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn high_first(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficients highest degree first, if they all fit in `i64`.
    pub fn high_first_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().rev().map(|c| c.to_i64()).collect()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    fn to_rat(&self) -> RatPoly {
        RatPoly(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

fn trim<T: Zero>(c: &mut Vec<T>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

/// `det(xI - M)` for an integer matrix.
pub fn char_poly(m: &[Vec<i64>]) -> IntPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let a = |i: usize, j: usize| BigInt::from(m[i][j]);
    // v holds the characteristic polynomial of the leading r x r block, high first
    let mut v = vec![BigInt::one()];
    for r in 0..n {
        let mut t = vec![BigInt::one(), -a(r, r)];
        let mut w: Vec<BigInt> = (0..r).map(|i| a(i, r)).collect();
        for _ in 0..r {
            let rw: BigInt = (0..r).map(|j| a(r, j) * &w[j]).sum();
            t.push(-rw);
            w = (0..r)
                .map(|i| (0..r).map(|j| a(i, j) * &w[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate().take(i.min(r) + 1) {
                *slot += &t[i - j] * vj;
            }
        }
        v = next;
    }
    v.reverse();
    trim(&mut v);
    IntPoly { coeffs: v }
}

#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn trimmed(mut self) -> Self {
        trim(&mut self.0);
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> RatPoly {
        RatPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trimmed()
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() < d.0.len() {
            return (RatPoly(Vec::new()), self.clone());
        }
        let dd = d.degree();
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] / d.lead();
            if !coef.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    r[k + i] -= &coef * di;
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (RatPoly(q).trimmed(), RatPoly(r).trimmed())
    }

    fn monic(self) -> RatPoly {
        let l = self.lead().clone();
        RatPoly(self.0.into_iter().map(|c| c / &l).collect())
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn squarefree(&self) -> RatPoly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// `1 + max |a_i / a_n|`; every real root lies strictly inside.
    fn cauchy_bound(&self) -> BigRational {
        let lead = self.lead().abs();
        let m = self.0[..self.0.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(BigRational::zero);
        m + BigRational::one()
    }
}

/// Sturm sequence of a squarefree polynomial.
struct Sturm {
    chain: Vec<RatPoly>,
    bound: BigRational,
}

impl Sturm {
    fn new(p: &RatPoly) -> Sturm {
        let s = p.squarefree();
        let bound = s.cauchy_bound();
        let mut chain = vec![s.clone(), s.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm { chain, bound }
    }

    fn base(&self) -> &RatPoly {
        &self.chain[0]
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs = self
            .chain
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive());
        count_changes(signs)
    }

    /// Distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

fn count_changes(signs: impl Iterator<Item = bool>) -> usize {
    let mut prev = None;
    let mut changes = 0;
    for s in signs {
        if prev.is_some_and(|p| p != s) {
            changes += 1;
        }
        prev = Some(s);
    }
    changes
}

/// Half-open interval `(lo, hi]` containing exactly one distinct root, the
/// largest one.
struct Isolated {
    sturm: Sturm,
    lo: BigRational,
    hi: BigRational,
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

impl Isolated {
    fn new(p: &RatPoly) -> Option<Isolated> {
        let sturm = Sturm::new(p);
        let mut hi = sturm.bound.clone();
        let mut lo = -hi.clone();
        if sturm.count(&lo, &hi) == 0 {
            return None;
        }
        while sturm.count(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / two();
            if sturm.count(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(Isolated { sturm, lo, hi })
    }

    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / two();
        if self.sturm.count(&mid, &self.hi) == 1 {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }
}

/// Exact comparison of the largest real roots of two polynomials.
///
/// Panics if either polynomial has no real root.
pub fn cmp_largest_roots(p1: &IntPoly, p2: &IntPoly) -> Ordering {
    if p1 == p2 {
        return Ordering::Equal;
    }
    let (r1, r2) = (p1.to_rat(), p2.to_rat());
    let mut a = Isolated::new(&r1).expect("first polynomial has a real root");
    let mut b = Isolated::new(&r2).expect("second polynomial has a real root");
    let g = r1.gcd(&r2);
    if g.degree() >= 1 {
        let gs = Sturm::new(&g);
        // roots of g are roots of both, so a hit in each isolating interval
        // means both largest roots are the largest root of g
        if gs.count(&a.lo, &a.hi) >= 1 && gs.count(&b.lo, &b.hi) >= 1 {
            return Ordering::Equal;
        }
    }
    // the roots differ, so refinement separates the intervals
    for _ in 0..10_000 {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        a.bisect();
        b.bisect();
    }
    unreachable!("distinct algebraic numbers separate long before 10000 bisections")
}

/// Whether the rational `x` is exactly the largest real root of `p`.
pub fn is_largest_root(p: &IntPoly, x: &BigRational) -> bool {
    if !p.eval(x).is_zero() {
        return false;
    }
    let s = Sturm::new(&p.to_rat());
    let bound = s.bound.clone();
    if *x >= bound {
        return true;
    }
    s.count(x, &bound) == 0
}

/// Interval `(lo, hi]` of width at most `width` around the largest real root.
pub fn largest_root_bracket(p: &IntPoly, width: f64) -> Option<(f64, f64)> {
    let mut iso = Isolated::new(&p.to_rat())?;
    let w = BigRational::from_float(width).expect("finite width");
    while &iso.hi - &iso.lo > w {
        iso.bisect();
    }
    if iso.sturm.base().eval(&iso.hi).is_zero() {
        let x = iso.hi.to_f64().expect("finite");
        return Some((x, x));
    }
    Some((
        iso.lo.to_f64().expect("finite"),
        iso.hi.to_f64().expect("finite"),
    ))
}

/// Convenience for `p/q` as a big rational.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berkowitz_small_matrices() {
        assert_eq!(
            char_poly(&[vec![1, 1], vec![1, 1]]),
            IntPoly::from_high_first(&[1, -2, 0])
        );
        // P3: eigenvalues 0, 1, 3
        let p3 = char_poly(&[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        assert_eq!(p3, IntPoly::from_high_first(&[1, -4, 3, 0]));
        // non-symmetric input works too
        let m = char_poly(&[vec![2, 1, 0], vec![0, 3, 4], vec![5, 0, 1]]);
        // det(xI - M) expanded by hand: x^3 - 6x^2 + 11x - 26
        assert_eq!(m, IntPoly::from_high_first(&[1, -6, 11, -26]));
        assert_eq!(char_poly(&[]), IntPoly::from_high_first(&[1]));
    }

    #[test]
    fn compares_largest_roots() {
        let a = IntPoly::from_high_first(&[1, -3, 2]); // roots 1, 2
        let b = IntPoly::from_high_first(&[1, -5, 6]); // roots 2, 3
        let c = IntPoly::from_high_first(&[1, -2]); // root 2
        let d = IntPoly::from_high_first(&[1, 0, -2]); // roots +-sqrt 2
        let e = IntPoly::from_high_first(&[1, -4, 4]); // double root 2
        assert_eq!(cmp_largest_roots(&a, &b), Ordering::Less);
        assert_eq!(cmp_largest_roots(&b, &a), Ordering::Greater);
        assert_eq!(cmp_largest_roots(&a, &c), Ordering::Equal);
        assert_eq!(cmp_largest_roots(&e, &c), Ordering::Equal);
        assert_eq!(cmp_largest_roots(&d, &c), Ordering::Less);
        // (x-2)(x-3) against (x-3)(x+1): equal largest roots
        let f = IntPoly::from_high_first(&[1, -2, -3]);
        assert_eq!(cmp_largest_roots(&b, &f), Ordering::Equal);
        // shared root 2 that is not the largest for g: 2 < 3
        let g = IntPoly::from_high_first(&[1, -5, 6, 0]);
        assert_eq!(cmp_largest_roots(&c, &g), Ordering::Less);
    }

    #[test]
    fn nearly_equal_roots() {
        // sqrt(2) vs 99/70 differ by about 7e-5; sqrt(2) vs 665857/470832 by 1.6e-12
        let s2 = IntPoly::from_high_first(&[1, 0, -2]);
        let r = IntPoly::from_high_first(&[470832, -665857]);
        assert_eq!(cmp_largest_roots(&r, &s2), Ordering::Greater);
    }

    #[test]
    fn rational_root_detection() {
        let b = IntPoly::from_high_first(&[1, -5, 6]);
        assert!(is_largest_root(&b, &ratio(3, 1)));
        assert!(!is_largest_root(&b, &ratio(2, 1)));
        assert!(!is_largest_root(&b, &ratio(5, 2)));
        let e = IntPoly::from_high_first(&[4, -12, 9]); // (2x-3)^2
        assert!(is_largest_root(&e, &ratio(3, 2)));
    }

    #[test]
    fn brackets() {
        let s2 = IntPoly::from_high_first(&[1, 0, -2]);
        let (lo, hi) = largest_root_bracket(&s2, 1e-12).unwrap();
        assert!(lo < 2f64.sqrt() && 2f64.sqrt() <= hi && hi - lo <= 1e-12);
        assert!(largest_root_bracket(&IntPoly::from_high_first(&[1, 0, 1]), 1e-3).is_none());
    }
}
