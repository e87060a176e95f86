//! p-adic valuations and Newton polygons.
//!
//! Polygons are lower convex hulls of `(j, ord_p(c_j))`. Corners are strict
//! slope changes, so every edge has a well-defined multiplicity
//! `d = gcd(H, W)` and is made of `d` segments of width `W/d`. Zero
//! coefficients have infinite valuation and are left out of the hull.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{factor_bigint, is_prime, small_primes};
use crate::criteria::carries;
use crate::poly::{HurwitzPoly, IntPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NewtonError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no point has finite valuation")]
    NoFinitePoint,
    #[error("the point of highest index must have finite valuation")]
    InfiniteEndpoint,
    #[error("constant coefficient is zero; divide out the power of x first")]
    ZeroConstant,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("could not factor the constant coefficient {0}")]
    Unfactored(BigInt),
}

/// `ord_p`, with `+∞` for zero. `Finite` sorts below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

pub(crate) fn ord_p_bigint(z: &BigInt, p: u64) -> Valuation {
    if z.is_zero() {
        return Valuation::Infinite;
    }
    let pb = BigInt::from(p);
    let mut z = z.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = z.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        z = q;
        v += 1;
    }
    Valuation::Finite(v)
}

/// `ord_p(m)` for a positive machine integer.
pub fn ord_p_u64(mut m: u64, p: u64) -> u32 {
    debug_assert!(m > 0);
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    v
}

/// Legendre: `ord_p(n!) = Σ_k ⌊n/p^k⌋`.
pub fn ord_p_factorial(n: u64, p: u64) -> u64 {
    let mut acc = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        acc += q;
    }
    acc
}

/// `ord_p(z)` for rational `z`.
pub fn ord_p(z: &BigRational, p: u64) -> Result<Valuation, NewtonError> {
    if !is_prime(p) {
        return Err(NewtonError::NotPrime(p));
    }
    if z.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let num = ord_p_bigint(z.numer(), p).finite().expect("nonzero");
    let den = ord_p_bigint(z.denom(), p).finite().expect("nonzero");
    Ok(Valuation::Finite(num - den))
}

/// A slope `num/den` in lowest terms with `den ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: u64,
}

impl Slope {
    pub fn new(height: i64, width: u64) -> Self {
        assert!(width > 0);
        let g = (height.unsigned_abs()).gcd(&width);
        Self {
            num: height / g as i64,
            den: width / g,
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub width: u64,
    pub height: i64,
    pub slope: Slope,
    pub multiplicity: u64,
}

impl Edge {
    fn between(a: Corner, b: Corner) -> Self {
        let width = b.0 - a.0;
        let height = b.1 - a.1;
        let multiplicity = height.unsigned_abs().gcd(&width);
        Self {
            width,
            height,
            slope: Slope::new(height, width),
            multiplicity,
        }
    }

    /// Width of each of the `multiplicity` segments.
    pub fn segment_width(&self) -> u64 {
        self.slope.den
    }
}

/// `(x, y)` = (index, valuation).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Corner(pub u64, pub i64);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NewtonPolygon {
    pub prime: u64,
    pub corners: Vec<Corner>,
    pub edges: Vec<Edge>,
}

fn cross(o: Corner, a: Corner, b: Corner) -> i128 {
    (a.0 as i128 - o.0 as i128) * (b.1 as i128 - o.1 as i128)
        - (a.1 as i128 - o.1 as i128) * (b.0 as i128 - o.0 as i128)
}

/// Lower convex hull of the finite points, one left-to-right pass.
pub fn newton_polygon(points: &[(u64, Valuation)], p: u64) -> Result<NewtonPolygon, NewtonError> {
    if !is_prime(p) {
        return Err(NewtonError::NotPrime(p));
    }
    let Some(&(_, top)) = points.iter().max_by_key(|(x, _)| *x) else {
        return Err(NewtonError::NoFinitePoint);
    };
    let mut finite: Vec<Corner> = points
        .iter()
        .filter_map(|&(x, v)| v.finite().map(|y| Corner(x, y)))
        .collect();
    if finite.is_empty() {
        return Err(NewtonError::NoFinitePoint);
    }
    if top == Valuation::Infinite {
        return Err(NewtonError::InfiniteEndpoint);
    }
    finite.sort_unstable();
    Ok(hull_sorted(&finite, p))
}

fn hull_sorted(points: &[Corner], p: u64) -> NewtonPolygon {
    let mut hull: Vec<Corner> = Vec::with_capacity(points.len());
    for &pt in points {
        // keep only the lowest point at each x
        if let Some(last) = hull.last() {
            if last.0 == pt.0 {
                if pt.1 >= last.1 {
                    continue;
                }
                hull.pop();
            }
        }
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
            hull.pop();
        }
        hull.push(pt);
    }
    let edges = hull.windows(2).map(|w| Edge::between(w[0], w[1])).collect();
    NewtonPolygon {
        prime: p,
        corners: hull,
        edges,
    }
}

impl NewtonPolygon {
    pub fn breaks(&self) -> Vec<u64> {
        self.corners.iter().map(|c| c.0).collect()
    }

    pub fn slopes(&self) -> Vec<Slope> {
        self.edges.iter().map(|e| e.slope).collect()
    }

    /// Segment multiset as sorted `(slope, width)` pairs.
    pub fn segments(&self) -> Vec<(Slope, u64)> {
        let mut out: Vec<(Slope, u64)> = self
            .edges
            .iter()
            .flat_map(|e| {
                std::iter::repeat_n((e.slope, e.segment_width()), e.multiplicity as usize)
            })
            .collect();
        out.sort();
        out
    }

    pub fn x_span(&self) -> u64 {
        match (self.corners.first(), self.corners.last()) {
            (Some(a), Some(b)) => b.0 - a.0,
            _ => 0,
        }
    }

    /// Whether some slope equals `num/den` exactly.
    pub fn has_slope(&self, num: i64, den: u64) -> bool {
        let s = Slope::new(num, den);
        self.edges.iter().any(|e| e.slope == s)
    }

    /// Line-oriented text form.
    pub fn to_text(&self) -> String {
        let mut s = format!("prime {}\n", self.prime);
        for c in &self.corners {
            s.push_str(&format!("corner {} {}\n", c.0, c.1));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "edge width={} height={} slope={} multiplicity={}\n",
                e.width, e.height, e.slope, e.multiplicity
            ));
        }
        s
    }
}

pub fn polygon_of_int(f: &IntPoly, p: u64) -> Result<NewtonPolygon, NewtonError> {
    let pts: Vec<(u64, Valuation)> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| (j as u64, ord_p_bigint(c, p)))
        .collect();
    newton_polygon(&pts, p)
}

/// Polygon of `Σ a_j x^j/j!` from the points `(j, ord_p(a_j) - ord_p(j!))`.
pub fn polygon_of_hurwitz(f: &HurwitzPoly, p: u64) -> Result<NewtonPolygon, NewtonError> {
    let pts: Vec<(u64, Valuation)> = f
        .hcoeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| {
            let shift = Valuation::Finite(-(ord_p_factorial(j as u64, p) as i64));
            (j as u64, ord_p_bigint(a, p) + shift)
        })
        .collect();
    newton_polygon(&pts, p)
}

/// Hurwitz-normalized polygon of `L_n^⟨r⟩` at `p`, from carry counts only:
/// `ord_p(a_j) = carries(n-j, r, p)` since `a_j = binom(n-j+r, r)`.
pub fn glp_polygon(n: u64, r: u64, p: u64) -> NewtonPolygon {
    assert!(is_prime(p));
    let pts: Vec<Corner> = (0..=n)
        .map(|j| {
            let v = carries(n - j, r, p) as i64 - ord_p_factorial(j, p) as i64;
            Corner(j, v)
        })
        .collect();
    hull_sorted(&pts, p)
}

/// Polygon of the truncated exponential `E_n`.
pub fn en_polygon(n: u64, p: u64) -> NewtonPolygon {
    glp_polygon(n, 0, p)
}

/// Partial sums of the nonzero base-`p` digits of `n`, most significant
/// first: `0 = k_0 < k_1 < … < k_s = n`.
pub fn pivotal_indices(n: u64, p: u64) -> Vec<u64> {
    let mut digits = Vec::new();
    let mut m = n;
    let mut pw = 1u64;
    while m > 0 {
        let d = m % p;
        if d > 0 {
            digits.push(d * pw);
        }
        m /= p;
        pw = pw.saturating_mul(p);
    }
    let mut out = vec![0u64];
    let mut acc = 0;
    for term in digits.into_iter().rev() {
        acc += term;
        out.push(acc);
    }
    out
}

/// Hurwitz coefficients are `p`-integral and the pivotal ones are `p`-units.
pub fn is_coleman_integral(f: &HurwitzPoly, p: u64) -> bool {
    let Some(n) = f.degree() else { return false };
    // integer Hurwitz coefficients are automatically p-integral
    pivotal_indices(n as u64, p).into_iter().all(|k| {
        let a = &f.hcoeffs()[k as usize];
        ord_p_bigint(a, p) == Valuation::Finite(0)
    })
}

pub fn polygon_equals_en(f: &HurwitzPoly, p: u64) -> bool {
    let Some(n) = f.degree() else { return false };
    match polygon_of_hurwitz(f, p) {
        Ok(np) => np.corners == en_polygon(n as u64, p).corners,
        Err(_) => false,
    }
}

/// Every degree `Σ k_i w_i` with `0 ≤ k_i ≤ d_i`, the only possible degrees
/// of a factor over `Q_p`, hence over `Q`.
pub fn dumas_degree_set(np: &NewtonPolygon) -> BTreeSet<u64> {
    let span = np.x_span() as usize;
    let mut reach = vec![false; span + 1];
    reach[0] = true;
    for e in &np.edges {
        let w = e.segment_width() as usize;
        for _ in 0..e.multiplicity {
            for s in (w..=span).rev() {
                if reach[s - w] {
                    reach[s] = true;
                }
            }
        }
    }
    reach
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

/// lcm of slope denominators over all primes, with the per-prime lcm kept
/// alongside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonIndex {
    pub value: BigUint,
    pub per_prime: BTreeMap<u64, BigUint>,
}

impl NewtonIndex {
    fn from_polygons(polys: impl IntoIterator<Item = NewtonPolygon>) -> Self {
        let mut value = BigUint::one();
        let mut per_prime = BTreeMap::new();
        for np in polys {
            let l = np.edges.iter().fold(BigUint::one(), |acc, e| {
                acc.lcm(&BigUint::from(e.slope.den))
            });
            if !l.is_one() {
                value = value.lcm(&l);
                per_prime.insert(np.prime, l);
            }
        }
        Self { value, per_prime }
    }

    pub fn is_divisible_by(&self, q: u64) -> bool {
        (&self.value % BigUint::from(q)).is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    /// Distinct prime divisors.
    pub fn prime_divisors(&self) -> Vec<u64> {
        let mut out: BTreeSet<u64> = BTreeSet::new();
        for l in self.per_prime.values() {
            // every denominator is at most the degree, so l's prime factors
            // are small; factor the denominators' lcm prime by prime
            let mut m = l.clone();
            let mut q = 2u64;
            while !m.is_one() {
                if (&m % BigUint::from(q)).is_zero() {
                    out.insert(q);
                    while (&m % BigUint::from(q)).is_zero() {
                        m /= BigUint::from(q);
                    }
                }
                q += 1;
            }
        }
        out.into_iter().collect()
    }
}

fn prime_support(c: &BigInt) -> Result<Vec<u64>, NewtonError> {
    factor_bigint(c)
        .map(|f| f.into_iter().map(|(p, _)| p).collect())
        .ok_or_else(|| NewtonError::Unfactored(c.clone()))
}

/// Newton index of a monic integer polynomial with nonzero constant term.
/// Only primes dividing the constant term can give a nonzero slope.
pub fn newton_index(f: &IntPoly) -> Result<NewtonIndex, NewtonError> {
    if !f.is_monic() {
        return Err(NewtonError::NotMonic);
    }
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Err(NewtonError::ZeroConstant);
    }
    let primes = prime_support(&c0)?;
    let polys = primes
        .into_iter()
        .map(|p| polygon_of_int(f, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NewtonIndex::from_polygons(polys))
}

/// Newton index of `L_n^⟨r⟩`; the constant term `(r+1)…(r+n)` has no prime
/// factor above `n + r`.
pub fn newton_index_glp(n: u64, r: u64) -> NewtonIndex {
    NewtonIndex::from_polygons(
        small_primes(n + r)
            .into_iter()
            .map(|p| glp_polygon(n, r, p)),
    )
}
