//! Lower bounds for Galois groups.
//!
//! `A_n` containment comes from a prime `q` in `(n/2, n-2)` dividing the
//! Newton index (Jordan), from transitive-subgroup orders for `5 ≤ n ≤ 7`,
//! or from the cubic resolvent for `n = 4`. The discriminant square test
//! then separates `A_n` from `S_n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{divisors_from_factors, factor_bigint, factor_u64, is_prime, small_primes};
use crate::criteria::{Exclusion, IrredCertificate, IrredMethod};
use crate::newton::{glp_polygon, newton_index_glp};
use crate::poly::{glp_monic, IntPoly, RatPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} is outside the required interval for n = {n}, r = {r}")]
    OutsideInterval { n: u64, r: u64, p: u64 },
    #[error("degree {0} is outside the supported range")]
    Degree(u64),
    #[error("square patterns are characterized only for r in {{3, 4, 5}}")]
    PatternParameter(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GaloisConclusion {
    ContainsAn,
    SymmetricSn,
    AlternatingAn,
    DihedralD4Witness,
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "witness")]
pub enum GaloisMethod {
    /// `q` divides the Newton index and `n/2 < q < n-2`; `slope_minus_one_over_q`
    /// marks the case `(n+r)/2 < q` where the slope `-1/q` is guaranteed.
    JordanPrime {
        q: u64,
        slope_minus_one_over_q: bool,
    },
    /// Every transitive subgroup of `S_n` with order divisible by `nf` is
    /// `A_n` or `S_n`.
    TransitiveOrderFilter {
        nf: u64,
    },
    /// Cubic resolvent without rational roots (or with, for `D_4`).
    QuarticResolvent {
        resolvent_roots: Vec<i64>,
    },
    /// Degree 2 and 3: a negative discriminant.
    DiscriminantSign {},
    /// Degree 1.
    Trivial {},
    ExternalOracleNeeded {},
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCertificate {
    pub n: u64,
    pub r: u64,
    pub conclusion: GaloisConclusion,
    #[serde(flatten)]
    pub method: GaloisMethod,
    pub disc_square: bool,
    /// Decimal Newton index when computed; it divides the group order.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order_divisor: Option<String>,
}

impl GaloisCertificate {
    pub fn method_tag(&self) -> &'static str {
        match self.method {
            GaloisMethod::JordanPrime { .. } => "JordanPrime",
            GaloisMethod::TransitiveOrderFilter { .. } => "TransitiveOrderFilter",
            GaloisMethod::QuarticResolvent { .. } => "QuarticResolvent",
            GaloisMethod::DiscriminantSign {} => "DiscriminantSign",
            GaloisMethod::Trivial {} => "Trivial",
            GaloisMethod::ExternalOracleNeeded {} => "ExternalOracleNeeded",
        }
    }

    pub fn summary(&self) -> String {
        match &self.method {
            GaloisMethod::JordanPrime { q, .. } => format!("JordanPrime({q})"),
            GaloisMethod::TransitiveOrderFilter { nf } => format!("TransitiveOrderFilter({nf})"),
            other => {
                let tag = match other {
                    GaloisMethod::QuarticResolvent { .. } => "QuarticResolvent",
                    GaloisMethod::DiscriminantSign {} => "DiscriminantSign",
                    GaloisMethod::Trivial {} => "Trivial",
                    _ => "ExternalOracleNeeded",
                };
                tag.to_string()
            }
        }
    }

    /// `A_n ⊆ G` has been established.
    pub fn contains_an(&self) -> bool {
        matches!(
            self.conclusion,
            GaloisConclusion::ContainsAn
                | GaloisConclusion::SymmetricSn
                | GaloisConclusion::AlternatingAn
        )
    }
}

fn refine(contains: bool, square: bool) -> GaloisConclusion {
    match (contains, square) {
        (false, _) => GaloisConclusion::Unresolved,
        (true, true) => GaloisConclusion::AlternatingAn,
        (true, false) => GaloisConclusion::SymmetricSn,
    }
}

/// A prime `q` dividing `nf` with `n/2 < q < n-2`.
pub fn jordan_criterion(nf: &BigUint, n: u64) -> Option<u64> {
    if n < 5 {
        return None;
    }
    small_primes(n - 3)
        .into_iter()
        .find(|&q| 2 * q > n && (nf % BigUint::from(q)).is_zero())
}

/// `NP_p(L_n^⟨r⟩)` has slope `-1/p` whenever `(n+r)/2 < p ≤ n`.
pub fn lemma_mp(n: u64, r: u64, p: u64) -> Result<bool, GaloisError> {
    if !is_prime(p) {
        return Err(GaloisError::NotPrime(p));
    }
    if n + r >= 2 * p || p > n {
        return Err(GaloisError::OutsideInterval { n, r, p });
    }
    Ok(glp_polygon(n, r, p).has_slope(-1, p))
}

/// Some slope of `NP_q(L_n^⟨r⟩)` has denominator divisible by `q`, for a
/// prime `n/2 < q < n-2`.
pub fn table2_check(n: u64, r: u64, q: u64) -> Result<bool, GaloisError> {
    if !is_prime(q) {
        return Err(GaloisError::NotPrime(q));
    }
    if 2 * q <= n || q + 2 >= n {
        return Err(GaloisError::OutsideInterval { n, r, p: q });
    }
    Ok(glp_polygon(n, r, q)
        .edges
        .iter()
        .any(|e| e.slope.denom() % q == 0))
}

/// The smallest prime `p` with `(n+r)/2 < p < n-2`.
pub fn direct_prime(n: u64, r: u64) -> Option<u64> {
    if n < 3 {
        return None;
    }
    let start = Ratio::new(n + r, 2).floor().to_integer();
    let p = crate::arith::next_prime_after(start);
    (p + 2 < n).then_some(p)
}

/// Primes `q ∈ (n/2, n-2)` passing [`table2_check`], ascending.
pub fn table2_primes(n: u64, r: u64) -> Vec<u64> {
    if n < 5 {
        return Vec::new();
    }
    small_primes(n - 3)
        .into_iter()
        .filter(|&q| 2 * q > n && table2_check(n, r, q).unwrap_or(false))
        .collect()
}

/// Galois lower bound for an `L_n^⟨r⟩` whose irreducibility is certified
/// elsewhere: direct prime with slope `-1/p`, then any Jordan prime, then
/// transitive orders (`5 ≤ n ≤ 7`), then the small-degree deciders.
pub fn theorem_gt(n: u64, r: u64) -> GaloisCertificate {
    let square = disc_is_square(n, r);
    let make = |method: GaloisMethod, contains: bool, nf: Option<String>| GaloisCertificate {
        n,
        r,
        conclusion: refine(contains, square),
        method,
        disc_square: square,
        order_divisor: nf,
    };
    if let Some(p) = direct_prime(n, r) {
        if lemma_mp(n, r, p) == Ok(true) {
            return make(
                GaloisMethod::JordanPrime {
                    q: p,
                    slope_minus_one_over_q: true,
                },
                true,
                None,
            );
        }
    }
    if let Some(&q) = table2_primes(n, r).first() {
        return make(
            GaloisMethod::JordanPrime {
                q,
                slope_minus_one_over_q: false,
            },
            true,
            None,
        );
    }
    if (5..=7).contains(&n) {
        let ni = newton_index_glp(n, r);
        let nf = ni.to_u64().expect("small degree");
        let contains = transitive_order_filter(n, nf).expect("degree checked");
        let method = if contains {
            GaloisMethod::TransitiveOrderFilter { nf }
        } else {
            GaloisMethod::ExternalOracleNeeded {}
        };
        return make(method, contains, Some(ni.value.to_string()));
    }
    if (1..=4).contains(&n) {
        return decide_small_n(n, r).expect("degree checked").1;
    }
    make(GaloisMethod::ExternalOracleNeeded {}, false, None)
}

// ---------------------------------------------------------------------------
// Transitive subgroups of S_5, S_6, S_7

pub const TRANSITIVE_ORDERS_5: [u64; 5] = [5, 10, 20, 60, 120];
pub const TRANSITIVE_ORDERS_6: [u64; 16] = [
    6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120, 360, 720,
];
pub const TRANSITIVE_ORDERS_7: [u64; 7] = [7, 14, 21, 42, 168, 2520, 5040];

const fn weighted_sum(t: &[u64]) -> u64 {
    let mut acc = 0;
    let mut i = 0;
    while i < t.len() {
        acc += (i as u64 + 1) * t[i];
        i += 1;
    }
    acc
}

const _: () = assert!(weighted_sum(&TRANSITIVE_ORDERS_5) == 925);
const _: () = assert!(weighted_sum(&TRANSITIVE_ORDERS_6) == 22164);
const _: () = assert!(weighted_sum(&TRANSITIVE_ORDERS_7) == 51506);

pub fn transitive_orders(n: u64) -> Option<&'static [u64]> {
    match n {
        5 => Some(&TRANSITIVE_ORDERS_5),
        6 => Some(&TRANSITIVE_ORDERS_6),
        7 => Some(&TRANSITIVE_ORDERS_7),
        _ => None,
    }
}

/// True when `A_n` and `S_n` are the only transitive subgroups of `S_n`
/// whose order is divisible by `nf`.
pub fn transitive_order_filter(n: u64, nf: u64) -> Result<bool, GaloisError> {
    let orders = transitive_orders(n).ok_or(GaloisError::Degree(n))?;
    // the last two entries are A_n and S_n
    let proper = &orders[..orders.len() - 2];
    Ok(proper.iter().all(|o| o % nf != 0))
}

// ---------------------------------------------------------------------------
// Discriminant squares

/// Whether `Δ_n^⟨r⟩` is a perfect square, decided by the parity of every
/// prime exponent in the product formula.
pub fn disc_is_square(n: u64, r: u64) -> bool {
    assert!(n >= 1);
    if n % 4 == 2 || n % 4 == 3 {
        return false;
    }
    let mut odd = OddSet::new(n + r + 1);
    for j in 1..n {
        odd.toggle_power(j + 1, j + 1);
        odd.toggle_power(r + j, n - j);
    }
    odd.is_empty()
}

/// Primes occurring to an odd power, kept as a bitmap with a live count.
struct OddSet {
    bits: Vec<bool>,
    count: usize,
}

impl OddSet {
    fn new(limit: u64) -> Self {
        Self {
            bits: vec![false; limit as usize + 1],
            count: 0,
        }
    }

    fn flip(&mut self, p: u64) {
        let b = &mut self.bits[p as usize];
        *b = !*b;
        if *b {
            self.count += 1;
        } else {
            self.count -= 1;
        }
    }

    fn toggle_power(&mut self, m: u64, e: u64) {
        for (p, k) in factor_u64(m) {
            if (k as u64 * e) % 2 == 1 {
                self.flip(p);
            }
        }
    }

    fn is_empty(&self) -> bool {
        self.count == 0
    }
}

/// All `n ≤ n_max` with `Δ_n^⟨r⟩` a square, using
/// `|Δ_{n+1}| = |Δ_n| · (n+1)^{n+1} · (r+1)(r+2)…(r+n)`.
pub fn disc_square_pattern(r: u64, n_max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut disc = OddSet::new(n_max + r + 2);
    let mut rising = OddSet::new(n_max + r + 2);
    for n in 1..=n_max {
        if n > 1 {
            // step from n-1 to n
            rising.toggle_power(r + n - 1, 1);
            disc.toggle_power(n, n);
            for (i, &b) in rising.bits.iter().enumerate() {
                if b {
                    disc.flip(i as u64);
                }
            }
        }
        if n % 4 <= 1 && disc.is_empty() {
            out.push(n);
        }
    }
    out
}

/// The closed-form description of the square discriminants at `r = 3`
/// (`n ≡ 1 mod 4`, `n + 2 = 3m²`), `r = 4` (`n ≡ 0 mod 4`,
/// `2n + 4 = ε_3^j + ε_3^{-j}`) and `r = 5` (`n ≡ 1 mod 4`,
/// `2n + 6 = ε_15^j + ε_15^{-j}`), restricted to `1 ≤ n ≤ n_max`.
pub fn predicted_square_pattern(r: u64, n_max: u64) -> Result<Vec<u64>, GaloisError> {
    let out = match r {
        3 => (1..=n_max)
            .filter(|&n| n % 4 == 1 && (n + 2) % 3 == 0 && is_square_u64(n.div_ceil(3)))
            .collect(),
        4 => unit_traces(4, n_max * 2 + 4)
            .into_iter()
            .filter(|&t| t >= 6 && (t - 4) % 2 == 0)
            .map(|t| (t - 4) / 2)
            .filter(|&n| n % 4 == 0 && n <= n_max)
            .collect(),
        5 => unit_traces(8, n_max * 2 + 6)
            .into_iter()
            .filter(|&t| t >= 8 && (t - 6) % 2 == 0)
            .map(|t| (t - 6) / 2)
            .filter(|&n| n % 4 == 1 && n <= n_max)
            .collect(),
        _ => return Err(GaloisError::PatternParameter(r)),
    };
    Ok(out)
}

/// Traces `ε^j + ε^{-j}` of a unit of norm 1 with trace `t1`, up to `limit`.
fn unit_traces(t1: u64, limit: u64) -> Vec<u64> {
    let (mut a, mut b) = (2u64, t1);
    let mut out = vec![a];
    while b <= limit {
        out.push(b);
        (a, b) = (b, t1 * b - a);
    }
    out
}

fn is_square_u64(m: u64) -> bool {
    let s = m.sqrt();
    s * s == m
}

// ---------------------------------------------------------------------------
// Degrees up to four

/// `g(x, s) = x^4 + 6s x^2 + 8s x + 3s^2 + 6s`, equal to `𝓛_4^⟨s-1⟩(x - s)`.
pub fn quartic_g(s: &BigRational) -> RatPoly {
    let c = |v: i64| BigRational::from_integer(v.into());
    RatPoly::new(vec![
        c(3) * s * s + c(6) * s,
        c(8) * s,
        c(6) * s,
        c(0),
        c(1),
    ])
}

/// `h(z, s) = z^3 + 12s z^2 + 24s(s-1) z - 64s^2`, the cubic resolvent of `g`.
pub fn quartic_resolvent(s: &BigRational) -> RatPoly {
    let c = |v: i64| BigRational::from_integer(v.into());
    RatPoly::new(vec![
        c(-64) * s * s,
        c(24) * s * (s - c(1)),
        c(12) * s,
        c(1),
    ])
}

/// Resolvent `z^3 + 2p z^2 + (p^2 - 4c) z - q^2` of `x^4 + p x^2 + q x + c`,
/// whose roots are the `a^2` in `(x^2 + ax + b)(x^2 - ax + b')`.
pub fn depressed_resolvent(p: &BigInt, q: &BigInt, c: &BigInt) -> IntPoly {
    IntPoly::new(vec![
        -(q * q),
        p * p - BigInt::from(4) * c,
        BigInt::from(2) * p,
        BigInt::one(),
    ])
}

/// Discriminant of `x^4 + p x^2 + q x + c`.
pub fn depressed_quartic_disc(p: &BigInt, q: &BigInt, c: &BigInt) -> BigInt {
    let b = |v: i64| BigInt::from(v);
    b(16) * p.pow(4) * c - b(4) * p.pow(3) * q * q - b(128) * p * p * c * c + b(144) * p * q * q * c
        - b(27) * q.pow(4)
        + b(256) * c.pow(3)
}

/// Exact structure of a monic depressed integer quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticAnalysis {
    pub integer_root: Option<BigInt>,
    /// Some `(x^2 + ax + b)(x^2 - ax + b')` over the integers.
    pub quadratic_split: Option<(BigInt, BigInt, BigInt)>,
    pub resolvent_roots: Vec<BigInt>,
    pub disc: BigInt,
}

impl QuarticAnalysis {
    pub fn irreducible(&self) -> bool {
        self.integer_root.is_none() && self.quadratic_split.is_none()
    }

    pub fn disc_square(&self) -> bool {
        !self.disc.is_negative() && {
            let s = self.disc.sqrt();
            &s * &s == self.disc
        }
    }

    /// Conclusion for an irreducible quartic.
    pub fn conclusion(&self) -> GaloisConclusion {
        if !self.irreducible() {
            return GaloisConclusion::Unresolved;
        }
        match self.resolvent_roots.len() {
            0 => refine(true, self.disc_square()),
            1 if !self.disc_square() => GaloisConclusion::DihedralD4Witness,
            _ => GaloisConclusion::Unresolved,
        }
    }
}

/// Distinct integer roots of a monic integer polynomial.
fn integer_roots(f: &IntPoly) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut g = f.clone();
    while g.coeff(0).is_zero() && g.degree().unwrap_or(0) > 0 {
        if out.is_empty() {
            out.push(BigInt::zero());
        }
        g = IntPoly::new(g.coeffs()[1..].to_vec());
    }
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let factors = factor_bigint(&g.coeff(0)).expect("constant term within factoring range");
    for d in divisors_from_factors(&factors) {
        let d = BigInt::from(d);
        for cand in [d.clone(), -d] {
            if g.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
    }
    out.sort();
    out
}

pub fn analyze_depressed_quartic(p: &BigInt, q: &BigInt, c: &BigInt) -> QuarticAnalysis {
    let f = IntPoly::new(vec![
        c.clone(),
        q.clone(),
        p.clone(),
        BigInt::zero(),
        BigInt::one(),
    ]);
    let integer_root = integer_roots(&f).into_iter().next();
    let resolvent_roots = integer_roots(&depressed_resolvent(p, q, c));
    let two = BigInt::from(2);
    let mut quadratic_split = None;
    for z in &resolvent_roots {
        if z.is_negative() {
            continue;
        }
        let a = z.sqrt();
        if &(&a * &a) != z {
            continue;
        }
        if a.is_zero() {
            // x^4 + p x^2 + c = (x^2 + b)(x^2 + b') with b + b' = p, b b' = c
            let d = p * p - BigInt::from(4) * c;
            if !d.is_negative() {
                let s = d.sqrt();
                if &s * &s == d && ((p + &s) % &two).is_zero() {
                    quadratic_split = Some((a, (p - &s) / &two, (p + &s) / &two));
                    break;
                }
            }
            continue;
        }
        if !(q % &a).is_zero() {
            continue;
        }
        let qa = q / &a;
        let sum = p + z;
        if !((&sum - &qa) % &two).is_zero() {
            continue;
        }
        let b = (&sum - &qa) / &two;
        let b2 = (&sum + &qa) / &two;
        if &(&b * &b2) == c {
            quadratic_split = Some((a, b, b2));
            break;
        }
    }
    QuarticAnalysis {
        integer_root,
        quadratic_split,
        resolvent_roots,
        disc: depressed_quartic_disc(p, q, c),
    }
}

/// `g(x, s)` for rational `s = a/b`, rescaled by `x ↦ x/b` to a monic
/// integer quartic, then analyzed.
pub fn analyze_g(s: &BigRational) -> QuarticAnalysis {
    let (a, b) = (s.numer(), s.denom());
    let p = BigInt::from(6) * a * b;
    let q = BigInt::from(8) * a * b * b;
    let c = BigInt::from(3) * a * a * b * b + BigInt::from(6) * a * b.pow(3);
    analyze_depressed_quartic(&p, &q, &c)
}

/// The depressed form `f(x - a_3/4)` of a monic quartic with `4 | a_3`.
pub fn depress_quartic(f: &IntPoly) -> Option<(BigInt, BigInt, BigInt)> {
    if f.degree() != Some(4) || !f.is_monic() {
        return None;
    }
    let a3 = f.coeff(3);
    if !(&a3 % BigInt::from(4)).is_zero() {
        return None;
    }
    let g = f.shift(&(-(a3 / BigInt::from(4))));
    Some((g.coeff(2), g.coeff(1), g.coeff(0)))
}

/// Exact decision for `n ≤ 4` and all `r ≥ 0`.
pub fn decide_small_n(
    n: u64,
    r: u64,
) -> Result<(IrredCertificate, GaloisCertificate), GaloisError> {
    let s = BigInt::from(r + 1);
    let irred = |exclusions: Vec<Exclusion>| IrredCertificate {
        n,
        r,
        method: IrredMethod::SmallDegreeExhaustive { exclusions },
    };
    let unresolved = || IrredCertificate {
        n,
        r,
        method: IrredMethod::Unresolved {},
    };
    let square = disc_is_square(n, r);
    let galois = |conclusion, method| GaloisCertificate {
        n,
        r,
        conclusion,
        method,
        disc_square: square,
        order_divisor: None,
    };
    match n {
        1 => Ok((
            irred(Vec::new()),
            galois(GaloisConclusion::AlternatingAn, GaloisMethod::Trivial {}),
        )),
        2 => {
            // Δ = -4(r+1) < 0, so no rational root
            let ok = !square;
            Ok((
                if ok {
                    irred(vec![Exclusion::RationalRoots { k: 1 }])
                } else {
                    unresolved()
                },
                galois(refine(ok, square), GaloisMethod::DiscriminantSign {}),
            ))
        }
        3 => {
            // x^3 + 3s x + 2s: an integer root divides 2s
            let f = IntPoly::new(vec![
                BigInt::from(2) * &s,
                BigInt::from(3) * &s,
                BigInt::zero(),
                BigInt::one(),
            ]);
            let ok = integer_roots(&f).is_empty();
            Ok((
                if ok {
                    irred(vec![Exclusion::RationalRoots { k: 1 }])
                } else {
                    unresolved()
                },
                galois(
                    refine(ok && !square, square),
                    GaloisMethod::DiscriminantSign {},
                ),
            ))
        }
        4 => {
            let qa = analyze_g(&BigRational::from_integer(s));
            let ok = qa.irreducible();
            let roots: Vec<i64> = qa
                .resolvent_roots
                .iter()
                .map(|z| z.to_i64().expect("small root"))
                .collect();
            let conclusion = if ok {
                qa.conclusion()
            } else {
                GaloisConclusion::Unresolved
            };
            Ok((
                if ok {
                    irred(vec![
                        Exclusion::RationalRoots { k: 1 },
                        Exclusion::QuarticResolvent { k: 2 },
                    ])
                } else {
                    unresolved()
                },
                galois(
                    conclusion,
                    GaloisMethod::QuarticResolvent {
                        resolvent_roots: roots,
                    },
                ),
            ))
        }
        _ => Err(GaloisError::Degree(n)),
    }
}

/// The nine integral points on `g(x, s) = 0`, with the exceptional roots
/// `6` of `𝓛_4^(5)` and `30` of `𝓛_4^(23)` recovered through `x ↦ x - s`.
pub const CURVE_POINTS: [(i64, i64); 9] = [
    (0, 0),
    (0, -2),
    (3, -1),
    (4, -2),
    (-1, -1),
    (-2, -2),
    (-3, -3),
    (3, -27),
    (-3, -9),
];

pub fn verify_curve_points() -> bool {
    let on_curve = CURVE_POINTS.iter().all(|&(x, s)| {
        quartic_g(&BigRational::from_integer(s.into()))
            .eval(&BigRational::from_integer(x.into()))
            .is_zero()
    });
    let exceptional = [(-3i64, -9i64, 6i64), (3, -27, 30)]
        .iter()
        .all(|&(x, s, root)| {
            x - s == root && glp_monic(4, s - 1).eval(&BigInt::from(root)).is_zero()
        });
    on_curve && exceptional
}

/// Points `(z, w)` on `(3z - 10)^2 - 3w^2 = -8` from `u + w√3` with
/// `u = 3z - 10`, starting at `±2 + 2√3` and multiplying by `2 + √3`.
pub fn conic_points(count: usize) -> Vec<(BigRational, BigRational)> {
    let mut out = Vec::new();
    for u0 in [2i64, -2] {
        let (mut u, mut w) = (BigInt::from(u0), BigInt::from(2));
        for _ in 0..count {
            out.push((
                BigRational::new(&u + BigInt::from(10), BigInt::from(3)),
                BigRational::from_integer(w.clone()),
            ));
            (u, w) = (
                BigInt::from(2) * &u + BigInt::from(3) * &w,
                &u + BigInt::from(2) * &w,
            );
        }
    }
    out
}

/// The two roots in `s` of `h(z, s) = 0`, read as a quadratic in `s` with
/// discriminant `(4z)^2 (3z^2 - 20z + 36)`:
/// `s = z(12 - 6z ± 2w) / (8(3z - 8))`.
pub fn d4_parameters(z: &BigRational, w: &BigRational) -> Option<[BigRational; 2]> {
    let c = |v: i64| BigRational::from_integer(v.into());
    let lhs = (c(3) * z - c(10)) * (c(3) * z - c(10)) - c(3) * w * w;
    let den = c(8) * (c(3) * z - c(8));
    if lhs != c(-8) || den.is_zero() {
        return None;
    }
    let make = |sign: i64| z * (c(12) - c(6) * z + c(2 * sign) * w) / &den;
    Some([make(1), make(-1)])
}

/// Reproduces `D_4` (or `C_4`) behaviour at a rational parameter: `g(x, s)`
/// irreducible, resolvent with a rational root, discriminant not a square.
pub fn d4_witness(s: &BigRational) -> bool {
    let qa = analyze_g(s);
    qa.irreducible() && !qa.resolvent_roots.is_empty() && !qa.disc_square()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::verify_certificate;
    use crate::poly::{discriminant_formula, discriminant_resultant};

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_criterion(&BigUint::from(5u32 * 8), 9), Some(5));
        assert_eq!(jordan_criterion(&BigUint::from(60u32), 5), None);
        assert_eq!(jordan_criterion(&BigUint::from(11u32 * 3), 19), Some(11));
    }

    #[test]
    fn lemma_mp_examples() {
        assert_eq!(lemma_mp(9, 1, 7), Ok(true));
        assert_eq!(lemma_mp(5, 3, 5), Ok(true));
        assert_eq!(lemma_mp(10, 0, 7), Ok(true));
        assert!(lemma_mp(10, 0, 5).is_err());
        assert!(lemma_mp(10, 0, 9).is_err());
    }

    #[test]
    fn table2_examples() {
        assert_eq!(table2_check(9, 1, 5), Ok(true));
        assert_eq!(table2_check(19, 8, 11), Ok(true));
        assert_eq!(table2_check(13, 4, 7), Ok(true));
        assert!(table2_check(9, 1, 7).is_err());
    }

    #[test]
    fn theorem_gt_examples() {
        let c = theorem_gt(100, 0);
        assert!(matches!(c.method, GaloisMethod::JordanPrime { .. }));
        assert_eq!(c.conclusion, GaloisConclusion::AlternatingAn);
        let c = theorem_gt(5, 3);
        assert_eq!(c.method, GaloisMethod::TransitiveOrderFilter { nf: 60 });
        assert_eq!(c.conclusion, GaloisConclusion::SymmetricSn);
        assert_eq!(c.order_divisor.as_deref(), Some("60"));
        let c = theorem_gt(9, 1);
        assert_eq!(c.summary(), "JordanPrime(5)");
        assert!(c.contains_an());
    }

    #[test]
    fn transitive_filter() {
        assert_eq!(transitive_order_filter(5, 60), Ok(true));
        assert_eq!(transitive_order_filter(5, 10), Ok(false));
        assert_eq!(transitive_order_filter(7, 5), Ok(true));
        assert_eq!(transitive_order_filter(7, 7), Ok(false));
        assert_eq!(transitive_order_filter(8, 5), Err(GaloisError::Degree(8)));
        for n in 5..=7u64 {
            let t = transitive_orders(n).unwrap();
            let fact: u64 = (1..=n).product();
            assert!(t.iter().all(|o| o % n == 0 && fact.is_multiple_of(*o)));
            assert_eq!(&t[t.len() - 2..], &[fact / 2, fact]);
        }
    }

    #[test]
    fn disc_square_matches_isqrt() {
        for n in 1..=24u64 {
            for r in 0..=12u64 {
                let d = discriminant_formula(n as usize, r as i64);
                let expect = !d.is_negative() && {
                    let s = d.sqrt();
                    &s * &s == d
                };
                assert_eq!(disc_is_square(n, r), expect, "({n},{r})");
            }
        }
        assert!(disc_is_square(4, 0));
        assert!(disc_is_square(4, 5));
        assert!(!disc_is_square(6, 17));
    }

    #[test]
    fn pattern_incremental_matches_direct() {
        for r in 0..=8 {
            let direct: Vec<u64> = (1..=150).filter(|&n| disc_is_square(n, r)).collect();
            assert_eq!(disc_square_pattern(r, 150), direct, "r={r}");
        }
    }

    #[test]
    fn square_pattern_predictions() {
        assert_eq!(disc_square_pattern(3, 300), vec![1, 25, 73, 145, 241]);
        assert_eq!(
            predicted_square_pattern(3, 300).unwrap(),
            vec![1, 25, 73, 145, 241]
        );
        assert_eq!(
            predicted_square_pattern(4, 10_000).unwrap(),
            vec![24, 360, 5040]
        );
        assert_eq!(
            predicted_square_pattern(5, 20_000).unwrap(),
            vec![1, 241, 15121]
        );
        assert!(predicted_square_pattern(6, 10).is_err());
    }

    #[test]
    fn quartic_forms() {
        for s in -10..=10i64 {
            let g = glp_monic(4, s - 1).shift(&BigInt::from(-s));
            assert_eq!(g.to_rat(), quartic_g(&rat(s)), "s={s}");
            let (p, q, c) = (
                BigInt::from(6 * s),
                BigInt::from(8 * s),
                BigInt::from(3 * s * s + 6 * s),
            );
            assert_eq!(
                depressed_resolvent(&p, &q, &c).to_rat(),
                quartic_resolvent(&rat(s))
            );
            assert_eq!(
                depressed_quartic_disc(&p, &q, &c),
                discriminant_resultant(&g)
            );
        }
        assert_eq!(
            quartic_resolvent(&rat(0)),
            RatPoly::new(vec![rat(0), rat(0), rat(0), rat(1)])
        );
    }

    #[test]
    fn cubic_shift_form() {
        for r in 0..30i64 {
            let s = r + 1;
            let f = glp_monic(3, r).shift(&BigInt::from(-s));
            assert_eq!(f, IntPoly::from_i64(&[2 * s, 3 * s, 0, 1]));
        }
    }

    #[test]
    fn small_n_examples() {
        for r in 0..200 {
            for n in 1..=4 {
                let (ic, gc) = decide_small_n(n, r).unwrap();
                assert!(verify_certificate(&ic), "({n},{r})");
                assert!(gc.contains_an(), "({n},{r})");
            }
            assert_eq!(
                decide_small_n(3, r).unwrap().1.conclusion,
                GaloisConclusion::SymmetricSn
            );
        }
        let (_, gc) = decide_small_n(4, 5).unwrap();
        assert!(gc.disc_square);
        assert_eq!(gc.conclusion, GaloisConclusion::AlternatingAn);
        assert_eq!(
            gc.method,
            GaloisMethod::QuarticResolvent {
                resolvent_roots: vec![]
            }
        );
        assert!(decide_small_n(5, 0).is_err());
    }

    #[test]
    fn curve_points() {
        assert!(verify_curve_points());
        let qa = analyze_g(&rat(-9));
        assert!(qa.integer_root.is_some());
        assert!(!qa.irreducible());
        assert!(analyze_g(&rat(-27)).integer_root.is_some());
    }

    #[test]
    fn d4_example() {
        let pts = conic_points(3);
        assert_eq!(pts[0], (BigRational::from_integer(4.into()), rat(2)));
        let z = BigRational::new(20.into(), 3.into());
        assert!(pts.contains(&(z.clone(), rat(6))));
        let [s1, s2] = d4_parameters(&z, &rat(6)).unwrap();
        assert_eq!(s1, BigRational::new((-10).into(), 9.into()));
        assert_eq!(s2, BigRational::new((-25).into(), 9.into()));
        for s in [&s1, &s2] {
            assert!(quartic_resolvent(s).eval(&z).is_zero());
            assert!(d4_witness(s));
            assert_eq!(
                analyze_g(s).conclusion(),
                GaloisConclusion::DihedralD4Witness
            );
        }
        // z = 4 lands on the trivial values s = -1, -2
        let [a, b] = d4_parameters(&rat(4), &rat(2)).unwrap();
        assert_eq!((a, b), (rat(-1), rat(-2)));
        // halving the ±w term does not give resolvent roots
        let s = BigRational::new((-5).into(), 4.into());
        assert!(!quartic_resolvent(&s).eval(&rat(4)).is_zero());
        assert!(!d4_witness(&s));
        assert!(d4_parameters(&rat(4), &rat(3)).is_none());
    }

    #[test]
    fn certificate_json() {
        let c = theorem_gt(9, 1);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["method"], "JordanPrime");
        assert_eq!(v["witness"]["q"], 5);
        assert_eq!(v["conclusion"], "AlternatingAn");
        assert_eq!(v["disc_square"], true);
        let back: GaloisCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
