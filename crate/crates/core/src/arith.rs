//! Primes and finite fields.
//!
//! Primality below 2^64 is decided by Miller–Rabin with a fixed witness
//! set that is known to be exact in that range, so nothing here is
//! probabilistic. Interval checks stream primes out of a segmented sieve.
//! The finite-field half supplies the Rabin irreducibility test and the
//! factor-degree pattern of a squarefree reduction.

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is zero modulo {0}")]
    ZeroModulo(u64),
    #[error("h must be at least 2, got {0}")]
    BadH(u64),
}

/// Exact for every `n < 2^64` (the first twelve primes as bases).
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeMethod {
    DeterministicMr,
    Sieve,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWitness {
    pub p: u64,
    pub method: PrimeMethod,
}

impl PrimeWitness {
    pub fn verify(&self) -> bool {
        is_prime(self.p)
    }
}

/// Primes `≤ limit` by a plain Eratosthenes sieve.
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

const SEGMENT: u64 = 1 << 16;

/// Streams the primes in `[lo, hi]` one segment at a time.
pub struct SegmentedPrimes {
    base: Vec<u64>,
    seg_lo: u64,
    hi: u64,
    buf: Vec<u64>,
    pos: usize,
}

impl SegmentedPrimes {
    pub fn new(lo: u64, hi: u64) -> Self {
        let root = (hi as f64).sqrt() as u64 + 2;
        Self {
            base: small_primes(root),
            seg_lo: lo.max(2),
            hi,
            buf: Vec::new(),
            pos: 0,
        }
    }

    fn fill(&mut self) -> bool {
        self.buf.clear();
        self.pos = 0;
        while self.buf.is_empty() {
            if self.seg_lo > self.hi {
                return false;
            }
            let lo = self.seg_lo;
            let hi = (lo + SEGMENT - 1).min(self.hi);
            let mut composite = vec![false; (hi - lo + 1) as usize];
            for &p in &self.base {
                if p * p > hi {
                    break;
                }
                let mut m = (p * p).max(lo.div_ceil(p) * p);
                while m <= hi {
                    composite[(m - lo) as usize] = true;
                    m += p;
                }
            }
            self.buf.extend(
                composite
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| !c)
                    .map(|(i, _)| lo + i as u64),
            );
            self.seg_lo = hi + 1;
        }
        true
    }
}

impl Iterator for SegmentedPrimes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.pos >= self.buf.len() && !self.fill() {
            return None;
        }
        let p = self.buf[self.pos];
        self.pos += 1;
        Some(p)
    }
}

/// Primality bitmap with next-prime lookups, for dense repeated queries
/// below a fixed bound.
#[derive(Clone, Debug)]
pub struct PrimeTable {
    prime: Vec<bool>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Self {
        let mut prime = vec![false; limit as usize + 1];
        for p in small_primes(limit) {
            prime[p as usize] = true;
        }
        Self { prime }
    }

    pub fn limit(&self) -> u64 {
        self.prime.len() as u64 - 1
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.prime
            .get(n as usize)
            .copied()
            .unwrap_or_else(|| is_prime(n))
    }

    /// Smallest prime `> x`.
    pub fn next_prime_after(&self, x: u64) -> u64 {
        let mut m = x + 1;
        while !self.is_prime(m) {
            m += 1;
        }
        m
    }
}

/// Smallest prime `> x` (no table).
pub fn next_prime_after(x: u64) -> u64 {
    let mut m = x + 1;
    while !is_prime(m) {
        m += 1;
    }
    m
}

/// Smallest prime `p` with `lo < p ≤ hi`, the lower bound compared exactly.
pub fn prime_in_interval(lo_exclusive: Ratio<u64>, hi_inclusive: u64) -> Option<PrimeWitness> {
    let start = lo_exclusive.floor().to_integer();
    let p = next_prime_after(start);
    (p <= hi_inclusive).then_some(PrimeWitness {
        p,
        method: PrimeMethod::DeterministicMr,
    })
}

/// Trial division by small primes, then Pollard–Brent for what is left.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    let mut stack = vec![n];
    let mut rest = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            rest.push(m);
            continue;
        }
        let d = pollard_brent(m);
        stack.push(d);
        stack.push(m / d);
    }
    rest.sort_unstable();
    for p in rest {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out.sort_unstable();
    out
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128.min(r - k)) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// All positive divisors, ascending.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor_u64(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Factors `|c|` by trial division up to `10^6` followed by [`factor_u64`]
/// once the cofactor fits in 64 bits. `None` for zero or when a cofactor
/// above `2^64` has no small prime factor.
pub fn factor_bigint(c: &BigInt) -> Option<Vec<(u64, u32)>> {
    const TRIAL_LIMIT: u64 = 1_000_000;
    if c.is_zero() {
        return None;
    }
    let mut m = c.magnitude().clone();
    if let Some(v) = m.to_u64() {
        return Some(factor_u64(v));
    }
    let mut out = Vec::new();
    for p in SegmentedPrimes::new(2, TRIAL_LIMIT) {
        let pb = BigUint::from(p);
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        if let Some(v) = m.to_u64() {
            out.extend(factor_u64(v));
            out.sort_unstable();
            return Some(out);
        }
    }
    None
}

/// Positive divisors of `∏ p^e`, ascending.
pub fn divisors_from_factors(factors: &[(u64, u32)]) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = BigUint::one();
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                let d = &divs[i] * &pk;
                divs.push(d);
            }
        }
    }
    divs.sort_unstable();
    divs
}

// ---------------------------------------------------------------------------
// Analytic constants

/// Rigorous enclosure of `C(h) = e^{h+1/2}·(1-1/h)^{-h}`.
///
/// `ln C` is enclosed by exact rationals (partial sums of `-ln(1-1/h)` plus
/// a geometric tail bound); the decimal exponent uses rational bounds on
/// `ln 10`. The upper end is what may be quoted as a guarantee, the lower
/// end is what a finite check must start below.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticBound {
    pub h: BigInt,
    pub ln_lower: BigRational,
    pub ln_upper: BigRational,
    pub log10_lower: BigRational,
    pub log10_upper: BigRational,
}

fn ln10_bounds() -> (BigRational, BigRational) {
    let den = BigInt::from(10u64).pow(18);
    (
        BigRational::new(BigInt::from(2_302_585_092_994_045_684u64), den.clone()),
        BigRational::new(BigInt::from(2_302_585_092_994_045_685u64), den),
    )
}

impl AnalyticBound {
    pub fn c_of_h(h: &BigInt) -> Result<Self, ArithError> {
        if *h < BigInt::from(2) {
            return Err(ArithError::BadH(h.to_u64().unwrap_or(0)));
        }
        let x = BigRational::new(BigInt::one(), h.clone());
        // -ln(1-x) = Σ x^k/k
        const TERMS: u32 = 40;
        let mut sum = BigRational::zero();
        let mut pow = BigRational::one();
        for k in 1..=TERMS {
            pow *= &x;
            sum += &pow / BigRational::from_integer(k.into());
        }
        let tail =
            &pow * &x / (BigRational::from_integer((TERMS + 1).into()) * (BigRational::one() - &x));
        let hr = BigRational::from_integer(h.clone());
        let base = &hr + BigRational::new(1.into(), 2.into());
        let ln_lower = &base + &hr * &sum;
        let ln_upper = &base + &hr * (&sum + tail);
        let (l10_lo, l10_hi) = ln10_bounds();
        Ok(Self {
            h: h.clone(),
            log10_lower: &ln_lower / l10_hi,
            log10_upper: &ln_upper / l10_lo,
            ln_lower,
            ln_upper,
        })
    }

    /// Guaranteed `≥ C(h)`; infinite when out of `f64` range.
    pub fn upper_f64(&self) -> f64 {
        let (e, m) = split_log10(&self.log10_upper, true);
        m * 10f64.powi(e.clamp(-400, 400) as i32)
    }

    /// Guaranteed `≤ C(h)`.
    pub fn lower_f64(&self) -> f64 {
        let (e, m) = split_log10(&self.log10_lower, false);
        m * 10f64.powi(e.clamp(-400, 400) as i32)
    }

    /// True when `C(h) > mantissa·10^exp10` is certain.
    pub fn certainly_exceeds(&self, mantissa: f64, exp10: i64) -> bool {
        let (e, m) = split_log10(&self.log10_lower, false);
        e > exp10 || (e == exp10 && m > mantissa)
    }

    /// Upper-rounded decimal rendering, e.g. `4.87301e1`.
    pub fn render_upper(&self) -> String {
        let (e, m) = split_log10(&self.log10_upper, true);
        format!("{m:.6}e{e}")
    }

    /// `⌊C(h)⌋ + 1` taken from the lower end: every integer `N > C(h)` is
    /// at least this.
    pub fn first_integer_above_lower(&self) -> u64 {
        let v = self.lower_f64();
        if !v.is_finite() || v > u64::MAX as f64 {
            u64::MAX
        } else {
            v.floor() as u64
        }
    }
}

/// `(e, m)` with `10^{x} ≈ m·10^e`, `1 ≤ m < 10`, `m` rounded outward.
fn split_log10(x: &BigRational, round_up: bool) -> (i64, f64) {
    let e = x.floor().to_integer();
    let frac = (x - BigRational::from_integer(e.clone()))
        .to_f64()
        .unwrap_or(0.0);
    let mut m = 10f64.powf(frac);
    let eps = 1e-12;
    m = if round_up {
        m * (1.0 + eps)
    } else {
        m * (1.0 - eps)
    };
    let mut e = e.to_i64().expect("exponent fits");
    if m >= 10.0 {
        m /= 10.0;
        e += 1;
    }
    if m < 1.0 {
        m *= 10.0;
        e -= 1;
    }
    (e, m)
}

/// Outcome of a finite sweep over an integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RangeCheck {
    pub first: u64,
    pub last: u64,
    pub checked: u64,
    pub first_failure: Option<u64>,
}

impl RangeCheck {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Verifies that `[N(1-1/h), N]` contains a prime for every integer
/// `C(h) < N ≤ n_max` (and, for `h = 2`, for `48 ≤ N ≤ 67` as well).
pub fn check_theorem_ant(h: u64, n_max: u64) -> Result<RangeCheck, ArithError> {
    let bound = AnalyticBound::c_of_h(&BigInt::from(h))?;
    let mut first = bound.first_integer_above_lower();
    if h == 2 {
        first = first.min(48);
    }
    let mut check = RangeCheck {
        first,
        last: n_max,
        checked: 0,
        first_failure: None,
    };
    if first > n_max {
        return Ok(check);
    }
    let mut primes = SegmentedPrimes::new(2, n_max).peekable();
    let mut largest = 0u64;
    for n in first..=n_max {
        while let Some(&p) = primes.peek() {
            if p > n {
                break;
            }
            largest = p;
            primes.next();
        }
        check.checked += 1;
        // largest ≥ N(1 - 1/h)  ⟺  h·largest ≥ (h-1)·N
        if (largest as u128) * (h as u128) < (h as u128 - 1) * n as u128 {
            check.first_failure.get_or_insert(n);
        }
    }
    Ok(check)
}

/// Smallest integer from which the prime-gap guarantee `(n, 1.001n]` is used.
pub const HARBORTH_KEMNITZ_START: u64 = 48_683;

/// Verifies that `(n, 1.001n]` contains a prime for `48683 ≤ n ≤ n_max`.
pub fn check_harborth_kemnitz(n_max: u64) -> RangeCheck {
    let lo = HARBORTH_KEMNITZ_START;
    let mut check = RangeCheck {
        first: lo,
        last: n_max,
        checked: 0,
        first_failure: None,
    };
    if n_max < lo {
        return check;
    }
    let hi = n_max + n_max / 1000 + 2;
    let mut primes = SegmentedPrimes::new(lo, hi).peekable();
    for n in lo..=n_max {
        while primes.peek().is_some_and(|&p| p <= n) {
            primes.next();
        }
        check.checked += 1;
        let ok = primes
            .peek()
            .is_some_and(|&p| (p as u128) * 1000 <= (n as u128) * 1001);
        if !ok {
            check.first_failure.get_or_insert(n);
        }
    }
    check
}

/// Whether `n + r ≥ 48` and `n ≥ 8 + 5r/3`.
pub fn corollary_nr_hypotheses(n: u64, r: u64) -> bool {
    n + r >= 48 && 3 * n >= 24 + 5 * r
}

/// Smallest prime `p` with `(n+r)/2 < p < n-2`, if any.
pub fn check_corollary_nr(n: u64, r: u64) -> Option<PrimeWitness> {
    if n < 3 {
        return None;
    }
    let p = next_prime_after((n + r) / 2);
    (p < n - 2).then_some(PrimeWitness {
        p,
        method: PrimeMethod::DeterministicMr,
    })
}

/// Sweeps every `(n, r)` with `n ≤ n_max` satisfying the hypotheses of
/// [`corollary_nr_hypotheses`] and confirms the interval is nonempty.
pub fn sweep_corollary_nr(n_max: u64) -> (u64, Vec<(u64, u64)>) {
    let table = PrimeTable::new(n_max + 2);
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for n in 8..=n_max {
        let r_max = (3 * n - 24) / 5;
        for r in 0..=r_max {
            if !corollary_nr_hypotheses(n, r) {
                continue;
            }
            checked += 1;
            if table.next_prime_after((n + r) / 2) >= n - 2 {
                failures.push((n, r));
            }
        }
    }
    (checked, failures)
}

// ---------------------------------------------------------------------------
// Polynomials over F_ℓ

/// Polynomial over the prime field of `modulus` elements; residues in
/// `[0, modulus)`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl FFPoly {
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        trim(&mut coeffs);
        Self { modulus, coeffs }
    }

    pub fn from_int(p: &IntPoly, modulus: u64) -> Self {
        Self::new(modulus, p.reduce_mod(modulus))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn make_monic(&self) -> Self {
        let lc = *self.coeffs.last().expect("nonzero");
        let inv = pow_mod(lc, self.modulus - 2, self.modulus);
        Self {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| mul_mod(c, inv, self.modulus))
                .collect(),
        }
    }
}

/// Arithmetic modulo a fixed monic `f` over `F_ℓ`.
struct ModRing<'a> {
    l: u64,
    f: &'a [u64],
}

impl ModRing<'_> {
    fn n(&self) -> usize {
        self.f.len() - 1
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let l = self.l;
        let small = l < (1 << 31);
        let mut prod = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let t = prod[i + j] + x as u128 * y as u128;
                prod[i + j] = if small { t } else { t % l as u128 };
            }
        }
        let mut out: Vec<u64> = prod.into_iter().map(|v| (v % l as u128) as u64).collect();
        self.reduce(&mut out);
        out
    }

    fn reduce(&self, v: &mut Vec<u64>) {
        let n = self.n();
        let l = self.l;
        while v.len() > n {
            let top = v.pop().expect("nonempty");
            if top == 0 {
                continue;
            }
            let base = v.len() - n;
            for k in 0..n {
                let sub = mul_mod(top, self.f[k], l);
                v[base + k] = (v[base + k] + l - sub) % l;
            }
        }
        trim(v);
    }

    fn pow(&self, base: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        self.reduce(&mut acc);
        let mut b = base.to_vec();
        self.reduce(&mut b);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Columns `x^{iℓ} mod f`; Frobenius is `F_ℓ`-linear, so `g^ℓ` is the
    /// matrix applied to the coefficient vector of `g`.
    fn frobenius(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        let xl = self.pow(&[0, 1], self.l);
        let mut cols = Vec::with_capacity(n);
        let mut one = vec![1u64];
        self.reduce(&mut one);
        cols.push(one);
        for i in 1..n {
            let next = self.mul(&cols[i - 1], &xl);
            cols.push(next);
        }
        cols
    }

    fn apply(&self, frob: &[Vec<u64>], g: &[u64]) -> Vec<u64> {
        let n = self.n();
        let l = self.l as u128;
        let mut acc = vec![0u128; n];
        for (i, &c) in g.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, &q) in frob[i].iter().enumerate() {
                acc[k] = (acc[k] + c as u128 * q as u128) % l;
            }
        }
        let mut out: Vec<u64> = acc.into_iter().map(|v| v as u64).collect();
        trim(&mut out);
        out
    }
}

fn poly_sub(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + l - y) % l
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_rem(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv = pow_mod(b[db], l - 2, l);
    while r.len() > db {
        let top = mul_mod(*r.last().expect("nonempty"), inv, l);
        let shift = r.len() - 1 - db;
        for (k, &c) in b.iter().enumerate() {
            let sub = mul_mod(top, c, l);
            r[shift + k] = (r[shift + k] + l - sub) % l;
        }
        trim(&mut r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, l);
        x = y;
        y = r;
    }
    x
}

fn poly_div_exact(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = pow_mod(b[db], l - 2, l);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len().saturating_sub(db)];
    while r.len() > db && !r.is_empty() {
        let top = mul_mod(*r.last().expect("nonempty"), inv, l);
        let shift = r.len() - 1 - db;
        q[shift] = top;
        for (k, &c) in b.iter().enumerate() {
            let sub = mul_mod(top, c, l);
            r[shift + k] = (r[shift + k] + l - sub) % l;
        }
        trim(&mut r);
    }
    trim(&mut q);
    q
}

fn distinct_primes(n: usize) -> Vec<usize> {
    factor_u64(n as u64)
        .into_iter()
        .map(|(p, _)| p as usize)
        .collect()
}

/// Rabin's test: `f` is irreducible over `F_ℓ` iff `x^{ℓ^n} ≡ x (mod f)`
/// and `gcd(x^{ℓ^{n/q}} - x, f) = 1` for every prime `q | n`.
pub fn ff_irreducible(f: &FFPoly) -> Result<bool, ArithError> {
    let l = f.modulus;
    if !is_prime(l) {
        return Err(ArithError::NotPrime(l));
    }
    let Some(n) = f.degree() else {
        return Err(ArithError::ZeroModulo(l));
    };
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let f = f.make_monic();
    let ring = ModRing { l, f: &f.coeffs };
    let frob = ring.frobenius();
    let x = vec![0u64, 1];
    let checkpoints: Vec<usize> = distinct_primes(n).into_iter().map(|q| n / q).collect();
    let mut h = x.clone();
    for k in 1..=n {
        h = ring.apply(&frob, &h);
        if checkpoints.contains(&k) {
            let g = poly_gcd(&f.coeffs, &poly_sub(&h, &x, l), l);
            if g.len() > 1 {
                return Ok(false);
            }
        }
    }
    Ok(h == x)
}

/// Degrees of the irreducible factors of a squarefree `f` over `F_ℓ`
/// (distinct-degree factorization), ascending. `None` if `f` is not
/// squarefree mod `ℓ` or has degree 0.
pub fn factor_degree_pattern(f: &FFPoly) -> Result<Option<Vec<usize>>, ArithError> {
    let l = f.modulus;
    if !is_prime(l) {
        return Err(ArithError::NotPrime(l));
    }
    let Some(n) = f.degree() else {
        return Err(ArithError::ZeroModulo(l));
    };
    if n == 0 {
        return Ok(None);
    }
    let f = f.make_monic();
    let deriv: Vec<u64> = {
        let mut d: Vec<u64> = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| mul_mod(c, j as u64 % l, l))
            .collect();
        trim(&mut d);
        d
    };
    if deriv.is_empty() || poly_gcd(&f.coeffs, &deriv, l).len() > 1 {
        return Ok(None);
    }
    if n == 1 {
        return Ok(Some(vec![1]));
    }
    let ring = ModRing { l, f: &f.coeffs };
    let frob = ring.frobenius();
    let x = vec![0u64, 1];
    let mut rest = f.coeffs.clone();
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut i = 0;
    while rest.len() > 1 {
        i += 1;
        if 2 * i > rest.len() - 1 {
            degrees.push(rest.len() - 1);
            break;
        }
        h = ring.apply(&frob, &h);
        let g = poly_gcd(&rest, &poly_sub(&h, &x, l), l);
        let dg = g.len() - 1;
        if dg > 0 {
            degrees.extend(std::iter::repeat_n(i, dg / i));
            rest = poly_div_exact(&rest, &g, l);
        }
    }
    degrees.sort_unstable();
    Ok(Some(degrees))
}

/// Ben-Or style early-exit irreducibility: stops at the first `i ≤ n/2`
/// with a nontrivial `gcd(x^{ℓ^i} - x, f)`.
fn quick_irreducible(f: &FFPoly) -> bool {
    let l = f.modulus;
    let Some(n) = f.degree() else { return false };
    if n <= 1 {
        return n == 1;
    }
    let f = f.make_monic();
    let ring = ModRing { l, f: &f.coeffs };
    let frob = ring.frobenius();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = ring.apply(&frob, &h);
        if poly_gcd(&f.coeffs, &poly_sub(&h, &x, l), l).len() > 1 {
            return false;
        }
    }
    true
}

pub const DEFAULT_ELL_MAX: u64 = 10_000;

/// Smallest prime `ℓ ≤ ell_max` at which the reduction of the monic `p`
/// is irreducible.
pub fn find_ff_witness(p: &IntPoly, ell_max: u64) -> Option<u64> {
    let n = p.degree()?;
    if n == 0 {
        return None;
    }
    SegmentedPrimes::new(2, ell_max).find(|&l| {
        let f = FFPoly::from_int(p, l);
        f.degree() == Some(n) && quick_irreducible(&f) && ff_irreducible(&f).expect("prime modulus")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn primality_small() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(48683));
        assert!(is_prime(18_446_744_073_709_551_557)); // largest prime < 2^64
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(!is_prime(3_825_123_056_546_413_051));
    }

    #[test]
    fn primality_matches_trial_division() {
        let table = PrimeTable::new(1_000_000);
        for m in 0..=1_000_000u64 {
            assert_eq!(is_prime(m), table.is_prime(m), "{m}");
        }
        for m in (0..200_000u64).step_by(7) {
            assert_eq!(is_prime(m), trial_division(m));
        }
    }

    #[test]
    fn segmented_matches_plain() {
        let plain: Vec<u64> = small_primes(300_000)
            .into_iter()
            .filter(|&p| p >= 1000)
            .collect();
        let seg: Vec<u64> = SegmentedPrimes::new(1000, 300_000).collect();
        assert_eq!(plain, seg);
    }

    #[test]
    fn intervals() {
        assert_eq!(prime_in_interval(Ratio::new(13, 2), 10).unwrap().p, 7);
        assert!(prime_in_interval(Ratio::new(5, 1), 6).is_none());
        assert_eq!(prime_in_interval(Ratio::new(105, 1), 120).unwrap().p, 107);
        assert_eq!(prime_in_interval(Ratio::new(64, 1), 120).unwrap().p, 67);
        // strict at the lower end
        assert_eq!(prime_in_interval(Ratio::new(7, 1), 11).unwrap().p, 11);
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(6720), vec![(2, 6), (3, 1), (5, 1), (7, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        let big = 1_000_000_007u64 * 998_244_353;
        assert_eq!(factor_u64(big), vec![(998_244_353, 1), (1_000_000_007, 1)]);
        assert_eq!(divisors_u64(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn c_of_h_values() {
        let c2 = AnalyticBound::c_of_h(&BigInt::from(2)).unwrap();
        // 4e^{2.5} = 48.7299...
        assert!(c2.lower_f64() > 48.0);
        assert!(c2.upper_f64() < 48.74 && c2.lower_f64() > 48.72);
        assert!(AnalyticBound::c_of_h(&BigInt::from(1)).is_err());
    }

    #[test]
    fn theorem_ant_small() {
        for h in [2, 3, 5] {
            let c = check_theorem_ant(h, 200_000).unwrap();
            assert!(c.ok(), "h={h}: {c:?}");
        }
        assert_eq!(check_theorem_ant(2, 1_000).unwrap().first, 48);
    }

    #[test]
    fn harborth_kemnitz_small() {
        let c = check_harborth_kemnitz(60_000);
        assert!(c.ok());
        assert_eq!(c.checked, 60_000 - 48_683 + 1);
        // the gap just below the threshold does exceed 0.1%
        let below = (48_000..HARBORTH_KEMNITZ_START).any(|n| {
            let p = next_prime_after(n);
            p * 1000 > n * 1001
        });
        assert!(below);
    }

    #[test]
    fn corollary_nr_examples() {
        let w = check_corollary_nr(48, 0).unwrap();
        assert!(w.p > 24 && w.p < 46);
        assert!(corollary_nr_hypotheses(100, 8));
        let w = check_corollary_nr(100, 8).unwrap();
        assert!(w.p > 54 && w.p < 98);
        assert!(!corollary_nr_hypotheses(10, 8));
    }

    fn ff(l: u64, c: &[u64]) -> FFPoly {
        FFPoly::new(l, c.to_vec())
    }

    #[test]
    fn rabin_examples() {
        assert!(ff_irreducible(&ff(2, &[1, 1, 1])).unwrap());
        assert!(!ff_irreducible(&ff(3, &[2, 0, 1])).unwrap());
        assert!(matches!(
            ff_irreducible(&ff(4, &[1, 1, 1])),
            Err(ArithError::NotPrime(4))
        ));
        let l63 = crate::poly::glp_monic(6, 3);
        assert!(ff_irreducible(&FFPoly::from_int(&l63, 13)).unwrap());
    }

    /// Enumerates monic polynomials mod ℓ and decides irreducibility by
    /// trial division against all monic polynomials of lower degree.
    fn brute_irreducible(l: u64, f: &[u64]) -> bool {
        let n = f.len() - 1;
        for d in 1..=n / 2 {
            let count = l.pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut t = idx;
                for _ in 0..d {
                    g.push(t % l);
                    t /= l;
                }
                g.push(1);
                if poly_rem(f, &g, l).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_against_enumeration() {
        for l in [2u64, 3, 5, 7] {
            for deg in 1..=4usize {
                let count = l.pow(deg as u32);
                for idx in 0..count {
                    let mut c = Vec::with_capacity(deg + 1);
                    let mut t = idx;
                    for _ in 0..deg {
                        c.push(t % l);
                        t /= l;
                    }
                    c.push(1);
                    let f = ff(l, &c);
                    assert_eq!(
                        ff_irreducible(&f).unwrap(),
                        brute_irreducible(l, &c),
                        "{c:?} mod {l}"
                    );
                    assert_eq!(quick_irreducible(&f), brute_irreducible(l, &c));
                }
            }
        }
    }

    #[test]
    fn degree_patterns() {
        // (x+1)(x^2+x+1) over F_5 ... x^2+x+1 has disc -3 ≡ 2, a non-residue mod 5
        let f = ff(5, &[1, 2, 2, 1]);
        assert_eq!(factor_degree_pattern(&f).unwrap(), Some(vec![1, 2]));
        // repeated factor
        assert_eq!(factor_degree_pattern(&ff(5, &[1, 2, 1])).unwrap(), None);
        // x^4 - 1 mod 5 splits completely
        assert_eq!(
            factor_degree_pattern(&ff(5, &[4, 0, 0, 0, 1])).unwrap(),
            Some(vec![1, 1, 1, 1])
        );
        // x^4 + 1 mod 3: two quadratics
        assert_eq!(
            factor_degree_pattern(&ff(3, &[1, 0, 0, 0, 1])).unwrap(),
            Some(vec![2, 2])
        );
    }

    #[test]
    fn witness_search() {
        assert_eq!(
            find_ff_witness(&crate::poly::glp_monic(6, 3), DEFAULT_ELL_MAX),
            Some(13)
        );
        let w = find_ff_witness(&crate::poly::glp_monic(4, 4), DEFAULT_ELL_MAX).unwrap();
        assert!(w <= 17);
    }
}
