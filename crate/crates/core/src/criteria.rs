//! Irreducibility criteria and the per-`(n, r)` decision pipeline.
//!
//! Every divisibility question about `binom(n+r, r)` goes through Kummer's
//! carry count, so nothing here expands a large binomial.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{
    divisors_from_factors, factor_bigint, factor_degree_pattern, factor_u64, ff_irreducible,
    find_ff_witness, is_prime, prime_in_interval, small_primes, AnalyticBound, FFPoly,
    DEFAULT_ELL_MAX,
};
use crate::galois::{analyze_depressed_quartic, depress_quartic, disc_is_square};
use crate::newton::{glp_polygon, is_coleman_integral, ord_p_u64, polygon_of_hurwitz};
use crate::poly::{factorial, glp_hurwitz, glp_monic, HurwitzPoly, IntPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("|b_0| must be 1")]
    ConstantNotUnit,
    #[error("k = {k} exceeds n/2 = {half}")]
    DegreeTooLarge { k: u64, half: u64 },
    #[error("p = {p} must exceed k = {k}")]
    PrimeTooSmall { p: u64, k: u64 },
    #[error("k must be positive")]
    ZeroDegree,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("constant Hurwitz coefficient is zero")]
    ZeroConstant,
    #[error("constant term could not be factored")]
    Unfactored,
}

/// Number of carries when adding `n` and `r` in base `p`, which is
/// `ord_p(binom(n+r, r))`.
pub fn carries(n: u64, r: u64, p: u64) -> u32 {
    let (mut a, mut b, mut carry, mut count) = (n, r, 0u64, 0u32);
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p + b % p + carry;
        carry = u64::from(s >= p);
        count += carry as u32;
        a /= p;
        b /= p;
    }
    count
}

/// `n = n0·n1 = n2·n3`, where `n1` collects the prime powers of `n` at
/// primes dividing `binom(n+r, r)` and `n3` those at primes with
/// `ord_p(n) ≤ ord_p(r!)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n0: u64,
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

pub fn decompose(n: u64, r: u64) -> Decomposition {
    decompose_with(n, r, &factor_u64(n))
}

/// [`decompose`] with the factorization of `n` supplied.
pub fn decompose_with(n: u64, r: u64, factors: &[(u64, u32)]) -> Decomposition {
    let (mut n1, mut n3) = (1u64, 1u64);
    for &(p, e) in factors {
        let pe = p.pow(e);
        if carries(n, r, p) > 0 {
            n1 *= pe;
        }
        if u64::from(e) <= crate::newton::ord_p_factorial(r, p) {
            n3 *= pe;
        }
    }
    Decomposition {
        n0: n / n1,
        n1,
        n2: n / n3,
        n3,
    }
}

/// `∏_{p ≤ r} p^{⌊log_p r⌋}`, an upper bound for `n1` at this `r`.
pub fn n1_digit_bound(r: u64) -> u64 {
    small_primes(r)
        .into_iter()
        .map(|p| {
            let mut pk = p;
            while pk * p <= r {
                pk *= p;
            }
            pk
        })
        .product()
}

/// `p^{ord_p(n)}` when `f` is `p`-Coleman integral.
pub fn coleman_criterion(f: &HurwitzPoly, p: u64) -> Option<u64> {
    let n = f.degree()? as u64;
    if n == 0 || !is_coleman_integral(f, p) {
        return None;
    }
    Some(p.pow(ord_p_u64(n, p)))
}

fn slope_divisor_of(np: &crate::newton::NewtonPolygon) -> Option<u64> {
    let p = np.prime;
    let k = np
        .edges
        .iter()
        .map(|e| ord_p_u64(e.slope.denom(), p))
        .min()?;
    (k > 0).then(|| p.pow(k))
}

/// Largest `p^k` dividing every slope denominator of `NP_p(f)`.
pub fn slope_divisor(f: &HurwitzPoly, p: u64) -> Option<u64> {
    slope_divisor_of(&polygon_of_hurwitz(f, p).ok()?)
}

/// [`slope_divisor`] for `L_n^⟨r⟩`, without building the polynomial.
pub fn glp_slope_divisor(n: u64, r: u64, p: u64) -> Option<u64> {
    slope_divisor_of(&glp_polygon(n, r, p))
}

/// Filaseta's criterion: with `|b_0| = 1`, `k ≤ n/2`, `p > k`, `p` dividing
/// `n(n-1)…(n-k+1)` and not dividing `b_n`, there is no factor of degree `k`.
pub fn filaseta_excludes(f: &HurwitzPoly, k: u64, p: u64) -> Result<bool, CriteriaError> {
    let n = f.degree().unwrap_or(0) as u64;
    if k == 0 {
        return Err(CriteriaError::ZeroDegree);
    }
    if !is_prime(p) {
        return Err(CriteriaError::NotPrime(p));
    }
    if !f.hcoeffs()[0].abs().is_one() {
        return Err(CriteriaError::ConstantNotUnit);
    }
    if 2 * k > n {
        return Err(CriteriaError::DegreeTooLarge { k, half: n / 2 });
    }
    if p <= k {
        return Err(CriteriaError::PrimeTooSmall { p, k });
    }
    let hits = (n - k + 1..=n).any(|m| m % p == 0);
    let bn = &f.hcoeffs()[n as usize];
    Ok(hits && !(bn % BigInt::from(p)).is_zero())
}

/// `b_j = a_0^{j-1} a_j`, the Hurwitz coefficients of `a_0^{-1} f(a_0 x)`.
pub fn renormalize(f: &HurwitzPoly) -> Result<HurwitzPoly, CriteriaError> {
    let a = f.hcoeffs();
    let a0 = a
        .first()
        .filter(|c| !c.is_zero())
        .ok_or(CriteriaError::ZeroConstant)?;
    let mut out = Vec::with_capacity(a.len());
    let mut pow = BigInt::one();
    for (j, aj) in a.iter().enumerate() {
        if j == 0 {
            out.push(BigInt::one());
        } else {
            out.push(&pow * aj);
            pow *= a0;
        }
    }
    Ok(HurwitzPoly::new(out))
}

/// Eisenstein–Dumas: monic `f` with `m = ord_p(f(0))`, `gcd(m, n) = 1` and
/// `n·ord_p(c_j) ≥ m(n - j)` for all `j` is irreducible.
pub fn eisenstein_dumas(f: &IntPoly, p: u64) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 || !f.is_monic() || !is_prime(p) {
        return false;
    }
    let c = f.coeffs();
    let Some(m) = crate::newton::ord_p_bigint(&c[0], p).finite() else {
        return false;
    };
    if m == 0 || (m as u64).gcd(&(n as u64)) != 1 {
        return false;
    }
    c.iter().enumerate().skip(1).all(
        |(j, cj)| match crate::newton::ord_p_bigint(cj, p).finite() {
            None => true,
            Some(v) => v * n as i64 >= m * (n - j) as i64,
        },
    )
}

// ---------------------------------------------------------------------------
// Certificates

/// How a single factor degree `k` was ruled out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "by", rename_all = "kebab-case")]
pub enum Exclusion {
    /// No integer root among the signed divisors of the constant term.
    RationalRoots { k: usize },
    /// No monic degree-`k` factor interpolates divisors of `f` at `points`.
    Kronecker { k: usize, points: Vec<i64> },
    /// `k` is not a sum of irreducible factor degrees of `f mod ell`.
    FiniteField { k: usize, ell: u64 },
    /// Quartic only: no nonzero square root `a^2` of the cubic resolvent
    /// yields integer quadratic factors.
    QuarticResolvent { k: usize },
}

impl Exclusion {
    pub fn degree(&self) -> usize {
        match self {
            Exclusion::RationalRoots { k }
            | Exclusion::Kronecker { k, .. }
            | Exclusion::FiniteField { k, .. }
            | Exclusion::QuarticResolvent { k } => *k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", content = "witness")]
pub enum IrredMethod {
    /// `p^{ord_p(n)}` from Coleman integrality at each listed prime; the
    /// product is `n`.
    ColemanFull {
        divisors: Vec<(u64, u64)>,
    },
    /// `gcd(n, binom(n+r, r)) = 1`; `kt_ii` records `gcd(n, r!) = 1`.
    #[serde(rename = "Kt-i")]
    KtI {
        kt_ii: bool,
    },
    #[serde(rename = "LemmaBL")]
    LemmaBl {
        p: u64,
        n0: u64,
    },
    /// Slope divisors multiply to `d`; the prime `p` rules out the
    /// remaining multiples of `d` up to `n/2` (absent when `d = n`).
    DumasDivisorPlusFilaseta {
        d: u64,
        p: Option<u64>,
        divisors: Vec<(u64, u64)>,
    },
    FiniteFieldWitness {
        ell: u64,
    },
    SmallDegreeExhaustive {
        exclusions: Vec<Exclusion>,
    },
    Unresolved {},
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrredCertificate {
    pub n: u64,
    pub r: u64,
    #[serde(flatten)]
    pub method: IrredMethod,
}

impl IrredCertificate {
    pub fn is_resolved(&self) -> bool {
        !matches!(self.method, IrredMethod::Unresolved {})
    }

    pub fn method_tag(&self) -> &'static str {
        match self.method {
            IrredMethod::ColemanFull { .. } => "ColemanFull",
            IrredMethod::KtI { .. } => "Kt-i",
            IrredMethod::LemmaBl { .. } => "LemmaBL",
            IrredMethod::DumasDivisorPlusFilaseta { .. } => "DumasDivisorPlusFilaseta",
            IrredMethod::FiniteFieldWitness { .. } => "FiniteFieldWitness",
            IrredMethod::SmallDegreeExhaustive { .. } => "SmallDegreeExhaustive",
            IrredMethod::Unresolved {} => "Unresolved",
        }
    }

    /// Compact form such as `LemmaBL(7)` or `DumasDivisorPlusFilaseta(15,107)`.
    pub fn summary(&self) -> String {
        match &self.method {
            IrredMethod::ColemanFull { divisors } => {
                let d: Vec<String> = divisors.iter().map(|(_, d)| d.to_string()).collect();
                format!("ColemanFull({})", d.join("*"))
            }
            IrredMethod::KtI { kt_ii: true } => "Kt-i+ii".to_string(),
            IrredMethod::KtI { kt_ii: false } => "Kt-i".to_string(),
            IrredMethod::LemmaBl { p, .. } => format!("LemmaBL({p})"),
            IrredMethod::DumasDivisorPlusFilaseta { d, p: Some(p), .. } => {
                format!("DumasDivisorPlusFilaseta({d},{p})")
            }
            IrredMethod::DumasDivisorPlusFilaseta { d, p: None, .. } => {
                format!("DumasDivisorPlusFilaseta({d})")
            }
            IrredMethod::FiniteFieldWitness { ell } => format!("FiniteFieldWitness({ell})"),
            IrredMethod::SmallDegreeExhaustive { .. } => "SmallDegreeExhaustive".to_string(),
            IrredMethod::Unresolved {} => "Unresolved".to_string(),
        }
    }
}

/// `L_n^⟨r⟩` is irreducible when `gcd(n, binom(n+r, r)) = 1`.
pub fn theorem_kt(n: u64, r: u64) -> Option<IrredCertificate> {
    let factors = factor_u64(n);
    if factors.iter().any(|&(p, _)| carries(n, r, p) > 0) {
        return None;
    }
    Some(IrredCertificate {
        n,
        r,
        method: IrredMethod::KtI {
            kt_ii: factors.iter().all(|&(p, _)| p > r),
        },
    })
}

/// `r ≡ 0 mod ∏_{p|n} p^{ord_p(n)+1}`.
///
/// This divisibility alone does not rule out carries: `(n, r) = (6, 36)`
/// has one at `p = 2`. [`no_carry_modulus`] gives a modulus that does.
pub fn corollary_cokl(n: u64, r: u64) -> bool {
    let m: u128 = factor_u64(n)
        .into_iter()
        .map(|(p, e)| (p as u128).pow(e + 1))
        .product();
    (r as u128).is_multiple_of(m)
}

/// `∏_{p|n} p^{d_p}` with `p^{d_p} > n`; any `r` divisible by it adds to `n`
/// without carries at every `p | n`.
pub fn no_carry_modulus(n: u64) -> u128 {
    factor_u64(n)
        .into_iter()
        .map(|(p, _)| {
            let mut pk = p as u128;
            while pk <= n as u128 {
                pk *= p as u128;
            }
            pk
        })
        .product()
}

/// Exclusive lower end `max((n+r)/2, n - n0)` of the prime interval.
pub fn bl_lower(n: u64, r: u64, n0: u64) -> Ratio<u64> {
    Ratio::new(n + r, 2).max(Ratio::from_integer(n - n0))
}

/// A prime `p` with `max((n+r)/2, n - n0) < p ≤ n`.
pub fn lemma_bl(n: u64, r: u64) -> Option<IrredCertificate> {
    let n0 = decompose(n, r).n0;
    lemma_bl_with(n, r, n0)
}

fn lemma_bl_with(n: u64, r: u64, n0: u64) -> Option<IrredCertificate> {
    let w = prime_in_interval(bl_lower(n, r, n0), n)?;
    Some(IrredCertificate {
        n,
        r,
        method: IrredMethod::LemmaBl { p: w.p, n0 },
    })
}

/// `B(r) = C(r!)`, or `1` when `r ≤ 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundB {
    One,
    Analytic(AnalyticBound),
}

impl BoundB {
    /// Upper-rounded decimal rendering.
    pub fn render(&self) -> String {
        match self {
            BoundB::One => "1".to_string(),
            BoundB::Analytic(b) => b.render_upper(),
        }
    }
}

pub fn bound_b(r: u64) -> BoundB {
    if r <= 1 {
        return BoundB::One;
    }
    BoundB::Analytic(AnalyticBound::c_of_h(&factorial(r)).expect("r! ≥ 2"))
}

fn dumas_filaseta(n: u64, r: u64) -> Option<IrredCertificate> {
    let divisors: Vec<(u64, u64)> = factor_u64(n)
        .into_iter()
        .filter_map(|(p, _)| glp_slope_divisor(n, r, p).map(|d| (p, d)))
        .collect();
    let d: u64 = divisors.iter().map(|(_, d)| d).product();
    if d <= 1 {
        return None;
    }
    let p = if d == n {
        None
    } else {
        Some(prime_in_interval(bl_lower(n, r, d), n)?.p)
    };
    Some(IrredCertificate {
        n,
        r,
        method: IrredMethod::DumasDivisorPlusFilaseta { d, p, divisors },
    })
}

/// Largest degree for which the exhaustive factor search is attempted.
pub const SMALL_DEGREE_MAX: u64 = 8;

/// Cheapest-first: Kt-i, LemmaBL, slope divisors plus Filaseta,
/// finite-field witness, exhaustive search (`n ≤ 8`), else Unresolved.
pub fn decide_irreducible(n: u64, r: u64) -> IrredCertificate {
    decide_irreducible_with(n, r, DEFAULT_ELL_MAX)
}

pub fn decide_irreducible_with(n: u64, r: u64, ell_max: u64) -> IrredCertificate {
    assert!(n >= 1);
    if let Some(c) = theorem_kt(n, r) {
        return c;
    }
    if let Some(c) = lemma_bl(n, r).or_else(|| dumas_filaseta(n, r)) {
        return c;
    }
    let f = glp_monic(n as usize, r as i64);
    // a square discriminant rules out irreducibility modulo every prime
    if !disc_is_square(n, r) {
        if let Some(ell) = find_ff_witness(&f, ell_max) {
            return IrredCertificate {
                n,
                r,
                method: IrredMethod::FiniteFieldWitness { ell },
            };
        }
    }
    if n <= SMALL_DEGREE_MAX {
        if let SmallDegreeOutcome::Irreducible(exclusions) = small_degree_search(&f) {
            return IrredCertificate {
                n,
                r,
                method: IrredMethod::SmallDegreeExhaustive { exclusions },
            };
        }
    }
    IrredCertificate {
        n,
        r,
        method: IrredMethod::Unresolved {},
    }
}

/// Coleman divisors at every prime dividing the degree; `Some` only when
/// they multiply to the degree, which proves irreducibility.
pub fn coleman_full(f: &HurwitzPoly) -> Option<Vec<(u64, u64)>> {
    let n = f.degree()? as u64;
    if n == 0 {
        return None;
    }
    let divisors: Vec<(u64, u64)> = factor_u64(n)
        .into_iter()
        .map(|(p, _)| coleman_criterion(f, p).map(|d| (p, d)))
        .collect::<Option<_>>()?;
    (divisors.iter().map(|(_, d)| d).product::<u64>() == n).then_some(divisors)
}

/// Re-checks a certificate from its witnesses.
pub fn verify_certificate(cert: &IrredCertificate) -> bool {
    let (n, r) = (cert.n, cert.r);
    if n == 0 {
        return false;
    }
    match &cert.method {
        IrredMethod::ColemanFull { divisors } => {
            let f = glp_hurwitz(n as usize, r);
            divisors.iter().map(|(_, d)| d).product::<u64>() == n
                && divisors
                    .iter()
                    .all(|&(p, d)| coleman_criterion(&f, p) == Some(d))
        }
        IrredMethod::KtI { kt_ii } => {
            let factors = factor_u64(n);
            factors.iter().all(|&(p, _)| carries(n, r, p) == 0)
                && *kt_ii == factors.iter().all(|&(p, _)| p > r)
        }
        IrredMethod::LemmaBl { p, n0 } => {
            is_prime(*p)
                && decompose(n, r).n0 == *n0
                && Ratio::from_integer(*p) > bl_lower(n, r, *n0)
                && *p <= n
        }
        IrredMethod::DumasDivisorPlusFilaseta { d, p, divisors } => {
            let divisors_ok = divisors.iter().map(|(_, d)| d).product::<u64>() == *d
                && divisors.iter().all(|&(q, dq)| {
                    n % dq == 0 && glp_slope_divisor(n, r, q).is_some_and(|s| s % dq == 0)
                });
            let rest_ok = match p {
                None => *d == n,
                Some(p) => is_prime(*p) && Ratio::from_integer(*p) > bl_lower(n, r, *d) && *p <= n,
            };
            divisors_ok && rest_ok
        }
        IrredMethod::FiniteFieldWitness { ell } => {
            if !is_prime(*ell) {
                return false;
            }
            let f = FFPoly::from_int(&glp_monic(n as usize, r as i64), *ell);
            f.degree() == Some(n as usize) && ff_irreducible(&f).unwrap_or(false)
        }
        IrredMethod::SmallDegreeExhaustive { exclusions } => {
            let f = glp_monic(n as usize, r as i64);
            let covered: BTreeSet<usize> = exclusions.iter().map(Exclusion::degree).collect();
            covered == (1..=(n as usize) / 2).collect()
                && exclusions.iter().all(|e| verify_exclusion(&f, e))
        }
        IrredMethod::Unresolved {} => false,
    }
}

// ---------------------------------------------------------------------------
// Exhaustive search for low-degree factors

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallDegreeOutcome {
    Irreducible(Vec<Exclusion>),
    Factor(IntPoly),
    /// The search for this factor degree exceeded its budget.
    GaveUp(usize),
}

/// Interpolation candidates tried per factor degree before giving up.
const KRONECKER_BUDGET: u128 = 20_000_000;
const KRONECKER_RADIUS: i64 = 40;
const FF_EXCLUSION_LIMIT: u64 = 2_000;

/// Rules out every factor degree `1 ≤ k ≤ n/2` of a monic integer
/// polynomial: rational roots for `k = 1`, Kronecker interpolation for
/// `k = 2`, factor-degree patterns modulo small primes (then Kronecker)
/// for larger `k`.
pub fn small_degree_search(f: &IntPoly) -> SmallDegreeOutcome {
    let n = f.degree().unwrap_or(0);
    assert!(
        f.is_monic(),
        "small_degree_search expects a monic polynomial"
    );
    let mut exclusions = Vec::new();
    for k in 1..=n / 2 {
        let step = match k {
            1 => rational_root_step(f),
            2 => kronecker_step(f, 2),
            _ => match ff_exclusion(f, k, FF_EXCLUSION_LIMIT) {
                Some(ell) => Ok(Exclusion::FiniteField { k, ell }),
                None => kronecker_step(f, k),
            },
        };
        match step {
            Ok(e) => exclusions.push(e),
            Err(outcome) => return outcome,
        }
    }
    SmallDegreeOutcome::Irreducible(exclusions)
}

fn rational_root_step(f: &IntPoly) -> Result<Exclusion, SmallDegreeOutcome> {
    match integer_root(f) {
        Ok(None) => Ok(Exclusion::RationalRoots { k: 1 }),
        Ok(Some(root)) => Err(SmallDegreeOutcome::Factor(IntPoly::new(vec![
            -root,
            BigInt::one(),
        ]))),
        Err(_) => Err(SmallDegreeOutcome::GaveUp(1)),
    }
}

/// An integer root of a monic polynomial, searched among signed divisors
/// of the constant term. `Err` when the constant term cannot be factored.
pub fn integer_root(f: &IntPoly) -> Result<Option<BigInt>, CriteriaError> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    let factors = factor_bigint(&c0).ok_or(CriteriaError::Unfactored)?;
    for d in divisors_from_factors(&factors) {
        let d = BigInt::from(d);
        for cand in [d.clone(), -d] {
            if f.eval(&cand).is_zero() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

fn subset_sums(degrees: &[usize]) -> Vec<bool> {
    let total: usize = degrees.iter().sum();
    let mut reach = vec![false; total + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=total).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// A prime `ℓ ≤ limit` whose factor-degree pattern of `f` has no subset
/// summing to `k`.
pub fn ff_exclusion(f: &IntPoly, k: usize, limit: u64) -> Option<u64> {
    let n = f.degree()?;
    small_primes(limit).into_iter().find(|&ell| {
        let g = FFPoly::from_int(f, ell);
        if g.degree() != Some(n) {
            return false;
        }
        match factor_degree_pattern(&g) {
            Ok(Some(pattern)) => !subset_sums(&pattern)[k],
            _ => false,
        }
    })
}

fn kronecker_step(f: &IntPoly, k: usize) -> Result<Exclusion, SmallDegreeOutcome> {
    let Some(points) = kronecker_points(f, k) else {
        return Err(SmallDegreeOutcome::GaveUp(k));
    };
    match kronecker_search(f, k, &points) {
        KroneckerResult::NoFactor => Ok(Exclusion::Kronecker { k, points }),
        KroneckerResult::Factor(g) => Err(SmallDegreeOutcome::Factor(g)),
        KroneckerResult::TooLarge => Err(SmallDegreeOutcome::GaveUp(k)),
    }
}

/// The `k` integers in `[-40, 40]` whose values have the fewest divisors.
fn kronecker_points(f: &IntPoly, k: usize) -> Option<Vec<i64>> {
    let mut cands: Vec<(u128, i64)> = Vec::new();
    for x in 0..=2 * KRONECKER_RADIUS {
        // 0, 1, -1, 2, -2, ...
        let x = if x % 2 == 1 { (x + 1) / 2 } else { -(x / 2) };
        let v = f.eval(&BigInt::from(x));
        if v.is_zero() {
            continue;
        }
        if let Some(factors) = factor_bigint(&v) {
            let tau: u128 = factors.iter().map(|&(_, e)| e as u128 + 1).product();
            cands.push((tau, x));
        }
    }
    if cands.len() < k {
        return None;
    }
    cands.sort_by_key(|&(tau, x)| (tau, x.unsigned_abs(), x));
    Some(cands[..k].iter().map(|&(_, x)| x).collect())
}

enum KroneckerResult {
    NoFactor,
    Factor(IntPoly),
    TooLarge,
}

fn kronecker_search(f: &IntPoly, k: usize, points: &[i64]) -> KroneckerResult {
    let mut values: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    let mut combos: u128 = 1;
    for &x in points {
        let xb = BigInt::from(x);
        let v = f.eval(&xb);
        let Some(factors) = factor_bigint(&v) else {
            return KroneckerResult::TooLarge;
        };
        // y = g(x) - x^k for each signed divisor g(x) of f(x)
        let xk = xb.pow(k as u32);
        let ys: Vec<BigInt> = divisors_from_factors(&factors)
            .into_iter()
            .flat_map(|d| {
                let d = BigInt::from(d);
                [&d - &xk, -d - &xk]
            })
            .collect();
        combos = combos.saturating_mul(ys.len() as u128);
        values.push(ys);
    }
    if combos > KRONECKER_BUDGET {
        return KroneckerResult::TooLarge;
    }
    let xs: Vec<BigInt> = points.iter().map(|&x| BigInt::from(x)).collect();
    let mut newton = Vec::with_capacity(k);
    match kronecker_recurse(f, &xs, &values, &mut newton, &[]) {
        Some(g) => KroneckerResult::Factor(g),
        None => KroneckerResult::NoFactor,
    }
}

/// Depth-first over divisor choices; `diag[j]` holds the divided difference
/// `h[x_j, …, x_i]` of the current prefix, which must stay integral.
fn kronecker_recurse(
    f: &IntPoly,
    xs: &[BigInt],
    values: &[Vec<BigInt>],
    newton: &mut Vec<BigInt>,
    diag: &[BigInt],
) -> Option<IntPoly> {
    let i = diag.len();
    if i == xs.len() {
        let g = newton_to_monic(xs, newton);
        let (_, rem) = f.div_rem_monic(&g);
        return rem.is_zero().then_some(g);
    }
    'choice: for y in &values[i] {
        let mut next = vec![BigInt::zero(); i + 1];
        next[i] = y.clone();
        for j in (0..i).rev() {
            let num = &next[j + 1] - &diag[j];
            let den = &xs[i] - &xs[j];
            let (q, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                continue 'choice;
            }
            next[j] = q;
        }
        newton.push(next[0].clone());
        if let Some(g) = kronecker_recurse(f, xs, values, newton, &next) {
            return Some(g);
        }
        newton.pop();
    }
    None
}

/// `x^k + Σ_j a_j ∏_{m<j} (x - x_m)`.
fn newton_to_monic(xs: &[BigInt], a: &[BigInt]) -> IntPoly {
    let k = xs.len();
    let mut h = IntPoly::zero();
    let mut basis = IntPoly::from_i64(&[1]);
    for j in 0..k {
        h = &h + &(&basis * &IntPoly::new(vec![a[j].clone()]));
        basis = &basis * &IntPoly::new(vec![-xs[j].clone(), BigInt::one()]);
    }
    &h + &IntPoly::monomial(k)
}

fn verify_exclusion(f: &IntPoly, e: &Exclusion) -> bool {
    match e {
        Exclusion::RationalRoots { k } => *k == 1 && integer_root(f) == Ok(None),
        Exclusion::Kronecker { k, points } => {
            let distinct: BTreeSet<i64> = points.iter().copied().collect();
            points.len() == *k
                && distinct.len() == *k
                && points.iter().all(|&x| !f.eval(&BigInt::from(x)).is_zero())
                && matches!(kronecker_search(f, *k, points), KroneckerResult::NoFactor)
        }
        Exclusion::QuarticResolvent { k } => {
            *k == 2
                && depress_quartic(f).is_some_and(|(p, q, c)| {
                    analyze_depressed_quartic(&p, &q, &c)
                        .quadratic_split
                        .is_none()
                })
        }
        Exclusion::FiniteField { k, ell } => {
            if !is_prime(*ell) {
                return false;
            }
            let g = FFPoly::from_int(f, *ell);
            g.degree() == f.degree()
                && matches!(factor_degree_pattern(&g), Ok(Some(p)) if !subset_sums(&p)[*k])
        }
    }
}

/// Builds a Hurwitz polynomial from monic integer coefficients (`a_j = j!·c_j`).
pub fn hurwitz_of(f: &IntPoly) -> HurwitzPoly {
    HurwitzPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| c * factorial(j as u64))
            .collect(),
    )
}

/// Degree `n` with all factor degrees ruled out by `d` dividing them and by
/// Filaseta at `p` for every `k = j·d ≤ n/2` on the renormalized `f`.
pub fn filaseta_all_multiples(f: &HurwitzPoly, d: u64, p: u64) -> Result<bool, CriteriaError> {
    let n = f.degree().unwrap_or(0) as u64;
    let g = renormalize(f)?;
    let mut k = d;
    while 2 * k <= n {
        if !filaseta_excludes(&g, k, p)? {
            return Ok(false);
        }
        k += d;
    }
    Ok(true)
}
