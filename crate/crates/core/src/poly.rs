//! Dense exact polynomials and the generalized Laguerre family.
//!
//! Three representations are used throughout the crate:
//!
//! * [`IntPoly`]: integer coefficients, index = exponent. The monic
//!   `𝓛_n^⟨r⟩ = n!·L_n^⟨r⟩` lives here, as does everything that is reduced
//!   modulo a prime or fed to a resultant.
//! * [`RatPoly`]: rational coefficients in lowest terms, used for
//!   `L_n^(α)` with arbitrary rational `α`.
//! * [`HurwitzPoly`]: the coefficients `a_j` of `f = Σ a_j x^j / j!`.
//!   Coleman integrality and the Filaseta criterion are phrased in terms
//!   of these.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("modification vector has length {got}, expected {expected}")]
    ModificationLength { expected: usize, got: usize },
    #[error("modification must have b_0 = ±1, got {0}")]
    ModificationConstant(BigInt),
    #[error("modification must have b_n = 1, got {0}")]
    ModificationLeading(BigInt),
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Generalized binomial `t(t-1)…(t-k+1)/k!` for rational `t`.
pub fn binomial_rational(t: &BigRational, k: u64) -> BigRational {
    let mut num = BigRational::one();
    for i in 0..k {
        num *= t - BigRational::from_integer(BigInt::from(i));
    }
    num / BigRational::from_integer(factorial(k))
}

/// Exact `binom(n, k)` for non-negative arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Integer polynomial, dense, trailing zeros trimmed. The zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * j)
                .collect(),
        )
    }

    /// `p(x + shift)` by repeated synthetic division.
    pub fn shift(&self, shift: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * shift;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `c^n · p(x / c)` for a monic `p` of degree `n`: scales roots by `c`
    /// and keeps the polynomial monic.
    pub fn scale_roots(&self, c: &BigInt) -> Self {
        let n = self.coeffs.len();
        let mut pow = BigInt::one();
        let mut out = vec![BigInt::zero(); n];
        for j in (0..n).rev() {
            out[j] = &self.coeffs[j] * &pow;
            pow *= c;
        }
        Self::new(out)
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.is_monic(), "divisor must be monic");
        let Some(nd) = self.degree() else {
            return (IntPoly::zero(), IntPoly::zero());
        };
        if nd < dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = rem[i + dd].clone();
            if q.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[i + k] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let mb = BigInt::from(m);
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&mb);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

fn write_terms<T: fmt::Display + Signed>(f: &mut fmt::Formatter<'_>, coeffs: &[T]) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (j, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let unit = abs.is_one();
        match (j, unit) {
            (0, _) => write!(f, "{abs}")?,
            (1, true) => write!(f, "x")?,
            (1, false) => write!(f, "{abs}*x")?,
            (_, true) => write!(f, "x^{j}")?,
            (_, false) => write!(f, "{abs}*x^{j}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

/// Rational polynomial; coefficients are always reduced with positive
/// denominators (maintained by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigRational::from_integer(BigInt::from(j)))
                .collect(),
        )
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = vec![BigRational::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Multiply through by the lcm of the denominators. The result is an
    /// integer polynomial with the same roots.
    pub fn clear_denominators(&self) -> IntPoly {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lr = BigRational::from_integer(l);
        self.scale(&lr).to_int().expect("denominators cleared")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

/// `f(x) = Σ a_j x^j / j!` with integer `a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HurwitzPoly {
    hcoeffs: Vec<BigInt>,
}

impl HurwitzPoly {
    pub fn new(mut hcoeffs: Vec<BigInt>) -> Self {
        while hcoeffs.last().is_some_and(Zero::is_zero) {
            hcoeffs.pop();
        }
        Self { hcoeffs }
    }

    pub fn from_i64(a: &[i64]) -> Self {
        Self::new(a.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The truncated exponential `E_n = Σ_{j≤n} x^j/j!`.
    pub fn truncated_exp(n: usize) -> Self {
        Self::new(vec![BigInt::one(); n + 1])
    }

    pub fn degree(&self) -> Option<usize> {
        self.hcoeffs.len().checked_sub(1)
    }

    pub fn hcoeffs(&self) -> &[BigInt] {
        &self.hcoeffs
    }

    pub fn to_rat(&self) -> RatPoly {
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(self.hcoeffs.len());
        for (j, a) in self.hcoeffs.iter().enumerate() {
            if j > 0 {
                fact *= j;
            }
            out.push(BigRational::new(a.clone(), fact.clone()));
        }
        RatPoly::new(out)
    }

    /// Inverse of [`HurwitzPoly::to_rat`]; `None` if some `j!·c_j` is not
    /// an integer.
    pub fn from_rat(p: &RatPoly) -> Option<Self> {
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(p.coeffs().len());
        for (j, c) in p.coeffs().iter().enumerate() {
            if j > 0 {
                fact *= j;
            }
            let a = c * BigRational::from_integer(fact.clone());
            if !a.is_integer() {
                return None;
            }
            out.push(a.to_integer());
        }
        Some(Self::new(out))
    }

    /// `n!·f`, an integer polynomial.
    pub fn to_int_scaled(&self) -> IntPoly {
        let Some(n) = self.degree() else {
            return IntPoly::zero();
        };
        // n!/j! built from the top down
        let mut ratio = BigInt::one();
        let mut out = vec![BigInt::zero(); n + 1];
        for j in (0..=n).rev() {
            out[j] = &self.hcoeffs[j] * &ratio;
            ratio *= j.max(1);
        }
        IntPoly::new(out)
    }
}

/// `𝓛_n^⟨r⟩(x) = Σ_j binom(n, j)·(r+1)(r+2)…(r+n-j)·x^j`.
///
/// Negative `r` is accepted; then `𝓛_n^⟨r⟩ = n!·L_n^(-1-n-r)` still holds.
pub fn glp_monic(n: usize, r: i64) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for j in (0..n).rev() {
        // c_j = c_{j+1}·(j+1)·(r+n-j)/(n-j)
        let t = &coeffs[j + 1] * (j + 1) * (r + (n - j) as i64);
        coeffs[j] = t / (n - j);
    }
    IntPoly::new(coeffs)
}

/// Hurwitz coefficients `a_j = binom(n-j+r, r)` of `L_n^⟨r⟩`.
pub fn glp_hurwitz(n: usize, r: u64) -> HurwitzPoly {
    let mut a = vec![BigInt::zero(); n + 1];
    a[n] = BigInt::one();
    for j in (0..n).rev() {
        let k = (n - j) as u64;
        a[j] = &a[j + 1] * (k + r) / k;
    }
    HurwitzPoly::new(a)
}

/// `L_n^(α)(x) = (-1)^n Σ_j binom(n+α, n-j)·(-x)^j/j!` with the sign
/// convention that makes it have positive leading coefficient `1/n!`.
pub fn glp_alpha(n: usize, alpha: &BigRational) -> RatPoly {
    let top = alpha + BigRational::from_integer(BigInt::from(n));
    let mut fact = BigInt::one();
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        if j > 0 {
            fact *= j;
        }
        let mut c =
            binomial_rational(&top, (n - j) as u64) / BigRational::from_integer(fact.clone());
        if (n + j) % 2 == 1 {
            c = -c;
        }
        coeffs.push(c);
    }
    RatPoly::new(coeffs)
}

/// `𝓛_n^(α) = n!·L_n^(α)`, monic.
pub fn glp_alpha_monic(n: usize, alpha: &BigRational) -> RatPoly {
    glp_alpha(n, alpha).scale(&BigRational::from_integer(factorial(n as u64)))
}

/// Checks `𝓛_n^(-a) = x^a·𝓛_m^(a)` with `m = n - a` and `𝓛_m^(a)(0) ≠ 0`.
pub fn factor_identity_check(n: usize, a: usize) -> bool {
    if a == 0 || a > n {
        return false;
    }
    let m = n - a;
    let lhs = glp_alpha_monic(n, &BigRational::from_integer(-BigInt::from(a)));
    let inner = glp_alpha_monic(m, &BigRational::from_integer(BigInt::from(a)));
    let rhs = inner.shift_up(a);
    lhs == rhs && !inner.coeff(0).is_zero()
}

/// Termwise derivative in Hurwitz form: `a'_j = a_{j+1}`.
pub fn derivative(p: &HurwitzPoly) -> HurwitzPoly {
    HurwitzPoly::new(p.hcoeffs.iter().skip(1).cloned().collect())
}

/// Closed-form discriminant of `𝓛_n^⟨r⟩`:
/// `(-1)^{n(n-1)/2} ∏_{j=1}^{n-1} (j+1)^{j+1} (r+j)^{n-j}`.
pub fn discriminant_formula(n: usize, r: i64) -> BigInt {
    assert!(n >= 1, "discriminant needs degree ≥ 1");
    let mut acc = BigInt::one();
    for j in 1..n {
        acc *= num_traits::pow(BigInt::from(j + 1), j + 1);
        acc *= num_traits::pow(BigInt::from(r + j as i64), n - j);
    }
    if (n * (n - 1) / 2) % 2 == 1 {
        acc = -acc;
    }
    acc
}

/// `∏_{j=2}^n j^j (α+j)^{j-1}`, the discriminant of `𝓛_n^(α)`.
pub fn discriminant_alpha(n: usize, alpha: &BigRational) -> BigRational {
    assert!(n >= 1, "discriminant needs degree ≥ 1");
    let mut acc = BigRational::one();
    for j in 2..=n {
        let jj = BigRational::from_integer(BigInt::from(j));
        acc *= num_traits::pow(jj.clone(), j);
        acc *= num_traits::pow(alpha + jj, j - 1);
    }
    acc
}

/// Determinant by Bareiss fraction-free elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant via the Sylvester matrix.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let (Some(m), Some(n)) = (p.degree(), q.degree()) else {
        return BigInt::zero();
    };
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// `disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p)`.
pub fn discriminant_resultant(p: &IntPoly) -> BigInt {
    let n = p.degree().expect("discriminant of zero polynomial");
    assert!(n >= 1, "discriminant needs degree ≥ 1");
    let res = resultant(p, &p.derivative());
    let d = res / p.leading().expect("nonzero");
    if (n * (n - 1) / 2) % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Coefficient-wise product `a_j b_j`, requiring `b_0 = ±1` and `b_n = 1`.
pub fn admissible_modification(p: &RatPoly, b: &[BigInt]) -> Result<RatPoly, PolyError> {
    let expected = p.coeffs().len();
    if b.len() != expected || expected == 0 {
        return Err(PolyError::ModificationLength {
            expected,
            got: b.len(),
        });
    }
    if !b[0].abs().is_one() {
        return Err(PolyError::ModificationConstant(b[0].clone()));
    }
    if !b[expected - 1].is_one() {
        return Err(PolyError::ModificationLeading(b[expected - 1].clone()));
    }
    Ok(RatPoly::new(
        p.coeffs()
            .iter()
            .zip(b)
            .map(|(a, bj)| a * BigRational::from_integer(bj.clone()))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    /// Bessel polynomial `z_n = Σ (2n-j)!/(j!(n-j)!) x^j`, written out
    /// independently of the GLP construction.
    fn bessel(n: u64) -> IntPoly {
        IntPoly::new(
            (0..=n)
                .map(|j| factorial(2 * n - j) / (factorial(j) * factorial(n - j)))
                .collect(),
        )
    }

    #[test]
    fn monic_small_cases() {
        assert_eq!(glp_monic(1, 5), ip(&[6, 1]));
        assert_eq!(glp_monic(2, 0), ip(&[2, 2, 1]));
        assert_eq!(glp_monic(2, 2), ip(&[12, 6, 1]));
        assert_eq!(glp_monic(4, 5), ip(&[3024, 1344, 252, 24, 1]));
    }

    #[test]
    fn bessel_is_r_equal_n() {
        for n in 0..15 {
            assert_eq!(glp_monic(n, n as i64), bessel(n as u64), "n = {n}");
        }
    }

    #[test]
    fn hurwitz_constant_terms() {
        assert_eq!(glp_hurwitz(5, 0), HurwitzPoly::truncated_exp(5));
        assert_eq!(glp_hurwitz(4, 2).hcoeffs()[0], BigInt::from(15));
        assert_eq!(glp_hurwitz(6, 3).hcoeffs()[0], BigInt::from(84));
        assert!(glp_hurwitz(9, 4).hcoeffs()[9].is_one());
    }

    #[test]
    fn monic_is_factorial_times_hurwitz() {
        for n in 0..=50usize {
            for r in 0..=20u64 {
                let h = glp_hurwitz(n, r);
                let scaled = h
                    .to_rat()
                    .scale(&BigRational::from_integer(factorial(n as u64)));
                assert_eq!(scaled.to_int().unwrap(), glp_monic(n, r as i64));
                assert_eq!(h.to_int_scaled(), glp_monic(n, r as i64));
                assert_eq!(HurwitzPoly::from_rat(&h.to_rat()).unwrap(), h);
            }
        }
    }

    #[test]
    fn derivative_coherence() {
        assert_eq!(derivative(&glp_hurwitz(5, 3)), glp_hurwitz(4, 3));
        assert_eq!(
            derivative(&HurwitzPoly::truncated_exp(1)),
            HurwitzPoly::truncated_exp(0)
        );
        assert_eq!(derivative(&glp_hurwitz(0, 4)), HurwitzPoly::default());
        for n in 1..=50usize {
            for r in 0..=20u64 {
                let d = derivative(&glp_hurwitz(n, r));
                assert_eq!(d, glp_hurwitz(n - 1, r));
                // and the Hurwitz shift really is d/dx
                assert_eq!(d.to_rat(), glp_hurwitz(n, r).to_rat().derivative());
            }
        }
    }

    #[test]
    fn alpha_reparametrization() {
        // α = -1-n-r recovers L_n^⟨r⟩
        for n in 0..12usize {
            for r in 0..8u64 {
                let alpha = rat(-1 - n as i64 - r as i64, 1);
                assert_eq!(glp_alpha(n, &alpha), glp_hurwitz(n, r).to_rat());
            }
        }
        let l4 = glp_alpha_monic(4, &rat(5, 1)).to_int().unwrap();
        assert_eq!(l4, ip(&[3024, -2016, 432, -36, 1]));
        assert!(l4.eval(&6.into()).is_zero());
        let l4b = glp_alpha_monic(4, &rat(23, 1)).to_int().unwrap();
        assert!(l4b.eval(&30.into()).is_zero());
        // negative r in the monic form gives the same polynomials
        assert_eq!(glp_monic(4, -10), l4);
        assert_eq!(glp_monic(4, -28), l4b);
    }

    #[test]
    fn difference_equation() {
        for alpha in [rat(-7, 1), rat(-1, 2), rat(0, 1), rat(3, 1)] {
            let one = rat(1, 1);
            for n in 1..=20 {
                let lhs = &glp_alpha(n, &(&alpha - &one)) - &glp_alpha(n, &alpha);
                assert_eq!(lhs, glp_alpha(n - 1, &alpha), "n={n} α={alpha}");
            }
        }
    }

    #[test]
    fn differential_equation() {
        // x y'' + (α + 1 - x) y' + n y = 0
        for alpha in [rat(-5, 1), rat(2, 3), rat(4, 1)] {
            for n in 0..=12 {
                let y = glp_alpha(n, &alpha);
                let y1 = y.derivative();
                let y2 = y1.derivative();
                let x = RatPoly::new(vec![rat(0, 1), rat(1, 1)]);
                let a1 = RatPoly::new(vec![&alpha + rat(1, 1), rat(-1, 1)]);
                let n_y = y.scale(&rat(n as i64, 1));
                let total = &(&(&x * &y2) + &(&a1 * &y1)) + &n_y;
                assert_eq!(total, RatPoly::zero());
            }
        }
    }

    #[test]
    fn factor_identity() {
        assert!(factor_identity_check(3, 3));
        assert!(factor_identity_check(5, 2));
        assert!(factor_identity_check(30, 17));
        for n in 1..=30 {
            for a in 1..=n {
                assert!(factor_identity_check(n, a), "n={n} a={a}");
            }
        }
        assert_eq!(
            glp_alpha_monic(3, &rat(-3, 1)).to_int().unwrap(),
            IntPoly::monomial(3)
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant_formula(2, 0), BigInt::from(-4));
        for r in 0..30 {
            assert_eq!(discriminant_formula(2, r), BigInt::from(-4 * (r + 1)));
        }
        assert!(discriminant_alpha(2, &rat(-2, 1)).is_zero());
        assert_eq!(discriminant_alpha(3, &rat(0, 1)), rat(1944, 1));
        assert_eq!(discriminant_resultant(&ip(&[2, 2, 1])), BigInt::from(-4));
        assert_eq!(
            discriminant_resultant(&ip(&[2, 3, 0, 1])),
            BigInt::from(-216)
        );
        assert_eq!(
            discriminant_resultant(&glp_monic(6, 3)),
            discriminant_formula(6, 3)
        );
        let d45 = discriminant_formula(4, 5);
        assert!(d45.is_positive());
        assert_eq!(d45.sqrt().pow(2), d45);
    }

    #[test]
    fn discriminant_alpha_matches_formula() {
        for n in 1..=10usize {
            for r in 0..=10i64 {
                let alpha = rat(-1 - n as i64 - r, 1);
                let d = discriminant_alpha(n, &alpha);
                assert_eq!(d, BigRational::from_integer(discriminant_formula(n, r)));
            }
        }
    }

    #[test]
    fn discriminant_of_rational_alpha_against_resultant() {
        let alpha = rat(7, 3);
        for n in 2..=6 {
            let p = glp_alpha_monic(n, &alpha);
            let ints = p.clear_denominators();
            let lc = ints.leading().unwrap().clone();
            // disc scales by lc^{2n-2} when clearing a denominator
            let d = BigRational::new(
                discriminant_resultant(&ints),
                num_traits::pow(lc, 2 * n - 2),
            );
            assert_eq!(d, discriminant_alpha(n, &alpha));
        }
    }

    #[test]
    fn modification_counterexample_family() {
        for m in 1..=10i64 {
            let r = 4 * m * m - 1;
            let p = glp_monic(2, r).to_rat();
            let b: Vec<BigInt> = vec![(-1).into(), m.into(), 1.into()];
            let got = admissible_modification(&p, &b).unwrap().to_int().unwrap();
            let expect = &ip(&[-2 * m, 1]) * &ip(&[2 * m + 8 * m * m * m, 1]);
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn modification_rejections_and_identity() {
        let p = glp_monic(3, 2).to_rat();
        let ones = vec![BigInt::one(); 4];
        assert_eq!(admissible_modification(&p, &ones).unwrap(), p);
        let zeros: Vec<BigInt> = vec![1.into(), 0.into(), 0.into(), 1.into()];
        let z = admissible_modification(&p, &zeros).unwrap();
        assert_eq!(z.coeffs()[1], rat(0, 1));
        assert_eq!(z.coeffs()[0], p.coeffs()[0]);
        let bad0: Vec<BigInt> = vec![2.into(), 1.into(), 1.into(), 1.into()];
        assert!(matches!(
            admissible_modification(&p, &bad0),
            Err(PolyError::ModificationConstant(_))
        ));
        let badn: Vec<BigInt> = vec![1.into(), 1.into(), 1.into(), (-1).into()];
        assert!(matches!(
            admissible_modification(&p, &badn),
            Err(PolyError::ModificationLeading(_))
        ));
        assert!(matches!(
            admissible_modification(&p, &ones[..3]),
            Err(PolyError::ModificationLength { .. })
        ));
    }

    #[test]
    fn shift_and_division() {
        let p = ip(&[3, 0, 1]);
        assert_eq!(p.shift(&BigInt::from(1)), ip(&[4, 2, 1]));
        let prod = &ip(&[1, 1]) * &ip(&[2, 0, 1]);
        let (q, r) = prod.div_rem_monic(&ip(&[1, 1]));
        assert_eq!(q, ip(&[2, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(format!("{}", ip(&[-2, 0, 1])), "x^2 - 2");
        assert_eq!(format!("{}", ip(&[0, -1, 3])), "3*x^2 - x");
    }
}
