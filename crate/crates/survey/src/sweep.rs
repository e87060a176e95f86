//! Galois lower bounds across the scanned box.

use glp_core::arith::PrimeTable;
use glp_core::galois::{theorem_gt, GaloisCertificate, GaloisMethod};
use serde::Serialize;

/// Degrees at and above this are covered by the prime-interval argument.
pub const LARGE_DEGREE: u64 = 48;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeDegreeCheck {
    pub n_min: u64,
    pub n_max: u64,
    pub pairs: u64,
    /// Pairs with `n < max(48 - r, 8 + 5r/3)`.
    pub hypothesis_failures: Vec<(u64, u64)>,
    /// Pairs with no prime in `((n+r)/2, n-2)`.
    pub missing_prime: Vec<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisSweep {
    pub r_max: u64,
    pub certificates: Vec<GaloisCertificate>,
    pub contains_an: usize,
    /// Pairs left to an outside Galois group computation.
    pub external: Vec<(u64, u64)>,
    pub large: LargeDegreeCheck,
}

impl GaloisSweep {
    pub fn ok(&self) -> bool {
        self.contains_an + self.external.len() == self.certificates.len()
            && self.large.hypothesis_failures.is_empty()
            && self.large.missing_prime.is_empty()
    }
}

/// Certificates for `4 ≤ n < 48`, `0 ≤ r ≤ r_max`, and the hypothesis
/// check for `48 ≤ n ≤ n_max`.
pub fn galois_sweep(r_max: u64, n_max: u64) -> GaloisSweep {
    let mut certificates = Vec::new();
    for r in 0..=r_max {
        for n in 4..LARGE_DEGREE {
            certificates.push(theorem_gt(n, r));
        }
    }
    let external = certificates
        .iter()
        .filter(|c| matches!(c.method, GaloisMethod::ExternalOracleNeeded {}))
        .map(|c| (c.r, c.n))
        .collect();
    let contains_an = certificates.iter().filter(|c| c.contains_an()).count();

    let primes = PrimeTable::new(n_max + 1);
    let mut large = LargeDegreeCheck {
        n_min: LARGE_DEGREE,
        n_max,
        pairs: 0,
        hypothesis_failures: Vec::new(),
        missing_prime: Vec::new(),
    };
    for r in 0..=r_max {
        for n in LARGE_DEGREE..=n_max {
            large.pairs += 1;
            // n ≥ 48 - r and 3n ≥ 24 + 5r
            if n + r < 48 || 3 * n < 24 + 5 * r {
                large.hypothesis_failures.push((r, n));
            }
            let p = primes.next_prime_after((n + r) / 2);
            if p + 2 >= n {
                large.missing_prime.push((r, n));
            }
        }
    }
    GaloisSweep {
        r_max,
        certificates,
        contains_an,
        external,
        large,
    }
}
