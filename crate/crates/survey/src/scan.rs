//! The box scan: cheap criteria for every pair, the full pipeline for the
//! pairs they miss.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use glp_core::arith::{factor_u64, PrimeTable};
use glp_core::criteria::{
    bl_lower, decide_irreducible, decompose_with, verify_certificate, IrredCertificate, IrredMethod,
};
use glp_core::galois::{direct_prime, theorem_gt, GaloisCertificate};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::tables::table1_pairs;

/// Degrees below this get a full Galois certificate in every record.
const GALOIS_DIRECT_BELOW: u64 = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanBox {
    pub n_min: u64,
    pub n_max: u64,
    pub r_min: u64,
    pub r_max: u64,
}

impl ScanBox {
    pub fn new(n_min: u64, n_max: u64, r_min: u64, r_max: u64) -> Self {
        Self {
            n_min,
            n_max,
            r_min,
            r_max,
        }
    }

    pub fn pairs(&self) -> u64 {
        if self.n_min > self.n_max || self.r_min > self.r_max {
            return 0;
        }
        (self.n_max - self.n_min + 1) * (self.r_max - self.r_min + 1)
    }

    fn contains(&self, r: u64, n: u64) -> bool {
        (self.n_min..=self.n_max).contains(&n) && (self.r_min..=self.r_max).contains(&r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub r: u64,
    pub n: u64,
    pub n0: u64,
    pub n1: u64,
    pub method: &'static str,
    pub witness: String,
    pub galois_method: &'static str,
    #[serde(skip)]
    pub certificate: IrredCertificate,
    #[serde(skip)]
    pub elapsed_ns: u64,
}

impl ScanRecord {
    /// The line hashed into the report checksum.
    pub fn canonical_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}\n",
            self.r, self.n, self.n0, self.n1, self.method, self.witness, self.galois_method
        )
    }

    pub fn exceptional(&self) -> bool {
        !matches!(
            self.certificate.method,
            IrredMethod::KtI { .. } | IrredMethod::LemmaBl { .. }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pairs: u64,
    pub resolved: u64,
    pub unresolved: u64,
    pub exceptional: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalPair {
    pub r: u64,
    pub n: u64,
    pub n0: u64,
    pub n1: u64,
    pub certificate: IrredCertificate,
    pub galois: GaloisCertificate,
}

/// Exceptional pairs against the Table 1 rows that fall inside the box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Comparison {
    pub expected: usize,
    pub found: usize,
    pub matches: bool,
    pub missing: Vec<(u64, u64)>,
    pub extra: Vec<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    #[serde(rename = "box")]
    pub bounds: ScanBox,
    pub totals: Totals,
    pub methods: BTreeMap<String, u64>,
    pub exceptional: Vec<ExceptionalPair>,
    pub table1: Table1Comparison,
    pub checksum: String,
    #[serde(skip)]
    pub records: Vec<ScanRecord>,
}

impl ScanReport {
    pub fn exceptional_pairs(&self) -> BTreeSet<(u64, u64)> {
        self.exceptional.iter().map(|e| (e.r, e.n)).collect()
    }

    /// Re-checks every certificate from its witness, without searching.
    pub fn verify_certificates(&self) -> Vec<(u64, u64)> {
        self.records
            .par_iter()
            .filter(|rec| !verify_certificate(&rec.certificate))
            .map(|rec| (rec.r, rec.n))
            .collect()
    }
}

fn galois_tag(n: u64, r: u64) -> &'static str {
    if n >= GALOIS_DIRECT_BELOW && direct_prime(n, r).is_some() {
        // a prime in ((n+r)/2, n-2) always leaves a slope -1/p
        return "JordanPrime";
    }
    theorem_gt(n, r).method_tag()
}

fn scan_pair(n: u64, r: u64, primes: &PrimeTable) -> ScanRecord {
    let start = Instant::now();
    let factors = factor_u64(n);
    let d = decompose_with(n, r, &factors);
    let method = if d.n1 == 1 {
        IrredMethod::KtI {
            kt_ii: factors.iter().all(|&(p, _)| p > r),
        }
    } else {
        let p = primes.next_prime_after(bl_lower(n, r, d.n0).floor().to_integer());
        if p <= n {
            IrredMethod::LemmaBl { p, n0: d.n0 }
        } else {
            decide_irreducible(n, r).method
        }
    };
    let certificate = IrredCertificate { n, r, method };
    ScanRecord {
        r,
        n,
        n0: d.n0,
        n1: d.n1,
        method: certificate.method_tag(),
        witness: certificate.summary(),
        galois_method: galois_tag(n, r),
        certificate,
        elapsed_ns: start.elapsed().as_nanos() as u64,
    }
}

fn checksum(records: &[ScanRecord]) -> String {
    let mut h = Sha256::new();
    for rec in records {
        h.update(rec.canonical_line().as_bytes());
    }
    hex::encode(h.finalize())
}

/// Scans `n_min ≤ n ≤ n_max`, `r_min ≤ r ≤ r_max` on a pool of `workers`
/// threads. The report does not depend on `workers`.
pub fn scan_box(n_min: u64, n_max: u64, r_min: u64, r_max: u64, workers: usize) -> ScanReport {
    let bounds = ScanBox::new(n_min.max(1), n_max, r_min, r_max);
    let primes = PrimeTable::new(2 * n_max + r_max + 64);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let mut records: Vec<ScanRecord> = pool.install(|| {
        (bounds.r_min..=bounds.r_max)
            .flat_map(|r| (bounds.n_min..=bounds.n_max).map(move |n| (r, n)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .with_min_len(256)
            .map(|(r, n)| scan_pair(n, r, &primes))
            .collect()
    });
    records.sort_by_key(|rec| (rec.r, rec.n));

    let mut methods = BTreeMap::new();
    for rec in &records {
        *methods.entry(rec.method.to_string()).or_insert(0) += 1;
    }
    let exceptional: Vec<ExceptionalPair> = records
        .iter()
        .filter(|rec| rec.exceptional())
        .map(|rec| ExceptionalPair {
            r: rec.r,
            n: rec.n,
            n0: rec.n0,
            n1: rec.n1,
            certificate: rec.certificate.clone(),
            galois: theorem_gt(rec.n, rec.r),
        })
        .collect();
    let unresolved = records
        .iter()
        .filter(|rec| !rec.certificate.is_resolved())
        .count() as u64;
    let totals = Totals {
        pairs: records.len() as u64,
        resolved: records.len() as u64 - unresolved,
        unresolved,
        exceptional: exceptional.len() as u64,
    };

    let expected: BTreeSet<(u64, u64)> = table1_pairs()
        .into_iter()
        .filter(|&(r, n)| bounds.contains(r, n))
        .collect();
    let found: BTreeSet<(u64, u64)> = exceptional.iter().map(|e| (e.r, e.n)).collect();
    let table1 = Table1Comparison {
        expected: expected.len(),
        found: found.len(),
        matches: expected == found,
        missing: expected.difference(&found).copied().collect(),
        extra: found.difference(&expected).copied().collect(),
    };

    ScanReport {
        bounds,
        totals,
        methods,
        exceptional,
        table1,
        checksum: checksum(&records),
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_zero_has_no_exceptions() {
        let rep = scan_box(4, 100, 0, 0, 1);
        assert_eq!(rep.totals.pairs, 97);
        assert!(rep.exceptional.is_empty());
        assert_eq!(rep.methods.get("Kt-i"), Some(&97));
    }

    #[test]
    fn small_box_matches_table_rows() {
        let rep = scan_box(4, 60, 0, 8, 2);
        assert_eq!(rep.totals.pairs, 57 * 9);
        assert!(rep.table1.matches, "{:?}", rep.table1);
        assert_eq!(rep.totals.unresolved, 0);
        assert!(rep.verify_certificates().is_empty());
    }

    #[test]
    fn records_are_ordered() {
        let rep = scan_box(4, 30, 2, 4, 3);
        assert!(rep
            .records
            .windows(2)
            .all(|w| (w[0].r, w[0].n) < (w[1].r, w[1].n)));
        assert_eq!(rep.bounds.pairs(), rep.totals.pairs);
    }
}
