//! Admissible modifications `Σ a_j b_j x^j` with `b_0 = ±1`, `b_n = 1`.

use glp_core::criteria::{small_degree_search, SmallDegreeOutcome};
use glp_core::poly::{admissible_modification, glp_monic, IntPoly};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub r: u64,
    pub b: Vec<i64>,
    pub polynomial: String,
    pub factor: Option<String>,
}

/// `x^2 + 8m^3 x - 4m^2(4m^2+1) = (x - 2m)(x + 2m + 8m^3)` from
/// `r = 4m^2 - 1`, `b = (-1, m, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub m_max: u64,
    pub confirmed: u64,
    pub failures: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModexpReport {
    pub n: usize,
    pub r_max: u64,
    pub b_bound: i64,
    /// Modifications tested (all `b_0 = ±1`).
    pub tested: u64,
    pub reducible: Vec<Finding>,
    /// Modifications the search could not decide.
    pub undecided: Vec<Finding>,
    /// `n = 2` only: modifications with `b_0 = 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_constant: Option<FixedConstant>,
    pub family: FamilyCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedConstant {
    pub tested: u64,
    pub reducible: u64,
}

pub fn modify(n: usize, r: u64, b: &[i64]) -> IntPoly {
    let base = glp_monic(n, r as i64).to_rat();
    let b: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
    admissible_modification(&base, &b)
        .expect("b_0 = ±1 and b_n = 1")
        .to_int()
        .expect("integer coefficients")
}

fn middle_vectors(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn family_check(m_max: u64) -> FamilyCheck {
    let mut failures = Vec::new();
    for m in 1..=m_max {
        let mi = m as i64;
        let g = modify(2, 4 * m * m - 1, &[-1, mi, 1]);
        let lhs = IntPoly::from_i64(&[-2 * mi, 1]);
        let rhs = IntPoly::new(vec![
            BigInt::from(2 * mi + 8 * mi * mi * mi),
            BigInt::from(1),
        ]);
        if g != &lhs * &rhs {
            failures.push(m);
        }
    }
    FamilyCheck {
        m_max,
        confirmed: m_max - failures.len() as u64,
        failures,
    }
}

/// Every modification of `L_n^⟨r⟩` with `r ≤ r_max`, `|b_i| ≤ b_bound`,
/// tested by exhaustive factor search.
pub fn modification_experiment(n: usize, r_max: u64, b_bound: i64, m_max: u64) -> ModexpReport {
    assert!(n >= 1);
    let middles = middle_vectors(n - 1, b_bound);
    let outcomes: Vec<(u64, Vec<i64>, SmallDegreeOutcome)> = (0..=r_max)
        .into_par_iter()
        .flat_map_iter(|r| {
            let middles = &middles;
            [1i64, -1].into_iter().flat_map(move |b0| {
                middles.iter().map(move |mid| {
                    let mut b = vec![b0];
                    b.extend(mid);
                    b.push(1);
                    let g = modify(n, r, &b);
                    (r, b, small_degree_search(&g))
                })
            })
        })
        .collect();
    let mut report = ModexpReport {
        n,
        r_max,
        b_bound,
        tested: outcomes.len() as u64,
        reducible: Vec::new(),
        undecided: Vec::new(),
        fixed_constant: None,
        family: family_check(m_max),
    };
    let mut fixed = FixedConstant {
        tested: 0,
        reducible: 0,
    };
    for (r, b, outcome) in outcomes {
        let polynomial = || modify(n, r, &b).to_string();
        if b[0] == 1 {
            fixed.tested += 1;
        }
        match outcome {
            SmallDegreeOutcome::Irreducible(_) => {}
            SmallDegreeOutcome::Factor(f) => {
                if b[0] == 1 {
                    fixed.reducible += 1;
                }
                report.reducible.push(Finding {
                    r,
                    polynomial: polynomial(),
                    b,
                    factor: Some(f.to_string()),
                });
            }
            SmallDegreeOutcome::GaveUp(_) => report.undecided.push(Finding {
                r,
                polynomial: polynomial(),
                b,
                factor: None,
            }),
        }
    }
    if n == 2 {
        report.fixed_constant = Some(fixed);
    }
    report
}
