//! End-to-end acceptance checks, one line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use glp_core::arith::{
    check_harborth_kemnitz, check_theorem_ant, divisors_u64, is_prime, sweep_corollary_nr,
};
use glp_core::criteria::carries;
use glp_core::galois::{decide_small_n, theorem_gt, verify_curve_points, GaloisConclusion};
use glp_core::newton::{
    newton_index, ord_p_u64, pivotal_indices, polygon_equals_en, polygon_of_hurwitz,
};
use glp_core::poly::{
    discriminant_formula, discriminant_resultant, glp_alpha, glp_hurwitz, glp_monic, HurwitzPoly,
    RatPoly,
};
use glp_survey::modexp::family_check;
use glp_survey::tables::table1_pairs;
use glp_survey::{modification_experiment, scan_box, verify_table1, verify_table2, TABLE1, TABLE2};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

type Outcome = Result<String, String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, Option<u64>, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn scan_reproduction() -> Outcome {
    let rep = scan_box(4, 48_741, 0, 8, 8);
    ensure(
        rep.totals.pairs == 438_642,
        format!("{} pairs", rep.totals.pairs),
    )?;
    ensure(
        rep.totals.unresolved == 0,
        format!("{} unresolved", rep.totals.unresolved),
    )?;
    ensure(
        rep.exceptional_pairs() == table1_pairs(),
        format!("exceptional {:?}", rep.exceptional_pairs()),
    )?;
    Ok(format!(
        "{} pairs, {} exceptional = Table 1",
        rep.totals.pairs,
        rep.exceptional.len()
    ))
}

fn table1() -> Outcome {
    let rep = verify_table1();
    ensure(
        rep.total == 24 && rep.passed == 24,
        format!("{}/{}", rep.passed, rep.total),
    )?;
    let with_ell = TABLE1.iter().filter(|row| row.2.is_some()).count();
    ensure(with_ell == 23, "23 rows with a prime")?;
    let star = rep
        .rows
        .iter()
        .find(|row| (row.r, row.n) == (5, 4))
        .unwrap();
    ensure(star.witness == "*" && star.pass, "row (5, 4, *)")?;
    let last = rep
        .rows
        .iter()
        .find(|row| (row.r, row.n) == (8, 120))
        .unwrap();
    ensure(
        last.detail.contains("DumasDivisorPlusFilaseta(15,107)"),
        last.detail.clone(),
    )?;
    Ok("24/24 rows".to_string())
}

fn table2() -> Outcome {
    let rep = verify_table2();
    ensure(
        TABLE2.len() == 47 && rep.passed == 47,
        format!("{}/{}", rep.passed, rep.total),
    )?;
    let cross = rep.cross_check.unwrap();
    ensure(
        cross.matches,
        format!("missing {:?}, extra {:?}", cross.missing, cross.extra),
    )?;
    Ok(format!(
        "47/47 rows, derived set of {} equal",
        cross.derived
    ))
}

fn quintic_example() -> Outcome {
    let ni = newton_index(&glp_monic(5, 3)).map_err(|e| e.to_string())?;
    ensure(
        ni.value == BigUint::from(60u32),
        format!("index {}", ni.value),
    )?;
    for (p, d) in [(2u64, 4u32), (3, 3), (5, 5), (7, 2)] {
        ensure(
            ni.per_prime.get(&p) == Some(&BigUint::from(d)),
            format!("p = {p}"),
        )?;
    }
    let gal = theorem_gt(5, 3);
    ensure(
        gal.conclusion == GaloisConclusion::SymmetricSn,
        format!("{:?}", gal.conclusion),
    )?;
    Ok(format!("index 60, {}", gal.summary()))
}

fn discriminants() -> Outcome {
    // 1 ≤ n ≤ 12 is 156 cases; n = 13 brings the count to 169
    let mut cases = 0;
    for n in 1..=13usize {
        for r in 0..=12i64 {
            ensure(
                discriminant_formula(n, r) == discriminant_resultant(&glp_monic(n, r)),
                format!("({n},{r})"),
            )?;
            cases += 1;
        }
    }
    ensure(cases == 169, format!("{cases} cases"))?;
    Ok(format!("{cases} cases"))
}

fn legendre(n: u64, p: u64) -> u64 {
    let mut v = 0;
    let mut q = p;
    while q <= n {
        v += n / q;
        q *= p;
    }
    v
}

fn kummer() -> Outcome {
    let mut cases = 0;
    for n in 0..=200u64 {
        for r in 0..=200u64 {
            for p in [2u64, 3, 5, 7, 11, 13] {
                let v = legendre(n + r, p) - legendre(n, p) - legendre(r, p);
                ensure(carries(n, r, p) as u64 == v, format!("({n},{r},{p})"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn prime_divisors(n: u64) -> Vec<u64> {
    divisors_u64(n)
        .into_iter()
        .filter(|&d| is_prime(d))
        .collect()
}

fn exponential_polygon() -> Outcome {
    let mut cases = 0;
    for n in 1..=60u64 {
        let en = HurwitzPoly::truncated_exp(n as usize);
        for r in 0..=10u64 {
            let f = glp_hurwitz(n as usize, r);
            for p in prime_divisors(n) {
                if carries(n, r, p) > 0 {
                    continue;
                }
                let np = polygon_of_hurwitz(&f, p).map_err(|e| e.to_string())?;
                let e = polygon_of_hurwitz(&en, p).map_err(|e| e.to_string())?;
                ensure(
                    np.edges == e.edges && polygon_equals_en(&f, p),
                    format!("({n},{r},{p}) polygon"),
                )?;
                ensure(
                    np.breaks() == pivotal_indices(n, p),
                    format!("({n},{r},{p}) breaks"),
                )?;
                let pk = p.pow(ord_p_u64(n, p));
                ensure(
                    np.slopes().iter().all(|s| s.denom() % pk == 0),
                    format!("({n},{r},{p}) denominators"),
                )?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn slope_minus_one_over_p() -> Outcome {
    let mut cases = 0;
    for n in 1..=200u64 {
        for r in 0..=8u64 {
            let f = glp_hurwitz(n as usize, r);
            for p in (1..=n).filter(|&p| 2 * p > n + r && is_prime(p)) {
                let np = polygon_of_hurwitz(&f, p).map_err(|e| e.to_string())?;
                ensure(np.has_slope(-1, p), format!("({n},{r},{p})"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn rational_root(f: &RatPoly) -> bool {
    let g = f.clear_denominators();
    let c0 = g.coeff(0).to_i64().unwrap();
    let lead = g.coeffs().last().unwrap().to_i64().unwrap();
    if c0 == 0 {
        return true;
    }
    divisors_u64(c0.unsigned_abs()).into_iter().any(|d| {
        divisors_u64(lead.unsigned_abs()).into_iter().any(|e| {
            [1i64, -1].iter().any(|s| {
                f.eval(&BigRational::new(
                    BigInt::from(s * d as i64),
                    BigInt::from(e),
                ))
                .is_zero()
            })
        })
    })
}

fn small_degrees() -> Outcome {
    for n in 2..=4u64 {
        for r in 0..=10_000u64 {
            let (irr, gal) = decide_small_n(n, r).map_err(|e| e.to_string())?;
            ensure(irr.is_resolved() && gal.contains_an(), format!("({n},{r})"))?;
        }
    }
    ensure(verify_curve_points(), "integral points")?;
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    ensure(glp_alpha(4, &int(5)).eval(&int(6)).is_zero(), "root 6")?;
    ensure(glp_alpha(4, &int(23)).eval(&int(30)).is_zero(), "root 30")?;
    for m in 1..=3i64 {
        let alpha = BigRational::new(BigInt::from(m * m * m - 9 * m - 6), BigInt::from(3 * m + 2));
        ensure(
            rational_root(&glp_alpha(3, &alpha)),
            format!("control m = {m}"),
        )?;
    }
    Ok("n = 2, 3, 4 for r <= 10^4; 9 points; 2 roots; 3 controls".to_string())
}

fn prime_intervals() -> Outcome {
    let mut detail = Vec::new();
    for h in [2u64, 3, 5] {
        let c = check_theorem_ant(h, 1_000_000).map_err(|e| e.to_string())?;
        ensure(c.ok(), format!("h = {h} fails at {:?}", c.first_failure))?;
        detail.push(format!("h={h}: {}", c.checked));
    }
    let hk = check_harborth_kemnitz(100_000);
    ensure(
        hk.ok() && hk.checked == 100_000 - 48_683 + 1,
        format!("{hk:?}"),
    )?;
    let (checked, failures) = sweep_corollary_nr(10_000);
    ensure(
        failures.is_empty(),
        format!("{:?}", &failures[..failures.len().min(5)]),
    )?;
    Ok(format!(
        "{}; (n, 1.001n]: {}; (n, r) pairs: {checked}",
        detail.join(", "),
        hk.checked
    ))
}

fn modifications() -> Outcome {
    let fam = family_check(100);
    ensure(
        fam.confirmed == 100,
        format!("family failures {:?}", fam.failures),
    )?;
    let rep = modification_experiment(3, 20, 20, 0);
    ensure(
        rep.tested == 21 * 2 * 41 * 41,
        format!("{} tested", rep.tested),
    )?;
    ensure(
        rep.reducible.is_empty() && rep.undecided.is_empty(),
        format!("{:?}", rep.reducible),
    )?;
    Ok(format!(
        "100 family identities; {} cubics, 0 reducible",
        rep.tested
    ))
}

fn determinism() -> Outcome {
    let sums: Vec<String> = [1usize, 4, 8]
        .iter()
        .map(|&w| scan_box(4, 48_741, 0, 8, w).checksum)
        .collect();
    let distinct: BTreeSet<&String> = sums.iter().collect();
    ensure(distinct.len() == 1, format!("{sums:?}"))?;
    Ok(format!("checksum {}", &sums[0][..16]))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("scan reproduction", Some(600), scan_reproduction),
        ("Table 1 verification", Some(30), table1),
        ("Table 2 verification", Some(10), table2),
        ("quintic Newton index", None, quintic_example),
        ("discriminant oracle equivalence", None, discriminants),
        ("Kummer carries", None, kummer),
        ("exponential polygon suite", None, exponential_polygon),
        ("slope -1/p suite", None, slope_minus_one_over_p),
        ("small degrees", Some(60), small_degrees),
        ("prime intervals", Some(60), prime_intervals),
        ("admissible modifications", Some(300), modifications),
        ("determinism across workers", None, determinism),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|d| match budget {
            Some(b) if elapsed > Duration::from_secs(*b) => {
                Err(format!("over budget: {elapsed:.1?} > {b}s"))
            }
            _ => Ok(d),
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
