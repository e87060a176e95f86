use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use glp_core::criteria::decide_irreducible;
use glp_core::galois::{decide_small_n, disc_is_square, theorem_gt};
use glp_core::newton::glp_polygon;
use glp_core::poly::{discriminant_formula, glp_alpha, glp_hurwitz, glp_monic};
use glp_survey::output::{scan_csv, table_csv, to_json};
use glp_survey::{galois_sweep, modification_experiment, scan_box, verify_table1, verify_table2};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Parser)]
#[command(
    name = "glp",
    version,
    about = "Irreducibility and Galois certificates for generalized Laguerre polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print L_n^<r> (monic integer form by default)
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, conflicts_with_all = ["hurwitz", "alpha"])]
        monic: bool,
        #[arg(long, conflicts_with = "alpha")]
        hurwitz: bool,
        /// Classical L_n^(alpha) for a rational alpha such as -7/2
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Newton polygon of L_n^<r> at the prime p
    Polygon {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Irreducibility certificate
    Check {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        json: bool,
    },
    /// Galois group lower bound
    Galois {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        json: bool,
    },
    /// Discriminant and whether it is a square
    Disc {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Scan a box of (n, r) pairs
    Scan {
        #[arg(long, default_value_t = 4)]
        n_min: u64,
        #[arg(long, default_value_t = 48741)]
        n_max: u64,
        #[arg(long, default_value_t = 0)]
        r_min: u64,
        #[arg(long, default_value_t = 8)]
        r_max: u64,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify the tables of exceptional pairs
    Tables {
        #[arg(long, value_enum, default_value_t = Which::All)]
        verify: Which,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Galois certificates for 4 <= n < 48 and the large-degree check
    Sweep {
        #[arg(long, default_value_t = 8)]
        r_max: u64,
        #[arg(long, default_value_t = 48741)]
        n_max: u64,
    },
    /// Admissible modification experiment
    Modexp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r_max: u64,
        #[arg(long)]
        b_bound: i64,
        #[arg(long, default_value_t = 100)]
        m_max: u64,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("glp: {msg}");
    ExitCode::from(2)
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn sink(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (
                BigInt::from_str(a.trim()).ok()?,
                BigInt::from_str(b.trim()).ok()?,
            );
            (b != BigInt::from(0)).then(|| BigRational::new(a, b))
        }
        None => BigInt::from_str(s.trim())
            .ok()
            .map(BigRational::from_integer),
    }
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    match cli.command {
        Command::Poly {
            n,
            r,
            monic: _,
            hurwitz,
            alpha,
        } => {
            if let Some(a) = alpha {
                let Some(a) = parse_rational(&a) else {
                    return Ok(usage(&format!("cannot parse alpha {a:?}")));
                };
                println!("{}", glp_alpha(n, &a));
                return Ok(ExitCode::SUCCESS);
            }
            let Some(r) = r else {
                return Ok(usage("--r is required unless --alpha is given"));
            };
            if hurwitz {
                let a: Vec<String> = glp_hurwitz(n, r)
                    .hcoeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                println!("hurwitz [{}]", a.join(", "));
            } else {
                println!("{}", glp_monic(n, r as i64));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Polygon { n, r, p, json } => {
            if n == 0 {
                return Ok(usage("the polygon needs n >= 1"));
            }
            if !glp_core::arith::is_prime(p) {
                return Ok(usage(&format!("{p} is not prime")));
            }
            let np = glp_polygon(n, r, p);
            if json {
                print!("{}", to_json(&np));
            } else {
                print!("{}", np.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { n, r, json } => {
            if n == 0 {
                println!("degree 0: L_0^<{r}> = 1, nothing to certify");
                return Ok(ExitCode::SUCCESS);
            }
            let cert = decide_irreducible(n, r);
            if json {
                print!("{}", to_json(&cert));
            } else {
                println!("L_{n}^<{r}>: {}", cert.summary());
            }
            Ok(verdict(cert.is_resolved()))
        }
        Command::Galois { n, r, json } => {
            if n == 0 {
                println!("degree 0: trivial Galois group");
                return Ok(ExitCode::SUCCESS);
            }
            let irred = decide_irreducible(n, r);
            let gal = if n <= 4 {
                decide_small_n(n, r).expect("n <= 4").1
            } else {
                theorem_gt(n, r)
            };
            if json {
                print!(
                    "{}",
                    to_json(&serde_json::json!({ "irreducibility": irred, "galois": gal }))
                );
            } else {
                println!("L_{n}^<{r}>: {}; {}", irred.summary(), gal.summary());
            }
            Ok(verdict(irred.is_resolved() && gal.contains_an()))
        }
        Command::Disc { n, r } => {
            if n == 0 {
                return Ok(usage("the discriminant needs n >= 1"));
            }
            println!(
                "discriminant {}",
                discriminant_formula(n as usize, r as i64)
            );
            println!("square {}", disc_is_square(n, r));
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            n_min,
            n_max,
            r_min,
            r_max,
            jobs,
            out,
            format,
        } => {
            if n_min == 0 || n_min > n_max || r_min > r_max {
                return Ok(usage(
                    "empty or invalid box (need 1 <= n-min <= n-max, r-min <= r-max)",
                ));
            }
            let report = scan_box(n_min, n_max, r_min, r_max, jobs);
            let mut w = sink(&out)?;
            match format {
                Format::Json => w.write_all(to_json(&report).as_bytes())?,
                Format::Csv => scan_csv(&report, &mut w).map_err(io::Error::other)?,
            }
            w.flush()?;
            eprintln!(
                "{} pairs, {} exceptional, {} unresolved, table 1 {}, checksum {}",
                report.totals.pairs,
                report.totals.exceptional,
                report.totals.unresolved,
                if report.table1.matches {
                    "matches"
                } else {
                    "differs"
                },
                report.checksum
            );
            Ok(verdict(
                report.totals.unresolved == 0 && report.table1.matches,
            ))
        }
        Command::Tables {
            verify,
            format,
            out,
        } => {
            let mut reports = Vec::new();
            if verify != Which::Two {
                reports.push(verify_table1());
            }
            if verify != Which::One {
                reports.push(verify_table2());
            }
            let mut w = sink(&out)?;
            for rep in &reports {
                match format {
                    Format::Json => w.write_all(to_json(rep).as_bytes())?,
                    Format::Csv => table_csv(rep, &mut w).map_err(io::Error::other)?,
                }
            }
            w.flush()?;
            for rep in &reports {
                eprintln!("table {}: {}/{} pass", rep.table, rep.passed, rep.total);
            }
            Ok(verdict(reports.iter().all(|r| r.ok())))
        }
        Command::Sweep { r_max, n_max } => {
            let sweep = galois_sweep(r_max, n_max);
            print!("{}", to_json(&sweep));
            Ok(verdict(sweep.ok()))
        }
        Command::Modexp {
            n,
            r_max,
            b_bound,
            m_max,
        } => {
            if n == 0 || b_bound < 0 {
                return Ok(usage("need n >= 1 and b-bound >= 0"));
            }
            let rep = modification_experiment(n, r_max, b_bound, m_max);
            print!("{}", to_json(&rep));
            let family_ok = rep.family.failures.is_empty();
            Ok(verdict(family_ok && rep.undecided.is_empty()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("glp: {e}");
            ExitCode::from(1)
        }
    }
}
