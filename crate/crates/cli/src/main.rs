//! `polygcd`: command-line front end. JSON on stdout, diagnostics on stderr.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use polygcd::constructions::{certify, construct_large, construct_small};
use polygcd::harness::random_property_suite;
use polygcd::{
    analyze, gcd_value_range, kempner, parse_poly, quotient_group, resultant, smith_normal_form,
    sylvester_matrix, Error, IntPolynomial, PadicTables, Prime, SuiteConfig,
};
use serde_json::{json, Value};

use report::ReportDocument;

#[derive(Parser, Debug)]
#[command(
    name = "polygcd",
    version,
    about = "p-adic analysis of gcd(f(n), g(n)) for monic integer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resultant, Smith form, valuation profile and bound report for a pair.
    #[command(group(ArgGroup::new("prime").required(true).args(["p", "all_primes"])))]
    Analyze {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        p: Option<u64>,
        /// Analyze every prime dividing the resultant and report the gcd range.
        #[arg(long)]
        all_primes: bool,
    },
    /// Build and certify a sharpness construction.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u64,
        #[arg(long = "S")]
        big_s: Option<u64>,
    },
    /// Seeded random property suite.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        #[arg(long, default_value_t = 8)]
        coeff_bound: i64,
        /// Write one CSV row per trial to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Tables of alpha, beta and B.
    Tables {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_s: u64,
    },
    /// Brute-force count of polynomial functions mod p^s (or |R_{S,s}| with --S).
    Kempner {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u64,
        #[arg(long = "S")]
        big_s: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Large,
    Small,
}

/// A failed command: exit status plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Syntax { .. } | Error::NonIntegerLiteral { .. } => 2,
            Error::NotPrime(_) | Error::InvalidParameters(_) | Error::EnumerationGuard { .. } => 2,
            Error::OutOfHypothesis(_) => 2,
            Error::ZeroResultant => 3,
            Error::NotMonic(_) => 4,
            Error::UnsupportedCase(_) => 5,
            Error::TheoremViolation(_) => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Output document plus whether the command's checks all passed.
type Outcome = Result<(ReportDocument, bool), Failure>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn parse_monic(text: &str) -> Result<IntPolynomial, Failure> {
    let poly = parse_poly(text)?;
    poly.require_monic()?;
    Ok(poly)
}

fn run_analyze(f: &str, g: &str, p: Option<u64>, all_primes: bool) -> Outcome {
    let (f, g) = (parse_monic(f)?, parse_monic(g)?);
    let r = resultant(&f, &g)?;
    let smith = smith_normal_form(&sylvester_matrix(&f, &g)?);
    let quotient = quotient_group(&f, &g)?;
    let mut inputs = json!({ "f": f.to_string(), "g": g.to_string() });
    let mut result = json!({
        "resultant": r.to_string(),
        "smith_form": to_value(&smith),
        "quotient_group": quotient.iter().map(BigInt::to_string).collect::<Vec<_>>(),
    });
    if all_primes {
        inputs["all_primes"] = json!(true);
        let range = gcd_value_range(&f, &g)?;
        let mut per_prime = Vec::new();
        for prof in &range.profiles {
            let a = analyze(&f, &g, prof.p)?;
            per_prime.push(json!({ "p": prof.p.get(), "profile": to_value(&a.profile), "bounds": to_value(&a.bounds) }));
        }
        result["per_prime"] = Value::Array(per_prime);
        result["gcd_range"] = json!(range
            .values
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>());
    } else {
        let p = Prime::new(p.expect("clap enforces --p or --all-primes"))?;
        inputs["p"] = json!(p.get());
        let a = analyze(&f, &g, p)?;
        result["profile"] = to_value(&a.profile);
        result["bounds"] = to_value(&a.bounds);
    }
    Ok((ReportDocument::new("analyze", inputs, result), true))
}

fn run_construct(kind: Kind, p: u64, s: u64, big_s: Option<u64>) -> Outcome {
    let p = Prime::new(p)?;
    let construction = match kind {
        Kind::Large => construct_large(p, s),
        Kind::Small => {
            let big_s = big_s.ok_or_else(|| fail(2, "--kind small requires --S"))?;
            construct_small(p, s, big_s)?
        }
    };
    let cert = certify(&construction)?;
    let mut inputs = json!({
        "kind": to_value(&construction.spec.kind),
        "p": p.get(),
        "s": s,
    });
    if let Some(big_s) = construction.spec.s_max {
        inputs["S"] = json!(big_s);
    }
    let result = json!({
        "f": construction.f.to_string(),
        "g": construction.g.to_string(),
        "spec": to_value(&construction.spec),
        "certification": {
            "certified": cert.certified,
            "observed": to_value(&cert.observed),
            "mismatches": cert.mismatches,
            "resultant": cert.analysis.resultant.to_string(),
            "profile": to_value(&cert.analysis.profile),
            "bounds": to_value(&cert.analysis.bounds),
        },
    });
    Ok((
        ReportDocument::new("construct", inputs, result),
        cert.certified,
    ))
}

fn run_verify(config: SuiteConfig, csv_path: Option<PathBuf>) -> Outcome {
    if config.trials == 0 || config.max_deg == 0 || config.coeff_bound < 0 {
        return Err(fail(
            2,
            "need --trials >= 1, --max-deg >= 1 and --coeff-bound >= 0",
        ));
    }
    let report = random_property_suite(config);
    if let Some(path) = csv_path {
        let write = || -> Result<(), csv::Error> {
            let mut w = csv::Writer::from_path(&path)?;
            for row in &report.rows {
                w.serialize(row)?;
            }
            w.flush()?;
            Ok(())
        };
        write().map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))?;
    }
    let inputs = to_value(&config);
    Ok((
        ReportDocument::new("verify", inputs, to_value(&report)),
        report.is_clean(),
    ))
}

fn run_tables(p: u64, max_s: u64) -> Outcome {
    let tables = PadicTables::new(p)?;
    let betas = tables.beta_prefix(max_s);
    let j_max = betas.last().copied().unwrap_or(0);
    let alphas: Vec<u64> = (0..=j_max).map(|j| tables.alpha(j)).collect();
    let bs: Vec<u64> = (1..=max_s).map(|s| tables.big_b(s)).collect();
    let result = json!({ "alpha": alphas, "beta": betas, "B": bs });
    Ok((
        ReportDocument::new("tables", json!({ "p": p, "max_s": max_s }), result),
        true,
    ))
}

fn run_kempner(p: u64, s: u64, big_s: Option<u64>) -> Outcome {
    let p = Prime::new(p)?;
    let count = match big_s {
        Some(big_s) => kempner::count_r(p, big_s, s)?,
        None => kempner::count_poly_functions(p, s)?,
    };
    let mut inputs = json!({ "p": p.get(), "s": s });
    if let Some(big_s) = big_s {
        inputs["S"] = json!(big_s);
    }
    Ok((
        ReportDocument::new("kempner", inputs, to_value(&count)),
        count.matches,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze {
            f,
            g,
            p,
            all_primes,
        } => run_analyze(&f, &g, p, all_primes),
        Command::Construct { kind, p, s, big_s } => run_construct(kind, p, s, big_s),
        Command::Verify {
            seed,
            trials,
            max_deg,
            coeff_bound,
            csv,
        } => run_verify(
            SuiteConfig {
                seed,
                trials,
                max_deg,
                coeff_bound,
            },
            csv,
        ),
        Command::Tables { p, max_s } => run_tables(p, max_s),
        Command::Kempner { p, s, big_s } => run_kempner(p, s, big_s),
    };
    match outcome {
        Ok((doc, passed)) => {
            println!("{}", doc.to_json());
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("polygcd: checks failed");
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("polygcd: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
