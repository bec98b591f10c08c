//! Seeded random property suite over monic pairs.
//!
//! For every pair with nonzero resultant `r` the suite checks that
//! `gcd(f(n), g(n))` divides `r`, that a square-free `r` has every divisor in
//! the gcd range, that 1 is in the range when no `p^p` divides `r`, that the
//! range is closed under divisors whenever it contains `|r|`, and that both
//! lower bounds (and the interval property) hold at every prime dividing `r`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::json;
use crate::lattice::resultant;
use crate::padic::{vp, PadicTables, Prime};
use crate::poly::IntPolynomial;
use crate::range::{factor_trial, valuation_profile_with, ValuationProfile};

pub const CHECK_DIVIDES_RESULTANT: &str = "gcd_divides_resultant";
pub const CHECK_SQUAREFREE: &str = "squarefree_all_divisors";
pub const CHECK_ONE_IN_RANGE: &str = "one_in_range";
pub const CHECK_DIVISOR_CLOSURE: &str = "divisor_closure";
pub const CHECK_MAX_BOUND: &str = "max_le_vp_resultant";
pub const CHECK_THEOREM1: &str = "general_bound";
pub const CHECK_THEOREM2: &str = "small_s_bound";
pub const CHECK_INTERVAL: &str = "small_s_interval";
pub const CHECK_INTERNAL: &str = "internal_error";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_deg: usize,
    pub coeff_bound: i64,
}

/// A random monic polynomial: degree uniform in `1..=max_deg`, lower
/// coefficients uniform in `[-coeff_bound, coeff_bound]`.
pub fn random_monic<R: Rng>(rng: &mut R, max_deg: usize, coeff_bound: i64) -> IntPolynomial {
    let deg = rng.random_range(1..=max_deg.max(1));
    let mut coeffs: Vec<BigInt> = (0..deg)
        .map(|_| BigInt::from(rng.random_range(-coeff_bound..=coeff_bound)))
        .collect();
    coeffs.push(BigInt::one());
    IntPolynomial::new(coeffs)
}

/// A random monic pair with nonzero resultant.
pub fn random_pair<R: Rng>(
    rng: &mut R,
    max_deg: usize,
    coeff_bound: i64,
) -> (IntPolynomial, IntPolynomial, BigInt) {
    loop {
        let f = random_monic(rng, max_deg, coeff_bound);
        let g = random_monic(rng, max_deg, coeff_bound);
        let r = resultant(&f, &g).expect("monic by construction");
        if !r.is_zero() {
            return (f, g, r);
        }
    }
}

/// Independent stream per trial index, so scheduling never changes a draw.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Everything the suite learns about one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    #[serde(with = "json::bigint")]
    pub resultant: BigInt,
    #[serde(with = "json::bigint_set")]
    pub range: BTreeSet<BigInt>,
    pub checks: Vec<CheckResult>,
}

impl PairOutcome {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn divisors(factors: &[(Prime, u32)]) -> BTreeSet<BigInt> {
    let mut out = BTreeSet::from([BigInt::one()]);
    for &(p, e) in factors {
        out = out
            .iter()
            .flat_map(|d| (0..=e).map(move |k| d * p.pow(k)))
            .collect();
    }
    out
}

/// Runs every applicable check on one monic pair. Divisibility of `r` is
/// sampled at `|n| <= radius` and at every profile witness.
pub fn check_pair(
    f: &IntPolynomial,
    g: &IntPolynomial,
    radius: i64,
    exec: Execution,
) -> Result<PairOutcome> {
    let r = resultant(f, g)?;
    if r.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let factors = factor_trial(&r)?;
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| {
        checks.push(CheckResult {
            name,
            passed,
            detail,
        })
    };

    let mut profiles: Vec<(ValuationProfile, BoundReport)> = Vec::new();
    let mut range = BTreeSet::from([BigInt::one()]);
    for &(p, _) in &factors {
        let profile = valuation_profile_with(f, g, p, exec)?;
        let v_r = vp(&r, p).finite().expect("nonzero");
        let report = BoundReport::evaluate(&profile, v_r, &PadicTables::for_prime(p));
        range = range
            .iter()
            .flat_map(|v| profile.attained.iter().map(move |&e| v * p.pow(e as u32)))
            .collect();
        profiles.push((profile, report));
    }

    // (1) gcd(f(n), g(n)) | r on |n| <= radius plus every stored witness.
    let mut sample: BTreeSet<BigInt> = (-radius..=radius).map(BigInt::from).collect();
    for (prof, _) in &profiles {
        sample.extend(prof.witnesses.values().cloned());
    }
    let bad_n = sample.iter().find(|n| {
        let d = f.evaluate(n).gcd(&g.evaluate(n));
        d.is_zero() || !r.is_multiple_of(&d)
    });
    push(
        CHECK_DIVIDES_RESULTANT,
        bad_n.is_none(),
        bad_n.map_or_else(String::new, |n| format!("n = {n}")),
    );

    let abs_r = r.abs();
    let all_divisors = divisors(&factors);
    if factors.iter().all(|&(_, e)| e == 1) {
        push(
            CHECK_SQUAREFREE,
            range == all_divisors,
            format!(
                "range has {} of {} divisors",
                range.len(),
                all_divisors.len()
            ),
        );
    }
    if factors.iter().all(|&(p, e)| (e as u64) < p.get()) {
        push(
            CHECK_ONE_IN_RANGE,
            range.contains(&BigInt::one()),
            String::new(),
        );
    }
    if range.contains(&abs_r) {
        push(
            CHECK_DIVISOR_CLOSURE,
            range == all_divisors,
            format!(
                "range has {} of {} divisors",
                range.len(),
                all_divisors.len()
            ),
        );
    }
    for (prof, report) in &profiles {
        let p = prof.p;
        push(
            CHECK_MAX_BOUND,
            report.s_max <= report.v_r,
            format!("p = {p}: S = {}, v(r) = {}", report.s_max, report.v_r),
        );
        push(
            CHECK_THEOREM1,
            report.general_holds(),
            format!(
                "p = {p}: v(r) - S = {}, bound {}",
                report.v_r as i64 - report.s_max as i64,
                report.lb_general.value
            ),
        );
        if let Some(ok) = report.small_holds() {
            push(CHECK_THEOREM2, ok, format!("p = {p}: s = {}", report.s));
        }
        if let Some(ok) = report.interval_ok {
            push(
                CHECK_INTERVAL,
                ok,
                format!("p = {p}: attained {:?}", prof.attained),
            );
        }
    }

    Ok(PairOutcome {
        f: f.clone(),
        g: g.clone(),
        resultant: r,
        range,
        checks,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub trial: usize,
    pub check: String,
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub detail: String,
}

/// One line of the optional per-trial log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRow {
    pub trial: usize,
    pub f: String,
    pub g: String,
    pub resultant: String,
    pub range: String,
    pub checks_run: usize,
    pub checks_failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub checks: BTreeMap<String, Tally>,
    pub first_failure: Option<FailureRecord>,
    #[serde(skip)]
    pub rows: Vec<TrialRow>,
}

impl SuiteReport {
    pub fn total_failures(&self) -> u64 {
        self.checks.values().map(|t| t.failed).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_failures() == 0 && self.first_failure.is_none()
    }
}

fn run_trial(
    config: &SuiteConfig,
    trial: usize,
) -> (IntPolynomial, IntPolynomial, Result<PairOutcome>) {
    let mut rng = trial_rng(config.seed, trial);
    let (f, g, _) = random_pair(&mut rng, config.max_deg, config.coeff_bound);
    let outcome = check_pair(&f, &g, config.coeff_bound, Execution::Sequential);
    (f, g, outcome)
}

pub fn random_property_suite(config: SuiteConfig) -> SuiteReport {
    random_property_suite_with(config, Execution::default())
}

/// Trials run independently; the report is folded in trial order.
pub fn random_property_suite_with(config: SuiteConfig, exec: Execution) -> SuiteReport {
    let results = exec.map_indexed(config.trials, |i| run_trial(&config, i));
    let mut checks: BTreeMap<String, Tally> = BTreeMap::new();
    let mut first_failure = None;
    let mut rows = Vec::with_capacity(results.len());
    for (trial, (f, g, outcome)) in results.into_iter().enumerate() {
        match outcome {
            Ok(outcome) => {
                let mut failed = 0;
                for c in &outcome.checks {
                    let tally = checks.entry(c.name.to_string()).or_default();
                    if c.passed {
                        tally.passed += 1;
                    } else {
                        tally.failed += 1;
                        failed += 1;
                        first_failure.get_or_insert_with(|| FailureRecord {
                            trial,
                            check: c.name.to_string(),
                            f: f.clone(),
                            g: g.clone(),
                            detail: c.detail.clone(),
                        });
                    }
                }
                let range: Vec<String> = outcome.range.iter().map(|v| v.to_string()).collect();
                rows.push(TrialRow {
                    trial,
                    f: f.to_string(),
                    g: g.to_string(),
                    resultant: outcome.resultant.to_string(),
                    range: range.join(" "),
                    checks_run: outcome.checks.len(),
                    checks_failed: failed,
                });
            }
            Err(err) => {
                checks.entry(CHECK_INTERNAL.to_string()).or_default().failed += 1;
                first_failure.get_or_insert_with(|| FailureRecord {
                    trial,
                    check: CHECK_INTERNAL.to_string(),
                    f: f.clone(),
                    g: g.clone(),
                    detail: err.to_string(),
                });
                rows.push(TrialRow {
                    trial,
                    f: f.to_string(),
                    g: g.to_string(),
                    resultant: String::new(),
                    range: String::new(),
                    checks_run: 0,
                    checks_failed: 1,
                });
            }
        }
    }
    SuiteReport {
        seed: config.seed,
        trials: config.trials,
        checks,
        first_failure,
        rows,
    }
}
