//! Lower bounds on `v_p(r) - S` and their evaluation against a computed profile.
//!
//! * general bound: `max_{t >= 0} B(s+t) - 2 B(t) - s`
//! * small-s bound (`s <= p`): `p s^2 - s`; when it is attained the profile
//!   must cover every integer in `[s, S]`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::json;
use crate::lattice::resultant;
use crate::padic::{vp, PadicTables, Prime};
use crate::poly::IntPolynomial;
use crate::range::{valuation_profile_with, ValuationProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralBound {
    pub value: i64,
    /// Smallest maximizing t.
    pub t: u64,
}

/// The general lower bound, maximized over `t`.
///
/// The search stops at `t = 2ps + 2`. Past that point the increments
/// `beta(s+t+1) - 2 beta(t+1) <= beta(s) - beta(t+1)` are negative, because
/// `beta(t+1) > (p-1)(t+1) > p*s >= beta(s)`.
pub fn lb_general(tables: &PadicTables, s: u64) -> GeneralBound {
    let p = tables.prime().get();
    let cap = 2 * p * s + 2;
    let mut best = GeneralBound {
        value: i64::MIN,
        t: 0,
    };
    for t in 0..=cap {
        let value = tables.big_b(s + t) as i64 - 2 * tables.big_b(t) as i64 - s as i64;
        if value > best.value {
            best = GeneralBound { value, t };
        }
    }
    best
}

/// `p s^2 - s`, valid for `s <= p`.
pub fn lb_small(p: Prime, s: u64) -> Result<u64> {
    if s > p.get() {
        return Err(Error::OutOfHypothesis(format!(
            "small-s bound needs s <= p (s = {s}, p = {p})"
        )));
    }
    Ok(p.get() * s * s - s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub p: Prime,
    pub s: u64,
    #[serde(rename = "S")]
    pub s_max: u64,
    pub v_r: u64,
    pub lb_general: GeneralBound,
    pub lb_small: Option<u64>,
    /// `v_r - S - max(applicable bounds)`; negative means a defect.
    pub slack: i64,
    pub equality_small: bool,
    /// Evaluated only when `equality_small` holds.
    pub interval_ok: Option<bool>,
}

impl BoundReport {
    /// Compares a profile against both bounds. Pure; never fails.
    pub fn evaluate(profile: &ValuationProfile, v_r: u64, tables: &PadicTables) -> Self {
        let p = profile.p;
        debug_assert_eq!(p, tables.prime());
        let (s, big_s) = (profile.s_min, profile.s_max);
        let general = lb_general(tables, s);
        let small = lb_small(p, s).ok();
        let gap = v_r as i64 - big_s as i64;
        let strongest = small.map_or(general.value, |b| general.value.max(b as i64));
        let equality_small = small.is_some_and(|b| gap == b as i64);
        BoundReport {
            p,
            s,
            s_max: big_s,
            v_r,
            lb_general: general,
            lb_small: small,
            slack: gap - strongest,
            equality_small,
            interval_ok: equality_small.then(|| profile.covers(s, big_s)),
        }
    }

    pub fn general_holds(&self) -> bool {
        self.v_r as i64 - self.s_max as i64 >= self.lb_general.value
    }

    pub fn small_holds(&self) -> Option<bool> {
        self.lb_small
            .map(|b| self.v_r as i64 - self.s_max as i64 >= b as i64)
    }

    pub fn is_consistent(&self) -> bool {
        self.slack >= 0 && self.interval_ok != Some(false)
    }
}

/// Profile, resultant and bound report for one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    #[serde(with = "json::bigint")]
    pub resultant: BigInt,
    pub profile: ValuationProfile,
    pub bounds: BoundReport,
}

pub fn analyze(f: &IntPolynomial, g: &IntPolynomial, p: Prime) -> Result<Analysis> {
    analyze_with(f, g, p, Execution::default())
}

/// Errors with [`Error::TheoremViolation`] if the profile breaks either bound
/// or the interval property.
pub fn analyze_with(
    f: &IntPolynomial,
    g: &IntPolynomial,
    p: Prime,
    exec: Execution,
) -> Result<Analysis> {
    let profile = valuation_profile_with(f, g, p, exec)?;
    let r = resultant(f, g)?;
    let v_r = vp(&r, p).finite().expect("nonzero resultant");
    let tables = PadicTables::for_prime(p);
    let bounds = BoundReport::evaluate(&profile, v_r, &tables);
    let analysis = Analysis {
        f: f.clone(),
        g: g.clone(),
        resultant: r,
        profile,
        bounds,
    };
    if !analysis.bounds.is_consistent() {
        return Err(Error::TheoremViolation(
            serde_json::to_string(&analysis).expect("serializable"),
        ));
    }
    Ok(analysis)
}
