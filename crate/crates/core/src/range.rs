//! The attained set of `v_p(gcd(f(n), g(n)))` over all integers `n`.
//!
//! The search refines residue classes `n ≡ c (mod p^k)` depth first. Since
//! `f(n) ≡ f(c) (mod p^k)` throughout a class, a valuation `v_p(f(c)) < k` is
//! shared by every member; once the smaller of the two valuations is below
//! `k` the gcd valuation is pinned for the whole class. Every class is pinned
//! by level `v_p(r) + 1`, because the gcd valuation never exceeds `v_p(r)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::json;
use crate::lattice::resultant;
use crate::padic::{vp, Prime, Valuation};
use crate::poly::IntPolynomial;

/// All `n ≡ center (mod p^level)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClass {
    pub center: BigInt,
    pub level: u32,
}

impl ResidueClass {
    pub fn all_integers() -> Self {
        ResidueClass {
            center: BigInt::zero(),
            level: 0,
        }
    }

    /// The `p` subclasses at the next level, in increasing center order.
    pub fn children(&self, p: Prime) -> impl Iterator<Item = ResidueClass> + '_ {
        let step = p.pow(self.level);
        let level = self.level + 1;
        (0..p.get()).map(move |d| ResidueClass {
            center: &self.center + &step * d,
            level,
        })
    }
}

/// Range of `v_p(gcd(f(n), g(n)))`, with the least nonnegative witness per value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationProfile {
    pub p: Prime,
    #[serde(rename = "s")]
    pub s_min: u64,
    #[serde(rename = "S")]
    pub s_max: u64,
    pub attained: BTreeSet<u64>,
    #[serde(with = "json::bigint_values")]
    pub witnesses: BTreeMap<u64, BigInt>,
}

impl ValuationProfile {
    fn from_witnesses(p: Prime, witnesses: BTreeMap<u64, BigInt>) -> Self {
        let attained: BTreeSet<u64> = witnesses.keys().copied().collect();
        ValuationProfile {
            p,
            s_min: *attained.first().expect("nonempty profile"),
            s_max: *attained.last().expect("nonempty profile"),
            attained,
            witnesses,
        }
    }

    /// Whether every integer in `lo..=hi` is attained.
    pub fn covers(&self, lo: u64, hi: u64) -> bool {
        (lo..=hi).all(|v| self.attained.contains(&v))
    }
}

/// `min(v_p(f(n)), v_p(g(n)))`; infinite only at a common root.
pub fn gcd_valuation(f: &IntPolynomial, g: &IntPolynomial, n: &BigInt, p: Prime) -> Valuation {
    vp(&f.evaluate(n), p).min(vp(&g.evaluate(n), p))
}

pub fn valuation_profile(
    f: &IntPolynomial,
    g: &IntPolynomial,
    p: Prime,
) -> Result<ValuationProfile> {
    valuation_profile_with(f, g, p, Execution::default())
}

pub fn valuation_profile_with(
    f: &IntPolynomial,
    g: &IntPolynomial,
    p: Prime,
    exec: Execution,
) -> Result<ValuationProfile> {
    let r = resultant(f, g)?;
    if r.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let v_r = vp(&r, p).finite().expect("nonzero resultant");
    let search = Search {
        f,
        g,
        p,
        cap: v_r as u32 + 1,
        exec,
    };
    let witnesses = search.explore(&ResidueClass::all_integers());
    Ok(ValuationProfile::from_witnesses(p, witnesses))
}

struct Search<'a> {
    f: &'a IntPolynomial,
    g: &'a IntPolynomial,
    p: Prime,
    cap: u32,
    exec: Execution,
}

impl Search<'_> {
    fn explore(&self, class: &ResidueClass) -> BTreeMap<u64, BigInt> {
        let pinned = gcd_valuation(self.f, self.g, &class.center, self.p);
        if pinned < Valuation::Finite(class.level as u64) {
            let v = pinned.finite().expect("finite below level");
            return BTreeMap::from([(v, class.center.clone())]);
        }
        assert!(
            class.level < self.cap,
            "residue class {} mod {}^{} unresolved at the depth cap; gcd valuation exceeds v_p(r)",
            class.center,
            self.p,
            class.level
        );
        let children: Vec<ResidueClass> = class.children(self.p).collect();
        let parts = self.exec.map_slice(&children, |c| self.explore(c));
        let mut merged = BTreeMap::new();
        for part in parts {
            merge_min(&mut merged, part);
        }
        merged
    }
}

fn merge_min(into: &mut BTreeMap<u64, BigInt>, from: BTreeMap<u64, BigInt>) {
    for (v, n) in from {
        into.entry(v)
            .and_modify(|w| {
                if n < *w {
                    *w = n.clone();
                }
            })
            .or_insert(n);
    }
}

/// Factorization of `|n|` (n != 0) into primes by trial division.
///
/// Gives up (with an error) if a cofactor above the trial-division budget
/// cannot be certified prime.
pub fn factor_trial(n: &BigInt) -> Result<Vec<(Prime, u32)>> {
    const BUDGET: u64 = 10_000_000;
    if n.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let mut rest = n.abs();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while !rest.is_one() {
        let dd = BigInt::from(d) * d;
        if dd > rest {
            let last = rest.to_u64().ok_or_else(|| {
                Error::InvalidParameters(format!("prime factor {rest} does not fit in 64 bits"))
            })?;
            out.push((Prime::new(last).expect("cofactor is prime"), 1));
            break;
        }
        if d > BUDGET {
            return Err(Error::InvalidParameters(format!(
                "cannot factor {n} by trial division (cofactor {rest})"
            )));
        }
        let bd = BigInt::from(d);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((Prime::new(d).expect("smallest divisor is prime"), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    Ok(out)
}

/// The set `{ gcd(f(n), g(n)) : n in Z }` assembled from per-prime profiles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdRange {
    #[serde(with = "json::bigint")]
    pub resultant: BigInt,
    pub profiles: Vec<ValuationProfile>,
    #[serde(with = "json::bigint_set")]
    pub values: BTreeSet<BigInt>,
}

pub fn gcd_value_range(f: &IntPolynomial, g: &IntPolynomial) -> Result<GcdRange> {
    gcd_value_range_with(f, g, Execution::default())
}

pub fn gcd_value_range_with(
    f: &IntPolynomial,
    g: &IntPolynomial,
    exec: Execution,
) -> Result<GcdRange> {
    let r = resultant(f, g)?;
    if r.is_zero() {
        return Err(Error::ZeroResultant);
    }
    let mut profiles = Vec::new();
    let mut values = BTreeSet::from([BigInt::one()]);
    for (p, _) in factor_trial(&r)? {
        let profile = valuation_profile_with(f, g, p, exec)?;
        // CRT: residues modulo distinct prime powers are chosen independently.
        values = values
            .iter()
            .flat_map(|v| profile.attained.iter().map(move |&e| v * p.pow(e as u32)))
            .collect();
        profiles.push(profile);
    }
    Ok(GcdRange {
        resultant: r,
        profiles,
        values,
    })
}
