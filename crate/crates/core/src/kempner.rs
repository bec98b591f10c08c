//! Brute-force counts of polynomial functions modulo prime powers.
//!
//! Two polynomials are identified when they induce the same function
//! `Z/p^s -> Z/p^s` (and, for the `R` count, also agree in the constant term
//! modulo `p^S`). Every class has a representative of degree below
//! `beta(s)`: the falling factorial `x(x-1)...(x-beta(s)+1)` vanishes at 0 and
//! is divisible by `beta(s)!`, hence by `p^s`, at every integer.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::padic::{PadicTables, Prime};
use crate::poly::IntPolynomial;

/// Largest number of coefficient vectors we agree to enumerate.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// Values of a polynomial at `0, 1, ..., modulus - 1`, reduced mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    modulus: u64,
    values: Vec<u64>,
}

impl FunctionTable {
    pub fn of(poly: &IntPolynomial, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let values = (0..modulus)
            .map(|i| {
                poly.evaluate(&BigInt::from(i))
                    .mod_floor(&m)
                    .to_u64()
                    .expect("reduced value fits")
            })
            .collect();
        FunctionTable { modulus, values }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KempnerCount {
    pub p: Prime,
    pub s: u64,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s_max: Option<u64>,
    /// Polynomials of degree below this bound were enumerated.
    pub degree_bound: u64,
    pub count: u64,
    pub expected: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Default degree bound: `beta(s)`, but at least 1 so constants are included.
pub fn default_degree_bound(p: Prime, s: u64) -> u64 {
    PadicTables::for_prime(p).beta(s).max(1)
}

/// Number of distinct functions `Z/p^s -> Z/p^s` induced by integer polynomials.
pub fn count_poly_functions(p: Prime, s: u64) -> Result<KempnerCount> {
    count_poly_functions_with(p, s, None, Execution::default())
}

pub fn count_poly_functions_with(
    p: Prime,
    s: u64,
    degree_bound: Option<u64>,
    exec: Execution,
) -> Result<KempnerCount> {
    let d = degree_bound.unwrap_or_else(|| default_degree_bound(p, s));
    let m = checked_pow(p, s)?;
    let count = enumerate(m, m, None, d, exec)?;
    let b = PadicTables::for_prime(p).big_b(s);
    let expected = checked_pow(p, b)?;
    Ok(KempnerCount {
        p,
        s,
        s_max: None,
        degree_bound: d,
        count,
        expected,
        matches: count == expected,
    })
}

/// `|R_{S,s}|`: distinct pairs (function mod `p^s`, constant term mod `p^S`).
pub fn count_r(p: Prime, big_s: u64, s: u64) -> Result<KempnerCount> {
    count_r_with(p, big_s, s, None, Execution::default())
}

pub fn count_r_with(
    p: Prime,
    big_s: u64,
    s: u64,
    degree_bound: Option<u64>,
    exec: Execution,
) -> Result<KempnerCount> {
    if big_s < s {
        return Err(Error::InvalidParameters(format!(
            "need S >= s (S = {big_s}, s = {s})"
        )));
    }
    let d = degree_bound.unwrap_or_else(|| default_degree_bound(p, s));
    let m = checked_pow(p, s)?;
    let constant_modulus = checked_pow(p, big_s)?;
    // The table only sees coefficients mod p^s; only c0 needs the full range.
    let count = enumerate(m, constant_modulus, Some(constant_modulus), d, exec)?;
    let b = PadicTables::for_prime(p).big_b(s);
    let expected = checked_pow(p, big_s - s + b)?;
    Ok(KempnerCount {
        p,
        s,
        s_max: Some(big_s),
        degree_bound: d,
        count,
        expected,
        matches: count == expected,
    })
}

fn checked_pow(p: Prime, e: u64) -> Result<u64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| p.get().checked_pow(e))
        .ok_or(Error::EnumerationGuard {
            candidates: u128::MAX,
            limit: ENUMERATION_LIMIT,
        })
}

/// Counts distinct keys over all polynomials `c0 + c1 x + ... + c_{d-1} x^{d-1}`
/// with `c0 < c0_range` and the other coefficients `< m`.
///
/// The table of the non-constant part is maintained incrementally: stepping
/// coefficient `j` adds `i^j mod m` to entry `i`, and wrapping from `m-1` to 0
/// is the same step, because `m * i^j ≡ 0`.
fn enumerate(
    m: u64,
    c0_range: u64,
    constant_modulus: Option<u64>,
    d: u64,
    exec: Execution,
) -> Result<u64> {
    assert!(d >= 1);
    let candidates = (m as u128)
        .checked_pow((d - 1) as u32)
        .and_then(|x| x.checked_mul(c0_range as u128))
        .unwrap_or(u128::MAX);
    if candidates > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard {
            candidates,
            limit: ENUMERATION_LIMIT,
        });
    }
    let width = m as usize;
    let high = (d - 1) as usize;
    // powers[j][i] = i^(j+1) mod m
    let powers: Vec<Vec<u64>> = (1..=high as u32)
        .map(|j| (0..m).map(|i| pow_mod(i, j, m)).collect())
        .collect();

    let scan = |top: Option<u64>| -> HashSet<Vec<u64>> {
        let mut seen = HashSet::new();
        // digits[j] is the coefficient of x^(j+1); the top one is fixed per task
        let free = if top.is_some() { high - 1 } else { high };
        let mut digits = vec![0u64; free];
        let mut base: Vec<u64> = match top {
            Some(c) => powers[high - 1].iter().map(|&v| v * c % m).collect(),
            None => vec![0; width],
        };
        let mut key = vec![0u64; width + constant_modulus.is_some() as usize];
        loop {
            for c0 in 0..c0_range {
                let shift = c0 % m;
                for (k, &h) in key.iter_mut().zip(&base) {
                    *k = (h + shift) % m;
                }
                if let Some(cm) = constant_modulus {
                    key[width] = c0 % cm;
                }
                if !seen.contains(&key) {
                    seen.insert(key.clone());
                }
            }
            // odometer step over the free coefficients
            let mut j = 0;
            loop {
                if j == free {
                    return seen;
                }
                for (h, &pw) in base.iter_mut().zip(&powers[j]) {
                    *h = (*h + pw) % m;
                }
                digits[j] += 1;
                if digits[j] < m {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
    };

    let parts: Vec<HashSet<Vec<u64>>> = if high == 0 {
        vec![scan(None)]
    } else {
        exec.map_indexed(width, |top| scan(Some(top as u64)))
    };
    let mut parts = parts.into_iter();
    let mut all = parts.next().unwrap_or_default();
    for part in parts {
        all.extend(part);
    }
    Ok(all.len() as u64)
}

fn pow_mod(base: u64, e: u32, m: u64) -> u64 {
    let mut acc = 1 % m;
    for _ in 0..e {
        acc = acc * base % m;
    }
    acc
}
