//! Explicit pairs that make the lower bounds sharp, with self-certification.
//!
//! * large: `f = prod_{j < beta(s)} (x - j)`, `g = p^s + prod_{i < p} (x - i)^{s+1}`;
//!   gcd valuation is `s` at every integer and `v_p(r) = s * beta(s)`.
//! * small: for `0 <= s <= S` a pair with min `s`, max `S` and
//!   `v_p(r) = p s^2 - s + S`.

use serde::{Deserialize, Serialize};

use crate::bounds::{analyze_with, Analysis};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::padic::{PadicTables, Prime};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionKind {
    Large,
    Small,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub min: u64,
    pub max: u64,
    pub v_r: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub p: Prime,
    pub s: u64,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none", default)]
    pub s_max: Option<u64>,
    pub expected: Expected,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub f: IntPolynomial,
    pub g: IntPolynomial,
    pub spec: ConstructionSpec,
}

/// `(x - root)^e`, or 1 when `e == 0`.
fn linear_power(root: impl Into<num_bigint::BigInt>, e: u64) -> IntPolynomial {
    if e == 0 {
        IntPolynomial::one()
    } else {
        IntPolynomial::linear(root).pow(u32::try_from(e).expect("exponent fits u32"))
    }
}

pub fn construct_large(p: Prime, s: u64) -> Construction {
    let beta_s = PadicTables::for_prime(p).beta(s);
    let falling: Vec<IntPolynomial> = (0..beta_s).map(IntPolynomial::linear).collect();
    let f = IntPolynomial::product(&falling);
    let residues: Vec<IntPolynomial> = (0..p.get()).map(|i| linear_power(i, s + 1)).collect();
    let g = &IntPolynomial::constant(p.pow(s as u32)) + &IntPolynomial::product(&residues);
    Construction {
        f,
        g,
        spec: ConstructionSpec {
            kind: ConstructionKind::Large,
            p,
            s,
            s_max: None,
            expected: Expected {
                min: s,
                max: s,
                v_r: s * beta_s,
            },
            note: None,
        },
    }
}

pub fn construct_small(p: Prime, s: u64, big_s: u64) -> Result<Construction> {
    if s > big_s {
        return Err(Error::InvalidParameters(format!(
            "need s <= S (s = {s}, S = {big_s})"
        )));
    }
    let pv = p.get();
    if pv == 2 && s >= 2 && big_s < 2 * s + 1 {
        return Err(Error::UnsupportedCase(format!(
            "p = 2 and s = {s} >= 2 requires 2s+1 <= S (got S = {big_s})"
        )));
    }
    let mut note = None;
    let (f, g) = if s == 0 && big_s == 0 {
        (IntPolynomial::one(), IntPolynomial::x())
    } else if s == 0 {
        (
            IntPolynomial::x(),
            IntPolynomial::linear(p.pow(big_s as u32)),
        )
    } else if pv == 2 && s == 1 {
        (
            IntPolynomial::x() * IntPolynomial::linear(1),
            IntPolynomial::linear(p.pow(big_s as u32)) * IntPolynomial::linear(3),
        )
    } else if pv == 2 {
        let f = IntPolynomial::product(&[
            IntPolynomial::x(),
            linear_power(2, s - 1),
            linear_power(1, s),
        ]);
        let g = IntPolynomial::product(&[
            IntPolynomial::linear(p.pow((big_s + 2 - 2 * s) as u32)),
            linear_power(4, s - 1),
            linear_power(3, s),
        ]);
        (f, g)
    } else {
        if s == 1 {
            note = Some(
                "odd p with s = 1 uses the general odd-p pair; x(x-1) is not divisible by p at every integer"
                    .to_string(),
            );
        }
        let mut f_factors = vec![IntPolynomial::x(), linear_power(2 * pv, s - 1)];
        let mut g_factors = vec![
            IntPolynomial::linear(p.pow((big_s - s + 1) as u32)),
            linear_power(pv, s - 1),
        ];
        for j in 1..pv {
            f_factors.push(linear_power(j, s));
            g_factors.push(linear_power(j + pv, s));
        }
        (
            IntPolynomial::product(&f_factors),
            IntPolynomial::product(&g_factors),
        )
    };
    Ok(Construction {
        f,
        g,
        spec: ConstructionSpec {
            kind: ConstructionKind::Small,
            p,
            s,
            s_max: Some(big_s),
            expected: Expected {
                min: s,
                max: big_s,
                v_r: pv * s * s - s + big_s,
            },
            note,
        },
    })
}

/// Result of round-tripping a construction through [`analyze_with`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub spec: ConstructionSpec,
    pub observed: Expected,
    pub certified: bool,
    pub mismatches: Vec<String>,
    pub analysis: Analysis,
}

pub fn certify(c: &Construction) -> Result<Certificate> {
    certify_with(c, Execution::default())
}

pub fn certify_with(c: &Construction, exec: Execution) -> Result<Certificate> {
    let analysis = analyze_with(&c.f, &c.g, c.spec.p, exec)?;
    let b = &analysis.bounds;
    let observed = Expected {
        min: b.s,
        max: b.s_max,
        v_r: b.v_r,
    };
    let want = c.spec.expected;
    let mut mismatches = Vec::new();
    for (what, got, exp) in [
        ("min", observed.min, want.min),
        ("max", observed.max, want.max),
        ("v_r", observed.v_r, want.v_r),
    ] {
        if got != exp {
            mismatches.push(format!("{what}: expected {exp}, observed {got}"));
        }
    }
    if c.spec.kind == ConstructionKind::Small && c.spec.s <= c.spec.p.get() {
        if !b.equality_small {
            mismatches.push("small-s bound is not attained".to_string());
        }
        if b.interval_ok != Some(true) {
            mismatches.push("attained set misses part of [s, S]".to_string());
        }
    }
    Ok(Certificate {
        spec: c.spec.clone(),
        observed,
        certified: mismatches.is_empty(),
        mismatches,
        analysis,
    })
}
