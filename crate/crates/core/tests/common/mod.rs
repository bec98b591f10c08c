//! Brute-force oracles shared by the integration tests. None of these reuse
//! the library's search or elimination code paths.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use polygcd::{IntPolynomial, IntegerMatrix, Prime};

/// Exponent of `p` in `a` by repeated division; `None` for zero.
pub fn naive_vp(a: &BigInt, p: u64) -> Option<u64> {
    if a.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut a = a.clone();
    let mut v = 0;
    while a.is_multiple_of(&p) {
        a /= &p;
        v += 1;
    }
    Some(v)
}

/// `min(v(f(n)), v(g(n)))` for every `n` in `[0, period)`, keyed by value with
/// the least `n` attaining it.
pub fn enumerate_profile(
    f: &IntPolynomial,
    g: &IntPolynomial,
    p: Prime,
    period: u64,
) -> BTreeMap<u64, BigInt> {
    let mut out = BTreeMap::new();
    for n in 0..period {
        let n = BigInt::from(n);
        let vf = naive_vp(&f.evaluate(&n), p.get());
        let vg = naive_vp(&g.evaluate(&n), p.get());
        let v = match (vf, vg) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => panic!("common integer root at {n}"),
        };
        out.entry(v).or_insert(n);
    }
    out
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &IntegerMatrix) -> BigInt {
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let mut minor = IntegerMatrix::zeros(n - 1, n - 1);
        for i in 1..n {
            for (c, jj) in (0..n).filter(|&jj| jj != j).enumerate() {
                minor[(i - 1, c)] = m[(i, jj)].clone();
            }
        }
        let term = &m[(0, j)] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn as_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("fits in u64")
}
