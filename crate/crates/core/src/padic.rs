//! p-adic valuations and the factorial-valuation functions α, β and B.
//!
//! `alpha(j) = v_p(j!)` (Legendre's sum), `beta(m)` is the least `j` with
//! `alpha(j) >= m`, and `big_b(s)` is the partial sum `beta(1) + ... + beta(s)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A prime number, checked by trial division on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `p^e` as a big integer.
    pub fn pow(self, e: u32) -> BigInt {
        num_traits::pow(BigInt::from(self.0), e as usize)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

impl<'de> Deserialize<'de> for Prime {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let p = u64::deserialize(d)?;
        Prime::new(p).map_err(serde::de::Error::custom)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Exponent of a prime in an integer; `v(0)` is [`Valuation::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl From<u64> for Valuation {
    fn from(v: u64) -> Self {
        Valuation::Finite(v)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u64(*v),
            Valuation::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// `v_p(a)`.
pub fn vp(a: &BigInt, p: Prime) -> Valuation {
    if a.is_zero() {
        return Valuation::Infinite;
    }
    let modulus = BigUint::from(p.get());
    let mut n = a.magnitude().clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&modulus);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

/// `v_p(a)` for a machine integer.
pub fn vp_u64(mut a: u64, p: Prime) -> Valuation {
    if a == 0 {
        return Valuation::Infinite;
    }
    let mut v = 0;
    while a.is_multiple_of(p.get()) {
        a /= p.get();
        v += 1;
    }
    Valuation::Finite(v)
}

/// `v_p(j!)` by Legendre's formula.
pub fn alpha(j: u64, p: Prime) -> u64 {
    let mut total = 0;
    let mut q = j;
    while q > 0 {
        q /= p.get();
        total += q;
    }
    total
}

/// Least `j` with `alpha(j) >= m`.
pub fn beta(m: u64, p: Prime) -> u64 {
    if m == 0 {
        return 0;
    }
    // alpha(j) < j/(p-1), so nothing at or below (p-1)*m qualifies.
    let mut j = (p.get() - 1) * m;
    while alpha(j, p) < m {
        j += 1;
    }
    debug_assert!(j <= p.get() * m);
    j
}

/// `B(s) = beta(1) + ... + beta(s)`.
pub fn big_b(s: u64, p: Prime) -> u64 {
    (1..=s).map(|m| beta(m, p)).sum()
}

/// α/β/B for a fixed prime with a lazily filled β cache.
#[derive(Debug)]
pub struct PadicTables {
    p: Prime,
    // beta_cache[i] = beta(i + 1)
    beta_cache: RwLock<Vec<u64>>,
}

impl Clone for PadicTables {
    fn clone(&self) -> Self {
        PadicTables {
            p: self.p,
            beta_cache: RwLock::new(self.beta_cache.read().unwrap().clone()),
        }
    }
}

impl PadicTables {
    pub fn new(p: u64) -> Result<Self> {
        Ok(Self::for_prime(Prime::new(p)?))
    }

    pub fn for_prime(p: Prime) -> Self {
        PadicTables {
            p,
            beta_cache: RwLock::new(Vec::new()),
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn alpha(&self, j: u64) -> u64 {
        alpha(j, self.p)
    }

    pub fn beta(&self, m: u64) -> u64 {
        if m == 0 {
            return 0;
        }
        let idx = (m - 1) as usize;
        if let Some(&b) = self.beta_cache.read().unwrap().get(idx) {
            return b;
        }
        let mut cache = self.beta_cache.write().unwrap();
        // Another writer may have filled it meanwhile; extending is idempotent.
        let mut j = cache.last().copied().unwrap_or(0);
        while cache.len() <= idx {
            let target = cache.len() as u64 + 1;
            while alpha(j, self.p) < target {
                j += 1;
            }
            assert!(j <= self.p.get() * target, "beta({target}) exceeded p*m");
            cache.push(j);
        }
        cache[idx]
    }

    pub fn big_b(&self, s: u64) -> u64 {
        if s == 0 {
            return 0;
        }
        self.beta(s);
        let cache = self.beta_cache.read().unwrap();
        cache[..s as usize].iter().sum()
    }

    /// Snapshot of `beta(1..=m)`.
    pub fn beta_prefix(&self, m: u64) -> Vec<u64> {
        (1..=m).map(|k| self.beta(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    // Independent oracle: build j! and take its valuation directly.
    fn factorial_valuation(j: u64, p: Prime) -> u64 {
        let mut f = BigInt::from(1);
        for i in 1..=j {
            f *= i;
        }
        vp(&f, p).finite().unwrap()
    }

    #[test]
    fn vp_examples() {
        assert_eq!(vp(&BigInt::from(12), pr(2)), Valuation::Finite(2));
        assert_eq!(vp(&BigInt::from(-8), pr(2)), Valuation::Finite(3));
        assert_eq!(vp(&BigInt::from(0), pr(5)), Valuation::Infinite);
        assert_eq!(vp_u64(0, pr(5)), Valuation::Infinite);
        assert_eq!(vp_u64(250, pr(5)), Valuation::Finite(3));
    }

    #[test]
    fn rejects_non_primes() {
        for n in [0, 1, 4, 9, 15, 91, 221] {
            assert_eq!(Prime::new(n), Err(Error::NotPrime(n)));
        }
        assert!(PadicTables::new(6).is_err());
        for p in [2, 3, 5, 7, 97, 101, 257] {
            assert!(Prime::new(p).is_ok());
        }
    }

    #[test]
    fn valuation_ordering_and_sum() {
        let inf = Valuation::Infinite;
        let three = Valuation::Finite(3);
        assert!(inf > three);
        assert_eq!(inf.min(three), three);
        assert_eq!(inf + three, inf);
        assert_eq!(three + Valuation::Finite(4), Valuation::Finite(7));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(7, pr(3)), 2);
        assert_eq!(alpha(0, pr(5)), 0);
        assert_eq!(alpha(4, pr(2)), factorial_valuation(4, pr(2)));
        assert_eq!(alpha(4, pr(2)), 3);
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            for j in 0..p.get() * p.get() {
                assert_eq!(alpha(j, p), j / p.get());
            }
            assert_eq!(alpha(p.get() * p.get(), p), p.get() + 1);
        }
    }

    #[test]
    fn alpha_matches_factorial_oracle() {
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            let mut fact = BigInt::from(1);
            for j in 0..=60u64 {
                if j > 0 {
                    fact *= j;
                }
                assert_eq!(Valuation::Finite(alpha(j, p)), vp(&fact, p), "j={j} p={p}");
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(2, pr(3)), 6);
        assert_eq!(beta(0, pr(3)), 0);
        assert_eq!(beta(3, pr(2)), 4);
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            for m in 1..=p.get() {
                assert_eq!(beta(m, p), p.get() * m);
            }
        }
    }

    #[test]
    fn beta_by_scan_oracle() {
        for p in [2, 3, 5] {
            let p = pr(p);
            let t = PadicTables::for_prime(p);
            for m in 0..=40u64 {
                let scanned = (0..).find(|&j| factorial_valuation(j, p) >= m).unwrap();
                assert_eq!(beta(m, p), scanned);
                assert_eq!(t.beta(m), scanned);
            }
        }
    }

    #[test]
    fn big_b_examples() {
        assert_eq!(big_b(2, pr(3)), 9);
        assert_eq!(big_b(0, pr(5)), 0);
        assert_eq!(big_b(3, pr(2)), 10);
        let t = PadicTables::new(2).unwrap();
        assert_eq!(t.beta_prefix(3), vec![2, 4, 4]);
        assert_eq!(t.big_b(3), 10);
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            let t = PadicTables::for_prime(p);
            for s in 1..=p.get() {
                assert_eq!(big_b(s, p), p.get() * s * (s + 1) / 2);
                assert_eq!(t.big_b(s), big_b(s, p));
            }
        }
    }

    #[test]
    fn superadditive_alpha_subadditive_beta() {
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            let t = PadicTables::for_prime(p);
            for a in 0..=200 {
                for b in 0..=200 {
                    assert!(alpha(a + b, p) >= alpha(a, p) + alpha(b, p));
                }
            }
            for a in 0..=100 {
                for b in 0..=100 {
                    assert!(t.beta(a + b) <= t.beta(a) + t.beta(b));
                }
            }
        }
    }

    #[test]
    fn beta_growth_floor_and_cache_invariants() {
        for p in [2, 3, 5, 7, 11] {
            let t = PadicTables::new(p).unwrap();
            let mut prev = 0;
            for m in 1..=300 {
                let b = t.beta(m);
                assert!(b > (p - 1) * m);
                assert!(b >= prev);
                assert!(t.alpha(b) >= m && t.alpha(b - 1) < m);
                prev = b;
            }
        }
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let t = PadicTables::new(3).unwrap();
        std::thread::scope(|s| {
            for k in 0..4 {
                let t = &t;
                s.spawn(move || {
                    for m in (0..200).rev().skip(k) {
                        assert_eq!(t.beta(m), beta(m, Prime(3)));
                    }
                });
            }
        });
    }

    proptest! {
        #[test]
        fn vp_is_multiplicative(a in 1i64..1_000_000, b in 1i64..1_000_000, sa: bool, pi in 0usize..4) {
            let p = pr([2, 3, 5, 7][pi]);
            let a = if sa { -a } else { a };
            let prod = BigInt::from(a) * BigInt::from(b);
            prop_assert_eq!(vp(&prod, p), vp(&BigInt::from(a), p) + vp(&BigInt::from(b), p));
        }
    }
}
