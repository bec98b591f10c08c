//! Dense integer polynomials in one variable.

mod parse;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use parse::parse_poly;

/// A polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order with no trailing zeros. The zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `x - root`.
    pub fn linear(root: impl Into<BigInt>) -> Self {
        Self::new(vec![-root.into(), BigInt::one()])
    }

    /// Ascending coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    /// Errors with [`Error::NotMonic`] unless the leading coefficient is 1.
    pub fn require_monic(&self) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::NotMonic(self.to_string()))
        }
    }

    /// `f(n)` by Horner's rule.
    pub fn evaluate(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= n;
            acc += c;
        }
        acc
    }

    pub fn evaluate_i64(&self, n: i64) -> BigInt {
        self.evaluate(&BigInt::from(n))
    }

    /// `f(x + c)`.
    pub fn shift(&self, c: &BigInt) -> Self {
        let step = IntPolynomial::new(vec![c.clone(), BigInt::one()]);
        let mut acc = IntPolynomial::zero();
        for a in self.coeffs.iter().rev() {
            acc = &acc * &step;
            acc = acc + IntPolynomial::constant(a.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Product of an iterator of polynomials; the empty product is 1.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a IntPolynomial>) -> Self {
        factors
            .into_iter()
            .fold(IntPolynomial::one(), |acc, f| &acc * f)
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        IntPolynomial::constant(c)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

/// Canonical form: descending powers with explicit signs, e.g.
/// `x^4 - 2*x^3 + x^2 + 2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[0, 0, 0]), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(p(&[2, 0, 1, -2, 1]).to_string(), "x^4 - 2*x^3 + x^2 + 2");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[-5]).to_string(), "-5");
        assert_eq!(p(&[0, 3, -1]).to_string(), "-x^2 + 3*x");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert!(p(&[7, 1]).is_monic());
        assert!(!p(&[1, 2]).is_monic());
        assert!(!IntPolynomial::zero().is_monic());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, 0, 1]).evaluate_i64(3), BigInt::from(10));
        assert_eq!(IntPolynomial::zero().evaluate_i64(-17), BigInt::zero());
        let falling = IntPolynomial::product(&[
            IntPolynomial::linear(0),
            IntPolynomial::linear(1),
            IntPolynomial::linear(2),
            IntPolynomial::linear(3),
        ]);
        assert_eq!(falling.evaluate_i64(7), BigInt::from(840));
    }

    #[test]
    fn shift_examples() {
        let sq = p(&[0, 0, 1]);
        assert_eq!(sq.shift(&BigInt::one()), p(&[1, 2, 1]));
        let f = p(&[3, -1, 4, 1]);
        assert_eq!(f.shift(&BigInt::zero()), f);
    }

    #[test]
    fn multiply_examples() {
        let x = IntPolynomial::x();
        assert_eq!(&x * &IntPolynomial::linear(1), p(&[0, -1, 1]));
        let f = p(&[5, -2, 1]);
        assert_eq!(&f * &IntPolynomial::one(), f);
        let cubic = IntPolynomial::linear(1).pow(2) * IntPolynomial::linear(2);
        assert_eq!(cubic, p(&[-2, 5, -4, 1]));
        // cross-check the hand expansion at three points
        for n in [-1i64, 4, 10] {
            assert_eq!(
                cubic.evaluate_i64(n),
                BigInt::from((n - 1) * (n - 1) * (n - 2))
            );
        }
    }

    #[test]
    fn pow_zero_and_product_of_nothing() {
        assert_eq!(p(&[1, 1]).pow(0), IntPolynomial::one());
        assert_eq!(IntPolynomial::product(&[]), IntPolynomial::one());
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..=max_deg + 1)
            .prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..=max_deg).prop_map(|mut c| {
            c.push(1);
            IntPolynomial::from_i64s(&c)
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_a_ring_map(f in arb_poly(6), g in arb_poly(6), n in -1000i64..1000) {
            let n = BigInt::from(n);
            prop_assert_eq!((&f * &g).evaluate(&n), f.evaluate(&n) * g.evaluate(&n));
            prop_assert_eq!((&f + &g).evaluate(&n), f.evaluate(&n) + g.evaluate(&n));
            prop_assert_eq!((&f - &g).evaluate(&n), f.evaluate(&n) - g.evaluate(&n));
        }

        #[test]
        fn degree_of_product_is_additive(f in arb_poly(6), g in arb_poly(6)) {
            let prod = &f * &g;
            match (f.degree(), g.degree()) {
                (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn shifts_compose(f in arb_poly(6), a in -20i64..20, b in -20i64..20) {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!(f.shift(&a).shift(&b), f.shift(&(&a + &b)));
        }

        #[test]
        fn shift_matches_evaluation(f in arb_poly(6), c in -20i64..20, n in -50i64..50) {
            let c = BigInt::from(c);
            let n = BigInt::from(n);
            prop_assert_eq!(f.shift(&c).evaluate(&n), f.evaluate(&(&n + &c)));
        }

        #[test]
        fn monicity_is_preserved(f in arb_monic(5), g in arb_monic(5), c in -20i64..20) {
            prop_assert!(f.shift(&BigInt::from(c)).is_monic());
            prop_assert!((&f * &g).is_monic());
            prop_assert_eq!(f.shift(&BigInt::from(c)).degree(), f.degree());
        }

        #[test]
        fn canonical_text_round_trips(f in arb_poly(8)) {
            let text = f.to_string();
            prop_assert_eq!(parse_poly(&text).unwrap(), f);
        }
    }
}
