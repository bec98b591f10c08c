//! Recursive-descent parser for polynomial expressions in `x`.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := 'x' | int | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Juxtaposition (`2x`) is rejected.

use num_bigint::BigInt;

use super::IntPolynomial;
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 10_000;

/// Parses and expands a polynomial expression over the integers.
pub fn parse_poly(text: &str) -> Result<IntPolynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(poly),
        Some(b'x' | b'(' | b'0'..=b'9') => {
            Err(parser.error("implicit multiplication is not allowed; use '*'"))
        }
        Some(c) => Err(parser.error(format!("unexpected '{}'", c as char))),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Next non-whitespace byte, without consuming it.
    fn lookahead(&mut self) -> Option<u8> {
        self.skip_ws();
        self.peek()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<IntPolynomial> {
        let negate = match self.lookahead() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.lookahead() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let mut acc = self.factor()?;
        while self.lookahead() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IntPolynomial> {
        let base = self.base()?;
        if self.lookahead() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("expected a nonnegative integer exponent"));
        }
        let exponent: u32 = match digits.parse() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("exponent exceeds {MAX_EXPONENT}"),
                })
            }
        };
        Ok(base.pow(exponent))
    }

    fn base(&mut self) -> Result<IntPolynomial> {
        match self.lookahead() {
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPolynomial::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.lookahead() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let start = self.pos;
                let digits = self.digits();
                if matches!(self.peek(), Some(b'.' | b'e' | b'E' | b'/')) {
                    return Err(Error::NonIntegerLiteral { position: start });
                }
                let value: BigInt = digits.parse().expect("ascii digits");
                Ok(IntPolynomial::constant(value))
            }
            Some(b'.') => Err(Error::NonIntegerLiteral { position: self.pos }),
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(text: &str) -> Vec<i64> {
        parse_poly(text)
            .unwrap()
            .coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(coeffs("x^2+x-1"), vec![-1, 1, 1]);
        assert_eq!(coeffs("(x-1)*(x-2)"), vec![2, -3, 1]);
        assert_eq!(coeffs("2+(x*(x-1))^2"), vec![2, 0, 1, -2, 1]);
    }

    #[test]
    fn whitespace_and_signs() {
        assert_eq!(coeffs("  x ^ 2 \t- 2 * x + 1 "), vec![1, -2, 1]);
        assert_eq!(coeffs("-x^2 + 3*x"), vec![0, 3, -1]);
        assert_eq!(coeffs("(-3)*x"), vec![0, -3]);
        assert_eq!(coeffs("x^0"), vec![1]);
        assert_eq!(coeffs("0"), Vec::<i64>::new());
        assert_eq!(coeffs("x - x"), Vec::<i64>::new());
    }

    #[test]
    fn big_literals_are_exact() {
        let f = parse_poly("x + 123456789012345678901234567890").unwrap();
        assert_eq!(
            f.coefficients()[0].to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn rejects_implicit_multiplication() {
        for text in ["2x", "x(x+1)", "(x)(x)", "x 2"] {
            assert!(
                matches!(parse_poly(text), Err(Error::Syntax { .. })),
                "{text} should not parse"
            );
        }
    }

    #[test]
    fn rejects_non_integers() {
        assert_eq!(
            parse_poly("x + 1.5"),
            Err(Error::NonIntegerLiteral { position: 4 })
        );
        assert_eq!(
            parse_poly(".5*x"),
            Err(Error::NonIntegerLiteral { position: 0 })
        );
    }

    #[test]
    fn reports_positions() {
        assert_eq!(
            parse_poly("x + * 2"),
            Err(Error::Syntax {
                position: 4,
                message: "unexpected '*'".into()
            })
        );
        assert!(matches!(
            parse_poly("(x+1"),
            Err(Error::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_poly(""),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_poly("x^"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_poly("x^2^3"),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_poly("y+1"),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_poly("x^99999"),
            Err(Error::Syntax { position: 2, .. })
        ));
    }
}
