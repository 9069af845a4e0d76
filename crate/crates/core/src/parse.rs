//! Parser for polynomials written as sums of terms in `x`, such as
//! `2*x^3 - x + 5` or `x^4+1`.
//!
//! A term is an optional sign, an optional integer coefficient, an optional
//! `*`, and an optional `x` with an optional `^exponent`. Like terms are
//! collected. Both `-` and `−` (U+2212) are accepted as minus signs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::IntPoly;

/// Exponents above this are rejected to keep allocation bounded.
pub const MAX_EXPONENT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsePolyError {
    /// Character offset of the problem.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParsePolyError {}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParsePolyError> {
        Err(ParsePolyError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-' | '\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }
}

fn is_var(c: Option<char>) -> bool {
    matches!(c, Some('x' | 'X'))
}

pub fn parse_poly(input: &str) -> Result<IntPoly, ParsePolyError> {
    let mut lx = Lexer {
        chars: input.chars().collect(),
        pos: 0,
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    if lx.peek().is_none() {
        return lx.error("empty polynomial");
    }
    let mut first = true;
    while lx.peek().is_some() {
        let negative = match lx.sign() {
            Some(neg) => neg,
            None if first => false,
            None => return lx.error("expected '+' or '-'"),
        };
        first = false;

        let coeff = lx.digits();
        if coeff.is_some() && lx.eat('*') && !is_var(lx.peek()) {
            return lx.error("expected 'x' after '*'");
        }
        let exponent = if is_var(lx.peek()) {
            lx.pos += 1;
            if lx.eat('^') {
                let at = lx.pos;
                let Some(e) = lx.digits() else {
                    return lx.error("expected an exponent after '^'");
                };
                match e.parse::<usize>() {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => {
                        return Err(ParsePolyError {
                            position: at,
                            message: format!("exponent exceeds {MAX_EXPONENT}"),
                        })
                    }
                }
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            return match lx.peek() {
                Some(c) => lx.error(format!("unexpected character {c:?}")),
                None => lx.error("expected a term"),
            };
        };

        let mut c: BigInt = match coeff {
            Some(d) => d.parse().expect("ascii digits"),
            None => BigInt::from(1),
        };
        if negative {
            c = -c;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::zero());
        }
        coeffs[exponent] += c;
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_forms() {
        assert_eq!(parse_poly("x^4 + 1").unwrap(), IntPoly::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(parse_poly("2*x^3 - x + 5").unwrap(), IntPoly::from_i64s(&[5, -1, 0, 2]));
        assert_eq!(parse_poly("−3x^2−1").unwrap(), IntPoly::from_i64s(&[-1, 0, -3]));
        assert_eq!(parse_poly("x + x").unwrap(), IntPoly::from_i64s(&[0, 2]));
        assert_eq!(parse_poly("x - x").unwrap(), IntPoly::zero());
        assert_eq!(parse_poly(" 7 ").unwrap(), IntPoly::from_i64s(&[7]));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse_poly("x^").unwrap_err().position, 2);
        assert_eq!(parse_poly("x + * 2").unwrap_err().position, 4);
        assert_eq!(parse_poly("x y").unwrap_err().position, 2);
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x^2000000").is_err());
        assert!(parse_poly("3*").is_err());
    }

    #[test]
    fn display_round_trips() {
        for c in [
            vec![5, -1, 0, 2],
            vec![-1, 0, -3],
            vec![0, -1],
            vec![0],
            vec![12, 8, 0, 0, 1],
        ] {
            let f = IntPoly::from_i64s(&c);
            assert_eq!(parse_poly(&f.to_string()).unwrap(), f);
        }
    }
}
