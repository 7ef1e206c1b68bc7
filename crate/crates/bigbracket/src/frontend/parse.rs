//! Expression parser.
//!
//! Grammar (whitespace insignificant, `#` not allowed here — comments are
//! stripped by the file loader):
//!
//! ```text
//! expr      := ["-"] term (("+"|"-") term)*
//! term      := factor ("*" factor)*
//! factor    := rational | generator | "(" expr ")" | factor "^" posint
//! generator := ("x"|"xi"|"p"|"th") posint
//! rational  := int ("/" posint)?
//! ```
//!
//! Exponents on a bare generator are only allowed for even generators; an odd
//! generator power is rejected rather than silently producing zero.

use crate::error::{Error, Result};
use crate::poly::SuperPoly;
use crate::space::{Family, Generator, GeneratorSpace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Gen(Generator),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Token,
    col: usize,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line,
        }
    }

    fn error(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.line, col, msg)
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let col = self.pos + 1;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push(Spanned { tok: Token::Plus, col });
                    self.pos += 1;
                }
                b'-' => {
                    out.push(Spanned { tok: Token::Minus, col });
                    self.pos += 1;
                }
                b'*' => {
                    out.push(Spanned { tok: Token::Star, col });
                    self.pos += 1;
                }
                b'/' => {
                    out.push(Spanned { tok: Token::Slash, col });
                    self.pos += 1;
                }
                b'^' => {
                    out.push(Spanned { tok: Token::Caret, col });
                    self.pos += 1;
                }
                b'(' => {
                    out.push(Spanned { tok: Token::LParen, col });
                    self.pos += 1;
                }
                b')' => {
                    out.push(Spanned { tok: Token::RParen, col });
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let n = BigInt::from_str(text).unwrap();
                    out.push(Spanned { tok: Token::Int(n), col });
                }
                b'a'..=b'z' | b'A'..=b'Z' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let family = Family::from_symbol(name).ok_or_else(|| {
                        self.error(col, format!("unknown generator family `{name}`"))
                    })?;
                    let digit_start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if digit_start == self.pos {
                        return Err(self.error(col, format!("generator `{name}` needs an index")));
                    }
                    let idx_text =
                        std::str::from_utf8(&self.src[digit_start..self.pos]).unwrap();
                    let index: usize = idx_text.parse().map_err(|_| {
                        self.error(col, format!("generator index `{idx_text}` too large"))
                    })?;
                    out.push(Spanned {
                        tok: Token::Gen(Generator::new(family, index)),
                        col,
                    });
                }
                other => {
                    return Err(self.error(col, format!("unexpected character `{}`", other as char)))
                }
            }
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    space: GeneratorSpace,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_col, |s| s.col)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }

    fn expr(&mut self) -> Result<SuperPoly> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.negate();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Token::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SuperPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SuperPoly> {
        let spanned = self
            .bump()
            .ok_or_else(|| self.error("expected a factor"))?;
        let mut odd_gen_base = None;
        let mut base = match spanned.tok {
            Token::Int(n) => {
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Spanned {
                            tok: Token::Int(d), ..
                        }) => {
                            if d.is_zero() || d.is_negative() {
                                return Err(self.error("denominator must be a positive integer"));
                            }
                            value /= BigRational::from_integer(d);
                        }
                        _ => return Err(self.error("expected denominator after `/`")),
                    }
                }
                SuperPoly::scalar(self.space, value)
            }
            Token::Gen(g) => {
                self.space.check(g).map_err(|e| {
                    Error::parse(self.line, spanned.col, e.to_string())
                })?;
                if g.is_odd() {
                    odd_gen_base = Some(g);
                }
                SuperPoly::generator(self.space, g).unwrap()
            }
            Token::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Spanned {
                        tok: Token::RParen, ..
                    }) => inner,
                    _ => return Err(self.error("expected `)`")),
                }
            }
            _ => return Err(self.error("expected a factor")),
        };
        while self.peek() == Some(&Token::Caret) {
            self.bump();
            let exp = match self.bump() {
                Some(Spanned {
                    tok: Token::Int(n), ..
                }) => n,
                _ => return Err(self.error("expected exponent after `^`")),
            };
            if let Some(g) = odd_gen_base {
                return Err(self.error(format!(
                    "exponent applies only to even generators (`{g}` is odd)"
                )));
            }
            let e = exp
                .to_u64()
                .filter(|&e| e >= 1)
                .ok_or_else(|| self.error("exponent must be a positive integer"))?;
            base = base.pow(e);
        }
        Ok(base)
    }
}

/// Parse an expression in the given space. Errors carry 1-based positions.
pub fn parse_expression(text: &str, space: GeneratorSpace) -> Result<SuperPoly> {
    parse_expression_at(text, space, 1)
}

/// Parse with an explicit source line number (used by the file loader).
pub fn parse_expression_at(
    text: &str,
    space: GeneratorSpace,
    line: usize,
) -> Result<SuperPoly> {
    let tokens = Lexer::new(text, line).tokens()?;
    let end_col = text.len() + 1;
    let mut parser = Parser {
        tokens,
        pos: 0,
        space,
        line,
        end_col,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input after expression"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff_int;

    fn sp(n: usize, r: usize) -> GeneratorSpace {
        GeneratorSpace::new(n, r)
    }

    #[test]
    fn parses_odd_product() {
        let s = sp(0, 2);
        let p = parse_expression("th1*th2", s).unwrap();
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.max_total_weight(), 2);
    }

    #[test]
    fn anticommutation_makes_terms_add() {
        let s = sp(1, 2);
        let p = parse_expression("1/2*x1*xi1*xi2 - xi2*xi1*x1*1/2", s).unwrap();
        assert_eq!(p, parse_expression("x1*xi1*xi2", s).unwrap());
    }

    #[test]
    fn odd_square_is_zero() {
        let s = sp(0, 1);
        assert!(parse_expression("th1*th1", s).unwrap().is_zero());
    }

    #[test]
    fn rational_and_power_and_parens() {
        let s = sp(2, 0);
        let p = parse_expression("3/4*(x1 + x2)^2 - x1*x2*3/2", s).unwrap();
        let q = parse_expression("3/4*x1^2 + 3/4*x2^2", s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unary_minus() {
        let s = sp(1, 0);
        let p = parse_expression("-x1 + 2*x1", s).unwrap();
        assert_eq!(p, parse_expression("x1", s).unwrap());
        assert_eq!(
            parse_expression("-3", s).unwrap(),
            SuperPoly::scalar(s, coeff_int(-3))
        );
    }

    #[test]
    fn rejects_unknown_generator() {
        let s = sp(1, 1);
        let err = parse_expression("y1", s).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
    }

    #[test]
    fn rejects_out_of_range_index_with_position() {
        let s = sp(1, 1);
        match parse_expression("x1 + xi2", s).unwrap_err() {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 6);
            }
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn rejects_odd_generator_power() {
        let s = sp(0, 1);
        assert!(parse_expression("xi1^2", s).is_err());
    }

    #[test]
    fn rejects_trailing_garbage() {
        let s = sp(1, 0);
        assert!(parse_expression("x1 x1", s).is_err());
        assert!(parse_expression("x1 +", s).is_err());
        assert!(parse_expression("(x1", s).is_err());
    }
}
