//! Polynomial text grammar.
//!
//! Coefficients are integers or `p/q` rationals, `^` denotes powers, `*` is
//! optional between factors (juxtaposition like `xz` works when the ring's
//! variables are single letters), and parenthesized subexpressions are
//! allowed on input. The canonical printed form (see `MultiPoly`'s `Display`)
//! is fully expanded with explicit `*`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::multipoly::MultiPoly;
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str, vars: &[&str]) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = tok {
            toks.push((t, i));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
            }
            toks.push((Tok::Int(s.parse().unwrap()), start));
            continue;
        }
        if c.is_alphabetic() {
            // Longest declared variable name starting here.
            let rest: String = chars[i..].iter().collect();
            let hit = vars
                .iter()
                .filter(|v| rest.starts_with(**v))
                .max_by_key(|v| v.len());
            match hit {
                Some(v) => {
                    toks.push((Tok::Var(v.to_string()), i));
                    i += v.chars().count();
                    continue;
                }
                None => {
                    return Err(ParseError {
                        message: format!("unknown variable starting at `{c}`"),
                        position: i,
                    })
                }
            }
        }
        return Err(ParseError {
            message: format!("unexpected character `{c}`"),
            position: i,
        });
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> ParseError {
        let position = self
            .toks
            .get(self.pos)
            .map(|(_, p)| *p)
            .unwrap_or(usize::MAX);
        ParseError {
            message: msg.to_string(),
            position,
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                neg = true;
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                // Juxtaposition: a new factor starts immediately.
                Some(Tok::Var(_)) | Some(Tok::LParen) | Some(Tok::Int(_)) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        let mut base = self.atom()?;
        while let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    base = base.pow(e);
                }
                _ => return Err(self.err("expected integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                // Rational literal `p/q` only when a `/` directly follows.
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(self.err("zero denominator"));
                            }
                            Ok(MultiPoly::constant(self.vars, Rational::new(n, d)))
                        }
                        _ => Err(self.err("expected integer denominator after `/`")),
                    }
                } else {
                    Ok(MultiPoly::constant(self.vars, Rational::from_integer(n)))
                }
            }
            Some(Tok::Var(v)) => Ok(MultiPoly::var(self.vars, &v).unwrap()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(self.err("expected `)`")),
                }
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

/// Parses a polynomial in the ring with the given ordered variables.
pub fn parse_poly(input: &str, vars: &[&str]) -> Result<MultiPoly, ParseError> {
    let toks = lex(input, vars)?;
    if toks.is_empty() {
        return Err(ParseError {
            message: "empty input".to_string(),
            position: 0,
        });
    }
    let mut p = Parser { toks, pos: 0, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn parses_grammar_examples() {
        let a = parse_poly("x^2*z - y^3", &XYZ).unwrap();
        assert_eq!(a.to_string(), "x^2*z - y^3");
        // Implicit products and parens on input.
        let b = parse_poly("(xz+y^2)((xz+y^2)z + 2x^2y) - x^5", &XYZ).unwrap();
        assert_eq!(b.total_degree(), 5);
        let c = parse_poly("(x*z + y^2)*((x*z + y^2)*z + 2*x^2*y) - x^5", &XYZ).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn rational_coefficients() {
        let a = parse_poly("1/2*x - 3*y + 5/7", &XYZ).unwrap();
        assert_eq!(a.to_string(), "1/2*x - 3*y + 5/7");
        assert_eq!(parse_poly(&a.to_string(), &XYZ).unwrap(), a);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x +", &XYZ).is_err());
        assert!(parse_poly("w^2", &XYZ).is_err());
        assert!(parse_poly("x^y", &XYZ).is_err());
        assert!(parse_poly("1/0", &XYZ).is_err());
    }
}
