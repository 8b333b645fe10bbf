//! Text form of polynomials.
//!
//! Grammar: `term (('+' | '-') term)*` where a term is a `*`-separated
//! product of factors, each factor a rational `-?digits(/digits)?` or a
//! generator name with an optional `^exponent`. Factors are multiplied in
//! the written order, so `xi*x` and `x*xi` are the same element while
//! `eta*xi` and `xi*eta` differ by a sign for odd `xi`, `eta`.

use crate::error::{DkError, Result};
use crate::linear::Scalar;

use super::poly::{Monomial, Poly};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Number(chars[start..i].iter().collect()));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(DkError::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a, F> {
    tokens: Vec<Token>,
    pos: usize,
    lookup: F,
    odd: &'a [bool],
    source: &'a str,
}

impl<F: Fn(&str) -> Option<usize>> Parser<'_, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn err(&self, what: &str) -> DkError {
        DkError::Parse(format!("{what} in polynomial {:?}", self.source))
    }

    fn number(&mut self) -> Result<Scalar> {
        let Some(Token::Number(num)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.err("expected a number"));
        };
        self.pos += 1;
        if self.peek() == Some(&Token::Slash) {
            self.pos += 1;
            let Some(Token::Number(den)) = self.tokens.get(self.pos).cloned() else {
                return Err(self.err("expected a denominator"));
            };
            self.pos += 1;
            format!("{num}/{den}").parse()
        } else {
            num.parse()
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Token::Number(_)) => Ok(Poly::constant(self.number()?)),
            // signed rational, as in `x + -2*y`
            Some(Token::Minus) if matches!(self.tokens.get(self.pos + 1), Some(Token::Number(_))) => {
                self.pos += 1;
                Ok(Poly::constant(-self.number()?))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let idx = (self.lookup)(&name).ok_or_else(|| DkError::UnknownGenerator(name.clone()))?;
                let mut exp = 1u32;
                if self.peek() == Some(&Token::Caret) {
                    self.pos += 1;
                    let Some(Token::Number(e)) = self.tokens.get(self.pos).cloned() else {
                        return Err(self.err("expected an exponent"));
                    };
                    self.pos += 1;
                    exp = e.parse().map_err(|_| self.err("exponent out of range"))?;
                }
                let x = Poly::var(idx);
                Ok((0..exp).fold(Poly::one(), |acc, _| acc.mul(&x, self.odd)))
            }
            _ => Err(self.err("expected a coefficient or generator")),
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f, self.odd);
        }
        Ok(acc)
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut total = Poly::zero();
        let mut sign = Scalar::one();
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            sign = -Scalar::one();
        } else if self.peek() == Some(&Token::Plus) {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            total.add_scaled(&sign, &t);
            match self.peek() {
                None => return Ok(total),
                Some(Token::Plus) => sign = Scalar::one(),
                Some(Token::Minus) => sign = -Scalar::one(),
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }
}

/// Parses a polynomial, resolving generator names with `lookup`.
pub fn parse_poly(s: &str, lookup: impl Fn(&str) -> Option<usize>, odd: &[bool]) -> Result<Poly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(DkError::Parse("empty polynomial".into()));
    }
    Parser { tokens, pos: 0, lookup, odd, source: s }.poly()
}

/// Text form of a monomial without coefficient, e.g. `x^2*xi`; `1` for the
/// empty monomial.
pub fn format_monomial(m: &Monomial, names: &dyn Fn(usize) -> String) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.factors()
        .iter()
        .map(|(i, e)| if *e == 1 { names(*i) } else { format!("{}^{e}", names(*i)) })
        .collect::<Vec<_>>()
        .join("*")
}

/// Text form accepted back by [`parse_poly`]. Every term carries its
/// coefficient, e.g. `1*x^2 - 3/2*y`.
pub fn format_poly(p: &Poly, names: &dyn Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().enumerate() {
        let (neg, abs) = (c.is_negative(), c.abs());
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&abs.to_string());
        if !m.is_one() {
            out.push('*');
            out.push_str(&format_monomial(m, names));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(i: usize) -> String {
        ["x", "xi", "eta"][i].to_string()
    }

    fn lookup(s: &str) -> Option<usize> {
        ["x", "xi", "eta"].iter().position(|n| *n == s)
    }

    const ODD: &[bool] = &[false, true, true];

    #[test]
    fn roundtrip() {
        for s in ["0", "1", "1*x^2 - 3/2*xi", "-2*x*xi + 1*eta", "5/7*x^3*xi*eta"] {
            let p = parse_poly(s, lookup, ODD).unwrap();
            let t = format_poly(&p, &names);
            assert_eq!(parse_poly(&t, lookup, ODD).unwrap(), p, "{s} -> {t}");
        }
    }

    #[test]
    fn written_order_carries_signs() {
        let a = parse_poly("eta*xi", lookup, ODD).unwrap();
        let b = parse_poly("xi*eta", lookup, ODD).unwrap();
        assert_eq!(a, b.neg());
        assert!(parse_poly("xi*xi", lookup, ODD).unwrap().is_zero());
        assert_eq!(parse_poly("x*xi", lookup, ODD).unwrap(), parse_poly("xi*x", lookup, ODD).unwrap());
    }

    #[test]
    fn signed_rationals_after_operators() {
        let p = parse_poly("0*x + -1*xi - -2/3", lookup, ODD).unwrap();
        assert_eq!(p, parse_poly("2/3 - xi", lookup, ODD).unwrap());
        assert!(matches!(parse_poly("x + -xi", lookup, ODD), Err(DkError::Parse(_))));
    }

    #[test]
    fn lenient_leading_generator() {
        let p = parse_poly("x^2 - x", lookup, ODD).unwrap();
        assert_eq!(format_poly(&p, &names), "-1*x + 1*x^2");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("y", lookup, ODD), Err(DkError::UnknownGenerator(_))));
        assert!(matches!(parse_poly("1 +", lookup, ODD), Err(DkError::Parse(_))));
        assert!(matches!(parse_poly("", lookup, ODD), Err(DkError::Parse(_))));
        assert!(matches!(parse_poly("x $", lookup, ODD), Err(DkError::Parse(_))));
        assert!(matches!(parse_poly("1/0", lookup, ODD), Err(DkError::Parse(_))));
    }
}
