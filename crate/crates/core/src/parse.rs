//! Polynomial expressions: `+ - * ^`, parentheses, integer and `a/b` coefficients.
//!
//! `*` may be omitted between adjacent factors (`2x1`, `3(x1+x2)`).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use crate::monomial::TermOrder;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str, start: (usize, usize)) -> Result<Vec<Token>> {
    let (mut line, mut column) = start;
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[s..i].iter().collect();
            column += i - s;
            out.push(Token { tok: Tok::Num(text.parse().expect("digits")), line: l, column: col });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - s;
            out.push(Token { tok: Tok::Ident(chars[s..i].iter().collect()), line: l, column: col });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            other => {
                return Err(Error::Parse { line: l, column: col, message: format!("unexpected character '{other}'") });
            }
        };
        out.push(Token { tok, line: l, column: col });
        i += 1;
        column += 1;
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    names: &'a [String],
    ring: Ring,
    order: TermOrder,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, t: &Token, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { line: t.line, column: t.column, message: message.into() })
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let t = self.bump();
        if t.tok == want {
            Ok(())
        } else {
            self.err(&t, format!("expected {what}, found {}", describe(&t.tok)))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring, self.order);
        let mut sign = match self.peek().tok {
            Tok::Plus => {
                self.bump();
                false
            }
            Tok::Minus => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if sign { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    sign = false;
                }
                Tok::Minus => {
                    self.bump();
                    sign = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(tok: &Tok) -> bool {
        matches!(tok, Tok::Num(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.peek().tok == Tok::Star {
                self.bump();
                let f = self.factor()?;
                acc = acc.mul(&f)?;
            } else if Self::starts_factor(&self.peek().tok) {
                let f = self.factor()?;
                acc = acc.mul(&f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let neg = if self.peek().tok == Tok::Minus {
                self.bump();
                true
            } else {
                false
            };
            let t = self.bump();
            let Tok::Num(n) = &t.tok else {
                return self.err(&t, format!("expected an integer exponent, found {}", describe(&t.tok)));
            };
            let e: i64 = match i64::try_from(n) {
                Ok(e) => e,
                Err(_) => return self.err(&t, "exponent too large"),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match &t.tok {
            Tok::Num(n) => {
                let mut den = BigInt::from(1);
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    let Tok::Num(dn) = &d.tok else {
                        return self.err(&d, "expected an integer denominator");
                    };
                    den = dn.clone();
                }
                let c = match self.ring.field.from_fraction(n, &den) {
                    Ok(c) => c,
                    Err(e) => return self.err(&t, e.to_string()),
                };
                Ok(Polynomial::constant(self.ring, self.order, c))
            }
            Tok::Ident(name) => match self.names.iter().position(|v| v == name) {
                Some(k) => Ok(Polynomial::var(self.ring, self.order, k)),
                None => Err(Error::UnknownVariable { name: name.clone(), line: t.line, column: t.column }),
            },
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            other => self.err(&t, format!("expected a number, variable or '(', found {}", describe(other))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {n}"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses a single polynomial expression.
pub fn parse_polynomial(src: &str, names: &[String], ring: Ring, order: TermOrder) -> Result<Polynomial> {
    let toks = tokenize(src, (1, 1))?;
    let mut p = Parser { toks, pos: 0, names, ring, order };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.err(&t, format!("unexpected {}", describe(&t.tok)));
    }
    Ok(e)
}

/// Parses comma-separated expressions. `start` is the (line, column) of the
/// first character of `src` in the enclosing document, for error positions.
pub fn parse_polynomial_list(
    src: &str,
    start: (usize, usize),
    names: &[String],
    ring: Ring,
    order: TermOrder,
) -> Result<Vec<Polynomial>> {
    let toks = tokenize(src, start)?;
    let mut p = Parser { toks, pos: 0, names, ring, order };
    let mut out = Vec::new();
    if p.peek().tok == Tok::End {
        return Ok(out);
    }
    loop {
        out.push(p.expr()?);
        let t = p.bump();
        match t.tok {
            Tok::Comma => continue,
            Tok::End => return Ok(out),
            ref other => return p.err(&t, format!("expected ',' or end of list, found {}", describe(other))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::default_names;

    fn q(s: &str) -> Result<Polynomial> {
        parse_polynomial(s, &default_names(3), Ring::rational(3), TermOrder::RevLex)
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(q("2x1").unwrap(), q("2*x1").unwrap());
        assert_eq!(q("3(x1+x2)").unwrap(), q("3*x1 + 3*x2").unwrap());
        assert_eq!(q("(x1)(x2)").unwrap(), q("x1*x2").unwrap());
    }

    #[test]
    fn rational_coefficients() {
        let f = q("1/2*x1 - 3/4").unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.display_with(&default_names(3)), "1/2*x1 - 3/4");
    }

    #[test]
    fn error_positions() {
        match q("x1 + ) ") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("{other:?}"),
        }
        match q("x1 + y") {
            Err(Error::UnknownVariable { name, column, .. }) => {
                assert_eq!(name, "y");
                assert_eq!(column, 6);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(q("x1^-2"), Err(Error::Domain(_))));
        assert!(matches!(q("x1 $"), Err(Error::Parse { .. })));
    }

    #[test]
    fn list_positions_span_lines() {
        let r = parse_polynomial_list("x1,\n  x2 +", (4, 4), &default_names(3), Ring::rational(3), TermOrder::RevLex);
        match r {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn char_two_division() {
        let r = Ring::new(1, Field::Prime(2));
        assert!(parse_polynomial("1/2", &default_names(1), r, TermOrder::RevLex).is_err());
    }
}
