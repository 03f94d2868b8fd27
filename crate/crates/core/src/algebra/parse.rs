//! Parser for the shared polynomial expression grammar:
//! identifiers `[A-Za-z_][A-Za-z0-9_]*`, integer and `p/q` rational
//! literals, operators `+ - * ^`, parentheses. `w` is an ordinary
//! variable; the cyclotomic generator is spelled `omega`.

use num::bigint::BigInt;

use super::field::Field;
use super::monomial::Ring;
use super::poly::Polynomial;
use super::rational::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Slash,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                toks.push(Tok::Int(s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                toks.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

/// Expression tree of the shared grammar.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rat),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.to_string().parse().map_err(|_| Error::Parse("exponent out of range".into()))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(Error::Parse("expected integer exponent after `^`".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Int(n)) => {
                // rational literal p/q
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(Error::Parse("zero denominator".into()));
                            }
                            Ok(Expr::Num(Rat::new(n, d)))
                        }
                        _ => Err(Error::Parse("expected integer after `/`".into())),
                    }
                } else {
                    Ok(Expr::Num(Rat::from_integer(n)))
                }
            }
            Some(Tok::Ident(s)) => Ok(Expr::Ident(s)),
            Some(Tok::Minus) => {
                let inner = self.factor()?;
                Ok(Expr::Neg(Box::new(inner)))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

fn collect_idents(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Num(_) => {}
        Expr::Ident(s) => {
            if s != "omega" && !out.contains(s) {
                out.push(s.clone());
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) => collect_idents(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            collect_idents(a, out);
            collect_idents(b, out);
        }
    }
}

/// Ring spanned by the identifiers of an expression, in order of first
/// appearance. `omega` never becomes a variable.
pub fn ring_of_expr(e: &Expr) -> Ring {
    let mut idents = Vec::new();
    collect_idents(e, &mut idents);
    Ring::new(&idents)
}

pub fn expr_to_poly<F: Field>(e: &Expr, ring: &Ring) -> Result<Polynomial<F>> {
    match e {
        Expr::Num(q) => Ok(Polynomial::constant(ring, F::from_rat(q.clone()))),
        Expr::Ident(s) => {
            if s == "omega" {
                let w = F::omega().ok_or_else(|| {
                    Error::Parse("`omega` is not available over this coefficient field".into())
                })?;
                return Ok(Polynomial::constant(ring, w));
            }
            Polynomial::var_named(ring, s)
        }
        Expr::Neg(a) => Ok(expr_to_poly::<F>(a, ring)?.neg()),
        Expr::Add(a, b) => Ok(expr_to_poly::<F>(a, ring)?.add(&expr_to_poly(b, ring)?)),
        Expr::Sub(a, b) => Ok(expr_to_poly::<F>(a, ring)?.sub(&expr_to_poly(b, ring)?)),
        Expr::Mul(a, b) => Ok(expr_to_poly::<F>(a, ring)?.mul(&expr_to_poly(b, ring)?)),
        Expr::Pow(a, k) => Ok(expr_to_poly::<F>(a, ring)?.pow(*k)),
    }
}

/// One-shot parse over an explicit ring.
pub fn parse_poly<F: Field>(src: &str, ring: &Ring) -> Result<Polynomial<F>> {
    expr_to_poly(&parse_expr(src)?, ring)
}

/// One-shot parse, inferring the ring from the expression.
pub fn parse_poly_auto<F: Field>(src: &str) -> Result<(Polynomial<F>, Ring)> {
    let e = parse_expr(src)?;
    let ring = ring_of_expr(&e);
    Ok((expr_to_poly(&e, &ring)?, ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::Cyclotomic;

    #[test]
    fn parse_round_trip() {
        let (p, ring) = parse_poly_auto::<Rat>("x^2 - y^3 - z^2 + w^3").unwrap();
        assert_eq!(ring.var_names(), ["x", "y", "z", "w"]);
        assert_eq!(p.to_string(), "-y^3 + w^3 + x^2 - z^2");
        let back: Polynomial<Rat> = parse_poly(&p.to_string(), &ring).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rational_literals_and_parens() {
        let (p, _) = parse_poly_auto::<Rat>("3/2*x - (x - 1/2)").unwrap();
        assert_eq!(p.to_string(), "1/2*x + 1/2");
    }

    #[test]
    fn omega_is_a_constant() {
        let (p, ring) = parse_poly_auto::<Cyclotomic>("omega^2 + omega + 1").unwrap();
        assert_eq!(ring.n_vars(), 0);
        assert!(p.is_zero());
        assert!(parse_poly_auto::<Rat>("omega*x").is_err());
    }

    #[test]
    fn unary_minus_binds_to_factor() {
        let (p, _) = parse_poly_auto::<Rat>("-x^2 + x*-x").unwrap();
        assert_eq!(p.to_string(), "-2*x^2");
    }
}
