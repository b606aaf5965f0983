//! Expression parser and printer for rational polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := var | rational | '(' expr ')'
//! rational := uint ('/' uint)?
//! sign   := '+' | '-'
//! ```
//!
//! A leading sign is accepted on the whole expression and directly after an
//! opening parenthesis. `a/b` is only a rational literal: both sides must be
//! unsigned integers.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::coeff::Rat;
use super::mpoly::MPoly;
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str, vars: &[&str]) -> Result<Vec<(usize, Tok)>, Error> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '/' => out.push((start, Tok::Slash)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            c if c.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().unwrap();
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &text[start..i];
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Syntax {
                        position: start,
                        message: format!(
                            "unknown variable `{name}` (expected one of {})",
                            vars.join(", ")
                        ),
                    })?;
                out.push((start, Tok::Var(idx)));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    nvars: usize,
    end: usize,
    _text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Syntax {
            position: self.offset(),
            message: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<MPoly<Rat>, Error> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly<Rat>, Error> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly<Rat>, Error> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .ok()
                        .filter(|&e: &u32| e <= 256)
                        .map_or_else(|| self.err("exponent too large"), Ok)?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MPoly<Rat>, Error> {
        match self.peek().cloned() {
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(MPoly::var(self.nvars, i))
            }
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut value = Rat::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= Rat::from_integer(d);
                        }
                        Some(Tok::Num(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected an integer denominator"),
                    }
                }
                Ok(MPoly::constant(self.nvars, value))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("expected a variable, number or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse and expand a polynomial expression in the given variables.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<MPoly<Rat>, Error> {
    let toks = tokenize(text, vars)?;
    let mut p = Parser {
        toks,
        pos: 0,
        nvars: vars.len(),
        end: text.len(),
        _text: text,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(poly)
}

fn write_monomial(out: &mut String, exp: &[u32], vars: &[&str]) -> bool {
    let mut first = true;
    for (v, &k) in exp.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(vars[v]);
        if k > 1 {
            let _ = write!(out, "^{k}");
        }
    }
    !first
}

/// Canonical printed form: terms by descending total degree, then
/// descending lexicographic exponent; coefficients as integers or `a/b`.
pub fn format_poly(p: &MPoly<Rat>, vars: &[&str]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().iter().collect();
    terms.sort_by(|(a, _), (b, _)| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let is_const = e.iter().all(|&k| k == 0);
        if mag.is_one() && !is_const {
            write_monomial(&mut out, e, vars);
        } else {
            if mag.is_integer() {
                let _ = write!(out, "{}", mag.numer());
            } else {
                let _ = write!(out, "{}/{}", mag.numer(), mag.denom());
            }
            if !is_const {
                out.push('*');
                write_monomial(&mut out, e, vars);
            }
        }
    }
    out
}
