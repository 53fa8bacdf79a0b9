//! Text parser for polynomials: the inverse of the display format, also
//! accepting internal variable names (`C3`, `y`) and explicit `*` separators.

use thiserror::Error;

use crate::exactnum::Rational;

use super::{Monomial, Polynomial, Ring, Term};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character `{0}` in polynomial")]
    UnexpectedChar(char),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed polynomial near `{0}`")]
    Malformed(String),
    #[error("empty polynomial text")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Int(String),
    Var(String),
}

fn tokenize(s: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                out.push(Token::Int(digits));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                name.push(c);
                chars.next();
                // Printer form C_{-3}: fold back to the internal name C3.
                if c == 'C' && chars.peek() == Some(&'_') {
                    let rest: String = chars.clone().collect();
                    if let Some(tail) = rest.strip_prefix("_{-") {
                        if let Some(end) = tail.find('}') {
                            let digits = &tail[..end];
                            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                                for _ in 0..end + 4 {
                                    chars.next();
                                }
                                out.push(Token::Var(format!("C{digits}")));
                                continue;
                            }
                        }
                    }
                }
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Var(name));
            }
            other => return Err(ParseError::UnexpectedChar(other)),
        }
    }
    Ok(out)
}

impl Polynomial {
    /// Parses text like `2 C_{-3} C_{-1} + 1/2 C2^2 - y` over `ring`.
    pub fn parse(ring: &Ring, s: &str) -> Result<Polynomial, ParseError> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut terms = Vec::new();
        let mut pos = 0;

        while pos < tokens.len() {
            let mut negative = false;
            // Sign prefixes, including the very first term.
            loop {
                match tokens.get(pos) {
                    Some(Token::Plus) => pos += 1,
                    Some(Token::Minus) => {
                        negative = !negative;
                        pos += 1;
                    }
                    _ => break,
                }
            }

            let mut coeff: Option<Rational> = None;
            let mut mono = Monomial::one(ring.len());
            let mut saw_factor = false;

            loop {
                match tokens.get(pos) {
                    Some(Token::Int(numer)) if coeff.is_none() && !saw_factor => {
                        pos += 1;
                        let mut q: Rational =
                            numer.parse().map_err(|_| ParseError::Malformed(numer.clone()))?;
                        if tokens.get(pos) == Some(&Token::Slash) {
                            match tokens.get(pos + 1) {
                                Some(Token::Int(denom)) => {
                                    pos += 2;
                                    q = format!("{numer}/{denom}")
                                        .parse()
                                        .map_err(|_| ParseError::Malformed(denom.clone()))?;
                                }
                                _ => return Err(ParseError::Malformed("/".into())),
                            }
                        }
                        coeff = Some(q);
                    }
                    Some(Token::Var(name)) => {
                        pos += 1;
                        let idx = ring
                            .position(name)
                            .ok_or_else(|| ParseError::UnknownVariable(name.clone()))?;
                        let mut exp = 1u32;
                        if tokens.get(pos) == Some(&Token::Caret) {
                            match tokens.get(pos + 1) {
                                Some(Token::Int(e)) => {
                                    pos += 2;
                                    exp = e.parse().map_err(|_| ParseError::Malformed(e.clone()))?;
                                }
                                _ => return Err(ParseError::Malformed("^".into())),
                            }
                        }
                        mono = mono.mul(&{
                            let mut m = Monomial::one(ring.len());
                            m.exps[idx] = exp;
                            m
                        });
                        saw_factor = true;
                    }
                    Some(Token::Star) => {
                        pos += 1;
                    }
                    _ => break,
                }
            }

            if coeff.is_none() && !saw_factor {
                return Err(ParseError::Malformed(s.trim().to_string()));
            }
            let mut c = coeff.unwrap_or_else(Rational::one);
            if negative {
                c = -c;
            }
            terms.push(Term { coeff: c, mono });
        }

        Ok(Polynomial::from_terms(ring, terms))
    }
}
