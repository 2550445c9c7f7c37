//! Text form of polynomials: a signed sum of terms, `*` optional between
//! factors, `^` for powers, rational coefficients as `p/q`.
//!
//! `Display` output parses back to the same polynomial, and canonical text
//! prints back unchanged.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::{Ring, RingDescriptor};
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write_monomial(f, self.ring(), m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub fn write_monomial(f: &mut dyn fmt::Write, ring: &RingDescriptor, m: &Monomial) -> fmt::Result {
    if m.is_one() {
        return f.write_str("1");
    }
    let mut first = true;
    for (v, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ring.name(v))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

pub fn monomial_string(ring: &RingDescriptor, m: &Monomial) -> String {
    let mut s = String::new();
    write_monomial(&mut s, ring, m).unwrap();
    s
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Num(BigInt),
    Ident(String),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((i, Tok::Plus)),
            b'-' => out.push((i, Tok::Minus)),
            b'*' => out.push((i, Tok::Star)),
            b'^' => out.push((i, Tok::Caret)),
            b'/' => out.push((i, Tok::Slash)),
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().map_err(|_| Error::Parse { pos: start, msg: "bad number".into() })?;
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].into())));
                continue;
            }
            _ => {
                return Err(Error::Parse { pos: i, msg: alloc::format!("unexpected character `{}`", c as char) });
            }
        }
        i += 1;
    }
    Ok(out)
}

impl Polynomial {
    /// Parses the text grammar against `ring`'s variable names.
    pub fn parse(ring: &Ring, s: &str) -> Result<Polynomial> {
        let toks = lex(s)?;
        let end = s.len();
        let mut pos = 0;
        let mut terms = Vec::new();
        let err = |p: usize, msg: &str| Error::Parse { pos: p, msg: msg.into() };
        if toks.is_empty() {
            return Err(err(0, "empty input"));
        }
        loop {
            let mut sign = BigRational::one();
            match toks.get(pos) {
                Some((_, Tok::Plus)) => pos += 1,
                Some((_, Tok::Minus)) => {
                    sign = -sign;
                    pos += 1;
                }
                _ if terms.is_empty() => {}
                Some((p, _)) => return Err(err(*p, "expected `+` or `-`")),
                None => break,
            }
            let mut coeff = sign;
            let mut exps = alloc::vec![0u32; ring.nvars()];
            let mut nfactors = 0;
            loop {
                let at = toks.get(pos).map(|t| t.0).unwrap_or(end);
                if nfactors > 0 {
                    match toks.get(pos) {
                        Some((_, Tok::Star)) => {
                            pos += 1;
                        }
                        Some((_, Tok::Num(_))) | Some((_, Tok::Ident(_))) => {}
                        _ => break,
                    }
                }
                match toks.get(pos) {
                    Some((_, Tok::Num(n))) => {
                        let mut q = BigRational::from_integer(n.clone());
                        pos += 1;
                        if let Some((_, Tok::Slash)) = toks.get(pos) {
                            pos += 1;
                            match toks.get(pos) {
                                Some((p, Tok::Num(d))) => {
                                    if d == &BigInt::from(0) {
                                        return Err(err(*p, "zero denominator"));
                                    }
                                    q /= BigRational::from_integer(d.clone());
                                    pos += 1;
                                }
                                _ => return Err(err(at, "expected denominator")),
                            }
                        }
                        coeff *= q;
                    }
                    Some((p, Tok::Ident(name))) => {
                        let v = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                        pos += 1;
                        let mut e = 1u32;
                        if let Some((_, Tok::Caret)) = toks.get(pos) {
                            pos += 1;
                            match toks.get(pos) {
                                Some((_, Tok::Num(n))) => {
                                    e = u32::try_from(n.clone()).map_err(|_| err(*p, "exponent too large"))?;
                                    pos += 1;
                                }
                                _ => return Err(err(*p, "expected exponent")),
                            }
                        }
                        exps[v] += e;
                    }
                    _ => return Err(err(at, "expected a factor")),
                }
                nfactors += 1;
            }
            terms.push((coeff, Monomial::new(ring, exps)));
            if pos >= toks.len() {
                break;
            }
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}
