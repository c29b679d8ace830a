//! Text grammar for polynomials and derivations.
//!
//! Polynomials: terms joined by `+`/`-`; a term is `coef`, `coef*mono`, or
//! `mono`; `coef` is `int` or `int/int`; `mono` is `x<k>^<e>` factors joined
//! by `*`. For `n <= 3` the aliases `x`, `y`, `z` are accepted. Examples:
//! `1 + x*y`, `3/2*x1^2*x2 - x3`.
//!
//! Derivations: `[f1, f2, ..., fn]` with each `fi` in the polynomial
//! grammar; `E` is shorthand for the Euler derivation at the ambient `n`.

use crate::arith::{Monomial, Poly, Rat};
use crate::deriv::Deriv;
use crate::{Result, WnError};
use num_bigint::BigInt;
use num_traits::One;

fn err(msg: impl Into<String>) -> WnError {
    WnError::Parse(msg.into())
}

/// Splits into signed term strings on top-level `+`/`-`.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if cur.is_empty() {
                    if ch == '-' {
                        neg = !neg;
                    }
                } else {
                    terms.push((neg, std::mem::take(&mut cur)));
                    neg = ch == '-';
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        terms.push((neg, cur));
    }
    if terms.is_empty() {
        return Err(err("empty polynomial"));
    }
    Ok(terms)
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| err(format!("bad integer `{s}`")))
}

fn var_index(name: &str, n: usize) -> Result<usize> {
    let alias = match name {
        "x" if n <= 3 => Some(0),
        "y" if (2..=3).contains(&n) => Some(1),
        "z" if n == 3 => Some(2),
        _ => None,
    };
    if let Some(i) = alias {
        return Ok(i);
    }
    let digits = name
        .strip_prefix('x')
        .ok_or_else(|| err(format!("bad variable `{name}`")))?;
    let k: usize = digits
        .parse()
        .map_err(|_| err(format!("bad variable `{name}`")))?;
    if k == 0 || k > n {
        return Err(WnError::IndexOutOfRange { index: k, n });
    }
    Ok(k - 1)
}

/// Parses one `*`-separated factor product into (coefficient, monomial).
fn parse_term(s: &str, n: usize) -> Result<(Rat, Monomial)> {
    let mut coef = Rat::one();
    let mut mono = Monomial::one(n);
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(err(format!("empty factor in `{s}`")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            let (num, den) = match factor.split_once('/') {
                Some((a, b)) => (parse_int(a.trim())?, parse_int(b.trim())?),
                None => (parse_int(factor)?, BigInt::one()),
            };
            if den == BigInt::from(0) {
                return Err(err("zero denominator"));
            }
            coef *= Rat::new(num, den);
        } else {
            let (name, exp) = match factor.split_once('^') {
                Some((v, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("bad exponent in `{factor}`")))?;
                    (v.trim(), e)
                }
                None => (factor, 1),
            };
            let i = var_index(name, n)?;
            let mut exps = mono.exps().to_vec();
            exps[i] += exp;
            mono = Monomial::new(exps);
        }
    }
    Ok((coef, mono))
}

pub fn parse_poly(s: &str, n: usize) -> Result<Poly> {
    let s = s.trim();
    if s == "0" {
        return Ok(Poly::zero(n));
    }
    let mut out = Poly::zero(n);
    for (neg, term) in split_terms(s)? {
        let (coef, mono) = parse_term(&term, n)?;
        let coef = if neg { -coef } else { coef };
        out = out.add(&Poly::term(mono, coef))?;
    }
    Ok(out)
}

pub fn parse_deriv(s: &str, n: usize) -> Result<Deriv> {
    let s = s.trim();
    if s == "E" {
        return Ok(Deriv::euler(n));
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err("derivation must be `[f1, ..., fn]` or `E`"))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != n {
        return Err(err(format!(
            "derivation arity mismatch: got {} coefficients, ambient n = {n}",
            parts.len()
        )));
    }
    let coeffs = parts
        .iter()
        .map(|p| parse_poly(p, n))
        .collect::<Result<Vec<_>>>()?;
    Deriv::new(coeffs)
}
