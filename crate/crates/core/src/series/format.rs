//! Canonical text form shared by weight polynomials, q-polynomials and series.
//!
//! A term is `[-][c*]factor*factor...` where factors are `t, w, v, x` (in that
//! order) followed by `q`, each optionally raised with `^e`. Terms are sorted
//! by q-degree and then by the graded weight order, e.g.
//! `1 + t*q^2 + w*q^3 - 2*t^2*w*q^7`.

use std::fmt;

use super::monomial::{Var, WeightMonomial};
use crate::error::{Error, Result};

pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (u32, WeightMonomial, i64)>,
{
    let mut first = true;
    for (qdeg, m, c) in terms {
        if c == 0 {
            continue;
        }
        let mut factors = m.factors();
        match qdeg {
            0 => {}
            1 => factors.push("q".into()),
            e => factors.push(format!("q^{e}")),
        }
        let mag = c.unsigned_abs();
        let body = if factors.is_empty() {
            mag.to_string()
        } else if mag == 1 {
            factors.join("*")
        } else {
            format!("{}*{}", mag, factors.join("*"))
        };
        match (first, c < 0) {
            (true, false) => write!(f, "{body}")?,
            (true, true) => write!(f, "-{body}")?,
            (false, false) => write!(f, " + {body}")?,
            (false, true) => write!(f, " - {body}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Parses a flat sum of terms into `(q-degree, weight monomial, coefficient)`
/// triples. Repeated terms are returned as written; callers merge them.
pub(crate) fn parse_terms(src: &str) -> Result<Vec<(u32, WeightMonomial, i64)>> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(Error::Parse(format!("expected `+` or `-` at offset {i} in `{src}`")));
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &s[start..i];
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in `{src}`")));
        }
        out.push(parse_term(term, sign)?);
    }
    Ok(out)
}

fn parse_term(term: &str, sign: i64) -> Result<(u32, WeightMonomial, i64)> {
    let mut coeff = sign;
    let mut exps = [0u32; 4];
    let mut qdeg = 0u32;
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in term `{term}`")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            let c: i64 = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
            coeff = coeff.checked_mul(c).ok_or(Error::Overflow)?;
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim_matches(|c| c == '{' || c == '}')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let mut chars = name.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Error::Parse(format!("unknown variable `{name}`")));
        };
        if c == 'q' {
            qdeg = qdeg.checked_add(exp).ok_or(Error::Overflow)?;
        } else if let Some(v) = Var::from_symbol(c) {
            let slot = &mut exps[v.index()];
            *slot = slot.checked_add(exp).ok_or(Error::Overflow)?;
        } else {
            return Err(Error::Parse(format!("unknown variable `{name}`")));
        }
    }
    Ok((qdeg, WeightMonomial(exps), coeff))
}
