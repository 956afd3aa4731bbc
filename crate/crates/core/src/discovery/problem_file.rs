//! Line-oriented problem files.
//!
//! ```text
//! # recover the q^12 numerator
//! target twvthm
//! fixed twvthm 0 1 2 4 5 6
//! tail twvthm
//! unknown shift=12 degree=6 denominator=t*q^2,w*q^3,v*q^7 monomials=1,v,v^2
//! match_order 40
//! ```
//!
//! `target ID [M=k]` takes the right-hand side and substitution of a catalog
//! entry. `fixed ID [M=k] INDEX... | all` copies explicit sum-side terms and
//! `tail ID [M=k]` copies the infinite tail. Each `unknown` line adds a
//! template; `monomials.D=...` overrides the set at `q^D`.

use crate::error::{Error, Result};
use crate::identities::{self, Bindings, IdentitySpec, SumSide};
use crate::series::{DenominatorFactor, QPoly, WeightMonomial, WeightPolynomial};

use super::{DiscoveryProblem, NumeratorTemplate};

pub fn parse_problem(text: &str) -> Result<DiscoveryProblem> {
    let mut target: Option<IdentitySpec> = None;
    let mut fixed = SumSide::default();
    let mut fixed_subs = Vec::new();
    let mut templates = Vec::new();
    let mut match_order = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::InvalidProblem(format!("line {}: {msg}", lineno + 1));
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let rest: Vec<&str> = words.collect();
        match keyword {
            "target" => {
                let (spec, extra) = spec_ref(&rest).map_err(|e| bad(e.to_string()))?;
                if !extra.is_empty() {
                    return Err(bad(format!("unexpected `{}`", extra.join(" "))));
                }
                target = Some(spec);
            }
            "fixed" => {
                let (spec, extra) = spec_ref(&rest).map_err(|e| bad(e.to_string()))?;
                if extra.is_empty() {
                    return Err(bad("`fixed` needs term indices or `all`".into()));
                }
                if extra == ["all"] {
                    fixed.terms.extend(spec.lhs.terms.iter().cloned());
                } else {
                    for w in extra {
                        let i: usize = w.parse().map_err(|_| bad(format!("bad term index `{w}`")))?;
                        let t = spec.lhs.terms.get(i).ok_or_else(|| {
                            bad(format!("`{}` has {} explicit terms", spec.id, spec.lhs.terms.len()))
                        })?;
                        fixed.terms.push(t.clone());
                    }
                }
                fixed_subs.push(spec.substitution);
            }
            "tail" => {
                let (spec, extra) = spec_ref(&rest).map_err(|e| bad(e.to_string()))?;
                if !extra.is_empty() {
                    return Err(bad(format!("unexpected `{}`", extra.join(" "))));
                }
                if fixed.tail.is_some() {
                    return Err(bad("only one tail is allowed".into()));
                }
                fixed.tail = Some(spec.lhs.tail.clone().ok_or_else(|| bad(format!("`{}` has no tail", spec.id)))?);
                fixed_subs.push(spec.substitution);
            }
            "unknown" => templates.push(template(&rest).map_err(|e| bad(e.to_string()))?),
            "match_order" => {
                let [n] = rest.as_slice() else {
                    return Err(bad("`match_order` takes one integer".into()));
                };
                match_order = Some(n.parse().map_err(|_| bad(format!("bad match order `{n}`")))?);
            }
            other => return Err(bad(format!("unknown keyword `{other}`"))),
        }
    }

    let target = target.ok_or_else(|| Error::InvalidProblem("missing `target` line".into()))?;
    if fixed_subs.iter().any(|s| *s != target.substitution) {
        return Err(Error::InvalidProblem("fixed terms and target use different substitutions".into()));
    }
    let problem = DiscoveryProblem {
        fixed,
        target: target.rhs,
        substitution: target.substitution,
        templates,
        match_order,
    };
    problem.validate()?;
    Ok(problem)
}

/// `ID [M=k] rest...`
fn spec_ref<'a>(words: &[&'a str]) -> Result<(IdentitySpec, Vec<&'a str>)> {
    let (&id, mut rest) = words.split_first().ok_or_else(|| Error::Parse("missing catalog id".into()))?;
    let mut params = Bindings::none();
    if let Some(m) = rest.first().and_then(|w| w.strip_prefix("M=")) {
        params = Bindings::m(m.parse().map_err(|_| Error::Parse(format!("bad parameter `M={m}`")))?);
        rest = &rest[1..];
    }
    Ok((identities::instantiate(id, params)?, rest.to_vec()))
}

fn template(words: &[&str]) -> Result<NumeratorTemplate> {
    let mut shift = None;
    let mut degree = None;
    let mut denominator = Vec::new();
    let mut monomials = None;
    let mut overrides = Vec::new();
    for w in words {
        let (key, value) = w.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got `{w}`")))?;
        match key {
            "shift" => shift = Some(int(value)?),
            "degree" => degree = Some(int(value)?),
            "denominator" => denominator = list(value).map(factor).collect::<Result<_>>()?,
            "monomials" => monomials = Some(list(value).map(monomial).collect::<Result<Vec<_>>>()?),
            _ => match key.strip_prefix("monomials.") {
                Some(d) => overrides.push((int(d)?, list(value).map(monomial).collect::<Result<Vec<_>>>()?)),
                None => return Err(Error::Parse(format!("unknown template key `{key}`"))),
            },
        }
    }
    let shift = shift.ok_or_else(|| Error::Parse("template needs shift=".into()))?;
    let degree = degree.ok_or_else(|| Error::Parse("template needs degree=".into()))?;
    let mut tpl = NumeratorTemplate::uniform(shift, denominator, degree, &monomials.unwrap_or_default());
    for (d, ms) in overrides {
        *tpl
            .monomials
            .get_mut(d as usize)
            .ok_or_else(|| Error::Parse(format!("monomials.{d} is above degree {degree}")))? = ms;
    }
    Ok(tpl)
}

fn int(s: &str) -> Result<u32> {
    s.parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, got `{s}`")))
}

fn list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty())
}

/// `t*q^2` or `q^4`: the factor `1 - t q^2`.
fn factor(s: &str) -> Result<DenominatorFactor> {
    let p: QPoly = s.parse()?;
    match p.flat_terms().as_slice() {
        [(d, m, 1)] if *d >= 1 => DenominatorFactor::new(*m, *d),
        _ => Err(Error::Parse(format!("`{s}` is not a monomial times a positive power of q"))),
    }
}

fn monomial(s: &str) -> Result<WeightMonomial> {
    let p: WeightPolynomial = s.parse()?;
    let terms: Vec<(WeightMonomial, i64)> = p.terms().map(|(m, c)| (*m, *c)).collect();
    match terms.as_slice() {
        [(m, 1)] => Ok(*m),
        _ => Err(Error::Parse(format!("`{s}` is not a weight monomial"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_template_line() {
        let p = parse_problem(
            "target twvthm\nfixed twvthm 0 1 2 4 5 6\ntail twvthm\n\
             unknown shift=12 degree=6 denominator=t*q^2,w*q^3,v*q^7 monomials=1,v,v^2 monomials.0=1\n",
        )
        .unwrap();
        assert_eq!(p.fixed.terms.len(), 6);
        assert_eq!(p.templates[0].denominator.len(), 3);
        assert_eq!(p.unknowns().len(), 19);
        assert_eq!(p.match_order(), 29);
    }

    #[test]
    fn rejects_bad_lines() {
        for text in [
            "fixed RR2 all",
            "target RR2\nfixed RR2 7",
            "target RR2\nunknown degree=2",
            "target RR2\nunknown shift=1 degree=1 denominator=2*q monomials=1",
            "target RR2\nbogus",
            "target RR2\nunknown shift=1 degree=3 monomials=1,t\nmatch_order 5",
        ] {
            assert!(parse_problem(text).is_err(), "{text}");
        }
    }
}
