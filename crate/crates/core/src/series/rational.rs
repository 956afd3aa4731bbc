use std::fmt;

use super::monomial::{Var, WeightMonomial};
use super::qpoly::QPoly;
use super::truncated::TruncatedSeries;
use crate::error::{Error, Result};

/// The denominator factor `1 - weight * q^q_exp`, with `q_exp >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DenominatorFactor {
    pub weight: WeightMonomial,
    pub q_exp: u32,
}

impl DenominatorFactor {
    pub fn new(weight: WeightMonomial, q_exp: u32) -> Result<Self> {
        if q_exp == 0 {
            return Err(Error::InvalidFactor);
        }
        Ok(DenominatorFactor { weight, q_exp })
    }

    /// `1 - q^e`.
    pub fn plain(q_exp: u32) -> Result<Self> {
        Self::new(WeightMonomial::ONE, q_exp)
    }

    /// `1 - v q^e` for a single weight variable.
    pub fn weighted(v: Var, q_exp: u32) -> Result<Self> {
        Self::new(WeightMonomial::var(v), q_exp)
    }
}

impl fmt::Display for DenominatorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = if self.q_exp == 1 { "q".to_string() } else { format!("q^{}", self.q_exp) };
        if self.weight.is_one() {
            write!(f, "(1 - {q})")
        } else {
            write!(f, "(1 - {}*{q})", self.weight)
        }
    }
}

/// One summand `q^q_shift * numerator / prod(1 - m_i q^e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalTerm {
    pub q_shift: u32,
    pub numerator: QPoly,
    pub denominator: Vec<DenominatorFactor>,
}

impl RationalTerm {
    pub fn new(q_shift: u32, numerator: QPoly, denominator: Vec<DenominatorFactor>) -> Self {
        RationalTerm { q_shift, numerator, denominator }
    }

    /// The constant term `1`.
    pub fn one() -> Self {
        Self::new(0, QPoly::one(), Vec::new())
    }

    /// Moves the lowest power of `q` in the numerator into `q_shift`, so the
    /// numerator has a nonzero constant coefficient (unless it is zero).
    pub fn normalized(mut self) -> Self {
        if let Some(low) = self.numerator.min_degree() {
            if low > 0 {
                self.numerator = self.numerator.unshifted(low);
                self.q_shift += low;
            }
        }
        self
    }

    /// Expands the term as a power series through `q^order`.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        if self.q_shift as usize > order {
            return Ok(TruncatedSeries::zero(order));
        }
        let mut s = TruncatedSeries::from_qpoly(&self.numerator.shifted(self.q_shift)?, order);
        for f in &self.denominator {
            s.mul_inverse_factor(f)?;
        }
        Ok(s)
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<RationalTerm> {
        let numerator = sub.apply_qpoly(&self.numerator)?;
        let mut denominator = Vec::with_capacity(self.denominator.len());
        for f in &self.denominator {
            if let Some(g) = sub.apply_factor(f)? {
                denominator.push(g);
            }
        }
        Ok(RationalTerm { q_shift: self.q_shift, numerator, denominator })
    }
}

impl fmt::Display for RationalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q_shift {
            0 => {}
            1 => write!(f, "q*")?,
            s => write!(f, "q^{s}*")?,
        }
        write!(f, "({})", self.numerator)?;
        if !self.denominator.is_empty() {
            write!(f, "/")?;
            for d in &self.denominator {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// The geometric series of `1/(1 - m q^e)` through `q^order`.
pub fn expand_inverse_factor(factor: &DenominatorFactor, order: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(order);
    s.mul_inverse_factor(factor)?;
    Ok(s)
}

pub fn expand_rational_term(term: &RationalTerm, order: usize) -> Result<TruncatedSeries> {
    term.expand(order)
}

/// Value substituted for a weight: `coeff * q^q_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightValue {
    pub coeff: i64,
    pub q_exp: u32,
}

impl WeightValue {
    pub const ZERO: WeightValue = WeightValue { coeff: 0, q_exp: 0 };
    pub const ONE: WeightValue = WeightValue { coeff: 1, q_exp: 0 };

    pub fn q_power(q_exp: u32) -> Self {
        WeightValue { coeff: 1, q_exp }
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coeff, self.q_exp) {
            (c, 0) => write!(f, "{c}"),
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "q"),
            (1, e) => write!(f, "q^{e}"),
            (c, 1) => write!(f, "{c}*q"),
            (c, e) => write!(f, "{c}*q^{e}"),
        }
    }
}

/// Replacement of some weight variables by `c * q^k`; other variables stay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Substitution {
    values: [Option<WeightValue>; 4],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, value: WeightValue) -> Self {
        self.values[v.index()] = Some(value);
        self
    }

    /// Every weight set to 1.
    pub fn erase_all() -> Self {
        Var::ALL.iter().fold(Self::new(), |s, &v| s.with(v, WeightValue::ONE))
    }

    pub fn get(&self, v: Var) -> Option<WeightValue> {
        self.values[v.index()]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    /// Applies the substitution to `m`, returning the surviving monomial, the
    /// scalar factor and the extra power of `q`.
    pub fn apply_monomial(&self, m: &WeightMonomial) -> Result<(WeightMonomial, i64, u32)> {
        let mut rest = *m;
        let mut coeff = 1i64;
        let mut extra = 0u32;
        for v in Var::ALL {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            if let Some(val) = self.get(v) {
                rest.0[v.index()] = 0;
                coeff = coeff
                    .checked_mul(val.coeff.checked_pow(e).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
                extra = extra
                    .checked_add(val.q_exp.checked_mul(e).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        Ok((rest, coeff, extra))
    }

    pub fn apply_qpoly(&self, p: &QPoly) -> Result<QPoly> {
        if self.is_identity() {
            return Ok(p.clone());
        }
        let mut out = QPoly::zero();
        for (d, m, c) in p.flat_terms() {
            let (rest, scale, extra) = self.apply_monomial(&m)?;
            let c = c.checked_mul(scale).ok_or(Error::Overflow)?;
            out.add_term(d.checked_add(extra).ok_or(Error::Overflow)?, rest, c)?;
        }
        Ok(out)
    }

    /// `None` when the factor collapses to 1 (a weight set to 0).
    pub fn apply_factor(&self, f: &DenominatorFactor) -> Result<Option<DenominatorFactor>> {
        let (rest, scale, extra) = self.apply_monomial(&f.weight)?;
        match scale {
            0 => Ok(None),
            1 => Ok(Some(DenominatorFactor::new(
                rest,
                f.q_exp.checked_add(extra).ok_or(Error::Overflow)?,
            )?)),
            _ => {
                let var = Var::ALL
                    .into_iter()
                    .find(|&v| f.weight.exponent(v) > 0 && self.get(v).is_some_and(|x| x.coeff != 1))
                    .map(Var::symbol)
                    .unwrap_or('?');
                Err(Error::InvalidSubstitution { var })
            }
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter_map(|&v| self.get(v).map(|val| format!("{v}={val}")))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(text: &str, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_qpoly(&text.parse().unwrap(), order)
    }

    #[test]
    fn inverse_factor_examples() {
        let t2 = DenominatorFactor::weighted(Var::T, 2).unwrap();
        assert_eq!(
            expand_inverse_factor(&t2, 7).unwrap(),
            series("1 + t*q^2 + t^2*q^4 + t^3*q^6", 7)
        );
        let plain = DenominatorFactor::plain(1).unwrap();
        assert_eq!(expand_inverse_factor(&plain, 3).unwrap(), series("1 + q + q^2 + q^3", 3));
        let v7 = DenominatorFactor::weighted(Var::V, 7).unwrap();
        assert_eq!(expand_inverse_factor(&v7, 20).unwrap(), series("1 + v*q^7 + v^2*q^14", 20));
    }

    #[test]
    fn zero_exponent_factor_is_rejected() {
        assert_eq!(DenominatorFactor::new(WeightMonomial::ONE, 0), Err(Error::InvalidFactor));
        let bogus = DenominatorFactor { weight: WeightMonomial::ONE, q_exp: 0 };
        assert_eq!(expand_inverse_factor(&bogus, 4), Err(Error::InvalidFactor));
    }

    #[test]
    fn rational_term_examples() {
        let term = RationalTerm::new(
            2,
            "t + q".parse().unwrap(),
            vec![DenominatorFactor::weighted(Var::T, 2).unwrap()],
        );
        assert_eq!(
            expand_rational_term(&term, 6).unwrap(),
            series("t*q^2 + q^3 + t^2*q^4 + t*q^5 + t^3*q^6", 6)
        );

        let far = RationalTerm::new(7, "1 + t".parse().unwrap(), vec![]);
        assert!(expand_rational_term(&far, 6).unwrap().is_zero());

        assert_eq!(expand_rational_term(&RationalTerm::one(), 5).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn normalization_moves_low_powers_into_shift() {
        let term = RationalTerm::new(0, "q^3 + w*q^5".parse().unwrap(), vec![]).normalized();
        assert_eq!(term.q_shift, 3);
        assert_eq!(term.numerator.to_string(), "1 + w*q^2");
    }

    #[test]
    fn substitution_into_terms() {
        // t = 1, w = q^2 turns 1 - w q^3 into 1 - q^5.
        let sub = Substitution::new()
            .with(Var::T, WeightValue::ONE)
            .with(Var::W, WeightValue::q_power(2));
        let term = RationalTerm::new(
            6,
            "w^2 + q + q^2".parse().unwrap(),
            vec![
                DenominatorFactor::weighted(Var::T, 2).unwrap(),
                DenominatorFactor::weighted(Var::W, 3).unwrap(),
            ],
        );
        let s = term.substitute(&sub).unwrap();
        assert_eq!(s.numerator.to_string(), "q + q^2 + q^4");
        assert_eq!(s.denominator, vec![DenominatorFactor::plain(2).unwrap(), DenominatorFactor::plain(5).unwrap()]);

        let kill = Substitution::new().with(Var::W, WeightValue::ZERO);
        let k = term.substitute(&kill).unwrap();
        assert_eq!(k.numerator.to_string(), "q + q^2");
        assert_eq!(k.denominator.len(), 1);

        let bad = Substitution::new().with(Var::T, WeightValue { coeff: 2, q_exp: 0 });
        assert_eq!(term.substitute(&bad), Err(Error::InvalidSubstitution { var: 't' }));
    }
}
