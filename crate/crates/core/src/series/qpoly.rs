use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::format::{parse_terms, write_terms};
use super::monomial::WeightMonomial;
use super::poly::WeightPolynomial;
use crate::error::{Error, Result};

/// A polynomial in `q` whose coefficients are weight polynomials. Used for
/// the numerators of sum-side terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, WeightPolynomial>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_weight(0, WeightPolynomial::one())
    }

    pub fn from_weight(qdeg: u32, p: WeightPolynomial) -> Self {
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(qdeg, p);
        }
        QPoly { coeffs }
    }

    /// `c * m * q^qdeg`.
    pub fn term(qdeg: u32, m: WeightMonomial, c: i64) -> Self {
        Self::from_weight(qdeg, WeightPolynomial::monomial(m, c))
    }

    /// `1 + q + ... + q^(n-1)`, the q-integer `[n]_q`.
    pub fn q_integer(n: u32) -> Self {
        Self::q_integer_step(n, 1)
    }

    /// `1 + q^s + ... + q^(s(n-1))`, the q-integer `[n]_{q^s}`.
    pub fn q_integer_step(n: u32, step: u32) -> Self {
        let mut p = QPoly::zero();
        for i in 0..n {
            p.add_term(i * step, WeightMonomial::ONE, 1).expect("unit coefficients");
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, qdeg: u32) -> WeightPolynomial {
        self.coeffs.get(&qdeg).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients by ascending q-degree.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &WeightPolynomial)> {
        self.coeffs.iter().map(|(&d, p)| (d, p))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Flat list of `(q-degree, monomial, coefficient)`.
    pub fn flat_terms(&self) -> Vec<(u32, WeightMonomial, i64)> {
        self.coeffs
            .iter()
            .flat_map(|(&d, p)| p.terms().map(move |(m, &c)| (d, *m, c)))
            .collect()
    }

    pub fn add_term(&mut self, qdeg: u32, m: WeightMonomial, c: i64) -> Result<()> {
        let slot = self.coeffs.entry(qdeg).or_default();
        slot.add_term(m, c)?;
        if slot.is_zero() {
            self.coeffs.remove(&qdeg);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &QPoly) -> Result<QPoly> {
        let mut out = self.clone();
        for (d, m, c) in other.flat_terms() {
            out.add_term(d, m, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &QPoly) -> Result<QPoly> {
        let mut out = self.clone();
        for (d, m, c) in other.flat_terms() {
            out.add_term(d, m, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &QPoly) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (d1, m1, c1) in self.flat_terms() {
            for (d2, m2, c2) in other.flat_terms() {
                let d = d1.checked_add(d2).ok_or(Error::Overflow)?;
                let c = c1.checked_mul(c2).ok_or(Error::Overflow)?;
                out.add_term(d, m1.checked_mul(&m2)?, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `q^k`.
    pub fn shifted(&self, k: u32) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (&d, p) in &self.coeffs {
            out.coeffs.insert(d.checked_add(k).ok_or(Error::Overflow)?, p.clone());
        }
        Ok(out)
    }

    /// Divides by `q^k`; every degree must be at least `k`.
    pub(crate) fn unshifted(&self, k: u32) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&d, p)| (d - k, p.clone())).collect(),
        }
    }

    /// True iff every integer coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(WeightPolynomial::is_nonnegative)
    }

    /// First `(q-degree, monomial, coefficient)` with a negative coefficient.
    pub fn first_negative(&self) -> Option<(u32, WeightMonomial, i64)> {
        self.coeffs
            .iter()
            .find_map(|(&d, p)| p.first_negative().map(|(m, c)| (d, m, c)))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.flat_terms())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = QPoly::zero();
        for (d, m, c) in parse_terms(s)? {
            p.add_term(d, m, c)?;
        }
        Ok(p)
    }
}

impl FromStr for WeightPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = WeightPolynomial::zero();
        for (d, m, c) in parse_terms(s)? {
            if d != 0 {
                return Err(Error::Parse(format!("`q` is not a weight variable in `{s}`")));
            }
            p.add_term(m, c)?;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: QPoly = "1+q+v^2*q^2+v*q^3+q^4+q^5+q^6".parse().unwrap();
        assert_eq!(p.to_string(), "1 + q + v^2*q^2 + v*q^3 + q^4 + q^5 + q^6");
        let z: QPoly = "t - t".parse().unwrap();
        assert_eq!(z.to_string(), "0");
        assert!("t*y".parse::<QPoly>().is_err());
        assert!("t +".parse::<QPoly>().is_err());
    }

    #[test]
    fn q_integers() {
        assert_eq!(QPoly::q_integer(3).to_string(), "1 + q + q^2");
        assert_eq!(QPoly::q_integer_step(3, 2).to_string(), "1 + q^2 + q^4");
        assert!(QPoly::q_integer(0).is_zero());
    }

    #[test]
    fn products() {
        let a: QPoly = "1 + q + q^2 + q^3 + q^4 + q^5 + q^6".parse().unwrap();
        let b: QPoly = "1 + q^4".parse().unwrap();
        let prod = a.checked_mul(&b).unwrap();
        assert_eq!(
            prod.to_string(),
            "1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 2*q^6 + q^7 + q^8 + q^9 + q^10"
        );
    }

    #[test]
    fn positivity_witness() {
        let p: QPoly = "w - 1".parse().unwrap();
        assert!(!p.is_nonnegative());
        assert_eq!(p.first_negative(), Some((0, WeightMonomial::ONE, -1)));
    }
}
