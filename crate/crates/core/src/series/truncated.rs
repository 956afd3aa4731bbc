use std::fmt;

use serde::Serialize;

use super::monomial::WeightMonomial;
use super::poly::WeightPolynomial;
use super::qpoly::QPoly;
use super::rational::DenominatorFactor;
use crate::error::{Error, Result};

/// A power series in `q` known exactly through `q^order`.
///
/// Binary operations truncate to the smaller of the two orders; coefficients
/// beyond a series' order are unknown, never implicitly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<WeightPolynomial>,
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesComparison {
    Equal { order: usize },
    Differ { degree: usize, lhs: WeightPolynomial, rhs: WeightPolynomial },
}

impl SeriesComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, SeriesComparison::Equal { .. })
    }
}

/// JSON-friendly discrepancy record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

impl SeriesComparison {
    pub fn discrepancy(&self) -> Option<Discrepancy> {
        match self {
            SeriesComparison::Equal { .. } => None,
            SeriesComparison::Differ { degree, lhs, rhs } => Some(Discrepancy {
                degree: *degree,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        }
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![WeightPolynomial::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = WeightPolynomial::one();
        s
    }

    /// Builds a series from explicit coefficients `c_0..=c_order`.
    pub fn from_coeffs(coeffs: Vec<WeightPolynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        TruncatedSeries { coeffs }
    }

    /// The polynomial `p` viewed as a series, truncated at `order`.
    pub fn from_qpoly(p: &QPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (d, c) in p.coeffs() {
            if (d as usize) <= order {
                s.coeffs[d as usize] = c.clone();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &WeightPolynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[WeightPolynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(WeightPolynomial::is_zero)
    }

    /// Re-truncates to a smaller order (no-op if `order` is not smaller).
    pub fn truncated(&self, order: usize) -> TruncatedSeries {
        let keep = order.min(self.order()) + 1;
        TruncatedSeries { coeffs: self.coeffs[..keep].to_vec() }
    }

    pub fn checked_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            coeffs.push(self.coeffs[n].checked_add(&other.coeffs[n])?);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn checked_sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let order = self.order().min(other.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            coeffs.push(self.coeffs[n].checked_sub(&other.coeffs[n])?);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// In-place `self += other` over the shared order; truncates `self` if
    /// `other` is shorter.
    pub fn add_assign(&mut self, other: &TruncatedSeries) -> Result<()> {
        let order = self.order().min(other.order());
        self.coeffs.truncate(order + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_scaled(b, &WeightMonomial::ONE, 1)?;
        }
        Ok(())
    }

    /// Truncated Cauchy product.
    pub fn checked_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let b = &other.coeffs[j];
                if b.is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].checked_mul(b)?;
                out.coeffs[i + j].add_scaled(&prod, &WeightMonomial::ONE, 1)?;
            }
        }
        Ok(out)
    }

    /// Multiplies in place by `1/(1 - m q^e)`.
    pub fn mul_inverse_factor(&mut self, factor: &DenominatorFactor) -> Result<()> {
        let e = factor.q_exp as usize;
        if e == 0 {
            return Err(Error::InvalidFactor);
        }
        for n in e..self.coeffs.len() {
            if self.coeffs[n - e].is_zero() {
                continue;
            }
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_scaled(&lo[n - e], &factor.weight, 1)?;
        }
        Ok(())
    }

    /// Multiplies in place by `(1 - m q^e)`.
    pub fn mul_factor(&mut self, factor: &DenominatorFactor) -> Result<()> {
        let e = factor.q_exp as usize;
        for n in (e..self.coeffs.len()).rev() {
            if self.coeffs[n - e].is_zero() {
                continue;
            }
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_scaled(&lo[n - e], &factor.weight, -1)?;
        }
        Ok(())
    }

    /// Multiplies in place by a polynomial in `q`.
    pub fn mul_qpoly(&mut self, p: &QPoly) -> Result<()> {
        let src = std::mem::replace(self, Self::zero(self.order()));
        for (d, c) in p.coeffs() {
            let d = d as usize;
            for n in 0..src.coeffs.len().saturating_sub(d) {
                if src.coeffs[n].is_zero() {
                    continue;
                }
                let prod = c.checked_mul(&src.coeffs[n])?;
                self.coeffs[n + d].add_scaled(&prod, &WeightMonomial::ONE, 1)?;
            }
        }
        Ok(())
    }

    /// Substitutes `t = w = v = x = 1` in every coefficient.
    pub fn erase_weights(&self) -> Result<TruncatedSeries> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.erase_weights().map(WeightPolynomial::constant))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    /// Coefficient-wise comparison up to the shared order.
    pub fn compare(&self, other: &TruncatedSeries) -> SeriesComparison {
        let order = self.order().min(other.order());
        for n in 0..=order {
            if self.coeffs[n] != other.coeffs[n] {
                return SeriesComparison::Differ {
                    degree: n,
                    lhs: self.coeffs[n].clone(),
                    rhs: other.coeffs[n].clone(),
                };
            }
        }
        SeriesComparison::Equal { order }
    }

    /// All nonzero `(q-degree, monomial, coefficient)` triples.
    pub fn flat_terms(&self) -> impl Iterator<Item = (u32, WeightMonomial, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(n, p)| p.terms().map(move |(m, &c)| (n as u32, *m, c)))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_terms(f, self.flat_terms())
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.checked_add(b)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.checked_mul(b)
}

pub fn series_equal(a: &TruncatedSeries, b: &TruncatedSeries) -> SeriesComparison {
    a.compare(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::expand_inverse_factor;
    use crate::series::monomial::Var;

    fn s(text: &str, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_qpoly(&text.parse().unwrap(), order)
    }

    #[test]
    fn add_examples() {
        let a = s("1 + t*q + w*q^3", 5);
        assert_eq!(series_add(&a, &TruncatedSeries::zero(3)).unwrap(), a.truncated(3));
        assert_eq!(series_add(&s("1 + q", 4), &s("q", 4)).unwrap(), s("1 + 2*q", 4));

        let geom = s("1 + q + q^2 + q^3 + q^4", 4);
        let alt = s("1 - q + q^2 - q^3 + q^4", 4);
        assert_eq!(series_add(&geom, &alt).unwrap(), s("2 + 2*q^2 + 2*q^4", 4));
    }

    #[test]
    fn min_order_semantics() {
        let a = s("1 + q", 7);
        let b = s("q^2", 3);
        assert_eq!(series_add(&a, &b).unwrap().order(), 3);
        assert_eq!(series_mul(&a, &b).unwrap().order(), 3);
    }

    #[test]
    fn mul_examples() {
        let a = s("1 + 2*t*q + w*q^2 - x*q^5", 6);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(6)).unwrap(), a);

        let order = 9;
        let all_ones = s(&(0..=order).map(|i| format!("q^{i}")).collect::<Vec<_>>().join(" + "), order);
        assert_eq!(series_mul(&s("1 - q", order), &all_ones).unwrap(), TruncatedSeries::one(order));

        let f = DenominatorFactor::new(WeightMonomial::var(Var::T), 2).unwrap();
        let inv = expand_inverse_factor(&f, 10).unwrap();
        assert_eq!(series_mul(&s("1 - t*q^2", 10), &inv).unwrap(), TruncatedSeries::one(10));
    }

    #[test]
    fn compare_reports_first_difference() {
        assert!(series_equal(&s("1 + t", 3), &s("1 + t", 3)).is_equal());
        match series_equal(&s("1 + q", 3), &s("1 + 2*q", 3)) {
            SeriesComparison::Differ { degree, lhs, rhs } => {
                assert_eq!(degree, 1);
                assert_eq!(lhs, WeightPolynomial::one());
                assert_eq!(rhs, WeightPolynomial::constant(2));
            }
            other => panic!("expected a difference, got {other:?}"),
        }
    }

    #[test]
    fn in_place_factor_ops_invert_each_other() {
        let f = DenominatorFactor::new(WeightMonomial([1, 0, 2, 0]), 3).unwrap();
        let mut a = s("1 + q + t*q^2 + w*q^5", 30);
        let orig = a.clone();
        a.mul_inverse_factor(&f).unwrap();
        a.mul_factor(&f).unwrap();
        assert_eq!(a, orig);
    }
}
