use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::monomial::{Var, WeightMonomial};
use crate::error::{Error, Result};

/// Exact integer polynomial in the weights `t, w, v, x`.
///
/// Zero coefficients are never stored, so two polynomials are equal iff their
/// term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightPolynomial {
    terms: BTreeMap<WeightMonomial, i64>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(WeightMonomial::ONE, c)
    }

    pub fn monomial(m: WeightMonomial, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        WeightPolynomial { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(WeightMonomial::var(v), 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (WeightMonomial, i64)>>(terms: I) -> Result<Self> {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&WeightMonomial, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &WeightMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Constant term (coefficient of the monomial 1).
    pub fn constant_term(&self) -> i64 {
        self.coeff(&WeightMonomial::ONE)
    }

    pub fn add_term(&mut self, m: WeightMonomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().checked_add(c).ok_or(Error::Overflow)?;
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// `self += scale * shift * other`, the workhorse of series expansion.
    pub fn add_scaled(&mut self, other: &WeightPolynomial, shift: &WeightMonomial, scale: i64) -> Result<()> {
        if scale == 0 {
            return Ok(());
        }
        for (m, &c) in &other.terms {
            let m = if shift.is_one() { *m } else { m.checked_mul(shift)? };
            let c = c.checked_mul(scale).ok_or(Error::Overflow)?;
            self.add_term(m, c)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &WeightPolynomial) -> Result<WeightPolynomial> {
        let mut out = self.clone();
        out.add_scaled(other, &WeightMonomial::ONE, 1)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &WeightPolynomial) -> Result<WeightPolynomial> {
        let mut out = self.clone();
        out.add_scaled(other, &WeightMonomial::ONE, -1)?;
        Ok(out)
    }

    pub fn checked_mul(&self, other: &WeightPolynomial) -> Result<WeightPolynomial> {
        let mut out = WeightPolynomial::zero();
        for (m, &c) in &self.terms {
            out.add_scaled(other, m, c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<WeightPolynomial> {
        WeightPolynomial::zero().checked_sub(self)
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// First monomial (in canonical order) carrying a negative coefficient.
    pub fn first_negative(&self) -> Option<(WeightMonomial, i64)> {
        self.terms.iter().find(|(_, &c)| c < 0).map(|(m, &c)| (*m, c))
    }

    /// Sum of all coefficients: the value at `t = w = v = x = 1`.
    pub fn erase_weights(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::format::write_terms(f, self.terms.iter().map(|(m, &c)| (0u32, *m, c)))
    }
}

/// Free-function forms of the ring operations.
pub fn poly_add(a: &WeightPolynomial, b: &WeightPolynomial) -> Result<WeightPolynomial> {
    a.checked_add(b)
}

pub fn poly_mul(a: &WeightPolynomial, b: &WeightPolynomial) -> Result<WeightPolynomial> {
    a.checked_mul(b)
}
