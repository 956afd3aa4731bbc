use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// One of the four weight variables. The order here fixes the exponent layout
/// of [`WeightMonomial`] and the variable order of canonical strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    W,
    V,
    X,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::T, Var::W, Var::V, Var::X];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::W => 'w',
            Var::V => 'v',
            Var::X => 'x',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            't' => Some(Var::T),
            'w' => Some(Var::W),
            'v' => Some(Var::V),
            'x' => Some(Var::X),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A monomial `t^a w^b v^c x^d`. The all-zero exponent vector is the constant 1.
///
/// `Ord` is the canonical graded order: lower total degree first, then
/// lexicographic with `t > w > v > x` (so `t^2` precedes `t*w` precedes `w^2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct WeightMonomial(pub [u32; 4]);

impl WeightMonomial {
    pub const ONE: WeightMonomial = WeightMonomial([0; 4]);

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, exp: u32) -> Self {
        let mut e = [0; 4];
        e[v.index()] = exp;
        WeightMonomial(e)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn checked_mul(&self, other: &WeightMonomial) -> Result<WeightMonomial> {
        let mut e = [0u32; 4];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_add(other.0[i]).ok_or(Error::Overflow)?;
        }
        Ok(WeightMonomial(e))
    }

    pub fn checked_pow(&self, k: u32) -> Result<WeightMonomial> {
        let mut e = [0u32; 4];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i].checked_mul(k).ok_or(Error::Overflow)?;
        }
        Ok(WeightMonomial(e))
    }

    /// `t^a*w^b...` without the coefficient; empty for the constant monomial.
    pub(crate) fn factors(&self) -> Vec<String> {
        Var::ALL
            .iter()
            .filter_map(|&v| match self.exponent(v) {
                0 => None,
                1 => Some(v.symbol().to_string()),
                e => Some(format!("{}^{}", v.symbol(), e)),
            })
            .collect()
    }
}

impl Ord for WeightMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for WeightMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors = self.factors();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let mut ms = [
            WeightMonomial([0, 2, 0, 0]),
            WeightMonomial([1, 1, 0, 0]),
            WeightMonomial::ONE,
            WeightMonomial([2, 0, 0, 0]),
            WeightMonomial::var(Var::X),
            WeightMonomial::var(Var::T),
        ];
        ms.sort();
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["1", "t", "x", "t^2", "t*w", "w^2"]);
    }

    #[test]
    fn overflow_is_reported() {
        let big = WeightMonomial([u32::MAX, 0, 0, 0]);
        assert_eq!(big.checked_mul(&WeightMonomial::var(Var::T)), Err(Error::Overflow));
    }
}
