use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{DenominatorFactor, QPoly, RationalTerm, Substitution, TruncatedSeries, WeightMonomial};

/// Exponent of `q` in front of the `m`-th tail term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftRule {
    /// `q^(m^2)`, the first identity.
    Square,
    /// `q^(m(m+1))`, the second identity.
    Pronic,
}

impl ShiftRule {
    pub fn shift(self, m: u32) -> u32 {
        match self {
            ShiftRule::Square => m * m,
            ShiftRule::Pronic => m * (m + 1),
        }
    }
}

/// The infinite family `sum_{m >= start} q^shift(m) / prod_{e=1..m} (1 - q^e)`
/// with some denominator factors replaced (weighted) or dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailFamily {
    pub start: u32,
    pub shift: ShiftRule,
    /// `Some(f)` replaces the factor `1 - q^e`; `None` drops it.
    pub overrides: BTreeMap<u32, Option<DenominatorFactor>>,
}

impl TailFamily {
    pub fn new(start: u32, shift: ShiftRule) -> Self {
        TailFamily { start, shift, overrides: BTreeMap::new() }
    }

    /// Attaches weight `m` to the factor with exponent `e`.
    pub fn weighted(mut self, e: u32, m: WeightMonomial) -> Self {
        self.overrides.insert(e, Some(DenominatorFactor { weight: m, q_exp: e }));
        self
    }

    pub fn replaced(mut self, e: u32, f: DenominatorFactor) -> Self {
        self.overrides.insert(e, Some(f));
        self
    }

    pub fn term(&self, m: u32) -> RationalTerm {
        let denominator = (1..=m)
            .filter_map(|e| match self.overrides.get(&e) {
                Some(over) => *over,
                None => Some(DenominatorFactor { weight: WeightMonomial::ONE, q_exp: e }),
            })
            .collect();
        RationalTerm::new(self.shift.shift(m), QPoly::one(), denominator)
    }

    /// `(m, term)` for every tail term whose prefactor is within `order`.
    pub fn terms_through(&self, order: usize) -> Vec<(u32, RationalTerm)> {
        (self.start..)
            .take_while(|&m| self.shift.shift(m) as usize <= order)
            .map(|m| (m, self.term(m)))
            .collect()
    }
}

/// A sum of explicit rational terms plus an optional infinite tail.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SumSide {
    pub terms: Vec<RationalTerm>,
    pub tail: Option<TailFamily>,
}

impl SumSide {
    pub fn new(terms: Vec<RationalTerm>, tail: Option<TailFamily>) -> Self {
        SumSide { terms, tail }
    }

    /// All contributing terms with their index: explicit term `i` has index
    /// `i`, tail term `m` has index `m`. For the theorems in the catalog the
    /// index is the number of parts of the matching difference-two partition.
    pub fn indexed_terms(&self, order: usize) -> Vec<(u32, RationalTerm)> {
        let mut out: Vec<(u32, RationalTerm)> =
            self.terms.iter().cloned().enumerate().map(|(i, t)| (i as u32, t)).collect();
        if let Some(tail) = &self.tail {
            out.extend(tail.terms_through(order));
        }
        out
    }

    pub fn expand(&self, order: usize, sub: &Substitution) -> Result<TruncatedSeries> {
        let mut total = TruncatedSeries::zero(order);
        for (_, term) in self.indexed_terms(order) {
            let term = term.substitute(sub)?;
            total.add_assign(&term.expand(order)?)?;
        }
        Ok(total)
    }
}

/// `prefactor * prod 1/(1 - m_e q^e)` over the part sizes of a mod-5 rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSide {
    pub modulus: u32,
    pub residues: BTreeSet<u32>,
    pub weights: BTreeMap<u32, WeightMonomial>,
    pub removed: BTreeSet<u32>,
    pub added: BTreeSet<u32>,
    pub prefactor: Option<RationalTerm>,
}

impl ProductSide {
    pub fn mod5(residues: &[u32]) -> Self {
        ProductSide {
            modulus: 5,
            residues: residues.iter().copied().collect(),
            weights: BTreeMap::new(),
            removed: BTreeSet::new(),
            added: BTreeSet::new(),
            prefactor: None,
        }
    }

    /// Weights every part of size `e` by `m`; `e` must already be a part size.
    pub fn weighted(mut self, e: u32, m: WeightMonomial) -> Result<Self> {
        if !self.has_part(e) {
            return Err(Error::ParameterDomain {
                id: "product".into(),
                message: format!("cannot weight part size {e}: it is not a part of the product"),
            });
        }
        self.weights.insert(e, m);
        Ok(self)
    }

    pub fn removing(mut self, e: u32) -> Self {
        self.removed.insert(e);
        self
    }

    pub fn adding(mut self, e: u32) -> Self {
        self.added.insert(e);
        self
    }

    pub fn with_prefactor(mut self, t: RationalTerm) -> Self {
        self.prefactor = Some(t);
        self
    }

    pub fn has_part(&self, e: u32) -> bool {
        e > 0 && (self.added.contains(&e) || (self.residues.contains(&(e % self.modulus)) && !self.removed.contains(&e)))
    }

    /// Residue rule of the unweighted classical product this side refines.
    pub fn is_classical_shape(&self) -> bool {
        self.removed.is_empty() && self.added.is_empty()
    }

    pub fn factors(&self, order: usize) -> Vec<DenominatorFactor> {
        (1..=order as u32)
            .filter(|&e| self.has_part(e))
            .map(|e| DenominatorFactor {
                weight: self.weights.get(&e).copied().unwrap_or(WeightMonomial::ONE),
                q_exp: e,
            })
            .collect()
    }

    pub fn expand(&self, order: usize, sub: &Substitution) -> Result<TruncatedSeries> {
        let mut s = match &self.prefactor {
            Some(p) => p.substitute(sub)?.expand(order)?,
            None => TruncatedSeries::one(order),
        };
        for f in self.factors(order) {
            if let Some(g) = sub.apply_factor(&f)? {
                s.mul_inverse_factor(&g)?;
            }
        }
        Ok(s)
    }
}

/// Right-hand side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rhs {
    Product(ProductSide),
    /// A pure rational-function identity: another list of terms.
    Terms(SumSide),
}

/// Parameter bindings of an instantiated identity (only `M` occurs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, PartialOrd, Ord, Hash)]
pub struct Bindings {
    pub m: Option<u32>,
}

impl Bindings {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn m(m: u32) -> Self {
        Bindings { m: Some(m) }
    }

    pub fn to_map(&self) -> BTreeMap<String, u32> {
        self.m.iter().map(|&m| ("M".to_string(), m)).collect()
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "M={m}"),
            None => Ok(()),
        }
    }
}

impl Serialize for Bindings {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

/// A fully instantiated identity: `lhs = rhs`, after applying `substitution`
/// to both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySpec {
    pub id: String,
    pub params: Bindings,
    pub lhs: SumSide,
    pub rhs: Rhs,
    pub substitution: Substitution,
}

impl IdentitySpec {
    pub fn new(id: &str, params: Bindings, lhs: SumSide, rhs: Rhs) -> Self {
        IdentitySpec { id: id.to_string(), params, lhs, rhs, substitution: Substitution::new() }
    }

    pub fn product(&self) -> Option<&ProductSide> {
        match &self.rhs {
            Rhs::Product(p) => Some(p),
            Rhs::Terms(_) => None,
        }
    }

    /// Sum-side explicit terms after substitution, in order.
    pub fn explicit_terms(&self) -> Result<Vec<RationalTerm>> {
        self.lhs.terms.iter().map(|t| t.substitute(&self.substitution)).collect()
    }
}

pub fn expand_sum_side(spec: &IdentitySpec, order: usize) -> Result<TruncatedSeries> {
    spec.lhs.expand(order, &spec.substitution)
}

/// Expands the right-hand side: the product, or the second term list of a
/// rational identity.
pub fn expand_product_side(spec: &IdentitySpec, order: usize) -> Result<TruncatedSeries> {
    match &spec.rhs {
        Rhs::Product(p) => p.expand(order, &spec.substitution),
        Rhs::Terms(side) => side.expand(order, &spec.substitution),
    }
}

/// Sum-side contributions grouped by term index (see
/// [`SumSide::indexed_terms`]).
pub fn expand_sum_side_by_index(spec: &IdentitySpec, order: usize) -> Result<Vec<(u32, TruncatedSeries)>> {
    spec.lhs
        .indexed_terms(order)
        .into_iter()
        .map(|(i, t)| Ok((i, t.substitute(&spec.substitution)?.expand(order)?)))
        .collect()
}
