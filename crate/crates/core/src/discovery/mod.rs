//! Solving for unknown sum-side numerators.
//!
//! Each unknown is one integer coefficient of one numerator, at a fixed
//! `q`-degree and weight monomial. The sum side is linear in the unknowns, so
//! matching it against a target series gives an exact linear system, reduced
//! here over the rationals.

mod linear;
mod problem_file;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{Rhs, SumSide};
use crate::series::{DenominatorFactor, QPoly, RationalTerm, SeriesComparison, Substitution, TruncatedSeries, WeightMonomial};
use linear::{primitive, Reduced};

pub use problem_file::parse_problem;

/// `q^q_shift * N(q) / prod denominator`, with `N` unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumeratorTemplate {
    pub q_shift: u32,
    pub denominator: Vec<DenominatorFactor>,
    /// Allowed weight monomials of `N` at `q^0, ..., q^D`.
    pub monomials: Vec<Vec<WeightMonomial>>,
}

impl NumeratorTemplate {
    /// The same monomial set at every degree `0..=degree`.
    pub fn uniform(q_shift: u32, denominator: Vec<DenominatorFactor>, degree: u32, monomials: &[WeightMonomial]) -> Self {
        NumeratorTemplate { q_shift, denominator, monomials: vec![monomials.to_vec(); degree as usize + 1] }
    }

    pub fn degree(&self) -> u32 {
        self.monomials.len().saturating_sub(1) as u32
    }

    pub fn term(&self, numerator: QPoly) -> RationalTerm {
        RationalTerm::new(self.q_shift, numerator, self.denominator.clone())
    }
}

/// One unknown coefficient: template index, `q`-degree within the numerator,
/// weight monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Unknown {
    pub template: usize,
    pub q_degree: u32,
    pub monomial: WeightMonomial,
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N{}[q^{} {}]", self.template, self.q_degree, self.monomial)
    }
}

/// Known sum-side terms, unknown numerators, and the series they must add up
/// to. The substitution applies to `fixed` and `target`; templates are taken
/// as already substituted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveryProblem {
    pub fixed: SumSide,
    pub target: Rhs,
    pub substitution: Substitution,
    pub templates: Vec<NumeratorTemplate>,
    /// Defaults to the number of unknowns plus 10.
    pub match_order: Option<usize>,
}

impl DiscoveryProblem {
    pub fn unknowns(&self) -> Vec<Unknown> {
        let mut out = Vec::new();
        for (t, tpl) in self.templates.iter().enumerate() {
            for (d, ms) in tpl.monomials.iter().enumerate() {
                for &m in ms {
                    out.push(Unknown { template: t, q_degree: d as u32, monomial: m });
                }
            }
        }
        out
    }

    pub fn match_order(&self) -> usize {
        self.match_order.unwrap_or(self.unknowns().len() + 10)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.unknowns().len();
        let mut seen = std::collections::BTreeSet::new();
        for u in self.unknowns() {
            if !seen.insert(u) {
                return Err(Error::InvalidProblem(format!("unknown {u} is listed twice")));
            }
        }
        if self.match_order() < n {
            return Err(Error::InvalidProblem(format!(
                "match order {} is below the number of unknowns {n}",
                self.match_order()
            )));
        }
        Ok(())
    }

    /// Target minus the fixed terms, through `q^order`.
    pub fn residual(&self, order: usize) -> Result<TruncatedSeries> {
        self.target_series(order)?.checked_sub(&self.fixed.expand(order, &self.substitution)?)
    }

    fn target_series(&self, order: usize) -> Result<TruncatedSeries> {
        match &self.target {
            Rhs::Product(p) => p.expand(order, &self.substitution),
            Rhs::Terms(s) => s.expand(order, &self.substitution),
        }
    }

    /// Numerators with the given value for each unknown, in template order.
    pub fn numerators(&self, values: &[i64]) -> Result<Vec<QPoly>> {
        let mut out = vec![QPoly::zero(); self.templates.len()];
        for (u, &c) in self.unknowns().iter().zip(values) {
            out[u.template].add_term(u.q_degree, u.monomial, c)?;
        }
        Ok(out)
    }

    /// Coefficient vector of `numerators`, or `None` if some term is outside
    /// the allowed monomial sets.
    pub fn coefficients(&self, numerators: &[QPoly]) -> Option<Vec<i64>> {
        if numerators.len() != self.templates.len() {
            return None;
        }
        let unknowns = self.unknowns();
        let index: BTreeMap<Unknown, usize> = unknowns.iter().enumerate().map(|(i, u)| (*u, i)).collect();
        let mut x = vec![0; unknowns.len()];
        for (t, p) in numerators.iter().enumerate() {
            for (d, m, c) in p.flat_terms() {
                x[*index.get(&Unknown { template: t, q_degree: d, monomial: m })?] = c;
            }
        }
        Some(x)
    }

    /// Compares fixed terms plus the filled-in templates with the target.
    pub fn check(&self, numerators: &[QPoly], order: usize) -> Result<SeriesComparison> {
        let mut side = self.fixed.clone();
        for (tpl, n) in self.templates.iter().zip(numerators) {
            side.terms.push(tpl.term(n.clone()));
        }
        Ok(side.expand(order, &self.substitution)?.compare(&self.target_series(order)?))
    }
}

/// Result of [`solve`].
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub unknowns: Vec<Unknown>,
    pub match_order: usize,
    pub equations: usize,
    pub outcome: Outcome,
    system: Reduced,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// One integral value per unknown.
    Unique(Vec<i64>),
    /// The particular solution has every free unknown at zero; the basis has
    /// one primitive integer vector per free unknown.
    Underdetermined { particular: Vec<BigRational>, basis: Vec<Vec<BigInt>> },
}

impl Solution {
    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn is_unique(&self) -> bool {
        matches!(self.outcome, Outcome::Unique(_))
    }

    /// True iff the coefficient vector solves every matched equation.
    pub fn contains(&self, values: &[i64]) -> bool {
        let x: Vec<BigRational> = values.iter().map(|&v| BigRational::from_integer(v.into())).collect();
        x.len() == self.unknowns.len() && self.system.satisfied_by(&x)
    }
}

/// Matches the sum side against the target at every `q`-degree through the
/// match order and every weight monomial, and solves exactly.
///
/// Errors with [`Error::Inconsistent`] if no assignment works and with
/// [`Error::NonIntegral`] if the unique solution is not integral.
pub fn solve(problem: &DiscoveryProblem) -> Result<Solution> {
    problem.validate()?;
    let order = problem.match_order();
    let unknowns = problem.unknowns();

    let mut rows: BTreeMap<(usize, WeightMonomial), (BTreeMap<usize, i64>, i64)> = BTreeMap::new();
    for (n, m, c) in problem.residual(order)?.flat_terms() {
        rows.entry((n as usize, m)).or_default().1 = c;
    }
    let mut bases = BTreeMap::new();
    for (col, u) in unknowns.iter().enumerate() {
        let tpl = &problem.templates[u.template];
        let start = (tpl.q_shift + u.q_degree) as usize;
        if start > order {
            continue;
        }
        let base = match bases.entry(u.template) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(RationalTerm::new(0, QPoly::one(), tpl.denominator.clone()).expand(order)?),
        };
        for (k, m, c) in base.flat_terms() {
            let n = start + k as usize;
            if n > order {
                break;
            }
            let entry = rows.entry((n, m.checked_mul(&u.monomial)?)).or_default();
            *entry.0.entry(col).or_insert(0) += c;
        }
    }

    let equations = rows.len();
    let mut system = Reduced::default();
    for (row, rhs) in rows.into_values() {
        let row = row
            .into_iter()
            .filter(|&(_, v)| v != 0)
            .map(|(c, v)| (c, BigRational::from_integer(v.into())))
            .collect();
        if !system.push(row, BigRational::from_integer(rhs.into())) {
            return Err(Error::Inconsistent);
        }
    }

    let n = unknowns.len();
    let particular = system.particular(n);
    let outcome = if system.rank() == n {
        let mut values = Vec::with_capacity(n);
        for (u, v) in unknowns.iter().zip(&particular) {
            match v.is_integer().then(|| v.to_integer().to_i64()).flatten() {
                Some(i) => values.push(i),
                None => return Err(Error::NonIntegral { unknown: u.to_string(), value: v.to_string() }),
            }
        }
        Outcome::Unique(values)
    } else {
        let basis = system.null_basis(n).iter().map(|b| primitive(b)).collect();
        Outcome::Underdetermined { particular, basis }
    };
    Ok(Solution { unknowns, match_order: order, equations, outcome, system })
}

/// Whether a numerator has only nonnegative coefficients, with the first
/// negative term as witness otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Positivity {
    pub nonnegative: bool,
    pub witness: Option<(u32, WeightMonomial, i64)>,
}

pub fn check_positivity(poly: &QPoly) -> Positivity {
    let witness = poly.first_negative();
    Positivity { nonnegative: witness.is_none(), witness }
}

/// Serializable summary of a solution with numerators as canonical strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionReport {
    pub status: &'static str,
    pub unknowns: usize,
    pub rank: usize,
    pub match_order: usize,
    pub equations: usize,
    /// Unique numerators, or the particular solution if underdetermined.
    pub numerators: Vec<String>,
    /// Present when underdetermined: one entry per free direction, each a list
    /// of numerator changes.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<Vec<String>>,
    pub positive: Vec<bool>,
}

impl SolutionReport {
    pub fn new(problem: &DiscoveryProblem, s: &Solution) -> Result<Self> {
        let k = problem.templates.len();
        let (status, numerators, basis, positive) = match &s.outcome {
            Outcome::Unique(values) => {
                let nums = problem.numerators(values)?;
                let positive = nums.iter().map(|p| check_positivity(p).nonnegative).collect();
                ("unique", nums.iter().map(QPoly::to_string).collect(), Vec::new(), positive)
            }
            Outcome::Underdetermined { particular, basis } => {
                let nums = rational_numerators(&s.unknowns, particular, k);
                let basis = basis
                    .iter()
                    .map(|b| {
                        let b: Vec<BigRational> = b.iter().map(|i| BigRational::from_integer(i.clone())).collect();
                        rational_numerators(&s.unknowns, &b, k)
                    })
                    .collect();
                ("underdetermined", nums, basis, Vec::new())
            }
        };
        Ok(SolutionReport {
            status,
            unknowns: s.unknowns.len(),
            rank: s.rank(),
            match_order: s.match_order,
            equations: s.equations,
            numerators,
            basis,
            positive,
        })
    }
}

impl fmt::Display for SolutionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} solution: {} unknowns, rank {}, {} equations through q^{}",
            self.status, self.unknowns, self.rank, self.equations, self.match_order
        )?;
        for (i, n) in self.numerators.iter().enumerate() {
            match self.positive.get(i) {
                Some(&p) => writeln!(f, "N{i} = {n}{}", if p { "" } else { "  (has a negative coefficient)" })?,
                None => writeln!(f, "N{i} = {n}")?,
            }
        }
        for (j, b) in self.basis.iter().enumerate() {
            let parts: Vec<String> = b.iter().enumerate().map(|(i, d)| format!("N{i} += {d}")).collect();
            writeln!(f, "direction {j}: {}", parts.join("; "))?;
        }
        Ok(())
    }
}

fn rational_numerators(unknowns: &[Unknown], x: &[BigRational], templates: usize) -> Vec<String> {
    let mut terms: Vec<Vec<String>> = vec![Vec::new(); templates];
    for (u, v) in unknowns.iter().zip(x) {
        if v.is_zero() {
            continue;
        }
        let q = match u.q_degree {
            0 => String::new(),
            1 => "q".to_string(),
            d => format!("q^{d}"),
        };
        let m = if u.monomial.is_one() { String::new() } else { u.monomial.to_string() };
        let body: Vec<&str> = [m.as_str(), q.as_str()].into_iter().filter(|s| !s.is_empty()).collect();
        let body = body.join("*");
        terms[u.template].push(match body.as_str() {
            "" => format!("({v})"),
            _ => format!("({v})*{body}"),
        });
    }
    terms
        .into_iter()
        .map(|t| if t.is_empty() { "0".to_string() } else { t.join(" + ") })
        .collect()
}
