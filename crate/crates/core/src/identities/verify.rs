use std::fmt;

use serde::Serialize;

use super::catalog::{self, CatalogEntry, EntryKind, PositivityClaim};
use super::spec::{expand_product_side, expand_sum_side, Bindings, IdentitySpec, Rhs};
use crate::error::Result;
use crate::exec::Execution;
use crate::series::{Discrepancy, RationalTerm, SeriesComparison, Substitution, TruncatedSeries, WeightMonomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of comparing both sides of one identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: Bindings,
    pub order: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}", self.id)?;
        if self.params.m.is_some() {
            write!(f, " {}", self.params)?;
        }
        write!(f, " order={}", self.order)?;
        if let Some(d) = &self.discrepancy {
            write!(f, " first difference at q^{}: lhs {} vs rhs {}", d.degree, d.lhs, d.rhs)?;
        }
        Ok(())
    }
}

/// Expands both sides and compares them through `order`.
pub fn verify(spec: &IdentitySpec, order: usize) -> Result<VerificationReport> {
    let lhs = expand_sum_side(spec, order)?;
    let rhs = expand_product_side(spec, order)?;
    let cmp = lhs.compare(&rhs);
    Ok(VerificationReport {
        id: spec.id.clone(),
        params: spec.params,
        order,
        status: if cmp.is_equal() { Status::Pass } else { Status::Fail },
        discrepancy: cmp.discrepancy(),
    })
}

/// Order actually used for `entry` when `order` is requested: entries whose
/// explicit terms reach past `order` are raised to their recommended order.
pub fn effective_order(entry: &CatalogEntry, order: usize) -> usize {
    order.max(entry.recommended_order)
}

/// Every `(entry, parameter)` instance visited by a catalog sweep.
pub fn sweep_instances(entries: &[&'static CatalogEntry]) -> Vec<(&'static CatalogEntry, Bindings)> {
    entries.iter().flat_map(|&e| e.sweep().into_iter().map(move |b| (e, b))).collect()
}

/// Verifies each instance; reports come back in input order.
pub fn verify_instances(
    instances: Vec<(&'static CatalogEntry, Bindings)>,
    order: usize,
    exec: Execution,
) -> Result<Vec<VerificationReport>> {
    exec.map(instances, |(entry, b)| verify(&entry.instantiate(b)?, effective_order(entry, order)))
        .into_iter()
        .collect()
}

/// Verifies the whole catalog with all parameter sweeps.
pub fn verify_all(order: usize, exec: Execution) -> Result<Vec<VerificationReport>> {
    let entries: Vec<_> = catalog::catalog().iter().collect();
    verify_instances(sweep_instances(&entries), order, exec)
}

/// Compares each side of `spec` with every weight set to 1 against the
/// matching classical Rogers-Ramanujan product. Returns `None` for entries
/// that are not weight refinements of a classical side (specializations and
/// products with removed or added part sizes). For rational identities the
/// two erased sides are compared with each other.
pub fn erasure_check(spec: &IdentitySpec, order: usize) -> Result<Option<(SeriesComparison, SeriesComparison)>> {
    if !spec.substitution.is_identity() {
        return Ok(None);
    }
    let erase = Substitution::erase_all();
    let lhs = spec.lhs.expand(order, &erase)?;
    match &spec.rhs {
        Rhs::Product(p) if p.is_classical_shape() => {
            let rhs = p.expand(order, &erase)?;
            let residues: Vec<u32> = p.residues.iter().copied().collect();
            let classical = classical_product(&residues, order)?;
            Ok(Some((lhs.compare(&classical), rhs.compare(&classical))))
        }
        Rhs::Product(_) => Ok(None),
        Rhs::Terms(side) => {
            let rhs = side.expand(order, &erase)?;
            let cmp = lhs.compare(&rhs);
            Ok(Some((cmp.clone(), cmp)))
        }
    }
}

/// `prod 1/(1 - q^e)` over `e` with residue mod 5 in `residues`.
pub fn classical_product(residues: &[u32], order: usize) -> Result<TruncatedSeries> {
    super::spec::ProductSide::mod5(residues).expand(order, &Substitution::new())
}

/// A numerator coefficient that is negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeCoefficient {
    /// Position of the term in the checked term list.
    pub term: usize,
    pub q_degree: u32,
    pub monomial: String,
    pub coeff: i64,
}

/// The explicit terms whose numerators carry a positivity claim: the sum side
/// of a theorem, or the expanded side of a rational identity.
pub fn positivity_terms(spec: &IdentitySpec) -> Result<Vec<RationalTerm>> {
    match (&spec.rhs, find_kind(&spec.id)) {
        (Rhs::Terms(side), Some(EntryKind::RationalIdentity)) => {
            side.terms.iter().map(|t| t.substitute(&spec.substitution)).collect()
        }
        _ => spec.explicit_terms(),
    }
}

fn find_kind(id: &str) -> Option<EntryKind> {
    catalog::find(id).ok().map(|e| e.kind)
}

/// First negative coefficient among the positivity-claimed numerators.
pub fn first_negative_numerator(spec: &IdentitySpec) -> Result<Option<NegativeCoefficient>> {
    for (i, t) in positivity_terms(spec)?.iter().enumerate() {
        if let Some((d, m, c)) = t.numerator.first_negative() {
            return Ok(Some(NegativeCoefficient { term: i, q_degree: d + t.q_shift, monomial: monomial_label(&m), coeff: c }));
        }
    }
    Ok(None)
}

fn monomial_label(m: &WeightMonomial) -> String {
    m.to_string()
}

/// Whether `entry` claims positivity at the given parameters.
pub fn positivity_claimed(entry: &CatalogEntry, params: Bindings) -> bool {
    match entry.positivity {
        PositivityClaim::Exempt => false,
        PositivityClaim::Always => true,
        PositivityClaim::FromM(lo) => params.m.is_some_and(|m| m >= lo),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::QPoly;

    #[test]
    fn firsttw_passes() {
        let spec = catalog::instantiate("firsttw", Bindings::none()).unwrap();
        let r = verify(&spec, 60).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.to_string(), "PASS firsttw order=60");
    }

    #[test]
    fn part_m_thirteen_passes_at_80() {
        let spec = catalog::instantiate("partM", Bindings::m(12)).unwrap();
        assert!(verify(&spec, 80).unwrap().passed());
    }

    #[test]
    fn perturbed_numerator_fails_at_the_perturbed_degree() {
        let mut spec = catalog::instantiate("miniprop", Bindings::none()).unwrap();
        // q^2 (t + q) becomes q^2 (t + 2q): first visible change at q^3
        let extra = QPoly::term(1, WeightMonomial::ONE, 1);
        spec.lhs.terms[1].numerator = spec.lhs.terms[1].numerator.checked_add(&extra).unwrap();
        let r = verify(&spec, 40).unwrap();
        assert_eq!(r.status, Status::Fail);
        let d = r.discrepancy.unwrap();
        assert_eq!(d.degree, 3);
        assert_eq!((d.lhs.as_str(), d.rhs.as_str()), ("2", "1"));
    }

    #[test]
    fn report_json_shape() {
        let spec = catalog::instantiate("partM", Bindings::m(2)).unwrap();
        let r = verify(&spec, 30).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"id":"partM","params":{"M":2},"order":30,"status":"pass"}"#);
    }
}
