//! Refined partition counting behind the combinatorial corollaries.
//!
//! Each [`RefinementStatement`] is checked three ways: brute force on the
//! congruence side, the printed case rules on the difference-two side, and
//! coefficient extraction from the sum side of the linked identity.

mod statements;
mod table;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::identities::{self, Bindings};
use crate::partitions::{self, col, col_star, enumerate, signature, Partition, PartitionClass, WeightSignature};
use crate::series::{Substitution, Var};

pub use statements::{find_statement, statement, statements, StatementEntry};
pub use table::{build_table, render_table, TableRow};

/// Which difference-two class a statement reads, and with it which column map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffClass {
    /// `Diff2` with `col`.
    Diff2,
    /// `Diff2*` with `col*`.
    Diff2Star,
}

impl DiffClass {
    pub fn class(self) -> PartitionClass {
        match self {
            DiffClass::Diff2 => PartitionClass::Diff2,
            DiffClass::Diff2Star => PartitionClass::Diff2Star,
        }
    }

    pub fn image(self, lambda: &Partition) -> Result<Partition> {
        match self {
            DiffClass::Diff2 => col(lambda),
            DiffClass::Diff2Star => col_star(lambda),
        }
    }

    pub fn image_label(self) -> &'static str {
        match self {
            DiffClass::Diff2 => "col",
            DiffClass::Diff2Star => "col*",
        }
    }
}

/// What a case rule gets to look at.
#[derive(Debug, Clone, Copy)]
pub struct Case<'a> {
    pub n: u32,
    pub lambda: &'a Partition,
    pub image: &'a Partition,
}

impl Case<'_> {
    pub fn parts(&self) -> usize {
        self.lambda.len()
    }

    /// Multiplicity of `size` in the column image.
    pub fn count(&self, size: u32) -> u32 {
        self.image.multiplicity(size)
    }

    pub fn ones(&self) -> u32 {
        self.count(1)
    }
}

/// `admits(case, counts)`: does the rule assign the signature with these
/// multiplicities (in watch order) to this partition?
pub type CasePredicate = Box<dyn Fn(&Case, &[u32]) -> bool + Send + Sync>;

/// One numbered case of a corollary: a range of part counts and a predicate.
pub struct CaseRule {
    pub label: String,
    pub min_parts: usize,
    pub max_parts: Option<usize>,
    pub admits: CasePredicate,
}

impl CaseRule {
    pub fn new(
        label: impl Into<String>,
        min_parts: usize,
        max_parts: Option<usize>,
        admits: impl Fn(&Case, &[u32]) -> bool + Send + Sync + 'static,
    ) -> Self {
        CaseRule { label: label.into(), min_parts, max_parts, admits: Box::new(admits) }
    }

    pub fn covers(&self, parts: usize) -> bool {
        parts >= self.min_parts && self.max_parts.is_none_or(|hi| parts <= hi)
    }
}

impl fmt::Debug for CaseRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CaseRule")
            .field("label", &self.label)
            .field("min_parts", &self.min_parts)
            .field("max_parts", &self.max_parts)
            .finish()
    }
}

/// The identity whose sum-side coefficients should reproduce the counts.
#[derive(Debug, Clone)]
pub struct IdentityLink {
    pub id: &'static str,
    pub params: Bindings,
    /// Applied on top of the catalog entry's own substitution.
    pub substitution: Substitution,
    /// `vars[i]` marks watched size `i`.
    pub vars: Vec<Var>,
}

#[derive(Debug)]
pub struct RefinementStatement {
    pub id: String,
    pub params: Bindings,
    pub product_class: PartitionClass,
    /// Watched part sizes, in the order the signature is displayed.
    pub watched: Vec<u32>,
    pub diff_class: DiffClass,
    pub rules: Vec<CaseRule>,
    pub identity: IdentityLink,
    /// Smallest `n` the statement speaks about.
    pub n_min: u32,
    /// Column header for the signature, e.g. `(k,j,l)`.
    pub signature_label: &'static str,
}

/// Counts per signature at one `n`.
pub type SignatureCounts = BTreeMap<WeightSignature, i64>;

impl RefinementStatement {
    /// Every multiplicity vector `c` with `sum watched[i] * c[i] <= n`.
    pub fn candidates(&self, n: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.watched.len());
        fill_candidates(&self.watched, n, &mut cur, &mut out);
        out
    }

    /// The signature assigned to `lambda` by the case rules, or `None` when
    /// the rules reject it. Errors on a gap or an ambiguity.
    pub fn classify(&self, lambda: &Partition) -> Result<Option<WeightSignature>> {
        let n = lambda.size();
        if lambda.is_empty() {
            return Ok(Some(WeightSignature::zero(&self.watched)));
        }
        let image = self.diff_class.image(lambda)?;
        let m = lambda.len();
        let rules: Vec<&CaseRule> = self.rules.iter().filter(|r| r.covers(m)).collect();
        let rule = match rules.as_slice() {
            [] => {
                return Err(Error::ClassificationGap { id: self.id.clone(), n, lambda: lambda.to_string() });
            }
            [r] => *r,
            many => {
                let labels: Vec<&str> = many.iter().map(|r| r.label.as_str()).collect();
                return Err(Error::Ambiguous {
                    id: self.id.clone(),
                    n,
                    lambda: lambda.to_string(),
                    detail: format!("{m} parts matched by cases {}", labels.join(", ")),
                });
            }
        };
        let case = Case { n, lambda, image: &image };
        let admitted: Vec<Vec<u32>> =
            self.candidates(n).into_iter().filter(|c| (rule.admits)(&case, c)).collect();
        match admitted.as_slice() {
            [] => Ok(None),
            [c] => Ok(Some(WeightSignature::from_counts(&self.watched, c))),
            many => Err(Error::Ambiguous {
                id: self.id.clone(),
                n,
                lambda: lambda.to_string(),
                detail: format!(
                    "case {} admits signatures {}",
                    rule.label,
                    many.iter()
                        .map(|c| WeightSignature::from_counts(&self.watched, c).to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                ),
            }),
        }
    }

    /// Sum-side expansion of the linked identity with the link's substitution.
    pub fn linked_spec(&self) -> Result<identities::IdentitySpec> {
        let mut spec = identities::instantiate(self.identity.id, self.identity.params)?;
        for v in Var::ALL {
            if let Some(val) = self.identity.substitution.get(v) {
                spec.substitution = spec.substitution.with(v, val);
            }
        }
        Ok(spec)
    }
}

fn fill_candidates(watched: &[u32], budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    match watched.split_first() {
        None => out.push(cur.clone()),
        Some((&s, rest)) => {
            for c in 0..=budget / s {
                cur.push(c);
                fill_candidates(rest, budget - c * s, cur, out);
                cur.pop();
            }
        }
    }
}

/// Brute force on the congruence side, grouped by watched multiplicities.
pub fn count_product_refined(stmt: &RefinementStatement, n: u32) -> SignatureCounts {
    let mut out = SignatureCounts::new();
    for mu in enumerate(&stmt.product_class, n) {
        *out.entry(signature(&mu, &stmt.watched)).or_default() += 1;
    }
    out
}

/// `(lambda, image, signature)` for every partition the rules accept, in
/// decreasing lexicographic order of `lambda`.
pub fn classify_diff(stmt: &RefinementStatement, n: u32) -> Result<Vec<(Partition, Partition, WeightSignature)>> {
    let mut out = Vec::new();
    for lambda in enumerate(&stmt.diff_class.class(), n) {
        if let Some(sig) = stmt.classify(&lambda)? {
            let image = stmt.diff_class.image(&lambda)?;
            out.push((lambda, image, sig));
        }
    }
    Ok(out)
}

/// Case-rule classification on the difference-two side, grouped.
pub fn count_diff_refined(stmt: &RefinementStatement, n: u32) -> Result<SignatureCounts> {
    let mut out = SignatureCounts::new();
    for (_, _, sig) in classify_diff(stmt, n)? {
        *out.entry(sig).or_default() += 1;
    }
    Ok(out)
}

/// Coefficient of `q^n` in the linked sum side for every `n <= n_max`,
/// read as signature counts. Zero coefficients are omitted.
pub fn count_series(stmt: &RefinementStatement, n_max: u32) -> Result<Vec<SignatureCounts>> {
    let spec = stmt.linked_spec()?;
    let series = identities::expand_sum_side(&spec, n_max as usize)?;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        let mut counts = SignatureCounts::new();
        for (mono, &c) in series.coeff(n).terms() {
            let marked: u32 = stmt.identity.vars.iter().map(|&v| mono.exponent(v)).sum();
            let total: u32 = Var::ALL.iter().map(|&v| mono.exponent(v)).sum();
            if marked != total {
                return Err(Error::UnwatchedWeight { id: stmt.id.clone(), monomial: mono.to_string() });
            }
            let sig: Vec<u32> = stmt.identity.vars.iter().map(|&v| mono.exponent(v)).collect();
            counts.insert(WeightSignature::from_counts(&stmt.watched, &sig), c);
        }
        out.push(counts);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: u32,
    pub signature: WeightSignature,
    pub product: i64,
    pub diff: i64,
    pub series: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementReport {
    pub id: String,
    pub params: Bindings,
    pub n_min: u32,
    pub n_max: u32,
    pub status: identities::Status,
    /// Number of `(n, signature)` classes compared.
    pub classes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
}

impl RefinementReport {
    pub fn passed(&self) -> bool {
        self.status == identities::Status::Pass
    }
}

impl fmt::Display for RefinementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.id)?;
        if self.params.m.is_some() {
            write!(f, " {}", self.params)?;
        }
        write!(f, " n={}..{} classes={}", self.n_min, self.n_max, self.classes)?;
        if let Some(m) = &self.mismatch {
            write!(
                f,
                " mismatch at n={} signature {}: product {} diff {} series {}",
                m.n, m.signature, m.product, m.diff, m.series
            )?;
        }
        Ok(())
    }
}

/// Triple agreement for every `n` from the statement's lower bound to `n_max`.
pub fn check_refinement(stmt: &RefinementStatement, n_max: u32, exec: Execution) -> Result<RefinementReport> {
    let series = count_series(stmt, n_max)?;
    let ns: Vec<u32> = (stmt.n_min..=n_max).collect();
    let per_n = exec.map(ns, |n| -> Result<(u32, SignatureCounts, SignatureCounts)> {
        Ok((n, count_product_refined(stmt, n), count_diff_refined(stmt, n)?))
    });
    let mut classes = 0;
    let mut mismatch = None;
    for item in per_n {
        let (n, product, diff) = item?;
        let s = &series[n as usize];
        let keys: std::collections::BTreeSet<&WeightSignature> =
            product.keys().chain(diff.keys()).chain(s.keys()).collect();
        classes += keys.len();
        if mismatch.is_some() {
            continue;
        }
        for sig in keys {
            let get = |m: &SignatureCounts| m.get(sig).copied().unwrap_or(0);
            let (p, d, c) = (get(&product), get(&diff), get(s));
            if p != d || p != c {
                mismatch = Some(Mismatch { n, signature: sig.clone(), product: p, diff: d, series: c });
                break;
            }
        }
    }
    Ok(RefinementReport {
        id: stmt.id.clone(),
        params: stmt.params,
        n_min: stmt.n_min,
        n_max,
        status: if mismatch.is_none() { identities::Status::Pass } else { identities::Status::Fail },
        classes,
        mismatch,
    })
}

/// Runs [`check_refinement`] over every statement and its parameter sweep.
pub fn check_all(n_max: u32, exec: Execution) -> Result<Vec<RefinementReport>> {
    let mut out = Vec::new();
    for entry in statements() {
        for b in entry.sweep() {
            out.push(check_refinement(&entry.instantiate(b)?, n_max, exec)?);
        }
    }
    Ok(out)
}

/// Number of partitions of `n` in `class` (re-exported for callers that
/// only need the classical counts).
pub fn class_count(class: &PartitionClass, n: u32) -> usize {
    partitions::count(class, n)
}
