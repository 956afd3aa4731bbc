use std::collections::BTreeMap;

use serde::Serialize;

use super::{classify_diff, RefinementStatement};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, signature, Partition, WeightSignature};

/// One line of a bijection table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub mu: Partition,
    pub lambda: Partition,
    pub image: Partition,
    pub signature: WeightSignature,
}

/// Pairs product-side and difference-side partitions of `n` with equal
/// signatures.
///
/// Without `only`, every signature class must have exactly one member on each
/// side. With `only`, the single class is kept and its members are paired by
/// rank in decreasing lexicographic order. Rows are sorted by decreasing `mu`.
pub fn build_table(stmt: &RefinementStatement, n: u32, only: Option<&WeightSignature>) -> Result<Vec<TableRow>> {
    let mut product: BTreeMap<WeightSignature, Vec<Partition>> = BTreeMap::new();
    for mu in enumerate(&stmt.product_class, n) {
        product.entry(signature(&mu, &stmt.watched)).or_default().push(mu);
    }
    let mut diff: BTreeMap<WeightSignature, Vec<(Partition, Partition)>> = BTreeMap::new();
    for (lambda, image, sig) in classify_diff(stmt, n)? {
        diff.entry(sig).or_default().push((lambda, image));
    }
    let mut sigs: Vec<&WeightSignature> = product.keys().chain(diff.keys()).collect();
    sigs.sort();
    sigs.dedup();
    if let Some(s) = only {
        sigs.retain(|&x| x == s);
    }

    let mut rows = Vec::new();
    for sig in sigs {
        let mus = product.get(sig).map(Vec::as_slice).unwrap_or_default();
        let lambdas = diff.get(sig).map(Vec::as_slice).unwrap_or_default();
        let paired = mus.len() == lambdas.len() && (only.is_some() || mus.len() == 1);
        if !paired {
            return Err(Error::NonSingletonClass {
                id: stmt.id.clone(),
                n,
                signature: sig.to_string(),
                product: mus.len(),
                diff: lambdas.len(),
            });
        }
        for (mu, (lambda, image)) in mus.iter().zip(lambdas) {
            rows.push(TableRow {
                mu: mu.clone(),
                lambda: lambda.clone(),
                image: image.clone(),
                signature: sig.clone(),
            });
        }
    }
    rows.sort_by(|a, b| b.mu.cmp(&a.mu));
    Ok(rows)
}

/// Aligned plain text: `mu | lambda | col | signature`.
pub fn render_table(stmt: &RefinementStatement, rows: &[TableRow]) -> String {
    let header = [
        "mu".to_string(),
        "lambda".to_string(),
        stmt.diff_class.image_label().to_string(),
        stmt.signature_label.to_string(),
    ];
    let body: Vec<[String; 4]> = rows
        .iter()
        .map(|r| [r.mu.to_string(), r.lambda.to_string(), r.image.to_string(), r.signature.to_string()])
        .collect();
    let mut widths = header.each_ref().map(String::len);
    for line in &body {
        for (w, cell) in widths.iter_mut().zip(line) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&header).chain(&body) {
        let cells: Vec<String> = line.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
    out
}
