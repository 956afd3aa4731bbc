//! Strategies and property bodies shared by the property and acceptance
//! suites.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use rrweights::combinatorics::{build_table, statement};
use rrweights::identities::Bindings;
use rrweights::partitions::{
    col, col_inverse, col_star, col_star_inverse, conjugate, count, enumerate, Partition, PartitionClass,
    WeightSignature,
};
use rrweights::series::{DenominatorFactor, QPoly, RationalTerm, TruncatedSeries, WeightMonomial, WeightPolynomial};

pub const ORDER: usize = 12;

pub fn poly() -> impl Strategy<Value = WeightPolynomial> {
    prop::collection::vec((prop::array::uniform4(0u32..3), -4i64..=4), 0..4)
        .prop_map(|terms| WeightPolynomial::from_terms(terms.into_iter().map(|(e, c)| (WeightMonomial(e), c))).unwrap())
}

pub fn series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(poly(), ORDER + 1).prop_map(TruncatedSeries::from_coeffs)
}

pub fn factor() -> impl Strategy<Value = DenominatorFactor> {
    (prop::array::uniform4(0u32..2), 1u32..8).prop_map(|(e, q)| DenominatorFactor::new(WeightMonomial(e), q).unwrap())
}

pub fn partition(max_n: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..8)
        .prop_filter("size", move |v| v.iter().sum::<u32>() <= max_n)
        .prop_map(Partition::from_unsorted)
}

pub fn addition_laws(a: &TruncatedSeries, b: &TruncatedSeries, c: &TruncatedSeries) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.checked_add(b).unwrap(), b.checked_add(a).unwrap());
    prop_assert_eq!(
        a.checked_add(b).unwrap().checked_add(c).unwrap(),
        a.checked_add(&b.checked_add(c).unwrap()).unwrap()
    );
    prop_assert_eq!(&a.checked_add(&TruncatedSeries::zero(ORDER)).unwrap(), a);
    prop_assert!(a.checked_sub(a).unwrap().is_zero());
    Ok(())
}

pub fn multiplication_laws(a: &TruncatedSeries, b: &TruncatedSeries, c: &TruncatedSeries) -> Result<(), TestCaseError> {
    let ab = a.checked_mul(b).unwrap();
    prop_assert_eq!(&ab, &b.checked_mul(a).unwrap());
    prop_assert_eq!(ab.checked_mul(c).unwrap(), a.checked_mul(&b.checked_mul(c).unwrap()).unwrap());
    prop_assert_eq!(
        a.checked_mul(&b.checked_add(c).unwrap()).unwrap(),
        ab.checked_add(&a.checked_mul(c).unwrap()).unwrap()
    );
    prop_assert_eq!(&a.checked_mul(&TruncatedSeries::one(ORDER)).unwrap(), a);
    Ok(())
}

/// `(1 - f) * 1/(1 - f) = 1` through `q^200`, and the same on a random series.
pub fn geometric_inverse(f: &DenominatorFactor, a: &TruncatedSeries) -> Result<(), TestCaseError> {
    let mut s = TruncatedSeries::one(200);
    s.mul_inverse_factor(f).unwrap();
    s.mul_factor(f).unwrap();
    prop_assert_eq!(s, TruncatedSeries::one(200));
    let mut b = a.clone();
    b.mul_factor(f).unwrap();
    b.mul_inverse_factor(f).unwrap();
    prop_assert_eq!(&b, a);
    Ok(())
}

pub fn truncation(f: Vec<DenominatorFactor>, shift: u32, low: usize) -> Result<(), TestCaseError> {
    let t = RationalTerm::new(shift, QPoly::one(), f);
    prop_assert_eq!(t.expand(40).unwrap().truncated(low), t.expand(low).unwrap());
    Ok(())
}

/// `1/prod(1 - q^s)` over a set `S` counts partitions with parts in `S`.
pub fn single_variable_oracle(sizes: &[u32]) -> Result<(), TestCaseError> {
    let den = sizes.iter().map(|&s| DenominatorFactor::plain(s).unwrap()).collect();
    let s = RationalTerm::new(0, QPoly::one(), den).expand(30).unwrap();
    let class = PartitionClass::Congruence {
        modulus: 100,
        residues: sizes.iter().copied().collect(),
        forbidden: Default::default(),
        extra: Default::default(),
    };
    for n in 0..=30u32 {
        prop_assert_eq!(s.coeff(n as usize).constant_term() as usize, count(&class, n), "n={}", n);
    }
    Ok(())
}

pub fn conjugation(p: &Partition) -> Result<(), TestCaseError> {
    let c = conjugate(p);
    prop_assert_eq!(c.size(), p.size());
    prop_assert_eq!(c.len() as u32, p.largest());
    prop_assert_eq!(&conjugate(&c), p);
    Ok(())
}

/// Size drops of `m^2` and `m(m+1)`, bounded images, and reconstruction, for
/// every difference-two partition of size at most `n_max`. Returns the number
/// of partitions checked.
pub fn col_exhaustive(n_max: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 0..=n_max {
        for p in enumerate(&PartitionClass::Diff2, n) {
            let m = p.len() as u32;
            let c = col(&p).map_err(|e| e.to_string())?;
            if c.size() != n - m * m || c.largest() > m || col_inverse(&c, p.len()).as_ref() != Some(&p) {
                return Err(format!("col fails on {p}"));
            }
            checked += 1;
        }
        for p in enumerate(&PartitionClass::Diff2Star, n) {
            let m = p.len() as u32;
            let c = col_star(&p).map_err(|e| e.to_string())?;
            if c.size() != n - m * (m + 1) || c.largest() > m || col_star_inverse(&c, p.len()).as_ref() != Some(&p) {
                return Err(format!("col* fails on {p}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Conjugation is an involution on every partition of size at most `n_max`.
pub fn conjugation_exhaustive(n_max: u32) -> Result<usize, String> {
    let all = PartitionClass::congruence(1, &[0]).unwrap();
    let mut checked = 0;
    for n in 0..=n_max {
        for p in enumerate(&all, n) {
            if conjugate(&conjugate(&p)) != p {
                return Err(format!("conjugation fails on {p}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Printed rows as `(mu, lambda, image, signature)` in our serialization; the
/// signature is empty for the two small tables, which print no such column.
pub fn printed_rows(file: &str) -> Vec<[String; 4]> {
    let path = format!("{}/tests/data/{file}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|line| {
            let cells: Vec<&str> = line.split('|').map(str::trim).collect();
            let norm = |s: &str| s.parse::<Partition>().unwrap().to_string();
            [norm(cells[0]), norm(cells[1]), norm(cells[2]), cells.get(3).map(|s| s.to_string()).unwrap_or_default()]
        })
        .collect()
}

pub fn table_rows(id: &str, params: Bindings, n: u32, only: Option<&[u32]>) -> Vec<[String; 4]> {
    let stmt = statement(id, params).unwrap();
    let only = only.map(|c| WeightSignature::from_counts(&stmt.watched, c));
    build_table(&stmt, n, only.as_ref())
        .unwrap()
        .into_iter()
        .map(|r| {
            let sig = if only.is_some() { String::new() } else { r.signature.to_string() };
            [r.mu.to_string(), r.lambda.to_string(), r.image.to_string(), sig]
        })
        .collect()
}
