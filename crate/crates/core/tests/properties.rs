mod common;

use common::*;
use proptest::prelude::*;
use rrweights::partitions::{col, col_star, Partition};

proptest! {
    #[test]
    fn addition_is_a_commutative_group(a in series(), b in series(), c in series()) {
        addition_laws(&a, &b, &c)?;
    }

    #[test]
    fn multiplication_is_commutative_associative_and_distributive(a in series(), b in series(), c in series()) {
        multiplication_laws(&a, &b, &c)?;
    }

    #[test]
    fn geometric_inverse_cancels(f in factor(), a in series()) {
        geometric_inverse(&f, &a)?;
    }

    #[test]
    fn truncation_commutes_with_expansion(f in prop::collection::vec(factor(), 0..4), shift in 0u32..6, low in 0usize..30) {
        truncation(f, shift, low)?;
    }

    #[test]
    fn single_variable_products_count_partitions(sizes in prop::collection::btree_set(1u32..10, 1..5)) {
        single_variable_oracle(&sizes.into_iter().collect::<Vec<_>>())?;
    }

    #[test]
    fn conjugation_is_an_involution(p in partition(40)) {
        conjugation(&p)?;
    }
}

#[test]
fn col_maps_drop_staircases_and_invert_exhaustively() {
    let checked = col_exhaustive(40).unwrap();
    assert!(checked > 1000);
}

#[test]
fn conjugation_is_an_involution_exhaustively() {
    conjugation_exhaustive(25).unwrap();
}

#[test]
fn col_examples() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert_eq!(col(&p("(14,10,5,2)")).unwrap(), p("(4,3,2^3,1^2)"));
    assert_eq!(col_star(&p("(13,10,6,4)")).unwrap(), p("(4^2,2^2,1)"));
}
