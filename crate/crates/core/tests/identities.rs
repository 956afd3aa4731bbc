use rrweights::identities::{
    self, catalog, erasure_check, first_negative_numerator, positivity_claimed, verify, verify_all, Bindings,
    EntryKind, Status,
};
use rrweights::series::{TruncatedSeries, WeightMonomial, WeightPolynomial};
use rrweights::{Error, Execution};

#[test]
fn full_catalog_verifies() {
    let reports = verify_all(60, Execution::Parallel).unwrap();
    let failures: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    assert!(reports.len() > 60);
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let a = verify_all(40, Execution::Sequential).unwrap();
    let b = verify_all(40, Execution::Parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn sweeps_cover_the_stated_ranges() {
    let part_m = identities::find("partM").unwrap().sweep();
    let ms: Vec<u32> = part_m.iter().map(|b| b.m.unwrap() + 1).collect();
    assert_eq!(ms, vec![2, 3, 7, 8, 12, 13, 17, 18, 22, 23, 27, 28, 32, 33, 37, 38]);
    let two = identities::find("twopartM").unwrap().sweep();
    let ms: Vec<u32> = two.iter().map(|b| b.m.unwrap()).collect();
    assert_eq!(ms, vec![7, 8, 12, 13, 17, 18, 22, 23, 27, 28, 32, 33, 37, 38]);
    let first = identities::find("twopart14").unwrap().sweep();
    let ms: Vec<u32> = first.iter().map(|b| b.m.unwrap()).collect();
    assert_eq!(ms, vec![4, 6, 14, 16, 24, 26, 34, 36]);
}

#[test]
fn parameter_domain_errors() {
    assert!(identities::instantiate("twopartM", Bindings::m(7)).is_ok());
    assert!(matches!(
        identities::instantiate("twopartM", Bindings::m(3)),
        Err(Error::ParameterDomain { .. })
    ));
    assert!(matches!(identities::instantiate("partM", Bindings::m(3)), Err(Error::ParameterDomain { .. })));
    assert!(matches!(identities::instantiate("partM", Bindings::none()), Err(Error::ParameterDomain { .. })));
    assert!(matches!(identities::instantiate("RR2", Bindings::m(1)), Err(Error::ParameterDomain { .. })));
    assert!(matches!(identities::instantiate("nope", Bindings::none()), Err(Error::UnknownId(_))));
}

#[test]
fn every_entry_has_constant_term_one() {
    for e in catalog().iter().filter(|e| e.kind == EntryKind::Theorem) {
        for b in e.sweep().into_iter().take(2) {
            let spec = e.instantiate(b).unwrap();
            let s = identities::expand_sum_side(&spec, 0).unwrap();
            assert_eq!(s, TruncatedSeries::one(0), "{}", e.id);
        }
    }
}

#[test]
fn rr2_product_prefix() {
    let spec = identities::instantiate("RR2", Bindings::none()).unwrap();
    let s = identities::expand_product_side(&spec, 7).unwrap();
    let flat: Vec<i64> = (0..=7).map(|n| s.coeff(n).constant_term()).collect();
    assert_eq!(flat, vec![1, 0, 1, 1, 1, 1, 2, 2]);
}

#[test]
fn miniprop_q4_coefficient_is_t_squared() {
    let spec = identities::instantiate("miniprop", Bindings::none()).unwrap();
    let p = identities::expand_product_side(&spec, 4).unwrap();
    let t2 = WeightPolynomial::monomial(WeightMonomial([2, 0, 0, 0]), 1);
    assert_eq!(p.coeff(4), &t2);
    let s = identities::expand_sum_side(&spec, 4).unwrap();
    assert_eq!(s.coeff(4), &t2);
}

#[test]
fn twvx14_includes_the_q64_term() {
    let spec = identities::instantiate("twvx14thm", Bindings::none()).unwrap();
    let mut without = spec.clone();
    without.lhs.terms.pop();
    let a = identities::expand_sum_side(&spec, 80).unwrap();
    let b = identities::expand_sum_side(&without, 80).unwrap();
    let diff = a.compare(&b).discrepancy().unwrap();
    assert_eq!(diff.degree, 64);
    assert!(verify(&spec, 80).unwrap().passed());
}

#[test]
fn weight_erasure_matches_classical_sides() {
    let mut checked = 0;
    for e in catalog() {
        for b in e.sweep().into_iter().take(3) {
            let spec = e.instantiate(b).unwrap();
            if let Some((l, r)) = erasure_check(&spec, 60).unwrap() {
                assert!(l.is_equal(), "{} {b} lhs {:?}", e.id, l.discrepancy());
                assert!(r.is_equal(), "{} {b} rhs {:?}", e.id, r.discrepancy());
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn positivity_holds_where_claimed() {
    for e in catalog() {
        for b in e.sweep() {
            if positivity_claimed(e, b) {
                let spec = e.instantiate(b).unwrap();
                assert_eq!(first_negative_numerator(&spec).unwrap(), None, "{} {b}", e.id);
            }
        }
    }
}

#[test]
fn parts2meq_positivity_boundary_is_six() {
    let entry = identities::find("parts2Meq").unwrap();
    for m in 1..=40 {
        let spec = entry.instantiate(Bindings::m(m)).unwrap();
        let neg = first_negative_numerator(&spec).unwrap();
        assert_eq!(neg.is_none(), m >= 6, "M={m}: {neg:?}");
    }
}

#[test]
fn firsttw_and_secondtw_differ_only_as_term_lists() {
    let a = identities::instantiate("firsttw", Bindings::none()).unwrap();
    let b = identities::instantiate("secondtw", Bindings::none()).unwrap();
    assert_eq!(a.rhs, b.rhs);
    assert_ne!(a.lhs.terms, b.lhs.terms);
    let sa = identities::expand_sum_side(&a, 60).unwrap();
    let sb = identities::expand_sum_side(&b, 60).unwrap();
    assert!(sa.compare(&sb).is_equal());
}

#[test]
fn rational_identities_have_no_product() {
    for e in catalog() {
        let spec = e.instantiate(e.sweep()[0]).unwrap();
        assert_eq!(spec.product().is_none(), e.kind == EntryKind::RationalIdentity, "{}", e.id);
    }
}

#[test]
fn spec2_head_terms_vanish_beyond_26() {
    let spec = identities::instantiate("spec2", Bindings::none()).unwrap();
    let terms = spec.explicit_terms().unwrap();
    for t in &terms[..5] {
        assert!(t.denominator.is_empty(), "{t}");
        if let Some(d) = t.numerator.degree() {
            assert!(d + t.q_shift <= 26, "{t}");
        }
    }
}

#[test]
fn reorder_identities_hold() {
    for id in ["reorder-A", "reorder-B"] {
        let spec = identities::instantiate(id, Bindings::none()).unwrap();
        let r = verify(&spec, 60).unwrap();
        assert_eq!(r.status, Status::Pass, "{r}");
    }
}
