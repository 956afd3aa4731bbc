use rrweights::discovery::{
    check_positivity, parse_problem, solve, DiscoveryProblem, NumeratorTemplate, Outcome, SolutionReport,
};
use rrweights::identities::{self, Bindings, Rhs, SumSide};
use rrweights::series::{DenominatorFactor, QPoly, RationalTerm, Substitution, WeightMonomial};
use rrweights::Error;

fn problem(name: &str) -> DiscoveryProblem {
    let path = format!("{}/../../problems/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_problem(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn q(s: &str) -> QPoly {
    s.parse().unwrap()
}

fn unique(p: &DiscoveryProblem) -> Vec<QPoly> {
    let s = solve(p).unwrap();
    match &s.outcome {
        Outcome::Unique(values) => p.numerators(values).unwrap(),
        other => panic!("expected a unique solution, got {other:?}"),
    }
}

fn sound_at_twice(p: &DiscoveryProblem, nums: &[QPoly]) {
    assert!(p.check(nums, 2 * p.match_order()).unwrap().is_equal());
}

#[test]
fn recovers_miniprop() {
    let p = problem("miniprop.txt");
    let nums = unique(&p);
    assert_eq!(nums, [q("t + q")]);
    sound_at_twice(&p, &nums);
}

#[test]
fn recovers_the_twvthm_q12_numerator() {
    let p = problem("twvthm-q12.txt");
    assert_eq!(p.unknowns().len(), 21);
    let nums = unique(&p);
    assert_eq!(nums, [q("1 + q + v^2*q^2 + v*q^3 + q^4 + q^5 + q^6")]);
    sound_at_twice(&p, &nums);
}

#[test]
fn recovers_the_twvx23_q12_numerator() {
    let p = problem("twvx23-q12.txt");
    let nums = unique(&p);
    assert_eq!(nums, [q("1 + q + v^2*q^2 + x*v*q^3 + x^2*q^4 + q^5 + q^6")]);
    sound_at_twice(&p, &nums);
}

// Over the common denominator (1 - t q^2)(1 - w q^3) the printed pairs read
//   (t + w q)(1 - w q^3),        w^2 + q + q^2
//   (t + w q + t^2 q^2)(1 - t q^2), q + q^2 + t^3
#[test]
fn two_weight_solution_space_contains_both_printed_pairs() {
    let p = problem("tw-pair.txt");
    let s = solve(&p).unwrap();
    let Outcome::Underdetermined { basis, .. } = &s.outcome else {
        panic!("expected several solutions");
    };
    assert!(!basis.is_empty());
    let times = |a: &str, b: &str| q(a).checked_mul(&q(b)).unwrap();
    let first = [times("t + w*q", "1 - w*q^3"), q("w^2 + q + q^2")];
    let second = [times("t + w*q + t^2*q^2", "1 - t*q^2"), q("q + q^2 + t^3")];
    for pair in [&first, &second] {
        let x = p.coefficients(pair).expect("within the template");
        assert!(s.contains(&x), "{pair:?}");
        sound_at_twice(&p, pair);
    }
    let off = [q("t + w*q"), q("w^2 + q + q^2")];
    assert!(!s.contains(&p.coefficients(&off).unwrap()));
}

#[test]
fn no_unknowns_reduces_to_a_check() {
    let p = problem("rr2-known.txt");
    let s = solve(&p).unwrap();
    assert_eq!(s.outcome, Outcome::Unique(vec![]));
    assert_eq!(s.rank(), 0);
    let report = SolutionReport::new(&p, &s).unwrap();
    assert_eq!(report.status, "unique");
}

#[test]
fn a_wrong_fixed_term_is_inconsistent() {
    let text = std::fs::read_to_string(format!("{}/../../problems/miniprop.txt", env!("CARGO_MANIFEST_DIR")))
        .unwrap()
        .replace("fixed miniprop 0", "fixed RR1 all");
    let p = parse_problem(&text).unwrap();
    assert_eq!(solve(&p).unwrap_err(), Error::Inconsistent);
}

// a/(1 - q^2) + b/(1 - q)^2 = 1 + q + 2q^2 through q^2 forces a = b = 1/2
#[test]
fn non_integral_unique_solutions_are_reported() {
    let one = vec![vec![WeightMonomial::ONE]];
    let p = DiscoveryProblem {
        fixed: SumSide::default(),
        target: Rhs::Terms(SumSide::new(vec![RationalTerm::new(0, q("1 + q + 2*q^2"), vec![])], None)),
        substitution: Substitution::new(),
        templates: vec![
            NumeratorTemplate { q_shift: 0, denominator: vec![DenominatorFactor::plain(2).unwrap()], monomials: one.clone() },
            NumeratorTemplate { q_shift: 0, denominator: vec![DenominatorFactor::plain(1).unwrap(); 2], monomials: one },
        ],
        match_order: Some(2),
    };
    assert!(matches!(solve(&p), Err(Error::NonIntegral { .. })));
}

#[test]
fn positivity_checks() {
    assert!(check_positivity(&q("t + w*q")).nonnegative);
    let neg = check_positivity(&q("w - 1"));
    assert!(!neg.nonnegative);
    assert_eq!(neg.witness, Some((0, WeightMonomial::ONE, -1)));
    let spec = identities::instantiate("parts2Meq", Bindings::m(6)).unwrap();
    for t in identities::positivity_terms(&spec).unwrap() {
        assert!(check_positivity(&t.numerator).nonnegative, "{t}");
    }
}

#[test]
fn match_order_must_cover_the_unknowns() {
    let mut p = problem("twvthm-q12.txt");
    p.match_order = Some(20);
    assert!(matches!(solve(&p), Err(Error::InvalidProblem(_))));
}
