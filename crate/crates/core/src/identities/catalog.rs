//! Every identity the crate knows, stored exactly as displayed, plus the
//! weight specializations derived from them.

use std::collections::BTreeMap;

use super::spec::{Bindings, IdentitySpec, ProductSide, Rhs, ShiftRule, SumSide, TailFamily};
use crate::error::{Error, Result};
use crate::series::{DenominatorFactor, QPoly, RationalTerm, Substitution, Var, WeightMonomial, WeightValue};

/// Identities with a product side versus pure rational-function identities
/// that anchor the derivations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Theorem,
    RationalIdentity,
}

/// Which sum-side numerators are expected to have nonnegative coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositivityClaim {
    /// No claim (helper identities carrying `(w - 1)` or subtractions).
    Exempt,
    /// Every explicit numerator, for every admissible parameter.
    Always,
    /// Every explicit numerator once `M` reaches the given bound.
    FromM(u32),
}

/// Admissible values of the parameter `M`.
#[derive(Debug, Clone, Copy)]
pub struct ParamRule {
    pub description: &'static str,
    pub admissible: fn(u32) -> bool,
    /// Largest `M` visited by sweeps.
    pub sweep_max: u32,
}

impl ParamRule {
    pub fn sweep(&self) -> Vec<u32> {
        (1..=self.sweep_max).filter(|&m| (self.admissible)(m)).collect()
    }
}

/// One catalog record; `build` instantiates it for an admissible parameter.
#[derive(Clone, Copy)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: EntryKind,
    pub param: Option<ParamRule>,
    pub positivity: PositivityClaim,
    /// Smallest order at which every explicit term contributes.
    pub recommended_order: usize,
    /// Free-form remark shown with the entry.
    pub note: Option<&'static str>,
    build: fn(Bindings) -> Result<IdentitySpec>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

impl CatalogEntry {
    /// Parameter values visited by a sweep: one empty binding for
    /// unparameterized entries.
    pub fn sweep(&self) -> Vec<Bindings> {
        match &self.param {
            Some(rule) => rule.sweep().into_iter().map(Bindings::m).collect(),
            None => vec![Bindings::none()],
        }
    }

    pub fn instantiate(&self, params: Bindings) -> Result<IdentitySpec> {
        match (&self.param, params.m) {
            (Some(rule), Some(m)) if (rule.admissible)(m) => (self.build)(params),
            (Some(rule), Some(m)) => Err(Error::ParameterDomain {
                id: self.id.into(),
                message: format!("M={m} is not admissible ({})", rule.description),
            }),
            (Some(rule), None) => Err(Error::ParameterDomain {
                id: self.id.into(),
                message: format!("requires a value for M ({})", rule.description),
            }),
            (None, Some(_)) => Err(Error::ParameterDomain {
                id: self.id.into(),
                message: "takes no parameters".into(),
            }),
            (None, None) => (self.build)(params),
        }
    }

    pub fn has_parameter(&self) -> bool {
        self.param.is_some()
    }
}

/// All catalog entries, in a fixed order.
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn find(id: &str) -> Result<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// Looks up `id` and instantiates it.
pub fn instantiate(id: &str, params: Bindings) -> Result<IdentitySpec> {
    find(id)?.instantiate(params)
}

// ---------------------------------------------------------------------------
// building blocks

const T: Var = Var::T;
const W: Var = Var::W;
const V: Var = Var::V;
const X: Var = Var::X;

fn mono(v: Var) -> WeightMonomial {
    WeightMonomial::var(v)
}

fn p(e: u32) -> DenominatorFactor {
    DenominatorFactor { weight: WeightMonomial::ONE, q_exp: e }
}

fn wt(v: Var, e: u32) -> DenominatorFactor {
    DenominatorFactor { weight: mono(v), q_exp: e }
}

fn poly(s: &str) -> QPoly {
    s.parse().expect("catalog polynomial literals are well formed")
}

fn term(shift: u32, numerator: &str, den: Vec<DenominatorFactor>) -> RationalTerm {
    RationalTerm::new(shift, poly(numerator), den)
}

/// `(1 - q)(1 - q^2)...(1 - q^k)`.
fn q_factorial(k: u32) -> Vec<DenominatorFactor> {
    (1..=k).map(p).collect()
}

/// `1 - q^e`.
fn one_minus(e: u32) -> QPoly {
    let mut out = QPoly::one();
    out.add_term(e, WeightMonomial::ONE, -1).expect("small coefficients");
    out
}

fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    a.checked_mul(b).expect("small coefficients")
}

fn add(a: &QPoly, b: &QPoly) -> QPoly {
    a.checked_add(b).expect("small coefficients")
}

fn shifted(a: &QPoly, k: u32) -> QPoly {
    a.shifted(k).expect("small exponents")
}

/// `1 + q + ... + q^(M-2) + t q^(M-1) + q^M`.
fn one_part_numerator_second(m: u32) -> QPoly {
    let mut n = QPoly::q_integer(m - 1);
    n.add_term(m - 1, mono(T), 1).unwrap();
    n.add_term(m, WeightMonomial::ONE, 1).unwrap();
    n
}

/// `1 + q + ... + q^(M-1) + t q^M`.
fn one_part_numerator_first(m: u32) -> QPoly {
    let mut n = QPoly::q_integer(m);
    n.add_term(m, mono(T), 1).unwrap();
    n
}

/// `q^6 ([M]_q + (w - 1)(q^(M-3) + q^(M-6))) / ((1 - t q^2)(1 - w q^M))`,
/// written with the `q^6` folded in so that small `M` stays polynomial.
fn two_part_term_second(m: u32) -> RationalTerm {
    let w_minus_1 = poly("w - 1");
    let low = add(&QPoly::term(m + 3, WeightMonomial::ONE, 1), &QPoly::term(m, WeightMonomial::ONE, 1));
    let numerator = add(&shifted(&QPoly::q_integer(m), 6), &mul(&w_minus_1, &low));
    RationalTerm::new(0, numerator, vec![wt(T, 2), wt(W, m)]).normalized()
}

/// `q^4 ([M/2]_{q^2} + (w - 1) q^(M-4)) / ((1 - t q)(1 - w q^M))`.
fn two_part_term_first(m: u32) -> RationalTerm {
    let numerator = add(
        &shifted(&QPoly::q_integer_step(m / 2, 2), 4),
        &mul(&poly("w - 1"), &QPoly::term(m, WeightMonomial::ONE, 1)),
    );
    RationalTerm::new(0, numerator, vec![wt(T, 1), wt(W, m)]).normalized()
}

fn rr_residue(m: u32, residues: &[u32]) -> bool {
    residues.contains(&(m % 5))
}

/// The terms `k = lo..=hi` of `prefactor * sum_k q^shift(k) / (q;q)_k` with
/// the prefactor `num / extra` multiplied into each term.
fn prefactored_terms(
    lo: u32,
    hi: u32,
    shift: ShiftRule,
    num: &QPoly,
    extra: &[DenominatorFactor],
) -> Vec<RationalTerm> {
    (lo..=hi)
        .map(|k| {
            let mut den = q_factorial(k);
            den.extend_from_slice(extra);
            RationalTerm::new(shift.shift(k), num.clone(), den)
        })
        .collect()
}

fn m_of(params: Bindings) -> u32 {
    params.m.expect("instantiate checks parameter presence")
}

// ---------------------------------------------------------------------------
// classical identities

fn build_rr1(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "RR1",
        params,
        SumSide::new(vec![], Some(TailFamily::new(0, ShiftRule::Square))),
        Rhs::Product(ProductSide::mod5(&[1, 4])),
    ))
}

fn build_rr2(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "RR2",
        params,
        SumSide::new(vec![], Some(TailFamily::new(0, ShiftRule::Pronic))),
        Rhs::Product(ProductSide::mod5(&[2, 3])),
    ))
}

// ---------------------------------------------------------------------------
// one weighted part

fn build_miniprop(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "miniprop",
        params,
        SumSide::new(
            vec![RationalTerm::one(), term(2, "t + q", vec![wt(T, 2)])],
            Some(TailFamily::new(2, ShiftRule::Pronic).weighted(2, mono(T))),
        ),
        Rhs::Product(ProductSide::mod5(&[2, 3]).weighted(2, mono(T))?),
    ))
}

fn build_weirdeq(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "weirdeq",
        params,
        SumSide::new(
            vec![term(0, "1 - q^2", vec![wt(T, 2)]), term(2, "1 - q^2", vec![wt(T, 2), p(1)])],
            None,
        ),
        Rhs::Terms(SumSide::new(vec![RationalTerm::one(), term(2, "t + q", vec![wt(T, 2)])], None)),
    ))
}

fn build_prefactor_second(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let extra = [wt(T, m + 1)];
    let lhs = prefactored_terms(0, m, ShiftRule::Pronic, &one_minus(m + 1), &extra);
    let mut rhs = vec![
        RationalTerm::one(),
        RationalTerm::new(2, one_part_numerator_second(m), extra.to_vec()),
    ];
    rhs.extend(prefactored_terms(2, m, ShiftRule::Pronic, &one_minus(m + 1), &extra));
    Ok(IdentitySpec::new(
        "prefactorM",
        params,
        SumSide::new(lhs, None),
        Rhs::Terms(SumSide::new(rhs, None)),
    ))
}

fn build_part_m(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let s = m + 1;
    let mut terms = vec![
        RationalTerm::one(),
        RationalTerm::new(2, one_part_numerator_second(m), vec![wt(T, s)]),
    ];
    for k in 2..=m {
        let mut den: Vec<_> = (2..=k).map(p).collect();
        den.push(wt(T, s));
        terms.push(RationalTerm::new(k * (k + 1), QPoly::q_integer(s), den));
    }
    Ok(IdentitySpec::new(
        "partM",
        params,
        SumSide::new(terms, Some(TailFamily::new(s, ShiftRule::Pronic).weighted(s, mono(T)))),
        Rhs::Product(
            ProductSide::mod5(&[2, 3]).with_prefactor(RationalTerm::new(0, one_minus(s), vec![wt(T, s)])),
        ),
    ))
}

fn build_prefactor_first(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let extra = [wt(T, m + 1)];
    let lhs = prefactored_terms(0, m, ShiftRule::Square, &one_minus(m + 1), &extra);
    let mut rhs = vec![
        RationalTerm::one(),
        RationalTerm::new(1, one_part_numerator_first(m), extra.to_vec()),
    ];
    rhs.extend(prefactored_terms(2, m, ShiftRule::Square, &one_minus(m + 1), &extra));
    Ok(IdentitySpec::new(
        "prefactorM-first",
        params,
        SumSide::new(lhs, None),
        Rhs::Terms(SumSide::new(rhs, None)),
    ))
}

fn build_part_m_eq(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let s = m + 1;
    let mut terms = vec![
        RationalTerm::one(),
        RationalTerm::new(1, one_part_numerator_first(m), vec![wt(T, s)]),
    ];
    for k in 2..=m {
        let mut den = vec![wt(T, s)];
        den.extend((2..=k).map(p));
        terms.push(RationalTerm::new(k * k, QPoly::q_integer(s), den));
    }
    Ok(IdentitySpec::new(
        "partMeq",
        params,
        SumSide::new(terms, Some(TailFamily::new(s, ShiftRule::Square).weighted(s, mono(T)))),
        Rhs::Product(
            ProductSide::mod5(&[1, 4]).with_prefactor(RationalTerm::new(0, one_minus(s), vec![wt(T, s)])),
        ),
    ))
}

// ---------------------------------------------------------------------------
// two weighted parts

fn build_parts2m_eq(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let num = mul(&one_minus(2), &one_minus(m));
    let lhs = prefactored_terms(0, 2, ShiftRule::Pronic, &num, &[wt(T, 2), wt(W, m)]);
    let rhs = vec![RationalTerm::one(), term(2, "t + q", vec![wt(T, 2)]), two_part_term_second(m)];
    Ok(IdentitySpec::new(
        "parts2Meq",
        params,
        SumSide::new(lhs, None),
        Rhs::Terms(SumSide::new(rhs, None)),
    ))
}

fn build_two_part_m(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let mut terms = vec![RationalTerm::one(), term(2, "t + q", vec![wt(T, 2)]), two_part_term_second(m)];
    for k in 3..m {
        let mut den = vec![wt(T, 2)];
        den.extend((3..=k).map(p));
        den.push(wt(W, m));
        terms.push(RationalTerm::new(k * (k + 1), QPoly::q_integer(m), den));
    }
    let tail = TailFamily::new(m, ShiftRule::Pronic).weighted(2, mono(T)).weighted(m, mono(W));
    Ok(IdentitySpec::new(
        "twopartM",
        params,
        SumSide::new(terms, Some(tail)),
        Rhs::Product(
            ProductSide::mod5(&[2, 3])
                .weighted(2, mono(T))?
                .with_prefactor(RationalTerm::new(0, one_minus(m), vec![wt(W, m)])),
        ),
    ))
}

fn build_parts1m_eq(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let num = mul(&one_minus(1), &one_minus(m));
    let lhs = prefactored_terms(0, 2, ShiftRule::Square, &num, &[wt(T, 1), wt(W, m)]);
    let rhs = vec![RationalTerm::one(), term(1, "t", vec![wt(T, 1)]), two_part_term_first(m)];
    Ok(IdentitySpec::new(
        "parts1Meq",
        params,
        SumSide::new(lhs, None),
        Rhs::Terms(SumSide::new(rhs, None)),
    ))
}

fn build_two_part_14(params: Bindings) -> Result<IdentitySpec> {
    let m = m_of(params);
    let mut terms = vec![RationalTerm::one(), term(1, "t", vec![wt(T, 1)]), two_part_term_first(m)];
    for k in 3..m {
        let mut den = vec![wt(T, 1)];
        den.extend((3..=k).map(p));
        den.push(wt(W, m));
        terms.push(RationalTerm::new(k * k, QPoly::q_integer_step(m / 2, 2), den));
    }
    let tail = TailFamily::new(m, ShiftRule::Square).weighted(1, mono(T)).weighted(m, mono(W));
    Ok(IdentitySpec::new(
        "twopart14",
        params,
        SumSide::new(terms, Some(tail)),
        Rhs::Product(
            ProductSide::mod5(&[1, 4])
                .weighted(1, mono(T))?
                .with_prefactor(RationalTerm::new(0, one_minus(m), vec![wt(W, m)])),
        ),
    ))
}

fn tw_tail() -> TailFamily {
    TailFamily::new(3, ShiftRule::Pronic).weighted(2, mono(T)).weighted(3, mono(W))
}

fn tw_product() -> Result<ProductSide> {
    ProductSide::mod5(&[2, 3]).weighted(2, mono(T))?.weighted(3, mono(W))
}

fn build_firsttw(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "firsttw",
        params,
        SumSide::new(
            vec![
                RationalTerm::one(),
                term(2, "t + w*q", vec![wt(T, 2)]),
                term(6, "w^2 + q + q^2", vec![wt(T, 2), wt(W, 3)]),
            ],
            Some(tw_tail()),
        ),
        Rhs::Product(tw_product()?),
    ))
}

fn build_secondtw(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "secondtw",
        params,
        SumSide::new(
            vec![
                RationalTerm::one(),
                term(2, "t + w*q + t^2*q^2", vec![wt(W, 3)]),
                term(6, "q + q^2 + t^3", vec![wt(T, 2), wt(W, 3)]),
            ],
            Some(tw_tail()),
        ),
        Rhs::Product(tw_product()?),
    ))
}

// ---------------------------------------------------------------------------
// three and four weighted parts

const SEVEN: &str = "1 + q + q^2 + q^3 + q^4 + q^5 + q^6";

fn twv_head() -> Vec<RationalTerm> {
    vec![
        term(2, "t + w*q", vec![wt(T, 2)]),
        term(6, "w^2 + v*q + q^2", vec![wt(T, 2), wt(W, 3)]),
        term(12, "1 + q + v^2*q^2 + v*q^3 + q^4 + q^5 + q^6", vec![wt(T, 2), wt(W, 3), wt(V, 7)]),
    ]
}

fn build_twvthm(params: Bindings) -> Result<IdentitySpec> {
    let mut terms = vec![RationalTerm::one()];
    terms.extend(twv_head());
    terms.push(term(20, SEVEN, vec![wt(T, 2), wt(W, 3), p(4), wt(V, 7)]));
    terms.push(term(30, SEVEN, vec![wt(T, 2), wt(W, 3), p(4), p(5), wt(V, 7)]));
    terms.push(term(42, SEVEN, vec![wt(T, 2), wt(W, 3), p(4), p(5), p(6), wt(V, 7)]));
    let tail = TailFamily::new(7, ShiftRule::Pronic)
        .weighted(2, mono(T))
        .weighted(3, mono(W))
        .weighted(7, mono(V));
    Ok(IdentitySpec::new(
        "twvthm",
        params,
        SumSide::new(terms, Some(tail)),
        Rhs::Product(
            ProductSide::mod5(&[2, 3]).weighted(2, mono(T))?.weighted(3, mono(W))?.weighted(7, mono(V))?,
        ),
    ))
}

fn build_reorder_a(params: Bindings) -> Result<IdentitySpec> {
    let lhs = twv_head()[..2].to_vec();
    let rhs = vec![
        term(2, "t + w*q + t^2*q^2", vec![wt(W, 3)]),
        term(6, "v*q + q^2 + t^3", vec![wt(T, 2), wt(W, 3)]),
    ];
    Ok(IdentitySpec::new(
        "reorder-A",
        params,
        SumSide::new(lhs, None),
        Rhs::Terms(SumSide::new(rhs, None)),
    ))
}

fn build_reorder_b(params: Bindings) -> Result<IdentitySpec> {
    let rhs = vec![
        term(2, "t + q*w + q^2*t^2 + q^3*t*w + q^4*t^3 + q^5*v + q^6", vec![wt(V, 7)]),
        term(
            6,
            "w^2 + q*t^2*w + q^2*t^4 + w^3*q^3 + t*q^4 + w*q^5 + w^4*q^6",
            vec![wt(T, 2), wt(V, 7)],
        ),
        term(12, "1 + q + q^2*w^2 + q^3*w^5 + q^4 + q^5 + q^6", vec![wt(T, 2), wt(W, 3), wt(V, 7)]),
    ];
    Ok(IdentitySpec::new(
        "reorder-B",
        params,
        SumSide::new(twv_head(), None),
        Rhs::Terms(SumSide::new(rhs, None)),
    ))
}

fn build_twvx23(params: Bindings) -> Result<IdentitySpec> {
    let seven_times = mul(&poly(SEVEN), &poly("1 + q^4"));
    let terms = vec![
        RationalTerm::one(),
        term(2, "t + w*q", vec![wt(T, 2)]),
        term(6, "w^2 + v*q + x*q^2", vec![wt(T, 2), wt(W, 3)]),
        term(
            12,
            "1 + q + v^2*q^2 + x*v*q^3 + x^2*q^4 + q^5 + q^6",
            vec![wt(T, 2), wt(W, 3), wt(V, 7)],
        ),
        term(
            20,
            "x + x*q + q^2 + q^3 + q^4 + x^3*q^4 + q^5 + x*q^5 + q^6 + x*q^6 + q^7 + q^8 + q^9 + q^10",
            vec![wt(T, 2), wt(W, 3), wt(X, 8), wt(V, 7)],
        ),
        RationalTerm::new(30, seven_times.clone(), vec![wt(T, 2), wt(W, 3), wt(X, 8), p(5), wt(V, 7)]),
        RationalTerm::new(42, seven_times, vec![wt(T, 2), wt(W, 3), wt(X, 8), p(5), p(6), wt(V, 7)]),
        term(56, "1 + q^4", vec![p(1), wt(T, 2), wt(W, 3), wt(X, 8), p(5), p(6), wt(V, 7)]),
    ];
    let tail = TailFamily::new(8, ShiftRule::Pronic)
        .weighted(2, mono(T))
        .weighted(3, mono(W))
        .weighted(7, mono(V))
        .weighted(8, mono(X));
    Ok(IdentitySpec::new(
        "twvx23theorem",
        params,
        SumSide::new(terms, Some(tail)),
        Rhs::Product(
            ProductSide::mod5(&[2, 3])
                .weighted(2, mono(T))?
                .weighted(3, mono(W))?
                .weighted(7, mono(V))?
                .weighted(8, mono(X))?,
        ),
    ))
}

const NINE: &str = "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + q^8 + q^10";

fn build_twvx14(params: Bindings) -> Result<IdentitySpec> {
    let base = vec![wt(T, 1), wt(W, 4), wt(V, 6), wt(X, 9)];
    let with = |extra: &[u32]| -> Vec<DenominatorFactor> {
        let mut d = base.clone();
        d.extend(extra.iter().map(|&e| p(e)));
        d
    };
    let terms = vec![
        RationalTerm::one(),
        term(1, "t", vec![wt(T, 1)]),
        term(4, "w + v*q^2", vec![wt(T, 1), wt(W, 4)]),
        term(9, "x + q^2 + v^2*q^3 + q^5", vec![wt(T, 1), wt(W, 4), wt(V, 6)]),
        term(16, "1 + x^2*q^2 + q^3 + x*q^4 + q^5 + q^6 + x*q^7 + q^8 + q^10", with(&[])),
        term(25, NINE, with(&[5])),
        term(36, NINE, with(&[5, 6])),
        term(49, NINE, with(&[5, 6, 7])),
        term(64, NINE, with(&[5, 6, 7, 8])),
    ];
    let tail = TailFamily::new(9, ShiftRule::Square)
        .weighted(1, mono(T))
        .weighted(4, mono(W))
        .weighted(6, mono(V))
        .weighted(9, mono(X));
    Ok(IdentitySpec::new(
        "twvx14thm",
        params,
        SumSide::new(terms, Some(tail)),
        Rhs::Product(
            ProductSide::mod5(&[1, 4])
                .weighted(1, mono(T))?
                .weighted(4, mono(W))?
                .weighted(6, mono(V))?
                .weighted(9, mono(X))?,
        ),
    ))
}

fn build_bigcomb_x1(params: Bindings) -> Result<IdentitySpec> {
    Ok(IdentitySpec::new(
        "bigcomb-x1",
        params,
        SumSide::new(vec![term(0, NINE, vec![p(9)])], None),
        Rhs::Terms(SumSide::new(vec![term(0, "1 - q^6", vec![p(2), p(3)])], None)),
    ))
}

fn build_spec3_display(params: Bindings) -> Result<IdentitySpec> {
    let terms = vec![
        RationalTerm::one(),
        term(2, "1", vec![p(1)]),
        term(3, "-1", vec![]),
        term(6, "q + q^2 + q^4", vec![p(2), p(5)]),
    ];
    let tail = TailFamily::new(3, ShiftRule::Pronic).replaced(3, p(5));
    Ok(IdentitySpec::new(
        "spec3-display",
        params,
        SumSide::new(terms, Some(tail)),
        Rhs::Product(ProductSide::mod5(&[2, 3]).removing(3).adding(5)),
    ))
}

// ---------------------------------------------------------------------------
// specializations

fn specialize(base: fn(Bindings) -> Result<IdentitySpec>, id: &str, sub: Substitution) -> Result<IdentitySpec> {
    let mut spec = base(Bindings::none())?;
    spec.id = id.to_string();
    spec.substitution = sub;
    Ok(spec)
}

/// `t = v = 1`, `w = x = 0`: no 3's and no 8's.
pub fn spec1_substitution() -> Substitution {
    Substitution::new()
        .with(T, WeightValue::ONE)
        .with(V, WeightValue::ONE)
        .with(W, WeightValue::ZERO)
        .with(X, WeightValue::ZERO)
}

/// All four weights set to 0: parts 1, 4, 6, 9 knocked out.
pub fn spec2_substitution() -> Substitution {
    Var::ALL.iter().fold(Substitution::new(), |s, &v| s.with(v, WeightValue::ZERO))
}

/// `t = 1`, `w = q^2`: 3's become 5's.
pub fn spec3_substitution() -> Substitution {
    Substitution::new().with(T, WeightValue::ONE).with(W, WeightValue::q_power(2))
}

fn build_spec1(_: Bindings) -> Result<IdentitySpec> {
    specialize(build_twvx23, "spec1", spec1_substitution())
}

fn build_spec2(_: Bindings) -> Result<IdentitySpec> {
    specialize(build_twvx14, "spec2", spec2_substitution())
}

fn build_spec3(_: Bindings) -> Result<IdentitySpec> {
    specialize(build_firsttw, "spec3", spec3_substitution())
}

fn build_spec3_second(_: Bindings) -> Result<IdentitySpec> {
    specialize(build_secondtw, "spec3-secondtw", spec3_substitution())
}

// ---------------------------------------------------------------------------

const ANY_M: ParamRule = ParamRule {
    description: "any positive integer M",
    admissible: |m| m >= 1,
    sweep_max: 39,
};

static CATALOG: [CatalogEntry; 25] = [
    CatalogEntry {
        id: "RR1",
        title: "first Rogers-Ramanujan identity",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_rr1,
    },
    CatalogEntry {
        id: "RR2",
        title: "second Rogers-Ramanujan identity",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_rr2,
    },
    CatalogEntry {
        id: "miniprop",
        title: "second identity with the part 2 weighted by t",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_miniprop,
    },
    CatalogEntry {
        id: "weirdeq",
        title: "rational identity inserting 1 - t q^2",
        kind: EntryKind::RationalIdentity,
        param: None,
        positivity: PositivityClaim::Exempt,
        recommended_order: 60,
        note: None,
        build: build_weirdeq,
    },
    CatalogEntry {
        id: "prefactorM",
        title: "rational identity inserting 1 - t q^(M+1) into the second sum",
        kind: EntryKind::RationalIdentity,
        param: Some(ANY_M),
        positivity: PositivityClaim::Exempt,
        recommended_order: 60,
        note: None,
        build: build_prefactor_second,
    },
    CatalogEntry {
        id: "partM",
        title: "second identity with the part M+1 weighted by t",
        kind: EntryKind::Theorem,
        param: Some(ParamRule {
            description: "M+1 congruent to 2 or 3 modulo 5",
            admissible: |m| rr_residue(m + 1, &[2, 3]),
            sweep_max: 39,
        }),
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_part_m,
    },
    CatalogEntry {
        id: "prefactorM-first",
        title: "rational identity inserting 1 - t q^(M+1) into the first sum",
        kind: EntryKind::RationalIdentity,
        param: Some(ANY_M),
        positivity: PositivityClaim::Exempt,
        recommended_order: 60,
        note: None,
        build: build_prefactor_first,
    },
    CatalogEntry {
        id: "partMeq",
        title: "first identity with the part M+1 weighted by t",
        kind: EntryKind::Theorem,
        param: Some(ParamRule {
            description: "M+1 >= 2 congruent to 1 or 4 modulo 5",
            admissible: |m| rr_residue(m + 1, &[1, 4]),
            sweep_max: 39,
        }),
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_part_m_eq,
    },
    CatalogEntry {
        id: "parts2Meq",
        title: "rational identity inserting 1 - t q^2 and 1 - w q^M",
        kind: EntryKind::RationalIdentity,
        param: Some(ParamRule { description: "any positive integer M", admissible: |m| m >= 1, sweep_max: 40 }),
        positivity: PositivityClaim::FromM(6),
        recommended_order: 60,
        note: None,
        build: build_parts2m_eq,
    },
    CatalogEntry {
        id: "twopartM",
        title: "second identity with parts 2 and M weighted by t and w",
        kind: EntryKind::Theorem,
        param: Some(ParamRule {
            description: "M >= 7 congruent to 2 or 3 modulo 5",
            admissible: |m| m >= 7 && rr_residue(m, &[2, 3]),
            sweep_max: 40,
        }),
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_two_part_m,
    },
    CatalogEntry {
        id: "parts1Meq",
        title: "rational identity inserting 1 - t q and 1 - w q^M",
        kind: EntryKind::RationalIdentity,
        param: Some(ParamRule {
            description: "even M >= 4",
            admissible: |m| m >= 4 && m % 2 == 0,
            sweep_max: 40,
        }),
        positivity: PositivityClaim::Exempt,
        recommended_order: 60,
        note: None,
        build: build_parts1m_eq,
    },
    CatalogEntry {
        id: "twopart14",
        title: "first identity with parts 1 and M weighted by t and w",
        kind: EntryKind::Theorem,
        param: Some(ParamRule {
            description: "even M >= 4 congruent to 1 or 4 modulo 5",
            admissible: |m| m >= 4 && m % 2 == 0 && rr_residue(m, &[1, 4]),
            sweep_max: 40,
        }),
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: Some("stated in a proposition environment although cited as a theorem"),
        build: build_two_part_14,
    },
    CatalogEntry {
        id: "firsttw",
        title: "second identity with parts 2 and 3 weighted by t and w",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: Some("the q^6 numerator has a bare q where the three-weight version has v*q"),
        build: build_firsttw,
    },
    CatalogEntry {
        id: "secondtw",
        title: "second identity with parts 2 and 3 weighted, alternative sum side",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_secondtw,
    },
    CatalogEntry {
        id: "twvthm",
        title: "second identity with parts 2, 3, 7 weighted by t, w, v",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_twvthm,
    },
    CatalogEntry {
        id: "reorder-A",
        title: "reordering inserting 1 - w q^3 before 1 - t q^2",
        kind: EntryKind::RationalIdentity,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_reorder_a,
    },
    CatalogEntry {
        id: "reorder-B",
        title: "reordering inserting 1 - v q^7 first",
        kind: EntryKind::RationalIdentity,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_reorder_b,
    },
    CatalogEntry {
        id: "twvx23theorem",
        title: "second identity with parts 2, 3, 7, 8 weighted by t, w, v, x",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_twvx23,
    },
    CatalogEntry {
        id: "twvx14thm",
        title: "first identity with parts 1, 4, 6, 9 weighted by t, w, v, x",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 80,
        note: None,
        build: build_twvx14,
    },
    CatalogEntry {
        id: "bigcomb-x1",
        title: "x = 1 collapse of the nine-term numerator over 1 - q^9",
        kind: EntryKind::RationalIdentity,
        param: None,
        positivity: PositivityClaim::Exempt,
        recommended_order: 60,
        note: None,
        build: build_bigcomb_x1,
    },
    CatalogEntry {
        id: "spec3-display",
        title: "sum side of the t = 1, w = q^2 specialization as displayed",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Exempt,
        recommended_order: 60,
        note: None,
        build: build_spec3_display,
    },
    CatalogEntry {
        id: "spec1",
        title: "four-weight second identity at t = v = 1, w = x = 0",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_spec1,
    },
    CatalogEntry {
        id: "spec2",
        title: "four-weight first identity at t = w = v = x = 0",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 80,
        note: None,
        build: build_spec2,
    },
    CatalogEntry {
        id: "spec3",
        title: "two-weight second identity at t = 1, w = q^2",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_spec3,
    },
    CatalogEntry {
        id: "spec3-secondtw",
        title: "alternative two-weight second identity at t = 1, w = q^2",
        kind: EntryKind::Theorem,
        param: None,
        positivity: PositivityClaim::Always,
        recommended_order: 60,
        note: None,
        build: build_spec3_second,
    },
];

/// Ids of every entry, in catalog order.
pub fn ids() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.id).collect()
}

/// Map from id to entry, for callers that resolve many ids.
pub fn index() -> BTreeMap<&'static str, &'static CatalogEntry> {
    CATALOG.iter().map(|e| (e.id, e)).collect()
}
