//! The refinement statements, with their case rules written out as printed.

use super::{CaseRule, DiffClass, IdentityLink, RefinementStatement};
use crate::error::{Error, Result};
use crate::identities::{Bindings, ParamRule};
use crate::partitions::PartitionClass;
use crate::series::{Substitution, Var, WeightValue};

#[derive(Clone, Copy)]
pub struct StatementEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub param: Option<ParamRule>,
    build: fn(Bindings) -> Result<RefinementStatement>,
}

impl std::fmt::Debug for StatementEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StatementEntry").field("id", &self.id).finish()
    }
}

impl StatementEntry {
    pub fn sweep(&self) -> Vec<Bindings> {
        match &self.param {
            Some(rule) => rule.sweep().into_iter().map(Bindings::m).collect(),
            None => vec![Bindings::none()],
        }
    }

    pub fn instantiate(&self, params: Bindings) -> Result<RefinementStatement> {
        let domain = |message: String| Error::ParameterDomain { id: self.id.into(), message };
        match (&self.param, params.m) {
            (Some(rule), Some(m)) if (rule.admissible)(m) => (self.build)(params),
            (Some(rule), Some(m)) => Err(domain(format!("M={m} is not admissible ({})", rule.description))),
            (Some(rule), None) => Err(domain(format!("requires a value for M ({})", rule.description))),
            (None, Some(_)) => Err(domain("takes no parameters".into())),
            (None, None) => (self.build)(params),
        }
    }
}

pub fn statements() -> &'static [StatementEntry] {
    &STATEMENTS
}

pub fn find_statement(id: &str) -> Result<&'static StatementEntry> {
    STATEMENTS.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn statement(id: &str, params: Bindings) -> Result<RefinementStatement> {
    find_statement(id)?.instantiate(params)
}

fn link(id: &'static str, params: Bindings, vars: Vec<Var>) -> IdentityLink {
    IdentityLink { id, params, substitution: Substitution::new(), vars }
}

fn in_range(x: u32, lo: u32, len: u32) -> bool {
    x >= lo && x - lo <= len
}

fn m_of(params: Bindings) -> u32 {
    params.m.expect("instantiate checks parameter presence")
}

fn generalminithm(params: Bindings) -> Result<RefinementStatement> {
    let m = m_of(params);
    let s = m + 1;
    let mut rules = vec![CaseRule::new("1", 1, Some(1), move |c, k| {
        let base = s * k[0];
        c.n >= base && {
            let i = c.n - base;
            i == 0 || (2..=m).contains(&i) || i == m + 2
        }
    })];
    if m >= 2 {
        rules.push(CaseRule::new("2", 2, Some(m as usize), move |c, k| in_range(c.ones(), s * k[0], m)));
    }
    rules.push(CaseRule::new("3", s as usize, None, move |c, k| c.count(s) == k[0]));
    Ok(RefinementStatement {
        id: "generalminithm".into(),
        params,
        product_class: PartitionClass::rr2(),
        watched: vec![s],
        diff_class: DiffClass::Diff2Star,
        rules,
        identity: link("partM", params, vec![Var::T]),
        n_min: 0,
        signature_label: "(k)",
    })
}

fn generalmini14thm(params: Bindings) -> Result<RefinementStatement> {
    let m = m_of(params);
    let s = m + 1;
    let mut rules = vec![CaseRule::new("1", 1, Some(1), move |c, k| in_range(c.n, s * k[0], m))];
    if m >= 2 {
        rules.push(CaseRule::new("2", 2, Some(m as usize), move |c, k| in_range(c.ones(), s * k[0], m)));
    }
    rules.push(CaseRule::new("3", s as usize, None, move |c, k| c.count(s) == k[0]));
    Ok(RefinementStatement {
        id: "generalmini14thm".into(),
        params,
        product_class: PartitionClass::rr1(),
        watched: vec![s],
        diff_class: DiffClass::Diff2,
        rules,
        identity: link("partMeq", params, vec![Var::T]),
        n_min: 0,
        signature_label: "(k)",
    })
}

// Signature (k, j): k M's and j 2's.
fn general2partcor(params: Bindings) -> Result<RefinementStatement> {
    let m = m_of(params);
    let rules = vec![
        CaseRule::new("1", 1, Some(1), |c, kj| {
            let (k, j) = (kj[0], kj[1]);
            k == 0 && (c.n == 2 * j || c.n == 2 * j + 3)
        }),
        CaseRule::new("2", 2, Some(2), move |c, kj| {
            let (k, j) = (kj[0], kj[1]);
            let ones = c.ones();
            let regular = ones >= m * k && {
                let i = ones - m * k;
                i < m && i + 3 != m && i + 6 != m
            };
            let shifted = k >= 1 && (ones + 3 == m * k || ones + 6 == m * k);
            c.count(2) == j && (regular || shifted)
        }),
        CaseRule::new("3", 3, Some(m as usize - 1), move |c, kj| {
            c.count(2) == kj[1] && in_range(c.ones(), m * kj[0], m - 1)
        }),
        CaseRule::new("4", m as usize, None, move |c, kj| c.count(2) == kj[1] && c.count(m) == kj[0]),
    ];
    Ok(RefinementStatement {
        id: "general2partcor".into(),
        params,
        product_class: PartitionClass::rr2(),
        watched: vec![m, 2],
        diff_class: DiffClass::Diff2Star,
        rules,
        identity: link("twopartM", params, vec![Var::W, Var::T]),
        n_min: 0,
        signature_label: "(k,j)",
    })
}

// Signature (k, j): k M's and j 1's.
fn general2part14cor(params: Bindings) -> Result<RefinementStatement> {
    let m = m_of(params);
    let h = m / 2;
    let rules = vec![
        CaseRule::new("1", 1, Some(1), |c, kj| kj[0] == 0 && c.n == kj[1]),
        CaseRule::new("2", 2, Some(2), move |c, kj| {
            let (k, j) = (kj[0], kj[1]);
            let l = c.count(2);
            let regular = l >= h * k && {
                let i = l - h * k;
                i < h && i + 2 != h
            };
            let shifted = k >= 1 && l + 2 == h * k;
            c.ones() == j && (regular || shifted)
        }),
        CaseRule::new("3", 3, Some(m as usize - 1), move |c, kj| {
            c.ones() == kj[1] && in_range(c.count(2), h * kj[0], h - 1)
        }),
        CaseRule::new("4", m as usize, None, move |c, kj| c.ones() == kj[1] && c.count(m) == kj[0]),
    ];
    Ok(RefinementStatement {
        id: "general2part14cor".into(),
        params,
        product_class: PartitionClass::rr1(),
        watched: vec![m, 1],
        diff_class: DiffClass::Diff2,
        rules,
        identity: link("twopart14", params, vec![Var::W, Var::T]),
        n_min: 0,
        signature_label: "(k,j)",
    })
}

// Signature (k, j, l): 2's, 3's, 7's.
fn firstbigcomb(params: Bindings) -> Result<RefinementStatement> {
    let rules = vec![
        CaseRule::new("1", 7, None, |c, s| c.count(2) == s[0] && c.count(3) == s[1] && c.count(7) == s[2]),
        CaseRule::new("2", 4, Some(6), |c, s| {
            c.count(2) == s[0] && c.count(3) == s[1] && in_range(c.ones(), 7 * s[2], 6)
        }),
        CaseRule::new("3", 3, Some(3), |c, s| {
            let l = 7 * s[2] as i64;
            let ones = c.ones() as i64;
            c.count(2) == s[0] && c.count(3) == s[1] && [l, l + 1, l - 12, l - 4, l + 4, l + 5, l + 6].contains(&ones)
        }),
        CaseRule::new("4", 2, Some(2), |c, s| {
            let (k, j, l) = (s[0], s[1], s[2]);
            let ones = c.ones();
            c.count(2) == k
                && ((l == 0 && ((j >= 2 && ones == 3 * (j - 2)) || ones == 3 * j + 2)) || (l == 1 && ones == 3 * j + 1))
        }),
        CaseRule::new("5", 1, Some(1), |c, s| {
            let (k, j, l) = (s[0], s[1], s[2]);
            let ones = c.ones();
            (k >= 1 && j == 0 && l == 0 && ones == 2 * k - 2) || (j == 1 && l == 0 && ones == 2 * k + 1)
        }),
    ];
    Ok(RefinementStatement {
        id: "firstbigcomb".into(),
        params,
        product_class: PartitionClass::rr2(),
        watched: vec![2, 3, 7],
        diff_class: DiffClass::Diff2Star,
        rules,
        identity: link("twvthm", params, vec![Var::T, Var::W, Var::V]),
        n_min: 0,
        signature_label: "(k,j,l)",
    })
}

// Signature (k, j, l): 1's, 4's, 6's; the identity is read at x = 1.
fn bigcomb(params: Bindings) -> Result<RefinementStatement> {
    let rules = vec![
        CaseRule::new("1", 6, None, |c, s| c.ones() == s[0] && c.count(4) == s[1] && c.count(6) == s[2]),
        CaseRule::new("2", 4, Some(5), |c, s| {
            let threes = c.count(3);
            c.ones() == s[0] && c.count(4) == s[1] && (threes == 2 * s[2] || threes == 2 * s[2] + 1)
        }),
        CaseRule::new("3", 3, Some(3), |c, s| {
            let (j, l) = (s[1], s[2]);
            let (twos, threes) = (c.count(2), c.count(3));
            c.ones() == s[0]
                && ((threes == 2 * l && twos == 2 * j)
                    || (threes == 2 * l && twos == 2 * j + 1)
                    || (l >= 2 && threes == 2 * l - 3 && twos == 2 * j)
                    || (threes == 2 * l + 1 && twos == 2 * j + 1))
        }),
        CaseRule::new("4", 2, Some(2), |c, s| {
            let (j, l) = (s[1], s[2]);
            let twos = c.count(2);
            c.ones() == s[0] && ((j >= 1 && l == 0 && twos == 2 * j - 2) || (l == 1 && twos == 2 * j + 1))
        }),
        CaseRule::new("5", 1, Some(1), |c, s| s[0] >= 1 && s[1] == 0 && s[2] == 0 && c.ones() == s[0] - 1),
    ];
    let mut identity = link("twvx14thm", params, vec![Var::T, Var::W, Var::V]);
    identity.substitution = Substitution::new().with(Var::X, WeightValue::ONE);
    Ok(RefinementStatement {
        id: "bigcomb".into(),
        params,
        product_class: PartitionClass::rr1(),
        watched: vec![1, 4, 6],
        diff_class: DiffClass::Diff2,
        rules,
        identity,
        n_min: 0,
        signature_label: "(k,j,l)",
    })
}

fn spec1(params: Bindings) -> Result<RefinementStatement> {
    let rules = vec![
        CaseRule::new("1", 8, None, |c, _| c.count(3) == 0 && c.count(8) == 0),
        CaseRule::new("2", 5, Some(7), |c, _| c.count(4) <= 1 && c.count(3) == 0),
        CaseRule::new("3", 4, Some(4), |c, _| c.count(4) == 0 && c.count(3) <= 2 && [2, 3, 4].contains(&(c.ones() % 7))),
        CaseRule::new("4", 3, Some(3), |c, _| c.count(3) == 0 && ![3, 4].contains(&(c.ones() % 7))),
        CaseRule::new("5", 2, Some(2), |c, _| c.ones() == 1),
        CaseRule::new("6", 1, Some(1), |c, _| c.n % 2 == 0),
    ];
    Ok(RefinementStatement {
        id: "spec1".into(),
        params,
        product_class: PartitionClass::rr2().forbidding(&[3, 8])?,
        watched: vec![],
        diff_class: DiffClass::Diff2Star,
        rules,
        identity: link("spec1", params, vec![]),
        n_min: 0,
        signature_label: "()",
    })
}

fn spec2(params: Bindings) -> Result<RefinementStatement> {
    let rules = vec![
        // fewer than five parts never qualify once N >= 27
        CaseRule::new("-", 1, Some(4), |_, _| false),
        CaseRule::new("1", 5, Some(8), |c, _| {
            c.count(2) <= 2 && c.count(3) <= 2 && c.ones() == 0 && c.count(4) == 0
        }),
        CaseRule::new("2", 9, None, |c, _| [1, 4, 6, 9].iter().all(|&s| c.count(s) == 0)),
    ];
    Ok(RefinementStatement {
        id: "spec2".into(),
        params,
        product_class: PartitionClass::rr1().forbidding(&[1, 4, 6, 9])?,
        watched: vec![],
        diff_class: DiffClass::Diff2,
        rules,
        identity: link("spec2", params, vec![]),
        n_min: 27,
        signature_label: "()",
    })
}

fn spec3(params: Bindings) -> Result<RefinementStatement> {
    let rules = vec![
        CaseRule::new("1", 1, Some(1), |c, _| c.n != 3),
        CaseRule::new("2", 2, Some(2), |c, _| [1, 2, 4].contains(&(c.ones() % 5))),
        CaseRule::new("3", 3, None, |c, _| c.count(2) >= c.count(3)),
    ];
    Ok(RefinementStatement {
        id: "spec3".into(),
        params,
        product_class: PartitionClass::rr2().forbidding(&[3])?.allowing(&[5])?,
        watched: vec![],
        diff_class: DiffClass::Diff2Star,
        rules,
        identity: link("spec3", params, vec![]),
        n_min: 0,
        signature_label: "()",
    })
}

fn residue(m: u32, residues: &[u32]) -> bool {
    residues.contains(&(m % 5))
}

static STATEMENTS: [StatementEntry; 9] = [
    StatementEntry {
        id: "generalminithm",
        title: "k parts of size M+1 against Diff2* with col*",
        param: Some(ParamRule {
            description: "M+1 congruent to 2 or 3 modulo 5",
            admissible: |m| residue(m + 1, &[2, 3]),
            sweep_max: 11,
        }),
        build: generalminithm,
    },
    StatementEntry {
        id: "generalmini14thm",
        title: "k parts of size M+1 against Diff2 with col",
        param: Some(ParamRule {
            description: "M+1 >= 2 congruent to 1 or 4 modulo 5",
            admissible: |m| residue(m + 1, &[1, 4]),
            sweep_max: 11,
        }),
        build: generalmini14thm,
    },
    StatementEntry {
        id: "general2partcor",
        title: "k parts of size M and j 2's against Diff2* with col*",
        param: Some(ParamRule {
            description: "M >= 7 congruent to 2 or 3 modulo 5",
            admissible: |m| m >= 7 && residue(m, &[2, 3]),
            sweep_max: 12,
        }),
        build: general2partcor,
    },
    StatementEntry {
        id: "general2part14cor",
        title: "k parts of size M and j 1's against Diff2 with col",
        param: Some(ParamRule {
            description: "even M >= 4 congruent to 1 or 4 modulo 5",
            admissible: |m| m >= 4 && m % 2 == 0 && residue(m, &[1, 4]),
            sweep_max: 12,
        }),
        build: general2part14cor,
    },
    StatementEntry {
        id: "firstbigcomb",
        title: "2's, 3's and 7's against Diff2* with col*",
        param: None,
        build: firstbigcomb,
    },
    StatementEntry {
        id: "bigcomb",
        title: "1's, 4's and 6's against Diff2 with col",
        param: None,
        build: bigcomb,
    },
    StatementEntry {
        id: "spec1",
        title: "parts 2 or 3 mod 5 without 3's and 8's",
        param: None,
        build: spec1,
    },
    StatementEntry {
        id: "spec2",
        title: "parts 1 or 4 mod 5 with smallest part at least 11, N >= 27",
        param: None,
        build: spec2,
    },
    StatementEntry {
        id: "spec3",
        title: "parts 2 or 3 mod 5 or 5's but no 3's",
        param: None,
        build: spec3,
    },
];
