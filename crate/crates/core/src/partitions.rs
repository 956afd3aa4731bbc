//! Partitions, the partition classes of the weighted identities, and the
//! column transforms `col` / `col*` on difference-two partitions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Checks that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a weakly decreasing list of positive parts")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn grouped(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// True iff consecutive parts differ by at least two.
    pub fn is_diff2(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1] + 2)
    }

    pub fn is_diff2_star(&self) -> bool {
        self.is_diff2() && !self.parts.contains(&1)
    }

    /// Exponent notation without parentheses, e.g. `3^2,2^2,1`.
    pub fn exponent_notation(&self) -> String {
        self.grouped()
            .iter()
            .map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.exponent_notation())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(12,3,3,2,2)`, `(3^2,2^2)`, `(2^{11})`, `3^2,2^2` and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = body.trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        for item in body.split(',') {
            let (p, m) = match item.split_once('^') {
                Some((p, m)) => (p, m.trim_matches(|c| c == '{' || c == '}')),
                None => (item, "1"),
            };
            let bad = || Error::Parse(format!("bad partition entry `{item}` in `{s}`"));
            let p: u32 = p.parse().map_err(|_| bad())?;
            let m: u32 = m.parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(p, m as usize));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The partition classes used throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionClass {
    /// Parts with residue in `residues` modulo `modulus`, or in `extra`, and
    /// never in `forbidden`.
    Congruence {
        modulus: u32,
        residues: BTreeSet<u32>,
        forbidden: BTreeSet<u32>,
        extra: BTreeSet<u32>,
    },
    /// Consecutive parts differ by at least two.
    Diff2,
    /// `Diff2` without a part equal to 1.
    Diff2Star,
}

impl PartitionClass {
    pub fn congruence(modulus: u32, residues: &[u32]) -> Result<Self> {
        if modulus == 0 || residues.iter().any(|&r| r >= modulus) {
            return Err(Error::Parse(format!("residues {residues:?} are not reduced modulo {modulus}")));
        }
        Ok(PartitionClass::Congruence {
            modulus,
            residues: residues.iter().copied().collect(),
            forbidden: BTreeSet::new(),
            extra: BTreeSet::new(),
        })
    }

    /// Parts congruent to 1 or 4 modulo 5.
    pub fn rr1() -> Self {
        Self::congruence(5, &[1, 4]).expect("valid residues")
    }

    /// Parts congruent to 2 or 3 modulo 5.
    pub fn rr2() -> Self {
        Self::congruence(5, &[2, 3]).expect("valid residues")
    }

    pub fn forbidding(self, sizes: &[u32]) -> Result<Self> {
        self.adjust(sizes, true)
    }

    pub fn allowing(self, sizes: &[u32]) -> Result<Self> {
        self.adjust(sizes, false)
    }

    fn adjust(self, sizes: &[u32], forbid: bool) -> Result<Self> {
        match self {
            PartitionClass::Congruence { modulus, residues, mut forbidden, mut extra } => {
                let (add, other) = if forbid { (&mut forbidden, &extra) } else { (&mut extra, &forbidden) };
                for &s in sizes {
                    if s == 0 || other.contains(&s) {
                        return Err(Error::Parse(format!("part size {s} cannot be both forbidden and allowed")));
                    }
                    add.insert(s);
                }
                Ok(PartitionClass::Congruence { modulus, residues, forbidden, extra })
            }
            _ => Err(Error::Parse("only congruence classes take size exceptions".into())),
        }
    }

    /// Whether a part of this size may appear (congruence classes only).
    pub fn allows_part(&self, part: u32) -> bool {
        match self {
            PartitionClass::Congruence { modulus, residues, forbidden, extra } => {
                part > 0
                    && !forbidden.contains(&part)
                    && (extra.contains(&part) || residues.contains(&(part % modulus)))
            }
            PartitionClass::Diff2 => part >= 1,
            PartitionClass::Diff2Star => part >= 2,
        }
    }

    pub fn contains(&self, p: &Partition) -> bool {
        match self {
            PartitionClass::Congruence { .. } => p.parts().iter().all(|&x| self.allows_part(x)),
            PartitionClass::Diff2 => p.is_diff2(),
            PartitionClass::Diff2Star => p.is_diff2_star(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            PartitionClass::Congruence { modulus, residues, forbidden, extra } => {
                let join = |s: &BTreeSet<u32>| s.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                let mut name = format!("congruent to {{{}}} mod {modulus}", join(residues));
                if !extra.is_empty() {
                    name += &format!(", plus sizes {{{}}}", join(extra));
                }
                if !forbidden.is_empty() {
                    name += &format!(", without sizes {{{}}}", join(forbidden));
                }
                name
            }
            PartitionClass::Diff2 => "diff2".into(),
            PartitionClass::Diff2Star => "diff2_star".into(),
        }
    }
}

/// All partitions of `n` in `class`, in decreasing lexicographic order.
pub fn enumerate(class: &PartitionClass, n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    match class {
        PartitionClass::Congruence { .. } => {
            let sizes: Vec<u32> = (1..=n).rev().filter(|&s| class.allows_part(s)).collect();
            fill_from_sizes(n, &sizes, &mut current, &mut out);
        }
        PartitionClass::Diff2 => fill_diff2(n, n, 1, &mut current, &mut out),
        PartitionClass::Diff2Star => fill_diff2(n, n, 2, &mut current, &mut out),
    }
    out
}

/// Number of partitions of `n` in `class` (by enumeration).
pub fn count(class: &PartitionClass, n: u32) -> usize {
    enumerate(class, n).len()
}

// `sizes` is descending; the next part may be any size in it.
fn fill_from_sizes(remaining: u32, sizes: &[u32], current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for (i, &s) in sizes.iter().enumerate() {
        if s <= remaining {
            current.push(s);
            fill_from_sizes(remaining - s, &sizes[i..], current, out);
            current.pop();
        }
    }
}

fn fill_diff2(remaining: u32, max_part: u32, min_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    let top = max_part.min(remaining);
    for p in (min_part..=top).rev() {
        current.push(p);
        fill_diff2(remaining - p, p.saturating_sub(2), min_part, current, out);
        current.pop();
    }
}

/// Transpose of the Ferrers diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let parts = (1..=p.largest())
        .map(|i| p.parts().iter().take_while(|&&x| x >= i).count() as u32)
        .collect();
    Partition { parts }
}

/// Subtracts the staircase `(2m-1, ..., 3, 1)` from the `m` parts of a
/// difference-two partition and returns the columns of what is left.
pub fn col(p: &Partition) -> Result<Partition> {
    if !p.is_diff2() {
        return Err(Error::NotInClass { partition: p.to_string(), class: "diff2" });
    }
    Ok(columns_after_staircase(p, 1))
}

/// Subtracts `(2m, ..., 4, 2)` from a partition in `Diff2*` and returns the
/// columns of what is left.
pub fn col_star(p: &Partition) -> Result<Partition> {
    if !p.is_diff2_star() {
        return Err(Error::NotInClass { partition: p.to_string(), class: "diff2_star" });
    }
    Ok(columns_after_staircase(p, 2))
}

// Part i (0-based, m parts) loses 2(m-1-i) + base. Zero remainders are dropped.
fn columns_after_staircase(p: &Partition, base: u32) -> Partition {
    let m = p.len() as u32;
    let rows: Vec<u32> = p
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (2 * (m - 1 - i as u32) + base))
        .filter(|&x| x > 0)
        .collect();
    conjugate(&Partition { parts: rows })
}

/// Inverse of [`col`] for a fixed number of parts: `None` if `image` has a
/// part larger than `m` or `m` is zero with a nonempty image.
pub fn col_inverse(image: &Partition, m: usize) -> Option<Partition> {
    staircase_inverse(image, m, 1)
}

/// Inverse of [`col_star`] for a fixed number of parts.
pub fn col_star_inverse(image: &Partition, m: usize) -> Option<Partition> {
    staircase_inverse(image, m, 2)
}

fn staircase_inverse(image: &Partition, m: usize, base: u32) -> Option<Partition> {
    if image.largest() as usize > m {
        return None;
    }
    let rows = conjugate(image);
    let mut parts = Vec::with_capacity(m);
    for i in 0..m {
        let r = rows.parts().get(i).copied().unwrap_or(0);
        parts.push(r + 2 * (m - 1 - i) as u32 + base);
    }
    Some(Partition { parts })
}

/// Multiplicities of watched part sizes, kept in the caller's watch order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightSignature {
    counts: Vec<(u32, u32)>,
}

impl WeightSignature {
    pub fn new(counts: Vec<(u32, u32)>) -> Self {
        WeightSignature { counts }
    }

    pub fn zero(watched: &[u32]) -> Self {
        Self::new(watched.iter().map(|&s| (s, 0)).collect())
    }

    /// Builds a signature from multiplicities listed in watch order.
    pub fn from_counts(watched: &[u32], counts: &[u32]) -> Self {
        assert_eq!(watched.len(), counts.len(), "one multiplicity per watched size");
        Self::new(watched.iter().copied().zip(counts.iter().copied()).collect())
    }

    pub fn get(&self, size: u32) -> u32 {
        self.counts.iter().find(|(s, _)| *s == size).map_or(0, |&(_, c)| c)
    }

    pub fn counts(&self) -> Vec<u32> {
        self.counts.iter().map(|&(_, c)| c).collect()
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.counts
    }
}

impl fmt::Display for WeightSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.counts.iter().map(|(_, c)| c.to_string()).collect();
        write!(f, "({})", c.join(","))
    }
}

impl Serialize for WeightSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Multiplicity of each watched part size in `p`.
pub fn signature(p: &Partition, watched: &[u32]) -> WeightSignature {
    WeightSignature::new(watched.iter().map(|&s| (s, p.multiplicity(s))).collect())
}
