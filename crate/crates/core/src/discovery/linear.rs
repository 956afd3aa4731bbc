use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Row = BTreeMap<usize, BigRational>;

/// A pivot row kept fully reduced: `x_col + sum coeffs[f] x_f = rhs`, where
/// every `f` is a free column.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Pivot {
    pub col: usize,
    pub coeffs: Row,
    pub rhs: BigRational,
}

/// Incremental exact row reduction over the rationals.
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct Reduced {
    pub pivots: Vec<Pivot>,
    by_col: HashMap<usize, usize>,
}

impl Reduced {
    /// Adds the equation `sum row[c] x_c = rhs`. Returns `false` if it reduces
    /// to `0 = nonzero`.
    pub fn push(&mut self, mut row: Row, mut rhs: BigRational) -> bool {
        let hits: Vec<(usize, BigRational)> = row
            .iter()
            .filter(|(c, _)| self.by_col.contains_key(c))
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        for (c, v) in hits {
            let p = &self.pivots[self.by_col[&c]];
            row.remove(&c);
            for (f, a) in &p.coeffs {
                let e = row.entry(*f).or_insert_with(BigRational::zero);
                *e -= &v * a;
                if e.is_zero() {
                    row.remove(f);
                }
            }
            rhs -= &v * &p.rhs;
        }
        let Some((&col, lead)) = row.iter().next() else {
            return rhs.is_zero();
        };
        let lead = lead.clone();
        row.remove(&col);
        for a in row.values_mut() {
            *a /= &lead;
        }
        rhs /= &lead;
        for p in &mut self.pivots {
            if let Some(v) = p.coeffs.remove(&col) {
                for (f, a) in &row {
                    let e = p.coeffs.entry(*f).or_insert_with(BigRational::zero);
                    *e -= &v * a;
                    if e.is_zero() {
                        p.coeffs.remove(f);
                    }
                }
                p.rhs -= &v * &rhs;
            }
        }
        self.by_col.insert(col, self.pivots.len());
        self.pivots.push(Pivot { col, coeffs: row, rhs });
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.by_col.contains_key(&col)
    }

    /// The solution with every free column set to zero.
    pub fn particular(&self, n: usize) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); n];
        for p in &self.pivots {
            x[p.col] = p.rhs.clone();
        }
        x
    }

    /// One null-space vector per free column.
    pub fn null_basis(&self, n: usize) -> Vec<Vec<BigRational>> {
        (0..n)
            .filter(|c| !self.is_pivot(*c))
            .map(|f| {
                let mut x = vec![BigRational::zero(); n];
                x[f] = BigRational::one();
                for p in &self.pivots {
                    if let Some(a) = p.coeffs.get(&f) {
                        x[p.col] = -a.clone();
                    }
                }
                x
            })
            .collect()
    }

    pub fn satisfied_by(&self, x: &[BigRational]) -> bool {
        self.pivots.iter().all(|p| {
            let mut lhs = x[p.col].clone();
            for (f, a) in &p.coeffs {
                lhs += a * &x[*f];
            }
            lhs == p.rhs
        })
    }
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction and a positive first nonzero entry.
pub(crate) fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = v.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, i| acc.gcd(i));
    if gcd.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|i| !i.is_zero()) {
        Some(i) if i.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|i| i / &gcd * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn row(entries: &[(usize, i64)]) -> Row {
        entries.iter().map(|&(c, v)| (c, r(v))).collect()
    }

    #[test]
    fn solves_a_square_system() {
        // x + y = 3, x - y = 1
        let mut s = Reduced::default();
        assert!(s.push(row(&[(0, 1), (1, 1)]), r(3)));
        assert!(s.push(row(&[(0, 1), (1, -1)]), r(1)));
        assert_eq!(s.particular(2), vec![r(2), r(1)]);
        assert!(s.push(row(&[(0, 2), (1, 2)]), r(6)));
        assert!(!s.push(row(&[(0, 2), (1, 2)]), r(7)));
    }

    #[test]
    fn null_basis_spans_the_kernel() {
        // x + 2y - z = 4
        let mut s = Reduced::default();
        s.push(row(&[(0, 1), (1, 2), (2, -1)]), r(4));
        let basis = s.null_basis(3);
        assert_eq!(basis.len(), 2);
        let p = s.particular(3);
        for b in &basis {
            let x: Vec<BigRational> = p.iter().zip(b).map(|(a, c)| a + c * r(5)).collect();
            assert!(s.satisfied_by(&x));
        }
        assert_eq!(primitive(&[r(0), BigRational::new(1.into(), 2.into()), r(-3)]), vec![0.into(), 1.into(), (-6).into()]);
    }
}
