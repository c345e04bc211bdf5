//! Finite term sets with a multiplication table into formal sums.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type ElemSum = Vec<(BigRational, u16)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSystem {
    pub names: Vec<String>,
    /// `prod[i][j]` is `names[i] * names[j]`.
    pub prod: Vec<Vec<ElemSum>>,
    pub unit: Option<u16>,
}

fn canon(mut v: BTreeMap<u16, BigRational>) -> ElemSum {
    v.retain(|_, c| !c.is_zero());
    v.into_iter().map(|(e, c)| (c, e)).collect()
}

impl TableSystem {
    pub fn new(names: Vec<String>, prod: Vec<Vec<ElemSum>>) -> Result<Self> {
        let n = names.len();
        if prod.len() != n || prod.iter().any(|r| r.len() != n) {
            return Err(Error::IncompleteTable(format!("expected a {n}x{n} table")));
        }
        let prod: Vec<Vec<ElemSum>> = prod
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|s| {
                        let mut m = BTreeMap::new();
                        for (c, e) in s {
                            *m.entry(e).or_insert_with(BigRational::zero) += c;
                        }
                        canon(m)
                    })
                    .collect()
            })
            .collect();
        let mut t = TableSystem { names, prod, unit: None };
        t.unit = (0..n as u16).find(|&e| {
            (0..n as u16).all(|x| t.single(e, x) == Some(x) && t.single(x, e) == Some(x))
        });
        Ok(t)
    }

    fn single(&self, a: u16, b: u16) -> Option<u16> {
        match &self.prod[a as usize][b as usize][..] {
            [(c, e)] if *c == BigRational::from_integer(1.into()) => Some(*e),
            _ => None,
        }
    }

    pub fn mul(&self, a: u16, b: u16) -> &ElemSum {
        &self.prod[a as usize][b as usize]
    }

    pub fn mul_sum(&self, a: &ElemSum, b: &ElemSum) -> ElemSum {
        let mut m = BTreeMap::new();
        for (ca, ea) in a {
            for (cb, eb) in b {
                for (c, e) in self.mul(*ea, *eb) {
                    *m.entry(*e).or_insert_with(BigRational::zero) += ca * cb * c;
                }
            }
        }
        canon(m)
    }

    /// Triples violating `(xy)z = x(yz)`.
    pub fn associativity_failures(&self) -> Vec<(u16, u16, u16)> {
        let n = self.names.len() as u16;
        let one = |e: u16| vec![(BigRational::from_integer(1.into()), e)];
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let l = self.mul_sum(self.mul(x, y), &one(z));
                    let r = self.mul_sum(&one(x), self.mul(y, z));
                    if l != r {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.names.len();
        (0..n).all(|i| (0..n).all(|j| self.prod[i][j] == self.prod[j][i]))
    }

    pub fn transposed(&self) -> TableSystem {
        let n = self.names.len();
        let prod = (0..n).map(|i| (0..n).map(|j| self.prod[j][i].clone()).collect()).collect();
        TableSystem { names: self.names.clone(), prod, unit: self.unit }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn two_element_group() {
        // names: x, 1 with x*x = 1
        let t = TableSystem::new(
            vec!["x".into(), "1".into()],
            vec![vec![vec![(q(1), 1)], vec![(q(1), 0)]], vec![vec![(q(1), 0)], vec![(q(1), 1)]]],
        )
        .unwrap();
        assert_eq!(t.unit, Some(1));
        assert!(t.associativity_failures().is_empty());
    }

    #[test]
    fn non_associative_rejected() {
        // a*a = b, everything else a
        let t = TableSystem::new(
            vec!["a".into(), "b".into()],
            vec![vec![vec![(q(1), 1)], vec![(q(1), 0)]], vec![vec![(q(1), 0)], vec![(q(1), 0)]]],
        )
        .unwrap();
        assert!(!t.associativity_failures().is_empty());
    }
}
