//! Words over a finite alphabet modulo rewriting rules whose right-hand
//! sides may be formal sums.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Word = Vec<u16>;
/// A formal sum of words with rational coefficients.
pub type WordSum = Vec<(BigRational, Word)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: WordSum,
}

impl Rule {
    pub fn monomial(lhs: Word, rhs: Word) -> Self {
        Rule { lhs, rhs: vec![(BigRational::one(), rhs)] }
    }

    pub fn to_zero(lhs: Word) -> Self {
        Rule { lhs, rhs: vec![] }
    }

    /// A rule `l -> r` with a single right-hand word and coefficient one.
    pub fn is_monomial(&self) -> bool {
        self.rhs.len() == 1 && self.rhs[0].0.is_one()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    /// Free monoid, or a monoid presented by monomial rules.
    Monoid,
    /// Variables `X1 < X2 < ...` whose normal words are nondecreasing;
    /// printed commutatively.
    Solvable,
    /// General rules, possibly with formal sums or zero right-hand sides.
    Algebra,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSystem {
    pub letters: Vec<String>,
    pub rules: Vec<Rule>,
    pub kind: WordKind,
    pub max_lhs: usize,
}

pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// A failed local-confluence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalFailure {
    pub overlap: Word,
    pub left: WordSum,
    pub right: WordSum,
}

impl WordSystem {
    pub fn new(letters: Vec<String>, rules: Vec<Rule>, kind: WordKind) -> Self {
        let max_lhs = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0);
        WordSystem { letters, rules, kind, max_lhs }
    }

    pub fn free(letters: Vec<String>) -> Self {
        Self::new(letters, vec![], WordKind::Monoid)
    }

    pub fn is_free(&self) -> bool {
        self.rules.is_empty()
    }

    /// All rules are monomial, so products are single words.
    pub fn is_monomial(&self) -> bool {
        self.rules.iter().all(Rule::is_monomial)
    }

    /// Leftmost-innermost redex: the earliest end position, shortest rule.
    pub fn find_redex(&self, w: &[u16]) -> Option<(usize, usize)> {
        if self.rules.is_empty() {
            return None;
        }
        for end in 1..=w.len() {
            let mut best: Option<(usize, usize)> = None;
            for (ri, r) in self.rules.iter().enumerate() {
                let l = r.lhs.len();
                if l <= end && w[end - l..end] == r.lhs[..] {
                    if best.map_or(true, |(_, bl)| l < bl) {
                        best = Some((ri, l));
                    }
                }
            }
            if let Some((ri, l)) = best {
                return Some((end - l, ri));
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &[u16]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Normal form of a formal sum, rewriting leftmost-innermost.
    pub fn normalize_sum(&self, input: WordSum, limit: usize) -> Result<WordSum> {
        let mut out: BTreeMap<Word, BigRational> = BTreeMap::new();
        let mut stack: Vec<(BigRational, Word)> = input;
        let mut steps = 0usize;
        while let Some((c, w)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            match self.find_redex(&w) {
                None => {
                    let e = out.entry(w).or_insert_with(BigRational::zero);
                    *e += c;
                }
                Some((pos, ri)) => {
                    steps += 1;
                    if steps > limit {
                        return Err(Error::StepLimit(limit));
                    }
                    let r = &self.rules[ri];
                    for (rc, rw) in &r.rhs {
                        let mut nw = Vec::with_capacity(w.len() + rw.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[pos + r.lhs.len()..]);
                        stack.push((&c * rc, nw));
                    }
                }
            }
        }
        Ok(out.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect())
    }

    pub fn normalize(&self, w: &[u16], limit: usize) -> Result<WordSum> {
        self.normalize_sum(vec![(BigRational::one(), w.to_vec())], limit)
    }

    /// Normal form of a single word under monomial rules.
    pub fn normalize_monomial(&self, w: &[u16], limit: usize) -> Result<Word> {
        let mut cur = w.to_vec();
        let mut steps = 0;
        while let Some((pos, ri)) = self.find_redex(&cur) {
            steps += 1;
            if steps > limit {
                return Err(Error::StepLimit(limit));
            }
            let r = &self.rules[ri];
            let rw = &r.rhs[0].1;
            cur.splice(pos..pos + r.lhs.len(), rw.iter().copied());
        }
        Ok(cur)
    }

    /// Overlap words of all pairs of left-hand sides, with the two
    /// one-step rewrites of each.
    fn critical_overlaps(&self) -> Vec<(Word, WordSum, WordSum)> {
        let apply = |w: &Word, pos: usize, r: &Rule| -> WordSum {
            r.rhs
                .iter()
                .map(|(c, rw)| {
                    let mut nw = w[..pos].to_vec();
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(&w[pos + r.lhs.len()..]);
                    (c.clone(), nw)
                })
                .collect()
        };
        let mut out = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // r2 inside r1
                if i != j && l2.len() <= l1.len() {
                    for p in 0..=(l1.len() - l2.len()) {
                        if l1[p..p + l2.len()] == l2[..] {
                            out.push((l1.clone(), apply(l1, 0, r1), apply(l1, p, r2)));
                        }
                    }
                }
                // proper suffix of l1 equals a proper prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[k..]);
                        out.push((w.clone(), apply(&w, 0, r1), apply(&w, l1.len() - k, r2)));
                    }
                }
            }
        }
        out
    }

    /// Non-joinable critical pairs.
    pub fn confluence_failures(&self, limit: usize) -> Result<Vec<CriticalFailure>> {
        let mut fails = Vec::new();
        for (w, a, b) in self.critical_overlaps() {
            let na = self.normalize_sum(a, limit)?;
            let nb = self.normalize_sum(b, limit)?;
            if na != nb {
                fails.push(CriticalFailure { overlap: w, left: na, right: nb });
            }
        }
        Ok(fails)
    }

    /// Irreducible words of length at most `n`, in length-then-letter order.
    pub fn irreducible_words(&self, n: usize, cap: usize) -> Vec<Word> {
        let mut out = vec![vec![]];
        let mut layer: Vec<Word> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for a in 0..self.letters.len() as u16 {
                    let mut nw = w.clone();
                    nw.push(a);
                    if self.suffix_irreducible(&nw) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            if out.len() >= cap {
                out.truncate(cap);
                break;
            }
            layer = next;
        }
        out
    }

    fn suffix_irreducible(&self, w: &[u16]) -> bool {
        !self.rules.iter().any(|r| r.lhs.len() <= w.len() && w[w.len() - r.lhs.len()..] == r.lhs[..])
    }

    /// Rules of the reversed system, for the opposite ring.
    pub fn reversed(&self) -> WordSystem {
        let rev = |w: &Word| w.iter().rev().copied().collect::<Word>();
        let rules = self
            .rules
            .iter()
            .map(|r| Rule { lhs: rev(&r.lhs), rhs: r.rhs.iter().map(|(c, w)| (c.clone(), rev(w))).collect() })
            .collect();
        WordSystem::new(self.letters.clone(), rules, self.kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(rules: &[(&[u16], &[u16])]) -> WordSystem {
        WordSystem::new(
            vec!["a".into(), "b".into(), "c".into()],
            rules.iter().map(|(l, r)| Rule::monomial(l.to_vec(), r.to_vec())).collect(),
            WordKind::Monoid,
        )
    }

    #[test]
    fn free_group_normal_forms() {
        let s = sys(&[(&[0, 1], &[]), (&[1, 0], &[])]);
        assert_eq!(s.normalize_monomial(&[0, 0, 1, 1, 0], 100).unwrap(), vec![0]);
        assert!(s.confluence_failures(100).unwrap().is_empty());
    }

    #[test]
    fn confluent_collapsing_system() {
        let s = sys(&[(&[0, 1], &[0]), (&[0, 2], &[0]), (&[1, 2], &[1])]);
        assert!(s.confluence_failures(100).unwrap().is_empty());
        assert_eq!(s.normalize_monomial(&[0, 1, 2], 100).unwrap(), vec![0]);
    }

    #[test]
    fn detects_non_confluence() {
        let s = sys(&[(&[0, 1], &[2]), (&[1, 0], &[])]);
        assert!(!s.confluence_failures(100).unwrap().is_empty());
    }

    #[test]
    fn step_limit() {
        let s = sys(&[(&[0], &[1]), (&[1], &[0])]);
        assert_eq!(s.normalize(&[0], 10), Err(Error::StepLimit(10)));
    }

    #[test]
    fn irreducible_enumeration() {
        let s = sys(&[(&[0, 1], &[]), (&[1, 0], &[])]);
        let ws = s.irreducible_words(2, 100);
        assert_eq!(ws, vec![vec![], vec![0], vec![1], vec![2], vec![0, 0], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 0], vec![2, 1], vec![2, 2]]);
    }
}
