use std::cmp::Ordering;

use super::{Term, Universe};
use crate::error::{Error, Result};

/// Term orderings. Each precedence is a `rank` vector: `rank[i]` is the
/// position of symbol `i` in the precedence list, `0` being the largest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    /// Total degree, then the first differing exponent in precedence order.
    DegLex(Vec<usize>),
    /// Exponents in precedence order.
    Lex(Vec<usize>),
    /// Length, then the first differing letter from the left.
    LenLex(Vec<usize>),
    /// Length, then the first differing letter from the right.
    RevLenLex(Vec<usize>),
    /// Explicit rank on table elements.
    Rank(Vec<usize>),
    /// Tagged terms: tag words by length-lex, compared before the base when
    /// `tags_high`, after it otherwise.
    Syllable { tags_high: bool, tag_rank: Vec<usize>, base: Box<TermOrder> },
}

/// Rank vector from a precedence list of symbol indices (largest first).
pub fn rank_of(precedence: &[usize]) -> Vec<usize> {
    let n = precedence.iter().map(|&s| s + 1).max().unwrap_or(0).max(precedence.len());
    let mut r = vec![usize::MAX; n];
    for (pos, &s) in precedence.iter().enumerate() {
        r[s] = pos;
    }
    r
}

fn precedence_of(rank: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..rank.len()).collect();
    p.sort_by_key(|&i| rank[i]);
    p
}

fn counts(w: &[u16], n: usize) -> Vec<u32> {
    let mut c = vec![0u32; n];
    for &a in w {
        c[a as usize] += 1;
    }
    c
}

fn cmp_exps(a: &[u32], b: &[u32], rank: &[usize], graded: bool) -> Ordering {
    if graded {
        let da: u64 = a.iter().map(|&x| x as u64).sum();
        let db: u64 = b.iter().map(|&x| x as u64).sum();
        if da != db {
            return da.cmp(&db);
        }
    }
    let mut best: Option<usize> = None;
    for s in 0..a.len() {
        if a[s] != b[s] && best.map_or(true, |t| rank[s] < rank[t]) {
            best = Some(s);
        }
    }
    best.map_or(Ordering::Equal, |s| a[s].cmp(&b[s]))
}

/// Larger letter means smaller rank.
fn cmp_letter(a: u16, b: u16, rank: &[usize]) -> Ordering {
    rank[b as usize].cmp(&rank[a as usize])
}

fn cmp_lenlex(a: &[u16], b: &[u16], rank: &[usize], from_right: bool) -> Ordering {
    if a.len() != b.len() {
        return a.len().cmp(&b.len());
    }
    let n = a.len();
    for k in 0..n {
        let i = if from_right { n - 1 - k } else { k };
        if a[i] != b[i] {
            return cmp_letter(a[i], b[i], rank);
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn deglex(precedence: &[usize]) -> Self {
        TermOrder::DegLex(rank_of(precedence))
    }
    pub fn lex(precedence: &[usize]) -> Self {
        TermOrder::Lex(rank_of(precedence))
    }
    pub fn lenlex(precedence: &[usize]) -> Self {
        TermOrder::LenLex(rank_of(precedence))
    }
    pub fn revlenlex(precedence: &[usize]) -> Self {
        TermOrder::RevLenLex(rank_of(precedence))
    }
    pub fn rank(precedence: &[usize]) -> Self {
        TermOrder::Rank(rank_of(precedence))
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        match (self, a, b) {
            (TermOrder::DegLex(r), Term::Exp(x), Term::Exp(y)) => cmp_exps(x, y, r, true),
            (TermOrder::Lex(r), Term::Exp(x), Term::Exp(y)) => cmp_exps(x, y, r, false),
            (TermOrder::DegLex(r) | TermOrder::Lex(r), Term::Word(x), Term::Word(y)) => {
                let graded = matches!(self, TermOrder::DegLex(_));
                cmp_exps(&counts(x, r.len()), &counts(y, r.len()), r, graded)
                    .then_with(|| cmp_lenlex(x, y, r, false))
            }
            (TermOrder::LenLex(r), Term::Word(x), Term::Word(y)) => cmp_lenlex(x, y, r, false),
            (TermOrder::RevLenLex(r), Term::Word(x), Term::Word(y)) => cmp_lenlex(x, y, r, true),
            (TermOrder::Rank(r), Term::Elem(x), Term::Elem(y)) => r[*y as usize].cmp(&r[*x as usize]),
            (TermOrder::Syllable { tags_high, tag_rank, base }, Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let tags = cmp_lenlex(w1, w2, tag_rank, false);
                if *tags_high {
                    tags.then_with(|| base.cmp(b1, b2))
                } else {
                    base.cmp(b1, b2).then(tags)
                }
            }
            _ => panic!("ordering {self:?} does not apply to {a:?}, {b:?}"),
        }
    }

    /// Checks that the ordering fits the universe.
    pub fn validate(&self, u: &Universe) -> Result<()> {
        let n = u.symbols().len();
        let ok_rank = |r: &Vec<usize>, k: usize| {
            let mut s = r.clone();
            s.sort_unstable();
            r.len() == k && s == (0..k).collect::<Vec<_>>()
        };
        match (self, u) {
            (TermOrder::DegLex(r) | TermOrder::Lex(r), Universe::Commutative { .. } | Universe::Words(_))
            | (TermOrder::LenLex(r) | TermOrder::RevLenLex(r), Universe::Words(_))
            | (TermOrder::Rank(r), Universe::Table(_)) => {
                if ok_rank(r, n) {
                    Ok(())
                } else {
                    Err(Error::Ordering(format!("precedence must list each of the {n} symbols once")))
                }
            }
            (TermOrder::Syllable { tag_rank, base, .. }, Universe::Tagged(ts)) => {
                if !ok_rank(tag_rank, ts.tags.len()) {
                    return Err(Error::Ordering("tag precedence must list each tag once".into()));
                }
                base.validate(&ts.base)
            }
            _ => Err(Error::Ordering(format!("{} does not apply to this universe", self.name()))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::DegLex(_) => "deglex",
            TermOrder::Lex(_) => "lex",
            TermOrder::LenLex(_) => "lenlex",
            TermOrder::RevLenLex(_) => "revlenlex",
            TermOrder::Rank(_) => "rank",
            TermOrder::Syllable { .. } => "syllable",
        }
    }

    pub fn describe(&self, u: &Universe) -> String {
        let names = |r: &[usize], syms: &[String]| {
            precedence_of(r).iter().map(|&i| syms[i].clone()).collect::<Vec<_>>().join(">")
        };
        match (self, u) {
            (TermOrder::Syllable { tags_high, tag_rank, base }, Universe::Tagged(ts)) => format!(
                "syllable({}; {}; {})",
                names(tag_rank, &ts.tags),
                if *tags_high { "tags-high" } else { "tags-low" },
                base.describe(&ts.base)
            ),
            (TermOrder::DegLex(r) | TermOrder::Lex(r) | TermOrder::LenLex(r) | TermOrder::RevLenLex(r) | TermOrder::Rank(r), _) => {
                format!("{}({})", self.name(), names(r, &u.symbols()))
            }
            _ => self.name().into(),
        }
    }

    /// The ordering on reversed words that mirrors this one.
    pub fn opposite(&self) -> TermOrder {
        match self {
            TermOrder::LenLex(r) => TermOrder::RevLenLex(r.clone()),
            TermOrder::RevLenLex(r) => TermOrder::LenLex(r.clone()),
            TermOrder::Syllable { tags_high, tag_rank, base } => {
                TermOrder::Syllable { tags_high: *tags_high, tag_rank: tag_rank.clone(), base: Box::new(base.opposite()) }
            }
            other => other.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_examples() {
        let o = TermOrder::deglex(&[0, 1, 2]);
        let t = |e: &[u32]| Term::Exp(e.to_vec());
        assert_eq!(o.cmp(&t(&[2, 0, 0]), &t(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&t(&[0, 1, 0]), &t(&[0, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&t(&[0, 0, 2]), &t(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lenlex_directions() {
        let w = |v: &[u16]| Term::Word(v.to_vec());
        // a > b > c
        let l = TermOrder::lenlex(&[0, 1, 2]);
        let r = TermOrder::revlenlex(&[0, 1, 2]);
        assert_eq!(l.cmp(&w(&[0, 2]), &w(&[1, 0])), Ordering::Greater);
        assert_eq!(r.cmp(&w(&[0, 2]), &w(&[1, 0])), Ordering::Less);
        assert_eq!(r.cmp(&w(&[2, 0]), &w(&[1, 1])), Ordering::Greater);
        assert_eq!(l.cmp(&w(&[2]), &w(&[0, 0])), Ordering::Less);
    }
}
