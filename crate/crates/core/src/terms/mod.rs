//! Term universes, orderings and reductive relations.

mod order;
mod reductive;
mod space;
mod table;
mod words;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use order::TermOrder;
pub use reductive::Reductive;
pub use space::{Common, ConstructionReport, TermSpace, TwoCommon};
pub use table::{ElemSum, TableSystem};
pub use words::{CriticalFailure, Rule, Word, WordKind, WordSum, WordSystem, DEFAULT_STEP_LIMIT};

/// An element of a term universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// Exponent vector of a commutative monomial.
    Exp(Vec<u32>),
    /// Irreducible word.
    Word(Vec<u16>),
    /// Element of a finite table.
    Elem(u16),
    /// Tag word (sorted when tags commute) times a base term.
    Tagged(Vec<u16>, Box<Term>),
}

impl Term {
    pub fn as_word(&self) -> Option<&[u16]> {
        match self {
            Term::Word(w) => Some(w),
            _ => None,
        }
    }
}

/// Result of multiplying two terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Product {
    Term(Term),
    Sum(Vec<(BigRational, Term)>),
}

impl Product {
    pub fn zero() -> Self {
        Product::Sum(vec![])
    }

    pub fn into_sum(self) -> Vec<(BigRational, Term)> {
        match self {
            Product::Term(t) => vec![(BigRational::one(), t)],
            Product::Sum(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedSystem {
    pub tags: Vec<String>,
    pub commuting: bool,
    pub base: Universe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Universe {
    Commutative { vars: Vec<String> },
    Words(Arc<WordSystem>),
    Table(Arc<TableSystem>),
    Tagged(Arc<TaggedSystem>),
}

fn merge_sum(v: impl IntoIterator<Item = (BigRational, Term)>) -> Vec<(BigRational, Term)> {
    let mut m: BTreeMap<Term, BigRational> = BTreeMap::new();
    for (c, t) in v {
        *m.entry(t).or_insert_with(BigRational::zero) += c;
    }
    m.into_iter().filter(|(_, c)| !c.is_zero()).map(|(t, c)| (c, t)).collect()
}

impl Universe {
    pub fn commutative<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        Universe::Commutative { vars: vars.into_iter().map(Into::into).collect() }
    }

    pub fn free<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Self {
        Universe::Words(Arc::new(WordSystem::free(letters.into_iter().map(Into::into).collect())))
    }

    pub fn words(sys: WordSystem) -> Self {
        Universe::Words(Arc::new(sys))
    }

    pub fn table(t: TableSystem) -> Self {
        Universe::Table(Arc::new(t))
    }

    pub fn tagged<S: Into<String>>(tags: impl IntoIterator<Item = S>, commuting: bool, base: Universe) -> Self {
        Universe::Tagged(Arc::new(TaggedSystem { tags: tags.into_iter().map(Into::into).collect(), commuting, base }))
    }

    /// Names of the generating symbols, in declaration order.
    pub fn symbols(&self) -> Vec<String> {
        match self {
            Universe::Commutative { vars } => vars.clone(),
            Universe::Words(w) => w.letters.clone(),
            Universe::Table(t) => t.names.clone(),
            Universe::Tagged(t) => t.base.symbols(),
        }
    }

    pub fn unit(&self) -> Option<Term> {
        match self {
            Universe::Commutative { vars } => Some(Term::Exp(vec![0; vars.len()])),
            Universe::Words(_) => Some(Term::Word(vec![])),
            Universe::Table(t) => t.unit.map(Term::Elem),
            Universe::Tagged(t) => t.base.unit().map(|b| Term::Tagged(vec![], Box::new(b))),
        }
    }

    pub fn is_unit(&self, t: &Term) -> bool {
        self.unit().as_ref() == Some(t)
    }

    /// The term of generator `i` (a variable, letter, or table element).
    pub fn generator(&self, i: usize) -> Term {
        match self {
            Universe::Commutative { vars } => {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                Term::Exp(e)
            }
            Universe::Words(_) => Term::Word(vec![i as u16]),
            Universe::Table(_) => Term::Elem(i as u16),
            Universe::Tagged(t) => Term::Tagged(vec![], Box::new(t.base.generator(i))),
        }
    }

    /// The pure tag term `$z_i` (tagged universes only).
    pub fn tag(&self, i: usize) -> Option<Term> {
        match self {
            Universe::Tagged(t) => Some(Term::Tagged(vec![i as u16], Box::new(t.base.unit()?))),
            _ => None,
        }
    }

    /// Products are single terms for every pair of terms.
    pub fn is_monomial(&self) -> bool {
        match self {
            Universe::Commutative { .. } => true,
            Universe::Words(w) => w.is_monomial(),
            Universe::Table(t) => t.prod.iter().flatten().all(|s| s.len() == 1 && s[0].0.is_one()),
            Universe::Tagged(t) => t.base.is_monomial(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            Universe::Commutative { .. } => true,
            Universe::Words(w) => w.letters.len() <= 1,
            Universe::Table(t) => t.is_commutative(),
            Universe::Tagged(t) => (t.commuting || t.tags.len() <= 1) && t.base.is_commutative(),
        }
    }

    /// Free monoid or commutative monomials: multiplication is injective
    /// and never collapses.
    pub fn is_free(&self) -> bool {
        match self {
            Universe::Commutative { .. } => true,
            Universe::Words(w) => w.is_free(),
            Universe::Table(_) => false,
            Universe::Tagged(t) => t.base.is_free(),
        }
    }

    pub fn mul(&self, a: &Term, b: &Term) -> Product {
        match (self, a, b) {
            (Universe::Commutative { .. }, Term::Exp(x), Term::Exp(y)) => {
                Product::Term(Term::Exp(x.iter().zip(y).map(|(p, q)| p + q).collect()))
            }
            (Universe::Words(sys), Term::Word(x), Term::Word(y)) => {
                let mut w = x.clone();
                w.extend_from_slice(y);
                if sys.is_free() {
                    Product::Term(Term::Word(w))
                } else if sys.is_monomial() {
                    Product::Term(Term::Word(sys.normalize_monomial(&w, DEFAULT_STEP_LIMIT).expect("rewriting diverged")))
                } else {
                    let s = sys.normalize(&w, DEFAULT_STEP_LIMIT).expect("rewriting diverged");
                    Product::Sum(s.into_iter().map(|(c, w)| (c, Term::Word(w))).collect())
                }
            }
            (Universe::Table(t), Term::Elem(x), Term::Elem(y)) => {
                let s = t.mul(*x, *y);
                match &s[..] {
                    [(c, e)] if c.is_one() => Product::Term(Term::Elem(*e)),
                    _ => Product::Sum(s.iter().map(|(c, e)| (c.clone(), Term::Elem(*e))).collect()),
                }
            }
            (Universe::Tagged(ts), Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                if ts.commuting {
                    w.sort_unstable();
                }
                match ts.base.mul(b1, b2) {
                    Product::Term(b) => Product::Term(Term::Tagged(w, Box::new(b))),
                    Product::Sum(s) => {
                        Product::Sum(s.into_iter().map(|(c, b)| (c, Term::Tagged(w.clone(), Box::new(b)))).collect())
                    }
                }
            }
            _ => panic!("term {a:?} or {b:?} does not belong to this universe"),
        }
    }

    /// `u * s * v` with absent multipliers skipped.
    pub fn mul3(&self, u: Option<&Term>, s: &Term, v: Option<&Term>) -> Product {
        let left = match u {
            Some(u) => self.mul(u, s),
            None => Product::Term(s.clone()),
        };
        match (left, v) {
            (p, None) => p,
            (Product::Term(t), Some(v)) => self.mul(&t, v),
            (Product::Sum(s), Some(v)) => {
                Product::Sum(merge_sum(s.into_iter().flat_map(|(c, t)| {
                    self.mul(&t, v).into_sum().into_iter().map(move |(d, r)| (&c * d, r))
                })))
            }
        }
    }

    /// Size used to bound enumerations: degree, length or 1.
    pub fn size(&self, t: &Term) -> usize {
        match t {
            Term::Exp(e) => e.iter().map(|&x| x as usize).sum(),
            Term::Word(w) => w.len(),
            Term::Elem(_) => 1,
            Term::Tagged(w, b) => w.len() + match self {
                Universe::Tagged(ts) => ts.base.size(b),
                _ => 0,
            },
        }
    }

    /// Terms of size at most `n` (at most `cap` of them), smallest sizes first.
    pub fn enumerate(&self, n: usize, cap: usize) -> Vec<Term> {
        match self {
            Universe::Commutative { vars } => {
                let k = vars.len();
                let mut out = Vec::new();
                for d in 0..=n {
                    let mut cur = vec![0u32; k];
                    exps_of_degree(k, d as u32, 0, &mut cur, &mut out);
                    if out.len() >= cap {
                        break;
                    }
                }
                out.truncate(cap);
                out
            }
            Universe::Words(w) => w.irreducible_words(n, cap).into_iter().map(Term::Word).collect(),
            Universe::Table(t) => (0..t.names.len() as u16).map(Term::Elem).take(cap).collect(),
            Universe::Tagged(ts) => {
                let bases = ts.base.enumerate(n, cap);
                let mut tagwords: Vec<Vec<u16>> = vec![vec![]];
                let mut layer = vec![vec![]];
                for _ in 0..n {
                    let mut next = Vec::new();
                    for w in &layer {
                        for a in 0..ts.tags.len() as u16 {
                            if ts.commuting && w.last().map_or(false, |&l| l > a) {
                                continue;
                            }
                            let mut nw: Vec<u16> = w.clone();
                            nw.push(a);
                            next.push(nw);
                        }
                    }
                    tagwords.extend(next.iter().cloned());
                    layer = next;
                }
                let mut out = Vec::new();
                for size in 0..=n {
                    for w in &tagwords {
                        for b in &bases {
                            if w.len() + ts.base.size(b) == size {
                                out.push(Term::Tagged(w.clone(), Box::new(b.clone())));
                            }
                        }
                    }
                }
                out.truncate(cap);
                out
            }
        }
    }

    pub fn fmt_term(&self, t: &Term) -> String {
        match (self, t) {
            (Universe::Commutative { vars }, Term::Exp(e)) => fmt_powers(vars, e),
            (Universe::Words(sys), Term::Word(w)) => {
                if w.is_empty() {
                    return "1".into();
                }
                if sys.kind == WordKind::Solvable {
                    let mut e = vec![0u32; sys.letters.len()];
                    for &a in w {
                        e[a as usize] += 1;
                    }
                    return fmt_powers(&sys.letters, &e);
                }
                w.iter().map(|&a| sys.letters[a as usize].as_str()).collect()
            }
            (Universe::Table(tb), Term::Elem(e)) => tb.names[*e as usize].clone(),
            (Universe::Tagged(ts), Term::Tagged(w, b)) => {
                let mut parts: Vec<String> = Vec::new();
                if ts.commuting {
                    let mut e = vec![0u32; ts.tags.len()];
                    for &a in w {
                        e[a as usize] += 1;
                    }
                    if !w.is_empty() {
                        parts.push(fmt_powers(&ts.tags, &e));
                    }
                } else if !w.is_empty() {
                    parts.push(w.iter().map(|&a| ts.tags[a as usize].as_str()).collect());
                }
                if !ts.base.is_unit(b) {
                    parts.push(ts.base.fmt_term(b));
                }
                if parts.is_empty() {
                    "1".into()
                } else {
                    parts.join("*")
                }
            }
            _ => format!("{t:?}"),
        }
    }

    /// The opposite universe, with products reversed.
    pub fn opposite(&self) -> Universe {
        match self {
            Universe::Commutative { .. } => self.clone(),
            Universe::Words(w) => Universe::Words(Arc::new(w.reversed())),
            Universe::Table(t) => Universe::Table(Arc::new(t.transposed())),
            Universe::Tagged(t) => Universe::Tagged(Arc::new(TaggedSystem {
                tags: t.tags.clone(),
                commuting: t.commuting,
                base: t.base.opposite(),
            })),
        }
    }

    /// Maps a term to the opposite universe.
    pub fn reverse_term(&self, t: &Term) -> Term {
        match t {
            Term::Word(w) if !matches!(self, Universe::Words(s) if s.kind == WordKind::Solvable) => {
                Term::Word(w.iter().rev().copied().collect())
            }
            Term::Tagged(w, b) => {
                let base = match self {
                    Universe::Tagged(ts) => ts.base.reverse_term(b),
                    _ => (**b).clone(),
                };
                let tw = match self {
                    Universe::Tagged(ts) if !ts.commuting => w.iter().rev().copied().collect(),
                    _ => w.clone(),
                };
                Term::Tagged(tw, Box::new(base))
            }
            other => other.clone(),
        }
    }
}

fn exps_of_degree(k: usize, d: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Term>) {
    if k == 0 {
        if d == 0 {
            out.push(Term::Exp(vec![]));
        }
        return;
    }
    if i == k - 1 {
        cur[i] = d;
        out.push(Term::Exp(cur.clone()));
        cur[i] = 0;
        return;
    }
    for x in (0..=d).rev() {
        cur[i] = x;
        exps_of_degree(k, d - x, i + 1, cur, out);
    }
    cur[i] = 0;
}

fn fmt_powers(names: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { names[i].clone() } else { format!("{}^{}", names[i], x) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutative_products() {
        let u = Universe::commutative(["X", "Y"]);
        let p = u.mul(&Term::Exp(vec![1, 2]), &Term::Exp(vec![2, 0]));
        assert_eq!(p, Product::Term(Term::Exp(vec![3, 2])));
        assert_eq!(u.fmt_term(&Term::Exp(vec![3, 2])), "X^3*Y^2");
        assert_eq!(u.enumerate(1, 100).len(), 3);
    }

    #[test]
    fn tagged_products_concatenate_tags() {
        let u = Universe::tagged(["$z1", "$z2"], false, Universe::commutative(["X"]));
        let a = Term::Tagged(vec![1], Box::new(Term::Exp(vec![1])));
        let b = Term::Tagged(vec![0], Box::new(Term::Exp(vec![2])));
        assert_eq!(u.mul(&a, &b), Product::Term(Term::Tagged(vec![1, 0], Box::new(Term::Exp(vec![3])))));
        assert_eq!(u.fmt_term(&Term::Tagged(vec![1, 0], Box::new(Term::Exp(vec![3])))), "$z2$z1*X^3");
    }
}
