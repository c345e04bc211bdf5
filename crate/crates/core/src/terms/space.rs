//! A universe together with its ordering and reductive relation: the
//! term-level part of a function ring.

use std::cmp::Ordering;

use num_traits::Zero;

use super::reductive::{is_prefix, multiset_diff, multiset_lcm, occurrences};
use super::{Product, Reductive, Term, TermOrder, Universe, WordKind, DEFAULT_STEP_LIMIT};
use crate::error::{Error, Result};

const ENUM_CAP: usize = 5000;
const PROBE_CAP: usize = 60_000;

/// A right common multiple `t = HT(s1 * right1) = HT(s2 * right2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Common {
    pub term: Term,
    pub right1: Option<Term>,
    pub right2: Option<Term>,
}

/// A two-sided common multiple `t = HT(l1 * s1 * r1) = HT(l2 * s2 * r2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCommon {
    pub term: Term,
    pub m1: (Option<Term>, Option<Term>),
    pub m2: (Option<Term>, Option<Term>),
}

/// Outcome of the construction checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionReport {
    pub ordering: Vec<String>,
    pub decreasing: Vec<String>,
    pub confluence: Vec<String>,
    pub associativity: Vec<String>,
    pub reductive: Vec<String>,
    pub stability: Vec<String>,
    pub checked_stability: usize,
}

impl ConstructionReport {
    pub fn ok(&self) -> bool {
        self.first_error().is_none()
    }

    pub fn first_error(&self) -> Option<Error> {
        if let Some(m) = self.ordering.first() {
            return Some(Error::Ordering(m.clone()));
        }
        if let Some(m) = self.decreasing.first() {
            return Some(Error::NotDecreasing(m.clone()));
        }
        if let Some(m) = self.confluence.first() {
            return Some(Error::NotConfluent(m.clone()));
        }
        if let Some(m) = self.associativity.first() {
            return Some(Error::NotAssociative(m.clone()));
        }
        if let Some(m) = self.reductive.first() {
            return Some(Error::Reductive(m.clone()));
        }
        self.stability.first().map(|m| Error::Unstable(m.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSpace {
    pub universe: Universe,
    pub order: TermOrder,
    pub reductive: Reductive,
    /// Length bound for multiplier enumerations.
    pub bound: usize,
}

#[derive(Clone, Copy)]
struct Ctx<'a> {
    u: &'a Universe,
    o: &'a TermOrder,
    r: &'a Reductive,
    bound: usize,
}

fn opt(u: &Universe, t: Term) -> Option<Term> {
    (!u.is_unit(&t)).then_some(t)
}

fn word_counts(w: &[u16], n: usize) -> Vec<u32> {
    let mut c = vec![0u32; n];
    for &a in w {
        c[a as usize] += 1;
    }
    c
}

fn sorted_word(c: &[u32]) -> Vec<u16> {
    c.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i as u16).take(k as usize)).collect()
}

impl<'a> Ctx<'a> {
    fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.o.cmp(a, b)
    }

    fn head(&self, p: &Product) -> Option<Term> {
        match p {
            Product::Term(t) => Some(t.clone()),
            Product::Sum(v) => v
                .iter()
                .filter(|(c, _)| !c.is_zero())
                .map(|(_, t)| t)
                .max_by(|a, b| self.cmp(a, b))
                .cloned(),
        }
    }

    fn head3(&self, u: Option<&Term>, s: &Term, v: Option<&Term>) -> Option<Term> {
        self.head(&self.u.mul3(u, s, v))
    }

    fn base(&self) -> Option<Ctx<'a>> {
        match (self.u, self.o) {
            (Universe::Tagged(ts), TermOrder::Syllable { base, .. }) => {
                Some(Ctx { u: &ts.base, o: base, r: self.r, bound: self.bound })
            }
            _ => None,
        }
    }

    fn solvable(&self) -> bool {
        matches!(self.u, Universe::Words(w) if w.kind == WordKind::Solvable)
    }

    fn leq(&self, s: &Term, t: &Term) -> bool {
        if s == t {
            return true;
        }
        match (self.r, s, t) {
            (Reductive::Pairs(p), _, _) => p.iter().any(|(a, b)| a == s && b == t),
            (Reductive::Multiple { bound }, _, _) => {
                if self.cmp(t, s) == Ordering::Less {
                    return false;
                }
                if let (Term::Word(a), Term::Word(b)) = (s, t) {
                    if is_prefix(a, b) && self.head3(None, s, Some(&Term::Word(b[a.len()..].to_vec()))).as_ref() == Some(t) {
                        return true;
                    }
                }
                self.u
                    .enumerate(*bound, ENUM_CAP)
                    .iter()
                    .any(|w| !self.u.is_unit(w) && self.head3(None, s, Some(w)).as_ref() == Some(t))
            }
            (_, Term::Exp(a), Term::Exp(b)) => a.iter().zip(b).all(|(x, y)| x <= y),
            (_, Term::Word(a), Term::Word(b)) => {
                if self.solvable() {
                    let n = match self.u {
                        Universe::Words(w) => w.letters.len(),
                        _ => 0,
                    };
                    let (ca, cb) = (word_counts(a, n), word_counts(b, n));
                    return ca.iter().zip(&cb).all(|(x, y)| x <= y);
                }
                match self.r {
                    Reductive::Prefix => is_prefix(a, b),
                    _ => !occurrences(a, b).is_empty(),
                }
            }
            (_, Term::Elem(_), Term::Elem(_)) => false,
            (_, Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let Universe::Tagged(ts) = self.u else { return false };
                let tags_ok = if ts.commuting {
                    multiset_diff(w1, w2).is_some()
                } else if *self.r == Reductive::Prefix {
                    is_prefix(w1, w2)
                } else {
                    !occurrences(w1, w2).is_empty()
                };
                tags_ok && self.base().map_or(false, |c| c.leq(b1, b2))
            }
            _ => false,
        }
    }

    /// Right multipliers `w` with `HT(s * w) = t`, assuming `s <= t`.
    fn right_candidates(&self, s: &Term, t: &Term) -> Vec<Option<Term>> {
        if !self.leq(s, t) {
            return vec![];
        }
        let check = |w: Option<Term>| -> Option<Option<Term>> {
            (self.head3(None, s, w.as_ref()).as_ref() == Some(t)).then_some(w)
        };
        let mut out = Vec::new();
        match (self.u, s, t) {
            (Universe::Commutative { .. }, Term::Exp(a), Term::Exp(b)) => {
                if a.iter().zip(b).all(|(x, y)| x <= y) {
                    let d = Term::Exp(a.iter().zip(b).map(|(x, y)| y - x).collect());
                    out.extend(check(opt(self.u, d)));
                }
            }
            (Universe::Words(sys), Term::Word(a), Term::Word(b)) => {
                if sys.kind == WordKind::Solvable {
                    let n = sys.letters.len();
                    let (ca, cb) = (word_counts(a, n), word_counts(b, n));
                    if ca.iter().zip(&cb).all(|(x, y)| x <= y) {
                        let d: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| y - x).collect();
                        out.extend(check(opt(self.u, Term::Word(sorted_word(&d)))));
                    }
                } else {
                    if is_prefix(a, b) {
                        out.extend(check(opt(self.u, Term::Word(b[a.len()..].to_vec()))));
                    }
                    if out.is_empty() && !sys.is_free() {
                        let limit = b.len() + sys.max_lhs;
                        for w in self.u.enumerate(limit, ENUM_CAP) {
                            if self.u.is_unit(&w) {
                                continue;
                            }
                            out.extend(check(Some(w)));
                        }
                    }
                }
            }
            (Universe::Table(tb), Term::Elem(_), Term::Elem(_)) => {
                if s == t {
                    out.push(None);
                }
                for e in 0..tb.names.len() as u16 {
                    out.extend(check(Some(Term::Elem(e))));
                }
            }
            (Universe::Tagged(ts), Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let tag_parts: Vec<Vec<u16>> = if ts.commuting {
                    multiset_diff(w1, w2).into_iter().collect()
                } else if is_prefix(w1, w2) {
                    vec![w2[w1.len()..].to_vec()]
                } else {
                    vec![]
                };
                let Some(bc) = self.base() else { return vec![] };
                let base_parts = bc.right_candidates(b1, b2);
                for tw in &tag_parts {
                    for bp in &base_parts {
                        out.extend(check(self.tagged_mult(tw, bp.as_ref())));
                    }
                }
            }
            _ => {}
        }
        out
    }

    fn tagged_mult(&self, tags: &[u16], base: Option<&Term>) -> Option<Term> {
        let Universe::Tagged(ts) = self.u else { return None };
        if tags.is_empty() && base.is_none() {
            return None;
        }
        let b = base.cloned().or_else(|| ts.base.unit())?;
        Some(Term::Tagged(tags.to_vec(), Box::new(b)))
    }

    /// Two-sided multipliers `(u, v)` with `HT(u * s * v) = t`.
    fn two_sided_candidates(&self, s: &Term, t: &Term) -> Vec<(Option<Term>, Option<Term>)> {
        if !self.leq(s, t) {
            return vec![];
        }
        let check = |u: Option<Term>, v: Option<Term>| -> Option<(Option<Term>, Option<Term>)> {
            (self.head3(u.as_ref(), s, v.as_ref()).as_ref() == Some(t)).then_some((u, v))
        };
        let mut out = Vec::new();
        match (self.u, s, t) {
            (Universe::Commutative { .. }, _, _) => {
                out.extend(self.right_candidates(s, t).into_iter().map(|w| (None, w)));
            }
            (Universe::Words(sys), Term::Word(a), Term::Word(b)) => {
                if sys.kind == WordKind::Solvable {
                    out.extend(self.right_candidates(s, t).into_iter().map(|w| (None, w)));
                } else {
                    for p in occurrences(a, b) {
                        let u = opt(self.u, Term::Word(b[..p].to_vec()));
                        let v = opt(self.u, Term::Word(b[p + a.len()..].to_vec()));
                        out.extend(check(u, v));
                    }
                    if out.is_empty() && !sys.is_free() {
                        let limit = b.len() + sys.max_lhs;
                        let ws = self.u.enumerate(limit, 400);
                        for u in &ws {
                            for v in &ws {
                                if self.u.size(u) + self.u.size(v) > limit {
                                    continue;
                                }
                                out.extend(check(opt(self.u, u.clone()), opt(self.u, v.clone())));
                            }
                        }
                    }
                }
            }
            (Universe::Table(tb), _, _) => {
                let mut ms: Vec<Option<Term>> = vec![None];
                ms.extend((0..tb.names.len() as u16).map(|e| Some(Term::Elem(e))));
                for u in &ms {
                    for v in &ms {
                        out.extend(check(u.clone(), v.clone()));
                    }
                }
            }
            (Universe::Tagged(ts), Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let tag_parts: Vec<(Vec<u16>, Vec<u16>)> = if ts.commuting {
                    multiset_diff(w1, w2).into_iter().map(|d| (vec![], d)).collect()
                } else {
                    occurrences(w1, w2)
                        .into_iter()
                        .map(|p| (w2[..p].to_vec(), w2[p + w1.len()..].to_vec()))
                        .collect()
                };
                let Some(bc) = self.base() else { return vec![] };
                let base_parts = bc.two_sided_candidates(b1, b2);
                for (tu, tv) in &tag_parts {
                    for (bu, bv) in &base_parts {
                        out.extend(check(self.tagged_mult(tu, bu.as_ref()), self.tagged_mult(tv, bv.as_ref())));
                    }
                }
            }
            _ => {}
        }
        out.dedup();
        out
    }

    fn minimal_right(&self, found: Vec<Common>) -> Vec<Common> {
        let terms: Vec<Term> = found.iter().map(|c| c.term.clone()).collect();
        let mut out: Vec<Common> = Vec::new();
        for c in found {
            let dominated = terms.iter().any(|t| *t != c.term && self.leq(t, &c.term));
            if !dominated && !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    fn right_commons(&self, s1: &Term, s2: &Term) -> (Vec<Common>, bool) {
        match (self.u, s1, s2) {
            (Universe::Commutative { .. }, Term::Exp(a), Term::Exp(b)) => {
                let l = Term::Exp(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
                (self.commons_at(s1, s2, &l), true)
            }
            (Universe::Words(sys), Term::Word(a), Term::Word(b)) => {
                if sys.kind == WordKind::Solvable {
                    let n = sys.letters.len();
                    let (ca, cb) = (word_counts(a, n), word_counts(b, n));
                    let l: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| *x.max(y)).collect();
                    let t = Term::Word(sorted_word(&l));
                    return (self.commons_at(s1, s2, &t), true);
                }
                if *self.r == Reductive::Prefix {
                    let t = if is_prefix(a, b) {
                        s2.clone()
                    } else if is_prefix(b, a) {
                        s1.clone()
                    } else {
                        return (vec![], true);
                    };
                    return (self.commons_at(s1, s2, &t), true);
                }
                if sys.is_free() {
                    // free words under subword/divides: only prefix-related pairs
                    let t = if is_prefix(a, b) {
                        s2.clone()
                    } else if is_prefix(b, a) {
                        s1.clone()
                    } else {
                        return (vec![], true);
                    };
                    return (self.commons_at(s1, s2, &t), true);
                }
                (self.enumerated_right_commons(s1, s2), false)
            }
            (Universe::Table(_), _, _) => (self.enumerated_right_commons(s1, s2), true),
            (Universe::Tagged(ts), Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let tag_l: Option<Vec<u16>> = if ts.commuting {
                    Some(multiset_lcm(w1, w2))
                } else if is_prefix(w1, w2) {
                    Some(w2.clone())
                } else if is_prefix(w2, w1) {
                    Some(w1.clone())
                } else {
                    None
                };
                let Some(tl) = tag_l else { return (vec![], true) };
                let Some(bc) = self.base() else { return (vec![], false) };
                let (bcs, complete) = bc.right_commons(b1, b2);
                let mut out = Vec::new();
                let mut seen = Vec::new();
                for c in bcs {
                    let t = Term::Tagged(tl.clone(), Box::new(c.term.clone()));
                    if !seen.contains(&t) {
                        seen.push(t.clone());
                        out.extend(self.commons_at(s1, s2, &t));
                    }
                }
                (out, complete)
            }
            _ => (vec![], false),
        }
    }

    fn commons_at(&self, s1: &Term, s2: &Term, t: &Term) -> Vec<Common> {
        let c1 = self.right_candidates(s1, t);
        let c2 = self.right_candidates(s2, t);
        let mut out = Vec::new();
        if let (Some(a), Some(b)) = (c1.first(), c2.first()) {
            out.push(Common { term: t.clone(), right1: a.clone(), right2: b.clone() });
        }
        out
    }

    fn enumerated_right_commons(&self, s1: &Term, s2: &Term) -> Vec<Common> {
        let mut ms: Vec<Option<Term>> = vec![None];
        ms.extend(self.u.enumerate(self.bound, ENUM_CAP).into_iter().filter(|w| !self.u.is_unit(w)).map(Some));
        let mut found = Vec::new();
        for w1 in &ms {
            let Some(t) = self.head3(None, s1, w1.as_ref()) else { continue };
            if !self.leq(s1, &t) || !self.leq(s2, &t) {
                continue;
            }
            for w2 in &ms {
                if self.head3(None, s2, w2.as_ref()).as_ref() == Some(&t) {
                    found.push(Common { term: t.clone(), right1: w1.clone(), right2: w2.clone() });
                }
            }
        }
        self.minimal_right(found)
    }

    fn two_sided_commons(&self, s1: &Term, s2: &Term) -> (Vec<TwoCommon>, bool) {
        match (self.u, s1, s2) {
            (Universe::Commutative { .. }, _, _) => {
                let (cs, complete) = self.right_commons(s1, s2);
                (cs.into_iter().map(|c| TwoCommon { term: c.term, m1: (None, c.right1), m2: (None, c.right2) }).collect(), complete)
            }
            (Universe::Words(sys), Term::Word(a), Term::Word(b)) => {
                if sys.kind == WordKind::Solvable {
                    let (cs, complete) = self.right_commons(s1, s2);
                    return (
                        cs.into_iter().map(|c| TwoCommon { term: c.term, m1: (None, c.right1), m2: (None, c.right2) }).collect(),
                        complete,
                    );
                }
                let mut out = Vec::new();
                for (t, (u1, v1), (u2, v2)) in word_overlaps(a, b) {
                    let tt = Term::Word(t);
                    let m1 = (opt(self.u, Term::Word(u1)), opt(self.u, Term::Word(v1)));
                    let m2 = (opt(self.u, Term::Word(u2)), opt(self.u, Term::Word(v2)));
                    if self.head3(m1.0.as_ref(), s1, m1.1.as_ref()).as_ref() == Some(&tt)
                        && self.head3(m2.0.as_ref(), s2, m2.1.as_ref()).as_ref() == Some(&tt)
                    {
                        let c = TwoCommon { term: tt, m1, m2 };
                        if !out.contains(&c) {
                            out.push(c);
                        }
                    }
                }
                (out, sys.is_free())
            }
            (Universe::Table(tb), _, _) => {
                let mut ms: Vec<Option<Term>> = vec![None];
                ms.extend((0..tb.names.len() as u16).map(|e| Some(Term::Elem(e))));
                let mut found = Vec::new();
                for u in &ms {
                    for v in &ms {
                        let Some(t) = self.head3(u.as_ref(), s1, v.as_ref()) else { continue };
                        if !self.leq(s1, &t) || !self.leq(s2, &t) {
                            continue;
                        }
                        if let Some(m2) = self.two_sided_candidates(s2, &t).into_iter().next() {
                            let c = TwoCommon { term: t, m1: (u.clone(), v.clone()), m2 };
                            if !found.contains(&c) {
                                found.push(c);
                            }
                        }
                    }
                }
                let terms: Vec<Term> = found.iter().map(|c| c.term.clone()).collect();
                let out =
                    found.into_iter().filter(|c| !terms.iter().any(|t| *t != c.term && self.leq(t, &c.term))).collect();
                (out, true)
            }
            (Universe::Tagged(ts), Term::Tagged(w1, b1), Term::Tagged(w2, b2)) => {
                let Some(bc) = self.base() else { return (vec![], false) };
                let (bcs, mut complete) = bc.two_sided_commons(b1, b2);
                type Split = (Vec<u16>, Vec<u16>);
                let tag_cs: Vec<(Vec<u16>, Split, Split)> = if ts.commuting {
                    let l = multiset_lcm(w1, w2);
                    let d1 = multiset_diff(w1, &l).unwrap_or_default();
                    let d2 = multiset_diff(w2, &l).unwrap_or_default();
                    vec![(l, (vec![], d1), (vec![], d2))]
                } else {
                    let mut v = word_overlaps(w1, w2);
                    let shares_base = !bcs.iter().all(|c| {
                        // base multiple equals the plain product: coprime heads
                        matches!((b1.as_ref(), b2.as_ref(), &c.term), (Term::Exp(x), Term::Exp(y), Term::Exp(l))
                            if x.iter().zip(y).zip(l).all(|((p, q), r)| p + q == *r))
                    });
                    if !w1.is_empty() && !w2.is_empty() && shares_base {
                        let mut c12 = w1.clone();
                        c12.extend_from_slice(w2);
                        let mut c21 = w2.clone();
                        c21.extend_from_slice(w1);
                        v.push((c12, (vec![], w2.clone()), (w1.clone(), vec![])));
                        v.push((c21, (w2.clone(), vec![]), (vec![], w1.clone())));
                        complete = false;
                    }
                    v
                };
                let mut out = Vec::new();
                for (tl, (tu1, tv1), (tu2, tv2)) in &tag_cs {
                    for c in &bcs {
                        let t = Term::Tagged(tl.clone(), Box::new(c.term.clone()));
                        let m1 = (self.tagged_mult(tu1, c.m1.0.as_ref()), self.tagged_mult(tv1, c.m1.1.as_ref()));
                        let m2 = (self.tagged_mult(tu2, c.m2.0.as_ref()), self.tagged_mult(tv2, c.m2.1.as_ref()));
                        if self.head3(m1.0.as_ref(), s1, m1.1.as_ref()).as_ref() == Some(&t)
                            && self.head3(m2.0.as_ref(), s2, m2.1.as_ref()).as_ref() == Some(&t)
                        {
                            let tc = TwoCommon { term: t, m1, m2 };
                            if !out.contains(&tc) {
                                out.push(tc);
                            }
                        }
                    }
                }
                (out, complete)
            }
            _ => (vec![], false),
        }
    }
}

/// Superpositions of two words: containment and proper overlaps, as
/// `(t, (u1, v1), (u2, v2))` with `t = u1 a v1 = u2 b v2`.
#[allow(clippy::type_complexity)]
fn word_overlaps(a: &[u16], b: &[u16]) -> Vec<(Vec<u16>, (Vec<u16>, Vec<u16>), (Vec<u16>, Vec<u16>))> {
    let mut out = Vec::new();
    for p in occurrences(b, a) {
        out.push((a.to_vec(), (vec![], vec![]), (a[..p].to_vec(), a[p + b.len()..].to_vec())));
    }
    for p in occurrences(a, b) {
        out.push((b.to_vec(), (b[..p].to_vec(), b[p + a.len()..].to_vec()), (vec![], vec![])));
    }
    for k in 1..a.len().min(b.len()) {
        if a[a.len() - k..] == b[..k] {
            let mut t = a.to_vec();
            t.extend_from_slice(&b[k..]);
            out.push((t, (vec![], b[k..].to_vec()), (a[..a.len() - k].to_vec(), vec![])));
        }
        if b[b.len() - k..] == a[..k] {
            let mut t = b.to_vec();
            t.extend_from_slice(&a[k..]);
            out.push((t, (b[..b.len() - k].to_vec(), vec![]), (vec![], a[k..].to_vec())));
        }
    }
    out
}

impl TermSpace {
    /// Builds a term space and runs the construction checks, failing on the
    /// first violation.
    pub fn new(universe: Universe, order: TermOrder, reductive: Reductive) -> Result<Self> {
        let (s, report) = Self::new_unchecked(universe, order, reductive)?;
        match report.first_error() {
            Some(e) => Err(e),
            None => Ok(s),
        }
    }

    /// Builds a term space and reports the checks without enforcing them.
    /// Only an ordering that does not fit the universe, or rules that do not
    /// decrease, are rejected.
    pub fn new_unchecked(universe: Universe, order: TermOrder, reductive: Reductive) -> Result<(Self, ConstructionReport)> {
        order.validate(&universe)?;
        let s = TermSpace { universe, order, reductive, bound: 2 };
        let mut report = ConstructionReport::default();
        s.check_rules(&mut report);
        if let Some(m) = report.decreasing.first() {
            return Err(Error::NotDecreasing(m.clone()));
        }
        s.check_reductive(&mut report);
        s.check_stability(&mut report);
        Ok((s, report))
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        if let Reductive::Multiple { bound: b } = &mut self.reductive {
            *b = (*b).max(bound);
        }
        self
    }

    fn ctx(&self) -> Ctx<'_> {
        Ctx { u: &self.universe, o: &self.order, r: &self.reductive, bound: self.bound }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn mul(&self, a: &Term, b: &Term) -> Product {
        self.universe.mul(a, b)
    }

    pub fn mul3(&self, u: Option<&Term>, s: &Term, v: Option<&Term>) -> Product {
        self.universe.mul3(u, s, v)
    }

    pub fn head(&self, p: &Product) -> Option<Term> {
        self.ctx().head(p)
    }

    pub fn head3(&self, u: Option<&Term>, s: &Term, v: Option<&Term>) -> Option<Term> {
        self.ctx().head3(u, s, v)
    }

    pub fn leq(&self, s: &Term, t: &Term) -> bool {
        self.ctx().leq(s, t)
    }

    pub fn right_candidates(&self, s: &Term, t: &Term) -> Vec<Option<Term>> {
        self.ctx().right_candidates(s, t)
    }

    pub fn two_sided_candidates(&self, s: &Term, t: &Term) -> Vec<(Option<Term>, Option<Term>)> {
        self.ctx().two_sided_candidates(s, t)
    }

    /// Minimal right common multiples, and whether the list is known to be
    /// complete.
    pub fn right_commons(&self, s1: &Term, s2: &Term) -> (Vec<Common>, bool) {
        self.ctx().right_commons(s1, s2)
    }

    pub fn two_sided_commons(&self, s1: &Term, s2: &Term) -> (Vec<TwoCommon>, bool) {
        self.ctx().two_sided_commons(s1, s2)
    }

    /// Non-unit terms of size at most `n`.
    pub fn multipliers(&self, n: usize) -> Vec<Term> {
        self.universe.enumerate(n, ENUM_CAP).into_iter().filter(|t| !self.universe.is_unit(t)).collect()
    }

    pub fn fmt_term(&self, t: &Term) -> String {
        self.universe.fmt_term(t)
    }

    /// Multiplication collapses nothing and the ordering is compatible with
    /// it, so `HT(p * w) = HT(p) * w` always holds.
    pub fn is_stable(&self) -> bool {
        self.universe.is_free() && self.universe.is_monomial()
    }

    pub fn describe(&self) -> String {
        format!("{} / {}", self.order.describe(&self.universe), self.reductive.name())
    }

    fn check_rules(&self, report: &mut ConstructionReport) {
        let sys = match &self.universe {
            Universe::Words(w) => w.clone(),
            Universe::Tagged(ts) => {
                if let Universe::Words(w) = &ts.base {
                    w.clone()
                } else {
                    if let Universe::Table(t) = &ts.base {
                        for (x, y, z) in t.associativity_failures().into_iter().take(3) {
                            report.associativity.push(format!("({x},{y},{z})"));
                        }
                    }
                    return;
                }
            }
            Universe::Table(t) => {
                for (x, y, z) in t.associativity_failures().into_iter().take(3) {
                    report
                        .associativity
                        .push(format!("({}*{})*{} != {}*({}*{})", t.names[x as usize], t.names[y as usize], t.names[z as usize], t.names[x as usize], t.names[y as usize], t.names[z as usize]));
                }
                return;
            }
            Universe::Commutative { .. } => return,
        };
        let base_order = match &self.order {
            TermOrder::Syllable { base, .. } => (**base).clone(),
            o => o.clone(),
        };
        let show = |w: &[u16]| -> String {
            if w.is_empty() {
                ".".into()
            } else {
                w.iter().map(|&a| sys.letters[a as usize].as_str()).collect()
            }
        };
        for r in &sys.rules {
            let lhs = Term::Word(r.lhs.clone());
            if sys.kind == WordKind::Solvable {
                let mut sorted = r.lhs.clone();
                sorted.sort_unstable();
                let st = Term::Word(sorted.clone());
                for (_, w) in &r.rhs {
                    let mut ws = w.clone();
                    ws.sort_unstable();
                    if ws != sorted && base_order.cmp(&Term::Word(ws), &st) != Ordering::Less {
                        report.decreasing.push(format!("{} -> {}: lower-order part not below {}", show(&r.lhs), show(w), show(&sorted)));
                    }
                }
                continue;
            }
            for (_, w) in &r.rhs {
                if base_order.cmp(&Term::Word(w.clone()), &lhs) != Ordering::Less {
                    report.decreasing.push(format!("{} -> {}", show(&r.lhs), show(w)));
                }
            }
        }
        if !report.decreasing.is_empty() {
            return;
        }
        match sys.confluence_failures(DEFAULT_STEP_LIMIT) {
            Ok(fails) => {
                for f in fails.into_iter().take(3) {
                    report.confluence.push(format!("overlap {}", show(&f.overlap)));
                }
            }
            Err(e) => report.confluence.push(e.to_string()),
        }
    }

    fn probe_terms(&self) -> Vec<Term> {
        let n = match &self.universe {
            Universe::Table(_) => 1,
            Universe::Commutative { vars } if vars.len() > 4 => 1,
            Universe::Words(w) if w.letters.len() > 4 => 2,
            _ => 2,
        };
        self.universe.enumerate(n, 80)
    }

    fn check_reductive(&self, report: &mut ConstructionReport) {
        let ts = self.probe_terms();
        for s in &ts {
            for t in &ts {
                if self.leq(s, t) && self.cmp(s, t) == Ordering::Greater {
                    report.reductive.push(format!("{} <= {} but {} is larger", self.fmt_term(s), self.fmt_term(t), self.fmt_term(s)));
                    return;
                }
            }
        }
    }

    fn check_stability(&self, report: &mut ConstructionReport) {
        let ts = self.probe_terms();
        let ms: Vec<Term> = ts.iter().filter(|t| !self.universe.is_unit(t)).cloned().collect();
        let mut checked = 0usize;
        let two_sided = matches!(self.reductive, Reductive::Subword);
        'outer: for t1 in &ts {
            for t in &ts {
                if self.cmp(t1, t) != Ordering::Greater {
                    continue;
                }
                for w in &ms {
                    let pairs: Vec<(Option<&Term>, Option<&Term>)> = if two_sided {
                        let mut v = vec![(None, Some(w)), (Some(w), None)];
                        if checked < PROBE_CAP / 2 {
                            v.extend(ms.iter().take(6).map(|u| (Some(u), Some(w))));
                        }
                        v
                    } else {
                        vec![(None, Some(w))]
                    };
                    for (u, v) in pairs {
                        checked += 1;
                        if checked > PROBE_CAP {
                            break 'outer;
                        }
                        let Some(t2) = self.head3(u, t1, v) else { continue };
                        if !self.leq(t1, &t2) {
                            continue;
                        }
                        if let Some(h) = self.head3(u, t, v) {
                            if self.cmp(&t2, &h) != Ordering::Greater {
                                let show = |x: Option<&Term>| x.map_or(String::new(), |x| self.fmt_term(x));
                                report.stability.push(format!(
                                    "t1 = {}, t = {}, multipliers ({}, {}): HT of the t1 multiple is {} but the t multiple has head {}",
                                    self.fmt_term(t1),
                                    self.fmt_term(t),
                                    show(u),
                                    show(v),
                                    self.fmt_term(&t2),
                                    self.fmt_term(&h)
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        report.checked_stability = checked.min(PROBE_CAP);
    }
}
