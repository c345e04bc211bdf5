//! Completion of generating sets into (weak) Groebner bases.
//!
//! A single FIFO queue holds pairs and saturation requests. Every basis
//! element remembers how it was derived, so representations over the
//! input generators can be rebuilt on demand.

use std::cell::OnceCell;
use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::coefficients::Domain;
use crate::critical::{s_polynomials, saturator};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::{normal_form, ReductionSpec, Side, Step, DEFAULT_STEP_BUDGET};
use crate::terms::Term;

pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionOptions {
    pub side: Side,
    /// Work items (pairs and saturation requests) to process.
    pub budget: usize,
    /// Reduction steps per normal form.
    pub step_budget: usize,
    /// Multiplier size for saturators.
    pub bound: usize,
    pub interreduce: bool,
}

impl CompletionOptions {
    pub fn new(side: Side) -> Self {
        CompletionOptions { side, budget: DEFAULT_BUDGET, step_budget: DEFAULT_STEP_BUDGET, bound: 4, interreduce: true }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = bound;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Complete,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<E> {
    pub verdict: Verdict,
    pub spolys_checked: usize,
    pub saturators_checked: usize,
    /// A nonzero normal form found on failure.
    pub witness: Option<Poly<E>>,
    pub reason: Option<String>,
}

/// One summand `coeff * (left * g[index] * right)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTerm<E> {
    pub coeff: E,
    pub left: Option<Term>,
    pub index: usize,
    pub right: Option<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep<E> {
    pub terms: Vec<RepTerm<E>>,
}

impl<E> Rep<E> {
    pub fn empty() -> Self {
        Rep { terms: vec![] }
    }
}

pub fn replay_rep<D: Domain>(ring: &FunctionRing<D>, rep: &Rep<D::Elem>, gens: &[Poly<D::Elem>]) -> Poly<D::Elem> {
    rep.terms.iter().fold(Poly::zero(), |acc, t| {
        ring.add(&acc, &ring.multiple(&t.coeff, t.left.as_ref(), &gens[t.index], t.right.as_ref()))
    })
}

pub fn fmt_rep<D: Domain>(ring: &FunctionRing<D>, rep: &Rep<D::Elem>, names: &[String]) -> String {
    if rep.terms.is_empty() {
        return "0".into();
    }
    let d = &ring.domain;
    let mut s = String::new();
    for (i, t) in rep.terms.iter().enumerate() {
        let neg = d.is_negative(&t.coeff);
        let a = if neg { d.neg(&t.coeff) } else { t.coeff.clone() };
        s.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if a != d.one() {
            s.push_str(&d.render(&a));
            s.push('*');
        }
        if let Some(l) = &t.left {
            s.push_str(&ring.space.fmt_term(l));
            s.push_str(" o ");
        }
        s.push_str(&names[t.index]);
        if let Some(r) = &t.right {
            s.push_str(" o ");
            s.push_str(&ring.space.fmt_term(r));
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Source {
    Input(usize),
    Node(usize),
}

#[derive(Debug, Clone)]
struct Derivation<E> {
    seed: Vec<(E, Option<Term>, Source, Option<Term>)>,
    /// Steps over node ids.
    steps: Vec<Step<E>>,
    scale: E,
}

#[derive(Debug, Clone)]
struct Node<E> {
    poly: Poly<E>,
    derivation: Derivation<E>,
    rep: OnceCell<Rep<E>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Work {
    Pair(usize, usize),
    Saturate(usize),
}

/// Result of a completion run.
#[derive(Debug, Clone)]
pub struct Completion<D: Domain> {
    pub ring: FunctionRing<D>,
    pub options: CompletionOptions,
    pub inputs: Vec<Poly<D::Elem>>,
    pub status: Status,
    pub certificate: Certificate<D::Elem>,
    /// One line per processed work item.
    pub log: Vec<String>,
    pub work_done: usize,
    nodes: Vec<Node<D::Elem>>,
    basis: Vec<usize>,
}

fn combine<D: Domain>(ring: &FunctionRing<D>, a: Option<&Term>, b: Option<&Term>) -> Vec<(D::Elem, Option<Term>)> {
    let one = ring.domain.one();
    match (a, b) {
        (None, None) => vec![(one, None)],
        (Some(t), None) | (None, Some(t)) => vec![(one, Some(t.clone()))],
        (Some(x), Some(y)) => {
            let u = ring.universe();
            ring.product_poly(ring.space.mul(x, y), &one)
                .into_iter().map(|(t, c)| (c, (!u.is_unit(&t)).then_some(t))).collect()
        }
    }
}

impl<D: Domain> Completion<D> {
    pub fn basis(&self) -> Vec<Poly<D::Elem>> {
        self.basis.iter().map(|&i| self.nodes[i].poly.clone()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.status == Status::Complete
    }

    /// Representation of the `k`-th basis element over the inputs.
    pub fn provenance(&self, k: usize) -> Rep<D::Elem> {
        self.node_rep(self.basis[k])
    }

    fn node_rep(&self, id: usize) -> Rep<D::Elem> {
        self.nodes[id].rep.get_or_init(|| self.build_rep(id)).clone()
    }

    fn build_rep(&self, id: usize) -> Rep<D::Elem> {
        let d = &self.ring.domain;
        let node = &self.nodes[id];
        let mut acc: BTreeMap<(Option<Term>, usize, Option<Term>), D::Elem> = BTreeMap::new();
        let mut push = |c: &D::Elem, l: Option<&Term>, sub: &Rep<D::Elem>, r: Option<&Term>| {
            for t in &sub.terms {
                for (cl, nl) in combine(&self.ring, l, t.left.as_ref()) {
                    for (cr, nr) in combine(&self.ring, t.right.as_ref(), r) {
                        let k = d.mul(&d.mul(c, &t.coeff), &d.mul(&cl, &cr));
                        let slot = acc.entry((nl.clone(), t.index, nr)).or_insert_with(|| d.zero());
                        *slot = d.add(slot, &k);
                    }
                }
            }
        };
        for (c, l, src, r) in &node.derivation.seed {
            let sub = match src {
                Source::Input(j) => Rep { terms: vec![RepTerm { coeff: d.one(), left: None, index: *j, right: None }] },
                Source::Node(k) => self.node_rep(*k),
            };
            push(c, l.as_ref(), &sub, r.as_ref());
        }
        for st in &node.derivation.steps {
            let sub = self.node_rep(st.reducer);
            push(&d.neg(&st.coeff), st.left.as_ref(), &sub, st.right.as_ref());
        }
        let s = &node.derivation.scale;
        Rep {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !d.is_zero(c))
                .map(|((left, index, right), c)| RepTerm { coeff: d.mul(&c, s), left, index, right })
                .filter(|t| !d.is_zero(&t.coeff))
                .collect(),
        }
    }

    /// Reduces `p` by the basis; if it vanishes, returns a representation of
    /// `p` over the inputs.
    pub fn represent(&self, p: &Poly<D::Elem>) -> Option<Rep<D::Elem>> {
        let g = self.basis();
        let spec = ReductionSpec { side: self.options.side, ..ReductionSpec::right() };
        let nf = normal_form(&self.ring, p, &g, spec, self.options.step_budget);
        if !nf.poly.is_zero() {
            return None;
        }
        let d = &self.ring.domain;
        let mut acc: BTreeMap<(Option<Term>, usize, Option<Term>), D::Elem> = BTreeMap::new();
        for st in &nf.steps {
            let sub = self.provenance(st.reducer);
            for t in &sub.terms {
                for (cl, nl) in combine(&self.ring, st.left.as_ref(), t.left.as_ref()) {
                    for (cr, nr) in combine(&self.ring, t.right.as_ref(), st.right.as_ref()) {
                        let k = d.mul(&d.mul(&st.coeff, &t.coeff), &d.mul(&cl, &cr));
                        let slot = acc.entry((nl.clone(), t.index, nr)).or_insert_with(|| d.zero());
                        *slot = d.add(slot, &k);
                    }
                }
            }
        }
        Some(Rep {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !d.is_zero(c))
                .map(|((left, index, right), coeff)| RepTerm { coeff, left, index, right })
                .collect(),
        })
    }

    pub fn normal_form(&self, p: &Poly<D::Elem>) -> Poly<D::Elem> {
        let spec = ReductionSpec { side: self.options.side, ..ReductionSpec::right() };
        normal_form(&self.ring, p, &self.basis(), spec, self.options.step_budget).poly
    }
}

struct Engine<'a, D: Domain> {
    ring: &'a FunctionRing<D>,
    opts: CompletionOptions,
    nodes: Vec<Node<D::Elem>>,
    active: Vec<usize>,
    queue: VecDeque<Work>,
    log: Vec<String>,
    exhausted: bool,
}

impl<'a, D: Domain> Engine<'a, D> {
    fn spec(&self) -> ReductionSpec {
        ReductionSpec { side: self.opts.side, ..ReductionSpec::right() }
    }

    fn active_polys(&self) -> Vec<Poly<D::Elem>> {
        self.active.iter().map(|&i| self.nodes[i].poly.clone()).collect()
    }

    fn add_node(&mut self, poly: Poly<D::Elem>, derivation: Derivation<D::Elem>) -> usize {
        self.nodes.push(Node { poly, derivation, rep: OnceCell::new() });
        self.nodes.len() - 1
    }

    /// Adds a normalized input without reducing it first.
    fn admit(&mut self, h: Poly<D::Elem>, seed: Vec<(D::Elem, Option<Term>, Source, Option<Term>)>) {
        let (poly, scale) = self.ring.normalize(&h);
        if poly.is_zero() || self.active.iter().any(|&k| self.nodes[k].poly == poly) {
            return;
        }
        let id = self.add_node(poly, Derivation { seed, steps: vec![], scale });
        self.enqueue(id);
    }

    fn enqueue(&mut self, id: usize) {
        self.log.push(format!("  add #{id}: {}", self.ring.fmt(&self.nodes[id].poly)));
        self.active.push(id);
        self.queue.push_back(Work::Saturate(id));
        for &k in &self.active {
            self.queue.push_back(Work::Pair(k, id));
        }
    }

    /// Reduces `h` by the active set and adds the normalized remainder.
    fn consider(&mut self, h: Poly<D::Elem>, seed: Vec<(D::Elem, Option<Term>, Source, Option<Term>)>) -> Option<usize> {
        let g = self.active_polys();
        let nf = normal_form(self.ring, &h, &g, self.spec(), self.opts.step_budget);
        if nf.exhausted {
            self.exhausted = true;
        }
        if nf.poly.is_zero() {
            return None;
        }
        let (poly, scale) = self.ring.normalize(&nf.poly);
        let steps = nf.steps.into_iter().map(|st| Step { reducer: self.active[st.reducer], ..st }).collect();
        let id = self.add_node(poly, Derivation { seed, steps, scale });
        self.enqueue(id);
        Some(id)
    }

    fn process(&mut self, w: Work) {
        let one = self.ring.domain.one();
        match w {
            Work::Saturate(i) => {
                let f = self.nodes[i].poly.clone();
                let sat = saturator(self.ring, &f, self.opts.side, self.opts.bound);
                self.log.push(format!("sat #{i}: {} elements{}", sat.elements.len(), if sat.complete { "" } else { " (bounded)" }));
                for e in sat.elements.into_iter().skip(1) {
                    self.consider(e.poly, vec![(one.clone(), e.left, Source::Node(i), e.right)]);
                }
            }
            Work::Pair(i, j) => {
                let (p, q) = (self.nodes[i].poly.clone(), self.nodes[j].poly.clone());
                let sp = s_polynomials(self.ring, &p, &q, self.opts.side);
                self.log.push(format!(
                    "pair #{i} #{j}: {} s-polynomials{}",
                    sp.items.len(),
                    if sp.complete { "" } else { " (bounded)" }
                ));
                for s in sp.items {
                    if s.value.is_zero() {
                        continue;
                    }
                    let seed = vec![(s.a1, s.m1.0, Source::Node(i), s.m1.1), (s.a2, s.m2.0, Source::Node(j), s.m2.1)];
                    self.consider(s.value, seed);
                }
            }
        }
    }

    /// Full interreduction of the active list.
    fn interreduce(&mut self) {
        let one = self.ring.domain.one();
        let mut cur = self.active.clone();
        loop {
            let mut changed = false;
            let mut idx = 0;
            while idx < cur.len() {
                let others: Vec<usize> = cur.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, &v)| v).collect();
                let polys: Vec<Poly<D::Elem>> = others.iter().map(|&i| self.nodes[i].poly.clone()).collect();
                let id = cur[idx];
                let nf = normal_form(self.ring, &self.nodes[id].poly, &polys, self.spec(), self.opts.step_budget);
                if nf.poly.is_zero() {
                    self.log.push(format!("drop #{id}"));
                    cur.remove(idx);
                    changed = true;
                    continue;
                }
                if !nf.steps.is_empty() {
                    let (poly, scale) = self.ring.normalize(&nf.poly);
                    let steps = nf.steps.into_iter().map(|st| Step { reducer: others[st.reducer], ..st }).collect();
                    let nid = self.add_node(poly, Derivation { seed: vec![(one.clone(), None, Source::Node(id), None)], steps, scale });
                    self.log.push(format!("replace #{id} by #{nid}: {}", self.ring.fmt(&self.nodes[nid].poly)));
                    cur[idx] = nid;
                    changed = true;
                }
                idx += 1;
            }
            if !changed {
                break;
            }
        }
        self.active = cur;
    }

    fn sort(&self, ids: &mut [usize]) {
        ids.sort_by(|&a, &b| self.ring.compare(&self.nodes[b].poly, &self.nodes[a].poly).then(a.cmp(&b)));
    }
}

/// Completes `inputs` with a fair queue of pairs and saturation requests.
pub fn complete<D: Domain>(ring: &FunctionRing<D>, inputs: &[Poly<D::Elem>], opts: CompletionOptions) -> Completion<D> {
    let mut e = Engine {
        ring,
        opts,
        nodes: vec![],
        active: vec![],
        queue: VecDeque::new(),
        log: vec![],
        exhausted: false,
    };
    let one = ring.domain.one();
    for (j, f) in inputs.iter().enumerate() {
        e.admit(f.clone(), vec![(one.clone(), None, Source::Input(j), None)]);
    }
    let mut work = 0;
    while let Some(w) = e.queue.pop_front() {
        if work >= opts.budget || e.exhausted {
            e.exhausted = true;
            break;
        }
        e.process(w);
        work += 1;
    }
    let status = if e.exhausted { Status::BudgetExhausted } else { Status::Complete };
    let mut certificate = is_groebner(ring, &e.active_polys(), opts);
    if status == Status::Complete && opts.interreduce {
        let before = e.active.clone();
        e.interreduce();
        let mut ids = e.active.clone();
        e.sort(&mut ids);
        e.active = ids;
        let cert = is_groebner(ring, &e.active_polys(), opts);
        if cert.verdict == Verdict::Pass || certificate.verdict != Verdict::Pass {
            certificate = cert;
        } else {
            e.log.push("interreduced set fails certification; keeping unreduced basis".into());
            e.active = before;
        }
    }
    if status == Status::BudgetExhausted && certificate.verdict == Verdict::Pass {
        certificate.verdict = Verdict::Indeterminate;
        certificate.reason = Some("budget exhausted".into());
    }
    Completion {
        ring: ring.clone(),
        options: opts,
        inputs: inputs.to_vec(),
        status,
        certificate,
        log: e.log,
        work_done: work,
        basis: e.active,
        nodes: e.nodes,
    }
}

/// Classical Buchberger completion for commutative polynomial rings over a
/// field: the result is interreduced and monic.
pub fn buchberger_commutative<D: Domain>(ring: &FunctionRing<D>, inputs: &[Poly<D::Elem>]) -> crate::error::Result<Completion<D>> {
    if !(ring.universe().is_commutative() && ring.space.is_stable()) {
        return Err(crate::error::Error::NotCommutative("buchberger"));
    }
    if ring.arith() != crate::coefficients::Arith::Field {
        return Err(crate::error::Error::UnsupportedDomain(ring.domain.descriptor()));
    }
    Ok(complete(ring, inputs, CompletionOptions::new(Side::Right).with_budget(usize::MAX)))
}

/// Full interreduction of a basis; elements reducing to zero are removed
/// and the rest are normalized.
pub fn interreduce<D: Domain>(ring: &FunctionRing<D>, g: &[Poly<D::Elem>], side: Side) -> Vec<Poly<D::Elem>> {
    let spec = ReductionSpec { side, ..ReductionSpec::right() };
    let mut cur: Vec<Poly<D::Elem>> = g.iter().filter(|p| !p.is_zero()).map(|p| ring.normalize(p).0).collect();
    loop {
        let mut changed = false;
        let mut idx = 0;
        while idx < cur.len() {
            let others: Vec<Poly<D::Elem>> = cur.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, p)| p.clone()).collect();
            let nf = normal_form(ring, &cur[idx], &others, spec, DEFAULT_STEP_BUDGET);
            if nf.poly.is_zero() {
                cur.remove(idx);
                changed = true;
                continue;
            }
            if !nf.steps.is_empty() {
                cur[idx] = ring.normalize(&nf.poly).0;
                changed = true;
            }
            idx += 1;
        }
        if !changed {
            break;
        }
    }
    cur.sort_by(|a, b| ring.compare(b, a));
    cur
}

/// Checks that every s-polynomial and saturator element reduces to zero.
/// Incomplete enumerations give an indeterminate verdict.
pub fn is_groebner<D: Domain>(ring: &FunctionRing<D>, g: &[Poly<D::Elem>], opts: CompletionOptions) -> Certificate<D::Elem> {
    let spec = ReductionSpec { side: opts.side, ..ReductionSpec::right() };
    let mut cert = Certificate { verdict: Verdict::Pass, spolys_checked: 0, saturators_checked: 0, witness: None, reason: None };
    let mut incomplete: Option<String> = None;
    let mut work = 0usize;
    let fail = |mut cert: Certificate<D::Elem>, w: Poly<D::Elem>, why: String| {
        cert.verdict = Verdict::Fail;
        cert.witness = Some(w);
        cert.reason = Some(why);
        cert
    };
    for i in 0..g.len() {
        let sat = saturator(ring, &g[i], opts.side, opts.bound);
        if !sat.complete {
            incomplete.get_or_insert_with(|| format!("saturator of element {i} is bounded"));
        }
        for e in sat.elements.iter().skip(1) {
            cert.saturators_checked += 1;
            let nf = normal_form(ring, &e.poly, g, spec, opts.step_budget);
            if nf.exhausted {
                incomplete.get_or_insert_with(|| "step budget exhausted".into());
            } else if !nf.poly.is_zero() {
                return fail(cert, nf.poly, format!("saturator element of element {i} does not reduce to zero"));
            }
        }
        for j in i..g.len() {
            work += 1;
            if work > opts.budget {
                cert.verdict = Verdict::Indeterminate;
                cert.reason = Some("budget exhausted".into());
                return cert;
            }
            let sp = s_polynomials(ring, &g[i], &g[j], opts.side);
            if !sp.complete {
                incomplete.get_or_insert_with(|| format!("common multiples of elements {i}, {j} are bounded"));
            }
            for s in sp.items {
                cert.spolys_checked += 1;
                let nf = normal_form(ring, &s.value, g, spec, opts.step_budget);
                if nf.exhausted {
                    incomplete.get_or_insert_with(|| "step budget exhausted".into());
                } else if !nf.poly.is_zero() {
                    return fail(cert, nf.poly, format!("s-polynomial of elements {i}, {j} does not reduce to zero"));
                }
            }
        }
    }
    if let Some(r) = incomplete {
        cert.verdict = Verdict::Indeterminate;
        cert.reason = Some(r);
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Integers, PrimeField, Rationals};
    use crate::terms::{Reductive, Rule, TermOrder, TermSpace, Universe, WordKind, WordSystem};
    use proptest::prelude::*;

    fn qx() -> FunctionRing<Rationals> {
        let s = TermSpace::new(Universe::commutative(["X1", "X2", "X3"]), TermOrder::deglex(&[0, 1, 2]), Reductive::Divides)
            .unwrap();
        FunctionRing::new(s, Rationals).unwrap()
    }

    fn strs<D: Domain>(r: &FunctionRing<D>, v: &[Poly<D::Elem>]) -> Vec<String> {
        v.iter().map(|p| r.fmt(p)).collect()
    }

    #[test]
    fn intro_example() {
        let r = qx();
        let f = r.parse_list(&["X1^2 + X2", "X1^2 + X3"]).unwrap();
        let c = buchberger_commutative(&r, &f).unwrap();
        assert_eq!(strs(&r, &c.basis()), ["X1^2 + X3", "X2 - X3"]);
        assert_eq!(c.status, Status::Complete);
        assert_eq!(c.certificate.verdict, Verdict::Pass);
        for k in 0..2 {
            assert_eq!(replay_rep(&r, &c.provenance(k), &f), c.basis()[k]);
        }
        let rep = c.represent(&r.parse("X2^2 - X2X3").unwrap()).unwrap();
        assert_eq!(replay_rep(&r, &rep, &f), r.parse("X2^2 - X2X3").unwrap());
        assert!(c.represent(&r.parse("X3^3 + X1 + X3").unwrap()).is_none());
    }

    #[test]
    fn empty_and_monomial() {
        let r = qx();
        assert!(buchberger_commutative(&r, &[]).unwrap().basis().is_empty());
        let c = complete(&r, &r.parse_list(&["X1X2"]).unwrap(), CompletionOptions::new(Side::Right));
        assert_eq!(strs(&r, &c.basis()), ["X1*X2"]);
    }

    #[test]
    fn integer_gcd() {
        let s = TermSpace::new(Universe::commutative(["X"]), TermOrder::deglex(&[0]), Reductive::Divides).unwrap();
        let r = FunctionRing::new(s, Integers::div_rem()).unwrap();
        let f = r.parse_list(&["2X", "3X"]).unwrap();
        let c = complete(&r, &f, CompletionOptions::new(Side::Right));
        assert_eq!(strs(&r, &c.basis()), ["X"]);
        assert_eq!(replay_rep(&r, &c.provenance(0), &f), c.basis()[0]);
        assert_eq!(strs(&r, &interreduce(&r, &r.parse_list(&["2X", "4X"]).unwrap(), Side::Right)), ["2*X"]);
    }

    #[test]
    fn integer_certificate_admits_irreducible_member() {
        let s = TermSpace::new(Universe::commutative(["X", "Y"]), TermOrder::deglex(&[0, 1]), Reductive::Divides).unwrap();
        let r = FunctionRing::new(s, Integers::div_rem()).unwrap();
        let g = r.parse_list(&["3X", "2XY", "3Y^2"]).unwrap();
        assert_eq!(is_groebner(&r, &g, CompletionOptions::new(Side::Right)).verdict, Verdict::Pass);
        let xy = r.sub(&r.mul(&g[0], &r.parse("Y").unwrap()), &g[1]);
        assert_eq!(r.fmt(&xy), "X*Y");
        let nf = normal_form(&r, &xy, &g, ReductionSpec::right(), DEFAULT_STEP_BUDGET);
        assert_eq!(nf.poly, xy);
    }

    #[test]
    fn interreduction() {
        let r = qx();
        let g = r.parse_list(&["X1 + X2", "X1 + X3", "X2 - X3"]).unwrap();
        assert_eq!(strs(&r, &interreduce(&r, &g, Side::Right)), ["X1 + X3", "X2 - X3"]);
    }

    #[test]
    fn certificate_failure() {
        let r = qx();
        let f = r.parse_list(&["X1 + X2", "X1 + X3"]).unwrap();
        let c = is_groebner(&r, &f, CompletionOptions::new(Side::Right));
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(r.fmt(&c.witness.unwrap()), "X2 - X3");
    }

    #[test]
    fn free_group() {
        let sys = WordSystem::new(
            vec!["a".into(), "b".into()],
            vec![Rule::monomial(vec![0, 1], vec![]), Rule::monomial(vec![1, 0], vec![])],
            WordKind::Monoid,
        );
        let s = TermSpace::new(Universe::words(sys), TermOrder::lenlex(&[0, 1]), Reductive::Prefix).unwrap();
        let r = FunctionRing::new(s, Rationals).unwrap();
        let f = r.parse_list(&["a + 1"]).unwrap();
        let c = complete(&r, &f, CompletionOptions::new(Side::Right));
        assert_eq!(strs(&r, &c.basis()), ["a + 1", "b + 1"]);
        assert_eq!(c.certificate.verdict, Verdict::Pass);
        let rep = c.provenance(1);
        assert_eq!(replay_rep(&r, &rep, &f), r.parse("b + 1").unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn random_ideals_close(gens in proptest::collection::vec(proptest::collection::vec((0i64..5, 0u32..3, 0u32..3), 1..4), 1..3)) {
            let s = TermSpace::new(Universe::commutative(["X", "Y"]), TermOrder::deglex(&[0, 1]), Reductive::Divides).unwrap();
            let r = FunctionRing::new(s, PrimeField::new(5).unwrap()).unwrap();
            let d = &r.domain;
            let f: Vec<_> = gens.iter().map(|g| r.from_terms(g.iter().map(|&(c, a, b)| (Term::Exp(vec![a, b]), d.from_i64(c))).collect())).collect();
            let c = complete(&r, &f, CompletionOptions::new(Side::Right));
            prop_assert_eq!(c.certificate.verdict, Verdict::Pass);
            for p in &f {
                prop_assert!(c.normal_form(p).is_zero());
            }
            for k in 0..c.basis().len() {
                prop_assert_eq!(replay_rep(&r, &c.provenance(k), &f), c.basis()[k].clone());
            }
        }
    }
}
