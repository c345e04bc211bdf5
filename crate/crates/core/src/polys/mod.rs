//! Polynomials over a function ring: finite sums of terms with
//! coefficients from a reduction ring, kept sorted by the term ordering.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;

use crate::coefficients::{cmp_z, Arith, Domain};
use crate::error::{Error, Result};
use crate::terms::{Product, Term, TermSpace, Universe};

/// Terms in strictly descending order with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Term, E)>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Term, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn head_term(&self) -> Option<&Term> {
        self.terms.first().map(|(t, _)| t)
    }

    pub fn head_coeff(&self) -> Option<&E> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff_of(&self, t: &Term) -> Option<&E> {
        self.terms.iter().find(|(s, _)| s == t).map(|(_, c)| c)
    }
}

impl<E: Clone> Poly<E> {
    /// Everything but the head monomial.
    pub fn reductum(&self) -> Poly<E> {
        Poly { terms: self.terms.iter().skip(1).cloned().collect() }
    }
}

/// A function ring: term space plus coefficient domain.
#[derive(Debug, Clone)]
pub struct FunctionRing<D: Domain> {
    pub space: Arc<TermSpace>,
    pub domain: D,
}

impl<D: Domain> FunctionRing<D> {
    /// Accepts field and integer coefficient domains whose image contains
    /// every coefficient used by the universe's rules or tables.
    pub fn new(space: TermSpace, domain: D) -> Result<Self> {
        if domain.arith() == Arith::Other {
            return Err(Error::UnsupportedDomain(domain.descriptor()));
        }
        for q in universe_coefficients(&space.universe) {
            if domain.from_rational(&q).is_none() {
                return Err(Error::NotRepresentable(q.to_string(), domain.descriptor()));
            }
        }
        Ok(FunctionRing { space: Arc::new(space), domain })
    }

    pub fn universe(&self) -> &Universe {
        &self.space.universe
    }

    pub fn arith(&self) -> Arith {
        self.domain.arith()
    }

    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.space.cmp(a, b)
    }

    /// Sorts, merges equal terms and drops zero coefficients.
    pub fn from_terms(&self, mut v: Vec<(Term, D::Elem)>) -> Poly<D::Elem> {
        v.sort_by(|a, b| self.space.cmp(&b.0, &a.0));
        let mut out: Vec<(Term, D::Elem)> = Vec::with_capacity(v.len());
        for (t, c) in v {
            match out.last_mut() {
                Some((s, d)) if *s == t => *d = self.domain.add(d, &c),
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !self.domain.is_zero(c));
        Poly { terms: out }
    }

    pub fn monomial(&self, c: D::Elem, t: Term) -> Poly<D::Elem> {
        if self.domain.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(t, c)] }
        }
    }

    pub fn term(&self, t: Term) -> Poly<D::Elem> {
        self.monomial(self.domain.one(), t)
    }

    pub fn constant(&self, c: D::Elem) -> Result<Poly<D::Elem>> {
        let u = self.universe().unit().ok_or(Error::NoUnit)?;
        Ok(self.monomial(c, u))
    }

    pub fn one(&self) -> Result<Poly<D::Elem>> {
        self.constant(self.domain.one())
    }

    pub fn generator(&self, i: usize) -> Poly<D::Elem> {
        self.term(self.universe().generator(i))
    }

    pub fn product_poly(&self, p: Product, c: &D::Elem) -> Vec<(Term, D::Elem)> {
        match p {
            Product::Term(t) => vec![(t, c.clone())],
            Product::Sum(v) => v
                .into_iter()
                .map(|(q, t)| {
                    let k = self.domain.from_rational(&q).expect("coefficient checked at construction");
                    (t, self.domain.mul(c, &k))
                })
                .collect(),
        }
    }

    pub fn add(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Poly<D::Elem> {
        let (x, y) = (&a.terms, &b.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match self.space.cmp(&x[i].0, &y[j].0) {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(y[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.domain.add(&x[i].1, &y[j].1);
                    if !self.domain.is_zero(&c) {
                        out.push((x[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, a: &Poly<D::Elem>) -> Poly<D::Elem> {
        Poly { terms: a.terms.iter().map(|(t, c)| (t.clone(), self.domain.neg(c))).collect() }
    }

    pub fn sub(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Poly<D::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<D::Elem>, c: &D::Elem) -> Poly<D::Elem> {
        if self.domain.is_zero(c) {
            return Poly::zero();
        }
        let terms: Vec<(Term, D::Elem)> = a.terms.iter().map(|(t, d)| (t.clone(), self.domain.mul(d, c))).collect();
        if terms.iter().any(|(_, d)| self.domain.is_zero(d)) {
            return self.from_terms(terms);
        }
        Poly { terms }
    }

    /// `u * p * v` with absent multipliers skipped.
    pub fn mul_terms(&self, u: Option<&Term>, p: &Poly<D::Elem>, v: Option<&Term>) -> Poly<D::Elem> {
        if u.is_none() && v.is_none() {
            return p.clone();
        }
        if self.space.is_stable() {
            let terms = p
                .terms
                .iter()
                .map(|(t, c)| match self.space.mul3(u, t, v) {
                    Product::Term(s) => (s, c.clone()),
                    Product::Sum(_) => unreachable!("monomial universe"),
                })
                .collect();
            return Poly { terms };
        }
        let mut acc = Vec::with_capacity(p.len());
        for (t, c) in &p.terms {
            acc.extend(self.product_poly(self.space.mul3(u, t, v), c));
        }
        self.from_terms(acc)
    }

    /// `c * u * p * v`.
    pub fn multiple(&self, c: &D::Elem, u: Option<&Term>, p: &Poly<D::Elem>, v: Option<&Term>) -> Poly<D::Elem> {
        self.scale(&self.mul_terms(u, p, v), c)
    }

    pub fn mul(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Poly<D::Elem> {
        let mut acc: BTreeMap<Term, D::Elem> = BTreeMap::new();
        for (s, c) in &a.terms {
            for (t, d) in &b.terms {
                let cd = self.domain.mul(c, d);
                for (r, e) in self.product_poly(self.space.mul(s, t), &cd) {
                    let slot = acc.entry(r).or_insert_with(|| self.domain.zero());
                    *slot = self.domain.add(slot, &e);
                }
            }
        }
        self.from_terms(acc.into_iter().collect())
    }

    pub fn pow(&self, a: &Poly<D::Elem>, n: u32) -> Result<Poly<D::Elem>> {
        let mut r = self.one()?;
        for _ in 0..n {
            r = self.mul(&r, a);
        }
        Ok(r)
    }

    /// Head coefficient made one (fields) or positive (integers).
    pub fn normalize(&self, p: &Poly<D::Elem>) -> (Poly<D::Elem>, D::Elem) {
        let Some(hc) = p.head_coeff() else { return (Poly::zero(), self.domain.one()) };
        match self.arith() {
            Arith::Field => {
                let inv = self.domain.inv(hc).expect("nonzero field element");
                (self.scale(p, &inv), inv)
            }
            Arith::Integer if self.domain.is_negative(hc) => {
                let m = self.domain.neg(&self.domain.one());
                (self.scale(p, &m), m)
            }
            _ => (p.clone(), self.domain.one()),
        }
    }

    /// The recursive polynomial ordering; over the integers head
    /// coefficients are compared by `0 < 1 < 2 < ... < -1 < -2 < ...`.
    pub fn compare(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Ordering {
        for (x, y) in a.terms.iter().zip(&b.terms) {
            let o = self.space.cmp(&x.0, &y.0);
            if o != Ordering::Equal {
                return o;
            }
            if self.arith() == Arith::Integer {
                let (p, q) = (self.domain.to_rational(&x.1), self.domain.to_rational(&y.1));
                if let (Some(p), Some(q)) = (p, q) {
                    let o = cmp_z(&p.to_integer(), &q.to_integer());
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
        a.terms.len().cmp(&b.terms.len())
    }

    pub fn fmt(&self, p: &Poly<D::Elem>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let one = self.domain.one();
        let mut s = String::new();
        for (i, (t, c)) in p.terms.iter().enumerate() {
            let neg = self.domain.is_negative(c);
            let a = if neg { self.domain.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = self.universe().is_unit(t);
            if unit {
                s.push_str(&self.domain.render(&a));
            } else if a == one {
                s.push_str(&self.space.fmt_term(t));
            } else {
                s.push_str(&self.domain.render(&a));
                s.push('*');
                s.push_str(&self.space.fmt_term(t));
            }
        }
        s
    }

    pub fn fmt_list(&self, ps: &[Poly<D::Elem>]) -> String {
        format!("{{{}}}", ps.iter().map(|p| self.fmt(p)).collect::<Vec<_>>().join(", "))
    }

    pub fn fmt_mult(&self, t: Option<&Term>) -> String {
        t.map_or_else(|| "1".into(), |t| self.space.fmt_term(t))
    }

    /// Parses a polynomial in the ring's own syntax.
    pub fn parse(&self, s: &str) -> Result<Poly<D::Elem>> {
        parse::parse_poly(self, s)
    }

    pub fn parse_list(&self, ps: &[&str]) -> Result<Vec<Poly<D::Elem>>> {
        ps.iter().map(|s| self.parse(s)).collect()
    }

    /// Rebuilds the ring over another term space (same domain).
    pub fn with_space(&self, space: TermSpace) -> Result<Self> {
        FunctionRing::new(space, self.domain.clone())
    }

    /// Rational image of a polynomial, if every coefficient has one.
    pub fn to_rational_terms(&self, p: &Poly<D::Elem>) -> Option<Vec<(BigRational, Term)>> {
        p.terms.iter().map(|(t, c)| Some((self.domain.to_rational(c)?, t.clone()))).collect()
    }

    /// Transfers a polynomial from a ring with a compatible universe.
    pub fn import<E>(&self, p: &Poly<E>, map: impl Fn(&Term) -> Term, coeff: impl Fn(&E) -> D::Elem) -> Poly<D::Elem> {
        self.from_terms(p.terms.iter().map(|(t, c)| (map(t), coeff(c))).collect())
    }
}

fn universe_coefficients(u: &Universe) -> Vec<BigRational> {
    match u {
        Universe::Commutative { .. } => vec![],
        Universe::Words(w) => w.rules.iter().flat_map(|r| r.rhs.iter().map(|(c, _)| c.clone())).collect(),
        Universe::Table(t) => t.prod.iter().flatten().flat_map(|s| s.iter().map(|(c, _)| c.clone())).collect(),
        Universe::Tagged(ts) => universe_coefficients(&ts.base),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Integers, Rationals};
    use crate::terms::{Reductive, TermOrder};
    use proptest::prelude::*;

    fn qx() -> FunctionRing<Rationals> {
        let s = TermSpace::new(Universe::commutative(["X1", "X2", "X3"]), TermOrder::deglex(&[0, 1, 2]), Reductive::Divides)
            .unwrap();
        FunctionRing::new(s, Rationals).unwrap()
    }

    #[test]
    fn printing() {
        let r = qx();
        let p = r.parse("X2 - X3").unwrap();
        assert_eq!(r.fmt(&p), "X2 - X3");
        let p = r.parse("-2*X1^2*X3 + 1/2 X2 - 3").unwrap();
        assert_eq!(r.fmt(&p), "-2*X1^2*X3 + 1/2*X2 - 3");
        assert_eq!(r.fmt(&Poly::zero()), "0");
    }

    #[test]
    fn rejects_other_domains() {
        let s = TermSpace::new(Universe::commutative(["X"]), TermOrder::deglex(&[0]), Reductive::Divides).unwrap();
        assert!(FunctionRing::new(s, Integers::divisor()).is_err());
    }

    #[test]
    fn integer_comparison_uses_z_order() {
        let s = TermSpace::new(Universe::commutative(["X"]), TermOrder::deglex(&[0]), Reductive::Divides).unwrap();
        let r = FunctionRing::new(s, Integers::div_rem()).unwrap();
        let a = r.parse("-X").unwrap();
        let b = r.parse("2X").unwrap();
        assert_eq!(r.compare(&a, &b), Ordering::Greater);
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
        proptest::collection::vec((-5i64..5, [0u32..3, 0u32..3, 0u32..3]), 0..5)
    }

    fn build(r: &FunctionRing<Rationals>, v: &[(i64, [u32; 3])]) -> Poly<BigRational> {
        r.from_terms(v.iter().map(|(c, e)| (Term::Exp(e.to_vec()), BigRational::from_integer((*c).into()))).collect())
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = qx();
            let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
            prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
            prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
            prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
            prop_assert!(r.sub(&a, &a).is_zero());
        }

        #[test]
        fn print_parse_identity(a in arb_poly()) {
            let r = qx();
            let p = build(&r, &a);
            prop_assert_eq!(r.parse(&r.fmt(&p)).unwrap(), p);
        }
    }
}
