//! Arithmetic modulo an ideal through normal forms.

use super::{Answer, Ideal};
use crate::coefficients::Domain;
use crate::polys::Poly;
use crate::reduction::{reduce_step, Position};
use crate::terms::Term;

pub struct Quotient<'a, D: Domain> {
    pub ideal: &'a Ideal<D>,
}

/// `[t_i] * [t_j]` reduced, over the residue terms found up to a size bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientTable<E> {
    pub terms: Vec<Term>,
    pub entries: Vec<Vec<Poly<E>>>,
    /// No residue term reached the size bound.
    pub complete: bool,
}

impl<'a, D: Domain> Quotient<'a, D> {
    pub fn new(ideal: &'a Ideal<D>) -> Self {
        Quotient { ideal }
    }

    pub fn representative(&self, f: &Poly<D::Elem>) -> Poly<D::Elem> {
        self.ideal.normal_form(f)
    }

    pub fn congruent(&self, f: &Poly<D::Elem>, g: &Poly<D::Elem>) -> Answer {
        self.ideal.member(&self.ideal.ring.sub(f, g)).answer
    }

    pub fn add(&self, f: &Poly<D::Elem>, g: &Poly<D::Elem>) -> Poly<D::Elem> {
        self.representative(&self.ideal.ring.add(f, g))
    }

    pub fn mul(&self, f: &Poly<D::Elem>, g: &Poly<D::Elem>) -> Poly<D::Elem> {
        self.representative(&self.ideal.ring.mul(f, g))
    }

    fn irreducible(&self, t: &Term, basis: &[Poly<D::Elem>]) -> bool {
        let ring = &self.ideal.ring;
        let spec = self.ideal.spec().with_position(Position::HeadOnly);
        reduce_step(ring, &ring.term(t.clone()), basis, spec).is_none()
    }

    /// Terms of size at most `bound` that are not reducible by the basis.
    pub fn residue_terms(&self, bound: usize) -> (Vec<Term>, bool) {
        let ring = &self.ideal.ring;
        let u = ring.universe();
        let basis = self.ideal.basis();
        let mut terms: Vec<Term> = u.enumerate(bound, 100_000).into_iter().filter(|t| self.irreducible(t, &basis)).collect();
        terms.sort_by(|a, b| ring.cmp_terms(a, b));
        let complete = terms.iter().all(|t| u.size(t) < bound);
        (terms, complete)
    }

    pub fn table(&self, bound: usize) -> QuotientTable<D::Elem> {
        let ring = &self.ideal.ring;
        let (terms, complete) = self.residue_terms(bound);
        let entries = terms
            .iter()
            .map(|a| terms.iter().map(|b| self.mul(&ring.term(a.clone()), &ring.term(b.clone()))).collect())
            .collect();
        QuotientTable { terms, entries, complete }
    }
}
