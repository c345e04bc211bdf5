//! Decision procedures built on completed bases: membership, inclusion,
//! quotient arithmetic, elimination, inverses and linear equations.

mod inverse;
mod quotient;
mod solver;
mod tags;

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

pub use inverse::{inverse_element, Hand, InverseResult};
pub use quotient::{Quotient, QuotientTable};
pub use solver::{evaluate, solve_linear, SolutionSet};
pub use tags::{intersect, radical_member, ImageResult, PolyMap, TagRing};

use crate::coefficients::Domain;
use crate::completion::{complete, Completion, CompletionOptions, Rep, Status, Verdict};
use crate::error::{Error, Result};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::{normal_form, ReductionSpec, Side};

/// A decision with a third outcome for negative answers that would need a
/// certified complete basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    pub fn all(items: impl IntoIterator<Item = Answer>) -> Answer {
        let mut out = Answer::Yes;
        for a in items {
            match a {
                Answer::No => return Answer::No,
                Answer::Unknown => out = Answer::Unknown,
                Answer::Yes => {}
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership<E> {
    pub answer: Answer,
    pub normal_form: Poly<E>,
    /// Representation over the generators when the answer is yes.
    pub rep: Option<Rep<E>>,
}

/// An ideal given by generators, with its completion computed on demand.
#[derive(Debug, Clone)]
pub struct Ideal<D: Domain> {
    pub ring: FunctionRing<D>,
    pub gens: Vec<Poly<D::Elem>>,
    pub options: CompletionOptions,
    cache: OnceCell<Completion<D>>,
}

impl<D: Domain> Ideal<D> {
    pub fn new(ring: &FunctionRing<D>, gens: Vec<Poly<D::Elem>>, side: Side) -> Self {
        Self::with_options(ring, gens, CompletionOptions::new(side))
    }

    pub fn with_options(ring: &FunctionRing<D>, gens: Vec<Poly<D::Elem>>, options: CompletionOptions) -> Self {
        Ideal { ring: ring.clone(), gens, options, cache: OnceCell::new() }
    }

    pub fn side(&self) -> Side {
        self.options.side
    }

    pub fn completion(&self) -> &Completion<D> {
        self.cache.get_or_init(|| complete(&self.ring, &self.gens, self.options))
    }

    pub fn basis(&self) -> Vec<Poly<D::Elem>> {
        self.completion().basis()
    }

    /// The basis is certified, so negative answers are definite.
    pub fn certified(&self) -> bool {
        let c = self.completion();
        c.status == Status::Complete && c.certificate.verdict == Verdict::Pass
    }

    pub fn spec(&self) -> ReductionSpec {
        ReductionSpec { side: self.side(), ..ReductionSpec::right() }
    }

    pub fn normal_form(&self, f: &Poly<D::Elem>) -> Poly<D::Elem> {
        normal_form(&self.ring, f, &self.basis(), self.spec(), self.options.step_budget).poly
    }

    pub fn member(&self, f: &Poly<D::Elem>) -> Membership<D::Elem> {
        let nf = self.normal_form(f);
        if nf.is_zero() {
            let rep = self.completion().represent(f);
            return Membership { answer: Answer::Yes, normal_form: nf, rep };
        }
        let answer = if self.certified() { Answer::No } else { Answer::Unknown };
        Membership { answer, normal_form: nf, rep: None }
    }

    /// Representation of a member over the original generators.
    pub fn represent(&self, f: &Poly<D::Elem>) -> Result<Rep<D::Elem>> {
        self.completion()
            .represent(f)
            .ok_or_else(|| Error::Invalid(format!("{} is not a member", self.ring.fmt(f))))
    }

    /// `other` is contained in `self`.
    pub fn includes(&self, other: &Ideal<D>) -> Answer {
        Answer::all(other.gens.iter().map(|g| self.member(g).answer))
    }

    pub fn equals(&self, other: &Ideal<D>) -> Answer {
        Answer::all([self.includes(other), other.includes(self)])
    }

    pub fn trivial(&self) -> Result<Membership<D::Elem>> {
        Ok(self.member(&self.ring.one()?))
    }

    pub fn sum(&self, other: &Ideal<D>) -> Ideal<D> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::with_options(&self.ring, gens, self.options)
    }

    /// Pairwise products of generators; commutative rings only.
    pub fn product(&self, other: &Ideal<D>) -> Result<Ideal<D>> {
        if !self.ring.universe().is_commutative() {
            return Err(Error::NotCommutative("ideal product"));
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|f| other.gens.iter().map(move |g| (f, g)))
            .map(|(f, g)| self.ring.mul(f, g))
            .filter(|p| !p.is_zero())
            .collect();
        Ok(Ideal::with_options(&self.ring, gens, self.options))
    }

    pub fn quotient(&self) -> Quotient<'_, D> {
        Quotient::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Integers, Rationals};
    use crate::completion::replay_rep;
    use crate::terms::{Reductive, TermOrder, TermSpace, Universe};

    fn qx() -> FunctionRing<Rationals> {
        let s = TermSpace::new(Universe::commutative(["X1", "X2", "X3"]), TermOrder::deglex(&[0, 1, 2]), Reductive::Divides)
            .unwrap();
        FunctionRing::new(s, Rationals).unwrap()
    }

    #[test]
    fn membership_and_representation() {
        let r = qx();
        let f = r.parse_list(&["X1^2 + X2", "X1^2 + X3"]).unwrap();
        let i = Ideal::new(&r, f.clone(), Side::Right);
        assert_eq!(i.member(&r.parse("X2 - X3").unwrap()).answer, Answer::Yes);
        assert_eq!(i.member(&r.parse("X3^3 + X1 + X3").unwrap()).answer, Answer::No);
        assert_eq!(i.member(&Poly::zero()).answer, Answer::Yes);
        let p = r.parse("X2^2 - X2X3").unwrap();
        let rep = i.represent(&p).unwrap();
        assert_eq!(replay_rep(&r, &rep, &f), p);
        assert!(i.represent(&r.parse("X1").unwrap()).is_err());
    }

    #[test]
    fn inclusion_and_triviality() {
        let r = qx();
        let i = Ideal::new(&r, r.parse_list(&["X1^2 + X2", "X1^2 + X3"]).unwrap(), Side::Right);
        let j = Ideal::new(&r, r.parse_list(&["X2 - X3"]).unwrap(), Side::Right);
        assert_eq!(i.includes(&j), Answer::Yes);
        assert_eq!(i.includes(&i), Answer::Yes);
        let x = Ideal::new(&r, r.parse_list(&["X1"]).unwrap(), Side::Right);
        let x2 = Ideal::new(&r, r.parse_list(&["X1^2"]).unwrap(), Side::Right);
        assert_eq!(x2.includes(&x), Answer::No);
        let t = Ideal::new(&r, r.parse_list(&["X1", "X1 + 1"]).unwrap(), Side::Right);
        assert_eq!(t.trivial().unwrap().answer, Answer::Yes);
        let s = TermSpace::new(Universe::commutative(["X"]), TermOrder::deglex(&[0]), Reductive::Divides).unwrap();
        let z = FunctionRing::new(s, Integers::div_rem()).unwrap();
        let two = Ideal::new(&z, z.parse_list(&["2"]).unwrap(), Side::Right);
        assert_eq!(two.trivial().unwrap().answer, Answer::No);
    }

    #[test]
    fn sums_and_products() {
        let r = qx();
        let a = Ideal::new(&r, r.parse_list(&["X1"]).unwrap(), Side::Right);
        let b = Ideal::new(&r, r.parse_list(&["X2"]).unwrap(), Side::Right);
        assert_eq!(a.sum(&b).member(&r.parse("X1 + X2").unwrap()).answer, Answer::Yes);
        let p = a.product(&b).unwrap();
        let xy = Ideal::new(&r, r.parse_list(&["X1X2"]).unwrap(), Side::Right);
        assert_eq!(p.equals(&xy), Answer::Yes);
        let empty = Ideal::new(&r, vec![], Side::Right);
        assert_eq!(a.sum(&empty).equals(&a), Answer::Yes);
    }
}
