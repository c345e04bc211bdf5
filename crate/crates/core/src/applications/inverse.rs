//! One-sided inverses in a ring or modulo a two-sided ideal.

use serde::{Deserialize, Serialize};

use super::{Answer, Ideal};
use crate::coefficients::{Arith, Domain};
use crate::completion::{CompletionOptions, Rep};
use crate::error::{Error, Result};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::Side;
use crate::terms::{Rule, Term, TermSpace, Universe, WordKind, WordSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hand {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseResult<E> {
    pub answer: Answer,
    pub inverse: Option<Poly<E>>,
}

/// Collects `sum c * r` over the summands `c * (f_index * r)`.
fn right_cofactor<D: Domain>(ring: &FunctionRing<D>, rep: &Rep<D::Elem>, index: usize) -> Result<Poly<D::Elem>> {
    let mut acc = Poly::zero();
    for t in rep.terms.iter().filter(|t| t.index == index) {
        if t.left.is_some() {
            return Err(Error::Unsupported("left multipliers in a right ideal".into()));
        }
        let r = t.right.clone().map_or_else(|| ring.one(), |r| Ok(ring.term(r)))?;
        acc = ring.add(&acc, &ring.scale(&r, &t.coeff));
    }
    Ok(acc)
}

fn opposite<D: Domain>(ring: &FunctionRing<D>) -> Result<FunctionRing<D>> {
    let u = ring.universe();
    if matches!(u, Universe::Words(w) if w.kind == WordKind::Solvable) {
        return Err(Error::Unsupported("left inverses in solvable algebras".into()));
    }
    let (space, _) = TermSpace::new_unchecked(u.opposite(), ring.space.order.opposite(), ring.space.reductive.clone())?;
    ring.with_space(space.with_bound(ring.space.bound))
}

fn mirror<D: Domain>(from: &FunctionRing<D>, to: &FunctionRing<D>, p: &Poly<D::Elem>) -> Poly<D::Elem> {
    let u = from.universe();
    to.import(p, |t| u.reverse_term(t), Clone::clone)
}

fn right_inverse<D: Domain>(ring: &FunctionRing<D>, f: &Poly<D::Elem>, options: CompletionOptions) -> Result<InverseResult<D::Elem>> {
    let ideal = Ideal::with_options(ring, vec![f.clone()], CompletionOptions { side: Side::Right, ..options });
    let m = ideal.trivial()?;
    let Some(rep) = m.rep else { return Ok(InverseResult { answer: m.answer, inverse: None }) };
    let g = right_cofactor(ring, &rep, 0)?;
    if ring.mul(f, &g) != ring.one()? {
        return Err(Error::Invalid("inverse does not replay".into()));
    }
    Ok(InverseResult { answer: Answer::Yes, inverse: Some(g) })
}

/// The word ring modulo a two-sided basis, as a rewriting system whose
/// extra rules send each head word to the rest of its polynomial.
fn quotient_ring<D: Domain>(ideal: &Ideal<D>) -> Result<FunctionRing<D>> {
    let ring = &ideal.ring;
    let unsupported = || Error::Unsupported("quotient inverses need a word universe".into());
    let Universe::Words(sys) = ring.universe() else { return Err(unsupported()) };
    if sys.kind == WordKind::Solvable {
        return Err(unsupported());
    }
    let d = &ring.domain;
    let mut rules = sys.rules.clone();
    for g in ideal.basis() {
        let (g, _) = ring.normalize(&g);
        let Some(Term::Word(lhs)) = g.head_term().cloned() else { return Err(unsupported()) };
        let mut rhs = Vec::new();
        for (t, c) in g.reductum().terms() {
            let Term::Word(w) = t else { return Err(unsupported()) };
            let q = d.to_rational(&d.neg(c)).ok_or_else(unsupported)?;
            rhs.push((q, w.clone()));
        }
        rules.push(Rule { lhs, rhs });
    }
    let sys = WordSystem::new(sys.letters.clone(), rules, WordKind::Algebra);
    let (space, _) = TermSpace::new_unchecked(Universe::words(sys), ring.space.order.clone(), ring.space.reductive.clone())?;
    ring.with_space(space.with_bound(ring.space.bound))
}

fn quotient_right_inverse<D: Domain>(
    f: &Poly<D::Elem>,
    ideal: &Ideal<D>,
    options: CompletionOptions,
) -> Result<InverseResult<D::Elem>> {
    let ring = &ideal.ring;
    let g = if ring.universe().is_commutative() {
        let mut gens = vec![f.clone()];
        gens.extend(ideal.basis());
        let ext = Ideal::with_options(ring, gens, CompletionOptions { side: Side::Right, ..options });
        let m = ext.trivial()?;
        let Some(rep) = m.rep else { return Ok(InverseResult { answer: m.answer, inverse: None }) };
        right_cofactor(ring, &rep, 0)?
    } else {
        if ring.arith() != Arith::Field || ideal.side() != Side::TwoSided {
            return Err(Error::Unsupported("quotient inverses need a two-sided ideal over a field".into()));
        }
        let qr = quotient_ring(ideal)?;
        let fq = qr.import(f, Clone::clone, Clone::clone);
        let res = right_inverse(&qr, &fq, options);
        match res {
            Ok(InverseResult { inverse: Some(h), .. }) => ring.import(&h, Clone::clone, Clone::clone),
            Ok(r) => return Ok(InverseResult { answer: if ideal.certified() { r.answer } else { Answer::Unknown }, inverse: None }),
            Err(e) => return Err(e),
        }
    };
    let check = ring.sub(&ring.mul(f, &g), &ring.one()?);
    if !ideal.normal_form(&check).is_zero() {
        return Err(Error::Invalid("inverse does not replay".into()));
    }
    Ok(InverseResult { answer: Answer::Yes, inverse: Some(ideal.normal_form(&g)) })
}

/// A one-sided inverse of `f` in the ring, or modulo `modulo` when given.
pub fn inverse_element<D: Domain>(
    ring: &FunctionRing<D>,
    f: &Poly<D::Elem>,
    modulo: Option<&Ideal<D>>,
    hand: Hand,
    options: CompletionOptions,
) -> Result<InverseResult<D::Elem>> {
    match (hand, modulo) {
        (Hand::Right, None) => right_inverse(ring, f, options),
        (Hand::Right, Some(i)) => quotient_right_inverse(f, i, options),
        (Hand::Left, None) => {
            if ring.universe().is_commutative() {
                return right_inverse(ring, f, options);
            }
            let op = opposite(ring)?;
            let r = right_inverse(&op, &mirror(ring, &op, f), options)?;
            let inverse = r.inverse.map(|g| mirror(&op, ring, &g));
            if let Some(g) = &inverse {
                if ring.mul(g, f) != ring.one()? {
                    return Err(Error::Invalid("inverse does not replay".into()));
                }
            }
            Ok(InverseResult { answer: r.answer, inverse })
        }
        (Hand::Left, Some(i)) => {
            if ring.universe().is_commutative() {
                quotient_right_inverse(f, i, options)
            } else {
                Err(Error::Unsupported("left inverses modulo a non-commutative ideal".into()))
            }
        }
    }
}
