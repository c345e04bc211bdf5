//! Reduction of polynomials by finite sets.
//!
//! A step at position `t` subtracts `coeff * (u * g * v)` where
//! `HT(u * g * v) = HT(u * HT(g) * v) = t` and `HT(g) <= t`. Over a field the
//! coefficient at `t` vanishes; over the integers it is replaced by its
//! remainder modulo the (positive) head coefficient of the multiple.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::coefficients::{Arith, Domain};
use crate::polys::{FunctionRing, Poly};
use crate::terms::Term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Right,
    TwoSided,
}

/// Which reducible position is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Position {
    Largest,
    Smallest,
    HeadOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionSpec {
    pub side: Side,
    pub position: Position,
}

impl ReductionSpec {
    pub fn right() -> Self {
        ReductionSpec { side: Side::Right, position: Position::Largest }
    }

    pub fn two_sided() -> Self {
        ReductionSpec { side: Side::TwoSided, position: Position::Largest }
    }

    pub fn with_position(mut self, position: Position) -> Self {
        self.position = position;
        self
    }
}

impl Default for ReductionSpec {
    fn default() -> Self {
        Self::right()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    BuchbergerField,
    RightField,
    TwoSidedField,
    RightInt,
    TwoSidedInt,
}

pub fn variant<D: Domain>(ring: &FunctionRing<D>, side: Side) -> Variant {
    let commutative = ring.universe().is_commutative() && ring.space.is_stable();
    match (ring.arith(), side) {
        (Arith::Integer, Side::Right) => Variant::RightInt,
        (Arith::Integer, Side::TwoSided) => Variant::TwoSidedInt,
        (_, _) if commutative => Variant::BuchbergerField,
        (_, Side::Right) => Variant::RightField,
        (_, Side::TwoSided) => Variant::TwoSidedField,
    }
}

/// One reduction step: `q = p - coeff * (left * g[reducer] * right)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<E> {
    pub reducer: usize,
    pub left: Option<Term>,
    pub right: Option<Term>,
    pub coeff: E,
    pub position: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<E> {
    pub poly: Poly<E>,
    pub steps: Vec<Step<E>>,
    /// The step budget ran out before an irreducible result was reached.
    pub exhausted: bool,
}

pub const DEFAULT_STEP_BUDGET: usize = 200_000;

/// The multiple of `g` at term `t`, and the coefficient removing (or
/// reducing) `alpha` there.
fn step_at<D: Domain>(
    ring: &FunctionRing<D>,
    t: &Term,
    alpha: &D::Elem,
    reducers: &[Poly<D::Elem>],
    side: Side,
) -> Option<(Poly<D::Elem>, Step<D::Elem>)> {
    let d = &ring.domain;
    let stable = ring.space.is_stable();
    for (i, g) in reducers.iter().enumerate() {
        let Some(s) = g.head_term() else { continue };
        if stable && !ring.space.leq(s, t) {
            continue;
        }
        let cands: Vec<(Option<Term>, Option<Term>)> = match side {
            Side::Right => ring.space.right_candidates(s, t).into_iter().map(|w| (None, w)).collect(),
            Side::TwoSided => ring.space.two_sided_candidates(s, t),
        };
        for (u, v) in cands {
            let m = ring.mul_terms(u.as_ref(), g, v.as_ref());
            if m.head_term() != Some(t) {
                continue;
            }
            let gamma = m.head_coeff().expect("nonzero");
            let coeff = match ring.arith() {
                Arith::Field => d.mul(alpha, &d.inv(gamma).expect("field")),
                Arith::Integer => {
                    let neg = d.is_negative(gamma);
                    let g_pos = if neg { d.neg(gamma) } else { gamma.clone() };
                    let Some((beta, _)) = d.int_div(alpha, &g_pos) else { continue };
                    if neg {
                        d.neg(&beta)
                    } else {
                        beta
                    }
                }
                Arith::Other => return None,
            };
            return Some((m, Step { reducer: i, left: u, right: v, coeff, position: t.clone() }));
        }
    }
    None
}

/// One step at the first reducible position under the requested position policy.
pub fn reduce_step<D: Domain>(
    ring: &FunctionRing<D>,
    p: &Poly<D::Elem>,
    reducers: &[Poly<D::Elem>],
    spec: ReductionSpec,
) -> Option<(Poly<D::Elem>, Step<D::Elem>)> {
    reduce_step_from(ring, p, reducers, spec, None)
}

fn reduce_step_from<D: Domain>(
    ring: &FunctionRing<D>,
    p: &Poly<D::Elem>,
    reducers: &[Poly<D::Elem>],
    spec: ReductionSpec,
    below: Option<&Term>,
) -> Option<(Poly<D::Elem>, Step<D::Elem>)> {
    let terms = p.terms();
    let positions: Box<dyn Iterator<Item = &(Term, D::Elem)>> = match spec.position {
        Position::Largest => Box::new(terms.iter()),
        Position::Smallest => Box::new(terms.iter().rev()),
        Position::HeadOnly => Box::new(terms.iter().take(1)),
    };
    for (t, a) in positions {
        if let Some(b) = below {
            if ring.cmp_terms(t, b) == Ordering::Greater {
                continue;
            }
        }
        if let Some((m, st)) = step_at(ring, t, a, reducers, spec.side) {
            let q = ring.sub(p, &ring.scale(&m, &st.coeff));
            return Some((q, st));
        }
    }
    None
}

pub fn normal_form<D: Domain>(
    ring: &FunctionRing<D>,
    p: &Poly<D::Elem>,
    reducers: &[Poly<D::Elem>],
    spec: ReductionSpec,
    budget: usize,
) -> NormalForm<D::Elem> {
    let mut cur = p.clone();
    let mut steps = Vec::new();
    let mut below: Option<Term> = None;
    loop {
        if steps.len() >= budget {
            return NormalForm { poly: cur, steps, exhausted: true };
        }
        match reduce_step_from(ring, &cur, reducers, spec, below.as_ref()) {
            None => return NormalForm { poly: cur, steps, exhausted: false },
            Some((q, st)) => {
                if spec.position == Position::Largest {
                    below = Some(st.position.clone());
                }
                cur = q;
                steps.push(st);
            }
        }
    }
}

/// `p - sum coeff * (u g v)` over the recorded steps.
pub fn replay<D: Domain>(ring: &FunctionRing<D>, p: &Poly<D::Elem>, steps: &[Step<D::Elem>], reducers: &[Poly<D::Elem>]) -> Poly<D::Elem> {
    let mut cur = p.clone();
    for st in steps {
        let m = ring.multiple(&st.coeff, st.left.as_ref(), &reducers[st.reducer], st.right.as_ref());
        cur = ring.sub(&cur, &m);
    }
    cur
}

/// Checks a reduction trace as a standard representation of `p - nf`: it
/// replays exactly and no multiple has a head term above `HT(p)`.
pub fn verify_standard<D: Domain>(
    ring: &FunctionRing<D>,
    p: &Poly<D::Elem>,
    nf: &NormalForm<D::Elem>,
    reducers: &[Poly<D::Elem>],
) -> bool {
    if replay(ring, p, &nf.steps, reducers) != nf.poly {
        return false;
    }
    let Some(h) = p.head_term() else { return nf.steps.is_empty() };
    nf.steps.iter().all(|st| {
        let m = ring.mul_terms(st.left.as_ref(), &reducers[st.reducer], st.right.as_ref());
        m.head_term().map_or(true, |t| ring.cmp_terms(t, h) != Ordering::Greater)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Integers, Rationals};
    use crate::terms::{Reductive, Rule, TermOrder, TermSpace, Universe, WordKind, WordSystem};

    fn qx() -> FunctionRing<Rationals> {
        let s = TermSpace::new(Universe::commutative(["X1", "X2", "X3"]), TermOrder::deglex(&[0, 1, 2]), Reductive::Divides)
            .unwrap();
        FunctionRing::new(s, Rationals).unwrap()
    }

    #[test]
    fn field_normal_form() {
        let r = qx();
        let g = r.parse_list(&["X1^2 + X3", "X2 - X3"]).unwrap();
        let p = r.parse("X1^2 + X2").unwrap();
        let nf = normal_form(&r, &p, &g, ReductionSpec::right(), 100);
        assert!(nf.poly.is_zero());
        assert!(verify_standard(&r, &p, &nf, &g));
        let p = r.parse("X3^3 + X1 + X3").unwrap();
        assert_eq!(normal_form(&r, &p, &g, ReductionSpec::right(), 100).poly, p);
    }

    #[test]
    fn integer_steps_keep_remainders() {
        let s = TermSpace::new(Universe::commutative(["X"]), TermOrder::deglex(&[0]), Reductive::Divides).unwrap();
        let r = FunctionRing::new(s, Integers::div_rem()).unwrap();
        let g = r.parse_list(&["3X + 1"]).unwrap();
        let p = r.parse("7X^2").unwrap();
        let nf = normal_form(&r, &p, &g, ReductionSpec::right(), 100);
        // 7X^2 - 2X(3X+1) = X^2 - 2X; -2X ==> by 3X: -2 = 3*(-1) + 1
        assert_eq!(r.fmt(&nf.poly), "X^2 + X + 1");
        assert!(verify_standard(&r, &p, &nf, &g));
        let neg = r.parse_list(&["-3X - 1"]).unwrap();
        let nf2 = normal_form(&r, &p, &neg, ReductionSpec::right(), 100);
        assert_eq!(nf2.poly, nf.poly);
    }

    #[test]
    fn free_group_prefix_reduction() {
        let sys = WordSystem::new(
            vec!["a".into(), "b".into()],
            vec![Rule::monomial(vec![0, 1], vec![]), Rule::monomial(vec![1, 0], vec![])],
            WordKind::Monoid,
        );
        let s = TermSpace::new(Universe::words(sys), TermOrder::lenlex(&[0, 1]), Reductive::Prefix).unwrap();
        let r = FunctionRing::new(s, Rationals).unwrap();
        let g = r.parse_list(&["a + 1"]).unwrap();
        let p = r.parse("aa").unwrap();
        let nf = normal_form(&r, &p, &g, ReductionSpec::right(), 100);
        assert_eq!(r.fmt(&nf.poly), "1");
        let p = r.parse("b + 1").unwrap();
        assert_eq!(normal_form(&r, &p, &g, ReductionSpec::right(), 100).poly, p);
    }

    #[test]
    fn policies_agree_on_irreducibility() {
        let r = qx();
        let g = r.parse_list(&["X1 - X2"]).unwrap();
        let p = r.parse("X1^2 + X1").unwrap();
        for pos in [Position::Largest, Position::Smallest] {
            let nf = normal_form(&r, &p, &g, ReductionSpec::right().with_position(pos), 100);
            assert_eq!(r.fmt(&nf.poly), "X2^2 + X2");
        }
        let top = normal_form(&r, &p, &g, ReductionSpec::right().with_position(Position::HeadOnly), 100);
        assert_eq!(r.fmt(&top.poly), "X2^2 + X1");
    }
}
