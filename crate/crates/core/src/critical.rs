//! Critical pairs: s-polynomials at the minimal common multiples of two
//! head terms, and saturating sets of monomial multiples.

use crate::coefficients::{Arith, Domain};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::{normal_form, ReductionSpec, Side, DEFAULT_STEP_BUDGET};
use crate::terms::{Term, Universe, WordKind};

pub type Mult = (Option<Term>, Option<Term>);

/// `value = a1 * (l1 p r1) + a2 * (l2 q r2)` with both multiples headed by `term`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPoly<E> {
    pub term: Term,
    pub m1: Mult,
    pub m2: Mult,
    pub a1: E,
    pub a2: E,
    pub value: Poly<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPolySet<E> {
    pub items: Vec<SPoly<E>>,
    /// The common multiples were enumerated exhaustively.
    pub complete: bool,
}

pub fn s_polynomials<D: Domain>(ring: &FunctionRing<D>, p: &Poly<D::Elem>, q: &Poly<D::Elem>, side: Side) -> SPolySet<D::Elem> {
    let (Some(hp), Some(hq)) = (p.head_term(), q.head_term()) else {
        return SPolySet { items: vec![], complete: true };
    };
    let (commons, complete): (Vec<(Term, Mult, Mult)>, bool) = match side {
        Side::Right => {
            let (cs, c) = ring.space.right_commons(hp, hq);
            (cs.into_iter().map(|c| (c.term, (None, c.right1), (None, c.right2))).collect(), c)
        }
        Side::TwoSided => {
            let (cs, c) = ring.space.two_sided_commons(hp, hq);
            (cs.into_iter().map(|c| (c.term, c.m1, c.m2)).collect(), c)
        }
    };
    let d = &ring.domain;
    let mut items = Vec::new();
    for (t, m1, m2) in commons {
        let x = ring.mul_terms(m1.0.as_ref(), p, m1.1.as_ref());
        let y = ring.mul_terms(m2.0.as_ref(), q, m2.1.as_ref());
        if x.head_term() != Some(&t) || y.head_term() != Some(&t) {
            continue;
        }
        let (g1, g2) = (x.head_coeff().unwrap(), y.head_coeff().unwrap());
        let (a1, a2) = match ring.arith() {
            Arith::Field => (d.inv(g1).unwrap(), d.neg(&d.inv(g2).unwrap())),
            _ => {
                let minus = d.neg(&d.one());
                let s1 = if d.is_negative(g1) { minus.clone() } else { d.one() };
                let s2 = if d.is_negative(g2) { minus.clone() } else { d.one() };
                let (p1, p2) = (d.mul(g1, &s1), d.mul(g2, &s2));
                match d.int_div(&p1, &p2) {
                    // p1 = p2 * beta + delta: beta * s2 * y - s1 * x
                    Some((beta, _)) => (d.neg(&s1), d.mul(&beta, &s2)),
                    None => {
                        let (beta, _) = d.int_div(&p2, &p1).expect("positive head coefficients");
                        (d.mul(&beta, &s1), d.neg(&s2))
                    }
                }
            }
        };
        let value = ring.add(&ring.scale(&x, &a1), &ring.scale(&y, &a2));
        items.push(SPoly { term: t, m1, m2, a1, a2, value });
    }
    SPolySet { items, complete }
}

/// A saturating element `l * f * r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatElem<E> {
    pub poly: Poly<E>,
    pub left: Option<Term>,
    pub right: Option<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturator<E> {
    pub elements: Vec<SatElem<E>>,
    pub complete: bool,
}

fn word(t: Option<&Term>) -> Vec<u16> {
    t.and_then(Term::as_word).map(<[u16]>::to_vec).unwrap_or_default()
}

/// Multiples of `f` that are not stable translates of an earlier element.
///
/// For word universes an element `e = f * w_e` covers `f * w` when
/// `w = w_e m'` as words, `e * m' = f * w`, and `HT(f * w)` is the plain
/// concatenation `HT(e) m'`. Elsewhere `e` covers `f * w` when
/// `e * m' = f * w` for some `m'` with `HT(HT(e) * m') = HT(f * w)`.
pub fn saturator<D: Domain>(ring: &FunctionRing<D>, f: &Poly<D::Elem>, side: Side, bound: usize) -> Saturator<D::Elem> {
    let mut elements = vec![SatElem { poly: f.clone(), left: None, right: None }];
    if f.is_zero() || ring.space.is_stable() {
        return Saturator { elements, complete: true };
    }
    let u = ring.universe();
    let words = matches!(u, Universe::Words(w) if w.kind != WordKind::Solvable);
    let max_lhs = match u {
        Universe::Words(w) => w.max_lhs,
        _ => 0,
    };
    let ms = ring.space.multipliers(bound);
    let pairs: Vec<Mult> = match side {
        Side::Right => ms.iter().map(|w| (None, Some(w.clone()))).collect(),
        Side::TwoSided => {
            let mut v: Vec<Mult> = Vec::new();
            let opts: Vec<Option<Term>> = std::iter::once(None).chain(ms.iter().cloned().map(Some)).collect();
            for a in &opts {
                for b in &opts {
                    if a.is_none() && b.is_none() {
                        continue;
                    }
                    let size = a.as_ref().map_or(0, |t| u.size(t)) + b.as_ref().map_or(0, |t| u.size(t));
                    if size <= bound {
                        v.push((a.clone(), b.clone()));
                    }
                }
            }
            v.sort_by_key(|(a, b)| a.as_ref().map_or(0, |t| u.size(t)) + b.as_ref().map_or(0, |t| u.size(t)));
            v
        }
    };
    let mut last_added = 0usize;
    for (l, r) in pairs {
        let s = ring.mul_terms(l.as_ref(), f, r.as_ref());
        if s.is_zero() {
            continue;
        }
        let covered = elements.iter().any(|e| {
            if words {
                let (wl, wr) = (word(l.as_ref()), word(r.as_ref()));
                let (el, er) = (word(e.left.as_ref()), word(e.right.as_ref()));
                if wl.len() < el.len() || wr.len() < er.len() || (wl.len() == el.len() && wr.len() == er.len()) {
                    return false;
                }
                if wl[wl.len() - el.len()..] != el[..] || wr[..er.len()] != er[..] {
                    return false;
                }
                let lp = Term::Word(wl[..wl.len() - el.len()].to_vec());
                let rp = Term::Word(wr[er.len()..].to_vec());
                let lp = (!u.is_unit(&lp)).then_some(lp);
                let rp = (!u.is_unit(&rp)).then_some(rp);
                if ring.mul_terms(lp.as_ref(), &e.poly, rp.as_ref()) != s {
                    return false;
                }
                let mut concat = word(lp.as_ref());
                concat.extend_from_slice(e.poly.head_term().and_then(Term::as_word).unwrap_or(&[]));
                concat.extend_from_slice(&word(rp.as_ref()));
                s.head_term() == Some(&Term::Word(concat))
            } else {
                let (Some(he), Some(hs)) = (e.poly.head_term(), s.head_term()) else { return false };
                let cands: Vec<Mult> = match side {
                    Side::Right => ring.space.right_candidates(he, hs).into_iter().map(|w| (None, w)).collect(),
                    Side::TwoSided => ring.space.two_sided_candidates(he, hs),
                };
                cands.iter().any(|(a, b)| ring.mul_terms(a.as_ref(), &e.poly, b.as_ref()) == s)
            }
        });
        if !covered {
            let size = l.as_ref().map_or(0, |t| u.size(t)) + r.as_ref().map_or(0, |t| u.size(t));
            last_added = last_added.max(size);
            elements.push(SatElem { poly: s, left: l, right: r });
        }
    }
    let complete = match u {
        Universe::Table(_) => side == Side::Right || bound >= 2,
        _ => bound >= last_added + max_lhs + 1,
    };
    Saturator { elements, complete }
}

/// A monomial multiple of a generator that does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationWitness<E> {
    pub index: usize,
    pub left: Option<Term>,
    pub right: Option<Term>,
    pub value: Poly<E>,
    pub normal_form: Poly<E>,
}

/// Multiples `l * f * r` with multipliers up to `bound` that do not reduce
/// to zero by `fs`.
pub fn saturation_check<D: Domain>(
    ring: &FunctionRing<D>,
    fs: &[Poly<D::Elem>],
    side: Side,
    bound: usize,
) -> Vec<SaturationWitness<D::Elem>> {
    let spec = ReductionSpec { side, ..ReductionSpec::right() };
    let ms = ring.space.multipliers(bound);
    let mut out = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        let mut pairs: Vec<Mult> = ms.iter().map(|w| (None, Some(w.clone()))).collect();
        if side == Side::TwoSided {
            pairs.extend(ms.iter().map(|w| (Some(w.clone()), None)));
        }
        for (l, r) in pairs {
            let value = ring.mul_terms(l.as_ref(), f, r.as_ref());
            let nf = normal_form(ring, &value, fs, spec, DEFAULT_STEP_BUDGET);
            if !nf.poly.is_zero() {
                out.push(SaturationWitness { index: i, left: l, right: r, value, normal_form: nf.poly });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Integers, Rationals};
    use crate::terms::{Reductive, Rule, TermOrder, TermSpace, WordSystem};

    #[test]
    fn commutative_spoly() {
        let s = TermSpace::new(Universe::commutative(["X1", "X2", "X3"]), TermOrder::deglex(&[0, 1, 2]), Reductive::Divides)
            .unwrap();
        let r = FunctionRing::new(s, Rationals).unwrap();
        let (p, q) = (r.parse("X1 + X2").unwrap(), r.parse("X1 + X3").unwrap());
        let sp = s_polynomials(&r, &p, &q, Side::Right);
        assert_eq!(sp.items.len(), 1);
        assert_eq!(r.fmt(&sp.items[0].value), "X2 - X3");
    }

    #[test]
    fn integer_spoly() {
        let s = TermSpace::new(Universe::commutative(["X"]), TermOrder::deglex(&[0]), Reductive::Divides).unwrap();
        let r = FunctionRing::new(s, Integers::div_rem()).unwrap();
        let (p, q) = (r.parse("3X^2 + X").unwrap(), r.parse("2X^2 + X").unwrap());
        let sp = s_polynomials(&r, &p, &q, Side::Right);
        assert_eq!(r.fmt(&sp.items[0].value), "-X^2");
    }

    #[test]
    fn free_group_saturator() {
        let sys = WordSystem::new(
            vec!["a".into(), "b".into()],
            vec![Rule::monomial(vec![0, 1], vec![]), Rule::monomial(vec![1, 0], vec![])],
            WordKind::Monoid,
        );
        let s = TermSpace::new(Universe::words(sys), TermOrder::lenlex(&[0, 1]), Reductive::Prefix).unwrap();
        let r = FunctionRing::new(s, Rationals).unwrap();
        let f = r.parse("a + 1").unwrap();
        let sat = saturator(&r, &f, Side::Right, 4);
        let polys: Vec<String> = sat.elements.iter().map(|e| r.fmt(&e.poly)).collect();
        assert_eq!(polys, vec!["a + 1", "b + 1"]);
        assert!(sat.complete);
        let w = saturation_check(&r, &[f], Side::Right, 1);
        assert_eq!(w.len(), 1);
        assert_eq!(r.fmt(&w[0].value), "b + 1");
    }
}
