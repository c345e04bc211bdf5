//! Constructions with adjoined tag variables: elimination, intersection,
//! radical membership and polynomial maps.

use super::{Answer, Ideal, Membership};
use crate::coefficients::{Arith, Domain};
use crate::completion::{complete, Completion, CompletionOptions, Status, Verdict};
use crate::error::{Error, Result};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::Side;
use crate::terms::{Term, TermOrder, TermSpace, Universe};

/// A ring `F[Z]` of tagged terms over a base ring `F`.
#[derive(Debug, Clone)]
pub struct TagRing<D: Domain> {
    pub base: FunctionRing<D>,
    pub ring: FunctionRing<D>,
    pub tags: usize,
    pub tags_high: bool,
}

impl<D: Domain> TagRing<D> {
    /// Tags named `$z` (one) or `$z1, $z2, ...`, ordered `$z1 > $z2 > ...`.
    pub fn new(base: &FunctionRing<D>, tags: usize, commuting: bool, tags_high: bool) -> Result<Self> {
        if matches!(base.universe(), Universe::Tagged(_)) {
            return Err(Error::Unsupported("nested tags".into()));
        }
        let names: Vec<String> = if tags == 1 { vec!["$z".into()] } else { (1..=tags).map(|i| format!("$z{i}")).collect() };
        let u = Universe::tagged(names, commuting, base.universe().clone());
        let order = TermOrder::Syllable {
            tags_high,
            tag_rank: (0..tags).collect(),
            base: Box::new(base.space.order.clone()),
        };
        let (space, _) = TermSpace::new_unchecked(u, order, base.space.reductive.clone())?;
        let ring = FunctionRing::new(space.with_bound(base.space.bound), base.domain.clone())?;
        Ok(TagRing { base: base.clone(), ring, tags, tags_high })
    }

    pub fn lift(&self, p: &Poly<D::Elem>) -> Poly<D::Elem> {
        self.ring.import(p, |t| Term::Tagged(vec![], Box::new(t.clone())), Clone::clone)
    }

    pub fn tag(&self, i: usize) -> Poly<D::Elem> {
        self.ring.term(self.ring.universe().tag(i).expect("tagged universe"))
    }

    /// The base polynomial, if no term carries a tag.
    pub fn lower(&self, p: &Poly<D::Elem>) -> Option<Poly<D::Elem>> {
        let mut out = Vec::with_capacity(p.len());
        for (t, c) in p.terms() {
            match t {
                Term::Tagged(w, b) if w.is_empty() => out.push(((**b).clone(), c.clone())),
                _ => return None,
            }
        }
        Some(self.base.from_terms(out))
    }

    /// Every term is a pure tag word.
    pub fn tag_only(&self, p: &Poly<D::Elem>) -> bool {
        let u = self.base.universe();
        p.terms().iter().all(|(t, _)| matches!(t, Term::Tagged(_, b) if u.is_unit(b)))
    }

    /// Basis elements free of tags, when tags are ordered above the base.
    pub fn eliminate(&self, c: &Completion<D>) -> Result<Vec<Poly<D::Elem>>> {
        if !self.tags_high {
            return Err(Error::Ordering("elimination needs tags above base terms".into()));
        }
        Ok(c.basis().iter().filter_map(|p| self.lower(p)).collect())
    }
}

fn certified<D: Domain>(c: &Completion<D>) -> bool {
    c.status == Status::Complete && c.certificate.verdict == Verdict::Pass
}

/// `I ∩ J` by eliminating `z` from `z*I + (1 - z)*J`.
pub fn intersect<D: Domain>(i: &Ideal<D>, j: &Ideal<D>) -> Result<(Ideal<D>, bool)> {
    let tr = TagRing::new(&i.ring, 1, true, true)?;
    let z = tr.tag(0);
    let one_minus_z = tr.ring.sub(&tr.ring.one()?, &z);
    let mut gens: Vec<Poly<D::Elem>> = i.gens.iter().map(|f| tr.ring.mul(&z, &tr.lift(f))).collect();
    gens.extend(j.gens.iter().map(|g| tr.ring.mul(&one_minus_z, &tr.lift(g))));
    let c = complete(&tr.ring, &gens, i.options);
    let basis = tr.eliminate(&c)?;
    Ok((Ideal::with_options(&i.ring, basis, i.options), certified(&c)))
}

/// `f` lies in the radical of `I` iff `1` is in `I + (z*f - 1)`.
pub fn radical_member<D: Domain>(f: &Poly<D::Elem>, i: &Ideal<D>) -> Result<Membership<D::Elem>> {
    if !(i.ring.universe().is_commutative() && i.ring.space.is_stable()) {
        return Err(Error::NotCommutative("radical membership"));
    }
    let tr = TagRing::new(&i.ring, 1, true, true)?;
    let mut gens: Vec<Poly<D::Elem>> = i.gens.iter().map(|g| tr.lift(g)).collect();
    gens.push(tr.ring.sub(&tr.ring.mul(&tr.tag(0), &tr.lift(f)), &tr.ring.one()?));
    let ext = Ideal::with_options(&tr.ring, gens, i.options);
    ext.trivial()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageResult<E> {
    pub answer: Answer,
    /// A tag polynomial `h` with `phi(h) = f`.
    pub preimage: Option<Poly<E>>,
}

/// The map `z_i -> f_i` from tag polynomials into the base ring.
#[derive(Debug, Clone)]
pub struct PolyMap<D: Domain> {
    pub tags: TagRing<D>,
    pub targets: Vec<Poly<D::Elem>>,
    pub completion: Completion<D>,
}

impl<D: Domain> PolyMap<D> {
    pub fn new(base: &FunctionRing<D>, targets: Vec<Poly<D::Elem>>, options: CompletionOptions) -> Result<Self> {
        if base.arith() != Arith::Field {
            return Err(Error::UnsupportedDomain(base.domain.descriptor()));
        }
        let commutative = base.universe().is_commutative();
        let tags = TagRing::new(base, targets.len(), commutative, false)?;
        let gens: Vec<Poly<D::Elem>> =
            targets.iter().enumerate().map(|(k, f)| tags.ring.sub(&tags.tag(k), &tags.lift(f))).collect();
        let side = if commutative { Side::Right } else { Side::TwoSided };
        let completion = complete(&tags.ring, &gens, CompletionOptions { side, ..options });
        Ok(PolyMap { tags, targets, completion })
    }

    pub fn certified(&self) -> bool {
        certified(&self.completion)
    }

    /// Basis elements involving tags only; they generate the kernel.
    pub fn kernel(&self) -> Vec<Poly<D::Elem>> {
        self.completion.basis().into_iter().filter(|p| self.tags.tag_only(p)).collect()
    }

    /// Substitutes `z_i = f_i` in a tag polynomial.
    pub fn apply(&self, h: &Poly<D::Elem>) -> Result<Poly<D::Elem>> {
        let b = &self.tags.base;
        let mut acc = Poly::zero();
        for (t, c) in h.terms() {
            let Term::Tagged(w, base) = t else { return Err(Error::Unsupported("tag terms expected".into())) };
            let mut m = b.monomial(c.clone(), (**base).clone());
            for &k in w {
                m = b.mul(&m, &self.targets[k as usize]);
            }
            acc = b.add(&acc, &m);
        }
        Ok(acc)
    }

    pub fn image(&self, f: &Poly<D::Elem>) -> ImageResult<D::Elem> {
        let nf = self.completion.normal_form(&self.tags.lift(f));
        if self.tags.tag_only(&nf) {
            return ImageResult { answer: Answer::Yes, preimage: Some(nf) };
        }
        let answer = if self.certified() { Answer::No } else { Answer::Unknown };
        ImageResult { answer, preimage: None }
    }

    /// Every generator of the base ring lies in the image.
    pub fn onto(&self) -> Answer {
        let n = self.tags.base.universe().symbols().len();
        Answer::all((0..n).map(|i| self.image(&self.tags.base.generator(i)).answer))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Rationals;
    use crate::terms::Reductive;

    fn q(vars: &[&str]) -> FunctionRing<Rationals> {
        let prec: Vec<usize> = (0..vars.len()).collect();
        let s = TermSpace::new(Universe::commutative(vars.iter().copied()), TermOrder::deglex(&prec), Reductive::Divides).unwrap();
        FunctionRing::new(s, Rationals).unwrap()
    }

    #[test]
    fn intersections() {
        let r = q(&["X", "Y"]);
        let x = Ideal::new(&r, r.parse_list(&["X"]).unwrap(), Side::Right);
        let y = Ideal::new(&r, r.parse_list(&["Y"]).unwrap(), Side::Right);
        let (k, ok) = intersect(&x, &y).unwrap();
        assert!(ok);
        let xy = Ideal::new(&r, r.parse_list(&["XY"]).unwrap(), Side::Right);
        assert_eq!(k.equals(&xy), Answer::Yes);
        let (kk, _) = intersect(&x, &x).unwrap();
        assert_eq!(kk.equals(&x), Answer::Yes);
        let x1 = Ideal::new(&r, r.parse_list(&["X + 1"]).unwrap(), Side::Right);
        let (m, _) = intersect(&x, &x1).unwrap();
        let expect = Ideal::new(&r, r.parse_list(&["X^2 + X"]).unwrap(), Side::Right);
        assert_eq!(m.equals(&expect), Answer::Yes);
    }

    #[test]
    fn radicals() {
        let r = q(&["X", "Y"]);
        let i = Ideal::new(&r, r.parse_list(&["X^2"]).unwrap(), Side::Right);
        assert_eq!(radical_member(&r.parse("X").unwrap(), &i).unwrap().answer, Answer::Yes);
        let f = r.parse("X + Y^2").unwrap();
        let j = Ideal::new(&r, vec![f.clone()], Side::Right);
        assert_eq!(radical_member(&f, &j).unwrap().answer, Answer::Yes);
        let y = Ideal::new(&r, r.parse_list(&["Y"]).unwrap(), Side::Right);
        assert_eq!(radical_member(&r.parse("X").unwrap(), &y).unwrap().answer, Answer::No);
    }

    #[test]
    fn kernels_and_images() {
        let r = q(&["X"]);
        let m = PolyMap::new(&r, r.parse_list(&["X^2", "X^3"]).unwrap(), CompletionOptions::new(Side::Right)).unwrap();
        let tr = &m.tags;
        let (z1, z2) = (tr.tag(0), tr.tag(1));
        let k = tr.ring.sub(&tr.ring.pow(&z1, 3).unwrap(), &tr.ring.pow(&z2, 2).unwrap());
        assert!(m.completion.normal_form(&k).is_zero());
        for g in m.kernel() {
            assert!(m.apply(&g).unwrap().is_zero());
        }
        let f = r.parse("X^5 + 2X^4").unwrap();
        let img = m.image(&f);
        assert_eq!(img.answer, Answer::Yes);
        assert_eq!(m.apply(&img.preimage.unwrap()).unwrap(), f);
        assert_eq!(m.image(&r.parse("X").unwrap()).answer, Answer::No);
        assert_eq!(m.onto(), Answer::No);
        let id = PolyMap::new(&r, r.parse_list(&["X"]).unwrap(), CompletionOptions::new(Side::Right)).unwrap();
        assert_eq!(id.onto(), Answer::Yes);
    }
}
