use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;

use super::{Arith, CoeffStep, Domain};
use crate::error::{Error, Result};

/// The direct sum `A (+) B`; steps reduce the left component, the right
/// one, or both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDomain<A, B> {
    pub left: A,
    pub right: B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumSide {
    Left,
    Right,
    Both,
}

impl<A: Domain, B: Domain> SumDomain<A, B> {
    pub fn new(left: A, right: B) -> Self {
        SumDomain { left, right }
    }

    /// Which components a step from `a` to `c` touched.
    pub fn step_side(&self, a: &(A::Elem, B::Elem), c: &(A::Elem, B::Elem)) -> Option<SumSide> {
        match (a.0 != c.0, a.1 != c.1) {
            (true, true) => Some(SumSide::Both),
            (true, false) => Some(SumSide::Left),
            (false, true) => Some(SumSide::Right),
            (false, false) => None,
        }
    }
}

impl<A: Domain, B: Domain> Domain for SumDomain<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn descriptor(&self) -> String {
        format!("{}(+){}", self.left.descriptor(), self.right.descriptor())
    }
    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }
    fn one(&self) -> Self::Elem {
        (self.left.one(), self.right.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.add(&a.0, &b.0), self.right.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.left.neg(&a.0), self.right.neg(&a.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.mul(&a.0, &b.0), self.right.mul(&a.1, &b.1))
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        (self.left.from_int(n), self.right.from_int(n))
    }
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem> {
        Some((self.left.from_rational(q)?, self.right.from_rational(q)?))
    }
    fn to_rational(&self, _a: &Self::Elem) -> Option<BigRational> {
        None
    }
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Invalid(format!("expected a pair (a,b): {s}")))?;
        let (l, r) = inner
            .split_once(',')
            .ok_or_else(|| Error::Invalid(format!("expected a pair (a,b): {s}")))?;
        Ok((self.left.parse_elem(l)?, self.right.parse_elem(r)?))
    }
    fn render(&self, a: &Self::Elem) -> String {
        format!("({},{})", self.left.render(&a.0), self.right.render(&a.1))
    }

    fn reduce_step(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Option<CoeffStep<Self::Elem>>> {
        let lz = self.left.is_zero(&b.0);
        let rz = self.right.is_zero(&b.1);
        if lz && rz {
            return Err(Error::ZeroReducer);
        }
        let l = if lz { None } else { self.left.reduce_step(&a.0, &b.0)? };
        let r = if rz { None } else { self.right.reduce_step(&a.1, &b.1)? };
        if l.is_none() && r.is_none() {
            return Ok(None);
        }
        let (lc, lq) = match l {
            Some(s) => (s.result, s.quotient),
            None => (a.0.clone(), self.left.zero()),
        };
        let (rc, rq) = match r {
            Some(s) => (s.result, s.quotient),
            None => (a.1.clone(), self.right.zero()),
        };
        Ok(Some(CoeffStep { result: (lc, rc), quotient: (lq, rq) }))
    }
    fn magnitude(&self, a: &Self::Elem) -> BigInt {
        self.left.magnitude(&a.0) + self.right.magnitude(&a.1)
    }
    fn step_bound(&self, a: &Self::Elem, reducers: &[Self::Elem]) -> usize {
        let ls: Vec<A::Elem> = reducers.iter().map(|r| r.0.clone()).filter(|x| !self.left.is_zero(x)).collect();
        let rs: Vec<B::Elem> = reducers.iter().map(|r| r.1.clone()).filter(|x| !self.right.is_zero(x)).collect();
        self.left.step_bound(&a.0, &ls).saturating_add(self.right.step_bound(&a.1, &rs))
    }
    fn sample(&self, rng: &mut StdRng) -> Self::Elem {
        (self.left.sample(rng), self.right.sample(rng))
    }
    fn declares_a4(&self) -> bool {
        self.left.declares_a4() && self.right.declares_a4()
    }
    fn arith(&self) -> Arith {
        Arith::Other
    }
    fn ideal_basis(&self, gens: &[Self::Elem]) -> Vec<Self::Elem> {
        let ls: Vec<A::Elem> = gens.iter().map(|g| g.0.clone()).collect();
        let rs: Vec<B::Elem> = gens.iter().map(|g| g.1.clone()).collect();
        let mut out: Vec<Self::Elem> =
            self.left.ideal_basis(&ls).into_iter().map(|l| (l, self.right.zero())).collect();
        out.extend(self.right.ideal_basis(&rs).into_iter().map(|r| (self.left.zero(), r)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::Integers;

    fn zz() -> SumDomain<Integers, Integers> {
        SumDomain::new(Integers::div_rem(), Integers::div_rem())
    }

    fn p(a: i64, b: i64) -> (BigInt, BigInt) {
        (a.into(), b.into())
    }

    #[test]
    fn left_only_step() {
        let d = zz();
        let s = d.reduce_step(&p(5, 7), &p(4, 0)).unwrap().unwrap();
        assert_eq!(s.result, p(1, 7));
        assert_eq!(d.step_side(&p(5, 7), &s.result), Some(SumSide::Left));
        assert_eq!(d.reduce_step(&p(5, 7), &p(0, 0)), Err(Error::ZeroReducer));
    }

    #[test]
    fn padded_basis() {
        assert_eq!(zz().ideal_basis(&[p(4, 6)]), vec![p(4, 0), p(0, 6)]);
    }
}
