use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use super::{ext_gcd_all, Arith, CoeffStep, Domain, Integers};
use crate::error::{Error, Result};

/// `Z/m` with carrier `0..m`. A step reduces in `Z` and then takes the
/// normal form modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegersMod {
    m: BigInt,
}

impl IntegersMod {
    pub fn new(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::BadModulus(m.to_string()));
        }
        Ok(IntegersMod { m })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.m
    }

    fn norm(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.m)
    }
}

impl Domain for IntegersMod {
    type Elem = BigInt;

    fn descriptor(&self) -> String {
        format!("ZZ/{}", self.m)
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.norm(&(a + b))
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        self.norm(&(-a))
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.norm(&(a * b))
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        self.norm(n)
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| self.norm(&q.to_integer()))
    }
    fn to_rational(&self, a: &BigInt) -> Option<BigRational> {
        Some(BigRational::from_integer(a.clone()))
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        let n: BigInt = s.trim().parse().map_err(|_| Error::Invalid(format!("not an integer: {s}")))?;
        Ok(self.norm(&n))
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn reduce_step(&self, a: &BigInt, b: &BigInt) -> Result<Option<CoeffStep<BigInt>>> {
        let b = self.norm(b);
        if b.is_zero() {
            return Err(Error::ZeroReducer);
        }
        let Some(step) = Integers::div_rem().reduce_step(&self.norm(a), &b)? else {
            return Ok(None);
        };
        Ok(Some(CoeffStep { result: self.norm(&step.result), quotient: self.norm(&step.quotient) }))
    }
    fn magnitude(&self, a: &BigInt) -> BigInt {
        self.norm(a)
    }
    fn step_bound(&self, _a: &BigInt, _reducers: &[BigInt]) -> usize {
        self.m.to_usize().unwrap_or(usize::MAX)
    }
    fn sample(&self, rng: &mut StdRng) -> BigInt {
        let m = self.m.to_u64().unwrap_or(u64::MAX);
        BigInt::from(rng.gen_range(0..m))
    }
    fn arith(&self) -> Arith {
        Arith::Other
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        let e = self.norm(a).extended_gcd(&self.m);
        e.gcd.is_one().then(|| self.norm(&e.x))
    }
    fn ideal_basis(&self, gens: &[BigInt]) -> Vec<BigInt> {
        let mut lifted: Vec<BigInt> = gens.iter().map(|g| self.norm(g)).collect();
        lifted.push(self.m.clone());
        let (g, _) = ext_gcd_all(&lifted);
        let g = self.norm(&g);
        if g.is_zero() {
            vec![]
        } else {
            vec![g]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_examples() {
        let d = IntegersMod::new(6).unwrap();
        assert_eq!(d.ideal_basis(&[BigInt::from(4)]), vec![BigInt::from(2)]);
        assert_eq!(d.ideal_basis(&[BigInt::from(5)]), vec![BigInt::from(1)]);
        assert_eq!(d.ideal_basis(&[BigInt::from(0)]), vec![]);
        let s = d.reduce_step(&BigInt::from(5), &BigInt::from(2)).unwrap().unwrap();
        assert_eq!(s.result, BigInt::from(1));
        assert!(IntegersMod::new(1).is_err());
        assert!(IntegersMod::new(0).is_err());
    }
}
