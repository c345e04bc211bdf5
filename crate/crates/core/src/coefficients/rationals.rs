use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use super::{Arith, CoeffStep, Domain};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Domain for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> String {
        "QQ".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        s.trim().parse().map_err(|_| Error::Invalid(format!("not a rational: {s}")))
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn reduce_step(&self, a: &BigRational, b: &BigRational) -> Result<Option<CoeffStep<BigRational>>> {
        if b.is_zero() {
            return Err(Error::ZeroReducer);
        }
        if a.is_zero() {
            return Ok(None);
        }
        Ok(Some(CoeffStep { result: BigRational::zero(), quotient: a / b }))
    }

    fn magnitude(&self, _a: &BigRational) -> BigInt {
        BigInt::one()
    }
    fn step_bound(&self, _a: &BigRational, _reducers: &[BigRational]) -> usize {
        1
    }
    fn sample(&self, rng: &mut StdRng) -> BigRational {
        let n = rng.gen_range(-12i64..=12);
        let d = rng.gen_range(1i64..=6);
        BigRational::new(n.into(), d.into())
    }
    fn arith(&self) -> Arith {
        Arith::Field
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn ideal_basis(&self, gens: &[BigRational]) -> Vec<BigRational> {
        if gens.iter().all(|g| g.is_zero()) {
            vec![]
        } else {
            vec![BigRational::one()]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_step() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let s = Rationals.reduce_step(&q(5), &q(3)).unwrap().unwrap();
        assert_eq!(s.result, q(0));
        assert_eq!(s.quotient, BigRational::new(5.into(), 3.into()));
        assert!(Rationals.reduce_step(&q(0), &q(3)).unwrap().is_none());
        assert_eq!(Rationals.ideal_basis(&[q(3)]), vec![q(1)]);
    }
}
