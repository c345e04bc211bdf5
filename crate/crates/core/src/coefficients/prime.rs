use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use super::{Arith, CoeffStep, Domain};
use crate::error::{Error, Result};

/// The prime field `GF(p)` with carrier `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::Invalid(format!("modulus {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> String {
        format!("GF({})", self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap_or(0)
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.from_int(q.denom());
        let i = self.inv(&d)?;
        Some(self.mul(&self.from_int(q.numer()), &i))
    }
    fn to_rational(&self, a: &u64) -> Option<BigRational> {
        Some(BigRational::from_integer(BigInt::from(*a)))
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        let n: BigInt = s.trim().parse().map_err(|_| Error::Invalid(format!("not an integer: {s}")))?;
        Ok(self.from_int(&n))
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn reduce_step(&self, a: &u64, b: &u64) -> Result<Option<CoeffStep<u64>>> {
        if *b == 0 {
            return Err(Error::ZeroReducer);
        }
        if *a == 0 {
            return Ok(None);
        }
        let q = self.mul(a, &self.inv(b).expect("nonzero"));
        Ok(Some(CoeffStep { result: 0, quotient: q }))
    }
    fn magnitude(&self, _a: &u64) -> BigInt {
        BigInt::one()
    }
    fn step_bound(&self, _a: &u64, _reducers: &[u64]) -> usize {
        1
    }
    fn sample(&self, rng: &mut StdRng) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn arith(&self) -> Arith {
        Arith::Field
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a % self.p != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn ideal_basis(&self, gens: &[u64]) -> Vec<u64> {
        if gens.iter().all(|g| g.is_zero()) {
            vec![]
        } else {
            vec![1]
        }
    }
}
