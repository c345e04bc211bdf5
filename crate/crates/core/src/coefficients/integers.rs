use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use super::{Arith, CoeffStep, Domain};
use crate::error::{Error, Result};

/// Which reduction relation the integers carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntRelation {
    /// `a ==>_b c` iff `a = k|b| + c`, `0 <= c < |b|`, `k != 0`.
    DivRem,
    /// `a ==>_b 0` iff `b` divides `a` and `a != 0`.
    Divisor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Integers {
    pub relation: IntRelation,
}

impl Integers {
    pub fn div_rem() -> Self {
        Integers { relation: IntRelation::DivRem }
    }

    pub fn divisor() -> Self {
        Integers { relation: IntRelation::Divisor }
    }
}

impl Default for Integers {
    fn default() -> Self {
        Self::div_rem()
    }
}

/// The ordering `0 < 1 < 2 < ... < -1 < -2 < ...`.
pub fn cmp_z(a: &BigInt, b: &BigInt) -> Ordering {
    let key = |x: &BigInt| (x.is_negative(), x.abs());
    key(a).cmp(&key(b))
}

/// `g = sum c_i a_i` with `g = gcd(a) >= 0`.
pub fn ext_gcd_all(a: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut cof: Vec<BigInt> = vec![BigInt::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let e = g.extended_gcd(x);
        // e.gcd = e.x * g + e.y * x
        for c in cof.iter_mut().take(i) {
            *c *= &e.x;
        }
        cof[i] = e.y.clone();
        g = e.gcd;
    }
    if g.is_negative() {
        g = -g;
        for c in cof.iter_mut() {
            *c = -c.clone();
        }
    }
    (g, cof)
}

impl Domain for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> String {
        match self.relation {
            IntRelation::DivRem => "ZZ".into(),
            IntRelation::Divisor => "ZZ[D]".into(),
        }
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| q.to_integer())
    }
    fn to_rational(&self, a: &BigInt) -> Option<BigRational> {
        Some(BigRational::from_integer(a.clone()))
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        s.trim().parse().map_err(|_| Error::Invalid(format!("not an integer: {s}")))
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }

    fn reduce_step(&self, a: &BigInt, b: &BigInt) -> Result<Option<CoeffStep<BigInt>>> {
        if b.is_zero() {
            return Err(Error::ZeroReducer);
        }
        match self.relation {
            IntRelation::DivRem => {
                let m = b.abs();
                let (k, r) = a.div_mod_floor(&m);
                if k.is_zero() {
                    return Ok(None);
                }
                let quotient = if b.is_negative() { -k } else { k };
                Ok(Some(CoeffStep { result: r, quotient }))
            }
            IntRelation::Divisor => {
                if a.is_zero() || !a.is_multiple_of(b) {
                    return Ok(None);
                }
                Ok(Some(CoeffStep { result: BigInt::zero(), quotient: a / b }))
            }
        }
    }

    fn magnitude(&self, a: &BigInt) -> BigInt {
        a.abs()
    }

    fn step_bound(&self, _a: &BigInt, reducers: &[BigInt]) -> usize {
        match self.relation {
            IntRelation::Divisor => 1,
            IntRelation::DivRem => {
                let m = reducers.iter().map(|b| b.abs()).max().unwrap_or_default();
                let m: usize = m.try_into().unwrap_or(usize::MAX - 1);
                m + 1
            }
        }
    }

    fn sample(&self, rng: &mut StdRng) -> BigInt {
        BigInt::from(rng.gen_range(-30i64..=30))
    }

    fn arith(&self) -> Arith {
        match self.relation {
            IntRelation::DivRem => Arith::Integer,
            IntRelation::Divisor => Arith::Other,
        }
    }

    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }

    fn ideal_basis(&self, gens: &[BigInt]) -> Vec<BigInt> {
        let (g, _) = ext_gcd_all(gens);
        if g.is_zero() {
            vec![]
        } else {
            vec![g]
        }
    }

    fn int_div(&self, alpha: &BigInt, gamma: &BigInt) -> Option<(BigInt, BigInt)> {
        if !gamma.is_positive() || cmp_z(alpha, gamma) == Ordering::Less {
            return None;
        }
        let (q, r) = alpha.div_mod_floor(gamma);
        Some((q, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn div_rem_examples() {
        let d = Integers::div_rem();
        let s = d.reduce_step(&z(5), &z(4)).unwrap().unwrap();
        assert_eq!((s.result, s.quotient), (z(1), z(1)));
        assert!(d.reduce_step(&z(3), &z(4)).unwrap().is_none());
        let s = d.reduce_step(&z(-3), &z(4)).unwrap().unwrap();
        assert_eq!((s.result, s.quotient), (z(1), z(-1)));
        assert_eq!(d.reduce_step(&z(3), &z(0)), Err(Error::ZeroReducer));
    }

    #[test]
    fn divisor_examples() {
        let d = Integers::divisor();
        assert!(d.reduce_step(&z(5), &z(4)).unwrap().is_none());
        let s = d.reduce_step(&z(8), &z(4)).unwrap().unwrap();
        assert_eq!((s.result, s.quotient), (z(0), z(2)));
        assert!(d.reduce_step(&z(0), &z(4)).unwrap().is_none());
    }

    #[test]
    fn z_order() {
        let mut v: Vec<BigInt> = [-2, 3, 0, -1, 1].iter().map(|&x| z(x)).collect();
        v.sort_by(cmp_z);
        assert_eq!(v, vec![z(0), z(1), z(3), z(-1), z(-2)]);
    }

    #[test]
    fn int_div_respects_z_order() {
        let d = Integers::div_rem();
        assert_eq!(d.int_div(&z(7), &z(3)), Some((z(2), z(1))));
        assert_eq!(d.int_div(&z(-1), &z(3)), Some((z(-1), z(2))));
        assert_eq!(d.int_div(&z(2), &z(3)), None);
    }

    proptest! {
        #[test]
        fn ext_gcd_identity(v in proptest::collection::vec(-60i64..60, 0..5)) {
            let a: Vec<BigInt> = v.iter().map(|&x| z(x)).collect();
            let (g, c) = ext_gcd_all(&a);
            let s: BigInt = a.iter().zip(&c).map(|(x, y)| x * y).sum();
            prop_assert_eq!(&s, &g);
            for x in &a {
                if !g.is_zero() {
                    prop_assert!(x.is_multiple_of(&g));
                }
            }
        }

        #[test]
        fn div_rem_witness(a in -200i64..200, b in -20i64..20) {
            prop_assume!(b != 0);
            let d = Integers::div_rem();
            if let Some(s) = d.reduce_step(&z(a), &z(b)).unwrap() {
                prop_assert_eq!(z(a) - &s.result, &s.quotient * z(b));
                prop_assert!(s.result >= z(0) && s.result < z(b).abs());
            } else {
                prop_assert!(a >= 0 && a < b.abs());
            }
        }
    }
}
