//! Coefficient reduction rings.
//!
//! A [`Domain`] carries the ring operations together with a one-step
//! reduction relation `a ==>_b c` satisfying `a - c = q * b`.

mod ideal;
mod integers;
mod module;
mod prime;
mod probe;
mod quotient;
mod rationals;
mod sum;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;

use crate::error::Result;

pub use ideal::{coeff_ideal_gb, coeff_normal_form, CoeffIdealBasis};
pub use integers::{cmp_z, ext_gcd_all, IntRelation, Integers};
pub use module::{module_gb, module_normal_form, module_reduce_step};
pub use prime::PrimeField;
pub use probe::{axiom_probe, AxiomOutcome, ProbeReport};
pub use quotient::IntegersMod;
pub use rationals::Rationals;
pub use sum::{SumDomain, SumSide};

/// How polynomial reduction treats head coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arith {
    Field,
    Integer,
    Other,
}

/// One reduction step `a ==>_b result` with `a - result = quotient * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffStep<E> {
    pub result: E,
    pub quotient: E,
}

pub trait Domain: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync + 'static;

    fn descriptor(&self) -> String;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }
    /// Image of a rational constant, if the domain has one.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    /// Canonical rational representative.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
    /// Printed with a leading minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn reduce_step(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Option<CoeffStep<Self::Elem>>>;
    /// Size used to order reducers in normal-form computations.
    fn magnitude(&self, a: &Self::Elem) -> BigInt;
    /// Upper bound on the length of any reduction chain from `a` by `reducers`.
    fn step_bound(&self, a: &Self::Elem, reducers: &[Self::Elem]) -> usize;
    fn sample(&self, rng: &mut StdRng) -> Self::Elem;
    fn declares_a4(&self) -> bool {
        true
    }
    fn arith(&self) -> Arith;
    fn inv(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }
    /// Interreduced Groebner basis of the ideal generated by `gens`.
    fn ideal_basis(&self, gens: &[Self::Elem]) -> Vec<Self::Elem>;

    /// Integer division for `Arith::Integer`: with `gamma > 0` and
    /// `alpha >=_Z gamma`, returns `(beta, delta)` where
    /// `alpha = gamma * beta + delta` and `0 <= delta < gamma`.
    fn int_div(&self, _alpha: &Self::Elem, _gamma: &Self::Elem) -> Option<(Self::Elem, Self::Elem)> {
        None
    }
}
