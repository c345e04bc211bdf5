pub mod coefficients;
pub mod error;
pub mod terms;
pub mod polys;
pub mod reduction;
pub mod critical;
pub mod completion;
pub mod applications;
pub mod cli;

pub use coefficients::{Domain, Integers, IntegersMod, PrimeField, Rationals};
pub use error::{Error, Result};
pub use polys::{FunctionRing, Poly};

/// Polynomials with rational coefficients.
pub type QRing = FunctionRing<Rationals>;
/// Polynomials over the integers.
pub type ZRing = FunctionRing<Integers>;
/// Polynomials over a prime field.
pub type GfRing = FunctionRing<PrimeField>;
pub type QPoly = Poly<num_rational::BigRational>;
pub type ZPoly = Poly<num_bigint::BigInt>;
pub type GfPoly = Poly<u64>;
