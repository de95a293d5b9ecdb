//! Exact arithmetic kernel: arbitrary-precision rationals, univariate
//! polynomials over the rationals, and the rational-function field in `mu`.
//!
//! All higher modules go through [`Scalar`], which is either a rational number
//! (sampled parameters) or a reduced rational function of `mu` (symbolic mode).

mod poly;
mod ratfn;
mod scalar;

pub use poly::{lagrange_interpolate, Poly};
pub use ratfn::RatFn;
pub use scalar::Scalar;

/// Arbitrary-precision rational number, always gcd-reduced with positive
/// denominator (that is `num_rational`'s canonical form).
pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    use num_bigint::BigInt;
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for small integers as rationals.
pub fn int(value: i64) -> Rational {
    use num_bigint::BigInt;
    Rational::from_integer(BigInt::from(value))
}
