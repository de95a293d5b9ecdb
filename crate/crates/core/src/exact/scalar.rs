use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, RatFn, Rational};
use crate::error::Error;

/// Element of the working field: a rational number or a rational function of
/// `mu`, behind one interface so the algebra and matrix code is agnostic to
/// which evaluation mode is active.
///
/// Mixed-mode arithmetic promotes the rational operand to a constant rational
/// function.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(Rational),
    Fun(RatFn),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar::Rat(super::int(v))
    }

    pub fn from_rat(num: i64, den: i64) -> Self {
        Scalar::Rat(super::rat(num, den))
    }

    /// The symbolic indeterminate `mu`.
    pub fn mu() -> Self {
        Scalar::Fun(RatFn::var())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fun(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fun(f) => f.is_one(),
        }
    }

    /// Promote to the rational-function representation.
    pub fn as_fun(&self) -> RatFn {
        match self {
            Scalar::Rat(r) => RatFn::constant(r.clone()),
            Scalar::Fun(f) => f.clone(),
        }
    }

    /// The rational value, if this scalar is a constant.
    pub fn as_rat(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Fun(f) => {
                if f.den().is_zero() || f.den() != &Poly::one() {
                    return None;
                }
                match f.num().degree() {
                    None => Some(Rational::zero()),
                    Some(0) => Some(f.num().coeff(0)),
                    _ => None,
                }
            }
        }
    }

    /// Substitute a rational value for `mu`. Errors if a denominator vanishes.
    pub fn eval_mu(&self, x: &Rational) -> Result<Rational, Error> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Fun(f) => f.eval(x),
        }
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Fun(f) => Ok(Scalar::Fun(f.inv()?)),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            _ => self.as_fun() == other.as_fun(),
        }
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => Scalar::Fun(self.as_fun().add(&rhs.as_fun())),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => Scalar::Fun(self.as_fun().sub(&rhs.as_fun())),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => Scalar::Fun(self.as_fun().mul(&rhs.as_fun())),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fun(f) => Scalar::Fun(f.neg()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Fun(p) => write!(f, "{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_mode_promotion() {
        let mu = Scalar::mu();
        let two = Scalar::from_i64(2);
        let sum = &mu + &two;
        // mu + 2 evaluated at mu = 3 gives 5
        assert_eq!(sum.eval_mu(&super::super::int(3)).unwrap(), super::super::int(5));
        // equality across representations
        assert_eq!(two, Scalar::Fun(RatFn::constant(super::super::int(2))));
    }

    #[test]
    fn inverse_roundtrip() {
        let mu = Scalar::mu();
        let f = &(&mu * &mu) + &Scalar::one();
        assert!((&f * &f.inv().unwrap()).is_one());
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }
}
