use core::fmt;

use num_traits::Zero;

use super::{Poly, Rational};
use crate::error::Error;

/// Reduced rational function in one indeterminate over the rationals.
///
/// Canonical form: `gcd(num, den) = 1`, `den` monic, zero is `0/1`. The
/// canonical representative is unique, so derived equality is semantic
/// equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Build the canonical representative of `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let (num, r) = num.div_rem(&g)?;
        debug_assert!(r.is_zero());
        let (den, r) = den.div_rem(&g)?;
        debug_assert!(r.is_zero());
        // push the denominator's leading coefficient into the numerator
        let lc = den.leading().expect("den nonzero").clone();
        Ok(RatFn {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFn::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFn::from_poly(Poly::one())
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        RatFn::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &RatFn::one()
    }

    /// `None` if the denominator vanishes at `x`.
    pub fn eval(&self, x: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFn::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &RatFn) -> RatFn {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFn, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;

    #[test]
    fn normalization_examples() {
        // (mu^2 - 1) / (mu - 1) -> (mu + 1) / 1
        let f = RatFn::new(Poly::from_i64(&[-1, 0, 1]), Poly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(f, RatFn::from_poly(Poly::from_i64(&[1, 1])));
        // 0 / (mu + 3) -> 0 / 1
        let z = RatFn::new(Poly::zero(), Poly::from_i64(&[3, 1])).unwrap();
        assert_eq!(z, RatFn::zero());
        // 2mu / 2 -> mu / 1
        let m = RatFn::new(Poly::from_i64(&[0, 2]), Poly::from_i64(&[2])).unwrap();
        assert_eq!(m, RatFn::var());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFn::new(Poly::one(), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn representation_independence() {
        // (p*r)/(q*r) == p/q
        let p = Poly::from_i64(&[1, 2]);
        let q = Poly::from_i64(&[3, 0, 1]);
        let r = Poly::from_i64(&[-5, 7, 2]);
        let a = RatFn::new(p.clone(), q.clone()).unwrap();
        let b = RatFn::new(&p * &r, &q * &r).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn field_inverse() {
        let f = RatFn::new(Poly::from_i64(&[0, 1]), Poly::from_i64(&[1, 1])).unwrap();
        assert!(f.mul(&f.inv().unwrap()).is_one());
        assert_eq!(RatFn::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_with_vanishing_denominator() {
        let f = RatFn::new(Poly::one(), Poly::from_i64(&[1, 1])).unwrap();
        assert_eq!(f.eval(&int(-1)), Err(Error::DivisionByZero));
        assert_eq!(f.eval(&int(1)), Ok(super::super::rat(1, 2)));
    }
}
