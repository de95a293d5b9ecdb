use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::error::Error;

/// Univariate polynomial over the rationals, coefficients lowest degree first.
///
/// Invariant: no trailing zero coefficient; the zero polynomial has an empty
/// coefficient vector. `degree` is therefore `len - 1` for nonzero polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Normalize to leading coefficient 1. `monic(0) = 0`.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), Error> {
        let dlc = d.leading().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / dlc;
            for (idx, dc) in d.coeffs.iter().enumerate() {
                let v = &rem[k + idx] - &q * dc;
                rem[k + idx] = v;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + a * b;
                out[i + j] = v;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    /// Renders in `mu`, highest degree first, e.g. `-mu^2 + 3*mu - 1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "mu")?,
                (1, false) => write!(f, "{mag}*mu")?,
                (_, true) => write!(f, "mu^{k}")?,
                (_, false) => write!(f, "{mag}*mu^{k}")?,
            }
        }
        Ok(())
    }
}

/// Exact Lagrange interpolation through the given (distinct) points.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Poly {
    let mut acc = Poly::zero();
    for (k, (xk, yk)) in points.iter().enumerate() {
        if yk.is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            basis = &basis * &Poly::new(vec![-xj.clone(), Rational::one()]);
            denom *= xk - xj;
        }
        acc = &acc + &basis.scale(&(yk / denom));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = Poly::from_i64(&[2, 0, -3, 1]);
        let d = Poly::from_i64(&[-1, 1]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
    }

    #[test]
    fn gcd_examples() {
        // (mu^2 - 1, mu^2 - 2mu + 1) -> mu - 1
        let a = Poly::from_i64(&[-1, 0, 1]);
        let b = Poly::from_i64(&[1, -2, 1]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_i64(&[-1, 1]));
        // gcd(a, 0) = monic(a)
        let c = Poly::from_i64(&[2, 4]);
        assert_eq!(Poly::gcd(&c, &Poly::zero()), c.monic());
        // gcd(0, 0) = 0
        assert!(Poly::gcd(&Poly::zero(), &Poly::zero()).is_zero());
        let _ = int(0);
    }

    #[test]
    fn gcd_coprime() {
        // (mu^2 + 1, mu + 2) -> 1 (Euclid: mu^2+1 = (mu-2)(mu+2) + 5)
        let a = Poly::from_i64(&[1, 0, 1]);
        let b = Poly::from_i64(&[2, 1]);
        assert_eq!(Poly::gcd(&a, &b), Poly::one());
    }

    #[test]
    fn eval_horner() {
        let p = Poly::from_i64(&[1, 0, 1]); // mu^2 + 1
        assert_eq!(p.eval(&int(2)), int(5));
        assert_eq!(Poly::zero().eval(&int(7)), int(0));
        // 1 + mu vanishes at -1
        assert_eq!(Poly::from_i64(&[1, 1]).eval(&int(-1)), int(0));
    }

    #[test]
    fn interpolation_recovers_poly() {
        let p = Poly::from_i64(&[3, -2, 0, 1]);
        let pts: Vec<_> = (0..6).map(|k| (int(k), p.eval(&int(k)))).collect();
        assert_eq!(lagrange_interpolate(&pts), p);
        let _ = rat(1, 2);
    }
}
