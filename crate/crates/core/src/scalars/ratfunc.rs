use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// A rational function in `q` in canonical form: reduced, with a monic
/// denominator. Structural equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn q() -> Self {
        RatFunc::from_poly(Poly::q())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc { num, den: Poly::one() }
    }

    /// Builds `num / den` and reduces it to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational constant, if it has no `q` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        // Powers of a reduced fraction stay reduced; monic stays monic.
        RatFunc { num: self.num.pow(exp), den: self.den.pow(exp) }
    }

    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(q0.clone()));
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = self.num.to_string();
        let den = self.den.to_string();
        let num = if num.contains(' ') { format!("({num})") } else { num };
        let den =
            if den.chars().any(|c| matches!(c, ' ' | '/' | '*' | '-')) { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_poly(num);
            }
            return RatFunc::canonical(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| r(c)).collect())
    }

    #[test]
    fn cancels_common_factor() {
        let f = RatFunc::new(p(&[1, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(f, RatFunc::from_poly(p(&[1, 1])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn denominator_made_monic() {
        let f = RatFunc::new(p(&[2]), p(&[4, 2])).unwrap();
        assert_eq!(f.denom(), &p(&[2, 1]));
        assert_eq!(f.numer(), &p(&[1]));
    }

    #[test]
    fn zero_is_zero_over_one() {
        let f = RatFunc::new(Poly::zero(), p(&[3, 1])).unwrap();
        assert_eq!(f, RatFunc::zero());
        assert!(f.denom().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(p(&[1]), Poly::zero()), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_and_pole() {
        let f = RatFunc::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(f.eval(&r(1)), Err(Error::PoleAtPoint(r(1))));
        assert_eq!(f.eval(&r(3)), Ok(Rational::new((-1).into(), 2.into())));
        assert_eq!(RatFunc::q().eval(&r(1)), Ok(r(1)));
    }

    #[test]
    fn arithmetic_reduces() {
        // 1/(1-q) - q/(1-q) = 1
        let a = RatFunc::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = RatFunc::new(p(&[0, 1]), p(&[1, -1])).unwrap();
        assert_eq!(&a - &b, RatFunc::one());
        // (q^2 - 1)/(q - 1) * 1/(q + 1) = 1
        let c = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        let d = RatFunc::new(p(&[1]), p(&[1, 1])).unwrap();
        assert_eq!(&c * &d, RatFunc::one());
    }

    #[test]
    fn display_fraction() {
        let f = RatFunc::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(f.to_string(), "-1/(-1 + q)");
        let g = RatFunc::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(g.to_string(), "q/(1 + q)");
    }
}
