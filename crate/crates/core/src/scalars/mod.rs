//! Exact coefficient fields.
//!
//! Every quantity in the crate is a [`Scalar`]: either an arbitrary-precision
//! rational or a rational function in the single indeterminate `q`. Both are
//! kept in canonical form, so equality is structural and identity checks are
//! syntactic.

mod parse;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

pub use num_rational::BigRational as Rational;
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// Which coefficient field a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    RatFunc,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Rational => "Q",
            Field::RatFunc => "Q(q)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Func(RatFunc),
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar::from_int(field, 0)
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_int(field, 1)
    }

    pub fn from_int(field: Field, n: impl Into<BigInt>) -> Scalar {
        Scalar::from_rational(field, Rational::from_integer(n.into()))
    }

    pub fn from_rational(field: Field, r: Rational) -> Scalar {
        match field {
            Field::Rational => Scalar::Rat(r),
            Field::RatFunc => Scalar::Func(RatFunc::constant(r)),
        }
    }

    /// The symbolic indeterminate `q`.
    pub fn q() -> Scalar {
        Scalar::Func(RatFunc::q())
    }

    pub fn rational(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Rational::new(n.into(), d.into()))
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::from_int(Field::Rational, n)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Func(_) => Field::RatFunc,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field())
    }

    /// True for rationals with denominator 1 and for constant integer functions.
    pub fn is_integer(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_integer())
    }

    /// The rational value, if this scalar is a constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rat(r) => Some(r.clone()),
            Scalar::Func(f) => f.as_constant(),
        }
    }

    /// Re-expresses the value in `field`. Rationals embed into rational
    /// functions as constants; the way back requires a constant.
    pub fn to_field(&self, field: Field) -> Result<Scalar> {
        match (self, field) {
            (Scalar::Rat(r), Field::RatFunc) => Ok(Scalar::Func(RatFunc::constant(r.clone()))),
            (Scalar::Func(f), Field::Rational) => {
                f.as_constant().map(Scalar::Rat).ok_or(Error::MixedFieldTags(Field::RatFunc, Field::Rational))
            }
            _ => Ok(self.clone()),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a + b)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a + b)),
            _ => Err(Error::MixedFieldTags(self.field(), rhs.field())),
        }
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a - b)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a - b)),
            _ => Err(Error::MixedFieldTags(self.field(), rhs.field())),
        }
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a * b)),
            (Scalar::Func(a), Scalar::Func(b)) => Ok(Scalar::Func(a * b)),
            _ => Err(Error::MixedFieldTags(self.field(), rhs.field())),
        }
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rat(_), Scalar::Rat(b)) if b.is_zero() => Err(Error::DivisionByZero),
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            (Scalar::Func(a), Scalar::Func(b)) => a.checked_div(b).map(Scalar::Func),
            _ => Err(Error::MixedFieldTags(self.field(), rhs.field())),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one(self.field()).try_div(self)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(num_traits::pow(r.clone(), exp as usize)),
            Scalar::Func(f) => Scalar::Func(f.pow(exp)),
        }
    }

    /// Substitutes `q = q0`. Rationals are returned unchanged.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Func(f) => f.eval(q0),
        }
    }

    /// Parses the text form produced by `Display` (and general expressions
    /// in `q` with `+ - * / ^` and parentheses). The result is a rational
    /// unless `q` occurs.
    pub fn parse(text: &str) -> Result<Scalar> {
        parse::parse_scalar(text)
    }

    /// Parses and then moves the value into `field`.
    pub fn parse_as(text: &str, field: Field) -> Result<Scalar> {
        Scalar::parse(text)?.to_field(field)
    }
}

/// Evaluates a rational function at `q0`.
pub fn eval_ratfunc(f: &RatFunc, q0: &Rational) -> Result<Rational> {
    f.eval(q0)
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<RatFunc> for Scalar {
    fn from(f: RatFunc) -> Self {
        Scalar::Func(f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        Scalar::parse(s)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Func(g) => write!(f, "{g}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Operator sugar for code paths where both operands provably share a field.
// Mixed tags or a zero divisor panic; the `try_*` methods report them instead.
macro_rules! scalar_op {
    ($tr:ident $m:ident $try:ident) => {
        impl $tr for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

scalar_op!(Add add try_add);
scalar_op!(Sub sub try_sub);
scalar_op!(Mul mul try_mul);
scalar_op!(Div div try_div);

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Func(f) => Scalar::Func(-f),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

/// `1 + t + ... + t^(n-1)`; zero for `n = 0`.
pub fn geometric_sum(t: &Scalar, n: usize) -> Scalar {
    let field = t.field();
    let mut acc = Scalar::zero(field);
    let mut power = Scalar::one(field);
    for _ in 0..n {
        acc = &acc + &power;
        power = &power * t;
    }
    acc
}
