//! Exact rational scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::DkError;

/// A rational number kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigs(num: BigInt, den: BigInt) -> Result<Self, DkError> {
        if den.is_zero() {
            return Err(DkError::Parse("zero denominator".into()));
        }
        Ok(Scalar(BigRational::new(num, den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Scalar {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        Scalar(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = DkError;

    /// Accepts `-?digits(/digits)?`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || DkError::Parse(format!("invalid rational `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let digits_ok = |t: &str, signed: bool| {
            let t = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        if !digits_ok(num, true) || !digits_ok(den, false) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Scalar::from_bigs(num, den)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(Scalar::from_int(n)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let a = Scalar::new(6, -4);
        assert_eq!(a, Scalar::new(-3, 2));
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(a.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("-7/21".parse::<Scalar>().unwrap(), Scalar::new(-1, 3));
        assert_eq!("12".parse::<Scalar>().unwrap(), Scalar::from_int(12));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1/-2".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Scalar::new(1, 2);
        let b = Scalar::new(1, 3);
        assert_eq!(&a + &b, Scalar::new(5, 6));
        assert_eq!(&a * &b, Scalar::new(1, 6));
        assert_eq!(&a / &b, Scalar::new(3, 2));
        assert_eq!(a.recip(), Scalar::from_int(2));
        assert_eq!(Scalar::new(-2, 3).pow(3), Scalar::new(-8, 27));
    }
}
