//! Exact complex rationals and the scalar trait shared by float and exact code.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::C64;

/// p + q i with p, q arbitrary-precision rationals in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl RatComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        RatComplex { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        RatComplex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
    }

    /// (rn/rd) + (in/id) i
    pub fn from_fracs(rn: i64, rd: i64, inum: i64, id: i64) -> Self {
        RatComplex::new(
            BigRational::new(rn.into(), rd.into()),
            BigRational::new(inum.into(), id.into()),
        )
    }

    pub fn zero() -> Self {
        RatComplex::from_ints(0, 0)
    }

    pub fn one() -> Self {
        RatComplex::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        RatComplex::new(self.re.clone(), -self.im.clone())
    }

    /// Exact value of a finite double; None for NaN or infinities.
    pub fn from_c64(z: C64) -> Option<Self> {
        Some(RatComplex::new(BigRational::from_float(z.re)?, BigRational::from_float(z.im)?))
    }

    pub fn to_c64(&self) -> C64 {
        C64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(RatComplex::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = RatComplex::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Square root of a nonnegative real perfect square, if that is what this is.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if !self.is_real() || self.re.is_negative() {
            return None;
        }
        let root = |n: &BigInt| {
            let r = n.sqrt();
            (&r * &r == *n).then_some(r)
        };
        let num = root(self.re.numer())?;
        let den = root(self.re.denom())?;
        Some(RatComplex::new(BigRational::new(num, den), BigRational::zero()))
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RatComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat(&self.im)),
            _ => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for RatComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a RatComplex> for &'a RatComplex {
            type Output = RatComplex;
            fn $m(self, o: &'a RatComplex) -> RatComplex {
                let f: fn(&RatComplex, &RatComplex) -> RatComplex = $body;
                f(self, o)
            }
        }
        impl $tr for RatComplex {
            type Output = RatComplex;
            fn $m(self, o: RatComplex) -> RatComplex {
                (&self).$m(&o)
            }
        }
    };
}

binop!(Add, add, |a, b| RatComplex::new(&a.re + &b.re, &a.im + &b.im));
binop!(Sub, sub, |a, b| RatComplex::new(&a.re - &b.re, &a.im - &b.im));
binop!(Mul, mul, |a, b| RatComplex::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
binop!(Div, div, |a, b| a * &b.inv().expect("exact division by zero"));

impl Neg for RatComplex {
    type Output = RatComplex;
    fn neg(self) -> RatComplex {
        RatComplex::new(-self.re, -self.im)
    }
}

impl Neg for &RatComplex {
    type Output = RatComplex;
    fn neg(self) -> RatComplex {
        RatComplex::new(-self.re.clone(), -self.im.clone())
    }
}

/// Arithmetic needed by the class formulas, for both doubles and exact values.
pub trait Scalar:
    Clone
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
    fn imag_unit() -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_real(&self) -> bool;
    /// Principal square root; exact values only answer for perfect squares.
    fn sqrt(&self) -> Option<Self>;
    /// Natural logarithm; exact values only answer for 1.
    fn ln(&self) -> Option<Self>;
    fn to_c64(&self) -> C64;
    /// A double-precision value; exact scalars refuse.
    fn from_double(z: C64) -> Option<Self>;

    fn pow(&self, e: u32) -> Self {
        let mut out = Self::from_i64(1);
        for _ in 0..e {
            out = out * self.clone();
        }
        out
    }
}

impl Scalar for C64 {
    fn from_i64(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }
    fn imag_unit() -> Self {
        C64::new(0.0, 1.0)
    }
    fn conj(&self) -> Self {
        C64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn is_real(&self) -> bool {
        self.im == 0.0
    }
    fn sqrt(&self) -> Option<Self> {
        Some(C64::sqrt(*self))
    }
    fn ln(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| C64::ln(*self))
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn from_double(z: C64) -> Option<Self> {
        Some(z)
    }
}

impl Scalar for RatComplex {
    fn from_i64(n: i64) -> Self {
        RatComplex::from_ints(n, 0)
    }
    fn imag_unit() -> Self {
        RatComplex::from_ints(0, 1)
    }
    fn conj(&self) -> Self {
        RatComplex::conj(self)
    }
    fn is_zero(&self) -> bool {
        RatComplex::is_zero(self)
    }
    fn is_real(&self) -> bool {
        RatComplex::is_real(self)
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }
    fn ln(&self) -> Option<Self> {
        (*self == RatComplex::one()).then(RatComplex::zero)
    }
    fn to_c64(&self) -> C64 {
        RatComplex::to_c64(self)
    }
    fn from_double(_: C64) -> Option<Self> {
        None
    }
}

/// A small rational as (numerator, denominator), used by the samplers.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from_i64(n).unwrap(), BigInt::from_i64(d).unwrap())
}

impl Zero for RatComplex {
    fn zero() -> Self {
        RatComplex::zero()
    }
    fn is_zero(&self) -> bool {
        RatComplex::is_zero(self)
    }
}

impl One for RatComplex {
    fn one() -> Self {
        RatComplex::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        let a = RatComplex::from_fracs(1, 2, 3, 4);
        let b = RatComplex::from_fracs(-2, 3, 1, 5);
        let q = &(&a * &b) / &b;
        assert_eq!(q, a);
        assert_eq!(&a - &a, RatComplex::zero());
        assert_eq!(RatComplex::from_ints(0, 1).pow(2), RatComplex::from_ints(-1, 0));
        assert_eq!(a.to_string(), "1/2+3/4i");
        assert_eq!(b.conj().to_string(), "-2/3-1/5i");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(RatComplex::from_fracs(25, 9, 0, 1).sqrt_exact(), Some(RatComplex::from_fracs(5, 3, 0, 1)));
        assert_eq!(RatComplex::from_ints(2, 0).sqrt_exact(), None);
        assert_eq!(RatComplex::from_ints(-4, 0).sqrt_exact(), None);
    }

    #[test]
    fn doubles_convert_exactly() {
        let z = C64::new(0.1, -3.25);
        assert_eq!(RatComplex::from_c64(z).unwrap().to_c64(), z);
    }
}
