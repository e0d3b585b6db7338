//! Exact scalar types usable as coefficients.
//!
//! Everything in this crate is generic over [`Scalar`]. The implementations
//! provided are exact: arbitrary-precision rationals, `i64` rationals, and
//! Gaussian rationals (needed where the imaginary unit appears).

use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field element.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    /// `num / den`, or `None` when `den` is zero or the value does not fit.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Complex conjugation. Identity on real scalars.
    fn conj(&self) -> Self {
        self.clone()
    }

    /// True when the canonical text form starts with a minus sign.
    fn is_negative(&self) -> bool;

    /// Canonical text form (`3`, `-1/2`, `(1/2+3i)`).
    fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

/// A scalar field containing the imaginary unit.
pub trait ComplexScalar: Scalar {
    fn i() -> Self;

    /// Real scalars embed into the field.
    fn from_real(re: Self) -> Self {
        re
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Scalar for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Rational64::new(num.to_i64()?, den.to_i64()?))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Scalar for Complex<BigRational> {
    fn from_i64(n: i64) -> Self {
        Complex::new(BigRational::from_i64(n), BigRational::zero())
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        Some(Complex::new(BigRational::from_ratio(num, den)?, BigRational::zero()))
    }

    fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(Complex::new(&self.re / &norm, -&self.im / &norm))
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn is_negative(&self) -> bool {
        if self.im.is_zero() {
            Signed::is_negative(&self.re)
        } else {
            self.re.is_zero() && Signed::is_negative(&self.im)
        }
    }

    fn write_scalar(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (&self.re, &self.im);
        match (re.is_zero(), im.is_zero()) {
            (_, true) => write!(f, "{}", re),
            (true, false) if im.is_one() => write!(f, "i"),
            (true, false) if (-im).is_one() => write!(f, "-i"),
            (true, false) => write!(f, "{}i", im),
            (false, false) => {
                if Signed::is_negative(im) {
                    write!(f, "({}-{}i)", re, -im)
                } else {
                    write!(f, "({}+{}i)", re, im)
                }
            }
        }
    }
}

impl ComplexScalar for Complex<BigRational> {
    fn i() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
}

/// Formatting adapter for any [`Scalar`].
pub struct ScalarDisplay<'a, S>(pub &'a S);

impl<S: Scalar> fmt::Display for ScalarDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_scalar(f)
    }
}
