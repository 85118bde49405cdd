//! Exact coefficient fields.

use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field usable as polynomial coefficients: the rationals, or a
/// cyclotomic field.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Send + Sync + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_rational(r: BigRational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

impl Scalar for BigRational {
    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational coefficient compactly (`3`, `-1/2`).
pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
