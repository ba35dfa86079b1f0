//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Scalar`], an exact field with
//! characteristic zero. The rational types from `num-rational` implement it;
//! the crate root fixes [`crate::Rational`] (arbitrary precision) as the
//! default used by the invariant computations and the CLI.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumAssignRef, Signed};

/// An exact field of characteristic zero.
///
/// Kernels and ranks are computed by exact elimination, so floating point
/// types are deliberately not implementors.
pub trait Scalar: NumAssignRef + Signed + Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn from_int(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Parses `a` or `a/b`.
    fn parse(text: &str) -> Option<Self>;
}

impl<T> Scalar for Ratio<T>
where
    T: Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static,
    Ratio<T>: NumAssignRef + Signed,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        let parse_int = |s: &str| -> Option<T> {
            let v: i64 = s.trim().parse().ok()?;
            T::from_i64(v)
        };
        match text.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return None;
                }
                Some(Ratio::new(parse_int(n)?, d))
            }
            None => Some(Ratio::from_integer(parse_int(text)?)),
        }
    }
}

/// Generalized binomial coefficient `binom(top, k)` for any integer `top` and `k >= 0`.
pub fn binomial(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::from(0);
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= top - i;
        den *= i + 1;
    }
    num / den
}

/// `binomial` converted into a scalar. Panics only if the value does not fit in `i64`.
pub(crate) fn binomial_scalar<S: Scalar>(top: i64, k: i64) -> S {
    let b = binomial(top, k);
    S::from_int(i64::try_from(b).expect("binomial coefficient overflow"))
}
