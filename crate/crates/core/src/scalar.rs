//! Scalar bounds shared by the exact linear algebra.
//!
//! Everything in [`crate::intlat`] and [`crate::polyhedra`] is written against
//! [`Int`], so the same code runs on `i64` (handy for quick oracles) and on
//! `BigInt`, which is what the rest of the crate uses.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Int:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every Int holds an i64")
    }
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts an arbitrary-precision integer into an `i64`, failing loudly.
pub fn to_i64<T: Int>(v: &T) -> crate::Result<i64> {
    v.to_i64()
        .ok_or_else(|| crate::Error::Overflow(v.to_string()))
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
