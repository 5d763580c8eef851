//! The exact integer type the closed formulas are generic over.
//!
//! Any signed integer from `num` that supports checked arithmetic qualifies:
//! `i64` and `i128` fail with [`Error::Overflow`] when a result leaves their
//! range, `BigInt` never does.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn add<T: Scalar>(x: &T, y: &T, op: &'static str) -> Result<T> {
    x.checked_add(y).ok_or(Error::Overflow { op })
}

pub(crate) fn sub<T: Scalar>(x: &T, y: &T, op: &'static str) -> Result<T> {
    x.checked_sub(y).ok_or(Error::Overflow { op })
}

pub(crate) fn mul<T: Scalar>(x: &T, y: &T, op: &'static str) -> Result<T> {
    x.checked_mul(y).ok_or(Error::Overflow { op })
}

pub(crate) fn pow<T: Scalar>(base: &T, exp: usize, op: &'static str) -> Result<T> {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = mul(&acc, base, op)?;
    }
    Ok(acc)
}

pub(crate) fn from_u64<T: Scalar>(x: u64, op: &'static str) -> Result<T> {
    T::from_u64(x).ok_or(Error::Overflow { op })
}

pub(crate) fn from_usize<T: Scalar>(x: usize, op: &'static str) -> Result<T> {
    T::from_usize(x).ok_or(Error::Overflow { op })
}

/// Exact halving; an odd argument is an arithmetic bug upstream.
pub(crate) fn half_exact<T: Scalar>(x: &T, what: &'static str) -> Result<T> {
    let two = T::one() + T::one();
    let (q, r) = x.div_rem(&two);
    if !r.is_zero() {
        return Err(Error::Internal(what));
    }
    Ok(q)
}

/// Narrow a scalar to `u64` for the oracle engine and table indexing.
pub(crate) fn to_u64<T: Scalar>(x: &T, what: &'static str) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::Capacity {
        what,
        requested: x.to_string(),
        cap: u64::MAX,
    })
}
