//! Exact scalar arithmetic: the [`Ring`] contract every solver and simulator
//! is generic over, arbitrary-precision integer helpers, and polynomials in
//! the deformation parameter `q`.
//!
//! No floating point appears anywhere in the crate; every value is an exact
//! integer, rational, or polynomial with exact coefficients.

mod json;
mod poly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use json::{
    parse_rational, qpoly_from_json, qpoly_to_json, rational_from_json, rational_to_json,
};
pub use poly::Poly;

/// A commutative ring with exact equality.
///
/// Integers embed through `From<BigInt>`, which is how integer coefficients
/// (trapezoid entries, counts) are lifted into rationals or polynomials.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + From<BigInt>
{
    fn from_int(n: i64) -> Self {
        Self::from(BigInt::from(n))
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + From<BigInt>
{
}

/// `n` choose `k`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    // acc * (n - i) is always divisible by (i + 1) at this point
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `(2n-1)!! = (2n-1)(2n-3)...3*1`, with `(-1)!! = 1` for `n = 0`.
pub fn semifactorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1))
}
