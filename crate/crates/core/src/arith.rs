//! Repunit numbers, the generator sequence of `S_a(b, n)` and parameter
//! validation.
//!
//! Generators are documented 1-indexed (`a_1, ..., a_n`) and stored in
//! ascending order, so `generators()[k - 1]` is `a_k`.

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// `r_b(len) = 1 + b + ... + b^(len - 1)`, with `r_b(0) = 0`.
pub fn repunit<T: Scalar>(b: &T, len: usize) -> Result<T> {
    let two = T::one() + T::one();
    if *b < two {
        return Err(Error::BaseTooSmall { b: b.to_string() });
    }
    let mut r = T::zero();
    for _ in 0..len {
        r = scalar::mul(&r, b, "repunit")?;
        r = scalar::add(&r, &T::one(), "repunit")?;
    }
    Ok(r)
}

/// A validated parameter triple `(a, b, n)`.
///
/// The only constructor is [`validate`], so a value of this type always
/// satisfies `b >= 2`, `n >= 2`, `a >= 1` and `gcd(r_b(n), a) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrepunitParams<T> {
    a: T,
    b: T,
    n: usize,
    a1: T,
}

/// Check `(a, b, n)` and build the parameter triple.
pub fn validate<T: Scalar>(a: T, b: T, n: usize) -> Result<GrepunitParams<T>> {
    let two = T::one() + T::one();
    if b < two {
        return Err(Error::BaseTooSmall { b: b.to_string() });
    }
    if n < 2 {
        return Err(Error::LengthTooSmall { n });
    }
    if a < T::one() {
        return Err(Error::ShiftNotPositive { a: a.to_string() });
    }
    let a1 = repunit(&b, n)?;
    let g = a1.gcd(&a);
    if !g.is_one() {
        return Err(Error::NotCoprime {
            a1: a1.to_string(),
            a: a.to_string(),
            gcd: g.to_string(),
        });
    }
    Ok(GrepunitParams { a, b, n, a1 })
}

impl<T: Scalar> GrepunitParams<T> {
    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The multiplicity `a_1 = r_b(n)`.
    pub fn a1(&self) -> &T {
        &self.a1
    }

    /// `a_k = r_b(n) + a * r_b(k - 1)` for any `k >= 1`, including indices
    /// past `n`.
    pub fn generator(&self, k: usize) -> Result<T> {
        if k == 0 {
            return Err(Error::Internal("generator index starts at 1"));
        }
        let tail = scalar::mul(&self.a, &repunit(&self.b, k - 1)?, "generator")?;
        scalar::add(&self.a1, &tail, "generator")
    }

    /// `[a_1, ..., a_n]`.
    pub fn generators(&self) -> Result<Vec<T>> {
        (1..=self.n).map(|k| self.generator(k)).collect()
    }

    /// `b^n - 1`, the threshold that splits the two Frobenius regimes.
    pub fn b_pow_n_minus_one(&self) -> Result<T> {
        let bn = scalar::pow(&self.b, self.n, "b^n")?;
        scalar::sub(&bn, &T::one(), "b^n - 1")
    }

    /// The triple `(a, b, n - 1)`, when it is itself valid.
    pub fn predecessor(&self) -> Result<Self> {
        validate(self.a.clone(), self.b.clone(), self.n - 1)
    }
}

/// `b * a_i + a_{i+j} == b * a_{i+j-1} + a_{i+1}` for `i, j >= 1`.
pub fn relation_check<T: Scalar>(p: &GrepunitParams<T>, i: usize, j: usize) -> Result<bool> {
    if i == 0 || j == 0 {
        return Err(Error::Internal("relation indices start at 1"));
    }
    let b = p.b();
    let lhs = scalar::add(
        &scalar::mul(b, &p.generator(i)?, "relation")?,
        &p.generator(i + j)?,
        "relation",
    )?;
    let rhs = scalar::add(
        &scalar::mul(b, &p.generator(i + j - 1)?, "relation")?,
        &p.generator(i + 1)?,
        "relation",
    )?;
    Ok(lhs == rhs)
}

/// `a_{n+i} == a_i + a * b^(i-1) * a_1` for `i >= 1`.
pub fn extension_check<T: Scalar>(p: &GrepunitParams<T>, i: usize) -> Result<bool> {
    if i == 0 {
        return Err(Error::Internal("extension index starts at 1"));
    }
    let lhs = p.generator(p.n() + i)?;
    let shift = scalar::mul(
        &scalar::mul(p.a(), &scalar::pow(p.b(), i - 1, "extension")?, "extension")?,
        p.a1(),
        "extension",
    )?;
    let rhs = scalar::add(&p.generator(i)?, &shift, "extension")?;
    Ok(lhs == rhs)
}
