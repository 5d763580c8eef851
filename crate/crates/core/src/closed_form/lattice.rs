//! The relation lattice of `S_a(b, n)` and the affine map the semigroup is
//! closed under.

use crate::arith::GrepunitParams;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// `(n-1) x n` integer matrix whose rows span the relations among
/// `a_1, ..., a_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMatrix<T> {
    pub rows: Vec<Vec<T>>,
}

impl<T: Scalar> LatticeMatrix<T> {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `A v = 0`.
    pub fn annihilates(&self, v: &[T]) -> Result<bool> {
        for row in &self.rows {
            if row.len() != v.len() {
                return Err(Error::ParamMismatch(format!(
                    "row of width {} against vector of length {}",
                    row.len(),
                    v.len()
                )));
            }
            let mut acc = T::zero();
            for (x, y) in row.iter().zip(v) {
                acc = scalar::add(&acc, &scalar::mul(x, y, "matrix product")?, "matrix product")?;
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The square matrix left after deleting column `skip`.
    fn without_column(&self, skip: usize) -> Vec<Vec<T>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != skip)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect()
    }
}

/// Rows `(.., b, -(b+1), 1, ..)` shifted one column at a time, closed by the
/// row `((a+1), 0, .., 0, b, -(b+1))`.
pub fn lattice_matrix<T: Scalar>(p: &GrepunitParams<T>) -> Result<LatticeMatrix<T>> {
    let n = p.n();
    if n < 3 {
        return Err(Error::UnsupportedDimension { n });
    }
    let b = p.b().clone();
    let neg_b1 = -scalar::add(&b, &T::one(), "lattice matrix")?;
    let mut rows = Vec::with_capacity(n - 1);
    for i in 0..n - 2 {
        let mut row = vec![T::zero(); n];
        row[i] = b.clone();
        row[i + 1] = neg_b1.clone();
        row[i + 2] = T::one();
        rows.push(row);
    }
    let mut last = vec![T::zero(); n];
    last[0] = scalar::add(p.a(), &T::one(), "lattice matrix")?;
    last[n - 2] = b;
    last[n - 1] = neg_b1;
    rows.push(last);
    Ok(LatticeMatrix { rows })
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
pub fn determinant<T: Scalar>(mut m: Vec<Vec<T>>) -> Result<T> {
    let k = m.len();
    if m.iter().any(|r| r.len() != k) {
        return Err(Error::ParamMismatch("determinant of a non-square matrix".into()));
    }
    if k == 0 {
        return Ok(T::one());
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for c in 0..k - 1 {
        if m[c][c].is_zero() {
            match (c + 1..k).find(|&r| !m[r][c].is_zero()) {
                Some(r) => {
                    m.swap(c, r);
                    sign = -sign;
                }
                None => return Ok(T::zero()),
            }
        }
        for r in c + 1..k {
            for j in c + 1..k {
                let lhs = scalar::mul(&m[r][j], &m[c][c], "determinant")?;
                let rhs = scalar::mul(&m[r][c], &m[c][j], "determinant")?;
                let num = scalar::sub(&lhs, &rhs, "determinant")?;
                if !(num.clone() % prev.clone()).is_zero() {
                    return Err(Error::Internal("inexact Bareiss division"));
                }
                m[r][j] = num / prev.clone();
            }
            m[r][c] = T::zero();
        }
        prev = m[c][c].clone();
    }
    let det = m[k - 1][k - 1].clone();
    Ok(if sign.is_negative() { -det } else { det })
}

/// `minors[k]` is the determinant of the matrix with column `k` deleted
/// (no cofactor sign applied).
pub fn maximal_minors<T: Scalar>(m: &LatticeMatrix<T>) -> Result<Vec<T>> {
    let (r, c) = (m.nrows(), m.ncols());
    if r + 1 != c || m.rows.iter().any(|row| row.len() != c) {
        return Err(Error::ParamMismatch(format!(
            "maximal minors need an (n-1) x n matrix, got {r} x {c}"
        )));
    }
    (0..c).map(|k| determinant(m.without_column(k))).collect()
}

/// The translation `a - (b^n - 1)` of the affine map `x -> b x + a - (b^n - 1)`.
pub fn affine_translation<T: Scalar>(p: &GrepunitParams<T>) -> Result<T> {
    scalar::sub(p.a(), &p.b_pow_n_minus_one()?, "affine translation")
}

/// Image of `x` under `x -> b x + a - (b^n - 1)`.
pub fn affine_image<T: Scalar>(p: &GrepunitParams<T>, x: &T) -> Result<T> {
    scalar::add(
        &scalar::mul(p.b(), x, "affine map")?,
        &affine_translation(p)?,
        "affine map",
    )
}

/// The affine map sends `a_j` to `a_{j+1}` for `j = 1, ..., n-1`.
pub fn generator_shift_identity<T: Scalar>(p: &GrepunitParams<T>) -> Result<bool> {
    for j in 1..p.n() {
        if affine_image(p, &p.generator(j)?)? != p.generator(j + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every nonzero `s <= bound` of the semigroup maps back into it, with
/// membership decided by `member`.
pub fn affine_closure_check<T, F>(p: &GrepunitParams<T>, bound: &T, mut member: F) -> Result<bool>
where
    T: Scalar,
    F: FnMut(&T) -> Result<bool>,
{
    if !generator_shift_identity(p)? {
        return Ok(false);
    }
    let mut s = T::one();
    while s <= *bound {
        if member(&s)? {
            let image = affine_image(p, &s)?;
            if image.is_negative() || !member(&image)? {
                return Ok(false);
            }
        }
        s = scalar::add(&s, &T::one(), "affine closure")?;
    }
    Ok(true)
}
