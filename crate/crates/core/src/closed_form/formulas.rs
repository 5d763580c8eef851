//! Frobenius number, genus, Apéry sum, pseudo-Frobenius numbers and the
//! maximal Apéry elements, each in O(n) arithmetic without touching the
//! Apéry set itself.

use crate::arith::GrepunitParams;
use crate::error::{Error, Result};
use crate::report::{InvariantReport, Source};
use crate::scalar::{self, Scalar};

fn small<T: Scalar>(k: usize) -> Result<T> {
    scalar::from_usize(k, "index")
}

/// `(n-1)(b^n-1-a) + a a_1` below the threshold `a < b^n - 1`, and
/// `b^n-1-a + a a_1` above it.
pub fn frobenius_closed<T: Scalar>(p: &GrepunitParams<T>) -> Result<T> {
    let threshold = p.b_pow_n_minus_one()?;
    if *p.a() == threshold {
        // gcd(r_b(n), b^n - 1) = r_b(n) > 1, so validation already excludes this.
        return Err(Error::Internal("a = b^n - 1 admits no grepunit semigroup"));
    }
    let gap = scalar::sub(&threshold, p.a(), "frobenius")?;
    let a_a1 = scalar::mul(p.a(), p.a1(), "frobenius")?;
    let lead = if *p.a() < threshold {
        scalar::mul(&small(p.n() - 1)?, &gap, "frobenius")?
    } else {
        gap
    };
    scalar::add(&lead, &a_a1, "frobenius")
}

/// `((n-1) b^n + (a_1 - 1) a) / 2`.
pub fn genus_closed<T: Scalar>(p: &GrepunitParams<T>) -> Result<T> {
    let bn = scalar::pow(p.b(), p.n(), "genus")?;
    let left = scalar::mul(&small(p.n() - 1)?, &bn, "genus")?;
    let right = scalar::mul(&scalar::sub(p.a1(), &T::one(), "genus")?, p.a(), "genus")?;
    let numerator = scalar::add(&left, &right, "genus")?;
    scalar::half_exact(&numerator, "genus numerator is odd")
}

/// `(b^i + b^(i-(j-1))) / 2` for `j = 2, ..., i`.
///
/// These are the per-generator weights of the Apéry sum, and their sum is the
/// total factorization length over `R(b, i)`.
pub fn apery_sum_coefficients<T: Scalar>(b: &T, i: usize) -> Result<Vec<T>> {
    let two = T::one() + T::one();
    if *b < two {
        return Err(Error::BaseTooSmall { b: b.to_string() });
    }
    if i < 2 {
        return Err(Error::LengthTooSmall { n: i });
    }
    let bi = scalar::pow(b, i, "Apéry sum coefficient")?;
    (2..=i)
        .map(|j| {
            let bj = scalar::pow(b, i - (j - 1), "Apéry sum coefficient")?;
            let s = scalar::add(&bi, &bj, "Apéry sum coefficient")?;
            scalar::half_exact(&s, "Apéry sum coefficient is odd")
        })
        .collect()
}

/// `sum_{j=2}^n (b^n + b^(n-(j-1)))/2 * a_j`.
pub fn apery_sum_closed<T: Scalar>(p: &GrepunitParams<T>) -> Result<T> {
    let coeffs = apery_sum_coefficients(p.b(), p.n())?;
    let gens = p.generators()?;
    coeffs
        .iter()
        .zip(&gens[1..])
        .try_fold(T::zero(), |acc, (c, g)| {
            scalar::add(&acc, &scalar::mul(c, g, "Apéry sum")?, "Apéry sum")
        })
}

/// Total of `u_2 + ... + u_i` over all of `R(b, i)`.
pub fn length_sum_closed<T: Scalar>(b: &T, i: usize) -> Result<T> {
    apery_sum_coefficients(b, i)?
        .iter()
        .try_fold(T::zero(), |acc, c| scalar::add(&acc, c, "length sum"))
}

/// `alpha_i = a_i + (b-1) sum_{j=i}^n a_j` for `i = 2, ..., n`, in index
/// order.
pub fn maximal_apery_closed<T: Scalar>(p: &GrepunitParams<T>) -> Result<Vec<T>> {
    let gens = p.generators()?;
    let b_minus_one = scalar::sub(p.b(), &T::one(), "maximal Apéry")?;
    let mut out = Vec::with_capacity(p.n() - 1);
    let mut tail = T::zero();
    // walk i = n down to 2, accumulating the suffix sum
    for i in (2..=p.n()).rev() {
        tail = scalar::add(&tail, &gens[i - 1], "maximal Apéry")?;
        let alpha = scalar::add(
            &gens[i - 1],
            &scalar::mul(&b_minus_one, &tail, "maximal Apéry")?,
            "maximal Apéry",
        )?;
        out.push(alpha);
    }
    out.reverse();
    Ok(out)
}

/// `{ (n-i+1)(b^n-1-a) + a a_1 : i = 2, ..., n }`, ascending.
pub fn pseudo_frobenius_closed<T: Scalar>(p: &GrepunitParams<T>) -> Result<Vec<T>> {
    let gap = scalar::sub(&p.b_pow_n_minus_one()?, p.a(), "pseudo-Frobenius")?;
    let a_a1 = scalar::mul(p.a(), p.a1(), "pseudo-Frobenius")?;
    let mut pf = (2..=p.n())
        .map(|i| {
            let k = small::<T>(p.n() - i + 1)?;
            scalar::add(&scalar::mul(&k, &gap, "pseudo-Frobenius")?, &a_a1, "pseudo-Frobenius")
        })
        .collect::<Result<Vec<T>>>()?;
    pf.sort();
    pf.dedup();
    if pf.len() != p.n() - 1 {
        return Err(Error::Internal("pseudo-Frobenius values collapsed"));
    }
    Ok(pf)
}

/// All closed-form invariants of `S_a(b, n)` in one report.
pub fn invariant_report_closed<T: Scalar>(p: &GrepunitParams<T>) -> Result<InvariantReport<T>> {
    let frobenius = frobenius_closed(p)?;
    let genus = genus_closed(p)?;
    let pseudo_frobenius = pseudo_frobenius_closed(p)?;
    // g + n(S) = F + 1
    let n_of_s = scalar::sub(
        &scalar::add(&frobenius, &T::one(), "n(S)")?,
        &genus,
        "n(S)",
    )?;
    let e = small::<T>(p.n())?;
    let wilf_bound = scalar::sub(&scalar::mul(&e, &n_of_s, "Wilf bound")?, &T::one(), "Wilf bound")?;
    Ok(InvariantReport {
        params: p.clone(),
        generators: p.generators()?,
        wilf_ok: frobenius <= wilf_bound,
        frobenius,
        genus,
        type_: pseudo_frobenius.len(),
        pseudo_frobenius,
        apery_sum: apery_sum_closed(p)?,
        n_of_s,
        source: Source::ClosedForm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::validate;
    use num_bigint::BigInt;

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius_closed(&validate(1i64, 2, 3).unwrap()).unwrap(), 19);
        // a > b^n - 1 branch: <3, 8> has F = 3*8 - 3 - 8
        assert_eq!(frobenius_closed(&validate(5i64, 2, 2).unwrap()).unwrap(), 13);
        assert_eq!(frobenius_closed(&validate(3i64, 3, 4).unwrap()).unwrap(), 351);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_closed(&validate(3i64, 3, 4).unwrap()).unwrap(), 180);
        assert_eq!(genus_closed(&validate(1i64, 2, 3).unwrap()).unwrap(), 11);
        assert_eq!(genus_closed(&validate(5i64, 2, 2).unwrap()).unwrap(), 7);
    }

    #[test]
    fn apery_sum_examples() {
        assert_eq!(apery_sum_coefficients(&3i64, 4).unwrap(), vec![54, 45, 42]);
        assert_eq!(apery_sum_closed(&validate(3i64, 3, 4).unwrap()).unwrap(), 7980);
        assert_eq!(apery_sum_closed(&validate(1i64, 2, 3).unwrap()).unwrap(), 98);
    }

    #[test]
    fn length_sums() {
        assert_eq!(length_sum_closed(&2i64, 2).unwrap(), 3);
        assert_eq!(length_sum_closed(&2i64, 3).unwrap(), 11);
        assert_eq!(length_sum_closed(&3i64, 4).unwrap(), 141);
    }

    #[test]
    fn pf_and_maximals() {
        let p = validate(1i64, 2, 3).unwrap();
        assert_eq!(pseudo_frobenius_closed(&p).unwrap(), vec![13, 19]);
        assert_eq!(maximal_apery_closed(&p).unwrap(), vec![26, 20]);

        let p = validate(3i64, 3, 4).unwrap();
        assert_eq!(pseudo_frobenius_closed(&p).unwrap(), vec![197, 274, 351]);
        let alpha = maximal_apery_closed(&p).unwrap();
        assert_eq!(alpha[0], 391);
        for w in alpha.windows(2) {
            assert_eq!(w[0] - w[1], 80 - 3);
        }

        let p = validate(7i64, 2, 2).unwrap();
        assert_eq!(pseudo_frobenius_closed(&p).unwrap(), vec![frobenius_closed(&p).unwrap()]);
    }

    #[test]
    fn reports() {
        let r = invariant_report_closed(&validate(1i64, 2, 3).unwrap()).unwrap();
        assert_eq!(r.frobenius, 19);
        assert_eq!(r.genus, 11);
        assert_eq!(r.n_of_s, 9);
        assert_eq!(r.type_, 2);
        assert!(r.wilf_ok);
        assert_eq!(r.source, Source::ClosedForm);

        let r = invariant_report_closed(&validate(3i64, 3, 4).unwrap()).unwrap();
        assert_eq!(r.genus, 180);
        assert_eq!(r.type_, 3);
        assert_eq!(r.apery_sum, 7980);
    }

    #[test]
    fn overflow_vs_bigint() {
        let p = validate(17i64, 10, 18).unwrap();
        assert!(matches!(genus_closed(&p), Err(Error::Overflow { .. })));
        let q = validate(BigInt::from(17), BigInt::from(10), 18).unwrap();
        let g = genus_closed(&q).unwrap();
        // (17 * 10^18 + (r_10(18) - 1) * 17) / 2
        let a1: BigInt = "1".repeat(18).parse().unwrap();
        let want = (BigInt::from(17) * BigInt::from(10).pow(18) + (a1 - 1) * 17) / 2;
        assert_eq!(g, want);
    }
}
