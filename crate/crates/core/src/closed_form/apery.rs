use std::collections::BTreeSet;

use crate::apery::{AperyElement, AperyTable};
use crate::arith::GrepunitParams;
use crate::closed_form::rtuple::{enumerate_r, RTuple};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

fn small_base<T: Scalar>(p: &GrepunitParams<T>) -> Result<u32> {
    p.b().to_u32().ok_or_else(|| Error::Capacity {
        what: "base for R(b, n) enumeration",
        requested: p.b().to_string(),
        cap: u64::from(u32::MAX),
    })
}

fn check_modulus<T: Scalar>(a1: &T, cap: u64) -> Result<usize> {
    match a1.to_u64() {
        Some(m) if m <= cap => Ok(m as usize),
        _ => Err(Error::Capacity {
            what: "Apéry table size",
            requested: a1.to_string(),
            cap,
        }),
    }
}

fn residue<T: Scalar>(value: &T, modulus: &T) -> Result<usize> {
    value
        .mod_floor(modulus)
        .to_usize()
        .ok_or(Error::Internal("residue does not fit usize"))
}

/// Slot each element into its residue class. Two elements in one class, or an
/// empty class, contradict the Apéry set structure.
fn into_table<T: Scalar>(
    modulus: T,
    size: usize,
    elements: Vec<AperyElement<T>>,
) -> Result<AperyTable<T>> {
    let mut slots: Vec<Option<AperyElement<T>>> = vec![None; size];
    for e in elements {
        let r = residue(&e.value, &modulus)?;
        if slots[r].replace(e).is_some() {
            return Err(Error::Internal("two Apéry elements share a residue class"));
        }
    }
    let elements = slots
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Internal("a residue class has no Apéry element"))?;
    Ok(AperyTable { modulus, elements })
}

fn combine<T: Scalar>(coeffs: &RTuple, gens: &[T]) -> Result<T> {
    let mut acc = T::zero();
    for (u, g) in coeffs.entries.iter().zip(gens) {
        let term = scalar::mul(&scalar::from_u64(u64::from(*u), "Apéry element")?, g, "Apéry element")?;
        acc = scalar::add(&acc, &term, "Apéry element")?;
    }
    Ok(acc)
}

/// `Ap(S_a(b, n), a_1) = { sum_{j>=2} u_j a_j : (u_2, ..., u_n) in R(b, n) }`.
///
/// Refuses with [`Error::Capacity`] when `a_1` exceeds `cap`.
pub fn apery_closed<T: Scalar>(p: &GrepunitParams<T>, cap: u64) -> Result<AperyTable<T>> {
    let size = check_modulus(p.a1(), cap)?;
    let b = small_base(p)?;
    let gens = p.generators()?;
    let elements = enumerate_r(b, p.n(), cap)?
        .into_iter()
        .map(|t| {
            Ok(AperyElement {
                value: combine(&t, &gens[1..])?,
                coeffs: Some(t),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    into_table(p.a1().clone(), size, elements)
}

/// Lift `Ap(S_a(b, i-1))`, with its factorization lengths, to
/// `Ap(S_a(b, i))`: every `w' + b^(i-1) m(w') + u a_i` with `u < b`, plus
/// `b a_i`.
pub fn lift_apery<T: Scalar>(
    prev: &AperyTable<T>,
    next: &GrepunitParams<T>,
    cap: u64,
) -> Result<AperyTable<T>> {
    let i = next.n();
    if i < 3 {
        return Err(Error::ParamMismatch(format!("recursive lift needs i >= 3, got {i}")));
    }
    let size = check_modulus(next.a1(), cap)?;
    let b = small_base(next)?;
    let a_i = next.generator(i)?;
    let shift = scalar::pow(next.b(), i - 1, "Apéry lift")?;

    let mut elements = Vec::with_capacity(size);
    for w in &prev.elements {
        let coeffs = w
            .coeffs
            .as_ref()
            .ok_or_else(|| Error::ParamMismatch("previous table carries no lengths".into()))?;
        if coeffs.entries.len() != i - 2 {
            return Err(Error::ParamMismatch(format!(
                "previous table has tuples of width {}, expected {}",
                coeffs.entries.len(),
                i - 2
            )));
        }
        let len = scalar::from_u64(coeffs.length(), "Apéry lift")?;
        let base = scalar::add(&w.value, &scalar::mul(&shift, &len, "Apéry lift")?, "Apéry lift")?;
        let mut value = base;
        for u in 0..b {
            let mut entries = coeffs.entries.clone();
            entries.push(u);
            elements.push(AperyElement {
                value: value.clone(),
                coeffs: Some(RTuple::new(entries)),
            });
            value = scalar::add(&value, &a_i, "Apéry lift")?;
        }
    }
    let mut top = vec![0; i - 1];
    top[i - 2] = b;
    elements.push(AperyElement {
        value: scalar::mul(next.b(), &a_i, "Apéry lift")?,
        coeffs: Some(RTuple::new(top)),
    });
    into_table(next.a1().clone(), size, elements)
}

/// Build `Ap(S_a(b, i))` from `Ap(S_a(b, i-1))`.
///
/// Both triples must be valid and differ only in `n` (by one). The table for
/// `prev` comes from [`apery_closed`], which supplies the lengths.
pub fn apery_recursive<T: Scalar>(
    prev: &GrepunitParams<T>,
    next: &GrepunitParams<T>,
    cap: u64,
) -> Result<AperyTable<T>> {
    if prev.a() != next.a() || prev.b() != next.b() || prev.n() + 1 != next.n() {
        return Err(Error::ParamMismatch(format!(
            "({}, {}, {}) does not precede ({}, {}, {})",
            prev.a(),
            prev.b(),
            prev.n(),
            next.a(),
            next.b(),
            next.n()
        )));
    }
    let table = apery_closed(prev, cap)?;
    lift_apery(&table, next, cap)
}

/// Every Apéry element has exactly one factorization length, the one its
/// `R(b, n)` tuple predicts. `length_set` must enumerate all factorization
/// lengths of a value over `a_1, ..., a_n`.
pub fn homogeneity_witness<T, F>(p: &GrepunitParams<T>, cap: u64, mut length_set: F) -> Result<bool>
where
    T: Scalar,
    F: FnMut(&T) -> Result<BTreeSet<u64>>,
{
    let table = apery_closed(p, cap)?;
    for e in &table.elements {
        let predicted = e.length().ok_or(Error::Internal("closed Apéry element without tuple"))?;
        let lengths = length_set(&e.value)?;
        if lengths.len() != 1 || !lengths.contains(&predicted) {
            return Ok(false);
        }
    }
    Ok(true)
}
