//! Apéry tables: one least semigroup element per residue class.

use crate::closed_form::RTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyElement<T> {
    pub value: T,
    /// `(u_2, ..., u_n)` with `value = sum u_j a_j`. Only the closed-form
    /// construction knows these; oracle tables leave them empty.
    pub coeffs: Option<RTuple>,
}

impl<T> AperyElement<T> {
    /// Factorization length `sum u_j`, when the coefficients are known.
    pub fn length(&self) -> Option<u64> {
        self.coeffs.as_ref().map(RTuple::length)
    }
}

/// `Ap(S, modulus)`, stored so that `elements[r]` is the element congruent
/// to `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable<T> {
    pub modulus: T,
    pub elements: Vec<AperyElement<T>>,
}

impl<T: Clone + Ord> AperyTable<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, residue: usize) -> Option<&AperyElement<T>> {
        self.elements.get(residue)
    }

    pub fn values(&self) -> impl Iterator<Item = &T> {
        self.elements.iter().map(|e| &e.value)
    }

    pub fn sorted_values(&self) -> Vec<T> {
        let mut v: Vec<T> = self.values().cloned().collect();
        v.sort();
        v
    }

    pub fn max(&self) -> Option<&T> {
        self.values().max()
    }
}
