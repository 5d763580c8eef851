use std::fmt;

use crate::arith::GrepunitParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    ClosedForm,
    Oracle,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::ClosedForm => "closed-form",
            Source::Oracle => "oracle",
        })
    }
}

/// The standard invariants of one semigroup, tagged with how they were
/// obtained.
///
/// `genus + n_of_s = frobenius + 1` and `type_ = pseudo_frobenius.len()`
/// hold for every report either path produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport<T> {
    pub params: GrepunitParams<T>,
    pub generators: Vec<T>,
    pub frobenius: T,
    pub genus: T,
    /// Ascending.
    pub pseudo_frobenius: Vec<T>,
    pub type_: usize,
    pub apery_sum: T,
    /// Number of semigroup elements below the Frobenius number.
    pub n_of_s: T,
    /// `F <= e * n(S) - 1`.
    pub wilf_ok: bool,
    pub source: Source,
}
