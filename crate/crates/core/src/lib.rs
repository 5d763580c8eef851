//! Generalized repunit numerical semigroups `S_a(b, n)`.
//!
//! `S_a(b, n)` is generated by `a_i = r_b(n) + a r_b(i - 1)`, `i = 1, ..., n`,
//! where `r_b(l) = 1 + b + ... + b^(l-1)`; it is a numerical semigroup exactly
//! when `gcd(r_b(n), a) = 1`. The [`closed_form`] module evaluates its
//! invariants (Apéry set, Frobenius number, genus, pseudo-Frobenius numbers,
//! relation lattice) by formula; the [`oracle`] module recomputes them by
//! brute force from the generators alone.
//!
//! Arithmetic is generic over [`Scalar`]. Fixed-width types report
//! [`Error::Overflow`] instead of wrapping; [`BigInt`] never overflows.
//!
//! ```
//! use grepunit::{closed_form, validate};
//!
//! let p = validate(3i128, 3, 4).unwrap();
//! assert_eq!(p.generators().unwrap(), vec![40, 43, 52, 79]);
//! assert_eq!(closed_form::genus_closed(&p).unwrap(), 180);
//! ```

pub mod apery;
pub mod arith;
pub mod closed_form;
pub mod error;
pub mod limits;
pub mod oracle;
pub mod report;
pub mod scalar;

pub use apery::{AperyElement, AperyTable};
pub use arith::{extension_check, relation_check, repunit, validate, GrepunitParams};
pub use error::{Error, Result};
pub use limits::Limits;
pub use num_bigint::BigInt;
pub use report::{InvariantReport, Source};
pub use scalar::Scalar;

/// Default fixed-width scalar; wide enough for every realistic sweep.
pub type Int = i128;
pub type Params = GrepunitParams<Int>;
pub type Table = AperyTable<Int>;
pub type Report = InvariantReport<Int>;

pub type BigParams = GrepunitParams<BigInt>;
pub type BigTable = AperyTable<BigInt>;
pub type BigReport = InvariantReport<BigInt>;
