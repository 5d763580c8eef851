//! A brute-force numerical-semigroup engine over `u64`.
//!
//! Nothing in here calls into `closed_form`; it only knows generating sets.

mod analysis;
mod apery;
mod semigroup;
mod sieve;

pub use analysis::{
    frobenius_oracle, genus_oracle, length_set_oracle, n_of_s_oracle, pf_oracle, wilf_oracle,
    Analysis, WilfData,
};
pub use apery::apery_oracle;
pub use semigroup::{minimal_generators_oracle, GenericSemigroup};
pub use sieve::{sieve, MembershipSieve};

use crate::arith::GrepunitParams;
use crate::error::Result;
use crate::limits::Limits;
use crate::report::{InvariantReport, Source};
use crate::scalar::{self, Scalar};

/// The semigroup generated by `a_1, ..., a_n`, as the oracle sees it.
pub fn grepunit_semigroup<T: Scalar>(p: &GrepunitParams<T>) -> Result<GenericSemigroup> {
    let gens = p
        .generators()?
        .iter()
        .map(|g| scalar::to_u64(g, "generator for oracle"))
        .collect::<Result<Vec<u64>>>()?;
    GenericSemigroup::new(gens)
}

fn from_i64<T: Scalar>(x: i64) -> Result<T> {
    T::from_i64(x).ok_or(crate::error::Error::Overflow { op: "oracle value" })
}

/// The same report as the closed-form path, computed by brute force.
pub fn invariant_report_oracle<T: Scalar>(
    p: &GrepunitParams<T>,
    limits: &Limits,
) -> Result<InvariantReport<T>> {
    let s = grepunit_semigroup(p)?;
    let analysis = Analysis::new(&s, limits)?;
    let wilf = analysis.wilf(limits)?;
    let generators = minimal_generators_oracle(s.gens(), limits)?
        .into_iter()
        .map(|g| scalar::from_u64(g, "oracle value"))
        .collect::<Result<Vec<T>>>()?;
    let pseudo_frobenius = analysis
        .pseudo_frobenius()?
        .into_iter()
        .map(from_i64)
        .collect::<Result<Vec<T>>>()?;
    let apery_sum: u128 = analysis.apery().values().map(|&w| u128::from(w)).sum();
    Ok(InvariantReport {
        params: p.clone(),
        generators,
        frobenius: from_i64(analysis.frobenius())?,
        genus: scalar::from_u64(analysis.genus(), "oracle value")?,
        type_: pseudo_frobenius.len(),
        pseudo_frobenius,
        apery_sum: T::from_u128(apery_sum).ok_or(crate::error::Error::Overflow { op: "oracle value" })?,
        n_of_s: scalar::from_u64(analysis.n_of_s(), "oracle value")?,
        wilf_ok: wilf.holds,
        source: Source::Oracle,
    })
}
