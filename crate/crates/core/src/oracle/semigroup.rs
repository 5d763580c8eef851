use bitvec::prelude::*;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A numerical semigroup given by any finite generating set with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericSemigroup {
    gens: Vec<u64>,
}

impl GenericSemigroup {
    /// Sorts and deduplicates `gens`; rejects zeros, the empty set and a gcd
    /// other than 1.
    pub fn new(gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut gens: Vec<u64> = gens.into_iter().collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(Error::BadGenerators);
        }
        let gcd = gens.iter().fold(0, |g, &x| g.gcd(&x));
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }
        Ok(GenericSemigroup { gens })
    }

    /// Ascending, possibly non-minimal.
    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    /// The smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn max_gen(&self) -> u64 {
        *self.gens.last().unwrap()
    }
}

/// The unique minimal generating system: drop every element that is a sum of
/// smaller kept ones.
pub fn minimal_generators_oracle(gens: &[u64], limits: &Limits) -> Result<Vec<u64>> {
    let s = GenericSemigroup::new(gens.iter().copied())?;
    let top = s.max_gen();
    if top >= limits.sieve_bits {
        return Err(Error::Capacity {
            what: "minimal generator sieve",
            requested: top.to_string(),
            cap: limits.sieve_bits,
        });
    }
    let top = top as usize;
    let mut member = bitvec![0; top + 1];
    member.set(0, true);
    let mut kept = Vec::new();
    for &g in s.gens() {
        let g = g as usize;
        if member[g] {
            continue;
        }
        kept.push(g as u64);
        // unbounded knapsack step: allow any number of copies of g
        for x in g..=top {
            if member[x - g] {
                member.set(x, true);
            }
        }
    }
    Ok(kept)
}
