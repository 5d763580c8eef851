use bitvec::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::GenericSemigroup;

/// Exact membership for `0..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipSieve {
    bound: u64,
    member: BitVec,
}

impl MembershipSieve {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `None` past the bound.
    pub fn contains(&self, x: u64) -> Option<bool> {
        (x <= self.bound).then(|| self.member[x as usize])
    }

    /// Like [`contains`](Self::contains) but a query past the bound is a
    /// capacity error, and negative integers are never members.
    pub fn is_member(&self, x: i64) -> Result<bool> {
        if x < 0 {
            return Ok(false);
        }
        self.contains(x as u64).ok_or(Error::Capacity {
            what: "membership query past sieve bound",
            requested: x.to_string(),
            cap: self.bound,
        })
    }

    /// Iterates `(x, is_member)` for `x = 0..=bound`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, bool)> + '_ {
        self.member.iter().by_vals().enumerate().map(|(x, m)| (x as u64, m))
    }
}

/// `member[x] = member[x - g]` for some generator `g`, with `member[0] = true`.
pub fn sieve(s: &GenericSemigroup, bound: u64, limits: &Limits) -> Result<MembershipSieve> {
    if bound >= limits.sieve_bits {
        return Err(Error::Capacity {
            what: "membership sieve",
            requested: (bound + 1).to_string(),
            cap: limits.sieve_bits,
        });
    }
    let len = bound as usize + 1;
    let mut member = bitvec![0; len];
    member.set(0, true);
    let gens: Vec<usize> = s.gens().iter().map(|&g| g as usize).collect();
    for x in 1..len {
        if gens.iter().take_while(|&&g| g <= x).any(|&g| member[x - g]) {
            member.set(x, true);
        }
    }
    Ok(MembershipSieve { bound, member })
}
