use crate::apery::{AperyElement, AperyTable};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::{sieve, GenericSemigroup};

/// `Ap(S, q)` as the least element of each residue class mod `q`.
///
/// Round-robin relaxation: sweep every class, push its current best through
/// each generator, and repeat until nothing improves. Values per class only
/// decrease and are bounded below, so this reaches a fixed point without any
/// a-priori bound on the Frobenius number.
pub fn apery_oracle(s: &GenericSemigroup, q: u64, limits: &Limits) -> Result<AperyTable<u64>> {
    if q == 0 {
        return Err(Error::NotInSemigroup { x: 0 });
    }
    if q > limits.apery {
        return Err(Error::Capacity {
            what: "Apéry table size",
            requested: q.to_string(),
            cap: limits.apery,
        });
    }
    if !s.gens().contains(&q) && sieve(s, q, limits)?.contains(q) != Some(true) {
        return Err(Error::NotInSemigroup { x: q });
    }

    let size = q as usize;
    let mut best = vec![u64::MAX; size];
    best[0] = 0;
    loop {
        let mut changed = false;
        for r in 0..size {
            let v = best[r];
            if v == u64::MAX {
                continue;
            }
            for &g in s.gens() {
                let w = v.checked_add(g).ok_or(Error::Overflow { op: "Apéry relaxation" })?;
                let slot = &mut best[(w % q) as usize];
                if w < *slot {
                    *slot = w;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if best.contains(&u64::MAX) {
        return Err(Error::Internal("unreachable residue class despite gcd 1"));
    }
    Ok(AperyTable {
        modulus: q,
        elements: best
            .into_iter()
            .map(|value| AperyElement { value, coeffs: None })
            .collect(),
    })
}
