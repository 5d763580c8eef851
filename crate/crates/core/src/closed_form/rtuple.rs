//! The coefficient family `R(b, i)`: tuples `(u_2, ..., u_i)` with every
//! entry in `0..=b`, where an entry equal to `b` forces all earlier entries
//! to be zero.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RTuple {
    /// `entries[k]` is `u_{k+2}`.
    pub entries: Vec<u32>,
}

impl RTuple {
    pub fn new(entries: Vec<u32>) -> Self {
        RTuple { entries }
    }

    /// `sum u_j`.
    pub fn length(&self) -> u64 {
        self.entries.iter().map(|&u| u64::from(u)).sum()
    }

    /// Whether the tuple belongs to `R(b, entries.len() + 1)`.
    pub fn is_member(&self, b: u32) -> bool {
        self.entries.iter().enumerate().all(|(j, &u)| {
            u < b || (u == b && self.entries[..j].iter().all(|&v| v == 0))
        })
    }
}

/// `|R(b, i)| = r_b(i)`, computed in `u64` for capacity checks.
fn family_size(b: u32, i: usize) -> Option<u64> {
    (0..i).try_fold(0u64, |r, _| r.checked_mul(u64::from(b))?.checked_add(1))
}

/// All of `R(b, i)` in lexicographic order on `(u_2, ..., u_i)`.
pub fn enumerate_r(b: u32, i: usize, cap: u64) -> Result<Vec<RTuple>> {
    if b < 2 {
        return Err(Error::BaseTooSmall { b: b.to_string() });
    }
    if i < 2 {
        return Err(Error::LengthTooSmall { n: i });
    }
    let size = family_size(b, i).filter(|&s| s <= cap).ok_or(Error::Capacity {
        what: "R(b, i) enumeration",
        requested: family_size(b, i).map_or_else(|| "more than 2^64".into(), |s| s.to_string()),
        cap,
    })?;
    let mut out = Vec::with_capacity(size as usize);
    let mut prefix = Vec::with_capacity(i - 1);
    extend(b, i - 1, &mut prefix, true, &mut out);
    debug_assert_eq!(out.len() as u64, size);
    Ok(out)
}

fn extend(b: u32, width: usize, prefix: &mut Vec<u32>, all_zero: bool, out: &mut Vec<RTuple>) {
    if prefix.len() == width {
        out.push(RTuple::new(prefix.clone()));
        return;
    }
    let top = if all_zero { b } else { b - 1 };
    for u in 0..=top {
        prefix.push(u);
        extend(b, width, prefix, all_zero && u == 0, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Builds `R(b, i)` from `R(b, i - 1) x {0..b-1}` plus `(0, ..., 0, b)`.
    fn by_recurrence(b: u32, i: usize) -> BTreeSet<Vec<u32>> {
        let mut set: BTreeSet<Vec<u32>> = (0..=b).map(|u| vec![u]).collect();
        for width in 2..i {
            let mut next = BTreeSet::new();
            for t in &set {
                for u in 0..b {
                    let mut t = t.clone();
                    t.push(u);
                    next.insert(t);
                }
            }
            let mut last = vec![0; width];
            last[width - 1] = b;
            next.insert(last);
            set = next;
        }
        set
    }

    fn repunit(b: u64, i: usize) -> u64 {
        (0..i).fold(0, |r, _| r * b + 1)
    }

    #[test]
    fn small_families() {
        let r22: Vec<_> = enumerate_r(2, 2, 100).unwrap().into_iter().map(|t| t.entries).collect();
        assert_eq!(r22, vec![vec![0], vec![1], vec![2]]);

        let r23: Vec<_> = enumerate_r(2, 3, 100).unwrap().into_iter().map(|t| t.entries).collect();
        let expected: BTreeSet<Vec<u32>> = [
            vec![0, 0],
            vec![1, 0],
            vec![2, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![0, 2],
        ]
        .into_iter()
        .collect();
        assert_eq!(r23.iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert_eq!(r23.len(), 7);
        assert_eq!(enumerate_r(3, 4, 100).unwrap().len(), 40);
    }

    #[test]
    fn lexicographic_and_matches_recurrence() {
        for b in 2..=5 {
            for i in 2..=6 {
                let got: Vec<Vec<u32>> =
                    enumerate_r(b, i, 1 << 20).unwrap().into_iter().map(|t| t.entries).collect();
                assert!(got.windows(2).all(|w| w[0] < w[1]));
                let want: Vec<Vec<u32>> = by_recurrence(b, i).into_iter().collect();
                assert_eq!(got, want, "b={b} i={i}");
                assert_eq!(got.len() as u64, repunit(u64::from(b), i));
            }
        }
    }

    #[test]
    fn membership_predicate() {
        assert!(RTuple::new(vec![0, 0, 3]).is_member(3));
        assert!(!RTuple::new(vec![1, 0, 3]).is_member(3));
        assert!(!RTuple::new(vec![4]).is_member(3));
        for t in enumerate_r(4, 4, 1000).unwrap() {
            assert!(t.is_member(4));
        }
    }

    #[test]
    fn capacity_and_domain_errors() {
        assert!(matches!(enumerate_r(5, 7, 1000), Err(Error::Capacity { .. })));
        assert!(matches!(enumerate_r(1, 3, 1000), Err(Error::BaseTooSmall { .. })));
        assert!(matches!(enumerate_r(2, 1, 1000), Err(Error::LengthTooSmall { .. })));
    }
}
