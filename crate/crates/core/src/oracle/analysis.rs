use std::collections::BTreeSet;

use crate::apery::AperyTable;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::{apery_oracle, minimal_generators_oracle, sieve, GenericSemigroup, MembershipSieve};

/// Apéry set (w.r.t. the multiplicity) and a membership sieve large enough to
/// hold it, with the invariants derived from both.
///
/// Frobenius number and genus are computed twice, once from the Apéry set
/// and once by scanning the sieve, and construction fails if the two
/// disagree.
#[derive(Debug, Clone)]
pub struct Analysis {
    semigroup: GenericSemigroup,
    apery: AperyTable<u64>,
    sieve: MembershipSieve,
    frobenius: i64,
    genus: u64,
    n_of_s: u64,
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow { op: "oracle i64 conversion" })
}

impl Analysis {
    pub fn new(s: &GenericSemigroup, limits: &Limits) -> Result<Self> {
        let m = s.multiplicity();
        let apery = apery_oracle(s, m, limits)?;
        let max_w = *apery.max().expect("Apéry table is never empty");
        let bound = max_w
            .checked_add(s.max_gen())
            .ok_or(Error::Overflow { op: "sieve bound" })?;
        let sieve = sieve(s, bound, limits)?;

        let frobenius_selmer = to_i64(max_w)? - to_i64(m)?;
        let frobenius_scan = sieve
            .iter()
            .filter(|&(_, member)| !member)
            .map(|(x, _)| x as i64)
            .last()
            .unwrap_or(-1);
        if frobenius_selmer != frobenius_scan {
            return Err(Error::OracleInconsistent(format!(
                "Frobenius number {frobenius_selmer} from Apéry set, {frobenius_scan} from sieve"
            )));
        }

        // g = sum(Ap)/m - (m-1)/2, kept integral as (2 sum - m(m-1)) / 2m
        let sum: u128 = apery.values().map(|&w| u128::from(w)).sum();
        let m128 = u128::from(m);
        let numerator = 2 * sum - m128 * (m128 - 1);
        if !numerator.is_multiple_of(2 * m128) {
            return Err(Error::OracleInconsistent(format!(
                "Apéry sum {sum} does not give an integral genus for m = {m}"
            )));
        }
        let genus_selmer = (numerator / (2 * m128)) as u64;
        let genus_scan = sieve.iter().filter(|&(_, member)| !member).count() as u64;
        if genus_selmer != genus_scan {
            return Err(Error::OracleInconsistent(format!(
                "genus {genus_selmer} from Apéry set, {genus_scan} from sieve"
            )));
        }

        let n_of_s = sieve
            .iter()
            .filter(|&(x, member)| member && (x as i64) < frobenius_scan)
            .count() as u64;

        Ok(Analysis {
            semigroup: s.clone(),
            apery,
            sieve,
            frobenius: frobenius_scan,
            genus: genus_scan,
            n_of_s,
        })
    }

    pub fn semigroup(&self) -> &GenericSemigroup {
        &self.semigroup
    }

    pub fn apery(&self) -> &AperyTable<u64> {
        &self.apery
    }

    pub fn sieve(&self) -> &MembershipSieve {
        &self.sieve
    }

    /// `-1` when the semigroup is all of `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Elements strictly below the Frobenius number.
    pub fn n_of_s(&self) -> u64 {
        self.n_of_s
    }

    /// Maximal elements of the Apéry set under `x <= y iff y - x in S`.
    pub fn maximal_apery(&self) -> Result<Vec<u64>> {
        let values = self.apery.sorted_values();
        let mut out = Vec::new();
        for (i, &w) in values.iter().enumerate() {
            let mut dominated = false;
            for &v in &values[i + 1..] {
                if self.sieve.is_member(to_i64(v - w)?)? {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                out.push(w);
            }
        }
        Ok(out)
    }

    /// Pseudo-Frobenius numbers as `max - m` over the Apéry maximals,
    /// checked against the definition (non-members `x` with `x + g` in `S` for
    /// every generator `g`). Ascending.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        let m = to_i64(self.semigroup.multiplicity())?;
        let mut via_apery = self
            .maximal_apery()?
            .into_iter()
            .map(|w| Ok(to_i64(w)? - m))
            .collect::<Result<Vec<i64>>>()?;
        via_apery.sort_unstable();

        let reach = self.frobenius + to_i64(self.semigroup.max_gen())?;
        if reach <= to_i64(self.sieve.bound())? {
            let mut direct = Vec::new();
            for x in -1..=self.frobenius {
                if self.sieve.is_member(x)? {
                    continue;
                }
                let mut all = true;
                for &g in self.semigroup.gens() {
                    if !self.sieve.is_member(x + to_i64(g)?)? {
                        all = false;
                        break;
                    }
                }
                if all {
                    direct.push(x);
                }
            }
            if direct != via_apery {
                return Err(Error::OracleInconsistent(format!(
                    "pseudo-Frobenius {via_apery:?} from Apéry maximals, {direct:?} by definition"
                )));
            }
        }
        Ok(via_apery)
    }

    pub fn wilf(&self, limits: &Limits) -> Result<WilfData> {
        let e = minimal_generators_oracle(self.semigroup.gens(), limits)?.len() as u64;
        let t = self.pseudo_frobenius()?.len() as u64;
        let n = to_i64(self.n_of_s)?;
        Ok(WilfData {
            frobenius: self.frobenius,
            embedding_dimension: e,
            type_: t,
            n_of_s: self.n_of_s,
            holds: self.frobenius < to_i64(e)? * n,
            strong_holds: self.frobenius < (to_i64(t)? + 1) * n,
        })
    }
}

/// Data behind the Wilf inequality `F <= e n(S) - 1` and the type bound
/// `F <= (t + 1) n(S) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfData {
    pub frobenius: i64,
    pub embedding_dimension: u64,
    pub type_: u64,
    pub n_of_s: u64,
    pub holds: bool,
    pub strong_holds: bool,
}

pub fn frobenius_oracle(s: &GenericSemigroup, limits: &Limits) -> Result<i64> {
    Ok(Analysis::new(s, limits)?.frobenius())
}

pub fn genus_oracle(s: &GenericSemigroup, limits: &Limits) -> Result<u64> {
    Ok(Analysis::new(s, limits)?.genus())
}

pub fn n_of_s_oracle(s: &GenericSemigroup, limits: &Limits) -> Result<u64> {
    Ok(Analysis::new(s, limits)?.n_of_s())
}

pub fn pf_oracle(s: &GenericSemigroup, limits: &Limits) -> Result<Vec<i64>> {
    Analysis::new(s, limits)?.pseudo_frobenius()
}

pub fn wilf_oracle(s: &GenericSemigroup, limits: &Limits) -> Result<WilfData> {
    Analysis::new(s, limits)?.wilf(limits)
}

/// All factorization lengths of `x` over the generators of `s`; empty iff
/// `x` is not in `s`.
pub fn length_set_oracle(s: &GenericSemigroup, x: u64, limits: &Limits) -> Result<BTreeSet<u64>> {
    if x > limits.factorization {
        return Err(Error::Capacity {
            what: "factorization enumeration",
            requested: x.to_string(),
            cap: limits.factorization,
        });
    }
    let mut lengths = BTreeSet::new();
    // largest generator first; the smallest one closes each branch by division
    let gens: Vec<u64> = s.gens().iter().rev().copied().collect();
    collect_lengths(&gens, x, 0, &mut lengths);
    Ok(lengths)
}

fn collect_lengths(gens: &[u64], rest: u64, used: u64, out: &mut BTreeSet<u64>) {
    match gens {
        [] => {
            if rest == 0 {
                out.insert(used);
            }
        }
        [last] => {
            if rest.is_multiple_of(*last) {
                out.insert(used + rest / last);
            }
        }
        [g, tail @ ..] => {
            for k in 0..=rest / g {
                collect_lengths(tail, rest - k * g, used + k, out);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> GenericSemigroup {
        GenericSemigroup::new(gens.iter().copied()).unwrap()
    }

    #[test]
    fn classic_invariants() {
        let l = Limits::default();
        let a = Analysis::new(&sg(&[3, 8]), &l).unwrap();
        assert_eq!(a.frobenius(), 13);
        assert_eq!(a.genus(), 7);

        let a = Analysis::new(&sg(&[2, 3]), &l).unwrap();
        assert_eq!((a.frobenius(), a.genus(), a.n_of_s()), (1, 1, 1));
        assert_eq!(a.pseudo_frobenius().unwrap(), vec![1]);

        let a = Analysis::new(&sg(&[7, 8, 10]), &l).unwrap();
        assert_eq!((a.frobenius(), a.genus(), a.n_of_s()), (19, 11, 9));
        assert_eq!(a.maximal_apery().unwrap(), vec![20, 26]);
        assert_eq!(a.pseudo_frobenius().unwrap(), vec![13, 19]);

        let a = Analysis::new(&sg(&[40, 43, 52, 79]), &l).unwrap();
        assert_eq!(a.pseudo_frobenius().unwrap(), vec![197, 274, 351]);
        assert_eq!(a.frobenius(), 351);
        assert_eq!(a.genus(), 180);
    }

    #[test]
    fn whole_line() {
        let l = Limits::default();
        let a = Analysis::new(&sg(&[1, 4]), &l).unwrap();
        assert_eq!((a.frobenius(), a.genus(), a.n_of_s()), (-1, 0, 0));
        assert_eq!(a.pseudo_frobenius().unwrap(), vec![-1]);
        assert!(a.wilf(&l).unwrap().holds);
    }

    #[test]
    fn wilf_examples() {
        let l = Limits::default();
        let w = wilf_oracle(&sg(&[7, 8, 10]), &l).unwrap();
        assert_eq!((w.embedding_dimension, w.type_, w.n_of_s), (3, 2, 9));
        assert!(w.holds && w.strong_holds);
        let w = wilf_oracle(&sg(&[2, 3]), &l).unwrap();
        assert!(w.holds && w.strong_holds);
        // non-minimal input still uses the embedding dimension of the semigroup
        let w = wilf_oracle(&sg(&[3, 8, 11]), &l).unwrap();
        assert_eq!(w.embedding_dimension, 2);
    }

    #[test]
    fn free_functions() {
        let l = Limits::default();
        let s = sg(&[7, 8, 10]);
        assert_eq!(frobenius_oracle(&s, &l).unwrap(), 19);
        assert_eq!(genus_oracle(&s, &l).unwrap(), 11);
        assert_eq!(n_of_s_oracle(&s, &l).unwrap(), 9);
        assert_eq!(pf_oracle(&s, &l).unwrap(), vec![13, 19]);
    }

    #[test]
    fn length_sets() {
        let l = Limits::default();
        let s = sg(&[7, 8, 10]);
        assert_eq!(length_set_oracle(&s, 26, &l).unwrap(), [3].into());
        assert_eq!(length_set_oracle(&s, 0, &l).unwrap(), [0].into());
        assert!(length_set_oracle(&s, 19, &l).unwrap().is_empty());
        // 56 = 8*7 = 7*8 = 4*7 + 2*8 + 1*... lengths differ
        assert_eq!(length_set_oracle(&s, 56, &l).unwrap(), [6, 7, 8].into());
        assert!(matches!(
            length_set_oracle(&s, 10_001, &l),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn two_generator_identities() {
        let l = Limits::default();
        for p in 2u64..20 {
            for q in p + 1..40 {
                let Ok(s) = GenericSemigroup::new([p, q]) else { continue };
                let a = Analysis::new(&s, &l).unwrap();
                assert_eq!(a.frobenius(), (p * q - p - q) as i64);
                assert_eq!(a.genus(), (p - 1) * (q - 1) / 2);
                assert_eq!(a.genus() + a.n_of_s(), (a.frobenius() + 1) as u64);
            }
        }
    }
}
