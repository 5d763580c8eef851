use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use grepunit::{validate, Error, Int, Limits};

use crate::checks::{invalid_outcomes, run_checks, Check, Status, VerifyOutcome};

/// Inclusive range written `lo..hi`; a bare `k` means `k..k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: Int,
    pub hi: Int,
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<Int>()
                .map_err(|e| format!("bad range bound `{t}`: {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let k = parse(s)?;
                (k, k)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl IntRange {
    pub fn iter(&self) -> impl Iterator<Item = Int> {
        self.lo..=self.hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub a: IntRange,
    pub b: IntRange,
    pub n: IntRange,
    pub skip_invalid: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("malformed sweep: {0}")]
    Spec(String),
    #[error("invalid triple (a={a}, b={b}, n={n}): {source}")]
    Invalid {
        a: Int,
        b: Int,
        n: Int,
        source: Error,
    },
}

impl SweepSpec {
    pub fn check(&self) -> Result<(), SweepError> {
        if self.b.lo < 2 {
            return Err(SweepError::Spec(format!("b range {} must start at 2 or above", self.b)));
        }
        if self.n.lo < 2 {
            return Err(SweepError::Spec(format!("n range {} must start at 2 or above", self.n)));
        }
        if self.n.hi > 64 {
            return Err(SweepError::Spec(format!("n range {} is beyond any feasible sweep", self.n)));
        }
        if self.checks.is_empty() {
            return Err(SweepError::Spec("no checks requested".into()));
        }
        Ok(())
    }

    /// Grid points in ascending `(b, n, a)` order.
    pub fn triples(&self) -> Vec<(Int, Int, usize)> {
        let mut out = Vec::new();
        for b in self.b.iter() {
            for n in self.n.iter() {
                for a in self.a.iter() {
                    out.push((a, b, n as usize));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub triples: usize,
    pub invalid_triples: usize,
    pub rows: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub skipped_capacity: usize,
    pub invalid_params: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn tally(rows: &[VerifyOutcome]) -> Self {
        let mut s = Summary {
            rows: rows.len(),
            ..Summary::default()
        };
        for r in rows {
            match r.status {
                Status::Match => s.matches += 1,
                Status::Mismatch => s.mismatches += 1,
                Status::SkippedCapacity => s.skipped_capacity += 1,
                Status::InvalidParams => s.invalid_params += 1,
                Status::NotApplicable => s.not_applicable += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub rows: Vec<VerifyOutcome>,
    pub summary: Summary,
}

/// Evaluate the grid in parallel; rows come back in canonical grid order.
pub fn run_sweep(spec: &SweepSpec, limits: &Limits) -> Result<SweepResult, SweepError> {
    spec.check()?;
    let triples = spec.triples();
    let per_triple: Vec<Result<(bool, Vec<VerifyOutcome>), SweepError>> = triples
        .par_iter()
        .map(|&(a, b, n)| match validate(a, b, n) {
            Ok(p) => Ok((true, run_checks(&p, &spec.checks, limits))),
            Err(e) if spec.skip_invalid => Ok((false, invalid_outcomes(a, b, n, &spec.checks, &e))),
            Err(source) => Err(SweepError::Invalid {
                a,
                b,
                n: n as Int,
                source,
            }),
        })
        .collect();

    let mut rows = Vec::new();
    let mut invalid_triples = 0;
    for r in per_triple {
        let (valid, mut chunk) = r?;
        if !valid {
            invalid_triples += 1;
        }
        rows.append(&mut chunk);
    }
    let mut summary = Summary::tally(&rows);
    summary.triples = triples.len();
    summary.invalid_triples = invalid_triples;
    Ok(SweepResult { rows, summary })
}
