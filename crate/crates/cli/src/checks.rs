//! Closed-form versus oracle comparisons for a single parameter triple.

use std::fmt;
use std::str::FromStr;

use grepunit::closed_form::{self as cf};
use grepunit::oracle::{self, Analysis, GenericSemigroup};
use grepunit::{Error, Int, Limits, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Frobenius,
    Genus,
    Apery,
    Pf,
    Type,
    Homogeneous,
    Wilf,
    Minors,
    Recursive,
    Affine,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Frobenius,
        Check::Genus,
        Check::Apery,
        Check::Pf,
        Check::Type,
        Check::Homogeneous,
        Check::Wilf,
        Check::Minors,
        Check::Recursive,
        Check::Affine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Frobenius => "frobenius",
            Check::Genus => "genus",
            Check::Apery => "apery",
            Check::Pf => "pf",
            Check::Type => "type",
            Check::Homogeneous => "homogeneous",
            Check::Wilf => "wilf",
            Check::Minors => "minors",
            Check::Recursive => "recursive",
            Check::Affine => "affine",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Parse a comma-separated check list; `all` expands to every check. The
/// result is deduplicated and in canonical order.
pub fn parse_checks(s: &str) -> Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Check::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err("empty check list".into());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(Int),
    List(Vec<Int>),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::List(v) => {
                let parts: Vec<String> = v.iter().map(Int::to_string).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Match,
    Mismatch,
    SkippedCapacity,
    InvalidParams,
    NotApplicable,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::SkippedCapacity => "skipped-capacity",
            Status::InvalidParams => "invalid-params",
            Status::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub a: Int,
    pub b: Int,
    pub n: usize,
    pub check: Check,
    pub closed: Option<Value>,
    pub oracle: Option<Value>,
    pub status: Status,
    /// Error text for skipped or failed rows.
    pub detail: Option<String>,
}

/// Rows for a triple that failed validation.
pub fn invalid_outcomes(a: Int, b: Int, n: usize, checks: &[Check], err: &Error) -> Vec<VerifyOutcome> {
    checks
        .iter()
        .map(|&check| VerifyOutcome {
            a,
            b,
            n,
            check,
            closed: None,
            oracle: None,
            status: Status::InvalidParams,
            detail: Some(err.to_string()),
        })
        .collect()
}

type Side = Result<Option<Value>, Error>;

fn classify(closed: Side, oracle: Side) -> (Option<Value>, Option<Value>, Status, Option<String>) {
    match (closed, oracle) {
        (Ok(None), _) | (_, Ok(None)) => (None, None, Status::NotApplicable, None),
        (Ok(Some(c)), Ok(Some(o))) => {
            let status = if c == o { Status::Match } else { Status::Mismatch };
            (Some(c), Some(o), status, None)
        }
        (c, o) => {
            let err = match (&c, &o) {
                (Err(e), _) | (_, Err(e)) => e.clone(),
                _ => unreachable!(),
            };
            let status = if err.is_capacity() {
                Status::SkippedCapacity
            } else {
                Status::Mismatch
            };
            (c.ok().flatten(), o.ok().flatten(), status, Some(err.to_string()))
        }
    }
}

fn to_int(x: impl TryInto<Int>) -> Result<Int, Error> {
    x.try_into().map_err(|_| Error::Overflow { op: "oracle value" })
}

fn ints<I, X>(xs: I) -> Result<Vec<Int>, Error>
where
    I: IntoIterator<Item = X>,
    X: TryInto<Int>,
{
    xs.into_iter().map(to_int).collect()
}

/// Sign-normalize so the first entry is non-negative.
fn normalize_sign(mut v: Vec<Int>) -> Vec<Int> {
    if v.first().is_some_and(|x| *x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Lazily built shared state for the checks of one triple.
struct Context<'a> {
    p: &'a Params,
    limits: &'a Limits,
    semigroup: Option<Result<GenericSemigroup, Error>>,
    analysis: Option<Result<Analysis, Error>>,
}

impl<'a> Context<'a> {
    fn semigroup(&mut self) -> Result<&GenericSemigroup, Error> {
        let p = self.p;
        self.semigroup
            .get_or_insert_with(|| oracle::grepunit_semigroup(p))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn analysis(&mut self) -> Result<&Analysis, Error> {
        if self.analysis.is_none() {
            let built = self
                .semigroup()
                .cloned()
                .and_then(|s| Analysis::new(&s, self.limits));
            self.analysis = Some(built);
        }
        self.analysis.as_ref().unwrap().as_ref().map_err(Clone::clone)
    }

    fn closed(&mut self, check: Check) -> Side {
        let p = self.p;
        let cap = self.limits.apery;
        Ok(Some(match check {
            Check::Frobenius => Value::Int(cf::frobenius_closed(p)?),
            Check::Genus => Value::Int(cf::genus_closed(p)?),
            Check::Apery => Value::List(cf::apery_closed(p, cap)?.sorted_values()),
            Check::Pf => Value::List(cf::pseudo_frobenius_closed(p)?),
            Check::Type => Value::Int(to_int(cf::pseudo_frobenius_closed(p)?.len())?),
            Check::Homogeneous => Value::Bool(true),
            Check::Wilf => Value::Bool(cf::invariant_report_closed(p)?.wilf_ok),
            Check::Minors => {
                if p.n() < 3 {
                    return Ok(None);
                }
                let m = cf::lattice_matrix(p)?;
                if !m.annihilates(&p.generators()?)? {
                    return Err(Error::Internal("lattice matrix does not annihilate the generators"));
                }
                Value::List(normalize_sign(cf::maximal_minors(&m)?))
            }
            Check::Recursive => {
                if p.n() < 3 {
                    return Ok(None);
                }
                let Ok(prev) = p.predecessor() else {
                    return Ok(None);
                };
                Value::List(cf::apery_recursive(&prev, p, cap)?.sorted_values())
            }
            Check::Affine => Value::Bool(cf::generator_shift_identity(p)?),
        }))
    }

    fn oracle(&mut self, check: Check) -> Side {
        let p = self.p;
        let limits = *self.limits;
        Ok(Some(match check {
            Check::Frobenius => Value::Int(to_int(self.analysis()?.frobenius())?),
            Check::Genus => Value::Int(to_int(self.analysis()?.genus())?),
            Check::Apery | Check::Recursive => {
                if check == Check::Recursive && (p.n() < 3 || p.predecessor().is_err()) {
                    return Ok(None);
                }
                Value::List(ints(self.analysis()?.apery().sorted_values())?)
            }
            Check::Pf => Value::List(ints(self.analysis()?.pseudo_frobenius()?)?),
            Check::Type => Value::Int(to_int(self.analysis()?.pseudo_frobenius()?.len())?),
            Check::Homogeneous => {
                let s = self.semigroup()?.clone();
                let homogeneous = cf::homogeneity_witness(p, limits.apery, |x| {
                    let x = u64::try_from(*x).map_err(|_| Error::Overflow { op: "length query" })?;
                    oracle::length_set_oracle(&s, x, &limits)
                })?;
                Value::Bool(homogeneous)
            }
            Check::Wilf => Value::Bool(self.analysis()?.wilf(&limits)?.holds),
            Check::Minors => {
                if p.n() < 3 {
                    return Ok(None);
                }
                let gens = oracle::minimal_generators_oracle(self.semigroup()?.gens(), &limits)?;
                let alternating = gens
                    .into_iter()
                    .enumerate()
                    .map(|(k, g)| {
                        let g = to_int(g)?;
                        Ok(if k % 2 == 0 { g } else { -g })
                    })
                    .collect::<Result<Vec<Int>, Error>>()?;
                Value::List(alternating)
            }
            Check::Affine => {
                let analysis = self.analysis()?;
                let frobenius = Int::from(analysis.frobenius());
                let bound = frobenius + Int::from(analysis.semigroup().max_gen());
                let sieve = analysis.sieve();
                // everything past the Frobenius number is a member
                let member = |x: &Int| -> Result<bool, Error> {
                    if *x < 0 {
                        return Ok(false);
                    }
                    if *x > frobenius {
                        return Ok(true);
                    }
                    Ok(sieve.contains(*x as u64) == Some(true))
                };
                Value::Bool(cf::affine_closure_check(p, &bound, member)?)
            }
        }))
    }
}

/// Run `checks` on one valid triple, in the order given.
pub fn run_checks(p: &Params, checks: &[Check], limits: &Limits) -> Vec<VerifyOutcome> {
    let mut ctx = Context {
        p,
        limits,
        semigroup: None,
        analysis: None,
    };
    checks
        .iter()
        .map(|&check| {
            let closed = ctx.closed(check);
            let oracle = ctx.oracle(check);
            let (closed, oracle, status, detail) = classify(closed, oracle);
            VerifyOutcome {
                a: *p.a(),
                b: *p.b(),
                n: p.n(),
                check,
                closed,
                oracle,
                status,
                detail,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use grepunit::validate;

    #[test]
    fn check_list_parsing() {
        assert_eq!(parse_checks("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            parse_checks("pf,frobenius,pf").unwrap(),
            vec![Check::Frobenius, Check::Pf]
        );
        assert!(parse_checks("frobenius,bogus").is_err());
        assert!(parse_checks("").is_err());
    }

    #[test]
    fn all_checks_match_on_example() {
        let p = validate(3, 3, 4).unwrap();
        let out = run_checks(&p, &Check::ALL, &Limits::default());
        assert_eq!(out.len(), 10);
        for o in &out {
            assert_eq!(o.status, Status::Match, "{o:?}");
        }
    }

    #[test]
    fn not_applicable_rows() {
        let p = validate(1, 2, 2).unwrap();
        let out = run_checks(&p, &[Check::Minors, Check::Recursive, Check::Frobenius], &Limits::default());
        assert_eq!(out[0].status, Status::NotApplicable);
        assert_eq!(out[1].status, Status::NotApplicable);
        assert_eq!(out[2].status, Status::Match);
        // (3, 2, 3) is valid, its predecessor (3, 2, 2) is not: gcd(3, 3) = 3
        let p = validate(3, 2, 3).unwrap();
        assert!(p.predecessor().is_err());
        let out = run_checks(&p, &[Check::Recursive], &Limits::default());
        assert_eq!(out[0].status, Status::NotApplicable);
    }

    #[test]
    fn capacity_rows() {
        let p = validate(1, 5, 5).unwrap();
        let tiny = Limits {
            apery: 100,
            ..Limits::default()
        };
        let out = run_checks(&p, &[Check::Apery, Check::Frobenius], &tiny);
        assert_eq!(out[0].status, Status::SkippedCapacity);
        assert!(out[0].detail.as_deref().unwrap().contains("capacity"));
        // the closed Frobenius formula needs no table, but the oracle does
        assert_eq!(out[1].status, Status::SkippedCapacity);
        assert_eq!(out[1].closed, Some(Value::Int(4 * 3123 + 781)));
    }

    #[test]
    fn minors_compare_signs() {
        let p = validate(1, 2, 3).unwrap();
        let out = run_checks(&p, &[Check::Minors], &Limits::default());
        assert_eq!(out[0].closed, Some(Value::List(vec![7, -8, 10])));
        assert_eq!(out[0].status, Status::Match);
    }
}
