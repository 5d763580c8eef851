use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use grepunit::closed_form::invariant_report_closed;
use grepunit::oracle::invariant_report_oracle;
use grepunit::{validate, Error, Int, Limits};
use grepunit_cli::checks::{parse_checks, run_checks, Check, Status};
use grepunit_cli::render::{self, error_gcd, Format};
use grepunit_cli::sweep::{run_sweep, IntRange, SweepError, SweepSpec};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_IO: u8 = 4;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "grepunit", version, about = "Invariants of generalized repunit numerical semigroups")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, Frobenius number, genus, pseudo-Frobenius set and more.
    Report {
        #[command(flatten)]
        triple: Triple,
        /// Compute everything by brute force instead of the closed formulas.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compare closed formulas against the brute-force oracle.
    Verify {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, default_value = "all")]
        checks: CheckList,
        #[command(flatten)]
        common: Common,
    },
    /// Run `verify` over a grid of triples.
    Sweep {
        #[arg(long = "a", short = 'a', value_name = "RANGE")]
        a: IntRange,
        #[arg(long = "b", short = 'b', value_name = "RANGE")]
        b: IntRange,
        #[arg(long = "n", short = 'n', value_name = "RANGE")]
        n: IntRange,
        #[arg(long, default_value = "all")]
        checks: CheckList,
        /// Fail with exit code 2 on the first invalid triple instead of recording it.
        #[arg(long)]
        no_skip_invalid: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Triple {
    #[arg(long = "a", short = 'a')]
    a: Int,
    #[arg(long = "b", short = 'b')]
    b: Int,
    #[arg(long = "n", short = 'n')]
    n: Int,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest Apéry set the oracle may build.
    #[arg(long, default_value_t = Limits::default().apery)]
    cap: u64,
    /// Largest membership sieve, in bits.
    #[arg(long, default_value_t = Limits::default().sieve_bits)]
    sieve_cap: u64,
    /// Largest number of factorizations enumerated per element.
    #[arg(long, default_value_t = Limits::default().factorization)]
    factor_cap: u64,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits {
            apery: self.cap,
            sieve_bits: self.sieve_cap,
            factorization: self.factor_cap,
        }
    }
}

#[derive(Clone)]
struct CheckList(Vec<Check>);

impl std::str::FromStr for CheckList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_checks(s).map(CheckList)
    }
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    gcd: Option<String>,
}

impl Failure {
    fn from_core(e: &Error) -> Self {
        let (code, kind) = if e.is_invalid_params() {
            (EXIT_INVALID, "invalid-params")
        } else if e.is_capacity() {
            (EXIT_CAPACITY, "capacity")
        } else {
            (EXIT_MISMATCH, "internal")
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
            gcd: error_gcd(e).map(str::to_owned),
        }
    }

    fn usage(message: String) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "usage",
            message,
            gcd: None,
        }
    }
}

fn length(n: Int) -> Result<usize, Failure> {
    match usize::try_from(n) {
        Ok(n) => Ok(n),
        Err(_) if n < 0 => Err(Failure::from_core(&Error::LengthTooSmall { n: 0 })),
        Err(_) => Err(Failure::from_core(&Error::Overflow { op: "length n" })),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure {
        code: EXIT_IO,
        kind: "io",
        message: e.to_string(),
        gcd: None,
    };
    match out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(io)?;
            stdout.flush().map_err(io)
        }
    }
}

fn run(cmd: Command) -> (Format, Result<u8, Failure>) {
    match cmd {
        Command::Report { triple, oracle, common } => (common.format, report(triple, oracle, &common)),
        Command::Verify { triple, checks, common } => (common.format, verify(triple, &checks.0, &common)),
        Command::Sweep {
            a,
            b,
            n,
            checks,
            no_skip_invalid,
            common,
        } => {
            let spec = SweepSpec {
                a,
                b,
                n,
                skip_invalid: !no_skip_invalid,
                checks: checks.0,
            };
            (common.format, sweep(&spec, &common))
        }
    }
}

fn report(t: Triple, oracle: bool, common: &Common) -> Result<u8, Failure> {
    let p = validate(t.a, t.b, length(t.n)?).map_err(|e| Failure::from_core(&e))?;
    let r = if oracle {
        invariant_report_oracle(&p, &common.limits())
    } else {
        invariant_report_closed(&p)
    }
    .map_err(|e| Failure::from_core(&e))?;
    emit(&render::render_report(&r, common.format), &common.out)?;
    Ok(0)
}

fn verify(t: Triple, checks: &[Check], common: &Common) -> Result<u8, Failure> {
    let n = length(t.n)?;
    let p = validate(t.a, t.b, n).map_err(|e| Failure::from_core(&e))?;
    let limits = common.limits();
    let rows = run_checks(&p, checks, &limits);
    emit(
        &render::render_verify((t.a, t.b, n), checks, &limits, &rows, common.format),
        &common.out,
    )?;
    Ok(if rows.iter().any(|r| r.status == Status::Mismatch) {
        EXIT_MISMATCH
    } else if rows.iter().any(|r| r.status == Status::SkippedCapacity) {
        EXIT_CAPACITY
    } else {
        0
    })
}

fn sweep(spec: &SweepSpec, common: &Common) -> Result<u8, Failure> {
    let limits = common.limits();
    let result = run_sweep(spec, &limits).map_err(|e| match e {
        SweepError::Spec(m) => Failure::usage(m),
        SweepError::Invalid { ref source, .. } => Failure {
            message: e.to_string(),
            ..Failure::from_core(source)
        },
    })?;
    emit(
        &render::render_sweep(spec, &limits, &result.rows, &result.summary, common.format),
        &common.out,
    )?;
    if common.out.is_some() || common.format != Format::Text {
        eprint!("{}", render::render_summary_text(&result.summary));
    }
    Ok(if result.summary.mismatches > 0 { EXIT_MISMATCH } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let (format, outcome) = run(cli.command);
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if format == Format::Text {
                eprint!("{}", render::render_error(f.kind, &f.message, f.gcd.as_deref(), format));
            } else {
                eprintln!("error ({}): {}", f.kind, f.message);
                print!("{}", render::render_error(f.kind, &f.message, f.gcd.as_deref(), format));
            }
            ExitCode::from(f.code)
        }
    }
}
