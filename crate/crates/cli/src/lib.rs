//! Command-line front end for `linperm`.
//!
//! Every subcommand prints one `key: value` line per datum, or a single JSON
//! object with the same keys under `--json`. [`run`] is the whole program;
//! the binary only wires it to the process streams.

use std::fmt;
use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linperm::binomial::lift;
use linperm::ffield::poly::is_prime;
use linperm::oracle::sweep;
use linperm::timing::compare_inversion;
use linperm::{BinomialSpec, FieldCtx, SweepConfig};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

/// Largest `e·n` accepted on the command line.
pub const MAX_DEGREE: usize = 1024;

const BENCH_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(name = "linperm", version, about = "Linearized permutation binomials and their inverses")]
pub struct Cli {
    /// Emit a single JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the modulus and order of F_{(p^e)^n}.
    Field(FieldArgs),
    /// Decide whether x^(q^r) + a·x permutes the field.
    Check(BinomialArgs),
    /// Compute the compositional inverse of x^(q^r) + a·x.
    Invert {
        #[command(flatten)]
        binomial: BinomialArgs,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Lift x^(q^r) + a·x to F_{(q^t)^n}.
    Lift {
        #[command(flatten)]
        binomial: BinomialArgs,
        #[arg(long)]
        t: usize,
    },
    /// Run the exhaustive verification sweep.
    Verify {
        #[arg(long = "max-order")]
        max_order: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
    },
    /// Time the closed-form inverse against the Dickson inverse.
    Bench {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub e: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BinomialArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub r: usize,
    /// Integer encoding of the coefficient.
    #[arg(long, value_parser = BigUint::from_str)]
    pub a: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Dickson,
    Special,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Datum {
    Int(BigUint),
    Bool(bool),
    List(Vec<BigUint>),
    Lines(Vec<String>),
}

impl fmt::Display for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Datum::Int(v) => write!(f, "{v}"),
            Datum::Bool(b) => write!(f, "{b}"),
            Datum::List(vs) => {
                let parts: Vec<String> = vs.iter().map(BigUint::to_string).collect();
                f.write_str(&parts.join(","))
            }
            Datum::Lines(lines) => f.write_str(&lines.join("\n")),
        }
    }
}

impl Datum {
    fn int(v: impl Into<BigUint>) -> Self {
        Datum::Int(v.into())
    }

    fn json(&self) -> Value {
        fn number(v: &BigUint) -> Value {
            u64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))
        }
        match self {
            Datum::Int(v) => number(v),
            Datum::Bool(b) => Value::Bool(*b),
            Datum::List(vs) => Value::Array(vs.iter().map(number).collect()),
            Datum::Lines(lines) => Value::Array(lines.iter().cloned().map(Value::String).collect()),
        }
    }
}

/// Keyed output of a subcommand plus whether it counts as success.
struct Report {
    data: Vec<(&'static str, Datum)>,
    ok: bool,
}

impl Report {
    fn ok(data: Vec<(&'static str, Datum)>) -> Self {
        Self { data, ok: true }
    }

    fn write(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            let map: Map<String, Value> = self.data.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
            writeln!(out, "{}", Value::Object(map))
        } else {
            for (key, value) in &self.data {
                match value {
                    Datum::Lines(lines) => {
                        for line in lines {
                            writeln!(out, "{key}: {line}")?;
                        }
                    }
                    _ => writeln!(out, "{key}: {value}")?,
                }
            }
            Ok(())
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(linperm::Error),
}

impl From<linperm::Error> for CliError {
    fn from(e: linperm::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl FieldArgs {
    fn validate(&self) -> Result<(), CliError> {
        if !is_prime(self.p) {
            return Err(usage(format!("--p {} is not a prime", self.p)));
        }
        if self.p >= 1 << 32 {
            return Err(usage(format!("--p {} must be below 2^32", self.p)));
        }
        if self.e == 0 || self.n == 0 {
            return Err(usage("--e and --n must be at least 1"));
        }
        match self.e.checked_mul(self.n) {
            Some(m) if m <= MAX_DEGREE => Ok(()),
            _ => Err(usage(format!("e*n must not exceed {MAX_DEGREE}"))),
        }
    }

    fn build(&self) -> Result<Arc<FieldCtx>, CliError> {
        self.validate()?;
        Ok(FieldCtx::new(self.p, self.e, self.n)?)
    }
}

impl BinomialArgs {
    fn build(&self) -> Result<BinomialSpec, CliError> {
        self.field.validate()?;
        let n = self.field.n;
        if self.r == 0 || self.r >= n {
            return Err(usage(format!("--r {} must lie in [1, n-1] for n = {n}", self.r)));
        }
        let order = BigUint::from(self.field.p).pow((self.field.e * n) as u32);
        if self.a >= order {
            return Err(usage(format!("--a {} must be below the field order {order}", self.a)));
        }
        let ctx = self.field.build()?;
        Ok(BinomialSpec::new(ctx.from_encoding(&self.a)?, self.r)?)
    }
}

fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Field(args) => {
            let ctx = args.build()?;
            Ok(Report::ok(vec![
                ("modulus", Datum::Int(ctx.modulus_encoding())),
                ("order", Datum::Int(ctx.order())),
            ]))
        }
        Command::Check(args) => {
            let spec = args.build()?;
            Ok(Report::ok(vec![
                ("permutation", Datum::Bool(spec.is_permutation())),
                ("norm", Datum::Int(spec.norm().encode())),
            ]))
        }
        Command::Invert { binomial, method } => {
            let spec = binomial.build()?;
            let inverse = match method {
                Method::Closed => spec.inverse()?,
                Method::Dickson => {
                    if !spec.is_permutation() {
                        return Err(linperm::Error::CriterionViolated {
                            value: spec.criterion_value().to_string(),
                        }
                        .into());
                    }
                    spec.poly().inverse_dickson()?
                }
                Method::Special => spec.inverse_special()?,
            };
            Ok(Report::ok(vec![("coeffs", Datum::List(inverse.encodings()))]))
        }
        Command::Lift { binomial, t } => {
            let f = &binomial.field;
            if *t == 0
                || f.e.checked_mul(*t).and_then(|et| et.checked_mul(f.n)).is_none_or(|m| m > MAX_DEGREE)
            {
                return Err(usage(format!("--t {t} must be at least 1 with e*t*n at most {MAX_DEGREE}")));
            }
            let spec = binomial.build()?;
            let big = FieldArgs { p: f.p, e: f.e * t, n: f.n }.build()?;
            let lifted = lift(&spec.poly(), *t, &big)?;
            Ok(Report::ok(vec![
                ("coeffs", Datum::List(lifted.encodings())),
                ("big_order", Datum::Int(big.order())),
            ]))
        }
        Command::Verify { max_order, primes } => {
            let cfg =
                SweepConfig { max_field_order: *max_order, primes: primes.clone(), ..SweepConfig::default() };
            let report = sweep(&cfg)?;
            let lines = report.failures.iter().map(ToString::to_string).collect();
            Ok(Report {
                ok: report.is_clean(),
                data: vec![
                    ("failure", Datum::Lines(lines)),
                    ("cases", Datum::int(report.cases as u64)),
                    ("permutations", Datum::int(report.permutations as u64)),
                    ("lift_cases", Datum::int(report.lift_cases as u64)),
                    ("failures", Datum::int(report.failures.len() as u64)),
                ],
            })
        }
        Command::Bench { field, r, trials } => {
            if *r == 0 || *r >= field.n {
                return Err(usage(format!("--r {r} must lie in [1, n-1] for n = {}", field.n)));
            }
            let ctx = field.build()?;
            let mut rng = ChaCha8Rng::seed_from_u64(BENCH_SEED);
            let timing = compare_inversion(&ctx, *r, *trials, &mut rng)?;
            Ok(Report {
                ok: timing.agree,
                data: vec![
                    ("trials", Datum::int(timing.trials as u64)),
                    ("closed_ns", Datum::int(timing.closed_mean_ns())),
                    ("dickson_ns", Datum::int(timing.dickson_mean_ns())),
                    ("agree", Datum::Bool(timing.agree)),
                ],
            })
        }
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the process exit status: 0 on success, 1 on a failed check or
/// rejected input, 2 on a command-line syntax error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            if report.write(cli.json, out).is_err() {
                return 1;
            }
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// [`run`] on the process arguments and standard streams.
pub fn main_with_env() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock()))
}
