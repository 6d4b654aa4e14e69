//! Command-line front end.
//!
//! ```text
//! battery-syt count <SHAPE> [--method auto|hyper|general|closed|dp]
//!                           [--output decimal|factored|json]
//!                           [--verify] [--size-cap N]
//! ```
//!
//! Exit codes: 0 success, 1 internal failure, 2 usage or shape syntax error,
//! 3 method not applicable to the shape, 4 verification mismatch.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;
use serde::Serialize;

use crate::battery_count::{self, catalog::ClosedFormCase, Method};
use crate::error::Error;
use crate::exact_arith::{factorize, Factorization, Natural};
use crate::oracle_dp::{count_diagram, Diagram, DEFAULT_SIZE_CAP};
use crate::shapes::{BatteryShape, Partition, SkewShape, TruncatedShape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Shape syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub reason: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.position, self.reason)
    }
}

impl std::error::Error for ParseError {}

/// A parsed shape argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeExpr {
    Partition(Partition),
    Rect { m: usize, n: usize },
    Battery(BatteryShape),
    Skew(SkewShape),
    Truncated(TruncatedShape),
}

fn err(position: usize, reason: impl Into<String>) -> ParseError {
    ParseError { position, reason: reason.into() }
}

fn parse_number(s: &str, at: usize) -> Result<usize, ParseError> {
    s.trim().parse().map_err(|_| err(at, format!("expected a non-negative integer, found {s:?}")))
}

fn parse_partition(s: &str, at: usize) -> Result<Partition, ParseError> {
    let mut offset = at;
    let mut rows = Vec::new();
    if !s.trim().is_empty() {
        for part in s.split(',') {
            rows.push(parse_number(part, offset)?);
            offset += part.len() + 1;
        }
    }
    if let Some(i) = rows.iter().position(|&r| r == 0) {
        if rows[i..].iter().any(|&r| r > 0) {
            return Err(err(at, "zero part before a positive part"));
        }
    }
    Partition::new(rows).map_err(|e| err(at, e.to_string()))
}

fn parse_rect(s: &str, at: usize) -> Result<(usize, usize), ParseError> {
    let (m, n) = s.split_once(['x', 'X']).ok_or_else(|| err(at, format!("expected MxN, found {s:?}")))?;
    let m = parse_number(m, at)?;
    let n = parse_number(n, at + s.find(['x', 'X']).unwrap_or(0) + 1)?;
    if m == 0 || n == 0 {
        return Err(err(at, "rectangle sides must be positive"));
    }
    Ok((m, n))
}

/// Splits `body,a=A,k=K` into `body` and the two keyed values.
fn parse_battery_keys(s: &str, at: usize) -> Result<(&str, usize, usize), ParseError> {
    let key_start = s
        .find(",a=")
        .into_iter()
        .chain(s.find(",k="))
        .min()
        .ok_or_else(|| err(at + s.len(), "battery needs a=A and k=K"))?;
    let body = &s[..key_start];
    let mut a = None;
    let mut k = None;
    let mut offset = at + key_start + 1;
    for field in s[key_start + 1..].split(',') {
        let (key, value) =
            field.split_once('=').ok_or_else(|| err(offset, format!("expected key=value, found {field:?}")))?;
        let value = parse_number(value, offset + key.len() + 1)?;
        let slot = match key.trim() {
            "a" => &mut a,
            "k" => &mut k,
            other => return Err(err(offset, format!("unknown key {other:?}"))),
        };
        if slot.replace(value).is_some() {
            return Err(err(offset, format!("duplicate key {key:?}")));
        }
        offset += field.len() + 1;
    }
    let a = a.ok_or_else(|| err(at + s.len(), "missing a=A"))?;
    let k = k.ok_or_else(|| err(at + s.len(), "missing k=K"))?;
    Ok((body, a, k))
}

impl FromStr for ShapeExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| err(0, "expected KIND:..."))?;
        let at = kind.len() + 1;
        match kind {
            "partition" => Ok(ShapeExpr::Partition(parse_partition(rest, at)?)),
            "rect" => {
                let (m, n) = parse_rect(rest, at)?;
                Ok(ShapeExpr::Rect { m, n })
            }
            "battery" => {
                let (base, body) =
                    rest.split_once(':').ok_or_else(|| err(at, "expected battery:rect:... or battery:part:..."))?;
                let body_at = at + base.len() + 1;
                let (shape, a, k) = parse_battery_keys(body, body_at)?;
                let lambda = match base {
                    "rect" => {
                        let (m, n) = parse_rect(shape, body_at)?;
                        Partition::rectangle(m, n)
                    }
                    "part" => parse_partition(shape, body_at)?,
                    other => return Err(err(at, format!("unknown battery base {other:?}"))),
                };
                BatteryShape::new(lambda, a, k).map(ShapeExpr::Battery).map_err(|e| err(at, e.to_string()))
            }
            "skew" => {
                let (outer, inner) = rest.split_once('/').ok_or_else(|| err(at, "expected outer/inner"))?;
                let outer_p = parse_partition(outer, at)?;
                let inner_p = parse_partition(inner, at + outer.len() + 1)?;
                SkewShape::new(outer_p, inner_p).map(ShapeExpr::Skew).map_err(|e| err(at, e.to_string()))
            }
            "truncated" => {
                let (outer, tail) = rest.split_once('\\').ok_or_else(|| err(at, "expected outer\\truncation"))?;
                let tail_at = at + outer.len() + 1;
                let (trunc, inner) = match tail.split_once('/') {
                    Some((t, i)) => (t, Some((i, tail_at + t.len() + 1))),
                    None => (tail, None),
                };
                let outer_p = parse_partition(outer, at)?;
                let trunc_p = parse_partition(trunc, tail_at)?;
                let inner_p = match inner {
                    Some((i, i_at)) => parse_partition(i, i_at)?,
                    None => Partition::empty(),
                };
                let base = SkewShape::new(outer_p, inner_p).map_err(|e| err(at, e.to_string()))?;
                TruncatedShape::new(base, trunc_p).map(ShapeExpr::Truncated).map_err(|e| err(at, e.to_string()))
            }
            other => Err(err(0, format!("unknown shape kind {other:?}"))),
        }
    }
}

impl fmt::Display for ShapeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeExpr::Partition(p) => write!(f, "{p}"),
            ShapeExpr::Rect { m, n } => write!(f, "({m}^{n})"),
            ShapeExpr::Battery(b) => write!(f, "{b}"),
            ShapeExpr::Skew(s) => write!(f, "{s}"),
            ShapeExpr::Truncated(t) => write!(f, "{t}"),
        }
    }
}

impl ShapeExpr {
    /// Straight shapes count as batteries with `a = 0`.
    pub fn as_battery(&self) -> Option<BatteryShape> {
        match self {
            ShapeExpr::Partition(p) => Some(BatteryShape::straight(p.clone())),
            ShapeExpr::Rect { m, n } => Some(BatteryShape::straight(Partition::rectangle(*m, *n))),
            ShapeExpr::Battery(b) => Some(b.clone()),
            _ => None,
        }
    }

    pub fn diagram(&self) -> Diagram {
        match self {
            ShapeExpr::Skew(s) => Diagram::from(s),
            ShapeExpr::Truncated(t) => Diagram::from(t),
            other => Diagram::from(&other.as_battery().expect("straight or battery")),
        }
    }

    /// Counts with one concrete method.
    pub fn count(&self, method: Method, size_cap: usize) -> Result<Natural, Error> {
        match self.as_battery() {
            Some(b) => battery_count::count(&b, method, size_cap),
            None if method == Method::Dp => count_diagram(&self.diagram(), size_cap).map(|(n, _)| n),
            None => Err(Error::Inapplicable { method: method.to_string(), shape: self.to_string() }),
        }
    }

    /// The method `auto` resolves to: closed form, then hypergeometric, then
    /// bullet summation, then the oracle.
    pub fn auto_method(&self) -> Method {
        let Some(b) = self.as_battery() else {
            return Method::Dp;
        };
        if b.a() == 0 {
            return Method::Closed;
        }
        match b.rectangle() {
            Some((m, n)) if ClosedFormCase::matching(m, n, b.a(), b.k()).is_some() => Method::Closed,
            Some(_) if (2..=6).contains(&b.k()) => Method::Hyper,
            Some(_) => Method::General,
            None => Method::Dp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Hyper,
    General,
    Closed,
    Dp,
}

impl MethodArg {
    fn resolve(self) -> Option<Method> {
        match self {
            MethodArg::Auto => None,
            MethodArg::Hyper => Some(Method::Hyper),
            MethodArg::General => Some(Method::General),
            MethodArg::Closed => Some(Method::Closed),
            MethodArg::Dp => Some(Method::Dp),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Decimal,
    Factored,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "battery-syt", version, about = "Count standard Young tableaux of battery shapes exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the standard Young tableaux of a shape.
    ///
    /// Shapes: partition:5,3,1 | rect:MxN | battery:rect:MxN,a=A,k=K |
    /// battery:part:L1,L2,...,a=A,k=K | skew:OUTER/INNER |
    /// truncated:OUTER\TRUNC[/INNER]
    Count(CountArgs),
}

#[derive(Debug, clap::Args)]
pub struct CountArgs {
    pub shape: String,

    #[arg(long, value_enum, default_value = "auto")]
    pub method: MethodArg,

    #[arg(long, value_enum, default_value = "decimal")]
    pub output: OutputFormat,

    /// Recompute with every other applicable method and require agreement.
    #[arg(long)]
    pub verify: bool,

    /// Largest shape, in cells, the dp oracle will take.
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: usize,

    /// Adds one to the named method's result (exercises the mismatch path).
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<MethodArg>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub shape: String,
    pub method: String,
    pub count: String,
    pub factorization: Option<Vec<(serde_json::Value, u32)>>,
    pub verified_methods: Vec<String>,
    pub elapsed_ms: f64,
}

/// Exit status plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inapplicable { .. } | Error::SizeCap { .. } => EXIT_INAPPLICABLE,
        Error::InvalidShape(_) | Error::InvalidPartition(_) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn factorization_json(f: &Factorization) -> Vec<(serde_json::Value, u32)> {
    f.factors()
        .iter()
        .map(|(p, e)| {
            let p = serde_json::from_str(&p.to_string()).expect("decimal digits are a JSON number");
            (p, *e)
        })
        .collect()
}

/// Parses `argv` (including the program name) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match cli.command {
        Command::Count(args) => run_count(&args),
    }
}

pub fn run_count(args: &CountArgs) -> Outcome {
    let started = Instant::now();
    let shape: ShapeExpr = match args.shape.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("cannot parse shape {:?} {e}", args.shape)),
    };
    let method = args.method.resolve().unwrap_or_else(|| shape.auto_method());
    let fault = args.inject_fault.and_then(MethodArg::resolve);
    let compute = |m: Method| -> Result<Natural, Error> {
        let n = shape.count(m, args.size_cap)?;
        Ok(if fault == Some(m) { n + Natural::one() } else { n })
    };

    let count = match compute(method) {
        Ok(n) => n,
        Err(e) => return Outcome::fail(exit_code(&e), e),
    };

    let mut stderr = String::new();
    let mut verified = Vec::new();
    if args.verify {
        let others: Vec<Method> = Method::ALL.into_iter().filter(|&m| m != method).collect();
        let results: Vec<(Method, Result<Natural, Error>)> = std::thread::scope(|s| {
            let handles: Vec<_> = others.iter().map(|&m| (m, s.spawn(move || compute(m)))).collect();
            handles.into_iter().map(|(m, h)| (m, h.join().expect("counting thread panicked"))).collect()
        });
        let mut mismatch = false;
        verified.push(method.to_string());
        for (m, result) in results {
            match result {
                Ok(n) if n == count => verified.push(m.to_string()),
                Ok(n) => {
                    mismatch = true;
                    stderr.push_str(&format!("mismatch: {method} gives {count}, {m} gives {n}\n"));
                }
                Err(Error::Inapplicable { .. } | Error::SizeCap { .. }) => {}
                Err(e) => return Outcome::fail(exit_code(&e), format!("{m}: {e}")),
            }
        }
        if mismatch {
            return Outcome { code: EXIT_MISMATCH, stdout: String::new(), stderr };
        }
        if verified.len() < 2 {
            return Outcome::fail(EXIT_INAPPLICABLE, format!("cannot verify {shape}: only `{method}` applies"));
        }
        stderr.push_str(&format!("verified: {}\n", verified.join(", ")));
    }

    let stdout = match args.output {
        OutputFormat::Decimal => format!("{count}\n"),
        OutputFormat::Factored => match factorize(&count) {
            Ok(f) => format!("{f}\n"),
            Err(e) => return Outcome::fail(EXIT_INTERNAL, e),
        },
        OutputFormat::Json => {
            let factorization = match factorize(&count) {
                Ok(f) => Some(factorization_json(&f)),
                Err(e) => {
                    stderr.push_str(&format!("warning: {e}\n"));
                    None
                }
            };
            let report = RunReport {
                shape: shape.to_string(),
                method: method.to_string(),
                count: count.to_string(),
                factorization,
                verified_methods: verified,
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            };
            serde_json::to_string(&report).expect("report serializes") + "\n"
        }
    };
    Outcome { code: EXIT_OK, stdout, stderr }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        assert_eq!(
            "partition:5,3,1".parse::<ShapeExpr>().unwrap(),
            ShapeExpr::Partition(Partition::new(vec![5, 3, 1]).unwrap())
        );
        assert_eq!("rect:11x7".parse::<ShapeExpr>().unwrap(), ShapeExpr::Rect { m: 11, n: 7 });
        let b = "battery:rect:11x7,a=1,k=6".parse::<ShapeExpr>().unwrap();
        assert_eq!(b, ShapeExpr::Battery(BatteryShape::over_rectangle(11, 7, 1, 6).unwrap()));
        let b = "battery:part:4,2,k=2,a=3".parse::<ShapeExpr>().unwrap();
        assert_eq!(b, ShapeExpr::Battery(BatteryShape::new(Partition::new(vec![4, 2]).unwrap(), 3, 2).unwrap()));
        assert!(matches!("skew:4,3,2/2,1".parse::<ShapeExpr>().unwrap(), ShapeExpr::Skew(_)));
        assert!(matches!("skew:3,2/".parse::<ShapeExpr>().unwrap(), ShapeExpr::Skew(_)));
        let t = "truncated:5,5,2,1\\2/2".parse::<ShapeExpr>().unwrap();
        assert_eq!(t.diagram().size(), 9);
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = "rect:3y4".parse::<ShapeExpr>().unwrap_err();
        assert_eq!(e.position, 5);
        let e = "partition:3,x".parse::<ShapeExpr>().unwrap_err();
        assert_eq!(e.position, 12);
        let e = "battery:rect:3x2,a=1".parse::<ShapeExpr>().unwrap_err();
        assert!(e.reason.contains("k=K"));
        let e = "battery:rect:3x2,a=1,k=q".parse::<ShapeExpr>().unwrap_err();
        assert_eq!(e.position, 23);
        assert!("battery:rect:2x2,a=1,k=3".parse::<ShapeExpr>().is_err());
        assert!("blob:1".parse::<ShapeExpr>().is_err());
        assert!("partition:1,2".parse::<ShapeExpr>().is_err());
    }

    #[test]
    fn auto_selection() {
        let auto = |s: &str| s.parse::<ShapeExpr>().unwrap().auto_method();
        assert_eq!(auto("battery:rect:3x2,a=1,k=2"), Method::Closed);
        assert_eq!(auto("battery:rect:11x7,a=1,k=6"), Method::Hyper);
        assert_eq!(auto("battery:rect:8x3,a=1,k=7"), Method::General);
        assert_eq!(auto("battery:part:3,1,a=1,k=2"), Method::Dp);
        assert_eq!(auto("partition:3,2,1"), Method::Closed);
        assert_eq!(auto("skew:3,2/1"), Method::Dp);
    }

    #[test]
    fn exit_codes() {
        let run_args = |args: &[&str]| run(std::iter::once("battery-syt").chain(args.iter().copied()));
        assert_eq!(run_args(&["count", "partition:3,2,1"]).stdout, "16\n");
        assert_eq!(run_args(&["count", "rect:3"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["count"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["count", "partition:3,2,1", "--method", "hyper"]).code, EXIT_INAPPLICABLE);
        assert_eq!(run_args(&["count", "skew:3,2/1", "--verify"]).code, EXIT_INAPPLICABLE);
        assert_eq!(
            run_args(&["count", "battery:rect:3x3,a=1,k=2", "--method", "dp", "--size-cap", "5"]).code,
            EXIT_INAPPLICABLE
        );
        assert_eq!(run_args(&["--help"]).code, EXIT_OK);
    }
}
