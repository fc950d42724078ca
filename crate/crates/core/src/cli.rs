//! Command-line front end.
//!
//! [`run`] takes an argument list and returns the exit code together with
//! everything that would be written to stdout and stderr, so the binary is
//! a thin wrapper and the behaviour is testable in-process.
//!
//! Exit codes: `0` success, `1` verification failure or internal error,
//! `2` usage or parse error, `3` size mismatch, `4` method not
//! applicable, `5` table size cap exceeded.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::error::KronError;
use crate::kronecker::{
    canonical_cmp, kron_coeff_direct, kron_coeff_with, kron_expand, Evaluation, Method,
};
use crate::partition::{parse_partition, partitions_of, Partition};
use crate::reductions::json_count;
use crate::verify::{run_suite, PropertyReport, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SIZE: i32 = 3;
pub const EXIT_NOT_APPLICABLE: i32 = 4;
pub const EXIT_CAP: i32 = 5;

/// Captured result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "kronkit",
    version,
    about = "Exact Kronecker coefficients of symmetric group characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute k(λ, μ, ν).
    Coeff(CoeffArgs),
    /// Decompose χ^λ ⊗ χ^μ; only ν with k > 0 are listed.
    Expand(ExpandArgs),
    /// Run exhaustive verification sweeps against the character oracle.
    Verify(VerifyArgs),
    /// Tabulate every nonzero coefficient of degree m.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Direct,
    Dvir,
    Formula,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Direct => Method::Direct,
            MethodArg::Dvir => Method::Dvir,
            MethodArg::Formula => Method::Formula,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Oracle,
    Stability,
    Reduction,
    Lr,
    Dvir,
    Formulas,
    Dispatch,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Stability => Suite::Stability,
            SuiteArg::Reduction => Suite::Reduction,
            SuiteArg::Lr => Suite::Lr,
            SuiteArg::Dvir => Suite::Dvir,
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Dispatch => Suite::Dispatch,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Args, Debug)]
struct CoeffArgs {
    /// Partitions as comma-separated parts, e.g. 3,2,1 (empty string for ∅).
    lambda: String,
    mu: String,
    nu: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    /// Also print the reduction trace as JSON.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    lambda: String,
    mu: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    max_m: u32,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    suite: Vec<SuiteArg>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    m: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Emit every ordering of each triple instead of one representative.
    #[arg(long)]
    all_orderings: bool,
    /// Largest m accepted.
    #[arg(long, default_value_t = 12)]
    cap: usize,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Coeff(a) => coeff(a),
        Command::Expand(a) => expand(a),
        Command::Verify(a) => return verify(a),
        Command::Table(a) => table(a),
    };
    result.unwrap_or_else(|e| Outcome::fail(exit_code(&e), e))
}

/// Exit code for a library error.
pub fn exit_code(e: &KronError) -> i32 {
    match e {
        KronError::Parse { .. } | KronError::NotDecreasing(_) => EXIT_PARSE,
        KronError::SizeMismatch(_) => EXIT_SIZE,
        KronError::NotApplicable(_) => EXIT_NOT_APPLICABLE,
        _ => EXIT_FAILURE,
    }
}

fn parse_all<const N: usize>(texts: [&str; N]) -> Result<[Partition; N], KronError> {
    let parsed = texts.map(parse_partition);
    let mut out = Vec::with_capacity(N);
    for p in parsed {
        out.push(p?);
    }
    let sizes: Vec<usize> = out.iter().map(Partition::size).collect();
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        return Err(KronError::SizeMismatch(sizes));
    }
    Ok(out.try_into().expect("length N"))
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn triple_json(t: &[Partition]) -> Value {
    serde_json::to_value(t).expect("serializable")
}

/// The record printed by `coeff --format json`.
pub fn output_record(eval: &Evaluation, input: &[Partition; 3]) -> Value {
    let trace: Value = serde_json::from_str(&eval.trace.to_json()).expect("trace json");
    json!({
        "input": triple_json(input),
        "value": json_count(&eval.value),
        "method": eval.method.as_str(),
        "trace": trace,
    })
}

fn coeff(a: CoeffArgs) -> Result<Outcome, KronError> {
    let input = parse_all([&a.lambda, &a.mu, &a.nu])?;
    let [l, m, n] = &input;
    let eval = kron_coeff_with(l, m, n, a.method.into())?;
    let out = match a.format {
        Format::Text => {
            let mut s = format!("{}\n", eval.value);
            if a.trace {
                s.push_str(&eval.trace.to_json());
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut record = output_record(&eval, &input);
            if !a.trace {
                record.as_object_mut().expect("object").remove("trace");
            }
            json_line(&record)
        }
        Format::Csv => csv_string(
            &["lambda", "mu", "nu", "k", "method"],
            vec![vec![
                l.to_string(),
                m.to_string(),
                n.to_string(),
                eval.value.to_string(),
                eval.method.to_string(),
            ]],
        ),
    };
    Ok(Outcome::ok(out))
}

fn expand(a: ExpandArgs) -> Result<Outcome, KronError> {
    let [l, m] = parse_all([&a.lambda, &a.mu])?;
    let e = kron_expand(&l, &m)?;
    let out = match a.format {
        Format::Json => {
            let map: Map<String, Value> = e
                .terms()
                .iter()
                .map(|(nu, k)| (nu.to_string(), json_count(k)))
                .collect();
            json_line(&Value::Object(map))
        }
        Format::Csv => csv_string(
            &["nu", "k"],
            e.terms()
                .iter()
                .map(|(nu, k)| vec![nu.to_string(), k.to_string()])
                .collect(),
        ),
        Format::Text => e
            .terms()
            .iter()
            .map(|(nu, k)| format!("({nu}) {k}\n"))
            .collect(),
    };
    Ok(Outcome::ok(out))
}

fn verify(a: VerifyArgs) -> Outcome {
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(a.jobs).build() {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_FAILURE, e),
    };
    let mut suites: Vec<Suite> = a.suite.iter().map(|&s| s.into()).collect();
    suites.dedup();
    let reports: Vec<PropertyReport> = pool.install(|| {
        suites
            .iter()
            .flat_map(|&s| run_suite(s, a.max_m as usize))
            .collect()
    });
    let ok = reports.iter().all(PropertyReport::passed);
    let stdout = match a.format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => json_line(&Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "property": r.property.name(),
                        "max_m": r.max_m,
                        "cases": r.cases,
                        "applied": r.applied,
                        "passed": r.passed(),
                        "counterexample": r.counterexample,
                    })
                })
                .collect(),
        )),
        Format::Csv => csv_string(
            &[
                "property",
                "max_m",
                "cases",
                "applied",
                "passed",
                "counterexample",
            ],
            reports
                .iter()
                .map(|r| {
                    vec![
                        r.property.name().to_string(),
                        r.max_m.to_string(),
                        r.cases.to_string(),
                        r.applied.to_string(),
                        r.passed().to_string(),
                        r.counterexample.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        ),
    };
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.property.name())
        .collect();
    Outcome {
        code: if ok { EXIT_OK } else { EXIT_FAILURE },
        stdout,
        stderr: if ok {
            String::new()
        } else {
            format!("error: failing properties: {}\n", failed.join(", "))
        },
    }
}

/// Nonzero coefficients of degree `m`. Without `all_orderings` each
/// unordered triple appears once, sorted as the dispatcher sorts it.
pub fn table_rows(
    m: usize,
    all_orderings: bool,
) -> Result<Vec<([Partition; 3], BigUint)>, KronError> {
    let mut ps: Vec<Partition> = partitions_of(m, None, None).collect();
    ps.sort_by(canonical_cmp);
    let n = ps.len();
    let mut index = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                index.push([i, j, k]);
            }
        }
    }
    let values: Vec<BigUint> = index
        .par_iter()
        .map(|&[i, j, k]| kron_coeff_direct(&ps[i], &ps[j], &ps[k]))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for (idx, k) in index.into_iter().zip(values) {
        if k == BigUint::ZERO {
            continue;
        }
        if all_orderings {
            let mut perms = permutations(idx);
            perms.sort();
            perms.dedup();
            for p in perms {
                rows.push((p.map(|i| ps[i].clone()), k.clone()));
            }
        } else {
            rows.push((idx.map(|i| ps[i].clone()), k));
        }
    }
    if all_orderings {
        let pos = |p: &Partition| ps.iter().position(|q| q == p).expect("listed");
        rows.sort_by_key(|(t, _)| t.clone().map(|p| pos(&p)));
    }
    Ok(rows)
}

fn permutations([a, b, c]: [usize; 3]) -> Vec<[usize; 3]> {
    vec![
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ]
}

fn table(a: TableArgs) -> Result<Outcome, KronError> {
    if a.m > a.cap {
        return Ok(Outcome::fail(
            EXIT_CAP,
            format!(
                "m = {} exceeds the table cap {} (raise it with --cap)",
                a.m, a.cap
            ),
        ));
    }
    let rows = table_rows(a.m, a.all_orderings)?;
    let out = match a.format {
        Format::Text => rows
            .iter()
            .map(|([l, m, n], k)| format!("({l}) ({m}) ({n}) {k}\n"))
            .collect(),
        Format::Json => json_line(&json!({
            "degree": a.m,
            "zeros_omitted": true,
            "all_orderings": a.all_orderings,
            "rows": rows
                .iter()
                .map(|(t, k)| json!({ "triple": triple_json(t), "k": json_count(k) }))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => csv_string(
            &["lambda", "mu", "nu", "k"],
            rows.iter()
                .map(|([l, m, n], k)| {
                    vec![l.to_string(), m.to_string(), n.to_string(), k.to_string()]
                })
                .collect(),
        ),
    };
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("kronkit").chain(args.iter().copied()))
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(call(&["coeff", "2,1", "2,1", "2,1"]).stdout, "1\n");
        let o = call(&["coeff", "2,2,2,2", "5,3", "4,4", "--trace"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("0\n"));
        assert!(o.stdout.contains("\"theorem\":\"lr-vanishing\""));
        let o = call(&["coeff", "4,2", "4,2", "4,2", "--method=formula", "--trace"]);
        assert!(o.stdout.starts_with("2\n"));
        assert!(
            o.stdout.contains(r#""intermediates":{"x":0,"y":2}"#),
            "{}",
            o.stdout
        );
    }

    #[test]
    fn coeff_formats() {
        let o = call(&["coeff", "2,1", "2,1", "2,1", "--format", "json"]);
        assert_eq!(
            o.stdout,
            "{\"input\":[[2,1],[2,1],[2,1]],\"value\":1,\"method\":\"formula-2row\"}\n"
        );
        let o = call(&["coeff", "2,1", "2,1", "2,1", "--format", "csv"]);
        assert_eq!(
            o.stdout,
            "lambda,mu,nu,k,method\n\"2,1\",\"2,1\",\"2,1\",1,formula-2row\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["coeff", "2,x", "2,1", "2,1"]).code, EXIT_PARSE);
        assert_eq!(call(&["coeff", "1,2", "2,1", "2,1"]).code, EXIT_PARSE);
        assert_eq!(call(&["coeff", "2,1", "2,1"]).code, EXIT_PARSE);
        assert_eq!(call(&["coeff", "2,1", "2,1", "2"]).code, EXIT_SIZE);
        assert_eq!(
            call(&["coeff", "3,2,1", "3,2,1", "3,2,1", "--method=formula"]).code,
            EXIT_NOT_APPLICABLE
        );
        assert_eq!(call(&["table", "13"]).code, EXIT_CAP);
        assert_eq!(call(&["expand", "2", "1"]).code, EXIT_SIZE);
        let o = call(&["coeff", "2,1", "2,1", "2"]);
        assert!(o.stdout.is_empty() && o.stderr.starts_with("error:"));
        assert_eq!(call(&["--help"]).code, 0);
    }

    #[test]
    fn expand_examples() {
        assert_eq!(call(&["expand", "3", "3"]).stdout, "{\"3\":1}\n");
        assert_eq!(call(&["expand", "2,1", "3"]).stdout, "{\"2,1\":1}\n");
        assert_eq!(
            call(&["expand", "2,2", "2,2", "--format=csv"]).stdout,
            "nu,k\n4,1\n\"2,2\",1\n\"1,1,1,1\",1\n"
        );
    }

    #[test]
    fn table_examples() {
        assert_eq!(call(&["table", "0"]).stdout, "() () () 1\n");
        let rows = call(&["table", "2"]).stdout;
        assert_eq!(rows, "(1,1) (1,1) (2) 1\n(2) (2) (2) 1\n");
        let all = call(&["table", "2", "--all-orderings"]).stdout;
        assert_eq!(all.lines().count(), 4);
        assert!(call(&["table", "3"])
            .stdout
            .contains("(2,1) (2,1) (2,1) 1\n"));
    }

    #[test]
    fn verify_small() {
        let o = call(&["verify", "--max-m", "1", "--suite", "all", "--jobs", "2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.lines().all(|l| l.starts_with("PASS")));
        assert_eq!(call(&["verify", "--max-m", "0"]).code, EXIT_PARSE);
    }
}
