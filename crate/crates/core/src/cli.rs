//! The `catfock` command line. [`run`] takes the argument vector and two
//! output streams and returns the process exit code:
//!
//! * 0: success
//! * 1: a verification assertion failed
//! * 2: usage, parse or domain error
//! * 3: a size guard was exceeded

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cts::{solve_closed_form, solve_recurrence, BoundarySequence, TriangleTable};
use crate::error::{Error, Result};
use crate::exactalg::{
    parse_rational, qpoly_from_json, qpoly_to_json, rational_from_json, rational_to_json, Poly,
};
use crate::fock::{stratum_polynomials, Action, FockSpace, OperatorWord, TestVector};
use crate::partitions::{
    count_strata, enumerate_ncpp, enumerate_pp, enumerate_pp_eps, ncpp_counterpart, GramMatrix,
    PairPartition, Signature,
};
use crate::report::Report;
use crate::trapezoid::{catalan_number, catalan_triangle, trapezoid_entry};
use crate::verify::{run_suite, Bounds, Suite};
use crate::{QPolynomial, Rational};

/// Largest row count or index accepted by the table commands.
pub const TABLE_MAX_ROWS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "catfock",
    version,
    about = "Exact Catalan trapezoids, triangle systems, pair partitions and (q,2)-Fock moments"
)]
struct Cli {
    /// Output format; json when stdout is not a terminal, text otherwise.
    #[arg(long, value_enum, global = true)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rows n = 0..N-1 of the trapezoid of order M.
    Trapezoid {
        #[arg(long)]
        order: u64,
        #[arg(long)]
        rows: usize,
    },
    /// Rows n = 0..N-1 of the Catalan triangle.
    Triangle {
        #[arg(long)]
        rows: usize,
    },
    /// Catalan numbers C_0..C_N.
    Catalan {
        #[arg(long)]
        upto: usize,
    },
    #[command(subcommand)]
    Partitions(PartitionsCommand),
    #[command(subcommand)]
    Cts(CtsCommand),
    #[command(subcommand)]
    Fock(FockCommand),
    /// Runs a verification suite.
    Verify {
        #[arg(long, value_parser = Suite::from_str)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum PartitionsCommand {
    /// Lists pair partitions of {1,...,2N}.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        noncrossing: bool,
        /// Restrict to the fiber over a plus-class signature such as "--++".
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<String>,
        /// Restrict to the k-stratum.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Stratum sizes of PP(2N) and NCPP(2N).
    Strata {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recurrence,
    Closed,
    Both,
}

#[derive(Debug, Subcommand)]
enum CtsCommand {
    /// Solves the Catalan's triangle system for a boundary file.
    Solve {
        #[arg(long)]
        boundary: PathBuf,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
    },
}

#[derive(Debug, Subcommand)]
enum FockCommand {
    /// Vacuum moment of an operator word such as "--++" or "-1-2+3+4".
    Moment {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// JSON matrix of scalar products between the labelled test vectors.
        #[arg(long)]
        gram: Option<PathBuf>,
        /// A rational value for q, or "symbolic".
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        q: String,
    },
    /// P_{N,k} for k = 1..N.
    Pnk {
        #[arg(long)]
        n: usize,
    },
    /// P_n for n = 1..N.
    Pn {
        #[arg(long)]
        upto: usize,
    },
}

/// What a command produces in each format, plus whether every assertion it
/// made held.
struct Output {
    json: Value,
    text: String,
    csv: String,
    passed: bool,
}

impl Output {
    fn new(json: Value, text: String, csv: String) -> Self {
        Output {
            json,
            text,
            csv,
            passed: true,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGuard { .. } => 3,
        Error::Verification(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its result to `out` and diagnostics to `err`.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write, is_tty: bool) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = cli.format.unwrap_or(if is_tty {
        OutputFormat::Text
    } else {
        OutputFormat::Json
    });
    match dispatch(cli.command) {
        Ok(output) => {
            let body = match format {
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&output.json).expect("json values serialize")
                        + "\n"
                }
                OutputFormat::Text => output.text,
                OutputFormat::Csv => output.csv,
            };
            if out.write_all(body.as_bytes()).is_err() {
                return 2;
            }
            if output.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::Trapezoid { order, rows } => trapezoid_table(order, rows),
        Command::Triangle { rows } => triangle_table(rows),
        Command::Catalan { upto } => catalan_list(upto),
        Command::Partitions(PartitionsCommand::Enumerate {
            n,
            noncrossing,
            epsilon,
            k,
        }) => partitions_enumerate(n, noncrossing, epsilon.as_deref(), k),
        Command::Partitions(PartitionsCommand::Strata { n }) => partitions_strata(n),
        Command::Cts(CtsCommand::Solve { boundary, method }) => cts_solve(&boundary, method),
        Command::Fock(FockCommand::Moment { word, gram, q }) => {
            fock_moment(&word, gram.as_deref(), &q)
        }
        Command::Fock(FockCommand::Pnk { n }) => fock_pnk(n),
        Command::Fock(FockCommand::Pn { upto }) => fock_pn(upto),
        Command::Verify { suite, max_n } => verify(suite, max_n),
    }
}

fn integer_rows(rows: Vec<Vec<BigInt>>, index_from: usize) -> Output {
    let json = json!(rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>());
    let mut text = String::new();
    let mut csv = String::from("n,k,value\n");
    for (i, row) in rows.iter().enumerate() {
        text += &join(row, " ");
        text.push('\n');
        for (k, x) in row.iter().enumerate() {
            csv += &format!("{},{k},{x}\n", i + index_from);
        }
    }
    Output::new(json, text, csv)
}

fn join<T: Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn trapezoid_table(order: u64, rows: usize) -> Result<Output> {
    if order == 0 {
        return Err(Error::domain("trapezoid order must be at least 1"));
    }
    Error::guard("rows", rows, TABLE_MAX_ROWS)?;
    Error::guard("order", order as usize, TABLE_MAX_ROWS)?;
    let table = (0..rows as u64)
        .map(|n| {
            (0..n + order)
                .map(|k| trapezoid_entry(order, n, k))
                .collect()
        })
        .collect();
    Ok(integer_rows(table, 0))
}

fn triangle_table(rows: usize) -> Result<Output> {
    Error::guard("rows", rows, TABLE_MAX_ROWS)?;
    let table = (0..rows as u64)
        .map(|n| {
            (0..=n as i64)
                .map(|k| catalan_triangle(n, k))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(integer_rows(table, 0))
}

fn catalan_list(upto: usize) -> Result<Output> {
    Error::guard("upto", upto, TABLE_MAX_ROWS)?;
    let values: Vec<BigInt> = (0..=upto as u64).map(catalan_number).collect();
    let mut csv = String::from("n,value\n");
    for (n, c) in values.iter().enumerate() {
        csv += &format!("{n},{c}\n");
    }
    Ok(Output::new(
        json!(values.iter().map(ToString::to_string).collect::<Vec<_>>()),
        join(&values, ",") + "\n",
        csv,
    ))
}

fn partitions_enumerate(
    n: usize,
    noncrossing: bool,
    epsilon: Option<&str>,
    k: Option<usize>,
) -> Result<Output> {
    let mut list: Vec<PairPartition> = match epsilon {
        Some(word) => {
            let s: Signature = word.parse()?;
            if s.len() != 2 * n {
                return Err(Error::domain(format!(
                    "signature {word} has length {}, expected {}",
                    s.len(),
                    2 * n
                )));
            }
            if noncrossing {
                vec![ncpp_counterpart(&s)?]
            } else {
                enumerate_pp_eps(&s)?
            }
        }
        None if noncrossing => enumerate_ncpp(n)?,
        None => enumerate_pp(n)?,
    };
    if let Some(k) = k {
        if k == 0 || k > n {
            return Err(Error::domain(format!("stratum k={k} outside 1..={n}")));
        }
        list.retain(|p| p.k_class() == k);
    }
    let mut text = String::new();
    let mut csv = String::from("partition,l,r\n");
    for (i, p) in list.iter().enumerate() {
        text += &format!("{p}\n");
        for (l, r) in p.pairs() {
            csv += &format!("{},{l},{r}\n", i + 1);
        }
    }
    Ok(Output::new(
        Value::Array(list.iter().map(PairPartition::to_json).collect()),
        text,
        csv,
    ))
}

fn partitions_strata(n: usize) -> Result<Output> {
    let strata = count_strata(n)?;
    let mut text = String::from("k pp ncpp\n");
    let mut csv = String::from("k,pp,ncpp\n");
    for s in &strata {
        text += &format!("{} {} {}\n", s.k, s.pp, s.ncpp);
        csv += &format!("{},{},{}\n", s.k, s.pp, s.ncpp);
    }
    let json = json!(strata
        .iter()
        .map(|s| json!({"k": s.k, "pp": s.pp, "ncpp": s.ncpp}))
        .collect::<Vec<_>>());
    Ok(Output::new(json, text, csv))
}

/// Boundary entries as read from a file: all rational, or all polynomial
/// once any entry is a polynomial.
enum Boundary {
    Rational(BoundarySequence<Rational>),
    Polynomial(BoundarySequence<QPolynomial>),
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

fn read_boundary(path: &Path) -> Result<Boundary> {
    let value = read_json(path)?;
    let Value::Array(items) = value else {
        return Err(Error::parse(
            path.display().to_string(),
            "boundary must be a JSON array",
        ));
    };
    if items.iter().any(Value::is_object) {
        let polys = items
            .iter()
            .map(|v| match v {
                Value::Object(_) => qpoly_from_json(v),
                other => rational_from_json(other).map(Poly::constant),
            })
            .collect::<Result<_>>()?;
        Ok(Boundary::Polynomial(BoundarySequence::new(polys)?))
    } else {
        let values = items
            .iter()
            .map(rational_from_json)
            .collect::<Result<_>>()?;
        Ok(Boundary::Rational(BoundarySequence::new(values)?))
    }
}

fn table_output<R>(
    tables: &[(&str, TriangleTable<R>)],
    to_json: impl Fn(&R) -> Value,
    to_text: impl Fn(&R) -> String,
) -> (Value, String, String)
where
    R: crate::exactalg::Ring,
{
    let render = |t: &TriangleTable<R>| {
        Value::Array(
            t.rows()
                .iter()
                .map(|r| Value::Array(r.iter().map(&to_json).collect()))
                .collect(),
        )
    };
    let single = tables.len() == 1;
    let mut text = String::new();
    let mut csv = String::from(if single {
        "n,m,value\n"
    } else {
        "method,n,m,value\n"
    });
    let mut obj = Map::new();
    for (name, t) in tables {
        if !single {
            text += &format!("{name}\n");
        }
        for row in t.rows() {
            text += &row.iter().map(&to_text).collect::<Vec<_>>().join(" ");
            text.push('\n');
        }
        for (n, m, x) in t.entries() {
            let prefix = if single {
                String::new()
            } else {
                format!("{name},")
            };
            csv += &format!("{prefix}{n},{m},{}\n", to_text(x));
        }
        obj.insert((*name).to_string(), render(t));
    }
    let json = if single {
        render(&tables[0].1)
    } else {
        Value::Object(obj)
    };
    (json, text, csv)
}

fn solve_with<R: crate::exactalg::Ring>(
    b: &BoundarySequence<R>,
    method: Method,
    to_json: impl Fn(&R) -> Value,
    to_text: impl Fn(&R) -> String,
) -> Output {
    let tables = match method {
        Method::Recurrence => vec![("recurrence", solve_recurrence(b))],
        Method::Closed => vec![("closed", solve_closed_form(b))],
        Method::Both => vec![
            ("recurrence", solve_recurrence(b)),
            ("closed", solve_closed_form(b)),
        ],
    };
    let mismatch = match method {
        Method::Both => tables[0].1.first_mismatch(&tables[1].1),
        _ => None,
    };
    let (mut json, mut text, csv) = table_output(&tables, to_json, to_text);
    if method == Method::Both {
        let agree = mismatch.is_none();
        json["equal"] = Value::Bool(agree);
        match mismatch {
            None => text += "solvers agree\n",
            Some((n, m)) => {
                text += &format!("solvers disagree at x_({n},{m})\n");
                json["first_mismatch"] = json!([n, m]);
            }
        }
    }
    Output {
        json,
        text,
        csv,
        passed: mismatch.is_none(),
    }
}

fn cts_solve(path: &Path, method: Method) -> Result<Output> {
    Ok(match read_boundary(path)? {
        Boundary::Rational(b) => solve_with(&b, method, rational_to_json, ToString::to_string),
        Boundary::Polynomial(b) => solve_with(&b, method, qpoly_to_json, ToString::to_string),
    })
}

/// Splits `-1-2+3+4` or `--++` into signs and optional 1-based labels.
fn parse_word(word: &str) -> Result<Vec<(Action, Option<usize>)>> {
    let mut letters = Vec::new();
    let mut chars = word.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        let action = match c {
            '+' => Action::Creation,
            '-' => Action::Annihilation,
            _ => {
                let token: String = word[start..]
                    .chars()
                    .take_while(|c| !matches!(c, '+' | '-'))
                    .collect();
                return Err(Error::parse(token, "expected `+` or `-`"));
            }
        };
        let mut digits = String::new();
        while let Some(&(_, d)) = chars.peek() {
            if !d.is_ascii_digit() {
                break;
            }
            digits.push(d);
            chars.next();
        }
        let label = if digits.is_empty() {
            None
        } else {
            let label: usize = digits
                .parse()
                .map_err(|_| Error::parse(format!("{c}{digits}"), "label too large"))?;
            if label == 0 {
                return Err(Error::parse(format!("{c}{digits}"), "labels start at 1"));
            }
            Some(label)
        };
        letters.push((action, label));
    }
    if letters.is_empty() {
        return Err(Error::parse(word, "empty operator word"));
    }
    Ok(letters)
}

fn read_gram(path: &Path) -> Result<GramMatrix<Rational>> {
    let value = read_json(path)?;
    let Value::Array(rows) = value else {
        return Err(Error::parse(
            path.display().to_string(),
            "gram matrix must be a JSON array of rows",
        ));
    };
    let entries = rows
        .iter()
        .map(|row| match row {
            Value::Array(xs) => xs
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>(),
            other => Err(Error::parse(other.to_string(), "gram row must be an array")),
        })
        .collect::<Result<Vec<_>>>()?;
    GramMatrix::new(entries)
}

fn fock_moment(word: &str, gram: Option<&Path>, q: &str) -> Result<Output> {
    let letters = parse_word(word)?;
    Error::guard("word length", letters.len(), 16)?;
    let space = match gram {
        Some(path) => FockSpace::with_metric(read_gram(path)?),
        None => FockSpace::orthonormal(1),
    };
    let dim = space.dim();
    let word_letters = letters
        .iter()
        .enumerate()
        .map(|(i, &(action, label))| {
            // unlabelled letters use f_j at position j when a gram matrix
            // names the vectors, and the single unit vector otherwise
            let label = label.unwrap_or(if gram.is_some() { i + 1 } else { 1 });
            if label > dim {
                return Err(Error::domain(format!(
                    "letter {} refers to f_{label} but only {dim} test vector(s) are defined",
                    i + 1
                )));
            }
            Ok((action, TestVector::basis(dim, label - 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let moment = space.vacuum_moment(&OperatorWord::new(word_letters)?)?;
    if q == "symbolic" {
        Ok(Output::new(
            json!({"word": word, "q": "symbolic", "value": moment.to_string(), "coeffs": qpoly_to_json(&moment)["coeffs"]}),
            format!("{moment}\n"),
            format!("word,q,value\n{word},symbolic,{moment}\n"),
        ))
    } else {
        let q0 = parse_rational(q)?;
        let value = moment.eval(&q0);
        Ok(Output::new(
            json!({"word": word, "q": rational_to_json(&q0), "value": rational_to_json(&value)}),
            format!("{value}\n"),
            format!("word,q,value\n{word},{q0},{value}\n"),
        ))
    }
}

fn fock_pnk(n: usize) -> Result<Output> {
    let strata = stratum_polynomials::<Rational>(n)?;
    let mut json = Map::new();
    let mut text = String::new();
    let mut csv = String::from("n,k,value\n");
    for (i, p) in strata.iter().enumerate() {
        let k = i + 1;
        json.insert(format!("({n},{k})"), Value::String(p.to_string()));
        text += &format!("P_({n},{k}) = {p}\n");
        csv += &format!("{n},{k},{p}\n");
    }
    Ok(Output::new(Value::Object(json), text, csv))
}

fn fock_pn(upto: usize) -> Result<Output> {
    if upto == 0 {
        return Err(Error::domain("upto must be at least 1"));
    }
    let mut json = Map::new();
    let mut text = String::new();
    let mut csv = String::from("n,value\n");
    for n in 1..=upto {
        let p: QPolynomial = stratum_polynomials::<Rational>(n)?.into_iter().sum();
        json.insert(n.to_string(), Value::String(p.to_string()));
        text += &format!("P_{n} = {p}\n");
        csv += &format!("{n},{p}\n");
    }
    Ok(Output::new(Value::Object(json), text, csv))
}

fn verify(suite: Suite, max_n: Option<usize>) -> Result<Output> {
    let bounds = match max_n {
        Some(0) => return Err(Error::domain("--max-n must be at least 1")),
        Some(m) => Bounds::capped(m),
        None => Bounds::full(),
    };
    let report: Report = run_suite(suite, bounds)?;
    let passed = report.passed();
    let mut text = String::new();
    let mut csv = String::from("name,passed,cases,failure\n");
    for c in &report.checks {
        text += &format!("{c}\n");
        let failure = c.failure.as_deref().unwrap_or("").replace('"', "\"\"");
        csv += &format!("{},{},{},\"{failure}\"\n", c.name, c.passed(), c.cases);
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    text += &format!(
        "{} checks, {} failed: {}\n",
        report.checks.len(),
        failed,
        if passed { "PASS" } else { "FAIL" }
    );
    let json = json!({
        "suite": suite.name(),
        "max_n": max_n,
        "passed": passed,
        "checks": report.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    });
    Ok(Output {
        json,
        text,
        csv,
        passed,
    })
}
