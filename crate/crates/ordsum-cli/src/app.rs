//! Command dispatch and output records.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use ordsum::bicolor::enumerate_bicolorings;
use ordsum::complicated::{check_good_table, decode_word, encode_word};
use ordsum::instances::check_bounds;
use ordsum::ordinal::OrdinalSum;
use ordsum::sgc::{decompose, simple_sum};
use ordsum::shuffle::shuffle_sum_s;
use ordsum::sift::sifted_sum;
use ordsum::{selftest, BinaryWord, Capacity, FiltrationScheme, Report};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_ordinal, parse_scheme, parse_sgc, parse_table, parse_term, ParseError};

/// Version of the JSON record layout.
pub const RECORD_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "ordsum", version, about = "Generalized sums of linear orders")]
struct Cli {
    /// Print one JSON record per result instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sum two ordinals with one of the good ordinal sums.
    OrdSum {
        #[arg(long, value_parser = ["hess", "lcm", "dyn", "min", "fsplit", "usual"])]
        op: String,
        a: String,
        b: String,
    },
    /// All order types of instances of a sum of two ordinals.
    Instances { a: String, b: String },
    /// Print the normal form of a term.
    Normalize { t: String },
    /// Whether two terms have the same normal form.
    Eq { t1: String, t2: String },
    /// Longest initial segment in a class, and the rest.
    Decompose {
        #[arg(long)]
        class: String,
        t: String,
    },
    /// The simple sum generated by a class.
    SimpleSum {
        #[arg(long)]
        class: String,
        a: String,
        b: String,
    },
    /// Sifted sum over `hess` or a scheme file.
    Sift {
        #[arg(long)]
        scheme: String,
        a: String,
        b: String,
    },
    /// Sum of two single shuffle blocks.
    ShuffleSum { s1: String, s2: String },
    /// Encode a binary word as a term.
    Encode { word: String },
    /// Decode a word encoding.
    Decode { t: String },
    /// Check a sum table file of `lhs | rhs | result` rows.
    CheckTable { file: PathBuf },
    /// Product bi-colorings.
    Bicolor {
        #[command(subcommand)]
        action: BicolorCommand,
    },
    /// Run property suites.
    Selftest {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
enum BicolorCommand {
    /// Count, and optionally list, the colorings of `m × n`.
    Enum {
        m: usize,
        n: usize,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] ordsum::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(ordsum::Error::Capacity(_)) => 3,
            _ => 2,
        }
    }
}

/// One result line.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub v: u32,
    pub kind: &'static str,
    pub expr: String,
    pub meta: Value,
    #[serde(skip)]
    pub text: String,
}

impl Record {
    fn new(kind: &'static str, expr: impl ToString, meta: Value) -> Record {
        let expr = expr.to_string();
        Record {
            v: RECORD_VERSION,
            kind,
            text: expr.clone(),
            expr,
            meta,
        }
    }

    fn with_text(mut self, text: impl Into<String>) -> Record {
        self.text = text.into();
        self
    }
}

/// Records plus whether every check they report passed.
struct Output {
    records: Vec<Record>,
    passed: bool,
}

impl From<Vec<Record>> for Output {
    fn from(records: Vec<Record>) -> Output {
        Output {
            records,
            passed: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Reads `E,C` or `E,C,D` (exponent, coefficient, descriptor depth).
pub fn capacity_from_env(value: Option<&str>) -> Result<Capacity, CliError> {
    let mut cap = Capacity::default();
    let Some(value) = value else { return Ok(cap) };
    let bad = || {
        CliError::Usage(format!(
            "ORDSUM_CAPACITY must be E,C or E,C,D, got '{value}'"
        ))
    };
    let nums: Vec<u64> = value
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match nums[..] {
        [e, c] => (cap.max_exponent, cap.max_coefficient) = (e, c),
        [e, c, d] => {
            (cap.max_exponent, cap.max_coefficient) = (e, c);
            cap.search_depth = usize::try_from(d).map_err(|_| bad())?;
        }
        _ => return Err(bad()),
    }
    Ok(cap)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, capacity: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let result = capacity_from_env(capacity).and_then(|cap| dispatch(&cli.command, &cap));
    match result {
        Ok(out) => {
            let mut stdout = String::new();
            for r in &out.records {
                if cli.json {
                    stdout.push_str(&serde_json::to_string(r).expect("records serialize"));
                } else {
                    stdout.push_str(&r.text);
                }
                stdout.push('\n');
            }
            Outcome {
                code: if out.passed { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn report_records(name: &str, report: &Report) -> Vec<Record> {
    let mut out: Vec<Record> = report
        .violations
        .iter()
        .map(|v| {
            Record::new("violation", v, json!({ "suite": name })).with_text(format!("  - {v}"))
        })
        .collect();
    let status = if report.passed() { "ok" } else { "FAILED" };
    let summary = format!(
        "{name}: {status} ({} checks, {} violations)",
        report.checked,
        report.violations.len()
    );
    let meta = json!({ "checked": report.checked, "violations": report.violations.len() });
    out.insert(0, Record::new("report", status, meta).with_text(summary));
    out
}

fn dispatch(cmd: &Command, cap: &Capacity) -> Result<Output, CliError> {
    Ok(match cmd {
        Command::OrdSum { op, a, b } => {
            let sum = OrdinalSum::from_name(op)
                .ok_or_else(|| CliError::Usage(format!("unknown op {op}")))?;
            let (x, y) = (parse_ordinal(a)?, parse_ordinal(b)?);
            let r = sum.apply(&x, &y);
            vec![Record::new(
                "ordinal",
                r,
                json!({ "op": op, "a": x.to_string(), "b": y.to_string() }),
            )]
            .into()
        }
        Command::Instances { a, b } => {
            let (x, y) = (parse_ordinal(a)?, parse_ordinal(b)?);
            let rep = check_bounds(&x, &y, cap)?;
            let pair = json!({ "a": x.to_string(), "b": y.to_string() });
            let mut records: Vec<Record> = rep
                .set
                .types
                .iter()
                .map(|g| Record::new("instance", g, pair.clone()))
                .collect();
            let status = if rep.passed() { "ok" } else { "violated" };
            let meta = json!({
                "lower": rep.lower.to_string(),
                "upper": rep.upper.to_string(),
                "within": rep.within,
                "lower_attained": rep.lower_attained,
                "upper_attained": rep.upper_attained,
            });
            records.push(
                Record::new("bounds", format!("{} .. {}", rep.lower, rep.upper), meta)
                    .with_text(format!("bounds: {} .. {} {status}", rep.lower, rep.upper)),
            );
            Output {
                records,
                passed: rep.passed(),
            }
        }
        Command::Normalize { t } => {
            vec![Record::new("term", parse_term(t)?, json!({ "input": t }))].into()
        }
        Command::Eq { t1, t2 } => {
            let (x, y) = (parse_term(t1)?, parse_term(t2)?);
            let same = x == y;
            let meta = json!({ "lhs": x.to_string(), "rhs": y.to_string() });
            Output {
                records: vec![Record::new("bool", same, meta)],
                passed: same,
            }
        }
        Command::Decompose { class, t } => {
            let c = parse_sgc(class)?;
            let d = decompose(&c, &parse_term(t)?, cap)?;
            let meta = json!({ "class": c.to_string() });
            vec![
                Record::new("left", &d.left, meta.clone()).with_text(format!("left: {}", d.left)),
                Record::new("right", &d.right, meta).with_text(format!("right: {}", d.right)),
            ]
            .into()
        }
        Command::SimpleSum { class, a, b } => {
            let c = parse_sgc(class)?;
            let r = simple_sum(&c, &parse_term(a)?, &parse_term(b)?, cap)?;
            vec![Record::new("term", r, json!({ "class": c.to_string() }))].into()
        }
        Command::Sift { scheme, a, b } => {
            let s = load_scheme(scheme)?;
            let r = sifted_sum(&s, &parse_term(a)?, &parse_term(b)?, cap)?;
            vec![Record::new(
                "term",
                r,
                json!({ "scheme": scheme, "levels": s.levels().len() }),
            )]
            .into()
        }
        Command::ShuffleSum { s1, s2 } => {
            let r = shuffle_sum_s(&parse_term(s1)?, &parse_term(s2)?)?;
            vec![Record::new("term", r, json!({}))].into()
        }
        Command::Encode { word } => {
            let w: BinaryWord = word.parse()?;
            vec![Record::new(
                "term",
                encode_word(&w),
                json!({ "word": word }),
            )]
            .into()
        }
        Command::Decode { t } => {
            let w = decode_word(&parse_term(t)?)?;
            let text = if w.bits.is_empty() {
                "(empty)".to_string()
            } else {
                w.to_string()
            };
            vec![Record::new("word", &w, json!({ "length": w.bits.len() })).with_text(text)].into()
        }
        Command::CheckTable { file } => {
            let src = std::fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let table = parse_table(&src)?;
            let report = check_good_table(&table);
            Output {
                records: report_records("table", &report),
                passed: report.passed(),
            }
        }
        Command::Bicolor {
            action: BicolorCommand::Enum { m, n, list },
        } => {
            let all = enumerate_bicolorings(*m, *n)?;
            let dims = json!({ "m": m, "n": n });
            let mut records = vec![Record::new("count", all.len(), dims.clone())
                .with_text(format!("count: {}", all.len()))];
            if *list {
                for c in &all {
                    let flat = c.to_string().replace('\n', "/");
                    let matrix = if *n == 0 || *m == 0 {
                        "(empty)".to_string()
                    } else {
                        c.to_string()
                    };
                    records.push(
                        Record::new("bicoloring", flat, dims.clone())
                            .with_text(format!("\n{matrix}")),
                    );
                }
            }
            records.into()
        }
        Command::Selftest { suite } => {
            let results = selftest::run(suite, cap)?;
            let passed = results.iter().all(|(_, r)| r.passed());
            let records = results
                .iter()
                .flat_map(|(name, r)| report_records(name, r))
                .collect();
            Output { records, passed }
        }
    })
}

fn load_scheme(name: &str) -> Result<FiltrationScheme, CliError> {
    if name == "hess" {
        return Ok(FiltrationScheme::hessenberg(3));
    }
    let src = std::fs::read_to_string(name).map_err(|e| CliError::Usage(format!("{name}: {e}")))?;
    Ok(parse_scheme(&src)?)
}
