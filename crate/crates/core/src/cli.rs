//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification came out other than expected,
//! 2 usage or parse error. Results go to stdout; diagnostics to stderr.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::arith::Rational;
use crate::catalog::{named_prefix, verify_all, verify_identity, NamedSequence, IDENTITY_KEYS};
use crate::decimation::{decimate_prefix, decimated_recurrence, decimation_operator};
use crate::error::Error;
use crate::fixed_points::FixedPointReport;
use crate::hankel::hankel_transform;
use crate::operator::{apply, compose, inverse, transform_recurrence, BinomialOperator};
use crate::sequences::{variant_sequence, Degree2Spec, LinearRecurrence, SequencePrefix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        CommandResult { exit_code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "binterp", version, about = "Exact generalized binomial interpolated operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply L^(h,y) termwise to a prefix.
    Apply {
        #[command(flatten)]
        op: OpArgs,
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Transform a recurrence: new characteristic polynomial and initial terms.
    Transform {
        #[command(flatten)]
        op: OpArgs,
        #[command(flatten)]
        rec: RecArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compose (h,y) after (k,w).
    Compose {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Inverse operator (1/h, -y/h).
    Invert {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decimate a prefix: (a_0, a_k, a_2k, ...).
    Decimate {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        src: SourceArgs,
        /// Print the decimating operator (u_k, -q u_{k-1}) of a degree-2 recurrence.
        #[arg(long, conflicts_with = "recurrence")]
        operator: bool,
        /// Print the decimated recurrence of a degree-2 recurrence.
        #[arg(long)]
        recurrence: bool,
    },
    /// Hankel transform of a prefix, optionally after applying L^(h,y).
    Hankel {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long, allow_hyphen_values = true, requires = "y")]
        h: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "h")]
        y: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Variant sequence a_{n+1} = sum C(n,i) h^i y^(n-i) a_i.
    Variant {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a0: String,
        #[arg(long)]
        n: usize,
    },
    /// Named sequences.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Verify catalog identities; KEY is an identity key or "all".
    Verify {
        key: String,
        #[arg(long, default_value_t = 30)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// List every (h,y) on a rational grid that fixes the given prefix.
    SearchFixed {
        /// `a..b`, `a..b:step` or a comma list.
        #[arg(long, allow_hyphen_values = true)]
        h_grid: String,
        #[arg(long, allow_hyphen_values = true)]
        y_grid: String,
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Keys, OEIS numbers and generating rules.
    List,
    /// Prefix of a named sequence.
    Show {
        key: String,
        #[arg(long)]
        n: usize,
    },
    /// Identity keys accepted by `verify`.
    Identities,
}

#[derive(Args, Debug)]
struct OpArgs {
    #[arg(long, allow_hyphen_values = true)]
    h: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

impl OpArgs {
    fn operator(&self) -> Result<BinomialOperator, Error> {
        Ok(BinomialOperator::new(self.h.parse::<Rational>()?, self.y.parse::<Rational>()?))
    }
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RecArgs {
    /// `<charpoly>;<initial terms>`, e.g. `t^2-t-1;0,1`.
    #[arg(long, allow_hyphen_values = true)]
    rec: Option<String>,
    /// JSON record {"charpoly": [...], "initial": [...]}.
    #[arg(long)]
    rec_file: Option<String>,
}

impl RecArgs {
    fn recurrence(&self) -> Result<LinearRecurrence, Error> {
        match (&self.rec, &self.rec_file) {
            (Some(text), _) => text.parse(),
            (None, Some(path)) => read_rec_file(path),
            (None, None) => Err(Error::Interchange("no recurrence given".into())),
        }
    }
}

fn read_rec_file(path: &str) -> Result<LinearRecurrence, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Interchange(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Interchange(format!("{path}: {e}")))
}

#[derive(Args, Debug)]
struct SourceArgs {
    /// Comma-separated rationals, or `-` to read one line from stdin.
    #[arg(long, allow_hyphen_values = true, group = "source")]
    seq: Option<String>,
    /// `<charpoly>;<initial terms>`.
    #[arg(long, allow_hyphen_values = true, group = "source")]
    rec: Option<String>,
    /// JSON recurrence record.
    #[arg(long, group = "source")]
    rec_file: Option<String>,
    /// Catalog key.
    #[arg(long, group = "source")]
    named: Option<String>,
    /// Number of terms; required for recurrences and named sequences,
    /// truncates an explicit prefix.
    #[arg(long)]
    n: Option<usize>,
}

enum Source {
    Prefix(SequencePrefix),
    Recurrence(LinearRecurrence),
}

impl SourceArgs {
    fn source(&self, stdin: &mut dyn Read) -> Result<Source, Error> {
        if let Some(text) = &self.seq {
            let text = if text == "-" {
                let mut buf = String::new();
                stdin
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Interchange(format!("stdin: {e}")))?;
                buf.lines().find(|l| !l.trim().is_empty()).unwrap_or("").to_string()
            } else {
                text.clone()
            };
            let a: SequencePrefix = text.parse()?;
            return Ok(Source::Prefix(match self.n {
                Some(n) => a.truncate(n)?,
                None => a,
            }));
        }
        if let Some(text) = &self.rec {
            return Ok(Source::Recurrence(text.parse()?));
        }
        if let Some(path) = &self.rec_file {
            return Ok(Source::Recurrence(read_rec_file(path)?));
        }
        if let Some(key) = &self.named {
            return Ok(Source::Prefix(named_prefix(key, self.count()?)?));
        }
        Err(Error::Interchange("one of --seq, --rec, --rec-file or --named is required".into()))
    }

    fn count(&self) -> Result<usize, Error> {
        self.n.ok_or_else(|| Error::Interchange("--n is required for this input".into()))
    }

    fn prefix(&self, stdin: &mut dyn Read) -> Result<SequencePrefix, Error> {
        match self.source(stdin)? {
            Source::Prefix(a) => Ok(a),
            Source::Recurrence(rec) => rec.generate(self.count()?),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// Rational grid: `a..b` (step 1), `a..b:step`, or `x,y,z`.
pub fn parse_grid(text: &str) -> Result<Vec<Rational>, Error> {
    let bad = |why: &str| Error::Interchange(format!("bad grid {text:?}: {why}"));
    if let Some((lo, rest)) = text.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (hi, step.parse::<Rational>()?),
            None => (rest, Rational::one()),
        };
        if step.is_zero() || step.is_negative() {
            return Err(bad("step must be positive"));
        }
        let (lo, hi) = (lo.parse::<Rational>()?, hi.parse::<Rational>()?);
        let mut out = Vec::new();
        let mut x = lo;
        while x <= hi {
            out.push(x.clone());
            x += &step;
        }
        Ok(out)
    } else if text.trim().is_empty() {
        Ok(Vec::new())
    } else {
        text.split(',').map(|t| t.trim().parse()).collect()
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { exit_code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                CommandResult::ok(rendered)
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(result) => result,
        Err(e) => CommandResult::usage(e),
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<CommandResult, Error> {
    let out = match command {
        Command::Apply { op, src, json: as_json } => {
            let op = op.operator()?;
            let b = apply(&op, &src.prefix(stdin)?);
            if as_json {
                json(&b)
            } else {
                format!("{b}\n")
            }
        }
        Command::Transform { op, rec, json: as_json } => {
            let image = transform_recurrence(&op.operator()?, &rec.recurrence()?)?;
            if as_json {
                json(&image)
            } else {
                format!("{image}\n")
            }
        }
        Command::Compose { op, k, w, json: as_json } => {
            let inner = BinomialOperator::new(k.parse::<Rational>()?, w.parse::<Rational>()?);
            let c = compose(&op.operator()?, &inner);
            if as_json {
                json(&c)
            } else {
                format!("{},{}\n", c.h, c.y)
            }
        }
        Command::Invert { op, json: as_json } => {
            let inv = inverse(&op.operator()?)?;
            if as_json {
                json(&inv)
            } else {
                format!("{},{}\n", inv.h, inv.y)
            }
        }
        Command::Decimate { k, src, operator, recurrence } => {
            if operator || recurrence {
                let spec = match src.source(stdin)? {
                    Source::Recurrence(rec) => degree2(&rec)?,
                    Source::Prefix(_) => {
                        return Err(Error::Interchange("--operator/--recurrence need a degree-2 --rec".into()))
                    }
                };
                if operator {
                    let op = decimation_operator(&spec.p, &spec.q, k)?;
                    format!("{},{}\n", op.h, op.y)
                } else {
                    format!("{}\n", decimated_recurrence(&spec, k)?)
                }
            } else {
                let a = src.prefix(stdin)?;
                format!("{}\n", decimate_prefix(&a, k)?)
            }
        }
        Command::Hankel { src, h, y, json: as_json } => {
            let mut a = src.prefix(stdin)?;
            if let (Some(h), Some(y)) = (h, y) {
                a = apply(&BinomialOperator::new(h.parse::<Rational>()?, y.parse::<Rational>()?), &a);
            }
            let result = hankel_transform(&a);
            if as_json {
                json(&result)
            } else {
                format!("{}\n", SequencePrefix::new(result.determinants)?)
            }
        }
        Command::Variant { op, a0, n } => {
            let a = variant_sequence(&op.operator()?.h, &op.operator()?.y, &a0.parse()?, n)?;
            format!("{a}\n")
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => NamedSequence::ALL
                .iter()
                .map(|s| format!("{}\t{}\t{}\n", s.key(), s.oeis(), s.rule()))
                .collect(),
            CatalogAction::Show { key, n } => format!("{}\n", named_prefix(&key, n)?),
            CatalogAction::Identities => IDENTITY_KEYS.iter().map(|k| format!("{k}\n")).collect(),
        },
        Command::Verify { key, n, json: as_json } => {
            let cases = if key == "all" { verify_all(n) } else { vec![verify_identity(&key, n)?] };
            let stdout = if as_json {
                json(&cases)
            } else {
                cases.iter().map(|c| format!("{c}\n")).collect()
            };
            let exit_code = if cases.iter().all(|c| c.as_expected()) { EXIT_OK } else { EXIT_VERIFY };
            return Ok(CommandResult { exit_code, stdout, stderr: String::new() });
        }
        Command::SearchFixed { h_grid, y_grid, src, json: as_json } => {
            let hs = parse_grid(&h_grid)?;
            let ys = parse_grid(&y_grid)?;
            if hs.is_empty() || ys.is_empty() {
                return Err(Error::Interchange("empty grid".into()));
            }
            let a = src.prefix(stdin)?;
            let reports: Vec<FixedPointReport> = hs
                .iter()
                .flat_map(|h| ys.iter().map(move |y| BinomialOperator::new(h.clone(), y.clone())))
                .map(|op| FixedPointReport::check(&op, &a))
                .filter(|r| r.fixed)
                .collect();
            if as_json {
                json(&reports)
            } else {
                reports
                    .iter()
                    .map(|r| format!("{},{}\n", r.operator.h, r.operator.y))
                    .collect()
            }
        }
    };
    Ok(CommandResult::ok(out))
}

fn degree2(rec: &LinearRecurrence) -> Result<Degree2Spec, Error> {
    match (rec.charpoly().trailing(), rec.initial()) {
        ([c1, c2], [d, g]) => Ok(Degree2Spec { delta: d.clone(), gamma: g.clone(), p: -c1, q: c2.clone() }),
        _ => Err(Error::InvalidSpec(format!("order {} recurrence, expected 2", rec.order()))),
    }
}
