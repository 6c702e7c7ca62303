//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed (table mismatch or oracle
//! disagreement), 2 invalid input or a resource cap was hit. Reports go to
//! stdout and diagnostics to stderr.

use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::curves::{product_one_forms, quotient_genus, CurveProduct};
use crate::domains::{make_domain, DomainSpec, Family};
use crate::error::Error;
use crate::mok::Convention;
use crate::oracle::{compare_with_closed_form, OracleConfig, TieBreak};
use crate::report::{ReportDocument, TableDocument, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "symdiff", version)]
#[command(about = "Decompose symmetric powers of isotropy modules of bounded symmetric domains and score them")]
struct Cli {
    /// Print provenance (version, arguments, elapsed time) to stderr.
    #[arg(long, global = true)]
    meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible decomposition of Sym^s of the isotropy module.
    Decompose {
        /// I:p,q | II:n | III:n | IV:n | poly:n
        #[arg(long)]
        domain: String,
        /// s or an inclusive range a..b
        #[arg(long)]
        sym: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Decomposition with the pairing score and classification of every summand.
    Score {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        sym: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::MMinusHighest)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Compare computed thresholds with the listed table over a parameter sweep.
    VerifyTable {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_param: usize,
        /// Largest s to scan; defaults to the larger of the closed form and the listed value.
        #[arg(long)]
        smax: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Score table of the n-fold polydisk.
    Polydisk {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        sym: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// One-forms on products of curves and genera of free quotients.
    Curves {
        #[command(subcommand)]
        which: CurvesCommand,
    },
    /// Certify the closed-form decomposition by brute-force peeling.
    OracleCheck {
        #[arg(long)]
        domain: String,
        #[arg(long)]
        sym: String,
    },
}

#[derive(Subcommand, Debug)]
enum CurvesCommand {
    /// Sum of the genera of the factors.
    Product {
        #[arg(long, value_delimiter = ',', required = true)]
        genera: Vec<u64>,
    },
    /// Genus of the quotient by a free action.
    Quotient {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        order: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    MMinusHighest,
    MPlusLowest,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::MMinusHighest => Convention::MMinusHighest,
            ConventionArg::MPlusLowest => Convention::MPlusLowest,
        }
    }
}

#[allow(clippy::upper_case_acronyms)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
    #[value(name = "IV")]
    IV,
    Poly,
    All,
}

/// Parses `s` or an inclusive range `a..b`.
pub fn parse_sym_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("invalid symmetric power `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(a..=b)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Domains covered by `verify-table --family f --max-param k`.
fn sweep(family: FamilyArg, k: usize) -> Vec<Family> {
    let mut out = Vec::new();
    let all = family == FamilyArg::All;
    if all || family == FamilyArg::I {
        for p in 1..=k {
            for q in p..=k {
                out.push(Family::I { p, q });
            }
        }
    }
    if all || family == FamilyArg::II {
        out.extend((2..=k).map(|n| Family::II { n }));
    }
    if all || family == FamilyArg::III {
        out.extend((1..=k).map(|n| Family::III { n }));
    }
    if all || family == FamilyArg::IV {
        out.extend((3..=k).map(|n| Family::IV { n }));
    }
    if all || family == FamilyArg::Poly {
        out.extend((1..=k).map(|n| Family::Poly { n }));
    }
    out
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PeelingInconsistency(_) | Error::ThresholdDisagreement { .. } => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

enum Failure {
    Input(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn domain(spec: &str, err: &mut dyn Write) -> Result<DomainSpec, Failure> {
    let d = make_domain(spec.parse()?)?;
    if let Some(w) = d.warning {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(d)
}

fn sym(spec: &str) -> Result<RangeInclusive<u32>, Failure> {
    parse_sym_range(spec).map_err(Failure::Input)
}

fn render(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Pretty => doc.to_pretty(),
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let mut code = EXIT_OK;
    let text = match command {
        Command::Decompose { domain: spec, sym: range, format } => {
            let d = domain(&spec, err)?;
            render(&ReportDocument::build(&d, sym(&range)?, Convention::default())?, format)
        }
        Command::Score { domain: spec, sym: range, convention, format } => {
            let d = domain(&spec, err)?;
            render(&ReportDocument::build(&d, sym(&range)?, convention.into())?, format)
        }
        Command::Polydisk { n, sym: range, format } => {
            let d = make_domain(Family::Poly { n })?;
            render(&ReportDocument::build(&d, sym(&range)?, Convention::default())?, format)
        }
        Command::VerifyTable { family, max_param, smax, format } => {
            if smax == Some(0) {
                return Err(Failure::Input("--smax must be at least 1".into()));
            }
            let rows = sweep(family, max_param)
                .into_par_iter()
                .map(|f| TableRow::build(&make_domain(f)?, smax))
                .collect::<Result<Vec<_>, Error>>()?;
            if rows.iter().any(TableRow::is_failure) {
                let _ = writeln!(err, "verification failed for at least one domain");
                code = EXIT_VERIFY;
            }
            let doc = TableDocument::new(rows);
            match format {
                Format::Pretty => doc.to_pretty(),
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            }
        }
        Command::Curves { which } => match which {
            CurvesCommand::Product { genera } => {
                format!("{}\n", product_one_forms(&CurveProduct::new(genera)?))
            }
            CurvesCommand::Quotient { genus, order } => format!("{}\n", quotient_genus(genus, order)?),
        },
        Command::OracleCheck { domain: spec, sym: range } => {
            let d = domain(&spec, err)?;
            let cfg = OracleConfig::from_env()?;
            let mut text = String::new();
            for s in sym(&range)? {
                let cmp = compare_with_closed_form(&d, s, &cfg, TieBreak::Lex)?;
                let status = if cmp.agrees() {
                    "agree"
                } else {
                    code = EXIT_VERIFY;
                    "DISAGREE"
                };
                text.push_str(&format!(
                    "{} Sym^{s}: closed form {} summands, peeling {} summands: {status}\n",
                    d.family,
                    cmp.closed_form.len(),
                    cmp.peeled.len()
                ));
                if !cmp.agrees() {
                    for (w, m) in &cmp.closed_form {
                        text.push_str(&format!("  closed {w} x{m}\n"));
                    }
                    for (w, m) in &cmp.peeled {
                        text.push_str(&format!("  peeled {w} x{m}\n"));
                    }
                }
            }
            text
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("cannot write output: {e}")))?;
    Ok(code)
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };

    let started = Instant::now();
    let meta = cli.meta;
    let code = match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    if meta {
        let argv: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
        let _ = writeln!(err, "meta: symdiff {} args {:?} elapsed_ms {}", env!("CARGO_PKG_VERSION"), argv, started.elapsed().as_millis());
    }
    code
}
