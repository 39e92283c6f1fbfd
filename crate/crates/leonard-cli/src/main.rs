//! `leonard`: JSON front end for constructing, checking and classifying
//! parameter arrays.
//!
//! Every verb writes one JSON document to standard output. Exit status is 0 on
//! success, 1 when the input fails validation, verification or
//! classification (the JSON result is still printed), and 2 for usage, input
//! and precondition errors, which are reported as JSON on standard error.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leonard::json::{
    aw_to_json, classification_to_json, pa_from_json, pa_to_json, parse_json, realization_to_json, report_to_json,
    tensor_to_json, violations_to_json, matrix_to_json,
};
use leonard::realize::{gram_matrix, intersection_numbers, p_matrix, realize, Basis};
use leonard::formulas::{p_table, u_table, v_table};
use leonard::{classify, d4_orbit, make_family, solve_askey_wilson, validate, verify_identities, FamilyParams, FamilyTag, FieldSpec};

#[derive(Parser)]
#[command(name = "leonard", version, about = "Exact Leonard system toolkit with JSON input and output")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the parameter array of a named family.
    Gen {
        #[arg(long)]
        family: FamilyTag,
        #[arg(long)]
        d: usize,
        /// `name=value`, repeatable.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, String)>,
        /// `Q`, `GF(p)`, `GF(2^k)`, `GF(2^k,bits)` or the JSON object form.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// List every violated defining condition.
    Validate { input: String },
    /// Matrices of `A` and `A*` in one of the three bases.
    Realize {
        input: String,
        #[arg(long, value_enum)]
        basis: BasisArg,
    },
    /// Run the identity catalog.
    Verify { input: String },
    /// Identify the family and case of an array.
    Classify { input: String },
    /// All distinct arrays of the D4 relatives.
    Orbit { input: String },
    /// A table of polynomial values or a derived matrix.
    Table {
        input: String,
        #[arg(long, value_enum)]
        what: TableArg,
    },
    /// Solve the Askey–Wilson relations.
    Aw {
        input: String,
        #[arg(long, value_enum, default_value = "standard")]
        basis: BasisArg,
    },
    /// Intersection numbers `p^h_ij` indexed `[h][i][j]`.
    Ix { input: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monic,
    Split,
    Standard,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Monic => Basis::Monic,
            BasisArg::Split => Basis::Split,
            BasisArg::Standard => Basis::Standard,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    /// `u_i(θ_j)`
    #[value(name = "u")]
    U,
    /// `v_i(θ_j)`
    #[value(name = "v")]
    V,
    /// `p_i(θ_j)`
    #[value(name = "p")]
    LowerP,
    /// `P_ij = v_j(θ_i)`
    #[value(name = "P")]
    UpperP,
    /// `diag(k_i/ν)`
    #[value(name = "gram")]
    Gram,
}

fn parse_param(s: &str) -> std::result::Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

/// A path, `-` for standard input, or inline JSON.
fn read_input(input: &str) -> Result<Value> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else if input.trim_start().starts_with(['{', '[']) {
        input.to_string()
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    Ok(parse_json(&text)?)
}

fn read_field(s: &str) -> Result<FieldSpec> {
    if s.trim_start().starts_with('{') {
        return Ok(leonard::json::field_from_json(&parse_json(s)?)?);
    }
    Ok(s.parse()?)
}

/// The JSON result and whether it counts as success.
fn run(cmd: Command) -> Result<(Value, bool)> {
    Ok(match cmd {
        Command::Gen { family, d, params, field } => {
            let field = read_field(&field)?;
            let mut fp = FamilyParams::new(family, d);
            for (k, v) in &params {
                if fp.params.contains_key(k) {
                    bail!("parameter {k} given twice");
                }
                fp = fp.with(k, field.parse(v)?);
            }
            (pa_to_json(&make_family(&fp, field)?), true)
        }
        Command::Validate { input } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            let v = validate(&pa)?;
            (violations_to_json(&v), v.is_empty())
        }
        Command::Realize { input, basis } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            (realization_to_json(&realize(&pa, basis.into())?), true)
        }
        Command::Verify { input } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            let report = verify_identities(&pa)?;
            (report_to_json(&report), report.all_passed())
        }
        Command::Classify { input } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            let c = classify(&pa)?;
            (classification_to_json(&c), !c.matches.is_empty())
        }
        Command::Orbit { input } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            pa.ensure_valid()?;
            (json!(d4_orbit(&pa)?.iter().map(pa_to_json).collect::<Vec<_>>()), true)
        }
        Command::Table { input, what } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            let m = match what {
                TableArg::U => u_table(&pa)?,
                TableArg::V => v_table(&pa)?,
                TableArg::LowerP => p_table(&pa)?,
                TableArg::UpperP => p_matrix(&pa)?,
                TableArg::Gram => gram_matrix(&pa)?,
            };
            (matrix_to_json(&m), true)
        }
        Command::Aw { input, basis } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            (aw_to_json(&solve_askey_wilson(&realize(&pa, basis.into())?)?), true)
        }
        Command::Ix { input } => {
            let pa = pa_from_json(&read_input(&input)?)?;
            (tensor_to_json(&intersection_numbers(&pa)?), true)
        }
    })
}

/// Error kind and exit status for a failure.
fn classify_error(e: &anyhow::Error) -> (&'static str, u8) {
    use leonard::Error as E;
    match e.downcast_ref::<E>() {
        Some(E::InvalidArray(_)) => ("invalid_array", 1),
        Some(E::Json(_)) => ("malformed_json", 2),
        Some(E::InvalidField(_)) => ("invalid_field", 2),
        Some(E::Parse { .. }) => ("parse", 2),
        Some(E::Precondition(_)) => ("precondition", 2),
        Some(E::Length(_) | E::Dimension(_) | E::NotInField(_) | E::Shape(_)) => ("shape", 2),
        Some(E::DivisionByZero | E::Hypergeometric(_) | E::Inconsistent(_)) => ("arithmetic", 2),
        Some(E::Internal(_)) => ("internal", 2),
        None if e.downcast_ref::<io::Error>().is_some() => ("io", 2),
        None => ("usage", 2),
    }
}

fn emit_error(kind: &str, message: &str) {
    let v = json!({"error": {"kind": kind, "message": message}});
    let _ = writeln!(io::stderr(), "{}", serde_json::to_string_pretty(&v).unwrap_or_default());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit_error("usage", e.to_string().trim());
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let mut out = io::stdout().lock();
            if writeln!(out, "{text}").and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            let (kind, code) = classify_error(&e);
            emit_error(kind, &format!("{e:#}"));
            ExitCode::from(code)
        }
    }
}
