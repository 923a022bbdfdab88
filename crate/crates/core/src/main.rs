//! Thin command line over the library: JSON in, JSON (or DOT/text) out.
//!
//! Exit codes: 0 success, 1 verification failures, 2 usage errors (from the
//! parser), 3 invalid input data.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crystal_tableaux::binfinity::{self, FString, PsiElement};
use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::crystal::Dir;
use crystal_tableaux::dot;
use crystal_tableaux::enumerate::{self, DEFAULT_CAP};
use crystal_tableaux::tableau::{DominantWeight, Tableau};
use crystal_tableaux::verify::{self, Report};

#[derive(Parser)]
#[command(
    name = "crystal-tableaux",
    version,
    about = "Crystal combinatorics of classical Lie types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

impl From<TypeArg> for LieType {
    fn from(t: TypeArg) -> LieType {
        match t {
            TypeArg::A => LieType::A,
            TypeArg::B => LieType::B,
            TypeArg::C => LieType::C,
            TypeArg::D => LieType::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Common {
    /// Lie type.
    #[arg(long = "type", value_enum)]
    lie_type: TypeArg,
    /// Rank n.
    #[arg(long)]
    rank: usize,
    /// Input file; stdin when omitted or "-".
    #[arg(long)]
    input: Option<String>,
    /// Output file; stdout when omitted or "-".
    #[arg(long)]
    output: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Traversal order; only the fixed deterministic order is provided.
    #[arg(long = "seed-order", default_value = "fixed")]
    seed_order: String,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a crystal operator to a tableau or embedded element.
    Apply {
        #[command(flatten)]
        common: Common,
        /// Operator: e (raising) or f (lowering).
        #[arg(long)]
        op: String,
        /// Crystal index, 1-based.
        #[arg(long)]
        index: usize,
    },
    /// Statistics (phi, eps) of a tableau or embedded element, per index.
    Stats {
        #[command(flatten)]
        common: Common,
    },
    /// Project a lowering string onto a highest-weight crystal.
    #[command(name = "pi-lambda")]
    PiLambda {
        #[command(flatten)]
        common: Common,
        /// Weight coefficients, comma-separated; defaults to the minimal
        /// large weight of the string.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Embed a lowering string into the elementary-crystal tensor product.
    Psi {
        #[command(flatten)]
        common: Common,
    },
    /// Row-statistics map of a tableau.
    #[command(name = "f-of-t")]
    FOfT {
        #[command(flatten)]
        common: Common,
    },
    /// Test an embedded element against the image chains.
    #[command(name = "image-check")]
    ImageCheck {
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate a highest-weight crystal.
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Weight coefficients, comma-separated cardinality-n list.
        #[arg(long)]
        lambda: String,
        /// Node cap.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exhaustively verify the embedding identity up to a string length.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Realize every chain-valid exponent array up to a bound.
    Probe {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Export a highest-weight crystal graph as DOT.
    #[command(name = "export-dot")]
    ExportDot {
        #[command(flatten)]
        common: Common,
        /// Weight coefficients, comma-separated cardinality-n list.
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

/// Anything that invalidates the run after flag parsing.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(common: &Common) -> Result<String, Failure> {
    match common.input.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::invalid(format!("reading stdin: {e}")))?;
            Ok(buf)
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::invalid(format!("reading {path}: {e}"))),
    }
}

fn write_output(common: &Common, text: &str) -> Result<(), Failure> {
    match common.output.as_deref() {
        None | Some("-") => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::invalid(format!("writing stdout: {e}")))?;
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::invalid(format!("writing {path}: {e}")))
        }
    }
}

fn context(common: &Common) -> Result<CartanData, Failure> {
    if common.seed_order != "fixed" {
        return Err(Failure::invalid("only --seed-order fixed is supported"));
    }
    Ok(CartanData::new(common.lie_type.into(), common.rank)?)
}

fn parse_lambda(cd: &CartanData, text: &str) -> Result<DominantWeight, Failure> {
    let coeffs: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::invalid(format!("bad weight list {text:?}: {e}")))?;
    Ok(DominantWeight::new(cd, coeffs)?)
}

/// A tableau or an embedded element, told apart by their fields.
enum Element {
    Tableau(Tableau),
    Psi(PsiElement),
}

fn parse_element(cd: &CartanData, text: &str) -> Result<Element, Failure> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::invalid("expected a JSON object"))?;
    if obj.contains_key("rows") {
        let t: Tableau = serde_json::from_value(value.clone())?;
        t.check_context(cd)?;
        Ok(Element::Tableau(t))
    } else if obj.contains_key("blocks") {
        let p: PsiElement = serde_json::from_value(value.clone())?;
        p.check_context(cd)?;
        Ok(Element::Psi(p))
    } else {
        Err(Failure::invalid("object has neither rows nor blocks"))
    }
}

fn parse_fstring(cd: &CartanData, text: &str) -> Result<(FString, Option<Vec<i64>>), Failure> {
    #[derive(serde::Deserialize)]
    struct In {
        indices: Vec<usize>,
        #[serde(default)]
        lambda: Option<Vec<i64>>,
    }
    let raw: In = serde_json::from_str(text)?;
    Ok((FString::new(cd, raw.indices)?, raw.lambda))
}

fn tableau_text(t: &Tableau) -> String {
    if t.is_empty() {
        return "(empty tableau)\n".to_string();
    }
    let mut out = String::new();
    for row in t.rows() {
        let syms: Vec<String> = row.iter().map(|x| x.symbol()).collect();
        out.push_str(&syms.join(" "));
        out.push('\n');
    }
    out
}

fn psi_text(cd: &CartanData, p: &PsiElement) -> String {
    let seq = binfinity::PsiSequence::new(cd);
    let mut parts = vec!["u_inf".to_string()];
    let mut offset = 0;
    for slots in seq.blocks() {
        let block: Vec<String> = slots
            .iter()
            .enumerate()
            .map(|(s, slot)| format!("b{}({})", slot.index, -p.exponents()[offset + s]))
            .collect();
        offset += slots.len();
        parts.push(format!("[{}]", block.join(" ")));
    }
    parts.join(" (x) ") + "\n"
}

fn render_value(common: &Common, value: &Value) -> Result<String, Failure> {
    match common.format {
        Format::Json | Format::Dot => Ok(serde_json::to_string_pretty(value)? + "\n"),
        Format::Text => Ok(format!("{value}\n")),
    }
}

fn element_output(
    common: &Common,
    cd: &CartanData,
    e: Option<&Element>,
) -> Result<String, Failure> {
    match (common.format, e) {
        (Format::Text, Some(Element::Tableau(t))) => Ok(tableau_text(t)),
        (Format::Text, Some(Element::Psi(p))) => Ok(psi_text(cd, p)),
        (Format::Text, None) => Ok("0\n".to_string()),
        (_, Some(Element::Tableau(t))) => Ok(serde_json::to_string_pretty(t)? + "\n"),
        (_, Some(Element::Psi(p))) => Ok(serde_json::to_string_pretty(p)? + "\n"),
        (_, None) => Ok("null\n".to_string()),
    }
}

fn report_lines(report: &Report) -> Result<String, Failure> {
    let mut out = String::new();
    for rec in &report.records {
        out.push_str(&serde_json::to_string(rec)?);
        out.push('\n');
    }
    let summary = json!({
        "check": "summary",
        "checked": report.checked,
        "failures": report.failures,
        "axiom_checks": report.axiom_checks,
        "axiom_failures": report.axiom_failures,
    });
    out.push_str(&serde_json::to_string(&summary)?);
    out.push('\n');
    Ok(out)
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Apply { common, op, index } => {
            let cd = context(&common)?;
            let dir: Dir = op.parse()?;
            if index == 0 || index > cd.rank() {
                return Err(Failure::invalid(format!(
                    "index {index} out of range 1..={}",
                    cd.rank()
                )));
            }
            let element = parse_element(&cd, &read_input(&common)?)?;
            let result = match &element {
                Element::Tableau(t) => t.apply(&cd, index, dir).map(Element::Tableau),
                Element::Psi(p) => p.apply(&cd, index, dir)?.map(Element::Psi),
            };
            write_output(&common, &element_output(&common, &cd, result.as_ref())?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { common } => {
            let cd = context(&common)?;
            let element = parse_element(&cd, &read_input(&common)?)?;
            let stats: Vec<(i64, i64)> = (1..=cd.rank())
                .map(|i| match &element {
                    Element::Tableau(t) => t.stats(&cd, i),
                    Element::Psi(p) => p.stats(&cd, i),
                })
                .collect();
            let value = json!({
                "phi": stats.iter().map(|s| s.0).collect::<Vec<_>>(),
                "eps": stats.iter().map(|s| s.1).collect::<Vec<_>>(),
            });
            write_output(&common, &render_value(&common, &value)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::PiLambda { common, lambda } => {
            let cd = context(&common)?;
            let (b, lambda_in_input) = parse_fstring(&cd, &read_input(&common)?)?;
            let lam = match (lambda, lambda_in_input) {
                (Some(text), _) => parse_lambda(&cd, &text)?,
                (None, Some(coeffs)) => DominantWeight::new(&cd, coeffs)?,
                (None, None) => binfinity::choose_large_lambda(&cd, &b),
            };
            let t = binfinity::pi_lambda(&cd, &b, &lam).map(Element::Tableau);
            write_output(&common, &element_output(&common, &cd, t.as_ref())?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Psi { common } => {
            let cd = context(&common)?;
            let (b, _) = parse_fstring(&cd, &read_input(&common)?)?;
            let p = binfinity::psi_embed(&cd, &b)?;
            write_output(
                &common,
                &element_output(&common, &cd, Some(&Element::Psi(p)))?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::FOfT { common } => {
            let cd = context(&common)?;
            let element = parse_element(&cd, &read_input(&common)?)?;
            let t = match element {
                Element::Tableau(t) => t,
                Element::Psi(_) => return Err(Failure::invalid("f-of-t expects a tableau")),
            };
            if !t.is_almost_semistandard(&cd) {
                return Err(Failure::invalid("tableau is not almost semistandard"));
            }
            let p = binfinity::f_of_t(&cd, &t)?;
            write_output(
                &common,
                &element_output(&common, &cd, Some(&Element::Psi(p)))?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ImageCheck { common } => {
            let cd = context(&common)?;
            let element = parse_element(&cd, &read_input(&common)?)?;
            let p = match element {
                Element::Psi(p) => p,
                Element::Tableau(_) => {
                    return Err(Failure::invalid("image-check expects an embedded element"))
                }
            };
            let value = json!({ "image_member": binfinity::image_member(&cd, &p) });
            write_output(&common, &render_value(&common, &value)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            common,
            lambda,
            cap,
        } => {
            let cd = context(&common)?;
            let lam = parse_lambda(&cd, &lambda)?;
            let graph = enumerate::enumerate_crystal(&cd, &lam, cap)?;
            match common.format {
                Format::Text => {
                    let mut out = String::new();
                    for t in &graph.nodes {
                        out.push_str(&dot::compact_id(t));
                        out.push('\n');
                    }
                    write_output(&common, &out)?;
                }
                _ => {
                    let value = json!({
                        "count": graph.nodes.len(),
                        "elements": graph.nodes,
                    });
                    write_output(&common, &render_value(&common, &value)?)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, depth } => {
            let cd = context(&common)?;
            let report = verify::verify_theorem(&cd, depth)?;
            write_output(&common, &report_lines(&report)?)?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Probe { common, bound } => {
            let cd = context(&common)?;
            let report = verify::surjectivity_probe(&cd, bound)?;
            write_output(&common, &report_lines(&report)?)?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::ExportDot {
            common,
            lambda,
            cap,
        } => {
            let cd = context(&common)?;
            let lam = parse_lambda(&cd, &lambda)?;
            let graph = enumerate::enumerate_crystal(&cd, &lam, cap)?;
            write_output(&common, &dot::export_dot(&graph))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
