use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use indrep_core::cartan::{cayley_graph, enumerate_cartans, normal_form_lambda};
use indrep_core::checks::{run_suite, MAX_RANK_CAP, SUITES};
use indrep_core::decompose::{kv_decompose, reduce_induced, verdict};
use indrep_core::json::{self as wire, DecomposeRequest};
use indrep_core::weylrep::verify_coherent_continuation_dim;
use indrep_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "indrep",
    version,
    about = "Decompose and test irreducibility of induced representations of Sp(p,q) and SO*(2n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Io {
    /// Read the request from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the response here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Treat the input as JSON lines and process them on N threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an induced module to derived functor modules.
    Decompose(Io),
    /// Irreducibility verdict for a reduced induced module.
    Verdict(Io),
    /// List Cartan classes and Cayley edges for a group and κ.
    Cartans(Io),
    /// Coherent continuation dimension for SO*(4m).
    Ccdim {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Run the verification suites.
    CheckLemmas {
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        /// Restrict to the named suites (repeatable).
        #[arg(long)]
        lemma: Vec<String>,
        #[command(flatten)]
        io: Io,
    },
}

fn read_input(io: &Io) -> Result<String> {
    match &io.input {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Validation(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn write_output(io: &Io, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &io.output {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Internal(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::Internal(format!("cannot write stdout: {e}"))),
    }
}

fn parse_value(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| {
        Error::Validation(format!(
            "invalid JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn cmd_decompose(s: &str) -> Result<Value> {
    match wire::decompose_request_from_value(parse_value(s)?)? {
        DecomposeRequest::DegeneratePs(p) => {
            let r = kv_decompose(&p);
            let body = wire::kv_json(&p, &r);
            let input = body["degenerate_ps"].clone();
            Ok(wire::envelope(
                "decompose",
                json!({ "degenerate_ps": input }),
                body,
            ))
        }
        DecomposeRequest::Induced(ip) => {
            let fs = reduce_induced(&ip)?;
            let input = serde_json::to_value(wire::induced_to_json(&ip)?).map_err(internal)?;
            let body = json!({
                "constituent_count": fs.len(),
                "has_unknown": fs.has_unknown(),
                "constituents": wire::formal_sum_json(&fs)?,
            });
            Ok(wire::envelope("decompose", input, body))
        }
    }
}

fn cmd_verdict(s: &str) -> Result<Value> {
    let ip = wire::parse_induced(s)?;
    let v = verdict(&ip)?;
    let input = serde_json::to_value(wire::induced_to_json(&ip)?).map_err(internal)?;
    Ok(wire::envelope("verdict", input, wire::verdict_json(&v)?))
}

fn cmd_cartans(s: &str) -> Result<Value> {
    let (family, kappa, req) = wire::parse_cartans_request(s)?;
    let ks = kappa.total();
    let classes = enumerate_cartans(&family, ks)?;
    let lam = normal_form_lambda(&family, 0, ks)?;
    let graph = cayley_graph(&family, ks, &lam)?;
    let input = json!({"group": req.group, "kappa": req.kappa});
    Ok(wire::envelope(
        "cartans",
        input,
        json!({
            "classes": classes.iter().map(wire::cartan_json).collect::<Vec<_>>(),
            "cayley_edges": graph.edges.iter().map(|(a, b)| json!({"from_card_J": a, "to_card_J": b})).collect::<Vec<_>>(),
            "is_path": graph.is_path(),
        }),
    ))
}

fn cmd_ccdim(m: usize) -> Result<Value> {
    let r = verify_coherent_continuation_dim(m)?;
    let bd = indrep_core::cartan::block_dimension(m)?;
    Ok(wire::envelope(
        "ccdim",
        json!({ "m": m }),
        json!({
            "sum_macdonald": r.sum_macdonald.to_string(),
            "closed_form": r.closed_form.to_string(),
            "block": wire::block_dimension_json(&bd),
            "terms": r.terms.iter().map(|(p, d)| json!({"partition": p.parts, "dim": d.to_string()})).collect::<Vec<_>>(),
            "passed": r.passed(),
        }),
    ))
}

fn cmd_check_lemmas(max_rank: usize, lemmas: &[String]) -> Result<Value> {
    if max_rank > MAX_RANK_CAP {
        return Err(Error::Validation(format!(
            "--max-rank {max_rank} exceeds the cap {MAX_RANK_CAP}"
        )));
    }
    let names: Vec<String> = if lemmas.is_empty() {
        SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        lemmas.to_vec()
    };
    let mut reports = Vec::new();
    for n in &names {
        reports.push(run_suite(n, max_rank)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok(wire::envelope(
        "check-lemmas",
        json!({"max_rank": max_rank, "lemmas": names}),
        json!({"suites": reports, "passed": passed}),
    ))
}

/// Runs a handler, turning a panic into an internal error (exit 3).
fn guarded(f: fn(&str) -> Result<Value>, s: &str) -> Result<Value> {
    std::panic::catch_unwind(|| f(s)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Error::Internal(msg))
    })
}

fn internal(e: serde_json::Error) -> Error {
    Error::Internal(e.to_string())
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).unwrap_or_default(),
        Format::Text => text_of(v, 0),
    }
}

fn text_of(v: &Value, depth: usize) -> String {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(o) => o
            .iter()
            .map(|(k, x)| match x {
                Value::Object(_) | Value::Array(_) => {
                    format!("{pad}{k}:\n{}", text_of(x, depth + 1))
                }
                _ => format!("{pad}{k}: {}", scalar(x)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!(
                "{pad}[{}]",
                a.iter().map(scalar).collect::<Vec<_>>().join(", ")
            )
        }
        Value::Array(a) => a
            .iter()
            .enumerate()
            .map(|(i, x)| format!("{pad}- [{i}]\n{}", text_of(x, depth + 1)))
            .collect::<Vec<_>>()
            .join("\n"),
        x => format!("{pad}{}", scalar(x)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One request, or a batch of JSON lines when --jobs is given.
fn run_io(name: &str, io: &Io, f: fn(&str) -> Result<Value>) -> u8 {
    let text = match read_input(io) {
        Ok(t) => t,
        Err(e) => return fail(name, io, &e),
    };
    let Some(jobs) = io.jobs else {
        return finish(name, io, guarded(f, &text));
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => return fail(name, io, &Error::Internal(e.to_string())),
    };
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let results: Vec<(Value, u8)> = pool.install(|| {
        lines
            .par_iter()
            .map(|l| match guarded(f, l) {
                Ok(v) => (v, 0),
                Err(e) => {
                    eprintln!("indrep {name}: {e}");
                    (wire::error_envelope(name, &e), e.exit_code() as u8)
                }
            })
            .collect()
    });
    let out: Vec<String> = results.iter().map(|(v, _)| v.to_string()).collect();
    if let Err(e) = write_output(io, &out.join("\n")) {
        return fail(name, io, &e);
    }
    results.iter().map(|r| r.1).max().unwrap_or(0)
}

fn finish(name: &str, io: &Io, r: Result<Value>) -> u8 {
    match r {
        Ok(v) => match write_output(io, &render(&v, io.format)) {
            Ok(()) => 0,
            Err(e) => fail(name, io, &e),
        },
        Err(e) => fail(name, io, &e),
    }
}

fn fail(name: &str, io: &Io, e: &Error) -> u8 {
    eprintln!("indrep {name}: {e}");
    let _ = write_output(io, &render(&wire::error_envelope(name, e), io.format));
    e.exit_code() as u8
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Decompose(io) => run_io("decompose", io, cmd_decompose),
        Command::Verdict(io) => run_io("verdict", io, cmd_verdict),
        Command::Cartans(io) => run_io("cartans", io, cmd_cartans),
        Command::Ccdim { m, io } => finish("ccdim", io, cmd_ccdim(*m)),
        Command::CheckLemmas {
            max_rank,
            lemma,
            io,
        } => finish("check-lemmas", io, cmd_check_lemmas(*max_rank, lemma)),
    };
    ExitCode::from(code)
}
