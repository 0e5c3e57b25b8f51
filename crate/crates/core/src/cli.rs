//! The `cuspcalc` command line.
//!
//! [`dispatch`] does all the work and returns the exit status together with
//! the text to print, so the binary stays a thin wrapper and tests can call
//! it in-process. Exit status: 0 on success, 1 when a check fails, 2 on
//! malformed input.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::chain::{adjoint, chain_from_inductance, discriminant, star, Fraction, LinearChain};
use crate::classify::{
    assemble_global_graph, family_data, scan_candidates_bounded, FamilyParams, NumericalData,
    Record, DEFAULT_SCAN_BOUND,
};
use crate::cusp::{
    char_from_puiseux, mult_from_char, puiseux_from_char, resolution_graph, CharacteristicSequence,
    MultiplicitySequence, PuiseuxPairs,
};
use crate::error::Error;

pub const MAX_DEGREE_ENV: &str = "CUSPCALC_MAX_DEGREE";

#[derive(Debug, Parser)]
#[command(
    name = "cuspcalc",
    version,
    about = "Exact calculus of cusps and weighted chains"
)]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "dot")]
    pub json: bool,
    /// Emit Graphviz DOT (resolve, verify).
    #[arg(long, global = true)]
    pub dot: bool,
    /// Print nothing; report through the exit status only.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic on linear chains such as "[2,3,4]".
    #[command(subcommand)]
    Chain(ChainOp),
    /// Convert between characteristic sequence, multiplicity sequence and Puiseux pairs.
    Convert {
        #[arg(long)]
        from: Encoding,
        #[arg(long)]
        to: Encoding,
        value: String,
    },
    /// Resolution graph of a cusp given by its characteristic sequence, e.g. "(4;6,7)".
    Resolve { characteristic: String },
    /// Generate and check an entry of the classification table.
    Classify {
        #[arg(long)]
        family: u8,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
    /// Check numerical data such as "d=5 {(3),(2_3)}".
    Verify { data: String },
    /// List all genus-consistent bicuspidal data with (C')^2 = -1.
    Scan {
        #[arg(long)]
        max_degree: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChainOp {
    /// Discriminant d(A).
    Disc { chain: String },
    /// Adjoint chain A*.
    Adjoint { chain: String },
    /// The product A * B.
    Star { a: String, b: String },
    /// The chain with inductance p/q.
    #[command(name = "from-e")]
    FromE { fraction: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Encoding {
    Char,
    Mult,
    Puiseux,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command. The scan
/// bound comes from `CUSPCALC_MAX_DEGREE` when set.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let bound = match std::env::var(MAX_DEGREE_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(b) => b,
            Err(e) => return Outcome::input_error(format!("{MAX_DEGREE_ENV}={v:?}: {e}")),
        },
        Err(_) => DEFAULT_SCAN_BOUND,
    };
    dispatch_with_bound(args, bound)
}

pub fn dispatch_with_bound<I, T>(args: I, scan_bound: u64) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("invalid arguments");
                    Outcome::input_error(line.trim_start_matches("error: "))
                }
            };
        }
    };
    let quiet = cli.quiet;
    let mut out = match run(&cli, scan_bound) {
        Ok(o) => o,
        Err(e) => Outcome::input_error(e),
    };
    if quiet {
        out.stdout.clear();
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

fn run(cli: &Cli, scan_bound: u64) -> Result<Outcome, Error> {
    let fmt = if cli.json {
        Format::Json
    } else if cli.dot {
        Format::Dot
    } else {
        Format::Text
    };
    if fmt == Format::Dot
        && !matches!(
            cli.command,
            Command::Resolve { .. } | Command::Verify { .. }
        )
    {
        return Err(Error::parse(
            "flags",
            "--dot",
            "only resolve and verify emit DOT",
        ));
    }
    match &cli.command {
        Command::Chain(op) => run_chain(op, fmt),
        Command::Convert { from, to, value } => run_convert(*from, *to, value, fmt),
        Command::Resolve { characteristic } => run_resolve(characteristic, fmt),
        Command::Classify { family, a, b } => run_classify(*family, *a, *b, fmt),
        Command::Verify { data } => run_verify(data, fmt),
        Command::Scan { max_degree } => run_scan(*max_degree, scan_bound, fmt),
    }
}

fn json_line(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn run_chain(op: &ChainOp, fmt: Format) -> Result<Outcome, Error> {
    let chain = |s: &str| s.parse::<LinearChain>();
    let (key, text, value) = match op {
        ChainOp::Disc { chain: c } => {
            let d = discriminant(&chain(c)?);
            ("discriminant", d.to_string(), json!(d.to_string()))
        }
        ChainOp::Adjoint { chain: c } => {
            let r = adjoint(&chain(c)?)?;
            ("adjoint", r.to_string(), json!(r))
        }
        ChainOp::Star { a, b } => {
            let r = star(&chain(a)?, &chain(b)?)?;
            ("star", r.to_string(), json!(r))
        }
        ChainOp::FromE { fraction } => {
            let r = chain_from_inductance(&fraction.parse::<Fraction>()?)?;
            ("chain", r.to_string(), json!(r))
        }
    };
    Ok(Outcome::ok(match fmt {
        Format::Json => json_line(&json!({ key: value })),
        _ => format!("{text}\n"),
    }))
}

fn run_convert(from: Encoding, to: Encoding, value: &str, fmt: Format) -> Result<Outcome, Error> {
    let ch = match from {
        Encoding::Char => value.parse::<CharacteristicSequence>()?,
        Encoding::Mult => value.parse::<MultiplicitySequence>()?.characteristic(),
        Encoding::Puiseux => char_from_puiseux(&value.parse::<PuiseuxPairs>()?)?,
    };
    let (text, json_value) = match to {
        Encoding::Char => (ch.to_string(), json!(ch.alphas())),
        Encoding::Mult => {
            let m = mult_from_char(&ch);
            (
                m.to_string(),
                json!({ "written": m.written(), "full": m.full() }),
            )
        }
        Encoding::Puiseux => {
            let p = puiseux_from_char(&ch);
            (p.to_string(), json!(p.pairs()))
        }
    };
    Ok(Outcome::ok(match fmt {
        Format::Json => json_line(&json!({ "from": from, "to": to, "result": json_value })),
        _ => format!("{text}\n"),
    }))
}

fn run_resolve(s: &str, fmt: Format) -> Result<Outcome, Error> {
    let ch: CharacteristicSequence = s.parse()?;
    let r = resolution_graph(&ch)?;
    let text = match fmt {
        Format::Json => json_line(&r),
        Format::Dot => r.graph.to_dot(),
        Format::Text => {
            let mut t = String::new();
            let m = mult_from_char(&ch);
            let _ = writeln!(t, "characteristic: {ch}");
            let _ = writeln!(t, "multiplicity: {} full {}", m, m.display_full());
            let _ = writeln!(t, "puiseux: {}", puiseux_from_char(&ch));
            let _ = writeln!(t, "g = {}", r.g());
            for (i, c) in r.clusters.iter().enumerate() {
                let _ = writeln!(t, "cluster {}: A={} B={} o={}", i + 1, c.a, c.b, c.o);
            }
            let _ = writeln!(t, "blow-ups: {}", r.vertex_count());
            t
        }
    };
    Ok(Outcome::ok(text))
}

fn check_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn run_classify(family: u8, a: u64, b: u64, fmt: Format) -> Result<Outcome, Error> {
    let p = FamilyParams::new(family, a, b)?;
    let nd = family_data(&p)?;
    let rec = Record::new(&nd);
    let graph = assemble_global_graph(&nd);
    let passed = rec.genus_ok && rec.c_prime_sq == -1 && graph.is_ok();
    let stdout = match fmt {
        Format::Json => json_line(&json!({ "record": rec, "graph_ok": graph.is_ok() })),
        _ => {
            let mut t = String::new();
            let [x, y] = nd.cusps();
            let _ = writeln!(t, "{p}");
            let _ = writeln!(t, "data: {nd}");
            let _ = writeln!(t, "full: {{{},{}}}", x.display_full(), y.display_full());
            let _ = writeln!(
                t,
                "genus: {}, (C')^2 = {}",
                check_word(rec.genus_ok),
                rec.c_prime_sq
            );
            let _ = writeln!(t, "{}", graph_line(&graph));
            t
        }
    };
    Ok(Outcome {
        code: if passed { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

fn graph_line(graph: &Result<crate::classify::GlobalGraph, Error>) -> String {
    match graph {
        Ok(g) => format!(
            "graph: {} vertices, exceptional trees of {} and {} curves contract to points",
            g.graph.len(),
            g.exceptional[0].len(),
            g.exceptional[1].len()
        ),
        Err(e) => format!("graph: FAILED ({e})"),
    }
}

fn run_verify(s: &str, fmt: Format) -> Result<Outcome, Error> {
    let nd: NumericalData = s.parse()?;
    let rec = Record::new(&nd);
    let graph = assemble_global_graph(&nd);
    let passed = rec.genus_ok && graph.is_ok();
    let stdout = match fmt {
        Format::Json => json_line(&json!({ "record": rec, "graph_ok": graph.is_ok() })),
        Format::Dot => match &graph {
            Ok(g) => g.graph.to_dot(),
            Err(_) => String::new(),
        },
        Format::Text => {
            let mut t = format!(
                "genus: {}, (C')^2 = {}\n",
                check_word(rec.genus_ok),
                rec.c_prime_sq
            );
            let _ = writeln!(t, "{}", graph_line(&graph));
            if let Some(p) = rec.table_match {
                let _ = writeln!(t, "table: {p}");
            }
            t
        }
    };
    let stderr = match &graph {
        Err(e) if fmt == Format::Dot => format!("error: {e}\n"),
        _ => String::new(),
    };
    Ok(Outcome {
        code: if passed { 0 } else { 1 },
        stdout,
        stderr,
    })
}

fn run_scan(max_degree: u64, bound: u64, fmt: Format) -> Result<Outcome, Error> {
    let found = scan_candidates_bounded(max_degree, bound)?;
    let stdout = match fmt {
        Format::Json => {
            let recs: Vec<Record> = found.iter().map(|c| Record::new(&c.data)).collect();
            json_line(&recs)
        }
        _ => {
            let mut t = String::new();
            for c in &found {
                match c.family {
                    Some(p) => {
                        let _ = writeln!(t, "{}  {}", c.data, p);
                    }
                    None => {
                        let _ = writeln!(t, "{}  not in table", c.data);
                    }
                }
            }
            t
        }
    };
    Ok(Outcome::ok(stdout))
}
