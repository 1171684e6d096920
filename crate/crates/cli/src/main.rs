use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use z4neg::decoder::{decode, decode_with_trace};
use z4neg::reference;
use z4neg::simulate::simulate;
use z4neg::text::{digits_to_string, parse_digits};
use z4neg::{Code, ModulusTable, Word};

/// Negacyclic codes over Z4 with a Lee-metric decoder.
#[derive(Parser)]
#[command(name = "z4neg", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// JSON file of Galois ring moduli overriding the built-in table,
    /// e.g. {"4": [1,3,2,0,1]} (coefficients constant first).
    #[arg(long, global = true, env = "Z4NEG_MODULI", value_name = "PATH")]
    moduli: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CodeArgs {
    /// Code length (odd).
    #[arg(short = 'n', long)]
    n: usize,
    /// Designed Lee error-correcting capability.
    #[arg(short = 't', long)]
    t: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Show the parameters of a code.
    CodeInfo(CodeArgs),
    /// Encode a message given as k digits in {0,1,2,3}.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        message: String,
    },
    /// Decode a received word given as n digits in {0,1,2,3}.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        word: String,
        /// Include intermediate values of both decoding passes.
        #[arg(long)]
        trace: bool,
    },
    /// Exact minimum Lee distance by enumerating all codewords.
    MinDistance(CodeArgs),
    /// Decode random codewords hit by errors of a fixed Lee weight.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recompute the published examples and code table.
    ReproducePaper {
        /// Skip the code-table rows.
        #[arg(long)]
        skip_table: bool,
    },
}

fn load_table(path: Option<&PathBuf>) -> Result<ModulusTable> {
    match path {
        None => Ok(ModulusTable::builtin()),
        Some(p) => {
            let json = std::fs::read_to_string(p)
                .with_context(|| format!("reading modulus table {}", p.display()))?;
            ModulusTable::builtin_with_json(&json)
                .with_context(|| format!("modulus table {}", p.display()))
        }
    }
}

fn parse_word(s: &str, what: &str) -> Result<Word> {
    let symbols = parse_digits(s).with_context(|| format!("invalid {what} {s:?}"))?;
    Ok(Word::new(symbols))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let table = load_table(cli.moduli.as_ref())?;
    let build = |c: CodeArgs| Code::with_table(c.n, c.t, &table).context("constructing code");
    match cli.command {
        Command::CodeInfo(c) => {
            let info = build(c)?.info();
            if cli.json {
                print_json(&info)?;
            } else {
                println!("n {}", info.n);
                println!("t {}", info.t);
                println!("m {}", info.m);
                let modulus: String = info.modulus.iter().map(|d| char::from(b'0' + d)).collect();
                println!("modulus {modulus}");
                println!("alpha {}", info.alpha);
                println!("generator {}", info.generator);
                println!("k {}", info.k);
                println!("bound {}", info.bound);
            }
        }
        Command::Encode { code, message } => {
            let code = build(code)?;
            let msg = parse_word(&message, "message")?;
            let c = code.encode(msg.symbols())?;
            if cli.json {
                print_json(&serde_json::json!({ "codeword": c }))?;
            } else {
                println!("{}", digits_to_string(c.symbols()));
            }
        }
        Command::Decode { code, word, trace } => {
            let code = build(code)?;
            let v = parse_word(&word, "word")?;
            if v.len() != code.n() {
                bail!("word has length {}, code length is {}", v.len(), code.n());
            }
            let outcome = if trace {
                decode_with_trace(&v, &code)
            } else {
                decode(&v, &code)
            };
            if cli.json || trace {
                print_json(&outcome)?;
            } else {
                match (outcome.codeword(), outcome.error(), outcome.failure()) {
                    (Some(c), Some(e), _) => {
                        println!("codeword {c}");
                        println!("error {e}");
                    }
                    (_, _, Some(reason)) => println!("failure: {reason}"),
                    _ => unreachable!("outcome is success or failure"),
                }
            }
        }
        Command::MinDistance(c) => {
            let d = build(c)?.min_distance_exhaustive()?;
            if cli.json {
                print_json(&serde_json::json!({ "n": c.n, "t": c.t, "min_distance": d }))?;
            } else {
                println!("{d}");
            }
        }
        Command::Simulate {
            code,
            weight,
            trials,
            seed,
        } => {
            let report = simulate(&build(code)?, weight, trials, seed)?;
            if cli.json {
                print_json(&report)?;
            } else {
                println!(
                    "{}/{} decoded (miscorrected {}, failed {})",
                    report.successes, report.trials, report.miscorrections, report.failures
                );
            }
        }
        Command::ReproducePaper { skip_table } => {
            let report = reference::reproduce(&table, !skip_table);
            if cli.json {
                print_json(&report)?;
            } else {
                let mut section = "";
                for c in &report.checks {
                    if c.section != section {
                        section = &c.section;
                        println!("{section}");
                    }
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    println!("  [{mark}] {}", c.name);
                    println!("      expected {}", c.expected);
                    println!("      computed {}", c.computed);
                }
                for note in &report.notes {
                    println!("note: {note}");
                }
            }
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
