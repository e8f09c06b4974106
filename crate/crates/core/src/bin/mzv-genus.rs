use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use mzv_genus::numeric::{mzv_with_budget, DEFAULT_CUTOFF_BUDGET};
use mzv_genus::verify::{run_suite, Suite};
use mzv_genus::{q_genus_cy_with_budget, q_genus_with_budget, stuffle, Error, Notation, QsymPoly, Word};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DIVERGENT: u8 = 3;

#[derive(Parser)]
#[command(name = "mzv-genus", version, about = "Q_i polynomials of 1/Γ(1+z), multiple zeta values and stuffle products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print Q_1..Q_N in the Chern classes.
    Qgenus {
        #[arg(long = "max", value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        /// Only partitions without 1s (c_1 = 0), as sums of multiple zeta values.
        #[arg(long)]
        cy: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Render γ, ζ, π as gamma, zeta, pi.
        #[arg(long)]
        ascii: bool,
        /// Largest degree accepted.
        #[arg(long, default_value_t = mzv_genus::DEFAULT_DEGREE_BUDGET as u64)]
        budget: u64,
    },
    /// Evaluate ζ(i_1,...,i_k) with a rigorous error bound.
    Mzv {
        /// Comma-separated arguments, outermost first.
        #[arg(long)]
        args: String,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        ascii: bool,
        /// Largest truncation cutoff tried.
        #[arg(long, default_value_t = DEFAULT_CUTOFF_BUDGET)]
        budget: u64,
    },
    /// Stuffle product of two words given as comma-separated subscripts.
    Stuffle {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite: all, symbolic, numeric or words.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Qgenus { .. } => "qgenus",
            Command::Mzv { .. } => "mzv",
            Command::Stuffle { .. } => "stuffle",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Serialize)]
struct MzvOutput<'a> {
    args: &'a [u32],
    value: f64,
    bound: f64,
    cutoff: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            if e.use_stderr() && !e.to_string().contains("Usage:") {
                let sub = std::env::args().nth(1).unwrap_or_default();
                eprintln!("\n{}", usage(&sub));
            }
            return ExitCode::from(code as u8);
        }
    };
    let name = cli.command.name();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Divergent { .. } => EXIT_DIVERGENT,
                _ => {
                    eprintln!("{}", usage(name));
                    EXIT_USAGE
                }
            };
            ExitCode::from(code)
        }
    }
}

fn usage(subcommand: &str) -> clap::builder::StyledStr {
    let mut cmd = Cli::command();
    cmd.build();
    match cmd.find_subcommand_mut(subcommand) {
        Some(sub) => sub.render_usage(),
        None => cmd.render_usage(),
    }
}

fn notation(ascii: bool) -> Notation {
    if ascii {
        Notation::Ascii
    } else {
        Notation::Unicode
    }
}

fn emit(text: &str) -> u8 {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => 0,
        Err(_) => EXIT_FAIL,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn parse_args(s: &str) -> Result<Vec<u32>, Error> {
    if s.trim().is_empty() {
        return Err(Error::EmptyComposition);
    }
    s.split(',')
        .map(|t| match t.trim().parse::<u32>() {
            Ok(0) => Err(Error::ZeroLetter),
            Ok(i) => Ok(i),
            Err(_) => Err(Error::Parse(format!("bad argument {t:?} in {s:?}"))),
        })
        .collect()
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Qgenus { max, cy, format, ascii, budget } => {
            let (max, budget) = (max as usize, budget as usize);
            if max > budget {
                return Err(Error::DegreeOutOfBudget { degree: max, budget });
            }
            let n = notation(ascii);
            let text = if cy {
                // Q_1 vanishes at c_1 = 0.
                let qs = (2..=max).map(|i| q_genus_cy_with_budget(i, budget)).collect::<Result<Vec<_>, _>>()?;
                match format {
                    Format::Json => json(&qs),
                    Format::Text => qs.iter().map(|q| q.render(n) + "\n").collect(),
                }
            } else {
                let qs = (1..=max).map(|i| q_genus_with_budget(i, budget)).collect::<Result<Vec<_>, _>>()?;
                match format {
                    Format::Json => json(&qs),
                    Format::Text => qs.iter().map(|q| q.render(n) + "\n").collect(),
                }
            };
            Ok(emit(&text))
        }
        Command::Mzv { args, tol, format, ascii, budget } => {
            let args = parse_args(&args)?;
            let eval = mzv_with_budget(&args, tol, budget)?;
            let text = match format {
                Format::Json => json(&MzvOutput {
                    args: &args,
                    value: eval.value.value,
                    bound: eval.value.bound,
                    cutoff: eval.cutoff,
                }),
                Format::Text => {
                    let joined = args.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                    let name = if ascii { format!("zeta({joined})") } else { format!("ζ({joined})") };
                    let pm = if ascii { "+/-" } else { "±" };
                    format!("{name} = {:.15} {pm} {:.3e}\n", eval.value.value, eval.value.bound)
                }
            };
            Ok(emit(&text))
        }
        Command::Stuffle { left, right, format } => {
            let product = stuffle(&QsymPoly::word(Word::parse(&left)?), &QsymPoly::word(Word::parse(&right)?));
            let text = match format {
                Format::Json => json(&product),
                Format::Text => format!("{product}\n"),
            };
            Ok(emit(&text))
        }
        Command::Verify { suite, format } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite);
            let text = match format {
                Format::Json => json(&report),
                Format::Text => report.render_text(),
            };
            let code = emit(&text);
            Ok(if report.passed() { code } else { EXIT_FAIL })
        }
    }
}
