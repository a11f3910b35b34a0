use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use sublang::automata::{determinize_with_budget, minimize, DEFAULT_SUBSET_BUDGET};
use sublang::bounds::{fooling_matrix, mx_matrix, rational_rank, ufa_lower_bound, verify_fooling};
use sublang::closures::{closure, closure_dfa, closure_dfa_with_budget, Direction};
use sublang::decisions::{
    closure_equal, closure_inclusion, dfa_closed_witness, down_universal, is_closed, Certificate,
};
use sublang::experiments::{run_experiment, ExperimentParams};
use sublang::format::{parse_automaton, render_dot, serialize_automaton};
use sublang::interiors::{interior, Method};
use sublang::witnesses::{fooling_for, gen_family, FamilyId, FoolingFamily};
use sublang::{Alphabet, Automaton, Machine};

/// Closures, interiors and state-complexity witnesses for subword-closed
/// regular languages.
#[derive(Parser)]
#[command(name = "sublang", version)]
struct Cli {
    /// Input automaton file (stdin if absent).
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Output file (stdout if absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for sampling experiments.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// State budget for determinizations and closure constructions.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Up,
    Down,
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Up => Direction::Up,
            Dir::Down => Direction::Down,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Duality,
    Antichain,
}

#[derive(Subcommand)]
enum Command {
    /// Print a member of a witness family.
    Gen { family: String, param: usize },
    /// Closure of the input automaton.
    Closure {
        dir: Dir,
        /// Output the minimal DFA instead of the closure NFA.
        #[arg(long)]
        minimal: bool,
    },
    /// Minimal DFA of an interior of the input automaton.
    Interior {
        dir: Dir,
        #[arg(long, value_enum, default_value_t = MethodArg::Duality)]
        method: MethodArg,
    },
    /// Minimal DFA of the input automaton.
    Minimize,
    /// Run a decision procedure; exits 1 when the answer is no.
    Decide {
        #[command(subcommand)]
        question: Question,
    },
    /// Lower-bound certificates.
    Bounds {
        #[command(subcommand)]
        kind: BoundKind,
    },
    /// Run a registered experiment; exits 1 when a row fails.
    Experiment {
        id: String,
        /// Number of random automata for sampling experiments.
        #[arg(long)]
        samples: Option<usize>,
        /// Parameter range `LO..HI` for family experiments.
        #[arg(long, value_parser = parse_range)]
        range: Option<(usize, usize)>,
    },
}

#[derive(Subcommand)]
enum Question {
    /// Whether the input language equals its closure.
    Closed {
        #[arg(long, value_enum, default_value_t = Dir::Up)]
        dir: Dir,
        /// Report an insertion or deletion triple; needs a DFA.
        #[arg(long)]
        triple: bool,
    },
    /// Whether the closure of the input is included in that of `--other`.
    Inclusion {
        #[arg(long, value_enum, default_value_t = Dir::Up)]
        dir: Dir,
        #[arg(long)]
        other: PathBuf,
    },
    /// Whether the input and `--other` have the same closure.
    Equal {
        #[arg(long, value_enum, default_value_t = Dir::Up)]
        dir: Dir,
        #[arg(long)]
        other: PathBuf,
    },
    /// Whether the downward closure of the input is everything.
    Universal,
}

#[derive(Subcommand)]
enum BoundKind {
    /// Check a family's fooling set and print its matrix.
    Fooling { family: String, param: usize },
    /// Rank of the matrix `M_X` (`mx`) or a family's unambiguous bound.
    Rank { family: String, param: usize },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let lo = lo.parse().map_err(|e| format!("{e}"))?;
    let hi = hi.parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

// What a command produced: its text and whether its verdict passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|o| emit(&cli, &o.text).map(|_| o.passed)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_machine(path: Option<&PathBuf>) -> anyhow::Result<Machine> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        }
    };
    let what = path.map_or("<stdin>".to_string(), |p| p.display().to_string());
    parse_automaton(&text).with_context(|| format!("parsing {what}"))
}

fn render(cli: &Cli, a: &impl Automaton) -> anyhow::Result<String> {
    match cli.format {
        OutputFormat::Text => Ok(serialize_automaton(a)),
        OutputFormat::Dot => Ok(render_dot(a)),
        OutputFormat::Csv => bail!("csv output is only available for experiments"),
    }
}

fn budget(cli: &Cli) -> usize {
    cli.budget.unwrap_or(DEFAULT_SUBSET_BUDGET)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Gen { family, param } => {
            let m = gen_family(FamilyId::parse(family, *param)?)?;
            Ok(Outcome::ok(render(cli, &m)?))
        }
        Command::Closure { dir, minimal } => {
            let a = read_machine(cli.input.as_ref())?;
            let d = Direction::from(*dir);
            if *minimal {
                let m = match cli.budget {
                    Some(b) => closure_dfa_with_budget(&a, d, b)?,
                    None => closure_dfa(&a, d)?,
                };
                Ok(Outcome::ok(render(cli, &m)?))
            } else {
                Ok(Outcome::ok(render(cli, &closure(&a.into_nfa(), d))?))
            }
        }
        Command::Interior { dir, method } => {
            let a = read_machine(cli.input.as_ref())?.into_nfa();
            let method = match method {
                MethodArg::Duality => Method::Duality,
                MethodArg::Antichain => Method::Antichain,
            };
            Ok(Outcome::ok(render(
                cli,
                &interior(&a, (*dir).into(), method)?,
            )?))
        }
        Command::Minimize => {
            let m = match read_machine(cli.input.as_ref())? {
                Machine::Dfa(d) => minimize(&d),
                Machine::Nfa(a) => minimize(&determinize_with_budget(&a, budget(cli))?),
            };
            Ok(Outcome::ok(render(cli, &m)?))
        }
        Command::Decide { question } => decide(cli, question),
        Command::Bounds { kind } => bounds(kind),
        Command::Experiment { id, samples, range } => {
            let mut params = ExperimentParams {
                samples: *samples,
                range: *range,
                budget: cli.budget,
                ..ExperimentParams::default()
            };
            if let Some(seed) = cli.seed {
                params.seed = seed;
            }
            let report = run_experiment(id, &params)?;
            let text = match cli.format {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Csv => report.to_csv(),
                OutputFormat::Dot => bail!("dot output is only available for automata"),
            };
            Ok(Outcome {
                text,
                passed: report.passed(),
            })
        }
    }
}

fn decide(cli: &Cli, question: &Question) -> anyhow::Result<Outcome> {
    if cli.format != OutputFormat::Text {
        bail!("decisions only have text output");
    }
    let a = read_machine(cli.input.as_ref())?;
    let alphabet: Alphabet = a.alphabet().clone();
    let cert: Certificate = match question {
        Question::Closed { dir, triple: true } => match a.as_dfa() {
            Some(d) => dfa_closed_witness(d, (*dir).into()),
            None => bail!("--triple needs a deterministic input"),
        },
        Question::Closed { dir, triple: false } => is_closed(&a.into_nfa(), (*dir).into())?,
        Question::Inclusion { dir, other } => {
            let b = read_machine(Some(other))?.into_nfa();
            closure_inclusion(&a.into_nfa(), &b, (*dir).into())?
        }
        Question::Equal { dir, other } => {
            let b = read_machine(Some(other))?.into_nfa();
            closure_equal(&a.into_nfa(), &b, (*dir).into())?
        }
        Question::Universal => down_universal(&a.into_nfa())?,
    };
    Ok(Outcome {
        text: format!("{}\n", cert.display(&alphabet)),
        passed: cert.verdict,
    })
}

fn bounds(kind: &BoundKind) -> anyhow::Result<Outcome> {
    match kind {
        BoundKind::Fooling { family, param } => {
            let family = FoolingFamily::parse(family, *param)?;
            let set = fooling_for(family)?;
            let l = family.language()?;
            let size = verify_fooling(&l, &set)?;
            let matrix = fooling_matrix(&l, &set)?;
            Ok(Outcome::ok(format!("fooling set of size {size}\n{matrix}")))
        }
        BoundKind::Rank { family, param } if family.eq_ignore_ascii_case("mx") => {
            let m = mx_matrix(*param)?;
            Ok(Outcome::ok(format!("rank {}\n{m}", rational_rank(&m))))
        }
        BoundKind::Rank { family, param } => {
            let family = FoolingFamily::parse(family, *param)?;
            let set = fooling_for(family)?;
            let bound = ufa_lower_bound(&family.language()?, &set, family.initial_excluded())?;
            Ok(Outcome::ok(format!("unambiguous lower bound {bound}\n")))
        }
    }
}
