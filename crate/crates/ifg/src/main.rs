//! Command-line front end: load structures, parse formulas, and run
//! evaluation, meaning, perfection, closure, and isomorphism reports.
//!
//! Exit codes: 0 success, 1 usage/parse error, 2 budget exceeded,
//! 3 internal invariant violation (or a failing isomorphism report).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ifg::algebra::{self, ClosureSignature, Space};
use ifg::formula::Formula;
use ifg::model::Structure;
use ifg::semantics;
use ifg::team::Team;
use ifg::{Error, Limits};

#[derive(Parser)]
#[command(name = "ifg", version, about = "Trump semantics and cylindric set algebras for IFG logic over finite structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignatureArg {
    Empty,
    Full,
}

#[derive(Args)]
struct LimitArgs {
    /// Maximum items per enumeration (covers, functions, valuations).
    #[arg(long, default_value_t = Limits::default().enumeration)]
    enumeration_budget: u64,
    /// Maximum |A|^N for exhaustive meaning computation.
    #[arg(long, default_value_t = Limits::default().meaning_space)]
    meaning_space: u64,
    /// Maximum number of elements in a generated closure.
    #[arg(long, default_value_t = Limits::default().closure_cap)]
    closure_cap: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            enumeration: self.enumeration_budget,
            meaning_space: self.meaning_space,
            closure_cap: self.closure_cap,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ⊨⁺ and ⊨⁻ for a formula on a team (default: the full team).
    Eval {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        formula: String,
        /// Team literal like "{(0,0),(1,1)}", or "full".
        #[arg(long, default_value = "full")]
        team: String,
        /// Variable count; default is one more than the largest index used.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Compute the full meaning: maximal trumps/cotrumps and shape flags.
    Meaning {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        formula: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Print whether a formula is perfect, and its perfection.
    Perfect {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the isomorphism between the classical cylindric set algebra and
    /// the ∅-reduct closure of atomic meanings.
    Iso {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Generate the subalgebra closure of the atomic meanings.
    Closure {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "empty")]
        signature: SignatureArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's help/version on stdout with success, usage errors on 1
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded { .. }
                | Error::SpaceTooLarge { .. }
                | Error::ClosureTooLarge { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load_structure(path: &PathBuf) -> Result<Structure, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Syntax {
        pos: 0,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    Structure::parse(&text)
}

fn parse_team(text: &str, structure: &Structure, formula: &Formula, limits: &Limits) -> Result<Team, Error> {
    if text.trim() == "full" {
        Ok(Team::from_valuations(structure.all_valuations(
            formula.variable_count(),
            limits.enumeration,
        )?))
    } else {
        Team::parse(text)
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Eval {
            structure,
            formula,
            team,
            n,
            format,
            limits,
        } => {
            let limits = limits.limits();
            let structure = load_structure(&structure)?;
            let formula = Formula::parse(&formula, n)?;
            let team = parse_team(&team, &structure, &formula, &limits)?;
            let plus = semantics::models_plus(&structure, &formula, &team, &limits)?;
            let minus = semantics::models_minus(&structure, &formula, &team, &limits)?;
            match format {
                Format::Text => {
                    println!("plus: {plus}");
                    println!("minus: {minus}");
                }
                Format::Machine => {
                    println!("PLUS={plus}");
                    println!("MINUS={minus}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Meaning {
            structure,
            formula,
            n,
            format,
            limits,
        } => {
            let limits = limits.limits();
            let structure = load_structure(&structure)?;
            let formula = Formula::parse(&formula, n)?;
            let m = semantics::meaning(&structure, &formula, &limits)?;
            let double_suit = m.is_double_suit();
            match format {
                Format::Text => {
                    println!("maximal trumps:");
                    for t in m.plus.maximal() {
                        println!("  {t}");
                    }
                    println!("maximal cotrumps:");
                    for t in m.minus.maximal() {
                        println!("  {t}");
                    }
                    println!("suit: {}", yes_no(m.plus.is_suit() && m.minus.is_suit()));
                    println!("double suit: {}", yes_no(double_suit));
                    println!("flat: {}", yes_no(m.is_flat()));
                    println!("perfect: {}", yes_no(m.is_perfect()));
                }
                Format::Machine => {
                    for t in m.plus.maximal() {
                        println!("TRUMP_MAX={t}");
                    }
                    for t in m.minus.maximal() {
                        println!("COTRUMP_MAX={t}");
                    }
                    println!("SUIT={}", m.plus.is_suit() && m.minus.is_suit());
                    println!("DOUBLE_SUIT={double_suit}");
                    println!("FLAT={}", m.is_flat());
                    println!("PERFECT={}", m.is_perfect());
                }
            }
            if !double_suit {
                // meanings are always double suits; reaching this is a bug
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Perfect { formula, n, format } => {
            let formula = Formula::parse(&formula, n)?;
            let perfection = formula.perfection();
            match format {
                Format::Text => {
                    println!("perfect: {}", yes_no(formula.is_perfect()));
                    println!("perfection: {perfection}");
                }
                Format::Machine => {
                    println!("PERFECT={}", formula.is_perfect());
                    println!("PERFECTION={perfection}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso {
            structure,
            n,
            format,
            limits,
        } => {
            let limits = limits.limits();
            let structure = load_structure(&structure)?;
            let report = algebra::verify_isomorphism(&structure, n, &limits)?;
            match format {
                Format::Text => println!("{report}"),
                Format::Machine => {
                    println!("CLASSICAL_SIZE={}", report.classical_size);
                    println!("IFG_SIZE={}", report.ifg_size);
                    for line in report.machine_lines() {
                        println!("{line}");
                    }
                    println!(
                        "RESULT={}",
                        if report.all_pass() { "PASS" } else { "FAIL" }
                    );
                }
            }
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::Closure {
            structure,
            n,
            signature,
            format,
            limits,
        } => {
            let limits = limits.limits();
            let structure = load_structure(&structure)?;
            let space = Space::new(structure.universe_size(), n);
            let atoms = algebra::atomic_classical_meanings(&structure, n)?;
            let generators: Vec<_> = atoms.iter().map(|v| algebra::embed_f(space, v)).collect();
            let sig = match signature {
                SignatureArg::Empty => ClosureSignature::EmptyReduct,
                SignatureArg::Full => ClosureSignature::Full,
            };
            let closure = algebra::generate_subalgebra(space, &generators, sig, &limits)?;
            match format {
                Format::Text => {
                    println!("closure: {} elements", closure.len());
                    for x in &closure {
                        println!(
                            "  plus max {:?} minus max {:?} perfect: {}",
                            x.plus
                                .maximal()
                                .iter()
                                .map(|t| t.to_string())
                                .collect::<Vec<_>>(),
                            x.minus
                                .maximal()
                                .iter()
                                .map(|t| t.to_string())
                                .collect::<Vec<_>>(),
                            yes_no(x.is_perfect())
                        );
                    }
                }
                Format::Machine => {
                    println!("SIZE={}", closure.len());
                    for x in &closure {
                        println!("PERFECT={}", x.is_perfect());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
