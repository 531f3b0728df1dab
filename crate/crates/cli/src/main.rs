use std::io::{self, Read, Write};
use std::process::ExitCode;

use afsa::{
    build_system, check_equivalence, encode, enumerate_3valued_solutions, enumerate_complete, parse_frame,
    serialize_frame, solve_fixed_point, to_setaf, write_labellings, Algebra, Error, Family, Framework, LabelMode,
    SolveConfig, DEFAULT_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Argumentation frameworks with set attackers: labellings, encodings and
/// equational semantics.
#[derive(Debug, Parser)]
#[command(name = "afsa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every complete labelling as a JSON line.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Semantics::Complete)]
        semantics: Semantics,
        /// Largest number of candidate labellings to examine.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        /// Frame file, or `-` for standard input.
        input: String,
    },
    /// Print the encoded formula and its variables.
    Encode { input: String },
    /// Solve an equational system by fixed-point iteration.
    Solve {
        /// eqG, eqP or eqL.
        #[arg(long, value_parser = parse_family, conflicts_with = "algebra")]
        system: Option<Family>,
        /// godel, product or lukasiewicz.
        #[arg(long, value_parser = parse_family)]
        algebra: Option<Family>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 1.0)]
        damping: f64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// List the exact solutions in {0, 1/2, 1} instead.
        #[arg(long)]
        three_valued: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        input: String,
    },
    /// Rewrite the framework as a SETAF.
    Transform {
        #[arg(long, value_enum, default_value_t = Target::Setaf)]
        to: Target,
        input: String,
    },
    /// Compare complete labellings with the three-valued models of the encoding.
    CheckEquivalence {
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        input: String,
    },
    /// Report structural violations and warnings.
    Validate { input: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Semantics {
    Complete,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Setaf,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

enum Failure {
    /// Exit 1: the input was understood but the request cannot be met.
    Domain(String),
    /// Exit 2: the input or the command line is malformed.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidId(_) | Error::Config(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let read = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn load(path: &str) -> Result<Framework, Failure> {
    Ok(parse_frame(&read_input(path)?)?)
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Enumerate { semantics: Semantics::Complete, cap, input } => {
            let f = load(&input)?;
            out.push_str(&write_labellings(&enumerate_complete(&f, cap)?, LabelMode::ThreeValued)?);
        }
        Command::Encode { input } => {
            let enc = encode(&load(&input)?)?;
            let vars: Vec<&str> = enc.variables.iter().map(|v| v.as_str()).collect();
            out.push_str(&format!("{}\nvariables: {}\n", enc.formula, vars.join(", ")));
        }
        Command::Solve { system, algebra, tol, max_iter, damping, restarts, seed, three_valued, cap, input } => {
            let family = system.or(algebra).unwrap_or(Family::Godel);
            let f = load(&input)?;
            let sys = build_system(&f, &Algebra::new(family))?;
            if three_valued {
                out.push_str(&write_labellings(&enumerate_3valued_solutions(&sys, cap)?, LabelMode::ThreeValued)?);
                return Ok(());
            }
            let config = SolveConfig { tolerance: tol, max_iterations: max_iter, damping, restarts, seed };
            let result = solve_fixed_point(&sys, &config)?;
            let assignment = result.assignment.as_ref().map(|a| {
                a.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>()
            });
            let value = json!({
                "status": result.status.as_str(),
                "system": family.system_name(),
                "assignment": assignment,
                "residual": result.residual,
                "iterations": result.iterations,
                "restart": result.restart,
            });
            out.push_str(&value.to_string());
            out.push('\n');
            if !result.converged() {
                return Err(Failure::Domain(format!("no fixed point within {} restarts", restarts)));
            }
        }
        Command::Transform { to: Target::Setaf, input } => {
            let t = to_setaf(&load(&input)?)?;
            let mapping: serde_json::Map<String, serde_json::Value> =
                t.mapping.iter().map(|(k, v)| (k.to_string(), json!(v.as_str()))).collect();
            out.push_str(&serialize_frame(&t.setaf));
            out.push_str(&serde_json::Value::Object(mapping).to_string());
            out.push('\n');
        }
        Command::CheckEquivalence { cap, input } => {
            let report = check_equivalence(&load(&input)?, cap)?;
            out.push_str(&format!("{report}\n"));
            if !report.passed() {
                return Err(Failure::Domain("equivalence check failed".into()));
            }
        }
        Command::Validate { input } => match parse_frame(&read_input(&input)?) {
            Ok(f) => {
                out.push_str("ok\n");
                for w in f.validate().warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
            }
            Err(Error::Invalid(report)) => {
                for v in &report.violations {
                    let ids: Vec<&str> = v.ids.iter().map(|i| i.as_str()).collect();
                    out.push_str(&format!("violation [{}] {} ({})\n", v.code, v.message, ids.join(", ")));
                }
                for w in &report.warnings {
                    out.push_str(&format!("warning: {w}\n"));
                }
                return Err(Failure::Domain("invalid framework".into()));
            }
            Err(e) => return Err(e.into()),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
