use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qminkowski::classical::Sign;
use qminkowski::coeff::Preset;
use qminkowski::parse::{parse_expr, parse_poly};
use qminkowski::qops::{quantum_hierarchy_apply, OperatorFile};
use qminkowski::verify::{run_suite, Suite, SuiteConfig};
use qminkowski::{Algebra, QPoly, Triple};

#[derive(Parser)]
#[command(
    name = "qminkowski",
    version,
    about = "Exact computations in the multiparameter quantum Minkowski flag algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Parameter specialization: one-param, sl4-split, conj-2param or relq
    #[arg(long)]
    preset: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Normal-ordered product of two expressions
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[command(flatten)]
        common: Common,
    },
    /// Normal order, then apply a parameter preset
    Specialize {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Apply the conjugation (relq preset unless overridden)
    Omega {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Apply an operator from a description file or the classical-limit triple
    ApplyOp {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        op_file: Option<String>,
        /// I1, I2, I3 or hat
        #[arg(long, default_value = "hat")]
        op: String,
        /// Sign of the hierarchy operator: + or -
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
        /// Hierarchy level n
        #[arg(long, default_value_t = 0)]
        level: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        op_file: Option<String>,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        truncate_degree: u32,
        /// Corrupt the zb*z relation coefficient before running
        #[arg(long)]
        inject_fault: bool,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_input(expr: Option<String>) -> Result<String, Failure> {
    match expr {
        Some(e) => Ok(e),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(usage)?;
            Ok(buf.trim().to_string())
        }
    }
}

fn preset(name: &Option<String>) -> Result<Option<Preset>, Failure> {
    name.as_deref().map(Preset::from_name).transpose().map_err(usage)
}

fn algebra(p: Option<Preset>) -> Algebra {
    match p {
        Some(p) => Algebra::generic().specialized(&p.substitution()),
        None => Algebra::generic(),
    }
}

fn emit(format: Format, input: &str, result: &QPoly) {
    match format {
        Format::Text => println!("{}", result),
        Format::Json => {
            let terms: Vec<_> = result
                .terms()
                .rev()
                .map(|(m, c)| serde_json::json!({"monomial": m.to_string(), "coefficient": c.to_string()}))
                .collect();
            let v = serde_json::json!({"input": input, "result": result.to_string(), "terms": terms});
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
    }
}

fn load_ops(path: &Option<String>) -> Result<Option<Triple>, Failure> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {}", p, e)))?;
            let file = OperatorFile::from_json(&text).map_err(usage)?;
            file.triple().map(Some).map_err(usage)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Normalize { expr, common } => {
            let input = read_input(expr)?;
            let alg = algebra(preset(&common.preset)?);
            emit(common.format, &input, &parse_poly(&alg, &input).map_err(usage)?);
        }
        Command::Mul { left, right, common } => {
            let alg = algebra(preset(&common.preset)?);
            let a = parse_poly(&alg, &left).map_err(usage)?;
            let b = parse_poly(&alg, &right).map_err(usage)?;
            emit(common.format, &format!("({})*({})", left, right), &alg.multiply(&a, &b));
        }
        Command::Specialize { expr, common } => {
            let input = read_input(expr)?;
            let p = preset(&common.preset)?.ok_or_else(|| usage("specialize needs --preset"))?;
            let words = parse_expr(&input).map_err(usage)?;
            let out = Algebra::generic()
                .normal_order_poly(&words)
                .specialize(&p.substitution());
            emit(common.format, &input, &out);
        }
        Command::Omega { expr, common } => {
            let input = read_input(expr)?;
            let alg = algebra(Some(preset(&common.preset)?.unwrap_or(Preset::Relq)));
            let p = parse_poly(&alg, &input).map_err(usage)?;
            emit(common.format, &input, &alg.omega(&p));
        }
        Command::ApplyOp {
            expr,
            op_file,
            op,
            sign,
            level,
            common,
        } => {
            let input = read_input(expr)?;
            let alg = algebra(preset(&common.preset)?);
            let ops = load_ops(&op_file)?.unwrap_or_else(Triple::classical_limit);
            let p = parse_poly(&alg, &input).map_err(usage)?;
            let out = if op == "hat" {
                let s = Sign::from_symbol(&sign).ok_or_else(|| usage(format!("unknown sign `{}`", sign)))?;
                quantum_hierarchy_apply(&alg, s, level, &ops, &p).map_err(usage)?
            } else {
                let o = ops
                    .get(&op)
                    .ok_or_else(|| usage(format!("unknown operator `{}`", op)))?;
                o.apply(&alg, &p)
            };
            emit(common.format, &input, &out);
        }
        Command::Verify {
            suite,
            op_file,
            trials,
            max_len,
            seed,
            truncate_degree,
            inject_fault,
            common,
        } => {
            let s = Suite::from_name(&suite).ok_or_else(|| usage(format!("unknown suite `{}`", suite)))?;
            let mut cfg = SuiteConfig {
                preset: preset(&common.preset)?,
                trials,
                max_len,
                seed,
                truncate_degree,
                operators: load_ops(&op_file)?,
                ..SuiteConfig::default()
            };
            if inject_fault {
                cfg = cfg.with_fault();
            }
            let report = run_suite(s, &cfg);
            match common.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            if !report.passed {
                return Err(Failure::Verification(format!(
                    "suite {} failed {} of {} checks",
                    suite, report.failures, report.checks
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
