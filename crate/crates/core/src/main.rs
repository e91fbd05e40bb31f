//! `charp-closure-lab`: batch runner, REPL, and the one-shot reproduction
//! command for the characteristic-p closure engine.

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use charp_closure_lab::dsl::{
    execute_command, parse_program, run_reproduction, ConfigMask, Env, ExecOutcome,
    TraceKind, SUPPORTED_PRIMES,
};
use charp_closure_lab::{fp, Config};

#[derive(Parser)]
#[command(
    name = "charp-closure-lab",
    about = "Exact characteristic-p commutative algebra: Groebner bases over F_p, \
             Frobenius bracket powers, tight closure in Stanley-Reisner quotients, \
             test ideals, and Frobenius actions on top local cohomology",
    version
)]
struct Cli {
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Frobenius iteration bound for bounded closure checks
    #[arg(long, global = true)]
    emax: Option<u32>,
    /// Largest admissible q = p^e
    #[arg(long, global = true)]
    qcap: Option<u64>,
    /// Largest admissible coefficient prime
    #[arg(long, global = true)]
    prime_cap: Option<u64>,
    /// Largest admissible local-cohomology level
    #[arg(long, global = true)]
    level_cap: Option<u64>,
    /// Groebner budget: maximum reduction steps per basis computation
    #[arg(long, global = true)]
    gb_budget: Option<u64>,
    /// Groebner budget: maximum basis size
    #[arg(long, global = true)]
    gb_max_basis: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a script of statements from a file
    Run {
        file: PathBuf,
        /// Emit the trace as line-oriented JSON
        #[arg(long)]
        json: bool,
    },
    /// Read statements interactively from standard input
    Repl,
    /// Run the bundled three-plane F-stability demonstration end to end
    Reproduce {
        /// The characteristic to run at (2, 3, or 5)
        #[arg(long)]
        prime: u64,
        /// Allow the long-running p = 5 instance
        #[arg(long)]
        slow: bool,
        /// Emit the audit log as line-oriented JSON only
        #[arg(long)]
        json: bool,
    },
}

/// flags > environment > (session, applied at `load`) > defaults
fn configure(limits: &LimitArgs) -> ConfigMask {
    let defaults = Config::default();
    let env_cfg = defaults.with_env();
    let mut mask = ConfigMask {
        prime_cap: env_cfg.prime_cap != defaults.prime_cap,
        e_max: env_cfg.e_max != defaults.e_max,
        q_cap: env_cfg.q_cap != defaults.q_cap,
        level_cap: env_cfg.level_cap != defaults.level_cap,
        gb_max_basis: env_cfg.gb_max_basis != defaults.gb_max_basis,
        gb_max_reductions: env_cfg.gb_max_reductions != defaults.gb_max_reductions,
    };
    let mut cfg = env_cfg;
    if let Some(v) = limits.emax {
        cfg.e_max = v;
        mask.e_max = true;
    }
    if let Some(v) = limits.qcap {
        cfg.q_cap = v;
        mask.q_cap = true;
    }
    if let Some(v) = limits.prime_cap {
        cfg.prime_cap = v;
        mask.prime_cap = true;
    }
    if let Some(v) = limits.level_cap {
        cfg.level_cap = v;
        mask.level_cap = true;
    }
    if let Some(v) = limits.gb_budget {
        cfg.gb_max_reductions = v;
        mask.gb_max_reductions = true;
    }
    if let Some(v) = limits.gb_max_basis {
        cfg.gb_max_basis = v;
        mask.gb_max_basis = true;
    }
    Config::set_global(cfg);
    mask
}

fn print_trace(outcome: &ExecOutcome, json: bool) {
    for entry in &outcome.trace {
        if json {
            let kind = match entry.kind {
                TraceKind::Result => "result",
                TraceKind::Warning => "warning",
                TraceKind::Error => "error",
                TraceKind::Audit => "audit",
            };
            let record = if entry.kind == TraceKind::Audit {
                // audit payloads are already JSON objects
                serde_json::from_str::<serde_json::Value>(&entry.text)
                    .unwrap_or_else(|_| serde_json::json!(entry.text))
            } else {
                serde_json::json!(entry.text)
            };
            println!(
                "{}",
                serde_json::json!({
                    "line": entry.line,
                    "col": entry.col,
                    "kind": kind,
                    "record": record,
                })
            );
        } else {
            match entry.kind {
                TraceKind::Result | TraceKind::Audit => println!("{}", entry.text),
                TraceKind::Warning => println!("warning ({}:{}): {}", entry.line, entry.col, entry.text),
                TraceKind::Error => println!("error ({}:{}): {}", entry.line, entry.col, entry.text),
            }
        }
    }
}

fn run_file(file: &PathBuf, json: bool, mask: ConfigMask) -> ExitCode {
    let source = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot read {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let program = match parse_program(&source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let mut env = Env::new();
    env.config_mask = mask;
    let outcome = execute_command(&program, &mut env);
    print_trace(&outcome, json);
    ExitCode::from(outcome.exit_code() as u8)
}

fn repl(mask: ConfigMask) -> ExitCode {
    let stdin = std::io::stdin();
    let mut env = Env::new();
    env.config_mask = mask;
    let mut buffer = String::new();
    let mut errors = 0usize;
    let mut budget_errors = 0usize;
    let prompt = |cont: bool| {
        print!("{}", if cont { "...> " } else { "ccl> " });
        let _ = std::io::stdout().flush();
    };
    prompt(false);
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        buffer.push_str(&line);
        buffer.push('\n');
        if !buffer.trim_end().ends_with(';') {
            prompt(!buffer.trim().is_empty());
            continue;
        }
        match parse_program(&buffer) {
            Ok(program) => {
                let outcome = execute_command(&program, &mut env);
                errors += outcome.errors;
                budget_errors += outcome.budget_errors;
                print_trace(&outcome, false);
            }
            Err(e) => {
                errors += 1;
                println!("{e}");
            }
        }
        buffer.clear();
        prompt(false);
    }
    if budget_errors > 0 {
        ExitCode::from(3)
    } else if errors > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn reproduce(prime: u64, slow: bool, json: bool) -> ExitCode {
    if !fp::is_prime(prime) {
        eprintln!("usage error: {prime} is not prime");
        return ExitCode::from(2);
    }
    if !SUPPORTED_PRIMES.contains(&prime) {
        eprintln!("usage error: supported primes are {SUPPORTED_PRIMES:?}");
        return ExitCode::from(2);
    }
    if prime == 5 && !slow {
        eprintln!("usage error: p = 5 drives inputs of degree 42 against bracket exponent 25; pass --slow to run it");
        return ExitCode::from(2);
    }
    match run_reproduction(prime) {
        Ok(outcome) => {
            for record in &outcome.records {
                println!("{}", record.to_json());
            }
            if !json {
                println!(
                    "reproduce p={}: all {} assertions hold",
                    outcome.prime,
                    outcome.records.len()
                );
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mask = configure(&cli.limits);
    match cli.command {
        Command::Run { file, json } => run_file(&file, json, mask),
        Command::Repl => repl(mask),
        Command::Reproduce { prime, slow, json } => reproduce(prime, slow, json),
    }
}
