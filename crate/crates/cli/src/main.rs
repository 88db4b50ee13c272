use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use comply_core::arith::{self, ArithOptions, DEFAULT_MIN_TAIL_MULTIPLE};
use comply_core::{
    build_table, verify_consecutive, ConstraintSide, EngineConfig, Error, GrundyTable, Position,
    RuleSet,
};
use serde_json::json;

mod play;
mod render;

/// Grundy values of comply/constrain subtraction games.
#[derive(Debug, Parser)]
#[command(name = "comply", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grundy value of a single position.
    Grundy {
        #[command(flatten)]
        common: Common,
        #[arg(long, alias = "nmax")]
        n: u64,
        #[arg(long, default_value = "base", value_parser = parse_side)]
        side: ConstraintSide,
        /// Also list the winning moves.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Tabulate both sides for 0..=nmax.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, alias = "n")]
        nmax: u64,
    },
    /// Check the closed forms (k=K) or the period structure (arith:B,C,IMAX).
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, alias = "n")]
        nmax: u64,
    },
    /// Detect the preperiod and period of one row.
    Period {
        #[command(flatten)]
        common: Common,
        #[arg(long, alias = "n")]
        nmax: u64,
        #[arg(long, default_value = "base", value_parser = parse_side)]
        side: ConstraintSide,
    },
    /// Play against the engine on stdin/stdout.
    Play {
        #[command(flatten)]
        common: Common,
        #[arg(long, alias = "nmax")]
        n: u64,
        /// Side you start on.
        #[arg(long, default_value = "base", value_parser = parse_side)]
        side: ConstraintSide,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Ruleset: `k=K`, `arith:B,C,IMAX`, `inf-arith:B,C` or `set:a,b,...`.
    #[arg(long = "set", value_parser = parse_rules)]
    rules: RuleSet,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Analyse progressions with b < 5.
    #[arg(long)]
    allow_small_b: bool,
    #[arg(long, default_value_t = comply_core::engine::DEFAULT_STATE_CEILING)]
    state_ceiling: u64,
    #[arg(long, default_value_t = DEFAULT_MIN_TAIL_MULTIPLE)]
    min_tail_multiple: usize,
}

impl Common {
    fn engine(&self) -> EngineConfig {
        EngineConfig::with_ceiling(self.state_ceiling)
    }

    fn arith_options(&self) -> ArithOptions {
        ArithOptions {
            engine: self.engine(),
            min_tail_multiple: self.min_tail_multiple,
            allow_small_b: self.allow_small_b,
        }
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = io::stdout().lock();
                // a closed pipe is not worth an error code
                let _ = stdout.write_all(text.as_bytes());
                Ok(())
            }
        }
    }
}

fn parse_rules(s: &str) -> Result<RuleSet, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_side(s: &str) -> Result<ConstraintSide, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Verification mismatch or no detectable period.
    Check,
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Grundy {
            common,
            n,
            side,
            verbose,
        } => cmd_grundy(&common, Position::new(n, side), verbose),
        Command::Table { common, nmax } => cmd_table(&common, nmax),
        Command::Verify { common, nmax } => cmd_verify(&common, nmax),
        Command::Period { common, nmax, side } => cmd_period(&common, nmax, side),
        Command::Play { common, n, side } => {
            let table = build_table(&common.rules, n, &common.engine())?;
            let stdin = io::stdin().lock();
            let stdout = io::stdout().lock();
            play::run(&table, Position::new(n, side), stdin, stdout)
                .map_err(|e| Failure::Usage(format!("i/o error: {e}")))
        }
    }
}

fn cmd_grundy(common: &Common, pos: Position, verbose: bool) -> Result<(), Failure> {
    let table = build_table(&common.rules, pos.n, &common.engine())?;
    let value = table.get(pos);
    let moves = table.winning_moves(pos);
    let text = match common.format {
        Format::Pretty => {
            let mut s = format!("{value}\n");
            if verbose {
                if moves.is_empty() {
                    s.push_str("no winning moves\n");
                }
                for m in &moves {
                    s.push_str(&format!("winning: {m}\n"));
                }
            }
            s
        }
        Format::Csv => format!("n,side,G\n{},{},{value}\n", pos.n, pos.side),
        Format::Json => {
            let mut v = json!({
                "ruleset": common.rules.to_string(),
                "n": pos.n,
                "side": pos.side,
                "grundy": value,
            });
            if verbose {
                v["winning_moves"] = json!(moves);
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    common.emit(&text)
}

fn cmd_table(common: &Common, nmax: u64) -> Result<(), Failure> {
    let table = build_table(&common.rules, nmax, &common.engine())?;
    let text = match common.format {
        Format::Csv => table.to_csv(),
        Format::Json => format!("{}\n", table.to_json()),
        Format::Pretty => render::pretty_table(&table),
    };
    common.emit(&text)
}

fn cmd_verify(common: &Common, nmax: u64) -> Result<(), Failure> {
    let (passed, text) = match common.rules {
        RuleSet::Consecutive { k } => {
            let report = verify_consecutive(k, nmax, &common.engine())?;
            let text = match common.format {
                Format::Json => format!("{}\n", report.to_json()),
                _ => render::consecutive_summary(&report),
            };
            (report.passed, text)
        }
        RuleSet::FiniteArithmetic { b, c, i_max } => {
            let report = arith::verify_arith(b, c, i_max, nmax, &common.arith_options())?;
            let text = match common.format {
                Format::Json => format!("{}\n", report.to_json()),
                _ => render::arith_summary(&report),
            };
            (report.passed, text)
        }
        ref other => {
            return Err(Failure::Usage(format!(
                "verify needs a `k=K` or `arith:B,C,IMAX` ruleset, got `{other}`"
            )))
        }
    };
    common.emit(&text)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_period(common: &Common, nmax: u64, side: ConstraintSide) -> Result<(), Failure> {
    let table: GrundyTable = build_table(&common.rules, nmax, &common.engine())?;
    let found = match arith::detect_period(table.row(side), common.min_tail_multiple) {
        Ok(found) => found,
        Err(e @ Error::InsufficientData { .. }) => {
            eprintln!("{e}");
            return Err(Failure::Check);
        }
        Err(e) => return Err(e.into()),
    };
    let text = match common.format {
        Format::Pretty => format!("preperiod={} period={}\n", found.preperiod, found.period),
        Format::Csv => format!("preperiod,period\n{},{}\n", found.preperiod, found.period),
        Format::Json => {
            let v = json!({
                "ruleset": common.rules.to_string(),
                "side": side,
                "n_max": nmax,
                "preperiod": found.preperiod,
                "period": found.period,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    common.emit(&text)
}
