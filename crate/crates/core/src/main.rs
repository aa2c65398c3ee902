//! Command-line front end: builds count tables, runs the verification
//! suite, and emits machine-readable reports. All state lives on the
//! command line, so any run is reproducible from shell history.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use interval_orders::counts::CountTable;
use interval_orders::distributions::Model;
use interval_orders::report::{
    asympt_report, counts_bfile, counts_csv, counts_json, dist_report, verify_report,
    OutputFormat, RunConfig, SeqKind,
};

#[derive(Parser)]
#[command(
    name = "interval-orders",
    about = "Exact and asymptotic enumeration of interval orders",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    /// Unlabelled interval orders.
    I,
    /// Rigid (duplicate-free) interval orders.
    R,
    /// Labelled interval orders.
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Unlabelled,
    Labelled,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact counting table for n = 0..max-n.
    Counts {
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Which sequence a bfile emits (bfile format only).
        #[arg(long, value_enum)]
        seq: Option<SeqArg>,
    },
    /// Run every cross-check and report pass/fail per check.
    Verify {
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = 256)]
        precision_bits: usize,
        /// Check the alternating-transform variant that keeps the order-0
        /// term; it disagrees with the generating function by exactly 1 at
        /// every n >= 1, so this run is expected to fail.
        #[arg(long)]
        transform_with_i0: bool,
    },
    /// Report limit constants, scaled ratios, fits, and convergence.
    Asympt {
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long, default_value_t = 256)]
        precision_bits: usize,
    },
    /// Report the duplicated-pair and reduction-size laws at one n.
    Dist {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        max_n: usize,
        #[arg(long, default_value_t = 256)]
        precision_bits: usize,
    },
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Counts { max_n, format, seq } => {
            let cfg = RunConfig {
                max_n,
                format: match format {
                    FormatArg::Csv => OutputFormat::Csv,
                    FormatArg::Json => OutputFormat::Json,
                    FormatArg::Bfile => OutputFormat::Bfile,
                },
                ..RunConfig::default()
            };
            cfg.validate()?;
            let seq = match (cfg.format, seq) {
                (OutputFormat::Bfile, Some(s)) => Some(match s {
                    SeqArg::I => SeqKind::Unlabelled,
                    SeqArg::R => SeqKind::Rigid,
                    SeqArg::L => SeqKind::Labelled,
                }),
                (OutputFormat::Bfile, None) => {
                    return Err("bfile output needs --seq {i|r|l}".to_string())
                }
                (_, Some(_)) => {
                    return Err("--seq only applies to --format bfile".to_string())
                }
                (_, None) => None,
            };
            let table = CountTable::build(cfg.max_n);
            match cfg.format {
                OutputFormat::Csv => print!("{}", counts_csv(&table)),
                OutputFormat::Json => print!("{}", counts_json(&cfg, &table)),
                OutputFormat::Bfile => {
                    print!("{}", counts_bfile(&table, seq.expect("checked above")))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_n,
            oracle_max_n,
            precision_bits,
            transform_with_i0,
        } => {
            let cfg = RunConfig {
                max_n,
                precision_bits,
                format: OutputFormat::Json,
                oracle_max_n,
            };
            cfg.validate()?;
            let outcome = verify_report(&cfg, transform_with_i0);
            print!("{}", outcome.json);
            match outcome.first_failure {
                None => Ok(ExitCode::SUCCESS),
                Some(name) => {
                    eprintln!("first failing check: {name}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Asympt {
            max_n,
            precision_bits,
        } => {
            let cfg = RunConfig {
                max_n,
                precision_bits,
                format: OutputFormat::Json,
                ..RunConfig::default()
            };
            cfg.validate()?;
            print!("{}", asympt_report(&cfg)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist {
            model,
            n,
            max_n,
            precision_bits,
        } => {
            let cfg = RunConfig {
                max_n,
                precision_bits,
                format: OutputFormat::Json,
                ..RunConfig::default()
            };
            cfg.validate()?;
            let model = match model {
                ModelArg::Unlabelled => Model::Unlabelled,
                ModelArg::Labelled => Model::Labelled,
            };
            print!("{}", dist_report(&cfg, model, n)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
