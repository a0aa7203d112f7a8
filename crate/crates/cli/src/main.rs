use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use realize_cli::commands::{self, CheckArgs, Output, RefuteArgs, DEFAULT_CAP};
use realize_cli::CliError;

/// Full-realizability checks for finite groups over GF(2).
#[derive(Parser, Debug)]
#[command(name = "realize", version)]
struct Cli {
    /// Worker threads for the parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write the JSON document to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the JSON document instead of text.
    #[arg(long)]
    json: bool,
}

impl OutputArgs {
    fn output(self) -> Output {
        Output {
            json: self.json,
            out: self.out,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and print or save its Cayley table.
    Group {
        /// e.g. `cyclic:12`, `product(cyclic:2,cyclic:2)`, `sdp:Y_C3`
        expr: String,
        /// Write the table text to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the fingerprint.
        #[arg(long)]
        info: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check whether an ideal fully realizes a group.
    Check {
        group: String,
        /// e.g. `elem`, `sdp-c3`, `gens:1+x+y+xy`, `file:ideal.txt`
        ideal: String,
        /// List every unit with its inverse.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap_dim: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for a proof that no ideal fully realizes a group.
    Refute {
        group: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        /// Extra seed units tried before the defaults, e.g. `1+x+y`.
        #[arg(long = "unit")]
        units: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap_dim: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run reference cases and compare with their expected outcomes.
    Repro {
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-check every witness in a certificate file.
    Verify { file: PathBuf },
    /// Run seeded randomized checks of the algebra.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

fn run(cli: Cli) -> Result<u8, CliError> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Group { expr, out, info, json } => commands::group(&expr, info, out.as_deref(), json),
        Command::Check {
            group,
            ideal,
            full,
            cap_dim,
            output,
        } => commands::check(
            CheckArgs {
                group: &group,
                ideal: &ideal,
                full,
                cap_dim,
            },
            &output.output(),
        ),
        Command::Refute {
            group,
            depth,
            units,
            cap_dim,
            output,
        } => commands::refute(
            RefuteArgs {
                group: &group,
                depth,
                units: &units,
                cap_dim,
            },
            &output.output(),
        ),
        Command::Repro { names, all, output } => commands::repro(&names, all, &output.output()),
        Command::Verify { file } => commands::verify(&file),
        Command::Selftest { seed, cases } => commands::selftest(seed, cases),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
