use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use l2dim_cli::commands::{
    cmd_compute, cmd_sweep, cmd_truncate, CliError, ComputeArgs, SweepArgs, TruncateArgs,
};
use l2dim_core::realization::DEFAULT_ORDER_CAP;

const ORDER_CAP_ENV: &str = "L2DIM_ORDER_CAP";

/// Exact Betti reports for finite presentations over finite realizations.
#[derive(Parser)]
#[command(name = "l2dim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Betti report of one presentation over the realization
    /// named in the input file
    Compute {
        /// Problem JSON with generators, relators, and a realization
        #[arg(long)]
        input: PathBuf,
        /// Where to write the report JSON
        #[arg(long)]
        output: PathBuf,
        /// Also report every relator-prefix complex (0, 1, ..., all)
        #[arg(long)]
        exhaust: bool,
    },
    /// Evaluate the presentation across a family of realizations
    Sweep {
        /// Problem JSON with generators and relators (realization ignored)
        #[arg(long)]
        input: PathBuf,
        /// `abelian-grid`, `cyclic`, or a path to a family JSON file
        #[arg(long)]
        family: String,
        /// First modulus of a named family
        #[arg(long)]
        from: Option<usize>,
        /// Last modulus of a named family
        #[arg(long)]
        to: Option<usize>,
        /// Where to write the JSON array of member reports
        #[arg(long)]
        output: PathBuf,
        /// Optional CSV (order, beta0, beta1, delta2) for plotting
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Worker threads for the sweep (default: one per CPU)
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Clamp a rational vertex function on a graph until its coboundary
    /// moves by less than epsilon in lp norm
    Truncate {
        /// Graph JSON: {"vertices": n, "edges": [[u,v], ...]}
        #[arg(long)]
        graph: PathBuf,
        /// Cochain JSON: {"values": ["p/q", ...]}, one value per vertex
        #[arg(long)]
        function: PathBuf,
        /// Which lp norm to certify, >= 1
        #[arg(long)]
        p: f64,
        /// Error budget, > 0
        #[arg(long)]
        epsilon: f64,
        /// Where to write the certificate JSON
        #[arg(long)]
        output: PathBuf,
    },
}

fn order_cap() -> Result<usize, CliError> {
    match std::env::var(ORDER_CAP_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORDER_CAP),
        Err(e) => Err(CliError::new(
            "bad-env",
            format!("{ORDER_CAP_ENV} is not valid unicode: {e}"),
        )),
        Ok(text) => text.parse().map_err(|e| {
            CliError::new(
                "bad-env",
                format!("{ORDER_CAP_ENV}={text} is not a valid element cap: {e}"),
            )
        }),
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute {
            input,
            output,
            exhaust,
        } => cmd_compute(
            &ComputeArgs {
                input,
                output,
                exhaust,
            },
            order_cap()?,
        ),
        Command::Sweep {
            input,
            family,
            from,
            to,
            output,
            csv,
            jobs,
        } => cmd_sweep(
            &SweepArgs {
                input,
                family,
                from,
                to,
                output,
                csv,
                jobs,
            },
            order_cap()?,
        ),
        Command::Truncate {
            graph,
            function,
            p,
            epsilon,
            output,
        } => cmd_truncate(&TruncateArgs {
            graph,
            function,
            p,
            epsilon,
            output,
        }),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            let record = serde_json::to_string_pretty(&error.to_record())
                .expect("error records always serialize");
            println!("{record}");
            ExitCode::from(2)
        }
    }
}
