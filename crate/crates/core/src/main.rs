use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hyperball::cli::{
    cmd_curve, cmd_lob, cmd_optimize, cmd_table, cmd_volume, emit, parse_p_list, parse_p_range,
    CliConfig, CliResult, REFERENCE_P,
};
use hyperball::optimize::DEFAULT_TOL;

/// Hyperball packing densities in regular truncated tetrahedra of H^3.
#[derive(Debug, Parser)]
#[command(name = "hyperball", version)]
struct Args {
    /// Decimals printed for computed values.
    #[arg(long, global = true, default_value_t = 5,
          value_parser = clap::value_parser!(u8).range(1..=15))]
    precision: u8,

    /// Optimizer tolerance in p.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-orthoscheme data and density for a list of p (default: p = 7, 8, 9, 20, 50, 100).
    Table {
        /// Comma-separated p values.
        #[arg(long = "p", value_name = "LIST", conflicts_with = "p_range")]
        p: Option<String>,
        /// Sweep as lo:hi:step.
        #[arg(long, value_name = "LO:HI:STEP")]
        p_range: Option<String>,
    },
    /// Density sampled on an even grid of p, for plotting.
    Curve {
        #[arg(long, default_value_t = 6.01)]
        from: f64,
        #[arg(long, default_value_t = 12.0)]
        to: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Search for the p of maximal density.
    Optimize,
    /// Height, volumes and face areas of the truncated tetrahedron for one p.
    Volume {
        #[arg(long = "p")]
        p: f64,
    },
    /// Evaluate the Lobachevsky function.
    Lob {
        #[arg(allow_negative_numbers = true)]
        x: f64,
    },
}

fn run(args: Args) -> CliResult<()> {
    let config = CliConfig {
        precision: args.precision as usize,
        tol: args.tol,
        output_path: args.out,
    };
    config.validate()?;
    let text = match args.command {
        Command::Table { p, p_range } => {
            let p_list = match (p, p_range) {
                (Some(list), _) => parse_p_list(&list)?,
                (None, Some(range)) => parse_p_range(&range)?,
                (None, None) => REFERENCE_P.to_vec(),
            };
            cmd_table(&p_list, &config)?
        }
        Command::Curve { from, to, samples } => cmd_curve(from, to, samples, &config)?,
        Command::Optimize => cmd_optimize(&config)?,
        Command::Volume { p } => cmd_volume(p, &config)?,
        Command::Lob { x } => cmd_lob(x, &config)?,
    };
    emit(&text, &config)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
