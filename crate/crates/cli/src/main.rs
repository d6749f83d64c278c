use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperpack::optimize::DEFAULT_TOL;
use hyperpack_cli::{
    render_density, render_limits, render_optimize, render_table, run_curve, CliError,
};

/// Hyperball packing density in regular truncated tetrahedra of H³.
#[derive(Debug, Parser)]
#[command(name = "hyperpack", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Height, orthoscheme volume, hyperball piece and density for one p > 6.
    Density {
        #[arg(long)]
        p: f64,
        /// Emit JSON with full precision instead of 5-decimal text.
        #[arg(long)]
        json: bool,
    },
    /// Metric data for p = 7, 8, 9, 20, 50, 100 and the p -> inf limit.
    Table,
    /// Locate the density maximum by golden-section search on [6.01, 8].
    Optimize {
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Write the density curve as CSV.
    #[command(after_help = "Plot with e.g. Python:\n  \
        import pandas as pd; pd.read_csv('curve.csv').plot(x='p', y='delta')\n\
        or gnuplot:\n  \
        set datafile separator ','; plot 'curve.csv' using 1:5 skip 1 with lines")]
    Curve {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Density near p = 6 and for large p.
    Limits,
}

fn run(cli: Cli) -> Result<String, (Option<String>, CliError)> {
    let plain = |r: Result<String, CliError>| r.map_err(|e| (None, e));
    match cli.command {
        Command::Density { p, json } => plain(render_density(p, json)),
        Command::Table => plain(render_table()),
        Command::Optimize { tol } => {
            let (text, gate) = render_optimize(tol).map_err(|e| (None, e))?;
            match gate {
                None => Ok(text),
                Some(err) => Err((Some(text), err)),
            }
        }
        Command::Curve {
            from,
            to,
            steps,
            out,
        } => plain(run_curve(from, to, steps, &out)),
        Command::Limits => plain(render_limits()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err((text, err)) => {
            if let Some(text) = text {
                print!("{text}");
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
