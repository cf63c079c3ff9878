//! `offcenter`: spectra, wavefunctions, sweeps and reference solutions for
//! two trapped particles with displaced delta interactions.

mod commands;
mod error;
mod output;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{DeltaArg, ParityArg, SweepArgs, SweepMode};
use error::{CliError, Result};
use output::Document;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Parser)]
#[command(name = "offcenter", version, about = "Two trapped particles with displaced delta interactions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Energy levels at finite coupling.
    Levels {
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        #[arg(long)]
        c: f64,
        #[arg(long, value_enum, default_value = "both")]
        parity: ParityArg,
        /// Levels per parity, or in total for `both`.
        #[arg(long, default_value_t = 6)]
        count: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Normalized eigenfunction sampled on a uniform grid.
    Wavefunction {
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
        xmin: f64,
        #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
        xmax: f64,
        #[arg(long, default_value_t = 0.01)]
        dx: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Level curves over a coupling or displacement grid.
    Sweep {
        #[arg(long, value_enum)]
        mode: SweepMode,
        /// Coupling (modes c and widths).
        #[arg(long, allow_negative_numbers = true)]
        g: Option<f64>,
        /// Displacement (mode g).
        #[arg(long)]
        c: Option<f64>,
        #[arg(long, default_value_t = 6)]
        count: usize,
        /// Quantum numbers for the widths mode.
        #[arg(long, value_delimiter = ',')]
        levels: Vec<usize>,
        /// Explicit ascending samples, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["from", "to", "points"])]
        samples: Vec<f64>,
        #[arg(long, allow_negative_numbers = true, requires_all = ["to", "points"])]
        from: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires_all = ["from", "points"])]
        to: Option<f64>,
        #[arg(long, requires_all = ["from", "to"])]
        points: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Directory receiving one file per dataset; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Displacements at which a level decouples from the interaction.
    Dark {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 4.0)]
        c_max: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Finite-difference reference spectrum with an h-halving error bound.
    Oracle {
        #[arg(long, allow_negative_numbers = true)]
        g: f64,
        #[arg(long)]
        c: f64,
        /// Half-width of the box; defaults to ceil(c + 12).
        #[arg(long = "L")]
        l: Option<f64>,
        #[arg(long, default_value_t = 0.002)]
        h: f64,
        #[arg(long, default_value_t = 6)]
        k: usize,
        #[arg(long, value_enum, default_value = "nearest")]
        delta_model: DeltaArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Re-render a JSON document as CSV, optionally comparing with an existing file.
    Verify {
        input: PathBuf,
        /// CSV to compare against byte for byte (single-dataset documents).
        #[arg(long)]
        expect: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn emit(doc: &Document, format: Format, out: Option<&Path>, stem: &str) -> Result<()> {
    let files: Vec<(String, String)> = match format {
        Format::Json => vec![(format!("{stem}.json"), serde_json::to_string_pretty(doc)? + "\n")],
        Format::Csv => commands::render(doc)?.iter().map(|t| (format!("{}.csv", t.name), t.to_csv(doc))).collect(),
    };
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
            for (name, body) in &files {
                write(&dir.join(name), body)?;
            }
        }
        None => {
            let joined: Vec<&str> = files.iter().map(|(_, b)| b.as_str()).collect();
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(joined.join("\n").as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Levels { g, c, parity, count, format } => {
            emit(&commands::levels(g, c, parity, count)?, format, None, "levels")
        }
        Command::Wavefunction { g, c, n, xmin, xmax, dx, format } => {
            emit(&commands::wavefunction(g, c, n, xmin, xmax, dx)?, format, None, "wavefunction")
        }
        Command::Sweep { mode, g, c, count, levels, samples, from, to, points, format, out } => {
            let range = from.zip(to).zip(points).map(|((a, b), n)| (a, b, n));
            let samples = commands::samples(mode, &samples, range)?;
            let doc = commands::sweep(SweepArgs { mode, g, c, count, levels, samples })?;
            emit(&doc, format, out.as_deref(), &format!("sweep_{}", mode.name()))
        }
        Command::Dark { n_max, c_max, format } => emit(&commands::dark(n_max, c_max)?, format, None, "dark"),
        Command::Oracle { g, c, l, h, k, delta_model, format } => {
            emit(&commands::oracle(g, c, l, h, k, delta_model)?, format, None, "oracle")
        }
        Command::Verify { input, expect, out } => {
            let doc: Document = serde_json::from_str(&read(&input)?)?;
            if let Some(expect) = expect {
                let tables = commands::render(&doc)?;
                let [table] = tables.as_slice() else {
                    return Err(CliError::Usage("--expect needs a single-dataset document; use --out".into()));
                };
                if table.to_csv(&doc) != read(&expect)? {
                    return Err(CliError::Mismatch(expect.display().to_string()));
                }
                return Ok(());
            }
            emit(&doc, Format::Csv, out.as_deref(), "")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("offcenter: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
