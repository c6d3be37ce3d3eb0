//! `relkin`: batch front end for the relativistic kinematics library.

mod commands;
mod error;
mod record;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Report, TiltMode};
use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "relkin", version, about = "Relativistic kinematics: velocity addition, Thomas rotation, boost links")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Seed for commands that sample.
    #[arg(long, default_value_t = 42, global = true)]
    seed: u64,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Einstein sum of two velocities, with the Thomas rotation.
    #[command(allow_negative_numbers = true)]
    Add {
        /// β₁ then β₂, three components each.
        #[arg(num_args = 6, value_names = ["B1X", "B1Y", "B1Z", "B2X", "B2Y", "B2Z"], required = true)]
        values: Vec<f64>,
    },
    /// Maximal Thomas angle for two Lorentz factors.
    ThomasMax { gamma1: f64, gamma2: f64 },
    /// Boost carrying s1 to s2 that is pure in the frame of s.
    #[command(allow_negative_numbers = true)]
    BoostLink {
        /// Reference state, four components (normalised).
        #[arg(long = "s", num_args = 4, required = true, value_names = ["T", "X", "Y", "Z"])]
        s: Vec<f64>,
        /// Start state, four components.
        #[arg(long = "s1", num_args = 4, required = true, value_names = ["T", "X", "Y", "Z"])]
        s1: Vec<f64>,
        /// End state, four components.
        #[arg(long = "s2", num_args = 4, required = true, value_names = ["T", "X", "Y", "Z"])]
        s2: Vec<f64>,
    },
    /// Link gamma along a one-parameter family of reference states, as `param,gamma` rows.
    TiltScan {
        #[arg(long)]
        gamma12: f64,
        #[arg(long, value_enum, default_value = "phi")]
        mode: TiltMode,
        /// Number of rows, endpoints included.
        #[arg(short = 'n', long = "n", default_value_t = 201)]
        n: usize,
        /// Upper end of the γ* range (default 10 times its minimum).
        #[arg(long)]
        upper: Option<f64>,
    },
    /// Check the loop axioms of velocity addition on random triples.
    Axioms {
        #[arg(short = 'n', long = "n", default_value_t = 1000)]
        n: usize,
        /// Restrict samples to one line, where addition is a group.
        #[arg(long)]
        collinear: bool,
        /// Largest Lorentz factor sampled.
        #[arg(long, default_value_t = 50.0)]
        gamma_max: f64,
    },
    /// Boost-rotation split of a 4x4 Lorentz matrix, by two routes.
    #[command(allow_negative_numbers = true)]
    Polar {
        /// Sixteen entries, row-major.
        #[arg(num_args = 16, required = true)]
        entries: Vec<f64>,
    },
    /// Boost-rotation split of a 4x4 Galilei matrix about a state.
    #[command(allow_negative_numbers = true)]
    GalileiDecompose {
        /// Sixteen entries, row-major.
        #[arg(num_args = 16, required = true)]
        entries: Vec<f64>,
        /// Velocity of the state the rotation fixes.
        #[arg(long, num_args = 3, default_values_t = [0.0, 0.0, 0.0], value_names = ["X", "Y", "Z"])]
        state: Vec<f64>,
    },
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Add { values } => commands::add(values),
        Command::ThomasMax { gamma1, gamma2 } => commands::thomas_max(*gamma1, *gamma2),
        Command::BoostLink { s, s1, s2 } => commands::boost_link(s, s1, s2),
        Command::TiltScan {
            gamma12,
            mode,
            n,
            upper,
        } => commands::tilt(*gamma12, *mode, *n, *upper),
        Command::Axioms {
            n,
            collinear,
            gamma_max,
        } => commands::axioms(*n, cli.seed, *collinear, *gamma_max),
        Command::Polar { entries } => commands::polar(entries),
        Command::GalileiDecompose { entries, state } => commands::galilei_decompose(entries, state),
    }
}

fn render(report: &Report, format: Format) -> String {
    match (&report.series, format) {
        (_, Format::Json) => report.record.render_json(),
        (Some(series), _) => {
            let mut s = format!("{},{}\n", series.header[0], series.header[1]);
            for (p, g) in &series.rows {
                s.push_str(&format!("{},{}\n", record::round_trip(*p), record::round_trip(*g)));
            }
            s
        }
        (None, Format::Csv) => report.record.render_csv(),
        (None, Format::Text) => report.record.render_text(),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let report = dispatch(cli)?;
    report.record.check_finite()?;
    emit(&render(&report, cli.format), cli.out.as_ref())?;
    Ok(report.consistent)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("relkin: internal consistency check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("relkin: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
