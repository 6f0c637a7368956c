use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gdgap_cli::{
    cmd_construct, cmd_equilateral, cmd_example, cmd_fuzz, cmd_gap, cmd_pech_sides, cmd_pech_trials, cmd_planar,
    parse_rational, read_config, CliError, CliResult, Outcome,
};
use gdgap_core::fuzz::Bounds;
use gdgap_core::{Field, Radicand, Scalar};

/// Exact verifier for the Grace–Danielsson gap of a tetrahedron built from a
/// base triangle, a tangent point and an inradius.
///
/// Exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 critical or supercritical inradius.
#[derive(Parser)]
#[command(name = "gdgap", version)]
struct Cli {
    /// Emit a flat JSON object of exact string literals.
    #[arg(long, global = true)]
    json: bool,
    /// Add "~" decimal renderings next to exact values.
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apex, tangent points and critical inradius for a config file.
    Construct { config: PathBuf },
    /// Full gap certificate and verdict for a config file.
    Gap { config: PathBuf },
    /// Recompute a built-in example and compare with its published values.
    Example {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        n: u8,
    },
    /// Run the invariant suite on seeded random configurations.
    Fuzz(FuzzArgs),
    /// Critical inradius of the planar problem on [0, 1].
    Planar {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Pech's polynomial identity and Euler's relation.
    Pech(PechArgs),
    /// Gap of a tetrahedron over an equilateral face touched at its center.
    Equilateral {
        /// Squared side length.
        #[arg(long, allow_hyphen_values = true)]
        l2: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = Bounds::default().coordinate)]
    coordinate_bound: i64,
    #[arg(long, default_value_t = Bounds::default().denominator)]
    denominator_bound: i64,
}

#[derive(Args)]
struct PechArgs {
    /// Number of random Heronian triangles to check.
    #[arg(long, default_value_t = 20, conflicts_with = "sides")]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Check one triangle given as `a,b,c`.
    #[arg(long)]
    sides: Option<String>,
    /// Radicand of the quadratic field for `--sides`; rational when omitted.
    #[arg(long)]
    quadext: Option<u64>,
}

fn scalar(text: &str) -> CliResult<Scalar> {
    text.parse().map_err(|e| CliError::Usage(format!("`{text}`: {e}")))
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Construct { config } => cmd_construct(&read_config(config)?),
        Command::Gap { config } => cmd_gap(&read_config(config)?),
        Command::Example { n } => cmd_example(*n),
        Command::Fuzz(a) => {
            cmd_fuzz(a.trials, a.seed, Bounds { coordinate: a.coordinate_bound, denominator: a.denominator_bound })
        }
        Command::Planar { p } => cmd_planar(&parse_rational(p)?),
        Command::Pech(a) => match &a.sides {
            Some(sides) => {
                let parts = sides.split(',').map(scalar).collect::<CliResult<Vec<_>>>()?;
                let sides: [Scalar; 3] =
                    parts.try_into().map_err(|_| CliError::Usage("--sides takes exactly three values".into()))?;
                let field = match a.quadext {
                    Some(k) => Field::Quadratic(Radicand::new(k).map_err(|e| CliError::Usage(e.to_string()))?),
                    None => Field::Rational,
                };
                cmd_pech_sides(sides, field)
            }
            None => cmd_pech_trials(a.trials, a.seed),
        },
        Command::Equilateral { l2, r } => cmd_equilateral(&scalar(l2)?, &scalar(r)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.report.render(cli.json, cli.approx));
            for line in &out.diagnostics {
                eprintln!("{line}");
            }
            ExitCode::from(out.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
