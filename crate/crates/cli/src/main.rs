use clap::{Parser, Subcommand, ValueEnum};
use hypnu::analytic::RootBranch;
use hypnu::Execution;
use hypnu_cli::config::OutputFormat;
use hypnu_cli::error::{EXIT_INTERNAL, EXIT_OK};
use hypnu_cli::{commands, load_config, CliError, Context, Kind, LoadedConfig, RmConvention};
use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Bound states of the generalized inverted hyperbolic potential: figure
/// data, closed-form spectra, numerical oracles and validation reports.
///
/// Exit codes: 0 success, 2 config or argument error, 3 internal error,
/// 4 singular analytic case.
#[derive(Parser)]
#[command(name = "hypnu", version)]
struct Cli {
    /// TOML config (`potential.a = 1` style keys); defaults apply when absent.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file, or `-` for stdout. Overrides `output.path`.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Special case applied to the config's potential block.
    #[arg(long, global = true, value_enum, default_value_t = KindArg::General)]
    kind: KindArg,
    /// Reading of `potential.a` for `--kind rosen-morse`.
    #[arg(long = "rm-convention", global = true, value_enum, default_value_t = RmArg::Coefficient)]
    rm_convention: RmArg,
    /// Append a `# generated_unix` line to CSV output.
    #[arg(long, global = true)]
    stamp: bool,
    /// Run every task on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    General,
    RosenMorse,
    PoschlTeller,
    Scarf,
}

#[derive(Clone, Copy, ValueEnum)]
enum RmArg {
    Coefficient,
    Subscript,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Plus,
    Minus,
}

/// Comma list (`0,1,2`) or inclusive range (`0..2`).
#[derive(Clone, Debug)]
struct IndexList(Vec<u32>);

fn parse_index_list(s: &str) -> Result<IndexList, String> {
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
        let b: u32 = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
        if b < a {
            return Err(format!("empty range {s}"));
        }
        return Ok(IndexList((a..=b).collect()));
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("bad index {t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(IndexList)
}

#[derive(clap::Args)]
struct StateArgs {
    /// Radial quantum numbers, e.g. `0..2` or `0,2`. Overrides `state.n`.
    #[arg(long, value_parser = parse_index_list)]
    n: Option<IndexList>,
    /// Orbital quantum numbers. Overrides `state.l`.
    #[arg(long, value_parser = parse_index_list)]
    l: Option<IndexList>,
}

#[derive(Subcommand)]
enum Command {
    /// CSV of V(r), one column per alpha.
    Potential {
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
        /// Number of radial samples (default: grid.n_points).
        #[arg(long)]
        points: Option<usize>,
    },
    /// CSV of V(r) + centrifugal barrier, one column per l.
    Effective {
        #[arg(long, value_parser = parse_index_list)]
        l: Option<IndexList>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// JSON with both closed-form energy branches for every (n, l).
    Spectrum {
        #[command(flatten)]
        state: StateArgs,
    },
    /// CSV of the closed-form radial wavefunction.
    Wavefunction {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
    },
    /// JSON with finite-difference and Numerov spectra for every l.
    Oracle {
        #[command(flatten)]
        state: StateArgs,
    },
    /// JSON report binding the closed form to the numerical oracles.
    Validate {
        #[command(flatten)]
        state: StateArgs,
    },
    /// JSON with NU-engine outputs beside the printed closed forms.
    NuCheck {
        #[command(flatten)]
        state: StateArgs,
    },
}

fn apply_state(loaded: &mut LoadedConfig, state: &StateArgs) {
    if let Some(IndexList(n)) = &state.n {
        loaded.config.state.n = n.clone();
    }
    if let Some(IndexList(l)) = &state.l {
        loaded.config.state.l = l.clone();
    }
}

enum Rendered {
    Csv(String),
    Json(serde_json::Value),
}

fn run(cli: Cli) -> Result<(), CliError> {
    let text = match &cli.config {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|source| CliError::ConfigFile { path: path.display().to_string(), source })?,
        None => String::new(),
    };
    let mut loaded = load_config(&text)?;
    match &cli.command {
        Command::Spectrum { state } | Command::Oracle { state } | Command::Validate { state } | Command::NuCheck { state } => {
            apply_state(&mut loaded, state)
        }
        _ => {}
    }
    let output = loaded.config.output.clone();
    let mut ctx = Context::new(loaded);
    ctx.kind = match cli.kind {
        KindArg::General => Kind::General,
        KindArg::RosenMorse => Kind::RosenMorse,
        KindArg::PoschlTeller => Kind::PoschlTeller,
        KindArg::Scarf => Kind::Scarf,
    };
    ctx.rm_convention = match cli.rm_convention {
        RmArg::Coefficient => RmConvention::Coefficient,
        RmArg::Subscript => RmConvention::Subscript,
    };
    ctx.exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    if cli.stamp {
        ctx.stamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok().map(|d| d.as_secs());
    }
    let cfg = ctx.config().clone();

    let rendered = match cli.command {
        Command::Potential { alpha, points } => {
            let alphas = if alpha.is_empty() { vec![cfg.potential.alpha] } else { alpha };
            Rendered::Csv(commands::cmd_potential(&ctx, &alphas, checked_points(points)?)?)
        }
        Command::Effective { l, points } => {
            let ls = l.map_or_else(|| vec![1, 2, 3], |IndexList(v)| v);
            Rendered::Csv(commands::cmd_effective(&ctx, &ls, checked_points(points)?)?)
        }
        Command::Spectrum { .. } => Rendered::Json(commands::cmd_spectrum(&ctx)?),
        Command::Wavefunction { n, l, branch } => {
            let n = n.or_else(|| cfg.state.n.first().copied()).unwrap_or(0);
            let l = l.or_else(|| cfg.state.l.first().copied()).unwrap_or(0);
            let branch = match branch {
                BranchArg::Plus => RootBranch::PlusRoot,
                BranchArg::Minus => RootBranch::MinusRoot,
            };
            Rendered::Csv(commands::cmd_wavefunction(&ctx, n, l, branch)?)
        }
        Command::Oracle { .. } => Rendered::Json(commands::cmd_oracle(&ctx)?),
        Command::Validate { .. } => Rendered::Json(commands::cmd_validate(&ctx)?),
        Command::NuCheck { .. } => Rendered::Json(commands::cmd_nu_check(&ctx)?),
    };

    let (body, format) = match rendered {
        Rendered::Csv(s) => (s, OutputFormat::Csv),
        Rendered::Json(v) => {
            let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
            s.push('\n');
            (s, OutputFormat::Json)
        }
    };
    if let Some(wanted) = output.format {
        if wanted != format {
            return Err(CliError::Validation {
                field: "output.format".into(),
                constraint: format!("is {wanted:?} but this command produces {format:?}"),
            });
        }
    }
    let target = cli.out.or_else(|| output.path.map(|p| p.display().to_string()));
    match target.as_deref() {
        None | Some("-") => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|source| CliError::Io { context: "writing stdout".into(), source }),
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io { context: format!("writing {path}"), source }),
    }
}

fn checked_points(points: Option<usize>) -> Result<Option<usize>, CliError> {
    match points {
        Some(p) if p < 2 => Err(CliError::Usage(format!("--points must be at least 2 (got {p})"))),
        p => Ok(p),
    }
}

fn report_error(e: &CliError) {
    let colored = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal();
    let label = if colored { "\x1b[1;31merror\x1b[0m" } else { "error" };
    eprintln!("{label}: {e}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            report_error(&e);
            e.exit_code()
        }
    };
    ExitCode::from(u8::try_from(code).unwrap_or(EXIT_INTERNAL as u8))
}
