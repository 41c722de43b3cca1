use std::path::PathBuf;
use std::process::ExitCode;

use chronoline_cli::{
    cmd_sample, cmd_spectrum, cmd_verify, init_threads, load_spectrum, CliError, Format, Settings, Suite, EXIT_FAILURE, EXIT_OK,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "chronoline", version, about = "Timeline waves, time-operator kernels and their verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a timeline wave on a uniform grid.
    Sample(SampleArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Revival analysis of a spectrum file.
    Spectrum(SpectrumArgs),
}

#[derive(Args)]
struct SampleArgs {
    /// freefall, free1d_right, free1d_left, free1d_even, free1d_odd, free3d_radial, free3d_universal
    #[arg(long)]
    system: Option<String>,
    /// System time, or a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    grid_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    grid_max: Option<f64>,
    #[arg(long)]
    grid_count: Option<usize>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    force: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
    /// key=value configuration file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Orbital number for free3d_radial.
    #[arg(long)]
    l: Option<u32>,
    /// Evaluate free3d_universal as a partial-wave sum up to this order.
    #[arg(long)]
    l_max: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// symmetries, closure, kernels, commutators or all.
    #[arg(default_value = "all")]
    suite: String,
    /// Replace every per-check tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Report file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    /// JSON file with `levels` and optional `labels`.
    input: PathBuf,
    #[arg(long, default_value_t = 1000)]
    max_denominator: u64,
    /// Largest accepted phase residual at the revival time.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

fn flag_settings(a: &SampleArgs) -> Settings {
    let mut s = Settings::default();
    let pairs: [(&str, Option<String>); 11] = [
        ("system", a.system.clone()),
        ("tau", a.tau.clone()),
        ("grid-min", a.grid_min.map(|v| v.to_string())),
        ("grid-max", a.grid_max.map(|v| v.to_string())),
        ("grid-count", a.grid_count.map(|v| v.to_string())),
        ("mass", a.mass.map(|v| v.to_string())),
        ("force", a.force.map(|v| v.to_string())),
        ("tol", a.tol.map(|v| v.to_string())),
        ("out", a.out.as_ref().map(|p| p.display().to_string())),
        ("format", a.format.clone()),
        ("l", a.l.map(|v| v.to_string())),
    ];
    for (k, v) in pairs {
        if let Some(v) = v {
            s.set(k, v);
        }
    }
    if let Some(v) = a.l_max {
        s.set("l-max", v);
    }
    s
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    init_threads()?;
    match cli.command {
        Command::Sample(args) => {
            let base = match &args.config {
                Some(p) => Settings::load(p)?,
                None => Settings::default(),
            };
            let config = base.overlay(flag_settings(&args)).run_config()?;
            let text = cmd_sample(&config)?;
            emit(&text, config.output_path.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let suite = Suite::parse(&args.suite)?;
            if let Some(t) = args.tol {
                if t.is_nan() || t <= 0.0 {
                    return Err(CliError::Usage(format!("tolerance must be positive, got {t}")));
                }
            }
            let checks = cmd_verify(suite, args.tol)?;
            let mut text = serde_json::to_string_pretty(&checks).expect("report serializes");
            text.push('\n');
            emit(&text, args.out.as_ref())?;
            match checks.iter().find(|c| !c.pass) {
                Some(first) => {
                    eprintln!("verification failed: {} (residual {:e})", first.check, first.residual);
                    Ok(EXIT_FAILURE)
                }
                None => Ok(EXIT_OK),
            }
        }
        Command::Spectrum(args) => {
            let format = match args.format.as_str() {
                "text" => None,
                other => Some(Format::parse(other)?),
            };
            let report = cmd_spectrum(load_spectrum(&args.input)?, args.max_denominator, args.tol)?;
            match format {
                Some(Format::Json) => println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("report serializes")),
                Some(Format::Csv) => return Err(CliError::Usage("spectrum reports are text or json".into())),
                None => print!("{}", report.to_text()),
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
