use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kgscatter::sweep::{self, OutputFormat, Preset, SweepConfig};
use kgscatter::verify::{self, Pins};
use kgscatter::{report, wave, CliError, DEFAULT_A, DEFAULT_B, DEFAULT_M};
use kgscatter_core::PotentialParams;

#[derive(Parser)]
#[command(
    name = "kgscatter",
    version,
    about = "Klein-Gordon scattering by a tanh(bx)"
)]
struct Cli {
    /// Potential height a
    #[arg(long, global = true, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Smoothness b (inverse length)
    #[arg(long, global = true)]
    b: Option<f64>,
    /// Particle mass m
    #[arg(long, global = true)]
    m: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Amplitudes, R and T at one energy
    Coeffs {
        #[arg(long = "E", allow_negative_numbers = true)]
        energy: f64,
    },
    /// R and T over a uniform energy grid
    Sweep(SweepArgs),
    /// Compare the closed form against direct integration
    Verify(VerifyArgs),
    /// Total wavefunction and current on an x grid
    Wavefunction(WaveArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    PlotScript,
}

#[derive(Args)]
struct SweepArgs {
    /// a=5, b=2, m=1, E in [1.05, 10], 500 steps
    #[arg(long, conflicts_with = "fig3")]
    fig2: bool,
    /// a=5, b=50, m=1, E in [1.05, 10], 500 steps
    #[arg(long)]
    fig3: bool,
    #[arg(long, allow_negative_numbers = true)]
    e_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    e_max: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Blank band around each threshold
    #[arg(long, default_value_t = sweep::DEFAULT_EXCLUSION_MARGIN)]
    exclusion_margin: f64,
    /// Output file, `-` for stdout
    #[arg(long, short, default_value = "-")]
    output: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Pass threshold on |dR| and |dT|
    #[arg(long, default_value_t = verify::DEFAULT_TOL)]
    tol: f64,
    /// Integrator accuracy
    #[arg(long, default_value_t = verify::DEFAULT_ODE_TOL)]
    ode_tol: f64,
    /// Pin the energy
    #[arg(long = "E", allow_negative_numbers = true)]
    energy: Option<f64>,
    /// Check convergence to the sharp step as b grows
    #[arg(long)]
    step_limit: bool,
}

#[derive(Args)]
struct WaveArgs {
    #[arg(long = "E", allow_negative_numbers = true)]
    energy: f64,
    #[arg(long, default_value_t = -4.0, allow_negative_numbers = true)]
    xmin: f64,
    #[arg(long, default_value_t = 4.0, allow_negative_numbers = true)]
    xmax: f64,
    #[arg(long, default_value_t = 201)]
    points: usize,
    #[arg(long, short, default_value = "-")]
    output: String,
}

impl Cli {
    fn params(&self) -> Result<PotentialParams, CliError> {
        Ok(PotentialParams::new(
            self.a.unwrap_or(DEFAULT_A),
            self.b.unwrap_or(DEFAULT_B),
            self.m.unwrap_or(DEFAULT_M),
        )?)
    }
}

fn open_output(path: &str) -> Result<Box<dyn Write>, CliError> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn run_sweep(cli: &Cli, args: &SweepArgs) -> Result<(), CliError> {
    let preset = match (args.fig2, args.fig3) {
        (true, _) => Some(Preset::Fig2),
        (_, true) => Some(Preset::Fig3),
        _ => None,
    };
    let mut config = match preset {
        Some(p) => SweepConfig::preset(p, args.output.clone()),
        None => {
            let q = cli.params()?;
            SweepConfig {
                a: q.a,
                b: q.b,
                m: q.m,
                e_min: Preset::E_MIN,
                e_max: Preset::E_MAX,
                steps: Preset::STEPS,
                exclusion_margin: args.exclusion_margin,
                output_path: args.output.clone(),
                format: OutputFormat::Csv,
            }
        }
    };
    config.e_min = args.e_min.unwrap_or(config.e_min);
    config.e_max = args.e_max.unwrap_or(config.e_max);
    config.steps = args.steps.unwrap_or(config.steps);
    config.exclusion_margin = args.exclusion_margin;
    config.format = match args.format {
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::PlotScript => OutputFormat::PlotScript,
    };
    if config.format == OutputFormat::PlotScript && config.output_path == "-" {
        return Err(CliError::Usage(
            "plot-script output needs --output <file>".into(),
        ));
    }

    let rows = sweep::run_sweep(&config)?;
    sweep::write_csv(&rows, open_output(&config.output_path)?)?;
    if config.format == OutputFormat::PlotScript {
        let script_path = format!("{}.gp", config.output_path);
        std::fs::write(
            &script_path,
            sweep::plot_script(&config, &config.output_path),
        )?;
    }
    Ok(())
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<(), CliError> {
    if args.step_limit {
        let energy = args.energy.unwrap_or(8.0);
        let s = verify::step_limit(
            cli.a.unwrap_or(DEFAULT_A),
            cli.m.unwrap_or(DEFAULT_M),
            energy,
        )?;
        print!("{}", verify::step_limit_report(&s));
        return if s.passes() {
            Ok(())
        } else {
            Err(CliError::VerificationFailed {
                failed: 1,
                total: 1,
            })
        };
    }
    let pins = Pins {
        a: cli.a,
        b: cli.b,
        m: cli.m,
        energy: args.energy,
    };
    let instances = verify::random_instances(args.n, args.seed, pins)?;
    let (text, failed) = verify::verify_report(&instances, args.tol, args.ode_tol)?;
    print!("{text}");
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::VerificationFailed {
            failed,
            total: instances.len(),
        })
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Coeffs { energy } => {
            print!("{}", report::coeffs_report(&cli.params()?, *energy)?);
            Ok(())
        }
        Command::Sweep(args) => run_sweep(cli, args),
        Command::Verify(args) => run_verify(cli, args),
        Command::Wavefunction(args) => {
            let xs = wave::x_grid(args.xmin, args.xmax, args.points);
            let rows = wave::samples(&cli.params()?, args.energy, &xs)?;
            wave::write_csv(&rows, open_output(&args.output)?)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
