//! `pontryagin`: batch jobs over the core library, one JSON report per run.

mod commands;
mod error;
mod input;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::commands::BundleInputs;
use crate::error::{CliError, CliResult};
use crate::input::{BundleFile, CocycleSpec, InputLog};
use crate::report::{JobConfig, Report};

#[derive(Parser)]
#[command(name = "pontryagin", version, about = "Finite Pontrjagin duality workbench")]
struct Cli {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fourier transform, inverse and optional convolution of a vector over G.
    Fourier {
        #[arg(long, value_delimiter = ',', required = true)]
        group: Vec<u64>,
        /// JSON array of `[re, im]` pairs (or reals) in enumeration order.
        #[arg(long)]
        input: PathBuf,
        /// Second vector; adds the convolution and the convolution theorem check.
        #[arg(long)]
        kernel: Option<PathBuf>,
    },
    /// Cohomology of a complex with coefficients in G.
    Cohomology {
        #[arg(long)]
        complex: String,
        #[arg(long, value_delimiter = ',', required = true)]
        group: Vec<u64>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// The cup cocycle `g ∪ χ̂` and its class in H²(B; μ_N).
    Cup(BundleArgs),
    /// Triples over a pair of bundles.
    #[command(subcommand)]
    Triple(TripleCommand),
    /// Randomized check of the Fourier transform of a triple.
    Verify {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        /// Draw the triple at random from the seed.
        #[arg(long)]
        random: bool,
    },
}

#[derive(Subcommand)]
enum TripleCommand {
    /// Decide existence; report the obstruction class when there is none.
    Check(BundleArgs),
    /// List the isomorphism classes of triples over (E, Ê).
    Enumerate(BundleArgs),
    /// Classify full extensions of the pairs of a triple.
    Classify(BundleArgs),
    /// Find the duals Ê over which a given pair extends.
    Extend(BundleArgs),
}

#[derive(Args, Clone)]
struct BundleArgs {
    /// Built-in name (point, circle, torus, rp2, sphere) or a JSON file.
    #[arg(long)]
    complex: String,
    #[arg(long, value_delimiter = ',', required = true)]
    group: Vec<u64>,
    /// Order of the phase group μ_N; defaults to the exponent of G.
    #[arg(long)]
    order_n: Option<u64>,
    /// JSON with any of `g`, `chi_hat` (`{"class": [...]}` or `{"values": [[...], ...]}`), `s`, `zeta`.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Class of E in H¹(B; G), as coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    g_class: Option<Vec<i64>>,
    /// Class of Ê in H¹(B; Ĝ), as coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    chi_class: Option<Vec<i64>>,
}

fn config_for(command: &str, b: &BundleArgs) -> JobConfig {
    let mut extra = Vec::new();
    if let Some(c) = &b.g_class {
        extra.push(("g_class".into(), format!("{c:?}")));
    }
    if let Some(c) = &b.chi_class {
        extra.push(("chi_class".into(), format!("{c:?}")));
    }
    JobConfig {
        command: command.into(),
        inputs: b.data.iter().map(|p| p.display().to_string()).collect(),
        complex: Some(b.complex.clone()),
        group: Some(b.group.clone()),
        order_n: b.order_n,
        extra,
        ..JobConfig::default()
    }
}

fn bundle_inputs(b: &BundleArgs, config: &mut JobConfig, log: &mut InputLog) -> CliResult<BundleInputs> {
    let base = input::load_complex(&b.complex, log)?;
    let group = input::group(&b.group)?;
    let order_n = b.order_n.unwrap_or_else(|| group.exponent());
    if order_n == 0 || order_n % group.exponent() != 0 {
        return Err(CliError::Validation(format!(
            "order N = {order_n} is not a multiple of the exponent {} of G",
            group.exponent()
        )));
    }
    config.order_n = Some(order_n);
    let file: BundleFile = match &b.data {
        Some(p) => log.read_json(p)?,
        None => BundleFile::default(),
    };
    let g_spec = file.g.clone().or_else(|| b.g_class.clone().map(|class| CocycleSpec::Class { class }));
    let chi_spec = file.chi_hat.clone().or_else(|| b.chi_class.clone().map(|class| CocycleSpec::Class { class }));
    let g = input::cocycle(&base, &group, g_spec.as_ref())?;
    let chi_hat = input::cocycle(&base, &group.dual(), chi_spec.as_ref())?;
    Ok(BundleInputs { base, group, order_n, g, chi_hat, file })
}

fn run(cli: Cli) -> CliResult<String> {
    let mut log = InputLog::default();
    let (config, result): (JobConfig, Value) = match cli.command {
        Command::Fourier { group, input, kernel } => {
            let mut config = JobConfig {
                command: "fourier".into(),
                inputs: std::iter::once(&input).chain(kernel.as_ref()).map(|p| p.display().to_string()).collect(),
                group: Some(group.clone()),
                ..JobConfig::default()
            };
            let g = input::group(&group)?;
            config.order_n = Some(g.exponent());
            let r = commands::fourier(&g, &input, kernel.as_deref(), &mut log)?;
            (config, r)
        }
        Command::Cohomology { complex, group, degree } => {
            let config = JobConfig {
                command: "cohomology".into(),
                complex: Some(complex.clone()),
                group: Some(group.clone()),
                extra: vec![("degree".into(), degree.to_string())],
                ..JobConfig::default()
            };
            let x = input::load_complex(&complex, &mut log)?;
            let r = commands::cohomology_report(&x, &input::group(&group)?, degree)?;
            (config, r)
        }
        Command::Cup(b) => {
            let mut config = config_for("cup", &b);
            let inputs = bundle_inputs(&b, &mut config, &mut log)?;
            (config, commands::cup(&inputs)?)
        }
        Command::Triple(t) => {
            let (name, b) = match &t {
                TripleCommand::Check(b) => ("triple check", b),
                TripleCommand::Enumerate(b) => ("triple enumerate", b),
                TripleCommand::Classify(b) => ("triple classify", b),
                TripleCommand::Extend(b) => ("triple extend", b),
            };
            let mut config = config_for(name, b);
            let inputs = bundle_inputs(b, &mut config, &mut log)?;
            let r = match t {
                TripleCommand::Check(_) => commands::check(&inputs)?,
                TripleCommand::Enumerate(_) => commands::enumerate(&inputs)?,
                TripleCommand::Classify(_) => commands::classify(&inputs)?,
                TripleCommand::Extend(_) => commands::extend(&inputs)?,
            };
            (config, r)
        }
        Command::Verify { bundle, seed, trials, random } => {
            let (Some(seed), Some(trials)) = (seed, trials) else {
                return Err(CliError::Validation("verify is randomized: pass both --seed and --trials".into()));
            };
            let mut config = config_for("verify", &bundle);
            config.seed = Some(seed);
            config.trials = Some(trials);
            if random {
                config.extra.push(("random".into(), "true".into()));
            }
            let inputs = bundle_inputs(&bundle, &mut config, &mut log)?;
            (config, commands::verify(&inputs, seed, trials, random)?)
        }
    };
    Ok(Report::new(&config, &log, result).to_pretty())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = cli.out.clone();
    let outcome = run(cli).and_then(|text| match &out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
