//! Command-line front end. The binary is a thin wrapper around [`main_with_args`].

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::engine::run;
use crate::experiments::{self, run_ensemble, sweep_betas, DamageSpec, ExperimentConfig, ExperimentError};
use crate::geometry::{build_beta_skeleton, generate_points, GeometryError, SkeletonConfig};
use crate::io::{self, Config, IoError, OutputDir, RawConfig};
use crate::memory::MemoryModel;
use crate::metrics;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "beta-automata", about = "Automata with memory on beta-skeleton graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate points and write their beta-skeleton as a graph text file.
    BuildGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the first simulation of the configured ensemble and write its trajectory.
    Run(ConfigArgs),
    /// Run a reference/perturbed pair and write the damage series.
    Damage(ConfigArgs),
    /// Run the whole ensemble: per-seed series plus a summary.
    Ensemble(ConfigArgs),
    /// Sweep τ or α values and write asymptotic levels per (β, value).
    Sweep(ConfigArgs),
    /// Check a configuration and print its canonical form.
    Validate(ConfigArgs),
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// `key=value`, applied after the file; repeatable.
    #[arg(long = "override", value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
    #[arg(long, default_value = "out")]
    pub out_dir: PathBuf,
    /// Also write long-format per-node state dumps.
    #[arg(long)]
    pub states: bool,
}

impl ConfigArgs {
    fn load(&self) -> Result<Config, CliError> {
        let text = fs::read_to_string(&self.config)
            .map_err(|source| IoError::File { path: self.config.clone(), source })?;
        let mut raw = RawConfig::parse(&text)?;
        for o in &self.overrides {
            raw.apply_override(o)?;
        }
        let mut cfg = raw.resolve()?;
        cfg.dump_states |= self.states;
        Ok(cfg)
    }
}

fn beta_dir(beta: f64) -> String {
    format!("beta_{beta}")
}

/// Executes a parsed command line and returns the files it wrote.
pub fn execute(cli: Cli) -> Result<Vec<PathBuf>, CliError> {
    match cli.command {
        Command::BuildGraph { n, beta, seed, out } => {
            let points = generate_points(n, seed)?;
            let graph = build_beta_skeleton(&points, SkeletonConfig::new(beta)?);
            if let Some(parent) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|source| IoError::File { path: parent.into(), source })?;
            }
            let file = fs::File::create(&out).map_err(|source| IoError::File { path: out.clone(), source })?;
            io::write_graph(std::io::BufWriter::new(file), &points, beta, &graph)
                .map_err(|source| IoError::File { path: out.clone(), source })?;
            Ok(vec![out])
        }
        Command::Run(args) => {
            let cfg = args.load()?;
            let mut out = OutputDir::create(&args.out_dir, cfg.hash())?;
            for &beta in &cfg.betas {
                let exp = cfg.at_beta(beta);
                exp.validate()?;
                let real = experiments::realize(&exp, 0)?;
                let tr = experiments::historic_run(&exp, &real)?;
                let dir = beta_dir(beta);
                out.write(&format!("{dir}/graph.txt"), |w, _| io::write_graph(w, &real.points, beta, &real.graph))?;
                out.write(&format!("{dir}/trajectory.csv"), |w, h| io::write_trajectory_csv(w, h, &tr))?;
                if cfg.dump_states {
                    out.write(&format!("{dir}/states.csv"), |w, h| io::write_states_csv(w, h, &tr))?;
                }
            }
            finish(out)
        }
        Command::Damage(args) => {
            let cfg = args.load()?;
            let mut out = OutputDir::create(&args.out_dir, cfg.hash())?;
            for &beta in &cfg.betas {
                let exp = ExperimentConfig {
                    damage: Some(cfg.experiment.damage.unwrap_or(DamageSpec::Node(0))),
                    ..cfg.at_beta(beta)
                };
                exp.validate()?;
                let real = experiments::realize(&exp, 0)?;
                let reference = experiments::historic_run(&exp, &real)?;
                let perturbed_init = real.perturbed_initial().expect("damage configured");
                let perturbed = run(&real.graph, &perturbed_init, &exp.rule, exp.memory, exp.t_max)
                    .map_err(ExperimentError::from)?;
                let damage = metrics::damage_series(&reference, &perturbed).map_err(ExperimentError::from)?;
                let dir = beta_dir(beta);
                out.write(&format!("{dir}/damage.csv"), |w, h| io::write_series_csv(w, h, &damage))?;
                if !exp.memory.is_ahistoric() {
                    let twin = run(&real.graph, &real.initial, &exp.rule, MemoryModel::Ahistoric, exp.t_max)
                        .map_err(ExperimentError::from)?;
                    let cross = metrics::cross_distance(&reference, &twin).map_err(ExperimentError::from)?;
                    out.write(&format!("{dir}/cross_distance.csv"), |w, h| io::write_series_csv(w, h, &cross))?;
                }
                if cfg.dump_states {
                    out.write(&format!("{dir}/reference_states.csv"), |w, h| io::write_states_csv(w, h, &reference))?;
                    out.write(&format!("{dir}/perturbed_states.csv"), |w, h| io::write_states_csv(w, h, &perturbed))?;
                }
            }
            finish(out)
        }
        Command::Ensemble(args) => {
            let cfg = args.load()?;
            let mut out = OutputDir::create(&args.out_dir, cfg.hash())?;
            let results = cfg
                .betas
                .iter()
                .map(|&b| run_ensemble(&cfg.at_beta(b)))
                .collect::<Result<Vec<_>, _>>()?;
            for res in &results {
                let dir = beta_dir(res.config.beta);
                for r in &res.runs {
                    let sd = format!("{dir}/sim_{:02}", r.index);
                    out.write(&format!("{sd}/density.csv"), |w, h| io::write_series_csv(w, h, &r.density))?;
                    out.write(&format!("{sd}/changing_rate.csv"), |w, h| io::write_series_csv(w, h, &r.changing_rate))?;
                    if let Some(d) = &r.damage {
                        out.write(&format!("{sd}/damage.csv"), |w, h| io::write_series_csv(w, h, d))?;
                    }
                    if let Some(c) = &r.cross_distance {
                        out.write(&format!("{sd}/cross_distance.csv"), |w, h| io::write_series_csv(w, h, c))?;
                    }
                }
            }
            let refs: Vec<_> = results.iter().collect();
            out.write("summary.csv", |w, h| io::write_summary_csv(w, h, &refs))?;
            finish(out)
        }
        Command::Sweep(args) => {
            let cfg = args.load()?;
            let param = cfg
                .sweep
                .clone()
                .ok_or_else(|| CliError::Usage("sweep needs a `sweep = tau:... | alpha:...` entry".into()))?;
            let table = sweep_betas(&cfg.experiment, &cfg.betas, &param)?;
            let mut out = OutputDir::create(&args.out_dir, cfg.hash())?;
            out.write("sweep.csv", |w, h| io::write_sweep_csv(w, h, &table))?;
            finish(out)
        }
        Command::Validate(args) => {
            let cfg = args.load()?;
            print!("{}", cfg.canonical());
            println!("# config_hash={}", cfg.hash());
            Ok(Vec::new())
        }
    }
}

fn finish(out: OutputDir) -> Result<Vec<PathBuf>, CliError> {
    let root = out.path().to_path_buf();
    let entries = out.finish()?;
    Ok(entries.into_iter().map(|e| root.join(e.path)).collect())
}

/// Parses arguments, runs, prints a diagnostic on failure.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(files) => {
            for f in files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
