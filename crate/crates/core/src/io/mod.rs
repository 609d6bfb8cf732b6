//! File formats: graph text files, configuration, CSV outputs and the
//! output manifest.

pub mod config;
pub mod graph_text;

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::engine::Trajectory;
use crate::experiments::{ExperimentResult, SweepTable};
use crate::geometry::GeometryError;
use crate::metrics::{self, ObservableSeries};

pub use config::{Config, RawConfig};
pub use graph_text::{read_graph, write_graph, GraphFile};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Reals in every output file: 17 significant digits, scientific notation.
pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

fn hash_line<W: Write>(w: &mut W, config_hash: &str) -> std::io::Result<()> {
    writeln!(w, "# config_hash={config_hash}")
}

/// `T,density,changing_rate`, one row per step; the changing rate of `T = 1`
/// is left empty.
pub fn write_trajectory_csv<W: Write>(mut w: W, config_hash: &str, tr: &Trajectory) -> std::io::Result<()> {
    hash_line(&mut w, config_hash)?;
    writeln!(w, "T,density,changing_rate")?;
    let density = metrics::density_series(tr);
    let rate = metrics::changing_rate(tr).ok();
    for (t, d) in density.steps() {
        let cr = rate.as_ref().and_then(|s| s.at(t)).map(fmt_real).unwrap_or_default();
        writeln!(w, "{t},{},{cr}", fmt_real(d))?;
    }
    w.flush()
}

/// Long-format dump: `T,node_id,sigma,trait`.
pub fn write_states_csv<W: Write>(mut w: W, config_hash: &str, tr: &Trajectory) -> std::io::Result<()> {
    hash_line(&mut w, config_hash)?;
    writeln!(w, "T,node_id,sigma,trait")?;
    for (k, (states, traits)) in tr.states.iter().zip(&tr.traits).enumerate() {
        for (i, (&s, &t)) in states.iter().zip(traits).enumerate() {
            writeln!(w, "{},{i},{},{}", k + 1, s as u8, t as u8)?;
        }
    }
    w.flush()
}

/// `T,value` for one observable.
pub fn write_series_csv<W: Write>(mut w: W, config_hash: &str, series: &ObservableSeries) -> std::io::Result<()> {
    hash_line(&mut w, config_hash)?;
    writeln!(w, "T,value")?;
    for (t, v) in series.steps() {
        writeln!(w, "{t},{}", fmt_real(v))?;
    }
    w.flush()
}

/// `seed,beta,memory,observable,asymptotic_value` for every simulation of
/// every result.
pub fn write_summary_csv<W: Write>(mut w: W, config_hash: &str, results: &[&ExperimentResult]) -> std::io::Result<()> {
    hash_line(&mut w, config_hash)?;
    writeln!(w, "seed,beta,memory,observable,asymptotic_value")?;
    for res in results {
        let beta = fmt_real(res.config.beta);
        let mem = res.config.memory;
        for run in &res.runs {
            let a = &run.asymptotic;
            let rows = [
                ("density", Some(a.density)),
                ("changing_rate", Some(a.changing_rate)),
                ("damage", a.damage),
                ("cross_distance", a.cross_distance),
                ("mean_degree", Some(run.degrees.mean)),
            ];
            for (name, v) in rows {
                if let Some(v) = v {
                    writeln!(w, "{},{beta},{mem},{name},{}", run.seed, fmt_real(v))?;
                }
            }
        }
    }
    w.flush()
}

/// One row per `(β, parameter value)`, asymptotic levels averaged over seeds.
pub fn write_sweep_csv<W: Write>(mut w: W, config_hash: &str, table: &SweepTable) -> std::io::Result<()> {
    hash_line(&mut w, config_hash)?;
    writeln!(w, "beta,{},memory,asymptotic_changing_rate,asymptotic_damage", table.parameter)?;
    for r in &table.rows {
        writeln!(
            w,
            "{},{},{},{},{}",
            fmt_real(r.beta),
            fmt_real(r.value),
            r.memory,
            fmt_real(r.asymptotic_changing_rate),
            fmt_real(r.asymptotic_damage)
        )?;
    }
    w.flush()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ManifestEntry {
    pub path: String,
    pub config_hash: String,
}

/// Writes files into one directory and records them in `manifest.json`.
#[derive(Debug)]
pub struct OutputDir {
    root: PathBuf,
    config_hash: String,
    entries: Vec<ManifestEntry>,
}

impl OutputDir {
    pub fn create(root: impl Into<PathBuf>, config_hash: impl Into<String>) -> Result<Self, IoError> {
        let root = root.into();
        fs::create_dir_all(&root).map_err(|source| IoError::File { path: root.clone(), source })?;
        Ok(Self { root, config_hash: config_hash.into(), entries: Vec::new() })
    }

    pub fn config_hash(&self) -> &str {
        &self.config_hash
    }

    pub fn path(&self) -> &Path {
        &self.root
    }

    /// Creates `name` (relative to the root) and passes a buffered writer to `fill`.
    pub fn write(
        &mut self,
        name: &str,
        fill: impl FnOnce(&mut BufWriter<File>, &str) -> std::io::Result<()>,
    ) -> Result<PathBuf, IoError> {
        let path = self.root.join(name);
        let wrap = |source| IoError::File { path: path.clone(), source };
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(wrap)?;
        }
        let mut w = BufWriter::new(File::create(&path).map_err(wrap)?);
        fill(&mut w, &self.config_hash).map_err(wrap)?;
        w.flush().map_err(wrap)?;
        self.entries.push(ManifestEntry { path: name.to_string(), config_hash: self.config_hash.clone() });
        Ok(path)
    }

    pub fn entries(&self) -> &[ManifestEntry] {
        &self.entries
    }

    /// Writes `manifest.json` and returns the list of emitted files.
    pub fn finish(self) -> Result<Vec<ManifestEntry>, IoError> {
        #[derive(Serialize)]
        struct Manifest<'a> {
            config_hash: &'a str,
            files: &'a [ManifestEntry],
        }
        let path = self.root.join("manifest.json");
        let body = serde_json::to_string_pretty(&Manifest { config_hash: &self.config_hash, files: &self.entries })
            .expect("manifest serialises");
        fs::write(&path, body + "\n").map_err(|source| IoError::File { path, source })?;
        Ok(self.entries)
    }
}
