//! Flat `key = value` experiment configuration.
//!
//! One entry per line; `#` starts a comment; blank lines are ignored. Every
//! key is optional and falls back to its default:
//!
//! | key                        | value                                                    | default       |
//! |----------------------------|----------------------------------------------------------|---------------|
//! | `n`                        | node count                                               | `1000`        |
//! | `beta`                     | one β or a comma list (`0.9, 1.0, 2.0`)                  | `1.0`         |
//! | `rule`                     | `parity` \| `majority`                                   | `parity`      |
//! | `memory`                   | `ahistoric` \| `majority:<tau>` \| `majority:full` \| `alpha:<a>` \| `parity3` | `ahistoric` |
//! | `t_max`                    | steps including `T = 1`                                  | `100`         |
//! | `n_seeds`                  | simulations per ensemble                                 | `11`          |
//! | `init`                     | `random_half` \| `single_active:<id>` \| `explicit:<0/1 string>` | `random_half` |
//! | `damage`                   | `none` \| `node:<id>` \| `random`                         | `none`        |
//! | `master_seed`              | unsigned 64-bit integer                                  | `0`           |
//! | `share_points_across_beta` | `true` \| `false`                                        | `true`        |
//! | `asymptotic_window`        | trailing values averaged for asymptotic levels           | `10`          |
//! | `sweep`                    | `none` \| `tau:<items>` \| `alpha:<a,b,...>`              | `none`        |
//! | `dump_states`              | `true` \| `false`: also write per-node state dumps       | `false`       |
//!
//! τ sweep items are comma separated: an integer, a range `a..b` or
//! `a..b/step` (inclusive), or `full` for `τ = t_max`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::{fmt_real, IoError};
use crate::engine::Rule;
use crate::experiments::{DamageSpec, ExperimentConfig, InitSpec, SweepParameter};
use crate::memory::MemoryModel;

pub const KEYS: &[&str] = &[
    "n",
    "beta",
    "rule",
    "memory",
    "t_max",
    "n_seeds",
    "init",
    "damage",
    "master_seed",
    "share_points_across_beta",
    "asymptotic_window",
    "sweep",
    "dump_states",
];

/// Raw key/value pairs, before typing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawConfig {
    entries: BTreeMap<String, String>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        let mut raw = Self::default();
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = split_entry(line).map_err(|message| IoError::Parse { line: k + 1, message })?;
            if raw.entries.contains_key(&key) {
                return Err(IoError::Parse { line: k + 1, message: format!("duplicate key '{key}'") });
            }
            raw.entries.insert(key, value);
        }
        Ok(raw)
    }

    /// Applies a `key=value` override on top of the parsed file.
    pub fn apply_override(&mut self, entry: &str) -> Result<(), IoError> {
        let (key, value) = split_entry(entry).map_err(IoError::Config)?;
        self.entries.insert(key, value);
        Ok(())
    }

    pub fn resolve(&self) -> Result<Config, IoError> {
        Config::from_raw(self)
    }
}

fn split_entry(line: &str) -> Result<(String, String), String> {
    let (key, value) = line
        .split_once('=')
        .ok_or_else(|| format!("expected `key = value`, got '{line}'"))?;
    let key = key.trim().to_string();
    if !KEYS.contains(&key.as_str()) {
        return Err(format!("unknown key '{key}'"));
    }
    Ok((key, value.trim().to_string()))
}

/// A typed configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Template; its `beta` is the first entry of `betas`.
    pub experiment: ExperimentConfig,
    pub betas: Vec<f64>,
    pub sweep: Option<SweepParameter>,
    pub dump_states: bool,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        RawConfig::parse(text)?.resolve()
    }

    fn from_raw(raw: &RawConfig) -> Result<Self, IoError> {
        let get = |k: &str| raw.entries.get(k).map(String::as_str);
        let bad = |k: &str, v: &str| IoError::Config(format!("invalid value for '{k}': '{v}'"));
        fn num<T: std::str::FromStr>(k: &str, v: Option<&str>, default: T) -> Result<T, IoError> {
            match v {
                None => Ok(default),
                Some(s) => s.parse().map_err(|_| IoError::Config(format!("invalid value for '{k}': '{s}'"))),
            }
        }
        let boolean = |k: &str, default: bool| match get(k) {
            None => Ok(default),
            Some("true") => Ok(true),
            Some("false") => Ok(false),
            Some(v) => Err(bad(k, v)),
        };

        let d = ExperimentConfig::default();
        let n: usize = num("n", get("n"), d.n)?;
        let t_max: usize = num("t_max", get("t_max"), d.t_max)?;

        let betas = match get("beta") {
            None => vec![d.beta],
            Some(v) => v
                .split(',')
                .map(|s| s.trim().parse::<f64>().map_err(|_| bad("beta", v)))
                .collect::<Result<Vec<_>, _>>()?,
        };
        if betas.is_empty() || betas.iter().any(|b| !(*b > 0.0 && b.is_finite())) {
            return Err(bad("beta", get("beta").unwrap_or("")));
        }

        let rule = match get("rule") {
            None | Some("parity") => Rule::Parity,
            Some("majority") => Rule::MajorityNeutral,
            Some(v) => return Err(bad("rule", v)),
        };
        let memory = match get("memory") {
            None => d.memory,
            Some(v) => v.parse::<MemoryModel>().map_err(|e| IoError::Config(e.to_string()))?,
        };

        let init = match get("init") {
            None | Some("random_half") => InitSpec::RandomHalf,
            Some(v) => match v.split_once(':') {
                Some(("single_active", id)) => InitSpec::SingleActive(id.trim().parse().map_err(|_| bad("init", v))?),
                Some(("explicit", bits)) => InitSpec::Explicit(
                    bits.trim()
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(bad("init", v)),
                        })
                        .collect::<Result<_, _>>()?,
                ),
                _ => return Err(bad("init", v)),
            },
        };
        let damage = match get("damage") {
            None | Some("none") => None,
            Some("random") => Some(DamageSpec::Random),
            Some(v) => match v.split_once(':') {
                Some(("node", id)) => Some(DamageSpec::Node(id.trim().parse().map_err(|_| bad("damage", v))?)),
                _ => return Err(bad("damage", v)),
            },
        };

        let sweep = match get("sweep") {
            None | Some("none") => None,
            Some(v) => Some(parse_sweep(v, t_max).ok_or_else(|| bad("sweep", v))?),
        };

        let experiment = ExperimentConfig {
            n,
            beta: betas[0],
            rule,
            memory,
            t_max,
            n_seeds: num("n_seeds", get("n_seeds"), d.n_seeds)?,
            init,
            damage,
            master_seed: num("master_seed", get("master_seed"), d.master_seed)?,
            share_points_across_beta: boolean("share_points_across_beta", d.share_points_across_beta)?,
            asymptotic_window: num("asymptotic_window", get("asymptotic_window"), d.asymptotic_window)?,
        };
        for &beta in &betas {
            ExperimentConfig { beta, ..experiment.clone() }
                .validate()
                .map_err(|e| IoError::Config(e.to_string()))?;
        }
        Ok(Self { experiment, betas, sweep, dump_states: boolean("dump_states", false)? })
    }

    /// One `key = value` line per key, in [`KEYS`] order, fully resolved.
    pub fn canonical(&self) -> String {
        let e = &self.experiment;
        let mut s = String::new();
        let betas: Vec<String> = self.betas.iter().map(|&b| fmt_real(b)).collect();
        let init = match &e.init {
            InitSpec::RandomHalf => "random_half".to_string(),
            InitSpec::SingleActive(id) => format!("single_active:{id}"),
            InitSpec::Explicit(v) => format!("explicit:{}", v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>()),
        };
        let damage = match e.damage {
            None => "none".to_string(),
            Some(DamageSpec::Random) => "random".to_string(),
            Some(DamageSpec::Node(id)) => format!("node:{id}"),
        };
        let memory = match e.memory {
            MemoryModel::Alpha(a) => format!("alpha:{}", fmt_real(a)),
            m => m.to_string(),
        };
        let sweep = match &self.sweep {
            None => "none".to_string(),
            Some(SweepParameter::Tau(v)) => {
                format!("tau:{}", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            }
            Some(SweepParameter::Alpha(v)) => {
                format!("alpha:{}", v.iter().map(|&a| fmt_real(a)).collect::<Vec<_>>().join(","))
            }
        };
        let fields: [(&str, String); 13] = [
            ("n", e.n.to_string()),
            ("beta", betas.join(",")),
            ("rule", e.rule.to_string()),
            ("memory", memory),
            ("t_max", e.t_max.to_string()),
            ("n_seeds", e.n_seeds.to_string()),
            ("init", init),
            ("damage", damage),
            ("master_seed", e.master_seed.to_string()),
            ("share_points_across_beta", e.share_points_across_beta.to_string()),
            ("asymptotic_window", e.asymptotic_window.to_string()),
            ("sweep", sweep),
            ("dump_states", self.dump_states.to_string()),
        ];
        for (k, v) in fields {
            let _ = writeln!(s, "{k} = {v}");
        }
        s
    }

    /// SHA-256 of [`Config::canonical`], hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical().as_bytes()))
    }

    /// The experiment at one of the configured β values.
    pub fn at_beta(&self, beta: f64) -> ExperimentConfig {
        ExperimentConfig { beta, ..self.experiment.clone() }
    }
}

fn parse_sweep(v: &str, t_max: usize) -> Option<SweepParameter> {
    let (kind, items) = v.split_once(':')?;
    let items: Vec<&str> = items.split(',').map(str::trim).collect();
    match kind.trim() {
        "tau" => {
            let mut taus = Vec::new();
            for item in items {
                if item == "full" {
                    taus.push(u32::try_from(t_max).ok()?);
                } else if let Some((a, rest)) = item.split_once("..") {
                    let (b, step) = match rest.split_once('/') {
                        Some((b, s)) => (b, s.trim().parse::<u32>().ok()?),
                        None => (rest, 1),
                    };
                    let (a, b): (u32, u32) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
                    if step == 0 || a > b {
                        return None;
                    }
                    taus.extend((a..=b).step_by(step as usize));
                } else {
                    taus.push(item.parse().ok()?);
                }
            }
            (!taus.is_empty() && taus.iter().all(|&t| t >= 1)).then_some(SweepParameter::Tau(taus))
        }
        "alpha" => {
            let alphas: Vec<f64> = items.iter().map(|s| s.parse().ok()).collect::<Option<_>>()?;
            alphas.iter().all(|a| (0.0..=1.0).contains(a)).then_some(SweepParameter::Alpha(alphas))
        }
        _ => None,
    }
}
