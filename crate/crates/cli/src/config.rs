//! Run configuration: a key=value file overlaid by command-line flags.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use ucr_core::system::{lookup, registry, SystemEntry, SystemParams};
use ucr_core::trajectory::SampleRule;
use ucr_core::{PotentialModel, QuadratureSpec};

use crate::args::{Format, Rule, RunArgs};
use crate::error::{CliError, CliResult};

pub const DEFAULT_COMPARE_TOL: f64 = 1e-6;
pub const DEFAULT_VERIFY_TOL: f64 = 1e-4;
pub const DEFAULT_POINTS: usize = 201;
pub const DEFAULT_SAMPLES: usize = 1_000_000;
pub const DEFAULT_COUNT: u32 = 5;

/// Keys that may appear in a config file besides physical parameters.
const FILE_KEYS: &[&str] = &[
    "system", "n", "points", "samples", "tol", "quad_tol", "quad-tol", "format", "out", "oracle", "count", "rule",
    "seed",
];

/// Parses a config file. Blank lines and `#` comments are ignored; physical
/// parameters (`mass`, `omega`, `width`, `gravity`, `hbar`) are collected as
/// `--param` entries.
pub fn parse_config(text: &str, origin: &Path) -> CliResult<RunArgs> {
    let mut args = RunArgs::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::usage(format!("{}:{}: expected key=value, got '{line}'", origin.display(), i + 1))
        })?;
        let (key, value) = (key.trim(), value.trim());
        let at = |e: String| CliError::usage(format!("{}:{}: {e}", origin.display(), i + 1));
        match key {
            "system" => args.system = Some(value.to_string()),
            "n" => args.n = Some(value.to_string()),
            "points" => args.points = Some(parse_value(key, value).map_err(at)?),
            "samples" => args.samples = Some(parse_value(key, value).map_err(at)?),
            "tol" => args.tol = Some(parse_value(key, value).map_err(at)?),
            "quad_tol" | "quad-tol" => args.quad_tol = Some(parse_value(key, value).map_err(at)?),
            "format" => {
                args.format = Some(match value {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    other => return Err(at(format!("format must be csv or json, got '{other}'"))),
                })
            }
            "out" => args.out = Some(PathBuf::from(value)),
            "oracle" => args.oracle = Some(value.to_string()),
            "count" => args.count = Some(parse_value(key, value).map_err(at)?),
            "rule" => {
                args.rule = Some(match value {
                    "midpoint" => Rule::Midpoint,
                    "uniform" => Rule::Uniform,
                    "random" => Rule::Random,
                    other => return Err(at(format!("unknown rule '{other}'"))),
                })
            }
            "seed" => args.seed = Some(parse_value(key, value).map_err(at)?),
            _ if is_parameter_name(key) => args.params.push(format!("{key}={value}")),
            _ => {
                return Err(at(format!(
                    "unknown key '{key}' (expected one of {} or a system parameter)",
                    FILE_KEYS.join(", ")
                )))
            }
        }
    }
    Ok(args)
}

fn is_parameter_name(key: &str) -> bool {
    key == "hbar" || registry().iter().any(|e| e.parameters.contains(&key))
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
    value.parse().map_err(|_| format!("invalid value '{value}' for {key}"))
}

/// Flags override the file field by field; parameters from both are kept,
/// flags last so they win.
pub fn merge(flags: RunArgs, file: RunArgs) -> RunArgs {
    let mut params = file.params;
    params.extend(flags.params);
    RunArgs {
        system: flags.system.or(file.system),
        n: flags.n.or(file.n),
        points: flags.points.or(file.points),
        samples: flags.samples.or(file.samples),
        tol: flags.tol.or(file.tol),
        quad_tol: flags.quad_tol.or(file.quad_tol),
        format: flags.format.or(file.format),
        out: flags.out.or(file.out),
        config: flags.config.or(file.config),
        oracle: flags.oracle.or(file.oracle),
        count: flags.count.or(file.count),
        rule: flags.rule.or(file.rule),
        seed: flags.seed.or(file.seed),
        params,
    }
}

/// Reads the config file named by `--config`, else by `UCR_CONFIG`, and
/// merges the flags over it.
pub fn load(flags: RunArgs, env_config: Option<PathBuf>) -> CliResult<RunArgs> {
    let path = flags.config.clone().or(env_config);
    match path {
        None => Ok(flags),
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
            Ok(merge(flags, parse_config(&text, &path)?))
        }
    }
}

/// Parses `0,1,5`, `1..5` (inclusive) or a mix. The result keeps the given
/// order and drops repeats.
pub fn parse_levels(spec: &str) -> CliResult<Vec<u32>> {
    let mut out: Vec<u32> = Vec::new();
    let bad = |part: &str| CliError::usage(format!("invalid level '{part}' in --n '{spec}'"));
    for part in spec.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(bad(part));
        }
        let (lo, hi) = match part.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let lo: u32 = a.trim().parse().map_err(|_| bad(part))?;
                let hi: u32 = b.trim().parse().map_err(|_| bad(part))?;
                if hi < lo {
                    return Err(CliError::usage(format!("empty range '{part}'")));
                }
                (lo, hi)
            }
            None => {
                let v: u32 = part.parse().map_err(|_| bad(part))?;
                (v, v)
            }
        };
        if hi - lo > 100_000 {
            return Err(CliError::usage(format!("range '{part}' is too long")));
        }
        for n in lo..=hi {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub entry: &'static SystemEntry,
    pub model: PotentialModel,
    pub levels: Vec<u32>,
    pub points: usize,
    pub samples: usize,
    pub tol: f64,
    pub quad: QuadratureSpec,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub count: u32,
    pub rule: SampleRule,
}

impl RunConfig {
    /// Applies defaults and validates. `default_tol` depends on the command.
    pub fn resolve(args: &RunArgs, default_tol: f64, need_system: bool) -> CliResult<Self> {
        let entry = match args.system.as_deref() {
            Some(name) => lookup(name).ok_or_else(|| {
                let names: Vec<&str> = registry().iter().map(|e| e.name).collect();
                CliError::usage(format!("unknown system '{name}' (known: {})", names.join(", ")))
            })?,
            None if need_system => return Err(CliError::usage("--system is required")),
            None => &registry()[0],
        };

        let mut params = SystemParams::new();
        for p in &args.params {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("--param expects KEY=VALUE, got '{p}'")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("invalid number in --param '{p}'")))?;
            params = params.set(k.trim(), v);
        }
        let model = entry.build(&params).map_err(|e| CliError::usage(e.to_string()))?;

        let lowest = model.system().lowest_level();
        let levels = match args.n.as_deref() {
            Some(s) => parse_levels(s)?,
            None => vec![lowest],
        };
        if let Some(bad) = levels.iter().find(|&&n| n < lowest) {
            return Err(CliError::usage(format!(
                "n = {bad} is not a level of '{}' (levels start at {lowest})",
                entry.name
            )));
        }

        let tol = args.tol.unwrap_or(default_tol);
        if !(tol.is_finite() && tol > 0.0) {
            return Err(CliError::usage(format!("--tol must be positive, got {tol}")));
        }
        let quad = match args.quad_tol {
            None => QuadratureSpec::default(),
            Some(q) => QuadratureSpec::default().with_tolerances(q, q),
        };
        quad.validate().map_err(|e| CliError::usage(e.to_string()))?;

        let points = args.points.unwrap_or(DEFAULT_POINTS);
        if points < 2 {
            return Err(CliError::usage(format!("--points must be at least 2, got {points}")));
        }
        let samples = args.samples.unwrap_or(DEFAULT_SAMPLES);
        if samples < 2 {
            return Err(CliError::usage(format!("--samples must be at least 2, got {samples}")));
        }
        let count = args.count.unwrap_or(DEFAULT_COUNT);
        if count < 1 {
            return Err(CliError::usage("--count must be at least 1"));
        }
        if let Some(o) = args.oracle.as_deref() {
            if o != "trajectory" {
                return Err(CliError::usage(format!("unknown oracle '{o}' (only 'trajectory')")));
            }
        }
        let rule = match args.rule.unwrap_or(Rule::Midpoint) {
            Rule::Midpoint => SampleRule::Midpoint,
            Rule::Uniform => SampleRule::UniformTime,
            Rule::Random => SampleRule::Random {
                seed: args.seed.unwrap_or(0),
            },
        };

        Ok(RunConfig {
            entry,
            model,
            levels,
            points,
            samples,
            tol,
            quad,
            format: args.format.unwrap_or(Format::Csv),
            out: args.out.clone(),
            count,
            rule,
        })
    }
}
