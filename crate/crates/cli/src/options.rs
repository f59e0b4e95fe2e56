//! Flag value types and weight/threshold resolution.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context};
use clap::ValueEnum;

use aindex_core::metrics::MetricInputs;
use aindex_core::Weights;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// Six comma-separated counts: `n1,n2,n3,n4,n5,n6`.
#[derive(Debug, Clone, Copy)]
pub struct BaseInputs(pub MetricInputs);

impl FromStr for BaseInputs {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = parse_list::<u64>(s, 6, "counts")?;
        Ok(BaseInputs(MetricInputs::new(
            values[0], values[1], values[2], values[3], values[4], values[5],
        )))
    }
}

/// Six comma-separated weights: `w1,w2,w3,w4,w5,w6`.
#[derive(Debug, Clone, Copy)]
pub struct WeightList(pub [f64; 6]);

impl FromStr for WeightList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = parse_list::<f64>(s, 6, "weights")?;
        Ok(WeightList(values.try_into().expect("length checked")))
    }
}

/// Four comma-separated thresholds/scales: `t2,s2,t5,s5`.
#[derive(Debug, Clone, Copy)]
pub struct ThresholdList(pub [f64; 4]);

impl FromStr for ThresholdList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = parse_list::<f64>(s, 4, "thresholds")?;
        Ok(ThresholdList(values.try_into().expect("length checked")))
    }
}

/// One or more comma-separated sweep values.
#[derive(Debug, Clone)]
pub struct ValueList(pub Vec<u64>);

impl FromStr for ValueList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values: Vec<u64> = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("invalid count {:?} in {s:?}", part.trim()))
            })
            .collect::<Result<_, _>>()?;
        if values.is_empty() {
            return Err("expected at least one value".into());
        }
        Ok(ValueList(values))
    }
}

/// Inline comparison entry: `label=n1,n2,n3,n4,n5,n6`.
#[derive(Debug, Clone)]
pub struct EntrySpec {
    pub label: String,
    pub inputs: MetricInputs,
}

impl FromStr for EntrySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (label, rest) = s
            .split_once('=')
            .ok_or_else(|| format!("expected label=n1,n2,n3,n4,n5,n6, got {s:?}"))?;
        let label = label.trim();
        if label.is_empty() {
            return Err(format!("empty label in {s:?}"));
        }
        Ok(EntrySpec {
            label: label.to_string(),
            inputs: rest.parse::<BaseInputs>()?.0,
        })
    }
}

fn parse_list<T: FromStr>(s: &str, expected: usize, what: &str) -> Result<Vec<T>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != expected {
        return Err(format!(
            "expected {expected} comma-separated {what}, got {}",
            parts.len()
        ));
    }
    parts
        .iter()
        .map(|part| {
            part.parse::<T>()
                .map_err(|_| format!("invalid value {part:?} in {s:?}"))
        })
        .collect()
}

/// Weight configuration shared by the scoring subcommands. Precedence:
/// defaults, then `--config` file entries, then explicit flags.
#[derive(Debug, Clone, clap::Args)]
pub struct WeightOpts {
    /// Component weights w1,w2,w3,w4,w5,w6 (default 20,10,14,14,12,30)
    #[arg(long, value_name = "W1,W2,W3,W4,W5,W6")]
    pub weights: Option<WeightList>,

    /// Threshold and scale overrides t2,s2,t5,s5 (default 100,200,70,50)
    #[arg(long, value_name = "T2,S2,T5,S5")]
    pub thresholds: Option<ThresholdList>,

    /// Key-value file with keys w1..w6, t2, s2, t5, s5; flags win over it
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

pub fn resolve_weights(opts: &WeightOpts) -> anyhow::Result<Weights> {
    let mut weights = Weights::default();
    if let Some(path) = &opts.config {
        apply_config_file(&mut weights, path)?;
    }
    if let Some(WeightList(omega)) = opts.weights {
        weights.omega = omega;
    }
    if let Some(ThresholdList([t2, s2, t5, s5])) = opts.thresholds {
        weights.tau2 = t2;
        weights.sigma2 = s2;
        weights.tau5 = t5;
        weights.sigma5 = s5;
    }
    Ok(weights)
}

fn apply_config_file(weights: &mut Weights, path: &Path) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading weight config {}", path.display()))?;
    for (idx, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let Some((key, value)) = line.split_once('=') else {
            bail!(
                "{} line {lineno}: expected key=value, got {line:?}",
                path.display()
            );
        };
        let value: f64 = value.trim().parse().with_context(|| {
            format!(
                "{} line {lineno}: invalid number {:?}",
                path.display(),
                value.trim()
            )
        })?;
        match key.trim() {
            "w1" => weights.omega[0] = value,
            "w2" => weights.omega[1] = value,
            "w3" => weights.omega[2] = value,
            "w4" => weights.omega[3] = value,
            "w5" => weights.omega[4] = value,
            "w6" => weights.omega[5] = value,
            "t2" => weights.tau2 = value,
            "s2" => weights.sigma2 = value,
            "t5" => weights.tau5 = value,
            "s5" => weights.sigma5 = value,
            other => bail!("{} line {lineno}: unknown key {other:?}", path.display()),
        }
    }
    Ok(())
}
