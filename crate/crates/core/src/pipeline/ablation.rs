//! Repeated training runs over a grid of configuration changes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde::{Deserialize, Serialize};

use super::dataset::Dataset;
use super::eval::evaluate_exact_match;
use super::experiment::{train_model, ExperimentConfig};
use crate::error::{Error, Result};
use crate::train::Control;

pub const GOLDEN_ID: &str = "golden";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    /// exactly one parameter differs from the golden configuration
    Ablation,
    /// any number of parameters differ (build-up rows)
    Buildup,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridEntry {
    pub id: String,
    #[serde(default)]
    pub description: String,
    #[serde(default = "default_kind")]
    pub kind: EntryKind,
    /// dotted config paths, e.g. `model.copy` or `train.dropout`
    #[serde(default)]
    pub overrides: BTreeMap<String, toml::Value>,
}

fn default_kind() -> EntryKind {
    EntryKind::Ablation
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AblationGrid {
    #[serde(default = "default_runs")]
    pub runs: usize,
    #[serde(default, rename = "entry")]
    pub entries: Vec<GridEntry>,
}

fn default_runs() -> usize {
    2
}

impl AblationGrid {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AblationResult {
    pub id: String,
    pub description: String,
    pub counts: Vec<usize>,
    pub mean: f64,
    pub sd: f64,
    pub max: usize,
    /// change of this row's best run relative to the golden best, percent
    pub pct_change: Option<f64>,
    pub crash: Option<String>,
}

/// Returns `base` with each dotted-path override applied.
pub fn apply_overrides(base: &ExperimentConfig, overrides: &BTreeMap<String, toml::Value>) -> Result<ExperimentConfig> {
    let mut root = serde_json::to_value(base)?;
    for (path, value) in overrides {
        let mut node = &mut root;
        for key in path.split('.') {
            node = node
                .get_mut(key)
                .ok_or_else(|| Error::Config(format!("unknown configuration key `{path}`")))?;
        }
        *node = serde_json::to_value(value)?;
    }
    let cfg: ExperimentConfig = serde_json::from_value(root).map_err(|e| Error::Config(e.to_string()))?;
    cfg.validate()?;
    Ok(cfg)
}

/// Checks the one-change rule for ablation rows and builds each config.
pub fn resolve_entries(golden: &ExperimentConfig, grid: &AblationGrid) -> Result<Vec<(GridEntry, ExperimentConfig)>> {
    if grid.runs < 2 {
        return Err(Error::Config("at least 2 runs per configuration are needed".into()));
    }
    let mut out = vec![(
        GridEntry {
            id: GOLDEN_ID.into(),
            description: "golden configuration".into(),
            kind: EntryKind::Ablation,
            overrides: BTreeMap::new(),
        },
        golden.clone(),
    )];
    for e in &grid.entries {
        if e.id == GOLDEN_ID || out.iter().any(|(o, _)| o.id == e.id) {
            return Err(Error::Config(format!("duplicate grid id `{}`", e.id)));
        }
        let cfg = apply_overrides(golden, &e.overrides)?;
        if e.kind == EntryKind::Ablation {
            if e.overrides.len() != 1 {
                return Err(Error::Config(format!("ablation `{}` must change exactly one parameter", e.id)));
            }
            if cfg == *golden {
                return Err(Error::Config(format!("ablation `{}` does not change the golden configuration", e.id)));
            }
        }
        out.push((e.clone(), cfg));
    }
    Ok(out)
}

fn summarize(entry: &GridEntry, counts: Vec<usize>, crash: Option<String>) -> AblationResult {
    let n = counts.len() as f64;
    let mean = if counts.is_empty() { 0.0 } else { counts.iter().sum::<usize>() as f64 / n };
    let sd = if counts.len() < 2 {
        0.0
    } else {
        (counts.iter().map(|&c| (c as f64 - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    AblationResult {
        id: entry.id.clone(),
        description: entry.description.clone(),
        max: counts.iter().copied().max().unwrap_or(0),
        counts,
        mean,
        sd,
        pct_change: None,
        crash,
    }
}

/// Runs every grid row `grid.runs` times through `runner(config, run)`,
/// which returns an exact-match count. Errors and panics mark the row as a
/// crash without stopping the grid.
pub fn run_grid<R>(golden: &ExperimentConfig, grid: &AblationGrid, mut runner: R) -> Result<Vec<AblationResult>>
where
    R: FnMut(&ExperimentConfig, usize) -> Result<usize>,
{
    let mut results = Vec::new();
    for (entry, cfg) in resolve_entries(golden, grid)? {
        let mut counts = Vec::with_capacity(grid.runs);
        let mut crash = None;
        for run in 0..grid.runs {
            let mut c = cfg.clone();
            c.train.seed = cfg.train.seed.wrapping_add(run as u64);
            match catch_unwind(AssertUnwindSafe(|| runner(&c, run))) {
                Ok(Ok(n)) => counts.push(n),
                Ok(Err(e)) => {
                    crash = Some(e.to_string());
                    break;
                }
                Err(p) => {
                    let msg = p
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "panic".into());
                    crash = Some(msg);
                    break;
                }
            }
        }
        log::info!("grid row {}: {:?}{}", entry.id, counts, crash.as_deref().map(|c| format!(" crash: {c}")).unwrap_or_default());
        results.push(summarize(&entry, counts, crash));
    }
    let golden_max = results[0].max;
    for r in results.iter_mut() {
        if r.crash.is_none() && golden_max > 0 {
            r.pct_change = Some((r.max as f64 - golden_max as f64) / golden_max as f64 * 100.0);
        }
    }
    Ok(results)
}

/// Trains on `train` and counts exact matches on `test` for every row.
pub fn ablation_grid(golden: &ExperimentConfig, grid: &AblationGrid, train: &Dataset, test: &Dataset) -> Result<Vec<AblationResult>> {
    run_grid(golden, grid, |cfg, _| {
        let (ck, _) = train_model(cfg, train, None, |_, _, _| Ok(Control::Continue))?;
        Ok(evaluate_exact_match(&ck, test, &cfg.beam_config())?.solved)
    })
}

pub fn render_table(results: &[AblationResult]) -> String {
    let mut out = format!("{:<10} {:<36} {:>8} {:>8} {:>6} {:>9}\n", "id", "description", "mean", "sd", "max", "change");
    for r in results {
        let change = match (&r.crash, r.pct_change) {
            (Some(_), _) => "crash".to_string(),
            (None, Some(p)) => format!("{p:+.1}%"),
            (None, None) => "-".to_string(),
        };
        let _ = writeln!(out, "{:<10} {:<36} {:>8.2} {:>8.2} {:>6} {:>9}", r.id, r.description, r.mean, r.sd, r.max, change);
    }
    out
}

pub fn render_csv(results: &[AblationResult]) -> String {
    let mut out = String::from("id,description,counts,mean,sd,max,pct_change,crash\n");
    for r in results {
        let counts: Vec<String> = r.counts.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "{},\"{}\",{},{},{},{},{},\"{}\"",
            r.id,
            r.description.replace('"', "'"),
            counts.join(";"),
            r.mean,
            r.sd,
            r.max,
            r.pct_change.map(|p| p.to_string()).unwrap_or_default(),
            r.crash.as_deref().unwrap_or("").replace('"', "'")
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(text: &str) -> AblationGrid {
        AblationGrid::from_toml(text).unwrap()
    }

    #[test]
    fn golden_row_has_zero_change_and_sample_sd() {
        let g = ExperimentConfig::default();
        let counts = [10usize, 14];
        let res = run_grid(&g, &grid("runs = 2"), |_, run| Ok(counts[run])).unwrap();
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].counts, vec![10, 14]);
        assert_eq!(res[0].mean, 12.0);
        assert!((res[0].sd - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(res[0].pct_change, Some(0.0));
    }

    #[test]
    fn crashes_are_recorded() {
        let g = ExperimentConfig::default();
        let text = r#"
runs = 2
[[entry]]
id = "12"
description = "no truncation"
overrides = { "context.limit" = 0 }
[[entry]]
id = "6"
overrides = { "model.copy" = false }
"#;
        let res = run_grid(&g, &grid(text), |cfg, _| {
            if cfg.context.limit.is_none() {
                panic!("out of memory");
            }
            if !cfg.model.copy {
                return Err(Error::Config("boom".into()));
            }
            Ok(20)
        })
        .unwrap();
        assert_eq!(res[1].crash.as_deref(), Some("out of memory"));
        assert_eq!(res[2].crash.as_deref(), Some("invalid configuration: boom"));
        assert!(render_table(&res).contains("crash"));
    }

    #[test]
    fn seeds_differ_per_run_and_changes_are_relative() {
        let g = ExperimentConfig::default();
        let text = "runs = 3\n[[entry]]\nid = \"7\"\noverrides = { beam = 10 }\n";
        let res = run_grid(&g, &grid(text), |cfg, run| Ok(if cfg.beam == 50 { 40 + run } else { 21 + cfg.train.seed as usize })).unwrap();
        assert_eq!(res[0].max, 42);
        assert_eq!(res[1].counts, vec![21, 22, 23]);
        assert!((res[1].pct_change.unwrap() - (23.0 - 42.0) / 42.0 * 100.0).abs() < 1e-9);
    }

    #[test]
    fn one_change_rule() {
        let g = ExperimentConfig::default();
        let two = "[[entry]]\nid = \"x\"\noverrides = { beam = 1, \"model.copy\" = false }\n";
        assert!(resolve_entries(&g, &grid(two)).is_err());
        let same = "[[entry]]\nid = \"x\"\noverrides = { beam = 50 }\n";
        assert!(resolve_entries(&g, &grid(same)).is_err());
        let unknown = "[[entry]]\nid = \"x\"\noverrides = { \"model.nope\" = 1 }\n";
        assert!(resolve_entries(&g, &grid(unknown)).is_err());
        let buildup = "[[entry]]\nid = \"base\"\nkind = \"buildup\"\noverrides = { beam = 1, \"model.copy\" = false, \"context.scope\" = \"line-only\" }\n";
        let rows = resolve_entries(&g, &grid(buildup)).unwrap();
        assert_eq!(rows[1].1.beam, 1);
        assert!(!rows[1].1.model.copy);
        assert!(resolve_entries(&g, &grid("runs = 1")).is_err());
    }
}
