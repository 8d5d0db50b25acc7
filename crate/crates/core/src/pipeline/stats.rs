//! Length distributions, token frequencies and truncation rate of a dataset.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::dataset::Dataset;
use super::eval::median;
use crate::error::{Error, Result};

/// Target lines longer than this are flagged.
pub const LONG_TARGET: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LengthSummary {
    pub min: usize,
    pub median: f64,
    pub mean: f64,
    pub max: usize,
}

impl LengthSummary {
    fn of(v: &[usize]) -> Self {
        Self {
            min: v.iter().copied().min().unwrap_or(0),
            median: median(v).unwrap_or(0.0),
            mean: v.iter().sum::<usize>() as f64 / v.len().max(1) as f64,
            max: v.iter().copied().max().unwrap_or(0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub samples: usize,
    pub source: LengthSummary,
    pub target: LengthSummary,
    pub source_lengths: Vec<usize>,
    pub target_lengths: Vec<usize>,
    /// fraction of contexts longer than the truncation limit
    pub truncation_rate: f64,
    pub long_targets: Vec<String>,
    pub distinct_tokens: usize,
    /// tokens by descending frequency (ties lexicographic)
    pub frequencies: Vec<(String, u64)>,
}

pub fn dataset_stats(data: &Dataset, limit: usize) -> Result<DatasetStats> {
    if data.is_empty() {
        return Err(Error::Empty("dataset"));
    }
    let source_lengths: Vec<usize> = data.samples.iter().map(|s| s.context.len()).collect();
    let target_lengths: Vec<usize> = data.samples.iter().map(|s| s.fix.len()).collect();
    let mut counts: HashMap<&str, u64> = HashMap::new();
    for s in &data.samples {
        for t in s.context.tokens.iter().filter(|t| !t.is_marker()) {
            *counts.entry(t.text.as_str()).or_default() += 1;
        }
        for t in &s.fix {
            *counts.entry(t.as_str()).or_default() += 1;
        }
    }
    let mut frequencies: Vec<(String, u64)> = counts.into_iter().map(|(t, c)| (t.to_string(), c)).collect();
    frequencies.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(DatasetStats {
        samples: data.len(),
        source: LengthSummary::of(&source_lengths),
        target: LengthSummary::of(&target_lengths),
        truncation_rate: source_lengths.iter().filter(|&&l| l > limit).count() as f64 / data.len() as f64,
        long_targets: data.samples.iter().filter(|s| s.fix.len() > LONG_TARGET).map(|s| s.id.clone()).collect(),
        distinct_tokens: frequencies.len(),
        frequencies,
        source_lengths,
        target_lengths,
    })
}

impl DatasetStats {
    pub fn render(&self, top: usize) -> String {
        let mut out = format!(
            "samples: {}\nsource tokens: min {} median {} mean {:.1} max {}\ntarget tokens: min {} median {} mean {:.1} max {}\ntruncation rate: {:.3}\ntargets over {} tokens: {}\ndistinct tokens: {}\n",
            self.samples,
            self.source.min,
            self.source.median,
            self.source.mean,
            self.source.max,
            self.target.min,
            self.target.median,
            self.target.mean,
            self.target.max,
            self.truncation_rate,
            LONG_TARGET,
            self.long_targets.len(),
            self.distinct_tokens
        );
        out.push_str("rank,token,frequency\n");
        for (i, (t, c)) in self.frequencies.iter().take(top).enumerate() {
            out.push_str(&format!("{},{},{}\n", i + 1, t, c));
        }
        out
    }
}
