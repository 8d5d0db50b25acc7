//! Exact-match evaluation and the origin analysis of copied tokens.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::dataset::Dataset;
use crate::context::Origin;
use crate::error::Result;
use crate::infer::{generate, prepare_line, BeamConfig};
use crate::lexer::{texts, tokenize};
use crate::net::Checkpoint;

/// Buggy methods shorter than this many tokens form the medium subset.
pub const MEDIUM_METHOD_TOKENS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub solved: bool,
    /// 1-based beam rank of the first exact match
    pub rank: Option<usize>,
    pub medium: bool,
    /// best-ranked prepared line, if any survived
    pub top_line: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactMatchReport {
    pub total: usize,
    pub solved: usize,
    pub medium_total: usize,
    pub medium_solved: usize,
    pub verdicts: Vec<Verdict>,
}

impl ExactMatchReport {
    pub fn accuracy(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.solved as f64 / self.total as f64
        }
    }
}

/// A sample is solved when any prepared beam candidate tokenizes to exactly
/// the reference fix.
pub fn evaluate_exact_match(ck: &Checkpoint, data: &Dataset, beam: &BeamConfig) -> Result<ExactMatchReport> {
    let mut verdicts = Vec::with_capacity(data.len());
    for s in &data.samples {
        let ctx = s.context.apply(&ck.context)?;
        let (_, hyps) = generate(ck, &ctx, beam)?;
        let mut rank = None;
        let mut top_line = None;
        for (i, h) in hyps.iter().enumerate() {
            let Some(line) = prepare_line(&h.tokens) else { continue };
            let same = tokenize(&line).map(|t| texts(&t) == s.fix).unwrap_or(false);
            if top_line.is_none() {
                top_line = Some(line);
            }
            if same {
                rank = Some(i + 1);
                break;
            }
        }
        verdicts.push(Verdict {
            id: s.id.clone(),
            solved: rank.is_some(),
            rank,
            medium: s.context.method_tokens < MEDIUM_METHOD_TOKENS,
            top_line,
        });
    }
    Ok(ExactMatchReport {
        total: verdicts.len(),
        solved: verdicts.iter().filter(|v| v.solved).count(),
        medium_total: verdicts.iter().filter(|v| v.medium).count(),
        medium_solved: verdicts.iter().filter(|v| v.medium && v.solved).count(),
        verdicts,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CopyBucket {
    AllVocabulary,
    BuggyLine,
    BuggyMethod,
    BuggyClass,
}

impl From<Origin> for CopyBucket {
    fn from(o: Origin) -> Self {
        match o {
            Origin::BuggyLine => CopyBucket::BuggyLine,
            Origin::BuggyMethod => CopyBucket::BuggyMethod,
            Origin::BuggyClass => CopyBucket::BuggyClass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CopyOrigin {
    pub id: String,
    pub bucket: CopyBucket,
    /// out-of-vocabulary fix tokens with their nearest origin
    pub copied: Vec<(String, Origin)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CopyReport {
    pub samples: Vec<CopyOrigin>,
    pub histogram: BTreeMap<CopyBucket, usize>,
    /// token distance from the buggy line to the nearest occurrence of each
    /// copied token found only outside the line
    pub distances: Vec<usize>,
}

impl CopyReport {
    pub fn median_distance(&self) -> Option<f64> {
        median(&self.distances)
    }
}

pub fn median(values: &[usize]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_unstable();
    let n = v.len();
    Some(if n % 2 == 1 {
        v[n / 2] as f64
    } else {
        (v[n / 2 - 1] + v[n / 2]) as f64 / 2.0
    })
}

/// Classifies every solved sample by the furthest origin among the
/// out-of-vocabulary tokens of its fix, taking for each token the origin
/// nearest the buggy line.
pub fn copy_origin_analysis(ck: &Checkpoint, data: &Dataset, report: &ExactMatchReport) -> Result<CopyReport> {
    let mut out = CopyReport {
        samples: Vec::new(),
        histogram: BTreeMap::new(),
        distances: Vec::new(),
    };
    for (s, v) in data.samples.iter().zip(&report.verdicts) {
        if !v.solved {
            continue;
        }
        let ctx = s.context.apply(&ck.context)?;
        let (lo, hi) = ctx.line_span().unwrap_or((0, 0));
        let mut copied = Vec::new();
        for tok in s.fix.iter().filter(|t| !ck.vocab.contains(t)) {
            if copied.iter().any(|(t, _): &(String, Origin)| t == tok) {
                continue;
            }
            let hits: Vec<usize> = ctx.tokens.iter().enumerate().filter(|(_, t)| &t.text == tok).map(|(i, _)| i).collect();
            let Some(origin) = hits.iter().map(|&i| ctx.origins[i]).min() else { continue };
            if origin != Origin::BuggyLine {
                let dist = hits.iter().map(|&i| if i < lo { lo - i } else { i.saturating_sub(hi) }).min().unwrap_or(0);
                out.distances.push(dist);
            }
            copied.push((tok.clone(), origin));
        }
        let bucket = copied.iter().map(|(_, o)| CopyBucket::from(*o)).max().unwrap_or(CopyBucket::AllVocabulary);
        *out.histogram.entry(bucket).or_default() += 1;
        out.samples.push(CopyOrigin {
            id: s.id.clone(),
            bucket,
            copied,
        });
    }
    Ok(out)
}
