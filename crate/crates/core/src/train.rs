//! Mini-batch SGD training and the teacher-forced metrics used to select
//! checkpoints.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::net::{clamped_ln, Model, ModelParams};
use crate::vocab::EncodedSample;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainConfig {
    pub batch_size: usize,
    pub iterations: usize,
    pub dropout: f64,
    pub learning_rate: f64,
    /// multiplier applied when validation perplexity stops improving
    pub lr_decay: f64,
    pub max_grad_norm: f64,
    pub eval_every: usize,
    /// training samples scored at each evaluation point
    pub eval_train_samples: usize,
    pub valid_fraction: f64,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            batch_size: 32,
            iterations: 10_000,
            dropout: 0.3,
            learning_rate: 1.0,
            lr_decay: 0.5,
            max_grad_norm: 5.0,
            eval_every: 500,
            eval_train_samples: 256,
            valid_fraction: 0.05,
            seed: 0,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.into()));
        if self.batch_size == 0 || self.eval_every == 0 {
            return bad("batch size and evaluation interval must be positive");
        }
        if !(0.0..1.0).contains(&self.dropout) {
            return bad("dropout must be in [0, 1)");
        }
        if self.learning_rate < 0.0 || !(0.0..=1.0).contains(&self.lr_decay) || self.max_grad_norm <= 0.0 {
            return bad("invalid learning-rate schedule");
        }
        if !(self.valid_fraction > 0.0 && self.valid_fraction < 1.0) {
            return bad("validation fraction must be in (0, 1)");
        }
        Ok(())
    }
}

/// Per-token teacher-forced result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TokenScore {
    /// probability of the gold token
    pub prob: f64,
    /// the argmax equals the gold token
    pub correct: bool,
}

/// Anything that can score gold target tokens under teacher forcing.
pub trait Scorer {
    fn score(&self, sample: &EncodedSample) -> Result<Vec<TokenScore>>;
}

impl Scorer for Model {
    fn score(&self, sample: &EncodedSample) -> Result<Vec<TokenScore>> {
        let (_, tgt) = self.sample_ids(sample)?;
        let (probs, argmax) = self.score_targets(sample)?;
        Ok(probs
            .into_iter()
            .zip(argmax)
            .zip(&tgt[1..])
            .map(|((prob, best), &gold)| TokenScore {
                prob,
                correct: best == gold,
            })
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub perplexity: f64,
    pub accuracy: f64,
    pub tokens: usize,
    pub nll: f64,
}

/// Corpus perplexity `exp(total NLL / tokens)` and token accuracy.
pub fn evaluate<S: Scorer + ?Sized>(scorer: &S, samples: &[EncodedSample]) -> Result<Metrics> {
    let (mut nll, mut tokens, mut correct) = (0.0, 0usize, 0usize);
    for s in samples {
        for t in scorer.score(s)? {
            nll -= clamped_ln(t.prob);
            tokens += 1;
            correct += usize::from(t.correct);
        }
    }
    if tokens == 0 {
        return Err(Error::Empty("evaluation set"));
    }
    Ok(Metrics {
        perplexity: (nll / tokens as f64).exp(),
        accuracy: correct as f64 / tokens as f64,
        tokens,
        nll,
    })
}

pub fn perplexity<S: Scorer + ?Sized>(scorer: &S, samples: &[EncodedSample]) -> Result<f64> {
    Ok(evaluate(scorer, samples)?.perplexity)
}

pub fn token_accuracy<S: Scorer + ?Sized>(scorer: &S, samples: &[EncodedSample]) -> Result<f64> {
    Ok(evaluate(scorer, samples)?.accuracy)
}

/// Seeded split of `0..n` into (train, valid) index lists; validation gets
/// `round(n * fraction)` items, at least one when `n >= 2`.
pub fn split_indices(n: usize, fraction: f64, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut k = (n as f64 * fraction).round() as usize;
    if n >= 2 {
        k = k.clamp(1, n - 1);
    } else {
        k = 0;
    }
    let mut valid = idx.split_off(n - k);
    idx.sort_unstable();
    valid.sort_unstable();
    (idx, valid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Valid,
}

impl std::fmt::Display for Split {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Split::Train => "train",
            Split::Valid => "valid",
        })
    }
}

/// One row of the metric log.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricRecord {
    pub iteration: usize,
    pub split: Split,
    pub accuracy: f64,
    pub perplexity: f64,
}

pub const METRIC_HEADER: &str = "iteration,split,accuracy,perplexity";

impl MetricRecord {
    pub fn csv_line(&self) -> String {
        format!("{},{},{},{}", self.iteration, self.split, self.accuracy, self.perplexity)
    }
}

/// Appends records to a CSV file, writing the header if the file is new.
pub fn append_metric_log(path: &Path, records: &[MetricRecord]) -> Result<()> {
    let fresh = !path.exists() || std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let mut f = OpenOptions::new().create(true).append(true).open(path).map_err(|e| Error::io(path, e))?;
    let mut text = String::new();
    if fresh {
        text.push_str(METRIC_HEADER);
        text.push('\n');
    }
    for r in records {
        text.push_str(&r.csv_line());
        text.push('\n');
    }
    f.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone)]
pub struct TrainOutcome {
    /// parameters with the best validation perplexity (last ones without
    /// a validation set)
    pub best: ModelParams,
    pub best_iteration: usize,
    pub iterations_run: usize,
    pub log: Vec<MetricRecord>,
    pub final_learning_rate: f64,
}

/// What the evaluation callback asks the loop to do next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Control {
    Continue,
    Stop,
}

fn sample_seed(seed: u64, iteration: usize, index: usize) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for x in [iteration as u64, index as u64] {
        h = (h ^ x).wrapping_mul(0x100_0000_01b3).rotate_left(29);
    }
    h
}

/// Runs `cfg.iterations` SGD steps over shuffled mini-batches, evaluating
/// every `cfg.eval_every` steps (and after the last). `on_eval` sees the
/// current model and may stop training early.
pub fn train<F>(model: &mut Model, train_set: &[EncodedSample], valid_set: &[EncodedSample], cfg: &TrainConfig, mut on_eval: F) -> Result<TrainOutcome>
where
    F: FnMut(usize, &Model, &[MetricRecord]) -> Result<Control>,
{
    cfg.validate()?;
    if train_set.is_empty() {
        return Err(Error::Empty("training set"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut order: Vec<usize> = (0..train_set.len()).collect();
    order.shuffle(&mut rng);
    let mut cursor = 0;
    let eval_train: Vec<EncodedSample> = {
        let mut idx: Vec<usize> = (0..train_set.len()).collect();
        idx.shuffle(&mut ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1)));
        idx.truncate(cfg.eval_train_samples.max(1));
        idx.sort_unstable();
        idx.into_iter().map(|i| train_set[i].clone()).collect()
    };

    let mut grads = ModelParams::zeros(&model.config);
    let mut lr = cfg.learning_rate;
    let mut log = Vec::new();
    let mut best: Option<(f64, usize, ModelParams)> = None;
    let mut last_valid = f64::INFINITY;
    let mut it = 0;
    while it < cfg.iterations {
        it += 1;
        grads.fill_zero();
        let batch = cfg.batch_size.min(train_set.len());
        let mut loss = 0.0;
        for b in 0..batch {
            if cursor == order.len() {
                order.shuffle(&mut rng);
                cursor = 0;
            }
            let idx = order[cursor];
            cursor += 1;
            let mut drop_rng = ChaCha8Rng::seed_from_u64(sample_seed(cfg.seed, it, b));
            loss += model.accumulate_gradients(&train_set[idx], &mut grads, 1.0 / batch as f64, cfg.dropout, Some(&mut drop_rng))?;
        }
        let norm = grads.l2_norm();
        if !loss.is_finite() || !norm.is_finite() {
            return Err(Error::Diverged { iteration: it, loss });
        }
        if norm > cfg.max_grad_norm {
            grads.scale(cfg.max_grad_norm / norm);
        }
        model.params.axpy(-lr, &grads);

        if it % cfg.eval_every == 0 || it == cfg.iterations {
            let tm = evaluate(model, &eval_train)?;
            let mut records = vec![MetricRecord {
                iteration: it,
                split: Split::Train,
                accuracy: tm.accuracy,
                perplexity: tm.perplexity,
            }];
            if !valid_set.is_empty() {
                let vm = evaluate(model, valid_set)?;
                records.push(MetricRecord {
                    iteration: it,
                    split: Split::Valid,
                    accuracy: vm.accuracy,
                    perplexity: vm.perplexity,
                });
                if vm.perplexity >= last_valid {
                    lr *= cfg.lr_decay;
                }
                last_valid = last_valid.min(vm.perplexity);
                if best.as_ref().is_none_or(|b| vm.perplexity < b.0) {
                    best = Some((vm.perplexity, it, model.params.clone()));
                }
            }
            log.extend_from_slice(&records);
            if on_eval(it, model, &records)? == Control::Stop {
                break;
            }
        }
    }
    let (best_iteration, best) = match best {
        Some((_, i, p)) => (i, p),
        None => (it, model.params.clone()),
    };
    Ok(TrainOutcome {
        best,
        best_iteration,
        iterations_run: it,
        log,
        final_learning_rate: lr,
    })
}
