//! Experiment configuration and training from a dataset.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::dataset::Dataset;
use crate::context::{ContextOptions, ContextScope};
use crate::error::{Error, Result};
use crate::infer::BeamConfig;
use crate::lexer::{END_BUG, START_BUG};
use crate::net::{Checkpoint, Model, ModelConfig};
use crate::train::{split_indices, train, Control, MetricRecord, TrainConfig, TrainOutcome};
use crate::vocab::{encode_pair, EncodedSample, Vocabulary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ModelSpec {
    pub emb_dim: usize,
    pub hidden: usize,
    pub layers: usize,
    pub bridge: bool,
    pub copy: bool,
}

impl Default for ModelSpec {
    fn default() -> Self {
        let g = ModelConfig::golden();
        Self {
            emb_dim: g.emb_dim,
            hidden: g.hidden,
            layers: g.layers,
            bridge: g.bridge,
            copy: g.copy,
        }
    }
}

impl ModelSpec {
    pub fn config(&self, vocab_size: usize) -> ModelConfig {
        ModelConfig {
            vocab_size,
            emb_dim: self.emb_dim,
            hidden: self.hidden,
            layers: self.layers,
            bridge: self.bridge,
            copy: self.copy,
        }
    }
}

/// Everything needed to train and evaluate one model; read from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExperimentConfig {
    /// learned tokens, markers included; the 4 special tokens come on top
    pub vocab_size: usize,
    pub model: ModelSpec,
    pub context: ContextOptions,
    pub train: TrainConfig,
    pub beam: usize,
    pub max_len: usize,
    /// drop candidates whose prepared line repeats a better-ranked one
    pub dedup_candidates: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            vocab_size: 1000,
            model: ModelSpec::default(),
            context: ContextOptions::default(),
            train: TrainConfig::default(),
            beam: 50,
            max_len: 100,
            dedup_candidates: false,
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn beam_config(&self) -> BeamConfig {
        BeamConfig {
            beam: self.beam,
            max_len: self.max_len,
            ..BeamConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.model.config(self.vocab_size + 4).validate()?;
        self.train.validate()?;
        if self.beam == 0 || self.max_len == 0 {
            return Err(Error::Config("beam and max_len must be positive".into()));
        }
        Ok(())
    }
}

fn forced(opts: &ContextOptions) -> Vec<&'static str> {
    if opts.markers {
        vec![START_BUG, END_BUG]
    } else {
        vec![]
    }
}

/// Model inputs for every sample: the context with `opts` applied.
pub fn context_texts(ds: &Dataset, opts: &ContextOptions) -> Result<Vec<Vec<String>>> {
    ds.samples.iter().map(|s| Ok(s.context.apply(opts)?.texts())).collect()
}

pub fn encode_dataset(ds: &Dataset, vocab: &Vocabulary, opts: &ContextOptions) -> Result<Vec<EncodedSample>> {
    context_texts(ds, opts)?
        .iter()
        .zip(&ds.samples)
        .map(|(src, s)| encode_pair(src, Some(&s.fix), vocab))
        .collect()
}

pub fn build_vocab(ds: &Dataset, size: usize, opts: &ContextOptions) -> Result<Vocabulary> {
    let mut seqs = context_texts(ds, opts)?;
    seqs.extend(ds.samples.iter().map(|s| s.fix.clone()));
    Vocabulary::build(seqs, size, &forced(opts))
}

/// Splits off a validation set, builds the vocabulary on the training part,
/// trains, and returns the best checkpoint. With `snapshots` set, a
/// checkpoint is written there at every evaluation point.
pub fn train_model<F>(cfg: &ExperimentConfig, data: &Dataset, snapshots: Option<&Path>, mut on_eval: F) -> Result<(Checkpoint, TrainOutcome)>
where
    F: FnMut(usize, &Model, &[MetricRecord]) -> Result<Control>,
{
    cfg.validate()?;
    if data.is_empty() {
        return Err(Error::Empty("training set"));
    }
    let (tr, va) = split_indices(data.len(), cfg.train.valid_fraction, cfg.train.seed);
    let pick = |idx: &[usize]| Dataset {
        samples: idx.iter().map(|&i| data.samples[i].clone()).collect(),
        split: None,
        provenance: data.provenance.clone(),
    };
    let (train_ds, valid_ds) = (pick(&tr), pick(&va));
    let vocab = build_vocab(&train_ds, cfg.vocab_size, &cfg.context)?;
    let train_enc = encode_dataset(&train_ds, &vocab, &cfg.context)?;
    let valid_enc = encode_dataset(&valid_ds, &vocab, &cfg.context)?;
    let mut model = Model::new(cfg.model.config(vocab.len()), cfg.train.seed)?;
    let outcome = train(&mut model, &train_enc, &valid_enc, &cfg.train, |it, m, records| {
        if let Some(dir) = snapshots {
            let ck = Checkpoint::new(m.clone(), vocab.clone(), cfg.context, it)?;
            ck.save(&dir.join(format!("iter-{it:06}.ckpt")))?;
        }
        on_eval(it, m, records)
    })?;
    model.params = outcome.best.clone();
    let ck = Checkpoint::new(model, vocab, cfg.context, outcome.best_iteration)?;
    Ok((ck, outcome))
}

/// Line-only input without markers, as used by the no-context baseline.
pub fn line_only() -> ContextOptions {
    ContextOptions {
        scope: ContextScope::LineOnly,
        markers: false,
        limit: None,
    }
}
