//! Binary checkpoint container.
//!
//! Layout: 8-byte magic `LFXCKPT\0`, u32 LE format version, u64 LE header
//! length, UTF-8 JSON header, then every tensor as raw f64 LE in the order
//! listed in the header.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::model::Model;
use super::params::{ModelConfig, ModelParams};
use crate::context::ContextOptions;
use crate::error::{Error, Result};
use crate::vocab::Vocabulary;

pub const MAGIC: &[u8; 8] = b"LFXCKPT\0";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorInfo {
    pub name: String,
    pub shape: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckpointHeader {
    pub config: ModelConfig,
    pub vocab_hash: String,
    pub iteration: usize,
    pub tensors: Vec<TensorInfo>,
    pub vocab: Vec<String>,
    pub vocab_freqs: Vec<u64>,
    pub context: ContextOptions,
}

/// A model together with everything needed to run it on new input.
#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint {
    pub model: Model,
    pub vocab: Vocabulary,
    pub context: ContextOptions,
    pub iteration: usize,
}

impl Checkpoint {
    pub fn new(model: Model, vocab: Vocabulary, context: ContextOptions, iteration: usize) -> Result<Self> {
        if vocab.len() != model.config.vocab_size {
            return Err(Error::Checkpoint(format!(
                "vocabulary has {} entries, model expects {}",
                vocab.len(),
                model.config.vocab_size
            )));
        }
        Ok(Self {
            model,
            vocab,
            context,
            iteration,
        })
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let tensors = self.model.params.tensors();
        let header = CheckpointHeader {
            config: self.model.config,
            vocab_hash: self.vocab.hash(),
            iteration: self.iteration,
            tensors: tensors
                .iter()
                .map(|(name, _, shape)| TensorInfo {
                    name: name.clone(),
                    shape: shape.clone(),
                })
                .collect(),
            vocab: self.vocab.tokens().to_vec(),
            vocab_freqs: self.vocab.freqs().to_vec(),
            context: self.context,
        };
        let json = serde_json::to_vec(&header)?;
        let mut out = Vec::with_capacity(20 + json.len() + 8 * self.model.params.count());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(json.len() as u64).to_le_bytes());
        out.extend_from_slice(&json);
        for (_, values, _) in &tensors {
            for v in values.iter() {
                out.extend_from_slice(&v.to_le_bytes());
            }
        }
        Ok(out)
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |m: &str| Error::Checkpoint(m.to_string());
        if bytes.len() < 20 || &bytes[..8] != MAGIC {
            return Err(bad("not a checkpoint file"));
        }
        let version = u32::from_le_bytes(bytes[8..12].try_into().expect("4 bytes"));
        if version != VERSION {
            return Err(Error::Checkpoint(format!("unsupported checkpoint version {version}")));
        }
        let header_len = u64::from_le_bytes(bytes[12..20].try_into().expect("8 bytes")) as usize;
        let body_start = 20usize.checked_add(header_len).filter(|&e| e <= bytes.len()).ok_or_else(|| bad("truncated header"))?;
        let header: CheckpointHeader = serde_json::from_slice(&bytes[20..body_start])?;

        let vocab = Vocabulary::from_parts(header.vocab.clone(), header.vocab_freqs.clone())?;
        if vocab.hash() != header.vocab_hash {
            return Err(bad("vocabulary hash mismatch"));
        }
        let mut params = ModelParams::zeros(&header.config);
        let expected: Vec<TensorInfo> = params
            .tensors()
            .into_iter()
            .map(|(name, _, shape)| TensorInfo { name, shape })
            .collect();
        if expected != header.tensors {
            return Err(bad("tensor list does not match the configuration"));
        }
        let total: usize = params.count();
        if bytes.len() != body_start + 8 * total {
            return Err(bad("tensor data has the wrong length"));
        }
        let mut pos = body_start;
        for (_, values) in params.tensors_mut() {
            for v in values.iter_mut() {
                *v = f64::from_le_bytes(bytes[pos..pos + 8].try_into().expect("8 bytes"));
                pos += 8;
            }
        }
        let model = Model::from_params(header.config, params)?;
        Self::new(model, vocab, header.context, header.iteration)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let bytes = self.to_bytes()?;
        let mut f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        f.write_all(&bytes).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
        Self::from_bytes(&bytes)
    }
}
