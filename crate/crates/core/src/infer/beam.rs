//! Beam search over any step-wise scorer.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::net::{clamped_ln, DecoderState, EncoderStates, Model};
use crate::vocab::{BOS_ID, EOS_ID, PAD_ID};

/// Something that scores the next token given the previous one.
pub trait StepModel {
    type State: Clone;

    fn start(&self) -> Self::State;

    /// Probabilities over the (extended) vocabulary and the next state.
    fn step(&self, prev: usize, state: &Self::State) -> Result<(Vec<f64>, Self::State)>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeamConfig {
    pub beam: usize,
    pub max_len: usize,
    pub bos: usize,
    pub eos: usize,
    /// ids never emitted
    pub blocked: Vec<usize>,
}

impl Default for BeamConfig {
    fn default() -> Self {
        Self {
            beam: 50,
            max_len: 100,
            bos: BOS_ID,
            eos: EOS_ID,
            blocked: vec![PAD_ID, BOS_ID],
        }
    }
}

impl BeamConfig {
    pub fn with_beam(beam: usize) -> Self {
        Self { beam, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis<S> {
    /// emitted ids, ending with the end token when finished
    pub ids: Vec<usize>,
    pub log_prob: f64,
    pub finished: bool,
    pub state: S,
}

/// Higher log-probability first, then lexicographically smaller ids.
pub fn rank_order(a: (f64, &[usize]), b: (f64, &[usize])) -> Ordering {
    b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1))
}

fn allowed(cfg: &BeamConfig, id: usize, p: f64) -> bool {
    p > 0.0 && !cfg.blocked.contains(&id)
}

/// Keeps the `beam` best successors per step; hypotheses ending in the end
/// token are set aside. Stops once `beam` are finished or after `max_len`
/// tokens, in which case the surviving unfinished ones are returned too.
pub fn beam_search<M: StepModel>(model: &M, cfg: &BeamConfig) -> Result<Vec<Hypothesis<M::State>>> {
    if cfg.beam < 1 {
        return Err(Error::Config("beam size must be at least 1".into()));
    }
    let mut live = vec![Hypothesis {
        ids: Vec::new(),
        log_prob: 0.0,
        finished: false,
        state: model.start(),
    }];
    let mut done: Vec<Hypothesis<M::State>> = Vec::new();
    for _ in 0..cfg.max_len {
        let mut cands: Vec<(f64, Vec<usize>, usize)> = Vec::new();
        let mut states = Vec::with_capacity(live.len());
        for (k, h) in live.iter().enumerate() {
            let prev = h.ids.last().copied().unwrap_or(cfg.bos);
            let (probs, next) = model.step(prev, &h.state)?;
            states.push(next);
            for (id, &p) in probs.iter().enumerate() {
                if allowed(cfg, id, p) {
                    let mut ids = h.ids.clone();
                    ids.push(id);
                    cands.push((h.log_prob + clamped_ln(p), ids, k));
                }
            }
        }
        cands.sort_by(|a, b| rank_order((a.0, &a.1), (b.0, &b.1)));
        cands.truncate(cfg.beam);
        live = Vec::with_capacity(cands.len());
        for (log_prob, ids, k) in cands {
            let finished = ids.last() == Some(&cfg.eos);
            let h = Hypothesis {
                ids,
                log_prob,
                finished,
                state: states[k].clone(),
            };
            if finished {
                done.push(h);
            } else {
                live.push(h);
            }
        }
        if done.len() >= cfg.beam || live.is_empty() {
            break;
        }
    }
    if done.len() < cfg.beam {
        done.extend(live);
    }
    done.sort_by(|a, b| rank_order((a.log_prob, &a.ids), (b.log_prob, &b.ids)));
    done.truncate(cfg.beam);
    Ok(done)
}

/// Argmax decoding; ties go to the smaller id.
pub fn greedy<M: StepModel>(model: &M, cfg: &BeamConfig) -> Result<Hypothesis<M::State>> {
    let mut h = Hypothesis {
        ids: Vec::new(),
        log_prob: 0.0,
        finished: false,
        state: model.start(),
    };
    while h.ids.len() < cfg.max_len {
        let prev = h.ids.last().copied().unwrap_or(cfg.bos);
        let (probs, next) = model.step(prev, &h.state)?;
        let best = probs
            .iter()
            .enumerate()
            .filter(|(id, &p)| allowed(cfg, *id, p))
            .fold(None, |best: Option<(usize, f64)>, (id, &p)| match best {
                Some((_, bp)) if bp >= p => best,
                _ => Some((id, p)),
            });
        let Some((id, p)) = best else { break };
        h.ids.push(id);
        h.log_prob += clamped_ln(p);
        h.state = next;
        if id == cfg.eos {
            h.finished = true;
            break;
        }
    }
    Ok(h)
}

/// Every sequence of up to `max_len` tokens, ranked; used as a test oracle.
pub fn exhaustive<M: StepModel>(model: &M, cfg: &BeamConfig) -> Result<Vec<(Vec<usize>, f64)>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0.0, model.start())];
    while let Some((ids, lp, state)) = stack.pop() {
        if ids.len() == cfg.max_len {
            out.push((ids, lp));
            continue;
        }
        let prev = ids.last().copied().unwrap_or(cfg.bos);
        let (probs, next) = model.step(prev, &state)?;
        for (id, &p) in probs.iter().enumerate() {
            if allowed(cfg, id, p) {
                let mut ext = ids.clone();
                ext.push(id);
                let score = lp + clamped_ln(p);
                if id == cfg.eos {
                    out.push((ext, score));
                } else {
                    stack.push((ext, score, next.clone()));
                }
            }
        }
    }
    out.sort_by(|a, b| rank_order((a.1, &a.0), (b.1, &b.0)));
    Ok(out)
}

/// The network bound to one encoded source.
pub struct NetStepper<'a> {
    pub model: &'a Model,
    pub enc: EncoderStates,
    pub src_ext_ids: Vec<usize>,
    pub ext_len: usize,
}

impl<'a> NetStepper<'a> {
    pub fn new(model: &'a Model, src_ids: &[usize], src_ext_ids: &[usize], ext_len: usize) -> Result<Self> {
        let (ids, ext_len) = if model.config.copy {
            (src_ext_ids.to_vec(), ext_len)
        } else {
            (src_ids.to_vec(), model.config.vocab_size)
        };
        Ok(Self {
            enc: model.encode(src_ids)?,
            model,
            src_ext_ids: ids,
            ext_len,
        })
    }
}

impl StepModel for NetStepper<'_> {
    type State = DecoderState;

    fn start(&self) -> DecoderState {
        self.model.initial_state(&self.enc)
    }

    fn step(&self, prev: usize, state: &DecoderState) -> Result<(Vec<f64>, DecoderState)> {
        let s = self.model.decode_step(prev, state, &self.enc, &self.src_ext_ids, self.ext_len)?;
        Ok((s.p_final.to_vec(), s.state))
    }
}
