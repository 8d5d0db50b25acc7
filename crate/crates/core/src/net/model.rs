//! Forward pass, single decoding steps and exact backpropagation.
//!
//! Encoder: a stack of bidirectional LSTM layers; each direction has
//! `hidden / 2` units and the two are concatenated per position, giving the
//! memory bank `M` (n x hidden).
//!
//! Decoder step j, given previous token `y` and attentional state `a'`:
//!
//! ```text
//! u      = [E[y]; a'_{j-1}]                 (input feeding)
//! h      = LSTM stack(u)
//! alpha  = softmax(M (W_in h))
//! c      = M^T alpha
//! a      = tanh(W_out [c; h]),  a' = dropout(a)
//! P_V    = softmax(W_gen a' + b_gen)
//! p_gen  = sigmoid(w_copy . a' + b_copy)
//! P(y)   = p_gen P_V(y) + (1 - p_gen) * sum_{i: x_i = y} alpha_i
//! ```
//!
//! The decoder starts from an affine bridge of the final encoder states of
//! each layer (both directions concatenated), or from those states directly
//! when the bridge is disabled. With copying disabled `p_gen` is fixed at 1.

use ndarray::linalg::general_mat_mul;
use ndarray::{concatenate, s, Array1, Array2, ArrayView1, Axis};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::params::{LstmParams, ModelConfig, ModelParams};
use crate::error::{Error, Result};
use crate::vocab::{EncodedSample, UNK_ID};

/// Lower bound applied to log-probabilities.
pub const LOG_FLOOR: f64 = -1e9;

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Max-subtracted softmax.
pub fn softmax(logits: ArrayView1<f64>) -> Array1<f64> {
    let max = logits.fold(f64::NEG_INFINITY, |m, &x| m.max(x));
    let mut out = logits.mapv(|x| (x - max).exp());
    let sum = out.sum();
    out /= sum;
    out
}

/// `ln p` bounded below by [`LOG_FLOOR`]; NaN stays NaN.
pub fn clamped_ln(p: f64) -> f64 {
    if p.is_nan() {
        p
    } else if p > 0.0 {
        p.ln().max(LOG_FLOOR)
    } else {
        LOG_FLOOR
    }
}

/// Mixes the vocabulary distribution with the copy distribution over the
/// extended vocabulary. Attention mass on repeated source tokens adds up.
pub fn final_distribution(
    p_vocab: ArrayView1<f64>,
    p_gen: f64,
    attention: ArrayView1<f64>,
    src_ext_ids: &[usize],
    ext_len: usize,
) -> Array1<f64> {
    let mut out = Array1::zeros(ext_len);
    out.slice_mut(s![..p_vocab.len()]).scaled_add(p_gen, &p_vocab);
    for (&id, &a) in src_ext_ids.iter().zip(attention.iter()) {
        out[id] += (1.0 - p_gen) * a;
    }
    out
}

/// Cached activations of one LSTM step.
#[derive(Debug, Clone)]
struct Cell {
    /// activated gates i, f, g, o
    gates: Array1<f64>,
    c: Array1<f64>,
    tanh_c: Array1<f64>,
    h: Array1<f64>,
}

fn cell_forward(p: &LstmParams, pre: Array1<f64>, h_prev: ArrayView1<f64>, c_prev: ArrayView1<f64>) -> Cell {
    let hd = p.hidden();
    let mut z = pre;
    general_mat_vec(&p.u, h_prev, &mut z);
    let mut gates = z;
    for k in 0..4 * hd {
        gates[k] = if (2 * hd..3 * hd).contains(&k) { gates[k].tanh() } else { sigmoid(gates[k]) };
    }
    let mut c = Array1::zeros(hd);
    for k in 0..hd {
        c[k] = gates[hd + k] * c_prev[k] + gates[k] * gates[2 * hd + k];
    }
    let tanh_c = c.mapv(f64::tanh);
    let h = Array1::from_shape_fn(hd, |k| gates[3 * hd + k] * tanh_c[k]);
    Cell { gates, c, tanh_c, h }
}

/// Returns gradients w.r.t. the gate pre-activations and the previous cell.
fn cell_backward(
    cell: &Cell,
    c_prev: ArrayView1<f64>,
    dh: ArrayView1<f64>,
    dc_next: ArrayView1<f64>,
) -> (Array1<f64>, Array1<f64>) {
    let hd = cell.h.len();
    let g = &cell.gates;
    let mut dz = Array1::zeros(4 * hd);
    let mut dc_prev = Array1::zeros(hd);
    for k in 0..hd {
        let (i, f, gg, o) = (g[k], g[hd + k], g[2 * hd + k], g[3 * hd + k]);
        let tc = cell.tanh_c[k];
        let dc = dc_next[k] + dh[k] * o * (1.0 - tc * tc);
        dz[k] = dc * gg * i * (1.0 - i);
        dz[hd + k] = dc * c_prev[k] * f * (1.0 - f);
        dz[2 * hd + k] = dc * i * (1.0 - gg * gg);
        dz[3 * hd + k] = dh[k] * tc * o * (1.0 - o);
        dc_prev[k] = dc * f;
    }
    (dz, dc_prev)
}

/// `y += a x`
fn general_mat_vec(a: &Array2<f64>, x: ArrayView1<f64>, y: &mut Array1<f64>) {
    ndarray::linalg::general_mat_vec_mul(1.0, a, &x, 1.0, y);
}

fn dropout_mask(rng: &mut Option<(&mut ChaCha8Rng, f64)>, len: usize) -> Option<Array1<f64>> {
    match rng {
        Some((rng, p)) if *p > 0.0 => {
            let keep = 1.0 / (1.0 - *p);
            Some(Array1::from_shape_fn(len, |_| if rng.gen::<f64>() < *p { 0.0 } else { keep }))
        }
        _ => None,
    }
}

/// One LSTM layer-direction run over a whole sequence.
#[derive(Debug, Clone)]
struct SeqTrace {
    reverse: bool,
    cells: Vec<Cell>, // indexed by position
}

impl SeqTrace {
    fn order(&self) -> Vec<usize> {
        let n = self.cells.len();
        if self.reverse {
            (0..n).rev().collect()
        } else {
            (0..n).collect()
        }
    }

    fn last(&self) -> &Cell {
        if self.reverse {
            &self.cells[0]
        } else {
            &self.cells[self.cells.len() - 1]
        }
    }
}

fn run_seq(p: &LstmParams, x: &Array2<f64>, reverse: bool) -> SeqTrace {
    let n = x.nrows();
    let hd = p.hidden();
    let mut proj = x.dot(&p.w.t());
    proj += &p.b;
    let mut cells: Vec<Option<Cell>> = vec![None; n];
    let mut h = Array1::zeros(hd);
    let mut c = Array1::zeros(hd);
    let order: Vec<usize> = if reverse { (0..n).rev().collect() } else { (0..n).collect() };
    for t in order {
        let cell = cell_forward(p, proj.row(t).to_owned(), h.view(), c.view());
        h = cell.h.clone();
        c = cell.c.clone();
        cells[t] = Some(cell);
    }
    SeqTrace {
        reverse,
        cells: cells.into_iter().map(|c| c.expect("every position visited")).collect(),
    }
}

/// Backpropagates through one layer-direction. `d_out` holds gradients on
/// the per-position outputs, `dh_last`/`dc_last` on the final state.
/// Returns the gradient on the layer input.
fn back_seq(
    p: &LstmParams,
    g: &mut LstmParams,
    x: &Array2<f64>,
    tr: &SeqTrace,
    d_out: ndarray::ArrayView2<f64>,
    dh_last: ArrayView1<f64>,
    dc_last: ArrayView1<f64>,
) -> Array2<f64> {
    let n = x.nrows();
    let hd = p.hidden();
    let order = tr.order();
    let mut d_gates = Array2::zeros((n, 4 * hd));
    let mut h_prev = Array2::zeros((n, hd));
    let mut dh_next = dh_last.to_owned();
    let mut dc_next = dc_last.to_owned();
    let zeros = Array1::zeros(hd);
    for step in (0..n).rev() {
        let t = order[step];
        let prev = (step > 0).then(|| &tr.cells[order[step - 1]]);
        let c_prev = prev.map_or(zeros.view(), |c| c.c.view());
        if let Some(pc) = prev {
            h_prev.row_mut(t).assign(&pc.h);
        }
        let dh = &d_out.row(t) + &dh_next;
        let (dz, dc_prev) = cell_backward(&tr.cells[t], c_prev, dh.view(), dc_next.view());
        dh_next = p.u.t().dot(&dz);
        dc_next = dc_prev;
        d_gates.row_mut(t).assign(&dz);
    }
    general_mat_mul(1.0, &d_gates.t(), x, 1.0, &mut g.w);
    general_mat_mul(1.0, &d_gates.t(), &h_prev, 1.0, &mut g.u);
    g.b += &d_gates.sum_axis(Axis(0));
    d_gates.dot(&p.w)
}

/// Encoder output used by the decoder.
#[derive(Debug, Clone)]
pub struct EncoderStates {
    /// n x hidden, both directions concatenated per position
    pub memory: Array2<f64>,
    pub final_h: Vec<Array1<f64>>,
    pub final_c: Vec<Array1<f64>>,
}

struct EncoderTrace {
    inputs: Vec<Array2<f64>>,
    masks: Vec<Option<Array2<f64>>>,
    fwd: Vec<SeqTrace>,
    bwd: Vec<SeqTrace>,
    states: EncoderStates,
}

/// Recurrent state carried between decoder steps.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoderState {
    pub h: Vec<Array1<f64>>,
    pub c: Vec<Array1<f64>>,
    /// previous attentional state (input feeding)
    pub feed: Array1<f64>,
}

/// Everything one decoder step produces.
#[derive(Debug, Clone)]
pub struct DecoderStep {
    /// top-layer decoder state
    pub hidden: Array1<f64>,
    pub attention: Array1<f64>,
    pub context: Array1<f64>,
    pub attentional: Array1<f64>,
    pub p_vocab: Array1<f64>,
    pub p_gen: f64,
    /// distribution over the extended vocabulary
    pub p_final: Array1<f64>,
    pub state: DecoderState,
}

struct StepTrace {
    inputs: Vec<Array1<f64>>,
    masks: Vec<Option<Array1<f64>>>,
    cells: Vec<Cell>,
    query: Array1<f64>,
    alpha: Array1<f64>,
    concat: Array1<f64>,
    attn: Array1<f64>,
    attn_mask: Option<Array1<f64>>,
    attn_dropped: Array1<f64>,
    p_vocab: Array1<f64>,
    p_gen: f64,
    p_target: f64,
    copy_mass: f64,
    target: usize,
}

/// A configured network.
#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub config: ModelConfig,
    pub params: ModelParams,
}

impl Model {
    pub fn new(config: ModelConfig, seed: u64) -> Result<Self> {
        Ok(Self {
            params: ModelParams::init(&config, seed)?,
            config,
        })
    }

    pub fn from_params(config: ModelConfig, params: ModelParams) -> Result<Self> {
        config.validate()?;
        params.check_shapes(&config)?;
        Ok(Self { config, params })
    }

    fn embed_id(&self, id: usize) -> usize {
        if id < self.config.vocab_size {
            id
        } else {
            UNK_ID
        }
    }

    fn encode_trace(&self, src_ids: &[usize], dropout: &mut Option<(&mut ChaCha8Rng, f64)>) -> Result<EncoderTrace> {
        if src_ids.is_empty() {
            return Err(Error::Empty("encoder input"));
        }
        let p = &self.params;
        let n = src_ids.len();
        let mut x = Array2::zeros((n, self.config.emb_dim));
        for (t, &id) in src_ids.iter().enumerate() {
            x.row_mut(t).assign(&p.embedding.row(self.embed_id(id)));
        }
        let mut trace = EncoderTrace {
            inputs: Vec::new(),
            masks: Vec::new(),
            fwd: Vec::new(),
            bwd: Vec::new(),
            states: EncoderStates {
                memory: Array2::zeros((0, 0)),
                final_h: Vec::new(),
                final_c: Vec::new(),
            },
        };
        let mut layer_in = x;
        for l in 0..self.config.layers {
            let mask = if l > 0 {
                dropout_mask(dropout, n * layer_in.ncols()).map(|m| m.into_shape_with_order(layer_in.dim()).expect("mask shape"))
            } else {
                None
            };
            if let Some(m) = &mask {
                layer_in = &layer_in * m;
            }
            let f = run_seq(&p.enc_fwd[l], &layer_in, false);
            let b = run_seq(&p.enc_bwd[l], &layer_in, true);
            let out = Array2::from_shape_fn((n, self.config.hidden), |(t, k)| {
                let hd = self.config.enc_hidden();
                if k < hd {
                    f.cells[t].h[k]
                } else {
                    b.cells[t].h[k - hd]
                }
            });
            trace.states.final_h.push(concatenate![Axis(0), f.last().h, b.last().h]);
            trace.states.final_c.push(concatenate![Axis(0), f.last().c, b.last().c]);
            trace.inputs.push(layer_in);
            trace.masks.push(mask);
            trace.fwd.push(f);
            trace.bwd.push(b);
            layer_in = out;
        }
        trace.states.memory = layer_in;
        Ok(trace)
    }

    /// Runs the bidirectional encoder (no dropout).
    pub fn encode(&self, src_ids: &[usize]) -> Result<EncoderStates> {
        Ok(self.encode_trace(src_ids, &mut None)?.states)
    }

    /// Decoder state before the first step.
    pub fn initial_state(&self, enc: &EncoderStates) -> DecoderState {
        let p = &self.params;
        let bridge = |aff: &Option<super::params::Affine>, x: &Array1<f64>| match aff {
            Some(a) => a.w.dot(x) + &a.b,
            None => x.clone(),
        };
        DecoderState {
            h: enc.final_h.iter().map(|x| bridge(&p.bridge_h, x)).collect(),
            c: enc.final_c.iter().map(|x| bridge(&p.bridge_c, x)).collect(),
            feed: Array1::zeros(self.config.hidden),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn step_trace(
        &self,
        prev: usize,
        state: &DecoderState,
        enc: &EncoderStates,
        src_ext_ids: &[usize],
        ext_len: usize,
        target: Option<usize>,
        dropout: &mut Option<(&mut ChaCha8Rng, f64)>,
    ) -> (StepTrace, DecoderState, Option<Array1<f64>>) {
        let p = &self.params;
        let cfg = &self.config;
        let mut input = concatenate![Axis(0), p.embedding.row(self.embed_id(prev)), state.feed];
        let mut inputs = Vec::with_capacity(cfg.layers);
        let mut masks = Vec::with_capacity(cfg.layers);
        let mut cells: Vec<Cell> = Vec::with_capacity(cfg.layers);
        for l in 0..cfg.layers {
            let mask = if l > 0 { dropout_mask(dropout, input.len()) } else { None };
            if let Some(m) = &mask {
                input = &input * m;
            }
            let lstm = &p.dec[l];
            let pre = lstm.w.dot(&input) + &lstm.b;
            let cell = cell_forward(lstm, pre, state.h[l].view(), state.c[l].view());
            inputs.push(input);
            masks.push(mask);
            input = cell.h.clone();
            cells.push(cell);
        }
        let hidden = input;
        let query = p.attn_in.dot(&hidden);
        let scores = enc.memory.dot(&query);
        let alpha = softmax(scores.view());
        let context = enc.memory.t().dot(&alpha);
        let concat = concatenate![Axis(0), context, hidden];
        let attn = p.attn_out.dot(&concat).mapv(f64::tanh);
        let attn_mask = dropout_mask(dropout, attn.len());
        let attn_dropped = match &attn_mask {
            Some(m) => &attn * m,
            None => attn.clone(),
        };
        let logits = p.gen_w.dot(&attn_dropped) + &p.gen_b;
        let p_vocab = softmax(logits.view());
        let p_gen = if cfg.copy { sigmoid(p.copy_w.dot(&attn_dropped) + p.copy_b[0]) } else { 1.0 };

        let (p_target, copy_mass, p_final) = match target {
            Some(y) => {
                let copy_mass: f64 = src_ext_ids.iter().zip(alpha.iter()).filter(|(&id, _)| id == y).map(|(_, a)| a).sum();
                let pv = if y < cfg.vocab_size { p_vocab[y] } else { 0.0 };
                let copy_mass = if cfg.copy { copy_mass } else { 0.0 };
                (p_gen * pv + (1.0 - p_gen) * copy_mass, copy_mass, None)
            }
            None => {
                let pf = if cfg.copy {
                    final_distribution(p_vocab.view(), p_gen, alpha.view(), src_ext_ids, ext_len)
                } else {
                    let mut pf = Array1::zeros(ext_len.max(cfg.vocab_size));
                    pf.slice_mut(s![..cfg.vocab_size]).assign(&p_vocab);
                    pf
                };
                (0.0, 0.0, Some(pf))
            }
        };
        let next = DecoderState {
            h: cells.iter().map(|c| c.h.clone()).collect(),
            c: cells.iter().map(|c| c.c.clone()).collect(),
            feed: attn_dropped.clone(),
        };
        let trace = StepTrace {
            inputs,
            masks,
            cells,
            query,
            alpha,
            concat,
            attn,
            attn_mask,
            attn_dropped,
            p_vocab,
            p_gen,
            p_target,
            copy_mass,
            target: target.unwrap_or(0),
        };
        (trace, next, p_final)
    }

    /// One inference step from the previous token (an extended id) and state.
    pub fn decode_step(
        &self,
        prev: usize,
        state: &DecoderState,
        enc: &EncoderStates,
        src_ext_ids: &[usize],
        ext_len: usize,
    ) -> Result<DecoderStep> {
        let cfg = &self.config;
        if state.h.len() != cfg.layers
            || state.c.len() != cfg.layers
            || state.h.iter().chain(&state.c).any(|v| v.len() != cfg.hidden)
            || state.feed.len() != cfg.hidden
        {
            return Err(Error::Shape("decoder state does not match the model".into()));
        }
        if enc.memory.ncols() != cfg.hidden || enc.memory.nrows() != src_ext_ids.len() {
            return Err(Error::Shape("encoder states do not match the source ids".into()));
        }
        if src_ext_ids.iter().any(|&id| id >= ext_len) || ext_len < cfg.vocab_size {
            return Err(Error::Shape("extended id outside the extended vocabulary".into()));
        }
        let (tr, next, p_final) = self.step_trace(prev, state, enc, src_ext_ids, ext_len, None, &mut None);
        Ok(DecoderStep {
            hidden: tr.cells.last().expect("at least one layer").h.clone(),
            context: tr.concat.slice(s![..cfg.hidden]).to_owned(),
            attention: tr.alpha,
            attentional: tr.attn_dropped,
            p_vocab: tr.p_vocab,
            p_gen: tr.p_gen,
            p_final: p_final.expect("no target given"),
            state: next,
        })
    }

    /// Source and target ids the network actually sees for a sample.
    pub fn sample_ids<'a>(&self, sample: &'a EncodedSample) -> Result<(&'a [usize], &'a [usize])> {
        let tgt = if self.config.copy { &sample.tgt_ext_ids } else { &sample.tgt_ids };
        let tgt = tgt.as_deref().ok_or(Error::Empty("target sequence"))?;
        if tgt.len() < 2 {
            return Err(Error::Empty("target sequence"));
        }
        let src = if self.config.copy { &sample.src_ext_ids } else { &sample.src_ids };
        Ok((src, tgt))
    }

    /// Teacher-forced per-position probabilities of the gold tokens and the
    /// argmax predictions (no dropout).
    pub fn score_targets(&self, sample: &EncodedSample) -> Result<(Vec<f64>, Vec<usize>)> {
        let (src, tgt) = self.sample_ids(sample)?;
        let enc = self.encode(&sample.src_ids)?;
        let ext_len = if self.config.copy { sample.extended_len(self.config.vocab_size) } else { self.config.vocab_size };
        let mut state = self.initial_state(&enc);
        let mut probs = Vec::with_capacity(tgt.len() - 1);
        let mut argmax = Vec::with_capacity(tgt.len() - 1);
        for j in 1..tgt.len() {
            let step = self.decode_step(tgt[j - 1], &state, &enc, src, ext_len)?;
            probs.push(step.p_final[tgt[j]]);
            let best = step
                .p_final
                .iter()
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |acc, (i, &p)| if p > acc.1 { (i, p) } else { acc });
            argmax.push(best.0);
            state = step.state;
        }
        Ok((probs, argmax))
    }

    /// Negative log-likelihood of the gold target (teacher forcing).
    pub fn sequence_loss(&self, sample: &EncodedSample, dropout: f64, rng: Option<&mut ChaCha8Rng>) -> Result<f64> {
        let mut d = rng.map(|r| (r, dropout));
        self.run(sample, &mut d, None, 1.0)
    }

    /// Adds `scale * dLoss/dParams` into `grads` and returns the loss.
    pub fn accumulate_gradients(
        &self,
        sample: &EncodedSample,
        grads: &mut ModelParams,
        scale: f64,
        dropout: f64,
        rng: Option<&mut ChaCha8Rng>,
    ) -> Result<f64> {
        let mut d = rng.map(|r| (r, dropout));
        self.run(sample, &mut d, Some(grads), scale)
    }

    /// Loss and exact gradients for one sample, dropout disabled.
    pub fn gradients(&self, sample: &EncodedSample) -> Result<(f64, ModelParams)> {
        let mut grads = ModelParams::zeros(&self.config);
        let loss = self.accumulate_gradients(sample, &mut grads, 1.0, 0.0, None)?;
        Ok((loss, grads))
    }

    fn run(
        &self,
        sample: &EncodedSample,
        dropout: &mut Option<(&mut ChaCha8Rng, f64)>,
        grads: Option<&mut ModelParams>,
        scale: f64,
    ) -> Result<f64> {
        let (src, tgt) = self.sample_ids(sample)?;
        let cfg = self.config;
        let ext_len = if cfg.copy { sample.extended_len(cfg.vocab_size) } else { cfg.vocab_size };
        let enc = self.encode_trace(&sample.src_ids, dropout)?;
        let init = self.initial_state(&enc.states);
        let mut state = init.clone();
        let mut steps = Vec::with_capacity(tgt.len() - 1);
        let mut loss = 0.0;
        for j in 1..tgt.len() {
            let (tr, next, _) = self.step_trace(tgt[j - 1], &state, &enc.states, src, ext_len, Some(tgt[j]), dropout);
            loss -= clamped_ln(tr.p_target);
            steps.push(tr);
            state = next;
        }
        if let Some(g) = grads {
            self.backward(&enc, &init, &steps, src, tgt, g, scale);
        }
        Ok(loss)
    }

    #[allow(clippy::too_many_arguments)]
    fn backward(
        &self,
        enc: &EncoderTrace,
        init: &DecoderState,
        steps: &[StepTrace],
        src: &[usize],
        tgt: &[usize],
        g: &mut ModelParams,
        scale: f64,
    ) {
        let p = &self.params;
        let cfg = self.config;
        let (h, layers) = (cfg.hidden, cfg.layers);
        let memory = &enc.states.memory;
        let n = memory.nrows();
        let t_len = steps.len();

        // accumulated over steps, applied as matrix products at the end
        let mut d_scores = Array2::zeros((t_len, n));
        let mut d_ctx = Array2::zeros((t_len, h));
        let mut queries = Array2::zeros((t_len, h));
        let mut alphas = Array2::zeros((t_len, n));
        let mut dec_dz: Vec<Array2<f64>> = (0..layers).map(|_| Array2::zeros((t_len, 4 * h))).collect();
        let mut dec_in: Vec<Array2<f64>> = (0..layers).map(|l| Array2::zeros((t_len, p.dec[l].w.ncols()))).collect();
        let mut dec_hprev: Vec<Array2<f64>> = (0..layers).map(|_| Array2::zeros((t_len, h))).collect();

        let mut dh_next: Vec<Array1<f64>> = (0..layers).map(|_| Array1::zeros(h)).collect();
        let mut dc_next: Vec<Array1<f64>> = (0..layers).map(|_| Array1::zeros(h)).collect();
        let mut d_feed = Array1::<f64>::zeros(h);

        for j in (0..t_len).rev() {
            let st = &steps[j];
            let y = st.target;
            let mut d_attn_dropped = std::mem::replace(&mut d_feed, Array1::zeros(h));
            let mut d_alpha = Array1::<f64>::zeros(n);
            if st.p_target > 0.0 && st.p_target.ln() > LOG_FLOOR {
                let gq = -scale / st.p_target;
                let pg = st.p_gen;
                if y < cfg.vocab_size {
                    // d/dlogits of P_V(y) = P_V(y) (e_y - P_V)
                    let coef = gq * pg * st.p_vocab[y];
                    let mut dlogits = st.p_vocab.mapv(|v| -coef * v);
                    dlogits[y] += coef;
                    d_attn_dropped += &p.gen_w.t().dot(&dlogits);
                    ndarray::linalg::general_mat_mul(
                        1.0,
                        &dlogits.view().insert_axis(Axis(1)),
                        &st.attn_dropped.view().insert_axis(Axis(0)),
                        1.0,
                        &mut g.gen_w,
                    );
                    g.gen_b += &dlogits;
                }
                if cfg.copy {
                    let pv = if y < cfg.vocab_size { st.p_vocab[y] } else { 0.0 };
                    let dzc = gq * (pv - st.copy_mass) * pg * (1.0 - pg);
                    g.copy_w.scaled_add(dzc, &st.attn_dropped);
                    g.copy_b[0] += dzc;
                    d_attn_dropped.scaled_add(dzc, &p.copy_w);
                    let dcopy = gq * (1.0 - pg);
                    for (i, &id) in src.iter().enumerate() {
                        if id == y {
                            d_alpha[i] += dcopy;
                        }
                    }
                }
            }
            let d_attn = match &st.attn_mask {
                Some(m) => &d_attn_dropped * m,
                None => d_attn_dropped,
            };
            let dz_out = &d_attn * &st.attn.mapv(|a| 1.0 - a * a);
            ndarray::linalg::general_mat_mul(
                1.0,
                &dz_out.view().insert_axis(Axis(1)),
                &st.concat.view().insert_axis(Axis(0)),
                1.0,
                &mut g.attn_out,
            );
            let d_concat = p.attn_out.t().dot(&dz_out);
            let dc = d_concat.slice(s![..h]);
            let mut dh_top = d_concat.slice(s![h..]).to_owned();
            d_alpha += &memory.dot(&dc);
            d_ctx.row_mut(j).assign(&dc);
            let dot: f64 = st.alpha.dot(&d_alpha);
            let ds = &st.alpha * &d_alpha.mapv(|x| x - dot);
            let dq = memory.t().dot(&ds);
            d_scores.row_mut(j).assign(&ds);
            queries.row_mut(j).assign(&st.query);
            alphas.row_mut(j).assign(&st.alpha);
            ndarray::linalg::general_mat_mul(
                1.0,
                &dq.view().insert_axis(Axis(1)),
                &st.cells[layers - 1].h.view().insert_axis(Axis(0)),
                1.0,
                &mut g.attn_in,
            );
            dh_top += &p.attn_in.t().dot(&dq);

            // decoder stack, top to bottom
            let mut d_out = dh_top;
            for l in (0..layers).rev() {
                let (h_prev, c_prev) = if j == 0 {
                    (init.h[l].view(), init.c[l].view())
                } else {
                    (steps[j - 1].cells[l].h.view(), steps[j - 1].cells[l].c.view())
                };
                let dh = &d_out + &dh_next[l];
                let (dz, dc_prev) = cell_backward(&st.cells[l], c_prev, dh.view(), dc_next[l].view());
                dh_next[l] = p.dec[l].u.t().dot(&dz);
                dc_next[l] = dc_prev;
                let mut d_in = p.dec[l].w.t().dot(&dz);
                dec_dz[l].row_mut(j).assign(&dz);
                dec_in[l].row_mut(j).assign(&st.inputs[l]);
                dec_hprev[l].row_mut(j).assign(&h_prev);
                if let Some(m) = &st.masks[l] {
                    d_in *= m;
                }
                if l > 0 {
                    d_out = d_in;
                } else {
                    let e = cfg.emb_dim;
                    let mut row = g.embedding.row_mut(self.embed_id(tgt[j]));
                    row += &d_in.slice(s![..e]);
                    d_feed = d_in.slice(s![e..]).to_owned();
                }
            }
        }
        for l in 0..layers {
            general_mat_mul(1.0, &dec_dz[l].t(), &dec_in[l], 1.0, &mut g.dec[l].w);
            general_mat_mul(1.0, &dec_dz[l].t(), &dec_hprev[l], 1.0, &mut g.dec[l].u);
            g.dec[l].b += &dec_dz[l].sum_axis(Axis(0));
        }
        // attention parameters and memory bank
        let mut d_memory = d_scores.t().dot(&queries);
        general_mat_mul(1.0, &alphas.t(), &d_ctx, 1.0, &mut d_memory);

        // bridge
        let mut dh_final = Vec::with_capacity(layers);
        let mut dc_final = Vec::with_capacity(layers);
        for l in 0..layers {
            let back = |aff: &Option<super::params::Affine>, gaff: &mut Option<super::params::Affine>, d: &Array1<f64>, x: &Array1<f64>| match (aff, gaff) {
                (Some(a), Some(ga)) => {
                    general_mat_mul(1.0, &d.view().insert_axis(Axis(1)), &x.view().insert_axis(Axis(0)), 1.0, &mut ga.w);
                    ga.b += d;
                    a.w.t().dot(d)
                }
                _ => d.clone(),
            };
            dh_final.push(back(&p.bridge_h, &mut g.bridge_h, &dh_next[l], &enc.states.final_h[l]));
            dc_final.push(back(&p.bridge_c, &mut g.bridge_c, &dc_next[l], &enc.states.final_c[l]));
        }

        // encoder stack, top to bottom
        let hd = cfg.enc_hidden();
        let mut d_layer_out = d_memory;
        for l in (0..layers).rev() {
            let x = &enc.inputs[l];
            let dx_f = back_seq(
                &p.enc_fwd[l],
                &mut g.enc_fwd[l],
                x,
                &enc.fwd[l],
                d_layer_out.slice(s![.., ..hd]),
                dh_final[l].slice(s![..hd]),
                dc_final[l].slice(s![..hd]),
            );
            let dx_b = back_seq(
                &p.enc_bwd[l],
                &mut g.enc_bwd[l],
                x,
                &enc.bwd[l],
                d_layer_out.slice(s![.., hd..]),
                dh_final[l].slice(s![hd..]),
                dc_final[l].slice(s![hd..]),
            );
            let mut dx = dx_f + dx_b;
            if let Some(m) = &enc.masks[l] {
                dx *= m;
            }
            if l > 0 {
                d_layer_out = dx;
            } else {
                for (t, &id) in src.iter().enumerate() {
                    let mut row = g.embedding.row_mut(self.embed_id(id));
                    row += &dx.row(t);
                }
            }
        }
    }
}
