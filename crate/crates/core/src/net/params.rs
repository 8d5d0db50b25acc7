use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Network shape and switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelConfig {
    /// Vocabulary size including the four special tokens.
    pub vocab_size: usize,
    pub emb_dim: usize,
    /// Decoder width; each encoder direction runs at half of it.
    pub hidden: usize,
    pub layers: usize,
    pub bridge: bool,
    pub copy: bool,
}

impl ModelConfig {
    /// 1,004 tokens, 256-wide embeddings and states, two layers.
    pub fn golden() -> Self {
        Self {
            vocab_size: 1004,
            emb_dim: 256,
            hidden: 256,
            layers: 2,
            bridge: true,
            copy: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.vocab_size < 5 || self.emb_dim == 0 || self.hidden == 0 || self.layers == 0 {
            return Err(Error::Config(format!("degenerate model shape {self:?}")));
        }
        if !self.hidden.is_multiple_of(2) {
            return Err(Error::Config(format!(
                "hidden size {} must be even to split across the two encoder directions",
                self.hidden
            )));
        }
        Ok(())
    }

    pub fn enc_hidden(&self) -> usize {
        self.hidden / 2
    }
}

/// Gate weights of one LSTM layer, gates stacked as input, forget, cell,
/// output.
#[derive(Debug, Clone, PartialEq)]
pub struct LstmParams {
    /// 4h x input
    pub w: Array2<f64>,
    /// 4h x h
    pub u: Array2<f64>,
    pub b: Array1<f64>,
}

impl LstmParams {
    fn zeros(input: usize, hidden: usize) -> Self {
        Self {
            w: Array2::zeros((4 * hidden, input)),
            u: Array2::zeros((4 * hidden, hidden)),
            b: Array1::zeros(4 * hidden),
        }
    }

    pub fn hidden(&self) -> usize {
        self.u.ncols()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Affine {
    pub w: Array2<f64>,
    pub b: Array1<f64>,
}

/// All learnable tensors. The same struct doubles as a gradient
/// accumulator.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// vocab x emb, shared by encoder and decoder inputs
    pub embedding: Array2<f64>,
    pub enc_fwd: Vec<LstmParams>,
    pub enc_bwd: Vec<LstmParams>,
    pub dec: Vec<LstmParams>,
    pub bridge_h: Option<Affine>,
    pub bridge_c: Option<Affine>,
    /// hidden x hidden, bilinear attention score
    pub attn_in: Array2<f64>,
    /// hidden x 2 hidden, maps `[context; decoder state]` to the attentional state
    pub attn_out: Array2<f64>,
    /// vocab x hidden
    pub gen_w: Array2<f64>,
    pub gen_b: Array1<f64>,
    /// hidden, copy gate weights
    pub copy_w: Array1<f64>,
    pub copy_b: Array1<f64>,
}

impl ModelParams {
    pub fn zeros(cfg: &ModelConfig) -> Self {
        let (v, e, h, hd) = (cfg.vocab_size, cfg.emb_dim, cfg.hidden, cfg.enc_hidden());
        let enc = |first: bool| LstmParams::zeros(if first { e } else { h }, hd);
        let affine = || Affine {
            w: Array2::zeros((h, h)),
            b: Array1::zeros(h),
        };
        Self {
            embedding: Array2::zeros((v, e)),
            enc_fwd: (0..cfg.layers).map(|l| enc(l == 0)).collect(),
            enc_bwd: (0..cfg.layers).map(|l| enc(l == 0)).collect(),
            dec: (0..cfg.layers)
                .map(|l| LstmParams::zeros(if l == 0 { e + h } else { h }, h))
                .collect(),
            bridge_h: cfg.bridge.then(affine),
            bridge_c: cfg.bridge.then(affine),
            attn_in: Array2::zeros((h, h)),
            attn_out: Array2::zeros((h, 2 * h)),
            gen_w: Array2::zeros((v, h)),
            gen_b: Array1::zeros(v),
            copy_w: Array1::zeros(h),
            copy_b: Array1::zeros(1),
        }
    }

    /// Uniform values in [-0.1, 0.1] from ChaCha8 seeded with `seed`;
    /// forget-gate biases start at 1.
    pub fn init(cfg: &ModelConfig, seed: u64) -> Result<Self> {
        cfg.validate()?;
        let mut params = Self::zeros(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (_, values) in params.tensors_mut() {
            for x in values.iter_mut() {
                *x = rng.gen_range(-0.1..=0.1);
            }
        }
        for lstm in params.enc_fwd.iter_mut().chain(params.enc_bwd.iter_mut()).chain(params.dec.iter_mut()) {
            let h = lstm.hidden();
            lstm.b.slice_mut(ndarray::s![h..2 * h]).fill(1.0);
        }
        Ok(params)
    }

    /// Every tensor with a stable name, in checkpoint order.
    pub fn tensors(&self) -> Vec<(String, &[f64], Vec<usize>)> {
        let mut out: Vec<(String, &[f64], Vec<usize>)> = Vec::new();
        fn s2(a: &Array2<f64>) -> &[f64] {
            a.as_slice().expect("standard layout")
        }
        fn s1(a: &Array1<f64>) -> &[f64] {
            a.as_slice().expect("standard layout")
        }
        out.push(("embedding".into(), s2(&self.embedding), self.embedding.shape().to_vec()));
        for (dir, stack) in [("enc_fwd", &self.enc_fwd), ("enc_bwd", &self.enc_bwd), ("dec", &self.dec)] {
            for (l, p) in stack.iter().enumerate() {
                out.push((format!("{dir}.{l}.w"), s2(&p.w), p.w.shape().to_vec()));
                out.push((format!("{dir}.{l}.u"), s2(&p.u), p.u.shape().to_vec()));
                out.push((format!("{dir}.{l}.b"), s1(&p.b), p.b.shape().to_vec()));
            }
        }
        for (name, aff) in [("bridge_h", &self.bridge_h), ("bridge_c", &self.bridge_c)] {
            if let Some(a) = aff {
                out.push((format!("{name}.w"), s2(&a.w), a.w.shape().to_vec()));
                out.push((format!("{name}.b"), s1(&a.b), a.b.shape().to_vec()));
            }
        }
        out.push(("attn_in".into(), s2(&self.attn_in), self.attn_in.shape().to_vec()));
        out.push(("attn_out".into(), s2(&self.attn_out), self.attn_out.shape().to_vec()));
        out.push(("gen_w".into(), s2(&self.gen_w), self.gen_w.shape().to_vec()));
        out.push(("gen_b".into(), s1(&self.gen_b), self.gen_b.shape().to_vec()));
        out.push(("copy_w".into(), s1(&self.copy_w), self.copy_w.shape().to_vec()));
        out.push(("copy_b".into(), s1(&self.copy_b), self.copy_b.shape().to_vec()));
        out
    }

    pub fn tensors_mut(&mut self) -> Vec<(String, &mut [f64])> {
        let mut out: Vec<(String, &mut [f64])> = Vec::new();
        fn m2(a: &mut Array2<f64>) -> &mut [f64] {
            a.as_slice_mut().expect("standard layout")
        }
        fn m1(a: &mut Array1<f64>) -> &mut [f64] {
            a.as_slice_mut().expect("standard layout")
        }
        out.push(("embedding".into(), m2(&mut self.embedding)));
        for (dir, stack) in [("enc_fwd", &mut self.enc_fwd), ("enc_bwd", &mut self.enc_bwd), ("dec", &mut self.dec)] {
            for (l, p) in stack.iter_mut().enumerate() {
                out.push((format!("{dir}.{l}.w"), m2(&mut p.w)));
                out.push((format!("{dir}.{l}.u"), m2(&mut p.u)));
                out.push((format!("{dir}.{l}.b"), m1(&mut p.b)));
            }
        }
        for (name, aff) in [("bridge_h", &mut self.bridge_h), ("bridge_c", &mut self.bridge_c)] {
            if let Some(a) = aff {
                out.push((format!("{name}.w"), m2(&mut a.w)));
                out.push((format!("{name}.b"), m1(&mut a.b)));
            }
        }
        out.push(("attn_in".into(), m2(&mut self.attn_in)));
        out.push(("attn_out".into(), m2(&mut self.attn_out)));
        out.push(("gen_w".into(), m2(&mut self.gen_w)));
        out.push(("gen_b".into(), m1(&mut self.gen_b)));
        out.push(("copy_w".into(), m1(&mut self.copy_w)));
        out.push(("copy_b".into(), m1(&mut self.copy_b)));
        out
    }

    pub fn count(&self) -> usize {
        self.tensors().iter().map(|(_, v, _)| v.len()).sum()
    }

    /// `self += alpha * other`; both must share a shape.
    pub fn axpy(&mut self, alpha: f64, other: &ModelParams) {
        let src = other.tensors();
        for ((_, dst), (_, s, _)) in self.tensors_mut().into_iter().zip(src) {
            for (d, x) in dst.iter_mut().zip(s) {
                *d += alpha * x;
            }
        }
    }

    pub fn scale(&mut self, alpha: f64) {
        for (_, values) in self.tensors_mut() {
            values.iter_mut().for_each(|x| *x *= alpha);
        }
    }

    pub fn fill_zero(&mut self) {
        for (_, values) in self.tensors_mut() {
            values.iter_mut().for_each(|x| *x = 0.0);
        }
    }

    pub fn l2_norm(&self) -> f64 {
        self.tensors()
            .iter()
            .flat_map(|(_, v, _)| v.iter())
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    pub fn all_finite(&self) -> bool {
        self.tensors().iter().all(|(_, v, _)| v.iter().all(|x| x.is_finite()))
    }

    pub fn check_shapes(&self, cfg: &ModelConfig) -> Result<()> {
        let want = Self::zeros(cfg);
        let a: Vec<_> = self.tensors().into_iter().map(|(n, _, s)| (n, s)).collect();
        let b: Vec<_> = want.tensors().into_iter().map(|(n, _, s)| (n, s)).collect();
        if a != b {
            return Err(Error::Shape("parameters do not match the model configuration".into()));
        }
        Ok(())
    }
}
