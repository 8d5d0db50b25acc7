use ndarray::Array1;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::vocab::{EncodedSample, BOS_ID, EOS_ID, UNK_ID};

fn tiny(copy: bool, bridge: bool) -> ModelConfig {
    ModelConfig {
        vocab_size: 20,
        emb_dim: 6,
        hidden: 8,
        layers: 2,
        bridge,
        copy,
    }
}

/// Source with a repeated token and two OOVs (extended ids 20 and 21).
fn sample() -> EncodedSample {
    EncodedSample {
        src_ids: vec![7, UNK_ID, 9, 7, UNK_ID, 12],
        src_ext_ids: vec![7, 20, 9, 7, 21, 12],
        oov_list: vec!["foo".into(), "bar".into()],
        tgt_ext_ids: Some(vec![BOS_ID, 9, 20, 7, 21, EOS_ID]),
        tgt_ids: Some(vec![BOS_ID, 9, UNK_ID, 7, UNK_ID, EOS_ID]),
    }
}

fn model(cfg: ModelConfig, seed: u64) -> Model {
    let mut m = Model::new(cfg, seed).unwrap();
    // larger weights give gradients well above rounding noise
    m.params.scale(5.0);
    m
}

#[test]
fn gradients_match_finite_differences() {
    for (copy, bridge) in [(true, true), (false, true), (true, false)] {
        let m = model(tiny(copy, bridge), 3);
        for g in gradient_check(&m, &sample(), 1e-5).unwrap() {
            assert!(g.relative_error < 1e-4, "copy={copy} bridge={bridge} {}: {}", g.name, g.relative_error);
            assert!(g.max_abs_error < 1e-8, "{}: {}", g.name, g.max_abs_error);
        }
    }
}

#[test]
fn gradients_scale_linearly() {
    let m = model(tiny(true, true), 1);
    let (loss, g1) = m.gradients(&sample()).unwrap();
    let mut g2 = ModelParams::zeros(&m.config);
    let loss2 = m.accumulate_gradients(&sample(), &mut g2, 0.5, 0.0, None).unwrap();
    assert_eq!(loss, loss2);
    g2.axpy(-0.5, &g1);
    assert!(g2.l2_norm() < 1e-12);
}

#[test]
fn loss_equals_sum_of_teacher_forced_log_probs() {
    let m = model(tiny(true, true), 2);
    let (probs, argmax) = m.score_targets(&sample()).unwrap();
    assert_eq!(probs.len(), 5);
    assert_eq!(argmax.len(), 5);
    let nll: f64 = probs.iter().map(|p| -p.ln()).sum();
    let loss = m.sequence_loss(&sample(), 0.0, None).unwrap();
    assert!((nll - loss).abs() < 1e-9);
}

#[test]
fn dropout_is_deterministic_per_seed() {
    let m = model(tiny(true, true), 2);
    let loss = |seed| m.sequence_loss(&sample(), 0.3, Some(&mut ChaCha8Rng::seed_from_u64(seed))).unwrap();
    assert_eq!(loss(5), loss(5));
    assert_ne!(loss(5), loss(6));
    assert_eq!(m.sequence_loss(&sample(), 0.0, None).unwrap(), m.sequence_loss(&sample(), 0.0, Some(&mut ChaCha8Rng::seed_from_u64(1))).unwrap());
}

#[test]
fn copy_disabled_has_unit_gate_and_vocab_only_support() {
    let m = model(tiny(false, true), 4);
    let s = sample();
    let enc = m.encode(&s.src_ids).unwrap();
    let step = m.decode_step(BOS_ID, &m.initial_state(&enc), &enc, &s.src_ids, 20).unwrap();
    assert_eq!(step.p_gen, 1.0);
    assert_eq!(step.p_final, step.p_vocab);
}

#[test]
fn decode_step_rejects_mismatched_shapes() {
    let m = model(tiny(true, true), 4);
    let s = sample();
    let enc = m.encode(&s.src_ids).unwrap();
    let st = m.initial_state(&enc);
    assert!(m.decode_step(BOS_ID, &st, &enc, &s.src_ext_ids, 21).is_err());
    assert!(m.decode_step(BOS_ID, &st, &enc, &s.src_ext_ids[..3], 22).is_err());
    assert!(m.encode(&[]).is_err());
}

#[test]
fn final_distribution_extremes() {
    let pv = Array1::from(vec![0.1, 0.2, 0.3, 0.4]);
    let alpha = Array1::from(vec![0.5, 0.25, 0.25]);
    let ids = [1, 4, 1];
    let gen = final_distribution(pv.view(), 1.0, alpha.view(), &ids, 5);
    assert_eq!(gen.to_vec(), vec![0.1, 0.2, 0.3, 0.4, 0.0]);
    let copy = final_distribution(pv.view(), 0.0, alpha.view(), &ids, 5);
    assert_eq!(copy.to_vec(), vec![0.0, 0.75, 0.0, 0.0, 0.25]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distributions_are_normalised(seed in any::<u64>(), n in 1usize..8, prev in 0usize..22) {
        let m = Model::new(tiny(true, true), seed).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let ext: Vec<usize> = (0..n).map(|_| rng.gen_range(4..22)).collect();
        let src: Vec<usize> = ext.iter().map(|&i| if i < 20 { i } else { UNK_ID }).collect();
        let enc = m.encode(&src).unwrap();
        let step = m.decode_step(prev, &m.initial_state(&enc), &enc, &ext, 22).unwrap();
        prop_assert!((step.attention.sum() - 1.0).abs() < 1e-6);
        prop_assert!((step.p_vocab.sum() - 1.0).abs() < 1e-6);
        prop_assert!((step.p_final.sum() - 1.0).abs() < 1e-6);
        for id in 20..22 {
            if !ext.contains(&id) {
                prop_assert_eq!(step.p_final[id], 0.0);
            }
        }
    }
}

#[test]
fn unused_embedding_rows_have_zero_gradient() {
    let m = model(tiny(true, true), 6);
    let (_, g) = m.gradients(&sample()).unwrap();
    let used = [7, UNK_ID, 9, 12, BOS_ID];
    for row in 0..20 {
        let norm: f64 = g.embedding.row(row).iter().map(|x| x * x).sum();
        if used.contains(&row) {
            assert!(norm > 0.0, "row {row}");
        } else {
            assert_eq!(norm, 0.0, "row {row}");
        }
    }
}

#[test]
fn copy_gate_receives_gradient() {
    let m = model(tiny(true, true), 7);
    let (_, g) = m.gradients(&sample()).unwrap();
    assert!(g.copy_w.iter().any(|&x| x != 0.0));
    assert_ne!(g.copy_b[0], 0.0);
}

#[test]
fn encoder_is_order_sensitive() {
    let m = Model::new(tiny(true, true), 8).unwrap();
    let a = m.encode(&[5, 6, 7]).unwrap();
    let b = m.encode(&[6, 5, 7]).unwrap();
    assert_eq!(a.memory.dim(), (3, 8));
    assert_ne!(a.memory, b.memory);
    assert_eq!(m.encode(&[5]).unwrap().memory.nrows(), 1);
}

#[test]
fn gradient_descent_reduces_loss() {
    let mut m = Model::new(tiny(true, true), 9).unwrap();
    let first = m.sequence_loss(&sample(), 0.0, None).unwrap();
    for _ in 0..50 {
        let (_, g) = m.gradients(&sample()).unwrap();
        m.params.axpy(-0.1, &g);
    }
    let last = m.sequence_loss(&sample(), 0.0, None).unwrap();
    assert!(last < first, "{last} >= {first}");
}
