use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::net::{Model, ModelConfig};
use crate::vocab::{BOS_ID, EOS_ID, PAD_ID, UNK_ID};

/// Fixed random next-token distributions keyed by the prefix.
struct Table {
    seed: u64,
    vocab: usize,
}

impl StepModel for Table {
    type State = Vec<usize>;

    fn start(&self) -> Vec<usize> {
        Vec::new()
    }

    fn step(&self, prev: usize, state: &Vec<usize>) -> crate::Result<(Vec<f64>, Vec<usize>)> {
        let mut path = state.clone();
        path.push(prev);
        let key = path.iter().fold(self.seed, |h, &x| h.wrapping_mul(1_000_003).wrapping_add(x as u64 + 1));
        let mut rng = ChaCha8Rng::seed_from_u64(key);
        let w: Vec<f64> = (0..self.vocab).map(|_| rng.gen_range(0.05..1.0)).collect();
        let total: f64 = w.iter().sum();
        Ok((w.iter().map(|x| x / total).collect(), path))
    }
}

fn table_cfg(beam: usize, max_len: usize) -> BeamConfig {
    BeamConfig {
        beam,
        max_len,
        bos: 99,
        eos: 2,
        blocked: vec![],
    }
}

fn ranking<S>(hyps: &[Hypothesis<S>]) -> Vec<(Vec<usize>, f64)> {
    hyps.iter().map(|h| (h.ids.clone(), h.log_prob)).collect()
}

#[test]
fn unbounded_beam_matches_enumeration() {
    for seed in 0..20 {
        let m = Table { seed, vocab: 3 };
        let all = exhaustive(&m, &table_cfg(1, 3)).unwrap();
        // 1 + 2 + 4 finished, 8 cut at the length limit
        assert_eq!(all.len(), 15);
        let beam = beam_search(&m, &table_cfg(all.len(), 3)).unwrap();
        assert_eq!(ranking(&beam), all);
    }
}

#[test]
fn beam_one_is_greedy() {
    for seed in 0..50 {
        let m = Table { seed, vocab: 4 };
        let cfg = table_cfg(1, 6);
        let b = beam_search(&m, &cfg).unwrap();
        let g = greedy(&m, &cfg).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].ids, g.ids);
        assert_eq!(b[0].log_prob, g.log_prob);
    }
}

#[test]
fn zero_beam_rejected() {
    assert!(beam_search(&Table { seed: 0, vocab: 3 }, &table_cfg(0, 3)).is_err());
}

#[test]
fn finished_flag_and_scores_are_consistent() {
    let m = Table { seed: 4, vocab: 5 };
    for h in beam_search(&m, &table_cfg(8, 5)).unwrap() {
        assert_eq!(h.finished, h.ids.last() == Some(&2));
        assert!(h.log_prob <= 0.0);
        assert!(h.ids.len() <= 5);
    }
}

#[test]
fn blocked_ids_never_appear() {
    let m = Table { seed: 9, vocab: 5 };
    let cfg = BeamConfig {
        blocked: vec![0, 3],
        ..table_cfg(10, 4)
    };
    for h in beam_search(&m, &cfg).unwrap() {
        assert!(!h.ids.contains(&0) && !h.ids.contains(&3));
    }
}

/// Vocabulary {<unk>, <pad>, <s>, </s>, a, b}; with the first three blocked
/// the network chooses among three tokens.
#[test]
fn network_beam_matches_enumeration() {
    let cfg = ModelConfig {
        vocab_size: 6,
        emb_dim: 4,
        hidden: 6,
        layers: 2,
        bridge: true,
        copy: true,
    };
    let model = Model::new(cfg, 21).unwrap();
    let src = [4, 5, 4];
    let stepper = NetStepper::new(&model, &src, &src, 6).unwrap();
    let bc = BeamConfig {
        beam: 1,
        max_len: 3,
        bos: BOS_ID,
        eos: EOS_ID,
        blocked: vec![UNK_ID, PAD_ID, BOS_ID],
    };
    let all = exhaustive(&stepper, &bc).unwrap();
    assert_eq!(all.len(), 15);
    let beam = beam_search(&stepper, &BeamConfig { beam: 15, ..bc.clone() }).unwrap();
    assert_eq!(ranking(&beam), all);
    let one = beam_search(&stepper, &bc).unwrap();
    assert_eq!(one[0].ids, greedy(&stepper, &bc).unwrap().ids);
}

/// Widening the beam can lose the hypothesis a narrower beam found: here
/// beam 2 prunes the greedy path at step two.
#[test]
fn wider_beam_can_lose_the_narrow_optimum() {
    let m = Table { seed: 8040387605903247295, vocab: 4 };
    let narrow = beam_search(&m, &table_cfg(1, 5)).unwrap();
    let wide = beam_search(&m, &table_cfg(2, 5)).unwrap();
    assert_eq!(narrow[0].ids, vec![0, 1, 0, 2]);
    assert!(wide[0].log_prob < narrow[0].log_prob);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exhaustive_top_dominates_every_beam(seed in any::<u64>(), k in 1usize..6) {
        let m = Table { seed, vocab: 4 };
        let best = exhaustive(&m, &table_cfg(1, 4)).unwrap()[0].1;
        let top = beam_search(&m, &table_cfg(k, 4)).unwrap()[0].log_prob;
        prop_assert!(best >= top);
    }
}
