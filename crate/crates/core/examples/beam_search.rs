//! Beam search over a toy bigram model, compared with greedy decoding and
//! exhaustive enumeration.

use linefix::infer::{beam_search, exhaustive, greedy, BeamConfig, StepModel};

const WORDS: [&str; 4] = ["a", "b", "c", "</s>"];

/// Next-token table indexed by the previous token (row 4 is the start).
struct Bigram([[f64; 4]; 5]);

impl StepModel for Bigram {
    type State = ();

    fn start(&self) {}

    fn step(&self, prev: usize, _: &()) -> linefix::Result<(Vec<f64>, ())> {
        Ok((self.0[prev].to_vec(), ()))
    }
}

fn show(ids: &[usize]) -> String {
    ids.iter().map(|&i| WORDS[i]).collect::<Vec<_>>().join(" ")
}

fn main() -> linefix::Result<()> {
    let model = Bigram([
        [0.1, 0.5, 0.1, 0.3],
        [0.3, 0.1, 0.3, 0.3],
        [0.2, 0.2, 0.1, 0.5],
        [0.0, 0.0, 0.0, 1.0],
        [0.4, 0.3, 0.3, 0.0],
    ]);
    let cfg = BeamConfig { beam: 3, max_len: 4, bos: 4, eos: 3, blocked: vec![] };
    let g = greedy(&model, &cfg)?;
    println!("greedy: {:<12} {:.4}", show(&g.ids), g.log_prob);
    for beam in [1, 3, 10] {
        println!("beam {beam}:");
        for h in beam_search(&model, &BeamConfig { beam, ..cfg.clone() })? {
            println!("  {:<12} {:.4}{}", show(&h.ids), h.log_prob, if h.finished { "" } else { " (cut)" });
        }
    }
    let all = exhaustive(&model, &cfg)?;
    println!("exhaustive: {} sequences, best {} {:.4}", all.len(), show(&all[0].0), all[0].1);
    Ok(())
}
