//! One decoder step of an untrained network: how the copy gate mixes the
//! vocabulary distribution with attention over the source.

use linefix::net::{final_distribution, Model, ModelConfig};
use linefix::vocab::BOS_ID;

fn main() -> linefix::Result<()> {
    let cfg = ModelConfig {
        vocab_size: 10,
        emb_dim: 4,
        hidden: 6,
        layers: 1,
        bridge: true,
        copy: true,
    };
    let model = Model::new(cfg, 3)?;
    // two source tokens unknown to the vocabulary: extended ids 10 and 11
    let src_ext = [5, 10, 6, 10, 11];
    let src: Vec<usize> = src_ext.iter().map(|&i| if i >= 10 { 0 } else { i }).collect();
    let enc = model.encode(&src)?;
    let step = model.decode_step(BOS_ID, &model.initial_state(&enc), &enc, &src_ext, 12)?;
    println!("attention {:.3}", step.attention);
    println!("p_gen     {:.3}", step.p_gen);
    println!("P_vocab   {:.3}", step.p_vocab);
    println!("P_final   {:.3}", step.p_final);
    for p_gen in [1.0, 0.0] {
        let d = final_distribution(step.p_vocab.view(), p_gen, step.attention.view(), &src_ext, 12);
        println!("p_gen={p_gen}: {d:.3}");
    }
    Ok(())
}
