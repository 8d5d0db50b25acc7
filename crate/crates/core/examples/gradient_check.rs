//! Compares analytic gradients with central finite differences on a small
//! network, one line per parameter group.

use linefix::net::{gradient_check, Model, ModelConfig};
use linefix::vocab::{EncodedSample, BOS_ID, EOS_ID, UNK_ID};

fn main() -> linefix::Result<()> {
    let cfg = ModelConfig {
        vocab_size: 20,
        emb_dim: 6,
        hidden: 8,
        layers: 2,
        bridge: true,
        copy: true,
    };
    let mut model = Model::new(cfg, 1)?;
    model.params.scale(5.0);
    let sample = EncodedSample {
        src_ids: vec![7, UNK_ID, 9, 7, 12],
        src_ext_ids: vec![7, 20, 9, 7, 12],
        oov_list: vec!["count".into()],
        tgt_ext_ids: Some(vec![BOS_ID, 9, 20, 7, EOS_ID]),
        tgt_ids: Some(vec![BOS_ID, 9, UNK_ID, 7, EOS_ID]),
    };
    println!("{} parameters, loss {:.6}", model.params.count(), model.sequence_loss(&sample, 0.0, None)?);
    println!("{:<14} {:>8} {:>12} {:>12}", "group", "size", "rel error", "max abs");
    for g in gradient_check(&model, &sample, 1e-5)? {
        println!("{:<14} {:>8} {:>12.2e} {:>12.2e}", g.name, g.elements, g.relative_error, g.max_abs_error);
    }
    Ok(())
}
