//! Trains the small configuration on the bundled mini-corpus and writes a
//! checkpoint used by the `repair` and `evaluate` examples.
//!
//! ```text
//! cargo run --release --example train_minicorpus -- [out.ckpt]
//! ```

use std::path::Path;
use std::time::Instant;

use linefix::pipeline::{ingest_dataset, train_model, ExperimentConfig, Format};
use linefix::train::Control;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "minicorpus.ckpt".into());
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let cfg = ExperimentConfig::from_toml(&std::fs::read_to_string(root.join("configs/mini.toml"))?)?;
    let (data, report) = ingest_dataset(&root.join("data/minicorpus/train"), Format::RawJava)?;
    println!("{} training samples, {} rejected", report.loaded, report.rejected.len());
    let start = Instant::now();
    let (ck, outcome) = train_model(&cfg, &data, None, |it, _, records| {
        for r in records {
            println!("{it:>5} {:<5} accuracy {:.3} perplexity {:.4}", r.split, r.accuracy, r.perplexity);
        }
        Ok(Control::Continue)
    })?;
    println!(
        "best at iteration {} of {}, {:.0}s",
        outcome.best_iteration,
        outcome.iterations_run,
        start.elapsed().as_secs_f64()
    );
    ck.save(Path::new(&out))?;
    println!("wrote {out}");
    Ok(())
}
