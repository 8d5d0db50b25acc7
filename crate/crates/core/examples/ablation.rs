//! A two-row ablation grid on a slice of the mini-corpus, small enough to
//! finish in a few minutes. `configs/ablation.toml` is the full grid for
//! the `linefix ablate` command.

use std::path::Path;

use linefix::pipeline::{ablation_grid, ingest_dataset, render_table, AblationGrid, Dataset, ExperimentConfig, Format};

const GRID: &str = r#"
runs = 2

[[entry]]
id = "no-copy"
description = "without the copy mechanism"
overrides = { "model.copy" = false }

[[entry]]
id = "beam-1"
description = "greedy decoding"
overrides = { beam = 1 }
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut golden = ExperimentConfig::from_toml(&std::fs::read_to_string(root.join("configs/mini.toml"))?)?;
    golden.train.iterations = 300;
    let (train, _) = ingest_dataset(&root.join("data/minicorpus/train"), Format::RawJava)?;
    let (test, _) = ingest_dataset(&root.join("data/minicorpus/test"), Format::RawJava)?;
    let train = Dataset { samples: train.samples[..200].to_vec(), ..train };
    let results = ablation_grid(&golden, &AblationGrid::from_toml(GRID)?, &train, &test)?;
    print!("{}", render_table(&results));
    Ok(())
}
