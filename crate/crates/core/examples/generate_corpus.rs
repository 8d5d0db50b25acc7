//! Writes a synthetic corpus in the raw-java layout.
//!
//! ```text
//! cargo run --example generate_corpus -- <out-dir> [train-count] [test-count]
//! ```
//!
//! With the defaults this reproduces the bundled `data/minicorpus`.

use std::path::PathBuf;

use linefix::corpus::{generate, write_raw_java, Pattern, MINI_TEST, MINI_TRAIN};

fn main() -> linefix::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = PathBuf::from(args.next().unwrap_or_else(|| "minicorpus".into()));
    let train_n = args.next().map_or(MINI_TRAIN.1, |s| s.parse().expect("train count"));
    let test_n = args.next().map_or(MINI_TEST.1, |s| s.parse().expect("test count"));
    for (split, seed, n) in [("train", MINI_TRAIN.0, train_n), ("test", MINI_TEST.0, test_n)] {
        let tasks: Vec<_> = generate(seed, n, &Pattern::ALL).into_iter().map(|(_, t)| t).collect();
        write_raw_java(&out.join(split), &tasks)?;
        println!("{split}: {n} samples (seed {seed})");
    }
    Ok(())
}
