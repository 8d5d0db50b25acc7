//! Repairs one line with a trained checkpoint and prints the candidate
//! patches as unified diffs.
//!
//! ```text
//! cargo run --release --example train_minicorpus
//! cargo run --release --example repair -- minicorpus.ckpt [File.java line]
//! ```

use linefix::context::RepairTask;
use linefix::infer::{repair, BeamConfig, PrepareOptions};
use linefix::net::Checkpoint;

const SAMPLE: &str = "public class Counter {
    private int limit;

    public Counter(int limit) {
        this.limit = limit;
    }

    public int next(int value) {
        return value - 1;
    }
}
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ck_path = args.first().map_or("minicorpus.ckpt", String::as_str);
    let ck = Checkpoint::load(ck_path.as_ref())?;
    let task = match &args[1.min(args.len())..] {
        [file, line, ..] => RepairTask::new(file.clone(), std::fs::read_to_string(file)?, line.parse()?),
        _ => RepairTask::new("Counter.java", SAMPLE, 9),
    };
    let out = repair(&ck, &task, &BeamConfig::with_beam(10), &PrepareOptions { file_name: task.task_id.clone(), dedup: true })?;
    println!("buggy line: {}", task.buggy_line_text().unwrap_or("").trim());
    println!("{} hypotheses, {} candidates\n", out.hypotheses.len(), out.candidates.len());
    for c in out.candidates.iter().take(3) {
        println!("#{} log p = {:.3}", c.rank, c.log_prob);
        print!("{}", c.diff);
    }
    for c in out.candidates.iter().skip(3) {
        println!("#{} {:.3} {}", c.rank, c.log_prob, c.prepared_line);
    }
    Ok(())
}
