use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _};
use clap::{Args, Parser, Subcommand};

use linefix::context::RepairTask;
use linefix::infer::{repair, validate_all, CategoryCounts, PrepareOptions, ValidationHooks};
use linefix::net::Checkpoint;
use linefix::pipeline::{
    ablation_grid, copy_origin_analysis, dataset_stats, evaluate_exact_match, ingest_dataset, render_csv,
    render_table, AblationGrid, Dataset, ExperimentConfig, Format, IngestReport,
};
use linefix::train::{append_metric_log, Control};

#[derive(Parser)]
#[command(name = "linefix", version, about = "One-line program repair with a copy-augmented seq2seq model")]
struct Cli {
    /// Experiment configuration (TOML)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the training seed
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Checkpoint to write (train) or read (everything else)
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
    /// Beam size
    #[arg(long, global = true)]
    beam: Option<usize>,
    /// Context token limit, 0 for none
    #[arg(long, global = true)]
    truncation: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DataArgs {
    /// Dataset directory or JSONL file
    #[arg(long)]
    data: PathBuf,
    /// raw-java, token-pairs or jsonl; guessed when omitted
    #[arg(long)]
    format: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Train a model and write the best checkpoint
    Train {
        #[command(flatten)]
        data: DataArgs,
        /// CSV metric log to append to
        #[arg(long)]
        metrics: Option<PathBuf>,
        /// Directory for a checkpoint at every evaluation point
        #[arg(long)]
        snapshots: Option<PathBuf>,
    },
    /// Print candidate patches for a buggy line as unified diffs
    Repair {
        /// Buggy Java file
        #[arg(long)]
        file: PathBuf,
        /// 1-based suspicious line
        #[arg(long)]
        line: usize,
        /// TOML with compile_cmd, test_cmd and timeout_secs
        #[arg(long)]
        hooks: Option<PathBuf>,
        /// Write each diff to its own file here instead of stdout
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Drop candidates that repeat a better-ranked line
        #[arg(long)]
        dedup: bool,
    },
    /// Count exact matches on a test set
    Eval {
        #[command(flatten)]
        data: DataArgs,
        /// Per-sample verdicts as CSV
        #[arg(long)]
        verdicts: Option<PathBuf>,
    },
    /// Classify solved samples by where their copied tokens come from
    CopyAnalysis {
        #[command(flatten)]
        data: DataArgs,
    },
    /// Train and evaluate every row of an ablation grid
    Ablate {
        /// Grid definition (TOML)
        #[arg(long)]
        grid: PathBuf,
        #[arg(long)]
        train: PathBuf,
        #[arg(long)]
        test: PathBuf,
        /// Write the table as CSV too
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Length and frequency statistics of a dataset
    Stats {
        #[command(flatten)]
        data: DataArgs,
        /// Number of most frequent tokens to list
        #[arg(long, default_value_t = 20)]
        top: usize,
    },
    /// Load, filter and deduplicate a dataset into JSON lines
    Ingest {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

fn guess_format(path: &Path, explicit: Option<&str>) -> anyhow::Result<Format> {
    if let Some(f) = explicit {
        return Ok(f.parse()?);
    }
    Ok(if path.is_file() {
        Format::Jsonl
    } else if path.join("src.txt").exists() {
        Format::TokenPairs
    } else {
        Format::RawJava
    })
}

fn load(args: &DataArgs) -> anyhow::Result<(Dataset, IngestReport)> {
    let format = guess_format(&args.data, args.format.as_deref())?;
    let (ds, report) = ingest_dataset(&args.data, format)?;
    eprintln!(
        "{}: {} samples, {} duplicates, {} rejected",
        args.data.display(),
        report.loaded,
        report.duplicates,
        report.rejected.len()
    );
    Ok((ds, report))
}

fn experiment(cli: &Cli) -> anyhow::Result<ExperimentConfig> {
    let mut cfg = match &cli.config {
        Some(p) => ExperimentConfig::from_toml(&fs::read_to_string(p).with_context(|| p.display().to_string())?)?,
        None => ExperimentConfig::default(),
    };
    if let Some(s) = cli.seed {
        cfg.train.seed = s;
    }
    if let Some(b) = cli.beam {
        cfg.beam = b;
    }
    if let Some(t) = cli.truncation {
        cfg.context.limit = (t > 0).then_some(t);
    }
    cfg.validate()?;
    Ok(cfg)
}

fn checkpoint(cli: &Cli) -> anyhow::Result<Checkpoint> {
    let Some(p) = &cli.checkpoint else { bail!("--checkpoint is required") };
    Ok(Checkpoint::load(p)?)
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let cfg = experiment(cli)?;
    match &cli.command {
        Command::Train { data, metrics, snapshots } => {
            let Some(out) = &cli.checkpoint else { bail!("--checkpoint is required") };
            let (ds, _) = load(data)?;
            if let Some(dir) = snapshots {
                fs::create_dir_all(dir).with_context(|| dir.display().to_string())?;
            }
            let (ck, outcome) = linefix::pipeline::train_model(&cfg, &ds, snapshots.as_deref(), |it, _, records| {
                for r in records {
                    eprintln!("iter {it} {} accuracy {:.4} perplexity {:.4}", r.split, r.accuracy, r.perplexity);
                }
                if let Some(m) = metrics {
                    append_metric_log(m, records)?;
                }
                Ok(Control::Continue)
            })?;
            ck.save(out)?;
            eprintln!("best iteration {} written to {}", outcome.best_iteration, out.display());
        }
        Command::Repair { file, line, hooks, out_dir, dedup } => {
            let ck = checkpoint(cli)?;
            let source = fs::read_to_string(file).with_context(|| file.display().to_string())?;
            let name = file.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let task = RepairTask::new(name.clone(), source, *line);
            let opts = PrepareOptions { file_name: name.clone(), dedup: *dedup || cfg.dedup_candidates };
            let mut bc = cfg.beam_config();
            bc.beam = cli.beam.unwrap_or(cfg.beam);
            let mut out = repair(&ck, &task, &bc, &opts)?;
            eprintln!("{} hypotheses, {} candidates", out.hypotheses.len(), out.candidates.len());
            if let Some(h) = hooks {
                let text = fs::read_to_string(h).with_context(|| h.display().to_string())?;
                let hooks: ValidationHooks = toml::from_str(&text)?;
                validate_all(&mut out.candidates, &name, &hooks)?;
                let c = CategoryCounts::from_candidates(&out.candidates);
                eprintln!("generated {} compilable {} plausible {}", c.generated, c.compilable, c.plausible);
            }
            if let Some(dir) = out_dir {
                fs::create_dir_all(dir).with_context(|| dir.display().to_string())?;
            }
            for c in &out.candidates {
                match out_dir {
                    Some(dir) => {
                        let p = dir.join(format!("candidate-{:03}.diff", c.rank));
                        fs::write(&p, &c.diff).with_context(|| p.display().to_string())?;
                    }
                    None => print!("{}", c.diff),
                }
                eprintln!("#{} {:.4} {:?} {}", c.rank, c.log_prob, c.status, c.prepared_line);
            }
        }
        Command::Eval { data, verdicts } => {
            let ck = checkpoint(cli)?;
            let (ds, _) = load(data)?;
            let rep = evaluate_exact_match(&ck, &ds, &cfg.beam_config())?;
            println!("exact match: {}/{} ({:.1}%)", rep.solved, rep.total, 100.0 * rep.accuracy());
            println!("medium subset: {}/{}", rep.medium_solved, rep.medium_total);
            if let Some(p) = verdicts {
                let mut text = String::from("id,solved,rank,medium\n");
                for v in &rep.verdicts {
                    text.push_str(&format!("{},{},{},{}\n", v.id, v.solved, v.rank.map(|r| r.to_string()).unwrap_or_default(), v.medium));
                }
                fs::write(p, text).with_context(|| p.display().to_string())?;
            }
        }
        Command::CopyAnalysis { data } => {
            let ck = checkpoint(cli)?;
            let (ds, _) = load(data)?;
            let rep = evaluate_exact_match(&ck, &ds, &cfg.beam_config())?;
            let copy = copy_origin_analysis(&ck, &ds, &rep)?;
            println!("solved: {}/{}", rep.solved, rep.total);
            for (bucket, n) in &copy.histogram {
                println!("{bucket:?}: {n}");
            }
            match copy.median_distance() {
                Some(m) => println!("median distance to buggy line: {m} tokens ({} copied tokens)", copy.distances.len()),
                None => println!("no tokens copied from outside the buggy line"),
            }
        }
        Command::Ablate { grid, train, test, csv } => {
            let text = fs::read_to_string(grid).with_context(|| grid.display().to_string())?;
            let grid = AblationGrid::from_toml(&text)?;
            let (train, _) = load(&DataArgs { data: train.clone(), format: None })?;
            let (test, _) = load(&DataArgs { data: test.clone(), format: None })?;
            let results = ablation_grid(&cfg, &grid, &train, &test)?;
            print!("{}", render_table(&results));
            if let Some(p) = csv {
                fs::write(p, render_csv(&results)).with_context(|| p.display().to_string())?;
            }
        }
        Command::Stats { data, top } => {
            let (ds, _) = load(data)?;
            let limit = cfg.context.limit.unwrap_or(usize::MAX);
            print!("{}", dataset_stats(&ds, limit)?.render(*top));
        }
        Command::Ingest { data, out } => {
            let (ds, report) = load(data)?;
            for (id, reason) in &report.rejected {
                eprintln!("rejected {id}: {reason}");
            }
            ds.write_jsonl(out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
