//! Splits Java lines into tokens and joins them back.
//!
//! ```text
//! cargo run --example tokenize -- 'return Foo.bar(x, "s")+1;'
//! ```

use linefix::lexer::{detokenize, tokenize};

fn main() -> linefix::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lines = if args.is_empty() {
        vec![
            "return bar-1;".to_string(),
            "List<Map<String, Integer>> m = new HashMap<>();".to_string(),
            "if (x >= 0x1F && !done) { s += \"a\\\"b\"; }".to_string(),
        ]
    } else {
        args
    };
    for line in lines {
        let toks = tokenize(&line)?;
        println!("{line}");
        for t in &toks {
            println!("  {:>3}:{:<3} {:<12?} {}", t.line, t.col, t.kind, t.text);
        }
        println!("  -> {}", detokenize(&toks)?);
    }
    Ok(())
}
