//! Builds the model input for a buggy line: the class with non-buggy method
//! bodies stripped, markers around the line, and a token budget.
//!
//! ```text
//! cargo run --example abstract_context -- path/To.java 42 [limit]
//! ```

use linefix::context::{build_abstract_buggy_context, Origin, RepairTask};

const FOO: &str = "class Foo {
   int i = 0;
   int bar;
   Foo (int bar){
       this.bar = bar;
   }
   int decrement(){
       return bar-1;
   }
   int increment(){
       return bar-1;
   }
}
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (source, line) = match args.as_slice() {
        [path, line, ..] => (std::fs::read_to_string(path)?, line.parse()?),
        _ => (FOO.to_string(), 11),
    };
    let limit = args.get(2).map_or(Ok(1000), |s| s.parse())?;
    let ctx = build_abstract_buggy_context(&RepairTask::new("example", source, line), limit)?;
    println!("{}\n", ctx.render());
    let count = |o| ctx.origins.iter().filter(|&&x| x == o).count();
    println!(
        "{} tokens (line {}, method {}, class {}){}",
        ctx.len(),
        count(Origin::BuggyLine),
        count(Origin::BuggyMethod),
        count(Origin::BuggyClass),
        if ctx.truncated { ", truncated" } else { "" }
    );
    println!("{}", ctx.texts().join(" "));
    Ok(())
}
