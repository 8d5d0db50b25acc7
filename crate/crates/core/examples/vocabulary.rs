//! Vocabulary construction and source-specific extended ids for tokens
//! the vocabulary does not know.

use linefix::lexer::{texts, tokenize};
use linefix::vocab::{decode_texts, encode_pair, Vocabulary};

fn toks(s: &str) -> Vec<String> {
    texts(&tokenize(s).expect("valid Java"))
}

fn main() -> linefix::Result<()> {
    let corpus = ["int a = b + 1 ;", "return a ;", "if ( a > b ) {", "return b - 1 ;"];
    let seqs: Vec<Vec<String>> = corpus.iter().map(|s| toks(s)).collect();
    let vocab = Vocabulary::build(&seqs, 12, &["<START_BUG>", "<END_BUG>"])?;
    println!("vocabulary ({}):", vocab.len());
    for (id, (t, f)) in vocab.tokens().iter().zip(vocab.freqs()).enumerate() {
        println!("  {id:>2} {t:<12} {f}");
    }

    let src = toks("<START_BUG> return total - count ; <END_BUG>");
    let tgt = toks("return total + count ;");
    let enc = encode_pair(&src, Some(&tgt), &vocab)?;
    println!("\nsource      {src:?}");
    println!("ids         {:?}", enc.src_ids);
    println!("extended    {:?}", enc.src_ext_ids);
    println!("oov         {:?}", enc.oov_list);
    println!("target ext  {:?}", enc.tgt_ext_ids.as_deref().unwrap_or_default());
    let back = decode_texts(&enc.tgt_ext_ids.unwrap()[1..], &vocab, &enc.oov_list)?;
    println!("decoded     {back:?}");
    Ok(())
}
