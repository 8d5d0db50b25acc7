//! Token vocabulary and per-sample extended ids.
//!
//! Ids 0..4 are `<unk>`, `<pad>`, `<s>`, `</s>`; then come any forced tokens
//! (the bug markers), then the most frequent corpus tokens with ties broken
//! lexicographically. Source tokens outside the vocabulary get extended ids
//! `len()..` local to one sample so the copy distribution can point at them.
//!
//! On disk a vocabulary is plain text, one token per line, where the n-th
//! line (counting from zero) holds id n. Corpus counts go to a sidecar file
//! with the `.freq` suffix, one count per line in the same order.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lexer::{Token, TokenSequence, END_BUG, START_BUG};

pub const UNK_ID: usize = 0;
pub const PAD_ID: usize = 1;
pub const BOS_ID: usize = 2;
pub const EOS_ID: usize = 3;
pub const SPECIALS: [&str; 4] = ["<unk>", "<pad>", "<s>", "</s>"];
pub const MARKERS: [&str; 2] = [START_BUG, END_BUG];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    tokens: Vec<String>,
    index: HashMap<String, usize>,
    freqs: Vec<u64>,
}

impl Vocabulary {
    /// Counts tokens over `sequences` (source contexts and target lines
    /// alike) and keeps `size` of them, `forced` ones first.
    pub fn build<I, S>(sequences: I, size: usize, forced: &[&str]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[String]>,
    {
        if size < forced.len() {
            return Err(Error::Vocab(format!(
                "size {size} cannot hold the {} forced tokens",
                forced.len()
            )));
        }
        let mut counts: HashMap<&str, u64> = HashMap::new();
        let sequences: Vec<S> = sequences.into_iter().collect();
        if sequences.is_empty() {
            return Err(Error::Empty("vocabulary corpus"));
        }
        for seq in &sequences {
            for tok in seq.as_ref() {
                *counts.entry(tok.as_str()).or_default() += 1;
            }
        }
        let mut ranked: Vec<(&str, u64)> = counts
            .iter()
            .filter(|(t, _)| !SPECIALS.contains(t) && !forced.contains(t))
            .map(|(t, c)| (*t, *c))
            .collect();
        ranked.sort_unstable_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));

        let mut tokens: Vec<String> = SPECIALS.iter().map(|s| s.to_string()).collect();
        let mut freqs = vec![0; SPECIALS.len()];
        for f in forced {
            tokens.push(f.to_string());
            freqs.push(counts.get(f).copied().unwrap_or(0));
        }
        for (tok, count) in ranked.into_iter().take(size - forced.len()) {
            tokens.push(tok.to_string());
            freqs.push(count);
        }
        Self::from_parts(tokens, freqs)
    }

    pub fn from_parts(tokens: Vec<String>, freqs: Vec<u64>) -> Result<Self> {
        if tokens.len() < SPECIALS.len() || tokens[..SPECIALS.len()] != SPECIALS {
            return Err(Error::Vocab("the first four tokens must be <unk> <pad> <s> </s>".into()));
        }
        if freqs.len() != tokens.len() {
            return Err(Error::Vocab("frequency list length differs from token list".into()));
        }
        let mut index = HashMap::with_capacity(tokens.len());
        for (i, t) in tokens.iter().enumerate() {
            if t.is_empty() || t.contains('\n') {
                return Err(Error::Vocab(format!("token {i} is empty or spans lines")));
            }
            if index.insert(t.clone(), i).is_some() {
                return Err(Error::Vocab(format!("duplicate token {t:?}")));
            }
        }
        Ok(Self { tokens, index, freqs })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn id(&self, token: &str) -> Option<usize> {
        self.index.get(token).copied()
    }

    pub fn id_or_unk(&self, token: &str) -> usize {
        self.id(token).unwrap_or(UNK_ID)
    }

    pub fn token(&self, id: usize) -> Option<&str> {
        self.tokens.get(id).map(String::as_str)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn freqs(&self) -> &[u64] {
        &self.freqs
    }

    pub fn contains(&self, token: &str) -> bool {
        self.index.contains_key(token)
    }

    fn file_text(&self) -> String {
        let mut text = self.tokens.join("\n");
        text.push('\n');
        text
    }

    /// Hex SHA-256 of the on-disk token list.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.file_text().as_bytes()))
    }

    pub fn freq_path(path: &Path) -> PathBuf {
        let mut p = path.as_os_str().to_owned();
        p.push(".freq");
        PathBuf::from(p)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fs::write(path, self.file_text()).map_err(|e| Error::io(path, e))?;
        let freq: String = self.freqs.iter().map(|f| format!("{f}\n")).collect();
        let fpath = Self::freq_path(path);
        fs::write(&fpath, freq).map_err(|e| Error::io(&fpath, e))
    }

    /// Loads a vocabulary file; the frequency sidecar is optional.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let tokens: Vec<String> = text.lines().map(String::from).collect();
        let fpath = Self::freq_path(path);
        let freqs = match fs::read_to_string(&fpath) {
            Ok(f) => f
                .lines()
                .map(|l| l.trim().parse::<u64>().map_err(|e| Error::Vocab(format!("{}: {e}", fpath.display()))))
                .collect::<Result<Vec<_>>>()?,
            Err(_) => vec![0; tokens.len()],
        };
        Self::from_parts(tokens, freqs)
    }
}

/// One sample mapped onto vocabulary and extended ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodedSample {
    /// Vocabulary ids, `<unk>` for unknown tokens.
    pub src_ids: Vec<usize>,
    /// Like `src_ids` but unknown tokens get their extended id.
    pub src_ext_ids: Vec<usize>,
    /// Unknown source tokens in order of first appearance; entry k has
    /// extended id `vocab.len() + k`.
    pub oov_list: Vec<String>,
    /// `<s> t1 .. tm </s>` over the extended vocabulary.
    pub tgt_ext_ids: Option<Vec<usize>>,
    /// `<s> t1 .. tm </s>` over the plain vocabulary.
    pub tgt_ids: Option<Vec<usize>>,
}

impl EncodedSample {
    pub fn extended_len(&self, vocab_len: usize) -> usize {
        vocab_len + self.oov_list.len()
    }

    /// Number of predicted target positions (tokens plus `</s>`).
    pub fn target_len(&self) -> usize {
        self.tgt_ext_ids.as_ref().map_or(0, |t| t.len().saturating_sub(1))
    }
}

pub fn encode_pair(src: &[String], tgt: Option<&[String]>, vocab: &Vocabulary) -> Result<EncodedSample> {
    if src.is_empty() {
        return Err(Error::Empty("source sequence"));
    }
    let mut oov_list: Vec<String> = Vec::new();
    let mut oov_index: HashMap<&str, usize> = HashMap::new();
    let mut src_ids = Vec::with_capacity(src.len());
    let mut src_ext_ids = Vec::with_capacity(src.len());
    for tok in src {
        match vocab.id(tok) {
            Some(id) => {
                src_ids.push(id);
                src_ext_ids.push(id);
            }
            None => {
                let ext = *oov_index.entry(tok.as_str()).or_insert_with(|| {
                    oov_list.push(tok.clone());
                    vocab.len() + oov_list.len() - 1
                });
                src_ids.push(UNK_ID);
                src_ext_ids.push(ext);
            }
        }
    }
    let (tgt_ext_ids, tgt_ids) = match tgt {
        None => (None, None),
        Some(tgt) => {
            let mut ext = vec![BOS_ID];
            let mut plain = vec![BOS_ID];
            for tok in tgt {
                let id = vocab.id(tok);
                plain.push(id.unwrap_or(UNK_ID));
                ext.push(id.or_else(|| oov_index.get(tok.as_str()).copied()).unwrap_or(UNK_ID));
            }
            ext.push(EOS_ID);
            plain.push(EOS_ID);
            (Some(ext), Some(plain))
        }
    };
    Ok(EncodedSample {
        src_ids,
        src_ext_ids,
        oov_list,
        tgt_ext_ids,
        tgt_ids,
    })
}

/// Maps extended ids back to token texts.
pub fn decode_texts(ids: &[usize], vocab: &Vocabulary, oov_list: &[String]) -> Result<Vec<String>> {
    ids.iter()
        .map(|&id| {
            vocab
                .token(id)
                .or_else(|| oov_list.get(id - vocab.len()).map(String::as_str))
                .map(String::from)
                .ok_or_else(|| {
                    Error::Vocab(format!("id {id} out of range for {} extended ids", vocab.len() + oov_list.len()))
                })
        })
        .collect()
}

/// Maps extended ids back to tokens; `<unk>` comes back as the literal
/// `<unk>` token.
pub fn decode(ids: &[usize], vocab: &Vocabulary, oov_list: &[String]) -> Result<TokenSequence> {
    Ok(decode_texts(ids, vocab, oov_list)?.iter().map(|t| Token::from_lexeme(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    fn small() -> Vocabulary {
        Vocabulary::build([seq("return x ; return y ;"), seq("x = 1 ;")], 10, &MARKERS).unwrap()
    }

    #[test]
    fn layout() {
        let v = small();
        assert_eq!(
            v.tokens(),
            ["<unk>", "<pad>", "<s>", "</s>", "<START_BUG>", "<END_BUG>", ";", "return", "x", "1", "=", "y"]
        );
        assert_eq!(v.freqs()[6], 3);
        assert_eq!(v.id("x"), Some(8));
    }

    #[test]
    fn forced_tokens_fill_the_budget() {
        let v = Vocabulary::build([seq("a b c")], 2, &MARKERS).unwrap();
        assert_eq!(v.tokens(), ["<unk>", "<pad>", "<s>", "</s>", "<START_BUG>", "<END_BUG>"]);
        assert!(matches!(Vocabulary::build([seq("a")], 1, &MARKERS), Err(Error::Vocab(_))));
        assert!(matches!(Vocabulary::build(Vec::<Vec<String>>::new(), 5, &[]), Err(Error::Empty(_))));
    }

    #[test]
    fn shared_extended_ids() {
        let v = small();
        let s = encode_pair(&seq("nonMasterNode = nonMasterNode ; x"), Some(&seq("nonMasterNode = null ;")), &v).unwrap();
        assert_eq!(s.oov_list, ["nonMasterNode"]);
        assert_eq!(s.src_ext_ids[0], v.len());
        assert_eq!(s.src_ext_ids[2], v.len());
        assert_eq!(s.src_ids[0], UNK_ID);
        let tgt = s.tgt_ext_ids.as_ref().unwrap();
        assert_eq!(tgt[0], BOS_ID);
        assert_eq!(tgt[1], v.len());
        // `null` is in neither the vocabulary nor the source
        assert_eq!(tgt[3], UNK_ID);
        assert_eq!(*tgt.last().unwrap(), EOS_ID);
        assert_eq!(s.tgt_ids.as_ref().unwrap()[1], UNK_ID);
        assert_eq!(s.target_len(), 5);
    }

    #[test]
    fn all_known() {
        let v = small();
        let s = encode_pair(&seq("return x ;"), None, &v).unwrap();
        assert_eq!(s.src_ids, s.src_ext_ids);
        assert!(s.oov_list.is_empty());
        assert!(encode_pair(&[], None, &v).is_err());
    }

    #[test]
    fn decode_extended() {
        let v = small();
        let oov = vec!["getPct".to_string()];
        assert_eq!(decode_texts(&[v.len()], &v, &oov).unwrap(), ["getPct"]);
        assert_eq!(decode_texts(&[UNK_ID], &v, &oov).unwrap(), ["<unk>"]);
        assert!(decode_texts(&[v.len() + 1], &v, &oov).is_err());
        let toks = decode(&[7, 8, 6], &v, &oov).unwrap();
        assert_eq!(crate::lexer::texts(&toks), ["return", "x", ";"]);
    }

    #[test]
    fn file_round_trip() {
        let v = small();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("vocab.txt");
        v.save(&path).unwrap();
        let back = Vocabulary::load(&path).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.hash(), v.hash());
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().nth(7), Some("return"));
    }

    #[test]
    fn deterministic() {
        let a = small();
        let b = small();
        assert_eq!(a.file_text(), b.file_text());
    }
}
