//! Words over vertex alphabets and over {0,1}.
//!
//! A [`VertexWord`] stores its alphabet once, sorted by token, and keeps the
//! symbol sequence as indices into that alphabet. Index `i` of the alphabet is
//! also index `i` of the vertex list of every graph evaluated from the word.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex symbol: a nonempty token without whitespace or commas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Vertex(String);

impl Vertex {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() {
            return Err(Error::InvalidArguments("vertex token is empty".into()));
        }
        if token.chars().any(|c| c.is_whitespace() || c == ',') {
            return Err(Error::InvalidArguments(format!(
                "vertex token {token:?} contains whitespace or a comma"
            )));
        }
        Ok(Vertex(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Vertex {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Vertex::new(s)
    }
}

impl From<Vertex> for String {
    fn from(v: Vertex) -> String {
        v.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Vertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Vertex::new(s)
    }
}

/// Shorthand used throughout tests and builders. Panics on an invalid token.
pub fn vx(token: &str) -> Vertex {
    Vertex::new(token).expect("valid vertex token")
}

/// A word over {0,1}, possibly empty. Bits are stored as `0u8` / `1u8`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    /// Builds a word from bits; any nonzero byte is read as `1`.
    pub fn from_bits(bits: impl IntoIterator<Item = u8>) -> Self {
        BinaryWord(bits.into_iter().map(|b| u8::from(b != 0)).collect())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, bit: u8) -> usize {
        self.0.iter().filter(|&&b| b == bit).count()
    }

    pub fn zeros(&self) -> usize {
        self.count(0)
    }

    pub fn ones(&self) -> usize {
        self.count(1)
    }

    pub fn push(&mut self, bit: u8) {
        self.0.push(u8::from(bit != 0));
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BinaryWord(bits)
    }

    /// The complement morphism: 0 ↦ 1, 1 ↦ 0.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|b| 1 - b).collect())
    }

    pub fn reversed(&self) -> BinaryWord {
        BinaryWord(self.0.iter().rev().copied().collect())
    }

    /// The lexicographically smaller of the word and its complement.
    pub fn normal_form(&self) -> BinaryWord {
        let c = self.complement();
        if c < *self {
            c
        } else {
            self.clone()
        }
    }

    /// True iff both letters occur exactly `k` times.
    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.zeros() == k && self.ones() == k
    }

    /// Every binary word of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = BinaryWord> {
        assert!(n < 64, "length too large for exhaustive enumeration");
        (0u64..(1u64 << n)).map(move |code| {
            BinaryWord((0..n).map(|i| ((code >> (n - 1 - i)) & 1) as u8).collect())
        })
    }

    /// Every binary word of length at most `n`, shortest first.
    pub fn all_up_to(n: usize) -> impl Iterator<Item = BinaryWord> {
        (0..=n).flat_map(BinaryWord::all_of_length)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            f.write_str(if *b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;
    /// Accepts a string over `0`/`1`; `e`, `λ`, `eps` and the empty string
    /// denote the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "e" || t == "λ" || t == "eps" {
            return Ok(BinaryWord::empty());
        }
        let mut bits = Vec::with_capacity(t.len());
        for (i, c) in t.char_indices() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::parse(i, format!("unexpected {c:?} in binary word"))),
            }
        }
        Ok(BinaryWord(bits))
    }
}

/// Parses a binary word, panicking on malformed input. Intended for literals.
pub fn bw(s: &str) -> BinaryWord {
    s.parse().expect("valid binary word literal")
}

/// A nonempty word over vertex symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexWord {
    alphabet: Vec<Vertex>,
    symbols: Vec<u32>,
}

impl VertexWord {
    /// Builds a word from a token sequence.
    pub fn new(tokens: Vec<Vertex>) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::InvalidArguments("a vertex word must be nonempty".into()));
        }
        let alphabet: Vec<Vertex> = tokens
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let symbols = tokens
            .iter()
            .map(|t| alphabet.binary_search(t).expect("token in alphabet") as u32)
            .collect();
        Ok(VertexWord { alphabet, symbols })
    }

    /// Builds a word from indices into an explicit alphabet. Letters of the
    /// alphabet that never occur are dropped and indices renumbered.
    pub fn from_indices(alphabet: &[Vertex], symbols: &[usize]) -> Result<Self> {
        let tokens = symbols
            .iter()
            .map(|&i| {
                alphabet.get(i).cloned().ok_or_else(|| {
                    Error::InvalidArguments(format!("symbol index {i} outside alphabet"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        VertexWord::new(tokens)
    }

    /// Convenience constructor from string tokens.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        VertexWord::new(
            tokens
                .iter()
                .map(|t| Vertex::new(t.as_ref()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// The sorted alphabet alph(w).
    pub fn alphabet(&self) -> &[Vertex] {
        &self.alphabet
    }

    /// Symbols as indices into [`VertexWord::alphabet`].
    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always false: vertex words are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.alphabet.binary_search(v).ok()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &Vertex> + '_ {
        self.symbols.iter().map(|&s| &self.alphabet[s as usize])
    }

    /// |w|_v for every letter, indexed like the alphabet.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0usize; self.alphabet.len()];
        for &s in &self.symbols {
            c[s as usize] += 1;
        }
        c
    }

    /// Occurrence positions of every letter, indexed like the alphabet.
    pub fn positions(&self) -> Vec<Vec<usize>> {
        let mut p = vec![Vec::new(); self.alphabet.len()];
        for (i, &s) in self.symbols.iter().enumerate() {
            p[s as usize].push(i);
        }
        p
    }

    pub fn reversed(&self) -> VertexWord {
        VertexWord {
            alphabet: self.alphabet.clone(),
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &VertexWord) -> VertexWord {
        let tokens: Vec<Vertex> = self.tokens().chain(other.tokens()).cloned().collect();
        VertexWord::new(tokens).expect("concatenation of nonempty words is nonempty")
    }

    /// The power w^j for j ≥ 1.
    pub fn power(&self, j: usize) -> VertexWord {
        assert!(j >= 1, "power exponent must be positive");
        let mut symbols = Vec::with_capacity(self.symbols.len() * j);
        for _ in 0..j {
            symbols.extend_from_slice(&self.symbols);
        }
        VertexWord {
            alphabet: self.alphabet.clone(),
            symbols,
        }
    }

    /// Inserts a fresh letter `twin` immediately after every occurrence of `v`.
    pub fn insert_after_each(&self, v: &Vertex, twin: &Vertex) -> Result<VertexWord> {
        if self.index_of(v).is_none() {
            return Err(Error::InvalidArguments(format!("{v} does not occur in the word")));
        }
        if self.index_of(twin).is_some() {
            return Err(Error::InvalidArguments(format!("{twin} already occurs in the word")));
        }
        let mut tokens = Vec::with_capacity(self.len() * 2);
        for t in self.tokens() {
            tokens.push(t.clone());
            if t == v {
                tokens.push(twin.clone());
            }
        }
        VertexWord::new(tokens)
    }

    /// Projection onto a pair of alphabet indices: `a ↦ 0`, `b ↦ 1`.
    pub fn project_indices(&self, a: usize, b: usize) -> BinaryWord {
        BinaryWord(
            self.symbols
                .iter()
                .filter_map(|&s| {
                    let s = s as usize;
                    if s == a {
                        Some(0)
                    } else if s == b {
                        Some(1)
                    } else {
                        None
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for VertexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.alphabet.iter().all(|v| v.as_str().chars().count() == 1);
        for (i, t) in self.tokens().enumerate() {
            if !compact && i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(t.as_str())?;
        }
        Ok(())
    }
}

impl FromStr for VertexWord {
    type Err = Error;
    /// Tokens separated by whitespace or commas. A single token without
    /// separators is split into its characters, so `14213243` has eight letters.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        match tokens.len() {
            0 => Err(Error::parse(0, "empty vertex word")),
            1 => VertexWord::new(
                tokens[0]
                    .chars()
                    .map(|c| Vertex::new(c.to_string()))
                    .collect::<Result<Vec<_>>>()?,
            ),
            _ => VertexWord::from_tokens(&tokens),
        }
    }
}

/// Parses a vertex word literal, panicking on malformed input.
pub fn vw(s: &str) -> VertexWord {
    s.parse().expect("valid vertex word literal")
}

/// The morphism h_{u,v}: u ↦ 0, v ↦ 1, every other letter erased.
pub fn project(w: &VertexWord, u: &Vertex, v: &Vertex) -> Result<BinaryWord> {
    if u == v {
        return Err(Error::InvalidArguments(format!(
            "projection needs two distinct letters, got {u} twice"
        )));
    }
    let bits = w
        .tokens()
        .filter_map(|t| {
            if t == u {
                Some(0)
            } else if t == v {
                Some(1)
            } else {
                None
            }
        })
        .collect();
    Ok(BinaryWord(bits))
}

/// The projective morphism h_A keeping exactly the letters of `keep`.
pub fn project_set(w: &VertexWord, keep: &BTreeSet<Vertex>) -> Result<VertexWord> {
    let tokens: Vec<Vertex> = w.tokens().filter(|t| keep.contains(*t)).cloned().collect();
    if tokens.is_empty() {
        let names: Vec<&str> = keep.iter().map(|v| v.as_str()).collect();
        return Err(Error::EmptyProjection(format!("{{{}}}", names.join(","))));
    }
    VertexWord::new(tokens)
}

pub fn complement_word(b: &BinaryWord) -> BinaryWord {
    b.complement()
}

pub fn normal_form(b: &BinaryWord) -> BinaryWord {
    b.normal_form()
}

pub fn frequency_profile(w: &VertexWord) -> BTreeMap<Vertex, usize> {
    w.alphabet().iter().cloned().zip(w.counts()).collect()
}

pub fn is_k_uniform(w: &VertexWord, k: usize) -> bool {
    w.counts().iter().all(|&c| c == k)
}
