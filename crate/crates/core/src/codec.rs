//! Compact binary serialization of graphs through copy-language words.
//!
//! Layout:
//!
//! ```text
//! "LGR1"                      magic
//! mode: u8                    0 = sparse (complement of copy), 1 = dense (copy)
//! n: varint                   vertex count, unsigned LEB128
//! len: varint                 word length in symbols
//! payload                     len symbols of w(n) = max(1, ⌈log₂ n⌉) bits,
//!                             big-endian packed, zero-padded to a byte
//! [names]                     optional: n entries of varint length + UTF-8
//! ```
//!
//! Symbol `i` stands for the i-th vertex in sorted token order. Without a
//! name table the decoded vertices are labelled `1..=n`.

use std::fmt;
use std::str::FromStr;

use crate::constructions::copy_word;
use crate::error::{Error, Result};
use crate::graphs::{index_labels, Graph};
use crate::languages::{Builtin, LanguageSpec};
use crate::represent::evaluate;
use crate::words::{Vertex, VertexWord};

pub const MAGIC: &[u8; 4] = b"LGR1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Complement of the copy language; 4n + 2m symbols.
    Sparse,
    /// Copy language.
    Dense,
}

impl Mode {
    fn byte(self) -> u8 {
        match self {
            Mode::Sparse => 0,
            Mode::Dense => 1,
        }
    }

    /// The language the stored word is evaluated over.
    pub fn language(self) -> LanguageSpec {
        let copy = LanguageSpec::builtin(Builtin::Copy);
        match self {
            Mode::Sparse => copy.complement().expect("builtin complement"),
            Mode::Dense => copy,
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "sparse" => Ok(Mode::Sparse),
            "dense" => Ok(Mode::Dense),
            _ => Err(Error::InvalidArguments(format!("unknown mode {s:?}; expected sparse or dense"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Sparse => "sparse",
            Mode::Dense => "dense",
        })
    }
}

/// Bits per symbol: max(1, ⌈log₂ n⌉).
pub fn symbol_width(n: usize) -> u32 {
    if n <= 2 {
        1
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// A decoded container: the header fields, the packed payload, and the
/// optional name table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedGraph {
    pub mode: Mode,
    pub n: usize,
    pub len: usize,
    payload: Vec<u8>,
    pub names: Option<Vec<Vertex>>,
}

impl EncodedGraph {
    pub fn width(&self) -> u32 {
        symbol_width(self.n)
    }

    pub fn payload(&self) -> &[u8] {
        &self.payload
    }

    /// Number of meaningful payload bits.
    pub fn payload_bits(&self) -> usize {
        self.len * self.width() as usize
    }

    /// The i-th symbol, read directly from the packed payload.
    pub fn symbol(&self, i: usize) -> usize {
        let mut r = self.reader();
        r.bit = i * self.width() as usize;
        r.next().expect("symbol index within the word")
    }

    /// Sequential reader over the stored symbols.
    pub fn reader(&self) -> SymbolReader<'_> {
        SymbolReader {
            payload: &self.payload,
            width: self.width() as usize,
            bit: 0,
            end: self.payload_bits(),
        }
    }

    pub fn symbols(&self) -> SymbolReader<'_> {
        self.reader()
    }

    /// Vertex labels: the name table, or `1..=n`.
    pub fn labels(&self) -> Vec<Vertex> {
        self.names.clone().unwrap_or_else(|| index_labels(self.n))
    }

    pub fn word(&self) -> Result<VertexWord> {
        let syms: Vec<usize> = self.symbols().collect();
        VertexWord::from_indices(&self.labels(), &syms)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(10 + self.payload.len());
        out.extend_from_slice(MAGIC);
        out.push(self.mode.byte());
        write_varint(&mut out, self.n as u64);
        write_varint(&mut out, self.len as u64);
        out.extend_from_slice(&self.payload);
        if let Some(names) = &self.names {
            for v in names {
                write_varint(&mut out, v.as_str().len() as u64);
                out.extend_from_slice(v.as_str().as_bytes());
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<EncodedGraph> {
        if bytes.len() < 4 || &bytes[..4] != MAGIC {
            return Err(Error::format(0, "bad magic, expected LGR1"));
        }
        let mode = match bytes.get(4) {
            Some(0) => Mode::Sparse,
            Some(1) => Mode::Dense,
            Some(b) => return Err(Error::format(4, format!("unknown mode byte {b}"))),
            None => return Err(Error::format(4, "missing mode byte")),
        };
        let mut at = 5;
        let n = read_varint(bytes, &mut at)? as usize;
        if n == 0 {
            return Err(Error::format(5, "vertex count must be positive"));
        }
        let len_at = at;
        let len = read_varint(bytes, &mut at)? as usize;
        if len == 0 {
            return Err(Error::format(len_at, "word length must be positive"));
        }
        let width = symbol_width(n) as usize;
        let payload_len = len
            .checked_mul(width)
            .map(|b| b.div_ceil(8))
            .ok_or_else(|| Error::format(len_at, "word length overflows"))?;
        if bytes.len() - at < payload_len {
            return Err(Error::format(bytes.len(), "payload is truncated"));
        }
        let e = EncodedGraph {
            mode,
            n,
            len,
            payload: bytes[at..at + payload_len].to_vec(),
            names: None,
        };
        let mut seen = vec![false; n];
        for (i, s) in e.reader().enumerate() {
            if s >= n {
                return Err(Error::format(at + i * width / 8, format!("symbol {s} is not below {n}")));
            }
            seen[s] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::format(at, format!("vertex {missing} does not occur in the word")));
        }
        at += payload_len;
        let names = if at == bytes.len() {
            None
        } else {
            let mut names = Vec::with_capacity(n);
            for _ in 0..n {
                let start = at;
                let l = read_varint(bytes, &mut at)? as usize;
                let raw = bytes
                    .get(at..at + l)
                    .ok_or_else(|| Error::format(start, "name table is truncated"))?;
                let s = std::str::from_utf8(raw).map_err(|_| Error::format(at, "name is not UTF-8"))?;
                names.push(Vertex::new(s).map_err(|e| Error::format(start, e.to_string()))?);
                at += l;
            }
            if at != bytes.len() {
                return Err(Error::format(at, "trailing bytes after name table"));
            }
            if names.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::format(at, "name table must be strictly sorted"));
            }
            Some(names)
        };
        Ok(EncodedGraph { names, ..e })
    }

    /// Whether vertices `u` and `v` (symbol indices) are adjacent, decided
    /// by streaming over the stored word with constant extra memory. One
    /// pass counts f_u and f_v; the projection is a copy word iff both are
    /// even and every window from the i-th to the (i + f_u/2)-th occurrence
    /// of `u` holds exactly f_v/2 occurrences of `v`. A second pass slides
    /// that window with two readers.
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidArguments(format!(
                "adjacency needs two distinct vertices below {}",
                self.n
            )));
        }
        let (mut fu, mut fv) = (0usize, 0usize);
        for s in self.reader() {
            fu += usize::from(s == u);
            fv += usize::from(s == v);
        }
        let is_copy = fu % 2 == 0 && fv % 2 == 0 && {
            let (hu, hv) = (fu / 2, fv / 2);
            let mut front = self.reader();
            let mut back = self.reader();
            // Place `back` on the (hu)-th occurrence of u (0-based), counting
            // the v's passed once `front` sits on the first u.
            let mut window = 0usize;
            let mut seen = 0usize;
            let mut started = false;
            for s in back.by_ref() {
                if s == u {
                    if seen == hu {
                        break;
                    }
                    seen += 1;
                    started = true;
                } else if s == v && started {
                    window += 1;
                }
            }
            for s in front.by_ref() {
                if s == u {
                    break;
                }
            }
            let mut ok = window == hv;
            for _ in 1..hu {
                if !ok {
                    break;
                }
                for s in front.by_ref() {
                    if s == u {
                        break;
                    }
                    window -= usize::from(s == v);
                }
                for s in back.by_ref() {
                    if s == u {
                        break;
                    }
                    window += usize::from(s == v);
                }
                ok = window == hv;
            }
            ok
        };
        Ok(match self.mode {
            Mode::Dense => is_copy,
            Mode::Sparse => !is_copy,
        })
    }

    /// [`EncodedGraph::adjacent`] by label.
    pub fn adjacent_labels(&self, u: &str, v: &str) -> Result<bool> {
        let labels = self.labels();
        let find = |t: &str| -> Result<usize> {
            if let Some(i) = labels.iter().position(|l| l.as_str() == t) {
                return Ok(i);
            }
            if self.names.is_none() {
                if let Ok(k) = t.parse::<usize>() {
                    if (1..=self.n).contains(&k) {
                        return Ok(k - 1);
                    }
                }
            }
            Err(Error::InvalidArguments(format!("{t} is not a vertex")))
        };
        self.adjacent(find(u)?, find(v)?)
    }
}

/// Reads fixed-width big-endian symbols from a packed payload.
#[derive(Debug, Clone)]
pub struct SymbolReader<'a> {
    payload: &'a [u8],
    width: usize,
    bit: usize,
    end: usize,
}

impl Iterator for SymbolReader<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bit + self.width > self.end {
            return None;
        }
        let first = self.bit / 8;
        let mut buf = [0u8; 8];
        let avail = (self.payload.len() - first).min(8);
        buf[..avail].copy_from_slice(&self.payload[first..first + avail]);
        let word = u64::from_be_bytes(buf);
        let shift = 64 - (self.bit % 8) - self.width;
        self.bit += self.width;
        Some((word >> shift) as usize & ((1usize << self.width) - 1))
    }
}

fn write_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn read_varint(bytes: &[u8], at: &mut usize) -> Result<u64> {
    let start = *at;
    let mut x = 0u64;
    for shift in (0..64).step_by(7) {
        let b = *bytes
            .get(*at)
            .ok_or_else(|| Error::format(start, "truncated varint"))?;
        *at += 1;
        x |= u64::from(b & 0x7f) << shift;
        if b & 0x80 == 0 {
            return Ok(x);
        }
    }
    Err(Error::format(start, "varint is too long"))
}

fn pack(symbols: &[u32], width: u32) -> Vec<u8> {
    let total = symbols.len() * width as usize;
    let mut out = vec![0u8; total.div_ceil(8)];
    let mut k = 0;
    for &s in symbols {
        for b in (0..width).rev() {
            if s >> b & 1 == 1 {
                out[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    out
}

/// Encodes `g`. With `with_names`, the vertex tokens are stored so that
/// decoding reproduces the labels; otherwise only the structure survives.
pub fn encode(g: &Graph, mode: Mode, with_names: bool) -> Result<EncodedGraph> {
    let n = g.order();
    if n == 0 {
        return Err(Error::InvalidArguments("cannot encode the empty graph".into()));
    }
    let word: Vec<u32> = match mode {
        Mode::Sparse => copy_word(n, |i, j| g.has_edge(i, j)),
        Mode::Dense => copy_word(n, |i, j| !g.has_edge(i, j)),
    }
    .into_iter()
    .map(|s| s as u32)
    .collect();
    let width = symbol_width(n);
    let e = EncodedGraph {
        mode,
        n,
        len: word.len(),
        payload: pack(&word, width),
        names: with_names.then(|| g.vertices().to_vec()),
    };
    if mode == Mode::Sparse {
        assert_eq!(
            e.payload_bits(),
            (4 * n + 2 * g.edge_count()) * width as usize,
            "sparse payload size law"
        );
    }
    Ok(e)
}

/// Rebuilds the graph by evaluating the stored word.
pub fn decode(e: &EncodedGraph) -> Result<Graph> {
    evaluate(&e.word()?, &e.mode.language())
}
