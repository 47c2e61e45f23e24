//! Deterministic automata over {0,1}, plus the regular-expression front end.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::words::BinaryWord;

/// A complete deterministic automaton over {0,1}. Every state is reachable
/// from `start`; construction routines trim unreachable states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    start: usize,
    accepting: Vec<bool>,
    delta: Vec<[usize; 2]>,
}

impl Dfa {
    /// Builds an automaton from explicit tables, validating totality and
    /// trimming unreachable states.
    pub fn new(start: usize, accepting: Vec<bool>, delta: Vec<[usize; 2]>) -> Result<Self> {
        let n = delta.len();
        if n == 0 || start >= n || accepting.len() != n {
            return Err(Error::InvalidArguments("malformed automaton tables".into()));
        }
        if delta.iter().flatten().any(|&t| t >= n) {
            return Err(Error::InvalidArguments("transition target out of range".into()));
        }
        Ok(Dfa {
            start,
            accepting,
            delta,
        }
        .trimmed())
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn step(&self, q: usize, bit: u8) -> usize {
        self.delta[q][bit as usize]
    }

    pub fn run(&self, bits: &[u8]) -> usize {
        bits.iter().fold(self.start, |q, &b| self.step(q, b))
    }

    pub fn accepts(&self, b: &BinaryWord) -> bool {
        self.accepting[self.run(b.bits())]
    }

    /// The automaton accepting every word (`all = true`) or no word.
    pub fn trivial(all: bool) -> Dfa {
        Dfa {
            start: 0,
            accepting: vec![all],
            delta: vec![[0, 0]],
        }
    }

    /// Words in 0* ∪ 1*: states start, only-0, only-1, dead.
    pub fn single_letter_words() -> Dfa {
        Dfa {
            start: 0,
            accepting: vec![true, true, true, false],
            delta: vec![[1, 2], [1, 3], [3, 2], [3, 3]],
        }
    }

    /// Words containing both letters: states start, seen0, seen1, both.
    pub fn both_letters() -> Dfa {
        Dfa {
            start: 0,
            accepting: vec![false, false, false, true],
            delta: vec![[1, 2], [1, 3], [3, 2], [3, 3]],
        }
    }

    /// Trie automaton for a finite set, completed with a dead state.
    pub fn from_finite<'a>(words: impl IntoIterator<Item = &'a BinaryWord>) -> Dfa {
        const NONE: usize = usize::MAX;
        let mut delta: Vec<[usize; 2]> = vec![[NONE, NONE]];
        let mut accepting = vec![false];
        for w in words {
            let mut q = 0;
            for &b in w.bits() {
                if delta[q][b as usize] == NONE {
                    delta.push([NONE, NONE]);
                    accepting.push(false);
                    delta[q][b as usize] = delta.len() - 1;
                }
                q = delta[q][b as usize];
            }
            accepting[q] = true;
        }
        let dead = delta.len();
        delta.push([dead, dead]);
        accepting.push(false);
        for row in delta.iter_mut() {
            for t in row.iter_mut() {
                if *t == NONE {
                    *t = dead;
                }
            }
        }
        Dfa {
            start: 0,
            accepting,
            delta,
        }
        .trimmed()
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            start: self.start,
            accepting: self.accepting.iter().map(|a| !a).collect(),
            delta: self.delta.clone(),
        }
    }

    /// Image under the complement morphism 0 ↔ 1.
    pub fn flipped(&self) -> Dfa {
        Dfa {
            start: self.start,
            accepting: self.accepting.clone(),
            delta: self.delta.iter().map(|&[a, b]| [b, a]).collect(),
        }
    }

    /// Reachable product automaton with acceptance combined by `op`.
    pub fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool) -> Dfa {
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = vec![(self.start, other.start)];
        index.insert((self.start, other.start), 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            let mut row = [0usize; 2];
            for bit in 0..2u8 {
                let next = (self.step(p, bit), other.step(q, bit));
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    pairs.len() - 1
                });
                row[bit as usize] = id;
            }
            delta.push(row);
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op(self.accepting[p], other.accepting[q]))
            .collect();
        Dfa {
            start: 0,
            accepting,
            delta,
        }
    }

    pub fn intersection(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Dfa) -> Dfa {
        self.product(other, |a, b| a || b)
    }

    /// Automaton for the reversed language, via the reversed transition
    /// relation and the subset construction.
    pub fn reversed(&self) -> Dfa {
        let n = self.num_states();
        let mut nfa = Nfa::with_states(n);
        for (p, row) in self.delta.iter().enumerate() {
            for bit in 0..2 {
                nfa.add_edge(row[bit], Some(bit as u8), p);
            }
        }
        let starts: Vec<usize> = (0..n).filter(|&q| self.accepting[q]).collect();
        let mut finals = vec![false; n];
        finals[self.start] = true;
        nfa.determinize(&starts, &finals)
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// Shortest accepted word, lexicographically least among the shortest.
    pub fn shortest_accepted(&self) -> Option<BinaryWord> {
        let n = self.num_states();
        let mut parent: Vec<Option<(usize, u8)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.start]);
        seen[self.start] = true;
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut bits = Vec::new();
                let mut cur = q;
                while let Some((p, b)) = parent[cur] {
                    bits.push(b);
                    cur = p;
                }
                bits.reverse();
                return Some(BinaryWord::from_bits(bits));
            }
            for bit in 0..2u8 {
                let t = self.step(q, bit);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, bit));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// Language equality, decided on the symmetric-difference product.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.product(other, |a, b| a != b).is_empty()
    }

    /// A word in exactly one of the two languages, if any.
    pub fn distinguishing_word(&self, other: &Dfa) -> Option<BinaryWord> {
        self.product(other, |a, b| a != b).shortest_accepted()
    }

    fn trimmed(self) -> Dfa {
        let n = self.num_states();
        let mut order = vec![self.start];
        let mut map = vec![usize::MAX; n];
        map[self.start] = 0;
        let mut i = 0;
        while i < order.len() {
            for &t in &self.delta[order[i]] {
                if map[t] == usize::MAX {
                    map[t] = order.len();
                    order.push(t);
                }
            }
            i += 1;
        }
        Dfa {
            start: 0,
            accepting: order.iter().map(|&q| self.accepting[q]).collect(),
            delta: order
                .iter()
                .map(|&q| [map[self.delta[q][0]], map[self.delta[q][1]]])
                .collect(),
        }
    }
}

/// A nondeterministic automaton with ε-moves (`None` labels).
#[derive(Debug, Clone, Default)]
struct Nfa {
    edges: Vec<Vec<(Option<u8>, usize)>>,
}

impl Nfa {
    fn with_states(n: usize) -> Self {
        Nfa {
            edges: vec![Vec::new(); n],
        }
    }

    fn add_state(&mut self) -> usize {
        self.edges.push(Vec::new());
        self.edges.len() - 1
    }

    fn add_edge(&mut self, from: usize, label: Option<u8>, to: usize) {
        self.edges[from].push((label, to));
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &(label, t) in &self.edges[q] {
                if label.is_none() && set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    fn determinize(&self, starts: &[usize], finals: &[bool]) -> Dfa {
        let mut first: BTreeSet<usize> = starts.iter().copied().collect();
        self.closure(&mut first);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut sets = vec![first.clone()];
        index.insert(first, 0);
        let mut delta = Vec::new();
        let mut i = 0;
        while i < sets.len() {
            let mut row = [0usize; 2];
            for bit in 0..2u8 {
                let mut next = BTreeSet::new();
                for &q in &sets[i] {
                    for &(label, t) in &self.edges[q] {
                        if label == Some(bit) {
                            next.insert(t);
                        }
                    }
                }
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        sets.push(next.clone());
                        index.insert(next, sets.len() - 1);
                        sets.len() - 1
                    }
                };
                row[bit as usize] = id;
            }
            delta.push(row);
            i += 1;
        }
        let accepting = sets.iter().map(|s| s.iter().any(|&q| finals[q])).collect();
        Dfa {
            start: 0,
            accepting,
            delta,
        }
    }
}

/// Regular-expression syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Lambda,
    Bit(u8),
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    /// Parses `0`, `1`, `e` (λ), `|`, concatenation, postfix `*` and
    /// parentheses. Whitespace is ignored.
    pub fn parse(src: &str) -> Result<Regex> {
        let chars: Vec<(usize, char)> = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = RegexParser { chars, pos: 0 };
        let r = p.alt()?;
        if let Some(&(off, c)) = p.chars.get(p.pos) {
            return Err(Error::parse(off, format!("unexpected {c:?} in regular expression")));
        }
        Ok(r)
    }

    pub fn to_dfa(&self) -> Dfa {
        let mut nfa = Nfa::default();
        let start = nfa.add_state();
        let end = nfa.add_state();
        self.build(&mut nfa, start, end);
        let mut finals = vec![false; nfa.edges.len()];
        finals[end] = true;
        nfa.determinize(&[start], &finals)
    }

    fn build(&self, nfa: &mut Nfa, from: usize, to: usize) {
        match self {
            Regex::Empty => {}
            Regex::Lambda => nfa.add_edge(from, None, to),
            Regex::Bit(b) => nfa.add_edge(from, Some(*b), to),
            Regex::Concat(parts) => {
                let mut cur = from;
                for (i, part) in parts.iter().enumerate() {
                    let next = if i + 1 == parts.len() { to } else { nfa.add_state() };
                    part.build(nfa, cur, next);
                    cur = next;
                }
                if parts.is_empty() {
                    nfa.add_edge(from, None, to);
                }
            }
            Regex::Alt(options) => {
                for o in options {
                    o.build(nfa, from, to);
                }
            }
            Regex::Star(inner) => {
                let hub = nfa.add_state();
                nfa.add_edge(from, None, hub);
                nfa.add_edge(hub, None, to);
                let back = nfa.add_state();
                inner.build(nfa, hub, back);
                nfa.add_edge(back, None, hub);
            }
        }
    }
}

struct RegexParser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl RegexParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|&(o, _)| o).unwrap_or(usize::MAX)
    }

    fn alt(&mut self) -> Result<Regex> {
        let mut options = vec![self.concat()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            options.push(self.concat()?);
        }
        Ok(if options.len() == 1 {
            options.pop().unwrap()
        } else {
            Regex::Alt(options)
        })
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut parts = Vec::new();
        while let Some(c) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            parts.push(self.star()?);
        }
        Ok(match parts.len() {
            0 => Regex::Lambda,
            1 => parts.pop().unwrap(),
            _ => Regex::Concat(parts),
        })
    }

    fn star(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::Star(Box::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        let off = self.offset();
        match self.peek() {
            Some('0') => {
                self.pos += 1;
                Ok(Regex::Bit(0))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Regex::Bit(1))
            }
            Some('e') | Some('λ') => {
                self.pos += 1;
                Ok(Regex::Lambda)
            }
            Some('(') => {
                self.pos += 1;
                let r = self.alt()?;
                if self.peek() != Some(')') {
                    return Err(Error::parse(self.offset(), "expected ')' in regular expression"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(c) => Err(Error::parse(off, format!("unexpected {c:?} in regular expression"))),
            None => Err(Error::parse(off, "unexpected end of regular expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::bw;

    #[test]
    fn regex_wrep_shape() {
        let d = Regex::parse("(1|e)(01)*(0|e)").unwrap().to_dfa();
        for w in ["", "0", "1", "01", "10", "0101", "10101"] {
            assert!(d.accepts(&bw(w)), "{w}");
        }
        for w in ["00", "11", "0110", "1001"] {
            assert!(!d.accepts(&bw(w)), "{w}");
        }
    }

    #[test]
    fn finite_trie_agrees_with_set() {
        let set: BTreeSet<BinaryWord> = ["0101", "1010", "", "011"].iter().map(|s| bw(s)).collect();
        let d = Dfa::from_finite(set.iter());
        for w in BinaryWord::all_up_to(6) {
            assert_eq!(d.accepts(&w), set.contains(&w), "{w}");
        }
    }

    #[test]
    fn reversal_and_flip() {
        let d = Regex::parse("0*1").unwrap().to_dfa();
        let r = d.reversed();
        assert!(r.accepts(&bw("1000")));
        assert!(!r.accepts(&bw("0001")));
        let f = d.flipped();
        assert!(f.accepts(&bw("1110")));
    }

    #[test]
    fn shortest_and_emptiness() {
        let d = Regex::parse("0*").unwrap().to_dfa().intersection(&Dfa::both_letters());
        assert!(d.is_empty());
        let d = Regex::parse("(0|1)*").unwrap().to_dfa().intersection(&Dfa::both_letters());
        assert_eq!(d.shortest_accepted(), Some(bw("01")));
        assert!(Dfa::single_letter_words().complement().equivalent(&Dfa::both_letters()));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert!(matches!(Regex::parse("0(1"), Err(Error::Parse { .. })));
        assert!(matches!(Regex::parse("0x"), Err(Error::Parse { offset: 1, .. })));
    }
}
