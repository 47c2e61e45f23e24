//! Context-free grammars over {0,1}: parsing, Earley membership, the
//! triple construction for intersection with an automaton, emptiness and
//! shortest members.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::words::BinaryWord;

use super::dfa::Dfa;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// A terminal letter, 0 or 1.
    T(u8),
    /// A nonterminal, by index into the grammar's name table.
    N(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Production {
    pub head: usize,
    pub body: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    names: Vec<String>,
    start: usize,
    rules: Vec<Production>,
}

impl Cfg {
    /// Builds a grammar from declared nonterminal names, a start index and
    /// productions. Every referenced index must be declared.
    pub fn new(names: Vec<String>, start: usize, rules: Vec<Production>) -> Result<Cfg> {
        let n = names.len();
        if start >= n {
            return Err(Error::InvalidArguments("start symbol is not declared".into()));
        }
        for r in &rules {
            if r.head >= n || r.body.iter().any(|s| matches!(s, Symbol::N(i) if *i >= n)) {
                return Err(Error::InvalidArguments("production uses an undeclared nonterminal".into()));
            }
            if r.body.iter().any(|s| matches!(s, Symbol::T(b) if *b > 1)) {
                return Err(Error::InvalidArguments("terminals must be 0 or 1".into()));
            }
        }
        Ok(Cfg { names, start, rules })
    }

    /// Parses the line format `S -> 1 S 0 S | eps`. The first head is the
    /// start symbol, `#` begins a comment, and `eps`, `ε` or `λ` denote the
    /// empty body. A token made only of 0s and 1s is a terminal string.
    pub fn parse(text: &str) -> Result<Cfg> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut raw: Vec<(usize, Vec<Vec<(usize, String)>>)> = Vec::new();
        let mut line_start = 0;
        for line in text.split_inclusive('\n') {
            let offset = line_start;
            line_start += line.len();
            let content = line.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some(arrow) = content.find("->") else {
                return Err(Error::parse(offset, "expected `->` in grammar rule"));
            };
            let head = content[..arrow].trim();
            if head.is_empty() || head.contains(char::is_whitespace) || is_terminal_token(head) {
                return Err(Error::parse(offset, format!("invalid rule head {head:?}")));
            }
            let id = *index.entry(head.to_string()).or_insert_with(|| {
                names.push(head.to_string());
                names.len() - 1
            });
            let mut alternatives = Vec::new();
            let mut col = offset + arrow + 2;
            for alt in content[arrow + 2..].split('|') {
                let mut tokens = Vec::new();
                let mut pos = 0;
                for tok in alt.split_whitespace() {
                    let at = alt[pos..].find(tok).map(|p| p + pos).unwrap_or(pos);
                    pos = at + tok.len();
                    tokens.push((col + at, tok.to_string()));
                }
                col += alt.len() + 1;
                alternatives.push(tokens);
            }
            raw.push((id, alternatives));
        }
        if names.is_empty() {
            return Err(Error::parse(0, "grammar has no rules"));
        }
        let mut rules = Vec::new();
        for (head, alternatives) in raw {
            for tokens in alternatives {
                let mut body = Vec::new();
                for (off, tok) in tokens {
                    match tok.as_str() {
                        "eps" | "ε" | "λ" => {}
                        t if is_terminal_token(t) => {
                            body.extend(t.bytes().map(|c| Symbol::T(c - b'0')));
                        }
                        t => match index.get(t) {
                            Some(&i) => body.push(Symbol::N(i)),
                            None => {
                                return Err(Error::parse(off, format!("nonterminal {t:?} has no rule")))
                            }
                        },
                    }
                }
                rules.push(Production { head, body });
            }
        }
        Cfg::new(names, 0, rules)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn rules(&self) -> &[Production] {
        &self.rules
    }

    /// Right-linear grammar for the language of an automaton.
    pub fn from_dfa(d: &Dfa) -> Cfg {
        let names = (0..d.num_states()).map(|q| format!("Q{q}")).collect();
        let mut rules = Vec::new();
        for q in 0..d.num_states() {
            for bit in 0..2u8 {
                rules.push(Production {
                    head: q,
                    body: vec![Symbol::T(bit), Symbol::N(d.step(q, bit))],
                });
            }
            if d.is_accepting(q) {
                rules.push(Production { head: q, body: vec![] });
            }
        }
        Cfg {
            names,
            start: d.start(),
            rules,
        }
        .trimmed()
    }

    fn nullable(&self) -> Vec<bool> {
        let mut nullable = vec![false; self.names.len()];
        loop {
            let mut changed = false;
            for r in &self.rules {
                if !nullable[r.head]
                    && r.body.iter().all(|s| matches!(s, Symbol::N(i) if nullable[*i]))
                {
                    nullable[r.head] = true;
                    changed = true;
                }
            }
            if !changed {
                return nullable;
            }
        }
    }

    /// Nonterminals that derive at least one terminal word.
    pub fn generating(&self) -> Vec<bool> {
        let mut gen = vec![false; self.names.len()];
        loop {
            let mut changed = false;
            for r in &self.rules {
                if !gen[r.head]
                    && r.body.iter().all(|s| match s {
                        Symbol::T(_) => true,
                        Symbol::N(i) => gen[*i],
                    })
                {
                    gen[r.head] = true;
                    changed = true;
                }
            }
            if !changed {
                return gen;
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.generating()[self.start]
    }

    /// Earley recognition with the nullable-completion fix, so λ-rules
    /// need no preprocessing.
    pub fn contains(&self, b: &BinaryWord) -> bool {
        let bits = b.bits();
        let n = bits.len();
        let nullable = self.nullable();
        let mut by_head: Vec<Vec<usize>> = vec![Vec::new(); self.names.len()];
        for (i, r) in self.rules.iter().enumerate() {
            by_head[r.head].push(i);
        }
        // Item: (rule, dot, origin).
        let mut sets: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n + 1];
        let mut seen: Vec<HashSet<(usize, usize, usize)>> = vec![HashSet::new(); n + 1];
        for &r in &by_head[self.start] {
            if seen[0].insert((r, 0, 0)) {
                sets[0].push((r, 0, 0));
            }
        }
        for pos in 0..=n {
            let mut k = 0;
            while k < sets[pos].len() {
                let (r, dot, origin) = sets[pos][k];
                k += 1;
                let body = &self.rules[r].body;
                let mut add = |set: usize, item: (usize, usize, usize), sets: &mut Vec<Vec<_>>| {
                    if seen[set].insert(item) {
                        sets[set].push(item);
                    }
                };
                match body.get(dot) {
                    Some(Symbol::N(a)) => {
                        for &r2 in &by_head[*a] {
                            add(pos, (r2, 0, pos), &mut sets);
                        }
                        if nullable[*a] {
                            add(pos, (r, dot + 1, origin), &mut sets);
                        }
                    }
                    Some(Symbol::T(t)) => {
                        if pos < n && bits[pos] == *t {
                            add(pos + 1, (r, dot + 1, origin), &mut sets);
                        }
                    }
                    None => {
                        let head = self.rules[r].head;
                        let parents: Vec<_> = sets[origin]
                            .iter()
                            .filter(|&&(r2, d2, _)| {
                                self.rules[r2].body.get(d2) == Some(&Symbol::N(head))
                            })
                            .copied()
                            .collect();
                        for (r2, d2, o2) in parents {
                            add(pos, (r2, d2 + 1, o2), &mut sets);
                        }
                    }
                }
            }
        }
        sets[n].iter().any(|&(r, dot, origin)| {
            origin == 0 && self.rules[r].head == self.start && dot == self.rules[r].body.len()
        })
    }

    /// Equivalent grammar whose bodies have length at most two and whose
    /// length-two bodies contain only nonterminals.
    pub fn binarized(&self) -> Cfg {
        let mut names = self.names.clone();
        let mut rules = Vec::new();
        let mut letter: [Option<usize>; 2] = [None, None];
        let mut letter_nt = |bit: u8, names: &mut Vec<String>, rules: &mut Vec<Production>| {
            *letter[bit as usize].get_or_insert_with(|| {
                names.push(format!("<{bit}>"));
                let id = names.len() - 1;
                rules.push(Production {
                    head: id,
                    body: vec![Symbol::T(bit)],
                });
                id
            })
        };
        for r in &self.rules {
            if r.body.len() <= 1 {
                rules.push(r.clone());
                continue;
            }
            let syms: Vec<usize> = r
                .body
                .iter()
                .map(|s| match *s {
                    Symbol::N(i) => i,
                    Symbol::T(b) => letter_nt(b, &mut names, &mut rules),
                })
                .collect();
            let mut head = r.head;
            for i in 0..syms.len() - 2 {
                names.push(format!("<{}.{}>", self.names[r.head], i));
                let next = names.len() - 1;
                rules.push(Production {
                    head,
                    body: vec![Symbol::N(syms[i]), Symbol::N(next)],
                });
                head = next;
            }
            let k = syms.len();
            rules.push(Production {
                head,
                body: vec![Symbol::N(syms[k - 2]), Symbol::N(syms[k - 1])],
            });
        }
        Cfg {
            names,
            start: self.start,
            rules,
        }
    }

    /// Grammar for L(self) ∩ L(d) by the (state, symbol, state) triple
    /// construction on the binarized grammar, trimmed to useful symbols.
    pub fn intersect_regular(&self, d: &Dfa) -> Cfg {
        let g = self.binarized();
        let q = d.num_states();
        let nn = g.names.len();
        let triple = |p: usize, a: usize, r: usize| 1 + (p * nn + a) * q + r;
        let mut names = vec!["S'".to_string()];
        for p in 0..q {
            for a in 0..nn {
                for r in 0..q {
                    names.push(format!("({p},{},{r})", g.names[a]));
                }
            }
        }
        let mut rules = Vec::new();
        for f in (0..q).filter(|&f| d.is_accepting(f)) {
            rules.push(Production {
                head: 0,
                body: vec![Symbol::N(triple(d.start(), g.start, f))],
            });
        }
        for rule in &g.rules {
            match rule.body.as_slice() {
                [] => {
                    for p in 0..q {
                        rules.push(Production {
                            head: triple(p, rule.head, p),
                            body: vec![],
                        });
                    }
                }
                [Symbol::T(b)] => {
                    for p in 0..q {
                        rules.push(Production {
                            head: triple(p, rule.head, d.step(p, *b)),
                            body: vec![Symbol::T(*b)],
                        });
                    }
                }
                [Symbol::N(x)] => {
                    for p in 0..q {
                        for r in 0..q {
                            rules.push(Production {
                                head: triple(p, rule.head, r),
                                body: vec![Symbol::N(triple(p, *x, r))],
                            });
                        }
                    }
                }
                [Symbol::N(x), Symbol::N(y)] => {
                    for p in 0..q {
                        for m in 0..q {
                            for r in 0..q {
                                rules.push(Production {
                                    head: triple(p, rule.head, r),
                                    body: vec![Symbol::N(triple(p, *x, m)), Symbol::N(triple(m, *y, r))],
                                });
                            }
                        }
                    }
                }
                _ => unreachable!("binarized grammar"),
            }
        }
        Cfg {
            names,
            start: 0,
            rules,
        }
        .trimmed()
    }

    /// Least member in length-then-lexicographic order. Computed as a
    /// fixpoint over nonterminals, which is exact because that order is a
    /// well-order compatible with concatenation.
    pub fn shortest_word(&self) -> Option<BinaryWord> {
        let mut best: Vec<Option<Vec<u8>>> = vec![None; self.names.len()];
        let better = |a: &Vec<u8>, b: &Option<Vec<u8>>| match b {
            None => true,
            Some(b) => (a.len(), a) < (b.len(), b),
        };
        loop {
            let mut changed = false;
            for r in &self.rules {
                let mut cand = Vec::new();
                let mut ok = true;
                for s in &r.body {
                    match s {
                        Symbol::T(t) => cand.push(*t),
                        Symbol::N(i) => match &best[*i] {
                            Some(w) => cand.extend_from_slice(w),
                            None => {
                                ok = false;
                                break;
                            }
                        },
                    }
                }
                if ok && better(&cand, &best[r.head]) {
                    best[r.head] = Some(cand);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        best[self.start].take().map(BinaryWord::from_bits)
    }

    /// Grammar for L(self) ∪ L(other).
    pub fn union(&self, other: &Cfg) -> Cfg {
        let offset = self.names.len() + 1;
        let mut names = vec!["S∪".to_string()];
        names.extend(self.names.iter().cloned());
        names.extend(other.names.iter().map(|s| format!("{s}'")));
        let shift = |p: &Production, by: usize| Production {
            head: p.head + by,
            body: p
                .body
                .iter()
                .map(|s| match *s {
                    Symbol::N(i) => Symbol::N(i + by),
                    t => t,
                })
                .collect(),
        };
        let mut rules = vec![
            Production {
                head: 0,
                body: vec![Symbol::N(self.start + 1)],
            },
            Production {
                head: 0,
                body: vec![Symbol::N(other.start + offset)],
            },
        ];
        rules.extend(self.rules.iter().map(|p| shift(p, 1)));
        rules.extend(other.rules.iter().map(|p| shift(p, offset)));
        Cfg {
            names,
            start: 0,
            rules,
        }
    }

    /// Image under 0 ↔ 1.
    pub fn flipped(&self) -> Cfg {
        let mut g = self.clone();
        for r in &mut g.rules {
            for s in &mut r.body {
                if let Symbol::T(b) = s {
                    *b ^= 1;
                }
            }
        }
        g
    }

    pub fn reversed(&self) -> Cfg {
        let mut g = self.clone();
        for r in &mut g.rules {
            r.body.reverse();
        }
        g
    }

    /// Removes non-generating and unreachable nonterminals. The start
    /// symbol is always kept.
    pub fn trimmed(&self) -> Cfg {
        let gen = self.generating();
        let useful_rule = |r: &Production| {
            gen[r.head] && r.body.iter().all(|s| !matches!(s, Symbol::N(i) if !gen[*i]))
        };
        let mut reach = vec![false; self.names.len()];
        reach[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(a) = stack.pop() {
            for r in self.rules.iter().filter(|r| r.head == a && useful_rule(r)) {
                for s in &r.body {
                    if let Symbol::N(i) = *s {
                        if !reach[i] {
                            reach[i] = true;
                            stack.push(i);
                        }
                    }
                }
            }
        }
        let mut map = vec![usize::MAX; self.names.len()];
        let mut names = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            if reach[i] {
                map[i] = names.len();
                names.push(name.clone());
            }
        }
        let rules = self
            .rules
            .iter()
            .filter(|r| reach[r.head] && useful_rule(r))
            .map(|r| Production {
                head: map[r.head],
                body: r
                    .body
                    .iter()
                    .map(|s| match *s {
                        Symbol::N(i) => Symbol::N(map[i]),
                        t => t,
                    })
                    .collect(),
            })
            .collect();
        Cfg {
            names,
            start: map[self.start],
            rules,
        }
    }
}

fn is_terminal_token(t: &str) -> bool {
    !t.is_empty() && t.bytes().all(|c| c == b'0' || c == b'1')
}

impl fmt::Display for Cfg {
    /// Emits the line format, start symbol first. Nonterminals without
    /// rules are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order = vec![self.start];
        order.extend((0..self.names.len()).filter(|&i| i != self.start));
        for a in order {
            let bodies: Vec<String> = self
                .rules
                .iter()
                .filter(|r| r.head == a)
                .map(|r| {
                    if r.body.is_empty() {
                        "eps".to_string()
                    } else {
                        r.body
                            .iter()
                            .map(|s| match s {
                                Symbol::T(b) => b.to_string(),
                                Symbol::N(i) => self.names[*i].clone(),
                            })
                            .collect::<Vec<_>>()
                            .join(" ")
                    }
                })
                .collect();
            if !bodies.is_empty() {
                writeln!(f, "{} -> {}", self.names[a], bodies.join(" | "))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::languages::dfa::Regex;
    use crate::words::bw;

    fn dyck() -> Cfg {
        Cfg::parse("S -> 1 S 0 S | eps").unwrap()
    }

    #[test]
    fn earley_on_dyck() {
        let g = dyck();
        assert!(g.contains(&bw("1100")));
        assert!(g.contains(&bw("")));
        assert!(!g.contains(&bw("0")));
        assert!(!g.contains(&bw("0110")));
    }

    #[test]
    fn single_letter_grammar() {
        let g = Cfg::parse("S -> A | B\nA -> 0 A | eps\nB -> 1 B | eps").unwrap();
        assert!(!g.contains(&bw("01")));
        assert!(g.contains(&bw("111")));
    }

    #[test]
    fn intersection_emptiness_examples() {
        let g = Cfg::parse("S -> 0 S 1 | eps").unwrap();
        let single = Dfa::single_letter_words();
        let both = Dfa::both_letters();
        let i1 = g.intersect_regular(&single);
        assert!(!i1.is_empty());
        assert!(i1.contains(&bw("")));
        assert!(!i1.contains(&bw("01")));
        let i2 = g.intersect_regular(&both);
        assert!(!i2.is_empty());
        assert!(i2.contains(&bw("0011")));
        assert_eq!(i2.shortest_word(), Some(bw("01")));
        let zeros = Cfg::parse("S -> 0 S | eps").unwrap();
        assert!(zeros.intersect_regular(&both).is_empty());
    }

    #[test]
    fn start_without_rules_is_empty() {
        let g = Cfg::new(vec!["S".into()], 0, vec![]).unwrap();
        assert!(g.is_empty());
        assert_eq!(g.shortest_word(), None);
    }

    #[test]
    fn undeclared_symbol_rejected() {
        assert!(matches!(Cfg::parse("S -> A"), Err(Error::Parse { .. })));
        assert!(Cfg::new(vec!["S".into()], 0, vec![Production { head: 0, body: vec![Symbol::N(3)] }]).is_err());
    }

    #[test]
    fn dfa_grammar_round_trip() {
        let d = Regex::parse("(01)*1").unwrap().to_dfa();
        let g = Cfg::from_dfa(&d);
        for w in BinaryWord::all_up_to(8) {
            assert_eq!(g.contains(&w), d.accepts(&w), "{w}");
        }
    }

    #[test]
    fn display_reparses() {
        let g = Cfg::parse("S -> 1 S 0 S | eps\n").unwrap();
        let again = Cfg::parse(&g.to_string()).unwrap();
        for w in BinaryWord::all_up_to(8) {
            assert_eq!(g.contains(&w), again.contains(&w));
        }
    }
}
