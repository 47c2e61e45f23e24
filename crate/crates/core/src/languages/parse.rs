//! The textual language syntax accepted by `--lang`.
//!
//! ```text
//! expr := '<' words '>'            hull of a finite set
//!       | '{' words '}'            finite set, must be closed under 0 <-> 1
//!       | 're:' REGEX              regular expression
//!       | 'cfg:' PATH              grammar file (wrap in hull)
//!       | 'cfg-sym:' PATH          grammar file attested as symmetric
//!       | NAME [ '(' INT ')' ]     builtin, e.g. wrep, uniform(2), halfline
//!       | OP '(' expr {',' expr} ')'  with OP in not, and, or, hull, rev, trash-ext
//! ```

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::words::BinaryWord;

use super::{trash_extension, Builtin, Cfg, LanguageSpec};

/// Parses a language expression.
pub fn parse_language(src: &str) -> Result<LanguageSpec> {
    let mut p = Parser { src, pos: 0 };
    let l = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(Error::parse(p.pos, "trailing input after language expression"));
    }
    Ok(l)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {c:?}")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expr(&mut self) -> Result<LanguageSpec> {
        match self.peek() {
            Some('<') => {
                self.pos += 1;
                let words = self.words('>')?;
                Ok(LanguageSpec::hull_of(words))
            }
            Some('{') => {
                self.pos += 1;
                let words = self.words('}')?;
                LanguageSpec::finite(words)
            }
            Some(_) => self.named(),
            None => Err(Error::parse(self.pos, "expected a language expression")),
        }
    }

    fn words(&mut self, close: char) -> Result<BTreeSet<BinaryWord>> {
        let start = self.pos;
        let Some(end) = self.rest().find(close) else {
            return Err(Error::parse(start, format!("missing {close:?}")));
        };
        let body = &self.rest()[..end];
        let mut out = BTreeSet::new();
        let mut off = start;
        for item in body.split(',') {
            let t = item.trim();
            if !(t.is_empty() && body.trim().is_empty()) {
                let w: BinaryWord = t
                    .parse()
                    .map_err(|_| Error::parse(off, format!("invalid binary word {t:?}")))?;
                out.insert(w);
            }
            off += item.len() + 1;
        }
        self.pos += end + close.len_utf8();
        Ok(out)
    }

    /// Reads a raw operand up to a top-level `,` or `)`.
    fn raw_operand(&mut self) -> &'a str {
        let r = self.rest();
        let mut depth = 0usize;
        let mut end = r.len();
        for (i, c) in r.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    end = i;
                    break;
                }
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        self.pos += end;
        r[..end].trim()
    }

    fn named(&mut self) -> Result<LanguageSpec> {
        let start = self.pos;
        let r = self.rest();
        let len = r
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-'))
            .unwrap_or(r.len());
        let name = &r[..len];
        self.pos += len;
        if name.is_empty() {
            return Err(Error::parse(start, "expected a language expression"));
        }
        if self.rest().starts_with(':') {
            self.pos += 1;
            let body_at = self.pos;
            let body = self.raw_operand();
            return match name {
                "re" => LanguageSpec::regex(body).map_err(|e| match e {
                    Error::Parse { offset, message } => Error::parse(body_at + offset.min(body.len()), message),
                    e => e,
                }),
                "cfg" | "cfg-sym" => {
                    let text = std::fs::read_to_string(body)
                        .map_err(|e| Error::InvalidArguments(format!("cannot read grammar {body:?}: {e}")))?;
                    Ok(LanguageSpec::grammar(Cfg::parse(&text)?, name == "cfg-sym"))
                }
                _ => Err(Error::parse(start, format!("unknown prefix {name:?}"))),
            };
        }
        let has_args = self.peek() == Some('(');
        match name {
            "not" | "and" | "or" | "hull" | "rev" | "trash-ext" => {
                if !has_args {
                    return Err(Error::parse(self.pos, format!("{name} needs arguments")));
                }
                self.pos += 1;
                let mut args = Vec::new();
                loop {
                    if name == "hull" && self.peek() == Some('{') {
                        self.pos += 1;
                        args.push(LanguageSpec::hull_of(self.words('}')?));
                    } else {
                        args.push(self.expr()?);
                    }
                    if self.peek() == Some(',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.eat(')')?;
                let arity = if matches!(name, "and" | "or") { 2 } else { 1 };
                if args.len() != arity {
                    return Err(Error::parse(start, format!("{name} takes {arity} argument(s)")));
                }
                let mut it = args.into_iter();
                let a = it.next().unwrap();
                match name {
                    "not" => a.complement(),
                    "and" => a.and(it.next().unwrap()),
                    "or" => Ok(a.or(it.next().unwrap())),
                    "hull" => Ok(a.hull()),
                    "rev" => Ok(a.reverse()),
                    _ => trash_extension(&a),
                }
            }
            "halfline" if !has_args => Ok(LanguageSpec::halfline()),
            _ => {
                let param = if has_args {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let digits = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
                    let k = self.rest()[..digits]
                        .parse::<usize>()
                        .map_err(|_| Error::parse(at, "expected an integer parameter"))?;
                    self.pos += digits;
                    self.eat(')')?;
                    Some(k)
                } else {
                    None
                };
                Builtin::from_name(name, param)
                    .map(LanguageSpec::Builtin)
                    .ok_or_else(|| Error::parse(start, format!("unknown language {name:?}")))
            }
        }
    }
}
