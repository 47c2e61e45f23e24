//! The `langrep` command line: argument definitions and command execution.
//!
//! Exit codes: 0 on success, 1 on a negative verdict (mismatch, no word
//! found, property false, non-adjacent pair, failed self-test, graph outside
//! the requested class), 2 on usage, parse, format and other errors.

mod selftest;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codec::{self, EncodedGraph, Mode};
use crate::constructions::Recipe;
use crate::decide::{decide_cfg, Property};
use crate::error::{Error, Result};
use crate::graphs::{enumerate_graphs, ClassTag, Graph};
use crate::languages::{parse_language, Cfg};
use crate::represent::{self, Verdict};
use crate::words::VertexWord;

pub use selftest::{selftest, SelftestOptions};

/// Frequencies tried by `classes` when `--freq` is not given.
pub const DEFAULT_CLASS_FREQUENCIES: [usize; 2] = [1, 2];

/// Largest order accepted by `classes`.
pub const MAX_CLASS_ORDER: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "langrep", version, about = "Graph classes induced by binary languages")]
pub struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
    Edges,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate G(L, w).
    Eval {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum)]
        out: Option<GraphFormat>,
    },
    /// Check that a word represents a graph (up to isomorphism).
    Check {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        word: String,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Search for a word representing a graph.
    Search {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        graph: PathBuf,
        /// Allowed letter frequencies, e.g. `2`, `1,2` or `1-3`.
        #[arg(long)]
        freq: Option<String>,
        /// Shorthand for `--freq k`.
        #[arg(long, conflicts_with = "freq")]
        uniform: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Build a representing word with a class-specific construction.
    Build {
        /// A class tag, or a construction name.
        #[arg(long)]
        class: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "emit_cert")]
        emit_word: bool,
        #[arg(long)]
        emit_cert: bool,
    },
    /// Split G(L, w) by letter frequencies.
    Decompose {
        #[arg(long)]
        lang: String,
        #[arg(long)]
        word: String,
    },
    /// Decide bounded treewidth or degeneracy for a grammar's class.
    Decide {
        #[arg(long)]
        cfg: PathBuf,
        #[arg(long)]
        property: String,
    },
    /// Write a graph in the binary word format.
    Encode {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        mode: String,
        #[arg(short, long)]
        out: PathBuf,
        /// Omit the vertex name table.
        #[arg(long)]
        anonymous: bool,
    },
    /// Read a graph from the binary word format.
    Decode {
        input: PathBuf,
        #[arg(long, value_enum)]
        out: Option<GraphFormat>,
    },
    /// Query one adjacency directly in an encoded file.
    Adjacent { input: PathBuf, u: String, v: String },
    /// List the order-n graphs representable over a language.
    Classes {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        lang: String,
        #[arg(long)]
        freq: Option<String>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the built-in suites and report pass/fail as JSON.
    Selftest {
        /// An extra language for the property suite.
        #[arg(long)]
        lang: Option<String>,
        /// Random cases per property and language.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

/// What a command produced: text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }

    fn verdict(stdout: String, positive: bool) -> Outcome {
        Outcome {
            stdout,
            code: if positive { 0 } else { 1 },
        }
    }
}

/// Parses `2`, `1,2`, `1-3` or `1..3` into a sorted frequency list.
pub fn parse_frequencies(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || Error::InvalidArguments(format!("bad frequency item {item:?}"));
        let (lo, hi) = match item.split_once("..").or_else(|| item.split_once('-')) {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => {
                let k: usize = item.parse().map_err(|_| bad())?;
                (k, k)
            }
        };
        if lo == 0 || lo > hi {
            return Err(bad());
        }
        out.extend(lo..=hi);
    }
    out.sort_unstable();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidArguments("empty frequency set".into()));
    }
    Ok(out)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidArguments(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read_text(path)?)
}

fn read_encoded(path: &Path) -> Result<EncodedGraph> {
    let bytes = fs::read(path)
        .map_err(|e| Error::InvalidArguments(format!("cannot read {}: {e}", path.display())))?;
    EncodedGraph::from_bytes(&bytes)
}

fn render_graph(g: &Graph, json_flag: bool, out: Option<GraphFormat>) -> String {
    match (json_flag, out.unwrap_or(GraphFormat::Edges)) {
        (true, _) | (false, GraphFormat::Json) => g.to_json(),
        (false, GraphFormat::Dot) => g.to_dot(),
        (false, GraphFormat::Edges) => g.to_edge_list(),
    }
}

fn render(json_flag: bool, value: Value, text: String) -> String {
    if json_flag {
        value.to_string()
    } else {
        text
    }
}

fn resolve_recipe(class: &str) -> Result<Recipe> {
    if let Ok(tag) = class.parse::<ClassTag>() {
        return Recipe::for_class(tag)
            .ok_or_else(|| Error::Unsupported(format!("no construction for class {tag}")));
    }
    class.parse::<Recipe>()
}

/// Runs one command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let js = cli.json;
    match &cli.command {
        Command::Eval { lang, word, out } => {
            let l = parse_language(lang)?;
            let w: VertexWord = word.parse()?;
            let g = represent::evaluate(&w, &l)?;
            Ok(Outcome::ok(render_graph(&g, js, *out)))
        }
        Command::Check { lang, word, graph } => {
            let l = parse_language(lang)?;
            let w: VertexWord = word.parse()?;
            let g = read_graph(graph)?;
            let v = represent::check(&w, &l, &g)?;
            let (value, text) = match &v {
                Verdict::Match => (json!({"verdict": "match"}), "match".to_string()),
                Verdict::Mismatch { pair } => (
                    json!({"verdict": "mismatch", "pair": pair.as_ref().map(|(a, b)| [a.as_str(), b.as_str()])}),
                    match pair {
                        Some((a, b)) => format!("mismatch at {a} {b}"),
                        None => "mismatch".to_string(),
                    },
                ),
            };
            Ok(Outcome::verdict(render(js, value, text), v.is_match()))
        }
        Command::Search { lang, graph, freq, uniform, budget } => {
            let l = parse_language(lang)?;
            let g = read_graph(graph)?;
            let freqs = match (freq, uniform) {
                (Some(f), _) => parse_frequencies(f)?,
                (None, Some(k)) if *k > 0 => vec![*k],
                _ => return Err(Error::InvalidArguments("search needs --freq or --uniform".into())),
            };
            let mut cfg = represent::SearchConfig::frequencies(freqs);
            if let Some(b) = budget {
                cfg = cfg.with_budget(*b);
            }
            let found = represent::search(&g, &l, &cfg)?;
            let value = json!({"found": found.is_some(), "word": found.as_ref().map(|w| w.to_string())});
            let text = found.as_ref().map_or("none".to_string(), |w| w.to_string());
            Ok(Outcome::verdict(render(js, value, text), found.is_some()))
        }
        Command::Build { class, graph, emit_word: _, emit_cert } => {
            let recipe = resolve_recipe(class)?;
            let g = read_graph(graph)?;
            let w = match recipe.build(&g) {
                Err(Error::Precondition(msg)) => {
                    let value = json!({"recipe": recipe.name(), "error": "precondition", "message": msg});
                    return Ok(Outcome::verdict(render(js, value, format!("not applicable: {msg}")), false));
                }
                other => other?,
            };
            let l = recipe.language();
            let verdict = represent::check(&w, &l, &g)?;
            let cert = json!({
                "recipe": recipe.name(),
                "language": l.to_string(),
                "word": w.to_string(),
                "verdict": if verdict.is_match() { "match" } else { "mismatch" },
            });
            let stdout = if *emit_cert {
                serde_json::to_string_pretty(&cert).expect("json")
            } else {
                render(js, json!({"recipe": recipe.name(), "word": w.to_string()}), w.to_string())
            };
            Ok(Outcome::verdict(stdout, verdict.is_match()))
        }
        Command::Decompose { lang, word } => {
            let l = parse_language(lang)?;
            let w: VertexWord = word.parse()?;
            let d = represent::decompose(&w, &l)?;
            let value = json!({"parts": d.parts.iter().map(|p| json!({
                "k": p.k, "l": p.l, "graph": p.graph.to_json_value(),
            })).collect::<Vec<_>>()});
            let mut text = String::new();
            for p in &d.parts {
                text.push_str(&format!("({}, {})\n{}", p.k, p.l, p.graph.to_edge_list()));
            }
            Ok(Outcome::ok(render(js, value, text)))
        }
        Command::Decide { cfg, property } => {
            let property: Property = property.parse()?;
            let grammar = Cfg::parse(&read_text(cfg)?)?;
            let d = decide_cfg(&grammar, property);
            Ok(Outcome::verdict(d.to_json().to_string(), d.answer))
        }
        Command::Encode { graph, mode, out, anonymous } => {
            let mode: Mode = mode.parse()?;
            let g = read_graph(graph)?;
            let e = codec::encode(&g, mode, !anonymous)?;
            let bytes = e.to_bytes();
            fs::write(out, &bytes)
                .map_err(|err| Error::InvalidArguments(format!("cannot write {}: {err}", out.display())))?;
            let value = json!({
                "mode": mode.to_string(), "vertices": e.n, "edges": g.edge_count(),
                "symbols": e.len, "payload_bits": e.payload_bits(), "bytes": bytes.len(),
            });
            let text = format!(
                "{mode}: {} vertices, {} symbols, {} payload bits, {} bytes",
                e.n,
                e.len,
                e.payload_bits(),
                bytes.len()
            );
            Ok(Outcome::ok(render(js, value, text)))
        }
        Command::Decode { input, out } => {
            let g = codec::decode(&read_encoded(input)?)?;
            Ok(Outcome::ok(render_graph(&g, js, *out)))
        }
        Command::Adjacent { input, u, v } => {
            let adj = read_encoded(input)?.adjacent_labels(u, v)?;
            Ok(Outcome::verdict(render(js, json!({"adjacent": adj}), adj.to_string()), adj))
        }
        Command::Classes { order, lang, freq, budget } => {
            if *order == 0 || *order > MAX_CLASS_ORDER {
                return Err(Error::InvalidArguments(format!(
                    "classes supports orders 1..={MAX_CLASS_ORDER}"
                )));
            }
            let l = parse_language(lang)?;
            let freqs = match freq {
                Some(f) => parse_frequencies(f)?,
                None => DEFAULT_CLASS_FREQUENCIES.to_vec(),
            };
            let mut cfg = represent::SearchConfig::frequencies(freqs.clone());
            if let Some(b) = budget {
                cfg = cfg.with_budget(*b);
            }
            let mut listed = Vec::new();
            for g in enumerate_graphs(*order)? {
                if let Some(w) = represent::search(&g, &l, &cfg)? {
                    listed.push((g, w));
                }
            }
            let value = json!({
                "order": order,
                "frequencies": freqs,
                "graphs": listed.iter().map(|(g, w)| json!({
                    "graph": g.to_json_value(), "word": w.to_string(),
                })).collect::<Vec<_>>(),
            });
            let mut text = format!("{} graphs\n", listed.len());
            for (g, w) in &listed {
                text.push_str(&format!("word {w}\n{}", g.to_edge_list()));
            }
            Ok(Outcome::ok(render(js, value, text)))
        }
        Command::Selftest { lang, cases } => {
            let opts = SelftestOptions {
                seed: cli.seed,
                cases: *cases,
                extra_language: lang.clone(),
            };
            let report = selftest(&opts)?;
            let pass = report["pass"].as_bool().unwrap_or(false);
            Ok(Outcome::verdict(
                serde_json::to_string_pretty(&report).expect("json"),
                pass,
            ))
        }
    }
}

/// Exit code for an error: a failed precondition is a negative verdict,
/// everything else is a usage or format problem.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::Precondition(_) => 1,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frequency_sets() {
        assert_eq!(parse_frequencies("2").unwrap(), vec![2]);
        assert_eq!(parse_frequencies("3,1-2").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_frequencies("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert!(parse_frequencies("0").is_err());
        assert!(parse_frequencies("x").is_err());
        assert!(parse_frequencies("").is_err());
    }

    #[test]
    fn recipes_resolve_from_tags_and_names() {
        assert_eq!(resolve_recipe("interval").unwrap(), Recipe::Interval);
        assert_eq!(resolve_recipe("bipartite").unwrap(), Recipe::LyndonOdd);
        assert_eq!(resolve_recipe("copy").unwrap(), Recipe::Copy);
        assert!(resolve_recipe("nonsense").is_err());
    }

    fn run(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("langrep").chain(args.iter().copied())).unwrap();
        execute(&cli).unwrap()
    }

    #[test]
    fn classes_examples() {
        let out = run(&["--json", "classes", "--order", "2", "--lang", "{}"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let graphs = v["graphs"].as_array().unwrap();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0]["graph"]["edges"].as_array().unwrap().is_empty());
        let out = run(&["--json", "classes", "--order", "3", "--lang", "<01>"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let edges: Vec<usize> = v["graphs"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| g["graph"]["edges"].as_array().unwrap().len())
            .collect();
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 3]);
    }
}
