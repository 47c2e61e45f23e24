//! Built-in suites run by `langrep selftest`.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graphs::{enumerate_graphs, oracle, ClassTag, Graph};
use crate::languages::{parse_language, LanguageSpec};
use crate::represent::{check, evaluate_unchecked, search, SearchConfig};
use crate::words::{project_set, BinaryWord, Vertex, VertexWord};

/// Wall-clock budget reported alongside the results.
pub const SELFTEST_BUDGET_MS: u128 = 60_000;

const FIGURE_VECTORS: [(&str, &str); 5] = [
    ("423121123142", "palindrome"),
    ("121324123142", "copy"),
    ("111222333444123412341124113234234223224343433433444444", "lyndon"),
    ("14213243", "<0101>"),
    ("14213243", "wrep"),
];

const CHARACTERIZATIONS: [(&str, ClassTag, &[usize]); 7] = [
    ("<0101,0110>", ClassTag::Interval, &[2]),
    ("<0110>", ClassTag::Permutation, &[2]),
    ("<0101>", ClassTag::Circle, &[2]),
    ("<0011>", ClassTag::CoInterval, &[2]),
    ("<001>", ClassTag::BipartiteChain, &[1, 2]),
    ("<010>", ClassTag::Convex, &[1, 2]),
    ("<01,001>", ClassTag::Threshold, &[1, 2]),
];

const PROPERTY_LANGUAGES: [&str; 6] = ["<0101>", "<0011,0110>", "wrep", "palindrome", "copy", "hull(re:0(0|1)*1)"];

#[derive(Debug, Clone, Default)]
pub struct SelftestOptions {
    pub seed: u64,
    pub cases: usize,
    /// Added to the property suite's languages.
    pub extra_language: Option<String>,
}

fn suite(name: &str, cases: usize, failures: Vec<Value>) -> Value {
    json!({"name": name, "pass": failures.is_empty(), "cases": cases, "failures": failures})
}

fn c4() -> Graph {
    Graph::cycle(4)
}

fn figure_vectors() -> Result<Value> {
    let mut failures = Vec::new();
    for (w, l) in FIGURE_VECTORS {
        let word: VertexWord = w.parse()?;
        if !check(&word, &parse_language(l)?, &c4())?.is_match() {
            failures.push(json!({"word": w, "language": l}));
        }
    }
    Ok(suite("figure-vectors", FIGURE_VECTORS.len(), failures))
}

fn characterizations() -> Result<Value> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for (src, tag, freqs) in CHARACTERIZATIONS {
        let l = parse_language(src)?;
        let cfg = SearchConfig::frequencies(freqs.iter().copied());
        for n in 1..=5 {
            for g in enumerate_graphs(n)? {
                cases += 1;
                let found = search(&g, &l, &cfg)?.is_some();
                if found != oracle(tag, &g)? {
                    failures.push(json!({"language": src, "class": tag.name(), "graph": g.to_json_value()}));
                }
            }
        }
    }
    Ok(suite("characterizations-n5", cases, failures))
}

/// A random word over `n` letters, each occurring one to three times.
pub(crate) fn random_word(rng: &mut impl Rng, n: usize) -> VertexWord {
    let mut symbols: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, rng.gen_range(1..=3))).collect();
    symbols.shuffle(rng);
    let alphabet: Vec<Vertex> = crate::graphs::index_labels(n);
    VertexWord::from_indices(&alphabet, &symbols).expect("every letter occurs")
}

fn sampled_symmetry(l: &LanguageSpec, rng: &mut impl Rng) -> bool {
    (0..200).all(|_| {
        let len = rng.gen_range(0..=10);
        let b = BinaryWord::from_bits((0..len).map(|_| rng.gen_range(0..=1u8)));
        l.contains(&b) == l.contains(&b.complement())
    })
}

fn properties(opts: &SelftestOptions) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut sources: Vec<String> = PROPERTY_LANGUAGES.iter().map(|s| s.to_string()).collect();
    sources.extend(opts.extra_language.clone());
    let mut failures = Vec::new();
    let mut cases = 0;
    for src in &sources {
        let l = parse_language(src)?;
        let mut fail = |invariant: &str, word: Option<&VertexWord>| {
            failures.push(json!({"language": src, "invariant": invariant, "word": word.map(|w| w.to_string())}));
        };
        cases += 1;
        if l.require_symmetric().is_err() || !sampled_symmetry(&l, &mut rng) {
            fail("symmetric", None);
        }
        let not_l = l.clone().complement().ok();
        let rev_l = l.clone().reverse();
        let (mut hered, mut dual, mut rev) = (true, true, true);
        for _ in 0..opts.cases {
            cases += 1;
            let n = rng.gen_range(2..=6);
            let w = random_word(&mut rng, n);
            let g = evaluate_unchecked(&w, &l);
            let keep: BTreeSet<Vertex> = w.alphabet().iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
            if hered && !keep.is_empty() {
                let sub = project_set(&w, &keep)?;
                if evaluate_unchecked(&sub, &l) != g.induced(&keep)? {
                    hered = false;
                    fail("hereditarity", Some(&w));
                }
            }
            if let (true, Some(nl)) = (dual, &not_l) {
                if evaluate_unchecked(&w, nl) != g.complement() {
                    dual = false;
                    fail("complement-duality", Some(&w));
                }
            }
            if rev && evaluate_unchecked(&w.reversed(), &rev_l) != g {
                rev = false;
                fail("reversal", Some(&w));
            }
        }
    }
    Ok(suite("properties", cases, failures))
}

/// Runs the figure-vector, characterization and property suites.
pub fn selftest(opts: &SelftestOptions) -> Result<Value> {
    let start = Instant::now();
    let suites = vec![figure_vectors()?, characterizations()?, properties(opts)?];
    let elapsed = start.elapsed().as_millis();
    let pass = suites.iter().all(|s| s["pass"] == json!(true)) && elapsed <= SELFTEST_BUDGET_MS;
    Ok(json!({
        "pass": pass,
        "seed": opts.seed,
        "elapsed_ms": elapsed as u64,
        "budget_ms": SELFTEST_BUDGET_MS as u64,
        "within_budget": elapsed <= SELFTEST_BUDGET_MS,
        "suites": suites,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failing_invariants(report: &Value) -> Vec<String> {
        report["suites"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|s| s["failures"].as_array().unwrap().iter())
            .filter_map(|f| f["invariant"].as_str().map(String::from))
            .collect()
    }

    #[test]
    fn default_build_passes() {
        let r = selftest(&SelftestOptions { seed: 7, cases: 40, extra_language: None }).unwrap();
        assert_eq!(r["pass"], json!(true), "{r}");
    }

    #[test]
    fn broken_language_is_named() {
        let opts = SelftestOptions { seed: 7, cases: 20, extra_language: Some("re:0*1".into()) };
        let r = selftest(&opts).unwrap();
        assert_eq!(r["pass"], json!(false));
        assert_eq!(failing_invariants(&r), vec!["symmetric".to_string()]);
    }
}
