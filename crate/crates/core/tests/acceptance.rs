//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! elapsed time and pinned time limit. Criteria run one at a time so the
//! measured times are not inflated by each other.

mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use langrep::codec::{decode, encode, symbol_width, EncodedGraph, Mode};
use langrep::constructions::{build_copy, build_copy_complement, build_lyndon, build_palindrome};
use langrep::decide::{decide, Property};
use langrep::graphs::{enumerate_graphs, isomorphic, oracle, ClassTag, Graph};
use langrep::languages::{parse_language, Cfg, LanguageSpec};
use langrep::represent::{check, evaluate, search, SearchConfig};
use langrep::words::{BinaryWord, VertexWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

static SERIAL: Mutex<()> = Mutex::new(());

const SEED: u64 = 0x1a2b_3c4d;

type Outcome = Result<String, String>;

fn criterion(id: u32, name: &str, limit: Option<Duration>, body: impl FnOnce() -> Outcome) {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let pass = result.is_ok() && in_time;
    let limit_text = limit.map_or("none".to_string(), |l| format!("{:.0?}", l));
    let detail = match &result {
        Ok(d) => d.clone(),
        Err(e) => e.clone(),
    };
    let line = format!(
        "{} criterion {id:>2} {name}: {detail} [elapsed {:.2?}, limit {limit_text}]\n",
        if pass { "PASS" } else { "FAIL" },
        elapsed
    );
    // Written to the process stdout directly so the line is visible even
    // when the harness captures test output.
    let _ = std::io::stdout().write_all(line.as_bytes());
    assert!(result.is_ok(), "criterion {id} failed: {detail}");
    assert!(in_time, "criterion {id} exceeded its time limit: {elapsed:?}");
}

fn lang(src: &str) -> LanguageSpec {
    parse_language(src).unwrap()
}

fn word(src: &str) -> VertexWord {
    src.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| enumerate_graphs(k).unwrap()).collect()
}

#[test]
fn criterion_01_figure_vectors() {
    criterion(1, "figure vectors represent C4", Some(Duration::from_secs(1)), || {
        let c4 = Graph::cycle(4);
        let cases = [
            ("423121123142", "palindrome"),
            ("121324123142", "copy"),
            ("111222333444123412341124113234234223224343433433444444", "lyndon"),
            ("14213243", "<0101>"),
            ("14213243", "wrep"),
        ];
        for (w, l) in cases {
            let v = check(&word(w), &lang(l), &c4).map_err(|e| e.to_string())?;
            ensure(v.is_match(), || format!("{w} over {l}: {v:?}"))?;
        }
        Ok(format!("{} vectors match", cases.len()))
    });
}

#[test]
fn criterion_02_small_families() {
    criterion(2, "example families", Some(Duration::from_secs(5)), || {
        let w = word("14213243");
        let g = evaluate(&w, &lang("<0011>")).unwrap();
        ensure(isomorphic(&g, &Graph::indexed(4, &[(0, 1)])).unwrap(), || "<0011> is not K2 ∪ N2".into())?;
        let g = evaluate(&w, &lang("<0011,0110>")).unwrap();
        ensure(isomorphic(&g, &Graph::indexed(4, &[(0, 1), (2, 3)])).unwrap(), || {
            "<0011,0110> is not 2K2".into()
        })?;
        type Family = fn(&Graph) -> bool;
        let families: [(&str, &[usize], Family); 4] = [
            ("{}", &[1], |g| g.edge_count() == 0),
            ("not({})", &[1], |g| g.edge_count() == g.order() * (g.order() - 1) / 2),
            ("<01>", &[1, 2], is_clique_plus_isolated),
            ("<001,010,011>", &[1, 2, 3], is_biclique_plus_isolated),
        ];
        let mut checked = 0;
        for (src, freqs, member) in families {
            let l = lang(src);
            let cfg = SearchConfig::frequencies(freqs.iter().copied());
            for g in graphs_up_to(5) {
                checked += 1;
                let found = search(&g, &l, &cfg).unwrap().is_some();
                ensure(found == member(&g), || format!("{src}: {:?} found={found}", g.edges()))?;
            }
        }
        Ok(format!("2 vectors and {checked} family memberships agree"))
    });
}

#[test]
fn criterion_03_universal_builders() {
    criterion(3, "universal builders on all graphs of order <= 6", Some(Duration::from_secs(120)), || {
        let graphs = graphs_up_to(6);
        ensure(graphs.len() == 208, || format!("{} graphs", graphs.len()))?;
        type Builder = fn(&Graph) -> langrep::Result<VertexWord>;
        let builders: [(&str, Builder, &str); 4] = [
            ("palindrome", build_palindrome, "palindrome"),
            ("copy", build_copy, "copy"),
            ("copy-complement", build_copy_complement, "not(copy)"),
            ("lyndon", build_lyndon, "lyndon"),
        ];
        for (name, build, l) in builders {
            let l = lang(l);
            for g in &graphs {
                let w = build(g).map_err(|e| format!("{name} on {:?}: {e}", g.edges()))?;
                ensure(check(&w, &l, g).unwrap().is_match(), || format!("{name} on {:?}", g.edges()))?;
                if name == "copy-complement" {
                    ensure(w.len() == 4 * g.order() + 2 * g.edge_count(), || "length law".into())?;
                }
            }
        }
        Ok("208 graphs x 4 builders verified".into())
    });
}

#[test]
fn criterion_04_characterizations() {
    criterion(4, "search/oracle equivalence at order <= 6", Some(Duration::from_secs(600)), || {
        let table: [(&str, ClassTag, &[usize]); 11] = [
            ("<0101,0110>", ClassTag::Interval, &[2]),
            ("<0110>", ClassTag::Permutation, &[2]),
            ("<0101>", ClassTag::Circle, &[2]),
            ("<0011>", ClassTag::CoInterval, &[2]),
            ("<001>", ClassTag::BipartiteChain, &[1, 2]),
            ("<010>", ClassTag::Convex, &[1, 2]),
            ("<01,001>", ClassTag::Threshold, &[1, 2]),
            ("dyck", ClassTag::Comparability, &[2, 3]),
            ("lyndon-odd", ClassTag::Bipartite, &[2, 3]),
            ("balanced", ClassTag::Cluster, &[1, 2, 3, 4, 5, 6]),
            ("halfline", ClassTag::Halfline, &[1, 2, 3]),
        ];
        let graphs = graphs_up_to(6);
        let mut counts = Vec::new();
        for (src, tag, freqs) in table {
            let l = lang(src);
            let cfg = SearchConfig::frequencies(freqs.iter().copied());
            let mut members = 0;
            for g in &graphs {
                let found = search(g, &l, &cfg).map_err(|e| format!("{src}: {e}"))?.is_some();
                let expected = oracle(tag, g).unwrap();
                ensure(found == expected, || {
                    format!("{src} vs {tag}: {:?} search={found} oracle={expected}", g.edges())
                })?;
                members += usize::from(found);
            }
            counts.push(format!("{tag}={members}"));
        }
        Ok(format!("11 pairs agree on 208 graphs ({})", counts.join(" ")))
    });
}

#[test]
fn criterion_05_negative_vector() {
    criterion(5, "C5 ∪ K1 needs a non-uniform word", None, || {
        let g = Graph::indexed(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let l = lang("<0011,0110>");
        let found = search(&g, &l, &SearchConfig::uniform(2)).unwrap();
        ensure(found.is_none(), || format!("found {}", found.unwrap()))?;
        let v = check(&word("eacdabdebcf"), &l, &g).unwrap();
        ensure(v.is_match(), || format!("{v:?}"))?;
        Ok("no 2-uniform word; eacdabdebcf matches".into())
    });
}

fn pick<'a>(rng: &mut impl Rng, pool: &[&'a str]) -> &'a str {
    pool[rng.gen_range(0..pool.len())]
}

/// A hull of random words with `k` zeros and `l` ones.
fn random_nearly_uniform(rng: &mut impl Rng, k: usize, l: usize) -> LanguageSpec {
    let len = k + l;
    let words: Vec<BinaryWord> = (0u32..1 << len)
        .map(|m| BinaryWord::from_bits((0..len).map(|i| (m >> i & 1) as u8)))
        .filter(|b| b.zeros() == k && rng.gen_bool(0.5))
        .collect();
    LanguageSpec::hull_of(words)
}

#[test]
fn criterion_06_property_suites() {
    criterion(6, "randomized property suites", Some(Duration::from_secs(120)), || {
        const CASES: usize = 10_000;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let pool: Vec<(&str, LanguageSpec)> = LANGUAGE_POOL.iter().map(|s| (*s, lang(s))).collect();
        let mut run = |name: &str, f: &mut dyn FnMut(&mut ChaCha8Rng) -> Result<(), String>| {
            for case in 0..CASES {
                f(&mut rng).map_err(|e| format!("{name} case {case}: {e}"))?;
            }
            Ok::<(), String>(())
        };
        run("hereditarity", &mut |rng| {
            let (src, l) = &pool[rng.gen_range(0..pool.len())];
            let n = rng.gen_range(2..=6);
            let w = random_word(rng, n, 3);
            let keep: BTreeSet<_> = w.alphabet().iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
            if keep.is_empty() {
                return Ok(());
            }
            let sub = langrep::words::project_set(&w, &keep).unwrap();
            let lhs = evaluate(&sub, l).unwrap();
            let rhs = evaluate(&w, l).unwrap().induced(&keep).unwrap();
            ensure(lhs == rhs, || format!("{src} {w}"))
        })?;
        run("complement duality", &mut |rng| {
            let src = pick(rng, LANGUAGE_POOL);
            let n = rng.gen_range(2..=6);
            let w = random_word(rng, n, 3);
            let g = evaluate(&w, &lang(src)).unwrap();
            let h = evaluate(&w, &lang(&format!("not({src})"))).unwrap();
            ensure(h == g.complement(), || format!("{src} {w}"))
        })?;
        run("boolean compatibility", &mut |rng| {
            let (a, b) = (pick(rng, LANGUAGE_POOL), pick(rng, LANGUAGE_POOL));
            let n = rng.gen_range(2..=6);
            let w = random_word(rng, n, 3);
            let ea = edge_labels(&evaluate(&w, &lang(a)).unwrap());
            let eb = edge_labels(&evaluate(&w, &lang(b)).unwrap());
            let and = edge_labels(&evaluate(&w, &lang(&format!("and({a},{b})"))).unwrap());
            let or = edge_labels(&evaluate(&w, &lang(&format!("or({a},{b})"))).unwrap());
            ensure(and == &ea & &eb && or == &ea | &eb, || format!("{a} {b} {w}"))
        })?;
        run("reversal", &mut |rng| {
            let (src, l) = &pool[rng.gen_range(0..pool.len())];
            let n = rng.gen_range(2..=6);
            let w = random_word(rng, n, 3);
            let g = evaluate(&w, l).unwrap();
            let h = evaluate(&w.reversed(), &l.clone().reverse()).unwrap();
            ensure(g == h, || format!("{src} {w}"))
        })?;
        run("twin insertion", &mut |rng| {
            let (src, l) = &pool[rng.gen_range(0..pool.len())];
            let n = rng.gen_range(2..=5);
            let w = random_word(rng, n, 3);
            let v = w.alphabet()[rng.gen_range(0..n)].clone();
            let twin = langrep::words::Vertex::new("twin").unwrap();
            let w2 = w.insert_after_each(&v, &twin).unwrap();
            let g = evaluate(&w, l).unwrap();
            let g2 = evaluate(&w2, l).unwrap();
            let (iv, it) = (g2.index_of(&v).unwrap(), g2.index_of(&twin).unwrap());
            let twins = (0..g2.order())
                .filter(|&x| x != iv && x != it)
                .all(|x| g2.has_edge(iv, x) == g2.has_edge(it, x));
            ensure(twins && g2.remove_vertex(&twin).unwrap() == g, || format!("{src} {w} twin of {v}"))
        })?;
        let rep = lang("hull(re:0(0|1)*1)");
        run("repetition stability", &mut |rng| {
            let n = rng.gen_range(2..=6);
            let w = random_word(rng, n, 3);
            let g = evaluate(&w, &rep).unwrap();
            let ok = [2, 3].iter().all(|&j| evaluate(&w.power(j), &rep).unwrap() == g);
            ensure(ok, || format!("{w}"))
        })?;
        run("nearly-uniform bipartiteness", &mut |rng| {
            let k = rng.gen_range(1..=3);
            let l = rng.gen_range(k + 1..=4);
            let language = random_nearly_uniform(rng, k, l);
            let n = rng.gen_range(2..=6);
            let w = random_word(rng, n, 4);
            let g = evaluate(&w, &language).unwrap();
            ensure(is_bipartite(&g), || format!("({k},{l}) {language} {w}"))
        })?;
        Ok(format!("7 suites x {CASES} cases, no failures"))
    });
}

#[test]
fn criterion_07_counterexamples() {
    criterion(7, "inclusion counterexamples", None, || {
        // Equal classes from disjoint languages.
        let l1 = lang("<01>");
        let l2 = lang("{0011,0101,0110,1001,1010,1100}");
        ensure(
            BinaryWord::all_up_to(6).all(|b| !(l1.contains(&b) && l2.contains(&b))),
            || "languages intersect".into(),
        )?;
        let cfg = SearchConfig::frequencies([1, 2, 3]);
        for g in graphs_up_to(4) {
            let a = search(&g, &l1, &cfg).unwrap().is_some();
            let b = search(&g, &l2, &cfg).unwrap().is_some();
            ensure(a == b && a == is_clique_plus_isolated(&g), || {
                format!("{:?}: <01> {a}, 0²⧢1² {b}", g.edges())
            })?;
        }
        // Language inclusion without class inclusion.
        let c4 = Graph::cycle(4);
        ensure(check(&word("14213243"), &lang("<0101>"), &c4).unwrap().is_match(), || "C4 circle".into())?;
        ensure(
            search(&c4, &lang("<0101,0110>"), &SearchConfig::uniform(2)).unwrap().is_none(),
            || "C4 over <0101,0110>".into(),
        )?;
        // The three-language chain.
        let l1 = lang("<0101,0110>");
        let l2 = lang("or(<0101,0110>,<01110,01101,01011,01100,01010,01001>)");
        let l3 = lang(
            "or(or(<0101,0110>,<01110,01101,01011,01100,01010,01001>),\
             <010011,010101,010110,011001,011010,011100>)",
        );
        ensure(
            BinaryWord::all_up_to(8).all(|b| (!l1.contains(&b) || l2.contains(&b)) && (!l2.contains(&b) || l3.contains(&b))),
            || "chain is not increasing".into(),
        )?;
        let g = evaluate(&word("abdacbdcbd"), &l2).unwrap();
        let expected = Graph::parse("4 4\na b\nb c\nc d\nd a\n").unwrap();
        ensure(g == expected, || format!("G(L2, abdacbdcbd) = {}", g.to_edge_list()))?;
        ensure(search(&c4, &l1, &SearchConfig::uniform(2)).unwrap().is_none(), || "C4 over L1".into())?;
        let cfg = SearchConfig::frequencies([1, 2, 3]);
        for g in graphs_up_to(4) {
            let interval = oracle(ClassTag::Interval, &g).unwrap();
            let in_l3 = search(&g, &l3, &cfg).unwrap().is_some();
            ensure(in_l3 == interval, || format!("L3 on {:?}", g.edges()))?;
        }
        Ok("disjoint languages with equal classes; C4 separates; C4 in G(L2) only".into())
    });
}

#[test]
fn criterion_08_decision_procedure() {
    criterion(8, "treewidth/degeneracy verdicts", Some(Duration::from_secs(1)), || {
        let grammar = |text: &str| LanguageSpec::grammar(Cfg::parse(text).unwrap(), false);
        let cases: [(&str, LanguageSpec, bool); 5] = [
            ("0^n1^n", grammar("S -> 0 S 1 | eps"), false),
            ("dyck", grammar("S -> 0 S 1 S | 1 S 0 S | eps"), false),
            ("0* ∪ 1*", grammar("S -> A | B\nA -> 0 A | eps\nB -> 1 B | eps"), true),
            ("empty", grammar("S -> S"), true),
            ("<0101>", lang("<0101>"), false),
        ];
        for (name, l, expected) in cases {
            for p in [Property::BoundedTreewidth, Property::BoundedDegeneracy] {
                let d = decide(&l, p).map_err(|e| format!("{name}: {e}"))?;
                ensure(d.answer == expected, || format!("{name}: answer {}", d.answer))?;
                match &d.witness {
                    Some(w) => ensure(!expected && l.contains(w) && w.zeros() > 0 && w.ones() > 0, || {
                        format!("{name}: bad witness {w}")
                    })?,
                    None => ensure(expected, || format!("{name}: missing witness"))?,
                }
            }
        }
        Ok("5 languages decided with verified witnesses".into())
    });
}

#[test]
fn criterion_09_codec() {
    criterion(9, "codec round trips, size law and adjacency", Some(Duration::from_secs(60)), || {
        let size_law = |g: &Graph, e: &EncodedGraph| -> Result<(), String> {
            if e.mode == Mode::Sparse {
                let n = g.order();
                let bits = (4 * n + 2 * g.edge_count()) * symbol_width(n) as usize;
                ensure(e.payload_bits() == bits, || format!("size law n={n}: {} != {bits}", e.payload_bits()))?;
            }
            Ok(())
        };
        let mut exhaustive = 0;
        for g in graphs_up_to(5) {
            for mode in [Mode::Sparse, Mode::Dense] {
                for names in [true, false] {
                    let e = encode(&g, mode, names).unwrap();
                    size_law(&g, &e)?;
                    let back = EncodedGraph::from_bytes(&e.to_bytes()).map_err(|x| x.to_string())?;
                    let h = decode(&back).unwrap();
                    ensure(h.edges() == g.edges(), || format!("round trip {:?} {mode}", g.edges()))?;
                    ensure(!names || h == g, || "labels lost".into())?;
                    exhaustive += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut queries = 0;
        for i in 0..1000 {
            let n = match i % 10 {
                9 => 500,
                k if k % 2 == 0 => 5,
                _ => 50,
            };
            let mode = if (i / 10) % 2 == 0 { Mode::Sparse } else { Mode::Dense };
            let p = rng.gen_range(0.05..0.95);
            let g = random_graph(&mut rng, n, p);
            let e = encode(&g, mode, i % 3 == 0).unwrap();
            size_law(&g, &e)?;
            let back = EncodedGraph::from_bytes(&e.to_bytes()).map_err(|x| x.to_string())?;
            let h = decode(&back).unwrap();
            ensure(h.edges() == g.edges(), || format!("random graph {i} (n={n}, {mode})"))?;
            for _ in 0..10 {
                let u = rng.gen_range(0..n);
                let v = (u + rng.gen_range(1..n)) % n;
                let adj = back.adjacent(u, v).unwrap();
                ensure(adj == h.has_edge(u, v) && adj == g.has_edge(u, v), || {
                    format!("adjacency {u} {v} in graph {i}")
                })?;
                queries += 1;
            }
        }
        Ok(format!("{exhaustive} exhaustive and 1000 random round trips, {queries} adjacency queries"))
    });
}

#[test]
fn criterion_10_enumeration() {
    criterion(10, "graph enumeration counts", None, || {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        ensure(counts == [1, 2, 4, 11, 34, 156, 1044], || format!("{counts:?}"))?;
        Ok(format!("{counts:?}"))
    });
}
