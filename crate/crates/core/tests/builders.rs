//! Every construction on every graph of order at most 6: it succeeds
//! exactly when the graph is in its class, and the word it returns
//! represents the graph over the construction's language.

use langrep::constructions::Recipe;
use langrep::graphs::{enumerate_graphs, oracle, ClassTag};
use langrep::represent::check;
use langrep::Error;

#[test]
fn builders_are_sound_up_to_order_6() {
    let graphs: Vec<_> = (1..=6).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    for recipe in Recipe::ALL {
        let language = recipe.language();
        let mut built = 0;
        for g in &graphs {
            let applies = recipe.applies(g).unwrap();
            match recipe.build(g) {
                Ok(w) => {
                    assert!(applies, "{recipe} built a word outside its class: {:?}", g.edges());
                    assert!(check(&w, &language, g).unwrap().is_match(), "{recipe} on {:?}", g.edges());
                    built += 1;
                }
                Err(Error::Precondition(_)) => {
                    assert!(!applies, "{recipe} refused a member: {:?}", g.edges())
                }
                Err(e) => panic!("{recipe} on {:?}: {e}", g.edges()),
            }
        }
        if recipe.precondition().is_none() {
            assert_eq!(built, graphs.len(), "{recipe} is universal");
        }
    }
}

#[test]
fn co_circle_domain_ignores_isolated_vertices() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let core: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
            let expected = core.is_empty() || oracle(ClassTag::CoCircle, &g.induced_indices(&core)).unwrap();
            assert_eq!(Recipe::CoCircle.applies(&g).unwrap(), expected, "{:?}", g.edges());
        }
    }
}
