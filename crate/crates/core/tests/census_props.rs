use std::collections::BTreeSet;

use tfrecon::census::{
    enumerate_levels, enumerate_nonisomorphic, enumerate_triangle_free, known_count, run_census, verify_deck_uniqueness,
    CensusOptions, DeckKind, Theorem,
};
use tfrecon::{canonical_form, Error};

#[test]
fn levels_are_sorted_canonical_and_complete() {
    let levels = enumerate_levels(8, false).unwrap();
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        assert_eq!(Some(level.len() as u64), known_count(n, false));
        assert!(level.windows(2).all(|w| w[0] < w[1]), "level {n} not strictly sorted");
        for c in level {
            assert_eq!(canonical_form(&c.to_graph()), *c);
        }
    }
}

#[test]
fn triangle_free_enumeration_matches_filtering() {
    for n in 1..=8 {
        let filtered: BTreeSet<_> = enumerate_nonisomorphic(n)
            .unwrap()
            .iter()
            .filter(|g| g.is_triangle_free())
            .map(canonical_form)
            .collect();
        let direct: BTreeSet<_> = enumerate_triangle_free(n).unwrap().iter().map(canonical_form).collect();
        assert_eq!(filtered, direct, "n = {n}");
        assert_eq!(Some(direct.len() as u64), known_count(n, true));
    }
}

#[test]
fn enumeration_bounds() {
    assert!(matches!(enumerate_nonisomorphic(0), Err(Error::Parse(_))));
    assert_eq!(enumerate_nonisomorphic(12), Err(Error::CapExceeded { n: 12, cap: 11 }));
}

#[test]
fn decks_separate_graphs_from_three_to_seven() {
    for n in 3..=7 {
        assert!(verify_deck_uniqueness(n, DeckKind::Vertex).unwrap().collisions.is_empty());
    }
    assert_eq!(verify_deck_uniqueness(2, DeckKind::Vertex).unwrap().collisions.len(), 1);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let opts = CensusOptions { n: 6, edge: true, theorems: vec![Theorem::T8, Theorem::T10], ..CensusOptions::default() };
    let render = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| serde_json::to_string(&run_census(&opts).unwrap()).unwrap())
    };
    let one = render(1);
    assert_eq!(one, render(3));
    assert_eq!(one, render(4));
}
