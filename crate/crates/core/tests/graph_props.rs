mod common;

use common::{brute_connectivity, floyd, labeled_graph, pair_count, random_graph, random_permutation};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tfrecon::census::enumerate_nonisomorphic;
use tfrecon::connectivity::{
    is_cut_set, minimum_cut_sets, vertex_connectivity_by_enumeration, vertex_connectivity_by_flow,
};
use tfrecon::{Graph, VertexSet, INFINITY};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
            let mask = bits.iter().enumerate().fold(0u128, |m, (i, &b)| m | (b as u128) << i);
            labeled_graph(n, mask)
        })
    })
}

fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

#[test]
fn connectivity_methods_agree_on_every_graph_up_to_eight() {
    for n in 1..=8 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            let a = vertex_connectivity_by_enumeration(&g);
            let b = vertex_connectivity_by_flow(&g);
            assert_eq!(a, b, "{g:?}");
            if g.is_connected() {
                assert_eq!(a.unwrap(), brute_connectivity(&g), "{g:?}");
            }
        }
    }
}

#[test]
fn connectivity_methods_agree_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut connected = 0;
    while connected < 1000 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.25..0.9);
        let g = random_graph(&mut rng, n, p);
        if !g.is_connected() {
            continue;
        }
        connected += 1;
        let k = vertex_connectivity_by_flow(&g).unwrap();
        assert_eq!(vertex_connectivity_by_enumeration(&g).unwrap(), k, "{g:?}");
        for s in minimum_cut_sets(&g) {
            assert_eq!(s.len(), k);
            assert!(is_cut_set(&g, s));
        }
    }
}

#[test]
fn distances_match_floyd_warshall() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(1..=16);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(&mut rng, n, p);
        let reference = floyd(&g);
        let m = g.distance_matrix();
        for u in 0..n {
            for v in 0..n {
                let expected = reference[u][v].map_or(INFINITY, |d| d as u8);
                assert_eq!(m.get(u, v), expected);
            }
        }
        let diameter = reference.iter().flatten().map(|d| d.map_or(INFINITY, |d| d as u8)).max().unwrap();
        assert_eq!(g.diameter(), diameter);
    }
}

#[test]
fn named_graphs() {
    let p = Graph::petersen();
    assert_eq!((p.n(), p.edge_count(), p.diameter()), (10, 15, 2));
    assert!(p.is_triangle_free() && !p.is_bipartite());
    assert_eq!(vertex_connectivity_by_flow(&p), Ok(3));

    let c6 = Graph::cycle(6).unwrap();
    assert_eq!(c6.diameter(), 3);
    assert_eq!(c6.complement().diameter(), 2);
    assert_eq!(vertex_connectivity_by_flow(&c6), Ok(2));

    let k33 = Graph::complete_bipartite(3, 3).unwrap();
    assert_eq!(k33.diameter(), 2);
    assert_eq!(k33.complement().diameter(), INFINITY);
    assert_eq!(vertex_connectivity_by_flow(&k33), Ok(3));
    assert_eq!(minimum_cut_sets(&k33).len(), 2);

    let k4 = Graph::complete(4).unwrap();
    assert_eq!(vertex_connectivity_by_flow(&k4), Ok(3));
    assert!(minimum_cut_sets(&k4).is_empty());
}

proptest! {
    #[test]
    fn invariants_survive_relabeling((g, perm) in arb_graph_and_perm(10)) {
        let h = g.permute(&perm);
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.diameter(), g.diameter());
        prop_assert_eq!(h.is_triangle_free(), g.is_triangle_free());
        prop_assert_eq!(h.triangle_count(), g.triangle_count());
        prop_assert_eq!(h.is_bipartite(), g.is_bipartite());
        prop_assert_eq!(vertex_connectivity_by_flow(&h), vertex_connectivity_by_flow(&g));
        let mut a = g.degrees();
        let mut b = h.degrees();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(minimum_cut_sets(&h).len(), minimum_cut_sets(&g).len());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(16)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g);
        prop_assert_eq!(c.edge_count() + g.edge_count(), pair_count(g.n()));
    }

    #[test]
    fn bipartition_is_proper(g in arb_graph(16)) {
        // an edge whose endpoints are equally far from some vertex closes an odd cycle
        let d = floyd(&g);
        let odd_cycle = g.edges().any(|(u, v)| (0..g.n()).any(|r| d[r][u].is_some() && d[r][u] == d[r][v]));
        match g.bipartition() {
            Some((x, y)) => {
                prop_assert!(!odd_cycle);
                prop_assert!(x.intersection(y).is_empty());
                prop_assert_eq!(x.union(y), g.vertices());
                prop_assert!(g.is_independent(x) && g.is_independent(y));
            }
            None => prop_assert!(odd_cycle),
        }
    }

    #[test]
    fn diameter_is_infinite_exactly_when_disconnected(g in arb_graph(16)) {
        prop_assert_eq!(g.diameter() == INFINITY, !g.is_connected() && g.n() > 1);
    }

    #[test]
    fn delete_vertex_matches_induced(g in arb_graph(16), pick in any::<usize>()) {
        let v = pick % g.n();
        let d = g.delete_vertex(v).unwrap();
        let rest: VertexSet = g.vertices().iter().filter(|&u| u != v).collect();
        prop_assert_eq!(d, g.induced(rest));
        prop_assert_eq!(d.edge_count() + g.degree(v), g.edge_count());
    }

    #[test]
    fn random_relabel_helper_is_a_permutation(seed in any::<u64>(), n in 1usize..=16) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut p = random_permutation(&mut rng, n);
        p.sort_unstable();
        prop_assert_eq!(p, (0..n).collect::<Vec<_>>());
    }
}
