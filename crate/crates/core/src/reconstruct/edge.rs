//! Edge reconstruction of triangle-free graphs in G2 and G3.
//!
//! In an edge-card `H = G - uv` of a triangle-free diameter-2 graph, every pair
//! at distance at least 3 contains `u` or `v`, and `{u, v}` is one of them.

use serde::Serialize;

use super::{
    finish_edge, oracle_edge_reconstruct, oracle_edge_reconstruct_bipartite, oracle_reconstruct, prevalidate_edge,
    reconstruct_g3_tf_k1, reconstruct_g3_tf_k3plus, violation, Options, ReconstructionResult, Route, Witness,
};
use crate::canon::is_isomorphic;
use crate::classify::HypothesisClass;
use crate::connectivity::vertex_connectivity;
use crate::deck::{compute_deck, edge_endpoint_degrees, EdgeDeck};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;

/// Unordered vertex pairs `(x, y)`, `x < y`, at distance at least 3 (or unreachable).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PHSet {
    pub pairs: Vec<(usize, usize)>,
}

impl PHSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.pairs.binary_search(&key).is_ok()
    }

    /// How many pairs each vertex of an `n`-vertex graph appears in.
    pub fn occurrences(&self, n: usize) -> Vec<usize> {
        let mut count = vec![0; n];
        for &(a, b) in &self.pairs {
            count[a] += 1;
            count[b] += 1;
        }
        count
    }
}

pub fn compute_ph(h: &Graph) -> PHSet {
    let d = h.distance_matrix();
    let n = h.n();
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| d.get(a, b) >= 3).collect();
    PHSet { pairs }
}

/// What one edge-card says about the missing edge.
enum Reading {
    Edge(usize, usize, Route),
    Tie,
}

fn read_card(ed: &EdgeDeck, index: usize, h: &Graph) -> Result<Reading> {
    let ph = compute_ph(h);
    let count = ph.occurrences(h.n());
    match ph.len() {
        0 => Err(violation("edge-card has no pair at distance 3")),
        1 => {
            let (x, y) = ph.pairs[0];
            Ok(Reading::Edge(x, y, Route::Thm10P1))
        }
        2 => {
            let Some(u) = (0..h.n()).find(|&v| count[v] == 2) else {
                return Err(violation("the two far pairs share no vertex"));
            };
            let mut others = ph.pairs.iter().map(|&(a, b)| if a == u { b } else { a });
            let (v1, v2) = (others.next().unwrap(), others.next().unwrap());
            let (da, db) = edge_endpoint_degrees(ed, index)?;
            // endpoint degrees in G are d_H(u) + 1 and d_H(v) + 1
            let du = h.degree(u) + 1;
            let dv = if da == du {
                db
            } else if db == du {
                da
            } else {
                return Err(violation("no endpoint degree matches the shared far vertex"));
            };
            if h.degree(v1) == h.degree(v2) {
                return Ok(Reading::Tie);
            }
            match [v1, v2].into_iter().find(|&w| h.degree(w) + 1 == dv) {
                Some(v) => Ok(Reading::Edge(u, v, Route::Thm10P2Degree)),
                None => Err(violation("neither far partner has the endpoint degree")),
            }
        }
        _ => {
            let hubs: Vec<usize> = (0..h.n()).filter(|&v| count[v] >= 2).collect();
            match hubs[..] {
                [x, y] => Ok(Reading::Edge(x, y, Route::Thm10K3)),
                [x] => {
                    // every pair contains x; the partners induce a star, join x to its centre
                    if ph.pairs.iter().any(|&(a, b)| a != x && b != x) {
                        return Err(violation("a far pair avoids the only repeated vertex"));
                    }
                    let partners: Vec<usize> = ph.pairs.iter().map(|&(a, b)| if a == x { b } else { a }).collect();
                    let centre = partners
                        .iter()
                        .copied()
                        .find(|&c| partners.iter().all(|&w| w == c || h.has_edge(c, w)));
                    match centre {
                        Some(c) => Ok(Reading::Edge(x, c, Route::Thm10K3)),
                        None => Err(violation("far partners do not form a star")),
                    }
                }
                _ => Err(violation(format!("{} vertices repeat among the far pairs", hubs.len()))),
            }
        }
    }
}

/// Edge-reconstructs a triangle-free diameter-2 graph, starting from the first edge-card.
pub fn edge_reconstruct_g2_tf(ed: &EdgeDeck, opts: &Options) -> Result<ReconstructionResult> {
    edge_reconstruct_g2_tf_from(ed, opts, 0)
}

/// As [`edge_reconstruct_g2_tf`], starting from edge-card `start`. When the
/// start card ties, the other distinct cards are tried in certificate order;
/// if all tie the graph is bipartite and the bipartite oracle decides.
pub fn edge_reconstruct_g2_tf_from(ed: &EdgeDeck, opts: &Options, start: usize) -> Result<ReconstructionResult> {
    prevalidate_edge(ed, opts, HypothesisClass::Diameter2TriangleFree)?;
    if start >= ed.cards().len() {
        return Err(Error::MalformedDeck(format!("edge-card index {start} out of range")));
    }
    let start_cert = ed.cards()[start];
    let order = std::iter::once(start)
        .chain(ed.distinct_card_indices().into_iter().filter(|&i| ed.cards()[i] != start_cert));
    let mut tried = 0;
    for index in order {
        let h = ed.card(index);
        tried += 1;
        if let Reading::Edge(x, y, route) = read_card(ed, index, &h)? {
            let witness = Witness {
                card: Some(emit_graph6(&h)),
                card_index: Some(index),
                joined: vec![x, y],
                candidates: Some(tried),
                ..Witness::default()
            };
            return finish_edge(ed, h.with_edge(x, y), route, witness);
        }
    }
    let found = oracle_edge_reconstruct_bipartite(ed, opts.oracle_cap)?;
    match found[..] {
        [g] => {
            let witness = Witness { candidates: Some(tried), note: Some("every edge-card ties".into()), ..Witness::default() };
            finish_edge(ed, g, Route::Thm10P2BipartiteFallback, witness)
        }
        [] => Err(violation("no bipartite graph has this edge deck")),
        _ => Err(Error::NonUnique(found.len())),
    }
}

/// Edge-reconstructs a triangle-free G3 graph: recover the vertex deck through
/// the edge oracle, then dispatch on connectivity.
pub fn edge_reconstruct_g3_tf(ed: &EdgeDeck, opts: &Options) -> Result<ReconstructionResult> {
    prevalidate_edge(ed, opts, HypothesisClass::Diameter3TriangleFree)?;
    let found = oracle_edge_reconstruct(ed, opts.oracle_cap)?;
    let source = match found[..] {
        [g] => g,
        [] => return Err(violation("no graph has this edge deck")),
        _ => return Err(Error::NonUnique(found.len())),
    };
    let deck = compute_deck(&source);
    let inner = Options { trusted: true, ..*opts };
    let mut result = match vertex_connectivity(&source)? {
        1 => reconstruct_g3_tf_k1(&deck, &inner)?,
        2 => {
            let graphs = oracle_reconstruct(&deck, opts.oracle_cap)?;
            let [g] = graphs[..] else {
                return Err(Error::NonUnique(graphs.len()));
            };
            ReconstructionResult { graph: g, route: Route::Oracle, witness: Witness::default() }
        }
        _ => reconstruct_g3_tf_k3plus(&deck, &inner)?,
    };
    if !is_isomorphic(&result.graph, &source) {
        return Err(Error::AssertionFailure(format!(
            "{} disagrees with the edge oracle's {}",
            result.route.as_str(),
            emit_graph6(&source)
        )));
    }
    result.witness.note = Some("vertex deck recovered by edge oracle".into());
    finish_edge(ed, result.graph, result.route, result.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::compute_edge_deck;

    #[test]
    fn ph_examples() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(compute_ph(&p5).pairs, vec![(0, 3), (0, 4), (1, 4)]);
        assert_eq!(compute_ph(&Graph::path(4).unwrap()).pairs, vec![(0, 3)]);
        assert!(compute_ph(&Graph::cycle(4).unwrap()).is_empty());
    }

    fn round_trip(g: &Graph, route: Route) {
        let r = edge_reconstruct_g2_tf(&compute_edge_deck(g), &Options::default()).unwrap();
        assert_eq!(r.route, route);
        assert!(is_isomorphic(&r.graph, g));
    }

    #[test]
    fn small_cycles_and_petersen() {
        round_trip(&Graph::cycle(4).unwrap(), Route::Thm10P1);
        round_trip(&Graph::cycle(5).unwrap(), Route::Thm10K3);
        round_trip(&Graph::petersen(), Route::Thm10K3);
    }

    #[test]
    fn g3_edge_examples() {
        let p4 = Graph::path(4).unwrap();
        let r = edge_reconstruct_g3_tf(&compute_edge_deck(&p4), &Options::default()).unwrap();
        assert!(is_isomorphic(&r.graph, &p4));
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let r = edge_reconstruct_g3_tf(&compute_edge_deck(&star), &Options::default()).unwrap();
        assert!(is_isomorphic(&r.graph, &star));
        let c4 = compute_edge_deck(&Graph::cycle(4).unwrap());
        assert!(matches!(edge_reconstruct_g3_tf(&c4, &Options::default()), Err(Error::HypothesisViolation(_))));
    }
}
