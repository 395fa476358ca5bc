//! Deck and edge-deck collision searches.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::deck::{compute_deck, compute_edge_deck, Deck};
use crate::graph::Graph;
use crate::graph6::emit_graph6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DeckKind {
    Vertex,
    Edge,
}

/// Graphs admitted to edge-deck comparisons: at least 4 edges, no isolated vertex.
pub fn edge_qualifying(g: &Graph) -> bool {
    g.edge_count() >= 4 && g.vertices().iter().all(|v| g.degree(v) > 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub n: usize,
    pub kind: DeckKind,
    /// Graphs compared (for edge decks, the qualifying ones only).
    pub graphs: usize,
    pub digest_buckets: usize,
    /// Graphs that shared a digest bucket and were compared exactly.
    pub exact_comparisons: usize,
    /// Groups of graphs (graph6) with identical decks.
    pub collisions: Vec<Vec<String>>,
}

/// Groups `items` by digest, then by exact key inside each shared bucket.
/// Returns the number of buckets, graphs compared exactly, and groups of size
/// at least 2 (as indices into `items`).
fn collide<K: PartialEq + Send>(
    graphs: &[Graph],
    digest: impl Fn(&Graph) -> u64 + Sync,
    exact: impl Fn(&Graph) -> K + Sync,
) -> (usize, usize, Vec<Vec<usize>>) {
    let digests: Vec<u64> = graphs.par_iter().map(&digest).collect();
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, d) in digests.into_iter().enumerate() {
        buckets.entry(d).or_default().push(i);
    }
    let shared: Vec<&Vec<usize>> = buckets.values().filter(|b| b.len() > 1).collect();
    let compared = shared.iter().map(|b| b.len()).sum();
    let groups: Vec<Vec<Vec<usize>>> = shared
        .par_iter()
        .map(|bucket| {
            let keys: Vec<K> = bucket.iter().map(|&i| exact(&graphs[i])).collect();
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut reps: Vec<usize> = Vec::new();
            for (k, &i) in bucket.iter().enumerate() {
                match reps.iter().position(|&r| keys[r] == keys[k]) {
                    Some(g) => groups[g].push(i),
                    None => {
                        reps.push(k);
                        groups.push(vec![i]);
                    }
                }
            }
            groups.retain(|g| g.len() > 1);
            groups
        })
        .collect();
    let mut groups: Vec<Vec<usize>> = groups.into_iter().flatten().collect();
    groups.sort();
    (buckets.len(), compared, groups)
}

fn names(graphs: &[Graph], groups: &[Vec<usize>]) -> Vec<Vec<String>> {
    groups.iter().map(|g| g.iter().map(|&i| emit_graph6(&graphs[i])).collect()).collect()
}

/// Searches `graphs` (all on `n` vertices) for distinct graphs with equal decks.
pub fn deck_uniqueness(n: usize, graphs: &[Graph], kind: DeckKind) -> UniquenessReport {
    let (pool, (buckets, compared, groups)) = match kind {
        DeckKind::Vertex => {
            let pool = graphs.to_vec();
            let r = collide(&pool, |g| compute_deck(g).digest(), compute_deck);
            (pool, r)
        }
        DeckKind::Edge => {
            let pool: Vec<Graph> = graphs.iter().copied().filter(edge_qualifying).collect();
            let r = collide(&pool, |g| compute_edge_deck(g).digest(), compute_edge_deck);
            (pool, r)
        }
    };
    UniquenessReport {
        n,
        kind,
        graphs: pool.len(),
        digest_buckets: buckets,
        exact_comparisons: compared,
        collisions: names(&pool, &groups),
    }
}

/// Edge-deck collisions among qualifying graphs on `n` vertices, and whether
/// equal edge decks force equal vertex decks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenwellReport {
    pub n: usize,
    pub qualifying: usize,
    pub edge_deck_collisions: Vec<Vec<String>>,
    /// Groups with equal edge decks but unequal vertex decks.
    pub violations: Vec<Vec<String>>,
}

pub fn greenwell_level(n: usize, graphs: &[Graph]) -> GreenwellReport {
    let pool: Vec<Graph> = graphs.iter().copied().filter(edge_qualifying).collect();
    let (_, _, groups) = collide(&pool, |g| compute_edge_deck(g).digest(), compute_edge_deck);
    let violations: Vec<Vec<usize>> = groups
        .iter()
        .filter(|group| {
            let decks: Vec<Deck> = group.iter().map(|&i| compute_deck(&pool[i])).collect();
            decks.windows(2).any(|w| w[0] != w[1])
        })
        .cloned()
        .collect();
    GreenwellReport {
        n,
        qualifying: pool.len(),
        edge_deck_collisions: names(&pool, &groups),
        violations: names(&pool, &violations),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::enumerate_nonisomorphic;

    #[test]
    fn two_vertices_collide() {
        let graphs = enumerate_nonisomorphic(2).unwrap();
        let r = deck_uniqueness(2, &graphs, DeckKind::Vertex);
        assert_eq!(r.collisions.len(), 1);
        assert_eq!(r.collisions[0].len(), 2);
    }

    #[test]
    fn six_vertices_have_unique_decks() {
        let graphs = enumerate_nonisomorphic(6).unwrap();
        assert_eq!(graphs.len(), 156);
        assert!(deck_uniqueness(6, &graphs, DeckKind::Vertex).collisions.is_empty());
        let g = greenwell_level(6, &graphs);
        assert!(g.edge_deck_collisions.is_empty() && g.violations.is_empty());
    }

    #[test]
    fn small_edge_counts_are_excluded() {
        // K3 + K1 and K_{1,3} share an edge deck but have only 3 edges
        let graphs = enumerate_nonisomorphic(4).unwrap();
        assert!(deck_uniqueness(4, &graphs, DeckKind::Edge).collisions.is_empty());
    }
}
