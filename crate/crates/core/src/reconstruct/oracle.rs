//! Brute-force preimage search.
//!
//! Any graph with deck `d` has a card isomorphic to the first card of `d`, so it
//! is that card plus one vertex of the deck-determined degree. Likewise any graph
//! with edge deck `ed` is the first edge-card plus one edge. Trying every such
//! extension and keeping the ones whose (edge) deck matches is exhaustive.

use std::collections::BTreeSet;

use crate::canon::{canonical_form, CanonicalCert};
use crate::connectivity::k_subsets;
use crate::deck::{compute_deck, compute_edge_deck, degree_sequence, reconstruct_edge_count, Deck, EdgeDeck};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

fn search_vertex(d: &Deck, cap: usize, bipartite_only: bool) -> Result<Vec<Graph>> {
    let n = d.n();
    check_cap(n, cap)?;
    if n == 0 || d.cards().is_empty() {
        return Err(Error::MalformedDeck("empty deck".into()));
    }
    let base = d.card(0);
    let masks: Vec<VertexSet> = if n >= 3 {
        let m = reconstruct_edge_count(d)?;
        let Some(deg) = m.checked_sub(base.edge_count()) else {
            return Ok(Vec::new());
        };
        k_subsets(n - 1, deg).collect()
    } else {
        (0..1u16 << (n - 1)).map(VertexSet::from_bits).collect()
    };
    let mut want_degrees = if n >= 3 { degree_sequence(d)? } else { Vec::new() };
    want_degrees.sort_unstable();

    let mut found: BTreeSet<CanonicalCert> = BTreeSet::new();
    for mask in masks {
        let g = base.add_vertex(mask)?;
        if n >= 3 {
            let mut degs = g.degrees();
            degs.sort_unstable();
            if degs != want_degrees {
                continue;
            }
        }
        if bipartite_only && !g.is_bipartite() {
            continue;
        }
        let cert = canonical_form(&g);
        if found.contains(&cert) {
            continue;
        }
        if compute_deck(&g) == *d {
            found.insert(cert);
        }
    }
    Ok(found.into_iter().map(|c| c.to_graph()).collect())
}

fn search_edge(ed: &EdgeDeck, cap: usize, bipartite_only: bool) -> Result<Vec<Graph>> {
    check_cap(ed.n(), cap)?;
    if ed.cards().is_empty() {
        return Err(Error::MalformedDeck("empty edge deck".into()));
    }
    let base = ed.card(0);
    let mut found: BTreeSet<CanonicalCert> = BTreeSet::new();
    for (x, y) in base.non_edges() {
        let g = base.with_edge(x, y);
        if bipartite_only && !g.is_bipartite() {
            continue;
        }
        let cert = canonical_form(&g);
        if found.contains(&cert) {
            continue;
        }
        if compute_edge_deck(&g) == *ed {
            found.insert(cert);
        }
    }
    Ok(found.into_iter().map(|c| c.to_graph()).collect())
}

/// Every graph (one canonical representative per class, sorted by
/// certificate) whose deck is `d`.
pub fn oracle_reconstruct(d: &Deck, cap: usize) -> Result<Vec<Graph>> {
    search_vertex(d, cap, false)
}

/// As [`oracle_reconstruct`], restricted to bipartite graphs.
pub fn oracle_reconstruct_bipartite(d: &Deck, cap: usize) -> Result<Vec<Graph>> {
    search_vertex(d, cap, true)
}

/// Every graph whose edge deck is `ed`.
pub fn oracle_edge_reconstruct(ed: &EdgeDeck, cap: usize) -> Result<Vec<Graph>> {
    search_edge(ed, cap, false)
}

pub fn oracle_edge_reconstruct_bipartite(ed: &EdgeDeck, cap: usize) -> Result<Vec<Graph>> {
    search_edge(ed, cap, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::reconstruct::DEFAULT_ORACLE_CAP;

    fn single(found: Vec<Graph>, expect: &Graph) {
        assert_eq!(found.len(), 1, "{found:?}");
        assert!(is_isomorphic(&found[0], expect));
    }

    #[test]
    fn vertex_oracle() {
        for g in [Graph::cycle(5).unwrap(), Graph::path(3).unwrap(), Graph::petersen()] {
            single(oracle_reconstruct(&compute_deck(&g), DEFAULT_ORACLE_CAP).unwrap(), &g);
        }
        // n = 2 is the known ambiguous deck
        let found = oracle_reconstruct(&compute_deck(&Graph::complete(2).unwrap()), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn edge_oracle() {
        for g in [Graph::cycle(5).unwrap(), Graph::path(4).unwrap(), Graph::cycle(4).unwrap()] {
            single(oracle_edge_reconstruct(&compute_edge_deck(&g), DEFAULT_ORACLE_CAP).unwrap(), &g);
        }
        // K3 and K_{1,3} share an edge deck
        let found = oracle_edge_reconstruct(&compute_edge_deck(&Graph::complete(3).unwrap().add_vertex(VertexSet::EMPTY).unwrap()), 10).unwrap();
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn caps_and_bipartite_filter() {
        let d = compute_deck(&Graph::petersen());
        assert_eq!(oracle_reconstruct(&d, 9), Err(Error::CapExceeded { n: 10, cap: 9 }));
        assert!(oracle_reconstruct_bipartite(&d, 10).unwrap().is_empty());
        let c6 = Graph::cycle(6).unwrap();
        single(oracle_reconstruct_bipartite(&compute_deck(&c6), 10).unwrap(), &c6);
    }
}
