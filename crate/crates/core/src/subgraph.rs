//! Counting (not necessarily induced) copies of a pattern graph.

use crate::graph::{Graph, VertexSet};

/// Number of injective maps `V(pattern) -> V(host)` sending edges to edges.
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> u64 {
    let k = pattern.n();
    if k > host.n() {
        return 0;
    }
    // Place pattern vertices so each one (after the first of its component)
    // has an already-placed neighbour; that prunes early.
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::EMPTY;
    while order.len() < k {
        let next = pattern
            .neighborhood_of(placed)
            .first()
            .or_else(|| pattern.vertices().difference(placed).first())
            .expect("unplaced vertex remains");
        order.push(next);
        placed.insert(next);
    }
    let mut image = vec![usize::MAX; pattern.n()];
    extend(pattern, host, &order, 0, &mut image, VertexSet::EMPTY)
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> u64 {
    if depth == order.len() {
        return 1;
    }
    let p = order[depth];
    // host candidates must be adjacent to the images of p's placed neighbours
    let mut candidates = host.vertices().difference(used);
    for q in pattern.neighbors(p) {
        if image[q] != usize::MAX {
            candidates = candidates.intersection(host.neighbors(image[q]));
        }
    }
    let mut total = 0;
    for h in candidates {
        image[p] = h;
        let mut next_used = used;
        next_used.insert(h);
        total += extend(pattern, host, order, depth + 1, image, next_used);
    }
    image[p] = usize::MAX;
    total
}

/// `|Aut(pattern)|`.
pub fn automorphism_count(pattern: &Graph) -> u64 {
    count_embeddings(pattern, pattern)
}

/// Number of distinct subgraphs of `host` isomorphic to `pattern`.
pub fn count_copies(pattern: &Graph, host: &Graph) -> u64 {
    count_embeddings(pattern, host) / automorphism_count(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_and_paths_in_cycles() {
        let c5 = Graph::cycle(5).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(count_copies(&k2, &c5), 5);
        assert_eq!(count_copies(&p3, &c5), 5);
        assert_eq!(count_copies(&Graph::cycle(3).unwrap(), &Graph::cycle(4).unwrap()), 0);
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphism_count(&Graph::cycle(5).unwrap()), 10);
        assert_eq!(automorphism_count(&Graph::complete(4).unwrap()), 24);
        assert_eq!(automorphism_count(&Graph::petersen()), 120);
        assert_eq!(automorphism_count(&Graph::new(3).unwrap()), 6);
    }

    #[test]
    fn isolated_pattern_vertices_count_vertex_subsets() {
        // 2K1 copies in any 5-vertex graph: C(5,2)
        let two_k1 = Graph::new(2).unwrap();
        assert_eq!(count_copies(&two_k1, &Graph::petersen().induced(VertexSet::full(5))), 10);
    }
}
