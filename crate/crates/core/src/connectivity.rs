//! Vertex connectivity, computed two independent ways.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Iterator over all `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u32 = 1 << n;
    let mut next: Option<u32> = if k > n { None } else { Some((1u32 << k) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(VertexSet::from_bits(cur as u16))
    })
}

fn separates(g: &Graph, s: VertexSet) -> bool {
    let rest = g.vertices().difference(s);
    match rest.first() {
        Some(v) => g.reach(v, s) != rest,
        None => false,
    }
}

/// `kappa(G)` by trying vertex subsets in increasing size.
pub fn vertex_connectivity_by_enumeration(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let n = g.n();
    for k in 0..n.saturating_sub(1) {
        if k_subsets(n, k).any(|s| separates(g, s)) {
            return Ok(k);
        }
    }
    Ok(n.saturating_sub(1))
}

/// Maximum number of internally disjoint `s`-`t` paths for non-adjacent `s`, `t`,
/// via unit-capacity augmenting paths on the split-vertex network.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let n = g.n();
    // node 2v = v_in, 2v+1 = v_out; arcs: v_in -> v_out (cap 1, or inf for s,t),
    // u_out -> v_in for every edge.
    let nodes = 2 * n;
    let mut cap = vec![0i32; nodes * nodes];
    let big = n as i32 + 1;
    for v in 0..n {
        cap[(2 * v) * nodes + 2 * v + 1] = if v == s || v == t { big } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[(2 * u + 1) * nodes + 2 * v] = big;
        cap[(2 * v + 1) * nodes + 2 * u] = big;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; nodes];
    loop {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if parent[y] == usize::MAX && cap[x * nodes + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x * nodes + y] -= 1;
            cap[y * nodes + x] += 1;
            y = x;
        }
        flow += 1;
    }
}

/// `kappa(G)` as the minimum local connectivity over non-adjacent pairs.
pub fn vertex_connectivity_by_flow(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let mut best = g.n().saturating_sub(1);
    for (s, t) in g.non_edges() {
        best = best.min(local_connectivity(g, s, t));
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// `kappa(G)`: `n - 1` for complete graphs, otherwise the size of a smallest cut set.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    vertex_connectivity_by_flow(g)
}

/// Every cut set of size `k`, in increasing bitmask order.
pub fn cut_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    k_subsets(g.n(), k).filter(|&s| separates(g, s)).collect()
}

/// All cut sets of minimum size. Empty for complete or disconnected graphs.
pub fn minimum_cut_sets(g: &Graph) -> Vec<VertexSet> {
    match vertex_connectivity(g) {
        Ok(k) if k + 1 < g.n() => cut_sets_of_size(g, k),
        _ => Vec::new(),
    }
}

pub fn is_cut_set(g: &Graph, s: VertexSet) -> bool {
    separates(g, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerate_binomially() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(4, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(16, 16).count(), 1);
        assert!(k_subsets(6, 3).all(|s| s.len() == 3));
    }

    #[test]
    fn small_connectivities() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(vertex_connectivity(&k33), Ok(3));
        assert_eq!(vertex_connectivity_by_enumeration(&k33), Ok(3));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(vertex_connectivity(&c5), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap()), Ok(4));
        assert_eq!(vertex_connectivity(&Graph::path(4).unwrap()), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::new(1).unwrap()), Ok(0));
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected), Err(Error::DisconnectedInput));
        assert_eq!(vertex_connectivity_by_enumeration(&disconnected), Err(Error::DisconnectedInput));
    }

    #[test]
    fn petersen_is_three_connected() {
        let p = Graph::petersen();
        // no 2-cut by direct enumeration, but some 3-cut
        assert!(cut_sets_of_size(&p, 2).is_empty());
        assert!(!cut_sets_of_size(&p, 3).is_empty());
        assert_eq!(vertex_connectivity(&p), Ok(3));
    }
}
