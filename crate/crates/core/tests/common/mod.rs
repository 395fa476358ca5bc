//! Slow, obviously-correct reference implementations used as test oracles.
//! Nothing here calls the library's canonical labeling or subgraph counting.

#![allow(dead_code)]

use rand::Rng;
use tfrecon::Graph;

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Upper-triangle adjacency bits in graph6 order, as a string of '0'/'1'.
pub fn bit_string(g: &Graph) -> String {
    let mut s = String::new();
    for j in 1..g.n() {
        for i in 0..j {
            s.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    s
}

/// `g` relabeled so that vertex `v` becomes `perm[v]`, built edge by edge.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

/// Lexicographically smallest bit string over all relabelings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> String {
    perms.iter().map(|p| bit_string(&relabel(g, p))).min().unwrap()
}

pub fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && perms.iter().any(|p| relabel(g, p) == *h)
}

/// The labeled graph on `n` vertices whose upper-triangle edges are the bits of `mask`.
pub fn labeled_graph(n: usize, mask: u128) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

/// All-pairs hop distances by Floyd-Warshall; `None` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for v in 0..n {
            if g.has_edge(u, v) {
                row[v] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Number of subgraphs of `host` isomorphic to `f`: injective edge-preserving
/// maps divided by automorphisms, both counted by exhaustive search.
pub fn brute_copies(f: &Graph, host: &Graph) -> u64 {
    fn maps(f: &Graph, host: &Graph, placed: &mut Vec<usize>) -> u64 {
        let k = placed.len();
        if k == f.n() {
            return 1;
        }
        let mut total = 0;
        for h in 0..host.n() {
            if placed.contains(&h) {
                continue;
            }
            if (0..k).all(|i| !f.has_edge(i, k) || host.has_edge(placed[i], h)) {
                placed.push(h);
                total += maps(f, host, placed);
                placed.pop();
            }
        }
        total
    }
    let embeddings = maps(f, host, &mut Vec::new());
    let automorphisms = maps(f, f, &mut Vec::new());
    embeddings / automorphisms
}

/// Minimum vertex cut by trying every subset, smallest first.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.n();
    for k in 0..n.saturating_sub(1) {
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            let sub = tfrecon::VertexSet::from_iter(rest.iter().copied());
            if !g.induced(sub).is_connected() {
                return k;
            }
        }
    }
    n - 1
}
