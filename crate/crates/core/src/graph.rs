//! Labeled simple graphs on at most 16 vertices.
//!
//! Adjacency rows are single `u16` words, so vertex sets are bitmasks and most
//! queries are a handful of word operations.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count any [`Graph`] may have.
pub const MAX_VERTICES: usize = 16;

/// Distance reported between vertices in different components.
pub const INFINITY: u8 = u8::MAX;

/// A subset of `0..16`, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u16::MAX)
        } else {
            VertexSet((1u16 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u16);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Labeled simple undirected graph with vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u16; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::OversizeGraph { n, max: MAX_VERTICES });
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::MissingVertex(u));
            }
            if v >= n {
                return Err(Error::MissingVertex(v));
            }
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).bits() & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `K_{a,b}` with the `a`-side on vertices `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::new(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("10 vertices")
    }

    /// Builds a graph from raw adjacency rows. Rows are masked to `0..n`
    /// and symmetrised; loops are dropped.
    pub fn from_rows(n: usize, rows: &[u16]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        let mask = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate().take(n) {
            for v in VertexSet(row & mask) {
                if u != v {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & (1 << v) != 0
    }

    /// Inserts `uv`. Panics on out-of-range indices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n() && v < self.n() && u != v, "bad edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n() && v < self.n() {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn row(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u32 << u) - 1) as u16).iter().map(move |v| (u, v))
        })
    }

    /// Pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Appends a vertex `n` joined to `neighbors`.
    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<Self> {
        let n = self.n();
        let mut g = Graph::new(n + 1)?;
        g.adj[..n].copy_from_slice(&self.adj[..n]);
        for v in neighbors.intersection(self.vertices()) {
            g.add_edge(n, v);
        }
        Ok(g)
    }

    /// `G - v`, with the remaining vertices renumbered in their original order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n() {
            return Err(Error::MissingVertex(v));
        }
        Ok(self.delete_vertex_unchecked(v))
    }

    pub(crate) fn delete_vertex_unchecked(&self, v: usize) -> Self {
        let n = self.n();
        let low = (1u16 << v) - 1;
        let squeeze = |row: u16| (row & low) | ((row >> 1) & !low);
        let mut g = Graph { n: (n - 1) as u8, adj: [0; MAX_VERTICES] };
        for u in 0..n {
            if u < v {
                g.adj[u] = squeeze(self.adj[u]);
            } else if u > v {
                g.adj[u - 1] = squeeze(self.adj[u]);
            }
        }
        g
    }

    /// `G - uv` on the same vertex set.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = *self;
        g.remove_edge(u, v);
        Ok(g)
    }

    /// `G + uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = *self;
        g.add_edge(u, v);
        g
    }

    pub fn complement(&self) -> Self {
        let full = VertexSet::full(self.n()).bits();
        let mut g = *self;
        for v in 0..self.n() {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Relabels by `perm`: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced by `set`, renumbered in ascending order of the members.
    pub fn induced(&self, set: VertexSet) -> Self {
        let members: Vec<usize> = set.intersection(self.vertices()).iter().collect();
        let mut g = Graph { n: members.len() as u8, adj: [0; MAX_VERTICES] };
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reach(&self, start: usize, blocked: VertexSet) -> VertexSet {
        let allowed = self.vertices().difference(blocked).bits();
        let mut seen = 1u16 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u16;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            frontier = next & allowed & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Connected components of `G - removed`, each listed once, ordered by
    /// lowest member.
    pub fn components_without(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertices().difference(removed);
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, removed);
            out.push(c);
            rest = rest.difference(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_without(VertexSet::EMPTY)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach(0, VertexSet::EMPTY) == self.vertices()
    }

    /// Hop distances from `source`; unreachable vertices get [`INFINITY`].
    pub fn bfs(&self, source: usize) -> Vec<u8> {
        let mut dist = vec![INFINITY; self.n()];
        dist[source] = 0;
        let mut seen = 1u16 << source;
        let mut frontier = seen;
        let mut level = 0u8;
        while frontier != 0 {
            level += 1;
            let mut next = 0u16;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in VertexSet(frontier) {
                dist[v] = level;
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut d = Vec::with_capacity(n * n);
        for v in 0..n {
            d.extend(self.bfs(v));
        }
        DistanceMatrix { n, d }
    }

    /// Largest pairwise distance; [`INFINITY`] when disconnected, 0 for `n <= 1`.
    pub fn diameter(&self) -> u8 {
        let n = self.n();
        let mut best = 0;
        for v in 0..n {
            // Eccentricity by level-synchronous BFS, bailing out early on disconnection.
            let mut seen = 1u16 << v;
            let mut frontier = seen;
            let mut ecc = 0u8;
            loop {
                let mut next = 0u16;
                for w in VertexSet(frontier) {
                    next |= self.adj[w];
                }
                frontier = next & !seen;
                if frontier == 0 {
                    break;
                }
                seen |= frontier;
                ecc += 1;
            }
            if seen != VertexSet::full(n).bits() {
                return INFINITY;
            }
            best = best.max(ecc);
        }
        best
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    pub fn triangle_count(&self) -> usize {
        self.edges().map(|(u, v)| (self.adj[u] & self.adj[v]).count_ones() as usize).sum::<usize>() / 3
    }

    /// A proper 2-colouring, if one exists.
    ///
    /// Per component, the colour class holding the component's lowest vertex
    /// goes into the first set.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut first = VertexSet::EMPTY;
        let mut second = VertexSet::EMPTY;
        for comp in self.components() {
            let root = comp.first().expect("components are nonempty");
            let mut side = [VertexSet::singleton(root), VertexSet::EMPTY];
            let mut frontier = side[0];
            let mut parity = 0;
            while !frontier.is_empty() {
                let mut next = 0u16;
                for v in frontier {
                    next |= self.adj[v];
                }
                parity ^= 1;
                let next = VertexSet(next);
                if !next.intersection(side[parity ^ 1]).is_empty() {
                    return None;
                }
                frontier = next.difference(side[parity]);
                side[parity] = side[parity].union(frontier);
            }
            first = first.union(side[0]);
            second = second.union(side[1]);
        }
        Some((first, second))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True if `set` spans no edge.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.bits() == 0)
    }

    /// Vertices outside `set` with at least one neighbour in `set`.
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        let mut out = 0u16;
        for v in set {
            out |= self.adj[v];
        }
        VertexSet(out).difference(set)
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.components().len();
        (0..self.n())
            .filter(|&v| self.components_without(VertexSet::singleton(v)).len() > base)
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// All-pairs hop counts. Unreachable pairs hold [`INFINITY`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    pub fn max(&self) -> u8 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let p3 = Graph::path(3).unwrap();
        let d = p3.distance_matrix();
        assert_eq!(d.get(0, 2), 2);
        for v in 0..3 {
            assert_eq!(d.get(v, v), 0);
        }
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.distance_matrix().get(0, 2), INFINITY);
    }

    #[test]
    fn diameters() {
        assert_eq!(Graph::cycle(4).unwrap().diameter(), 2);
        assert_eq!(Graph::path(4).unwrap().diameter(), 3);
        assert_eq!(Graph::petersen().diameter(), 2);
        assert_eq!(Graph::from_edges(3, &[(0, 1)]).unwrap().diameter(), INFINITY);
        assert_eq!(Graph::new(1).unwrap().diameter(), 0);
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        // girth 5: no triangle and no 4-cycle
        assert!(p.is_triangle_free());
        for (u, v) in p.non_edges() {
            assert_eq!((p.row(u) & p.row(v)).count_ones(), 1);
        }
    }

    #[test]
    fn complements() {
        let c5 = Graph::cycle(5).unwrap();
        let cc5 = c5.complement();
        assert_eq!(cc5.edge_count(), 5);
        assert!(cc5.degrees().iter().all(|&d| d == 2));
        assert!(cc5.is_connected());
        assert_eq!(c5.complement().complement(), c5);
        let p4 = Graph::path(4).unwrap();
        // 0-1-2-3 complements to 1-3-0-2
        assert_eq!(p4.complement(), Graph::from_edges(4, &[(1, 3), (3, 0), (0, 2)]).unwrap());
    }

    #[test]
    fn triangles() {
        assert!(Graph::complete_bipartite(3, 3).unwrap().is_triangle_free());
        assert!(!Graph::cycle(3).unwrap().is_triangle_free());
        assert_eq!(Graph::complete(4).unwrap().triangle_count(), 4);
    }

    #[test]
    fn bipartitions() {
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert_eq!(Graph::cycle(4).unwrap().bipartition(), Some((s(&[0, 2]), s(&[1, 3]))));
        assert_eq!(Graph::cycle(5).unwrap().bipartition(), None);
        assert_eq!(Graph::path(4).unwrap().bipartition(), Some((s(&[0, 2]), s(&[1, 3]))));
        // per-component tie-break
        let g = Graph::from_edges(5, &[(0, 1), (3, 2), (3, 4)]).unwrap();
        assert_eq!(g.bipartition(), Some((s(&[0, 2, 4]), s(&[1, 3]))));
    }

    #[test]
    fn deletions() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.delete_vertex(1).unwrap(), Graph::new(2).unwrap());
        assert_eq!(p3.delete_vertex(3), Err(Error::MissingVertex(3)));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.delete_edge(3, 0).unwrap(), Graph::path(4).unwrap());
        assert_eq!(c4.delete_edge(0, 2), Err(Error::MissingEdge(0, 2)));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.delete_vertex(0).unwrap(), Graph::path(4).unwrap());
        // order-preserving compaction
        let g = Graph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        assert_eq!(g.delete_vertex(1).unwrap(), Graph::from_edges(3, &[(0, 2)]).unwrap());
    }

    #[test]
    fn oversize_is_rejected() {
        assert!(matches!(Graph::new(17), Err(Error::OversizeGraph { n: 17, .. })));
        assert!(Graph::new(16).unwrap().add_vertex(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn cut_vertices_of_a_path() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.cut_vertices(), [1, 2, 3].into_iter().collect());
        assert!(Graph::cycle(5).unwrap().cut_vertices().is_empty());
    }
}
