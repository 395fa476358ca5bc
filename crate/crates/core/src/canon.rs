//! Canonical labeling by partition refinement and backtracking.
//!
//! The search refines an ordered partition to an equitable one, individualizes
//! each vertex of the first non-singleton cell in turn, and keeps the leaf whose
//! upper-triangle bitstring (graph6 order) is lexicographically smallest.
//! Automorphisms discovered at leaves prune the tree in two ways: a leaf equal to
//! the first leaf sends the search back to where its path left the first path,
//! and children in the same orbit of the prefix stabilizer are skipped.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6;

/// Isomorphism-class identifier: the graph6 encoding of the canonically
/// relabeled graph.
///
/// Stored unpacked; ordering agrees with byte-wise ordering of the graph6 text.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCert {
    n: u8,
    bits: u128,
}

impl CanonicalCert {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The certificate bytes (graph6).
    pub fn bytes(&self) -> Vec<u8> {
        self.to_graph6().into_bytes()
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode_bits(self.n(), self.bits)
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::graph_from_bits(self.n(), self.bits)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.to_graph6())
    }
}

impl Serialize for CanonicalCert {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_graph6())
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    pub cert: CanonicalCert,
    /// `order[p]` is the original vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    /// Automorphisms found during the search, as `v -> image` maps.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Canonical position of original vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.order.iter().position(|&w| w == v).expect("vertex in range")
    }

    /// Orbits of the group generated by [`Labeling::generators`], as a
    /// representative per vertex (the smallest member of its orbit).
    pub fn orbit_representatives(&self) -> Vec<usize> {
        let n = self.order.len();
        let mut uf = UnionFind::new(n);
        for gen in &self.generators {
            for (v, &w) in gen.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..n).map(|v| uf.min_of(v)).collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCert {
    Searcher::run(g).cert
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    Searcher::run(g)
}

/// Relabels `g` into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u16; MAX_VERTICES],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_VERTICES];
        let len = if n == 0 {
            0
        } else {
            cells[0] = VertexSet::full(n).bits();
            1
        };
        Partition { cells, len }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    fn replace(&mut self, at: usize, parts: &[u16]) {
        let extra = parts.len() - 1;
        self.cells.copy_within(at + 1..self.len, at + 1 + extra);
        self.cells[at..at + parts.len()].copy_from_slice(parts);
        self.len += extra;
    }

    /// Splits cells by neighbour counts into splitter cells until equitable.
    fn refine(&mut self, g: &Graph) {
        loop {
            let mut changed = false;
            let mut wi = 0;
            while wi < self.len {
                let w = self.cells[wi];
                let mut ci = 0;
                while ci < self.len {
                    let c = self.cells[ci];
                    if c.count_ones() < 2 {
                        ci += 1;
                        continue;
                    }
                    let mut buckets = [0u16; MAX_VERTICES + 1];
                    let mut lo = usize::MAX;
                    let mut hi = 0;
                    for v in VertexSet::from_bits(c) {
                        let k = (g.row(v) & w).count_ones() as usize;
                        buckets[k] |= 1 << v;
                        lo = lo.min(k);
                        hi = hi.max(k);
                    }
                    if lo == hi {
                        ci += 1;
                        continue;
                    }
                    let mut parts = [0u16; MAX_VERTICES];
                    let mut np = 0;
                    for &b in &buckets[lo..=hi] {
                        if b != 0 {
                            parts[np] = b;
                            np += 1;
                        }
                    }
                    self.replace(ci, &parts[..np]);
                    ci += np;
                    changed = true;
                }
                wi += 1;
            }
            if !changed {
                return;
            }
        }
    }
}

struct Leaf {
    key: u128,
    order: [u8; MAX_VERTICES],
    path: Vec<u8>,
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<[u8; MAX_VERTICES]>,
    path: Vec<u8>,
}

impl<'a> Searcher<'a> {
    fn run(g: &'a Graph) -> Labeling {
        let n = g.n();
        let mut s = Searcher { g, n, first: None, best: None, gens: Vec::new(), path: Vec::new() };
        let mut p = Partition::unit(n);
        p.refine(g);
        s.search(p);
        let (key, order) = match &s.best {
            Some(best) => (best.key, best.order[..n].iter().map(|&v| v as usize).collect()),
            None => (0, Vec::new()),
        };
        Labeling {
            cert: CanonicalCert { n: n as u8, bits: key },
            order,
            generators: s.gens.iter().map(|gen| gen[..n].iter().map(|&v| v as usize).collect()).collect(),
        }
    }

    fn leaf_key(&self, order: &[u8; MAX_VERTICES]) -> u128 {
        let n = self.n;
        let mut pos = [0u8; MAX_VERTICES];
        for (p, &v) in order[..n].iter().enumerate() {
            pos[v as usize] = p as u8;
        }
        let mut key = 0u128;
        let mut k = 0;
        for j in 1..n {
            let mut mapped = 0u32;
            for w in self.g.neighbors(order[j] as usize) {
                mapped |= 1 << pos[w];
            }
            for i in 0..j {
                if mapped & (1 << i) != 0 {
                    key |= 1u128 << (127 - k);
                }
                k += 1;
            }
        }
        key
    }

    /// Returns the depth the search should resume at, if a jump was triggered.
    fn search(&mut self, p: Partition) -> Option<usize> {
        let n = self.n;
        if p.is_discrete(n) {
            return self.visit_leaf(&p);
        }
        let depth = self.path.len();
        let target = (0..p.len).find(|&i| p.cells[i].count_ones() > 1).expect("non-discrete");
        let cell = p.cells[target];
        let mut explored = 0u16;
        for v in VertexSet::from_bits(cell) {
            if explored != 0 && self.same_orbit_as_explored(v, explored) {
                continue;
            }
            explored |= 1 << v;
            let mut child = p;
            child.replace(target, &[1 << v, cell & !(1 << v)]);
            child.refine(self.g);
            self.path.push(v as u8);
            let jump = self.search(child);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, p: &Partition) -> Option<usize> {
        let mut order = [0u8; MAX_VERTICES];
        for (i, &c) in p.cells[..p.len].iter().enumerate() {
            order[i] = c.trailing_zeros() as u8;
        }
        let key = self.leaf_key(&order);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { key, order, path: self.path.clone() });
            self.best = Some(Leaf { key, order, path: self.path.clone() });
            return None;
        };
        if key == first.key {
            let first_order = first.order;
            let common = first.path.iter().zip(&self.path).take_while(|(a, b)| a == b).count();
            self.record_automorphism(&first_order, &order);
            return Some(common);
        }
        let best = self.best.as_ref().expect("set with first");
        if key == best.key {
            let best_order = best.order;
            self.record_automorphism(&best_order, &order);
        } else if key < best.key {
            self.best = Some(Leaf { key, order, path: self.path.clone() });
        }
        None
    }

    fn record_automorphism(&mut self, from: &[u8; MAX_VERTICES], to: &[u8; MAX_VERTICES]) {
        let mut gen = [0u8; MAX_VERTICES];
        for p in 0..self.n {
            gen[from[p] as usize] = to[p];
        }
        if (0..self.n).any(|v| gen[v] as usize != v) {
            self.gens.push(gen);
        }
    }

    /// Is `v` in the orbit of an explored sibling under the automorphisms
    /// found so far that fix the current path pointwise?
    fn same_orbit_as_explored(&self, v: usize, explored: u16) -> bool {
        let mut uf = UnionFind::new(self.n);
        let mut any = false;
        for gen in &self.gens {
            if self.path.iter().all(|&x| gen[x as usize] == x) {
                any = true;
                for w in 0..self.n {
                    uf.union(w, gen[w] as usize);
                }
            }
        }
        any && VertexSet::from_bits(explored).iter().any(|w| uf.find(w) == uf.find(v))
    }
}

struct UnionFind {
    parent: [u8; MAX_VERTICES],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; MAX_VERTICES];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[x] as usize;
            self.parent[x] = self.parent[up];
            x = up;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u8;
        }
    }

    fn min_of(&mut self, x: usize) -> usize {
        self.find(x)
    }
}
