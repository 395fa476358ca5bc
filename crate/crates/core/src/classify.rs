//! Diameter classes and the hypothesis classes the reconstruction procedures accept.

use std::fmt;

use serde::Serialize;

use crate::connectivity::vertex_connectivity;
use crate::graph::{Graph, INFINITY};

/// Diameter exactly 2.
pub fn in_g2(g: &Graph) -> bool {
    g.diameter() == 2
}

/// Diameter 3 with complement of diameter 3.
pub fn in_g3(g: &Graph) -> bool {
    g.diameter() == 3 && g.complement().diameter() == 3
}

/// Invariants of one graph, computed once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub n: usize,
    pub edges: usize,
    /// `None` when disconnected.
    pub diameter: Option<u8>,
    pub complement_diameter: Option<u8>,
    /// `None` when disconnected.
    pub kappa: Option<usize>,
    pub triangle_free: bool,
    pub bipartite: bool,
}

impl Profile {
    pub fn of(g: &Graph) -> Self {
        let finite = |d: u8| (d != INFINITY).then_some(d);
        Profile {
            n: g.n(),
            edges: g.edge_count(),
            diameter: finite(g.diameter()),
            complement_diameter: finite(g.complement().diameter()),
            kappa: vertex_connectivity(g).ok(),
            triangle_free: g.is_triangle_free(),
            bipartite: g.is_bipartite(),
        }
    }

    pub fn in_g2(&self) -> bool {
        self.diameter == Some(2)
    }

    pub fn in_g3(&self) -> bool {
        self.diameter == Some(3) && self.complement_diameter == Some(3)
    }
}

/// Graph families handled by the constructive procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HypothesisClass {
    /// Triangle-free, diameter 2, connectivity 3.
    Diameter2TriangleFreeK3,
    /// Triangle-free, in G3, connectivity 1.
    Diameter3TriangleFreeK1,
    /// Triangle-free, in G3, connectivity at least 3.
    Diameter3TriangleFreeK3Plus,
    /// Triangle-free, diameter 2, at least 4 edges (edge reconstruction).
    Diameter2TriangleFree,
    /// Triangle-free, in G3 (edge reconstruction).
    Diameter3TriangleFree,
}

impl HypothesisClass {
    pub fn contains(self, g: &Graph) -> bool {
        self.contains_profile(&Profile::of(g))
    }

    pub fn contains_profile(self, p: &Profile) -> bool {
        if !p.triangle_free {
            return false;
        }
        match self {
            HypothesisClass::Diameter2TriangleFreeK3 => p.in_g2() && p.kappa == Some(3),
            HypothesisClass::Diameter3TriangleFreeK1 => p.in_g3() && p.kappa == Some(1),
            HypothesisClass::Diameter3TriangleFreeK3Plus => p.in_g3() && p.kappa.is_some_and(|k| k >= 3),
            HypothesisClass::Diameter2TriangleFree => p.in_g2() && p.edges >= 4,
            HypothesisClass::Diameter3TriangleFree => p.in_g3(),
        }
    }
}

impl fmt::Display for HypothesisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisClass::Diameter2TriangleFreeK3 => "triangle-free, diameter 2, connectivity 3",
            HypothesisClass::Diameter3TriangleFreeK1 => "triangle-free, G3, connectivity 1",
            HypothesisClass::Diameter3TriangleFreeK3Plus => "triangle-free, G3, connectivity >= 3",
            HypothesisClass::Diameter2TriangleFree => "triangle-free, diameter 2, >= 4 edges",
            HypothesisClass::Diameter3TriangleFree => "triangle-free, G3",
        })
    }
}
