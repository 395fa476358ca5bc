//! Components of `G - S`, their classes by neighbourhood in `S`, and the
//! A/B/L sets used when rebuilding a 3-connected diameter-2 graph from a card.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::connectivity::is_cut_set;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Components `C_1..C_p` of `G - S`, ordered by lowest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub cut: VertexSet,
    pub components: Vec<VertexSet>,
    pub trivial: Vec<bool>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Union of all single-vertex components.
    pub fn trivial_vertices(&self) -> VertexSet {
        self.components
            .iter()
            .zip(&self.trivial)
            .filter(|(_, &t)| t)
            .fold(VertexSet::EMPTY, |acc, (&c, _)| acc.union(c))
    }

    /// Indices of components with at least two vertices.
    pub fn nontrivial_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.trivial[i]).collect()
    }
}

pub fn components_after_cut(g: &Graph, s: VertexSet) -> ComponentPartition {
    let components = g.components_without(s);
    let trivial = components.iter().map(|c| c.len() == 1).collect();
    ComponentPartition { cut: s, components, trivial }
}

/// `C_i(T)` for every component `i` and every neighbourhood `T` that occurs.
///
/// Keys are exact neighbour subsets of `S`, so the table works for cuts of any size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTable {
    pub cut: VertexSet,
    classes: BTreeMap<(usize, VertexSet), VertexSet>,
}

impl ClassTable {
    /// `C_i(T)`; empty when no vertex of `C_i` has neighbourhood exactly `T`.
    pub fn class(&self, component: usize, t: VertexSet) -> VertexSet {
        self.classes.get(&(component, t)).copied().unwrap_or_default()
    }

    /// Nonempty classes of component `i` as `(T, C_i(T))`.
    pub fn classes_of(&self, component: usize) -> impl Iterator<Item = (VertexSet, VertexSet)> + '_ {
        self.classes.range((component, VertexSet::EMPTY)..).take_while(move |((i, _), _)| *i == component).map(|((_, t), &c)| (*t, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, VertexSet, VertexSet)> + '_ {
        self.classes.iter().map(|(&(i, t), &c)| (i, t, c))
    }
}

pub fn class_table(g: &Graph, s: VertexSet, cp: &ComponentPartition) -> ClassTable {
    let mut classes: BTreeMap<(usize, VertexSet), VertexSet> = BTreeMap::new();
    for (i, &comp) in cp.components.iter().enumerate() {
        for v in comp {
            let t = g.neighbors(v).intersection(s);
            classes.entry((i, t)).or_default().insert(v);
        }
    }
    ClassTable { cut: s, classes }
}

/// How the neighbours of the restored vertex inside `C_1` are pinned down.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BCase {
    /// Both `B_12` and `B_13` are nonempty and visible as the L-vertices that
    /// miss part of the opposite L-side.
    Case1,
    /// `|C_1(1)|` already accounts for every neighbour in `C_1`.
    Case2,
    /// Exactly one of `B_12`, `B_13` is nonempty and the card cannot tell which.
    Case3,
}

/// Sets read off a card `H = G - x1` with a 2-cut `{x2, x3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSetPartition {
    pub partition: ComponentPartition,
    /// The nontrivial component, empty if every component is a single vertex.
    pub c1: VertexSet,
    /// `C_1(1)`: vertices of `C_1` adjacent to neither `x2` nor `x3`.
    pub c1_1: VertexSet,
    /// `C_1({2,3})`: adjacent to both.
    pub c1_23: VertexSet,
    pub a2: VertexSet,
    pub a3: VertexSet,
    pub l_x2: VertexSet,
    pub l_x3: VertexSet,
    /// Resolved B-sets; `None` in [`BCase::Case3`].
    pub b2: Option<VertexSet>,
    pub b3: Option<VertexSet>,
    pub b12: Option<VertexSet>,
    pub b13: Option<VertexSet>,
    /// Neighbours of `x1` in `C_1` not accounted for by `C_1(1)`.
    pub missing: usize,
    pub case: BCase,
}

/// Classifies the vertices of `C_1` in a card `H = G - x1` with 2-cut `{x2, x3}`.
///
/// `d_c1_x1` is the number of neighbours the deleted vertex has inside `C_1`.
pub fn b_set_partition(h: &Graph, x2: usize, x3: usize, d_c1_x1: usize) -> Result<BSetPartition> {
    let n = h.n();
    if x2 >= n {
        return Err(Error::MissingVertex(x2));
    }
    if x3 >= n {
        return Err(Error::MissingVertex(x3));
    }
    let cut: VertexSet = [x2, x3].into_iter().collect();
    if !is_cut_set(h, cut) {
        return Err(Error::NotACut);
    }
    let cp = components_after_cut(h, cut);
    let nontrivial = cp.nontrivial_indices();
    if nontrivial.len() > 1 {
        return Err(Error::MultipleNontrivial(nontrivial.len()));
    }
    let c1 = nontrivial.first().map(|&i| cp.components[i]).unwrap_or_default();

    let n2 = h.neighbors(x2);
    let n3 = h.neighbors(x3);
    let c1_1 = c1.difference(n2).difference(n3);
    let c1_23 = c1.intersection(n2).intersection(n3);
    let only2 = c1.intersection(n2).difference(n3);
    let only3 = c1.intersection(n3).difference(n2);
    let touches_c1_1 = h.neighborhood_of(c1_1);
    let a2 = only2.intersection(touches_c1_1);
    let a3 = only3.intersection(touches_c1_1);
    let l_x2 = only2.difference(a2);
    let l_x3 = only3.difference(a3);

    let not_full_to = |side: VertexSet, other: VertexSet| -> VertexSet {
        side.iter().filter(|&v| !other.is_subset(h.neighbors(v))).collect()
    };
    let l2 = not_full_to(l_x2, l_x3);
    let l3 = not_full_to(l_x3, l_x2);

    let missing = d_c1_x1.saturating_sub(c1_1.len());
    let (case, b2, b3, b12, b13) = if !l2.is_empty() && !l3.is_empty() {
        (BCase::Case1, Some(l_x2.difference(l2)), Some(l_x3.difference(l3)), Some(l2), Some(l3))
    } else if c1_1.len() == d_c1_x1 {
        (BCase::Case2, Some(l_x2), Some(l_x3), Some(VertexSet::EMPTY), Some(VertexSet::EMPTY))
    } else {
        (BCase::Case3, None, None, None, None)
    };

    Ok(BSetPartition {
        partition: cp,
        c1,
        c1_1,
        c1_23,
        a2,
        a3,
        l_x2,
        l_x3,
        b2,
        b3,
        b12,
        b13,
        missing,
        case,
    })
}

fn fail(msg: String) -> Error {
    Error::AssertionFailure(msg)
}

/// Checks the structural facts forced on a triangle-free diameter-2 graph with
/// connectivity 3 around a cut set `S = {x1, x2, x3}` (vertices of `g`).
pub fn check_diameter2_cut_facts(g: &Graph, x1: usize, x2: usize, x3: usize) -> Result<()> {
    let s: VertexSet = [x1, x2, x3].into_iter().collect();
    let cp = components_after_cut(g, s);
    if cp.len() < 2 {
        return Err(fail(format!("{s:?} is not a cut set")));
    }
    let nontrivial = cp.nontrivial_indices();
    if nontrivial.len() > 1 {
        return Err(fail(format!("G - S has {} nontrivial components", nontrivial.len())));
    }
    let table = class_table(g, s, &cp);
    for (i, &c) in cp.components.iter().enumerate() {
        if cp.trivial[i] && table.class(i, s) != c {
            return Err(fail(format!("trivial component {c:?} misses part of S")));
        }
    }
    let Some(&i1) = nontrivial.first() else {
        return Ok(());
    };
    let set = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    if !table.class(i1, VertexSet::EMPTY).is_empty() {
        return Err(fail("C1(empty) is nonempty".into()));
    }
    if !table.class(i1, s).is_empty() {
        return Err(fail("C1(S) is nonempty".into()));
    }
    let c1_1 = table.class(i1, set(&[x1]));
    let c1_2 = table.class(i1, set(&[x2]));
    let c1_3 = table.class(i1, set(&[x3]));
    let c1_12 = table.class(i1, set(&[x1, x2]));
    let c1_13 = table.class(i1, set(&[x1, x3]));
    let touches = g.neighborhood_of(c1_1);
    let a2 = c1_2.union(c1_12).intersection(touches);
    let a3 = c1_3.union(c1_13).intersection(touches);
    if a2.union(a3).iter().any(|v| g.has_edge(v, x1)) {
        return Err(fail("a vertex of A2 or A3 is adjacent to x1".into()));
    }
    if !a2.union(a3).intersection(c1_12.union(c1_13)).is_empty() {
        return Err(fail("A-sets meet C1({1,2}) or C1({1,3})".into()));
    }
    let b2 = c1_2.difference(a2);
    let b3 = c1_3.difference(a3);
    let b12 = c1_12.difference(a2);
    let b13 = c1_13.difference(a3);
    let joined = |x: VertexSet, y: VertexSet| x.iter().all(|v| y.is_subset(g.neighbors(v)));
    if !joined(b2, b13) {
        return Err(fail("B2 is not completely joined to B13".into()));
    }
    if !joined(b3, b12) {
        return Err(fail("B3 is not completely joined to B12".into()));
    }
    if !joined(b2, b3) {
        return Err(fail("B2 is not completely joined to B3".into()));
    }
    Ok(())
}
