//! Triangle-free graphs in G3: the cut-vertex case rebuilt from cards, and the
//! structure forced by a minimum cut when connectivity is at least 3.

use serde::Serialize;

use super::{finish_vertex, oracle_reconstruct_bipartite, prevalidate, violation, Options, ReconstructionResult, Route, Witness};
use crate::classify::{in_g3, HypothesisClass};
use crate::connectivity::{is_cut_set, vertex_connectivity};
use crate::deck::{deleted_vertex_degree, Deck};
use crate::decompose::{class_table, components_after_cut};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;

/// Reconstructs a triangle-free G3 graph with a cut vertex.
pub fn reconstruct_g3_tf_k1(d: &Deck, opts: &Options) -> Result<ReconstructionResult> {
    prevalidate(d, opts, HypothesisClass::Diameter3TriangleFreeK1)?;
    let indices = d.distinct_card_indices();
    let cards: Vec<(usize, Graph)> = indices.iter().map(|&i| (i, d.card(i))).collect();
    let witness_for = |i: usize, h: &Graph, joined: VertexSet, case: &str| Witness {
        card: Some(emit_graph6(h)),
        card_index: Some(i),
        joined: joined.iter().collect(),
        case: Some(case.into()),
        ..Witness::default()
    };

    // A disconnected card deletes a cut vertex y. Its neighbours are the trivial
    // components plus one side of the nontrivial component; unequal sides fix which.
    let mut disconnected = Vec::new();
    for (i, h) in &cards {
        let comps = h.components();
        if comps.len() < 2 {
            continue;
        }
        disconnected.push((*i, comps.clone()));
        let (trivial, nontrivial): (Vec<VertexSet>, Vec<VertexSet>) = comps.into_iter().partition(|c| c.len() == 1);
        let [c1] = nontrivial[..] else { continue };
        let Some((p, q)) = h.bipartition() else { continue };
        let (p, q) = (p.intersection(c1), q.intersection(c1));
        if p.len() == q.len() {
            continue;
        }
        let t: VertexSet = trivial.into_iter().fold(VertexSet::EMPTY, VertexSet::union);
        let degree = deleted_vertex_degree(d, *i)?;
        let Some(want) = degree.checked_sub(t.len()) else { continue };
        let side = if p.len() == want {
            p
        } else if q.len() == want {
            q
        } else {
            continue;
        };
        let joined = t.union(side);
        return finish_vertex(d, h.add_vertex(joined)?, Route::Thm8Case1, witness_for(*i, h, joined, "Case1"));
    }

    // A cut vertex with two or more pendant neighbours is the only cut vertex;
    // it stays the only cut vertex after deleting a pendant vertex.
    let many_trivial = disconnected
        .iter()
        .any(|(_, comps)| comps.iter().filter(|c| c.len() == 1).count() >= 2);
    if many_trivial {
        for (i, h) in &cards {
            if deleted_vertex_degree(d, *i)? != 1 {
                continue;
            }
            let cuts = h.cut_vertices();
            if cuts.len() == 1 {
                let joined = cuts;
                return finish_vertex(d, h.add_vertex(joined)?, Route::Thm8Case2, witness_for(*i, h, joined, "Case2"));
            }
        }
        return Err(violation("no pendant-vertex card has a unique cut vertex"));
    }

    // Every cut vertex has one pendant neighbour and balanced sides. A connected
    // bipartite card deleting a pendant vertex has sides X, Y with |X| = |Y| + 1;
    // the pendant vertex hangs off some z in X whose neighbourhood is all of Y.
    for (i, h) in &cards {
        if deleted_vertex_degree(d, *i)? != 1 || !h.is_connected() {
            continue;
        }
        let Some((p, q)) = h.bipartition() else { continue };
        let (x, y) = if p.len() == q.len() + 1 {
            (p, q)
        } else if q.len() == p.len() + 1 {
            (q, p)
        } else {
            continue;
        };
        if let Some(z) = x.iter().find(|&z| h.neighbors(z) == y) {
            let joined = VertexSet::singleton(z);
            return finish_vertex(d, h.add_vertex(joined)?, Route::Thm8Case3, witness_for(*i, h, joined, "Case3"));
        }
    }
    Err(violation("deck matches none of the cut-vertex cases"))
}

/// Reconstructs a triangle-free G3 graph with connectivity at least 3. Such a
/// graph is bipartite, so the bipartite-restricted oracle decides it.
pub fn reconstruct_g3_tf_k3plus(d: &Deck, opts: &Options) -> Result<ReconstructionResult> {
    prevalidate(d, opts, HypothesisClass::Diameter3TriangleFreeK3Plus)?;
    let found = oracle_reconstruct_bipartite(d, opts.oracle_cap)?;
    match found[..] {
        [g] => {
            let witness = Witness { candidates: Some(1), ..Witness::default() };
            finish_vertex(d, g, Route::Thm5BipartiteFallback, witness)
        }
        [] => Err(violation("no bipartite graph has this deck")),
        _ => Err(Error::NonUnique(found.len())),
    }
}

/// Whether the minimum cut is independent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum G3Case {
    Independent,
    HasEdge,
}

/// Structure read off a minimum cut of a triangle-free G3 graph with connectivity at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G3Structure {
    pub case: G3Case,
    /// A pair at distance 3 in the complement; the first entry lies in the cut.
    pub far_pair: (usize, usize),
    pub nontrivial_components: usize,
    pub bipartition: (VertexSet, VertexSet),
}

/// Checks the class hypotheses, then derives the structure.
pub fn derive_g3_structure(g: &Graph, s: VertexSet) -> Result<G3Structure> {
    if !g.is_triangle_free() {
        return Err(violation("graph has a triangle"));
    }
    if !in_g3(g) {
        return Err(violation("graph is not in G3"));
    }
    let kappa = vertex_connectivity(g)?;
    if kappa < 3 {
        return Err(violation(format!("connectivity {kappa} is below 3")));
    }
    if s.len() != kappa || !is_cut_set(g, s) {
        return Err(violation(format!("{s:?} is not a minimum cut")));
    }
    derive_g3_structure_unchecked(g, s)
}

fn fail(msg: impl Into<String>) -> Error {
    Error::AssertionFailure(msg.into())
}

/// Derives the structure without checking hypotheses; any forced fact that does
/// not hold is reported as an [`Error::AssertionFailure`].
pub fn derive_g3_structure_unchecked(g: &Graph, s: VertexSet) -> Result<G3Structure> {
    let comp = g.complement().distance_matrix();
    let n = g.n();
    let far: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| comp.get(a, b) == 3).collect();
    let cp = components_after_cut(g, s);
    let nontrivial = cp.nontrivial_indices();
    let independent = g.is_independent(s);
    let is_bipartition = |a: VertexSet, b: VertexSet| {
        a.intersection(b).is_empty() && a.union(b) == g.vertices() && g.is_independent(a) && g.is_independent(b)
    };

    if independent {
        let crossing = far.iter().find_map(|&(a, b)| match (s.contains(a), s.contains(b)) {
            (true, false) => Some((a, b)),
            (false, true) => Some((b, a)),
            _ => None,
        });
        let Some((x1, u)) = crossing else {
            return Err(fail("no complement-distance-3 pair joins the cut to the rest"));
        };
        if far.iter().any(|&(a, b)| s.contains(a) == s.contains(b)) {
            return Err(fail("a complement-distance-3 pair lies on one side of the cut"));
        }
        if nontrivial.is_empty() {
            let (a, b) = (s, g.vertices().difference(s));
            if !is_bipartition(a, b) {
                return Err(fail("all components trivial but graph is not complete bipartite"));
            }
            return Ok(G3Structure { case: G3Case::Independent, far_pair: (x1, u), nontrivial_components: 0, bipartition: (a, b) });
        }
        if nontrivial.len() > 1 {
            return Err(fail(format!("G - S has {} nontrivial components", nontrivial.len())));
        }
        let i1 = nontrivial[0];
        let c1 = cp.components[i1];
        let table = class_table(g, s, &cp);
        if !c1.contains(u) || table.class(i1, s).is_empty() || !table.class(i1, s).contains(u) {
            return Err(fail("far vertex is not in C1(S)"));
        }
        let c1_empty = table.class(i1, VertexSet::EMPTY);
        if c1_empty.is_empty() {
            return Err(fail("C1(empty) is empty"));
        }
        for (t, class) in table.classes_of(i1) {
            if !t.is_empty() && !class.is_empty() && !t.contains(x1) {
                return Err(fail(format!("class C1({t:?}) misses x1")));
            }
        }
        if !c1_empty.is_subset(g.neighbors(u)) {
            return Err(fail("far vertex misses part of C1(empty)"));
        }
        let a = s.union(c1_empty);
        let b = g.vertices().difference(a);
        if !is_bipartition(a, b) {
            return Err(fail("derived sides are not a bipartition"));
        }
        return Ok(G3Structure { case: G3Case::Independent, far_pair: (x1, u), nontrivial_components: 1, bipartition: (a, b) });
    }

    if nontrivial.len() != cp.len() {
        return Err(fail("cut has an edge but G - S has a trivial component"));
    }
    if far.iter().any(|&(a, b)| !(s.contains(a) && s.contains(b))) {
        return Err(fail("a complement-distance-3 pair leaves the cut"));
    }
    let Some(&(x1, x2)) = far.first() else {
        return Err(fail("complement has no pair at distance 3"));
    };
    let (n1, n2) = (g.neighbors(x1), g.neighbors(x2));
    if !n1.intersection(n2).is_empty() {
        return Err(fail("a vertex is adjacent to both x1 and x2"));
    }
    if n1.union(n2) != g.vertices() {
        return Err(fail("a vertex is adjacent to neither x1 nor x2"));
    }
    if !is_bipartition(n1, n2) {
        return Err(fail("N(x1), N(x2) is not a bipartition"));
    }
    Ok(G3Structure { case: G3Case::HasEdge, far_pair: (x1, x2), nontrivial_components: nontrivial.len(), bipartition: (n1, n2) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::deck::compute_deck;

    fn round_trip(g: &Graph, route: Route) {
        let r = reconstruct_g3_tf_k1(&compute_deck(g), &Options::default()).unwrap();
        assert_eq!(r.route, route);
        assert!(is_isomorphic(&r.graph, g));
    }

    #[test]
    fn p4_uses_balanced_case() {
        round_trip(&Graph::path(4).unwrap(), Route::Thm8Case3);
    }

    #[test]
    fn double_star_uses_unequal_sides() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        round_trip(&g, Route::Thm8Case1);
    }

    #[test]
    fn c5_is_rejected() {
        let d = compute_deck(&Graph::cycle(5).unwrap());
        assert!(matches!(reconstruct_g3_tf_k1(&d, &Options::default()), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn k3plus_rejects_non_members() {
        let d = compute_deck(&Graph::complete_bipartite(3, 3).unwrap());
        assert!(matches!(reconstruct_g3_tf_k3plus(&d, &Options::default()), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn structure_rejects_petersen() {
        let g = Graph::petersen();
        let s: VertexSet = [1, 4, 5].into_iter().collect();
        assert!(matches!(derive_g3_structure(&g, s), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn edge_in_cut_with_common_neighbour_fails() {
        // x1 = 0, x2 = 1 adjacent; vertex 2 sees both
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]).unwrap();
        let s: VertexSet = [0, 1, 4].into_iter().collect();
        assert!(matches!(derive_g3_structure_unchecked(&g, s), Err(Error::AssertionFailure(_))));
    }
}
