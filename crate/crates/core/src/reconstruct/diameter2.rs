//! Vertex reconstruction of triangle-free diameter-2 graphs with connectivity 3.
//!
//! A card `H = G - x1` with connectivity 2 and a 2-cut `{x2, x3}` of it give a
//! 3-cut `{x1, x2, x3}` of `G`. The neighbours of `x1` are every trivial
//! component of `H - {x2, x3}` plus a subset of the nontrivial component `C_1`
//! that [`b_set_partition`] pins down.

use std::collections::BTreeMap;

use super::{finish_vertex, prevalidate, violation, Options, ReconstructionResult, Route, Witness};
use crate::canon::{canonical_form, CanonicalCert};
use crate::classify::HypothesisClass;
use crate::connectivity::{cut_sets_of_size, k_subsets, vertex_connectivity};
use crate::deck::{compute_deck, deleted_vertex_degree, Deck};
use crate::decompose::{b_set_partition, BCase};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;

/// Distinct cards with connectivity 2, lowest certificate first, with their 2-cuts.
fn kappa2_cards(d: &Deck) -> Vec<(usize, Graph, Vec<VertexSet>)> {
    d.distinct_card_indices()
        .into_iter()
        .filter_map(|i| {
            let h = d.card(i);
            (vertex_connectivity(&h).ok() == Some(2)).then(|| (i, h, cut_sets_of_size(&h, 2)))
        })
        .collect()
}

/// Reconstructs `G` from its deck, using the first connectivity-2 card and its
/// first 2-cut.
pub fn reconstruct_g2_tf_k3(d: &Deck, opts: &Options) -> Result<ReconstructionResult> {
    prevalidate(d, opts, HypothesisClass::Diameter2TriangleFreeK3)?;
    let cards = kappa2_cards(d);
    let Some((i, h, cuts)) = cards.first() else {
        return Err(violation("no card has connectivity 2"));
    };
    rebuild(d, *i, h, cuts[0])
}

/// Runs the construction from every connectivity-2 card and every 2-cut of it.
/// Each entry is `(card index, cut, outcome)`.
pub fn reconstruct_g2_tf_k3_all_choices(
    d: &Deck,
    opts: &Options,
) -> Result<Vec<(usize, VertexSet, Result<ReconstructionResult>)>> {
    prevalidate(d, opts, HypothesisClass::Diameter2TriangleFreeK3)?;
    let cards = kappa2_cards(d);
    if cards.is_empty() {
        return Err(violation("no card has connectivity 2"));
    }
    Ok(cards
        .iter()
        .flat_map(|(i, h, cuts)| cuts.iter().map(move |&cut| (*i, cut, rebuild(d, *i, h, cut))))
        .collect())
}

fn rebuild(d: &Deck, card_index: usize, h: &Graph, cut: VertexSet) -> Result<ReconstructionResult> {
    let mut it = cut.iter();
    let (x2, x3) = (it.next().unwrap(), it.next().unwrap());
    let degree = deleted_vertex_degree(d, card_index)?;
    let mut witness = Witness {
        card: Some(emit_graph6(h)),
        card_index: Some(card_index),
        cut: vec![x2, x3],
        ..Witness::default()
    };

    let part = match b_set_partition(h, x2, x3, 0) {
        Err(Error::MultipleNontrivial(k)) => {
            return Err(violation(format!("card minus its 2-cut has {k} nontrivial components")))
        }
        other => other?,
    };
    let trivial = part.partition.trivial_vertices();
    if part.c1.is_empty() {
        let g = h.add_vertex(trivial)?;
        witness.joined = trivial.iter().collect();
        return finish_vertex(d, g, Route::Thm4CompleteBipartite, witness);
    }
    let Some(d_c1) = degree.checked_sub(trivial.len()) else {
        return Err(violation("deleted vertex has fewer neighbours than trivial components"));
    };
    let part = b_set_partition(h, x2, x3, d_c1)?;
    let base = trivial.union(part.c1_1);
    witness.case = Some(format!("{:?}", part.case));

    let (joined, route) = match part.case {
        BCase::Case1 => {
            let b = part.b12.unwrap_or_default().union(part.b13.unwrap_or_default());
            (base.union(b), Route::Thm4Case1)
        }
        BCase::Case2 => (base, Route::Thm4Case2),
        BCase::Case3 => {
            let (joined, tried) = resolve_case3(d, h, base, part.l_x2, part.l_x3, part.missing)?;
            witness.candidates = Some(tried);
            (joined, Route::Thm4Case3)
        }
    };
    witness.joined = joined.iter().collect();
    finish_vertex(d, h.add_vertex(joined)?, route, witness)
}

/// Exactly one of the two L-sides carries the remaining `missing` neighbours;
/// try every choice on both sides and keep those that reproduce the deck.
fn resolve_case3(
    d: &Deck,
    h: &Graph,
    base: VertexSet,
    l_x2: VertexSet,
    l_x3: VertexSet,
    missing: usize,
) -> Result<(VertexSet, usize)> {
    let mut tried = 0;
    let mut matches: BTreeMap<CanonicalCert, VertexSet> = BTreeMap::new();
    for side in [l_x2, l_x3] {
        if side.len() < missing {
            continue;
        }
        let members: Vec<usize> = side.iter().collect();
        for pick in k_subsets(members.len(), missing) {
            let chosen: VertexSet = pick.iter().map(|k| members[k]).collect();
            let g = h.add_vertex(base.union(chosen))?;
            tried += 1;
            if compute_deck(&g) == *d {
                matches.entry(canonical_form(&g)).or_insert(base.union(chosen));
            }
        }
    }
    match matches.len() {
        0 => Err(violation("no completion of the L-sets reproduces the deck")),
        1 => Ok((*matches.values().next().unwrap(), tried)),
        k => Err(Error::NonUnique(k)),
    }
}
