//! Exhaustive verification sweeps for the reconstruction procedures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::enumerate_levels;
use crate::canon::is_isomorphic;
use crate::classify::{HypothesisClass, Profile};
use crate::connectivity::{cut_sets_of_size, minimum_cut_sets, vertex_connectivity};
use crate::deck::{compute_deck, compute_edge_deck};
use crate::decompose::check_diameter2_cut_facts;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::reconstruct::{
    compute_ph, derive_g3_structure, edge_reconstruct_g2_tf_from, edge_reconstruct_g3_tf, oracle_edge_reconstruct,
    oracle_reconstruct, reconstruct_g2_tf_k3, reconstruct_g2_tf_k3_all_choices, reconstruct_g3_tf_k1,
    reconstruct_g3_tf_k3plus, Options, Route,
};

/// The reconstruction results a sweep can target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theorem {
    /// Triangle-free, diameter 2, connectivity 3 (vertex decks).
    T4,
    /// Triangle-free, G3, connectivity at least 3 (structure and bipartite oracle).
    T5,
    /// Triangle-free, G3, connectivity 1 (vertex decks).
    T8,
    /// Triangle-free, diameter 2 (edge decks).
    T10,
    /// Triangle-free, G3 (edge decks).
    T11,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::T4, Theorem::T5, Theorem::T8, Theorem::T10, Theorem::T11];

    pub fn class(self) -> HypothesisClass {
        match self {
            Theorem::T4 => HypothesisClass::Diameter2TriangleFreeK3,
            Theorem::T5 => HypothesisClass::Diameter3TriangleFreeK3Plus,
            Theorem::T8 => HypothesisClass::Diameter3TriangleFreeK1,
            Theorem::T10 => HypothesisClass::Diameter2TriangleFree,
            Theorem::T11 => HypothesisClass::Diameter3TriangleFree,
        }
    }

    /// Largest vertex count a sweep accepts.
    pub fn cap(self) -> usize {
        match self {
            Theorem::T5 => 11,
            _ => 10,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown theorem {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub graph_g6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub n_max: usize,
    pub members_by_n: BTreeMap<usize, usize>,
    /// Extra graphs checked beyond the exhaustive range.
    pub targeted: Vec<String>,
    pub instances: usize,
    pub passes: usize,
    pub failures: Vec<Failure>,
    pub oracle_agreements: usize,
    pub routes: BTreeMap<String, usize>,
    /// Counts of auxiliary checks performed (cut sets, start cards, ...).
    pub checks: BTreeMap<String, u64>,
}

impl TheoremVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.instances
    }
}

/// What a successful member check produced.
#[derive(Default)]
struct Outcome {
    routes: Vec<Route>,
    oracle_agrees: bool,
    checks: BTreeMap<&'static str, u64>,
}

type Check = std::result::Result<Outcome, String>;

fn oracle_opts(theorem: Theorem) -> Options {
    Options { trusted: true, oracle_cap: theorem.cap() }
}

fn expect_same(got: &Graph, want: &Graph, what: &str) -> std::result::Result<(), String> {
    if is_isomorphic(got, want) {
        Ok(())
    } else {
        Err(format!("{what} returned {}", emit_graph6(got)))
    }
}

fn vertex_oracle_agrees(g: &Graph, cap: usize) -> std::result::Result<(), String> {
    let found = oracle_reconstruct(&compute_deck(g), cap).map_err(|e| format!("oracle: {e}"))?;
    match &found[..] {
        [h] => expect_same(h, g, "oracle"),
        _ => Err(format!("oracle found {} graphs", found.len())),
    }
}

fn edge_oracle_agrees(g: &Graph, cap: usize) -> std::result::Result<(), String> {
    let found = oracle_edge_reconstruct(&compute_edge_deck(g), cap).map_err(|e| format!("edge oracle: {e}"))?;
    match &found[..] {
        [h] => expect_same(h, g, "edge oracle"),
        _ => Err(format!("edge oracle found {} graphs", found.len())),
    }
}

fn no_escape(route: Route, allowed_fallback: bool) -> std::result::Result<(), String> {
    if route.is_fallback() && !allowed_fallback {
        Err(format!("escaped to {}", route.as_str()))
    } else {
        Ok(())
    }
}

fn check_t4(g: &Graph) -> Check {
    let opts = oracle_opts(Theorem::T4);
    vertex_oracle_agrees(g, opts.oracle_cap)?;
    let d = compute_deck(g);
    let r = reconstruct_g2_tf_k3(&d, &opts).map_err(|e| e.to_string())?;
    expect_same(&r.graph, g, r.route.as_str())?;
    no_escape(r.route, false)?;
    let mut out = Outcome { routes: vec![r.route], oracle_agrees: true, ..Outcome::default() };

    let choices = reconstruct_g2_tf_k3_all_choices(&d, &opts).map_err(|e| e.to_string())?;
    for (card, cut, outcome) in &choices {
        let r = outcome.as_ref().map_err(|e| format!("card {card} cut {cut:?}: {e}"))?;
        expect_same(&r.graph, g, &format!("card {card} cut {cut:?}"))?;
    }
    out.checks.insert("card_cut_choices", choices.len() as u64);

    // structural facts around every 3-cut that a connectivity-2 card exposes
    let mut cuts = 0;
    for x1 in 0..g.n() {
        let h = g.delete_vertex(x1).map_err(|e| e.to_string())?;
        if vertex_connectivity(&h).ok() != Some(2) {
            continue;
        }
        let lift = |v: usize| if v < x1 { v } else { v + 1 };
        for cut in cut_sets_of_size(&h, 2) {
            let mut it = cut.iter();
            let (a, b) = (lift(it.next().unwrap()), lift(it.next().unwrap()));
            check_diameter2_cut_facts(g, x1, a, b).map_err(|e| format!("cut {{{x1},{a},{b}}}: {e}"))?;
            cuts += 1;
        }
    }
    out.checks.insert("cut_sets", cuts);
    Ok(out)
}

fn check_t5(g: &Graph) -> Check {
    let opts = oracle_opts(Theorem::T5);
    let mut out = Outcome::default();
    let cuts = minimum_cut_sets(g);
    for &s in &cuts {
        derive_g3_structure(g, s).map_err(|e| format!("cut {s:?}: {e}"))?;
    }
    out.checks.insert("minimum_cuts", cuts.len() as u64);
    vertex_oracle_agrees(g, opts.oracle_cap)?;
    out.oracle_agrees = true;
    let r = reconstruct_g3_tf_k3plus(&compute_deck(g), &opts).map_err(|e| e.to_string())?;
    expect_same(&r.graph, g, r.route.as_str())?;
    out.routes.push(r.route);
    Ok(out)
}

fn check_t8(g: &Graph) -> Check {
    let opts = oracle_opts(Theorem::T8);
    vertex_oracle_agrees(g, opts.oracle_cap)?;
    let r = reconstruct_g3_tf_k1(&compute_deck(g), &opts).map_err(|e| e.to_string())?;
    expect_same(&r.graph, g, r.route.as_str())?;
    no_escape(r.route, false)?;
    Ok(Outcome { routes: vec![r.route], oracle_agrees: true, ..Outcome::default() })
}

/// Far-pair facts for every edge of a triangle-free diameter-2 graph.
fn check_ph_invariants(g: &Graph) -> std::result::Result<u64, String> {
    let mut pairs = 0;
    for (u, v) in g.edges() {
        let h = g.delete_edge(u, v).map_err(|e| e.to_string())?;
        let ph = compute_ph(&h);
        if !ph.contains(u, v) {
            return Err(format!("edge {u}{v}: endpoints not at distance 3"));
        }
        if let Some(&(a, b)) = ph.pairs.iter().find(|&&(a, b)| ![a, b].iter().any(|&x| x == u || x == v)) {
            return Err(format!("edge {u}{v}: far pair {a}{b} avoids the edge"));
        }
        if ph.len() >= 3 {
            let count = ph.occurrences(h.n());
            let hubs: Vec<usize> = (0..h.n()).filter(|&x| count[x] >= 2).collect();
            if hubs.len() > 2 {
                return Err(format!("edge {u}{v}: {} repeated far vertices", hubs.len()));
            }
            if let [x] = hubs[..] {
                let partners: VertexSet = ph.pairs.iter().map(|&(a, b)| if a == x { b } else { a }).collect();
                let star = partners.iter().any(|c| {
                    let leaves = partners.difference(VertexSet::singleton(c));
                    leaves.is_subset(h.neighbors(c)) && h.is_independent(leaves)
                });
                if !star {
                    return Err(format!("edge {u}{v}: far partners of {x} are not a star"));
                }
            }
        }
        pairs += ph.len() as u64;
    }
    Ok(pairs)
}

fn check_t10(g: &Graph) -> Check {
    let opts = oracle_opts(Theorem::T10);
    let mut out = Outcome::default();
    out.checks.insert("far_pairs", check_ph_invariants(g)?);
    out.checks.insert("edges", g.edge_count() as u64);
    edge_oracle_agrees(g, opts.oracle_cap)?;
    out.oracle_agrees = true;
    let ed = compute_edge_deck(g);
    let starts = ed.distinct_card_indices();
    for &i in &starts {
        let r = edge_reconstruct_g2_tf_from(&ed, &opts, i).map_err(|e| format!("start card {i}: {e}"))?;
        expect_same(&r.graph, g, &format!("start card {i} via {}", r.route.as_str()))?;
        no_escape(r.route, r.route == Route::Thm10P2BipartiteFallback)?;
        out.routes.push(r.route);
    }
    out.checks.insert("start_cards", starts.len() as u64);
    Ok(out)
}

fn check_t11(g: &Graph) -> Check {
    let opts = oracle_opts(Theorem::T11);
    edge_oracle_agrees(g, opts.oracle_cap)?;
    let r = edge_reconstruct_g3_tf(&compute_edge_deck(g), &opts).map_err(|e| e.to_string())?;
    expect_same(&r.graph, g, r.route.as_str())?;
    // connectivity 2 goes to the oracle and connectivity 3+ to the bipartite oracle by design
    let allowed = match vertex_connectivity(g).ok() {
        Some(2) => r.route == Route::Oracle,
        Some(k) if k >= 3 => r.route == Route::Thm5BipartiteFallback,
        _ => false,
    };
    no_escape(r.route, allowed)?;
    Ok(Outcome { routes: vec![r.route], oracle_agrees: true, ..Outcome::default() })
}

fn check_member(theorem: Theorem, g: &Graph) -> Check {
    match theorem {
        Theorem::T4 => check_t4(g),
        Theorem::T5 => check_t5(g),
        Theorem::T8 => check_t8(g),
        Theorem::T10 => check_t10(g),
        Theorem::T11 => check_t11(g),
    }
}

/// Members of the theorem's class among triangle-free graphs on `1..=n_max` vertices.
pub fn class_members(theorem: Theorem, n_max: usize) -> Result<Vec<Graph>> {
    let levels = enumerate_levels(n_max, true)?;
    Ok(members_from_levels(theorem, &levels.iter().flatten().map(|c| c.to_graph()).collect::<Vec<_>>()))
}

fn members_from_levels(theorem: Theorem, graphs: &[Graph]) -> Vec<Graph> {
    let class = theorem.class();
    graphs.par_iter().filter(|g| class.contains_profile(&Profile::of(g))).copied().collect()
}

/// Runs the theorem's procedure on every triangle-free class member with at
/// most `n_max` vertices (the Petersen graph is added for T4 below 10).
pub fn verify_theorem(theorem: Theorem, n_max: usize) -> Result<TheoremVerdict> {
    if n_max > theorem.cap() {
        return Err(Error::CapExceeded { n: n_max, cap: theorem.cap() });
    }
    let graphs: Vec<Graph> =
        enumerate_levels(n_max, true)?.iter().flatten().map(|c| c.to_graph()).collect();
    let mut members = members_from_levels(theorem, &graphs);
    let mut targeted = Vec::new();
    if theorem == Theorem::T4 && n_max < 10 {
        let p = Graph::petersen();
        targeted.push(emit_graph6(&crate::canon::canonical_graph(&p)));
        members.push(p);
    }
    let mut verdict = verify_members(theorem, n_max, &members, targeted);
    if theorem == Theorem::T10 {
        // the far-pair facts need only diameter 2, not four edges
        let sparse: Vec<&Graph> = graphs
            .iter()
            .filter(|g| g.edge_count() < 4 && Profile::of(g).in_g2())
            .collect();
        for g in &sparse {
            if let Err(detail) = check_ph_invariants(g) {
                verdict.failures.push(Failure { graph_g6: emit_graph6(g), detail });
            }
        }
        verdict.failures.sort();
        verdict.checks.insert("sparse_far_pair_graphs".into(), sparse.len() as u64);
    }
    Ok(verdict)
}

/// Runs the member check over an explicit list of graphs.
pub fn verify_members(theorem: Theorem, n_max: usize, members: &[Graph], targeted: Vec<String>) -> TheoremVerdict {
    let results: Vec<Check> = members.par_iter().map(|g| check_member(theorem, g)).collect();
    let mut verdict = TheoremVerdict {
        theorem,
        n_max,
        members_by_n: BTreeMap::new(),
        targeted,
        instances: members.len(),
        passes: 0,
        failures: Vec::new(),
        oracle_agreements: 0,
        routes: BTreeMap::new(),
        checks: BTreeMap::new(),
    };
    for (g, result) in members.iter().zip(results) {
        *verdict.members_by_n.entry(g.n()).or_default() += 1;
        match result {
            Ok(out) => {
                verdict.passes += 1;
                verdict.oracle_agreements += usize::from(out.oracle_agrees);
                for r in out.routes {
                    *verdict.routes.entry(r.as_str().to_string()).or_default() += 1;
                }
                for (k, v) in out.checks {
                    *verdict.checks.entry(k.to_string()).or_default() += v;
                }
            }
            Err(detail) => verdict.failures.push(Failure { graph_g6: emit_graph6(g), detail }),
        }
    }
    verdict.failures.sort();
    verdict
}
