//! Census driver and the report it produces.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_levels, known_count};
use super::theorems::{verify_theorem, Theorem, TheoremVerdict};
use super::uniqueness::{deck_uniqueness, greenwell_level, DeckKind, GreenwellReport, UniquenessReport};
use crate::canon::{canonical_form, CanonicalCert};
use crate::classify::{HypothesisClass, Profile};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default and flagged caps for the full census.
pub const VERTEX_CENSUS_CAP: usize = 9;
pub const VERTEX_CENSUS_LARGE_CAP: usize = 10;
pub const EDGE_CENSUS_CAP: usize = 8;
pub const EDGE_CENSUS_LARGE_CAP: usize = 9;

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    pub n: usize,
    /// Also run the edge-deck and vertex-deck-from-edge-deck checks.
    pub edge: bool,
    pub theorems: Vec<Theorem>,
    /// Lift the vertex cap to 10 and the edge cap to 9.
    pub allow_large: bool,
    /// Graphs read from an external corpus, compared with the enumeration.
    pub corpus: Option<Vec<Graph>>,
}

/// Agreement between an external corpus and the enumeration at one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusCheck {
    pub lines: usize,
    pub distinct: usize,
    pub wrong_order: usize,
    pub missing_from_corpus: usize,
    pub not_enumerated: usize,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub total_graphs: usize,
    pub known_count: Option<u64>,
    pub count_matches_known: Option<bool>,
    pub class_counts: BTreeMap<String, usize>,
    pub vertex_decks: UniquenessReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_decks: Option<UniquenessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greenwell: Option<Vec<GreenwellReport>>,
    pub theorem_verdicts: BTreeMap<String, TheoremVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusCheck>,
    /// Filled in only on request; absent by default so reports stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl CensusReport {
    /// Whether every check in the report came out as expected. Vertex-deck
    /// collisions are expected only for `n = 2`.
    pub fn all_clear(&self) -> bool {
        self.count_matches_known != Some(false)
            && (self.n == 2 || self.vertex_decks.collisions.is_empty())
            && self.edge_decks.as_ref().is_none_or(|e| e.collisions.is_empty())
            && self.greenwell.as_ref().is_none_or(|g| g.iter().all(|r| r.violations.is_empty()))
            && self.theorem_verdicts.values().all(TheoremVerdict::passed)
            && self.corpus.as_ref().is_none_or(|c| c.consistent)
    }

    /// `(section, metric, value)` rows summarizing the report.
    pub fn csv_rows(&self) -> Vec<[String; 3]> {
        let mut rows = Vec::new();
        let mut push = |section: &str, metric: &str, value: String| {
            rows.push([section.to_string(), metric.to_string(), value]);
        };
        push("census", "n", self.n.to_string());
        push("census", "total_graphs", self.total_graphs.to_string());
        if let Some(k) = self.known_count {
            push("census", "known_count", k.to_string());
        }
        for (k, v) in &self.class_counts {
            push("class_counts", k, v.to_string());
        }
        push("vertex_decks", "graphs", self.vertex_decks.graphs.to_string());
        push("vertex_decks", "collisions", self.vertex_decks.collisions.len().to_string());
        if let Some(e) = &self.edge_decks {
            push("edge_decks", "graphs", e.graphs.to_string());
            push("edge_decks", "collisions", e.collisions.len().to_string());
        }
        for g in self.greenwell.iter().flatten() {
            push("greenwell", &format!("n{}_qualifying", g.n), g.qualifying.to_string());
            push("greenwell", &format!("n{}_violations", g.n), g.violations.len().to_string());
        }
        for (name, v) in &self.theorem_verdicts {
            push(name, "instances", v.instances.to_string());
            push(name, "passes", v.passes.to_string());
            push(name, "failures", v.failures.len().to_string());
            for (route, count) in &v.routes {
                push(name, &format!("route_{route}"), count.to_string());
            }
        }
        if let Some(c) = &self.corpus {
            push("corpus", "consistent", c.consistent.to_string());
        }
        if let Some(t) = self.wall_time_ms {
            push("census", "wall_time_ms", t.to_string());
        }
        rows
    }
}

/// Counts of each class of interest among `graphs`.
pub fn class_counts(graphs: &[Graph]) -> BTreeMap<String, usize> {
    let profiles: Vec<Profile> = graphs.par_iter().map(Profile::of).collect();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut bump = |key: String| *counts.entry(key).or_default() += 1;
    for p in &profiles {
        bump("total".into());
        bump(match p.kappa {
            None => "kappa_disconnected".into(),
            Some(k) => format!("kappa_{k}"),
        });
        if p.kappa.is_some() {
            bump("connected".into());
        }
        if p.in_g2() {
            bump("g2".into());
        }
        if p.in_g3() {
            bump("g3".into());
        }
        if p.triangle_free {
            bump("triangle_free".into());
        }
        if p.bipartite {
            bump("bipartite".into());
        }
        for (name, class) in [
            ("tf_g2_kappa3", HypothesisClass::Diameter2TriangleFreeK3),
            ("tf_g3_kappa1", HypothesisClass::Diameter3TriangleFreeK1),
            ("tf_g3_kappa3plus", HypothesisClass::Diameter3TriangleFreeK3Plus),
            ("tf_g2_4edges", HypothesisClass::Diameter2TriangleFree),
            ("tf_g3", HypothesisClass::Diameter3TriangleFree),
        ] {
            if class.contains_profile(p) {
                bump(name.into());
            }
        }
    }
    counts
}

/// Compares a corpus against the enumerated certificates of order `n`.
pub fn check_corpus(n: usize, corpus: &[Graph], enumerated: &[CanonicalCert]) -> CorpusCheck {
    let wrong_order = corpus.iter().filter(|g| g.n() != n).count();
    let certs: BTreeSet<CanonicalCert> =
        corpus.par_iter().filter(|g| g.n() == n).map(canonical_form).collect::<Vec<_>>().into_iter().collect();
    let enumerated: BTreeSet<CanonicalCert> = enumerated.iter().copied().collect();
    let missing = enumerated.difference(&certs).count();
    let extra = certs.difference(&enumerated).count();
    CorpusCheck {
        lines: corpus.len(),
        distinct: certs.len(),
        wrong_order,
        missing_from_corpus: missing,
        not_enumerated: extra,
        consistent: wrong_order == 0 && extra == 0 && certs.len() == corpus.len(),
    }
}

/// Runs the census described by `opts`.
pub fn run_census(opts: &CensusOptions) -> Result<CensusReport> {
    let n = opts.n;
    let vertex_cap = if opts.allow_large { VERTEX_CENSUS_LARGE_CAP } else { VERTEX_CENSUS_CAP };
    if n > vertex_cap {
        return Err(Error::CapExceeded { n, cap: vertex_cap });
    }
    let edge_cap = if opts.allow_large { EDGE_CENSUS_LARGE_CAP } else { EDGE_CENSUS_CAP };
    if opts.edge && n > edge_cap {
        return Err(Error::CapExceeded { n, cap: edge_cap });
    }
    for t in &opts.theorems {
        if n > t.cap() {
            return Err(Error::CapExceeded { n, cap: t.cap() });
        }
    }

    let levels = enumerate_levels(n, false)?;
    let top = levels.last().unwrap();
    let graphs: Vec<Graph> = top.iter().map(|c| c.to_graph()).collect();
    let known = known_count(n, false);

    let (edge_decks, greenwell) = if opts.edge {
        let edge = deck_uniqueness(n, &graphs, DeckKind::Edge);
        let gw = levels
            .iter()
            .enumerate()
            .map(|(i, level)| {
                let gs: Vec<Graph> = level.iter().map(|c| c.to_graph()).collect();
                greenwell_level(i + 1, &gs)
            })
            .collect();
        (Some(edge), Some(gw))
    } else {
        (None, None)
    };

    let mut theorem_verdicts = BTreeMap::new();
    for &t in &opts.theorems {
        theorem_verdicts.insert(t.to_string(), verify_theorem(t, n)?);
    }

    Ok(CensusReport {
        n,
        total_graphs: graphs.len(),
        known_count: known,
        count_matches_known: known.map(|k| k == graphs.len() as u64),
        class_counts: class_counts(&graphs),
        vertex_decks: deck_uniqueness(n, &graphs, DeckKind::Vertex),
        edge_decks,
        greenwell,
        theorem_verdicts,
        corpus: opts.corpus.as_ref().map(|c| check_corpus(n, c, top)),
        wall_time_ms: None,
    })
}
