//! Exhaustive small-graph census: isomorph-free enumeration, deck uniqueness,
//! and verification sweeps over every member of each hypothesis class.

mod enumerate;
mod report;
mod theorems;
mod uniqueness;

pub use enumerate::{
    enumerate_levels, enumerate_nonisomorphic, enumerate_triangle_free, known_count, ENUMERATION_CAP,
    KNOWN_GRAPH_COUNTS, KNOWN_TRIANGLE_FREE_COUNTS,
};
pub use report::{
    check_corpus, class_counts, run_census, CensusOptions, CensusReport, CorpusCheck, EDGE_CENSUS_CAP,
    EDGE_CENSUS_LARGE_CAP, VERTEX_CENSUS_CAP, VERTEX_CENSUS_LARGE_CAP,
};
pub use theorems::{class_members, verify_members, verify_theorem, Failure, Theorem, TheoremVerdict};
pub use uniqueness::{deck_uniqueness, edge_qualifying, greenwell_level, DeckKind, GreenwellReport, UniquenessReport};

use crate::error::{Error, Result};

/// Deck collisions among all graphs on `n` vertices.
pub fn verify_deck_uniqueness(n: usize, kind: DeckKind) -> Result<UniquenessReport> {
    let cap = match kind {
        DeckKind::Vertex => VERTEX_CENSUS_CAP,
        DeckKind::Edge => EDGE_CENSUS_CAP,
    };
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let graphs = enumerate_nonisomorphic(n)?;
    Ok(deck_uniqueness(n, &graphs, kind))
}

/// Edge-deck and vertex-deck agreement for every order up to `n_max`.
pub fn greenwell_check(n_max: usize) -> Result<Vec<GreenwellReport>> {
    if n_max > EDGE_CENSUS_CAP {
        return Err(Error::CapExceeded { n: n_max, cap: EDGE_CENSUS_CAP });
    }
    let levels = enumerate_levels(n_max, false)?;
    Ok(levels
        .iter()
        .enumerate()
        .map(|(i, level)| {
            let graphs: Vec<_> = level.iter().map(|c| c.to_graph()).collect();
            greenwell_level(i + 1, &graphs)
        })
        .collect())
}
