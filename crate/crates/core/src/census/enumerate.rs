//! Isomorph-free generation by canonical augmentation.
//!
//! Each graph on `n` vertices is produced from the representative of `G - m`,
//! where `m` is a canonically chosen vertex of maximum degree. A child built by
//! adding vertex `v` to parent `P` is kept only if `child - m(child)` is
//! isomorphic to `P`; duplicates from the same parent are removed by certificate.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, CanonicalCert};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count the enumerator accepts.
pub const ENUMERATION_CAP: usize = 11;

/// Numbers of graphs on 1..=10 vertices up to isomorphism.
pub const KNOWN_GRAPH_COUNTS: [u64; 10] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

/// Numbers of triangle-free graphs on 1..=11 vertices up to isomorphism.
pub const KNOWN_TRIANGLE_FREE_COUNTS: [u64; 11] = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172, 105071];

/// Expected count for `n` vertices, if tabulated.
pub fn known_count(n: usize, triangle_free: bool) -> Option<u64> {
    let table: &[u64] = if triangle_free { &KNOWN_TRIANGLE_FREE_COUNTS } else { &KNOWN_GRAPH_COUNTS };
    n.checked_sub(1).and_then(|i| table.get(i)).copied()
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Parse("vertex count must be at least 1".into()));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    Ok(())
}

/// Children of one parent, in no particular order.
fn augment(parent: &Graph, parent_cert: CanonicalCert, triangle_free: bool) -> Vec<CanonicalCert> {
    let k = parent.n();
    let new = k;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for bits in 0..1u32 << k {
        let mask = VertexSet::from_bits(bits as u16);
        if triangle_free && !parent.is_independent(mask) {
            continue;
        }
        let deg = mask.len();
        // the new vertex must have maximum degree in the child
        if parent.vertices().iter().any(|u| parent.degree(u) + usize::from(mask.contains(u)) > deg) {
            continue;
        }
        let child = parent.add_vertex(mask).expect("parent below vertex cap");
        let lab = canonical_labeling(&child);
        let m = *lab.order.iter().rev().find(|&&v| child.degree(v) == deg).expect("new vertex has max degree");
        let accepted = m == new || {
            let reduced = child.delete_vertex(m).expect("vertex present");
            canonical_form(&reduced) == parent_cert
        };
        if accepted && seen.insert(lab.cert) {
            out.push(lab.cert);
        }
    }
    out
}

fn next_level(parents: &[CanonicalCert], triangle_free: bool) -> Vec<CanonicalCert> {
    let mut level: Vec<CanonicalCert> =
        parents.par_iter().flat_map_iter(|&c| augment(&c.to_graph(), c, triangle_free)).collect();
    level.par_sort_unstable();
    level
}

/// Certificates of every graph on `1..=n_max` vertices, one list per vertex
/// count, each sorted.
pub fn enumerate_levels(n_max: usize, triangle_free: bool) -> Result<Vec<Vec<CanonicalCert>>> {
    check_n(n_max)?;
    let mut levels = vec![vec![canonical_form(&Graph::new(1)?)]];
    while levels.len() < n_max {
        let next = next_level(levels.last().unwrap(), triangle_free);
        levels.push(next);
    }
    Ok(levels)
}

/// One canonical representative per isomorphism class on `n` vertices, sorted
/// by certificate.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_levels(n, false)?.pop().unwrap().into_iter().map(|c| c.to_graph()).collect())
}

/// As [`enumerate_nonisomorphic`], restricted to triangle-free graphs.
pub fn enumerate_triangle_free(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_levels(n, true)?.pop().unwrap().into_iter().map(|c| c.to_graph()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_seven() {
        let levels = enumerate_levels(7, false).unwrap();
        for (i, level) in levels.iter().enumerate() {
            assert_eq!(level.len() as u64, KNOWN_GRAPH_COUNTS[i], "n = {}", i + 1);
        }
        let tf = enumerate_levels(8, true).unwrap();
        for (i, level) in tf.iter().enumerate() {
            assert_eq!(level.len() as u64, KNOWN_TRIANGLE_FREE_COUNTS[i], "n = {}", i + 1);
        }
    }

    #[test]
    fn output_is_canonical_and_sorted() {
        let g = enumerate_nonisomorphic(5).unwrap();
        assert!(g.windows(2).all(|w| canonical_form(&w[0]) < canonical_form(&w[1])));
        assert!(g.iter().all(|h| canonical_form(h).to_graph() == *h));
    }

    #[test]
    fn limits() {
        assert!(matches!(enumerate_nonisomorphic(12), Err(Error::CapExceeded { n: 12, cap: 11 })));
        assert!(enumerate_nonisomorphic(0).is_err());
    }
}
