//! Vertex decks, edge decks, and the parameters that can be read off them.
//!
//! A deck stores the sorted canonical certificates of its cards, so two decks
//! are equal exactly when they are equal as multisets of isomorphism classes.

use std::collections::hash_map::DefaultHasher;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalCert};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::subgraph::count_copies;

/// Multiset of vertex-deleted cards of an `n`-vertex graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Deck {
    n: usize,
    cards: Vec<CanonicalCert>,
}

/// Multiset of edge-deleted cards of an `n`-vertex graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeDeck {
    n: usize,
    cards: Vec<CanonicalCert>,
}

/// A deck of either kind, as read from a deck file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyDeck {
    Vertex(Deck),
    Edge(EdgeDeck),
}

fn digest_of(cards: &[CanonicalCert]) -> u64 {
    let mut h = DefaultHasher::new();
    cards.hash(&mut h);
    h.finish()
}

fn render(header: &str, n: usize, cards: &[CanonicalCert]) -> String {
    let mut out = format!("{header}={n}\n");
    for c in cards {
        let _ = writeln!(out, "{c}");
    }
    out
}

impl Deck {
    /// Builds a deck from cards in any order and any labeling.
    pub fn from_cards(n: usize, cards: &[Graph]) -> Result<Self> {
        if cards.len() != n {
            return Err(Error::MalformedDeck(format!("{} cards for n = {n}", cards.len())));
        }
        if let Some(bad) = cards.iter().find(|c| c.n() + 1 != n) {
            return Err(Error::MalformedDeck(format!("card on {} vertices for n = {n}", bad.n())));
        }
        let mut certs: Vec<_> = cards.iter().map(canonical_form).collect();
        certs.sort_unstable();
        Ok(Deck { n, cards: certs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted card certificates.
    pub fn cards(&self) -> &[CanonicalCert] {
        &self.cards
    }

    /// Card `i` as a labeled graph (its canonical representative).
    pub fn card(&self, i: usize) -> Graph {
        self.cards[i].to_graph()
    }

    /// Hash of the sorted certificate list. Only for bucketing.
    pub fn digest(&self) -> u64 {
        digest_of(&self.cards)
    }

    /// Deck file text: `n=<n>` then one graph6 certificate per line.
    pub fn to_text(&self) -> String {
        render("n", self.n, &self.cards)
    }

    /// Indices of pairwise distinct cards, in certificate order.
    pub fn distinct_card_indices(&self) -> Vec<usize> {
        (0..self.cards.len()).filter(|&i| i == 0 || self.cards[i] != self.cards[i - 1]).collect()
    }
}

impl EdgeDeck {
    pub fn from_cards(n: usize, cards: &[Graph]) -> Result<Self> {
        if let Some(bad) = cards.iter().find(|c| c.n() != n) {
            return Err(Error::MalformedDeck(format!("edge-card on {} vertices for n = {n}", bad.n())));
        }
        let mut certs: Vec<_> = cards.iter().map(canonical_form).collect();
        certs.sort_unstable();
        let m = certs.len();
        if let Some(bad) = certs.iter().find(|c| c.edge_count() + 1 != m) {
            return Err(Error::MalformedDeck(format!(
                "edge-card with {} edges in a deck of {m} cards",
                bad.edge_count()
            )));
        }
        Ok(EdgeDeck { n, cards: certs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cards(&self) -> &[CanonicalCert] {
        &self.cards
    }

    pub fn card(&self, i: usize) -> Graph {
        self.cards[i].to_graph()
    }

    /// Edge count of the source graph.
    pub fn edge_count(&self) -> usize {
        self.cards.len()
    }

    pub fn digest(&self) -> u64 {
        digest_of(&self.cards)
    }

    /// Edge-deck file text: `en=<n>` then one certificate per line.
    pub fn to_text(&self) -> String {
        render("en", self.n, &self.cards)
    }

    pub fn distinct_card_indices(&self) -> Vec<usize> {
        (0..self.cards.len()).filter(|&i| i == 0 || self.cards[i] != self.cards[i - 1]).collect()
    }
}

impl AnyDeck {
    pub fn to_text(&self) -> String {
        match self {
            AnyDeck::Vertex(d) => d.to_text(),
            AnyDeck::Edge(d) => d.to_text(),
        }
    }
}

pub fn compute_deck(g: &Graph) -> Deck {
    compute_deck_with_provenance(g).0
}

/// The deck together with `deleted[i]`, the vertex of `g` whose removal gave card `i`.
pub fn compute_deck_with_provenance(g: &Graph) -> (Deck, Vec<usize>) {
    let mut cards: Vec<(CanonicalCert, usize)> =
        (0..g.n()).map(|v| (canonical_form(&g.delete_vertex_unchecked(v)), v)).collect();
    cards.sort_unstable();
    let (certs, deleted) = cards.into_iter().unzip();
    (Deck { n: g.n(), cards: certs }, deleted)
}

pub fn compute_edge_deck(g: &Graph) -> EdgeDeck {
    compute_edge_deck_with_provenance(g).0
}

/// The edge deck with `deleted[i]`, the edge whose removal gave card `i`.
pub fn compute_edge_deck_with_provenance(g: &Graph) -> (EdgeDeck, Vec<(usize, usize)>) {
    let mut cards: Vec<(CanonicalCert, (usize, usize))> = g
        .edges()
        .map(|(u, v)| {
            let mut card = *g;
            card.remove_edge(u, v);
            (canonical_form(&card), (u, v))
        })
        .collect();
    cards.sort_unstable();
    let (certs, deleted) = cards.into_iter().unzip();
    (EdgeDeck { n: g.n(), cards: certs }, deleted)
}

/// Multiset equality of two decks of the same kind.
pub fn decks_equal(a: &AnyDeck, b: &AnyDeck) -> Result<bool> {
    match (a, b) {
        (AnyDeck::Vertex(x), AnyDeck::Vertex(y)) => Ok(x == y),
        (AnyDeck::Edge(x), AnyDeck::Edge(y)) => Ok(x == y),
        _ => Err(Error::KindMismatch),
    }
}

/// `|E(G)|` from the deck: every edge survives in exactly `n - 2` cards.
pub fn reconstruct_edge_count(d: &Deck) -> Result<usize> {
    let n = d.n();
    if n < 3 {
        return Err(Error::MalformedDeck(format!("edge count needs n >= 3, got {n}")));
    }
    let total: usize = d.cards.iter().map(CanonicalCert::edge_count).sum();
    if !total.is_multiple_of(n - 2) {
        return Err(Error::MalformedDeck(format!("card edge total {total} not divisible by {}", n - 2)));
    }
    Ok(total / (n - 2))
}

/// Degree in `G` of the vertex deleted to form card `card_index`.
pub fn deleted_vertex_degree(d: &Deck, card_index: usize) -> Result<usize> {
    let card = d
        .cards
        .get(card_index)
        .ok_or_else(|| Error::MalformedDeck(format!("no card {card_index}")))?;
    let m = reconstruct_edge_count(d)?;
    m.checked_sub(card.edge_count())
        .ok_or_else(|| Error::MalformedDeck("card has more edges than the graph".into()))
}

/// Degree sequence of `G`, one entry per card, in card order.
pub fn degree_sequence(d: &Deck) -> Result<Vec<usize>> {
    (0..d.cards.len()).map(|i| deleted_vertex_degree(d, i)).collect()
}

/// Number of subgraphs of `G` isomorphic to `f`, for `|V(f)| < n`.
///
/// Each copy on `k` vertices survives in the `n - k` cards that keep all of its
/// vertices, so the card totals overcount by exactly that factor.
pub fn kelly_count(d: &Deck, f: &Graph) -> Result<u64> {
    let n = d.n();
    let k = f.n();
    if k >= n {
        return Err(Error::NotProperSubgraph { pattern: k, n });
    }
    let total: u64 = d.cards.iter().map(|c| count_copies(f, &c.to_graph())).sum();
    let factor = (n - k) as u64;
    if !total.is_multiple_of(factor) {
        return Err(Error::MalformedDeck(format!("copy total {total} not divisible by {factor}")));
    }
    Ok(total / factor)
}

/// Degrees in `G` of the endpoints of the edge deleted to form edge-card `card_index`.
///
/// Found by trying every completion `H + xy` of the card and keeping those whose
/// edge deck is `ed`; all survivors must agree.
pub fn edge_endpoint_degrees(ed: &EdgeDeck, card_index: usize) -> Result<(usize, usize)> {
    let cert = ed
        .cards
        .get(card_index)
        .ok_or_else(|| Error::MalformedDeck(format!("no edge-card {card_index}")))?;
    let h = cert.to_graph();
    let mut found: Vec<(usize, usize)> = Vec::new();
    for (x, y) in h.non_edges() {
        let (a, b) = (h.degree(x) + 1, h.degree(y) + 1);
        let pair = (a.min(b), a.max(b));
        if found.contains(&pair) {
            continue;
        }
        if compute_edge_deck(&h.with_edge(x, y)) == *ed {
            found.push(pair);
        }
    }
    match found.as_slice() {
        [] => Err(Error::NoCandidate),
        [one] => Ok(*one),
        _ => {
            found.sort_unstable();
            Err(Error::AmbiguousEndpoints(found))
        }
    }
}

/// Parses a deck file (`n=` header) or an edge-deck file (`en=` header).
/// Cards may be in any order and any labeling.
pub fn parse_deck_text(text: &str) -> Result<AnyDeck> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty deck file".into()))?;
    let (edge, value) = if let Some(v) = header.strip_prefix("en=") {
        (true, v)
    } else if let Some(v) = header.strip_prefix("n=") {
        (false, v)
    } else {
        return Err(Error::Parse(format!("expected `n=` or `en=` header, got {header:?}")));
    };
    let n: usize = value.trim().parse().map_err(|_| Error::Parse(format!("bad vertex count {value:?}")))?;
    let cards = lines.map(parse_graph6).collect::<Result<Vec<_>>>()?;
    if edge {
        EdgeDeck::from_cards(n, &cards).map(AnyDeck::Edge)
    } else {
        Deck::from_cards(n, &cards).map(AnyDeck::Vertex)
    }
}
