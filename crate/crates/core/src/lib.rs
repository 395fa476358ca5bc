pub mod canon;
pub mod census;
pub mod classify;
pub mod connectivity;
pub mod deck;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod reconstruct;
pub mod subgraph;

pub use canon::{canonical_form, is_isomorphic, CanonicalCert};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, INFINITY};
