//! Weak integer-additive set-indexers (weak IASIs) on graph products.
//!
//! A set-indexer labels every vertex with a finite set of non-negative
//! integers and every edge `uv` with the sumset `f(u) + f(v)`; both maps must
//! be injective. It is *weak* when `|f(u) + f(v)| = max(|f(u)|, |f(v)|)` on
//! every edge, i.e. every edge has a singleton end. The crate builds the
//! Cartesian, direct, strong, lexicographic, corona and rooted products,
//! constructs weak IASIs on them from weak IASIs of the factors, verifies
//! labelings, and computes sparing numbers (the fewest edges with singleton
//! labels) exactly.

pub mod constructions;
pub mod dot;
pub mod error;
pub mod graph;
pub mod set_label;
pub mod sparing;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::Graph;
pub use set_label::{IntegerSet, Labeling};
