//! Exact combinatorics of cube unfoldings.
//!
//! Cutting a cube open along a spanning tree of its edge graph and flattening
//! the result produces a hexomino-shaped net. This crate provides the three
//! layers needed to count and classify those nets without ever leaving integer
//! arithmetic:
//!
//! * [`graph`] — the cube's vertex/edge graph with a fixed canonical edge
//!   ordering, exact spanning-tree counting via the matrix-tree determinant,
//!   and exhaustive spanning-tree enumeration (the two routes cross-check each
//!   other: both give 384 for the cube).
//! * [`symmetry`] — the full 48-element isometry group of the cube generated
//!   from three explicit permutations, classification of every element into
//!   one of ten geometric classes, its action on spanning trees, and orbit
//!   counting by Burnside's lemma (384 trees fall into 11 orbits).
//! * [`unfold`] — turning a spanning tree into a planar net of six unit
//!   cells, canonicalizing the resulting shape up to rotation, reflection and
//!   translation, and grouping all 384 trees by shape (11 distinct hexominoes,
//!   matching the orbit count).
//!
//! [`render`] holds small ASCII and SVG renderers for shapes and nets.

pub mod error;
pub mod graph;
pub mod render;
pub mod symmetry;
pub mod unfold;

pub use error::{Error, TreeDefect};
