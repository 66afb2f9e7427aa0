//! Rooted trees and labelled graphs: canonical forms, automorphisms,
//! admissible cuts and grafting.

mod graph;
mod tree;

pub use graph::{canonical_graph, symmetry_factor, unnumbered_iso, HalfEdge, LabelledGraph};
pub use tree::{admissible_cuts, graft, AdmissibleCut, RootedTree};
