//! Connes–Kreimer Hopf algebras of rooted trees and of 1PI graphs, their
//! Lie algebras, and the comparison maps with the operadic constructions.

mod graphs;
mod trees;

pub use graphs::{
    ck_iso_check, graph_hopf_coproduct, graph_lie_bracket, dual_bracket, one_pi_classes, CkGraphs, IsoReport,
};
pub use trees::{phi_tm_to_lr, tm_bullet, tree_bullet, tree_lie_bracket, CkTrees};
