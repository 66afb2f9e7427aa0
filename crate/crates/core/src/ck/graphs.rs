use std::collections::BTreeSet;

use crate::combinat::{symmetry_factor, LabelledGraph};
use crate::error::{parse_err, Error, Result};
use crate::hopf::{ConnectedBialgebra, Tensor2, Word};
use crate::lincomb::LinComb;
use crate::operad::{to_coinvariants, GraphKey, GraphOperad};
use crate::par;
use crate::scalar::{one, Scalar};
use crate::series::lie_bracket;

/// Unnumbered 1PI graphs on `n` vertices, by canonical representative.
pub fn one_pi_classes(n: usize) -> Vec<LabelledGraph> {
    let set: BTreeSet<LabelledGraph> = LabelledGraph::enumerate(n, 2, 3)
        .into_iter()
        .filter(LabelledGraph::is_1pi)
        .map(|g| g.unnumbered_canonical())
        .collect();
    set.into_iter().collect()
}

/// The graph Hopf algebra: free commutative on unnumbered 1PI graphs with
/// at least two vertices, graded by vertex count minus one. Single-vertex
/// graphs are identified with the unit.
#[derive(Clone, Copy, Debug)]
pub struct CkGraphs {
    pub max_degree: usize,
}

impl CkGraphs {
    pub fn new(max_degree: usize) -> Self {
        Self { max_degree }
    }
}

/// Vertex sets `W` (|W| >= 2, proper) whose induced subgraph is 1PI with
/// two or three legs: the pieces that can be contracted to one vertex.
fn contractible_blocks(g: &LabelledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let full = (1u32 << n) - 1;
    (1..full)
        .filter(|mask| mask.count_ones() >= 2)
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|w| {
            let sub = g.induced(w);
            sub.is_1pi() && matches!(sub.leg_count(), 2 | 3)
        })
        .collect()
}

fn disjoint_families(blocks: &[Vec<usize>], start: usize, used: u32, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(current.clone());
    for i in start..blocks.len() {
        let mask: u32 = blocks[i].iter().map(|v| 1u32 << v).sum();
        if mask & used == 0 {
            current.push(i);
            disjoint_families(blocks, i + 1, used | mask, current, out);
            current.pop();
        }
    }
}

/// `Δ(η̄) = Σ_{ζ̄ ⊂ η̄} η̄/ζ̄ ⊗ ζ̄`: `ζ̄` runs over disjoint unions of induced 1PI
/// subgraphs with two or three legs (including the empty one), plus the
/// term `1 ⊗ η̄`.
pub fn graph_hopf_coproduct(eta: &LabelledGraph) -> Result<Tensor2<LabelledGraph>> {
    if !eta.is_1pi() || eta.vertex_count() < 2 {
        return Err(parse_err(format!("`{eta}` is not a 1PI graph on at least two vertices")));
    }
    let blocks = contractible_blocks(eta);
    let mut families = Vec::new();
    disjoint_families(&blocks, 0, 0, &mut Vec::new(), &mut families);
    let mut out: Tensor2<LabelledGraph> = LinComb::basis((Word::unit(), Word::gen(eta.unnumbered_canonical())));
    for fam in families {
        let chosen: Vec<Vec<usize>> = fam.iter().map(|&i| blocks[i].clone()).collect();
        let quotient = eta.contract(&chosen)?;
        if !quotient.is_1pi() {
            return Err(Error::AxiomViolation {
                axiom: "quotient is 1PI".into(),
                witness: format!("{eta} / {chosen:?} = {quotient}"),
            });
        }
        let mut sub: Vec<LabelledGraph> = chosen.iter().map(|w| eta.induced(w).unnumbered_canonical()).collect();
        sub.sort();
        out.add_term((Word::gen(quotient.unnumbered_canonical()), Word(sub)), one());
    }
    Ok(out)
}

impl ConnectedBialgebra for CkGraphs {
    type Gen = LabelledGraph;

    fn commutative(&self) -> bool {
        true
    }

    fn degree(&self, g: &LabelledGraph) -> usize {
        g.vertex_count() - 1
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn generators(&self, max_degree: usize) -> Vec<LabelledGraph> {
        (2..=max_degree.min(self.max_degree) + 1).flat_map(one_pi_classes).collect()
    }

    fn coproduct_gen(&self, g: &LabelledGraph) -> Result<Tensor2<LabelledGraph>> {
        let deg = self.degree(g);
        if deg > self.max_degree {
            return Err(Error::DegreeOverflow { degree: deg, cap: self.max_degree });
        }
        graph_hopf_coproduct(g)
    }

    fn show_gen(&self, g: &LabelledGraph) -> String {
        g.to_string()
    }

    fn parse_gen(&self, text: &str) -> Result<LabelledGraph> {
        let g: LabelledGraph = text.parse()?;
        if !g.is_1pi() || g.vertex_count() < 2 {
            return Err(parse_err(format!("`{text}` is not a 1PI graph on at least two vertices")));
        }
        Ok(g.unnumbered_canonical())
    }
}

/// The insertion bracket of unnumbered 1PI graphs: the `Γ_PI` bracket on
/// representatives, read in coinvariants.
pub fn graph_lie_bracket(a: &LabelledGraph, b: &LabelledGraph) -> Result<LinComb<LabelledGraph>> {
    let op = GraphOperad::one_pi();
    let x = LinComb::basis(GraphKey::Graph(a.clone()));
    let y = LinComb::basis(GraphKey::Graph(b.clone()));
    let bracket = to_coinvariants(&op, &lie_bracket(&op, &x, &y)?)?;
    Ok(bracket.map_keys(|k| k.graph().expect("arity at least three").clone()))
}

/// Bracket of the primitive elements `Z_a`, `Z_b` dual to the generators:
/// the coefficient of `η̄` is the coefficient of `a ⊗ b` minus that of
/// `b ⊗ a` in `Δ(η̄)`.
pub fn dual_bracket(alg: &CkGraphs, a: &LabelledGraph, b: &LabelledGraph) -> Result<LinComb<LabelledGraph>> {
    let n = a.vertex_count() + b.vertex_count() - 1;
    let ab = (Word::gen(a.clone()), Word::gen(b.clone()));
    let ba = (Word::gen(b.clone()), Word::gen(a.clone()));
    let mut out = LinComb::zero();
    for eta in one_pi_classes(n) {
        let delta = alg.coproduct_gen(&eta)?;
        let c: Scalar = delta.coeff(&ab) - delta.coeff(&ba);
        out.add_term(eta, c);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct IsoReport {
    pub pairs_checked: usize,
    /// Pairs where `Θ[a, b] ≠ [Θ a, Θ b]` for `Θ(η̄) = S(η̄)·Z_η̄`.
    pub failures: Vec<(LabelledGraph, LabelledGraph)>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check that `Θ: η̄ ↦ S(η̄)·Z_η̄` carries the insertion bracket of `Γ_PI`
/// coinvariants onto the bracket of primitives dual to the graph coproduct,
/// for all 1PI classes with at most `max_vertices` vertices.
pub fn ck_iso_check(max_vertices: usize) -> Result<IsoReport> {
    let classes: Vec<LabelledGraph> = (2..=max_vertices).flat_map(one_pi_classes).collect();
    let alg = CkGraphs::new(2 * max_vertices.max(2) - 2);
    let mut pairs = Vec::new();
    for a in &classes {
        for b in &classes {
            pairs.push((a.clone(), b.clone()));
        }
    }
    let theta = |x: &LinComb<LabelledGraph>| x.flat_map(|g| LinComb::term(g.clone(), symmetry_factor(g)));
    let outcomes = par::map(&pairs, |(a, b)| -> Result<bool> {
        let lhs = theta(&graph_lie_bracket(a, b)?);
        let rhs = dual_bracket(&alg, a, b)?.scale(&(symmetry_factor(a) * symmetry_factor(b)));
        Ok(lhs == rhs)
    });
    let mut report = IsoReport { pairs_checked: pairs.len(), failures: vec![] };
    for (pair, ok) in pairs.into_iter().zip(outcomes) {
        if !ok? {
            report.failures.push(pair);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify;

    fn g(s: &str) -> LabelledGraph {
        s.parse::<LabelledGraph>().unwrap().unnumbered_canonical()
    }

    #[test]
    fn class_counts() {
        assert_eq!(one_pi_classes(2).len(), 1);
        assert!(one_pi_classes(3).len() >= 2);
    }

    #[test]
    fn primitive_graph() {
        let eta = g("n=2; e={1-2,1-2}; legs=[1,2]");
        let d = graph_hopf_coproduct(&eta).unwrap();
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn one_subgraph_gives_three_terms() {
        // a bubble on one line of a bubble: vertices 1,2 form a 1PI piece
        // with two legs; the triangle-free 4-vertex chain of bubbles
        let eta = g("n=4; e={1-2,1-2,1-3,2-4,3-4,3-4}; legs=[]");
        // not 1PI (no legs), use a version with legs instead
        assert!(!eta.is_1pi());
        let eta = g("n=3; e={1-2,1-2,1-3,2-3}; legs=[3]");
        assert!(!eta.is_1pi());
        let eta = g("n=4; e={1-2,1-2,1-3,2-3,3-4,3-4}; legs=[4]");
        assert!(!eta.is_1pi());
        let eta = g("n=4; e={1-2,1-2,1-3,2-4,3-4}; legs=[3,4]");
        assert!(eta.is_1pi());
        let d = graph_hopf_coproduct(&eta).unwrap();
        assert_eq!(d.len(), 3);
        let sub = g("n=2; e={1-2,1-2}; legs=[1,2]");
        let quotient = g("n=3; e={1-2,1-3,2-3}; legs=[2,3]");
        assert_eq!(d.coeff(&(Word::gen(quotient), Word::gen(sub))), one());
    }

    #[test]
    fn axioms() {
        assert!(verify(&CkGraphs::new(3), 3).passed());
    }

    #[test]
    fn iso_small() {
        let r = ck_iso_check(3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn bracket_antisymmetric() {
        for a in one_pi_classes(3) {
            assert!(graph_lie_bracket(&a, &a).unwrap().is_zero());
        }
    }
}
