use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use crate::combinat::{HalfEdge, LabelledGraph};
use crate::error::{parse_err, Result};
use crate::lincomb::{Basis, LinComb};
use crate::operad::Operad;
use crate::perm;
use crate::scalar::int;

/// Basis key of the graph operads: the unit of arity one, or a numbered
/// graph on at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphKey {
    Identity,
    Graph(LabelledGraph),
}

impl GraphKey {
    pub fn graph(&self) -> Option<&LabelledGraph> {
        match self {
            GraphKey::Identity => None,
            GraphKey::Graph(g) => Some(g),
        }
    }
}

impl fmt::Display for GraphKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKey::Identity => write!(f, "id"),
            GraphKey::Graph(g) => write!(f, "{g}"),
        }
    }
}

impl Basis for GraphKey {
    fn kind(&self) -> &'static str {
        "graph"
    }
    fn encode(&self) -> String {
        self.to_string()
    }
}

/// How `∘_k` counts the bijections between the half-edges at `k` and the
/// legs of the inserted graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphVariant {
    /// One term per distinct numbered result (`Γ`).
    Classes,
    /// One term per bijection (`Γ̃`).
    AllBijections,
}

/// Insert `zeta` at vertex `k` of `eta` along every bijection from the
/// half-edges at `k` onto the leg slots of `zeta`, grouping equal numbered
/// results. Returns each result with the number of bijections producing
/// it, sorted by graph. Empty when the counts do not match.
pub fn bijection_classes(eta: &LabelledGraph, k: usize, zeta: &LabelledGraph) -> Vec<(LabelledGraph, usize)> {
    let half = eta.half_edges(k);
    let slots = zeta.legs();
    if half.len() != slots.len() {
        return vec![];
    }
    let n = eta.vertex_count();
    let m = zeta.vertex_count();
    let outer = |v: usize| if v < k { v } else { v + m - 1 };
    let mut base_edges: Vec<(usize, usize)> = eta
        .edges()
        .iter()
        .filter(|&&(a, b)| a != k && b != k)
        .map(|&(a, b)| (outer(a), outer(b)))
        .collect();
    base_edges.extend(zeta.edges().iter().map(|&(a, b)| (a + k, b + k)));
    let base_legs: Vec<usize> = eta.legs().iter().filter(|&&v| v != k).map(|&v| outer(v)).collect();

    let mut classes: BTreeMap<LabelledGraph, usize> = BTreeMap::new();
    for b in perm::all(half.len()) {
        let mut edges = base_edges.clone();
        let mut legs = base_legs.clone();
        for (j, h) in half.iter().enumerate() {
            let target = slots[b[j]] + k;
            match h {
                HalfEdge::To(u) => edges.push((outer(*u), target)),
                HalfEdge::External => legs.push(target),
            }
        }
        let g = LabelledGraph::new(n + m - 1, edges, legs).expect("insertion creates no self-loops");
        *classes.entry(g).or_insert(0) += 1;
    }
    classes.into_iter().collect()
}

/// `η ∘_k ζ` in `Γ` or `Γ̃` (zero-based `k`).
pub fn graph_circ(variant: GraphVariant, eta: &LabelledGraph, k: usize, zeta: &LabelledGraph) -> LinComb<LabelledGraph> {
    bijection_classes(eta, k, zeta)
        .into_iter()
        .map(|(g, size)| match variant {
            GraphVariant::Classes => (g, int(1)),
            GraphVariant::AllBijections => (g, int(size as i64)),
        })
        .collect()
}

/// The operads `Γ`, `Γ̃` and `Γ_PI`. Arity spaces are infinite, so bases are
/// enumerated up to a valence cap, which composition never exceeds.
pub struct GraphOperad {
    variant: GraphVariant,
    one_pi_only: bool,
    max_valence: usize,
    bases: RwLock<BTreeMap<usize, Vec<GraphKey>>>,
}

impl GraphOperad {
    pub fn new(variant: GraphVariant, max_valence: usize) -> Self {
        Self { variant, one_pi_only: false, max_valence, bases: RwLock::new(BTreeMap::new()) }
    }

    /// The suboperad of `Γ` spanned by 1PI graphs.
    pub fn one_pi() -> Self {
        Self { variant: GraphVariant::Classes, one_pi_only: true, max_valence: 3, bases: RwLock::new(BTreeMap::new()) }
    }

    pub fn variant(&self) -> GraphVariant {
        self.variant
    }

    pub fn max_valence(&self) -> usize {
        self.max_valence
    }

    pub fn is_one_pi(&self) -> bool {
        self.one_pi_only
    }

    fn admits(&self, g: &LabelledGraph) -> bool {
        let n = g.vertex_count();
        n >= 2
            && (0..n).all(|v| (1..=self.max_valence).contains(&g.valence(v)))
            && (!self.one_pi_only || g.is_1pi())
    }
}

impl Operad for GraphOperad {
    type Key = GraphKey;

    fn name(&self) -> &str {
        match (self.one_pi_only, self.variant) {
            (true, _) => "gamma-1pi",
            (false, GraphVariant::Classes) => "gamma",
            (false, GraphVariant::AllBijections) => "gamma-tilde",
        }
    }

    fn arity(&self, key: &GraphKey) -> usize {
        key.graph().map_or(1, LabelledGraph::vertex_count)
    }

    fn identity(&self) -> GraphKey {
        GraphKey::Identity
    }

    fn basis(&self, n: usize) -> Vec<GraphKey> {
        match n {
            0 => return vec![],
            1 => return vec![GraphKey::Identity],
            _ => {}
        }
        if let Some(b) = self.bases.read().expect("basis cache").get(&n) {
            return b.clone();
        }
        let min_valence = if self.one_pi_only { 2 } else { 1 };
        let b: Vec<GraphKey> = LabelledGraph::enumerate(n, min_valence, self.max_valence)
            .into_iter()
            .filter(|g| self.admits(g))
            .map(GraphKey::Graph)
            .collect();
        self.bases.write().expect("basis cache").insert(n, b.clone());
        b
    }

    fn circ_basis(&self, p: &GraphKey, i: usize, q: &GraphKey) -> LinComb<GraphKey> {
        match (p, q) {
            (GraphKey::Graph(eta), GraphKey::Graph(zeta)) => {
                graph_circ(self.variant, eta, i, zeta).map_keys(|g| GraphKey::Graph(g.clone()))
            }
            _ => unreachable!("identity handled by the generic composition"),
        }
    }

    fn act_basis(&self, p: &GraphKey, sigma: &[usize]) -> LinComb<GraphKey> {
        match p {
            GraphKey::Identity => LinComb::basis(GraphKey::Identity),
            GraphKey::Graph(g) => LinComb::basis(GraphKey::Graph(g.relabel(sigma))),
        }
    }

    fn orbit_rep(&self, p: &GraphKey) -> Option<GraphKey> {
        Some(match p {
            GraphKey::Identity => GraphKey::Identity,
            GraphKey::Graph(g) => GraphKey::Graph(g.unnumbered_canonical()),
        })
    }

    fn parse_key(&self, text: &str) -> Result<GraphKey> {
        let t = text.trim();
        if t == "id" {
            return Ok(GraphKey::Identity);
        }
        let g: LabelledGraph = t.parse()?;
        if !self.admits(&g) {
            return Err(parse_err(format!("`{t}` is not a basis graph of {}", self.name())));
        }
        Ok(GraphKey::Graph(g))
    }
}
