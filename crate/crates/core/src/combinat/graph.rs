use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::lincomb::Basis;
use crate::perm;
use crate::scalar::{self, Scalar};

/// Multigraph with numbered vertices `0..n` (printed `1..=n`), undirected
/// edges between distinct vertices and external legs, each attached to one
/// vertex. Self-loops are rejected; parallel edges are allowed.
///
/// The stored edge and leg lists are always sorted, which is exactly the
/// canonical form up to isomorphisms that fix the vertex numbering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    legs: Vec<usize>,
}

/// A half-edge at a vertex: either the end of an edge to another vertex or
/// an external leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfEdge {
    To(usize),
    External,
}

impl LabelledGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, legs: Vec<usize>) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(parse_err(format!("self-loop at vertex {}", a + 1)));
            }
            if a >= n || b >= n {
                return Err(parse_err(format!("edge {}-{} outside 1..={n}", a + 1, b + 1)));
            }
            norm.push((a.min(b), a.max(b)));
        }
        if let Some(&v) = legs.iter().find(|&&v| v >= n) {
            return Err(parse_err(format!("leg on missing vertex {}", v + 1)));
        }
        // sorting realises the lexicographic minimum over leg-slot and
        // parallel-edge reorderings
        norm.sort_unstable();
        let mut legs = legs;
        legs.sort_unstable();
        Ok(Self { n, edges: norm, legs })
    }

    /// Graph with one vertex and `legs` external legs.
    pub fn corolla(legs: usize) -> Self {
        Self { n: 1, edges: vec![], legs: vec![0; legs] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Leg slots, each given by the vertex it is attached to.
    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn legs_at(&self, v: usize) -> usize {
        self.legs.iter().filter(|&&w| w == v).count()
    }

    pub fn edge_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// `|l_η(v)|`: edge ends plus external legs at `v`.
    pub fn valence(&self, v: usize) -> usize {
        self.edge_degree(v) + self.legs_at(v)
    }

    /// Half-edges at `v`: edge ends first (in edge order), then legs.
    pub fn half_edges(&self, v: usize) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(HalfEdge::To(b));
            } else if b == v {
                out.push(HalfEdge::To(a));
            }
        }
        out.extend(std::iter::repeat_n(HalfEdge::External, self.legs_at(v)));
        out
    }

    /// Renumber: vertex `v` becomes `p[v]`.
    pub fn relabel(&self, p: &[usize]) -> Self {
        let edges = self.edges.iter().map(|&(a, b)| (p[a], p[b])).collect();
        let legs = self.legs.iter().map(|&v| p[v]).collect();
        Self::new(self.n, edges, legs).expect("relabelling preserves validity")
    }

    /// `|Aut(η)|`: automorphisms fixing every vertex, counted by enumerating
    /// the permutations of edges and of legs that preserve endpoints.
    pub fn numbered_aut_count(&self) -> u64 {
        count_structure_preserving(&self.edges) * count_structure_preserving(&self.legs)
    }

    /// Vertex permutations `p` with `relabel(p) == self`.
    pub fn vertex_symmetries(&self) -> Vec<perm::Perm> {
        perm::all(self.n).into_iter().filter(|p| &self.relabel(p) == self).collect()
    }

    /// Representative of the isomorphism class with the numbering forgotten:
    /// the minimum over all renumberings.
    pub fn unnumbered_canonical(&self) -> Self {
        perm::all(self.n)
            .into_iter()
            .map(|p| self.relabel(&p))
            .min()
            .expect("at least the identity permutation")
    }

    /// `|Aut(η̄)|`: automorphisms allowed to move vertices.
    pub fn unnumbered_aut_count(&self) -> u64 {
        self.vertex_symmetries().len() as u64 * self.numbered_aut_count()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_without(None)
    }

    fn connected_without(&self, skip: Option<usize>) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut components = self.n;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        components == 1
    }

    /// Connected and still connected after deleting any single edge.
    pub fn is_bridgeless(&self) -> bool {
        self.is_connected() && (0..self.edges.len()).all(|i| self.connected_without(Some(i)))
    }

    /// One-particle irreducible: connected, bridgeless, at least two legs and
    /// every vertex of valence 2 or 3.
    pub fn is_1pi(&self) -> bool {
        self.n >= 1
            && self.leg_count() >= 2
            && (0..self.n).all(|v| matches!(self.valence(v), 2 | 3))
            && self.is_bridgeless()
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = vec![];
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &(a, b) in &self.edges {
                    let w = if a == v { b } else if b == v { a } else { continue };
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subgraph induced on the vertex set `w` (sorted), renumbered in the
    /// order of `w`. Every half-edge at a vertex of `w` survives: edges
    /// leaving `w` become legs.
    pub fn induced(&self, w: &[usize]) -> Self {
        let index = |v: usize| w.iter().position(|&x| x == v);
        let mut edges = Vec::new();
        let mut legs: Vec<usize> = self.legs.iter().filter_map(|&v| index(v)).collect();
        for &(a, b) in &self.edges {
            match (index(a), index(b)) {
                (Some(i), Some(j)) => edges.push((i, j)),
                (Some(i), None) => legs.push(i),
                (None, Some(j)) => legs.push(j),
                (None, None) => {}
            }
        }
        Self::new(w.len(), edges, legs).expect("induced subgraph is valid")
    }

    /// Collapse each block of disjoint vertex sets to a single vertex.
    /// Fails when an edge outside the blocks' induced subgraphs joins two
    /// vertices of the same block, which would become a self-loop.
    pub fn contract(&self, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut target = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut block_of = vec![None; self.n];
        for (bi, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = Some(bi);
            }
        }
        let mut block_vertex = vec![usize::MAX; blocks.len()];
        for v in 0..self.n {
            match block_of[v] {
                Some(bi) => {
                    if block_vertex[bi] == usize::MAX {
                        block_vertex[bi] = next;
                        next += 1;
                    }
                    target[v] = block_vertex[bi];
                }
                None => {
                    target[v] = next;
                    next += 1;
                }
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| block_of[a].is_none() || block_of[a] != block_of[b])
            .map(|&(a, b)| (target[a], target[b]))
            .collect();
        let legs = self.legs.iter().map(|&v| target[v]).collect();
        Self::new(next, edges, legs)
    }

    /// All graphs on `n` vertices whose valences lie in `min_valence..=max_valence`,
    /// in canonical numbered form, sorted.
    pub fn enumerate(n: usize, min_valence: usize, max_valence: usize) -> Vec<Self> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut out = Vec::new();
        let mut mult = vec![0usize; pairs.len()];
        loop {
            let mut degree = vec![0usize; n];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                degree[a] += mult[i];
                degree[b] += mult[i];
            }
            if degree.iter().all(|&d| d <= max_valence) {
                let ranges: Vec<(usize, usize)> =
                    degree.iter().map(|&d| (min_valence.saturating_sub(d), max_valence - d)).collect();
                let mut legs = ranges.iter().map(|r| r.0).collect::<Vec<_>>();
                loop {
                    let edges = pairs
                        .iter()
                        .zip(&mult)
                        .flat_map(|(&e, &m)| std::iter::repeat_n(e, m))
                        .collect();
                    let leg_slots = legs.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(v, k)).collect();
                    out.push(Self::new(n, edges, leg_slots).expect("valid by construction"));
                    if !odometer(&mut legs, &ranges) {
                        break;
                    }
                }
            }
            let caps: Vec<(usize, usize)> = vec![(0, max_valence); pairs.len()];
            if !odometer(&mut mult, &caps) {
                break;
            }
        }
        out.sort();
        out
    }
}

fn odometer(digits: &mut [usize], ranges: &[(usize, usize)]) -> bool {
    for (d, &(lo, hi)) in digits.iter_mut().zip(ranges) {
        if *d < hi {
            *d += 1;
            return true;
        }
        *d = lo;
    }
    false
}

/// Number of permutations `π` of `items` with `items[π(i)] == items[i]` for
/// every `i`, found by exhaustive backtracking.
fn count_structure_preserving<T: PartialEq>(items: &[T]) -> u64 {
    fn go<T: PartialEq>(items: &[T], i: usize, used: &mut [bool]) -> u64 {
        if i == items.len() {
            return 1;
        }
        let mut total = 0;
        for j in 0..items.len() {
            if !used[j] && items[j] == items[i] {
                used[j] = true;
                total += go(items, i + 1, used);
                used[j] = false;
            }
        }
        total
    }
    go(items, 0, &mut vec![false; items.len()])
}

/// Canonical numbered form together with `|Aut(η)|`.
pub fn canonical_graph(g: &LabelledGraph) -> (LabelledGraph, u64) {
    (g.clone(), g.numbered_aut_count())
}

/// Isomorphism test allowing renumbering of vertices; on success also
/// returns `|Aut(η̄)|`.
pub fn unnumbered_iso(g: &LabelledGraph, h: &LabelledGraph) -> (bool, Option<u64>) {
    if g.n != h.n || g.edges.len() != h.edges.len() || g.legs.len() != h.legs.len() {
        return (false, None);
    }
    let iso = perm::all(g.n).into_iter().any(|p| &g.relabel(&p) == h);
    if iso {
        (true, Some(g.unnumbered_aut_count()))
    } else {
        (false, None)
    }
}

/// `S(η̄) = |Aut(η̄)| / |Aut(η)|`.
pub fn symmetry_factor(g: &LabelledGraph) -> Scalar {
    scalar::frac(g.unnumbered_aut_count() as i64, g.numbered_aut_count() as i64)
}

impl fmt::Display for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; e={{", self.n)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        f.write_str("}; legs=[")?;
        for (i, v) in self.legs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl Basis for LabelledGraph {
    fn kind(&self) -> &'static str {
        "graph"
    }
    fn encode(&self) -> String {
        self.to_string()
    }
}

impl FromStr for LabelledGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut legs = Vec::new();
        for field in s.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (name, value) =
                field.split_once('=').ok_or_else(|| parse_err(format!("expected `name=value`, got `{field}`")))?;
            let value = value.trim();
            let vertex = |t: &str| -> Result<usize> {
                let v: usize = t.trim().parse().map_err(|_| parse_err(format!("bad vertex `{t}`")))?;
                v.checked_sub(1).ok_or_else(|| parse_err("vertices are numbered from 1"))
            };
            match name.trim() {
                "n" => n = Some(value.parse::<usize>().map_err(|_| parse_err(format!("bad vertex count `{value}`")))?),
                "e" => {
                    let inner = value
                        .strip_prefix('{')
                        .and_then(|v| v.strip_suffix('}'))
                        .ok_or_else(|| parse_err("edges must be written `{a-b,...}`"))?;
                    for item in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                        let (a, b) = item.split_once('-').ok_or_else(|| parse_err(format!("bad edge `{item}`")))?;
                        edges.push((vertex(a)?, vertex(b)?));
                    }
                }
                "legs" => {
                    let inner = value
                        .strip_prefix('[')
                        .and_then(|v| v.strip_suffix(']'))
                        .ok_or_else(|| parse_err("legs must be written `[v,...]`"))?;
                    for item in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                        legs.push(vertex(item)?);
                    }
                }
                other => return Err(parse_err(format!("unknown graph field `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| parse_err("missing `n=`"))?;
        Self::new(n, edges, legs)
    }
}
