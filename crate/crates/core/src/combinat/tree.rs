use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::lincomb::Basis;

/// Non-planar rooted tree. Each node carries the number of extra external
/// legs attached to it (the root leg is implicit) and its child subtrees,
/// kept sorted so that equal trees have equal representations.
///
/// Vertices are addressed by their index in pre-order of the canonical form,
/// the root being vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootedTree {
    legs: usize,
    children: Vec<RootedTree>,
}

impl RootedTree {
    pub fn new(legs: usize, mut children: Vec<RootedTree>) -> Self {
        children.sort();
        Self { legs, children }
    }

    /// The single vertex `•`.
    pub fn point() -> Self {
        Self::new(0, vec![])
    }

    /// Linear tree ("ladder") with `n >= 1` vertices.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        let mut t = Self::point();
        for _ in 1..n {
            t = Self::new(0, vec![t]);
        }
        t
    }

    /// Root with `k` leaf children.
    pub fn corolla(k: usize) -> Self {
        Self::new(0, vec![Self::point(); k])
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(RootedTree::vertex_count).sum::<usize>()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - 1
    }

    pub fn total_legs(&self) -> usize {
        self.legs + self.children.iter().map(RootedTree::total_legs).sum::<usize>()
    }

    /// `true` when no node carries extra legs (a tree of the CK algebra).
    pub fn is_bare(&self) -> bool {
        self.legs == 0 && self.children.iter().all(RootedTree::is_bare)
    }

    /// Legs-per-vertex in pre-order.
    pub fn legs_by_vertex(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_legs(&mut out);
        out
    }

    fn collect_legs(&self, out: &mut Vec<usize>) {
        out.push(self.legs);
        for c in &self.children {
            c.collect_legs(out);
        }
    }

    /// Same shape with every extra leg removed.
    pub fn strip_legs(&self) -> RootedTree {
        RootedTree::new(0, self.children.iter().map(RootedTree::strip_legs).collect())
    }

    pub fn with_legs_at(&self, vertex: usize, legs: usize) -> Result<RootedTree> {
        let count = self.vertex_count();
        if vertex >= count {
            return Err(Error::InvalidVertex { vertex, count });
        }
        Ok(self.map_vertex(vertex, &mut |node| node.legs = legs))
    }

    fn map_vertex(&self, vertex: usize, f: &mut dyn FnMut(&mut RootedTree)) -> RootedTree {
        fn go(t: &RootedTree, target: usize, next: &mut usize, f: &mut dyn FnMut(&mut RootedTree)) -> RootedTree {
            let here = *next;
            *next += 1;
            let children = t.children.iter().map(|c| go(c, target, next, f)).collect();
            let mut node = RootedTree { legs: t.legs, children };
            if here == target {
                f(&mut node);
            }
            node.children.sort();
            node
        }
        go(self, vertex, &mut 0, f)
    }

    /// All bare rooted trees with `n` vertices, sorted.
    pub fn enumerate(n: usize) -> Vec<RootedTree> {
        if n == 0 {
            return vec![];
        }
        let mut level: BTreeSet<RootedTree> = [RootedTree::point()].into_iter().collect();
        for _ in 1..n {
            let mut next = BTreeSet::new();
            for t in &level {
                for v in 0..t.vertex_count() {
                    next.insert(graft(t, v, &RootedTree::point()).expect("vertex in range"));
                }
            }
            level = next;
        }
        level.into_iter().collect()
    }
}

/// `t ∘_v s`: attach the root of `s` to vertex `v` of `t` by a new edge.
pub fn graft(t: &RootedTree, v: usize, s: &RootedTree) -> Result<RootedTree> {
    let count = t.vertex_count();
    if v >= count {
        return Err(Error::InvalidVertex { vertex: v, count });
    }
    Ok(t.map_vertex(v, &mut |node| node.children.push(s.clone())))
}

/// One admissible cut: the cut edges (named by their lower vertex, in
/// pre-order of the input tree), the trunk containing the root, and the
/// pruned subtrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleCut {
    pub edges: Vec<usize>,
    pub trunk: RootedTree,
    pub pruned: Vec<RootedTree>,
}

/// All admissible cuts of `t`, including the empty cut.
///
/// Built recursively: at every child edge either the edge is cut (the child's
/// whole subtree falls off) or it is kept and the child is cut admissibly in
/// turn. No root path can then meet two cut edges.
pub fn admissible_cuts(t: &RootedTree) -> Vec<AdmissibleCut> {
    fn go(t: &RootedTree, offset: usize) -> Vec<AdmissibleCut> {
        let mut partial = vec![AdmissibleCut { edges: vec![], trunk: RootedTree::new(t.legs, vec![]), pruned: vec![] }];
        let mut child_offset = offset + 1;
        for child in &t.children {
            // (cut edges, surviving part of the child, pruned subtrees)
            let mut options: Vec<(Vec<usize>, Option<RootedTree>, Vec<RootedTree>)> =
                vec![(vec![child_offset], None, vec![child.clone()])];
            options.extend(go(child, child_offset).into_iter().map(|c| (c.edges, Some(c.trunk), c.pruned)));
            let mut next = Vec::with_capacity(partial.len() * options.len());
            for p in &partial {
                for (edges, kept, pruned) in &options {
                    let mut cut = p.clone();
                    cut.edges.extend(edges.iter().copied());
                    cut.pruned.extend(pruned.iter().cloned());
                    if let Some(k) = kept {
                        cut.trunk.children.push(k.clone());
                    }
                    next.push(cut);
                }
            }
            partial = next;
            child_offset += child.vertex_count();
        }
        for c in &mut partial {
            c.trunk.children.sort();
            c.edges.sort();
            c.pruned.sort();
        }
        partial
    }
    let mut cuts = go(t, 0);
    cuts.sort_by(|a, b| a.edges.cmp(&b.edges));
    cuts
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(l:{}", self.legs)?;
        for c in &self.children {
            write!(f, " {c}")?;
        }
        f.write_str(")")
    }
}

impl Basis for RootedTree {
    fn kind(&self) -> &'static str {
        "tree"
    }
    fn encode(&self) -> String {
        self.to_string()
    }
}

impl FromStr for RootedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let t = parse_node(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(parse_err(format!("trailing input in tree `{s}`")));
        }
        Ok(t)
    }
}

fn skip_ws(b: &[u8], pos: &mut usize) {
    while *pos < b.len() && b[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_node(b: &[u8], pos: &mut usize) -> Result<RootedTree> {
    skip_ws(b, pos);
    if b.get(*pos) != Some(&b'(') {
        return Err(parse_err(format!("expected `(` at byte {pos}")));
    }
    *pos += 1;
    skip_ws(b, pos);
    let mut legs = 0;
    if b[*pos..].starts_with(b"l:") {
        *pos += 2;
        let start = *pos;
        while *pos < b.len() && b[*pos].is_ascii_digit() {
            *pos += 1;
        }
        legs = std::str::from_utf8(&b[start..*pos])
            .unwrap()
            .parse()
            .map_err(|_| parse_err(format!("bad leg count at byte {start}")))?;
    }
    let mut children = Vec::new();
    loop {
        skip_ws(b, pos);
        match b.get(*pos) {
            Some(b')') => {
                *pos += 1;
                return Ok(RootedTree::new(legs, children));
            }
            Some(b'(') => children.push(parse_node(b, pos)?),
            _ => return Err(parse_err(format!("unexpected input at byte {pos}"))),
        }
    }
}
