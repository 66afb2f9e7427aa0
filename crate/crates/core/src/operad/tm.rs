use std::fmt;

use crate::combinat::RootedTree;
use crate::error::{parse_err, Result};
use crate::lincomb::{Basis, LinComb};
use crate::operad::Operad;

/// Basis tree of the free operad `TM`: a rooted tree whose non-root
/// external legs carry the labels `0..n`, every vertex having at least
/// three incident edges counting the root side. The bare leg (identity)
/// is stored as a single vertex with one leg, which never occurs in a
/// basis tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TmTree {
    legs: Vec<usize>,
    children: Vec<TmTree>,
}

impl TmTree {
    pub fn new(mut legs: Vec<usize>, mut children: Vec<TmTree>) -> Self {
        legs.sort_unstable();
        children.sort();
        Self { legs, children }
    }

    pub fn identity() -> Self {
        Self { legs: vec![0], children: vec![] }
    }

    /// Corolla with legs `0..n`.
    pub fn corolla(n: usize) -> Self {
        Self::new((0..n).collect(), vec![])
    }

    pub fn is_identity(&self) -> bool {
        self.children.is_empty() && self.legs.len() == 1
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn children(&self) -> &[TmTree] {
        &self.children
    }

    pub fn arity(&self) -> usize {
        self.legs.len() + self.children.iter().map(TmTree::arity).sum::<usize>()
    }

    pub fn vertex_count(&self) -> usize {
        if self.is_identity() {
            0
        } else {
            1 + self.children.iter().map(TmTree::vertex_count).sum::<usize>()
        }
    }

    fn is_reduced(&self) -> bool {
        self.legs.len() + self.children.len() >= 2 && self.children.iter().all(TmTree::is_reduced)
    }

    /// The underlying tree with leg counts, labels forgotten.
    pub fn shape(&self) -> RootedTree {
        RootedTree::new(self.legs.len(), self.children.iter().map(TmTree::shape).collect())
    }

    fn map_labels(&self, f: &impl Fn(usize) -> usize) -> Self {
        Self::new(
            self.legs.iter().map(|&l| f(l)).collect(),
            self.children.iter().map(|c| c.map_labels(f)).collect(),
        )
    }

    fn graft_at_leg(&self, i: usize, s: &TmTree) -> Option<Self> {
        if let Some(pos) = self.legs.iter().position(|&l| l == i) {
            let mut legs = self.legs.clone();
            legs.remove(pos);
            let mut children = self.children.clone();
            children.push(s.clone());
            return Some(Self::new(legs, children));
        }
        self.children.iter().enumerate().find_map(|(ci, c)| {
            c.graft_at_leg(i, s).map(|grafted| {
                let mut children = self.children.clone();
                children[ci] = grafted;
                Self::new(self.legs.clone(), children)
            })
        })
    }

    /// All basis trees with leaf labels exactly `labels`.
    fn enumerate_on(labels: &[usize]) -> Vec<TmTree> {
        let mut out = Vec::new();
        let n = labels.len();
        for mask in 0u32..(1 << n) {
            let direct: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 1).map(|b| labels[b]).collect();
            let rest: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 0).map(|b| labels[b]).collect();
            for blocks in partitions_min2(&rest) {
                if direct.len() + blocks.len() < 2 {
                    continue;
                }
                let mut acc: Vec<Vec<TmTree>> = vec![vec![]];
                for block in &blocks {
                    let options = Self::enumerate_on(block);
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            options.iter().map(move |o| {
                                let mut next = prefix.clone();
                                next.push(o.clone());
                                next
                            })
                        })
                        .collect();
                }
                out.extend(acc.into_iter().map(|children| TmTree::new(direct.clone(), children)));
            }
        }
        out
    }

    pub fn enumerate(n: usize) -> Vec<TmTree> {
        if n < 2 {
            return vec![];
        }
        let mut out = Self::enumerate_on(&(0..n).collect::<Vec<_>>());
        out.sort();
        out
    }

    fn label_preorder(shape: &RootedTree, next: &mut usize) -> TmTree {
        let legs: Vec<usize> = (*next..*next + shape.legs()).collect();
        *next += shape.legs();
        let children = shape.children().iter().map(|c| Self::label_preorder(c, next)).collect();
        TmTree::new(legs, children)
    }
}

/// Set partitions of `items` into blocks of size at least two.
fn partitions_min2(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else { return vec![vec![]] };
    let mut out = Vec::new();
    let m = rest.len();
    for mask in 1u32..(1 << m) {
        let block: Vec<usize> =
            std::iter::once(first).chain((0..m).filter(|&b| mask >> b & 1 == 1).map(|b| rest[b])).collect();
        let remaining: Vec<usize> = (0..m).filter(|&b| mask >> b & 1 == 0).map(|b| rest[b]).collect();
        for mut tail in partitions_min2(&remaining) {
            tail.insert(0, block.clone());
            out.push(tail);
        }
    }
    out
}

impl fmt::Display for TmTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let labels: Vec<String> = self.legs.iter().map(|l| (l + 1).to_string()).collect();
        write!(f, "(l:{}", labels.join(","))?;
        for c in &self.children {
            write!(f, " {c}")?;
        }
        write!(f, ")")
    }
}

impl Basis for TmTree {
    fn kind(&self) -> &'static str {
        "tm"
    }
    fn encode(&self) -> String {
        self.to_string()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            Err(parse_err(format!("expected `{lit}` at byte {}", self.pos)))
        }
    }

    fn tree(&mut self) -> Result<TmTree> {
        self.expect("(l:")?;
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b',') {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        let legs = text
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| match p.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(parse_err(format!("bad leg label `{p}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut children = Vec::new();
        loop {
            self.skip_ws();
            match self.s.get(self.pos) {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b'(') => children.push(self.tree()?),
                _ => return Err(parse_err(format!("unexpected input at byte {}", self.pos))),
            }
        }
        Ok(TmTree::new(legs, children))
    }
}

impl std::str::FromStr for TmTree {
    type Err = crate::Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.trim() == "id" {
            return Ok(TmTree::identity());
        }
        let mut p = Parser { s: text.as_bytes(), pos: 0 };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(parse_err("trailing input after tree"));
        }
        let mut labels = Vec::new();
        collect_labels(&t, &mut labels);
        labels.sort_unstable();
        if labels != (0..labels.len()).collect::<Vec<_>>() {
            return Err(parse_err("leg labels must be exactly 1..=n"));
        }
        if !t.is_reduced() {
            return Err(parse_err("every vertex needs at least three edges"));
        }
        Ok(t)
    }
}

fn collect_labels(t: &TmTree, out: &mut Vec<usize>) {
    out.extend_from_slice(&t.legs);
    for c in &t.children {
        collect_labels(c, out);
    }
}

/// The free operad on one generator in each arity `n >= 2`: planar-free
/// rooted trees with labelled leaves, composed by grafting a root onto a leg.
#[derive(Clone, Copy, Debug, Default)]
pub struct TmOperad;

impl Operad for TmOperad {
    type Key = TmTree;

    fn name(&self) -> &str {
        "tm"
    }

    fn arity(&self, key: &TmTree) -> usize {
        key.arity()
    }

    fn identity(&self) -> TmTree {
        TmTree::identity()
    }

    fn basis(&self, n: usize) -> Vec<TmTree> {
        if n == 1 {
            vec![TmTree::identity()]
        } else {
            TmTree::enumerate(n)
        }
    }

    fn circ_basis(&self, t: &TmTree, i: usize, s: &TmTree) -> LinComb<TmTree> {
        let m = s.arity();
        let shifted_t = t.map_labels(&|l| if l > i { l + m - 1 } else { l });
        let shifted_s = s.map_labels(&|l| l + i);
        LinComb::basis(shifted_t.graft_at_leg(i, &shifted_s).expect("leg label present"))
    }

    fn act_basis(&self, t: &TmTree, sigma: &[usize]) -> LinComb<TmTree> {
        LinComb::basis(t.map_labels(&|l| sigma[l]))
    }

    fn orbit_rep(&self, t: &TmTree) -> Option<TmTree> {
        if t.is_identity() {
            return Some(t.clone());
        }
        Some(TmTree::label_preorder(&t.shape(), &mut 0))
    }

    fn parse_key(&self, text: &str) -> Result<TmTree> {
        text.parse()
    }
}
