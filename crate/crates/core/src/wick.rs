//! Wick contraction on the symmetric coalgebra of a quadratic space and the
//! resulting `Γ`-algebra structure.
//!
//! A monomial of `S'^k V` is stored as a sorted multiset of basis indices.
//! It stands for the symmetric tensor obtained by summing all `k!`
//! orderings of its letters, so contracting "one tensor factor" is the sum
//! over letter positions, and symmetrising the surviving factors of vertex
//! `i` contributes `r_i!` where `r_i` is its number of external legs.

use std::fmt;
use std::str::FromStr;

use crate::combinat::LabelledGraph;
use crate::error::{parse_err, Error, Result};
use crate::lincomb::{Basis, LinComb};
use crate::operad::{graph_circ, GraphVariant};
use crate::scalar::{factorial, int, parse_scalar, Scalar};

/// Finite-dimensional space with a symmetric bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSpace {
    form: Vec<Vec<Scalar>>,
}

impl QuadraticSpace {
    pub fn new(form: Vec<Vec<Scalar>>) -> Result<Self> {
        let d = form.len();
        if form.iter().any(|row| row.len() != d) {
            return Err(parse_err("quadratic form must be a square matrix"));
        }
        for i in 0..d {
            for j in 0..i {
                if form[i][j] != form[j][i] {
                    return Err(parse_err(format!("form not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Self { form })
    }

    /// The standard form `b(e_i, e_j) = δ_ij`.
    pub fn identity(d: usize) -> Self {
        let form = (0..d).map(|i| (0..d).map(|j| int((i == j) as i64)).collect()).collect();
        Self { form }
    }

    pub fn dimension(&self) -> usize {
        self.form.len()
    }

    pub fn b(&self, i: usize, j: usize) -> &Scalar {
        &self.form[i][j]
    }

    /// Whitespace-separated rational rows; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            rows.push(line.split_whitespace().map(parse_scalar).collect::<Result<Vec<_>>>()?);
        }
        if rows.is_empty() {
            return Err(parse_err("empty quadratic form"));
        }
        Self::new(rows)
    }
}

/// Monomial in `S'V`: sorted multiset of zero-based basis indices, printed
/// one-based as `{1,1,2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymWord(Vec<usize>);

impl SymWord {
    pub fn new(mut letters: Vec<usize>) -> Self {
        letters.sort_unstable();
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(vec![])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All monomials of length `k` in `d` letters.
    pub fn all(d: usize, k: usize) -> Vec<SymWord> {
        fn go(d: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<SymWord>) {
            if cur.len() == k {
                out.push(SymWord(cur.clone()));
                return;
            }
            for a in from..d {
                cur.push(a);
                go(d, k, a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(d, k, 0, &mut Vec::new(), &mut out);
        out
    }

    fn without(&self, pos: usize) -> SymWord {
        let mut v = self.0.clone();
        v.remove(pos);
        SymWord(v)
    }
}

impl fmt::Display for SymWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| (a + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Basis for SymWord {
    fn kind(&self) -> &'static str {
        "sym"
    }
    fn encode(&self) -> String {
        self.to_string()
    }
}

impl FromStr for SymWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| parse_err(format!("expected `{{…}}`, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let letters = inner
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(a) if a >= 1 => Ok(a - 1),
                _ => Err(parse_err(format!("bad letter `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(letters))
    }
}

/// Parse a tuple of monomials written one after another, e.g. `{1,2} {1}`.
pub fn parse_args(text: &str) -> Result<Vec<SymWord>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let end = rest.find('}').ok_or_else(|| parse_err(format!("unterminated word in `{text}`")))?;
        out.push(rest[..=end].parse()?);
        rest = rest[end + 1..].trim_start_matches([' ', ',', '\t']);
    }
    Ok(out)
}

/// `b(e)` for the edge joining vertices `a` and `b`: the sum over one letter
/// from each endpoint, weighted by the form. Empty slots give zero.
pub fn contract_edge(space: &QuadraticSpace, x: &[SymWord], a: usize, b: usize) -> LinComb<Vec<SymWord>> {
    let mut out = LinComb::zero();
    for (p, &u) in x[a].letters().iter().enumerate() {
        for (q, &v) in x[b].letters().iter().enumerate() {
            let c = space.b(u, v);
            if c == &int(0) {
                continue;
            }
            let mut y = x.to_vec();
            y[a] = x[a].without(p);
            y[b] = x[b].without(q);
            out.add_term(y, c.clone());
        }
    }
    out
}

fn contract_all(space: &QuadraticSpace, edges: &[(usize, usize)], args: &[SymWord]) -> LinComb<Vec<SymWord>> {
    let mut state = LinComb::basis(args.to_vec());
    for &(a, b) in edges {
        state = state.flat_map(|x| contract_edge(space, x, a, b));
    }
    state
}

/// `τ^η(p_1, …, p_n)`: zero unless every `p_i` has length `|l_η(i)|`;
/// otherwise contract along all edges and symmetrise the survivors.
pub fn tau_eta(space: &QuadraticSpace, eta: &LabelledGraph, args: &[SymWord]) -> LinComb<SymWord> {
    tau_with_edges(space, eta, eta.edges(), args)
}

/// `τ^η` with the edges contracted in the given order.
pub fn tau_with_edges(
    space: &QuadraticSpace,
    eta: &LabelledGraph,
    edges: &[(usize, usize)],
    args: &[SymWord],
) -> LinComb<SymWord> {
    let n = eta.vertex_count();
    if args.len() != n || (0..n).any(|v| args[v].len() != eta.valence(v)) {
        return LinComb::zero();
    }
    let weight = (0..n).fold(int(1), |acc, v| acc * factorial(eta.legs_at(v)));
    contract_all(space, edges, args)
        .map_keys(|x| SymWord::new(x.iter().flat_map(|w| w.letters().iter().copied()).collect()))
        .scale(&weight)
}

/// `τ^η` extended multilinearly to linear combinations in each slot.
pub fn tau_multilinear(space: &QuadraticSpace, eta: &LabelledGraph, args: &[LinComb<SymWord>]) -> LinComb<SymWord> {
    let mut tuples: LinComb<Vec<SymWord>> = LinComb::basis(vec![]);
    for a in args {
        tuples = tuples.product_with(a, |t, w| {
            let mut t = t.clone();
            t.push(w.clone());
            t
        });
    }
    tuples.flat_map(|t| tau_eta(space, eta, t))
}

/// `γ(η, p_1, …) = τ^η(p_1, …) / |Aut(η)|`.
pub fn gamma_algebra(space: &QuadraticSpace, eta: &LabelledGraph, args: &[SymWord]) -> LinComb<SymWord> {
    let aut = Scalar::from_integer(eta.numbered_aut_count().into());
    tau_eta(space, eta, args).scale(&(int(1) / aut))
}

/// Both sides of `τ^η ∘_k τ^ζ = τ^{η ∘̃_k ζ}` on one argument tuple of
/// length `|vert(η)| + |vert(ζ)| - 1`; the arguments of `ζ` occupy slots
/// `k..k+|vert(ζ)|`.
pub fn composition_sides(
    space: &QuadraticSpace,
    eta: &LabelledGraph,
    k: usize,
    zeta: &LabelledGraph,
    args: &[SymWord],
) -> Result<(LinComb<SymWord>, LinComb<SymWord>)> {
    let n = eta.vertex_count();
    let m = zeta.vertex_count();
    if k >= n {
        return Err(Error::InvalidVertex { vertex: k, count: n });
    }
    if args.len() != n + m - 1 {
        return Err(Error::ArityMismatch { expected: n + m - 1, found: args.len() });
    }
    let inner = tau_eta(space, zeta, &args[k..k + m]);
    let outer_args: Vec<LinComb<SymWord>> = (0..n)
        .map(|v| match v.cmp(&k) {
            std::cmp::Ordering::Less => LinComb::basis(args[v].clone()),
            std::cmp::Ordering::Equal => inner.clone(),
            std::cmp::Ordering::Greater => LinComb::basis(args[v + m - 1].clone()),
        })
        .collect();
    let lhs = tau_multilinear(space, eta, &outer_args);
    let rhs = graph_circ(GraphVariant::AllBijections, eta, k, zeta)
        .iter()
        .map(|(g, c)| tau_eta(space, g, args).scale(c))
        .sum();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;
    use crate::scalar::frac;
    use std::collections::BTreeMap;

    fn w(s: &str) -> SymWord {
        s.parse().unwrap()
    }

    fn g(s: &str) -> LabelledGraph {
        s.parse().unwrap()
    }

    /// Independent model in `V^{⊗k}`: a monomial is the sum of all orderings
    /// of its letters; each edge end owns a fixed tensor slot, `b` is applied
    /// slot by slot, and the survivors are summed over all permutations.
    fn tensor_oracle(space: &QuadraticSpace, eta: &LabelledGraph, args: &[SymWord]) -> LinComb<SymWord> {
        let n = eta.vertex_count();
        if args.len() != n || (0..n).any(|v| args[v].len() != eta.valence(v)) {
            return LinComb::zero();
        }
        // orderings of every argument
        let mut tensors: Vec<BTreeMap<Vec<usize>, i64>> = Vec::new();
        for a in args {
            let mut t = BTreeMap::new();
            for p in perm::all(a.len()) {
                let word: Vec<usize> = p.iter().map(|&i| a.letters()[i]).collect();
                *t.entry(word).or_insert(0) += 1;
            }
            tensors.push(t);
        }
        // slot bookkeeping: edge ends take the first slots at each vertex
        let mut next_slot = vec![0usize; n];
        let mut pairs = Vec::new();
        for &(a, b) in eta.edges() {
            pairs.push(((a, next_slot[a]), (b, next_slot[b])));
            next_slot[a] += 1;
            next_slot[b] += 1;
        }
        let mut result: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        let mut choice = vec![0usize; n];
        let lists: Vec<Vec<(&Vec<usize>, &i64)>> = tensors.iter().map(|t| t.iter().collect()).collect();
        loop {
            let mut c = int(1);
            for v in 0..n {
                c *= int(*lists[v][choice[v]].1);
            }
            for &((a, sa), (b, sb)) in &pairs {
                c *= space.b(lists[a][choice[a]].0[sa], lists[b][choice[b]].0[sb]).clone();
            }
            if c != int(0) {
                let survivors: Vec<usize> =
                    (0..n).flat_map(|v| lists[v][choice[v]].0[next_slot[v]..].iter().copied()).collect();
                for p in perm::all(survivors.len()) {
                    let word: Vec<usize> = p.iter().map(|&i| survivors[i]).collect();
                    *result.entry(word).or_insert_with(|| int(0)) += c.clone();
                }
            }
            let mut v = 0;
            loop {
                if v == n {
                    return back_to_monomials(result);
                }
                choice[v] += 1;
                if choice[v] < lists[v].len() {
                    break;
                }
                choice[v] = 0;
                v += 1;
            }
        }
    }

    fn back_to_monomials(t: BTreeMap<Vec<usize>, Scalar>) -> LinComb<SymWord> {
        let mut out = LinComb::zero();
        for (word, c) in t {
            let mut sorted = word.clone();
            sorted.sort_unstable();
            if sorted != word {
                continue;
            }
            let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
            for &a in &word {
                *mult.entry(a).or_insert(0) += 1;
            }
            let norm = mult.values().fold(int(1), |acc, &m| acc * factorial(m));
            out.add_term(SymWord(word), c / norm);
        }
        out
    }

    #[test]
    fn word_round_trip() {
        assert_eq!(w("{2,1,1}").to_string(), "{1,1,2}");
        assert_eq!(w("{}"), SymWord::empty());
        assert!("{0}".parse::<SymWord>().is_err());
        assert_eq!(parse_args("{1} {1,2}").unwrap(), vec![w("{1}"), w("{1,2}")]);
        assert_eq!(SymWord::all(2, 2).len(), 3);
    }

    #[test]
    fn form_parsing() {
        let q = QuadraticSpace::parse("# form\n1 1/2\n1/2 0\n").unwrap();
        assert_eq!(q.dimension(), 2);
        assert_eq!(q.b(0, 1), &frac(1, 2));
        assert!(QuadraticSpace::parse("1 2\n3 4").is_err());
        assert!(QuadraticSpace::parse("1 2").is_err());
    }

    #[test]
    fn single_edge_contractions() {
        let q1 = QuadraticSpace::identity(1);
        let r = contract_edge(&q1, &[w("{1}"), w("{1}")], 0, 1);
        assert_eq!(r, LinComb::basis(vec![SymWord::empty(), SymWord::empty()]));
        let q2 = QuadraticSpace::identity(2);
        assert!(contract_edge(&q2, &[w("{1}"), w("{2}")], 0, 1).is_zero());
        let r = contract_edge(&q1, &[w("{1,1}"), w("{1}")], 0, 1);
        assert_eq!(r, LinComb::term(vec![w("{1}"), SymWord::empty()], int(2)));
    }

    #[test]
    fn tau_examples() {
        let q1 = QuadraticSpace::identity(1);
        let edge = g("n=2; e={1-2}; legs=[]");
        assert_eq!(tau_eta(&q1, &edge, &[w("{1}"), w("{1}")]), LinComb::basis(SymWord::empty()));
        assert!(tau_eta(&q1, &edge, &[w("{1,1}"), w("{1}")]).is_zero());
        let q2 = QuadraticSpace::identity(2);
        let vertex = LabelledGraph::corolla(2);
        assert_eq!(tau_eta(&q2, &vertex, &[w("{1,2}")]), LinComb::term(w("{1,2}"), int(2)));
    }

    #[test]
    fn theta_graph_counts_pairings() {
        // each argument is the sum of 3! equal orderings and there are 3!
        // perfect matchings between the two vertices; |Aut| = 3!
        let q1 = QuadraticSpace::identity(1);
        let theta = g("n=2; e={1-2,1-2,1-2}; legs=[]");
        let args = [w("{1,1,1}"), w("{1,1,1}")];
        assert_eq!(tau_eta(&q1, &theta, &args), LinComb::term(SymWord::empty(), int(36)));
        assert_eq!(gamma_algebra(&q1, &theta, &args), LinComb::term(SymWord::empty(), int(6)));
        assert_eq!(tau_eta(&q1, &theta, &args), tensor_oracle(&q1, &theta, &args));
    }

    fn sample_forms() -> Vec<QuadraticSpace> {
        vec![
            QuadraticSpace::identity(1),
            QuadraticSpace::parse("2").unwrap(),
            QuadraticSpace::identity(2),
            QuadraticSpace::parse("1 -1/2\n-1/2 3").unwrap(),
            QuadraticSpace::parse("0 1\n1 0").unwrap(),
        ]
    }

    fn argument_tuples(d: usize, eta: &LabelledGraph) -> Vec<Vec<SymWord>> {
        let mut out = vec![vec![]];
        for v in 0..eta.vertex_count() {
            let words = SymWord::all(d, eta.valence(v));
            out = out
                .into_iter()
                .flat_map(|t: Vec<SymWord>| {
                    words.iter().map(move |x| {
                        let mut t = t.clone();
                        t.push(x.clone());
                        t
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn agrees_with_tensor_model() {
        let graphs: Vec<LabelledGraph> =
            (1..=3).flat_map(|n| LabelledGraph::enumerate(n, 0, 3)).filter(|g| g.edges().len() <= 3).collect();
        for q in sample_forms() {
            for eta in &graphs {
                // a spread of argument tuples keeps the exhaustive oracle affordable
                let tuples = argument_tuples(q.dimension(), eta);
                let stride = (tuples.len() / 4).max(1);
                for args in tuples.into_iter().step_by(stride) {
                    assert_eq!(tau_eta(&q, eta, &args), tensor_oracle(&q, eta, &args), "{eta} {args:?}");
                }
            }
        }
    }

    #[test]
    fn edge_order_is_irrelevant() {
        let q = QuadraticSpace::parse("1 2\n2 -1").unwrap();
        let eta = g("n=3; e={1-2,1-2,2-3,1-3}; legs=[1,3]");
        for args in argument_tuples(2, &eta) {
            let base = tau_eta(&q, &eta, &args);
            let edges = eta.edges();
            for p in perm::all(edges.len()) {
                let reordered: Vec<_> = p.iter().map(|&i| edges[i]).collect();
                assert_eq!(tau_with_edges(&q, &eta, &reordered, &args), base);
            }
        }
    }

    #[test]
    fn equivariance() {
        let q = QuadraticSpace::parse("1 1\n1 2").unwrap();
        let eta = g("n=3; e={1-2,2-3}; legs=[1,1,3]");
        for args in argument_tuples(2, &eta) {
            for p in perm::all(3) {
                // vertex v of eta becomes p[v], carrying its argument along
                let moved = eta.relabel(&p);
                let mut permuted = vec![SymWord::empty(); 3];
                for v in 0..3 {
                    permuted[p[v]] = args[v].clone();
                }
                assert_eq!(tau_eta(&q, &moved, &permuted), tau_eta(&q, &eta, &args));
            }
        }
    }

    #[test]
    fn composition_law_small() {
        let q = QuadraticSpace::parse("1 1/3\n1/3 -2").unwrap();
        let eta = g("n=2; e={1-2}; legs=[1,2]");
        let zeta = g("n=2; e={1-2}; legs=[1,2]");
        for k in 0..2 {
            // argument lengths follow the composite graph
            let shape = crate::operad::bijection_classes(&eta, k, &zeta).remove(0).0;
            for args in argument_tuples(2, &shape) {
                let (lhs, rhs) = composition_sides(&q, &eta, k, &zeta, &args).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
