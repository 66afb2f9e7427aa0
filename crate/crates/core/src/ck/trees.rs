use crate::combinat::{admissible_cuts, graft, RootedTree};
use crate::error::{parse_err, Result};
use crate::hopf::{ConnectedBialgebra, Tensor2, Word};
use crate::lincomb::LinComb;
use crate::operad::{circ, Operad, TmOperad, TmTree};
use crate::scalar::{factorial, one};

/// The Hopf algebra `H_R` of rooted trees: free commutative on bare trees,
/// graded by vertex count, with the admissible-cut coproduct.
#[derive(Clone, Copy, Debug)]
pub struct CkTrees {
    pub max_vertices: usize,
}

impl CkTrees {
    pub fn new(max_vertices: usize) -> Self {
        Self { max_vertices }
    }
}

impl ConnectedBialgebra for CkTrees {
    type Gen = RootedTree;

    fn commutative(&self) -> bool {
        true
    }

    fn degree(&self, t: &RootedTree) -> usize {
        t.vertex_count()
    }

    fn max_degree(&self) -> usize {
        self.max_vertices
    }

    fn generators(&self, max_degree: usize) -> Vec<RootedTree> {
        (1..=max_degree.min(self.max_vertices)).flat_map(RootedTree::enumerate).collect()
    }

    /// `Δ(t) = Σ_c R^c(t) ⊗ P^c(t) + 1 ⊗ t`, the empty cut giving `t ⊗ 1`.
    fn coproduct_gen(&self, t: &RootedTree) -> Result<Tensor2<RootedTree>> {
        let mut out: Tensor2<RootedTree> = LinComb::basis((Word::unit(), Word::gen(t.clone())));
        for cut in admissible_cuts(t) {
            out.add_term((Word::gen(cut.trunk), Word(cut.pruned)), one());
        }
        Ok(out)
    }

    fn show_gen(&self, t: &RootedTree) -> String {
        t.to_string()
    }

    fn parse_gen(&self, text: &str) -> Result<RootedTree> {
        let t: RootedTree = text.parse()?;
        if !t.is_bare() {
            return Err(parse_err("trees of the Hopf algebra carry no extra legs"));
        }
        Ok(t)
    }
}

/// `t • s = Σ_v t ∘_v s`.
pub fn tree_bullet(t: &RootedTree, s: &RootedTree) -> LinComb<RootedTree> {
    (0..t.vertex_count()).map(|v| (graft(t, v, s).expect("vertex in range"), one())).collect()
}

fn bullet_lin(x: &LinComb<RootedTree>, y: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&tree_bullet(a, b), &(ca * cb));
        }
    }
    out
}

/// `[s, t] = s • t − t • s`, bilinear.
pub fn tree_lie_bracket(s: &LinComb<RootedTree>, t: &LinComb<RootedTree>) -> LinComb<RootedTree> {
    &bullet_lin(s, t) - &bullet_lin(t, s)
}

/// `t • s = Σ_i t ∘_i s` in `TM`, summed over the legs of `t`.
pub fn tm_bullet(t: &TmTree, s: &TmTree) -> LinComb<TmTree> {
    let (lt, ls) = (LinComb::basis(t.clone()), LinComb::basis(s.clone()));
    (0..TmOperad.arity(t)).map(|i| circ(&TmOperad, &lt, i, &ls).expect("leg in range")).sum()
}

/// `φ(t) = t̃ · Π_v i_t(v)!`. A saturated vertex contributes `0! = 1`; this
/// keeps `φ(t • s) = φ(t) • φ(s)` for `t, s` without saturated vertices.
pub fn phi_tm_to_lr(t: &TmTree) -> LinComb<RootedTree> {
    if t.is_identity() {
        return LinComb::zero();
    }
    let shape = t.shape();
    let legs = shape.legs_by_vertex();
    let weight = legs.iter().fold(one(), |acc, &i| acc * factorial(i));
    LinComb::term(shape.strip_legs(), weight)
}
