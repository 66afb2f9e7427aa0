//! The operad interface and the derived operations every instance shares:
//! full composition, the symmetric action on combinations, coinvariants, and
//! executable forms of the operad axioms.
//!
//! Instances only provide partial compositions `p ∘_i q` on basis elements;
//! the full composition `γ(p; q_1, …, q_n)` is always assembled from them.
//! Inputs are numbered from zero, and the symmetric action relabels inputs:
//! `p·σ` feeds input `j` of `p` from input `σ(j)`.

mod ass;
mod com;
mod graphs;
mod tm;

use std::fmt::Debug;

pub use ass::{lie_to_ass, AssKey, AssOperad, LieKey, LieOperad};
pub use com::{ComKey, ComOperad};
pub use graphs::{bijection_classes, graph_circ, GraphKey, GraphOperad, GraphVariant};
pub use tm::{TmOperad, TmTree};

use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinComb};
use crate::perm;

/// Default arity cap: every space is enumerated only up to this arity.
pub const DEFAULT_MAX_ARITY: usize = 6;

pub trait Operad: Send + Sync {
    type Key: Clone + Ord + Debug + Send + Sync + Basis;

    fn name(&self) -> &str;

    fn arity(&self, key: &Self::Key) -> usize;

    /// The unit of `P(1)`. All instances here are 1-reduced, so arity one
    /// holds nothing else.
    fn identity(&self) -> Self::Key;

    fn is_identity(&self, key: &Self::Key) -> bool {
        self.arity(key) == 1
    }

    /// Basis of `P(n)` for `n >= 1`.
    fn basis(&self, n: usize) -> Vec<Self::Key>;

    /// `p ∘_i q` for non-identity basis elements, `i < arity(p)`.
    fn circ_basis(&self, p: &Self::Key, i: usize, q: &Self::Key) -> LinComb<Self::Key>;

    /// `p·σ` for a basis element.
    fn act_basis(&self, p: &Self::Key, sigma: &[usize]) -> LinComb<Self::Key>;

    /// Canonical representative of the `S_n`-orbit of `p`, when the action
    /// permutes the basis. `None` for operads whose action is not a basis
    /// permutation.
    fn orbit_rep(&self, p: &Self::Key) -> Option<Self::Key>;

    fn parse_key(&self, text: &str) -> Result<Self::Key>;
}

/// The common arity of all keys of `x` (`None` for zero).
pub fn arity_of<O: Operad>(op: &O, x: &LinComb<O::Key>) -> Result<Option<usize>> {
    let mut arity = None;
    for k in x.keys() {
        let a = op.arity(k);
        match arity {
            None => arity = Some(a),
            Some(b) if b != a => return Err(Error::ArityMismatch { expected: b, found: a }),
            _ => {}
        }
    }
    Ok(arity)
}

fn circ_keys<O: Operad>(op: &O, p: &O::Key, i: usize, q: &O::Key) -> Result<LinComb<O::Key>> {
    let n = op.arity(p);
    if i >= n {
        return Err(Error::ArityMismatch { expected: n, found: i + 1 });
    }
    Ok(if op.is_identity(p) {
        LinComb::basis(q.clone())
    } else if op.is_identity(q) {
        LinComb::basis(p.clone())
    } else {
        op.circ_basis(p, i, q)
    })
}

/// Bilinear partial composition `p ∘_i q` (zero-based `i`).
pub fn circ<O: Operad>(op: &O, p: &LinComb<O::Key>, i: usize, q: &LinComb<O::Key>) -> Result<LinComb<O::Key>> {
    let mut out = LinComb::zero();
    for (a, ca) in p.iter() {
        for (b, cb) in q.iter() {
            out.add_scaled(&circ_keys(op, a, i, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Full composition `γ(p; q_1, …, q_n)`, assembled right to left from
/// partial compositions so that earlier input positions never shift.
pub fn gamma<O: Operad>(op: &O, p: &LinComb<O::Key>, qs: &[LinComb<O::Key>]) -> Result<LinComb<O::Key>> {
    let Some(n) = arity_of(op, p)? else { return Ok(LinComb::zero()) };
    if qs.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: qs.len() });
    }
    let mut acc = p.clone();
    for (i, q) in qs.iter().enumerate().rev() {
        acc = circ(op, &acc, i, q)?;
    }
    Ok(acc)
}

/// `γ` on basis elements.
pub fn gamma_keys<O: Operad>(op: &O, p: &O::Key, qs: &[O::Key]) -> Result<LinComb<O::Key>> {
    let qs: Vec<LinComb<O::Key>> = qs.iter().cloned().map(LinComb::basis).collect();
    gamma(op, &LinComb::basis(p.clone()), &qs)
}

pub fn act<O: Operad>(op: &O, x: &LinComb<O::Key>, sigma: &[usize]) -> LinComb<O::Key> {
    x.flat_map(|k| op.act_basis(k, sigma))
}

/// Image in the coinvariants `P(n)_{S_n}`: every key replaced by its orbit
/// representative, coefficients summed.
pub fn to_coinvariants<O: Operad>(op: &O, x: &LinComb<O::Key>) -> Result<LinComb<O::Key>> {
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        let rep = op
            .orbit_rep(k)
            .ok_or_else(|| Error::OperadMismatch(op.name().to_string(), "action does not permute the basis".into()))?;
        out.add_term(rep, c.clone());
    }
    Ok(out)
}

/// Orbit representatives of `P(n)`, sorted.
pub fn orbit_basis<O: Operad>(op: &O, n: usize) -> Result<Vec<O::Key>> {
    let mut reps = Vec::new();
    for k in op.basis(n) {
        reps.push(
            op.orbit_rep(&k)
                .ok_or_else(|| Error::OperadMismatch(op.name().to_string(), "no orbit basis".into()))?,
        );
    }
    reps.sort();
    reps.dedup();
    Ok(reps)
}

/// `(p(q_1..q_n))(r_1..r_M) == p(q_1(r..), …, q_n(r..))`.
pub fn check_associativity<O: Operad>(
    op: &O,
    p: &O::Key,
    qs: &[O::Key],
    rs: &[O::Key],
) -> Result<bool> {
    let qs_lc: Vec<_> = qs.iter().cloned().map(LinComb::basis).collect();
    let rs_lc: Vec<_> = rs.iter().cloned().map(LinComb::basis).collect();
    let left = gamma(op, &gamma(op, &LinComb::basis(p.clone()), &qs_lc)?, &rs_lc)?;
    let mut inner = Vec::with_capacity(qs.len());
    let mut offset = 0;
    for q in qs {
        let m = op.arity(q);
        if offset + m > rs.len() {
            return Err(Error::ArityMismatch { expected: offset + m, found: rs.len() });
        }
        inner.push(gamma(op, &LinComb::basis(q.clone()), &rs_lc[offset..offset + m])?);
        offset += m;
    }
    let right = gamma(op, &LinComb::basis(p.clone()), &inner)?;
    Ok(left == right)
}

/// Both equivariance laws for one instance:
/// `(p·σ)(q_1..q_n) == p(q_σ(1)..q_σ(n))·σ̂` and
/// `p(q_1·σ_1, …, q_n·σ_n) == p(q_1..q_n)·(σ_1 × … × σ_n)`.
pub fn check_equivariance<O: Operad>(
    op: &O,
    p: &O::Key,
    qs: &[O::Key],
    sigma: &[usize],
    inner: &[perm::Perm],
) -> Result<bool> {
    let qs_lc: Vec<_> = qs.iter().cloned().map(LinComb::basis).collect();
    let sizes: Vec<usize> = qs.iter().map(|q| op.arity(q)).collect();
    let lhs = gamma(op, &op.act_basis(p, sigma), &qs_lc)?;
    let permuted: Vec<_> = sigma.iter().map(|&j| qs_lc[j].clone()).collect();
    let rhs = act(op, &gamma(op, &LinComb::basis(p.clone()), &permuted)?, &perm::block_permutation(sigma, &sizes));
    if lhs != rhs {
        return Ok(false);
    }
    let acted: Vec<_> = qs.iter().zip(inner).map(|(q, s)| op.act_basis(q, s)).collect();
    let lhs = gamma(op, &LinComb::basis(p.clone()), &acted)?;
    let rhs = act(op, &gamma(op, &LinComb::basis(p.clone()), &qs_lc)?, &perm::block_product(inner));
    Ok(lhs == rhs)
}

/// Left and right unit laws.
pub fn check_unit<O: Operad>(op: &O, p: &O::Key) -> Result<bool> {
    let n = op.arity(p);
    let id = LinComb::basis(op.identity());
    let pl = LinComb::basis(p.clone());
    let left = gamma(op, &id, std::slice::from_ref(&pl))?;
    let right = gamma(op, &pl, &vec![id; n])?;
    Ok(left == pl && right == pl)
}

/// Registry names accepted by the command line and by `verify all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperadName {
    Com,
    Ass,
    Lie,
    Tm,
    Gamma,
    GammaTilde,
    GammaOnePi,
}

impl OperadName {
    pub const ALL: [OperadName; 7] = [
        OperadName::Com,
        OperadName::Ass,
        OperadName::Lie,
        OperadName::Tm,
        OperadName::Gamma,
        OperadName::GammaTilde,
        OperadName::GammaOnePi,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            OperadName::Com => "com",
            OperadName::Ass => "ass",
            OperadName::Lie => "lie",
            OperadName::Tm => "tm",
            OperadName::Gamma => "gamma",
            OperadName::GammaTilde => "gamma-tilde",
            OperadName::GammaOnePi => "gamma-1pi",
        }
    }
}

impl std::str::FromStr for OperadName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperadName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownOperad(s.to_string()))
    }
}

/// Run `$body` with `$op` bound to the concrete operad named by `$name`.
#[macro_export]
macro_rules! with_operad {
    ($name:expr, $max_valence:expr, |$op:ident| $body:expr) => {{
        use $crate::operad::{GraphOperad, GraphVariant, OperadName};
        match $name {
            OperadName::Com => {
                let $op = $crate::operad::ComOperad;
                $body
            }
            OperadName::Ass => {
                let $op = $crate::operad::AssOperad;
                $body
            }
            OperadName::Lie => {
                let $op = $crate::operad::LieOperad;
                $body
            }
            OperadName::Tm => {
                let $op = $crate::operad::TmOperad;
                $body
            }
            OperadName::Gamma => {
                let $op = GraphOperad::new(GraphVariant::Classes, $max_valence);
                $body
            }
            OperadName::GammaTilde => {
                let $op = GraphOperad::new(GraphVariant::AllBijections, $max_valence);
                $body
            }
            OperadName::GammaOnePi => {
                let $op = GraphOperad::one_pi();
                $body
            }
        }
    }};
}
