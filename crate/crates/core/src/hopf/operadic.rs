use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hopf::{ConnectedBialgebra, Tensor2, Word};
use crate::lincomb::{Basis, LinComb};
use crate::operad::{gamma_keys, orbit_basis, to_coinvariants, Operad};
use crate::par;
use crate::perm;

/// Which Hopf algebra to build from an operad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfVariant {
    /// `H_P`: tensor algebra on the duals of basis elements of arity `>= 2`.
    H,
    /// `H̄_P`: symmetric algebra on the duals of `S_n`-orbits. The dual of an
    /// orbit is the sum of the dual basis elements in it.
    Hbar,
    /// Symmetric algebra on the duals of all basis elements, the common
    /// target of `H_P` and `H̄_P`.
    Symmetrized,
}

impl std::fmt::Display for HopfVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HopfVariant::H => "H",
            HopfVariant::Hbar => "Hbar",
            HopfVariant::Symmetrized => "S",
        })
    }
}

impl std::str::FromStr for HopfVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(HopfVariant::H),
            "Hbar" | "hbar" => Ok(HopfVariant::Hbar),
            "S" | "sym" => Ok(HopfVariant::Symmetrized),
            _ => Err(Error::Parse(format!("unknown Hopf variant `{s}` (expected H or Hbar)"))),
        }
    }
}

/// `H_P`, `H̄_P` or the symmetrized algebra of an operad, truncated at a
/// degree cap. The coproduct of every generator is tabulated at
/// construction by transposing the composition `γ`.
pub struct OperadHopf<'a, O: Operad> {
    op: &'a O,
    variant: HopfVariant,
    max_degree: usize,
    gens: Vec<Vec<O::Key>>,
    table: BTreeMap<O::Key, Tensor2<O::Key>>,
}

type Entries<K> = Vec<(K, Tensor2<K>)>;

impl<'a, O: Operad> OperadHopf<'a, O> {
    pub fn new(op: &'a O, variant: HopfVariant, max_degree: usize) -> Result<Self> {
        let mut gens = vec![vec![]; max_degree + 2];
        for (n, slot) in gens.iter_mut().enumerate().skip(2) {
            *slot = match variant {
                HopfVariant::Hbar => orbit_basis(op, n)?,
                _ => op.basis(n),
            };
        }
        let mut hopf = Self { op, variant, max_degree, gens, table: BTreeMap::new() };
        for n in 2..=max_degree + 1 {
            for (r, delta) in hopf.tabulate(n)? {
                hopf.table.insert(r, delta);
            }
        }
        Ok(hopf)
    }

    pub fn operad(&self) -> &O {
        self.op
    }

    pub fn variant(&self) -> HopfVariant {
        self.variant
    }

    /// Keys allowed in position of an input of arity `m`.
    fn choices(&self, m: usize) -> Vec<O::Key> {
        if m == 1 {
            vec![self.op.identity()]
        } else {
            self.gens[m].clone()
        }
    }

    fn pair_with(&self, x: LinComb<O::Key>) -> Result<LinComb<O::Key>> {
        match self.variant {
            HopfVariant::Hbar => to_coinvariants(self.op, &x),
            _ => Ok(x),
        }
    }

    /// Coproducts of all generators of arity `n` at once: every
    /// `γ(p; q_1, …, q_k)` contributes `p* ⊗ q_1*⋯q_k*` to the coproduct of
    /// each basis element it hits.
    fn tabulate(&self, n: usize) -> Result<Entries<O::Key>> {
        let mut jobs: Vec<(Vec<usize>, O::Key)> = Vec::new();
        for comp in perm::compositions(n) {
            for p in self.choices(comp.len()) {
                jobs.push((comp.clone(), p));
            }
        }
        let commutative = self.commutative();
        let partials = par::map(&jobs, |(comp, p)| -> Result<BTreeMap<O::Key, Tensor2<O::Key>>> {
            let mut local: BTreeMap<O::Key, Tensor2<O::Key>> = BTreeMap::new();
            let left = if self.op.is_identity(p) { Word::unit() } else { Word::gen(p.clone()) };
            let options: Vec<Vec<O::Key>> = comp.iter().map(|&m| self.choices(m)).collect();
            let mut idx = vec![0usize; comp.len()];
            loop {
                let qs: Vec<O::Key> = idx.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
                let composed = self.pair_with(gamma_keys(self.op, p, &qs)?)?;
                if !composed.is_zero() {
                    let mut right: Vec<O::Key> = qs.into_iter().filter(|q| !self.op.is_identity(q)).collect();
                    if commutative {
                        right.sort();
                    }
                    let key = (left.clone(), Word(right));
                    for (r, c) in composed.iter() {
                        local.entry(r.clone()).or_default().add_term(key.clone(), c.clone());
                    }
                }
                if !advance(&mut idx, &options) {
                    break;
                }
            }
            Ok(local)
        });
        let mut merged: BTreeMap<O::Key, Tensor2<O::Key>> = BTreeMap::new();
        for partial in partials {
            for (r, delta) in partial? {
                *merged.entry(r).or_default() += delta;
            }
        }
        Ok(merged.into_iter().collect())
    }

    /// Every basis element of arity `arity` lying in the orbit of `rep`.
    pub fn orbit_members(&self, rep: &O::Key) -> Vec<O::Key> {
        let n = self.op.arity(rep);
        self.op.basis(n).into_iter().filter(|b| self.op.orbit_rep(b).as_ref() == Some(rep)).collect()
    }

    /// Normalise a key to a generator of this algebra.
    pub fn generator_of(&self, key: &O::Key) -> Result<O::Key> {
        let deg = self.op.arity(key).saturating_sub(1);
        if deg == 0 {
            return Err(Error::Parse("the arity-one element is the unit `1`".into()));
        }
        if deg > self.max_degree {
            return Err(Error::DegreeOverflow { degree: deg, cap: self.max_degree });
        }
        match self.variant {
            HopfVariant::Hbar => self
                .op
                .orbit_rep(key)
                .ok_or_else(|| Error::OperadMismatch(self.op.name().into(), "no orbit basis".into())),
            _ => Ok(key.clone()),
        }
    }
}

fn advance<T>(idx: &mut [usize], options: &[Vec<T>]) -> bool {
    for (i, o) in idx.iter_mut().zip(options).rev() {
        if *i + 1 < o.len() {
            *i += 1;
            return true;
        }
        *i = 0;
    }
    false
}

impl<O: Operad> ConnectedBialgebra for OperadHopf<'_, O> {
    type Gen = O::Key;

    fn commutative(&self) -> bool {
        self.variant != HopfVariant::H
    }

    fn degree(&self, g: &O::Key) -> usize {
        self.op.arity(g) - 1
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn generators(&self, max_degree: usize) -> Vec<O::Key> {
        self.gens.iter().take(max_degree.min(self.max_degree) + 2).flatten().cloned().collect()
    }

    fn coproduct_gen(&self, g: &O::Key) -> Result<Tensor2<O::Key>> {
        let deg = self.degree(g);
        if deg > self.max_degree {
            return Err(Error::DegreeOverflow { degree: deg, cap: self.max_degree });
        }
        Ok(self.table.get(g).cloned().unwrap_or_default())
    }

    fn show_gen(&self, g: &O::Key) -> String {
        g.encode()
    }

    fn parse_gen(&self, text: &str) -> Result<O::Key> {
        self.generator_of(&self.op.parse_key(text)?)
    }
}

/// The surjection `H_P → S`: forget the order of letters.
pub fn symmetrize<K: Clone + Ord>(x: &LinComb<Word<K>>) -> LinComb<Word<K>> {
    x.map_keys(|w| {
        let mut v = w.0.clone();
        v.sort();
        Word(v)
    })
}

/// The injection `H̄_P → S`: each orbit dual becomes the sum of the duals of
/// its members, extended multiplicatively.
pub fn orbit_embedding<O: Operad>(hbar: &OperadHopf<'_, O>, x: &LinComb<Word<O::Key>>) -> LinComb<Word<O::Key>> {
    let mut out = LinComb::zero();
    for (w, c) in x.iter() {
        let mut acc: LinComb<Word<O::Key>> = LinComb::basis(Word::unit());
        for g in &w.0 {
            let members: LinComb<Word<O::Key>> =
                hbar.orbit_members(g).into_iter().map(|b| (Word::gen(b), crate::scalar::one())).collect();
            acc = acc.product_with(&members, |a, b| a.mul(b, true));
        }
        out.add_scaled(&acc, c);
    }
    out
}
