//! Graded connected bialgebras presented by generators, and the Hopf
//! algebras `H_P`, `H̄_P` built from an operad.
//!
//! Elements are linear combinations of words in generators. A word is an
//! ordered sequence in the noncommutative case and a sorted multiset in the
//! commutative case; the empty word is the unit. Every algebra here only
//! supplies the coproduct of a generator, and products, counit, antipode and
//! the axiom checks are shared.

mod operadic;

use std::collections::BTreeMap;
use std::fmt::Debug;

pub use operadic::{orbit_embedding, symmetrize, HopfVariant, OperadHopf};

use crate::error::{parse_err, Error, Result};
use crate::lincomb::{render, LinComb};
use crate::par;
use crate::scalar::Scalar;

/// Monomial in generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<G>(pub Vec<G>);

impl<G: Clone + Ord> Word<G> {
    pub fn unit() -> Self {
        Self(vec![])
    }

    pub fn gen(g: G) -> Self {
        Self(vec![g])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[G] {
        &self.0
    }

    pub fn mul(&self, other: &Self, commutative: bool) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        if commutative {
            v.sort();
        }
        Self(v)
    }
}

pub type Tensor2<G> = LinComb<(Word<G>, Word<G>)>;
pub type Tensor3<G> = LinComb<(Word<G>, Word<G>, Word<G>)>;

/// A graded connected bialgebra, free (commutative or not) on its
/// generators, given by the coproduct of each generator.
pub trait ConnectedBialgebra: Sync {
    type Gen: Clone + Ord + Debug + Send + Sync;

    fn commutative(&self) -> bool;

    /// Degree of a generator, at least one.
    fn degree(&self, g: &Self::Gen) -> usize;

    /// Highest degree for which coproducts are available.
    fn max_degree(&self) -> usize;

    /// All generators of degree `1..=max_degree`, sorted by degree.
    fn generators(&self, max_degree: usize) -> Vec<Self::Gen>;

    fn coproduct_gen(&self, g: &Self::Gen) -> Result<Tensor2<Self::Gen>>;

    /// Text form of a generator, as it appears inside words.
    fn show_gen(&self, g: &Self::Gen) -> String;

    fn parse_gen(&self, text: &str) -> Result<Self::Gen>;
}

pub fn word_degree<A: ConnectedBialgebra>(alg: &A, w: &Word<A::Gen>) -> usize {
    w.0.iter().map(|g| alg.degree(g)).sum()
}

pub fn mul<A: ConnectedBialgebra>(alg: &A, x: &LinComb<Word<A::Gen>>, y: &LinComb<Word<A::Gen>>) -> LinComb<Word<A::Gen>> {
    let c = alg.commutative();
    x.product_with(y, |a, b| a.mul(b, c))
}

fn tensor_mul<G: Clone + Ord>(x: &Tensor2<G>, y: &Tensor2<G>, commutative: bool) -> Tensor2<G> {
    x.product_with(y, |(a, b), (c, d)| (a.mul(c, commutative), b.mul(d, commutative)))
}

/// Coproduct of a word: the product of the coproducts of its letters.
pub fn coproduct_word<A: ConnectedBialgebra>(alg: &A, w: &Word<A::Gen>) -> Result<Tensor2<A::Gen>> {
    let mut acc = LinComb::basis((Word::unit(), Word::unit()));
    for g in &w.0 {
        acc = tensor_mul(&acc, &alg.coproduct_gen(g)?, alg.commutative());
    }
    Ok(acc)
}

pub fn coproduct<A: ConnectedBialgebra>(alg: &A, x: &LinComb<Word<A::Gen>>) -> Result<Tensor2<A::Gen>> {
    let mut out = LinComb::zero();
    for (w, c) in x.iter() {
        out.add_scaled(&coproduct_word(alg, w)?, c);
    }
    Ok(out)
}

pub fn counit<G: Clone + Ord>(x: &LinComb<Word<G>>) -> Scalar {
    x.coeff(&Word::unit())
}

/// Memoised antipode on generators, extended as an algebra
/// antihomomorphism.
pub struct Antipode<'a, A: ConnectedBialgebra> {
    alg: &'a A,
    memo: BTreeMap<A::Gen, LinComb<Word<A::Gen>>>,
}

impl<'a, A: ConnectedBialgebra> Antipode<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        Self { alg, memo: BTreeMap::new() }
    }

    /// `S(g) = -Σ S(g') g''` over the terms of `Δ(g)` other than `g ⊗ 1`.
    pub fn of_gen(&mut self, g: &A::Gen) -> Result<LinComb<Word<A::Gen>>> {
        if let Some(s) = self.memo.get(g) {
            return Ok(s.clone());
        }
        let delta = self.alg.coproduct_gen(g)?;
        let mut acc = LinComb::zero();
        for ((left, right), c) in delta.iter() {
            if right.is_unit() {
                continue;
            }
            let s_left = self.of_word(left)?;
            acc.add_scaled(&mul(self.alg, &s_left, &LinComb::basis(right.clone())), c);
        }
        let s = -acc;
        self.memo.insert(g.clone(), s.clone());
        Ok(s)
    }

    pub fn of_word(&mut self, w: &Word<A::Gen>) -> Result<LinComb<Word<A::Gen>>> {
        let mut acc = LinComb::basis(Word::unit());
        for g in w.0.iter().rev() {
            let s = self.of_gen(g)?;
            acc = mul(self.alg, &acc, &s);
        }
        Ok(acc)
    }

    pub fn apply(&mut self, x: &LinComb<Word<A::Gen>>) -> Result<LinComb<Word<A::Gen>>> {
        let mut out = LinComb::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&self.of_word(w)?, c);
        }
        Ok(out)
    }
}

pub fn antipode<A: ConnectedBialgebra>(alg: &A, x: &LinComb<Word<A::Gen>>) -> Result<LinComb<Word<A::Gen>>> {
    Antipode::new(alg).apply(x)
}

fn coassociativity_defect<A: ConnectedBialgebra>(alg: &A, w: &Word<A::Gen>) -> Result<Tensor3<A::Gen>> {
    let delta = coproduct_word(alg, w)?;
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a, b), c) in delta.iter() {
        for ((a1, a2), c1) in coproduct_word(alg, a)?.iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
        }
        for ((b1, b2), c2) in coproduct_word(alg, b)?.iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    Ok(&left - &right)
}

/// `m(S ⊗ id)Δ(w) - ε(w)` and `m(id ⊗ S)Δ(w) - ε(w)`.
fn antipode_defects<A: ConnectedBialgebra>(
    alg: &A,
    s: &mut Antipode<'_, A>,
    w: &Word<A::Gen>,
) -> Result<(LinComb<Word<A::Gen>>, LinComb<Word<A::Gen>>)> {
    let delta = coproduct_word(alg, w)?;
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a, b), c) in delta.iter() {
        left.add_scaled(&mul(alg, &s.of_word(a)?, &LinComb::basis(b.clone())), c);
        right.add_scaled(&mul(alg, &LinComb::basis(a.clone()), &s.of_word(b)?), c);
    }
    let eps = if w.is_unit() { LinComb::basis(Word::unit()) } else { LinComb::zero() };
    Ok((&left - &eps, &right - &eps))
}

/// Outcome of one family of identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    /// The first failing identity as an error.
    pub fn into_result(self) -> Result<Self> {
        match self.checks.iter().find(|c| !c.passed()) {
            Some(c) => Err(Error::AxiomViolation {
                axiom: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            }),
            None => Ok(self),
        }
    }

    pub fn push(&mut self, name: &str, checked: usize, witness: Option<String>) {
        self.checks.push(CheckResult { name: name.to_string(), checked, witness });
    }
}

fn first_witness<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Result<Option<String>> + Sync + Send,
) -> Option<String> {
    par::map(items, |it| match check(it) {
        Ok(w) => w,
        Err(e) => Some(e.to_string()),
    })
    .into_iter()
    .flatten()
    .next()
}

/// Exact check of the bialgebra and Hopf identities on all generators of
/// degree `<= max_degree` and on all products of two generators within the
/// cap.
pub fn verify<A: ConnectedBialgebra>(alg: &A, max_degree: usize) -> Report {
    let gens = alg.generators(max_degree);
    let show = |w: &Word<A::Gen>| show_word(alg, w);
    let mut report = Report::default();

    let words: Vec<Word<A::Gen>> = gens.iter().cloned().map(Word::gen).collect();
    let mut pairs = Vec::new();
    for g in &gens {
        for h in &gens {
            if alg.degree(g) + alg.degree(h) <= max_degree {
                pairs.push((g.clone(), h.clone()));
            }
        }
    }
    let pair_words: Vec<Word<A::Gen>> =
        pairs.iter().map(|(g, h)| Word::gen(g.clone()).mul(&Word::gen(h.clone()), alg.commutative())).collect();

    let w = first_witness(&words, |w| {
        let d = coassociativity_defect(alg, w)?;
        Ok((!d.is_zero()).then(|| format!("(Δ⊗id)Δ - (id⊗Δ)Δ nonzero on {}", show(w))))
    });
    report.push("coassociativity", words.len(), w);

    let w = first_witness(&words, |w| {
        let delta = coproduct_word(alg, w)?;
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in delta.iter() {
            if a.is_unit() {
                left.add_term(b.clone(), c.clone());
            }
            if b.is_unit() {
                right.add_term(a.clone(), c.clone());
            }
        }
        let x = LinComb::basis(w.clone());
        Ok((left != x || right != x).then(|| format!("counit fails on {}", show(w))))
    });
    report.push("counit", words.len(), w);

    let w = first_witness(&words, |w| {
        let d = word_degree(alg, w);
        let delta = coproduct_word(alg, w)?;
        let bad = delta
            .keys()
            .find(|(a, b)| word_degree(alg, a) + word_degree(alg, b) != d)
            .map(|(a, b)| format!("term {} ⊗ {} in Δ({}) has the wrong degree", show(a), show(b), show(w)));
        Ok(bad)
    });
    report.push("grading", words.len(), w);

    let w = first_witness(&pairs, |(g, h)| {
        let prod = mul(alg, &LinComb::basis(Word::gen(g.clone())), &LinComb::basis(Word::gen(h.clone())));
        let lhs = coproduct(alg, &prod)?;
        let rhs = tensor_mul(&alg.coproduct_gen(g)?, &alg.coproduct_gen(h)?, alg.commutative());
        Ok((lhs != rhs).then(|| format!("Δ({}·{}) ≠ Δ({})Δ({})", alg.show_gen(g), alg.show_gen(h), alg.show_gen(g), alg.show_gen(h))))
    });
    report.push("multiplicativity", pairs.len(), w);

    let all: Vec<Word<A::Gen>> = words.iter().chain(&pair_words).cloned().collect();
    let w = first_witness(&all, |w| {
        let mut s = Antipode::new(alg);
        let (l, r) = antipode_defects(alg, &mut s, w)?;
        Ok((!l.is_zero() || !r.is_zero()).then(|| format!("antipode law fails on {}", show(w))))
    });
    report.push("antipode", all.len(), w);

    if alg.commutative() {
        let w = first_witness(&pairs, |(g, h)| {
            let a = mul(alg, &LinComb::basis(Word::gen(g.clone())), &LinComb::basis(Word::gen(h.clone())));
            let b = mul(alg, &LinComb::basis(Word::gen(h.clone())), &LinComb::basis(Word::gen(g.clone())));
            Ok((a != b).then(|| format!("{}·{} ≠ {}·{}", alg.show_gen(g), alg.show_gen(h), alg.show_gen(h), alg.show_gen(g))))
        });
        report.push("commutativity", pairs.len(), w);
    }
    report
}

pub fn show_word<A: ConnectedBialgebra>(alg: &A, w: &Word<A::Gen>) -> String {
    if w.is_unit() {
        return "1".to_string();
    }
    w.0.iter().map(|g| format!("{}*", alg.show_gen(g))).collect::<Vec<_>>().join(".")
}

pub fn show_element<A: ConnectedBialgebra>(alg: &A, x: &LinComb<Word<A::Gen>>) -> String {
    render(x, |w| show_word(alg, w))
}

pub fn show_tensor<A: ConnectedBialgebra>(alg: &A, x: &Tensor2<A::Gen>) -> String {
    render(x, |(a, b)| format!("{} ⊗ {}", show_word(alg, a), show_word(alg, b)))
}

pub fn element_json<A: ConnectedBialgebra>(alg: &A, x: &LinComb<Word<A::Gen>>) -> serde_json::Value {
    crate::lincomb::to_json(x, |w| show_word(alg, w))
}

pub fn tensor_json<A: ConnectedBialgebra>(alg: &A, x: &Tensor2<A::Gen>) -> serde_json::Value {
    crate::lincomb::to_json(x, |(a, b)| format!("{} ⊗ {}", show_word(alg, a), show_word(alg, b)))
}

pub fn parse_word<A: ConnectedBialgebra>(alg: &A, text: &str) -> Result<Word<A::Gen>> {
    let t = text.trim();
    if t == "1" {
        return Ok(Word::unit());
    }
    let body = t.strip_suffix('*').ok_or_else(|| parse_err(format!("generator `{t}` must end in `*`")))?;
    let mut letters = body.split("*.").map(|g| alg.parse_gen(g)).collect::<Result<Vec<_>>>()?;
    if alg.commutative() {
        letters.sort();
    }
    Ok(Word(letters))
}

/// Parse `e2*.e3* + 2 e4* - 1/2 1`.
pub fn parse_element<A: ConnectedBialgebra>(alg: &A, text: &str) -> Result<LinComb<Word<A::Gen>>> {
    crate::lincomb::parse_lincomb(text, |w| parse_word(alg, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::operad::{ComOperad, TmOperad};

    #[test]
    fn parse_words_with_spaces() {
        let h = OperadHopf::new(&TmOperad, HopfVariant::H, 3).unwrap();
        let x = parse_element(&h, "(l:1,2 (l:3,4))* - 2 (l:1,2,3)*.(l:1,2)*").unwrap();
        assert_eq!(x.len(), 2);
        let c = OperadHopf::new(&ComOperad, HopfVariant::H, 3).unwrap();
        assert_eq!(parse_element(&c, "1").unwrap(), LinComb::basis(Word::unit()));
        assert!(parse_element(&c, "e2").is_err());
    }
}
