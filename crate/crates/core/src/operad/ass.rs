use crate::error::{parse_err, Result};
use crate::lincomb::{Basis, LinComb};
use crate::operad::{act, circ, Operad};
use crate::perm;
use crate::scalar::{int, Scalar};

/// Basis element `x^σ` of `Ass(n)`: the monomial `a_σ(1) a_σ(2) … a_σ(n)`,
/// stored as its word of zero-based input labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssKey(pub Vec<usize>);

impl AssKey {
    pub fn identity(n: usize) -> Self {
        Self(perm::identity(n))
    }
}

fn encode_word(prefix: &str, w: &[usize], n: usize) -> String {
    if n <= 9 {
        let digits: String = w.iter().map(|&x| char::from(b'1' + x as u8)).collect();
        format!("{prefix}{digits}")
    } else {
        let parts: Vec<String> = w.iter().map(|&x| (x + 1).to_string()).collect();
        format!("{prefix}{}", parts.join("."))
    }
}

fn decode_word(text: &str) -> Result<Vec<usize>> {
    let letters: Vec<usize> = if text.contains('.') {
        text.split('.')
            .map(|p| p.parse::<usize>().map_err(|_| parse_err(format!("bad letter `{p}`"))))
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_err(format!("bad letter `{c}`"))))
            .collect::<Result<_>>()?
    };
    letters
        .into_iter()
        .map(|x| x.checked_sub(1).ok_or_else(|| parse_err("letters are numbered from 1")))
        .collect()
}

fn is_permutation(w: &[usize]) -> bool {
    let mut seen = vec![false; w.len()];
    w.iter().all(|&x| x < w.len() && !std::mem::replace(&mut seen[x], true))
}

impl Basis for AssKey {
    fn kind(&self) -> &'static str {
        "ass"
    }
    fn encode(&self) -> String {
        encode_word("x", &self.0, self.0.len())
    }
}

/// Associative algebras. Composition substitutes a monomial for a letter.
#[derive(Clone, Copy, Debug, Default)]
pub struct AssOperad;

impl Operad for AssOperad {
    type Key = AssKey;

    fn name(&self) -> &str {
        "ass"
    }

    fn arity(&self, key: &AssKey) -> usize {
        key.0.len()
    }

    fn identity(&self) -> AssKey {
        AssKey(vec![0])
    }

    fn basis(&self, n: usize) -> Vec<AssKey> {
        if n == 0 {
            return vec![];
        }
        perm::all(n).into_iter().map(AssKey).collect()
    }

    fn circ_basis(&self, p: &AssKey, i: usize, q: &AssKey) -> LinComb<AssKey> {
        let m = q.0.len();
        let mut word = Vec::with_capacity(p.0.len() + m - 1);
        for &x in &p.0 {
            if x == i {
                word.extend(q.0.iter().map(|&y| y + i));
            } else if x > i {
                word.push(x + m - 1);
            } else {
                word.push(x);
            }
        }
        LinComb::basis(AssKey(word))
    }

    fn act_basis(&self, p: &AssKey, sigma: &[usize]) -> LinComb<AssKey> {
        LinComb::basis(AssKey(p.0.iter().map(|&x| sigma[x]).collect()))
    }

    fn orbit_rep(&self, p: &AssKey) -> Option<AssKey> {
        Some(AssKey::identity(p.0.len()))
    }

    fn parse_key(&self, text: &str) -> Result<AssKey> {
        let t = text.trim();
        if t == "id" {
            return Ok(AssKey(vec![0]));
        }
        let body = t.strip_prefix('x').ok_or_else(|| parse_err(format!("expected `x<word>`, got `{t}`")))?;
        let w = decode_word(body)?;
        if w.is_empty() || !is_permutation(&w) {
            return Err(parse_err(format!("`{t}` is not a permutation word")));
        }
        Ok(AssKey(w))
    }
}

/// Right-normed bracket `[a_τ(1), [a_τ(2), …, [a_τ(n-1), a_n]…]]` of
/// `Lie(n)`, stored as `τ ∈ S_{n-1}` (zero-based). The empty word is the
/// identity of `Lie(1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieKey(pub Vec<usize>);

impl Basis for LieKey {
    fn kind(&self) -> &'static str {
        "lie"
    }
    fn encode(&self) -> String {
        encode_word("b", &self.0, self.0.len() + 1)
    }
}

fn z_sign_expansion(n: usize) -> LinComb<AssKey> {
    // σ ∈ Z_n: increasing up to the position of the largest letter, then
    // decreasing; sign (-1)^(n - σ^{-1}(n)) with one-based positions
    let mut out = LinComb::zero();
    for sigma in perm::all(n) {
        let top = sigma.iter().position(|&x| x == n - 1).expect("largest letter present");
        let rising = sigma[..=top].windows(2).all(|w| w[0] < w[1]);
        let falling = sigma[top..].windows(2).all(|w| w[0] > w[1]);
        if rising && falling {
            let sign: Scalar = if (n - (top + 1)).is_multiple_of(2) { int(1) } else { int(-1) };
            out.add_term(AssKey(sigma), sign);
        }
    }
    out
}

/// Images in `Ass(n)` of the right-normed brackets
/// `[a_τ(1), [a_τ(2), …, [a_τ(n-1), a_n]…]]`, one per `τ ∈ S_{n-1}` in
/// lexicographic order of `τ`, computed from the signed `Z_n` expansion of
/// `[a_1, [a_2, …, [a_{n-1}, a_n]…]]` relabelled by `τ × (1)`.
pub fn lie_to_ass(n: usize) -> Vec<LinComb<AssKey>> {
    assert!(n >= 1);
    let base = z_sign_expansion(n);
    perm::all(n - 1)
        .into_iter()
        .map(|tau| {
            let mut relabel = tau.clone();
            relabel.push(n - 1);
            act(&AssOperad, &base, &relabel)
        })
        .collect()
}

impl LieKey {
    pub fn to_ass(&self) -> LinComb<AssKey> {
        let n = self.0.len() + 1;
        let mut relabel = self.0.clone();
        relabel.push(n - 1);
        act(&AssOperad, &z_sign_expansion(n), &relabel)
    }

    /// Coordinates of a Lie element given by its image in `Ass(n)`: the
    /// bracket for `τ` is the only basis bracket containing the word
    /// `a_τ(1) … a_τ(n-1) a_n`, with coefficient one.
    pub fn from_ass(x: &LinComb<AssKey>) -> LinComb<LieKey> {
        let mut out = LinComb::zero();
        for (k, c) in x.iter() {
            let n = k.0.len();
            if k.0[n - 1] == n - 1 {
                out.add_term(LieKey(k.0[..n - 1].to_vec()), c.clone());
            }
        }
        out
    }
}

/// The Lie operad, realised inside `Ass` through commutator expansion.
#[derive(Clone, Copy, Debug, Default)]
pub struct LieOperad;

impl Operad for LieOperad {
    type Key = LieKey;

    fn name(&self) -> &str {
        "lie"
    }

    fn arity(&self, key: &LieKey) -> usize {
        key.0.len() + 1
    }

    fn identity(&self) -> LieKey {
        LieKey(vec![])
    }

    fn basis(&self, n: usize) -> Vec<LieKey> {
        if n == 0 {
            return vec![];
        }
        perm::all(n - 1).into_iter().map(LieKey).collect()
    }

    fn circ_basis(&self, p: &LieKey, i: usize, q: &LieKey) -> LinComb<LieKey> {
        let composed = circ(&AssOperad, &p.to_ass(), i, &q.to_ass()).expect("index within arity");
        LieKey::from_ass(&composed)
    }

    fn act_basis(&self, p: &LieKey, sigma: &[usize]) -> LinComb<LieKey> {
        LieKey::from_ass(&act(&AssOperad, &p.to_ass(), sigma))
    }

    fn orbit_rep(&self, _p: &LieKey) -> Option<LieKey> {
        None
    }

    fn parse_key(&self, text: &str) -> Result<LieKey> {
        let t = text.trim();
        if t == "id" {
            return Ok(LieKey(vec![]));
        }
        let body = t.strip_prefix('b').ok_or_else(|| parse_err(format!("expected `b<word>`, got `{t}`")))?;
        let w = decode_word(body)?;
        if !is_permutation(&w) {
            return Err(parse_err(format!("`{t}` is not a permutation word")));
        }
        Ok(LieKey(w))
    }
}
