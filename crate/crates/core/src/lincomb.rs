//! Finite formal linear combinations with exact rational coefficients.
//!
//! A [`LinComb`] is a sparse map from basis keys to non-zero scalars. Keys are
//! ordinary Rust values with a total order; each domain type also knows how to
//! print itself as a canonical string through [`Basis`], which is what the
//! serialised forms and the type-erased [`BasisKey`] are built from.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{parse_err, Error, Result};
use crate::scalar::{self, Scalar};

/// A basis element with a canonical text encoding.
///
/// Two values must be equal exactly when their encodings are equal.
pub trait Basis: Sized {
    /// Short tag naming the family of basis elements (`"com"`, `"graph"`, ...).
    fn kind(&self) -> &'static str;
    fn encode(&self) -> String;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Re-index through `f`, summing coefficients of keys that collide.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a map from keys to combinations.
    pub fn flat_map<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Formal tensor product: keys become pairs.
    pub fn tensor<K2: Ord + Clone>(&self, other: &LinComb<K2>) -> LinComb<(K, K2)> {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    /// Bilinear product induced by a product of keys.
    pub fn product_with<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinComb<K2>,
        mut mul: impl FnMut(&K, &K2) -> K3,
    ) -> LinComb<K3> {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(mul(a, b), ca * cb);
            }
        }
        out
    }

    /// Sum of coefficients over all keys.
    pub fn total(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |acc, c| acc + c)
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> AddAssign<LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: LinComb<K>) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: Self) -> LinComb<K> {
        self += rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: Self) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-Scalar::one())
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        (&self).neg()
    }
}

impl<K: Ord + Clone> Mul<&Scalar> for &LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, rhs: &Scalar) -> LinComb<K> {
        self.scale(rhs)
    }
}

impl<K: Ord + Clone> std::iter::Sum for LinComb<K> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut out = Self::zero();
        for x in iter {
            out += x;
        }
        out
    }
}

/// Evaluate a dual combination against a primal one over the same basis:
/// `<p*, q> = 1` when `p == q`, else `0`.
pub fn pair_same_basis<K: Ord + Clone>(dual: &LinComb<K>, primal: &LinComb<K>) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, c) in dual.iter() {
        if let Some(d) = primal.terms.get(k) {
            acc += c * d;
        }
    }
    acc
}

/// Type-erased basis key: family tag, dual flag and canonical encoding.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub kind: String,
    pub dual: bool,
    pub code: String,
}

impl BasisKey {
    pub fn of<B: Basis>(b: &B) -> Self {
        Self { kind: b.kind().to_string(), dual: false, code: b.encode() }
    }

    pub fn dual_of<B: Basis>(b: &B) -> Self {
        Self { kind: b.kind().to_string(), dual: true, code: b.encode() }
    }

    /// Byte string used for ordering serialised output.
    pub fn bytes(&self) -> String {
        format!("{}{}:{}", self.kind, if self.dual { "*" } else { "" }, self.code)
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bytes())
    }
}

impl<K: Ord + Clone + Basis> LinComb<K> {
    pub fn to_keyed(&self) -> LinComb<BasisKey> {
        self.map_keys(BasisKey::of)
    }

    pub fn to_dual_keyed(&self) -> LinComb<BasisKey> {
        self.map_keys(BasisKey::dual_of)
    }
}

/// The canonical pairing between dual-basis keys and primal keys.
///
/// Fails when a key on the left is not a dual key, a key on the right is a
/// dual key, or two different basis families meet.
pub fn pair(dual: &LinComb<BasisKey>, primal: &LinComb<BasisKey>) -> Result<Scalar> {
    let mut kind: Option<&str> = None;
    for k in dual.keys() {
        if !k.dual {
            return Err(Error::KindMismatch(k.bytes(), "expected a dual key".into()));
        }
    }
    for k in primal.keys() {
        if k.dual {
            return Err(Error::KindMismatch(k.bytes(), "expected a primal key".into()));
        }
    }
    for k in dual.keys().chain(primal.keys()) {
        match kind {
            None => kind = Some(&k.kind),
            Some(seen) if seen != k.kind => {
                return Err(Error::KindMismatch(seen.to_string(), k.kind.clone()));
            }
            _ => {}
        }
    }
    let mut acc = Scalar::zero();
    for (k, c) in dual.iter() {
        let primal_key = BasisKey { dual: false, ..k.clone() };
        acc += c * primal.coeff(&primal_key);
    }
    Ok(acc)
}

/// `(key, "num/den")` pairs sorted by the byte order of the key encodings.
pub fn to_pairs<K: Ord + Clone>(x: &LinComb<K>, encode: impl Fn(&K) -> String) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> =
        x.iter().map(|(k, c)| (encode(k), scalar::to_fraction_string(c))).collect();
    out.sort();
    out
}

pub fn to_json<K: Ord + Clone>(x: &LinComb<K>, encode: impl Fn(&K) -> String) -> serde_json::Value {
    serde_json::Value::Array(
        to_pairs(x, encode)
            .into_iter()
            .map(|(k, c)| serde_json::json!([k, c]))
            .collect(),
    )
}

pub fn from_json<K: Ord + Clone>(
    value: &serde_json::Value,
    decode: impl Fn(&str) -> Result<K>,
) -> Result<LinComb<K>> {
    let arr = value.as_array().ok_or_else(|| parse_err("expected an array of [key, coeff] pairs"))?;
    let mut out = LinComb::zero();
    for item in arr {
        let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(|| parse_err("expected [key, coeff]"))?;
        let key = pair[0].as_str().ok_or_else(|| parse_err("key must be a string"))?;
        let coeff = pair[1].as_str().ok_or_else(|| parse_err("coefficient must be a string"))?;
        out.add_term(decode(key)?, scalar::parse_scalar(coeff)?);
    }
    Ok(out)
}

/// Split `a + 2 b - c` into signed terms. A `+` or `-` separates terms only
/// at bracket depth zero, and only when it leads the text or stands between
/// spaces.
fn split_terms(text: &str) -> Vec<(bool, String)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for (i, &ch) in chars.iter().enumerate() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        let spaced = i > 0 && chars[i - 1] == ' ' && chars.get(i + 1) == Some(&' ');
        let leading = current.trim().is_empty();
        if depth == 0 && (ch == '+' || ch == '-') && (spaced || leading) {
            if !current.trim().is_empty() {
                out.push((negative, current.trim().to_string()));
            }
            current.clear();
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if !current.trim().is_empty() {
        out.push((negative, current.trim().to_string()));
    }
    out
}

/// Parse the `render` format: terms `[coeff ]key` joined by ` + ` / ` - `,
/// or `0`.
pub fn parse_lincomb<K: Ord + Clone>(text: &str, decode: impl Fn(&str) -> Result<K>) -> Result<LinComb<K>> {
    if text.trim() == "0" {
        return Ok(LinComb::zero());
    }
    let terms = split_terms(text);
    if terms.is_empty() {
        return Err(parse_err("empty linear combination"));
    }
    let mut out = LinComb::zero();
    for (negative, term) in terms {
        let (coeff, key) = match term.split_once(' ') {
            Some((c, rest)) if scalar::parse_scalar(c).is_ok() => (scalar::parse_scalar(c)?, decode(rest.trim())?),
            _ => (scalar::one(), decode(&term)?),
        };
        out.add_term(key, if negative { -coeff } else { coeff });
    }
    Ok(out)
}

/// Human-readable `a + 2 b - 1/3 c` rendering; `0` for the empty sum.
pub fn render<K: Ord + Clone>(x: &LinComb<K>, show: impl Fn(&K) -> String) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut items: Vec<(String, &Scalar)> = x.iter().map(|(k, c)| (show(k), c)).collect();
    items.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = String::new();
    for (i, (key, c)) in items.into_iter().enumerate() {
        let neg = scalar::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&key);
        } else {
            out.push_str(&scalar::to_short_string(&mag));
            out.push(' ');
            out.push_str(&key);
        }
    }
    out
}
