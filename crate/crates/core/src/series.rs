//! The groups `G_P`, `Ḡ_P` of operad series under composition, the Lie
//! algebras `L_P`, `L̄_P`, and the character picture over `H_P`.

use std::fmt::Write as _;

use crate::error::{parse_err, Error, Result};
use crate::hopf::{ConnectedBialgebra, OperadHopf, Tensor2, Word};
use crate::lincomb::{parse_lincomb, render, Basis, LinComb};
use crate::operad::{circ, gamma, to_coinvariants, ComKey, ComOperad, Operad};
use crate::par;
use crate::perm;
use crate::scalar::{self, Scalar};

/// `id + p_2 + … + p_N`: one component per arity, the arity-one part fixed
/// to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadSeries<K: Ord + Clone> {
    order: usize,
    coinvariant: bool,
    components: Vec<LinComb<K>>,
}

impl<K: Ord + Clone> OperadSeries<K> {
    pub fn identity(order: usize) -> Self {
        Self { order, coinvariant: false, components: vec![LinComb::zero(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_coinvariant(&self) -> bool {
        self.coinvariant
    }

    /// Component of arity `n >= 2`.
    pub fn component(&self, n: usize) -> &LinComb<K> {
        &self.components[n]
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::TruncationMismatch(self.order, other.order));
        }
        if self.coinvariant != other.coinvariant {
            return Err(Error::KindMismatch("series".into(), "coinvariant series".into()));
        }
        Ok(())
    }
}

impl<K: Ord + Clone + Send + Sync> OperadSeries<K> {
    /// Series from components for arities `2..=order`; checks arities.
    pub fn new<O: Operad<Key = K>>(op: &O, order: usize, components: Vec<(usize, LinComb<K>)>) -> Result<Self> {
        let mut s = Self::identity(order);
        for (n, x) in components {
            if n < 2 || n > order {
                return Err(Error::DegreeOverflow { degree: n, cap: order });
            }
            if let Some(k) = x.keys().find(|k| op.arity(k) != n) {
                return Err(Error::ArityMismatch { expected: n, found: op.arity(k) });
            }
            s.components[n] += x;
        }
        Ok(s)
    }

    fn full<O: Operad<Key = K>>(&self, op: &O, n: usize) -> LinComb<K> {
        if n == 1 {
            LinComb::basis(op.identity())
        } else {
            self.components[n].clone()
        }
    }

    fn finish<O: Operad<Key = K>>(&self, op: &O, x: LinComb<K>) -> Result<LinComb<K>> {
        if self.coinvariant {
            to_coinvariants(op, &x)
        } else {
            Ok(x)
        }
    }

    /// Arity-`n` component of `self ∘ g`.
    fn compose_component<O: Operad<Key = K>>(&self, op: &O, g: &Self, n: usize) -> Result<LinComb<K>> {
        let mut acc = LinComb::zero();
        for comp in perm::compositions(n) {
            let p = self.full(op, comp.len());
            if p.is_zero() {
                continue;
            }
            let qs: Vec<LinComb<K>> = comp.iter().map(|&m| g.full(op, m)).collect();
            if qs.iter().any(LinComb::is_zero) {
                continue;
            }
            acc += gamma(op, &p, &qs)?;
        }
        self.finish(op, acc)
    }

    /// `(Σ p_n) ∘ (Σ q_m) = Σ γ(p_n; q_{m_1}, …, q_{m_n})`, truncated.
    pub fn compose<O: Operad<Key = K>>(&self, op: &O, g: &Self) -> Result<Self> {
        self.same_shape(g)?;
        let arities: Vec<usize> = (2..=self.order).collect();
        let parts = par::map(&arities, |&n| self.compose_component(op, g, n));
        let mut out = Self { order: self.order, coinvariant: self.coinvariant, components: vec![LinComb::zero(); self.order + 1] };
        for (n, part) in arities.into_iter().zip(parts) {
            out.components[n] = part?;
        }
        Ok(out)
    }

    /// The two-sided inverse: solved arity by arity from `f ∘ g = id`, then
    /// `g ∘ f = id` is checked.
    pub fn invert<O: Operad<Key = K>>(&self, op: &O) -> Result<Self> {
        let mut g = Self { order: self.order, coinvariant: self.coinvariant, components: vec![LinComb::zero(); self.order + 1] };
        for n in 2..=self.order {
            // with g_n = 0 the arity-n part of f ∘ g is the correction to cancel
            let defect = self.compose_component(op, &g, n)?;
            g.components[n] = -defect;
        }
        let id = Self { order: self.order, coinvariant: self.coinvariant, components: vec![LinComb::zero(); self.order + 1] };
        if self.compose(op, &g)? != id || g.compose(op, self)? != id {
            return Err(Error::AxiomViolation {
                axiom: "series inverse".into(),
                witness: "left and right inverses differ".into(),
            });
        }
        Ok(g)
    }

    /// Image in `Ḡ_P`: every key replaced by its orbit representative.
    pub fn to_coinvariants<O: Operad<Key = K>>(&self, op: &O) -> Result<Self> {
        let mut out = self.clone();
        for n in 2..=self.order {
            out.components[n] = to_coinvariants(op, &self.components[n])?;
        }
        out.coinvariant = true;
        Ok(out)
    }

    /// The character `χ_f` on a generator `p*`: the coefficient of `p` in `f`.
    pub fn character_gen<O: Operad<Key = K>>(&self, op: &O, g: &K) -> Scalar {
        let n = op.arity(g);
        if n == 1 {
            return scalar::one();
        }
        if n > self.order {
            return scalar::zero();
        }
        self.components[n].coeff(g)
    }

    /// `χ_f` extended multiplicatively to words.
    pub fn character<O: Operad<Key = K>>(&self, op: &O, x: &LinComb<Word<K>>) -> Scalar {
        let mut total = scalar::zero();
        for (w, c) in x.iter() {
            let mut v = c.clone();
            for g in &w.0 {
                v *= self.character_gen(op, g);
            }
            total += v;
        }
        total
    }

    pub fn to_text(&self) -> String
    where
        K: Basis,
    {
        let mut out = String::new();
        for n in 2..=self.order {
            let _ = writeln!(out, "{n}: {}", render(&self.components[n], Basis::encode));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value
    where
        K: Basis,
    {
        let comps: serde_json::Map<String, serde_json::Value> = (2..=self.order)
            .map(|n| (n.to_string(), crate::lincomb::to_json(&self.components[n], Basis::encode)))
            .collect();
        serde_json::json!({ "order": self.order, "components": comps })
    }

    /// Parse lines `n: <combination>`; missing arities are zero.
    pub fn parse<O: Operad<Key = K>>(op: &O, order: usize, text: &str) -> Result<Self> {
        let mut comps = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (n, body) = line.split_once(':').ok_or_else(|| parse_err(format!("expected `n: …`, got `{line}`")))?;
            let n: usize = n.trim().parse().map_err(|_| parse_err(format!("bad arity `{n}`")))?;
            comps.push((n, parse_lincomb(body, |k| op.parse_key(k))?));
        }
        Self::new(op, order, comps)
    }
}

/// `(χ_f ⋆ χ_g)(x) = (χ_f ⊗ χ_g)Δ(x)` for a Hopf element `x`.
pub fn convolution<O: Operad>(
    op: &O,
    f: &OperadSeries<O::Key>,
    g: &OperadSeries<O::Key>,
    delta: &Tensor2<O::Key>,
) -> Scalar {
    let mut total = scalar::zero();
    for ((a, b), c) in delta.iter() {
        total += c
            * f.character(op, &LinComb::basis(a.clone()))
            * g.character(op, &LinComb::basis(b.clone()));
    }
    total
}

/// Compare `χ_{f∘g}` with `χ_f ⋆ χ_g` on every generator of `hopf`.
/// Returns the first generator where they differ.
pub fn check_character_correspondence<O: Operad>(
    hopf: &OperadHopf<'_, O>,
    f: &OperadSeries<O::Key>,
    g: &OperadSeries<O::Key>,
) -> Result<Option<O::Key>> {
    let op = hopf.operad();
    let fg = f.compose(op, g)?;
    let gens = hopf.generators(hopf.max_degree());
    let results = par::map(&gens, |r| -> Result<bool> {
        let delta = hopf.coproduct_gen(r)?;
        Ok(convolution(op, f, g, &delta) == fg.character_gen(op, r))
    });
    for (r, ok) in gens.iter().zip(results) {
        if !ok? {
            return Ok(Some(r.clone()));
        }
    }
    Ok(None)
}

/// `[p, q] = Σ_i p ∘_i q − Σ_j q ∘_j p`, bilinear in mixed-arity inputs.
pub fn lie_bracket<O: Operad>(op: &O, p: &LinComb<O::Key>, q: &LinComb<O::Key>) -> Result<LinComb<O::Key>> {
    let mut out = LinComb::zero();
    for (a, ca) in p.iter() {
        for (b, cb) in q.iter() {
            let (pa, pb) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
            let mut term = LinComb::zero();
            for i in 0..op.arity(a) {
                term += circ(op, &pa, i, &pb)?;
            }
            for j in 0..op.arity(b) {
                term -= &circ(op, &pb, j, &pa)?;
            }
            out.add_scaled(&term, &(ca * cb));
        }
    }
    Ok(out)
}

/// Com series as a polynomial: `e_n ↦ x^n`, identity `x`.
pub fn com_to_polynomial(f: &OperadSeries<ComKey>) -> Vec<Scalar> {
    let mut coeffs = vec![scalar::zero(); f.order + 1];
    coeffs[1] = scalar::one();
    for n in 2..=f.order {
        coeffs[n] = f.components[n].coeff(&ComKey(n));
    }
    coeffs
}

pub fn com_from_polynomial(coeffs: &[Scalar], order: usize) -> Result<OperadSeries<ComKey>> {
    if coeffs.get(1) != Some(&scalar::one()) || !coeffs.first().is_none_or(|c| *c == scalar::zero()) {
        return Err(parse_err("a group element starts with exactly `x`"));
    }
    let comps = (2..=order)
        .filter_map(|n| coeffs.get(n).filter(|c| **c != scalar::zero()).map(|c| (n, LinComb::term(ComKey(n), c.clone()))))
        .collect();
    if coeffs.len() > order + 1 && coeffs[order + 1..].iter().any(|c| *c != scalar::zero()) {
        return Err(Error::DegreeOverflow { degree: coeffs.len() - 1, cap: order });
    }
    OperadSeries::new(&ComOperad, order, comps)
}

/// `x - x^2 + 2x^3 - 1/2x^4`.
pub fn format_polynomial(coeffs: &[Scalar]) -> String {
    let mut out = String::new();
    for (n, c) in coeffs.iter().enumerate() {
        if *c == scalar::zero() {
            continue;
        }
        let negative = scalar::is_negative(c);
        let mag = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let monomial = match n {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{n}"),
        };
        if mag == scalar::one() && n > 0 {
            out.push_str(&monomial);
        } else {
            out.push_str(&scalar::to_short_string(&mag));
            out.push_str(&monomial);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parse the output of [`format_polynomial`].
pub fn parse_polynomial(text: &str) -> Result<Vec<Scalar>> {
    let mut coeffs: Vec<Scalar> = Vec::new();
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut current = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !current.is_empty() {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    if !current.is_empty() {
        terms.push(current);
    }
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term.trim_start_matches('+')),
        };
        let (coef_text, power) = match body.find('x') {
            Some(pos) => {
                let exp = &body[pos + 1..];
                let power = if exp.is_empty() {
                    1
                } else {
                    exp.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| parse_err(format!("bad monomial `{body}`")))?
                };
                (&body[..pos], power)
            }
            None => (body, 0),
        };
        let coef_text = coef_text.trim_end_matches('*');
        let c = if coef_text.is_empty() { scalar::one() } else { scalar::parse_scalar(coef_text)? };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, scalar::zero());
        }
        coeffs[power] += c * scalar::int(sign);
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::AssOperad;
    use crate::scalar::int;

    fn poly(c: &[i64]) -> Vec<Scalar> {
        c.iter().map(|&v| int(v)).collect()
    }

    /// Independent oracle: truncated power-series substitution `f(g(x))`.
    fn substitute(f: &[Scalar], g: &[Scalar], order: usize) -> Vec<Scalar> {
        let mul = |a: &[Scalar], b: &[Scalar]| {
            let mut r = vec![scalar::zero(); order + 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    if i + j <= order {
                        r[i + j] += x * y;
                    }
                }
            }
            r
        };
        let mut out = vec![scalar::zero(); order + 1];
        let mut power = vec![scalar::zero(); order + 1];
        power[0] = scalar::one();
        for c in f.iter().take(order + 1) {
            for (o, p) in out.iter_mut().zip(&power) {
                *o += c * p;
            }
            power = mul(&power, g);
        }
        out
    }

    #[test]
    fn com_composition_is_substitution() {
        let f = com_from_polynomial(&poly(&[0, 1, 1]), 4).unwrap();
        let ff = f.compose(&ComOperad, &f).unwrap();
        assert_eq!(com_to_polynomial(&ff), poly(&[0, 1, 2, 2, 1]));
        assert_eq!(com_to_polynomial(&ff), substitute(&poly(&[0, 1, 1]), &poly(&[0, 1, 1]), 4));
    }

    #[test]
    fn com_inverse_catalan() {
        let f = com_from_polynomial(&poly(&[0, 1, 1]), 5).unwrap();
        let g = f.invert(&ComOperad).unwrap();
        assert_eq!(format_polynomial(&com_to_polynomial(&g)), "x - x^2 + 2x^3 - 5x^4 + 14x^5");
    }

    #[test]
    fn identity_is_neutral() {
        let f = com_from_polynomial(&poly(&[0, 1, 3, 0, -2]), 4).unwrap();
        let id = OperadSeries::identity(4);
        assert_eq!(f.compose(&ComOperad, &id).unwrap(), f);
        assert_eq!(id.compose(&ComOperad, &f).unwrap(), f);
        assert_eq!(id.invert(&ComOperad).unwrap(), id);
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        let f: OperadSeries<ComKey> = OperadSeries::identity(4);
        let g = OperadSeries::identity(5);
        assert!(f.compose(&ComOperad, &g).is_err());
    }

    #[test]
    fn com_commutation_relation() {
        for n in 2..=5 {
            for m in 2..=5 {
                let b = lie_bracket(&ComOperad, &LinComb::basis(ComKey(n)), &LinComb::basis(ComKey(m))).unwrap();
                assert_eq!(b, LinComb::term(ComKey(n + m - 1), int(n as i64 - m as i64)).filter(|_| n != m));
            }
        }
    }

    #[test]
    fn polynomial_text() {
        let c = parse_polynomial("x + x^2 - 1/2x^4").unwrap();
        assert_eq!(c, vec![int(0), int(1), int(1), int(0), scalar::frac(-1, 2)]);
        assert_eq!(format_polynomial(&c), "x + x^2 - 1/2x^4");
    }

    #[test]
    fn ass_double_inverse() {
        let op = AssOperad;
        let comps = vec![
            (2, LinComb::term(op.parse_key("x21").unwrap(), int(2))),
            (3, LinComb::term(op.parse_key("x132").unwrap(), int(-1))),
        ];
        let f = OperadSeries::new(&op, 4, comps).unwrap();
        let g = f.invert(&op).unwrap();
        assert_eq!(g.invert(&op).unwrap(), f);
        let text = f.to_text();
        assert_eq!(OperadSeries::parse(&op, 4, &text).unwrap(), f);
    }
}
