use crate::error::{parse_err, Result};
use crate::lincomb::{Basis, LinComb};
use crate::operad::Operad;

/// The generator `e_n` of `Com(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComKey(pub usize);

impl Basis for ComKey {
    fn kind(&self) -> &'static str {
        "com"
    }
    fn encode(&self) -> String {
        format!("e{}", self.0)
    }
}

/// Commutative associative algebras: `Com(n)` is one-dimensional and every
/// composition is `e_n ∘_i e_m = e_{n+m-1}`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComOperad;

impl Operad for ComOperad {
    type Key = ComKey;

    fn name(&self) -> &str {
        "com"
    }

    fn arity(&self, key: &ComKey) -> usize {
        key.0
    }

    fn identity(&self) -> ComKey {
        ComKey(1)
    }

    fn basis(&self, n: usize) -> Vec<ComKey> {
        if n == 0 {
            vec![]
        } else {
            vec![ComKey(n)]
        }
    }

    fn circ_basis(&self, p: &ComKey, _i: usize, q: &ComKey) -> LinComb<ComKey> {
        LinComb::basis(ComKey(p.0 + q.0 - 1))
    }

    fn act_basis(&self, p: &ComKey, _sigma: &[usize]) -> LinComb<ComKey> {
        LinComb::basis(*p)
    }

    fn orbit_rep(&self, p: &ComKey) -> Option<ComKey> {
        Some(*p)
    }

    fn parse_key(&self, text: &str) -> Result<ComKey> {
        let t = text.trim();
        if t == "id" {
            return Ok(ComKey(1));
        }
        t.strip_prefix('e')
            .and_then(|n| n.parse().ok())
            .filter(|&n: &usize| n >= 1)
            .map(ComKey)
            .ok_or_else(|| parse_err(format!("expected `e<n>`, got `{t}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{circ, gamma, gamma_keys};

    fn e(n: usize) -> LinComb<ComKey> {
        LinComb::basis(ComKey(n))
    }

    #[test]
    fn compositions() {
        let op = ComOperad;
        assert_eq!(circ(&op, &e(2), 0, &e(2)).unwrap(), e(3));
        assert_eq!(gamma(&op, &e(2), &[e(2), e(3)]).unwrap(), e(5));
        assert_eq!(gamma(&op, &e(1), &[e(4)]).unwrap(), e(4));
        assert_eq!(gamma_keys(&op, &ComKey(3), &[ComKey(1); 3]).unwrap(), e(3));
        assert!(gamma(&op, &e(2), &[e(2)]).is_err());
    }

    #[test]
    fn parse() {
        assert_eq!(ComOperad.parse_key("e4").unwrap(), ComKey(4));
        assert!(ComOperad.parse_key("e0").is_err());
        assert!(ComOperad.parse_key("x").is_err());
    }
}
