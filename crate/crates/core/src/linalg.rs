//! Exact row reduction over the rationals, used for span and rank checks.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::lincomb::LinComb;

/// Incremental echelon basis. Every stored row has its smallest key as
/// pivot, with pivot coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        let mut floor: Option<K> = None;
        loop {
            let next = v
                .iter()
                .map(|(k, _)| k)
                .find(|k| floor.as_ref().is_none_or(|f| *k > f) && self.rows.contains_key(*k))
                .cloned();
            let Some(k) = next else { return v };
            let c = v.coeff(&k);
            v.add_scaled(&self.rows[&k], &-c);
            floor = Some(k);
        }
    }

    /// Insert `v`; returns `true` when it was independent of the stored rows.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        r = r.scale(&(num_rational::BigRational::one() / c));
        // keep stored rows reduced against the new pivot so `reduce` stays a
        // single forward sweep
        for row in self.rows.values_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

pub fn in_span<K: Ord + Clone>(vectors: &[LinComb<K>], v: &LinComb<K>) -> bool {
    let mut e = Echelon::new();
    for w in vectors {
        e.insert(w);
    }
    e.contains(v)
}
