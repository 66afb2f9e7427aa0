//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they are plain sequential iterators with the same results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::lincomb::LinComb;

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Map every item to a linear combination and sum the results.
pub fn sum_map<T, K, F>(items: &[T], f: F) -> LinComb<K>
where
    T: Sync,
    K: Ord + Clone + Send,
    F: Fn(&T) -> LinComb<K> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items
            .par_iter()
            .map(f)
            .reduce(LinComb::zero, |mut a, b| {
                a += b;
                a
            })
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).sum()
    }
}

/// `true` when `pred` holds for every item; otherwise the first failing item
/// in input order.
pub fn find_first_failure<T, F>(items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().position_first(|x| !pred(x))
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().position(|x| !pred(x))
    }
}
