//! Permutations in zero-based one-line notation: `p[j]` is the image of `j`.

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            return out;
        }
    }
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// `(a ∘ b)(j) = a(b(j))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&j| a[j]).collect()
}

fn block_starts(sizes: &[usize]) -> Vec<usize> {
    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        starts.push(acc);
        acc += s;
    }
    starts
}

/// The block permutation attached to `sigma` and block sizes `sizes`.
///
/// The source has consecutive blocks of sizes `sizes[sigma[0]], sizes[sigma[1]], ..`
/// and the `t`-th element of source block `j` goes to the `t`-th element of
/// block `sigma[j]` in the layout with block sizes `sizes`.
pub fn block_permutation(sigma: &[usize], sizes: &[usize]) -> Perm {
    let target_starts = block_starts(sizes);
    let mut out = Vec::with_capacity(sizes.iter().sum());
    for &s in sigma {
        for t in 0..sizes[s] {
            out.push(target_starts[s] + t);
        }
    }
    out
}

/// `σ_1 × … × σ_k` acting blockwise on consecutive blocks.
pub fn block_product(perms: &[Perm]) -> Perm {
    let mut out = Vec::new();
    let mut offset = 0;
    for p in perms {
        out.extend(p.iter().map(|&v| v + offset));
        offset += p.len();
    }
    out
}

/// All ordered compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Compositions of `n` with exactly `k` positive parts.
pub fn compositions_into(n: usize, k: usize) -> Vec<Vec<usize>> {
    compositions(n).into_iter().filter(|c| c.len() == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all(0).len(), 1);
        assert_eq!(all(4).len(), 24);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(compositions_into(5, 2).len(), 4);
    }

    #[test]
    fn inverse_and_compose() {
        for p in all(4) {
            assert_eq!(compose(&p, &inverse(&p)), identity(4));
        }
    }

    #[test]
    fn block_swap() {
        // swap a block of size 1 with a block of size 2
        assert_eq!(block_permutation(&[1, 0], &[1, 2]), vec![1, 2, 0]);
        assert_eq!(block_product(&[vec![0], vec![1, 0]]), vec![0, 2, 1]);
    }
}
