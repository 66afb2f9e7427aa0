//! The cooperad `C_A(n) = A^{⊗n}` of a finite-dimensional bialgebra, the
//! bialgebras `B_{C_A}`, `B̄_{C_A}` and the Hopf algebras of the truncation
//! `C^{>1}_A`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::hopf::{self, ConnectedBialgebra, Report, Tensor2, Word};
use crate::lincomb::{parse_lincomb, LinComb};
use crate::par;
use crate::perm;
use crate::scalar::{int, parse_scalar, Scalar};

pub const KZ2: &str = include_str!("../fixtures/kz2.bialg");
pub const KS3: &str = include_str!("../fixtures/ks3.bialg");

/// Bialgebra given by structure constants on a labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBialgebra {
    labels: Vec<String>,
    unit: LinComb<usize>,
    counit: Vec<Scalar>,
    mul: Vec<Vec<LinComb<usize>>>,
    coprod: Vec<LinComb<(usize, usize)>>,
}

impl FiniteBialgebra {
    /// Read a table file and check the bialgebra axioms on the basis.
    ///
    /// ```text
    /// basis e g
    /// unit e
    /// counit g 1
    /// mul g g = e
    /// coprod g = g|g
    /// ```
    /// Entries that are not listed are zero.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut unit = None;
        let mut counit = Vec::new();
        let mut mul = Vec::new();
        let mut coprod = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: &str| parse_err(format!("line {}: {m}", lineno + 1));
            let (head, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("missing arguments"))?;
            let rest = rest.trim();
            if head == "basis" {
                if !labels.is_empty() {
                    return Err(err("basis given twice"));
                }
                labels = rest.split_whitespace().map(str::to_string).collect();
                let distinct: BTreeSet<&String> = labels.iter().collect();
                if distinct.len() != labels.len() {
                    return Err(err("repeated basis label"));
                }
                counit = vec![int(0); labels.len()];
                mul = vec![vec![LinComb::zero(); labels.len()]; labels.len()];
                coprod = vec![LinComb::zero(); labels.len()];
                continue;
            }
            if labels.is_empty() {
                return Err(err("`basis` must come first"));
            }
            let index = |l: &str| {
                labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| parse_err(format!("line {}: unknown basis element `{l}`", lineno + 1)))
            };
            match head {
                "unit" => unit = Some(parse_lincomb(rest, index)?),
                "counit" => {
                    let (l, v) = rest.split_once(char::is_whitespace).ok_or_else(|| err("expected `counit <x> <value>`"))?;
                    counit[index(l)?] = parse_scalar(v.trim())?;
                }
                "mul" => {
                    let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err("expected `mul <x> <y> = …`"))?;
                    let ops: Vec<&str> = lhs.split_whitespace().collect();
                    if ops.len() != 2 {
                        return Err(err("expected two factors"));
                    }
                    mul[index(ops[0])?][index(ops[1])?] = parse_lincomb(rhs.trim(), index)?;
                }
                "coprod" => {
                    let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err("expected `coprod <x> = …`"))?;
                    coprod[index(lhs.trim())?] = parse_lincomb(rhs.trim(), |t| {
                        let (a, b) = t.split_once('|').ok_or_else(|| parse_err(format!("expected `a|b`, got `{t}`")))?;
                        Ok((index(a)?, index(b)?))
                    })?;
                }
                other => return Err(err(&format!("unknown directive `{other}`"))),
            }
        }
        if labels.is_empty() {
            return Err(parse_err("no basis given"));
        }
        let unit = unit.ok_or_else(|| parse_err("no unit given"))?;
        let a = Self { labels, unit, counit, mul, coprod };
        a.check_axioms().into_result()?;
        Ok(a)
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| parse_err(format!("unknown basis element `{label}`")))
    }

    pub fn unit(&self) -> &LinComb<usize> {
        &self.unit
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &LinComb<usize> {
        &self.mul[i][j]
    }

    pub fn coproduct(&self, i: usize) -> &LinComb<(usize, usize)> {
        &self.coprod[i]
    }

    pub fn mul(&self, x: &LinComb<usize>, y: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&self.mul[*i][*j], &(a * b));
            }
        }
        out
    }

    /// Ordered product of basis elements; the unit for an empty list.
    pub fn product(&self, xs: &[usize]) -> LinComb<usize> {
        xs.iter().fold(self.unit.clone(), |acc, &x| self.mul(&acc, &LinComb::basis(x)))
    }

    fn counit_of(&self, x: &LinComb<usize>) -> Scalar {
        x.iter().fold(int(0), |acc, (i, c)| acc + c * &self.counit[*i])
    }

    fn coproduct_of(&self, x: &LinComb<usize>) -> LinComb<(usize, usize)> {
        let mut out = LinComb::zero();
        for (i, c) in x.iter() {
            out.add_scaled(&self.coprod[*i], c);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dimension();
        (0..d).all(|i| (0..d).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    /// Algebra, coalgebra and compatibility identities on the basis.
    pub fn check_axioms(&self) -> Report {
        let d = self.dimension();
        let basis: Vec<usize> = (0..d).collect();
        let name = |i: usize| self.labels[i].clone();
        let mut report = Report::default();

        let triples: Vec<(usize, usize, usize)> =
            (0..d).flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k)))).collect();
        let bad = triples.iter().find(|&&(i, j, k)| {
            self.mul(&self.mul[i][j], &LinComb::basis(k)) != self.mul(&LinComb::basis(i), &self.mul[j][k])
        });
        report.push("associativity", triples.len(), bad.map(|&(i, j, k)| format!("({}{}){} ≠ {}({}{})", name(i), name(j), name(k), name(i), name(j), name(k))));

        let bad = basis.iter().find(|&&i| {
            let x = LinComb::basis(i);
            self.mul(&self.unit, &x) != x || self.mul(&x, &self.unit) != x
        });
        report.push("unit", d, bad.map(|&i| format!("1·{} ≠ {}", name(i), name(i))));

        let bad = basis.iter().find(|&&i| {
            let delta = &self.coprod[i];
            let mut left: LinComb<(usize, usize, usize)> = LinComb::zero();
            let mut right = LinComb::zero();
            for ((a, b), c) in delta.iter() {
                for ((a1, a2), c1) in self.coprod[*a].iter() {
                    left.add_term((*a1, *a2, *b), c * c1);
                }
                for ((b1, b2), c2) in self.coprod[*b].iter() {
                    right.add_term((*a, *b1, *b2), c * c2);
                }
            }
            left != right
        });
        report.push("coassociativity", d, bad.map(|&i| format!("Δ not coassociative on {}", name(i))));

        let bad = basis.iter().find(|&&i| {
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for ((a, b), c) in self.coprod[i].iter() {
                left.add_term(*b, c * &self.counit[*a]);
                right.add_term(*a, c * &self.counit[*b]);
            }
            left != LinComb::basis(i) || right != LinComb::basis(i)
        });
        report.push("counit", d, bad.map(|&i| format!("counit law fails on {}", name(i))));

        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
        let bad = pairs.iter().find(|&&(i, j)| {
            let lhs = self.coproduct_of(&self.mul[i][j]);
            let mut prod = LinComb::zero();
            for ((a, b), c) in self.coprod[i].iter() {
                for ((x, y), e) in self.coprod[j].iter() {
                    let left = &self.mul[*a][*x];
                    let right = &self.mul[*b][*y];
                    prod.add_scaled(&left.tensor(right), &(c * e));
                }
            }
            lhs != prod || self.counit_of(&self.mul[i][j]) != &self.counit[i] * &self.counit[j]
        });
        let unit_ok = self.coproduct_of(&self.unit) == self.unit.tensor(&self.unit) && self.counit_of(&self.unit) == int(1);
        let witness = bad
            .map(|&(i, j)| format!("Δ or ε not multiplicative on {}·{}", name(i), name(j)))
            .or_else(|| (!unit_ok).then(|| "Δ(1) ≠ 1⊗1 or ε(1) ≠ 1".to_string()));
        report.push("compatibility", pairs.len() + 1, witness);
        report
    }

    pub fn show_tuple(&self, t: &[usize]) -> String {
        format!("({})", t.iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join(","))
    }

    pub fn parse_tuple(&self, text: &str) -> Result<Tuple> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(format!("expected `(a,b,…)`, got `{text}`")))?;
        inner.split(',').map(|l| self.index(l.trim())).collect()
    }

    /// All basis tuples of length `n`.
    pub fn tuples(&self, n: usize) -> Vec<Tuple> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t: Tuple| {
                    (0..self.dimension()).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }
}

/// Basis element of `A^{⊗n}`: a tuple of basis indices of `A`.
pub type Tuple = Vec<usize>;

/// Terms `outer ⊗ (inner_1, …, inner_k)` of a cocomposition.
pub type Cocomposition = LinComb<(Tuple, Vec<Tuple>)>;

fn check_parts(n: usize, parts: &[usize]) -> Result<()> {
    if parts.iter().sum::<usize>() != n || parts.contains(&0) || parts.is_empty() {
        return Err(Error::InvalidPartition { total: n, parts: parts.to_vec() });
    }
    Ok(())
}

/// `γ*` of `C_A` on `(x_1, …, x_n)` for the composition `n = n_1 + … + n_k`:
/// Sweedler-expand every `x_i`, multiply the first legs blockwise and keep
/// the second legs as the inner tuples.
pub fn ca_cocomposition(a: &FiniteBialgebra, x: &[usize], parts: &[usize]) -> Result<Cocomposition> {
    check_parts(x.len(), parts)?;
    // expansions of x as (first legs, second legs)
    let mut sweedler: LinComb<(Tuple, Tuple)> = LinComb::basis((vec![], vec![]));
    for &xi in x {
        sweedler = sweedler.product_with(a.coproduct(xi), |(f, s), (p, q)| {
            let mut f = f.clone();
            let mut s = s.clone();
            f.push(*p);
            s.push(*q);
            (f, s)
        });
    }
    let mut out = LinComb::zero();
    for ((first, second), c) in sweedler.iter() {
        let mut outer: LinComb<Tuple> = LinComb::basis(vec![]);
        let mut inner = Vec::with_capacity(parts.len());
        let mut start = 0;
        for &m in parts {
            let block = a.product(&first[start..start + m]);
            outer = outer.product_with(&block, |t, &b| {
                let mut t = t.clone();
                t.push(b);
                t
            });
            inner.push(second[start..start + m].to_vec());
            start += m;
        }
        for (o, e) in outer.iter() {
            out.add_term((o.clone(), inner.clone()), c * e);
        }
    }
    Ok(out)
}

/// `γ*` summed over all compositions of `n`.
pub fn ca_cocomposition_all(a: &FiniteBialgebra, x: &[usize]) -> Result<Cocomposition> {
    let mut out = LinComb::zero();
    for parts in perm::compositions(x.len()) {
        out += ca_cocomposition(a, x, &parts)?;
    }
    Ok(out)
}

/// Both three-level expansions of `x` along `n = Σ n_i` and the grouping
/// `k = Σ k_r` of the outer arity: cocompose the outer factor again, or
/// cocompose along the coarse blocks and then inside each block.
type ThreeLevel = LinComb<(Tuple, Vec<Tuple>, Vec<Tuple>)>;

fn three_level(a: &FiniteBialgebra, x: &[usize], parts: &[usize], grouping: &[usize]) -> Result<(ThreeLevel, ThreeLevel)> {
    let mut left = LinComb::zero();
    for ((outer, inner), c) in ca_cocomposition(a, x, parts)?.iter() {
        for ((top, mid), e) in ca_cocomposition(a, outer, grouping)?.iter() {
            left.add_term((top.clone(), mid.clone(), inner.clone()), c * e);
        }
    }
    let mut coarse = Vec::new();
    let mut fine = Vec::new();
    let mut start = 0;
    for &kr in grouping {
        let block = &parts[start..start + kr];
        coarse.push(block.iter().sum::<usize>());
        fine.push(block.to_vec());
        start += kr;
    }
    let mut right: ThreeLevel = LinComb::zero();
    for ((top, blocks), c) in ca_cocomposition(a, x, &coarse)?.iter() {
        let mut acc: LinComb<(Vec<Tuple>, Vec<Tuple>)> = LinComb::basis((vec![], vec![]));
        for (block, sub) in blocks.iter().zip(&fine) {
            let piece = ca_cocomposition(a, block, sub)?;
            acc = acc.product_with(&piece, |(m, i), (o, inn)| {
                let mut m = m.clone();
                let mut i = i.clone();
                m.push(o.clone());
                i.extend(inn.iter().cloned());
                (m, i)
            });
        }
        for ((mid, inner), e) in acc.iter() {
            right.add_term((top.clone(), mid.clone(), inner.clone()), c * e);
        }
    }
    Ok((left, right))
}

/// Coassociativity of `γ*` on every basis tuple of length `n`, for every
/// composition and every regrouping of its blocks.
pub fn check_ca_coassociativity(a: &FiniteBialgebra, n: usize) -> hopf::CheckResult {
    let mut cases = Vec::new();
    for x in a.tuples(n) {
        for parts in perm::compositions(n) {
            for grouping in perm::compositions(parts.len()) {
                cases.push((x.clone(), parts.clone(), grouping));
            }
        }
    }
    let results = par::map(&cases, |(x, parts, grouping)| match three_level(a, x, parts, grouping) {
        Ok((l, r)) if l == r => None,
        Ok(_) => Some(format!("{} along {parts:?} regrouped {grouping:?}", a.show_tuple(x))),
        Err(e) => Some(e.to_string()),
    });
    hopf::CheckResult { name: format!("C_A coassociativity (n = {n})"), checked: cases.len(), witness: results.into_iter().flatten().next() }
}

/// `(ε ⊗ id)γ*_{(n)} = id = (id ⊗ ε^{⊗n})γ*_{(1,…,1)}` on tuples of length `n`.
pub fn check_ca_counit(a: &FiniteBialgebra, n: usize) -> hopf::CheckResult {
    let cases = a.tuples(n);
    let results = par::map(&cases, |x| {
        let x_comb = LinComb::basis(x.clone());
        let run = || -> Result<bool> {
            let mut left = LinComb::zero();
            for ((outer, inner), c) in ca_cocomposition(a, x, &[n])?.iter() {
                left.add_term(inner[0].clone(), c * a.counit(outer[0]));
            }
            let mut right = LinComb::zero();
            for ((outer, inner), c) in ca_cocomposition(a, x, &vec![1; n])?.iter() {
                let e = inner.iter().fold(int(1), |acc, t| acc * a.counit(t[0]));
                right.add_term(outer.clone(), c * &e);
            }
            Ok(left == x_comb && right == x_comb)
        };
        match run() {
            Ok(true) => None,
            Ok(false) => Some(format!("counit fails on {}", a.show_tuple(x))),
            Err(e) => Some(e.to_string()),
        }
    });
    hopf::CheckResult { name: format!("C_A counit (n = {n})"), checked: cases.len(), witness: results.into_iter().flatten().next() }
}

/// Compatibility of `γ*` with permutations inside the blocks and with
/// permutations of whole blocks, on all tuples of length `n`. The first
/// part needs `A` commutative.
pub fn check_ca_equivariance(a: &FiniteBialgebra, n: usize) -> hopf::CheckResult {
    let mut cases = Vec::new();
    for x in a.tuples(n) {
        for parts in perm::compositions(n) {
            cases.push((x.clone(), parts));
        }
    }
    let results = par::map(&cases, |(x, parts)| equivariance_witness(a, x, parts).unwrap_or_else(|e| Some(e.to_string())));
    hopf::CheckResult { name: format!("C_A equivariance (n = {n})"), checked: cases.len(), witness: results.into_iter().flatten().next() }
}

fn equivariance_witness(a: &FiniteBialgebra, x: &[usize], parts: &[usize]) -> Result<Option<String>> {
    let base = ca_cocomposition(a, x, parts)?;
    let mut starts = vec![0];
    for &m in parts {
        starts.push(starts.last().unwrap() + m);
    }
    // inside blocks: y[σ(j)] = x[j] permutes the inner tuples only
    for (i, &m) in parts.iter().enumerate() {
        for sigma in perm::all(m).into_iter().skip(1) {
            let mut y = x.to_vec();
            for j in 0..m {
                y[starts[i] + sigma[j]] = x[starts[i] + j];
            }
            let moved = base.map_keys(|(outer, inner)| {
                let mut inner = inner.clone();
                let mut block = inner[i].clone();
                for j in 0..m {
                    block[sigma[j]] = inner[i][j];
                }
                inner[i] = block;
                (outer.clone(), inner)
            });
            if ca_cocomposition(a, &y, parts)? != moved {
                return Ok(Some(format!(
                    "permuting block {} of {} by {:?} along {parts:?}",
                    i + 1,
                    a.show_tuple(x),
                    perm::inverse(&sigma).iter().map(|v| v + 1).collect::<Vec<_>>()
                )));
            }
        }
    }
    // whole blocks: block i of x becomes block τ(i)
    for tau in perm::all(parts.len()).into_iter().skip(1) {
        let tau_inv = perm::inverse(&tau);
        let new_parts: Vec<usize> = (0..parts.len()).map(|r| parts[tau_inv[r]]).collect();
        let y: Tuple = (0..parts.len()).flat_map(|r| x[starts[tau_inv[r]]..starts[tau_inv[r] + 1]].iter().copied()).collect();
        let moved = base.map_keys(|(outer, inner)| {
            let o = (0..parts.len()).map(|r| outer[tau_inv[r]]).collect();
            let i = (0..parts.len()).map(|r| inner[tau_inv[r]].clone()).collect();
            (o, i)
        });
        if ca_cocomposition(a, &y, &new_parts)? != moved {
            return Ok(Some(format!("permuting the blocks of {} along {parts:?}", a.show_tuple(x))));
        }
    }
    Ok(None)
}

/// Tensor algebra on `⊕ C(n)` or symmetric algebra on the invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcaVariant {
    Tensor,
    Symmetric,
}

impl fmt::Display for BcaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BcaVariant::Tensor => "tensor",
            BcaVariant::Symmetric => "symmetric",
        })
    }
}

/// `B_{C_A}`, `B̄_{C_A}`, or with `pinter` set the Hopf algebras
/// `H_{C^{>1}_A}`, `H̄_{C^{>1}_A}`. Generators are tuples of length
/// `1..=max_arity` (at least 2 when `pinter`), of degree length minus one;
/// in the symmetric variant a sorted tuple stands for the sum of its
/// distinct rearrangements.
#[derive(Clone, Debug)]
pub struct Bca {
    a: FiniteBialgebra,
    variant: BcaVariant,
    pinter: bool,
    max_arity: usize,
}

pub fn build_bca(a: &FiniteBialgebra, variant: BcaVariant, pinter: bool, max_arity: usize) -> Result<Bca> {
    if variant == BcaVariant::Symmetric && !a.is_commutative() {
        return Err(Error::NotCommutative("the symmetric variant of B_{C_A} needs A commutative".into()));
    }
    Ok(Bca { a: a.clone(), variant, pinter, max_arity })
}

fn distinct_rearrangements(t: &[usize]) -> Vec<Tuple> {
    let mut cur = t.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while perm::next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn is_sorted(t: &[usize]) -> bool {
    t.windows(2).all(|w| w[0] <= w[1])
}

impl Bca {
    pub fn algebra(&self) -> &FiniteBialgebra {
        &self.a
    }

    pub fn variant(&self) -> BcaVariant {
        self.variant
    }

    pub fn is_pinter(&self) -> bool {
        self.pinter
    }

    fn min_arity(&self) -> usize {
        if self.pinter {
            2
        } else {
            1
        }
    }

    /// Coproduct of a generator written in all tuples, before the
    /// symmetric variant is read off in orbit sums.
    fn expanded_coproduct(&self, g: &Tuple) -> Result<Tensor2<Tuple>> {
        let members = match self.variant {
            BcaVariant::Tensor => vec![g.clone()],
            BcaVariant::Symmetric => distinct_rearrangements(g),
        };
        let commutative = self.variant == BcaVariant::Symmetric;
        let mut out = LinComb::zero();
        for x in &members {
            for ((outer, inner), c) in ca_cocomposition_all(&self.a, x)?.iter() {
                let mut coeff = c.clone();
                // in C^{>1} arity one collapses to the scalars through ε
                let left = if self.pinter && outer.len() == 1 {
                    coeff *= self.a.counit(outer[0]);
                    Word::unit()
                } else {
                    Word::gen(outer.clone())
                };
                let mut letters = Vec::new();
                for t in inner {
                    if self.pinter && t.len() == 1 {
                        coeff *= self.a.counit(t[0]);
                    } else {
                        letters.push(t.clone());
                    }
                }
                if commutative {
                    letters.sort();
                }
                out.add_term((left, Word(letters)), coeff);
            }
        }
        Ok(out)
    }

    /// Rewrite an expanded element of the symmetric variant back into
    /// products of orbit sums, failing if it is not invariant.
    fn expand_word(&self, w: &Word<Tuple>) -> LinComb<Word<Tuple>> {
        let mut acc = LinComb::basis(Word::unit());
        for g in w.letters() {
            let orbit: LinComb<Word<Tuple>> = distinct_rearrangements(g).into_iter().map(|t| (Word::gen(t), int(1))).collect();
            acc = acc.product_with(&orbit, |a, b| a.mul(b, true));
        }
        acc
    }

    fn read_orbits(&self, full: &Tensor2<Tuple>) -> Tensor2<Tuple> {
        full.filter(|(l, r)| l.letters().iter().chain(r.letters()).all(|t| is_sorted(t)))
    }

    /// `true` when the coproduct of `g` lies in the span of products of
    /// orbit sums (always, in the tensor variant).
    pub fn coproduct_is_invariant(&self, g: &Tuple) -> Result<bool> {
        if self.variant == BcaVariant::Tensor {
            return Ok(true);
        }
        let full = self.expanded_coproduct(g)?;
        let read = self.read_orbits(&full);
        let mut back = LinComb::zero();
        for ((l, r), c) in read.iter() {
            back.add_scaled(&self.expand_word(l).tensor(&self.expand_word(r)), c);
        }
        Ok(back == full)
    }

    fn word_counit(&self, w: &Word<Tuple>) -> Scalar {
        w.letters().iter().fold(int(1), |acc, t| if t.len() == 1 { acc * self.a.counit(t[0]) } else { int(0) })
    }

    /// Axiom checks up to `max_degree`: coassociativity and counit on
    /// generators and products of two, invariance for the symmetric variant,
    /// and the full Hopf verification in the truncated case.
    pub fn verify(&self, max_degree: usize) -> Report {
        let gens = self.generators(max_degree);
        if self.pinter {
            let mut report = hopf::verify(self, max_degree);
            if self.variant == BcaVariant::Symmetric {
                self.push_invariance(&mut report, &gens);
            }
            return report;
        }
        let commutative = self.variant == BcaVariant::Symmetric;
        let mut words: Vec<Word<Tuple>> = gens.iter().cloned().map(Word::gen).collect();
        for g in &gens {
            for h in &gens {
                if self.degree(g) + self.degree(h) <= max_degree {
                    words.push(Word::gen(g.clone()).mul(&Word::gen(h.clone()), commutative));
                }
            }
        }
        let mut report = Report::default();
        let results = par::map(&words, |w| -> Result<Option<String>> {
            let delta = hopf::coproduct_word(self, w)?;
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for ((a, b), c) in delta.iter() {
                for ((a1, a2), c1) in hopf::coproduct_word(self, a)?.iter() {
                    left.add_term((a1.clone(), a2.clone(), b.clone()), c * c1);
                }
                for ((b1, b2), c2) in hopf::coproduct_word(self, b)?.iter() {
                    right.add_term((a.clone(), b1.clone(), b2.clone()), c * c2);
                }
            }
            Ok((left != right).then(|| format!("Δ not coassociative on {}", hopf::show_word(self, w))))
        });
        let witness = results.into_iter().filter_map(|r| r.unwrap_or_else(|e| Some(e.to_string()))).next();
        report.push("coassociativity", words.len(), witness);

        let results = par::map(&words, |w| -> Result<Option<String>> {
            let delta = hopf::coproduct_word(self, w)?;
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for ((a, b), c) in delta.iter() {
                left.add_term(b.clone(), c * &self.word_counit(a));
                right.add_term(a.clone(), c * &self.word_counit(b));
            }
            let x = LinComb::basis(w.clone());
            Ok((left != x || right != x).then(|| format!("counit fails on {}", hopf::show_word(self, w))))
        });
        let witness = results.into_iter().filter_map(|r| r.unwrap_or_else(|e| Some(e.to_string()))).next();
        report.push("counit", words.len(), witness);

        if commutative {
            self.push_invariance(&mut report, &gens);
        }
        report
    }

    fn push_invariance(&self, report: &mut Report, gens: &[Tuple]) {
        let results = par::map(gens, |g| match self.coproduct_is_invariant(g) {
            Ok(true) => None,
            Ok(false) => Some(format!("Δ({}) leaves the invariants", self.show_gen(g))),
            Err(e) => Some(e.to_string()),
        });
        report.push("invariance", gens.len(), results.into_iter().flatten().next());
    }
}

impl ConnectedBialgebra for Bca {
    type Gen = Tuple;

    fn commutative(&self) -> bool {
        self.variant == BcaVariant::Symmetric
    }

    /// Length minus one; zero for the arity-one generators of the
    /// untruncated bialgebra, which is therefore not connected.
    fn degree(&self, g: &Tuple) -> usize {
        g.len() - 1
    }

    fn max_degree(&self) -> usize {
        self.max_arity - 1
    }

    fn generators(&self, max_degree: usize) -> Vec<Tuple> {
        let top = (max_degree + 1).min(self.max_arity);
        let mut out = Vec::new();
        for n in self.min_arity()..=top {
            for t in self.a.tuples(n) {
                if self.variant == BcaVariant::Tensor || is_sorted(&t) {
                    out.push(t);
                }
            }
        }
        out
    }

    fn coproduct_gen(&self, g: &Tuple) -> Result<Tensor2<Tuple>> {
        if g.len() > self.max_arity {
            return Err(Error::DegreeOverflow { degree: g.len() - 1, cap: self.max_arity - 1 });
        }
        if g.len() < self.min_arity() {
            return Err(parse_err(format!("{} is not a generator", self.a.show_tuple(g))));
        }
        let full = self.expanded_coproduct(g)?;
        Ok(match self.variant {
            BcaVariant::Tensor => full,
            BcaVariant::Symmetric => self.read_orbits(&full),
        })
    }

    fn show_gen(&self, g: &Tuple) -> String {
        self.a.show_tuple(g)
    }

    fn parse_gen(&self, text: &str) -> Result<Tuple> {
        let mut t = self.a.parse_tuple(text)?;
        if self.variant == BcaVariant::Symmetric {
            t.sort_unstable();
        }
        Ok(t)
    }
}
