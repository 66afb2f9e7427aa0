//! Every axiom family in one run, as used by `verify all`.

use crate::bialgebra::{self, build_bca, BcaVariant, FiniteBialgebra};
use crate::ck::{ck_iso_check, CkGraphs, CkTrees};
use crate::combinat::LabelledGraph;
use crate::hopf::{verify, CheckResult, HopfVariant, OperadHopf, Report};
use crate::lincomb::LinComb;
use crate::operad::{
    check_associativity, check_equivariance, check_unit, AssOperad, ComKey, ComOperad, GraphOperad, GraphVariant,
    LieOperad, Operad, TmOperad,
};
use crate::par;
use crate::perm;
use crate::scalar::int;
use crate::series::lie_bracket;
use crate::wick::{composition_sides, QuadraticSpace, SymWord};

fn prefixed(prefix: &str, report: Report) -> Vec<CheckResult> {
    report
        .checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}: {}", c.name);
            c
        })
        .collect()
}

fn failed(name: &str, e: crate::Error) -> CheckResult {
    CheckResult { name: name.to_string(), checked: 0, witness: Some(e.to_string()) }
}

/// Associativity, equivariance and unit laws on a deterministic sample:
/// up to `limit` basis elements of each arity `2..=max_arity` on top,
/// inputs drawn from the identity and the first elements of arity two.
pub fn operad_laws<O: Operad>(op: &O, max_arity: usize, limit: usize) -> Vec<CheckResult> {
    let tops: Vec<O::Key> = (2..=max_arity).flat_map(|n| op.basis(n).into_iter().take(limit)).collect();
    let mut pool = vec![op.identity()];
    pool.extend(op.basis(2).into_iter().take(2));
    let mut cases = Vec::new();
    for p in &tops {
        let n = op.arity(p);
        let mut choice = vec![0usize; n];
        loop {
            let qs: Vec<O::Key> = choice.iter().map(|&c| pool[c].clone()).collect();
            let total: usize = qs.iter().map(|q| op.arity(q)).sum();
            let rs: Vec<O::Key> = (0..total).map(|i| pool[(i + n) % pool.len()].clone()).collect();
            cases.push((p.clone(), qs, rs));
            let mut i = 0;
            while i < n && choice[i] + 1 == pool.len() {
                choice[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            choice[i] += 1;
        }
    }
    let name = op.name().to_string();
    let assoc = par::map(&cases, |(p, qs, rs)| match check_associativity(op, p, qs, rs) {
        Ok(true) => None,
        Ok(false) => Some(format!("{p:?} with {qs:?}")),
        Err(e) => Some(e.to_string()),
    });
    let equiv = par::map(&cases, |(p, qs, _)| {
        let n = qs.len();
        let sigma: Vec<usize> = (0..n).rev().collect();
        let inner: Vec<perm::Perm> = qs.iter().map(|q| (0..op.arity(q)).rev().collect()).collect();
        match check_equivariance(op, p, qs, &sigma, &inner) {
            Ok(true) => None,
            Ok(false) => Some(format!("{p:?} with {qs:?}")),
            Err(e) => Some(e.to_string()),
        }
    });
    let unit = par::map(&tops, |p| match check_unit(op, p) {
        Ok(true) => None,
        Ok(false) => Some(format!("{p:?}")),
        Err(e) => Some(e.to_string()),
    });
    vec![
        CheckResult { name: format!("{name} operad: associativity"), checked: cases.len(), witness: assoc.into_iter().flatten().next() },
        CheckResult { name: format!("{name} operad: equivariance"), checked: cases.len(), witness: equiv.into_iter().flatten().next() },
        CheckResult { name: format!("{name} operad: unit"), checked: tops.len(), witness: unit.into_iter().flatten().next() },
    ]
}

fn operad_hopf_rows<O: Operad>(op: &O, variants: &[HopfVariant], max_degree: usize) -> Vec<CheckResult> {
    let mut rows = Vec::new();
    for &v in variants {
        let label = format!("{} {v}", op.name());
        match OperadHopf::new(op, v, max_degree) {
            Ok(h) => rows.extend(prefixed(&label, verify(&h, max_degree))),
            Err(e) => rows.push(failed(&label, e)),
        }
    }
    rows
}

/// `[e_n, e_m] = (n - m) e_{n+m-1}` for `2 <= n, m <= top`.
pub fn commutation_law(top: usize) -> CheckResult {
    let pairs: Vec<(usize, usize)> = (2..=top).flat_map(|n| (2..=top).map(move |m| (n, m))).collect();
    let bad = pairs.iter().find_map(|&(n, m)| {
        let b = lie_bracket(&ComOperad, &LinComb::basis(ComKey(n)), &LinComb::basis(ComKey(m)));
        let expected = LinComb::term(ComKey(n + m - 1), int(n as i64 - m as i64));
        match b {
            Ok(b) if b == expected => None,
            Ok(_) => Some(format!("[e{n}, e{m}]")),
            Err(e) => Some(e.to_string()),
        }
    });
    CheckResult { name: "com: commutation law".into(), checked: pairs.len(), witness: bad }
}

/// `τ^η ∘_1 τ^ζ = τ^{η ∘̃_1 ζ}` for graphs on at most two vertices with
/// valences `1..=3`, on the first argument tuple of each composite.
pub fn wick_small(space: &QuadraticSpace) -> CheckResult {
    let graphs: Vec<LabelledGraph> = (1..=2).flat_map(|n| LabelledGraph::enumerate(n, 1, 3)).collect();
    let mut pairs = Vec::new();
    for eta in &graphs {
        for zeta in &graphs {
            if eta.valence(0) == zeta.leg_count() {
                pairs.push((eta.clone(), zeta.clone()));
            }
        }
    }
    let d = space.dimension();
    let results = par::map(&pairs, |(eta, zeta)| {
        let shape = crate::operad::bijection_classes(eta, 0, zeta).remove(0).0;
        let args: Vec<SymWord> = (0..shape.vertex_count())
            .map(|v| {
                let words = SymWord::all(d, shape.valence(v));
                words[v % words.len()].clone()
            })
            .collect();
        match composition_sides(space, eta, 0, zeta, &args) {
            Ok((l, r)) if l == r => None,
            Ok(_) => Some(format!("η = {eta}, ζ = {zeta}")),
            Err(e) => Some(e.to_string()),
        }
    });
    CheckResult {
        name: format!("wick: composition law (d = {d})"),
        checked: pairs.len(),
        witness: results.into_iter().flatten().next(),
    }
}

fn bialgebra_rows(max_degree: usize) -> Vec<CheckResult> {
    let mut rows = Vec::new();
    let fixtures = [("kZ/2", bialgebra::KZ2), ("kS_3", bialgebra::KS3)];
    for (label, text) in fixtures {
        let a = match FiniteBialgebra::parse(text) {
            Ok(a) => a,
            Err(e) => {
                rows.push(failed(&format!("{label}: load"), e));
                continue;
            }
        };
        let top = (max_degree + 1).min(3);
        for n in 1..=top {
            for mut c in [bialgebra::check_ca_coassociativity(&a, n), bialgebra::check_ca_counit(&a, n)] {
                c.name = format!("{label}: {}", c.name);
                rows.push(c);
            }
        }
        let mut eq = bialgebra::check_ca_equivariance(&a, top);
        if a.is_commutative() {
            eq.name = format!("{label}: {}", eq.name);
        } else {
            // the law must fail: a pass here would contradict noncommutativity
            eq = CheckResult {
                name: format!("{label}: equivariance failure detected"),
                checked: eq.checked,
                witness: eq.passed().then(|| "equivariance unexpectedly holds".to_string()),
            };
        }
        rows.push(eq);
        let variants: &[BcaVariant] =
            if a.is_commutative() { &[BcaVariant::Tensor, BcaVariant::Symmetric] } else { &[BcaVariant::Tensor] };
        for &v in variants {
            for pinter in [false, true] {
                let what = format!("{label} {v}{}", if pinter { " C^>1" } else { "" });
                match build_bca(&a, v, pinter, top) {
                    Ok(b) => rows.extend(prefixed(&what, b.verify(top - 1))),
                    Err(e) => rows.push(failed(&what, e)),
                }
            }
        }
    }
    rows
}

/// Run every suite with Hopf degrees capped at `max_degree`.
pub fn verify_all(max_degree: usize) -> Vec<CheckResult> {
    let both = [HopfVariant::H, HopfVariant::Hbar];
    let mut rows = Vec::new();
    rows.extend(operad_laws(&ComOperad, 4, 4));
    rows.extend(operad_laws(&AssOperad, 3, 6));
    rows.extend(operad_laws(&LieOperad, 3, 6));
    rows.extend(operad_laws(&TmOperad, 3, 6));
    rows.extend(operad_laws(&GraphOperad::new(GraphVariant::Classes, 3), 2, 6));
    rows.extend(operad_laws(&GraphOperad::new(GraphVariant::AllBijections, 3), 2, 6));
    rows.extend(operad_laws(&GraphOperad::one_pi(), 2, 6));

    rows.extend(operad_hopf_rows(&ComOperad, &both, max_degree));
    rows.extend(operad_hopf_rows(&AssOperad, &both, max_degree));
    rows.extend(operad_hopf_rows(&TmOperad, &both, max_degree.min(3)));
    rows.extend(operad_hopf_rows(&GraphOperad::one_pi(), &both, max_degree.min(4)));
    rows.push(commutation_law(max_degree + 2));

    rows.extend(prefixed("ck trees", verify(&CkTrees::new(max_degree + 1), max_degree + 1)));
    rows.extend(prefixed("ck graphs", verify(&CkGraphs::new(max_degree), max_degree)));
    rows.push(match ck_iso_check(3) {
        Ok(r) => CheckResult {
            name: "ck graphs: symmetry-factor isomorphism".into(),
            checked: r.pairs_checked,
            witness: r.failures.first().map(|(a, b)| format!("{a} with {b}")),
        },
        Err(e) => failed("ck graphs: symmetry-factor isomorphism", e),
    });

    rows.push(wick_small(&QuadraticSpace::identity(1)));
    match QuadraticSpace::parse("1 1/2\n1/2 -1") {
        Ok(q) => rows.push(wick_small(&q)),
        Err(e) => rows.push(failed("wick: form", e)),
    }
    rows.extend(bialgebra_rows(max_degree));
    rows
}

/// Rows as produced by [`verify_all`], checked for at least one failure.
pub fn all_passed(rows: &[CheckResult]) -> bool {
    rows.iter().all(CheckResult::passed)
}
