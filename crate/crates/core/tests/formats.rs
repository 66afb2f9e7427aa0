use std::collections::BTreeSet;

use operad_hopf::bialgebra::{self, FiniteBialgebra};
use operad_hopf::ck::CkTrees;
use operad_hopf::combinat::{admissible_cuts, RootedTree};
use operad_hopf::hopf::{element_json, parse_element, show_element, HopfVariant, OperadHopf};
use operad_hopf::lincomb::{from_json, parse_lincomb, render, to_json};
use operad_hopf::operad::{AssOperad, GraphOperad, Operad, OperadName, TmOperad, TmTree};
use operad_hopf::scalar::{frac, int};
use operad_hopf::series::{format_polynomial, parse_polynomial, OperadSeries};
use operad_hopf::wick::{parse_args, QuadraticSpace, SymWord};
use operad_hopf::{with_operad, Basis, LinComb};

/// Parent of every non-root vertex, vertices numbered in pre-order.
fn parents(t: &RootedTree) -> Vec<Option<usize>> {
    fn go(t: &RootedTree, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
        let me = out.len();
        out.push(parent);
        for c in t.children() {
            go(c, Some(me), out);
        }
    }
    let mut out = Vec::new();
    go(t, None, &mut out);
    out
}

/// Edge subsets (edges named by their lower vertex) with no cut edge above
/// another.
fn admissible_by_filter(t: &RootedTree) -> BTreeSet<Vec<usize>> {
    let parent = parents(t);
    let n = parent.len();
    let above = |mut v: usize, w: usize| {
        while let Some(p) = parent[v] {
            if p == w {
                return true;
            }
            v = p;
        }
        false
    };
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let cut: Vec<usize> = (1..n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        if cut.iter().all(|&a| cut.iter().all(|&b| !above(a, b))) {
            out.insert(cut);
        }
    }
    out
}

#[test]
fn admissible_cuts_match_subset_filter() {
    for n in 1..=6 {
        for t in RootedTree::enumerate(n) {
            let cuts = admissible_cuts(&t);
            let found: BTreeSet<Vec<usize>> = cuts.iter().map(|c| c.edges.clone()).collect();
            assert_eq!(found.len(), cuts.len(), "{t}");
            assert_eq!(found, admissible_by_filter(&t), "{t}");
            for c in &cuts {
                let pruned: usize = c.pruned.iter().map(RootedTree::vertex_count).sum();
                assert_eq!(c.trunk.vertex_count() + pruned, n);
            }
        }
        assert_eq!(admissible_cuts(&RootedTree::chain(n)).len(), n);
        assert_eq!(admissible_cuts(&RootedTree::corolla(n)).len(), 1 << n);
    }
}

#[test]
fn tree_texts_round_trip() {
    for n in 1..=5 {
        for t in RootedTree::enumerate(n) {
            assert_eq!(t.to_string().parse::<RootedTree>().unwrap(), t);
        }
    }
    let t: RootedTree = "(l:1 (l:0) (l:2 (l:0)))".parse().unwrap();
    assert_eq!(t.total_legs(), 3);
    assert!("(l:0 (l:0)".parse::<RootedTree>().is_err());
    for n in 2..=4 {
        for t in TmTree::enumerate(n) {
            assert_eq!(t.to_string().parse::<TmTree>().unwrap(), t);
            assert_eq!(TmOperad.parse_key(&t.encode()).unwrap(), t);
        }
    }
}

#[test]
fn operad_keys_round_trip_through_lincomb_text_and_json() {
    for name in ["com", "ass", "lie", "tm", "gamma", "gamma-tilde", "gamma-1pi"] {
        let name: OperadName = name.parse().unwrap();
        with_operad!(name, 3, |op| {
            let keys: Vec<_> = (2..=3).flat_map(|n| op.basis(n)).take(5).collect();
            let mut x = LinComb::zero();
            for (i, k) in keys.iter().enumerate() {
                x.add_term(k.clone(), frac(i as i64 - 2, 3));
            }
            let text = render(&x, Basis::encode);
            assert_eq!(parse_lincomb(&text, |k| op.parse_key(k)).unwrap(), x, "{text}");
            let json = to_json(&x, Basis::encode);
            assert_eq!(from_json(&json, |k| op.parse_key(k)).unwrap(), x);
        });
    }
}

#[test]
fn hopf_elements_round_trip() {
    let h = OperadHopf::new(&AssOperad, HopfVariant::Hbar, 3).unwrap();
    let x = parse_element(&h, "2 x12*.x123* - 1/2 x132* + 1").unwrap();
    assert_eq!(parse_element(&h, &show_element(&h, &x)).unwrap(), x);
    assert_eq!(element_json(&h, &x).as_array().unwrap().len(), 3);
    let pi = GraphOperad::one_pi();
    let h = OperadHopf::new(&pi, HopfVariant::H, 2).unwrap();
    let bubble = pi.basis(2).remove(0);
    let x = parse_element(&h, &format!("{}*.{}*", bubble.encode(), bubble.encode())).unwrap();
    assert_eq!(parse_element(&h, &show_element(&h, &x)).unwrap(), x);
    let ck = CkTrees::new(4);
    let x = parse_element(&ck, "(l:0 (l:0))*.(l:0)* - 3 (l:0 (l:0) (l:0))*").unwrap();
    assert_eq!(parse_element(&ck, &show_element(&ck, &x)).unwrap(), x);
}

#[test]
fn series_texts_round_trip() {
    let op = AssOperad;
    let f = OperadSeries::new(
        &op,
        3,
        vec![(2, LinComb::term(op.parse_key("x21").unwrap(), frac(-1, 2))), (3, LinComb::basis(op.parse_key("x312").unwrap()))],
    )
    .unwrap();
    assert_eq!(OperadSeries::parse(&op, 3, &f.to_text()).unwrap(), f);
    let p = parse_polynomial("x - 1/2x^2 + 3x^4").unwrap();
    assert_eq!(p, vec![int(0), int(1), frac(-1, 2), int(0), int(3)]);
    assert_eq!(format_polynomial(&p), "x - 1/2x^2 + 3x^4");
}

#[test]
fn wick_inputs_parse() {
    let args = parse_args("{1,2} {} {2,2,1}").unwrap();
    assert_eq!(args, vec![SymWord::new(vec![0, 1]), SymWord::empty(), SymWord::new(vec![0, 1, 1])]);
    let q = QuadraticSpace::parse("# a form\n1 1/2\n1/2 0\n").unwrap();
    assert_eq!(q.b(0, 1), &frac(1, 2));
    assert!(QuadraticSpace::parse("1 2\n3 4").is_err());
}

#[test]
fn bialgebra_fixtures_load() {
    let kz2 = FiniteBialgebra::parse(bialgebra::KZ2).unwrap();
    let ks3 = FiniteBialgebra::parse(bialgebra::KS3).unwrap();
    assert_eq!((kz2.dimension(), ks3.dimension()), (2, 6));
    assert!(kz2.is_commutative() && !ks3.is_commutative());
    let t = ks3.parse_tuple("(s132,s123)").unwrap();
    assert_eq!(ks3.show_tuple(&t), "(s132,s123)");
    assert!(kz2.check_axioms().passed() && ks3.check_axioms().passed());
}
