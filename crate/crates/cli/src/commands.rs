use std::path::Path;

use anyhow::{bail, Context};
use serde_json::json;

use operad_hopf::bialgebra::{self, build_bca, BcaVariant, FiniteBialgebra};
use operad_hopf::ck::{tree_lie_bracket, CkTrees};
use operad_hopf::combinat::{admissible_cuts, symmetry_factor, unnumbered_iso, LabelledGraph, RootedTree};
use operad_hopf::hopf::{
    self, antipode, coproduct, element_json, show_element, show_tensor, tensor_json, CheckResult, ConnectedBialgebra,
    HopfVariant, OperadHopf, Word,
};
use operad_hopf::lincomb::{parse_lincomb, render, to_json};
use operad_hopf::operad::{graph_circ, ComOperad, GraphVariant, OperadName};
use operad_hopf::scalar::to_short_string;
use operad_hopf::series::{com_from_polynomial, com_to_polynomial, format_polynomial, lie_bracket as operad_lie_bracket, parse_polynomial, OperadSeries};
use operad_hopf::wick::{gamma_algebra, parse_args, tau_eta, QuadraticSpace};
use operad_hopf::{suite, with_operad, Basis, LinComb};

use crate::{GraphVariantArg, HopfArgs, Output, WickArgs};

/// Valence cap for the graph operads when they are named on the command
/// line.
const GRAPH_VALENCE: usize = 3;

/// An inline argument, or the contents of the file after `@`.
fn input(arg: &str) -> anyhow::Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_string()),
    }
}

fn read_file(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Words such as `e2*.e3*`, or bare generators such as `2 e3 - e2`.
fn parse_hopf_element<A: ConnectedBialgebra>(alg: &A, text: &str) -> operad_hopf::Result<LinComb<Word<A::Gen>>> {
    let t = text.trim();
    if t.contains('*') || t == "1" {
        hopf::parse_element(alg, t)
    } else {
        parse_lincomb(t, |k| Ok(Word::gen(alg.parse_gen(k)?)))
    }
}

fn hopf_output<A: ConnectedBialgebra>(alg: &A, x: &LinComb<Word<A::Gen>>, want_antipode: bool) -> anyhow::Result<Output> {
    Ok(if want_antipode {
        let s = antipode(alg, x)?;
        Output::value(format!("{}\n", show_element(alg, &s)), element_json(alg, &s))
    } else {
        let d = coproduct(alg, x)?;
        Output::value(format!("{}\n", show_tensor(alg, &d)), tensor_json(alg, &d))
    })
}

pub fn hopf(a: &HopfArgs, want_antipode: bool) -> anyhow::Result<Output> {
    let name: OperadName = a.operad.parse()?;
    let variant: HopfVariant = a.variant.parse()?;
    if variant == HopfVariant::Symmetrized {
        bail!("variant must be H or Hbar");
    }
    let text = input(&a.element)?;
    with_operad!(name, GRAPH_VALENCE, |op| {
        let h = OperadHopf::new(&op, variant, a.max_degree)?;
        let x = parse_hopf_element(&h, &text)?;
        hopf_output(&h, &x, want_antipode)
    })
}

pub fn series(operad: &str, order: usize, f: &str, g: Option<&str>) -> anyhow::Result<Output> {
    let name: OperadName = operad.parse()?;
    let f_text = input(f)?;
    let g_text = g.map(input).transpose()?;
    if name == OperadName::Com && !f_text.contains(':') {
        let f = com_from_polynomial(&parse_polynomial(&f_text)?, order)?;
        let result = match &g_text {
            Some(g) => f.compose(&ComOperad, &com_from_polynomial(&parse_polynomial(g)?, order)?)?,
            None => f.invert(&ComOperad)?,
        };
        let poly = format_polynomial(&com_to_polynomial(&result));
        return Ok(Output::value(format!("{poly}\n"), json!({ "order": order, "polynomial": poly })));
    }
    with_operad!(name, GRAPH_VALENCE, |op| {
        let f = OperadSeries::parse(&op, order, &f_text)?;
        let result = match &g_text {
            Some(g) => f.compose(&op, &OperadSeries::parse(&op, order, g)?)?,
            None => f.invert(&op)?,
        };
        Ok(Output::value(result.to_text(), result.to_json()))
    })
}

pub fn lie_bracket(operad: &str, p: &str, q: &str) -> anyhow::Result<Output> {
    let name: OperadName = operad.parse()?;
    let (p, q) = (input(p)?, input(q)?);
    with_operad!(name, GRAPH_VALENCE, |op| {
        use operad_hopf::operad::Operad;
        let p = parse_lincomb(&p, |k| op.parse_key(k))?;
        let q = parse_lincomb(&q, |k| op.parse_key(k))?;
        let b = operad_lie_bracket(&op, &p, &q)?;
        Ok(Output::value(format!("{}\n", render(&b, Basis::encode)), to_json(&b, Basis::encode)))
    })
}

fn graph(arg: &str) -> anyhow::Result<LabelledGraph> {
    Ok(input(arg)?.trim().parse()?)
}

pub fn graph_compose(variant: GraphVariantArg, eta: &str, k: usize, zeta: &str) -> anyhow::Result<Output> {
    let (eta, zeta) = (graph(eta)?, graph(zeta)?);
    if k == 0 || k > eta.vertex_count() {
        return Err(operad_hopf::Error::InvalidVertex { vertex: k, count: eta.vertex_count() }.into());
    }
    let v = match variant {
        GraphVariantArg::Gamma => GraphVariant::Classes,
        GraphVariantArg::GammaTilde => GraphVariant::AllBijections,
    };
    let r = graph_circ(v, &eta, k - 1, &zeta);
    Ok(Output::value(format!("{}\n", render(&r, |g| g.to_string())), to_json(&r, |g| g.to_string())))
}

pub fn graph_symfactor(g: &str) -> anyhow::Result<Output> {
    let g = graph(g)?;
    let s = to_short_string(&symmetry_factor(&g));
    Ok(Output::value(
        format!("{s}\n"),
        json!({
            "symmetry_factor": s,
            "aut_numbered": g.numbered_aut_count(),
            "aut_unnumbered": g.unnumbered_aut_count(),
        }),
    ))
}

pub fn graph_iso(a: &str, b: &str) -> anyhow::Result<Output> {
    let (iso, _) = unnumbered_iso(&graph(a)?, &graph(b)?);
    Ok(Output::value(format!("{iso}\n"), json!({ "isomorphic": iso })))
}

pub fn graph_is1pi(g: &str) -> anyhow::Result<Output> {
    let v = graph(g)?.is_1pi();
    Ok(Output::value(format!("{v}\n"), json!({ "one_pi": v })))
}

fn tree(arg: &str) -> anyhow::Result<RootedTree> {
    Ok(input(arg)?.trim().parse()?)
}

pub fn tree_cuts(t: &str) -> anyhow::Result<Output> {
    let t = tree(t)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for cut in admissible_cuts(&t) {
        // edges are named by their lower vertex, numbered from one in pre-order
        let edges: Vec<usize> = cut.edges.iter().map(|e| e + 1).collect();
        let pruned: Vec<String> = cut.pruned.iter().map(|p| p.to_string()).collect();
        let pruned_text = if pruned.is_empty() { "1".to_string() } else { pruned.join(" ") };
        let edge_text: Vec<String> = edges.iter().map(|e| e.to_string()).collect();
        text.push_str(&format!("{{{}}}: {} | {}\n", edge_text.join(","), cut.trunk, pruned_text));
        rows.push(json!({ "edges": edges, "trunk": cut.trunk.to_string(), "pruned": pruned }));
    }
    Ok(Output::value(text, json!(rows)))
}

pub fn tree_hopf(element: &str, want_antipode: bool) -> anyhow::Result<Output> {
    let text = input(element)?;
    // the cap only has to cover the trees that occur in the element
    let probe = CkTrees::new(usize::MAX);
    let x = parse_hopf_element(&probe, &text)?;
    let size = x.keys().map(|w| w.letters().iter().map(RootedTree::vertex_count).max().unwrap_or(0)).max().unwrap_or(1);
    let ck = CkTrees::new(size.max(1));
    hopf_output(&ck, &x, want_antipode)
}

pub fn tree_bracket(s: &str, t: &str) -> anyhow::Result<Output> {
    let parse = |a: &str| -> anyhow::Result<LinComb<RootedTree>> { Ok(parse_lincomb(&input(a)?, |k| k.parse())?) };
    let b = tree_lie_bracket(&parse(s)?, &parse(t)?);
    Ok(Output::value(format!("{}\n", render(&b, |t| t.to_string())), to_json(&b, |t| t.to_string())))
}

pub fn wick(a: &WickArgs, gamma: bool) -> anyhow::Result<Output> {
    let space = QuadraticSpace::parse(&read_file(&a.form)?)?;
    let g = graph(&a.graph)?;
    let args = parse_args(&input(&a.args)?)?;
    if let Some(bad) = args.iter().flat_map(|w| w.letters()).find(|&&l| l >= space.dimension()) {
        bail!("letter {} exceeds the dimension {}", bad + 1, space.dimension());
    }
    let r = if gamma { gamma_algebra(&space, &g, &args) } else { tau_eta(&space, &g, &args) };
    Ok(Output::value(format!("{}\n", render(&r, |w| w.to_string())), to_json(&r, |w| w.to_string())))
}

fn table(rows: &[CheckResult], expected_failures: &[String]) -> Output {
    let mut text = String::new();
    let mut json_rows = Vec::new();
    let mut ok = true;
    for r in rows {
        let expected = expected_failures.contains(&r.name);
        let status = match (r.passed(), expected) {
            (true, false) => "PASS",
            (false, true) => "FAIL (expected)",
            (true, true) => "PASS (unexpected)",
            (false, false) => "FAIL",
        };
        if r.passed() == expected {
            ok = false;
        }
        text.push_str(&format!("{status:<17} {} [{} checked]", r.name, r.checked));
        if let Some(w) = &r.witness {
            text.push_str(&format!(": {w}"));
        }
        text.push('\n');
        json_rows.push(json!({ "name": r.name, "status": status, "checked": r.checked, "witness": r.witness }));
    }
    Output { text, json: json!(json_rows), ok }
}

pub fn ca_verify(path: &Path, max_arity: usize) -> anyhow::Result<Output> {
    if max_arity == 0 {
        bail!("--max-arity must be at least 1");
    }
    let a = FiniteBialgebra::parse(&read_file(path)?)?;
    let mut rows = Vec::new();
    for n in 1..=max_arity {
        rows.push(bialgebra::check_ca_coassociativity(&a, n));
        rows.push(bialgebra::check_ca_counit(&a, n));
    }
    let eq = bialgebra::check_ca_equivariance(&a, max_arity);
    // without commutativity the symmetric structure is known to break
    let expected = if a.is_commutative() { vec![] } else { vec![eq.name.clone()] };
    rows.push(eq);
    let variants: &[BcaVariant] =
        if a.is_commutative() { &[BcaVariant::Tensor, BcaVariant::Symmetric] } else { &[BcaVariant::Tensor] };
    for &v in variants {
        for pinter in [false, true] {
            if pinter && max_arity < 2 {
                continue;
            }
            let b = build_bca(&a, v, pinter, max_arity)?;
            let label = format!("B_{{C_A}} {v}{}", if pinter { " C^>1" } else { "" });
            for mut c in b.verify(max_arity - 1).checks {
                c.name = format!("{label}: {}", c.name);
                rows.push(c);
            }
        }
    }
    Ok(table(&rows, &expected))
}

pub fn verify_all(max_degree: usize) -> Output {
    table(&suite::verify_all(max_degree), &[])
}
