use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "operad-hopf", version, about = "Exact computations with operads, their Hopf algebras and graph operads")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coproduct and antipode in H_P and H̄_P.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Composition and inversion of operad series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// The Lie bracket of an operad.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Graph operads and symmetry factors.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// The Hopf algebra of rooted trees.
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Wick contraction along a graph.
    #[command(subcommand)]
    Wick(WickCmd),
    /// The cooperad of a bialgebra.
    #[command(subcommand)]
    Ca(CaCmd),
    /// Run the axiom suites.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
pub struct HopfArgs {
    #[arg(long)]
    pub operad: String,
    #[arg(long, default_value = "H")]
    pub variant: String,
    #[arg(long)]
    pub max_degree: usize,
    /// Element such as `e3*` or `2 e2*.e2* - e3*`, or `@file`.
    pub element: String,
}

#[derive(Subcommand, Debug)]
enum HopfCmd {
    Coprod(HopfArgs),
    Antipode(HopfArgs),
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    /// `f ∘ g`.
    Compose {
        #[arg(long)]
        operad: String,
        #[arg(short = 'N')]
        order: usize,
        f: String,
        g: String,
    },
    /// The inverse of `f` under composition.
    Invert {
        #[arg(long)]
        operad: String,
        #[arg(short = 'N')]
        order: usize,
        f: String,
    },
}

#[derive(Subcommand, Debug)]
enum LieCmd {
    /// `[p, q] = Σ p ∘_i q - Σ q ∘_j p`.
    Bracket {
        #[arg(long)]
        operad: String,
        p: String,
        q: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphVariantArg {
    Gamma,
    GammaTilde,
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// `η ∘_k ζ` with `k` counted from one.
    Compose {
        #[arg(long, value_enum, default_value_t = GraphVariantArg::Gamma)]
        variant: GraphVariantArg,
        eta: String,
        k: usize,
        zeta: String,
    },
    /// `S(η̄) = |Aut(η̄)| / |Aut(η)|`.
    Symfactor { graph: String },
    /// Isomorphism of the underlying unnumbered graphs.
    Iso { first: String, second: String },
    /// Connected, bridgeless, at least two legs, valences in {2, 3}.
    Is1pi { graph: String },
}

#[derive(Subcommand, Debug)]
enum TreeCmd {
    /// Admissible cuts of a tree.
    Cuts { tree: String },
    /// Coproduct of a tree or forest element.
    Coprod { element: String },
    /// Antipode of a tree or forest element.
    Antipode { element: String },
    /// Grafting bracket `[s, t] = s • t - t • s`.
    Bracket { s: String, t: String },
}

#[derive(Args, Debug)]
pub struct WickArgs {
    /// Matrix of the quadratic form, one row per line.
    #[arg(long)]
    pub form: std::path::PathBuf,
    pub graph: String,
    /// Arguments such as `{1,2} {1}`.
    pub args: String,
}

#[derive(Subcommand, Debug)]
enum WickCmd {
    Tau(WickArgs),
    Gamma(WickArgs),
}

#[derive(Subcommand, Debug)]
enum CaCmd {
    /// Cooperad laws, equivariance and the bialgebras B_{C_A}.
    Verify {
        #[arg(long)]
        bialgebra: std::path::PathBuf,
        #[arg(long, default_value_t = 3)]
        max_arity: usize,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Every axiom suite, as a pass/fail table.
    All {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

/// Result of a command: the text and JSON renderings and whether every
/// checked identity held.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
}

impl Output {
    pub fn value(text: String, json: serde_json::Value) -> Self {
        Self { text, json, ok: true }
    }
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Hopf(HopfCmd::Coprod(a)) => commands::hopf(&a, false),
        Command::Hopf(HopfCmd::Antipode(a)) => commands::hopf(&a, true),
        Command::Series(SeriesCmd::Compose { operad, order, f, g }) => commands::series(&operad, order, &f, Some(&g)),
        Command::Series(SeriesCmd::Invert { operad, order, f }) => commands::series(&operad, order, &f, None),
        Command::Lie(LieCmd::Bracket { operad, p, q }) => commands::lie_bracket(&operad, &p, &q),
        Command::Graph(GraphCmd::Compose { variant, eta, k, zeta }) => commands::graph_compose(variant, &eta, k, &zeta),
        Command::Graph(GraphCmd::Symfactor { graph }) => commands::graph_symfactor(&graph),
        Command::Graph(GraphCmd::Iso { first, second }) => commands::graph_iso(&first, &second),
        Command::Graph(GraphCmd::Is1pi { graph }) => commands::graph_is1pi(&graph),
        Command::Tree(TreeCmd::Cuts { tree }) => commands::tree_cuts(&tree),
        Command::Tree(TreeCmd::Coprod { element }) => commands::tree_hopf(&element, false),
        Command::Tree(TreeCmd::Antipode { element }) => commands::tree_hopf(&element, true),
        Command::Tree(TreeCmd::Bracket { s, t }) => commands::tree_bracket(&s, &t),
        Command::Wick(WickCmd::Tau(a)) => commands::wick(&a, false),
        Command::Wick(WickCmd::Gamma(a)) => commands::wick(&a, true),
        Command::Ca(CaCmd::Verify { bialgebra, max_arity }) => commands::ca_verify(&bialgebra, max_arity),
        Command::Verify(VerifyCmd::All { max_degree }) => Ok(commands::verify_all(max_degree)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).expect("JSON values serialize")),
            };
            // a closed pipe on the reading side is not an error of ours
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let violation = matches!(e.downcast_ref::<operad_hopf::Error>(), Some(operad_hopf::Error::AxiomViolation { .. }));
            ExitCode::from(if violation { 1 } else { 2 })
        }
    }
}
