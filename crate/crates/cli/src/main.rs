//! `osdom`: command-line front end.
//!
//! Exit status is 0 on success, 1 when a computation fails (the error name
//! is printed first on stderr) or a theorem suite reports failures, and 2 on
//! usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use osdom::graph::induced::{forbidden_subgraph_free, is_chordal_bipartite, is_weakly_chordal, Forbidden};
use osdom::hardness::{formula_name, reduce_to_poset, soundness_check};
use osdom::helly::{c6_sufficient_check, has_helly_property, is_complete_helly_poset, is_helly_poset, C6Level, Side};
use osdom::io;
use osdom::solvers::{
    biclique_partition, chromatic_number, domination, os_domination, roman_domination, theta,
    vertex_disjoint_triangles, weighted_clique_partition, BicliqueMode, DominationVariant, OsMethod, RomanMethod,
    SolveOptions, SolveResult, Witness, DEFAULT_BUDGET,
};
use osdom::transforms::{self, TransformTrace};
use osdom::verify::{conjecture_search, run_suite, suite_names, ConjectureProblem, SuiteConfig, SuiteKind};
use osdom::{BipartiteGraph, ElemSet, Error, Graph, Poset};

#[derive(Parser)]
#[command(
    name = "osdom",
    version,
    about = "Exact order-sensitive domination and related parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order-sensitive domination number of a poset.
    Compute(ComputeArgs),
    /// Build a poset or graph from another and write it out.
    Transform(TransformArgs),
    /// Graph parameters.
    Graph(GraphArgs),
    /// Helly checks for posets and set families.
    Helly(HellyArgs),
    /// Reduce an EQUAL-3-SAT formula to a poset.
    ReduceSat(ReduceArgs),
    /// Run an equivalence suite or a conjecture search.
    Verify(VerifyArgs),
    /// Print the grammar of every file format.
    Formats,
}

#[derive(Clone, Copy, ValueEnum)]
enum OsRoute {
    Direct,
    ViaStar,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    poset: PathBuf,
    #[arg(long, value_enum, default_value = "direct")]
    method: OsRoute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformOp {
    /// Star extension P*.
    Star,
    /// Height-3 reduction.
    Red3,
    /// Every minimal element below every maximal element.
    Maxmin,
    Dual,
    /// k-layer poset of a graph.
    Pk,
    /// Four-layer poset of a bipartite graph.
    B4,
    /// Bipartite transformation of a poset.
    Bipartite,
    /// Middle graph.
    Md,
    /// Comparability graph on Mid and Max.
    Hu,
    /// Comparability graph on Mid and Min.
    Hd,
    /// Comparability graph.
    Comp,
    /// Extended double cover of a graph.
    Be,
    /// Height-3 poset of a set family.
    Family,
    /// Cartesian product of two posets.
    Product,
    Square,
    Complement,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    op: TransformOp,
    #[arg(long)]
    poset: Option<PathBuf>,
    /// Second factor for `product`.
    #[arg(long)]
    poset2: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    family: Option<PathBuf>,
    /// Layer count for `pk`.
    #[arg(long)]
    k: Option<usize>,
    /// Output file; a `.trace` sidecar is written next to it. Without it the
    /// result goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphOp {
    Gamma,
    GammaT,
    Roman,
    RomanFormula,
    Theta,
    We,
    Vdt,
    Chi,
    /// Biclique vertex-partition number of a bipartite graph.
    Bp,
    /// Induced-subgraph freeness against `--forbidden`.
    Free,
    WeaklyChordal,
    ChordalBipartite,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long, value_enum)]
    op: GraphOp,
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated patterns for `free`: c4, c5, c6, 3sun, weakly_chordal,
    /// chordal_bipartite.
    #[arg(long, value_delimiter = ',')]
    forbidden: Vec<String>,
    /// For `bp`: poset whose bipartite transformation the graph is; enables
    /// the star/double-star search.
    #[arg(long)]
    poset: Option<PathBuf>,
}

#[derive(Args)]
struct HellyArgs {
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    poset: Option<PathBuf>,
    #[arg(long)]
    family: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    cnf: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip the satisfiability and domination check.
    #[arg(long)]
    no_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "conjecture", conflicts_with = "conjecture")]
    suite: Option<String>,
    /// `product_posets` or `product_bipartite`.
    #[arg(long)]
    conjecture: Option<String>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    size_max: Option<usize>,
    /// Write the key=value summary here.
    #[arg(long)]
    summary: Option<PathBuf>,
}

/// Failure that maps to an exit status.
enum Failure {
    Usage(String),
    Compute(Error),
    Io(String),
    SuiteFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("IoError: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::SuiteFailed) => ExitCode::from(1),
    }
}

fn options() -> CliResult<SolveOptions> {
    let budget = match std::env::var("OSDOM_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("OSDOM_BUDGET must be a positive integer, got `{v}`")))?,
        Err(_) => DEFAULT_BUDGET,
    };
    Ok(SolveOptions::with_budget(budget))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn need<'a>(p: &'a Option<PathBuf>, flag: &str) -> CliResult<&'a Path> {
    p.as_deref()
        .ok_or_else(|| Failure::Usage(format!("this operation needs --{flag}")))
}

fn load_poset(path: &Path) -> CliResult<Poset> {
    Ok(io::read_poset(&read(path)?)?)
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(io::read_graph(&read(path)?)?)
}

fn load_bipartite(path: &Path) -> CliResult<BipartiteGraph> {
    Ok(io::read_bipartite(&read(path)?)?)
}

fn sorted_labels(labels: Vec<String>) -> String {
    let mut ls = labels;
    ls.sort();
    ls.join(" ")
}

/// `name = a b c`, or `name = -` for an empty set.
fn set_line(name: &str, labels: Vec<String>) -> String {
    if labels.is_empty() {
        return format!("{name} = -");
    }
    format!("{name} = {}", sorted_labels(labels))
}

/// Value line plus witness lines.
fn print_result(name: &str, r: &SolveResult, label: &dyn Fn(ElemSet) -> Vec<String>) {
    println!("{name} = {}", r.value);
    match &r.witness {
        Witness::Set(s) => println!("{}", set_line("witness", label(*s))),
        Witness::Roman(f) => {
            let with = |v: u8| (0..f.len()).filter(|&i| f[i] == v).collect::<ElemSet>();
            println!("{}", set_line("twos", label(with(2))));
            println!("{}", set_line("ones", label(with(1))));
        }
        Witness::Blocks(bs) => {
            for b in bs {
                println!("{}", set_line("block", label(*b)));
            }
        }
        Witness::Coloring(c) => {
            let k = c.iter().copied().max().map_or(0, |m| m + 1);
            for colour in 0..k {
                let class: ElemSet = (0..c.len()).filter(|&i| c[i] == colour).collect();
                println!("{}", set_line("class", label(class)));
            }
        }
    }
    println!("method = {}", r.method.as_str());
}

fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Compute(a) => compute(a),
        Command::Transform(a) => transform(a),
        Command::Graph(a) => graph(a),
        Command::Helly(a) => helly(a),
        Command::ReduceSat(a) => reduce_sat(a),
        Command::Verify(a) => verify(a),
        Command::Formats => {
            print!("{}", io::FORMAT_GRAMMAR);
            Ok(())
        }
    }
}

fn compute(a: ComputeArgs) -> CliResult<()> {
    let p = load_poset(&a.poset)?;
    let method = match a.method {
        OsRoute::Direct => OsMethod::Direct,
        OsRoute::ViaStar => OsMethod::ViaStar,
    };
    let r = os_domination(&p, method, &options()?)?;
    print_result("gamma_os", &r, &|s| p.labels_of(s));
    Ok(())
}

/// Output text and its trace.
enum Built {
    Poset(Poset, TransformTrace),
    Graph(Graph, TransformTrace),
    Bipartite(BipartiteGraph, TransformTrace),
}

fn mid_trace(scheme: &str, keep: ElemSet) -> TransformTrace {
    let mut t = TransformTrace::new(scheme);
    for x in keep.iter() {
        t.push("same", vec![x]);
    }
    t
}

fn transform(a: TransformArgs) -> CliResult<()> {
    use TransformOp::*;
    let built = match a.op {
        Star | Red3 | Maxmin | Dual | Bipartite | Md | Hu | Hd | Comp | Product => {
            let p = load_poset(need(&a.poset, "poset")?)?;
            let n = p.len();
            match a.op {
                Star => {
                    let (q, t) = transforms::star_extension_traced(&p);
                    Built::Poset(q, t)
                }
                Red3 => Built::Poset(transforms::red3(&p)?, TransformTrace::identity("red3", n)),
                Maxmin => Built::Poset(transforms::maxmin_closure(&p), TransformTrace::identity("maxmin", n)),
                Dual => Built::Poset(p.dual(), TransformTrace::identity("dual", n)),
                Bipartite => {
                    let (b, t) = transforms::bipartite_transformation_traced(&p);
                    Built::Bipartite(b, t)
                }
                Md => Built::Graph(transforms::middle_graph(&p)?, mid_trace("md", p.middle())),
                Hu | Hd => {
                    let (hu, hd) = transforms::hu_hd(&p)?;
                    let ps = p.positional_sets();
                    if a.op == Hu {
                        Built::Graph(hu, mid_trace("hu", ps.mid.union(ps.max)))
                    } else {
                        Built::Graph(hd, mid_trace("hd", ps.mid.union(ps.min)))
                    }
                }
                Comp => Built::Graph(p.comparability_graph(), TransformTrace::identity("comp", n)),
                _ => {
                    let q = load_poset(need(&a.poset2, "poset2")?)?;
                    let prod = p.cartesian_product(&q)?;
                    let mut t = TransformTrace::new("product");
                    for i in 0..n {
                        for j in 0..q.len() {
                            t.push("pair", vec![i, j]);
                        }
                    }
                    Built::Poset(prod, t)
                }
            }
        }
        Pk => {
            let g = load_graph(need(&a.graph, "graph")?)?;
            let k = a.k.ok_or_else(|| Failure::Usage("pk needs --k".into()))?;
            let (p, t) = transforms::graded_poset_traced(&g, k)?;
            Built::Poset(p, t)
        }
        B4 => {
            let b = load_bipartite(need(&a.graph, "graph")?)?;
            let (p, t) = transforms::bipartite_to_b4_traced(&b)?;
            Built::Poset(p, t)
        }
        Be | Square | Complement => {
            let g = load_graph(need(&a.graph, "graph")?)?;
            match a.op {
                Be => {
                    let b = g.extended_double_cover();
                    let mut t = TransformTrace::new("be");
                    for side in ["x", "y"] {
                        for v in 0..g.len() {
                            t.push(side, vec![v]);
                        }
                    }
                    Built::Bipartite(b, t)
                }
                Square => Built::Graph(g.square(), TransformTrace::identity("square", g.len())),
                _ => Built::Graph(g.complement(), TransformTrace::identity("complement", g.len())),
            }
        }
        Family => {
            let f = io::read_family(&read(need(&a.family, "family")?)?)?;
            let (p, t) = transforms::family_poset_traced(&f)?;
            Built::Poset(p, t)
        }
    };
    let (text, trace, summary) = match &built {
        Built::Poset(p, t) => (io::write_poset(p), t, format!("poset with {} elements", p.len())),
        Built::Graph(g, t) => (io::write_graph(g), t, format!("graph with {} vertices", g.len())),
        Built::Bipartite(b, t) => (
            io::write_bipartite(b),
            t,
            format!("bipartite graph with {} vertices", b.len()),
        ),
    };
    match a.out {
        Some(out) => {
            write(&out, &text)?;
            let mut trace_path = out.clone().into_os_string();
            trace_path.push(".trace");
            let trace_path = PathBuf::from(trace_path);
            write(&trace_path, &trace.to_text())?;
            println!("wrote {} ({summary})", out.display());
            println!("wrote {}", trace_path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn graph(a: GraphArgs) -> CliResult<()> {
    let o = options()?;
    let text = read(&a.graph)?;
    if a.op == GraphOp::Bp {
        let b = io::read_bipartite(&text)?;
        let r = match &a.poset {
            Some(p) => {
                let p = load_poset(p)?;
                biclique_partition(&b, BicliqueMode::StarDoubleStar, Some(&p), &o)?
            }
            None => biclique_partition(&b, BicliqueMode::General, None, &o)?,
        };
        print_result("bp", &r, &|s| b.graph().labels_of(s));
        return Ok(());
    }
    let g = io::read_graph(&text)?;
    let label = |s: ElemSet| g.labels_of(s);
    match a.op {
        GraphOp::Gamma => print_result("gamma", &domination(&g, DominationVariant::Plain, &o)?, &label),
        GraphOp::GammaT => print_result("gamma_t", &domination(&g, DominationVariant::Total, &o)?, &label),
        GraphOp::Roman => print_result("gamma_R", &roman_domination(&g, RomanMethod::Direct, &o)?, &label),
        GraphOp::RomanFormula => print_result(
            "gamma_R",
            &roman_domination(&g, RomanMethod::TwoPackingFormula, &o)?,
            &label,
        ),
        GraphOp::Theta => print_result("theta", &theta(&g, &o)?, &label),
        GraphOp::We => print_result("we", &weighted_clique_partition(&g, &o)?, &label),
        GraphOp::Vdt => print_result("vdt", &vertex_disjoint_triangles(&g, &o)?, &label),
        GraphOp::Chi => print_result("chi", &chromatic_number(&g, &o)?, &label),
        GraphOp::Free => {
            if a.forbidden.is_empty() {
                return Err(Failure::Usage("free needs --forbidden".into()));
            }
            let family = a
                .forbidden
                .iter()
                .map(|n| Forbidden::parse(n).ok_or_else(|| Failure::Usage(format!("unknown pattern `{n}`"))))
                .collect::<CliResult<Vec<_>>>()?;
            let r = forbidden_subgraph_free(&g, &family)?;
            println!("free = {}", r.free);
            if let Some(w) = r.witness {
                let ls: Vec<String> = w.iter().map(|&v| g.label(v).to_string()).collect();
                println!("witness = {}", ls.join(" "));
            }
        }
        GraphOp::WeaklyChordal => println!("weakly_chordal = {}", is_weakly_chordal(&g)),
        GraphOp::ChordalBipartite => println!("chordal_bipartite = {}", is_chordal_bipartite(&g)?),
        GraphOp::Bp => unreachable!("handled above"),
    }
    Ok(())
}

fn helly(a: HellyArgs) -> CliResult<()> {
    if let Some(f) = &a.family {
        let fam = io::read_family(&read(f)?)?;
        let r = has_helly_property(&fam)?;
        println!("helly = {}", r.holds);
        if let Some(w) = r.witness {
            let ws: Vec<String> = w.iter().map(|i| i.to_string()).collect();
            println!("witness_members = {}", ws.join(" "));
        }
        return Ok(());
    }
    let p = load_poset(need(&a.poset, "poset")?)?;
    let r = is_helly_poset(&p)?;
    println!("helly = {}", r.holds);
    if let Some((side, elems)) = r.witness {
        let side = match side {
            Side::Up => "up",
            Side::Down => "down",
        };
        let ls: Vec<String> = elems.iter().map(|&x| p.label(x).to_string()).collect();
        println!("witness = {side} {}", sorted_labels(ls));
    } else {
        let c = is_complete_helly_poset(&p)?;
        println!("complete_helly = {}", c.holds);
        if let Some((x, y)) = c.witness {
            println!("witness = {} {}", p.label(x), p.label(y));
        }
    }
    println!("c6_free_hu_hd = {}", c6_sufficient_check(&p, C6Level::HuHd)?);
    println!("c6_free_comp = {}", c6_sufficient_check(&p, C6Level::Comp)?);
    Ok(())
}

fn reduce_sat(a: ReduceArgs) -> CliResult<()> {
    let f = io::read_cnf(&read(&a.cnf)?)?;
    let out = reduce_to_poset(&f, a.k)?;
    println!("formula = {}", formula_name(&f));
    println!("elements = {}", out.poset.len());
    println!("threshold = {}", out.threshold);
    if let Some(path) = &a.out {
        write(path, &io::write_poset(&out.poset))?;
        let mut trace = TransformTrace::new("equal3sat");
        for role in &out.roles {
            trace.push(role, Vec::new());
        }
        let mut trace_path = path.clone().into_os_string();
        trace_path.push(".trace");
        write(Path::new(&trace_path), &trace.to_text())?;
        println!("wrote {}", path.display());
    }
    if !a.no_check {
        let r = soundness_check(&f, a.k, &options()?)?;
        println!("instance, sat, gamma_os, threshold, verdict");
        println!("{}", r.line());
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> CliResult<()> {
    let o = options()?;
    if let Some(name) = &a.conjecture {
        let problem = ConjectureProblem::parse(name).ok_or_else(|| {
            Failure::Usage(format!(
                "unknown conjecture `{name}`; use product_posets or product_bipartite"
            ))
        })?;
        let r = conjecture_search(problem, a.trials, a.seed, &o)?;
        println!(
            "conjecture {} seed={} trials={} findings={}",
            problem.as_str(),
            r.seed,
            r.trials,
            r.findings.len()
        );
        for f in &r.findings {
            println!("  finding: {}", f.line());
        }
        if let Some(path) = &a.summary {
            let s = format!(
                "conjecture={}\nseed={}\ntrials={}\nfindings={}\n",
                problem.as_str(),
                r.seed,
                r.trials,
                r.findings.len()
            );
            write(path, &s)?;
        }
        return Ok(());
    }
    let name = a.suite.as_deref().expect("clap requires --suite without --conjecture");
    let cfg = SuiteConfig {
        trials: a.trials,
        seed: a.seed,
        size_max: a.size_max,
        budget: o.budget,
    };
    let report = run_suite(name, &cfg).map_err(|e| match e {
        Error::UnknownSuite(_) => {
            Failure::Usage(format!("unknown suite `{name}`; known: {}", suite_names().join(", ")))
        }
        other => Failure::Compute(other),
    })?;
    print!("{}", report.to_text());
    if let Some(path) = &a.summary {
        write(path, &report.summary())?;
    }
    if report.kind == SuiteKind::Theorem && !report.passed() {
        return Err(Failure::SuiteFailed);
    }
    Ok(())
}
