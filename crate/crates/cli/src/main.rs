use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use iasgl::harness::{run_all, CheckStatus, HarnessConfig, TheoremReport};
use iasgl::io::{parse_set_literal, read_document, to_dot, Document, GraphSpec, GroundSpec, SetLiteral};
use iasgl::labeling::{highest_rung, structural_gate, Rung};
use iasgl::search::{search_iasgl, sweep_ground_sets, PruneRules, SearchConfig, SearchOutcome, SearchStatus};
use iasgl::{build_realisation, Classification, Error, Graph, GroundSet, SummandMode};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "iasgl", version, about = "Integer additive set-graceful labelings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Args)]
struct Common {
    /// Let a decomposition A + B use A = B
    #[arg(long)]
    allow_equal_summands: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

impl Common {
    fn mode(&self) -> SummandMode {
        if self.allow_equal_summands {
            SummandMode::AllowEqual
        } else {
            SummandMode::DistinctLabels
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Split the subsets of X into non-sumsets, non-summands and neither
    Classify {
        #[arg(long)]
        ground_set: String,
        #[command(flatten)]
        common: Common,
    },
    /// Search for an IASGL of a graph (exit 0 found, 1 none, 2 budget, 3 gate-rejected)
    Search {
        /// star:M | path:M | cycle:M | complete:M | file:PATH
        #[arg(long)]
        graph: String,
        /// explicit set such as 0,1,2 or sweep:n=N,max=M
        #[arg(long)]
        ground_set: String,
        /// Node budget per top-level branch
        #[arg(long, default_value_t = 10_000_000)]
        node_budget: u64,
        /// Wall-clock budget in milliseconds; 0 disables it
        #[arg(long, default_value_t = 60_000)]
        time_budget_ms: u64,
        #[arg(long)]
        find_all: bool,
        /// Shuffle the label order (0 keeps mask order)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the structural gate first and stop if it fails
        #[arg(long)]
        gate: bool,
        /// Turn off all pruning rules
        #[arg(long)]
        no_prune: bool,
        /// Write the first witness as a Document
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a labeled Document against IASL, IASI and IASGL (exit 0 iff IASGL)
    Verify {
        document: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build a graceful graph-realisation of X (exit 4 if infeasible)
    Construct {
        #[arg(long)]
        ground_set: String,
        #[arg(long)]
        prefer_nonbipartite: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Re-check the published results within bounds (exit 0 iff nothing refuted)
    Theorems {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        max_element: u64,
        /// Tree orders to enumerate, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 7])]
        trees: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        path_cycle_min: usize,
        #[arg(long, default_value_t = 8)]
        path_cycle_max: usize,
        #[arg(long, default_value_t = 2)]
        complete_min: usize,
        #[arg(long, default_value_t = 8)]
        complete_max: usize,
        #[arg(long, default_value_t = 30)]
        diophantine_max: u32,
        #[arg(long, default_value_t = 10_000_000)]
        node_budget: u64,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// `Usage` means the invocation itself was wrong.
enum Failure {
    Usage(anyhow::Error),
    Exit(u8, anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Exit(1, e)
    }
}

fn usage<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Usage(e.into())
}

fn set_literal(s: &str, what: &str) -> Result<SetLiteral, Failure> {
    let lit = parse_set_literal(s).map_err(|e| usage(anyhow!("bad {what}: {e}")))?;
    warn_duplicates(&lit);
    Ok(lit)
}

fn warn_duplicates(lit: &SetLiteral) {
    if !lit.duplicates.is_empty() {
        eprintln!("warning: duplicate elements ignored: {:?}", lit.duplicates);
    }
}

fn ground_with_zero(s: &str) -> Result<GroundSet, Failure> {
    let x = GroundSet::new(set_literal(s, "ground set")?.set).map_err(usage)?;
    x.require_zero().map_err(usage)?;
    Ok(x)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

fn family_line(name: &str, sets: &[iasgl::IntegerSet]) -> String {
    let items: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
    format!("{name:<14}{:>4}  {}", sets.len(), items.join(" "))
}

fn classify(ground_set: &str, common: &Common) -> Result<u8, Failure> {
    let x = ground_with_zero(ground_set)?;
    let cls: std::sync::Arc<Classification> = x.classification(common.mode()).map_err(usage)?;
    match common.format {
        Format::Json => print_json(&json!({
            "ground_set": x.base(),
            "mode": cls.mode,
            "non_sumsets": cls.non_sumsets,
            "non_summands": cls.non_summands,
            "neither": cls.neither,
            "counts": {
                "non_sumsets": cls.non_sumsets.len(),
                "non_summands": cls.non_summands.len(),
                "neither": cls.neither.len(),
            },
        })),
        Format::Table => {
            println!("X = {}", x.base());
            println!("{}", family_line("non-sumsets", &cls.non_sumsets));
            println!("{}", family_line("non-summands", &cls.non_summands));
            println!("{}", family_line("neither", &cls.neither));
        }
    }
    Ok(0)
}

fn status_code(s: SearchStatus) -> u8 {
    match s {
        SearchStatus::Found => 0,
        SearchStatus::ExhaustedNone => 1,
        SearchStatus::BudgetExceeded => 2,
        SearchStatus::GateRejected => 3,
    }
}

fn outcome_row(x: &GroundSet, o: &SearchOutcome) -> String {
    format!(
        "{:<16} {:<16} nodes={:<10} witnesses={}",
        x.base().to_string(),
        serde_json::to_value(o.status).expect("status serializes").as_str().unwrap_or(""),
        o.stats.nodes,
        o.witnesses.len()
    )
}

fn write_witness(path: &PathBuf, g: &Graph, o: &SearchOutcome) -> anyhow::Result<()> {
    if let Some(w) = o.witnesses.first() {
        let doc = Document::from_labeled(g, w)?;
        std::fs::write(path, doc.to_json_pretty()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn search(
    graph: &str,
    ground_set: &str,
    cfg: SearchConfig,
    out: Option<&PathBuf>,
    format: Format,
) -> Result<u8, Failure> {
    let spec: GraphSpec = graph.parse().map_err(usage)?;
    let g = spec.load().map_err(usage)?;
    let ground: GroundSpec = ground_set.parse().map_err(usage)?;
    match ground {
        GroundSpec::Explicit(lit) => {
            warn_duplicates(&lit);
            let x = GroundSet::new(lit.set).map_err(usage)?;
            let o = search_iasgl(&g, &x, &cfg).map_err(usage)?;
            match format {
                Format::Json => print_json(&serde_json::to_value(&o).expect("outcome serializes")),
                Format::Table => println!("{}", outcome_row(&x, &o)),
            }
            if let Some(p) = out {
                write_witness(p, &g, &o)?;
            }
            Ok(status_code(o.status))
        }
        GroundSpec::Sweep { n, max_element } => {
            let results = sweep_ground_sets(&g, n, max_element, &cfg).map_err(usage)?;
            match format {
                Format::Json => print_json(&json!(results
                    .iter()
                    .map(|(x, o)| json!({ "ground_set": x.base(), "outcome": o }))
                    .collect::<Vec<_>>())),
                Format::Table => results.iter().for_each(|(x, o)| println!("{}", outcome_row(x, o))),
            }
            let found = results.iter().find(|(_, o)| o.status == SearchStatus::Found);
            if let (Some(p), Some((_, o))) = (out, found) {
                write_witness(p, &g, o)?;
            }
            let any = |s| results.iter().any(|(_, o)| o.status == s);
            Ok(if found.is_some() {
                0
            } else if any(SearchStatus::BudgetExceeded) {
                2
            } else if results.iter().all(|(_, o)| o.status == SearchStatus::GateRejected) {
                3
            } else {
                1
            })
        }
    }
}

fn verify(path: &PathBuf, common: &Common) -> Result<u8, Failure> {
    let doc = read_document(path).map_err(usage)?;
    let missing = doc.unlabelled();
    if !missing.is_empty() {
        return Err(usage(anyhow!("vertices without labels: {}", missing.join(", "))));
    }
    let g = doc.graph().map_err(usage)?;
    let f = doc.labeling().map_err(usage)?;
    let (rung, violations) = highest_rung(&g, &f).map_err(usage)?;
    let gate = if f.ground().contains_zero() {
        Some(structural_gate(&g, f.ground(), common.mode()).map_err(usage)?)
    } else {
        None
    };
    match common.format {
        Format::Json => print_json(&json!({ "rung": rung, "violations": violations, "gate": gate })),
        Format::Table => {
            println!("highest rung: {}", serde_json::to_value(rung).expect("rung serializes").as_str().unwrap_or(""));
            for v in &violations {
                println!("  {:<16} {}", serde_json::to_value(v.rule).expect("rule serializes").as_str().unwrap_or(""), v.detail);
            }
        }
    }
    Ok(if rung == Rung::Iasgl { 0 } else { 1 })
}

fn construct(
    ground_set: &str,
    prefer: bool,
    out: Option<&PathBuf>,
    dot: Option<&PathBuf>,
    common: &Common,
) -> Result<u8, Failure> {
    let x = ground_with_zero(ground_set)?;
    let r = match build_realisation(&x, prefer, common.mode()) {
        Ok(r) => r,
        Err(e @ Error::Infeasible { .. }) => return Err(Failure::Exit(4, e.into())),
        Err(e) => return Err(usage(e)),
    };
    if let Some(p) = out {
        let doc = Document::from_labeled(&r.graph, &r.labeling).map_err(anyhow::Error::from)?;
        std::fs::write(p, doc.to_json_pretty()).with_context(|| format!("writing {}", p.display()))?;
    }
    if let Some(p) = dot {
        let text = to_dot(&r.graph, Some(&r.labeling)).map_err(anyhow::Error::from)?;
        std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    let pendants = r.graph.pendant_indices().len();
    match common.format {
        Format::Json => print_json(&json!({
            "ground_set": x.base(),
            "vertices": r.graph.order(),
            "edges": r.graph.size(),
            "pendants": pendants,
            "non_bipartite": r.non_bipartite,
            "bipartite_forced": r.bipartite_forced,
            "notes": r.notes,
            "assignment_trace": r.assignment_trace,
        })),
        Format::Table => {
            println!("X = {}", x.base());
            println!("vertices {}  edges {}  pendants {}  bipartite {}", r.graph.order(), r.graph.size(), pendants, !r.non_bipartite);
            for n in &r.notes {
                println!("note: {n}");
            }
        }
    }
    Ok(0)
}

fn theorems(cfg: HarnessConfig, report: Option<&PathBuf>, format: Format) -> Result<u8, Failure> {
    let r: TheoremReport = run_all(&cfg).map_err(usage)?;
    let text = r.to_json_pretty();
    if let Some(p) = report {
        std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
    }
    match format {
        Format::Json => println!("{text}"),
        Format::Table => {
            for c in &r.checks {
                let s = match c.status {
                    CheckStatus::Confirmed => "confirmed",
                    CheckStatus::Refuted => "REFUTED",
                    CheckStatus::UnknownBudget => "unknown",
                };
                println!("{:<28} {:<10} {}", c.id, s, c.evidence);
            }
            println!(
                "confirmed {}  refuted {}  unknown {}",
                r.totals.confirmed, r.totals.refuted, r.totals.unknown_budget
            );
        }
    }
    Ok(if r.any_refuted() { 1 } else { 0 })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify { ground_set, common } => classify(&ground_set, &common),
        Command::Search {
            graph,
            ground_set,
            node_budget,
            time_budget_ms,
            find_all,
            seed,
            gate,
            no_prune,
            out,
            common,
        } => {
            let mut rules = if no_prune { PruneRules::none() } else { PruneRules::default() };
            rules.gate = gate;
            let cfg = SearchConfig {
                mode: common.mode(),
                node_budget,
                time_budget_ms: (time_budget_ms > 0).then_some(time_budget_ms),
                find_all,
                seed,
                rules,
                parallel: true,
            };
            search(&graph, &ground_set, cfg, out.as_ref(), common.format)
        }
        Command::Verify { document, common } => verify(&document, &common),
        Command::Construct { ground_set, prefer_nonbipartite, out, dot, common } => {
            construct(&ground_set, prefer_nonbipartite, out.as_ref(), dot.as_ref(), &common)
        }
        Command::Theorems {
            n_min,
            n_max,
            max_element,
            trees,
            path_cycle_min,
            path_cycle_max,
            complete_min,
            complete_max,
            diophantine_max,
            node_budget,
            report,
            format,
        } => {
            let cfg = HarnessConfig {
                n_min,
                n_max,
                max_element,
                tree_orders: trees,
                path_cycle_range: (path_cycle_min, path_cycle_max),
                complete_range: (complete_min, complete_max),
                diophantine_max,
                node_budget,
                parallel: true,
            };
            theorems(cfg, report.as_ref(), format)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("IASGL_THREADS") {
        let n: usize = v.trim().parse().with_context(|| format!("IASGL_THREADS={v:?} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Exit(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
