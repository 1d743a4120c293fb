use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use toricgraph::algebra::text::{format_binomial, format_monomial};
use toricgraph::chromatic::{chromatic_certificate, order_search, principal_shortcut, ChromaticCertificate};
use toricgraph::enumerate::connected_graphs_up_to;
use toricgraph::export::macaulay2_script;
use toricgraph::gb::{monomial_ideal_height, BinomialIdeal};
use toricgraph::graph::parse_graph;
use toricgraph::kmy::{default_order, deletion_sequence, kmy_decompose, kmy_heights, nondegenerate_steps};
use toricgraph::toric::{
    classify_primitive_subgraph, graver_basis_with, height_toric_from, initial_ideal_via_groebner, toric_ideal,
    GraverBackend,
};
use toricgraph::verify::{summarize, verify_graph, Outcome, VerifyConfig};
use toricgraph::{catalog, Error, Graph, MonomialOrder, Result};

#[derive(Parser)]
#[command(name = "toricgraph", version, about = "Toric ideals of graphs and the certificates they give")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Seed for randomized order candidates.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Refuse graphs with more edges than this.
    #[arg(long, default_value_t = 24, global = true)]
    max_edges: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(clap::Args)]
struct OrderArgs {
    /// Order spec, e.g. `lex:e6,e3,e1,e2,e4,e5,e7`, `grevlex`, `ytop:e6+grevlex`.
    #[arg(long)]
    order: Option<String>,
    /// Complete a partial lex/grevlex list by index order.
    #[arg(long)]
    partial: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of I_G under graded reverse lex.
    Ideal { graph: String },
    /// Reduced Gröbner basis of I_G under a chosen order.
    Gb {
        graph: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Minimal generators of the initial ideal.
    Init {
        graph: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// KMY decomposition of I_G with respect to an edge.
    Kmy {
        graph: String,
        /// Edge label, e.g. 6 or e6.
        #[arg(long)]
        edge: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Height by formula and by degeneration, plus a deletion sequence.
    Height { graph: String },
    /// Chromatic bound from a vertex cover of the initial ideal.
    Chroma {
        graph: String,
        #[command(flatten)]
        order: OrderArgs,
        /// Search this many lex orders instead of using --order.
        #[arg(long, conflicts_with = "order")]
        search: Option<usize>,
    },
    /// Graver basis with closed walks.
    Graver {
        graph: String,
        #[arg(long, value_enum, default_value_t = Backend::Enumeration)]
        backend: Backend,
    },
    /// Property suites over one graph or all connected graphs up to p vertices.
    Verify {
        #[arg(required_unless_present = "exhaustive")]
        graph: Option<String>,
        #[arg(long, conflicts_with = "graph")]
        exhaustive: Option<usize>,
    },
    /// Macaulay2 script recomputing I_G.
    ExportM2 { graph: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Enumeration,
    Lawrence,
}

/// What a command prints, in both formats.
struct Report {
    human: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(human: String, json: Value) -> Self {
        Report { human, json, ok: true }
    }
}

fn load(input: &str, max_edges: usize) -> Result<Graph> {
    let path = Path::new(input);
    let g = if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Structural(format!("cannot read {input}: {e}")))?;
        parse_graph(&text)?
    } else if let Some(g) = catalog::by_name(input) {
        g
    } else {
        return Err(Error::Structural(format!(
            "{input}: no such file or named graph (names: {})",
            catalog::NAMES.join(", ")
        )));
    };
    if g.edge_count() > max_edges {
        return Err(Error::Capability(format!(
            "graph has {} edges, above --max-edges {max_edges}",
            g.edge_count()
        )));
    }
    Ok(g)
}

fn parse_order(g: &Graph, args: &OrderArgs, default: MonomialOrder) -> Result<MonomialOrder> {
    match &args.order {
        Some(spec) => MonomialOrder::parse_spec(spec, &g.labels(), args.partial),
        None => Ok(default),
    }
}

fn parse_edge(g: &Graph, text: &str) -> Result<usize> {
    let label: usize = text
        .trim_start_matches('e')
        .parse()
        .map_err(|_| Error::Structural(format!("bad edge {text:?}")))?;
    g.position_of(label)?;
    Ok(label)
}

fn binomials(ideal: &BinomialIdeal, labels: &[usize]) -> Vec<String> {
    ideal.generators().iter().map(|b| format_binomial(b, labels)).collect()
}

fn ideal_report(g: &Graph, ideal: &BinomialIdeal, order: &MonomialOrder) -> Report {
    let labels = g.labels();
    let gens = binomials(ideal, &labels);
    let spec = order.to_spec(&labels);
    let human = if gens.is_empty() {
        "zero ideal\n".to_string()
    } else {
        ideal.to_text(&labels)
    };
    Report::new(human, json!({ "vars": g.edge_count(), "order": spec, "generators": gens }))
}

fn cmd_ideal(g: &Graph) -> Result<Report> {
    let ideal = toric_ideal(g)?;
    Ok(ideal_report(g, &ideal, &MonomialOrder::grevlex_identity(g.edge_count())))
}

fn cmd_gb(g: &Graph, args: &OrderArgs) -> Result<Report> {
    let order = parse_order(g, args, MonomialOrder::grevlex_identity(g.edge_count()))?;
    let ideal = toric_ideal(g)?.reduced(&order)?;
    Ok(ideal_report(g, &ideal, &order))
}

fn cmd_init(g: &Graph, args: &OrderArgs) -> Result<Report> {
    let labels = g.labels();
    let order = parse_order(g, args, MonomialOrder::grevlex_identity(g.edge_count()))?;
    let init = initial_ideal_via_groebner(&toric_ideal(g)?, &order)?;
    let gens: Vec<String> = init.iter().map(|m| format_monomial(m, &labels)).collect();
    let height = monomial_ideal_height(&init).unwrap_or(0);
    let human = format!("order: {}\ninit = <{}>\nheight: {height}\n", order.to_spec(&labels), gens.join(", "));
    Ok(Report::new(human, json!({ "order": order.to_spec(&labels), "generators": gens, "height": height })))
}

fn cmd_kmy(g: &Graph, edge: &str, args: &OrderArgs) -> Result<Report> {
    let labels = g.labels();
    let label = parse_edge(g, edge)?;
    let y = g.position_of(label)?;
    let order = parse_order(g, args, default_order(g.edge_count(), y)?)?;
    let dec = kmy_decompose(&toric_ideal(g)?, y, &order)?;
    let heights = kmy_heights(&dec)?;
    let mut human = dec.to_text(&labels);
    human.push_str(&format!("heights: C = {}, I = {}, N = {}\n", heights.c, heights.i, heights.n));
    let splits: Vec<Value> = dec
        .splits
        .iter()
        .map(|s| {
            json!({
                "element": format_binomial(&s.element, &labels),
                "d": s.d,
                "q": format_binomial(&s.q, &labels),
                "r": s.r.as_ref().map(|m| format_monomial(m, &labels)),
            })
        })
        .collect();
    let json = json!({
        "y": format!("e{label}"),
        "order": order.to_spec(&labels),
        "gb": splits,
        "C": binomials(&dec.c, &labels),
        "N": binomials(&dec.n, &labels),
        "init_y": dec.init_y_ideal.iter().map(|b| format_binomial(b, &labels)).collect::<Vec<_>>(),
        "degenerate": dec.degenerate,
        "heights": { "C": heights.c, "I": heights.i, "N": heights.n },
    });
    Ok(Report::new(human, json))
}

fn cmd_height(g: &Graph) -> Result<Report> {
    let report = height_toric_from(g, &toric_ideal(g)?)?;
    let steps = deletion_sequence(g)?;
    let seq: Vec<String> = steps
        .iter()
        .map(|s| format!("e{}{}", s.label, if s.degenerate { " (degenerate)" } else { "" }))
        .collect();
    let human = format!(
        "height (formula): {}\nheight (degeneration): {}\ndeletion sequence: {}\nnondegenerate steps: {}\n",
        report.formula,
        report.degeneration,
        if seq.is_empty() { "(empty)".to_string() } else { seq.join(", ") },
        nondegenerate_steps(&steps)
    );
    let json = json!({
        "formula": report.formula,
        "degeneration": report.degeneration,
        "deletion_sequence": steps.iter().map(|s| json!({ "edge": format!("e{}", s.label), "degenerate": s.degenerate })).collect::<Vec<_>>(),
        "nondegenerate_steps": nondegenerate_steps(&steps),
    });
    Ok(Report::new(human, json))
}

fn certificate_json(cert: &ChromaticCertificate) -> Value {
    let labels = &cert.labels;
    let gens: Vec<String> = cert.init_gens.iter().map(|m| format_monomial(m, labels)).collect();
    let witness: serde_json::Map<String, Value> = cert
        .divisibility_witness
        .iter()
        .map(|&(i, v)| (gens[i].clone(), Value::from(format!("e{}", labels[v]))))
        .collect();
    json!({
        "order": cert.order_spec(),
        "init_generators": gens,
        "cover": cert.cover_labels().iter().map(|l| format!("e{l}")).collect::<Vec<_>>(),
        "bound": cert.bound,
        "exact_chromatic_number": cert.exact_chi,
        "delta_plus_one": cert.delta_plus_one,
        "cover_is_minimum": cert.cover_is_minimum,
        "divisibility_witness": witness,
    })
}

fn cmd_chroma(g: &Graph, args: &OrderArgs, search: Option<usize>, seed: u64) -> Result<Report> {
    let cert = match search {
        Some(budget) => order_search(g, budget, seed)?,
        None => chromatic_certificate(g, &parse_order(g, args, MonomialOrder::lex_identity(g.edge_count()))?)?,
    };
    let shortcut = principal_shortcut(g)?;
    let mut human = cert.to_text();
    if let Some(b) = shortcut {
        human.push_str(&format!("principal_shortcut: {b}\n"));
    }
    let mut json = certificate_json(&cert);
    json["principal_shortcut"] = json!(shortcut);
    Ok(Report::new(human, json))
}

fn cmd_graver(g: &Graph, backend: Backend, max_edges: usize) -> Result<Report> {
    let labels = g.labels();
    let backend = match backend {
        Backend::Enumeration => GraverBackend::KernelEnumeration,
        Backend::Lawrence => GraverBackend::LawrenceLifting,
    };
    let walks = graver_basis_with(g, backend, max_edges)?;
    let mut human = format!("{} primitive binomials\n", walks.len());
    let mut items = Vec::new();
    for w in &walks {
        let text = format_binomial(&w.binomial, &labels);
        let walk = w.closed_walk(g)?;
        let class = match classify_primitive_subgraph(w, g)? {
            toricgraph::toric::PrimitiveClass::EvenCycle => "even_cycle",
            toricgraph::toric::PrimitiveClass::TwoEdgeDisjointOddCycles => "contains_two_edge_disjoint_odd_cycles",
        };
        let path: Vec<String> = walk.iter().map(usize::to_string).collect();
        human.push_str(&format!("{text}    walk {}    {class}\n", path.join("-")));
        items.push(json!({ "binomial": text, "walk": walk, "class": class }));
    }
    Ok(Report::new(human, json!({ "elements": items })))
}

fn outcome_text(o: &Outcome) -> String {
    match o {
        Outcome::Pass => "pass".into(),
        Outcome::Fail(why) => format!("FAIL: {why}"),
        Outcome::Skipped(why) => format!("skipped ({why})"),
    }
}

fn outcome_json(o: &Outcome) -> Value {
    match o {
        Outcome::Pass => json!({ "status": "pass" }),
        Outcome::Fail(why) => json!({ "status": "fail", "detail": why }),
        Outcome::Skipped(why) => json!({ "status": "skipped", "detail": why }),
    }
}

fn cmd_verify_one(g: &Graph, cfg: &VerifyConfig) -> Report {
    let results = verify_graph(g, cfg);
    let mut human = String::new();
    let mut json = serde_json::Map::new();
    for r in &results {
        human.push_str(&format!("{:<24} {}\n", r.property, outcome_text(&r.outcome)));
        json.insert(r.property.clone(), outcome_json(&r.outcome));
    }
    let ok = results.iter().all(|r| !matches!(r.outcome, Outcome::Fail(_)));
    Report { human, json: Value::Object(json), ok }
}

fn cmd_verify_exhaustive(p: usize, cfg: &VerifyConfig, max_edges: usize) -> Result<Report> {
    if p > 7 {
        return Err(Error::Capability("exhaustive verification is limited to p <= 7".into()));
    }
    let graphs: Vec<Graph> = connected_graphs_up_to(p).into_iter().filter(|g| g.edge_count() <= max_edges).collect();
    let results: Vec<_> = graphs.par_iter().map(|g| verify_graph(g, cfg)).collect();
    let summary = summarize(&graphs, &results);
    let mut human = format!("{} connected graphs with at most {p} vertices\n", summary.graphs);
    human.push_str(&format!("{:<24} {:>6} {:>6} {:>6}\n", "property", "pass", "fail", "skip"));
    for (name, pass, fail, skip) in &summary.rows {
        human.push_str(&format!("{name:<24} {pass:>6} {fail:>6} {skip:>6}\n"));
    }
    for (g, prop, why) in &summary.failures {
        human.push_str(&format!("failure in {prop}: {why}\n{g}"));
    }
    let json = json!({
        "graphs": summary.graphs,
        "rows": summary.rows.iter().map(|(n, p, f, s)| json!({ "property": n, "pass": p, "fail": f, "skip": s })).collect::<Vec<_>>(),
        "failures": summary.failures.iter().map(|(g, p, w)| json!({ "graph": g, "property": p, "detail": w })).collect::<Vec<_>>(),
    });
    Ok(Report { human, json, ok: summary.all_passed() })
}

fn run(cli: &Cli) -> Result<Report> {
    let load = |input: &str| load(input, cli.max_edges);
    let cfg = VerifyConfig { seed: cli.seed, ..VerifyConfig::default() };
    match &cli.command {
        Command::Ideal { graph } => cmd_ideal(&load(graph)?),
        Command::Gb { graph, order } => cmd_gb(&load(graph)?, order),
        Command::Init { graph, order } => cmd_init(&load(graph)?, order),
        Command::Kmy { graph, edge, order } => cmd_kmy(&load(graph)?, edge, order),
        Command::Height { graph } => cmd_height(&load(graph)?),
        Command::Chroma { graph, order, search } => cmd_chroma(&load(graph)?, order, *search, cli.seed),
        Command::Graver { graph, backend } => cmd_graver(&load(graph)?, *backend, cli.max_edges),
        Command::Verify { graph: Some(graph), .. } => Ok(cmd_verify_one(&load(graph)?, &cfg)),
        Command::Verify { exhaustive: Some(p), .. } => cmd_verify_exhaustive(*p, &cfg, cli.max_edges),
        Command::Verify { .. } => Err(Error::Structural("give a graph or --exhaustive".into())),
        Command::ExportM2 { graph } => {
            let script = macaulay2_script(&load(graph)?);
            Ok(Report::new(script.clone(), json!({ "script": script })))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("TORICGRAPH_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Human => print!("{}", report.human),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
