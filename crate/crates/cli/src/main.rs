use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use orbitgraph::emit::{closure_dot, closure_json, graph_dot, graph_json, SCHEMA};
use orbitgraph::verify::{self, Bounds, CheckReport};
use orbitgraph::{
    build_graph, classify, closure_diagram, component_count_formula, components_bfs, enumerate_syd,
    ind_set, product_decomposition, verify_component_bijection, verify_induction, Classification,
    PairType, Partition, SignedDiagram,
};

#[derive(Parser)]
#[command(
    name = "orbitgraph",
    version,
    about = "Nilpotent K-orbits, orbit graphs and closure diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Orbit {
    /// Symmetric pair: AIII, BDI, CI, CII or DIII.
    #[arg(long = "type", value_parser = parse_pair)]
    pair: PairType,
    /// Comma-separated parts, e.g. 4,3,3,1,1.
    #[arg(long, value_parser = parse_shape, allow_hyphen_values = true)]
    shape: Partition,
    /// Signature p,q.
    #[arg(long, value_parser = parse_sig)]
    sig: (usize, usize),
}

#[derive(Subcommand)]
enum Command {
    /// List the signed diagrams of a shape and signature.
    Enumerate {
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the orbit graph.
    Graph {
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count components by search and by formula.
    Components {
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Shape-only classification, checked against the graph.
    Classify {
        #[command(flatten)]
        orbit: Orbit,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Closure diagram of all orbits with one signature.
    Closure {
        #[arg(long = "type", value_parser = parse_pair)]
        pair: PairType,
        #[arg(long, value_parser = parse_sig)]
        sig: (usize, usize),
        /// Largest p + q accepted.
        #[arg(long, default_value_t = 12)]
        limit: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Induced diagrams of a smaller diagram, or the component bijection
    /// for one column-pair removal.
    Induce {
        #[arg(long = "type", value_parser = parse_pair)]
        pair: PairType,
        /// Target shape.
        #[arg(long, value_parser = parse_shape)]
        shape: Partition,
        /// Smaller diagram, e.g. "+-/-+/+".
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["height", "sig"])]
        diagram: Option<String>,
        /// Height of the removed column pair.
        #[arg(long, requires = "sig")]
        height: Option<usize>,
        #[arg(long, value_parser = parse_sig, requires = "height")]
        sig: Option<(usize, usize)>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generating-function coefficients against brute force.
    GenfuncCheck {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Jordan types of explicit induced matrices.
    AppendixCheck {
        /// Single shape to check; all small shapes if omitted.
        #[arg(long, value_parser = parse_shape)]
        shape: Option<Partition>,
        #[arg(long, default_value_t = 1)]
        height: usize,
        #[arg(long, default_value_t = 16)]
        limit: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Every cross-check; the size cap is further limited by ORBITGRAPH_MAX_N.
    Sweep {
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_pair(s: &str) -> Result<PairType, String> {
    s.parse().map_err(|e: orbitgraph::Error| e.to_string())
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: orbitgraph::Error| e.to_string())
}

fn parse_sig(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    let p = p.trim().parse().map_err(|_| format!("bad p `{p}`"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q `{q}`"))?;
    Ok((p, q))
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<orbitgraph::Error> for Failure {
    fn from(e: orbitgraph::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn no_dot(format: Format, cmd: &str) -> Outcome {
    if format == Format::Dot {
        return Err(Failure::Usage(format!(
            "--format dot is not available for `{cmd}`"
        )));
    }
    Ok(())
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn header(o: &Orbit) -> Value {
    json!({
        "schema": SCHEMA,
        "type": o.pair,
        "shape": o.shape,
        "signature": [o.sig.0, o.sig.1],
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Some(b), Value::Object(e)) = (base.as_object_mut(), extra) {
        b.extend(e);
    }
    base
}

fn enumerate(o: &Orbit, format: Format) -> Outcome {
    no_dot(format, "enumerate")?;
    let ds = enumerate_syd(o.pair, &o.shape, o.sig.0, o.sig.1)?;
    match format {
        Format::Text => ds.iter().for_each(|t| println!("{t}")),
        _ => print_json(&merge(
            header(o),
            json!({
                "count": ds.len(),
                "diagrams": ds.iter().map(SignedDiagram::text).collect::<Vec<_>>(),
                "pi_vectors": ds.iter().map(|t| t.pi_vector()).collect::<Vec<_>>(),
            }),
        )),
    }
    Ok(())
}

fn graph(o: &Orbit, format: Format) -> Outcome {
    let g = build_graph(o.pair, &o.shape, o.sig.0, o.sig.1)?;
    match format {
        Format::Json => print_json(&graph_json(&g)),
        Format::Dot => print!("{}", graph_dot(&g)),
        Format::Text => {
            for (i, t) in g.diagrams().iter().enumerate() {
                println!("{i}\t{:?}\t{t}", g.vertices[i].0);
            }
            for e in &g.edges {
                println!("{} -- {}\t{}", e.a, e.b, e.vector);
            }
        }
    }
    Ok(())
}

fn components(o: &Orbit, format: Format) -> Outcome {
    no_dot(format, "components")?;
    let g = build_graph(o.pair, &o.shape, o.sig.0, o.sig.1)?;
    let labels = components_bfs(&g);
    let formula = component_count_formula(o.pair, &o.shape, o.sig.0, o.sig.1)?;
    let ds = g.diagrams();
    let members: Vec<Vec<String>> = labels
        .members()
        .iter()
        .map(|m| m.iter().map(|&i| ds[i].text()).collect())
        .collect();
    let products: Option<Vec<String>> = if o.pair == PairType::Aiii {
        Some(
            product_decomposition(&o.shape, o.sig.0, o.sig.1)?
                .iter()
                .map(|c| c.describe())
                .collect(),
        )
    } else {
        None
    };
    let agree = labels.count as u64 == formula;
    match format {
        Format::Text => {
            println!("components: {} (formula {formula})", labels.count);
            for (i, m) in members.iter().enumerate() {
                let product = products
                    .as_ref()
                    .map_or(String::new(), |p| format!(" {}", p[i]));
                println!("{i}:{product} {}", m.join(" "));
            }
        }
        _ => {
            let mut v = merge(
                header(o),
                json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "components": labels.count,
                    "formula": formula,
                    "members": members,
                }),
            );
            if let Some(p) = products {
                v["products"] = json!(p);
            }
            print_json(&v);
        }
    }
    verdict(agree)
}

fn classify_cmd(o: &Orbit, format: Format) -> Outcome {
    no_dot(format, "classify")?;
    let flags = classify(o.pair, &o.shape, o.sig.0, o.sig.1)?;
    let g = build_graph(o.pair, &o.shape, o.sig.0, o.sig.1)?;
    let agree = flags == Classification::of_graph(&g);
    match format {
        Format::Text => println!("{flags:?}{}", if agree { "" } else { " (graph disagrees)" }),
        _ => print_json(&merge(
            header(o),
            json!({"flags": flags, "graph_agrees": agree}),
        )),
    }
    verdict(agree)
}

fn closure(pair: PairType, (p, q): (usize, usize), limit: usize, format: Format) -> Outcome {
    let poset = closure_diagram(pair, p, q, limit)?;
    match format {
        Format::Json => print_json(&closure_json(&poset)),
        Format::Dot => print!("{}", closure_dot(&poset)),
        Format::Text => {
            for c in &poset.covers {
                println!(
                    "{} > {}\t{}\tcodim {}",
                    poset.nodes[c.upper], poset.nodes[c.lower], c.case, c.codim
                );
            }
        }
    }
    verdict(poset.is_graded())
}

fn induce(
    pair: PairType,
    shape: &Partition,
    diagram: Option<&str>,
    removal: Option<(usize, (usize, usize))>,
    format: Format,
) -> Outcome {
    no_dot(format, "induce")?;
    if let Some(text) = diagram {
        let t: SignedDiagram = text.parse()?;
        let out = ind_set(pair, &t, shape)?;
        match format {
            Format::Text => out.iter().for_each(|d| println!("{d}")),
            _ => print_json(&json!({
                "schema": SCHEMA,
                "type": pair,
                "from": t.text(),
                "shape": shape,
                "diagrams": out.iter().map(SignedDiagram::text).collect::<Vec<_>>(),
            })),
        }
        return Ok(());
    }
    let Some((h, (p, q))) = removal else {
        return Err(Failure::Usage(
            "induce needs --diagram, or --height with --sig".into(),
        ));
    };
    let report = verify_component_bijection(pair, shape, h, p, q)?;
    match format {
        Format::Text => {
            println!(
                "{} -> {}: {} components, {} after removal, {}",
                report.shape,
                report.reduced,
                report.components,
                report.reduced_components,
                if report.passed() {
                    "bijection"
                } else {
                    "mismatch"
                }
            );
            report.failures.iter().for_each(|f| println!("  {f}"));
        }
        _ => print_json(&merge(
            json!({"schema": SCHEMA}),
            serde_json::to_value(&report).expect("serializable"),
        )),
    }
    verdict(report.passed())
}

fn print_reports(reports: &[CheckReport], format: Format) -> Outcome {
    match format {
        Format::Text => {
            for r in reports {
                println!("{r}");
                for f in r.failures.iter().take(20) {
                    println!("    {f}");
                }
            }
        }
        _ => print_json(&json!({"schema": SCHEMA, "checks": reports})),
    }
    verdict(reports.iter().all(|r| r.passed))
}

fn matrix_check(shape: Option<&Partition>, h: usize, limit: usize, format: Format) -> Outcome {
    no_dot(format, "appendix-check")?;
    let Some(shape) = shape else {
        let b = Bounds::default();
        return print_reports(
            &[verify::check_matrix_induction(
                b.matrix_size,
                b.matrix_rows,
                b.matrix_height,
            )],
            format,
        );
    };
    let report = verify_induction(shape, h, limit)?;
    match format {
        Format::Text => {
            for o in &report.outcomes {
                let slots: Vec<String> = o.slots.iter().map(|s| s.to_string()).collect();
                println!(
                    "[{}]\texpected {}\tobserved {}",
                    slots.join(","),
                    o.expected,
                    o.observed
                );
            }
            match &report.maximum {
                Some(m) => println!("maximum {m} (expected {})", report.expected_maximum),
                None => println!("no maximum (expected {})", report.expected_maximum),
            }
        }
        _ => print_json(&merge(
            json!({"schema": SCHEMA}),
            serde_json::to_value(&report).expect("serializable"),
        )),
    }
    verdict(report.passed())
}

fn env_cap() -> Result<Option<usize>, Failure> {
    match std::env::var("ORBITGRAPH_MAX_N") {
        Ok(v) => {
            v.trim().parse().map(Some).map_err(|_| {
                Failure::Usage(format!("ORBITGRAPH_MAX_N must be an integer, got `{v}`"))
            })
        }
        Err(_) => Ok(None),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Enumerate { orbit, format } => enumerate(&orbit, format),
        Command::Graph { orbit, format } => graph(&orbit, format),
        Command::Components { orbit, format } => components(&orbit, format),
        Command::Classify { orbit, format } => classify_cmd(&orbit, format),
        Command::Closure {
            pair,
            sig,
            limit,
            format,
        } => closure(pair, sig, limit, format),
        Command::Induce {
            pair,
            shape,
            diagram,
            height,
            sig,
            format,
        } => induce(pair, &shape, diagram.as_deref(), height.zip(sig), format),
        Command::GenfuncCheck { max_n, format } => {
            no_dot(format, "genfunc-check")?;
            let cap = env_cap()?.map_or(max_n, |c| c.min(max_n));
            print_reports(&[verify::check_genfunc(cap)], format)
        }
        Command::AppendixCheck {
            shape,
            height,
            limit,
            format,
        } => matrix_check(shape.as_ref(), height, limit, format),
        Command::Sweep { max_n, format } => {
            no_dot(format, "sweep")?;
            let cap = match (max_n, env_cap()?) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            let bounds = cap.map_or_else(Bounds::default, Bounds::capped);
            print_reports(&verify::sweep(&bounds), format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
