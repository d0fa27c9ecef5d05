//! JSON and Graphviz renderings. Every JSON document carries `"schema": 1`.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};

use crate::closure::ClosurePoset;
use crate::graph::{components_bfs, OrbitGraph};

pub const SCHEMA: u32 = 1;

pub fn graph_json(g: &OrbitGraph) -> Value {
    let labels = components_bfs(g);
    json!({
        "schema": SCHEMA,
        "type": g.pair,
        "shape": g.shape,
        "signature": [g.signature.0, g.signature.1],
        "vertices": g.vertices,
        "diagrams": g.diagrams().iter().map(|t| t.text()).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| [e.a, e.b]).collect::<Vec<_>>(),
        "components": labels.labels,
    })
}

fn pi_label(v: &[usize]) -> String {
    let xs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", xs.join(","))
}

pub fn graph_dot(g: &OrbitGraph) -> String {
    let labels = components_bfs(g);
    let mut s = String::new();
    let (p, q) = g.signature;
    writeln!(
        s,
        "// orbit graph type={} shape=({}) signature=({p},{q})",
        g.pair, g.shape
    )
    .unwrap();
    writeln!(
        s,
        "// vertices={} edges={} components={}",
        g.vertex_count(),
        g.edge_count(),
        labels.count
    )
    .unwrap();
    writeln!(s, "graph orbit {{").unwrap();
    writeln!(s, "  node [shape=box, style=filled, colorscheme=set312];").unwrap();
    for (i, t) in g.diagrams().iter().enumerate() {
        writeln!(
            s,
            "  v{i} [label=\"{}\\n{}\", fillcolor={}];",
            pi_label(&g.vertices[i].0),
            t.text(),
            labels.labels[i] % 12 + 1
        )
        .unwrap();
    }
    for e in &g.edges {
        writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.a, e.b, e.vector).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn closure_json(poset: &ClosurePoset) -> Value {
    let nodes: Vec<Value> = poset
        .nodes
        .iter()
        .zip(&poset.dims)
        .map(|(t, d)| json!({"diagram": t.text(), "shape": t.shape(), "dim_k": d}))
        .collect();
    let covers: Vec<Value> = poset
        .covers
        .iter()
        .map(|c| json!([c.upper, c.lower, c.case, c.codim]))
        .collect();
    json!({
        "schema": SCHEMA,
        "type": poset.pair,
        "signature": [poset.signature.0, poset.signature.1],
        "nodes": nodes,
        "covers": covers,
    })
}

pub fn closure_dot(poset: &ClosurePoset) -> String {
    let mut s = String::new();
    let (p, q) = poset.signature;
    writeln!(
        s,
        "// closure diagram type={} signature=({p},{q})",
        poset.pair
    )
    .unwrap();
    writeln!(
        s,
        "// nodes={} covers={}",
        poset.nodes.len(),
        poset.covers.len()
    )
    .unwrap();
    writeln!(s, "digraph closure {{").unwrap();
    writeln!(s, "  rankdir=TB;").unwrap();
    writeln!(s, "  node [shape=box, fontname=monospace];").unwrap();
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &d) in poset.dims.iter().enumerate() {
        ranks.entry(d).or_default().push(i);
    }
    for (d, members) in ranks.iter().rev() {
        let ids: Vec<String> = members.iter().map(|i| format!("n{i}")).collect();
        writeln!(s, "  {{ rank=same; // dim_K = {d}").unwrap();
        for i in members {
            writeln!(
                s,
                "    n{i} [label=\"{}\"];",
                poset.nodes[*i].text().replace('/', "\\n")
            )
            .unwrap();
        }
        writeln!(s, "    {};", ids.join("; ")).unwrap();
        writeln!(s, "  }}").unwrap();
    }
    for c in &poset.covers {
        let style = if c.codim == 1 { "solid" } else { "dashed" };
        writeln!(
            s,
            "  n{} -> n{} [label=\"{}\", style={style}];",
            c.upper, c.lower, c.case
        )
        .unwrap();
    }
    s.push_str("}\n");
    s
}
