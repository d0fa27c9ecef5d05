//! The cross-check battery. Each check compares two independent routes to
//! the same answer over every case up to a size bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{closure_diagram, codim_one_covers, covers_down};
use crate::graph::{
    adjacency_by_pattern, build_graph, build_graph_with, check_product, classify,
    component_count_formula, components_bfs, generic_directions, product_decomposition,
    representatives, Classification,
};
use crate::induction::verify_component_bijection;
use crate::matrix::verify_induction;
use crate::oracle::brute_counts;
use crate::pair::PairType;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::series::genfunc;
use crate::signed::SignedDiagram;

/// Size bounds for each check.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Bounds {
    pub genfunc: usize,
    pub components: usize,
    pub edges: usize,
    pub even: usize,
    pub induction: usize,
    pub matrix_size: usize,
    pub matrix_rows: usize,
    pub matrix_height: usize,
    pub closure: (usize, usize),
    pub closure_limit: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            genfunc: 10,
            components: 12,
            edges: 8,
            even: 12,
            induction: 10,
            matrix_size: 8,
            matrix_rows: 4,
            matrix_height: 2,
            closure: (3, 3),
            closure_limit: 12,
        }
    }
}

impl Bounds {
    /// Default bounds with every size capped at `max_n`.
    pub fn capped(max_n: usize) -> Self {
        let d = Bounds::default();
        let (p, q) = d.closure;
        let closure = if p + q <= max_n {
            (p, q)
        } else {
            (max_n / 2, max_n - max_n / 2)
        };
        Bounds {
            genfunc: d.genfunc.min(max_n),
            components: d.components.min(max_n),
            edges: d.edges.min(max_n),
            even: d.even.min(max_n),
            induction: d.induction.min(max_n),
            matrix_size: d.matrix_size.min(max_n),
            closure,
            ..d
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Every comparison is an exact equality.
    pub tolerance: String,
    pub seconds: f64,
    pub budget_seconds: Option<f64>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} {}: {} cases, {} failures, tolerance {}, {:.2}s",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.cases,
            self.failures.len(),
            self.tolerance,
            self.seconds
        )?;
        match self.budget_seconds {
            Some(b) => write!(f, " (budget {b:.0}s)"),
            None => Ok(()),
        }
    }
}

fn run(id: &str, title: String, body: impl FnOnce() -> (usize, Vec<String>)) -> CheckReport {
    let start = Instant::now();
    let (cases, mut failures) = body();
    let seconds = start.elapsed().as_secs_f64();
    let budget_seconds = budget(id);
    if let Some(b) = budget_seconds {
        if seconds > b {
            failures.push(format!("took {seconds:.1}s, budget {b:.0}s"));
        }
    }
    CheckReport {
        id: id.to_string(),
        title,
        passed: failures.is_empty(),
        cases,
        failures,
        tolerance: "exact".into(),
        seconds,
        budget_seconds,
    }
}

fn budget(id: &str) -> Option<f64> {
    match id {
        "C1" => Some(30.0),
        "C2" | "C4" => Some(120.0),
        "C3" => Some(5.0),
        "C7" => Some(60.0),
        _ => None,
    }
}

/// `(pair, shape, p, q)` for every allowed signature of every shape up to `max_n`.
fn cases(max_n: usize, admissible_only: bool) -> Vec<(PairType, Partition, usize, usize)> {
    let mut out = Vec::new();
    for shape in partitions_up_to(max_n) {
        for pair in PairType::ALL {
            if admissible_only && !shape.admissible_for(pair) {
                continue;
            }
            for (p, q) in pair.signatures(shape.size()) {
                out.push((pair, shape.clone(), p, q));
            }
        }
    }
    out
}

fn collect(results: Vec<(usize, Vec<String>)>) -> (usize, Vec<String>) {
    results
        .into_iter()
        .fold((0, Vec::new()), |(n, mut f), (m, mut g)| {
            f.append(&mut g);
            (n + m, f)
        })
}

/// Generating-function coefficients against brute-force diagram counts,
/// for every `(p, q)` with `p + q = n`.
pub fn check_genfunc(max_n: usize) -> CheckReport {
    run(
        "C1",
        format!("generating function vs brute force (n <= {max_n}, all types)"),
        || {
            let shapes = partitions_up_to(max_n);
            let results: Vec<(usize, Vec<String>)> = PairType::ALL
                .par_iter()
                .map(|&pair| {
                    let g = genfunc(pair, max_n);
                    let mut n_cases = 0;
                    let mut fails = Vec::new();
                    let mut total_terms = 0i64;
                    for shape in &shapes {
                        let counts = brute_counts(pair, shape);
                        let n = shape.size();
                        for p in 0..=n {
                            let q = n - p;
                            let coeff = g.coefficient(shape, p, q).expect("within bound");
                            let brute = counts.get(&(p, q)).copied().unwrap_or(0) as i64;
                            total_terms += coeff;
                            n_cases += 1;
                            if coeff != brute {
                                fails.push(format!(
                                    "{pair} {shape} ({p},{q}): series {coeff}, brute {brute}"
                                ));
                            }
                        }
                    }
                    let series_total: i64 = g.terms().map(|(_, c)| *c).sum();
                    if series_total != total_terms {
                        fails.push(format!("{pair}: series has terms outside partition shapes"));
                    }
                    (n_cases, fails)
                })
                .collect();
            collect(results)
        },
    )
}

/// Closed-form component counts against breadth-first search.
pub fn check_components(max_n: usize) -> CheckReport {
    run(
        "C2",
        format!("component formula vs BFS (n <= {max_n}, all types)"),
        || {
            let results: Vec<(usize, Vec<String>)> = cases(max_n, false)
                .into_par_iter()
                .map(|(pair, shape, p, q)| {
                    let mut fails = Vec::new();
                    let g = build_graph(pair, &shape, p, q).expect("valid signature");
                    let bfs = components_bfs(&g).count as u64;
                    let formula =
                        component_count_formula(pair, &shape, p, q).expect("valid signature");
                    if bfs != formula {
                        fails.push(format!(
                            "{pair} {shape} ({p},{q}): formula {formula}, BFS {bfs}"
                        ));
                    }
                    if pair == PairType::Aiii {
                        let reps = representatives(&shape, p, q)
                            .expect("valid signature")
                            .len() as u64;
                        if reps != bfs {
                            fails.push(format!("AIII {shape} ({p},{q}): {reps} tuples, BFS {bfs}"));
                        }
                    }
                    (1, fails)
                })
                .collect();
            collect(results)
        },
    )
}

/// Fixed worked examples.
pub fn check_golden() -> CheckReport {
    run("C3", "golden examples".into(), || {
        let mut fails = Vec::new();
        let mut n = 0;
        let mut expect = |cond: bool, what: &str| {
            n += 1;
            if !cond {
                fails.push(what.to_string());
            }
        };
        let part = |s: &str| -> Partition { s.parse().expect("literal") };

        let s1 = part("6,4,4,2,2");
        let g1 = build_graph(PairType::Aiii, &s1, 9, 9).expect("graph");
        expect(g1.vertex_count() == 18, "(6,4,4,2,2),(9,9) has 18 vertices");
        expect(
            components_bfs(&g1).count == 1,
            "(6,4,4,2,2),(9,9) is connected",
        );
        let d1 = product_decomposition(&s1, 9, 9).expect("product");
        expect(
            d1.len() == 1 && d1[0].describe() == "C(1,2,2)" && check_product(&g1, &d1[0]),
            "(6,4,4,2,2),(9,9) is C(1,2,2)",
        );

        let s2 = part("4,3,3,1,1");
        let g2 = build_graph(PairType::Aiii, &s2, 6, 6).expect("graph");
        let d2 = product_decomposition(&s2, 6, 6).expect("product");
        let tuples: Vec<Vec<usize>> = d2.iter().map(|c| c.tuple.clone()).collect();
        expect(
            tuples == vec![vec![0, 2], vec![1, 2]],
            "(4,3,3,1,1),(6,6) tuples (0,2),(1,2)",
        );
        let desc: Vec<String> = d2.iter().map(|c| c.describe()).collect();
        expect(
            desc == ["A(1;0) x A(2,2;2)", "A(1;1) x A(2,2;2)"],
            "(4,3,3,1,1),(6,6) factors",
        );
        expect(
            d2.iter().all(|c| check_product(&g2, c)),
            "(4,3,3,1,1) products match components",
        );
        expect(
            components_bfs(&g2).count == 2,
            "(4,3,3,1,1),(6,6) has two components",
        );

        let s3 = part("9,9,8,8,6,5,4,2,2");
        let g3 = build_graph(PairType::Aiii, &s3, 27, 26).expect("graph");
        let d3 = product_decomposition(&s3, 27, 26).expect("product");
        expect(
            d3.len() == 8,
            "(9,9,8,8,6,5,4,2,2),(27,26) has 8 components",
        );
        expect(components_bfs(&g3).count == 8, "BFS finds 8 components");
        expect(
            d3.iter().all(|c| {
                let (p1, p2, p3) = (c.tuple[0], c.tuple[1], c.tuple[2]);
                p1 + p3 == 2
                    && p1 <= 2
                    && p2 <= 3
                    && p3 <= 1
                    && c.describe() == format!("A(2;{p1}) x A(2,1;{p2}) x A(1;{p3}) x C(1,2)")
            }),
            "eight components are A(2;p1) x A(2,1;p2) x A(1;p3) x C(1,2)",
        );
        expect(
            d3.iter().all(|c| check_product(&g3, c)),
            "products match components",
        );

        let ks = s3.k_sequence();
        expect(ks.ks() == [2, 5, 6], "k-sequence (2,5,6)");
        let dim = s1.orbit_dimension(PairType::Aiii).expect("dim");
        expect((dim.dim_g, dim.dim_k) == (254, 127), "dimensions (254,127)");

        let t: SignedDiagram = "+-+-".parse().expect("literal");
        let covers = covers_down(PairType::Aiii, &t).expect("covers");
        let got: Vec<(String, i64)> = covers.iter().map(|c| (c.lower.text(), c.codim)).collect();
        expect(
            got == [
                ("+-+/-".to_string(), 1),
                ("-+-/+".to_string(), 1),
                ("+-/+-".to_string(), 2),
            ],
            "covers of +-+- are +-+/-, -+-/+ and +-/+-",
        );
        (n, fails)
    })
}

/// π-rule edges, pattern adjacency and shared codimension-one covers agree.
pub fn check_edge_oracles(max_n: usize) -> CheckReport {
    run(
        "C4",
        format!("edge rule vs patterns vs shared covers (n <= {max_n}, all types)"),
        || {
            let results: Vec<(usize, Vec<String>)> = cases(max_n, true)
            .into_par_iter()
            .map(|(pair, shape, p, q)| {
                let mut fails = Vec::new();
                let g = build_graph(pair, &shape, p, q).expect("graph");
                let wide = build_graph_with(pair, &shape, p, q, &generic_directions(g.vertices.first().map_or(0, |v| v.0.len())))
                    .expect("graph");
                let rule = g.edge_set();
                if wide.edge_set() != rule {
                    fails.push(format!("{pair} {shape} ({p},{q}): unrestricted directions add edges"));
                }
                let ds = g.diagrams();
                let below: Vec<BTreeSet<SignedDiagram>> = ds
                    .iter()
                    .map(|t| {
                        codim_one_covers(pair, t)
                            .expect("valid diagram")
                            .into_iter()
                            .map(|c| c.lower)
                            .collect()
                    })
                    .collect();
                let mut by_pattern = BTreeSet::new();
                let mut by_cover = BTreeSet::new();
                for i in 0..ds.len() {
                    for j in i + 1..ds.len() {
                        if adjacency_by_pattern(pair, &ds[i], &ds[j]) {
                            by_pattern.insert((i, j));
                        }
                        if !below[i].is_disjoint(&below[j]) {
                            by_cover.insert((i, j));
                        }
                    }
                }
                for (name, other) in [("patterns", &by_pattern), ("shared covers", &by_cover)] {
                    if *other != rule {
                        let extra: Vec<_> = other.difference(&rule).map(|&(i, j)| format!("{}~{}", ds[i], ds[j])).collect();
                        let missing: Vec<_> = rule.difference(other).map(|&(i, j)| format!("{}~{}", ds[i], ds[j])).collect();
                        fails.push(format!(
                            "{pair} {shape} ({p},{q}): {name} differ; extra {extra:?}, missing {missing:?}"
                        ));
                    }
                }
                (1, fails)
            })
            .collect();
            collect(results)
        },
    )
}

/// Graphs of even orbits are connected.
pub fn check_even_orbits(max_n: usize) -> CheckReport {
    run(
        "C5",
        format!("even orbits give connected graphs (n <= {max_n}, all types)"),
        || {
            let results: Vec<(usize, Vec<String>)> = cases(max_n, true)
                .into_par_iter()
                .filter(|(_, shape, _, _)| shape.is_even_orbit())
                .map(|(pair, shape, p, q)| {
                    let g = build_graph(pair, &shape, p, q).expect("graph");
                    let c = components_bfs(&g).count;
                    if g.vertex_count() > 0 && c != 1 {
                        (1, vec![format!("{pair} {shape} ({p},{q}): {c} components")])
                    } else {
                        (usize::from(g.vertex_count() > 0), vec![])
                    }
                })
                .collect();
            collect(results)
        },
    )
}

/// Induction along each removable column pair is a bijection on components.
pub fn check_induction(max_n: usize) -> CheckReport {
    run(
        "C6",
        format!("graph induction bijection (admissible shapes, n <= {max_n}, all types, all h)"),
        || {
            let mut jobs = Vec::new();
            for (pair, shape, p, q) in cases(max_n, true) {
                for h in shape.removable_heights() {
                    jobs.push((pair, shape.clone(), h, p, q));
                }
            }
            let results: Vec<(usize, Vec<String>)> = jobs
                .into_par_iter()
                .map(|(pair, shape, h, p, q)| {
                    match verify_component_bijection(pair, &shape, h, p, q) {
                        Ok(r) if r.passed() => (1, vec![]),
                        Ok(r) => (
                            1,
                            vec![format!("{pair} {shape} h={h} ({p},{q}): {:?}", r.failures)],
                        ),
                        Err(e) => (1, vec![format!("{pair} {shape} h={h} ({p},{q}): {e}")]),
                    }
                })
                .collect();
            collect(results)
        },
    )
}

/// Jordan types of explicit induced matrices.
pub fn check_matrix_induction(max_size: usize, max_rows: usize, max_h: usize) -> CheckReport {
    run(
        "C7",
        format!("matrix induction oracle (n' <= {max_size}, rows <= {max_rows}, h <= {max_h})"),
        || {
            let mut jobs = Vec::new();
            for shape in partitions_up_to(max_size) {
                if shape.len() <= max_rows {
                    for h in 1..=max_h {
                        jobs.push((shape.clone(), h));
                    }
                }
            }
            let results: Vec<(usize, Vec<String>)> = jobs
                .into_par_iter()
                .map(
                    |(shape, h)| match verify_induction(&shape, h, max_size + 2 * max_h) {
                        Ok(r) => {
                            let mut fails = r.failures.clone();
                            if r.maximum.as_ref() != Some(&r.expected_maximum) {
                                fails.push(format!(
                                    "{shape} h={h}: maximum {:?}, expected {}",
                                    r.maximum.as_ref().map(|m| m.to_string()),
                                    r.expected_maximum
                                ));
                            }
                            (r.outcomes.len(), fails)
                        }
                        Err(e) => (1, vec![format!("{shape} h={h}: {e}")]),
                    },
                )
                .collect();
            collect(results)
        },
    )
}

/// The AIII closure diagram is complete and graded by `dim_K`.
pub fn check_closure(p: usize, q: usize, limit: usize) -> CheckReport {
    run("C8", format!("AIII closure diagram for ({p},{q})"), || {
        let mut fails = Vec::new();
        let poset = match closure_diagram(PairType::Aiii, p, q, limit) {
            Ok(x) => x,
            Err(e) => return (1, vec![e.to_string()]),
        };
        let n = p + q;
        let g = genfunc(PairType::Aiii, n);
        let expected: i64 = partitions_of(n)
            .iter()
            .map(|s| g.coefficient(s, p, q).expect("within bound"))
            .sum();
        if poset.nodes.len() as i64 != expected {
            fails.push(format!(
                "{} nodes, generating function gives {expected}",
                poset.nodes.len()
            ));
        }
        for c in &poset.covers {
            let drop = poset.dims[c.upper] as i64 - poset.dims[c.lower] as i64;
            if drop <= 0 || drop != c.codim {
                fails.push(format!(
                    "{} -> {} ({}): dim_K drops by {drop}",
                    poset.nodes[c.upper], poset.nodes[c.lower], c.case
                ));
            }
        }
        for t in &poset.nodes {
            let by_side: BTreeSet<SignedDiagram> = codim_one_covers(PairType::Aiii, t)
                .expect("valid")
                .into_iter()
                .map(|c| c.lower)
                .collect();
            let by_dim: BTreeSet<SignedDiagram> = covers_down(PairType::Aiii, t)
                .expect("valid")
                .into_iter()
                .filter(|c| c.codim == 1)
                .map(|c| c.lower)
                .collect();
            if by_side != by_dim {
                fails.push(format!(
                    "{t}: side-condition covers differ from codimension-one covers"
                ));
            }
        }
        (poset.nodes.len() + poset.covers.len(), fails)
    })
}

/// Shape-only classification flags against the built graphs.
pub fn check_classification(max_n: usize) -> CheckReport {
    run(
        "X1",
        format!("classification flags vs graphs (n <= {max_n}, all types)"),
        || {
            let results: Vec<(usize, Vec<String>)> = cases(max_n, false)
                .into_par_iter()
                .map(|(pair, shape, p, q)| {
                    let g = build_graph(pair, &shape, p, q).expect("graph");
                    let want = Classification::of_graph(&g);
                    let got = classify(pair, &shape, p, q).expect("valid signature");
                    if got == want {
                        (1, vec![])
                    } else {
                        (
                            1,
                            vec![format!(
                                "{pair} {shape} ({p},{q}): criteria {got:?}, graph {want:?}"
                            )],
                        )
                    }
                })
                .collect();
            collect(results)
        },
    )
}

/// Codimension-one covers from side conditions agree with dimension counts,
/// and every cover lands on a valid diagram of lower dimension.
pub fn check_cover_dimensions(max_n: usize) -> CheckReport {
    run(
        "X2",
        format!("cover side conditions vs dimensions (n <= {max_n}, all types)"),
        || {
            let results: Vec<(usize, Vec<String>)> = cases(max_n, true)
                .into_par_iter()
                .map(|(pair, shape, p, q)| {
                    let mut fails = Vec::new();
                    let mut n = 0;
                    for t in build_graph(pair, &shape, p, q).expect("graph").diagrams() {
                        n += 1;
                        for c in covers_down(pair, &t).expect("valid") {
                            if !c.lower.is_valid_for(pair) || c.lower.signature() != (p, q) {
                                fails.push(format!(
                                    "{pair} {t} -> {} ({}): invalid lower diagram",
                                    c.lower, c.case
                                ));
                            }
                            if c.codim <= 0 {
                                fails.push(format!(
                                    "{pair} {t} -> {} ({}): codim {}",
                                    c.lower, c.case, c.codim
                                ));
                            }
                            if c.side_condition != (c.codim == 1) {
                                fails.push(format!(
                                    "{pair} {t} -> {} ({} u={} v={}): side condition {}, codim {}",
                                    c.lower, c.case, c.u, c.v, c.side_condition, c.codim
                                ));
                            }
                        }
                    }
                    (n, fails)
                })
                .collect();
            collect(results)
        },
    )
}

/// AIII product decompositions are isomorphic to the components.
pub fn check_products(max_n: usize) -> CheckReport {
    run(
        "X3",
        format!("AIII product decomposition (n <= {max_n})"),
        || {
            let results: Vec<(usize, Vec<String>)> = partitions_up_to(max_n)
                .into_par_iter()
                .flat_map_iter(|shape| {
                    let n = shape.size();
                    (0..=n).map(move |p| {
                        let q = n - p;
                        let g = build_graph(PairType::Aiii, &shape, p, q).expect("graph");
                        let comps = product_decomposition(&shape, p, q).expect("product");
                        let bad: Vec<String> = comps
                            .iter()
                            .filter(|c| !check_product(&g, c))
                            .map(|c| format!("{shape} ({p},{q}) {:?}: {}", c.tuple, c.describe()))
                            .collect();
                        (comps.len(), bad)
                    })
                })
                .collect();
            collect(results)
        },
    )
}

/// The eight acceptance checks.
pub fn acceptance(bounds: &Bounds) -> Vec<CheckReport> {
    vec![
        check_genfunc(bounds.genfunc),
        check_components(bounds.components),
        check_golden(),
        check_edge_oracles(bounds.edges),
        check_even_orbits(bounds.even),
        check_induction(bounds.induction),
        check_matrix_induction(bounds.matrix_size, bounds.matrix_rows, bounds.matrix_height),
        check_closure(bounds.closure.0, bounds.closure.1, bounds.closure_limit),
    ]
}

/// Acceptance checks followed by the supplementary ones.
pub fn sweep(bounds: &Bounds) -> Vec<CheckReport> {
    let mut out = acceptance(bounds);
    out.push(check_classification(bounds.components));
    out.push(check_cover_dimensions(bounds.induction));
    out.push(check_products(bounds.induction));
    out
}

/// Counts of failures per check id, for summaries.
pub fn summary(reports: &[CheckReport]) -> BTreeMap<String, usize> {
    reports
        .iter()
        .map(|r| (r.id.clone(), r.failures.len()))
        .collect()
}
