//! Orbit graphs: vertices are the signed diagrams of one shape and signature,
//! edges join diagrams whose K-orbits are adjacent.
//!
//! Vertices are stored as π-vectors in lexicographic order. Two vertices are
//! joined when their π-vectors differ by one of the allowed edge vectors of
//! the type, scaled by 2 for CII and DIII.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closure::patterns;
use crate::error::Result;
use crate::pair::PairType;
use crate::partition::Partition;
use crate::signed::{from_pi, valid_pi_vectors, PiVector, SignedDiagram};

/// Direction of an edge vector: `e_r - e_{r+1}` or the last unit vector `e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// `e_r - e_{r+1}`, 0-based `r`.
    Step(usize),
    /// `e_k`, the last coordinate.
    Tail,
}

/// `coeff · direction`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeVector {
    pub direction: Direction,
    pub coeff: i64,
}

impl EdgeVector {
    /// Adds the vector to `v`; `None` if a coordinate would go negative.
    pub fn apply(&self, v: &[usize]) -> Option<Vec<usize>> {
        let mut w: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        match self.direction {
            Direction::Step(r) => {
                w[r] += self.coeff;
                w[r + 1] -= self.coeff;
            }
            Direction::Tail => *w.last_mut()? += self.coeff,
        }
        w.into_iter().map(|x| usize::try_from(x).ok()).collect()
    }
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Step(r) => write!(f, "{}(e{}-e{})", self.coeff, r + 1, r + 2),
            Direction::Tail => write!(f, "{}e_k", self.coeff),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// `π(b) - π(a)`.
    pub vector: EdgeVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitGraph {
    pub pair: PairType,
    pub shape: Partition,
    pub signature: (usize, usize),
    pub vertices: Vec<PiVector>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentLabels {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl ComponentLabels {
    /// Vertex indices of each component, in component order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &c) in self.labels.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Allowed edge directions of the type for the given distinct row lengths.
pub fn edge_directions(pair: PairType, lengths: &[usize]) -> Vec<Direction> {
    let k = lengths.len();
    let odd = |r: usize| lengths[r] % 2 == 1;
    let mut out = Vec::new();
    for r in 0..k.saturating_sub(1) {
        let keep = match pair {
            PairType::Aiii => true,
            PairType::Bdi | PairType::Cii => odd(r) && odd(r + 1),
            PairType::Ci | PairType::Diii => !odd(r) && !odd(r + 1),
        };
        if keep {
            out.push(Direction::Step(r));
        }
    }
    let tail = match pair {
        PairType::Aiii => k > 0,
        PairType::Bdi | PairType::Cii => false,
        PairType::Ci | PairType::Diii => k > 0 && !odd(k - 1),
    };
    if tail {
        out.push(Direction::Tail);
    }
    out
}

/// Every `e_r - e_{r+1}` and `e_k`, with no parity restriction.
pub fn generic_directions(k: usize) -> Vec<Direction> {
    let mut out: Vec<Direction> = (0..k.saturating_sub(1)).map(Direction::Step).collect();
    if k > 0 {
        out.push(Direction::Tail);
    }
    out
}

/// Builds the graph using the allowed edge directions of the type.
pub fn build_graph(pair: PairType, shape: &Partition, p: usize, q: usize) -> Result<OrbitGraph> {
    let dirs = edge_directions(pair, &shape.distinct_lengths());
    build_graph_with(pair, shape, p, q, &dirs)
}

/// Builds the graph joining vertices that differ by any of `dirs`, scaled.
pub fn build_graph_with(
    pair: PairType,
    shape: &Partition,
    p: usize,
    q: usize,
    dirs: &[Direction],
) -> Result<OrbitGraph> {
    let vertices = valid_pi_vectors(pair, shape, p, q)?;
    let index: HashMap<&[usize], usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.0.as_slice(), i))
        .collect();
    let scale = pair.edge_scale() as i64;
    let mut edges: Vec<Edge> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, v)| {
            let index = &index;
            dirs.iter().filter_map(move |&direction| {
                let vec = EdgeVector {
                    direction,
                    coeff: scale,
                };
                let w = vec.apply(&v.0)?;
                let j = *index.get(w.as_slice())?;
                Some(if i < j {
                    Edge {
                        a: i,
                        b: j,
                        vector: vec,
                    }
                } else {
                    Edge {
                        a: j,
                        b: i,
                        vector: EdgeVector {
                            direction,
                            coeff: -scale,
                        },
                    }
                })
            })
        })
        .collect();
    edges.sort();
    Ok(OrbitGraph {
        pair,
        shape: shape.clone(),
        signature: (p, q),
        vertices,
        edges,
    })
}

impl OrbitGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn diagram(&self, i: usize) -> SignedDiagram {
        let (p, q) = self.signature;
        from_pi(self.pair, &self.shape, p, q, &self.vertices[i]).expect("graph vertex")
    }

    pub fn diagrams(&self) -> Vec<SignedDiagram> {
        (0..self.vertex_count()).map(|i| self.diagram(i)).collect()
    }

    pub fn index_of(&self, v: &PiVector) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    /// Unordered vertex pairs.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.iter().map(|e| (e.a, e.b)).collect()
    }
}

/// Labels each vertex with its component; ids follow the smallest vertex.
pub fn components_bfs(g: &OrbitGraph) -> ComponentLabels {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if labels[s] != usize::MAX {
            continue;
        }
        labels[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    ComponentLabels { labels, count }
}

/// Whether `t` and `t2` are joined by an edge, decided from the adjacency
/// patterns on the rows where the two diagrams differ.
pub fn adjacency_by_pattern(pair: PairType, t: &SignedDiagram, t2: &SignedDiagram) -> bool {
    patterns::adjacent(pair, t, t2)
}

/// Coefficient of `t^d` in `∏ (1 + t + … + t^{L})`.
fn bounded_sum_count(lengths: &[usize], d: usize) -> u64 {
    let mut poly = vec![1u64];
    for &l in lengths {
        let mut next = vec![0u64; poly.len() + l];
        for (i, &c) in poly.iter().enumerate() {
            for slot in &mut next[i..=i + l] {
                *slot += c;
            }
        }
        poly = next;
    }
    poly.get(d).copied().unwrap_or(0)
}

/// Number of connected components, from the shape alone.
///
/// The shape is first reduced to distinct column heights; `(p, q)` drop by the
/// removed height. The count is then read off the blocks of the odd-drop
/// sequence of the reduced shape.
pub fn component_count_formula(
    pair: PairType,
    shape: &Partition,
    p: usize,
    q: usize,
) -> Result<u64> {
    pair.check_signature(shape.size(), p, q)?;
    if !shape.admissible_for(pair) {
        return Ok(0);
    }
    let (rho, removed) = shape.reduce_columns();
    if removed > p || removed > q {
        return Ok(0);
    }
    let (p1, q1) = (p - removed, q - removed);
    if rho.is_empty() {
        return Ok(u64::from(p1 == 0 && q1 == 0));
    }
    let num = p1 as i64 - q1 as i64 + rho.odd_part_count() as i64;
    if num < 0 || num % 2 != 0 {
        return Ok(0);
    }
    let d = (num / 2) as usize;
    let ks = rho.k_sequence();
    let mut odd_blocks = Vec::new();
    let mut even_blocks = Vec::new();
    for (&k, len) in ks.ks().iter().zip(ks.block_sizes()) {
        if rho.row(k) % 2 == 1 {
            odd_blocks.push(len);
        } else {
            even_blocks.push(len);
        }
    }
    let even_product =
        |f: &dyn Fn(usize) -> u64| even_blocks.iter().map(|&l| f(l)).product::<u64>();
    Ok(match pair {
        PairType::Aiii => bounded_sum_count(&odd_blocks, d) * even_product(&|l| 1 + l as u64),
        PairType::Bdi => bounded_sum_count(&odd_blocks, d),
        PairType::Ci => even_product(&|l| 1 + l as u64),
        PairType::Cii => {
            if d % 2 != 0 {
                0
            } else {
                let halves: Vec<usize> = odd_blocks.iter().map(|l| l / 2).collect();
                bounded_sum_count(&halves, d / 2)
            }
        }
        PairType::Diii => even_product(&|l| 1 + l as u64 / 2),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub nonempty: bool,
    pub single_vertex: bool,
    pub edgeless: bool,
    pub connected: bool,
    pub disconnected: bool,
}

impl Classification {
    /// Reads the flags off a built graph.
    pub fn of_graph(g: &OrbitGraph) -> Classification {
        let n = g.vertex_count();
        let c = components_bfs(g).count;
        Classification {
            nonempty: n > 0,
            single_vertex: n == 1,
            edgeless: n > 0 && g.edge_count() == 0,
            connected: c == 1,
            disconnected: c >= 2,
        }
    }
}

/// Shape-only criteria for the graph being a point, edgeless or connected.
pub fn classify(pair: PairType, shape: &Partition, p: usize, q: usize) -> Result<Classification> {
    let nonempty = component_count_formula(pair, shape, p, q)? > 0;
    if !nonempty {
        return Ok(Classification {
            nonempty,
            single_vertex: false,
            edgeless: false,
            connected: false,
            disconnected: false,
        });
    }
    let parts = shape.parts();
    let is_odd = |x: &usize| x % 2 == 1;
    let all_odd = parts.iter().all(is_odd);
    let odd_count = shape.odd_part_count();
    let diff = p.abs_diff(q);
    let odd_lengths: BTreeSet<usize> = parts.iter().copied().filter(is_odd).collect();

    let single_vertex = match pair {
        PairType::Aiii => all_odd && (shape.len() == diff || shape.multiplicities().len() <= 1),
        PairType::Bdi | PairType::Cii => odd_count == diff || odd_lengths.len() <= 1,
        PairType::Ci | PairType::Diii => all_odd,
    };

    // Column heights with their counts; row h ends the columns of height h.
    let columns = shape.transpose().multiplicities();
    let column_ok = |h: usize, c: usize| -> bool {
        match pair {
            // even count between odd rows that all share a starting sign
            PairType::Aiii => c % 2 == 1 || (shape.row(h + 1) % 2 == 1 && odd_count == diff),
            PairType::Bdi | PairType::Cii => c % 2 == 1 || shape.row(h) % 2 == 0,
            PairType::Ci | PairType::Diii => c % 2 == 1 || shape.row(h) % 2 == 1,
        }
    };
    let edgeless = single_vertex || columns.iter().all(|&(h, c)| column_ok(h, c));

    // Parity runs of the rows, top to bottom.
    let mut runs: Vec<bool> = Vec::new();
    for x in parts {
        let o = is_odd(x);
        if runs.last() != Some(&o) {
            runs.push(o);
        }
    }
    let odd_then_even = matches!(runs.as_slice(), [] | [_] | [true, false]);
    let connected = match pair {
        PairType::Aiii | PairType::Ci | PairType::Diii => odd_then_even,
        PairType::Bdi | PairType::Cii => {
            let even_odd_even = matches!(runs.as_slice(), [] | [_] | [_, _] | [false, true, false]);
            even_odd_even || odd_count == diff
        }
    };

    Ok(Classification {
        nonempty,
        single_vertex,
        edgeless,
        connected,
        disconnected: !connected,
    })
}

/// One block of the product decomposition of an AIII component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Factor {
    /// `A(m; ρ)`: `0 ≤ a_s ≤ m_s`, `Σ a_s = ρ`, edges `±(e_s - e_{s+1})`.
    A { mults: Vec<usize>, rho: usize },
    /// `C(m)`: the box `0 ≤ a_s ≤ m_s`, edges `±(e_s - e_{s+1})` and `±e_ℓ`.
    C { mults: Vec<usize> },
}

impl Factor {
    pub fn mults(&self) -> &[usize] {
        match self {
            Factor::A { mults, .. } | Factor::C { mults } => mults,
        }
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &m in self.mults() {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=m).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        match self {
            Factor::A { rho, .. } => out.retain(|v| v.iter().sum::<usize>() == *rho),
            Factor::C { .. } => {}
        }
        out
    }

    pub fn directions(&self) -> Vec<Direction> {
        let k = self.mults().len();
        match self {
            Factor::A { .. } => (0..k.saturating_sub(1)).map(Direction::Step).collect(),
            Factor::C { .. } => generic_directions(k),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ms: Vec<String> = self.mults().iter().map(|m| m.to_string()).collect();
        match self {
            Factor::A { rho, .. } => write!(f, "A({};{rho})", ms.join(",")),
            Factor::C { .. } => write!(f, "C({})", ms.join(",")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductComponent {
    /// The tuple `(p_1, …, p_m)` indexing the component.
    pub tuple: Vec<usize>,
    pub representative: SignedDiagram,
    pub factors: Vec<Factor>,
}

impl ProductComponent {
    pub fn describe(&self) -> String {
        if self.factors.is_empty() {
            return "point".into();
        }
        let fs: Vec<String> = self.factors.iter().map(|f| f.to_string()).collect();
        fs.join(" x ")
    }
}

fn aiii_tuples(shape: &Partition, p: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    PairType::Aiii.check_signature(shape.size(), p, q)?;
    let ks = shape.k_sequence();
    if ks.is_formal() {
        return Ok(if p == q { vec![vec![0]] } else { vec![] });
    }
    let sizes = ks.block_sizes();
    let odd: Vec<bool> = ks.ks().iter().map(|&k| shape.row(k) % 2 == 1).collect();
    let target = p as i64 - q as i64 + shape.odd_part_count() as i64;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        s: usize,
        acc: i64,
        target: i64,
        sizes: &[usize],
        odd: &[bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if s == sizes.len() {
            if acc == target {
                out.push(cur.clone());
            }
            return;
        }
        for ps in 0..=sizes[s] {
            cur.push(ps);
            let add = if odd[s] { 2 * ps as i64 } else { 0 };
            go(s + 1, acc + add, target, sizes, odd, cur, out);
            cur.pop();
        }
    }
    go(0, 0, target, &sizes, &odd, &mut cur, &mut out);
    Ok(out)
}

fn aiii_representative(shape: &Partition, tuple: &[usize]) -> SignedDiagram {
    use crate::signed::{Row, Sign};
    let ks = shape.k_sequence();
    let mut prev = 0;
    let mut plus_rows = BTreeSet::new();
    for (&k, &ps) in ks.ks().iter().zip(tuple) {
        plus_rows.extend(prev + 1..=prev + ps);
        prev = k;
    }
    let rows = (1..=shape.len())
        .map(|j| {
            let start = if plus_rows.contains(&j) {
                Sign::Plus
            } else {
                Sign::Minus
            };
            Row::new(shape.row(j), start)
        })
        .collect();
    SignedDiagram::new(rows).expect("positive parts")
}

/// One representative diagram per component of the AIII graph, indexed by
/// the tuples `(p_1, …, p_m)`.
pub fn representatives(
    shape: &Partition,
    p: usize,
    q: usize,
) -> Result<Vec<(Vec<usize>, SignedDiagram)>> {
    Ok(aiii_tuples(shape, p, q)?
        .into_iter()
        .map(|t| {
            let rep = aiii_representative(shape, &t);
            (t, rep)
        })
        .collect())
}

/// Each AIII component as a product of `A` and `C` graphs.
pub fn product_decomposition(
    shape: &Partition,
    p: usize,
    q: usize,
) -> Result<Vec<ProductComponent>> {
    let ks = shape.k_sequence();
    let mults: Vec<usize> = shape.multiplicities().iter().map(|&(_, m)| m).collect();
    let distinct_upto = |k: usize| -> usize {
        let rows = &shape.parts()[..k];
        let mut n = 0;
        for (i, x) in rows.iter().enumerate() {
            if i == 0 || rows[i - 1] != *x {
                n += 1;
            }
        }
        n
    };
    let rs: Vec<usize> = ks.ks().iter().map(|&k| distinct_upto(k)).collect();
    Ok(representatives(shape, p, q)?
        .into_iter()
        .map(|(tuple, representative)| {
            let mut factors = Vec::new();
            let mut prev = 0;
            for (&r, &ps) in rs.iter().zip(&tuple) {
                if r > prev {
                    factors.push(Factor::A {
                        mults: mults[prev..r].to_vec(),
                        rho: ps,
                    });
                }
                prev = r;
            }
            if prev < mults.len() {
                factors.push(Factor::C {
                    mults: mults[prev..].to_vec(),
                });
            }
            ProductComponent {
                tuple,
                representative,
                factors,
            }
        })
        .collect())
}

/// Checks that concatenating factor coordinates is a graph isomorphism from
/// the product onto the component containing the representative.
pub fn check_product(g: &OrbitGraph, comp: &ProductComponent) -> bool {
    let Some(rep) = g.index_of(&comp.representative.pi_vector()) else {
        return false;
    };
    let labels = components_bfs(g);
    let target = labels.labels[rep];
    let members: BTreeSet<usize> = (0..g.vertex_count())
        .filter(|&v| labels.labels[v] == target)
        .collect();

    let factor_vertices: Vec<Vec<Vec<usize>>> = comp.factors.iter().map(Factor::vertices).collect();
    let mut product: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for fv in &factor_vertices {
        product = product
            .into_iter()
            .flat_map(|prefix| {
                fv.iter().map(move |v| {
                    let mut w = prefix.clone();
                    w.push(v.clone());
                    w
                })
            })
            .collect();
    }
    let flatten = |parts: &[Vec<usize>]| PiVector(parts.concat());
    let image: BTreeSet<usize> = match product
        .iter()
        .map(|parts| g.index_of(&flatten(parts)))
        .collect::<Option<BTreeSet<usize>>>()
    {
        Some(s) => s,
        None => return false,
    };
    if image != members || image.len() != product.len() {
        return false;
    }
    let mut product_edges = BTreeSet::new();
    for parts in &product {
        for (fi, f) in comp.factors.iter().enumerate() {
            for dir in f.directions() {
                let step = EdgeVector {
                    direction: dir,
                    coeff: 1,
                };
                if let Some(w) = step.apply(&parts[fi]) {
                    if factor_vertices[fi].contains(&w) {
                        let mut other = parts.clone();
                        other[fi] = w;
                        let a = g.index_of(&flatten(parts)).unwrap();
                        let b = g.index_of(&flatten(&other)).unwrap();
                        product_edges.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    let component_edges: BTreeSet<(usize, usize)> = g
        .edge_set()
        .into_iter()
        .filter(|(a, _)| members.contains(a))
        .collect();
    product_edges == component_edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn golden_aiii_connected_box() {
        let shape = part("6,4,4,2,2");
        let g = build_graph(PairType::Aiii, &shape, 9, 9).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(components_bfs(&g).count, 1);
        let prod = product_decomposition(&shape, 9, 9).unwrap();
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[0].tuple, vec![0]);
        assert_eq!(prod[0].describe(), "C(1,2,2)");
        assert!(check_product(&g, &prod[0]));
    }

    #[test]
    fn golden_aiii_two_components() {
        let shape = part("4,3,3,1,1");
        let reps = representatives(&shape, 6, 6).unwrap();
        let tuples: Vec<Vec<usize>> = reps.iter().map(|(t, _)| t.clone()).collect();
        assert_eq!(tuples, vec![vec![0, 2], vec![1, 2]]);
        let prod = product_decomposition(&shape, 6, 6).unwrap();
        let desc: Vec<String> = prod.iter().map(|c| c.describe()).collect();
        assert_eq!(desc, vec!["A(1;0) x A(2,2;2)", "A(1;1) x A(2,2;2)"]);
        let g = build_graph(PairType::Aiii, &shape, 6, 6).unwrap();
        assert_eq!(components_bfs(&g).count, 2);
        assert!(prod.iter().all(|c| check_product(&g, c)));
    }

    #[test]
    fn golden_aiii_eight_components() {
        let shape = part("9,9,8,8,6,5,4,2,2");
        let prod = product_decomposition(&shape, 27, 26).unwrap();
        assert_eq!(prod.len(), 8);
        for c in &prod {
            let (p1, p2, p3) = (c.tuple[0], c.tuple[1], c.tuple[2]);
            assert_eq!(p1 + p3, 2);
            assert!(p2 <= 3);
            let expected = format!("A(2;{p1}) x A(2,1;{p2}) x A(1;{p3}) x C(1,2)");
            assert_eq!(c.describe(), expected);
        }
        let g = build_graph(PairType::Aiii, &shape, 27, 26).unwrap();
        assert_eq!(components_bfs(&g).count, 8);
        assert_eq!(
            component_count_formula(PairType::Aiii, &shape, 27, 26).unwrap(),
            8
        );
        assert!(prod.iter().all(|c| check_product(&g, c)));
    }

    #[test]
    fn allowed_directions() {
        let lens = [5, 3, 2, 1];
        assert_eq!(
            edge_directions(PairType::Bdi, &lens),
            vec![Direction::Step(0)]
        );
        assert_eq!(
            edge_directions(PairType::Ci, &[4, 2]),
            vec![Direction::Step(0), Direction::Tail]
        );
        assert_eq!(edge_directions(PairType::Aiii, &lens).len(), 4);
        assert!(edge_directions(PairType::Diii, &[]).is_empty());
    }

    #[test]
    fn edges_record_their_vector() {
        for pair in PairType::ALL {
            for shape in crate::partition::partitions_of(8) {
                for (p, q) in pair.signatures(8) {
                    let g = build_graph(pair, &shape, p, q).unwrap();
                    for e in &g.edges {
                        assert!(e.a < e.b);
                        let w = e.vector.apply(&g.vertices[e.a].0).unwrap();
                        assert_eq!(w, g.vertices[e.b].0);
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_labels_follow_smallest_vertex() {
        let g = build_graph(PairType::Aiii, &part("4,3,3,1,1"), 6, 6).unwrap();
        let c = components_bfs(&g);
        let mut seen = 0;
        for &l in &c.labels {
            assert!(l <= seen);
            if l == seen {
                seen += 1;
            }
        }
    }

    #[test]
    fn empty_shape_is_one_point() {
        let g = build_graph(PairType::Diii, &part(""), 0, 0).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(
            component_count_formula(PairType::Diii, &part(""), 0, 0).unwrap(),
            1
        );
    }

    #[test]
    fn bounded_sums() {
        assert_eq!(bounded_sum_count(&[2, 1], 2), 2);
        assert_eq!(bounded_sum_count(&[], 0), 1);
        assert_eq!(bounded_sum_count(&[3], 4), 0);
    }
}
