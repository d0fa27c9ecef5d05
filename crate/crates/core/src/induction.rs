//! Graph induction along the removal of a pair of equal columns.
//!
//! Restriction shortens the `h` longest rows of a diagram by two boxes,
//! keeping each row's first sign, and lowers the signature by `(h, h)`. The
//! induced set of a smaller diagram is its full preimage.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, components_bfs, OrbitGraph};
use crate::pair::PairType;
use crate::partition::Partition;
use crate::signed::{coordinate_values, from_pi, PiVector, Row, SignedDiagram};

fn check_height(pair: PairType, shape: &Partition, h: usize) -> Result<Partition> {
    if matches!(pair, PairType::Cii | PairType::Diii) && h % 2 == 1 {
        return Err(Error::OddHeight { pair, height: h });
    }
    shape.remove_column_pair(h)
}

/// Shortens the first `h` rows by two boxes; rows of length two vanish.
pub fn restrict(t: &SignedDiagram, h: usize) -> Result<SignedDiagram> {
    t.shape().remove_column_pair(h)?;
    let rows = t
        .rows()
        .iter()
        .enumerate()
        .map(|(j, r)| {
            if j < h {
                Row::new(r.len - 2, r.start)
            } else {
                *r
            }
        })
        .collect();
    Ok(SignedDiagram::from_rows_dropping_empty(rows))
}

/// All diagrams of shape `shape` restricting to `t_prime`, ordered by π-vector.
///
/// Each coordinate of `π(t_prime)` is split over the coordinates of `shape`
/// mapping onto it; rows of length two come from nothing and are free.
pub fn ind_set(
    pair: PairType,
    t_prime: &SignedDiagram,
    shape: &Partition,
) -> Result<Vec<SignedDiagram>> {
    let small = t_prime.shape();
    let n = shape.size();
    let n1 = small.size();
    if n <= n1 || (n - n1) % 2 != 0 {
        return Err(Error::InvalidPartition(format!(
            "{shape} is not {small} with a column pair added"
        )));
    }
    let h = (n - n1) / 2;
    if check_height(pair, shape, h)? != small {
        return Err(Error::InvalidPartition(format!(
            "removing two columns of height {h} from {shape} does not give {small}"
        )));
    }
    if !t_prime.is_valid_for(pair) {
        return Err(Error::InvalidDiagram(format!(
            "{t_prime} is not a {pair} diagram"
        )));
    }
    let (p1, q1) = t_prime.signature();
    let (p, q) = (p1 + h, q1 + h);

    let cut = shape.row(h);
    let mults = shape.multiplicities();
    let targets: BTreeMap<usize, usize> = small
        .distinct_lengths()
        .into_iter()
        .zip(t_prime.pi_vector().0)
        .collect();
    // λ' length each λ coordinate feeds; 0 means the rows vanish.
    let image: Vec<usize> = mults
        .iter()
        .map(|&(l, _)| if l >= cut { l - 2 } else { l })
        .collect();
    let choices: Vec<Vec<usize>> = mults
        .iter()
        .map(|&(l, m)| coordinate_values(pair, l, m))
        .collect();

    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(mults.len());
    let mut sums: BTreeMap<usize, usize> = BTreeMap::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        r: usize,
        image: &[usize],
        choices: &[Vec<usize>],
        targets: &BTreeMap<usize, usize>,
        cur: &mut Vec<usize>,
        sums: &mut BTreeMap<usize, usize>,
        out: &mut Vec<PiVector>,
    ) {
        if r == image.len() {
            if targets
                .iter()
                .all(|(l, b)| sums.get(l).copied().unwrap_or(0) == *b)
            {
                out.push(PiVector(cur.clone()));
            }
            return;
        }
        let l = image[r];
        for &a in &choices[r] {
            let s = sums.get(&l).copied().unwrap_or(0) + a;
            if l > 0 && s > targets.get(&l).copied().unwrap_or(0) {
                break;
            }
            cur.push(a);
            sums.insert(l, s);
            go(r + 1, image, choices, targets, cur, sums, out);
            sums.insert(l, s - a);
            cur.pop();
        }
    }
    let mut vectors = Vec::new();
    go(
        0,
        &image,
        &choices,
        &targets,
        &mut cur,
        &mut sums,
        &mut vectors,
    );
    for v in vectors {
        if let Ok(t) = from_pi(pair, shape, p, q, &v) {
            out.push(t);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub pair: PairType,
    pub shape: Partition,
    pub reduced: Partition,
    pub height: usize,
    pub signature: (usize, usize),
    /// Components of the graph of the larger shape.
    pub components: usize,
    /// Components of the graph of the reduced shape.
    pub reduced_components: usize,
    pub fibers_partition: bool,
    pub fibers_connected: bool,
    pub images_are_components: bool,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.fibers_partition
            && self.fibers_connected
            && self.images_are_components
            && self.components == self.reduced_components
            && self.failures.is_empty()
    }
}

fn induced_connected(g: &OrbitGraph, members: &BTreeSet<usize>) -> bool {
    let Some(&start) = members.iter().next() else {
        return true;
    };
    let adj = g.adjacency();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if members.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == members.len()
}

/// Checks that induction along the column pair of height `h` maps the
/// components of the reduced graph bijectively onto those of the full graph.
pub fn verify_component_bijection(
    pair: PairType,
    shape: &Partition,
    h: usize,
    p: usize,
    q: usize,
) -> Result<BijectionReport> {
    let reduced = check_height(pair, shape, h)?;
    pair.check_signature(shape.size(), p, q)?;
    let g = build_graph(pair, shape, p, q)?;
    let labels = components_bfs(&g);
    let mut report = BijectionReport {
        pair,
        shape: shape.clone(),
        reduced: reduced.clone(),
        height: h,
        signature: (p, q),
        components: labels.count,
        reduced_components: 0,
        fibers_partition: true,
        fibers_connected: true,
        images_are_components: true,
        failures: Vec::new(),
    };
    if p < h || q < h {
        if g.vertex_count() > 0 {
            report.fibers_partition = false;
            report
                .failures
                .push(format!("signature below ({h},{h}) yet diagrams exist"));
        }
        return Ok(report);
    }
    let g1 = build_graph(pair, &reduced, p - h, q - h)?;
    let labels1 = components_bfs(&g1);
    report.reduced_components = labels1.count;

    let mut owner: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut fibers: Vec<BTreeSet<usize>> = Vec::with_capacity(g1.vertex_count());
    for (i, t1) in g1.diagrams().iter().enumerate() {
        let mut fiber = BTreeSet::new();
        for t in ind_set(pair, t1, shape)? {
            let Some(j) = g.index_of(&t.pi_vector()) else {
                report.fibers_partition = false;
                report
                    .failures
                    .push(format!("{t} induced from {t1} is not a vertex"));
                continue;
            };
            if let Some(prev) = owner[j] {
                report.fibers_partition = false;
                report
                    .failures
                    .push(format!("{t} lies over both vertex {prev} and {t1}"));
            }
            owner[j] = Some(i);
            fiber.insert(j);
        }
        if !induced_connected(&g, &fiber) {
            report.fibers_connected = false;
            report
                .failures
                .push(format!("fiber over {t1} is disconnected"));
        }
        fibers.push(fiber);
    }
    if let Some(j) = owner.iter().position(Option::is_none) {
        report.fibers_partition = false;
        report
            .failures
            .push(format!("{} lies over no vertex", g.diagram(j)));
    }
    for (c, members) in labels1.members().iter().enumerate() {
        let image: BTreeSet<usize> = members
            .iter()
            .flat_map(|&i| fibers[i].iter().copied())
            .collect();
        let hit: BTreeSet<usize> = image.iter().map(|&j| labels.labels[j]).collect();
        let ok = hit.len() == 1 && {
            let target = *hit.iter().next().unwrap();
            image.len() == labels.labels.iter().filter(|&&l| l == target).count()
        };
        if !ok {
            report.images_are_components = false;
            report.failures.push(format!(
                "component {c} of the reduced graph does not map onto one component"
            ));
        }
    }
    if report.components != report.reduced_components {
        report.failures.push(format!(
            "{} components above, {} below",
            report.components, report.reduced_components
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::{enumerate_syd, Sign};

    fn syd(s: &str) -> SignedDiagram {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Places the rows of `t_prime` into the rows of `shape` shortened by two
    /// in every possible way and extends each by two alternating boxes.
    fn literal_fill(
        pair: PairType,
        t_prime: &SignedDiagram,
        shape: &Partition,
        h: usize,
    ) -> BTreeSet<SignedDiagram> {
        let mut out = BTreeSet::new();
        let slots: Vec<usize> = (1..=shape.len().max(h))
            .map(|j| shape.row(j) - if j <= h { 2 } else { 0 })
            .collect();
        let rows = t_prime.rows().to_vec();
        fn place(
            j: usize,
            slots: &[usize],
            h: usize,
            left: &mut Vec<Row>,
            acc: &mut Vec<Row>,
            out: &mut Vec<Vec<Row>>,
        ) {
            if j == slots.len() {
                if left.is_empty() {
                    out.push(acc.clone());
                }
                return;
            }
            let len = slots[j];
            if len == 0 {
                // An empty slot above the cut gets a fresh two-box row.
                if j < h {
                    for s in [Sign::Plus, Sign::Minus] {
                        acc.push(Row::new(2, s));
                        place(j + 1, slots, h, left, acc, out);
                        acc.pop();
                    }
                } else {
                    place(j + 1, slots, h, left, acc, out);
                }
                return;
            }
            let mut tried = BTreeSet::new();
            for i in 0..left.len() {
                let r = left[i];
                if r.len != len || !tried.insert(r) {
                    continue;
                }
                left.remove(i);
                let extended = if j < h { Row::new(len + 2, r.start) } else { r };
                acc.push(extended);
                place(j + 1, slots, h, left, acc, out);
                acc.pop();
                left.insert(i, r);
            }
        }
        let mut fills = Vec::new();
        place(0, &slots, h, &mut rows.clone(), &mut Vec::new(), &mut fills);
        for f in fills {
            let t = SignedDiagram::new(f).unwrap();
            if t.is_valid_for(pair) {
                out.insert(t);
            }
        }
        out
    }

    #[test]
    fn worked_examples() {
        let t1 = syd("+-/-+/+");
        let got = ind_set(PairType::Aiii, &t1, &part("4,4,3,2,2")).unwrap();
        assert_eq!(got.len(), 3);
        assert!(got.iter().all(|t| restrict(t, 5).unwrap() == t1));

        let t2 = syd("+-/+/+/+/-");
        let got = ind_set(PairType::Aiii, &t2, &part("4,3,3,1,1")).unwrap();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn restriction_shortens_top_rows() {
        let t = syd("+-+-/-+-/+-+/+/-");
        assert_eq!(restrict(&t, 3).unwrap(), syd("+-/-/+/+/-"));
        assert_eq!(restrict(&syd("+-/-+"), 2).unwrap(), SignedDiagram::empty());
        assert!(restrict(&t, 2).is_err());
    }

    #[test]
    fn bad_inputs() {
        assert!(ind_set(PairType::Aiii, &syd("+-"), &part("3,1")).is_err());
        assert!(ind_set(PairType::Aiii, &syd("+"), &part("3,1")).is_err());
        assert!(matches!(
            verify_component_bijection(PairType::Cii, &part("3,3,2,2"), 3, 6, 4),
            Err(Error::OddHeight { .. }) | Err(Error::NoColumnPair { .. })
        ));
        assert!(matches!(
            verify_component_bijection(PairType::Diii, &part("3,3"), 1, 3, 3),
            Err(Error::OddHeight { .. })
        ));
    }

    #[test]
    fn fast_path_matches_literal_fill() {
        for n in 2..=9 {
            for shape in crate::partition::partitions_of(n) {
                for h in shape.removable_heights() {
                    let small = shape.remove_column_pair(h).unwrap();
                    for pair in PairType::ALL {
                        if matches!(pair, PairType::Cii | PairType::Diii) && h % 2 == 1 {
                            continue;
                        }
                        for (p1, q1) in pair.signatures(small.size()) {
                            for t1 in enumerate_syd(pair, &small, p1, q1).unwrap() {
                                let fast: BTreeSet<_> =
                                    ind_set(pair, &t1, &shape).unwrap().into_iter().collect();
                                let slow = literal_fill(pair, &t1, &shape, h);
                                assert_eq!(fast, slow, "{pair} {t1} -> {shape}");
                                let brute: BTreeSet<_> =
                                    enumerate_syd(pair, &shape, p1 + h, q1 + h)
                                        .unwrap()
                                        .into_iter()
                                        .filter(|t| restrict(t, h).unwrap() == t1)
                                        .collect();
                                assert_eq!(fast, brute, "{pair} {t1} -> {shape}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_removals_commute() {
        for n in 4..=10 {
            for shape in crate::partition::partitions_of(n) {
                let hs = shape.removable_heights();
                for &h1 in &hs {
                    for &h2 in &hs {
                        if h1 >= h2 {
                            continue;
                        }
                        let a = shape.remove_column_pair(h1).unwrap();
                        let b = shape.remove_column_pair(h2).unwrap();
                        let (Ok(ab), Ok(ba)) = (a.remove_column_pair(h2), b.remove_column_pair(h1))
                        else {
                            continue;
                        };
                        assert_eq!(ab, ba);
                        for pair in [PairType::Aiii, PairType::Bdi, PairType::Ci] {
                            for (p, q) in pair.signatures(ab.size()) {
                                for t in enumerate_syd(pair, &ab, p, q).unwrap() {
                                    let via = |mid: &Partition| -> BTreeSet<SignedDiagram> {
                                        ind_set(pair, &t, mid)
                                            .unwrap()
                                            .iter()
                                            .flat_map(|m| ind_set(pair, m, &shape).unwrap())
                                            .collect()
                                    };
                                    assert_eq!(via(&a), via(&b), "{pair} {t} {shape}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_on_examples() {
        let r = verify_component_bijection(PairType::Aiii, &part("4,3,3,1,1"), 3, 6, 6).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.components, 2);
        let r = verify_component_bijection(PairType::Aiii, &part("6,4,4,2,2"), 5, 9, 9).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
