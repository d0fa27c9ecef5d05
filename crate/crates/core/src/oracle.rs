//! Slow reference implementations used to cross-check the fast paths.

use std::collections::{BTreeMap, BTreeSet};

use crate::pair::PairType;
use crate::partition::Partition;
use crate::signed::{Row, Sign, SignedDiagram};

/// Every signed diagram of the shape valid for the type, found by trying all
/// `2^ℓ` start assignments and keeping those that split into primitives.
pub fn brute_diagrams(pair: PairType, shape: &Partition) -> BTreeSet<SignedDiagram> {
    let parts = shape.parts();
    let ell = parts.len();
    assert!(ell < 24, "brute force over 2^{ell} assignments");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << ell) {
        let rows = parts
            .iter()
            .enumerate()
            .map(|(j, &len)| {
                let start = if mask >> j & 1 == 1 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                Row::new(len, start)
            })
            .collect();
        let t = SignedDiagram::new(rows).expect("positive parts");
        if t.is_valid_for(pair) {
            out.insert(t);
        }
    }
    out
}

/// Brute-force diagrams of one signature, sorted by π-vector.
pub fn brute_enumerate(
    pair: PairType,
    shape: &Partition,
    p: usize,
    q: usize,
) -> Vec<SignedDiagram> {
    let mut v: Vec<SignedDiagram> = brute_diagrams(pair, shape)
        .into_iter()
        .filter(|t| t.signature() == (p, q))
        .collect();
    v.sort_by_key(|t| t.pi_vector());
    v
}

/// Brute-force diagram counts keyed by signature.
pub fn brute_counts(pair: PairType, shape: &Partition) -> BTreeMap<(usize, usize), usize> {
    let mut m = BTreeMap::new();
    for t in brute_diagrams(pair, shape) {
        *m.entry(t.signature()).or_insert(0) += 1;
    }
    m
}

/// Connected components of an undirected graph on `0..n`, as sorted vertex lists.
pub fn union_find_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::enumerate_syd;

    #[test]
    fn brute_matches_lattice_on_small_shapes() {
        for n in 0..=7 {
            for shape in crate::partition::partitions_of(n) {
                for pair in PairType::ALL {
                    for (p, q) in pair.signatures(n) {
                        let fast = enumerate_syd(pair, &shape, p, q).unwrap();
                        let slow = brute_enumerate(pair, &shape, p, q);
                        assert_eq!(fast, slow, "{pair} {shape} ({p},{q})");
                    }
                }
            }
        }
    }

    #[test]
    fn union_find_groups() {
        let c = union_find_components(5, &[(0, 3), (3, 4)]);
        assert_eq!(c, vec![vec![0, 3, 4], vec![1], vec![2]]);
    }
}
