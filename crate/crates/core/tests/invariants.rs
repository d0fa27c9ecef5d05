use std::collections::BTreeSet;

use orbitgraph::graph::{Direction, EdgeVector, Factor};
use orbitgraph::oracle::{brute_counts, union_find_components};
use orbitgraph::partition::{partitions_of, partitions_up_to};
use orbitgraph::signed::{from_pi, valid_pi_vectors};
use orbitgraph::{
    build_graph, codim_one_covers, covers_down, enumerate_syd, genfunc, restrict, PairType,
    Partition, Row, SignedDiagram,
};

#[test]
fn column_pair_round_trip() {
    for shape in partitions_up_to(12) {
        for h in shape.removable_heights() {
            let smaller = shape.remove_column_pair(h).unwrap();
            assert_eq!(smaller.add_column_pair(h), shape, "{shape} h={h}");
            assert_eq!(smaller.k_sequence(), shape.k_sequence(), "{shape} h={h}");
        }
    }
}

#[test]
fn dimensions_are_even_and_halved() {
    for shape in partitions_up_to(12) {
        for pair in PairType::ALL {
            if let Ok(d) = shape.orbit_dimension(pair) {
                assert_eq!(d.dim_g % 2, 0, "{pair} {shape}");
                assert_eq!(2 * d.dim_k, d.dim_g);
            }
        }
    }
}

#[test]
fn admissibility_matches_tilings() {
    for shape in partitions_up_to(10) {
        for pair in PairType::ALL {
            let tiled = !brute_counts(pair, &shape).is_empty();
            assert_eq!(shape.admissible_for(pair), tiled, "{pair} {shape}");
        }
    }
}

#[test]
fn pi_vectors_are_a_bijection() {
    for shape in partitions_up_to(10) {
        for pair in PairType::ALL {
            for (p, q) in pair.signatures(shape.size()) {
                let vs = valid_pi_vectors(pair, &shape, p, q).unwrap();
                let ds = enumerate_syd(pair, &shape, p, q).unwrap();
                assert_eq!(vs.len(), ds.len());
                for (v, t) in vs.iter().zip(&ds) {
                    assert_eq!(&t.pi_vector(), v);
                    assert_eq!(&from_pi(pair, &shape, p, q, v).unwrap(), t);
                    assert_eq!(t.signature(), (p, q), "{pair} {t}");
                    assert_eq!(t.shape(), shape);
                    assert!(t.decompose(pair).is_some(), "{pair} {t} has no tiling");
                }
            }
        }
    }
}

#[test]
fn swapping_signs_swaps_signature() {
    for shape in partitions_up_to(10) {
        let n = shape.size();
        for p in 0..=n {
            let ds = enumerate_syd(PairType::Aiii, &shape, p, n - p).unwrap();
            let flipped: BTreeSet<SignedDiagram> = ds
                .iter()
                .map(|t| {
                    let rows = t
                        .rows()
                        .iter()
                        .map(|r| Row::new(r.len, r.start.flip()))
                        .collect();
                    SignedDiagram::new(rows).unwrap()
                })
                .collect();
            let other: BTreeSet<SignedDiagram> = enumerate_syd(PairType::Aiii, &shape, n - p, p)
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(flipped, other, "{shape} ({p},{})", n - p);
        }
    }
}

#[test]
fn series_sums_to_shape_totals() {
    for pair in PairType::ALL {
        let g = genfunc(pair, 10);
        for shape in partitions_up_to(10) {
            let n = shape.size();
            let series: i64 = (0..=n)
                .map(|p| g.coefficient(&shape, p, n - p).unwrap())
                .sum();
            let brute: usize = brute_counts(pair, &shape).values().sum();
            assert_eq!(series, brute as i64, "{pair} {shape}");
        }
    }
}

fn factor_connected(f: &Factor) -> bool {
    let vs = f.vertices();
    let mut edges = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        for d in f.directions() {
            if let Some(w) = (EdgeVector {
                direction: d,
                coeff: 1,
            })
            .apply(v)
            {
                if let Some(j) = vs.iter().position(|x| *x == w) {
                    edges.push((i, j));
                }
            }
        }
    }
    union_find_components(vs.len(), &edges).len() == 1
}

#[test]
fn building_blocks_are_connected() {
    for total in 1..=8 {
        for ms in partitions_of(total) {
            let mut orders = BTreeSet::new();
            let mut parts = ms.parts().to_vec();
            orders.insert(parts.clone());
            parts.reverse();
            orders.insert(parts);
            for mults in orders {
                assert!(
                    factor_connected(&Factor::C {
                        mults: mults.clone()
                    }),
                    "C({mults:?})"
                );
                for rho in 0..=total {
                    let f = Factor::A {
                        mults: mults.clone(),
                        rho,
                    };
                    assert!(factor_connected(&f), "{f}");
                }
            }
        }
    }
    assert_eq!(Factor::C { mults: vec![] }.vertices().len(), 1);
}

#[test]
fn no_mixed_parity_steps() {
    for shape in partitions_up_to(12) {
        let lens = shape.distinct_lengths();
        let n = shape.size();
        for p in 0..=n {
            let g = build_graph(PairType::Aiii, &shape, p, n - p).unwrap();
            let verts: BTreeSet<&Vec<usize>> = g.vertices.iter().map(|v| &v.0).collect();
            for v in &verts {
                for r in 0..lens.len().saturating_sub(1) {
                    if lens[r] % 2 == lens[r + 1] % 2 {
                        continue;
                    }
                    let e = EdgeVector {
                        direction: Direction::Step(r),
                        coeff: 1,
                    };
                    if let Some(w) = e.apply(v) {
                        assert!(!verts.contains(&w), "{shape} ({p},{}) {v:?}", n - p);
                    }
                }
            }
        }
    }
}

#[test]
fn side_conditions_agree_with_dimensions() {
    for shape in partitions_up_to(10) {
        for pair in PairType::ALL {
            if !shape.admissible_for(pair) {
                continue;
            }
            for (p, q) in pair.signatures(shape.size()) {
                for t in enumerate_syd(pair, &shape, p, q).unwrap() {
                    let all = covers_down(pair, &t).unwrap();
                    let by_dim: BTreeSet<_> = all
                        .iter()
                        .filter(|c| c.codim == 1)
                        .map(|c| c.lower.clone())
                        .collect();
                    let by_side: BTreeSet<_> = codim_one_covers(pair, &t)
                        .unwrap()
                        .into_iter()
                        .map(|c| c.lower)
                        .collect();
                    assert_eq!(by_side, by_dim, "{pair} {t}");
                    for c in &all {
                        assert!(c.codim >= 1, "{pair} {t} -> {}", c.lower);
                        assert_ne!(c.lower.shape(), shape);
                        assert_eq!(c.lower.signature(), (p, q));
                    }
                }
            }
        }
    }
}

#[test]
fn restriction_keeps_signature_offsets() {
    for shape in partitions_up_to(10) {
        for h in shape.removable_heights() {
            let n = shape.size();
            for p in 0..=n {
                for t in enumerate_syd(PairType::Aiii, &shape, p, n - p).unwrap() {
                    let r = restrict(&t, h).unwrap();
                    assert_eq!(r.signature(), (p - h, n - p - h));
                    assert_eq!(r.shape(), shape.remove_column_pair(h).unwrap());
                }
            }
        }
    }
}

#[test]
fn empty_partition_conventions() {
    let e = Partition::empty();
    assert_eq!(e.transpose(), e);
    assert!(e.k_sequence().is_formal());
    for pair in PairType::ALL {
        let d = e.orbit_dimension(pair).unwrap();
        assert_eq!((d.dim_g, d.dim_k), (0, 0));
    }
}
