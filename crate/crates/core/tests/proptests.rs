use proptest::prelude::*;

use orbitgraph::matrix::slot_choices;
use orbitgraph::partition::partitions_of;
use orbitgraph::{
    jordan_type, ExactMatrix, InducedPair, PairType, Partition, Row, Sign, SignedDiagram,
};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..8, 0..7).prop_map(Partition::from_unsorted)
}

fn diagram(max_rows: usize, max_len: usize) -> impl Strategy<Value = SignedDiagram> {
    prop::collection::vec((1..=max_len, any::<bool>()), 0..=max_rows).prop_map(|rows| {
        let rows = rows
            .into_iter()
            .map(|(len, plus)| Row::new(len, if plus { Sign::Plus } else { Sign::Minus }))
            .collect();
        SignedDiagram::new(rows).unwrap()
    })
}

fn jordan_matrix(parts: &[usize]) -> ExactMatrix {
    let n: usize = parts.iter().sum();
    let mut entries = vec![(0, 0); n * n];
    let mut off = 0;
    for &m in parts {
        for j in 1..m {
            entries[(off + j - 1) * n + off + j] = (1, 0);
        }
        off += m;
    }
    ExactMatrix::from_gaussian_ints(n, n, &entries)
}

fn elementary(n: usize, i: usize, j: usize, c: (i64, i64)) -> ExactMatrix {
    let mut entries = vec![(0, 0); n * n];
    for k in 0..n {
        entries[k * n + k] = (1, 0);
    }
    entries[i * n + j] = c;
    ExactMatrix::from_gaussian_ints(n, n, &entries)
}

proptest! {
    #[test]
    fn transpose_is_an_involution(p in partition()) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn transpose_reverses_dominance(n in 1usize..9, a in 0usize..30, b in 0usize..30) {
        let ps = partitions_of(n);
        let (x, y) = (&ps[a % ps.len()], &ps[b % ps.len()]);
        prop_assert_eq!(x.dominates(y), y.transpose().dominates(&x.transpose()));
    }

    #[test]
    fn column_pairs_round_trip(p in partition(), h in 1usize..6) {
        let bigger = p.add_column_pair(h);
        prop_assert_eq!(bigger.remove_column_pair(h).unwrap(), p.clone());
        prop_assert_eq!(bigger.size(), p.size() + 2 * h);
    }

    #[test]
    fn diagram_text_round_trips(t in diagram(6, 6)) {
        let back: SignedDiagram = t.text().parse().unwrap();
        prop_assert_eq!(back, t.clone());
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<SignedDiagram>(&json).unwrap(), t);
    }

    #[test]
    fn pi_vector_round_trips(t in diagram(7, 5)) {
        let (p, q) = t.signature();
        let back = orbitgraph::signed::from_pi(PairType::Aiii, &t.shape(), p, q, &t.pi_vector()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn jordan_type_survives_conjugation(
        parts in prop::collection::vec(1usize..5, 1..4),
        ops in prop::collection::vec((0usize..12, 0usize..12, -2i64..3, -1i64..2), 0..6),
    ) {
        let shape = Partition::from_unsorted(parts.clone());
        let n = shape.size();
        let mut m = jordan_matrix(&parts);
        for (i, j, re, im) in ops {
            let (i, j) = (i % n, j % n);
            if i == j {
                continue;
            }
            let e = elementary(n, i, j, (re, im));
            let e_inv = elementary(n, i, j, (-re, -im));
            m = e.mul(&m).mul(&e_inv);
        }
        prop_assert_eq!(jordan_type(&m).unwrap(), shape);
    }

    #[test]
    fn induced_powers_have_block_shape(t in diagram(3, 3), h in 1usize..3, pick in 0usize..16) {
        let choices = slot_choices(t.rows().len(), h);
        let slots = &choices[pick % choices.len()];
        let pair = InducedPair::build(&t, slots, h).unwrap();
        prop_assert!(InducedPair::is_skew_adjoint(&pair.total(), &pair.gram));
        for k in 2..=5 {
            prop_assert!(pair.power_identity(k), "k = {}", k);
        }
    }

    #[test]
    fn longest_row_gains_two(t in diagram(3, 4), h in 1usize..3) {
        prop_assume!(!t.rows().is_empty());
        let mut slots = vec![orbitgraph::RowSlot::Row(0)];
        slots.resize(h, orbitgraph::RowSlot::Virtual);
        let pair = InducedPair::build(&t, &slots, h).unwrap();
        let jt = jordan_type(&pair.total()).unwrap();
        prop_assert_eq!(jt.parts()[0], t.rows()[0].len + 2);
    }
}
