use ferrerslab::chordal::is_chordal;
use ferrerslab::ferrers::{fdim_at_most_2, is_ferrers, is_staircase};
use ferrerslab::interval_bigraph::is_interval_bigraph;
use ferrerslab::recognize::{check_condition1, recognize_cott, recognize_signed_interval_bigraph, representation_pairs};
use ferrerslab::signed::{adjacent, build_representation_bigraph, realizes_bigraph, realizes_graph, Representation, SignedInterval};
use ferrerslab::zero_partition::zero_partition;
use ferrerslab::{Bigraph, BinaryMatrix, Decision, Graph, Permutation};
use proptest::prelude::*;

fn shuffled(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn matrix(max: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max, 1..=max, any::<u64>()).prop_map(|(r, c, bits)| BinaryMatrix::from_mask(r, c, bits))
}

fn permuted_matrix(max: usize) -> impl Strategy<Value = (BinaryMatrix, BinaryMatrix)> {
    matrix(max).prop_flat_map(|m| {
        let (r, c) = m.shape();
        (Just(m), shuffled(r), shuffled(c)).prop_map(|(m, p, q)| {
            let pm = m.permuted(&p, &q).unwrap();
            (m, pm)
        })
    })
}

fn interval(lo: i64, hi: i64) -> impl Strategy<Value = SignedInterval> {
    (lo..=hi, lo..=hi).prop_map(|(l, r)| SignedInterval::new(l, r))
}

fn positive_interval(hi: i64) -> impl Strategy<Value = SignedInterval> {
    (1..=hi, 0..=hi).prop_map(|(l, len)| SignedInterval::new(l, l + len))
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn bigraph_of(x: Vec<SignedInterval>, y: Vec<SignedInterval>) -> Bigraph {
    let (nx, ny) = (x.len(), y.len());
    Representation::bigraph(x, y, labels("x", nx), labels("y", ny))
        .to_bigraph()
        .unwrap()
}

/// The realized graph without its sign loops.
fn graph_of(ivs: Vec<SignedInterval>) -> Graph {
    let n = ivs.len();
    let mut g = Representation::graph(labels("v", n), ivs).to_graph();
    g.set_loops(None);
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ferrers_is_permutation_invariant((m, pm) in permuted_matrix(6)) {
        prop_assert_eq!(is_ferrers(&m), is_ferrers(&pm));
    }

    #[test]
    fn fdim2_is_permutation_invariant((m, pm) in permuted_matrix(6)) {
        prop_assert_eq!(fdim_at_most_2(&m).is_yes(), fdim_at_most_2(&pm).is_yes());
    }

    #[test]
    fn fdim2_certificates_check(m in matrix(6)) {
        match fdim_at_most_2(&m) {
            Decision::Yes(c) => {
                prop_assert!(c.verify(&m));
                prop_assert!(is_staircase(&c.arrangement.apply(&m).unwrap()));
            }
            Decision::No(w) => {
                prop_assert!(w.verify(&m));
                prop_assert!(w.cells.len() % 2 == 1);
            }
        }
    }

    #[test]
    fn adjacency_is_symmetric(a in interval(-4, 8), b in interval(-4, 8)) {
        prop_assert_eq!(adjacent(a, b), adjacent(b, a));
    }

    #[test]
    fn positive_adjacency_is_intersection(a in positive_interval(8), b in positive_interval(8)) {
        prop_assert_eq!(adjacent(a, b), a.l.max(b.l) <= a.r.min(b.r));
    }

    #[test]
    fn staircase_round_trip(m in matrix(7)) {
        if let Some(c) = fdim_at_most_2(&m).certificate() {
            let s = c.arrangement.apply(&m).unwrap();
            let rep = build_representation_bigraph(&s).unwrap();
            prop_assert_eq!(rep.to_matrix().unwrap(), s.clone());
            prop_assert_eq!(rep.compacted().to_matrix().unwrap(), s);
        }
    }

    #[test]
    fn signed_bigraph_representations_realize(m in matrix(6)) {
        let b = Bigraph::from_matrix(m.clone());
        let d = recognize_signed_interval_bigraph(&b);
        prop_assert_eq!(d.is_yes(), fdim_at_most_2(&m).is_yes());
        if let Some(rep) = d.certificate() {
            prop_assert!(realizes_bigraph(rep, &b));
            prop_assert!(realizes_bigraph(&rep.compacted(), &b));
        }
    }

    #[test]
    fn zero_partitions_are_valid(m in matrix(6)) {
        if let Some(z) = zero_partition(&m) {
            prop_assert!(z.is_valid_for(&m));
        }
    }

    #[test]
    fn signed_interval_bigraphs_are_accepted(
        x in prop::collection::vec(interval(1, 8), 1..6),
        y in prop::collection::vec(interval(1, 8), 1..6),
    ) {
        prop_assert!(recognize_signed_interval_bigraph(&bigraph_of(x, y)).is_yes());
    }

    #[test]
    fn interval_bigraphs_are_accepted(
        x in prop::collection::vec(positive_interval(8), 1..7),
        y in prop::collection::vec(positive_interval(8), 1..7),
    ) {
        let b = bigraph_of(x, y);
        let d = is_interval_bigraph(&b).unwrap();
        let cert = d.certificate();
        prop_assert!(cert.is_some());
        let cert = cert.unwrap();
        prop_assert!(cert.verify(&b));
        prop_assert!(cert.representation.is_all_positive());
        prop_assert!(recognize_signed_interval_bigraph(&b).is_yes());
    }

    #[test]
    fn interval_bigraph_yes_implies_signed_yes(m in matrix(5)) {
        let b = Bigraph::from_matrix(m);
        if let Decision::Yes(c) = is_interval_bigraph(&b).unwrap() {
            prop_assert!(c.verify(&b));
            prop_assert!(recognize_signed_interval_bigraph(&b).is_yes());
        }
    }

    #[test]
    fn signed_interval_graphs_are_accepted(ivs in prop::collection::vec(interval(1, 7), 1..9)) {
        let g = graph_of(ivs);
        let d = recognize_cott(&g).unwrap();
        prop_assert!(d.is_yes());
        let rep = d.certificate().unwrap();
        prop_assert!(realizes_graph(rep, &g));
        prop_assert!(check_condition1(&g, &representation_pairs(rep)).unwrap());
        prop_assert!(is_chordal(&g).is_chordal());
    }

    #[test]
    fn interval_graphs_are_accepted(ivs in prop::collection::vec(positive_interval(8), 1..10)) {
        prop_assert!(recognize_cott(&graph_of(ivs)).unwrap().is_yes());
    }

    #[test]
    fn cott_answers_are_sound(n in 1usize..8, bits in any::<u32>()) {
        let mut g = Graph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> (k % 32) & 1 == 1 {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        if let Some(rep) = recognize_cott(&g).unwrap().certificate() {
            prop_assert!(realizes_graph(rep, &g));
            prop_assert!(check_condition1(&g, &representation_pairs(rep)).unwrap());
        }
    }
}
