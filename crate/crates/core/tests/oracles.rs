use ferrerslab::enumerate::{all_matrices, graphs_up_to_iso, random_matrix, rng};
use ferrerslab::ferrers::{check_staircase, fdim_at_most_2, ferrers_cover, find_staircase};
use ferrerslab::interval_bigraph::is_interval_bigraph;
use ferrerslab::oracle::{oracle_cott, oracle_interval_bigraph, oracle_signed_interval_bigraph, oracle_staircase};
use ferrerslab::recognize::{recognize_cott, recognize_signed_interval_bigraph};
use ferrerslab::signed::{realizes_bigraph, realizes_graph};
use ferrerslab::format::parse_matrix;
use ferrerslab::{Bigraph, BinaryMatrix, Error};

const WITNESS: &str = include_str!("fixtures/fdim2_not_interval.matrix");

fn small_matrices() -> impl Iterator<Item = BinaryMatrix> {
    all_matrices(3, 4).chain(all_matrices(4, 3))
}

#[test]
fn fdim2_characterizations_agree() {
    for m in small_matrices() {
        let fdim = fdim_at_most_2(&m).is_yes();
        let oracle = oracle_staircase(&m).unwrap();
        if let Some(a) = &oracle {
            assert!(check_staircase(&m, a).unwrap(), "{m}");
        }
        assert_eq!(fdim, oracle.is_some(), "{m}");
        assert_eq!(fdim, find_staircase(&m).is_some(), "{m}");
        assert_eq!(fdim, ferrers_cover(&m, false).is_some(), "{m}");
    }
}

#[test]
fn fdim2_routes_agree_on_all_4x4() {
    for m in all_matrices(4, 4) {
        let fdim = fdim_at_most_2(&m).is_yes();
        assert_eq!(fdim, find_staircase(&m).is_some(), "{m}");
        assert_eq!(fdim, ferrers_cover(&m, false).is_some(), "{m}");
    }
}

#[test]
fn interval_bigraph_matches_oracle() {
    for m in small_matrices() {
        let b = Bigraph::from_matrix(m.clone());
        assert_eq!(
            is_interval_bigraph(&b).unwrap().is_yes(),
            oracle_interval_bigraph(&b).unwrap(),
            "{m}"
        );
    }
}

#[test]
fn signed_bigraph_matches_oracle() {
    let mut r = rng(11);
    for _ in 0..40 {
        let b = Bigraph::from_matrix(random_matrix(&mut r, 3, 4));
        let oracle = oracle_signed_interval_bigraph(&b).unwrap();
        if let Some(rep) = &oracle {
            assert!(realizes_bigraph(rep, &b));
        }
        assert_eq!(recognize_signed_interval_bigraph(&b).is_yes(), oracle.is_some(), "{}", b.matrix());
    }
}

#[test]
fn cott_matches_oracle_on_six_vertices() {
    for g in graphs_up_to_iso(6) {
        let oracle = oracle_cott(&g).unwrap();
        if let Some(rep) = &oracle {
            assert!(realizes_graph(rep, &g));
        }
        assert_eq!(recognize_cott(&g).unwrap().is_yes(), oracle.is_some(), "{:?}", g.edges());
    }
}

#[test]
fn oracles_refuse_oversized_inputs() {
    let big = BinaryMatrix::ones(8, 8);
    assert!(matches!(oracle_staircase(&big), Err(Error::CapExceeded { .. })));
    let b = Bigraph::from_matrix(big);
    assert!(matches!(oracle_interval_bigraph(&b), Err(Error::CapExceeded { .. })));
    assert!(matches!(oracle_signed_interval_bigraph(&b), Err(Error::CapExceeded { .. })));
    assert!(matches!(oracle_cott(&b.to_graph()), Err(Error::CapExceeded { .. })));
}

#[test]
fn archived_witness_separates_the_classes() {
    let m = parse_matrix(WITNESS).unwrap();
    let b = Bigraph::from_matrix(m.clone());
    assert!(fdim_at_most_2(&m).is_yes());
    assert!(oracle_staircase(&m).unwrap().is_some());
    assert!(recognize_signed_interval_bigraph(&b).is_yes());
    assert!(!is_interval_bigraph(&b).unwrap().is_yes());
    assert!(!oracle_interval_bigraph(&b).unwrap());
}

#[test]
fn archived_witness_is_minimal() {
    let b = Bigraph::from_matrix(parse_matrix(WITNESS).unwrap());
    let (nx, ny) = (b.nx(), b.ny());
    for v in 0..nx + ny {
        let xs: Vec<usize> = (0..nx).filter(|&x| x != v).collect();
        let ys: Vec<usize> = (0..ny).filter(|&y| nx + y != v).collect();
        let c = b.induced_subgraph(&xs, &ys).unwrap();
        assert!(is_interval_bigraph(&c).unwrap().is_yes(), "deleting vertex {v}");
    }
}
