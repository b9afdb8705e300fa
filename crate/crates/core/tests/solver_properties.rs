mod common;

use common::{OpKind, Tracer};
use mstdp::generate::{distinct_weights, random_connected_graph, rng};
use mstdp::puredp::{incremental_op_counts, incremental_program, naive_op_counts};
use mstdp::{
    all_pairs_minmax, bruteforce_mst, compile_mst_circuit, complete_extension, count_ops, evaluate,
    fix_spanning_tree, hu_minmax_via_mst, kruskal_mst, maggs_plotkin_mst, mst_decomposition,
    mst_puredp, mst_puredp_naive, zero_edge_update, Graph, Node, Weighting,
};
use proptest::collection::vec;
use proptest::prelude::*;

fn instance(
    min_n: usize,
    max_n: usize,
    max_w: u64,
) -> impl Strategy<Value = (Graph, Weighting<u64>)> {
    (min_n..=max_n, 0.0..=1.0f64, any::<u64>())
        .prop_flat_map(move |(n, density, seed)| {
            let g = random_connected_graph(&mut rng(seed), n, density).unwrap();
            let m = g.edge_count();
            (Just(g), vec(0..=max_w, m))
        })
        .prop_map(|(g, w)| {
            let x = Weighting::new(&g, w).unwrap();
            (g, x)
        })
}

fn trace_of(g: &Graph, x: &Weighting<u64>) -> (Vec<OpKind>, u64) {
    let mut tracer = Tracer::default();
    let (_, total) = incremental_program(&mut tracer, g, &fix_spanning_tree(g), x.values());
    (tracer.trace, total)
}

#[test]
fn kruskal_matches_enumeration_on_all_small_graphs() {
    let mut rng = rng(3);
    for n in 1..=5 {
        for g in common::connected_graphs(n) {
            for _ in 0..3 {
                let x = mstdp::generate::random_weights(&mut rng, &g, 12);
                let expected = bruteforce_mst(&g, &x).unwrap();
                assert_eq!(kruskal_mst(&g, &x), expected);
                assert_eq!(mst_puredp(&g, &x).0, expected);
            }
        }
    }
}

#[test]
fn op_trace_is_weight_independent() {
    let g = Graph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (0, 3),
            (1, 4),
        ],
    )
    .unwrap();
    let x = Weighting::new(&g, vec![1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
    let y = Weighting::new(&g, vec![80, 0, 0, 13, 2, 99, 1, 1]).unwrap();
    let (tx, vx) = trace_of(&g, &x);
    let (ty, vy) = trace_of(&g, &y);
    assert_eq!(tx, ty);
    assert_eq!(vx, kruskal_mst(&g, &x));
    assert_eq!(vy, kruskal_mst(&g, &y));

    // the circuit lists the same operations in the same order
    let circuit_kinds: Vec<OpKind> = compile_mst_circuit(&g)
        .nodes()
        .iter()
        .filter_map(|node| match node {
            Node::Min(..) => Some(OpKind::Min),
            Node::Max(..) => Some(OpKind::Max),
            Node::Add(..) => Some(OpKind::Add),
            Node::Input(_) | Node::Zero => None,
        })
        .collect();
    assert_eq!(circuit_kinds, tx);
}

#[test]
fn telescoping_ends_at_zero() {
    let mut rng = rng(5);
    for _ in 0..20 {
        let (g, x) = common::random_instance(&mut rng, 2, 16, 1000);
        let mut d = all_pairs_minmax(&complete_extension(&g, &x));
        let tree = fix_spanning_tree(&g);
        for &e in tree.edges() {
            let (a, b) = g.edge(e);
            d = zero_edge_update(&d, a, b).unwrap();
        }
        for &e in tree.edges() {
            let (a, b) = g.edge(e);
            assert_eq!(d.get(a, b), 0);
        }
        // and every pair is now joined by a zero path
        assert!(d.into_rows().iter().all(|&v| v == 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solvers_agree_with_oracles((g, x) in instance(1, 8, 40)) {
        let expected = kruskal_mst(&g, &x);
        prop_assert_eq!(bruteforce_mst(&g, &x).unwrap(), expected);
        prop_assert_eq!(mst_puredp(&g, &x).0, expected);
        prop_assert_eq!(mst_puredp_naive(&g, &x).0, expected);
    }

    #[test]
    fn puredp_matches_kruskal_large((g, x) in instance(9, 32, 1_000_000)) {
        prop_assert_eq!(mst_puredp(&g, &x).0, kruskal_mst(&g, &x));
    }

    #[test]
    fn zeroing_an_edge_lowers_mst_by_its_distance((g, x) in instance(2, 14, 25)) {
        let d = all_pairs_minmax(&complete_extension(&g, &x));
        let full = kruskal_mst(&g, &x);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(full, kruskal_mst(&g, &x.with_zeroed(e)) + d.get(u, v));
        }
    }

    #[test]
    fn decomposition_total_ignores_tree_and_order((g, x) in instance(2, 14, 1000), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let expected = kruskal_mst(&g, &x);
        for _ in 0..3 {
            let t = common::random_spanning_tree(&mut rng, &g);
            for _ in 0..2 {
                let order = common::shuffled(&mut rng, &g, &t);
                let d = mst_decomposition(&g, &x, &order).unwrap();
                prop_assert_eq!(d.total, expected);
                prop_assert_eq!(d.terms.iter().map(|&(_, w)| w).sum::<u64>(), d.total);
            }
        }
    }

    #[test]
    fn op_counts_depend_on_shape_only((g, x) in instance(1, 12, 1000), other in vec(0u64..=3, 66)) {
        let y = Weighting::new(&g, other[..g.edge_count()].to_vec()).unwrap();
        let (n, m) = (g.vertex_count(), g.edge_count());
        prop_assert_eq!(mst_puredp(&g, &x).1, incremental_op_counts(n, m));
        prop_assert_eq!(mst_puredp(&g, &y).1, incremental_op_counts(n, m));
        prop_assert_eq!(mst_puredp_naive(&g, &x).1, naive_op_counts(n, m));
        prop_assert_eq!(trace_of(&g, &x).0, trace_of(&g, &y).0);
        prop_assert_eq!(count_ops(&compile_mst_circuit(&g)), incremental_op_counts(n, m));
    }

    #[test]
    fn hu_matches_floyd_warshall((g, x) in instance(1, 20, 30)) {
        prop_assert_eq!(hu_minmax_via_mst(&g, &x), all_pairs_minmax(&complete_extension(&g, &x)));
    }

    #[test]
    fn maggs_plotkin_matches_kruskal((n, density, seed) in (1usize..=32, 0.0..=1.0f64, any::<u64>())) {
        let mut rng = rng(seed);
        let g = random_connected_graph(&mut rng, n, density).unwrap();
        let x = distinct_weights(&mut rng, &g, 10_000).unwrap();
        prop_assert_eq!(maggs_plotkin_mst(&g, &x).unwrap(), kruskal_mst(&g, &x));
    }

    #[test]
    fn circuit_evaluates_to_solver((g, x) in instance(1, 12, 1_000_000)) {
        let c = compile_mst_circuit(&g);
        prop_assert!(c.is_well_formed());
        prop_assert_eq!(evaluate(&c, &x).unwrap(), mst_puredp(&g, &x).0);
    }

    #[test]
    fn circuit_is_monotone((g, x) in instance(1, 10, 100), bumps in vec(0u64..=50, 45)) {
        let c = compile_mst_circuit(&g);
        let raised: Vec<u64> = x.values().iter().zip(&bumps).map(|(w, b)| w + b).collect();
        let y = Weighting::new(&g, raised).unwrap();
        prop_assert!(evaluate(&c, &x).unwrap() <= evaluate(&c, &y).unwrap());
    }
}
