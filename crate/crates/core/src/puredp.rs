//! MST weight as a sum of min-max distances.
//!
//! Fix a spanning tree `e_1, ..., e_{n-1}` of `g`. Let `x_0 = x` and let
//! `x_i` be `x` with `e_1, ..., e_i` set to zero. Then
//!
//! ```text
//! mst(g, x) = dist(e_1 | x_0) + dist(e_2 | x_1) + ... + dist(e_{n-1} | x_{n-2})
//! ```
//!
//! because zeroing a single edge `e` lowers the MST weight by exactly
//! `dist(e | x)`, and once every tree edge is zero the tree itself is an MST
//! of weight 0. The tree is chosen from `g` alone, so the whole computation
//! is a fixed sequence of `min`, `max` and `+` operations.
//!
//! [`mst_puredp`] computes all distances once and then applies the zero-edge
//! update between terms: `N + (n-2)K + (n-1) + (m-1)` operations with
//! `N = n^2 (n-1)` and `K = 2n(n-1)`, i.e. `O(n^3)`. [`mst_puredp_naive`]
//! recomputes all distances for every term, `O(n^4)`.

use crate::error::Result;
use crate::graph::{extend_program, fix_spanning_tree, Graph, SpanningTree, Weighting};
use crate::machine::{Eval, Machine, OpCounts};
use crate::minmax::{floyd_warshall_program, zero_update_program};
use crate::weight::Weight;

/// The terms `(tree edge, distance)` in tree order and their sum.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<W> {
    pub terms: Vec<(usize, W)>,
    pub total: W,
}

/// The `O(n^3)` program: extension, one Floyd–Warshall pass, then for each
/// tree edge read its distance, add it to the running sum and (except after
/// the last edge) apply the zero-edge update. Returns the terms and the sum.
pub fn incremental_program<M: Machine>(
    machine: &mut M,
    g: &Graph,
    tree: &SpanningTree,
    inputs: &[M::Value],
) -> (Vec<M::Value>, M::Value) {
    let mut table = extend_program(machine, g, inputs);
    floyd_warshall_program(machine, &mut table);

    let mut total = machine.zero();
    let mut terms = Vec::with_capacity(tree.len());
    for (round, &e) in tree.edges().iter().enumerate() {
        let (a, b) = g.edge(e);
        let term = table.get(a, b);
        terms.push(term);
        total = machine.add(total, term);
        if round + 1 < tree.len() {
            table = zero_update_program(machine, &table, a, b);
        }
    }
    (terms, total)
}

/// The `O(n^4)` program: for each tree edge, a fresh Floyd–Warshall pass
/// over the extension with all earlier tree edges set to the constant 0.
pub fn naive_program<M: Machine>(
    machine: &mut M,
    g: &Graph,
    tree: &SpanningTree,
    inputs: &[M::Value],
) -> (Vec<M::Value>, M::Value) {
    let extended = extend_program(machine, g, inputs);
    let zero = machine.zero();

    let mut total = zero;
    let mut terms = Vec::with_capacity(tree.len());
    for (round, &e) in tree.edges().iter().enumerate() {
        let mut table = extended.clone();
        for &earlier in &tree.edges()[..round] {
            let (a, b) = g.edge(earlier);
            table.set(a, b, zero);
        }
        floyd_warshall_program(machine, &mut table);
        let (a, b) = g.edge(e);
        let term = table.get(a, b);
        terms.push(term);
        total = machine.add(total, term);
    }
    (terms, total)
}

fn pairs(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Operation counts of [`incremental_program`] on a graph with `n` vertices
/// and `m` edges, from the loop bounds.
pub fn incremental_op_counts(n: usize, m: usize) -> OpCounts {
    let (n, m) = (n as u64, m as u64);
    let floyd = n * pairs(n);
    let update = 2 * pairs(n);
    let rounds = n.saturating_sub(2);
    OpCounts {
        min_count: floyd + rounds * update,
        max_count: m.saturating_sub(1) + floyd + rounds * update,
        add_count: n.saturating_sub(1),
    }
}

/// Operation counts of [`naive_program`].
pub fn naive_op_counts(n: usize, m: usize) -> OpCounts {
    let (n, m) = (n as u64, m as u64);
    let floyd = n * pairs(n);
    let rounds = n.saturating_sub(1);
    OpCounts {
        min_count: rounds * floyd,
        max_count: m.saturating_sub(1) + rounds * floyd,
        add_count: rounds,
    }
}

fn collect<W: Weight>(tree: &SpanningTree, (terms, total): (Vec<W>, W)) -> Decomposition<W> {
    Decomposition {
        terms: tree.edges().iter().copied().zip(terms).collect(),
        total,
    }
}

/// Runs the incremental program on concrete weights.
pub fn solve_incremental<W: Weight>(
    g: &Graph,
    x: &Weighting<W>,
    tree: &SpanningTree,
) -> (Decomposition<W>, OpCounts) {
    x.assert_fits(g);
    let mut machine = Eval::new();
    let result = incremental_program(&mut machine, g, tree, x.values());
    (collect(tree, result), machine.counts)
}

/// Runs the naive program on concrete weights.
pub fn solve_naive<W: Weight>(
    g: &Graph,
    x: &Weighting<W>,
    tree: &SpanningTree,
) -> (Decomposition<W>, OpCounts) {
    x.assert_fits(g);
    let mut machine = Eval::new();
    let result = naive_program(&mut machine, g, tree, x.values());
    (collect(tree, result), machine.counts)
}

/// The decomposition of `mst(g, x)` along the tree `t`, in `t`'s order.
pub fn mst_decomposition<W: Weight>(
    g: &Graph,
    x: &Weighting<W>,
    t: &SpanningTree,
) -> Result<Decomposition<W>> {
    t.validate(g)?;
    Ok(solve_incremental(g, x, t).0)
}

/// MST weight by the `O(n^3)` pure DP over the DFS tree of `g`.
pub fn mst_puredp<W: Weight>(g: &Graph, x: &Weighting<W>) -> (W, OpCounts) {
    let (decomposition, counts) = solve_incremental(g, x, &fix_spanning_tree(g));
    (decomposition.total, counts)
}

/// MST weight by the `O(n^4)` pure DP over the DFS tree of `g`.
pub fn mst_puredp_naive<W: Weight>(g: &Graph, x: &Weighting<W>) -> (W, OpCounts) {
    let (decomposition, counts) = solve_naive(g, x, &fix_spanning_tree(g));
    (decomposition.total, counts)
}
