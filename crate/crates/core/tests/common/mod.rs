#![allow(dead_code)]

use mstdp::generate::{random_connected_graph, random_weights};
use mstdp::machine::Eval;
use mstdp::oracles::kruskal_tree;
use mstdp::{Graph, Machine, SpanningTree, Weighting};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every connected graph on vertices `0..n`, one per edge set.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            Graph::new(n, edges).ok()
        })
        .collect()
}

pub fn random_instance<R: Rng>(
    rng: &mut R,
    n_lo: usize,
    n_hi: usize,
    max_weight: u64,
) -> (Graph, Weighting<u64>) {
    let n = rng.random_range(n_lo..=n_hi);
    let density = rng.random_range(0.0..=1.0);
    let g = random_connected_graph(rng, n, density).unwrap();
    let x = random_weights(rng, &g, max_weight);
    (g, x)
}

/// A spanning tree drawn by running Kruskal on fresh random weights, then
/// listed in random order.
pub fn random_spanning_tree<R: Rng>(rng: &mut R, g: &Graph) -> SpanningTree {
    let shuffle_weights = random_weights(rng, g, 1 << 40);
    let mut edges = kruskal_tree(g, &shuffle_weights);
    edges.shuffle(rng);
    SpanningTree::new(g, edges).unwrap()
}

pub fn shuffled<R: Rng>(rng: &mut R, g: &Graph, t: &SpanningTree) -> SpanningTree {
    let mut edges = t.edges().to_vec();
    edges.shuffle(rng);
    SpanningTree::new(g, edges).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Min,
    Max,
    Add,
}

/// Evaluates like [`Eval`] and logs the kind of every operation.
#[derive(Default)]
pub struct Tracer {
    inner: Eval<u64>,
    pub trace: Vec<OpKind>,
}

impl Machine for Tracer {
    type Value = u64;

    fn zero(&mut self) -> u64 {
        self.inner.zero()
    }

    fn min(&mut self, a: u64, b: u64) -> u64 {
        self.trace.push(OpKind::Min);
        self.inner.min(a, b)
    }

    fn max(&mut self, a: u64, b: u64) -> u64 {
        self.trace.push(OpKind::Max);
        self.inner.max(a, b)
    }

    fn add(&mut self, a: u64, b: u64) -> u64 {
        self.trace.push(OpKind::Add);
        self.inner.add(a, b)
    }
}
