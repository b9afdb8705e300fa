//! Seeded random instances.
//!
//! All randomness comes from [`ChaCha8Rng`] seeded with `seed_from_u64`, so
//! a seed reproduces the same instance on every platform.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Weighting};

pub const DEFAULT_MAX_WEIGHT: u64 = 1_000_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph: a uniformly random labelled tree shape (random
/// attachment over a shuffled vertex order) plus every other pair
/// independently with probability `density`. Edges are listed in
/// lexicographic order.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);

    let mut present = vec![false; n * n];
    for i in 1..n {
        let (u, v) = (order[i], order[rng.random_range(0..i)]);
        present[u * n + v] = true;
        present[v * n + u] = true;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            // draw for every pair so the stream does not depend on the tree
            let extra = rng.random_bool(density);
            if present[u * n + v] || extra {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Integer weights drawn uniformly from `0..=max_weight`.
pub fn random_weights<R: Rng>(rng: &mut R, g: &Graph, max_weight: u64) -> Weighting<u64> {
    let values = (0..g.edge_count())
        .map(|_| rng.random_range(0..=max_weight))
        .collect();
    Weighting::new(g, values).expect("integer weights are admissible")
}

/// Pairwise distinct integer weights from `0..=max_weight`.
pub fn distinct_weights<R: Rng>(rng: &mut R, g: &Graph, max_weight: u64) -> Result<Weighting<u64>> {
    let m = g.edge_count();
    let range = usize::try_from(max_weight)
        .ok()
        .and_then(|w| w.checked_add(1))
        .ok_or_else(|| Error::InvalidParameter("max weight too large".into()))?;
    if range < m {
        return Err(Error::InvalidParameter(format!(
            "cannot draw {m} distinct weights from 0..={max_weight}"
        )));
    }
    let values = index::sample(rng, range, m)
        .into_iter()
        .map(|v| v as u64)
        .collect();
    Weighting::new(g, values)
}

/// The instance printed by the `gen` command.
pub fn generate(
    n: usize,
    density: f64,
    max_weight: u64,
    seed: u64,
) -> Result<(Graph, Weighting<u64>)> {
    let mut rng = rng(seed);
    let g = random_connected_graph(&mut rng, n, density)?;
    let x = random_weights(&mut rng, &g, max_weight);
    Ok((g, x))
}
