//! Min-max (bottleneck) distances.
//!
//! `D(i, j)` is the least `d` such that some `i`–`j` path uses only edges of
//! weight at most `d`. On the complete graph these are computed by the
//! Floyd–Warshall recurrence over `(min, max)`:
//!
//! ```text
//! D_k(i, j) = min(D_{k-1}(i, j), max(D_{k-1}(i, k), D_{k-1}(k, j)))
//! ```
//!
//! and, once known, updated after one pair `{a, b}` drops to weight 0 by
//!
//! ```text
//! D'(i, j) = min(D(i, j), max(D(i, a), D(b, j)), max(D(i, b), D(a, j)))
//! ```

use crate::error::{Error, Result};
use crate::graph::{check_pair, check_square, ExtendedWeighting, Graph, Weighting};
use crate::machine::{Eval, Machine, Table};
use crate::weight::Weight;

/// Symmetric table of min-max distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceMatrix<W> {
    table: Table<W>,
}

impl<W: Weight> DistanceMatrix<W> {
    /// Wraps a row-major table, checking symmetry, the diagonal and signs.
    pub fn from_rows(n: usize, cells: Vec<W>) -> Result<Self> {
        check_square(n, &cells)?;
        Ok(DistanceMatrix {
            table: Table::from_cells(n, cells),
        })
    }

    pub(crate) fn from_table(table: Table<W>) -> Self {
        DistanceMatrix { table }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn get(&self, i: usize, j: usize) -> W {
        self.table.get(i, j)
    }

    pub fn table(&self) -> &Table<W> {
        &self.table
    }

    pub fn into_rows(self) -> Vec<W> {
        self.table.into_cells()
    }

    /// `D(i, j) <= max(D(i, k), D(k, j))` for all triples.
    pub fn satisfies_max_triangle(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.get(i, j) <= self.get(i, k).max_of(self.get(k, j))))
        })
    }
}

/// Runs the recurrence in place over unordered pairs `i < j` for every
/// intermediate vertex `k`, including `k = i` and `k = j` (those rounds read
/// the zero diagonal and leave the entry unchanged). Exactly
/// `n * n(n-1)/2` max and as many min operations.
pub fn floyd_warshall_program<M: Machine>(machine: &mut M, table: &mut Table<M::Value>) {
    let n = table.n();
    for k in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                let through = machine.max(table.get(i, k), table.get(k, j));
                let best = machine.min(table.get(i, j), through);
                table.set(i, j, best);
            }
        }
    }
}

/// The zero-edge update into a fresh table. Per unordered pair: two max
/// and two min operations, the three-way min left-associated.
pub fn zero_update_program<M: Machine>(
    machine: &mut M,
    table: &Table<M::Value>,
    a: usize,
    b: usize,
) -> Table<M::Value> {
    let n = table.n();
    let mut next = table.clone();
    for i in 0..n {
        for j in i + 1..n {
            let via_ab = machine.max(table.get(i, a), table.get(b, j));
            let via_ba = machine.max(table.get(i, b), table.get(a, j));
            let best = machine.min(table.get(i, j), via_ab);
            let best = machine.min(best, via_ba);
            next.set(i, j, best);
        }
    }
    next
}

/// All-pairs min-max distances of a complete-graph weighting.
pub fn all_pairs_minmax<W: Weight>(xbar: &ExtendedWeighting<W>) -> DistanceMatrix<W> {
    let mut table = xbar.table().clone();
    floyd_warshall_program(&mut Eval::new(), &mut table);
    DistanceMatrix::from_table(table)
}

/// Distances after the pair `{a, b}` is given weight 0, from the distances
/// before. Reads only the input matrix, so rows `a` and `b` are never
/// observed half-updated.
pub fn zero_edge_update<W: Weight>(
    d: &DistanceMatrix<W>,
    a: usize,
    b: usize,
) -> Result<DistanceMatrix<W>> {
    check_pair(d.n(), a, b)?;
    Ok(DistanceMatrix::from_table(zero_update_program(
        &mut Eval::new(),
        d.table(),
        a,
        b,
    )))
}

/// Min-max distance between `u` and `v` in `g` by enumerating every simple
/// path. Exponential; meant for graphs of about ten vertices.
pub fn minmax_distance_bruteforce<W: Weight>(
    g: &Graph,
    x: &Weighting<W>,
    u: usize,
    v: usize,
) -> Result<W> {
    let n = g.vertex_count();
    for vertex in [u, v] {
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
    }
    x.assert_fits(g);
    if u == v {
        return Ok(W::ZERO);
    }

    fn walk<W: Weight>(
        g: &Graph,
        x: &Weighting<W>,
        at: usize,
        target: usize,
        heaviest: Option<W>,
        on_path: &mut [bool],
        best: &mut Option<W>,
    ) {
        if at == target {
            let h = heaviest.unwrap_or(W::ZERO);
            *best = Some(best.map_or(h, |b| b.min_of(h)));
            return;
        }
        for &next in g.neighbors(at) {
            if on_path[next] {
                continue;
            }
            let w = x.get(g.edge_index(at, next).unwrap());
            let h = heaviest.map_or(w, |h| h.max_of(w));
            on_path[next] = true;
            walk(g, x, next, target, Some(h), on_path, best);
            on_path[next] = false;
        }
    }

    let mut on_path = vec![false; n];
    on_path[u] = true;
    let mut best = None;
    walk(g, x, u, v, None, &mut on_path, &mut best);
    best.ok_or(Error::Disconnected)
}
