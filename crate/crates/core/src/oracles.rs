//! Reference algorithms used to cross-check the pure DP.
//!
//! None of these are branch-free: Kruskal sorts and tests connectivity,
//! Maggs–Plotkin keeps an edge only if its distance equals its weight.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Graph, Weighting};
use crate::machine::Table;
use crate::minmax::DistanceMatrix;
use crate::weight::Weight;

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Merges the sets of `u` and `v`; false if they were already one set.
    pub fn union(&mut self, u: usize, v: usize) -> bool {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

fn by_weight<W: Weight>(a: W, b: W) -> Ordering {
    a.partial_cmp(&b).expect("weights are totally ordered")
}

/// Edge indices of a minimum spanning tree, ties broken by edge index.
pub fn kruskal_tree<W: Weight>(g: &Graph, x: &Weighting<W>) -> Vec<usize> {
    x.assert_fits(g);
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| by_weight(x.get(a), x.get(b)).then(a.cmp(&b)));
    let mut sets = DisjointSets::new(g.vertex_count());
    order
        .into_iter()
        .filter(|&e| {
            let (u, v) = g.edge(e);
            sets.union(u, v)
        })
        .collect()
}

/// MST weight by Kruskal's algorithm.
pub fn kruskal_mst<W: Weight>(g: &Graph, x: &Weighting<W>) -> W {
    kruskal_tree(g, x)
        .into_iter()
        .fold(W::ZERO, |acc, e| acc + x.get(e))
}

/// Largest graph [`bruteforce_mst`] accepts.
pub const BRUTEFORCE_LIMIT: usize = 8;

/// Union-find without path compression so unions can be undone.
struct UndoSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl UndoSets {
    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, u: usize, v: usize) -> bool {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.history.push(b);
        true
    }

    fn undo(&mut self) {
        let b = self.history.pop().expect("nothing to undo");
        let a = self.parent[b];
        self.parent[b] = b;
        self.size[a] -= self.size[b];
    }
}

/// MST weight as the minimum over every spanning tree of `g`.
///
/// Trees are enumerated as acyclic `(n-1)`-subsets of the edges, skipping
/// any prefix that already closes a cycle.
pub fn bruteforce_mst<W: Weight>(g: &Graph, x: &Weighting<W>) -> Result<W> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    x.assert_fits(g);

    struct Search<'a, W> {
        g: &'a Graph,
        x: &'a Weighting<W>,
        sets: UndoSets,
        needed: usize,
        best: Option<W>,
    }

    impl<W: Weight> Search<'_, W> {
        fn run(&mut self, next: usize, chosen: usize, sum: W) {
            if chosen == self.needed {
                self.best = Some(self.best.map_or(sum, |b| b.min_of(sum)));
                return;
            }
            if chosen + (self.g.edge_count() - next) < self.needed {
                return;
            }
            let (u, v) = self.g.edge(next);
            if self.sets.union(u, v) {
                self.run(next + 1, chosen + 1, sum + self.x.get(next));
                self.sets.undo();
            }
            self.run(next + 1, chosen, sum);
        }
    }

    let mut search = Search {
        g,
        x,
        sets: UndoSets {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        },
        needed: n - 1,
        best: None,
    };
    search.run(0, 0, W::ZERO);
    search.best.ok_or(Error::Disconnected)
}

/// MST weight for pairwise distinct weights: the MST is exactly the set of
/// edges whose min-max distance in `g` equals their own weight.
///
/// Distances are taken inside `g`; absent pairs act as a value above every
/// weight rather than the maximum edge weight, which could otherwise tie.
pub fn maggs_plotkin_mst<W: Weight>(g: &Graph, x: &Weighting<W>) -> Result<W> {
    x.assert_fits(g);
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| by_weight(x.get(a), x.get(b)).then(a.cmp(&b)));
    if let Some(w) = order.windows(2).find(|w| x.get(w[0]) == x.get(w[1])) {
        return Err(Error::DuplicateWeights(w[0], w[1]));
    }

    // None is the sentinel above all weights.
    let n = g.vertex_count();
    let mut dist: Table<Option<W>> = Table::filled(n, None);
    for v in 0..n {
        dist.set(v, v, Some(W::ZERO));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        dist.set(u, v, Some(x.get(e)));
    }
    for k in 0..n {
        for i in 0..n {
            for j in i + 1..n {
                let through = match (dist.get(i, k), dist.get(k, j)) {
                    (Some(a), Some(b)) => Some(a.max_of(b)),
                    _ => None,
                };
                let best = match (dist.get(i, j), through) {
                    (Some(a), Some(b)) => Some(a.min_of(b)),
                    (a, None) => a,
                    (None, b) => b,
                };
                dist.set(i, j, best);
            }
        }
    }

    Ok(g.edges()
        .iter()
        .enumerate()
        .filter(|&(e, &(u, v))| dist.get(u, v) == Some(x.get(e)))
        .fold(W::ZERO, |acc, (e, _)| acc + x.get(e)))
}

/// All min-max distances read off a minimum spanning tree: the distance of
/// `u` and `v` is the heaviest edge on their tree path.
pub fn hu_minmax_via_mst<W: Weight>(g: &Graph, x: &Weighting<W>) -> DistanceMatrix<W> {
    let n = g.vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    for e in kruskal_tree(g, x) {
        let (u, v) = g.edge(e);
        adjacency[u].push((v, x.get(e)));
        adjacency[v].push((u, x.get(e)));
    }

    let mut table = Table::filled(n, W::ZERO);
    for source in 0..n {
        let mut stack = vec![(source, usize::MAX, W::ZERO)];
        while let Some((v, parent, heaviest)) = stack.pop() {
            if v != source {
                table.set(source, v, heaviest);
            }
            for &(w, weight) in &adjacency[v] {
                if w != parent {
                    stack.push((w, v, heaviest.max_of(weight)));
                }
            }
        }
    }
    DistanceMatrix::from_table(table)
}
