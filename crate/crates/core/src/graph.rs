//! Graphs, weightings and the two weight-independent preprocessing steps:
//! extending a weighting to the complete graph and fixing a spanning tree.
//!
//! Vertices are `0..n` in the library API. The edge-list file format is
//! 1-based and converted on read and write.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::machine::{Eval, Machine, Table};
use crate::weight::Weight;

/// An undirected, simple, connected graph with stable edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    adjacency: Vec<Vec<usize>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges, out-of-range
    /// endpoints and disconnected inputs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = GraphBuilder::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        g.finish()
    }

    /// The complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Result<Graph> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&key(u, v)).copied()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }
}

/// Incremental construction used by [`Graph::new`] and the edge-list parser.
pub(crate) struct GraphBuilder {
    n: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl GraphBuilder {
    pub(crate) fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Ok(GraphBuilder {
            n,
            edges: Vec::new(),
            index: HashMap::new(),
        })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let id = self.edges.len();
        if self.index.insert(key(u, v), id).is_some() {
            return Err(Error::DuplicateEdge(u, v));
        }
        self.edges.push((u, v));
        Ok(id)
    }

    pub(crate) fn finish(self) -> Result<Graph> {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != self.n {
            return Err(Error::Disconnected);
        }

        Ok(Graph {
            n: self.n,
            edges: self.edges,
            index: self.index,
            adjacency,
        })
    }
}

/// One nonnegative weight per edge index.
#[derive(Debug, Clone, PartialEq)]
pub struct Weighting<W> {
    values: Vec<W>,
}

impl<W: Weight> Weighting<W> {
    pub fn new(g: &Graph, values: Vec<W>) -> Result<Self> {
        if values.len() != g.edge_count() {
            return Err(Error::ArityMismatch {
                expected: g.edge_count(),
                actual: values.len(),
            });
        }
        if let Some(bad) = values.iter().find(|w| !w.is_admissible()) {
            return Err(Error::InvalidWeight(bad.to_string()));
        }
        Ok(Weighting { values })
    }

    /// The same weighting with edge `edge` set to zero.
    pub fn with_zeroed(&self, edge: usize) -> Self {
        let mut values = self.values.clone();
        values[edge] = W::ZERO;
        Weighting { values }
    }

    pub fn values(&self) -> &[W] {
        &self.values
    }

    pub fn get(&self, edge: usize) -> W {
        self.values[edge]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub(crate) fn assert_fits(&self, g: &Graph) {
        assert_eq!(
            self.values.len(),
            g.edge_count(),
            "weighting length does not match the graph's edge count"
        );
    }
}

/// A weighting of every vertex pair of the complete graph on `n` vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedWeighting<W> {
    table: Table<W>,
}

impl<W: Weight> ExtendedWeighting<W> {
    /// Builds from a row-major `n x n` table, checking symmetry, a zero
    /// diagonal and nonnegative entries.
    pub fn from_rows(n: usize, cells: Vec<W>) -> Result<Self> {
        check_square(n, &cells)?;
        Ok(ExtendedWeighting {
            table: Table::from_cells(n, cells),
        })
    }

    pub(crate) fn from_table(table: Table<W>) -> Self {
        ExtendedWeighting { table }
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn get(&self, i: usize, j: usize) -> W {
        self.table.get(i, j)
    }

    /// The same weighting with the pair `{a, b}` set to zero.
    pub fn with_zeroed(&self, a: usize, b: usize) -> Result<Self> {
        check_pair(self.n(), a, b)?;
        let mut table = self.table.clone();
        table.set(a, b, W::ZERO);
        Ok(ExtendedWeighting { table })
    }

    pub fn table(&self) -> &Table<W> {
        &self.table
    }
}

pub(crate) fn check_pair(n: usize, a: usize, b: usize) -> Result<()> {
    for vertex in [a, b] {
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
    }
    if a == b {
        return Err(Error::SameEndpoints(a));
    }
    Ok(())
}

pub(crate) fn check_square<W: Weight>(n: usize, cells: &[W]) -> Result<()> {
    if cells.len() != n * n {
        return Err(Error::MalformedMatrix(format!(
            "expected {} cells, got {}",
            n * n,
            cells.len()
        )));
    }
    for i in 0..n {
        if cells[i * n + i] != W::ZERO {
            return Err(Error::MalformedMatrix(format!("nonzero diagonal at {i}")));
        }
        for j in 0..n {
            let w = cells[i * n + j];
            if !w.is_admissible() {
                return Err(Error::MalformedMatrix(format!("entry ({i}, {j}) = {w}")));
            }
            if w != cells[j * n + i] {
                return Err(Error::MalformedMatrix(format!("asymmetric at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Lays the edge values `inputs` out on the complete graph.
///
/// Non-edges receive `M`, the left fold of `max` over the inputs in edge
/// order (`m - 1` max operations); the diagonal is the constant 0.
pub fn extend_program<M: Machine>(
    machine: &mut M,
    g: &Graph,
    inputs: &[M::Value],
) -> Table<M::Value> {
    assert_eq!(inputs.len(), g.edge_count());
    let zero = machine.zero();
    let mut table = Table::filled(g.vertex_count(), zero);
    let Some((&first, rest)) = inputs.split_first() else {
        // single vertex: nothing but the diagonal
        return table;
    };
    let heaviest = rest.iter().fold(first, |acc, &w| machine.max(acc, w));
    let n = g.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            table.set(i, j, heaviest);
        }
    }
    for (&(u, v), &w) in g.edges().iter().zip(inputs) {
        table.set(u, v, w);
    }
    table
}

/// Extends `x` to the complete graph, giving every non-edge the maximum
/// edge weight. The MST weight is unchanged.
pub fn complete_extension<W: Weight>(g: &Graph, x: &Weighting<W>) -> ExtendedWeighting<W> {
    x.assert_fits(g);
    let mut machine = Eval::new();
    ExtendedWeighting::from_table(extend_program(&mut machine, g, x.values()))
}

/// An ordered list of `n - 1` edge indices forming a spanning tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    edges: Vec<usize>,
}

impl SpanningTree {
    /// Validates that `edges` is a spanning tree of `g`; the order is kept.
    pub fn new(g: &Graph, edges: Vec<usize>) -> Result<Self> {
        let tree = SpanningTree { edges };
        tree.validate(g)?;
        Ok(tree)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        if self.edges.len() + 1 != n {
            return Err(Error::NotSpanningTree(format!(
                "{} edges for {} vertices",
                self.edges.len(),
                n
            )));
        }
        let mut components = crate::oracles::DisjointSets::new(n);
        for &e in &self.edges {
            if e >= g.edge_count() {
                return Err(Error::NotSpanningTree(format!("no edge with index {e}")));
            }
            let (u, v) = g.edge(e);
            if !components.union(u, v) {
                return Err(Error::NotSpanningTree(format!("edge {e} closes a cycle")));
            }
        }
        Ok(())
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// The depth-first-search tree from vertex 0, neighbors in ascending order,
/// edges in discovery order. Depends on `g` only.
pub fn fix_spanning_tree(g: &Graph) -> SpanningTree {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    // (vertex, position in its neighbor list)
    let mut stack = vec![(0usize, 0usize)];
    seen[0] = true;
    while let Some(top) = stack.last_mut() {
        let (v, pos) = *top;
        match g.neighbors(v).get(pos) {
            Some(&w) => {
                top.1 += 1;
                if !seen[w] {
                    seen[w] = true;
                    edges.push(g.edge_index(v, w).expect("neighbor without edge"));
                    stack.push((w, 0));
                }
            }
            None => {
                stack.pop();
            }
        }
    }
    SpanningTree { edges }
}
