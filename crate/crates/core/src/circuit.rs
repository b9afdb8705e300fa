//! The pure DP as an explicit straight-line program.
//!
//! A [`Circuit`] is a list of nodes, each an input, the constant 0, or a
//! binary `min`, `max` or `add` of earlier nodes. Compiling runs the same
//! generic program as the solvers with a [`Machine`] that records nodes
//! instead of computing, so the circuit mirrors the solver's operation
//! sequence one for one: no sharing, no pruning.
//!
//! Text form, one node per line:
//!
//! ```text
//! 0 = input 0
//! 1 = const 0
//! 2 = max 1 0
//! ...
//! output 6
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{fix_spanning_tree, Graph, Weighting};
use crate::machine::{Machine, OpCounts};
use crate::puredp::{incremental_program, naive_program};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The node kinds. There is no subtraction, comparison or branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Node {
    /// The weight of an edge, by edge index.
    Input(usize),
    /// The constant 0.
    Zero,
    Min(NodeId, NodeId),
    Max(NodeId, NodeId),
    Add(NodeId, NodeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    nodes: Vec<Node>,
    output: NodeId,
    n: usize,
    m: usize,
}

impl Circuit {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn output(&self) -> NodeId {
        self.output
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn input_count(&self) -> usize {
        self.m
    }

    /// Every operand refers to an earlier node and inputs cover `0..m` once.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = vec![false; self.m];
        let operands_ok = self.nodes.iter().enumerate().all(|(id, node)| match *node {
            Node::Input(e) => e < self.m && !std::mem::replace(&mut seen[e], true),
            Node::Zero => true,
            Node::Min(a, b) | Node::Max(a, b) | Node::Add(a, b) => a.0 < id && b.0 < id,
        });
        operands_ok && seen.iter().all(|&s| s) && self.output.0 < self.nodes.len()
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, node) in self.nodes.iter().enumerate() {
            match node {
                Node::Input(e) => writeln!(f, "{id} = input {e}")?,
                Node::Zero => writeln!(f, "{id} = const 0")?,
                Node::Min(a, b) => writeln!(f, "{id} = min {a} {b}")?,
                Node::Max(a, b) => writeln!(f, "{id} = max {a} {b}")?,
                Node::Add(a, b) => writeln!(f, "{id} = add {a} {b}")?,
            }
        }
        writeln!(f, "output {}", self.output)
    }
}

/// Records operations as nodes. Inputs come first, in edge order; the
/// constant 0 is created once on first use.
struct Builder {
    nodes: Vec<Node>,
    zero: Option<NodeId>,
}

impl Builder {
    fn new(m: usize) -> Self {
        Builder {
            nodes: (0..m).map(Node::Input).collect(),
            zero: None,
        }
    }

    fn push(&mut self, node: Node) -> NodeId {
        self.nodes.push(node);
        NodeId(self.nodes.len() - 1)
    }

    fn inputs(&self) -> Vec<NodeId> {
        (0..self.nodes.len()).map(NodeId).collect()
    }
}

impl Machine for Builder {
    type Value = NodeId;

    fn zero(&mut self) -> NodeId {
        match self.zero {
            Some(id) => id,
            None => {
                let id = self.push(Node::Zero);
                self.zero = Some(id);
                id
            }
        }
    }

    fn min(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Node::Min(a, b))
    }

    fn max(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Node::Max(a, b))
    }

    fn add(&mut self, a: NodeId, b: NodeId) -> NodeId {
        self.push(Node::Add(a, b))
    }
}

type Program =
    fn(&mut Builder, &Graph, &crate::graph::SpanningTree, &[NodeId]) -> (Vec<NodeId>, NodeId);

fn compile(g: &Graph, program: Program) -> Circuit {
    let mut builder = Builder::new(g.edge_count());
    let inputs = builder.inputs();
    let (_, output) = program(&mut builder, g, &fix_spanning_tree(g), &inputs);
    Circuit {
        nodes: builder.nodes,
        output,
        n: g.vertex_count(),
        m: g.edge_count(),
    }
}

/// The `O(n^3)` solver for `g` as a circuit. Depends on `g` only.
pub fn compile_mst_circuit(g: &Graph) -> Circuit {
    compile(g, incremental_program::<Builder>)
}

/// The `O(n^4)` solver for `g` as a circuit.
pub fn compile_naive_circuit(g: &Graph) -> Circuit {
    compile(g, naive_program::<Builder>)
}

/// Evaluates the nodes in order and returns the output value.
pub fn evaluate<W: Weight>(c: &Circuit, x: &Weighting<W>) -> Result<W> {
    if x.len() != c.m {
        return Err(Error::ArityMismatch {
            expected: c.m,
            actual: x.len(),
        });
    }
    let mut values: Vec<W> = Vec::with_capacity(c.nodes.len());
    for node in &c.nodes {
        let v = match *node {
            Node::Input(e) => x.get(e),
            Node::Zero => W::ZERO,
            Node::Min(a, b) => values[a.0].min_of(values[b.0]),
            Node::Max(a, b) => values[a.0].max_of(values[b.0]),
            Node::Add(a, b) => values[a.0] + values[b.0],
        };
        values.push(v);
    }
    Ok(values[c.output.0])
}

/// Tallies the operation nodes.
pub fn count_ops(c: &Circuit) -> OpCounts {
    c.nodes.iter().fold(OpCounts::default(), |mut acc, node| {
        match node {
            Node::Min(..) => acc.min_count += 1,
            Node::Max(..) => acc.max_count += 1,
            Node::Add(..) => acc.add_count += 1,
            Node::Input(_) | Node::Zero => {}
        }
        acc
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puredp::{incremental_op_counts, mst_puredp, naive_op_counts};

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_evaluates_to_mst() {
        let g = triangle();
        let c = compile_mst_circuit(&g);
        assert!(c.is_well_formed());
        let x = Weighting::new(&g, vec![1u64, 3, 2]).unwrap();
        assert_eq!(evaluate(&c, &x).unwrap(), 3);
        assert_eq!(evaluate(&c, &x).unwrap(), mst_puredp(&g, &x).0);
    }

    #[test]
    fn deterministic() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(compile_mst_circuit(&g), compile_mst_circuit(&g));
        assert_eq!(
            compile_mst_circuit(&g).to_string(),
            compile_mst_circuit(&g).to_string()
        );
    }

    #[test]
    fn single_edge_circuit() {
        let g = Graph::path(2).unwrap();
        let c = compile_mst_circuit(&g);
        let inputs = c
            .nodes()
            .iter()
            .filter(|n| matches!(n, Node::Input(_)))
            .count();
        assert_eq!(inputs, 1);
        let x = Weighting::new(&g, vec![7u64]).unwrap();
        assert_eq!(evaluate(&c, &x).unwrap(), 7);
        let counts = count_ops(&c);
        assert_eq!(counts.min_count + counts.max_count, 4);
        assert_eq!(counts.add_count, 1);
        assert_eq!(
            c.to_string(),
            "0 = input 0\n1 = const 0\n2 = max 1 0\n3 = min 0 2\n4 = max 3 1\n5 = min 3 4\n6 = add 1 5\noutput 6\n"
        );
    }

    #[test]
    fn single_vertex_outputs_zero() {
        let g = Graph::new(1, []).unwrap();
        let c = compile_mst_circuit(&g);
        assert_eq!(c.nodes(), &[Node::Zero]);
        let x = Weighting::<u64>::new(&g, vec![]).unwrap();
        assert_eq!(evaluate(&c, &x).unwrap(), 0);
    }

    #[test]
    fn arity_mismatch() {
        let c = compile_mst_circuit(&triangle());
        let other = Graph::path(2).unwrap();
        let x = Weighting::new(&other, vec![1u64]).unwrap();
        assert_eq!(
            evaluate(&c, &x).unwrap_err(),
            Error::ArityMismatch {
                expected: 3,
                actual: 1
            }
        );
    }

    #[test]
    fn counts_match_solver_accounting() {
        for g in [
            Graph::complete(6).unwrap(),
            Graph::path(4).unwrap(),
            triangle(),
        ] {
            let (n, m) = (g.vertex_count(), g.edge_count());
            assert_eq!(
                count_ops(&compile_mst_circuit(&g)),
                incremental_op_counts(n, m)
            );
            assert_eq!(count_ops(&compile_naive_circuit(&g)), naive_op_counts(n, m));
        }
    }

    #[test]
    fn naive_is_larger_on_k8() {
        let g = Graph::complete(8).unwrap();
        let fast = count_ops(&compile_mst_circuit(&g)).total();
        let slow = count_ops(&compile_naive_circuit(&g)).total();
        assert!(fast < slow, "{fast} vs {slow}");
    }

    #[test]
    fn monotone_in_inputs() {
        let g = Graph::complete(4).unwrap();
        let c = compile_mst_circuit(&g);
        let low = Weighting::new(&g, vec![1u64, 5, 2, 8, 3, 4]).unwrap();
        let high = Weighting::new(&g, vec![2u64, 5, 6, 8, 3, 9]).unwrap();
        assert!(evaluate(&c, &low).unwrap() <= evaluate(&c, &high).unwrap());
    }
}
