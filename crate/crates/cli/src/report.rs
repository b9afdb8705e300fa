use std::fmt::Write as _;

use mstdp::{Decomposition, Graph, OpCounts};
use serde::Serialize;
use serde_json::Value;

/// Weights print as integers whenever they are integral and exactly
/// representable, otherwise as floats.
pub fn weight_value(w: f64) -> Value {
    const EXACT: f64 = 9_007_199_254_740_992.0; // 2^53
    if w.fract() == 0.0 && w.abs() < EXACT {
        Value::from(w as i64)
    } else {
        Value::from(w)
    }
}

#[derive(Debug, Serialize)]
pub struct Ops {
    pub min: u64,
    pub max: u64,
    pub add: u64,
    pub total: u64,
}

impl From<OpCounts> for Ops {
    fn from(c: OpCounts) -> Self {
        Ops {
            min: c.min_count,
            max: c.max_count,
            add: c.add_count,
            total: c.total(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Term {
    pub edge: usize,
    pub u: usize,
    pub v: usize,
    pub distance: Value,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub algorithm: &'static str,
    pub mst_weight: Value,
    pub ops: Option<Ops>,
    pub decomposition: Option<Vec<Term>>,
    pub time_ms: f64,
}

impl RunReport {
    pub fn terms(g: &Graph, d: &Decomposition<f64>) -> Vec<Term> {
        d.terms
            .iter()
            .map(|&(edge, w)| {
                let (u, v) = g.edge(edge);
                Term {
                    edge,
                    u: u + 1,
                    v: v + 1,
                    distance: weight_value(w),
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut row = |key: &str, value: String| {
            writeln!(out, "{key:<14}{value}").unwrap();
        };
        row("algorithm", self.algorithm.to_string());
        row("mst_weight", self.mst_weight.to_string());
        if let Some(ops) = &self.ops {
            row("ops.min", ops.min.to_string());
            row("ops.max", ops.max.to_string());
            row("ops.add", ops.add.to_string());
            row("ops.total", ops.total.to_string());
        }
        if let Some(terms) = &self.decomposition {
            for (i, t) in terms.iter().enumerate() {
                row(
                    &format!("term[{}]", i + 1),
                    format!(
                        "edge {} {{{}, {}}} distance {}",
                        t.edge, t.u, t.v, t.distance
                    ),
                );
            }
        }
        row("time_ms", format!("{:.3}", self.time_ms));
        out
    }
}
