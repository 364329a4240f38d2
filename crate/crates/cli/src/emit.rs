use std::fmt::Write as _;

use ringgraph_core::{OrbitGraph, RingExpr};
use serde::Serialize;

/// `|Aut Γ|` as a JSON number when it fits, as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GraphAutOrder {
    Exact(u64),
    Big(String),
}

/// Invariants of one ring under its full automorphism group. Field order is
/// the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingReport {
    pub expr: String,
    pub order: usize,
    pub characteristic: usize,
    pub is_local: bool,
    pub aut_order: u128,
    pub orbit_sizes: Vec<usize>,
    #[serde(rename = "type")]
    pub graph_type: usize,
    pub totally_disconnected: bool,
    pub planar: bool,
    pub units_minus_one_connected: bool,
    pub m_minus_zero_connected: Option<bool>,
    pub graph_aut_order: GraphAutOrder,
}

impl RingReport {
    pub fn new(expr: &RingExpr, graph: &OrbitGraph) -> Self {
        let ring = graph.ring();
        let units: Vec<usize> = ring
            .units()
            .iter()
            .copied()
            .filter(|&u| u != ring.one())
            .collect();
        let m_minus_zero = ring.maximal_ideal().map(|m| {
            let rest: Vec<usize> = m.into_iter().filter(|&x| x != ring.zero()).collect();
            graph.subset_connected(&rest)
        });
        RingReport {
            expr: expr.to_string(),
            order: ring.order(),
            characteristic: ring.characteristic(),
            is_local: ring.is_local(),
            aut_order: graph.group().order(),
            orbit_sizes: graph.orbit_sizes(),
            graph_type: graph.graph_type(),
            totally_disconnected: graph.is_totally_disconnected(),
            planar: graph.is_planar(),
            units_minus_one_connected: graph.subset_connected(&units),
            m_minus_zero_connected: m_minus_zero,
            graph_aut_order: match graph.graph_aut_order() {
                Ok(v) => GraphAutOrder::Exact(v),
                Err(_) => GraphAutOrder::Big(graph.graph_aut_order_big().to_string()),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let aut_gamma = match &self.graph_aut_order {
            GraphAutOrder::Exact(v) => v.to_string(),
            GraphAutOrder::Big(s) => s.clone(),
        };
        let m_conn = self
            .m_minus_zero_connected
            .map_or_else(|| "n/a (not local)".to_string(), |b| b.to_string());
        let mut out = String::new();
        let rows: [(&str, String); 12] = [
            ("ring", self.expr.clone()),
            ("order", self.order.to_string()),
            ("characteristic", self.characteristic.to_string()),
            ("local", self.is_local.to_string()),
            ("|Aut R|", self.aut_order.to_string()),
            ("orbit sizes", format!("{:?}", self.orbit_sizes)),
            ("type", self.graph_type.to_string()),
            (
                "totally disconnected",
                self.totally_disconnected.to_string(),
            ),
            ("planar", self.planar.to_string()),
            (
                "U(R)-{1} connected",
                self.units_minus_one_connected.to_string(),
            ),
            ("M-{0} connected", m_conn),
            ("|Aut graph|", aut_gamma),
        ];
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<22}{v}");
        }
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT. One node per element with edges inside each orbit, or
/// with `collapse` one node per orbit and no edges.
pub fn emit_dot(graph: &OrbitGraph, collapse: bool) -> String {
    let ring = graph.ring();
    let mut out = format!("graph {} {{\n", quote(ring.label()));
    if collapse {
        for (i, block) in graph.cliques().iter().enumerate() {
            let _ = writeln!(
                out,
                "  o{i} [label={}];",
                quote(&format!("size={}", block.len()))
            );
        }
    } else {
        for x in ring.elements() {
            let _ = writeln!(out, "  n{x} [label={}];", quote(ring.name(x)));
        }
        for block in graph.cliques() {
            for (i, &a) in block.iter().enumerate() {
                for &b in &block[i + 1..] {
                    let _ = writeln!(out, "  n{a} -- n{b};");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson<'a> {
    expr: String,
    cliques: Vec<Vec<&'a str>>,
}

/// The clique partition with element names.
pub fn emit_graph_json(expr: &RingExpr, graph: &OrbitGraph) -> String {
    let ring = graph.ring();
    let doc = GraphJson {
        expr: expr.to_string(),
        cliques: graph
            .cliques()
            .iter()
            .map(|b| b.iter().map(|&x| ring.name(x)).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}
