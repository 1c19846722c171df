use std::fmt::Write as _;

use serde::Serialize;

use super::{ComponentKind, SkeletonEdgeKind, SpqrTree};
use crate::graph::escape_dot;

#[derive(Serialize)]
pub struct TreeDump {
    pub components: Vec<ComponentDump>,
    pub structural_edges: Vec<StructuralDump>,
}

#[derive(Serialize)]
pub struct ComponentDump {
    pub id: u32,
    pub kind: ComponentKind,
    pub vertices: Vec<String>,
    pub edges: Vec<SkeletonDump>,
}

#[derive(Serialize)]
pub struct SkeletonDump {
    pub ends: [String; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub real: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twin: Option<TwinDump>,
}

#[derive(Serialize)]
pub struct TwinDump {
    pub component: u32,
    pub edge: usize,
}

#[derive(Serialize)]
pub struct StructuralDump {
    pub from: TwinDump,
    pub to: TwinDump,
}

impl SpqrTree {
    /// Serializable view with vertex labels.
    pub fn dump(&self) -> TreeDump {
        let g = &self.graph;
        let components = self
            .components
            .iter()
            .map(|c| ComponentDump {
                id: c.id.0,
                kind: c.kind,
                vertices: c.vertices.iter().map(|&v| g.display_label(v)).collect(),
                edges: c
                    .edges
                    .iter()
                    .map(|e| SkeletonDump {
                        ends: [g.display_label(e.ends.0), g.display_label(e.ends.1)],
                        real: e.real().map(|id| id.0),
                        twin: match e.kind {
                            SkeletonEdgeKind::Virtual {
                                twin_component,
                                twin_edge,
                            } => Some(TwinDump {
                                component: twin_component.0,
                                edge: twin_edge,
                            }),
                            SkeletonEdgeKind::Real(_) => None,
                        },
                    })
                    .collect(),
            })
            .collect();
        let structural_edges = self
            .structural
            .iter()
            .map(|s| StructuralDump {
                from: TwinDump {
                    component: s.a.0,
                    edge: s.a_edge,
                },
                to: TwinDump {
                    component: s.b.0,
                    edge: s.b_edge,
                },
            })
            .collect();
        TreeDump {
            components,
            structural_edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.dump()).expect("tree dump serializes")
    }

    /// DOT rendering: one cluster per component, virtual edges dashed,
    /// structural edges bold between the twin copies.
    pub fn to_dot(&self) -> String {
        let g = &self.graph;
        let node = |c: u32, v: crate::graph::VertexId| format!("c{}_v{}", c, v.0);
        let mut out = String::from("graph SPQR {\n  compound=true;\n");
        for c in &self.components {
            let _ = writeln!(out, "  subgraph cluster_{} {{", c.id.0);
            let _ = writeln!(out, "    label=\"{}{}\";", c.kind, c.id.0);
            for &v in &c.vertices {
                let _ = writeln!(
                    out,
                    "    {} [label=\"{}\"];",
                    node(c.id.0, v),
                    escape_dot(&g.display_label(v))
                );
            }
            for e in &c.edges {
                let style = if e.is_virtual() { " [style=dashed]" } else { "" };
                let _ = writeln!(
                    out,
                    "    {} -- {}{};",
                    node(c.id.0, e.ends.0),
                    node(c.id.0, e.ends.1),
                    style
                );
            }
            out.push_str("  }\n");
        }
        for s in &self.structural {
            let a = self.component(s.a);
            let b = self.component(s.b);
            let _ = writeln!(
                out,
                "  {} -- {} [style=bold, ltail=cluster_{}, lhead=cluster_{}];",
                node(s.a.0, a.edges[s.a_edge].ends.0),
                node(s.b.0, b.edges[s.b_edge].ends.0),
                s.a.0,
                s.b.0
            );
        }
        out.push_str("}\n");
        out
    }
}
