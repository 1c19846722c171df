//! Building an actual cycle or path once the decision is positive.
//!
//! The cycle is assembled inside the central component first (a skeleton
//! cycle through the three representatives) and every virtual edge on it is
//! then replaced by a path through its split subgraph.

mod tri;

use serde::Serialize;

pub use tri::{path_splice, tri_cycle_three_edges, tri_cycle_upto_two_edges, TriCase, TriCycle};

use crate::error::{internal, Error, Result};
use crate::graph::{Cycle, EdgeId, ElementRef, Graph, Path, VertexId};
use crate::query::{check_pep_vertices, Engine};
use crate::spqr::{Component, ComponentId, ComponentKind, Representative, SkeletonEdgeKind, SkeletonElement};

/// Where a run of witness edges came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SegmentSource {
    /// A real edge of the central component.
    Real,
    /// A path through the split subgraph behind a virtual edge. `element`
    /// is the index (0..3) of the queried element it was routed through.
    Split { element: Option<usize> },
}

/// A maximal run of consecutive witness edges stemming from one skeleton
/// edge of the central component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    /// Index of the first edge of the run in the witness edge list.
    pub start: usize,
    pub len: usize,
    pub component: ComponentId,
    pub skeleton_edge: usize,
    pub source: SegmentSource,
}

/// How the skeleton cycle in the central component was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "case", rename_all = "snake_case")]
pub enum Construction {
    /// The whole cycle skeleton.
    SNode,
    /// Two parallel edges of a bond.
    PNode,
    /// Rigid skeleton with at least one vertex among the representatives.
    RVertexSplice,
    /// Rigid skeleton with three edge representatives.
    RThreeEdges(TriCase),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCycle {
    pub cycle: Cycle,
    pub central: ComponentId,
    pub construction: Construction,
    pub segments: Vec<Segment>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPath {
    pub path: Path,
    pub central: ComponentId,
    pub construction: Construction,
    pub segments: Vec<Segment>,
}

/// A cycle in a component skeleton; `edges[i]` is the skeleton edge index
/// joining `vertices[i]` and `vertices[(i + 1) % len]`. Bonds give cycles of
/// length two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<usize>,
}

/// A skeleton cycle through three pairwise distinct skeleton elements of the
/// central component. Fails with a precondition error when no such cycle
/// exists (a negative verdict).
pub fn skeleton_cycle(c: &Component, reps: [SkeletonElement; 3]) -> Result<(SkeletonCycle, Construction)> {
    let negative = || Error::Precondition("no skeleton cycle through these representatives".into());
    match c.kind {
        ComponentKind::S => {
            let vertices = c.cycle_order();
            let n = vertices.len();
            for (i, e) in c.edges.iter().enumerate() {
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                if !(e.touches(a) && e.touches(b)) {
                    return internal("S skeleton edges are not in cycle order");
                }
            }
            Ok((
                SkeletonCycle {
                    vertices,
                    edges: (0..n).collect(),
                },
                Construction::SNode,
            ))
        }
        ComponentKind::P => {
            let mut chosen: Vec<usize> = reps
                .iter()
                .filter_map(|r| match r {
                    SkeletonElement::Edge(i) => Some(*i),
                    SkeletonElement::Vertex(_) => None,
                })
                .collect();
            if chosen.len() > 2 {
                return Err(negative());
            }
            for i in 0..c.edges.len() {
                if chosen.len() == 2 {
                    break;
                }
                if !chosen.contains(&i) {
                    chosen.push(i);
                }
            }
            let (a, b) = (c.vertices[0], c.vertices[1]);
            Ok((
                SkeletonCycle {
                    vertices: vec![a, b],
                    edges: chosen,
                },
                Construction::PNode,
            ))
        }
        ComponentKind::R => {
            let h = c.skeleton_graph()?;
            let local: Vec<ElementRef> = reps
                .iter()
                .map(|r| match *r {
                    SkeletonElement::Vertex(v) => c
                        .local_index(v)
                        .map(|i| ElementRef::Vertex(VertexId(i as u32)))
                        .ok_or(Error::UnknownVertex(v)),
                    SkeletonElement::Edge(i) if i < c.edges.len() => Ok(ElementRef::Edge(EdgeId(i as u32))),
                    SkeletonElement::Edge(i) => Err(Error::Precondition(format!("no skeleton edge {i}"))),
                })
                .collect::<Result<_>>()?;
            let all_edges: Option<Vec<EdgeId>> = local
                .iter()
                .map(|x| match x {
                    ElementRef::Edge(e) => Some(*e),
                    ElementRef::Vertex(_) => None,
                })
                .collect();
            let (cycle, how) = match all_edges {
                Some(es) => {
                    let tc = tri::three_edges(&h, [es[0], es[1], es[2]])?.ok_or_else(negative)?;
                    (tc.cycle, Construction::RThreeEdges(tc.case))
                }
                None => (tri::upto_two_edges(&h, &local)?, Construction::RVertexSplice),
            };
            Ok((
                SkeletonCycle {
                    vertices: cycle.vertices.iter().map(|v| c.vertices[v.index()]).collect(),
                    edges: cycle.edges.iter().map(|e| e.index()).collect(),
                },
                how,
            ))
        }
    }
}

/// A simple cycle of `g` through `x1`, `x2` and `x3`, or `None` when there
/// is none.
pub fn construct_cycle(g: &Graph, x1: ElementRef, x2: ElementRef, x3: ElementRef) -> Result<Option<WitnessCycle>> {
    Engine::new(g.clone())?.construct_cycle(x1, x2, x3)
}

/// A simple `s`–`t` path of `g` through `w1` and `w2`, or `None` when there
/// is none. Built from a cycle through `(s,t)`, `w1`, `w2` in `g ∪ (s,t)`.
pub fn construct_path(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    w1: VertexId,
    w2: VertexId,
) -> Result<Option<WitnessPath>> {
    check_pep_vertices(g, s, t, w1, w2)?;
    let (gp, e, _) = g.add_edge(s, t)?;
    let Some(wc) = construct_cycle(&gp, ElementRef::Edge(e), ElementRef::Vertex(w1), ElementRef::Vertex(w2))? else {
        return Ok(None);
    };
    Ok(Some(open_cycle(g, &wc, e, s)?))
}

/// Removes edge `e` from a witness cycle and orients the rest to start at
/// `s`, carrying the segment annotations along.
fn open_cycle(g: &Graph, wc: &WitnessCycle, e: EdgeId, s: VertexId) -> Result<WitnessPath> {
    let n = wc.cycle.len();
    let i = wc
        .cycle
        .edges
        .iter()
        .position(|&f| f == e)
        .ok_or_else(|| Error::Internal("cycle misses the added edge".into()))?;
    let mut path = wc.cycle.open_at(e).expect("edge is on the cycle");
    let tags = segment_tags(&wc.segments, n);
    let mut rotated: Vec<Tag> = (0..n - 1).map(|k| tags[(i + 1 + k) % n]).collect();
    if path.first() != s {
        path = path.reversed();
        rotated.reverse();
    }
    path.validate(g)?;
    Ok(WitnessPath {
        path,
        central: wc.central,
        construction: wc.construction,
        segments: group_tags(&rotated),
    })
}

impl Engine {
    /// Cycle witness for a positive cycle query; `None` for a negative one.
    pub fn construct_cycle(&self, x1: ElementRef, x2: ElementRef, x3: ElementRef) -> Result<Option<WitnessCycle>> {
        let xs = [x1, x2, x3];
        let verdict = self.cep_decide(x1, x2, x3)?;
        if !verdict.answer {
            return Ok(None);
        }
        let tree = self
            .locate(xs)?
            .ok_or_else(|| Error::Internal("positive verdict without a block".into()))?;
        let c = verdict
            .central
            .ok_or_else(|| Error::Internal("positive verdict without a central component".into()))?
            .component;
        let comp = tree.component(c);
        let reps: Vec<Representative> = xs
            .iter()
            .map(|&x| tree.representative(c, x))
            .collect::<Result<_>>()?;
        let sk = [
            tree.skeleton_element(c, reps[0])?,
            tree.skeleton_element(c, reps[1])?,
            tree.skeleton_element(c, reps[2])?,
        ];
        let (scyc, construction) = skeleton_cycle(comp, sk)?;

        let n = scyc.vertices.len();
        let mut seq: Vec<VertexId> = Vec::new();
        let mut tags: Vec<Tag> = Vec::new();
        for i in 0..n {
            let (a, b) = (scyc.vertices[i], scyc.vertices[(i + 1) % n]);
            let idx = scyc.edges[i];
            let se = &comp.edges[idx];
            let (piece, source) = match se.kind {
                SkeletonEdgeKind::Real(_) => (vec![a, b], SegmentSource::Real),
                SkeletonEdgeKind::Virtual { .. } => {
                    let element = reps
                        .iter()
                        .position(|r| matches!(r, Representative::Virtual { edge, .. } if *edge == idx));
                    let p = match element {
                        Some(k) => tree.path_through_in_split(c, idx, xs[k])?,
                        None => tree
                            .split_subgraph(c, idx)?
                            .bfs_path(se.ends.0, se.ends.1)
                            .ok_or_else(|| Error::Internal("split subgraph disconnects its poles".into()))?,
                    };
                    let mut vs = p.vertices;
                    if vs[0] != a {
                        vs.reverse();
                    }
                    (vs, SegmentSource::Split { element })
                }
            };
            if piece[0] != a || *piece.last().expect("non-empty") != b {
                return internal("segment does not join its skeleton edge ends");
            }
            for _ in 1..piece.len() {
                tags.push(Tag {
                    component: c,
                    skeleton_edge: idx,
                    source,
                });
            }
            seq.extend_from_slice(&piece[..piece.len() - 1]);
        }
        let cycle = Cycle::from_vertices(self.graph(), &seq)?;
        cycle.validate(self.graph())?;
        if let Some(x) = xs.iter().find(|&&x| !cycle.contains(x)) {
            return internal(format!("witness cycle misses {x:?}"));
        }
        Ok(Some(WitnessCycle {
            cycle,
            central: c,
            construction,
            segments: group_tags(&tags),
        }))
    }

    /// Path witness for a positive path query; `None` for a negative one.
    pub fn construct_path(&self, s: VertexId, t: VertexId, w1: VertexId, w2: VertexId) -> Result<Option<WitnessPath>> {
        construct_path(self.graph(), s, t, w1, w2)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Tag {
    component: ComponentId,
    skeleton_edge: usize,
    source: SegmentSource,
}

fn group_tags(tags: &[Tag]) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for (k, t) in tags.iter().enumerate() {
        match out.last_mut() {
            Some(s) if s.component == t.component && s.skeleton_edge == t.skeleton_edge => s.len += 1,
            _ => out.push(Segment {
                start: k,
                len: 1,
                component: t.component,
                skeleton_edge: t.skeleton_edge,
                source: t.source,
            }),
        }
    }
    out
}

fn segment_tags(segments: &[Segment], n: usize) -> Vec<Tag> {
    let mut out = Vec::with_capacity(n);
    for s in segments {
        for _ in 0..s.len {
            out.push(Tag {
                component: s.component,
                skeleton_edge: s.skeleton_edge,
                source: s.source,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(g: &Graph, l: &str) -> VertexId {
        g.vertex_by_label(l).unwrap()
    }

    fn labels(g: &Graph, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&x| g.display_label(x)).collect()
    }

    #[test]
    fn three_routes_cycle_and_path() {
        let g = fixtures::three_routes();
        let e = g.edge_between(v(&g, "w4"), v(&g, "x")).unwrap();
        let wc = construct_cycle(&g, ElementRef::Edge(e), ElementRef::Vertex(v(&g, "u1")), ElementRef::Vertex(v(&g, "u6")))
            .unwrap()
            .unwrap();
        let mut got = labels(&g, &wc.cycle.vertices);
        let k = got.iter().position(|l| l == "u1").unwrap();
        got.rotate_left(k);
        if got[1] != "x" {
            got[1..].reverse();
        }
        assert_eq!(got, ["u1", "x", "w4", "t", "u3", "u2", "u6", "u5"]);

        let wp = construct_path(&g, v(&g, "w4"), v(&g, "x"), v(&g, "u1"), v(&g, "u6")).unwrap().unwrap();
        assert_eq!(labels(&g, &wp.path.vertices), ["w4", "t", "u3", "u2", "u6", "u5", "u1", "x"]);
        let covered: usize = wp.segments.iter().map(|s| s.len).sum();
        assert_eq!(covered, wp.path.edges.len());
        assert!(construct_path(&g, v(&g, "w4"), v(&g, "x"), v(&g, "u1"), v(&g, "w2")).unwrap().is_none());
    }

    #[test]
    fn small_fixtures() {
        let c5 = fixtures::cycle(5);
        let xs = [0, 2, 4].map(|i| ElementRef::Vertex(v(&c5, &format!("c{i}"))));
        let wc = construct_cycle(&c5, xs[0], xs[1], xs[2]).unwrap().unwrap();
        assert_eq!(wc.cycle.len(), 5);
        assert_eq!(wc.construction, Construction::SNode);

        let sq = fixtures::square();
        assert!(construct_path(&sq, v(&sq, "s"), v(&sq, "t"), v(&sq, "a"), v(&sq, "b")).unwrap().is_none());

        let k4 = fixtures::complete(4);
        let p = construct_path(&k4, v(&k4, "v0"), v(&k4, "v1"), v(&k4, "v2"), v(&k4, "v3")).unwrap().unwrap();
        assert_eq!(p.path.vertices.len(), 4);
    }

    #[test]
    fn triconnected_three_edges() {
        let k4 = fixtures::complete(4);
        let e = |a: &str, b: &str| k4.edge_between(v(&k4, a), v(&k4, b)).unwrap();
        let tri = tri_cycle_three_edges(&k4, e("v0", "v1"), e("v1", "v2"), e("v2", "v0")).unwrap().unwrap();
        assert_eq!(tri.case, TriCase::Triangle);
        let chain = tri_cycle_three_edges(&k4, e("v0", "v1"), e("v1", "v2"), e("v2", "v3")).unwrap().unwrap();
        assert_eq!(chain.case, TriCase::Chain);
        assert_eq!(chain.cycle.len(), 4);
        assert!(tri_cycle_three_edges(&k4, e("v0", "v1"), e("v0", "v2"), e("v0", "v3")).unwrap().is_none());

        let p = fixtures::prism();
        let r = |a: &str, b: &str| p.edge_between(v(&p, a), v(&p, b)).unwrap();
        assert!(tri_cycle_three_edges(&p, r("a1", "b1"), r("a2", "b2"), r("a3", "b3")).unwrap().is_none());
        let c = tri_cycle_upto_two_edges(&p, &[ElementRef::Edge(r("a1", "b1")), ElementRef::Edge(r("a2", "b2")), ElementRef::Vertex(v(&p, "a3"))]).unwrap();
        c.validate(&p).unwrap();

        let k5 = fixtures::complete(5);
        let vs = [0, 2, 4].map(|i| ElementRef::Vertex(v(&k5, &format!("v{i}"))));
        tri_cycle_upto_two_edges(&k5, &vs).unwrap().validate(&k5).unwrap();
        assert!(matches!(
            tri_cycle_upto_two_edges(&fixtures::cycle(5), &vs[..2].iter().map(|_| ElementRef::Vertex(VertexId(0))).collect::<Vec<_>>()),
            Err(Error::NonDistinctElements)
        ));
    }
}
