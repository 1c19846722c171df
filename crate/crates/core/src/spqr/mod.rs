//! SPQR trees: the decomposition of a biconnected graph into cycles (S),
//! bonds (P) and triconnected skeletons (R), glued along virtual edges.

mod build;
mod export;

use serde::Serialize;

pub use build::{build_spqr, build_spqr_with_order, SplitOrder};

use crate::error::{internal, Error, Result};
use crate::graph::{EdgeId, ElementRef, Graph, Path, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ComponentId(pub u32);

impl ComponentId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentKind {
    S,
    P,
    R,
}

impl std::fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ComponentKind::S => "S",
            ComponentKind::P => "P",
            ComponentKind::R => "R",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SkeletonEdgeKind {
    Real(EdgeId),
    Virtual {
        twin_component: ComponentId,
        twin_edge: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonEdge {
    pub ends: (VertexId, VertexId),
    pub kind: SkeletonEdgeKind,
}

impl SkeletonEdge {
    pub fn is_virtual(&self) -> bool {
        matches!(self.kind, SkeletonEdgeKind::Virtual { .. })
    }

    pub fn real(&self) -> Option<EdgeId> {
        match self.kind {
            SkeletonEdgeKind::Real(e) => Some(e),
            SkeletonEdgeKind::Virtual { .. } => None,
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub id: ComponentId,
    pub kind: ComponentKind,
    /// Skeleton vertices, ascending.
    pub vertices: Vec<VertexId>,
    /// S components list their edges in cycle order starting at the
    /// smallest vertex; P components list the real edge (if any) first.
    pub edges: Vec<SkeletonEdge>,
}

impl Component {
    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn local_index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn virtual_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_virtual())
            .map(|(i, _)| i)
    }

    /// The skeleton as a simple graph on local vertex ids `0..k` (position in
    /// `vertices`), where `EdgeId(i)` stands for skeleton edge `i`. Virtual
    /// edges become ordinary edges. Fails for P components (multigraphs).
    pub fn skeleton_graph(&self) -> Result<Graph> {
        if self.kind == ComponentKind::P {
            return Err(Error::Precondition(
                "P skeletons are multigraphs".to_string(),
            ));
        }
        let pairs: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|e| {
                (
                    self.local_index(e.ends.0).unwrap() as u32,
                    self.local_index(e.ends.1).unwrap() as u32,
                )
            })
            .collect();
        Graph::from_edges(self.vertices.len(), &pairs)
    }

    /// Vertices of an S component in cycle order.
    pub fn cycle_order(&self) -> Vec<VertexId> {
        self.edges.iter().map(|e| e.ends.0).collect()
    }
}

/// r_C(x): how element `x` shows up inside component `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Representative {
    /// `x` itself is a vertex or real edge of the component.
    Real(ElementRef),
    /// `x` lies beyond the given virtual skeleton edge.
    Virtual { component: ComponentId, edge: usize },
}

impl Representative {
    pub fn is_vertex(&self) -> bool {
        matches!(self, Representative::Real(ElementRef::Vertex(_)))
    }
}

/// An element of a skeleton: a vertex or a skeleton edge (by index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SkeletonElement {
    Vertex(VertexId),
    Edge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StructuralEdge {
    pub a: ComponentId,
    pub a_edge: usize,
    pub b: ComponentId,
    pub b_edge: usize,
}

#[derive(Clone, Debug)]
pub struct SpqrTree {
    graph: Graph,
    components: Vec<Component>,
    structural: Vec<StructuralEdge>,
    edge_home: Vec<Option<(ComponentId, usize)>>,
    vertex_homes: Vec<Vec<ComponentId>>,
    // Rooted view at component 0.
    parent: Vec<Option<ComponentId>>,
    /// Skeleton edge of a component that leads to its parent.
    up_edge: Vec<usize>,
    /// Children with the skeleton edge leading to them, in discovery order.
    children: Vec<Vec<(usize, ComponentId)>>,
    depth: Vec<u32>,
    tin: Vec<u32>,
    tout: Vec<u32>,
    order: Vec<ComponentId>,
    top: Vec<Option<ComponentId>>,
    top_in_subtree: Vec<u32>,
}

impl SpqrTree {
    /// The biconnected graph this tree decomposes.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, c: ComponentId) -> &Component {
        &self.components[c.index()]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn structural_edges(&self) -> &[StructuralEdge] {
        &self.structural
    }

    /// Component holding real edge `e`, with its skeleton index.
    pub fn edge_home(&self, e: EdgeId) -> Option<(ComponentId, usize)> {
        self.edge_home.get(e.index()).copied().flatten()
    }

    /// Components containing vertex `v`, ascending.
    pub fn vertex_homes(&self, v: VertexId) -> &[ComponentId] {
        self.vertex_homes
            .get(v.index())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// A component in which `x` is real: the edge's home; for a vertex, the
    /// first rigid component containing it, else the first component.
    pub fn home(&self, x: ElementRef) -> Result<ComponentId> {
        match x {
            ElementRef::Vertex(v) => {
                let homes = self.vertex_homes(v);
                homes
                    .iter()
                    .copied()
                    .find(|&c| self.component(c).kind == ComponentKind::R)
                    .or_else(|| homes.first().copied())
                    .ok_or(Error::UnknownVertex(v))
            }
            ElementRef::Edge(e) => self.edge_home(e).map(|h| h.0).ok_or(Error::UnknownEdge(e)),
        }
    }

    pub fn parent(&self, c: ComponentId) -> Option<ComponentId> {
        self.parent[c.index()]
    }

    pub fn depth(&self, c: ComponentId) -> usize {
        self.depth[c.index()] as usize
    }

    /// True when `a` is an ancestor of (or equal to) `b` in the rooted view.
    pub fn is_ancestor(&self, a: ComponentId, b: ComponentId) -> bool {
        self.tin[a.index()] <= self.tin[b.index()] && self.tout[b.index()] <= self.tout[a.index()]
    }

    /// Component adjacent to `c` across virtual skeleton edge `e`.
    pub fn neighbor_across(&self, c: ComponentId, e: usize) -> Result<(ComponentId, usize)> {
        match self.component(c).edges.get(e).map(|se| se.kind) {
            Some(SkeletonEdgeKind::Virtual {
                twin_component,
                twin_edge,
            }) => Ok((twin_component, twin_edge)),
            Some(SkeletonEdgeKind::Real(_)) => Err(Error::NotVirtual {
                component: c.0,
                edge: e,
            }),
            None => Err(Error::Precondition(format!(
                "component {} has no skeleton edge {e}",
                c.0
            ))),
        }
    }

    /// Skeleton edge of `c` on the tree path from `c` to `d` (`d != c`).
    pub fn toward(&self, c: ComponentId, d: ComponentId) -> Option<usize> {
        if c == d {
            return None;
        }
        if self.is_ancestor(c, d) {
            let kids = &self.children[c.index()];
            let td = self.tin[d.index()];
            let pos = kids.partition_point(|&(_, k)| self.tin[k.index()] <= td);
            Some(kids[pos - 1].0)
        } else {
            Some(self.up_edge[c.index()])
        }
    }

    /// r_C(x).
    pub fn representative(&self, c: ComponentId, x: ElementRef) -> Result<Representative> {
        self.graph.check_element(x)?;
        let home = match x {
            ElementRef::Vertex(v) => {
                if self.component(c).contains_vertex(v) {
                    return Ok(Representative::Real(x));
                }
                self.top[v.index()].ok_or(Error::UnknownVertex(v))?
            }
            ElementRef::Edge(e) => {
                let (h, _) = self.edge_home(e).ok_or(Error::UnknownEdge(e))?;
                if h == c {
                    return Ok(Representative::Real(x));
                }
                h
            }
        };
        let edge = self
            .toward(c, home)
            .ok_or_else(|| Error::Internal("representative toward itself".into()))?;
        Ok(Representative::Virtual {
            component: c,
            edge,
        })
    }

    /// Translates a representative in `c` to a skeleton vertex or edge index.
    pub fn skeleton_element(&self, c: ComponentId, r: Representative) -> Result<SkeletonElement> {
        match r {
            Representative::Real(ElementRef::Vertex(v)) => Ok(SkeletonElement::Vertex(v)),
            Representative::Real(ElementRef::Edge(e)) => match self.edge_home(e) {
                Some((h, i)) if h == c => Ok(SkeletonElement::Edge(i)),
                _ => internal("real edge outside its home component"),
            },
            Representative::Virtual { component, edge } if component == c => {
                Ok(SkeletonElement::Edge(edge))
            }
            Representative::Virtual { .. } => internal("representative of another component"),
        }
    }

    fn lca(&self, mut a: ComponentId, mut b: ComponentId) -> ComponentId {
        while self.depth[a.index()] > self.depth[b.index()] {
            a = self.parent[a.index()].expect("non-root has parent");
        }
        while self.depth[b.index()] > self.depth[a.index()] {
            b = self.parent[b.index()].expect("non-root has parent");
        }
        while a != b {
            a = self.parent[a.index()].expect("non-root has parent");
            b = self.parent[b.index()].expect("non-root has parent");
        }
        a
    }

    /// A component in which the representatives of the three elements are
    /// pairwise distinct. Starting from home components of the elements,
    /// this is the common component when homes coincide, the middle home
    /// when one lies on the path between the other two, and the tree median
    /// otherwise; all three cases are the median of the three homes.
    pub fn central_component(
        &self,
        x1: ElementRef,
        x2: ElementRef,
        x3: ElementRef,
    ) -> Result<ComponentId> {
        let xs = [x1, x2, x3];
        if x1 == x2 || x1 == x3 || x2 == x3 {
            return Err(Error::NonDistinctElements);
        }
        let h = [self.home(x1)?, self.home(x2)?, self.home(x3)?];
        let pairs = [
            self.lca(h[0], h[1]),
            self.lca(h[0], h[2]),
            self.lca(h[1], h[2]),
        ];
        let median = *pairs
            .iter()
            .max_by_key(|c| self.depth[c.index()])
            .expect("three candidates");
        if self.reps_distinct(median, &xs)? {
            return Ok(median);
        }
        // Should not happen; scan everything rather than give up.
        for c in 0..self.components.len() {
            let c = ComponentId(c as u32);
            if self.reps_distinct(c, &xs)? {
                return Ok(c);
            }
        }
        internal("no central component exists")
    }

    fn reps_distinct(&self, c: ComponentId, xs: &[ElementRef; 3]) -> Result<bool> {
        let r = [
            self.representative(c, xs[0])?,
            self.representative(c, xs[1])?,
            self.representative(c, xs[2])?,
        ];
        Ok(r[0] != r[1] && r[0] != r[2] && r[1] != r[2])
    }

    /// Components of B(C,e): the subtree hanging off `c` across virtual edge `e`.
    pub fn subtree_components(&self, c: ComponentId, e: usize) -> Result<Vec<ComponentId>> {
        let (d, _) = self.neighbor_across(c, e)?;
        if self.parent[d.index()] == Some(c) {
            let (lo, hi) = (self.tin[d.index()] as usize, self.tout[d.index()] as usize);
            Ok(self.order[lo..hi].to_vec())
        } else {
            let (lo, hi) = (self.tin[c.index()] as usize, self.tout[c.index()] as usize);
            Ok(self.order[..lo]
                .iter()
                .chain(&self.order[hi..])
                .copied()
                .collect())
        }
    }

    /// |V(C,e)|: number of vertices of G(C,e) other than the ends of `e`.
    pub fn split_vertex_count(&self, c: ComponentId, e: usize) -> Result<usize> {
        let (d, _) = self.neighbor_across(c, e)?;
        if self.parent[d.index()] == Some(c) {
            Ok(self.top_in_subtree[d.index()] as usize)
        } else {
            Ok(self.graph.vertex_count() - self.top_in_subtree[c.index()] as usize - 2)
        }
    }

    /// V(C,e): vertices of G(C,e) other than the ends of `e`, ascending.
    pub fn split_vertices(&self, c: ComponentId, e: usize) -> Result<Vec<VertexId>> {
        let comps = self.subtree_components(c, e)?;
        let (a, b) = self.component(c).edges[e].ends;
        let mut seen = vec![false; self.graph.vertex_universe()];
        seen[a.index()] = true;
        seen[b.index()] = true;
        let mut out = Vec::new();
        for d in comps {
            for &v in &self.component(d).vertices {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    out.push(v);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Real edges of G(C,e), ascending.
    pub fn split_edges(&self, c: ComponentId, e: usize) -> Result<Vec<EdgeId>> {
        let mut out = Vec::new();
        for d in self.subtree_components(c, e)? {
            out.extend(self.component(d).edges.iter().filter_map(|se| se.real()));
        }
        out.sort();
        Ok(out)
    }

    /// G(C,e) as a subgraph of the input graph (original ids).
    pub fn split_subgraph(&self, c: ComponentId, e: usize) -> Result<Graph> {
        let edges = self.split_edges(c, e)?;
        let g = self.graph.edge_subgraph(&edges)?;
        if crate::cheap_checks() {
            let (a, b) = self.component(c).edges[e].ends;
            let (closed, _, _) = g.add_edge(a, b)?;
            if !crate::connectivity::is_biconnected(&closed) {
                return internal("split subgraph plus its virtual edge is not biconnected");
            }
        }
        Ok(g)
    }

    /// A simple path between the ends of virtual edge `e` inside G(C,e) that
    /// contains `x`, oriented from `ends.0` to `ends.1`.
    pub fn path_through_in_split(&self, c: ComponentId, e: usize, x: ElementRef) -> Result<Path> {
        let g = self.split_subgraph(c, e)?;
        let (a, b) = self.component(c).edges[e].ends;
        path_through(&g, a, b, x)
    }

    /// Every 2-vertex cut that the tree exhibits: poles of P components,
    /// poles of structural edges, and non-adjacent vertex pairs of S cycles.
    pub fn separation_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = std::collections::BTreeSet::new();
        let norm = |a: VertexId, b: VertexId| if a < b { (a, b) } else { (b, a) };
        for c in &self.components {
            match c.kind {
                ComponentKind::P => {
                    out.insert(norm(c.vertices[0], c.vertices[1]));
                }
                ComponentKind::S => {
                    let cyc = c.cycle_order();
                    let n = cyc.len();
                    for i in 0..n {
                        for j in i + 2..n {
                            if i == 0 && j == n - 1 {
                                continue;
                            }
                            out.insert(norm(cyc[i], cyc[j]));
                        }
                    }
                }
                ComponentKind::R => {}
            }
        }
        for s in &self.structural {
            let (a, b) = self.component(s.a).edges[s.a_edge].ends;
            out.insert(norm(a, b));
        }
        out.into_iter().collect()
    }

    /// Merges every skeleton along its virtual edges: the virtual pairs
    /// cancel and the real edges that remain are returned sorted by id. For a
    /// correct decomposition this equals the edge list of `graph()`.
    pub fn merged_real_edges(&self) -> Vec<(EdgeId, VertexId, VertexId)> {
        let mut out: Vec<(EdgeId, VertexId, VertexId)> = self
            .components
            .iter()
            .flat_map(|c| c.edges.iter())
            .filter_map(|e| e.real().map(|id| (id, e.ends.0, e.ends.1)))
            .map(|(id, a, b)| if a < b { (id, a, b) } else { (id, b, a) })
            .collect();
        out.sort();
        out
    }

    /// Checks the structural invariants of the decomposition. The
    /// triconnectivity test of R skeletons is included when `deep` is set.
    pub fn check_invariants(&self, deep: bool) -> Result<()> {
        build::check_invariants(self, deep)
    }
}

/// A simple `a`–`b` path in `g` through `x`, where `g ∪ (a,b)` is
/// biconnected and `x` is neither `a` nor `b`.
pub(crate) fn path_through(g: &Graph, a: VertexId, b: VertexId, x: ElementRef) -> Result<Path> {
    use crate::connectivity::vertex_disjoint_paths;
    if !g.contains(x) {
        return Err(Error::OutsideSplit);
    }
    let vertices: Vec<VertexId> = match x {
        ElementRef::Vertex(w) => {
            if w == a || w == b {
                return Err(Error::Precondition(
                    "vertex coincides with an end of the virtual edge".into(),
                ));
            }
            let ps = vertex_disjoint_paths(g, &[w], &[a, b], 2)?
                .ok_or_else(|| Error::Internal("Menger paths to the poles missing".into()))?;
            let (pa, pb) = if ps[0].last() == a {
                (&ps[0], &ps[1])
            } else {
                (&ps[1], &ps[0])
            };
            let mut vs: Vec<VertexId> = pa.vertices.iter().rev().copied().collect();
            vs.extend_from_slice(&pb.vertices[1..]);
            vs
        }
        ElementRef::Edge(e) => {
            let (p, q) = g.endpoints(e).ok_or(Error::UnknownEdge(e))?;
            if (p == a && q == b) || (p == b && q == a) {
                vec![a, b]
            } else if p == a || q == a || p == b || q == b {
                // One end is a pole; continue from the other end to the
                // opposite pole while avoiding the first.
                let (pole, other) = if p == a || p == b { (p, q) } else { (q, p) };
                let target = if pole == a { b } else { a };
                let rest = g
                    .without_vertices(&[pole])
                    .bfs_path(other, target)
                    .ok_or_else(|| Error::Internal("no path to the opposite pole".into()))?;
                let mut vs = vec![pole];
                vs.extend_from_slice(&rest.vertices);
                if pole == b {
                    vs.reverse();
                }
                vs
            } else {
                let ps = vertex_disjoint_paths(g, &[p, q], &[a, b], 2)?
                    .ok_or_else(|| Error::Internal("Menger paths to the poles missing".into()))?;
                let (pa, pb) = if ps[0].last() == a {
                    (&ps[0], &ps[1])
                } else {
                    (&ps[1], &ps[0])
                };
                let mut vs: Vec<VertexId> = pa.vertices.iter().rev().copied().collect();
                vs.extend_from_slice(&pb.vertices);
                vs
            }
        }
    };
    let path = Path::from_vertices(g, &vertices)?;
    path.validate(g)?;
    if path.first() != a || path.last() != b || !path.contains(x) {
        return internal("path through split subgraph is malformed");
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shape(t: &SpqrTree) -> Vec<(ComponentKind, Vec<String>, usize)> {
        let g = t.graph();
        t.components()
            .iter()
            .map(|c| {
                let mut vs: Vec<String> = c.vertices.iter().map(|&v| g.display_label(v)).collect();
                vs.sort();
                (c.kind, vs, c.virtual_edges().count())
            })
            .collect()
    }

    fn names(xs: &[&str]) -> Vec<String> {
        let mut v: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn three_routes_has_seven_components() {
        use ComponentKind::*;
        let t = build_spqr(&fixtures::three_routes()).unwrap();
        t.check_invariants(true).unwrap();
        let got = shape(&t);
        let want = vec![
            (S, names(&["x", "w1", "w2", "w3", "t"]), 1),
            (P, names(&["x", "t"]), 3),
            (S, names(&["x", "t", "u2", "u1", "u3"]), 2),
            (S, names(&["x", "t", "w4"]), 1),
            (S, names(&["u6", "u2", "u5"]), 1),
            (P, names(&["u2", "u5"]), 2),
            (R, names(&["u2", "u5", "u4", "u1"]), 2),
        ];
        assert_eq!(got, want);
        assert_eq!(t.structural_edges().len(), 6);
    }

    #[test]
    fn small_shapes() {
        let k4 = build_spqr(&fixtures::complete(4)).unwrap();
        assert_eq!(k4.len(), 1);
        assert_eq!(k4.components()[0].kind, ComponentKind::R);
        let c5 = build_spqr(&fixtures::cycle(5)).unwrap();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5.components()[0].kind, ComponentKind::S);
        assert_eq!(c5.components()[0].cycle_order().len(), 5);
        let theta = build_spqr(&fixtures::theta()).unwrap();
        let kinds: Vec<ComponentKind> = theta.components().iter().map(|c| c.kind).collect();
        assert_eq!(kinds.iter().filter(|&&k| k == ComponentKind::P).count(), 1);
        assert_eq!(kinds.iter().filter(|&&k| k == ComponentKind::S).count(), 3);
        theta.check_invariants(true).unwrap();
    }

    #[test]
    fn rejects_non_biconnected_input() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(build_spqr(&path).unwrap_err(), Error::NotBiconnected);
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(build_spqr(&edge).unwrap_err(), Error::SingleEdge);
    }

    #[test]
    fn representatives_and_split_sizes() {
        let g = fixtures::three_routes();
        let t = build_spqr(&g).unwrap();
        let v = |n: &str| g.vertex_by_label(n).unwrap();
        let r = ComponentId(6);
        assert_eq!(t.component(r).kind, ComponentKind::R);
        match t.representative(r, ElementRef::Vertex(v("w2"))).unwrap() {
            Representative::Virtual { component, edge } => {
                assert_eq!(component, r);
                assert!(t.split_vertices(r, edge).unwrap().contains(&v("w2")));
                assert_eq!(
                    t.split_vertex_count(r, edge).unwrap(),
                    t.split_vertices(r, edge).unwrap().len()
                );
            }
            other => panic!("unexpected {other:?}"),
        }
        for c in t.components() {
            for e in c.virtual_edges() {
                let n = t.split_vertex_count(c.id, e).unwrap();
                assert_eq!(n, t.split_vertices(c.id, e).unwrap().len());
                assert!(n >= 1);
            }
        }
    }

    #[test]
    fn merged_edges_round_trip() {
        for g in [fixtures::three_routes(), fixtures::prism(), fixtures::theta(), fixtures::complete(5)] {
            let t = build_spqr(&g).unwrap();
            let mut want: Vec<(EdgeId, VertexId, VertexId)> = g
                .edges()
                .map(|(e, a, b)| if a < b { (e, a, b) } else { (e, b, a) })
                .collect();
            want.sort();
            assert_eq!(t.merged_real_edges(), want);
        }
    }

    #[test]
    fn exports_name_every_component() {
        let t = build_spqr(&fixtures::three_routes()).unwrap();
        let json: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(json["components"].as_array().unwrap().len(), 7);
        let dot = t.to_dot();
        assert_eq!(dot.matches("subgraph cluster_").count(), 7);
    }
}
