//! Decision procedures for cycle and path existence through given elements.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::connectivity::{find_blocks, BlockTree};
use crate::error::{Error, Result};
use crate::graph::{ElementRef, Graph, VertexId};
use crate::spqr::{
    build_spqr, Component, ComponentId, ComponentKind, SkeletonElement, SpqrTree,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// Some element is represented by a vertex of the central component.
    VertexRepresentative,
    /// The central component is a cycle.
    SNode,
    /// The central component is a bond and all three representatives are
    /// distinct parallel edges.
    PNodeAllEdges,
    /// The three representative edges share an end vertex.
    CommonEndpoint,
    /// The three representative edges form an edge cut of the skeleton.
    ThreeEdgeCut,
    /// Rigid central component with neither obstruction present.
    RNodeClear,
    /// No biconnected block contains all three elements.
    NotSameBlock,
}

impl Reason {
    pub fn answer(self) -> bool {
        !matches!(
            self,
            Reason::PNodeAllEdges | Reason::CommonEndpoint | Reason::ThreeEdgeCut | Reason::NotSameBlock
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentralInfo {
    pub component: ComponentId,
    pub kind: ComponentKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CepVerdict {
    pub answer: bool,
    pub reason: Reason,
    pub central: Option<CentralInfo>,
}

impl CepVerdict {
    fn new(reason: Reason, central: Option<CentralInfo>) -> Self {
        CepVerdict {
            answer: reason.answer(),
            reason,
            central,
        }
    }
}

/// Query engine over one connected graph. SPQR trees are built lazily per
/// block and cached.
pub struct Engine {
    graph: Graph,
    blocks: BlockTree,
    trees: Mutex<HashMap<usize, Arc<SpqrTree>>>,
}

impl Engine {
    pub fn new(graph: Graph) -> Result<Engine> {
        let blocks = find_blocks(&graph)?;
        Ok(Engine {
            graph,
            blocks,
            trees: Mutex::new(HashMap::new()),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn block_tree(&self) -> &BlockTree {
        &self.blocks
    }

    /// The SPQR tree of block `b` (which must not be a single edge).
    pub fn tree_for_block(&self, b: usize) -> Result<Arc<SpqrTree>> {
        if let Some(t) = self.trees.lock().expect("cache lock").get(&b) {
            return Ok(Arc::clone(t));
        }
        let block = self.blocks.block_graph(&self.graph, b)?;
        let tree = Arc::new(build_spqr(&block)?);
        self.trees
            .lock()
            .expect("cache lock")
            .entry(b)
            .or_insert_with(|| Arc::clone(&tree));
        Ok(tree)
    }

    /// Validates a triple and returns the SPQR tree of the non-trivial block
    /// containing all three elements, if there is one.
    pub fn locate(&self, xs: [ElementRef; 3]) -> Result<Option<Arc<SpqrTree>>> {
        for &x in &xs {
            self.graph.check_element(x)?;
        }
        if xs[0] == xs[1] || xs[0] == xs[2] || xs[1] == xs[2] {
            return Err(Error::NonDistinctElements);
        }
        match self.blocks.common_block(&xs) {
            Some(b) if !self.blocks.blocks[b].trivial => Ok(Some(self.tree_for_block(b)?)),
            _ => Ok(None),
        }
    }

    pub fn cep_decide(&self, x1: ElementRef, x2: ElementRef, x3: ElementRef) -> Result<CepVerdict> {
        match self.locate([x1, x2, x3])? {
            Some(tree) => decide_in_tree(&tree, x1, x2, x3),
            None => Ok(CepVerdict::new(Reason::NotSameBlock, None)),
        }
    }
}

/// Is there a simple cycle of `g` through `x1`, `x2` and `x3`?
pub fn cep_decide(g: &Graph, x1: ElementRef, x2: ElementRef, x3: ElementRef) -> Result<CepVerdict> {
    Engine::new(g.clone())?.cep_decide(x1, x2, x3)
}

/// Is there a simple `s`–`t` path of `g` through `w1` and `w2`? Answered as
/// the cycle question for `(s,t)`, `w1`, `w2` in `g ∪ (s,t)`.
pub fn pep_decide(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    w1: VertexId,
    w2: VertexId,
) -> Result<CepVerdict> {
    check_pep_vertices(g, s, t, w1, w2)?;
    let (gp, e, _) = g.add_edge(s, t)?;
    cep_decide(&gp, ElementRef::Edge(e), ElementRef::Vertex(w1), ElementRef::Vertex(w2))
}

pub(crate) fn check_pep_vertices(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    w1: VertexId,
    w2: VertexId,
) -> Result<()> {
    let vs = [s, t, w1, w2];
    for &v in &vs {
        g.check_vertex(v)?;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return Err(Error::NonDistinctElements);
            }
        }
    }
    Ok(())
}

/// Applies the central-component criterion on a prebuilt SPQR tree.
pub fn decide_in_tree(
    tree: &SpqrTree,
    x1: ElementRef,
    x2: ElementRef,
    x3: ElementRef,
) -> Result<CepVerdict> {
    let c = tree.central_component(x1, x2, x3)?;
    let comp = tree.component(c);
    let central = Some(CentralInfo {
        component: c,
        kind: comp.kind,
    });
    let reps = [
        tree.representative(c, x1)?,
        tree.representative(c, x2)?,
        tree.representative(c, x3)?,
    ];
    if reps.iter().any(|r| r.is_vertex()) {
        return Ok(CepVerdict::new(Reason::VertexRepresentative, central));
    }
    let reason = match comp.kind {
        ComponentKind::S => Reason::SNode,
        ComponentKind::P => Reason::PNodeAllEdges,
        ComponentKind::R => {
            let mut es = [0usize; 3];
            for (i, r) in reps.iter().enumerate() {
                match tree.skeleton_element(c, *r)? {
                    SkeletonElement::Edge(e) => es[i] = e,
                    SkeletonElement::Vertex(_) => {
                        return Err(Error::Internal("vertex representative slipped through".into()))
                    }
                }
            }
            if shares_common_endpoint(comp, es[0], es[1], es[2]) {
                Reason::CommonEndpoint
            } else if is_three_edge_cut(comp, es[0], es[1], es[2])? {
                Reason::ThreeEdgeCut
            } else {
                Reason::RNodeClear
            }
        }
    };
    Ok(CepVerdict::new(reason, central))
}

/// True when one vertex is an end of all three skeleton edges.
pub fn shares_common_endpoint(c: &Component, e1: usize, e2: usize, e3: usize) -> bool {
    let (a, b) = c.edges[e1].ends;
    [a, b]
        .iter()
        .any(|&v| c.edges[e2].touches(v) && c.edges[e3].touches(v))
}

/// True when deleting the three skeleton edges disconnects the skeleton of
/// the R component `c`.
pub fn is_three_edge_cut(c: &Component, e1: usize, e2: usize, e3: usize) -> Result<bool> {
    if c.kind != ComponentKind::R {
        return Err(Error::NotRComponent(c.id.0));
    }
    let k = c.vertices.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut groups = k;
    for (i, e) in c.edges.iter().enumerate() {
        if i == e1 || i == e2 || i == e3 {
            continue;
        }
        let a = find(&mut parent, c.local_index(e.ends.0).expect("skeleton vertex"));
        let b = find(&mut parent, c.local_index(e.ends.1).expect("skeleton vertex"));
        if a != b {
            parent[a] = b;
            groups -= 1;
        }
    }
    Ok(groups > 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::EdgeId;

    fn v(g: &Graph, l: &str) -> ElementRef {
        ElementRef::Vertex(g.vertex_by_label(l).unwrap())
    }

    fn e(g: &Graph, a: &str, b: &str) -> ElementRef {
        ElementRef::Edge(
            g.edge_between(g.vertex_by_label(a).unwrap(), g.vertex_by_label(b).unwrap())
                .unwrap(),
        )
    }

    #[test]
    fn three_routes_queries() {
        let g = fixtures::three_routes();
        let yes = cep_decide(&g, e(&g, "w4", "x"), v(&g, "u1"), v(&g, "u6")).unwrap();
        assert!(yes.answer);
        assert_eq!(yes.central.unwrap().kind, ComponentKind::R);
        let no = cep_decide(&g, e(&g, "w4", "x"), v(&g, "u1"), v(&g, "w2")).unwrap();
        assert!(!no.answer);
        assert_eq!(no.reason, Reason::PNodeAllEdges);
        assert_eq!(no.central.unwrap().kind, ComponentKind::P);
        let no2 = cep_decide(&g, e(&g, "u2", "u4"), v(&g, "w4"), v(&g, "u6")).unwrap();
        assert!(!no2.answer);
    }

    #[test]
    fn prism_rungs_form_a_cut() {
        let g = fixtures::prism();
        let r = cep_decide(&g, e(&g, "a1", "b1"), e(&g, "a2", "b2"), e(&g, "a3", "b3")).unwrap();
        assert_eq!(r.reason, Reason::ThreeEdgeCut);
        assert!(!r.answer);
    }

    #[test]
    fn k4_triangle_and_star() {
        let g = fixtures::complete(4);
        let tri = cep_decide(&g, e(&g, "v0", "v1"), e(&g, "v1", "v2"), e(&g, "v0", "v2")).unwrap();
        assert_eq!(tri.reason, Reason::RNodeClear);
        let star = cep_decide(&g, e(&g, "v0", "v1"), e(&g, "v0", "v2"), e(&g, "v0", "v3")).unwrap();
        assert_eq!(star.reason, Reason::CommonEndpoint);
        let tree = crate::spqr::build_spqr(&g).unwrap();
        let c = &tree.components()[0];
        assert!(is_three_edge_cut(c, 0, 1, 2).unwrap());
    }

    #[test]
    fn separate_blocks_answer_false() {
        let g = crate::graph::parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c").unwrap();
        let r = cep_decide(&g, v(&g, "a"), v(&g, "b"), v(&g, "d")).unwrap();
        assert_eq!(r.reason, Reason::NotSameBlock);
        assert!(r.central.is_none());
    }

    #[test]
    fn invalid_triples_are_rejected() {
        let g = fixtures::complete(4);
        assert_eq!(
            cep_decide(&g, v(&g, "v0"), v(&g, "v0"), v(&g, "v1")).unwrap_err(),
            Error::NonDistinctElements
        );
        assert!(matches!(
            cep_decide(&g, v(&g, "v0"), v(&g, "v1"), ElementRef::Edge(EdgeId(99))),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn pep_on_three_routes() {
        let g = fixtures::three_routes();
        let id = |l: &str| g.vertex_by_label(l).unwrap();
        assert!(pep_decide(&g, id("w4"), id("x"), id("u1"), id("u6")).unwrap().answer);
        assert!(!pep_decide(&g, id("w4"), id("x"), id("u1"), id("w2")).unwrap().answer);
        let sq = fixtures::square();
        let s = |l: &str| sq.vertex_by_label(l).unwrap();
        assert!(!pep_decide(&sq, s("s"), s("t"), s("a"), s("b")).unwrap().answer);
    }
}
