use serde::Serialize;

use super::bcc::{Bcc, Csr};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, ElementRef, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub id: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// A single edge (bridge) rather than a 2-connected subgraph.
    pub trivial: bool,
}

/// Blocks and articulation vertices of a connected graph.
#[derive(Clone, Debug)]
pub struct BlockTree {
    pub blocks: Vec<Block>,
    pub articulation_vertices: Vec<VertexId>,
    vertex_blocks: Vec<Vec<usize>>,
    edge_block: Vec<Option<usize>>,
}

impl BlockTree {
    /// Blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: VertexId) -> &[usize] {
        self.vertex_blocks
            .get(v.index())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn block_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.edge_block.get(e.index()).copied().flatten()
    }

    pub fn is_articulation(&self, v: VertexId) -> bool {
        self.blocks_of(v).len() >= 2
    }

    /// Incidences `(block, articulation vertex)`: the edges of the block tree.
    pub fn tree_edges(&self) -> Vec<(usize, VertexId)> {
        let mut out = Vec::new();
        for &a in &self.articulation_vertices {
            for &b in self.blocks_of(a) {
                out.push((b, a));
            }
        }
        out.sort();
        out
    }

    /// The unique block containing every listed element, if any.
    pub fn common_block(&self, elements: &[ElementRef]) -> Option<usize> {
        let mut candidates: Option<Vec<usize>> = None;
        for &x in elements {
            let here: Vec<usize> = match x {
                ElementRef::Vertex(v) => self.blocks_of(v).to_vec(),
                ElementRef::Edge(e) => self.block_of_edge(e).into_iter().collect(),
            };
            candidates = Some(match candidates {
                None => here,
                Some(prev) => prev.into_iter().filter(|b| here.contains(b)).collect(),
            });
        }
        candidates.and_then(|c| c.first().copied())
    }

    /// Subgraph formed by block `b`, with the original ids.
    pub fn block_graph(&self, g: &Graph, b: usize) -> Result<Graph> {
        g.edge_subgraph(&self.blocks[b].edges)
    }
}

/// Computes the blocks of a connected graph. Blocks are ordered by their
/// smallest edge id.
pub fn find_blocks(g: &Graph) -> Result<BlockTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut dense = vec![u32::MAX; g.vertex_universe()];
    for (i, v) in verts.iter().enumerate() {
        dense[v.index()] = i as u32;
    }
    let edge_ids: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
    let pairs: Vec<(u32, u32)> = g
        .edges()
        .map(|(_, u, v)| (dense[u.index()], dense[v.index()]))
        .collect();
    let csr = Csr::new(verts.len(), &pairs);
    let mut bcc = Bcc::default();
    bcc.run(&csr, None);

    let mut raw: Vec<Vec<EdgeId>> = vec![Vec::new(); bcc.blocks];
    for (i, &b) in bcc.block_of_edge.iter().enumerate() {
        raw[b as usize].push(edge_ids[i]);
    }
    raw.sort_by_key(|es| es[0]);

    let mut vertex_blocks = vec![Vec::new(); g.vertex_universe()];
    let mut edge_block = vec![None; g.edge_universe()];
    let mut blocks = Vec::with_capacity(raw.len());
    for (id, edges) in raw.into_iter().enumerate() {
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        for &e in &edges {
            let (u, v) = g.endpoints(e).expect("edge present");
            vertices.push(u);
            vertices.push(v);
            edge_block[e.index()] = Some(id);
        }
        vertices.sort();
        vertices.dedup();
        for &v in &vertices {
            vertex_blocks[v.index()].push(id);
        }
        let trivial = edges.len() == 1;
        blocks.push(Block {
            id,
            vertices,
            edges,
            trivial,
        });
    }
    let articulation_vertices = verts
        .iter()
        .copied()
        .filter(|v| vertex_blocks[v.index()].len() >= 2)
        .collect();
    Ok(BlockTree {
        blocks,
        articulation_vertices,
        vertex_blocks,
        edge_block,
    })
}

/// Biconnected in the sense that K2 qualifies: at least two vertices,
/// connected, no articulation vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.vertex_count() < 2 {
        return false;
    }
    match find_blocks(g) {
        Ok(bt) => bt.blocks.len() == 1,
        Err(_) => false,
    }
}

/// The block containing both `s` and `t`, or `None` if they share none.
pub fn reduce_to_common_block(g: &Graph, s: VertexId, t: VertexId) -> Result<Option<Graph>> {
    if s == t {
        return Err(Error::SameEndpoints);
    }
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    let bt = find_blocks(g)?;
    match bt.common_block(&[ElementRef::Vertex(s), ElementRef::Vertex(t)]) {
        Some(b) => Ok(Some(bt.block_graph(g, b)?)),
        None => Ok(None),
    }
}

/// Returns `g` when its block tree is a chain with `s` and `t` inside the two
/// end blocks (so that `g ∪ (s,t)` is biconnected), `None` otherwise.
pub fn pep_chain_reduction(g: &Graph, s: VertexId, t: VertexId) -> Result<Option<Graph>> {
    if s == t {
        return Err(Error::SameEndpoints);
    }
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    let bt = find_blocks(g)?;
    let k = bt.blocks.len();
    if k == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(Some(g.clone()));
    }
    // Chain: every articulation vertex joins exactly two blocks and every
    // block touches at most two articulation vertices.
    let mut art_per_block = vec![0usize; k];
    for &a in &bt.articulation_vertices {
        let bs = bt.blocks_of(a);
        if bs.len() != 2 {
            return Ok(None);
        }
        for &b in bs {
            art_per_block[b] += 1;
        }
    }
    if art_per_block.iter().any(|&c| c > 2) {
        return Ok(None);
    }
    let ends: Vec<usize> = (0..k).filter(|&b| art_per_block[b] == 1).collect();
    let (sb, tb) = (bt.blocks_of(s), bt.blocks_of(t));
    if sb.len() != 1 || tb.len() != 1 {
        return Ok(None);
    }
    let (sb, tb) = (sb[0], tb[0]);
    if sb != tb && ends.contains(&sb) && ends.contains(&tb) {
        Ok(Some(g.clone()))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn vid(g: &Graph, l: &str) -> VertexId {
        g.vertex_by_label(l).unwrap()
    }

    #[test]
    fn cycle_is_one_block() {
        let g = parse_edge_list("a b\nb c\nc d\nd e\ne a").unwrap();
        let bt = find_blocks(&g).unwrap();
        assert_eq!(bt.blocks.len(), 1);
        assert!(bt.articulation_vertices.is_empty());
        assert!(is_biconnected(&g));
    }

    #[test]
    fn path_has_trivial_blocks() {
        let g = parse_edge_list("a b\nb c").unwrap();
        let bt = find_blocks(&g).unwrap();
        assert_eq!(bt.blocks.len(), 2);
        assert!(bt.blocks.iter().all(|b| b.trivial));
        assert_eq!(bt.articulation_vertices, vec![vid(&g, "b")]);
        assert_eq!(bt.tree_edges().len(), 2);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = parse_edge_list("a b\nc d").unwrap();
        assert_eq!(find_blocks(&g).unwrap_err(), Error::Disconnected);
        assert!(!is_biconnected(&g));
    }

    #[test]
    fn common_block_of_two_triangles() {
        let g = parse_edge_list("a b\nb c\nc a\na d\nd e\ne a").unwrap();
        assert!(reduce_to_common_block(&g, vid(&g, "b"), vid(&g, "d"))
            .unwrap()
            .is_none());
        let blk = reduce_to_common_block(&g, vid(&g, "b"), vid(&g, "a"))
            .unwrap()
            .unwrap();
        assert_eq!(blk.vertex_count(), 3);
        assert_eq!(
            reduce_to_common_block(&g, vid(&g, "a"), vid(&g, "a")).unwrap_err(),
            Error::SameEndpoints
        );
    }

    #[test]
    fn chain_reduction_cases() {
        let p = parse_edge_list("a b\nb c\nc d").unwrap();
        assert!(pep_chain_reduction(&p, vid(&p, "a"), vid(&p, "d"))
            .unwrap()
            .is_some());
        assert!(pep_chain_reduction(&p, vid(&p, "a"), vid(&p, "c"))
            .unwrap()
            .is_none());
        let star = parse_edge_list("c x\nc y\nc z").unwrap();
        assert!(pep_chain_reduction(&star, vid(&star, "x"), vid(&star, "y"))
            .unwrap()
            .is_none());
    }
}
