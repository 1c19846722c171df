//! Construction by repeated splitting at separation pairs.
//!
//! A piece (initially the whole graph) is split at the first qualifying pair
//! `{a, b}` in vertex-rank order. Pairs are discovered by removing `a` and
//! looking for articulation vertices `b` of the remainder. A pair qualifies
//! for the parallel split when it leaves at least three parts or when `(a,b)`
//! is an edge of the piece, and for the binary split when it leaves exactly
//! two parts one of which, together with `a` and `b`, is biconnected.
//! Cycles become S components and pieces without a qualifying pair become R.
//!
//! A child piece never contains a qualifying pair whose first vertex ranks
//! below the pair its parent was split at, so children resume the scan there.

use std::collections::VecDeque;

use super::{
    Component, ComponentId, ComponentKind, SkeletonEdge, SkeletonEdgeKind, SpqrTree,
    StructuralEdge,
};
use crate::connectivity::bcc::{Bcc, Csr, NONE};
use crate::connectivity::{is_biconnected, is_k_connected};
use crate::error::{internal, Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Order in which candidate separation pairs are tried. The resulting tree
/// does not depend on it; the choice exists to test exactly that.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SplitOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Real(EdgeId),
    Virtual(u32),
}

#[derive(Clone, Copy, Debug)]
struct PEdge {
    u: u32,
    v: u32,
    slot: Slot,
}

struct Piece {
    edges: Vec<PEdge>,
    cursor: u32,
}

struct RawComponent {
    kind: ComponentKind,
    edges: Vec<PEdge>,
}

enum Split {
    Parallel { a: usize, b: usize },
    Binary { a: usize, b: usize, side: Vec<bool> },
}

pub fn build_spqr(g: &Graph) -> Result<SpqrTree> {
    build_spqr_with_order(g, SplitOrder::Ascending)
}

pub fn build_spqr_with_order(g: &Graph, order: SplitOrder) -> Result<SpqrTree> {
    if g.edge_count() == 1 && g.vertex_count() == 2 {
        return Err(Error::SingleEdge);
    }
    if !is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    let universe = g.vertex_universe();
    let rank: Vec<u32> = (0..universe as u32)
        .map(|i| match order {
            SplitOrder::Ascending => i,
            SplitOrder::Descending => universe as u32 - 1 - i,
        })
        .collect();
    let mut builder = Builder {
        rank,
        local_of: vec![NONE; universe],
        next_virtual: 0,
        bcc: Bcc::default(),
        side_bcc: Bcc::default(),
        raw: Vec::new(),
    };
    let edges = g
        .edges()
        .map(|(e, u, v)| PEdge {
            u: u.0,
            v: v.0,
            slot: Slot::Real(e),
        })
        .collect();
    let mut work = vec![Piece { edges, cursor: 0 }];
    while let Some(piece) = work.pop() {
        builder.process(piece, &mut work)?;
    }
    let tree = assemble(g.clone(), builder.raw, builder.next_virtual)?;
    if crate::cheap_checks() {
        check_invariants(&tree, crate::debug_checks())?;
    }
    Ok(tree)
}

struct Builder {
    rank: Vec<u32>,
    local_of: Vec<u32>,
    next_virtual: u32,
    bcc: Bcc,
    side_bcc: Bcc,
    raw: Vec<RawComponent>,
}

impl Builder {
    fn process(&mut self, piece: Piece, work: &mut Vec<Piece>) -> Result<()> {
        let mut verts: Vec<u32> = Vec::with_capacity(piece.edges.len() + 1);
        for e in &piece.edges {
            for v in [e.u, e.v] {
                if self.local_of[v as usize] == NONE {
                    self.local_of[v as usize] = 0;
                    verts.push(v);
                }
            }
        }
        verts.sort_unstable_by_key(|&v| self.rank[v as usize]);
        for (i, &v) in verts.iter().enumerate() {
            self.local_of[v as usize] = i as u32;
        }
        let n = verts.len();
        let pairs: Vec<(u32, u32)> = piece
            .edges
            .iter()
            .map(|e| (self.local_of[e.u as usize], self.local_of[e.v as usize]))
            .collect();
        let csr = Csr::new(n, &pairs);

        let result = if n == pairs.len() && (0..n).all(|v| csr.degree(v) == 2) {
            self.raw.push(RawComponent {
                kind: ComponentKind::S,
                edges: piece.edges,
            });
            Ok(())
        } else {
            let start = verts.partition_point(|&v| self.rank[v as usize] < piece.cursor);
            match self.find_split(&csr, &pairs, start) {
                Some(split) => {
                    self.apply(split, &piece.edges, &pairs, &csr, &verts, work);
                    Ok(())
                }
                None => {
                    if n < 4 {
                        internal("rigid piece with fewer than four vertices")
                    } else {
                        self.raw.push(RawComponent {
                            kind: ComponentKind::R,
                            edges: piece.edges,
                        });
                        Ok(())
                    }
                }
            }
        };
        for &v in &verts {
            self.local_of[v as usize] = NONE;
        }
        result
    }

    fn find_split(&mut self, csr: &Csr, pairs: &[(u32, u32)], start: usize) -> Option<Split> {
        let n = csr.n();
        let mut prefix = vec![0u32; n + 1];
        let mut is_nbr = vec![false; n];
        for a in start..n {
            self.bcc.run(csr, Some(a));
            for i in csr.range(a) {
                is_nbr[csr.nbr(i)] = true;
            }
            // prefix[k]: neighbours of a among the first k discovered vertices.
            prefix[0] = 0;
            for (k, &v) in self.bcc.order.iter().enumerate() {
                prefix[k + 1] = prefix[k] + is_nbr[v as usize] as u32;
            }
            let found = self.scan_partners(csr, pairs, a, &prefix);
            for i in csr.range(a) {
                is_nbr[csr.nbr(i)] = false;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn scan_partners(
        &mut self,
        csr: &Csr,
        pairs: &[(u32, u32)],
        a: usize,
        prefix: &[u32],
    ) -> Option<Split> {
        let n = csr.n();
        let total_a = csr.degree(a) as u32;
        for b in a + 1..n {
            if !self.bcc.is_articulation(b) {
                continue;
            }
            if self.bcc.block_count[b] >= 3 || csr.has_edge(a, b) {
                return Some(Split::Parallel { a, b });
            }
            // Exactly two parts. Describe one of them as a DFS subtree
            // interval [lo, hi) of discovery times; the other is the rest.
            let bcc = &self.bcc;
            let mut child = NONE;
            for i in csr.range(b) {
                let w = csr.nbr(i);
                if w != a
                    && bcc.parent[w] == b as u32
                    && bcc.low[w] >= bcc.disc[b]
                {
                    child = w as u32;
                    break;
                }
            }
            if child == NONE {
                continue;
            }
            let (lo, hi) = (
                bcc.disc[child as usize],
                bcc.sub_end[child as usize],
            );
            let a_in = prefix[hi as usize] - prefix[lo as usize];
            let a_out = total_a - a_in;
            let mut b_in = 0;
            let mut b_out = 0;
            for i in csr.range(b) {
                let w = csr.nbr(i);
                if w == a {
                    continue;
                }
                let d = bcc.disc[w];
                if d >= lo && d < hi {
                    b_in += 1;
                } else {
                    b_out += 1;
                }
            }
            for inside in [true, false] {
                let (ac, bc) = if inside { (a_in, b_in) } else { (a_out, b_out) };
                if ac < 2 || bc < 2 {
                    continue;
                }
                let side: Vec<bool> = (0..n)
                    .map(|v| {
                        if v == a || v == b {
                            return false;
                        }
                        let d = self.bcc.disc[v];
                        (d >= lo && d < hi) == inside
                    })
                    .collect();
                if self.side_biconnected(csr, pairs, a, b, &side) {
                    return Some(Split::Binary { a, b, side });
                }
            }
        }
        None
    }

    fn side_biconnected(
        &mut self,
        csr: &Csr,
        pairs: &[(u32, u32)],
        a: usize,
        b: usize,
        side: &[bool],
    ) -> bool {
        let n = csr.n();
        let mut idx = vec![NONE; n];
        let mut k = 0u32;
        for v in 0..n {
            if side[v] || v == a || v == b {
                idx[v] = k;
                k += 1;
            }
        }
        let sub: Vec<(u32, u32)> = pairs
            .iter()
            .filter(|&&(u, v)| idx[u as usize] != NONE && idx[v as usize] != NONE)
            .filter(|&&(u, v)| !((u as usize == a && v as usize == b) || (u as usize == b && v as usize == a)))
            .map(|&(u, v)| (idx[u as usize], idx[v as usize]))
            .collect();
        let side_csr = Csr::new(k as usize, &sub);
        self.side_bcc.run(&side_csr, None);
        self.side_bcc.biconnected(k as usize)
    }

    fn new_virtual(&mut self) -> u32 {
        self.next_virtual += 1;
        self.next_virtual - 1
    }

    fn apply(
        &mut self,
        split: Split,
        edges: &[PEdge],
        pairs: &[(u32, u32)],
        csr: &Csr,
        verts: &[u32],
        work: &mut Vec<Piece>,
    ) {
        let n = csr.n();
        let (a, b) = match &split {
            Split::Parallel { a, b } | Split::Binary { a, b, .. } => (*a, *b),
        };
        let cursor = self.rank[verts[a] as usize];
        // Parts of the piece minus {a, b}, numbered by their lowest vertex.
        let part: Vec<u32> = match &split {
            Split::Binary { side, .. } => (0..n)
                .map(|v| {
                    if v == a || v == b {
                        NONE
                    } else if side[v] {
                        0
                    } else {
                        1
                    }
                })
                .collect(),
            Split::Parallel { .. } => components_without(csr, a, b),
        };
        let parts = part.iter().filter(|&&p| p != NONE).max().map_or(0, |&p| p + 1) as usize;
        let mut children: Vec<Vec<PEdge>> = vec![Vec::new(); parts];
        let mut pole_edge = None;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            if (u == a && v == b) || (u == b && v == a) {
                pole_edge = Some(edges[i]);
                continue;
            }
            let p = if part[u] != NONE { part[u] } else { part[v] };
            children[p as usize].push(edges[i]);
        }
        let (ga, gb) = (verts[a], verts[b]);
        let mut bond = Vec::new();
        if let Some(e) = pole_edge {
            bond.push(e);
        }
        match split {
            Split::Parallel { .. } => {
                for mut child in children {
                    let vid = self.new_virtual();
                    let ve = PEdge {
                        u: ga,
                        v: gb,
                        slot: Slot::Virtual(vid),
                    };
                    child.push(ve);
                    bond.push(ve);
                    work.push(Piece {
                        edges: child,
                        cursor,
                    });
                }
                self.raw.push(RawComponent {
                    kind: ComponentKind::P,
                    edges: bond,
                });
            }
            Split::Binary { .. } => {
                let vid = self.new_virtual();
                for mut child in children {
                    child.push(PEdge {
                        u: ga,
                        v: gb,
                        slot: Slot::Virtual(vid),
                    });
                    work.push(Piece {
                        edges: child,
                        cursor,
                    });
                }
            }
        }
    }
}

/// Connected components of the piece after deleting `a` and `b`, numbered in
/// order of their smallest vertex. Deleted vertices get `NONE`.
fn components_without(csr: &Csr, a: usize, b: usize) -> Vec<u32> {
    let n = csr.n();
    let mut part = vec![NONE; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if s == a || s == b || part[s] != NONE {
            continue;
        }
        part[s] = next;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for i in csr.range(v) {
                let w = csr.nbr(i);
                if w != a && w != b && part[w] == NONE {
                    part[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    part
}

fn norm(u: u32, v: u32) -> (VertexId, VertexId) {
    if u < v {
        (VertexId(u), VertexId(v))
    } else {
        (VertexId(v), VertexId(u))
    }
}

/// Turns raw components into the canonical tree: components sorted by
/// vertex set, S edges in cycle order from the smallest vertex, P edges real
/// first, R edges sorted by endpoints; then derives twins and the rooted view.
fn assemble(graph: Graph, raw: Vec<RawComponent>, virtuals: u32) -> Result<SpqrTree> {
    let mut keyed: Vec<(Vec<VertexId>, RawComponent)> = raw
        .into_iter()
        .map(|rc| {
            let mut vs: Vec<VertexId> = rc
                .edges
                .iter()
                .flat_map(|e| [VertexId(e.u), VertexId(e.v)])
                .collect();
            vs.sort();
            vs.dedup();
            (vs, rc)
        })
        .collect();
    keyed.sort_by(|x, y| {
        (&x.0, x.1.kind, x.1.edges.len()).cmp(&(&y.0, y.1.kind, y.1.edges.len()))
    });

    // Owner components of every virtual edge id.
    let mut owners: Vec<Vec<u32>> = vec![Vec::new(); virtuals as usize];
    for (ci, (_, rc)) in keyed.iter().enumerate() {
        for e in &rc.edges {
            if let Slot::Virtual(vid) = e.slot {
                owners[vid as usize].push(ci as u32);
            }
        }
    }
    for (vid, o) in owners.iter().enumerate() {
        if o.len() != 2 {
            return internal(format!("virtual edge {vid} has {} copies", o.len()));
        }
    }
    let other_owner = |vid: u32, me: usize| -> u32 {
        let o = &owners[vid as usize];
        if o[0] as usize == me {
            o[1]
        } else {
            o[0]
        }
    };

    let mut components = Vec::with_capacity(keyed.len());
    let mut slots_by_comp: Vec<Vec<Slot>> = Vec::with_capacity(keyed.len());
    for (ci, (vertices, rc)) in keyed.into_iter().enumerate() {
        let mut ordered: Vec<(VertexId, VertexId, Slot)> = match rc.kind {
            ComponentKind::S => cycle_edges(&vertices, &rc.edges)?,
            ComponentKind::P => {
                let (a, b) = norm(rc.edges[0].u, rc.edges[0].v);
                let mut es: Vec<Slot> = rc.edges.iter().map(|e| e.slot).collect();
                es.sort_by_key(|s| match *s {
                    Slot::Real(e) => (0, e.0),
                    Slot::Virtual(vid) => (1, other_owner(vid, ci)),
                });
                es.into_iter().map(|s| (a, b, s)).collect()
            }
            ComponentKind::R => {
                let mut es: Vec<(VertexId, VertexId, Slot)> = rc
                    .edges
                    .iter()
                    .map(|e| {
                        let (a, b) = norm(e.u, e.v);
                        (a, b, e.slot)
                    })
                    .collect();
                es.sort_by_key(|&(a, b, _)| (a, b));
                es
            }
        };
        slots_by_comp.push(ordered.iter().map(|x| x.2).collect());
        let edges = ordered
            .drain(..)
            .map(|(a, b, s)| SkeletonEdge {
                ends: (a, b),
                kind: match s {
                    Slot::Real(e) => SkeletonEdgeKind::Real(e),
                    // Patched below once every position is known.
                    Slot::Virtual(_) => SkeletonEdgeKind::Virtual {
                        twin_component: ComponentId(u32::MAX),
                        twin_edge: usize::MAX,
                    },
                },
            })
            .collect();
        components.push(Component {
            id: ComponentId(ci as u32),
            kind: rc.kind,
            vertices,
            edges,
        });
    }

    let mut positions: Vec<Vec<(ComponentId, usize)>> = vec![Vec::new(); virtuals as usize];
    let mut edge_home = vec![None; graph.edge_universe()];
    for (ci, slots) in slots_by_comp.iter().enumerate() {
        for (i, s) in slots.iter().enumerate() {
            match *s {
                Slot::Real(e) => edge_home[e.index()] = Some((ComponentId(ci as u32), i)),
                Slot::Virtual(vid) => positions[vid as usize].push((ComponentId(ci as u32), i)),
            }
        }
    }
    let mut structural = Vec::with_capacity(virtuals as usize);
    for pos in &positions {
        let (x, y) = (pos[0], pos[1]);
        components[x.0.index()].edges[x.1].kind = SkeletonEdgeKind::Virtual {
            twin_component: y.0,
            twin_edge: y.1,
        };
        components[y.0.index()].edges[y.1].kind = SkeletonEdgeKind::Virtual {
            twin_component: x.0,
            twin_edge: x.1,
        };
        let (p, q) = if x <= y { (x, y) } else { (y, x) };
        structural.push(StructuralEdge {
            a: p.0,
            a_edge: p.1,
            b: q.0,
            b_edge: q.1,
        });
    }
    structural.sort();

    let mut vertex_homes = vec![Vec::new(); graph.vertex_universe()];
    for c in &components {
        for &v in &c.vertices {
            vertex_homes[v.index()].push(c.id);
        }
    }

    let k = components.len();
    let mut tree = SpqrTree {
        graph,
        components,
        structural,
        edge_home,
        vertex_homes,
        parent: vec![None; k],
        up_edge: vec![usize::MAX; k],
        children: vec![Vec::new(); k],
        depth: vec![0; k],
        tin: vec![0; k],
        tout: vec![0; k],
        order: Vec::with_capacity(k),
        top: Vec::new(),
        top_in_subtree: vec![0; k],
    };
    root_tree(&mut tree)?;
    Ok(tree)
}

fn cycle_edges(vertices: &[VertexId], edges: &[PEdge]) -> Result<Vec<(VertexId, VertexId, Slot)>> {
    let n = vertices.len();
    let local = |v: u32| vertices.binary_search(&VertexId(v)).expect("vertex of cycle");
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        inc[local(e.u)].push(i);
        inc[local(e.v)].push(i);
    }
    if inc.iter().any(|l| l.len() != 2) || edges.len() != n {
        return internal("S component is not a cycle");
    }
    let other = |i: usize, v: usize| {
        let e = &edges[i];
        if local(e.u) == v {
            local(e.v)
        } else {
            local(e.u)
        }
    };
    // Leave vertex 0 toward its smaller neighbour.
    let (e0, e1) = (inc[0][0], inc[0][1]);
    let mut edge = if other(e0, 0) < other(e1, 0) { e0 } else { e1 };
    let mut cur = 0usize;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let nxt = other(edge, cur);
        out.push((vertices[cur], vertices[nxt], edges[edge].slot));
        let next_edge = if inc[nxt][0] == edge { inc[nxt][1] } else { inc[nxt][0] };
        cur = nxt;
        edge = next_edge;
    }
    if cur != 0 {
        return internal("S component is not a single cycle");
    }
    Ok(out)
}

fn root_tree(t: &mut SpqrTree) -> Result<()> {
    let k = t.components.len();
    if k == 0 {
        return internal("empty decomposition");
    }
    let mut visited = vec![false; k];
    let mut time = 0u32;
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    visited[0] = true;
    t.tin[0] = 0;
    t.order.push(ComponentId(0));
    time += 1;
    while let Some(top) = stack.last_mut() {
        let (c, i) = *top;
        if i < t.components[c].edges.len() {
            top.1 += 1;
            if let SkeletonEdgeKind::Virtual {
                twin_component,
                twin_edge,
            } = t.components[c].edges[i].kind
            {
                let d = twin_component.index();
                if t.parent[c] == Some(twin_component) && t.up_edge[c] == i {
                    continue;
                }
                if visited[d] {
                    return internal("structural edges contain a cycle");
                }
                visited[d] = true;
                t.parent[d] = Some(ComponentId(c as u32));
                t.up_edge[d] = twin_edge;
                t.children[c].push((i, twin_component));
                t.depth[d] = t.depth[c] + 1;
                t.tin[d] = time;
                time += 1;
                t.order.push(twin_component);
                stack.push((d, 0));
            }
        } else {
            t.tout[c] = time;
            stack.pop();
        }
    }
    if visited.iter().any(|&v| !v) {
        return internal("structural edges do not connect all components");
    }
    t.top = vec![None; t.graph.vertex_universe()];
    for v in t.graph.vertices() {
        t.top[v.index()] = t.vertex_homes[v.index()]
            .iter()
            .copied()
            .min_by_key(|c| t.depth[c.index()]);
    }
    let mut own = vec![0u32; k];
    for top in t.top.iter().flatten() {
        own[top.index()] += 1;
    }
    for &c in t.order.iter().rev() {
        let ci = c.index();
        t.top_in_subtree[ci] += own[ci];
        if let Some(p) = t.parent[ci] {
            t.top_in_subtree[p.index()] += t.top_in_subtree[ci];
        }
    }
    Ok(())
}

pub(super) fn check_invariants(t: &SpqrTree, deep: bool) -> Result<()> {
    let g = &t.graph;
    // Twins point at each other and join the same poles.
    for c in &t.components {
        for (i, e) in c.edges.iter().enumerate() {
            if let SkeletonEdgeKind::Virtual {
                twin_component,
                twin_edge,
            } = e.kind
            {
                let tw = &t.component(twin_component).edges[twin_edge];
                let back = SkeletonEdgeKind::Virtual {
                    twin_component: c.id,
                    twin_edge: i,
                };
                if tw.kind != back || norm(tw.ends.0 .0, tw.ends.1 .0) != norm(e.ends.0 .0, e.ends.1 .0) {
                    return internal(format!("broken twin link at component {}", c.id.0));
                }
                let other = t.component(twin_component).kind;
                if other == c.kind && c.kind != ComponentKind::R {
                    return internal(format!("adjacent {} components", c.kind));
                }
            }
        }
        match c.kind {
            ComponentKind::S => {
                if c.vertices.len() < 3 || c.edges.len() != c.vertices.len() {
                    return internal("S component is not a cycle");
                }
                for w in 0..c.edges.len() {
                    let nxt = (w + 1) % c.edges.len();
                    if c.edges[w].ends.1 != c.edges[nxt].ends.0 {
                        return internal("S edges out of cycle order");
                    }
                }
            }
            ComponentKind::P => {
                let reals = c.edges.iter().filter(|e| !e.is_virtual()).count();
                if c.vertices.len() != 2 || c.edges.len() < 3 || reals > 1 {
                    return internal("malformed P component");
                }
            }
            ComponentKind::R => {
                if c.vertices.len() < 4 {
                    return internal("R component with fewer than four vertices");
                }
                if deep {
                    let sk = c.skeleton_graph()?;
                    if !is_k_connected(&sk, 3)? {
                        return internal("R skeleton is not triconnected");
                    }
                }
            }
        }
    }
    // Tree: k - 1 structural edges and connected (checked when rooting).
    if t.structural.len() + 1 != t.components.len() {
        return internal("structural edges do not form a tree");
    }
    // Reconstruction: every edge of g appears exactly once as a real edge,
    // with the same endpoints.
    let mut seen = vec![0u32; g.edge_universe()];
    for c in &t.components {
        for e in &c.edges {
            if let Some(id) = e.real() {
                let (u, v) = g.endpoints(id).ok_or(Error::UnknownEdge(id))?;
                if norm(u.0, v.0) != norm(e.ends.0 .0, e.ends.1 .0) {
                    return internal("real edge with wrong endpoints");
                }
                seen[id.index()] += 1;
            }
        }
    }
    for (id, _, _) in g.edges() {
        if seen[id.index()] != 1 {
            return internal(format!("edge {} appears {} times", id.0, seen[id.index()]));
        }
    }
    if seen.iter().sum::<u32>() as usize != g.edge_count() {
        return internal("decomposition has extra real edges");
    }
    Ok(())
}
