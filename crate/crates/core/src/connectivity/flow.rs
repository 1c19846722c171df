use std::collections::VecDeque;

use serde::Serialize;

use super::blocks::is_biconnected;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Path, VertexId};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FlowMode {
    /// Every non-terminal vertex becomes an in/out pair joined by a
    /// capacity-1 arc; edges become anti-parallel arcs of large capacity.
    VertexSplit,
    /// Every undirected edge becomes two anti-parallel capacity-1 arcs that
    /// act as each other's residual reverse.
    EdgeCapacity,
}

/// What a network arc stands for in the source graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcOrigin {
    Vertex(VertexId),
    Edge(EdgeId),
    Terminal,
    Residual,
}

/// Unit-capacity flow network with paired arcs: arc `a ^ 1` is the reverse
/// of arc `a`, and `flow[a ^ 1] == -flow[a]` at all times.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    mode: FlowMode,
    head: Vec<u32>,
    cap: Vec<i32>,
    flow: Vec<i32>,
    origin: Vec<ArcOrigin>,
    out: Vec<Vec<u32>>,
    node_vertex: Vec<Option<VertexId>>,
    node_in: Vec<u32>,
    node_out: Vec<u32>,
    edge_arcs: Vec<u32>,
    source: usize,
    sink: usize,
    value: usize,
}

impl FlowNetwork {
    fn empty(mode: FlowMode, universe: usize) -> Self {
        FlowNetwork {
            mode,
            head: Vec::new(),
            cap: Vec::new(),
            flow: Vec::new(),
            origin: Vec::new(),
            out: Vec::new(),
            node_vertex: Vec::new(),
            node_in: vec![NONE; universe],
            node_out: vec![NONE; universe],
            edge_arcs: Vec::new(),
            source: 0,
            sink: 0,
            value: 0,
        }
    }

    fn add_node(&mut self, v: Option<VertexId>) -> u32 {
        self.out.push(Vec::new());
        self.node_vertex.push(v);
        (self.out.len() - 1) as u32
    }

    fn add_pair(&mut self, from: u32, to: u32, cap: i32, rev_cap: i32, origin: ArcOrigin) {
        let a = self.head.len() as u32;
        self.head.push(to);
        self.cap.push(cap);
        self.flow.push(0);
        self.origin.push(origin);
        self.out[from as usize].push(a);
        self.head.push(from);
        self.cap.push(rev_cap);
        self.flow.push(0);
        self.origin.push(if rev_cap > 0 { origin } else { ArcOrigin::Residual });
        self.out[to as usize].push(a + 1);
    }

    /// Vertex-split network from `sources` to `sinks`. A singleton side uses
    /// that vertex itself (unsplit) as terminal; a larger side gets an
    /// artificial terminal joined to each member by a capacity-1 arc.
    pub fn vertex_split(g: &Graph, sources: &[VertexId], sinks: &[VertexId]) -> Result<Self> {
        if sources.is_empty() || sinks.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in sources.iter().chain(sinks) {
            g.check_vertex(v)?;
        }
        let single_src = (sources.len() == 1).then(|| sources[0]);
        let single_snk = (sinks.len() == 1).then(|| sinks[0]);
        if let Some(s) = single_src {
            if sinks.contains(&s) {
                return Err(Error::Precondition("source vertex lies in the sink side".into()));
            }
        }
        if let Some(t) = single_snk {
            if sources.contains(&t) {
                return Err(Error::Precondition("sink vertex lies in the source side".into()));
            }
        }
        let mut net = FlowNetwork::empty(FlowMode::VertexSplit, g.vertex_universe());
        let big = g.vertex_count().max(1) as i32;
        for v in g.vertices() {
            if Some(v) == single_src || Some(v) == single_snk {
                let x = net.add_node(Some(v));
                net.node_in[v.index()] = x;
                net.node_out[v.index()] = x;
            } else {
                let i = net.add_node(Some(v));
                let o = net.add_node(Some(v));
                net.node_in[v.index()] = i;
                net.node_out[v.index()] = o;
                net.add_pair(i, o, 1, 0, ArcOrigin::Vertex(v));
            }
        }
        net.source = match single_src {
            Some(s) => net.node_in[s.index()] as usize,
            None => {
                let s = net.add_node(None);
                for &a in sources {
                    let target = net.node_in[a.index()];
                    net.add_pair(s, target, 1, 0, ArcOrigin::Terminal);
                }
                s as usize
            }
        };
        net.sink = match single_snk {
            Some(t) => net.node_in[t.index()] as usize,
            None => {
                let t = net.add_node(None);
                for &b in sinks {
                    let from = net.node_out[b.index()];
                    net.add_pair(from, t, 1, 0, ArcOrigin::Terminal);
                }
                t as usize
            }
        };
        for u in g.vertices() {
            for &(v, e) in g.neighbors(u) {
                let from = net.node_out[u.index()];
                let to = net.node_in[v.index()];
                // A direct source-sink edge is a single path, not |V| of them.
                let cap = if from as usize == net.source && to as usize == net.sink {
                    1
                } else {
                    big
                };
                net.add_pair(from, to, cap, 0, ArcOrigin::Edge(e));
            }
        }
        Ok(net)
    }

    /// Edge-capacity network between two vertices.
    pub fn edge_capacity(g: &Graph, s: VertexId, t: VertexId) -> Result<Self> {
        g.check_vertex(s)?;
        g.check_vertex(t)?;
        if s == t {
            return Err(Error::SameEndpoints);
        }
        let mut net = FlowNetwork::empty(FlowMode::EdgeCapacity, g.vertex_universe());
        for v in g.vertices() {
            let x = net.add_node(Some(v));
            net.node_in[v.index()] = x;
            net.node_out[v.index()] = x;
        }
        net.edge_arcs = vec![NONE; g.edge_universe()];
        for (e, u, v) in g.edges() {
            let (a, b) = (net.node_in[u.index()], net.node_in[v.index()]);
            net.edge_arcs[e.index()] = net.head.len() as u32;
            net.add_pair(a, b, 1, 1, ArcOrigin::Edge(e));
        }
        net.source = net.node_in[s.index()] as usize;
        net.sink = net.node_in[t.index()] as usize;
        Ok(net)
    }

    pub fn mode(&self) -> FlowMode {
        self.mode
    }

    pub fn value(&self) -> usize {
        self.value
    }

    pub fn node_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.head.len()
    }

    pub fn arc_origin(&self, a: usize) -> ArcOrigin {
        self.origin[a]
    }

    pub fn arc_flow(&self, a: usize) -> i32 {
        self.flow[a]
    }

    /// Net flow along edge `e` from `from` to its other endpoint
    /// (edge-capacity mode only).
    pub fn edge_flow(&self, g: &Graph, e: EdgeId, from: VertexId) -> i32 {
        let Some((u, _)) = g.endpoints(e) else {
            return 0;
        };
        let Some(a) = self.edge_arc(e) else {
            return 0;
        };
        if u == from {
            self.flow[a]
        } else {
            -self.flow[a]
        }
    }

    fn edge_arc(&self, e: EdgeId) -> Option<usize> {
        match self.edge_arcs.get(e.index()) {
            Some(&a) if a != NONE => Some(a as usize),
            _ => None,
        }
    }

    #[inline]
    fn residual(&self, a: usize) -> i32 {
        self.cap[a] - self.flow[a]
    }

    /// Breadth-first labelling in the residual network; returns the arc
    /// through which each node was reached.
    fn label(&self) -> Vec<u32> {
        let mut pred = vec![NONE; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::new();
        seen[self.source] = true;
        queue.push_back(self.source);
        while let Some(x) = queue.pop_front() {
            if x == self.sink {
                break;
            }
            for &a in &self.out[x] {
                let a = a as usize;
                let y = self.head[a] as usize;
                if !seen[y] && self.residual(a) > 0 {
                    seen[y] = true;
                    pred[y] = a as u32;
                    queue.push_back(y);
                }
            }
        }
        pred
    }

    /// Nodes reachable from the source in the residual network.
    pub fn residual_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.out[x] {
                let a = a as usize;
                let y = self.head[a] as usize;
                if !seen[y] && self.residual(a) > 0 {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// One Ford–Fulkerson iteration: finds a shortest augmenting path and
    /// pushes one unit along it. Returns false when none exists.
    pub fn augment_once(&mut self) -> bool {
        let pred = self.label();
        if pred[self.sink] == NONE {
            return false;
        }
        let mut y = self.sink;
        while y != self.source {
            let a = pred[y] as usize;
            self.flow[a] += 1;
            self.flow[a ^ 1] -= 1;
            y = self.head[a ^ 1] as usize;
        }
        self.value += 1;
        true
    }

    /// True if an augmenting path exists in the current residual network.
    pub fn has_augmenting_path(&self) -> bool {
        self.label()[self.sink] != NONE
    }

    /// Augments until the flow reaches `limit` or no augmenting path is left.
    pub fn max_flow(&mut self, limit: usize) -> usize {
        while self.value < limit && self.augment_once() {}
        self.value
    }

    /// Splits the current flow into source-to-sink vertex sequences
    /// (artificial terminals omitted, split halves merged).
    pub fn decompose(&self) -> Vec<Vec<VertexId>> {
        let mut rem: Vec<i32> = self.flow.iter().map(|&f| f.max(0)).collect();
        let mut paths = Vec::new();
        loop {
            let mut x = self.source;
            let mut nodes = vec![x];
            let mut ok = false;
            loop {
                if x == self.sink && nodes.len() > 1 {
                    ok = true;
                    break;
                }
                let next = self.out[x]
                    .iter()
                    .map(|&a| a as usize)
                    .find(|&a| rem[a] > 0);
                match next {
                    Some(a) => {
                        rem[a] -= 1;
                        x = self.head[a] as usize;
                        nodes.push(x);
                        if nodes.len() > 4 * self.out.len() + 4 {
                            break;
                        }
                    }
                    None => break,
                }
            }
            if !ok {
                break;
            }
            let mut vs: Vec<VertexId> = Vec::new();
            for n in nodes {
                if let Some(v) = self.node_vertex[n] {
                    if vs.last() != Some(&v) {
                        vs.push(v);
                    }
                }
            }
            paths.push(vs);
        }
        paths
    }
}

/// `k` internally vertex-disjoint paths from `side_a` to `side_b` whose
/// internal vertices avoid both sides, or `None` if fewer than `k` exist.
/// A singleton side may be shared by all paths.
pub fn vertex_disjoint_paths(
    g: &Graph,
    side_a: &[VertexId],
    side_b: &[VertexId],
    k: usize,
) -> Result<Option<Vec<Path>>> {
    if k < 1 {
        return Err(Error::InvalidPathCount);
    }
    let mut a: Vec<VertexId> = side_a.to_vec();
    a.sort();
    a.dedup();
    let mut b: Vec<VertexId> = side_b.to_vec();
    b.sort();
    b.dedup();
    let mut net = FlowNetwork::vertex_split(g, &a, &b)?;
    if net.max_flow(k) < k {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(k);
    for vs in net.decompose().into_iter().take(k) {
        let start = vs
            .iter()
            .rposition(|v| a.binary_search(v).is_ok())
            .ok_or_else(|| Error::Internal("flow path misses source side".into()))?;
        let end = start
            + vs[start..]
                .iter()
                .position(|v| b.binary_search(v).is_ok())
                .ok_or_else(|| Error::Internal("flow path misses sink side".into()))?;
        out.push(Path::from_vertices(g, &vs[start..=end])?);
    }
    if out.len() < k {
        return Err(Error::Internal("flow decomposition lost a path".into()));
    }
    Ok(Some(out))
}

/// Local vertex connectivity between two distinct vertices, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: VertexId, t: VertexId, limit: usize) -> Result<usize> {
    let mut net = FlowNetwork::vertex_split(g, &[s], &[t])?;
    Ok(net.max_flow(limit))
}

/// k-connectivity for k in {2, 3}. The complete graph on k vertices counts
/// as k-connected.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool> {
    match k {
        2 => Ok(is_biconnected(g)),
        3 => Ok(is_triconnected(g)),
        _ => Err(Error::UnsupportedOrder(k)),
    }
}

fn is_triconnected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    if n == 3 {
        return g.edge_count() == 3;
    }
    if !is_biconnected(g) {
        return false;
    }
    let Some(v) = g.vertices().min_by_key(|&v| (g.degree(v), v)) else {
        return false;
    };
    if g.degree(v) < 3 {
        return false;
    }
    let enough = |a: VertexId, b: VertexId| {
        g.edge_between(a, b).is_some() || local_connectivity(g, a, b, 3).is_ok_and(|f| f >= 3)
    };
    for w in g.vertices() {
        if w != v && !enough(v, w) {
            return false;
        }
    }
    let nbrs: Vec<VertexId> = g.neighbors(v).iter().map(|&(w, _)| w).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !enough(x, y) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_edge_list;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn cycle(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    fn prism() -> Graph {
        parse_edge_list("a1 a2\na2 a3\na3 a1\nb1 b2\nb2 b3\nb3 b1\na1 b1\na2 b2\na3 b3").unwrap()
    }

    #[test]
    fn k4_has_three_paths() {
        let g = k4();
        let mut net = FlowNetwork::vertex_split(&g, &[VertexId(0)], &[VertexId(1)]).unwrap();
        assert_eq!(net.max_flow(3), 3);
        let paths = vertex_disjoint_paths(&g, &[VertexId(0)], &[VertexId(1)], 3)
            .unwrap()
            .unwrap();
        assert_eq!(paths.len(), 3);
        assert!(paths.iter().any(|p| p.vertices.len() == 2));
        for p in &paths {
            p.validate(&g).unwrap();
        }
    }

    #[test]
    fn cycle_has_two_paths() {
        let g = cycle(5);
        let mut net = FlowNetwork::vertex_split(&g, &[VertexId(0)], &[VertexId(2)]).unwrap();
        assert_eq!(net.max_flow(3), 2);
        let c6 = cycle(6);
        let paths = vertex_disjoint_paths(&c6, &[VertexId(0)], &[VertexId(3)], 2)
            .unwrap()
            .unwrap();
        assert!(paths.iter().all(|p| p.vertices.len() == 4));
        assert!(vertex_disjoint_paths(&c6, &[VertexId(0)], &[VertexId(3)], 3)
            .unwrap()
            .is_none());
    }

    #[test]
    fn edge_capacity_across_missing_rung() {
        let g = prism();
        let a1 = g.vertex_by_label("a1").unwrap();
        let b1 = g.vertex_by_label("b1").unwrap();
        let h = g.without_edges(&[g.edge_between(a1, b1).unwrap()]);
        let mut net = FlowNetwork::edge_capacity(&h, a1, b1).unwrap();
        assert_eq!(net.max_flow(3), 2);
    }

    #[test]
    fn set_to_set_paths_are_truncated() {
        let g = prism();
        let side_a: Vec<_> = ["a1", "a2", "a3"].iter().map(|l| g.vertex_by_label(l).unwrap()).collect();
        let side_b: Vec<_> = ["b1", "b2", "b3"].iter().map(|l| g.vertex_by_label(l).unwrap()).collect();
        let paths = vertex_disjoint_paths(&g, &side_a, &side_b, 3).unwrap().unwrap();
        for p in &paths {
            assert_eq!(p.vertices.len(), 2);
        }
    }

    #[test]
    fn connectivity_orders() {
        assert!(is_k_connected(&k4(), 3).unwrap());
        assert!(!is_k_connected(&cycle(5), 3).unwrap());
        assert!(is_k_connected(&cycle(5), 2).unwrap());
        assert!(is_k_connected(&cycle(3), 3).unwrap());
        assert!(is_k_connected(&prism(), 3).unwrap());
        assert_eq!(is_k_connected(&k4(), 4).unwrap_err(), Error::UnsupportedOrder(4));
        assert_eq!(
            vertex_disjoint_paths(&k4(), &[VertexId(0)], &[VertexId(1)], 0).unwrap_err(),
            Error::InvalidPathCount
        );
    }
}
