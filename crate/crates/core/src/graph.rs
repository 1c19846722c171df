//! Undirected simple graphs with stable vertex and edge identifiers.
//!
//! Identifiers index into a fixed "universe": a subgraph keeps the ids of its
//! parent, so paths computed on a subgraph can be used verbatim on the parent.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A vertex or an edge of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ElementRef {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl From<VertexId> for ElementRef {
    fn from(v: VertexId) -> Self {
        ElementRef::Vertex(v)
    }
}

impl From<EdgeId> for ElementRef {
    fn from(e: EdgeId) -> Self {
        ElementRef::Edge(e)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Graph {
    present: Vec<bool>,
    labels: Vec<Option<String>>,
    label_index: HashMap<String, VertexId>,
    edges: Vec<Option<(VertexId, VertexId)>>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    vertex_count: usize,
    edge_count: usize,
}

impl Graph {
    /// Graph on vertices `0..n` without edges or labels.
    pub fn new(n: usize) -> Self {
        Graph {
            present: vec![true; n],
            labels: vec![None; n],
            label_index: HashMap::new(),
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            vertex_count: n,
            edge_count: 0,
        }
    }

    /// Graph on vertices `0..n`; edge `i` of the slice receives `EdgeId(i)`.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.push_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    /// Builds a graph from labelled edges, interning labels in order of first
    /// appearance. Duplicate edges are collapsed.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut g = Graph::new(0);
        for (a, b) in edges {
            let u = g.intern(a.as_ref());
            let v = g.intern(b.as_ref());
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.edge_between(u, v).is_none() {
                g.push_edge(u, v)?;
            }
        }
        Ok(g)
    }

    fn intern(&mut self, label: &str) -> VertexId {
        if let Some(&v) = self.label_index.get(label) {
            return v;
        }
        let v = VertexId(self.present.len() as u32);
        self.present.push(true);
        self.labels.push(Some(label.to_string()));
        self.adj.push(Vec::new());
        self.label_index.insert(label.to_string(), v);
        self.vertex_count += 1;
        v
    }

    /// Appends a new edge with the next free id. Fails on self-loops,
    /// duplicates and unknown endpoints.
    pub(crate) fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.edge_between(u, v).is_some() {
            return Err(Error::Precondition(format!(
                "duplicate edge {{{}, {}}}",
                u.0, v.0
            )));
        }
        let e = EdgeId(self.edges.len() as u32);
        self.edges.push(Some((u, v)));
        insert_sorted(&mut self.adj[u.index()], (v, e));
        insert_sorted(&mut self.adj[v.index()], (u, e));
        self.edge_count += 1;
        Ok(e)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub fn check_element(&self, x: ElementRef) -> Result<()> {
        match x {
            ElementRef::Vertex(v) => self.check_vertex(v),
            ElementRef::Edge(e) => self.check_edge(e),
        }
    }

    /// Size of the vertex id space (present or not).
    pub fn vertex_universe(&self) -> usize {
        self.present.len()
    }

    /// Size of the edge id space (present or not).
    pub fn edge_universe(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.present.get(v.index()).copied().unwrap_or(false)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e.index()), Some(Some(_)))
    }

    pub fn contains(&self, x: ElementRef) -> bool {
        match x {
            ElementRef::Vertex(v) => self.has_vertex(v),
            ElementRef::Edge(e) => self.has_edge(e),
        }
    }

    /// Present vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| VertexId(i as u32))
    }

    /// Present edges in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|(u, v)| (EdgeId(i as u32), u, v)))
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(e.index()).copied().flatten()
    }

    /// Neighbours of `v` sorted by ascending neighbour id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        if self.has_vertex(v) {
            &self.adj[v.index()]
        } else {
            &[]
        }
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = self.neighbors(u);
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(v.index()).and_then(|l| l.as_deref())
    }

    /// The label of `v`, or its numeric id when unlabelled.
    pub fn display_label(&self, v: VertexId) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.0.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        if let Some(&v) = self.label_index.get(label) {
            return self.has_vertex(v).then_some(v);
        }
        if self.label_index.is_empty() {
            let id: u32 = label.parse().ok()?;
            let v = VertexId(id);
            return self.has_vertex(v).then_some(v);
        }
        None
    }

    /// Returns `g ∪ (u,v)` together with the id of the edge and whether it
    /// was already present (in which case the graph is unchanged).
    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<(Graph, EdgeId, bool)> {
        if u == v {
            return Err(Error::SameEndpoints);
        }
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if let Some(e) = self.edge_between(u, v) {
            return Ok((self.clone(), e, true));
        }
        let mut g = self.clone();
        let e = g.push_edge(u, v)?;
        Ok((g, e, false))
    }

    /// Returns the graph without edge `e`. Ids of everything else are kept.
    pub fn remove_edge(&self, e: EdgeId) -> Result<Graph> {
        let (u, v) = self.endpoints(e).ok_or(Error::UnknownEdge(e))?;
        let mut g = self.clone();
        g.edges[e.index()] = None;
        g.adj[u.index()].retain(|&(_, f)| f != e);
        g.adj[v.index()].retain(|&(_, f)| f != e);
        g.edge_count -= 1;
        // Drop trailing tombstones so that add_edge/remove_edge round-trips.
        while matches!(g.edges.last(), Some(None)) {
            g.edges.pop();
        }
        Ok(g)
    }

    /// Subgraph induced by `vs`, keeping the original ids.
    pub fn induced_subgraph(&self, vs: &[VertexId]) -> Result<Graph> {
        if vs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut keep = vec![false; self.vertex_universe()];
        for &v in vs {
            self.check_vertex(v)?;
            keep[v.index()] = true;
        }
        Ok(self.restrict(&keep, |_| true))
    }

    /// Subgraph consisting of the given edges and their endpoints.
    pub fn edge_subgraph(&self, es: &[EdgeId]) -> Result<Graph> {
        let mut keep_v = vec![false; self.vertex_universe()];
        let mut keep_e = vec![false; self.edge_universe()];
        for &e in es {
            let (u, v) = self.endpoints(e).ok_or(Error::UnknownEdge(e))?;
            keep_v[u.index()] = true;
            keep_v[v.index()] = true;
            keep_e[e.index()] = true;
        }
        Ok(self.restrict(&keep_v, |e| keep_e[e.index()]))
    }

    /// Graph without the vertices flagged in `removed`.
    pub fn without_vertices(&self, removed: &[VertexId]) -> Graph {
        let mut keep = self.present.clone();
        for &v in removed {
            if let Some(k) = keep.get_mut(v.index()) {
                *k = false;
            }
        }
        self.restrict(&keep, |_| true)
    }

    /// Graph without the given edges.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let keep = self.present.clone();
        self.restrict(&keep, |e| !removed.contains(&e))
    }

    fn restrict(&self, keep_v: &[bool], keep_e: impl Fn(EdgeId) -> bool) -> Graph {
        let mut present = vec![false; self.vertex_universe()];
        let mut vertex_count = 0;
        for (i, p) in present.iter_mut().enumerate() {
            if self.present[i] && keep_v[i] {
                *p = true;
                vertex_count += 1;
            }
        }
        let mut edges = vec![None; self.edge_universe()];
        let mut edge_count = 0;
        for (e, u, v) in self.edges() {
            if present[u.index()] && present[v.index()] && keep_e(e) {
                edges[e.index()] = Some((u, v));
                edge_count += 1;
            }
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, list)| {
                if !present[i] {
                    return Vec::new();
                }
                list.iter()
                    .copied()
                    .filter(|&(_, e)| edges[e.index()].is_some())
                    .collect()
            })
            .collect();
        Graph {
            present,
            labels: self.labels.clone(),
            label_index: self.label_index.clone(),
            edges,
            adj,
            vertex_count,
            edge_count,
        }
    }

    /// True if every present vertex is reachable from every other.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices().next() else {
            return true;
        };
        self.reachable_from(start).iter().filter(|&&r| r).count() == self.vertex_count
    }

    /// Reachability flags (indexed by vertex id) from `start`.
    pub fn reachable_from(&self, start: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_universe()];
        if !self.has_vertex(start) {
            return seen;
        }
        let mut stack = vec![start];
        seen[start.index()] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in self.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Shortest path (by hops) from `from` to `to`, if any.
    pub fn bfs_path(&self, from: VertexId, to: VertexId) -> Option<Path> {
        if !self.has_vertex(from) || !self.has_vertex(to) {
            return None;
        }
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; self.vertex_universe()];
        let mut seen = vec![false; self.vertex_universe()];
        let mut queue = std::collections::VecDeque::new();
        seen[from.index()] = true;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &(w, e) in self.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    parent[w.index()] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        if !seen[to.index()] {
            return None;
        }
        let mut vertices = vec![to];
        let mut edges = Vec::new();
        let mut cur = to;
        while let Some((p, e)) = parent[cur.index()] {
            vertices.push(p);
            edges.push(e);
            cur = p;
        }
        vertices.reverse();
        edges.reverse();
        Some(Path { vertices, edges })
    }

    /// Text edge list using display labels, one edge per line in id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (_, u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.display_label(u), self.display_label(v));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{}\";", escape_dot(&self.display_label(v)));
        }
        for (_, u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                escape_dot(&self.display_label(u)),
                escape_dot(&self.display_label(v))
            );
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn insert_sorted(list: &mut Vec<(VertexId, EdgeId)>, item: (VertexId, EdgeId)) {
    let pos = list.partition_point(|&(w, _)| w < item.0);
    list.insert(pos, item);
}

/// Result of parsing an edge list: the graph and any non-fatal warnings.
#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Parses `u v` lines. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_warnings(text).map(|p| p.graph)
}

pub fn parse_edge_list_with_warnings(text: &str) -> Result<ParsedGraph> {
    let mut g = Graph::new(0);
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<(usize, &str)> = tokens_with_columns(raw);
        if tokens.len() != 2 {
            let (column, message) = if tokens.len() < 2 {
                (raw.len() + 1, "expected two vertex labels".to_string())
            } else {
                (tokens[2].0, format!("unexpected token `{}`", tokens[2].1))
            };
            return Err(Error::Parse {
                line,
                column,
                message,
            });
        }
        let (ca, a) = tokens[0];
        let (_, b) = tokens[1];
        if a == b {
            return Err(Error::Parse {
                line,
                column: ca,
                message: format!("self-loop on `{a}`"),
            });
        }
        let u = g.intern(a);
        let v = g.intern(b);
        if g.edge_between(u, v).is_some() {
            warnings.push(format!("line {line}: duplicate edge {a} {b} ignored"));
            continue;
        }
        g.push_edge(u, v)?;
    }
    if g.edge_count() == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(ParsedGraph { graph: g, warnings })
}

fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// A simple path: `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// A simple cycle: `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn single(v: VertexId) -> Path {
        Path {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds the path through consecutive vertices, resolving edges in `g`.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Path> {
        let mut edges = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
                Error::InvalidWalk(format!("no edge between {} and {}", w[0].0, w[1].0))
            })?;
            edges.push(e);
        }
        Ok(Path {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are never empty")
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Path { vertices, edges }
    }

    pub fn contains(&self, x: ElementRef) -> bool {
        match x {
            ElementRef::Vertex(v) => self.vertices.contains(&v),
            ElementRef::Edge(e) => self.edges.contains(&e),
        }
    }

    /// Checks incidence, simplicity and edge existence in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return Err(Error::InvalidWalk("malformed path".into()));
        }
        check_distinct(&self.vertices)?;
        for (i, &e) in self.edges.iter().enumerate() {
            check_incident(g, e, self.vertices[i], self.vertices[i + 1])?;
        }
        Ok(())
    }
}

impl Cycle {
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Cycle> {
        let n = vertices.len();
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            let e = g.edge_between(a, b).ok_or_else(|| {
                Error::InvalidWalk(format!("no edge between {} and {}", a.0, b.0))
            })?;
            edges.push(e);
        }
        Ok(Cycle {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, x: ElementRef) -> bool {
        match x {
            ElementRef::Vertex(v) => self.vertices.contains(&v),
            ElementRef::Edge(e) => self.edges.contains(&e),
        }
    }

    /// Checks that this is a simple cycle of `g` with at least three vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = self.vertices.len();
        if n < 3 || self.edges.len() != n {
            return Err(Error::InvalidWalk("malformed cycle".into()));
        }
        check_distinct(&self.vertices)?;
        for i in 0..n {
            check_incident(g, self.edges[i], self.vertices[i], self.vertices[(i + 1) % n])?;
        }
        Ok(())
    }

    /// Rotates the cycle so that edge `e` becomes the closing edge
    /// (`vertices.last()` to `vertices[0]`) and returns the remaining path.
    pub fn open_at(&self, e: EdgeId) -> Option<Path> {
        let n = self.len();
        let i = self.edges.iter().position(|&f| f == e)?;
        // edges[i] joins vertices[i] and vertices[i+1]; start right after it.
        let start = (i + 1) % n;
        let vertices: Vec<VertexId> = (0..n).map(|k| self.vertices[(start + k) % n]).collect();
        let edges: Vec<EdgeId> = (0..n - 1).map(|k| self.edges[(start + k) % n]).collect();
        Some(Path { vertices, edges })
    }
}

fn check_distinct(vs: &[VertexId]) -> Result<()> {
    let set: BTreeSet<_> = vs.iter().collect();
    if set.len() != vs.len() {
        return Err(Error::InvalidWalk("repeated vertex".into()));
    }
    Ok(())
}

fn check_incident(g: &Graph, e: EdgeId, a: VertexId, b: VertexId) -> Result<()> {
    match g.endpoints(e) {
        Some((u, v)) if (u == a && v == b) || (u == b && v == a) => Ok(()),
        Some(_) => Err(Error::InvalidWalk(format!(
            "edge {} does not join {} and {}",
            e.0, a.0, b.0
        ))),
        None => Err(Error::InvalidWalk(format!("edge {} not in graph", e.0))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("a b\nb c\na c").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.vertex_by_label("c"), Some(VertexId(2)));
    }

    #[test]
    fn duplicate_edges_collapse_with_warning() {
        let p = parse_edge_list_with_warnings("a b\na b").unwrap();
        assert_eq!(p.graph.vertex_count(), 2);
        assert_eq!(p.graph.edge_count(), 1);
        assert_eq!(p.warnings.len(), 1);
        let p = parse_edge_list_with_warnings("a b\nb a").unwrap();
        assert_eq!(p.graph.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            parse_edge_list("a a"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("# c\na b\nc"),
            Err(Error::Parse { line: 3, column: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b c"),
            Err(Error::Parse { line: 1, column: 5, .. })
        ));
        assert_eq!(parse_edge_list("# nothing\n\n").unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn add_edge_reports_presence() {
        let g = parse_edge_list("a b\nb c").unwrap();
        let (h, e, existed) = g.add_edge(VertexId(0), VertexId(2)).unwrap();
        assert!(!existed);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(e, EdgeId(2));
        let (h2, e2, existed2) = h.add_edge(VertexId(1), VertexId(0)).unwrap();
        assert!(existed2);
        assert_eq!(e2, EdgeId(0));
        assert_eq!(h2.edge_count(), 3);
        assert_eq!(g.add_edge(VertexId(1), VertexId(1)).unwrap_err(), Error::SameEndpoints);
        let back = h.remove_edge(e).unwrap();
        assert_eq!(back.edge_universe(), g.edge_universe());
        assert_eq!(back.to_edge_list(), g.to_edge_list());
    }

    #[test]
    fn induced_subgraph_keeps_ids() {
        let g = parse_edge_list("a b\nb c\nc d\nd a\na c").unwrap();
        let h = g.induced_subgraph(&[VertexId(0), VertexId(2), VertexId(3)]).unwrap();
        assert_eq!(h.vertex_count(), 3);
        let ids: Vec<_> = h.edges().map(|(e, _, _)| e).collect();
        assert_eq!(ids, vec![EdgeId(2), EdgeId(3), EdgeId(4)]);
        assert!(!h.has_vertex(VertexId(1)));
        assert_eq!(g.induced_subgraph(&[]).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn dot_output_lists_everything() {
        let g = parse_edge_list("a b").unwrap();
        let dot = g.to_dot();
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("\"a\";"));
    }

    #[test]
    fn walks_validate() {
        let g = parse_edge_list("a b\nb c\nc a\nc d").unwrap();
        let p = Path::from_vertices(&g, &[VertexId(0), VertexId(1), VertexId(2)]).unwrap();
        p.validate(&g).unwrap();
        assert!(p.contains(ElementRef::Edge(EdgeId(1))));
        let c = Cycle::from_vertices(&g, &[VertexId(0), VertexId(1), VertexId(2)]).unwrap();
        c.validate(&g).unwrap();
        let opened = c.open_at(EdgeId(2)).unwrap();
        assert_eq!(opened.vertices, vec![VertexId(0), VertexId(1), VertexId(2)]);
        let bad = Path {
            vertices: vec![VertexId(0), VertexId(1), VertexId(0)],
            edges: vec![EdgeId(0), EdgeId(0)],
        };
        assert!(bad.validate(&g).is_err());
        assert!(Cycle::from_vertices(&g, &[VertexId(0), VertexId(1), VertexId(3)]).is_err());
    }
}
