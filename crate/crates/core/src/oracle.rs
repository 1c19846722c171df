//! Exhaustive reference implementations for small graphs, and seeded random
//! graph generators.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::connectivity::{is_biconnected, is_k_connected};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, ElementRef, Graph, VertexId};

/// Largest vertex count the exhaustive searches accept by default.
pub const DEFAULT_BOUND: usize = 12;

/// Dense re-indexing of a graph for bitmask searches.
struct Dense {
    verts: Vec<VertexId>,
    index: Vec<usize>,
    adj: Vec<Vec<(usize, usize)>>,
    edge_index: Vec<usize>,
}

impl Dense {
    fn new(g: &Graph, bound: usize) -> Result<Dense> {
        let verts: Vec<VertexId> = g.vertices().collect();
        if verts.len() > bound || verts.len() > 64 {
            return Err(Error::OracleBound {
                found: verts.len(),
                bound,
            });
        }
        if g.edge_count() > 128 {
            return Err(Error::OracleBound {
                found: verts.len(),
                bound,
            });
        }
        let mut index = vec![usize::MAX; g.vertex_universe()];
        for (i, v) in verts.iter().enumerate() {
            index[v.index()] = i;
        }
        let mut edge_index = vec![usize::MAX; g.edge_universe()];
        for (k, (e, _, _)) in g.edges().enumerate() {
            edge_index[e.index()] = k;
        }
        let adj = verts
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .map(|&(w, e)| (index[w.index()], edge_index[e.index()]))
                    .collect()
            })
            .collect();
        Ok(Dense {
            verts,
            index,
            adj,
            edge_index,
        })
    }

    fn masks(&self, xs: &[ElementRef]) -> (u64, u128) {
        let mut vm = 0u64;
        let mut em = 0u128;
        for &x in xs {
            match x {
                ElementRef::Vertex(v) => vm |= 1 << self.index[v.index()],
                ElementRef::Edge(e) => em |= 1 << self.edge_index[e.index()],
            }
        }
        (vm, em)
    }
}

/// Every simple cycle of a small graph, stored as vertex and edge bitmasks.
pub struct CycleCatalog {
    dense: Dense,
    cycles: Vec<(u64, u128)>,
}

impl CycleCatalog {
    pub fn new(g: &Graph) -> Result<CycleCatalog> {
        Self::with_bound(g, DEFAULT_BOUND)
    }

    pub fn with_bound(g: &Graph, bound: usize) -> Result<CycleCatalog> {
        let dense = Dense::new(g, bound)?;
        let mut cycles = Vec::new();
        enumerate_cycles(&dense, |vm, em| {
            cycles.push((vm, em));
            true
        });
        Ok(CycleCatalog { dense, cycles })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// True if some simple cycle contains all listed elements.
    pub fn contains_all(&self, xs: &[ElementRef]) -> bool {
        let (vm, em) = self.dense.masks(xs);
        self.cycles
            .iter()
            .any(|&(cv, ce)| cv & vm == vm && ce & em == em)
    }
}

/// Canonical enumeration: each cycle is reported once, from its smallest
/// vertex, leaving through the smaller of its two neighbours on the cycle.
/// The visitor returns false to stop early.
fn enumerate_cycles(d: &Dense, mut visit: impl FnMut(u64, u128) -> bool) {
    let n = d.verts.len();
    for s in 0..n {
        let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
        let mut vm: u64 = 1 << s;
        let mut em: u128 = 0;
        let mut path_edges: Vec<usize> = Vec::new();
        let mut second = usize::MAX;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < d.adj[v].len() {
                let (w, e) = d.adj[v][*i];
                *i += 1;
                if w == s {
                    if stack.len() >= 3 && second < v && !visit(vm, em | (1 << e)) {
                        return;
                    }
                    continue;
                }
                if w < s || vm & (1 << w) != 0 {
                    continue;
                }
                if stack.len() == 1 {
                    second = w;
                }
                vm |= 1 << w;
                em |= 1 << e;
                path_edges.push(e);
                stack.push((w, 0));
            } else {
                stack.pop();
                if !stack.is_empty() {
                    vm &= !(1 << v);
                    let e = path_edges.pop().expect("edge for each step");
                    em &= !(1u128 << e);
                }
            }
        }
    }
}

/// Brute force: does a simple cycle contain all three elements?
pub fn oracle_cep(g: &Graph, x1: ElementRef, x2: ElementRef, x3: ElementRef) -> Result<bool> {
    oracle_cep_bounded(g, [x1, x2, x3], DEFAULT_BOUND)
}

pub fn oracle_cep_bounded(g: &Graph, xs: [ElementRef; 3], bound: usize) -> Result<bool> {
    for &x in &xs {
        g.check_element(x)?;
    }
    let d = Dense::new(g, bound)?;
    let (vm, em) = d.masks(&xs);
    let mut found = false;
    enumerate_cycles(&d, |cv, ce| {
        if cv & vm == vm && ce & em == em {
            found = true;
            false
        } else {
            true
        }
    });
    Ok(found)
}

/// Brute force over simple `s`–`t` paths: does one visit both `w1` and `w2`?
pub fn oracle_pep(g: &Graph, s: VertexId, t: VertexId, w1: VertexId, w2: VertexId) -> Result<bool> {
    for v in [s, t, w1, w2] {
        g.check_vertex(v)?;
    }
    let d = Dense::new(g, DEFAULT_BOUND)?;
    let want = (1u64 << d.index[w1.index()]) | (1u64 << d.index[w2.index()]);
    let mut found = false;
    enumerate_paths(&d, d.index[s.index()], d.index[t.index()], |vm| {
        if vm & want == want {
            found = true;
            false
        } else {
            true
        }
    });
    Ok(found)
}

fn enumerate_paths(d: &Dense, s: usize, t: usize, mut visit: impl FnMut(u64) -> bool) {
    let mut stack: Vec<(usize, usize)> = vec![(s, 0)];
    let mut vm: u64 = 1 << s;
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if v == t {
            if !visit(vm) {
                return;
            }
            stack.pop();
            vm &= !(1 << v);
            continue;
        }
        if *i < d.adj[v].len() {
            let (w, _) = d.adj[v][*i];
            *i += 1;
            if vm & (1 << w) == 0 {
                vm |= 1 << w;
                stack.push((w, 0));
            }
        } else {
            stack.pop();
            vm &= !(1 << v);
        }
    }
}

/// All unordered vertex pairs `{w1, w2}` (both different from `s` and `t`)
/// that no simple `s`–`t` path visits together.
pub fn oracle_excluded_pairs(g: &Graph, s: VertexId, t: VertexId) -> Result<BTreeSet<(VertexId, VertexId)>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints);
    }
    let d = Dense::new(g, DEFAULT_BOUND)?;
    let n = d.verts.len();
    let mut together = vec![0u64; n];
    enumerate_paths(&d, d.index[s.index()], d.index[t.index()], |vm| {
        for (i, row) in together.iter_mut().enumerate() {
            if vm & (1 << i) != 0 {
                *row |= vm;
            }
        }
        true
    });
    let (si, ti) = (d.index[s.index()], d.index[t.index()]);
    let mut out = BTreeSet::new();
    for (i, &row) in together.iter().enumerate() {
        for j in i + 1..n {
            if i == si || i == ti || j == si || j == ti {
                continue;
            }
            if row & (1 << j) == 0 {
                out.insert((d.verts[i], d.verts[j]));
            }
        }
    }
    Ok(out)
}

/// Inclusion-minimal edge pairs whose removal separates `s` from `t`.
pub fn oracle_2_edge_cuts(g: &Graph, s: VertexId, t: VertexId) -> Result<BTreeSet<(EdgeId, EdgeId)>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints);
    }
    let edges: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
    let separates = |removed: &[EdgeId]| !g.without_edges(removed).reachable_from(s)[t.index()];
    let single: Vec<bool> = edges.iter().map(|&e| separates(&[e])).collect();
    let mut out = BTreeSet::new();
    for i in 0..edges.len() {
        if single[i] {
            continue;
        }
        for j in i + 1..edges.len() {
            if !single[j] && separates(&[edges[i], edges[j]]) {
                out.insert((edges[i], edges[j]));
            }
        }
    }
    Ok(out)
}

/// Brute-force separation pairs of a biconnected graph.
pub fn oracle_separation_pairs(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            let h = g.without_vertices(&[a, b]);
            if h.vertex_count() > 0 && !h.is_connected() {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Connected,
    Biconnected,
    Triconnected,
}

impl GraphClass {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            GraphClass::Connected => g.is_connected(),
            GraphClass::Biconnected => is_biconnected(g),
            GraphClass::Triconnected => is_k_connected(g, 3).unwrap_or(false),
        }
    }
}

/// Seeded random graph on vertices `0..n` with about `m` edges: `m`
/// distinct random edges, then random extra edges until `class` holds.
pub fn random_graph(seed: u64, class: GraphClass, n: usize, m: usize) -> Result<Graph> {
    let min_n = match class {
        GraphClass::Connected => 1,
        GraphClass::Biconnected => 2,
        GraphClass::Triconnected => 3,
    };
    if n < min_n {
        return Err(Error::Precondition(format!("{class:?} graphs need at least {min_n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = n * (n - 1) / 2;
    let mut g = Graph::new(n);
    let target = m.min(max);
    while g.edge_count() < target {
        add_random_edge(&mut g, &mut rng, n);
    }
    while !class.holds(&g) {
        if g.edge_count() == max {
            return Err(Error::Internal("complete graph fails the class test".into()));
        }
        add_random_edge(&mut g, &mut rng, n);
    }
    Ok(g)
}

fn add_random_edge(g: &mut Graph, rng: &mut ChaCha8Rng, n: usize) {
    loop {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u != v && g.edge_between(VertexId(u), VertexId(v)).is_none() {
            g.push_edge(VertexId(u.min(v)), VertexId(u.max(v)))
                .expect("fresh edge");
            return;
        }
    }
}

/// Short stable digest of a graph's edge list.
pub fn fingerprint(g: &Graph) -> String {
    let digest = Sha256::digest(g.to_edge_list().as_bytes());
    hex::encode(&digest[..8])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(g: &Graph, l: &str) -> VertexId {
        g.vertex_by_label(l).unwrap()
    }

    fn e(g: &Graph, a: &str, b: &str) -> ElementRef {
        ElementRef::Edge(g.edge_between(v(g, a), v(g, b)).unwrap())
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(CycleCatalog::new(&fixtures::cycle(5)).unwrap().len(), 1);
        // K4 has 4 triangles and 3 four-cycles.
        assert_eq!(CycleCatalog::new(&fixtures::complete(4)).unwrap().len(), 7);
    }

    #[test]
    fn small_answers() {
        let tri = fixtures::cycle(3);
        assert!(oracle_cep(&tri, e(&tri, "c0", "c1"), e(&tri, "c1", "c2"), e(&tri, "c2", "c0")).unwrap());
        let p = fixtures::prism();
        assert!(!oracle_cep(&p, e(&p, "a1", "b1"), e(&p, "a2", "b2"), e(&p, "a3", "b3")).unwrap());
        let sq = fixtures::square();
        assert!(!oracle_pep(&sq, v(&sq, "s"), v(&sq, "t"), v(&sq, "a"), v(&sq, "b")).unwrap());
        let f = fixtures::three_routes();
        assert!(!oracle_pep(&f, v(&f, "w4"), v(&f, "x"), v(&f, "u1"), v(&f, "w2")).unwrap());
        assert!(oracle_cep(&f, e(&f, "w4", "x"), ElementRef::Vertex(v(&f, "u1")), ElementRef::Vertex(v(&f, "u6"))).unwrap());
    }

    #[test]
    fn two_edge_cuts_of_k4_minus_edge() {
        let k4 = fixtures::complete(4);
        let (s, t) = (v(&k4, "v0"), v(&k4, "v1"));
        let h = k4.without_edges(&[k4.edge_between(s, t).unwrap()]);
        assert_eq!(oracle_2_edge_cuts(&h, s, t).unwrap().len(), 2);
        let k5 = fixtures::complete(5);
        let (s, t) = (v(&k5, "v0"), v(&k5, "v1"));
        let h = k5.without_edges(&[k5.edge_between(s, t).unwrap()]);
        assert!(oracle_2_edge_cuts(&h, s, t).unwrap().is_empty());
    }

    #[test]
    fn generators_are_deterministic() {
        let a = random_graph(7, GraphClass::Triconnected, 8, 12).unwrap();
        let b = random_graph(7, GraphClass::Triconnected, 8, 12).unwrap();
        assert_eq!(fingerprint(&a), fingerprint(&b));
        assert!(is_k_connected(&a, 3).unwrap());
        assert!(random_graph(1, GraphClass::Biconnected, 1, 0).is_err());
    }

    #[test]
    fn bound_is_enforced() {
        let g = fixtures::cycle(13);
        let c = ElementRef::Vertex(VertexId(0));
        assert!(matches!(
            oracle_cep(&g, c, ElementRef::Vertex(VertexId(1)), ElementRef::Vertex(VertexId(2))),
            Err(Error::OracleBound { .. })
        ));
    }
}
