//! Exclusion-pair enumeration: every pair of vertices `{w1, w2}` such that no
//! simple `s`-`t` path visits both.
//!
//! The report is implicit: each group names a component and some of its
//! virtual skeleton edges, and every cross pair between the vertex sets
//! represented by two distinct listed edges is excluded. `expand_explicit`
//! turns a report into the deduplicated pair set.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::connectivity::{is_k_connected, FlowNetwork};
use crate::error::{internal, Error, Result};
use crate::graph::{EdgeId, ElementRef, Graph, VertexId};
use crate::spqr::{build_spqr, ComponentId, ComponentKind, Representative, SpqrTree};
use crate::{cheap_checks, debug_checks};

/// Which rule produced a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupRule {
    /// All virtual edges of a P component other than the incoming one.
    Parallel,
    /// Virtual edges of an R component sharing the endpoint `s'`.
    SourceEndpoint,
    /// Virtual edges of an R component sharing the endpoint `t'`.
    TargetEndpoint,
    /// Both edges of a 2-edge `s'`,`t'`-cut of an R component.
    EdgeCut,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupEdge {
    /// Skeleton edge index inside the group's component.
    pub id: usize,
    /// Number of vertices represented by the edge, its two ends excluded.
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionGroup {
    pub component: ComponentId,
    pub rule: GroupRule,
    pub edges: Vec<GroupEdge>,
}

impl ExclusionGroup {
    /// Number of cross pairs the group stands for (before deduplication).
    pub fn pair_count(&self) -> u64 {
        let mut total = 0u64;
        let mut seen = 0u64;
        for e in &self.edges {
            total += seen * e.size as u64;
            seen += e.size as u64;
        }
        total
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ExclusionReport {
    pub groups: Vec<ExclusionGroup>,
    /// Sum of `pair_count` over all groups. Pairs covered by more than one
    /// group are counted once per group.
    pub total_pairs: u64,
}

impl ExclusionReport {
    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// Nested 2-edge cuts between two vertices, ordered from the source side.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CutSequence {
    pub cuts: Vec<(EdgeId, EdgeId)>,
}

impl CutSequence {
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }
}

/// Exclusion report for the `s`-`t` paths of `g`. Requires `g + (s,t)` to be
/// biconnected; when it is a single edge the report is empty.
pub fn epe(g: &Graph, s: VertexId, t: VertexId) -> Result<ExclusionReport> {
    match epe_with_tree(g, s, t) {
        Ok((_, report)) => Ok(report),
        Err(Error::SingleEdge) => Ok(ExclusionReport::default()),
        Err(e) => Err(e),
    }
}

/// Like `epe`, also returning the SPQR tree of `g + (s,t)` that the report
/// refers to. Fails with `SingleEdge` when `g + (s,t)` is a single edge.
pub fn epe_with_tree(g: &Graph, s: VertexId, t: VertexId) -> Result<(SpqrTree, ExclusionReport)> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints);
    }
    let (plus, st, _) = g.add_edge(s, t)?;
    let tree = build_spqr(&plus)?;
    let report = traverse(&tree, st)?;
    Ok((tree, report))
}

/// The deduplicated excluded pairs `(a, b)` with `a < b` for `s`-`t` paths.
pub fn excluded_pairs(g: &Graph, s: VertexId, t: VertexId) -> Result<BTreeSet<(VertexId, VertexId)>> {
    match epe_with_tree(g, s, t) {
        Ok((tree, report)) => expand_explicit(&tree, &report),
        Err(Error::SingleEdge) => Ok(BTreeSet::new()),
        Err(e) => Err(e),
    }
}

fn traverse(tree: &SpqrTree, st: EdgeId) -> Result<ExclusionReport> {
    let (root, root_edge) = tree
        .edge_home(st)
        .ok_or_else(|| Error::Internal("added edge has no home component".into()))?;
    let check = cheap_checks();
    let mut groups = Vec::new();
    let mut stack = vec![(root, root_edge)];
    while let Some((c, incoming)) = stack.pop() {
        if check {
            let expected = if c == root {
                Representative::Real(ElementRef::Edge(st))
            } else {
                Representative::Virtual { component: c, edge: incoming }
            };
            let got = tree.representative(c, ElementRef::Edge(st))?;
            if got != expected {
                return internal(format!(
                    "traversal reached component {} through edge {incoming}, but (s,t) is represented by {got:?}",
                    c.0
                ));
            }
        }
        let comp = tree.component(c);
        let virt: Vec<usize> = comp.virtual_edges().filter(|&i| i != incoming).collect();
        let group = |rule: GroupRule, ids: &[usize]| -> Result<ExclusionGroup> {
            let mut edges = Vec::with_capacity(ids.len());
            for &id in ids {
                edges.push(GroupEdge { id, size: tree.split_vertex_count(c, id)? });
            }
            Ok(ExclusionGroup { component: c, rule, edges })
        };
        match comp.kind {
            ComponentKind::S => {}
            ComponentKind::P => {
                if virt.len() >= 2 {
                    groups.push(group(GroupRule::Parallel, &virt)?);
                }
            }
            ComponentKind::R => {
                let (sp, tp) = comp.edges[incoming].ends;
                for (u, rule) in [(sp, GroupRule::SourceEndpoint), (tp, GroupRule::TargetEndpoint)] {
                    let ex: Vec<usize> =
                        virt.iter().copied().filter(|&i| comp.edges[i].touches(u)).collect();
                    if ex.len() >= 2 {
                        groups.push(group(rule, &ex)?);
                    }
                }
                if virt.len() >= 2 {
                    let skel = comp.skeleton_graph()?.without_edges(&[EdgeId(incoming as u32)]);
                    let ls = VertexId(comp.local_index(sp).unwrap() as u32);
                    let lt = VertexId(comp.local_index(tp).unwrap() as u32);
                    for (a, b) in find_2_edge_cuts(&skel, ls, lt)?.cuts {
                        let (ea, eb) = (&comp.edges[a.index()], &comp.edges[b.index()]);
                        if !ea.is_virtual() || !eb.is_virtual() {
                            continue;
                        }
                        if (ea.touches(sp) && eb.touches(sp)) || (ea.touches(tp) && eb.touches(tp)) {
                            continue;
                        }
                        groups.push(group(GroupRule::EdgeCut, &[a.index(), b.index()])?);
                    }
                }
            }
        }
        for &v in virt.iter().rev() {
            stack.push(tree.neighbor_across(c, v)?);
        }
    }
    groups.sort_by_key(|g| g.component);
    let total_pairs = groups.iter().map(ExclusionGroup::pair_count).sum();
    Ok(ExclusionReport { groups, total_pairs })
}

/// All excluded pairs named by `report`, as `(a, b)` with `a < b`.
pub fn expand_explicit(
    tree: &SpqrTree,
    report: &ExclusionReport,
) -> Result<BTreeSet<(VertexId, VertexId)>> {
    let mut out = BTreeSet::new();
    for group in &report.groups {
        if group.component.index() >= tree.len() {
            return Err(Error::Precondition(format!(
                "report names component {} but the tree has {}",
                group.component.0,
                tree.len()
            )));
        }
        let mut sets = Vec::with_capacity(group.edges.len());
        for e in &group.edges {
            sets.push(tree.split_vertices(group.component, e.id)?);
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                for &a in &sets[i] {
                    for &b in &sets[j] {
                        out.insert(if a < b { (a, b) } else { (b, a) });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All 2-edge cuts between `s` and `t`, in nested order starting at `s`.
/// Expects `c_minus + (s,t)` to be triconnected; the check is made only when
/// `MUSTPATH_DEBUG=1` or, for small graphs, in debug builds.
pub fn find_2_edge_cuts(c_minus: &Graph, s: VertexId, t: VertexId) -> Result<CutSequence> {
    c_minus.check_vertex(s)?;
    c_minus.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints);
    }
    if debug_checks() || (cfg!(debug_assertions) && c_minus.vertex_count() <= 64) {
        let (closed, _, _) = c_minus.add_edge(s, t)?;
        if closed.vertex_count() >= 4 && !is_k_connected(&closed, 3)? {
            return Err(Error::Precondition(
                "graph plus the (s,t) edge is not triconnected".into(),
            ));
        }
    }
    let mut net = FlowNetwork::edge_capacity(c_minus, s, t)?;
    if net.max_flow(2) < 2 {
        return Err(Error::Precondition(
            "fewer than two edge-disjoint paths join s and t".into(),
        ));
    }
    if net.has_augmenting_path() {
        return Ok(CutSequence::default());
    }

    let mut labeled = vec![false; c_minus.vertex_universe()];
    let mut queue = VecDeque::new();
    let mut pending: Vec<(VertexId, VertexId, EdgeId)> = Vec::new();
    let mut cuts = Vec::new();
    labeled[s.index()] = true;
    queue.push_back(s);
    while !labeled[t.index()] {
        let Some(v) = queue.pop_front() else {
            pending.retain(|&(_, w, _)| !labeled[w.index()]);
            pending.sort_by_key(|&(_, _, e)| e);
            pending.dedup_by_key(|&mut (_, _, e)| e);
            if pending.len() != 2 {
                return internal(format!(
                    "residual frontier has {} saturated edges instead of 2",
                    pending.len()
                ));
            }
            cuts.push((pending[0].2, pending[1].2));
            for &(_, w, _) in &pending {
                if !labeled[w.index()] {
                    labeled[w.index()] = true;
                    queue.push_back(w);
                }
            }
            pending.clear();
            continue;
        };
        for &(w, e) in c_minus.neighbors(v) {
            if labeled[w.index()] {
                continue;
            }
            if net.edge_flow(c_minus, e, v) == 1 {
                pending.push((v, w, e));
            } else {
                labeled[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    Ok(CutSequence { cuts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(g: &Graph, name: &str) -> VertexId {
        g.vertex_by_label(name).unwrap()
    }

    fn named(g: &Graph, pairs: &BTreeSet<(VertexId, VertexId)>) -> BTreeSet<(String, String)> {
        pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (g.display_label(a), g.display_label(b));
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }

    fn edge(g: &Graph, a: &str, b: &str) -> EdgeId {
        g.edge_between(v(g, a), v(g, b)).unwrap()
    }

    #[test]
    fn theta_is_one_parallel_group() {
        let g = fixtures::theta();
        let (tree, rep) = epe_with_tree(&g, v(&g, "s"), v(&g, "t")).unwrap();
        assert_eq!(rep.groups.len(), 1);
        assert_eq!(rep.groups[0].rule, GroupRule::Parallel);
        assert_eq!(rep.groups[0].edges.len(), 3);
        assert_eq!(rep.total_pairs, 3);
        let pairs = expand_explicit(&tree, &rep).unwrap();
        let want: BTreeSet<(String, String)> = [("w1", "w2"), ("w1", "w3"), ("w2", "w3")]
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(named(&g, &pairs), want);
    }

    #[test]
    fn square_excludes_the_two_sides() {
        let g = fixtures::square();
        let pairs = excluded_pairs(&g, v(&g, "s"), v(&g, "t")).unwrap();
        assert_eq!(pairs, BTreeSet::from([(v(&g, "a"), v(&g, "b"))]));
    }

    #[test]
    fn empty_report_expands_to_nothing() {
        let g = fixtures::complete(4);
        let (tree, rep) = epe_with_tree(&g, v(&g, "v0"), v(&g, "v1")).unwrap();
        assert!(rep.is_empty());
        assert!(expand_explicit(&tree, &rep).unwrap().is_empty());
    }

    #[test]
    fn three_routes_excludes_u1_w2_from_w4_to_x() {
        let g = fixtures::three_routes();
        let pairs = excluded_pairs(&g, v(&g, "w4"), v(&g, "x")).unwrap();
        let (a, b) = (v(&g, "u1"), v(&g, "w2"));
        assert!(pairs.contains(&(a.min(b), a.max(b))));
    }

    #[test]
    fn single_edge_and_errors() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(epe(&g, VertexId(0), VertexId(1)).unwrap().is_empty());
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(epe(&path, VertexId(0), VertexId(1)).is_err());
        assert_eq!(epe(&path, VertexId(0), VertexId(0)), Err(Error::SameEndpoints));
    }

    #[test]
    fn k4_minus_edge_has_two_cuts() {
        let g = fixtures::complete(4);
        let (s, t) = (v(&g, "v0"), v(&g, "v1"));
        let h = g.remove_edge(edge(&g, "v0", "v1")).unwrap();
        let cuts = find_2_edge_cuts(&h, s, t).unwrap().cuts;
        let norm = |a: EdgeId, b: EdgeId| (a.min(b), a.max(b));
        assert_eq!(
            cuts,
            vec![
                norm(edge(&g, "v0", "v2"), edge(&g, "v0", "v3")),
                norm(edge(&g, "v1", "v2"), edge(&g, "v1", "v3")),
            ]
        );
    }

    #[test]
    fn prism_minus_rung_leaves_the_other_rungs() {
        let g = fixtures::prism();
        let h = g.remove_edge(edge(&g, "a1", "b1")).unwrap();
        let cuts = find_2_edge_cuts(&h, v(&g, "a1"), v(&g, "b1")).unwrap().cuts;
        let norm = |a: EdgeId, b: EdgeId| (a.min(b), a.max(b));
        // a1 and b1 drop to degree 2, so their stars are cuts as well; only
        // the middle cut crosses between the triangles.
        assert_eq!(
            cuts,
            vec![
                norm(edge(&g, "a1", "a2"), edge(&g, "a1", "a3")),
                norm(edge(&g, "a2", "b2"), edge(&g, "a3", "b3")),
                norm(edge(&g, "b1", "b2"), edge(&g, "b1", "b3")),
            ]
        );
    }

    #[test]
    fn k5_minus_edge_has_no_cuts() {
        let g = fixtures::complete(5);
        let h = g.remove_edge(edge(&g, "v0", "v1")).unwrap();
        assert!(find_2_edge_cuts(&h, v(&g, "v0"), v(&g, "v1")).unwrap().is_empty());
    }

    #[test]
    fn cut_precondition_is_reported() {
        let g = fixtures::square();
        let err = find_2_edge_cuts(&g, v(&g, "s"), v(&g, "t")).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn report_serializes_with_group_sizes() {
        let g = fixtures::theta();
        let rep = epe(&g, v(&g, "s"), v(&g, "t")).unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["total_pairs"], 3);
        assert_eq!(json["groups"][0]["edges"][0]["size"], 1);
        assert_eq!(json["groups"][0]["rule"], "parallel");
    }
}
