//! Cycle constructions inside triconnected graphs.
//!
//! All routines work on simple graphs and build vertex sequences first;
//! edges are resolved and the result validated before it is returned.

use std::collections::VecDeque;

use serde::Serialize;

use crate::connectivity::{is_k_connected, vertex_disjoint_paths};
use crate::error::{internal, Error, Result};
use crate::graph::{Cycle, EdgeId, ElementRef, Graph, Path, VertexId};

/// Which branch of the three-edge construction produced a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriCase {
    /// The three edges form a triangle.
    Triangle,
    /// The edges form a path `v1 v2 v3 v4`.
    Chain,
    /// Two edges share an end vertex and the third is disjoint from both.
    SharedPair,
    /// Main case 1: the Menger paths link `t` to an end of `e1`.
    MainCase1,
    /// Main case 2: an `s`–`t` path avoids the cycle through `e1`, `e2`.
    MainCase2,
    /// Connectors from both `s` and `t` reach both sides of the cycle.
    Case1,
    /// One terminal reaches only one side, the other terminal reaches it too.
    Case2,
    /// A bridge ending south of the northernmost `s` attachment.
    Case3b1,
    /// A bridge ending south of the northernmost `t` attachment.
    Case3b2,
    /// Only northern or southern bridges; interleaved bypasses.
    Case3b3I,
    /// Only northern or southern bridges; one overall bypass.
    Case3b3II,
}

/// A cycle found by [`tri_cycle_three_edges`] with the branch that built it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriCycle {
    pub cycle: Cycle,
    pub case: TriCase,
}

/// A cycle through up to three elements of a triconnected graph, at most two
/// of which are edges.
pub fn tri_cycle_upto_two_edges(g: &Graph, elems: &[ElementRef]) -> Result<Cycle> {
    check_elements(g, elems)?;
    if elems.len() < 2 || elems.len() > 3 {
        return Err(Error::Precondition("expected two or three elements".into()));
    }
    if elems.iter().filter(|x| matches!(x, ElementRef::Edge(_))).count() > 2 {
        return Err(Error::Precondition("at most two elements may be edges".into()));
    }
    if !is_k_connected(g, 3)? {
        return Err(Error::NotTriconnected);
    }
    upto_two_edges(g, elems)
}

pub(crate) fn upto_two_edges(g: &Graph, elems: &[ElementRef]) -> Result<Cycle> {
    let mut ordered: Vec<ElementRef> = elems
        .iter()
        .copied()
        .filter(|x| matches!(x, ElementRef::Edge(_)))
        .collect();
    ordered.extend(elems.iter().copied().filter(|x| matches!(x, ElementRef::Vertex(_))));
    let mut cyc = base_cycle(g, ordered[0], ordered[1])?;
    let mut required = vec![ordered[0], ordered[1]];
    for &x in &ordered[2..] {
        let ElementRef::Vertex(w) = x else {
            return internal("third element must be a vertex");
        };
        if !cyc.contains(&w) {
            cyc = insert_vertex(g, &cyc, &required, w)?;
        }
        required.push(x);
    }
    finish_cycle(g, &cyc, elems)
}

fn base_cycle(g: &Graph, x: ElementRef, y: ElementRef) -> Result<Vec<VertexId>> {
    use ElementRef::{Edge, Vertex};
    match (x, y) {
        (Edge(e), Edge(f)) => {
            let (a, b) = ends(g, e)?;
            let (c, d) = ends(g, f)?;
            if let Some(m) = [a, b].into_iter().find(|&z| z == c || z == d) {
                let p = if m == a { b } else { a };
                let q = if m == c { d } else { c };
                let rest = g
                    .without_vertices(&[m])
                    .bfs_path(q, p)
                    .ok_or_else(|| Error::Internal("graph minus a vertex is disconnected".into()))?;
                let mut seq = vec![p, m];
                seq.extend_from_slice(&rest.vertices[..rest.vertices.len() - 1]);
                Ok(seq)
            } else {
                let ps = menger(g, &[a, b], &[c, d], 2)?;
                let (pa, pb) = by_first(&ps, a);
                let mut seq = pa.vertices.clone();
                seq.extend(pb.vertices.iter().rev());
                Ok(seq)
            }
        }
        (Edge(e), Vertex(w)) | (Vertex(w), Edge(e)) => {
            let (a, b) = ends(g, e)?;
            if w == a || w == b {
                let p = g
                    .without_edges(&[e])
                    .bfs_path(a, b)
                    .ok_or_else(|| Error::Internal("edge is a bridge".into()))?;
                Ok(p.vertices)
            } else {
                let ps = menger(g, &[w], &[a, b], 2)?;
                let (pa, pb) = by_last(&ps, a);
                let mut seq: Vec<VertexId> = pa.vertices.iter().rev().copied().collect();
                seq.extend_from_slice(&pb.vertices[1..]);
                Ok(seq)
            }
        }
        (Vertex(w1), Vertex(w2)) => {
            let ps = menger(g, &[w1], &[w2], 2)?;
            let mut seq = ps[0].vertices.clone();
            let back = &ps[1].vertices;
            seq.extend(back[1..back.len() - 1].iter().rev());
            Ok(seq)
        }
    }
}

/// Routes `w` into the cycle through a 3-fan, replacing one arc between fan
/// ends that carries no required element.
fn insert_vertex(
    g: &Graph,
    cyc: &[VertexId],
    required: &[ElementRef],
    w: VertexId,
) -> Result<Vec<VertexId>> {
    let n = cyc.len();
    let fan = menger(g, &[w], cyc, 3)?;
    let mut ends: Vec<(usize, &Path)> = fan
        .iter()
        .map(|p| (cyc.iter().position(|&v| v == p.last()).expect("fan ends on the cycle"), p))
        .collect();
    ends.sort_by_key(|&(i, _)| i);
    for k in 0..3 {
        let (i, pi) = ends[k];
        let (j, pj) = ends[(k + 1) % 3];
        let arc_len = (j + n - i) % n;
        let blocked = required.iter().any(|&x| match x {
            ElementRef::Vertex(v) => (1..arc_len).any(|d| cyc[(i + d) % n] == v),
            ElementRef::Edge(e) => {
                let (a, b) = g.endpoints(e).expect("checked edge");
                (0..arc_len).any(|d| {
                    let (p, q) = (cyc[(i + d) % n], cyc[(i + d + 1) % n]);
                    (p == a && q == b) || (p == b && q == a)
                })
            }
        });
        if blocked {
            continue;
        }
        // Keep f_j .. f_i, then return to f_j through w.
        let mut out: Vec<VertexId> = (0..=(n - arc_len)).map(|d| cyc[(j + d) % n]).collect();
        out.extend(pi.vertices[..pi.vertices.len() - 1].iter().rev());
        out.extend_from_slice(&pj.vertices[1..pj.vertices.len() - 1]);
        return Ok(out);
    }
    internal("no free arc for the 3-fan splice")
}

/// A cycle through three distinct edges of a triconnected graph, or `None`
/// when they share an end vertex or form an edge cut.
pub fn tri_cycle_three_edges(g: &Graph, e1: EdgeId, e2: EdgeId, e3: EdgeId) -> Result<Option<TriCycle>> {
    let elems = [e1, e2, e3].map(ElementRef::Edge);
    check_elements(g, &elems)?;
    if !is_k_connected(g, 3)? {
        return Err(Error::NotTriconnected);
    }
    three_edges(g, [e1, e2, e3])
}

pub(crate) fn three_edges(g: &Graph, es: [EdgeId; 3]) -> Result<Option<TriCycle>> {
    let ends3 = [ends(g, es[0])?, ends(g, es[1])?, ends(g, es[2])?];
    let touches = |i: usize, z: VertexId| ends3[i].0 == z || ends3[i].1 == z;
    for z in [ends3[0].0, ends3[0].1] {
        if touches(1, z) && touches(2, z) {
            return Ok(None);
        }
    }
    if !g.without_edges(&es).is_connected() {
        return Ok(None);
    }
    let shares = |i: usize, j: usize| touches(j, ends3[i].0) || touches(j, ends3[i].1);
    let pairs: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .filter(|&(i, j)| shares(i, j))
        .collect();
    let elems = es.map(ElementRef::Edge);
    let (seq, case) = match pairs.len() {
        3 => {
            let (a, b) = ends3[0];
            let c = if touches(1, a) { other(ends3[1], a) } else { other(ends3[1], b) };
            let seq = if touches(1, a) { vec![b, a, c] } else { vec![a, b, c] };
            (seq, TriCase::Triangle)
        }
        2 => {
            let mid = (0..3).find(|&m| pairs.iter().all(|&(i, j)| i == m || j == m)).expect("chain middle");
            let (v2, v3) = ends3[mid];
            let outer: Vec<usize> = (0..3).filter(|&i| i != mid).collect();
            let (ea, eb) = if touches(outer[0], v2) { (outer[0], outer[1]) } else { (outer[1], outer[0]) };
            let v1 = other(ends3[ea], v2);
            let v4 = other(ends3[eb], v3);
            let rest = g
                .without_vertices(&[v2, v3])
                .bfs_path(v4, v1)
                .ok_or_else(|| Error::Internal("graph minus two vertices is disconnected".into()))?;
            let mut seq = vec![v1, v2, v3];
            seq.extend_from_slice(&rest.vertices[..rest.vertices.len() - 1]);
            (seq, TriCase::Chain)
        }
        1 => {
            let (i, j) = pairs[0];
            let k = 3 - i - j;
            let v2 = if touches(j, ends3[i].0) { ends3[i].0 } else { ends3[i].1 };
            let v1 = other(ends3[i], v2);
            let v3 = other(ends3[j], v2);
            let (v4, v5) = ends3[k];
            let ps = menger(&g.without_vertices(&[v2]), &[v4, v5], &[v1, v3], 2)?;
            let (p4, p5) = by_first(&ps, v4);
            // v4 .. P4 .. x, v2, y .. P5 reversed .. v5, closed by (v5, v4).
            let mut seq = p4.vertices.clone();
            seq.push(v2);
            seq.extend(p5.vertices.iter().rev());
            (seq, TriCase::SharedPair)
        }
        _ => {
            let (s, t) = ends3[2];
            let (u, u2) = ends3[0];
            let (v, v2) = ends3[1];
            let (path, case) = main_case(g, s, t, (u, u2), (v, v2))?;
            (path, case)
        }
    };
    let cycle = finish_cycle(g, &seq, &elems)
        .map_err(|e| Error::Internal(format!("{case:?} construction produced an invalid cycle: {e}")))?;
    Ok(Some(TriCycle { cycle, case }))
}

/// All six end vertices distinct. Returns an `s`–`t` path through `e1` and
/// `e2`; the closing edge `(t, s)` is implied.
fn main_case(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    (u, u2): (VertexId, VertexId),
    (v, v2): (VertexId, VertexId),
) -> Result<(Vec<VertexId>, TriCase)> {
    let ps = menger(g, &[s, u, u2], &[t, v, v2], 3)?;
    let to_t = ps.iter().find(|p| p.last() == t).expect("a path reaches t");
    if to_t.first() != s {
        let a = to_t.first();
        let a2 = if a == u { u2 } else { u };
        let ps_s = starting_at(&ps, s)?;
        let pa2 = starting_at(&ps, a2)?;
        let mut seq = ps_s.vertices.clone();
        seq.extend(pa2.vertices.iter().rev());
        seq.extend_from_slice(&to_t.vertices);
        return Ok((seq, TriCase::MainCase1));
    }
    let pu = starting_at(&ps, u)?;
    let pu2 = starting_at(&ps, u2)?;
    let frame = Frame {
        left: pu.vertices.clone(),
        right: pu2.vertices.clone(),
    };
    let mut pst = to_t.vertices.clone();
    if pst.len() == 2 {
        let on_l: Vec<VertexId> = frame.vertices().collect();
        let e3 = g.edge_between(s, t).expect("e3 joins s and t");
        if let Some(p) = g.without_vertices(&on_l).without_edges(&[e3]).bfs_path(s, t) {
            pst = p.vertices;
        }
    }
    if pst.len() >= 3 {
        let seq = detour_through_theta(g, &frame, &pst)?;
        return Ok((seq, TriCase::MainCase2));
    }
    lemma_no_detour(g, &frame, s, t)
}

/// The cycle `L` through `e1 = (left[0], right[0])` and
/// `e2 = (left.last, right.last)`, split into its two sides, each listed
/// south (the `e1` end) to north (the `e2` end).
#[derive(Clone, Debug)]
struct Frame {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Left,
    Right,
}

impl Frame {
    fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.left.iter().chain(self.right.iter()).copied()
    }

    fn locate(&self, x: VertexId) -> Option<(Side, usize)> {
        if let Some(i) = self.left.iter().position(|&y| y == x) {
            return Some((Side::Left, i));
        }
        self.right.iter().position(|&y| y == x).map(|i| (Side::Right, i))
    }

    fn side(&self, s: Side) -> &[VertexId] {
        match s {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    fn swapped(&self) -> Frame {
        Frame {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    fn mirrored(&self) -> Frame {
        let mut left = self.left.clone();
        let mut right = self.right.clone();
        left.reverse();
        right.reverse();
        Frame { left, right }
    }
}

/// Splice two disjoint paths `p1` (from `s`) and `p2` (from `t`) that end on
/// the same side of the frame into an `s`–`t` path using both cross edges.
fn splice(frame: &Frame, p1: &[VertexId], p2: &[VertexId]) -> Result<Vec<VertexId>> {
    let f1 = *p1.last().expect("non-empty path");
    let f2 = *p2.last().expect("non-empty path");
    let (Some((s1, i1)), Some((s2, i2))) = (frame.locate(f1), frame.locate(f2)) else {
        return Err(Error::Precondition("splice paths must end on the cycle".into()));
    };
    if s1 != s2 || i1 == i2 {
        return Err(Error::Precondition(
            "splice paths must end at distinct vertices of one side".into(),
        ));
    }
    let x = frame.side(s1);
    let y = frame.side(if s1 == Side::Left { Side::Right } else { Side::Left });
    let mut seq = p1.to_vec();
    if i1 > i2 {
        seq.extend_from_slice(&x[i1 + 1..]);
        seq.extend(y.iter().rev());
        seq.extend_from_slice(&x[..i2]);
    } else {
        seq.extend(x[..i1].iter().rev());
        seq.extend_from_slice(y);
        seq.extend(x[i2 + 1..].iter().rev());
    }
    seq.extend(p2.iter().rev());
    Ok(seq)
}

/// Path-splice: given the cycle `L` through non-adjacent edges `e1`, `e2`
/// and vertex-disjoint paths `p1`, `p2` from outside `L` to the same side of
/// `L`, returns a simple path from `p1.first()` to `p2.first()` through both
/// edges.
pub fn path_splice(g: &Graph, cycle: &Cycle, e1: EdgeId, e2: EdgeId, p1: &Path, p2: &Path) -> Result<Path> {
    cycle.validate(g)?;
    p1.validate(g)?;
    p2.validate(g)?;
    let n = cycle.len();
    let pos = |e: EdgeId| {
        cycle
            .edges
            .iter()
            .position(|&f| f == e)
            .ok_or_else(|| Error::Precondition("edge is not on the cycle".into()))
    };
    let (i, j) = (pos(e1)?, pos(e2)?);
    let (a, b) = (cycle.vertices[i], cycle.vertices[(i + 1) % n]);
    let (c, d) = (cycle.vertices[j], cycle.vertices[(j + 1) % n]);
    if [a, b].iter().any(|z| *z == c || *z == d) {
        return Err(Error::Precondition("cycle edges must not share an end".into()));
    }
    // Walking forward from b reaches c; walking forward from d reaches a.
    let right: Vec<VertexId> = (0..n)
        .map(|k| cycle.vertices[(i + 1 + k) % n])
        .take_while(|&z| z != d)
        .collect();
    let mut left: Vec<VertexId> = (0..n)
        .map(|k| cycle.vertices[(j + 1 + k) % n])
        .take_while(|&z| z != b)
        .collect();
    left.reverse();
    let frame = Frame { left, right };
    for p in [p1, p2] {
        if p.vertices[..p.vertices.len() - 1].iter().any(|&z| frame.locate(z).is_some()) {
            return Err(Error::Precondition("splice path meets the cycle early".into()));
        }
    }
    if p1.vertices.iter().any(|z| p2.vertices.contains(z)) {
        return Err(Error::Precondition("splice paths are not disjoint".into()));
    }
    let seq = splice(&frame, &p1.vertices, &p2.vertices)?;
    let path = Path::from_vertices(g, &seq)?;
    path.validate(g)?;
    Ok(path)
}

/// Main case 2 with an `s`–`t` path `pst` of at least three vertices that
/// avoids the frame: three disjoint paths from `pst` to the cycle, two of
/// which land on one side.
fn detour_through_theta(g: &Graph, frame: &Frame, pst: &[VertexId]) -> Result<Vec<VertexId>> {
    let on_l: Vec<VertexId> = frame.vertices().collect();
    let ps = menger(g, pst, &on_l, 3)?;
    for side in [Side::Left, Side::Right] {
        let mut hits: Vec<(usize, &Path)> = ps
            .iter()
            .filter(|p| frame.locate(p.last()).map(|l| l.0) == Some(side))
            .map(|p| (pst.iter().position(|&z| z == p.first()).expect("starts on pst"), p))
            .collect();
        if hits.len() < 2 {
            continue;
        }
        hits.sort_by_key(|&(i, _)| i);
        let (b1, q1) = hits[0];
        let (b2, q2) = hits[1];
        let mut p1 = pst[..b1].to_vec();
        p1.extend_from_slice(&q1.vertices);
        let mut p2: Vec<VertexId> = pst[b2 + 1..].iter().rev().copied().collect();
        p2.extend_from_slice(&q2.vertices);
        return splice(frame, &p1, &p2);
    }
    internal("pigeonhole failed for paths onto the cycle")
}

const NONE: u32 = u32::MAX;

/// Attachment structure of the graph around the frame, with `s` and `t`
/// outside the cycle and no `s`–`t` path avoiding it other than `(s,t)`.
struct Around<'a> {
    g: &'a Graph,
    frame: &'a Frame,
    s: VertexId,
    /// Component of `G - L - {s,t}` for every other vertex.
    comp: Vec<u32>,
    comp_touches_s: Vec<bool>,
    comp_touches_t: Vec<bool>,
    /// Attachments of each component on the cycle, as (side, position).
    comp_attach: Vec<Vec<(Side, usize)>>,
}

#[derive(Clone, Copy, Debug)]
struct Bridge {
    l: usize,
    r: usize,
    comp: Option<u32>,
}

#[derive(Clone, Copy)]
struct Unit {
    lo: usize,
    hi: usize,
    comp: Option<u32>,
}

impl<'a> Around<'a> {
    fn new(g: &'a Graph, frame: &'a Frame, s: VertexId, t: VertexId) -> Result<Around<'a>> {
        let n = g.vertex_universe();
        let mut blocked = vec![false; n];
        for z in frame.vertices() {
            blocked[z.index()] = true;
        }
        blocked[s.index()] = true;
        blocked[t.index()] = true;
        let mut comp = vec![NONE; n];
        let mut count = 0u32;
        for start in g.vertices() {
            if blocked[start.index()] || comp[start.index()] != NONE {
                continue;
            }
            comp[start.index()] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in g.neighbors(x) {
                    if !blocked[y.index()] && comp[y.index()] == NONE {
                        comp[y.index()] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        let k = count as usize;
        let mut comp_touches_s = vec![false; k];
        let mut comp_touches_t = vec![false; k];
        let mut comp_attach = vec![Vec::new(); k];
        for x in g.vertices() {
            let c = comp[x.index()];
            if c == NONE {
                continue;
            }
            for &(y, _) in g.neighbors(x) {
                if y == s {
                    comp_touches_s[c as usize] = true;
                } else if y == t {
                    comp_touches_t[c as usize] = true;
                } else if let Some(l) = frame.locate(y) {
                    comp_attach[c as usize].push(l);
                }
            }
        }
        for a in &mut comp_attach {
            a.sort_by_key(|&(s, i)| (s == Side::Right, i));
            a.dedup();
        }
        if (0..k).any(|c| comp_touches_s[c] && comp_touches_t[c]) {
            return internal("an s-t path avoids the cycle");
        }
        Ok(Around {
            g,
            frame,
            s,
            comp,
            comp_touches_s,
            comp_touches_t,
            comp_attach,
        })
    }

    fn region(&self, x: VertexId) -> bool {
        let c = self.comp[x.index()];
        c != NONE && self.comp_touches_s[c as usize]
    }

    fn region_t(&self, x: VertexId) -> bool {
        let c = self.comp[x.index()];
        c != NONE && self.comp_touches_t[c as usize]
    }

    /// Positions on `side` where connectors from `terminal` end, ascending.
    fn connector_ends(&self, terminal: VertexId, side: Side) -> Vec<usize> {
        let touches = if terminal == self.s {
            &self.comp_touches_s
        } else {
            &self.comp_touches_t
        };
        let mut out: Vec<usize> = self
            .g
            .neighbors(terminal)
            .iter()
            .filter_map(|&(y, _)| self.frame.locate(y))
            .filter(|l| l.0 == side)
            .map(|l| l.1)
            .collect();
        for (c, att) in self.comp_attach.iter().enumerate() {
            if touches[c] {
                out.extend(att.iter().filter(|l| l.0 == side).map(|l| l.1));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A connector from `terminal` to the cycle vertex `to`.
    fn connector(&self, terminal: VertexId, to: VertexId) -> Result<Vec<VertexId>> {
        if self.g.edge_between(terminal, to).is_some() {
            return Ok(vec![terminal, to]);
        }
        let allowed = |x: VertexId| {
            if terminal == self.s {
                self.region(x)
            } else {
                self.region_t(x)
            }
        };
        region_path(self.g, terminal, to, allowed)
            .ok_or_else(|| Error::Internal("external connector not found".into()))
    }

    /// Bridges between the left and right sides, as end-position pairs. Only
    /// cross chords and components attached to both sides carry bridges.
    fn bridges(&self) -> Vec<Bridge> {
        let f = self.frame;
        let (ln, rn) = (f.left.len(), f.right.len());
        let mut out = Vec::new();
        for (l, &a) in f.left.iter().enumerate() {
            for &(y, _) in self.g.neighbors(a) {
                if let Some((Side::Right, r)) = f.locate(y) {
                    let is_e1 = l == 0 && r == 0;
                    let is_e2 = l == ln - 1 && r == rn - 1;
                    if !is_e1 && !is_e2 {
                        out.push(Bridge { l, r, comp: None });
                    }
                }
            }
        }
        for (c, att) in self.comp_attach.iter().enumerate() {
            if self.comp_touches_s[c] || self.comp_touches_t[c] {
                continue;
            }
            for &(sa, l) in att {
                for &(sb, r) in att {
                    if sa == Side::Left && sb == Side::Right {
                        out.push(Bridge {
                            l,
                            r,
                            comp: Some(c as u32),
                        });
                    }
                }
            }
        }
        out.sort_by_key(|b| (b.l, b.r, b.comp));
        out
    }

    /// Vertex sequence of a bridge from its left end to its right end.
    fn bridge_path(&self, b: Bridge) -> Result<Vec<VertexId>> {
        let (a, z) = (self.frame.left[b.l], self.frame.right[b.r]);
        match b.comp {
            None => Ok(vec![a, z]),
            Some(c) => region_path(self.g, a, z, |x| self.comp[x.index()] == c)
                .ok_or_else(|| Error::Internal("bridge path not found".into())),
        }
    }

    /// Pure bypass units on the left side: chords and components attached
    /// only to the left side.
    fn left_units(&self) -> Vec<Unit> {
        let f = self.frame;
        let mut out = Vec::new();
        for (i, &a) in f.left.iter().enumerate() {
            for &(y, _) in self.g.neighbors(a) {
                if let Some((Side::Left, j)) = f.locate(y) {
                    if j > i + 1 {
                        out.push(Unit { lo: i, hi: j, comp: None });
                    }
                }
            }
        }
        for (c, att) in self.comp_attach.iter().enumerate() {
            if self.comp_touches_s[c] || self.comp_touches_t[c] || att.len() < 2 {
                continue;
            }
            if att.iter().any(|l| l.0 == Side::Right) {
                continue;
            }
            out.push(Unit {
                lo: att[0].1,
                hi: att[att.len() - 1].1,
                comp: Some(c as u32),
            });
        }
        out
    }

    /// The bypass graph: units plus the left side between `lo` and `hi`.
    fn bypass_graph(&self, units: &[Unit], lo: usize, hi: usize) -> Result<Graph> {
        let f = self.frame;
        let g = self.g;
        let mut edges: Vec<EdgeId> = Vec::new();
        for i in lo..hi {
            edges.push(g.edge_between(f.left[i], f.left[i + 1]).expect("cycle edge"));
        }
        for u in units {
            match u.comp {
                None => edges.push(g.edge_between(f.left[u.lo], f.left[u.hi]).expect("chord")),
                Some(c) => {
                    for (e, a, b) in g.edges() {
                        let ca = self.comp[a.index()] == c;
                        let cb = self.comp[b.index()] == c;
                        if (ca && cb) || (ca && f.locate(b).is_some()) || (cb && f.locate(a).is_some()) {
                            edges.push(e);
                        }
                    }
                }
            }
        }
        edges.sort();
        edges.dedup();
        g.edge_subgraph(&edges)
    }
}

/// Shortest path from `from` to `to` whose interior vertices all satisfy
/// `allowed` (and there is at least one interior vertex).
fn region_path(
    g: &Graph,
    from: VertexId,
    to: VertexId,
    allowed: impl Fn(VertexId) -> bool,
) -> Option<Vec<VertexId>> {
    let mut parent = vec![NONE; g.vertex_universe()];
    let mut queue = VecDeque::new();
    for &(y, _) in g.neighbors(from) {
        if y != to && allowed(y) && parent[y.index()] == NONE {
            parent[y.index()] = from.0;
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        if g.edge_between(x, to).is_some() {
            let mut seq = vec![to, x];
            let mut cur = x;
            while parent[cur.index()] != from.0 {
                cur = VertexId(parent[cur.index()]);
                seq.push(cur);
            }
            seq.push(from);
            seq.reverse();
            return Some(seq);
        }
        for &(y, _) in g.neighbors(x) {
            if y != from && y != to && allowed(y) && parent[y.index()] == NONE {
                parent[y.index()] = x.0;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Only `(s,t)` joins `s` to `t` off the cycle: the connector, bridge and
/// bypass analysis.
fn lemma_no_detour(g: &Graph, frame: &Frame, s: VertexId, t: VertexId) -> Result<(Vec<VertexId>, TriCase)> {
    let ar = Around::new(g, frame, s, t)?;
    let ends = |x: VertexId, side: Side| ar.connector_ends(x, side);
    let all_four = [Side::Left, Side::Right]
        .iter()
        .all(|&sd| !ends(s, sd).is_empty() && !ends(t, sd).is_empty());
    for side in [Side::Left, Side::Right] {
        let x = frame.side(side);
        for &i in &ends(s, side) {
            if let Some(&j) = ends(t, side).iter().find(|&&j| j != i) {
                let p1 = ar.connector(s, x[i])?;
                let p2 = ar.connector(t, x[j])?;
                let case = if all_four { TriCase::Case1 } else { TriCase::Case2 };
                return Ok((splice(frame, &p1, &p2)?, case));
            }
        }
    }
    let frame = if ends(s, Side::Left).is_empty() {
        frame.swapped()
    } else {
        frame.clone()
    };
    case3(g, &frame, s, t)
}

fn case3(g: &Graph, frame: &Frame, s: VertexId, t: VertexId) -> Result<(Vec<VertexId>, TriCase)> {
    let ar = Around::new(g, frame, s, t)?;
    if !ar.connector_ends(s, Side::Right).is_empty() || !ar.connector_ends(t, Side::Left).is_empty() {
        return internal("connectors are not separated by side");
    }
    let bridges = ar.bridges();
    if bridges.is_empty() {
        return internal("no bridge although the edges are not a cut");
    }
    let se = ar.connector_ends(s, Side::Left);
    let te = ar.connector_ends(t, Side::Right);
    if se.len() < 2 || te.len() < 2 {
        return internal("fewer than two external vertices on a side");
    }
    let (vs, vn) = (se[0], se[se.len() - 1]);
    let (ws, wn) = (te[0], te[te.len() - 1]);
    let (left, right) = (&frame.left, &frame.right);

    if let Some(&b) = bridges.iter().find(|b| b.l < vn && b.r > ws) {
        let mut seq = ar.connector(s, left[vn])?;
        seq.extend_from_slice(&left[vn + 1..]);
        seq.extend(right[b.r..].iter().rev());
        let bp = ar.bridge_path(b)?;
        seq.extend(bp[1..bp.len() - 1].iter().rev());
        seq.extend(left[..=b.l].iter().rev());
        seq.extend_from_slice(&right[..ws]);
        let pt = ar.connector(t, right[ws])?;
        seq.extend(pt.iter().rev());
        return Ok((seq, TriCase::Case3b1));
    }
    if let Some(&b) = bridges.iter().find(|b| b.r < wn && b.l > vs) {
        let mut seq = ar.connector(s, left[vs])?;
        seq.extend(left[..vs].iter().rev());
        seq.extend_from_slice(&right[..=b.r]);
        let bp = ar.bridge_path(b)?;
        seq.extend(bp[1..bp.len() - 1].iter().rev());
        seq.extend_from_slice(&left[b.l..]);
        seq.extend(right[wn + 1..].iter().rev());
        let pt = ar.connector(t, right[wn])?;
        seq.extend(pt.iter().rev());
        return Ok((seq, TriCase::Case3b2));
    }

    let northern = |ar: &Around, vn: usize, wn: usize| {
        ar.bridges().into_iter().any(|b| b.l >= vn && b.r >= wn)
    };
    let frame = if northern(&ar, vn, wn) {
        frame.clone()
    } else {
        frame.mirrored()
    };
    if let Some(r) = case3b3(g, &frame, s, t)? {
        return Ok(r);
    }
    if let Some((mut seq, case)) = case3b3(g, &frame.swapped(), t, s)? {
        seq.reverse();
        return Ok((seq, case));
    }
    internal("neither side has bypasses around the northern bridges")
}

/// Two disjoint paths and whether their ends interleave along the frame.
type PathPair = (Vec<VertexId>, Vec<VertexId>, bool);

/// Case 3b3 on the left side of `frame`; `None` when some vertex between the
/// northernmost external vertex and the bridge has no bypass.
fn case3b3(g: &Graph, frame: &Frame, s: VertexId, t: VertexId) -> Result<Option<(Vec<VertexId>, TriCase)>> {
    let ar = Around::new(g, frame, s, t)?;
    let se = ar.connector_ends(s, Side::Left);
    let te = ar.connector_ends(t, Side::Right);
    let vn = se[se.len() - 1];
    let (ws, wn) = (te[0], te[te.len() - 1]);
    let Some(b) = ar
        .bridges()
        .into_iter()
        .filter(|b| b.l >= vn && b.r >= wn)
        .min_by_key(|b| (b.l, b.r))
    else {
        return Ok(None);
    };
    let vb = b.l;
    let units = ar.left_units();
    let covers = |u: &Unit, z: usize| u.lo < z && z < u.hi;
    if !(vn..=vb).all(|z| units.iter().any(|u| covers(u, z))) {
        return Ok(None);
    }
    let chosen: Vec<Unit> = units
        .iter()
        .copied()
        .filter(|u| (vn..=vb).any(|z| covers(u, z)))
        .collect();
    let hi = chosen.iter().map(|u| u.hi).max().expect("coverage is non-empty");
    let lo = chosen.iter().map(|u| u.lo).min().expect("coverage is non-empty");
    let (left, right) = (&frame.left, &frame.right);

    let bp = ar.bridge_path(b)?;
    // Two disjoint paths inside the bypass graph, returned as
    // (path from v_No, path from v_B, interleaved).
    let paths = |units: &[Unit]| -> Result<Option<PathPair>> {
        let gbp = ar.bypass_graph(units, lo, hi)?;
        if vb == vn {
            let p = gbp.without_vertices(&[left[vn]]).bfs_path(left[hi], left[lo]);
            return Ok(p.map(|p| (p.vertices, vec![left[vn]], false)));
        }
        let Some(ps) = vertex_disjoint_paths(&gbp, &[left[hi], left[vb]], &[left[vn], left[lo]], 2)? else {
            return Ok(None);
        };
        let (p_no, p_b) = by_first(&ps, left[hi]);
        let interleaved = p_no.last() == left[vn];
        Ok(Some((p_no.vertices.clone(), p_b.vertices.clone(), interleaved)))
    };
    let middle = |units: &[Unit]| -> Result<Option<(Vec<VertexId>, bool)>> {
        let Some((p_no, p_b, interleaved)) = paths(units)? else {
            return Ok(None);
        };
        let mut m = Vec::new();
        if interleaved {
            // N -> No, north to v, e2, south to v'_B, across B, B -> So.
            m.extend(p_no.iter().rev());
            m.extend_from_slice(&left[hi + 1..]);
            m.extend(right[b.r..].iter().rev());
            m.extend(bp[1..bp.len() - 1].iter().rev());
            m.extend_from_slice(&p_b);
        } else {
            // N -> B, across B, north to v', e2, south to No, No -> So.
            m.extend(p_b.iter().rev());
            m.extend_from_slice(&bp[1..]);
            m.extend_from_slice(&right[b.r + 1..]);
            m.extend(left[hi..].iter().rev());
            m.extend_from_slice(&p_no[1..]);
        }
        Ok(Some((m, interleaved)))
    };
    let found = match middle(&chosen)? {
        Some(m) => Some(m),
        None => {
            let wider: Vec<Unit> = units.iter().copied().filter(|u| u.lo >= lo && u.hi <= hi).collect();
            middle(&wider)?
        }
    };
    let Some((mid, interleaved)) = found else {
        return internal("bypass graph lacks two disjoint paths");
    };
    let mut seq = ar.connector(s, left[vn])?;
    seq.pop();
    seq.extend_from_slice(&mid);
    seq.extend(left[..lo].iter().rev());
    seq.extend_from_slice(&right[..ws]);
    let pt = ar.connector(t, right[ws])?;
    seq.extend(pt.iter().rev());
    let case = if interleaved {
        TriCase::Case3b3I
    } else {
        TriCase::Case3b3II
    };
    Ok(Some((seq, case)))
}

fn check_elements(g: &Graph, elems: &[ElementRef]) -> Result<()> {
    for (i, &x) in elems.iter().enumerate() {
        g.check_element(x)?;
        if elems[..i].contains(&x) {
            return Err(Error::NonDistinctElements);
        }
    }
    Ok(())
}

fn ends(g: &Graph, e: EdgeId) -> Result<(VertexId, VertexId)> {
    g.endpoints(e).ok_or(Error::UnknownEdge(e))
}

fn other((a, b): (VertexId, VertexId), x: VertexId) -> VertexId {
    if a == x {
        b
    } else {
        a
    }
}

fn menger(g: &Graph, a: &[VertexId], b: &[VertexId], k: usize) -> Result<Vec<Path>> {
    vertex_disjoint_paths(g, a, b, k)?
        .ok_or_else(|| Error::Internal(format!("expected {k} disjoint paths")))
}

fn by_first(ps: &[Path], x: VertexId) -> (&Path, &Path) {
    if ps[0].first() == x {
        (&ps[0], &ps[1])
    } else {
        (&ps[1], &ps[0])
    }
}

fn starting_at(ps: &[Path], x: VertexId) -> Result<&Path> {
    ps.iter()
        .find(|p| p.first() == x)
        .ok_or_else(|| Error::Internal("no Menger path from an expected vertex".into()))
}

fn by_last(ps: &[Path], x: VertexId) -> (&Path, &Path) {
    if ps[0].last() == x {
        (&ps[0], &ps[1])
    } else {
        (&ps[1], &ps[0])
    }
}

fn finish_cycle(g: &Graph, seq: &[VertexId], elems: &[ElementRef]) -> Result<Cycle> {
    let cycle = Cycle::from_vertices(g, seq)?;
    cycle.validate(g)?;
    if let Some(x) = elems.iter().find(|&&x| !cycle.contains(x)) {
        return internal(format!("constructed cycle misses {x:?}"));
    }
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;

    /// Planted frame with `s` attached to the left side and `t` to the right
    /// side only, plus random chords, bridges and one-sided hubs.
    fn planted(seed: u64) -> Option<(Graph, Frame, VertexId, VertexId)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = rng.gen_range(3..7u32);
        let b = rng.gen_range(3..7u32);
        let hubs = rng.gen_range(0..3u32);
        let (s, t) = (a + b, a + b + 1);
        let n = a + b + 2 + hubs;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let add = |x: u32, y: u32, edges: &mut Vec<(u32, u32)>| {
            let e = (x.min(y), x.max(y));
            if x != y && !edges.contains(&e) {
                edges.push(e);
            }
        };
        for i in 0..a - 1 {
            add(i, i + 1, &mut edges);
        }
        for i in 0..b - 1 {
            add(a + i, a + i + 1, &mut edges);
        }
        add(0, a, &mut edges);
        add(a - 1, a + b - 1, &mut edges);
        add(s, t, &mut edges);
        for _ in 0..rng.gen_range(2..4) {
            add(s, rng.gen_range(0..a), &mut edges);
            add(t, a + rng.gen_range(0..b), &mut edges);
        }
        for _ in 0..rng.gen_range(1..6) {
            match rng.gen_range(0..3) {
                0 => add(rng.gen_range(0..a), a + rng.gen_range(0..b), &mut edges),
                1 => add(rng.gen_range(0..a), rng.gen_range(0..a), &mut edges),
                _ => add(a + rng.gen_range(0..b), a + rng.gen_range(0..b), &mut edges),
            }
        }
        for h in 0..hubs {
            let hub = a + b + 2 + h;
            let (lo, len) = if rng.gen_bool(0.5) { (0, a) } else { (a, b) };
            for _ in 0..3 {
                add(hub, lo + rng.gen_range(0..len), &mut edges);
            }
        }
        let g = Graph::from_edges(n as usize, &edges).ok()?;
        if !is_k_connected(&g, 3).ok()? {
            return None;
        }
        let frame = Frame {
            left: (0..a).map(VertexId).collect(),
            right: (a..a + b).map(VertexId).collect(),
        };
        Some((g, frame, VertexId(s), VertexId(t)))
    }

    #[test]
    fn lemma_cases_on_planted_frames() {
        let mut cases: BTreeMap<String, usize> = BTreeMap::new();
        let mut tried = 0;
        for seed in 0..60_000u64 {
            let Some((g, frame, s, t)) = planted(seed) else {
                continue;
            };
            tried += 1;
            let e1 = g.edge_between(frame.left[0], frame.right[0]).unwrap();
            let e2 = g
                .edge_between(*frame.left.last().unwrap(), *frame.right.last().unwrap())
                .unwrap();
            let e3 = g.edge_between(s, t).unwrap();
            let cut = !g.without_edges(&[e1, e2, e3]).is_connected();
            if cut {
                continue;
            }
            let (seq, case) = lemma_no_detour(&g, &frame, s, t)
                .unwrap_or_else(|e| panic!("seed {seed}: {e}\n{}", g.to_edge_list()));
            let cycle = finish_cycle(&g, &seq, &[e1, e2, e3].map(ElementRef::Edge))
                .unwrap_or_else(|e| panic!("seed {seed} {case:?} {seq:?}: {e}\n{}", g.to_edge_list()));
            assert!(cycle.len() >= 6);
            *cases.entry(format!("{case:?}")).or_default() += 1;
        }
        eprintln!("planted frames: {tried} {cases:?}");
        for c in ["Case3b1", "Case3b2", "Case3b3I", "Case3b3II"] {
            assert!(cases.contains_key(c), "{c} never exercised");
        }
    }
}
