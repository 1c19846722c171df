//! Iterative Hopcroft–Tarjan biconnected components over a compact
//! adjacency structure. Shared by the block finder and the SPQR builder,
//! which runs it once per candidate separation vertex.

pub(crate) const NONE: u32 = u32::MAX;

/// Compressed adjacency over dense vertex indices `0..n`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Csr {
    start: Vec<u32>,
    nbr: Vec<u32>,
    eid: Vec<u32>,
}

impl Csr {
    /// Builds the structure from `(u, v)` pairs; edge `i` gets index `i`.
    /// Neighbour lists are sorted by neighbour index.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Csr {
        let mut deg = vec![0u32; n + 1];
        for &(u, v) in edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        let mut start = vec![0u32; n + 1];
        for i in 0..n {
            start[i + 1] = start[i] + deg[i];
        }
        let mut fill = start.clone();
        let mut nbr = vec![0u32; 2 * edges.len()];
        let mut eid = vec![0u32; 2 * edges.len()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let pu = fill[u as usize] as usize;
            nbr[pu] = v;
            eid[pu] = i as u32;
            fill[u as usize] += 1;
            let pv = fill[v as usize] as usize;
            nbr[pv] = u;
            eid[pv] = i as u32;
            fill[v as usize] += 1;
        }
        // Transposing the edge-ordered lists yields lists sorted by
        // (neighbour, edge index) in linear time.
        let mut fill = start.clone();
        let mut sorted_nbr = vec![0u32; nbr.len()];
        let mut sorted_eid = vec![0u32; eid.len()];
        for w in 0..n {
            for i in start[w] as usize..start[w + 1] as usize {
                let x = nbr[i] as usize;
                let p = fill[x] as usize;
                sorted_nbr[p] = w as u32;
                sorted_eid[p] = eid[i];
                fill[x] += 1;
            }
        }
        let (nbr, eid) = (sorted_nbr, sorted_eid);
        Csr { start, nbr, eid }
    }

    pub fn n(&self) -> usize {
        self.start.len() - 1
    }

    pub fn m(&self) -> usize {
        self.nbr.len() / 2
    }

    #[inline]
    pub fn range(&self, v: usize) -> std::ops::Range<usize> {
        self.start[v] as usize..self.start[v + 1] as usize
    }

    #[inline]
    pub fn nbr(&self, i: usize) -> usize {
        self.nbr[i] as usize
    }

    #[inline]
    pub fn eid(&self, i: usize) -> usize {
        self.eid[i] as usize
    }

    pub fn degree(&self, v: usize) -> usize {
        self.range(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let r = self.range(u);
        self.nbr[r].binary_search(&(v as u32)).is_ok()
    }
}

/// Reusable buffers and results of one biconnected-components run.
#[derive(Default)]
pub(crate) struct Bcc {
    pub disc: Vec<u32>,
    pub low: Vec<u32>,
    /// One past the largest discovery index in the DFS subtree of a vertex.
    pub sub_end: Vec<u32>,
    /// Vertices in discovery order.
    pub order: Vec<u32>,
    pub parent: Vec<u32>,
    /// Number of blocks containing each vertex.
    pub block_count: Vec<u32>,
    /// Block index of each edge (`NONE` for edges touching the skipped vertex).
    pub block_of_edge: Vec<u32>,
    pub blocks: usize,
    /// Number of DFS trees (connected components, skipped vertex excluded).
    pub trees: usize,
    frames: Vec<(u32, u32, u32)>,
    edge_stack: Vec<u32>,
}

impl Bcc {
    /// Runs the decomposition on `csr`, ignoring vertex `skip` if given.
    pub fn run(&mut self, csr: &Csr, skip: Option<usize>) {
        let n = csr.n();
        let m = csr.m();
        self.disc.clear();
        self.disc.resize(n, NONE);
        self.low.clear();
        self.low.resize(n, 0);
        self.sub_end.clear();
        self.sub_end.resize(n, 0);
        self.parent.clear();
        self.parent.resize(n, NONE);
        self.block_count.clear();
        self.block_count.resize(n, 0);
        self.block_of_edge.clear();
        self.block_of_edge.resize(m, NONE);
        self.order.clear();
        self.blocks = 0;
        self.trees = 0;
        let skip = skip.map(|s| s as u32).unwrap_or(NONE);
        let mut time = 0u32;
        for root in 0..n as u32 {
            if root == skip || self.disc[root as usize] != NONE {
                continue;
            }
            self.trees += 1;
            self.disc[root as usize] = time;
            self.low[root as usize] = time;
            self.order.push(root);
            time += 1;
            self.frames.clear();
            self.frames
                .push((root, NONE, csr.range(root as usize).start as u32));
            while let Some(frame) = self.frames.last_mut() {
                let v = frame.0 as usize;
                let end = csr.range(v).end;
                if (frame.2 as usize) < end {
                    let i = frame.2 as usize;
                    frame.2 += 1;
                    let parent_edge = frame.1;
                    let w = csr.nbr(i);
                    let e = csr.eid(i) as u32;
                    if w as u32 == skip || e == parent_edge {
                        continue;
                    }
                    if self.disc[w] == NONE {
                        self.edge_stack.push(e);
                        self.disc[w] = time;
                        self.low[w] = time;
                        self.parent[w] = v as u32;
                        self.order.push(w as u32);
                        time += 1;
                        self.frames.push((w as u32, e, csr.range(w).start as u32));
                    } else if self.disc[w] < self.disc[v] {
                        self.edge_stack.push(e);
                        if self.disc[w] < self.low[v] {
                            self.low[v] = self.disc[w];
                        }
                    }
                } else {
                    let (_, tree_edge, _) = self.frames.pop().expect("frame exists");
                    self.sub_end[v] = time;
                    if let Some(&(p, _, _)) = self.frames.last() {
                        let p = p as usize;
                        if self.low[v] < self.low[p] {
                            self.low[p] = self.low[v];
                        }
                        if self.low[v] >= self.disc[p] {
                            let b = self.blocks as u32;
                            self.blocks += 1;
                            while let Some(f) = self.edge_stack.pop() {
                                self.block_of_edge[f as usize] = b;
                                if f == tree_edge {
                                    break;
                                }
                            }
                            self.block_count[p] += 1;
                        }
                    }
                }
            }
        }
        // A non-root vertex also lies in the block of its own tree edge.
        for v in 0..n {
            if self.parent[v] != NONE {
                self.block_count[v] += 1;
            }
        }
    }

    /// True when vertex `v` belongs to at least two blocks.
    #[inline]
    pub fn is_articulation(&self, v: usize) -> bool {
        self.block_count[v] >= 2
    }

    /// True when the processed graph is connected and has no articulation
    /// vertex. Graphs with fewer than two vertices count as biconnected.
    pub fn biconnected(&self, considered_vertices: usize) -> bool {
        if considered_vertices <= 1 {
            return true;
        }
        self.trees == 1 && self.blocks == 1
    }
}
