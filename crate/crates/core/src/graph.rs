//! Simple undirected graphs of maximum degree three, plus the block-cut tree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Maximum vertex degree supported everywhere in this crate.
pub const MAX_DEGREE: usize = 3;

/// Provenance of a vertex. Anything other than `Original` is a degree-2
/// dummy introduced by a construction and can be smoothed away again.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum VertexKind {
    #[default]
    Original,
    Subdivision,
    Bend,
    Corner,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex {0} has degree greater than 3")]
    DegreeExceeded(VertexId),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    DanglingIndex(usize, usize, usize),
    #[error("smoothing vertex {0} would create a multi-edge")]
    SmoothWouldCreateMultiEdge(VertexId),
    #[error("vertex {0} does not have degree 2")]
    NotDegreeTwo(VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no edge with id {0}")]
    NoSuchEdge(EdgeId),
}

/// A validated simple graph with `Δ ≤ 3`. Edges are stored with their
/// endpoints ordered `(lower, higher)`; edge ids are positions in the input list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<EdgeId>>,
    kinds: Vec<VertexKind>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_kinds(vec![VertexKind::Original; n], edges)
    }

    pub fn with_kinds(kinds: Vec<VertexKind>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = kinds.len();
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(GraphError::DanglingIndex(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            for v in [a, b] {
                adj[v].push(id);
                if adj[v].len() > MAX_DEGREE {
                    return Err(GraphError::DegreeExceeded(v));
                }
            }
            norm.push(key);
        }
        Ok(Graph { n, edges: norm, adj, kinds })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].iter().copied().find(|&e| self.other(e, u) == v)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.adj[v] {
                let w = self.other(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// True for a connected graph that is a simple path, possibly a single vertex.
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n && self.max_degree() <= 2
    }

    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let bc = block_cut_tree(self).expect("connected");
        bc.blocks.len() == 1
    }

    /// Replaces `e = (u, v)` by `(u, w)` (keeping id `e`) and `(w, v)` (new last id),
    /// where `w` is a new last vertex tagged as a subdivision vertex.
    pub fn subdivide(&self, e: EdgeId) -> Result<(Graph, VertexId), GraphError> {
        self.subdivide_as(e, VertexKind::Subdivision)
    }

    pub fn subdivide_as(&self, e: EdgeId, kind: VertexKind) -> Result<(Graph, VertexId), GraphError> {
        if e >= self.m() {
            return Err(GraphError::NoSuchEdge(e));
        }
        let (u, v) = self.edges[e];
        let w = self.n;
        let mut kinds = self.kinds.clone();
        kinds.push(kind);
        let mut edges = self.edges.clone();
        edges[e] = (u, w);
        edges.push((w, v));
        Ok((Graph::with_kinds(kinds, &edges)?, w))
    }

    /// Inverse of [`Graph::subdivide`]: removes degree-2 vertex `w`, joining its two
    /// neighbours by a single edge that takes the smaller of the two edge ids.
    pub fn smooth(&self, w: VertexId) -> Result<Graph, GraphError> {
        if w >= self.n || self.degree(w) != 2 {
            return Err(GraphError::NotDegreeTwo(w));
        }
        let (e1, e2) = (self.adj[w][0].min(self.adj[w][1]), self.adj[w][0].max(self.adj[w][1]));
        let a = self.other(e1, w);
        let b = self.other(e2, w);
        if a == b || self.find_edge(a, b).is_some() {
            return Err(GraphError::SmoothWouldCreateMultiEdge(w));
        }
        let remap = |x: VertexId| if x > w { x - 1 } else { x };
        let mut edges = Vec::with_capacity(self.m() - 1);
        for (id, &(p, q)) in self.edges.iter().enumerate() {
            if id == e2 {
                continue;
            }
            if id == e1 {
                edges.push((remap(a), remap(b)));
            } else {
                edges.push((remap(p), remap(q)));
            }
        }
        let mut kinds = self.kinds.clone();
        kinds.remove(w);
        Graph::with_kinds(kinds, &edges)
    }

    /// Subgraph on a subset of edges, with vertices renumbered densely in
    /// increasing original order. Returns the subgraph, the local→global vertex
    /// map and the local→global edge map.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut ids: Vec<EdgeId> = edge_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut verts: Vec<VertexId> = ids.iter().flat_map(|&e| [self.edges[e].0, self.edges[e].1]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |v: VertexId| verts.binary_search(&v).unwrap();
        let edges: Vec<(usize, usize)> =
            ids.iter().map(|&e| (local(self.edges[e].0), local(self.edges[e].1))).collect();
        let kinds = verts.iter().map(|&v| self.kinds[v]).collect();
        let g = Graph::with_kinds(kinds, &edges).expect("subgraph of a valid graph");
        (g, verts, ids)
    }
}

/// Biconnected components of an arbitrary (multi)graph given as an edge list.
/// Returns the edge indices of each component plus a per-vertex articulation flag.
/// Isolated vertices belong to no component.
pub fn biconnected_components(n: usize, edges: &[(usize, usize)]) -> (Vec<Vec<usize>>, Vec<bool>) {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut comps = Vec::new();
    let mut estack: Vec<usize> = Vec::new();
    let mut time = 0;
    // (vertex, parent edge, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, pe, it) = stack[top];
            if it < adj[v].len() {
                let (w, e) = adj[v][it];
                stack[top].2 += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    estack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    estack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut comp = Vec::new();
                        while let Some(x) = estack.pop() {
                            comp.push(x);
                            if x == pe {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (comps, is_cut)
}

/// One biconnected component. A block with a single edge is *trivial*.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
    /// For each vertex, the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
    /// For each edge, its block.
    pub edge_block: Vec<usize>,
}

impl BlockCutTree {
    pub fn is_cut_vertex(&self, v: VertexId) -> bool {
        self.vertex_blocks[v].len() > 1
    }

    /// Blocks adjacent to cut-vertex `v`.
    pub fn blocks_at(&self, v: VertexId) -> &[usize] {
        &self.vertex_blocks[v]
    }
}

pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let (mut comps, is_cut) = biconnected_components(g.n(), g.edges());
    comps.sort_by_key(|c| c[0]);
    let mut vertex_blocks = vec![Vec::new(); g.n()];
    let mut edge_block = vec![usize::MAX; g.m()];
    let mut blocks = Vec::with_capacity(comps.len());
    for (bi, comp) in comps.into_iter().enumerate() {
        let mut vertices: Vec<VertexId> = comp.iter().flat_map(|&e| [g.edges[e].0, g.edges[e].1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            vertex_blocks[v].push(bi);
        }
        for &e in &comp {
            edge_block[e] = bi;
        }
        blocks.push(Block { trivial: comp.len() == 1, edges: comp, vertices });
    }
    let cut_vertices = (0..g.n()).filter(|&v| is_cut[v]).collect();
    Ok(BlockCutTree { blocks, cut_vertices, vertex_blocks, edge_block })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn triangle_and_k4() {
        let t = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!((0..3).all(|v| t.degree(v) == 2));
        let k = k4();
        assert!((0..4).all(|v| k.degree(v) == 3));
    }

    #[test]
    fn rejects_invalid_input() {
        assert_eq!(Graph::new(2, &[(0, 1), (0, 1)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(GraphError::DanglingIndex(0, 2, 2)));
        assert_eq!(Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), Err(GraphError::DegreeExceeded(0)));
    }

    #[test]
    fn subdivide_then_smooth_restores_triangle() {
        let t = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let (s, w) = t.subdivide(1).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.kind(w), VertexKind::Subdivision);
        assert_eq!(s.degree(w), 2);
        let back = s.smooth(w).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.smooth(0), Err(GraphError::SmoothWouldCreateMultiEdge(0)));
    }

    #[test]
    fn block_cut_trees() {
        // two triangles sharing vertex 2
        let bow = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        // degree of 2 is 4 there, so use the bridge variant for the degree bound
        assert!(bow.is_err());
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let bc = block_cut_tree(&g).unwrap();
        assert_eq!(bc.blocks.len(), 3);
        assert_eq!(bc.blocks.iter().filter(|b| !b.trivial).count(), 2);
        assert_eq!(bc.cut_vertices, vec![2, 3]);

        let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let bc = block_cut_tree(&path).unwrap();
        assert_eq!(bc.blocks.len(), 3);
        assert!(bc.blocks.iter().all(|b| b.trivial));
        assert_eq!(bc.cut_vertices, vec![1, 2]);

        let bc = block_cut_tree(&k4()).unwrap();
        assert_eq!(bc.blocks.len(), 1);
        assert!(bc.cut_vertices.is_empty());

        let dis = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(block_cut_tree(&dis), Err(GraphError::Disconnected));
    }

    #[test]
    fn shared_vertex_triangles_with_degree_four_is_rejected_but_blocks_work_on_multigraph_lists() {
        let (comps, cut) = biconnected_components(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(comps.len(), 2);
        assert!(cut[2]);
        assert_eq!(cut.iter().filter(|&&c| c).count(), 1);
    }
}
