//! SPQR-trees of biconnected planar graphs with maximum degree three, rooted
//! at the Q-node of a reference edge.
//!
//! Construction is a split recursion: a pertinent edge set between two poles
//! is a Q-node (single edge), a P-node (the set falls apart at the poles), an
//! S-node (the set has cut vertices) or an R-node. Inside an R-node the
//! virtual edges are the maximal series chains, found as classes of
//! 2-edge-cuts via random cycle-space labels.

use crate::embedding::{planar_embedding, EmbeddingError, PlanarEmbedding};
use crate::graph::{biconnected_components, EdgeId, Graph, VertexId};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, VecDeque};
use thiserror::Error;

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NodeKind {
    S,
    P,
    Q,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SkelKind {
    /// The edge shared with the parent.
    Reference,
    /// A real edge of the graph and its Q-node.
    Real(EdgeId, NodeId),
    /// A virtual edge standing for a child node.
    Virtual(NodeId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkelEdge {
    /// Endpoints as graph vertices. For S-node items they follow the chain order.
    pub ends: (VertexId, VertexId),
    pub kind: SkelKind,
    /// Graph edge at each end that this skeleton edge stands for
    /// (`usize::MAX` where undefined, e.g. reference edges of S-nodes).
    pub reps: (EdgeId, EdgeId),
}

impl SkelEdge {
    pub fn child(&self) -> Option<NodeId> {
        match self.kind {
            SkelKind::Reference => None,
            SkelKind::Real(_, q) => Some(q),
            SkelKind::Virtual(c) => Some(c),
        }
    }

    pub fn real(&self) -> Option<EdgeId> {
        match self.kind {
            SkelKind::Real(e, _) => Some(e),
            _ => None,
        }
    }

    pub fn is_virtual(&self) -> bool {
        matches!(self.kind, SkelKind::Virtual(_))
    }

    pub fn rep_at(&self, v: VertexId) -> EdgeId {
        if self.ends.0 == v {
            self.reps.0
        } else {
            self.reps.1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Skeleton {
    pub vertices: Vec<VertexId>,
    /// Edge 0 is the reference edge of every non-root skeleton.
    pub edges: Vec<SkelEdge>,
    /// Clockwise rotation per skeleton vertex (indices into `edges`),
    /// induced from the graph embedding. Filled for R-nodes only.
    pub rotation: Vec<Vec<usize>>,
}

impl Skeleton {
    pub fn vertex_index(&self, v: VertexId) -> usize {
        self.vertices.iter().position(|&x| x == v).expect("skeleton vertex")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpqrNode {
    pub id: NodeId,
    pub kind: NodeKind,
    pub poles: (VertexId, VertexId),
    pub parent: Option<NodeId>,
    pub children: Vec<NodeId>,
    pub skeleton: Skeleton,
    /// Edges of the pertinent graph.
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpqrTree {
    pub nodes: Vec<SpqrNode>,
    pub root: NodeId,
    pub root_child: NodeId,
    pub ref_edge: EdgeId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpqrError {
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("no edge with id {0}")]
    NoSuchEdge(EdgeId),
    #[error("the root has no pertinent graph")]
    RootHasNoPertinent,
    #[error("node {0} has no alternative skeleton embeddings")]
    NotPOrR(NodeId),
}

impl From<EmbeddingError> for SpqrError {
    fn from(_: EmbeddingError) -> Self {
        SpqrError::NotPlanar
    }
}

/// Builds the SPQR-tree with a freshly computed planar embedding.
pub fn build_spqr(g: &Graph, ref_edge: EdgeId) -> Result<SpqrTree, SpqrError> {
    if ref_edge >= g.m() {
        return Err(SpqrError::NoSuchEdge(ref_edge));
    }
    if !g.is_biconnected() {
        return Err(SpqrError::NotBiconnected);
    }
    let emb = planar_embedding(g)?;
    build_spqr_with(g, &emb, ref_edge)
}

/// Builds the SPQR-tree; R-node skeleton rotations are induced from `emb`.
pub fn build_spqr_with(g: &Graph, emb: &PlanarEmbedding, ref_edge: EdgeId) -> Result<SpqrTree, SpqrError> {
    if ref_edge >= g.m() {
        return Err(SpqrError::NoSuchEdge(ref_edge));
    }
    if g.m() < 2 || !g.is_biconnected() {
        return Err(SpqrError::NotBiconnected);
    }
    let (x, y) = g.endpoints(ref_edge);
    let mut b = Builder { g, emb, nodes: Vec::new() };
    let root = b.alloc(NodeKind::Q, (x, y), None);
    let rest: Vec<EdgeId> = (0..g.m()).filter(|&e| e != ref_edge).collect();
    let root_child = b.part(x, y, rest, root);
    b.nodes[root].edges = vec![ref_edge];
    b.nodes[root].children = vec![root_child];
    b.nodes[root].skeleton = Skeleton {
        vertices: vec![x, y],
        edges: vec![
            SkelEdge { ends: (x, y), kind: SkelKind::Real(ref_edge, root), reps: (ref_edge, ref_edge) },
            SkelEdge { ends: (x, y), kind: SkelKind::Virtual(root_child), reps: (usize::MAX, usize::MAX) },
        ],
        rotation: Vec::new(),
    };
    Ok(SpqrTree { nodes: b.nodes, root, root_child, ref_edge })
}

struct Builder<'a> {
    g: &'a Graph,
    emb: &'a PlanarEmbedding,
    nodes: Vec<SpqrNode>,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Dense relabelling of the vertices touched by an edge set.
struct Local {
    verts: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    edges: Vec<(usize, usize)>,
}

impl Local {
    fn new(g: &Graph, edges: &[EdgeId]) -> Self {
        let mut verts = Vec::new();
        let mut index = HashMap::new();
        let mut le = Vec::with_capacity(edges.len());
        for &e in edges {
            let (a, b) = g.endpoints(e);
            let mut id = |v: VertexId| {
                *index.entry(v).or_insert_with(|| {
                    verts.push(v);
                    verts.len() - 1
                })
            };
            let la = id(a);
            let lb = id(b);
            le.push((la, lb));
        }
        Local { verts, index, edges: le }
    }
}

impl<'a> Builder<'a> {
    fn alloc(&mut self, kind: NodeKind, poles: (VertexId, VertexId), parent: Option<NodeId>) -> NodeId {
        let id = self.nodes.len();
        self.nodes.push(SpqrNode {
            id,
            kind,
            poles,
            parent,
            children: Vec::new(),
            skeleton: Skeleton::default(),
            edges: Vec::new(),
        });
        id
    }

    fn reference(&self, x: VertexId, y: VertexId) -> SkelEdge {
        SkelEdge { ends: (x, y), kind: SkelKind::Reference, reps: (usize::MAX, usize::MAX) }
    }

    fn q_node(&mut self, e: EdgeId, parent: NodeId) -> NodeId {
        let (a, b) = self.g.endpoints(e);
        let id = self.alloc(NodeKind::Q, (a, b), Some(parent));
        self.nodes[id].edges = vec![e];
        self.nodes[id].skeleton = Skeleton {
            vertices: vec![a, b],
            edges: vec![self.reference(a, b), SkelEdge { ends: (a, b), kind: SkelKind::Real(e, id), reps: (e, e) }],
            rotation: Vec::new(),
        };
        id
    }

    /// Skeleton edge for a sub-part between `a` and `b`.
    fn item(&mut self, a: VertexId, b: VertexId, edges: Vec<EdgeId>, parent: NodeId) -> SkelEdge {
        if edges.len() == 1 {
            let e = edges[0];
            let q = self.q_node(e, parent);
            self.nodes[parent].children.push(q);
            return SkelEdge { ends: (a, b), kind: SkelKind::Real(e, q), reps: (e, e) };
        }
        let rep_a = *edges.iter().filter(|&&e| self.g.endpoints(e).0 == a || self.g.endpoints(e).1 == a).min().unwrap();
        let rep_b = *edges.iter().filter(|&&e| self.g.endpoints(e).0 == b || self.g.endpoints(e).1 == b).min().unwrap();
        let c = self.part(a, b, edges, parent);
        self.nodes[parent].children.push(c);
        SkelEdge { ends: (a, b), kind: SkelKind::Virtual(c), reps: (rep_a, rep_b) }
    }

    fn part(&mut self, x: VertexId, y: VertexId, mut edges: Vec<EdgeId>, parent: NodeId) -> NodeId {
        edges.sort_unstable();
        if edges.len() == 1 {
            return self.q_node(edges[0], parent);
        }
        let loc = Local::new(self.g, &edges);
        let (lx, ly) = (loc.index[&x], loc.index[&y]);
        let nl = loc.verts.len();

        // split at the poles
        let mut uf: Vec<usize> = (0..edges.len()).collect();
        fn find(uf: &mut [usize], mut i: usize) -> usize {
            while uf[i] != i {
                uf[i] = uf[uf[i]];
                i = uf[i];
            }
            i
        }
        let mut first_at: Vec<usize> = vec![usize::MAX; nl];
        for (i, &(a, b)) in loc.edges.iter().enumerate() {
            for v in [a, b] {
                if v == lx || v == ly {
                    continue;
                }
                if first_at[v] == usize::MAX {
                    first_at[v] = i;
                } else {
                    let (r1, r2) = (find(&mut uf, first_at[v]), find(&mut uf, i));
                    uf[r1] = r2;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
        for i in 0..edges.len() {
            let r = find(&mut uf, i);
            groups.entry(r).or_default().push(edges[i]);
        }
        if groups.len() >= 2 {
            let id = self.alloc(NodeKind::P, (x, y), Some(parent));
            self.nodes[id].edges = edges;
            let mut gs: Vec<Vec<EdgeId>> = groups.into_values().collect();
            gs.sort_by_key(|g| g[0]);
            let mut skel = vec![self.reference(x, y)];
            for grp in gs {
                skel.push(self.item(x, y, grp, id));
            }
            self.nodes[id].skeleton = Skeleton { vertices: vec![x, y], edges: skel, rotation: Vec::new() };
            return id;
        }

        let (blocks, is_cut) = biconnected_components(nl, &loc.edges);
        if is_cut.iter().any(|&c| c) {
            return self.series(x, y, edges, &loc, &blocks, &is_cut, parent);
        }
        self.rigid(x, y, edges, &loc, parent)
    }

    #[allow(clippy::too_many_arguments)]
    fn series(
        &mut self,
        x: VertexId,
        y: VertexId,
        edges: Vec<EdgeId>,
        loc: &Local,
        blocks: &[Vec<usize>],
        is_cut: &[bool],
        parent: NodeId,
    ) -> NodeId {
        let nl = loc.verts.len();
        let lx = loc.index[&x];
        let mut adj = vec![Vec::new(); nl];
        for &(a, b) in &loc.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut dist = vec![usize::MAX; nl];
        dist[lx] = 0;
        let mut q = VecDeque::from([lx]);
        while let Some(v) = q.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        let mut chain: Vec<usize> = (0..nl).filter(|&v| is_cut[v]).collect();
        chain.sort_by_key(|&v| (dist[v], loc.verts[v]));
        chain.insert(0, lx);
        chain.push(loc.index[&y]);
        let mut block_verts: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let mut vs: Vec<usize> = b.iter().flat_map(|&i| [loc.edges[i].0, loc.edges[i].1]).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect();
        let id = self.alloc(NodeKind::S, (x, y), Some(parent));
        self.nodes[id].edges = edges.clone();
        let mut skel = vec![self.reference(x, y)];
        for w in chain.windows(2) {
            let bi = (0..blocks.len())
                .find(|&b| block_verts[b].binary_search(&w[0]).is_ok() && block_verts[b].binary_search(&w[1]).is_ok())
                .expect("consecutive chain vertices share a block");
            block_verts[bi].clear();
            let bedges: Vec<EdgeId> = blocks[bi].iter().map(|&i| edges[i]).collect();
            let it = self.item(loc.verts[w[0]], loc.verts[w[1]], bedges, id);
            skel.push(it);
        }
        let vertices = chain.iter().map(|&v| loc.verts[v]).collect();
        self.nodes[id].skeleton = Skeleton { vertices, edges: skel, rotation: Vec::new() };
        id
    }

    fn rigid(&mut self, x: VertexId, y: VertexId, edges: Vec<EdgeId>, loc: &Local, parent: NodeId) -> NodeId {
        let nl = loc.verts.len();
        let (lx, ly) = (loc.index[&x], loc.index[&y]);
        // H = pertinent edges plus the reference edge (local id = edges.len())
        let mut hedges = loc.edges.clone();
        hedges.push((lx, ly));
        let mh = hedges.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nl];
        for (i, &(a, b)) in hedges.iter().enumerate() {
            adj[a].push(i);
            adj[b].push(i);
        }
        // spanning tree by BFS from x
        let mut parent_edge = vec![usize::MAX; nl];
        let mut seen = vec![false; nl];
        let mut order = Vec::with_capacity(nl);
        let mut tree = vec![false; mh];
        seen[lx] = true;
        let mut q = VecDeque::from([lx]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &i in &adj[v] {
                let (a, b) = hedges[i];
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = i;
                    tree[i] = true;
                    q.push_back(w);
                }
            }
        }
        let mut label = vec![0u64; mh];
        let mut acc = vec![0u64; nl];
        for i in 0..mh {
            if !tree[i] {
                let key = if i == edges.len() { u64::MAX } else { edges[i] as u64 };
                label[i] = splitmix(key ^ 0x5151_7A7A);
                acc[hedges[i].0] ^= label[i];
                acc[hedges[i].1] ^= label[i];
            }
        }
        for &v in order.iter().rev() {
            let pe = parent_edge[v];
            if pe == usize::MAX {
                continue;
            }
            label[pe] = acc[v];
            let (a, b) = hedges[pe];
            let p = if a == v { b } else { a };
            acc[p] ^= acc[v];
        }
        let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for i in 0..edges.len() {
            classes.entry(label[i]).or_default().push(i);
        }
        // one candidate chain per class of size >= 2
        let mut chains: Vec<(Vec<usize>, usize, usize)> = Vec::new();
        for class in classes.values().filter(|c| c.len() >= 2) {
            if class.contains(&edges.len()) {
                continue;
            }
            let mut cut = vec![false; mh];
            for &i in class {
                cut[i] = true;
            }
            let mut outer = vec![false; nl];
            outer[lx] = true;
            let mut st = vec![lx];
            while let Some(v) = st.pop() {
                for &i in &adj[v] {
                    if cut[i] {
                        continue;
                    }
                    let (a, b) = hedges[i];
                    let w = if a == v { b } else { a };
                    if !outer[w] {
                        outer[w] = true;
                        st.push(w);
                    }
                }
            }
            let members: Vec<usize> =
                (0..edges.len()).filter(|&i| cut[i] || !outer[loc.edges[i].0] || !outer[loc.edges[i].1]).collect();
            let mut poles: Vec<usize> =
                class.iter().flat_map(|&i| [loc.edges[i].0, loc.edges[i].1]).filter(|&v| outer[v]).collect();
            poles.sort_by_key(|&v| loc.verts[v]);
            poles.dedup();
            debug_assert_eq!(poles.len(), 2, "a chain attaches at two vertices");
            chains.push((members, poles[0], poles[1]));
        }
        chains.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0[0].cmp(&b.0[0])));
        let mut used = vec![false; edges.len()];
        let mut taken = Vec::new();
        for (members, a, b) in chains {
            if members.iter().any(|&i| used[i]) {
                continue;
            }
            for &i in &members {
                used[i] = true;
            }
            taken.push((members, a, b));
        }

        let id = self.alloc(NodeKind::R, (x, y), Some(parent));
        self.nodes[id].edges = edges.clone();
        let outside = |v: VertexId| -> EdgeId {
            self.g.incident(v).iter().copied().find(|e| edges.binary_search(e).is_err()).unwrap_or(usize::MAX)
        };
        let mut skel = vec![SkelEdge { ends: (x, y), kind: SkelKind::Reference, reps: (outside(x), outside(y)) }];
        let mut pieces: Vec<(VertexId, VertexId, Vec<EdgeId>)> = Vec::new();
        for i in 0..edges.len() {
            if !used[i] {
                let (a, b) = self.g.endpoints(edges[i]);
                pieces.push((a, b, vec![edges[i]]));
            }
        }
        for (members, a, b) in taken {
            pieces.push((loc.verts[a], loc.verts[b], members.iter().map(|&i| edges[i]).collect()));
        }
        pieces.sort_by_key(|p| p.2[0]);
        for (a, b, es) in pieces {
            let it = self.item(a, b, es, id);
            skel.push(it);
        }
        let mut vertices: Vec<VertexId> = skel.iter().flat_map(|s| [s.ends.0, s.ends.1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut at: HashMap<VertexId, Vec<(usize, usize)>> = HashMap::new();
        for (i, s) in skel.iter().enumerate() {
            for v in [s.ends.0, s.ends.1] {
                at.entry(v).or_default().push((self.emb.pos(v, s.rep_at(v)), i));
            }
        }
        let rotation = vertices
            .iter()
            .map(|v| {
                let mut a = at.remove(v).unwrap_or_default();
                a.sort_unstable();
                a.into_iter().map(|(_, i)| i).collect()
            })
            .collect();
        self.nodes[id].skeleton = Skeleton { vertices, edges: skel, rotation };
        id
    }
}

impl SpqrTree {
    pub fn node(&self, id: NodeId) -> &SpqrNode {
        &self.nodes[id]
    }

    /// Pertinent graph of a non-root node, with local→global vertex and edge maps.
    pub fn pertinent_graph(&self, g: &Graph, id: NodeId) -> Result<(Graph, Vec<VertexId>, Vec<EdgeId>), SpqrError> {
        if id == self.root {
            return Err(SpqrError::RootHasNoPertinent);
        }
        Ok(g.edge_subgraph(&self.nodes[id].edges))
    }

    /// Alternative embeddings of a P- or R-skeleton as clockwise rotations per
    /// skeleton vertex. P: one per ordering of the non-reference edges;
    /// R: the induced rotation and its mirror image.
    pub fn skeleton_embeddings(&self, id: NodeId) -> Result<Vec<Vec<Vec<usize>>>, SpqrError> {
        let node = &self.nodes[id];
        match node.kind {
            NodeKind::R => {
                let r = node.skeleton.rotation.clone();
                let m = r.iter().map(|rot| rot.iter().rev().copied().collect()).collect();
                Ok(vec![r, m])
            }
            NodeKind::P => {
                let others: Vec<usize> = (1..node.skeleton.edges.len()).collect();
                let mut out = Vec::new();
                for perm in permutations(&others) {
                    let mut at_x = vec![0];
                    at_x.extend(perm.iter().copied());
                    let mut at_y = vec![0];
                    at_y.extend(perm.iter().rev().copied());
                    out.push(vec![at_x, at_y]);
                }
                Ok(out)
            }
            _ => Err(SpqrError::NotPOrR(id)),
        }
    }

    /// Checks properties T1–T3 and the no-adjacent-S/P rule.
    pub fn check_3graph_properties(&self) -> Result<(), String> {
        for node in &self.nodes {
            let kinds: Vec<NodeKind> = node.children.iter().map(|&c| self.nodes[c].kind).collect();
            if let Some(p) = node.parent {
                let pk = self.nodes[p].kind;
                if (pk == NodeKind::S && node.kind == NodeKind::S) || (pk == NodeKind::P && node.kind == NodeKind::P) {
                    return Err(format!("T0: adjacent {:?}-nodes {} and {}", node.kind, p, node.id));
                }
            }
            match node.kind {
                NodeKind::P => {
                    if kinds.len() != 2 {
                        return Err(format!("T1: P-node {} has {} children", node.id, kinds.len()));
                    }
                    let ns = kinds.iter().filter(|&&k| k == NodeKind::S).count();
                    let nq = kinds.iter().filter(|&&k| k == NodeKind::Q).count();
                    if node.id == self.root_child {
                        if ns != 2 {
                            return Err(format!("T1: root-child P-node {} needs two S children", node.id));
                        }
                    } else if ns < 1 || ns + nq != 2 {
                        return Err(format!("T1: P-node {} children {:?}", node.id, kinds));
                    }
                }
                NodeKind::R => {
                    if kinds.iter().any(|&k| k != NodeKind::S && k != NodeKind::Q) {
                        return Err(format!("T2: R-node {} children {:?}", node.id, kinds));
                    }
                }
                NodeKind::S => {
                    if node.skeleton.edges.len() < 3 {
                        return Err(format!("S-node {} skeleton is not a cycle", node.id));
                    }
                    if node.id != self.root_child {
                        let items = &node.skeleton.edges[1..];
                        if items[0].is_virtual() || items[items.len() - 1].is_virtual() {
                            return Err(format!("T3: S-node {} has a virtual pole edge", node.id));
                        }
                        if items.windows(2).any(|w| w[0].is_virtual() && w[1].is_virtual()) {
                            return Err(format!("T3: S-node {} has adjacent virtual edges", node.id));
                        }
                    }
                }
                NodeKind::Q => {}
            }
        }
        Ok(())
    }

    /// Debug dump of every node with its poles and marked skeleton edges.
    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .map(|n| {
                let edges: Vec<serde_json::Value> = n
                    .skeleton
                    .edges
                    .iter()
                    .map(|s| {
                        let mark = match s.kind {
                            SkelKind::Reference => serde_json::json!("reference"),
                            SkelKind::Real(e, _) => serde_json::json!({"real": e}),
                            SkelKind::Virtual(c) => serde_json::json!({"virtual": c}),
                        };
                        serde_json::json!({"ends": [s.ends.0, s.ends.1], "mark": mark})
                    })
                    .collect();
                serde_json::json!({
                    "id": n.id,
                    "kind": format!("{:?}", n.kind),
                    "poles": [n.poles.0, n.poles.1],
                    "parent": n.parent,
                    "children": n.children,
                    "skeleton": edges,
                })
            })
            .collect();
        serde_json::json!({"root": self.root, "root_child": self.root_child, "ref_edge": self.ref_edge, "nodes": nodes})
    }

    /// Union of the real edges reachable below `id`.
    pub fn expanded_edges(&self, id: NodeId) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut st = vec![id];
        while let Some(v) = st.pop() {
            let n = &self.nodes[v];
            if n.kind == NodeKind::Q && v != self.root {
                out.push(n.edges[0]);
            }
            st.extend(n.children.iter().copied());
        }
        if id == self.root {
            out.push(self.ref_edge);
        }
        out.sort_unstable();
        out
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(t: &SpqrTree) -> Vec<NodeKind> {
        t.nodes.iter().map(|n| n.kind).collect()
    }

    #[test]
    fn cycle_is_one_s_node() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = build_spqr(&c4, 0).unwrap();
        assert_eq!(t.nodes[t.root].kind, NodeKind::Q);
        assert_eq!(t.nodes[t.root_child].kind, NodeKind::S);
        assert_eq!(t.nodes[t.root_child].skeleton.edges.len(), 4);
        assert!(t.check_3graph_properties().is_ok());
    }

    #[test]
    fn k4_is_one_r_node() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for e in 0..6 {
            let t = build_spqr(&k4, e).unwrap();
            let rc = &t.nodes[t.root_child];
            assert_eq!(rc.kind, NodeKind::R);
            assert_eq!(rc.skeleton.vertices.len(), 4);
            assert_eq!(rc.skeleton.edges.len(), 6);
            assert!(rc.children.iter().all(|&c| t.nodes[c].kind == NodeKind::Q));
            assert_eq!(t.skeleton_embeddings(t.root_child).unwrap().len(), 2);
            assert!(t.check_3graph_properties().is_ok());
        }
    }

    #[test]
    fn theta_graph_has_p_node() {
        // poles 0 and 1, three paths of length two through 2, 3, 4
        let th = Graph::new(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let t = build_spqr(&th, 0).unwrap();
        assert_eq!(kinds(&t).iter().filter(|&&k| k == NodeKind::P).count(), 1);
        let p = t.nodes.iter().find(|n| n.kind == NodeKind::P).unwrap();
        assert_eq!(p.poles, (0, 1));
        assert_eq!(p.children.len(), 2);
        assert!(p.children.iter().all(|&c| t.nodes[c].kind == NodeKind::S));
        assert_eq!(t.skeleton_embeddings(p.id).unwrap().len(), 2);
        assert!(t.check_3graph_properties().is_ok());
        assert_eq!(t.pertinent_graph(&th, t.root), Err(SpqrError::RootHasNoPertinent));
    }

    #[test]
    fn prism_with_subdivided_rung_has_chain() {
        // triangular prism with rung (2,5) replaced by a path through 6
        let g =
            Graph::new(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 6), (6, 5)]).unwrap();
        let t = build_spqr(&g, 0).unwrap();
        let r = &t.nodes[t.root_child];
        assert_eq!(r.kind, NodeKind::R);
        let virt: Vec<&SkelEdge> = r.skeleton.edges.iter().filter(|s| s.is_virtual()).collect();
        assert_eq!(virt.len(), 1);
        assert_eq!((virt[0].ends.0.min(virt[0].ends.1), virt[0].ends.0.max(virt[0].ends.1)), (2, 5));
        assert!(t.check_3graph_properties().is_ok());
        assert_eq!(t.expanded_edges(t.root), (0..g.m()).collect::<Vec<_>>());
    }
}
