//! Candidate-set dynamic program over SPQR-trees with its root-child
//! assemblies. Blocks are combined along the block-cut tree by the drivers.
//!
//! Costs are computed bottom-up. Geometry is produced top-down only for the
//! winning root: every node receives its placement (a departure heading and
//! spirality for series parts, a rotation and mirror for P/R parts) and
//! writes absolute directions for its real edges.

use crate::embedding::{dart_from, head, trace_faces, Dart, PlanarEmbedding};
use crate::graph::{block_cut_tree, BlockCutTree, EdgeId, Graph, GraphError, VertexId};
use crate::ortho::{
    classify_shape, dir_add, spirality, validate_rep, vertex_turn, Component, Geometry, OrthoRep, ShapeClass,
};
use crate::rect::{RSkeleton, RefMode, RootNetwork, SkeletonShape, INF_COST, Q_TABLE};
use crate::spqr::{build_spqr_with, NodeId, NodeKind, SkelEdge, SkelKind, SpqrError, SpqrTree};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("no edge with id {0}")]
    NoSuchEdge(EdgeId),
    #[error("no vertex with id {0}")]
    NoSuchVertex(VertexId),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl From<SpqrError> for SolveError {
    fn from(e: SpqrError) -> Self {
        match e {
            SpqrError::NotPlanar => SolveError::NotPlanar,
            other => SolveError::Invariant(other.to_string()),
        }
    }
}

fn invariant(msg: impl Into<String>) -> SolveError {
    SolveError::Invariant(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    X,
    D,
}

fn add(a: i64, b: i64) -> i64 {
    if a >= INF_COST || b >= INF_COST {
        INF_COST
    } else {
        a + b
    }
}

/// Candidates of an inner S-node: cost per spirality 0..=4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SCandidates {
    pub table: [i64; 5],
    pub c0: i64,
    pub n_q: usize,
    pub n_d: usize,
    /// Chosen shape of each P/R child in chain order.
    pub shapes: Vec<Shape>,
}

/// Candidates of an inner P-node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PCandidates {
    pub x: i64,
    pub d: i64,
    /// In the D-shape, the first child is the straight one.
    pub d_first_straight: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CandidateSet {
    Q([i64; 5]),
    S(SCandidates),
    P(PCandidates),
    R { x: i64, d: i64 },
}

impl CandidateSet {
    fn table(&self) -> [i64; 5] {
        match self {
            CandidateSet::Q(t) => *t,
            CandidateSet::S(s) => s.table,
            _ => panic!("spirality table of a P/R node"),
        }
    }

    fn xd(&self) -> (i64, i64) {
        match self {
            CandidateSet::P(p) => (p.x, p.d),
            CandidateSet::R { x, d } => (*x, *d),
            _ => panic!("shape costs of an S/Q node"),
        }
    }
}

/// A single edge with at most two bends.
pub fn candidates_q() -> [i64; 5] {
    Q_TABLE
}

/// Series composition of `n_q` real edges and P/R children with costs
/// `(x, d)`. Each child takes its cheaper shape, D on ties; every D child and
/// every real edge after the first adds one unit of free spirality.
pub fn candidates_s(n_q: usize, thick: &[(i64, i64)]) -> SCandidates {
    let mut c0 = 0;
    let mut n_d = 0;
    let mut shapes = Vec::with_capacity(thick.len());
    for &(x, d) in thick {
        if d <= x {
            c0 = add(c0, d);
            n_d += 1;
            shapes.push(Shape::D);
        } else {
            c0 = add(c0, x);
            shapes.push(Shape::X);
        }
    }
    let free = (n_q + n_d) as i64 - 1;
    let mut table = [0; 5];
    for (k, t) in table.iter_mut().enumerate() {
        *t = if k as i64 <= free { c0 } else { add(c0, k as i64 - free) };
    }
    SCandidates { table, c0, n_q, n_d, shapes }
}

/// Parallel composition of two series children.
pub fn candidates_p(t1: &[i64; 5], t2: &[i64; 5]) -> PCandidates {
    let x = add(t1[1], t2[1]);
    let first_straight = add(t1[0], t2[2]);
    let second_straight = add(t1[2], t2[0]);
    if first_straight <= second_straight {
        PCandidates { x, d: first_straight, d_first_straight: true }
    } else {
        PCandidates { x, d: second_straight, d_first_straight: false }
    }
}

/// Cost of a root S-node closed by the reference edge into a cycle.
pub fn root_s_cost(s: &SCandidates) -> i64 {
    let free = (s.n_q + 1 + s.n_d) as i64;
    add(s.c0, (4 - free).max(0))
}

/// Shape computations for rigid skeletons, shared across reference edges.
#[derive(Default)]
pub struct ShapeCache {
    map: Mutex<HashMap<Vec<i64>, Option<Arc<SkeletonShape>>>>,
    roots: Mutex<HashMap<Vec<i64>, RootSlot>>,
}

type RootSlot = Arc<OnceLock<Option<RootNetwork>>>;

impl ShapeCache {
    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn key(tag: usize, skel: &RSkeleton, verts: &[VertexId], mode: Option<RefMode>) -> Vec<i64> {
        let g = &skel.graph;
        let mut k = Vec::with_capacity(4 + verts.len() + 8 * g.m() + 4 * g.n());
        k.push(tag as i64);
        match mode {
            None => k.push(2),
            Some(RefMode::Inner(tl, tr)) => k.extend([0, tl as i64, tr as i64, skel.ref_edge as i64]),
            Some(RefMode::Root(d)) => {
                let fs = trace_faces(&skel.embedding(), g);
                let f = fs.face_of_dart[d];
                let md = fs.faces[f].darts.iter().copied().min().unwrap_or(d);
                k.extend([1, md as i64]);
            }
        }
        k.push(verts.len() as i64);
        k.extend(verts.iter().map(|&v| v as i64));
        for e in 0..g.m() {
            let (a, b) = g.endpoints(e);
            k.extend([a as i64, b as i64, skel.virtual_edge[e] as i64]);
            k.extend(skel.tables[e]);
        }
        for r in &skel.rotation {
            k.push(r.len() as i64);
            k.extend(r.iter().map(|&e| e as i64));
        }
        k
    }

    fn shape(&self, tag: usize, skel: &RSkeleton, verts: &[VertexId], mode: RefMode) -> Option<Arc<SkeletonShape>> {
        let key = Self::key(tag, skel, verts, Some(mode));
        if let Some(v) = self.map.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let v = match mode {
            RefMode::Inner(..) => skel.shape(mode),
            RefMode::Root(d) => {
                let slot = {
                    let mut roots = self.roots.lock().expect("cache lock");
                    roots.entry(Self::key(tag, skel, verts, None)).or_default().clone()
                };
                slot.get_or_init(|| skel.root_network()).as_ref().and_then(|r| skel.root_shape(r, d))
            }
        }
        .map(Arc::new);
        self.map.lock().expect("cache lock").insert(key, v.clone());
        v
    }
}

/// A rigid node prepared for shape computation.
#[derive(Clone, Debug)]
struct RData {
    skel: RSkeleton,
    /// Local edge → index in the SPQR skeleton.
    local_edge: Vec<usize>,
    /// Local vertex → block vertex.
    verts: Vec<VertexId>,
    x: Option<Arc<SkeletonShape>>,
    d: Option<Arc<SkeletonShape>>,
}

/// How the root child is drawn.
#[derive(Clone, Debug)]
enum RootPlan {
    S(SCandidates),
    P(ThetaPlan),
    R { shape: Arc<SkeletonShape>, ext: Dart },
}

/// Root P-node layout: departure headings at the first pole of the two
/// children (the reference edge leaves east), their spiralities, the bends of
/// the reference edge and whether the external face lies left of the
/// reference dart leaving the first pole.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct ThetaPlan {
    d1: u8,
    d2: u8,
    s1: i32,
    s2: i32,
    b: i32,
    ext_left: bool,
}

/// A drawn inner component, kept for shape checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCheck {
    pub kind: NodeKind,
    pub edges: Vec<EdgeId>,
    pub poles: (VertexId, VertexId),
    pub shape: Option<Shape>,
    pub spirality: Option<u32>,
}

/// Faces of the abstract theta formed by the reference edge and two series
/// paths. Valid when exactly one face turns by −4 and the other two by +4.
/// Returns the side of the external face, which holds the reference edge.
fn theta_valid(dep: [u8; 3], turn: [i32; 3]) -> Option<bool> {
    let dir = |d: usize| -> u8 {
        let i = d / 2;
        if d.is_multiple_of(2) {
            dep[i]
        } else {
            dir_add(dep[i], turn[i] + 2)
        }
    };
    let ys = [dir(1), dir(3), dir(5)];
    if ys[0] == ys[1] || ys[0] == ys[2] || ys[1] == ys[2] {
        return None;
    }
    let lb = |d: usize| if d.is_multiple_of(2) { turn[d / 2] } else { -turn[d / 2] };
    // darts leaving the head of d have the opposite parity
    let next = |d: usize| -> (usize, i32) {
        let back = d ^ 1;
        let mut best = (usize::MAX, 5);
        for o in (0..6).filter(|o| o % 2 == back % 2 && *o != back) {
            let a = (dir(back) as i32 - dir(o) as i32).rem_euclid(4);
            if a < best.1 {
                best = (o, a);
            }
        }
        best
    };
    let mut seen = [false; 6];
    let mut faces: Vec<(i32, bool, bool)> = Vec::new();
    for s in 0..6 {
        if seen[s] {
            continue;
        }
        let mut d = s;
        let mut t = 0;
        let mut has = (false, false);
        loop {
            seen[d] = true;
            if d == 0 {
                has.0 = true;
            }
            if d == 1 {
                has.1 = true;
            }
            let (n, a) = next(d);
            t += lb(d) + 2 - a;
            d = n;
            if d == s {
                break;
            }
        }
        faces.push((t, has.0, has.1));
    }
    if faces.len() != 3 {
        return None;
    }
    let ext: Vec<&(i32, bool, bool)> = faces.iter().filter(|f| f.0 == -4).collect();
    if ext.len() != 1 || faces.iter().filter(|f| f.0 == 4).count() != 2 {
        return None;
    }
    let e = ext[0];
    if e.1 {
        Some(true)
    } else if e.2 {
        Some(false)
    } else {
        None
    }
}

fn theta_search(t1: &[i64; 5], t2: &[i64; 5]) -> Option<(i64, ThetaPlan)> {
    let mut best: Option<(i64, ThetaPlan)> = None;
    for b in [0i32, 1, -1, 2, -2] {
        for d1 in 1..4u8 {
            for d2 in 1..4u8 {
                if d1 == d2 {
                    continue;
                }
                for s1 in -4i32..=4 {
                    let c1 = t1[s1.unsigned_abs() as usize];
                    for s2 in -4i32..=4 {
                        let c2 = t2[s2.unsigned_abs() as usize];
                        let cost = add(add(c1, c2), b.abs() as i64);
                        if cost >= INF_COST || best.as_ref().is_some_and(|(c, _)| *c <= cost) {
                            continue;
                        }
                        if let Some(ext_left) = theta_valid([0, d1, d2], [b, s1, s2]) {
                            best = Some((cost, ThetaPlan { d1, d2, s1, s2, b, ext_left }));
                        }
                    }
                }
            }
        }
    }
    best
}

/// Pole ports and one contour of a P/R part in its local frame.
#[derive(Clone, Copy, Debug)]
struct Frame {
    u: [u8; 2],
    v: [u8; 2],
    c_dir: u8,
    c_turn: i32,
}

/// A rotation `r` after an optional mirror (`s = −1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Xf {
    r: u8,
    s: i32,
}

impl Xf {
    fn dir(self, d: u8) -> u8 {
        dir_add(self.r, self.s * d as i32)
    }
}

/// Finds a placement of a P/R part entered with heading `h_in` whose
/// through-turn is `tau`. Returns the transform and the exit heading.
fn through(f: &Frame, h_in: u8, tau: i32) -> Option<(Xf, u8)> {
    for s in [1, -1] {
        for r in 0..4u8 {
            let x = Xf { r, s };
            let entry = dir_add(h_in, 2);
            if x.dir(f.u[0]) == entry || x.dir(f.u[1]) == entry {
                continue;
            }
            let cd = x.dir(f.c_dir);
            let ct = s * f.c_turn;
            let turn_in = vertex_turn(h_in, cd);
            let arr = dir_add(cd, ct);
            for h_out in 0..4u8 {
                if x.dir(f.v[0]) == h_out || x.dir(f.v[1]) == h_out {
                    continue;
                }
                if turn_in + ct + vertex_turn(arr, h_out) == tau {
                    return Some((x, h_out));
                }
            }
        }
    }
    None
}

/// Absolute directions being assembled for one block.
struct Canvas {
    dir: Vec<u8>,
    bends: Vec<i32>,
}

impl Canvas {
    fn new(m: usize) -> Self {
        Canvas { dir: vec![u8::MAX; 2 * m], bends: vec![0; m] }
    }

    /// Edge `e` leaves `from` with heading `d` and turns left `lb` times.
    fn set_edge(&mut self, g: &Graph, e: EdgeId, from: VertexId, d: u8, lb: i32) {
        let da = dart_from(g, e, from);
        self.dir[da] = d;
        self.dir[da ^ 1] = dir_add(d, lb + 2);
        self.bends[e] = if da & 1 == 0 { lb } else { -lb };
    }
}

enum Elem {
    Edge(EdgeId, VertexId),
    Thick(NodeId, Shape),
}

enum Task {
    Series { item: SkelEdge, dep: u8, k: i32 },
    Thick { node: NodeId, shape: Shape, xf: Xf },
}

/// DP state of one biconnected graph rooted at a reference edge.
struct TreeDp<'a> {
    g: &'a Graph,
    tree: SpqrTree,
    cache: &'a ShapeCache,
    tag: usize,
    cand: Vec<Option<CandidateSet>>,
    rdata: Vec<Option<RData>>,
}

/// A drawing of one biconnected block in its own frame.
#[derive(Clone, Debug)]
pub(crate) struct BlockDrawing {
    pub geo: Geometry,
    pub ext: Dart,
    pub comps: Vec<ComponentCheck>,
}

impl<'a> TreeDp<'a> {
    fn new(
        g: &'a Graph,
        emb: &PlanarEmbedding,
        e: EdgeId,
        cache: &'a ShapeCache,
        tag: usize,
    ) -> Result<Self, SolveError> {
        let tree = build_spqr_with(g, emb, e)?;
        let n = tree.nodes.len();
        Ok(TreeDp { g, tree, cache, tag, cand: vec![None; n], rdata: vec![None; n] })
    }

    fn item_table(&self, it: &SkelEdge) -> [i64; 5] {
        match it.kind {
            SkelKind::Virtual(c) => self.cand[c].as_ref().expect("child computed").table(),
            _ => Q_TABLE,
        }
    }

    fn r_skeleton(&self, id: NodeId) -> (RSkeleton, Vec<usize>, Vec<VertexId>) {
        let node = &self.tree.nodes[id];
        let sk = &node.skeleton;
        let verts = sk.vertices.clone();
        let li = |v: VertexId| verts.binary_search(&v).expect("skeleton vertex");
        let mut order: Vec<usize> = (0..sk.edges.len()).collect();
        order.sort_by_key(|&i| {
            let (a, b) = (li(sk.edges[i].ends.0), li(sk.edges[i].ends.1));
            (a.min(b), a.max(b))
        });
        let mut pos = vec![0; sk.edges.len()];
        for (l, &i) in order.iter().enumerate() {
            pos[i] = l;
        }
        let edges: Vec<(usize, usize)> =
            order.iter().map(|&i| (li(sk.edges[i].ends.0), li(sk.edges[i].ends.1))).collect();
        let graph = Graph::new(verts.len(), &edges).expect("rigid skeletons are simple 3-graphs");
        let rotation = sk.rotation.iter().map(|r| r.iter().map(|&i| pos[i]).collect()).collect();
        let tables = order.iter().map(|&i| self.item_table(&sk.edges[i])).collect();
        let virtual_edge = order.iter().map(|&i| sk.edges[i].is_virtual()).collect();
        let skel = RSkeleton {
            graph,
            rotation,
            ref_edge: pos[0],
            poles: (li(node.poles.0), li(node.poles.1)),
            tables,
            virtual_edge,
        };
        (skel, order, verts)
    }

    /// Bottom-up candidates for every node below the root child.
    fn compute_inner(&mut self) {
        let mut order = Vec::new();
        let mut q = VecDeque::from([self.tree.root_child]);
        while let Some(id) = q.pop_front() {
            order.push(id);
            q.extend(self.tree.nodes[id].children.iter().copied());
        }
        for &id in order.iter().rev() {
            if id == self.tree.root_child {
                continue;
            }
            let node = &self.tree.nodes[id];
            let cs = match node.kind {
                NodeKind::Q => CandidateSet::Q(candidates_q()),
                NodeKind::S => {
                    let (n_q, thick) = self.series_parts(id);
                    CandidateSet::S(candidates_s(n_q, &thick))
                }
                NodeKind::P => {
                    let sk = &node.skeleton.edges;
                    CandidateSet::P(candidates_p(&self.item_table(&sk[1]), &self.item_table(&sk[2])))
                }
                NodeKind::R => {
                    let (skel, local_edge, verts) = self.r_skeleton(id);
                    let x = self.cache.shape(self.tag, &skel, &verts, RefMode::Inner(1, 1));
                    let d0 = self.cache.shape(self.tag, &skel, &verts, RefMode::Inner(0, 2));
                    let d1 = self.cache.shape(self.tag, &skel, &verts, RefMode::Inner(2, 0));
                    let cost = |s: &Option<Arc<SkeletonShape>>| s.as_ref().map_or(INF_COST, |s| s.cost);
                    let d = if cost(&d1) < cost(&d0) { d1 } else { d0 };
                    let cs = CandidateSet::R { x: cost(&x), d: cost(&d) };
                    self.rdata[id] = Some(RData { skel, local_edge, verts, x, d });
                    cs
                }
            };
            self.cand[id] = Some(cs);
        }
    }

    fn series_parts(&self, id: NodeId) -> (usize, Vec<(i64, i64)>) {
        let mut n_q = 0;
        let mut thick = Vec::new();
        for it in &self.tree.nodes[id].skeleton.edges[1..] {
            match it.kind {
                SkelKind::Virtual(c) => thick.push(self.cand[c].as_ref().expect("child computed").xd()),
                _ => n_q += 1,
            }
        }
        (n_q, thick)
    }

    /// Cost of the whole block and how to draw it.
    fn solve_root(&mut self) -> Result<(i64, RootPlan), SolveError> {
        self.compute_inner();
        let rc = self.tree.root_child;
        let node = &self.tree.nodes[rc];
        match node.kind {
            NodeKind::S => {
                let (n_q, thick) = self.series_parts(rc);
                let s = candidates_s(n_q, &thick);
                Ok((root_s_cost(&s), RootPlan::S(s)))
            }
            NodeKind::P => {
                let sk = &node.skeleton.edges;
                if sk.len() != 3 {
                    return Err(invariant("root P-node without exactly two children"));
                }
                let (t1, t2) = (self.item_table(&sk[1]), self.item_table(&sk[2]));
                let (c, plan) = theta_search(&t1, &t2).ok_or_else(|| invariant("no layout for the root P-node"))?;
                Ok((c, RootPlan::P(plan)))
            }
            NodeKind::R => {
                let (skel, local_edge, verts) = self.r_skeleton(rc);
                let (u, v) = skel.graph.endpoints(skel.ref_edge);
                let mut best: Option<(Arc<SkeletonShape>, Dart)> = None;
                for w in [u, v] {
                    let d = dart_from(&skel.graph, skel.ref_edge, w);
                    if let Some(s) = self.cache.shape(self.tag, &skel, &verts, RefMode::Root(d)) {
                        if best.as_ref().is_none_or(|(b, _)| s.cost < b.cost) {
                            best = Some((s, d));
                        }
                    }
                }
                let (shape, ext) = best.ok_or_else(|| invariant("no shape for the root R-node"))?;
                let cost = shape.cost;
                self.rdata[rc] = Some(RData { skel, local_edge, verts, x: None, d: None });
                Ok((cost, RootPlan::R { shape, ext }))
            }
            NodeKind::Q => Err(invariant("root child is a Q-node")),
        }
    }

    fn frame(&self, id: NodeId, shape: Shape) -> Result<Frame, SolveError> {
        match self.tree.nodes[id].kind {
            NodeKind::P => Ok(match shape {
                Shape::X => Frame { u: [0, 3], v: [1, 2], c_dir: 0, c_turn: -1 },
                Shape::D => Frame { u: [0, 3], v: [2, 3], c_dir: 0, c_turn: 0 },
            }),
            NodeKind::R => {
                let rd = self.rdata[id].as_ref().expect("rigid data");
                let sh = self.r_shape(id, shape)?;
                let sk = &rd.skel;
                let g = &sk.graph;
                let dir = sk.directions(sh, true);
                let ports = |w: VertexId| -> [u8; 2] {
                    let ds: Vec<u8> =
                        g.incident(w).iter().filter(|&&e| e != sk.ref_edge).map(|&e| dir[dart_from(g, e, w)]).collect();
                    [ds[0], ds[1]]
                };
                let contour = sk.left_contour();
                let lb = |d: Dart| if d & 1 == 0 { sh.bends[d >> 1] } else { -sh.bends[d >> 1] };
                let mut turn = 0;
                for (i, &d) in contour.iter().enumerate() {
                    turn += lb(d);
                    if let Some(&nx) = contour.get(i + 1) {
                        turn += vertex_turn(dir_add(dir[d], lb(d)), dir[nx]);
                    }
                }
                Ok(Frame { u: ports(sk.poles.0), v: ports(sk.poles.1), c_dir: dir[contour[0]], c_turn: turn })
            }
            _ => Err(invariant("frame of a series node")),
        }
    }

    fn r_shape(&self, id: NodeId, shape: Shape) -> Result<&SkeletonShape, SolveError> {
        let rd = self.rdata[id].as_ref().expect("rigid data");
        let s = match shape {
            Shape::X => &rd.x,
            Shape::D => &rd.d,
        };
        s.as_deref().ok_or_else(|| invariant("missing rigid shape"))
    }

    /// Top-down expansion of the root plan.
    fn draw(&self, plan: &RootPlan) -> Result<BlockDrawing, SolveError> {
        let g = self.g;
        let mut cv = Canvas::new(g.m());
        let mut comps = Vec::new();
        let mut tasks: Vec<Task> = Vec::new();
        let rc = self.tree.root_child;
        let e = self.tree.ref_edge;
        let (x, y) = self.tree.nodes[self.tree.root].poles;
        let ext = match plan {
            RootPlan::S(s) => {
                let mut elems = vec![Elem::Edge(e, y)];
                elems.extend(self.series_elems(rc, s));
                self.run_chain(&elems, true, 0, 4, &mut cv, &mut tasks)?;
                dart_from(g, e, x)
            }
            RootPlan::P(p) => {
                let sk = &self.tree.nodes[rc].skeleton.edges;
                cv.set_edge(g, e, x, 0, p.b);
                tasks.push(Task::Series { item: sk[1].clone(), dep: p.d1, k: p.s1 });
                tasks.push(Task::Series { item: sk[2].clone(), dep: p.d2, k: p.s2 });
                if p.ext_left {
                    dart_from(g, e, x)
                } else {
                    dart_from(g, e, y)
                }
            }
            RootPlan::R { shape, ext: ld } => {
                let rd = self.rdata[rc].as_ref().expect("rigid data");
                self.place_rigid(rc, shape, false, Xf { r: 0, s: 1 }, &mut cv, &mut tasks);
                let lt = crate::embedding::tail(&rd.skel.graph, *ld);
                dart_from(g, e, rd.verts[lt])
            }
        };
        while let Some(t) = tasks.pop() {
            match t {
                Task::Series { item, dep, k } => match item.kind {
                    SkelKind::Virtual(c) => {
                        let node = &self.tree.nodes[c];
                        if node.poles.0 != item.ends.0 {
                            return Err(invariant("series child poles out of order"));
                        }
                        let s = match self.cand[c].as_ref() {
                            Some(CandidateSet::S(s)) => s,
                            _ => return Err(invariant("series child without S candidates")),
                        };
                        comps.push(ComponentCheck {
                            kind: NodeKind::S,
                            edges: node.edges.clone(),
                            poles: node.poles,
                            shape: None,
                            spirality: Some(k.unsigned_abs()),
                        });
                        let elems = self.series_elems(c, s);
                        self.run_chain(&elems, false, dep, k, &mut cv, &mut tasks)?;
                    }
                    _ => {
                        let e = item.real().ok_or_else(|| invariant("reference edge as a series item"))?;
                        cv.set_edge(g, e, item.ends.0, dep, k);
                    }
                },
                Task::Thick { node, shape, xf } => {
                    let nd = &self.tree.nodes[node];
                    comps.push(ComponentCheck {
                        kind: nd.kind,
                        edges: nd.edges.clone(),
                        poles: nd.poles,
                        shape: Some(shape),
                        spirality: None,
                    });
                    match nd.kind {
                        NodeKind::P => self.place_parallel(node, shape, xf, &mut tasks),
                        NodeKind::R => {
                            let sh = self.r_shape(node, shape)?;
                            self.place_rigid(node, sh, true, xf, &mut cv, &mut tasks);
                        }
                        _ => return Err(invariant("thick child is neither P nor R")),
                    }
                }
            }
        }
        if cv.dir.contains(&u8::MAX) {
            return Err(invariant("some edge was not placed"));
        }
        Ok(BlockDrawing { geo: Geometry { dart_dir: cv.dir, bends: cv.bends }, ext, comps })
    }

    fn series_elems(&self, id: NodeId, s: &SCandidates) -> Vec<Elem> {
        let mut shapes = s.shapes.iter();
        self.tree.nodes[id].skeleton.edges[1..]
            .iter()
            .map(|it| match it.kind {
                SkelKind::Virtual(c) => Elem::Thick(c, *shapes.next().expect("shape per thick child")),
                SkelKind::Real(e, _) => Elem::Edge(e, it.ends.0),
                SkelKind::Reference => unreachable!("reference edge inside a chain"),
            })
            .collect()
    }

    /// Distributes the total turn `k` over the joints of a chain (free), then
    /// over its real edges as bends, and walks the chain.
    fn run_chain(
        &self,
        elems: &[Elem],
        cyclic: bool,
        dep: u8,
        k: i32,
        cv: &mut Canvas,
        tasks: &mut Vec<Task>,
    ) -> Result<(), SolveError> {
        let l = elems.len();
        let is_edge = |i: usize| matches!(elems[i], Elem::Edge(..));
        let mut cap = vec![0i32; l];
        for i in 0..l {
            cap[i] = match elems[i] {
                Elem::Thick(_, Shape::D) => 2,
                Elem::Thick(_, Shape::X) => 1,
                Elem::Edge(..) => {
                    if (i + 1 < l || cyclic) && is_edge((i + 1) % l) {
                        1
                    } else {
                        0
                    }
                }
            };
        }
        let sigma = k.signum();
        let mut rem = k.abs();
        let mut turn = vec![0i32; l];
        for i in 0..l {
            let t = cap[i].min(rem);
            turn[i] = sigma * t;
            rem -= t;
        }
        let edge_pos: Vec<usize> = (0..l).filter(|&i| is_edge(i)).collect();
        let mut bend = vec![0i32; l];
        let mut j = 0;
        while rem > 0 {
            bend[edge_pos[j % edge_pos.len()]] += sigma;
            rem -= 1;
            j += 1;
        }
        let mut h = dep;
        for i in 0..l {
            match elems[i] {
                Elem::Edge(e, from) => {
                    cv.set_edge(self.g, e, from, h, bend[i]);
                    h = dir_add(h, bend[i] + turn[i]);
                }
                Elem::Thick(c, shape) => {
                    let f = self.frame(c, shape)?;
                    let (xf, h_out) =
                        through(&f, h, turn[i]).ok_or_else(|| invariant("no placement for a P/R part"))?;
                    tasks.push(Task::Thick { node: c, shape, xf });
                    h = h_out;
                }
            }
        }
        if cyclic && h != dep {
            return Err(invariant("series cycle does not close"));
        }
        Ok(())
    }

    fn place_parallel(&self, id: NodeId, shape: Shape, xf: Xf, tasks: &mut Vec<Task>) {
        let sk = &self.tree.nodes[id].skeleton.edges;
        let first_straight = match self.cand[id].as_ref() {
            Some(CandidateSet::P(p)) => p.d_first_straight,
            _ => true,
        };
        let (a, b) = (sk[1].clone(), sk[2].clone());
        let parts = match shape {
            Shape::X => [(a, 0u8, -1i32), (b, 3, 1)],
            Shape::D if first_straight => [(a, 0, 0), (b, 3, 2)],
            Shape::D => [(b, 0, 0), (a, 3, 2)],
        };
        for (item, dep, k) in parts {
            tasks.push(Task::Series { item, dep: xf.dir(dep), k: xf.s * k });
        }
    }

    fn place_rigid(&self, id: NodeId, sh: &SkeletonShape, inner: bool, xf: Xf, cv: &mut Canvas, tasks: &mut Vec<Task>) {
        let rd = self.rdata[id].as_ref().expect("rigid data");
        let sk = &rd.skel;
        let lg = &sk.graph;
        let dir = sk.directions(sh, inner);
        let skel_edges = &self.tree.nodes[id].skeleton.edges;
        for le in 0..lg.m() {
            if inner && le == sk.ref_edge {
                continue;
            }
            let it = &skel_edges[rd.local_edge[le]];
            let a = it.ends.0;
            let la = sk.graph.endpoints(le);
            let la = if rd.verts[la.0] == a { la.0 } else { la.1 };
            let dl = dart_from(lg, le, la);
            let lb = if dl & 1 == 0 { sh.bends[le] } else { -sh.bends[le] };
            let d = xf.dir(dir[dl]);
            let k = xf.s * lb;
            match it.kind {
                SkelKind::Reference => cv.set_edge(self.g, self.tree.ref_edge, a, d, k),
                SkelKind::Real(e, _) => cv.set_edge(self.g, e, a, d, k),
                SkelKind::Virtual(_) => tasks.push(Task::Series { item: it.clone(), dep: d, k }),
            }
        }
    }
}

/// Minimum cost of a biconnected graph with `e` on the external face.
pub(crate) fn solve_biconnected(
    g: &Graph,
    emb: &PlanarEmbedding,
    e: EdgeId,
    cache: &ShapeCache,
    tag: usize,
    draw: bool,
) -> Result<(i64, Option<BlockDrawing>), SolveError> {
    let mut dp = TreeDp::new(g, emb, e, cache, tag)?;
    let (cost, plan) = dp.solve_root()?;
    let drawing = if draw { Some(dp.draw(&plan)?) } else { None };
    Ok((cost, drawing))
}

/// Candidate sets of all nodes of the SPQR-tree rooted at `e` (root child
/// excluded), for inspection.
pub fn candidate_sets(
    g: &Graph,
    emb: &PlanarEmbedding,
    e: EdgeId,
) -> Result<Vec<(NodeId, NodeKind, CandidateSet)>, SolveError> {
    let cache = ShapeCache::default();
    let mut dp = TreeDp::new(g, emb, e, &cache, 0)?;
    dp.compute_inner();
    Ok(dp.cand.iter().enumerate().filter_map(|(i, c)| c.clone().map(|c| (i, dp.tree.nodes[i].kind, c))).collect())
}

/// The result of a bend minimization.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub rep: OrthoRep,
    pub bends: usize,
    /// Reference edge kept on the external face (none for edgeless graphs).
    pub ref_edge: Option<EdgeId>,
    pub bend_strings: Vec<String>,
    /// Inner SPQR components of every drawn block, with their intended shape
    /// or spirality.
    pub components: Vec<ComponentCheck>,
}

struct BlockGraph {
    g: Graph,
    emb: PlanarEmbedding,
    vmap: Vec<VertexId>,
    emap: Vec<EdgeId>,
}

impl BlockGraph {
    fn local_vertex(&self, v: VertexId) -> VertexId {
        self.vmap.binary_search(&v).expect("vertex of block")
    }

    fn local_edge(&self, e: EdgeId) -> EdgeId {
        self.emap.binary_search(&e).expect("edge of block")
    }
}

/// Bend minimization driver for a connected planar 3-graph.
pub struct Solver<'a> {
    g: &'a Graph,
    bc: BlockCutTree,
    blocks: Vec<Option<BlockGraph>>,
    cache: ShapeCache,
    vertex_costs: Mutex<HashMap<(usize, VertexId), (i64, EdgeId)>>,
}

impl<'a> Solver<'a> {
    /// `emb` seeds the skeleton rotations; any planar embedding of `g` works.
    pub fn new(g: &'a Graph, emb: &PlanarEmbedding) -> Result<Self, SolveError> {
        let bc = block_cut_tree(g)?;
        let mut blocks = Vec::with_capacity(bc.blocks.len());
        for b in &bc.blocks {
            if b.trivial {
                blocks.push(None);
                continue;
            }
            let (sub, vmap, emap) = g.edge_subgraph(&b.edges);
            let rot = emb.restrict(&vmap, &emap);
            let bemb = PlanarEmbedding::new(&sub, rot, 0).map_err(|_| SolveError::NotPlanar)?;
            blocks.push(Some(BlockGraph { g: sub, emb: bemb, vmap, emap }));
        }
        Ok(Solver { g, bc, blocks, cache: ShapeCache::default(), vertex_costs: Mutex::new(HashMap::new()) })
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    fn block(&self, bi: usize) -> &BlockGraph {
        self.blocks[bi].as_ref().expect("full block")
    }

    /// Cost of block `bi` with its cut vertex `c` on the external face, and
    /// the reference edge (global id) achieving it.
    fn vertex_cost(&self, bi: usize, c: VertexId) -> Result<(i64, EdgeId), SolveError> {
        if let Some(&v) = self.vertex_costs.lock().expect("lock").get(&(bi, c)) {
            return Ok(v);
        }
        let bg = self.block(bi);
        let lc = bg.local_vertex(c);
        let mut best: Option<(i64, EdgeId)> = None;
        for &le in bg.g.incident(lc) {
            let (cost, _) = solve_biconnected(&bg.g, &bg.emb, le, &self.cache, bi, false)?;
            let ge = bg.emap[le];
            if best.is_none_or(|b| (cost, ge) < b) {
                best = Some((cost, ge));
            }
        }
        let best = best.ok_or(SolveError::IsolatedVertex(c))?;
        self.vertex_costs.lock().expect("lock").insert((bi, c), best);
        Ok(best)
    }

    /// Blocks in attachment order from the block of `e`, each with the cut
    /// vertex joining it to its parent.
    fn attachment_order(&self, e: EdgeId) -> Vec<(usize, Option<VertexId>)> {
        let root = self.bc.edge_block[e];
        let mut seen = vec![false; self.bc.blocks.len()];
        seen[root] = true;
        let mut out = vec![(root, None)];
        let mut i = 0;
        while i < out.len() {
            let (b, _) = out[i];
            i += 1;
            for &v in &self.bc.blocks[b].vertices {
                for &b2 in self.bc.blocks_at(v) {
                    if !seen[b2] {
                        seen[b2] = true;
                        out.push((b2, Some(v)));
                    }
                }
            }
        }
        out
    }

    /// Minimum bends with edge `e` on the external face (cost only).
    pub fn ref_edge_cost(&self, e: EdgeId) -> Result<i64, SolveError> {
        if e >= self.g.m() {
            return Err(SolveError::NoSuchEdge(e));
        }
        let mut total = 0;
        for (b, at) in self.attachment_order(e) {
            if self.bc.blocks[b].trivial {
                continue;
            }
            total += match at {
                None => {
                    let bg = self.block(b);
                    solve_biconnected(&bg.g, &bg.emb, bg.local_edge(e), &self.cache, b, false)?.0
                }
                Some(c) => self.vertex_cost(b, c)?.0,
            };
        }
        Ok(total)
    }

    /// Bend-minimum representation with edge `e` on the external face.
    pub fn ref_edge(&self, e: EdgeId) -> Result<SolveResult, SolveError> {
        if e >= self.g.m() {
            return Err(SolveError::NoSuchEdge(e));
        }
        let g = self.g;
        let mut cv = Canvas::new(g.m());
        let mut comps = Vec::new();
        let mut total = 0i64;
        let mut ext = 2 * e;
        for (b, at) in self.attachment_order(e) {
            let blk = &self.bc.blocks[b];
            if blk.trivial {
                let be = blk.edges[0];
                let (p, q) = g.endpoints(be);
                match at {
                    None => cv.set_edge(g, be, p, 0, 0),
                    Some(c) => {
                        let port = free_port(g, &cv, c).ok_or_else(|| invariant("no free port at a cut vertex"))?;
                        let _ = q;
                        cv.set_edge(g, be, c, port, 0);
                    }
                }
                continue;
            }
            let bg = self.block(b);
            let le = match at {
                None => bg.local_edge(e),
                Some(c) => bg.local_edge(self.vertex_cost(b, c)?.1),
            };
            let (cost, drawing) = solve_biconnected(&bg.g, &bg.emb, le, &self.cache, b, true)?;
            total += cost;
            let drawing = drawing.expect("drawing requested");
            let r = match at {
                None => {
                    ext = {
                        let ld = drawing.ext;
                        let ge = bg.emap[ld >> 1];
                        let tail_local = crate::embedding::tail(&bg.g, ld);
                        dart_from(g, ge, bg.vmap[tail_local])
                    };
                    0
                }
                Some(c) => {
                    // the edge joining c to the parent is a placed bridge
                    let bridge = g
                        .incident(c)
                        .iter()
                        .copied()
                        .find(|&x| self.bc.edge_block[x] != b && cv.dir[dart_from(g, x, c)] != u8::MAX)
                        .ok_or_else(|| invariant("block attached without a placed bridge"))?;
                    let want = cv.dir[dart_from(g, bridge, c)];
                    let f = external_port(&bg.g, &drawing, bg.local_vertex(c))?;
                    (want as i32 - f as i32).rem_euclid(4) as u8
                }
            };
            for le in 0..bg.g.m() {
                let ge = bg.emap[le];
                let (la, _) = bg.g.endpoints(le);
                let dl = 2 * le;
                let d = dir_add(drawing.geo.dart_dir[dl], r as i32);
                let lb = drawing.geo.bends[le];
                cv.set_edge(g, ge, bg.vmap[la], d, lb);
            }
            for c in drawing.comps {
                comps.push(ComponentCheck {
                    edges: c.edges.iter().map(|&x| bg.emap[x]).collect(),
                    poles: (bg.vmap[c.poles.0], bg.vmap[c.poles.1]),
                    ..c
                });
            }
        }
        if cv.dir.contains(&u8::MAX) {
            return Err(invariant("edge left unplaced"));
        }
        let geo = Geometry { dart_dir: cv.dir, bends: cv.bends };
        let rep = OrthoRep::from_geometry(g, &geo, Some(ext)).map_err(|x| invariant(x.to_string()))?;
        validate_rep(&rep).map_err(|x| invariant(x.to_string()))?;
        let bends = rep.total_bends();
        if bends as i64 != total {
            return Err(invariant(format!("drawing has {bends} bends, expected {total}")));
        }
        Ok(SolveResult { bend_strings: rep.bends.clone(), rep, bends, ref_edge: Some(e), components: comps })
    }

    /// Bend-minimum representation with vertex `v` on the external face.
    pub fn vertex(&self, v: VertexId) -> Result<SolveResult, SolveError> {
        if v >= self.g.n() {
            return Err(SolveError::NoSuchVertex(v));
        }
        let inc = self.g.incident(v);
        if inc.is_empty() {
            return Err(SolveError::IsolatedVertex(v));
        }
        let mut best: Option<(i64, EdgeId)> = None;
        for &e in inc {
            let c = self.ref_edge_cost(e)?;
            if best.is_none_or(|b| (c, e) < b) {
                best = Some((c, e));
            }
        }
        self.ref_edge(best.expect("incident edge").1)
    }

    /// Bend-minimum representation over all planar embeddings. Reference
    /// edges are evaluated in parallel; ties go to the smallest edge id.
    pub fn global(&self) -> Result<SolveResult, SolveError> {
        if self.g.m() == 0 {
            return Ok(edgeless(self.g));
        }
        let costs: Vec<Result<(i64, EdgeId), SolveError>> =
            (0..self.g.m()).into_par_iter().map(|e| self.ref_edge_cost(e).map(|c| (c, e))).collect();
        let mut best: Option<(i64, EdgeId)> = None;
        for c in costs {
            let c = c?;
            if best.is_none_or(|b| c < b) {
                best = Some(c);
            }
        }
        self.ref_edge(best.expect("at least one edge").1)
    }
}

/// Checks a solver output: a valid representation, at most two bends per
/// edge, inner P/R components with the intended X or D shape and inner series
/// components with the intended spirality, never above four.
pub fn verify(res: &SolveResult) -> Result<(), String> {
    validate_rep(&res.rep).map_err(|e| e.to_string())?;
    if res.rep.max_bends_per_edge() > 2 {
        return Err("an edge has more than two bends".into());
    }
    if res.rep.total_bends() != res.bends {
        return Err("bend count disagrees with the representation".into());
    }
    for c in &res.components {
        let comp = Component { edges: c.edges.clone(), poles: c.poles };
        if let Some(shape) = c.shape {
            let got = classify_shape(&res.rep, &comp).map_err(|e| e.to_string())?;
            let want = match shape {
                Shape::X => ShapeClass::X,
                Shape::D => ShapeClass::D,
            };
            if got != want {
                return Err(format!("{:?} component at {:?} is {got:?}, expected {want:?}", c.kind, c.poles));
            }
        }
        if let Some(k) = c.spirality {
            let got = spirality(&res.rep, &comp).map_err(|e| e.to_string())?;
            if got != k || got > 4 {
                return Err(format!("series at {:?} has spirality {got}, expected {k}", c.poles));
            }
        }
    }
    Ok(())
}

/// Lowest direction not used by a placed dart at `v`.
fn free_port(g: &Graph, cv: &Canvas, v: VertexId) -> Option<u8> {
    let used: Vec<u8> = g.incident(v).iter().map(|&e| cv.dir[dart_from(g, e, v)]).filter(|&d| d != u8::MAX).collect();
    (0..4u8).find(|d| !used.contains(d))
}

/// A free direction at `c` pointing into the external face of a block drawing.
fn external_port(g: &Graph, drawing: &BlockDrawing, c: VertexId) -> Result<u8, SolveError> {
    let rep = OrthoRep::from_geometry(g, &drawing.geo, Some(drawing.ext)).map_err(|x| invariant(x.to_string()))?;
    let fs = trace_faces(&rep.embedding, g);
    let rot = &rep.embedding.rotation[c];
    for (i, &e) in rot.iter().enumerate() {
        let din = dart_from(g, e, g.other(e, c));
        debug_assert_eq!(head(g, din), c);
        if fs.face_of_dart[din] == rep.embedding.external && rep.angles[c][i] >= 2 {
            return Ok(dir_add(drawing.geo.dart_dir[dart_from(g, e, c)], -1));
        }
    }
    Err(invariant("attachment vertex has no free external port"))
}

fn edgeless(g: &Graph) -> SolveResult {
    let rep = OrthoRep {
        graph: g.clone(),
        embedding: PlanarEmbedding { rotation: vec![Vec::new(); g.n()], external: 0 },
        angles: vec![Vec::new(); g.n()],
        bends: Vec::new(),
    };
    SolveResult { rep, bends: 0, ref_edge: None, bend_strings: Vec::new(), components: Vec::new() }
}

/// Bend-minimum drawing with `e` on the external face.
pub fn bend_min_ref_edge(g: &Graph, emb: &PlanarEmbedding, e: EdgeId) -> Result<SolveResult, SolveError> {
    Solver::new(g, emb)?.ref_edge(e)
}

/// Bend-minimum drawing with `v` on the external face.
pub fn bend_min_vertex(g: &Graph, emb: &PlanarEmbedding, v: VertexId) -> Result<SolveResult, SolveError> {
    Solver::new(g, emb)?.vertex(v)
}

/// Bend-minimum drawing over all planar embeddings.
pub fn bend_min_global(g: &Graph, emb: &PlanarEmbedding) -> Result<SolveResult, SolveError> {
    Solver::new(g, emb)?.global()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_law_examples() {
        assert_eq!(candidates_s(3, &[]).table, [0, 0, 0, 1, 2]);
        // n_q = 2 and one D child of cost 5
        assert_eq!(candidates_s(2, &[(6, 5)]).table, [5, 5, 5, 6, 7]);
        let s = candidates_s(2, &[(3, 4)]);
        assert_eq!(s.table, [3, 3, 4, 5, 6]);
        assert_eq!(s.shapes, vec![Shape::X]);
    }

    #[test]
    fn p_examples() {
        let p = candidates_p(&[0, 0, 1, 2, 3], &[0, 0, 0, 1, 2]);
        assert_eq!((p.x, p.d), (0, 0));
        let p = candidates_p(&[2, 2, 3, 4, 5], &[2, 2, 2, 3, 4]);
        assert_eq!(p.x, 4);
    }

    #[test]
    fn theta_layouts() {
        // two paths of two edges each: the reference edge must bend twice
        let t = candidates_s(2, &[]).table;
        let (c, _) = theta_search(&t, &t).unwrap();
        let diamond = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(c as usize, crate::oracle::brute_min_bends_edge(&diamond, 0).unwrap().0);
        // long paths: no bends at all
        let t = candidates_s(6, &[]).table;
        assert_eq!(theta_search(&t, &t).unwrap().0, 0);
    }

    #[test]
    fn through_turns_cover_shape_ranges() {
        let x = Frame { u: [0, 3], v: [1, 2], c_dir: 0, c_turn: -1 };
        let d = Frame { u: [0, 3], v: [2, 3], c_dir: 0, c_turn: 0 };
        for h in 0..4 {
            for tau in -1..=1 {
                assert!(through(&x, h, tau).is_some(), "X h={h} tau={tau}");
            }
            assert!(through(&x, h, 2).is_none());
            for tau in -2..=2 {
                assert!(through(&d, h, tau).is_some(), "D h={h} tau={tau}");
            }
        }
    }

    fn graph(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn global(g: &Graph) -> SolveResult {
        let emb = crate::embedding::planar_embedding(g).unwrap();
        bend_min_global(g, &emb).unwrap()
    }

    fn check(g: &Graph) {
        let emb = crate::embedding::planar_embedding(g).unwrap();
        let solver = Solver::new(g, &emb).unwrap();
        let r = solver.global().unwrap();
        let (want, _) = crate::oracle::brute_min_bends(g).unwrap();
        assert_eq!(r.bends, want, "global on {:?}", g.edges());
        assert!(r.rep.max_bends_per_edge() <= 2);
        for e in 0..g.m() {
            let r = solver.ref_edge(e).unwrap();
            let (want, _) = crate::oracle::brute_min_bends_edge(g, e).unwrap();
            assert_eq!(r.bends, want, "edge {e} on {:?}", g.edges());
        }
    }

    #[test]
    fn named_values() {
        assert_eq!(global(&graph(3, &[(0, 1), (1, 2), (2, 0)])).bends, 1);
        assert_eq!(global(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).bends, 0);
        assert_eq!(global(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])).bends, 0);
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let r = global(&k4);
        assert_eq!(r.bends, 4);
        assert_eq!(r.bend_strings.iter().filter(|s| s.len() == 2).count(), 1);
        let q3 =
            graph(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]);
        // every vertex has degree three, so the external face needs four bends
        assert_eq!(global(&q3).bends, 4);
        assert_eq!(crate::oracle::brute_min_bends(&q3).unwrap().0, 4);
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(global(&path).bends, 0);
    }

    #[test]
    fn matches_oracle_on_small_graphs() {
        let cases: Vec<Graph> = vec![
            graph(3, &[(0, 1), (1, 2), (2, 0)]),
            graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
            graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
            graph(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
            graph(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]),
            graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
            graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]),
            graph(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]),
            graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (1, 5), (5, 3)]),
        ];
        for g in &cases {
            check(g);
        }
    }

    #[test]
    fn bridge_joined_triangles() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(global(&g).bends, 2);
    }
}
