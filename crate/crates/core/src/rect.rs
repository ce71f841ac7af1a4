//! Orthogonal shape networks for plane skeletons. Covers bend-free drawings
//! with bad-cycle machinery. Also computes X/D shapes of rigid skeletons.
//!
//! Every shape question here is answered by one convex-cost flow. Each angle
//! is a variable in a range; a unit of flow from a vertex to a face widens an
//! angle by 90 degrees. A unit from face `f` to face `f'` across an edge is a
//! left bend along the dart whose left face is `f`. A face with target turn
//! number `t` absorbs `Σ(2 − lo) − t` units.

use crate::embedding::{
    dart_edge, dart_from, head, is_bad_cycle, legged_cycles, trace_faces, Dart, LeggedCycle, PlanarEmbedding,
};
use crate::flow::MinCostFlow;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::ortho::{dir_add, Geometry, OrthoRep};
use serde::Serialize;
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

/// Cost standing for "not available".
pub const INF_COST: i64 = i64::MAX / 16;

/// Weight of one bend in network costs; smaller weights break ties.
pub(crate) const SCALE: i64 = 1 << 24;

/// Bend cost table of a real edge: at most two bends.
pub const Q_TABLE: [i64; 5] = [0, 1, 2, INF_COST, INF_COST];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RectError {
    #[error("designated corners must be four distinct degree-2 vertices on the external face")]
    BadCorners,
    #[error("no rectangular drawing exists for these corners")]
    NoRectangularDrawing,
    #[error("the graph has no bend-free drawing with these corners")]
    ConditionsViolated,
}

/// An angle variable; `face == usize::MAX` excludes it from every face.
#[derive(Clone, Copy, Debug)]
pub struct NetAngle {
    pub vertex: usize,
    pub face: usize,
    pub lo: u8,
    pub hi: u8,
}

#[derive(Clone, Debug)]
pub struct NetEdge {
    /// Face left of the forward dart and face left of the backward dart.
    pub faces: (usize, usize),
    /// Marginal cost of the k-th bend (k = 1, 2, ...), in either direction.
    pub marginal: Vec<i64>,
}

/// A convex-cost orthogonal network.
#[derive(Clone, Debug, Default)]
pub struct ShapeNetwork {
    pub vertex_sum: Vec<i32>,
    pub face_target: Vec<i32>,
    pub angles: Vec<NetAngle>,
    pub edges: Vec<NetEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetSolution {
    pub cost: i64,
    pub angle: Vec<u8>,
    /// Net left bends along each forward dart.
    pub bends: Vec<i32>,
}

/// A network translated to min-cost flow form, kept for re-solving.
#[derive(Clone, Debug)]
pub(crate) struct BuiltNetwork {
    mcf: MinCostFlow,
    nv: usize,
    lo: Vec<u8>,
    angle_arcs: Vec<Option<usize>>,
    bend_arcs: Vec<(Vec<usize>, Vec<usize>)>,
}

impl BuiltNetwork {
    fn extract(&self, cost: i64) -> NetSolution {
        let mcf = &self.mcf;
        let angle = self
            .lo
            .iter()
            .zip(&self.angle_arcs)
            .map(|(&lo, arc)| lo + arc.map_or(0, |id| mcf.flow(id) as u8))
            .collect();
        let bends = self
            .bend_arcs
            .iter()
            .map(|(fw, bw)| {
                let f: i64 = fw.iter().map(|&i| mcf.flow(i)).sum();
                let b: i64 = bw.iter().map(|&i| mcf.flow(i)).sum();
                (f - b) as i32
            })
            .collect();
        NetSolution { cost, angle, bends }
    }
}

impl ShapeNetwork {
    fn build(&self) -> Option<BuiltNetwork> {
        let nv = self.vertex_sum.len();
        let nf = self.face_target.len();
        let mut mcf = MinCostFlow::new(nv + nf);
        let mut lo_sum = vec![0i32; nv];
        let mut face_need = vec![0i32; nf];
        let mut angle_arcs = Vec::with_capacity(self.angles.len());
        for a in &self.angles {
            lo_sum[a.vertex] += a.lo as i32;
            if a.face != usize::MAX {
                face_need[a.face] += 2 - a.lo as i32;
            }
            if a.hi > a.lo {
                let f = if a.face == usize::MAX { return None } else { a.face };
                angle_arcs.push(Some(mcf.add_arc(a.vertex, nv + f, (a.hi - a.lo) as i64, 0)));
            } else {
                angle_arcs.push(None);
            }
        }
        for v in 0..nv {
            let s = self.vertex_sum[v] - lo_sum[v];
            if s < 0 {
                return None;
            }
            mcf.add_supply(v, s as i64);
        }
        for f in 0..nf {
            mcf.add_supply(nv + f, -((face_need[f] - self.face_target[f]) as i64));
        }
        let mut bend_arcs: Vec<(Vec<usize>, Vec<usize>)> = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let (f0, f1) = e.faces;
            let mut fw = Vec::new();
            let mut bw = Vec::new();
            if f0 != f1 && f0 != usize::MAX && f1 != usize::MAX {
                for &c in &e.marginal {
                    fw.push(mcf.add_arc(nv + f0, nv + f1, 1, c));
                    bw.push(mcf.add_arc(nv + f1, nv + f0, 1, c));
                }
            }
            bend_arcs.push((fw, bw));
        }
        let lo = self.angles.iter().map(|a| a.lo).collect();
        Some(BuiltNetwork { mcf, nv, lo, angle_arcs, bend_arcs })
    }

    pub fn solve(&self) -> Option<NetSolution> {
        let mut b = self.build()?;
        let cost = b.mcf.solve()?;
        Some(b.extract(cost))
    }
}

/// A solved root network of a rigid skeleton. Other choices of the external
/// face are obtained by moving eight units of face demand in the residual
/// network instead of solving from scratch.
#[derive(Clone, Debug)]
pub(crate) struct RootNetwork {
    built: BuiltNetwork,
    face_of_dart: Vec<usize>,
    base_face: usize,
    base_cost: i64,
}

/// Marginal network costs for a bend cost table.
pub(crate) fn marginals(table: &[i64; 5], real: bool) -> Vec<i64> {
    let mut out = Vec::new();
    for k in 1..5 {
        if table[k] >= INF_COST {
            break;
        }
        let mut c = (table[k] - table[k - 1]) * SCALE;
        if real && k >= 2 {
            // prefer spreading bends over edges
            c += 1;
        }
        out.push(c);
    }
    out
}

/// A rigid skeleton prepared for shape computation, in local ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RSkeleton {
    pub graph: Graph,
    /// Clockwise rotation per local vertex.
    pub rotation: Vec<Vec<EdgeId>>,
    /// Local id of the reference edge.
    pub ref_edge: EdgeId,
    /// Poles as local vertices: the reference edge endpoints (lower, higher).
    pub poles: (VertexId, VertexId),
    /// Bend cost table per edge; real edges use [`Q_TABLE`].
    pub tables: Vec<[i64; 5]>,
    pub virtual_edge: Vec<bool>,
}

/// Angles and bends of a skeleton shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonShape {
    /// Total cost in bends, including the base costs of virtual edges.
    pub cost: i64,
    /// Angle per local vertex and rotation position (0 where undefined).
    pub angles: Vec<Vec<u8>>,
    /// Signed left bends along each local edge from lower to higher endpoint.
    pub bends: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RsetResult {
    pub x: SkeletonShape,
    pub d: SkeletonShape,
    /// For the D-shape: true if the contour left of the reference edge
    /// (walked from the first pole) is the straight one.
    pub d_left_straight: bool,
}

/// How the reference edge is treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum RefMode {
    /// Inner component: reference edge removed, contour turn targets (t_l, t_r).
    Inner(i32, i32),
    /// Root: reference edge real, external face = the face left of this dart.
    Root(Dart),
}

impl RSkeleton {
    pub(crate) fn embedding(&self) -> PlanarEmbedding {
        PlanarEmbedding { rotation: self.rotation.clone(), external: 0 }
    }

    fn base_cost(&self) -> i64 {
        (0..self.graph.m()).filter(|&e| e != self.ref_edge).map(|e| self.tables[e][0]).sum()
    }

    fn network(&self, mode: RefMode) -> ShapeNetwork {
        let g = &self.graph;
        let emb = self.embedding();
        let fs = trace_faces(&emb, g);
        let r = self.ref_edge;
        let (u, v) = g.endpoints(r);
        // faces at the reference edge: left of u→v and left of v→u
        let f_uv = fs.face_of_dart[dart_from(g, r, u)];
        let f_vu = fs.face_of_dart[dart_from(g, r, v)];
        let mut net = ShapeNetwork {
            vertex_sum: vec![4; g.n()],
            face_target: vec![4; fs.len()],
            angles: Vec::new(),
            edges: Vec::new(),
        };
        match mode {
            RefMode::Inner(tl, tr) => {
                net.face_target[f_vu] = -tl;
                net.face_target[f_uv] = -tr;
            }
            RefMode::Root(d) => {
                net.face_target[fs.face_of_dart[d]] = -4;
            }
        }
        for w in 0..g.n() {
            let rot = &self.rotation[w];
            let k = rot.len();
            let pole = w == u || w == v;
            for i in 0..k {
                let e = rot[i];
                // face left of the dart entering w along e
                let face = fs.face_of_dart[dart_from(g, e, g.other(e, w))];
                let (lo, hi, face) = if let (true, RefMode::Inner(..)) = (pole, mode) {
                    if e == r || rot[(i + 1) % k] == r {
                        (0, 0, usize::MAX)
                    } else {
                        (1, 1, face)
                    }
                } else {
                    (1, (4 - (k as u8 - 1)).max(1), face)
                };
                net.angles.push(NetAngle { vertex: w, face, lo, hi });
            }
            if pole {
                if let RefMode::Inner(..) = mode {
                    net.vertex_sum[w] = 1;
                }
            }
        }
        for e in 0..g.m() {
            let f0 = fs.face_of_dart[2 * e];
            let f1 = fs.face_of_dart[2 * e + 1];
            let marginal = if e == r && matches!(mode, RefMode::Inner(..)) {
                Vec::new()
            } else {
                marginals(&self.tables[e], !self.virtual_edge[e])
            };
            net.edges.push(NetEdge { faces: (f0, f1), marginal });
        }
        net
    }

    /// Solves the root network once, with the face left of dart 0 external.
    pub(crate) fn root_network(&self) -> Option<RootNetwork> {
        let fs = trace_faces(&self.embedding(), &self.graph);
        let mut built = self.network(RefMode::Root(0)).build()?;
        let base_cost = built.mcf.solve()?;
        let base_face = fs.face_of_dart[0];
        Some(RootNetwork { built, face_of_dart: fs.face_of_dart, base_face, base_cost })
    }

    /// Root shape with the face left of `d` external, warm-started from `root`.
    pub(crate) fn root_shape(&self, root: &RootNetwork, d: Dart) -> Option<SkeletonShape> {
        let f = root.face_of_dart[d];
        if f == root.base_face {
            return Some(self.finish(root.built.extract(root.base_cost), RefMode::Root(d)));
        }
        let mut b = root.built.clone();
        let nv = b.nv;
        let extra = b.mcf.reroute(nv + root.base_face, nv + f, 8)?;
        Some(self.finish(b.extract(root.base_cost + extra), RefMode::Root(d)))
    }

    pub(crate) fn shape(&self, mode: RefMode) -> Option<SkeletonShape> {
        let sol = self.network(mode).solve()?;
        Some(self.finish(sol, mode))
    }

    fn finish(&self, sol: NetSolution, mode: RefMode) -> SkeletonShape {
        let mut angles = Vec::with_capacity(self.graph.n());
        let mut idx = 0;
        for w in 0..self.graph.n() {
            let k = self.rotation[w].len();
            angles.push(sol.angle[idx..idx + k].to_vec());
            idx += k;
        }
        let mut bends = sol.bends;
        if let RefMode::Inner(..) = mode {
            bends[self.ref_edge] = 0;
        }
        let cost = sol.cost / SCALE
            + self.base_cost()
            + if matches!(mode, RefMode::Root(_)) { self.tables[self.ref_edge][0] } else { 0 };
        SkeletonShape { cost, angles, bends }
    }

    /// Local directions of all darts (reference edge excluded for inner
    /// shapes), starting from the smallest edge at vertex 0 pointing east.
    pub fn directions(&self, shape: &SkeletonShape, inner: bool) -> Vec<u8> {
        let g = &self.graph;
        let mut dir = vec![u8::MAX; 2 * g.m()];
        let start = (0..g.m()).find(|&e| !(inner && e == self.ref_edge)).expect("edges");
        let s = g.endpoints(start).0;
        dir[dart_from(g, start, s)] = 0;
        let mut q = VecDeque::from([s]);
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        while let Some(w) = q.pop_front() {
            let rot = &self.rotation[w];
            let k = rot.len();
            // propagate clockwise around w across known angles, both ways round
            for _ in 0..2 {
                for i in 0..k {
                    let e = rot[i];
                    let e2 = rot[(i + 1) % k];
                    let a = shape.angles[w][i];
                    if a == 0 {
                        continue;
                    }
                    let d1 = dart_from(g, e, w);
                    let d2 = dart_from(g, e2, w);
                    if dir[d1] != u8::MAX && dir[d2] == u8::MAX {
                        dir[d2] = dir_add(dir[d1], -(a as i32));
                    } else if dir[d2] != u8::MAX && dir[d1] == u8::MAX {
                        dir[d1] = dir_add(dir[d2], a as i32);
                    }
                }
            }
            for &e in rot {
                if inner && e == self.ref_edge {
                    continue;
                }
                let out = dart_from(g, e, w);
                if dir[out] == u8::MAX {
                    continue;
                }
                let lb = if out & 1 == 0 { shape.bends[e] } else { -shape.bends[e] };
                if dir[out ^ 1] == u8::MAX {
                    dir[out ^ 1] = dir_add(dir[out], lb + 2);
                }
                let x = g.other(e, w);
                if !seen[x] {
                    seen[x] = true;
                    q.push_back(x);
                }
            }
        }
        dir
    }

    /// The shape as a representation of the skeleton minus the reference edge
    /// (inner) or of the whole skeleton (root); bends on virtual edges are shown
    /// as bends.
    pub fn to_rep(&self, shape: &SkeletonShape, inner: bool) -> OrthoRep {
        let g = &self.graph;
        let dir = self.directions(shape, inner);
        let keep: Vec<EdgeId> = (0..g.m()).filter(|&e| !(inner && e == self.ref_edge)).collect();
        let (sub, _vmap, emap) = g.edge_subgraph(&keep);
        let mut dd = vec![0u8; 2 * sub.m()];
        let mut bends = vec![0i32; sub.m()];
        for (le, &e) in emap.iter().enumerate() {
            dd[2 * le] = dir[2 * e];
            dd[2 * le + 1] = dir[2 * e + 1];
            bends[le] = shape.bends[e];
        }
        let geo = Geometry { dart_dir: dd, bends };
        OrthoRep::from_geometry(&sub, &geo, None).expect("skeleton shape is consistent")
    }

    /// Pole-to-pole contour left of the reference dart from the second pole to
    /// the first, as local darts from the first pole.
    pub fn left_contour(&self) -> Vec<Dart> {
        let g = &self.graph;
        let emb = self.embedding();
        let (u, v) = self.poles;
        let start = dart_from(g, self.ref_edge, v);
        let mut out = Vec::new();
        let mut d = emb.next_dart(g, start);
        while head(g, d) != v {
            out.push(d);
            d = emb.next_dart(g, d);
        }
        out.push(d);
        debug_assert_eq!(crate::embedding::tail(g, out[0]), u);
        out
    }
}

/// X- and D-shaped minimum-cost shapes of an inner rigid skeleton with the
/// reference edge removed. The poles keep a 90-degree internal angle; bends on
/// virtual edges cost what the child's spirality table says.
pub fn rset_alg(skel: &RSkeleton) -> RsetResult {
    let x = skel.shape(RefMode::Inner(1, 1)).expect("X-shape exists for rigid components");
    let d0 = skel.shape(RefMode::Inner(0, 2)).expect("D-shape exists for rigid components");
    let d1 = skel.shape(RefMode::Inner(2, 0)).expect("D-shape exists for rigid components");
    if d1.cost < d0.cost {
        RsetResult { x, d: d1, d_left_straight: false }
    } else {
        RsetResult { x, d: d0, d_left_straight: true }
    }
}

/// Minimum-cost shape of a root skeleton (reference edge real) whose external
/// face is face `which` ∈ {0, 1} of the two faces at the reference edge
/// (0 = left of the dart from the lower pole).
pub fn min_bend_cubic_root(skel: &RSkeleton, which: usize) -> SkeletonShape {
    let (u, v) = skel.graph.endpoints(skel.ref_edge);
    let d = dart_from(&skel.graph, skel.ref_edge, if which == 0 { u } else { v });
    skel.shape(RefMode::Root(d)).expect("root shape exists")
}

/// Both external face choices; the cheaper one wins, ties to index 0.
pub fn min_bend_cubic_root_best(skel: &RSkeleton) -> (usize, SkeletonShape) {
    let a = min_bend_cubic_root(skel, 0);
    let b = min_bend_cubic_root(skel, 1);
    if b.cost < a.cost {
        (1, b)
    } else {
        (0, a)
    }
}

/// Cost and edge-role classification for skeleton edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeColor {
    Green,
    Red,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CostClass {
    FreeUseful,
    FreeUseless,
    CostlyUseful,
    CostlyUseless,
    DoubleFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeTag {
    pub color: EdgeColor,
    pub is_virtual: bool,
    pub class: CostClass,
}

/// Tags each skeleton edge from a computed shape: virtual edges are free;
/// an edge is useful when the shape bends it; green edges lie on a bad cycle
/// of the skeleton; a double-free edge is a virtual edge on the contour whose
/// spirality 0 and 2 cost the same.
pub fn edge_tags(skel: &RSkeleton, shape: &SkeletonShape) -> Vec<EdgeTag> {
    let g = &skel.graph;
    let emb = skel.embedding();
    let mut green = vec![false; g.m()];
    if g.n() <= 14 {
        for c in legged_cycles(g, &emb, 2).into_iter().chain(legged_cycles(g, &emb, 3)) {
            if is_bad_cycle(&c) {
                for &e in &c.edges {
                    green[e] = true;
                }
            }
        }
    }
    let contour: HashSet<EdgeId> = skel.left_contour().iter().map(|&d| dart_edge(d)).collect();
    (0..g.m())
        .map(|e| {
            let useful = shape.bends[e] != 0;
            let virt = skel.virtual_edge[e];
            let class = if virt && contour.contains(&e) && skel.tables[e][0] == skel.tables[e][2] {
                CostClass::DoubleFree
            } else {
                match (virt, useful) {
                    (true, true) => CostClass::FreeUseful,
                    (true, false) => CostClass::FreeUseless,
                    (false, true) => CostClass::CostlyUseful,
                    (false, false) => CostClass::CostlyUseless,
                }
            };
            EdgeTag { color: if green[e] { EdgeColor::Green } else { EdgeColor::Red }, is_virtual: virt, class }
        })
        .collect()
}

/// A violated condition of the bend-free characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NoBendViolation {
    /// The external cycle has fewer than four degree-2 vertices.
    ExternalFace(usize),
    /// A 2- or 3-legged cycle without enough degree-2 vertices.
    BadCycle(Vec<EdgeId>),
}

/// Checks the three conditions for a bend-free drawing of a biconnected plane
/// 3-graph: ≥ 4 degree-2 vertices on the external cycle, ≥ 2 on every
/// 2-legged cycle and ≥ 1 on every 3-legged cycle.
pub fn no_bend_conditions(g: &Graph, emb: &PlanarEmbedding) -> Result<(), NoBendViolation> {
    let fs = trace_faces(emb, g);
    let mut ext: Vec<VertexId> = fs.vertices(g, emb.external);
    ext.sort_unstable();
    ext.dedup();
    let d2 = ext.iter().filter(|&&v| g.degree(v) == 2).count();
    if d2 < 4 {
        return Err(NoBendViolation::ExternalFace(d2));
    }
    for k in [2, 3] {
        for c in legged_cycles(g, emb, k) {
            if is_bad_cycle(&c) {
                return Err(NoBendViolation::BadCycle(c.edges.clone()));
            }
        }
    }
    Ok(())
}

fn check_corners(g: &Graph, emb: &PlanarEmbedding, corners: &[VertexId; 4]) -> Result<Vec<usize>, RectError> {
    let fs = trace_faces(emb, g);
    let mut seen = HashSet::new();
    let mut pos = Vec::new();
    for &c in corners {
        if c >= g.n() || g.degree(c) != 2 || !seen.insert(c) {
            return Err(RectError::BadCorners);
        }
        // the angle of c lying in the external face
        let rot = &emb.rotation[c];
        let i = (0..rot.len())
            .find(|&i| fs.face_of_dart[dart_from(g, rot[i], g.other(rot[i], c))] == emb.external)
            .ok_or(RectError::BadCorners)?;
        pos.push(i);
    }
    Ok(pos)
}

fn zero_bend_network(
    g: &Graph,
    emb: &PlanarEmbedding,
    corners: &[VertexId; 4],
    corner_pos: &[usize],
    rectangular: bool,
) -> ShapeNetwork {
    let fs = trace_faces(emb, g);
    let mut net = ShapeNetwork {
        vertex_sum: vec![4; g.n()],
        face_target: vec![4; fs.len()],
        angles: Vec::new(),
        edges: (0..g.m())
            .map(|e| NetEdge { faces: (fs.face_of_dart[2 * e], fs.face_of_dart[2 * e + 1]), marginal: Vec::new() })
            .collect(),
    };
    net.face_target[emb.external] = -4;
    for w in 0..g.n() {
        let rot = &emb.rotation[w];
        let k = rot.len();
        for i in 0..k {
            let e = rot[i];
            let face = fs.face_of_dart[dart_from(g, e, g.other(e, w))];
            let ci = corners.iter().position(|&c| c == w);
            let (lo, hi) = if k == 1 {
                (4, 4)
            } else if let Some(ci) = ci {
                if corner_pos[ci] == i {
                    (3, 3)
                } else {
                    (1, 1)
                }
            } else if rectangular {
                if face == emb.external {
                    (2, 2)
                } else {
                    (1, 2)
                }
            } else {
                (1, (5 - k) as u8)
            };
            net.angles.push(NetAngle { vertex: w, face, lo, hi });
        }
    }
    net
}

fn rep_from_angles(g: &Graph, emb: &PlanarEmbedding, sol: &NetSolution) -> OrthoRep {
    let mut angles = Vec::with_capacity(g.n());
    let mut idx = 0;
    for w in 0..g.n() {
        let k = emb.rotation[w].len();
        angles.push(sol.angle[idx..idx + k].to_vec());
        idx += k;
    }
    OrthoRep {
        graph: g.clone(),
        embedding: emb.clone(),
        angles,
        bends: sol.bends.iter().map(|&b| crate::ortho::bend_string(b)).collect(),
    }
}

/// Bend-free representation with the four designated vertices as the
/// 90-degree corners of the external face.
pub fn no_bend_draw(g: &Graph, emb: &PlanarEmbedding, corners: [VertexId; 4]) -> Result<OrthoRep, RectError> {
    let pos = check_corners(g, emb, &corners)?;
    let net = zero_bend_network(g, emb, &corners, &pos, false);
    let sol = net.solve().ok_or(RectError::ConditionsViolated)?;
    Ok(rep_from_angles(g, emb, &sol))
}

/// Rectangular representation: every face a rectangle, the external face
/// with its corners at the four designated vertices.
pub fn rectangular_draw(g: &Graph, emb: &PlanarEmbedding, corners: [VertexId; 4]) -> Result<OrthoRep, RectError> {
    let pos = check_corners(g, emb, &corners)?;
    let net = zero_bend_network(g, emb, &corners, &pos, true);
    let sol = net.solve().ok_or(RectError::NoRectangularDrawing)?;
    Ok(rep_from_angles(g, emb, &sol))
}

/// Bad cycles not contained in the interior graph of another bad cycle.
pub fn maximal_bad_cycles(g: &Graph, emb: &PlanarEmbedding) -> Vec<LeggedCycle> {
    let mut bad: Vec<LeggedCycle> =
        legged_cycles(g, emb, 2).into_iter().chain(legged_cycles(g, emb, 3)).filter(is_bad_cycle).collect();
    let sets: Vec<HashSet<EdgeId>> = bad.iter().map(|c| c.interior_graph_edges().into_iter().collect()).collect();
    let keep: Vec<bool> = (0..bad.len())
        .map(|i| !(0..bad.len()).any(|j| j != i && sets[i].is_subset(&sets[j]) && sets[i] != sets[j]))
        .collect();
    let mut out = Vec::new();
    for (i, c) in bad.drain(..).enumerate() {
        if keep[i] {
            out.push(c);
        }
    }
    out
}

/// A coarse plane graph: each maximal bad cycle collapsed to one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupernodeGraph {
    pub graph: Graph,
    /// Original vertices behind each coarse vertex.
    pub members: Vec<Vec<VertexId>>,
    /// Coarse edge → original edge.
    pub edge_origin: Vec<EdgeId>,
}

pub fn supernode_graph(g: &Graph, emb: &PlanarEmbedding) -> Result<SupernodeGraph, crate::graph::GraphError> {
    let cycles = maximal_bad_cycles(g, emb);
    let mut owner: Vec<usize> = vec![usize::MAX; g.n()];
    let mut members: Vec<Vec<VertexId>> = Vec::new();
    let mut swallowed: HashSet<EdgeId> = HashSet::new();
    for c in &cycles {
        let es = c.interior_graph_edges();
        let mut vs: Vec<VertexId> = es.iter().flat_map(|&e| [g.endpoints(e).0, g.endpoints(e).1]).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.iter().any(|&v| owner[v] != usize::MAX) {
            continue;
        }
        let id = members.len();
        for &v in &vs {
            owner[v] = id;
        }
        swallowed.extend(es);
        members.push(vs);
    }
    let mut coarse_of: HashMap<VertexId, usize> = HashMap::new();
    let mut coarse_members = members.clone();
    for v in 0..g.n() {
        if owner[v] == usize::MAX {
            coarse_of.insert(v, coarse_members.len());
            coarse_members.push(vec![v]);
        } else {
            coarse_of.insert(v, owner[v]);
        }
    }
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for e in 0..g.m() {
        if swallowed.contains(&e) {
            continue;
        }
        let (a, b) = g.endpoints(e);
        edges.push((coarse_of[&a], coarse_of[&b]));
        edge_origin.push(e);
    }
    let graph = Graph::new(coarse_members.len(), &edges)?;
    Ok(SupernodeGraph { graph, members: coarse_members, edge_origin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::planar_embedding;
    use crate::ortho::{classify_shape, validate_rep, Component, ShapeClass};

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn k4_fails_condition_one_and_c4_passes() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let emb = planar_embedding(&k4).unwrap();
        assert_eq!(no_bend_conditions(&k4, &emb), Err(NoBendViolation::ExternalFace(0)));
        let c4 = cycle(4);
        let emb = planar_embedding(&c4).unwrap();
        assert_eq!(no_bend_conditions(&c4, &emb), Ok(()));
    }

    #[test]
    fn c4_rectangle() {
        let c4 = cycle(4);
        let emb = planar_embedding(&c4).unwrap();
        let r = rectangular_draw(&c4, &emb, [0, 1, 2, 3]).unwrap();
        assert_eq!(validate_rep(&r), Ok(()));
        assert_eq!(r.total_bends(), 0);
        let fs = trace_faces(&emb, &c4);
        for f in 0..fs.len() {
            if f != emb.external {
                for &d in &fs.faces[f].darts {
                    assert_eq!(r.angle_after(head(&c4, d), dart_edge(d)), 1);
                }
            }
        }
        let nb = no_bend_draw(&c4, &emb, [0, 1, 2, 3]).unwrap();
        assert_eq!(validate_rep(&nb), Ok(()));
    }

    #[test]
    fn k4_minus_edge_x_and_d() {
        // poles 0 and 1 (the degree-2 vertices once the reference edge (0,1) is gone)
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let emb = planar_embedding(&g).unwrap();
        let skel = RSkeleton {
            graph: g.clone(),
            rotation: emb.rotation.clone(),
            ref_edge: 0,
            poles: (0, 1),
            tables: vec![Q_TABLE; 6],
            virtual_edge: vec![false; 6],
        };
        let res = rset_alg(&skel);
        assert_eq!((res.x.cost, res.d.cost), (2, 2));
        for (shape, want) in [(&res.x, ShapeClass::X), (&res.d, ShapeClass::D)] {
            let rep = skel.to_rep(shape, true);
            assert_eq!(validate_rep(&rep), Ok(()));
            let comp = Component { edges: (0..rep.graph.m()).collect(), poles: (0, 1) };
            assert_eq!(classify_shape(&rep, &comp).unwrap(), want);
        }
        let (_, root) = min_bend_cubic_root_best(&skel);
        assert_eq!(root.cost, 4);
        let rep = skel.to_rep(&root, false);
        assert_eq!(validate_rep(&rep), Ok(()));
        assert_eq!(rep.total_bends(), 4);
        assert_eq!(rep.bends.iter().filter(|b| b.len() == 2).count(), 1);
    }
}
