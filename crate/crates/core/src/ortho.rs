//! Orthogonal representations: angles at vertices plus bend strings on edges.
//!
//! Angles are stored in units of 90 degrees. `angles[v][i]` is the clockwise
//! wedge at `v` from `rotation[v][i]` to `rotation[v][i + 1]`; it lies in the
//! face on the left of the dart entering `v` along `rotation[v][i]`.
//! Bend strings are read along each edge from its lower to its higher endpoint.
//!
//! A [`Geometry`] is the same information in absolute terms: the direction
//! (0 = east, 1 = north, 2 = west, 3 = south) in which every dart leaves its
//! tail, plus the signed number of left bends per edge. A left bend adds one
//! to the heading.

use crate::embedding::{dart_edge, dart_from, head, rev, tail, trace_faces, Dart, FaceId, PlanarEmbedding};
use crate::graph::{EdgeId, Graph, VertexId, VertexKind};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrthoError {
    #[error("path is not a walk in the graph")]
    PathNotInGraph,
    #[error("pole-to-pole paths have different turn numbers ({0} and {1})")]
    PathsDisagree(i32, i32),
    #[error("contour turn numbers ({0}, {1}) match no shape")]
    UnclassifiedShape(i32, i32),
    #[error("replacement is not equivalent to the component")]
    NotEquivalent,
    #[error("no orientation of the replacement fits the poles")]
    OrientationUnresolvable,
    #[error("inconsistent geometry: {0}")]
    InvalidGeometry(String),
}

/// Shape of a component whose poles are external corners, or the spirality
/// of a series component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeClass {
    C,
    D,
    L,
    X,
    Spiral(u32),
}

/// A connected subgraph attached to the rest of the graph at its two poles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub edges: Vec<EdgeId>,
    pub poles: (VertexId, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthoRep {
    pub graph: Graph,
    pub embedding: PlanarEmbedding,
    pub angles: Vec<Vec<u8>>,
    pub bends: Vec<String>,
}

/// Absolute directions of all darts plus signed left bends per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    pub dart_dir: Vec<u8>,
    pub bends: Vec<i32>,
}

/// Reasons a representation is invalid.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepViolation {
    #[error("vertex {0} has a malformed rotation or angle list")]
    Malformed(VertexId),
    #[error("angles at vertex {0} sum to {1} degrees")]
    AngleSum(VertexId, u32),
    #[error("edge {0} has an invalid bend string")]
    BendString(EdgeId),
    #[error("rotation system is not planar")]
    NotPlanar,
    #[error("face {face} has turn number {turn}, expected {expected}")]
    FaceTurn { face: FaceId, turn: i32, expected: i32 },
}

pub fn net_left(s: &str) -> i32 {
    s.chars().map(|c| if c == 'L' { 1 } else { -1 }).sum()
}

pub fn bend_string(b: i32) -> String {
    let c = if b >= 0 { "L" } else { "R" };
    c.repeat(b.unsigned_abs() as usize)
}

/// Signed turn from heading `h_in` to outgoing direction `d_out` at a vertex.
#[inline]
pub fn vertex_turn(h_in: u8, d_out: u8) -> i32 {
    ((d_out as i32 - h_in as i32 + 5).rem_euclid(4)) - 1
}

#[inline]
pub fn dir_add(d: u8, k: i32) -> u8 {
    (d as i32 + k).rem_euclid(4) as u8
}

impl Geometry {
    pub fn left_bends(&self, d: Dart) -> i32 {
        if d & 1 == 0 {
            self.bends[d >> 1]
        } else {
            -self.bends[d >> 1]
        }
    }

    /// Heading when arriving at the head of `d`.
    pub fn arrival(&self, d: Dart) -> u8 {
        dir_add(self.dart_dir[d], self.left_bends(d))
    }

    /// Applies rotation by `r` quarter turns after an optional mirror.
    pub fn transformed(&self, r: u8, mirror: bool) -> Geometry {
        let s = if mirror { -1 } else { 1 };
        Geometry {
            dart_dir: self.dart_dir.iter().map(|&d| dir_add(r, s * d as i32)).collect(),
            bends: self.bends.iter().map(|&b| s * b).collect(),
        }
    }

    pub fn total_bends(&self) -> u32 {
        self.bends.iter().map(|b| b.unsigned_abs()).sum()
    }
}

impl OrthoRep {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn total_bends(&self) -> usize {
        self.bends.iter().map(|s| s.len()).sum()
    }

    pub fn max_bends_per_edge(&self) -> usize {
        self.bends.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Angle (units of 90 degrees) at `v` clockwise from edge `e`.
    pub fn angle_after(&self, v: VertexId, e: EdgeId) -> u8 {
        self.angles[v][self.embedding.pos(v, e)]
    }

    /// Left bends along dart `d`.
    pub fn left_bends(&self, d: Dart) -> i32 {
        let b = net_left(&self.bends[dart_edge(d)]);
        if d & 1 == 0 {
            b
        } else {
            -b
        }
    }

    /// Builds a representation from absolute directions. The rotation at each
    /// vertex starts at its smallest edge id. If `external` is `None` the
    /// external face is the unique face with turn number −4.
    pub fn from_geometry(g: &Graph, geo: &Geometry, external: Option<Dart>) -> Result<OrthoRep, OrthoError> {
        for e in 0..g.m() {
            if geo.dart_dir[2 * e + 1] != dir_add(geo.dart_dir[2 * e], geo.bends[e] + 2) {
                return Err(OrthoError::InvalidGeometry(format!("edge {e} does not close")));
            }
        }
        let mut rotation = Vec::with_capacity(g.n());
        let mut angles = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let mut inc: Vec<(u8, EdgeId)> =
                g.incident(v).iter().map(|&e| (geo.dart_dir[dart_from(g, e, v)], e)).collect();
            inc.sort_by_key(|a| std::cmp::Reverse(a.0));
            if inc.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(OrthoError::InvalidGeometry(format!("two edges leave vertex {v} in the same direction")));
            }
            let k = inc.len();
            let start = (0..k).min_by_key(|&i| inc[i].1).unwrap_or(0);
            let rot: Vec<EdgeId> = (0..k).map(|i| inc[(start + i) % k].1).collect();
            let dirs: Vec<u8> = (0..k).map(|i| inc[(start + i) % k].0).collect();
            let ang: Vec<u8> = (0..k)
                .map(|i| {
                    let a = (dirs[i] as i32 - dirs[(i + 1) % k] as i32).rem_euclid(4) as u8;
                    if a == 0 {
                        4
                    } else {
                        a
                    }
                })
                .collect();
            rotation.push(rot);
            angles.push(ang);
        }
        let bends = geo.bends.iter().map(|&b| bend_string(b)).collect();
        let mut rep =
            OrthoRep { graph: g.clone(), embedding: PlanarEmbedding { rotation, external: 0 }, angles, bends };
        let fs = trace_faces(&rep.embedding, g);
        rep.embedding.external = match external {
            Some(d) => fs.face_of_dart[d],
            None => {
                let turns: Vec<i32> = (0..fs.len()).map(|f| rep.face_turn(&fs.faces[f].darts)).collect();
                (0..fs.len()).min_by_key(|&f| turns[f]).unwrap_or(0)
            }
        };
        Ok(rep)
    }

    /// Absolute directions by propagation from the smallest vertex of each
    /// connected component, whose first edge points east.
    pub fn geometry(&self) -> Geometry {
        let g = &self.graph;
        let mut dart_dir = vec![u8::MAX; 2 * g.m()];
        let bends: Vec<i32> = self.bends.iter().map(|s| net_left(s)).collect();
        let mut done = vec![false; g.n()];
        for s in 0..g.n() {
            if done[s] || g.degree(s) == 0 {
                continue;
            }
            done[s] = true;
            let mut q = VecDeque::new();
            let e0 = self.embedding.rotation[s][0];
            dart_dir[dart_from(g, e0, s)] = 0;
            q.push_back(s);
            while let Some(v) = q.pop_front() {
                let rot = &self.embedding.rotation[v];
                let k = rot.len();
                let i0 = (0..k).find(|&i| dart_dir[dart_from(g, rot[i], v)] != u8::MAX).unwrap();
                let mut d = dart_dir[dart_from(g, rot[i0], v)];
                for j in 1..k {
                    d = dir_add(d, -(self.angles[v][(i0 + j - 1) % k] as i32));
                    dart_dir[dart_from(g, rot[(i0 + j) % k], v)] = d;
                }
                for &e in rot {
                    let out = dart_from(g, e, v);
                    let w = g.other(e, v);
                    let lb = if out & 1 == 0 { bends[e] } else { -bends[e] };
                    let back = rev(out);
                    if dart_dir[back] == u8::MAX {
                        dart_dir[back] = dir_add(dart_dir[out], lb + 2);
                    }
                    if !done[w] {
                        done[w] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        Geometry { dart_dir, bends }
    }

    /// Turn number of a closed face walk, in the convention where internal
    /// faces have +4 and the external face −4.
    pub fn face_turn(&self, darts: &[Dart]) -> i32 {
        let g = &self.graph;
        darts
            .iter()
            .map(|&d| {
                let v = head(g, d);
                let a = self.angle_after(v, dart_edge(d)) as i32;
                2 - a + self.left_bends(d)
            })
            .sum()
    }

    /// Signed turn along a vertex path: left turns count +1, right turns −1.
    pub fn signed_path_turn(&self, path: &[VertexId]) -> Result<i32, OrthoError> {
        let g = &self.graph;
        let mut darts = Vec::with_capacity(path.len());
        for w in path.windows(2) {
            let e = g.find_edge(w[0], w[1]).ok_or(OrthoError::PathNotInGraph)?;
            darts.push(dart_from(g, e, w[0]));
        }
        let mut t: i32 = darts.iter().map(|&d| self.left_bends(d)).sum();
        for w in darts.windows(2) {
            let v = head(g, w[0]);
            let e_in = dart_edge(w[0]);
            let e_out = dart_edge(w[1]);
            // wedge on the left from e_in clockwise to e_out
            let rot = &self.embedding.rotation[v];
            let k = rot.len();
            let mut i = self.embedding.pos(v, e_in);
            let mut left = 0i32;
            loop {
                left += self.angles[v][i] as i32;
                i = (i + 1) % k;
                if rot[i] == e_out {
                    break;
                }
            }
            t += 2 - left;
        }
        Ok(t)
    }

    /// Canonical JSON: rotation, angles in degrees in rotation order, bend
    /// strings from lower to higher endpoint, external face id.
    pub fn to_json(&self) -> serde_json::Value {
        let angles: Vec<Vec<u32>> = self.angles.iter().map(|a| a.iter().map(|&x| 90 * x as u32).collect()).collect();
        serde_json::json!({
            "n": self.graph.n(),
            "edges": self.graph.edges().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "rotation": self.embedding.rotation,
            "angles": angles,
            "bends": self.bends,
            "external_face": self.embedding.external,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<OrthoRep, String> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<[usize; 2]>,
            rotation: Vec<Vec<usize>>,
            angles: Vec<Vec<u32>>,
            bends: Vec<String>,
            external_face: usize,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        let graph = Graph::new(raw.n, &edges).map_err(|e| e.to_string())?;
        let angles = raw.angles.iter().map(|a| a.iter().map(|&x| (x / 90) as u8).collect()).collect();
        Ok(OrthoRep {
            graph,
            embedding: PlanarEmbedding { rotation: raw.rotation, external: raw.external_face },
            angles,
            bends: raw.bends,
        })
    }
}

/// Checks local consistency of angles and bend strings on a planar rotation
/// system. Every internal face must turn by 4 and the external face by −4.
pub fn validate_rep(rep: &OrthoRep) -> Result<(), RepViolation> {
    let g = &rep.graph;
    if rep.embedding.rotation.len() != g.n() || rep.angles.len() != g.n() || rep.bends.len() != g.m() {
        return Err(RepViolation::Malformed(0));
    }
    for v in 0..g.n() {
        let rot = &rep.embedding.rotation[v];
        let mut a = rot.clone();
        let mut b = g.incident(v).to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a != b || rep.angles[v].len() != rot.len() || rep.angles[v].iter().any(|&x| x == 0 || x > 4) {
            return Err(RepViolation::Malformed(v));
        }
        let sum: u32 = rep.angles[v].iter().map(|&x| x as u32).sum();
        if !rot.is_empty() && sum != 4 {
            return Err(RepViolation::AngleSum(v, 90 * sum));
        }
    }
    for (e, s) in rep.bends.iter().enumerate() {
        if s.chars().any(|c| c != 'L' && c != 'R') {
            return Err(RepViolation::BendString(e));
        }
    }
    let fs = crate::embedding::faces_of(&rep.embedding, g).map_err(|_| RepViolation::NotPlanar)?;
    if g.m() > 0 && rep.embedding.external >= fs.len() {
        return Err(RepViolation::NotPlanar);
    }
    for (f, face) in fs.faces.iter().enumerate() {
        let turn = rep.face_turn(&face.darts);
        let expected = if f == rep.embedding.external { -4 } else { 4 };
        if turn != expected {
            return Err(RepViolation::FaceTurn { face: f, turn, expected });
        }
    }
    Ok(())
}

/// |#right − #left| along a vertex path.
pub fn turn_number(rep: &OrthoRep, path: &[VertexId]) -> Result<u32, OrthoError> {
    Ok(rep.signed_path_turn(path)?.unsigned_abs())
}

/// Simple paths from `u` to `v` using only `edges`, at most `cap` of them.
pub fn pole_paths(g: &Graph, edges: &[EdgeId], u: VertexId, v: VertexId, cap: usize) -> Vec<Vec<VertexId>> {
    let allowed: HashSet<EdgeId> = edges.iter().copied().collect();
    let mut out = Vec::new();
    let mut path = vec![u];
    let mut on = HashSet::from([u]);
    fn dfs(
        g: &Graph,
        allowed: &HashSet<EdgeId>,
        v: VertexId,
        path: &mut Vec<VertexId>,
        on: &mut HashSet<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        let x = *path.last().unwrap();
        if x == v {
            out.push(path.clone());
            return;
        }
        for &e in g.incident(x) {
            if !allowed.contains(&e) {
                continue;
            }
            let w = g.other(e, x);
            if on.insert(w) {
                path.push(w);
                dfs(g, allowed, v, path, on, out, cap);
                path.pop();
                on.remove(&w);
            }
        }
    }
    dfs(g, &allowed, v, &mut path, &mut on, &mut out, cap);
    out
}

/// Spirality of a series component: the turn number of its pole-to-pole
/// paths, which must all agree.
pub fn spirality(rep: &OrthoRep, comp: &Component) -> Result<u32, OrthoError> {
    Ok(signed_spirality(rep, comp)?.unsigned_abs())
}

fn signed_spirality(rep: &OrthoRep, comp: &Component) -> Result<i32, OrthoError> {
    let paths = pole_paths(&rep.graph, &comp.edges, comp.poles.0, comp.poles.1, 64);
    let mut value: Option<i32> = None;
    for p in &paths {
        let t = rep.signed_path_turn(p)?;
        match value {
            None => value = Some(t),
            Some(x) if x != t => return Err(OrthoError::PathsDisagree(x, t)),
            _ => {}
        }
    }
    value.ok_or(OrthoError::PathNotInGraph)
}

/// The two contour paths of a component whose poles each have two component
/// edges, as vertex sequences from the first pole to the second.
pub fn contour_paths(rep: &OrthoRep, comp: &Component) -> Result<(Vec<VertexId>, Vec<VertexId>), OrthoError> {
    let g = &rep.graph;
    let inside: HashSet<EdgeId> = comp.edges.iter().copied().collect();
    let (u, v) = comp.poles;
    // restricted rotation
    let sub = |x: VertexId| -> Vec<EdgeId> {
        rep.embedding.rotation[x].iter().copied().filter(|e| inside.contains(e)).collect()
    };
    let ru = sub(u);
    if ru.len() != 2 {
        return Err(OrthoError::PathNotInGraph);
    }
    // the wedge at u holding the outside edges: from alpha clockwise to beta
    let full = &rep.embedding.rotation[u];
    let k = full.len();
    let ia = full.iter().position(|&e| e == ru[0]).unwrap();
    let (alpha, beta) = if full[(ia + 1) % k] == ru[1] { (ru[1], ru[0]) } else { (ru[0], ru[1]) };
    // walk the outer face of the component starting with beta out of u
    let next = |d: Dart| -> Dart {
        let w = head(g, d);
        let r = sub(w);
        let i = r.iter().position(|&e| e == dart_edge(d)).unwrap();
        dart_from(g, r[(i + 1) % r.len()], w)
    };
    let mut walk = vec![u];
    let start = dart_from(g, beta, u);
    let mut d = start;
    loop {
        walk.push(head(g, d));
        d = next(d);
        if d == start || walk.len() > 4 * g.m() + 4 {
            break;
        }
    }
    let _ = alpha;
    let iv = walk.iter().position(|&x| x == v).ok_or(OrthoError::PathNotInGraph)?;
    let p1: Vec<VertexId> = walk[..=iv].to_vec();
    let mut p2: Vec<VertexId> = walk[iv..].to_vec();
    p2.reverse();
    Ok((p1, p2))
}

/// Shape of a component: `Spiral(k)` for a series component (a pole with a
/// single component edge), otherwise C/D/L/X from the contour turn numbers.
pub fn classify_shape(rep: &OrthoRep, comp: &Component) -> Result<ShapeClass, OrthoError> {
    let g = &rep.graph;
    let deg_in = |x: VertexId| g.incident(x).iter().filter(|e| comp.edges.contains(e)).count();
    if deg_in(comp.poles.0) == 1 || deg_in(comp.poles.1) == 1 {
        return Ok(ShapeClass::Spiral(spirality(rep, comp)?));
    }
    let (p1, p2) = contour_paths(rep, comp)?;
    let a = rep.signed_path_turn(&p1)?.abs();
    let b = rep.signed_path_turn(&p2)?.abs();
    let (lo, hi) = (a.min(b), a.max(b));
    match (lo, hi) {
        (2, 4) => Ok(ShapeClass::C),
        (0, 2) => Ok(ShapeClass::D),
        (1, 3) => Ok(ShapeClass::L),
        (1, 1) => Ok(ShapeClass::X),
        _ => Err(OrthoError::UnclassifiedShape(a, b)),
    }
}

/// Rectilinear image: every bend becomes a degree-2 bend vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectilinearImage {
    pub rep: OrthoRep,
    pub original: Graph,
    /// For each original edge, the image darts from its lower to its higher endpoint.
    pub chains: Vec<Vec<Dart>>,
}

pub fn rectilinear_image(rep: &OrthoRep) -> RectilinearImage {
    let g = &rep.graph;
    let geo = rep.geometry();
    let mut kinds = g.kinds().to_vec();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // (image edge, dir leaving its lower endpoint)
    let mut dir_lower: Vec<u8> = Vec::new();
    let mut chain_vertices: Vec<Vec<VertexId>> = Vec::new();
    let mut chain_dirs: Vec<Vec<u8>> = Vec::new();
    for e in 0..g.m() {
        let (a, b) = g.endpoints(e);
        let mut verts = vec![a];
        let mut dirs = Vec::new();
        let mut h = geo.dart_dir[2 * e];
        for c in rep.bends[e].chars() {
            let w = kinds.len();
            kinds.push(VertexKind::Bend);
            verts.push(w);
            dirs.push(h);
            h = dir_add(h, if c == 'L' { 1 } else { -1 });
        }
        dirs.push(h);
        verts.push(b);
        chain_vertices.push(verts);
        chain_dirs.push(dirs);
    }
    // original edges keep their ids for the first segment
    let mut seg_of: Vec<Vec<EdgeId>> = vec![Vec::new(); g.m()];
    for e in 0..g.m() {
        let v = &chain_vertices[e];
        edges.push((v[0], v[1]));
        seg_of[e].push(e);
        dir_lower.push(0);
    }
    for e in 0..g.m() {
        let v = &chain_vertices[e];
        for i in 1..v.len() - 1 {
            seg_of[e].push(edges.len());
            edges.push((v[i], v[i + 1]));
            dir_lower.push(0);
        }
    }
    let img = Graph::with_kinds(kinds, &edges).expect("image is simple");
    let mut dart_dir = vec![0u8; 2 * img.m()];
    let mut chains = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let verts = &chain_vertices[e];
        let mut ch = Vec::new();
        for (i, &se) in seg_of[e].iter().enumerate() {
            let d = dart_from(&img, se, verts[i]);
            dart_dir[d] = chain_dirs[e][i];
            dart_dir[rev(d)] = dir_add(chain_dirs[e][i], 2);
            ch.push(d);
        }
        chains.push(ch);
    }
    let igeo = Geometry { dart_dir, bends: vec![0; img.m()] };
    let fs = trace_faces(&rep.embedding, g);
    let ext_dart = fs.faces[rep.embedding.external].darts[0];
    let e = dart_edge(ext_dart);
    let image_dart = if ext_dart & 1 == 0 { chains[e][0] } else { rev(*chains[e].last().unwrap()) };
    let irep = OrthoRep::from_geometry(&img, &igeo, Some(image_dart)).expect("image geometry is consistent");
    RectilinearImage { rep: irep, original: g.clone(), chains }
}

impl RectilinearImage {
    /// Smooths all bend vertices back, restoring the original representation.
    pub fn invert(&self) -> OrthoRep {
        let g = &self.original;
        let img = &self.rep;
        let ig = &img.graph;
        let origin: HashMap<EdgeId, EdgeId> =
            self.chains.iter().enumerate().flat_map(|(e, ch)| ch.iter().map(move |&d| (dart_edge(d), e))).collect();
        let rotation: Vec<Vec<EdgeId>> =
            (0..g.n()).map(|v| img.embedding.rotation[v].iter().map(|ie| origin[ie]).collect()).collect();
        let angles: Vec<Vec<u8>> = (0..g.n()).map(|v| img.angles[v].clone()).collect();
        let bends = self
            .chains
            .iter()
            .map(|ch| {
                ch.windows(2)
                    .map(|w| {
                        let v = head(ig, w[0]);
                        let left = img.angle_after(v, dart_edge(w[0]));
                        if left == 1 {
                            'L'
                        } else {
                            'R'
                        }
                    })
                    .collect::<String>()
            })
            .collect();
        let fs = trace_faces(&img.embedding, ig);
        let d = fs.faces[img.embedding.external].darts[0];
        // map an image dart on the external face back to an original dart
        let e = origin[&dart_edge(d)];
        let fwd = self.chains[e].contains(&d);
        let od = if fwd { 2 * e } else { 2 * e + 1 };
        let embedding0 = PlanarEmbedding { rotation, external: 0 };
        let ofs = trace_faces(&embedding0, g);
        let external = ofs.face_of_dart[od];
        OrthoRep { graph: g.clone(), embedding: PlanarEmbedding { external, ..embedding0 }, angles, bends }
    }
}

/// The component as a standalone representation, with local→global vertex
/// and edge maps. Its external face is the one facing the rest of the graph.
pub fn extract_component(rep: &OrthoRep, comp: &Component) -> (OrthoRep, Vec<VertexId>, Vec<EdgeId>) {
    let g = &rep.graph;
    let (sub, vmap, emap) = g.edge_subgraph(&comp.edges);
    let geo = rep.geometry();
    let mut dd = vec![0u8; 2 * sub.m()];
    let mut bends = vec![0i32; sub.m()];
    for (le, &ge) in emap.iter().enumerate() {
        // subgraph keeps endpoint order since vertex renumbering is monotone
        dd[2 * le] = geo.dart_dir[2 * ge];
        dd[2 * le + 1] = geo.dart_dir[2 * ge + 1];
        bends[le] = geo.bends[ge];
    }
    let sgeo = Geometry { dart_dir: dd, bends };
    let local = OrthoRep::from_geometry(&sub, &sgeo, None).expect("restriction of a valid geometry");
    (local, vmap, emap)
}

/// Replaces a component of `h` by an equivalent representation of it
/// (`vmap`/`emap` map the replacement's vertices and edges into `h`).
pub fn replace_component(
    h: &OrthoRep,
    comp: &Component,
    replacement: &OrthoRep,
    vmap: &[VertexId],
    emap: &[EdgeId],
) -> Result<OrthoRep, OrthoError> {
    let g = &h.graph;
    let local_poles = (
        vmap.iter().position(|&x| x == comp.poles.0).ok_or(OrthoError::NotEquivalent)?,
        vmap.iter().position(|&x| x == comp.poles.1).ok_or(OrthoError::NotEquivalent)?,
    );
    let local_comp = Component { edges: (0..replacement.graph.m()).collect(), poles: local_poles };
    let want = classify_shape(h, comp)?;
    let have = classify_shape(replacement, &local_comp)?;
    if want != have {
        return Err(OrthoError::NotEquivalent);
    }
    let hg = h.geometry();
    let rg = replacement.geometry();
    let ports = |geo: &Geometry, gr: &Graph, v: VertexId, es: &dyn Fn(EdgeId) -> bool| -> Vec<u8> {
        let mut p: Vec<u8> =
            gr.incident(v).iter().filter(|&&e| es(e)).map(|&e| geo.dart_dir[dart_from(gr, e, v)]).collect();
        p.sort_unstable();
        p
    };
    let in_comp: HashSet<EdgeId> = comp.edges.iter().copied().collect();
    let target_u = ports(&hg, g, comp.poles.0, &|e| in_comp.contains(&e));
    let target_v = ports(&hg, g, comp.poles.1, &|e| in_comp.contains(&e));
    let fs = trace_faces(&h.embedding, g);
    let ext_dart = fs.faces[h.embedding.external]
        .darts
        .iter()
        .copied()
        .find(|&d| !in_comp.contains(&dart_edge(d)))
        .unwrap_or(fs.faces[h.embedding.external].darts[0]);
    for mirror in [false, true] {
        for r in 0..4u8 {
            let t = rg.transformed(r, mirror);
            let all = |_: EdgeId| true;
            if ports(&t, &replacement.graph, local_poles.0, &all) != target_u
                || ports(&t, &replacement.graph, local_poles.1, &all) != target_v
            {
                continue;
            }
            let mut geo = hg.clone();
            for (le, &ge) in emap.iter().enumerate() {
                let (la, _) = replacement.graph.endpoints(le);
                let forward = vmap[la] == g.endpoints(ge).0;
                let (d0, d1) = (t.dart_dir[2 * le], t.dart_dir[2 * le + 1]);
                if forward {
                    geo.dart_dir[2 * ge] = d0;
                    geo.dart_dir[2 * ge + 1] = d1;
                    geo.bends[ge] = t.bends[le];
                } else {
                    geo.dart_dir[2 * ge] = d1;
                    geo.dart_dir[2 * ge + 1] = d0;
                    geo.bends[ge] = -t.bends[le];
                }
            }
            let Ok(out) = OrthoRep::from_geometry(g, &geo, Some(ext_dart)) else { continue };
            if validate_rep(&out).is_ok() {
                return Ok(out);
            }
        }
    }
    Err(OrthoError::OrientationUnresolvable)
}

/// Darts of `rep` whose left face is the external face.
pub fn external_darts(rep: &OrthoRep) -> Vec<Dart> {
    let fs = trace_faces(&rep.embedding, &rep.graph);
    fs.faces[rep.embedding.external].darts.clone()
}

/// Representation from a list of directions given per edge as
/// (direction leaving the lower endpoint, signed left bends).
pub fn geometry_from_edges(per_edge: &[(u8, i32)]) -> Geometry {
    let mut dart_dir = Vec::with_capacity(2 * per_edge.len());
    for &(d, b) in per_edge {
        dart_dir.push(d);
        dart_dir.push(dir_add(d, b + 2));
    }
    Geometry { dart_dir, bends: per_edge.iter().map(|p| p.1).collect() }
}

/// Tail vertex helper re-exported for callers working with darts.
pub fn dart_tail(g: &Graph, d: Dart) -> VertexId {
    tail(g, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> OrthoRep {
        // 0 -E- 1, 1 -S- 2, 2 -W- 3, 3 -N- 0 ; edges (0,1),(1,2),(2,3),(0,3)
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let geo = geometry_from_edges(&[(0, 0), (3, 0), (2, 0), (3, 0)]);
        OrthoRep::from_geometry(&g, &geo, None).unwrap()
    }

    #[test]
    fn rectangle_is_valid() {
        let r = square();
        assert_eq!(validate_rep(&r), Ok(()));
        assert_eq!(r.total_bends(), 0);
        let geo = r.geometry();
        let back = OrthoRep::from_geometry(&r.graph, &geo, Some(external_darts(&r)[0])).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn flipped_angle_fails() {
        let mut r = square();
        let v = 0;
        r.angles[v][0] = if r.angles[v][0] == 1 { 3 } else { 1 };
        r.angles[v][1] = 4 - r.angles[v][0];
        assert!(matches!(validate_rep(&r), Err(RepViolation::FaceTurn { .. })));
    }

    #[test]
    fn turn_numbers_and_bends() {
        let r = square();
        assert_eq!(turn_number(&r, &[0, 1, 2]).unwrap(), 1);
        assert_eq!(turn_number(&r, &[0, 1, 2, 3]).unwrap(), 2);
        assert_eq!(turn_number(&r, &[0, 2]), Err(OrthoError::PathNotInGraph));
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let geo = geometry_from_edges(&[(0, 2)]);
        let e = OrthoRep::from_geometry(&g, &geo, None).unwrap();
        assert_eq!(e.bends[0], "LL");
        assert_eq!(turn_number(&e, &[0, 1]).unwrap(), 2);
        assert_eq!(validate_rep(&e), Ok(()));
    }

    #[test]
    fn rectilinear_image_round_trip() {
        // triangle with one edge bent once
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        // 0 east to 1, 1 north-west... use: 0->1 E, 1->2 N, 0->2 N then E (one right bend)
        let geo = geometry_from_edges(&[(0, 0), (1, 0), (1, -1)]);
        let r = OrthoRep::from_geometry(&g, &geo, None).unwrap();
        assert_eq!(validate_rep(&r), Ok(()));
        let img = rectilinear_image(&r);
        assert_eq!(img.rep.graph.n(), 4);
        assert_eq!(img.rep.graph.kind(3), VertexKind::Bend);
        assert_eq!(img.rep.total_bends(), 0);
        assert_eq!(validate_rep(&img.rep), Ok(()));
        assert_eq!(img.invert(), r);
    }
}
