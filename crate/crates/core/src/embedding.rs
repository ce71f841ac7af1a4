//! Rotation systems with face traversal. Planar embedding and k-legged cycles.
//!
//! Darts: edge `e = (a, b)` with `a < b` has darts `2e` (a→b) and `2e + 1` (b→a).
//! Rotations list incident edges clockwise. The face of a dart is the face on
//! its left; walking a face keeps the face on the left, so internal faces are
//! traversed counterclockwise and the external face clockwise.

use crate::graph::{biconnected_components, EdgeId, Graph, VertexId};
use serde::Serialize;
use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

pub type Dart = usize;
pub type FaceId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation system is not planar (Euler characteristic violated)")]
    NonPlanarRotation,
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    BadRotation(VertexId),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("external face {0} does not exist")]
    NoSuchFace(FaceId),
}

#[inline]
pub fn dart_edge(d: Dart) -> EdgeId {
    d >> 1
}

#[inline]
pub fn rev(d: Dart) -> Dart {
    d ^ 1
}

pub fn tail(g: &Graph, d: Dart) -> VertexId {
    let (a, b) = g.endpoints(d >> 1);
    if d & 1 == 0 {
        a
    } else {
        b
    }
}

pub fn head(g: &Graph, d: Dart) -> VertexId {
    tail(g, rev(d))
}

/// The dart of `e` leaving `v`.
pub fn dart_from(g: &Graph, e: EdgeId, v: VertexId) -> Dart {
    if g.endpoints(e).0 == v {
        2 * e
    } else {
        2 * e + 1
    }
}

/// A rotation system together with the choice of external face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarEmbedding {
    pub rotation: Vec<Vec<EdgeId>>,
    pub external: FaceId,
}

impl PlanarEmbedding {
    pub fn new(g: &Graph, rotation: Vec<Vec<EdgeId>>, external: FaceId) -> Result<Self, EmbeddingError> {
        let emb = PlanarEmbedding { rotation, external };
        emb.check_rotation(g)?;
        let faces = faces_of(&emb, g)?;
        if g.m() > 0 && external >= faces.len() {
            return Err(EmbeddingError::NoSuchFace(external));
        }
        Ok(emb)
    }

    fn check_rotation(&self, g: &Graph) -> Result<(), EmbeddingError> {
        if self.rotation.len() != g.n() {
            return Err(EmbeddingError::BadRotation(self.rotation.len().min(g.n())));
        }
        for v in 0..g.n() {
            let mut a = self.rotation[v].clone();
            let mut b = g.incident(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(EmbeddingError::BadRotation(v));
            }
        }
        Ok(())
    }

    /// Position of `e` in the rotation at `v`.
    pub fn pos(&self, v: VertexId, e: EdgeId) -> usize {
        self.rotation[v].iter().position(|&x| x == e).expect("edge incident to vertex")
    }

    /// Edge following `e` clockwise around `v`.
    pub fn cw_next(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rotation[v];
        r[(self.pos(v, e) + 1) % r.len()]
    }

    /// Next dart along the face on the left of `d`.
    pub fn next_dart(&self, g: &Graph, d: Dart) -> Dart {
        let v = head(g, d);
        let e2 = self.cw_next(v, dart_edge(d));
        dart_from(g, e2, v)
    }

    /// The same embedding seen in a mirror: every rotation reversed.
    pub fn mirrored(&self, g: &Graph) -> PlanarEmbedding {
        let rotation: Vec<Vec<EdgeId>> = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let old = faces_of(self, g).expect("planar");
        let mut emb = PlanarEmbedding { rotation, external: 0 };
        if g.m() > 0 {
            // the face left of rev(d) in the mirror is the face left of d here
            let d = old.faces[self.external].darts[0];
            let new = faces_of(&emb, g).expect("planar");
            emb.external = new.face_of_dart[rev(d)];
        }
        emb
    }

    /// Same rotation, different external face.
    pub fn with_external(&self, external: FaceId) -> PlanarEmbedding {
        PlanarEmbedding { rotation: self.rotation.clone(), external }
    }

    /// Restriction to a subset of edges of `g`, re-indexed for the subgraph
    /// built by [`Graph::edge_subgraph`] (`vmap`/`emap` are local→global).
    pub fn restrict(&self, vmap: &[VertexId], emap: &[EdgeId]) -> Vec<Vec<EdgeId>> {
        let local_edge: HashMap<EdgeId, EdgeId> = emap.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        vmap.iter().map(|&v| self.rotation[v].iter().filter_map(|e| local_edge.get(e).copied()).collect()).collect()
    }
}

/// Faces of an embedding as dart cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub darts: Vec<Dart>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    pub face_of_dart: Vec<FaceId>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Vertices on the boundary of face `f`, in walk order (with repetitions).
    pub fn vertices(&self, g: &Graph, f: FaceId) -> Vec<VertexId> {
        self.faces[f].darts.iter().map(|&d| tail(g, d)).collect()
    }
}

/// Traces all faces of a rotation system. Errors if the rotation system is not
/// planar, i.e. Euler's formula fails for some connected component.
pub fn faces_of(emb: &PlanarEmbedding, g: &Graph) -> Result<FaceSet, EmbeddingError> {
    let fs = trace_faces(emb, g);
    // components with at least one edge
    let mut comp = vec![usize::MAX; g.n()];
    let mut ncomp = 0;
    for s in 0..g.n() {
        if comp[s] != usize::MAX || g.degree(s) == 0 {
            continue;
        }
        comp[s] = ncomp;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &e in g.incident(v) {
                let w = g.other(e, v);
                if comp[w] == usize::MAX {
                    comp[w] = ncomp;
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    let nv = (0..g.n()).filter(|&v| g.degree(v) > 0).count() as i64;
    if nv - g.m() as i64 + fs.len() as i64 != 2 * ncomp as i64 {
        return Err(EmbeddingError::NonPlanarRotation);
    }
    Ok(fs)
}

/// Face traversal without the planarity check.
pub fn trace_faces(emb: &PlanarEmbedding, g: &Graph) -> FaceSet {
    let nd = 2 * g.m();
    let mut face_of_dart = vec![usize::MAX; nd];
    let mut faces = Vec::new();
    for start in 0..nd {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            darts.push(d);
            d = emb.next_dart(g, d);
            if d == start {
                break;
            }
        }
        faces.push(Face { darts });
    }
    FaceSet { faces, face_of_dart }
}

/// Computes some planar embedding of `g` (external face 0), or `NotPlanar`.
/// Each block is embedded with the Demoucron–Malgrange–Pertuiset path
/// addition method; blocks are glued at cut vertices.
pub fn planar_embedding(g: &Graph) -> Result<PlanarEmbedding, EmbeddingError> {
    let (blocks, _) = biconnected_components(g.n(), g.edges());
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
    for block in blocks {
        if block.len() == 1 {
            let e = block[0];
            let (a, b) = g.endpoints(e);
            rotation[a].push(e);
            rotation[b].push(e);
            continue;
        }
        let (sub, vmap, emap) = g.edge_subgraph(&block);
        let local = embed_biconnected(&sub)?;
        for (lv, rot) in local.into_iter().enumerate() {
            rotation[vmap[lv]].extend(rot.into_iter().map(|le| emap[le]));
        }
    }
    let emb = PlanarEmbedding { rotation, external: 0 };
    faces_of(&emb, g)?;
    Ok(emb)
}

/// DMP on a biconnected simple graph; returns clockwise rotations.
fn embed_biconnected(g: &Graph) -> Result<Vec<Vec<EdgeId>>, EmbeddingError> {
    let n = g.n();
    let m = g.m();
    // initial cycle via DFS back edge
    let cycle = find_cycle(g);
    let mut in_h_v = vec![false; n];
    let mut in_h_e = vec![false; m];
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        in_h_v[a] = true;
        in_h_e[g.find_edge(a, b).unwrap()] = true;
    }
    let mut faces: Vec<Vec<VertexId>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut embedded = cycle.len();
    while embedded < m {
        // fragments
        let frags = fragments(g, &in_h_v, &in_h_e);
        let face_sets: Vec<HashSet<VertexId>> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        let mut fallback: Option<(usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let adm: Vec<usize> =
                (0..faces.len()).filter(|&f| frag.attachments.iter().all(|a| face_sets[f].contains(a))).collect();
            if adm.is_empty() {
                return Err(EmbeddingError::NotPlanar);
            }
            if adm.len() == 1 && choice.is_none() {
                choice = Some((fi, adm[0]));
            }
            if fallback.is_none() {
                fallback = Some((fi, adm[0]));
            }
        }
        let (fi, f) = choice.or(fallback).expect("some fragment remains");
        let path = fragment_path(g, &frags[fi], &in_h_v);
        for w in path.windows(2) {
            let e = g.find_edge(w[0], w[1]).unwrap();
            in_h_e[e] = true;
            embedded += 1;
        }
        for &v in &path {
            in_h_v[v] = true;
        }
        let face = faces.swap_remove(f);
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let l = face.len();
        let walk = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % l;
            }
            out
        };
        // face walk a..b then path back b..a (interior of path)
        let mut f1 = walk(ia, ib);
        f1.extend(path[1..path.len() - 1].iter().rev());
        let mut f2 = walk(ib, ia);
        f2.extend(path[1..path.len() - 1].iter());
        faces.push(f1);
        faces.push(f2);
    }
    // rotation from faces: u→v→w along a face means cw_next_v(vu) = vw
    let mut succ: HashMap<(VertexId, EdgeId), EdgeId> = HashMap::new();
    for f in &faces {
        let l = f.len();
        for i in 0..l {
            let u = f[i];
            let v = f[(i + 1) % l];
            let w = f[(i + 2) % l];
            let e1 = g.find_edge(v, u).unwrap();
            let e2 = g.find_edge(v, w).unwrap();
            succ.insert((v, e1), e2);
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        let Some(&start) = g.incident(v).iter().min() else { continue };
        let mut e = start;
        loop {
            rotation[v].push(e);
            e = succ[&(v, e)];
            if e == start {
                break;
            }
        }
        if rotation[v].len() != g.degree(v) {
            return Err(EmbeddingError::NotPlanar);
        }
    }
    Ok(rotation)
}

fn find_cycle(g: &Graph) -> Vec<VertexId> {
    // close edge 0 with a shortest path avoiding it
    let (a, b) = g.endpoints(0);
    let mut prev = vec![usize::MAX; g.n()];
    prev[a] = a;
    let mut q = VecDeque::from([a]);
    while let Some(v) = q.pop_front() {
        for &e in g.incident(v) {
            if e == 0 {
                continue;
            }
            let w = g.other(e, v);
            if prev[w] == usize::MAX {
                prev[w] = v;
                q.push_back(w);
            }
        }
    }
    let mut cyc = vec![b];
    let mut x = b;
    while x != a {
        x = prev[x];
        cyc.push(x);
    }
    cyc
}

struct Fragment {
    edges: Vec<EdgeId>,
    attachments: Vec<VertexId>,
}

fn fragments(g: &Graph, in_v: &[bool], in_e: &[bool]) -> Vec<Fragment> {
    let mut out = Vec::new();
    let mut seen = vec![false; g.n()];
    for e in 0..g.m() {
        if in_e[e] {
            continue;
        }
        let (a, b) = g.endpoints(e);
        if in_v[a] && in_v[b] {
            out.push(Fragment { edges: vec![e], attachments: vec![a, b] });
        }
    }
    for s in 0..g.n() {
        if in_v[s] || seen[s] {
            continue;
        }
        let mut edges = Vec::new();
        let mut att = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &e in g.incident(v) {
                let w = g.other(e, v);
                if in_v[w] {
                    edges.push(e);
                    att.push(w);
                } else {
                    if v < w {
                        edges.push(e);
                    }
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment { edges, attachments: att });
    }
    out
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, in_v: &[bool]) -> Vec<VertexId> {
    if frag.edges.len() == 1
        && frag.attachments.len() == 2
        && in_v[g.endpoints(frag.edges[0]).0]
        && in_v[g.endpoints(frag.edges[0]).1]
    {
        let (a, b) = g.endpoints(frag.edges[0]);
        return vec![a, b];
    }
    let allowed: HashSet<EdgeId> = frag.edges.iter().copied().collect();
    let start = frag.attachments[0];
    let mut prev: HashMap<VertexId, VertexId> = HashMap::new();
    let mut q = VecDeque::new();
    q.push_back(start);
    prev.insert(start, start);
    while let Some(v) = q.pop_front() {
        for &e in g.incident(v) {
            if !allowed.contains(&e) {
                continue;
            }
            let w = g.other(e, v);
            if prev.contains_key(&w) {
                continue;
            }
            // do not walk through other attachments
            prev.insert(w, v);
            if in_v[w] {
                let mut path = vec![w];
                let mut x = w;
                while x != start {
                    x = prev[&x];
                    path.push(x);
                }
                path.reverse();
                return path;
            }
            q.push_back(w);
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

/// A cycle of a plane graph with its legs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeggedCycle {
    /// Cycle vertices in order.
    pub vertices: Vec<VertexId>,
    /// Cycle edges; `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub edges: Vec<EdgeId>,
    pub legs: Vec<EdgeId>,
    pub leg_vertices: Vec<VertexId>,
    /// Edges of `G(C)` strictly inside the cycle.
    pub inner_edges: Vec<EdgeId>,
    /// Number of degree-2 vertices (in the whole graph) on the cycle.
    pub degree_two: usize,
}

impl LeggedCycle {
    pub fn k(&self) -> usize {
        self.legs.len()
    }

    /// Edges of `G(C)`.
    pub fn interior_graph_edges(&self) -> Vec<EdgeId> {
        let mut v: Vec<EdgeId> = self.edges.iter().chain(&self.inner_edges).copied().collect();
        v.sort_unstable();
        v
    }
}

/// All simple cycles of `g` as (vertex sequence, edge sequence), each reported once.
/// Exponential; intended for small graphs.
pub fn simple_cycles(g: &Graph) -> Vec<(Vec<VertexId>, Vec<EdgeId>)> {
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut pedges: Vec<EdgeId> = Vec::new();
        let mut on = vec![false; g.n()];
        on[s] = true;
        cycles_from(g, s, &mut path, &mut pedges, &mut on, &mut out, &mut seen);
    }
    out
}

fn cycles_from(
    g: &Graph,
    s: VertexId,
    path: &mut Vec<VertexId>,
    pedges: &mut Vec<EdgeId>,
    on: &mut [bool],
    out: &mut Vec<(Vec<VertexId>, Vec<EdgeId>)>,
    seen: &mut HashSet<Vec<EdgeId>>,
) {
    let v = *path.last().unwrap();
    for &e in g.incident(v) {
        let w = g.other(e, v);
        if w == s && path.len() >= 3 && pedges.first() != Some(&e) {
            let mut key: Vec<EdgeId> = pedges.clone();
            key.push(e);
            let mut sorted = key.clone();
            sorted.sort_unstable();
            if seen.insert(sorted) {
                out.push((path.clone(), key));
            }
        } else if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            pedges.push(e);
            cycles_from(g, s, path, pedges, on, out, seen);
            pedges.pop();
            path.pop();
            on[w] = false;
        }
    }
}

/// Classifies the faces of a plane graph as inside/outside a cycle: the faces
/// reachable from the external face without crossing cycle edges are outside.
fn inside_faces(g: &Graph, fs: &FaceSet, external: FaceId, cycle_edges: &HashSet<EdgeId>) -> Vec<bool> {
    let mut outside = vec![false; fs.len()];
    outside[external] = true;
    let mut stack = vec![external];
    while let Some(f) = stack.pop() {
        for &d in &fs.faces[f].darts {
            if cycle_edges.contains(&dart_edge(d)) {
                continue;
            }
            let h = fs.face_of_dart[rev(d)];
            if !outside[h] {
                outside[h] = true;
                stack.push(h);
            }
        }
    }
    let _ = g;
    outside.iter().map(|o| !o).collect()
}

/// Legs and interior of one cycle. Returns `None` if an edge outside the
/// cycle joins two of its vertices (then it is not k-legged for any k).
pub fn legged_cycle_of(
    g: &Graph,
    emb: &PlanarEmbedding,
    fs: &FaceSet,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
) -> Option<LeggedCycle> {
    let cset: HashSet<EdgeId> = edges.iter().copied().collect();
    let vset: HashSet<VertexId> = vertices.iter().copied().collect();
    let inside = inside_faces(g, fs, emb.external, &cset);
    let mut inner_edges = Vec::new();
    let mut legs = Vec::new();
    let mut leg_vertices = Vec::new();
    for e in 0..g.m() {
        if cset.contains(&e) {
            continue;
        }
        let f0 = fs.face_of_dart[2 * e];
        let f1 = fs.face_of_dart[2 * e + 1];
        if inside[f0] || inside[f1] {
            inner_edges.push(e);
            continue;
        }
        let (a, b) = g.endpoints(e);
        match (vset.contains(&a), vset.contains(&b)) {
            (true, true) => return None,
            (true, false) => {
                legs.push(e);
                leg_vertices.push(a);
            }
            (false, true) => {
                legs.push(e);
                leg_vertices.push(b);
            }
            _ => {}
        }
    }
    let degree_two = vertices.iter().filter(|&&v| g.degree(v) == 2).count();
    Some(LeggedCycle { vertices, edges, legs, leg_vertices, inner_edges, degree_two })
}

/// All k-legged cycles of a plane graph. Brute-force cycle enumeration.
pub fn legged_cycles(g: &Graph, emb: &PlanarEmbedding, k: usize) -> Vec<LeggedCycle> {
    let fs = trace_faces(emb, g);
    simple_cycles(g)
        .into_iter()
        .filter_map(|(vs, es)| legged_cycle_of(g, emb, &fs, vs, es))
        .filter(|c| c.k() == k)
        .collect()
}

/// A 2-legged cycle with fewer than two degree-2 vertices, or a 3-legged cycle
/// with none, cannot be drawn without bends.
pub fn is_bad_cycle(c: &LeggedCycle) -> bool {
    match c.k() {
        2 => c.degree_two < 2,
        3 => c.degree_two == 0,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn c4_has_two_faces_of_length_four() {
        let g = cycle(4);
        let emb = planar_embedding(&g).unwrap();
        let fs = faces_of(&emb, &g).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.faces.iter().all(|f| f.darts.len() == 4));
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = k4();
        let emb = planar_embedding(&g).unwrap();
        let fs = faces_of(&emb, &g).unwrap();
        assert_eq!(fs.len(), 4);
        assert!(fs.faces.iter().all(|f| f.darts.len() == 3));
    }

    #[test]
    fn every_dart_in_exactly_one_face() {
        let g = k4();
        let emb = planar_embedding(&g).unwrap();
        let fs = faces_of(&emb, &g).unwrap();
        let mut count = vec![0; 2 * g.m()];
        for f in &fs.faces {
            for &d in &f.darts {
                count[d] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 1));
    }

    #[test]
    fn non_planar_rotation_is_reported() {
        // K4 with one vertex rotation reversed has genus 1
        let g = k4();
        let mut emb = planar_embedding(&g).unwrap();
        emb.rotation[0].reverse();
        assert_eq!(faces_of(&emb, &g), Err(EmbeddingError::NonPlanarRotation));
    }

    #[test]
    fn k33_is_not_planar() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let g = Graph::new(6, &e).unwrap();
        assert_eq!(planar_embedding(&g), Err(EmbeddingError::NotPlanar));
    }

    #[test]
    fn mirrored_embedding_keeps_external_face_boundary() {
        let g = k4();
        let emb = planar_embedding(&g).unwrap();
        let fs = faces_of(&emb, &g).unwrap();
        let mir = emb.mirrored(&g);
        let fm = faces_of(&mir, &g).unwrap();
        let mut a: Vec<_> = fs.faces[emb.external].darts.iter().map(|&d| dart_edge(d)).collect();
        let mut b: Vec<_> = fm.faces[mir.external].darts.iter().map(|&d| dart_edge(d)).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    /// Brute-force leg count straight from the definition, without faces:
    /// an edge is in G(C) iff it is a cycle edge or lies in a face inside C.
    fn brute_leg_counts(g: &Graph, emb: &PlanarEmbedding) -> Vec<(Vec<EdgeId>, usize)> {
        let fs = trace_faces(emb, g);
        let mut out = Vec::new();
        for (vs, es) in simple_cycles(g) {
            if let Some(c) = legged_cycle_of(g, emb, &fs, vs, es.clone()) {
                let mut k = es.clone();
                k.sort_unstable();
                out.push((k, c.k()));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn k4_triangles_are_three_legged_and_bad() {
        let g = k4();
        let emb = planar_embedding(&g).unwrap();
        let three = legged_cycles(&g, &emb, 3);
        // the three internal triangular faces (the external triangle has no legs)
        assert_eq!(three.len(), 3);
        assert!(three.iter().all(is_bad_cycle));
        assert!(legged_cycles(&g, &emb, 2).is_empty());
        // 7 simple cycles in K4: 4 triangles + 3 quadrilaterals
        assert_eq!(simple_cycles(&g).len(), 7);
        let counts = brute_leg_counts(&g, &emb);
        assert_eq!(counts.iter().filter(|(_, k)| *k == 3).count(), 3);
    }

    #[test]
    fn c4_has_no_legged_cycles() {
        let g = cycle(4);
        let emb = planar_embedding(&g).unwrap();
        assert!(legged_cycles(&g, &emb, 2).is_empty());
        assert!(legged_cycles(&g, &emb, 3).is_empty());
    }

    #[test]
    fn bad_cycle_rule() {
        let mk = |k: usize, d2: usize| LeggedCycle {
            vertices: vec![],
            edges: vec![],
            legs: vec![0; k],
            leg_vertices: vec![],
            inner_edges: vec![],
            degree_two: d2,
        };
        assert!(is_bad_cycle(&mk(2, 1)));
        assert!(!is_bad_cycle(&mk(2, 2)));
        assert!(is_bad_cycle(&mk(3, 0)));
        assert!(!is_bad_cycle(&mk(3, 1)));
    }
}
