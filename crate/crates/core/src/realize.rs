//! Compaction of an orthogonal representation into integer grid coordinates,
//! drawing serialization and geometric checks.
//!
//! Bends become dummy vertices, every face is cut into rectangles by rays from
//! its reflex corners (the external face additionally gets a bounding box),
//! and coordinates follow from longest paths over the horizontal and
//! vertical constraint relations.

use crate::embedding::{trace_faces, Dart};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::ortho::{dir_add, validate_rep, vertex_turn, Geometry, OrthoRep};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
}

/// Polyline of one edge from its lower to its higher endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub bends: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDrawing {
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<GridEdge>,
}

impl GridDrawing {
    pub fn width(&self) -> i64 {
        self.points().map(|p| p.0).max().unwrap_or(0)
    }

    pub fn height(&self) -> i64 {
        self.points().map(|p| p.1).max().unwrap_or(0)
    }

    fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.vertices.iter().copied().chain(self.edges.iter().flat_map(|e| e.bends.iter().copied()))
    }

    /// Points of edge `e` from `u` to `v`.
    pub fn polyline(&self, e: EdgeId) -> Vec<(i64, i64)> {
        let ge = &self.edges[e];
        let mut p = vec![self.vertices[ge.u]];
        p.extend(ge.bends.iter().copied());
        p.push(self.vertices[ge.v]);
        p
    }
}

const NONE: usize = usize::MAX;

/// Rectilinear plane graph with a direction per dart.
struct Plane {
    ports: Vec<[usize; 4]>,
    to: Vec<usize>,
    dir: Vec<u8>,
}

impl Plane {
    fn add_vertex(&mut self) -> usize {
        self.ports.push([NONE; 4]);
        self.ports.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize, d: u8) -> Result<Dart, RealizeError> {
        let da = self.to.len();
        let back = dir_add(d, 2);
        if self.ports[a][d as usize] != NONE || self.ports[b][back as usize] != NONE {
            return Err(RealizeError::InvalidRepresentation("two edges share a port".into()));
        }
        self.to.extend([b, a]);
        self.dir.extend([d, back]);
        self.ports[a][d as usize] = da;
        self.ports[b][back as usize] = da + 1;
        Ok(da)
    }

    fn tail(&self, d: Dart) -> usize {
        self.to[d ^ 1]
    }

    /// Splits dart `d` with a new vertex; `d` then ends at the new vertex.
    fn subdivide(&mut self, d: Dart) -> usize {
        let q = self.add_vertex();
        let b = self.to[d];
        let h = self.dir[d];
        let back = dir_add(h, 2);
        self.to[d] = q;
        self.ports[q][back as usize] = d ^ 1;
        let nd = self.to.len();
        self.to.extend([b, q]);
        self.dir.extend([h, back]);
        self.ports[q][h as usize] = nd;
        self.ports[b][back as usize] = nd + 1;
        nd
    }

    /// Next dart of the face left of `d`, with the turn taken.
    fn next(&self, d: Dart) -> (Dart, i32) {
        let v = self.to[d];
        let h = self.dir[d];
        let p = dir_add(h, 2);
        for k in 1..=4 {
            let port = dir_add(p, -k);
            let o = self.ports[v][port as usize];
            if o != NONE {
                let t = if o == d ^ 1 { -2 } else { vertex_turn(h, port) };
                return (o, t);
            }
        }
        unreachable!("dart without a reverse port")
    }

    fn face(&self, start: Dart) -> (Vec<Dart>, Vec<i32>) {
        let mut ds = vec![start];
        let mut ts = Vec::new();
        loop {
            let (n, t) = self.next(*ds.last().expect("nonempty"));
            ts.push(t);
            if n == start {
                break;
            }
            ds.push(n);
        }
        (ds, ts)
    }

    /// Cuts rectangular pockets off the face of `start` until none is left.
    /// Returns a dart of the remaining face.
    fn cut_pockets(&mut self, mut start: Dart) -> Result<Dart, RealizeError> {
        loop {
            let (ds, ts) = self.face(start);
            let k = ds.len();
            let mut cut = None;
            'search: for i in 0..k {
                if ts[i] >= 0 {
                    continue;
                }
                let target = if ts[i] == -1 { 2 } else { 3 };
                let mut s = 0;
                for l in i + 1..i + k {
                    let t = ts[l % k];
                    if t < 0 {
                        break;
                    }
                    s += t;
                    if s == target {
                        cut = Some((i, (l + 1) % k));
                        break 'search;
                    }
                }
            }
            let Some((i, j)) = cut else {
                return Ok(start);
            };
            let p = self.to[ds[i]];
            let h = self.dir[ds[i]];
            let sj = ds[j];
            if self.dir[sj] != dir_add(h, 1) {
                return Err(RealizeError::InvalidRepresentation("inconsistent face turns".into()));
            }
            self.subdivide(sj);
            let q = self.to[sj];
            self.add_edge(p, q, h)?;
            start = ds[i];
        }
    }

    /// Encloses the external face (the face of `start`, already free of
    /// pockets) in a rectangle joined to every reflex corner.
    fn enclose(&mut self, start: Dart) -> Result<(), RealizeError> {
        let (ds, ts) = self.face(start);
        let k = ds.len();
        let reflex: Vec<usize> = (0..k).filter(|&i| ts[i] < 0).collect();
        if reflex.is_empty() {
            return Err(RealizeError::InvalidRepresentation("external face without reflex corners".into()));
        }
        // one box point per reflex corner, joined by a ray in the arrival direction
        let mut qs = Vec::with_capacity(reflex.len());
        for &i in &reflex {
            let q = self.add_vertex();
            self.add_edge(self.to[ds[i]], q, self.dir[ds[i]])?;
            qs.push(q);
        }
        // between consecutive corners a and b the box runs from q_b back to q_a
        let r = reflex.len();
        for x in 0..r {
            let (a, b) = (reflex[x], reflex[(x + 1) % r]);
            let run: i32 = (a + 1..a + k).take_while(|&l| l % k != b).map(|l| ts[l % k]).sum();
            let corners = if ts[a] == -1 { 1 - run } else { 2 - run };
            if corners < 0 {
                return Err(RealizeError::InvalidRepresentation("pocket left in the external face".into()));
            }
            let mut cur = qs[(x + 1) % r];
            let mut h = dir_add(self.dir[ds[b]], 1);
            for _ in 0..corners {
                let c = self.add_vertex();
                self.add_edge(cur, c, h)?;
                cur = c;
                h = dir_add(h, 1);
            }
            if h != dir_add(self.dir[ds[a]], 1) {
                return Err(RealizeError::InvalidRepresentation("bounding box does not close".into()));
            }
            self.add_edge(cur, qs[x], h)?;
        }
        Ok(())
    }

    fn all_faces(&self) -> Vec<Dart> {
        let mut seen = vec![false; self.to.len()];
        let mut out = Vec::new();
        for s in 0..self.to.len() {
            if seen[s] {
                continue;
            }
            out.push(s);
            let mut d = s;
            loop {
                seen[d] = true;
                d = self.next(d).0;
                if d == s {
                    break;
                }
            }
        }
        out
    }

    /// Longest-path coordinates along one axis: darts in direction `pos`
    /// increase the coordinate, darts along the other axis merge classes.
    fn coordinates(&self, pos: u8) -> Vec<i64> {
        let n = self.ports.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for d in 0..self.to.len() {
            if self.dir[d] % 2 != pos % 2 {
                let (a, b) = (find(&mut parent, self.tail(d)), find(&mut parent, self.to[d]));
                parent[a] = b;
            }
        }
        let class: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut adj = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for d in 0..self.to.len() {
            if self.dir[d] == pos {
                adj[class[self.tail(d)]].push(class[self.to[d]]);
                indeg[class[self.to[d]]] += 1;
            }
        }
        let mut val = vec![0i64; n];
        let mut q: VecDeque<usize> = (0..n).filter(|&c| class[c] == c && indeg[c] == 0).collect();
        while let Some(c) = q.pop_front() {
            for &w in &adj[c] {
                val[w] = val[w].max(val[c] + 1);
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    q.push_back(w);
                }
            }
        }
        (0..n).map(|v| val[class[v]]).collect()
    }
}

/// Integer grid drawing realizing `rep` exactly.
pub fn compact(rep: &OrthoRep) -> Result<GridDrawing, RealizeError> {
    validate_rep(rep).map_err(|e| RealizeError::InvalidRepresentation(e.to_string()))?;
    let g = &rep.graph;
    if g.m() == 0 {
        return Ok(GridDrawing { vertices: (0..g.n() as i64).map(|i| (i, 0)).collect(), edges: Vec::new() });
    }
    let geo = rep.geometry();
    let mut pl = Plane { ports: vec![[NONE; 4]; g.n()], to: Vec::new(), dir: Vec::new() };
    // first plane dart and bend vertices of each edge, from its lower endpoint
    let mut chains: Vec<(Dart, Dart, Vec<usize>)> = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        let mut h = geo.dart_dir[2 * e];
        let mut cur = u;
        let mut bends = Vec::new();
        let mut first = None;
        for c in rep.bends[e].chars() {
            let b = pl.add_vertex();
            first.get_or_insert(pl.add_edge(cur, b, h)?);
            bends.push(b);
            cur = b;
            h = dir_add(h, if c == 'L' { 1 } else { -1 });
        }
        let last = pl.add_edge(cur, v, h)?;
        chains.push((first.unwrap_or(last), last, bends));
    }
    let fs = trace_faces(&rep.embedding, g);
    let ext_dart = fs.faces[rep.embedding.external].darts[0];
    let ext_plane = if ext_dart & 1 == 0 { chains[ext_dart >> 1].0 } else { chains[ext_dart >> 1].1 ^ 1 };
    // internal faces first; the external face is identified by its dart
    let ext_start = pl.cut_pockets(ext_plane)?;
    pl.enclose(ext_start)?;
    for s in pl.all_faces() {
        pl.cut_pockets(s)?;
    }
    for s in pl.all_faces() {
        let (_, ts) = pl.face(s);
        if ts.iter().any(|&t| t < 0) && ts.iter().any(|&t| t > 0) {
            return Err(RealizeError::InvalidRepresentation(format!("face left non-rectangular: {ts:?}")));
        }
    }
    let xs = pl.coordinates(0);
    let ys = pl.coordinates(1);
    let mut vertices: Vec<(i64, i64)> = (0..g.n()).map(|v| (xs[v], ys[v])).collect();
    let mut edges: Vec<GridEdge> = (0..g.m())
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let bends = chains[e].2.iter().map(|&b| (xs[b], ys[b])).collect();
            GridEdge { u, v, bends }
        })
        .collect();
    let min_x =
        vertices.iter().map(|p| p.0).chain(edges.iter().flat_map(|e| e.bends.iter().map(|p| p.0))).min().unwrap_or(0);
    let min_y =
        vertices.iter().map(|p| p.1).chain(edges.iter().flat_map(|e| e.bends.iter().map(|p| p.1))).min().unwrap_or(0);
    for p in vertices.iter_mut().chain(edges.iter_mut().flat_map(|e| e.bends.iter_mut())) {
        p.0 -= min_x;
        p.1 -= min_y;
    }
    Ok(GridDrawing { vertices, edges })
}

fn seg_dir(a: (i64, i64), b: (i64, i64)) -> Result<u8, RealizeError> {
    match (b.0.cmp(&a.0), b.1.cmp(&a.1)) {
        (std::cmp::Ordering::Greater, std::cmp::Ordering::Equal) => Ok(0),
        (std::cmp::Ordering::Equal, std::cmp::Ordering::Greater) => Ok(1),
        (std::cmp::Ordering::Less, std::cmp::Ordering::Equal) => Ok(2),
        (std::cmp::Ordering::Equal, std::cmp::Ordering::Less) => Ok(3),
        _ => Err(RealizeError::InvalidDrawing(format!("segment {a:?}-{b:?} is not axis-parallel"))),
    }
}

/// Reads the orthogonal representation back from drawing geometry.
pub fn extract_rep(g: &Graph, d: &GridDrawing) -> Result<OrthoRep, RealizeError> {
    if d.vertices.len() != g.n() || d.edges.len() != g.m() {
        return Err(RealizeError::InvalidDrawing("size mismatch".into()));
    }
    let mut geo = Geometry { dart_dir: vec![0; 2 * g.m()], bends: vec![0; g.m()] };
    let mut strings = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        if (d.edges[e].u, d.edges[e].v) != g.endpoints(e) {
            return Err(RealizeError::InvalidDrawing(format!("edge {e} has wrong endpoints")));
        }
        let p = d.polyline(e);
        let dirs: Vec<u8> = p.windows(2).map(|w| seg_dir(w[0], w[1])).collect::<Result<_, _>>()?;
        let mut s = String::new();
        for w in dirs.windows(2) {
            match vertex_turn(w[0], w[1]) {
                1 => s.push('L'),
                -1 => s.push('R'),
                _ => return Err(RealizeError::InvalidDrawing(format!("edge {e} has a straight or reversing bend"))),
            }
        }
        geo.dart_dir[2 * e] = dirs[0];
        geo.dart_dir[2 * e + 1] = dir_add(*dirs.last().expect("segment"), 2);
        geo.bends[e] = crate::ortho::net_left(&s);
        strings.push(s);
    }
    let mut rep = OrthoRep::from_geometry(g, &geo, None).map_err(|e| RealizeError::InvalidDrawing(e.to_string()))?;
    rep.bends = strings;
    Ok(rep)
}

/// Equality of representations up to the starting edge of each rotation.
pub fn same_rep(a: &OrthoRep, b: &OrthoRep) -> bool {
    let g = &a.graph;
    if a.graph != b.graph || a.bends != b.bends {
        return false;
    }
    for v in 0..g.n() {
        let (ra, rb) = (&a.embedding.rotation[v], &b.embedding.rotation[v]);
        if ra.len() != rb.len() {
            return false;
        }
        if ra.is_empty() {
            continue;
        }
        let Some(off) = rb.iter().position(|&e| e == ra[0]) else {
            return false;
        };
        let k = ra.len();
        if (0..k).any(|i| ra[i] != rb[(i + off) % k] || a.angles[v][i] != b.angles[v][(i + off) % k]) {
            return false;
        }
    }
    if g.m() == 0 {
        return true;
    }
    let fa = trace_faces(&a.embedding, g);
    let fb = trace_faces(&b.embedding, g);
    let ea: BTreeSet<Dart> = fa.faces[a.embedding.external].darts.iter().copied().collect();
    let eb: BTreeSet<Dart> = fb.faces[b.embedding.external].darts.iter().copied().collect();
    ea == eb
}

/// Improper intersections between segments: pairs that meet anywhere other
/// than a shared polyline point or a shared end vertex.
pub fn segment_violations(g: &Graph, d: &GridDrawing) -> Vec<(EdgeId, EdgeId)> {
    struct Seg {
        e: EdgeId,
        idx: usize,
        a: (i64, i64),
        b: (i64, i64),
    }
    let mut segs = Vec::new();
    for e in 0..g.m() {
        let p = d.polyline(e);
        for (idx, w) in p.windows(2).enumerate() {
            segs.push(Seg { e, idx, a: w[0], b: w[1] });
        }
    }
    let bbox = |s: &Seg| (s.a.0.min(s.b.0), s.a.0.max(s.b.0), s.a.1.min(s.b.1), s.a.1.max(s.b.1));
    // sort by left x to prune pairs
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by_key(|&i| bbox(&segs[i]).0);
    let mut bad = BTreeSet::new();
    for (oi, &i) in order.iter().enumerate() {
        let bi = bbox(&segs[i]);
        for &j in &order[oi + 1..] {
            let bj = bbox(&segs[j]);
            if bj.0 > bi.1 {
                break;
            }
            if bj.2 > bi.3 || bi.2 > bj.3 {
                continue;
            }
            // closed boxes intersect; for axis-parallel segments this is the intersection
            let inter = (bi.0.max(bj.0), bi.1.min(bj.1), bi.2.max(bj.2), bi.3.min(bj.3));
            let (si, sj) = (&segs[i], &segs[j]);
            let single = inter.0 == inter.1 && inter.2 == inter.3;
            let pt = (inter.0, inter.2);
            let allowed = if si.e == sj.e {
                single && si.idx.abs_diff(sj.idx) == 1 && {
                    let shared = if si.idx < sj.idx { si.b } else { sj.b };
                    pt == shared
                }
            } else {
                let (ui, vi) = g.endpoints(si.e);
                let (uj, vj) = g.endpoints(sj.e);
                single
                    && [ui, vi].iter().any(|&w| {
                        [uj, vj].contains(&w)
                            && d.vertices[w] == pt
                            && (si.a == pt || si.b == pt)
                            && (sj.a == pt || sj.b == pt)
                    })
            };
            if !allowed {
                bad.insert((si.e.min(sj.e), si.e.max(sj.e)));
            }
        }
    }
    // distinct vertices on the same point
    let mut pts: Vec<((i64, i64), usize)> = d.vertices.iter().copied().zip(0..).collect();
    pts.sort();
    for w in pts.windows(2) {
        if w[0].0 == w[1].0 {
            let e = g.incident(w[0].1).first().copied().unwrap_or(0);
            bad.insert((e, e));
        }
    }
    bad.into_iter().collect()
}

/// Drawing JSON: `{"vertices": [[x, y], ...], "edges": [{"u", "v", "bends"}]}`.
pub fn emit_json(d: &GridDrawing) -> String {
    serde_json::to_string(d).expect("drawing serializes")
}

/// SVG with one polyline per edge; the y axis points up in grid coordinates.
pub fn emit_svg(d: &GridDrawing) -> String {
    const SCALE: i64 = 40;
    const MARGIN: i64 = 20;
    let w = d.width() * SCALE + 2 * MARGIN;
    let h = d.height() * SCALE + 2 * MARGIN;
    let map = |p: (i64, i64)| (p.0 * SCALE + MARGIN, (d.height() - p.1) * SCALE + MARGIN);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    for e in &d.edges {
        let mut pts = vec![d.vertices[e.u]];
        pts.extend(e.bends.iter().copied());
        pts.push(d.vertices[e.v]);
        let list: Vec<String> = pts
            .into_iter()
            .map(|p| {
                let (x, y) = map(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(s, r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#, list.join(" "));
    }
    for (i, &p) in d.vertices.iter().enumerate() {
        let (x, y) = map(p);
        let _ = writeln!(
            s,
            r#"  <circle cx="{x}" cy="{y}" r="5" fill="white" stroke="black" stroke-width="2"><title>{i}</title></circle>"#
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Compacts, re-extracts and checks for improper intersections.
pub fn round_trip(rep: &OrthoRep) -> Result<GridDrawing, RealizeError> {
    let d = compact(rep)?;
    let back = extract_rep(&rep.graph, &d)?;
    if rep.graph.m() > 0 && !same_rep(rep, &back) {
        return Err(RealizeError::InvalidDrawing("re-extracted representation differs".into()));
    }
    let bad = segment_violations(&rep.graph, &d);
    if !bad.is_empty() {
        return Err(RealizeError::InvalidDrawing(format!("improper intersections between edges {bad:?}")));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::bend_min_global;
    use crate::embedding::planar_embedding;

    fn solve(n: usize, e: &[(usize, usize)]) -> OrthoRep {
        let g = Graph::new(n, e).unwrap();
        let emb = planar_embedding(&g).unwrap();
        bend_min_global(&g, &emb).unwrap().rep
    }

    #[test]
    fn square_is_unit() {
        let rep = solve(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let d = round_trip(&rep).unwrap();
        assert_eq!((d.width(), d.height()), (1, 1));
        assert!(d.edges.iter().all(|e| e.bends.is_empty()));
        assert_eq!(emit_svg(&d).matches("<polyline").count(), 4);
    }

    #[test]
    fn k4_has_four_bend_points() {
        let rep = solve(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let d = round_trip(&rep).unwrap();
        assert_eq!(d.edges.iter().map(|e| e.bends.len()).sum::<usize>(), 4);
    }

    #[test]
    fn trees_and_bridges() {
        for (n, e) in [
            (2, vec![(0, 1)]),
            (3, vec![(0, 1), (1, 2)]),
            (4, vec![(0, 1), (0, 2), (0, 3)]),
            (6, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]),
            (7, vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (5, 6)]),
        ] {
            let rep = solve(n, &e);
            round_trip(&rep).unwrap_or_else(|x| panic!("{e:?}: {x}"));
        }
    }

    #[test]
    fn oracle_reps_round_trip() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        for emb in crate::oracle::enumerate_embeddings(&g) {
            let fs = crate::embedding::trace_faces(&emb, &g);
            for f in 0..fs.len() {
                let (_, rep) = crate::oracle::min_bends_fixed_embedding(&g, &emb.with_external(f)).unwrap();
                round_trip(&rep).unwrap();
            }
        }
    }

    #[test]
    fn emitters_are_deterministic() {
        let rep = solve(3, &[(0, 1), (1, 2), (2, 0)]);
        let a = compact(&rep).unwrap();
        let b = compact(&rep).unwrap();
        assert_eq!(emit_json(&a), emit_json(&b));
        assert_eq!(emit_svg(&a), emit_svg(&b));
        let empty = GridDrawing { vertices: Vec::new(), edges: Vec::new() };
        assert!(emit_svg(&empty).contains("</svg>"));
        assert_eq!(emit_json(&empty), r#"{"vertices":[],"edges":[]}"#);
    }
}
