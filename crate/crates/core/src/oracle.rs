//! Reference solver: for every planar rotation system and every external
//! face, the classic bend-minimization flow with unit bend cost, solved by
//! successive shortest paths with Bellman-Ford. Exponential in the number of
//! degree-3 vertices; meant for cross-checking on small graphs.

use crate::embedding::{dart_edge, faces_of, head, FaceSet, PlanarEmbedding};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::ortho::{bend_string, OrthoRep};

const INF: i64 = i64::MAX / 4;

struct Ssp {
    head: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Ssp {
    fn new(n: usize) -> Self {
        Ssp { head: Vec::new(), cap: Vec::new(), cost: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn arc(&mut self, a: usize, b: usize, cap: i64, cost: i64) -> usize {
        let id = self.head.len();
        self.head.extend([b, a]);
        self.cap.extend([cap, 0]);
        self.cost.extend([cost, -cost]);
        self.adj[a].push(id);
        self.adj[b].push(id + 1);
        id
    }

    /// Sends `amount` from `s` to `t`; returns the cost or `None`.
    fn run(&mut self, s: usize, t: usize, mut amount: i64) -> Option<i64> {
        let n = self.adj.len();
        let mut total = 0;
        while amount > 0 {
            let mut dist = vec![INF; n];
            let mut via = vec![usize::MAX; n];
            dist[s] = 0;
            let mut changed = true;
            let mut rounds = 0;
            while changed {
                changed = false;
                rounds += 1;
                assert!(rounds <= n + 1, "negative cycle in residual graph");
                for v in 0..n {
                    if dist[v] >= INF {
                        continue;
                    }
                    for &id in &self.adj[v] {
                        if self.cap[id] > 0 && dist[v] + self.cost[id] < dist[self.head[id]] {
                            dist[self.head[id]] = dist[v] + self.cost[id];
                            via[self.head[id]] = id;
                            changed = true;
                        }
                    }
                }
            }
            if dist[t] >= INF {
                return None;
            }
            let mut f = amount;
            let mut v = t;
            while v != s {
                let id = via[v];
                f = f.min(self.cap[id]);
                v = self.head[id ^ 1];
            }
            let mut v = t;
            while v != s {
                let id = via[v];
                self.cap[id] -= f;
                self.cap[id ^ 1] += f;
                v = self.head[id ^ 1];
            }
            amount -= f;
            total += f * dist[t];
        }
        Some(total)
    }
}

/// Minimum bends of an orthogonal representation preserving `emb`, with the
/// representation. `None` if there is none (a vertex of degree above four).
pub fn min_bends_fixed_embedding(g: &Graph, emb: &PlanarEmbedding) -> Option<(usize, OrthoRep)> {
    let fs = faces_of(emb, g).ok()?;
    solve_fixed(g, emb, &fs)
}

fn solve_fixed(g: &Graph, emb: &PlanarEmbedding, fs: &FaceSet) -> Option<(usize, OrthoRep)> {
    let n = g.n();
    let nf = fs.len();
    let s = n + nf;
    let t = s + 1;
    let mut net = Ssp::new(n + nf + 2);
    // each angle starts at 90 degrees; extra units flow vertex → face
    let mut supply = vec![0i64; n + nf];
    let mut angle_arc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let k = emb.rotation[v].len() as i64;
        if k > 4 {
            return None;
        }
        supply[v] = 4 - k;
        for &e in &emb.rotation[v] {
            // angle after e lies in the face left of the dart entering v along e
            let din = if head(g, 2 * e) == v { 2 * e } else { 2 * e + 1 };
            let f = fs.face_of_dart[din];
            angle_arc[v].push(net.arc(v, n + f, 4 - k, 0));
        }
    }
    for f in 0..nf {
        let deg = fs.faces[f].darts.len() as i64;
        let target = if f == emb.external { -4 } else { 4 };
        // turn = Σ(2 − angle) + bends; with all angles at 1 the face holds deg
        supply[n + f] = -(deg - target);
    }
    let mut bend_arc: Vec<Option<(usize, usize)>> = vec![None; g.m()];
    for e in 0..g.m() {
        let f0 = fs.face_of_dart[2 * e];
        let f1 = fs.face_of_dart[2 * e + 1];
        if f0 != f1 {
            bend_arc[e] = Some((net.arc(n + f0, n + f1, INF, 1), net.arc(n + f1, n + f0, INF, 1)));
        }
    }
    let mut need = 0;
    for (x, &sp) in supply.iter().enumerate() {
        if sp > 0 {
            net.arc(s, x, sp, 0);
            need += sp;
        } else if sp < 0 {
            net.arc(x, t, -sp, 0);
        }
    }
    if supply.iter().sum::<i64>() != 0 {
        return None;
    }
    let cost = net.run(s, t, need)?;
    let angles: Vec<Vec<u8>> =
        (0..n).map(|v| angle_arc[v].iter().map(|&id| 1 + net.cap[id ^ 1] as u8).collect()).collect();
    let bends: Vec<String> = (0..g.m())
        .map(|e| match bend_arc[e] {
            Some((a, b)) => bend_string((net.cap[a ^ 1] - net.cap[b ^ 1]) as i32),
            None => String::new(),
        })
        .collect();
    let rep = OrthoRep { graph: g.clone(), embedding: emb.clone(), angles, bends };
    Some((cost as usize, rep))
}

/// All planar rotation systems of a connected graph with maximum degree
/// three (vertices of degree at most two have a single cyclic order).
pub fn enumerate_embeddings(g: &Graph) -> Vec<PlanarEmbedding> {
    let base: Vec<Vec<EdgeId>> = (0..g.n()).map(|v| g.incident(v).to_vec()).collect();
    let flex: Vec<VertexId> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << flex.len()) {
        let mut rot = base.clone();
        for (i, &v) in flex.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rot[v].swap(1, 2);
            }
        }
        let emb = PlanarEmbedding { rotation: rot, external: 0 };
        if faces_of(&emb, g).is_ok() {
            out.push(emb);
        }
    }
    out
}

/// Best over all embeddings and all external faces accepted by `allow`.
fn brute_with(g: &Graph, allow: impl Fn(&Graph, &FaceSet, usize) -> bool) -> Option<(usize, OrthoRep)> {
    let mut best: Option<(usize, OrthoRep)> = None;
    for emb in enumerate_embeddings(g) {
        let fs = faces_of(&emb, g).ok()?;
        for f in 0..fs.len() {
            if !allow(g, &fs, f) {
                continue;
            }
            let e = emb.with_external(f);
            if let Some((c, rep)) = solve_fixed(g, &e, &fs) {
                if best.as_ref().is_none_or(|(b, _)| c < *b) {
                    best = Some((c, rep));
                }
            }
        }
    }
    best
}

/// Minimum bends over all planar embeddings.
pub fn brute_min_bends(g: &Graph) -> Option<(usize, OrthoRep)> {
    brute_with(g, |_, _, _| true)
}

/// Minimum bends over embeddings whose external face contains edge `e`.
pub fn brute_min_bends_edge(g: &Graph, e: EdgeId) -> Option<(usize, OrthoRep)> {
    brute_with(g, |_, fs, f| fs.faces[f].darts.iter().any(|&d| dart_edge(d) == e))
}

/// Minimum bends over embeddings whose external face contains vertex `v`.
pub fn brute_min_bends_vertex(g: &Graph, v: VertexId) -> Option<(usize, OrthoRep)> {
    brute_with(g, |g, fs, f| fs.faces[f].darts.iter().any(|&d| head(g, d) == v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ortho::validate_rep;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn small_values() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (c, rep) = brute_min_bends(&k4).unwrap();
        assert_eq!(c, 4);
        assert_eq!(validate_rep(&rep), Ok(()));
        assert_eq!(brute_min_bends(&g(3, &[(0, 1), (1, 2), (2, 0)])).unwrap().0, 1);
        assert_eq!(brute_min_bends(&g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).unwrap().0, 0);
        let prism = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        let (c, rep) = brute_min_bends(&prism).unwrap();
        assert_eq!(c, 4);
        assert_eq!(validate_rep(&rep), Ok(()));
        let path = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(brute_min_bends(&path).unwrap().0, 0);
    }

    #[test]
    fn embedding_counts() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(enumerate_embeddings(&k4).len(), 2);
        let theta = g(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        assert_eq!(enumerate_embeddings(&theta).len(), 2);
    }
}
