//! Test and benchmark inputs. Named graphs plus the exhaustive corpus of small
//! connected planar 3-graphs. Random planar cubic graphs for scaling runs.

use crate::embedding::{planar_embedding, PlanarEmbedding};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generator emits valid graphs")
}

pub fn k4() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e)
}

/// Path on `n ≥ 1` vertices.
pub fn path(n: usize) -> Graph {
    let e: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

/// The 3-dimensional hypercube.
pub fn cube() -> Graph {
    build(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)])
}

/// Triangular prism.
pub fn prism() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

/// Three internally disjoint paths between vertices 0 and 1 with the given
/// numbers of inner vertices (at most one of them zero).
pub fn theta(a: usize, b: usize, c: usize) -> Graph {
    let mut edges = Vec::new();
    let mut n = 2;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    build(n, &edges)
}

/// Two triangles joined by a bridge.
pub fn bridged_triangles() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
}

/// The complete bipartite graph K3,3 (not planar).
pub fn k33() -> Graph {
    build(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
}

/// Stand-in for the introductory example: a biconnected plane 3-graph with
/// four degree-3 vertices whose given embedding needs two bends although
/// another embedding of the same graph needs none. It is the only such graph
/// on at most eight vertices.
pub fn intro_example() -> (Graph, PlanarEmbedding) {
    let g = build(8, &[(0, 1), (2, 4), (3, 4), (1, 5), (3, 5), (0, 6), (2, 6), (4, 7), (5, 7), (6, 7)]);
    for emb in crate::oracle::enumerate_embeddings(&g) {
        let faces = crate::embedding::trace_faces(&emb, &g).len();
        for f in 0..faces {
            let e = emb.with_external(f);
            if crate::oracle::min_bends_fixed_embedding(&g, &e).is_some_and(|(c, _)| c == 2) {
                return (g, e);
            }
        }
    }
    unreachable!("the example has an embedding with two bends")
}

/// Stand-in for the running example with S-, P- and R-nodes: K4 whose edge
/// (0, 1) is replaced by a series containing a parallel pair of paths.
pub fn spqr_example() -> Graph {
    build(8, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 7), (4, 6), (6, 7), (7, 1)])
}

/// Canonical code of a graph on at most 11 vertices given by neighbor bit
/// masks: the lexicographically smallest upper-triangle bit string over all
/// vertex orders compatible with a degree refinement.
fn canonical(n: usize, adj: &[u16]) -> u64 {
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let inv: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // position p may take any vertex whose invariant equals that of order[p]
    let slot: Vec<&(u32, Vec<u32>)> = order.iter().map(|&v| &inv[v]).collect();
    struct S<'a> {
        n: usize,
        adj: &'a [u16],
        inv: &'a [(u32, Vec<u32>)],
        slot: Vec<&'a (u32, Vec<u32>)>,
        placed: Vec<usize>,
        used: u16,
        best: Option<u64>,
    }
    fn rec(s: &mut S, code: u64) {
        let p = s.placed.len();
        if p == s.n {
            if s.best.is_none_or(|b| code < b) {
                s.best = Some(code);
            }
            return;
        }
        let total = s.n * (s.n - 1) / 2;
        let bits = p * (p + 1) / 2;
        for v in 0..s.n {
            if s.used >> v & 1 == 1 || &s.inv[v] != s.slot[p] {
                continue;
            }
            let mut c = code;
            for &w in &s.placed {
                c = c << 1 | (s.adj[v] >> w & 1) as u64;
            }
            // prune when the prefix already exceeds the best code
            if s.best.is_some_and(|b| c > b >> (total - bits)) {
                continue;
            }
            s.placed.push(v);
            s.used |= 1 << v;
            rec(s, c);
            s.used &= !(1 << v);
            s.placed.pop();
        }
    }
    let mut s = S { n, adj, inv: &inv, slot, placed: Vec::new(), used: 0, best: None };
    rec(&mut s, 0);
    s.best.expect("at least one order")
}

fn decode(n: usize, code: u64) -> Vec<(usize, usize)> {
    let total = n * (n - 1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for p in 1..n {
        for i in 0..p {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, p));
            }
            k += 1;
        }
    }
    edges
}

/// All connected simple planar graphs with maximum degree three on exactly
/// `n` vertices (`1 ≤ n ≤ 10`), one per isomorphism class.
pub fn connected_planar_3graphs(n: usize) -> Vec<Graph> {
    assert!((1..=10).contains(&n), "corpus supports 1..=10 vertices");
    let mut level: HashSet<u64> = HashSet::from([canonical(n, &vec![0; n])]);
    let mut all: Vec<u64> = level.iter().copied().collect();
    while !level.is_empty() {
        let mut next = HashSet::new();
        for &code in &level {
            let edges = decode(n, code);
            let mut adj = vec![0u16; n];
            for &(a, b) in &edges {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            for a in 0..n {
                for b in a + 1..n {
                    if adj[a] >> b & 1 == 1 || adj[a].count_ones() >= 3 || adj[b].count_ones() >= 3 {
                        continue;
                    }
                    let mut ad = adj.clone();
                    ad[a] |= 1 << b;
                    ad[b] |= 1 << a;
                    next.insert(canonical(n, &ad));
                }
            }
        }
        all.extend(next.iter().copied());
        level = next;
    }
    all.sort_unstable();
    all.into_iter()
        .map(|c| build(n, &decode(n, c)))
        .filter(|g| g.is_connected() && planar_embedding(g).is_ok())
        .collect()
}

/// Random planar cubic graph on `n` vertices (`n ≥ 4`, even) with a planar
/// embedding: starting from K4, repeatedly join the midpoints of two edges of
/// a random face.
pub fn random_cubic_planar(n: usize, seed: u64) -> (Graph, PlanarEmbedding) {
    assert!(n >= 4 && n.is_multiple_of(2), "cubic graphs need an even order of at least 4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = k4();
    let bemb = planar_embedding(&base).expect("K4 is planar");
    let mut rot: Vec<Vec<usize>> =
        (0..4).map(|v| bemb.rotation[v].iter().map(|&e| base.other(e, v)).collect()).collect();
    let cw_next = |rot: &Vec<Vec<usize>>, v: usize, u: usize| -> usize {
        let r = &rot[v];
        let i = r.iter().position(|&x| x == u).expect("neighbor");
        r[(i + 1) % r.len()]
    };
    let replace = |rot: &mut Vec<Vec<usize>>, v: usize, old: usize, new: usize| {
        let i = rot[v].iter().position(|&x| x == old).expect("neighbor");
        rot[v][i] = new;
    };
    while rot.len() < n {
        let a0 = rng.random_range(0..rot.len());
        let b0 = rot[a0][rng.random_range(0..3)];
        let mut face = vec![(a0, b0)];
        loop {
            let (u, v) = *face.last().expect("nonempty");
            let w = cw_next(&rot, v, u);
            if (v, w) == (a0, b0) {
                break;
            }
            face.push((v, w));
        }
        let i = rng.random_range(0..face.len());
        let mut j = rng.random_range(0..face.len() - 1);
        if j >= i {
            j += 1;
        }
        let ((a, b), (c, d)) = (face[i], face[j]);
        let x = rot.len();
        let y = x + 1;
        replace(&mut rot, a, b, x);
        replace(&mut rot, b, a, x);
        rot.push(vec![a, y, b]);
        replace(&mut rot, c, d, y);
        replace(&mut rot, d, c, y);
        rot.push(vec![c, x, d]);
    }
    let mut edges = Vec::new();
    for (v, r) in rot.iter().enumerate() {
        for &w in r {
            if v < w {
                edges.push((v, w));
            }
        }
    }
    let g = build(n, &edges);
    let erot =
        rot.iter().enumerate().map(|(v, r)| r.iter().map(|&w| g.find_edge(v, w).expect("edge")).collect()).collect();
    let emb = PlanarEmbedding::new(&g, erot, 0).expect("construction keeps planarity");
    (g, emb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts() {
        // connected graphs with maximum degree three; all are planar up to
        // six vertices except K3,3
        let counts: Vec<usize> = (1..=6).map(|n| connected_planar_3graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 10, 28]);
    }

    #[test]
    fn random_cubic_is_cubic_and_planar() {
        let (g, emb) = random_cubic_planar(40, 7);
        assert!((0..g.n()).all(|v| g.degree(v) == 3));
        assert!(crate::embedding::faces_of(&emb, &g).is_ok());
        assert_eq!(random_cubic_planar(40, 7).0, g);
    }

    #[test]
    fn intro_gap() {
        let (g, emb) = intro_example();
        assert_eq!(crate::oracle::min_bends_fixed_embedding(&g, &emb).unwrap().0, 2);
        assert_eq!(crate::oracle::brute_min_bends(&g).unwrap().0, 0);
    }

    #[test]
    fn named_shapes() {
        assert_eq!(theta(1, 1, 1).n(), 5);
        assert_eq!(theta(0, 2, 3).m(), 8);
        assert!(planar_embedding(&k33()).is_err());
    }
}
