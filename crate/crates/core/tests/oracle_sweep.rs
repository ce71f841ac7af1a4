use bendmin::dp::{verify, Solver};
use bendmin::embedding::planar_embedding;
use bendmin::gen::connected_planar_3graphs;
use bendmin::oracle::{brute_min_bends, brute_min_bends_edge, brute_min_bends_vertex};
use bendmin::realize::round_trip;
use rayon::prelude::*;

#[test]
fn global_matches_oracle_up_to_eight_vertices() {
    let graphs: Vec<_> = (1..=8).flat_map(connected_planar_3graphs).collect();
    let failures: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let emb = planar_embedding(g).unwrap();
            let solver = Solver::new(g, &emb).unwrap();
            let res = match solver.global() {
                Ok(r) => r,
                Err(e) => return Some(format!("{:?}: {e}", g.edges())),
            };
            let want = brute_min_bends(g).map_or(0, |r| r.0);
            if res.bends != want {
                return Some(format!("{:?}: got {} want {want}", g.edges(), res.bends));
            }
            if let Err(e) = verify(&res) {
                return Some(format!("{:?}: {e}", g.edges()));
            }
            round_trip(&res.rep).err().map(|e| format!("{:?}: {e}", g.edges()))
        })
        .collect();
    assert!(failures.is_empty(), "{} failures, first: {:?}", failures.len(), &failures[..failures.len().min(5)]);
}

#[test]
fn reference_edge_and_vertex_match_oracle_up_to_six_vertices() {
    let graphs: Vec<_> = (2..=6).flat_map(connected_planar_3graphs).collect();
    for g in &graphs {
        let emb = planar_embedding(g).unwrap();
        let solver = Solver::new(g, &emb).unwrap();
        for e in 0..g.m() {
            let res = solver.ref_edge(e).unwrap();
            assert_eq!(res.bends, brute_min_bends_edge(g, e).unwrap().0, "edge {e} of {:?}", g.edges());
            verify(&res).unwrap();
        }
        for v in 0..g.n() {
            let res = solver.vertex(v).unwrap();
            assert_eq!(res.bends, brute_min_bends_vertex(g, v).unwrap().0, "vertex {v} of {:?}", g.edges());
        }
    }
}
