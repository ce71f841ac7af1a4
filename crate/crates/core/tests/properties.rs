use bendmin::dp::{candidates_p, candidates_s, verify, Solver};
use bendmin::embedding::planar_embedding;
use bendmin::gen::{connected_planar_3graphs, spqr_example};
use bendmin::oracle::{brute_min_bends, brute_min_bends_edge};
use bendmin::spqr::build_spqr;
use bendmin::NodeKind;
use proptest::prelude::*;

#[test]
fn spqr_example_has_all_node_kinds() {
    let g = spqr_example();
    let t = build_spqr(&g, 0).unwrap();
    let has = |k: NodeKind| t.nodes.iter().any(|n| n.kind == k);
    assert!(has(NodeKind::S) && has(NodeKind::P) && has(NodeKind::R));
    assert!(t.check_3graph_properties().is_ok());
    let r = t.nodes.iter().find(|n| n.kind == NodeKind::R).unwrap();
    let (sub, _, edges) = t.pertinent_graph(&g, r.id).unwrap();
    assert_eq!(sub.m(), edges.len());
    assert!(edges.len() < g.m());
}

#[test]
fn spqr_example_matches_oracle_for_every_edge() {
    let g = spqr_example();
    let emb = planar_embedding(&g).unwrap();
    let solver = Solver::new(&g, &emb).unwrap();
    for e in 0..g.m() {
        let res = solver.ref_edge(e).unwrap();
        assert_eq!(res.bends, brute_min_bends_edge(&g, e).unwrap().0, "edge {e}");
        verify(&res).unwrap();
    }
    assert_eq!(solver.global().unwrap().bends, brute_min_bends(&g).unwrap().0);
    // the rigid core edge (2, 3) on the external face forces four bends
    assert_eq!(solver.ref_edge(g.find_edge(2, 3).unwrap()).unwrap().bends, 4);
}

#[test]
fn subdividing_never_adds_bends() {
    for n in 3..=6 {
        for g in connected_planar_3graphs(n) {
            let base = brute_min_bends(&g).map_or(0, |b| b.0);
            for e in 0..g.m() {
                let (h, _) = g.subdivide(e).unwrap();
                assert!(brute_min_bends(&h).unwrap().0 <= base, "{:?} edge {e}", g.edges());
            }
        }
    }
}

proptest! {
    #[test]
    fn s_tables_rise_by_one_above_the_free_range(
        n_q in 2usize..8,
        thick in prop::collection::vec((0i64..10, 0i64..10), 0..5),
    ) {
        let s = candidates_s(n_q, &thick);
        let free = (s.n_q + s.n_d) as i64 - 1;
        prop_assert_eq!(s.table[0], s.c0);
        prop_assert_eq!(s.table[1], s.c0);
        for k in 1..5 {
            let step = s.table[k] - s.table[k - 1];
            prop_assert_eq!(step, if k as i64 <= free { 0 } else { 1 });
        }
    }

    #[test]
    fn p_costs_combine_child_tables(
        a in (2usize..6, prop::collection::vec((0i64..6, 0i64..6), 0..3)),
        b in (2usize..6, prop::collection::vec((0i64..6, 0i64..6), 0..3)),
    ) {
        let t1 = candidates_s(a.0, &a.1).table;
        let t2 = candidates_s(b.0, &b.1).table;
        let p = candidates_p(&t1, &t2);
        prop_assert_eq!(p.x, t1[1] + t2[1]);
        prop_assert_eq!(p.d, (t1[0] + t2[2]).min(t1[2] + t2[0]));
        prop_assert!(p.d >= t1[0] + t2[0]);
    }
}
