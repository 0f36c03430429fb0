use bchrom::coloring::Coloring;
use bchrom::graph::Graph;
use bchrom::io;
use bchrom::{generators, recognizers, solver};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| {
        generators::gnp(n, p, seed).unwrap()
    })
}

proptest! {
    #[test]
    fn distance_is_symmetric(g in arb_graph(12), u in 0usize..12, v in 0usize..12) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assert_eq!(g.distance(u, v).unwrap(), g.distance(v, u).unwrap());
        prop_assert_eq!(g.distance(u, u).unwrap(), Some(0));
    }

    #[test]
    fn second_neighborhood_disjoint_from_closed_neighborhood(
        g in arb_graph(12), v in 0usize..12
    ) {
        let v = v % g.vertex_count();
        let second = g.second_neighborhood(v).unwrap();
        prop_assert!(!second.contains(&v));
        for u in g.neighbors(v).unwrap() {
            prop_assert!(!second.contains(&u));
        }
        for &u in &second {
            prop_assert_eq!(g.distance(v, u).unwrap(), Some(2));
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let bytes = io::write_graph6(&g);
        prop_assert_eq!(io::parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(20)) {
        let text = io::write_dimacs_col(&g);
        prop_assert_eq!(io::parse_dimacs_col(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        let text = io::write_edge_list(&g);
        prop_assert_eq!(io::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn parsers_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..80)) {
        let _ = io::parse_graph6(&bytes);
        if let Ok(text) = std::str::from_utf8(&bytes) {
            let _ = io::parse_dimacs_col(text);
            let _ = io::parse_edge_list(text);
        }
    }

    #[test]
    fn delete_then_count(g in arb_graph(10), x in 0usize..10) {
        let x = x % g.vertex_count();
        let (h, map) = g.delete_vertex(x).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
        prop_assert_eq!(h.edge_count(), g.edge_count() - g.degree(x).unwrap());
        prop_assert_eq!(map.get(x), None);
    }

    #[test]
    fn sandwich_on_random_graphs(g in arb_graph(9)) {
        let res = solver::b_chromatic(&g).unwrap();
        let (chi, m) = res.bounds_used;
        prop_assert!(chi <= res.b && res.b <= m);
        prop_assert!(res.witness.is_b_coloring(&g));
        prop_assert_eq!(res.witness.num_colors(), res.b);
    }

    // the converse fails: the 5-wheel is claw-free but its hub's
    // neighborhood (a 5-cycle) needs three cliques
    #[test]
    fn quasi_line_implies_claw_free(g in arb_graph(9)) {
        if recognizers::is_quasi_line(&g) {
            prop_assert!(recognizers::is_claw_free(&g));
        }
    }

    #[test]
    fn eliminate_drops_exactly_one_color(g in arb_graph(8), seed in any::<u64>()) {
        let res = solver::b_chromatic(&g).unwrap();
        let c = res.witness;
        if c.num_colors() < 2 {
            return Ok(());
        }
        // pick any class whose members all have a missing color
        let target = (seed as usize) % c.num_colors();
        match c.eliminate_color(&g, target) {
            Ok((after, trace)) => {
                prop_assert!(after.is_proper(&g).unwrap());
                prop_assert_eq!(after.num_colors(), c.num_colors() - 1);
                prop_assert_eq!(trace.replay(&c).unwrap(), after);
            }
            Err(bchrom::Error::NoMissingColor(_, _)) => {}
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        }
    }

    #[test]
    fn coloring_json_round_trip(
        raw in proptest::collection::vec(0usize..4, 1..10)
    ) {
        // densify the palette so from_assignment accepts it
        let mut seen = Vec::new();
        let dense: Vec<usize> = raw
            .iter()
            .map(|&c| {
                if let Some(i) = seen.iter().position(|&s| s == c) {
                    i
                } else {
                    seen.push(c);
                    seen.len() - 1
                }
            })
            .collect();
        let c = Coloring::from_assignment(dense).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: Coloring = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, c);
    }
}
