//! One test per acceptance criterion; each prints a single pass/fail line.

use bchrom::graph::Graph;
use bchrom::io;
use bchrom::recognizers;
use bchrom::recolor;
use bchrom::solver;
use bchrom::generators::{self, SplitMix64};
use rayon::prelude::*;

fn report(id: usize, name: &str, failures: usize, checked: usize) {
    let verdict = if failures == 0 { "PASS" } else { "FAIL" };
    println!("acceptance {id:2} {name}: {verdict} ({checked} checks, {failures} failures)");
    assert_eq!(failures, 0, "criterion {id} ({name}) had {failures} failures");
}

fn connected_labeled(n: usize) -> Vec<Graph> {
    generators::enumerate_labeled(n)
        .unwrap()
        .filter(|g| g.is_connected())
        .collect()
}

/// All labeled graphs on 7 vertices as edge bitmasks over the 21 pairs.
fn labeled_7(mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..7usize {
        for v in (u + 1)..7 {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(7, &edges).unwrap()
}

#[test]
fn criterion_01_solver_oracle_agreement() {
    let mut checked = 0;
    let mut failures = 0;
    for n in 2..=6 {
        for g in connected_labeled(n) {
            checked += 1;
            if solver::b_chromatic(&g).unwrap().b != solver::brute_force_b_chromatic(&g).unwrap()
            {
                failures += 1;
            }
        }
    }
    for seed in 0..1000u64 {
        let g = generators::gnp(8, 0.4, seed).unwrap();
        checked += 1;
        if solver::b_chromatic(&g).unwrap().b != solver::brute_force_b_chromatic(&g).unwrap() {
            failures += 1;
        }
    }
    report(1, "solver-oracle agreement", failures, checked);
}

#[test]
fn criterion_02_sandwich_invariant() {
    let mut checked = 0;
    let mut failures = 0;
    for n in 2..=6 {
        for g in connected_labeled(n) {
            let res = solver::b_chromatic(&g).unwrap();
            let (chi, m) = res.bounds_used;
            checked += 1;
            if !(chi <= res.b && res.b <= m) {
                failures += 1;
            }
        }
    }
    for seed in 0..1000u64 {
        let g = generators::gnp(8, 0.4, seed).unwrap();
        let res = solver::b_chromatic(&g).unwrap();
        let (chi, m) = res.bounds_used;
        checked += 1;
        if !(chi <= res.b && res.b <= m) {
            failures += 1;
        }
    }
    report(2, "sandwich chi <= b <= m", failures, checked);
}

#[test]
fn criterion_03_general_lower_bound_and_certificates() {
    let mut checked = 0;
    let mut failures = 0;
    for n in 2..=6 {
        for g in connected_labeled(n) {
            let b = solver::b_chromatic(&g).unwrap().b as i64;
            let mut colorings = vec![solver::b_chromatic(&g).unwrap().witness];
            if n <= 5 {
                colorings.clear();
                solver::for_each_b_coloring(&g, &mut |c| colorings.push(c.clone())).unwrap();
            }
            for x in 0..n {
                let d = g.degree(x).unwrap() as i64;
                let (h, _) = g.delete_vertex(x).unwrap();
                let b2 = solver::b_chromatic(&h).unwrap().b as i64;
                checked += 1;
                if b2 < b - d {
                    failures += 1;
                }
                for c in &colorings {
                    checked += 1;
                    let ok = recolor::recolor_general(&g, c, x)
                        .and_then(|cert| cert.verify(&g))
                        .is_ok();
                    if !ok {
                        failures += 1;
                    }
                }
            }
        }
    }
    report(3, "general lower bound + certificates", failures, checked);
}

/// Connected graphs with at most 5 edges (so at most 6 vertices), by labeled
/// enumeration; their line graphs cover the quasi-line corpus.
fn line_graph_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for g in connected_labeled(n) {
            if g.edge_count() <= 5 {
                out.push(generators::line_graph(&g).unwrap());
            }
        }
    }
    out
}

#[test]
fn criterion_04_quasi_line_bounds() {
    let mut corpus = line_graph_corpus();
    corpus.push(generators::g1(3).unwrap().0);
    let mut checked = 0;
    let mut failures = 0;
    for g in &corpus {
        assert!(recognizers::is_quasi_line(g));
        let n = g.vertex_count();
        if n < 2 {
            continue;
        }
        let res = solver::b_chromatic(g).unwrap();
        let b = res.b as i64;
        for x in 0..n {
            let (h, _) = g.delete_vertex(x).unwrap();
            let b2 = solver::b_chromatic(&h).unwrap().b as i64;
            checked += 1;
            if !(b - 2 <= b2 && b2 <= b + 2) {
                failures += 1;
            }
            checked += 1;
            let ok = recolor::recolor_quasi_line(g, &res.witness, x)
                .and_then(|cert| cert.verify(g))
                .is_ok();
            if !ok {
                failures += 1;
            }
        }
    }
    report(4, "quasi-line window + certificates", failures, checked);
}

#[test]
fn criterion_05_chordal_bounds() {
    let results: Vec<(usize, usize)> = (0..200u64)
        .into_par_iter()
        .map(|seed| {
            let n = 6 + (seed % 7) as usize;
            let width = 2 + (seed % 3) as usize;
            let g = generators::random_chordal(n, width, seed).unwrap();
            assert!(recognizers::is_chordal(&g));
            let b = solver::b_chromatic(&g).unwrap().b as i64;
            let omega = recognizers::clique_number(&g) as i64;
            let mut checked = 0;
            let mut failures = 0;
            for x in 0..n {
                let (h, _) = g.delete_vertex(x).unwrap();
                let b2 = solver::b_chromatic(&h).unwrap().b as i64;
                checked += 1;
                let delta = b2 - b - 1;
                let upper = delta <= 0 || delta * delta <= omega - 1;
                if b2 < b - omega || !upper {
                    failures += 1;
                }
            }
            (checked, failures)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    let failures = results.iter().map(|r| r.1).sum();
    report(5, "chordal lower + sqrt(omega) upper", failures, checked);
}

#[test]
fn criterion_06_girth5_bounds() {
    let mut corpus = vec![generators::petersen()];
    for seed in 0..100u64 {
        let n = 10 + (seed % 5) as usize;
        corpus.push(generators::high_girth(n, 5, seed).unwrap());
    }
    let mut checked = 0;
    let mut failures = 0;
    for g in &corpus {
        assert!(g.girth().map_or(true, |c| c >= 5));
        let b = solver::b_chromatic(g).unwrap().b as i64;
        for x in 0..g.vertex_count() {
            let (h, _) = g.delete_vertex(x).unwrap();
            let b2 = solver::b_chromatic(&h).unwrap().b as i64;
            checked += 1;
            if !(b - 2 <= b2 && b2 <= b + 1) {
                failures += 1;
            }
        }
    }
    report(6, "girth-5 window", failures, checked);
}

#[test]
fn criterion_07_extremal_equalities() {
    let mut checked = 0;
    let mut failures = 0;

    let (g1, _) = generators::g1(3).unwrap();
    checked += 1;
    if solver::b_chromatic(&g1).unwrap().b != 5 {
        failures += 1;
    }
    checked += 1;
    let drop_exists = (0..g1.vertex_count()).any(|x| {
        let (h, _) = g1.delete_vertex(x).unwrap();
        solver::b_chromatic(&h).unwrap().b == 4
    });
    if !drop_exists {
        failures += 1;
    }

    let (g0, apex) = generators::g0(&generators::complete(5)).unwrap();
    let b0 = solver::b_chromatic(&g0).unwrap().b;
    let (h, _) = g0.delete_vertex(apex).unwrap();
    checked += 1;
    if solver::b_chromatic(&h).unwrap().b != b0 - 1 {
        failures += 1;
    }

    report(7, "extremal equalities (G1, G0 apex)", failures, checked);
}

#[test]
fn criterion_08_m_degree_facts() {
    let total_n7 = 1u32 << 21;
    let (checked7, failures7) = (0..total_n7)
        .into_par_iter()
        .map(|mask| {
            let g = labeled_7(mask);
            let m = solver::m_degree(&g).unwrap();
            let mut failures = 0;
            for x in 0..7 {
                let (h, _) = g.delete_vertex(x).unwrap();
                if solver::m_degree(&h).unwrap() + 1 < m {
                    failures += 1;
                }
            }
            (7usize, failures)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let mut checked = checked7;
    let mut failures = failures7;
    for n in 2..=6 {
        for g in generators::enumerate_labeled(n).unwrap() {
            let m = solver::m_degree(&g).unwrap();
            for x in 0..n {
                let (h, _) = g.delete_vertex(x).unwrap();
                checked += 1;
                if solver::m_degree(&h).unwrap() + 1 < m {
                    failures += 1;
                }
            }
        }
    }
    for seed in 0..50u64 {
        let n = 10 + (seed % 5) as usize;
        let g = generators::high_girth(n, 7, seed).unwrap();
        assert!(g.girth().map_or(true, |c| c >= 7));
        let res = solver::b_chromatic(&g).unwrap();
        checked += 1;
        if res.b + 1 < res.bounds_used.1 {
            failures += 1;
        }
    }
    report(8, "m(G-x) >= m(G)-1 and girth-7 b >= m-1", failures, checked);
}

#[test]
fn criterion_09_raj_balakrishnan_window() {
    let mut checked = 0;
    let mut failures = 0;
    for n in 5..=6usize {
        for g in connected_labeled(n) {
            let b = solver::b_chromatic(&g).unwrap().b as i64;
            let lo = b - ((n as i64 + 1) / 2 - 2);
            let hi = b + (n as i64 / 2 - 2);
            for x in 0..n {
                let (h, _) = g.delete_vertex(x).unwrap();
                let b2 = solver::b_chromatic(&h).unwrap().b as i64;
                checked += 1;
                if !(lo <= b2 && b2 <= hi) {
                    failures += 1;
                }
            }
        }
    }
    report(9, "Raj-Balakrishnan window", failures, checked);
}

#[test]
fn criterion_10_chordal_triple_adjacency() {
    let total = 1u32 << 21;
    let (checked, failures) = (0..total)
        .into_par_iter()
        .map(|mask| {
            let g = labeled_7(mask);
            if !recognizers::is_chordal(&g) {
                return (0usize, 0usize);
            }
            let mut checked = 0;
            let mut failures = 0;
            recognizers::for_each_cycle(&g, &mut |cycle| {
                let len = cycle.len();
                for i in 0..len {
                    let x = cycle[i];
                    let a = cycle[(i + len - 1) % len];
                    let b = cycle[(i + 1) % len];
                    let qualifying = cycle
                        .iter()
                        .all(|&u| u == a || u == b || u == x || !g.has_edge(x, u));
                    if !qualifying {
                        continue;
                    }
                    checked += 1;
                    match recognizers::check_chordal_triple(&g, cycle, a, x, b) {
                        Ok(true) => {}
                        _ => failures += 1,
                    }
                }
            });
            (checked, failures)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    report(10, "chordal triple adjacency (exhaustive n<=7)", failures, checked);
}

#[test]
fn criterion_11_format_round_trips_and_fuzz() {
    let mut checked = 0;
    let mut failures = 0;
    for n in 1..=6 {
        for g in generators::enumerate_labeled(n).unwrap() {
            checked += 1;
            let g6 = io::write_graph6(&g);
            let dimacs = io::write_dimacs_col(&g);
            let edges = io::write_edge_list(&g);
            let ok = io::parse_graph6(&g6).map(|h| h == g).unwrap_or(false)
                && io::parse_dimacs_col(&dimacs).map(|h| h == g).unwrap_or(false)
                && io::parse_edge_list(&edges).map(|h| h == g).unwrap_or(false);
            if !ok {
                failures += 1;
            }
        }
    }
    let mut rng = SplitMix64::new(0xACCE97);
    for _ in 0..100_000 {
        let len = rng.next_below(40);
        let bytes: Vec<u8> = (0..len).map(|_| (rng.next_u64() & 0xFF) as u8).collect();
        checked += 1;
        // structured error or valid graph; a panic fails the test outright
        let _ = io::parse_graph6(&bytes);
        if let Ok(text) = std::str::from_utf8(&bytes) {
            let _ = io::parse_dimacs_col(text);
            let _ = io::parse_edge_list(text);
        }
    }
    report(11, "format round-trips + parser fuzz", failures, checked);
}
