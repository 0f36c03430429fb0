//! Graph-class recognition: chordality via maximum-cardinality search,
//! quasi-line and claw-free tests, clique number, and the chordal
//! consecutive-triple adjacency property.

use crate::graph::Graph;
use crate::{Error, Result};
use serde::Serialize;

/// Recognition results with checkable certificates.
#[derive(Clone, Debug, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub chordal: bool,
    /// Perfect elimination ordering when chordal.
    pub elimination_ordering: Option<Vec<usize>>,
    /// A chordless cycle of length >= 4 when not chordal.
    pub chordless_cycle: Option<Vec<usize>>,
    pub quasi_line: bool,
    /// Per-vertex two-clique covers of the neighborhoods when quasi-line.
    pub clique_covers: Option<Vec<(Vec<usize>, Vec<usize>)>>,
    /// A vertex whose neighborhood needs more than two cliques, otherwise.
    pub uncoverable_vertex: Option<usize>,
    pub claw_free: bool,
    /// (center, three pairwise non-adjacent neighbors) when a claw exists.
    pub claw: Option<(usize, [usize; 3])>,
    /// None for forests.
    pub girth: Option<usize>,
    pub clique_number: usize,
}

/// Maximum-cardinality search visit order (ties broken by smallest
/// identifier). The reverse of this order is a perfect elimination
/// ordering iff the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        visited[v] = true;
        order.push(v);
        for u in g.neighbors_iter(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Check the elimination property: each vertex's later neighbors form a
/// clique.
fn verify_peo(g: &Graph, order: &[usize]) -> std::result::Result<(), (usize, usize, usize)> {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = g.neighbors_iter(v).filter(|&u| pos[u] > i).collect();
        for (a_idx, &a) in later.iter().enumerate() {
            for &b in &later[a_idx + 1..] {
                if !g.has_edge(a, b) {
                    return Err((v, a, b));
                }
            }
        }
    }
    Ok(())
}

/// A verified perfect elimination ordering, or `None` iff not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    verify_peo(g, &order).ok().map(|_| order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// A chordless cycle of length >= 4, when one exists.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    if let Err((v, a, b)) = verify_peo(g, &order) {
        // Shortest a-b path avoiding N[v] other than a, b closes a
        // chordless cycle through v.
        if let Some(path) = shortest_path_avoiding(g, a, b, v) {
            let mut cycle = vec![v];
            cycle.extend(path);
            return Some(cycle);
        }
    }
    // Fallback: scan cycles directly.
    let mut found = None;
    for_each_cycle(g, &mut |cycle| {
        if found.is_none() && cycle.len() >= 4 && is_chordless(g, cycle) {
            found = Some(cycle.to_vec());
        }
    });
    found
}

fn is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if !consecutive && g.has_edge(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

fn shortest_path_avoiding(g: &Graph, a: usize, b: usize, v: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let forbidden: Vec<bool> = (0..n)
        .map(|u| u != a && u != b && (u == v || g.has_edge(u, v)))
        .collect();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[a] = true;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            let mut path = vec![b];
            let mut cur = b;
            while cur != a {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors_iter(u) {
            if !seen[w] && !forbidden[w] {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Visit every simple cycle exactly once, as a vertex sequence starting at
/// its smallest vertex with the second vertex smaller than the last.
pub fn for_each_cycle(g: &Graph, f: &mut dyn FnMut(&[usize])) {
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend_cycle(g, start, &mut path, &mut on_path, f);
        on_path[start] = false;
        path.pop();
    }
}

fn extend_cycle(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    f: &mut dyn FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && path[1] < last && g.has_edge(last, start) {
        f(path);
    }
    for next in g.neighbors_iter(last) {
        if next > start && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            extend_cycle(g, start, path, on_path, f);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// Clique number: from the elimination ordering on chordal graphs, exact
/// branch and bound otherwise (desk scale, n <= 64).
pub fn clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    if let Some(order) = perfect_elimination_ordering(g) {
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        return order
            .iter()
            .enumerate()
            .map(|(i, &v)| 1 + g.neighbors_iter(v).filter(|&u| pos[u] > i).count())
            .max()
            .unwrap();
    }
    assert!(n <= 64, "exact clique number limited to n <= 64");
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors_iter(v).fold(0u64, |acc, u| acc | 1 << u))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 1;
    branch_max_clique(&rows, all, 0, &mut best);
    best
}

/// Brute-force maximum clique over a candidate bitmask; greedy-coloring
/// bound prunes the expansion.
fn branch_max_clique(rows: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    // greedy coloring bound over the candidate set
    let mut uncolored = candidates;
    let mut bound = 0;
    while uncolored != 0 {
        bound += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(rows[v] | 1 << v);
            uncolored &= !(1u64 << v);
        }
    }
    if size + bound <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        branch_max_clique(rows, rest & rows[v], size + 1, best);
        if size + 1 > *best {
            *best = size + 1;
        }
    }
}

/// Partition N(v) into at most two cliques, via bipartiteness of the
/// complement of the induced neighborhood graph. Complement components
/// are processed in lowest-vertex order; the side containing the lowest
/// vertex of each component goes to the first clique.
pub fn two_clique_cover(g: &Graph, v: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let nbrs = g.neighbors(v)?;
    let m = nbrs.len();
    // complement adjacency among the neighbors
    let comp: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && !g.has_edge(nbrs[i], nbrs[j]))
                .collect()
        })
        .collect();
    let mut side = vec![None; m];
    for root in 0..m {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(0u8);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let s = side[i].unwrap();
            for &j in &comp[i] {
                match side[j] {
                    None => {
                        side[j] = Some(1 - s);
                        queue.push_back(j);
                    }
                    Some(t) if t == s => return Ok(None), // odd cycle in complement
                    _ => {}
                }
            }
        }
    }
    let pick = |want: u8| -> Vec<usize> {
        (0..m)
            .filter(|&i| side[i] == Some(want))
            .map(|i| nbrs[i])
            .collect()
    };
    let (a, b) = (pick(0), pick(1));
    debug_assert!(is_clique(g, &a) && is_clique(g, &b));
    Ok(Some((a, b)))
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_quasi_line(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| matches!(two_clique_cover(g, v), Ok(Some(_))))
}

/// An induced claw (center plus three pairwise non-adjacent neighbors).
pub fn claw_witness(g: &Graph) -> Option<(usize, [usize; 3])> {
    for v in 0..g.vertex_count() {
        let nbrs: Vec<usize> = g.neighbors_iter(v).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.has_edge(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in j + 1..nbrs.len() {
                    if !g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]) {
                        return Some((v, [nbrs[i], nbrs[j], nbrs[k]]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> bool {
    claw_witness(g).is_none()
}

/// Consecutive-triple adjacency on chordal graphs: given a cycle and three
/// consecutive vertices a, x, b where x has no other neighbor on the
/// cycle, report whether a and b are adjacent. On chordal inputs this is
/// always true; the operation exists so the claim can be property-tested.
pub fn check_chordal_triple(
    g: &Graph,
    cycle: &[usize],
    a: usize,
    x: usize,
    b: usize,
) -> Result<bool> {
    if !is_chordal(g) {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    let len = cycle.len();
    if len < 3 {
        return Err(Error::Precondition("cycle must have length >= 3".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for i in 0..len {
        if !seen.insert(cycle[i]) {
            return Err(Error::Precondition("cycle repeats a vertex".into()));
        }
        if !g.has_edge(cycle[i], cycle[(i + 1) % len]) {
            return Err(Error::Precondition(format!(
                "cycle edge ({},{}) missing",
                cycle[i],
                cycle[(i + 1) % len]
            )));
        }
    }
    let pos_x = cycle
        .iter()
        .position(|&v| v == x)
        .ok_or_else(|| Error::Precondition(format!("vertex {x} not on cycle")))?;
    let before = cycle[(pos_x + len - 1) % len];
    let after = cycle[(pos_x + 1) % len];
    if !((before == a && after == b) || (before == b && after == a)) {
        return Err(Error::Precondition(format!(
            "{a}, {x}, {b} are not consecutive on the cycle"
        )));
    }
    for &u in cycle {
        if u != a && u != b && u != x && g.has_edge(x, u) {
            return Err(Error::Precondition(format!(
                "vertex {x} has cycle neighbor {u} outside {{{a},{b}}}"
            )));
        }
    }
    Ok(g.has_edge(a, b))
}

pub fn classify(g: &Graph) -> ClassReport {
    let peo = perfect_elimination_ordering(g);
    let chordal = peo.is_some();
    let chordless_cycle = if chordal { None } else { find_chordless_cycle(g) };
    let mut covers = Vec::new();
    let mut uncoverable = None;
    for v in 0..g.vertex_count() {
        match two_clique_cover(g, v).unwrap() {
            Some(pair) => covers.push(pair),
            None => {
                uncoverable = Some(v);
                break;
            }
        }
    }
    let quasi_line = uncoverable.is_none();
    let claw = claw_witness(g);
    ClassReport {
        n: g.vertex_count(),
        chordal,
        elimination_ordering: peo,
        chordless_cycle,
        quasi_line,
        clique_covers: if quasi_line { Some(covers) } else { None },
        uncoverable_vertex: uncoverable,
        claw_free: claw.is_none(),
        claw,
        girth: g.girth(),
        clique_number: clique_number(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Graph;

    #[test]
    fn chordality() {
        assert!(perfect_elimination_ordering(&generators::cycle(4)).is_none());
        assert!(perfect_elimination_ordering(&generators::complete(4)).is_some());
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let peo = perfect_elimination_ordering(&tree).unwrap();
        assert!(verify_peo(&tree, &peo).is_ok());
        assert!(!is_chordal(&generators::cycle(5)));
        let mut k4_minus = generators::complete(4);
        k4_minus.remove_edge(0, 2);
        assert!(is_chordal(&k4_minus));
        let cert = find_chordless_cycle(&generators::cycle(6)).unwrap();
        assert!(cert.len() >= 4 && is_chordless(&generators::cycle(6), &cert));
    }

    #[test]
    fn chordal_oracle_small_cycles_have_chords() {
        // independent oracle: enumerate all cycles, check chord presence
        for g in generators::enumerate_labeled(5).unwrap() {
            let mut oracle_chordal = true;
            for_each_cycle(&g, &mut |cycle| {
                if cycle.len() >= 4 && is_chordless(&g, cycle) {
                    oracle_chordal = false;
                }
            });
            assert_eq!(is_chordal(&g), oracle_chordal, "disagree on {g:?}");
        }
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&generators::complete(5)), 5);
        assert_eq!(clique_number(&generators::cycle(5)), 2);
        assert_eq!(clique_number(&generators::petersen()), 2);
        let (g1, _) = generators::g1(3).unwrap();
        assert_eq!(clique_number(&g1), 3);
    }

    #[test]
    fn clique_number_matches_brute_force_on_chordal() {
        for seed in 0..30 {
            let g = generators::random_chordal(12, 3, seed).unwrap();
            let via_peo = clique_number(&g);
            // brute force over all subsets is too slow at n=12; compare
            // against branch and bound on the same graph with the PEO
            // route disabled by checking every width+1 subset signature
            let mut brute = 0;
            for mask in 0u32..1 << 12 {
                let vs: Vec<usize> = (0..12).filter(|&v| mask >> v & 1 == 1).collect();
                if vs.len() > brute && is_clique(&g, &vs) {
                    brute = vs.len();
                }
            }
            assert_eq!(via_peo, brute, "seed {seed}");
        }
    }

    #[test]
    fn covers() {
        let claw = generators::star(3);
        assert_eq!(two_clique_cover(&claw, 0).unwrap(), None);
        let c5 = generators::cycle(5);
        let (a, b) = two_clique_cover(&c5, 0).unwrap().unwrap();
        assert_eq!((a.len(), b.len()), (1, 1));
        let k4 = generators::complete(4);
        let (a, b) = two_clique_cover(&k4, 0).unwrap().unwrap();
        assert_eq!(a, vec![1, 2, 3]);
        assert!(b.is_empty());
        assert!(two_clique_cover(&k4, 9).is_err());
    }

    #[test]
    fn quasi_line_and_claws() {
        assert!(!is_quasi_line(&generators::star(3)));
        let (center, leaves) = claw_witness(&generators::star(3)).unwrap();
        assert_eq!(center, 0);
        assert_eq!(leaves, [1, 2, 3]);
        assert!(is_claw_free(&generators::cycle(6)));
        assert!(!is_claw_free(&generators::petersen()));
        // line graphs are claw-free hence quasi-line
        for g in generators::enumerate_labeled(4).unwrap() {
            if g.edge_count() == 0 {
                continue;
            }
            let lg = generators::line_graph(&g).unwrap();
            assert!(is_claw_free(&lg));
            assert!(is_quasi_line(&lg));
        }
    }

    #[test]
    fn quasi_line_implies_claw_free() {
        for g in generators::enumerate_labeled(5).unwrap() {
            if is_quasi_line(&g) {
                assert!(is_claw_free(&g), "quasi-line but has a claw: {g:?}");
            }
        }
    }

    #[test]
    fn wheel_5_is_claw_free_but_not_quasi_line() {
        let mut edges = generators::cycle(5).edges();
        edges.extend((0..5).map(|v| (v, 5)));
        let w5 = Graph::from_edges(6, &edges).unwrap();
        let hub = 5;
        assert!(is_claw_free(&w5));
        assert!(!is_quasi_line(&w5));
        assert_eq!(two_clique_cover(&w5, hub).unwrap(), None);
    }

    #[test]
    fn chordal_triples() {
        let k3 = generators::complete(3);
        assert_eq!(check_chordal_triple(&k3, &[0, 1, 2], 0, 1, 2), Ok(true));
        let mut k4_minus = generators::complete(4);
        k4_minus.remove_edge(0, 2);
        // x = 1 is adjacent to 3 which sits on the cycle outside {a,b}
        let err = check_chordal_triple(&k4_minus, &[0, 1, 2, 3], 0, 1, 2);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let c5 = generators::cycle(5);
        assert!(matches!(
            check_chordal_triple(&c5, &[0, 1, 2, 3, 4], 0, 1, 2),
            Err(Error::Precondition(_))
        ));
    }
}
