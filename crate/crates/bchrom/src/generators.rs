//! Instance generators: seeded random families, the two extremal
//! constructions G0 and G1, line graphs, and exhaustive labeled
//! enumeration at desk scale.
//!
//! All randomness comes from [`SplitMix64`], a 64-bit splitmix generator,
//! so identical `(params, seed)` always yield an identical graph across
//! platforms and implementations.

use crate::graph::Graph;
use crate::recognizers;
use crate::{Error, Result};

/// SplitMix64: state advances by the golden-ratio increment
/// 0x9E3779B97F4A7C15; output is the finalizer
/// `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
///  z *= 0x94D049BB133111EB; z ^= z >> 31` applied to the new state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`: top 53 bits scaled by 2^-53.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` by modulo reduction (documented as part of
    /// the reproducibility contract; bias is irrelevant at desk scale).
    pub fn next_below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        (self.next_u64() % bound as u64) as usize
    }

    fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i + 1);
            items.swap(i, j);
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i—i+5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// G(n, p): each pair is an edge independently with probability `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("edge probability {p} not in [0,1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random k-tree-style chordal graph: start from K_{width+1}, then attach
/// each new vertex to a uniformly chosen clique of size `width`.
/// Chordal by construction with clique number `width + 1`.
pub fn random_chordal(n: usize, width: usize, seed: u64) -> Result<Graph> {
    if width == 0 || width >= n {
        return Err(Error::BadParameter(format!(
            "k-tree width must satisfy 1 <= width < n, got width={width}, n={n}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut g = Graph::empty(n);
    let base: Vec<usize> = (0..=width).collect();
    for &u in &base {
        for &v in &base {
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    // every width-subset of the base clique is an attachment site
    let mut cliques: Vec<Vec<usize>> = (0..=width)
        .map(|skip| base.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    for v in width + 1..n {
        let site = cliques[rng.next_below(cliques.len())].clone();
        for &u in &site {
            g.add_edge(u, v);
        }
        for skip in 0..site.len() {
            let mut fresh: Vec<usize> =
                site.iter().copied().filter(|&u| u != site[skip]).collect();
            fresh.push(v);
            cliques.push(fresh);
        }
        cliques.push(site);
    }
    Ok(g)
}

/// Line graph: one vertex per edge of `g` (edges in lexicographic order),
/// adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Precondition("line graph of an edgeless graph".into()));
    }
    let mut lg = Graph::empty(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j);
            }
        }
    }
    Ok(lg)
}

/// Random graph of girth at least `g_min`: one shuffled pass over all
/// pairs, keeping an edge only if the endpoints are currently at distance
/// at least `g_min - 1` (so no shorter cycle closes). A rejected edge
/// stays rejectable, so one pass reaches saturation.
pub fn high_girth(n: usize, g_min: usize, seed: u64) -> Result<Graph> {
    if !(5..=7).contains(&g_min) {
        return Err(Error::BadParameter(format!(
            "supported girth targets are 5..=7, got {g_min}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    rng.shuffle(&mut pairs);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        match g.distance(u, v)? {
            Some(d) if d < g_min - 1 => {}
            _ => g.add_edge(u, v),
        }
    }
    Ok(g)
}

/// G0: a chordal graph `h` plus a universal apex vertex. The apex is the
/// new highest identifier.
pub fn g0(h: &Graph) -> Result<(Graph, usize)> {
    if !recognizers::is_chordal(h) {
        return Err(Error::Precondition("G0 base graph must be chordal".into()));
    }
    let n = h.vertex_count();
    let mut g = Graph::empty(n + 1);
    for (u, v) in h.edges() {
        g.add_edge(u, v);
    }
    for v in 0..n {
        g.add_edge(v, n);
    }
    Ok((g, n))
}

/// G1 for a given clique order `omega >= 3`: a path x_0..x_{p+1} with
/// p = 2*omega - 1, each path edge blown up into a fresh clique of order
/// `omega` sharing only its two path vertices. Extra clique vertices are
/// numbered after all path vertices, in clique order. Returns the graph
/// and the path (junction) vertices.
pub fn g1(omega: usize) -> Result<(Graph, Vec<usize>)> {
    if omega < 3 {
        return Err(Error::BadParameter(format!("G1 needs omega >= 3, got {omega}")));
    }
    let p = 2 * omega - 1;
    let path_len = p + 2;
    let cliques = p + 1;
    let extras_per_clique = omega - 2;
    let n = path_len + cliques * extras_per_clique;
    let mut g = Graph::empty(n);
    let mut next_extra = path_len;
    for i in 0..cliques {
        let mut members = vec![i, i + 1];
        for _ in 0..extras_per_clique {
            members.push(next_extra);
            next_extra += 1;
        }
        for a in 0..members.len() {
            for b in a + 1..members.len() {
                g.add_edge(members[a], members[b]);
            }
        }
    }
    Ok((g, (0..path_len).collect()))
}

/// All labeled graphs on `n` vertices, in edge-bitmask order. Isomorphs
/// are not deduplicated: quantification is over labeled graphs.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 6 {
        return Err(Error::SizeLimit(n, 6));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut g = Graph::empty(n);
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }))
}
