//! Exact chromatic number, m-degree, and b-chromatic number, plus an
//! independent brute-force b-chromatic oracle for cross-validation.

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::recognizers;
use crate::{Error, Result};
use serde::Serialize;

/// Exact b-chromatic result with its certifying witness.
#[derive(Clone, Debug, Serialize)]
pub struct BResult {
    pub b: usize,
    pub witness: Coloring,
    /// (chromatic number, m-degree): the sandwich b sits in.
    pub bounds_used: (usize, usize),
}

/// Largest m such that the graph has m vertices of degree at least m-1.
pub fn m_degree(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::GraphTooSmall(1));
    }
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v).unwrap()).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok((1..=n)
        .filter(|&rank| degrees[rank - 1] + 1 >= rank)
        .max()
        .unwrap())
}

fn greedy_coloring_count(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for v in 0..n {
        let mut taken = vec![false; used + 1];
        for u in g.neighbors_iter(v) {
            if colors[u] != usize::MAX {
                taken[colors[u]] = true;
            }
        }
        let c = (0..=used).find(|&c| !taken[c]).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v).unwrap()));
    let mut colors = vec![usize::MAX; n];
    fn go(g: &Graph, order: &[usize], colors: &mut [usize], idx: usize, max_used: usize, k: usize) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let mut taken = vec![false; k];
        for u in g.neighbors_iter(v) {
            if colors[u] != usize::MAX {
                taken[colors[u]] = true;
            }
        }
        // a fresh color class is interchangeable with any other fresh one
        let limit = k.min(max_used + 1);
        for c in 0..limit {
            if !taken[c] {
                colors[v] = c;
                if go(g, order, colors, idx + 1, max_used.max(c + 1), k) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
    go(g, &order, &mut colors, 0, 0, k)
}

/// Exact chromatic number via backtracking between a clique lower bound
/// and a greedy upper bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::GraphTooSmall(1));
    }
    let lb = recognizers::clique_number(g).max(1);
    let ub = greedy_coloring_count(g);
    for k in lb..ub {
        if k_colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(ub)
}

struct BSearch<'a> {
    g: &'a Graph,
    k: usize,
    dominators: Vec<usize>, // dominators[j] is the designated vertex of color j
    colors: Vec<usize>,     // usize::MAX = uncolored
    order: Vec<usize>,
}

impl BSearch<'_> {
    /// Necessary condition: every designated dominator can still see all
    /// other colors, through colored neighbors or uncolored ones that can
    /// legally take the missing color.
    fn domination_feasible(&self) -> bool {
        for (j, &d) in self.dominators.iter().enumerate() {
            let mut seen = vec![false; self.k];
            let mut uncolored = Vec::new();
            for u in self.g.neighbors_iter(d) {
                if self.colors[u] == usize::MAX {
                    uncolored.push(u);
                } else {
                    seen[self.colors[u]] = true;
                }
            }
            let mut missing = 0;
            for c in 0..self.k {
                if c == j || seen[c] {
                    continue;
                }
                missing += 1;
                let supplier = uncolored.iter().any(|&u| {
                    self.g
                        .neighbors_iter(u)
                        .all(|w| self.colors[w] != c)
                });
                if !supplier {
                    return false;
                }
            }
            if missing > uncolored.len() {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return (0..self.k).all(|j| {
                let d = self.dominators[j];
                let mut seen = vec![false; self.k];
                for u in self.g.neighbors_iter(d) {
                    seen[self.colors[u]] = true;
                }
                (0..self.k).all(|c| c == j || seen[c])
            });
        }
        let v = self.order[idx];
        let mut taken = vec![false; self.k];
        for u in self.g.neighbors_iter(v) {
            if self.colors[u] != usize::MAX {
                taken[self.colors[u]] = true;
            }
        }
        for c in 0..self.k {
            if taken[c] {
                continue;
            }
            self.colors[v] = c;
            if self.domination_feasible() && self.solve(idx + 1) {
                return true;
            }
            self.colors[v] = usize::MAX;
        }
        false
    }
}

/// A verified b-coloring with exactly `k` colors, or `None` if no such
/// coloring exists.
///
/// Search: enumerate k-subsets of `{v | degree(v) >= k-1}` as designated
/// dominating vertices (lexicographically; the identifier-sorted subset
/// takes colors 0..k in order, which breaks color-renaming symmetry),
/// then backtrack over the remaining vertices with domination-feasibility
/// pruning.
pub fn find_b_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return None;
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v).unwrap() + 1 >= k).collect();
    if candidates.len() < k {
        return None;
    }
    let mut subset: Vec<usize> = (0..k).collect(); // indices into candidates
    loop {
        let dominators: Vec<usize> = subset.iter().map(|&i| candidates[i]).collect();
        let mut colors = vec![usize::MAX; n];
        for (j, &d) in dominators.iter().enumerate() {
            colors[d] = j;
        }
        // color dominator neighborhoods first so pruning bites early
        let mut order: Vec<usize> = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .collect();
        let near: std::collections::HashSet<usize> = dominators
            .iter()
            .flat_map(|&d| g.neighbors_iter(d))
            .collect();
        order.sort_by_key(|&v| (!near.contains(&v), v));
        let mut search = BSearch {
            g,
            k,
            dominators,
            colors,
            order,
        };
        if search.domination_feasible() && search.solve(0) {
            let c = Coloring::from_assignment(search.colors).expect("search output is total");
            debug_assert!(c.is_b_coloring(g));
            return Some(c);
        }
        // next k-subset in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if subset[i] != i + candidates.len() - k {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Exact b-chromatic number: scan k downward from the m-degree; the first
/// success is b. The scan always terminates at the chromatic number, where
/// a b-coloring is guaranteed.
pub fn b_chromatic(g: &Graph) -> Result<BResult> {
    let m = m_degree(g)?;
    let chi = chromatic_number(g)?;
    for k in (chi..=m).rev() {
        if let Some(witness) = find_b_coloring(g, k) {
            return Ok(BResult {
                b: k,
                witness,
                bounds_used: (chi, m),
            });
        }
    }
    Err(Error::BoundViolation(format!(
        "no b-coloring found between chi={chi} and m={m}"
    )))
}

/// Enumerate every proper coloring up to color renaming (restricted growth
/// strings) and hand each b-coloring to `f`. Enforced to n <= 9.
pub fn for_each_b_coloring(g: &Graph, f: &mut dyn FnMut(&Coloring)) -> Result<()> {
    let n = g.vertex_count();
    if n > 9 {
        return Err(Error::SizeLimit(n, 9));
    }
    if n == 0 {
        return Ok(());
    }
    let mut rgs = vec![0usize; n];
    fn go(g: &Graph, rgs: &mut Vec<usize>, idx: usize, max: usize, f: &mut dyn FnMut(&Coloring)) {
        if idx == g.vertex_count() {
            let c = Coloring::from_assignment(rgs.clone()).unwrap();
            if c.is_b_coloring(g) {
                f(&c);
            }
            return;
        }
        for color in 0..=max + 1 {
            // properness check against earlier neighbors
            if g.neighbors_iter(idx).any(|u| u < idx && rgs[u] == color) {
                continue;
            }
            rgs[idx] = color;
            go(g, rgs, idx + 1, max.max(color), f);
        }
    }
    // vertex 0 fixed to color 0 by the restricted growth property
    go(g, &mut rgs, 1, 0, f);
    Ok(())
}

/// Independent oracle: maximum color count over all b-colorings found by
/// exhaustive restricted-growth enumeration.
pub fn brute_force_b_chromatic(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for_each_b_coloring(g, &mut |c| best = best.max(c.num_colors()))?;
    Ok(best)
}
