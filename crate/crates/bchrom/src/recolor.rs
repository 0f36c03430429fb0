//! Constructive recoloring procedures for vertex deletion: the general
//! lower bound b(G-x) >= b(G) - d(x) and the quasi-line lower bound
//! b(G-x) >= b(G) - 2, each certified by a replayable trace.

use crate::coloring::{self, Coloring, RecolorTrace, StepReason};
use crate::graph::Graph;
use crate::io::write_graph6_string;
use crate::recognizers;
use crate::{Error, Result};
use serde::Serialize;

/// Which procedure produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Procedure {
    General,
    QuasiLine,
}

/// Certificate that deleting `x` keeps a b-coloring with at least
/// `before.k - bound` colors. The trace applies to `before` restricted to
/// the relabeled vertices of G - x.
#[derive(Clone, Debug, Serialize)]
pub struct DeletionCertificate {
    pub procedure: Procedure,
    pub x: usize,
    pub before: Coloring,
    pub after: Coloring,
    pub trace: RecolorTrace,
    pub colors_lost: usize,
    /// d(x) for the general procedure, 2 for the quasi-line one.
    pub bound: usize,
}

impl DeletionCertificate {
    /// Re-check everything the certificate claims against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        if !self.before.is_b_coloring(g) {
            return Err(Error::Precondition("before is not a b-coloring of G".into()));
        }
        let (h, map) = g.delete_vertex(self.x)?;
        let restricted = restrict(&self.before, g, &map);
        let replayed = self.trace.replay_raw(&restricted)?;
        if replayed != self.after.as_slice() {
            return Err(Error::Precondition("trace replay does not yield after".into()));
        }
        if !self.after.is_b_coloring(&h) {
            return Err(Error::NotBColoring(0));
        }
        let lost = self.before.num_colors() - self.after.num_colors();
        if lost != self.colors_lost {
            return Err(Error::Precondition(format!(
                "colors_lost says {}, palettes differ by {lost}",
                self.colors_lost
            )));
        }
        if lost > self.bound {
            return Err(Error::BoundViolation(format!(
                "lost {lost} colors, bound {}",
                self.bound
            )));
        }
        Ok(())
    }
}

/// The coloring of G - x inherited from a coloring of G, in new ids.
/// The palette may be sparse when x was a singleton class.
fn restrict(c: &Coloring, g: &Graph, map: &crate::graph::VertexMap) -> Vec<usize> {
    let mut out = vec![0; g.vertex_count() - 1];
    for v in 0..g.vertex_count() {
        if let Some(new) = map.get(v) {
            out[new] = c.color_of(v);
        }
    }
    out
}

/// State shared by both procedures: a raw assignment over G - x whose
/// palette may be sparse, plus the trace being built.
struct Work<'a> {
    h: &'a Graph,
    colors: Vec<usize>,
    k: usize,
    trace: RecolorTrace,
}

impl Work<'_> {
    fn class_nonempty(&self, c: usize) -> bool {
        self.colors.iter().any(|&x| x == c)
    }

    fn nonempty_colors(&self) -> Vec<usize> {
        (0..self.k).filter(|&c| self.class_nonempty(c)).collect()
    }

    /// True iff some vertex of color `s` sees every other nonempty color.
    fn color_dominating(&self, s: usize, nonempty: &[usize]) -> bool {
        (0..self.colors.len()).any(|v| self.colors[v] == s && self.vertex_dominates(v, nonempty))
    }

    fn vertex_dominates(&self, v: usize, nonempty: &[usize]) -> bool {
        let mut seen = vec![false; self.k];
        for u in self.h.neighbors_iter(v) {
            seen[self.colors[u]] = true;
        }
        nonempty
            .iter()
            .all(|&c| c == self.colors[v] || seen[c])
    }

    /// Smallest nonempty color with no dominating vertex.
    fn first_non_dominating(&self) -> Option<usize> {
        let nonempty = self.nonempty_colors();
        nonempty
            .iter()
            .copied()
            .find(|&s| !self.color_dominating(s, &nonempty))
    }

    fn eliminate(&mut self, s: usize) -> Result<()> {
        coloring::eliminate_color_raw(self.h, &mut self.colors, self.k, s, &mut self.trace)
    }

    /// Recolor `v` to `target` if that stays proper; reports whether the
    /// promotion happened.
    fn try_promote(&mut self, v: usize, target: usize) -> bool {
        if self.h.neighbors_iter(v).any(|u| self.colors[u] == target) {
            return false;
        }
        let old = self.colors[v];
        self.trace.push(v, old, target, StepReason::PromoteDominating);
        self.colors[v] = target;
        true
    }

    fn finish(mut self) -> Result<(Coloring, RecolorTrace)> {
        let after = coloring::renormalize(self.h, &mut self.colors, &mut self.trace)?;
        Ok((after, self.trace))
    }
}

fn counterexample(g: &Graph, c: &Coloring, x: usize, what: &str) -> Error {
    Error::BoundViolation(format!(
        "{what}: graph6={} coloring={} x={x}",
        write_graph6_string(g),
        serde_json::to_string(c.as_slice()).unwrap(),
    ))
}

/// General procedure: eliminate the deleted vertex's color if it lost all
/// domination, otherwise promote one former dominating neighbor of x per
/// lost color to color i and eliminate that color, iterating to a
/// fixpoint. Loses at most d(x) colors.
pub fn recolor_general(g: &Graph, c: &Coloring, x: usize) -> Result<DeletionCertificate> {
    let d = g.degree(x)?;
    run_procedure(g, c, x, Procedure::General, d)
}

/// Quasi-line procedure: N(x) is covered by two cliques, so each lost
/// color had at most two former dominating vertices, all in N(x); at most
/// two colors go away.
pub fn recolor_quasi_line(g: &Graph, c: &Coloring, x: usize) -> Result<DeletionCertificate> {
    if recognizers::two_clique_cover(g, x)?.is_none() || !recognizers::is_quasi_line(g) {
        return Err(Error::NotQuasiLine(x));
    }
    run_procedure(g, c, x, Procedure::QuasiLine, 2)
}

fn run_procedure(
    g: &Graph,
    c: &Coloring,
    x: usize,
    procedure: Procedure,
    bound: usize,
) -> Result<DeletionCertificate> {
    if !c.is_b_coloring(g) {
        return Err(Error::Precondition("input is not a b-coloring".into()));
    }
    let i = c.color_of(x);
    let k = c.num_colors();
    let (h, map) = g.delete_vertex(x)?;

    // former dominating vertices per color, in new ids, neighbors of x only
    let mut former: Vec<Vec<usize>> = vec![Vec::new(); k];
    for v in g.neighbors_iter(x) {
        if c.is_color_dominating(g, v).unwrap() {
            former[c.color_of(v)].push(map.get(v).unwrap());
        }
    }

    let mut work = Work {
        h: &h,
        colors: restrict(c, g, &map),
        k,
        trace: RecolorTrace::default(),
    };

    let mut fuel = (k + 1) * (g.vertex_count() + 1);
    while let Some(s) = work.first_non_dominating() {
        if fuel == 0 {
            return Err(counterexample(g, c, x, "recoloring did not reach a fixpoint"));
        }
        fuel -= 1;
        if s == i {
            work.eliminate(i)?;
            continue;
        }
        // promote former dominating vertices of s (all of them sat in
        // N(x)), provided color i is still alive to receive them
        let promotable: Vec<usize> = former[s]
            .iter()
            .copied()
            .filter(|&y| work.colors[y] == s)
            .collect();
        if work.class_nonempty(i) {
            match procedure {
                // one neighbor of x per lost color
                Procedure::General => {
                    for &y in &promotable {
                        if work.try_promote(y, i) {
                            break;
                        }
                    }
                }
                // both clique representatives move to i
                Procedure::QuasiLine => {
                    for &w in &promotable {
                        work.try_promote(w, i);
                    }
                }
            }
        }
        // a promotion can hand s a dominating vertex; only eliminate if
        // the class is still live and still undominated
        let nonempty = work.nonempty_colors();
        if nonempty.contains(&s) && !work.color_dominating(s, &nonempty) {
            work.eliminate(s)?;
        }
    }

    let (after, trace) = work.finish()?;
    debug_assert!(after.is_b_coloring(&h));
    let colors_lost = k - after.num_colors();
    if colors_lost > bound {
        return Err(counterexample(
            g,
            c,
            x,
            &format!("procedure lost {colors_lost} colors, bound {bound}"),
        ));
    }
    Ok(DeletionCertificate {
        procedure,
        x,
        before: c.clone(),
        after,
        trace,
        colors_lost,
        bound,
    })
}
