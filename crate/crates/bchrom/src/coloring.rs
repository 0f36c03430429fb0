//! Proper colorings, b-colorings, color-dominating vertices, missing
//! colors, and the color-elimination primitive.

use crate::graph::Graph;
use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Total vertex coloring with a dense palette `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

/// Why a trace step recolored its vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepReason {
    /// Vertex of a vanishing class moved to one of its missing colors.
    EliminateMissing,
    /// Former dominating vertex promoted to the deleted vertex's color.
    PromoteDominating,
    /// Palette renaming after an elimination (order-preserving shift).
    Exchange,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub vertex: usize,
    pub old_color: usize,
    pub new_color: usize,
    pub reason: StepReason,
}

/// Ordered recoloring steps certifying a constructive procedure.
/// Replaying the steps from the initial coloring reproduces the final one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecolorTrace {
    pub steps: Vec<TraceStep>,
}

impl RecolorTrace {
    pub fn push(&mut self, vertex: usize, old_color: usize, new_color: usize, reason: StepReason) {
        self.steps.push(TraceStep {
            vertex,
            old_color,
            new_color,
            reason,
        });
    }

    /// Apply the steps to a raw assignment (which may have a sparse
    /// palette mid-procedure), checking each old color matches.
    pub fn replay_raw(&self, initial: &[usize]) -> Result<Vec<usize>> {
        let mut colors = initial.to_vec();
        for step in &self.steps {
            if step.vertex >= colors.len() {
                return Err(Error::VertexOutOfRange(step.vertex, colors.len()));
            }
            if colors[step.vertex] != step.old_color {
                return Err(Error::Precondition(format!(
                    "trace step expects vertex {} to have color {}, found {}",
                    step.vertex, step.old_color, colors[step.vertex]
                )));
            }
            colors[step.vertex] = step.new_color;
        }
        Ok(colors)
    }

    /// Apply the steps to `initial`, checking each old color matches.
    pub fn replay(&self, initial: &Coloring) -> Result<Coloring> {
        Coloring::from_assignment(self.replay_raw(&initial.colors)?)
    }
}

impl Coloring {
    /// Build from a per-vertex assignment. The colors used must be exactly
    /// `0..max+1` (dense palette).
    pub fn from_assignment(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut seen = vec![false; k];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(gap) = seen.iter().position(|s| !s) {
            return Err(Error::SparsePalette(gap));
        }
        Ok(Coloring { colors, k })
    }

    /// Each vertex its own color.
    pub fn identity(n: usize) -> Self {
        Coloring {
            colors: (0..n).collect(),
            k: n,
        }
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    fn check_total(&self, g: &Graph) -> Result<()> {
        if self.colors.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                got: self.colors.len(),
                want: g.vertex_count(),
            })
        }
    }

    pub fn color_class(&self, i: usize) -> Result<Vec<usize>> {
        if i >= self.k {
            return Err(Error::ColorOutOfRange(i, self.k));
        }
        Ok((0..self.colors.len())
            .filter(|&v| self.colors[v] == i)
            .collect())
    }

    /// First monochromatic edge, if any.
    fn monochromatic_edge(&self, g: &Graph) -> Option<(usize, usize)> {
        for (u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Some((u, v));
            }
        }
        None
    }

    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        self.check_total(g)?;
        Ok(self.monochromatic_edge(g).is_none())
    }

    fn require_proper(&self, g: &Graph) -> Result<()> {
        self.check_total(g)?;
        match self.monochromatic_edge(g) {
            Some((u, v)) => Err(Error::NotProper(u, v)),
            None => Ok(()),
        }
    }

    /// Colors (other than v's own) seen in N(v), as a bitmask-style vec.
    fn neighbor_color_flags(&self, g: &Graph, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.k];
        for u in g.neighbors_iter(v) {
            seen[self.colors[u]] = true;
        }
        seen
    }

    /// True iff every color other than v's own appears in N(v).
    pub fn is_color_dominating(&self, g: &Graph, v: usize) -> Result<bool> {
        self.require_proper(g)?;
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange(v, g.vertex_count()));
        }
        let seen = self.neighbor_color_flags(g, v);
        Ok((0..self.k).all(|c| c == self.colors[v] || seen[c]))
    }

    /// Colors other than v's own absent from N(v).
    pub fn missing_colors(&self, g: &Graph, v: usize) -> Result<Vec<usize>> {
        self.require_proper(g)?;
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange(v, g.vertex_count()));
        }
        let seen = self.neighbor_color_flags(g, v);
        Ok((0..self.k)
            .filter(|&c| c != self.colors[v] && !seen[c])
            .collect())
    }

    /// Some dominating vertex of class `i`, smallest identifier first.
    pub(crate) fn dominating_vertex_of_class(&self, g: &Graph, i: usize) -> Option<usize> {
        (0..self.colors.len()).find(|&v| {
            self.colors[v] == i && {
                let seen = self.neighbor_color_flags(g, v);
                (0..self.k).all(|c| c == i || seen[c])
            }
        })
    }

    /// True iff proper and every color class has a dominating vertex.
    /// Improper or non-total input yields `false`, not an error: the
    /// predicate is used as a search filter.
    pub fn is_b_coloring(&self, g: &Graph) -> bool {
        if self.colors.len() != g.vertex_count() || self.monochromatic_edge(g).is_some() {
            return false;
        }
        (0..self.k).all(|i| self.dominating_vertex_of_class(g, i).is_some())
    }

    /// Eliminate color `i`: move every vertex of class `i` to its smallest
    /// missing color, then renormalize the palette onto `0..k-1`. Fails
    /// with the witness vertex if some class member has no missing color.
    pub fn eliminate_color(&self, g: &Graph, i: usize) -> Result<(Coloring, RecolorTrace)> {
        self.require_proper(g)?;
        if i >= self.k {
            return Err(Error::ColorOutOfRange(i, self.k));
        }
        let mut colors = self.colors.clone();
        let mut trace = RecolorTrace::default();
        eliminate_color_raw(g, &mut colors, self.k, i, &mut trace)?;
        let final_colors = renormalize(g, &mut colors, &mut trace)?;
        Ok((final_colors, trace))
    }
}

/// Non-renormalizing elimination over a raw assignment (palette may be
/// sparse afterwards). Class `i` is independent because the coloring is
/// proper, so its members' neighborhoods are unaffected by each other.
pub(crate) fn eliminate_color_raw(
    g: &Graph,
    colors: &mut [usize],
    k: usize,
    i: usize,
    trace: &mut RecolorTrace,
) -> Result<()> {
    let class: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == i).collect();
    for &v in &class {
        let mut seen = vec![false; k];
        for u in g.neighbors_iter(v) {
            seen[colors[u]] = true;
        }
        let target = (0..k).find(|&c| c != i && !seen[c] && class_nonempty(colors, c, i));
        match target {
            Some(c) => {
                trace.push(v, i, c, StepReason::EliminateMissing);
                colors[v] = c;
            }
            None => return Err(Error::NoMissingColor(v, i)),
        }
    }
    Ok(())
}

// A missing color only counts if its class survives elsewhere; moving a
// vertex into a color nobody else holds would resurrect a class we are
// not tracking. With a dense input palette this only excludes i itself.
fn class_nonempty(colors: &[usize], c: usize, being_eliminated: usize) -> bool {
    c != being_eliminated && colors.iter().any(|&x| x == c)
}

/// Map surviving colors order-preservingly onto a dense palette, recording
/// each actual change as an `exchange` step.
pub(crate) fn renormalize(
    g: &Graph,
    colors: &mut [usize],
    trace: &mut RecolorTrace,
) -> Result<Coloring> {
    let max = colors.iter().copied().max().map_or(0, |m| m + 1);
    let mut used = vec![false; max];
    for &c in colors.iter() {
        used[c] = true;
    }
    let mut rename = vec![usize::MAX; max];
    let mut next = 0;
    for (c, &u) in used.iter().enumerate() {
        if u {
            rename[c] = next;
            next += 1;
        }
    }
    for v in 0..colors.len() {
        let new = rename[colors[v]];
        if new != colors[v] {
            trace.push(v, colors[v], new, StepReason::Exchange);
            colors[v] = new;
        }
    }
    let c = Coloring::from_assignment(colors.to_vec())?;
    debug_assert!(c.is_proper(g).unwrap_or(false) || g.vertex_count() == 0);
    Ok(c)
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let colors = Vec::<usize>::deserialize(deserializer)?;
        Coloring::from_assignment(colors).map_err(D::Error::custom)
    }
}
