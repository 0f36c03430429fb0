//! Batch verification of the vertex-deletion inequalities over graph6
//! corpora, plus certificate checks for the constructive procedures.

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::io::{parse_graph6, write_graph6_string};
use crate::recognizers;
use crate::recolor;
use crate::solver;
use crate::{Error, Result};
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default exact-solver cap: larger graphs are skipped with a reason, never
/// approximated.
pub const DEFAULT_SOLVER_CAP: usize = 22;

/// Stable identifiers for the checked inequalities.
pub const INEQUALITIES: &[&str] = &[
    "general-lower",
    "rb-window",
    "quasi-line-upper",
    "quasi-line-lower",
    "girth5-upper",
    "girth5-lower",
    "chordal-lower",
    "chordal-upper-degree",
    "chordal-upper-omega",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct IneqCheck {
    pub inequality: &'static str,
    pub verdict: Verdict,
    /// Full counterexample on failure (graph6, x, both b values).
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexRecord {
    pub x: usize,
    pub degree: usize,
    pub b_deleted: usize,
    pub checks: Vec<IneqCheck>,
}

/// Per-graph record of every applicable inequality at every vertex.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub graph6: String,
    pub n: usize,
    pub connected: bool,
    pub chordal: bool,
    pub quasi_line: bool,
    pub girth: Option<usize>,
    pub girth_at_least_5: bool,
    pub girth_at_least_7: bool,
    pub b: usize,
    pub chi: usize,
    pub m: usize,
    pub omega: usize,
    pub vertices: Vec<VertexRecord>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructiveReport {
    pub graph6: String,
    pub n: usize,
    pub quasi_line: bool,
    pub cases_checked: usize,
    pub failures: Vec<String>,
    pub all_pass: bool,
}

fn check(
    inequality: &'static str,
    applicable: bool,
    holds: bool,
    detail: impl FnOnce() -> String,
) -> IneqCheck {
    let verdict = if !applicable {
        Verdict::NotApplicable
    } else if holds {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    IneqCheck {
        inequality,
        verdict,
        detail: (verdict == Verdict::Fail).then(detail),
    }
}

/// Evaluate every applicable deletion inequality at every vertex.
/// Square-root upper bounds are compared in integers:
/// (b(G-x) - b(G) - 1)^2 <= d(x) - 1 when the difference is positive.
pub fn check_bounds(g: &Graph, solver_cap: usize) -> Result<BoundsReport> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::GraphTooSmall(2));
    }
    if n > solver_cap {
        return Err(Error::SizeLimit(n, solver_cap));
    }
    let graph6 = write_graph6_string(g);
    let connected = g.is_connected();
    let chordal = recognizers::is_chordal(g);
    let quasi_line = recognizers::is_quasi_line(g);
    let girth = g.girth();
    // forests have no cycle at all, so every girth constraint holds
    let girth_ge = |bound: usize| girth.map_or(true, |c| c >= bound);
    let girth_at_least_5 = girth_ge(5);
    let girth_at_least_7 = girth_ge(7);
    let b = solver::b_chromatic(g)?;
    let chi = b.bounds_used.0;
    let m = b.bounds_used.1;
    let omega = recognizers::clique_number(g);
    let b = b.b as i64;

    let mut vertices = Vec::with_capacity(n);
    for x in 0..n {
        let degree = g.degree(x)?;
        let (h, _) = g.delete_vertex(x)?;
        let b2 = solver::b_chromatic(&h)?.b as i64;
        let ctx = || format!("graph6={graph6} x={x} b={b} b_deleted={b2}");
        let sq_upper = |param: usize| {
            let delta = b2 - b - 1;
            delta <= 0 || delta * delta <= param as i64 - 1
        };
        let checks = vec![
            check("general-lower", true, b2 >= b - degree as i64, ctx),
            check(
                "rb-window",
                connected && n >= 5,
                b - (n as i64 + 1) / 2 + 2 <= b2 && b2 <= b + n as i64 / 2 - 2,
                ctx,
            ),
            check("quasi-line-upper", quasi_line, b2 <= b + 2, ctx),
            check("quasi-line-lower", quasi_line, b2 >= b - 2, ctx),
            check("girth5-upper", girth_at_least_5, b2 <= b + 1, ctx),
            check("girth5-lower", girth_at_least_5, b2 >= b - 2, ctx),
            check("chordal-lower", chordal, b2 >= b - omega as i64, ctx),
            check("chordal-upper-degree", chordal, sq_upper(degree), ctx),
            check("chordal-upper-omega", chordal, sq_upper(omega), ctx),
        ];
        vertices.push(VertexRecord {
            x,
            degree,
            b_deleted: b2 as usize,
            checks,
        });
    }
    let all_pass = vertices
        .iter()
        .flat_map(|v| &v.checks)
        .all(|c| c.verdict != Verdict::Fail);
    Ok(BoundsReport {
        graph6,
        n,
        connected,
        chordal,
        quasi_line,
        girth,
        girth_at_least_5,
        girth_at_least_7,
        b: b as usize,
        chi,
        m,
        omega,
        vertices,
        all_pass,
    })
}

/// Run the constructive procedures on the solver witness (and, at n <= 6,
/// on every b-coloring) for every vertex deletion, verifying each
/// certificate.
pub fn check_constructive(g: &Graph, solver_cap: usize) -> Result<ConstructiveReport> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::GraphTooSmall(2));
    }
    if n > solver_cap {
        return Err(Error::SizeLimit(n, solver_cap));
    }
    let graph6 = write_graph6_string(g);
    let quasi_line = recognizers::is_quasi_line(g);
    let mut colorings: Vec<Coloring> = vec![solver::b_chromatic(g)?.witness];
    if n <= 6 {
        solver::for_each_b_coloring(g, &mut |c| colorings.push(c.clone()))?;
    }
    let mut cases_checked = 0;
    let mut failures = Vec::new();
    for c in &colorings {
        for x in 0..n {
            cases_checked += 1;
            let run = |res: Result<recolor::DeletionCertificate>| -> Option<String> {
                match res {
                    Ok(cert) => cert.verify(g).err().map(|e| {
                        format!("graph6={graph6} x={x} coloring={:?} invalid: {e}", c.as_slice())
                    }),
                    Err(e) => Some(format!(
                        "graph6={graph6} x={x} coloring={:?} failed: {e}",
                        c.as_slice()
                    )),
                }
            };
            if let Some(f) = run(recolor::recolor_general(g, c, x)) {
                failures.push(f);
            }
            if quasi_line {
                cases_checked += 1;
                if let Some(f) = run(recolor::recolor_quasi_line(g, c, x)) {
                    failures.push(f);
                }
            }
        }
    }
    let all_pass = failures.is_empty();
    Ok(ConstructiveReport {
        graph6,
        n,
        quasi_line,
        cases_checked,
        failures,
        all_pass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckSet {
    Bounds,
    Constructive,
    All,
}

impl std::str::FromStr for CheckSet {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "bounds" => Ok(CheckSet::Bounds),
            "constructive" => Ok(CheckSet::Constructive),
            "all" => Ok(CheckSet::All),
            other => Err(format!("unknown check set '{other}' (bounds|constructive|all)")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub checks: CheckSet,
    pub solver_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            checks: CheckSet::All,
            solver_cap: DEFAULT_SOLVER_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RecordBody {
    Report {
        #[serde(skip_serializing_if = "Option::is_none")]
        bounds: Option<BoundsReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        constructive: Option<ConstructiveReport>,
    },
    Skipped {
        reason: String,
    },
    ParseError {
        message: String,
    },
}

/// One output record per input line, in input order.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub index: usize,
    pub line: String,
    #[serde(flatten)]
    pub body: RecordBody,
}

impl SweepRecord {
    pub fn is_parse_error(&self) -> bool {
        matches!(self.body, RecordBody::ParseError { .. })
    }

    pub fn failed(&self) -> bool {
        match &self.body {
            RecordBody::Report {
                bounds,
                constructive,
            } => {
                bounds.as_ref().is_some_and(|b| !b.all_pass)
                    || constructive.as_ref().is_some_and(|c| !c.all_pass)
            }
            _ => false,
        }
    }
}

fn process_line(index: usize, line: &str, opts: &SweepOptions) -> SweepRecord {
    let body = match parse_graph6(line.as_bytes()) {
        Err(e) => RecordBody::ParseError {
            message: e.to_string(),
        },
        Ok(g) => {
            let bounds = match opts.checks {
                CheckSet::Bounds | CheckSet::All => Some(check_bounds(&g, opts.solver_cap)),
                CheckSet::Constructive => None,
            };
            let constructive = match opts.checks {
                CheckSet::Constructive | CheckSet::All => {
                    Some(check_constructive(&g, opts.solver_cap))
                }
                CheckSet::Bounds => None,
            };
            // a size-limit or too-small result on either check skips the graph
            let skip = [
                bounds.as_ref().and_then(|r| r.as_ref().err()),
                constructive.as_ref().and_then(|r| r.as_ref().err()),
            ]
            .into_iter()
            .flatten()
            .next()
            .map(|e| e.to_string());
            match skip {
                Some(reason) => RecordBody::Skipped { reason },
                None => RecordBody::Report {
                    bounds: bounds.map(|r| r.unwrap()),
                    constructive: constructive.map(|r| r.unwrap()),
                },
            }
        }
    };
    SweepRecord {
        index,
        line: line.to_string(),
        body,
    }
}

/// Sequential sweep over graph6 lines; output order equals input order.
pub fn sweep_sequential(lines: &[String], opts: &SweepOptions) -> Vec<SweepRecord> {
    lines
        .iter()
        .enumerate()
        .map(|(i, line)| process_line(i, line, opts))
        .collect()
}

/// Data-parallel sweep; the parallelism unit is the input graph and the
/// collected output preserves input order.
#[cfg(feature = "parallel")]
pub fn sweep_parallel(lines: &[String], opts: &SweepOptions) -> Vec<SweepRecord> {
    lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| process_line(i, line, opts))
        .collect()
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
pub fn sweep(lines: &[String], opts: &SweepOptions) -> Vec<SweepRecord> {
    #[cfg(feature = "parallel")]
    {
        sweep_parallel(lines, opts)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(lines, opts)
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// CSV header shared by all sweep rows.
pub const CSV_HEADER: &str = "index,graph6,row,vertex,inequality,verdict,n,b,chi,m,omega,girth,connected,chordal,quasi_line,d_x,b_deleted,detail";

/// One row per (graph, vertex, inequality), one summary row per graph,
/// plus error/skip rows. Column names are part of the contract.
pub fn write_csv<W: std::io::Write>(records: &[SweepRecord], out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for rec in records {
        match &rec.body {
            RecordBody::ParseError { message } => {
                writeln!(
                    out,
                    "{},{},error,,,,,,,,,,,,,,,{}",
                    rec.index,
                    csv_escape(&rec.line),
                    csv_escape(message)
                )?;
            }
            RecordBody::Skipped { reason } => {
                writeln!(
                    out,
                    "{},{},skipped,,,,,,,,,,,,,,,{}",
                    rec.index,
                    csv_escape(&rec.line),
                    csv_escape(reason)
                )?;
            }
            RecordBody::Report {
                bounds,
                constructive,
            } => {
                if let Some(b) = bounds {
                    let girth = b.girth.map_or(String::from("acyclic"), |c| c.to_string());
                    for v in &b.vertices {
                        for c in &v.checks {
                            let verdict = match c.verdict {
                                Verdict::Pass => "pass",
                                Verdict::Fail => "fail",
                                Verdict::NotApplicable => "n/a",
                            };
                            writeln!(
                                out,
                                "{},{},check,{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                                rec.index,
                                csv_escape(&b.graph6),
                                v.x,
                                c.inequality,
                                verdict,
                                b.n,
                                b.b,
                                b.chi,
                                b.m,
                                b.omega,
                                girth,
                                b.connected,
                                b.chordal,
                                b.quasi_line,
                                v.degree,
                                v.b_deleted,
                                csv_escape(c.detail.as_deref().unwrap_or("")),
                            )?;
                        }
                    }
                    writeln!(
                        out,
                        "{},{},summary,,,{},{},{},{},{},{},{},{},{},{},,,",
                        rec.index,
                        csv_escape(&b.graph6),
                        if b.all_pass { "pass" } else { "fail" },
                        b.n,
                        b.b,
                        b.chi,
                        b.m,
                        b.omega,
                        girth,
                        b.connected,
                        b.chordal,
                        b.quasi_line,
                    )?;
                }
                if let Some(c) = constructive {
                    writeln!(
                        out,
                        "{},{},constructive,,,{},{},,,,,,,,{},,,{}",
                        rec.index,
                        csv_escape(&c.graph6),
                        if c.all_pass { "pass" } else { "fail" },
                        c.n,
                        c.quasi_line,
                        csv_escape(&c.failures.join("; ")),
                    )?;
                }
            }
        }
    }
    Ok(())
}

pub fn write_json<W: std::io::Write>(records: &[SweepRecord], out: &mut W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn c5_bounds() {
        let report = check_bounds(&generators::cycle(5), DEFAULT_SOLVER_CAP).unwrap();
        assert_eq!(report.b, 3);
        assert!(report.girth_at_least_5);
        assert!(!report.chordal);
        for v in &report.vertices {
            assert_eq!(v.b_deleted, 2);
        }
        assert!(report.all_pass);
    }

    #[test]
    fn g0_apex_bounds() {
        let (g, apex) = generators::g0(&generators::complete(5)).unwrap();
        let report = check_bounds(&g, DEFAULT_SOLVER_CAP).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.vertices[apex].b_deleted, report.b - 1);
    }

    #[test]
    fn k2_only_general_bound_applies() {
        let report = check_bounds(&generators::complete(2), DEFAULT_SOLVER_CAP).unwrap();
        assert_eq!(report.b, 2);
        for v in &report.vertices {
            assert_eq!(v.b_deleted, 1);
            let rb = v.checks.iter().find(|c| c.inequality == "rb-window").unwrap();
            assert_eq!(rb.verdict, Verdict::NotApplicable);
            let gen = v
                .checks
                .iter()
                .find(|c| c.inequality == "general-lower")
                .unwrap();
            assert_eq!(gen.verdict, Verdict::Pass);
        }
    }

    #[test]
    fn constructive_on_g1() {
        let (g1, _) = generators::g1(3).unwrap();
        let report = check_constructive(&g1, DEFAULT_SOLVER_CAP).unwrap();
        assert!(report.all_pass, "failures: {:?}", report.failures);
        assert!(report.quasi_line);
    }

    #[test]
    fn sweep_is_ordered_and_strict_on_garbage() {
        let lines: Vec<String> = vec![
            crate::io::write_graph6_string(&generators::complete(4)),
            "!!!bad".into(),
            crate::io::write_graph6_string(&generators::cycle(5)),
        ];
        let records = sweep(&lines, &SweepOptions::default());
        assert_eq!(records.len(), 3);
        assert_eq!(records[0].index, 0);
        assert!(records[1].is_parse_error());
        assert!(!records[0].failed() && !records[2].failed());
        let seq = sweep_sequential(&lines, &SweepOptions::default());
        assert_eq!(
            serde_json::to_string(&records).unwrap(),
            serde_json::to_string(&seq).unwrap()
        );
    }

    #[test]
    fn empty_sweep() {
        let records = sweep(&[], &SweepOptions::default());
        assert!(records.is_empty());
        let mut csv = Vec::new();
        write_csv(&records, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap().lines().count(), 1);
    }

    #[test]
    fn oversized_graphs_are_skipped_with_reason() {
        let g = generators::gnp(30, 0.5, 1).unwrap();
        let lines = vec![crate::io::write_graph6_string(&g)];
        let records = sweep(&lines, &SweepOptions::default());
        assert!(matches!(&records[0].body, RecordBody::Skipped { reason } if reason.contains("size limit")));
        assert!(!records[0].failed());
    }
}
