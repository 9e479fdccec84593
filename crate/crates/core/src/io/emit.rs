//! Deterministic serialisation of results, point sets and decompositions.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nondominance::{Point, PointSet};
use crate::ordinal::{CategorySpace, CountingVector, OrdinalVector};
use crate::rational::{format_rational, Rational};
use crate::scalarization::{Decomposition, WeightCell};
use crate::solvers::{OutcomeRecord, ProblemKind, SolveResult, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    PlotData,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "plotdata" => Ok(Self::PlotData),
            other => Err(Error::parse(0, format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Text => "text",
            Self::Json => "json",
            Self::PlotData => "plotdata",
        })
    }
}

pub(crate) fn rational_tuple(values: &[Rational]) -> String {
    let inner: Vec<String> = values.iter().map(format_rational).collect();
    format!("({})", inner.join(","))
}

fn row(values: impl IntoIterator<Item = String>) -> String {
    values.into_iter().collect::<Vec<_>>().join(" ")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

pub fn emit_result(res: &SolveResult, format: Format) -> String {
    match format {
        Format::Text => result_text(res),
        Format::Json => json(res),
        Format::PlotData => result_plotdata(res),
    }
}

pub fn parse_result_json(text: &str) -> Result<SolveResult> {
    serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
}

/// Counting, tail and sorted-category images of one objective, e.g.
/// `c=(1,0,1) ctilde=(2,1,1) o=(eta1,eta3)`.
pub fn triple_fields(suffix: &str, c: &CountingVector, space: &CategorySpace) -> String {
    let t = crate::ordinal::tail_transform(c);
    format!(
        "c{suffix}={} ctilde{suffix}={} o{suffix}={}",
        c,
        t,
        OrdinalVector::from_counts(c).display(space)
    )
}

fn result_text(res: &SolveResult) -> String {
    if res.status == Status::Unreachable || res.outcomes.is_empty() {
        return "UNREACHABLE\n".to_string();
    }
    let mut out = String::new();
    for record in &res.outcomes {
        for solution in &record.solutions {
            out.push_str(&solution_line(res, record, solution));
            out.push('\n');
        }
    }
    out
}

fn solution_line(res: &SolveResult, record: &OutcomeRecord, solution: &[u64]) -> String {
    let mut fields = Vec::new();
    if !record.weights.is_empty() {
        fields.push(format!("w={}", rational_tuple(&record.weights)));
    }
    let r = record.counts.len();
    for (l, (c, space)) in record.counts.iter().zip(&res.spaces).enumerate() {
        let suffix = if r == 1 { String::new() } else { (l + 1).to_string() };
        if res.problem == ProblemKind::Knapsack {
            fields.push(format!(
                "c{suffix}={} chead{suffix}={} o{suffix}={}",
                c,
                rational_tuple(&record.value),
                OrdinalVector::from_counts(c).display(space)
            ));
        } else {
            fields.push(triple_fields(&suffix, c, space));
        }
    }
    if let Some(cw) = &record.weighted_counts {
        fields.push(format!("cw={} ctildew={}", rational_tuple(cw), rational_tuple(&record.value)));
    }
    let (key, prefix) = if res.problem == ProblemKind::Knapsack { ("items", "i") } else { ("path", "e") };
    let ids: Vec<String> = solution.iter().map(|id| format!("{prefix}{id}")).collect();
    fields.push(format!("{key}={}", ids.join(",")));
    fields.join(" ")
}

fn result_plotdata(res: &SolveResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# value");
    for record in &res.outcomes {
        let _ = writeln!(out, "{}", row(record.value.iter().map(format_rational)));
    }
    let _ = writeln!(out, "# counts");
    for record in &res.outcomes {
        let _ = writeln!(out, "{}", row(record.counts.iter().flat_map(|c| c.as_slice().to_vec()).map(|x| x.to_string())));
    }
    let _ = writeln!(out, "# tails");
    for record in &res.outcomes {
        let _ = writeln!(out, "{}", row(record.tails.iter().flat_map(|t| t.as_slice().to_vec()).map(|x| x.to_string())));
    }
    out
}

#[derive(Serialize)]
struct JsonPoint<'a> {
    id: usize,
    #[serde(with = "crate::rational::serde_rational::vec")]
    coords: &'a [Rational],
}

pub fn emit_points(points: &PointSet<Rational>, format: Format) -> String {
    match format {
        Format::Text => points
            .points()
            .iter()
            .map(|p| format!("id={} y={}\n", p.id, rational_tuple(&p.coords)))
            .collect(),
        Format::Json => {
            let rows: Vec<JsonPoint<'_>> = points.points().iter().map(json_point).collect();
            json(&rows)
        }
        Format::PlotData => points
            .points()
            .iter()
            .map(|p| format!("{}\n", row(p.coords.iter().map(format_rational))))
            .collect(),
    }
}

fn json_point(p: &Point<Rational>) -> JsonPoint<'_> {
    JsonPoint { id: p.id, coords: &p.coords }
}

pub fn emit_decomposition(d: &Decomposition<Rational>, format: Format) -> String {
    match format {
        Format::Json => {
            let strings = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
            let view = Decomposition {
                k: d.k,
                cells: d
                    .cells
                    .iter()
                    .map(|c| WeightCell {
                        value: strings(&c.value),
                        ids: c.ids.clone(),
                        halfspaces: c.halfspaces.clone(),
                        vertices: c.vertices.clone(),
                        mu_vertices: c.mu_vertices.clone(),
                    })
                    .collect(),
                unsupported: d.unsupported.iter().map(|y| strings(y)).collect(),
            };
            json(&view)
        }
        Format::Text => {
            let mut out = String::new();
            for cell in &d.cells {
                let ids: Vec<String> = cell.ids.iter().map(ToString::to_string).collect();
                let _ = write!(out, "cell ids={} y={}", ids.join(","), rational_tuple(&cell.value));
                match (&cell.vertices, &cell.mu_vertices) {
                    (Some(vs), Some(mus)) => {
                        let vs: Vec<String> = vs.iter().map(|v| rational_tuple(v)).collect();
                        let mus: Vec<String> = mus.iter().map(|v| rational_tuple(v)).collect();
                        let _ = write!(out, " lambda={} mu={}", vs.join(";"), mus.join(";"));
                    }
                    _ => {
                        let _ = write!(out, " halfspaces={}", cell.halfspaces.len());
                    }
                }
                out.push('\n');
            }
            for y in &d.unsupported {
                let _ = writeln!(out, "unsupported y={}", rational_tuple(y));
            }
            out
        }
        Format::PlotData => {
            let mut out = String::new();
            for cell in &d.cells {
                let _ = writeln!(out, "# cell y={}", rational_tuple(&cell.value));
                for (a, b) in cell.planar_vertices().unwrap_or_default() {
                    let _ = writeln!(out, "{} {}", format_rational(&a), format_rational(&b));
                }
            }
            out
        }
    }
}
