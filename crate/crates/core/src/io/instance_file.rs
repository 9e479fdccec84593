//! Line-oriented instance files.
//!
//! ```text
//! GRAPH <nodes> <edges>
//! OBJECTIVES real=<p> ordinal=<K1[,K2,...]>
//! EDGE <id> <u> <v> <w1..wp> <k1..kr>
//! SOURCE <s>
//! TARGET <t>
//!
//! KNAPSACK <items> <K>
//! ITEM <id> <wt> <k>
//! CAPACITY <c>
//! ```
//!
//! `#` starts a comment. Weights are integers, `a/b` fractions or decimals.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ordinal::{Category, CategorySpace};
use crate::rational::{format_rational, parse_rational};
use crate::solvers::{Edge, GraphInstance, Instance, Item, KnapsackInstance};

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn int<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{token}`")))
}

fn arity(line: &Line<'_>, n: usize) -> Result<()> {
    if line.tokens.len() != n {
        return Err(Error::parse(
            line.number,
            format!("{} expects {} fields, found {}", line.tokens[0], n - 1, line.tokens.len() - 1),
        ));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let lines = lines(text);
    let Some(head) = lines.first() else {
        return Err(Error::parse(1, "empty instance"));
    };
    match head.tokens[0] {
        "GRAPH" => parse_graph(&lines).map(Instance::Graph),
        "KNAPSACK" => parse_knapsack(&lines).map(Instance::Knapsack),
        other => Err(Error::parse(head.number, format!("expected GRAPH or KNAPSACK, found `{other}`"))),
    }
}

fn parse_graph(lines: &[Line<'_>]) -> Result<GraphInstance> {
    let head = &lines[0];
    arity(head, 3)?;
    let nodes: usize = int(head.number, head.tokens[1], "node count")?;
    let declared: usize = int(head.number, head.tokens[2], "edge count")?;
    let mut objectives: Option<(usize, Vec<CategorySpace>)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut source = None;
    let mut target = None;
    for line in &lines[1..] {
        let n = line.number;
        match line.tokens[0] {
            "OBJECTIVES" => {
                if objectives.is_some() {
                    return Err(Error::parse(n, "duplicate OBJECTIVES"));
                }
                if !edges.is_empty() {
                    return Err(Error::parse(n, "OBJECTIVES must precede EDGE records"));
                }
                arity(line, 3)?;
                let real = line.tokens[1]
                    .strip_prefix("real=")
                    .ok_or_else(|| Error::parse(n, "expected real=<p>"))?;
                let real: usize = int(n, real, "real objective count")?;
                let ordinal = line.tokens[2]
                    .strip_prefix("ordinal=")
                    .ok_or_else(|| Error::parse(n, "expected ordinal=<K1,...>"))?;
                let mut spaces = Vec::new();
                for k in ordinal.split(',').filter(|s| !s.is_empty()) {
                    let k: usize = int(n, k, "category count")?;
                    spaces.push(CategorySpace::new(k).map_err(|e| Error::parse(n, e.to_string()))?);
                }
                objectives = Some((real, spaces));
            }
            "EDGE" => {
                let (real, spaces) = objectives
                    .as_ref()
                    .ok_or_else(|| Error::parse(n, "EDGE before OBJECTIVES"))?;
                arity(line, 4 + real + spaces.len())?;
                let id = int(n, line.tokens[1], "edge id")?;
                let from: usize = int(n, line.tokens[2], "node")?;
                let to: usize = int(n, line.tokens[3], "node")?;
                for node in [from, to] {
                    if !(1..=nodes).contains(&node) {
                        return Err(Error::parse(n, format!("node {node} outside 1..={nodes}")));
                    }
                }
                let weights = line.tokens[4..4 + real]
                    .iter()
                    .map(|t| parse_rational(t).ok_or_else(|| Error::parse(n, format!("invalid weight `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                let mut categories = Vec::with_capacity(spaces.len());
                for (t, space) in line.tokens[4 + real..].iter().zip(spaces) {
                    let c = Category(int(n, t, "category")?);
                    space.check(c).map_err(|e| Error::parse(n, e.to_string()))?;
                    categories.push(c);
                }
                edges.push(Edge {
                    id,
                    from,
                    to,
                    weights,
                    categories,
                });
            }
            "SOURCE" | "TARGET" => {
                arity(line, 2)?;
                let node: usize = int(n, line.tokens[1], "node")?;
                let slot = if line.tokens[0] == "SOURCE" { &mut source } else { &mut target };
                if slot.replace(node).is_some() {
                    return Err(Error::parse(n, format!("duplicate {}", line.tokens[0])));
                }
            }
            other => return Err(Error::parse(n, format!("unexpected record `{other}` in GRAPH file"))),
        }
    }
    let last = lines.last().map_or(1, |l| l.number);
    if edges.is_empty() {
        return Err(Error::parse(last, "no EDGE records"));
    }
    if edges.len() != declared {
        return Err(Error::parse(head.number, format!("declared {declared} edges, found {}", edges.len())));
    }
    let (real, spaces) = objectives.ok_or_else(|| Error::parse(last, "missing OBJECTIVES"))?;
    let source = source.ok_or_else(|| Error::parse(last, "missing SOURCE"))?;
    let target = target.ok_or_else(|| Error::parse(last, "missing TARGET"))?;
    GraphInstance::new(nodes, real, spaces, edges, source, target).map_err(|e| Error::parse(last, e.to_string()))
}

fn parse_knapsack(lines: &[Line<'_>]) -> Result<KnapsackInstance> {
    let head = &lines[0];
    arity(head, 3)?;
    let declared: usize = int(head.number, head.tokens[1], "item count")?;
    let k: usize = int(head.number, head.tokens[2], "category count")?;
    let space = CategorySpace::new(k).map_err(|e| Error::parse(head.number, e.to_string()))?;
    let mut items = Vec::new();
    let mut capacity = None;
    for line in &lines[1..] {
        let n = line.number;
        match line.tokens[0] {
            "ITEM" if capacity.is_none() => {}
            "ITEM" => return Err(Error::parse(n, "ITEM after CAPACITY")),
            "CAPACITY" => {
                arity(line, 2)?;
                if capacity.replace(int::<u64>(n, line.tokens[1], "capacity")?).is_some() {
                    return Err(Error::parse(n, "duplicate CAPACITY"));
                }
                continue;
            }
            other => return Err(Error::parse(n, format!("unexpected record `{other}` in KNAPSACK file"))),
        }
        arity(line, 4)?;
        let id = int(n, line.tokens[1], "item id")?;
        let weight: u64 = int(n, line.tokens[2], "consumption")?;
        if weight == 0 {
            return Err(Error::parse(n, "consumption must be positive"));
        }
        let category = Category(int(n, line.tokens[3], "category")?);
        space.check(category).map_err(|e| Error::parse(n, e.to_string()))?;
        items.push(Item { id, weight, category });
    }
    let last = lines.last().map_or(1, |l| l.number);
    if items.is_empty() {
        return Err(Error::parse(last, "no ITEM records"));
    }
    if items.len() != declared {
        return Err(Error::parse(head.number, format!("declared {declared} items, found {}", items.len())));
    }
    let capacity = capacity.ok_or_else(|| Error::parse(last, "missing CAPACITY"))?;
    KnapsackInstance::new(capacity, space, items).map_err(|e| Error::parse(last, e.to_string()))
}

/// Writes an instance in the format read by [`parse_instance`].
pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    match instance {
        Instance::Graph(g) => {
            let ks: Vec<String> = g.spaces().iter().map(|s| s.k().to_string()).collect();
            let _ = writeln!(out, "GRAPH {} {}", g.nodes(), g.edges().len());
            let _ = writeln!(out, "OBJECTIVES real={} ordinal={}", g.real_objectives(), ks.join(","));
            for e in g.edges() {
                let _ = write!(out, "EDGE {} {} {}", e.id, e.from, e.to);
                for w in &e.weights {
                    let _ = write!(out, " {}", format_rational(w));
                }
                for c in &e.categories {
                    let _ = write!(out, " {}", c.0);
                }
                out.push('\n');
            }
            let _ = writeln!(out, "SOURCE {}", g.source());
            let _ = writeln!(out, "TARGET {}", g.target());
        }
        Instance::Knapsack(k) => {
            let _ = writeln!(out, "KNAPSACK {} {}", k.items().len(), k.space().k());
            for item in k.items() {
                let _ = writeln!(out, "ITEM {} {} {}", item.id, item.weight, item.category.0);
            }
            let _ = writeln!(out, "CAPACITY {}", k.capacity());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIX_PATHS: &str = "\
# six s-t paths
GRAPH 5 8
OBJECTIVES real=0 ordinal=3
EDGE 1 1 2 2
EDGE 2 2 3 1
EDGE 3 2 4 2
EDGE 4 1 3 1
EDGE 5 3 4 3
EDGE 6 1 5 2
EDGE 7 3 5 1
EDGE 8 5 4 2   # trailing comment
SOURCE 1
TARGET 4
";

    #[test]
    fn parses_graph() {
        let Instance::Graph(g) = parse_instance(SIX_PATHS).unwrap() else {
            panic!("expected graph")
        };
        assert_eq!(g.nodes(), 5);
        assert_eq!(g.edges().len(), 8);
        let cats: Vec<usize> = g.edges().iter().map(|e| e.categories[0].0).collect();
        assert_eq!(cats, vec![2, 1, 2, 1, 3, 2, 1, 2]);
        assert_eq!((g.source(), g.target()), (1, 4));
    }

    #[test]
    fn round_trip() {
        let inst = parse_instance(SIX_PATHS).unwrap();
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
        let text = "GRAPH 2 1\nOBJECTIVES real=2 ordinal=2,3\nEDGE 7 1 2 1/3 0.25 2 3\nSOURCE 1\nTARGET 2\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(write_instance(&inst), text.replace("0.25", "1/4"));
        let ks = "KNAPSACK 2 2\nITEM 1 2 1\nITEM 2 3 2\nCAPACITY 5\n";
        assert_eq!(write_instance(&parse_instance(ks).unwrap()), ks);
    }

    fn line_of(text: &str) -> usize {
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("GRAPH 2 0\nOBJECTIVES real=0 ordinal=2\nSOURCE 1\nTARGET 2\n"), 4);
        assert_eq!(line_of("GRAPH 2 1\nOBJECTIVES real=0 ordinal=2\nEDGE 1 1 2 3\nSOURCE 1\nTARGET 2\n"), 3);
        assert_eq!(line_of("GRAPH 2 1\nOBJECTIVES real=0 ordinal=2\n\nEDGE 1 1 2\n"), 4);
        assert_eq!(line_of("GRAPH 2 1\nEDGE 1 1 2 1\n"), 2);
        assert_eq!(line_of("KNAPSACK 1 2\nITEM 1 0 1\nCAPACITY 5\n"), 2);
        assert_eq!(line_of("KNAPSACK 1 2\nCAPACITY 5\n"), 2);
        assert_eq!(line_of("KNAPSACK 1 2\nITEM 1 x 1\nCAPACITY 5\n"), 2);
        assert_eq!(line_of("KNAPSACK 1 2\nITEM 1 2 1\n"), 2);
        assert_eq!(line_of("KNAPSACK 1 2\nCAPACITY 5\nITEM 1 2 1\n"), 3);
        assert_eq!(line_of("KNAPSACK 1 2\nITEM 1 2 1\nCAPACITY 5\nCAPACITY 6\n"), 4);
        assert_eq!(line_of("SQUARE 1\n"), 1);
    }
}
