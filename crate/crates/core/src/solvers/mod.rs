//! Exact solvers: every problem is reduced to Pareto search over transformed vectors.

mod instance;
mod knapsack;
mod labels;

use serde::{Deserialize, Serialize};

pub use instance::{Edge, GraphInstance, Instance, Item, KnapsackInstance};
pub use knapsack::solve_knapsack;

use crate::error::{Error, Result};
use crate::ordinal::{
    counting_vector, head_transform, tail_transform, Category, CategorySpace, CountingVector, OrdinalVector, Sense,
    TailCountVector,
};
use crate::rational::{from_int, serde_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    ShortestPath,
    Knapsack,
    Mixed,
    WeightedCounting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Solved,
    Unreachable,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Keep every efficient solution per value instead of one representative.
    pub all_efficient: bool,
}

/// One non-dominated value together with its images in every space. The
/// count, tail and ordinal images are those of the representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    /// The vector the solver compared: tails, mixed `(w, tails)`, weighted tails, or heads.
    #[serde(with = "serde_rational::vec")]
    pub value: Vec<Rational>,
    /// Real objective totals.
    #[serde(with = "serde_rational::vec")]
    pub weights: Vec<Rational>,
    pub counts: Vec<CountingVector>,
    pub tails: Vec<TailCountVector>,
    pub ordinal: Vec<OrdinalVector>,
    /// Per-category weight totals, for weighted counting only.
    #[serde(with = "serde_rational::option_vec", default)]
    pub weighted_counts: Option<Vec<Rational>>,
    /// Element id lists; the first entry is the representative.
    pub solutions: Vec<Vec<u64>>,
}

impl OutcomeRecord {
    pub fn representative(&self) -> &[u64] {
        &self.solutions[0]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub problem: ProblemKind,
    pub sense: Sense,
    pub status: Status,
    pub real_objectives: usize,
    pub spaces: Vec<CategorySpace>,
    /// Sorted lexicographically by value.
    pub outcomes: Vec<OutcomeRecord>,
}

impl SolveResult {
    pub fn values(&self) -> Vec<Vec<Rational>> {
        self.outcomes.iter().map(|o| o.value.clone()).collect()
    }

    /// Every solution of every record, in record order.
    pub fn all_solutions(&self) -> Vec<Vec<u64>> {
        self.outcomes.iter().flat_map(|o| o.solutions.iter().cloned()).collect()
    }

    /// Re-derives every record from its solutions and checks it matches.
    pub fn verify(&self, instance: &Instance) -> Result<()> {
        for record in &self.outcomes {
            for solution in &record.solutions {
                let fresh = match (instance, self.problem) {
                    (Instance::Knapsack(k), ProblemKind::Knapsack) => knapsack::record_for(k, solution)?,
                    (Instance::Graph(g), problem) if problem != ProblemKind::Knapsack => {
                        let indices = path_indices(g, solution)?;
                        let mut r = graph_record(g, problem, &indices)?;
                        r.solutions = vec![solution.clone()];
                        r
                    }
                    _ => return Err(Error::InvalidInstance("instance does not match problem kind".into())),
                };
                let mut expected = record.clone();
                expected.solutions = fresh.solutions.clone();
                let matches = if solution.as_slice() == record.representative() {
                    fresh == expected
                } else {
                    // weighted counting can tie on value with different counts
                    fresh.value == expected.value
                        && fresh.weights == expected.weights
                        && fresh.weighted_counts == expected.weighted_counts
                };
                if !matches {
                    return Err(Error::OracleInconsistency(format!(
                        "solution {solution:?} does not reproduce its recorded outcome"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Ordinal shortest path: Pareto search on `(w, c~)` edge costs, where `c~(e)` is
/// the binary tail vector of the edge's category in each ordinal objective.
pub fn solve_shortest_path(g: &GraphInstance, options: SolveOptions) -> Result<SolveResult> {
    if g.ordinal_objectives() == 0 {
        return Err(Error::InvalidInstance("shortest path needs an ordinal objective".into()));
    }
    solve_graph(g, ProblemKind::ShortestPath, options)
}

/// Mixed real and ordinal objectives, ordered by the block-diagonal tail cone.
pub fn solve_mixed(g: &GraphInstance, options: SolveOptions) -> Result<SolveResult> {
    if g.real_objectives() + g.ordinal_objectives() == 0 {
        return Err(Error::InvalidInstance("no objectives".into()));
    }
    solve_graph(g, ProblemKind::Mixed, options)
}

/// One real weight and one ordinal objective on the same elements: minimise
/// the tails of the weighted counting vector.
pub fn solve_weighted_counting(g: &GraphInstance, options: SolveOptions) -> Result<SolveResult> {
    if g.real_objectives() != 1 || g.ordinal_objectives() != 1 {
        return Err(Error::InvalidInstance(format!(
            "weighted counting needs exactly one real and one ordinal objective, found {} and {}",
            g.real_objectives(),
            g.ordinal_objectives()
        )));
    }
    solve_graph(g, ProblemKind::WeightedCounting, options)
}

pub fn solve(instance: &Instance, problem: ProblemKind, options: SolveOptions) -> Result<SolveResult> {
    match (instance, problem) {
        (Instance::Knapsack(k), ProblemKind::Knapsack) => solve_knapsack(k, options),
        (Instance::Graph(g), ProblemKind::ShortestPath) => solve_shortest_path(g, options),
        (Instance::Graph(g), ProblemKind::Mixed) => solve_mixed(g, options),
        (Instance::Graph(g), ProblemKind::WeightedCounting) => solve_weighted_counting(g, options),
        _ => Err(Error::InvalidInstance(format!("{problem:?} does not apply to this instance"))),
    }
}

/// Unit tail vector of a single element: ones up to and including its category.
pub(crate) fn element_tail(cat: Category, k: usize) -> Vec<u64> {
    (1..=k).map(|j| u64::from(j <= cat.0)).collect()
}

/// The per-edge cost vector the solver compares for `problem`.
pub(crate) fn edge_cost(g: &GraphInstance, edge: &Edge, problem: ProblemKind) -> Vec<Rational> {
    match problem {
        ProblemKind::WeightedCounting => {
            let k = g.spaces()[0].k();
            element_tail(edge.categories[0], k)
                .into_iter()
                .map(|t| &edge.weights[0] * from_int(t as i64))
                .collect()
        }
        _ => {
            let mut cost = edge.weights.clone();
            for (cat, space) in edge.categories.iter().zip(g.spaces()) {
                cost.extend(element_tail(*cat, space.k()).into_iter().map(|t| from_int(t as i64)));
            }
            cost
        }
    }
}

fn solve_graph(g: &GraphInstance, problem: ProblemKind, options: SolveOptions) -> Result<SolveResult> {
    let costs: Vec<Vec<Rational>> = g.edges().iter().map(|e| edge_cost(g, e, problem)).collect();
    let found = labels::label_correcting(g, &costs);
    let mut outcomes = Vec::with_capacity(found.outcomes.len());
    for (value, paths) in found.outcomes {
        let mut record = graph_record(g, problem, &paths[0])?;
        debug_assert_eq!(record.value, value);
        let keep = if options.all_efficient { paths.len() } else { 1 };
        record.solutions = paths[..keep]
            .iter()
            .map(|p| p.iter().map(|&e| g.edges()[e].id).collect())
            .collect();
        outcomes.push(record);
    }
    let status = if outcomes.is_empty() { Status::Unreachable } else { Status::Solved };
    Ok(SolveResult {
        problem,
        sense: Sense::Min,
        status,
        real_objectives: g.real_objectives(),
        spaces: g.spaces().to_vec(),
        outcomes,
    })
}

fn path_indices(g: &GraphInstance, ids: &[u64]) -> Result<Vec<usize>> {
    let mut at = g.source();
    let mut indices = Vec::with_capacity(ids.len());
    for &id in ids {
        let i = g
            .edges()
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown edge {id}")))?;
        if g.edges()[i].from != at {
            return Err(Error::InvalidInstance(format!("edge {id} does not continue the path")));
        }
        at = g.edges()[i].to;
        indices.push(i);
    }
    if at != g.target() {
        return Err(Error::InvalidInstance("path does not end at the target".into()));
    }
    Ok(indices)
}

/// Builds the outcome record of a path from scratch, with that path as sole solution.
pub(crate) fn graph_record(g: &GraphInstance, problem: ProblemKind, path: &[usize]) -> Result<OutcomeRecord> {
    let edges: Vec<&Edge> = path.iter().map(|&i| &g.edges()[i]).collect();
    let mut weights = vec![Rational::from_integer(0.into()); g.real_objectives()];
    for e in &edges {
        for (acc, w) in weights.iter_mut().zip(&e.weights) {
            *acc += w;
        }
    }
    let mut counts = Vec::new();
    let mut tails = Vec::new();
    let mut ordinal = Vec::new();
    for (l, space) in g.spaces().iter().enumerate() {
        let cats: Vec<Category> = edges.iter().map(|e| e.categories[l]).collect();
        let c = counting_vector(&cats, space)?;
        tails.push(tail_transform(&c));
        ordinal.push(OrdinalVector::from_counts(&c));
        counts.push(c);
    }
    let (value, weighted_counts) = match problem {
        ProblemKind::WeightedCounting => {
            let k = g.spaces()[0].k();
            let mut cw = vec![Rational::from_integer(0.into()); k];
            for e in &edges {
                cw[e.categories[0].0 - 1] += &e.weights[0];
            }
            let mut tail = cw.clone();
            for j in (0..k.saturating_sub(1)).rev() {
                tail[j] = &tail[j] + &tail[j + 1];
            }
            (tail, Some(cw))
        }
        _ => {
            let mut value = weights.clone();
            for t in &tails {
                value.extend(t.as_slice().iter().map(|&x| from_int(x as i64)));
            }
            (value, None)
        }
    };
    Ok(OutcomeRecord {
        value,
        weights,
        counts,
        tails,
        ordinal,
        weighted_counts,
        solutions: vec![path.iter().map(|&i| g.edges()[i].id).collect()],
    })
}

/// Head counting vector helper shared with the knapsack solver.
pub(crate) fn head_of(c: &CountingVector) -> Vec<u64> {
    head_transform(c).into_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::{CountingVector, TailCountVector};
    use crate::rational::to_rationals;

    pub(crate) fn six_paths() -> GraphInstance {
        GraphInstance::ordinal(
            5,
            3,
            &[
                (1, 1, 2, 2),
                (2, 2, 3, 1),
                (3, 2, 4, 2),
                (4, 1, 3, 1),
                (5, 3, 4, 3),
                (6, 1, 5, 2),
                (7, 3, 5, 1),
                (8, 5, 4, 2),
            ],
            1,
            4,
        )
        .unwrap()
    }

    fn coherent() -> GraphInstance {
        let space = CategorySpace::new(2).unwrap();
        let raw = [(1, 1, 2, 1, 2), (2, 2, 3, 1, 2), (3, 3, 6, 8, 1), (4, 1, 4, 6, 2), (5, 4, 5, 2, 1), (6, 5, 6, 2, 1)];
        let edges = raw
            .iter()
            .map(|&(id, from, to, w, c)| Edge {
                id,
                from,
                to,
                weights: vec![from_int(w)],
                categories: vec![Category(c)],
            })
            .collect();
        GraphInstance::new(6, 1, vec![space], edges, 1, 6).unwrap()
    }

    fn tails(v: &[&[u64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|t| to_rationals(t)).collect()
    }

    #[test]
    fn six_paths_nondominated_tails() {
        let res = solve_shortest_path(&six_paths(), SolveOptions::default()).unwrap();
        assert_eq!(res.status, Status::Solved);
        assert_eq!(res.values(), tails(&[&[2, 1, 1], &[2, 2, 0], &[3, 1, 0]]));
        assert_eq!(res.outcomes[0].representative(), &[4, 5]);
        assert_eq!(res.outcomes[1].representative(), &[1, 3]);
        assert_eq!(res.outcomes[0].counts[0], CountingVector::new(vec![1, 0, 1]).unwrap());
        assert_eq!(res.outcomes[0].tails[0], TailCountVector::new(vec![2, 1, 1]).unwrap());
        res.verify(&Instance::Graph(six_paths())).unwrap();
    }

    #[test]
    fn six_paths_all_efficient() {
        let res = solve_shortest_path(&six_paths(), SolveOptions { all_efficient: true }).unwrap();
        let mut sols = res.all_solutions();
        sols.sort();
        assert_eq!(sols, vec![vec![1, 3], vec![4, 5], vec![4, 7, 8], vec![6, 8]]);
        res.verify(&Instance::Graph(six_paths())).unwrap();
    }

    #[test]
    fn single_edge() {
        let g = GraphInstance::ordinal(2, 3, &[(1, 1, 2, 2)], 1, 2).unwrap();
        let res = solve_shortest_path(&g, SolveOptions::default()).unwrap();
        assert_eq!(res.values(), tails(&[&[1, 1, 0]]));
    }

    #[test]
    fn unreachable_target() {
        let g = GraphInstance::ordinal(3, 2, &[(1, 1, 2, 1)], 1, 3).unwrap();
        let res = solve_shortest_path(&g, SolveOptions::default()).unwrap();
        assert_eq!(res.status, Status::Unreachable);
        assert!(res.outcomes.is_empty());
    }

    #[test]
    fn source_equals_target() {
        let g = GraphInstance::ordinal(2, 2, &[(1, 1, 2, 1), (2, 2, 1, 1)], 1, 1).unwrap();
        let res = solve_shortest_path(&g, SolveOptions::default()).unwrap();
        assert_eq!(res.values(), tails(&[&[0, 0]]));
        assert!(res.outcomes[0].representative().is_empty());
    }

    #[test]
    fn coherent_weights_split() {
        let g = coherent();
        let w = solve_weighted_counting(&g, SolveOptions { all_efficient: true }).unwrap();
        assert_eq!(w.values(), tails(&[&[10, 2]]));
        assert_eq!(w.all_solutions(), vec![vec![1, 2, 3]]);
        assert_eq!(w.outcomes[0].weighted_counts, Some(to_rationals(&[8u64, 2])));
        let m = solve_mixed(&g, SolveOptions { all_efficient: true }).unwrap();
        assert_eq!(m.values(), tails(&[&[10, 3, 1]]));
        assert_eq!(m.all_solutions(), vec![vec![4, 5, 6]]);
        w.verify(&Instance::Graph(g.clone())).unwrap();
        m.verify(&Instance::Graph(g)).unwrap();
    }

    #[test]
    fn weighted_counting_requires_one_pair() {
        assert!(solve_weighted_counting(&six_paths(), SolveOptions::default()).is_err());
    }

    #[test]
    fn mixed_without_weights_matches_shortest_path() {
        let sp = solve_shortest_path(&six_paths(), SolveOptions { all_efficient: true }).unwrap();
        let mixed = solve_mixed(&six_paths(), SolveOptions { all_efficient: true }).unwrap();
        assert_eq!(sp.outcomes, mixed.outcomes);
    }

    #[test]
    fn all_first_category_is_classic_shortest_path() {
        let space = CategorySpace::new(3).unwrap();
        let raw = [(1, 1, 2, 4), (2, 2, 3, 1), (3, 1, 3, 7), (4, 1, 2, 1)];
        let edges = raw
            .iter()
            .map(|&(id, from, to, w)| Edge {
                id,
                from,
                to,
                weights: vec![from_int(w)],
                categories: vec![Category(1)],
            })
            .collect();
        let g = GraphInstance::new(3, 1, vec![space], edges, 1, 3).unwrap();
        let res = solve_weighted_counting(&g, SolveOptions::default()).unwrap();
        assert_eq!(res.values(), tails(&[&[2, 0, 0]]));
        assert_eq!(res.outcomes[0].representative(), &[4, 2]);
    }

    #[test]
    fn verify_rejects_tampered_record() {
        let mut res = solve_shortest_path(&six_paths(), SolveOptions::default()).unwrap();
        res.outcomes[0].solutions[0] = vec![1, 3];
        assert!(res.verify(&Instance::Graph(six_paths())).is_err());
    }
}
