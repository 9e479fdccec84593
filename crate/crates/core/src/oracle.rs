//! Brute-force ground truth: exhaustive enumeration plus definitional dominance checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordinal::{
    counting_vector, dominance_certificate, numeric_value, representation_expensive_from, weakly_head_dominates,
    weakly_tail_dominates, Category, CategorySpace, CountingVector, DominanceCertificate, NumericalRepresentation,
};
use crate::rational::{from_int, from_ratio, Rational};
use crate::solvers::{self, Edge, GraphInstance, Instance, KnapsackInstance, ProblemKind, SolveOptions};

pub const DEFAULT_NODE_LIMIT: usize = 12;
pub const DEFAULT_ITEM_LIMIT: usize = 20;
pub const DEFAULT_SAMPLES: usize = 50;
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paths,
    Subsets,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleSolution {
    /// Edge ids in path order, or item ids ascending.
    pub ids: Vec<u64>,
    /// One counting vector per ordinal objective.
    pub counts: Vec<CountingVector>,
    pub weights: Vec<Rational>,
    /// Per-category weight totals when there is exactly one real and one ordinal objective.
    pub weighted_counts: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedFeasibleSet {
    pub provenance: Provenance,
    pub solutions: Vec<FeasibleSolution>,
}

/// All simple s-t paths by depth-first search with backtracking.
pub fn enumerate_paths(g: &GraphInstance, limit: usize) -> Result<EnumeratedFeasibleSet> {
    if g.nodes() > limit {
        return Err(Error::SizeLimit {
            what: "nodes",
            size: g.nodes(),
            limit,
        });
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); g.nodes() + 1];
    for (i, e) in g.edges().iter().enumerate() {
        out[e.from].push(i);
    }
    let mut paths = Vec::new();
    let mut visited = vec![false; g.nodes() + 1];
    visited[g.source()] = true;
    dfs(g, &out, g.source(), &mut visited, &mut Vec::new(), &mut paths);
    let solutions = paths
        .into_iter()
        .map(|path| path_solution(g, &path))
        .collect::<Result<Vec<_>>>()?;
    Ok(EnumeratedFeasibleSet {
        provenance: Provenance::Paths,
        solutions,
    })
}

fn dfs(
    g: &GraphInstance,
    out: &[Vec<usize>],
    at: usize,
    visited: &mut [bool],
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    if at == g.target() {
        paths.push(path.clone());
        return;
    }
    for &ei in &out[at] {
        let next = g.edges()[ei].to;
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(ei);
        dfs(g, out, next, visited, path, paths);
        path.pop();
        visited[next] = false;
    }
}

fn path_solution(g: &GraphInstance, path: &[usize]) -> Result<FeasibleSolution> {
    let edges: Vec<&Edge> = path.iter().map(|&i| &g.edges()[i]).collect();
    let mut counts = Vec::with_capacity(g.ordinal_objectives());
    for (l, space) in g.spaces().iter().enumerate() {
        let cats: Vec<Category> = edges.iter().map(|e| e.categories[l]).collect();
        counts.push(counting_vector(&cats, space)?);
    }
    let mut weights = vec![from_int(0); g.real_objectives()];
    for e in &edges {
        for (acc, w) in weights.iter_mut().zip(&e.weights) {
            *acc += w;
        }
    }
    let weighted_counts = (g.real_objectives() == 1 && g.ordinal_objectives() == 1).then(|| {
        let mut cw = vec![from_int(0); g.spaces()[0].k()];
        for e in &edges {
            cw[e.categories[0].0 - 1] += &e.weights[0];
        }
        cw
    });
    Ok(FeasibleSolution {
        ids: edges.iter().map(|e| e.id).collect(),
        counts,
        weights,
        weighted_counts,
    })
}

/// All item subsets within capacity, the empty set included.
pub fn enumerate_subsets(inst: &KnapsackInstance, limit: usize) -> Result<EnumeratedFeasibleSet> {
    let n = inst.items().len();
    if n > limit {
        return Err(Error::SizeLimit {
            what: "items",
            size: n,
            limit,
        });
    }
    let mut solutions = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let chosen: Vec<_> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| inst.items()[i]).collect();
        let used: u64 = chosen.iter().map(|it| it.weight).sum();
        if used > inst.capacity() {
            continue;
        }
        let mut ids: Vec<u64> = chosen.iter().map(|it| it.id).collect();
        ids.sort_unstable();
        let cats: Vec<Category> = chosen.iter().map(|it| it.category).collect();
        solutions.push(FeasibleSolution {
            ids,
            counts: vec![counting_vector(&cats, inst.space())?],
            weights: Vec::new(),
            weighted_counts: None,
        });
    }
    solutions.sort_by(|a, b| a.ids.cmp(&b.ids));
    Ok(EnumeratedFeasibleSet {
        provenance: Provenance::Subsets,
        solutions,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Concept {
    /// Tail-dominance of the single ordinal objective (minimisation).
    Tail,
    /// Head-dominance of the single ordinal objective (maximisation).
    Head,
    /// Ordinal dominance decided from numerical representations, cross-checked
    /// against tail-dominance and the dominance certificate.
    OrdinalSampled { samples: usize, seed: u64 },
    /// Pareto on real totals and every objective's tails.
    Mixed,
    /// Pareto on the tails of the weighted counting vector.
    WeightedTail,
}

/// The vector a concept compares, computed from scratch.
pub fn concept_value(s: &FeasibleSolution, concept: Concept) -> Result<Vec<Rational>> {
    let int = |v: Vec<u64>| v.into_iter().map(|x| from_int(x as i64)).collect::<Vec<_>>();
    match concept {
        Concept::Tail | Concept::OrdinalSampled { .. } => Ok(int(suffix(single(s)?.as_slice()))),
        Concept::Head => {
            let c = single(s)?.as_slice();
            Ok(int((1..=c.len()).map(|j| c[..j].iter().sum()).collect()))
        }
        Concept::Mixed => {
            let mut v = s.weights.clone();
            for c in &s.counts {
                v.extend(int(suffix(c.as_slice())));
            }
            Ok(v)
        }
        Concept::WeightedTail => {
            let cw = s
                .weighted_counts
                .as_ref()
                .ok_or_else(|| Error::InvalidInstance("weighted counting needs one weight and one category".into()))?;
            Ok((0..cw.len()).map(|j| cw[j..].iter().sum()).collect())
        }
    }
}

fn suffix(c: &[u64]) -> Vec<u64> {
    (0..c.len()).map(|j| c[j..].iter().sum()).collect()
}

fn single(s: &FeasibleSolution) -> Result<&CountingVector> {
    match s.counts.as_slice() {
        [c] => Ok(c),
        _ => Err(Error::InvalidInstance(format!(
            "concept needs one ordinal objective, found {}",
            s.counts.len()
        ))),
    }
}

/// Indices of the efficient solutions under `concept`, by pairwise comparison.
pub fn oracle_efficient_set(feasible: &EnumeratedFeasibleSet, concept: Concept) -> Result<Vec<usize>> {
    let sols = &feasible.solutions;
    let mut judge = Judge::new(concept);
    let mut efficient = Vec::new();
    for (i, y) in sols.iter().enumerate() {
        let mut dominated = false;
        for x in sols {
            if judge.dominates(x, y)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            efficient.push(i);
        }
    }
    Ok(efficient)
}

struct Judge {
    concept: Concept,
    rng: Option<ChaCha8Rng>,
}

impl Judge {
    fn new(concept: Concept) -> Self {
        let rng = match concept {
            Concept::OrdinalSampled { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Self { concept, rng }
    }

    /// Does `x` dominate `y`?
    fn dominates(&mut self, x: &FeasibleSolution, y: &FeasibleSolution) -> Result<bool> {
        match self.concept {
            Concept::Tail => {
                let (u, v) = (single(x)?, single(y)?);
                Ok(u != v && weakly_tail_dominates(u, v)?)
            }
            Concept::Head => {
                let (u, v) = (single(x)?, single(y)?);
                Ok(u != v && weakly_head_dominates(u, v)?)
            }
            Concept::OrdinalSampled { samples, .. } => {
                let (u, v) = (single(x)?, single(y)?);
                let rng = self.rng.as_mut().expect("seeded for sampled concept");
                ordinal_verdict(u, v, samples, rng)
            }
            Concept::Mixed | Concept::WeightedTail => {
                let (a, b) = (concept_value(x, self.concept)?, concept_value(y, self.concept)?);
                Ok(a != b && a.iter().zip(&b).all(|(p, q)| p <= q))
            }
        }
    }
}

/// Random strictly increasing representation: start in `0..=5`, gaps in `1..=5`.
pub fn sample_representation(k: usize, rng: &mut impl Rng) -> NumericalRepresentation {
    let mut values = Vec::with_capacity(k);
    let mut at: u64 = rng.gen_range(0..=5);
    for _ in 0..k {
        values.push(at);
        at += rng.gen_range(1..=5);
    }
    NumericalRepresentation::new(values).expect("strictly increasing by construction")
}

/// `u` ordinally dominates `v`: no tested representation rates `u` worse and
/// one rates it strictly better. The tested family holds every "expensive from
/// category j" representation, which makes the verdict exact, plus random
/// samples. The verdict must agree with tail-dominance and the certificate.
fn ordinal_verdict(u: &CountingVector, v: &CountingVector, samples: usize, rng: &mut ChaCha8Rng) -> Result<bool> {
    let k = u.k();
    let n = u.cardinality().max(v.cardinality()).max(1);
    let mut family = (1..=k)
        .map(|j| representation_expensive_from(j, n, k))
        .collect::<Result<Vec<_>>>()?;
    family.extend((0..samples).map(|_| sample_representation(k, rng)));
    let mut never_worse = true;
    let mut sometimes_better = false;
    for nu in &family {
        let (a, b) = (numeric_value(nu, u)?, numeric_value(nu, v)?);
        never_worse &= a <= b;
        sometimes_better |= a < b;
    }
    let verdict = never_worse && sometimes_better;

    let tail = u != v && weakly_tail_dominates(u, v)?;
    let certified = match dominance_certificate(u, v)? {
        DominanceCertificate::Equal => u == v,
        DominanceCertificate::NotWeaklyDominating {
            representation,
            value_u,
            value_v,
            ..
        } => {
            value_u > value_v
                && numeric_value(&representation, u)? == value_u
                && numeric_value(&representation, v)? == value_v
                && !weakly_tail_dominates(u, v)?
        }
        DominanceCertificate::StrictlyDominating {
            representation,
            value_u,
            value_v,
            ..
        } => {
            value_u < value_v
                && numeric_value(&representation, u)? == value_u
                && numeric_value(&representation, v)? == value_v
                && tail
        }
    };
    if verdict != tail || !certified {
        return Err(Error::OracleInconsistency(format!(
            "dominance of {u} over {v}: representations say {verdict}, tails say {tail}, certificate valid {certified}"
        )));
    }
    Ok(verdict)
}

/// The oracle's reference concept for a solver problem.
pub fn concept_for(problem: ProblemKind) -> Concept {
    match problem {
        ProblemKind::ShortestPath | ProblemKind::Mixed => Concept::Mixed,
        ProblemKind::Knapsack => Concept::Head,
        ProblemKind::WeightedCounting => Concept::WeightedTail,
    }
}

/// Outcome of running a solver and the oracle on the same instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub problem: ProblemKind,
    /// Sorted `(value, sorted solution id lists)` from the solver.
    pub solver: Vec<(Vec<Rational>, Vec<Vec<u64>>)>,
    /// The same, from enumeration.
    pub oracle: Vec<(Vec<Rational>, Vec<Vec<u64>>)>,
    /// Tail versus ordinal-sampled agreement, when that check applies.
    pub concepts_agree: Option<bool>,
}

impl Comparison {
    pub fn agree(&self) -> bool {
        self.solver == self.oracle && self.concepts_agree != Some(false)
    }
}

/// Solves with every efficient solution retained and compares against enumeration.
pub fn compare(instance: &Instance, problem: ProblemKind, seed: u64) -> Result<Comparison> {
    let result = solvers::solve(instance, problem, SolveOptions { all_efficient: true })?;
    result.verify(instance)?;
    let mut solver: Vec<(Vec<Rational>, Vec<Vec<u64>>)> = result
        .outcomes
        .iter()
        .map(|o| {
            let mut sols = o.solutions.clone();
            sols.sort();
            (o.value.clone(), sols)
        })
        .collect();
    solver.sort();

    let feasible = match instance {
        Instance::Graph(g) => enumerate_paths(g, DEFAULT_NODE_LIMIT)?,
        Instance::Knapsack(k) => enumerate_subsets(k, DEFAULT_ITEM_LIMIT)?,
    };
    let concept = concept_for(problem);
    let efficient = oracle_efficient_set(&feasible, concept)?;
    let mut oracle: Vec<(Vec<Rational>, Vec<Vec<u64>>)> = Vec::new();
    for &i in &efficient {
        let s = &feasible.solutions[i];
        let value = concept_value(s, concept)?;
        match oracle.iter_mut().find(|(v, _)| *v == value) {
            Some((_, sols)) => sols.push(s.ids.clone()),
            None => oracle.push((value, vec![s.ids.clone()])),
        }
    }
    for (_, sols) in &mut oracle {
        sols.sort();
    }
    oracle.sort();

    let single_ordinal = feasible.solutions.first().is_some_and(|s| s.counts.len() == 1);
    let concepts_agree = if single_ordinal && problem != ProblemKind::WeightedCounting {
        let tail = oracle_efficient_set(&feasible, Concept::Tail)?;
        let sampled = oracle_efficient_set(
            &feasible,
            Concept::OrdinalSampled {
                samples: DEFAULT_SAMPLES,
                seed,
            },
        )?;
        Some(tail == sampled)
    } else {
        None
    };
    Ok(Comparison {
        problem,
        solver,
        oracle,
        concepts_agree,
    })
}

/// Bounds for random instance generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomGraphSpec {
    pub max_nodes: usize,
    pub max_edges: usize,
    pub max_k: usize,
    pub real_objectives: usize,
    pub ordinal_objectives: usize,
}

impl Default for RandomGraphSpec {
    fn default() -> Self {
        Self {
            max_nodes: 8,
            max_edges: 16,
            max_k: 4,
            real_objectives: 0,
            ordinal_objectives: 1,
        }
    }
}

/// Random DAG on `2..=max_nodes` nodes with edges from lower to higher node
/// numbers (parallel edges allowed), source 1 and target `n`.
pub fn random_graph(spec: RandomGraphSpec, rng: &mut impl Rng) -> GraphInstance {
    let n = rng.gen_range(2..=spec.max_nodes.max(2));
    let m = rng.gen_range(1..=spec.max_edges.max(1));
    let spaces: Vec<CategorySpace> = (0..spec.ordinal_objectives)
        .map(|_| CategorySpace::new(rng.gen_range(1..=spec.max_k.max(1))).expect("k >= 1"))
        .collect();
    let edges = (1..=m as u64)
        .map(|id| {
            let from = rng.gen_range(1..n);
            let to = rng.gen_range(from + 1..=n);
            let weights = (0..spec.real_objectives)
                .map(|_| from_ratio(rng.gen_range(0..=12), rng.gen_range(1..=3)))
                .collect();
            let categories = spaces.iter().map(|s| Category(rng.gen_range(1..=s.k()))).collect();
            Edge {
                id,
                from,
                to,
                weights,
                categories,
            }
        })
        .collect();
    GraphInstance::new(n, spec.real_objectives, spaces, edges, 1, n).expect("valid by construction")
}

/// Random knapsack with up to `max_items` items, capacity up to `max_capacity`, `K <= max_k`.
pub fn random_knapsack(max_items: usize, max_capacity: u64, max_k: usize, rng: &mut impl Rng) -> KnapsackInstance {
    let k = rng.gen_range(1..=max_k.max(1));
    let n = rng.gen_range(0..=max_items);
    let items: Vec<(u64, u64, usize)> = (1..=n as u64)
        .map(|id| (id, rng.gen_range(1..=10), rng.gen_range(1..=k)))
        .collect();
    KnapsackInstance::from_items(rng.gen_range(0..=max_capacity), k, &items).expect("valid by construction")
}

/// Deterministic generator used by the CLI and the test suites.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
