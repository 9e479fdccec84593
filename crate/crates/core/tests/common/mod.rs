//! Reference computations written directly from the definitions, sharing no
//! code with the library beyond its public instance accessors.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use ordopt::rational::from_int;
use ordopt::solvers::{GraphInstance, KnapsackInstance};
use ordopt::Rational;

pub fn instance_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances").join(name)
}

pub fn read_instance(name: &str) -> String {
    std::fs::read_to_string(instance_path(name)).expect("fixture exists")
}

/// Every simple s-t path as a list of edge ids, found by plain recursion.
pub fn simple_paths(g: &GraphInstance) -> Vec<Vec<u64>> {
    fn go(g: &GraphInstance, at: usize, seen: &mut BTreeSet<usize>, path: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if at == g.target() {
            out.push(path.clone());
            return;
        }
        for e in g.edges().iter().filter(|e| e.from == at) {
            if seen.insert(e.to) {
                path.push(e.id);
                go(g, e.to, seen, path, out);
                path.pop();
                seen.remove(&e.to);
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::from([g.source()]);
    go(g, g.source(), &mut seen, &mut Vec::new(), &mut out);
    out
}

/// Number of s-t paths in a DAG whose edges go from lower to higher node numbers.
pub fn dag_path_count(g: &GraphInstance) -> u64 {
    let mut ways = vec![0u64; g.nodes() + 1];
    ways[g.target()] = 1;
    for node in (1..=g.nodes()).rev() {
        if node == g.target() {
            continue;
        }
        ways[node] = g.edges().iter().filter(|e| e.from == node).map(|e| ways[e.to]).sum();
    }
    ways[g.source()]
}

pub fn counts_of(g: &GraphInstance, path: &[u64], objective: usize) -> Vec<u64> {
    let k = g.spaces()[objective].k();
    let mut c = vec![0u64; k];
    for id in path {
        let e = g.edge(*id).unwrap();
        c[e.categories[objective].0 - 1] += 1;
    }
    c
}

pub fn weights_of(g: &GraphInstance, path: &[u64]) -> Vec<Rational> {
    let mut w = vec![from_int(0); g.real_objectives()];
    for id in path {
        for (acc, x) in w.iter_mut().zip(&g.edge(*id).unwrap().weights) {
            *acc += x;
        }
    }
    w
}

pub fn tails(c: &[u64]) -> Vec<u64> {
    let mut t = c.to_vec();
    for j in (0..t.len().saturating_sub(1)).rev() {
        t[j] += t[j + 1];
    }
    t
}

pub fn heads(c: &[u64]) -> Vec<u64> {
    let mut h = c.to_vec();
    for j in 1..h.len() {
        h[j] += h[j - 1];
    }
    h
}

pub fn to_q(v: &[u64]) -> Vec<Rational> {
    v.iter().map(|&x| from_int(x as i64)).collect()
}

/// `a` is componentwise no larger than `b` and differs from it.
pub fn min_dominates<T: PartialOrd>(a: &[T], b: &[T]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y)
}

pub type Front = BTreeMap<Vec<Rational>, BTreeSet<Vec<u64>>>;

/// Groups efficient solutions by value under minimisation (or maximisation).
pub fn front(candidates: Vec<(Vec<Rational>, Vec<u64>)>, maximise: bool) -> Front {
    let mut out = Front::new();
    for (v, sol) in &candidates {
        let beaten = candidates.iter().any(|(w, _)| {
            if maximise {
                min_dominates(v, w)
            } else {
                min_dominates(w, v)
            }
        });
        if !beaten {
            out.entry(v.clone()).or_default().insert(sol.clone());
        }
    }
    out
}

/// Value of a path in the transformed space `(w, tails of each objective)`.
pub fn mixed_value(g: &GraphInstance, path: &[u64]) -> Vec<Rational> {
    let mut v = weights_of(g, path);
    for l in 0..g.ordinal_objectives() {
        v.extend(to_q(&tails(&counts_of(g, path, l))));
    }
    v
}

/// Tails of the per-category weight totals.
pub fn weighted_tail_value(g: &GraphInstance, path: &[u64]) -> Vec<Rational> {
    let k = g.spaces()[0].k();
    let mut cw = vec![from_int(0); k];
    for id in path {
        let e = g.edge(*id).unwrap();
        cw[e.categories[0].0 - 1] += &e.weights[0];
    }
    (0..k).map(|j| cw[j..].iter().sum()).collect()
}

pub fn expected_mixed(g: &GraphInstance) -> Front {
    front(simple_paths(g).into_iter().map(|p| (mixed_value(g, &p), p)).collect(), false)
}

pub fn expected_weighted(g: &GraphInstance) -> Front {
    front(
        simple_paths(g).into_iter().map(|p| (weighted_tail_value(g, &p), p)).collect(),
        false,
    )
}

pub fn feasible_subsets(k: &KnapsackInstance) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for item in k.items() {
        let extended: Vec<Vec<u64>> = out
            .iter()
            .filter(|s| s.iter().map(|id| k.item(*id).unwrap().weight).sum::<u64>() + item.weight <= k.capacity())
            .map(|s| {
                let mut s = s.clone();
                s.push(item.id);
                s.sort_unstable();
                s
            })
            .collect();
        out.extend(extended);
    }
    out
}

pub fn expected_knapsack(k: &KnapsackInstance) -> Front {
    let kk = k.space().k();
    let candidates = feasible_subsets(k)
        .into_iter()
        .map(|s| {
            let mut c = vec![0u64; kk];
            for id in &s {
                c[k.item(*id).unwrap().category.0 - 1] += 1;
            }
            (to_q(&heads(&c)), s)
        })
        .collect();
    front(candidates, true)
}

pub fn solver_front(res: &ordopt::solvers::SolveResult) -> Front {
    res.outcomes
        .iter()
        .map(|o| (o.value.clone(), o.solutions.iter().cloned().collect()))
        .collect()
}
