//! Multi-objective label-correcting search over nonnegative edge cost vectors.

use std::collections::VecDeque;

use crate::ordinal::weakly_pareto_dominates;
use crate::rational::Scalar;

use super::instance::GraphInstance;

struct Label<T> {
    node: usize,
    value: Vec<T>,
    /// `(edge index, predecessor label)`; empty only for the root label.
    preds: Vec<(usize, usize)>,
    alive: bool,
}

/// Non-dominated values at the target, each with every simple path attaining it
/// (edge indices in source-to-target order, sorted by edge-id sequence).
pub(crate) struct ParetoPaths<T> {
    pub(crate) outcomes: Vec<(Vec<T>, Vec<Vec<usize>>)>,
}

pub(crate) fn label_correcting<T: Scalar>(g: &GraphInstance, costs: &[Vec<T>]) -> ParetoPaths<T> {
    debug_assert_eq!(costs.len(), g.edges().len());
    let dim = costs.first().map_or(0, Vec::len);
    let out = g.out_edges();
    let mut labels = vec![Label {
        node: g.source() - 1,
        value: vec![T::zero(); dim],
        preds: Vec::new(),
        alive: true,
    }];
    let mut at_node: Vec<Vec<usize>> = vec![Vec::new(); g.nodes()];
    at_node[g.source() - 1].push(0);
    let mut queue = VecDeque::from([0usize]);

    while let Some(li) = queue.pop_front() {
        if !labels[li].alive {
            continue;
        }
        let u = labels[li].node;
        for &ei in &out[u] {
            let v = g.edges()[ei].to - 1;
            let value: Vec<T> = labels[li]
                .value
                .iter()
                .zip(&costs[ei])
                .map(|(a, b)| a.clone() + b.clone())
                .collect();
            if let Some(&same) = at_node[v].iter().find(|&&o| labels[o].value == value) {
                if !labels[same].preds.contains(&(ei, li)) {
                    labels[same].preds.push((ei, li));
                }
                continue;
            }
            let dominated = at_node[v]
                .iter()
                .any(|&o| weakly_pareto_dominates(&labels[o].value, &value).expect("equal dimensions"));
            if dominated {
                continue;
            }
            at_node[v].retain(|&o| {
                let keep = !weakly_pareto_dominates(&value, &labels[o].value).expect("equal dimensions");
                if !keep {
                    labels[o].alive = false;
                }
                keep
            });
            let id = labels.len();
            labels.push(Label {
                node: v,
                value,
                preds: vec![(ei, li)],
                alive: true,
            });
            at_node[v].push(id);
            queue.push_back(id);
        }
    }

    let mut outcomes: Vec<(Vec<T>, Vec<Vec<usize>>)> = at_node[g.target() - 1]
        .iter()
        .map(|&li| {
            let mut paths = Vec::new();
            let mut visited = vec![false; g.nodes()];
            visited[g.target() - 1] = true;
            backtrack(g, &labels, li, &mut visited, &mut Vec::new(), &mut paths);
            paths.sort_by_key(|p: &Vec<usize>| p.iter().map(|&e| g.edges()[e].id).collect::<Vec<_>>());
            (labels[li].value.clone(), paths)
        })
        .filter(|(_, paths)| !paths.is_empty())
        .collect();
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));
    ParetoPaths { outcomes }
}

fn backtrack<T>(
    g: &GraphInstance,
    labels: &[Label<T>],
    li: usize,
    visited: &mut [bool],
    suffix: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) {
    debug_assert!(labels[li].alive, "prefix label dominated at node {}", labels[li].node + 1);
    if li == 0 {
        paths.push(suffix.iter().rev().copied().collect());
        return;
    }
    for &(ei, pi) in &labels[li].preds {
        let from = g.edges()[ei].from - 1;
        if visited[from] {
            continue;
        }
        visited[from] = true;
        suffix.push(ei);
        backtrack(g, labels, pi, visited, suffix, paths);
        suffix.pop();
        visited[from] = false;
    }
}
