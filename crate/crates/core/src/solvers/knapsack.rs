//! Ordinal knapsack by dynamic programming over items, maximising head counting vectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ordinal::{counting_vector, tail_transform, Category, OrdinalVector, Sense};
use crate::rational::{from_int, Rational};

use super::{head_of, KnapsackInstance, OutcomeRecord, ProblemKind, SolveOptions, SolveResult, Status};

struct State {
    heads: Vec<u64>,
    /// Item id sets reaching this state, each sorted ascending.
    subsets: Vec<Vec<u64>>,
}

fn weakly_max_dominates(u: &[u64], v: &[u64]) -> bool {
    u.iter().zip(v).all(|(a, b)| a >= b)
}

/// Inserts into a per-capacity state list, keeping it Pareto-maximal.
fn insert(states: &mut Vec<State>, new: State, keep_all: bool) {
    if let Some(same) = states.iter_mut().find(|s| s.heads == new.heads) {
        merge_subsets(&mut same.subsets, new.subsets, keep_all);
        return;
    }
    if states.iter().any(|s| weakly_max_dominates(&s.heads, &new.heads)) {
        return;
    }
    states.retain(|s| !weakly_max_dominates(&new.heads, &s.heads));
    states.push(new);
}

fn merge_subsets(into: &mut Vec<Vec<u64>>, from: Vec<Vec<u64>>, keep_all: bool) {
    into.extend(from);
    into.sort();
    into.dedup();
    if !keep_all {
        into.truncate(1);
    }
}

pub fn solve_knapsack(inst: &KnapsackInstance, options: SolveOptions) -> Result<SolveResult> {
    let k = inst.space().k();
    let mut table: BTreeMap<u64, Vec<State>> = BTreeMap::new();
    table.insert(
        0,
        vec![State {
            heads: vec![0; k],
            subsets: vec![Vec::new()],
        }],
    );
    for item in inst.items() {
        let mut additions = Vec::new();
        for (&used, states) in &table {
            let Some(total) = used.checked_add(item.weight) else {
                continue;
            };
            if total > inst.capacity() {
                continue;
            }
            for s in states {
                let mut heads = s.heads.clone();
                for h in &mut heads[item.category.0 - 1..] {
                    *h = h.checked_add(1).ok_or(Error::Overflow("head counting vector"))?;
                }
                let subsets = s
                    .subsets
                    .iter()
                    .map(|sub| {
                        let mut sub = sub.clone();
                        let at = sub.partition_point(|&id| id < item.id);
                        sub.insert(at, item.id);
                        sub
                    })
                    .collect();
                additions.push((total, State { heads, subsets }));
            }
        }
        for (total, state) in additions {
            insert(table.entry(total).or_default(), state, options.all_efficient);
        }
    }

    let mut front: Vec<State> = Vec::new();
    for states in table.into_values() {
        for s in states {
            insert(&mut front, s, options.all_efficient);
        }
    }
    front.sort_by(|a, b| a.heads.cmp(&b.heads));
    let outcomes = front
        .into_iter()
        .map(|s| {
            let mut record = record_for(inst, &s.subsets[0])?;
            debug_assert_eq!(record.value, s.heads.iter().map(|&h| from_int(h as i64)).collect::<Vec<Rational>>());
            record.solutions = s.subsets;
            Ok(record)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SolveResult {
        problem: ProblemKind::Knapsack,
        sense: Sense::Max,
        status: Status::Solved,
        real_objectives: 0,
        spaces: vec![inst.space().clone()],
        outcomes,
    })
}

/// Outcome record of an item subset, checking feasibility.
pub(crate) fn record_for(inst: &KnapsackInstance, ids: &[u64]) -> Result<OutcomeRecord> {
    let mut used = 0u64;
    let mut cats: Vec<Category> = Vec::with_capacity(ids.len());
    for (i, &id) in ids.iter().enumerate() {
        if ids[..i].contains(&id) {
            return Err(Error::InvalidInstance(format!("item {id} used twice")));
        }
        let item = inst
            .item(id)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown item {id}")))?;
        used = used.checked_add(item.weight).ok_or(Error::Overflow("consumption"))?;
        cats.push(item.category);
    }
    if used > inst.capacity() {
        return Err(Error::InvalidInstance(format!("subset {ids:?} exceeds the capacity")));
    }
    let c = counting_vector(&cats, inst.space())?;
    let value = head_of(&c).into_iter().map(|h| from_int(h as i64)).collect();
    Ok(OutcomeRecord {
        value,
        weights: Vec::new(),
        tails: vec![tail_transform(&c)],
        ordinal: vec![OrdinalVector::from_counts(&c)],
        counts: vec![c],
        weighted_counts: None,
        solutions: vec![ids.to_vec()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::to_rationals;
    use crate::solvers::Instance;

    #[test]
    fn three_items() {
        let inst = KnapsackInstance::from_items(5, 2, &[(1, 2, 1), (2, 3, 2), (3, 4, 1)]).unwrap();
        let res = solve_knapsack(&inst, SolveOptions { all_efficient: true }).unwrap();
        assert_eq!(res.values(), vec![to_rationals(&[1u64, 2])]);
        assert_eq!(res.all_solutions(), vec![vec![1, 2]]);
        res.verify(&Instance::Knapsack(inst)).unwrap();
    }

    #[test]
    fn zero_capacity() {
        let inst = KnapsackInstance::from_items(0, 2, &[(1, 2, 1)]).unwrap();
        let res = solve_knapsack(&inst, SolveOptions::default()).unwrap();
        assert_eq!(res.values(), vec![to_rationals(&[0u64, 0])]);
        assert!(res.outcomes[0].representative().is_empty());
    }

    #[test]
    fn equal_values_merge() {
        let inst = KnapsackInstance::from_items(2, 2, &[(5, 2, 1), (3, 2, 1)]).unwrap();
        let one = solve_knapsack(&inst, SolveOptions::default()).unwrap();
        assert_eq!(one.all_solutions(), vec![vec![3]]);
        let all = solve_knapsack(&inst, SolveOptions { all_efficient: true }).unwrap();
        assert_eq!(all.all_solutions(), vec![vec![3], vec![5]]);
    }

    #[test]
    fn incomparable_heads() {
        // one best item versus two worst items
        let inst = KnapsackInstance::from_items(2, 2, &[(1, 2, 1), (2, 1, 2), (3, 1, 2)]).unwrap();
        let res = solve_knapsack(&inst, SolveOptions::default()).unwrap();
        assert_eq!(res.values(), vec![to_rationals(&[0u64, 2]), to_rationals(&[1u64, 1])]);
    }

    #[test]
    fn record_rejects_infeasible() {
        let inst = KnapsackInstance::from_items(3, 2, &[(1, 2, 1), (2, 2, 2)]).unwrap();
        assert!(record_for(&inst, &[1, 2]).is_err());
        assert!(record_for(&inst, &[1, 1]).is_err());
        assert!(record_for(&inst, &[9]).is_err());
    }
}
