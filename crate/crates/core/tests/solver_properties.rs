mod common;

use proptest::prelude::*;

use ordopt::io::{emit_result, parse_instance, parse_result_json, write_instance, Format};
use ordopt::oracle::{self, RandomGraphSpec};
use ordopt::solvers::{
    solve_knapsack, solve_mixed, solve_shortest_path, solve_weighted_counting, GraphInstance, Instance,
    KnapsackInstance, SolveOptions, SolveResult, Status,
};

const ALL: SolveOptions = SolveOptions { all_efficient: true };
const ONE: SolveOptions = SolveOptions { all_efficient: false };

fn graph(seed: u64, real: usize, ordinal: usize) -> GraphInstance {
    let spec = RandomGraphSpec {
        real_objectives: real,
        ordinal_objectives: ordinal,
        ..RandomGraphSpec::default()
    };
    oracle::random_graph(spec, &mut oracle::seeded_rng(seed))
}

fn knapsack(seed: u64) -> KnapsackInstance {
    oracle::random_knapsack(10, 30, 4, &mut oracle::seeded_rng(seed))
}

/// Representative mode keeps exactly the lexicographically smallest solution of each value.
fn check_representatives(res: &SolveResult, want: &common::Front) -> Result<(), TestCaseError> {
    let got: Vec<_> = res.outcomes.iter().map(|o| (o.value.clone(), o.solutions.clone())).collect();
    let expected: Vec<_> = want
        .iter()
        .map(|(v, sols)| (v.clone(), vec![sols.iter().next().unwrap().clone()]))
        .collect();
    prop_assert_eq!(got, expected);
    Ok(())
}

fn status_matches(res: &SolveResult) -> bool {
    (res.status == Status::Unreachable) == res.outcomes.is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shortest_path_matches_enumeration(seed in any::<u64>()) {
        let g = graph(seed, 0, 1);
        prop_assert_eq!(common::simple_paths(&g).len() as u64, common::dag_path_count(&g));
        let want = common::expected_mixed(&g);
        let all = solve_shortest_path(&g, ALL).unwrap();
        prop_assert_eq!(common::solver_front(&all), want.clone());
        prop_assert!(status_matches(&all));
        all.verify(&Instance::Graph(g.clone())).unwrap();
        check_representatives(&solve_shortest_path(&g, ONE).unwrap(), &want)?;
    }

    #[test]
    fn mixed_matches_enumeration(seed in any::<u64>(), real in 0usize..=2, ordinal in 1usize..=2) {
        let g = graph(seed, real, ordinal);
        let want = common::expected_mixed(&g);
        let all = solve_mixed(&g, ALL).unwrap();
        prop_assert_eq!(common::solver_front(&all), want.clone());
        all.verify(&Instance::Graph(g.clone())).unwrap();
        check_representatives(&solve_mixed(&g, ONE).unwrap(), &want)?;
    }

    #[test]
    fn weighted_counting_matches_enumeration(seed in any::<u64>()) {
        let g = graph(seed, 1, 1);
        let want = common::expected_weighted(&g);
        let all = solve_weighted_counting(&g, ALL).unwrap();
        prop_assert_eq!(common::solver_front(&all), want.clone());
        all.verify(&Instance::Graph(g.clone())).unwrap();
        check_representatives(&solve_weighted_counting(&g, ONE).unwrap(), &want)?;
    }

    #[test]
    fn pure_ordinal_mixed_is_shortest_path(seed in any::<u64>(), all in any::<bool>()) {
        let g = graph(seed, 0, 1);
        let options = SolveOptions { all_efficient: all };
        let a = solve_mixed(&g, options).unwrap();
        let b = solve_shortest_path(&g, options).unwrap();
        prop_assert_eq!(a.values(), b.values());
        prop_assert_eq!(a.all_solutions(), b.all_solutions());
    }

    #[test]
    fn knapsack_matches_enumeration(seed in any::<u64>()) {
        let k = knapsack(seed);
        let want = common::expected_knapsack(&k);
        let all = solve_knapsack(&k, ALL).unwrap();
        prop_assert_eq!(common::solver_front(&all), want.clone());
        all.verify(&Instance::Knapsack(k.clone())).unwrap();
        check_representatives(&solve_knapsack(&k, ONE).unwrap(), &want)?;
    }

    #[test]
    fn larger_capacity_never_loses_ground(seed in any::<u64>(), extra in 1u64..10) {
        let k = knapsack(seed);
        let items: Vec<(u64, u64, usize)> = k.items().iter().map(|i| (i.id, i.weight, i.category.0)).collect();
        let bigger = KnapsackInstance::from_items(k.capacity() + extra, k.space().k(), &items).unwrap();
        let small = solve_knapsack(&k, ONE).unwrap().values();
        let large = solve_knapsack(&bigger, ONE).unwrap().values();
        for v in &small {
            prop_assert!(large.iter().any(|w| w.iter().zip(v).all(|(a, b)| a >= b)));
        }
    }

    #[test]
    fn removing_an_edge_never_improves_the_front(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let g = graph(seed, 0, 1);
        let drop = pick.index(g.edges().len());
        let edges: Vec<_> = g.edges().iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, e)| e.clone()).collect();
        prop_assume!(!edges.is_empty());
        let sub = GraphInstance::new(g.nodes(), 0, g.spaces().to_vec(), edges, g.source(), g.target()).unwrap();
        let full = solve_shortest_path(&g, ONE).unwrap().values();
        let part = solve_shortest_path(&sub, ONE).unwrap().values();
        for v in &part {
            prop_assert!(full.iter().any(|w| w.iter().zip(v).all(|(a, b)| a <= b)));
        }
    }

    #[test]
    fn instance_files_round_trip(seed in any::<u64>(), real in 0usize..=2) {
        let g = Instance::Graph(graph(seed, real, 2));
        prop_assert_eq!(parse_instance(&write_instance(&g)).unwrap(), g);
        let k = knapsack(seed);
        prop_assume!(!k.items().is_empty());
        let k = Instance::Knapsack(k);
        prop_assert_eq!(parse_instance(&write_instance(&k)).unwrap(), k);
    }

    #[test]
    fn results_serialize_deterministically(seed in any::<u64>()) {
        let g = graph(seed, 1, 1);
        let res = solve_mixed(&g, ALL).unwrap();
        let json = emit_result(&res, Format::Json);
        prop_assert_eq!(parse_result_json(&json).unwrap(), res.clone());
        let again = solve_mixed(&g, ALL).unwrap();
        for format in [Format::Text, Format::Json, Format::PlotData] {
            prop_assert_eq!(emit_result(&res, format), emit_result(&again, format));
        }
    }
}
