//! Randomized invariants over arbitrary small graphs.

use idcode::config_model;
use idcode::generators;
use idcode::graph::Graph;
use idcode::identify;
use idcode::randomized::{self, Girth5Mode};
use idcode::solver;
use idcode::vertex_set::VertexSet;
use proptest::prelude::*;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges_allow_isolated(n, &edges).unwrap()
}

prop_compose! {
    fn arb_graph(max_n: usize)(n in 2..=max_n)(n in Just(n), mask in any::<u64>()) -> Graph {
        graph_from_mask(n, mask)
    }
}

prop_compose! {
    fn arb_graph_and_code(max_n: usize)(g in arb_graph(max_n))(code_mask in any::<u64>(), g in Just(g)) -> (Graph, VertexSet) {
        let n = g.n();
        let code = VertexSet::from_iter(n, (0..n).filter(|&v| code_mask >> v & 1 == 1));
        (g, code)
    }
}

// Independent girth oracle: the shortest cycle through an edge (u, v) is
// the shortest u-v path avoiding that edge, plus one.
fn girth_by_edge_removal(g: &Graph) -> Option<usize> {
    let mut best = usize::MAX;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[u] = 0;
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || (y, x) == (u, v) {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            best = best.min(dist[v] + 1);
        }
    }
    (best != usize::MAX).then_some(best)
}

fn naive_separating(g: &Graph, code: &VertexSet) -> bool {
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if g.closed(u)
                .intersection(code)
                .eq(&g.closed(v).intersection(code))
            {
                return false;
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn sym_diff_cardinality_identity(g in arb_graph(11)) {
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                let lhs = g.nbhd_symmetric_difference(u, v).unwrap().len();
                let rhs = g.closed(u).len() + g.closed(v).len()
                    - 2 * g.closed(u).intersection_len(g.closed(v));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn far_pairs_have_disjoint_closed_neighbourhoods(g in arb_graph(11)) {
        for u in 0..g.n() {
            let dist = g.bfs_distances(u);
            for v in (u + 1)..g.n() {
                if dist[v] >= 3 {
                    let diff = g.nbhd_symmetric_difference(u, v).unwrap();
                    prop_assert_eq!(diff, g.closed(u).union(g.closed(v)));
                }
            }
        }
    }

    #[test]
    fn separating_shortcut_equals_all_pairs((g, code) in arb_graph_and_code(10)) {
        prop_assert_eq!(identify::is_separating(&g, &code), naive_separating(&g, &code));
    }

    #[test]
    fn girth_matches_edge_removal_oracle(g in arb_graph(10)) {
        prop_assert_eq!(g.girth(), girth_by_edge_removal(&g));
    }

    // the production scans restrict themselves to adjacent pairs; the
    // oracles here enumerate all ordered pairs instead
    #[test]
    fn forced_scan_matches_all_pairs_enumeration(g in arb_graph(10)) {
        if !g.is_twin_free() {
            return Ok(());
        }
        let n = g.n();
        let mut expected = VertexSet::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                let diff = g.nbhd_symmetric_difference(u, v).unwrap();
                if diff.len() == 1 {
                    expected.insert(diff.min().unwrap());
                }
            }
        }
        prop_assert_eq!(identify::forced_vertices(&g).unwrap().forced, expected);
    }

    #[test]
    fn inclusion_digraph_matches_all_pairs_enumeration(g in arb_graph(10)) {
        if !g.is_twin_free() {
            return Ok(());
        }
        let n = g.n();
        let mut expected = Vec::new();
        for from in 0..n {
            for to in 0..n {
                if from != to
                    && g.closed(from).is_subset_of(g.closed(to))
                    && g.closed(to).len() == g.closed(from).len() + 1
                {
                    let label = g.closed(to).difference(g.closed(from)).min().unwrap();
                    expected.push((from, to, label));
                }
            }
        }
        expected.sort_unstable();
        let h = identify::hasse_digraph(&g).unwrap();
        let mut got: Vec<(usize, usize, usize)> =
            h.arcs().iter().map(|a| (a.from, a.to, a.label)).collect();
        got.sort_unstable();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn twin_free_iff_full_set_identifies(g in arb_graph(9)) {
        let full = VertexSet::full(g.n());
        prop_assert_eq!(g.is_twin_free(), identify::is_identifying_code(&g, &full).valid);
    }

    #[test]
    fn valid_codes_stay_valid_under_supersets((g, extra) in arb_graph_and_code(9)) {
        if g.is_twin_free() {
            let base = solver::greedy_code(&g).unwrap();
            let sup = base.union(&extra);
            prop_assert!(identify::is_identifying_code(&g, &sup).valid);
        }
    }

    #[test]
    fn hitting_sets_are_exactly_codes(g in arb_graph(6)) {
        if let Ok(family) = solver::build_constraints(&g) {
            let n = g.n();
            for mask in 0u64..(1 << n) {
                let set = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                prop_assert_eq!(
                    family.is_hitting_set(&set),
                    identify::is_identifying_code(&g, &set).valid
                );
            }
        } else {
            // construction refused: there must really be a twin pair
            prop_assert!(!g.is_twin_free());
        }
    }

    #[test]
    fn greedy_repair_extends_to_valid(g in arb_graph(9), seed_mask in any::<u64>()) {
        if g.is_twin_free() {
            let start = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| seed_mask >> v & 1 == 1));
            let repaired = identify::greedy_repair(&g, &start).unwrap();
            prop_assert!(start.is_subset_of(&repaired));
            prop_assert!(identify::is_identifying_code(&g, &repaired).valid);
        }
    }

    #[test]
    fn exact_solver_matches_naive_oracle(g in arb_graph(6)) {
        if g.is_twin_free() {
            let naive = solver::solve_naive(&g).unwrap();
            let exact = solver::solve_exact(&g, None).unwrap();
            prop_assert!(exact.optimal);
            prop_assert_eq!(naive.gamma, exact.gamma);
        }
    }

    #[test]
    fn forced_vertices_lie_in_every_optimal_code(g in arb_graph(7)) {
        if g.is_twin_free() {
            let forced = identify::forced_vertices(&g).unwrap().forced;
            let exact = solver::solve_exact(&g, None).unwrap();
            prop_assert!(forced.is_subset_of(&exact.code));
        }
    }

    #[test]
    fn constructors_are_seed_deterministic(seed in any::<u64>()) {
        let petersen = generators::petersen();
        let a = randomized::girth5_construct(&petersen, seed, Girth5Mode::Case1).unwrap();
        let b = randomized::girth5_construct(&petersen, seed, Girth5Mode::Case1).unwrap();
        prop_assert_eq!(a.code, b.code);

        let c = randomized::rrg_construct(&petersen, seed).unwrap();
        let d = randomized::rrg_construct(&petersen, seed).unwrap();
        prop_assert_eq!(&c.code, &d.code);

        let m1 = config_model::sample_multigraph(12, 3, seed).unwrap();
        let m2 = config_model::sample_multigraph(12, 3, seed).unwrap();
        prop_assert_eq!(m1.edges(), m2.edges());
    }

    #[test]
    fn vertex_set_algebra_round_trips(a_mask in any::<u64>(), b_mask in any::<u64>()) {
        let n = 64;
        let a = VertexSet::from_iter(n, (0..n).filter(|&v| a_mask >> v & 1 == 1));
        let b = VertexSet::from_iter(n, (0..n).filter(|&v| b_mask >> v & 1 == 1));
        prop_assert_eq!(a.symmetric_difference(&b).symmetric_difference(&b), a.clone());
        prop_assert_eq!(
            a.union(&b).len() + a.intersection_len(&b),
            a.len() + b.len()
        );
        prop_assert_eq!(a.difference(&b).union(&a.intersection(&b)), a);
    }
}
