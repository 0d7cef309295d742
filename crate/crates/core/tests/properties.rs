use centrality_core::components::{strongly_connected_components, weakly_connected_components};
use centrality_core::geometric::{self, exact_scores};
use centrality_core::naive::beta_measure;
use centrality_core::path::betweenness;
use centrality_core::traversal::{bfs_distances, distances_to};
use centrality_core::{compute, Graph, Measure, SpectralParams};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=3 * n)
            .prop_map(move |arcs| Graph::from_arcs(n, arcs).unwrap())
    })
}

/// A Hamiltonian ring plus random arcs.
fn strongly_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |extra| {
            let ring = (0..n).map(|i| (i, (i + 1) % n));
            Graph::from_arcs(n, ring.chain(extra)).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.num_nodes();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph_and_missing_arc(max_n: usize) -> impl Strategy<Value = (Graph, usize, usize)> {
    graph(max_n)
        .prop_filter("needs two nodes", |g| g.num_nodes() >= 2)
        .prop_flat_map(|g| {
            let n = g.num_nodes();
            (Just(g), 0..n, 0..n)
        })
        .prop_filter("absent non-loop arc", |(g, x, y)| x != y && !g.has_arc(*x, *y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn transpose_swaps_directions(g in graph(12)) {
        let t = g.transpose();
        prop_assert_eq!(t.transpose(), g.clone());
        for x in 0..g.num_nodes() {
            prop_assert_eq!(g.successors(x), t.predecessors(x));
            prop_assert_eq!(distances_to(&g, x).unwrap(), bfs_distances(&t, x).unwrap());
        }
    }

    #[test]
    fn strong_components_refine_weak_ones(g in graph(14)) {
        let s = strongly_connected_components(&g);
        let w = weakly_connected_components(&g);
        prop_assert!(s.num_components() >= w.num_components());
        for (u, v) in g.arcs() {
            prop_assert_eq!(w.component_of(u), w.component_of(v));
        }
        for u in 0..g.num_nodes() {
            for v in 0..g.num_nodes() {
                if s.component_of(u) == s.component_of(v) {
                    prop_assert_eq!(w.component_of(u), w.component_of(v));
                }
            }
        }
    }

    #[test]
    fn harmonic_is_bounded_by_coreachable_count(g in graph(14)) {
        let h = geometric::harmonic(&g).scores;
        for x in 0..g.num_nodes() {
            let co = distances_to(&g, x).unwrap().iter().filter(|d| d.is_some()).count() - 1;
            let indeg = g.predecessors(x).iter().filter(|&&y| y != x).count() as f64;
            prop_assert!(h[x] <= co as f64 + 1e-12);
            prop_assert!(h[x] >= indeg - 1e-12);
        }
    }

    #[test]
    fn harmonic_and_degree_grow_with_an_arc((g, x, y) in graph_and_missing_arc(12)) {
        let after = g.with_arc(x, y).unwrap();
        let before_h = exact_scores::harmonic(&g).unwrap();
        let after_h = exact_scores::harmonic(&after).unwrap();
        prop_assert!(after_h[y] > before_h[y]);
        for z in 0..g.num_nodes() {
            prop_assert!(after_h[z] >= before_h[z]);
        }
        prop_assert!(geometric::indegree(&after).get(y) > geometric::indegree(&g).get(y));
    }

    #[test]
    fn lin_is_n_squared_closeness_when_strongly_connected(g in strongly_connected(12)) {
        let n2 = (g.num_nodes() * g.num_nodes()) as i128;
        let l = exact_scores::lin(&g);
        let c = exact_scores::closeness(&g);
        for x in 0..g.num_nodes() {
            prop_assert_eq!(l[x], c[x] * n2);
        }
    }

    #[test]
    fn beta_measure_is_at_most_indegree(g in graph(14)) {
        let b = beta_measure(&g).scores;
        for x in 0..g.num_nodes() {
            prop_assert!(b[x] <= g.indegree(x) as f64 + 1e-12);
        }
        let total: f64 = b.iter().sum();
        let sources = (0..g.num_nodes()).filter(|&u| g.outdegree(u) > 0).count();
        prop_assert!((total - sources as f64).abs() < 1e-9);
    }

    #[test]
    fn scores_follow_relabeling((g, perm) in graph_and_perm(10)) {
        let h = g.permute(&perm).unwrap();
        let params = SpectralParams::default();
        for m in [Measure::Harmonic, Measure::Closeness, Measure::Lin, Measure::Betweenness, Measure::Salsa,
                  Measure::PageRank, Measure::IndegreeCo, Measure::BetaWeak] {
            let a = compute(&g, m, &params).unwrap().scores;
            let b = compute(&h, m, &params).unwrap().scores;
            for x in 0..g.num_nodes() {
                prop_assert!((a[x] - b[perm[x]]).abs() <= 1e-9 * a[x].abs().max(1.0), "{}", m.id());
            }
        }
    }

    #[test]
    fn betweenness_is_nonnegative_and_zero_on_sinks(g in graph(14)) {
        let b = betweenness(&g).scores;
        for x in 0..g.num_nodes() {
            prop_assert!(b[x] >= 0.0);
            let out = g.successors(x).iter().any(|&y| y != x);
            let inn = g.predecessors(x).iter().any(|&y| y != x);
            if !out || !inn {
                prop_assert_eq!(b[x], 0.0);
            }
        }
    }

    #[test]
    fn pagerank_mass_is_at_most_one(g in graph(14), alpha in 0.0f64..0.99) {
        let p = compute(&g, Measure::PageRank, &SpectralParams::default().with_alpha(alpha)).unwrap();
        let mass: f64 = p.scores.iter().sum();
        prop_assert!(mass <= 1.0 + 1e-9);
        prop_assert!(p.scores.iter().all(|&v| v >= (1.0 - alpha) / g.num_nodes() as f64 - 1e-12));
    }
}
