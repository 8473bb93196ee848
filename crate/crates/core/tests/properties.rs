use proptest::prelude::*;

use hyperarena::competition::{competition_graph, competition_graph_12_fast, competition_witness};
use hyperarena::graphs::{classify_shape, SimpleGraph};
use hyperarena::io::{
    graph_to_dot, graph_to_json, instance_to_json, parse_dot, parse_graph_json, parse_instance,
};
use hyperarena::paths::{check_path, find_path};
use hyperarena::subset::binomial;
use hyperarena::{random_hypertournament, BuildOptions, Hypertournament, VertexId, VertexSet};

fn instance() -> impl Strategy<Value = Hypertournament> {
    (4usize..=7)
        .prop_flat_map(|n| (Just(n), 3..n, any::<u64>()))
        .prop_map(|(n, k, seed)| random_hypertournament(n, k, seed).unwrap())
}

fn pair(n: usize) -> impl Strategy<Value = (VertexId, VertexId)> {
    (0..n, 1..n).prop_map(move |(x, d)| (VertexId(x), VertexId((x + d) % n)))
}

fn graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(VertexId(a), VertexId(b));
                    }
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn precedence_partitions_shared_arcs(t in instance()) {
        for x in t.vertices() {
            for y in t.vertices().filter(|&y| y != x) {
                let mut both = t.arcs_where_precedes(x, y).unwrap();
                let back = t.arcs_where_precedes(y, x).unwrap();
                prop_assert!(both.iter().all(|a| !back.contains(a)));
                both.extend(back);
                both.sort();
                let shared = t.arcs_containing_pair(x, y).unwrap();
                prop_assert_eq!(&both, &shared);
                prop_assert_eq!(shared.len() as u64, binomial(t.n() - 2, t.k() - 2));
                prop_assert_eq!(t.arcs_star(x, y).unwrap(), t.arcs_star(y, x).unwrap());
            }
        }
        prop_assert_eq!(t.arc_count() as u64, binomial(t.n(), t.k()));
    }

    #[test]
    fn at_most_one_sink(t in instance()) {
        let sinks = t.vertices().filter(|&v| t.out_neighbourhood(v).is_empty()).count();
        prop_assert!(sinks <= 1);
        prop_assert_eq!(sinks == 1, t.sink().is_some());
    }

    #[test]
    fn json_round_trip(t in instance(), rot in 0usize..64) {
        let json = instance_to_json(&t);
        prop_assert_eq!(&parse_instance(&json, BuildOptions::default()).unwrap(), &t);
        // arc order in the input is irrelevant
        let mut arcs = t.arc_lists();
        let len = arcs.len();
        arcs.rotate_left(rot % len);
        prop_assert_eq!(&Hypertournament::build(t.n(), t.k(), &arcs).unwrap(), &t);
    }

    #[test]
    fn graph_formats_round_trip(g in graph()) {
        prop_assert_eq!(&parse_graph_json(&graph_to_json(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_dot(&graph_to_dot(&g)).unwrap(), &g);
    }

    #[test]
    fn shape_is_label_invariant(g in graph(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = classify_shape(&g);
        let b = classify_shape(&g.permuted(&perm));
        prop_assert_eq!(a.tag, b.tag);
        prop_assert_eq!(a.isolated_vertex.map(|v| VertexId(perm[v.0])), b.isolated_vertex);
    }

    #[test]
    fn competition_is_monotone(t in (4usize..=6).prop_flat_map(|n| (Just(n), 3..n, any::<u64>()))
        .prop_map(|(n, k, s)| random_hypertournament(n, k, s).unwrap()))
    {
        let c11 = competition_graph(&t, 1, 1).unwrap();
        let c12 = competition_graph(&t, 1, 2).unwrap();
        let c21 = competition_graph(&t, 2, 1).unwrap();
        let c23 = competition_graph(&t, 2, 3).unwrap();
        prop_assert!(c11.is_subgraph_of(&c12));
        prop_assert!(c12.is_subgraph_of(&c23));
        prop_assert_eq!(&c12, &c21);
        // (a)-(e) each rule an edge out, so the characterization can only
        // over-report edges; at (4,3) it does (see the missing-edge fixture).
        let fast = competition_graph_12_fast(&t).unwrap();
        prop_assert!(c12.is_subgraph_of(&fast));
        if (t.n(), t.k()) != (4, 3) {
            prop_assert_eq!(&c12, &fast);
        }
    }

    #[test]
    fn witnesses_are_certificates(t in instance(), (x, y) in (4usize..=4).prop_flat_map(pair)) {
        if let Some(w) = competition_witness(&t, x, y, 1, 2).unwrap() {
            prop_assert!(check_path(&t, &w.p).is_ok());
            prop_assert!(check_path(&t, &w.q).is_ok());
            prop_assert_eq!((w.p.start(), w.q.start()), (x, y));
            prop_assert_eq!(w.p.end(), w.z);
            prop_assert_eq!(w.q.end(), w.z);
            prop_assert!(!w.p.vertices.contains(&y) && !w.q.vertices.contains(&x));
            prop_assert!(w.p.arcs.iter().all(|a| !w.q.arcs.contains(a)));
            let (p, q) = (w.p.len(), w.q.len());
            prop_assert!((p <= 1 && q <= 2) || (p <= 2 && q <= 1));
        }
    }

    #[test]
    fn found_paths_are_valid(t in instance(), (x, y) in (4usize..=4).prop_flat_map(pair), len in 1usize..4) {
        if let Some(p) = find_path(&t, x, y, len, VertexSet::EMPTY, &[]).unwrap() {
            prop_assert!(check_path(&t, &p).is_ok());
            prop_assert!(p.len() <= len);
            prop_assert_eq!((p.start(), p.end()), (x, y));
            // forbidding its first arc must not return the same path
            let again = find_path(&t, x, y, len, VertexSet::EMPTY, &p.arcs[..1]).unwrap();
            prop_assert!(again.is_none_or(|q| !q.arcs.contains(&p.arcs[0])));
        }
    }
}
