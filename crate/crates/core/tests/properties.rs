use mustpath_core::epe::{excluded_pairs, find_2_edge_cuts};
use mustpath_core::oracle::{random_graph, GraphClass};
use mustpath_core::query::{pep_decide, Engine};
use mustpath_core::spqr::{build_spqr, build_spqr_with_order, SplitOrder};
use mustpath_core::{parse_edge_list, ElementRef, Graph, VertexId};
use proptest::prelude::*;

fn graph(class: GraphClass) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 4usize..11, 0usize..8).prop_map(move |(seed, n, extra)| {
        let m = (n + extra).min(n * (n - 1) / 2);
        random_graph(seed, class, n, m).expect("generator succeeds")
    })
}

fn any_class() -> impl Strategy<Value = GraphClass> {
    prop_oneof![
        Just(GraphClass::Connected),
        Just(GraphClass::Biconnected),
        Just(GraphClass::Triconnected)
    ]
}

fn element(g: &Graph, k: usize) -> ElementRef {
    let vs: Vec<VertexId> = g.vertices().collect();
    let es: Vec<_> = g.edges().map(|(e, _, _)| e).collect();
    let k = k % (vs.len() + es.len());
    if k < vs.len() {
        ElementRef::Vertex(vs[k])
    } else {
        ElementRef::Edge(es[k - vs.len()])
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trips(g in any_class().prop_flat_map(graph)) {
        let again = parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(again.to_edge_list(), g.to_edge_list());
    }

    #[test]
    fn spqr_tree_is_order_independent(g in graph(GraphClass::Biconnected)) {
        let a = build_spqr(&g).unwrap();
        let b = build_spqr_with_order(&g, SplitOrder::Descending).unwrap();
        a.check_invariants(true).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        let mut want: Vec<_> = g.edges().map(|(e, x, y)| (e, x.min(y), x.max(y))).collect();
        want.sort();
        prop_assert_eq!(a.merged_real_edges(), want);
    }

    #[test]
    fn cycle_answer_ignores_element_order(
        g in any_class().prop_flat_map(graph),
        ks in proptest::collection::vec(any::<usize>(), 3),
    ) {
        let xs = [element(&g, ks[0]), element(&g, ks[1]), element(&g, ks[2])];
        prop_assume!(xs[0] != xs[1] && xs[0] != xs[2] && xs[1] != xs[2]);
        let engine = Engine::new(g.clone()).unwrap();
        let base = engine.cep_decide(xs[0], xs[1], xs[2]).unwrap();
        for [i, j, k] in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
            let v = engine.cep_decide(xs[i], xs[j], xs[k]).unwrap();
            prop_assert_eq!(v.answer, base.answer);
            prop_assert_eq!(v.reason, base.reason);
        }
        match engine.construct_cycle(xs[0], xs[1], xs[2]).unwrap() {
            Some(w) => {
                prop_assert!(base.answer);
                w.cycle.validate(&g).unwrap();
                prop_assert!(xs.iter().all(|&x| w.cycle.contains(x)));
            }
            None => prop_assert!(!base.answer),
        }
    }

    #[test]
    fn path_answer_is_symmetric(
        g in graph(GraphClass::Connected),
        ks in proptest::collection::vec(any::<usize>(), 4),
    ) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let p: Vec<VertexId> = ks.iter().map(|&k| vs[k % vs.len()]).collect();
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
        prop_assume!(distinct);
        let a = pep_decide(&g, p[0], p[1], p[2], p[3]).unwrap().answer;
        prop_assert_eq!(a, pep_decide(&g, p[1], p[0], p[2], p[3]).unwrap().answer);
        prop_assert_eq!(a, pep_decide(&g, p[0], p[1], p[3], p[2]).unwrap().answer);
    }

    #[test]
    fn excluded_pairs_are_exactly_the_negative_path_queries(
        g in graph(GraphClass::Biconnected),
        ks in proptest::collection::vec(any::<usize>(), 2),
    ) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let (s, t) = (vs[ks[0] % vs.len()], vs[ks[1] % vs.len()]);
        prop_assume!(s != t);
        let excluded = excluded_pairs(&g, s, t).unwrap();
        let inner: Vec<VertexId> = vs.iter().copied().filter(|&v| v != s && v != t).collect();
        for (i, &a) in inner.iter().enumerate() {
            for &b in &inner[i + 1..] {
                let answer = pep_decide(&g, s, t, a, b).unwrap().answer;
                prop_assert_eq!(answer, !excluded.contains(&(a, b)));
            }
        }
    }

    #[test]
    fn cut_sequence_reverses_with_the_terminals(
        g in graph(GraphClass::Triconnected),
        k in any::<usize>(),
    ) {
        let es: Vec<_> = g.edges().collect();
        let (e, s, t) = es[k % es.len()];
        let h = g.remove_edge(e).unwrap();
        let fwd = find_2_edge_cuts(&h, s, t).unwrap().cuts;
        let mut back = find_2_edge_cuts(&h, t, s).unwrap().cuts;
        back.reverse();
        prop_assert_eq!(fwd, back);
    }
}
