mod common;

use common::{connected_graph, shuffle, tree_from_pruefer};
use excessive_index::lab::{canonical_form, read_jsonl, write_jsonl, TrialReport, Verdict};
use excessive_index::prelude::*;
use excessive_index::splitting::{is_splitting_set, splitting_number};
use proptest::prelude::*;
use serde_json::json;

fn pruefer(max_n: usize) -> impl Strategy<Value = Vec<usize>> {
    (2..=max_n).prop_flat_map(|n| prop::collection::vec(0..n, n - 2))
}

fn small_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (
        pruefer(max_n),
        prop::collection::vec((0usize..64, 0usize..64), 0..=max_extra),
    )
        .prop_map(|(seq, extra)| connected_graph(&seq, &extra))
}

fn keys() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), 16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tree_code_ignores_labels(seq in pruefer(14), k in keys()) {
        let t = tree_from_pruefer(&seq);
        prop_assert_eq!(canonical_tree_code(&t).unwrap(), canonical_tree_code(&shuffle(&t, &k)).unwrap());
    }

    #[test]
    fn graph_form_ignores_labels(g in small_graph(8, 12), k in keys()) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&shuffle(&g, &k)).unwrap());
    }

    #[test]
    fn text_formats_round_trip(g in small_graph(20, 30)) {
        prop_assert_eq!(&Graph::from_graph6(&g.to_graph6()).unwrap(), &g);
        prop_assert_eq!(&Graph::from_edge_list(&g.to_edge_list()).unwrap(), &g);
    }

    #[test]
    fn caterpillar_notation_round_trips(d in prop::collection::vec(0usize..4, 1..7)) {
        let spec = CaterpillarSpec::new(d).unwrap();
        let g = build_caterpillar(&spec).unwrap();
        let text = g.to_cat_notation().unwrap();
        let h = load_graph(&text, GraphFormat::CatNotation).unwrap();
        prop_assert_eq!(canonical_tree_code(&g).unwrap(), canonical_tree_code(&h).unwrap());
    }

    #[test]
    fn extension_is_inherited_by_submatchings(g in small_graph(10, 8), m in 1usize..5, pick in any::<u64>()) {
        for h in enumerate_matchings(&g, 2.min(m)) {
            if extends_to(&g, h, m) {
                let sub = EdgeSet(h.edges().bits() & pick);
                let sub = Matching::new(&g, sub).unwrap();
                prop_assert!(extends_to(&g, sub, m));
            }
        }
    }

    #[test]
    fn equalized_coloring_is_balanced(seq in pruefer(14)) {
        let t = tree_from_pruefer(&seq);
        let c = equalized_coloring(&t);
        prop_assert!(c.is_proper());
        prop_assert_eq!(c.len(), chromatic_index(&t));
        prop_assert_eq!(c.covered(), t.all_edges());
        let sizes = c.sizes();
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
    }

    #[test]
    fn index_sits_between_bounds_and_carries_a_cover(g in small_graph(7, 6), m in 2usize..5) {
        let r = exact_excessive_index(&g, m, &SolveOptions::default()).unwrap();
        match r.value.finite() {
            None => prop_assert!(!is_m_coverable(&g, m)),
            Some(v) => {
                let w = r.witness.as_ref().unwrap();
                prop_assert!(validate_cover(&g, m, w.matchings()).is_ok());
                prop_assert_eq!(w.len(), v);
                prop_assert!(v >= lower_bound(&g, m).unwrap().max);
                prop_assert!(v >= compatible_value(&g, m));
                prop_assert_eq!(is_compatible(&g, m).unwrap(), v == compatible_value(&g, m));
            }
        }
    }

    #[test]
    fn splitting_witness_is_valid_and_bounds_the_index(g in small_graph(7, 5), m in 3usize..5, t in 1usize..3) {
        prop_assume!(t < m);
        let r = splitting_number(&g, m, t).unwrap();
        if let Some(c) = r.certificate {
            prop_assert_eq!(c.size(), r.value);
            prop_assert!(is_splitting_set(&g, c.edge_set, m, t));
        }
        if let Some(v) = exact_excessive_index(&g, m, &SolveOptions::default()).unwrap().value.finite() {
            prop_assert!(v >= r.value.div_ceil(t));
        }
    }

    #[test]
    fn adding_a_leaf_raises_the_index_by_at_most_one(seq in pruefer(10), at in 0usize..10, m in 3usize..5) {
        let t = tree_from_pruefer(&seq);
        let s = t.with_leaf(at % t.vertex_count()).unwrap();
        let solve = |g: &Graph| exact_excessive_index(g, m, &SolveOptions::default()).unwrap().value.finite();
        if let Some(a) = solve(&t) {
            let b = solve(&s);
            prop_assert!(b.is_some_and(|b| b <= a + 1), "{a} then {b:?}");
        }
    }

    #[test]
    fn formulas_agree_with_search(g in small_graph(7, 6), m in 2usize..4) {
        prop_assume!(is_m_coverable(&g, m));
        let basic = SolveOptions { bounds: BoundMode::Basic, ..SolveOptions::default() };
        let exact = exact_excessive_index(&g, m, &basic).unwrap().value;
        prop_assert_eq!(formula_index_small_m(&g, m).unwrap().value, exact);
    }

    #[test]
    fn reports_round_trip(claim in "[a-z]{1,8}(-[a-z0-9]{1,6}){0,3}", millis in any::<u32>(), n in any::<i32>()) {
        let r = TrialReport {
            claim,
            instance: "x".into(),
            expected: "y".into(),
            computed: json!({"n": n}),
            verdict: Verdict::Confirmed,
            millis: millis as u64,
        };
        let mut buf = Vec::new();
        write_jsonl(&mut buf, std::slice::from_ref(&r)).unwrap();
        prop_assert_eq!(read_jsonl(&buf[..]).unwrap(), vec![r]);
    }
}

#[test]
fn too_many_edges_is_rejected() {
    let pairs = (0..12).flat_map(|j| (0..j).map(move |i| (i, j)));
    assert_eq!(Graph::new(12, pairs), Err(GraphError::TooManyEdges(66)));
}
