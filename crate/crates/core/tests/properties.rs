use std::collections::BTreeSet;

use proptest::prelude::*;
use unigraph::structure::check_block_bound;
use unigraph::{
    apply_rule, decompose, enumerate_realizations, is_unigraphic, layout, ChordDiagram, DegreeSequence, PolytopeGraph,
    RewriteRule,
};

fn graph(max_n: usize) -> impl Strategy<Value = PolytopeGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            PolytopeGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_with_permutation(max_n: usize) -> impl Strategy<Value = (PolytopeGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm: Vec<usize> = (0..g.vertex_count()).collect();
        (Just(g), Just(perm).prop_shuffle())
    })
}

/// Greedily keep the valid chords of a random candidate list.
fn diagram(min_rim: usize, max_rim: usize) -> impl Strategy<Value = ChordDiagram> {
    (min_rim..=max_rim).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |candidates| {
            let mut kept: Vec<(usize, usize)> = Vec::new();
            for (a, b) in candidates {
                let mut trial = kept.clone();
                trial.push((a, b));
                if ChordDiagram::new(n, trial.iter().copied()).is_ok() {
                    kept = trial;
                }
            }
            ChordDiagram::new(n, kept).unwrap()
        })
    })
}

fn rotate(cd: &ChordDiagram, shift: usize, reflect: bool) -> ChordDiagram {
    let n = cd.rim();
    let map = |v: usize| {
        let v = if reflect { (n - v) % n } else { v };
        (v + shift) % n
    };
    ChordDiagram::new(n, cd.chords().iter().map(|&(a, b)| (map(a), map(b)))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_permutation(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
        let back = g.canonical_form().to_graph();
        prop_assert!(back.is_isomorphic(&g));
        prop_assert_eq!(back.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(PolytopeGraph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn sequence_text_round_trip(entries in proptest::collection::vec(0usize..20, 1..30)) {
        let s = DegreeSequence::new(entries);
        prop_assert_eq!(s.to_string().parse::<DegreeSequence>().unwrap(), s.clone());
        prop_assert_eq!(s.to_comma_string().parse::<DegreeSequence>().unwrap(), s);
    }

    #[test]
    fn dihedral_canonical_is_a_class_invariant(cd in diagram(3, 16), shift in 0usize..16, reflect: bool) {
        let canon = cd.dihedral_canonical();
        prop_assert!(canon.is_dihedral_canonical());
        prop_assert_eq!(canon.dihedral_canonical(), canon.clone());
        let moved = rotate(&cd, shift % cd.rim(), reflect);
        prop_assert_eq!(moved.dihedral_canonical(), canon);
        prop_assert_eq!(moved.chord_degree_sequence(), cd.chord_degree_sequence());
    }

    #[test]
    fn diagram_text_and_json_round_trip(cd in diagram(3, 16)) {
        prop_assert_eq!(cd.to_string().parse::<ChordDiagram>().unwrap(), cd.clone());
        let json = serde_json::to_string(&cd).unwrap();
        prop_assert_eq!(serde_json::from_str::<ChordDiagram>(&json).unwrap(), cd);
    }

    #[test]
    fn polytopes_are_radius_one_3_polytopes(cd in diagram(3, 16)) {
        let f = cd.to_polytope();
        prop_assert_eq!(f.vertex_count(), cd.order());
        prop_assert!(f.is_planar());
        prop_assert!(f.is_k_connected(3));
        prop_assert_eq!(f.radius().unwrap(), 1);
        prop_assert_eq!(f.degree_sequence(), cd.chord_degree_sequence().to_degree_sequence());
        prop_assert_eq!(f.edge_count(), 2 * cd.rim() + cd.chords().len());
    }

    #[test]
    fn from_polytope_recovers_the_class((cd, perm) in diagram(3, 14).prop_flat_map(|cd| {
        let perm: Vec<usize> = (0..cd.order()).collect();
        (Just(cd), Just(perm).prop_shuffle())
    })) {
        let f = cd.to_polytope().relabel(&perm);
        let back = ChordDiagram::from_polytope(&f).unwrap();
        prop_assert!(back.is_dihedral_canonical());
        prop_assert_eq!(back.to_polytope().canonical_form(), f.canonical_form());
    }

    #[test]
    fn layout_re_embeds_chord_graphs(cd in diagram(3, 16)) {
        let g = cd.chord_graph();
        let again = layout(&g, cd.rim()).unwrap();
        prop_assert!(again.chord_graph().is_isomorphic(&g));
        prop_assert!(again.is_dihedral_canonical());
    }

    #[test]
    fn rules_preserve_the_degree_multiset(cd in diagram(4, 14)) {
        for rule in RewriteRule::ALL {
            for r in apply_rule(&cd, rule) {
                prop_assert_eq!(r.rim(), cd.rim());
                prop_assert_eq!(r.chord_degree_sequence(), cd.chord_degree_sequence());
                prop_assert!(r.to_polytope().is_planar());
            }
        }
    }

    #[test]
    fn decomposition_partitions_the_vertices(cd in diagram(3, 16)) {
        let d = decompose(&cd.chord_graph());
        let mut all: Vec<usize> = d.z_set.iter().chain(&d.y_set).chain(&d.b_vertices).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..cd.rim()).collect::<Vec<_>>());
        for block in &d.blocks {
            prop_assert!(block.vertices.len() <= 2 || block.edges.len() + 3 <= 2 * block.vertices.len());
        }
    }

    #[test]
    fn first_block_bound_holds_everywhere(cd in diagram(3, 16)) {
        let a = cd.to_polytope().degree_sequence().threes();
        let r = check_block_bound(&decompose(&cd.chord_graph()), a);
        prop_assert!(r.eq4.holds, "{} {:?}", cd, r.eq4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_finds_every_realisation(cd in diagram(4, 9)) {
        let f = cd.to_polytope();
        let s = f.degree_sequence();
        let report = enumerate_realizations(&s, None);
        prop_assert!(!report.truncated);
        let classes: BTreeSet<_> = report.representatives.iter().map(|r| r.to_polytope().canonical_form()).collect();
        prop_assert_eq!(classes.len(), report.class_count);
        prop_assert!(classes.contains(&f.canonical_form()));
        prop_assert_eq!(is_unigraphic(&s), report.class_count == 1);
        for r in &report.representatives {
            prop_assert_eq!(r.to_polytope().degree_sequence(), s.clone());
        }
    }
}
