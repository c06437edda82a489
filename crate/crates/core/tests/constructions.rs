mod common;

use common::*;
use unicolor_core::budget::Unlimited;
use unicolor_core::census::{find_unique_k_witnesses, CensusTask};
use unicolor_core::colouring::{
    chi_cr, chromatic_number, is_proper, is_uniquely_k_colourable, sigma, xu_slack,
};
use unicolor_core::constructions::{
    builtin, extend_uniquely, figure1_graphs, independent_transversals, iterate_nu, nesetril_step,
    nu, ConstructionError,
};
use unicolor_core::graph::{clique_number, vertex_connectivity_at_least};
use unicolor_core::{is_isomorphic, ColouredGraph, Ratio};

/// Uniquely 3-colourable graphs on up to seven vertices, with their colourings.
fn small_unique_threes() -> Vec<ColouredGraph> {
    let mut out = Vec::new();
    for n in 3..=7 {
        let r = find_unique_k_witnesses(CensusTask::new(n, 3), &mut Unlimited).unwrap();
        for w in r.witnesses {
            out.push(ColouredGraph::new(w.graph, w.colouring).unwrap());
        }
    }
    out
}

#[test]
fn nu_keeps_unique_colourability() {
    let seeds = small_unique_threes();
    assert!(seeds.len() > 20);
    for h in &seeds {
        let g = nu(h).unwrap();
        assert!(is_uniquely_k_colourable(g.graph(), 4), "{h:?}");
    }
}

#[test]
fn figure1_graphs_are_witnesses() {
    let graphs = figure1_graphs();
    for g in &graphs {
        assert_eq!(g.order(), 12);
        assert_eq!(clique_number(g.graph()), 2);
        assert!(is_uniquely_k_colourable(g.graph(), 3));
        assert_eq!(brute_partitions(g.graph(), 3), vec![g.colouring().clone()]);
        assert_eq!(sigma(g.graph()), Ok(4));
        assert_eq!(chi_cr(g.graph()), Ok(Ratio::from_integer(3)));
        assert!(xu_slack(g.graph(), 3) >= 0);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(!is_isomorphic(graphs[i].graph(), graphs[j].graph()).unwrap());
        }
    }
}

#[test]
fn nu_of_figure1_graphs() {
    for h in figure1_graphs() {
        let g = iterate_nu(&h, 1).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(clique_number(g.graph()), 3);
        assert_eq!(g.colouring().class_sizes(), vec![12; 4]);
        assert_eq!(
            g.graph().min_degree(),
            Some(2 * h.graph().min_degree().unwrap() + 1)
        );
        assert!(vertex_connectivity_at_least(g.graph(), 3));
        assert_eq!(chromatic_number(g.graph()), 4);
        assert_eq!(
            iterate_nu(&h, 2),
            Err(ConstructionError::Overflow { order: 240 })
        );
    }
}

#[test]
fn extension_keeps_unique_colourability() {
    for h in small_unique_threes().iter().take(10) {
        for i in 0..3 {
            let g = extend_uniquely(h, i).unwrap();
            assert!(is_uniquely_k_colourable(g.graph(), 3));
            assert_eq!(
                g.colouring().class_sizes()[i],
                h.colouring().class_sizes()[i] + 1
            );
        }
    }
}

#[test]
fn nesetril_on_paths() {
    for n in [6, 8, 10, 12] {
        let p = builtin(&format!("P{n}")).unwrap();
        let want = brute_transversals(p.graph(), p.colouring());
        assert_eq!(independent_transversals(&p).len(), want);
        match nesetril_step(&p) {
            Ok(g) => {
                assert_eq!(g.colouring().class_sizes()[2], want);
                assert!(is_proper(g.graph(), g.colouring()));
                assert!(chromatic_number(g.graph()) <= 3);
            }
            Err(e) => assert_eq!(e, ConstructionError::Overflow { order: n + want }),
        }
        if n == 6 {
            assert_eq!(want, 2);
        }
    }
}
