//! Values read off the drawn figures and worked examples.

use osdom::figures;
use osdom::graph::are_isomorphic;
use osdom::hardness::{canonical_formulas, reduce_to_poset, sat_bruteforce};
use osdom::helly::{is_complete_helly_poset, is_helly_poset};
use osdom::io;
use osdom::solvers::{
    biclique_partition, domination, os_domination, weighted_clique_partition, BicliqueMode, DominationVariant,
    OsMethod, SolveOptions,
};
use osdom::transforms::{bipartite_to_b4, bipartite_transformation, graded_poset, middle_graph, red3, star_extension};
use osdom::{Error, Poset};

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn os(p: &Poset) -> usize {
    os_domination(p, OsMethod::Direct, &opts()).unwrap().value
}

#[test]
fn figure1_same_comparability_graph_different_values() {
    let (p, r) = (figures::fig1_p(), figures::fig1_r());
    assert!(!p.is_isomorphic(&r).unwrap());
    assert!(are_isomorphic(&p.comparability_graph(), &r.comparability_graph()).unwrap());
    assert_eq!(os(&p), 2);
    assert_eq!(os(&r), 1);
}

#[test]
fn figure2_star_extension() {
    let p = figures::fig2();
    let s = star_extension(&p);
    assert_eq!(s.len(), p.len() + 2 * p.middle().len());
    let g = domination(&s.comparability_graph(), DominationVariant::Plain, &opts())
        .unwrap()
        .value;
    assert_eq!(g, os(&p));
    assert_eq!(os_domination(&p, OsMethod::ViaStar, &opts()).unwrap().value, os(&p));
}

#[test]
fn figure3_reduction_matches_drawing() {
    let p = figures::fig3();
    let q = red3(&p).unwrap();
    assert!(q.is_isomorphic(&figures::fig3_reduced()).unwrap());
    assert_eq!(os(&p), os(&q));
}

#[test]
fn graded_posets_of_p4_and_c4() {
    for g in [figures::path4(), figures::cycle4()] {
        let p = graded_poset(&g, 3).unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(os(&p), 3);
    }
}

#[test]
fn figure5_b4() {
    let b = figures::fig5();
    let p = bipartite_to_b4(&b).unwrap();
    assert_eq!(p.len(), 14);
    assert_eq!(p.height(), 4);
    let gt = domination(b.graph(), DominationVariant::Total, &opts()).unwrap().value;
    assert_eq!(os(&p), gt);
}

#[test]
fn figure6_bipartite_transformation() {
    let p = figures::fig6();
    let b = bipartite_transformation(&p);
    assert_eq!(b.len(), 8);
    let g = b.graph();
    let v = g.index_of("2'").unwrap();
    let mut nbrs = g.labels_of(g.neighbors(v));
    nbrs.sort();
    assert_eq!(nbrs, ["2''", "3''", "6''"]);
    let bp = biclique_partition(&b, BicliqueMode::General, None, &opts())
        .unwrap()
        .value;
    let stars = biclique_partition(&b, BicliqueMode::StarDoubleStar, Some(&p), &opts())
        .unwrap()
        .value;
    assert_eq!((bp, stars), (2, 2));
    assert_eq!(domination(g, DominationVariant::Plain, &opts()).unwrap().value, 3);
    assert_eq!(os(&p), 2);
}

#[test]
fn figure7_self_dual_helly_not_complete() {
    let p = figures::fig7();
    assert!(p.is_isomorphic(&p.dual()).unwrap());
    assert!(is_helly_poset(&p).unwrap().holds);
    assert!(!is_complete_helly_poset(&p).unwrap().holds);
}

#[test]
fn figure8_strict_inequality() {
    let p = figures::fig8();
    assert!(is_helly_poset(&p).unwrap().holds);
    assert!(!is_complete_helly_poset(&p).unwrap().holds);
    let we = weighted_clique_partition(&middle_graph(&p).unwrap(), &opts())
        .unwrap()
        .value;
    assert_eq!((os(&p), we), (3, 4));
}

#[test]
fn reduction_sizes_and_small_instances() {
    let sat = figures::sat1().unwrap();
    let out = reduce_to_poset(&sat, 4).unwrap();
    assert_eq!(out.poset.len(), 6);
    assert!(sat_bruteforce(&sat).unwrap());
    let unsat = figures::unsat3().unwrap();
    assert!(!sat_bruteforce(&unsat).unwrap());
    for k in 4..=6 {
        let out = reduce_to_poset(&unsat, k).unwrap();
        assert_eq!(out.poset.len(), 9 * (k - 2) + 12);
        assert!(os(&out.poset) > out.threshold);
    }
    assert!(matches!(reduce_to_poset(&sat, 3), Err(Error::Param(_))));
}

#[test]
fn canonical_formula_counts() {
    assert_eq!(canonical_formulas(1).len(), 2);
    assert_eq!(canonical_formulas(2).len(), 37);
}

#[test]
fn figure_files_round_trip() {
    for (name, text) in figures::FILES {
        if name.ends_with(".poset") {
            let p = io::read_poset(text).unwrap();
            let canon = io::write_poset(&p);
            assert_eq!(io::write_poset(&io::read_poset(&canon).unwrap()), canon, "{name}");
        }
    }
}

#[test]
fn malformed_files() {
    let e = io::read_poset("poset 3\ncover 0 1\ncover 0\n").unwrap_err();
    assert!(matches!(e, Error::Format { line: 3, .. }), "{e:?}");
    let e = io::read_graph("p edge 3 2\ne 1 2\n").unwrap_err();
    assert!(matches!(e, Error::Format { .. }), "{e:?}");
}
