//! Bundled example instances: the drawn posets and graphs, a few standard
//! graphs, and two small CNF formulas.

use crate::error::Result;
use crate::graph::{BipartiteGraph, Graph};
use crate::hardness::CnfFormula;
use crate::io;
use crate::poset::Poset;

/// Every bundled file as `(file name, contents)`.
pub const FILES: &[(&str, &str)] = &[
    ("fig1P.poset", include_str!("../data/fig1P.poset")),
    ("fig1R.poset", include_str!("../data/fig1R.poset")),
    ("fig2.poset", include_str!("../data/fig2.poset")),
    ("fig3.poset", include_str!("../data/fig3.poset")),
    ("fig3red.poset", include_str!("../data/fig3red.poset")),
    ("fig5.col", include_str!("../data/fig5.col")),
    ("fig6.poset", include_str!("../data/fig6.poset")),
    ("fig7.poset", include_str!("../data/fig7.poset")),
    ("fig8.poset", include_str!("../data/fig8.poset")),
    ("p4.col", include_str!("../data/p4.col")),
    ("c4.col", include_str!("../data/c4.col")),
    ("c6.col", include_str!("../data/c6.col")),
    ("sat1.cnf", include_str!("../data/sat1.cnf")),
    ("unsat3.cnf", include_str!("../data/unsat3.cnf")),
];

/// Contents of a bundled file.
pub fn file(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

fn poset(name: &str) -> Poset {
    io::read_poset(file(name).expect("bundled file")).expect("bundled poset parses")
}

fn graph(name: &str) -> Graph {
    io::read_graph(file(name).expect("bundled file")).expect("bundled graph parses")
}

/// Two non-isomorphic posets with isomorphic comparability graphs.
pub fn fig1_p() -> Poset {
    poset("fig1P.poset")
}

pub fn fig1_r() -> Poset {
    poset("fig1R.poset")
}

/// Poset with four middle elements whose star extension is drawn.
pub fn fig2() -> Poset {
    poset("fig2.poset")
}

/// Poset of height 4 and its drawn height-3 reduction.
pub fn fig3() -> Poset {
    poset("fig3.poset")
}

pub fn fig3_reduced() -> Poset {
    poset("fig3red.poset")
}

/// Bipartite graph `B` with sides `{a,b,c,d}` and `{u,v,w}`.
pub fn fig5() -> BipartiteGraph {
    io::read_bipartite(file("fig5.col").expect("bundled file")).expect("bundled graph parses")
}

/// Poset whose bipartite transformation has `bp = 2 < 3 = γ`.
pub fn fig6() -> Poset {
    poset("fig6.poset")
}

/// Non-complete self-dual Helly poset.
pub fn fig7() -> Poset {
    poset("fig7.poset")
}

/// Non-complete Helly poset with `γ_os = 3 < 4 = we(MD)`.
pub fn fig8() -> Poset {
    poset("fig8.poset")
}

pub fn path4() -> Graph {
    graph("p4.col")
}

pub fn cycle4() -> Graph {
    graph("c4.col")
}

pub fn cycle6() -> Graph {
    graph("c6.col")
}

pub fn sat1() -> Result<CnfFormula> {
    io::read_cnf(file("sat1.cnf").expect("bundled file"))
}

pub fn unsat3() -> Result<CnfFormula> {
    io::read_cnf(file("unsat3.cnf").expect("bundled file"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_parses() {
        for (name, text) in FILES {
            let ok = match name.rsplit('.').next() {
                Some("poset") => io::read_poset(text).is_ok(),
                Some("col") => io::read_graph(text).is_ok(),
                Some("cnf") => io::read_cnf(text).is_ok(),
                _ => false,
            };
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(fig1_p().len(), 5);
        assert_eq!(fig2().len(), 10);
        assert_eq!(fig2().middle().len(), 4);
        assert_eq!(fig5().len(), 7);
        assert_eq!(fig7().len(), 8);
        assert_eq!(fig8().len(), 7);
    }
}
