//! Induced-subgraph searches: induced cycles, the 3-sun, and the chordality
//! classes built from them.

use crate::bitset::{combinations, ElemSet};
use crate::error::{Error, Result};
use crate::graph::{iso, Graph};

/// Forbidden patterns understood by [`forbidden_subgraph_free`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Forbidden {
    C4,
    C5,
    C6,
    ThreeSun,
    /// Induced cycles of length at least 5 in the graph or its complement.
    WeaklyChordal,
    /// Induced cycles of length at least 6; bipartite input only.
    ChordalBipartite,
}

impl Forbidden {
    pub fn parse(name: &str) -> Option<Forbidden> {
        Some(match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "c4" => Forbidden::C4,
            "c5" => Forbidden::C5,
            "c6" => Forbidden::C6,
            "three_sun" | "3sun" | "3_sun" => Forbidden::ThreeSun,
            "weakly_chordal" => Forbidden::WeaklyChordal,
            "chordal_bipartite" => Forbidden::ChordalBipartite,
            _ => return None,
        })
    }
}

/// Outcome of a forbidden-pattern search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeCheck {
    pub free: bool,
    /// Vertices of one induced copy, in cycle order for cycle patterns.
    pub witness: Option<Vec<usize>>,
}

impl FreeCheck {
    fn from_witness(w: Option<Vec<usize>>) -> FreeCheck {
        FreeCheck {
            free: w.is_none(),
            witness: w,
        }
    }
}

/// Checks that `g` has no induced copy of any listed pattern; the first
/// pattern found (in list order) supplies the witness.
pub fn forbidden_subgraph_free(g: &Graph, family: &[Forbidden]) -> Result<FreeCheck> {
    if family.contains(&Forbidden::ChordalBipartite) && !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    for &f in family {
        let w = match f {
            Forbidden::C4 => find_induced_cycle(g, 4, 4),
            Forbidden::C5 => find_induced_cycle(g, 5, 5),
            Forbidden::C6 => find_induced_cycle(g, 6, 6),
            Forbidden::ThreeSun => find_induced_copy(g, &Graph::three_sun()),
            Forbidden::WeaklyChordal => {
                find_induced_cycle(g, 5, g.len()).or_else(|| find_induced_cycle(&g.complement(), 5, g.len()))
            }
            Forbidden::ChordalBipartite => find_induced_cycle(g, 6, g.len()),
        };
        if w.is_some() {
            return Ok(FreeCheck::from_witness(w));
        }
    }
    Ok(FreeCheck::from_witness(None))
}

pub fn is_weakly_chordal(g: &Graph) -> bool {
    find_induced_cycle(g, 5, g.len()).is_none() && find_induced_cycle(&g.complement(), 5, g.len()).is_none()
}

pub fn is_chordal_bipartite(g: &Graph) -> Result<bool> {
    Ok(forbidden_subgraph_free(g, &[Forbidden::ChordalBipartite])?.free)
}

/// Free of induced 3-suns and of induced `C4`, `C5`, `C6`.
pub fn is_sun_c456_free(g: &Graph) -> bool {
    find_induced_cycle(g, 4, 6).is_none() && find_induced_copy(g, &Graph::three_sun()).is_none()
}

/// An induced cycle with between `min_len` and `max_len` vertices.
///
/// Enumerates induced paths whose smallest vertex is the start, so each cycle
/// is discovered from its minimum vertex only.
pub fn find_induced_cycle(g: &Graph, min_len: usize, max_len: usize) -> Option<Vec<usize>> {
    let min_len = min_len.max(3);
    if max_len < min_len {
        return None;
    }
    for s in 0..g.len() {
        let above = ElemSet::full(g.len()).difference(ElemSet::full(s + 1));
        let mut path = vec![s];
        for second in g.neighbors(s).intersection(above).iter() {
            path.push(second);
            if let Some(c) = grow(g, &mut path, ElemSet::EMPTY, above, min_len, max_len) {
                return Some(c);
            }
            path.pop();
        }
    }
    None
}

/// Extends an induced path starting at its minimum vertex `path[0]`.
/// `interior` is the union of closed neighbourhoods of `path[1..len-1]`.
fn grow(
    g: &Graph,
    path: &mut Vec<usize>,
    interior: ElemSet,
    allowed: ElemSet,
    min_len: usize,
    max_len: usize,
) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().expect("path is nonempty");
    let len = path.len() + 1;
    for v in g.neighbors(last).intersection(allowed).difference(interior).iter() {
        if path.contains(&v) {
            continue;
        }
        if g.has_edge(v, s) {
            if len >= min_len && len <= max_len {
                let mut c = path.clone();
                c.push(v);
                return Some(c);
            }
            continue;
        }
        if len < max_len {
            path.push(v);
            let next = interior.union(g.closed_neighbors(last));
            if let Some(c) = grow(g, path, next, allowed, min_len, max_len) {
                return Some(c);
            }
            path.pop();
        }
    }
    None
}

/// Vertices of an induced subgraph isomorphic to `pattern`, if any.
pub fn find_induced_copy(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.len();
    let m = pattern.edge_count();
    for s in combinations(g.vertices(), k) {
        let sub = g.induced(s);
        if sub.edge_count() == m && iso::graph_isomorphism(&sub, pattern).is_some() {
            return Some(s.to_vec());
        }
    }
    None
}

/// Checks that `cycle` lists the vertices of an induced cycle in order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let set: ElemSet = cycle.iter().collect();
    if set.len() != k {
        return false;
    }
    let sub = g.induced(set);
    if sub.edge_count() != k {
        return false;
    }
    (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_is_its_own_witness() {
        let c6 = Graph::cycle(6).unwrap();
        let r = forbidden_subgraph_free(&c6, &[Forbidden::WeaklyChordal]).unwrap();
        assert!(!r.free);
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 6);
        assert!(is_induced_cycle(&c6, &w));
    }

    #[test]
    fn trees_are_free() {
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let all = [Forbidden::ThreeSun, Forbidden::C4, Forbidden::C5, Forbidden::C6];
        assert!(forbidden_subgraph_free(&t, &all).unwrap().free);
    }

    #[test]
    fn chords_break_cycles() {
        let mut g = Graph::cycle(6).unwrap();
        g.add_edge(0, 3);
        assert!(find_induced_cycle(&g, 6, 6).is_none());
        let c4 = find_induced_cycle(&g, 4, 4).unwrap();
        assert!(is_induced_cycle(&g, &c4));
    }

    #[test]
    fn three_sun_found_inside_larger_graph() {
        let mut g = Graph::new(8).unwrap();
        for (u, v) in Graph::three_sun().edges() {
            g.add_edge(u + 2, v + 2);
        }
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        let w = find_induced_copy(&g, &Graph::three_sun()).unwrap();
        assert_eq!(w, vec![2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn chordal_bipartite_needs_bipartite_input() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(matches!(is_chordal_bipartite(&c5), Err(Error::NotBipartite)));
        assert!(!is_chordal_bipartite(&Graph::cycle(8).unwrap()).unwrap());
        assert!(is_chordal_bipartite(&Graph::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn complement_cycles_break_weak_chordality() {
        let c7 = Graph::cycle(7).unwrap();
        assert!(!is_weakly_chordal(&c7.complement()));
        assert!(is_weakly_chordal(&Graph::cycle(4).unwrap()));
    }
}
