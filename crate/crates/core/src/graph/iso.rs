//! Isomorphism testing for small graphs and relations.
//!
//! Plain backtracking over vertex images, pruned by degree signatures and by
//! consistency with the partial map.

use crate::bitset::ElemSet;
use crate::error::{check_size, Result};
use crate::graph::Graph;

/// Vertex cap applied by [`are_isomorphic`].
pub const DEFAULT_SIZE_CAP: usize = 12;

/// Graph isomorphism test, refusing graphs above [`DEFAULT_SIZE_CAP`].
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_capped(g1, g2, DEFAULT_SIZE_CAP)
}

pub fn are_isomorphic_capped(g1: &Graph, g2: &Graph, cap: usize) -> Result<bool> {
    check_size(g1.len().max(g2.len()), cap)?;
    Ok(graph_isomorphism(g1, g2).is_some())
}

/// An explicit isomorphism `g1 -> g2`, without any size cap.
pub fn graph_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.len() != g2.len() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let a: Vec<ElemSet> = (0..g1.len()).map(|v| g1.neighbors(v)).collect();
    let b: Vec<ElemSet> = (0..g2.len()).map(|v| g2.neighbors(v)).collect();
    find_isomorphism(&a, &b)
}

type Signature = (usize, usize, Vec<(usize, usize)>, Vec<(usize, usize)>);

/// Per-vertex invariant of a directed relation: out/in degree plus the sorted
/// degree pairs of out- and in-neighbours.
fn signature(rel: &[ElemSet], inv: &[ElemSet], v: usize) -> Signature {
    let mut outs: Vec<_> = rel[v].iter().map(|w| (rel[w].len(), inv[w].len())).collect();
    let mut ins: Vec<_> = inv[v].iter().map(|w| (rel[w].len(), inv[w].len())).collect();
    outs.sort_unstable();
    ins.sort_unstable();
    (rel[v].len(), inv[v].len(), outs, ins)
}

fn inverse(rel: &[ElemSet]) -> Vec<ElemSet> {
    let mut inv = vec![ElemSet::EMPTY; rel.len()];
    for (u, s) in rel.iter().enumerate() {
        for v in s.iter() {
            inv[v].insert(u);
        }
    }
    inv
}

/// Finds `f` with `v ∈ a[u] ⇔ f(v) ∈ b[f(u)]` for all `u, v`.
///
/// Works for symmetric relations (graphs) and strict orders alike.
pub fn find_isomorphism(a: &[ElemSet], b: &[ElemSet]) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let (ia, ib) = (inverse(a), inverse(b));
    let sa: Vec<_> = (0..n).map(|v| signature(a, &ia, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| signature(b, &ib, v)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }

    // Candidate lists per vertex of `a`; process rare signatures first, then
    // prefer vertices adjacent to ones already placed.
    let cands: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&w| sb[w] == sa[v]).collect()).collect();
    let mut order = Vec::with_capacity(n);
    let mut placed = ElemSet::EMPTY;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .min_by_key(|&v| {
                let touches = a[v].union(ia[v]).intersects(placed);
                (!touches, cands[v].len(), v)
            })
            .expect("unplaced vertex exists");
        placed.insert(next);
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = ElemSet::EMPTY;
    if extend(a, b, &cands, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &[ElemSet],
    b: &[ElemSet],
    cands: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut ElemSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for &w in &cands[v] {
        if used.contains(w) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let fu = map[u];
            a[u].contains(v) == b[fu].contains(w) && a[v].contains(u) == b[w].contains(fu)
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used.insert(w);
        if extend(a, b, cands, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn relabeled_path() {
        let p = Graph::path(4).unwrap();
        let q = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let f = graph_isomorphism(&p, &q).unwrap();
        for (u, v) in p.edges() {
            assert!(q.has_edge(f[u], f[v]));
        }
    }

    #[test]
    fn c6_is_not_two_triangles() {
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(13).unwrap();
        assert!(matches!(
            are_isomorphic(&g, &g),
            Err(Error::SizeCap { size: 13, cap: 12 })
        ));
        assert!(are_isomorphic_capped(&g, &g, 20).unwrap());
    }

    #[test]
    fn direction_matters_for_relations() {
        // 0 -> 1 versus 1 -> 0 are isomorphic; a 2-chain and 2-antichain are not.
        let a = vec![ElemSet::singleton(1), ElemSet::EMPTY];
        let b = vec![ElemSet::EMPTY, ElemSet::singleton(0)];
        assert_eq!(find_isomorphism(&a, &b), Some(vec![1, 0]));
        let c = vec![ElemSet::EMPTY, ElemSet::EMPTY];
        assert!(find_isomorphism(&a, &c).is_none());
    }
}
