//! All small graphs up to isomorphism.

use crate::graph::Graph;

/// Largest order accepted by [`graphs_up_to_iso`].
pub const EXHAUSTIVE_GRAPH_CAP: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every graph on `n` vertices, one per isomorphism class: the labelled
/// graph whose edge code is least among all relabellings, in increasing
/// code order.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(
        n <= EXHAUSTIVE_GRAPH_CAP,
        "exhaustive enumeration is capped at {EXHAUSTIVE_GRAPH_CAP}"
    );
    let ps = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in ps.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let mut out = Vec::new();
    'codes: for code in 0u32..1 << ps.len() {
        for perm in &perms[1..] {
            let mut image = 0u32;
            for (i, &(u, v)) in ps.iter().enumerate() {
                if code >> i & 1 == 1 {
                    image |= 1 << index[perm[u]][perm[v]];
                }
            }
            if image < code {
                continue 'codes;
            }
        }
        let edges: Vec<(usize, usize)> = ps
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(Graph::from_edges(n, &edges).expect("valid edges"));
    }
    out
}

pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(Graph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (0..=5).map(|n| graphs_up_to_iso(n).len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34]);
        let conn: Vec<usize> = (1..=5).map(|n| connected_graphs_up_to_iso(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21]);
    }
}
