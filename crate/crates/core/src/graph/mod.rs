//! Simple undirected graphs and bipartite graphs.

pub mod induced;
pub mod iso;

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{check_size, Error, Result};
use crate::poset::{default_labels, Poset};

pub use induced::{forbidden_subgraph_free, Forbidden, FreeCheck};
pub use iso::are_isomorphic;

/// Simple graph on `0..n`, stored as one neighbourhood bitset per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<ElemSet>,
    labels: Vec<String>,
}

/// The named families accepted by [`standard_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

pub fn standard_graph(kind: StandardKind) -> Result<Graph> {
    match kind {
        StandardKind::Path(n) => Graph::path(n),
        StandardKind::Cycle(n) => Graph::cycle(n),
        StandardKind::Complete(n) => Graph::complete(n),
        StandardKind::CompleteBipartite(p, q) => Graph::complete_bipartite(p, q),
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        check_size(n, MAX_ELEMENTS)?;
        Ok(Graph {
            adj: vec![ElemSet::EMPTY; n],
            labels: default_labels(n),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            for i in [u, v] {
                if i >= n {
                    return Err(Error::Index { index: i, len: n });
                }
            }
            if u == v {
                return Err(Error::Param(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Param(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// `K_{p,q}` with the `p` side on `0..p`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
        let mut g = Graph::new(p + q)?;
        for u in 0..p {
            for v in p..p + q {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The 3-sun: a triangle `0,2,4` with vertices `1,3,5` each attached to
    /// two consecutive triangle vertices.
    pub fn three_sun() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (2, 4), (4, 0)],
        )
        .expect("fixed edge list")
    }

    /// Adds the edge `uv`; indices must be in range and distinct.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.len() && v < self.len());
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Graph> {
        if labels.len() != self.len() {
            return Err(Error::Param(format!(
                "expected {} labels, got {}",
                self.len(),
                labels.len()
            )));
        }
        self.labels = labels.into_iter().map(Into::into).collect();
        Ok(self)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn labels_of(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> ElemSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> ElemSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Union of closed neighbourhoods of `s`.
    pub fn closed_neighborhood_of(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// Union of open neighbourhoods of `s`.
    pub fn open_neighborhood_of(&self, s: ElemSet) -> ElemSet {
        s.iter().fold(ElemSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn isolated_vertices(&self) -> ElemSet {
        (0..self.len()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_independent(&self, s: ElemSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: ElemSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Vertices reachable from `v`, including `v`.
    pub fn component_of(&self, v: usize) -> ElemSet {
        let mut seen = ElemSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.open_neighborhood_of(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.component_of(0) == self.vertices()
    }

    /// Breadth-first distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        dist[v] = Some(0);
        let mut seen = ElemSet::singleton(v);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.open_neighborhood_of(frontier).difference(seen);
            for w in next.iter() {
                dist[w] = Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        dist
    }

    /// The graph joining vertices at distance at most two.
    pub fn square(&self) -> Graph {
        let mut sq = self.clone();
        for v in 0..self.len() {
            let reach = self.open_neighborhood_of(self.adj[v]).union(self.adj[v]).without(v);
            sq.adj[v] = reach;
        }
        sq
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.len())
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced by `keep`, reindexed in increasing order.
    pub fn induced(&self, keep: ElemSet) -> Graph {
        let idx = keep.to_vec();
        let mut pos = vec![usize::MAX; self.len()];
        for (new, &old) in idx.iter().enumerate() {
            pos[old] = new;
        }
        let adj = idx
            .iter()
            .map(|&old| self.adj[old].intersection(keep).iter().map(|o| pos[o]).collect())
            .collect();
        Graph {
            adj,
            labels: idx.iter().map(|&o| self.labels[o].clone()).collect(),
        }
    }

    pub fn is_two_packing(&self, s: ElemSet) -> bool {
        s.iter()
            .all(|v| !self.closed_neighborhood_of(self.adj[v]).without(v).intersects(s))
    }

    /// Every 2-packing, including the empty set, in increasing bit order.
    pub fn two_packings(&self) -> Vec<ElemSet> {
        let sq = self.square();
        let mut out = Vec::new();
        sq.independent_sets_rec(0, ElemSet::EMPTY, ElemSet::EMPTY, &mut out);
        out.sort();
        out
    }

    /// Inclusion-maximal 2-packings.
    pub fn maximal_two_packings(&self) -> Vec<ElemSet> {
        let sq = self.square();
        self.two_packings()
            .into_iter()
            .filter(|s| (0..self.len()).all(|v| s.contains(v) || sq.adj[v].intersects(*s)))
            .collect()
    }

    fn independent_sets_rec(&self, v: usize, cur: ElemSet, banned: ElemSet, out: &mut Vec<ElemSet>) {
        if v == self.len() {
            out.push(cur);
            return;
        }
        self.independent_sets_rec(v + 1, cur, banned, out);
        if !banned.contains(v) {
            self.independent_sets_rec(v + 1, cur.with(v), banned.union(self.adj[v]), out);
        }
    }

    /// A proper 2-colouring: the side of the smallest vertex in each
    /// component is the left side. `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<ElemSet> {
        let mut left = ElemSet::EMPTY;
        let mut colored = ElemSet::EMPTY;
        for start in 0..self.len() {
            if colored.contains(start) {
                continue;
            }
            let mut stack = vec![(start, true)];
            colored.insert(start);
            left.insert(start);
            while let Some((v, is_left)) = stack.pop() {
                for w in self.adj[v].iter() {
                    if colored.contains(w) {
                        if left.contains(w) == is_left {
                            return None;
                        }
                    } else {
                        colored.insert(w);
                        if !is_left {
                            left.insert(w);
                        }
                        stack.push((w, !is_left));
                    }
                }
            }
        }
        Some(left)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Extended double cover: vertex `i` of `G` gives `x_i` at index `i` and
    /// `y_i` at index `n + i`; `x_i y_j` is an edge iff `i = j` or `ij ∈ E`.
    pub fn extended_double_cover(&self) -> BipartiteGraph {
        let n = self.len();
        let mut g = Graph::new(2 * n).expect("double cover within cap");
        for i in 0..n {
            g.add_edge(i, n + i);
            for j in self.adj[i].iter() {
                g.add_edge(i, n + j);
            }
        }
        let labels: Vec<String> = self
            .labels
            .iter()
            .map(|l| format!("x{l}"))
            .chain(self.labels.iter().map(|l| format!("y{l}")))
            .collect();
        let g = g.with_labels(labels).expect("label count matches");
        BipartiteGraph::new(g, ElemSet::full(n)).expect("double cover is bipartite")
    }
}

/// A graph together with a fixed bipartition into `left` and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    left: ElemSet,
}

impl BipartiteGraph {
    /// Validates that every edge crosses the given bipartition.
    pub fn new(graph: Graph, left: ElemSet) -> Result<BipartiteGraph> {
        let left = left.intersection(graph.vertices());
        let right = graph.vertices().difference(left);
        if !graph.is_independent(left) || !graph.is_independent(right) {
            return Err(Error::NotBipartite);
        }
        Ok(BipartiteGraph { graph, left })
    }

    /// Uses [`Graph::two_coloring`] to pick the sides.
    pub fn from_graph(graph: Graph) -> Result<BipartiteGraph> {
        let left = graph.two_coloring().ok_or(Error::NotBipartite)?;
        Ok(BipartiteGraph { graph, left })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left(&self) -> ElemSet {
        self.left
    }

    pub fn right(&self) -> ElemSet {
        self.graph.vertices().difference(self.left)
    }

    pub fn is_left(&self, v: usize) -> bool {
        self.left.contains(v)
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// The height-two poset with `x < y` for every edge `xy`, `x` on the left.
    pub fn as_poset(&self) -> Poset {
        let n = self.len();
        let up = (0..n)
            .map(|v| {
                if self.is_left(v) {
                    self.graph.neighbors(v)
                } else {
                    ElemSet::EMPTY
                }
            })
            .collect();
        Poset::from_up_sets(self.graph.labels().to_vec(), up)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_sizes() {
        assert_eq!(Graph::path(4).unwrap().edge_count(), 3);
        assert_eq!(Graph::cycle(3).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(Graph::complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert!(matches!(Graph::cycle(2), Err(Error::Param(_))));
        assert_eq!(Graph::three_sun().edge_count(), 9);
    }

    #[test]
    fn square_of_p4_keeps_ends_apart() {
        let sq = Graph::path(4).unwrap().square();
        assert_eq!(sq.edge_count(), 5);
        assert!(!sq.has_edge(0, 3));
        assert_eq!(Graph::cycle(4).unwrap().square(), Graph::complete(4).unwrap());
        assert_eq!(Graph::complete(5).unwrap().square(), Graph::complete(5).unwrap());
    }

    #[test]
    fn two_packings_of_small_graphs() {
        let k3 = Graph::complete(3).unwrap();
        assert!(k3.two_packings().iter().all(|s| s.len() <= 1));
        assert_eq!(k3.two_packings().len(), 4);
        let p4 = Graph::path(4).unwrap();
        assert!(p4.is_two_packing([0, 3].iter().collect()));
        assert!(!p4.is_two_packing([0, 2].iter().collect()));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.two_packings().iter().map(|s| s.len()).max(), Some(1));
        assert_eq!(p4.maximal_two_packings().len(), 3);
    }

    #[test]
    fn double_cover_of_k2_is_c4() {
        let b = Graph::complete(2).unwrap().extended_double_cover();
        assert_eq!(b.graph().edge_count(), 4);
        assert!(are_isomorphic(b.graph(), &Graph::cycle(4).unwrap()).unwrap());
        let single = Graph::new(1).unwrap().extended_double_cover();
        assert_eq!(single.graph().edges(), vec![(0, 1)]);
        assert_eq!(single.graph().label(1), "y0");
    }

    #[test]
    fn connectivity_and_distances() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), None, None]);
        assert!(Graph::path(5).unwrap().is_connected());
    }

    #[test]
    fn bipartition_checks() {
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(
            BipartiteGraph::new(p3.clone(), ElemSet::singleton(0)),
            Err(Error::NotBipartite)
        ));
        let b = BipartiteGraph::from_graph(p3).unwrap();
        assert_eq!(b.left().to_vec(), vec![0, 2]);
        assert_eq!(b.as_poset().height(), 2);
    }
}
