//! Seeded pseudorandom instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::ElemSet;
use crate::graph::{BipartiteGraph, Graph};
use crate::poset::Poset;

/// Random generator used by every suite.
pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejection-sampling attempts before a generator gives up on a draw.
const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// Posets in the class `𝒫_l(k)`.
    PosetInClass {
        l: usize,
        k: usize,
    },
    /// Random layered posets with the given number of layers, unfiltered.
    LayeredPoset {
        layers: usize,
    },
    ConnectedGraph,
    /// Any simple graph.
    Graph,
    BipartiteNoIsolated,
    ConnectedBipartite,
}

#[derive(Debug, Clone)]
pub enum Instance {
    Poset(Poset),
    Graph(Graph),
    Bipartite(BipartiteGraph),
}

impl Instance {
    pub fn into_poset(self) -> Option<Poset> {
        match self {
            Instance::Poset(p) => Some(p),
            _ => None,
        }
    }

    pub fn into_graph(self) -> Option<Graph> {
        match self {
            Instance::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn into_bipartite(self) -> Option<BipartiteGraph> {
        match self {
            Instance::Bipartite(b) => Some(b),
            _ => None,
        }
    }
}

/// Deterministic stream of instances with between `size_min` and `size_max`
/// elements or vertices.
pub struct InstanceStream {
    rng: SuiteRng,
    kind: InstanceKind,
    size_min: usize,
    size_max: usize,
}

impl Iterator for InstanceStream {
    type Item = Instance;

    fn next(&mut self) -> Option<Instance> {
        let (lo, hi) = (self.size_min, self.size_max);
        let r = &mut self.rng;
        match self.kind {
            InstanceKind::PosetInClass { l, k } => random_poset_in_class(r, l, k, lo, hi).map(Instance::Poset),
            InstanceKind::LayeredPoset { layers } => {
                let n = r.gen_range(lo.max(layers)..=hi.max(layers));
                Some(Instance::Poset(random_layered_poset(r, layers, n)))
            }
            InstanceKind::ConnectedGraph => random_connected_graph(r, lo, hi).map(Instance::Graph),
            InstanceKind::Graph => {
                let n = r.gen_range(lo..=hi);
                Some(Instance::Graph(random_graph(r, n)))
            }
            InstanceKind::BipartiteNoIsolated => random_bipartite(r, lo, hi, false).map(Instance::Bipartite),
            InstanceKind::ConnectedBipartite => random_bipartite(r, lo, hi, true).map(Instance::Bipartite),
        }
    }
}

/// Instances of one kind from a fixed seed; replaying a seed replays the
/// stream.
pub fn random_instances(kind: InstanceKind, size_min: usize, size_max: usize, seed: u64) -> InstanceStream {
    InstanceStream {
        rng: rng(seed),
        kind,
        size_min,
        size_max: size_max.max(size_min),
    }
}

/// A layered DAG on `n >= layers` elements, read as a poset.
///
/// Each layer is non-empty. Every element above the bottom layer gets a lower
/// neighbour and every element below the top layer an upper neighbour,
/// mostly in adjacent layers; further edges are added at random.
pub fn random_layered_poset<R: Rng>(rng: &mut R, layers: usize, n: usize) -> Poset {
    assert!(layers >= 1 && n >= layers);
    let mut layer_of: Vec<usize> = (0..layers).collect();
    for _ in layers..n {
        layer_of.push(rng.gen_range(0..layers));
    }
    layer_of.sort_unstable();
    let members: Vec<Vec<usize>> = (0..layers)
        .map(|r| (0..n).filter(|&x| layer_of[x] == r).collect())
        .collect();
    let density = rng.gen_range(0.15..0.6);
    let mut pairs = Vec::new();
    let mut has_up = vec![false; n];
    for x in 0..n {
        let r = layer_of[x];
        if r == 0 {
            continue;
        }
        let mut got = false;
        for lower in 0..r {
            let p = if lower + 1 == r { density } else { density / 5.0 };
            for &y in &members[lower] {
                if rng.gen_bool(p) {
                    pairs.push((y, x));
                    has_up[y] = true;
                    got = true;
                }
            }
        }
        if !got {
            let lower = if rng.gen_bool(0.85) { r - 1 } else { rng.gen_range(0..r) };
            let &y = members[lower].choose(rng).expect("layers are non-empty");
            pairs.push((y, x));
            has_up[y] = true;
        }
    }
    for x in 0..n {
        let r = layer_of[x];
        if r + 1 < layers && !has_up[x] {
            let &y = members[r + 1].choose(rng).expect("layers are non-empty");
            pairs.push((x, y));
        }
    }
    Poset::new(n, &pairs).expect("layered pairs are acyclic")
}

/// A random poset in `𝒫_l(k)` by rejection, or `None` after too many
/// attempts.
pub fn random_poset_in_class<R: Rng>(
    rng: &mut R,
    l: usize,
    k: usize,
    size_min: usize,
    size_max: usize,
) -> Option<Poset> {
    let lo = size_min.max(k);
    if size_max < lo {
        return None;
    }
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.gen_range(lo..=size_max);
        let p = random_layered_poset(rng, k, n);
        if p.in_class(l, k) {
            return Some(p);
        }
    }
    None
}

/// Erdős–Rényi graph with a random edge density.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let density = rng.gen_range(0.2..0.8);
    let mut g = Graph::new(n).expect("size within cap");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, size_min: usize, size_max: usize) -> Option<Graph> {
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.gen_range(size_min..=size_max);
        let g = random_graph(rng, n);
        if g.is_connected() {
            return Some(g);
        }
    }
    None
}

/// Random tree by attaching every vertex to an earlier one.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut g = Graph::new(n).expect("size within cap");
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    g
}

/// Bipartite graph without isolated vertices, both sides non-empty,
/// optionally connected.
pub fn random_bipartite<R: Rng>(
    rng: &mut R,
    size_min: usize,
    size_max: usize,
    connected: bool,
) -> Option<BipartiteGraph> {
    let lo = size_min.max(2);
    if size_max < lo {
        return None;
    }
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.gen_range(lo..=size_max);
        let a = rng.gen_range(1..n);
        let density = rng.gen_range(0.25..0.8);
        let mut g = Graph::new(n).expect("size within cap");
        for u in 0..a {
            for v in a..n {
                if rng.gen_bool(density) {
                    g.add_edge(u, v);
                }
            }
        }
        if !g.isolated_vertices().is_empty() || (connected && !g.is_connected()) {
            continue;
        }
        return Some(BipartiteGraph::new(g, ElemSet::full(a)).expect("sides are independent"));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_replay() {
        let a: Vec<_> = random_instances(InstanceKind::PosetInClass { l: 3, k: 3 }, 3, 10, 1)
            .take(10)
            .map(|i| crate::io::write_poset(&i.into_poset().unwrap()))
            .collect();
        let b: Vec<_> = random_instances(InstanceKind::PosetInClass { l: 3, k: 3 }, 3, 10, 1)
            .take(10)
            .map(|i| crate::io::write_poset(&i.into_poset().unwrap()))
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn filters_hold() {
        for i in random_instances(InstanceKind::ConnectedGraph, 1, 8, 2).take(30) {
            assert!(i.into_graph().unwrap().is_connected());
        }
        for i in random_instances(InstanceKind::BipartiteNoIsolated, 2, 10, 3).take(30) {
            assert!(i.into_bipartite().unwrap().graph().isolated_vertices().is_empty());
        }
        for i in random_instances(InstanceKind::PosetInClass { l: 3, k: 4 }, 4, 12, 4).take(30) {
            assert!(i.into_poset().unwrap().in_class(3, 4));
        }
    }
}
