//! Poset and graph constructions.
//!
//! Every construction keeps labels readable: new elements are named after
//! the input elements they come from, and the `_traced` variants also return
//! a [`TransformTrace`] recording that origin by index.

use crate::bitset::ElemSet;
use crate::error::{check_size, Error, Result};
use crate::graph::{BipartiteGraph, Graph};
use crate::helly::SetFamily;
use crate::poset::Poset;

/// Origin record of a construction: for every output index, its role and the
/// input indices it derives from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformTrace {
    pub scheme: String,
    pub role: Vec<String>,
    pub origin: Vec<Vec<usize>>,
}

impl TransformTrace {
    pub fn new(scheme: &str) -> Self {
        TransformTrace {
            scheme: scheme.to_string(),
            role: Vec::new(),
            origin: Vec::new(),
        }
    }

    pub fn push(&mut self, role: &str, origin: Vec<usize>) {
        self.role.push(role.to_string());
        self.origin.push(origin);
    }

    /// Every output element is input element of the same index.
    pub fn identity(scheme: &str, n: usize) -> Self {
        let mut t = TransformTrace::new(scheme);
        for i in 0..n {
            t.push("same", vec![i]);
        }
        t
    }

    pub fn len(&self) -> usize {
        self.origin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origin.is_empty()
    }

    /// One line per output id: `<id> <role> <inputs>`, inputs comma-separated
    /// or `-` when there are none.
    pub fn to_text(&self) -> String {
        let mut s = format!("# trace {}\n", self.scheme);
        for (i, (r, o)) in self.role.iter().zip(&self.origin).enumerate() {
            let inputs = if o.is_empty() {
                "-".to_string()
            } else {
                o.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            };
            s.push_str(&format!("{i} {r} {inputs}\n"));
        }
        s
    }
}

/// Gives every middle element `a` a new top `b:a` and a new bottom `c:a`
/// with `c:a ≺ a ≺ b:a`.
pub fn star_extension(p: &Poset) -> Poset {
    star_extension_traced(p).0
}

pub fn star_extension_traced(p: &Poset) -> (Poset, TransformTrace) {
    let n = p.len();
    let mids = p.middle().to_vec();
    let total = n + 2 * mids.len();
    let mut labels = p.labels().to_vec();
    let mut trace = TransformTrace::identity("star", n);
    let mut up: Vec<ElemSet> = (0..n).map(|x| p.up(x)).collect();
    up.resize(total, ElemSet::EMPTY);
    for (j, &a) in mids.iter().enumerate() {
        let b = n + 2 * j;
        labels.push(format!("b:{}", p.label(a)));
        labels.push(format!("c:{}", p.label(a)));
        trace.push("b", vec![a]);
        trace.push("c", vec![a]);
        for y in p.down(a).iter().chain(std::iter::once(a)) {
            up[y].insert(b);
        }
    }
    for (j, &a) in mids.iter().enumerate() {
        up[n + 2 * j + 1] = up[a].with(a);
    }
    let out = Poset::from_up_sets(labels, up);
    debug_assert!(out.check_axioms());
    (out, trace)
}

/// Deletes every comparability between two middle elements, keeping all
/// other pairs of the original order.
pub fn red3(p: &Poset) -> Result<Poset> {
    let h = p.height();
    if h < 4 {
        return Err(Error::Height(h));
    }
    let mids = p.middle();
    let up = (0..p.len())
        .map(|x| {
            if mids.contains(x) {
                p.up(x).difference(mids)
            } else {
                p.up(x)
            }
        })
        .collect();
    let out = Poset::from_up_sets(p.labels().to_vec(), up);
    assert_eq!(out.height(), 3, "reduction must have height 3");
    Ok(out)
}

/// Puts every minimal element below every maximal element.
pub fn maxmin_closure(p: &Poset) -> Poset {
    let ps = p.positional_sets();
    // Isolated elements are both minimal and maximal and are left alone:
    // two of them would otherwise end up below each other.
    let isolated = ps.min.intersection(ps.max);
    let tops = ps.max.difference(isolated);
    let up = (0..p.len())
        .map(|x| {
            if ps.min.contains(x) && !isolated.contains(x) {
                p.up(x).union(tops)
            } else {
                p.up(x)
            }
        })
        .collect();
    let out = Poset::from_up_sets(p.labels().to_vec(), up);
    debug_assert!(out.check_axioms());
    out
}

/// The `k`-layer poset of a graph: `(r,i) ≺ (r+1,j)` iff `i = j` or `ij` is
/// an edge. Element `(r,i)` has index `(r-1)·n + i`, with layers numbered
/// from 1.
pub fn graded_poset(g: &Graph, k: usize) -> Result<Poset> {
    Ok(graded_poset_traced(g, k)?.0)
}

pub fn graded_poset_traced(g: &Graph, k: usize) -> Result<(Poset, TransformTrace)> {
    if k < 2 {
        return Err(Error::Param(format!("layer count must be at least 2, got {k}")));
    }
    if g.is_empty() {
        return Err(Error::Param("graph must have at least one vertex".into()));
    }
    let n = g.len();
    check_size(k * n, crate::bitset::MAX_ELEMENTS)?;
    let mut labels = Vec::with_capacity(k * n);
    let mut trace = TransformTrace::new("graded");
    let mut pairs = Vec::new();
    for r in 0..k {
        for i in 0..n {
            labels.push(format!("({},{})", r + 1, g.label(i)));
            trace.push(&format!("layer{}", r + 1), vec![i]);
            if r + 1 < k {
                for j in g.closed_neighbors(i).iter() {
                    pairs.push((r * n + i, (r + 1) * n + j));
                }
            }
        }
    }
    let out = Poset::new(k * n, &pairs)?.with_labels(labels)?;
    assert_eq!(out.height(), k);
    Ok((out, trace))
}

/// Four-layer poset `X¹ Y² X³ Y⁴` of a bipartite graph with sides `X` (left)
/// and `Y`, with `x^i ≺ y^{i+1}` and `y^j ≺ x^{j+1}` along edges.
pub fn bipartite_to_b4(b: &BipartiteGraph) -> Result<Poset> {
    Ok(bipartite_to_b4_traced(b)?.0)
}

pub fn bipartite_to_b4_traced(b: &BipartiteGraph) -> Result<(Poset, TransformTrace)> {
    let g = b.graph();
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    let xs = b.left().to_vec();
    let ys = b.right().to_vec();
    let layers = [&xs, &ys, &xs, &ys];
    let mut index = vec![[usize::MAX; 4]; g.len()];
    let mut labels = Vec::new();
    let mut trace = TransformTrace::new("b4");
    for (li, layer) in layers.iter().enumerate() {
        for &v in layer.iter() {
            index[v][li] = labels.len();
            labels.push(format!("{}^{}", g.label(v), li + 1));
            trace.push(&format!("layer{}", li + 1), vec![v]);
        }
    }
    check_size(labels.len(), crate::bitset::MAX_ELEMENTS)?;
    let mut pairs = Vec::new();
    for (u, v) in g.edges() {
        for li in 0..3 {
            // Exactly one endpoint lives on layer `li`.
            let (lo, hi) = if index[u][li] != usize::MAX { (u, v) } else { (v, u) };
            pairs.push((index[lo][li], index[hi][li + 1]));
        }
    }
    let out = Poset::new(labels.len(), &pairs)?.with_labels(labels)?;
    assert!(out.height() == 4 && out.is_graded());
    Ok((out, trace))
}

/// Bipartite transformation: left side `x'` for minimal and middle `x`,
/// right side `x''` for maximal and middle `x`; `x'y''` is an edge iff
/// `x < y`, or `x = y` is a middle element.
///
/// Left vertices come first, each side in element order.
pub fn bipartite_transformation(p: &Poset) -> BipartiteGraph {
    bipartite_transformation_traced(p).0
}

pub fn bipartite_transformation_traced(p: &Poset) -> (BipartiteGraph, TransformTrace) {
    let ps = p.positional_sets();
    let v1 = ps.min.union(ps.mid).to_vec();
    let v2 = ps.max.union(ps.mid).to_vec();
    let mut trace = TransformTrace::new("bipartite");
    let mut labels = Vec::new();
    for &x in &v1 {
        labels.push(format!("{}'", p.label(x)));
        trace.push("prime", vec![x]);
    }
    for &x in &v2 {
        labels.push(format!("{}''", p.label(x)));
        trace.push("dprime", vec![x]);
    }
    let mut g = Graph::new(v1.len() + v2.len()).expect("at most twice the poset size");
    for (i, &x) in v1.iter().enumerate() {
        for (j, &y) in v2.iter().enumerate() {
            if p.less(x, y) || (x == y && ps.mid.contains(x)) {
                g.add_edge(i, v1.len() + j);
            }
        }
    }
    let g = g.with_labels(labels).expect("label count matches");
    let b = BipartiteGraph::new(g, ElemSet::full(v1.len())).expect("edges cross the sides");
    (b, trace)
}

fn require_class3(p: &Poset) -> Result<usize> {
    p.class3_height()
        .ok_or_else(|| Error::Class("needs height >= 3 with every element on a chain of size >= 3".into()))
}

/// Middle graph: vertices are the middle elements, joined when they have a
/// common upper bound and a common lower bound.
pub fn middle_graph(p: &Poset) -> Result<Graph> {
    require_class3(p)?;
    Ok(middle_graph_unchecked(p))
}

pub(crate) fn middle_graph_unchecked(p: &Poset) -> Graph {
    let mids = p.middle().to_vec();
    let mut g = Graph::new(mids.len()).expect("mids fit");
    for i in 0..mids.len() {
        for j in i + 1..mids.len() {
            let (a, b) = (mids[i], mids[j]);
            if p.up(a).intersects(p.up(b)) && p.down(a).intersects(p.down(b)) {
                g.add_edge(i, j);
            }
        }
    }
    g.with_labels(mids.iter().map(|&x| p.label(x).to_string()).collect())
        .expect("label count matches")
}

/// Comparability graphs induced on `Mid ∪ Max` and on `Mid ∪ Min`.
pub fn hu_hd(p: &Poset) -> Result<(Graph, Graph)> {
    require_class3(p)?;
    let ps = p.positional_sets();
    let comp = p.comparability_graph();
    Ok((comp.induced(ps.mid.union(ps.max)), comp.induced(ps.mid.union(ps.min))))
}

/// Height-3 poset of a set family: `x' < F < y''` iff `x, y ∈ F`.
///
/// Indices: `x'` at `x`, member `i` at `g + i`, `x''` at `g + m + x`, for a
/// ground set of size `g` and `m` members. Repeated members stay distinct.
pub fn family_poset(f: &SetFamily) -> Result<Poset> {
    Ok(family_poset_traced(f)?.0)
}

pub fn family_poset_traced(f: &SetFamily) -> Result<(Poset, TransformTrace)> {
    let g = f.ground();
    let m = f.len();
    if let Some(x) = (0..g).find(|&x| !f.members().iter().any(|s| s.contains(x))) {
        return Err(Error::Coverage(x));
    }
    if let Some(i) = f.members().iter().position(|s| s.is_empty()) {
        return Err(Error::Param(format!("member {i} is empty")));
    }
    let n = 2 * g + m;
    check_size(n, crate::bitset::MAX_ELEMENTS)?;
    let mut labels = Vec::with_capacity(n);
    let mut trace = TransformTrace::new("family");
    for x in 0..g {
        labels.push(format!("{x}'"));
        trace.push("prime", vec![x]);
    }
    for i in 0..m {
        labels.push(format!("F{i}"));
        trace.push("member", vec![i]);
    }
    for x in 0..g {
        labels.push(format!("{x}''"));
        trace.push("dprime", vec![x]);
    }
    let mut pairs = Vec::new();
    for (i, s) in f.members().iter().enumerate() {
        for x in s.iter() {
            pairs.push((x, g + i));
            pairs.push((g + i, g + m + x));
        }
    }
    let out = Poset::new(n, &pairs)?.with_labels(labels)?;
    assert!(out.height() == 3 && out.is_graded());
    Ok((out, trace))
}
