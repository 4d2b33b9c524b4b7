use std::collections::{BTreeSet, HashMap};

use super::cover::{CoverProblem, Req};
use super::{mismatch, Method, SolveOptions, SolveResult, Witness};
use crate::bitset::{submasks, ElemSet};
use crate::error::{check_size, Error, Result};
use crate::graph::BipartiteGraph;
use crate::poset::Poset;
use crate::transforms;

/// Largest graph accepted by the general biclique solver.
pub const BICLIQUE_SIZE_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BicliqueMode {
    /// Any biclique may be used.
    General,
    /// Only the star and double-star bicliques `B_x` of the generating poset.
    StarDoubleStar,
}

fn common_left(b: &BipartiteGraph, right: ElemSet) -> ElemSet {
    let g = b.graph();
    right.iter().fold(b.left(), |acc, v| acc.intersection(g.neighbors(v)))
}

fn common_right(b: &BipartiteGraph, left: ElemSet) -> ElemSet {
    let g = b.graph();
    left.iter().fold(b.right(), |acc, v| acc.intersection(g.neighbors(v)))
}

/// Vertex sets of all maximal bicliques with both sides nonempty, in
/// lexicographic order.
///
/// Starts from the closed neighbourhood pairs of left vertices and closes
/// the right sides under intersection.
pub fn maximal_bicliques(b: &BipartiteGraph) -> Vec<ElemSet> {
    let g = b.graph();
    let mut rights: BTreeSet<ElemSet> = BTreeSet::new();
    let mut queue: Vec<ElemSet> = Vec::new();
    for v in b.left().iter() {
        let r = g.neighbors(v);
        if !r.is_empty() {
            let closed = common_right(b, common_left(b, r));
            if rights.insert(closed) {
                queue.push(closed);
            }
        }
    }
    while let Some(r) = queue.pop() {
        let snapshot: Vec<ElemSet> = rights.iter().copied().collect();
        for other in snapshot {
            let meet = r.intersection(other);
            if meet.is_empty() {
                continue;
            }
            let closed = common_right(b, common_left(b, meet));
            if rights.insert(closed) {
                queue.push(closed);
            }
        }
    }
    let mut out: Vec<ElemSet> = rights.into_iter().map(|r| r.union(common_left(b, r))).collect();
    out.sort_by(|a, c| a.lex_cmp(*c));
    out
}

fn is_biclique_block(b: &BipartiteGraph, s: ElemSet) -> bool {
    let l = s.intersection(b.left());
    let r = s.intersection(b.right());
    if l.is_empty() || r.is_empty() {
        return s.len() == 1 && b.graph().neighbors(s.first().unwrap_or(0)).is_empty();
    }
    l.iter().all(|v| r.is_subset(b.graph().neighbors(v)))
}

/// Exact biclique vertex-partition number by a table over vertex subsets.
fn partition_table(b: &BipartiteGraph) -> usize {
    let n = b.len();
    let full = 1usize << n;
    let mut dp = vec![usize::MAX; full];
    dp[0] = 0;
    for mask in 1..full {
        let u = ElemSet::from_bits(mask as u128);
        let v = u.first().expect("nonempty mask");
        for s in submasks(u.without(v)) {
            let block = s.with(v);
            if dp[u.difference(block).bits() as usize] == usize::MAX {
                continue;
            }
            if is_biclique_block(b, block) {
                let rest = u.difference(block).bits() as usize;
                dp[mask] = dp[mask].min(1 + dp[rest]);
            }
        }
    }
    dp[full - 1]
}

struct CoverSearch<'a> {
    blocks: &'a [ElemSet],
    memo: HashMap<ElemSet, usize>,
    nodes: u64,
    budget: u64,
}

impl CoverSearch<'_> {
    fn best(&mut self, uncovered: ElemSet) -> Result<usize> {
        let Some(v) = uncovered.first() else { return Ok(0) };
        if let Some(&c) = self.memo.get(&uncovered) {
            return Ok(c);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut best = usize::MAX;
        for i in 0..self.blocks.len() {
            let k = self.blocks[i];
            if k.contains(v) {
                best = best.min(1 + self.best(uncovered.difference(k))?);
            }
        }
        self.memo.insert(uncovered, best);
        Ok(best)
    }
}

/// Biclique vertex-partition number.
///
/// A minimum biclique vertex cover has the same size as a minimum partition,
/// so the witness is a cover. Isolated vertices count as one singleton block
/// each. `StarDoubleStar` requires the generating poset, checks that `b` is
/// its bipartite transformation, and searches over the bicliques `B_x`.
pub fn biclique_partition(
    b: &BipartiteGraph,
    mode: BicliqueMode,
    poset: Option<&Poset>,
    opts: &SolveOptions,
) -> Result<SolveResult> {
    match mode {
        BicliqueMode::General => general(b, opts),
        BicliqueMode::StarDoubleStar => {
            let p = poset.ok_or_else(|| Error::Shape("star/double-star search needs the generating poset".into()))?;
            star_double_star(b, p, opts)
        }
    }
}

fn general(b: &BipartiteGraph, opts: &SolveOptions) -> Result<SolveResult> {
    check_size(b.len(), BICLIQUE_SIZE_CAP)?;
    let mut blocks = maximal_bicliques(b);
    for v in b.graph().isolated_vertices().iter() {
        blocks.push(ElemSet::singleton(v));
    }
    let mut search = CoverSearch {
        blocks: &blocks,
        memo: HashMap::new(),
        nodes: 0,
        budget: opts.budget,
    };
    let all = b.graph().vertices();
    let value = search.best(all)?;
    let mut cover = Vec::new();
    let mut u = all;
    while let Some(v) = u.first() {
        let target = search.best(u)?;
        let mut pick = None;
        for &k in blocks.iter() {
            if k.contains(v) && 1 + search.best(u.difference(k))? == target {
                pick = Some(k);
                break;
            }
        }
        let k = pick.expect("an optimal block exists");
        cover.push(k);
        u = u.difference(k);
    }
    if opts.cross_check(b.len()) {
        let flat = partition_table(b);
        if flat != value {
            return Err(mismatch("biclique partition", value, flat));
        }
    }
    Ok(SolveResult {
        value,
        witness: Witness::Blocks(cover),
        method: Method::BranchAndBound,
    })
}

/// The bicliques `B_x` of the bipartite transformation, indexed by element.
pub(crate) fn star_blocks(p: &Poset) -> Result<Vec<ElemSet>> {
    let (bt, trace) = transforms::bipartite_transformation_traced(p);
    let n = p.len();
    let mut prime = vec![None; n];
    let mut dprime = vec![None; n];
    for v in 0..bt.len() {
        let x = trace.origin[v][0];
        if bt.is_left(v) {
            prime[x] = Some(v);
        } else {
            dprime[x] = Some(v);
        }
    }
    let ps = p.positional_sets();
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let is_min = ps.min.contains(x);
        let is_max = ps.max.contains(x);
        let primes = |s: ElemSet| -> ElemSet { s.iter().filter_map(|y| prime[y]).collect() };
        let dprimes = |s: ElemSet| -> ElemSet { s.iter().filter_map(|y| dprime[y]).collect() };
        let block = match (is_min, is_max) {
            (true, true) => {
                return Err(Error::Class(format!(
                    "element `{}` is isolated, so no star biclique contains it",
                    p.label(x)
                )))
            }
            (true, false) => dprimes(p.up(x)).with(prime[x].expect("min has a primed copy")),
            (false, true) => primes(p.down(x)).with(dprime[x].expect("max has a double-primed copy")),
            (false, false) => primes(p.down(x).with(x)).union(dprimes(p.up(x).with(x))),
        };
        out.push(block);
    }
    Ok(out)
}

fn star_double_star(b: &BipartiteGraph, p: &Poset, opts: &SolveOptions) -> Result<SolveResult> {
    let (expected, _) = transforms::bipartite_transformation_traced(p);
    if expected.graph() != b.graph() || expected.left() != b.left() {
        return Err(Error::Shape(
            "graph is not the bipartite transformation of the supplied poset".into(),
        ));
    }
    let blocks = star_blocks(p)?;
    let reqs = (0..b.len())
        .map(|v| Req::Hit((0..p.len()).filter(|&x| blocks[x].contains(v)).collect()))
        .collect();
    let prob = CoverProblem {
        universe: p.elements(),
        reqs,
    };
    let (value, d) = prob.solve(opts.budget)?;
    if opts.cross_check(p.len()) {
        let all = b.graph().vertices();
        let flat = CoverProblem::enumerate(p.elements(), |s| {
            s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(blocks[x])) == all
        })
        .ok_or_else(|| Error::Inconsistent("star bicliques do not cover the graph".into()))?;
        if flat != (value, d) {
            return Err(mismatch("star biclique cover", (value, d), flat));
        }
    }
    Ok(SolveResult {
        value,
        witness: Witness::Blocks(d.iter().map(|x| blocks[x]).collect()),
        method: Method::BranchAndBound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn general_bp(g: Graph) -> usize {
        let b = BipartiteGraph::from_graph(g).unwrap();
        biclique_partition(&b, BicliqueMode::General, None, &SolveOptions::default())
            .unwrap()
            .value
    }

    #[test]
    fn small_bp_values() {
        assert_eq!(general_bp(Graph::path(2).unwrap()), 1);
        assert_eq!(general_bp(Graph::cycle(6).unwrap()), 2);
        assert_eq!(general_bp(Graph::cycle(8).unwrap()), 3);
        assert_eq!(general_bp(Graph::complete_bipartite(2, 3).unwrap()), 1);
        assert_eq!(general_bp(Graph::new(2).unwrap()), 2);
    }

    #[test]
    fn maximal_bicliques_of_path() {
        let b = BipartiteGraph::from_graph(Graph::path(4).unwrap()).unwrap();
        let m = maximal_bicliques(&b);
        let v: Vec<Vec<usize>> = m.iter().map(|s| s.to_vec()).collect();
        assert_eq!(v, vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn star_mode_needs_poset() {
        let p = Poset::chain(3);
        let b = transforms::bipartite_transformation(&p);
        let o = SolveOptions::default();
        assert!(matches!(
            biclique_partition(&b, BicliqueMode::StarDoubleStar, None, &o),
            Err(Error::Shape(_))
        ));
        let r = biclique_partition(&b, BicliqueMode::StarDoubleStar, Some(&p), &o).unwrap();
        assert_eq!(r.value, 1);
        let other = Poset::chain(4);
        assert!(matches!(
            biclique_partition(&b, BicliqueMode::StarDoubleStar, Some(&other), &o),
            Err(Error::Shape(_))
        ));
    }
}
