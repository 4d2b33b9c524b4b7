use std::collections::HashMap;

use super::{mismatch, Method, SolveOptions, SolveResult, Witness};
use crate::bitset::{submasks, ElemSet};
use crate::error::{check_size, Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by the clique-partition, triangle and colouring
/// solvers.
pub const PARTITION_SIZE_CAP: usize = 24;

fn clique_weight(c: ElemSet) -> usize {
    if c.len() == 1 {
        1
    } else {
        2
    }
}

/// Cliques inside `pool` that contain `v`, in lexicographic order.
fn cliques_through(g: &Graph, v: usize, pool: ElemSet) -> Vec<ElemSet> {
    let nb = g.neighbors(v).intersection(pool);
    let mut out: Vec<ElemSet> = submasks(nb).filter(|s| g.is_clique(*s)).map(|s| s.with(v)).collect();
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

struct Memo<'a> {
    g: &'a Graph,
    table: HashMap<ElemSet, usize>,
    nodes: u64,
    budget: u64,
}

impl Memo<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn we(&mut self, u: ElemSet) -> Result<usize> {
        let Some(v) = u.first() else { return Ok(0) };
        if let Some(&w) = self.table.get(&u) {
            return Ok(w);
        }
        self.tick()?;
        let mut best = usize::MAX;
        for c in cliques_through(self.g, v, u) {
            best = best.min(clique_weight(c) + self.we(u.difference(c))?);
        }
        self.table.insert(u, best);
        Ok(best)
    }

    fn vdt(&mut self, u: ElemSet) -> Result<usize> {
        let Some(v) = u.first() else { return Ok(0) };
        if let Some(&w) = self.table.get(&u) {
            return Ok(w);
        }
        self.tick()?;
        let mut best = self.vdt(u.without(v))?;
        let nb = self.g.neighbors(v).intersection(u);
        for a in nb.iter() {
            for b in self.g.neighbors(a).intersection(nb).iter().filter(|&b| b > a) {
                let t = ElemSet::singleton(v).with(a).with(b);
                best = best.max(1 + self.vdt(u.difference(t))?);
            }
        }
        self.table.insert(u, best);
        Ok(best)
    }
}

/// Bottom-up table over all vertex subsets, used as the flat oracle.
fn we_table(g: &Graph) -> usize {
    let n = g.len();
    let full = 1usize << n;
    let mut dp = vec![usize::MAX; full];
    dp[0] = 0;
    for mask in 1..full {
        let u = ElemSet::from_bits(mask as u128);
        let v = u.first().expect("nonempty mask");
        for c in submasks(u.without(v)) {
            if g.is_clique(c.with(v)) {
                let rest = u.difference(c.with(v)).bits() as usize;
                dp[mask] = dp[mask].min(clique_weight(c.with(v)) + dp[rest]);
            }
        }
    }
    dp[full - 1]
}

/// Minimum weighted clique partition, where a singleton weighs 1 and any
/// larger clique weighs 2. The witness lists the blocks by smallest vertex,
/// choosing the lexicographically least optimal block at each step.
pub fn weighted_clique_partition(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    check_size(g.len(), PARTITION_SIZE_CAP)?;
    let mut memo = Memo {
        g,
        table: HashMap::new(),
        nodes: 0,
        budget: opts.budget,
    };
    let value = memo.we(g.vertices())?;
    let mut blocks = Vec::new();
    let mut u = g.vertices();
    while let Some(v) = u.first() {
        let target = memo.we(u)?;
        let mut picked = None;
        for c in cliques_through(g, v, u) {
            if clique_weight(c) + memo.we(u.difference(c))? == target {
                picked = Some(c);
                break;
            }
        }
        let c = picked.expect("an optimal block exists");
        blocks.push(c);
        u = u.difference(c);
    }
    if opts.cross_check(g.len()) {
        let flat = we_table(g);
        if flat != value {
            return Err(mismatch("weighted clique partition", value, flat));
        }
    }
    Ok(SolveResult {
        value,
        witness: Witness::Blocks(blocks),
        method: Method::BranchAndBound,
    })
}

fn triangles(g: &Graph) -> Vec<ElemSet> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for c in g.neighbors(a).intersection(g.neighbors(b)).iter().filter(|&c| c > b) {
            out.push(ElemSet::singleton(a).with(b).with(c));
        }
    }
    out
}

/// Maximum packing size by trying every subset of triangles in order.
fn vdt_flat(tris: &[ElemSet], start: usize, used: ElemSet) -> usize {
    let mut best = 0;
    for i in start..tris.len() {
        if !tris[i].intersects(used) {
            best = best.max(1 + vdt_flat(tris, i + 1, used.union(tris[i])));
        }
    }
    best
}

/// Maximum number of vertex-disjoint triangles, witnessed by a packing.
pub fn vertex_disjoint_triangles(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    check_size(g.len(), PARTITION_SIZE_CAP)?;
    let mut memo = Memo {
        g,
        table: HashMap::new(),
        nodes: 0,
        budget: opts.budget,
    };
    let value = memo.vdt(g.vertices())?;
    let mut packing = Vec::new();
    let mut u = g.vertices();
    while let Some(v) = u.first() {
        let target = memo.vdt(u)?;
        if target == 0 {
            break;
        }
        let mut next = None;
        let nb = g.neighbors(v).intersection(u);
        'search: for a in nb.iter() {
            for b in g.neighbors(a).intersection(nb).iter().filter(|&b| b > a) {
                let t = ElemSet::singleton(v).with(a).with(b);
                if 1 + memo.vdt(u.difference(t))? == target {
                    next = Some(t);
                    break 'search;
                }
            }
        }
        match next {
            Some(t) => {
                packing.push(t);
                u = u.difference(t);
            }
            None => u.remove(v),
        }
    }
    if opts.cross_check(g.len()) {
        let flat = vdt_flat(&triangles(g), 0, ElemSet::EMPTY);
        if flat != value {
            return Err(mismatch("vertex-disjoint triangles", value, flat));
        }
    }
    Ok(SolveResult {
        value,
        witness: Witness::Blocks(packing),
        method: Method::BranchAndBound,
    })
}

fn color_rec(
    g: &Graph,
    k: usize,
    v: usize,
    colors: &mut Vec<usize>,
    used: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    if v == g.len() {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExceeded(budget));
    }
    // Colours above `used` are interchangeable, so only the first new one is tried.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().filter(|&w| w < v).all(|w| colors[w] != c) {
            colors[v] = c;
            if color_rec(g, k, v + 1, colors, used.max(c + 1), nodes, budget)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Minimum colours by dynamic programming over independent subsets.
fn chromatic_table(g: &Graph) -> usize {
    let n = g.len();
    let full = 1usize << n;
    let mut dp = vec![usize::MAX; full];
    dp[0] = 0;
    for mask in 1..full {
        let u = ElemSet::from_bits(mask as u128);
        let v = u.first().expect("nonempty mask");
        for s in submasks(u.without(v)) {
            let cls = s.with(v);
            if g.is_independent(cls) {
                let rest = u.difference(cls).bits() as usize;
                dp[mask] = dp[mask].min(1 + dp[rest]);
            }
        }
    }
    dp[full - 1]
}

/// Chromatic number with the lexicographically least optimal colouring, in
/// which vertex 0 gets colour 0 and new colours appear in increasing order.
pub fn chromatic_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    check_size(g.len(), PARTITION_SIZE_CAP)?;
    let mut nodes = 0;
    let mut colors = vec![0; g.len()];
    let mut k = if g.edge_count() > 0 {
        2
    } else {
        usize::from(!g.is_empty())
    };
    while !color_rec(g, k, 0, &mut colors, 0, &mut nodes, opts.budget)? {
        k += 1;
    }
    if opts.cross_check(g.len()) {
        let flat = chromatic_table(g);
        if flat != k {
            return Err(mismatch("chromatic number", k, flat));
        }
    }
    Ok(SolveResult {
        value: k,
        witness: Witness::Coloring(colors),
        method: Method::BranchAndBound,
    })
}
