//! Property tests against brute-force oracles written from the definitions.

use proptest::prelude::*;

use osdom::hardness::{parse_dimacs_cnf, reduce_to_poset, sat_bruteforce, CnfFormula};
use osdom::helly::{has_helly_property, SetFamily};
use osdom::io;
use osdom::solvers::{
    biclique_partition, domination, is_os_dominating, os_domination, roman_domination, theta, BicliqueMode,
    DominationVariant, OsMethod, RomanMethod, SolveOptions,
};
use osdom::transforms::{bipartite_transformation, graded_poset, red3, star_extension};
use osdom::{BipartiteGraph, ElemSet, Graph, Poset};

fn opts() -> SolveOptions {
    SolveOptions::unchecked()
}

/// Posets on `0..n` generated by random pairs `i < j`, closed transitively.
fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        pairs.push((i, j));
                    }
                }
            }
            Poset::new(n, &pairs).unwrap()
        })
    })
}

fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_bipartite(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(l, r)| {
        proptest::collection::vec(any::<bool>(), l * r).prop_map(move |bits| {
            let mut edges = Vec::new();
            for (idx, b) in bits.into_iter().enumerate() {
                if b {
                    edges.push((idx / r, l + idx % r));
                }
            }
            let g = Graph::from_edges(l + r, &edges).unwrap();
            BipartiteGraph::new(g, (0..l).collect()).unwrap()
        })
    })
}

fn subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}

fn min_size(n: usize, ok: impl Fn(ElemSet) -> bool) -> Option<usize> {
    subsets(n).filter(|&s| ok(s)).map(|s| s.len()).min()
}

/// Reachability by repeated relaxation over the given covers.
fn reach(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for &(a, b) in covers {
        r[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// The os-dominating condition read directly off the order relation.
fn os_dominating_oracle(p: &Poset, d: ElemSet) -> bool {
    let n = p.len();
    let less = reach(n, p.covers());
    let comparable = |a: usize, b: usize| less[a][b] || less[b][a];
    let has_up = |x: usize| (0..n).any(|y| less[x][y]);
    let has_down = |x: usize| (0..n).any(|y| less[y][x]);
    (0..n).all(|x| {
        if d.contains(x) {
            return true;
        }
        let dominated = d.iter().any(|y| comparable(x, y));
        let mid = has_up(x) && has_down(x);
        let between = d.iter().any(|a| less[a][x]) && d.iter().any(|b| less[x][b]);
        dominated && (!mid || between)
    })
}

fn dominating_oracle(g: &Graph, d: ElemSet) -> bool {
    (0..g.len()).all(|v| d.contains(v) || (0..g.len()).any(|u| d.contains(u) && g.has_edge(u, v)))
}

fn total_dominating_oracle(g: &Graph, d: ElemSet) -> bool {
    (0..g.len()).all(|v| (0..g.len()).any(|u| d.contains(u) && g.has_edge(u, v)))
}

/// Minimum weight over all functions into {0, 1, 2} where every 0 has a
/// neighbour valued 2.
fn roman_oracle(g: &Graph) -> usize {
    let n = g.len();
    let mut best = usize::MAX;
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut f = vec![0usize; n];
        let mut c = code;
        for v in f.iter_mut() {
            *v = c % 3;
            c /= 3;
        }
        let ok = (0..n).all(|v| f[v] != 0 || (0..n).any(|u| f[u] == 2 && g.has_edge(u, v)));
        if ok {
            best = best.min(f.iter().sum());
        }
    }
    best
}

fn is_biclique_part(b: &BipartiteGraph, s: &[usize]) -> bool {
    let g = b.graph();
    let (l, r): (Vec<usize>, Vec<usize>) = s.iter().partition(|&&v| b.is_left(v));
    if l.is_empty() || r.is_empty() {
        return s.len() == 1 && g.degree(s[0]) == 0;
    }
    l.iter().all(|&u| r.iter().all(|&v| g.has_edge(u, v)))
}

/// Fewest parts over all set partitions, by restricted growth strings.
fn bp_oracle(b: &BipartiteGraph) -> usize {
    fn go(b: &BipartiteGraph, v: usize, parts: &mut Vec<Vec<usize>>, best: &mut usize) {
        if parts.len() >= *best {
            return;
        }
        if v == b.len() {
            if parts.iter().all(|p| is_biclique_part(b, p)) {
                *best = parts.len();
            }
            return;
        }
        for i in 0..parts.len() {
            parts[i].push(v);
            go(b, v + 1, parts, best);
            parts[i].pop();
        }
        parts.push(vec![v]);
        go(b, v + 1, parts, best);
        parts.pop();
    }
    let mut best = usize::MAX;
    go(b, 0, &mut Vec::new(), &mut best);
    best
}

fn helly_oracle(f: &SetFamily) -> bool {
    let m = f.len();
    (0u32..1 << m).all(|mask| {
        let idx: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let pairwise = idx
            .iter()
            .all(|&i| idx.iter().all(|&j| f.members()[i].intersects(f.members()[j])));
        let common = idx.iter().fold(None, |acc: Option<ElemSet>, &i| {
            Some(acc.map_or(f.members()[i], |a| a.intersection(f.members()[i])))
        });
        !pairwise || common.is_none_or(|c| !c.is_empty())
    })
}

fn arb_formula(max_vars: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_vars).prop_flat_map(|n| {
        let lit = (1..=n as i32, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        proptest::collection::vec([lit.clone(), lit.clone(), lit], 1..=4)
            .prop_map(move |clauses| CnfFormula::new(n, clauses).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn order_is_transitive_closure_of_covers(p in arb_poset(9)) {
        let r = reach(p.len(), p.covers());
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(p.less(a, b), r[a][b]);
            }
        }
        prop_assert!(p.check_axioms());
    }

    #[test]
    fn os_domination_matches_oracle(p in arb_poset(8)) {
        let want = min_size(p.len(), |d| os_dominating_oracle(&p, d)).unwrap();
        let direct = os_domination(&p, OsMethod::Direct, &opts()).unwrap();
        prop_assert_eq!(direct.value, want);
        let w = direct.witness.as_set().unwrap();
        prop_assert_eq!(w.len(), want);
        prop_assert!(os_dominating_oracle(&p, w));
        prop_assert!(is_os_dominating(&p, w));
        if p.class3_height().is_some() {
            let star = os_domination(&p, OsMethod::ViaStar, &opts()).unwrap();
            prop_assert_eq!(star.value, want);
        }
    }

    #[test]
    fn os_domination_is_self_dual(p in arb_poset(8)) {
        let a = os_domination(&p, OsMethod::Direct, &opts()).unwrap().value;
        let b = os_domination(&p.dual(), OsMethod::Direct, &opts()).unwrap().value;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn star_extension_is_a_poset_that_keeps_the_original(p in arb_poset(8)) {
        let s = star_extension(&p);
        prop_assert!(s.check_axioms());
        prop_assert_eq!(s.len(), p.len() + 2 * p.middle().len());
        for (j, a) in p.middle().iter().enumerate() {
            let (top, bottom) = (p.len() + 2 * j, p.len() + 2 * j + 1);
            prop_assert!(s.maximal().contains(top) && s.minimal().contains(bottom));
            prop_assert!(s.less(bottom, a) && s.less(a, top));
        }
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(s.less(a, b), p.less(a, b));
            }
        }
    }

    #[test]
    fn red3_keeps_os_domination(p in arb_poset(8)) {
        if let Ok(q) = red3(&p) {
            prop_assert!(q.height() <= 3);
            let a = os_domination(&p, OsMethod::Direct, &opts()).unwrap().value;
            let b = os_domination(&q, OsMethod::Direct, &opts()).unwrap().value;
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn poset_format_round_trips(p in arb_poset(10)) {
        let text = io::write_poset(&p);
        let back = io::read_poset(&text).unwrap();
        prop_assert_eq!(io::write_poset(&back), text);
        prop_assert_eq!(back.len(), p.len());
        for a in 0..p.len() {
            prop_assert_eq!(back.up(a), p.up(a));
        }
    }

    #[test]
    fn graph_format_round_trips(g in arb_graph(1, 10)) {
        let text = io::write_graph(&g);
        let back = io::read_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::write_graph(&back), text);
    }

    #[test]
    fn domination_matches_oracle(g in arb_graph(1, 9)) {
        let want = min_size(g.len(), |d| dominating_oracle(&g, d)).unwrap();
        let r = domination(&g, DominationVariant::Plain, &opts()).unwrap();
        prop_assert_eq!(r.value, want);
        prop_assert!(dominating_oracle(&g, r.witness.as_set().unwrap()));
    }

    #[test]
    fn total_domination_matches_oracle(g in arb_graph(2, 9)) {
        let want = min_size(g.len(), |d| total_dominating_oracle(&g, d));
        match domination(&g, DominationVariant::Total, &opts()) {
            Ok(r) => {
                prop_assert_eq!(Some(r.value), want);
                prop_assert!(total_dominating_oracle(&g, r.witness.as_set().unwrap()));
            }
            Err(_) => prop_assert!(want.is_none()),
        }
    }

    #[test]
    fn roman_matches_oracle(g in arb_graph(1, 7)) {
        let want = roman_oracle(&g);
        prop_assert_eq!(roman_domination(&g, RomanMethod::Direct, &opts()).unwrap().value, want);
        prop_assert_eq!(roman_domination(&g, RomanMethod::TwoPackingFormula, &opts()).unwrap().value, want);
        prop_assert_eq!(theta(&g, &opts()).unwrap().value, want);
    }

    #[test]
    fn biclique_partition_matches_oracle(b in arb_bipartite(4)) {
        let want = bp_oracle(&b);
        let r = biclique_partition(&b, BicliqueMode::General, None, &opts()).unwrap();
        prop_assert_eq!(r.value, want);
        let blocks = r.witness.as_blocks().unwrap();
        prop_assert_eq!(blocks.len(), want);
        let covered = blocks.iter().fold(ElemSet::EMPTY, |acc, &s| acc.union(s));
        prop_assert_eq!(covered, b.graph().vertices());
    }

    #[test]
    fn bipartite_transformation_bp_equals_os_domination(p in arb_poset(6)) {
        prop_assume!(p.class3_height().is_some());
        let b = bipartite_transformation(&p);
        let os = os_domination(&p, OsMethod::Direct, &opts()).unwrap().value;
        prop_assert_eq!(bp_oracle(&b), os);
    }

    #[test]
    fn graded_poset_has_k_layers(g in arb_graph(1, 6), k in 2usize..=5) {
        let p = graded_poset(&g, k).unwrap();
        prop_assert_eq!(p.len(), k * g.len());
        prop_assert_eq!(p.height(), k);
    }

    #[test]
    fn helly_property_matches_oracle(members in proptest::collection::vec(0u32..64, 0..=6)) {
        let sets: Vec<ElemSet> = members.iter().map(|&m| (0..6).filter(|&i| m >> i & 1 == 1).collect()).collect();
        let f = SetFamily::new(6, sets).unwrap();
        prop_assert_eq!(has_helly_property(&f).unwrap().holds, helly_oracle(&f));
    }

    #[test]
    fn cnf_round_trips_and_sat_matches_assignments(f in arb_formula(4)) {
        let back = parse_dimacs_cnf(&f.to_dimacs()).unwrap();
        prop_assert_eq!(&back, &f);
        let any = (0u32..1 << f.var_count).any(|a| f.satisfied_by(a));
        prop_assert_eq!(sat_bruteforce(&f).unwrap(), any);
    }

    #[test]
    fn reduction_has_expected_size(f in arb_formula(3), k in 4usize..=6) {
        let n = f.var_count;
        if f.clauses.len() == n {
            if let Ok(out) = reduce_to_poset(&f, k) {
                prop_assert_eq!(out.poset.len(), n * n * (k - 2) + 4 * n);
                prop_assert_eq!(out.threshold, 2 * n);
                prop_assert!(out.poset.check_axioms());
            }
        }
    }
}
