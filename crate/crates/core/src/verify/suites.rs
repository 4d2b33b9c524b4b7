//! The registered suites.

use rand::Rng;

use super::exhaustive::{connected_graphs_up_to_iso, graphs_up_to_iso, EXHAUSTIVE_GRAPH_CAP};
use super::random::{
    random_bipartite, random_connected_graph, random_graph, random_layered_poset, random_poset_in_class, random_tree,
    rng,
};
use super::{combine, evaluate, one_line, SuiteConfig, SuiteKind, SuiteReport, Trial};
use crate::error::{Error, Result};
use crate::graph::induced::{find_induced_cycle, is_chordal_bipartite, is_sun_c456_free, is_weakly_chordal};
use crate::graph::iso::graph_isomorphism;
use crate::graph::{BipartiteGraph, Graph};
use crate::hardness::{canonical_formulas, reduce_to_poset, sat_bruteforce, CnfFormula};
use crate::helly::{
    complete_by_pairs, complete_by_subsets, is_complete_helly_poset, is_helly_poset, SUBSET_ORACLE_CAP,
};
use crate::io::{write_bipartite, write_graph, write_poset};
use crate::poset::Poset;
use crate::solvers::{
    biclique_partition, chromatic_number, domination, os_domination, roman_domination, theta,
    weighted_clique_partition, BicliqueMode, DominationVariant, OsMethod, RomanMethod, SolveOptions,
};
use crate::transforms::{
    bipartite_to_b4, bipartite_transformation, graded_poset, maxmin_closure, middle_graph, red3, star_extension,
};

/// A registered suite.
pub struct Suite {
    pub name: &'static str,
    pub kind: SuiteKind,
    pub description: &'static str,
    pub run: fn(&SuiteConfig) -> Result<SuiteReport>,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "star", kind: SuiteKind::Theorem, description: "gamma_os(P) = gamma(Comp(P*)) on P in P_3(k), k in 3..=5, n <= 12", run: star },
    Suite { name: "red3", kind: SuiteKind::Theorem, description: "gamma_os(P) = gamma_os(Red3(P)) on P in P_3(k), k in 4..=5, n <= 12", run: red3_suite },
    Suite { name: "maxmin", kind: SuiteKind::Theorem, description: "gamma_os(P) = gamma_os(P^m) on P in P_3(k), k in 3..=5, n <= 12", run: maxmin },
    Suite { name: "upper-bound", kind: SuiteKind::Theorem, description: "gamma_os(P) <= ceil((n-1)/2) on P in P_3(k), k in 3..=5, n <= 12", run: upper_bound },
    Suite { name: "roman", kind: SuiteKind::Theorem, description: "gamma_os(P_3(G)) = gamma_R(G) = theta(G) and gamma_t <= gamma_os <= 2 gamma; all connected graphs n <= 6, then random ones", run: roman },
    Suite { name: "p4-gamma", kind: SuiteKind::Theorem, description: "gamma_os(P_4(G)) = 2 gamma(G) = gamma_t(B_e(G)) on connected graphs n <= 7", run: p4_gamma },
    Suite { name: "b4", kind: SuiteKind::Theorem, description: "gamma_os(B_4) = gamma_t(B) on bipartite graphs without isolated vertices, n <= 10", run: b4 },
    Suite { name: "p4", kind: SuiteKind::Theorem, description: "p4-gamma followed by b4", run: p4 },
    Suite { name: "bp-equals-osdom", kind: SuiteKind::Theorem, description: "bp(B(P)) = gamma_os(P), general and star/double-star search, P in P(3), n <= 10", run: bp },
    Suite { name: "bp", kind: SuiteKind::Theorem, description: "alias of bp-equals-osdom", run: bp },
    Suite { name: "helly", kind: SuiteKind::Theorem, description: "we(MD) and 2 chi bounds on Helly posets, equality on complete ones, pair test = subset test; P(3), n <= 10, plus P_3(tree)", run: helly },
    Suite { name: "c6", kind: SuiteKind::Theorem, description: "B_e(G) C6-free iff G (3-sun,C4,C5,C6)-free, n <= 7; Comp(P) weakly chordal iff B(P) chordal bipartite, n <= 10", run: c6 },
    Suite { name: "product-k2", kind: SuiteKind::Theorem, description: "gamma_os(B x K2) >= gamma_t(B) >= gamma(B) and MD(B x K2) = B on connected bipartite B, 3 <= n <= 10", run: product_k2 },
    Suite { name: "hardness", kind: SuiteKind::Theorem, description: "EQUAL-3-SAT reduction: element count and SAT iff gamma_os <= 2n, all canonical formulas n <= 3, k in {4,5}", run: hardness },
    Suite { name: "chi-vs-gamma", kind: SuiteKind::Probe, description: "records chi(complement of G^2) < gamma(G) on connected (3-sun,C4,C5,C6)-free graphs, n <= 8", run: chi_vs_gamma },
];

fn os(p: &Poset, o: &SolveOptions) -> Result<usize> {
    Ok(os_domination(p, OsMethod::Direct, o)?.value)
}

fn gamma(g: &Graph, o: &SolveOptions) -> Result<usize> {
    Ok(domination(g, DominationVariant::Plain, o)?.value)
}

fn gamma_t(g: &Graph, o: &SolveOptions) -> Result<usize> {
    Ok(domination(g, DominationVariant::Total, o)?.value)
}

fn poset_text(p: &Poset) -> String {
    one_line(&write_poset(p))
}

fn graph_text(g: &Graph) -> String {
    one_line(&write_graph(g))
}

fn bipartite_text(b: &BipartiteGraph) -> String {
    one_line(&write_bipartite(b))
}

/// Posets in `𝒫_3(k)` with `k` drawn uniformly from `ks` for every trial.
fn class_posets(cfg: &SuiteConfig, ks: std::ops::RangeInclusive<usize>, size_max: usize) -> Result<Vec<Poset>> {
    let mut r = rng(cfg.seed);
    (0..cfg.trials)
        .map(|_| {
            let k = r.gen_range(ks.clone());
            random_poset_in_class(&mut r, 3, k, 3, size_max)
                .ok_or_else(|| Error::Param(format!("no poset in P_3({k}) with at most {size_max} elements")))
        })
        .collect()
}

fn connected_graphs(cfg: &SuiteConfig, seed: u64, size_min: usize, size_max: usize) -> Result<Vec<Graph>> {
    let mut r = rng(seed);
    (0..cfg.trials)
        .map(|_| {
            random_connected_graph(&mut r, size_min, size_max)
                .ok_or_else(|| Error::Param("could not draw a connected graph".into()))
        })
        .collect()
}

fn bipartite_graphs(
    cfg: &SuiteConfig,
    seed: u64,
    size_min: usize,
    size_max: usize,
    connected: bool,
) -> Result<Vec<BipartiteGraph>> {
    let mut r = rng(seed);
    (0..cfg.trials)
        .map(|_| {
            random_bipartite(&mut r, size_min, size_max, connected)
                .ok_or_else(|| Error::Param(format!("no bipartite graph with {size_min}..={size_max} vertices")))
        })
        .collect()
}

fn star(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let ps = class_posets(cfg, 3..=5, cfg.size(12))?;
    evaluate("star", SuiteKind::Theorem, cfg.seed, ps, |p| {
        let mut t = Trial::default();
        let a = os(p, &o)?;
        let b = gamma(&star_extension(p).comparability_graph(), &o)?;
        if a != b {
            t.fail(poset_text(p), format!("gamma_os = {a}, gamma(Comp(P*)) = {b}"));
        }
        Ok(t)
    })
}

fn red3_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let ps = class_posets(cfg, 4..=5, cfg.size(12))?;
    evaluate("red3", SuiteKind::Theorem, cfg.seed, ps, |p| {
        let mut t = Trial::default();
        let a = os(p, &o)?;
        let b = os(&red3(p)?, &o)?;
        if a != b {
            t.fail(poset_text(p), format!("gamma_os(P) = {a}, gamma_os(Red3(P)) = {b}"));
        }
        Ok(t)
    })
}

fn maxmin(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let ps = class_posets(cfg, 3..=5, cfg.size(12))?;
    evaluate("maxmin", SuiteKind::Theorem, cfg.seed, ps, |p| {
        let mut t = Trial::default();
        let a = os(p, &o)?;
        let b = os(&maxmin_closure(p), &o)?;
        if a != b {
            t.fail(poset_text(p), format!("gamma_os(P) = {a}, gamma_os(P^m) = {b}"));
        }
        Ok(t)
    })
}

fn upper_bound(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let ps = class_posets(cfg, 3..=5, cfg.size(12))?;
    evaluate("upper-bound", SuiteKind::Theorem, cfg.seed, ps, |p| {
        let mut t = Trial::default();
        let a = os(p, &o)?;
        let bound = p.len().saturating_sub(1).div_ceil(2);
        if a > bound {
            t.fail(poset_text(p), format!("gamma_os = {a} > ceil((n-1)/2) = {bound}"));
        }
        Ok(t)
    })
}

fn roman(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let size = cfg.size(6);
    let mut graphs: Vec<Graph> = (2..=size.min(EXHAUSTIVE_GRAPH_CAP))
        .flat_map(connected_graphs_up_to_iso)
        .collect();
    graphs.extend(connected_graphs(cfg, cfg.seed, 2, size)?);
    evaluate("roman", SuiteKind::Theorem, cfg.seed, graphs, |g| {
        let mut t = Trial::default();
        if g.len() < 2 || !g.is_connected() {
            return Ok(Trial::skip());
        }
        let p3 = os(&graded_poset(g, 3)?, &o)?;
        let r = roman_domination(g, RomanMethod::Direct, &o)?.value;
        let f = roman_domination(g, RomanMethod::TwoPackingFormula, &o)?.value;
        let th = theta(g, &o)?.value;
        let (gm, gt) = (gamma(g, &o)?, gamma_t(g, &o)?);
        if !(p3 == r && r == f && f == th && gt <= p3 && p3 <= 2 * gm) {
            t.fail(
                graph_text(g),
                format!(
                    "gamma_os(P3) = {p3}, gamma_R = {r}, formula = {f}, theta = {th}, gamma_t = {gt}, gamma = {gm}"
                ),
            );
        }
        Ok(t)
    })
}

fn p4_gamma(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let graphs = connected_graphs(cfg, cfg.seed, 1, cfg.size(7))?;
    evaluate("p4-gamma", SuiteKind::Theorem, cfg.seed, graphs, |g| {
        let mut t = Trial::default();
        let a = os(&graded_poset(g, 4)?, &o)?;
        let gm = gamma(g, &o)?;
        let b = gamma_t(g.extended_double_cover().graph(), &o)?;
        if a != 2 * gm || b != 2 * gm {
            t.fail(
                graph_text(g),
                format!("gamma_os(P4) = {a}, gamma_t(B_e) = {b}, 2 gamma = {}", 2 * gm),
            );
        }
        Ok(t)
    })
}

fn b4(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let bs = bipartite_graphs(cfg, cfg.seed, 2, cfg.size(10), false)?;
    evaluate("b4", SuiteKind::Theorem, cfg.seed, bs, |b| {
        let mut t = Trial::default();
        let a = os(&bipartite_to_b4(b)?, &o)?;
        let c = gamma_t(b.graph(), &o)?;
        if a != c {
            t.fail(bipartite_text(b), format!("gamma_os(B4) = {a}, gamma_t(B) = {c}"));
        }
        Ok(t)
    })
}

fn p4(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let first = p4_gamma(cfg)?;
    let second = b4(&SuiteConfig {
        seed: cfg.seed.wrapping_add(1),
        ..*cfg
    })?;
    Ok(combine("p4", SuiteKind::Theorem, cfg.seed, vec![first, second]))
}

fn bp(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let ps = class_posets(cfg, 3..=3, cfg.size(10))?;
    evaluate("bp-equals-osdom", SuiteKind::Theorem, cfg.seed, ps, |p| {
        let mut t = Trial::default();
        let a = os(p, &o)?;
        let b = bipartite_transformation(p);
        let general = biclique_partition(&b, BicliqueMode::General, None, &o)?.value;
        let stars = biclique_partition(&b, BicliqueMode::StarDoubleStar, Some(p), &o)?.value;
        if a != general || general != stars {
            t.fail(
                poset_text(p),
                format!("gamma_os = {a}, bp general = {general}, bp star = {stars}"),
            );
        }
        Ok(t)
    })
}

fn helly(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let mut instances: Vec<(Poset, bool)> = class_posets(cfg, 3..=3, cfg.size(10))?
        .into_iter()
        .map(|p| (p, false))
        .collect();
    let mut r = rng(cfg.seed.wrapping_add(1));
    for _ in 0..cfg.trials {
        let n = r.gen_range(2..=6);
        instances.push((graded_poset(&random_tree(&mut r, n), 3)?, true));
    }
    evaluate("helly", SuiteKind::Theorem, cfg.seed, instances, |(p, from_tree)| {
        let mut t = Trial::default();
        let inst = poset_text(p);
        if p.middle().len() <= SUBSET_ORACLE_CAP {
            let (pairs, subsets) = (complete_by_pairs(p), complete_by_subsets(p)?);
            if pairs != subsets {
                t.fail(
                    inst.clone(),
                    format!("complete by pairs = {pairs}, by subsets = {subsets}"),
                );
            }
        }
        if !is_helly_poset(p)?.holds {
            if *from_tree {
                t.fail(inst, "P_3 of a tree is not Helly".into());
            }
            return Ok(t);
        }
        t.tags.push("helly");
        let a = os(p, &o)?;
        let md = middle_graph(p)?;
        let we = weighted_clique_partition(&md, &o)?.value;
        let chi = chromatic_number(&md.complement(), &o)?.value;
        if a > we || a > 2 * chi {
            t.fail(
                inst.clone(),
                format!("gamma_os = {a}, we(MD) = {we}, 2 chi = {}", 2 * chi),
            );
        }
        let complete = is_complete_helly_poset(p)?.holds;
        if complete {
            t.tags.push("complete");
            if a != we {
                t.fail(inst, format!("complete Helly: gamma_os = {a}, we(MD) = {we}"));
            }
        } else if *from_tree {
            t.fail(inst, "P_3 of a tree is not complete Helly".into());
        }
        Ok(t)
    })
}

fn named_graphs() -> Vec<Graph> {
    let mut out = vec![Graph::three_sun()];
    for n in 3..=7 {
        out.push(Graph::cycle(n).expect("n >= 3"));
        out.push(Graph::path(n).expect("small"));
        out.push(Graph::complete(n).expect("small"));
    }
    out.push(Graph::complete_bipartite(2, 3).expect("small"));
    out.push(Graph::complete_bipartite(3, 3).expect("small"));
    out
}

fn c6(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let size = cfg.size(7);
    let mut graphs = named_graphs();
    graphs.extend((0..=size.min(EXHAUSTIVE_GRAPH_CAP)).flat_map(graphs_up_to_iso));
    let mut r = rng(cfg.seed);
    for _ in 0..cfg.trials {
        let n = r.gen_range(1..=size);
        graphs.push(random_graph(&mut r, n));
    }
    let graph_part = evaluate("c6", SuiteKind::Theorem, cfg.seed, graphs, |g| {
        let mut t = Trial::default();
        let free = is_sun_c456_free(g);
        let be_free = find_induced_cycle(g.extended_double_cover().graph(), 6, 6).is_none();
        if free != be_free {
            t.fail(graph_text(g), format!("G free = {free}, B_e(G) C6-free = {be_free}"));
        }
        Ok(t)
    })?;
    let mut r = rng(cfg.seed.wrapping_add(1));
    let psize = cfg.size(10);
    let posets: Vec<Poset> = (0..cfg.trials)
        .map(|_| {
            let layers = r.gen_range(2..=4).min(psize.max(1));
            let n = r.gen_range(layers..=psize.max(layers));
            random_layered_poset(&mut r, layers, n)
        })
        .collect();
    let poset_part = evaluate("c6", SuiteKind::Theorem, cfg.seed, posets, |p| {
        let mut t = Trial::default();
        let wc = is_weakly_chordal(&p.comparability_graph());
        let cb = is_chordal_bipartite(bipartite_transformation(p).graph())?;
        if wc != cb {
            t.fail(
                poset_text(p),
                format!("Comp weakly chordal = {wc}, B(P) chordal bipartite = {cb}"),
            );
        }
        Ok(t)
    })?;
    Ok(combine(
        "c6",
        SuiteKind::Theorem,
        cfg.seed,
        vec![graph_part, poset_part],
    ))
}

fn product_k2(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let bs = bipartite_graphs(cfg, cfg.seed, 3, cfg.size(10), true)?;
    evaluate("product-k2", SuiteKind::Theorem, cfg.seed, bs, |b| {
        let mut t = Trial::default();
        let prod = b.as_poset().cartesian_product(&Poset::chain(2))?;
        let a = os(&prod, &o)?;
        let (gt, gm) = (gamma_t(b.graph(), &o)?, gamma(b.graph(), &o)?);
        let md = middle_graph(&prod)?;
        let iso = graph_isomorphism(&md, b.graph()).is_some();
        if !(a >= gt && gt >= gm && iso) {
            t.fail(
                bipartite_text(b),
                format!("gamma_os(BxK2) = {a}, gamma_t = {gt}, gamma = {gm}, MD iso B = {iso}"),
            );
        }
        Ok(t)
    })
}

fn hardness(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let instances: Vec<(CnfFormula, usize)> = (1..=cfg.size(3))
        .flat_map(canonical_formulas)
        .flat_map(|f| [(f.clone(), 4), (f, 5)])
        .collect();
    evaluate("hardness", SuiteKind::Theorem, cfg.seed, instances, |(f, k)| {
        let mut t = Trial::default();
        let out = reduce_to_poset(f, *k)?;
        let n = f.var_count;
        let expected = n * n * (k - 2) + 4 * n;
        let sat = sat_bruteforce(f)?;
        let g = os(&out.poset, &o)?;
        let all_present = f.absent_literals().is_empty();
        if all_present {
            t.tags.push("all_literals_present");
        }
        let agree = sat == (g <= out.threshold);
        let inst = format!("{} k={k}", crate::hardness::formula_name(f));
        if out.poset.len() != expected {
            t.fail(
                inst.clone(),
                format!("{} elements, expected {expected}", out.poset.len()),
            );
        }
        if !agree {
            t.tags.push(if all_present {
                "mismatch_all_literals_present"
            } else {
                "mismatch_with_absent_literal"
            });
            t.fail(
                inst,
                format!("sat = {sat}, gamma_os = {g}, threshold = {}", out.threshold),
            );
        }
        Ok(t)
    })
}

fn chi_vs_gamma(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let o = cfg.opts();
    let graphs = connected_graphs(cfg, cfg.seed, 1, cfg.size(8))?;
    evaluate("chi-vs-gamma", SuiteKind::Probe, cfg.seed, graphs, |g| {
        let mut t = Trial::default();
        if !is_sun_c456_free(g) {
            return Ok(Trial::skip());
        }
        let chi = chromatic_number(&g.square().complement(), &o)?.value;
        let gm = gamma(g, &o)?;
        if chi > gm {
            t.fail(graph_text(g), format!("chi(complement of G^2) = {chi} > gamma = {gm}"));
        } else if chi < gm {
            t.tags.push("strict");
            t.data.push(format!("chi = {chi} < gamma = {gm}: {}", graph_text(g)));
        }
        Ok(t)
    })
}
