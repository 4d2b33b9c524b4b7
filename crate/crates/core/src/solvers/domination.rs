use super::cover::{CoverProblem, Req};
use super::{mismatch, Method, SolveOptions, SolveResult};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poset::Poset;
use crate::transforms;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationVariant {
    Plain,
    Total,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OsMethod {
    /// Search over the order-sensitive definition itself.
    Direct,
    /// Plain domination of the comparability graph of the star extension.
    ViaStar,
}

fn dominates(g: &Graph, live: ElemSet, d: ElemSet, total: bool) -> bool {
    live.iter().all(|v| {
        let nb = g.neighbors(v).intersection(live);
        if total {
            nb.intersects(d)
        } else {
            d.contains(v) || nb.intersects(d)
        }
    })
}

fn domination_problem(g: &Graph, live: ElemSet, total: bool) -> CoverProblem {
    let reqs = live
        .iter()
        .map(|v| {
            let nb = g.neighbors(v).intersection(live);
            Req::Hit(if total { nb } else { nb.with(v) })
        })
        .collect();
    CoverProblem { universe: live, reqs }
}

/// `γ` of the subgraph induced by `live`, without reindexing.
pub(crate) fn domination_on(g: &Graph, live: ElemSet, opts: &SolveOptions) -> Result<(usize, ElemSet)> {
    let prob = domination_problem(g, live, false);
    let found = prob.solve(opts.budget)?;
    if opts.cross_check(live.len()) {
        let flat =
            CoverProblem::enumerate(live, |d| dominates(g, live, d, false)).expect("the whole vertex set dominates");
        if flat != found {
            return Err(mismatch("domination", found, flat));
        }
    }
    Ok(found)
}

/// Minimum (total) dominating set, lexicographically least among optima.
pub fn domination(g: &Graph, variant: DominationVariant, opts: &SolveOptions) -> Result<SolveResult> {
    let live = g.vertices();
    let total = variant == DominationVariant::Total;
    if total {
        if let Some(v) = g.isolated_vertices().first() {
            return Err(Error::IsolatedVertex(v));
        }
    }
    let prob = domination_problem(g, live, total);
    let found = prob.solve(opts.budget)?;
    if opts.cross_check(g.len()) {
        let flat = CoverProblem::enumerate(live, |d| dominates(g, live, d, total))
            .expect("total domination exists without isolated vertices");
        if flat != found {
            return Err(mismatch("domination", found, flat));
        }
    }
    Ok(SolveResult::set(found.0, found.1, Method::BranchAndBound))
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    Ok(domination(g, DominationVariant::Plain, &SolveOptions::default())?.value)
}

pub fn total_domination_number(g: &Graph) -> Result<usize> {
    Ok(domination(g, DominationVariant::Total, &SolveOptions::default())?.value)
}

/// Checks the order-sensitive domination definition directly.
pub fn is_os_dominating(p: &Poset, d: ElemSet) -> bool {
    let mids = p.middle();
    (0..p.len()).all(|x| {
        if d.contains(x) {
            return true;
        }
        let dominated = p.comparable_to(x).intersects(d);
        if !mids.contains(x) {
            return dominated;
        }
        p.down(x).intersects(d) && p.up(x).intersects(d)
    })
}

fn os_problem(p: &Poset) -> CoverProblem {
    let mut reqs: Vec<Req> = (0..p.len()).map(|x| Req::Hit(p.comparable_to(x).with(x))).collect();
    for x in p.middle().iter() {
        reqs.push(Req::SelfOrBoth {
            elem: x,
            below: p.down(x),
            above: p.up(x),
        });
    }
    CoverProblem {
        universe: p.elements(),
        reqs,
    }
}

/// Minimum order-sensitive dominating set.
///
/// With no middle elements this is plain domination of the comparability
/// graph. `ViaStar` requires every element on a 3-chain and height at least 3.
pub fn os_domination(p: &Poset, method: OsMethod, opts: &SolveOptions) -> Result<SolveResult> {
    match method {
        OsMethod::Direct => {
            let found = os_problem(p).solve(opts.budget)?;
            if opts.cross_check(p.len()) {
                let flat = CoverProblem::enumerate(p.elements(), |d| is_os_dominating(p, d))
                    .expect("the full element set is os-dominating");
                if flat != found {
                    return Err(mismatch("os-domination", found, flat));
                }
            }
            Ok(SolveResult::set(found.0, found.1, Method::BranchAndBound))
        }
        OsMethod::ViaStar => {
            if p.class3_height().is_none() {
                return Err(Error::Class(
                    "star route needs height >= 3 and every element on a 3-chain".into(),
                ));
            }
            let (star, trace) = transforms::star_extension_traced(p);
            let g = star.comparability_graph();
            let res = domination(&g, DominationVariant::Plain, opts)?;
            let d = res.witness.as_set().expect("domination returns a set");
            // New top and bottom elements stand in for their middle element.
            let mapped: ElemSet = d.iter().map(|v| trace.origin[v][0]).collect();
            if mapped.len() != res.value || !is_os_dominating(p, mapped) {
                return Err(Error::Inconsistent(format!(
                    "star-extension dominating set {:?} does not map to an os-dominating set",
                    star.labels_of(d)
                )));
            }
            Ok(SolveResult::set(res.value, mapped, Method::BranchAndBound))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_p() -> Poset {
        Poset::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn small_domination_values() {
        let o = SolveOptions::default();
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(domination(&k5, DominationVariant::Plain, &o).unwrap().value, 1);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(domination(&p4, DominationVariant::Plain, &o).unwrap().value, 2);
        assert_eq!(domination(&p4, DominationVariant::Total, &o).unwrap().value, 2);
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(domination(&c6, DominationVariant::Plain, &o).unwrap().value, 2);
        assert_eq!(domination(&c6, DominationVariant::Total, &o).unwrap().value, 4);
        let iso = Graph::new(2).unwrap();
        assert!(matches!(
            domination(&iso, DominationVariant::Total, &o),
            Err(Error::IsolatedVertex(0))
        ));
        assert_eq!(domination_number(&Graph::new(0).unwrap()).unwrap(), 0);
    }

    #[test]
    fn os_domination_small() {
        let o = SolveOptions::default();
        let p = fig1_p();
        let r = os_domination(&p, OsMethod::Direct, &o).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.as_set().unwrap().to_vec(), vec![0, 3]);
        assert_eq!(os_domination(&p, OsMethod::ViaStar, &o).unwrap().value, 2);
        assert_eq!(os_domination(&Poset::chain(3), OsMethod::Direct, &o).unwrap().value, 1);
        assert!(matches!(
            os_domination(&Poset::chain(2), OsMethod::ViaStar, &o),
            Err(Error::Class(_))
        ));
    }

    #[test]
    fn os_predicate() {
        let p = fig1_p();
        assert!(is_os_dominating(&p, [0, 3].iter().collect()));
        assert!(!is_os_dominating(&p, ElemSet::singleton(0)));
        assert!(is_os_dominating(&p, p.elements()));
    }
}
