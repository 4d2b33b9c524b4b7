use super::domination::domination_on;
use super::{mismatch, Method, SolveOptions, SolveResult, Witness};
use crate::bitset::{submasks, ElemSet};
use crate::error::{check_size, Result};
use crate::graph::Graph;

/// Largest graph accepted by the subset-enumerating Roman solvers.
pub const ROMAN_SIZE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RomanMethod {
    /// Enumerate the set of vertices labelled 2.
    Direct,
    /// Minimise `|S| + 2γ(G - S)` over 2-packings `S`.
    TwoPackingFormula,
}

/// Weight of the cheapest Roman function whose 2-labelled set is `twos`.
fn roman_weight(g: &Graph, twos: ElemSet) -> usize {
    2 * twos.len() + g.vertices().difference(g.closed_neighborhood_of(twos)).len()
}

fn roman_function(g: &Graph, twos: ElemSet) -> Vec<u8> {
    let covered = g.closed_neighborhood_of(twos);
    (0..g.len())
        .map(|v| {
            if twos.contains(v) {
                2
            } else if covered.contains(v) {
                0
            } else {
                1
            }
        })
        .collect()
}

/// Roman domination number.
///
/// `Direct` returns the lexicographically least optimal function; the
/// formula method returns the lexicographically least optimal 2-packing.
pub fn roman_domination(g: &Graph, method: RomanMethod, opts: &SolveOptions) -> Result<SolveResult> {
    check_size(g.len(), ROMAN_SIZE_CAP)?;
    match method {
        RomanMethod::Direct => {
            let mut best: Option<(usize, Vec<u8>)> = None;
            for twos in submasks(g.vertices()) {
                let w = roman_weight(g, twos);
                if best.as_ref().is_some_and(|(bw, _)| w > *bw) {
                    continue;
                }
                let f = roman_function(g, twos);
                let better = match &best {
                    None => true,
                    Some((bw, bf)) => w < *bw || f < *bf,
                };
                if better {
                    best = Some((w, f));
                }
            }
            let (value, f) = best.expect("at least the empty set is enumerated");
            Ok(SolveResult {
                value,
                witness: Witness::Roman(f),
                method: Method::Enumeration,
            })
        }
        RomanMethod::TwoPackingFormula => {
            let mut best: Option<(usize, ElemSet)> = None;
            for s in g.two_packings() {
                let rest = g.vertices().difference(s);
                let (gamma, _) = domination_on(g, rest, opts)?;
                let v = s.len() + 2 * gamma;
                let better = match best {
                    None => true,
                    Some((bv, bs)) => v < bv || (v == bv && s.lex_cmp(bs).is_lt()),
                };
                if better {
                    best = Some((v, s));
                }
            }
            let (value, s) = best.expect("the empty set is a 2-packing");
            Ok(SolveResult::set(value, s, Method::BranchAndBound))
        }
    }
}

/// `min |A| + 2γ(G - A)` over all vertex subsets `A`, with `γ` of the empty
/// graph taken as 0. The witness is the lexicographically least optimal `A`.
pub fn theta(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    check_size(g.len(), ROMAN_SIZE_CAP)?;
    let mut best: Option<(usize, ElemSet)> = None;
    for a in submasks(g.vertices()) {
        if best.is_some_and(|(bv, _)| a.len() > bv) {
            continue;
        }
        let rest = g.vertices().difference(a);
        let (gamma, _) = domination_on(g, rest, &SolveOptions::unchecked_with(opts.budget))?;
        let v = a.len() + 2 * gamma;
        let better = match best {
            None => true,
            Some((bv, ba)) => v < bv || (v == bv && a.lex_cmp(ba).is_lt()),
        };
        if better {
            best = Some((v, a));
        }
    }
    let (value, a) = best.expect("the empty set is enumerated");
    if opts.cross_check(g.len()) {
        let direct = roman_domination(g, RomanMethod::Direct, opts)?;
        if direct.value > value {
            return Err(mismatch("theta lower than the Roman number", value, direct.value));
        }
    }
    Ok(SolveResult::set(value, a, Method::Enumeration))
}

impl SolveOptions {
    pub(crate) fn unchecked_with(budget: u64) -> SolveOptions {
        SolveOptions {
            budget,
            cross_check_threshold: 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roman(g: &Graph) -> usize {
        roman_domination(g, RomanMethod::Direct, &SolveOptions::default())
            .unwrap()
            .value
    }

    #[test]
    fn roman_small_values() {
        assert_eq!(roman(&Graph::complete(4).unwrap()), 2);
        assert_eq!(roman(&Graph::new(1).unwrap()), 1);
        assert_eq!(roman(&Graph::new(0).unwrap()), 0);
        for n in 3usize..=9 {
            let want = (2 * n).div_ceil(3);
            assert_eq!(roman(&Graph::path(n).unwrap()), want, "P{n}");
            assert_eq!(roman(&Graph::cycle(n).unwrap()), want, "C{n}");
        }
    }

    #[test]
    fn roman_function_witness() {
        let r = roman_domination(&Graph::path(3).unwrap(), RomanMethod::Direct, &SolveOptions::default()).unwrap();
        assert_eq!(r.witness, Witness::Roman(vec![0, 2, 0]));
    }

    #[test]
    fn formula_matches_on_paths() {
        let o = SolveOptions::default();
        for n in 2..=7 {
            let g = Graph::path(n).unwrap();
            let f = roman_domination(&g, RomanMethod::TwoPackingFormula, &o).unwrap();
            assert_eq!(f.value, roman(&g));
        }
    }

    #[test]
    fn theta_values() {
        let o = SolveOptions::default();
        assert_eq!(theta(&Graph::complete(4).unwrap(), &o).unwrap().value, 2);
        assert_eq!(theta(&Graph::path(4).unwrap(), &o).unwrap().value, 3);
        let e = theta(&Graph::new(3).unwrap(), &o).unwrap();
        assert_eq!(e.value, 3);
    }
}
