//! Minimum hitting-set search shared by the domination-type solvers.
//!
//! A problem is a list of requirements over a candidate universe. `Hit(S)`
//! asks for a chosen element inside `S`; `SelfOrBoth` asks for `elem` itself
//! or for one chosen element in each of `below` and `above`. Plain, total and
//! order-sensitive domination as well as star-biclique covers are all
//! instances.

use crate::bitset::{combinations, ElemSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub(crate) enum Req {
    Hit(ElemSet),
    SelfOrBoth {
        elem: usize,
        below: ElemSet,
        above: ElemSet,
    },
}

#[derive(Debug, Clone)]
pub(crate) struct CoverProblem {
    pub universe: ElemSet,
    pub reqs: Vec<Req>,
}

impl CoverProblem {
    pub fn is_feasible(&self, d: ElemSet) -> bool {
        self.reqs.iter().all(|r| match *r {
            Req::Hit(s) => s.intersects(d),
            Req::SelfOrBoth { elem, below, above } => d.contains(elem) || (below.intersects(d) && above.intersects(d)),
        })
    }

    /// Minimum size and lexicographically least optimal set, by pruned search.
    pub fn solve(&self, budget: u64) -> Result<(usize, ElemSet)> {
        let mut s = Search {
            p: self,
            nodes: 0,
            budget,
        };
        let base = s.lower_bound(ElemSet::EMPTY, ElemSet::EMPTY)?;
        let mut k = base;
        let witness = loop {
            if k > self.universe.len() {
                return Err(Error::Inconsistent(
                    "requirement set has no solution inside the universe".into(),
                ));
            }
            if let Some(w) = s.feasible(ElemSet::EMPTY, ElemSet::EMPTY, k)? {
                break w;
            }
            k += 1;
        };
        let lex = s.lex_min(k, witness)?;
        Ok((k, lex))
    }

    /// Same answer by flat enumeration of `k`-subsets in lexicographic order,
    /// checked with `pred` instead of the requirement list.
    pub fn enumerate<F: Fn(ElemSet) -> bool>(universe: ElemSet, pred: F) -> Option<(usize, ElemSet)> {
        for k in 0..=universe.len() {
            if let Some(d) = combinations(universe, k).find(|&d| pred(d)) {
                return Some((k, d));
            }
        }
        None
    }
}

struct Search<'a> {
    p: &'a CoverProblem,
    nodes: u64,
    budget: u64,
}

/// Requirements still open under a partial decision.
struct Open {
    /// Candidate sets that each need one more chosen element.
    sets: Vec<ElemSet>,
    /// Undecided element whose own choice would settle a requirement.
    pivot: Option<usize>,
    dead: bool,
}

impl<'a> Search<'a> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    fn open(&self, chosen: ElemSet, banned: ElemSet) -> Open {
        let avail = self.p.universe.difference(banned);
        let mut sets = Vec::new();
        let mut pivot = None;
        for r in &self.p.reqs {
            match *r {
                Req::Hit(s) => {
                    if s.intersects(chosen) {
                        continue;
                    }
                    let c = s.intersection(avail);
                    if c.is_empty() {
                        return Open {
                            sets,
                            pivot,
                            dead: true,
                        };
                    }
                    sets.push(c);
                }
                Req::SelfOrBoth { elem, below, above } => {
                    if chosen.contains(elem) {
                        continue;
                    }
                    let lo = below.intersects(chosen);
                    let hi = above.intersects(chosen);
                    if lo && hi {
                        continue;
                    }
                    if avail.contains(elem) {
                        let c = below.union(above).with(elem).intersection(avail);
                        sets.push(c);
                        if pivot.is_none() {
                            pivot = Some(elem);
                        }
                    } else {
                        for (done, side) in [(lo, below), (hi, above)] {
                            if !done {
                                let c = side.intersection(avail);
                                if c.is_empty() {
                                    return Open {
                                        sets,
                                        pivot,
                                        dead: true,
                                    };
                                }
                                sets.push(c);
                            }
                        }
                    }
                }
            }
        }
        Open {
            sets,
            pivot,
            dead: false,
        }
    }

    /// Greedy disjoint packing of open candidate sets.
    fn packing_bound(sets: &mut [ElemSet]) -> usize {
        sets.sort_by_key(|s| s.len());
        let mut used = ElemSet::EMPTY;
        let mut count = 0;
        for s in sets.iter() {
            if !s.intersects(used) {
                used = used.union(*s);
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&mut self, chosen: ElemSet, banned: ElemSet) -> Result<usize> {
        let mut o = self.open(chosen, banned);
        if o.dead {
            return Ok(usize::MAX / 2);
        }
        Ok(Self::packing_bound(&mut o.sets))
    }

    /// Some feasible superset of `chosen` avoiding `banned` with at most `k`
    /// elements.
    fn feasible(&mut self, chosen: ElemSet, banned: ElemSet, k: usize) -> Result<Option<ElemSet>> {
        self.tick()?;
        let mut o = self.open(chosen, banned);
        if o.dead {
            return Ok(None);
        }
        if o.sets.is_empty() {
            return Ok(Some(chosen));
        }
        let room = k.saturating_sub(chosen.len());
        if room == 0 || Self::packing_bound(&mut o.sets) > room {
            return Ok(None);
        }
        // `packing_bound` sorted the sets by size.
        let smallest = o.sets[0];
        if smallest.len() > 1 {
            if let Some(x) = o.pivot {
                if let Some(w) = self.feasible(chosen.with(x), banned, k)? {
                    return Ok(Some(w));
                }
                return self.feasible(chosen, banned.with(x), k);
            }
        }
        // Rank candidates by how many open sets they touch.
        let mut cands: Vec<(usize, usize)> = smallest
            .iter()
            .map(|c| (o.sets.iter().filter(|s| s.contains(c)).count(), c))
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut ban = banned;
        for (_, c) in cands {
            if let Some(w) = self.feasible(chosen.with(c), ban, k)? {
                return Ok(Some(w));
            }
            ban.insert(c);
        }
        Ok(None)
    }

    /// Lexicographically least feasible set of size `k`, given any feasible
    /// set `witness` of that size.
    fn lex_min(&mut self, k: usize, mut witness: ElemSet) -> Result<ElemSet> {
        let mut chosen = ElemSet::EMPTY;
        let mut banned = ElemSet::EMPTY;
        for i in self.p.universe.iter() {
            if chosen.len() == k {
                break;
            }
            if witness.contains(i) {
                chosen.insert(i);
                continue;
            }
            match self.feasible(chosen.with(i), banned, k)? {
                Some(w) => {
                    witness = w;
                    chosen.insert(i);
                }
                None => banned.insert(i),
            }
        }
        // The witness can be smaller than `k` only if `k` was not optimal.
        debug_assert!(self.p.is_feasible(chosen));
        Ok(chosen)
    }
}
