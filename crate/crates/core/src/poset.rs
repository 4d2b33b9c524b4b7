//! Finite posets.
//!
//! A [`Poset`] keeps its Hasse diagram (the cover pairs) together with the
//! full strict order, cached as one up-set and one down-set bitset per
//! element. Every order query is a single bit lookup.

use crate::bitset::{ElemSet, MAX_ELEMENTS};
use crate::error::{check_size, Error, Result};
use crate::graph::{iso, Graph};

/// Which derived set [`Poset::up_down_set`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetMode {
    /// Elements strictly above some member.
    Up,
    /// Elements strictly below some member.
    Down,
    /// Elements strictly above every member.
    CommonUp,
    /// Elements strictly below every member.
    CommonDown,
}

/// Maximal, minimal and middle elements.
///
/// An isolated element is both maximal and minimal and appears in both sets;
/// `mid` is always the complement of `max ∪ min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionalSets {
    pub max: ElemSet,
    pub min: ElemSet,
    pub mid: ElemSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl Poset {
    /// Builds a poset on `0..n` from pairs `(a, b)` meaning `a < b`.
    ///
    /// The pairs need not be covers: shortcut pairs implied by transitivity
    /// are accepted and dropped from the stored Hasse diagram.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        check_size(n, MAX_ELEMENTS)?;
        let mut succ = vec![ElemSet::EMPTY; n];
        for &(a, b) in pairs {
            for i in [a, b] {
                if i >= n {
                    return Err(Error::Index { index: i, len: n });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            succ[a].insert(b);
        }

        // Kahn's algorithm; any leftover element sits on a cycle.
        let mut indeg = vec![0usize; n];
        for s in &succ {
            for b in s.iter() {
                indeg[b] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| indeg[i] == 0).collect();
        while let Some(a) = stack.pop() {
            order.push(a);
            for b in succ[a].iter() {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
        if order.len() < n {
            let culprit = (0..n).find(|&i| indeg[i] > 0).unwrap_or(0);
            return Err(Error::Cycle(culprit));
        }

        let mut up = vec![ElemSet::EMPTY; n];
        for &a in order.iter().rev() {
            let mut acc = succ[a];
            for b in succ[a].iter() {
                acc = acc.union(up[b]);
            }
            up[a] = acc;
        }
        Ok(Self::from_up_sets(default_labels(n), up))
    }

    /// Builds a poset from a strict order given as a predicate.
    ///
    /// The predicate must describe an irreflexive, transitive relation;
    /// violations are reported rather than repaired.
    pub fn from_relation<F>(labels: Vec<String>, less: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        check_size(n, MAX_ELEMENTS)?;
        let mut up = vec![ElemSet::EMPTY; n];
        for a in 0..n {
            for b in 0..n {
                if less(a, b) {
                    if a == b {
                        return Err(Error::Cycle(a));
                    }
                    up[a].insert(b);
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if up[b].contains(a) {
                    return Err(Error::Cycle(a));
                }
                if !up[b].is_subset(up[a]) {
                    return Err(Error::Inconsistent(format!("relation is not transitive at {a} < {b}")));
                }
            }
        }
        Ok(Self::from_up_sets(labels, up))
    }

    /// Assembles a poset from an already transitive strict up-relation.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<ElemSet>) -> Poset {
        let n = up.len();
        let mut down = vec![ElemSet::EMPTY; n];
        for (a, s) in up.iter().enumerate() {
            for b in s.iter() {
                down[b].insert(a);
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in up[a].iter() {
                if !up[a].intersects(down[b]) {
                    covers.push((a, b));
                }
            }
        }
        Poset {
            labels,
            covers,
            up,
            down,
        }
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(n, &pairs).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::new(n, &[]).expect("antichain is acyclic")
    }

    /// Replaces the display labels.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Result<Poset> {
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
        self.up.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
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

    /// Resolves a list of labels to an element set; unknown labels are errors.
    pub fn set_of(&self, labels: &[&str]) -> Result<ElemSet> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::Param(format!("unknown element label `{l}`")))
            })
            .collect()
    }

    pub fn labels_of(&self, set: ElemSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// The Hasse diagram, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.less(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a != b && (self.less(a, b) || self.less(b, a))
    }

    #[inline]
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.less(a, b) && !self.up[a].intersects(self.down[b])
    }

    /// Elements strictly above `x`.
    #[inline]
    pub fn up(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    /// Elements strictly below `x`.
    #[inline]
    pub fn down(&self, x: usize) -> ElemSet {
        self.down[x]
    }

    /// Elements comparable to `x`, excluding `x`.
    #[inline]
    pub fn comparable_to(&self, x: usize) -> ElemSet {
        self.up[x].union(self.down[x])
    }

    pub fn maximal(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    pub fn minimal(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.down[x].is_empty()).collect()
    }

    pub fn middle(&self) -> ElemSet {
        (0..self.len())
            .filter(|&x| !self.up[x].is_empty() && !self.down[x].is_empty())
            .collect()
    }

    pub fn positional_sets(&self) -> PositionalSets {
        PositionalSets {
            max: self.maximal(),
            min: self.minimal(),
            mid: self.middle(),
        }
    }

    /// Up-set, down-set, common up-set or common down-set of `s`.
    ///
    /// The common variants quantify over every member, so for `s = ∅` they
    /// return the whole ground set.
    pub fn up_down_set(&self, s: ElemSet, mode: SetMode) -> ElemSet {
        match mode {
            SetMode::Up => s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.up[x])),
            SetMode::Down => s.iter().fold(ElemSet::EMPTY, |acc, x| acc.union(self.down[x])),
            SetMode::CommonUp => s.iter().fold(self.elements(), |acc, x| acc.intersection(self.up[x])),
            SetMode::CommonDown => s.iter().fold(self.elements(), |acc, x| acc.intersection(self.down[x])),
        }
    }

    /// Length (in elements) of the longest chain ending at each element.
    fn chain_lengths_below(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut len = vec![1usize; self.len()];
        for &x in &order {
            len[x] = 1 + self.down[x].iter().map(|y| len[y]).max().unwrap_or(0);
        }
        len
    }

    fn chain_lengths_above(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.up[x].len());
        let mut len = vec![1usize; self.len()];
        for &x in &order {
            len[x] = 1 + self.up[x].iter().map(|y| len[y]).max().unwrap_or(0);
        }
        len
    }

    /// Size of the largest chain; zero for the empty poset.
    pub fn height(&self) -> usize {
        self.chain_lengths_below().into_iter().max().unwrap_or(0)
    }

    /// Size of the largest chain through each element.
    pub fn longest_chain_through(&self) -> Vec<usize> {
        let below = self.chain_lengths_below();
        let above = self.chain_lengths_above();
        below.iter().zip(&above).map(|(b, a)| b + a - 1).collect()
    }

    /// Rank of each element: the size of the longest chain ending there.
    pub fn ranks(&self) -> Vec<usize> {
        self.chain_lengths_below()
    }

    /// Membership in the class of height-`k` posets whose every element lies
    /// on a chain with at least `l` elements.
    pub fn in_class(&self, l: usize, k: usize) -> bool {
        self.height() == k && self.longest_chain_through().iter().all(|&c| c >= l)
    }

    /// `Some(k)` when the poset is in the class for `l = 3` and its own height
    /// `k >= 3`.
    pub fn class3_height(&self) -> Option<usize> {
        let k = self.height();
        (k >= 3 && self.in_class(3, k)).then_some(k)
    }

    /// True when every cover joins consecutive ranks.
    pub fn is_graded(&self) -> bool {
        let r = self.ranks();
        self.covers.iter().all(|&(a, b)| r[b] == r[a] + 1)
    }

    pub fn comparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.len()).expect("poset size is within the cap");
        for a in 0..self.len() {
            for b in self.up[a].iter() {
                g.add_edge(a, b);
            }
        }
        g.with_labels(self.labels.clone()).expect("label count matches")
    }

    /// The order with every relation reversed.
    pub fn dual(&self) -> Poset {
        Poset::from_up_sets(self.labels.clone(), self.down.clone())
    }

    /// Product order on pairs; element `(i, j)` has index `i * |other| + j`
    /// and label `(label_i,label_j)`.
    pub fn cartesian_product(&self, other: &Poset) -> Result<Poset> {
        let (n1, n2) = (self.len(), other.len());
        check_size(n1 * n2, MAX_ELEMENTS)?;
        let mut labels = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
            }
        }
        let mut up = vec![ElemSet::EMPTY; n1 * n2];
        for i in 0..n1 {
            for j in 0..n2 {
                let a = i * n2 + j;
                for k in 0..n1 {
                    if !self.leq(i, k) {
                        continue;
                    }
                    for l in 0..n2 {
                        if other.leq(j, l) && (i, j) != (k, l) {
                            up[a].insert(k * n2 + l);
                        }
                    }
                }
            }
        }
        Ok(Poset::from_up_sets(labels, up))
    }

    /// Restriction of the order to `keep`, reindexed in increasing order.
    pub fn induced(&self, keep: ElemSet) -> Poset {
        let idx: Vec<usize> = keep.to_vec();
        let mut pos = vec![usize::MAX; self.len()];
        for (new, &old) in idx.iter().enumerate() {
            pos[old] = new;
        }
        let up = idx
            .iter()
            .map(|&old| self.up[old].intersection(keep).iter().map(|o| pos[o]).collect())
            .collect();
        let labels = idx.iter().map(|&o| self.labels[o].clone()).collect();
        Poset::from_up_sets(labels, up)
    }

    /// Order isomorphism test by backtracking; both posets must have at most
    /// `cap` elements.
    pub fn is_isomorphic_capped(&self, other: &Poset, cap: usize) -> Result<bool> {
        check_size(self.len().max(other.len()), cap)?;
        if self.len() != other.len() || self.covers.len() != other.covers.len() {
            return Ok(false);
        }
        Ok(iso::find_isomorphism(&self.up, &other.up).is_some())
    }

    pub fn is_isomorphic(&self, other: &Poset) -> Result<bool> {
        self.is_isomorphic_capped(other, iso::DEFAULT_SIZE_CAP)
    }

    /// An explicit order isomorphism, if one exists.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        iso::find_isomorphism(&self.up, &other.up)
    }

    /// Checks closure axioms by exhaustive pair and triple enumeration.
    pub fn check_axioms(&self) -> bool {
        let n = self.len();
        for a in 0..n {
            if self.less(a, a) {
                return false;
            }
            for b in 0..n {
                if self.less(a, b) && self.less(b, a) {
                    return false;
                }
                for c in 0..n {
                    if self.less(a, b) && self.less(b, c) && !self.less(a, c) {
                        return false;
                    }
                }
            }
        }
        self.covers
            .iter()
            .all(|&(a, b)| self.less(a, b) && !(0..n).any(|z| self.less(a, z) && self.less(z, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_p() -> Poset {
        Poset::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)])
            .unwrap()
            .with_labels(vec!["1", "2", "3", "4", "5"])
            .unwrap()
    }

    #[test]
    fn chain_closure_is_transitive() {
        let p = Poset::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.check_axioms());
    }

    #[test]
    fn shortcuts_are_reduced() {
        let p = Poset::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn two_cycle_is_rejected() {
        assert!(matches!(Poset::new(2, &[(0, 1), (1, 0)]), Err(Error::Cycle(_))));
        assert!(matches!(Poset::new(1, &[(0, 0)]), Err(Error::Cycle(0))));
        assert!(matches!(
            Poset::new(2, &[(0, 2)]),
            Err(Error::Index { index: 2, len: 2 })
        ));
    }

    #[test]
    fn positional_sets_of_small_posets() {
        let c = Poset::chain(3);
        let ps = c.positional_sets();
        assert_eq!(ps.max.to_vec(), vec![2]);
        assert_eq!(ps.min.to_vec(), vec![0]);
        assert_eq!(ps.mid.to_vec(), vec![1]);

        let a = Poset::antichain(3).positional_sets();
        assert_eq!(a.max.to_vec(), vec![0, 1, 2]);
        assert_eq!(a.min.to_vec(), vec![0, 1, 2]);
        assert!(a.mid.is_empty());

        let p = fig1_p();
        assert_eq!(p.labels_of(p.middle()), vec!["2", "3"]);
    }

    #[test]
    fn up_down_modes() {
        let c = Poset::chain(3);
        assert_eq!(c.up_down_set(ElemSet::singleton(1), SetMode::Up).to_vec(), vec![2]);
        assert_eq!(c.up_down_set(ElemSet::singleton(1), SetMode::Down).to_vec(), vec![0]);
        let p = fig1_p();
        assert_eq!(p.up_down_set(ElemSet::EMPTY, SetMode::CommonUp), p.elements());
        let mids = p.middle();
        assert_eq!(p.labels_of(p.up_down_set(mids, SetMode::CommonUp)), vec!["4", "5"]);
        assert_eq!(p.labels_of(p.up_down_set(mids, SetMode::CommonDown)), vec!["1"]);
    }

    #[test]
    fn heights_and_classes() {
        assert_eq!(Poset::chain(4).height(), 4);
        assert_eq!(Poset::antichain(4).height(), 1);
        assert_eq!(Poset::antichain(0).height(), 0);
        assert!(Poset::chain(3).in_class(3, 3));
        assert!(fig1_p().in_class(3, 3));
        let with_isolated = Poset::new(4, &[(0, 1), (1, 2)]).unwrap();
        assert!(!with_isolated.in_class(3, 3));
    }

    #[test]
    fn comparability_graph_of_chain_is_triangle() {
        let g = Poset::chain(3).comparability_graph();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Poset::antichain(4).comparability_graph().edge_count(), 0);
    }

    #[test]
    fn dual_reverses_order() {
        let d = Poset::chain(3).dual();
        assert!(d.less(2, 1) && d.less(1, 0) && d.less(2, 0));
        assert_eq!(d.dual(), Poset::chain(3));
    }

    #[test]
    fn product_of_two_chains_is_a_square() {
        let sq = Poset::chain(2).cartesian_product(&Poset::chain(2)).unwrap();
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.height(), 3);
        assert_eq!(sq.middle().len(), 2);
        assert_eq!(sq.maximal().len(), 1);
        assert_eq!(sq.minimal().len(), 1);
        assert_eq!(sq.label(1), "(0,1)");

        let p = fig1_p();
        let q = p.cartesian_product(&Poset::chain(1)).unwrap();
        assert!(q.is_isomorphic(&p).unwrap());
    }

    #[test]
    fn induced_subposet_keeps_order() {
        let c = Poset::chain(4);
        let s = c.induced([0, 2, 3].iter().collect());
        assert_eq!(s.len(), 3);
        assert_eq!(s.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(s.label(1), "2");
    }
}
