//! Set families, the Helly property, and Helly posets.

use crate::bitset::{submasks, ElemSet};
use crate::error::{check_size, Error, Result};
use crate::graph::induced::find_induced_cycle;
use crate::poset::Poset;
use crate::transforms;

/// Default cap on the number of members examined by the Helly checks.
pub const HELLY_MEMBER_CAP: usize = 20;

/// Cap on `|Mid|` for the subset-enumeration completeness oracle.
pub const SUBSET_ORACLE_CAP: usize = 12;

/// Indexed family of subsets of `0..ground`; members may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    members: Vec<ElemSet>,
}

impl SetFamily {
    pub fn new(ground: usize, members: Vec<ElemSet>) -> Result<SetFamily> {
        check_size(ground, crate::bitset::MAX_ELEMENTS)?;
        let all = ElemSet::full(ground);
        for m in &members {
            if let Some(x) = m.difference(all).first() {
                return Err(Error::Index { index: x, len: ground });
            }
        }
        Ok(SetFamily { ground, members })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[ElemSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The subfamily with the given member indices, in that order.
    pub fn subfamily(&self, idx: &[usize]) -> SetFamily {
        SetFamily {
            ground: self.ground,
            members: idx.iter().map(|&i| self.members[i]).collect(),
        }
    }
}

/// True when every two members meet.
pub fn is_intersecting(f: &SetFamily) -> bool {
    let m = f.members();
    (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i].intersects(m[j])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyCheck {
    pub holds: bool,
    /// Member indices of a smallest pairwise-intersecting subfamily with
    /// empty intersection.
    pub witness: Option<Vec<usize>>,
}

pub fn has_helly_property(f: &SetFamily) -> Result<HellyCheck> {
    has_helly_property_capped(f, HELLY_MEMBER_CAP)
}

/// Helly test by growing pairwise-intersecting subfamilies in increasing
/// size; the first one with empty intersection is a minimal witness.
pub fn has_helly_property_capped(f: &SetFamily, cap: usize) -> Result<HellyCheck> {
    check_size(f.len(), cap)?;
    let m = f.members();
    let meets: Vec<ElemSet> = (0..m.len())
        .map(|i| (0..m.len()).filter(|&j| j != i && m[i].intersects(m[j])).collect())
        .collect();
    for size in 3..=m.len() {
        let mut pick = Vec::with_capacity(size);
        if let Some(w) = grow(
            m,
            &meets,
            size,
            0,
            ElemSet::full(m.len()),
            ElemSet::full(f.ground()),
            &mut pick,
        ) {
            return Ok(HellyCheck {
                holds: false,
                witness: Some(w),
            });
        }
    }
    Ok(HellyCheck {
        holds: true,
        witness: None,
    })
}

fn grow(
    m: &[ElemSet],
    meets: &[ElemSet],
    size: usize,
    start: usize,
    allowed: ElemSet,
    common: ElemSet,
    pick: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if pick.len() == size {
        return common.is_empty().then(|| pick.clone());
    }
    // A smaller subfamily with empty intersection was already ruled out.
    if common.is_empty() {
        return None;
    }
    for i in allowed.iter().filter(|&i| i >= start) {
        pick.push(i);
        let found = grow(
            m,
            meets,
            size,
            i + 1,
            allowed.intersection(meets[i]),
            common.intersection(m[i]),
            pick,
        );
        pick.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// `{U(x) : x ∈ Mid}`, members listed in element order of the middle set.
pub fn up_family(p: &Poset) -> SetFamily {
    let members = p.middle().iter().map(|x| p.up(x)).collect();
    SetFamily::new(p.len(), members).expect("up-sets lie in the ground set")
}

/// `{D(x) : x ∈ Mid}`, members listed in element order of the middle set.
pub fn down_family(p: &Poset) -> SetFamily {
    let members = p.middle().iter().map(|x| p.down(x)).collect();
    SetFamily::new(p.len(), members).expect("down-sets lie in the ground set")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Up,
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyPosetCheck {
    pub holds: bool,
    /// Failing family and the middle elements whose sets form the witness.
    pub witness: Option<(Side, Vec<usize>)>,
}

fn require_class3(p: &Poset) -> Result<()> {
    p.class3_height()
        .map(|_| ())
        .ok_or_else(|| Error::Class("needs height >= 3 with every element on a chain of size >= 3".into()))
}

pub fn is_helly_poset(p: &Poset) -> Result<HellyPosetCheck> {
    is_helly_poset_capped(p, HELLY_MEMBER_CAP)
}

/// Both the up-family and the down-family of the middle elements have the
/// Helly property.
pub fn is_helly_poset_capped(p: &Poset, cap: usize) -> Result<HellyPosetCheck> {
    require_class3(p)?;
    let mids = p.middle().to_vec();
    for (side, fam) in [(Side::Up, up_family(p)), (Side::Down, down_family(p))] {
        let r = has_helly_property_capped(&fam, cap)?;
        if let Some(w) = r.witness {
            let elems = w.into_iter().map(|i| mids[i]).collect();
            return Ok(HellyPosetCheck {
                holds: false,
                witness: Some((side, elems)),
            });
        }
    }
    Ok(HellyPosetCheck {
        holds: true,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteCheck {
    pub holds: bool,
    /// Two middle elements whose up-sets and down-sets disagree on meeting.
    pub witness: Option<(usize, usize)>,
}

/// Complete Helly test.
///
/// "Intersecting" is a pairwise condition, so the up and down families of
/// every middle subset agree exactly when they agree on every pair.
pub fn is_complete_helly_poset(p: &Poset) -> Result<CompleteCheck> {
    if !is_helly_poset(p)?.holds {
        return Err(Error::NotHelly);
    }
    Ok(complete_pairs(p))
}

fn complete_pairs(p: &Poset) -> CompleteCheck {
    let mids = p.middle().to_vec();
    for (i, &a) in mids.iter().enumerate() {
        for &b in &mids[i + 1..] {
            let up = p.up(a).intersects(p.up(b));
            let down = p.down(a).intersects(p.down(b));
            if up != down {
                return CompleteCheck {
                    holds: false,
                    witness: Some((a, b)),
                };
            }
        }
    }
    CompleteCheck {
        holds: true,
        witness: None,
    }
}

/// The completeness condition checked over every subset of the middle set.
/// Needs `|Mid| <= SUBSET_ORACLE_CAP`; the Helly precondition is not checked.
pub fn complete_by_subsets(p: &Poset) -> Result<bool> {
    let mids = p.middle();
    check_size(mids.len(), SUBSET_ORACLE_CAP)?;
    for s in submasks(mids) {
        let up = SetFamily::new(p.len(), s.iter().map(|x| p.up(x)).collect())?;
        let down = SetFamily::new(p.len(), s.iter().map(|x| p.down(x)).collect())?;
        if is_intersecting(&up) != is_intersecting(&down) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pair test without the Helly precondition; used to compare against
/// [`complete_by_subsets`] on arbitrary posets.
pub fn complete_by_pairs(p: &Poset) -> bool {
    complete_pairs(p).holds
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C6Level {
    /// Both `H_u(P)` and `H_d(P)`.
    HuHd,
    /// The whole comparability graph.
    Comp,
}

/// Sufficient condition for the Helly property: the named graphs have no
/// induced 6-cycle. A positive answer is checked against
/// [`is_helly_poset`]; a contradiction is reported as an inconsistency.
pub fn c6_sufficient_check(p: &Poset, level: C6Level) -> Result<bool> {
    require_class3(p)?;
    let free = match level {
        C6Level::HuHd => {
            let (hu, hd) = transforms::hu_hd(p)?;
            find_induced_cycle(&hu, 6, 6).is_none() && find_induced_cycle(&hd, 6, 6).is_none()
        }
        C6Level::Comp => find_induced_cycle(&p.comparability_graph(), 6, 6).is_none(),
    };
    if free && p.middle().len() <= HELLY_MEMBER_CAP && !is_helly_poset(p)?.holds {
        return Err(Error::Inconsistent(
            "C6-free condition holds but the poset is not Helly".into(),
        ));
    }
    Ok(free)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(ground: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(ground, sets.iter().map(|s| s.iter().collect()).collect()).unwrap()
    }

    #[test]
    fn intersecting_examples() {
        assert!(is_intersecting(&fam(4, &[&[1, 2], &[2, 3], &[1, 3]])));
        assert!(!is_intersecting(&fam(3, &[&[1], &[2]])));
        assert!(is_intersecting(&fam(3, &[])));
    }

    #[test]
    fn triangle_family_is_not_helly() {
        let f = fam(4, &[&[1, 2], &[2, 3], &[1, 3]]);
        let r = has_helly_property(&f).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec![0, 1, 2]));
    }

    #[test]
    fn small_and_nested_families_are_helly() {
        assert!(has_helly_property(&fam(3, &[&[0], &[1]])).unwrap().holds);
        let nested = fam(5, &[&[0], &[0, 1], &[0, 1, 2], &[0, 1, 2, 3]]);
        assert!(has_helly_property(&nested).unwrap().holds);
    }

    #[test]
    fn member_cap() {
        let f = SetFamily::new(2, vec![ElemSet::singleton(0); 21]).unwrap();
        assert!(matches!(
            has_helly_property(&f),
            Err(Error::SizeCap { size: 21, cap: 20 })
        ));
    }

    #[test]
    fn chains_pass_the_c6_check() {
        assert!(c6_sufficient_check(&Poset::chain(3), C6Level::Comp).unwrap());
        assert!(c6_sufficient_check(&Poset::chain(5), C6Level::HuHd).unwrap());
    }

    #[test]
    fn completeness_on_chain() {
        let c = is_complete_helly_poset(&Poset::chain(4)).unwrap();
        assert!(c.holds);
        assert!(complete_by_subsets(&Poset::chain(4)).unwrap());
    }
}
