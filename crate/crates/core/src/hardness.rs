//! Reduction from EQUAL-3-SAT to order-sensitive domination, with a
//! brute-force satisfiability oracle to test it end to end.

use std::collections::BTreeSet;

use crate::bitset::ElemSet;
use crate::error::{check_size, Error, Result};
use crate::poset::Poset;
use crate::solvers::{is_os_dominating, os_domination, OsMethod, SolveOptions};

/// Largest variable count accepted by [`sat_bruteforce`].
pub const SAT_VAR_CAP: usize = 20;

/// A literal: `+v` for variable `v` (numbered from 1) and `-v` for its negation.
pub type Literal = i32;

/// Conjunction of three-literal clauses. Literals may repeat inside a clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CnfFormula {
    pub var_count: usize,
    pub clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(var_count: usize, clauses: Vec<[Literal; 3]>) -> Result<CnfFormula> {
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > var_count {
                    return Err(Error::Param(format!(
                        "literal {l} is outside variables 1..={var_count}"
                    )));
                }
            }
        }
        Ok(CnfFormula { var_count, clauses })
    }

    /// Evaluates the formula; bit `v - 1` of `assignment` is the value of `v`.
    pub fn satisfied_by(&self, assignment: u32) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| literal_value(l, assignment)))
    }

    /// DIMACS text with one clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.var_count, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }

    /// Literals that occur in no clause.
    pub fn absent_literals(&self) -> Vec<Literal> {
        let present: BTreeSet<Literal> = self.clauses.iter().flatten().copied().collect();
        (1..=self.var_count as i32)
            .flat_map(|v| [v, -v])
            .filter(|l| !present.contains(l))
            .collect()
    }
}

fn literal_value(l: Literal, assignment: u32) -> bool {
    let bit = (assignment >> (l.unsigned_abs() - 1)) & 1 == 1;
    if l > 0 {
        bit
    } else {
        !bit
    }
}

/// Parses DIMACS CNF. Clauses end at `0` and may span lines; comment lines
/// start with `c`. Every clause must have exactly three literals.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            if header.is_some() {
                return Err(Error::Format {
                    line,
                    msg: "duplicate header".into(),
                });
            }
            let parts: Vec<&str> = t.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(Error::Format {
                    line,
                    msg: "expected `p cnf <vars> <clauses>`".into(),
                });
            }
            let nums: std::result::Result<Vec<usize>, _> = parts[2..].iter().map(|s| s.parse()).collect();
            let nums = nums.map_err(|_| Error::Format {
                line,
                msg: "header counts must be integers".into(),
            })?;
            header = Some((nums[0], nums[1]));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(Error::Format {
                line,
                msg: "clause before header".into(),
            });
        };
        for tok in t.split_whitespace() {
            let l: Literal = tok.parse().map_err(|_| Error::Format {
                line,
                msg: format!("`{tok}` is not an integer literal"),
            })?;
            if l == 0 {
                if current.len() != 3 {
                    return Err(Error::Arity {
                        line,
                        found: current.len(),
                    });
                }
                clauses.push([current[0], current[1], current[2]]);
                current.clear();
            } else {
                if l.unsigned_abs() as usize > vars {
                    return Err(Error::Format {
                        line,
                        msg: format!("literal {l} exceeds the declared {vars} variables"),
                    });
                }
                current.push(l);
            }
        }
    }
    let Some((vars, count)) = header else {
        return Err(Error::Format {
            line: last_line.max(1),
            msg: "missing `p cnf` header".into(),
        });
    };
    if !current.is_empty() {
        return Err(Error::Format {
            line: last_line,
            msg: "last clause is not terminated by 0".into(),
        });
    }
    if clauses.len() != count {
        return Err(Error::Format {
            line: last_line.max(1),
            msg: format!("header declares {count} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(vars, clauses)
}

/// True when the formula has as many clauses as variables.
pub fn validate_equal3sat(f: &CnfFormula) -> bool {
    f.clauses.len() == f.var_count
}

/// Poset produced by [`reduce_to_poset`].
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub poset: Poset,
    /// `2n`: the formula is meant to be satisfiable iff some os-dominating set
    /// has at most this many elements.
    pub threshold: usize,
    /// Role of every element: `a_v`, `a'_v`, `b_v`, `b'_v` or `c^l_{i,p}`.
    pub roles: Vec<String>,
}

/// Index of the maximal element of a literal.
pub fn max_element(l: Literal) -> usize {
    4 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

/// Index of the minimal element of a literal.
pub fn min_element(l: Literal) -> usize {
    max_element(l) + 2
}

/// Builds the reduction poset for chain length `k - 2`.
///
/// Elements `a_v, a'_v, b_v, b'_v` sit at `4(v-1) .. 4(v-1)+3`; the chain
/// element `c^l_{i,p}` (clause `i`, copy `p`, layer `l`, all from 1) follows,
/// in clause-major order. Each chain of clause `i` sits below the maximal
/// element and above the minimal element of every literal of that clause.
pub fn reduce_to_poset(f: &CnfFormula, k: usize) -> Result<ReductionOutput> {
    if k < 4 {
        return Err(Error::Param(format!("chain parameter k must be at least 4, got {k}")));
    }
    if !validate_equal3sat(f) {
        return Err(Error::Validation(format!(
            "{} variables but {} clauses",
            f.var_count,
            f.clauses.len()
        )));
    }
    let n = f.var_count;
    let h = k - 2;
    let total = n * n * h + 4 * n;
    check_size(total, crate::bitset::MAX_ELEMENTS)?;
    let mut labels = Vec::with_capacity(total);
    let mut roles = Vec::with_capacity(total);
    for v in 1..=n {
        for (lab, role) in [
            (format!("a{v}"), format!("a_{v}")),
            (format!("a{v}'"), format!("a'_{v}")),
            (format!("b{v}"), format!("b_{v}")),
            (format!("b{v}'"), format!("b'_{v}")),
        ] {
            labels.push(lab);
            roles.push(role);
        }
    }
    let chain_elem = |i: usize, p: usize, l: usize| 4 * n + ((i - 1) * n + (p - 1)) * h + (l - 1);
    let mut pairs = Vec::new();
    for i in 1..=n {
        for p in 1..=n {
            for l in 1..=h {
                debug_assert_eq!(chain_elem(i, p, l), labels.len());
                labels.push(format!("c{l}_{i}_{p}"));
                roles.push(format!("c^{l}_{{{i},{p}}}"));
                if l > 1 {
                    pairs.push((chain_elem(i, p, l - 1), chain_elem(i, p, l)));
                }
            }
            for &lit in &f.clauses[i - 1] {
                pairs.push((chain_elem(i, p, h), max_element(lit)));
                pairs.push((min_element(lit), chain_elem(i, p, 1)));
            }
        }
    }
    let poset = Poset::new(total, &pairs)?.with_labels(labels)?;
    Ok(ReductionOutput {
        poset,
        threshold: 2 * n,
        roles,
    })
}

/// A satisfying assignment by exhaustive search, lowest bit pattern first.
pub fn satisfying_assignment(f: &CnfFormula) -> Result<Option<u32>> {
    check_size(f.var_count, SAT_VAR_CAP)?;
    Ok((0..1u32 << f.var_count).find(|&a| f.satisfied_by(a)))
}

pub fn sat_bruteforce(f: &CnfFormula) -> Result<bool> {
    Ok(satisfying_assignment(f)?.is_some())
}

/// The set from the constructive direction of the reduction: for one true
/// literal per clause, its maximal and minimal element.
pub fn constructive_witness(f: &CnfFormula, assignment: u32) -> ElemSet {
    let mut s = ElemSet::EMPTY;
    for c in &f.clauses {
        if let Some(&l) = c.iter().find(|&&l| literal_value(l, assignment)) {
            s.insert(max_element(l));
            s.insert(min_element(l));
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub instance: String,
    pub sat: bool,
    pub gamma_os: usize,
    pub threshold: usize,
    pub element_count: usize,
    pub expected_count: usize,
    /// Satisfiability agrees with `gamma_os <= threshold`.
    pub agree: bool,
}

impl SoundnessReport {
    pub fn verdict(&self) -> &'static str {
        if self.agree {
            "agree"
        } else {
            "MISMATCH"
        }
    }

    /// `instance, sat, gamma_os, threshold, verdict`.
    pub fn line(&self) -> String {
        format!(
            "{}, {}, {}, {}, {}",
            self.instance,
            self.sat,
            self.gamma_os,
            self.threshold,
            self.verdict()
        )
    }
}

/// Compact one-line rendering, e.g. `(1 1 1)(-1 -1 -1)`.
pub fn formula_name(f: &CnfFormula) -> String {
    f.clauses
        .iter()
        .map(|c| format!("({} {} {})", c[0], c[1], c[2]))
        .collect::<String>()
}

/// Compares brute-force satisfiability with the exact `γ_os` of the
/// reduction poset.
pub fn soundness_check(f: &CnfFormula, k: usize, opts: &SolveOptions) -> Result<SoundnessReport> {
    let out = reduce_to_poset(f, k)?;
    let sat = sat_bruteforce(f)?;
    let g = os_domination(&out.poset, OsMethod::Direct, opts)?;
    if !is_os_dominating(&out.poset, g.witness.as_set().unwrap_or_default()) {
        return Err(Error::Inconsistent("solver witness is not os-dominating".into()));
    }
    let n = f.var_count;
    Ok(SoundnessReport {
        instance: format!("{} k={k}", formula_name(f)),
        sat,
        gamma_os: g.value,
        threshold: out.threshold,
        element_count: out.poset.len(),
        expected_count: n * n * (k - 2) + 4 * n,
        agree: sat == (g.value <= out.threshold),
    })
}

/// Canonical key of a formula under variable renaming and polarity flips:
/// the least sorted clause list over all such symmetries.
pub fn canonical_key(f: &CnfFormula) -> Vec<[Literal; 3]> {
    let n = f.var_count;
    let mut best: Option<Vec<[Literal; 3]>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        for flips in 0..1u32 << n {
            let map = |l: Literal| -> Literal {
                let v = l.unsigned_abs() as usize - 1;
                let to = perm[v] as i32 + 1;
                let neg = (l < 0) ^ ((flips >> v) & 1 == 1);
                if neg {
                    -to
                } else {
                    to
                }
            };
            let mut cl: Vec<[Literal; 3]> = f
                .clauses
                .iter()
                .map(|c| {
                    let mut m = [map(c[0]), map(c[1]), map(c[2])];
                    m.sort_by_key(|&l| literal_order(l));
                    m
                })
                .collect();
            cl.sort_by_key(|c| c.map(literal_order));
            if best.as_ref().is_none_or(|b| {
                cl.iter()
                    .map(|c| c.map(literal_order))
                    .lt(b.iter().map(|c| c.map(literal_order)))
            }) {
                best = Some(cl);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

/// Sort order on literals: `1 < -1 < 2 < -2 < ...`.
fn literal_order(l: Literal) -> u32 {
    2 * (l.unsigned_abs() - 1) + u32::from(l < 0)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every EQUAL-3-SAT formula on `n` variables up to clause order, literal
/// order within a clause, variable renaming and polarity flips; one
/// representative (its canonical key) per class, in sorted order.
pub fn canonical_formulas(n: usize) -> Vec<CnfFormula> {
    let lits: Vec<Literal> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
    let mut clause_kinds = Vec::new();
    for a in 0..lits.len() {
        for b in a..lits.len() {
            for c in b..lits.len() {
                clause_kinds.push([lits[a], lits[b], lits[c]]);
            }
        }
    }
    let mut seen: BTreeSet<Vec<[Literal; 3]>> = BTreeSet::new();
    let mut choice = vec![0usize; n];
    fn rec(
        n: usize,
        depth: usize,
        start: usize,
        kinds: &[[Literal; 3]],
        choice: &mut Vec<usize>,
        seen: &mut BTreeSet<Vec<[Literal; 3]>>,
    ) {
        if depth == n {
            let f = CnfFormula {
                var_count: n,
                clauses: choice.iter().map(|&i| kinds[i]).collect(),
            };
            seen.insert(canonical_key(&f));
            return;
        }
        for i in start..kinds.len() {
            choice[depth] = i;
            rec(n, depth + 1, i, kinds, choice, seen);
        }
    }
    rec(n, 0, 0, &clause_kinds, &mut choice, &mut seen);
    let mut out: Vec<CnfFormula> = seen
        .into_iter()
        .map(|clauses| CnfFormula { var_count: n, clauses })
        .collect();
    out.sort();
    out
}

/// All formulas on `n` variables with `n` ordered clauses of ordered
/// literals, without any identification. Only sensible for `n = 1`.
pub fn all_ordered_formulas(n: usize) -> Vec<CnfFormula> {
    let lits: Vec<Literal> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
    let per_clause = lits.len().pow(3);
    let total = per_clause.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let clauses = (0..n)
                .map(|_| {
                    let mut c = [0; 3];
                    for slot in c.iter_mut() {
                        *slot = lits[code % lits.len()];
                        code /= lits.len();
                    }
                    c
                })
                .collect();
            CnfFormula { var_count: n, clauses }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let f = parse_dimacs_cnf("p cnf 1 1\n1 1 1 0").unwrap();
        assert_eq!(f.var_count, 1);
        assert_eq!(f.clauses, vec![[1, 1, 1]]);
        assert!(parse_dimacs_cnf("p cnf 2 1\n1 -2 2 0").is_ok());
        assert!(matches!(
            parse_dimacs_cnf("p cnf 1 1\n1 1 0"),
            Err(Error::Arity { line: 2, found: 2 })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p cnf 1 1\n1 2 1 0"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf("1 1 1 0"),
            Err(Error::Format { line: 1, .. })
        ));
    }

    #[test]
    fn equal_check() {
        let one = CnfFormula::new(1, vec![[1, 1, 1]]).unwrap();
        assert!(validate_equal3sat(&one));
        let three = CnfFormula::new(3, vec![[1, 1, 1], [-1, -1, -1], [2, 2, 3]]).unwrap();
        assert!(validate_equal3sat(&three));
        let short = CnfFormula::new(2, vec![[1, 2, 2]]).unwrap();
        assert!(!validate_equal3sat(&short));
        assert!(matches!(reduce_to_poset(&short, 4), Err(Error::Validation(_))));
    }

    #[test]
    fn sat_oracle() {
        assert!(sat_bruteforce(&CnfFormula::new(1, vec![[1, 1, 1]]).unwrap()).unwrap());
        let unsat = CnfFormula::new(3, vec![[1, 1, 1], [-1, -1, -1], [2, 2, 3]]).unwrap();
        assert!(!sat_bruteforce(&unsat).unwrap());
        assert!(sat_bruteforce(&CnfFormula::new(0, vec![]).unwrap()).unwrap());
        let big = CnfFormula::new(21, vec![]).unwrap();
        assert!(matches!(sat_bruteforce(&big), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn reduction_sizes() {
        let one = CnfFormula::new(1, vec![[1, 1, 1]]).unwrap();
        assert_eq!(reduce_to_poset(&one, 4).unwrap().poset.len(), 6);
        let three = CnfFormula::new(3, vec![[1, 2, 3], [-1, -2, 3], [1, -3, 2]]).unwrap();
        let out = reduce_to_poset(&three, 5).unwrap();
        assert_eq!(out.poset.len(), 39);
        assert_eq!(out.threshold, 6);
        assert!(out.poset.in_class(3, 5));
        assert!(matches!(reduce_to_poset(&one, 3), Err(Error::Param(_))));
    }

    #[test]
    fn canonical_counts_for_one_variable() {
        // (x,x,x) ~ (-x,-x,-x) and (x,x,-x) ~ (x,-x,-x).
        assert_eq!(canonical_formulas(1).len(), 2);
        assert_eq!(all_ordered_formulas(1).len(), 8);
        let keys: BTreeSet<_> = all_ordered_formulas(1).iter().map(canonical_key).collect();
        assert_eq!(keys.len(), 2);
    }
}
