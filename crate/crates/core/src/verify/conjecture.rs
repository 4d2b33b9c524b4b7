//! Search for counterexamples to `γ_os(P₁×P₂) ≥ γ_os(P₁)·γ_os(P₂)`.
//!
//! Both inequalities are open; findings are reported as data and nothing is
//! asserted about them.

use rand::Rng;
use rayon::prelude::*;

use super::one_line;
use super::random::{random_bipartite, random_layered_poset, rng};
use crate::error::Result;
use crate::io::write_poset;
use crate::poset::Poset;
use crate::solvers::{os_domination, OsMethod, SolveOptions};

/// Largest factor drawn by the search, so products stay at 25 elements.
pub const FACTOR_SIZE_MAX: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureProblem {
    /// Posets in `𝒫_2(k)`, at least one without a greatest and a least
    /// element.
    ProductPosets,
    /// Bipartite graphs without isolated vertices, read as height-2 posets.
    ProductBipartite,
}

impl ConjectureProblem {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "product_posets" | "product-posets" => Some(ConjectureProblem::ProductPosets),
            "product_bipartite" | "product-bipartite" => Some(ConjectureProblem::ProductBipartite),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ConjectureProblem::ProductPosets => "product_posets",
            ConjectureProblem::ProductBipartite => "product_bipartite",
        }
    }
}

/// Values of both sides for one pair of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub left: String,
    pub right: String,
    pub product: usize,
    pub left_value: usize,
    pub right_value: usize,
}

impl Finding {
    pub fn violates(&self) -> bool {
        self.product < self.left_value * self.right_value
    }

    pub fn line(&self) -> String {
        format!(
            "gamma_os(P1 x P2) = {} vs {} * {} | P1: {} | P2: {}",
            self.product, self.left_value, self.right_value, self.left, self.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub problem: ConjectureProblem,
    pub seed: u64,
    pub trials: usize,
    /// Pairs that violate the inequality.
    pub findings: Vec<Finding>,
}

/// `γ_os` of the product and of both factors.
pub fn product_values(p1: &Poset, p2: &Poset, opts: &SolveOptions) -> Result<Finding> {
    let os = |p: &Poset| -> Result<usize> { Ok(os_domination(p, OsMethod::Direct, opts)?.value) };
    Ok(Finding {
        left: one_line(&write_poset(p1)),
        right: one_line(&write_poset(p2)),
        product: os(&p1.cartesian_product(p2)?)?,
        left_value: os(p1)?,
        right_value: os(p2)?,
    })
}

fn has_top_or_bottom(p: &Poset) -> bool {
    p.maximal().len() == 1 || p.minimal().len() == 1
}

fn draw_pair<R: Rng>(r: &mut R, problem: ConjectureProblem) -> (Poset, Poset) {
    match problem {
        ConjectureProblem::ProductPosets => loop {
            let k = r.gen_range(2..=3);
            let draw = |r: &mut R| loop {
                let n = r.gen_range(k..=FACTOR_SIZE_MAX);
                let p = random_layered_poset(r, k, n);
                if p.in_class(2, k) {
                    return p;
                }
            };
            let (a, b) = (draw(r), draw(r));
            if !has_top_or_bottom(&a) || !has_top_or_bottom(&b) {
                return (a, b);
            }
        },
        ConjectureProblem::ProductBipartite => {
            let draw = |r: &mut R| {
                random_bipartite(r, 2, FACTOR_SIZE_MAX, false)
                    .expect("two vertices always admit a bipartite graph")
                    .as_poset()
            };
            (draw(r), draw(r))
        }
    }
}

/// Checks `budget` random factor pairs; an empty budget runs nothing.
pub fn conjecture_search(
    problem: ConjectureProblem,
    budget: usize,
    seed: u64,
    opts: &SolveOptions,
) -> Result<SearchReport> {
    let mut r = rng(seed);
    let pairs: Vec<(Poset, Poset)> = (0..budget).map(|_| draw_pair(&mut r, problem)).collect();
    let values: Vec<Result<Finding>> = pairs.par_iter().map(|(a, b)| product_values(a, b, opts)).collect();
    let mut findings = Vec::new();
    for v in values {
        let f = v?;
        if f.violates() {
            findings.push(f);
        }
    }
    Ok(SearchReport {
        problem,
        seed,
        trials: budget,
        findings,
    })
}
