//! Every registered suite at small trial counts, and report determinism.

use osdom::hardness::canonical_formulas;
use osdom::solvers::SolveOptions;
use osdom::verify::{conjecture_search, run_suite, suite_names, ConjectureProblem, SuiteConfig, SuiteKind};
use osdom::Error;

#[test]
fn theorem_suites_pass_at_small_counts() {
    for name in suite_names() {
        if name == "hardness" {
            continue;
        }
        let r = run_suite(name, &SuiteConfig::new(25, 11)).unwrap();
        if r.kind == SuiteKind::Theorem {
            assert!(r.passed(), "{}", r.to_text());
        }
        assert!(r.checked > 0 || r.kind == SuiteKind::Probe, "{name} checked nothing");
    }
}

#[test]
fn reports_depend_only_on_inputs() {
    for name in ["star", "roman", "c6", "chi-vs-gamma"] {
        let cfg = SuiteConfig::new(30, 5);
        let a = run_suite(name, &cfg).unwrap();
        let b = run_suite(name, &cfg).unwrap();
        assert_eq!(a, b, "{name}");
        assert_eq!(a.to_text(), b.to_text());
    }
    let a = run_suite("star", &SuiteConfig::new(30, 5)).unwrap();
    let c = run_suite("star", &SuiteConfig::new(30, 6)).unwrap();
    assert_ne!(a.to_text(), c.to_text());
}

#[test]
fn size_bound_is_respected() {
    let r = run_suite("b4", &SuiteConfig::new(20, 3).with_size_max(4)).unwrap();
    assert!(r.passed());
    assert_eq!(r.checked, 20);
}

#[test]
fn hardness_suite_on_one_variable() {
    let r = run_suite("hardness", &SuiteConfig::new(1, 0).with_size_max(1)).unwrap();
    assert_eq!(r.trials, 2 * canonical_formulas(1).len());
    assert_eq!(r.counter("mismatch_all_literals_present"), 0);
    assert_eq!(r.failures.len(), r.counter("mismatch_with_absent_literal"));
}

#[test]
fn unknown_suite() {
    assert!(matches!(
        run_suite("nope", &SuiteConfig::new(1, 0)),
        Err(Error::UnknownSuite(_))
    ));
}

#[test]
fn summary_is_key_value() {
    let r = run_suite("helly", &SuiteConfig::new(10, 2)).unwrap();
    for line in r.summary().lines() {
        assert!(line.split_once('=').is_some(), "{line}");
    }
    assert!(r.summary().contains("passed=true\n"));
}

#[test]
fn conjecture_search_is_reproducible() {
    for problem in [ConjectureProblem::ProductPosets, ConjectureProblem::ProductBipartite] {
        let a = conjecture_search(problem, 8, 4, &SolveOptions::default()).unwrap();
        let b = conjecture_search(problem, 8, 4, &SolveOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.trials, 8);
    }
}
