use std::time::Instant;

use nbracket_core::expand::{supplant_all, Sequential};
use nbracket_core::identities::shapes::{bremner_side1, bremner_side2};
use nbracket_core::identities::{CoefficientProfile, Verifier};
use nbracket_core::{Expander, Method};

#[test]
fn oracle_l2_matches_closed_form() {
    let x = Expander::default();
    let closed = CoefficientProfile::closed_form(2).unwrap();
    for e in [bremner_side1(2), bremner_side2(2)] {
        let start = Instant::now();
        let run = x.oracle_run(&e, &Sequential).unwrap();
        assert_eq!(run.words, 1_728_000);
        assert_eq!(CoefficientProfile::from_element(2, &run.profile).unwrap(), closed);
        assert!(start.elapsed().as_secs() < 60);
        assert_eq!(x.fast_profile(&e).unwrap(), run.profile);
    }
}

#[test]
fn fast_path_l3_matches_closed_form() {
    let v = Verifier { method: Method::Fast, ..Verifier::default() };
    let report = v.verify_bremner(3).unwrap();
    assert!(report.is_verified(), "{report}");
}

#[test]
fn supplanted_oracle_l3_side2() {
    let x = Expander::default();
    let e = bremner_side2(3);
    let scaled = supplant_all(&e).unwrap();
    assert_eq!(scaled.factor, 5040.into());
    let run = x.oracle_run_scaled(&scaled, &Sequential).unwrap();
    assert_eq!(run.words, 5040 * 5040);
    assert_eq!(run.profile, x.fast_profile(&e).unwrap());
}

#[test]
fn fast_path_beyond_enumeration() {
    let v = Verifier { method: Method::Fast, ..Verifier::default() };
    for l in 4..=6 {
        let start = Instant::now();
        let report = v.verify_bremner(l).unwrap();
        assert!(report.is_verified(), "{report}");
        eprintln!("L={l}: {} words, {:?}", report.words, start.elapsed());
    }
}

#[test]
fn pinned_odd_reduction_constants() {
    let v = Verifier::default();
    let k = |n| v.odd_reduction_constant(n).unwrap().to_string();
    assert_eq!(k(1), "1");
    assert_eq!(k(3), "3/10");
    assert_eq!(k(5), "5/126");
}
