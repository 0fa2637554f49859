use zetakit::pseudochar::{
    default_grid, elementary_bounds, verify_lemma41, verify_lemma42, verify_thm15,
};
use zetakit::report::{Case, CaseStatus, VerificationReport};

fn case<'a>(r: &'a VerificationReport, id: &str) -> &'a Case {
    r.cases
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("missing case {}", id))
}

#[test]
fn sandwich_scan_through_the_midrange() {
    let r = verify_thm15(2, 60, 544).unwrap();
    assert!(r.passed(), "first failure: {:?}", r.first_failure());

    // every stated family is proven at its own threshold
    assert_eq!(case(&r, "thm15-z-zeta-s017-k034").status, CaseStatus::Pass);
    assert_eq!(case(&r, "thm15-t-theta-s038-k076").status, CaseStatus::Pass);
    assert_eq!(case(&r, "thm15-q-zeta-s034-k068").status, CaseStatus::Pass);
    // the theta reciprocal threshold (114) sits above this scan, so its
    // rows stay observational here
    assert_eq!(
        case(&r, "thm15-q-theta-s060-k120").status,
        CaseStatus::Observational
    );
    // extrapolated families report as extrapolated, not proven
    assert_eq!(
        case(&r, "thm15-e-eta-s017-k033").status,
        CaseStatus::Extrapolated
    );
    assert_eq!(
        case(&r, "thm15-q-eta-s034-k067").status,
        CaseStatus::Extrapolated
    );
    assert_eq!(
        case(&r, "thm15-f-phi-weak-s038-k076").status,
        CaseStatus::Extrapolated
    );
    // the naive phi transfer is recorded but never asserted
    assert_eq!(
        case(&r, "thm15-f-phi-naive-s060-k120").status,
        CaseStatus::Observational
    );
    // below a threshold nothing is asserted
    assert_eq!(
        case(&r, "thm15-z-zeta-s002-k004").status,
        CaseStatus::Observational
    );

    // one onset row per family, plus route-agreement spot checks riding
    // on the scan's top arguments
    let onsets = r.cases.iter().filter(|c| c.id.starts_with("thm15-onset-"));
    assert_eq!(onsets.count(), 8);
    assert!(case(&r, "thm15-route-frac-zeta-k120").status == CaseStatus::Pass);
    assert!(case(&r, "thm15-route-dist-eta-k120").status == CaseStatus::Pass);
}

#[test]
fn factorial_decay_window_holds() {
    let r = verify_lemma41(1216).unwrap();
    assert!(r.passed(), "first failure: {:?}", r.first_failure());

    // k = 1 covers all five families across their 51-point windows;
    // k = 2 only where the decomposition reaches (families 0 and 1)
    let k1 = r.cases.iter().filter(|c| c.id.contains("-k1-")).count();
    assert_eq!(k1, 5 * 51);
    let k2 = r.cases.iter().filter(|c| c.id.contains("-k2-")).count();
    assert_eq!(k2, 42 + 17);
    assert_eq!(case(&r, "lemma41-i0-k1-s009").status, CaseStatus::Pass);
    assert_eq!(case(&r, "lemma41-i4-k1-s278").status, CaseStatus::Pass);
    assert_eq!(case(&r, "lemma41-i1-k2-s068").status, CaseStatus::Pass);
    assert_eq!(case(&r, "lemma41-route-zeta-s040").status, CaseStatus::Pass);
}

#[test]
fn sine_identity_across_all_orders() {
    let r = verify_lemma42(40, &default_grid(), 256).unwrap();
    assert!(r.passed(), "first failure: {:?}", r.first_failure());
    // 40 orders x 9 grid points x 2 polynomials, plus the exact
    // cancellation and monotonicity rows
    let grid_cases = r
        .cases
        .iter()
        .filter(|c| c.id.starts_with("lemma42-p-") || c.id.starts_with("lemma42-q-"))
        .count();
    assert_eq!(grid_cases, 40 * 9 * 2);
    assert_eq!(
        r.cases
            .iter()
            .filter(|c| c.id.starts_with("lemma42-monotone-"))
            .count(),
        9
    );
}

#[test]
fn elementary_bounds_scan() {
    let r = elementary_bounds(64, 192).unwrap();
    assert!(r.passed(), "first failure: {:?}", r.first_failure());
    assert_eq!(case(&r, "bounds-27-s02").status, CaseStatus::Pass);
    assert_eq!(case(&r, "bounds-31-s64").status, CaseStatus::Pass);
    assert_eq!(case(&r, "bounds-route-zeta-s03").status, CaseStatus::Pass);
}

#[test]
fn reports_are_byte_deterministic() {
    let grid = default_grid();
    let a = verify_lemma42(10, &grid, 128).unwrap();
    let b = verify_lemma42(10, &grid, 128).unwrap();
    assert_eq!(
        VerificationReport::to_json(&[a]),
        VerificationReport::to_json(&[b])
    );
    let a = verify_thm15(17, 20, 256).unwrap();
    let b = verify_thm15(17, 20, 256).unwrap();
    assert_eq!(
        VerificationReport::to_json(&[a]),
        VerificationReport::to_json(&[b])
    );
}

// Full stated-threshold scan, including the theta reciprocal family at
// s = 114..134. The acceptance gate runs this range; kept here behind
// --ignored for direct reruns.
#[test]
#[ignore]
fn sandwich_scan_through_every_threshold() {
    let r = verify_thm15(2, 134, 1152).unwrap();
    assert!(r.passed(), "first failure: {:?}", r.first_failure());
    assert_eq!(case(&r, "thm15-q-theta-s114-k228").status, CaseStatus::Pass);
    assert_eq!(case(&r, "thm15-q-theta-s134-k268").status, CaseStatus::Pass);
}
