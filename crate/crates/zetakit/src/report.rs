//! Verification reports: the shared result type every `verify_*` routine
//! returns. A suite is a named list of cases, each recording the identity
//! checked, both sides as text, and a residual. Reports serialize to JSON,
//! CSV and plain text; JSON and CSV are deterministic functions of the
//! inputs (wall time is kept in memory and in text output only, so runs
//! with identical configuration emit byte-identical machine output).

use std::fmt;
use std::time::Duration;

use rug::{Float, Rational};
use serde::Serialize;

use crate::exactcore::{rat_string, PiScaled};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    /// The identity held at the demanded tolerance (exact or in bits).
    Pass,
    /// The identity failed; the suite fails with it.
    Fail,
    /// Checked outside its proven range; informative, never fails a suite.
    Extrapolated,
    /// A measured quantity with no pass criterion (e.g. root locations).
    Observational,
}

impl fmt::Display for CaseStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseStatus::Pass => "pass",
            CaseStatus::Fail => "fail",
            CaseStatus::Extrapolated => "extrapolated",
            CaseStatus::Observational => "observational",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub id: String,
    /// What equality was checked, in words.
    pub identity: String,
    pub status: CaseStatus,
    pub lhs: String,
    pub rhs: String,
    /// Exact difference for rational checks, |lhs − rhs| for float checks.
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
    /// Measured, not reproducible; excluded from serialized output.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            cases: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    pub fn push(&mut self, case: Case) {
        self.cases.push(case);
    }

    /// A suite passes iff no case failed; extrapolated and observational
    /// rows are informative only.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status != CaseStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Fail)
    }

    /// First failing case id, the "first counterexample" of the contracts.
    pub fn first_failure(&self) -> Option<&str> {
        self.failures().next().map(|c| c.id.as_str())
    }

    /// Deterministic merge: suites ordered by name, cases by id within
    /// each suite, independent of completion order.
    pub fn merge(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
        for r in &mut reports {
            r.cases.sort_by(|a, b| a.id.cmp(&b.id));
        }
        reports.sort_by(|a, b| a.suite.cmp(&b.suite));
        reports
    }

    pub fn to_json(reports: &[VerificationReport]) -> String {
        serde_json::to_string_pretty(reports).expect("report serialization cannot fail")
    }

    pub fn to_csv(reports: &[VerificationReport]) -> String {
        let mut out = String::from("suite,id,identity,status,lhs,rhs,residual\n");
        for r in reports {
            for c in &r.cases {
                let row = [
                    r.suite.as_str(),
                    c.id.as_str(),
                    c.identity.as_str(),
                    &c.status.to_string(),
                    c.lhs.as_str(),
                    c.rhs.as_str(),
                    c.residual.as_str(),
                ];
                let escaped: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                out.push_str(&escaped.join(","));
                out.push('\n');
            }
        }
        out
    }

    pub fn to_text(reports: &[VerificationReport]) -> String {
        let mut out = String::new();
        for r in reports {
            let fails = r.failures().count();
            let verdict = if fails == 0 { "ok" } else { "FAILED" };
            out.push_str(&format!(
                "suite {}: {} cases, {} failed ({verdict}, {:.3}s)\n",
                r.suite,
                r.cases.len(),
                fails,
                r.wall_time.as_secs_f64()
            ));
            for c in &r.cases {
                out.push_str(&format!("  [{}] {}: {}\n", c.status, c.id, c.identity));
                if c.status == CaseStatus::Fail {
                    out.push_str(&format!(
                        "      lhs = {}\n      rhs = {}\n      residual = {}\n",
                        c.lhs, c.rhs, c.residual
                    ));
                }
            }
        }
        out
    }
}

fn csv_field(f: &str) -> String {
    if f.contains(',') || f.contains('"') || f.contains('\n') {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

/// Case for an exact rational identity: passes iff the two sides are equal
/// as rationals; the residual is the exact difference.
pub fn exact_case(
    id: impl Into<String>,
    identity: impl Into<String>,
    lhs: &Rational,
    rhs: &Rational,
) -> Case {
    let diff = Rational::from(lhs - rhs);
    Case {
        id: id.into(),
        identity: identity.into(),
        status: if diff == 0 {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail
        },
        lhs: rat_string(lhs),
        rhs: rat_string(rhs),
        residual: rat_string(&diff),
    }
}

/// Case for an exact identity between rational multiples of powers of pi.
pub fn pi_case(
    id: impl Into<String>,
    identity: impl Into<String>,
    lhs: &PiScaled,
    rhs: &PiScaled,
) -> Case {
    let equal = lhs == rhs;
    Case {
        id: id.into(),
        identity: identity.into(),
        status: if equal { CaseStatus::Pass } else { CaseStatus::Fail },
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        residual: if equal { "0".into() } else { "nonzero".into() },
    }
}

/// Case for a floating-point identity with tolerance 2^tol_log2 on the
/// absolute difference.
pub fn float_case(
    id: impl Into<String>,
    identity: impl Into<String>,
    lhs: &Float,
    rhs: &Float,
    tol_log2: i32,
) -> Case {
    let prec = lhs.prec().max(rhs.prec());
    let diff = Float::with_val(prec, lhs - rhs).abs();
    let bound = Float::with_val(prec, 1) << tol_log2;
    Case {
        id: id.into(),
        identity: identity.into(),
        status: if diff <= bound {
            CaseStatus::Pass
        } else {
            CaseStatus::Fail
        },
        lhs: crate::hpnum::float_to_decimal(lhs),
        rhs: crate::hpnum::float_to_decimal(rhs),
        residual: crate::hpnum::float_to_decimal(&diff),
    }
}

/// Boolean case: records an assertion that is either satisfied or not,
/// with the two sides already rendered by the caller.
pub fn bool_case(
    id: impl Into<String>,
    identity: impl Into<String>,
    ok: bool,
    lhs: impl Into<String>,
    rhs: impl Into<String>,
) -> Case {
    Case {
        id: id.into(),
        identity: identity.into(),
        status: if ok { CaseStatus::Pass } else { CaseStatus::Fail },
        lhs: lhs.into(),
        rhs: rhs.into(),
        residual: if ok { "0".into() } else { "violated".into() },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    #[test]
    fn suite_passes_without_failures() {
        let mut r = VerificationReport::new("demo");
        r.push(exact_case("a", "one equals one", &rat(1, 1), &rat(1, 1)));
        assert!(r.passed());
        r.push(exact_case("b", "one equals two", &rat(1, 1), &rat(2, 1)));
        assert!(!r.passed());
        assert_eq!(r.first_failure(), Some("b"));
    }

    #[test]
    fn extrapolated_rows_do_not_fail_suites() {
        let mut r = VerificationReport::new("demo");
        let mut c = exact_case("x", "outside proven range", &rat(1, 1), &rat(2, 1));
        c.status = CaseStatus::Extrapolated;
        r.push(c);
        assert!(r.passed());
    }

    #[test]
    fn merge_orders_by_suite_then_id() {
        let mut b = VerificationReport::new("beta");
        b.push(exact_case("2", "later", &rat(1, 1), &rat(1, 1)));
        b.push(exact_case("1", "earlier", &rat(1, 1), &rat(1, 1)));
        let a = VerificationReport::new("alpha");
        let merged = VerificationReport::merge(vec![b, a]);
        assert_eq!(merged[0].suite, "alpha");
        assert_eq!(merged[1].cases[0].id, "1");
    }

    #[test]
    fn json_excludes_wall_time_and_is_stable() {
        let mut r = VerificationReport::new("demo");
        r.push(exact_case("a", "identity", &rat(1, 2), &rat(1, 2)));
        r.wall_time = Duration::from_secs(5);
        let one = VerificationReport::to_json(&[r.clone()]);
        r.wall_time = Duration::from_secs(9);
        let two = VerificationReport::to_json(&[r]);
        assert_eq!(one, two);
        assert!(!one.contains("wall_time"));
        assert!(one.contains("\"lhs\": \"1/2\""));
    }

    #[test]
    fn csv_escapes_commas() {
        let mut r = VerificationReport::new("demo");
        r.push(exact_case("a", "left, right", &rat(1, 1), &rat(1, 1)));
        let csv = VerificationReport::to_csv(&[r]);
        assert!(csv.contains("\"left, right\""));
    }

    #[test]
    fn float_case_tolerance_boundary() {
        let a = Float::with_val(64, 1);
        let b = Float::with_val(64, 1.25);
        assert_eq!(float_case("t", "close", &a, &b, -1).status, CaseStatus::Pass);
        assert_eq!(float_case("t", "close", &a, &b, -3).status, CaseStatus::Fail);
    }
}
