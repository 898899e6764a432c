use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::grid::{GridPoint, GridSpec, SkipReason};
use super::id::IdentityId;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Outcome at one grid point. Polynomials are listed constant term first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub point: GridPoint,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<Polynomial>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<Polynomial>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diff: Option<Polynomial>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<SkipReason>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl PointResult {
    pub fn skipped(point: GridPoint, reason: SkipReason) -> Self {
        PointResult {
            point,
            verdict: Verdict::Skipped,
            lhs: None,
            rhs: None,
            diff: None,
            reason: Some(reason),
            error: None,
        }
    }

    pub fn pass(point: GridPoint) -> Self {
        PointResult {
            point,
            verdict: Verdict::Pass,
            lhs: None,
            rhs: None,
            diff: None,
            reason: None,
            error: None,
        }
    }

    pub fn fail(point: GridPoint, lhs: Polynomial, rhs: Polynomial) -> Self {
        let diff = &lhs - &rhs;
        PointResult {
            point,
            verdict: Verdict::Fail,
            lhs: Some(lhs),
            rhs: Some(rhs),
            diff: Some(diff),
            reason: None,
            error: None,
        }
    }

    pub fn errored(point: GridPoint, message: String) -> Self {
        PointResult {
            point,
            verdict: Verdict::Fail,
            lhs: None,
            rhs: None,
            diff: None,
            reason: None,
            error: Some(message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Engine {
    pub truncation: usize,
    pub version: String,
}

impl Engine {
    pub fn new(truncation: usize) -> Self {
        Engine {
            truncation,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub total: usize,
}

impl Totals {
    pub fn tally(results: &[PointResult]) -> Self {
        let count = |v| results.iter().filter(|r| r.verdict == v).count();
        Totals {
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            skipped: count(Verdict::Skipped),
            total: results.len(),
        }
    }
}

/// Per-point verdicts for one identity over one grid, in lexicographic grid order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub grid: GridSpec,
    pub engine: Engine,
    pub results: Vec<PointResult>,
    pub totals: Totals,
    /// Wall time; kept out of the serialized form so reports are reproducible byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &PointResult> {
        self.results.iter().filter(|r| r.verdict == Verdict::Fail)
    }
}

/// Which reading of a theorem with a declared variant holds on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Holds {
    Both,
    Printed,
    Variant,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingVerdict {
    pub printed: IdentityId,
    pub variant: IdentityId,
    pub printed_passed: bool,
    pub variant_passed: bool,
    pub holds: Holds,
}

impl ReadingVerdict {
    pub fn new(printed: &VerificationReport, variant: &VerificationReport) -> Self {
        let (p, v) = (printed.passed(), variant.passed());
        ReadingVerdict {
            printed: printed.identity,
            variant: variant.identity,
            printed_passed: p,
            variant_passed: v,
            holds: match (p, v) {
                (true, true) => Holds::Both,
                (true, false) => Holds::Printed,
                (false, true) => Holds::Variant,
                (false, false) => Holds::Neither,
            },
        }
    }

    pub fn some_reading_holds(&self) -> bool {
        self.holds != Holds::Neither
    }
}

/// Reports for several identities plus a verdict for each printed/variant pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub engine: Engine,
    pub reports: Vec<VerificationReport>,
    pub readings: Vec<ReadingVerdict>,
    pub passed: bool,
}

impl SuiteReport {
    /// Every identity without readings must pass; a theorem with readings
    /// passes when at least one reading holds on its whole grid.
    pub fn assemble(engine: Engine, reports: Vec<VerificationReport>) -> Self {
        let find = |id: IdentityId| reports.iter().find(|r| r.identity == id);
        let mut readings = Vec::new();
        let mut covered = Vec::new();
        for report in &reports {
            if let Some([printed, variant]) = report.identity.readings() {
                if report.identity != printed {
                    continue;
                }
                if let (Some(p), Some(v)) = (find(printed), find(variant)) {
                    readings.push(ReadingVerdict::new(p, v));
                    covered.extend([printed, variant]);
                }
            }
        }
        let plain_ok = reports
            .iter()
            .filter(|r| !covered.contains(&r.identity))
            .all(VerificationReport::passed);
        let passed = plain_ok && readings.iter().all(ReadingVerdict::some_reading_holds);
        SuiteReport {
            engine,
            reports,
            readings,
            passed,
        }
    }
}
