//! Exact verification of the mixed-type polynomial identities over parameter grids.
//!
//! Each identity is evaluated pointwise: the left side from the generating
//! function, the right side from the combinatorial formula. A point passes
//! when the two polynomials are identical.

mod grid;
mod id;
mod report;
mod rhs;

use std::time::Instant;

use rayon::prelude::*;

pub use grid::{check_domain, GridPoint, GridSpec, IntRange, SkipReason};
pub use id::{Dims, IdentityId};
pub use report::{
    Engine, Holds, PointResult, ReadingVerdict, SuiteReport, Totals, Verdict, VerificationReport,
};
pub use rhs::{evaluate, rhs, thm8_coefficients, Sides, Tables};

use crate::error::{Error, Result};
use crate::umbral::required_order;

/// Series truncation used when none is requested.
pub const DEFAULT_TRUNCATION: usize = 32;

/// Largest `n` the standard grids use.
pub const STANDARD_N_MAX: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; `1` evaluates sequentially on the calling thread.
    pub jobs: usize,
    /// Series truncation order; the grid's largest degree must fit.
    pub truncation: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            truncation: DEFAULT_TRUNCATION,
        }
    }
}

/// `verify_with` using one thread and the default truncation.
pub fn verify(id: IdentityId, grid: &GridSpec) -> Result<VerificationReport> {
    verify_with(id, grid, &VerifyOptions::default())
}

/// Checks `id` at every grid point.
///
/// Point failures are recorded in the report. An `Err` means the run itself
/// was malformed: an invalid grid or a truncation too small for its degrees.
pub fn verify_with(
    id: IdentityId,
    grid: &GridSpec,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    grid.validate(id)?;
    let max_degree = grid.max_degree(id);
    let required = required_order(max_degree);
    if required > opts.truncation {
        return Err(Error::TruncationExceeded {
            required,
            available: opts.truncation,
        });
    }
    let started = Instant::now();
    let tables = Tables::new(max_degree);
    let points = grid.points(id);
    let check = |p: &GridPoint| check_point(id, p, &tables);
    let results: Vec<PointResult> = if opts.jobs <= 1 {
        points.iter().map(check).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
        pool.install(|| points.par_iter().map(check).collect())
    };
    Ok(VerificationReport {
        identity: id,
        grid: grid.clone(),
        engine: Engine::new(opts.truncation),
        totals: Totals::tally(&results),
        results,
        elapsed: started.elapsed(),
    })
}

fn check_point(id: IdentityId, point: &GridPoint, tables: &Tables) -> PointResult {
    if let Err(reason) = check_domain(id, point) {
        return PointResult::skipped(point.clone(), reason);
    }
    match evaluate(id, point, tables) {
        Ok(sides) if sides.holds() => PointResult::pass(point.clone()),
        Ok(sides) => PointResult::fail(point.clone(), sides.lhs, sides.rhs),
        Err(e) => PointResult::errored(point.clone(), e.to_string()),
    }
}

/// Reports for the printed statement and its variant, with the reading that holds.
pub fn verify_variants(
    id: IdentityId,
    grid: &GridSpec,
    opts: &VerifyOptions,
) -> Result<(VerificationReport, VerificationReport, ReadingVerdict)> {
    let [printed, variant] = id
        .readings()
        .ok_or_else(|| Error::Domain(format!("{id} has no variant reading")))?;
    let p = verify_with(printed, grid, opts)?;
    let v = verify_with(variant, grid, opts)?;
    let verdict = ReadingVerdict::new(&p, &v);
    Ok((p, v, verdict))
}

/// Runs each identity on its standard grid for `n <= n_max`.
pub fn verify_standard(
    ids: &[IdentityId],
    n_max: usize,
    opts: &VerifyOptions,
) -> Result<SuiteReport> {
    let reports = ids
        .iter()
        .map(|&id| verify_with(id, &GridSpec::standard(id, n_max), opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::assemble(Engine::new(opts.truncation), reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn sheffer_pair_route_equivalence() {
        let mut g = GridSpec::standard(IdentityId::ShefferPairEq17, 6);
        g.r = IntRange::new(0, 2);
        g.k = IntRange::new(-1, 2);
        let report = verify(IdentityId::ShefferPairEq17, &g).unwrap();
        assert!(report.passed());
        assert_eq!(report.totals.pass, 7 * 3 * 4);
    }

    #[test]
    fn eq35_with_nine_y_points() {
        let mut g = GridSpec::standard(IdentityId::Eq35, 8);
        g.r = IntRange::new(0, 2);
        g.k = IntRange::new(1, 2);
        assert_eq!(g.y, (-2..=6).map(Rational::from).collect::<Vec<_>>());
        assert!(verify(IdentityId::Eq35, &g).unwrap().passed());
    }

    #[test]
    fn thm7_on_small_grid() {
        let mut g = GridSpec::standard(IdentityId::Thm7, 6);
        g.s = IntRange::new(0, 2);
        g.r = IntRange::new(0, 1);
        g.k = IntRange::new(0, 1);
        let report = verify(IdentityId::Thm7, &g).unwrap();
        assert!(report.passed());
        assert_eq!(report.totals.skipped, 0);
    }

    #[test]
    fn lambda_one_is_skipped() {
        let mut g = GridSpec::standard(IdentityId::Thm7, 2);
        g.lambda = vec![Rational::one()];
        let report = verify(IdentityId::Thm7, &g).unwrap();
        assert_eq!(report.totals.skipped, report.totals.total);
        assert!(report
            .results
            .iter()
            .all(|r| r.reason == Some(SkipReason::LambdaOne)));
    }

    #[test]
    fn truncation_too_small_is_an_error() {
        let g = GridSpec::standard(IdentityId::Thm8, 8);
        let opts = VerifyOptions {
            jobs: 1,
            truncation: 9,
        };
        assert_eq!(
            verify_with(IdentityId::Thm8, &g, &opts).unwrap_err(),
            Error::TruncationExceeded {
                required: 10,
                available: 9
            }
        );
    }

    #[test]
    fn failures_carry_both_sides() {
        let mut g = GridSpec::standard(IdentityId::Thm4, 3);
        g.r = IntRange::single(1);
        g.k = IntRange::single(1);
        let report = verify(IdentityId::Thm4, &g).unwrap();
        let fail = report.failures().next().expect("printed reading fails");
        let (lhs, rhs, diff) = (
            fail.lhs.clone().unwrap(),
            fail.rhs.clone().unwrap(),
            fail.diff.clone().unwrap(),
        );
        assert_eq!(&lhs - &rhs, diff);
        assert!(!diff.is_zero());
    }

    #[test]
    fn parallel_and_sequential_reports_agree() {
        let g = GridSpec::standard(IdentityId::Thm3, 4);
        let one = verify_with(
            IdentityId::Thm3,
            &g,
            &VerifyOptions {
                jobs: 1,
                ..Default::default()
            },
        )
        .unwrap();
        let many = verify_with(
            IdentityId::Thm3,
            &g,
            &VerifyOptions {
                jobs: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            serde_json::to_string(&many).unwrap()
        );
    }

    #[test]
    fn suite_counts_a_theorem_with_readings_as_passing_when_one_holds() {
        let ids = [IdentityId::Thm4, IdentityId::Thm4Variant, IdentityId::Thm8];
        let suite = verify_standard(&ids, 3, &VerifyOptions::default()).unwrap();
        assert_eq!(suite.readings.len(), 1);
        assert_eq!(suite.readings[0].holds, Holds::Variant);
        assert!(suite.passed);
    }
}
