//! Invariant checks across every module, run by the `selftest` command.

use std::panic::{catch_unwind, AssertUnwindSafe};

use crate::families::stirling::{s1, s2, stirling1_by_recurrence, stirling2_by_recurrence};
use crate::families::{
    cauchy_kernel, higher_cauchy, lif, lif_of_log, mixed_a_all, narumi, narumi_via_bernoulli,
    poly_cauchy_all, poly_cauchy_number_by_stirling,
};
use crate::identities::{verify_standard, IdentityId, VerifyOptions, STANDARD_N_MAX};
use crate::poly::Polynomial;
use crate::rational::{factorial, Rational};
use crate::series::Series;
use crate::umbral::{
    apply, binomial_partner, functional, required_order, sheffer_by_conjugate, sheffer_by_gf_all,
    sheffer_derivative, sheffer_next, signed_rising_factorial, transfer, ShefferPair,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<(), String>;
type CheckFn = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_one(name: &'static str, f: CheckFn) -> Check {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    Check {
        name,
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_default(),
    }
}

/// Every check, in a fixed order.
pub fn run() -> Vec<Check> {
    CHECKS.iter().map(|(name, f)| run_one(name, *f)).collect()
}

pub const CHECKS: &[(&str, CheckFn)] = &[
    ("rational: field laws and text round trip", rational_laws),
    (
        "poly: shift, evaluation and composition agree",
        poly_consistency,
    ),
    (
        "series: inverse, log/exp and reversion round trips",
        series_round_trips,
    ),
    ("series: Cauchy numbers C_0..C_4", cauchy_numbers),
    (
        "stirling: tables match recurrences and invert each other",
        stirling_tables,
    ),
    (
        "families: poly-Cauchy and higher-order Cauchy specializations",
        family_specializations,
    ),
    (
        "families: Lif_0 = exp and Lif_1(log(1+t)) = t/log(1+t)",
        lif_identities,
    ),
    (
        "families: Narumi equals shifted higher-order Bernoulli",
        narumi_bernoulli,
    ),
    (
        "umbral: Sheffer routes, lowering and biorthogonality",
        sheffer_properties,
    ),
    (
        "umbral: recurrence, derivative, binomial and transfer formulas",
        sheffer_formulas,
    ),
    ("identities: standard grids", identity_suite),
];

fn rational_laws() -> Outcome {
    let xs = [
        Rational::new(-3, 4),
        Rational::new(5, 7),
        Rational::from(2),
        Rational::new(1, 6),
    ];
    for a in &xs {
        for b in &xs {
            ensure(a + b == b + a && a * b == b * a, || {
                format!("commutativity at {a}, {b}")
            })?;
            for c in &xs {
                ensure(a * &(b + c) == &(a * b) + &(a * c), || {
                    format!("distributivity at {a}, {b}, {c}")
                })?;
            }
            ensure(&(&(a / b) * b) == a, || format!("division at {a}, {b}"))?;
        }
        ensure(a.to_string().parse::<Rational>().as_ref() == Ok(a), || {
            format!("text round trip of {a}")
        })?;
    }
    Ok(())
}

fn poly_consistency() -> Outcome {
    let p = Polynomial::new(vec![
        Rational::new(1, 3),
        Rational::from(-2),
        Rational::zero(),
        Rational::new(5, 2),
    ]);
    let q = Polynomial::from_ints(&[1, 1, -1]);
    for c in [-2, 0, 3] {
        let c = Rational::from(c);
        ensure(
            p.shift(&c).eval(&Rational::one()) == p.eval(&(&c + &Rational::one())),
            || format!("shift at {c}"),
        )?;
        ensure((&p * &q).eval(&c) == p.eval(&c) * q.eval(&c), || {
            format!("product at {c}")
        })?;
        ensure(p.compose(&q).eval(&c) == p.eval(&q.eval(&c)), || {
            format!("composition at {c}")
        })?;
    }
    let (quot, rem) = p.div_rem(&q).map_err(|e| e.to_string())?;
    ensure(&(&quot * &q) + &rem == p, || {
        "division with remainder".into()
    })
}

fn series_round_trips() -> Outcome {
    let order = 12;
    let e = |r: crate::Result<Series>| r.map_err(|err| err.to_string());
    let f = Series::exp_linear(&Rational::one(), order);
    ensure(e(f.mul(&e(f.inverse())?))? == Series::one(order), || {
        "f * f^{-1} != 1".into()
    })?;
    ensure(e(e(f.log())?.exp())? == f, || "exp(log f) != f".into())?;
    let delta = Series::log1p(order);
    let inv = e(delta.comp_inverse())?;
    ensure(e(delta.compose(&inv))? == Series::variable(order), || {
        "f(f-bar) != t".into()
    })?;
    ensure(e(inv.compose(&delta))? == Series::variable(order), || {
        "f-bar(f) != t".into()
    })
}

fn cauchy_numbers() -> Outcome {
    let expected = [
        Rational::one(),
        Rational::new(1, 2),
        Rational::new(-1, 6),
        Rational::new(1, 4),
        Rational::new(-19, 30),
    ];
    let kernel = cauchy_kernel(4);
    for (n, want) in expected.iter().enumerate() {
        let got = kernel.factorial_coefficient(n).map_err(|e| e.to_string())?;
        ensure(&got == want, || format!("C_{n} = {got}, expected {want}"))?;
    }
    Ok(())
}

fn stirling_tables() -> Outcome {
    let r1 = stirling1_by_recurrence(20);
    let r2 = stirling2_by_recurrence(20);
    for n in 0..=20usize {
        for m in 0..=n {
            ensure(
                s1(n as i64, m as i64) == Rational::from(r1[n][m].clone()),
                || format!("S1({n},{m})"),
            )?;
            ensure(
                s2(n as i64, m as i64) == Rational::from(r2[n][m].clone()),
                || format!("S2({n},{m})"),
            )?;
        }
    }
    for n in 0..=12i64 {
        for l in 0..=12i64 {
            let sum: Rational = (0..=12).map(|m| s1(n, m) * s2(m, l)).sum();
            let want = if n == l {
                Rational::one()
            } else {
                Rational::zero()
            };
            ensure(sum == want, || format!("sum_m S1({n},m) S2(m,{l}) = {sum}"))?;
        }
    }
    Ok(())
}

fn family_specializations() -> Outcome {
    let n_max = 12;
    for k in -2..=3 {
        let pc = poly_cauchy_all(n_max, k);
        ensure(mixed_a_all(n_max, 0, k) == pc, || {
            format!("A^(0,{k}) != C^({k})")
        })?;
        for (n, p) in pc.iter().enumerate() {
            let closed = poly_cauchy_number_by_stirling(n, k);
            ensure(p.constant_term() == closed, || {
                format!("C_{n}^({k}) closed form")
            })?;
        }
    }
    for r in 0..=4 {
        for (n, a) in mixed_a_all(n_max, r, 1).iter().enumerate() {
            ensure(a.constant_term() == higher_cauchy(n, r + 1), || {
                format!("A_{n}^({r},1)(0)")
            })?;
        }
    }
    Ok(())
}

fn lif_identities() -> Outcome {
    let order = 20;
    ensure(
        lif(0, order) == Series::exp_linear(&Rational::one(), order),
        || "Lif_0 != exp".into(),
    )?;
    ensure(lif_of_log(1, order) == cauchy_kernel(order), || {
        "Lif_1(log(1+t)) != t/log(1+t)".into()
    })
}

fn narumi_bernoulli() -> Outcome {
    for r in -2..=3 {
        for n in 0..=8 {
            ensure(narumi(n, r) == narumi_via_bernoulli(n, r), || {
                format!("N_{n}^({r})")
            })?;
        }
    }
    Ok(())
}

/// The pairs the umbral checks run on: `(1, t)`, `((e^t-1)/t, t)` and a few mixed-type pairs.
pub fn sample_pairs(order: usize) -> Vec<(String, ShefferPair)> {
    let mut pairs = vec![
        ("(1, t)".to_string(), ShefferPair::identity(order)),
        (
            "((e^t-1)/t, t)".to_string(),
            ShefferPair::bernoulli(1, order),
        ),
    ];
    for (r, k) in [(0, 1), (1, 1), (2, -1), (-1, 2), (3, 0)] {
        pairs.push((
            format!("mixed r={r} k={k}"),
            ShefferPair::mixed_a(r, k, order),
        ));
    }
    pairs
}

fn sheffer_properties() -> Outcome {
    let n_max = 8;
    let order = required_order(n_max);
    let e = |err: crate::Error| err.to_string();
    for (label, pair) in sample_pairs(order) {
        let seq = sheffer_by_gf_all(&pair, n_max).map_err(e)?;
        for (n, s_n) in seq.iter().enumerate() {
            ensure(sheffer_by_conjugate(&pair, n).map_err(e)? == *s_n, || {
                format!("{label}: conjugate route at n={n}")
            })?;
            let lowered = apply(pair.f(), s_n).map_err(e)?;
            let want = if n == 0 {
                Polynomial::zero()
            } else {
                seq[n - 1].scale(&Rational::from(n as i64))
            };
            ensure(lowered == want, || {
                format!("{label}: f(t) S_{n} != n S_{{n-1}}")
            })?;
            let mut gfk = pair.g().clone();
            for k in 0..=n_max {
                let got = functional(&gfk, s_n).map_err(e)?;
                let want = if k == n {
                    Rational::from(factorial(n))
                } else {
                    Rational::zero()
                };
                ensure(got == want, || {
                    format!("{label}: <g f^{k} | S_{n}> = {got}")
                })?;
                gfk = gfk.mul(pair.f()).map_err(e)?;
            }
        }
    }
    Ok(())
}

fn sheffer_formulas() -> Outcome {
    let n_max = 8;
    let order = required_order(n_max + 1);
    let e = |err: crate::Error| err.to_string();
    for (label, pair) in sample_pairs(order) {
        let seq = sheffer_by_gf_all(&pair, n_max + 1).map_err(e)?;
        for n in 0..=n_max {
            ensure(
                sheffer_next(&pair, &seq[n]).map_err(e)? == seq[n + 1],
                || format!("{label}: recurrence at n={n}"),
            )?;
            ensure(
                sheffer_derivative(&pair, n, &seq[..n]).map_err(e)? == seq[n].derivative(),
                || format!("{label}: derivative formula at n={n}"),
            )?;
            let partners: Vec<Polynomial> = seq[..=n]
                .iter()
                .map(|s| binomial_partner(&pair, s))
                .collect::<crate::Result<_>>()
                .map_err(e)?;
            for y in [-2i64, 1, 3] {
                let y = Rational::from(y);
                let lhs = seq[n].shift(&y);
                let rhs = (0..=n).fold(Polynomial::zero(), |acc, j| {
                    let c =
                        Rational::from(crate::rational::binomial(n, j)) * partners[n - j].eval(&y);
                    &acc + &seq[j].scale(&c)
                });
                ensure(lhs == rhs, || {
                    format!("{label}: binomial identity at n={n}, y={y}")
                })?;
            }
        }
    }
    let t = Series::variable(order);
    let f = crate::umbral::exp_minus_one(&-Rational::one(), order);
    for n in 0..=n_max {
        ensure(
            transfer(&t, &f, n).map_err(e)? == signed_rising_factorial(n),
            || format!("transfer at n={n}"),
        )?;
    }
    Ok(())
}

fn identity_suite() -> Outcome {
    let suite = verify_standard(&IdentityId::ALL, STANDARD_N_MAX, &VerifyOptions::default())
        .map_err(|e| e.to_string())?;
    let failing: Vec<String> = suite
        .reports
        .iter()
        .filter(|r| !r.passed() && r.identity.readings().is_none())
        .map(|r| r.identity.to_string())
        .collect();
    ensure(failing.is_empty(), || {
        format!("failing: {}", failing.join(", "))
    })?;
    for reading in &suite.readings {
        ensure(reading.some_reading_holds(), || {
            format!("no reading of {} holds", reading.printed)
        })?;
    }
    ensure(suite.passed, || "suite did not pass".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for (name, f) in CHECKS {
            if *name == "identities: standard grids" {
                continue;
            }
            let c = run_one(name, *f);
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn panics_become_failures() {
        let c = run_one("boom", || panic!("nope"));
        assert!(!c.passed);
        assert!(c.detail.contains("nope"));
    }
}
