//! Number and polynomial families, each read off its generating function.
//!
//! Every constructor picks its own truncation order from the requested
//! degree. Closed forms appear only as cross-checks (see
//! [`poly_cauchy_number_by_stirling`]).

pub mod stirling;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{factorial, Rational};
use crate::series::Series;

pub use stirling::{s1, s2, stirling1, stirling2};

/// Parameters shared by the family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: usize,
    pub r: i64,
    pub k: i64,
    /// Order for Bernoulli (`alpha`) and Frobenius-Euler (`s`) polynomials.
    pub s: i64,
    pub lambda: Rational,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            n: 0,
            r: 1,
            k: 1,
            s: 1,
            lambda: Rational::from(-1),
        }
    }
}

impl FamilyParams {
    pub fn validate_lambda(&self) -> Result<()> {
        check_lambda(&self.lambda)
    }
}

fn check_lambda(lambda: &Rational) -> Result<()> {
    if lambda.is_one() {
        return Err(Error::Domain(
            "Frobenius-Euler polynomials need lambda != 1".into(),
        ));
    }
    Ok(())
}

/// `Lif_k(t) = sum_n t^n / (n! (n+1)^k)`.
pub fn lif(k: i64, order: usize) -> Series {
    Series::from_fn(order, |n| {
        let weight = Rational::from(n as i64 + 1).pow(-k).expect("n + 1 > 0");
        weight / Rational::from(factorial(n))
    })
}

/// `t / log(1+t)` through `t^order`.
pub fn cauchy_kernel(order: usize) -> Series {
    Series::variable(order + 1)
        .div(&Series::log1p(order + 1))
        .expect("log(1+t) has unit linear term")
}

/// `t / (e^t - 1)` through `t^order`.
pub fn bernoulli_kernel(order: usize) -> Series {
    let e_minus_one = Series::exp_linear(&Rational::one(), order + 1)
        .sub(&Series::one(order + 1))
        .expect("same order");
    Series::variable(order + 1)
        .div(&e_minus_one)
        .expect("e^t - 1 has unit linear term")
}

/// `Lif_k(log(1+t))` through `t^order`.
pub fn lif_of_log(k: i64, order: usize) -> Series {
    lif(k, order)
        .compose(&Series::log1p(order))
        .expect("log(1+t) has no constant term")
}

/// `(1+t)^{c x}` over `Q[x]`, as `exp(c x log(1+t))`.
pub fn one_plus_t_pow_x(c: &Rational, order: usize) -> Series<Polynomial> {
    let cx = Polynomial::monomial(c.clone(), 1);
    Series::log1p(order)
        .lift()
        .scale_by(&cx)
        .exp()
        .expect("zero constant term")
}

/// `e^{x t}` over `Q[x]`.
pub fn exp_xt(order: usize) -> Series<Polynomial> {
    Series::<Rational>::variable(order)
        .lift()
        .scale_by(&Polynomial::x())
        .exp()
        .expect("zero constant term")
}

fn factorial_coefficients(series: &Series<Polynomial>, n_max: usize) -> Vec<Polynomial> {
    (0..=n_max)
        .map(|n| {
            series
                .factorial_coefficient(n)
                .expect("order chosen >= n_max")
        })
        .collect()
}

fn factorial_numbers(series: &Series, n_max: usize) -> Vec<Rational> {
    (0..=n_max)
        .map(|n| {
            series
                .factorial_coefficient(n)
                .expect("order chosen >= n_max")
        })
        .collect()
}

/// Generating function `(t/log(1+t))^r Lif_k(log(1+t)) (1+t)^{-x}` over `Q[x]`.
pub fn mixed_a_series(r: i64, k: i64, order: usize) -> Series<Polynomial> {
    let prefactor = cauchy_kernel(order)
        .pow(r)
        .expect("t/log(1+t) is invertible")
        .mul(&lif_of_log(k, order))
        .expect("same order");
    prefactor
        .lift()
        .mul(&one_plus_t_pow_x(&-Rational::one(), order))
        .expect("same order")
}

/// `A_n^{(r,k)}(x)`, the mixed-type polynomial of Cauchy order `r` and poly-Cauchy index `k`.
pub fn mixed_a(n: usize, r: i64, k: i64) -> Polynomial {
    mixed_a_series(r, k, n)
        .factorial_coefficient(n)
        .expect("order = n")
}

/// `A_0^{(r,k)}(x), ..., A_{n_max}^{(r,k)}(x)` from a single expansion.
pub fn mixed_a_all(n_max: usize, r: i64, k: i64) -> Vec<Polynomial> {
    factorial_coefficients(&mixed_a_series(r, k, n_max), n_max)
}

/// Poly-Cauchy polynomial `C_n^{(k)}(x)` from `Lif_k(log(1+t)) (1+t)^{-x}`.
pub fn poly_cauchy(n: usize, k: i64) -> Polynomial {
    poly_cauchy_all(n, k).pop().expect("nonempty")
}

pub fn poly_cauchy_all(n_max: usize, k: i64) -> Vec<Polynomial> {
    let gf = lif_of_log(k, n_max)
        .lift()
        .mul(&one_plus_t_pow_x(&-Rational::one(), n_max))
        .expect("same order");
    factorial_coefficients(&gf, n_max)
}

/// Poly-Cauchy number `C_n^{(k)} = sum_m S1(n, m) / (m+1)^k` (closed-form cross-check).
pub fn poly_cauchy_number_by_stirling(n: usize, k: i64) -> Rational {
    (0..=n as i64)
        .map(|m| s1(n as i64, m) * Rational::from(m + 1).pow(-k).expect("m + 1 > 0"))
        .sum()
}

/// Cauchy number of the first kind `C_n`.
pub fn cauchy_number(n: usize) -> Rational {
    higher_cauchy(n, 1)
}

/// Cauchy number of order `r`: `n! [t^n] (t/log(1+t))^r`.
pub fn higher_cauchy(n: usize, r: i64) -> Rational {
    higher_cauchy_all(n, r).pop().expect("nonempty")
}

pub fn higher_cauchy_all(n_max: usize, r: i64) -> Vec<Rational> {
    let gf = cauchy_kernel(n_max).pow(r).expect("invertible");
    factorial_numbers(&gf, n_max)
}

/// Bernoulli polynomial of order `alpha`: `(t/(e^t-1))^alpha e^{xt}`.
pub fn bernoulli_poly(n: usize, alpha: i64) -> Polynomial {
    bernoulli_all(n, alpha).pop().expect("nonempty")
}

pub fn bernoulli_all(n_max: usize, alpha: i64) -> Vec<Polynomial> {
    let gf = bernoulli_kernel(n_max)
        .pow(alpha)
        .expect("invertible")
        .lift()
        .mul(&exp_xt(n_max))
        .expect("same order");
    factorial_coefficients(&gf, n_max)
}

/// Frobenius-Euler polynomial `H_n^{(s)}(x | lambda)`: `((1-lambda)/(e^t-lambda))^s e^{xt}`.
pub fn frobenius_euler(n: usize, s: i64, lambda: &Rational) -> Result<Polynomial> {
    Ok(frobenius_euler_all(n, s, lambda)?.pop().expect("nonempty"))
}

pub fn frobenius_euler_all(n_max: usize, s: i64, lambda: &Rational) -> Result<Vec<Polynomial>> {
    check_lambda(lambda)?;
    let one_minus = Rational::one() - lambda;
    let denom = Series::exp_linear(&Rational::one(), n_max)
        .sub(&Series::constant(lambda.clone(), n_max))?;
    let kernel = Series::constant(one_minus, n_max).mul(&denom.inverse()?)?;
    let gf = kernel.pow(s)?.lift().mul(&exp_xt(n_max))?;
    Ok(factorial_coefficients(&gf, n_max))
}

/// Narumi polynomial of order `r`: `(t/log(1+t))^{-r} (1+t)^x`.
pub fn narumi(n: usize, r: i64) -> Polynomial {
    narumi_all(n, r).pop().expect("nonempty")
}

pub fn narumi_all(n_max: usize, r: i64) -> Vec<Polynomial> {
    let gf = cauchy_kernel(n_max)
        .pow(-r)
        .expect("invertible")
        .lift()
        .mul(&one_plus_t_pow_x(&Rational::one(), n_max))
        .expect("same order");
    factorial_coefficients(&gf, n_max)
}

/// `B_n^{(n+r+1)}(x+1)`, the higher-order Bernoulli form of the Narumi polynomial.
pub fn narumi_via_bernoulli(n: usize, r: i64) -> Polynomial {
    bernoulli_poly(n, n as i64 + r + 1).shift(&Rational::one())
}

/// Bernoulli polynomial of the second kind: `(t/log(1+t)) (1+t)^x`.
pub fn bernoulli2(n: usize) -> Polynomial {
    bernoulli2_all(n).pop().expect("nonempty")
}

pub fn bernoulli2_all(n_max: usize) -> Vec<Polynomial> {
    let gf = cauchy_kernel(n_max)
        .lift()
        .mul(&one_plus_t_pow_x(&Rational::one(), n_max))
        .expect("same order");
    factorial_coefficients(&gf, n_max)
}
