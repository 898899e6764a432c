//! Umbral calculus over `Q`: series act on polynomials as linear functionals
//! (`<t^k | x^n> = n! delta_{n,k}`) and as operators (`t^k p = p^{(k)}`).
//!
//! Sheffer sequences for a pair `(g, f)` can be built three independent
//! ways here: from the generating function, from the conjugate
//! representation, and by the recurrence in [`sheffer_next`].

use crate::error::{Error, Result};
use crate::families::{bernoulli_kernel, lif};
use crate::poly::Polynomial;
use crate::rational::{binomial, factorial, sign, Rational};
use crate::series::Series;

/// Truncation needed to treat the degree-`n` member of a Sheffer sequence
/// with operator series (one guard coefficient beyond `n + 1`).
pub fn required_order(n: usize) -> usize {
    n + 2
}

/// An invertible series `g` and a delta series `f` of the same order.
#[derive(Debug, Clone, PartialEq)]
pub struct ShefferPair {
    g: Series,
    f: Series,
}

impl ShefferPair {
    pub fn new(g: Series, f: Series) -> Result<Self> {
        if g.order() != f.order() {
            return Err(Error::OrderMismatch {
                left: g.order(),
                right: f.order(),
            });
        }
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
        if !f.is_delta() {
            return Err(Error::NotDelta {
                order: f.valuation(),
            });
        }
        Ok(ShefferPair { g, f })
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// `(1, t)`: the monomials `x^n`.
    pub fn identity(order: usize) -> Self {
        Self::associated(Series::variable(order)).expect("t is a delta series")
    }

    /// `(1, f)`: the associated sequence of `f`.
    pub fn associated(f: Series) -> Result<Self> {
        let order = f.order();
        Self::new(Series::one(order), f)
    }

    /// `(1, e^t - 1)`: falling factorials `(x)_n`.
    pub fn falling_factorials(order: usize) -> Self {
        Self::associated(exp_minus_one(&Rational::one(), order)).expect("delta")
    }

    /// `(1, e^{-t} - 1)`: the signed rising factorials `(-1)^n x^(n)`.
    pub fn signed_rising_factorials(order: usize) -> Self {
        Self::associated(exp_minus_one(&-Rational::one(), order)).expect("delta")
    }

    /// `(((e^t - 1)/t)^alpha, t)`: Bernoulli polynomials of order `alpha`.
    pub fn bernoulli(alpha: i64, order: usize) -> Self {
        let g = bernoulli_kernel(order).pow(-alpha).expect("invertible");
        Self::new(g, Series::variable(order)).expect("valid pair")
    }

    /// `(((e^t - lambda)/(1 - lambda))^s, t)`: Frobenius-Euler polynomials.
    pub fn frobenius_euler(s: i64, lambda: &Rational, order: usize) -> Result<Self> {
        if lambda.is_one() {
            return Err(Error::Domain("lambda must differ from 1".into()));
        }
        let base = Series::exp_linear(&Rational::one(), order)
            .sub(&Series::constant(lambda.clone(), order))?
            .scale(&(Rational::one() - lambda).recip()?);
        Self::new(base.pow(s)?, Series::variable(order))
    }

    /// `((t e^t/(e^t - 1))^r / Lif_k(-t), e^{-t} - 1)`, whose Sheffer
    /// sequence is the mixed-type family `A_n^{(r,k)}(x)`.
    pub fn mixed_a(r: i64, k: i64, order: usize) -> Self {
        let te_over = bernoulli_kernel(order)
            .mul(&Series::exp_linear(&Rational::one(), order))
            .expect("same order");
        let lif_neg = lif(k, order)
            .compose(&Series::variable(order).neg())
            .expect("-t has zero constant term");
        let g = te_over
            .pow(r)
            .and_then(|p| p.mul(&lif_neg.inverse()?))
            .expect("invertible factors");
        Self::new(g, exp_minus_one(&-Rational::one(), order)).expect("valid pair")
    }
}

/// `e^{c t} - 1`.
pub fn exp_minus_one(c: &Rational, order: usize) -> Series {
    Series::exp_linear(c, order)
        .sub(&Series::one(order))
        .expect("same order")
}

fn check_degree(p: &Polynomial, order: usize) -> Result<()> {
    match p.degree() {
        Some(d) if d > order => Err(Error::TruncationExceeded {
            required: d,
            available: order,
        }),
        _ => Ok(()),
    }
}

/// `<f(t) | p(x)> = sum_n p_n n! [t^n] f`.
pub fn functional(f: &Series, p: &Polynomial) -> Result<Rational> {
    check_degree(p, f.order())?;
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| Ok(c * &f.factorial_coefficient(n)?))
        .sum()
}

/// A series acting on polynomials by `t^k p = p^{(k)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct UmbralOperator {
    series: Series,
}

impl UmbralOperator {
    pub fn new(series: Series) -> Self {
        UmbralOperator { series }
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    /// `sum_k [t^k]s * p^{(k)}`; the polynomial degree may not exceed the
    /// operator's truncation order.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        check_degree(p, self.series.order())?;
        let mut out = Polynomial::zero();
        let mut derivative = p.clone();
        for c in self.series.coeffs() {
            if derivative.is_zero() {
                break;
            }
            if !c.is_zero() {
                out = &out + &derivative.scale(c);
            }
            derivative = derivative.derivative();
        }
        Ok(out)
    }
}

/// Shorthand for `UmbralOperator::new(s.clone()).apply(p)`.
pub fn apply(s: &Series, p: &Polynomial) -> Result<Polynomial> {
    UmbralOperator::new(s.clone()).apply(p)
}

fn check_n(pair: &ShefferPair, n: usize) -> Result<()> {
    if n > pair.order() {
        return Err(Error::TruncationExceeded {
            required: n,
            available: pair.order(),
        });
    }
    Ok(())
}

/// `f-bar` and `1/g(f-bar(t))`.
fn inverted_parts(pair: &ShefferPair) -> Result<(Series, Series)> {
    let fbar = pair.f.comp_inverse()?;
    let g_of_fbar = pair.g.compose(&fbar)?;
    Ok((fbar, g_of_fbar.inverse()?))
}

/// `S_0..S_{n_max}` as `n! [t^n]` of `e^{x f-bar(t)} / g(f-bar(t))`.
pub fn sheffer_by_gf_all(pair: &ShefferPair, n_max: usize) -> Result<Vec<Polynomial>> {
    check_n(pair, n_max)?;
    let (fbar, inv_g) = inverted_parts(pair)?;
    let exp_part = fbar.lift().scale_by(&Polynomial::x()).exp()?;
    let gf = inv_g.lift().mul(&exp_part)?;
    (0..=n_max).map(|n| gf.factorial_coefficient(n)).collect()
}

pub fn sheffer_by_gf(pair: &ShefferPair, n: usize) -> Result<Polynomial> {
    Ok(sheffer_by_gf_all(pair, n)?.pop().expect("nonempty"))
}

/// `S_n(x) = sum_j (1/j!) <g(f-bar)^{-1} f-bar^j | x^n> x^j`.
///
/// Works entirely with rational series; no polynomial-coefficient series are formed.
pub fn sheffer_by_conjugate(pair: &ShefferPair, n: usize) -> Result<Polynomial> {
    check_n(pair, n)?;
    let (fbar, inv_g) = inverted_parts(pair)?;
    let mut term = inv_g;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let value = term.factorial_coefficient(n)? / Rational::from(factorial(j));
        coeffs.push(value);
        term = term.mul(&fbar)?;
    }
    Ok(Polynomial::new(coeffs))
}

/// Lower-triangular `C` with `S_i(x) = sum_m C[i][m] r_m(x)` for `i <= n`,
/// where `S ~ src = (g, f)` and `r ~ dst = (h, l)`:
/// `C[i][m] = (1/m!) <h(f-bar)/g(f-bar) l(f-bar)^m | x^i>`.
pub fn connection_constants(
    src: &ShefferPair,
    dst: &ShefferPair,
    n: usize,
) -> Result<Vec<Vec<Rational>>> {
    check_n(src, n)?;
    check_n(dst, n)?;
    if src.order() != dst.order() {
        return Err(Error::OrderMismatch {
            left: src.order(),
            right: dst.order(),
        });
    }
    let (fbar, inv_g) = inverted_parts(src)?;
    let h_ratio = dst.g.compose(&fbar)?.mul(&inv_g)?;
    let l_of_fbar = dst.f.compose(&fbar)?;
    let mut rows = vec![vec![Rational::zero(); n + 1]; n + 1];
    let mut term = h_ratio;
    for m in 0..=n {
        let m_fact = Rational::from(factorial(m));
        for (i, row) in rows.iter_mut().enumerate().skip(m) {
            row[m] = term.factorial_coefficient(i)? / m_fact.clone();
        }
        term = term.mul(&l_of_fbar)?;
    }
    Ok(rows)
}

/// Transfer formula: from `p_n ~ (1, f)` to `q_n ~ (1, g)` via
/// `q_n(x) = x (f(t)/g(t))^n x^{-1} p_n(x)`.
pub fn transfer(f: &Series, g: &Series, n: usize) -> Result<Polynomial> {
    if !f.is_delta() {
        return Err(Error::NotDelta {
            order: f.valuation(),
        });
    }
    if !g.is_delta() {
        return Err(Error::NotDelta {
            order: g.valuation(),
        });
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let source = ShefferPair::associated(f.clone())?;
    let p_n = sheffer_by_gf(&source, n)?;
    let reduced = p_n.div_x()?;
    let ratio = f.div(g)?.pow(n as i64)?;
    Ok(apply(&ratio, &reduced)?.mul_x())
}

/// `S_{n+1} = (x - g'(t)/g(t)) (1/f'(t)) S_n`.
pub fn sheffer_next(pair: &ShefferPair, s_n: &Polynomial) -> Result<Polynomial> {
    let f_prime = pair.f.derivative()?;
    let g_prime = pair.g.derivative()?;
    let log_derivative = g_prime.mul(&pair.g.truncate(f_prime.order()).inverse()?)?;
    let lowered = apply(&f_prime.inverse()?, s_n)?;
    Ok(&lowered.mul_x() - &apply(&log_derivative, &lowered)?)
}

/// `d/dx S_n = sum_{l<n} C(n, l) <f-bar(t) | x^{n-l}> S_l(x)`, given `lower = [S_0, ..., S_{n-1}]`.
pub fn sheffer_derivative(
    pair: &ShefferPair,
    n: usize,
    lower: &[Polynomial],
) -> Result<Polynomial> {
    check_n(pair, n)?;
    if lower.len() < n {
        return Err(Error::Domain(format!(
            "need S_0..S_{} but only {} members were supplied",
            n.saturating_sub(1),
            lower.len()
        )));
    }
    let fbar = pair.f.comp_inverse()?;
    let mut out = Polynomial::zero();
    for (l, s_l) in lower.iter().enumerate().take(n) {
        let weight = Rational::from(binomial(n, l)) * fbar.factorial_coefficient(n - l)?;
        if !weight.is_zero() {
            out = &out + &s_l.scale(&weight);
        }
    }
    Ok(out)
}

/// The sequence `p_n = g(t) S_n(x)` paired with `S_n` in the binomial identity
/// `S_n(x + y) = sum_j C(n, j) S_j(x) p_{n-j}(y)`.
pub fn binomial_partner(pair: &ShefferPair, s_n: &Polynomial) -> Result<Polynomial> {
    apply(&pair.g, s_n)
}

/// `(-1)^n x^(n)` as produced by the transfer formula from `x^n` to `e^{-t} - 1`.
pub fn signed_rising_factorial(n: usize) -> Polynomial {
    Polynomial::rising_factorial(n).scale(&sign(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monomial(k: usize) -> Polynomial {
        Polynomial::monomial(Rational::one(), k)
    }
    use crate::families::{mixed_a, poly_cauchy};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn functional_examples() {
        for k in 0..6 {
            let tk = Series::monomial(Rational::one(), k, 6);
            for n in 0..6 {
                let expected = if n == k {
                    Rational::from(factorial(n))
                } else {
                    Rational::zero()
                };
                assert_eq!(functional(&tk, &monomial(n)).unwrap(), expected);
            }
        }
        let y = q(-3, 2);
        let eyt = Series::exp_linear(&y, 6);
        for n in 0..6 {
            assert_eq!(
                functional(&eyt, &monomial(n)).unwrap(),
                y.pow(n as i64).unwrap()
            );
        }
        assert_eq!(
            functional(&Series::log1p(4), &monomial(2)).unwrap(),
            q(-1, 1)
        );
        assert!(matches!(
            functional(&Series::log1p(2), &monomial(3)),
            Err(Error::TruncationExceeded { .. })
        ));
    }

    #[test]
    fn apply_examples() {
        let p = Polynomial::new(vec![q(1, 3), q(-1, 1), q(1, 1)]);
        let e = Series::exp_linear(&Rational::one(), 4);
        assert_eq!(apply(&e, &p).unwrap(), p.shift(&Rational::one()));
        assert_eq!(
            apply(&Series::variable(4), &monomial(3)).unwrap(),
            Polynomial::from_ints(&[0, 0, 3])
        );
        assert_eq!(
            apply(&exp_minus_one(&-Rational::one(), 4), &monomial(2)).unwrap(),
            Polynomial::from_ints(&[1, -2])
        );
        assert!(apply(&Series::variable(1), &monomial(3)).is_err());
    }

    #[test]
    fn pair_validation() {
        assert_eq!(
            ShefferPair::new(Series::variable(3), Series::variable(3)),
            Err(Error::NotInvertible)
        );
        assert!(matches!(
            ShefferPair::new(Series::one(3), Series::one(3)),
            Err(Error::NotDelta { .. })
        ));
        assert!(matches!(
            ShefferPair::new(Series::one(3), Series::variable(4)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn gf_route_examples() {
        let id = ShefferPair::identity(6);
        for n in 0..=6 {
            assert_eq!(sheffer_by_gf(&id, n).unwrap(), monomial(n));
            assert_eq!(sheffer_by_conjugate(&id, n).unwrap(), monomial(n));
        }
        let b = ShefferPair::bernoulli(1, 4);
        assert_eq!(
            sheffer_by_gf(&b, 2).unwrap(),
            Polynomial::new(vec![q(1, 6), q(-1, 1), q(1, 1)])
        );
        let a = ShefferPair::mixed_a(1, 1, 4);
        assert_eq!(
            sheffer_by_gf(&a, 2).unwrap(),
            Polynomial::new(vec![q(1, 6), q(-1, 1), q(1, 1)])
        );
    }

    #[test]
    fn conjugate_route_examples() {
        for k in -1..=2 {
            let pair = ShefferPair::mixed_a(0, k, 10);
            for n in 0..=8 {
                assert_eq!(sheffer_by_conjugate(&pair, n).unwrap(), poly_cauchy(n, k));
            }
        }
        let pair = ShefferPair::mixed_a(2, 2, 10);
        for n in 0..=8 {
            assert_eq!(sheffer_by_conjugate(&pair, n).unwrap(), mixed_a(n, 2, 2));
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn connection_examples() {
        let a = ShefferPair::mixed_a(1, 1, 6);
        let id = connection_constants(&a, &a, 4).unwrap();
        for (i, row) in id.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                assert_eq!(c, &if i == j { q(1, 1) } else { q(0, 1) });
            }
        }
        let c = connection_constants(
            &ShefferPair::identity(6),
            &ShefferPair::falling_factorials(6),
            5,
        )
        .unwrap();
        assert_eq!(
            c[2],
            vec![q(0, 1), q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]
        );
        for n in 0..=5 {
            for m in 0..=n {
                assert_eq!(c[n][m], crate::families::s2(n as i64, m as i64));
            }
        }
        // A_2^{(1,1)} in the (-1)^m x^(m) basis: 1/6, 2, 1; THM8 uses x^(m): 1/6, -2, 1.
        let c = connection_constants(&a, &ShefferPair::signed_rising_factorials(6), 2).unwrap();
        assert_eq!(c[2], vec![q(1, 6), q(2, 1), q(1, 1)]);
    }

    #[test]
    fn transfer_examples() {
        let t = Series::variable(6);
        let target = exp_minus_one(&-Rational::one(), 6);
        assert_eq!(transfer(&t, &t, 3).unwrap(), monomial(3));
        assert_eq!(
            transfer(&target, &target, 3).unwrap(),
            signed_rising_factorial(3)
        );
        assert_eq!(
            transfer(&t, &target, 2).unwrap(),
            Polynomial::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            transfer(&t, &target, 3).unwrap(),
            Polynomial::from_ints(&[0, -2, -3, -1])
        );
        assert!(transfer(&Series::one(6), &target, 2).is_err());
    }

    #[test]
    fn recurrence_examples() {
        let id = ShefferPair::identity(8);
        for n in 0..6 {
            assert_eq!(sheffer_next(&id, &monomial(n)).unwrap(), monomial(n + 1));
        }
        let a = ShefferPair::mixed_a(1, 1, 5);
        assert_eq!(
            sheffer_next(&a, &Polynomial::from_ints(&[1, -1])).unwrap(),
            Polynomial::new(vec![q(1, 6), q(-1, 1), q(1, 1)])
        );
        let a = ShefferPair::mixed_a(0, 2, 4);
        assert_eq!(
            sheffer_next(&a, &Polynomial::one()).unwrap(),
            Polynomial::new(vec![q(1, 4), q(-1, 1)])
        );
    }

    #[test]
    fn derivative_examples() {
        let id = ShefferPair::identity(8);
        let lower: Vec<_> = (0..6).map(monomial).collect();
        for n in 0..6 {
            assert_eq!(
                sheffer_derivative(&id, n, &lower).unwrap(),
                monomial(n).derivative()
            );
        }
        let pair = ShefferPair::mixed_a(1, 1, 10);
        let seq: Vec<_> = (0..=8).map(|n| mixed_a(n, 1, 1)).collect();
        for n in 0..=8 {
            assert_eq!(
                sheffer_derivative(&pair, n, &seq).unwrap(),
                seq[n].derivative()
            );
        }
        assert!(sheffer_derivative(&pair, 3, &seq[..2]).is_err());
    }
}
