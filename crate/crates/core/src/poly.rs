//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from integer coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at `c`.
    pub fn eval(&self, c: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * c + a)
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        if c.is_zero() || self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut powers = Vec::with_capacity(n);
        let mut acc = Rational::one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = &acc * c;
        }
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let b = Rational::from(binomial(i, j));
                *slot += &(a * &b * &powers[i - j]);
            }
        }
        Polynomial::new(out)
    }

    /// `p(c x)`.
    pub fn scale_arg(&self, c: &Rational) -> Polynomial {
        let mut acc = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &acc);
            acc = &acc * c;
        }
        Polynomial::new(out)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Polynomial {
        self.scale_arg(&-Rational::one())
    }

    /// `p(q(x))`.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, a| {
            &(&acc * inner) + &Polynomial::constant(a.clone())
        })
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &Rational::from(i))
                .collect(),
        )
    }

    /// `k`-th derivative.
    pub fn nth_derivative(&self, k: usize) -> Polynomial {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x) * x`.
    pub fn mul_x(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial::new(coeffs)
    }

    /// `p(x) / x`; fails unless the constant term vanishes.
    pub fn div_x(&self) -> Result<Polynomial> {
        if !self.constant_term().is_zero() {
            return Err(Error::NotDivisibleByX);
        }
        Ok(Polynomial::new(
            self.coeffs.iter().skip(1).cloned().collect(),
        ))
    }

    pub fn div_scalar(&self, c: &Rational) -> Result<Polynomial> {
        Ok(self.scale(&c.recip()?))
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + d] / &lead;
            if !q.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let t = &q * b;
                    rem[i + j] -= &t;
                }
            }
            quot[i] = q;
        }
        rem.truncate(d);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Rising factorial `x^(n) = x (x+1) ... (x+n-1)`.
    pub fn rising_factorial(n: usize) -> Polynomial {
        (0..n).fold(Polynomial::one(), |acc, i| {
            &acc * &Polynomial::new(vec![Rational::from(i), Rational::one()])
        })
    }

    /// Falling factorial `(x)_n = x (x-1) ... (x-n+1)`.
    pub fn falling_factorial(n: usize) -> Polynomial {
        (0..n).fold(Polynomial::one(), |acc, i| {
            &acc * &Polynomial::new(vec![-Rational::from(i), Rational::one()])
        })
    }
}

impl TryFrom<Vec<Rational>> for Polynomial {
    type Error = Error;

    fn try_from(coeffs: Vec<Rational>) -> Result<Self> {
        Ok(Polynomial::new(coeffs))
    }
}

impl From<Polynomial> for Vec<Rational> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (slot, b) in out.iter_mut().zip(&short.coeffs) {
            *slot += b;
        }
        Polynomial::new(out)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for Polynomial {
    /// Ascending powers with explicit coefficients, e.g. `1/3 - 1x + 1x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                c.abs()
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}x")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    // x^2 - x + 1/3
    fn sample() -> Polynomial {
        Polynomial::new(vec![q(1, 3), q(-1, 1), q(1, 1)])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(sample().eval(&Rational::zero()), q(1, 3));
        assert_eq!(
            Polynomial::zero().eval(&Rational::from(7)),
            Rational::zero()
        );
        assert_eq!(sample().eval(&Rational::one()), q(1, 3));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(
            Polynomial::x().shift(&Rational::one()),
            Polynomial::from_ints(&[1, 1])
        );
        assert_eq!(
            Polynomial::monomial(Rational::one(), 2).shift(&-Rational::one()),
            Polynomial::from_ints(&[1, -2, 1])
        );
        assert_eq!(
            sample().shift(&-Rational::one()),
            Polynomial::new(vec![q(7, 3), q(-3, 1), q(1, 1)])
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            Polynomial::monomial(Rational::one(), 3).derivative(),
            Polynomial::monomial(Rational::from(3), 2)
        );
        assert_eq!(
            Polynomial::constant(Rational::from(5)).derivative(),
            Polynomial::zero()
        );
        assert_eq!(sample().derivative(), Polynomial::from_ints(&[-1, 2]));
    }

    #[test]
    fn factorial_bases() {
        assert_eq!(Polynomial::rising_factorial(0), Polynomial::one());
        assert_eq!(
            Polynomial::rising_factorial(2),
            Polynomial::from_ints(&[0, 1, 1])
        );
        assert_eq!(
            Polynomial::rising_factorial(3),
            Polynomial::from_ints(&[0, 2, 3, 1])
        );
        assert_eq!(
            Polynomial::falling_factorial(3),
            Polynomial::from_ints(&[0, 2, -3, 1])
        );
    }

    #[test]
    fn normalization() {
        let p = Polynomial::new(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Polynomial::new(vec![Rational::zero()]), Polynomial::zero());
        let d = &sample() - &sample();
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(sample().to_string(), "1/3 - 1x + 1x^2");
        assert_eq!(Polynomial::from_ints(&[-1, 1]).to_string(), "-1 + 1x");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::from_ints(&[0, 0, -2]).to_string(), "-2x^2");
    }

    #[test]
    fn division() {
        let p = Polynomial::from_ints(&[0, 2, 3, 1]);
        assert_eq!(p.div_x().unwrap(), Polynomial::from_ints(&[2, 3, 1]));
        assert_eq!(Polynomial::one().div_x(), Err(Error::NotDivisibleByX));
        let (qt, r) = p.div_rem(&Polynomial::from_ints(&[1, 1])).unwrap();
        assert_eq!(qt, Polynomial::from_ints(&[0, 2, 1]));
        assert!(r.is_zero());
        assert_eq!(p.div_rem(&Polynomial::zero()), Err(Error::DivisionByZero));
        assert_eq!(p.div_scalar(&Rational::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn compose_and_reflect() {
        let p = sample();
        assert_eq!(
            p.compose(&Polynomial::from_ints(&[-1, 1])),
            p.shift(&-Rational::one())
        );
        assert_eq!(
            p.reflect(),
            Polynomial::new(vec![q(1, 3), q(1, 1), q(1, 1)])
        );
    }
}
