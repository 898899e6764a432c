//! Truncated formal power series `c_0 + c_1 t + ... + c_N t^N`.
//!
//! A [`Series`] always stores exactly `N + 1` coefficients and every operation
//! is exact through index `N`. Operations never extend the order; the ones
//! that inherently lose precision (division by a series of positive order,
//! differentiation) return a series of the reduced order instead.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{factorial, Rational};

/// The coefficient ring of a [`Series`].
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;
    /// Multiplicative inverse, if this element is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
    fn from_rational(c: Rational) -> Self {
        Polynomial::constant(c)
    }
    // Units of Q[x] are the nonzero constants.
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_constant() {
            self.constant_term().recip().ok().map(Polynomial::constant)
        } else {
            None
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct Series<C: Ring = Rational> {
    coeffs: Vec<C>,
}

impl<C: Ring> Series<C> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// `c t^k` (zero when `k` exceeds the order).
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// `[t^n] f`; fails when `n` exceeds the truncation order.
    pub fn coefficient(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            required: n,
            available: self.order(),
        })
    }

    /// `n! [t^n] f`, i.e. `<f(t) | x^n>`.
    pub fn factorial_coefficient(&self, n: usize) -> Result<C> {
        Ok(self.coefficient(n)?.scale(&Rational::from(factorial(n))))
    }

    /// Index of the first nonzero coefficient, `N + 1` for the zero series.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn is_invertible(&self) -> bool {
        self.coeffs[0].unit_inverse().is_some()
    }

    pub fn is_delta(&self) -> bool {
        self.valuation() == 1 && self.coeffs[1].unit_inverse().is_some()
    }

    /// Drops coefficients above `order` (no-op if already lower).
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn map<D: Ring>(&self, f: impl FnMut(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(C::negate)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale_by(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse of a series with unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for i in 1..=n {
            let mut acc = C::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc = acc.plus(&self.coeffs[j].times(&out[i - j]));
                }
            }
            out.push(acc.times(&inv0).negate());
        }
        Ok(Series { coeffs: out })
    }

    /// Divides by `t^k`; the first `k` coefficients must vanish. Order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.valuation() < k {
            return Err(Error::DivisorOrderTooHigh {
                divisor: k,
                dividend: self.valuation(),
            });
        }
        if k > self.order() {
            return Err(Error::TruncationExceeded {
                required: k,
                available: self.order(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `self / divisor` after cancelling the common power `t^{ord(divisor)}`.
    ///
    /// The result has order `N - ord(divisor)`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        let k = divisor.valuation();
        if k > divisor.order() {
            return Err(Error::DivisionByZero);
        }
        if divisor.coeffs[k].unit_inverse().is_none() {
            return Err(Error::NonUnitLeading);
        }
        if self.valuation() < k {
            return Err(Error::DivisorOrderTooHigh {
                divisor: k,
                dividend: self.valuation(),
            });
        }
        let num = self.shift_down(k)?;
        let den = divisor.shift_down(k)?;
        Ok(num.mul_unchecked(&den.inverse()?))
    }

    /// Integer power; negative exponents need an invertible series.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// The compositional inverse `g` with `self(g(t)) = t`.
    ///
    /// Solved one coefficient at a time: `[t^n] self(g)` is
    /// `c_1 g_n + (terms in g_1..g_{n-1})`, so each new coefficient is the
    /// negated remainder divided by `c_1`.
    pub fn comp_inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Err(Error::TruncationExceeded {
                required: 1,
                available: 0,
            });
        }
        if !self.is_delta() {
            return Err(Error::NotDelta {
                order: self.valuation(),
            });
        }
        let c1_inv = self.coeffs[1].unit_inverse().ok_or(Error::NonUnitLeading)?;
        let mut g = Self::monomial(c1_inv.clone(), 1, n);
        for i in 2..=n {
            let composed = self.truncate(i).compose(&g.truncate(i))?;
            g.coeffs[i] = composed.coeffs[i].times(&c1_inv).negate();
        }
        Ok(g)
    }

    /// Formal derivative; the result has order `N - 1`.
    pub fn derivative(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Err(Error::TruncationExceeded {
                required: 1,
                available: 0,
            });
        }
        Ok(Series {
            coeffs: (1..=n)
                .map(|i| self.coeffs[i].scale(&Rational::from(i)))
                .collect(),
        })
    }

    /// Term-by-term integral with zero constant; the result has order `N + 1`.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1, i as i64 + 1)));
        }
        Series { coeffs }
    }

    /// `log f` for `f` with constant term 1, via `(log f)' = f'/f`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::LogConstantTerm);
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self
            .derivative()?
            .mul_unchecked(&self.truncate(n - 1).inverse()?);
        Ok(quotient.integral())
    }

    /// `exp f` for `f` with zero constant term, via `(exp f)' = f' exp f`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(C::one());
        for i in 1..=n {
            let mut acc = C::zero();
            for k in 1..=i {
                if !self.coeffs[k].is_zero() {
                    acc = acc.plus(&self.coeffs[k].scale(&Rational::from(k)).times(&out[i - k]));
                }
            }
            out.push(acc.scale(&Rational::new(1, i as i64)));
        }
        Ok(Series { coeffs: out })
    }
}

impl Series<Rational> {
    /// Rational series with the given coefficients, padded to `order`.
    pub fn from_rationals(coeffs: &[Rational], order: usize) -> Self {
        Self::new(coeffs.to_vec(), order)
    }

    /// The same series viewed over `Q[x]` with constant coefficients.
    pub fn lift(&self) -> Series<Polynomial> {
        self.map(|c| Polynomial::constant(c.clone()))
    }

    /// `e^{c t}`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut acc = Rational::one();
        Self::from_fn(order, |i| {
            if i > 0 {
                acc = &acc * c / Rational::from(i);
            }
            acc.clone()
        })
    }

    /// `log(1 + t) = t - t^2/2 + t^3/3 - ...`.
    pub fn log1p(order: usize) -> Self {
        Self::from_fn(order, |i| {
            if i == 0 {
                Rational::zero()
            } else {
                crate::rational::sign(i as i64 + 1) * Rational::new(1, i as i64)
            }
        })
    }
}

impl Series<Polynomial> {
    /// Evaluates every coefficient at `x = c`.
    pub fn eval_coeffs(&self, c: &Rational) -> Series<Rational> {
        self.map(|p| p.eval(c))
    }
}

impl<C: Ring> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, "; O(t^{})]", self.order() + 1)
    }
}
