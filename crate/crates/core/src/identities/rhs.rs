use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::grid::{check_domain, GridPoint};
use super::id::IdentityId;
use crate::error::{Error, Result};
use crate::families::stirling::{s1, s2};
use crate::families::{
    bernoulli2_all, bernoulli_all, frobenius_euler_all, mixed_a_all, narumi, narumi_all,
    narumi_via_bernoulli, poly_cauchy_all,
};
use crate::poly::Polynomial;
use crate::rational::{binomial, factorial, sign, Rational};
use crate::umbral::{required_order, sheffer_by_gf, ShefferPair};

/// Both sides of an identity at one grid point, as polynomials in `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides {
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl Sides {
    pub fn difference(&self) -> Polynomial {
        &self.lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

type RowCache = HashMap<(i64, i64), Arc<Vec<Polynomial>>>;

/// Memoized `A_0..A_{n_max}` rows keyed by `(r, k)`, shared by all grid points of a run.
#[derive(Debug)]
pub struct Tables {
    n_max: usize,
    rows: Mutex<RowCache>,
}

impl Tables {
    pub fn new(n_max: usize) -> Self {
        Tables {
            n_max,
            rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `A_0^{(r,k)}, ..., A_{n_max}^{(r,k)}`.
    pub fn mixed(&self, r: i64, k: i64) -> Arc<Vec<Polynomial>> {
        if let Some(row) = self.rows.lock().expect("table lock").get(&(r, k)) {
            return Arc::clone(row);
        }
        let row = Arc::new(mixed_a_all(self.n_max, r, k));
        let mut rows = self.rows.lock().expect("table lock");
        Arc::clone(rows.entry((r, k)).or_insert(row))
    }

    fn a(&self, n: usize, r: i64, k: i64) -> Polynomial {
        self.mixed(r, k)[n].clone()
    }
}

fn q(v: i64) -> Rational {
    Rational::from(v)
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n, k))
}

fn fact(n: usize) -> Rational {
    Rational::from(factorial(n))
}

fn stir1(n: usize, m: usize) -> Rational {
    s1(n as i64, m as i64)
}

/// `base^{-k}` for a positive integer base.
fn inv_pow(base: usize, k: i64) -> Rational {
    q(base as i64).pow(-k).expect("positive base")
}

fn rising_at(m: usize, y: &Rational) -> Rational {
    Polynomial::rising_factorial(m).eval(y)
}

fn combine(terms: impl IntoIterator<Item = (Rational, Polynomial)>) -> Polynomial {
    terms
        .into_iter()
        .filter(|(c, _)| !c.is_zero())
        .fold(Polynomial::zero(), |acc, (c, p)| &acc + &p.scale(&c))
}

/// Evaluates both sides of `id` at `point`, reusing `tables`.
///
/// The left side always comes from a generating function; the right side is
/// the combinatorial formula of the identity.
pub fn evaluate(id: IdentityId, point: &GridPoint, tables: &Tables) -> Result<Sides> {
    if let Err(reason) = check_domain(id, point) {
        return Err(Error::Domain(format!("{id} at {point}: {reason}")));
    }
    let needed = if id == IdentityId::Thm3 {
        point.n + 1
    } else {
        point.n
    };
    if needed > tables.n_max() {
        return Err(Error::TruncationExceeded {
            required: needed,
            available: tables.n_max(),
        });
    }
    let n = point.n;
    let (r, k) = (point.r(), point.k());
    use IdentityId::*;
    let sides = match id {
        Thm1 => Sides {
            lhs: tables.a(n, r, k),
            rhs: thm1(n, r, k),
        },
        Thm2 => Sides {
            lhs: tables.a(n, r, k),
            rhs: cauchy_convolution(n, k, |a| {
                bernoulli_all(a, a as i64 - r + 1)[a].eval(&Rational::one())
            }),
        },
        Eq32 => Sides {
            lhs: tables.a(n, r, k),
            rhs: cauchy_convolution(n, k, |a| narumi(a, -r).constant_term()),
        },
        Eq34 => {
            let b: Vec<Rational> = bernoulli2_all(n)
                .iter()
                .map(Polynomial::constant_term)
                .collect();
            Sides {
                lhs: tables.a(n, r, k),
                rhs: cauchy_convolution(n, k, |a| composition_sum(a, r as usize, &b)),
            }
        }
        Eq35 => eq35(n, r, k, &point.y(), tables),
        Eq36 => Sides {
            lhs: if n == 0 {
                Polynomial::zero()
            } else {
                tables.a(n - 1, r, k).scale(&q(n as i64))
            },
            rhs: {
                let a_n = tables.a(n, r, k);
                &a_n.shift(&q(-1)) - &a_n
            },
        },
        Thm3 => Sides {
            lhs: tables.a(n + 1, r, k),
            rhs: thm3(n, r, k, tables),
        },
        Thm4 | Thm4Variant => Sides {
            lhs: tables.a(n, r, k),
            rhs: thm4(n, r, k, id == Thm4Variant, tables),
        },
        Thm5 | Thm5Variant => thm5(n, point.m() as usize, r, k, id == Thm5Variant, tables),
        Eq52 => Sides {
            lhs: tables.a(n, r, k).derivative(),
            rhs: eq52(n, r, k, tables),
        },
        Thm6 => Sides {
            lhs: tables.a(n, r, k),
            rhs: thm6(n, r, k, point.s(), tables),
        },
        Thm7 => Sides {
            lhs: tables.a(n, r, k),
            rhs: thm7(n, r, k, point.s(), &point.lambda(), tables)?,
        },
        Thm8 => Sides {
            lhs: tables.a(n, r, k),
            rhs: combine(
                thm8_coefficients_from(n, r, k, tables)
                    .into_iter()
                    .enumerate()
                    .map(|(m, c)| (c, Polynomial::rising_factorial(m))),
            ),
        },
        NarumiBernoulli => Sides {
            lhs: narumi_all(n, r)[n].clone(),
            rhs: narumi_via_bernoulli(n, r),
        },
        ShefferPairEq17 => Sides {
            lhs: tables.a(n, r, k),
            rhs: sheffer_by_gf(&ShefferPair::mixed_a(r, k, required_order(n)), n)?,
        },
        AssocEq25 => Sides {
            lhs: sheffer_by_gf(&ShefferPair::signed_rising_factorials(required_order(n)), n)?,
            rhs: Polynomial::new((0..=n).map(|m| sign(m as i64) * stir1(n, m)).collect()),
        },
    };
    Ok(sides)
}

/// The right-hand side of `id` at `point`.
pub fn rhs(id: IdentityId, point: &GridPoint) -> Result<Polynomial> {
    Ok(evaluate(id, point, &Tables::new(point.n + 1))?.rhs)
}

/// Coefficients `(-1)^m C(n, m) A_{n-m}^{(r,k)}` of `A_n^{(r,k)}` in the rising-factorial basis `x^(m)`.
pub fn thm8_coefficients(n: usize, r: i64, k: i64) -> Vec<Rational> {
    thm8_coefficients_from(n, r, k, &Tables::new(n))
}

fn thm8_coefficients_from(n: usize, r: i64, k: i64, tables: &Tables) -> Vec<Rational> {
    let a = tables.mixed(r, k);
    (0..=n)
        .map(|m| sign(m as i64) * binom(n, m) * a[n - m].constant_term())
        .collect()
}

fn thm1(n: usize, r: i64, k: i64) -> Polynomial {
    let r = r as usize;
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = Rational::zero();
            for m in j..=n {
                let s1_nm = stir1(n, m);
                if s1_nm.is_zero() {
                    continue;
                }
                for l in 0..=(m - j) {
                    let top = m - l - j + r;
                    let term = binom(m, l)
                        * binom(m - l, j)
                        * s2(top as i64, r as i64)
                        * inv_pow(l + 1, k)
                        / binom(top, r);
                    c += &(term * &s1_nm);
                }
            }
            c * sign(j as i64)
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `sum_j { sum_{l,a} (-1)^j C(n, l+j) C(n-l-j, a) S1(l+j, j) w(a) C_{n-j-l-a}^{(k)} } x^j`.
fn cauchy_convolution(n: usize, k: i64, weight: impl Fn(usize) -> Rational) -> Polynomial {
    let cauchy: Vec<Rational> = poly_cauchy_all(n, k)
        .iter()
        .map(Polynomial::constant_term)
        .collect();
    let w: Vec<Rational> = (0..=n).map(weight).collect();
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = Rational::zero();
            for l in 0..=(n - j) {
                let outer = binom(n, l + j) * stir1(l + j, j);
                for a in 0..=(n - l - j) {
                    c += &(&outer * &binom(n - l - j, a) * &w[a] * &cauchy[n - j - l - a]);
                }
            }
            c * sign(j as i64)
        })
        .collect();
    Polynomial::new(coeffs)
}

/// `sum_{a_1 + ... + a_r = a} (a; a_1, ..., a_r) b_{a_1} ... b_{a_r}`.
fn composition_sum(a: usize, r: usize, b: &[Rational]) -> Rational {
    fn go(rest: usize, parts: usize, b: &[Rational], weight: Rational, acc: &mut Rational) {
        if parts == 0 {
            if rest == 0 {
                *acc += &weight;
            }
            return;
        }
        if parts == 1 {
            *acc += &(weight * &b[rest]);
            return;
        }
        for first in 0..=rest {
            let w = &weight * &binom(rest, first) * &b[first];
            go(rest - first, parts - 1, b, w, acc);
        }
    }
    let mut acc = Rational::zero();
    go(a, r, b, Rational::one(), &mut acc);
    acc
}

fn eq35(n: usize, r: i64, k: i64, y: &Rational, tables: &Tables) -> Sides {
    let a = tables.mixed(r, k);
    let rhs = combine((0..=n).map(|j| {
        let c = sign((n - j) as i64) * binom(n, j) * rising_at(n - j, y);
        (c, a[j].clone())
    }));
    Sides {
        lhs: a[n].shift(y),
        rhs,
    }
}

fn thm3(n: usize, r: i64, k: i64, tables: &Tables) -> Polynomial {
    let b_first: Vec<Polynomial> = bernoulli_all(n, 1 - r)
        .iter()
        .map(Polynomial::reflect)
        .collect();
    let b_second: Vec<Polynomial> = bernoulli_all(n, -r)
        .iter()
        .map(|p| p.reflect().shift(&Rational::one()))
        .collect();
    let mut terms = Vec::new();
    for m in 0..=n {
        let s1_nm = stir1(n, m);
        if s1_nm.is_zero() {
            continue;
        }
        for l in 0..=m {
            for a in 0..=(m - l) {
                let c = q(r)
                    * sign(a as i64)
                    * binom(m, l)
                    * binom(m - l, a)
                    * inv_pow(l + 1, k)
                    * &s1_nm
                    / q(((a + 2) * (a + 1)) as i64);
                terms.push((c, b_first[m - l - a].clone()));
            }
        }
        for a in 0..=m {
            let c = binom(m, a) * inv_pow(a + 2, k) * &s1_nm;
            terms.push((c, b_second[m - a].clone()));
        }
    }
    let lead = tables.a(n, r, k).shift(&Rational::one()).mul_x();
    &combine(terms) - &lead
}

fn thm4(n: usize, r: i64, k: i64, variant: bool, tables: &Tables) -> Polynomial {
    let one = Rational::one();
    let a = tables.mixed(r, k);
    let a_up = tables.mixed(r + 1, k);
    let a_up_low = tables.mixed(r + 1, k - 1);
    let mut terms = Vec::new();
    for l in 0..n {
        for i in 0..=l {
            let c = q(r)
                * sign((n - i) as i64)
                * fact(n - 1 - l)
                * fact(l - i)
                * binom(n - 1, l)
                * binom(l, i)
                / q((l - i + 2) as i64);
            let p = if variant {
                a_up[i].clone()
            } else {
                a_up[n].clone()
            };
            terms.push((c, p));
        }
        let c = q(r) * sign((n - l - 1) as i64) * fact(n - l - 1) * binom(n - 1, l);
        terms.push((c, a[l].clone()));
    }
    let inv_n = q(n as i64).recip().expect("n >= 1");
    terms.push((inv_n.clone(), a_up_low[n].shift(&one)));
    terms.push((-inv_n, a_up[n].shift(&one)));
    &combine(terms) - &a[n - 1].shift(&one).mul_x()
}

#[allow(clippy::needless_range_loop)]
fn thm5(n: usize, m: usize, r: i64, k: i64, variant: bool, tables: &Tables) -> Sides {
    let one = Rational::one();
    let at_zero = |rr: i64, kk: i64| -> Vec<Rational> {
        tables
            .mixed(rr, kk)
            .iter()
            .map(Polynomial::constant_term)
            .collect()
    };
    let at_one = |rr: i64, kk: i64| -> Vec<Rational> {
        tables.mixed(rr, kk).iter().map(|p| p.eval(&one)).collect()
    };
    let a0 = at_zero(r, k);
    let a1 = at_one(r, k);
    let a1_up = at_one(r + 1, k);
    let a1_third = if variant {
        at_one(r, k - 1)
    } else {
        a1.clone()
    };

    let lhs: Rational = (0..=(n - m))
        .map(|l| binom(n, l) * stir1(n - l, m) * &a0[l])
        .sum();

    let mut rhs = Rational::zero();
    for l in 0..(n - m) {
        let s = stir1(n - 1 - l, m);
        for a in 0..=l {
            rhs += &(q(r)
                * sign((l - a + 1) as i64)
                * fact(l - a)
                * binom(n - 1, l)
                * binom(l, a)
                * &s
                * &a1_up[a]
                / q((l - a + 2) as i64));
        }
        rhs += &(q(r) * binom(n - 1, l) * &s * &a1[l]);
    }
    let inv_m = q(m as i64).recip().expect("m >= 1");
    let rest = &one - &inv_m;
    for l in 0..=(n - m) {
        let base = binom(n - 1, l) * stir1(n - l - 1, m - 1);
        rhs += &(&base * &inv_m * &a1_third[l]);
        rhs += &(&base * &rest * &a1[l]);
    }
    Sides {
        lhs: Polynomial::constant(lhs),
        rhs: Polynomial::constant(rhs),
    }
}

fn eq52(n: usize, r: i64, k: i64, tables: &Tables) -> Polynomial {
    let a = tables.mixed(r, k);
    let outer = sign(n as i64 + 1) * fact(n);
    combine((0..n).map(|l| {
        let c = &outer * sign(l as i64 + 1) / (q((n - l) as i64) * fact(l));
        (c, a[l].clone())
    }))
}

fn thm6(n: usize, r: i64, k: i64, s: i64, tables: &Tables) -> Polynomial {
    let a = tables.mixed(r + s, k);
    let s_q = q(s);
    let values: Vec<Rational> = a.iter().map(|p| p.eval(&s_q)).collect();
    let basis = bernoulli_all(n, s);
    combine((0..=n).map(|m| {
        let c: Rational = (0..=(n - m))
            .map(|l| binom(n, l) * stir1(n - l, m) * &values[l])
            .sum();
        (sign(m as i64) * c, basis[m].clone())
    }))
}

fn thm7(
    n: usize,
    r: i64,
    k: i64,
    s: i64,
    lambda: &Rational,
    tables: &Tables,
) -> Result<Polynomial> {
    let su = s as usize;
    let a = tables.mixed(r, k);
    let basis = frobenius_euler_all(n, s, lambda)?;
    let scale = (Rational::one() - lambda).pow(-s)?;
    let neg_lambda = -lambda.clone();
    let inner: Vec<Rational> = (0..=n)
        .map(|l| {
            (0..=su)
                .map(|i| {
                    neg_lambda.pow(i as i64).expect("integer power")
                        * binom(su, i)
                        * a[l].eval(&q(s - i as i64))
                })
                .sum()
        })
        .collect();
    Ok(combine((0..=n).map(|m| {
        let c: Rational = (0..=(n - m))
            .map(|l| binom(n, l) * stir1(n - l, m) * &inner[l])
            .sum();
        (sign(m as i64) * c * &scale, basis[m].clone())
    })))
}
