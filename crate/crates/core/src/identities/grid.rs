use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::id::IdentityId;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Inclusive integer range `lo..=hi`, written `a..b` or `a` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for IntRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid range `{s}` (expected `a..b` or `a`)"));
        let parse = |p: &str| p.trim().parse::<i64>().map_err(|_| bad());
        let range = match s.split_once("..") {
            Some((a, b)) => IntRange::new(parse(a)?, parse(b.trim_start_matches('='))?),
            None => IntRange::single(parse(s)?),
        };
        if range.is_empty() {
            return Err(bad());
        }
        Ok(range)
    }
}

/// The parameter grid an identity is checked on. Dimensions an identity
/// does not use are ignored when its points are enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n: IntRange,
    pub r: IntRange,
    pub k: IntRange,
    pub s: IntRange,
    pub lambda: Vec<Rational>,
    /// `None` means `0..=n` at each point.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<IntRange>,
    pub y: Vec<Rational>,
}

impl GridSpec {
    /// The standard grid: `n <= n_max`, `r` in `0..3` (from `-2` where the
    /// identity allows every integer `r`), `k` in `-2..3`, `s` in `0..3`,
    /// `lambda` in `{2, -1, 1/2}`, and `y` on `n_max + 1` integers from `-2`.
    pub fn standard(id: IdentityId, n_max: usize) -> Self {
        let r_lo = if id.allows_negative_r() { -2 } else { 0 };
        GridSpec {
            n: IntRange::new(0, n_max as i64),
            r: IntRange::new(r_lo, 3),
            k: IntRange::new(-2, 3),
            s: IntRange::new(0, 3),
            lambda: vec![Rational::from(2), Rational::from(-1), Rational::new(1, 2)],
            m: None,
            y: (-2..=(n_max as i64 - 2).max(6))
                .map(Rational::from)
                .collect(),
        }
    }

    /// Checks the grid is finite, nonempty and fit for `id`.
    pub fn validate(&self, id: IdentityId) -> Result<()> {
        let dims = id.dims();
        let empty = |name: &str| Err(Error::Domain(format!("empty {name} range")));
        if self.n.is_empty() || self.n.lo < 0 {
            return Err(Error::Domain(
                "n range must be nonempty and nonnegative".into(),
            ));
        }
        if dims.r && self.r.is_empty() {
            return empty("r");
        }
        if dims.k && self.k.is_empty() {
            return empty("k");
        }
        if dims.s && self.s.is_empty() {
            return empty("s");
        }
        if dims.lambda && self.lambda.is_empty() {
            return empty("lambda");
        }
        if dims.m && self.m.is_some_and(|m| m.is_empty()) {
            return empty("m");
        }
        if dims.y {
            let mut ys = self.y.clone();
            ys.sort();
            ys.dedup();
            if ys.len() != self.y.len() {
                return Err(Error::Domain("y points must be distinct".into()));
            }
            if ys.len() < self.n.hi as usize + 1 {
                return Err(Error::Domain(format!(
                    "{} y points cannot decide a degree-{} identity in y",
                    ys.len(),
                    self.n.hi
                )));
            }
        }
        Ok(())
    }

    /// Largest `n` any formula touches (THM3 reaches `A_{n+1}`).
    pub fn max_degree(&self, id: IdentityId) -> usize {
        let n = self.n.hi.max(0) as usize;
        if id == IdentityId::Thm3 {
            n + 1
        } else {
            n
        }
    }

    /// Grid points in lexicographic order `(n, r, k, s, lambda, m, y)`.
    pub fn points(&self, id: IdentityId) -> Vec<GridPoint> {
        let dims = id.dims();
        let opt_range = |on: bool, r: IntRange| -> Vec<Option<i64>> {
            if on {
                r.iter().map(Some).collect()
            } else {
                vec![None]
            }
        };
        let opt_list = |on: bool, l: &[Rational]| -> Vec<Option<Rational>> {
            if on {
                l.iter().cloned().map(Some).collect()
            } else {
                vec![None]
            }
        };
        let mut out = Vec::new();
        for n in self.n.iter() {
            let m_range = self.m.unwrap_or(IntRange::new(0, n));
            for r in opt_range(dims.r, self.r) {
                for k in opt_range(dims.k, self.k) {
                    for s in opt_range(dims.s, self.s) {
                        for lambda in opt_list(dims.lambda, &self.lambda) {
                            for m in opt_range(dims.m, m_range) {
                                for y in opt_list(dims.y, &self.y) {
                                    out.push(GridPoint {
                                        n: n as usize,
                                        r,
                                        k,
                                        s,
                                        lambda: lambda.clone(),
                                        m,
                                        y,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// One parameter assignment. Unused dimensions are `None` and omitted from reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub y: Option<Rational>,
}

impl GridPoint {
    /// A point with only `n`, `r`, `k` set.
    pub fn nrk(n: usize, r: i64, k: i64) -> Self {
        GridPoint {
            n,
            r: Some(r),
            k: Some(k),
            s: None,
            lambda: None,
            m: None,
            y: None,
        }
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_lambda(mut self, lambda: Rational) -> Self {
        self.lambda = Some(lambda);
        self
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_y(mut self, y: Rational) -> Self {
        self.y = Some(y);
        self
    }

    pub(crate) fn r(&self) -> i64 {
        self.r.unwrap_or(0)
    }

    pub(crate) fn k(&self) -> i64 {
        self.k.unwrap_or(0)
    }

    pub(crate) fn s(&self) -> i64 {
        self.s.unwrap_or(0)
    }

    pub(crate) fn m(&self) -> i64 {
        self.m.unwrap_or(0)
    }

    pub(crate) fn lambda(&self) -> Rational {
        self.lambda.clone().unwrap_or_else(|| Rational::from(-1))
    }

    pub(crate) fn y(&self) -> Rational {
        self.y.clone().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(r) = self.r {
            write!(f, " r={r}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(s) = self.s {
            write!(f, " s={s}")?;
        }
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        if let Some(y) = &self.y {
            write!(f, " y={y}")?;
        }
        Ok(())
    }
}

/// Why a grid point was not evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum SkipReason {
    OutOfDomain(String),
    #[serde(rename = "lambda=1")]
    LambdaOne,
    #[serde(rename = "r<0")]
    NegativeR,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::OutOfDomain(d) => write!(f, "out-of-domain: {d}"),
            SkipReason::LambdaOne => write!(f, "lambda=1"),
            SkipReason::NegativeR => write!(f, "r<0"),
        }
    }
}

/// The domain predicate of each identity.
pub fn check_domain(id: IdentityId, p: &GridPoint) -> std::result::Result<(), SkipReason> {
    use IdentityId::*;
    match id {
        Thm1 if p.r() < 0 => Err(SkipReason::NegativeR),
        Eq34 if p.r() < 0 => Err(SkipReason::NegativeR),
        Eq34 if p.r() > 3 => Err(SkipReason::OutOfDomain(
            "composition sum capped at r <= 3".into(),
        )),
        Thm4 | Thm4Variant if p.n == 0 => Err(SkipReason::OutOfDomain("requires n >= 1".into())),
        Thm5 | Thm5Variant if p.m() < 1 || p.m() > p.n as i64 - 1 => {
            Err(SkipReason::OutOfDomain("requires n - 1 >= m >= 1".into()))
        }
        Thm6 | Thm7 if p.s() < 0 => Err(SkipReason::OutOfDomain("requires s >= 0".into())),
        Thm7 if p.lambda().is_one() => Err(SkipReason::LambdaOne),
        _ => Ok(()),
    }
}
