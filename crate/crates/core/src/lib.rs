//! Exact formal power series, umbral calculus and the mixed-type
//! Cauchy/poly-Cauchy polynomials `A_n^{(r,k)}(x)`.

pub mod cli;
pub mod error;
pub mod families;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod selftest;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::{Ring, Series};
