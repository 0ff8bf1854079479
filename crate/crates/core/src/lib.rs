//! Generalized complete and elementary symmetric functions in exact arithmetic.
//!
//! `E_k^(s)` is the coefficient of `t^k` in `prod_i (1 + x_i t + ... + (x_i t)^s)`
//! and `H_k^(s)` the coefficient of `t^k` in
//! `prod_i (1 - x_i t + ... + (-x_i t)^s)^(-1)`. For `s = 1` these are the
//! classical `e_k` and `h_k`.
//!
//! The crate is split into layers:
//!
//! * [`exactalg`]: integers, rationals, roots of unity and `q`-polynomials.
//! * [`multipoly`]: sparse multivariate polynomials and truncated series in `t`.
//! * [`partitions`]: integer partitions and constrained enumeration.
//! * [`symfun`]: `m_lambda`, `e_k`, `h_k`, `p_k`, `E`, `H`, `P` and Schur-type determinants.
//! * [`identities`]: a registry of exact identity checks.
//! * [`combinatorics`]: lattice-path and tiling models.
//! * [`bisnomial`]: bi^s-nomial coefficients and their `q` / `p,q` analogues.

pub mod bisnomial;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod identities;
pub mod multipoly;
pub mod partitions;
pub mod symfun;

pub use error::{Error, Result};
pub use exactalg::{BiPoly, BigInteger, CycInt, Rational, Ring, UniPoly, UnitalRing};
pub use multipoly::{MPoly, Monomial, TSeries};
pub use partitions::Partition;
