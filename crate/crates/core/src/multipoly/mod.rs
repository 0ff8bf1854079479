//! Sparse multivariate polynomials over an exact ring, and truncated power
//! series in an auxiliary variable `t` whose coefficients are such polynomials.

mod monomial;
mod mpoly;
mod series;
mod specialize;

pub use monomial::{canonical_cmp, Monomial};
pub use mpoly::MPoly;
pub use series::TSeries;
pub use specialize::{all_ones, geometric_q, pq_grid, specialize, SpecializeKind, Specialized};
