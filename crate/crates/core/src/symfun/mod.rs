//! Symmetric-function constructors.
//!
//! Classical families come straight from their definitions. The generalized
//! `E_k`, `H_k` are built two ways and cross-checked at construction.

pub mod classical;
pub mod generalized;
pub mod roots;
pub mod schur;

pub use classical::{classical, m_lambda, Classical};
pub use generalized::{
    complete_by_peeling, complete_by_series, elementary_by_peeling, elementary_by_series,
    gen_complete, gen_elementary, gen_power_sum, power_sum_scale, product, product_over_partition,
    GenFamily, GenTable,
};
pub use roots::{eval_at_roots, m_lambda_at_roots, root_power_sum_closed};
pub use schur::{determinant, schur_det, schur_pair, SchurBasis, SchurPair};
