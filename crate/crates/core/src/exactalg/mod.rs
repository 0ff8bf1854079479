//! Exact coefficient rings.
//!
//! Integers and rationals come from `num-bigint`/`num-rational`; the
//! cyclotomic quotient and the `q` / `p,q` polynomial rings live here.

mod bipoly;
mod cyclotomic;
mod ring;
mod unipoly;

pub use bipoly::BiPoly;
pub use cyclotomic::{cyc_as_integer, cyc_power_sum, cyc_root_power, cyclotomic_polynomial, CycInt};
pub use ring::{CoeffText, Ring, UnitalRing};
pub use unipoly::UniPoly;

pub type BigInteger = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
