//! Divisor-problem and critical-line error terms.
//!
//! Exact divisor sums, `|ζ(½+it)|²` integration, the hybrid error term `E*` and its
//! integral `R`, explicit oscillating series, exponential sums, moment fits,
//! quadruple counting and exponent-pair arithmetic.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod ddouble;
pub mod divisor;
pub mod error;
pub mod error_terms;
pub mod explicit;
pub mod expsum;
pub mod grid;
pub mod moments;
pub mod oracle;
pub mod output;
pub mod pairs;
pub mod quad;
pub mod quadruples;
mod rs_coeffs;
pub mod sum;
pub mod verify;
pub mod zeta;

pub use divisor::{DeltaStarForm, DivisorTable, EULER_GAMMA};
pub use error::{Error, Result};
pub use error_terms::HybridErrorTerms;
pub use grid::CriticalLineGrid;
pub use zeta::{zeta_half_sq, ZetaMethod};
