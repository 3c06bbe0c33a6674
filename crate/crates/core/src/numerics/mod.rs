//! Log-domain arithmetic, directed enclosures, and rigorous integral bounds.

pub mod directed;
pub mod log_scalar;
pub mod logint;
pub mod quad;

pub use directed::DirectedValue;
pub use log_scalar::{ls_combine, Direction, LogScalar, Sign};
pub use logint::bound_inv_log_power_integral;
pub use quad::{adaptive_quad, DecreasingIntegrand, Integrand, Neumaier, Shape};
