//! Explicit prime-number-theorem error bounds.
//!
//! The crate turns a zero-free region, an RH verification height, and a
//! per-sigma zero-density estimate into executable certificates:
//!
//! * the psi(x) error table (A, B, C, eps0 rows) and its theta variant,
//! * the |pi(x) - li(x)| <= 235 x (log x)^0.52 exp(-0.8 sqrt(log x)) bound,
//! * the Ramanujan-inequality threshold x >= exp(3915),
//!
//! all validated desk-side against a vendored catalog of zeta zeros and
//! exact prime sieving.

// `!(a < b)`-style guards reject NaN along with the out-of-domain values;
// the arithmetic types use method names (add/mul/...) rather than operator
// traits so the directed variants sit next to them uniformly.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::should_implement_trait)]

pub mod dd;
pub mod error;
pub mod numerics;
pub mod pi_li;
pub mod pintz;
pub mod primes;
pub mod ramanujan;
pub mod zeta;

pub use error::{Error, Result};
pub use numerics::{DirectedValue, Direction, LogScalar, Sign};
