//! Exact arithmetic kernel: multivariate Laurent polynomials over `BigInt`,
//! truncated power/Laurent series on explicit boxes, and rational generating
//! functions with factored denominators.
//!
//! Everything downstream (root systems, the recursion oracle, generating
//! functions, closed forms) is built on these types.  There is no floating
//! point anywhere: coefficients are arbitrary-precision integers and every
//! truncation is tracked by an explicit box so reads outside the guaranteed
//! region are errors rather than silent zeros.

pub mod error;
pub mod laurent;
pub mod ratgf;
pub mod series;
pub mod vars;

pub use error::KernelError;
pub use laurent::LaurentPoly;
pub use ratgf::RationalGF;
pub use series::{f_binom, theta, theta_f_expand, SeriesBox, TruncSeries};
pub use vars::{ExpVec, VarSet};
