//! Exact weight-multiplicity computations for the rank-two simple Lie
//! algebras A2, C2 and G2.
//!
//! The crate computes the multiplicity of a weight in a finite-dimensional
//! irreducible representation by three independent routes and offers the
//! machinery to cross-check them against each other:
//!
//! * [`closed`] — closed-form piecewise-polynomial formulas evaluated in
//!   integer arithmetic, valid for weights of bounded depth;
//! * [`multgen`] — coefficient extraction from rational multiplicity
//!   generating functions (with the G2 numerator reconstructed from series
//!   data at build time, see [`multgen::reconstruct_g2`]);
//! * [`freudenthal`] — a direct implementation of the Freudenthal recursion,
//!   used as the reference oracle throughout the test suite.
//!
//! Character-level generating functions ([`chargen`]) and structural
//! identities (tensor decompositions, a differential equation satisfied by
//! the character generating function, dimension generating functions) give
//! further independent consistency checks; [`verify`] packages them as
//! reportable suites consumed by the CLI and the acceptance tests.
//!
//! All arithmetic is exact: `BigInt` coefficients, integer-only recursions,
//! and truncated series on explicit boxes ([`kernel`]).

pub mod chargen;
pub mod closed;
pub mod freudenthal;
pub mod kernel;
pub mod lie;
pub mod multgen;
pub mod report;
pub mod verify;

pub use kernel::{
    f_binom, theta, theta_f_expand, ExpVec, KernelError, LaurentPoly, RationalGF, SeriesBox,
    TruncSeries, VarSet,
};
