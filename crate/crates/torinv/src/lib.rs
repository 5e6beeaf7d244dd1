//! Exact computation of degree bounds for torus invariant rings.
//!
//! Everything here runs over the rationals or the Gaussian rationals; there
//! is no floating point anywhere. The pieces, bottom up:
//!
//! * [`scalar`]: arbitrary-precision rationals and Gaussian rationals.
//! * [`matrix`]: dense exact matrices, fraction-free elimination, kernels.
//! * [`hilbert`]: minimal generators of the monoid of nonnegative integer
//!   kernel points of an integer matrix (Hilbert basis).
//! * [`weights`]: weight lattices of products of GL and SL factors, root
//!   adjacency, uncramped sets.
//! * [`reps`]: monomial and tensor bases, torus weight matrices, and the
//!   Lie algebra action on explicit points.
//! * [`orbit`]: closed-orbit certificates (moment-map criterion) and
//!   Lie-algebra stabilizer dimensions.
//! * [`bounds`]: the invariant-ring degree bounds beta and sigma of a torus
//!   action, plus lower-bound chains to an ambient group.
//! * [`reproduce`]: two end-to-end scenario pipelines with machine-checkable
//!   reports.
//! * [`reference`]: slow brute-force reference implementations used as
//!   oracles in the test suites.

pub mod bounds;
pub mod hilbert;
pub mod matrix;
pub mod orbit;
pub mod reference;
pub mod reproduce;
pub mod reps;
pub mod scalar;
pub mod weights;
