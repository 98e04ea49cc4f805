//! Exact computation of the topological invariants of surface group
//! representations in `PGL(n, R)`, `n ≥ 4` even, together with explicit
//! representations realizing every invariant class, the general
//! classification of bundles with disconnected structure group, component
//! counts, and the Poincaré polynomials of the `SO(3)` and `SL(3, R)`
//! representation spaces.
//!
//! All arithmetic is exact: rationals for matrices and Clifford algebra
//! coefficients, big integers for polynomials.

pub mod classify;
pub mod cli;
pub mod clifford;
pub mod construct;
pub mod linalg;
pub mod poincare;
pub mod surfrep;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;
