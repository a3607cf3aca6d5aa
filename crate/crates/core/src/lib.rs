//! Exact decision engine for the polytope escape problem of continuous
//! linear dynamical systems.
//!
//! Given an affine map `f(x) = Ax + a` and a convex polytope
//! `P = { x : B1 x > b1, B2 x >= b2 }`, all with rational coefficients, the
//! engine decides whether some initial point is *trapped* (its entire
//! trajectory under `x' = f(x)` stays inside `P`) and, if so, produces an
//! eventually-trapped witness point together with a per-constraint spectral
//! certificate.
//!
//! The trusted path is fully exact: arbitrary-precision rationals, canonical
//! real/complex algebraic numbers, exact spectral projections and an exact
//! simplex over algebraic coefficients. Floating point lives only in the
//! [`oracle`] module, which cross-validates verdicts numerically and never
//! decides anything.

pub mod algnum;
pub mod escape;
pub mod factor;
pub mod format;
pub mod interval;
pub mod lpalg;
pub mod matrix;
pub mod num;
pub mod oracle;
pub mod poly;
pub mod spectral;

pub use crate::algnum::AlgebraicNumber;
pub use crate::num::{Rational, Sign};

/// Dense matrix over exact rationals; the instance data type.
pub type RationalMatrix = matrix::Matrix<Rational>;
/// Dense matrix over real/complex algebraic numbers.
pub type AlgebraicMatrix = matrix::Matrix<AlgebraicNumber>;
/// Dense matrix over `f64`, used only by the numeric oracle.
pub type FloatMatrix = matrix::Matrix<f64>;
/// Univariate polynomial with rational coefficients, ascending degree order.
pub type RationalPolynomial = poly::Poly<Rational>;
