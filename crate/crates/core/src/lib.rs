//! Numerical toolkit for the boundary geometry of complex hyperbolic 2-space.
//!
//! The boundary of `H²_C` is the one-point compactification of the Heisenberg
//! group `N = C × R`. This crate implements the pieces needed to study groups
//! generated by two Heisenberg translations (one fixing `∞`, one fixing the
//! origin `o`) acting on that boundary:
//!
//! - [`linalg`]: complex 3-vectors and matrices over the signature-(2,1)
//!   Hermitian form, projective comparisons, conjugate-linear maps;
//! - [`heisenberg`]: group law, standard lifts, Cygan metric, Cartan angular
//!   invariant, the `o ↔ ∞` involution and the boundary action;
//! - [`spheres`]: Cygan spheres, isometric spheres and geographic coordinates;
//! - [`rcircle`]: finite R-circles, their involutions and diameter, with a
//!   brute-force oracle;
//! - [`fans`]: infinite and finite fans, cardioid projections and strip
//!   containment;
//! - [`criteria`]: the discreteness criteria for the two-generator group as
//!   executable predicates with margins and equality-case classification;
//! - [`pingpong`]: sampling-based verification of the Klein combination
//!   hypotheses, the four-sphere scheme, and reduced-word nesting.
//!
//! All arithmetic is IEEE-754 double precision. Every operation is pure and
//! reentrant; values are freely shareable across threads.

pub mod criteria;
pub mod error;
pub mod fans;
pub mod heisenberg;
pub mod linalg;
pub mod pingpong;
pub mod rcircle;
pub mod spheres;
pub mod util;

pub use num_complex::Complex64;

pub use error::Error;
pub use linalg::{AntiHolMap, Mat3C, SignatureClass, Vec3C};

pub use heisenberg::{BoundaryPoint, HeisPoint};

pub use spheres::{CyganSphere, SphereSide};

pub use rcircle::NormalizedRCircle;

pub use fans::{Cardioid, FiniteFan, InfiniteFan, Strip};

pub use criteria::{
    CriterionId, CriterionResult, CriterionStatus, EqualityClass, EqualityData, GeneratorParams,
    Verdict,
};

pub use pingpong::{FourSpheres, HypothesisResult, Letter, ReducedWord, Region, VerifyReport};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
