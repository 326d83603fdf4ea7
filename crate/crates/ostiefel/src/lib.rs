//! Exact octonion and Clifford-algebra arithmetic for verifying the frame
//! spaces V_k(O^n), the triple spaces Ω_{l,m} they generalize to, and the
//! extrinsic geometry of the quaternionic case.
//!
//! Everything labelled exact runs over the field Q(√2) with arbitrary-precision
//! rationals; rank and definiteness claims are decided by fraction-free
//! elimination, never by floating pivots. Float mode exists for sampled,
//! advisory computations and carries explicit tolerances.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `ostiefel` binary exposes the same checks as a small CLI.

pub mod clifford;
pub mod extgeom;
pub mod frames;
pub mod linalg;
pub mod octonion;
pub mod omega;
pub mod report;
pub mod scalar;
pub mod witness;

pub use clifford::{build_system, delta, CliffordSystem, Family};
pub use frames::OctFrame;
pub use linalg::{Mat, MatScalar};
pub use octonion::{oct_inner, Octonion};
pub use omega::OmegaPoint;
pub use scalar::{QSqrt2, Rational, Scalar, ScalarMode, Tol};
