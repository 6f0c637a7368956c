//! Exact verification of the Grace–Danielsson inequality `d² ≤ (R + r)(R − 3r)`
//! for tetrahedra built from a base triangle, an insphere tangent point and an
//! inradius, together with its two-term sum-of-squares gap certificate.
//!
//! All arithmetic is exact over `Q` or a single quadratic field `Q(√k)`.

pub mod base;
pub mod certificate;
pub mod error;
pub mod fixtures;
pub mod fuzz;
pub mod linalg;
pub mod metrics;
pub mod scalar;
pub mod special;
pub mod tetra;

pub use base::{BaseConfig, Point2, Regime};
pub use certificate::{certificate, GapCertificate, VRoute};
pub use error::{Error, Result};
pub use linalg::{Plane, Point3};
pub use metrics::{gd_verdict, metrics, Metrics, Verdict};
pub use scalar::{Field, FieldError, Radicand, Rational, Scalar};
pub use tetra::{construct, TangentPoints, Tetrahedron};
