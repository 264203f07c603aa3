//! Constant-curvature plane geometry and a numerical verifier for the
//! classical theory of parallels.
//!
//! * [`plane`]: points, geodesics and metric primitives for any curvature `K`.
//! * [`trig`]: the curvature-generic law of cosines and related formulas.
//! * [`figures`]: triangles, trirectangular and birectangular quadrilaterals.
//! * [`counterexamples`]: certified hyperbolic falsifiers of historical
//!   substitutes for the parallel postulate.
//! * [`propositions`]: seeded numerical checks of the catalogued claims.
//! * [`render`], [`report`], [`table`]: SVG figures, JSON reports and CSV
//!   trigonometric tables.

pub mod counterexamples;
pub mod error;
pub mod figures;
pub mod plane;
pub mod propositions;
pub mod render;
pub mod report;
pub mod table;
pub mod trig;

pub use error::{Error, Result};
pub use plane::{CurvedPlane, Geodesic, IntersectionKind, IntersectionSet, Point};
