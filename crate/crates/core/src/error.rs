use thiserror::Error;

/// Errors raised by the geometry kernel, the figure constructions and the
/// verifiers built on top of them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("antipodal points do not determine a unique geodesic")]
    NonUniqueGeodesic,

    #[error("point is a pole of the geodesic; every point of it is a foot")]
    NonUniqueFoot,

    #[error("operation requires {required}, plane has K = {curvature}")]
    WrongGeometry {
        required: &'static str,
        curvature: f64,
    },

    #[error("no equilateral triangle has vertex angle {0} in this plane")]
    InfeasibleAngle(f64),

    /// The two erected perpendiculars of a trirectangular construction do not
    /// meet. `gap` is the length of their common perpendicular (0 when they
    /// are asymptotic).
    #[error("erected perpendiculars do not meet (common perpendicular length {gap})")]
    DivergentSides { gap: f64 },

    #[error("no triangle realises angles ({0}, {1}, {2}) in this plane")]
    InfeasibleAngles(f64, f64, f64),

    #[error("similar non-congruent triangles do not exist when K != 0")]
    NoSimilarTriangles,

    #[error("parallels through a point are not multiple in this plane")]
    NoMultiplicity,

    #[error("wrong configuration: {0}")]
    WrongConfiguration(String),

    #[error("no circumcircle: perpendicular bisectors do not meet")]
    NoCircumcenter,

    #[error("search found no counterexample up to parameter {searched_to}")]
    NoCounterexample { searched_to: f64 },

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("unknown counterexample id {0:?}")]
    UnknownCounterexample(String),

    #[error("witness does not replay: {0}")]
    Replay(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
