use thiserror::Error;

use crate::face::Face;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational {0:?}")]
    ParseScalar(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid face {indices:?} in ambient dimension {ambient_n}")]
    BadFace { indices: Vec<usize>, ambient_n: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    CoordinateCount { expected: usize, got: usize },

    #[error("coordinate {index} is negative")]
    NegativeCoordinate { index: usize },

    #[error("coordinates sum to {0}, expected 1")]
    BadSum(String),

    #[error("point has zero mass on face {0}")]
    ZeroMass(Face),

    #[error("point is not interior to face {0}")]
    NotInterior(Face),

    #[error("no foot given for apex {0}")]
    MissingFoot(Face),

    #[error("foot of cevian with apex {0} is not interior to the complementary face")]
    BadSupport(Face),

    #[error("invalid cevian dimension k={k} for n={n}")]
    BadDimension { n: usize, k: usize },

    #[error("face of dimension {l} does not match cevian dimension {k} in ambient dimension {n}")]
    DimensionMismatch { n: usize, k: usize, l: usize },

    #[error("family is not uniform")]
    NotUniform,

    #[error("duplicate apex {0}")]
    DuplicateApex(Face),

    #[error("closure has {count} points in the interior of face {face}")]
    ClosureAmbiguous { face: Face, count: usize },

    #[error("no edge point for edge {0}")]
    MissingEdgePoint(Face),

    #[error("vertex cycle {0:?} is invalid")]
    BadCycle(Vec<usize>),

    #[error("edge point on {edge} does not precede the top foot")]
    PrecedenceViolation { edge: Face },

    #[error("family does not have the tetrahedral mixed shape")]
    BadMixedShape,

    #[error("multipede closure fails at face {0}")]
    BrokenMultipede(Face),

    #[error("denominator bound {bound} too small for n={n}")]
    DenominatorBound { n: usize, bound: u64 },

    #[error("theorem violation: condition (1) = {intersects}, condition (2) failing faces = {failing_faces:?}; instance: {instance}")]
    TheoremViolation {
        intersects: bool,
        failing_faces: Vec<Vec<usize>>,
        instance: String,
    },

    #[error("format error: {0}")]
    Format(String),
}
