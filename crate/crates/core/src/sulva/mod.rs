//! Rope-and-peg geometry for altar layout.
//!
//! Pegs sit at exact coordinates whenever the construction allows it; when a
//! step would need a sum of unlike surds the affected marks become
//! [`ApproxPoint`]s and the scene is flagged approximate.

mod area;
mod classify;
mod construct;
mod point;
mod recipes;
mod refine;
mod scene;

pub use area::{
    altar_scale_factor, area_by_unit_counting, decompose_square, diagonal_identity_check,
    square_area_scale, square_area_scale_by_counting, tilted_square_area_by_lattice_points,
    AreaMethod, DiagonalCheck, PartLabel, RectilinearFigure, SquarePart, UnitCount,
};
pub use classify::{classify_figure, classify_quadrilateral, FigureClass};
pub use construct::{
    check_perpendicular, equinox_shadow_points, perpendicular_via_cord, prachi_from_shadow_points,
    Circle, CordPerpendicular, OrientedLine,
};
pub use point::{ApproxPoint, Located, Point, DEFAULT_TOL};
pub use recipes::{recipe, RECIPES};
pub use refine::{
    scale_trace_to_unit, sulba_diagonal_refinement, RefinementStep, RefinementTrace,
    ScaledCorrection, StepSign, MAX_REFINEMENT_STEPS,
};
pub use scene::{Cord, CoordRepr, Figure, Peg, PegRepr, Scene, SceneCircle, SceneDocument, SceneLine};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("degenerate shadow observation")]
    DegenerateObservation,
    #[error("invalid observation")]
    InvalidObservation,
    #[error("cord too short to stretch taut")]
    CordTooShort,
    #[error("pegs not equidistant")]
    PegsNotEquidistant,
    #[error("not a simple quadrilateral")]
    NotSimpleQuadrilateral,
    #[error("degenerate figure")]
    DegenerateFigure,
    #[error("cannot tile with given unit")]
    CannotTile,
    #[error("figure edges must run along the axes")]
    NotRectilinear,
    #[error("figure too large to count")]
    TooLarge,
    #[error("zero side")]
    ZeroSide,
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("invalid step count: {0}")]
    InvalidSteps(&'static str),
    #[error("unknown recipe {0:?}")]
    UnknownRecipe(String),
    #[error("invalid scene: {0}")]
    Scene(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
