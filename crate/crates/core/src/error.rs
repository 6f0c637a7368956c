use thiserror::Error;

use crate::scalar::FieldError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("base triangle is degenerate: vertices are collinear (a_0 = 0)")]
    Collinear,
    #[error("base triangle is clockwise (a_0 < 0): swap two vertices, e.g. y and z")]
    Clockwise,
    #[error("tangent point not interior: {0} <= 0")]
    NotInterior(&'static str),
    #[error("inradius must be positive")]
    NonPositiveInradius,
    #[error("critical inradius r^2 = A/B: the tangent planes are parallel and the tetrahedron degenerates to a semi-infinite prism")]
    Critical,
    #[error("supercritical inradius r^2 > A/B: the tangent planes meet below the base plane")]
    Supercritical,
    #[error("degenerate edge: coincident vertices")]
    DegenerateEdge,
    #[error("degenerate tetrahedron: apex lies in the base plane")]
    FlatTetrahedron,
    #[error("side length sqrt({0}) is not representable in the active field")]
    NonRepresentableSide(String),
    #[error("tangent point is not the circumcenter of the base triangle")]
    NotCircumcenter,
    #[error("circumcenter of the base triangle is not interior (triangle is not acute)")]
    CircumcenterNotInterior,
    #[error("tangent point is not the incenter of the base triangle")]
    NotIncenter,
    #[error("alpha = u1^2 + u2^2 vanishes: tangent point is the circumcenter")]
    VanishingAlpha,
    #[error("4*alpha*gamma - beta^2 = {0} is not a perfect square in the active field")]
    DiscriminantNotSquare(String),
    #[error("no subcritical probe inradius available")]
    NoProbes,
    #[error("{0}")]
    Domain(String),
}
