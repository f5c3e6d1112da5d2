use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lines are nearly parallel (relative cross product {relative_cross:e})")]
    NearParallel { relative_cross: f64 },
    #[error("ray is degenerate: its defining points coincide at the working scale")]
    DegenerateRay,
    #[error("chord is degenerate: its endpoints coincide at the working scale")]
    DegenerateChord,
    #[error("far point lies on the chord line")]
    FarPointOnLine,
    #[error("line is degenerate: its defining points coincide")]
    DegenerateLine,
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("circle radius must be finite and strictly positive, got {0}")]
    InvalidRadius(f64),
    #[error("half central angle must lie in (0, pi/2), got {0}")]
    InvalidHalfCentral(f64),
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("inner triangle is not equilateral (relative side spread {spread:e})")]
    NotEquilateral { spread: f64 },
    #[error("invalid angle triple: {0}")]
    InvalidAngles(String),
    #[error("trisector intersection falls behind a ray origin")]
    TrisectorMiss,
    #[error("render style sizes must be finite and positive, got {0}")]
    InvalidStyle(f64),
    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
