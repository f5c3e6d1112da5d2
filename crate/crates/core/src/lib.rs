//! Morley triangles in the plane.
//!
//! - [`inverse`] builds a triangle with prescribed angles `(3a, 3b, 3c)` from
//!   a given equilateral Morley triangle.
//! - [`forward`] computes the Morley triangle of any triangle by trisecting
//!   its angles.
//! - [`verify`] checks the angle identities of the construction numerically.
//! - [`document`] and [`svg`] serialize results.

// `!(x > y)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod document;
pub mod error;
pub mod forward;
pub mod geom;
pub mod inverse;
pub mod svg;
pub mod triangle;
pub mod verify;

pub use document::{ConfigurationDocument, ForwardDocument};
pub use error::{Error, Result};
pub use forward::{morley_triangle, trisectors, ForwardScene, Ray};
pub use geom::{
    angle_at, chord_arc_circle, intersect_lines, orientation, rotate_about, signed_angle, Angle,
    Circle, Line, Orientation, Point,
};
pub use inverse::{construct, place_arc_points, AngleTriple, ArcPoints, MorleyConfiguration};
pub use svg::{render_svg, RenderStyle, Scene};
pub use triangle::Triangle;
pub use verify::{CheckReport, LimitSummary, Similarity, Tolerances, VerificationSummary};
