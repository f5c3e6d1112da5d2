//! Construction of a triangle `ABC` from a prescribed Morley triangle.
//!
//! Given an equilateral `A'B'C'` and angles `(a, b, c)` with
//! `a + b + c = π/3`, each vertex of `ABC` sees one side of `A'B'C'` under
//! its own third-angle, so it lies on an arc over that side. The arc over
//! `C'B'` carries `A`, the arc over `A'C'` carries `B`, the arc over `B'A'`
//! carries `C`. On each arc two more points are placed one chord (central
//! angle `2a`) beyond the side's endpoints; the sides of `ABC` are the lines
//! through those points:
//!
//! ```text
//! (AB) = (I_a J_b)    (BC) = (I_b J_c)    (CA) = (I_c J_a)
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{
    chord_arc_circle, intersect_lines, rotate_about, signed_angle, Angle, Circle, Line, Point,
};
use crate::triangle::Triangle;

/// Smallest admissible component of an [`AngleTriple`], in radians.
pub const MIN_ANGLE: f64 = 1e-6;
/// Allowed deviation of `a + b + c` from `π/3`.
pub const SUM_TOLERANCE: f64 = 1e-12;
/// Relative side spread accepted for the inner triangle.
pub const EQUILATERAL_TOLERANCE: f64 = 1e-9;

/// Third-angles `(a, b, c)` of the outer triangle, in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleTriple {
    a: f64,
    b: f64,
    c: f64,
}

impl AngleTriple {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !v.is_finite() {
                return Err(Error::InvalidAngles(format!("{name} is not finite")));
            }
            if v < MIN_ANGLE {
                return Err(Error::InvalidAngles(format!(
                    "{name} = {v:e} rad is below the minimum {MIN_ANGLE:e} rad"
                )));
            }
        }
        let excess = a + b + c - PI / 3.0;
        if excess.abs() > SUM_TOLERANCE {
            return Err(Error::InvalidAngles(format!(
                "a + b + c must equal 60 degrees (pi/3), off by {:e} rad",
                excess
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn from_degrees(a: f64, b: f64, c: f64) -> Result<Self> {
        Self::new(a.to_radians(), b.to_radians(), c.to_radians())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }
}

/// The six points placed on the arcs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcPoints {
    pub i_a: Point,
    pub j_a: Point,
    pub i_b: Point,
    pub j_b: Point,
    pub i_c: Point,
    pub j_c: Point,
}

/// The complete labeled construction.
#[derive(Debug, Clone, PartialEq)]
pub struct MorleyConfiguration {
    /// `A'B'C'`.
    pub inner: Triangle,
    pub angles: AngleTriple,
    /// Circles carrying `A`, `B`, `C` respectively.
    pub arcs: [Circle; 3],
    pub points: ArcPoints,
    /// `(I_a J_b)`, `(I_b J_c)`, `(I_c J_a)`: the sides `AB`, `BC`, `CA`.
    pub lines: [Line; 3],
    /// `ABC`.
    pub outer: Triangle,
}

impl MorleyConfiguration {
    pub fn a_prime(&self) -> Point {
        self.inner.vertex(0)
    }

    pub fn b_prime(&self) -> Point {
        self.inner.vertex(1)
    }

    pub fn c_prime(&self) -> Point {
        self.inner.vertex(2)
    }

    pub fn a(&self) -> Point {
        self.outer.vertex(0)
    }

    pub fn b(&self) -> Point {
        self.outer.vertex(1)
    }

    pub fn c(&self) -> Point {
        self.outer.vertex(2)
    }

    /// Chord endpoints `(near I, near J)` of each arc, in arc order.
    pub fn arc_endpoints(&self) -> [(Point, Point); 3] {
        [
            (self.c_prime(), self.b_prime()),
            (self.a_prime(), self.c_prime()),
            (self.b_prime(), self.a_prime()),
        ]
    }

    /// Every named point of the construction, in a fixed order.
    pub fn named_points(&self) -> [(&'static str, Point); 12] {
        let p = &self.points;
        [
            ("A'", self.a_prime()),
            ("B'", self.b_prime()),
            ("C'", self.c_prime()),
            ("I_a", p.i_a),
            ("J_a", p.j_a),
            ("I_b", p.i_b),
            ("J_b", p.j_b),
            ("I_c", p.i_c),
            ("J_c", p.j_c),
            ("A", self.a()),
            ("B", self.b()),
            ("C", self.c()),
        ]
    }
}

/// Places the two points adjacent to the chord `(p_near, q_near)` on the
/// major arc of `circle`, each one chord of central angle `2·half_central`
/// beyond its endpoint, away from the other endpoint.
pub fn place_arc_points(
    p_near: Point,
    q_near: Point,
    circle: &Circle,
    half_central: Angle,
) -> Result<(Point, Point)> {
    let center = circle.center;
    let sweep = signed_angle(center, p_near, q_near)?.value().signum();
    let step = half_central * 2.0;
    let i_point = rotate_about(p_near, center, step * -sweep);
    let j_point = rotate_about(q_near, center, step * sweep);
    Ok((i_point, j_point))
}

/// Line through `p` and `q`, both at the same distance from `apex`.
///
/// The direction is taken perpendicular to the bisector of `p·apex·q`, which
/// stays well defined when `p` and `q` coincide (the apex angle
/// `π/3 − 2a` vanishes at `a = π/6`); the line is then the tangent at that
/// point.
pub(crate) fn chord_line(apex: Point, p: Point, q: Point) -> Result<Line> {
    let u = (p - apex).normalized().ok_or(Error::DegenerateRay)?;
    let v = (q - apex).normalized().ok_or(Error::DegenerateRay)?;
    let bisector = (u + v).normalized().ok_or(Error::DegenerateLine)?;
    let mid = p.midpoint(q);
    Line::new(mid, mid + bisector.perp() * p.distance(apex))
}

/// Builds the outer triangle `ABC` whose Morley triangle is `inner`.
///
/// `inner` may have either orientation; its vertices are read as
/// `(A', B', C')` in order.
pub fn construct(inner: &Triangle, angles: AngleTriple) -> Result<MorleyConfiguration> {
    let spread = inner.relative_side_spread();
    if !(spread <= EQUILATERAL_TOLERANCE) {
        return Err(Error::NotEquilateral { spread });
    }
    let [ap, bp, cp] = inner.vertices();
    let [a, b, c] = angles.as_array().map(Angle::radians);

    // (chord near-I, chord near-J, far point, half angle), one per arc
    let specs = [(cp, bp, ap, a), (ap, cp, bp, b), (bp, ap, cp, c)];
    let mut arcs = [Circle {
        center: Point::ORIGIN,
        radius: 1.0,
    }; 3];
    let mut placed = [(Point::ORIGIN, Point::ORIGIN); 3];
    for (k, &(p_near, q_near, far, half)) in specs.iter().enumerate() {
        arcs[k] = chord_arc_circle(p_near, q_near, half, far)?;
        placed[k] = place_arc_points(p_near, q_near, &arcs[k], half)?;
    }
    let points = ArcPoints {
        i_a: placed[0].0,
        j_a: placed[0].1,
        i_b: placed[1].0,
        j_b: placed[1].1,
        i_c: placed[2].0,
        j_c: placed[2].1,
    };

    let ab = chord_line(cp, points.i_a, points.j_b)?;
    let bc = chord_line(ap, points.i_b, points.j_c)?;
    let ca = chord_line(bp, points.i_c, points.j_a)?;
    let va = intersect_lines(&ab, &ca)?;
    let vb = intersect_lines(&bc, &ab)?;
    let vc = intersect_lines(&ca, &bc)?;
    let outer = Triangle::labeled([va, vb, vc], ["A", "B", "C"])?;

    Ok(MorleyConfiguration {
        inner: inner.clone(),
        angles,
        arcs,
        points,
        lines: [ab, bc, ca],
        outer,
    })
}
