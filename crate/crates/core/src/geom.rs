//! Planar Euclidean primitives shared by both constructions.
//!
//! Every tolerance here is relative to the scale of the operation's own
//! inputs (the largest pairwise distance among them), so results do not
//! depend on the unit of length.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative threshold for the parallel-lines test.
pub const EPS_PARALLEL: f64 = 1e-12;
/// Relative threshold for orientation; compared against `scale²`.
pub const EPS_ORIENT: f64 = 1e-12;
/// Relative threshold for vanishing lengths.
pub const EPS_LENGTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self * (1.0 / n))
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Largest pairwise distance among `points`.
pub fn scale_of(points: &[Point]) -> f64 {
    let mut scale = 0.0_f64;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            scale = scale.max(p.distance(*q));
        }
    }
    scale
}

/// An angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);
    pub const PI: Angle = Angle(PI);

    #[inline]
    pub const fn radians(value: f64) -> Self {
        Angle(value)
    }

    pub fn from_degrees(deg: f64) -> Self {
        Angle(deg.to_radians())
    }

    #[inline]
    pub const fn value(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Folds into the signed range `(-π, π]`.
    pub fn normalized_signed(self) -> Angle {
        let mut v = self.0.rem_euclid(2.0 * PI);
        if v > PI {
            v -= 2.0 * PI;
        }
        Angle(v)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(self.0 - rhs.0)
    }
}

impl Mul<f64> for Angle {
    type Output = Angle;
    fn mul(self, k: f64) -> Angle {
        Angle(self.0 * k)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle(-self.0)
    }
}

/// Infinite line through two distinct points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    p: Point,
    q: Point,
}

impl Line {
    pub fn new(p: Point, q: Point) -> Result<Self> {
        if !p.is_finite() || !q.is_finite() {
            return Err(Error::NonFinite);
        }
        if p == q {
            return Err(Error::DegenerateLine);
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> Point {
        self.p
    }

    pub fn q(&self) -> Point {
        self.q
    }

    pub fn direction(&self) -> Point {
        self.q - self.p
    }

    /// Unsigned distance from `r` to the line.
    pub fn distance_to(&self, r: Point) -> f64 {
        let d = self.direction();
        (d.cross(r - self.p) / d.norm()).abs()
    }

    /// Parameter `t` of the orthogonal projection `p + t·(q − p)`.
    pub fn project(&self, r: Point) -> f64 {
        let d = self.direction();
        d.dot(r - self.p) / d.dot(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::NonFinite);
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Self { center, radius })
    }

    /// Signed relative deviation of `p` from the circle.
    pub fn relative_deviation(&self, p: Point) -> f64 {
        (p.distance(self.center) - self.radius) / self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Collinear,
    Clockwise,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::CounterClockwise => 1,
            Orientation::Collinear => 0,
            Orientation::Clockwise => -1,
        }
    }

    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::Clockwise => Orientation::CounterClockwise,
        }
    }
}

/// Unique intersection point of two lines.
pub fn intersect_lines(l1: &Line, l2: &Line) -> Result<Point> {
    let d1 = l1.direction();
    let d2 = l2.direction();
    let denom = d1.cross(d2);
    let bound = d1.norm() * d2.norm();
    if denom.abs() < EPS_PARALLEL * bound {
        return Err(Error::NearParallel {
            relative_cross: denom.abs() / bound,
        });
    }
    let t = (l2.p - l1.p).cross(d2) / denom;
    Ok(l1.p + d1 * t)
}

/// Rotates `p` counter-clockwise by `theta` around `center`.
pub fn rotate_about(p: Point, center: Point, theta: Angle) -> Point {
    let (s, c) = theta.value().sin_cos();
    let v = p - center;
    center + Point::new(c * v.x - s * v.y, s * v.x + c * v.y)
}

pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let cross = (q - p).cross(r - p);
    let scale = scale_of(&[p, q, r]);
    if cross.abs() <= EPS_ORIENT * scale * scale {
        Orientation::Collinear
    } else if cross > 0.0 {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

fn rays(vertex: Point, p: Point, q: Point) -> Result<(Point, Point)> {
    let scale = scale_of(&[vertex, p, q]);
    let u = p - vertex;
    let v = q - vertex;
    let min_len = EPS_LENGTH * scale;
    if !(u.norm() > min_len) || !(v.norm() > min_len) {
        return Err(Error::DegenerateRay);
    }
    Ok((u, v))
}

/// Unsigned angle between rays `vertex→p` and `vertex→q`, in `[0, π]`.
pub fn angle_at(vertex: Point, p: Point, q: Point) -> Result<Angle> {
    let (u, v) = rays(vertex, p, q)?;
    Ok(Angle(u.cross(v).abs().atan2(u.dot(v))))
}

/// Counter-clockwise angle from ray `vertex→p` to ray `vertex→q`, in `(−π, π]`.
pub fn signed_angle(vertex: Point, p: Point, q: Point) -> Result<Angle> {
    let (u, v) = rays(vertex, p, q)?;
    let theta = u.cross(v).atan2(u.dot(v));
    Ok(Angle(if theta <= -PI { PI } else { theta }))
}

/// Circle through `p` and `q` on which the chord `pq` subtends a central
/// angle of `2·half_central`, with its center on the side of line `(p, q)`
/// opposite `far_point`.
///
/// The major arc therefore lies away from `far_point`, and every point on it
/// sees the chord under the inscribed angle `half_central`.
pub fn chord_arc_circle(
    p: Point,
    q: Point,
    half_central: Angle,
    far_point: Point,
) -> Result<Circle> {
    let h = half_central.value();
    if !(h > 0.0 && h < PI / 2.0) {
        return Err(Error::InvalidHalfCentral(h));
    }
    if !p.is_finite() || !q.is_finite() || !far_point.is_finite() {
        return Err(Error::NonFinite);
    }
    let chord = q - p;
    let len = chord.norm();
    if !(len > EPS_LENGTH * scale_of(&[p, q, far_point])) {
        return Err(Error::DegenerateChord);
    }
    let left = chord.perp() * (1.0 / len);
    let normal = match orientation(p, q, far_point) {
        Orientation::Collinear => return Err(Error::FarPointOnLine),
        Orientation::CounterClockwise => -left,
        Orientation::Clockwise => left,
    };
    let (s, c) = h.sin_cos();
    let center = p.midpoint(q) + normal * (0.5 * len * c / s);
    Circle::new(center, len / (2.0 * s))
}

/// Interior angles of a closed polygon, taking the interior side from the
/// polygon's own winding (sign of its shoelace area).
pub fn polygon_interior_angles(vertices: &[Point]) -> Result<Vec<Angle>> {
    let n = vertices.len();
    if n < 3 {
        return Err(Error::DegenerateTriangle);
    }
    let area2: f64 = (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum();
    let winding = if area2 >= 0.0 { 1.0 } else { -1.0 };
    (0..n)
        .map(|i| {
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            // turn of the boundary at `cur`; the interior angle is its supplement
            let heading = cur + (cur - prev);
            let turn = signed_angle(cur, heading, next)?;
            Ok(Angle(PI - winding * turn.value()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const SQRT3: f64 = 1.732_050_807_568_877_2;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn line(a: (f64, f64), b: (f64, f64)) -> Line {
        Line::new(pt(a.0, a.1), pt(b.0, b.1)).unwrap()
    }

    #[test]
    fn intersect_axes() {
        let p = intersect_lines(&line((0., 0.), (1., 0.)), &line((0., 0.), (0., 1.))).unwrap();
        assert_eq!(p, pt(0.0, 0.0));
    }

    #[test]
    fn intersect_parallel_horizontals() {
        let err = intersect_lines(&line((0., 0.), (1., 0.)), &line((0., 1.), (1., 1.)));
        assert!(matches!(err, Err(Error::NearParallel { .. })));
    }

    #[test]
    fn intersect_square_diagonals() {
        let p = intersect_lines(&line((0., 0.), (1., 1.)), &line((1., 0.), (0., 1.))).unwrap();
        assert_abs_diff_eq!(p.x, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p.y, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn line_rejects_coincident_points() {
        assert_eq!(
            Line::new(pt(1., 1.), pt(1., 1.)),
            Err(Error::DegenerateLine)
        );
    }

    #[test]
    fn rotations() {
        let r = rotate_about(pt(1., 0.), Point::ORIGIN, Angle::radians(PI / 2.0));
        assert_abs_diff_eq!(r.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.y, 1.0, epsilon = 1e-15);
        assert_eq!(
            rotate_about(pt(1., 0.), Point::ORIGIN, Angle::ZERO),
            pt(1., 0.)
        );
        let h = rotate_about(pt(2., 0.), pt(1., 0.), Angle::PI);
        assert_abs_diff_eq!(h.x, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(h.y, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(pt(0., 0.), pt(1., 0.), pt(0., 1.)).sign(), 1);
        assert_eq!(orientation(pt(0., 0.), pt(1., 0.), pt(2., 0.)).sign(), 0);
        assert_eq!(orientation(pt(0., 0.), pt(0., 1.), pt(1., 0.)).sign(), -1);
        // collinear up to roundoff at a large scale
        assert_eq!(
            orientation(pt(0., 0.), pt(1e6, 1e6), pt(3e6, 3e6 + 1e-7)),
            Orientation::Collinear
        );
    }

    #[test]
    fn unsigned_angles() {
        let o = Point::ORIGIN;
        assert_abs_diff_eq!(
            angle_at(o, pt(1., 0.), pt(0., 1.)).unwrap().value(),
            PI / 2.0
        );
        assert_eq!(angle_at(o, pt(1., 0.), pt(1., 0.)).unwrap().value(), 0.0);
        let opposite = angle_at(o, pt(1., 0.), pt(-1., 1e-300)).unwrap().value();
        assert_abs_diff_eq!(opposite, PI, epsilon = 1e-15);
    }

    #[test]
    fn degenerate_rays() {
        let o = Point::ORIGIN;
        assert_eq!(angle_at(o, o, pt(1., 0.)), Err(Error::DegenerateRay));
        assert_eq!(signed_angle(o, pt(1., 0.), o), Err(Error::DegenerateRay));
        assert_eq!(
            angle_at(o, pt(1., 0.), pt(1e-13, 0.0)),
            Err(Error::DegenerateRay)
        );
        assert_eq!(angle_at(o, o, o), Err(Error::DegenerateRay));
    }

    #[test]
    fn signed_angles() {
        let o = Point::ORIGIN;
        assert_abs_diff_eq!(
            signed_angle(o, pt(1., 0.), pt(0., 1.)).unwrap().value(),
            PI / 2.0
        );
        assert_abs_diff_eq!(
            signed_angle(o, pt(0., 1.), pt(1., 0.)).unwrap().value(),
            -PI / 2.0
        );
        assert_eq!(
            signed_angle(o, pt(1., 0.), pt(-1., 0.)).unwrap().value(),
            PI
        );
        assert_eq!(
            signed_angle(o, pt(1., 0.), pt(-1., -0.0)).unwrap().value(),
            PI
        );
    }

    #[test]
    fn normalization_range() {
        assert_abs_diff_eq!(
            Angle::radians(3.0 * PI).normalized_signed().value(),
            PI,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            Angle::radians(-PI / 2.0 - 2.0 * PI)
                .normalized_signed()
                .value(),
            -PI / 2.0,
            epsilon = 1e-12
        );
        assert_eq!(Angle::radians(-PI).normalized_signed().value(), PI);
    }

    #[test]
    fn chord_circle_below() {
        let c = chord_arc_circle(
            pt(0., 0.),
            pt(1., 0.),
            Angle::radians(PI / 6.0),
            pt(0.5, 1.0),
        )
        .unwrap();
        assert_abs_diff_eq!(c.center.x, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(c.center.y, -SQRT3 / 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.radius, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn chord_circle_side_flips() {
        let c = chord_arc_circle(
            pt(0., 0.),
            pt(2., 0.),
            Angle::radians(PI / 6.0),
            pt(1.0, -5.0),
        )
        .unwrap();
        assert_abs_diff_eq!(c.center.x, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c.center.y, SQRT3, epsilon = 1e-15);
        assert_abs_diff_eq!(c.radius, 2.0, epsilon = 1e-15);
    }

    #[test]
    fn chord_circle_errors() {
        let h = Angle::radians(PI / 6.0);
        assert_eq!(
            chord_arc_circle(pt(0., 0.), pt(1., 0.), h, pt(0.5, 0.0)),
            Err(Error::FarPointOnLine)
        );
        assert_eq!(
            chord_arc_circle(pt(0., 0.), pt(0., 0.), h, pt(0.5, 1.0)),
            Err(Error::DegenerateChord)
        );
        assert!(matches!(
            chord_arc_circle(
                pt(0., 0.),
                pt(1., 0.),
                Angle::radians(PI / 2.0),
                pt(0.5, 1.0)
            ),
            Err(Error::InvalidHalfCentral(_))
        ));
    }

    #[test]
    fn square_interior_angles_either_winding() {
        let sq = [pt(0., 0.), pt(1., 0.), pt(1., 1.), pt(0., 1.)];
        for a in polygon_interior_angles(&sq).unwrap() {
            assert_abs_diff_eq!(a.value(), PI / 2.0, epsilon = 1e-15);
        }
        let mut rev = sq;
        rev.reverse();
        for a in polygon_interior_angles(&rev).unwrap() {
            assert_abs_diff_eq!(a.value(), PI / 2.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn reflex_interior_angle() {
        // dart: reflex vertex at (1, 0.5)
        let dart = [pt(0., 0.), pt(2., 0.), pt(1., 0.5), pt(1., 2.)];
        let angles = polygon_interior_angles(&dart).unwrap();
        let sum: f64 = angles.iter().map(|a| a.value()).sum();
        assert_abs_diff_eq!(sum, 2.0 * PI, epsilon = 1e-12);
        assert!(angles[2].value() > PI);
    }
}
