//! Classical Morley triangle: trisect every interior angle and intersect the
//! trisectors adjacent to each side.
//!
//! This path shares only the kernel primitives with [`crate::inverse`], so the
//! two can be checked against each other.

use crate::error::{Error, Result};
use crate::geom::{angle_at, intersect_lines, orientation, rotate_about, Angle, Line, Point};
use crate::triangle::Triangle;

/// Interior angles below this are treated as degenerate.
pub const MIN_INTERIOR_ANGLE: f64 = 1e-6;

/// Slack on the ray parameter when validating trisector intersections.
const RAY_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    origin: Point,
    direction: Point,
    /// Length of the defining vector; keeps the second point of [`Ray::line`]
    /// at the working scale.
    reach: f64,
}

impl Ray {
    pub fn new(origin: Point, direction: Point) -> Result<Self> {
        let reach = direction.norm();
        let direction = direction.normalized().ok_or(Error::DegenerateRay)?;
        Ok(Self {
            origin,
            direction,
            reach,
        })
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    /// Unit direction.
    pub fn direction(&self) -> Point {
        self.direction
    }

    pub fn line(&self) -> Result<Line> {
        Line::new(self.origin, self.origin + self.direction * self.reach)
    }

    /// Signed distance along the ray to the projection of `p`.
    pub fn parameter(&self, p: Point) -> f64 {
        self.direction.dot(p - self.origin)
    }
}

fn check_non_degenerate(t: &Triangle) -> Result<[Angle; 3]> {
    let angles = t.interior_angles().map_err(|_| Error::DegenerateTriangle)?;
    if angles.iter().any(|a| !(a.value() >= MIN_INTERIOR_ANGLE)) {
        return Err(Error::DegenerateTriangle);
    }
    Ok(angles)
}

/// The two trisectors at vertex `index` (0-based).
///
/// The first ray is adjacent to the side toward the next vertex in label
/// order, the second to the side toward the previous one.
pub fn trisectors(t: &Triangle, index: usize) -> Result<(Ray, Ray)> {
    assert!(index < 3, "vertex index out of range: {index}");
    check_non_degenerate(t)?;
    trisectors_unchecked(t, index)
}

fn trisectors_unchecked(t: &Triangle, index: usize) -> Result<(Ray, Ray)> {
    let v = t.vertex(index);
    let next = t.vertex((index + 1) % 3);
    let prev = t.vertex((index + 2) % 3);
    let theta = angle_at(v, next, prev)?;
    // rotating ray v→next by +sign·θ sweeps the interior onto ray v→prev
    let sign = f64::from(orientation(v, next, prev).sign());
    if sign == 0.0 {
        return Err(Error::DegenerateTriangle);
    }
    let third = theta * (sign / 3.0);
    let toward_next = rotate_about(next, v, third) - v;
    let toward_prev = rotate_about(prev, v, -third) - v;
    Ok((Ray::new(v, toward_next)?, Ray::new(v, toward_prev)?))
}

fn meet(r1: &Ray, r2: &Ray) -> Result<Point> {
    let p = intersect_lines(&r1.line()?, &r2.line()?)?;
    let scale = r1.origin().distance(r2.origin());
    if r1.parameter(p) < -RAY_SLACK * scale || r2.parameter(p) < -RAY_SLACK * scale {
        return Err(Error::TrisectorMiss);
    }
    Ok(p)
}

/// Morley triangle `(A', B', C')` of `t = (A, B, C)`.
///
/// `A'` is where the trisectors of `B` and `C` adjacent to side `BC` meet;
/// `B'` and `C'` follow by circular permutation.
pub fn morley_triangle(t: &Triangle) -> Result<Triangle> {
    check_non_degenerate(t)?;
    let rays = [
        trisectors_unchecked(t, 0)?,
        trisectors_unchecked(t, 1)?,
        trisectors_unchecked(t, 2)?,
    ];
    let ap = meet(&rays[1].0, &rays[2].1)?;
    let bp = meet(&rays[2].0, &rays[0].1)?;
    let cp = meet(&rays[0].0, &rays[1].1)?;
    Triangle::labeled([ap, bp, cp], ["A'", "B'", "C'"])
}

/// A triangle with its six trisectors and its Morley triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct ForwardScene {
    pub triangle: Triangle,
    /// Per vertex: (toward next, toward previous).
    pub trisectors: [(Ray, Ray); 3],
    pub morley: Triangle,
}

impl ForwardScene {
    pub fn new(triangle: Triangle) -> Result<Self> {
        let morley = morley_triangle(&triangle)?;
        let trisectors = [
            trisectors_unchecked(&triangle, 0)?,
            trisectors_unchecked(&triangle, 1)?,
            trisectors_unchecked(&triangle, 2)?,
        ];
        Ok(Self {
            triangle,
            trisectors,
            morley,
        })
    }

    /// Morley vertex reached by each trisector, in the order of `trisectors`.
    pub fn trisector_ends(&self) -> [(Point, Point); 3] {
        let [ap, bp, cp] = self.morley.vertices();
        [(cp, bp), (ap, cp), (bp, ap)]
    }
}
