use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{angle_at, orientation, scale_of, Angle, Orientation, Point};

/// Three labeled, non-collinear points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    vertices: [Point; 3],
    labels: [String; 3],
}

impl Triangle {
    pub fn new(vertices: [Point; 3]) -> Result<Self> {
        Self::labeled(vertices, ["V1", "V2", "V3"])
    }

    pub fn labeled(vertices: [Point; 3], labels: [&str; 3]) -> Result<Self> {
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        if orientation(vertices[0], vertices[1], vertices[2]) == Orientation::Collinear {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self {
            vertices,
            labels: labels.map(str::to_owned),
        })
    }

    /// Counter-clockwise equilateral triangle `A'B'C'` with `B'C'` on the
    /// x-axis: `A' = (s/2, s·√3/2)`, `B' = (0, 0)`, `C' = (s, 0)`.
    pub fn equilateral(side: f64) -> Result<Self> {
        Self::labeled(
            [
                Point::new(side / 2.0, side * 3f64.sqrt() / 2.0),
                Point::new(0.0, 0.0),
                Point::new(side, 0.0),
            ],
            ["A'", "B'", "C'"],
        )
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn labels(&self) -> [&str; 3] {
        [&self.labels[0], &self.labels[1], &self.labels[2]]
    }

    pub fn orientation(&self) -> Orientation {
        orientation(self.vertices[0], self.vertices[1], self.vertices[2])
    }

    /// Side `i` joins vertex `i` to vertex `i + 1`.
    pub fn side_lengths(&self) -> [f64; 3] {
        let v = self.vertices;
        [
            v[0].distance(v[1]),
            v[1].distance(v[2]),
            v[2].distance(v[0]),
        ]
    }

    /// `(max − min) / max` over the three side lengths.
    pub fn relative_side_spread(&self) -> f64 {
        let s = self.side_lengths();
        let max = s.iter().cloned().fold(f64::MIN, f64::max);
        let min = s.iter().cloned().fold(f64::MAX, f64::min);
        (max - min) / max
    }

    pub fn interior_angles(&self) -> Result<[Angle; 3]> {
        let v = self.vertices;
        Ok([
            angle_at(v[0], v[1], v[2])?,
            angle_at(v[1], v[2], v[0])?,
            angle_at(v[2], v[0], v[1])?,
        ])
    }

    pub fn scale(&self) -> f64 {
        scale_of(&self.vertices)
    }

    /// Applies `f` to every vertex, keeping labels.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Self> {
        Self::labeled(self.vertices.map(f), self.labels())
    }

    pub fn max_vertex_distance(&self, other: &Triangle) -> f64 {
        (0..3)
            .map(|i| self.vertices[i].distance(other.vertices[i]))
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rejects_collinear() {
        let r = Triangle::new([Point::new(0., 0.), Point::new(1., 0.), Point::new(2., 0.)]);
        assert_eq!(r, Err(Error::DegenerateTriangle));
    }

    #[test]
    fn default_equilateral_layout() {
        let t = Triangle::equilateral(2.0).unwrap();
        assert_eq!(t.orientation(), Orientation::CounterClockwise);
        assert!(t.relative_side_spread() < 1e-15);
        assert_eq!(t.labels(), ["A'", "B'", "C'"]);
        for a in t.interior_angles().unwrap() {
            assert!((a.value() - PI / 3.0).abs() < 1e-15);
        }
    }
}
