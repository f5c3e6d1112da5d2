//! Structured JSON documents for configurations, forward scenes and
//! verification summaries.
//!
//! Floats are written in scientific notation with 17 significant digits,
//! which round-trips every `f64` exactly. Maps are ordered, so identical
//! inputs produce byte-identical documents.

use std::collections::BTreeMap;
use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::{Error, Result};
use crate::forward::ForwardScene;
use crate::geom::{Circle, Point};
use crate::inverse::{chord_line, AngleTriple, ArcPoints, MorleyConfiguration};
use crate::triangle::Triangle;

pub const CONFIGURATION_KIND: &str = "morley-configuration";
pub const FORWARD_KIND: &str = "morley-forward";

/// Pretty JSON with every float printed as `d.dddddddddddddddde±x`.
struct ExactFloats<'a>(PrettyFormatter<'a>);

impl Formatter for ExactFloats<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        write!(w, "{v:.16e}")
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Serializes any value with exact floats.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser =
        serde_json::Serializer::with_formatter(&mut buf, ExactFloats(PrettyFormatter::new()));
    value
        .serialize(&mut ser)
        .expect("document types serialize infallibly");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcRecord {
    /// Outer vertex the arc carries.
    pub vertex: String,
    pub center: Point,
    pub radius: f64,
    /// Chord endpoints, near `I` first.
    pub endpoints: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LineRecord {
    /// Side of the outer triangle carried by the line.
    pub side: String,
    pub through: [String; 2],
}

/// Self-describing form of a [`MorleyConfiguration`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationDocument {
    pub kind: String,
    /// Radians.
    pub angles: AngleTriple,
    pub inner: [String; 3],
    pub outer: [String; 3],
    pub points: BTreeMap<String, Point>,
    pub arcs: Vec<ArcRecord>,
    pub lines: Vec<LineRecord>,
}

fn str_labels(n: &[String; 3]) -> [&str; 3] {
    [n[0].as_str(), n[1].as_str(), n[2].as_str()]
}

const IJ_NAMES: [&str; 6] = ["I_a", "J_a", "I_b", "J_b", "I_c", "J_c"];

impl ConfigurationDocument {
    pub fn from_configuration(cfg: &MorleyConfiguration) -> Self {
        let inner = cfg.inner.labels().map(str::to_owned);
        let outer = cfg.outer.labels().map(str::to_owned);
        let p = cfg.points;
        let ij = [p.i_a, p.j_a, p.i_b, p.j_b, p.i_c, p.j_c];

        let mut points = BTreeMap::new();
        for (name, pt) in inner.iter().zip(cfg.inner.vertices()) {
            points.insert(name.clone(), pt);
        }
        for (name, pt) in outer.iter().zip(cfg.outer.vertices()) {
            points.insert(name.clone(), pt);
        }
        for (name, pt) in IJ_NAMES.iter().zip(ij) {
            points.insert((*name).to_owned(), pt);
        }

        // chord endpoints by inner index: (C', B'), (A', C'), (B', A')
        let ends = [(2, 1), (0, 2), (1, 0)];
        let arcs = (0..3)
            .map(|k| ArcRecord {
                vertex: outer[k].clone(),
                center: cfg.arcs[k].center,
                radius: cfg.arcs[k].radius,
                endpoints: [inner[ends[k].0].clone(), inner[ends[k].1].clone()],
            })
            .collect();

        // (I_a J_b), (I_b J_c), (I_c J_a)
        let lines = (0..3)
            .map(|k| LineRecord {
                side: format!("{}{}", outer[k], outer[(k + 1) % 3]),
                through: [
                    IJ_NAMES[2 * k].to_owned(),
                    IJ_NAMES[(2 * k + 3) % 6].to_owned(),
                ],
            })
            .collect();

        Self {
            kind: CONFIGURATION_KIND.to_owned(),
            angles: cfg.angles,
            inner,
            outer,
            points,
            arcs,
            lines,
        }
    }

    fn point(&self, name: &str) -> Result<Point> {
        self.points
            .get(name)
            .copied()
            .ok_or_else(|| Error::Document(format!("missing point {name:?}")))
    }

    /// Rebuilds the configuration. Lines are re-derived from the stored points
    /// exactly as the construction derives them.
    pub fn to_configuration(&self) -> Result<MorleyConfiguration> {
        if self.kind != CONFIGURATION_KIND {
            return Err(Error::Document(format!("unexpected kind {:?}", self.kind)));
        }
        let inner_pts = [
            self.point(&self.inner[0])?,
            self.point(&self.inner[1])?,
            self.point(&self.inner[2])?,
        ];
        let outer_pts = [
            self.point(&self.outer[0])?,
            self.point(&self.outer[1])?,
            self.point(&self.outer[2])?,
        ];
        let inner = Triangle::labeled(inner_pts, str_labels(&self.inner))?;
        let outer = Triangle::labeled(outer_pts, str_labels(&self.outer))?;
        // validate the triple again
        let angles = AngleTriple::new(self.angles.a(), self.angles.b(), self.angles.c())?;

        if self.arcs.len() != 3 {
            return Err(Error::Document(format!(
                "expected 3 arcs, found {}",
                self.arcs.len()
            )));
        }
        let mut arcs = [Circle {
            center: Point::ORIGIN,
            radius: 1.0,
        }; 3];
        for (slot, rec) in arcs.iter_mut().zip(&self.arcs) {
            *slot = Circle::new(rec.center, rec.radius)?;
        }

        let get = |n: &str| self.point(n);
        let points = ArcPoints {
            i_a: get("I_a")?,
            j_a: get("J_a")?,
            i_b: get("I_b")?,
            j_b: get("J_b")?,
            i_c: get("I_c")?,
            j_c: get("J_c")?,
        };
        let [ap, bp, cp] = inner_pts;
        let lines = [
            chord_line(cp, points.i_a, points.j_b)?,
            chord_line(ap, points.i_b, points.j_c)?,
            chord_line(bp, points.i_c, points.j_a)?,
        ];
        Ok(MorleyConfiguration {
            inner,
            angles,
            arcs,
            points,
            lines,
            outer,
        })
    }
}

pub fn configuration_to_json(cfg: &MorleyConfiguration) -> String {
    to_json(&ConfigurationDocument::from_configuration(cfg))
}

pub fn configuration_from_json(text: &str) -> Result<MorleyConfiguration> {
    from_json::<ConfigurationDocument>(text)?.to_configuration()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForwardDocument {
    pub kind: String,
    pub triangle: Triangle,
    pub morley: Triangle,
    pub side_lengths: [f64; 3],
    /// `(max − min) / max` of the Morley side lengths.
    pub relative_spread: f64,
}

impl ForwardDocument {
    pub fn new(scene: &ForwardScene) -> Self {
        Self {
            kind: FORWARD_KIND.to_owned(),
            triangle: scene.triangle.clone(),
            morley: scene.morley.clone(),
            side_lengths: scene.morley.side_lengths(),
            relative_spread: scene.morley.relative_side_spread(),
        }
    }
}
