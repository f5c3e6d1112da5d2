//! Deterministic SVG figures.
//!
//! Elements are emitted in a fixed order (arcs, lines, triangle edges,
//! points, labels) with coordinates rounded to 9 significant digits, and
//! the y axis is flipped so figures read in mathematical orientation.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::forward::ForwardScene;
use crate::geom::{signed_angle, Line, Point};
use crate::inverse::MorleyConfiguration;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub point_radius: f64,
    pub font_size: f64,
    pub show_arcs: bool,
    pub show_labels: bool,
}

impl RenderStyle {
    pub fn new(stroke_width: f64, point_radius: f64, font_size: f64) -> Result<Self> {
        for v in [stroke_width, point_radius, font_size] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidStyle(v));
            }
        }
        Ok(Self {
            stroke_width,
            point_radius,
            font_size,
            show_arcs: true,
            show_labels: true,
        })
    }

    /// Sizes proportional to the scene's larger extent.
    pub fn for_scene(scene: &Scene<'_>) -> Self {
        let bb = BoundingBox::of(&scene.points());
        let extent = bb.width().max(bb.height()).max(f64::MIN_POSITIVE);
        Self {
            stroke_width: 0.003 * extent,
            point_radius: 0.006 * extent,
            font_size: 0.025 * extent,
            show_arcs: true,
            show_labels: true,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Scene<'a> {
    /// The inverse construction (arcs, construction lines, both triangles).
    Construction(&'a MorleyConfiguration),
    /// A triangle with its trisectors and Morley triangle.
    Forward(&'a ForwardScene),
}

impl Scene<'_> {
    fn labeled_points(&self) -> Vec<(String, Point)> {
        match self {
            Scene::Construction(cfg) => {
                let mut out: Vec<(String, Point)> = Vec::with_capacity(12);
                for t in [&cfg.inner, &cfg.outer] {
                    out.extend(
                        t.labels()
                            .iter()
                            .zip(t.vertices())
                            .map(|(l, p)| ((*l).to_owned(), p)),
                    );
                }
                let p = cfg.points;
                out.extend(
                    [
                        ("I_a", p.i_a),
                        ("J_a", p.j_a),
                        ("I_b", p.i_b),
                        ("J_b", p.j_b),
                        ("I_c", p.i_c),
                        ("J_c", p.j_c),
                    ]
                    .map(|(n, p)| (n.to_owned(), p)),
                );
                out
            }
            Scene::Forward(scene) => {
                let mut out = Vec::with_capacity(6);
                for t in [&scene.triangle, &scene.morley] {
                    out.extend(
                        t.labels()
                            .iter()
                            .zip(t.vertices())
                            .map(|(l, p)| ((*l).to_owned(), p)),
                    );
                }
                out
            }
        }
    }

    /// Every named point drawn in the scene.
    pub fn points(&self) -> Vec<Point> {
        self.labeled_points().into_iter().map(|(_, p)| p).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub min: Point,
    pub max: Point,
}

impl BoundingBox {
    pub fn of(points: &[Point]) -> Self {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        Self { min, max }
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    /// Grows each side by `fraction` of the box extent along that axis.
    pub fn expanded(&self, fraction: f64) -> Self {
        let dx = fraction * self.width();
        let dy = fraction * self.height();
        Self {
            min: Point::new(self.min.x - dx, self.min.y - dy),
            max: Point::new(self.max.x + dx, self.max.y + dy),
        }
    }
}

/// `v` rounded to 9 significant digits, without trailing zeros.
pub fn format_number(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".to_owned();
    }
    let exponent = v.abs().log10().floor() as i32;
    let s = if exponent > 8 {
        let unit = 10f64.powi(exponent - 8);
        format!("{:.0}", (v / unit).round() * unit)
    } else {
        let decimals = (8 - exponent) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    };
    if s == "-0" {
        "0".to_owned()
    } else {
        s
    }
}

struct Canvas {
    out: String,
}

impl Canvas {
    fn xy(p: Point) -> (String, String) {
        (format_number(p.x), format_number(-p.y))
    }

    fn line(&mut self, class: &str, a: Point, b: Point, stroke: f64) {
        let (x1, y1) = Self::xy(a);
        let (x2, y2) = Self::xy(b);
        let _ = writeln!(
            self.out,
            r#"  <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke-width="{}"/>"#,
            format_number(stroke)
        );
    }

    fn polygon(&mut self, class: &str, pts: [Point; 3], stroke: f64) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&p| {
                let (x, y) = Self::xy(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            self.out,
            r#"  <polygon class="{class}" points="{}" stroke-width="{}"/>"#,
            coords.join(" "),
            format_number(stroke)
        );
    }

    fn marker(&mut self, class: &str, name: &str, p: Point, r: f64) {
        let (cx, cy) = Self::xy(p);
        let _ = writeln!(
            self.out,
            r#"  <circle class="{class}" data-name="{}" cx="{cx}" cy="{cy}" r="{}"/>"#,
            escape(name),
            format_number(r)
        );
    }

    fn label(&mut self, name: &str, p: Point, style: &RenderStyle) {
        let offset = 0.8 * style.point_radius;
        let (x, y) = Self::xy(p + Point::new(offset, offset));
        let _ = writeln!(
            self.out,
            r#"  <text class="label" x="{x}" y="{y}" font-size="{}">{}</text>"#,
            format_number(style.font_size),
            escape(name)
        );
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Segment of `line` covering all of `points`.
fn span(line: &Line, points: &[Point]) -> (Point, Point) {
    let params = points.iter().map(|&p| line.project(p));
    let (lo, hi) = params.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), t| {
        (lo.min(t), hi.max(t))
    });
    let d = line.direction();
    (line.p() + d * lo, line.p() + d * hi)
}

const STYLE_BLOCK: &str = "  <style>\n    .arc { fill: none; stroke: #2b6cb0; }\n    .construction { stroke: #718096; stroke-dasharray: 4 2; }\n    .trisector { stroke: #718096; }\n    .edge { fill: none; stroke: #1a202c; }\n    .morley { fill: #f6e05e; fill-opacity: 0.5; stroke: #b7791f; }\n    .ij-point { fill: #2b6cb0; }\n    .vertex { fill: #1a202c; }\n    .label { font-family: serif; fill: #1a202c; }\n  </style>\n";

/// Renders `scene` as an SVG 1.1 document.
pub fn render_svg(scene: &Scene<'_>, style: &RenderStyle) -> String {
    let labeled = scene.labeled_points();
    let points: Vec<Point> = labeled.iter().map(|(_, p)| *p).collect();
    // flip y before measuring so the box matches emitted coordinates
    let flipped: Vec<Point> = points.iter().map(|p| Point::new(p.x, -p.y)).collect();
    let bb = BoundingBox::of(&flipped).expanded(0.05);

    let mut c = Canvas { out: String::new() };
    let _ = writeln!(
        c.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        format_number(bb.min.x),
        format_number(bb.min.y),
        format_number(bb.width()),
        format_number(bb.height())
    );
    c.out.push_str(STYLE_BLOCK);

    let sw = style.stroke_width;
    match scene {
        Scene::Construction(cfg) => {
            if style.show_arcs {
                for (circle, (near_i, near_j)) in cfg.arcs.iter().zip(cfg.arc_endpoints()) {
                    // major arc from near_i to near_j, opposite the minor one
                    let minor_ccw = signed_angle(circle.center, near_i, near_j)
                        .map(|a| a.value() > 0.0)
                        .unwrap_or(true);
                    let sweep = u8::from(minor_ccw);
                    let (x1, y1) = Canvas::xy(near_i);
                    let (x2, y2) = Canvas::xy(near_j);
                    let r = format_number(circle.radius);
                    let _ = writeln!(
                        c.out,
                        r#"  <path class="arc" d="M {x1} {y1} A {r} {r} 0 1 {sweep} {x2} {y2}" stroke-width="{}"/>"#,
                        format_number(sw)
                    );
                }
            }
            let p = cfg.points;
            let on_lines = [
                [p.i_a, p.j_b, cfg.a(), cfg.b()],
                [p.i_b, p.j_c, cfg.b(), cfg.c()],
                [p.i_c, p.j_a, cfg.c(), cfg.a()],
            ];
            for (line, pts) in cfg.lines.iter().zip(on_lines) {
                let (s, e) = span(line, &pts);
                c.line("construction", s, e, sw);
            }
            c.polygon("edge outer", cfg.outer.vertices(), sw);
            c.polygon("edge inner", cfg.inner.vertices(), sw);
            for (name, pt) in &labeled {
                let class = if name.starts_with("I_") || name.starts_with("J_") {
                    "ij-point"
                } else {
                    "vertex"
                };
                c.marker(class, name, *pt, style.point_radius);
            }
        }
        Scene::Forward(scene) => {
            for ((r1, r2), (e1, e2)) in scene.trisectors.iter().zip(scene.trisector_ends()) {
                c.line("trisector", r1.origin(), e1, sw);
                c.line("trisector", r2.origin(), e2, sw);
            }
            c.polygon("edge outer", scene.triangle.vertices(), sw);
            c.polygon("edge morley", scene.morley.vertices(), sw);
            for (name, pt) in &labeled {
                c.marker("vertex", name, *pt, style.point_radius);
            }
        }
    }
    if style.show_labels {
        for (name, pt) in &labeled {
            c.label(name, *pt, style);
        }
    }
    c.out.push_str("</svg>\n");
    c.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inverse::{construct, AngleTriple};
    use crate::triangle::Triangle;

    fn cfg(a: f64, b: f64, c: f64) -> MorleyConfiguration {
        construct(
            &Triangle::equilateral(1.0).unwrap(),
            AngleTriple::from_degrees(a, b, c).unwrap(),
        )
        .unwrap()
    }

    fn view_box(svg: &str) -> [f64; 4] {
        let start = svg.find("viewBox=\"").unwrap() + 9;
        let end = start + svg[start..].find('"').unwrap();
        let v: Vec<f64> = svg[start..end]
            .split(' ')
            .map(|s| s.parse().unwrap())
            .collect();
        [v[0], v[1], v[2], v[3]]
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(-2.5), "-2.5");
        assert_eq!(format_number(std::f64::consts::PI), "3.14159265");
        assert_eq!(format_number(1234.56789012), "1234.56789");
        assert_eq!(format_number(0.000123456789123), "0.000123456789");
        assert_eq!(format_number(-1e-12), "-0.000000000001");
        assert_eq!(format_number(12345678912345.0), "12345678900000");
    }

    #[test]
    fn element_counts() {
        let c = cfg(20.0, 15.0, 25.0);
        let scene = Scene::Construction(&c);
        let svg = render_svg(&scene, &RenderStyle::for_scene(&scene));
        assert_eq!(svg.matches(r#"class="arc""#).count(), 3);
        assert_eq!(svg.matches(r#"class="construction""#).count(), 3);
        assert_eq!(svg.matches(r#"class="ij-point""#).count(), 6);
        assert_eq!(svg.matches(r#"class="vertex""#).count(), 6);
        assert_eq!(svg.matches("<text").count(), 12);
    }

    #[test]
    fn element_order() {
        let c = cfg(20.0, 15.0, 25.0);
        let scene = Scene::Construction(&c);
        let svg = render_svg(&scene, &RenderStyle::for_scene(&scene));
        let pos = |needle: &str| svg.find(needle).unwrap();
        assert!(pos("<path") < pos("<line"));
        assert!(pos("<line") < pos("<polygon"));
        assert!(pos("<polygon") < pos("<circle"));
        assert!(pos("<circle") < pos("<text"));
    }

    #[test]
    fn symmetric_view_box() {
        let c = cfg(20.0, 20.0, 20.0);
        let scene = Scene::Construction(&c);
        let [x, _, w, _] = view_box(&render_svg(&scene, &RenderStyle::for_scene(&scene)));
        // symmetry axis of the default inner triangle is x = 1/2
        assert!((x + w / 2.0 - 0.5).abs() < 1e-8, "{x} {w}");
    }

    #[test]
    fn identical_input_identical_bytes() {
        let c = cfg(12.0, 31.0, 17.0);
        let scene = Scene::Construction(&c);
        let style = RenderStyle::for_scene(&scene);
        assert_eq!(render_svg(&scene, &style), render_svg(&scene, &style));
    }

    #[test]
    fn forward_scene_has_six_trisectors() {
        let t = Triangle::labeled(
            [Point::new(0., 0.), Point::new(4., 0.), Point::new(0., 3.)],
            ["A", "B", "C"],
        )
        .unwrap();
        let fs = ForwardScene::new(t).unwrap();
        let scene = Scene::Forward(&fs);
        let svg = render_svg(&scene, &RenderStyle::for_scene(&scene));
        assert_eq!(svg.matches(r#"class="trisector""#).count(), 6);
        assert_eq!(svg.matches(r#"class="edge morley""#).count(), 1);
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn toggles() {
        let c = cfg(20.0, 15.0, 25.0);
        let scene = Scene::Construction(&c);
        let mut style = RenderStyle::new(0.01, 0.02, 0.1).unwrap();
        style.show_arcs = false;
        style.show_labels = false;
        let svg = render_svg(&scene, &style);
        assert!(!svg.contains("<path") && !svg.contains("<text"));
        assert!(RenderStyle::new(0.0, 1.0, 1.0).is_err());
    }
}
