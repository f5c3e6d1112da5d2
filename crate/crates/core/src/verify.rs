//! Numerical certification of the construction.
//!
//! Each identity becomes a named [`CheckReport`] comparing a measured value
//! with its closed-form expectation. Failures are recorded, never raised.
//! A sweep draws its inputs from a seeded ChaCha stream up front, so a
//! summary is a pure function of `(samples, seed, tolerances)`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::forward::morley_triangle;
use crate::geom::{
    angle_at, chord_arc_circle, orientation, polygon_interior_angles, rotate_about, signed_angle,
    Angle, Point,
};
use crate::inverse::{construct, AngleTriple, MorleyConfiguration};
use crate::triangle::Triangle;

pub const DEFAULT_SEED: u64 = 42;
/// Smallest angle component drawn by the simplex sampler (1°).
pub const SAMPLE_MIN_ANGLE: f64 = PI / 180.0;
/// Smallest interior angle of random forward-oracle triangles (3°).
pub const SAMPLE_MIN_INTERIOR: f64 = 3.0 * PI / 180.0;
/// Third-angle used for the default limit check.
pub const LIMIT_A: f64 = 1e-4;
/// Sequence over which the limit deviation must shrink.
pub const LIMIT_SEQUENCE: [f64; 3] = [1e-3, 1e-4, 1e-5];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Angle identities, radians.
    pub angle: f64,
    /// Length ratios, relative.
    pub length: f64,
    /// Roundtrip vertex error, relative to the inner side.
    pub roundtrip: f64,
    /// Similarity commutation error, relative to scale.
    pub similarity: f64,
    /// Perpendicular limit at [`LIMIT_A`], radians (distances: relative to side).
    pub limit: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            angle: 1e-9,
            length: 1e-9,
            roundtrip: 1e-9,
            similarity: 1e-9,
            limit: 1e-3,
        }
    }
}

impl Tolerances {
    /// Replaces every tolerance except the limit one.
    pub fn uniform(tol: f64) -> Self {
        Self {
            angle: tol,
            length: tol,
            roundtrip: tol,
            similarity: tol,
            ..Self::default()
        }
    }
}

/// Non-finite values are written as `null` and read back as NaN.
mod finite_or_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// Sweep sample index; `None` for sample-independent checks.
    pub sample: Option<usize>,
    #[serde(with = "finite_or_null")]
    pub measured: f64,
    pub expected: f64,
    #[serde(with = "finite_or_null")]
    pub abs_error: f64,
    pub tol: f64,
    pub pass: bool,
    /// Set when the identity is checked as a directed angle because its
    /// expected value is non-positive.
    #[serde(default)]
    pub signed_mode: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, measured: f64, expected: f64, tol: f64) -> Self {
        let abs_error = (measured - expected).abs();
        Self {
            name: name.into(),
            sample: None,
            measured,
            expected,
            abs_error,
            tol,
            // NaN compares false
            pass: abs_error <= tol,
            signed_mode: false,
            error: None,
        }
    }

    /// A check that could not be evaluated.
    pub fn failed(name: impl Into<String>, err: &crate::Error) -> Self {
        Self {
            error: Some(err.to_string()),
            ..Self::new(name, f64::NAN, 0.0, 0.0)
        }
    }

    fn signed(mut self, on: bool) -> Self {
        self.signed_mode = on;
        self
    }

    fn at(mut self, sample: usize) -> Self {
        self.sample = Some(sample);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub checks: Vec<CheckReport>,
    pub seed: u64,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub all_pass: bool,
}

impl VerificationSummary {
    pub fn new(
        checks: Vec<CheckReport>,
        seed: u64,
        samples: usize,
        tolerances: Tolerances,
    ) -> Self {
        let all_pass = checks.iter().all(|c| c.pass);
        Self {
            checks,
            seed,
            samples,
            tolerances,
            all_pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Largest error among checks whose name starts with `prefix`.
    pub fn max_error(&self, prefix: &str) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.name.starts_with(prefix))
            .map(|c| c.abs_error)
            .fold(0.0, f64::max)
    }
}

/// Labels and points of one vertex's view of the configuration, indexed
/// cyclically so that index `k` is the vertex under study.
struct Labeled<'a> {
    names: [&'a str; 3],
    points: [Point; 3],
}

impl Labeled<'_> {
    fn get(&self, k: usize) -> (&str, Point) {
        (self.names[k % 3], self.points[k % 3])
    }
}

const THIRD_NAMES: [&str; 3] = ["a", "b", "c"];

/// Angle-chase identities at every vertex of the outer triangle.
///
/// At `A` these are `∠I_cB'J_a = π/3 − 2b` (as a directed angle folded to
/// the inner orientation), `∠AJ_aB' = 2π/3 − b`, `∠AI_aC' = 2π/3 − c`, the
/// pentagon `A I_a C' B' J_a` summing to `3π`, and `∠I_aAJ_a = 3a`;
/// `B` and `C` follow by circular permutation. The trisection of each outer
/// angle through the inner vertices and the outer angles `3a, 3b, 3c` are
/// reported alongside.
pub fn check_angle_identities(cfg: &MorleyConfiguration, tol: f64) -> Vec<CheckReport> {
    let outer = Labeled {
        names: ["A", "B", "C"],
        points: cfg.outer.vertices(),
    };
    let inner = Labeled {
        names: ["A'", "B'", "C'"],
        points: cfg.inner.vertices(),
    };
    let p = &cfg.points;
    let is = Labeled {
        names: ["I_a", "I_b", "I_c"],
        points: [p.i_a, p.i_b, p.i_c],
    };
    let js = Labeled {
        names: ["J_a", "J_b", "J_c"],
        points: [p.j_a, p.j_b, p.j_c],
    };
    let thirds = cfg.angles.as_array();
    let winding = f64::from(cfg.inner.orientation().sign());

    let measure =
        |name: String, v: Point, x: Point, y: Point, expected: f64| match angle_at(v, x, y) {
            Ok(a) => CheckReport::new(name, a.value(), expected, tol),
            Err(e) => CheckReport::failed(name, &e),
        };

    let mut out = Vec::with_capacity(3 * 11);
    for k in 0..3 {
        let (x, vx) = outer.get(k);
        let (_, vy) = outer.get(k + 1);
        let (_, vz) = outer.get(k + 2);
        let (yp, pyp) = inner.get(k + 1);
        let (zp, pzp) = inner.get(k + 2);
        let (ik, pik) = is.get(k);
        let (jk, pjk) = js.get(k);
        let (iz, piz) = is.get(k + 2);
        let t = |o: usize| thirds[(k + o) % 3];
        let tn = |o: usize| THIRD_NAMES[(k + o) % 3];

        let apex_name = format!("angle({iz},{yp},{jk})=pi/3-2{}", tn(1));
        let apex_expected = PI / 3.0 - 2.0 * t(1);
        let apex = match signed_angle(pyp, piz, pjk) {
            Ok(a) => CheckReport::new(apex_name, winding * a.value(), apex_expected, tol),
            Err(e) => CheckReport::failed(apex_name, &e),
        };
        out.push(apex.signed(apex_expected <= 0.0));

        out.push(measure(
            format!("angle({x},{jk},{yp})=2pi/3-{}", tn(1)),
            pjk,
            vx,
            pyp,
            2.0 * PI / 3.0 - t(1),
        ));
        out.push(measure(
            format!("angle({x},{ik},{zp})=2pi/3-{}", tn(2)),
            pik,
            vx,
            pzp,
            2.0 * PI / 3.0 - t(2),
        ));

        let pentagon_name = format!("pentagon({x},{ik},{zp},{yp},{jk})=3pi");
        out.push(match polygon_interior_angles(&[vx, pik, pzp, pyp, pjk]) {
            Ok(angles) => {
                let sum: f64 = angles.iter().map(|a| a.value()).sum();
                CheckReport::new(pentagon_name, sum, 3.0 * PI, tol)
            }
            Err(e) => CheckReport::failed(pentagon_name, &e),
        });

        out.push(measure(
            format!("angle({ik},{x},{jk})=3{}", tn(0)),
            vx,
            pik,
            pjk,
            3.0 * t(0),
        ));

        let (y, _) = outer.get(k + 1);
        let (z, _) = outer.get(k + 2);
        out.push(measure(
            format!("angle({y},{x},{zp})={}", tn(0)),
            vx,
            vy,
            pzp,
            t(0),
        ));
        out.push(measure(
            format!("angle({zp},{x},{yp})={}", tn(0)),
            vx,
            pzp,
            pyp,
            t(0),
        ));
        out.push(measure(
            format!("angle({yp},{x},{z})={}", tn(0)),
            vx,
            pyp,
            vz,
            t(0),
        ));
        out.push(measure(
            format!("interior({x})=3{}", tn(0)),
            vx,
            vy,
            vz,
            3.0 * t(0),
        ));
    }
    out
}

/// Equal chords from each inner vertex to its two neighbouring arc points,
/// e.g. `|B'I_c| = |B'J_a|`, reported as a ratio against 1.
pub fn check_isosceles_arcs(cfg: &MorleyConfiguration, tol: f64) -> Vec<CheckReport> {
    let p = &cfg.points;
    let [ap, bp, cp] = cfg.inner.vertices();
    [
        ("|B'I_c|/|B'J_a|=1", bp, p.i_c, p.j_a),
        ("|C'I_a|/|C'J_b|=1", cp, p.i_a, p.j_b),
        ("|A'I_b|/|A'J_c|=1", ap, p.i_b, p.j_c),
    ]
    .into_iter()
    .map(|(name, v, i, j)| CheckReport::new(name, v.distance(i) / v.distance(j), 1.0, tol))
    .collect()
}

/// Reports from the `a → 0` limit with `b = c`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    /// Angle between `(I_a J_b)` and `(C'B')`, expected `π/2`.
    pub perpendicular: CheckReport,
    /// `|I_a − S| / side` with `S = 2C' − B'`.
    pub i_a_to_s: CheckReport,
    /// `|J_b − S| / side`.
    pub j_b_to_s: CheckReport,
}

impl LimitReport {
    pub fn into_checks(self) -> [CheckReport; 3] {
        [self.perpendicular, self.i_a_to_s, self.j_b_to_s]
    }
}

pub fn limit_configuration(a_small: f64, inner: &Triangle) -> Result<MorleyConfiguration> {
    let b = (PI / 3.0 - a_small) / 2.0;
    construct(inner, AngleTriple::new(a_small, b, PI / 3.0 - a_small - b)?)
}

/// Measures how close the construction is to its `a → 0` limit, where
/// `I_a` and `J_b` approach the reflection `S` of `B'` through `C'` and the
/// line `(I_a J_b)` turns perpendicular to `(C'B')`.
pub fn check_limit_perpendicular(a_small: f64, inner: &Triangle, tol: f64) -> Result<LimitReport> {
    let cfg = limit_configuration(a_small, inner)?;
    let (bp, cp) = (cfg.b_prime(), cfg.c_prime());
    let side = bp.distance(cp);
    let s = cp * 2.0 - bp;
    let p = cfg.points;
    let line_angle = angle_at(Point::ORIGIN, p.j_b - p.i_a, bp - cp)?;
    Ok(LimitReport {
        perpendicular: CheckReport::new(
            "limit:angle((I_aJ_b),(C'B'))=pi/2",
            line_angle.value(),
            PI / 2.0,
            tol,
        ),
        i_a_to_s: CheckReport::new("limit:|I_a-S|/side=0", p.i_a.distance(s) / side, 0.0, tol),
        j_b_to_s: CheckReport::new("limit:|J_b-S|/side=0", p.j_b.distance(s) / side, 0.0, tol),
    })
}

/// Deviation from perpendicular at each `a` of `sequence`, and a check that
/// it strictly decreases along the sequence.
pub fn check_limit_convergence(
    sequence: &[f64],
    inner: &Triangle,
) -> Result<(Vec<f64>, CheckReport)> {
    let deviations = sequence
        .iter()
        .map(|&a| {
            Ok(check_limit_perpendicular(a, inner, f64::INFINITY)?
                .perpendicular
                .abs_error)
        })
        .collect::<Result<Vec<_>>>()?;
    let increases = deviations.windows(2).filter(|w| !(w[1] < w[0])).count();
    let report = CheckReport::new(
        "limit:deviation_strictly_decreasing",
        increases as f64,
        0.0,
        0.0,
    );
    Ok((deviations, report))
}

/// Limit checks at one `a_small` plus the convergence sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitSummary {
    pub a_small: f64,
    pub sequence: Vec<f64>,
    pub deviations: Vec<f64>,
    pub checks: Vec<CheckReport>,
    pub all_pass: bool,
}

pub fn limit_summary(
    a_small: f64,
    sequence: &[f64],
    inner: &Triangle,
    tol: f64,
) -> Result<LimitSummary> {
    let mut checks = check_limit_perpendicular(a_small, inner, tol)?
        .into_checks()
        .to_vec();
    let (deviations, monotone) = check_limit_convergence(sequence, inner)?;
    checks.push(monotone);
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(LimitSummary {
        a_small,
        sequence: sequence.to_vec(),
        deviations,
        checks,
        all_pass,
    })
}

/// Max vertex distance between `morley_triangle(construct(inner, angles).outer)`
/// and `inner`, relative to the inner side.
pub fn check_roundtrip(inner: &Triangle, angles: AngleTriple, tol: f64) -> Result<CheckReport> {
    let cfg = construct(inner, angles)?;
    let back = morley_triangle(&cfg.outer)?;
    let side = inner.side_lengths()[0];
    Ok(CheckReport::new(
        "roundtrip",
        back.max_vertex_distance(inner) / side,
        0.0,
        tol,
    ))
}

/// Orientation-preserving similarity `p ↦ k·R(θ)·p + t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Similarity {
    pub rotation: f64,
    pub scale: f64,
    pub translation: Point,
}

impl Similarity {
    pub const IDENTITY: Similarity = Similarity {
        rotation: 0.0,
        scale: 1.0,
        translation: Point::ORIGIN,
    };

    pub fn apply(&self, p: Point) -> Point {
        let (s, c) = self.rotation.sin_cos();
        Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * self.scale + self.translation
    }
}

/// Max vertex distance between `morley_triangle(s(t))` and
/// `s(morley_triangle(t))`, relative to the scale of `s(t)`.
pub fn check_similarity_invariance(
    t: &Triangle,
    sim: &Similarity,
    tol: f64,
) -> Result<CheckReport> {
    let moved = t.map(|p| sim.apply(p))?;
    let lhs = morley_triangle(&moved)?;
    let rhs = morley_triangle(t)?.map(|p| sim.apply(p))?;
    Ok(CheckReport::new(
        "similarity",
        lhs.max_vertex_distance(&rhs) / moved.scale(),
        0.0,
        tol,
    ))
}

/// Relative side spread of the Morley triangle of `t`.
pub fn check_forward_equilateral(t: &Triangle, tol: f64) -> Result<CheckReport> {
    let m = morley_triangle(t)?;
    Ok(CheckReport::new(
        "forward_equilateral",
        m.relative_side_spread(),
        0.0,
        tol,
    ))
}

/// Draws one angle triple uniformly from the simplex with every component
/// at least [`SAMPLE_MIN_ANGLE`].
pub fn sample_angle_triple<R: Rng>(rng: &mut R) -> AngleTriple {
    let m = SAMPLE_MIN_ANGLE;
    let hi = PI / 3.0 - 2.0 * m;
    loop {
        let a = rng.gen_range(m..hi);
        let b = rng.gen_range(m..hi);
        if a + b <= PI / 3.0 - m {
            if let Ok(t) = AngleTriple::new(a, b, PI / 3.0 - a - b) {
                return t;
            }
        }
    }
}

pub fn sample_angle_triples(n: usize, seed: u64) -> Vec<AngleTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sample_angle_triple(&mut rng)).collect()
}

/// Triangle with vertices uniform in `[-10, 10]²` and every interior angle at
/// least [`SAMPLE_MIN_INTERIOR`].
pub fn sample_triangle<R: Rng>(rng: &mut R) -> Triangle {
    loop {
        let mut pt = || Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let Ok(t) = Triangle::labeled([pt(), pt(), pt()], ["A", "B", "C"]) else {
            continue;
        };
        if let Ok(angles) = t.interior_angles() {
            if angles.iter().all(|a| a.value() >= SAMPLE_MIN_INTERIOR) {
                return t;
            }
        }
    }
}

/// Rotation in `[-π, π)`, scale in `[0.1, 10]`, translation in `[-10, 10]²`.
pub fn sample_similarity<R: Rng>(rng: &mut R) -> Similarity {
    Similarity {
        rotation: rng.gen_range(-PI..PI),
        scale: rng.gen_range(0.1..=10.0),
        translation: Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
    }
}

/// One random instance for the chord-circle kernel checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordInstance {
    pub p: Point,
    pub q: Point,
    pub half_central: f64,
    pub far: Point,
}

/// Points uniform in `[-10, 10]²` and half central angle uniform in
/// `[1e-3, π/2 − 1e-3]`, rejecting short chords and far points within
/// `1e-3` relative of the chord line.
pub fn sample_chord_instance<R: Rng>(rng: &mut R) -> ChordInstance {
    loop {
        let mut pt = || Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let (p, q, far) = (pt(), pt(), pt());
        let half_central = rng.gen_range(1e-3..PI / 2.0 - 1e-3);
        let scale = crate::geom::scale_of(&[p, q, far]);
        let chord = q - p;
        if chord.norm() < 1e-3 * scale || chord.cross(far - p).abs() < 1e-3 * chord.norm() * scale {
            continue;
        }
        return ChordInstance {
            p,
            q,
            half_central,
            far,
        };
    }
}

/// Fractions of the major arc, measured from `p`, where the inscribed angle is probed.
const ARC_PROBES: [f64; 3] = [0.1, 0.5, 0.9];

/// Center, radius, side selection and inscribed-angle checks for
/// [`chord_arc_circle`] on one instance.
pub fn check_chord_instance(inst: &ChordInstance, tol: f64) -> Result<Vec<CheckReport>> {
    let ChordInstance {
        p,
        q,
        half_central: h,
        far,
    } = *inst;
    let circle = chord_arc_circle(p, q, Angle::radians(h), far)?;
    let o = circle.center;
    let on_circle = circle
        .relative_deviation(p)
        .abs()
        .max(circle.relative_deviation(q).abs());
    let radius = (circle.radius * 2.0 * h.sin() / p.distance(q) - 1.0).abs();
    let central = angle_at(o, p, q)?.value();
    let opposite = orientation(p, q, o) == orientation(p, q, far).reversed();
    // σ: sense of the minor arc from p to q; the major arc leaves p the other way
    let sigma = signed_angle(o, p, q)?.value().signum();
    let mut major = 0.0f64;
    let mut minor = 0.0f64;
    for t in ARC_PROBES {
        let w = rotate_about(p, o, Angle::radians(-sigma * t * (2.0 * PI - 2.0 * h)));
        major = major.max((angle_at(w, p, q)?.value() - h).abs());
        let v = rotate_about(p, o, Angle::radians(sigma * t * 2.0 * h));
        minor = minor.max((angle_at(v, p, q)?.value() - (PI - h)).abs());
    }
    Ok(vec![
        CheckReport::new("chord:|OP|/R=|OQ|/R=1", on_circle, 0.0, tol),
        CheckReport::new("chord:R*2sin(h)/|PQ|=1", radius, 0.0, tol),
        CheckReport::new("chord:angle(P,O,Q)=2h", central, 2.0 * h, tol),
        CheckReport::new(
            "chord:center_opposite_far",
            if opposite { 0.0 } else { 1.0 },
            0.0,
            0.0,
        ),
        CheckReport::new("chord:inscribed_major=h", major, 0.0, tol),
        CheckReport::new("chord:inscribed_minor=pi-h", minor, 0.0, tol),
    ])
}

/// Kernel checks over `n` seeded chord instances.
pub fn run_chord_suite(n: usize, seed: u64, tol: f64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .flat_map(|i| {
            let inst = sample_chord_instance(&mut rng);
            match check_chord_instance(&inst, tol) {
                Ok(checks) => checks,
                Err(e) => vec![CheckReport::failed("chord", &e)],
            }
            .into_iter()
            .map(move |c| c.at(i))
        })
        .collect()
}

/// Inputs for one sweep sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleInput {
    pub angles: AngleTriple,
    pub triangle: Triangle,
    pub similarity: Similarity,
}

pub fn sample_inputs(n: usize, seed: u64) -> Vec<SampleInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| SampleInput {
            angles: sample_angle_triple(&mut rng),
            triangle: sample_triangle(&mut rng),
            similarity: sample_similarity(&mut rng),
        })
        .collect()
}

/// Every per-sample check for one input.
pub fn check_sample(inner: &Triangle, input: &SampleInput, tol: &Tolerances) -> Vec<CheckReport> {
    let mut out = Vec::new();
    match construct(inner, input.angles) {
        Ok(cfg) => {
            out.extend(check_angle_identities(&cfg, tol.angle));
            out.extend(check_isosceles_arcs(&cfg, tol.length));
            let side = inner.side_lengths()[0];
            out.push(match morley_triangle(&cfg.outer) {
                Ok(back) => CheckReport::new(
                    "roundtrip",
                    back.max_vertex_distance(inner) / side,
                    0.0,
                    tol.roundtrip,
                ),
                Err(e) => CheckReport::failed("roundtrip", &e),
            });
        }
        Err(e) => out.push(CheckReport::failed("construct", &e)),
    }
    out.push(
        check_forward_equilateral(&input.triangle, tol.length)
            .unwrap_or_else(|e| CheckReport::failed("forward_equilateral", &e)),
    );
    out.push(
        check_similarity_invariance(&input.triangle, &input.similarity, tol.similarity)
            .unwrap_or_else(|e| CheckReport::failed("similarity", &e)),
    );
    out
}

/// Sample-independent limit checks on `inner`.
pub fn check_limits(inner: &Triangle, tol: &Tolerances) -> Vec<CheckReport> {
    let mut out = Vec::new();
    match check_limit_perpendicular(LIMIT_A, inner, tol.limit) {
        Ok(r) => out.extend(r.into_checks()),
        Err(e) => out.push(CheckReport::failed("limit", &e)),
    }
    match check_limit_convergence(&LIMIT_SEQUENCE, inner) {
        Ok((_, r)) => out.push(r),
        Err(e) => out.push(CheckReport::failed(
            "limit:deviation_strictly_decreasing",
            &e,
        )),
    }
    out
}

/// Full battery over `samples` seeded inputs against the unit equilateral
/// inner triangle, followed by the limit checks.
pub fn run_sweep(samples: usize, seed: u64, tol: &Tolerances) -> VerificationSummary {
    let inner = Triangle::equilateral(1.0).expect("unit equilateral triangle is valid");
    let mut checks: Vec<CheckReport> = sample_inputs(samples, seed)
        .iter()
        .enumerate()
        .flat_map(|(i, input)| {
            check_sample(&inner, input, tol)
                .into_iter()
                .map(move |c| c.at(i))
        })
        .collect();
    checks.extend(check_limits(&inner, tol));
    VerificationSummary::new(checks, seed, samples, *tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn cfg(a: f64, b: f64, c: f64) -> MorleyConfiguration {
        construct(
            &Triangle::equilateral(1.0).unwrap(),
            AngleTriple::from_degrees(a, b, c).unwrap(),
        )
        .unwrap()
    }

    fn find<'a>(checks: &'a [CheckReport], name: &str) -> &'a CheckReport {
        checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("missing {name}"))
    }

    #[test]
    fn chord_suite_passes() {
        let checks = run_chord_suite(500, 3, 1e-10);
        assert_eq!(checks.len(), 500 * 6);
        assert!(
            checks.iter().all(|c| c.pass),
            "{:?}",
            checks.iter().find(|c| !c.pass)
        );
    }

    #[test]
    fn chord_instance_reports_wrong_side() {
        let inst = ChordInstance {
            p: Point::new(0.0, 0.0),
            q: Point::new(1.0, 0.0),
            half_central: PI / 6.0,
            far: Point::new(0.5, 1.0),
        };
        let checks = check_chord_instance(&inst, 1e-12).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
    }

    #[test]
    fn limit_summary_passes_at_default() {
        let s = limit_summary(
            LIMIT_A,
            &LIMIT_SEQUENCE,
            &Triangle::equilateral(1.0).unwrap(),
            1e-3,
        )
        .unwrap();
        assert!(s.all_pass, "{s:?}");
        assert_eq!(s.checks.len(), 4);
        assert_eq!(s.deviations.len(), 3);
    }

    #[test]
    fn report_pass_rule() {
        assert!(CheckReport::new("x", 1.0, 1.0 + 1e-10, 1e-9).pass);
        assert!(!CheckReport::new("x", 1.0, 1.1, 1e-9).pass);
        assert!(!CheckReport::new("x", f64::NAN, 0.0, 1.0).pass);
    }

    #[test]
    fn identities_at_20_15_25() {
        let checks = check_angle_identities(&cfg(20.0, 15.0, 25.0), 1e-9);
        assert_abs_diff_eq!(
            find(&checks, "angle(I_c,B',J_a)=pi/3-2b")
                .measured
                .to_degrees(),
            30.0,
            epsilon = 1e-7
        );
        assert_abs_diff_eq!(
            find(&checks, "angle(A,J_a,B')=2pi/3-b")
                .measured
                .to_degrees(),
            105.0,
            epsilon = 1e-7
        );
        assert_abs_diff_eq!(
            find(&checks, "angle(I_a,A,J_a)=3a").measured.to_degrees(),
            60.0,
            epsilon = 1e-7
        );
        assert_abs_diff_eq!(
            find(&checks, "angle(A,I_a,C')=2pi/3-c")
                .measured
                .to_degrees(),
            95.0,
            epsilon = 1e-7
        );
        assert!(
            checks.iter().all(|c| c.pass && !c.signed_mode),
            "{checks:#?}"
        );
        assert_eq!(checks.len(), 27);
    }

    #[test]
    fn symmetric_identities() {
        let checks = check_angle_identities(&cfg(20.0, 20.0, 20.0), 1e-9);
        for name in [
            "angle(I_a,A,J_a)=3a",
            "angle(I_b,B,J_b)=3b",
            "angle(I_c,C,J_c)=3c",
        ] {
            assert_abs_diff_eq!(find(&checks, name).measured, PI / 3.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn signed_mode_when_b_exceeds_sixth() {
        let checks = check_angle_identities(&cfg(10.0, 40.0, 10.0), 1e-9);
        let apex = find(&checks, "angle(I_c,B',J_a)=pi/3-2b");
        assert!(apex.signed_mode && apex.pass);
        assert_abs_diff_eq!(apex.measured.to_degrees(), -20.0, epsilon = 1e-7);
        assert!(!find(&checks, "angle(I_a,C',J_b)=pi/3-2c").signed_mode);
    }

    #[test]
    fn isosceles_reports() {
        for c in check_isosceles_arcs(&cfg(20.0, 15.0, 25.0), 1e-12) {
            assert!(c.pass, "{c:?}");
        }
        let sym = cfg(20.0, 20.0, 20.0);
        let p = sym.points;
        let [ap, bp, cp] = sym.inner.vertices();
        let lens = [
            bp.distance(p.i_c),
            bp.distance(p.j_a),
            cp.distance(p.i_a),
            cp.distance(p.j_b),
            ap.distance(p.i_b),
            ap.distance(p.j_c),
        ];
        for l in lens {
            assert_abs_diff_eq!(l, lens[0], epsilon = 1e-12);
        }
        // swapping b and c mirrors the figure; the reports keep passing
        let mirrored = check_isosceles_arcs(&cfg(20.0, 25.0, 15.0), 1e-12);
        assert!(mirrored.iter().all(|c| c.pass));
    }

    #[test]
    fn limit_at_small_a() {
        let inner = Triangle::equilateral(1.0).unwrap();
        let r = check_limit_perpendicular(1e-4, &inner, 1e-3).unwrap();
        assert!(r.perpendicular.pass && r.i_a_to_s.pass && r.j_b_to_s.pass);
        let (devs, mono) = check_limit_convergence(&LIMIT_SEQUENCE, &inner).unwrap();
        assert!(mono.pass, "{devs:?}");
        // first-order convergence: deviation / a roughly constant
        let ratio: Vec<f64> = devs
            .iter()
            .zip(LIMIT_SEQUENCE)
            .map(|(d, a)| d / a)
            .collect();
        assert!(
            ratio.iter().all(|r| (r - ratio[0]).abs() < 0.01 * ratio[0]),
            "{ratio:?}"
        );
    }

    #[test]
    fn limit_rejects_below_minimum() {
        let inner = Triangle::equilateral(1.0).unwrap();
        assert!(check_limit_perpendicular(1e-7, &inner, 1e-3).is_err());
        assert!(check_limit_perpendicular(1e-6, &inner, 1e-3).is_ok());
    }

    #[test]
    fn similarity_examples() {
        let t =
            Triangle::new([Point::new(0., 0.), Point::new(4., 0.), Point::new(0., 3.)]).unwrap();
        let id = check_similarity_invariance(&t, &Similarity::IDENTITY, 0.0).unwrap();
        assert_eq!(id.measured, 0.0);
        let quarter = Similarity {
            rotation: PI / 2.0,
            ..Similarity::IDENTITY
        };
        assert!(
            check_similarity_invariance(&t, &quarter, 1e-12)
                .unwrap()
                .pass
        );
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let random = sample_triangle(&mut rng);
        let sim = Similarity {
            rotation: 0.7,
            scale: 10.0,
            translation: Point::new(5.0, -3.0),
        };
        assert!(
            check_similarity_invariance(&random, &sim, 1e-9)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn roundtrip_examples() {
        let e = Triangle::equilateral(1.0).unwrap();
        assert!(
            check_roundtrip(
                &e,
                AngleTriple::new(PI / 9.0, PI / 9.0, PI / 9.0).unwrap(),
                1e-9
            )
            .unwrap()
            .pass
        );
        assert!(
            check_roundtrip(
                &e,
                AngleTriple::from_degrees(20.0, 15.0, 25.0).unwrap(),
                1e-9
            )
            .unwrap()
            .pass
        );
    }

    #[test]
    fn sampler_respects_bounds() {
        for t in sample_angle_triples(500, 9) {
            for v in t.as_array() {
                assert!(v >= SAMPLE_MIN_ANGLE);
            }
            assert!((t.a() + t.b() + t.c() - PI / 3.0).abs() <= 1e-12);
        }
        assert_eq!(sample_angle_triples(10, 1), sample_angle_triples(10, 1));
        assert_ne!(sample_angle_triples(10, 1), sample_angle_triples(10, 2));
    }

    #[test]
    fn single_sample_has_each_name_once() {
        let summary = run_sweep(1, 7, &Tolerances::default());
        assert!(
            summary.all_pass,
            "{:#?}",
            summary.failures().collect::<Vec<_>>()
        );
        let mut names: Vec<_> = summary.checks.iter().map(|c| (&c.name, c.sample)).collect();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }
}
