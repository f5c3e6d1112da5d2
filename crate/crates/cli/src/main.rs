//! `morley`: command-line front end for the Morley construction library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 numerical construction failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morley_core::document::{configuration_to_json, to_json};
use morley_core::verify::{limit_summary, run_sweep, DEFAULT_SEED, LIMIT_A, LIMIT_SEQUENCE};
use morley_core::{
    construct, render_svg, AngleTriple, Error, ForwardDocument, ForwardScene, MorleyConfiguration,
    Point, RenderStyle, Scene, Tolerances, Triangle,
};

#[derive(Debug, Parser)]
#[command(
    name = "morley",
    version,
    about = "Morley's trisector theorem by the inverse construction",
    subcommand_required = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the outer triangle with angles (3a, 3b, 3c) around an equilateral triangle.
    Construct(ConstructArgs),
    /// Trisect the angles of a triangle and report its Morley triangle.
    Forward(ForwardArgs),
    /// Run the seeded verification sweep.
    Verify(VerifyArgs),
    /// Check the a -> 0 limit with b = c.
    Limit(LimitArgs),
    /// Write an SVG figure of a construction.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
struct Units {
    /// Read angles in degrees (default).
    #[arg(long, conflicts_with = "radians")]
    degrees: bool,
    /// Read angles in radians.
    #[arg(long)]
    radians: bool,
}

impl Units {
    fn to_radians(&self, v: f64) -> f64 {
        if self.radians {
            v
        } else {
            v.to_radians()
        }
    }
}

#[derive(Debug, Args)]
struct TripleArgs {
    #[arg(long)]
    a: f64,
    #[arg(long)]
    b: f64,
    #[arg(long)]
    c: f64,
    #[command(flatten)]
    units: Units,
    /// Side length of the inner equilateral triangle.
    #[arg(long, default_value_t = 1.0)]
    side: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ConstructArgs {
    #[command(flatten)]
    triple: TripleArgs,
    /// Write the configuration document here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write an SVG of the construction here.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ForwardArgs {
    /// Vertex coordinates x1 y1 x2 y2 x3 y3.
    #[arg(num_args = 6, value_names = ["X1", "Y1", "X2", "Y2", "X3", "Y3"], required = true)]
    coords: Vec<f64>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Override the angle, length, roundtrip and similarity tolerances.
    #[arg(long)]
    tol: Option<f64>,
    /// Write the verification summary here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct LimitArgs {
    /// Small angle a (default 1e-4 rad); b = c = (60 degrees - a) / 2.
    #[arg(long)]
    a: Option<f64>,
    #[command(flatten)]
    units: Units,
    #[arg(long, default_value_t = 1.0)]
    side: f64,
    /// Tolerance on the perpendicularity and limit-point checks, in radians and side lengths.
    #[arg(long, default_value_t = Tolerances::default().limit)]
    tol: f64,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Figure {
    /// Outer triangle with its six trisectors and Morley triangle.
    #[value(name = "1")]
    Trisectors,
    /// The construction from the inner equilateral triangle.
    #[value(name = "2")]
    Construction,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct RenderArgs {
    #[arg(long, value_enum, default_value = "2")]
    figure: Figure,
    #[command(flatten)]
    triple: TripleArgs,
    /// Output path; stdout when absent.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    no_arcs: bool,
    #[arg(long)]
    no_labels: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

/// Validation errors map to 2, numerical failures to 3.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidAngles(_)
            | Error::NonFinite
            | Error::DegenerateTriangle
            | Error::InvalidStyle(_) => 2,
            _ => 3,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => cmd_construct(&args),
        Command::Forward(args) => cmd_forward(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Limit(args) => cmd_limit(&args),
        Command::Render(args) => cmd_render(&args),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn inner_triangle(side: f64) -> Result<Triangle, Failure> {
    if !(side.is_finite() && side > 0.0) {
        return Err(Failure::usage(format!(
            "side must be finite and positive, got {side}"
        )));
    }
    Ok(Triangle::equilateral(side)?)
}

fn build(args: &TripleArgs) -> Result<MorleyConfiguration, Failure> {
    let u = &args.units;
    let angles = AngleTriple::new(
        u.to_radians(args.a),
        u.to_radians(args.b),
        u.to_radians(args.c),
    )?;
    let inner = inner_triangle(args.side)?;
    Ok(construct(&inner, angles)?)
}

fn fmt_point(p: Point) -> String {
    format!("({}, {})", p.x, p.y)
}

fn print_triangle(t: &Triangle) {
    for (label, p) in t.labels().iter().zip(t.vertices()) {
        println!("{label} = {}", fmt_point(p));
    }
}

fn cmd_construct(args: &ConstructArgs) -> Outcome {
    let cfg = build(&args.triple)?;
    let degrees = cfg
        .outer
        .interior_angles()?
        .map(|a| format!("{:.6}", a.degrees()));
    println!("outer angles (deg): {}", degrees.join(", "));
    if let Some(path) = &args.json {
        write_file(path, &configuration_to_json(&cfg))?;
    }
    if let Some(path) = &args.svg {
        let scene = Scene::Construction(&cfg);
        write_file(path, &render_svg(&scene, &RenderStyle::for_scene(&scene)))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_forward(args: &ForwardArgs) -> Outcome {
    let c = &args.coords;
    let points = [
        Point::new(c[0], c[1]),
        Point::new(c[2], c[3]),
        Point::new(c[4], c[5]),
    ];
    let triangle = Triangle::labeled(points, ["A", "B", "C"])?;
    let scene = ForwardScene::new(triangle)?;
    print_triangle(&scene.morley);
    println!(
        "relative side spread: {:e}",
        scene.morley.relative_side_spread()
    );
    if let Some(path) = &args.json {
        write_file(path, &to_json(&ForwardDocument::new(&scene)))?;
    }
    if let Some(path) = &args.svg {
        let s = Scene::Forward(&scene);
        write_file(path, &render_svg(&s, &RenderStyle::for_scene(&s)))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Outcome {
    if args.samples == 0 {
        return Err(Failure::usage("samples must be at least 1"));
    }
    let tol = match args.tol {
        Some(t) if t.is_finite() && t > 0.0 => Tolerances::uniform(t),
        Some(t) => {
            return Err(Failure::usage(format!(
                "tol must be finite and positive, got {t}"
            )))
        }
        None => Tolerances::default(),
    };
    let summary = run_sweep(args.samples, args.seed, &tol);
    if let Some(path) = &args.json {
        write_file(path, &to_json(&summary))?;
    }
    let failures: Vec<_> = summary.failures().collect();
    println!(
        "samples: {}, seed: {}, checks: {}, failures: {}",
        summary.samples,
        summary.seed,
        summary.checks.len(),
        failures.len()
    );
    for f in failures.iter().take(20) {
        let sample = f.sample.map_or_else(|| "-".to_string(), |s| s.to_string());
        match &f.error {
            Some(e) => println!("FAIL [{sample}] {}: {e}", f.name),
            None => println!(
                "FAIL [{sample}] {}: error {:e} > tol {:e}",
                f.name, f.abs_error, f.tol
            ),
        }
    }
    Ok(if summary.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_limit(args: &LimitArgs) -> Outcome {
    let a = args.a.map_or(LIMIT_A, |v| args.units.to_radians(v));
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(Failure::usage(format!(
            "tol must be finite and positive, got {}",
            args.tol
        )));
    }
    let inner = inner_triangle(args.side)?;
    let summary = limit_summary(a, &LIMIT_SEQUENCE, &inner, args.tol)?;
    if let Some(path) = &args.json {
        write_file(path, &to_json(&summary))?;
    }
    println!("a = {a:e} rad");
    for c in &summary.checks {
        let verdict = if c.pass { "ok" } else { "FAIL" };
        println!(
            "{verdict} {}: measured {:e}, error {:e}",
            c.name, c.measured, c.abs_error
        );
    }
    for (a, d) in summary.sequence.iter().zip(&summary.deviations) {
        println!("deviation at a = {a:e}: {d:e}");
    }
    Ok(if summary.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_render(args: &RenderArgs) -> Outcome {
    let cfg = build(&args.triple)?;
    let forward;
    let scene = match args.figure {
        Figure::Construction => Scene::Construction(&cfg),
        Figure::Trisectors => {
            forward = ForwardScene::new(cfg.outer.clone())?;
            Scene::Forward(&forward)
        }
    };
    let mut style = RenderStyle::for_scene(&scene);
    style.show_arcs = !args.no_arcs;
    style.show_labels = !args.no_labels;
    let svg = render_svg(&scene, &style);
    match &args.svg {
        Some(path) => write_file(path, &svg)?,
        None => print!("{svg}"),
    }
    Ok(ExitCode::SUCCESS)
}
