//! Command-line front end for `conchoid-core`.

pub mod plot;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use conchoid_core::algebra::{parse_poly, MultiPoly, Vars};
use conchoid_core::classical::{
    conic_focus_split, iterated_conchoid, recognize_complete_with, recognize_proper_with, split_test, CircleSpec,
    RecognitionOptions, RecognitionReport, RecognitionVerdict, SplitVerdict,
};
use conchoid_core::conchoid::{
    conchoidal_transform, degree_genus_predict, elimination_crosscheck, extract_known_components,
    infinity_restriction, membership_value, multiplicity_at, PlaneCurve, ProjPoint, Scene,
};
use conchoid_core::scalar::{parse_rational, promote};
use conchoid_core::{Error, Field, GaussianRational, Rational};

pub use plot::{render_svg, PlotSpec};

/// Exit status for a successful command or a "yes" answer.
pub const EXIT_OK: i32 = 0;
/// A mathematical "no": irreducible, not a focus, not a conchoid.
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "conchoid", version, about = "Exact conchoidal transforms of plane curves")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field.
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Q)]
    pub field: FieldArg,
    /// Accept inhomogeneous equations in x, y and homogenize them.
    #[arg(long, global = true)]
    pub affine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Qi")]
    Qi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Complete,
    Proper,
}

#[derive(Args, Debug)]
pub struct Pair {
    /// Base curve.
    #[arg(long = "B")]
    pub b: String,
    /// Curve to transform.
    #[arg(long = "C")]
    pub c: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Conchoidal transform of C with respect to B and the origin.
    Transform {
        #[command(flatten)]
        pair: Pair,
        /// Print the decomposition into known components.
        #[arg(long)]
        proper: bool,
    },
    /// Does the proper conchoid of C with respect to a circle centred at the
    /// given point split?
    Split {
        #[arg(long = "C")]
        c: String,
        /// Centre as `a,b`.
        #[arg(long, default_value = "0,0")]
        center: String,
    },
    /// Is the point a focus of the conic?
    Focus {
        #[arg(long = "C")]
        c: String,
        #[arg(long, default_value = "0,0")]
        center: String,
    },
    /// Iterated conchoid with respect to a circle centred at the origin.
    Iterate {
        #[arg(long = "C")]
        c: String,
        /// Radius squared.
        #[arg(long, default_value = "1")]
        r2: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Is the curve a conchoid, or a proper conchoid, of another curve?
    Recognize {
        #[arg(long = "D")]
        d: String,
        #[arg(long, value_enum, default_value_t = Mode::Complete)]
        mode: Mode,
        /// Extra probe line through a candidate centre (repeatable).
        #[arg(long)]
        probe: Vec<String>,
        /// Extra radius squared to try (repeatable).
        #[arg(long)]
        r2: Vec<String>,
    },
    /// Degree and genus of the conchoid of smooth curves.
    Genus {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        delta: u32,
        /// Genus of B; defaults to the genus of a smooth curve.
        #[arg(long)]
        g: Option<String>,
        /// Genus of C; defaults to the genus of a smooth curve.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Conchoid by elimination of auxiliary variables, for comparison.
    Eliminate {
        #[command(flatten)]
        pair: Pair,
    },
    /// Draw the real affine part of a curve as SVG.
    Plot {
        /// The equation to draw.
        #[arg(long)]
        curve: String,
        /// `xmin,xmax,ymin,ymax`.
        #[arg(long, default_value = "-2,2,-2,2", allow_hyphen_values = true)]
        window: String,
        #[arg(long, default_value_t = 128)]
        grid: usize,
        /// Write to a file instead of standard output.
        #[arg(long, short)]
        output: Option<std::path::PathBuf>,
    },
    /// Check the structural properties of the transform for B and C.
    Verify {
        #[command(flatten)]
        pair: Pair,
    },
}

/// Errors carrying an exit status.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DecompositionMismatch(_) | Error::NotAConic(_) | Error::DegenerateConic => EXIT_NO,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<i32, Failure>;

/// Parse arguments and run; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let result = match cli.field {
        FieldArg::Q => execute::<Rational>(&cli, out),
        FieldArg::Qi => execute::<GaussianRational>(&cli, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn curve<K: Field>(text: &str, affine: bool) -> Result<PlaneCurve<K>, Failure> {
    PlaneCurve::parse(text, affine).map_err(|e| usage(format!("in `{text}`: {e}")))
}

fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| usage(format!("`{text}` is not a rational number")))
}

fn point<K: Field>(text: &str) -> Result<ProjPoint<K>, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(usage(format!("`{text}` is not a point a,b")));
    }
    Ok(ProjPoint::affine(promote(&rational(parts[0])?), promote(&rational(parts[1])?)))
}

fn emit(out: &mut dyn Write, json: bool, value: Value, text: impl FnOnce() -> String) -> Result<(), Failure> {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
    } else {
        writeln!(out, "{}", text())?;
    }
    Ok(())
}

fn execute<K: Field>(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let affine = cli.affine;
    match &cli.command {
        Command::Transform { pair, proper } => {
            let b = curve::<K>(&pair.b, affine)?;
            let c = curve::<K>(&pair.c, affine)?;
            let t = conchoidal_transform(&b, &c)?;
            if *proper {
                let divisor = extract_known_components(&t, &Scene::new(b)?, Some(&c))?;
                writeln!(out, "{}", serde_json::to_string_pretty(&divisor.to_json()).expect("json"))?;
            } else {
                emit(out, cli.json, json!({ "equation": t.to_string(), "degree": t.degree() }), || {
                    t.to_string()
                })?;
            }
            Ok(EXIT_OK)
        }
        Command::Split { c, center } => {
            let c = curve::<K>(c, affine)?;
            let a = point::<K>(center)?;
            let verdict = split_test(&c, &a)?;
            let (code, value, text) = match &verdict {
                SplitVerdict::Irreducible => (EXIT_NO, json!({ "verdict": "irreducible" }), "irreducible".into()),
                SplitVerdict::Inconclusive(why) => (
                    EXIT_INCONCLUSIVE,
                    json!({ "verdict": "inconclusive", "reason": why }),
                    format!("inconclusive: {why}"),
                ),
                SplitVerdict::Split(w) => (
                    EXIT_OK,
                    json!({ "verdict": "split", "witness": w.to_json() }),
                    format!("split: {w}"),
                ),
            };
            emit(out, cli.json, value, || text)?;
            Ok(code)
        }
        Command::Focus { c, center } => {
            let c = curve::<K>(c, affine)?;
            let a = point::<K>(center)?;
            let polar = conic_focus_split(&c, &a)?;
            let value = json!({
                "focus": polar.is_some(),
                "polar": polar.as_ref().map(|p| p.to_string()),
            });
            emit(out, cli.json, value, || match &polar {
                Some(p) => format!("focus, polar line {p}"),
                None => "not a focus".into(),
            })?;
            Ok(if polar.is_some() { EXIT_OK } else { EXIT_NO })
        }
        Command::Iterate { c, r2, n } => {
            let c = curve::<K>(c, affine)?;
            let b = CircleSpec::centered(rational(r2)?)?;
            let divisor = iterated_conchoid(&b, &c, *n)?;
            emit(out, cli.json, divisor.to_json(), || divisor.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Recognize { d, mode, probe, r2 } => {
            let d = curve::<K>(d, affine)?;
            let mut opts = RecognitionOptions::<K>::default();
            for line in probe {
                let mut l: MultiPoly<K> =
                    parse_poly(line, &Vars::xyz()).map_err(|e| usage(format!("in `{line}`: {e}")))?;
                if affine && !l.is_homogeneous() {
                    l = l.homogenize(2, 1)?;
                }
                opts.probes.push(l);
            }
            for r in r2 {
                opts.radii.push(rational(r)?);
            }
            let report = match mode {
                Mode::Complete => recognize_complete_with(&d, &opts),
                Mode::Proper => recognize_proper_with(&d, &opts),
            };
            emit(out, cli.json, report.to_json(), || report.to_string().trim_end().to_string())?;
            Ok(verdict_code(&report))
        }
        Command::Genus { d, delta, g, gamma } => {
            let smooth = |n: u32| {
                let n = i64::from(n);
                Rational::from_integer(((n - 1) * (n - 2) / 2).into())
            };
            let g = g.as_deref().map(rational).transpose()?.unwrap_or_else(|| smooth(*d));
            let gamma = gamma.as_deref().map(rational).transpose()?.unwrap_or_else(|| smooth(*delta));
            let (degree, genus) = degree_genus_predict(*d, &g, *delta, &gamma)?;
            emit(out, cli.json, json!({ "degree": degree, "genus": genus.to_string() }), || {
                format!("degree {degree}, genus {genus}")
            })?;
            Ok(EXIT_OK)
        }
        Command::Eliminate { pair } => {
            let b = curve::<K>(&pair.b, affine)?;
            let c = curve::<K>(&pair.c, affine)?;
            let p = elimination_crosscheck(&b, &c)?;
            emit(out, cli.json, json!({ "equation": p.to_string() }), || p.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Plot { curve: text, window, grid, output } => {
            let vars = Vars::xyz();
            let f: MultiPoly<K> = parse_poly(text, &vars).map_err(|e| usage(format!("in `{text}`: {e}")))?;
            let w: Vec<Rational> = window.split(',').map(rational).collect::<Result<_, _>>()?;
            let [x0, x1, y0, y1] = <[Rational; 4]>::try_from(w).map_err(|_| usage("window needs four numbers"))?;
            let spec = PlotSpec::new((x0, x1, y0, y1), *grid).map_err(|e| usage(e.to_string()))?;
            let svg = render_svg(&f, &spec).map_err(|e| usage(e.to_string()))?;
            match output {
                Some(path) => std::fs::write(path, svg)?,
                None => out.write_all(svg.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { pair } => {
            let b = curve::<K>(&pair.b, affine)?;
            let c = curve::<K>(&pair.c, affine)?;
            let checks = verify_suite(&b, &c)?;
            let ok = checks.iter().all(|(_, passed, _)| *passed);
            let value = json!({
                "passed": ok,
                "checks": checks.iter().map(|(name, passed, detail)| json!({
                    "name": name, "passed": passed, "detail": detail,
                })).collect::<Vec<_>>(),
            });
            emit(out, cli.json, value, || {
                checks
                    .iter()
                    .map(|(name, passed, detail)| {
                        format!("{} {name}: {detail}", if *passed { "PASS" } else { "FAIL" })
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            Ok(if ok { EXIT_OK } else { EXIT_NO })
        }
    }
}

fn verdict_code<K: Field>(report: &RecognitionReport<K>) -> i32 {
    match report.verdict {
        RecognitionVerdict::Yes => EXIT_OK,
        RecognitionVerdict::No => EXIT_NO,
        RecognitionVerdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

type CheckLine = (String, bool, String);

/// Degree, symmetry, multiplicity at the origin, behaviour at infinity and
/// the pointwise oracle.
fn verify_suite<K: Field>(b: &PlaneCurve<K>, c: &PlaneCurve<K>) -> Result<Vec<CheckLine>, Failure> {
    let (d, delta) = (b.degree(), c.degree());
    let t = conchoidal_transform(b, c)?;
    let mut checks = Vec::new();
    checks.push((
        "degree".into(),
        t.degree() == 2 * d * delta,
        format!("{} (expected {})", t.degree(), 2 * d * delta),
    ));
    let swapped = conchoidal_transform(c, b)?;
    checks.push(("symmetry".into(), swapped.same_curve(&t), "transform(B, C) = transform(C, B)".into()));

    let origin = ProjPoint::origin();
    let (mb, mc) = (multiplicity_at(b, &origin), multiplicity_at(c, &origin));
    let m = multiplicity_at(&t, &origin);
    // through the origin the transform picks up F^mult(C) and G^mult(B)
    let expected = d * delta;
    checks.push((
        "origin".into(),
        m >= expected,
        format!("multiplicity {m}, at least {expected} (B has {mb}, C has {mc} there)"),
    ));

    let fb = infinity_restriction(b).poly().clone();
    let gc = infinity_restriction(c).poly().clone();
    let top = infinity_restriction(&t).poly().clone();
    let predicted = &fb.pow(delta) * &gc.pow(d);
    checks.push((
        "infinity".into(),
        !top.is_zero() && top.eq_up_to_scalar(&predicted),
        format!("F(x, y, 0) = {top}"),
    ));

    let mut agree = 0;
    let mut total = 0;
    for (i, j) in [(1, 2), (-3, 1), (2, -5), (7, 3), (-1, -4), (5, 11)] {
        let q = ProjPoint::affine(K::from_i64(i), K::from_i64(j));
        if let Some(zero) = membership_value(b, c, &q)?.is_zero() {
            total += 1;
            if zero == t.eval(&q).is_zero() {
                agree += 1;
            }
        }
    }
    checks.push(("oracle".into(), agree == total, format!("{agree} of {total} sample points agree")));
    Ok(checks)
}
