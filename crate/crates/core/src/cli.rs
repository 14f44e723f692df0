//! Command-line surface: every pipeline stage as a subcommand with JSON
//! payloads on stdout. Exit codes: 0 success, 1 domain error (e.g. a
//! non-square d or a singular curve), 2 usage error (bad flags, malformed or
//! wrong-shape JSON). Domain errors print one JSON object on stderr with a
//! stable `error` kind string.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hyperbridge::bridge::{
    assignment_matches_params, derive_cube_assignment, params_to_uv, uv_to_cubic, BridgeParams,
};
use hyperbridge::elliptic::{CubicCurve, CurvePoint, WeierstrassCurve};
use hyperbridge::invariants::{cayley_det, quartic_invariants};
use hyperbridge::json as wire;
use hyperbridge::rational::{format_rational, parse_rational};
use hyperbridge::selftest::{self, SelftestConfig};
use hyperbridge::trilinear::{plant_solution, search_solutions, TrilinearSystem};
use hyperbridge::Error;

#[derive(Parser)]
#[command(
    name = "hyperbridge",
    about = "Exact hyperdeterminants, quartic invariants, and elliptic curve transformations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cayley's hyperdeterminant of a 2×2×2 hypermatrix JSON file
    CayleyDet { file: PathBuf },
    /// Quartic and S, T, delta, J of a 2×2×2×2 hypermatrix JSON file
    Invariants { file: PathBuf },
    /// uv-form and cubic of the (k,m,p,r,s,t) curve family
    Bridge(BridgeArgs),
    /// Elliptic curve operations
    Curve {
        #[command(subcommand)]
        op: CurveCommand,
    },
    /// Bounded rational-solution search for a trilinear system
    Trilinear(TrilinearArgs),
    /// Randomized exact property suites
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct BridgeArgs {
    #[arg(short, allow_hyphen_values = true)]
    k: String,
    #[arg(short, allow_hyphen_values = true)]
    m: String,
    #[arg(short, allow_hyphen_values = true)]
    p: String,
    #[arg(short, allow_hyphen_values = true)]
    r: String,
    #[arg(short, allow_hyphen_values = true)]
    s: String,
    #[arg(short, allow_hyphen_values = true)]
    t: String,
}

#[derive(Args)]
struct WeierstrassArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
}

#[derive(Args)]
struct CubicArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Add two points on y² = x³ + αx + β ("O" or {"x":..,"y":..})
    Add {
        #[command(flatten)]
        curve: WeierstrassArgs,
        p: String,
        q: String,
    },
    /// Double a point on y² = x³ + αx + β
    Double {
        #[command(flatten)]
        curve: WeierstrassArgs,
        p: String,
    },
    /// Rational 2-torsion points of y² = ax³ + bx² + cx + d
    Torsion {
        #[command(flatten)]
        curve: CubicArgs,
    },
    /// Translate a cubic so the given point sits at x = 0
    Shift {
        #[command(flatten)]
        curve: CubicArgs,
        point: String,
    },
    /// j-invariant of y² = x³ + αx + β
    J {
        #[command(flatten)]
        curve: WeierstrassArgs,
    },
}

#[derive(Args)]
struct TrilinearArgs {
    /// Hypermatrix JSON file with shape [2,2,2,2]; omitted when planting
    file: Option<PathBuf>,
    /// Height bound for the projective x enumeration
    #[arg(long)]
    bound: u32,
    /// Generate the system with this planted solution, "x0,x1;y0,y1;z0,z1"
    #[arg(long)]
    plant: Option<String>,
    /// Seed for the planted-instance generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 25)]
    iterations: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Negative-control hook: corrupt one value per suite to prove failures
    /// propagate to the exit code
    #[arg(long, hide = true)]
    corrupt: bool,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((payload, code)) => {
            println!("{payload}");
            code
        }
        Err(err) => {
            eprintln!(
                "{}",
                json!({ "error": err.kind(), "message": err.to_string() })
            );
            if err.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

/// Payload plus exit code; the code is nonzero only for selftest violations,
/// which still print their summary.
fn dispatch(command: Command) -> Result<(String, i32), Error> {
    match command {
        Command::CayleyDet { file } => {
            let h = read_hypermatrix(&file)?;
            let wire::HypermatrixJson::Cube(h) = h else {
                return Err(Error::Json(
                    "cayley-det expects shape [2,2,2]".into(),
                ));
            };
            Ok((
                Value::String(format_rational(&cayley_det(&h))).to_string(),
                0,
            ))
        }
        Command::Invariants { file } => {
            let h = read_hypermatrix(&file)?;
            let wire::HypermatrixJson::Tesseract(h) = h else {
                return Err(Error::Json(
                    "invariants expects shape [2,2,2,2]".into(),
                ));
            };
            let quartic = hyperbridge::invariants::quartic_from_hypermatrix(&h);
            let inv = quartic_invariants(&quartic);
            Ok((wire::invariants_report_value(&quartic, &inv).to_string(), 0))
        }
        Command::Bridge(args) => {
            let bp = BridgeParams::new(
                parse_rational(&args.k)?,
                parse_rational(&args.m)?,
                parse_rational(&args.p)?,
                parse_rational(&args.r)?,
                parse_rational(&args.s)?,
                parse_rational(&args.t)?,
            )?;
            let uv = params_to_uv(&bp);
            let cubic = uv_to_cubic(&uv)?;
            let assignment = derive_cube_assignment()?;
            let verified = assignment_matches_params(&assignment, &bp);
            Ok((
                json!({
                    "params": wire::params_to_value(&bp),
                    "uv": wire::uv_to_value(&uv),
                    "cubic": wire::cubic_to_value(&cubic),
                    "assignment_verified": verified,
                })
                .to_string(),
                0,
            ))
        }
        Command::Curve { op } => curve_command(op).map(|payload| (payload, 0)),
        Command::Trilinear(args) => trilinear_command(args).map(|payload| (payload, 0)),
        Command::Selftest(args) => {
            let summary = selftest::run(&SelftestConfig {
                iterations: args.iterations.max(1),
                seed: args.seed,
                corrupt: args.corrupt,
            });
            let suites: Vec<Value> = summary
                .suites
                .iter()
                .map(|s| json!({ "name": s.name, "passed": s.passed, "failed": s.failed }))
                .collect();
            let payload = json!({
                "seed": summary.seed,
                "iterations": summary.iterations,
                "suites": suites,
                "ok": summary.ok,
            })
            .to_string();
            Ok((payload, if summary.ok { 0 } else { 1 }))
        }
    }
}

fn curve_command(op: CurveCommand) -> Result<String, Error> {
    match op {
        CurveCommand::Add { curve, p, q } => {
            let e = weierstrass(&curve)?;
            let p = validated_point(&e, &p)?;
            let q = validated_point(&e, &q)?;
            Ok(wire::point_to_value(&e.add(&p, &q)).to_string())
        }
        CurveCommand::Double { curve, p } => {
            let e = weierstrass(&curve)?;
            let p = validated_point(&e, &p)?;
            Ok(wire::point_to_value(&e.double(&p)).to_string())
        }
        CurveCommand::Torsion { curve } => {
            let c = cubic(&curve)?;
            let points: Vec<Value> = c
                .two_torsion()
                .iter()
                .map(wire::point_to_value)
                .collect();
            Ok(json!({
                "points": points,
                "full_two_torsion": c.has_full_two_torsion(),
            })
            .to_string())
        }
        CurveCommand::Shift { curve, point } => {
            let c = cubic(&curve)?;
            let p = wire::point_from_str(&point)?;
            let shifted = c.shift_to_origin(&p)?;
            Ok(wire::cubic_to_value(&shifted).to_string())
        }
        CurveCommand::J { curve } => {
            let e = weierstrass(&curve)?;
            Ok(Value::String(format_rational(&e.j()?)).to_string())
        }
    }
}

fn trilinear_command(args: TrilinearArgs) -> Result<String, Error> {
    if args.bound < 1 {
        return Err(Error::Parse("--bound must be at least 1".into()));
    }
    let sys = match (&args.file, &args.plant) {
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "give either a hypermatrix file or --plant, not both".into(),
            ))
        }
        (None, None) => {
            return Err(Error::Parse(
                "a hypermatrix file or --plant is required".into(),
            ))
        }
        (Some(file), None) => {
            let h = read_hypermatrix(file)?;
            let wire::HypermatrixJson::Tesseract(h) = h else {
                return Err(Error::Json("trilinear expects shape [2,2,2,2]".into()));
            };
            TrilinearSystem::new(h)?
        }
        (None, Some(spec)) => {
            let (x, y, z) = parse_plant_spec(spec)?;
            plant_solution(&x, &y, &z, args.seed)
        }
    };
    let report = search_solutions(&sys, args.bound);
    Ok(wire::search_report_to_value(&report, &sys).to_string())
}

/// "x0,x1;y0,y1;z0,z1" with integer components, each vector nonzero.
fn parse_plant_spec(
    spec: &str,
) -> Result<
    (
        hyperbridge::hypermatrix::Vector2,
        hyperbridge::hypermatrix::Vector2,
        hyperbridge::hypermatrix::Vector2,
    ),
    Error,
> {
    let parts: Vec<&str> = spec.split(';').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(
            "plant spec must be \"x0,x1;y0,y1;z0,z1\"".into(),
        ));
    }
    let mut vectors = Vec::with_capacity(3);
    for part in parts {
        let comps: Vec<&str> = part.split(',').collect();
        if comps.len() != 2 {
            return Err(Error::Parse(format!(
                "vector `{part}` must have two components"
            )));
        }
        let c0 = parse_rational(comps[0])?;
        let c1 = parse_rational(comps[1])?;
        if !c0.is_integer() || !c1.is_integer() {
            return Err(Error::Parse(format!(
                "vector `{part}` must have integer components"
            )));
        }
        let v = hyperbridge::hypermatrix::Vector2::new(c0, c1);
        if v.is_zero() {
            return Err(Error::Parse(format!("vector `{part}` must be nonzero")));
        }
        vectors.push(v);
    }
    let z = vectors.pop().unwrap();
    let y = vectors.pop().unwrap();
    let x = vectors.pop().unwrap();
    Ok((x, y, z))
}

fn read_hypermatrix(path: &PathBuf) -> Result<wire::HypermatrixJson, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Json(format!("cannot read {}: {e}", path.display())))?;
    wire::hypermatrix_from_str(&text)
}

fn weierstrass(args: &WeierstrassArgs) -> Result<WeierstrassCurve, Error> {
    WeierstrassCurve::new(parse_rational(&args.alpha)?, parse_rational(&args.beta)?)
}

fn cubic(args: &CubicArgs) -> Result<CubicCurve, Error> {
    CubicCurve::new(
        parse_rational(&args.a)?,
        parse_rational(&args.b)?,
        parse_rational(&args.c)?,
        parse_rational(&args.d)?,
    )
}

fn validated_point(curve: &WeierstrassCurve, text: &str) -> Result<CurvePoint, Error> {
    let p = wire::point_from_str(text)?;
    if !curve.contains(&p) {
        return Err(Error::PointNotOnCurve);
    }
    Ok(p)
}
