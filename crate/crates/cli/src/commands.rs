use std::path::Path;

use edwards_goppa::artifact::{CodeArtifact, EdwardsCurveJson, WeierstrassCurveJson};
use edwards_goppa::birational::BirationalPair;
use edwards_goppa::curves::EdwardsCurve;
use edwards_goppa::field::{Field, FieldElement, FieldError};
use edwards_goppa::goppa::{candidate_points, GoppaError, LinearCode, PointPolicy};
use edwards_goppa::notation::{
    format_points, parse_divisor, parse_edwards_point, parse_edwards_points, parse_element,
    parse_weierstrass_point,
};
use edwards_goppa::riemann_roch::{divisor_class_reduce, rr_basis};
use edwards_goppa::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{BuildArgs, CodeCommand, Command, CurveArgs, CurveCommand, FieldArgs, FieldCommand, MapCommand};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Domain(e) => e.name(),
            Self::Io { .. } => "IoError",
        }
    }
}

impl From<GoppaError> for CliError {
    fn from(e: GoppaError) -> Self {
        Self::Domain(e.into())
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        Self::Domain(e.into())
    }
}

/// What a command prints, in both formats.
pub struct Report {
    pub text: String,
    pub json: String,
}

impl Report {
    fn new(text: impl Into<String>, json: serde_json::Value) -> Self {
        Self {
            text: text.into(),
            json: serde_json::to_string_pretty(&json).expect("JSON value serializes"),
        }
    }
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Field(FieldCommand::Info(args)) => field_info(args),
        Command::Curve(CurveCommand::Points(args)) => curve_points(args),
        Command::Curve(CurveCommand::Add { curve, lhs, rhs }) => curve_add(curve, lhs, rhs),
        Command::Map(MapCommand::Alpha { curve, point }) => map_alpha(curve, point),
        Command::Map(MapCommand::Beta { curve, point }) => map_beta(curve, point),
        Command::Rrbasis { curve, divisor } => rrbasis(curve, divisor),
        Command::Code(CodeCommand::Build(args)) => code_build(args),
        Command::Code(CodeCommand::Encode { code, message }) => code_encode(&code.code, message),
        Command::Code(CodeCommand::Syndrome { code, word }) => code_syndrome(&code.code, word),
        Command::Code(CodeCommand::Distance { code, budget }) => code_distance(&code.code, *budget),
    }
}

fn make_field(args: &FieldArgs) -> Result<Field, CliError> {
    let modulus = match &args.modulus {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| FieldError::InvalidModulus(s.clone()))?,
        ),
    };
    Ok(Field::new(args.p, args.t, modulus)?)
}

fn make_curve(args: &CurveArgs) -> Result<EdwardsCurve, CliError> {
    let field = make_field(&args.field)?;
    let d = parse_element(&field, &args.d)?;
    Ok(EdwardsCurve::new(d).map_err(Error::from)?)
}

fn join_values(v: &[FieldElement]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn poly_string(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let c = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => c,
                1 => format!("{c}x"),
                _ => format!("{c}x^{i}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn field_info(args: &FieldArgs) -> Result<Report, CliError> {
    let f = make_field(args)?;
    let spec = f.spec();
    let mut text = format!("{f}\np = {}\nt = {}\nq = {}\n", spec.p, spec.t, f.order());
    if spec.t > 1 {
        text.push_str(&format!("modulus = {}\n", poly_string(&spec.modulus)));
    }
    let json = serde_json::to_value(spec).expect("field spec serializes");
    Ok(Report::new(text, json))
}

fn curve_points(args: &CurveArgs) -> Result<Report, CliError> {
    let c = make_curve(args)?;
    let pts = c.points().map_err(Error::from)?;
    let text: String = pts.iter().map(|p| format!("{p}\n")).collect();
    let json = json!({
        "curve": EdwardsCurveJson::from_curve(&c),
        "complete": c.is_complete(),
        "count": pts.len(),
        "points": pts.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, json))
}

fn curve_add(args: &CurveArgs, lhs: &str, rhs: &str) -> Result<Report, CliError> {
    let c = make_curve(args)?;
    let p = parse_edwards_point(&c, lhs)?;
    let q = parse_edwards_point(&c, rhs)?;
    let s = c.add(&p, &q).map_err(Error::from)?;
    Ok(Report::new(s.to_string(), json!({ "sum": s.to_string() })))
}

fn map_alpha(args: &CurveArgs, point: &str) -> Result<Report, CliError> {
    let c = make_curve(args)?;
    let pair = BirationalPair::canonical(&c).map_err(Error::from)?;
    let p = parse_edwards_point(&c, point)?;
    let image = pair.alpha(&p).map_err(Error::from)?;
    let json = json!({
        "weierstrass": WeierstrassCurveJson::from_curve(pair.weierstrass()),
        "point": image.to_string(),
    });
    Ok(Report::new(image.to_string(), json))
}

fn map_beta(args: &CurveArgs, point: &str) -> Result<Report, CliError> {
    let c = make_curve(args)?;
    let pair = BirationalPair::canonical(&c).map_err(Error::from)?;
    let q = parse_weierstrass_point(pair.weierstrass(), point)?;
    let image = pair.beta(&q).map_err(Error::from)?;
    let json = json!({
        "weierstrass": WeierstrassCurveJson::from_curve(pair.weierstrass()),
        "point": image.to_string(),
    });
    Ok(Report::new(image.to_string(), json))
}

fn rrbasis(args: &CurveArgs, divisor: &str) -> Result<Report, CliError> {
    let c = make_curve(args)?;
    let d = parse_divisor(&c, divisor)?;
    let reduced = divisor_class_reduce(&c, &d).map_err(Error::from)?;
    let basis = rr_basis(&c, &reduced.point, reduced.k).map_err(Error::from)?;
    let mut text = format!("D = {d}\nD ~ {} + {}O\n", reduced.point, reduced.k);
    for (i, f) in basis.iter().enumerate() {
        text.push_str(&format!("F{i} = {f}\n"));
    }
    let json = json!({
        "divisor": d.to_string(),
        "reduced": { "point": reduced.point.to_string(), "k": reduced.k },
        "basis": basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Ok(Report::new(text, json))
}

fn code_text(code: &LinearCode) -> String {
    let (n, k) = (code.length(), code.dimension());
    let perm: Vec<String> = code.permutation().iter().map(ToString::to_string).collect();
    let mut text = format!(
        "[{n}, {k}] code over {}\nD = {}\nT = {}\nG =\n{}perm = {}\nH =\n{}d_designed = {}\n",
        code.curve().field(),
        code.divisor(),
        format_points(code.points()),
        code.generator().render(None),
        perm.join(" "),
        code.parity_check().render(Some(k)),
        code.designed_distance(),
    );
    if let Some(d) = code.exact_distance() {
        text.push_str(&format!("d_exact = {d}\n"));
    }
    text
}

fn code_build(args: &BuildArgs) -> Result<Report, CliError> {
    let c = make_curve(&args.curve)?;
    let d = parse_divisor(&c, &args.divisor)?;
    let policy = match (&args.points, args.count, args.seed) {
        (Some(list), _, _) => PointPolicy::Explicit(parse_edwards_points(&c, list)?),
        (None, Some(n), None) => PointPolicy::FirstValid(n),
        (None, Some(n), Some(seed)) => {
            let all = candidate_points(&c, &d)?;
            if all.len() < n {
                return Err(GoppaError::NotEnoughPoints { needed: n, available: all.len() }.into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen: Vec<_> = all.choose_multiple(&mut rng, n).cloned().collect();
            chosen.sort();
            PointPolicy::Explicit(chosen)
        }
        (None, None, _) => unreachable!("clap requires --points or --count"),
    };
    let mut code = LinearCode::build(&c, &d, &policy)?;
    if args.distance {
        code.compute_exact_distance(edwards_goppa::goppa::DEFAULT_DISTANCE_BUDGET)?;
    }
    Ok(Report {
        text: code_text(&code),
        json: CodeArtifact::from_code(&code).to_json(),
    })
}

fn load_code(path: &Path) -> Result<LinearCode, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let raw = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)?
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    Ok(CodeArtifact::from_json(&raw)?.to_code()?)
}

fn parse_vector(field: &Field, s: &str) -> Result<Vec<FieldElement>, CliError> {
    Ok(s.split(',')
        .map(|v| parse_element(field, v))
        .collect::<Result<Vec<_>, _>>()?)
}

fn code_encode(path: &Path, message: &str) -> Result<Report, CliError> {
    let code = load_code(path)?;
    let msg = parse_vector(code.curve().field(), message)?;
    let word = code.encode(&msg)?;
    let values: Vec<u32> = word.iter().map(FieldElement::value).collect();
    Ok(Report::new(join_values(&word), json!({ "codeword": values })))
}

fn code_syndrome(path: &Path, word: &str) -> Result<Report, CliError> {
    let code = load_code(path)?;
    let y = parse_vector(code.curve().field(), word)?;
    let s = code.syndrome(&y)?;
    let perm: Vec<String> = code.permutation().iter().map(ToString::to_string).collect();
    let values: Vec<u32> = s.iter().map(FieldElement::value).collect();
    let is_codeword = values.iter().all(|&v| v == 0);
    let text = format!("perm = {}\nsyndrome = {}\ncodeword = {is_codeword}\n", perm.join(" "), join_values(&s));
    let json = json!({ "perm": code.permutation(), "syndrome": values, "codeword": is_codeword });
    Ok(Report::new(text, json))
}

fn code_distance(path: &Path, budget: u128) -> Result<Report, CliError> {
    let mut code = load_code(path)?;
    let d = code.compute_exact_distance(budget)?;
    let mds = code.is_mds().expect("distance was just computed");
    let text = format!("d_designed={} d_exact={d} MDS={mds}", code.designed_distance());
    let json = json!({ "d_designed": code.designed_distance(), "d_exact": d, "mds": mds });
    Ok(Report::new(text, json))
}
