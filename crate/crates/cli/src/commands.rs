use std::fs;
use std::path::{Path, PathBuf};

use alcove::cycles::positive_cycle;
use alcove::document::{
    from_json, to_json, HRepDocument, MatrixDocument, NormalizationDocument, PolytopeInput,
    VRepDocument,
};
use alcove::metric::{radius_polytope, radius_section, tropical_distance, PolytopeSource};
use alcove::normalization;
use alcove::polytope::{self, enumerate_vertices, hrep_from_matrix, matrix_from_hrep};
use alcove::span::{span_membership, span_sample};
use alcove::{Error, MaxPlusMatrix, Point, Scalar};

use crate::failure::{self, format_cycle, Failure};
use crate::svg;

type Outcome = Result<(), Failure>;

pub struct Context {
    pub seed: u64,
    pub quiet: bool,
}

impl Context {
    fn note(&self, message: &str) {
        if !self.quiet {
            eprintln!("{message}");
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn load_matrix(path: &Path) -> Result<MaxPlusMatrix, Failure> {
    let doc: MatrixDocument = from_json(&read(path)?)?;
    Ok(doc.to_matrix()?)
}

fn load_square(path: &Path) -> Result<MaxPlusMatrix, Failure> {
    let a = load_matrix(path)?;
    a.order()?;
    Ok(a)
}

/// Writes to `path`, or to stdout without one.
fn emit(ctx: &Context, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::io(path, e))?;
            ctx.note(&format!("wrote {}", path.display()));
        }
        None => print!("{text}"),
    }
    Ok(())
}

/// Parses `"1,-2,0"`, optionally wrapped in parentheses.
fn parse_point(text: &str) -> Result<Point, Failure> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = inner
        .split(',')
        .map(str::parse::<Scalar>)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Point::new(coords))
}

fn format_scalars(values: &[Scalar]) -> String {
    let parts: Vec<String> = values.iter().map(Scalar::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn analyze(path: &Path) -> Outcome {
    let a = load_square(path)?;
    let lambda = a.max_cycle_mean()?;
    println!("order: {}", a.rows());
    println!("zero_diagonal: {}", a.is_zero_diagonal()?);
    println!("normal: {}", a.is_normal()?);
    println!("kleene_star: {}", a.is_kleene_star()?);
    println!("normal_idempotent: {}", a.is_normal_idempotent()?);
    println!("max_cycle_mean: {lambda}");
    println!("norm: {}", a.norm());
    println!("star_exists: {}", !lambda.is_positive());
    Ok(())
}

pub fn star(ctx: &Context, path: &Path, output: Option<&Path>) -> Outcome {
    let a = load_square(path)?;
    let star = a.kleene_star()?;
    emit(ctx, output, &to_json(&MatrixDocument::new(&star, None)))
}

fn sidecar(output: &Path) -> PathBuf {
    let stem = output
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    output.with_file_name(format!("{stem}.factors.json"))
}

pub fn normalize(
    ctx: &Context,
    path: &Path,
    output: Option<&Path>,
    factors: Option<&Path>,
) -> Outcome {
    let a = load_square(path)?;
    let r = normalization::normalize(&a)?;
    emit(ctx, output, &to_json(&MatrixDocument::new(&r.normal, None)))?;
    let factors_path = factors
        .map(Path::to_path_buf)
        .or_else(|| output.map(sidecar));
    match factors_path {
        Some(p) => emit(ctx, Some(&p), &to_json(&NormalizationDocument::new(&r))),
        None => {
            ctx.note("factors not written: pass --output or --factors");
            Ok(())
        }
    }
}

pub fn tighten(ctx: &Context, path: &Path, output: Option<&Path>) -> Outcome {
    let a = load_square(path)?;
    let tight = polytope::tighten(&a)?;
    emit(ctx, output, &to_json(&MatrixDocument::new(&tight, None)))
}

/// The polytope only sees off-diagonal entries, so the diagonal is reset.
fn with_zero_diagonal(a: &MaxPlusMatrix) -> MaxPlusMatrix {
    let mut z = a.clone();
    for i in 0..a.rows() {
        z.set(i, i, Scalar::zero());
    }
    z
}

fn empty_polytope(a: &MaxPlusMatrix) -> Failure {
    let cycle = positive_cycle(a, false).unwrap_or_default();
    Failure::new(
        failure::EMPTY,
        format!(
            "the alcoved polytope is empty\ninfeasible cycle: {}",
            format_cycle(&cycle)
        ),
    )
}

/// A Kleene star presenting the same polytope as `a`, tightening only when
/// asked to.
fn star_presentation(a: &MaxPlusMatrix, tighten: bool) -> Result<MaxPlusMatrix, Failure> {
    if polytope::is_empty(a)? {
        return Err(empty_polytope(a));
    }
    if a.is_kleene_star()? {
        return Ok(a.clone());
    }
    if !tighten {
        return Err(Failure::new(
            failure::PRECONDITION,
            "matrix is not a Kleene star; pass --tighten to replace it by its tight presentation",
        ));
    }
    Ok(polytope::tighten(&with_zero_diagonal(a))?)
}

pub fn polytope(
    ctx: &Context,
    path: &Path,
    vrep: bool,
    tighten: bool,
    t: Option<&str>,
    output: Option<&Path>,
) -> Outcome {
    let t = t.map(str::parse::<Scalar>).transpose()?;
    let a = match from_json::<PolytopeInput>(&read(path)?)? {
        PolytopeInput::Matrix(doc) => {
            let a = doc.to_matrix()?;
            a.order()?;
            a
        }
        PolytopeInput::HRep(doc) => matrix_from_hrep(&doc.to_hrep()?, t)?,
    };
    let text = if vrep {
        let star = star_presentation(&a, tighten)?;
        to_json(&VRepDocument::new(&enumerate_vertices(&star)?))
    } else {
        let presented = if tighten {
            star_presentation(&a, true)?
        } else {
            a
        };
        if polytope::is_empty(&presented)? {
            return Err(empty_polytope(&presented));
        }
        to_json(&HRepDocument::new(&hrep_from_matrix(&presented)?))
    };
    emit(ctx, output, &text)
}

pub fn radius(path: &Path) -> Outcome {
    let a = load_square(path)?;
    let section = radius_section(&a)?;
    println!("section_radius: {}", section.radius);
    println!("section_attained_at: {}", section.attaining_point);
    if a.is_idempotent()? {
        let v = match enumerate_vertices(&a) {
            Err(Error::TooLarge { max, .. }) => {
                println!("polytope_radius: skipped (vertex enumeration is limited to order {max})");
                return Ok(());
            }
            other => other?,
        };
        let poly = radius_polytope(&v, PolytopeSource::Matrix(&a))?;
        println!("polytope_radius: {}", poly.radius);
        println!("polytope_attained_at: {}", poly.attaining_point);
    }
    Ok(())
}

/// Points off `{x_n = 0}` are translated onto it first, which does not change
/// the verdict. `mu` is over the columns of `A_0`, `lambda` over those of `A`
/// and reproduces the point as given.
pub fn member(path: &Path, point: &str) -> Outcome {
    let a = load_matrix(path)?;
    let x = parse_point(point)?;
    let x = if x.dim() + 1 == a.rows() {
        x.embed()
    } else {
        x
    };
    if x.dim() != a.rows() {
        return Err(Failure::new(
            failure::DIMENSION,
            format!(
                "point of dimension {} for a matrix with {} rows",
                x.dim(),
                a.rows()
            ),
        ));
    }
    let shift = x[x.dim() - 1].clone();
    match span_membership(&a, &x.translate(&-&shift))? {
        Some(c) => {
            let last = a.rows() - 1;
            let lambda: Vec<Scalar> =
                c.mu.iter()
                    .enumerate()
                    .map(|(k, mu)| mu - a.get(last, k) + &shift)
                    .collect();
            println!("member: true");
            println!("mu: {}", format_scalars(&c.mu));
            println!("lambda: {}", format_scalars(&lambda));
        }
        None => println!("member: false (not a member)"),
    }
    Ok(())
}

pub fn dist(p: &str, q: &str) -> Outcome {
    let d = tropical_distance(&parse_point(p)?, &parse_point(q)?)?;
    println!("{d}");
    Ok(())
}

pub fn plot(ctx: &Context, path: &Path, output: Option<&Path>, samples: Option<usize>) -> Outcome {
    let a = load_square(path)?;
    if a.rows() != 3 {
        return Err(Failure::new(
            failure::PLOT_ORDER,
            format!("plot needs a 3x3 matrix, got order {}", a.rows()),
        ));
    }
    let star = star_presentation(&a, true)?;
    let vertices = enumerate_vertices(&star)?;
    let span = samples.map_or_else(Vec::new, |n| span_sample(&a, n, ctx.seed));
    emit(ctx, output, &svg::render(&vertices, &span))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points() {
        assert_eq!(
            parse_point("2,4,0").unwrap(),
            Point::from_integers(&[2, 4, 0])
        );
        assert_eq!(
            parse_point("(-1/2, 3)").unwrap().coords()[0],
            Scalar::from_fraction(-1, 2)
        );
        assert_eq!(parse_point("1,x").unwrap_err().code, failure::PARSE);
    }

    #[test]
    fn sidecar_names() {
        assert_eq!(
            sidecar(Path::new("out/n.json")),
            PathBuf::from("out/n.factors.json")
        );
        assert_eq!(sidecar(Path::new("n")), PathBuf::from("n.factors.json"));
    }
}
