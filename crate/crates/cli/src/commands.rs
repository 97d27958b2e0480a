use std::fmt::Write as _;
use std::io::Read;

use framesteps::bridge::rectangular_domain;
use framesteps::enumerate::tableaux_with_labels;
use framesteps::io::{parse_document, pattern_to_json, tableau_to_json, Document, JsonEntry};
use framesteps::{
    clear, enumerate_tableaux, frame_report, gt_to_skew, gt_to_ssyt, inner_eigensteps, naimark_frame,
    outer_eigensteps, skew_to_gt, ssyt_to_gt, verify_boxcomp_diagram, verify_naimark_diagram, Entry, Error,
    FrameMatrix, GtPattern, GtShape, NaimarkMode, Partition, RationalPattern, Tableau, WeightVector,
};

use crate::render::{self, Format};
use crate::{Command, MapKind, RenderFormat, Target, EXIT_INVALID, EXIT_USAGE, TOL_ENV};

/// Why a command stopped, plus anything it printed first.
#[derive(Debug)]
pub struct Failure {
    usage: bool,
    pub message: String,
    pub stdout: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { usage: true, message: message.into(), stdout: String::new() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure { usage: false, message: message.into(), stdout: String::new() }
    }

    pub fn code(&self) -> i32 {
        if self.usage {
            EXIT_USAGE
        } else {
            EXIT_INVALID
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::usage(e.to_string()),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

type Output = Result<String, Failure>;

pub(crate) fn dispatch(command: Command) -> Output {
    match command {
        Command::Validate { file } => validate(load(&file)?),
        Command::Convert { to, n, file } => convert(load(&file)?, to, n),
        Command::Complement { map, n, d, c, file } => complement(load(&file)?, map, n, d, c),
        Command::Eigensteps { outer, clear, tol, max_den, matrix } => {
            eigensteps(&load_matrix(&matrix)?, outer, clear, tolerance(tol)?, max_den)
        }
        Command::Report { tol, matrix } => report(&load_matrix(&matrix)?, tolerance(tol)?),
        Command::NaimarkFrame { generalized, tol, matrix } => {
            let mode = if generalized { NaimarkMode::Generalized } else { NaimarkMode::Tight };
            Ok(naimark_frame(&load_matrix(&matrix)?, mode, tolerance(tol)?)?.to_string())
        }
        Command::Enumerate { shape, weight, count_only, limit } => enumerate(shape, weight, count_only, limit),
        Command::VerifyDiagrams { n, d } => verify_diagrams(n, d),
        Command::Render { format, file } => {
            let format = match format {
                RenderFormat::Ascii => Format::Ascii,
                RenderFormat::Latex => Format::Latex,
            };
            render_document(load(&file)?, format)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn load(path: &str) -> Result<Document, Failure> {
    parse_document(&read_input(path)?).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn load_matrix(path: &str) -> Result<FrameMatrix, Failure> {
    match load(path)? {
        Document::Matrix(m) => Ok(m),
        _ => Err(Failure::usage(format!("{path}: expected a matrix"))),
    }
}

/// `--tol`, else `FRAMESTEPS_TOL`, else the library default.
fn tolerance(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match (flag, std::env::var(TOL_ENV)) {
        (Some(t), _) => t,
        (None, Ok(s)) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{TOL_ENV}={s:?} is not a number")))?,
        (None, Err(_)) => framesteps::DEFAULT_TOL,
    };
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Failure::usage(format!("tolerance must be positive, got {tol}")))
    }
}

fn json_line(value: serde_json::Value) -> String {
    format!("{value}\n")
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn validate(doc: Document) -> Output {
    match doc {
        Document::Tableau(t) => {
            let report = t.validate();
            if !report.is_ok() {
                return Err(Failure::invalid(format!("invalid tableau: {report}")));
            }
            let shape = if t.is_straight() {
                t.outer()?.to_string()
            } else {
                format!("{}/{}", t.outer()?, t.inner())
            };
            Ok(format!("valid tableau: shape {shape}, weight {}\n", t.weight(None)?))
        }
        Document::Pattern(p) => {
            let report = p.validate();
            if !report.is_ok() {
                return Err(Failure::invalid(format!("invalid GT pattern: {report}")));
            }
            Ok(format!(
                "valid {} GT pattern: {} rows, weight ({})\n",
                p.shape().name(),
                p.num_rows(),
                join(p.weight().values())
            ))
        }
        Document::Matrix(m) => Ok(format!("valid matrix: {} x {}\n", m.dim(), m.len())),
    }
}

fn pattern_output<E: Entry + JsonEntry>(p: &GtPattern<E>) -> Output {
    Ok(json_line(pattern_to_json(p)))
}

fn tableau_output(t: &Tableau) -> Output {
    Ok(json_line(tableau_to_json(t)))
}

fn checked(p: RationalPattern) -> Result<RationalPattern, Failure> {
    let report = p.validate();
    if report.is_ok() {
        Ok(p)
    } else {
        Err(Failure::invalid(format!("invalid GT pattern: {report}")))
    }
}

fn checked_tableau(t: Tableau) -> Result<Tableau, Failure> {
    let report = t.validate();
    if report.is_ok() {
        Ok(t)
    } else {
        Err(Failure::invalid(format!("invalid tableau: {report}")))
    }
}

fn as_triangular(p: &RationalPattern) -> Result<RationalPattern, Failure> {
    Ok(match p.shape() {
        GtShape::Triangular => p.clone(),
        GtShape::Parallelogram => p.to_triangular()?,
    })
}

fn as_parallelogram(p: &RationalPattern) -> Result<RationalPattern, Failure> {
    Ok(match p.shape() {
        GtShape::Triangular => p.to_parallelogram(p.num_rows())?,
        GtShape::Parallelogram => p.clone(),
    })
}

/// Rows of the parallelogram pattern paired with a skew tableau.
fn skew_rows(t: &Tableau, n: Option<usize>) -> usize {
    n.unwrap_or(t.max_entry() as usize) + 1
}

fn convert(doc: Document, to: Target, n: Option<usize>) -> Output {
    match doc {
        Document::Matrix(_) => Err(Failure::usage("convert needs a tableau or GT pattern")),
        Document::Tableau(t) => {
            let t = checked_tableau(t)?;
            match (to, t.is_straight()) {
                (Target::Ssyt, true) | (Target::Skew, false) => tableau_output(&t),
                (Target::Ssyt, false) => tableau_output(&t.skew_to_straight()?),
                (Target::Skew, true) => tableau_output(&t.strip_to_skew()?),
                (Target::Gt, true) => pattern_output(&ssyt_to_gt(&t, n)?),
                (Target::Parallelogram, true) => {
                    let p = ssyt_to_gt(&t, n)?;
                    pattern_output(&p.to_parallelogram(p.num_rows())?)
                }
                (Target::Gt | Target::Parallelogram, false) => pattern_output(&skew_to_gt(&t, skew_rows(&t, n), None)?),
            }
        }
        Document::Pattern(p) => {
            let p = checked(p)?;
            match to {
                Target::Gt => pattern_output(&as_triangular(&p)?),
                Target::Parallelogram => pattern_output(&as_parallelogram(&p)?),
                Target::Ssyt => tableau_output(&gt_to_ssyt(&as_triangular(&p)?.to_integer()?)?),
                Target::Skew => tableau_output(&gt_to_skew(&as_parallelogram(&p)?.to_integer()?)?),
            }
        }
    }
}

fn tableau_complement(t: &Tableau, map: MapKind, n: usize, d: Option<usize>, c: Option<usize>) -> Result<Tableau, Failure> {
    let d = d.unwrap_or(t.rows().len());
    Ok(match map {
        MapKind::Gamma => t.gamma_complement(n, d)?,
        MapKind::Boxcomp => t.boxcomp(n, c)?,
        MapKind::Naimark => gt_to_ssyt(&ssyt_to_gt(t, Some(n))?.naimark_map(n, d)?)?,
        MapKind::Generalized => gt_to_ssyt(&ssyt_to_gt(t, Some(n))?.generalized_complement()?)?,
    })
}

fn complement(doc: Document, map: MapKind, n: Option<usize>, d: Option<usize>, c: Option<usize>) -> Output {
    match doc {
        Document::Matrix(_) => Err(Failure::usage("complement needs a tableau or GT pattern")),
        Document::Tableau(t) => {
            if !t.is_straight() {
                return Err(Failure::invalid("complement maps act on straight-shape tableaux"));
            }
            let t = checked_tableau(t)?;
            let n = n.unwrap_or(t.max_entry() as usize);
            tableau_output(&tableau_complement(&t, map, n, d, c)?)
        }
        Document::Pattern(p) => {
            let p = as_triangular(&checked(p)?)?;
            let n = n.unwrap_or(p.num_rows());
            match map {
                MapKind::Naimark => {
                    let zero = framesteps::gt::ratio(0, 1);
                    let top = p.top_row().unwrap_or_default();
                    let d = d.unwrap_or(top.iter().filter(|x| **x != zero).count());
                    pattern_output(&p.naimark_map(n, d)?)
                }
                MapKind::Generalized => pattern_output(&p.generalized_complement()?),
                MapKind::Gamma | MapKind::Boxcomp => {
                    let t = gt_to_ssyt(&p.to_integer()?)?;
                    let image = tableau_complement(&t, map, n, d, c)?;
                    pattern_output(&ssyt_to_gt(&image, Some(n))?)
                }
            }
        }
    }
}

fn eigensteps(frame: &FrameMatrix, outer: bool, clearing: bool, tol: f64, max_den: u64) -> Output {
    let table = if outer { outer_eigensteps(frame, tol)? } else { inner_eigensteps(frame, tol)? };
    if clearing {
        let cleared = clear(&table, max_den, tol)?;
        return Ok(format!("ℓ = {}\n{}", cleared.scale, json_line(pattern_to_json(&cleared.pattern))));
    }
    Ok(table.rows().iter().map(|row| join(row) + "\n").collect())
}

fn report(frame: &FrameMatrix, tol: f64) -> Output {
    let r = frame_report(frame, tol)?;
    let bound = |b: Option<f64>| b.map_or("none".to_string(), |x| x.to_string());
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "dimension: {}", frame.dim()).unwrap();
    writeln!(out, "vectors: {}", frame.len()).unwrap();
    writeln!(out, "rank: {}", r.rank).unwrap();
    writeln!(out, "lower bound: {}", bound(r.lower)).unwrap();
    writeln!(out, "upper bound: {}", bound(r.upper)).unwrap();
    writeln!(out, "tight: {}", yes_no(r.tight)).unwrap();
    writeln!(out, "equal norm: {}", yes_no(r.equal_norm)).unwrap();
    writeln!(out, "norm squares: {}", join(&r.norm_squares)).unwrap();
    writeln!(out, "spectrum: {}", join(&r.spectrum)).unwrap();
    Ok(out)
}

fn enumerate(shape: Vec<usize>, weight: Vec<usize>, count_only: bool, limit: Option<usize>) -> Output {
    let shape = Partition::new(shape).map_err(|e| Failure::usage(e.to_string()))?;
    let mut stream = enumerate_tableaux(&shape, &WeightVector::new(weight), limit);
    if let Some(reason) = stream.diagnostic() {
        return Err(Failure::invalid(reason.to_string()));
    }
    if count_only {
        return Ok(format!("{}\n", stream.by_ref().count()));
    }
    Ok(stream.map(|t| json_line(tableau_to_json(&t))).collect())
}

/// Straight SSYT with labels in `[n]` fitting in a `d x n` box, except the
/// empty one.
fn boxcomp_domain(n: usize, d: usize) -> impl Iterator<Item = Tableau> {
    (1..=n * d).flat_map(move |size| {
        Partition::all(size)
            .filter(move |p| p.len() <= d && p.width() <= n)
            .flat_map(move |p| tableaux_with_labels(&p, n).collect::<Vec<_>>())
    })
}

fn verify_diagrams(n: usize, d: usize) -> Output {
    if d == 0 || d >= n {
        return Err(Failure::usage(format!("need 0 < d < n, got n = {n}, d = {d}")));
    }
    let mut out = String::new();
    let mut first_failure = None;
    let mut tally = |name: &str, domain: &mut dyn Iterator<Item = Tableau>, check: &dyn Fn(&Tableau) -> framesteps::Result<bool>| -> Result<(), Failure> {
        let (mut total, mut passed) = (0, 0);
        for t in domain {
            total += 1;
            if check(&t)? {
                passed += 1;
            } else if first_failure.is_none() {
                first_failure = Some(format!("{name} diagram fails on {}", tableau_to_json(&t)));
            }
        }
        writeln!(out, "{name} diagram: {passed} of {total} tableaux commute").unwrap();
        Ok(())
    };
    tally("naimark", &mut rectangular_domain(n, d), &|t| verify_naimark_diagram(t, n, d))?;
    tally("boxcomp", &mut boxcomp_domain(n, d), &|t| verify_boxcomp_diagram(t, n))?;
    match first_failure {
        None => Ok(out),
        Some(message) => Err(Failure { usage: false, message, stdout: out }),
    }
}

fn render_document(doc: Document, format: Format) -> Output {
    match doc {
        Document::Tableau(t) => Ok(render::tableau(&checked_tableau(t)?, format)),
        Document::Pattern(p) => Ok(render::pattern(&checked(p)?, format)),
        Document::Matrix(_) => Err(Failure::usage("render needs a tableau or GT pattern")),
    }
}
