//! Command-line front end: determinants, pseudo inverses, law runs,
//! polynomial loci and valuation demos over the JSON file formats of the
//! library. All output is line-oriented JSON (CSV optionally for `locus`)
//! so the tool composes in shell pipelines.
//!
//! Exit codes are part of the contract:
//! - 2: unusable input (unreadable file, malformed JSON or literal, bad flag value)
//! - 3: shape error (non-square, dimension mismatch, unsupported arity,
//!   naive-determinant size cap exceeded)
//! - 4: `det --method both` disagreement (oracle check tripped)
//! - 5: `inv` on a matrix it cannot invert (`--strict` and singular, or
//!   determinant -inf)
//! - 1: `laws` observed at least one failing instance
//!
//! `EXTROP_NAIVE_CAP` overrides the size cap for the enumerating
//! determinant (default 10).

use std::fmt::Display;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde_json::json;

use extrop::laws::{self, summarize, GenConfig, LawError};
use extrop::linalg::{check_inverse_pair, invert, is_pseudo_unit, is_regular};
use extrop::matrix::{det_fast, det_naive_with_cap, MatrixError, DEFAULT_NAIVE_CAP};
use extrop::poly::{parse_box, PolyError};
use extrop::scalar::parse_rational;
use extrop::valuation::{ray_contains, PuiseuxPoly};
use extrop::{Tag, TropMatrix, TropPoly, TropScalar};

#[derive(Parser)]
#[command(
    name = "extrop",
    version,
    about = "Exact arithmetic over the extended tropical semiring",
    after_help = "Matrices, polynomials and series are JSON files; scalar literals are\n\
                  `-inf`, rationals like `-3/2` or `2.5`, and ghost values like `4v`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Naive,
    Fast,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LocusFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical determinant (= permanent) of a square matrix
    Det {
        /// Matrix file: {"rows": [["1", "-1"], ["2", "2v"]]}
        matrix: PathBuf,
        /// naive enumerates permutations, fast solves an assignment
        /// problem, both cross-checks them
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
    },
    /// Pseudo inverse A^∇ = Adj(A)/|A| with both unit products
    Inv {
        matrix: PathBuf,
        /// Exit with code 5 instead of reporting when the matrix is singular
        #[arg(long)]
        strict: bool,
    },
    /// Are A·B and B·A pseudo units?
    CheckPair { a: PathBuf, b: PathBuf },
    /// Classify a matrix as a pseudo unit (and idempotent or not)
    PseudoUnit { matrix: PathBuf },
    /// Tropical regularity: is the determinant an untagged real?
    Regular { matrix: PathBuf },
    /// Run registered algebraic laws; streams one JSON report per instance
    Laws {
        /// Law id, or "all"
        #[arg(long, default_value = "all")]
        law: String,
        /// Override the generator seed
        #[arg(long)]
        seed: Option<u64>,
        /// Override the instance count
        #[arg(long)]
        count: Option<usize>,
        /// Override matrix dimensions, "LO:HI" or a single size
        #[arg(long, value_parser = parse_dims)]
        dims: Option<(usize, usize)>,
        /// List law ids and exit
        #[arg(long)]
        list: bool,
    },
    /// Evaluate a tropical polynomial at a point
    PolyEval {
        /// Polynomial file: {"vars": 2, "monomials": [{"exp": [1, 0], "coef": "0"}]}
        poly: PathBuf,
        /// Comma-separated scalar literals, e.g. "1,-1/2v"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Classify grid points of a box as inside/outside the corner locus
    Locus {
        poly: PathBuf,
        /// Rational bounds per variable, e.g. "-2:2" or "-1:1,-1:1"
        #[arg(long = "box", allow_hyphen_values = true)]
        bounds: String,
        /// Rational grid step, e.g. "1" or "1/2"
        #[arg(long, allow_hyphen_values = true)]
        step: String,
        #[arg(long, value_enum, default_value = "json")]
        format: LocusFormat,
    },
    /// Valuations of Puiseux polynomials; with two files, the
    /// homomorphic-relation demo
    ValDemo {
        /// Series file: {"terms": [{"exp": "-2", "coef": "1"}]}
        f: PathBuf,
        g: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

impl From<MatrixError> for Failure {
    fn from(e: MatrixError) -> Self {
        let code = match e {
            MatrixError::SingularNegInf => 5,
            _ => 3,
        };
        fail(code, e)
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        let code = match e {
            PolyError::ArityMismatch { .. } | PolyError::UnsupportedArity { .. } => 3,
            _ => 2,
        };
        fail(code, e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn load<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| fail(2, format!("{} file {} is invalid: {e}", what, path.display())))
}

fn load_matrix(path: &Path) -> Result<TropMatrix, Failure> {
    load(path, "matrix")
}

fn naive_cap() -> Result<usize, Failure> {
    match std::env::var("EXTROP_NAIVE_CAP") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| fail(2, format!("invalid EXTROP_NAIVE_CAP value {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_NAIVE_CAP),
        Err(e) => Err(fail(2, format!("cannot read EXTROP_NAIVE_CAP: {e}"))),
    }
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let parse_one = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid dimension {t:?}"))
    };
    match s.split_once(':') {
        Some((lo, hi)) => Ok((parse_one(lo)?, parse_one(hi)?)),
        None => {
            let n = parse_one(s)?;
            Ok((n, n))
        }
    }
}

fn parse_step(s: &str) -> Result<BigRational, Failure> {
    parse_rational(s.trim()).map_err(|e| fail(2, format!("invalid step {s:?}: {e}")))
}

fn parse_point(s: &str) -> Result<Vec<TropScalar>, Failure> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|lit| {
            TropScalar::from_str(lit.trim())
                .map_err(|e| fail(2, format!("invalid point coordinate: {e}")))
        })
        .collect()
}

fn tag_name(tag: Tag) -> &'static str {
    match tag {
        Tag::NegInf => "neginf",
        Tag::Real => "real",
        Tag::Nu => "nu",
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).expect("serializable output");
    println!("{line}");
    Ok(())
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Det { matrix, method } => cmd_det(&matrix, method),
        Command::Inv { matrix, strict } => cmd_inv(&matrix, strict),
        Command::CheckPair { a, b } => {
            let (a, b) = (load_matrix(&a)?, load_matrix(&b)?);
            let pair = check_inverse_pair(&a, &b)?;
            print_json(&json!({ "is_inverse_pair": pair }))?;
            Ok(0)
        }
        Command::PseudoUnit { matrix } => {
            let a = load_matrix(&matrix)?;
            print_json(&is_pseudo_unit(&a)?)?;
            Ok(0)
        }
        Command::Regular { matrix } => {
            let a = load_matrix(&matrix)?;
            let result = extrop::det(&a)?;
            print_json(&json!({ "regular": !result.is_singular(), "det": result }))?;
            Ok(0)
        }
        Command::Laws {
            law,
            seed,
            count,
            dims,
            list,
        } => cmd_laws(&law, seed, count, dims, list),
        Command::PolyEval { poly, point } => {
            let f: TropPoly = load(&poly, "polynomial")?;
            let point = parse_point(&point)?;
            let value = f.eval(&point)?;
            print_json(&json!({
                "value": value.to_string(),
                "tag": tag_name(value.tag()),
                "in_zero_set": value.is_ghost(),
            }))?;
            Ok(0)
        }
        Command::Locus {
            poly,
            bounds,
            step,
            format,
        } => cmd_locus(&poly, &bounds, &step, format),
        Command::ValDemo { f, g } => cmd_val_demo(&f, g.as_deref()),
    }
}

fn cmd_det(path: &Path, method: Method) -> Result<u8, Failure> {
    let a = load_matrix(path)?;
    let result = match method {
        Method::Naive => det_naive_with_cap(&a, naive_cap()?)?,
        Method::Fast => det_fast(&a)?,
        Method::Both => {
            let naive = det_naive_with_cap(&a, naive_cap()?)?;
            let fast = det_fast(&a)?;
            let agree = naive.value == fast.value
                && naive.uses_nu_entry == fast.uses_nu_entry
                && naive.optimal_count.is_unique() == fast.optimal_count.is_unique();
            if !agree {
                return Err(fail(
                    4,
                    format!("determinant methods disagree: naive {naive:?}, fast {fast:?}"),
                ));
            }
            naive
        }
    };
    print_json(&result)?;
    Ok(0)
}

fn cmd_inv(path: &Path, strict: bool) -> Result<u8, Failure> {
    let a = load_matrix(path)?;
    if strict && !is_regular(&a)? {
        return Err(fail(5, "matrix is singular"));
    }
    let report = invert(&a)?;
    print_json(&report)?;
    Ok(0)
}

fn cmd_laws(
    law: &str,
    seed: Option<u64>,
    count: Option<usize>,
    dims: Option<(usize, usize)>,
    list: bool,
) -> Result<u8, Failure> {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    if list {
        for spec in laws::laws() {
            emit(&mut out, &json!({ "law_id": spec.id, "summary": spec.summary }))?;
        }
        out.flush().map_err(|e| fail(1, e))?;
        return Ok(0);
    }
    let selection: Vec<&laws::LawSpec> = if law == "all" {
        laws::laws().iter().collect()
    } else {
        vec![laws::find_law(law).map_err(|e| fail(2, e))?]
    };
    let mut total_instances = 0usize;
    let mut total_failures = 0usize;
    for spec in &selection {
        let mut cfg: GenConfig = spec.default_config();
        if let Some(seed) = seed {
            cfg.seed = seed;
        }
        if let Some(count) = count {
            cfg.count = count;
        }
        if let Some(dims) = dims {
            cfg.dims = dims;
        }
        let reports = laws::run_law(spec.id, &cfg).map_err(|e| match e {
            LawError::UnknownLaw(_) => fail(2, e),
            _ => fail(2, e),
        })?;
        for report in &reports {
            emit(&mut out, report)?;
        }
        let summary = summarize(spec.id, &reports);
        total_instances += summary.count;
        total_failures += summary.failed;
        emit(&mut out, &summary)?;
    }
    emit(
        &mut out,
        &json!({
            "laws": selection.len(),
            "instances": total_instances,
            "failures": total_failures,
            "all_passed": total_failures == 0,
        }),
    )?;
    out.flush().map_err(|e| fail(1, e))?;
    Ok(if total_failures == 0 { 0 } else { 1 })
}

fn emit<W: Write, T: serde::Serialize>(out: &mut W, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).expect("serializable output");
    writeln!(out, "{line}").map_err(|e| fail(1, e))
}

fn cmd_locus(path: &Path, bounds: &str, step: &str, format: LocusFormat) -> Result<u8, Failure> {
    let f: TropPoly = load(path, "polynomial")?;
    let bounds = parse_box(bounds).map_err(|e| fail(2, format!("invalid box: {e}")))?;
    let step = parse_step(step)?;
    let grid = f.corner_locus_grid(&bounds, &step)?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        LocusFormat::Json => {
            for gp in &grid {
                emit(&mut out, gp)?;
            }
        }
        LocusFormat::Csv => {
            let axes = ["x", "y"];
            let header: Vec<&str> = axes
                .iter()
                .take(bounds.len())
                .copied()
                .chain(["in_locus"])
                .collect();
            writeln!(out, "{}", header.join(",")).map_err(|e| fail(1, e))?;
            for gp in &grid {
                let mut fields: Vec<String> = gp
                    .point
                    .iter()
                    .map(extrop::scalar::rational_to_string)
                    .collect();
                fields.push(gp.in_locus.to_string());
                writeln!(out, "{}", fields.join(",")).map_err(|e| fail(1, e))?;
            }
        }
    }
    out.flush().map_err(|e| fail(1, e))?;
    Ok(0)
}

fn cmd_val_demo(f_path: &Path, g_path: Option<&Path>) -> Result<u8, Failure> {
    let f: PuiseuxPoly = load(f_path, "series")?;
    let Some(g_path) = g_path else {
        print_json(&json!({ "val": f.val().to_string() }))?;
        return Ok(0);
    };
    let g: PuiseuxPoly = load(g_path, "series")?;
    let (x, y) = (f.val(), g.val());
    let prod_anchor = x.mul(&y);
    let sum_anchor = x.add(&y);
    let val_prod = f.series_mul(&g).val();
    let val_sum = f.series_add(&g).val();
    let in_prod = ray_contains(&prod_anchor, &val_prod)
        .map_err(|e| fail(2, format!("product valuation: {e}")))?;
    let in_sum = ray_contains(&sum_anchor, &val_sum)
        .map_err(|e| fail(2, format!("sum valuation: {e}")))?;
    print_json(&json!({
        "val_f": x.to_string(),
        "val_g": y.to_string(),
        "product": {
            "val": val_prod.to_string(),
            "anchor": prod_anchor.to_string(),
            "in_ray": in_prod,
        },
        "sum": {
            "val": val_sum.to_string(),
            "anchor": sum_anchor.to_string(),
            "in_ray": in_sum,
        },
        "verdict": if in_prod && in_sum { "pass" } else { "fail" },
    }))?;
    Ok(0)
}
