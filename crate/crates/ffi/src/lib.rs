//! C bindings for the `extrop` extended tropical semiring library.
//!
//! Conventions across the whole surface:
//!
//! - Every function returns an [`ExtropStatus`]; results come back through
//!   out-pointers, which are written only on `Ok`.
//! - Scalars cross the boundary as NUL-terminated UTF-8 literals in the same
//!   format the CLI uses: `"3"`, `"-5/2"`, `"4v"` (ghost), `"-inf"`.
//! - Matrices, polynomials and series are opaque handles created from the
//!   CLI's JSON documents and released with their matching `*_free`.
//! - Strings returned through out-pointers are heap-allocated; release them
//!   with [`extrop_string_free`]. Handles and strings must be freed exactly
//!   once; all `*_free` functions accept NULL as a no-op.
//! - Passing a pointer that is non-NULL but invalid (dangling, unaligned,
//!   not from this library) is undefined behaviour everywhere below.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use extrop::laws::{law_ids, run_law, GenConfig, LawError};
use extrop::linalg::{adjoint, check_inverse_pair, is_pseudo_unit, is_regular, pseudo_inverse};
use extrop::matrix::{det_fast, det_naive_with_cap, MatrixError};
use extrop::poly::PolyError;
use extrop::{PuiseuxPoly, TropMatrix, TropPoly, TropScalar};

/// Cap on the dimension accepted by the permanent-style enumeration in
/// [`extrop_matrix_det`] with [`ExtropDetMethod::Naive`]; mirrors the CLI
/// default. The fast method has no cap.
pub const EXTROP_NAIVE_DET_CAP: usize = 10;

/// Result of every call in this library.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtropStatus {
    /// Success; out-pointers have been written.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A scalar literal, JSON document, law id or configuration was invalid.
    ParseError = 3,
    /// Dimensions were unusable: not square, mismatched, out of range, or
    /// past the naive determinant cap.
    ShapeError = 4,
    /// The matrix has determinant -inf, so no pseudo inverse exists.
    Singular = 5,
    /// A point or polynomial had the wrong number of variables.
    ArityError = 6,
    /// An unexpected internal failure; the out-pointers are untouched.
    InternalError = 7,
}

/// Which determinant algorithm [`extrop_matrix_det`] runs.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtropDetMethod {
    /// Enumerate all permutations; exact count of optima, capped at
    /// [`EXTROP_NAIVE_DET_CAP`].
    Naive = 0,
    /// Assignment-problem solver; uniqueness report collapses to
    /// "unique" / "not unique" but value and tag are always exact.
    Fast = 1,
}

/// Opaque handle to a matrix over the extended tropical semiring.
pub struct ExtropMatrix(TropMatrix);

/// Opaque handle to a tropical polynomial.
pub struct ExtropPoly(TropPoly);

/// Opaque handle to a Puiseux series with rational exponents.
pub struct ExtropSeries(PuiseuxPoly);

fn matrix_status(e: &MatrixError) -> ExtropStatus {
    match e {
        MatrixError::SingularNegInf => ExtropStatus::Singular,
        _ => ExtropStatus::ShapeError,
    }
}

fn poly_status(e: &PolyError) -> ExtropStatus {
    match e {
        PolyError::ArityMismatch { .. } | PolyError::UnsupportedArity { .. } => {
            ExtropStatus::ArityError
        }
        _ => ExtropStatus::ParseError,
    }
}

fn law_status(e: &LawError) -> ExtropStatus {
    match e {
        LawError::UnknownLaw(_) | LawError::BadConfig(_) => ExtropStatus::ParseError,
        LawError::PreconditionFailed(_) => ExtropStatus::InternalError,
    }
}

/// Runs `body`, converting any panic into `InternalError` so unwinding
/// never crosses the C boundary.
fn guard(body: impl FnOnce() -> ExtropStatus) -> ExtropStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(ExtropStatus::InternalError)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, ExtropStatus> {
    if p.is_null() {
        return Err(ExtropStatus::NullArgument);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| ExtropStatus::InvalidUtf8)
}

unsafe fn read_scalar(p: *const c_char) -> Result<TropScalar, ExtropStatus> {
    let s = read_str(p)?;
    TropScalar::from_str(s).map_err(|_| ExtropStatus::ParseError)
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> ExtropStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            ExtropStatus::Ok
        }
        Err(_) => ExtropStatus::InternalError,
    }
}

unsafe fn write_handle<T>(value: T, out: *mut *mut T) -> ExtropStatus {
    *out = Box::into_raw(Box::new(value));
    ExtropStatus::Ok
}

unsafe fn matrix_arg<'a>(m: *const ExtropMatrix) -> Result<&'a TropMatrix, ExtropStatus> {
    m.as_ref().map(|m| &m.0).ok_or(ExtropStatus::NullArgument)
}

// ---------------------------------------------------------------------------
// strings
// ---------------------------------------------------------------------------

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer previously returned through a string
/// out-parameter of this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn extrop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// scalar arithmetic
// ---------------------------------------------------------------------------

/// Tropical sum of two scalar literals, written to `out` as a literal.
///
/// # Safety
/// `a` and `b` must be NUL-terminated strings; `out` must be a valid
/// pointer. The string written to `out` must be released with
/// [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_scalar_add(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let (x, y) = match (read_scalar(a), read_scalar(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        write_string(x.add(&y).to_string(), out)
    })
}

/// Tropical product of two scalar literals, written to `out` as a literal.
///
/// # Safety
/// Same contract as [`extrop_scalar_add`].
#[no_mangle]
pub unsafe extern "C" fn extrop_scalar_mul(
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut c_char,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let (x, y) = match (read_scalar(a), read_scalar(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        write_string(x.mul(&y).to_string(), out)
    })
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

/// Parses a matrix from a JSON document `{"rows": [["1", "-1"], ["2", "2v"]]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer. The
/// handle written to `out` must be released with [`extrop_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_parse(
    json: *const c_char,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(e) => return e,
        };
        match serde_json::from_str::<TropMatrix>(text) {
            Ok(m) => write_handle(ExtropMatrix(m), out),
            Err(_) => ExtropStatus::ParseError,
        }
    })
}

/// Builds a `rows` x `cols` matrix from `rows * cols` scalar literals in
/// row-major order.
///
/// # Safety
/// `entries` must point to `rows * cols` NUL-terminated strings; `out`
/// must be a valid pointer. The handle written to `out` must be released
/// with [`extrop_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_from_literals(
    rows: usize,
    cols: usize,
    entries: *const *const c_char,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    guard(|| {
        if entries.is_null() || out.is_null() {
            return ExtropStatus::NullArgument;
        }
        if rows == 0 || cols == 0 {
            return ExtropStatus::ShapeError;
        }
        let mut parsed = Vec::with_capacity(rows * cols);
        for k in 0..rows * cols {
            match read_scalar(*entries.add(k)) {
                Ok(s) => parsed.push(s),
                Err(e) => return e,
            }
        }
        let m = TropMatrix::from_fn(rows, cols, |i, j| parsed[i * cols + j].clone());
        write_handle(ExtropMatrix(m), out)
    })
}

/// Releases a matrix handle. NULL is a no-op.
///
/// # Safety
/// `m` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_free(m: *mut ExtropMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Writes the dimensions of `m`.
///
/// # Safety
/// `m` must be a valid handle; `rows` and `cols` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_shape(
    m: *const ExtropMatrix,
    rows: *mut usize,
    cols: *mut usize,
) -> ExtropStatus {
    guard(|| {
        if rows.is_null() || cols.is_null() {
            return ExtropStatus::NullArgument;
        }
        match matrix_arg(m) {
            Ok(a) => {
                *rows = a.rows();
                *cols = a.cols();
                ExtropStatus::Ok
            }
            Err(e) => e,
        }
    })
}

/// Writes entry `(i, j)` of `m` as a scalar literal.
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer. The string
/// written to `out` must be released with [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_entry(
    m: *const ExtropMatrix,
    i: usize,
    j: usize,
    out: *mut *mut c_char,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let a = match matrix_arg(m) {
            Ok(a) => a,
            Err(e) => return e,
        };
        if i >= a.rows() || j >= a.cols() {
            return ExtropStatus::ShapeError;
        }
        write_string(a.get(i, j).to_string(), out)
    })
}

/// Serializes `m` to the JSON document format accepted by
/// [`extrop_matrix_parse`].
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer. The string
/// written to `out` must be released with [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_to_json(
    m: *const ExtropMatrix,
    out: *mut *mut c_char,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match matrix_arg(m) {
            Ok(a) => match serde_json::to_string(a) {
                Ok(text) => write_string(text, out),
                Err(_) => ExtropStatus::InternalError,
            },
            Err(e) => e,
        }
    })
}

unsafe fn matrix_binop(
    a: *const ExtropMatrix,
    b: *const ExtropMatrix,
    out: *mut *mut ExtropMatrix,
    op: impl Fn(&TropMatrix, &TropMatrix) -> Result<TropMatrix, MatrixError>,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let (x, y) = match (matrix_arg(a), matrix_arg(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        match op(x, y) {
            Ok(m) => write_handle(ExtropMatrix(m), out),
            Err(e) => matrix_status(&e),
        }
    })
}

/// Entrywise tropical sum `a + b`.
///
/// # Safety
/// `a` and `b` must be valid handles of equal shape; `out` must be a valid
/// pointer. The handle written to `out` must be released with
/// [`extrop_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_add(
    a: *const ExtropMatrix,
    b: *const ExtropMatrix,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    matrix_binop(a, b, out, |x, y| x.mat_add(y))
}

/// Tropical matrix product `a * b`.
///
/// # Safety
/// Same contract as [`extrop_matrix_add`], with inner dimensions agreeing.
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_mul(
    a: *const ExtropMatrix,
    b: *const ExtropMatrix,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    matrix_binop(a, b, out, |x, y| x.mat_mul(y))
}

/// Transpose of `m`.
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer. The handle
/// written to `out` must be released with [`extrop_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_transpose(
    m: *const ExtropMatrix,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match matrix_arg(m) {
            Ok(a) => write_handle(ExtropMatrix(a.transpose()), out),
            Err(e) => e,
        }
    })
}

/// Tropical determinant of `m`, written to `out` as a JSON document
/// `{"value": "4", "tag": "real", "optimal_count": 1, "uses_nu_entry": false}`
/// where `optimal_count` is `1`, `2` or `">=2"`.
///
/// With [`ExtropDetMethod::Naive`] the dimension is capped at
/// [`EXTROP_NAIVE_DET_CAP`]; past the cap the call fails with `ShapeError`.
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer. The string
/// written to `out` must be released with [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_det(
    m: *const ExtropMatrix,
    method: ExtropDetMethod,
    out: *mut *mut c_char,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let a = match matrix_arg(m) {
            Ok(a) => a,
            Err(e) => return e,
        };
        let result = match method {
            ExtropDetMethod::Naive => det_naive_with_cap(a, EXTROP_NAIVE_DET_CAP),
            ExtropDetMethod::Fast => det_fast(a),
        };
        match result {
            Ok(d) => match serde_json::to_string(&d) {
                Ok(text) => write_string(text, out),
                Err(_) => ExtropStatus::InternalError,
            },
            Err(e) => matrix_status(&e),
        }
    })
}

/// Writes whether `m` is regular (determinant is a real, untagged value).
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_is_regular(
    m: *const ExtropMatrix,
    out: *mut bool,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let a = match matrix_arg(m) {
            Ok(a) => a,
            Err(e) => return e,
        };
        match is_regular(a) {
            Ok(v) => {
                *out = v;
                ExtropStatus::Ok
            }
            Err(e) => matrix_status(&e),
        }
    })
}

/// Adjoint of `m` (matrix of cofactor determinants, transposed).
///
/// # Safety
/// Same contract as [`extrop_matrix_transpose`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_adjoint(
    m: *const ExtropMatrix,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match matrix_arg(m) {
            Ok(a) => match adjoint(a) {
                Ok(adj) => write_handle(ExtropMatrix(adj), out),
                Err(e) => matrix_status(&e),
            },
            Err(e) => e,
        }
    })
}

/// Pseudo inverse of `m`: the adjoint divided by the determinant. Fails
/// with `Singular` when the determinant is -inf.
///
/// # Safety
/// Same contract as [`extrop_matrix_transpose`].
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_pseudo_inverse(
    m: *const ExtropMatrix,
    out: *mut *mut ExtropMatrix,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match matrix_arg(m) {
            Ok(a) => match pseudo_inverse(a) {
                Ok(inv) => write_handle(ExtropMatrix(inv), out),
                Err(e) => matrix_status(&e),
            },
            Err(e) => e,
        }
    })
}

/// Writes whether `m` is a pseudo unit: real 0 on the diagonal, ghost or
/// -inf entries bounded by 0 off it.
///
/// # Safety
/// `m` must be a valid handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_is_pseudo_unit(
    m: *const ExtropMatrix,
    out: *mut bool,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let a = match matrix_arg(m) {
            Ok(a) => a,
            Err(e) => return e,
        };
        match is_pseudo_unit(a) {
            Ok(v) => {
                *out = v.is_pseudo_unit;
                ExtropStatus::Ok
            }
            Err(e) => matrix_status(&e),
        }
    })
}

/// Writes whether `a` and `b` form an inverse pair: both products are
/// pseudo units that square to themselves.
///
/// # Safety
/// `a` and `b` must be valid handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn extrop_matrix_check_pair(
    a: *const ExtropMatrix,
    b: *const ExtropMatrix,
    out: *mut bool,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let (x, y) = match (matrix_arg(a), matrix_arg(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(e), _) | (_, Err(e)) => return e,
        };
        match check_inverse_pair(x, y) {
            Ok(v) => {
                *out = v;
                ExtropStatus::Ok
            }
            Err(e) => matrix_status(&e),
        }
    })
}

// ---------------------------------------------------------------------------
// law harness
// ---------------------------------------------------------------------------

/// Writes the known law identifiers as a JSON array of strings.
///
/// # Safety
/// `out` must be a valid pointer. The string written to `out` must be
/// released with [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_law_ids(out: *mut *mut c_char) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match serde_json::to_string(&law_ids()) {
            Ok(text) => write_string(text, out),
            Err(_) => ExtropStatus::InternalError,
        }
    })
}

/// Runs the law `law_id` on `count` generated instances with matrix
/// dimensions drawn from `dim_lo..=dim_hi`, writing the number of instances
/// checked and the number that failed. Unknown ids and unusable
/// configurations fail with `ParseError`.
///
/// # Safety
/// `law_id` must be a NUL-terminated string; `out_total` and
/// `out_failures` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn extrop_run_law(
    law_id: *const c_char,
    seed: u64,
    count: usize,
    dim_lo: usize,
    dim_hi: usize,
    out_total: *mut usize,
    out_failures: *mut usize,
) -> ExtropStatus {
    guard(|| {
        if out_total.is_null() || out_failures.is_null() {
            return ExtropStatus::NullArgument;
        }
        let id = match read_str(law_id) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let cfg = GenConfig {
            seed,
            count,
            dims: (dim_lo, dim_hi),
            ..GenConfig::default()
        };
        match run_law(id, &cfg) {
            Ok(reports) => {
                *out_total = reports.len();
                *out_failures = reports.iter().filter(|r| !r.passed()).count();
                ExtropStatus::Ok
            }
            Err(e) => law_status(&e),
        }
    })
}

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

/// Parses a tropical polynomial from a JSON document
/// `{"vars": 2, "monomials": [{"exp": [1, 0], "coef": "0"}]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer. The
/// handle written to `out` must be released with [`extrop_poly_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_poly_parse(
    json: *const c_char,
    out: *mut *mut ExtropPoly,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(e) => return e,
        };
        match serde_json::from_str::<TropPoly>(text) {
            Ok(p) => write_handle(ExtropPoly(p), out),
            Err(_) => ExtropStatus::ParseError,
        }
    })
}

/// Releases a polynomial handle. NULL is a no-op.
///
/// # Safety
/// `p` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn extrop_poly_free(p: *mut ExtropPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Writes the number of variables of `p`.
///
/// # Safety
/// `p` must be a valid handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn extrop_poly_num_vars(
    p: *const ExtropPoly,
    out: *mut usize,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match p.as_ref() {
            Some(p) => {
                *out = p.0.num_vars();
                ExtropStatus::Ok
            }
            None => ExtropStatus::NullArgument,
        }
    })
}

/// Evaluates `p` at a point given as `len` scalar literals. Writes the
/// value as a literal and whether the point lies in the corner locus (the
/// evaluation is a ghost or -inf).
///
/// # Safety
/// `p` must be a valid handle; `point` must hold `len` NUL-terminated
/// strings; `out_value` and `out_in_zero_set` must be valid pointers. The
/// string written to `out_value` must be released with
/// [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_poly_eval(
    p: *const ExtropPoly,
    point: *const *const c_char,
    len: usize,
    out_value: *mut *mut c_char,
    out_in_zero_set: *mut bool,
) -> ExtropStatus {
    guard(|| {
        if point.is_null() || out_value.is_null() || out_in_zero_set.is_null() {
            return ExtropStatus::NullArgument;
        }
        let poly = match p.as_ref() {
            Some(p) => &p.0,
            None => return ExtropStatus::NullArgument,
        };
        let mut coords = Vec::with_capacity(len);
        for k in 0..len {
            match read_scalar(*point.add(k)) {
                Ok(s) => coords.push(s),
                Err(e) => return e,
            }
        }
        let value = match poly.eval(&coords) {
            Ok(v) => v,
            Err(e) => return poly_status(&e),
        };
        let in_zero_set = match poly.in_zero_set(&coords) {
            Ok(v) => v,
            Err(e) => return poly_status(&e),
        };
        *out_in_zero_set = in_zero_set;
        write_string(value.to_string(), out_value)
    })
}

// ---------------------------------------------------------------------------
// Puiseux series
// ---------------------------------------------------------------------------

/// Parses a Puiseux series from a JSON document
/// `{"terms": [{"exp": "-2", "coef": "1"}]}` with rational exponents.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer. The
/// handle written to `out` must be released with [`extrop_series_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_series_parse(
    json: *const c_char,
    out: *mut *mut ExtropSeries,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(e) => return e,
        };
        match serde_json::from_str::<PuiseuxPoly>(text) {
            Ok(s) => write_handle(ExtropSeries(s), out),
            Err(_) => ExtropStatus::ParseError,
        }
    })
}

/// Releases a series handle. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or an unfreed handle from this library.
#[no_mangle]
pub unsafe extern "C" fn extrop_series_free(s: *mut ExtropSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Writes the valuation of `s` (negated order of the series) as a scalar
/// literal; the zero series has valuation `-inf`.
///
/// # Safety
/// `s` must be a valid handle; `out` must be a valid pointer. The string
/// written to `out` must be released with [`extrop_string_free`].
#[no_mangle]
pub unsafe extern "C" fn extrop_series_val(
    s: *const ExtropSeries,
    out: *mut *mut c_char,
) -> ExtropStatus {
    guard(|| {
        if out.is_null() {
            return ExtropStatus::NullArgument;
        }
        match s.as_ref() {
            Some(s) => write_string(s.0.val().to_string(), out),
            None => ExtropStatus::NullArgument,
        }
    })
}
