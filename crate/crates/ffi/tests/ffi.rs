//! Exercises the C surface the way a foreign caller would: everything in
//! terms of raw pointers, statuses, and strings, with explicit frees.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use extrop_ffi::*;
use serde_json::Value;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Copies a returned string to Rust and releases the C allocation.
unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    extrop_string_free(p);
    s
}

unsafe fn parse_matrix(json: &str) -> *mut ExtropMatrix {
    let c = cstr(json);
    let mut out = ptr::null_mut();
    assert_eq!(extrop_matrix_parse(c.as_ptr(), &mut out), ExtropStatus::Ok);
    assert!(!out.is_null());
    out
}

unsafe fn matrix_json(m: *const ExtropMatrix) -> Value {
    let mut out = ptr::null_mut();
    assert_eq!(extrop_matrix_to_json(m, &mut out), ExtropStatus::Ok);
    serde_json::from_str(&take_string(out)).unwrap()
}

unsafe fn det_json(m: *const ExtropMatrix, method: ExtropDetMethod) -> Value {
    let mut out = ptr::null_mut();
    assert_eq!(extrop_matrix_det(m, method, &mut out), ExtropStatus::Ok);
    serde_json::from_str(&take_string(out)).unwrap()
}

#[test]
fn scalar_arithmetic_and_errors() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            extrop_scalar_add(cstr("2").as_ptr(), cstr("2").as_ptr(), &mut out),
            ExtropStatus::Ok
        );
        assert_eq!(take_string(out), "2v");

        let mut out = ptr::null_mut();
        assert_eq!(
            extrop_scalar_mul(cstr("2").as_ptr(), cstr("3").as_ptr(), &mut out),
            ExtropStatus::Ok
        );
        assert_eq!(take_string(out), "5");

        let mut out = ptr::null_mut();
        assert_eq!(
            extrop_scalar_mul(cstr("2v").as_ptr(), cstr("-inf").as_ptr(), &mut out),
            ExtropStatus::Ok
        );
        assert_eq!(take_string(out), "-inf");

        let mut out = ptr::null_mut();
        assert_eq!(
            extrop_scalar_add(cstr("-3/2").as_ptr(), cstr("-3/2v").as_ptr(), &mut out),
            ExtropStatus::Ok
        );
        assert_eq!(take_string(out), "-3/2v");

        // error paths: bad literal, NULL, invalid UTF-8; out stays untouched
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            extrop_scalar_add(cstr("lots").as_ptr(), cstr("0").as_ptr(), &mut out),
            ExtropStatus::ParseError
        );
        assert!(out.is_null());
        assert_eq!(
            extrop_scalar_add(ptr::null(), cstr("0").as_ptr(), &mut out),
            ExtropStatus::NullArgument
        );
        let bad = c"\xff\xfe";
        assert_eq!(
            extrop_scalar_add(bad.as_ptr(), cstr("0").as_ptr(), &mut out),
            ExtropStatus::InvalidUtf8
        );
        assert_eq!(
            extrop_scalar_add(cstr("0").as_ptr(), cstr("1").as_ptr(), ptr::null_mut()),
            ExtropStatus::NullArgument
        );
        assert!(out.is_null());
    }
}

#[test]
fn matrix_round_trip_and_determinants() {
    unsafe {
        let a = parse_matrix(r#"{"rows":[["1","1"],["2","3"]]}"#);

        let (mut rows, mut cols) = (0usize, 0usize);
        assert_eq!(extrop_matrix_shape(a, &mut rows, &mut cols), ExtropStatus::Ok);
        assert_eq!((rows, cols), (2, 2));

        let mut out = ptr::null_mut();
        assert_eq!(extrop_matrix_entry(a, 1, 0, &mut out), ExtropStatus::Ok);
        assert_eq!(take_string(out), "2");
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(extrop_matrix_entry(a, 2, 0, &mut out), ExtropStatus::ShapeError);
        assert!(out.is_null());

        let naive = det_json(a, ExtropDetMethod::Naive);
        assert_eq!(naive["value"], "4");
        assert_eq!(naive["tag"], "real");
        assert_eq!(naive["optimal_count"], 1);
        assert_eq!(naive["uses_nu_entry"], false);
        assert_eq!(det_json(a, ExtropDetMethod::Fast), naive);

        // singular by ties: determinant picks up a ghost tag
        let s = parse_matrix(r#"{"rows":[["1","2"],["2","3"]]}"#);
        let d = det_json(s, ExtropDetMethod::Naive);
        assert_eq!(d["value"], "4v");
        assert_eq!(d["tag"], "nu");
        assert_eq!(d["optimal_count"], 2);

        // product and round trip through JSON
        let mut sq = ptr::null_mut();
        assert_eq!(extrop_matrix_mul(a, a, &mut sq), ExtropStatus::Ok);
        assert_eq!(
            matrix_json(sq),
            serde_json::json!({"rows": [["3", "4"], ["5", "6"]]})
        );
        let d = det_json(sq, ExtropDetMethod::Fast);
        assert_eq!(d["value"], "9v");
        assert_eq!(d["tag"], "nu");

        let wide = parse_matrix(r#"{"rows":[["0","1"]]}"#);
        let mut bad = ptr::null_mut();
        assert_eq!(extrop_matrix_mul(a, wide, &mut bad), ExtropStatus::ShapeError);
        assert!(bad.is_null());
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            extrop_matrix_det(wide, ExtropDetMethod::Naive, &mut out),
            ExtropStatus::ShapeError
        );

        let c = cstr("not json");
        let mut m = ptr::null_mut();
        assert_eq!(extrop_matrix_parse(c.as_ptr(), &mut m), ExtropStatus::ParseError);
        assert!(m.is_null());

        for h in [a, s, sq, wide] {
            extrop_matrix_free(h);
        }
        extrop_matrix_free(ptr::null_mut());
        extrop_string_free(ptr::null_mut());
    }
}

#[test]
fn from_literals_matches_parse() {
    unsafe {
        let entries = [cstr("1"), cstr("-1"), cstr("2"), cstr("2v")];
        let ptrs: Vec<*const c_char> = entries.iter().map(|c| c.as_ptr()).collect();
        let mut m = ptr::null_mut();
        assert_eq!(
            extrop_matrix_from_literals(2, 2, ptrs.as_ptr(), &mut m),
            ExtropStatus::Ok
        );
        assert_eq!(
            matrix_json(m),
            serde_json::json!({"rows": [["1", "-1"], ["2", "2v"]]})
        );
        extrop_matrix_free(m);

        let mut m: *mut ExtropMatrix = ptr::null_mut();
        assert_eq!(
            extrop_matrix_from_literals(0, 2, ptrs.as_ptr(), &mut m),
            ExtropStatus::ShapeError
        );
        let bad = [cstr("1"), cstr("x"), cstr("2"), cstr("3")];
        let bad_ptrs: Vec<*const c_char> = bad.iter().map(|c| c.as_ptr()).collect();
        assert_eq!(
            extrop_matrix_from_literals(2, 2, bad_ptrs.as_ptr(), &mut m),
            ExtropStatus::ParseError
        );
        assert!(m.is_null());
    }
}

#[test]
fn inverse_regularity_and_pseudo_units() {
    unsafe {
        let a = parse_matrix(r#"{"rows":[["1","-1"],["2","2"]]}"#);

        let mut regular = false;
        assert_eq!(extrop_matrix_is_regular(a, &mut regular), ExtropStatus::Ok);
        assert!(regular);

        let mut inv = ptr::null_mut();
        assert_eq!(extrop_matrix_pseudo_inverse(a, &mut inv), ExtropStatus::Ok);
        assert_eq!(
            matrix_json(inv),
            serde_json::json!({"rows": [["-1", "-4"], ["-1", "-2"]]})
        );

        let mut pair = false;
        assert_eq!(extrop_matrix_check_pair(a, inv, &mut pair), ExtropStatus::Ok);
        assert!(pair);

        let mut unit = ptr::null_mut();
        assert_eq!(extrop_matrix_mul(a, inv, &mut unit), ExtropStatus::Ok);
        let mut is_unit = false;
        assert_eq!(extrop_matrix_is_pseudo_unit(unit, &mut is_unit), ExtropStatus::Ok);
        assert!(is_unit);

        let mut adj = ptr::null_mut();
        assert_eq!(extrop_matrix_adjoint(a, &mut adj), ExtropStatus::Ok);
        assert_eq!(
            matrix_json(adj),
            serde_json::json!({"rows": [["2", "-1"], ["2", "1"]]})
        );

        // transpose is its own involution
        let mut t = ptr::null_mut();
        assert_eq!(extrop_matrix_transpose(a, &mut t), ExtropStatus::Ok);
        let mut tt = ptr::null_mut();
        assert_eq!(extrop_matrix_transpose(t, &mut tt), ExtropStatus::Ok);
        assert_eq!(matrix_json(tt), matrix_json(a));

        // determinant -inf: no pseudo inverse at all
        let z = parse_matrix(r#"{"rows":[["0","-inf"],["0","-inf"]]}"#);
        let mut zinv: *mut ExtropMatrix = ptr::null_mut();
        assert_eq!(extrop_matrix_pseudo_inverse(z, &mut zinv), ExtropStatus::Singular);
        assert!(zinv.is_null());
        let mut regular = true;
        assert_eq!(extrop_matrix_is_regular(z, &mut regular), ExtropStatus::Ok);
        assert!(!regular);

        for h in [a, inv, unit, adj, t, tt, z] {
            extrop_matrix_free(h);
        }
    }
}

#[test]
fn naive_cap_respected_where_fast_succeeds() {
    unsafe {
        let n = EXTROP_NAIVE_DET_CAP + 1;
        let entries: Vec<CString> = (0..n * n).map(|k| cstr(&format!("{}", k % 7))).collect();
        let ptrs: Vec<*const c_char> = entries.iter().map(|c| c.as_ptr()).collect();
        let mut m = ptr::null_mut();
        assert_eq!(
            extrop_matrix_from_literals(n, n, ptrs.as_ptr(), &mut m),
            ExtropStatus::Ok
        );
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            extrop_matrix_det(m, ExtropDetMethod::Naive, &mut out),
            ExtropStatus::ShapeError
        );
        assert!(out.is_null());
        let d = det_json(m, ExtropDetMethod::Fast);
        assert!(d["value"].is_string());
        extrop_matrix_free(m);
    }
}

#[test]
fn law_harness_over_ffi() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(extrop_law_ids(&mut out), ExtropStatus::Ok);
        let ids: Vec<String> = serde_json::from_str(&take_string(out)).unwrap();
        assert!(ids.len() >= 14);
        assert!(ids.iter().any(|i| i == "semiring-axioms"));

        let (mut total, mut failures) = (0usize, 0usize);
        assert_eq!(
            extrop_run_law(
                cstr("identical-rows").as_ptr(),
                7,
                50,
                2,
                4,
                &mut total,
                &mut failures
            ),
            ExtropStatus::Ok
        );
        assert_eq!((total, failures), (50, 0));

        assert_eq!(
            extrop_run_law(cstr("no-such-law").as_ptr(), 0, 10, 2, 3, &mut total, &mut failures),
            ExtropStatus::ParseError
        );
        assert_eq!(
            extrop_run_law(cstr("freshman").as_ptr(), 0, 0, 2, 3, &mut total, &mut failures),
            ExtropStatus::ParseError
        );
    }
}

#[test]
fn polynomial_evaluation() {
    unsafe {
        let json = cstr(r#"{"vars":1,"monomials":[{"exp":[2],"coef":"0"},{"exp":[0],"coef":"0"}]}"#);
        let mut p = ptr::null_mut();
        assert_eq!(extrop_poly_parse(json.as_ptr(), &mut p), ExtropStatus::Ok);

        let mut vars = 0usize;
        assert_eq!(extrop_poly_num_vars(p, &mut vars), ExtropStatus::Ok);
        assert_eq!(vars, 1);

        // x^2 + 0 corners at x = 0, where both monomials tie
        let at_zero = [cstr("0")];
        let pt: Vec<*const c_char> = at_zero.iter().map(|c| c.as_ptr()).collect();
        let mut value = ptr::null_mut();
        let mut in_zero_set = false;
        assert_eq!(
            extrop_poly_eval(p, pt.as_ptr(), 1, &mut value, &mut in_zero_set),
            ExtropStatus::Ok
        );
        assert_eq!(take_string(value), "0v");
        assert!(in_zero_set);

        let at_one = [cstr("1")];
        let pt: Vec<*const c_char> = at_one.iter().map(|c| c.as_ptr()).collect();
        let mut value = ptr::null_mut();
        assert_eq!(
            extrop_poly_eval(p, pt.as_ptr(), 1, &mut value, &mut in_zero_set),
            ExtropStatus::Ok
        );
        assert_eq!(take_string(value), "2");
        assert!(!in_zero_set);

        let two = [cstr("0"), cstr("0")];
        let pt: Vec<*const c_char> = two.iter().map(|c| c.as_ptr()).collect();
        let mut value: *mut c_char = ptr::null_mut();
        assert_eq!(
            extrop_poly_eval(p, pt.as_ptr(), 2, &mut value, &mut in_zero_set),
            ExtropStatus::ArityError
        );
        assert!(value.is_null());

        let bad = cstr(r#"{"vars":1,"monomials":[]}"#);
        let mut q: *mut ExtropPoly = ptr::null_mut();
        assert_eq!(extrop_poly_parse(bad.as_ptr(), &mut q), ExtropStatus::ParseError);
        assert!(q.is_null());

        extrop_poly_free(p);
        extrop_poly_free(ptr::null_mut());
    }
}

#[test]
fn series_valuation() {
    unsafe {
        let json = cstr(r#"{"terms":[{"exp":"-2","coef":"1"},{"exp":"1/2","coef":"-3"}]}"#);
        let mut s = ptr::null_mut();
        assert_eq!(extrop_series_parse(json.as_ptr(), &mut s), ExtropStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(extrop_series_val(s, &mut out), ExtropStatus::Ok);
        assert_eq!(take_string(out), "2");
        extrop_series_free(s);

        let zero = cstr(r#"{"terms":[]}"#);
        let mut s = ptr::null_mut();
        assert_eq!(extrop_series_parse(zero.as_ptr(), &mut s), ExtropStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(extrop_series_val(s, &mut out), ExtropStatus::Ok);
        assert_eq!(take_string(out), "-inf");
        extrop_series_free(s);
        extrop_series_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_is_in_sync() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("extrop.h");
    let text = std::fs::read_to_string(&header)
        .unwrap_or_else(|e| panic!("missing {}: {e}", header.display()));
    for needle in [
        "typedef struct ExtropMatrix ExtropMatrix;",
        "typedef struct ExtropPoly ExtropPoly;",
        "typedef struct ExtropSeries ExtropSeries;",
        "EXTROP_STATUS_OK = 0",
        "EXTROP_STATUS_SINGULAR = 5",
        "enum ExtropStatus extrop_matrix_det(",
        "enum ExtropStatus extrop_run_law(",
        "void extrop_string_free(char *s);",
        "#define EXTROP_NAIVE_DET_CAP 10",
    ] {
        assert!(text.contains(needle), "header lacks {needle:?}");
    }
}
