//! Exercises the C ABI from Rust: handle lifecycle, status codes, report
//! payloads and the thread-local error message.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use twistcheck_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    tc_string_free(ptr);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(tc_last_error_message())
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn version_is_a_static_string() {
    unsafe {
        let v = CStr::from_ptr(tc_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn builtin_table_lifecycle_and_counts() {
    unsafe {
        let mut table: *mut TcTable = ptr::null_mut();
        let spec = cstr("heisenberg:3");
        assert_eq!(tc_table_builtin(spec.as_ptr(), &mut table), TcStatus::TcOk);
        assert!(!table.is_null());

        let mut classes = 0usize;
        assert_eq!(tc_table_num_classes(table, &mut classes), TcStatus::TcOk);
        assert_eq!(classes, 11);
        let mut rows = 0usize;
        assert_eq!(tc_table_num_irreducibles(table, &mut rows), TcStatus::TcOk);
        assert_eq!(rows, 11);
        let mut embeddings = 0usize;
        assert_eq!(
            tc_table_num_embeddings(table, &mut embeddings),
            TcStatus::TcOk
        );
        assert_eq!(embeddings, 1);

        tc_table_free(table);
    }
}

#[test]
fn json_round_trip_through_the_boundary() {
    unsafe {
        let mut table: *mut TcTable = ptr::null_mut();
        let spec = cstr("cyclic:6");
        assert_eq!(tc_table_builtin(spec.as_ptr(), &mut table), TcStatus::TcOk);
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(tc_table_to_json(table, &mut json), TcStatus::TcOk);
        let document = take_string(json);
        tc_table_free(table);

        let mut reloaded: *mut TcTable = ptr::null_mut();
        let document_c = cstr(&document);
        assert_eq!(
            tc_table_load_json(document_c.as_ptr(), &mut reloaded),
            TcStatus::TcOk
        );
        let mut json2: *mut c_char = ptr::null_mut();
        assert_eq!(tc_table_to_json(reloaded, &mut json2), TcStatus::TcOk);
        assert_eq!(take_string(json2), document);
        tc_table_free(reloaded);
    }
}

#[test]
fn twist_report_payload() {
    unsafe {
        let mut table: *mut TcTable = ptr::null_mut();
        let spec = cstr("heisenberg:3");
        assert_eq!(tc_table_builtin(spec.as_ptr(), &mut table), TcStatus::TcOk);
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            tc_twist_report(table, 9, 10, 3, 0, &mut json),
            TcStatus::TcOk
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["equal_powers"], true);
        assert_eq!(report["twists"].as_array().unwrap().len(), 0);
        assert_eq!(report["branch"], "dual-twist");
        tc_table_free(table);
    }
}

#[test]
fn density_and_clifford_and_powers_reports() {
    unsafe {
        let mut table: *mut TcTable = ptr::null_mut();
        let spec = cstr("heisenberg:3");
        assert_eq!(tc_table_builtin(spec.as_ptr(), &mut table), TcStatus::TcOk);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            tc_density_report(table, 9, 10, 0, &mut json),
            TcStatus::TcOk
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["report"]["lambda_elem"], "25/27");

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(tc_clifford_report(table, 9, 0, &mut json), TcStatus::TcOk);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["induced_check"], true);

        let mode = cstr("sym");
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            tc_powers_report(table, 9, mode.as_ptr(), 2, &mut json),
            TcStatus::TcOk
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["genuine"], true);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(tc_table_validate(table, &mut json), TcStatus::TcOk);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["all_passed"], true);

        tc_table_free(table);
    }
}

#[test]
fn recover_and_demo() {
    unsafe {
        let weights = cstr(
            r#"{"rank": 1, "weights": [{"v": [2], "m": "1"}, {"v": [0], "m": "1"}, {"v": [-2], "m": "1"}]}"#,
        );
        let mode = cstr("sym");
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            tc_recover_weights(weights.as_ptr(), mode.as_ptr(), 2, 2, &mut json),
            TcStatus::TcOk
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["weights"]["weights"][0]["v"][0], 1);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(tc_demo_heisenberg(3, &mut json), TcStatus::TcOk);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["all_passed"], true);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        // Null arguments.
        let mut table: *mut TcTable = ptr::null_mut();
        assert_eq!(
            tc_table_builtin(ptr::null(), &mut table),
            TcStatus::TcNullArgument
        );
        let spec = cstr("s3");
        assert_eq!(
            tc_table_builtin(spec.as_ptr(), ptr::null_mut()),
            TcStatus::TcNullArgument
        );

        // Unknown spec: parse error with a message.
        let bad = cstr("nonsense");
        assert_eq!(
            tc_table_builtin(bad.as_ptr(), &mut table),
            TcStatus::TcParse
        );
        assert!(last_error().contains("nonsense"));

        // Composite Heisenberg parameter: precondition error.
        let bad = cstr("heisenberg:4");
        assert_eq!(
            tc_table_builtin(bad.as_ptr(), &mut table),
            TcStatus::TcPrecondition
        );
        assert!(last_error().contains("odd prime"));

        // Malformed table document.
        let bad = cstr("{ nope");
        assert_eq!(
            tc_table_load_json(bad.as_ptr(), &mut table),
            TcStatus::TcParse
        );

        // Out-of-range row index on a real table.
        let spec = cstr("s3");
        assert_eq!(tc_table_builtin(spec.as_ptr(), &mut table), TcStatus::TcOk);
        let mode = cstr("sym");
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            tc_powers_report(table, 99, mode.as_ptr(), 2, &mut json),
            TcStatus::TcPrecondition
        );
        assert!(last_error().contains("out of range"));
        tc_table_free(table);

        // Freeing null is a no-op.
        tc_table_free(ptr::null_mut());
        tc_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_the_api() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/twistcheck.h");
    let text = std::fs::read_to_string(header).expect("generated header");
    for symbol in [
        "typedef struct TcTable TcTable;",
        "tc_table_builtin",
        "tc_table_load_json",
        "tc_table_free",
        "tc_twist_report",
        "tc_density_report",
        "tc_clifford_report",
        "tc_powers_report",
        "tc_recover_weights",
        "tc_demo_heisenberg",
        "tc_string_free",
        "tc_last_error_message",
        "TC_OK",
    ] {
        assert!(text.contains(symbol), "header must declare {symbol}");
    }
}
