use std::ffi::{c_char, CStr, CString};
use std::ptr;

use affine_cluster_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ac_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(ac_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn sequence_values() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(ac_sequence_new(1, 4, &mut seq), AcStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ac_sequence_eval_at_ones(seq, 12, &mut s), AcStatus::Ok);
        assert_eq!(take(s), "4667522");

        let mut x = ptr::null_mut();
        assert_eq!(ac_sequence_x(seq, 7, &mut x), AcStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(ac_laurent_to_string(x, false, &mut text), AcStatus::Ok);
        assert_eq!(
            take(text),
            "((x2+1)^5 + 2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8) / (x1^5*x2^2)"
        );
        ac_laurent_free(x);
        ac_sequence_free(seq);
    }
}

#[test]
fn invalid_case_reports_error() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(ac_sequence_new(0, 4, &mut seq), AcStatus::InvalidArgument);
        assert!(seq.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(ac_sequence_new(1, 4, ptr::null_mut()), AcStatus::NullPointer);
    }
}

#[test]
fn graph_matchings_equal_numerators() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(ac_sequence_new(1, 4, &mut seq), AcStatus::Ok);
        for n in [-4i64, -1, 0, 3, 6, 9] {
            let mut g = ptr::null_mut();
            assert_eq!(ac_graph_build(1, 4, AcFamily::Standard, n, &mut g), AcStatus::Ok);
            assert!(ac_graph_vertex_count(g) > 0);
            let mut count = ptr::null_mut();
            assert_eq!(ac_graph_match_count(g, &mut count), AcStatus::Ok);
            let mut value = ptr::null_mut();
            assert_eq!(ac_sequence_eval_at_ones(seq, n, &mut value), AcStatus::Ok);
            assert_eq!(take(count), take(value), "n = {n}");

            let mut p = ptr::null_mut();
            assert_eq!(ac_graph_match_polynomial(g, &mut p), AcStatus::Ok);
            let mut ones = ptr::null_mut();
            assert_eq!(ac_laurent_eval_at_ones(p, &mut ones), AcStatus::Ok);
            assert!(!take(ones).is_empty());
            ac_laurent_free(p);
            ac_graph_free(g);
        }
        ac_sequence_free(seq);
    }
}

#[test]
fn graph_errors_and_export() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            ac_graph_build(1, 4, AcFamily::Standard, 1, &mut g),
            AcStatus::IndexOutOfFamily
        );
        assert_eq!(
            ac_graph_build(1, 3, AcFamily::Standard, 5, &mut g),
            AcStatus::UnsupportedCase
        );
        assert_eq!(
            ac_graph_build(2, 2, AcFamily::Tilde, 5, &mut g),
            AcStatus::UnsupportedCase
        );
        assert_eq!(
            ac_graph_build(0, 0, AcFamily::Grid, -1, &mut g),
            AcStatus::InvalidArgument
        );
        assert!(g.is_null());

        assert_eq!(ac_graph_build(0, 0, AcFamily::Grid, 3, &mut g), AcStatus::Ok);
        assert_eq!(ac_graph_vertex_count(g), 6);
        assert_eq!(ac_graph_edge_count(g), 7);
        let mut json = ptr::null_mut();
        assert_eq!(ac_graph_export(g, AcFormat::Json, &mut json), AcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["vertices"], 6);
        let mut dot = ptr::null_mut();
        assert_eq!(ac_graph_export(g, AcFormat::Dot, &mut dot), AcStatus::Ok);
        assert!(take(dot).starts_with("graph"));
        ac_graph_free(g);
        assert_eq!(ac_graph_vertex_count(ptr::null()), 0);
    }
}

#[test]
fn laurent_arithmetic() {
    unsafe {
        let parse = |s: &str| {
            let text = CString::new(s).unwrap();
            let mut p = ptr::null_mut();
            assert_eq!(ac_laurent_parse(text.as_ptr(), &mut p), AcStatus::Ok, "{s}");
            p
        };
        let a = parse("x1 + x2^-1");
        let b = parse("x1 - 3");
        let mut prod = ptr::null_mut();
        assert_eq!(ac_laurent_mul(a, b, &mut prod), AcStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(ac_laurent_div_exact(prod, b, &mut back), AcStatus::Ok);
        assert!(ac_laurent_equal(back, a));
        assert!(!ac_laurent_equal(a, b));
        assert!(!ac_laurent_equal(a, ptr::null()));

        let c = parse("x1 + 2");
        let mut q = ptr::null_mut();
        assert_eq!(ac_laurent_div_exact(a, c, &mut q), AcStatus::NotDivisible);
        assert!(q.is_null());

        let mut json = ptr::null_mut();
        assert_eq!(ac_laurent_to_json(b, &mut json), AcStatus::Ok);
        assert_eq!(take(json), r#"[[1,0,"1"],[0,0,"-3"]]"#);

        let bad = CString::new("x3 +").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(ac_laurent_parse(bad.as_ptr(), &mut p), AcStatus::ParseError);
        assert_eq!(ac_laurent_parse(ptr::null(), &mut p), AcStatus::NullPointer);

        for h in [a, b, c, prod, back] {
            ac_laurent_free(h);
        }
    }
}

#[test]
fn suite_report() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(ac_verify_suite(4, &mut out), AcStatus::InvalidArgument);
        assert!(out.is_null());
        assert_eq!(ac_verify_suite(6, &mut out), AcStatus::Ok);
        let reports: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        let reports = reports.as_array().unwrap();
        assert!(reports.len() >= 18);
        assert!(reports.iter().all(|r| r["passed"] == true));
    }
}

#[test]
fn status_messages_are_static() {
    for s in [AcStatus::Ok, AcStatus::NotDivisible, AcStatus::Panic] {
        let msg = unsafe { CStr::from_ptr(ac_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = include_str!("../include/affine_cluster.h");
    for name in [
        "typedef struct AcLaurent AcLaurent;",
        "typedef struct AcGraph AcGraph;",
        "typedef struct AcSequence AcSequence;",
        "AC_STATUS_NOT_DIVISIBLE = 6",
        "AcStatus ac_sequence_new(uint32_t b, uint32_t c, AcSequence **out);",
        "void ac_string_free(char *s);",
        "AcStatus ac_verify_suite(int64_t max_index, char **out);",
    ] {
        assert!(header.contains(name), "missing `{name}`");
    }
}
