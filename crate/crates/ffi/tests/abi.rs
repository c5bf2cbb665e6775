use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use khrank_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    khrank_string_free(p);
    s
}

#[test]
fn hopf_totals_through_handles() {
    unsafe {
        let mut d = ptr::null_mut();
        let pd = cstr("X(1,3,2,4);X(3,1,4,2)");
        assert_eq!(khrank_diagram_from_pd(pd.as_ptr(), &mut d), KhrankStatus::Ok);
        let mut n = 0usize;
        assert_eq!(khrank_diagram_components(d, &mut n), KhrankStatus::Ok);
        assert_eq!(n, 2);
        assert_eq!(khrank_diagram_crossings(d, &mut n), KhrankStatus::Ok);
        assert_eq!(n, 2);
        let mut t = 0u64;
        assert_eq!(khrank_kh_total(d, 0, &mut t), KhrankStatus::Ok);
        assert_eq!(t, 4);
        assert_eq!(khrank_kh_reduced_total(d, 0, &mut t), KhrankStatus::Ok);
        assert_eq!(t, 2);

        let mut m = ptr::null_mut();
        assert_eq!(khrank_diagram_mirror(d, &mut m), KhrankStatus::Ok);
        assert_eq!(khrank_kh_total(m, 0, &mut t), KhrankStatus::Ok);
        assert_eq!(t, 4);

        let mut s = ptr::null_mut();
        assert_eq!(khrank_rank_report_json(d, 0, &mut s), KhrankStatus::Ok);
        let json = take_string(s);
        assert!(json.contains(r#""total":4"#), "{json}");
        assert_eq!(khrank_classify_json(m, 0, &mut s), KhrankStatus::Ok);
        assert!(take_string(s).contains(r#""class":"Hopf""#));

        khrank_diagram_free(d);
        khrank_diagram_free(m);
        khrank_diagram_free(ptr::null_mut());
    }
}

#[test]
fn braid_entry_points() {
    unsafe {
        let mut d = ptr::null_mut();
        let w = cstr("2:1");
        assert_eq!(khrank_diagram_axis_link(w.as_ptr(), &mut d), KhrankStatus::Ok);
        let mut t = 0u64;
        assert_eq!(khrank_kh_total(d, 0, &mut t), KhrankStatus::Ok);
        assert_eq!(t, 8);
        khrank_diagram_free(d);

        let w = cstr("2:1 1 1");
        assert_eq!(khrank_diagram_from_braid(w.as_ptr(), &mut d), KhrankStatus::Ok);
        assert_eq!(khrank_kh_total(d, 0, &mut t), KhrankStatus::Ok);
        assert_eq!(t, 6);
        khrank_diagram_free(d);

        let mut s = ptr::null_mut();
        let w = cstr("3:1 2");
        assert_eq!(khrank_axis_polynomial(w.as_ptr(), &mut s), KhrankStatus::Ok);
        assert_eq!(take_string(s), "x^2+x*y+y^2");
        assert_eq!(khrank_alex_json(w.as_ptr(), &mut s), KhrankStatus::Ok);
        assert!(take_string(s).contains(r#""stat":12"#));
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut d = ptr::null_mut();
        let bad = cstr("X(1,2,3)");
        assert_eq!(khrank_diagram_from_pd(bad.as_ptr(), &mut d), KhrankStatus::ParseError);
        assert!(d.is_null());
        let msg = CStr::from_ptr(khrank_last_error()).to_str().unwrap();
        assert!(msg.contains("PD"), "{msg}");

        assert_eq!(khrank_diagram_from_pd(ptr::null(), &mut d), KhrankStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(khrank_diagram_components(ptr::null(), &mut n), KhrankStatus::NullPointer);

        let w = cstr("3:1");
        let mut s = ptr::null_mut();
        assert_eq!(khrank_axis_polynomial(w.as_ptr(), &mut s), KhrankStatus::DisconnectedClosure);

        let pd = cstr("X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)");
        assert_eq!(khrank_diagram_from_pd(pd.as_ptr(), &mut d), KhrankStatus::Ok);
        let mut t = 0u64;
        assert_eq!(khrank_kh_total(d, 2, &mut t), KhrankStatus::CrossingCap);
        khrank_diagram_free(d);

        let invalid = [0xffu8, 0];
        assert_eq!(khrank_diagram_from_pd(invalid.as_ptr().cast(), &mut d), KhrankStatus::InvalidUtf8);
        assert!(!CStr::from_ptr(khrank_version()).to_bytes().is_empty());
    }
}

#[test]
fn header_is_generated_and_parses_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/khrank.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["khrank_diagram_from_pd", "khrank_kh_total", "khrank_string_free", "KHRANK_STATUS_CROSSING_CAP"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // skipped when no C compiler is installed
    if let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-xc"]).arg(&header).status() {
        assert!(status.success());
    }
}
