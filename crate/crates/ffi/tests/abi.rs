use std::ffi::{CStr, CString};
use std::ptr;

use invol2_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(invol2_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    invol2_string_free(s);
    out
}

fn algebra(vars: &str, factors: &str) -> (*mut Invol2Field, *mut Invol2Algebra) {
    let mut f = ptr::null_mut();
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(invol2_field_new(c(vars).as_ptr(), 0, &mut f), Invol2Status::Ok);
        assert_eq!(invol2_algebra_new(f, c(factors).as_ptr(), &mut a), Invol2Status::Ok, "{}", last_error());
    }
    (f, a)
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(invol2_version()) };
    assert_eq!(v.to_str().unwrap(), invol2::VERSION);
}

#[test]
fn invariants_and_representation() {
    let (f, a) = algebra("a,b", "[a,b);m2t");
    unsafe {
        assert_eq!(invol2_algebra_dim(a), 16);
        let mut i = 99;
        assert_eq!(invol2_i_invariant(a, &mut i), Invol2Status::Ok);
        assert_eq!(i, 1);

        let mut yes = false;
        let mut w = ptr::null_mut();
        assert_eq!(invol2_represents(a, c("b").as_ptr(), &mut yes, &mut w), Invol2Status::Ok);
        assert!(yes);
        assert!(!take(w).is_empty());

        invol2_algebra_free(a);
        invol2_field_free(f);
    }
    let (f, a) = algebra("a,b", "[a,b)");
    unsafe {
        let mut yes = true;
        let mut w = ptr::null_mut();
        assert_eq!(invol2_represents(a, c("a").as_ptr(), &mut yes, &mut w), Invol2Status::Ok);
        assert!(!yes);
        assert!(w.is_null());
        invol2_algebra_free(a);
        invol2_field_free(f);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(invol2_field_new(ptr::null(), 0, &mut f), Invol2Status::NullArgument);
        assert!(last_error().contains("vars"));
        assert_eq!(invol2_field_new(c("x,x").as_ptr(), 0, &mut f), Invol2Status::Parse);

        assert_eq!(invol2_field_new(c("a,b").as_ptr(), 0, &mut f), Invol2Status::Ok);
        let mut a = ptr::null_mut();
        assert_eq!(invol2_algebra_new(f, c("[a,b").as_ptr(), &mut a), Invol2Status::Parse);
        assert_eq!(invol2_algebra_new(f, c("[a,0)").as_ptr(), &mut a), Invol2Status::Rejected);
        assert!(a.is_null());
        assert_eq!(invol2_algebra_new(ptr::null(), c("m2t").as_ptr(), &mut a), Invol2Status::NullArgument);
        invol2_field_free(f);

        let mut i = 0;
        assert_eq!(invol2_i_invariant(ptr::null(), &mut i), Invol2Status::NullArgument);
        assert_eq!(invol2_algebra_dim(ptr::null()), 0);
        invol2_string_free(ptr::null_mut());

        let mut f = ptr::null_mut();
        assert_eq!(invol2_field_new(c("a,b").as_ptr(), 2, &mut f), Invol2Status::Ok);
        let mut a = ptr::null_mut();
        assert_eq!(invol2_algebra_new(f, c("[a^3,b)").as_ptr(), &mut a), Invol2Status::DegreeOverflow);
        invol2_field_free(f);
    }
}

const SCENARIO: &str = r#"{
  "field": {"vars": ["x", "y", "z", "w"]},
  "factors": [
    {"type": "quat", "alpha": "x", "beta": "y", "involution": "tau"},
    {"type": "quat", "alpha": "z", "beta": "w", "involution": "tau"}
  ],
  "actions": [
    {"action": "build", "expect": {"i_invariant": 0}},
    {"action": "represents", "alpha": "y*z^2 + w", "expect": {"represented": true}}
  ]
}"#;

#[test]
fn scenario_round_trip() {
    unsafe {
        let mut cert = ptr::null_mut();
        assert_eq!(invol2_run_scenario(c(SCENARIO).as_ptr(), true, 11, &mut cert), Invol2Status::Ok);
        let text = take(cert);
        let mut again = ptr::null_mut();
        assert_eq!(invol2_run_scenario(c(SCENARIO).as_ptr(), true, 11, &mut again), Invol2Status::Ok);
        assert_eq!(take(again), text);

        let mut failures = 99;
        assert_eq!(invol2_recheck(c(&text).as_ptr(), &mut failures), Invol2Status::Ok);
        assert_eq!(failures, 0);

        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let w = v["results"][1]["witnesses"].as_object_mut().unwrap().values_mut().next().unwrap();
        w["sha256"] = serde_json::Value::String("0".repeat(64));
        let tampered = serde_json::to_string(&v).unwrap();
        assert_eq!(invol2_recheck(c(&tampered).as_ptr(), &mut failures), Invol2Status::Verification);
        assert_eq!(failures, 1);

        assert_eq!(invol2_run_scenario(c("{").as_ptr(), false, 0, &mut cert), Invol2Status::Parse);
        assert!(cert.is_null());
        let unmet = SCENARIO.replace("\"i_invariant\": 0", "\"i_invariant\": 2");
        assert_eq!(invol2_run_scenario(c(&unmet).as_ptr(), false, 0, &mut cert), Invol2Status::Verification);
        assert!(!cert.is_null());
        invol2_string_free(cert);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/invol2.h")).unwrap();
    for name in [
        "invol2_version",
        "invol2_last_error",
        "invol2_string_free",
        "invol2_field_new",
        "invol2_field_free",
        "invol2_algebra_new",
        "invol2_algebra_free",
        "invol2_algebra_dim",
        "invol2_i_invariant",
        "invol2_represents",
        "invol2_run_scenario",
        "invol2_recheck",
        "INVOL2_STATUS_DEGREE_OVERFLOW",
        "typedef struct Invol2Algebra Invol2Algebra",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
