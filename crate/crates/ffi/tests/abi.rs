use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use contactcheck_ffi::*;
use serde_json::Value;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Take ownership of a returned string.
unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    cc_string_free(s);
    out
}

fn last_error() -> Option<String> {
    let p = cc_last_error();
    (!p.is_null()).then(|| unsafe { take(p) })
}

#[test]
fn verify_scenarios() {
    unsafe {
        let mut json = ptr::null_mut();
        let mut passed = -1;
        let st = cc_verify(cstr("top-power").as_ptr(), 3, false, false, &mut json, &mut passed);
        assert_eq!(st, CcStatus::Ok);
        assert_eq!(passed, 1);
        let v: Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["scenario"], "top-power");
        assert_eq!(v["params"]["n"], 3);
        assert!(last_error().is_none());

        let st = cc_verify(cstr("levine-criterion").as_ptr(), -1, false, true, &mut json, &mut passed);
        assert_eq!(st, CcStatus::Ok);
        assert_eq!(passed, 0);
        let v: Value = serde_json::from_str(&take(json)).unwrap();
        assert!(v["witness"].is_string());

        let st = cc_verify(cstr("top-power").as_ptr(), 99, false, false, &mut json, &mut passed);
        assert_eq!(st, CcStatus::OutOfRange);
        assert!(last_error().unwrap().contains("99"));

        let st = cc_verify(cstr("nope").as_ptr(), -1, false, false, &mut json, &mut passed);
        assert_eq!(st, CcStatus::UnknownScenario);
        let st = cc_verify(cstr("pi1-m0").as_ptr(), 2, false, false, &mut json, &mut passed);
        assert_eq!(st, CcStatus::OutOfRange);
        let st = cc_verify(ptr::null(), -1, false, false, &mut json, &mut passed);
        assert_eq!(st, CcStatus::NullPointer);
        let st = cc_verify(cstr("pi1-m0").as_ptr(), -1, false, false, &mut json, ptr::null_mut());
        assert_eq!(st, CcStatus::NullPointer);
    }
}

#[test]
fn smith_through_handles() {
    unsafe {
        let entries = [2i64, 4, 6, 8];
        let mut m = ptr::null_mut();
        assert_eq!(cc_matrix_new(2, 2, entries.as_ptr(), &mut m), CcStatus::Ok);
        assert_eq!((cc_matrix_rows(m), cc_matrix_cols(m)), (2, 2));

        let mut factors = ptr::null_mut();
        assert_eq!(cc_matrix_invariant_factors(m, &mut factors), CcStatus::Ok);
        assert_eq!(take(factors), "2 4");

        let (mut s, mut u, mut v) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(cc_matrix_smith(m, &mut s, &mut u, &mut v), CcStatus::Ok);
        let get = |h: *const CcMatrix, r, c| {
            let mut x = 0i64;
            assert_eq!(cc_matrix_get(h, r, c, &mut x), CcStatus::Ok);
            x
        };
        assert_eq!([get(s, 0, 0), get(s, 0, 1), get(s, 1, 0), get(s, 1, 1)], [2, 0, 0, 4]);
        // U M V = S, checked entrywise
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = 0;
                for k in 0..2 {
                    for l in 0..2 {
                        acc += get(u, i, k) * entries[k * 2 + l] * get(v, l, j);
                    }
                }
                assert_eq!(acc, get(s, i, j));
            }
        }
        let mut x = 0;
        assert_eq!(cc_matrix_get(s, 2, 0, &mut x), CcStatus::OutOfRange);
        assert_eq!(cc_matrix_smith(m, ptr::null_mut(), ptr::null_mut(), ptr::null_mut()), CcStatus::Ok);
        for h in [m, s, u, v] {
            cc_matrix_free(h);
        }
        cc_matrix_free(ptr::null_mut());

        let mut big = ptr::null_mut();
        assert_eq!(cc_matrix_parse(cstr("1 1\n123456789012345678901234567890\n").as_ptr(), &mut big), CcStatus::Ok);
        assert_eq!(cc_matrix_get(big, 0, 0, &mut x), CcStatus::OutOfRange);
        cc_matrix_free(big);

        assert_eq!(cc_matrix_parse(cstr("2 2\n1 2 3\n").as_ptr(), &mut big), CcStatus::Parse);
        assert_eq!(cc_matrix_new(2, 2, ptr::null(), &mut big), CcStatus::NullPointer);
        assert_eq!(cc_matrix_new(0, 3, ptr::null(), &mut big), CcStatus::Ok);
        assert_eq!(cc_matrix_cols(big), 3);
        cc_matrix_free(big);
        assert_eq!(cc_matrix_rows(ptr::null()), 0);
    }
}

#[test]
fn homology_of_complex() {
    unsafe {
        let json = cstr(
            r#"{"dims": [1, 1, 1], "boundaries": [
                {"rows": 1, "cols": 1, "entries": [0]},
                {"rows": 1, "cols": 1, "entries": [2]}]}"#,
        );
        let mut c = ptr::null_mut();
        assert_eq!(cc_complex_parse(json.as_ptr(), &mut c), CcStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(cc_complex_homology(c, &mut out), CcStatus::Ok);
        let groups: Vec<String> = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(groups, ["Z", "Z/2", "0"]);
        cc_complex_free(c);

        let bad = cstr(
            r#"{"dims": [1, 1, 1], "boundaries": [
                {"rows": 1, "cols": 1, "entries": [1]},
                {"rows": 1, "cols": 1, "entries": [1]}]}"#,
        );
        assert_eq!(cc_complex_parse(bad.as_ptr(), &mut c), CcStatus::Parse);
        assert!(last_error().unwrap().contains("degree 2"));
        assert_eq!(cc_complex_homology(ptr::null(), &mut out), CcStatus::NullPointer);
    }
}

#[test]
fn presentations() {
    unsafe {
        let mut p = ptr::null_mut();
        let text = cstr("gens: a b c d e\nrel: a b a^-1 b^-1\nrel: c d c^-1 d^-1\nrel: c e c^-1 e^-1\nrel: d e d^-1 e^-1 a^-1\nrel: b c^-1\n");
        assert_eq!(cc_presentation_parse(text.as_ptr(), &mut p), CcStatus::Ok);
        let mut q = ptr::null_mut();
        assert_eq!(cc_presentation_simplify(p, &mut q), CcStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(cc_presentation_to_text(q, &mut out), CcStatus::Ok);
        let simplified = take(out);
        assert!(simplified.starts_with("gens: c d e\n"), "{simplified}");
        assert_eq!(cc_presentation_abelianize(q, &mut out), CcStatus::Ok);
        assert_eq!(take(out), "Z^3");
        assert_eq!(cc_presentation_abelianize(p, &mut out), CcStatus::Ok);
        assert_eq!(take(out), "Z^3");
        cc_presentation_free(p);
        cc_presentation_free(q);

        assert_eq!(cc_presentation_parse(cstr("gens: a\nrel: b\n").as_ptr(), &mut p), CcStatus::Parse);
        let invalid = [0xffu8, 0];
        assert_eq!(cc_presentation_parse(invalid.as_ptr().cast(), &mut p), CcStatus::InvalidUtf8);
    }
}

#[test]
fn status_messages() {
    for st in [CcStatus::Ok, CcStatus::Parse, CcStatus::Internal] {
        let s = unsafe { CStr::from_ptr(cc_status_message(st)) };
        assert!(!s.to_bytes().is_empty());
    }
}

#[test]
fn header_is_valid_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/contactcheck.h")).unwrap();
    for f in ["cc_verify", "cc_matrix_smith", "cc_complex_homology", "cc_presentation_simplify", "cc_string_free"] {
        assert!(header.contains(f), "{f} missing from header");
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"contactcheck.h\"\nint main(void) { CcMatrix *m = 0; CcStatus s = cc_matrix_parse(\"1 1 1\", &m); cc_matrix_free(m); return s == CC_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status()
    else {
        eprintln!("no C compiler; header syntax not checked");
        return;
    };
    assert!(status.success());
}
