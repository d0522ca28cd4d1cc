//! C ABI over `contactcheck`.
//!
//! Objects cross the boundary as opaque handles created by `*_new`/`*_parse`
//! and released by the matching `*_free`. Every fallible call returns a
//! [`CcStatus`]; on failure a message is kept per thread and can be fetched
//! with [`cc_last_error`]. Strings returned through `char **` are owned by
//! the caller and released with [`cc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use contactcheck::abelian::{smith_normal_form, ChainComplex, IntMatrix};
use contactcheck::cli::{find, parse_complex, parse_matrix, ResultRecord};
use contactcheck::contactlab::{Limits, ScenarioError};
use contactcheck::grouppres::Presentation;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OutOfRange = 4,
    UnknownScenario = 5,
    Shape = 6,
    Internal = 7,
}

/// Integer matrix.
pub struct CcMatrix(IntMatrix);

/// Chain complex of free abelian groups.
pub struct CcComplex(ChainComplex);

/// Group presentation with finitely many generators and relators.
pub struct CcPresentation(Presentation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CcStatus, String);

type Outcome = Result<(), Failure>;

fn fail(status: CcStatus, msg: impl ToString) -> Failure {
    Failure(status, msg.to_string())
}

fn guard(f: impl FnOnce() -> Outcome) -> CcStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err(fail(CcStatus::Internal, "panic")));
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CcStatus::Ok
        }
        Err(Failure(status, msg)) => {
            let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
            LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
            status
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(fail(CcStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(CcStatus::InvalidUtf8, e))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| fail(CcStatus::NullPointer, "null handle"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(fail(CcStatus::NullPointer, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    if out.is_null() {
        return Err(fail(CcStatus::NullPointer, "null output pointer"));
    }
    *out = CString::new(s).map_err(|e| fail(CcStatus::Internal, e))?.into_raw();
    Ok(())
}

unsafe fn release<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn cc_status_message(status: CcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CcStatus::Ok => c"ok",
        CcStatus::NullPointer => c"null pointer argument",
        CcStatus::InvalidUtf8 => c"string is not valid UTF-8",
        CcStatus::Parse => c"input could not be parsed",
        CcStatus::OutOfRange => c"value out of range",
        CcStatus::UnknownScenario => c"unknown scenario",
        CcStatus::Shape => c"dimension mismatch",
        CcStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Copy of the message of the last failed call on this thread, or null if
/// the last call succeeded. Free with [`cc_string_free`].
#[no_mangle]
pub extern "C" fn cc_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map_or(ptr::null_mut(), CString::into_raw))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Run a named scenario and return its result as JSON. `n < 0` selects the
/// scenario's default parameter. `*passed` receives 1 for a pass, 0 for a
/// failure; the JSON carries the witness.
///
/// # Safety
/// `scenario` must be a valid nul-terminated string; `json_out` and
/// `passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_verify(
    scenario: *const c_char,
    n: i64,
    unsafe_n: bool,
    control: bool,
    json_out: *mut *mut c_char,
    passed: *mut i32,
) -> CcStatus {
    guard(|| {
        let name = text(scenario)?;
        if passed.is_null() {
            return Err(fail(CcStatus::NullPointer, "null output pointer"));
        }
        let d = find(name).ok_or_else(|| fail(CcStatus::UnknownScenario, format!("unknown scenario {name:?}")))?;
        let value = if n < 0 {
            None
        } else {
            if d.param.is_none() {
                return Err(fail(CcStatus::OutOfRange, format!("scenario {name} takes no parameter")));
            }
            Some(usize::try_from(n).map_err(|e| fail(CcStatus::OutOfRange, e))?)
        };
        let limits = if unsafe_n { Limits::unbounded() } else { Limits::default() };
        let r = if control { d.run_control(value, &limits) } else { d.run(value, &limits) }.map_err(|e| match e {
            ScenarioError::OutOfRange { .. } => fail(CcStatus::OutOfRange, e),
            other => fail(CcStatus::Internal, other),
        })?;
        let json = serde_json::to_string(&ResultRecord::from(&r)).map_err(|e| fail(CcStatus::Internal, e))?;
        put_string(json_out, json)?;
        *passed = i32::from(r.passed());
        Ok(())
    })
}

/// Matrix from `rows * cols` row-major entries.
///
/// # Safety
/// `entries` must point to `rows * cols` readable values (it may be null
/// when that product is 0); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_new(
    rows: usize,
    cols: usize,
    entries: *const i64,
    out: *mut *mut CcMatrix,
) -> CcStatus {
    guard(|| {
        let len = rows.checked_mul(cols).ok_or_else(|| fail(CcStatus::OutOfRange, "size overflow"))?;
        let slice = if len == 0 {
            &[][..]
        } else if entries.is_null() {
            return Err(fail(CcStatus::NullPointer, "null entries"));
        } else {
            std::slice::from_raw_parts(entries, len)
        };
        let m = IntMatrix::from_entries(rows, cols, slice.iter().map(|&v| BigInt::from(v)).collect())
            .map_err(|e| fail(CcStatus::Shape, e))?;
        put(out, CcMatrix(m))
    })
}

/// Matrix from the text format `rows cols` followed by row-major entries.
///
/// # Safety
/// `text_in` must be a valid nul-terminated string; `out` must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_parse(text_in: *const c_char, out: *mut *mut CcMatrix) -> CcStatus {
    guard(|| {
        let m = parse_matrix(text(text_in)?).map_err(|e| fail(CcStatus::Parse, e))?;
        put(out, CcMatrix(m))
    })
}

/// # Safety
/// `m` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_free(m: *mut CcMatrix) {
    release(m);
}

/// Number of rows, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_rows(m: *const CcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_cols(m: *const CcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Entry `(row, col)`; `CC_STATUS_OUT_OF_RANGE` if the index is outside the
/// matrix or the entry does not fit in 64 bits.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_get(m: *const CcMatrix, row: usize, col: usize, out: *mut i64) -> CcStatus {
    guard(|| {
        let m = &handle(m)?.0;
        if row >= m.rows() || col >= m.cols() {
            return Err(fail(CcStatus::OutOfRange, format!("({row}, {col}) outside {}x{}", m.rows(), m.cols())));
        }
        let v = m.get(row, col);
        let v = v.to_i64().ok_or_else(|| fail(CcStatus::OutOfRange, format!("{v} does not fit in 64 bits")))?;
        if out.is_null() {
            return Err(fail(CcStatus::NullPointer, "null output pointer"));
        }
        *out = v;
        Ok(())
    })
}

/// Smith normal form `U M V = S`. Any of the outputs may be null to skip it.
///
/// # Safety
/// `m` must be a live handle; non-null outputs must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_smith(
    m: *const CcMatrix,
    s: *mut *mut CcMatrix,
    u: *mut *mut CcMatrix,
    v: *mut *mut CcMatrix,
) -> CcStatus {
    guard(|| {
        let f = smith_normal_form(&handle(m)?.0);
        for (out, mat) in [(s, f.s), (u, f.u), (v, f.v)] {
            if !out.is_null() {
                put(out, CcMatrix(mat))?;
            }
        }
        Ok(())
    })
}

/// Nonzero invariant factors, space separated.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_matrix_invariant_factors(m: *const CcMatrix, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let factors: Vec<String> = handle(m)?.0.invariant_factors().iter().map(|d| d.to_string()).collect();
        put_string(out, factors.join(" "))
    })
}

/// Chain complex from JSON `{"dims": [...], "boundaries": [...]}`.
///
/// # Safety
/// `json` must be a valid nul-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn cc_complex_parse(json: *const c_char, out: *mut *mut CcComplex) -> CcStatus {
    guard(|| {
        let c = parse_complex(text(json)?).map_err(|e| fail(CcStatus::Parse, e))?;
        put(out, CcComplex(c))
    })
}

/// # Safety
/// `c` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_complex_free(c: *mut CcComplex) {
    release(c);
}

/// Homology groups as a JSON array of strings such as `["Z", "Z/2", "0"]`,
/// indexed by degree.
///
/// # Safety
/// `c` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_complex_homology(c: *const CcComplex, out: *mut *mut c_char) -> CcStatus {
    guard(|| {
        let groups: Vec<String> = handle(c)?.0.homology().iter().map(|g| g.to_string()).collect();
        put_string(out, serde_json::to_string(&groups).map_err(|e| fail(CcStatus::Internal, e))?)
    })
}

/// Presentation from the `gens:` / `rel:` text format.
///
/// # Safety
/// `text_in` must be a valid nul-terminated string; `out` must be valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_presentation_parse(text_in: *const c_char, out: *mut *mut CcPresentation) -> CcStatus {
    guard(|| {
        let p = Presentation::parse(text(text_in)?).map_err(|e| fail(CcStatus::Parse, e))?;
        put(out, CcPresentation(p))
    })
}

/// # Safety
/// `p` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cc_presentation_free(p: *mut CcPresentation) {
    release(p);
}

/// Simplified copy of `p`; the input handle is unchanged.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_presentation_simplify(p: *const CcPresentation, out: *mut *mut CcPresentation) -> CcStatus {
    guard(|| {
        let s = handle(p)?.0.simplify();
        put(out, CcPresentation(s.presentation))
    })
}

/// Presentation in the `gens:` / `rel:` text format.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_presentation_to_text(p: *const CcPresentation, out: *mut *mut c_char) -> CcStatus {
    guard(|| put_string(out, handle(p)?.0.to_text()))
}

/// Abelianization in invariant-factor form, e.g. `Z^2 + Z/3`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cc_presentation_abelianize(p: *const CcPresentation, out: *mut *mut c_char) -> CcStatus {
    guard(|| put_string(out, handle(p)?.0.abelianization().to_string()))
}
