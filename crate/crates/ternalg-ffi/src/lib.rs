//! C ABI over the core engine. Algebras live behind opaque handles;
//! structured data crosses the boundary as JSON strings using the same
//! descriptor and report schemas as the CLI. Every returned string must
//! be released with `ternalg_string_free`, every handle with
//! `ternalg_algebra_free`. The matching header is `include/ternalg.h`.

use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::{c_char, c_int};

use ternalg::algebra::{BracketKind, Mode, TernaryAlgebra};
use ternalg::laws::{
    check_assoc, check_ga15_identity, check_ga15_system, check_omega_symmetry, CheckOptions,
    LawReport, RunMode,
};
use ternalg::zoo::{tensor_to_entries, Descriptor};

pub const TERNALG_OK: c_int = 0;
/// A required pointer argument was null.
pub const TERNALG_ERR_NULL: c_int = 1;
/// A string argument was not valid UTF-8.
pub const TERNALG_ERR_UTF8: c_int = 2;
/// JSON or descriptor parsing failed.
pub const TERNALG_ERR_PARSE: c_int = 3;
/// The operation is not defined for this input.
pub const TERNALG_ERR_DOMAIN: c_int = 4;
/// An internal invariant failed; the output pointers are untouched.
pub const TERNALG_ERR_PANIC: c_int = 5;

/// Opaque algebra handle.
pub struct TernalgAlgebra {
    inner: TernaryAlgebra,
}

fn read_str<'a>(p: *const c_char) -> Result<&'a str, c_int> {
    if p.is_null() {
        return Err(TERNALG_ERR_NULL);
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| TERNALG_ERR_UTF8)
}

fn give_string(s: String, out: *mut *mut c_char) -> c_int {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            TERNALG_OK
        }
        Err(_) => TERNALG_ERR_DOMAIN,
    }
}

fn guarded(f: impl FnOnce() -> c_int) -> c_int {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(TERNALG_ERR_PANIC)
}

fn bracket_of(name: &str) -> Option<BracketKind> {
    match name {
        "omega" => Some(BracketKind::Omega),
        "conjugate" => Some(BracketKind::Conjugate),
        "reduced" => Some(BracketKind::Reduced),
        _ => None,
    }
}

fn options_of(mode: &str) -> Option<CheckOptions> {
    let mut o = CheckOptions::default();
    o.mode = match mode {
        "exact" => RunMode::Exact,
        "float" => RunMode::Float,
        _ => return None,
    };
    Some(o)
}

/// Build an algebra from a JSON descriptor (see the `Descriptor` schema:
/// vector, rect, cubic, cubic-scalar, zero, custom). On success writes a
/// handle to `out`.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// writable pointer. The handle must be freed with `ternalg_algebra_free`.
#[no_mangle]
pub unsafe extern "C" fn ternalg_algebra_from_json(
    json: *const c_char,
    out: *mut *mut TernalgAlgebra,
) -> c_int {
    guarded(|| {
        if out.is_null() {
            return TERNALG_ERR_NULL;
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let desc: Descriptor = match serde_json::from_str(text) {
            Ok(d) => d,
            Err(_) => return TERNALG_ERR_PARSE,
        };
        match desc.build() {
            Ok(a) => {
                unsafe { *out = Box::into_raw(Box::new(TernalgAlgebra { inner: a })) };
                TERNALG_OK
            }
            Err(_) => TERNALG_ERR_DOMAIN,
        }
    })
}

/// Release a handle; null is a no-op.
///
/// # Safety
/// `h` must come from `ternalg_algebra_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ternalg_algebra_free(h: *mut TernalgAlgebra) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Complex dimension of the algebra, or -1 for a null handle.
///
/// # Safety
/// `h` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ternalg_algebra_dim(h: *const TernalgAlgebra) -> c_int {
    if h.is_null() {
        return -1;
    }
    unsafe { &*h }.inner.dim as c_int
}

/// Run one law check and return its report as JSON. `law` is one of
/// "omega-symmetry", "ga15-identity", "assoc-1", "assoc-2"; for the two
/// bracket laws `bracket` picks "omega", "conjugate" or "reduced"
/// (ignored by the associativity laws, may be null there). `mode` is
/// "exact" or "float".
///
/// # Safety
/// String arguments must be NUL-terminated; `out_json` must be writable.
/// The returned string is owned by the caller; free it with
/// `ternalg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ternalg_check_law(
    h: *const TernalgAlgebra,
    law: *const c_char,
    bracket: *const c_char,
    mode: *const c_char,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(|| {
        if h.is_null() || out_json.is_null() {
            return TERNALG_ERR_NULL;
        }
        let a = &unsafe { &*h }.inner;
        let law = match read_str(law) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let opts = match read_str(mode).ok().and_then(options_of) {
            Some(o) => o,
            None => return TERNALG_ERR_PARSE,
        };
        let report: LawReport = match law {
            "assoc-1" => check_assoc(a, 1, &opts),
            "assoc-2" => check_assoc(a, 2, &opts),
            "omega-symmetry" | "ga15-identity" => {
                let kind = match read_str(bracket).ok().and_then(bracket_of) {
                    Some(k) => k,
                    None => return TERNALG_ERR_PARSE,
                };
                if law == "omega-symmetry" {
                    check_omega_symmetry(a, kind, &opts)
                } else {
                    check_ga15_identity(a, kind, &opts)
                }
            }
            _ => return TERNALG_ERR_PARSE,
        };
        give_string(serde_json::to_string(&report).unwrap(), out_json)
    })
}

/// Dump the structure constants of a bracket as a JSON descriptor of
/// kind "custom", loadable back through `ternalg_algebra_from_json`.
/// Conjugate-mid algebras are dumped over the realified basis.
///
/// # Safety
/// As for `ternalg_check_law`.
#[no_mangle]
pub unsafe extern "C" fn ternalg_structure_constants(
    h: *const TernalgAlgebra,
    bracket: *const c_char,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(|| {
        if h.is_null() || out_json.is_null() {
            return TERNALG_ERR_NULL;
        }
        let a = &unsafe { &*h }.inner;
        let kind = match read_str(bracket).ok().and_then(bracket_of) {
            Some(k) => k,
            None => return TERNALG_ERR_PARSE,
        };
        let tensor = match a.mode {
            Mode::Trilinear => a.structure_constants(kind, None),
            Mode::ConjugateMid => a.structure_constants_realified(kind),
        };
        let tensor = match tensor {
            Ok(t) => t,
            Err(_) => return TERNALG_ERR_DOMAIN,
        };
        let dump = serde_json::json!({
            "kind": "custom",
            "dim": tensor.dim,
            "mode": "trilinear",
            "product": tensor_to_entries(&tensor),
        });
        give_string(dump.to_string(), out_json)
    })
}

/// Check the quadratic five-point system on a constants dump produced by
/// `ternalg_structure_constants` (or any custom descriptor). Returns the
/// report as JSON.
///
/// # Safety
/// As for `ternalg_check_law`.
#[no_mangle]
pub unsafe extern "C" fn ternalg_check_constants_system(
    constants_json: *const c_char,
    mode: *const c_char,
    out_json: *mut *mut c_char,
) -> c_int {
    guarded(|| {
        if out_json.is_null() {
            return TERNALG_ERR_NULL;
        }
        let text = match read_str(constants_json) {
            Ok(t) => t,
            Err(code) => return code,
        };
        let opts = match read_str(mode).ok().and_then(options_of) {
            Some(o) => o,
            None => return TERNALG_ERR_PARSE,
        };
        let desc: Descriptor = match serde_json::from_str(text) {
            Ok(d) => d,
            Err(_) => return TERNALG_ERR_PARSE,
        };
        let a = match desc.build() {
            Ok(a) => a,
            Err(_) => return TERNALG_ERR_DOMAIN,
        };
        if a.mode != Mode::Trilinear {
            return TERNALG_ERR_DOMAIN;
        }
        let report = check_ga15_system(a.product_tensor(), &opts);
        give_string(serde_json::to_string(&report).unwrap(), out_json)
    })
}

/// Release a string returned by this library; null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ternalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
