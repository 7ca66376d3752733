//! C bindings for the twistcheck workbench.
//!
//! Tables are opaque handles created by [`tc_table_load_json`] or
//! [`tc_table_builtin`] and released with [`tc_table_free`]. Analyses return
//! the same JSON report documents as the command-line interface, as
//! NUL-terminated strings owned by the library; release them with
//! [`tc_string_free`]. Every function reports a [`TcStatus`]; on failure a
//! thread-local message is available via [`tc_last_error_message`] until the
//! next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use twistcheck::groups::io::save_character_table;
use twistcheck::groups::structure::CharacterTable;
use twistcheck::reports::{self, AppError, CharPowerMode};
use twistcheck::weights::{RecoverMode, WeightMultiset};

/// Status codes returned by every binding.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcStatus {
    /// Success.
    TcOk = 0,
    /// A required pointer argument was null.
    TcNullArgument = 1,
    /// A string argument was not valid UTF-8.
    TcUtf8 = 2,
    /// Malformed input (JSON or spec syntax).
    TcParse = 3,
    /// A precondition or validation failure.
    TcPrecondition = 4,
    /// An internal panic was caught at the boundary.
    TcPanic = 5,
}

/// Opaque handle to a loaded character table.
pub struct TcTable {
    inner: CharacterTable,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap();
    });
}

fn status_of(err: &AppError) -> TcStatus {
    match err {
        AppError::Parse(_) => TcStatus::TcParse,
        AppError::Precondition(_) => TcStatus::TcPrecondition,
    }
}

fn fail(err: AppError) -> TcStatus {
    set_error(&err.to_string());
    status_of(&err)
}

/// Read a required UTF-8 C string argument.
///
/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, TcStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(TcStatus::TcNullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        TcStatus::TcUtf8
    })
}

fn write_string(out: *mut *mut c_char, body: String) -> TcStatus {
    let sanitized = body.replace('\0', " ");
    let cstring = CString::new(sanitized).unwrap();
    unsafe {
        *out = cstring.into_raw();
    }
    TcStatus::TcOk
}

fn guarded<F: FnOnce() -> TcStatus>(f: F) -> TcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            TcStatus::TcPanic
        }
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn tc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread; valid until the next
/// failing call. Do not free.
#[no_mangle]
pub extern "C" fn tc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by any report function.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse and validate a character table document.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_table_load_json(
    json: *const c_char,
    out: *mut *mut TcTable,
) -> TcStatus {
    if out.is_null() {
        set_error("null output pointer");
        return TcStatus::TcNullArgument;
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| match twistcheck::groups::io::load_character_table(text) {
        Ok(table) => {
            *out = Box::into_raw(Box::new(TcTable { inner: table }));
            TcStatus::TcOk
        }
        Err(e) => fail(AppError::from(e)),
    })
}

/// Build one of the built-in tables: `s3`, `d4`, `q8`, `cyclic:N`,
/// `heisenberg:P`, `product:<spec>,<spec>`.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_table_builtin(
    spec: *const c_char,
    out: *mut *mut TcTable,
) -> TcStatus {
    if out.is_null() {
        set_error("null output pointer");
        return TcStatus::TcNullArgument;
    }
    let spec = match read_str(spec) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| match reports::builtin_table(spec) {
        Some(Ok(table)) => {
            *out = Box::into_raw(Box::new(TcTable { inner: table }));
            TcStatus::TcOk
        }
        Some(Err(e)) => fail(e),
        None => fail(AppError::parse(format!(
            "{spec:?} is not a built-in table spec"
        ))),
    })
}

/// Release a table handle.
///
/// # Safety
/// `table` must be null or a pointer returned by a load function, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn tc_table_free(table: *mut TcTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

unsafe fn table_ref<'a>(table: *const TcTable) -> Result<&'a CharacterTable, TcStatus> {
    if table.is_null() {
        set_error("null table handle");
        return Err(TcStatus::TcNullArgument);
    }
    Ok(&(*table).inner)
}

unsafe fn require_out<T>(out: *mut T) -> Result<(), TcStatus> {
    if out.is_null() {
        set_error("null output pointer");
        Err(TcStatus::TcNullArgument)
    } else {
        Ok(())
    }
}

/// Number of conjugacy classes.
///
/// # Safety
/// `table` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_table_num_classes(
    table: *const TcTable,
    out: *mut usize,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out) {
        return s;
    }
    *out = t.structure.num_classes();
    TcStatus::TcOk
}

/// Number of irreducible characters (rows).
///
/// # Safety
/// `table` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_table_num_irreducibles(
    table: *const TcTable,
    out: *mut usize,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out) {
        return s;
    }
    *out = t.irreducibles.len();
    TcStatus::TcOk
}

/// Number of subgroup embeddings carried by the table.
///
/// # Safety
/// `table` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tc_table_num_embeddings(
    table: *const TcTable,
    out: *mut usize,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out) {
        return s;
    }
    *out = t.embeddings.len();
    TcStatus::TcOk
}

/// Canonical JSON document of the table (byte-exact round trips).
///
/// # Safety
/// `table` must be a live handle; `out_json` a valid pointer. Free the result
/// with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_table_to_json(
    table: *const TcTable,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| write_string(out_json, save_character_table(t)))
}

/// Run every invariant check; the JSON report lists each check by name.
/// Returns TcOk even when checks fail (consult `all_passed` in the report).
///
/// # Safety
/// `table` must be a live handle; `out_json` a valid pointer. Free the result
/// with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_table_validate(
    table: *const TcTable,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| {
        let report = reports::validate_report(t);
        write_string(out_json, reports::to_json_string(&report))
    })
}

/// Power character report; `mode` is `tensor`, `sym`, `ext` or `adjoint`.
///
/// # Safety
/// `table` must be a live handle; `mode` a valid string; `out_json` a valid
/// pointer. Free the result with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_powers_report(
    table: *const TcTable,
    chi: usize,
    mode: *const c_char,
    k: u32,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let mode = match read_str(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| {
        let mode: CharPowerMode = match mode.parse() {
            Ok(m) => m,
            Err(e) => return fail(AppError::parse(e)),
        };
        match reports::powers_report(t, chi, mode, k) {
            Ok(report) => write_string(out_json, reports::to_json_string(&report)),
            Err(e) => fail(e),
        }
    })
}

/// Twist report for a pair of rows; `subgroup < 0` means no restriction.
///
/// # Safety
/// `table` must be a live handle; `out_json` a valid pointer. Free the result
/// with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_twist_report(
    table: *const TcTable,
    chi1: usize,
    chi2: usize,
    k: u32,
    subgroup: i64,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| {
        let subgroup = if subgroup < 0 {
            None
        } else {
            Some(subgroup as usize)
        };
        match reports::twist_report(t, chi1, chi2, k, subgroup) {
            Ok(report) => write_string(out_json, reports::to_json_string(&report)),
            Err(e) => fail(e),
        }
    })
}

/// Clifford analysis of one row against a subgroup embedding.
///
/// # Safety
/// `table` must be a live handle; `out_json` a valid pointer. Free the result
/// with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_clifford_report(
    table: *const TcTable,
    chi: usize,
    subgroup: usize,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| match reports::clifford_report(t, chi, subgroup) {
        Ok(report) => write_string(out_json, reports::to_json_string(&report)),
        Err(e) => fail(e),
    })
}

/// Density report for a pair of rows; `subgroup < 0` means no coset data.
///
/// # Safety
/// `table` must be a live handle; `out_json` a valid pointer. Free the result
/// with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_density_report(
    table: *const TcTable,
    chi1: usize,
    chi2: usize,
    subgroup: i64,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let t = match table_ref(table) {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| {
        let subgroup = if subgroup < 0 {
            None
        } else {
            Some(subgroup as usize)
        };
        match reports::density_report(t, chi1, chi2, subgroup) {
            Ok(report) => write_string(out_json, reports::to_json_string(&report)),
            Err(e) => fail(e),
        }
    })
}

/// Recover a weight multiset from its k-th power image; `weights_json` is a
/// weight multiset document, `mode` is `tensor` or `sym`.
///
/// # Safety
/// `weights_json` and `mode` must be valid strings; `out_json` a valid
/// pointer. Free the result with [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_recover_weights(
    weights_json: *const c_char,
    mode: *const c_char,
    n: u32,
    k: u32,
    out_json: *mut *mut c_char,
) -> TcStatus {
    let text = match read_str(weights_json) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let mode = match read_str(mode) {
        Ok(m) => m,
        Err(s) => return s,
    };
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| {
        let weights: WeightMultiset = match serde_json::from_str(text) {
            Ok(w) => w,
            Err(e) => return fail(AppError::parse(e)),
        };
        let mode: RecoverMode = match mode.parse() {
            Ok(m) => m,
            Err(e) => return fail(AppError::parse(e)),
        };
        match reports::recover_report(&weights, n, k, mode) {
            Ok(report) => write_string(out_json, reports::to_json_string(&report)),
            Err(e) => fail(e),
        }
    })
}

/// Run the Heisenberg demonstration pipeline for an odd prime n. Returns
/// TcOk iff the report was produced; consult `all_passed` inside.
///
/// # Safety
/// `out_json` must be a valid pointer. Free the result with
/// [`tc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn tc_demo_heisenberg(n: u64, out_json: *mut *mut c_char) -> TcStatus {
    if let Err(s) = require_out(out_json) {
        return s;
    }
    guarded(|| match reports::demo_heisenberg(n) {
        Ok(report) => write_string(out_json, reports::to_json_string(&report)),
        Err(e) => fail(e),
    })
}
