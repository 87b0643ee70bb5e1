//! C ABI over the `ucycle` crate.
//!
//! Classes and cycles are opaque handles owned by the caller and released
//! with their `_free` function. Every fallible call returns a [`UcStatus`];
//! on failure [`uc_last_error_message`] describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ucycle::{
    count_class, eulerian_check, generate, make_class, verify_ucycle, ClassKind, ClassSpec, Error,
    Generation, Letter, Verdict, WordClass, DEFAULT_CAP,
};

/// Result of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UcStatus {
    Ok = 0,
    /// Unknown class name or inconsistent parameters.
    InvalidArgument = 1,
    /// `k^n` exceeds the enumeration cap.
    CapExceeded = 2,
    /// The class has no U-cycle; not an error in the usual sense.
    NoCycle = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// A result does not fit the output type.
    Overflow = 5,
    /// Internal inconsistency or a caught panic.
    Internal = 6,
}

/// Known existence result for a class.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UcVerdict {
    Exists = 0,
    NotExists = 1,
    Unsettled = 2,
}

/// Opaque bound word class.
pub struct UcClass(WordClass);

/// Opaque generated U-cycle; letters are 0-based indices.
pub struct UcCycle {
    letters: Vec<u8>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl ToString) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

fn fail(status: UcStatus, message: impl ToString) -> UcStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> UcStatus {
    match e {
        Error::CapExceeded { .. } => UcStatus::CapExceeded,
        Error::NotEulerian => UcStatus::NoCycle,
        Error::CountMismatch { .. } | Error::MalformedCircuit(_) => UcStatus::Internal,
        _ => UcStatus::InvalidArgument,
    }
}

fn from_error(e: Error) -> UcStatus {
    let status = status_of(&e);
    fail(status, e)
}

fn guard(f: impl FnOnce() -> UcStatus) -> UcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(UcStatus::Internal, "panic inside ucycle"),
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn uc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn uc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Binds a class.
///
/// `k`, `kv`, `kc` and `cap` use 0 for "not given" (cap 0 means the default
/// of 10^7 words). `categories` may be null when `category_count` is 0.
///
/// # Safety
/// `name` must be a NUL-terminated string, `categories` must point to
/// `category_count` readable values, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uc_class_new(
    name: *const c_char,
    n: usize,
    k: usize,
    kv: usize,
    kc: usize,
    categories: *const usize,
    category_count: usize,
    cap: u64,
    out: *mut *mut UcClass,
) -> UcStatus {
    guard(|| {
        if name.is_null() || out.is_null() || (categories.is_null() && category_count > 0) {
            return fail(UcStatus::NullPointer, "null argument to uc_class_new");
        }
        *out = ptr::null_mut();
        let name = match CStr::from_ptr(name).to_str() {
            Ok(s) => s,
            Err(_) => return fail(UcStatus::InvalidArgument, "class name is not UTF-8"),
        };
        let kind: ClassKind = match name.parse() {
            Ok(kind) => kind,
            Err(e) => return from_error(e),
        };
        let nonzero = |x: usize| (x != 0).then_some(x);
        let spec = ClassSpec {
            kind,
            n,
            k: nonzero(k),
            vowels: nonzero(kv),
            consonants: nonzero(kc),
            categories: (category_count > 0)
                .then(|| std::slice::from_raw_parts(categories, category_count).to_vec()),
            symbols: None,
            cap: if cap == 0 { DEFAULT_CAP } else { cap },
        };
        match make_class(&spec) {
            Ok(class) => {
                *out = Box::into_raw(Box::new(UcClass(class)));
                UcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `class` must be null or a handle from [`uc_class_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uc_class_free(class: *mut UcClass) {
    if !class.is_null() {
        drop(Box::from_raw(class));
    }
}

/// Alphabet size `k`, or 0 for a null handle.
///
/// # Safety
/// `class` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uc_class_alphabet_size(class: *const UcClass) -> usize {
    class.as_ref().map_or(0, |c| c.0.k())
}

/// Known existence verdict; a null handle reports `Unsettled`.
///
/// # Safety
/// `class` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uc_class_theorem_verdict(class: *const UcClass) -> UcVerdict {
    match class.as_ref().map(|c| c.0.theorem_verdict().verdict) {
        Some(Verdict::Exists) => UcVerdict::Exists,
        Some(Verdict::NotExists) => UcVerdict::NotExists,
        _ => UcVerdict::Unsettled,
    }
}

/// Writes `|class|` to `out`.
///
/// # Safety
/// `class` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_class_count(class: *const UcClass, out: *mut u64) -> UcStatus {
    guard(|| {
        let (Some(class), false) = (class.as_ref(), out.is_null()) else {
            return fail(UcStatus::NullPointer, "null argument to uc_class_count");
        };
        match count_class(&class.0) {
            Ok(count) => match u64::try_from(count) {
                Ok(c) => {
                    *out = c;
                    UcStatus::Ok
                }
                Err(_) => fail(UcStatus::Overflow, format!("count {count} exceeds 64 bits")),
            },
            Err(e) => from_error(e),
        }
    })
}

/// Membership test for one word of `len` letter indices.
///
/// # Safety
/// `letters` must point to `len` readable bytes; `class` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_class_contains(
    class: *const UcClass,
    letters: *const u8,
    len: usize,
    out: *mut bool,
) -> UcStatus {
    guard(|| {
        let (Some(class), false, false) = (class.as_ref(), letters.is_null(), out.is_null()) else {
            return fail(UcStatus::NullPointer, "null argument to uc_class_contains");
        };
        let word: Vec<Letter> = std::slice::from_raw_parts(letters, len)
            .iter()
            .map(|&b| Letter(b))
            .collect();
        match class.0.check_member(&word) {
            Ok(member) => {
                *out = member;
                UcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Engine verdict: whether the transition digraph has an Euler circuit.
///
/// # Safety
/// `class` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_class_eulerian(class: *const UcClass, out: *mut bool) -> UcStatus {
    guard(|| {
        let (Some(class), false) = (class.as_ref(), out.is_null()) else {
            return fail(UcStatus::NullPointer, "null argument to uc_class_eulerian");
        };
        match ucycle::build_digraph(&class.0) {
            Ok(g) => {
                *out = eulerian_check(&g).verdict;
                UcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Generates a U-cycle. Returns `UC_STATUS_NO_CYCLE` (with `*out` null)
/// when the digraph is not Eulerian.
///
/// # Safety
/// `class` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_generate(class: *const UcClass, out: *mut *mut UcCycle) -> UcStatus {
    guard(|| {
        let (Some(class), false) = (class.as_ref(), out.is_null()) else {
            return fail(UcStatus::NullPointer, "null argument to uc_generate");
        };
        *out = ptr::null_mut();
        match generate(&class.0) {
            Ok(Generation::Cycle(cycle, _)) => {
                let letters = cycle.letters.iter().map(|l| l.0).collect();
                *out = Box::into_raw(Box::new(UcCycle { letters }));
                UcStatus::Ok
            }
            Ok(Generation::NoCycle(report)) => {
                let reasons: Vec<&str> = report.reasons.iter().map(|r| r.as_str()).collect();
                fail(
                    UcStatus::NoCycle,
                    format!("no U-cycle: {}", reasons.join(", ")),
                )
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `cycle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uc_cycle_len(cycle: *const UcCycle) -> usize {
    cycle.as_ref().map_or(0, |c| c.letters.len())
}

/// Borrowed pointer to the cycle's letter indices; valid while the handle lives.
///
/// # Safety
/// `cycle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uc_cycle_letters(cycle: *const UcCycle) -> *const u8 {
    cycle.as_ref().map_or(ptr::null(), |c| c.letters.as_ptr())
}

/// Renders the cycle with the class's display symbols. Free the result
/// with [`uc_string_free`]. Returns null on failure.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn uc_cycle_render(
    class: *const UcClass,
    cycle: *const UcCycle,
) -> *mut c_char {
    let (Some(class), Some(cycle)) = (class.as_ref(), cycle.as_ref()) else {
        set_error("null argument to uc_cycle_render");
        return ptr::null_mut();
    };
    let k = class.0.k();
    if let Some(&bad) = cycle.letters.iter().find(|&&l| l as usize >= k) {
        set_error(Error::LetterOutOfRange {
            letter: bad as usize,
            k,
        });
        return ptr::null_mut();
    }
    let letters: Vec<Letter> = cycle.letters.iter().map(|&l| Letter(l)).collect();
    CString::new(class.0.render(&letters)).map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` must be null or a string returned by [`uc_cycle_render`].
#[no_mangle]
pub unsafe extern "C" fn uc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `cycle` must be null or a handle from [`uc_generate`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uc_cycle_free(cycle: *mut UcCycle) {
    if !cycle.is_null() {
        drop(Box::from_raw(cycle));
    }
}

/// Brute-force check that `letters` is a U-cycle of the class. An invalid
/// candidate is `UC_STATUS_OK` with `*valid == false`; the defect is then
/// available from [`uc_last_error_message`].
///
/// # Safety
/// `letters` must point to `len` readable bytes; `class` live; `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn uc_verify(
    class: *const UcClass,
    letters: *const u8,
    len: usize,
    valid: *mut bool,
) -> UcStatus {
    guard(|| {
        let (Some(class), false, false) = (class.as_ref(), letters.is_null(), valid.is_null())
        else {
            return fail(UcStatus::NullPointer, "null argument to uc_verify");
        };
        let s: Vec<Letter> = std::slice::from_raw_parts(letters, len)
            .iter()
            .map(|&b| Letter(b))
            .collect();
        match verify_ucycle(&s, &class.0) {
            Ok(result) => {
                *valid = result.valid;
                if let Some(defect) = result.defect {
                    set_error(format!("{defect:?}"));
                }
                UcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
