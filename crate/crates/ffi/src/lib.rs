//! C interface to `bruhat-core`.
//!
//! Permutations and words cross the boundary as opaque handles created by the
//! `*_parse` functions and released with the matching `*_free`. Every
//! fallible call returns a [`BruhatStatus`]; on failure a message is
//! available from [`bruhat_last_error`] on the same thread. Strings returned
//! by the library are freed with [`bruhat_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bruhat_core::constants::c_constant;
use bruhat_core::insertion::insert;
use bruhat_core::umonoid::{count_reduced_words, evaluate_word, rank_polynomial_bounded, universal_length, DEFAULT_MAX_N};
use bruhat_core::{leq_k, Error, MaybePermutation, Partition, Permutation, Word, WordOrder};

/// Outcome of a call. The first four values match the exit codes of the
/// `bruhat` command.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruhatStatus {
    Ok = 0,
    /// A well-formed request with no answer, such as a zero word.
    Domain = 1,
    /// Malformed input text.
    Usage = 2,
    /// An internal invariant failed or the engine panicked.
    Internal = 3,
    /// A size guard was hit.
    Resource = 4,
    /// A required pointer argument was null.
    NullArgument = 5,
}

/// Opaque permutation handle.
pub struct BruhatPerm(Permutation);

/// Opaque word handle.
pub struct BruhatWord(Word);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> BruhatStatus {
    if e.is_usage() {
        BruhatStatus::Usage
    } else if e.is_internal() {
        BruhatStatus::Internal
    } else if matches!(e, Error::Resource(_)) {
        BruhatStatus::Resource
    } else {
        BruhatStatus::Domain
    }
}

struct Fail(BruhatStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BruhatStatus::NullArgument, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> BruhatStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BruhatStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("the engine panicked".into());
            BruhatStatus::Internal
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null("input string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(BruhatStatus::Usage, "input is not UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

fn order(application: bool) -> WordOrder {
    if application {
        WordOrder::Application
    } else {
        WordOrder::Paper
    }
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failed call on this thread, or null. Valid
/// until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn bruhat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bruhat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a comma-separated window such as `2,5,4,1,6,3`.
///
/// # Safety
/// `s` must be a NUL-terminated string and `out_perm` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_perm_parse(s: *const c_char, out_perm: *mut *mut BruhatPerm) -> BruhatStatus {
    guard(|| {
        let slot = out(out_perm)?;
        let p: Permutation = text(s)?.parse()?;
        *slot = Box::into_raw(Box::new(BruhatPerm(p)));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bruhat_perm_free(p: *mut BruhatPerm) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The window of `p` as text, or null if `p` is null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bruhat_perm_to_string(p: *const BruhatPerm) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| owned_string(p.0.to_string()))
}

/// # Safety
/// `z` must be a live handle and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_universal_length(z: *const BruhatPerm, len: *mut usize) -> BruhatStatus {
    guard(|| {
        let z = deref(z, "permutation")?;
        *out(len)? = universal_length(&z.0);
        Ok(())
    })
}

/// # Safety
/// `u`, `w` must be live handles and `result` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_leq_k(
    u: *const BruhatPerm,
    w: *const BruhatPerm,
    k: usize,
    result: *mut bool,
) -> BruhatStatus {
    guard(|| {
        let (u, w) = (deref(u, "u")?, deref(w, "w")?);
        *out(result)? = leq_k(&u.0, &w.0, k);
        Ok(())
    })
}

/// Number of reduced words of `z`, which is the number of maximal chains of
/// its interval.
///
/// # Safety
/// `z` must be a live handle and `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_reduced_word_count(z: *const BruhatPerm, count: *mut u64) -> BruhatStatus {
    guard(|| {
        let z = deref(z, "permutation")?;
        *out(count)? = count_reduced_words(&z.0);
        Ok(())
    })
}

/// `c_λ(z)` for the partition with `len` parts starting at `parts`.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null with `len` 0),
/// `z` must be a live handle and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_c_constant(
    z: *const BruhatPerm,
    parts: *const usize,
    len: usize,
    value: *mut i64,
) -> BruhatStatus {
    guard(|| {
        let z = deref(z, "permutation")?;
        let parts = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(null("parts"));
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        *out(value)? = c_constant(&z.0, &Partition::new(parts)?)?;
        Ok(())
    })
}

/// Writes up to `cap` coefficients of `P_n(t)`, constant term first, and
/// stores the full count in `len`. Call with `cap` 0 to size the buffer.
///
/// # Safety
/// `coeffs` must have room for `cap` values (or be null with `cap` 0) and
/// `len` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_rank_polynomial(
    n: usize,
    coeffs: *mut i64,
    cap: usize,
    len: *mut usize,
) -> BruhatStatus {
    guard(|| {
        let len = out(len)?;
        let p = rank_polynomial_bounded(n, DEFAULT_MAX_N)?;
        *len = p.coeffs().len();
        if cap > 0 {
            if coeffs.is_null() {
                return Err(null("coefficient buffer"));
            }
            let dst = std::slice::from_raw_parts_mut(coeffs, cap);
            for (d, &c) in dst.iter_mut().zip(p.coeffs()) {
                *d = c;
            }
        }
        Ok(())
    })
}

/// Parses a word such as `u[3,4] u[1,4]`, written last factor first unless
/// `application_order` is set.
///
/// # Safety
/// `s` must be a NUL-terminated string and `out_word` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_word_parse(
    s: *const c_char,
    application_order: bool,
    out_word: *mut *mut BruhatWord,
) -> BruhatStatus {
    guard(|| {
        let slot = out(out_word)?;
        let w = Word::parse_text(text(s)?, order(application_order))?;
        *slot = Box::into_raw(Box::new(BruhatWord(w)));
        Ok(())
    })
}

/// # Safety
/// `w` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bruhat_word_free(w: *mut BruhatWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bruhat_word_to_string(w: *const BruhatWord, application_order: bool) -> *mut c_char {
    w.as_ref()
        .map_or(ptr::null_mut(), |w| owned_string(w.0.to_text(order(application_order))))
}

/// Evaluates `w` in the monoid. A zero word yields [`BruhatStatus::Domain`].
///
/// # Safety
/// `w` must be a live handle and `out_perm` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_word_evaluate(w: *const BruhatWord, out_perm: *mut *mut BruhatPerm) -> BruhatStatus {
    guard(|| {
        let w = deref(w, "word")?;
        let slot = out(out_perm)?;
        match evaluate_word(&w.0) {
            MaybePermutation::Perm(p) => {
                *slot = Box::into_raw(Box::new(BruhatPerm(p)));
                Ok(())
            }
            MaybePermutation::Zero => Err(Error::ZeroWord.into()),
        }
    })
}

/// Rewrites a word of shape `(1,n)` into shape `(n,1)`.
///
/// # Safety
/// `w` must be a live handle and `out_word` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bruhat_word_insert(w: *const BruhatWord, out_word: *mut *mut BruhatWord) -> BruhatStatus {
    guard(|| {
        let w = deref(w, "word")?;
        let slot = out(out_word)?;
        let trace = insert(&w.0)?;
        *slot = Box::into_raw(Box::new(BruhatWord(trace.result)));
        Ok(())
    })
}
