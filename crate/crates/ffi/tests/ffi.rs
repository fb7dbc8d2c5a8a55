use std::ffi::{CStr, CString};
use std::ptr;

use bruhat_ffi::*;

fn perm(s: &str) -> *mut BruhatPerm {
    let s = CString::new(s).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { bruhat_perm_parse(s.as_ptr(), &mut p) }, BruhatStatus::Ok);
    p
}

fn word(s: &str) -> *mut BruhatWord {
    let s = CString::new(s).unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { bruhat_word_parse(s.as_ptr(), false, &mut w) }, BruhatStatus::Ok);
    w
}

fn last_error() -> String {
    let e = bruhat_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_string()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    bruhat_string_free(s);
    out
}

#[test]
fn permutation_queries() {
    let z = perm("2,5,4,1,6,3");
    unsafe {
        assert_eq!(take(bruhat_perm_to_string(z)), "2,5,4,1,6,3");
        let mut len = 0;
        assert_eq!(bruhat_universal_length(z, &mut len), BruhatStatus::Ok);
        assert_eq!(len, 5);
        let mut count = 0;
        assert_eq!(bruhat_reduced_word_count(z, &mut count), BruhatStatus::Ok);
        assert_eq!(count, 14);
        let mut c = 0;
        let parts = [2usize, 2, 1];
        assert_eq!(bruhat_c_constant(z, parts.as_ptr(), parts.len(), &mut c), BruhatStatus::Ok);
        assert_eq!(c, 2);
        let bad = [1usize, 2];
        assert_eq!(bruhat_c_constant(z, bad.as_ptr(), bad.len(), &mut c), BruhatStatus::Usage);
        assert!(last_error().contains("weakly decreasing"));
        bruhat_perm_free(z);
    }
}

#[test]
fn k_order() {
    let (u, w) = (perm("2,1,4,3,5"), perm("4,5,1,2,3"));
    let mut leq = false;
    unsafe {
        assert_eq!(bruhat_leq_k(u, w, 2, &mut leq), BruhatStatus::Ok);
        assert!(leq);
        assert_eq!(bruhat_leq_k(w, u, 2, &mut leq), BruhatStatus::Ok);
        assert!(!leq);
        bruhat_perm_free(u);
        bruhat_perm_free(w);
    }
}

#[test]
fn rank_polynomial_buffer() {
    let mut len = 0;
    unsafe {
        assert_eq!(bruhat_rank_polynomial(4, ptr::null_mut(), 0, &mut len), BruhatStatus::Ok);
        assert_eq!(len, 5);
        let mut buf = vec![0i64; len];
        assert_eq!(bruhat_rank_polynomial(4, buf.as_mut_ptr(), buf.len(), &mut len), BruhatStatus::Ok);
        assert_eq!(buf, [1, 6, 10, 6, 1]);
        assert_eq!(bruhat_rank_polynomial(10, ptr::null_mut(), 0, &mut len), BruhatStatus::Resource);
        assert_eq!(bruhat_rank_polynomial(0, ptr::null_mut(), 0, &mut len), BruhatStatus::Domain);
    }
}

#[test]
fn words() {
    let x = word("u[2,3] u[1,2] u[2,4]");
    unsafe {
        assert_eq!(take(bruhat_word_to_string(x, true)), "u[2,4] u[1,2] u[2,3]");
        let mut p = ptr::null_mut();
        assert_eq!(bruhat_word_evaluate(x, &mut p), BruhatStatus::Ok);
        let mut y = ptr::null_mut();
        assert_eq!(bruhat_word_insert(x, &mut y), BruhatStatus::Ok);
        assert_eq!(take(bruhat_word_to_string(y, false)), "u[1,3] u[3,4] u[2,3]");
        let mut q = ptr::null_mut();
        assert_eq!(bruhat_word_evaluate(y, &mut q), BruhatStatus::Ok);
        assert_eq!(take(bruhat_perm_to_string(p)), take(bruhat_perm_to_string(q)));
        for h in [p, q] {
            bruhat_perm_free(h);
        }
        bruhat_word_free(x);
        bruhat_word_free(y);

        let zero = word("u[1,2] u[1,2]");
        let mut p = ptr::null_mut();
        assert_eq!(bruhat_word_evaluate(zero, &mut p), BruhatStatus::Domain);
        assert!(p.is_null());
        assert_eq!(last_error(), "word evaluates to zero");
        bruhat_word_free(zero);
    }
}

#[test]
fn errors_and_nulls() {
    let mut p = ptr::null_mut();
    let bad = CString::new("1,1").unwrap();
    unsafe {
        assert_eq!(bruhat_perm_parse(bad.as_ptr(), &mut p), BruhatStatus::Usage);
        assert!(p.is_null());
        assert!(last_error().contains("not a permutation"));
        assert_eq!(bruhat_perm_parse(ptr::null(), &mut p), BruhatStatus::NullArgument);
        assert_eq!(bruhat_universal_length(ptr::null(), ptr::null_mut()), BruhatStatus::NullArgument);
        let good = CString::new("2,1").unwrap();
        assert_eq!(bruhat_perm_parse(good.as_ptr(), ptr::null_mut()), BruhatStatus::NullArgument);
        assert_eq!(bruhat_perm_parse(good.as_ptr(), &mut p), BruhatStatus::Ok);
        assert!(bruhat_last_error().is_null());
        assert!(bruhat_perm_to_string(ptr::null()).is_null());
        bruhat_perm_free(p);
        bruhat_perm_free(ptr::null_mut());
        bruhat_word_free(ptr::null_mut());
        bruhat_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_interface() {
    let header = include_str!("../include/bruhat.h");
    for name in [
        "BRUHAT_STATUS_OK = 0",
        "BRUHAT_STATUS_INTERNAL = 3",
        "typedef struct BruhatPerm BruhatPerm;",
        "typedef struct BruhatWord BruhatWord;",
        "bruhat_last_error(void)",
        "bruhat_perm_parse(",
        "bruhat_c_constant(",
        "bruhat_rank_polynomial(",
        "bruhat_word_insert(",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
