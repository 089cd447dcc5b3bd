//! C ABI over `blockperm`.
//!
//! Permutations cross the boundary as opaque `BpPermutation` handles owned by
//! the caller and released with [`bp_perm_free`]. Fallible calls return a
//! [`BpStatus`] and write results through out-pointers; the message for the
//! most recent failure on the calling thread is available from
//! [`bp_last_error`]. Strings returned by the library are freed with
//! [`bp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::slice;

use blockperm::bijections;
use blockperm::enumeration::{self, Selector};
use blockperm::tableaux::{self, Shape, SkewShape};
use blockperm::{BlockPermutation, Composition, Error};

/// Result codes of fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    SizeCap = 5,
    InvalidShape = 6,
    Internal = 7,
}

/// Which family [`bp_count`] enumerates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BpFamily {
    /// Avoids `12...(k+2)`; the parameter is `k`.
    Avoiding = 0,
    /// Longest increasing subsequence exactly `h`; the parameter is `h`.
    Lis = 1,
}

/// Opaque handle to an immutable block-ascending permutation.
pub struct BpPermutation(BlockPermutation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg).unwrap_or_else(|_| c"error message contained NUL".to_owned());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: BpStatus, msg: impl Into<String>) -> BpStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> BpStatus {
    match e {
        Error::Malformed(_)
        | Error::DuplicateValue(_)
        | Error::NotAPermutation { .. }
        | Error::DescentInBlock { .. }
        | Error::LengthMismatch { .. } => BpStatus::ParseError,
        Error::SizeCap { .. } => BpStatus::SizeCap,
        Error::InvalidShape(_) => BpStatus::InvalidShape,
        Error::Internal(_) => BpStatus::Internal,
        _ => BpStatus::DomainError,
    }
}

fn from_error(e: Error) -> BpStatus {
    fail(status_of(&e), e.to_string())
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn bp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bp_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: caller guarantees `s` came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `perm` must be NULL or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_free(perm: *mut BpPermutation) {
    if !perm.is_null() {
        // SAFETY: caller guarantees `perm` came from `Box::into_raw`.
        drop(unsafe { Box::from_raw(perm) });
    }
}

unsafe fn handle<'a>(perm: *const BpPermutation) -> Result<&'a BlockPermutation, BpStatus> {
    // SAFETY: caller guarantees `perm` is NULL or a live handle.
    unsafe { perm.as_ref() }
        .map(|p| &p.0)
        .ok_or_else(|| fail(BpStatus::NullPointer, "permutation handle is NULL"))
}

unsafe fn parts<'a>(ptr: *const usize, len: usize) -> Result<&'a [usize], BpStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(fail(BpStatus::NullPointer, "parts pointer is NULL"));
    }
    // SAFETY: caller guarantees `ptr` points to `len` readable values.
    Ok(unsafe { slice::from_raw_parts(ptr, len) })
}

unsafe fn emit_perm(out: *mut *mut BpPermutation, result: blockperm::Result<BlockPermutation>) -> BpStatus {
    if out.is_null() {
        return fail(BpStatus::NullPointer, "output pointer is NULL");
    }
    match result {
        Ok(pi) => {
            // SAFETY: `out` is non-null and writable per the caller contract.
            unsafe { *out = Box::into_raw(Box::new(BpPermutation(pi))) };
            BpStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

unsafe fn emit_string(out: *mut *mut c_char, text: String) -> BpStatus {
    if out.is_null() {
        return fail(BpStatus::NullPointer, "output pointer is NULL");
    }
    let s = CString::new(text).expect("library strings contain no NUL");
    // SAFETY: `out` is non-null and writable per the caller contract.
    unsafe { *out = s.into_raw() };
    BpStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Parses `236|14578` or `2,3,6|1,4,5,7,8` into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_parse(text: *const c_char, out: *mut *mut BpPermutation) -> BpStatus {
    if text.is_null() {
        return fail(BpStatus::NullPointer, "text is NULL");
    }
    // SAFETY: caller guarantees a NUL-terminated string.
    let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return fail(BpStatus::InvalidUtf8, "text is not UTF-8");
    };
    unsafe { emit_perm(out, blockperm::parse(text)) }
}

/// Builds a handle from block lengths and values.
///
/// # Safety
/// `parts` must hold `n_parts` values and `values` must hold `n_values`.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_new(
    parts_ptr: *const usize,
    n_parts: usize,
    values: *const u32,
    n_values: usize,
    out: *mut *mut BpPermutation,
) -> BpStatus {
    let comp = try_status!(unsafe { parts(parts_ptr, n_parts) });
    let values: &[u32] = if n_values == 0 {
        &[]
    } else if values.is_null() {
        return fail(BpStatus::NullPointer, "values pointer is NULL");
    } else {
        // SAFETY: caller guarantees `n_values` readable values.
        unsafe { slice::from_raw_parts(values, n_values) }
    };
    unsafe { emit_perm(out, BlockPermutation::new(Composition::new(comp.to_vec()), values.to_vec())) }
}

/// Canonical text form; free with [`bp_string_free`].
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_to_string(perm: *const BpPermutation, out: *mut *mut c_char) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_string(out, pi.to_string()) }
}

/// `{"comp":[...],"values":[...]}`; free with [`bp_string_free`].
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_to_json(perm: *const BpPermutation, out: *mut *mut c_char) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_string(out, serde_json::to_string(pi).expect("permutation serializes")) }
}

/// `N`, or 0 for a NULL handle.
///
/// # Safety
/// `perm` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_size(perm: *const BpPermutation) -> usize {
    unsafe { perm.as_ref() }.map_or(0, |p| p.0.size())
}

/// Number of blocks, or 0 for a NULL handle.
///
/// # Safety
/// `perm` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_block_count(perm: *const BpPermutation) -> usize {
    unsafe { perm.as_ref() }.map_or(0, |p| p.0.block_count())
}

/// Copies up to `cap` values into `out` and returns `N`.
///
/// # Safety
/// `perm` must be a live handle and `out` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_values(perm: *const BpPermutation, out: *mut u32, cap: usize) -> usize {
    let Some(p) = (unsafe { perm.as_ref() }) else {
        return 0;
    };
    let values = p.0.values();
    if !out.is_null() {
        let n = values.len().min(cap);
        // SAFETY: `out` has room for `cap >= n` values.
        unsafe { ptr::copy_nonoverlapping(values.as_ptr(), out, n) };
    }
    values.len()
}

/// Length of the longest increasing subsequence, or 0 for a NULL handle.
///
/// # Safety
/// `perm` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bp_perm_lis_length(perm: *const BpPermutation) -> usize {
    unsafe { perm.as_ref() }.map_or(0, |p| p.0.lis_length())
}

fn two_block(pi: &BlockPermutation, step: fn(&blockperm::TwoBlockView) -> blockperm::Result<blockperm::TwoBlockView>) -> blockperm::Result<BlockPermutation> {
    let view = blockperm::TwoBlockView::try_from(pi)?;
    step(&view).map(|v| v.to_block_permutation())
}

/// W on a two-block permutation.
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_map_w(perm: *const BpPermutation, out: *mut *mut BpPermutation) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_perm(out, two_block(pi, bijections::map_w)) }
}

/// V on a two-block permutation.
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_map_v(perm: *const BpPermutation, out: *mut *mut BpPermutation) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_perm(out, two_block(pi, bijections::map_v)) }
}

/// Exchanges the lengths of blocks `index` and `index + 1` (1-based).
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_swap_adjacent(perm: *const BpPermutation, index: usize, out: *mut *mut BpPermutation) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_perm(out, bijections::swap_adjacent(pi, index)) }
}

/// One unit transfer from block `index + 1` into block `index` (1-based).
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_transfer_step(perm: *const BpPermutation, index: usize, out: *mut *mut BpPermutation) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_perm(out, bijections::transfer_step(pi, index)) }
}

/// Rearranges the blocks into the target composition.
///
/// # Safety
/// `perm` must be a live handle, `target` must hold `n_target` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_reorder_blocks(
    perm: *const BpPermutation,
    target: *const usize,
    n_target: usize,
    out: *mut *mut BpPermutation,
) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    let target = Composition::new(try_status!(unsafe { parts(target, n_target) }).to_vec());
    unsafe { emit_perm(out, bijections::reorder_blocks_untraced(pi, &target)) }
}

/// Injects into the target composition, which the input must majorize.
///
/// # Safety
/// As for [`bp_reorder_blocks`].
#[no_mangle]
pub unsafe extern "C" fn bp_majorize_inject(
    perm: *const BpPermutation,
    target: *const usize,
    n_target: usize,
    out: *mut *mut BpPermutation,
) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    let target = Composition::new(try_status!(unsafe { parts(target, n_target) }).to_vec());
    unsafe { emit_perm(out, bijections::majorize_inject_untraced(pi, &target)) }
}

/// Appends `N + 1` to a first block of length `k`.
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_insert_max(perm: *const BpPermutation, k: usize, out: *mut *mut BpPermutation) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_perm(out, bijections::insert_max(pi, k)) }
}

/// Removes the maximum from a first block of length `k + 1`.
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_delete_max(perm: *const BpPermutation, k: usize, out: *mut *mut BpPermutation) -> BpStatus {
    let pi = try_status!(unsafe { handle(perm) });
    unsafe { emit_perm(out, bijections::delete_max(pi, k)) }
}

/// Brute-force cardinality of `L_{k+2}(parts)` or `D_h(parts)`.
///
/// # Safety
/// `parts` must hold `n_parts` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_count(
    family: BpFamily,
    param: usize,
    parts_ptr: *const usize,
    n_parts: usize,
    out: *mut u64,
) -> BpStatus {
    if out.is_null() {
        return fail(BpStatus::NullPointer, "output pointer is NULL");
    }
    let comp = Composition::new(try_status!(unsafe { parts(parts_ptr, n_parts) }).to_vec());
    let selector = match family {
        BpFamily::Avoiding => Selector::K(param),
        BpFamily::Lis => Selector::Lis(param),
    };
    match enumeration::count(selector, &comp) {
        Ok(n) => match u64::try_from(n) {
            Ok(n) => {
                // SAFETY: checked non-null above.
                unsafe { *out = n };
                BpStatus::Ok
            }
            Err(_) => fail(BpStatus::Internal, "count exceeds 64 bits"),
        },
        Err(e) => from_error(e),
    }
}

/// Catalan triangle entry `C(n, k)` as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_catalan_triangle(n: u64, k: u64, out: *mut *mut c_char) -> BpStatus {
    match enumeration::catalan_triangle(n, k) {
        Ok(c) => unsafe { emit_string(out, c.to_string()) },
        Err(e) => from_error(e),
    }
}

/// Number of standard fillings of `outer / inner` as a decimal string.
///
/// # Safety
/// `outer` and `inner` must hold `n_outer` and `n_inner` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bp_skew_count(
    outer: *const usize,
    n_outer: usize,
    inner: *const usize,
    n_inner: usize,
    out: *mut *mut c_char,
) -> BpStatus {
    let outer = try_status!(unsafe { parts(outer, n_outer) });
    let inner = try_status!(unsafe { parts(inner, n_inner) });
    let shape = Shape::new(outer.to_vec()).and_then(|o| SkewShape::new(o, Shape::new(inner.to_vec())?));
    match shape.and_then(|s| tableaux::skew_count(&s)) {
        Ok(c) => unsafe { emit_string(out, c.to_string()) },
        Err(e) => from_error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(status_of(&Error::DuplicateValue(3)), BpStatus::ParseError);
        assert_eq!(status_of(&Error::SizeCap { size: 20, cap: 14 }), BpStatus::SizeCap);
        assert_eq!(status_of(&Error::Domain("x".into())), BpStatus::DomainError);
        assert_eq!(status_of(&Error::InvalidShape("x".into())), BpStatus::InvalidShape);
    }

    #[test]
    fn last_error_is_per_failure() {
        assert_eq!(fail(BpStatus::Internal, "first"), BpStatus::Internal);
        let msg = unsafe { CStr::from_ptr(bp_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "first");
        set_error("with\0nul".into());
        let msg = unsafe { CStr::from_ptr(bp_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "error message contained NUL");
    }
}
