#![allow(non_camel_case_types)]
//! C ABI for the ghzbell library.
//!
//! Conventions:
//! - Tensors are opaque handles created by `ghzbell_tensor_new` and released
//!   with `ghzbell_tensor_free`.
//! - Every fallible function returns a `ghzbell_status`; results come back
//!   through out-pointers, written only on `GHZBELL_OK`.
//! - Coefficients and correlators are flat arrays with the first party
//!   slowest, matching the library layout.
//! - Handles are immutable after creation and safe to share across threads.
//!
//! The matching header is generated into `include/ghzbell.h` at build time.

use ghzbell::facet::find_facet_with;
use ghzbell::polytope::{check_tightness, enumerate_vertices, local_bound_int};
use ghzbell::quantum::{ghz_point, seesaw_equatorial, seesaw_general, visibility};
use ghzbell::tensor::{AngleProfile, CorrelationPoint, RealTensor};
use ghzbell::{BellTensor, Scenario};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ghzbell_status {
    GHZBELL_OK = 0,
    /// A pointer argument was null.
    GHZBELL_NULL_POINTER = 1,
    /// Scenario, length or parameter out of range.
    GHZBELL_INVALID_ARGUMENT = 2,
    /// The computation reported an error (see `ghzbell` library docs).
    GHZBELL_COMPUTE_FAILED = 3,
    /// A caller-provided buffer is too small.
    GHZBELL_BUFFER_TOO_SMALL = 4,
    /// An internal invariant failed.
    GHZBELL_INTERNAL = 5,
}

use ghzbell_status::*;

/// Opaque integer Bell expression handle.
pub struct ghzbell_tensor {
    inner: BellTensor,
}

fn guard<F: FnOnce() -> ghzbell_status>(f: F) -> ghzbell_status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => GHZBELL_INTERNAL,
    }
}

unsafe fn tensor_ref<'a>(t: *const ghzbell_tensor) -> Option<&'a BellTensor> {
    t.as_ref().map(|h| &h.inner)
}

fn scenario(ma: u32, mb: u32, mc: u32) -> Option<Scenario> {
    Scenario::new(ma as usize, mb as usize, mc as usize).ok()
}

/// Creates a tensor from `len = ma*mb*mc` coefficients (first party
/// slowest). On success writes a new handle to `out`.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_tensor_new(
    ma: u32,
    mb: u32,
    mc: u32,
    coeffs: *const i64,
    len: usize,
    out: *mut *mut ghzbell_tensor,
) -> ghzbell_status {
    guard(|| {
        if coeffs.is_null() || out.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let Some(s) = scenario(ma, mb, mc) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        if len != s.dim() {
            return GHZBELL_INVALID_ARGUMENT;
        }
        let slice = std::slice::from_raw_parts(coeffs, len);
        match BellTensor::new(s, slice.to_vec()) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ghzbell_tensor { inner }));
                GHZBELL_OK
            }
            Err(_) => GHZBELL_INVALID_ARGUMENT,
        }
    })
}

/// Releases a tensor handle; null is a no-op.
///
/// # Safety
/// `t` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_tensor_free(t: *mut ghzbell_tensor) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Writes the setting counts of a tensor.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_tensor_scenario(
    t: *const ghzbell_tensor,
    ma: *mut u32,
    mb: *mut u32,
    mc: *mut u32,
) -> ghzbell_status {
    guard(|| {
        let (Some(t), false) = (tensor_ref(t), ma.is_null() || mb.is_null() || mc.is_null())
        else {
            return GHZBELL_NULL_POINTER;
        };
        let m = t.scenario().settings();
        *ma = m[0] as u32;
        *mb = m[1] as u32;
        *mc = m[2] as u32;
        GHZBELL_OK
    })
}

/// Copies the flat coefficients into `buf` (`len` must be at least the
/// tensor dimension).
///
/// # Safety
/// `buf` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_tensor_coeffs(
    t: *const ghzbell_tensor,
    buf: *mut i64,
    len: usize,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if buf.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let coeffs = t.coeffs();
        if len < coeffs.len() {
            return GHZBELL_BUFFER_TOO_SMALL;
        }
        std::slice::from_raw_parts_mut(buf, coeffs.len()).copy_from_slice(coeffs);
        GHZBELL_OK
    })
}

/// Exact local bound over deterministic strategies.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_local_bound(
    t: *const ghzbell_tensor,
    out_bound: *mut i64,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if out_bound.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        match local_bound_int(t) {
            Ok((b, _)) => {
                *out_bound = b;
                GHZBELL_OK
            }
            Err(_) => GHZBELL_COMPUTE_FAILED,
        }
    })
}

/// Facet certification at a claimed bound: writes whether the inequality is
/// tight and the affine rank of its saturating set.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_check_tightness(
    t: *const ghzbell_tensor,
    claimed_bound: i64,
    out_tight: *mut bool,
    out_rank: *mut u32,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if out_tight.is_null() || out_rank.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        match check_tightness(t, claimed_bound) {
            Ok(r) => {
                *out_tight = r.tight;
                *out_rank = r.saturation_rank as u32;
                GHZBELL_OK
            }
            Err(_) => GHZBELL_COMPUTE_FAILED,
        }
    })
}

/// Value of the expression against `len = dim` correlators in `[-1, 1]`.
///
/// # Safety
/// `correlators` must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_evaluate(
    t: *const ghzbell_tensor,
    correlators: *const f64,
    len: usize,
    out_value: *mut f64,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if correlators.is_null() || out_value.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let values = std::slice::from_raw_parts(correlators, len).to_vec();
        let Ok(p) = CorrelationPoint::new(t.scenario(), values) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        match t.evaluate(&p) {
            Ok(v) => {
                *out_value = v;
                GHZBELL_OK
            }
            Err(_) => GHZBELL_COMPUTE_FAILED,
        }
    })
}

/// GHZ correlators for equatorial angles: `angles` holds `ma+mb+mc` values
/// (first party first), `buf` receives `ma*mb*mc` correlators.
///
/// # Safety
/// `angles` and `buf` must point to arrays of the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_ghz_point(
    ma: u32,
    mb: u32,
    mc: u32,
    angles: *const f64,
    angles_len: usize,
    buf: *mut f64,
    buf_len: usize,
) -> ghzbell_status {
    guard(|| {
        if angles.is_null() || buf.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let Some(s) = scenario(ma, mb, mc) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        if angles_len != s.total_settings() {
            return GHZBELL_INVALID_ARGUMENT;
        }
        if buf_len < s.dim() {
            return GHZBELL_BUFFER_TOO_SMALL;
        }
        let flat = std::slice::from_raw_parts(angles, angles_len);
        let Ok(profile) = AngleProfile::from_flat(s, flat) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        match ghz_point(s, &profile) {
            Ok(p) => {
                std::slice::from_raw_parts_mut(buf, s.dim()).copy_from_slice(p.values());
                GHZBELL_OK
            }
            Err(_) => GHZBELL_COMPUTE_FAILED,
        }
    })
}

/// Best GHZ-equatorial see-saw value from `restarts` random starts.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_seesaw_equatorial(
    t: *const ghzbell_tensor,
    restarts: u32,
    seed: u64,
    out_value: *mut f64,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if out_value.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        match seesaw_equatorial(t, restarts as usize, seed) {
            Ok(c) => {
                *out_value = c.value;
                GHZBELL_OK
            }
            Err(_) => GHZBELL_INVALID_ARGUMENT,
        }
    })
}

/// General see-saw over arbitrary pure three-qubit states and traceless
/// observables; cross-checks the equatorial value.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_seesaw_general(
    t: *const ghzbell_tensor,
    restarts: u32,
    seed: u64,
    out_value: *mut f64,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if out_value.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        match seesaw_general(t, restarts as usize, seed) {
            Ok(c) => {
                *out_value = c.value;
                GHZBELL_OK
            }
            Err(_) => GHZBELL_INVALID_ARGUMENT,
        }
    })
}

/// Critical visibility `L / Q`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_visibility(
    local_bound: f64,
    quantum: f64,
    out: *mut f64,
) -> ghzbell_status {
    guard(|| {
        if out.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        match visibility(local_bound, quantum) {
            Ok(v) => {
                *out = v;
                GHZBELL_OK
            }
            Err(_) => GHZBELL_INVALID_ARGUMENT,
        }
    })
}

/// Snaps a real direction (`len = ma*mb*mc`) to a facet of the local
/// polytope and re-certifies it exactly. On success writes a new tensor
/// handle and its exact local bound.
///
/// # Safety
/// `direction` must point to `len` readable values; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_find_facet(
    ma: u32,
    mb: u32,
    mc: u32,
    direction: *const f64,
    len: usize,
    max_denominator: i64,
    out_tensor: *mut *mut ghzbell_tensor,
    out_bound: *mut i64,
) -> ghzbell_status {
    guard(|| {
        if direction.is_null() || out_tensor.is_null() || out_bound.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let Some(s) = scenario(ma, mb, mc) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        if len != s.dim() || max_denominator < 1 {
            return GHZBELL_INVALID_ARGUMENT;
        }
        let coeffs = std::slice::from_raw_parts(direction, len).to_vec();
        let Ok(g) = RealTensor::new(s, coeffs) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        let Ok(vertices) = enumerate_vertices(s) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        match find_facet_with(&g, &vertices, max_denominator) {
            Ok(res) => {
                *out_bound = res.local_bound;
                *out_tensor = Box::into_raw(Box::new(ghzbell_tensor { inner: res.tensor }));
                GHZBELL_OK
            }
            Err(_) => GHZBELL_COMPUTE_FAILED,
        }
    })
}

/// Hex canonical digest under relabeling equivalence, NUL-terminated.
/// `buf_len` must be at least 65.
///
/// # Safety
/// `buf` must point to `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_canonical_digest(
    t: *const ghzbell_tensor,
    buf: *mut c_char,
    buf_len: usize,
) -> ghzbell_status {
    guard(|| {
        let Some(t) = tensor_ref(t) else {
            return GHZBELL_NULL_POINTER;
        };
        if buf.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let Ok(digest) = ghzbell::equiv::canonical_digest(t) else {
            return GHZBELL_COMPUTE_FAILED;
        };
        if buf_len < digest.len() + 1 {
            return GHZBELL_BUFFER_TOO_SMALL;
        }
        let bytes = digest.as_bytes();
        let out = std::slice::from_raw_parts_mut(buf as *mut u8, bytes.len() + 1);
        out[..bytes.len()].copy_from_slice(bytes);
        out[bytes.len()] = 0;
        GHZBELL_OK
    })
}

/// Number of bundled catalog entries.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_catalog_len(out: *mut usize) -> ghzbell_status {
    guard(|| {
        if out.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        *out = ghzbell::catalog::entries().len();
        GHZBELL_OK
    })
}

/// Fetches catalog entry `index`: a new tensor handle, the published local
/// bound and visibility, and the NUL-terminated label (buffer of at least 16
/// bytes recommended).
///
/// # Safety
/// All pointers must be valid; `label_buf` must hold `label_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn ghzbell_catalog_entry(
    index: usize,
    out_tensor: *mut *mut ghzbell_tensor,
    out_bound: *mut i64,
    out_visibility: *mut f64,
    label_buf: *mut c_char,
    label_len: usize,
) -> ghzbell_status {
    guard(|| {
        if out_tensor.is_null() || out_bound.is_null() || out_visibility.is_null() {
            return GHZBELL_NULL_POINTER;
        }
        let entries = ghzbell::catalog::entries();
        let Some(e) = entries.get(index) else {
            return GHZBELL_INVALID_ARGUMENT;
        };
        if !label_buf.is_null() {
            let bytes = e.label.as_bytes();
            if label_len < bytes.len() + 1 {
                return GHZBELL_BUFFER_TOO_SMALL;
            }
            let out = std::slice::from_raw_parts_mut(label_buf as *mut u8, bytes.len() + 1);
            out[..bytes.len()].copy_from_slice(bytes);
            out[bytes.len()] = 0;
        }
        *out_bound = e.local_bound;
        *out_visibility = e.visibility;
        *out_tensor = Box::into_raw(Box::new(ghzbell_tensor {
            inner: e.tensor.clone(),
        }));
        GHZBELL_OK
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ghzbell_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mermin_handle() -> *mut ghzbell_tensor {
        let coeffs: [i64; 8] = [1, 0, 0, -1, 0, -1, -1, 0];
        let mut out: *mut ghzbell_tensor = std::ptr::null_mut();
        let st = unsafe { ghzbell_tensor_new(2, 2, 2, coeffs.as_ptr(), 8, &mut out) };
        assert_eq!(st, GHZBELL_OK);
        out
    }

    #[test]
    fn create_query_and_free() {
        let t = mermin_handle();
        let (mut ma, mut mb, mut mc) = (0u32, 0u32, 0u32);
        assert_eq!(
            unsafe { ghzbell_tensor_scenario(t, &mut ma, &mut mb, &mut mc) },
            GHZBELL_OK
        );
        assert_eq!((ma, mb, mc), (2, 2, 2));
        let mut buf = [0i64; 8];
        assert_eq!(
            unsafe { ghzbell_tensor_coeffs(t, buf.as_mut_ptr(), 8) },
            GHZBELL_OK
        );
        assert_eq!(buf, [1, 0, 0, -1, 0, -1, -1, 0]);
        unsafe { ghzbell_tensor_free(t) };
    }

    #[test]
    fn bound_tightness_and_seesaw() {
        let t = mermin_handle();
        let mut bound = 0i64;
        assert_eq!(unsafe { ghzbell_local_bound(t, &mut bound) }, GHZBELL_OK);
        assert_eq!(bound, 2);
        let (mut tight, mut rank) = (false, 0u32);
        assert_eq!(
            unsafe { ghzbell_check_tightness(t, 2, &mut tight, &mut rank) },
            GHZBELL_OK
        );
        assert!(tight);
        assert_eq!(rank, 8);
        let mut q = 0.0;
        assert_eq!(
            unsafe { ghzbell_seesaw_equatorial(t, 4, 7, &mut q) },
            GHZBELL_OK
        );
        assert!((q - 4.0).abs() < 1e-9);
        let mut v = 0.0;
        assert_eq!(unsafe { ghzbell_visibility(2.0, q, &mut v) }, GHZBELL_OK);
        assert!((v - 0.5).abs() < 1e-9);
        unsafe { ghzbell_tensor_free(t) };
    }

    #[test]
    fn null_and_size_errors() {
        let mut out: *mut ghzbell_tensor = std::ptr::null_mut();
        let st = unsafe { ghzbell_tensor_new(2, 2, 2, std::ptr::null(), 8, &mut out) };
        assert_eq!(st, GHZBELL_NULL_POINTER);
        let coeffs = [0i64; 7];
        let st = unsafe { ghzbell_tensor_new(2, 2, 2, coeffs.as_ptr(), 7, &mut out) };
        assert_eq!(st, GHZBELL_INVALID_ARGUMENT);
        let t = mermin_handle();
        let mut small = [0i64; 4];
        assert_eq!(
            unsafe { ghzbell_tensor_coeffs(t, small.as_mut_ptr(), 4) },
            GHZBELL_BUFFER_TOO_SMALL
        );
        unsafe { ghzbell_tensor_free(t) };
        unsafe { ghzbell_tensor_free(std::ptr::null_mut()) }; // no-op
    }

    #[test]
    fn facet_from_direction() {
        // Mermin direction snaps to the Mermin facet
        let dir: [f64; 8] = [1.0, 0.0, 0.0, -1.0, 0.0, -1.0, -1.0, 0.0];
        let mut t: *mut ghzbell_tensor = std::ptr::null_mut();
        let mut bound = 0i64;
        let st = unsafe {
            ghzbell_find_facet(2, 2, 2, dir.as_ptr(), 8, 10_000, &mut t, &mut bound)
        };
        assert_eq!(st, GHZBELL_OK);
        assert_eq!(bound, 2);
        let mut digest = [0i8; 80];
        assert_eq!(
            unsafe { ghzbell_canonical_digest(t, digest.as_mut_ptr(), 80) },
            GHZBELL_OK
        );
        unsafe { ghzbell_tensor_free(t) };
    }

    #[test]
    fn catalog_access() {
        let mut n = 0usize;
        assert_eq!(unsafe { ghzbell_catalog_len(&mut n) }, GHZBELL_OK);
        assert_eq!(n, 36);
        let mut t: *mut ghzbell_tensor = std::ptr::null_mut();
        let mut bound = 0i64;
        let mut vis = 0.0f64;
        let mut label = [0i8; 32];
        let st = unsafe {
            ghzbell_catalog_entry(0, &mut t, &mut bound, &mut vis, label.as_mut_ptr(), 32)
        };
        assert_eq!(st, GHZBELL_OK);
        assert!(bound > 0);
        assert!(vis > 0.49 && vis < 0.5);
        unsafe { ghzbell_tensor_free(t) };
    }
}
