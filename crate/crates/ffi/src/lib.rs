// Copyright 2026 The zcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! C ABI over `zcube`.
//!
//! Conventions: every fallible call returns a [`ZcubeStatus`] and writes its
//! result through an out-pointer, which is left untouched on failure.
//! Handles are opaque, created by `*_new`/producer calls and released with
//! the matching `*_free`. Vertices cross the boundary either as integers
//! (bit 1 most significant, `n <= 40`) or as NUL-terminated `0`/`1` text.
//! The message for the last failure on the calling thread is available from
//! [`zcube_last_error`]. Panics never unwind into the caller.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use zcube::analysis::{self, Limits};
use zcube::routing::{self, Walk};
use zcube::{kappa, Adjacency, BitString, CubeFamily, CubeGraph, Error};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZcubeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    LengthMismatch = 4,
    OutOfRange = 5,
    Unsupported = 6,
    CapExceeded = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// Values for the `kind` argument. Functions take `kind` as a plain
/// integer so that out-of-range values are reported, not undefined.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZcubeFamilyKind {
    H = 0,
    Q = 1,
    /// Uses the accompanying `k` argument.
    Z = 2,
}

/// Bounds for one `n`. `zstar` is meaningful only when `has_zstar`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZcubeBounds {
    pub kappa: u32,
    pub lower: u64,
    pub sigma: f64,
    pub thm1: f64,
    pub zstar: f64,
    pub has_zstar: bool,
}

/// Opaque graph handle.
pub struct ZcubeGraph {
    graph: CubeGraph,
}

/// Opaque walk handle.
pub struct ZcubeWalk {
    walk: Walk,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

type Fallible<T> = Result<T, (ZcubeStatus, String)>;

fn lift(e: Error) -> (ZcubeStatus, String) {
    let status = match &e {
        Error::Parse { .. } => ZcubeStatus::Parse,
        Error::LengthMismatch { .. } => ZcubeStatus::LengthMismatch,
        Error::IndexOutOfRange { .. } => ZcubeStatus::OutOfRange,
        Error::Contract(_) => ZcubeStatus::InvalidArgument,
        Error::Unsupported(_) => ZcubeStatus::Unsupported,
        Error::CapExceeded { .. } => ZcubeStatus::CapExceeded,
    };
    (status, e.to_string())
}

fn null(what: &str) -> (ZcubeStatus, String) {
    (ZcubeStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, stores its value through `out` on success, and converts
/// failures and panics into status codes.
fn guard<T>(out: *mut T, body: impl FnOnce() -> Fallible<T>) -> ZcubeStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return ZcubeStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(value)) => {
            // SAFETY: `out` is non-null and the caller promises it is valid for writes.
            unsafe { out.write(value) };
            set_error("");
            ZcubeStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ZcubeStatus::Panic
        }
    }
}

fn family(kind: u32, k: u32) -> Fallible<CubeFamily> {
    const H: u32 = ZcubeFamilyKind::H as u32;
    const Q: u32 = ZcubeFamilyKind::Q as u32;
    const Z: u32 = ZcubeFamilyKind::Z as u32;
    match kind {
        H => Ok(CubeFamily::H),
        Q => Ok(CubeFamily::Q),
        Z => CubeFamily::z(k).map_err(lift),
        _ => Err((
            ZcubeStatus::InvalidArgument,
            format!("unknown family kind {kind}"),
        )),
    }
}

/// # Safety
/// `text` must be null or a valid NUL-terminated string.
unsafe fn vertex_text(text: *const c_char, what: &str) -> Fallible<BitString> {
    if text.is_null() {
        return Err(null(what));
    }
    let s = CStr::from_ptr(text)
        .to_str()
        .map_err(|_| (ZcubeStatus::Parse, format!("{what} is not UTF-8")))?;
    s.parse().map_err(lift)
}

/// # Safety
/// `g` must be null or a live handle from [`zcube_graph_new`].
unsafe fn graph<'a>(g: *const ZcubeGraph) -> Fallible<&'a CubeGraph> {
    g.as_ref().map(|g| &g.graph).ok_or_else(|| null("graph"))
}

fn check_vertex(g: &CubeGraph, v: u64) -> Fallible<()> {
    if v >= g.order() {
        return Err((
            ZcubeStatus::OutOfRange,
            format!("vertex {v} outside 0..2^{}", g.dim()),
        ));
    }
    Ok(())
}

/// Creates the `n`-dimensional member of a family (`1 <= n <= 40`).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_graph_new(
    kind: u32,
    k: u32,
    n: u32,
    out: *mut *mut ZcubeGraph,
) -> ZcubeStatus {
    guard(out, || {
        let graph = CubeGraph::new(family(kind, k)?, n as usize).map_err(lift)?;
        Ok(Box::into_raw(Box::new(ZcubeGraph { graph })))
    })
}

/// # Safety
/// `g` must be null or a handle from [`zcube_graph_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zcube_graph_free(g: *mut ZcubeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_graph_dim(g: *const ZcubeGraph, out: *mut u32) -> ZcubeStatus {
    guard(out, || Ok(graph(g)?.dim() as u32))
}

/// Neighbor of vertex `v` at `level` (1-based).
///
/// # Safety
/// `g` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_graph_neighbor(
    g: *const ZcubeGraph,
    v: u64,
    level: u32,
    out: *mut u64,
) -> ZcubeStatus {
    guard(out, || {
        let g = graph(g)?;
        check_vertex(g, v)?;
        let level = level as usize;
        if level == 0 || level > g.dim() {
            return Err((
                ZcubeStatus::OutOfRange,
                format!("level {level} outside 1..={}", g.dim()),
            ));
        }
        Ok(g.neighbor(v, level))
    })
}

/// # Safety
/// `g` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_graph_adjacent(
    g: *const ZcubeGraph,
    u: u64,
    v: u64,
    out: *mut bool,
) -> ZcubeStatus {
    guard(out, || {
        let g = graph(g)?;
        check_vertex(g, u)?;
        check_vertex(g, v)?;
        Ok(g.neighbors_of(u).any(|w| w == v))
    })
}

/// Exact diameter; refused above the exact cap (14 unless
/// `ZCUBE_MAX_EXACT_N` says otherwise).
///
/// # Safety
/// `g` must be a live handle; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_graph_diameter(g: *const ZcubeGraph, out: *mut u32) -> ZcubeStatus {
    guard(out, || {
        let g = graph(g)?;
        analysis::diameter_exact(g.family(), g.dim(), &Limits::from_env()).map_err(lift)
    })
}

fn walk_handle(walk: Walk) -> *mut ZcubeWalk {
    Box::into_raw(Box::new(ZcubeWalk { walk }))
}

/// Routes between two vertices given as text, with any `n`.
///
/// # Safety
/// `from` and `to` must be NUL-terminated strings; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_route(
    kind: u32,
    k: u32,
    from: *const c_char,
    to: *const c_char,
    compact: bool,
    out: *mut *mut ZcubeWalk,
) -> ZcubeStatus {
    guard(out, || {
        let f = family(kind, k)?;
        let (x, y) = (vertex_text(from, "from")?, vertex_text(to, "to")?);
        Ok(walk_handle(
            routing::route(f, &x, &y, compact).map_err(lift)?,
        ))
    })
}

/// Hamiltonian path of `H_n`, `3 <= n <= 24`.
///
/// # Safety
/// `from` and `to` must be NUL-terminated strings; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_hamiltonian_path(
    from: *const c_char,
    to: *const c_char,
    out: *mut *mut ZcubeWalk,
) -> ZcubeStatus {
    guard(out, || {
        let (x, y) = (vertex_text(from, "from")?, vertex_text(to, "to")?);
        Ok(walk_handle(
            routing::hamiltonian_path(&x, &y).map_err(lift)?,
        ))
    })
}

/// Number of vertices in the walk (edges + 1); 0 for a null handle.
///
/// # Safety
/// `w` must be null or a live walk handle.
#[no_mangle]
pub unsafe extern "C" fn zcube_walk_count(w: *const ZcubeWalk) -> usize {
    w.as_ref().map_or(0, |w| w.walk.vertices().len())
}

/// Copies vertex `i` as NUL-terminated text into `buf` (`n + 1` bytes).
///
/// # Safety
/// `w` must be a live walk handle; `buf` valid for `buf_len` bytes.
#[no_mangle]
pub unsafe extern "C" fn zcube_walk_vertex(
    w: *const ZcubeWalk,
    i: usize,
    buf: *mut c_char,
    buf_len: usize,
) -> ZcubeStatus {
    let mut unit = ();
    guard(&mut unit, || {
        let w = w.as_ref().ok_or_else(|| null("walk"))?;
        if buf.is_null() {
            return Err(null("buffer"));
        }
        let v = w.walk.vertices().get(i).ok_or_else(|| {
            (
                ZcubeStatus::OutOfRange,
                format!("vertex {i} outside 0..{}", w.walk.vertices().len()),
            )
        })?;
        let text = v.to_string();
        if buf_len < text.len() + 1 {
            return Err((
                ZcubeStatus::BufferTooSmall,
                format!("need {} bytes", text.len() + 1),
            ));
        }
        // SAFETY: buf has room for text plus the terminator.
        std::ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
        *buf.add(text.len()) = 0;
        Ok(())
    })
}

/// # Safety
/// `w` must be null or a walk handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zcube_walk_free(w: *mut ZcubeWalk) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_kappa(n: u64, out: *mut u32) -> ZcubeStatus {
    guard(out, || kappa::kappa(n).map_err(lift))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn zcube_bounds(n: u64, out: *mut ZcubeBounds) -> ZcubeStatus {
    guard(out, || {
        let row = kappa::BoundsRow::compute(n, &[]).map_err(lift)?;
        Ok(ZcubeBounds {
            kappa: row.kappa,
            lower: row.lower,
            sigma: kappa::to_f64(&row.sigma),
            thm1: kappa::to_f64(&row.thm1),
            zstar: row.zstar.unwrap_or(f64::NAN),
            has_zstar: row.zstar.is_some(),
        })
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn zcube_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
