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

use std::ffi::{CStr, CString};
use std::ptr;

use zcube_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(zcube_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn walk_vertices(w: *const ZcubeWalk) -> Vec<String> {
    let mut buf = vec![0 as std::ffi::c_char; 80];
    (0..unsafe { zcube_walk_count(w) })
        .map(|i| {
            let st = unsafe { zcube_walk_vertex(w, i, buf.as_mut_ptr(), buf.len()) };
            assert_eq!(st, ZcubeStatus::Ok);
            unsafe { CStr::from_ptr(buf.as_ptr()) }
                .to_string_lossy()
                .into_owned()
        })
        .collect()
}

#[test]
fn graph_lifecycle_and_queries() {
    let mut g = ptr::null_mut();
    let st = unsafe { zcube_graph_new(ZcubeFamilyKind::H as u32, 0, 3, &mut g) };
    assert_eq!(st, ZcubeStatus::Ok);
    let mut dim = 0;
    assert_eq!(unsafe { zcube_graph_dim(g, &mut dim) }, ZcubeStatus::Ok);
    assert_eq!(dim, 3);
    let mut u = 0;
    assert_eq!(
        unsafe { zcube_graph_neighbor(g, 0b001, 1, &mut u) },
        ZcubeStatus::Ok
    );
    assert_eq!(u, 0b111);
    let mut adj = false;
    assert_eq!(
        unsafe { zcube_graph_adjacent(g, 0b001, 0b111, &mut adj) },
        ZcubeStatus::Ok
    );
    assert!(adj);
    assert_eq!(
        unsafe { zcube_graph_adjacent(g, 0b001, 0b110, &mut adj) },
        ZcubeStatus::Ok
    );
    assert!(!adj);
    let mut d = 0;
    assert_eq!(unsafe { zcube_graph_diameter(g, &mut d) }, ZcubeStatus::Ok);
    assert_eq!(d, 2);
    assert_eq!(
        unsafe { zcube_graph_neighbor(g, 8, 1, &mut u) },
        ZcubeStatus::OutOfRange
    );
    assert_eq!(
        unsafe { zcube_graph_neighbor(g, 0, 4, &mut u) },
        ZcubeStatus::OutOfRange
    );
    assert!(last_error().contains("level 4"));
    unsafe { zcube_graph_free(g) };
    unsafe { zcube_graph_free(ptr::null_mut()) };
}

#[test]
fn bad_arguments_map_to_codes() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { zcube_graph_new(ZcubeFamilyKind::Z as u32, 0, 5, &mut g) },
        ZcubeStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { zcube_graph_new(7, 0, 5, &mut g) },
        ZcubeStatus::InvalidArgument
    );
    assert!(last_error().contains("unknown family kind"));
    assert_eq!(
        unsafe { zcube_graph_new(ZcubeFamilyKind::Q as u32, 0, 41, &mut g) },
        ZcubeStatus::CapExceeded
    );
    assert!(g.is_null());
    assert_eq!(
        unsafe { zcube_graph_new(ZcubeFamilyKind::Q as u32, 0, 4, ptr::null_mut()) },
        ZcubeStatus::NullPointer
    );
    let mut dim = 0;
    assert_eq!(
        unsafe { zcube_graph_dim(ptr::null(), &mut dim) },
        ZcubeStatus::NullPointer
    );
    let mut g15 = ptr::null_mut();
    assert_eq!(
        unsafe { zcube_graph_new(ZcubeFamilyKind::H as u32, 0, 15, &mut g15) },
        ZcubeStatus::Ok
    );
    let mut d = 0;
    assert_eq!(
        unsafe { zcube_graph_diameter(g15, &mut d) },
        ZcubeStatus::CapExceeded
    );
    unsafe { zcube_graph_free(g15) };
}

#[test]
fn routing_and_walks() {
    let (from, to) = (CString::new("000").unwrap(), CString::new("111").unwrap());
    let mut w = ptr::null_mut();
    let st = unsafe {
        zcube_route(
            ZcubeFamilyKind::H as u32,
            0,
            from.as_ptr(),
            to.as_ptr(),
            false,
            &mut w,
        )
    };
    assert_eq!(st, ZcubeStatus::Ok);
    assert_eq!(walk_vertices(w), ["000", "001", "111"]);
    let mut tiny = [0 as std::ffi::c_char; 3];
    assert_eq!(
        unsafe { zcube_walk_vertex(w, 0, tiny.as_mut_ptr(), tiny.len()) },
        ZcubeStatus::BufferTooSmall
    );
    let mut buf = [0 as std::ffi::c_char; 8];
    assert_eq!(
        unsafe { zcube_walk_vertex(w, 3, buf.as_mut_ptr(), buf.len()) },
        ZcubeStatus::OutOfRange
    );
    unsafe { zcube_walk_free(w) };

    let bad = CString::new("0x1").unwrap();
    let mut w = ptr::null_mut();
    let st = unsafe {
        zcube_route(
            ZcubeFamilyKind::Q as u32,
            0,
            bad.as_ptr(),
            to.as_ptr(),
            false,
            &mut w,
        )
    };
    assert_eq!(st, ZcubeStatus::Parse);
    let short = CString::new("01").unwrap();
    let st = unsafe {
        zcube_route(
            ZcubeFamilyKind::Q as u32,
            0,
            short.as_ptr(),
            to.as_ptr(),
            false,
            &mut w,
        )
    };
    assert_eq!(st, ZcubeStatus::LengthMismatch);
    let st = unsafe {
        zcube_route(
            ZcubeFamilyKind::Q as u32,
            0,
            ptr::null(),
            to.as_ptr(),
            false,
            &mut w,
        )
    };
    assert_eq!(st, ZcubeStatus::NullPointer);
    assert!(w.is_null());
    assert_eq!(unsafe { zcube_walk_count(ptr::null()) }, 0);
}

#[test]
fn hamiltonian_paths() {
    let (from, to) = (CString::new("0000").unwrap(), CString::new("1011").unwrap());
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { zcube_hamiltonian_path(from.as_ptr(), to.as_ptr(), &mut w) },
        ZcubeStatus::Ok
    );
    let vs = walk_vertices(w);
    assert_eq!(vs.len(), 16);
    assert_eq!((vs[0].as_str(), vs[15].as_str()), ("0000", "1011"));
    unsafe { zcube_walk_free(w) };
    let (a, b) = (CString::new("00").unwrap(), CString::new("11").unwrap());
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { zcube_hamiltonian_path(a.as_ptr(), b.as_ptr(), &mut w) },
        ZcubeStatus::Unsupported
    );
    assert!(last_error().contains("C_4"));
}

#[test]
fn kappa_and_bounds() {
    let mut k = 0;
    assert_eq!(unsafe { zcube_kappa(65536, &mut k) }, ZcubeStatus::Ok);
    assert_eq!(k, 8);
    assert_eq!(
        unsafe { zcube_kappa(0, &mut k) },
        ZcubeStatus::InvalidArgument
    );
    let mut b = ZcubeBounds {
        kappa: 0,
        lower: 0,
        sigma: 0.0,
        thm1: 0.0,
        zstar: 0.0,
        has_zstar: false,
    };
    assert_eq!(unsafe { zcube_bounds(8, &mut b) }, ZcubeStatus::Ok);
    assert_eq!((b.kappa, b.lower, b.sigma, b.thm1), (1, 4, 2.0, 9.0));
    assert!(!b.has_zstar);
    assert_eq!(unsafe { zcube_bounds(80, &mut b) }, ZcubeStatus::Ok);
    assert_eq!(b.sigma, 22.0);
    assert!(b.has_zstar && b.zstar.is_finite());
    assert_eq!(last_error(), "");
}

#[test]
fn header_declares_the_api_and_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/zcube.h")).unwrap();
    for symbol in [
        "zcube_graph_new",
        "zcube_graph_free",
        "zcube_graph_dim",
        "zcube_graph_neighbor",
        "zcube_graph_adjacent",
        "zcube_graph_diameter",
        "zcube_route",
        "zcube_hamiltonian_path",
        "zcube_walk_count",
        "zcube_walk_vertex",
        "zcube_walk_free",
        "zcube_kappa",
        "zcube_bounds",
        "zcube_last_error",
        "typedef struct ZcubeGraph ZcubeGraph;",
        "ZCUBE_STATUS_CAP_EXCEEDED = 7",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
    // syntax-check the header with the system C compiler when there is one
    let status =
        std::process::Command::new("cc")
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", "-"])
            .arg(format!("-I{dir}/include"))
            .stdin(std::process::Stdio::piped())
            .spawn()
            .and_then(|mut child| {
                use std::io::Write;
                child.stdin.take().expect("piped").write_all(
                    b"#include \"zcube.h\"\nint main(void) { return ZCUBE_STATUS_OK; }\n",
                )?;
                child.wait()
            });
    if let Ok(status) = status {
        assert!(status.success(), "header does not compile");
    }
}
