use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use osp_kostka_ffi::*;

struct Engine(*mut OspEngine);

impl Engine {
    fn new(n: usize) -> Self {
        let mut e = ptr::null_mut();
        assert_eq!(unsafe { osp_engine_new(n, 4, 1, &mut e) }, OspStatus::Ok);
        Engine(e)
    }
}

impl Drop for Engine {
    fn drop(&mut self) {
        unsafe { osp_engine_free(self.0) }
    }
}

fn coeffs(p: *mut OspPoly) -> (i64, Vec<i64>) {
    unsafe {
        let off = osp_poly_offset(p);
        let v = (0..osp_poly_len(p) as i64)
            .map(|i| {
                let mut c = 0;
                assert_eq!(osp_poly_coeff(p, off + i, &mut c), OspStatus::Ok);
                c
            })
            .collect();
        osp_poly_free(p);
        (off, v)
    }
}

fn last_error() -> String {
    let p = osp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn kostka_and_stalk() {
    let e = Engine::new(1);
    assert_eq!(unsafe { osp_engine_rank(e.0) }, 1);
    let (one, zero) = ([1i64], [0i64]);
    let mut p = ptr::null_mut();
    let st = unsafe { osp_kostka(e.0, one.as_ptr(), zero.as_ptr(), zero.as_ptr(), zero.as_ptr(), 1, &mut p) };
    assert_eq!(st, OspStatus::Ok);
    assert_eq!(coeffs(p), (1, vec![1]));

    let st = unsafe { osp_stalk(e.0, zero.as_ptr(), one.as_ptr(), zero.as_ptr(), zero.as_ptr(), 1, 3, &mut p) };
    assert_eq!(st, OspStatus::Ok);
    assert_eq!(coeffs(p), (-5, vec![1]));

    let mut ge = false;
    let st = unsafe { osp_dominance_ge(e.0, zero.as_ptr(), zero.as_ptr(), one.as_ptr(), zero.as_ptr(), 1, &mut ge) };
    assert_eq!(st, OspStatus::Ok);
    assert!(!ge);
}

#[test]
fn lpoly_and_json() {
    let e = Engine::new(1);
    let (d, eps) = ([1i64], [1i64]);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { osp_lpoly(e.0, d.as_ptr(), eps.as_ptr(), 1, &mut p) }, OspStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { osp_poly_to_json(p, &mut s) }, OspStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { osp_string_free(s) };
    assert_eq!(text, r#"{"offset":1,"coeffs":[1,0,1]}"#);
    assert_eq!(coeffs(p), (1, vec![1, 0, 1]));
}

#[test]
fn errors_are_reported() {
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { osp_engine_new(0, 4, 1, &mut e) }, OspStatus::InvalidArgument);
    assert!(last_error().contains("rank"));
    assert_eq!(unsafe { osp_engine_new(5, 4, 1, &mut e) }, OspStatus::LimitExceeded);
    assert_eq!(unsafe { osp_engine_new(1, 4, 1, ptr::null_mut()) }, OspStatus::NullPointer);

    let eng = Engine::new(2);
    let bad = [1i64, 2];
    let zero = [0i64, 0];
    let mut p = ptr::null_mut();
    let st = unsafe { osp_kostka(eng.0, bad.as_ptr(), zero.as_ptr(), zero.as_ptr(), zero.as_ptr(), 2, &mut p) };
    assert_eq!(st, OspStatus::InvalidArgument);
    assert!(p.is_null());
    let st = unsafe { osp_kostka(eng.0, zero.as_ptr(), zero.as_ptr(), zero.as_ptr(), zero.as_ptr(), 1, &mut p) };
    assert_eq!(st, OspStatus::InvalidArgument);
    let st = unsafe { osp_kostka(ptr::null(), zero.as_ptr(), zero.as_ptr(), zero.as_ptr(), zero.as_ptr(), 2, &mut p) };
    assert_eq!(st, OspStatus::NullPointer);

    let mut dim = 0usize;
    let f4 = CString::new("F4").unwrap();
    assert_eq!(unsafe { osp_hesselink_dim(f4.as_ptr(), &mut dim) }, OspStatus::Ok);
    assert_eq!(dim, 15);
    let g3 = CString::new("G3").unwrap();
    assert_eq!(unsafe { osp_hesselink_dim(g3.as_ptr(), &mut dim) }, OspStatus::Ok);
    assert_eq!(dim, 13);
    let e8 = CString::new("E8").unwrap();
    assert_eq!(unsafe { osp_hesselink_dim(e8.as_ptr(), &mut dim) }, OspStatus::InvalidArgument);

    // null handles are tolerated by the free functions and accessors
    unsafe {
        osp_engine_free(ptr::null_mut());
        osp_poly_free(ptr::null_mut());
        osp_string_free(ptr::null_mut());
        assert_eq!(osp_poly_len(ptr::null()), 0);
    }
}

#[test]
fn engine_is_shareable() {
    let e = Engine::new(2);
    let addr = e.0 as usize;
    let results: Vec<(i64, Vec<i64>)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..4)
            .map(|_| {
                s.spawn(move || {
                    let (lam1, lam0, zero) = ([1i64, 1], [1i64, 0], [0i64, 0]);
                    let mut p = ptr::null_mut();
                    let eng = addr as *const OspEngine;
                    let st = unsafe { osp_kostka(eng, lam1.as_ptr(), lam0.as_ptr(), zero.as_ptr(), zero.as_ptr(), 2, &mut p) };
                    assert_eq!(st, OspStatus::Ok);
                    coeffs(p)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(results.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(results[0], (4, vec![1, 0, 1, 0, 1]));
}

/// The staticlib built alongside this test binary. `cargo test` writes the
/// fresh artifact into `deps/`; the copy one level up is only refreshed by
/// `cargo build`.
fn static_lib() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().join("libosp_kostka_ffi.a")
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "osp_kostka.h"

int main(void) {
    OspEngine *e = NULL;
    if (osp_engine_new(1, 4, 1, &e) != OSP_STATUS_OK) return 10;
    int64_t one[1] = {1}, zero[1] = {0};
    OspPoly *p = NULL;
    if (osp_kostka(e, one, zero, zero, zero, 1, &p) != OSP_STATUS_OK) return 11;
    char *json = NULL;
    if (osp_poly_to_json(p, &json) != OSP_STATUS_OK) return 12;
    printf("%s\n", json);
    osp_string_free(json);
    osp_poly_free(p);
    if (osp_engine_new(0, 4, 1, &e) != OSP_STATUS_INVALID_ARGUMENT) return 13;
    printf("%s\n", osp_last_error());
    size_t dim = 0;
    if (osp_hesselink_dim("G3", &dim) != OSP_STATUS_OK || dim != 13) return 14;
    osp_engine_free(e);
    return 0;
}
"#;

/// Compiles a C program against the generated header and the static
/// library. Skipped when no C compiler is on PATH.
#[test]
fn header_compiles_and_links() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler ({cc})");
        return;
    }
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = std::fs::read_to_string(include.join("osp_kostka.h")).unwrap();
    assert!(header.contains("OSP_KOSTKA_H"));
    let lib = static_lib();
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }

    let dir = std::env::temp_dir().join(format!("osp-kostka-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    let bin = dir.join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let compile = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .unwrap();
    assert!(compile.status.success(), "C compile failed:\n{}", String::from_utf8_lossy(&compile.stderr));
    let out = Command::new(&bin).output().unwrap();
    let _ = std::fs::remove_dir_all(&dir);
    assert!(out.status.success(), "C program exited with {:?}", out.status);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some(r#"{"offset":1,"coeffs":[1]}"#));
    assert!(lines.next().unwrap().contains("rank"));
}
