use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use battery_syt_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { bsyt_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = bsyt_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn golden_count_through_the_abi() {
    let expr = CString::new("battery:rect:11x7,a=1,k=6").unwrap();
    let mut h = ptr::null_mut();
    let status = unsafe { bsyt_count_shape(expr.as_ptr(), BsytMethod::Auto, 120, &mut h) };
    assert_eq!(status, BsytStatus::Ok);
    assert_eq!(unsafe { bsyt_count_method(h) }, BsytMethod::Hyper);
    assert_eq!(take(unsafe { bsyt_count_decimal(h) }), "520023976236014309118113241302385749182360800");
    assert_eq!(
        take(unsafe { bsyt_count_factored(h) }),
        "2^5*3^2*5^2*11*13*17^2*19^3*23^2*29*31*37^2*41*3361178017*2839893182041"
    );
    unsafe { bsyt_count_free(h) };
}

#[test]
fn every_method_agrees() {
    let mut values = Vec::new();
    for method in [BsytMethod::Hyper, BsytMethod::General, BsytMethod::Dp] {
        let mut h = ptr::null_mut();
        assert_eq!(unsafe { bsyt_count_battery_rect(7, 11, 1, 4, method, 120, &mut h) }, BsytStatus::Ok);
        values.push(take(unsafe { bsyt_count_decimal(h) }));
        unsafe { bsyt_count_free(h) };
    }
    assert!(values.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn status_codes() {
    let mut h = ptr::null_mut();
    let bad = CString::new("rect:3y3").unwrap();
    assert_eq!(unsafe { bsyt_count_shape(bad.as_ptr(), BsytMethod::Auto, 120, &mut h) }, BsytStatus::ParseError);
    assert!(last_error().contains("offset"));
    let skew = CString::new("skew:3,2/1").unwrap();
    assert_eq!(unsafe { bsyt_count_shape(skew.as_ptr(), BsytMethod::Hyper, 120, &mut h) }, BsytStatus::Inapplicable);
    assert_eq!(unsafe { bsyt_count_battery_rect(9, 9, 1, 2, BsytMethod::Dp, 50, &mut h) }, BsytStatus::Inapplicable);
    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { bsyt_count_shape(invalid.as_ptr().cast(), BsytMethod::Auto, 120, &mut h) },
        BsytStatus::InvalidUtf8
    );
    assert_eq!(
        unsafe { bsyt_count_battery_rect(2, 2, 0, 1, BsytMethod::Auto, 120, ptr::null_mut()) },
        BsytStatus::NullArgument
    );
    assert!(h.is_null());
    assert!(unsafe { bsyt_count_decimal(ptr::null()) }.is_null());
    unsafe {
        bsyt_count_free(ptr::null_mut());
        bsyt_string_free(ptr::null_mut());
    }
    // A successful call clears the previous error.
    assert_eq!(unsafe { bsyt_count_battery_rect(2, 2, 0, 1, BsytMethod::Auto, 120, &mut h) }, BsytStatus::Ok);
    assert!(bsyt_last_error().is_null());
    unsafe { bsyt_count_free(h) };
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(bsyt_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

const C_SMOKE: &str = r#"
#include <stdio.h>
#include <string.h>
#include "battery_syt.h"

int main(void) {
    BsytCount *h = NULL;
    if (bsyt_count_shape("battery:rect:2x2,a=1,k=2", BSYT_METHOD_AUTO, 120, &h) != BSYT_STATUS_OK) return 1;
    char *s = bsyt_count_decimal(h);
    int ok = strcmp(s, "5") == 0;
    bsyt_string_free(s);
    bsyt_count_free(h);
    if (bsyt_count_shape("rect:0x", BSYT_METHOD_AUTO, 120, &h) != BSYT_STATUS_PARSE_ERROR) return 2;
    printf("%s\n", bsyt_last_error());
    return ok ? 0 : 3;
}
"#;

/// Compiles a C program against the generated header and static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf();
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let lib = profile_dir.join("libbattery_syt_ffi.a");
    if !lib.exists() {
        let status = Command::new(env!("CARGO"))
            .args(["build", "-p", "battery-syt-ffi", "--lib"])
            .current_dir(&manifest)
            .status()
            .unwrap();
        assert!(status.success());
    }
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let src = out_dir.join("smoke.c");
    let bin = out_dir.join("smoke");
    std::fs::write(&src, C_SMOKE).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let compiled = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .expect("a C compiler is available");
    assert!(compiled.status.success(), "{}", String::from_utf8_lossy(&compiled.stderr));
    let ran = Command::new(&bin).output().unwrap();
    assert_eq!(ran.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ran.stdout).contains("offset"));
}
