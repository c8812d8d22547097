use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use suzuki_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(suzuki_last_error()) }.to_string_lossy().into_owned()
}

struct Ctx(*mut SuzukiContext);

impl Ctx {
    fn new(n: u32) -> Self {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { suzuki_context_new(n, &mut p) }, SuzukiStatus::Ok);
        Ctx(p)
    }
}

impl Drop for Ctx {
    fn drop(&mut self) {
        unsafe { suzuki_context_free(self.0) }
    }
}

#[test]
fn bad_parameter_leaves_null_handle() {
    let mut p = ptr::NonNull::<SuzukiContext>::dangling().as_ptr();
    assert_eq!(unsafe { suzuki_context_new(0, &mut p) }, SuzukiStatus::ParameterDomain);
    assert!(p.is_null());
    assert!(last_error().contains("parameter"));
}

#[test]
fn null_pointers_are_rejected() {
    assert_eq!(unsafe { suzuki_context_new(1, ptr::null_mut()) }, SuzukiStatus::NullPointer);
    let mut out = 0u64;
    assert_eq!(unsafe { suzuki_dim_l(ptr::null_mut(), 5, &mut out) }, SuzukiStatus::NullPointer);
    let ctx = Ctx::new(1);
    assert_eq!(unsafe { suzuki_kappa_rank(ctx.0, 2, ptr::null_mut()) }, SuzukiStatus::NullPointer);
    unsafe { suzuki_context_free(ptr::null_mut()) };
    unsafe { suzuki_string_free(ptr::null_mut()) };
}

#[test]
fn params_and_semigroup_queries() {
    let ctx = Ctx::new(2);
    let mut p = SuzukiParams::default();
    assert_eq!(unsafe { suzuki_params(ctx.0, &mut p) }, SuzukiStatus::Ok);
    assert_eq!((p.n, p.q0, p.q, p.genus, p.m_embed), (2, 4, 32, 124, 41));
    assert_eq!(p.generators, [32, 36, 40, 41]);

    let mut dim = 0;
    for (m, want) in [(0, 1), (41, 5), (410, 287), (5000, 5000 - 124 + 1)] {
        assert_eq!(unsafe { suzuki_dim_l(ctx.0, m, &mut dim) }, SuzukiStatus::Ok);
        assert_eq!(dim, want, "m={m}");
    }
    assert_eq!(unsafe { suzuki_dim_l(ctx.0, u64::MAX, &mut dim) }, SuzukiStatus::Range);

    let mut ample = false;
    assert_eq!(unsafe { suzuki_is_very_ample(ctx.0, 41, &mut ample) }, SuzukiStatus::Ok);
    assert!(ample);
    assert_eq!(unsafe { suzuki_is_very_ample(ctx.0, 40, &mut ample) }, SuzukiStatus::Ok);
    assert!(!ample);
}

#[test]
fn kappa_oracles_agree() {
    let ctx = Ctx::new(1);
    for (t, want) in [(2, 1), (3, 9), (4, 31)] {
        let (mut a, mut b) = (0, 0);
        assert_eq!(unsafe { suzuki_kappa_rank(ctx.0, t, &mut a) }, SuzukiStatus::Ok);
        assert_eq!(unsafe { suzuki_kappa_eval(ctx.0, t, &mut b) }, SuzukiStatus::Ok);
        assert_eq!((a, b), (want, want), "t={t}");
    }
    let mut k = 0;
    assert_eq!(unsafe { suzuki_kappa_rank(ctx.0, 1000, &mut k) }, SuzukiStatus::Range);
}

#[test]
fn reduce_roundtrip_and_parse_error() {
    let ctx = Ctx::new(2);
    let expr = CString::new("y^2 + x v").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { suzuki_reduce(ctx.0, expr.as_ptr(), &mut out) }, SuzukiStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(out) }.to_str().unwrap(), "w");
    unsafe { suzuki_string_free(out) };

    let bad = CString::new("x + z").unwrap();
    assert_eq!(unsafe { suzuki_reduce(ctx.0, bad.as_ptr(), &mut out) }, SuzukiStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("column 5"), "{}", last_error());

    let invalid = [0xffu8, 0];
    assert_eq!(
        unsafe { suzuki_reduce(ctx.0, invalid.as_ptr().cast(), &mut out) },
        SuzukiStatus::InvalidUtf8
    );
}

#[test]
fn status_names() {
    let name = unsafe { CStr::from_ptr(suzuki_status_name(SuzukiStatus::Parse)) };
    assert_eq!(name.to_str().unwrap(), "parse error");
}

#[test]
fn header_declares_every_entry_point() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/suzuki.h")).unwrap();
    for sym in [
        "suzuki_context_new",
        "suzuki_context_free",
        "suzuki_params",
        "suzuki_dim_l",
        "suzuki_is_very_ample",
        "suzuki_kappa_rank",
        "suzuki_kappa_eval",
        "suzuki_reduce",
        "suzuki_string_free",
        "suzuki_last_error",
        "suzuki_status_name",
        "typedef struct SuzukiContext SuzukiContext",
        "SUZUKI_STATUS_OK = 0",
    ] {
        assert!(header.contains(sym), "missing {sym}");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libsuzuki_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let bin = profile_dir.join("suzuki_ffi_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
