use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use blockperm_ffi::*;

fn parse(text: &str) -> *mut BpPermutation {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { bp_perm_parse(c.as_ptr(), &mut out) }, BpStatus::Ok);
    out
}

fn take_string(s: *mut c_char) -> String {
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { bp_string_free(s) };
    text
}

fn text(perm: *const BpPermutation) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bp_perm_to_string(perm, &mut s) }, BpStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    let e = bp_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_str().unwrap().to_owned()
}

#[test]
fn parse_and_inspect() {
    let pi = parse("236|14578");
    unsafe {
        assert_eq!(bp_perm_size(pi), 8);
        assert_eq!(bp_perm_block_count(pi), 2);
        assert_eq!(bp_perm_lis_length(pi), 6);
        let mut values = [0u32; 8];
        assert_eq!(bp_perm_values(pi, values.as_mut_ptr(), values.len()), 8);
        assert_eq!(values, [2, 3, 6, 1, 4, 5, 7, 8]);
        // A short buffer still reports the full length.
        assert_eq!(bp_perm_values(pi, values.as_mut_ptr(), 2), 8);

        let mut json = ptr::null_mut();
        assert_eq!(bp_perm_to_json(pi, &mut json), BpStatus::Ok);
        assert_eq!(take_string(json), r#"{"comp":[3,5],"values":[2,3,6,1,4,5,7,8]}"#);
        bp_perm_free(pi);
    }
}

#[test]
fn build_from_arrays() {
    let parts = [2usize, 2];
    let values = [1u32, 3, 2, 4];
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { bp_perm_new(parts.as_ptr(), parts.len(), values.as_ptr(), values.len(), &mut out) },
        BpStatus::Ok
    );
    assert_eq!(text(out), "13|24");
    unsafe { bp_perm_free(out) };

    let descent = [3u32, 1, 2, 4];
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { bp_perm_new(parts.as_ptr(), parts.len(), descent.as_ptr(), descent.len(), &mut out) },
        BpStatus::ParseError
    );
    assert!(out.is_null());
}

#[test]
fn maps() {
    unsafe {
        let pi = parse("236|14578");
        let mut w = ptr::null_mut();
        assert_eq!(bp_map_w(pi, &mut w), BpStatus::Ok);
        assert_eq!(text(w), "2346|1578");
        let mut v = ptr::null_mut();
        assert_eq!(bp_map_v(w, &mut v), BpStatus::Ok);
        assert_eq!(text(v), "236|14578");
        [pi, w, v].into_iter().for_each(|p| bp_perm_free(p));

        let pi = parse("1|37|2458|6");
        let mut s = ptr::null_mut();
        assert_eq!(bp_swap_adjacent(pi, 2, &mut s), BpStatus::Ok);
        assert_eq!(text(s), "1|3478|25|6");
        bp_perm_free(s);

        let target = [1usize, 2, 4, 1];
        let mut r = ptr::null_mut();
        assert_eq!(bp_reorder_blocks(pi, target.as_ptr(), target.len(), &mut r), BpStatus::Ok);
        assert_eq!(bp_perm_block_count(r), 4);
        assert_eq!(bp_perm_lis_length(r), bp_perm_lis_length(pi));
        bp_perm_free(r);
        bp_perm_free(pi);

        let pi = parse("2|134");
        let mut t = ptr::null_mut();
        assert_eq!(bp_transfer_step(pi, 1, &mut t), BpStatus::Ok);
        assert_eq!(text(t), "23|14");
        bp_perm_free(t);

        let target = [2usize, 2];
        let mut m = ptr::null_mut();
        assert_eq!(bp_majorize_inject(pi, target.as_ptr(), target.len(), &mut m), BpStatus::Ok);
        assert_eq!(text(m), "23|14");
        bp_perm_free(m);
        bp_perm_free(pi);

        let pi = parse("24|13");
        let mut d = ptr::null_mut();
        assert_eq!(bp_delete_max(pi, 1, &mut d), BpStatus::Ok);
        assert_eq!(text(d), "2|13");
        let mut back = ptr::null_mut();
        assert_eq!(bp_insert_max(d, 1, &mut back), BpStatus::Ok);
        assert_eq!(text(back), "24|13");
        [pi, d, back].into_iter().for_each(|p| bp_perm_free(p));
    }
}

#[test]
fn counts() {
    let mut n = 0u64;
    let ones = [1usize; 4];
    assert_eq!(unsafe { bp_count(BpFamily::Avoiding, 1, ones.as_ptr(), 4, &mut n) }, BpStatus::Ok);
    assert_eq!(n, 14);
    let two = [2usize, 3];
    assert_eq!(unsafe { bp_count(BpFamily::Lis, 3, two.as_ptr(), 2, &mut n) }, BpStatus::Ok);
    assert_eq!(n, 5);

    let big = [5usize, 5, 5];
    assert_eq!(unsafe { bp_count(BpFamily::Avoiding, 1, big.as_ptr(), 3, &mut n) }, BpStatus::SizeCap);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bp_catalan_triangle(4, 4, &mut s) }, BpStatus::Ok);
    assert_eq!(take_string(s), "14");

    let (outer, inner) = ([3usize, 3, 1], [1usize]);
    assert_eq!(unsafe { bp_skew_count(outer.as_ptr(), 3, inner.as_ptr(), 1, &mut s) }, BpStatus::Ok);
    let skew = take_string(s);
    let comp = [1usize, 2, 2];
    assert_eq!(unsafe { bp_count(BpFamily::Avoiding, 2, comp.as_ptr(), 3, &mut n) }, BpStatus::Ok);
    assert_eq!(skew, n.to_string());

    let bad = [1usize, 2];
    assert_eq!(unsafe { bp_skew_count(bad.as_ptr(), 2, ptr::null(), 0, &mut s) }, BpStatus::InvalidShape);
}

#[test]
fn errors_and_nulls() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("21|3").unwrap();
        assert_eq!(bp_perm_parse(bad.as_ptr(), &mut out), BpStatus::ParseError);
        assert!(out.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(bp_perm_parse(ptr::null(), &mut out), BpStatus::NullPointer);
        assert_eq!(bp_map_w(ptr::null(), &mut out), BpStatus::NullPointer);
        let pi = parse("123|");
        assert_eq!(bp_map_w(pi, &mut out), BpStatus::DomainError);
        assert!(last_error().contains("W needs"));
        assert_eq!(bp_map_w(pi, ptr::null_mut()), BpStatus::NullPointer);
        assert_eq!(bp_swap_adjacent(pi, 5, &mut out), BpStatus::DomainError);
        bp_perm_free(pi);

        let invalid = [0x66u8, 0xff, 0];
        assert_eq!(bp_perm_parse(invalid.as_ptr().cast(), &mut out), BpStatus::InvalidUtf8);

        assert_eq!(bp_perm_size(ptr::null()), 0);
        bp_perm_free(ptr::null_mut());
        bp_string_free(ptr::null_mut());
    }
}

/// Compiles `tests/c/smoke.c` against the generated header and static library.
#[test]
fn c_smoke() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // Test binaries live in `<target>/<profile>/deps`.
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libblockperm_ffi.a");
    let compiler = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&compiler).arg("--version").output().is_err() {
        eprintln!("skipping C smoke test: no {compiler} or no {}", lib.display());
        return;
    }
    let exe = profile_dir.join("blockperm_smoke");
    let status = Command::new(&compiler)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
