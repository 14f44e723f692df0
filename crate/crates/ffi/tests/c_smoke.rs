//! Compile and run a small C program against the generated header and the
//! static library, proving the ABI end to end from C.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "hyperbridge.h"

int main(void) {
    if (hb_abi_version() != 1) return 10;

    HbHypermatrix *h = NULL;
    const char *json = "{\"shape\":[2,2,2],\"entries\":[1,0,0,1,1,0,0,1]}";
    if (hb_hypermatrix_parse(json, &h) != HB_STATUS_OK) return 11;

    char *det = NULL;
    if (hb_cayley_det(h, &det) != HB_STATUS_OK) return 12;
    int ok = strcmp(det, "0") == 0;
    hb_string_free(det);
    hb_hypermatrix_free(h);
    if (!ok) return 13;

    char *bridge = NULL;
    if (hb_bridge("1", "2", "3", "1", "1", "1", &bridge) != HB_STATUS_OK) return 14;
    ok = strstr(bridge, "\"h\":\"8\"") != NULL;
    hb_string_free(bridge);
    if (!ok) return 15;

    if (hb_bridge("0", "1", "1", "1", "1", "1", &bridge) != HB_STATUS_DOMAIN_ERROR) return 16;
    if (strlen(hb_last_error_message()) == 0) return 17;

    char *sum = NULL;
    if (hb_curve_add("-25", "0", "{\"x\":\"-4\",\"y\":\"6\"}", "O", &sum) != HB_STATUS_OK)
        return 18;
    ok = strcmp(sum, "{\"x\":\"-4\",\"y\":\"6\"}") == 0;
    hb_string_free(sum);
    if (!ok) return 19;

    printf("c-abi-ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");

    // make sure the staticlib artifact exists (cargo test alone only builds
    // the rlib for linking into this harness)
    let status = Command::new(env!("CARGO"))
        .args(["build", "-p", "hyperbridge-ffi"])
        .current_dir(&manifest)
        .status()
        .expect("cargo is runnable");
    assert!(status.success(), "building the staticlib failed");

    let target_dir = manifest
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .join("target")
        .join("debug");
    let staticlib = target_dir.join("libhyperbridge_ffi.a");
    assert!(staticlib.exists(), "missing {}", staticlib.display());

    let work = tempfile::tempdir().unwrap();
    let c_path = work.path().join("smoke.c");
    std::fs::write(&c_path, C_PROGRAM).unwrap();
    let exe = work.path().join("smoke");

    let compile = Command::new("cc")
        .arg(&c_path)
        .arg("-I")
        .arg(&include_dir)
        .arg(staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "cc failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&exe).output().expect("smoke binary runs");
    assert!(
        run.status.success(),
        "smoke exited with {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c-abi-ok");
}
