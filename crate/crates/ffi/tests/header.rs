//! Compiles and runs a C client against the generated header and the static
//! library.

use std::path::{Path, PathBuf};
use std::process::Command;

const CLIENT: &str = r#"
#include <stdio.h>
#include <string.h>
#include "dtuple.h"

int main(void) {
    DtCorrespondence *h = NULL;
    if (dt_correspondence_parse("(x*y+x+y+2)^3", &h) != DT_STATUS_OK) return 10;
    if (dt_correspondence_degree(h) != 3) return 11;
    char *json = NULL;
    if (dt_classify_json(h, &json) != DT_STATUS_OK) return 12;
    if (strstr(json, "\"perfect_power\"") == NULL) return 13;
    dt_string_free(json);
    bool passed = false;
    double mismatch = 1.0;
    if (dt_verify(h, 20, 1e-6, 0, &passed, &mismatch) != DT_STATUS_OK || !passed) return 14;
    dt_correspondence_free(h);
    if (dt_correspondence_parse("x^2 + + y", &h) != DT_STATUS_PARSE_ERROR) return 15;
    if (dt_last_error_message() == NULL) return 16;
    printf("ok\n");
    return 0;
}
"#;

fn profile_dir() -> PathBuf {
    // target/<profile>/deps/header-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

fn include_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(include_dir().join("dtuple.h")).unwrap();
    let source = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| {
            l.trim().strip_prefix("pub unsafe extern \"C\" fn ").or(l.trim().strip_prefix("pub extern \"C\" fn "))
        })
        .map(|l| l.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 12);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "header lacks {name}");
    }
}

#[test]
fn c_client_links_and_runs() {
    let lib = profile_dir().join("libdtuple_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let bin = dir.path().join("client");
    std::fs::write(&src, CLIENT).unwrap();
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(include_dir())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler is on PATH");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
