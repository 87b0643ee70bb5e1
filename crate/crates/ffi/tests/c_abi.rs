//! Compiles `examples/smoke.c` against the generated header and the static
//! library, then runs it.

use std::path::PathBuf;
use std::process::Command;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_parses_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let status = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(format!("{dir}/include/ucycle.h"))
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}

#[test]
fn c_program_generates_and_verifies() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let lib = target_dir().join("libucycle_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = std::env::temp_dir().join(format!("ucycle_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror"])
        .arg(format!("-I{dir}/include"))
        .arg(format!("{dir}/examples/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());

    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "exit {:?}", run.status.code());
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert_eq!(stdout.trim().len(), 21);
}
