//! Report snapshots and exit codes. Set `UPDATE_GOLDEN=1` to rewrite the snapshots.

use std::path::PathBuf;
use std::process::Command;

use radfilt::cli::run_command;

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

fn check(name: &str, args: &str, code: i32) {
    let argv: Vec<&str> = std::iter::once("radfilt").chain(args.split_whitespace()).collect();
    let (out, got) = run_command(&argv);
    assert_eq!(got, code, "exit code for `{args}`:\n{out}");
    let (again, _) = run_command(&argv);
    assert_eq!(out, again, "report for `{args}` is not stable");
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out, want, "report for `{args}` differs from {}", path.display());
}

#[test]
fn basis_a3() {
    check("basis_a3", "basis --preset A3", 0);
}

#[test]
fn indec_a3() {
    check("indec_a3", "indec --preset A3", 0);
}

#[test]
fn radical_a2() {
    check("radical_a2", "radical --preset A2", 0);
}

#[test]
fn radical_pair_n3() {
    check("radical_pair_n3", "radical --preset N3 --pair P:1 P:1 --power 2", 0);
}

#[test]
fn depth_n3() {
    check("depth_n3", "depth --preset N3 --morphism pi:1", 0);
}

#[test]
fn depth_beta_a3() {
    check("depth_beta_a3", "depth --preset A3 --morphism beta:3", 0);
}

#[test]
fn partitions_a3() {
    check("partitions_post_a3", "partitions --preset A3 --kind post", 0);
    check("partitions_pre_a3", "partitions --preset A3 --kind pre", 0);
}

#[test]
fn partitions_json() {
    check("partitions_a2_json", "partitions --preset A2 --format json", 0);
}

#[test]
fn certify() {
    check("certify_a3", "certify --preset A3", 0);
    check("certify_kronecker", "certify --preset kronecker --max-dim 8", 2);
}

#[test]
fn qh_structure() {
    check("qh_qh4", "qh --preset QH4", 0);
    check("tilting_qh4", "tilting --preset QH4", 0);
    check("fdelta_qh4", "fdelta --preset QH4", 0);
    check("fdelta_a3", "fdelta --preset A3", 0);
}

#[test]
fn chains_a3() {
    check("chain_mono_a3", "chain --preset A3 --module S:1 --kind mono", 0);
    check("chain_epi_a3", "chain --preset A3 --module I:1 --kind epi", 0);
}

#[test]
fn verify_suites() {
    check("verify_a3", "verify --preset A3 --suite all", 0);
    check("verify_n3", "verify --preset N3 --suite all", 1);
}

#[test]
fn errors_exit_one() {
    let (out, code) = run_command(["radfilt", "basis", "--preset", "A9"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error: invalid input: unknown preset 'A9'"), "{out}");
    let (_, code) = run_command(["radfilt", "depth", "--preset", "A3", "--morphism", "rho:1"]);
    assert_eq!(code, 1);
    let (_, code) = run_command(["radfilt", "frobnicate"]);
    assert_eq!(code, 1);
    let (_, code) = run_command(["radfilt", "--help"]);
    assert_eq!(code, 0);
}

#[test]
fn algebra_file_errors_carry_positions() {
    let dir = std::env::temp_dir().join(format!("radfilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        "{\n  \"name\": \"x\",\n  \"vertices\": [\"1\"],\n  \"arrows\": [{\"name\": \"a\", \"from\": \"1\"}]\n}\n",
    )
    .unwrap();
    let (out, code) = run_command(["radfilt", "basis", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("line 4"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_radfilt");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["basis", "--preset", "A2"]), Some(0));
    assert_eq!(code(&["certify", "--preset", "kronecker", "--max-dim", "6"]), Some(2));
    assert_eq!(code(&["basis", "--preset", "nope"]), Some(1));
}
