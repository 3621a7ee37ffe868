use radfilt_web::{depth, partitions, preset_json, preset_names, radical};

fn a3() -> String {
    preset_json("A3")
}

#[test]
fn presets_listed() {
    assert!(preset_names().split(',').any(|n| n == "QH4"));
    assert!(preset_json("nope").is_empty());
}

#[test]
fn partitions_report() {
    let out = partitions(&a3(), "post", 12);
    assert!(out.ends_with("status: OK\n"), "{out}");
    assert!(out.contains("P_0"), "{out}");
}

#[test]
fn radical_pair() {
    let out = radical(&a3(), "P:3", "P:1", 1, 12);
    assert!(out.contains("status:"), "{out}");
    assert!(!out.starts_with("error"), "{out}");
}

#[test]
fn depth_of_beta() {
    let out = depth(&a3(), "beta:3", 12);
    assert!(out.contains("dp(beta:3) = 2"), "{out}");
}

#[test]
fn bad_json_is_an_error() {
    assert!(partitions("{", "post", 12).starts_with("error"));
}
