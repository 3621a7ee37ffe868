//! wasm-bindgen entry points for the browser demo. Each call takes the
//! algebra as JSON text and returns the plain-text report.

use wasm_bindgen::prelude::*;

fn run(algebra: &str, max_dim: usize, args: &[&str]) -> String {
    let dim = max_dim.to_string();
    let argv = ["radfilt", "--max-dim", dim.as_str()].into_iter().chain(args.iter().copied());
    radfilt::cli::run_command_with(argv, Some(algebra)).0
}

/// Names of the built-in algebras, comma separated.
#[wasm_bindgen]
pub fn preset_names() -> String {
    radfilt::presets::preset_names().join(",")
}

/// JSON text of a built-in algebra, or an empty string.
#[wasm_bindgen]
pub fn preset_json(name: &str) -> String {
    radfilt::presets::preset_text(name).unwrap_or_default().to_string()
}

/// Postprojective (`post`) or preinjective (`pre`) partition.
#[wasm_bindgen]
pub fn partitions(algebra: &str, kind: &str, max_dim: usize) -> String {
    run(algebra, max_dim, &["partitions", "--kind", kind])
}

/// Table of `dim rad^n(M, N)`; empty `m`/`n` means all pairs.
#[wasm_bindgen]
pub fn radical(algebra: &str, m: &str, n: &str, power: usize, max_dim: usize) -> String {
    let p = power.to_string();
    let mut args = vec!["radical", "--power", p.as_str()];
    if !m.is_empty() && !n.is_empty() {
        args.extend(["--pair", m, n]);
    }
    run(algebra, max_dim, &args)
}

/// Depth of `pi:S`, `iota:S`, `theta:S`, `beta:i` or `pi_delta:i`.
#[wasm_bindgen]
pub fn depth(algebra: &str, morphism: &str, max_dim: usize) -> String {
    run(algebra, max_dim, &["depth", "--morphism", morphism])
}
