//! Acceptance harness: one PASS/FAIL line per criterion. All comparisons are
//! exact; the only tolerances are the wall-clock budgets below.

mod common;

use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use radfilt::ar::{enumerate_partial, is_injective, is_projective, Limits};
use radfilt::category::IndexedCategory;
use radfilt::partition::{partition, verify_cocover, verify_cover, verify_propdan, Partition, PartitionKind};
use radfilt::qh::{delta_good_category, verify_delta_good, VertexDepths};
use radfilt::radical::{rad_power_table, simple_envelopes, Depth, DEFAULT_MAX_POWER};

/// Per-run budget for the enumeration counts.
const ENUMERATION_BUDGET: Duration = Duration::from_secs(5);
/// Budget for all property suites together.
const PROPERTY_BUDGET: Duration = Duration::from_secs(120);
/// Random cases per property suite.
const PROPERTY_CASES: u32 = 256;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn enumeration_counts() -> Outcome {
    let mut notes = Vec::new();
    for (name, want) in [("A2", 3), ("A3", 6), ("N3", 3)] {
        let t = Instant::now();
        let en = enumerate_partial(&load(name).0, Limits::default()).map_err(|e| e.to_string())?;
        let took = t.elapsed();
        ensure(en.bound.is_none(), || format!("{name}: enumeration did not close"))?;
        ensure(en.category.len() == want, || format!("{name}: {} indecomposables, want {want}", en.category.len()))?;
        ensure(took < ENUMERATION_BUDGET, || format!("{name}: took {took:?}"))?;
        notes.push(format!("{name}={want}"));
    }
    let t = Instant::now();
    let kr = enumerate_partial(&load("kronecker").0, Limits { max_dim: 8, ..Limits::default() })
        .map_err(|e| e.to_string())?;
    let took = t.elapsed();
    ensure(kr.bound.is_some(), || "kronecker closed at max_dim 8".into())?;
    ensure(took < ENUMERATION_BUDGET, || format!("kronecker: took {took:?}"))?;
    let (out, code) = radfilt::cli::run_command(["radfilt", "certify", "--preset", "kronecker", "--max-dim", "8"]);
    ensure(code == 2 && out.contains("status: UNDETERMINED"), || format!("certify kronecker: exit {code}"))?;
    notes.push("kronecker(max_dim 8)=UNDETERMINED".into());
    Ok(notes.join(" "))
}

fn stabilization() -> Outcome {
    let mut notes = Vec::new();
    for name in ["A2", "A3", "N3"] {
        let t = rad_power_table(&category(name), DEFAULT_MAX_POWER);
        let n0 = t.stabilization_index().ok_or_else(|| format!("{name}: no fixed point"))?;
        ensure(t.rad_infinity_is_zero(), || format!("{name}: rad^inf != 0"))?;
        let sq = t.rad_inf_square();
        ensure(sq.iter().flatten().all(|s| s.is_zero()), || format!("{name}: (rad^inf)^2 != 0"))?;
        notes.push(format!("{name} N0={n0}"));
    }
    Ok(notes.join(", "))
}

fn depth_values() -> Outcome {
    let mut notes = Vec::new();
    for (name, want) in [("A2", 1), ("N3", 2)] {
        let c = category(name);
        let t = rad_power_table(&c, DEFAULT_MAX_POWER);
        let pi = &simple_envelopes(c.algebra())[0].pi;
        let (got, oracle) = (t.depth(pi).map_err(|e| e.to_string())?, oracle_depth(&c, &t, pi));
        ensure(got == Depth::Finite(want) && oracle == got, || format!("{name}: dp(pi) = {got:?}, oracle {oracle:?}"))?;
        notes.push(format!("{name} dp(pi_S(1))={want}"));
    }
    let qh = qh_data("A3");
    let dgc = delta_good_category(&qh, &category("A3"), DEFAULT_MAX_POWER).map_err(|e| e.to_string())?;
    let ts = qh.characteristic_modules().map_err(|e| e.to_string())?;
    for (label, f) in [("pi(1)", &qh.pi[0]), ("beta(3)", &ts[2].beta)] {
        let got = dgc.depth(f).map_err(|e| e.to_string())?;
        let oracle = oracle_depth(dgc.category(), &dgc.table, f);
        ensure(got == Depth::Finite(2) && oracle == got, || {
            format!("A3 dp_Delta({label}) = {got:?}, oracle {oracle:?}")
        })?;
        notes.push(format!("A3 dp_Delta({label})=2"));
    }
    Ok(notes.join(", "))
}

fn levels_verified(c: &IndexedCategory, p: &Partition) -> Result<(), String> {
    for k in 0..p.levels.len() {
        let r = match p.kind {
            PartitionKind::Postprojective => verify_cover(c, p, k),
            PartitionKind::Preinjective => verify_cocover(c, p, k),
        };
        ensure(r.covers && r.minimal, || format!("{:?} level {k} fails cover/minimality", p.kind))?;
    }
    Ok(())
}

fn partitions() -> Outcome {
    let mut notes = Vec::new();
    for (name, want) in [("A2", 1), ("N3", 2), ("A3", 2)] {
        let c = category(name);
        let post = partition(&c, PartitionKind::Postprojective).map_err(|e| e.to_string())?;
        let pre = partition(&c, PartitionKind::Preinjective).map_err(|e| e.to_string())?;
        let (p, q) = (post.summary(), pre.summary());
        ensure(p == Some(want) && q == Some(want), || format!("{name}: p = {p:?}, q = {q:?}"))?;
        levels_verified(&c, &post)?;
        levels_verified(&c, &pre)?;
        if name == "A3" {
            let projectives: Vec<usize> = (0..c.len()).filter(|&i| is_projective(c.object(i))).collect();
            let injectives: Vec<usize> = (0..c.len()).filter(|&i| is_injective(c.object(i))).collect();
            let sorted = |v: &[usize]| {
                let mut v = v.to_vec();
                v.sort_unstable();
                v
            };
            ensure(sorted(&post.levels[0]) == projectives, || "A3: P_0 is not the projectives".into())?;
            ensure(sorted(&pre.levels[0]) == injectives, || "A3: I_0 is not the injectives".into())?;
        }
        notes.push(format!("{name} p=q={want}"));
    }
    Ok(notes.join(", "))
}

fn propdan() -> Outcome {
    let mut checked = 0;
    for name in ["A1", "A2", "A3", "N3", "QH4"] {
        let c = category(name);
        let t = rad_power_table(&c, DEFAULT_MAX_POWER);
        for kind in [PartitionKind::Postprojective, PartitionKind::Preinjective] {
            let p = partition(&c, kind).map_err(|e| e.to_string())?;
            let r = verify_propdan(&t, &p);
            ensure(r.pass(), || format!("{name} {kind:?}: {} violations", r.violations.len()))?;
            checked += r.checked;
        }
    }
    Ok(format!("{checked} pairs, 0 violations"))
}

fn delta_good() -> Outcome {
    let mut notes = Vec::new();
    for name in ["A2", "A3", "QH4"] {
        let qh = qh_data(name);
        let c = category(name);
        let full = rad_power_table(&c, DEFAULT_MAX_POWER);
        let dgc = delta_good_category(&qh, &c, DEFAULT_MAX_POWER).map_err(|e| e.to_string())?;
        let ts = qh.characteristic_modules().map_err(|e| e.to_string())?;
        let r = verify_delta_good(&qh, &ts, &dgc, &full).map_err(|e| e.to_string())?;
        if let Some(bad) = r.clauses.iter().find(|c| !c.pass) {
            return Err(format!("{name}: {} {}", bad.name, bad.detail));
        }
        let max = |f: fn(&VertexDepths) -> Depth| {
            r.depths.iter().filter_map(|d| if let Depth::Finite(n) = f(d) { Some(n) } else { None }).max()
        };
        let (p, q) = (dgc.p_delta(), dgc.q_delta());
        if name == "A3" {
            let (mp, mq) = (max(|d| d.pi), max(|d| d.beta));
            ensure(p == 2 && q == 2 && mp == Some(2) && mq == Some(2), || {
                format!("A3: p = {p}, max dp pi = {mp:?}, q = {q}, max dp beta = {mq:?}")
            })?;
        }
        notes.push(format!("{name} p={p} q={q}"));
    }
    Ok(notes.join(", ") + "; A3 equality 2 = 2")
}

fn oracle_equivalences() -> Outcome {
    let mut cats: Vec<(String, IndexedCategory)> = Vec::new();
    for name in ["A1", "A2", "A3", "N3", "QH4"] {
        let c = category(name);
        if name != "N3" {
            let dgc = delta_good_category(&qh_data(name), &c, DEFAULT_MAX_POWER).map_err(|e| e.to_string())?;
            cats.push((format!("F(Delta) {name}"), dgc.category().clone()));
        }
        cats.push((format!("mod {name}"), c));
    }
    let (mut compared, mut tables) = (0, 0);
    for (label, c) in cats.iter().filter(|(_, c)| c.len() <= 8) {
        compared += compare_with_oracle(c).map_err(|e| format!("{label}: {e}"))?;
        tables += 1;
    }
    let mut modules = 0;
    for name in ["A1", "A2", "A3", "QH4"] {
        let qh = qh_data(name);
        for m in category(name).objects() {
            qh.checked_membership(m).map_err(|e| format!("{name}: {e}"))?;
            modules += 1;
        }
    }
    Ok(format!("(a) {tables} categories, {compared} entries; (b) {modules} modules, 0 disagreements"))
}

fn properties() -> Outcome {
    let start = Instant::now();
    let pools = Pools::new();
    type Prop = fn(&Pools, usize, u64) -> Check;
    let suites: [(&str, Prop); 6] = [
        ("intertwining", prop_intertwining),
        ("krull-schmidt", prop_krull_schmidt),
        ("tau roundtrip", prop_tau_roundtrip),
        ("rad^n ideal", prop_ideal),
        ("linear algebra", |_, _, seed| prop_linear(seed)),
        ("splitting", prop_splitting),
    ];
    let results: Vec<(&str, Result<Duration, String>)> = std::thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&(name, prop)| {
                let pools = &pools;
                s.spawn(move || {
                    let t = Instant::now();
                    let config = Config { cases: PROPERTY_CASES, failure_persistence: None, ..Config::default() };
                    let mut runner = TestRunner::new(config);
                    let r = runner.run(&(0usize..5, any::<u64>()), |(which, seed)| prop(pools, which, seed));
                    (name, r.map(|_| t.elapsed()).map_err(|e| e.to_string()))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("property thread")).collect()
    });
    let mut notes = Vec::new();
    for (name, r) in results {
        let took = r.map_err(|e| format!("{name}: {e}"))?;
        notes.push(format!("{name} {:.1}s", took.as_secs_f64()));
    }
    let total = start.elapsed();
    ensure(total < PROPERTY_BUDGET, || format!("took {total:?}"))?;
    Ok(format!("{PROPERTY_CASES} cases each, {:.1}s total ({})", total.as_secs_f64(), notes.join(", ")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("enumeration counts", enumeration_counts),
        ("radical stabilization", stabilization),
        ("depth values", depth_values),
        ("partitions", partitions),
        ("Hom = rad^i harness", propdan),
        ("Delta-good harness", delta_good),
        ("oracle equivalences", oracle_equivalences),
        ("structural properties", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(note) => println!("PASS  criterion {}: {name}  [{note}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}  [{why}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
