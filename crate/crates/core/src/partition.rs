//! Splitting projectives and injectives, postprojective and preinjective
//! partitions of a finite indexed category, and their cover checks.

use serde::Serialize;

use crate::category::IndexedCategory;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::radical::{Clause, RadTable};
use crate::rep::{Family, Morph, Rep};

pub use crate::rep::lift_through_epi;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PartitionKind {
    Postprojective,
    Preinjective,
}

impl PartitionKind {
    pub fn letter(self) -> &'static str {
        match self {
            PartitionKind::Postprojective => "P",
            PartitionKind::Preinjective => "I",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub kind: PartitionKind,
    /// Object indices of the levels `0..=summary`.
    pub levels: Vec<Vec<usize>>,
    /// Always empty for finite categories; kept for the shape of the definition.
    pub infinite_part: Vec<usize>,
}

impl Partition {
    /// `p` (or `q`): the index of the last nonempty level.
    pub fn summary(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn level_of(&self, obj: usize) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(&obj))
    }

    /// Objects of the levels `k, k+1, ...`: the truncated category at level `k`.
    pub fn from_level(&self, k: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.levels.iter().skip(k).flatten().copied().collect();
        out.extend(&self.infinite_part);
        out.sort_unstable();
        out
    }
}

/// Radical trace and radical reject of one object inside a category.
#[derive(Clone, Debug)]
pub struct TraceReject {
    pub object: usize,
    /// Sum of images of radical maps into the object.
    pub trace: Family,
    /// Common kernel of radical maps out of the object.
    pub reject: Family,
}

fn family_sum(a: &Family, b: &Family) -> Family {
    a.iter().zip(b).map(|(x, y)| x.sum(y).expect("same ambient")).collect()
}

fn family_meet(a: &Family, b: &Family) -> Family {
    a.iter().zip(b).map(|(x, y)| x.intersect(y).expect("same ambient")).collect()
}

fn family_dim(f: &Family) -> usize {
    f.iter().map(Subspace::dim).sum()
}

/// Trace and reject of `n` with respect to the radical maps of `c`.
pub fn trace_reject(c: &IndexedCategory, n: usize) -> TraceReject {
    let x = c.object(n);
    let mut trace = x.zero_family();
    let mut reject = x.full_family();
    for k in 0..c.len() {
        for f in c.rad_morphisms(k, n) {
            trace = family_sum(&trace, &f.image_family());
        }
        for g in c.rad_morphisms(n, k) {
            reject = family_meet(&reject, &g.kernel_family());
        }
    }
    TraceReject { object: n, trace, reject }
}

/// `n` is a splitting projective iff its radical trace is a proper submodule:
/// a non-split epi from `add C` onto `n` exists exactly when radical maps
/// already cover `n`.
pub fn is_splitting_projective(c: &IndexedCategory, n: usize) -> (bool, TraceReject) {
    let tr = trace_reject(c, n);
    (family_dim(&tr.trace) < c.object(n).total_dim(), tr)
}

/// Dually, via the radical reject; with admissible monos restricted by a
/// cotest, the universal radical map out of `n` must also fail admissibility.
pub fn is_splitting_injective(c: &IndexedCategory, n: usize) -> (bool, TraceReject) {
    let tr = trace_reject(c, n);
    let blocked = family_dim(&tr.reject) > 0;
    if blocked || c.cotest().is_none() {
        return (blocked, tr);
    }
    let rad: Vec<Morph> = (0..c.len()).flat_map(|k| c.rad_morphisms(n, k)).collect();
    (c.extension_deficit(c.object(n), &rad) > 0, tr)
}

fn peel(c: &IndexedCategory, kind: PartitionKind) -> Result<Partition> {
    let mut remaining: Vec<usize> = (0..c.len()).collect();
    let mut levels = Vec::new();
    while !remaining.is_empty() {
        let sub = c.subcategory(&remaining);
        let level: Vec<usize> = (0..sub.len())
            .filter(|&i| match kind {
                PartitionKind::Postprojective => is_splitting_projective(&sub, i).0,
                PartitionKind::Preinjective => is_splitting_injective(&sub, i).0,
            })
            .map(|i| remaining[i])
            .collect();
        if level.is_empty() {
            return Err(Error::EmptyLevelWithRemainder { level: levels.len(), remaining: remaining.len() });
        }
        remaining.retain(|i| !level.contains(i));
        levels.push(level);
    }
    Ok(Partition { kind, levels, infinite_part: Vec::new() })
}

pub fn postprojective_partition(c: &IndexedCategory) -> Result<Partition> {
    peel(c, PartitionKind::Postprojective)
}

pub fn preinjective_partition(c: &IndexedCategory) -> Result<Partition> {
    peel(c, PartitionKind::Preinjective)
}

pub fn partition(c: &IndexedCategory, kind: PartitionKind) -> Result<Partition> {
    peel(c, kind)
}

/// Outcome of a cover (or cocover) check of one level.
#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub level: usize,
    pub covers: bool,
    pub minimal: bool,
    /// Objects of the truncated category that are not covered (cocovered).
    pub failures: Vec<usize>,
    /// Level members that can be dropped without breaking the cover.
    pub redundant: Vec<usize>,
}

impl CoverReport {
    pub fn pass(&self) -> bool {
        self.covers && self.minimal
    }
}

/// Whether the maps from (into) `members` reach all of `x` (have zero common kernel).
fn reaches(c: &IndexedCategory, members: &[usize], x: usize, kind: PartitionKind) -> bool {
    let obj = c.object(x);
    match kind {
        PartitionKind::Postprojective => {
            let mut img = obj.zero_family();
            for &y in members {
                for f in c.hom(y, x).basis() {
                    img = family_sum(&img, &f.image_family());
                }
            }
            family_dim(&img) == obj.total_dim()
        }
        PartitionKind::Preinjective => {
            let mut ker = obj.full_family();
            let mut maps = Vec::new();
            for &y in members {
                for g in c.hom(x, y).basis() {
                    ker = family_meet(&ker, &g.kernel_family());
                    maps.push(g.clone());
                }
            }
            family_dim(&ker) == 0 && c.extension_deficit(obj, &maps) == 0
        }
    }
}

fn check_cover(c: &IndexedCategory, p: &Partition, k: usize) -> CoverReport {
    let level = p.levels.get(k).cloned().unwrap_or_default();
    let truncated = p.from_level(k);
    let failures: Vec<usize> = truncated.iter().copied().filter(|&x| !reaches(c, &level, x, p.kind)).collect();
    let redundant: Vec<usize> = level
        .iter()
        .copied()
        .filter(|&y| {
            let rest: Vec<usize> = level.iter().copied().filter(|&z| z != y).collect();
            truncated.iter().all(|&x| reaches(c, &rest, x, p.kind))
        })
        .collect();
    CoverReport { level: k, covers: failures.is_empty(), minimal: redundant.is_empty(), failures, redundant }
}

/// Level `k` of a postprojective partition covers the truncated category.
pub fn verify_cover(c: &IndexedCategory, p: &Partition, k: usize) -> CoverReport {
    assert_eq!(p.kind, PartitionKind::Postprojective);
    check_cover(c, p, k)
}

/// Level `k` of a preinjective partition cocovers the truncated category.
pub fn verify_cocover(c: &IndexedCategory, p: &Partition, k: usize) -> CoverReport {
    assert_eq!(p.kind, PartitionKind::Preinjective);
    check_cover(c, p, k)
}

/// An explicit epi `⊕ Y_l -> X_x` with every `Y_l` in level `k`, built greedily;
/// also returns the object index of each summand.
pub fn epi_from_cover(c: &IndexedCategory, p: &Partition, x: usize, k: usize) -> Result<(Morph, Vec<usize>)> {
    let level = p.levels.get(k).ok_or_else(|| Error::CoverFailure(format!("no level {k}")))?;
    let obj = c.object(x);
    if level.contains(&x) {
        return Ok((Morph::identity(obj), vec![x]));
    }
    let mut img = obj.zero_family();
    let mut comps = Vec::new();
    let mut sources = Vec::new();
    'outer: for &y in level {
        for f in c.hom(y, x).basis() {
            let next = family_sum(&img, &f.image_family());
            if family_dim(&next) > family_dim(&img) {
                img = next;
                comps.push(f.clone());
                sources.push(y);
                if family_dim(&img) == obj.total_dim() {
                    break 'outer;
                }
            }
        }
    }
    if family_dim(&img) < obj.total_dim() {
        return Err(Error::CoverFailure(format!("level {k} does not cover {}", c.name(x))));
    }
    Ok((Morph::hcat(obj, &comps), sources))
}

/// An explicit mono `X_x -> ⊕ Z_l` with every `Z_l` in level `k`, built greedily.
pub fn mono_into_cocover(c: &IndexedCategory, p: &Partition, x: usize, k: usize) -> Result<(Morph, Vec<usize>)> {
    let level = p.levels.get(k).ok_or_else(|| Error::CoverFailure(format!("no level {k}")))?;
    let obj = c.object(x);
    if level.contains(&x) {
        return Ok((Morph::identity(obj), vec![x]));
    }
    let mut ker = obj.full_family();
    let mut deficit = c.extension_deficit(obj, &[]);
    let mut comps: Vec<Morph> = Vec::new();
    let mut targets = Vec::new();
    'outer: for &y in level {
        for g in c.hom(x, y).basis() {
            let next = family_meet(&ker, &g.kernel_family());
            comps.push(g.clone());
            let next_deficit = c.extension_deficit(obj, &comps);
            if family_dim(&next) < family_dim(&ker) || next_deficit < deficit {
                ker = next;
                deficit = next_deficit;
                targets.push(y);
                if family_dim(&ker) == 0 && deficit == 0 {
                    break 'outer;
                }
            } else {
                comps.pop();
            }
        }
    }
    if family_dim(&ker) > 0 || deficit > 0 {
        return Err(Error::CoverFailure(format!("level {k} does not cocover {}", c.name(x))));
    }
    Ok((Morph::vcat(obj, &comps), targets))
}

/// One step `Z_j -> Z_{j-1}` of a mono chain, with the objects of `Z_{j-1}`.
#[derive(Clone, Debug)]
pub struct ChainStep {
    pub map: Morph,
    pub targets: Vec<usize>,
}

/// Monos `m -> Z_{k-1} -> ... -> Z_0`, `Z_j ∈ add I_j`, for `m` in level `k`
/// of a preinjective partition.
pub fn preinjective_mono_chain(c: &IndexedCategory, p: &Partition, m: usize) -> Result<Vec<ChainStep>> {
    assert_eq!(p.kind, PartitionKind::Preinjective);
    let k = p.level_of(m).ok_or_else(|| Error::InvalidInput(format!("{} is in no level", c.name(m))))?;
    let mut steps = Vec::new();
    let mut current = vec![m];
    for j in (0..k).rev() {
        let mut maps = Vec::new();
        let mut targets = Vec::new();
        for &z in &current {
            let (f, t) = mono_into_cocover(c, p, z, j)?;
            maps.push(f);
            targets.extend(t);
        }
        let map = if maps.len() == 1 { maps.pop().unwrap() } else { Morph::diag(c.algebra(), &maps) };
        steps.push(ChainStep { map, targets: targets.clone() });
        current = targets;
    }
    Ok(steps)
}

/// Epis `Y_0 -> ... -> Y_{k-1} -> m`, `Y_j ∈ add P_j`, for `m` in level `k`
/// of a postprojective partition; listed from the one onto `m` downwards.
pub fn postprojective_epi_chain(c: &IndexedCategory, p: &Partition, m: usize) -> Result<Vec<ChainStep>> {
    assert_eq!(p.kind, PartitionKind::Postprojective);
    let k = p.level_of(m).ok_or_else(|| Error::InvalidInput(format!("{} is in no level", c.name(m))))?;
    let mut steps = Vec::new();
    let mut current = vec![m];
    for j in (0..k).rev() {
        let mut maps = Vec::new();
        let mut sources = Vec::new();
        for &z in &current {
            let (f, s) = epi_from_cover(c, p, z, j)?;
            maps.push(f);
            sources.extend(s);
        }
        let map = if maps.len() == 1 { maps.pop().unwrap() } else { Morph::diag(c.algebra(), &maps) };
        steps.push(ChainStep { map, targets: sources.clone() });
        current = sources;
    }
    Ok(steps)
}

/// Composite of a chain (the first map applied first).
pub fn compose_chain(start: &Rep, steps: &[ChainStep]) -> Morph {
    steps.iter().fold(Morph::identity(start), |acc, s| s.map.after(&acc))
}

/// A violation of `Hom(M, N) = rad^i(M, N)`.
#[derive(Clone, Debug, Serialize)]
pub struct PropdanViolation {
    pub source: String,
    pub target: String,
    pub level: usize,
    pub hom_dim: usize,
    pub rad_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropdanReport {
    pub kind: PartitionKind,
    pub checked: usize,
    pub precondition: Clause,
    pub violations: Vec<PropdanViolation>,
}

impl PropdanReport {
    pub fn pass(&self) -> bool {
        self.precondition.pass && self.violations.is_empty()
    }
}

/// `Hom(M, N) = rad^i(M, N)` for `M ∈ P_0`, `N ∈ P_i`; dually
/// `Hom(M, N) = rad^j(M, N)` for `M ∈ I_j`, `N ∈ I_0`.
pub fn verify_propdan(t: &RadTable, p: &Partition) -> PropdanReport {
    let c = t.category();
    let alg = c.algebra();
    let precondition = match p.kind {
        PartitionKind::Postprojective => {
            let missing: Vec<String> = (0..alg.vertex_count())
                .filter(|&v| c.find(&Rep::projective(alg, v)).is_none())
                .map(|v| format!("P({})", alg.vertex_name(v)))
                .collect();
            Clause::new("category contains the indecomposable projectives", missing.is_empty(), missing.join(" "))
        }
        PartitionKind::Preinjective => {
            let level0: Vec<usize> = p.levels.first().cloned().unwrap_or_default();
            let bad: Vec<String> =
                level0.iter().filter(|&&i| !is_splitting_injective(c, i).0).map(|&i| c.name(i).to_string()).collect();
            Clause::new("level 0 consists of splitting injectives", bad.is_empty(), bad.join(" "))
        }
    };
    let mut checked = 0;
    let mut violations = Vec::new();
    for (lvl, members) in p.levels.iter().enumerate().skip(1) {
        let zero_level = &p.levels[0];
        for &a in zero_level {
            for &b in members {
                let (src, dst) = match p.kind {
                    PartitionKind::Postprojective => (a, b),
                    PartitionKind::Preinjective => (b, a),
                };
                checked += 1;
                let hom_dim = c.hom(src, dst).dim();
                let rad_dim = t.power(lvl, src, dst).dim();
                if hom_dim != rad_dim {
                    violations.push(PropdanViolation {
                        source: c.name(src).to_string(),
                        target: c.name(dst).to_string(),
                        level: lvl,
                        hom_dim,
                        rad_dim,
                    });
                }
            }
        }
    }
    PropdanReport { kind: p.kind, checked, precondition, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Path, Quiver, Relation};
    use crate::ar::{enumerate_indecomposables, Limits};
    use crate::radical::{rad_power_table, DEFAULT_MAX_POWER};

    fn a2() -> Algebra {
        Algebra::new("A2", Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap(), vec![]).unwrap()
    }

    fn n3() -> Algebra {
        let q = Quiver::from_names(&["v"], &[("x", "v", "v")]).unwrap();
        let r = Relation::monomial(Path::from_arrows(&q, vec![0, 0, 0]).unwrap()).unwrap();
        Algebra::new("N3", q, vec![r]).unwrap()
    }

    fn idx(c: &IndexedCategory, m: &Rep) -> usize {
        c.find(m).unwrap().0
    }

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    #[test]
    fn a2_partitions() {
        let a = a2();
        let c = enumerate_indecomposables(&a, Limits::default()).unwrap();
        let (p1, p2, s1) =
            (idx(&c, &Rep::projective(&a, 0)), idx(&c, &Rep::projective(&a, 1)), idx(&c, &Rep::simple(&a, 0)));
        assert!(is_splitting_projective(&c, p1).0);
        assert!(!is_splitting_projective(&c, s1).0);
        assert!(is_splitting_injective(&c, p1).0);
        assert!(!is_splitting_injective(&c, p2).0);
        let pp = postprojective_partition(&c).unwrap();
        assert_eq!(pp.levels.len(), 2);
        assert_eq!(sorted(pp.levels[0].clone()), sorted(vec![p1, p2]));
        assert_eq!(pp.levels[1], vec![s1]);
        let pi = preinjective_partition(&c).unwrap();
        assert_eq!(sorted(pi.levels[0].clone()), sorted(vec![p1, s1]));
        assert_eq!(pi.levels[1], vec![p2]);
        for k in 0..2 {
            assert!(verify_cover(&c, &pp, k).pass());
            assert!(verify_cocover(&c, &pi, k).pass());
        }
        let (epi, _) = epi_from_cover(&c, &pp, s1, 0).unwrap();
        assert!(epi.is_surjective());
        let chain = preinjective_mono_chain(&c, &pi, p2).unwrap();
        assert_eq!(chain.len(), 1);
        assert!(chain[0].map.is_injective());
        let t = rad_power_table(&c, DEFAULT_MAX_POWER);
        assert!(verify_propdan(&t, &pp).pass());
        assert!(verify_propdan(&t, &pi).pass());
    }

    #[test]
    fn n3_partitions() {
        let a = n3();
        let c = enumerate_indecomposables(&a, Limits::default()).unwrap();
        let pp = postprojective_partition(&c).unwrap();
        let pi = preinjective_partition(&c).unwrap();
        assert_eq!(pp.summary(), Some(2));
        assert_eq!(pi.summary(), Some(2));
        let s = idx(&c, &Rep::simple(&a, 0));
        let chain = preinjective_mono_chain(&c, &pi, s).unwrap();
        assert_eq!(chain.len(), 2);
        let comp = compose_chain(c.object(s), &chain);
        assert!(comp.is_injective());
        let t = rad_power_table(&c, DEFAULT_MAX_POWER);
        let top = *pi.levels[0].first().unwrap();
        assert!(
            t.depth_between(s, top, &comp.retarget(c.object(s), c.object(top))).unwrap()
                >= crate::radical::Depth::Finite(2)
        );
    }

    #[test]
    fn restrictions_and_singletons() {
        let a = a2();
        let c = enumerate_indecomposables(&a, Limits::default()).unwrap();
        let (same, kept) = c.restrict(&[]);
        assert_eq!(same.len(), 3);
        assert_eq!(kept, vec![0, 1, 2]);
        let (empty, _) = c.restrict(&[0, 1, 2]);
        assert!(empty.is_empty());
        let (single, _) = c.restrict(&[0, 1]);
        assert!(is_splitting_projective(&single, 0).0 && is_splitting_injective(&single, 0).0);
    }
}
