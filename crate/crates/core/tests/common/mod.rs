#![allow(dead_code)]

use num_traits::{One, Zero};
use proptest::test_runner::TestCaseError;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radfilt::algebra::Algebra;
use radfilt::ar::{enumerate_indecomposables, enumerate_partial, is_projective, tau, tau_inverse, Limits};
use radfilt::category::IndexedCategory;
use radfilt::decompose::{decompose, is_isomorphic_indec};
use radfilt::linalg::{rat, Mat, Rat, Subspace};
use radfilt::partition::{is_splitting_projective, lift_through_epi};
use radfilt::presets::preset;
use radfilt::qh::{QhData, QhOrder};
use radfilt::radical::{rad_power_table, Depth, RadTable};
use radfilt::rep::{hom_basis, kernel_image_cokernel, projective_cover, DirectSum, Morph, Rep};

pub type Check = Result<(), TestCaseError>;

pub fn fail(msg: impl Into<String>) -> TestCaseError {
    TestCaseError::fail(msg.into())
}

pub fn load(name: &str) -> (Algebra, QhOrder) {
    preset(name).unwrap().build().unwrap()
}

pub fn category(name: &str) -> IndexedCategory {
    enumerate_indecomposables(&load(name).0, Limits::default()).unwrap()
}

/// Objects to draw from: the full list for finite presets, the bounded list for Kronecker.
pub fn pool(name: &str) -> IndexedCategory {
    let (a, _) = load(name);
    enumerate_partial(&a, Limits { max_modules: 40, max_dim: 7 }).unwrap().category
}

pub const POOL_PRESETS: [&str; 5] = ["A2", "A3", "N3", "QH4", "kronecker"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(r: &mut ChaCha8Rng) -> Rat {
    rat(r.gen_range(-3..=3))
}

/// Unit lower times unit upper triangular, with small integer entries.
pub fn random_invertible(r: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut l = Mat::identity(n);
    let mut u = Mat::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i > j {
                l[(i, j)] = small(r);
            } else if i < j {
                u[(i, j)] = small(r);
            }
        }
    }
    &l * &u
}

pub fn random_base_change(r: &mut ChaCha8Rng, m: &Rep) -> (Rep, Morph) {
    let change: Vec<Mat> = m.dims().iter().map(|&d| random_invertible(r, d)).collect();
    m.base_change(&change).unwrap()
}

/// Bound on the total dimension of [`random_module`] sums after the first summand.
pub const MAX_TOTAL_DIM: usize = 16;

/// A random direct sum of listed indecomposables, disguised by a base
/// change; returns the module and the object index of each summand.
pub fn random_module(r: &mut ChaCha8Rng, c: &IndexedCategory, max_summands: usize) -> (Rep, Vec<usize>) {
    let k = r.gen_range(1..=max_summands);
    let mut picks: Vec<usize> = vec![r.gen_range(0..c.len())];
    let mut total = c.object(picks[0]).total_dim();
    for _ in 1..k {
        let i = r.gen_range(0..c.len());
        if total + c.object(i).total_dim() <= MAX_TOTAL_DIM {
            total += c.object(i).total_dim();
            picks.push(i);
        }
    }
    let sum = DirectSum::new(c.algebra(), picks.iter().map(|&i| c.object(i).clone()).collect());
    let (m, _) = random_base_change(r, &sum.rep);
    (m, picks)
}

pub fn random_combo(r: &mut ChaCha8Rng, basis: &[Morph], source: &Rep, target: &Rep) -> Morph {
    basis.iter().fold(Morph::zero(source, target), |acc, b| acc.add(&b.scale(&small(r))))
}

pub fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> Mat {
    let mut m = Mat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if r.gen_bool(density) {
                m[(i, j)] = small(r);
            }
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Brute-force oracle for radical powers: spans of explicit composites along
// every chain of objects, with rad(X, X) found by testing nilpotency.
// ---------------------------------------------------------------------------

fn is_nilpotent(f: &Morph) -> bool {
    let n = f.source().total_dim().max(1);
    let mut p = f.clone();
    for _ in 0..n {
        p = p.after(f);
    }
    p.is_zero()
}

/// Radical maps `X_i -> X_j` found without the trace form: for `i = j`,
/// each basis endomorphism shifted by its unique eigenvalue, checked nilpotent.
pub fn oracle_rad1(c: &IndexedCategory, i: usize, j: usize) -> Vec<Morph> {
    let h = c.hom(i, j);
    if i != j {
        return h.basis().to_vec();
    }
    let x = c.object(i);
    let id = Morph::identity(x);
    let d = rat(x.total_dim() as i64);
    h.basis()
        .iter()
        .map(|b| {
            let tr: Rat = b.mats().iter().map(Mat::trace).fold(Rat::zero(), |a, t| a + t);
            let shifted = b.sub(&id.scale(&(tr / &d)));
            assert!(is_nilpotent(&shifted), "End({}) is not split local", c.name(i));
            shifted
        })
        .filter(|f| !f.is_zero())
        .collect()
}

/// `rad^n(X_i, X_j)` for all pairs and `n = 1..=top`, as spans of composites
/// `f_n ∘ ... ∘ f_1` of radical basis maps along every chain of objects.
pub struct ChainOracle {
    /// `spans[n-1][i][j]` in coordinates of `c.hom(i, j)`.
    pub spans: Vec<Vec<Vec<Subspace>>>,
}

pub fn chain_oracle(c: &IndexedCategory, top: usize) -> ChainOracle {
    let k = c.len();
    let rad1: Vec<Vec<Vec<Morph>>> = (0..k).map(|i| (0..k).map(|j| oracle_rad1(c, i, j)).collect()).collect();
    // Every composite of length n ending at each object, from each source.
    let mut frontier: Vec<Vec<Vec<Morph>>> = rad1.clone();
    let mut spans = Vec::new();
    for n in 1..=top {
        let mut level = Vec::new();
        for i in 0..k {
            let mut row = Vec::new();
            for j in 0..k {
                let h = c.hom(i, j);
                let gens: Vec<Vec<Rat>> = frontier[i][j].iter().map(|f| h.coords(f).expect("intertwines")).collect();
                row.push(Subspace::from_spanning(h.dim(), gens));
            }
            level.push(row);
        }
        spans.push(level);
        if n == top {
            break;
        }
        let mut next = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for m in 0..k {
                // Keep a basis of the current span only; spans are what the chains generate.
                let reduced: Vec<Morph> = {
                    let s = &spans[n - 1][i][m];
                    s.basis_vecs().iter().map(|v| c.hom(i, m).combine(v)).collect()
                };
                for f in &reduced {
                    for j in 0..k {
                        for g in &rad1[m][j] {
                            next[i][j].push(g.after(f));
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    ChainOracle { spans }
}

impl ChainOracle {
    pub fn depth(&self, c: &IndexedCategory, i: usize, j: usize, f: &Morph) -> Depth {
        let coords = c.hom(i, j).coords(f).expect("intertwines");
        if radfilt::linalg::is_zero_vec(&coords) {
            return Depth::Infinite;
        }
        let mut d = 0;
        for (n, level) in self.spans.iter().enumerate() {
            if level[i][j].contains_vec(&coords) {
                d = n + 1;
            } else {
                break;
            }
        }
        if d == self.spans.len() {
            Depth::AtLeast(d)
        } else {
            Depth::Finite(d)
        }
    }
}

/// `f` moved onto the listed objects isomorphic to its source and target.
pub fn transport(c: &IndexedCategory, f: &Morph) -> (usize, usize, Morph) {
    let (i, a) = c.find(f.source()).expect("source listed");
    let (j, b) = c.find(f.target()).expect("target listed");
    let g = b.after(f).after(&a.inverse().unwrap());
    (i, j, g.retarget(c.object(i), c.object(j)))
}

/// Depth by the chain oracle; stable tables are compared up to one past the
/// table's own stabilization index so that `AtLeast` never hides a value.
pub fn oracle_depth(c: &IndexedCategory, t: &RadTable, f: &Morph) -> Depth {
    let top = t.computed() + 1;
    let o = chain_oracle(c, top);
    let (i, j, g) = transport(c, f);
    match o.depth(c, i, j, &g) {
        Depth::AtLeast(_) if t.is_stable() && t.rad_infinity_is_zero() => Depth::Infinite,
        d => d,
    }
}

/// Table recursion and chain enumeration agree on every pair and power.
pub fn compare_with_oracle(c: &IndexedCategory) -> Result<usize, String> {
    let t = rad_power_table(c, radfilt::radical::DEFAULT_MAX_POWER);
    let top = t.computed().max(1) + 1;
    let o = chain_oracle(c, top);
    let mut checked = 0;
    for n in 1..=top {
        for i in 0..c.len() {
            for j in 0..c.len() {
                let table = t.power_or_hom(n, i, j);
                if table != o.spans[n - 1][i][j] {
                    return Err(format!("rad^{n}({}, {}) differs", c.name(i), c.name(j)));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

// ---------------------------------------------------------------------------
// Property checks shared by the proptest suite and the acceptance harness.
// ---------------------------------------------------------------------------

pub struct Pools {
    pub cats: Vec<IndexedCategory>,
    pub tables: Vec<RadTable>,
}

impl Pools {
    pub fn new() -> Pools {
        let cats: Vec<IndexedCategory> = POOL_PRESETS.iter().map(|n| pool(n)).collect();
        let tables = cats.iter().map(|c| rad_power_table(c, radfilt::radical::DEFAULT_MAX_POWER)).collect();
        Pools { cats, tables }
    }
}

/// Hom bases, decomposition maps, covers, kernels and cokernels all intertwine.
pub fn prop_intertwining(p: &Pools, which: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let c = &p.cats[which % p.cats.len()];
    let (m, _) = random_module(&mut r, c, 3);
    let (n, _) = random_module(&mut r, c, 2);
    let alg = c.algebra();
    for v in 0..alg.vertex_count() {
        let h = hom_basis(&Rep::projective(alg, v), &m).unwrap();
        if h.dim() != m.dim_at(v) {
            return Err(fail(format!("dim Hom(P({v}), M) = {} but M_v has dim {}", h.dim(), m.dim_at(v))));
        }
    }
    let hb = hom_basis(&m, &n).unwrap();
    let mut produced: Vec<Morph> = hb.basis().to_vec();
    let f = random_combo(&mut r, hb.basis(), &m, &n);
    let kic = kernel_image_cokernel(&f);
    produced.extend([f.clone(), kic.kernel.incl.clone(), kic.cokernel.proj.clone()]);
    produced.push(projective_cover(&m).epi);
    for s in decompose(&m).summands {
        produced.extend(s.inclusions);
        produced.extend(s.projections);
    }
    for g in &produced {
        if !g.intertwines() {
            return Err(fail("a produced morphism does not intertwine"));
        }
    }
    Ok(())
}

/// The multiset of summands does not depend on the basis the module is written in.
pub fn prop_krull_schmidt(p: &Pools, which: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let c = &p.cats[which % p.cats.len()];
    let (m, mut picks) = random_module(&mut r, c, 4);
    let (m2, _) = random_base_change(&mut r, &m);
    picks.sort_unstable();
    for x in [&m, &m2] {
        let d = decompose(x);
        let mut found = Vec::new();
        for s in &d.summands {
            let (i, _) = c.find(&s.module).ok_or_else(|| fail("summand not in the list"))?;
            found.extend(std::iter::repeat_n(i, s.multiplicity));
        }
        found.sort_unstable();
        if found != picks {
            return Err(fail(format!("summands {found:?} but built from {picks:?}")));
        }
    }
    Ok(())
}

/// `τ⁻ τ X ≅ X` for non-projective indecomposables.
pub fn prop_tau_roundtrip(p: &Pools, which: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let c = &p.cats[which % p.cats.len()];
    let candidates: Vec<usize> = (0..c.len()).filter(|&i| !is_projective(c.object(i))).collect();
    if candidates.is_empty() {
        return Ok(());
    }
    let i = candidates[r.gen_range(0..candidates.len())];
    let (x, _) = random_base_change(&mut r, c.object(i));
    let back = tau_inverse(&tau(&x));
    if is_isomorphic_indec(&back, &x).is_none() {
        return Err(fail(format!("tau^- tau {} is not isomorphic to it", c.name(i))));
    }
    Ok(())
}

/// `g ∘ f ∈ rad^n` when `f ∈ rad^n`, and `∈ rad^(n+1)` when `g` is radical too.
pub fn prop_ideal(p: &Pools, which: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let idx = which % p.tables.len();
    let t = &p.tables[idx];
    let c = t.category();
    let (i, j, k) = (r.gen_range(0..c.len()), r.gen_range(0..c.len()), r.gen_range(0..c.len()));
    let n = r.gen_range(1..=t.computed().max(1));
    let fs: Vec<Morph> = t.power_or_hom(n, i, j).basis_vecs().iter().map(|v| c.hom(i, j).combine(v)).collect();
    let f = random_combo(&mut r, &fs, c.object(i), c.object(j));
    let g = random_combo(&mut r, c.hom(j, k).basis(), c.object(j), c.object(k));
    let gr = random_combo(&mut r, &c.rad_morphisms(j, k), c.object(j), c.object(k));
    let h = c.hom(i, k);
    if !t.power_or_hom(n, i, k).contains_vec(&h.coords(&g.after(&f)).unwrap()) {
        return Err(fail("rad^n is not closed under composition with Hom"));
    }
    let fg = f.after(&random_combo(&mut r, c.hom(k, i).basis(), c.object(k), c.object(i)));
    if !t.power_or_hom(n, k, j).contains_vec(&c.hom(k, j).coords(&fg).unwrap()) {
        return Err(fail("rad^n is not closed under precomposition"));
    }
    if !t.power_or_hom(n + 1, i, k).contains_vec(&h.coords(&gr.after(&f)).unwrap()) {
        return Err(fail("rad * rad^n is not in rad^(n+1)"));
    }
    Ok(())
}

/// Rank plus nullity, and `(A + B) ∩ C = A + (B ∩ C)` whenever `A ⊆ C`.
pub fn prop_linear(seed: u64) -> Check {
    let mut r = rng(seed);
    let rows = r.gen_range(1..=6);
    let cols = r.gen_range(1..=6);
    let m = random_matrix(&mut r, rows, cols, 0.6);
    if m.rank() + m.kernel().dim() != cols {
        return Err(fail("rank-nullity fails"));
    }
    if m.image().dim() != m.rank() || m.transpose().rank() != m.rank() {
        return Err(fail("row and column rank differ"));
    }
    let amb = r.gen_range(1..=6);
    let span = |r: &mut ChaCha8Rng, k: usize| {
        let gens = (0..k).map(|_| random_matrix(r, 1, amb, 0.5).row(0).to_vec()).collect();
        Subspace::from_spanning(amb, gens)
    };
    let a = span(&mut r, 2);
    let extra = span(&mut r, 2);
    let cc = a.sum(&extra).unwrap();
    let b = span(&mut r, 3);
    let lhs = a.sum(&b).unwrap().intersect(&cc).unwrap();
    let rhs = a.sum(&b.intersect(&cc).unwrap()).unwrap();
    if lhs != rhs {
        return Err(fail("modular law fails"));
    }
    let dim_sum = a.sum(&b).unwrap().dim() + a.intersect(&b).unwrap().dim();
    if dim_sum != a.dim() + b.dim() {
        return Err(fail("dimension formula for sum and intersection fails"));
    }
    Ok(())
}

/// Splitting projectives admit only split epis; the others are hit by a
/// non-split epi built from radical maps.
pub fn prop_splitting(p: &Pools, which: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let c = &p.cats[which % 4];
    let x = r.gen_range(0..c.len());
    let obj = c.object(x);
    let (split, _) = is_splitting_projective(c, x);
    if split {
        // A random epi from a random sum containing enough of the list.
        let (y, _) = random_module(&mut r, c, 3);
        let sum = DirectSum::new(c.algebra(), vec![y, obj.clone()]);
        let hb = hom_basis(&sum.rep, obj).unwrap();
        let g = random_combo(&mut r, hb.basis(), &sum.rep, obj);
        if g.is_surjective() && lift_through_epi(&Morph::identity(obj), &g).is_none() {
            return Err(fail(format!("non-split epi onto the splitting projective {}", c.name(x))));
        }
    } else {
        let rads: Vec<Morph> = (0..c.len()).flat_map(|k| c.rad_morphisms(k, x)).collect();
        let g = Morph::hcat(obj, &rads);
        if !g.is_surjective() || lift_through_epi(&Morph::identity(obj), &g).is_some() {
            return Err(fail(format!("no non-split epi onto {}", c.name(x))));
        }
    }
    Ok(())
}

pub fn depth_of(t: &RadTable, f: &Morph) -> Depth {
    t.depth(f).unwrap()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn qh_data(name: &str) -> QhData {
    let (a, o) = load(name);
    QhData::new(&a, o).unwrap()
}
