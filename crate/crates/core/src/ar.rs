//! Syzygies, transpose, Auslander-Reiten translates, `Ext^1`, extensions,
//! almost split sequences and the enumeration of indecomposables.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::algebra::{Algebra, Path};
use crate::category::{default_names, IndexedCategory};
use crate::decompose::{decompose, is_isomorphic_indec, radical_of_end};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat, Subspace};
use crate::rep::{
    hom_basis, hom_from_projective, kernel_image_cokernel, lift_through_epi, projective_cover, DirectSum, HomBasis,
    Morph, Quotient, Rep,
};

/// `P1 --d--> P0 --p--> M -> 0` with `p` a projective cover and `P1` a
/// projective cover of the syzygy `ΩM = ker p`.
#[derive(Clone, Debug)]
pub struct ProjPresentation {
    pub module: Rep,
    pub p0: Rep,
    pub p1: Rep,
    pub p0_tops: Vec<usize>,
    pub p1_tops: Vec<usize>,
    pub p: Morph,
    pub d: Morph,
    pub syzygy: Rep,
    /// `ΩM -> P0`
    pub syzygy_incl: Morph,
}

pub fn min_presentation(m: &Rep) -> ProjPresentation {
    let cover = projective_cover(m);
    let kernel = kernel_image_cokernel(&cover.epi).kernel;
    let cover1 = projective_cover(&kernel.rep);
    let d = kernel.incl.after(&cover1.epi);
    ProjPresentation {
        module: m.clone(),
        p0: cover.proj,
        p1: cover1.proj,
        p0_tops: cover.tops,
        p1_tops: cover1.tops,
        p: cover.epi,
        d,
        syzygy: kernel.rep,
        syzygy_incl: kernel.incl,
    }
}

pub fn is_projective(m: &Rep) -> bool {
    projective_cover(m).proj.total_dim() == m.total_dim()
}

pub fn is_injective(m: &Rep) -> bool {
    is_projective(&m.dual())
}

/// `Tr M`, a module over the opposite algebra: the cokernel of
/// `Hom(P0, A) -> Hom(P1, A)` for a minimal presentation of `M`.
pub fn transpose(m: &Rep) -> Rep {
    let pres = min_presentation(m);
    let alg = m.algebra();
    let op = alg.opposite();
    if pres.p1_tops.is_empty() {
        return Rep::zero(&op);
    }
    let ds0 = DirectSum::new(alg, pres.p0_tops.iter().map(|&v| Rep::projective(alg, v)).collect());
    let ds1 = DirectSum::new(alg, pres.p1_tops.iter().map(|&v| Rep::projective(alg, v)).collect());
    let q: Vec<Rep> = pres.p0_tops.iter().map(|&v| Rep::projective(&op, v)).collect();
    let r: Vec<Rep> = pres.p1_tops.iter().map(|&w| Rep::projective(&op, w)).collect();
    let target = DirectSum::new(&op, r.clone()).rep;
    let mut columns = Vec::new();
    for (l, &v) in pres.p0_tops.iter().enumerate() {
        let mut comps = Vec::new();
        for (k, &w) in pres.p1_tops.iter().enumerate() {
            // P(w) -> P(v) is left multiplication by x in e_v A e_w; dualizing
            // gives right multiplication by x, i.e. P^op(v) -> P^op(w), e_v -> x^op
            let comp = ds0.proj[l].after(&pres.d).after(&ds1.inj[k]);
            let x = comp.mat(w).mul_vec(&alg.path_coords(&Path::trivial(w)));
            let y = alg.reversal_matrix(v, w).mul_vec(&x);
            comps.push(hom_from_projective(&q[l], v, &r[k], &y));
        }
        columns.push(Morph::vcat(&q[l], &comps).retarget(&q[l], &target));
    }
    let t = Morph::hcat(&target, &columns);
    kernel_image_cokernel(&t).cokernel.rep
}

/// `τM = D Tr M`.
pub fn tau(m: &Rep) -> Rep {
    transpose(m).dual()
}

/// `τ⁻M = Tr D M`.
pub fn tau_inverse(m: &Rep) -> Rep {
    transpose(&m.dual())
}

/// `Ext^1(M, N) = Hom(ΩM, N) / {φ ∘ ι : φ ∈ Hom(P0, N)}`.
#[derive(Clone, Debug)]
pub struct Ext1Space {
    pub m: Rep,
    pub n: Rep,
    pub presentation: ProjPresentation,
    /// `Hom(ΩM, N)`
    pub cocycles: HomBasis,
    /// Restrictions of maps `P0 -> N`, in cocycle coordinates.
    pub coboundaries: Subspace,
    /// Cocycles representing a basis of `Ext^1`.
    pub reps: Vec<Morph>,
}

impl Ext1Space {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coordinates of the class of a cocycle `ΩM -> N` in the basis `reps`.
    pub fn class_of(&self, cocycle: &Morph) -> Result<Vec<Rat>> {
        self.check(cocycle)?;
        Ok(self.coboundaries.quotient_coords(&self.cocycles.coords_unchecked(cocycle)))
    }

    pub fn cocycle(&self, coords: &[Rat]) -> Morph {
        let zero = Morph::zero(&self.presentation.syzygy, &self.n);
        self.reps.iter().zip(coords).fold(zero, |acc, (r, c)| acc.add(&r.scale(c)))
    }

    fn check(&self, cocycle: &Morph) -> Result<()> {
        if cocycle.source().dims() != self.presentation.syzygy.dims() || cocycle.target().dims() != self.n.dims() {
            return Err(Error::CocycleMismatch(format!(
                "expected a map {} -> {}, got {} -> {}",
                self.presentation.syzygy.dim_vector_string(),
                self.n.dim_vector_string(),
                cocycle.source().dim_vector_string(),
                cocycle.target().dim_vector_string()
            )));
        }
        if self.cocycles.coords(cocycle).is_none() {
            return Err(Error::CocycleMismatch("not a homomorphism from the syzygy".into()));
        }
        Ok(())
    }

    /// Class of the pushout of `ξ` along `ψ: N -> N'` (in `Ext^1(M, N')` of `target`).
    pub fn pushout_class(&self, xi: &Morph, psi: &Morph, target: &Ext1Space) -> Result<Vec<Rat>> {
        target.class_of(&psi.after(xi).retarget(&target.presentation.syzygy, &target.n))
    }

    /// Class of the pullback of `ξ` along an endomorphism `φ` of `M`.
    pub fn pullback_class(&self, xi: &Morph, phi: &Morph) -> Result<Vec<Rat>> {
        let pres = &self.presentation;
        let phi0 = lift_through_epi(&phi.after(&pres.p), &pres.p)
            .ok_or_else(|| Error::Inconsistent("projective cover does not lift".into()))?;
        let phi1 = phi0
            .after(&pres.syzygy_incl)
            .factor_through_mono(&pres.syzygy_incl)
            .ok_or_else(|| Error::Inconsistent("lift does not preserve the syzygy".into()))?;
        self.class_of(&xi.after(&phi1))
    }
}

pub fn ext1(m: &Rep, n: &Rep) -> Result<Ext1Space> {
    m.same_algebra(n)?;
    let presentation = min_presentation(m);
    let cocycles = hom_basis(&presentation.syzygy, n)?;
    let from_p0 = hom_basis(&presentation.p0, n)?;
    let gens =
        from_p0.basis().iter().map(|phi| cocycles.coords_unchecked(&phi.after(&presentation.syzygy_incl))).collect();
    let coboundaries = Subspace::from_spanning(cocycles.dim(), gens);
    let reps = coboundaries.non_pivots().into_iter().map(|c| cocycles.basis()[c].clone()).collect();
    Ok(Ext1Space { m: m.clone(), n: n.clone(), presentation, cocycles, coboundaries, reps })
}

pub fn ext1_dim(m: &Rep, n: &Rep) -> Result<usize> {
    Ok(ext1(m, n)?.dim())
}

/// `0 -> left --mono--> middle --epi--> right -> 0`
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub left: Rep,
    pub middle: Rep,
    pub right: Rep,
    pub mono: Morph,
    pub epi: Morph,
}

impl ShortExact {
    /// Checks injectivity, surjectivity, exactness in the middle and the
    /// intertwining property of both maps.
    pub fn verify(&self) -> bool {
        self.mono.intertwines()
            && self.epi.intertwines()
            && self.mono.is_injective()
            && self.epi.is_surjective()
            && self.epi.after(&self.mono).is_zero()
            && self.left.total_dim() + self.right.total_dim() == self.middle.total_dim()
    }

    /// Whether the epi admits a section.
    pub fn splits(&self) -> bool {
        lift_through_epi(&Morph::identity(&self.right), &self.epi).is_some()
    }
}

/// `W = (X ⊕ Y) / {(f z, -g z)}` with the induced maps.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub rep: Rep,
    pub from_x: Morph,
    pub from_y: Morph,
    /// The defining quotient of `X ⊕ Y`.
    pub quotient: Quotient,
}

pub fn pushout(f: &Morph, g: &Morph) -> Result<Pushout> {
    if f.source() != g.source() {
        return Err(Error::InvalidInput("pushout needs a common source".into()));
    }
    let alg = f.source().algebra();
    let sum = DirectSum::new(alg, vec![f.target().clone(), g.target().clone()]);
    let h = Morph::vcat(f.source(), &[f.clone(), g.scale(&-crate::linalg::rat(1))]).retarget(f.source(), &sum.rep);
    let quotient = kernel_image_cokernel(&h).cokernel;
    Ok(Pushout {
        rep: quotient.rep.clone(),
        from_x: quotient.proj.after(&sum.inj[0]),
        from_y: quotient.proj.after(&sum.inj[1]),
        quotient,
    })
}

/// `0 -> N -> E -> M^e -> 0` whose `k`-th component has class `xis[k]`.
pub fn build_extension(xis: &[Morph], ext: &Ext1Space) -> Result<ShortExact> {
    for xi in xis {
        ext.check(xi)?;
    }
    let (m, n) = (&ext.m, &ext.n);
    let alg = m.algebra();
    let pres = &ext.presentation;
    let e = xis.len();
    let right = DirectSum::new(alg, vec![m.clone(); e]).rep;
    if e == 0 {
        return Ok(ShortExact {
            left: n.clone(),
            middle: n.clone(),
            right: right.clone(),
            mono: Morph::identity(n),
            epi: Morph::zero(n, &right),
        });
    }
    let iota = Morph::diag(alg, &vec![pres.syzygy_incl.clone(); e]);
    let k_sum = iota.source().clone();
    let xi = Morph::hcat(n, xis).retarget(&k_sum, n);
    let po = pushout(&iota, &xi)?;
    let p_sum = Morph::diag(alg, &vec![pres.p.clone(); e]).retarget(iota.target(), &right);
    let from_sum = Morph::hcat(&right, &[p_sum, Morph::zero(n, &right)]);
    let epi = po.quotient.descend(&from_sum)?;
    Ok(ShortExact { left: n.clone(), middle: po.rep.clone(), right, mono: po.from_y, epi })
}

/// Radical maps `X -> N` from an indecomposable `X`, as a basis list.
fn radical_maps_into(x: &Rep, n: &Rep, rad_n: &[Morph]) -> Vec<Morph> {
    if x == n {
        return rad_n.to_vec();
    }
    if let Some(iso) = is_isomorphic_indec(x, n) {
        return rad_n.iter().map(|r| r.after(&iso)).collect();
    }
    hom_basis(x, n).map(|h| h.basis().to_vec()).unwrap_or_default()
}

/// The almost split sequence `0 -> τN -> E -> N -> 0` for an indecomposable
/// non-projective `N`; the epi is verified to be right almost split against
/// every module of `known`.
pub fn almost_split_sequence(n: &Rep, known: &[Rep]) -> Result<ShortExact> {
    if n.is_zero() || is_projective(n) {
        return Err(Error::InvalidInput("almost split sequences end in non-projective modules".into()));
    }
    let tn = tau(n);
    let ext = ext1(n, &tn)?;
    if ext.is_zero() {
        return Err(Error::NotAlmostSplit("Ext^1(N, τN) vanishes".into()));
    }
    let end_n = hom_basis(n, n)?;
    let rad_n: Vec<Morph> = radical_of_end(n).basis_vecs().iter().map(|c| end_n.combine(c)).collect();
    let end_t = hom_basis(&tn, &tn)?;
    let rad_t: Vec<Morph> = radical_of_end(&tn).basis_vecs().iter().map(|c| end_t.combine(c)).collect();
    // rows of the stacked action matrices, applied to class coordinates
    let e = ext.dim();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut columns: Vec<Vec<Vec<Rat>>> = Vec::new();
    for xi in &ext.reps {
        let mut col = Vec::new();
        for phi in &rad_n {
            col.push(ext.pullback_class(xi, phi)?);
        }
        for psi in &rad_t {
            col.push(ext.class_of(&psi.after(xi))?);
        }
        columns.push(col);
    }
    let blocks = rad_n.len() + rad_t.len();
    for b in 0..blocks {
        for r in 0..e {
            rows.push((0..e).map(|j| columns[j][b][r].clone()).collect());
        }
    }
    let socle = Mat::from_rows(e, rows).kernel();
    for coords in socle.basis_vecs() {
        let xi = ext.cocycle(&coords);
        let seq = build_extension(std::slice::from_ref(&xi), &ext)?;
        if !seq.verify() || seq.splits() {
            continue;
        }
        let ok = known
            .iter()
            .chain(std::iter::once(n))
            .all(|x| radical_maps_into(x, n, &rad_n).iter().all(|f| lift_through_epi(f, &seq.epi).is_some()));
        if ok {
            return Ok(seq);
        }
    }
    Err(Error::NotAlmostSplit(format!("no socle class for {} passed the factoring test", n.dim_vector_string())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_modules: usize,
    pub max_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_modules: 200, max_dim: 16 }
    }
}

/// Result of a possibly bounded enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub category: IndexedCategory,
    /// `None` when the closure completed; otherwise the bound that was hit.
    pub bound: Option<String>,
}

impl Enumeration {
    pub fn is_complete(&self) -> bool {
        self.bound.is_none()
    }

    pub fn into_result(self) -> Result<IndexedCategory> {
        match self.bound {
            None => Ok(self.category),
            Some(b) => Err(Error::EnumerationBound(b)),
        }
    }
}

struct Worklist {
    limits: Limits,
    known: Vec<Rep>,
    queue: VecDeque<usize>,
    bound: Option<String>,
}

impl Worklist {
    fn add(&mut self, m: Rep) {
        if m.is_zero() {
            return;
        }
        if m.total_dim() > self.limits.max_dim {
            self.bound.get_or_insert_with(|| {
                format!("a module of dimension {} exceeds max_dim {}", m.total_dim(), self.limits.max_dim)
            });
            return;
        }
        if self.known.iter().any(|x| is_isomorphic_indec(x, &m).is_some()) {
            return;
        }
        if self.known.len() >= self.limits.max_modules {
            self.bound.get_or_insert_with(|| format!("more than {} indecomposables", self.limits.max_modules));
            return;
        }
        self.queue.push_back(self.known.len());
        self.known.push(m);
    }

    fn add_summands(&mut self, m: &Rep) {
        for s in decompose(m).modules() {
            self.add(s);
        }
    }
}

/// Worklist closure from the indecomposable projectives and injectives under
/// summands of `rad P` and `I / soc I`, `τ`, `τ⁻` and middle terms of almost
/// split sequences. Never fails: bounds are reported in the result.
pub fn enumerate_partial(alg: &Algebra, limits: Limits) -> Result<Enumeration> {
    let mut w = Worklist { limits, known: Vec::new(), queue: VecDeque::new(), bound: None };
    let n = alg.vertex_count();
    for v in 0..n {
        w.add(Rep::projective(alg, v));
    }
    for v in 0..n {
        w.add(Rep::injective(alg, v));
    }
    for v in 0..n {
        let p = Rep::projective(alg, v);
        let rad = p.submodule(&p.radical_family())?;
        w.add_summands(&rad.rep);
        let i = Rep::injective(alg, v);
        let top = i.quotient(&i.socle_family())?;
        w.add_summands(&top.rep);
    }
    while let Some(idx) = w.queue.pop_front() {
        let x = w.known[idx].clone();
        if !is_projective(&x) {
            w.add(tau(&x));
            let known = w.known.clone();
            let seq = almost_split_sequence(&x, &known)?;
            w.add_summands(&seq.middle);
        }
        if !is_injective(&x) {
            w.add(tau_inverse(&x));
        }
    }
    let names = default_names(&w.known);
    let full = w.bound.is_none();
    Ok(Enumeration { category: IndexedCategory::new(alg, w.known, names, full), bound: w.bound })
}

/// All indecomposables of a representation-finite algebra, or `EnumerationBound`.
pub fn enumerate_indecomposables(alg: &Algebra, limits: Limits) -> Result<IndexedCategory> {
    enumerate_partial(alg, limits)?.into_result()
}

/// `M ≅ τ⁻τM`-style check helper: whether two indecomposables are isomorphic.
pub fn same_indecomposable(a: &Rep, b: &Rep) -> bool {
    is_isomorphic_indec(a, b).is_some()
}

/// Whether every entry of a class vector vanishes.
pub fn is_zero_class(c: &[Rat]) -> bool {
    c.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, Relation};
    use crate::linalg::rat;

    fn a2() -> Algebra {
        Algebra::new("A2", Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap(), vec![]).unwrap()
    }

    fn a3() -> Algebra {
        let q = Quiver::from_names(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        Algebra::new("A3", q, vec![]).unwrap()
    }

    fn n3() -> Algebra {
        let q = Quiver::from_names(&["v"], &[("x", "v", "v")]).unwrap();
        let r = Relation::monomial(Path::from_arrows(&q, vec![0, 0, 0]).unwrap()).unwrap();
        Algebra::new("N3", q, vec![r]).unwrap()
    }

    fn kronecker() -> Algebra {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        Algebra::new("kronecker", q, vec![]).unwrap()
    }

    fn jordan(alg: &Algebra, n: usize) -> Rep {
        let mut m = Mat::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = rat(1);
        }
        Rep::new(alg, vec![n], vec![m]).unwrap()
    }

    fn iso(a: &Rep, b: &Rep) -> bool {
        crate::decompose::is_isomorphic(a, b).is_some()
    }

    #[test]
    fn presentations() {
        let a = a2();
        let p = min_presentation(&Rep::projective(&a, 0));
        assert!(p.p1.is_zero() && p.syzygy.is_zero());
        let p = min_presentation(&Rep::simple(&a, 0));
        assert!(iso(&p.p0, &Rep::projective(&a, 0)));
        assert!(iso(&p.p1, &Rep::projective(&a, 1)));
        assert!(iso(&p.syzygy, &Rep::simple(&a, 1)));
        let n = n3();
        let p = min_presentation(&Rep::simple(&n, 0));
        assert!(iso(&p.p1, &Rep::projective(&n, 0)));
        assert!(iso(&p.syzygy, &jordan(&n, 2)));
    }

    #[test]
    fn translates() {
        let a = a2();
        for v in 0..2 {
            assert!(tau(&Rep::projective(&a, v)).is_zero());
        }
        let t = tau(&Rep::simple(&a, 0));
        assert_eq!(t.algebra(), &a);
        assert!(iso(&t, &Rep::projective(&a, 1)));
        assert!(iso(&tau_inverse(&Rep::projective(&a, 1)), &Rep::simple(&a, 0)));
        let n = n3();
        assert!(iso(&tau(&jordan(&n, 2)), &jordan(&n, 2)));
        assert!(iso(&tau(&jordan(&n, 1)), &jordan(&n, 1)));
    }

    #[test]
    fn extensions() {
        let a = a2();
        let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
        let e = ext1(&s1, &s2).unwrap();
        assert_eq!(e.dim(), 1);
        let seq = build_extension(&e.reps, &e).unwrap();
        assert!(seq.verify() && !seq.splits());
        assert!(iso(&seq.middle, &Rep::projective(&a, 0)));
        let zero = Morph::zero(&e.presentation.syzygy, &s2);
        let split = build_extension(&[zero], &e).unwrap();
        assert!(split.verify() && split.splits());
        assert!(iso(&split.middle, &DirectSum::new(&a, vec![s2.clone(), s1.clone()]).rep));
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
        let bad = Morph::zero(&s1, &s2);
        assert!(matches!(build_extension(&[bad], &e), Err(Error::CocycleMismatch(_))));
    }

    #[test]
    fn pushout_dimension() {
        let a = a2();
        let p1 = Rep::projective(&a, 0);
        let soc = p1.submodule(&p1.socle_family()).unwrap();
        let po = pushout(&soc.incl, &soc.incl).unwrap();
        assert_eq!(po.rep.total_dim(), 3);
        assert_eq!(po.from_x.after(&soc.incl), po.from_y.after(&soc.incl));
    }

    #[test]
    fn almost_split_examples() {
        let a = a2();
        let seq = almost_split_sequence(&Rep::simple(&a, 0), &[]).unwrap();
        assert!(iso(&seq.left, &Rep::projective(&a, 1)));
        assert!(iso(&seq.middle, &Rep::projective(&a, 0)));
        let n = n3();
        let ms: Vec<Rep> = (1..=3).map(|k| jordan(&n, k)).collect();
        let seq = almost_split_sequence(&ms[1], &ms).unwrap();
        let mid = DirectSum::new(&n, vec![ms[0].clone(), ms[2].clone()]).rep;
        assert!(iso(&seq.middle, &mid));
        let seq = almost_split_sequence(&ms[0], &ms).unwrap();
        assert!(iso(&seq.middle, &ms[1]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_indecomposables(&a2(), Limits::default()).unwrap().len(), 3);
        assert_eq!(enumerate_indecomposables(&a3(), Limits::default()).unwrap().len(), 6);
        assert_eq!(enumerate_indecomposables(&n3(), Limits::default()).unwrap().len(), 3);
        let k = enumerate_partial(&kronecker(), Limits { max_modules: 500, max_dim: 8 }).unwrap();
        assert!(!k.is_complete());
        assert!(matches!(k.into_result(), Err(Error::EnumerationBound(_))));
    }
}
