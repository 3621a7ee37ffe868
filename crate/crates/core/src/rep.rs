//! Representations, morphisms and Hom spaces.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Mat, Rat, Subspace};

/// A finite-dimensional right module, given as a quiver representation.
#[derive(Clone)]
pub struct Rep(Arc<RepData>);

struct RepData {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.alg == other.0.alg && self.0.dims == other.0.dims && self.0.maps == other.0.maps)
    }
}

impl Eq for Rep {}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.0.dims)?;
        for (a, m) in self.0.maps.iter().enumerate() {
            write!(f, " {}={:?}", self.0.alg.quiver().arrow(a).name, m)?;
        }
        Ok(())
    }
}

/// Subspaces of each vertex space.
pub type Family = Vec<Subspace>;

impl Rep {
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Rep> {
        if dims.len() != alg.vertex_count() || maps.len() != alg.arrow_count() {
            return Err(Error::InvalidInput("representation shape does not match the quiver".into()));
        }
        for (a, m) in alg.quiver().arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidInput(format!("arrow '{}' has a map of the wrong shape", a.name)));
            }
        }
        for r in alg.relations() {
            if !alg.eval_relation(r, &maps, &dims).is_zero() {
                return Err(Error::InvalidInput("representation violates a relation".into()));
            }
        }
        Ok(Rep::raw(alg.clone(), dims, maps))
    }

    pub(crate) fn raw(alg: Algebra, dims: Vec<usize>, maps: Vec<Mat>) -> Rep {
        Rep(Arc::new(RepData { alg, dims, maps }))
    }

    pub fn zero(alg: &Algebra) -> Rep {
        let dims = vec![0; alg.vertex_count()];
        let maps = alg.quiver().arrows().iter().map(|_| Mat::zeros(0, 0)).collect();
        Rep::raw(alg.clone(), dims, maps)
    }

    pub fn simple(alg: &Algebra, v: usize) -> Rep {
        let dims: Vec<usize> = (0..alg.vertex_count()).map(|u| usize::from(u == v)).collect();
        let maps = alg.quiver().arrows().iter().map(|a| Mat::zeros(dims[a.target], dims[a.source])).collect();
        Rep::raw(alg.clone(), dims, maps)
    }

    /// `P(v)`: component at `u` spanned by the basis paths `v ~> u`.
    pub fn projective(alg: &Algebra, v: usize) -> Rep {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|u| alg.pair_dim(v, u)).collect();
        let mut maps = Vec::new();
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            let mut m = Mat::zeros(dims[a.target], dims[a.source]);
            for (j, &g) in alg.pair_basis(v, a.source).iter().enumerate() {
                for (t, c) in alg.mul_arrow(&vec![(g, Rat::one())], ai) {
                    m[(alg.local_index(t), j)] += c;
                }
            }
            maps.push(m);
        }
        Rep::raw(alg.clone(), dims, maps)
    }

    /// `I(v)`: the dual of the projective at `v` over the opposite algebra.
    pub fn injective(alg: &Algebra, v: usize) -> Rep {
        Rep::projective(&alg.opposite(), v).dual()
    }

    /// Vector space dual; a representation over the opposite algebra.
    pub fn dual(&self) -> Rep {
        Rep::raw(self.0.alg.opposite(), self.0.dims.clone(), self.0.maps.iter().map(Mat::transpose).collect())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.0.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.0.maps
    }

    pub fn same_algebra(&self, other: &Rep) -> Result<()> {
        if self.algebra() != other.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn path_matrix(&self, p: &Path) -> Mat {
        let mut m = Mat::identity(self.dim_at(p.source));
        for &a in &p.arrows {
            m = &self.0.maps[a] * &m;
        }
        m
    }

    pub fn satisfies_relations(&self) -> bool {
        let alg = self.algebra();
        alg.relations().iter().all(|r| alg.eval_relation(r, &self.0.maps, &self.0.dims).is_zero())
    }

    /// Transports the representation along per-vertex invertible matrices;
    /// returns the new module and the isomorphism `self -> new`.
    pub fn base_change(&self, change: &[Mat]) -> Result<(Rep, Morph)> {
        let mut invs = Vec::new();
        for (v, g) in change.iter().enumerate() {
            if g.shape() != (self.dim_at(v), self.dim_at(v)) {
                return Err(Error::InvalidInput("base change has the wrong shape".into()));
            }
            invs.push(g.inverse().ok_or_else(|| Error::InvalidInput("base change is singular".into()))?);
        }
        let maps = self
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .zip(self.maps())
            .map(|(a, m)| &(&change[a.target] * m) * &invs[a.source])
            .collect();
        let new = Rep::raw(self.algebra().clone(), self.dims().to_vec(), maps);
        let iso = Morph::raw(self.clone(), new.clone(), change.to_vec());
        Ok((new, iso))
    }

    pub fn zero_family(&self) -> Family {
        self.dims().iter().map(|&d| Subspace::zero(d)).collect()
    }

    pub fn full_family(&self) -> Family {
        self.dims().iter().map(|&d| Subspace::full(d)).collect()
    }

    pub fn is_subrep_family(&self, fam: &Family) -> bool {
        self.algebra()
            .quiver()
            .arrows()
            .iter()
            .zip(self.maps())
            .all(|(a, m)| fam[a.target].contains(&fam[a.source].map(m)).unwrap_or(false))
    }

    /// Submodule spanned by the given family; errors if it is not closed.
    pub fn submodule(&self, fam: &Family) -> Result<Sub> {
        if !self.is_subrep_family(fam) {
            return Err(Error::InvalidInput("subspace family is not a submodule".into()));
        }
        let alg = self.algebra();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .zip(self.maps())
            .map(|(a, m)| {
                let (src, dst) = (&fam[a.source], &fam[a.target]);
                let cols = src.basis_vecs().iter().map(|k| dst.coords_unchecked(&m.mul_vec(k))).collect();
                Mat::from_cols(dst.dim(), cols)
            })
            .collect();
        let dims = fam.iter().map(Subspace::dim).collect();
        let rep = Rep::raw(alg.clone(), dims, maps);
        let incl = Morph::raw(rep.clone(), self.clone(), fam.iter().map(Subspace::basis_columns).collect());
        Ok(Sub { rep, incl })
    }

    /// Quotient by a submodule family, on the canonical complement coordinates.
    pub fn quotient(&self, fam: &Family) -> Result<Quotient> {
        if !self.is_subrep_family(fam) {
            return Err(Error::InvalidInput("subspace family is not a submodule".into()));
        }
        let alg = self.algebra();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .zip(self.maps())
            .map(|(a, m)| {
                let (src, dst) = (&fam[a.source], &fam[a.target]);
                let cols = src.non_pivots().into_iter().map(|c| dst.quotient_coords(&m.col(c))).collect();
                Mat::from_cols(self.dim_at(a.target) - dst.dim(), cols)
            })
            .collect();
        let dims: Vec<usize> = fam.iter().zip(self.dims()).map(|(s, &d)| d - s.dim()).collect();
        let rep = Rep::raw(alg.clone(), dims.clone(), maps);
        let proj_mats = fam
            .iter()
            .zip(self.dims())
            .map(|(s, &d)| {
                Mat::from_cols(d - s.dim(), (0..d).map(|c| s.quotient_coords(&crate::linalg::unit_vec(d, c))).collect())
            })
            .collect();
        let proj = Morph::raw(self.clone(), rep.clone(), proj_mats);
        Ok(Quotient { rep, proj, sub: fam.clone() })
    }

    /// `rad M`: at each vertex, the sum of the images of incoming arrows.
    pub fn radical_family(&self) -> Family {
        let alg = self.algebra();
        let mut fam = self.zero_family();
        for (a, m) in alg.quiver().arrows().iter().zip(self.maps()) {
            fam[a.target] = fam[a.target].sum(&m.image()).expect("ambient");
        }
        fam
    }

    /// `soc M`: at each vertex, the common kernel of the outgoing arrows.
    pub fn socle_family(&self) -> Family {
        let alg = self.algebra();
        let mut fam = self.full_family();
        for (a, m) in alg.quiver().arrows().iter().zip(self.maps()) {
            fam[a.source] = fam[a.source].intersect(&m.kernel()).expect("ambient");
        }
        fam
    }

    /// Dimension of `top M` at each vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_family().iter().zip(self.dims()).map(|(r, &d)| d - r.dim()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_family().iter().map(Subspace::dim).collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.maps().iter().all(Mat::is_zero)
    }

    pub fn dim_vector_string(&self) -> String {
        self.dims().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// A submodule with its inclusion.
#[derive(Clone, Debug)]
pub struct Sub {
    pub rep: Rep,
    pub incl: Morph,
}

/// A quotient module with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub rep: Rep,
    pub proj: Morph,
    pub sub: Family,
}

impl Quotient {
    /// Induced map `Q -> Y` from `h: M -> Y` vanishing on the submodule.
    pub fn descend(&self, h: &Morph) -> Result<Morph> {
        let m = self.proj.source();
        if h.source().dims() != m.dims() {
            return Err(Error::InvalidInput("descend: source mismatch".into()));
        }
        let mut mats = Vec::new();
        for (v, s) in self.sub.iter().enumerate() {
            for b in s.basis_vecs() {
                if !is_zero_vec(&h.mat(v).mul_vec(&b)) {
                    return Err(Error::InvalidInput("descend: map does not vanish on the submodule".into()));
                }
            }
            let cols = s.non_pivots().into_iter().map(|c| h.mat(v).col(c)).collect();
            mats.push(Mat::from_cols(h.target().dim_at(v), cols));
        }
        Ok(Morph::raw(self.rep.clone(), h.target().clone(), mats))
    }
}

/// A module homomorphism: one matrix per vertex, intertwining the arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morph {
    source: Rep,
    target: Rep,
    mats: Vec<Mat>,
}

impl Morph {
    pub fn new(source: &Rep, target: &Rep, mats: Vec<Mat>) -> Result<Morph> {
        source.same_algebra(target)?;
        if mats.len() != source.dims().len() {
            return Err(Error::InvalidInput("morphism needs one matrix per vertex".into()));
        }
        for (v, m) in mats.iter().enumerate() {
            if m.shape() != (target.dim_at(v), source.dim_at(v)) {
                return Err(Error::InvalidInput(format!("morphism matrix at vertex {v} has the wrong shape")));
            }
        }
        let f = Morph::raw(source.clone(), target.clone(), mats);
        if !f.intertwines() {
            return Err(Error::InvalidInput("matrices do not intertwine the arrow maps".into()));
        }
        Ok(f)
    }

    pub(crate) fn raw(source: Rep, target: Rep, mats: Vec<Mat>) -> Morph {
        Morph { source, target, mats }
    }

    pub fn identity(m: &Rep) -> Morph {
        Morph::raw(m.clone(), m.clone(), m.dims().iter().map(|&d| Mat::identity(d)).collect())
    }

    pub fn zero(m: &Rep, n: &Rep) -> Morph {
        Morph::raw(m.clone(), n.clone(), m.dims().iter().zip(n.dims()).map(|(&a, &b)| Mat::zeros(b, a)).collect())
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn mat(&self, v: usize) -> &Mat {
        &self.mats[v]
    }

    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    /// Checks `target_a * f_u == f_v * source_a` for every arrow.
    pub fn intertwines(&self) -> bool {
        let alg = self.source.algebra();
        alg.quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(i, a)| self.target.map(i) * &self.mats[a.source] == &self.mats[a.target] * self.source.map(i))
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morph) -> Morph {
        assert_eq!(f.target.dims(), self.source.dims(), "composition shape mismatch");
        let mats = self.mats.iter().zip(&f.mats).map(|(g, f)| g * f).collect();
        Morph::raw(f.source.clone(), self.target.clone(), mats)
    }

    pub fn add(&self, other: &Morph) -> Morph {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a + b).collect();
        Morph::raw(self.source.clone(), self.target.clone(), mats)
    }

    pub fn sub(&self, other: &Morph) -> Morph {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a - b).collect();
        Morph::raw(self.source.clone(), self.target.clone(), mats)
    }

    pub fn scale(&self, c: &Rat) -> Morph {
        Morph::raw(self.source.clone(), self.target.clone(), self.mats.iter().map(|m| m.scale(c)).collect())
    }

    /// Replaces the recorded source/target by structurally equal modules.
    pub fn retarget(&self, source: &Rep, target: &Rep) -> Morph {
        assert_eq!(source.dims(), self.source.dims());
        assert_eq!(target.dims(), self.target.dims());
        Morph::raw(source.clone(), target.clone(), self.mats.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Mat::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.mats.iter().all(Mat::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morph> {
        let mats = self.mats.iter().map(Mat::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morph::raw(self.target.clone(), self.source.clone(), mats))
    }

    pub fn image_family(&self) -> Family {
        self.mats.iter().map(Mat::image).collect()
    }

    pub fn kernel_family(&self) -> Family {
        self.mats.iter().map(Mat::kernel).collect()
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(Mat::rank).sum()
    }

    /// Vertex blocks concatenated, each block row-major.
    pub fn flatten(&self) -> Vec<Rat> {
        self.mats.iter().flat_map(|m| m.data().iter().cloned()).collect()
    }

    pub fn from_flat(source: &Rep, target: &Rep, v: &[Rat]) -> Morph {
        let mut mats = Vec::new();
        let mut off = 0;
        for (&s, &t) in source.dims().iter().zip(target.dims()) {
            mats.push(Mat::from_vec(t, s, v[off..off + s * t].to_vec()));
            off += s * t;
        }
        Morph::raw(source.clone(), target.clone(), mats)
    }

    pub fn dual(&self) -> Morph {
        Morph::raw(self.target.dual(), self.source.dual(), self.mats.iter().map(Mat::transpose).collect())
    }

    /// The unique `g` with `mono ∘ g = self`, when `self` lands in the image of `mono`.
    pub fn factor_through_mono(&self, mono: &Morph) -> Option<Morph> {
        let mut mats = Vec::new();
        for v in 0..self.mats.len() {
            let (f, m) = (&self.mats[v], &mono.mats[v]);
            let mut cols = Vec::new();
            for c in 0..f.cols() {
                cols.push(m.solve(&f.col(c))?);
            }
            mats.push(Mat::from_cols(m.cols(), cols));
        }
        Some(Morph::raw(self.source.clone(), mono.source.clone(), mats))
    }

    /// `[f_1 ... f_n] : X_1 ⊕ ... ⊕ X_n -> Y`.
    pub fn hcat(target: &Rep, comps: &[Morph]) -> Morph {
        let sum = DirectSum::new(target.algebra(), comps.iter().map(|f| f.source.clone()).collect());
        let mats = (0..target.dims().len())
            .map(|v| comps.iter().fold(Mat::zeros(target.dim_at(v), 0), |acc, f| acc.hstack(&f.mats[v])))
            .collect();
        Morph::raw(sum.rep, target.clone(), mats)
    }

    /// `[f_1; ...; f_n] : X -> Y_1 ⊕ ... ⊕ Y_n`.
    pub fn vcat(source: &Rep, comps: &[Morph]) -> Morph {
        let sum = DirectSum::new(source.algebra(), comps.iter().map(|f| f.target.clone()).collect());
        let mats = (0..source.dims().len())
            .map(|v| comps.iter().fold(Mat::zeros(0, source.dim_at(v)), |acc, f| acc.vstack(&f.mats[v])))
            .collect();
        Morph::raw(source.clone(), sum.rep, mats)
    }

    /// `f_1 ⊕ ... ⊕ f_n`.
    pub fn diag(alg: &Algebra, comps: &[Morph]) -> Morph {
        let src = DirectSum::new(alg, comps.iter().map(|f| f.source.clone()).collect());
        let dst = DirectSum::new(alg, comps.iter().map(|f| f.target.clone()).collect());
        let mats = (0..alg.vertex_count())
            .map(|v| Mat::block_diag(&comps.iter().map(|f| f.mats[v].clone()).collect::<Vec<_>>()))
            .collect();
        Morph::raw(src.rep, dst.rep, mats)
    }
}

/// `X_1 ⊕ ... ⊕ X_n` with its canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub rep: Rep,
    pub summands: Vec<Rep>,
    pub inj: Vec<Morph>,
    pub proj: Vec<Morph>,
}

impl DirectSum {
    pub fn new(alg: &Algebra, summands: Vec<Rep>) -> DirectSum {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| summands.iter().map(|s| s.dim_at(v)).sum()).collect();
        let maps = (0..alg.arrow_count())
            .map(|a| Mat::block_diag(&summands.iter().map(|s| s.map(a).clone()).collect::<Vec<_>>()))
            .collect();
        let rep = Rep::raw(alg.clone(), dims.clone(), maps);
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut offs = vec![0; n];
        for s in &summands {
            let mut im = Vec::new();
            let mut pm = Vec::new();
            for v in 0..n {
                let mut i = Mat::zeros(dims[v], s.dim_at(v));
                let mut p = Mat::zeros(s.dim_at(v), dims[v]);
                for k in 0..s.dim_at(v) {
                    i[(offs[v] + k, k)] = Rat::one();
                    p[(k, offs[v] + k)] = Rat::one();
                }
                offs[v] += s.dim_at(v);
                im.push(i);
                pm.push(p);
            }
            inj.push(Morph::raw(s.clone(), rep.clone(), im));
            proj.push(Morph::raw(rep.clone(), s.clone(), pm));
        }
        DirectSum { rep, summands, inj, proj }
    }
}

/// A basis of `Hom(M, N)`: the canonical kernel basis of the intertwining system.
#[derive(Clone, Debug)]
pub struct HomBasis {
    source: Rep,
    target: Rep,
    space: Subspace,
    basis: Vec<Morph>,
}

impl HomBasis {
    pub fn new(m: &Rep, n: &Rep) -> Result<HomBasis> {
        m.same_algebra(n)?;
        let alg = m.algebra();
        let nv = alg.vertex_count();
        let mut offs = vec![0; nv + 1];
        for v in 0..nv {
            offs[v + 1] = offs[v] + n.dim_at(v) * m.dim_at(v);
        }
        let unknowns = offs[nv];
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (i, a) in alg.quiver().arrows().iter().enumerate() {
            let (u, v) = (a.source, a.target);
            let (na, ma) = (n.map(i), m.map(i));
            let (mu, mv, nu, nvv) = (m.dim_at(u), m.dim_at(v), n.dim_at(u), n.dim_at(v));
            // N_a F_u - F_v M_a = 0, entry (r, c) with r < dim N_v, c < dim M_u.
            for r in 0..nvv {
                for c in 0..mu {
                    let mut row = vec![Rat::zero(); unknowns];
                    for k in 0..nu {
                        let x = &na[(r, k)];
                        if !x.is_zero() {
                            row[offs[u] + k * mu + c] += x;
                        }
                    }
                    for k in 0..mv {
                        let x = &ma[(k, c)];
                        if !x.is_zero() {
                            row[offs[v] + r * mv + k] -= x;
                        }
                    }
                    if !is_zero_vec(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        let space = Mat::from_rows(unknowns, rows).kernel();
        let basis = space.basis_vecs().iter().map(|v| Morph::from_flat(m, n, v)).collect();
        Ok(HomBasis { source: m.clone(), target: n.clone(), space, basis })
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morph] {
        &self.basis
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn coords(&self, f: &Morph) -> Option<Vec<Rat>> {
        self.space.coords(&f.flatten())
    }

    /// Coordinates of a morphism known to be a homomorphism `source -> target`.
    pub fn coords_unchecked(&self, f: &Morph) -> Vec<Rat> {
        self.space.coords_unchecked(&f.flatten())
    }

    pub fn combine(&self, coeffs: &[Rat]) -> Morph {
        Morph::from_flat(&self.source, &self.target, &self.space.combine(coeffs))
    }
}

pub fn hom_basis(m: &Rep, n: &Rep) -> Result<HomBasis> {
    HomBasis::new(m, n)
}

/// Some `h: M -> Y` with `g ∘ h = f`, for `f: M -> X` and `g: Y -> X`.
pub fn lift_through_epi(f: &Morph, g: &Morph) -> Option<Morph> {
    let hb = hom_basis(f.source(), g.source()).ok()?;
    let cols = hb.basis().iter().map(|h| g.after(h).flatten()).collect();
    let a = Mat::from_cols(f.flatten().len(), cols);
    let c = a.solve(&f.flatten())?;
    Some(hb.combine(&c))
}

/// Some `h: Y -> X` with `h ∘ g = f`, for `f: M -> X` and `g: M -> Y`.
pub fn extend_through_mono(f: &Morph, g: &Morph) -> Option<Morph> {
    let hb = hom_basis(g.target(), f.target()).ok()?;
    let cols = hb.basis().iter().map(|h| h.after(g).flatten()).collect();
    let a = Mat::from_cols(f.flatten().len(), cols);
    let c = a.solve(&f.flatten())?;
    Some(hb.combine(&c))
}

/// Kernel, image and cokernel of a morphism.
#[derive(Clone, Debug)]
pub struct KernelImageCokernel {
    pub kernel: Sub,
    pub image: Sub,
    pub cokernel: Quotient,
}

pub fn kernel_image_cokernel(f: &Morph) -> KernelImageCokernel {
    let kernel = f.source().submodule(&f.kernel_family()).expect("kernel is a submodule");
    let image = f.target().submodule(&f.image_family()).expect("image is a submodule");
    let cokernel = f.target().quotient(&f.image_family()).expect("image is a submodule");
    KernelImageCokernel { kernel, image, cokernel }
}

/// `rad M` (with inclusion), `top M` (with projection) and `soc M` (with inclusion).
#[derive(Clone, Debug)]
pub struct RadicalTopSocle {
    pub radical: Sub,
    pub top: Quotient,
    pub socle: Sub,
}

pub fn radical_top_socle(m: &Rep) -> RadicalTopSocle {
    let rad = m.radical_family();
    RadicalTopSocle {
        radical: m.submodule(&rad).expect("radical is a submodule"),
        top: m.quotient(&rad).expect("radical is a submodule"),
        socle: m.submodule(&m.socle_family()).expect("socle is a submodule"),
    }
}

/// The homomorphism `P(v) -> target` sending the trivial path `e_v` to `elem`.
pub fn hom_from_projective(pv: &Rep, v: usize, target: &Rep, elem: &[Rat]) -> Morph {
    let alg = pv.algebra();
    let mats = (0..alg.vertex_count())
        .map(|u| {
            let cols =
                alg.pair_basis(v, u).iter().map(|&g| target.path_matrix(alg.basis_path(g)).mul_vec(elem)).collect();
            Mat::from_cols(target.dim_at(u), cols)
        })
        .collect();
    Morph::raw(pv.clone(), target.clone(), mats)
}

/// A projective cover `P -> M`; `tops[k]` is the vertex of the `k`-th summand of `P`.
#[derive(Clone, Debug)]
pub struct ProjCover {
    pub proj: Rep,
    pub epi: Morph,
    pub tops: Vec<usize>,
}

pub fn projective_cover(m: &Rep) -> ProjCover {
    let alg = m.algebra();
    let rad = m.radical_family();
    let mut tops = Vec::new();
    let mut comps = Vec::new();
    for v in 0..alg.vertex_count() {
        let pv = Rep::projective(alg, v);
        for c in rad[v].non_pivots() {
            tops.push(v);
            comps.push(hom_from_projective(&pv, v, m, &crate::linalg::unit_vec(m.dim_at(v), c)));
        }
    }
    let epi = Morph::hcat(m, &comps);
    ProjCover { proj: epi.source().clone(), epi, tops }
}

/// An injective envelope `M -> I`; `socles[k]` is the vertex of the `k`-th summand of `I`.
#[derive(Clone, Debug)]
pub struct InjEnvelope {
    pub inj: Rep,
    pub mono: Morph,
    pub socles: Vec<usize>,
}

pub fn injective_envelope(m: &Rep) -> InjEnvelope {
    let cover = projective_cover(&m.dual());
    let mono = cover.epi.dual();
    let mono = mono.retarget(m, mono.target());
    InjEnvelope { inj: mono.target().clone(), mono, socles: cover.tops }
}

/// Offsets of summand blocks inside `⊕ P(tops[k])` at each vertex.
pub fn projective_offsets(alg: &Algebra, tops: &[usize]) -> Vec<Vec<usize>> {
    let n = alg.vertex_count();
    let mut offs = vec![vec![0; n]; tops.len() + 1];
    for (k, &t) in tops.iter().enumerate() {
        for u in 0..n {
            offs[k + 1][u] = offs[k][u] + alg.pair_dim(t, u);
        }
    }
    offs
}
