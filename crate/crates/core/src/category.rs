//! Finite lists of pairwise non-isomorphic indecomposables with Hom tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::decompose::{is_isomorphic_indec, EndAlgebra};
use crate::linalg::Subspace;
use crate::rep::{hom_basis, HomBasis, Morph, Rep};

#[derive(Clone, Debug)]
pub struct IndexedCategory {
    alg: Algebra,
    objects: Vec<Rep>,
    names: Vec<String>,
    homs: Vec<Vec<Arc<HomBasis>>>,
    end_rads: Vec<Arc<Subspace>>,
    full: bool,
    cotest: Option<Arc<Vec<Rep>>>,
}

/// Dimension-vector names, with `#k` appended when several objects share one.
pub fn default_names(objects: &[Rep]) -> Vec<String> {
    let mut count: BTreeMap<String, usize> = BTreeMap::new();
    for m in objects {
        *count.entry(m.dim_vector_string()).or_default() += 1;
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    objects
        .iter()
        .map(|m| {
            let dv = m.dim_vector_string();
            if count[&dv] == 1 {
                format!("[{dv}]")
            } else {
                let k = seen.entry(dv.clone()).or_default();
                *k += 1;
                format!("[{dv}]#{k}")
            }
        })
        .collect()
}

impl IndexedCategory {
    /// The caller guarantees the objects are indecomposable and pairwise
    /// non-isomorphic.
    pub fn new(alg: &Algebra, objects: Vec<Rep>, names: Vec<String>, full: bool) -> IndexedCategory {
        assert_eq!(objects.len(), names.len());
        let homs: Vec<Vec<Arc<HomBasis>>> = objects
            .iter()
            .map(|x| objects.iter().map(|y| Arc::new(hom_basis(x, y).expect("same algebra"))).collect())
            .collect();
        let end_rads =
            (0..objects.len()).map(|i| Arc::new(EndAlgebra::from_hom((*homs[i][i]).clone()).radical())).collect();
        IndexedCategory { alg: alg.clone(), objects, names, homs, end_rads, full, cotest: None }
    }

    /// Builds a category from arbitrary modules, keeping one representative
    /// per isomorphism class of indecomposable summands.
    pub fn from_modules(alg: &Algebra, modules: &[Rep]) -> IndexedCategory {
        let mut objects: Vec<Rep> = Vec::new();
        for m in modules {
            for s in crate::decompose::decompose(m).summands {
                if !objects.iter().any(|x| is_isomorphic_indec(x, &s.module).is_some()) {
                    objects.push(s.module);
                }
            }
        }
        let names = default_names(&objects);
        IndexedCategory::new(alg, objects, names, false)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// True when the objects are all indecomposables of `mod A`.
    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn object(&self, i: usize) -> &Rep {
        &self.objects[i]
    }

    pub fn objects(&self) -> &[Rep] {
        &self.objects
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomBasis {
        &self.homs[i][j]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `rad(X_i, X_j)` in coordinates of `hom(i, j)`: everything when
    /// `i != j`, the radical of the local ring `End(X_i)` otherwise.
    pub fn rad_basis(&self, i: usize, j: usize) -> Subspace {
        if i == j {
            (*self.end_rads[i]).clone()
        } else {
            Subspace::full(self.homs[i][j].dim())
        }
    }

    /// Radical morphisms `X_i -> X_j` as a list of basis maps.
    pub fn rad_morphisms(&self, i: usize, j: usize) -> Vec<Morph> {
        let h = &self.homs[i][j];
        self.rad_basis(i, j).basis_vecs().iter().map(|c| h.combine(c)).collect()
    }

    /// The object isomorphic to the indecomposable `m`, with an isomorphism `m -> X_i`.
    pub fn find(&self, m: &Rep) -> Option<(usize, Morph)> {
        self.objects.iter().enumerate().find_map(|(i, x)| is_isomorphic_indec(m, x).map(|f| (i, f)))
    }

    /// The full subcategory on `keep`, in the given order.
    pub fn subcategory(&self, keep: &[usize]) -> IndexedCategory {
        IndexedCategory {
            alg: self.alg.clone(),
            objects: keep.iter().map(|&i| self.objects[i].clone()).collect(),
            names: keep.iter().map(|&i| self.names[i].clone()).collect(),
            homs: keep.iter().map(|&i| keep.iter().map(|&j| self.homs[i][j].clone()).collect()).collect(),
            end_rads: keep.iter().map(|&i| self.end_rads[i].clone()).collect(),
            full: self.full && keep.len() == self.len(),
            cotest: self.cotest.clone(),
        }
    }

    /// The subcategory of objects outside `removed`, with the kept indices.
    pub fn restrict(&self, removed: &[usize]) -> (IndexedCategory, Vec<usize>) {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !removed.contains(i)).collect();
        (self.subcategory(&keep), keep)
    }

    /// Restricts the monos that count: `f: X -> Y` is admissible only when
    /// every map from `X` to a test object extends along `f`. With the
    /// costandard modules as tests this says `coker f ∈ F(Δ)`.
    pub fn with_cotest(mut self, tests: Vec<Rep>) -> IndexedCategory {
        self.cotest = Some(Arc::new(tests));
        self
    }

    pub fn cotest(&self) -> Option<&[Rep]> {
        self.cotest.as_deref().map(Vec::as_slice)
    }

    /// Total codimension, over the test objects `N`, of the maps `X -> N`
    /// that factor through one of `maps` (all with source `x`).
    pub fn extension_deficit(&self, x: &Rep, maps: &[Morph]) -> usize {
        let Some(tests) = self.cotest() else {
            return 0;
        };
        let mut deficit = 0;
        for n in tests {
            let hb = hom_basis(x, n).expect("same algebra");
            let mut gens = Vec::new();
            for g in maps {
                for h in hom_basis(g.target(), n).expect("same algebra").basis() {
                    gens.push(hb.coords_unchecked(&h.after(g)));
                }
            }
            deficit += hb.dim() - Subspace::from_spanning(hb.dim(), gens).dim();
        }
        deficit
    }

    pub fn with_names(mut self, names: Vec<String>) -> IndexedCategory {
        assert_eq!(names.len(), self.objects.len());
        self.names = names;
        self
    }
}
