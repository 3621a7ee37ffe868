//! Bound quiver algebras `A = kQ/I` over the rationals.
//!
//! Modules are right modules, presented as representations: a space `M_u`
//! per vertex and, for each arrow `a: u -> v`, a map `M_a: M_u -> M_v`. A path
//! acts by composing its arrow maps in traversal order, so `P(v)` has the
//! paths `v ~> u` as basis of its component at `u`.
//!
//! Relations must be homogeneous (all terms of one relation have the same
//! length). The path basis is then computed degree by degree: the degree
//! `l` part of `A` is spanned by the products `b * a` of degree `l - 1` basis
//! paths with arrows, modulo the degree `l` relation elements `u * r`. The
//! largest candidates in degree-lexicographic order are eliminated first, so
//! the surviving basis is deterministic.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Rat};

pub const DEFAULT_MAX_LEN: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Validation(format!("duplicate vertex name '{v}'")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Validation(format!("duplicate arrow name '{}'", a.name)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Validation(format!("arrow '{}' has a missing endpoint", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from `(name, source, target)` triples of names.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let find =
            |n: &str| vs.iter().position(|v| v == n).ok_or_else(|| Error::Validation(format!("unknown vertex '{n}'")));
        let mut arr = Vec::new();
        for (name, s, t) in arrows {
            arr.push(Arrow { name: name.to_string(), source: find(s)?, target: find(t)? });
        }
        Quiver::new(vs, arr)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A path, arrows listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Validation("empty arrow list needs an explicit vertex".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::Validation(format!(
                    "arrows '{}' and '{}' do not compose",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { source: q.arrow(first).source, target: q.arrow(last).target, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn reversed(&self) -> Path {
        Path { source: self.target, target: self.source, arrows: self.arrows.iter().rev().copied().collect() }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices()[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A linear combination of parallel paths of one common length >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Rat, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Rat, Path)>) -> Result<Self> {
        let terms: Vec<(Rat, Path)> = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
        let Some((_, first)) = terms.first() else {
            return Err(Error::Validation("relation has no nonzero coefficient".into()));
        };
        let (s, t, l) = (first.source, first.target, first.len());
        for (_, p) in &terms {
            if p.source != s || p.target != t {
                return Err(Error::Validation("relation paths are not parallel".into()));
            }
            if p.len() < 2 {
                return Err(Error::Validation("relation paths must have length at least 2".into()));
            }
            if p.len() != l {
                return Err(Error::Validation("relation is not homogeneous".into()));
            }
        }
        Ok(Relation { terms })
    }

    pub fn monomial(path: Path) -> Result<Self> {
        Relation::new(vec![(Rat::one(), path)])
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn len(&self) -> usize {
        self.terms[0].1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect() }
    }
}

/// Sparse vector over global basis-path indices.
pub type Elem = Vec<(usize, Rat)>;

/// Path basis and multiplication data for one orientation of the quiver.
#[derive(Debug)]
struct Side {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    /// `pair[u][v]`: global indices of basis paths `u ~> v`, ordered.
    pair: Vec<Vec<Vec<usize>>>,
    local: Vec<usize>,
    /// Normal form of `basis[b] * arrow`, for every composable pair.
    step: HashMap<(usize, usize), Elem>,
    nilpotency_bound: usize,
}

impl Side {
    fn build(quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Side> {
        let n = quiver.vertex_count();
        let mut basis: Vec<Path> = (0..n).map(Path::trivial).collect();
        let mut by_len: Vec<Vec<usize>> = vec![(0..n).collect()];
        let mut step: HashMap<(usize, usize), Elem> = HashMap::new();
        let mut len = 1;
        let nilpotency_bound = loop {
            let prev = &by_len[len - 1];
            let mut cands: Vec<(usize, usize, Vec<usize>)> = Vec::new();
            for &b in prev {
                for (ai, a) in quiver.arrows().iter().enumerate() {
                    if a.source == basis[b].target {
                        let mut arrows = basis[b].arrows.clone();
                        arrows.push(ai);
                        cands.push((b, ai, arrows));
                    }
                }
            }
            // Descending degree-lex order so RREF pivots fall on the largest paths.
            cands.sort_by(|x, y| y.2.cmp(&x.2));
            let cand_index: HashMap<(usize, usize), usize> =
                cands.iter().enumerate().map(|(i, c)| ((c.0, c.1), i)).collect();

            let mut rows: Vec<Vec<Rat>> = Vec::new();
            for r in relations.iter().filter(|r| r.len() <= len) {
                for &u in &by_len[len - r.len()] {
                    if basis[u].target != r.source() {
                        continue;
                    }
                    let mut row = vec![Rat::zero(); cands.len()];
                    for (c, p) in &r.terms {
                        let mut prefix: Elem = vec![(u, Rat::one())];
                        for &a in &p.arrows[..p.len() - 1] {
                            prefix = mul_arrow(&step, &prefix, a);
                        }
                        let last = *p.arrows.last().unwrap();
                        for (b, x) in prefix {
                            let ci = cand_index[&(b, last)];
                            row[ci] += c * &x;
                        }
                    }
                    rows.push(row);
                }
            }
            let (rref, pivots) = Mat::from_rows(cands.len(), rows).rref();
            let mut is_pivot = vec![false; cands.len()];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            // Surviving candidates become basis paths, in ascending order.
            let mut new_index = vec![usize::MAX; cands.len()];
            let mut survivors: Vec<usize> = (0..cands.len()).filter(|&i| !is_pivot[i]).collect();
            survivors.reverse();
            let mut level = Vec::new();
            for &ci in &survivors {
                let (_, _, arrows) = &cands[ci];
                let a0 = quiver.arrow(arrows[0]);
                let a1 = quiver.arrow(*arrows.last().unwrap());
                new_index[ci] = basis.len();
                level.push(basis.len());
                basis.push(Path { source: a0.source, target: a1.target, arrows: arrows.clone() });
            }
            for (ci, (b, a, _)) in cands.iter().enumerate() {
                let nf = if is_pivot[ci] {
                    let row = pivots.iter().position(|&p| p == ci).unwrap();
                    (0..cands.len())
                        .filter(|&k| !is_pivot[k] && !rref[(row, k)].is_zero())
                        .map(|k| (new_index[k], -rref[(row, k)].clone()))
                        .collect()
                } else {
                    vec![(new_index[ci], Rat::one())]
                };
                step.insert((*b, *a), nf);
            }
            if level.is_empty() {
                break len - 1;
            }
            if len >= max_len {
                return Err(Error::NonAdmissible { max_len });
            }
            by_len.push(level);
            len += 1;
        };

        let mut pair = vec![vec![Vec::new(); n]; n];
        let mut local = vec![0; basis.len()];
        for (i, p) in basis.iter().enumerate() {
            local[i] = pair[p.source][p.target].len();
            pair[p.source][p.target].push(i);
        }
        Ok(Side { quiver, relations, basis, pair, local, step, nilpotency_bound })
    }
}

fn mul_arrow(step: &HashMap<(usize, usize), Elem>, x: &Elem, arrow: usize) -> Elem {
    let mut acc: HashMap<usize, Rat> = HashMap::new();
    for (b, c) in x {
        if let Some(nf) = step.get(&(*b, arrow)) {
            for (t, y) in nf {
                *acc.entry(*t).or_insert_with(Rat::zero) += c * y;
            }
        }
    }
    let mut out: Elem = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

#[derive(Debug)]
struct AlgebraData {
    name: String,
    sides: [Side; 2],
}

/// An admissible presentation `kQ/I`, together with its opposite.
///
/// Cloning is cheap; `opposite()` shares the same data with the orientation
/// flipped, so `a.opposite().opposite() == a`.
#[derive(Clone)]
pub struct Algebra {
    data: Arc<AlgebraData>,
    flipped: bool,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.flipped == other.flipped
            && (Arc::ptr_eq(&self.data, &other.data)
                || (self.data.name == other.data.name
                    && self.data.sides[0].quiver == other.data.sides[0].quiver
                    && self.data.sides[0].relations == other.data.sides[0].relations))
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}{}, dim {})", self.data.name, if self.flipped { "^op" } else { "" }, self.dim())
    }
}

impl Algebra {
    pub fn new(name: &str, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        Algebra::with_max_len(name, quiver, relations, DEFAULT_MAX_LEN)
    }

    /// Computes the path basis, failing with `NonAdmissible` if paths of
    /// length `max_len` still survive.
    pub fn with_max_len(name: &str, quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Self> {
        for r in &relations {
            for (_, p) in &r.terms {
                for &a in &p.arrows {
                    if a >= quiver.arrows().len() {
                        return Err(Error::Validation("relation uses an unknown arrow".into()));
                    }
                }
                Path::from_arrows(&quiver, p.arrows.clone())?;
            }
        }
        let op_quiver = quiver.opposite();
        let op_rel = relations.iter().map(Relation::reversed).collect();
        let this = Side::build(quiver, relations, max_len)?;
        let that = Side::build(op_quiver, op_rel, max_len)?;
        Ok(Algebra { data: Arc::new(AlgebraData { name: name.to_string(), sides: [this, that] }), flipped: false })
    }

    fn side(&self) -> &Side {
        &self.data.sides[self.flipped as usize]
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn is_opposite(&self) -> bool {
        self.flipped
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { data: self.data.clone(), flipped: !self.flipped }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.side().quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.side().relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver().vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver().arrows().len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.quiver().vertices()[v]
    }

    pub fn dim(&self) -> usize {
        self.side().basis.len()
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.side().nilpotency_bound
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.side().basis[i]
    }

    pub fn basis_paths(&self) -> &[Path] {
        &self.side().basis
    }

    /// Global indices of the basis paths `u ~> v`.
    pub fn pair_basis(&self, u: usize, v: usize) -> &[usize] {
        &self.side().pair[u][v]
    }

    pub fn pair_dim(&self, u: usize, v: usize) -> usize {
        self.side().pair[u][v].len()
    }

    /// Position of a basis path within its pair list.
    pub fn local_index(&self, global: usize) -> usize {
        self.side().local[global]
    }

    pub fn mul_arrow(&self, x: &Elem, arrow: usize) -> Elem {
        mul_arrow(&self.side().step, x, arrow)
    }

    /// Normal form of an arbitrary path, as a sparse combination of basis paths.
    pub fn path_elem(&self, p: &Path) -> Elem {
        let mut x: Elem = vec![(p.source, Rat::one())];
        for &a in &p.arrows {
            x = self.mul_arrow(&x, a);
        }
        x
    }

    /// Coordinates of a path in the ordered basis of paths `source ~> target`.
    pub fn path_coords(&self, p: &Path) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.pair_dim(p.source, p.target)];
        for (g, c) in self.path_elem(p) {
            v[self.local_index(g)] += c;
        }
        v
    }

    /// Matrix sending `u ~> v` basis coordinates of this algebra to the
    /// `v ~> u` basis coordinates of the opposite algebra (path reversal).
    pub fn reversal_matrix(&self, u: usize, v: usize) -> Mat {
        let op = self.opposite();
        let src = self.pair_basis(u, v);
        let mut m = Mat::zeros(op.pair_dim(v, u), src.len());
        for (j, &g) in src.iter().enumerate() {
            let col = op.path_coords(&self.basis_path(g).reversed());
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Evaluates a relation on arrow matrices (traversal order composition).
    pub fn eval_relation(&self, r: &Relation, maps: &[Mat], dims: &[usize]) -> Mat {
        let mut acc = Mat::zeros(dims[r.target()], dims[r.source()]);
        for (c, p) in &r.terms {
            let mut m = Mat::identity(dims[p.source]);
            for &a in &p.arrows {
                m = &maps[a] * &m;
            }
            acc = &acc + &m.scale(c);
        }
        acc
    }

    pub fn dim_vector_of_projective(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count()).map(|u| self.pair_dim(v, u)).collect()
    }

    pub fn describe_basis(&self) -> Vec<String> {
        self.basis_paths().iter().map(|p| p.display(self.quiver())).collect()
    }
}

/// Builds an element of `pair(u, v)` coordinates into a dense vector.
pub fn elem_to_local(alg: &Algebra, u: usize, v: usize, x: &Elem) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); alg.pair_dim(u, v)];
    for (g, c) in x {
        let p = alg.basis_path(*g);
        debug_assert!(p.source == u && p.target == v);
        out[alg.local_index(*g)] += c;
    }
    out
}
