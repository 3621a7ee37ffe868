//! Dense exact linear algebra over the rationals.
//!
//! Vectors are plain `Vec<Rat>`; matrices are row-major [`Mat`]; subspaces are
//! kept in canonical reduced row-echelon form so that equality is syntactic.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = zero_vec(n);
    v[i] = Rat::one();
    v
}

/// Integer numerators over a common denominator.
pub fn integral<'a>(xs: impl Iterator<Item = &'a Rat> + Clone) -> (Vec<BigInt>, BigInt) {
    let d = xs.clone().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    (xs.map(|x| x.numer() * (&d / x.denom())).collect(), d)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += c * x`
pub fn axpy(y: &mut [Rat], c: &Rat, x: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Mat { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed to shape empty inputs.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Mat { rows: n, cols, data }
    }

    pub fn from_cols(rows: usize, cols: Vec<Vec<Rat>>) -> Self {
        let c = cols.len();
        let mut m = Mat::zeros(rows, c);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn data(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Rat> {
        self.data
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "mul_vec shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Mat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(Mat::rows).sum();
        let cols = blocks.iter().map(Mat::cols).sum();
        let mut m = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        m
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Fraction-free Gauss-Jordan on rows cleared of denominators: every
    /// division is exact and intermediate entries stay minors of the input.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigInt>> = (0..rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let best = (pr..rows)
                .filter(|&r| !a[r][c].is_zero())
                .min_by_key(|&r| (a[r][c].bits(), a[r].iter().filter(|x| !x.is_zero()).count()));
            let Some(p) = best else {
                continue;
            };
            a.swap(pr, p);
            let (head, tail) = a.split_at_mut(pr);
            let (prow, tail) = tail.split_first_mut().expect("pivot row");
            let piv = prow[c].clone();
            for row in head.iter_mut().chain(tail.iter_mut()) {
                let f = std::mem::take(&mut row[c]);
                for (k, x) in row.iter_mut().enumerate() {
                    if k == c {
                        continue;
                    }
                    let pk = &prow[k];
                    if f.is_zero() || pk.is_zero() {
                        if !x.is_zero() {
                            *x = &*x * &piv / &prev;
                        }
                    } else {
                        *x = (&*x * &piv - &f * pk) / &prev;
                    }
                }
            }
            prev = piv;
            pivots.push(c);
            pr += 1;
        }
        for (i, row) in a.into_iter().enumerate() {
            let piv = pivots.get(i).map(|&c| row[c].clone());
            for (k, x) in row.into_iter().enumerate() {
                self.data[i * cols + k] = match &piv {
                    Some(p) if !x.is_zero() => Rat::new(x, p.clone()),
                    _ => Rat::zero(),
                };
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut gens = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = unit_vec(self.cols, f);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            gens.push(v);
        }
        Subspace::from_spanning(self.cols, gens)
    }

    /// Column space as a subspace of `rows`-space.
    pub fn image(&self) -> Subspace {
        Subspace::from_spanning(self.rows, (0..self.cols).map(|c| self.col(c)).collect())
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "solve: rhs length mismatch");
        let aug = self.hstack(&Mat::from_cols(self.rows, vec![b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Mat::zeros(0, 0));
        }
        let (r, pivots) = self.hstack(&Mat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        // integer dot products over common row/column denominators, one reduction per entry
        let left: Vec<(Vec<BigInt>, BigInt)> = (0..self.rows).map(|i| integral(self.row(i).iter())).collect();
        let right: Vec<(Vec<BigInt>, BigInt)> =
            (0..rhs.cols).map(|j| integral((0..rhs.rows).map(|k| &rhs[(k, j)]))).collect();
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for (i, (a, da)) in left.iter().enumerate() {
            for (j, (b, db)) in right.iter().enumerate() {
                let mut acc = BigInt::zero();
                for (x, y) in a.iter().zip(b) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                if !acc.is_zero() {
                    out.data[i * rhs.cols + j] = Rat::new(acc, da * db);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

/// A linear subspace of `ambient`-space with a canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient, self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Mat::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_spanning(ambient: usize, gens: Vec<Vec<Rat>>) -> Self {
        let gens: Vec<Vec<Rat>> = gens.into_iter().filter(|g| !is_zero_vec(g)).collect();
        if gens.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = Mat::from_rows(ambient, gens).rref();
        let basis = r.block(0, 0, pivots.len(), ambient);
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in canonical order.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; their unit vectors span a canonical complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Residual of `v` after clearing every pivot coordinate against the basis.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "reduce: ambient mismatch");
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let c = -w[p].clone();
                axpy(&mut w, &c, self.basis.row(i));
            }
        }
        w
    }

    pub fn contains_vec(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of a vector known to lie in the subspace (unchecked).
    pub fn coords_unchecked(&self, v: &[Rat]) -> Vec<Rat> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[Rat]) -> Vec<Rat> {
        assert_eq!(coeffs.len(), self.dim(), "combine: coefficient count mismatch");
        let mut v = zero_vec(self.ambient);
        for (i, c) in coeffs.iter().enumerate() {
            axpy(&mut v, c, self.basis.row(i));
        }
        v
    }

    /// Image of `v` in the quotient by this subspace, in canonical complement coordinates.
    pub fn quotient_coords(&self, v: &[Rat]) -> Vec<Rat> {
        let w = self.reduce(v);
        self.non_pivots().into_iter().map(|c| w[c].clone()).collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut gens = self.basis_vecs();
        gens.extend(other.basis_vecs());
        Ok(Subspace::from_spanning(self.ambient, gens))
    }

    /// Vectors orthogonal (under the standard pairing) to the whole subspace.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let constraints = self.annihilator().basis().vstack(other.annihilator().basis());
        Ok(constraints.kernel())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis_vecs().iter().all(|v| self.contains_vec(v)))
    }

    /// Image of the subspace under the linear map `m` (acting on column vectors).
    pub fn map(&self, m: &Mat) -> Subspace {
        Subspace::from_spanning(m.rows(), self.basis_vecs().iter().map(|v| m.mul_vec(v)).collect())
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_columns(&self) -> Mat {
        self.basis.transpose()
    }
}

/// Stable text rendering of a rational (used in reports).
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else if x.is_negative() {
        format!("-{}/{}", x.numer().abs(), x.denom())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    /// Textbook rational elimination, for comparison.
    fn naive_rref(m: &Mat) -> Mat {
        let mut m = m.clone();
        let mut pr = 0;
        for c in 0..m.cols() {
            let Some(p) = (pr..m.rows()).find(|&r| !m[(r, c)].is_zero()) else {
                continue;
            };
            for k in 0..m.cols() {
                let (x, y) = (m[(pr, k)].clone(), m[(p, k)].clone());
                m[(pr, k)] = y;
                m[(p, k)] = x;
            }
            let inv = m[(pr, c)].recip();
            for k in 0..m.cols() {
                m[(pr, k)] = &m[(pr, k)] * &inv;
            }
            for r in (0..m.rows()).filter(|&r| r != pr) {
                let f = m[(r, c)].clone();
                for k in 0..m.cols() {
                    m[(r, k)] = &m[(r, k)] - &f * &m[(pr, k)];
                }
            }
            pr += 1;
            if pr == m.rows() {
                break;
            }
        }
        m
    }

    #[test]
    fn rref_matches_naive_elimination() {
        let mut seed = 7u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        for trial in 0..60 {
            let (rows, cols) = (1 + trial % 7, 1 + (trial / 3) % 8);
            let mut m = Mat::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if next() % 3 != 0 {
                        m[(r, c)] = ratio(next() % 19 - 9, 1 + next() % 5);
                    }
                }
            }
            if rows > 2 {
                // force a dependent row
                for c in 0..cols {
                    m[(rows - 1, c)] = &m[(0, c)] * rat(3) - &m[(1, c)];
                }
            }
            assert_eq!(m.rref().0, naive_rref(&m), "{m:?}");
        }
    }

    #[test]
    fn rref_of_dependent_rows() {
        let (r, p) = Mat::from_i64(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Mat::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, p) = Mat::identity(3).rref();
        assert_eq!(r, Mat::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = Mat::zeros(2, 2).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = Mat::from_i64(&[&[1, 2]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vec(&v(&[-2, 1])));
        assert_eq!(Mat::identity(3).kernel().dim(), 0);
        assert!(Mat::zeros(2, 3).kernel().is_full());
    }

    #[test]
    fn solve_examples() {
        assert_eq!(Mat::identity(2).solve(&v(&[3, 5])), Some(v(&[3, 5])));
        let a = Mat::from_i64(&[&[1, 1]]);
        let x = a.solve(&v(&[2])).unwrap();
        assert_eq!(a.mul_vec(&x), v(&[2]));
        assert_eq!(Mat::from_i64(&[&[1], &[1]]).solve(&v(&[0, 1])), None);
    }

    #[test]
    fn subspace_examples() {
        let e1 = Subspace::from_spanning(2, vec![v(&[1, 0])]);
        let e2 = Subspace::from_spanning(2, vec![v(&[0, 1])]);
        let d = Subspace::from_spanning(2, vec![v(&[1, 1])]);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert!(e1.intersect(&d).unwrap().is_zero());
        let plane = Subspace::from_spanning(2, vec![v(&[1, 0]), v(&[0, 1])]);
        assert!(plane.contains(&d).unwrap());
        assert!(matches!(e1.sum(&Subspace::zero(3)), Err(Error::AmbientMismatch { left: 2, right: 3 })));
    }

    #[test]
    fn inverse_and_quotient() {
        let m = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
        assert!(Mat::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let line = Subspace::from_spanning(2, vec![v(&[1, 1])]);
        assert_eq!(line.quotient_coords(&v(&[1, 1])), v(&[0]));
        assert_eq!(line.quotient_coords(&v(&[0, 1])), v(&[1]));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rat(&ratio(-1, 2)), "-1/2");
        assert_eq!(fmt_rat(&rat(3)), "3");
    }
}
