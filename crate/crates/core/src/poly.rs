//! Univariate polynomials over the rationals, just enough for idempotent search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Rat;

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(Vec<Rat>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// `t - r`
    pub fn linear(r: &Rat) -> Poly {
        Poly::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> Poly {
        let l = self.lead();
        if l.is_zero() {
            return self.clone();
        }
        Poly::new(self.0.iter().map(|c| c / &l).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(vec![]);
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rat::zero);
        Poly::new((0..n).map(|i| get(self, i) - get(other, i)).collect())
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        let mut q = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        let lead = d.lead();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, x) in d.0.iter().enumerate() {
                r[k + i] -= &c * x;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic gcd `g` with `s*self + t*other = g`.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(Rat::one()), Poly::new(vec![]));
        let (mut t0, mut t1) = (Poly::new(vec![]), Poly::constant(Rat::one()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let l = r0.lead();
        if l.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Poly::constant(l.recip());
        (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(BigInt::from(i))).collect())
    }

    /// Distinct rational roots. Real roots of the square-free part are isolated
    /// with a Sturm sequence and narrowed until at most one fraction with a
    /// denominator dividing the leading coefficient fits; that fraction is tested.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let mut p = self.clone();
        if p.0[0].is_zero() {
            roots.push(Rat::zero());
            while p.0[0].is_zero() {
                p = Poly::new(p.0[1..].to_vec());
            }
        }
        if p.degree() == Some(0) {
            return roots;
        }
        let (g, _, _) = p.ext_gcd(&p.derivative());
        let q = p.divrem(&g).0.monic();
        if q.degree() == Some(1) {
            roots.push(-q.0[0].clone());
            return roots;
        }
        let lcm = q.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let den = Rat::from_integer(lcm);
        let eps = (den.clone() * den * Rat::from_integer(BigInt::from(2))).recip();
        let bound = q.0.iter().map(|c| c.abs()).max().unwrap() + Rat::one();
        let sturm = Sturm::new(&q);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            match sturm.count(&lo, &hi) {
                0 => {}
                1 => {
                    if let Some(r) = sturm.narrow(lo, hi, &eps) {
                        roots.push(r);
                    }
                }
                _ => {
                    let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        roots
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rat) -> usize {
        let lin = Poly::linear(r);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, rem) = p.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(Rat::one()), |acc, _| acc.mul(self))
    }
}

/// Sturm sequence of a square-free polynomial.
struct Sturm(Vec<Poly>);

impl Sturm {
    fn new(f: &Poly) -> Sturm {
        let mut seq = vec![f.clone(), f.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].divrem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(Poly::new(r.0.into_iter().map(|c| -c).collect()));
        }
        Sturm(seq)
    }

    fn variations(&self, x: &Rat) -> usize {
        let signs: Vec<bool> =
            self.0.iter().map(|p| p.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of roots in `(lo, hi]`.
    fn count(&self, lo: &Rat, hi: &Rat) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    /// Shrinks `(lo, hi]`, holding one root, below width `eps`; returns the root if rational.
    fn narrow(&self, mut lo: Rat, mut hi: Rat, eps: &Rat) -> Option<Rat> {
        let f = &self.0[0];
        let two = Rat::from_integer(BigInt::from(2));
        while &hi - &lo >= *eps {
            if f.eval(&hi).is_zero() {
                return Some(hi);
            }
            let mid = (&lo + &hi) / &two;
            if self.count(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let r = simplest_between(&lo, &hi);
        f.eval(&r).is_zero().then_some(r)
    }
}

/// The fraction with the smallest denominator in `[lo, hi]`.
fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    let up = &fl + Rat::one();
    if up <= *hi {
        return up;
    }
    fl + simplest_between(&(hi - lo.floor()).recip(), &(lo - lo.floor()).recip()).recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn p(xs: &[i64]) -> Poly {
        Poly::new(xs.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) = t^2 - 3t + 2
        let f = p(&[2, -3, 1]);
        let (q, r) = f.divrem(&p(&[-1, 1]));
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
        let (g, s, t) = p(&[-1, 1]).ext_gcd(&p(&[-2, 1]));
        assert_eq!(g, p(&[1]));
        assert_eq!(s.mul(&p(&[-1, 1])).sub(&t.mul(&p(&[-2, 1])).mul(&p(&[-1]))), p(&[1]));
    }

    #[test]
    fn rational_roots_found() {
        // (2t - 1)(t + 3) t^2 (t^2 + 1)
        let f = p(&[-1, 2]).mul(&p(&[3, 1])).mul(&p(&[0, 0, 1])).mul(&p(&[1, 0, 1]));
        let mut roots = f.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![rat(-3), rat(0), ratio(1, 2)]);
        assert_eq!(f.root_multiplicity(&rat(0)), 2);
        assert!(p(&[1, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn rational_roots_with_large_coefficients() {
        let big = ratio(123_456_789_012, 7_000_003);
        let f = Poly::linear(&big).mul(&Poly::linear(&ratio(-5, 3))).mul(&Poly::linear(&big)).mul(&p(&[-2, 0, 1]));
        let mut roots = f.rational_roots();
        roots.sort();
        assert_eq!(roots, vec![ratio(-5, 3), big]);
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(4, 10)), ratio(1, 3));
        assert_eq!(simplest_between(&ratio(-7, 2), &ratio(-3, 1)), rat(-3));
    }
}
