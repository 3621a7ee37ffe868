//! Powers of the radical of a finite indexed category, their stable value
//! `rad^∞`, depths of morphisms and the finite-type certificate.

use std::fmt;

use serde::Serialize;

use crate::ar::{enumerate_partial, Limits};
use crate::category::IndexedCategory;
use crate::decompose::decompose;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::rep::{injective_envelope, projective_cover, Morph, Rep};

pub const DEFAULT_MAX_POWER: usize = 64;

/// Subspaces `rad^n(X_i, X_j)` in coordinates of the category's Hom bases.
pub type PairTable = Vec<Vec<Subspace>>;

#[derive(Clone, Debug)]
pub struct RadTable {
    cat: IndexedCategory,
    /// `powers[n - 1]` is the table of `rad^n`.
    powers: Vec<PairTable>,
    /// Smallest `n` with `rad^n = rad^{n+1}` on every pair, if reached.
    stable: Option<usize>,
    max_power: usize,
}

/// Span of `{g ∘ f : f ∈ left(i,k), g ∈ right(k,j)}` summed over `k`.
pub fn compose_tables(cat: &IndexedCategory, left: &PairTable, right: &PairTable) -> PairTable {
    let n = cat.len();
    let morphs = |t: &PairTable, i: usize, j: usize| -> Vec<Morph> {
        t[i][j].basis_vecs().iter().map(|c| cat.hom(i, j).combine(c)).collect()
    };
    let lm: Vec<Vec<Vec<Morph>>> = (0..n).map(|i| (0..n).map(|k| morphs(left, i, k)).collect()).collect();
    let rm: Vec<Vec<Vec<Morph>>> = (0..n).map(|k| (0..n).map(|j| morphs(right, k, j)).collect()).collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let h = cat.hom(i, j);
                    let mut gens = Vec::new();
                    for k in 0..n {
                        for f in &lm[i][k] {
                            for g in &rm[k][j] {
                                let c = h.coords_unchecked(&g.after(f));
                                if c.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                                    gens.push(c);
                                }
                            }
                        }
                    }
                    Subspace::from_spanning(h.dim(), gens)
                })
                .collect()
        })
        .collect()
}

impl RadTable {
    pub fn category(&self) -> &IndexedCategory {
        &self.cat
    }

    /// Number of computed powers.
    pub fn computed(&self) -> usize {
        self.powers.len()
    }

    pub fn max_power(&self) -> usize {
        self.max_power
    }

    /// The stabilization index `N₀`, when a global fixed point was reached.
    pub fn stabilization_index(&self) -> Option<usize> {
        self.stable
    }

    pub fn is_stable(&self) -> bool {
        self.stable.is_some()
    }

    /// `PowerBound` unless a global fixed point was reached.
    pub fn check_stable(&self) -> Result<usize> {
        self.stable.ok_or(Error::PowerBound { max_power: self.max_power })
    }

    /// `rad^n(X_i, X_j)` for `n >= 1`; beyond the computed range the last
    /// computed power is returned (exact once the table is stable).
    pub fn power(&self, n: usize, i: usize, j: usize) -> &Subspace {
        assert!(n >= 1, "radical powers start at 1");
        let idx = (n - 1).min(self.powers.len() - 1);
        &self.powers[idx][i][j]
    }

    /// `rad^0 = Hom`.
    pub fn power_or_hom(&self, n: usize, i: usize, j: usize) -> Subspace {
        if n == 0 {
            Subspace::full(self.cat.hom(i, j).dim())
        } else {
            self.power(n, i, j).clone()
        }
    }

    pub fn table(&self, n: usize) -> &PairTable {
        &self.powers[(n - 1).min(self.powers.len() - 1)]
    }

    /// The stabilized table, i.e. `rad^∞`; for unstable tables the last
    /// computed power (an upper bound).
    pub fn rad_infinity(&self) -> &PairTable {
        self.powers.last().expect("at least rad^1")
    }

    pub fn rad_infinity_is_zero(&self) -> bool {
        self.rad_infinity().iter().flatten().all(Subspace::is_zero)
    }

    /// `(rad^∞)²`.
    pub fn rad_inf_square(&self) -> PairTable {
        compose_tables(&self.cat, self.rad_infinity(), self.rad_infinity())
    }

    pub fn is_rad_inf_square_zero(&self) -> bool {
        self.rad_inf_square().iter().flatten().all(Subspace::is_zero)
    }

    /// Depth of `f: X_i -> X_j` given in Hom coordinates.
    pub fn depth_coords(&self, i: usize, j: usize, coords: &[num_rational::BigRational]) -> Depth {
        if !self.powers[0][i][j].contains_vec(coords) {
            return Depth::Finite(0);
        }
        for n in 2..=self.powers.len() {
            if !self.powers[n - 1][i][j].contains_vec(coords) {
                return Depth::Finite(n - 1);
            }
        }
        if self.stable.is_some() {
            Depth::Infinite
        } else {
            Depth::AtLeast(self.powers.len())
        }
    }

    /// Depth of a morphism between two objects of the category.
    pub fn depth_between(&self, i: usize, j: usize, f: &Morph) -> Result<Depth> {
        let coords = self
            .cat
            .hom(i, j)
            .coords(&f.retarget(self.cat.object(i), self.cat.object(j)))
            .ok_or_else(|| Error::InvalidInput("not a homomorphism between the given objects".into()))?;
        Ok(self.depth_coords(i, j, &coords))
    }

    /// Depth of an arbitrary morphism whose source and target decompose into
    /// objects of the category: the minimum over its matrix components.
    pub fn depth(&self, f: &Morph) -> Result<Depth> {
        let locate = |m: &Rep| -> Result<Vec<(usize, Morph, Morph)>> {
            let d = decompose(m);
            let mut out = Vec::new();
            for s in &d.summands {
                let (idx, iso) = self.cat.find(&s.module).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "summand {} is not an object of the category",
                        s.module.dim_vector_string()
                    ))
                })?;
                let inv = iso.inverse().expect("isomorphism");
                for (inc, pr) in s.inclusions.iter().zip(&s.projections) {
                    out.push((idx, inc.after(&inv), iso.after(pr)));
                }
            }
            Ok(out)
        };
        let src = locate(f.source())?;
        let dst = locate(f.target())?;
        let mut best = Depth::Infinite;
        for (i, inc, _) in &src {
            for (j, _, pr) in &dst {
                let comp = pr.after(f).after(inc);
                best = best.min(self.depth_between(*i, *j, &comp)?);
            }
        }
        Ok(best)
    }

    /// Dimensions `dim rad^n(X_i, X_j)` for `n = 1..=computed`.
    pub fn dims(&self, i: usize, j: usize) -> Vec<usize> {
        self.powers.iter().map(|t| t[i][j].dim()).collect()
    }
}

/// `R¹ = rad`, `R^{n+1}(i,j) = Σ_k R¹(i,k) · R^n(k,j)`, until a global fixed
/// point or `max_power` powers.
pub fn rad_power_table(cat: &IndexedCategory, max_power: usize) -> RadTable {
    let n = cat.len();
    let r1: PairTable = (0..n).map(|i| (0..n).map(|j| cat.rad_basis(i, j)).collect()).collect();
    let mut powers = vec![r1];
    let mut stable = None;
    while powers.len() < max_power.max(1) {
        let next = compose_tables(cat, &powers[0], powers.last().unwrap());
        if &next == powers.last().unwrap() {
            stable = Some(powers.len());
            break;
        }
        powers.push(next);
    }
    if stable.is_none() && powers.len() == max_power.max(1) {
        let next = compose_tables(cat, &powers[0], powers.last().unwrap());
        if &next == powers.last().unwrap() {
            stable = Some(powers.len());
        }
    }
    RadTable { cat: cat.clone(), powers, stable, max_power }
}

/// The depth of a morphism: `n` when it lies in `rad^n \ rad^{n+1}` (0 outside
/// the radical), infinite on `rad^∞`. `AtLeast` is reported by tables that
/// did not stabilize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Depth {
    Finite(usize),
    AtLeast(usize),
    Infinite,
}

impl Depth {
    pub fn is_finite(&self) -> bool {
        matches!(self, Depth::Finite(_))
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Depth::Finite(n) => Some(*n),
            _ => None,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(n) => write!(f, "{n}"),
            Depth::AtLeast(n) => write!(f, ">={n}"),
            Depth::Infinite => write!(f, "infinite"),
        }
    }
}

/// `π_S: P_S -> S`, `ι_S: S -> I_S` and `θ_S = ι_S ∘ π_S` for one simple.
#[derive(Clone, Debug)]
pub struct SimpleEnvelope {
    pub vertex: usize,
    pub simple: Rep,
    pub pi: Morph,
    pub iota: Morph,
    pub theta: Morph,
}

pub fn simple_envelopes(alg: &crate::algebra::Algebra) -> Vec<SimpleEnvelope> {
    (0..alg.vertex_count())
        .map(|v| {
            let s = Rep::simple(alg, v);
            let pi = projective_cover(&s).epi;
            let iota = injective_envelope(&s).mono;
            let theta = iota.after(&pi);
            SimpleEnvelope { vertex: v, simple: s, pi, iota, theta }
        })
        .collect()
}

/// One checked clause of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Clause {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Clause {
        Clause { name: name.into(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleDepths {
    pub vertex: String,
    pub pi: Depth,
    pub iota: Depth,
    pub theta: Depth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FiniteType {
    Finite(usize),
    Undetermined(String),
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub outcome: FiniteType,
    pub table: RadTable,
    pub simples: Vec<SimpleDepths>,
    pub clauses: Vec<Clause>,
}

impl Certificate {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }
}

/// Enumerates `ind A`; on closure checks that `rad^∞ = 0`, `(rad^∞)² = 0`,
/// and for every simple `S` that `dp(π_S)`, `dp(ι_S)` are finite,
/// `θ_S ∉ (rad^∞)²` and `(rad^∞)²(P_S, I_S) = 0`. Bounded runs report
/// `Undetermined` with the table of the enumerated subcategory.
pub fn finite_type_certificate(alg: &crate::algebra::Algebra, limits: Limits, max_power: usize) -> Result<Certificate> {
    let en = enumerate_partial(alg, limits)?;
    let table = rad_power_table(&en.category, max_power);
    let cat = table.category().clone();
    let mut simples = Vec::new();
    let mut clauses = Vec::new();
    let complete = en.bound.is_none();
    let square = if table.is_stable() { Some(table.rad_inf_square()) } else { None };
    let envs = simple_envelopes(alg);
    let mut pi_ok = true;
    let mut iota_ok = true;
    let mut theta_ok = true;
    let mut pair_ok = true;
    for env in &envs {
        let located = (cat.find(env.pi.source()), cat.find(env.iota.target()));
        let name = alg.vertex_name(env.vertex).to_string();
        let (Some((pi_idx, _)), Some((ii_idx, _))) = located else {
            simples.push(SimpleDepths {
                vertex: name,
                pi: Depth::AtLeast(0),
                iota: Depth::AtLeast(0),
                theta: Depth::AtLeast(0),
            });
            pi_ok = false;
            continue;
        };
        let (dp, di, dt) = (table.depth(&env.pi), table.depth(&env.iota), table.depth(&env.theta));
        let (dp, di, dt) = match (dp, di, dt) {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            _ => {
                pi_ok = false;
                continue;
            }
        };
        pi_ok &= dp.is_finite();
        iota_ok &= di.is_finite();
        if let Some(sq) = &square {
            let (_, iso_p) = cat.find(env.theta.source()).expect("located above");
            let (_, iso_i) = cat.find(env.theta.target()).expect("located above");
            let t = iso_i.after(&env.theta).after(&iso_p.inverse().expect("iso"));
            let c = cat.hom(pi_idx, ii_idx).coords_unchecked(&t.retarget(cat.object(pi_idx), cat.object(ii_idx)));
            theta_ok &= !sq[pi_idx][ii_idx].contains_vec(&c);
            pair_ok &= sq[pi_idx][ii_idx].is_zero();
        }
        simples.push(SimpleDepths { vertex: name, pi: dp, iota: di, theta: dt });
    }
    if complete {
        let n0 = table.stabilization_index();
        clauses.push(Clause::new(
            "radical powers stabilize",
            n0.is_some(),
            n0.map_or(format!("no fixed point within {max_power} powers"), |n| format!("N0 = {n}")),
        ));
        clauses.push(Clause::new("rad^inf = 0", table.is_stable() && table.rad_infinity_is_zero(), ""));
        clauses.push(Clause::new("(rad^inf)^2 = 0", table.is_stable() && table.is_rad_inf_square_zero(), ""));
        clauses.push(Clause::new("dp(pi_S) finite for every simple S", pi_ok, ""));
        clauses.push(Clause::new("dp(iota_S) finite for every simple S", iota_ok, ""));
        clauses.push(Clause::new("theta_S not in (rad^inf)^2", table.is_stable() && theta_ok, ""));
        clauses.push(Clause::new("(rad^inf)^2(P_S, I_S) = 0", table.is_stable() && pair_ok, ""));
    }
    let outcome = match en.bound {
        None => FiniteType::Finite(cat.len()),
        Some(b) => FiniteType::Undetermined(b),
    };
    Ok(Certificate { outcome, table, simples, clauses })
}
