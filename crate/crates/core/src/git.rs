//! Torus-level invariant theory on the weight support of a vector.
//!
//! Sign convention: a cocharacter `λ` destabilizes `w` when `⟨λ, χ⟩ > 0`
//! for every `χ` in the support, so that `λ(t)·w → 0` as `t → 0`.
//!
//! Norms use the invariant form with short roots of squared length 2. A
//! weight `x` is identified with the coweight `n = G x` (`G` the Gram
//! matrix on fundamental-weight coordinates), so that `⟨n, y⟩ = (x, y)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::require_prime;
use crate::limits::Limits;
use crate::roots::{RootDatum, Weight};
use crate::separable::{subset_g, CharacterSupport};

/// The weight support `S_w` of a nonzero vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportVector {
    support: CharacterSupport,
}

impl SupportVector {
    pub fn new(support: CharacterSupport) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(SupportVector { support })
    }

    pub fn from_weights(datum: &RootDatum, weights: impl IntoIterator<Item = Weight>) -> Result<Self> {
        Self::new(CharacterSupport::new(datum, weights)?)
    }

    pub fn datum(&self) -> &RootDatum {
        self.support.datum()
    }

    pub fn support(&self) -> &CharacterSupport {
        &self.support
    }

    pub fn weights(&self) -> &BTreeSet<Weight> {
        self.support.characters()
    }

    /// Apply the simple reflection `s_i` to every weight.
    pub fn reflect(&self, i: usize) -> SupportVector {
        let datum = self.datum();
        let reflected = self.weights().iter().map(|w| datum.reflect(i, w));
        SupportVector::from_weights(datum, reflected).expect("reflection preserves the lattice")
    }
}

/// Weights whose coefficient is flagged nonzero.
pub fn support_of(
    datum: &RootDatum,
    coefficients: impl IntoIterator<Item = (Weight, bool)>,
) -> Result<SupportVector> {
    SupportVector::from_weights(datum, coefficients.into_iter().filter(|(_, nz)| *nz).map(|(w, _)| w))
}

/// A cocharacter of the maximal torus in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OneParamSubgroup {
    pub coords: Vec<i64>,
}

impl OneParamSubgroup {
    /// Divides out the gcd of the coordinates. `None` for the zero vector.
    pub fn primitive(coords: Vec<i64>) -> Option<Self> {
        let g = coords.iter().fold(0i64, |g, &c| g.gcd(&c));
        if g == 0 {
            return None;
        }
        Some(OneParamSubgroup { coords: coords.into_iter().map(|c| c / g).collect() })
    }

    /// `⟨λ, χ⟩`; fundamental weights are dual to simple coroots.
    pub fn pairing(&self, chi: &Weight) -> i64 {
        self.coords.iter().zip(&chi.0).map(|(a, b)| a * b).sum()
    }

    /// Squared norm `nᵀ C D⁻¹ n` under the invariant form.
    pub fn norm_squared(&self, datum: &RootDatum) -> BigRational {
        let c = datum.cartan();
        let d = datum.symmetrizer();
        let r = datum.rank();
        let mut total = BigRational::zero();
        for i in 0..r {
            for j in 0..r {
                if c[i][j] != 0 && self.coords[i] != 0 && self.coords[j] != 0 {
                    total += BigRational::new(BigInt::from(self.coords[i] * c[i][j] * self.coords[j]), BigInt::from(d[j]));
                }
            }
        }
        total
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", c.join(","))
    }
}

/// `sign(m)·m² / ‖λ‖²` with `m = min_χ ⟨λ, χ⟩`: the squared normalized
/// minimum pairing, keeping its sign.
pub fn normalized_min_pairing_squared(sv: &SupportVector, lambda: &OneParamSubgroup) -> BigRational {
    let m = sv.weights().iter().map(|chi| lambda.pairing(chi)).min().expect("nonempty support");
    let m = BigInt::from(m);
    let sq = BigRational::new(&m * &m * m.signum(), BigInt::one());
    sq / lambda.norm_squared(sv.datum())
}

/// The point of `conv(S_w)` closest to the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinNormPoint {
    /// Fundamental-weight coordinates.
    pub point: Vec<BigRational>,
    pub norm_squared: BigRational,
}

fn rational_norm(datum: &RootDatum, x: &[BigRational]) -> BigRational {
    let g = datum.gram();
    let mut total = BigRational::zero();
    for i in 0..x.len() {
        for j in 0..x.len() {
            total += g.get(i, j) * &x[i] * &x[j];
        }
    }
    total
}

fn order_candidates(a: &MinNormPoint, b: &MinNormPoint) -> Ordering {
    a.norm_squared.cmp(&b.norm_squared).then_with(|| a.point.cmp(&b.point))
}

fn face_count(n: usize, max_size: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for k in 1..=max_size.min(n) {
        c = c * (n - k + 1) as u128 / k as u128;
        total = total.saturating_add(c);
    }
    total
}

/// Minimal-norm point of `conv(S_w)`, by projecting the origin onto the
/// affine hull of every affinely independent subset of size at most
/// `rank + 1` and keeping projections inside the subset's hull.
pub fn minimal_norm_point(sv: &SupportVector, limits: &Limits) -> Result<MinNormPoint> {
    let points: Vec<&Weight> = sv.weights().iter().collect();
    let rank = sv.datum().rank();
    let faces = face_count(points.len(), rank + 1);
    if faces > limits.max_faces as u128 {
        return Err(Error::guard("minimal-norm face enumeration", faces, limits.max_faces));
    }
    // Gram matrix of the support points under the invariant form
    let datum = sv.datum();
    let pg: Vec<Vec<BigRational>> = points
        .iter()
        .map(|a| points.iter().map(|b| datum.inner_product(a, b)).collect())
        .collect();

    let best = (0..points.len())
        .into_par_iter()
        .filter_map(|first| {
            let mut best: Option<MinNormPoint> = None;
            let mut chosen = vec![first];
            search_faces(&points, &pg, datum, rank + 1, &mut chosen, &mut best);
            best
        })
        .min_by(order_candidates)
        .expect("a single point is always a face");
    Ok(best)
}

fn search_faces(
    points: &[&Weight],
    pg: &[Vec<BigRational>],
    datum: &RootDatum,
    max_size: usize,
    chosen: &mut Vec<usize>,
    best: &mut Option<MinNormPoint>,
) {
    // project 0 onto the affine hull: minimize cᵀ P c subject to Σc = 1
    let k = chosen.len();
    let mut a = vec![vec![BigRational::zero(); k + 1]; k + 1];
    for (r, &i) in chosen.iter().enumerate() {
        for (s, &j) in chosen.iter().enumerate() {
            a[r][s] = pg[i][j].clone();
        }
        a[r][k] = BigRational::one();
        a[k][r] = BigRational::one();
    }
    let mut b = vec![BigRational::zero(); k + 1];
    b[k] = BigRational::one();
    let Some(sol) = solve_exact(a, b) else {
        // affinely dependent; supersets are too
        return;
    };
    if sol[..k].iter().all(|c| !c.is_negative()) {
        let rank = datum.rank();
        let mut point = vec![BigRational::zero(); rank];
        for (c, &i) in sol[..k].iter().zip(chosen.iter()) {
            for (x, &w) in point.iter_mut().zip(&points[i].0) {
                *x += c * BigInt::from(w);
            }
        }
        let candidate = MinNormPoint { norm_squared: rational_norm(datum, &point), point };
        if best.as_ref().is_none_or(|b| order_candidates(&candidate, b) == Ordering::Less) {
            *best = Some(candidate);
        }
    }
    if k == max_size {
        return;
    }
    let last = *chosen.last().expect("nonempty");
    for next in last + 1..points.len() {
        chosen.push(next);
        search_faces(points, pg, datum, max_size, chosen, best);
        chosen.pop();
    }
}

/// Unique solution of `A x = b` when `A` has full column rank and the
/// system is consistent; `None` otherwise.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !a[r][col].is_zero())?;
        a.swap(row, pivot);
        b.swap(row, pivot);
        let inv = a[row][col].recip();
        for c in col..cols {
            a[row][c] = &a[row][c] * &inv;
        }
        b[row] = &b[row] * &inv;
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..cols {
                    let t = &f * &a[row][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[row];
                b[r] -= t;
            }
        }
        row += 1;
    }
    if b[cols..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    b.truncate(cols);
    Some(b)
}

/// Hilbert–Mumford for a torus: `0 ∈ conv(S_w)`.
pub fn is_torus_semistable(sv: &SupportVector, limits: &Limits) -> Result<bool> {
    Ok(minimal_norm_point(sv, limits)?.norm_squared.is_zero())
}

/// The optimal destabilizing cocharacter, or `None` when `w` is
/// semistable. It is the primitive integral coweight on the ray of the
/// minimal-norm point; its normalized minimum pairing equals that point's
/// norm.
pub fn kempf_one_ps(sv: &SupportVector, limits: &Limits) -> Result<Option<OneParamSubgroup>> {
    let mnp = minimal_norm_point(sv, limits)?;
    if mnp.norm_squared.is_zero() {
        return Ok(None);
    }
    let g = sv.datum().gram();
    let rank = sv.datum().rank();
    let coweight: Vec<BigRational> = (0..rank)
        .map(|i| (0..rank).fold(BigRational::zero(), |acc, j| acc + g.get(i, j) * &mnp.point[j]))
        .collect();
    let den = coweight.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = coweight.iter().map(|x| (x * &den).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let coords = ints
        .iter()
        .map(|x| (x / &gcd).to_i64().ok_or_else(|| Error::Unsupported("Kempf cocharacter overflows i64".into())))
        .collect::<Result<Vec<_>>>()?;
    let lambda = OneParamSubgroup { coords };
    debug_assert!(sv.weights().iter().all(|chi| lambda.pairing(chi) > 0));
    Ok(Some(lambda))
}

/// `p ∤ g_{S_w}`: the torus stabilizer of `w` is reduced in characteristic
/// `p`.
pub fn is_torus_separable(sv: &SupportVector, p: u64) -> Result<bool> {
    require_prime(p)?;
    let g = subset_g(sv.support())?;
    Ok(!(g % BigInt::from(p)).is_zero())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    SemistableNotStable,
    Unstable,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Stable => "stable",
            Stability::SemistableNotStable => "semistable_not_stable",
            Stability::Unstable => "unstable",
        })
    }
}

/// Unstable when `0 ∉ conv(S_w)`; stable when `0` is an interior point of a
/// full-dimensional `conv(S_w)`.
///
/// `0` is interior exactly when the cone over `S_w` is the whole space,
/// i.e. `S_w` spans and each `-χ` is a nonnegative combination of the
/// support. By conic Carathéodory it suffices to try linearly independent
/// sub-collections.
pub fn classify_section_value(sv: &SupportVector, limits: &Limits) -> Result<Stability> {
    if !is_torus_semistable(sv, limits)? {
        return Ok(Stability::Unstable);
    }
    let rank = sv.datum().rank();
    let points: Vec<Vec<BigRational>> = sv
        .weights()
        .iter()
        .map(|w| w.0.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let all: Vec<usize> = (0..points.len()).collect();
    if column_rank(&points, &all) < rank {
        return Ok(Stability::SemistableNotStable);
    }
    for target in &points {
        let neg: Vec<BigRational> = target.iter().map(|x| -x).collect();
        if !in_cone(&points, &neg, rank) {
            return Ok(Stability::SemistableNotStable);
        }
    }
    Ok(Stability::Stable)
}

fn column_rank(points: &[Vec<BigRational>], cols: &[usize]) -> usize {
    let Some(first) = cols.first() else { return 0 };
    let rows = points[*first].len();
    let mut m: Vec<Vec<BigRational>> = (0..rows).map(|r| cols.iter().map(|&c| points[c][r].clone()).collect()).collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for c in col..cols.len() {
                    let t = &f * &m[rank][c];
                    m[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn in_cone(points: &[Vec<BigRational>], target: &[BigRational], rank: usize) -> bool {
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    let mut chosen = Vec::new();
    cone_search(points, target, rank, 0, &mut chosen)
}

fn cone_search(points: &[Vec<BigRational>], target: &[BigRational], max_size: usize, from: usize, chosen: &mut Vec<usize>) -> bool {
    for next in from..points.len() {
        chosen.push(next);
        if column_rank(points, chosen) == chosen.len() {
            let a: Vec<Vec<BigRational>> =
                (0..target.len()).map(|r| chosen.iter().map(|&c| points[c][r].clone()).collect()).collect();
            if let Some(c) = solve_exact(a, target.to_vec()) {
                if c.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
            if chosen.len() < max_size && cone_search(points, target, max_size, next + 1, chosen) {
                return true;
            }
        }
        chosen.pop();
    }
    false
}
