//! Torsion primes of a character set and the separable index.
//!
//! For a set `S` of distinct characters, `ν_S` is the matrix whose columns
//! are the characters written in a basis of `X(T)`, and `g_S` is the gcd of
//! its rank-sized minors. A prime divides `g_S` exactly when the rank of
//! `ν_S` drops modulo that prime, i.e. when the stabilizer in `T` of a
//! vector with weight support `S` is non-reduced in that characteristic.
//!
//! Enumerating all subsets of the characters is not needed. If the rank of
//! `ν_S` drops mod `p`, pick columns of `S` forming a basis of its rational
//! span; that sub-collection spans a sublattice of the same rational rank
//! whose reduction mod `p` lies inside the reduction of `ν_S`, so its rank
//! drops mod `p` too. Hence the rationally independent subsets of size at
//! most the rank already see every torsion prime.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{prime_factors, rank_minor_gcd, require_prime, smith_normal_form, IntMatrix};
use crate::limits::Limits;
use crate::reps::{expand, rep_height, RepSpec, WeightMultiset};
use crate::roots::{RationalHeight, RootDatum, Weight};

/// A set of distinct characters of the maximal torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSupport {
    datum: RootDatum,
    characters: BTreeSet<Weight>,
}

impl CharacterSupport {
    /// Characters must have the datum's rank and lie in its character
    /// lattice.
    pub fn new(datum: &RootDatum, characters: impl IntoIterator<Item = Weight>) -> Result<Self> {
        let characters: BTreeSet<Weight> = characters.into_iter().collect();
        for chi in &characters {
            datum.check_weight(chi)?;
            if datum.lattice_coordinates(chi).is_none() {
                return Err(Error::NotInLattice { weight: chi.to_string() });
            }
        }
        Ok(CharacterSupport { datum: datum.clone(), characters })
    }

    /// Distinct characters of a representation; multiplicities are dropped.
    pub fn of_multiset(w: &WeightMultiset) -> Result<Self> {
        Self::new(w.datum(), w.support().cloned())
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn characters(&self) -> &BTreeSet<Weight> {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    /// Sub-support on the characters at the given positions (in sorted
    /// order).
    pub fn subset(&self, positions: &[usize]) -> CharacterSupport {
        let all: Vec<&Weight> = self.characters.iter().collect();
        CharacterSupport {
            datum: self.datum.clone(),
            characters: positions.iter().map(|&i| all[i].clone()).collect(),
        }
    }
}

/// `ν_S`: rank × |S| matrix whose columns are the characters in the
/// coordinates of the datum's lattice basis.
pub fn character_matrix(support: &CharacterSupport) -> Result<IntMatrix> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let datum = support.datum();
    let columns = support
        .characters
        .iter()
        .map(|chi| {
            datum
                .lattice_coordinates(chi)
                .ok_or_else(|| Error::NotInLattice { weight: chi.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_columns(datum.rank(), &columns)
}

/// `g_S`, the gcd of the rank-sized minors of `ν_S` (1 when the rank is 0).
pub fn subset_g(support: &CharacterSupport) -> Result<BigInt> {
    Ok(rank_minor_gcd(&character_matrix(support)?))
}

/// Number of subsets of size `1..=max_size` of an `n`-set.
fn candidate_count(n: usize, max_size: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for k in 1..=max_size.min(n) {
        c = c * (n - k + 1) as u128 / k as u128;
        total = total.saturating_add(c);
    }
    total
}

/// Union over all subsets `S` of the primes dividing `g_S`.
///
/// Enumerates the rationally independent subsets of size at most the rank
/// (see the module docs for why that suffices). The work is split across
/// threads by the first column of each subset; the result is a set union
/// and so does not depend on scheduling.
pub fn torsion_primes(support: &CharacterSupport, limits: &Limits) -> Result<BTreeSet<u64>> {
    if support.is_empty() {
        return Ok(BTreeSet::new());
    }
    let nu = character_matrix(support)?;
    let n = nu.cols();
    let rank = support.datum().rank();
    let candidates = candidate_count(n, rank);
    if candidates > limits.max_subsets as u128 {
        return Err(Error::guard("character subset enumeration", candidates, limits.max_subsets));
    }

    let primes = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut found = BTreeSet::new();
            let mut chosen = vec![first];
            extend_independent(&nu, &mut chosen, rank, &mut found);
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(primes)
}

/// `chosen` is a candidate column set; if independent, record the primes of
/// its `g` and recurse on larger column indices.
fn extend_independent(nu: &IntMatrix, chosen: &mut Vec<usize>, max_size: usize, found: &mut BTreeSet<u64>) {
    let snf = smith_normal_form(&nu.select_columns(chosen));
    if snf.rank() < chosen.len() {
        return;
    }
    let g: BigInt = snf.elementary_divisors.iter().fold(BigInt::one(), |a, d| a * d);
    found.extend(prime_factors(&g.magnitude().clone()));
    if chosen.len() == max_size {
        return;
    }
    let last = *chosen.last().expect("nonempty");
    for next in last + 1..nu.cols() {
        chosen.push(next);
        extend_independent(nu, chosen, max_size, found);
        chosen.pop();
    }
}

/// Height, torsion primes and separable index of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub height: RationalHeight,
    pub torsion_primes: BTreeSet<u64>,
    /// Largest torsion prime, or 1 when there is none.
    pub p_t: u64,
    /// `max(height, p_T)`.
    pub psi: RationalHeight,
    pub dimension: u64,
    /// Number of distinct characters.
    pub weight_count: usize,
    /// `rank! · ⌈height⌉^rank`.
    pub weak_bound: BigUint,
}

impl IndexReport {
    pub fn from_multiset(w: &WeightMultiset, limits: &Limits) -> Result<Self> {
        let height = rep_height(w)?;
        let support = CharacterSupport::of_multiset(w)?;
        let torsion_primes = torsion_primes(&support, limits)?;
        let p_t = torsion_primes.iter().max().copied().unwrap_or(1);
        let p_t_q = BigRational::from_integer(p_t.into());
        let psi = RationalHeight(if height.0 > p_t_q { height.0.clone() } else { p_t_q });
        let rank = w.datum().rank();
        let weak_bound = weak_bound(rank, &height);
        let report = IndexReport {
            height,
            torsion_primes,
            p_t,
            psi,
            dimension: w.dimension(),
            weight_count: w.distinct_count(),
            weak_bound,
        };
        debug_assert!(report.psi >= report.height);
        debug_assert!(report.torsion_primes.iter().all(|&p| report.psi.0 >= BigRational::from_integer(p.into())));
        Ok(report)
    }
}

fn weak_bound(rank: usize, height: &RationalHeight) -> BigUint {
    let h = height.ceil();
    if h.is_negative() {
        return BigUint::from(0u32);
    }
    let h = h.magnitude().clone();
    let factorial: BigUint = (1..=rank as u64).map(BigUint::from).product();
    factorial * num_traits::pow(h, rank)
}

/// Expands the representation and computes its [`IndexReport`].
pub fn separable_index(datum: &RootDatum, spec: &RepSpec, limits: &Limits) -> Result<IndexReport> {
    let w = expand(datum, spec, limits)?;
    IndexReport::from_multiset(&w, limits)
}

/// `p > ψ`: every stabilizer of the action is then reduced.
pub fn is_low_separable_index(report: &IndexReport, p: u64) -> Result<bool> {
    require_prime(p)?;
    Ok(BigRational::from_integer(p.into()) > report.psi.0)
}

/// `p_T ≤ rank! · ⌈height⌉^rank`. `None` when the height is below 1, where
/// the bound says nothing.
pub fn check_weak_bound(report: &IndexReport) -> Option<bool> {
    if report.height.0 < BigRational::one() {
        return None;
    }
    Some(BigUint::from(report.p_t) <= report.weak_bound)
}
