//! Weight multisets of representations and their heights.

mod freudenthal;
mod spec;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::require_prime;
use crate::limits::Limits;
use crate::roots::{RationalHeight, RootDatum, TypeLetter, Weight};

pub use freudenthal::{dominant_character, dominant_weights_below, weyl_dimension};
pub use spec::RepSpec;

/// A representation's character: each weight with its (positive)
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    datum: RootDatum,
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn empty(datum: &RootDatum) -> Self {
        WeightMultiset { datum: datum.clone(), entries: BTreeMap::new() }
    }

    pub fn trivial(datum: &RootDatum) -> Self {
        let mut m = Self::empty(datum);
        m.insert(Weight::zero(datum.rank()), 1);
        m
    }

    /// Builds a multiset from raw entries. Zero multiplicities are dropped.
    pub fn from_entries(
        datum: &RootDatum,
        entries: impl IntoIterator<Item = (Weight, u64)>,
    ) -> Result<Self> {
        let mut m = Self::empty(datum);
        for (w, k) in entries {
            datum.check_weight(&w)?;
            m.insert(w, k);
        }
        Ok(m)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn distinct_count(&self) -> usize {
        self.entries.len()
    }

    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    fn insert(&mut self, w: Weight, k: u64) {
        if k > 0 {
            *self.entries.entry(w).or_insert(0) += k;
        }
    }

    /// Multiplicity is constant along every simple reflection.
    pub fn is_weyl_invariant(&self) -> bool {
        self.entries.iter().all(|(w, &k)| {
            (0..self.datum.rank()).all(|i| self.multiplicity(&self.datum.reflect(i, w)) == k)
        })
    }

    /// `Σ multiplicity · weight = 0`.
    pub fn has_zero_weighted_sum(&self) -> bool {
        let mut sum = vec![0i128; self.datum.rank()];
        for (w, &k) in &self.entries {
            for (s, &x) in sum.iter_mut().zip(&w.0) {
                *s += x as i128 * k as i128;
            }
        }
        sum.iter().all(|&s| s == 0)
    }

    pub fn dual(&self) -> Self {
        WeightMultiset {
            datum: self.datum.clone(),
            entries: self.entries.iter().map(|(w, &k)| (w.neg(), k)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &k) in &other.entries {
            out.insert(w.clone(), k);
        }
        out
    }

    /// Minkowski sum of the two multisets.
    pub fn tensor(&self, other: &Self, limits: &Limits) -> Result<Self> {
        let dim = self.dimension() as u128 * other.dimension() as u128;
        check_dimension(dim, limits)?;
        let mut out = Self::empty(&self.datum);
        for (a, &ka) in &self.entries {
            for (b, &kb) in &other.entries {
                out.insert(a.add(b), ka * kb);
            }
        }
        Ok(out)
    }

    /// `k`-th symmetric power: coefficient of `t^k` in
    /// `Π_χ (1 - t e^χ)^(-m_χ)`.
    pub fn symmetric_power(&self, k: u32, limits: &Limits) -> Result<Self> {
        let n = self.dimension() as u128;
        let dim = binomial((n + k as u128).saturating_sub(1), k as u128);
        check_dimension(dim, limits)?;
        Ok(self.power_series(k, |m, i| binomial(m as u128 + i as u128 - 1, i as u128)))
    }

    /// `k`-th exterior power: coefficient of `t^k` in `Π_χ (1 + t e^χ)^(m_χ)`.
    pub fn exterior_power(&self, k: u32, limits: &Limits) -> Result<Self> {
        let n = self.dimension() as u128;
        if k as u128 > n {
            return Err(Error::EmptyRepresentation("exterior power above the dimension"));
        }
        check_dimension(binomial(n, k as u128), limits)?;
        Ok(self.power_series(k, |m, i| binomial(m as u128, i as u128)))
    }

    /// Truncated product over the distinct weights of
    /// `Σ_i coeff(m_χ, i) t^i e^(iχ)`, read at degree `k`.
    fn power_series(&self, k: u32, coeff: impl Fn(u64, u32) -> u128) -> Self {
        let k = k as usize;
        let zero = Weight::zero(self.datum.rank());
        let mut by_degree: Vec<BTreeMap<Weight, u128>> = vec![BTreeMap::new(); k + 1];
        by_degree[0].insert(zero, 1);
        for (chi, &m) in &self.entries {
            let mut next: Vec<BTreeMap<Weight, u128>> = vec![BTreeMap::new(); k + 1];
            for (deg, terms) in by_degree.iter().enumerate() {
                for (w, &c) in terms {
                    for i in 0..=(k - deg) {
                        let f = coeff(m, i as u32);
                        if f == 0 {
                            if i > 0 {
                                break;
                            }
                            continue;
                        }
                        let shifted = w.add(&chi.scale(i as i64));
                        *next[deg + i].entry(shifted).or_insert(0) += c * f;
                    }
                }
            }
            by_degree = next;
        }
        let mut out = Self::empty(&self.datum);
        for (w, c) in std::mem::take(&mut by_degree[k]) {
            out.insert(w, u64::try_from(c).expect("guarded dimension"));
        }
        out
    }
}

fn check_dimension(dim: u128, limits: &Limits) -> Result<()> {
    if dim > limits.max_dimension as u128 {
        return Err(Error::guard("representation dimension", dim, limits.max_dimension));
    }
    Ok(())
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Highest weight of the named "standard" representation: `ω1` for the
/// classical types, and the smallest nontrivial irreducible for the
/// exceptional ones.
pub fn standard_highest_weight(datum: &RootDatum) -> Result<Weight> {
    let letter = datum
        .type_letter()
        .ok_or_else(|| Error::Unsupported(format!("no standard representation for {}", datum.label())))?;
    let n = datum.rank();
    let index = match (letter, n) {
        (TypeLetter::A | TypeLetter::B | TypeLetter::C | TypeLetter::D, _) => 0,
        (TypeLetter::E, 6) => 0,
        (TypeLetter::E, 7) => 6,
        (TypeLetter::E, 8) => 7,
        (TypeLetter::F, _) => 3,
        // short simple root is α2 in this numbering
        (TypeLetter::G, _) => 1,
        (TypeLetter::E, _) => unreachable!("admissible E ranks are 6..=8"),
    };
    Ok(Weight::fundamental(n, index))
}

/// Weights of the irreducible (characteristic-zero Weyl) module of highest
/// weight `λ`, with multiplicities.
pub fn weyl_module_weights(datum: &RootDatum, lambda: &Weight, limits: &Limits) -> Result<WeightMultiset> {
    datum.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant { weight: lambda.to_string() });
    }
    let dominant = dominant_character(datum, lambda, limits)?;
    let mut out = WeightMultiset::empty(datum);
    for (mu, k) in dominant {
        for w in datum.weyl_orbit(&mu, limits.max_orbit)? {
            out.insert(w, k);
        }
    }
    Ok(out)
}

/// Expands a representation into its weight multiset.
pub fn expand(datum: &RootDatum, spec: &RepSpec, limits: &Limits) -> Result<WeightMultiset> {
    match spec {
        RepSpec::Trivial => Ok(WeightMultiset::trivial(datum)),
        RepSpec::Standard => weyl_module_weights(datum, &standard_highest_weight(datum)?, limits),
        RepSpec::Adjoint => weyl_module_weights(datum, &datum.highest_root()?, limits),
        RepSpec::Irreducible(lambda) => weyl_module_weights(datum, lambda, limits),
        RepSpec::DirectSum(parts) => {
            let mut iter = parts.iter();
            let first = iter.next().ok_or(Error::EmptyRepresentation("empty direct sum"))?;
            let mut acc = expand(datum, first, limits)?;
            for part in iter {
                acc = acc.direct_sum(&expand(datum, part, limits)?);
                check_dimension(acc.dimension() as u128, limits)?;
            }
            Ok(acc)
        }
        RepSpec::Tensor(a, b) => {
            let a = expand(datum, a, limits)?;
            let b = expand(datum, b, limits)?;
            a.tensor(&b, limits)
        }
        RepSpec::Dual(a) => Ok(expand(datum, a, limits)?.dual()),
        RepSpec::SymmetricPower(k, a) => expand(datum, a, limits)?.symmetric_power(*k, limits),
        RepSpec::ExteriorPower(k, a) => expand(datum, a, limits)?.exterior_power(*k, limits),
    }
}

/// Dimension of the representation, without expanding it.
pub fn spec_dimension(datum: &RootDatum, spec: &RepSpec) -> Result<BigUint> {
    Ok(match spec {
        RepSpec::Trivial => BigUint::from(1u32),
        RepSpec::Standard => weyl_dimension(datum, &standard_highest_weight(datum)?)?,
        RepSpec::Adjoint => weyl_dimension(datum, &datum.highest_root()?)?,
        RepSpec::Irreducible(lambda) => {
            datum.check_weight(lambda)?;
            weyl_dimension(datum, lambda)?
        }
        RepSpec::DirectSum(parts) => {
            if parts.is_empty() {
                return Err(Error::EmptyRepresentation("empty direct sum"));
            }
            let mut total = BigUint::from(0u32);
            for p in parts {
                total += spec_dimension(datum, p)?;
            }
            total
        }
        RepSpec::Tensor(a, b) => spec_dimension(datum, a)? * spec_dimension(datum, b)?,
        RepSpec::Dual(a) => spec_dimension(datum, a)?,
        RepSpec::SymmetricPower(k, a) => {
            let n = spec_dimension(datum, a)?;
            big_binomial(&(n + BigUint::from(*k) - BigUint::from(1u32)), *k)
        }
        RepSpec::ExteriorPower(k, a) => big_binomial(&spec_dimension(datum, a)?, *k),
    })
}

fn big_binomial(n: &BigUint, k: u32) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

/// Dominant weights present in the multiset.
pub fn dominant_weights_occurring(w: &WeightMultiset) -> BTreeSet<Weight> {
    w.support().filter(|x| x.is_dominant()).cloned().collect()
}

/// Height of a representation: the maximum of `2·ht(μ)` over the dominant
/// weights `μ` occurring in it.
pub fn rep_height(w: &WeightMultiset) -> Result<RationalHeight> {
    max_double_height(w.datum(), w.support().filter(|x| x.is_dominant()))
        .ok_or(Error::EmptyRepresentation("height of the zero representation"))
}

fn max_double_height<'a>(
    datum: &RootDatum,
    weights: impl Iterator<Item = &'a Weight>,
) -> Option<RationalHeight> {
    weights
        .map(|mu| RationalHeight(datum.weight_height(mu).0 * num_bigint::BigInt::from(2)))
        .max()
}

/// Height of the irreducible module `V(λ)`, scanning its dominant weights
/// without computing multiplicities or orbits.
pub fn irreducible_height(datum: &RootDatum, lambda: &Weight) -> Result<RationalHeight> {
    datum.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant { weight: lambda.to_string() });
    }
    let below = dominant_weights_below(datum, lambda);
    Ok(max_double_height(datum, below.iter()).expect("λ is below itself"))
}

/// Height of a representation given by its constructor tree. Irreducible
/// leaves only need their dominant weights; anything else is expanded.
pub fn spec_height(datum: &RootDatum, spec: &RepSpec, limits: &Limits) -> Result<RationalHeight> {
    match spec {
        RepSpec::Irreducible(lambda) => irreducible_height(datum, lambda),
        RepSpec::Standard => irreducible_height(datum, &standard_highest_weight(datum)?),
        RepSpec::Adjoint => irreducible_height(datum, &datum.highest_root()?),
        _ => rep_height(&expand(datum, spec, limits)?),
    }
}

/// `ht(V) < p`, compared exactly.
pub fn is_low_height(w: &WeightMultiset, p: u64) -> Result<bool> {
    require_prime(p)?;
    let h = rep_height(w)?;
    Ok(h.0 < num_rational::BigRational::from_integer(p.into()))
}

/// Restriction to the semisimple part of the standard Levi subgroup on the
/// given simple roots: each weight keeps its pairings with the retained
/// coroots.
pub fn restrict_to_levi(w: &WeightMultiset, simple_subset: &[usize]) -> Result<WeightMultiset> {
    let levi = w.datum().levi(simple_subset)?;
    let idx: Vec<usize> = simple_subset.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = WeightMultiset::empty(&levi);
    for (x, &k) in w.entries() {
        out.insert(Weight(idx.iter().map(|&i| x.0[i]).collect()), k);
    }
    Ok(out)
}

/// Converts a dimension to `u64` for reporting.
pub fn dimension_u64(d: &BigUint) -> Option<u64> {
    d.to_u64()
}
