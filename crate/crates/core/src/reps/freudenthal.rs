//! Dominant characters of irreducible highest-weight modules.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::roots::{RootDatum, Weight};

/// Dominant weights `μ ≤ λ`, ordered by depth `ht(λ - μ)` (ties broken by
/// coordinates). `λ` itself comes first.
///
/// Every dominant `μ < λ` lies below some dominant `λ - α` with `α` a
/// positive root, so walking down through dominant weights only reaches
/// all of them.
pub fn dominant_weights_below(datum: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut stack = vec![lambda.clone()];
    seen.insert(lambda.clone());
    while let Some(mu) = stack.pop() {
        for alpha in datum.positive_roots() {
            let next = mu.sub(alpha);
            if next.is_dominant() && !seen.contains(&next) {
                seen.insert(next.clone());
                stack.push(next);
            }
        }
    }
    let top = datum.weight_height(lambda);
    let mut out: Vec<(BigInt, Weight)> = seen
        .into_iter()
        .map(|mu| {
            let depth = &top.0 - datum.weight_height(&mu).0;
            debug_assert!(depth.is_integer());
            (depth.to_integer(), mu)
        })
        .collect();
    out.sort();
    out.into_iter().map(|(_, mu)| mu).collect()
}

/// Weyl dimension formula: `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Weight) -> Result<BigUint> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant { weight: lambda.to_string() });
    }
    let shifted = lambda.add(&datum.rho());
    let rho = datum.rho();
    let mut dim = BigRational::one();
    for alpha in datum.positive_roots() {
        dim *= datum.inner_product(&shifted, alpha) / datum.inner_product(&rho, alpha);
    }
    debug_assert!(dim.is_integer());
    Ok(dim.to_integer().to_biguint().expect("positive dimension"))
}

/// Multiplicities of the dominant weights of the irreducible module with
/// highest weight `λ`, by Freudenthal's recursion.
///
/// The invariant form is scaled to integers so the recursion runs in `i128`;
/// the common scale cancels between numerator and denominator.
pub fn dominant_character(
    datum: &RootDatum,
    lambda: &Weight,
    limits: &Limits,
) -> Result<BTreeMap<Weight, u64>> {
    datum.check_weight(lambda)?;
    let dim = weyl_dimension(datum, lambda)?;
    if dim > BigUint::from(limits.max_dimension) {
        return Err(Error::guard(
            "representation dimension",
            dim.to_u128().unwrap_or(u128::MAX),
            limits.max_dimension,
        ));
    }

    let gram = IntForm::new(datum);
    let rank = datum.rank();
    let rho = datum.rho();
    let lam_rho = lambda.add(&rho);
    let top = gram.norm(&lam_rho);
    let roots: Vec<(Weight, Vec<i128>)> = datum
        .positive_roots()
        .iter()
        .map(|a| (a.clone(), gram.covector(a)))
        .collect();

    let order = dominant_weights_below(datum, lambda);
    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(order.len());
    mult.insert(lambda.clone(), 1);

    for mu in order.iter().skip(1) {
        let mut num: i128 = 0;
        for (alpha, alpha_form) in &roots {
            let mut k = 1;
            loop {
                let shifted = Weight((0..rank).map(|i| mu.0[i] + k * alpha.0[i]).collect());
                let m = mult.get(&datum.dominant_representative(&shifted)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                let pairing: i128 =
                    shifted.0.iter().zip(alpha_form).map(|(&x, &a)| x as i128 * a).sum();
                num += 2 * m as i128 * pairing;
                k += 1;
            }
        }
        let den = top - gram.norm(&mu.add(&rho));
        debug_assert!(den > 0);
        debug_assert_eq!(num % den, 0, "Freudenthal quotient not integral at {mu}");
        let m = u64::try_from(num / den).expect("nonnegative multiplicity");
        mult.insert(mu.clone(), m);
    }

    Ok(mult.into_iter().filter(|(_, m)| *m > 0).collect())
}

/// Invariant form scaled by a common denominator to integer entries.
struct IntForm {
    entries: Vec<Vec<i128>>,
}

impl IntForm {
    fn new(datum: &RootDatum) -> Self {
        let g = datum.gram();
        let den = BigRational::from_integer(g.common_denominator());
        let entries = (0..g.rows())
            .map(|i| {
                (0..g.cols())
                    .map(|j| (g.get(i, j) * &den).to_integer().to_i128().expect("small form"))
                    .collect()
            })
            .collect();
        IntForm { entries }
    }

    /// `x ↦ G x`, so that `(x, y) = y · (G x)`.
    fn covector(&self, x: &Weight) -> Vec<i128> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(&x.0).map(|(&g, &v)| g * v as i128).sum())
            .collect()
    }

    fn norm(&self, x: &Weight) -> i128 {
        self.covector(x).iter().zip(&x.0).map(|(&a, &v)| a * v as i128).sum()
    }
}
