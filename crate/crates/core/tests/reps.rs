mod common;

use std::collections::BTreeMap;

use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use sepindex::reps::{
    expand, irreducible_height, rep_height, restrict_to_levi, spec_dimension, weyl_dimension, weyl_module_weights,
    RepSpec, WeightMultiset,
};
use sepindex::{Limits, RationalHeight, RootDatum, TypeLetter, Weight};

fn datum(l: TypeLetter, r: usize) -> RootDatum {
    RootDatum::new(l, r, None).unwrap()
}

fn as_map(w: &WeightMultiset) -> BTreeMap<Vec<i64>, u64> {
    w.entries().iter().map(|(k, &m)| (k.0.clone(), m)).collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

const SMALL: [(TypeLetter, usize); 6] = [
    (TypeLetter::A, 1),
    (TypeLetter::A, 2),
    (TypeLetter::A, 3),
    (TypeLetter::B, 2),
    (TypeLetter::C, 3),
    (TypeLetter::G, 2),
];

fn small_irreducible() -> impl Strategy<Value = (RootDatum, Weight)> {
    prop::sample::select(SMALL.to_vec()).prop_flat_map(|(l, r)| {
        proptest::collection::vec(0i64..=2, r).prop_map(move |v| (datum(l, r), Weight(v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_modules_are_invariant_and_balanced((d, lambda) in small_irreducible()) {
        let w = weyl_module_weights(&d, &lambda, &Limits::default()).unwrap();
        prop_assert!(w.is_weyl_invariant());
        prop_assert!(w.has_zero_weighted_sum());
        prop_assert_eq!(BigUint::from(w.dimension()), weyl_dimension(&d, &lambda).unwrap());
        prop_assert_eq!(rep_height(&w).unwrap(), irreducible_height(&d, &lambda).unwrap());
        // every weight lies below λ
        for mu in w.entries().keys() {
            prop_assert!(d.dominance_leq(&d.dominant_representative(mu), &lambda));
        }
    }

    #[test]
    fn tensor_is_the_minkowski_sum((d, a) in small_irreducible(), b in proptest::collection::vec(0i64..=1, 3)) {
        let lim = Limits::default();
        let b = Weight(b[..d.rank()].to_vec());
        let wa = weyl_module_weights(&d, &a, &lim).unwrap();
        let wb = weyl_module_weights(&d, &b, &lim).unwrap();
        let t = wa.tensor(&wb, &lim).unwrap();
        prop_assert_eq!(as_map(&t), minkowski(&as_map(&wa), &as_map(&wb)));
        prop_assert_eq!(t.dimension(), wa.dimension() * wb.dimension());
    }
}

#[test]
fn spec_examples() {
    let lim = Limits::default();
    let a1 = datum(TypeLetter::A, 1);
    let t = expand(&a1, &"tensor(std,std)".parse().unwrap(), &lim).unwrap();
    assert_eq!(as_map(&t), BTreeMap::from([(vec![2], 1), (vec![0], 2), (vec![-2], 1)]));
    let a2 = datum(TypeLetter::A, 2);
    let d = expand(&a2, &"dual(standard)".parse().unwrap(), &lim).unwrap();
    assert_eq!(as_map(&d), BTreeMap::from([(vec![0, 1], 1), (vec![1, -1], 1), (vec![-1, 0], 1)]));
    let v = expand(&a2, &"adjoint".parse().unwrap(), &lim).unwrap();
    assert_eq!(expand(&a2, &"tensor(adjoint,trivial)".parse().unwrap(), &lim).unwrap(), v);
}

#[test]
fn powers_of_the_standard_representation() {
    let lim = Limits::default();
    for n in 2..=5usize {
        let d = datum(TypeLetter::A, n - 1);
        for k in 0..=n as u32 {
            let wedge = expand(&d, &RepSpec::ExteriorPower(k, Box::new(RepSpec::Standard)), &lim).unwrap();
            assert_eq!(wedge.dimension(), binomial(n as u64, k as u64));
            let sym = expand(&d, &RepSpec::SymmetricPower(k, Box::new(RepSpec::Standard)), &lim).unwrap();
            assert_eq!(sym.dimension(), binomial(n as u64 + k as u64 - 1, k as u64));
            // Λ^k and S^k of the standard module are irreducible
            if (1..n as u32).contains(&k) {
                let hw = Weight((0..n - 1).map(|i| i64::from(i + 1 == k as usize)).collect());
                assert_eq!(wedge, weyl_module_weights(&d, &hw, &lim).unwrap());
            }
            let mut top = vec![0; n - 1];
            top[0] = k as i64;
            assert_eq!(sym, weyl_module_weights(&d, &Weight(top), &lim).unwrap());
        }
    }
}

#[test]
fn spec_dimension_matches_expansion() {
    let lim = Limits::default();
    let d = datum(TypeLetter::B, 2);
    for s in ["sum(standard,adjoint)", "tensor(standard,dual(adjoint))", "wedge(2,standard)", "sym(3,hw(0,1))"] {
        let spec: RepSpec = s.parse().unwrap();
        let w = expand(&d, &spec, &lim).unwrap();
        assert_eq!(spec_dimension(&d, &spec).unwrap(), BigUint::from(w.dimension()), "{s}");
    }
}

#[test]
fn heights_of_standard_representations() {
    for n in 2..=9usize {
        let d = datum(TypeLetter::A, n - 1);
        let w = expand(&d, &RepSpec::Standard, &Limits::default()).unwrap();
        assert_eq!(rep_height(&w).unwrap(), RationalHeight::from_integer(n as i64 - 1));
    }
}

#[test]
fn levi_restriction_keeps_the_character() {
    let lim = Limits::default();
    let a3 = datum(TypeLetter::A, 3);
    let w = expand(&a3, &RepSpec::Standard, &lim).unwrap();
    let r = restrict_to_levi(&w, &[0, 1]).unwrap();
    assert_eq!(r.dimension(), 4);
    // standard of A2 plus a trivial summand
    let a2 = datum(TypeLetter::A, 2);
    let expected: BTreeMap<Vec<i64>, u64> = expand(&a2, &"sum(standard,trivial)".parse().unwrap(), &lim)
        .unwrap()
        .entries()
        .iter()
        .map(|(k, &m)| (k.0.clone(), m))
        .collect();
    assert_eq!(as_map(&r), expected);
}

#[test]
fn guards_fire_instead_of_truncating() {
    let d = datum(TypeLetter::E, 8);
    let huge = Weight(vec![3, 3, 3, 3, 3, 3, 3, 3]);
    let err = weyl_module_weights(&d, &huge, &Limits::default()).unwrap_err();
    assert!(err.is_guard());
}
