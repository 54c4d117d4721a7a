mod common;

use std::collections::BTreeSet;

use common::*;
use num_rational::BigRational;
use proptest::prelude::*;
use sepindex::reps::{expand, RepSpec};
use sepindex::separable::{character_matrix, separable_index, subset_g, torsion_primes, CharacterSupport};
use sepindex::{Limits, RationalHeight, RootDatum, TypeLetter, Weight};

fn support(d: &RootDatum, pts: &[Vec<i64>]) -> CharacterSupport {
    CharacterSupport::new(d, pts.iter().map(|p| Weight(p.clone()))).unwrap()
}

fn columns(s: &CharacterSupport) -> Vec<Vec<i64>> {
    s.characters().iter().map(|w| w.0.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pruned_enumeration_matches_powerset(
        ti in 0usize..4,
        pts in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 1..8),
    ) {
        let (l, r) = [(TypeLetter::A, 1), (TypeLetter::A, 2), (TypeLetter::G, 2), (TypeLetter::B, 3)][ti];
        let d = RootDatum::new(l, r, None).unwrap();
        let pts: Vec<Vec<i64>> = pts.into_iter().map(|p| p[..r].to_vec()).collect();
        let s = support(&d, &pts);
        prop_assert_eq!(torsion_primes(&s, &Limits::default()).unwrap(), powerset_torsion_primes(&columns(&s)));
    }

    #[test]
    fn subset_gcd_matches_minors(pts in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 2), 1..6)) {
        let d = RootDatum::new(TypeLetter::A, 2, None).unwrap();
        let s = support(&d, &pts);
        let m: Vec<Vec<i64>> = (0..2).map(|r| columns(&s).iter().map(|c| c[r]).collect()).collect();
        prop_assert_eq!(subset_g(&s).unwrap(), brute_minor_gcd(&m));
    }
}

#[test]
fn psi_dominates_height_and_torsion_primes() {
    let lim = Limits::default();
    for (l, r) in [(TypeLetter::A, 2), (TypeLetter::B, 2), (TypeLetter::C, 3), (TypeLetter::G, 2)] {
        let d = RootDatum::new(l, r, None).unwrap();
        for spec in ["standard", "adjoint", "tensor(standard,standard)", "wedge(2,standard)"] {
            let rep = separable_index(&d, &spec.parse().unwrap(), &lim).unwrap();
            assert!(rep.psi >= rep.height);
            for &p in &rep.torsion_primes {
                assert!(rep.psi.0 >= BigRational::from_integer(p.into()));
            }
            assert_eq!(rep.p_t, rep.torsion_primes.iter().max().copied().unwrap_or(1));
        }
    }
}

#[test]
fn changing_the_lattice_changes_coordinates_not_heights() {
    let lim = Limits::default();
    let sc = RootDatum::new(TypeLetter::A, 2, None).unwrap();
    let adj = RootDatum::adjoint_form(TypeLetter::A, 2).unwrap();
    let a = separable_index(&sc, &RepSpec::Adjoint, &lim).unwrap();
    let b = separable_index(&adj, &RepSpec::Adjoint, &lim).unwrap();
    assert_eq!(a.height, b.height);
    assert_eq!(a.torsion_primes, BTreeSet::from([3]));
    assert_eq!(b.torsion_primes, BTreeSet::new());
    assert_eq!(b.psi, RationalHeight::from_integer(4));
    let w = expand(&adj, &RepSpec::Adjoint, &lim).unwrap();
    let m = character_matrix(&CharacterSupport::of_multiset(&w).unwrap()).unwrap();
    assert_eq!((m.rows(), m.cols()), (2, 7));
}

#[test]
fn enumeration_is_deterministic() {
    let d = RootDatum::new(TypeLetter::B, 3, None).unwrap();
    let s = CharacterSupport::of_multiset(&expand(&d, &RepSpec::Adjoint, &Limits::default()).unwrap()).unwrap();
    let first = torsion_primes(&s, &Limits::default()).unwrap();
    for _ in 0..5 {
        assert_eq!(torsion_primes(&s, &Limits::default()).unwrap(), first);
    }
}
