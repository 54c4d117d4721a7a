mod common;

use common::*;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sepindex::lattice::{is_prime, prime_factors, rank_minor_gcd, rank_mod_p, smith_normal_form, IntMatrix};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-10i64..=10, c), r))
}

proptest! {
    #[test]
    fn smith_form_is_a_valid_decomposition(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).unwrap().mul(&s.v).unwrap(), s.d.clone());
        prop_assert!(s.u.determinant().unwrap().abs().is_one());
        prop_assert!(s.v.determinant().unwrap().abs().is_one());
        for w in s.elementary_divisors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(s.rank(), minor_rank(&rows));
    }

    #[test]
    fn minor_gcd_matches_explicit_minors(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(rank_minor_gcd(&m), brute_minor_gcd(&rows));
    }

    #[test]
    fn determinant_matches_leibniz(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rand::Rng::gen_range(&mut rng, -9..=9)).collect()).collect();
        prop_assert_eq!(IntMatrix::from_rows(&rows).unwrap().determinant().unwrap(), leibniz_det(&rows));
    }

    #[test]
    fn rank_mod_p_matches_minors(rows in matrix(), pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][pi];
        let m = IntMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(rank_mod_p(&m, p).unwrap(), minor_rank_mod_p(&rows, p));
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..1_000_000) {
        let primes = prime_factors(&BigUint::from(n));
        let mut rest = n;
        for &p in &primes {
            prop_assert!(is_prime(p));
            while rest % p == 0 {
                rest /= p;
            }
        }
        prop_assert_eq!(rest, 1);
    }
}

#[test]
fn rank_mod_p_rejects_composites() {
    let m = IntMatrix::identity(2);
    assert!(rank_mod_p(&m, 4).is_err());
    assert!(rank_mod_p(&m, 1).is_err());
}

#[test]
fn prime_test_agrees_with_trial_division() {
    let small = primes_up_to(2000);
    for n in 0..=2000u64 {
        assert_eq!(is_prime(n), small.contains(&n), "{n}");
    }
    // Mersenne prime and a Carmichael number
    assert!(is_prime((1 << 61) - 1));
    assert!(!is_prime(561));
}

#[test]
fn gcd_of_a_zero_matrix_is_one() {
    assert_eq!(rank_minor_gcd(&IntMatrix::zeros(3, 2)), BigInt::one());
}
