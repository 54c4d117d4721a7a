//! Independent reference implementations used as test oracles.
//!
//! Nothing here calls into the library's algorithms: determinants come from
//! the Leibniz expansion, Cartan matrices from explicit Euclidean root
//! vectors, and 1-PS searches from plain enumeration.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use sepindex::TypeLetter;

/// Leibniz determinant over all permutations.
pub fn leibniz_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = BigInt::one();
        for (i, &j) in p.iter().enumerate() {
            term *= m[i][j];
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        total += term;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k×k` minors of `m`.
pub fn minors(m: &[Vec<i64>], k: usize) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
            out.push(leibniz_det(&sub));
        }
    }
    out
}

/// Rank as the size of the largest nonvanishing minor.
pub fn minor_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    (1..=rows.min(cols)).rev().find(|&k| minors(m, k).iter().any(|d| !d.is_zero())).unwrap_or(0)
}

/// Rank mod `p` as the size of the largest minor not divisible by `p`.
pub fn minor_rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let p = BigInt::from(p);
    (1..=rows.min(cols))
        .rev()
        .find(|&k| minors(m, k).iter().any(|d| !(d % &p).is_zero()))
        .unwrap_or(0)
}

/// gcd of the rank-sized minors, 1 for rank 0.
pub fn brute_minor_gcd(m: &[Vec<i64>]) -> BigInt {
    let r = minor_rank(m);
    if r == 0 {
        return BigInt::one();
    }
    minors(m, r).iter().fold(BigInt::zero(), |g, d| g.gcd(d))
}

pub fn trial_division_primes(n: &BigInt) -> BTreeSet<u64> {
    let mut n = n.abs();
    let mut out = BTreeSet::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        while (&n % d).is_zero() {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.insert(u64::try_from(n).expect("small cofactor"));
    }
    out
}

/// Torsion primes from every nonempty subset of the characters (columns
/// are the characters).
pub fn powerset_torsion_primes(characters: &[Vec<i64>]) -> BTreeSet<u64> {
    let n = characters.len();
    assert!(n <= 16, "powerset oracle is exponential");
    let rank = characters.first().map_or(0, |c| c.len());
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let cols: Vec<&Vec<i64>> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &characters[i]).collect();
        let m: Vec<Vec<i64>> = (0..rank).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        out.extend(trial_division_primes(&brute_minor_gcd(&m)));
    }
    out
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}

/// Simple roots as integer Euclidean vectors, scaled by 2 where the usual
/// realization has half-integers. Numbering as in the library (Bourbaki,
/// with the long root first for G2).
pub fn euclidean_simple_roots(letter: TypeLetter, rank: usize) -> Vec<Vec<i64>> {
    let e = |dim: usize, i: usize| -> Vec<i64> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let sub = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>();
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    let chain = |dim: usize, count: usize| -> Vec<Vec<i64>> { (0..count).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect() };
    match letter {
        TypeLetter::A => chain(rank + 1, rank),
        TypeLetter::B => {
            let mut r = chain(rank, rank - 1);
            r.push(e(rank, rank - 1));
            r
        }
        TypeLetter::C => {
            let mut r = chain(rank, rank - 1);
            r.push(e(rank, rank - 1).iter().map(|x| 2 * x).collect());
            r
        }
        TypeLetter::D => {
            let mut r = chain(rank, rank - 1);
            r.push(add(&e(rank, rank - 2), &e(rank, rank - 1)));
            r
        }
        TypeLetter::G => vec![vec![-2, 1, 1], vec![1, -1, 0]],
        // doubled, since α4 = (e1 - e2 - e3 - e4)/2
        TypeLetter::F => vec![vec![0, 2, -2, 0], vec![0, 0, 2, -2], vec![0, 0, 0, 2], vec![1, -1, -1, -1]],
        TypeLetter::E => {
            // doubled E8 roots in R^8; E6 and E7 use the first nodes
            let d = |v: Vec<i64>| v.into_iter().map(|x| 2 * x).collect::<Vec<_>>();
            let all = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                d(add(&e(8, 0), &e(8, 1))),
                d(sub(&e(8, 1), &e(8, 0))),
                d(sub(&e(8, 2), &e(8, 1))),
                d(sub(&e(8, 3), &e(8, 2))),
                d(sub(&e(8, 4), &e(8, 3))),
                d(sub(&e(8, 5), &e(8, 4))),
                d(sub(&e(8, 6), &e(8, 5))),
            ];
            all.into_iter().take(rank).collect()
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `cartan[i][j] = 2 (α_j, α_i) / (α_i, α_i)` from Euclidean vectors.
pub fn euclidean_cartan(letter: TypeLetter, rank: usize) -> Vec<Vec<i64>> {
    let roots = euclidean_simple_roots(letter, rank);
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let num = 2 * dot(&roots[j], &roots[i]);
                    let den = dot(&roots[i], &roots[i]);
                    assert_eq!(num % den, 0);
                    num / den
                })
                .collect()
        })
        .collect()
}

/// Gram matrix of the simple coroots, with the form rescaled so that
/// short roots have squared length 2.
pub fn coroot_gram(letter: TypeLetter, rank: usize) -> Vec<Vec<BigRational>> {
    let roots = euclidean_simple_roots(letter, rank);
    let short = roots.iter().map(|r| dot(r, r)).min().expect("nonempty");
    // rescale (x, y) ↦ 2 (x, y) / short
    let form = |a: &[i64], b: &[i64]| BigRational::new(BigInt::from(2 * dot(a, b)), BigInt::from(short));
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let ai = form(&roots[i], &roots[i]);
                    let aj = form(&roots[j], &roots[j]);
                    // α^∨ = 2α / (α, α)
                    BigRational::from_integer(4.into()) * form(&roots[i], &roots[j]) / (ai * aj)
                })
                .collect()
        })
        .collect()
}

pub fn coweight_norm(gram: &[Vec<BigRational>], n: &[i64]) -> BigRational {
    let mut total = BigRational::zero();
    for i in 0..n.len() {
        for j in 0..n.len() {
            total += &gram[i][j] * BigInt::from(n[i] * n[j]);
        }
    }
    total
}

/// Result of scanning all integral 1-PS in a box.
pub struct OneParamSearch {
    /// Some cocharacter pairs strictly positively with the whole support.
    pub destabilized: bool,
    /// Largest `m² / ‖λ‖²` over destabilizing λ, `m` the minimum pairing.
    pub best_value: Option<BigRational>,
    pub best: Vec<Vec<i64>>,
}

pub fn box_points(rank: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn search_one_ps(letter: TypeLetter, rank: usize, support: &[Vec<i64>], bound: i64) -> OneParamSearch {
    let gram = coroot_gram(letter, rank);
    let mut destabilized = false;
    let mut best_value: Option<BigRational> = None;
    let mut best = Vec::new();
    for lambda in box_points(rank, bound) {
        if lambda.iter().all(|&x| x == 0) {
            continue;
        }
        let m = support.iter().map(|chi| dot(&lambda, chi)).min().expect("nonempty support");
        if m <= 0 {
            continue;
        }
        destabilized = true;
        let v = BigRational::from_integer(BigInt::from(m * m)) / coweight_norm(&gram, &lambda);
        match &best_value {
            Some(b) if v < *b => {}
            Some(b) if v == *b => best.push(lambda),
            _ => {
                best_value = Some(v);
                best = vec![lambda];
            }
        }
    }
    OneParamSearch { destabilized, best_value, best }
}

/// Multiset Minkowski sum by direct double loop.
pub fn minkowski(a: &BTreeMap<Vec<i64>, u64>, b: &BTreeMap<Vec<i64>, u64>) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    for (x, m) in a {
        for (y, n) in b {
            let s: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(s).or_insert(0) += m * n;
        }
    }
    out
}

/// Types of rank at most 3 used for random GIT supports.
pub const SMALL_TYPES: [(TypeLetter, usize); 7] = [
    (TypeLetter::A, 1),
    (TypeLetter::A, 2),
    (TypeLetter::B, 2),
    (TypeLetter::G, 2),
    (TypeLetter::A, 3),
    (TypeLetter::B, 3),
    (TypeLetter::C, 3),
];

pub fn random_support(rng: &mut impl Rng, rank: usize, max_points: usize, bound: i64) -> Vec<Vec<i64>> {
    let n = rng.gen_range(1..=max_points);
    let set: BTreeSet<Vec<i64>> =
        (0..n).map(|_| (0..rank).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
    set.into_iter().collect()
}
