//! Root data of simple types, weights, and the linear height function.
//!
//! Conventions used throughout the crate:
//!
//! * weights are integer vectors in fundamental-weight coordinates of the
//!   simply-connected form, so `⟨λ, α_i^∨⟩` is simply the `i`-th coordinate;
//! * `cartan[i][j] = ⟨α_j, α_i^∨⟩`, so the simple root `α_j` is the `j`-th
//!   column of the Cartan matrix;
//! * simple roots are numbered as in Bourbaki, except for `G2` where `α1` is
//!   the long root (this is what makes the `G2` Cartan matrix come out as
//!   `[[2, -1], [-3, 2]]` under the convention above);
//! * the invariant inner product gives short roots squared length 2.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{invert_rational, IntMatrix, RatMatrix};

/// Integer weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// Exact rational value, written as `"num/den"` on the wire.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RationalHeight(pub BigRational);

impl RationalHeight {
    pub fn zero() -> Self {
        RationalHeight(BigRational::zero())
    }

    pub fn from_integer(n: i64) -> Self {
        RationalHeight(BigRational::from_integer(n.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// Smallest integer not below the value.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: BigInt = n.trim().parse().map_err(|_| Error::parse(0, format!("bad rational {s:?}")))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::parse(0, format!("bad rational {s:?}")))?;
        if d.is_zero() {
            return Err(Error::parse(0, "zero denominator"));
        }
        Ok(RationalHeight(BigRational::new(n, d)))
    }
}

impl fmt::Display for RationalHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for RationalHeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalHeight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        RationalHeight::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLetter {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => TypeLetter::A,
            'B' => TypeLetter::B,
            'C' => TypeLetter::C,
            'D' => TypeLetter::D,
            'E' => TypeLetter::E,
            'F' => TypeLetter::F,
            'G' => TypeLetter::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            TypeLetter::A => 'A',
            TypeLetter::B => 'B',
            TypeLetter::C => 'C',
            TypeLetter::D => 'D',
            TypeLetter::E => 'E',
            TypeLetter::F => 'F',
            TypeLetter::G => 'G',
        }
    }

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            TypeLetter::A => rank >= 1,
            TypeLetter::B | TypeLetter::C => rank >= 2,
            TypeLetter::D => rank >= 3,
            TypeLetter::E => (6..=8).contains(&rank),
            TypeLetter::F => rank == 4,
            TypeLetter::G => rank == 2,
        }
    }
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// What a datum was built from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DatumKind {
    Simple { letter: TypeLetter, rank: usize },
    /// Semisimple part of a standard Levi subgroup: the simple roots of
    /// `parent` listed in `subset` (0-based).
    Levi { parent: String, subset: Vec<usize> },
}

/// Cartan matrix of a simple type under `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
pub fn cartan_matrix(letter: TypeLetter, rank: usize) -> Result<Vec<Vec<i64>>> {
    if !letter.admits_rank(rank) {
        return Err(Error::InadmissibleType { letter: letter.as_char(), rank });
    }
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let bond = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match letter {
        TypeLetter::A => (0..n - 1).for_each(|i| bond(&mut c, i, i + 1)),
        TypeLetter::B => {
            (0..n - 1).for_each(|i| bond(&mut c, i, i + 1));
            // α_n short
            c[n - 1][n - 2] = -2;
        }
        TypeLetter::C => {
            (0..n - 1).for_each(|i| bond(&mut c, i, i + 1));
            // α_n long
            c[n - 2][n - 1] = -2;
        }
        TypeLetter::D => {
            (0..n - 2).for_each(|i| bond(&mut c, i, i + 1));
            bond(&mut c, n - 3, n - 1);
        }
        TypeLetter::E => {
            bond(&mut c, 0, 2);
            bond(&mut c, 1, 3);
            (2..n - 1).for_each(|i| bond(&mut c, i, i + 1));
        }
        TypeLetter::F => {
            (0..3).for_each(|i| bond(&mut c, i, i + 1));
            // α1, α2 long; α3, α4 short
            c[2][1] = -2;
        }
        TypeLetter::G => {
            // α1 long, α2 short
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    Ok(c)
}

struct Inner {
    kind: DatumKind,
    cartan: Vec<Vec<i64>>,
    cartan_inv: RatMatrix,
    lattice_basis: IntMatrix,
    lattice_inv: RatMatrix,
    symmetrizer: Vec<i64>,
    gram: RatMatrix,
    height_row: Vec<BigRational>,
    positive_roots: Vec<Weight>,
    root_coeffs: Vec<Vec<i64>>,
    components: Vec<Vec<usize>>,
}

/// A root datum: Cartan matrix plus the character lattice, as a cheap
/// shared handle. Immutable once built.
#[derive(Clone)]
pub struct RootDatum(Arc<Inner>);

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind
                && self.0.cartan == other.0.cartan
                && self.0.lattice_basis == other.0.lattice_basis)
    }
}

impl Eq for RootDatum {}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}, lattice {:?})", self.label(), self.0.lattice_basis)
    }
}

/// Builds the datum of a simple type. `lattice_basis` defaults to the
/// identity (the full weight lattice, i.e. the simply-connected form).
pub fn make_datum(
    letter: TypeLetter,
    rank: usize,
    lattice_basis: Option<IntMatrix>,
) -> Result<RootDatum> {
    RootDatum::new(letter, rank, lattice_basis)
}

impl RootDatum {
    pub fn new(letter: TypeLetter, rank: usize, lattice_basis: Option<IntMatrix>) -> Result<Self> {
        let cartan = cartan_matrix(letter, rank)?;
        let basis = lattice_basis.unwrap_or_else(|| IntMatrix::identity(rank));
        Self::from_cartan(DatumKind::Simple { letter, rank }, cartan, basis)
    }

    /// Simply-connected form of a simple type.
    pub fn simply_connected(letter: TypeLetter, rank: usize) -> Result<Self> {
        Self::new(letter, rank, None)
    }

    /// Adjoint form: the character lattice is the root lattice.
    pub fn adjoint_form(letter: TypeLetter, rank: usize) -> Result<Self> {
        let c = cartan_matrix(letter, rank)?;
        let basis = IntMatrix::from_rows(&c)?;
        Self::new(letter, rank, Some(basis))
    }

    fn from_cartan(kind: DatumKind, cartan: Vec<Vec<i64>>, lattice_basis: IntMatrix) -> Result<Self> {
        let n = cartan.len();
        if lattice_basis.rows() != n || lattice_basis.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: if lattice_basis.rows() != n { lattice_basis.rows() } else { lattice_basis.cols() },
            });
        }
        let lattice_inv =
            invert_rational(&lattice_basis).map_err(|_| Error::SingularLatticeBasis)?;
        let cartan_int = IntMatrix::from_rows(&cartan)?;
        let cartan_inv = invert_rational(&cartan_int)?;

        let components = components_of(&cartan);
        let symmetrizer = symmetrizer_of(&cartan, &components);

        let mut gram = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gram.set(i, j, cartan_inv.get(i, j) * BigInt::from(symmetrizer[i]));
            }
        }
        let height_row = (0..n)
            .map(|j| (0..n).fold(BigRational::zero(), |acc, i| acc + cartan_inv.get(i, j)))
            .collect();

        let root_coeffs = positive_root_coefficients(&cartan);
        let positive_roots = root_coeffs
            .iter()
            .map(|c| Weight((0..n).map(|k| (0..n).map(|j| cartan[k][j] * c[j]).sum()).collect()))
            .collect();

        let datum = RootDatum(Arc::new(Inner {
            kind,
            cartan,
            cartan_inv,
            lattice_basis,
            lattice_inv,
            symmetrizer,
            gram,
            height_row,
            positive_roots,
            root_coeffs,
            components,
        }));
        // X(T) has to contain the roots
        for i in 0..n {
            let a = datum.simple_root(i);
            if datum.lattice_coordinates(&a).is_none() {
                return Err(Error::NotInLattice { weight: a.to_string() });
            }
        }
        Ok(datum)
    }

    /// Semisimple part of the standard Levi subgroup generated by the listed
    /// simple roots (0-based). Its weights are expressed by pairing with the
    /// retained coroots; its character lattice is the full weight lattice.
    pub fn levi(&self, subset: &[usize]) -> Result<RootDatum> {
        let n = self.rank();
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        if set.is_empty() || set.len() >= n || set.len() != subset.len() {
            return Err(Error::InvalidSubset(format!("{subset:?} in rank {n}")));
        }
        if let Some(&bad) = set.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidSubset(format!("index {bad} out of range for rank {n}")));
        }
        let idx: Vec<usize> = set.into_iter().collect();
        let cartan = idx.iter().map(|&i| idx.iter().map(|&j| self.0.cartan[i][j]).collect()).collect();
        let kind = DatumKind::Levi { parent: self.label(), subset: idx.clone() };
        Self::from_cartan(kind, cartan, IntMatrix::identity(idx.len()))
    }

    pub fn rank(&self) -> usize {
        self.0.cartan.len()
    }

    pub fn kind(&self) -> &DatumKind {
        &self.0.kind
    }

    pub fn type_letter(&self) -> Option<TypeLetter> {
        match self.0.kind {
            DatumKind::Simple { letter, .. } => Some(letter),
            DatumKind::Levi { .. } => None,
        }
    }

    /// `"A2"`, or `"A3[0,1]"` for a Levi datum.
    pub fn label(&self) -> String {
        match &self.0.kind {
            DatumKind::Simple { letter, rank } => format!("{letter}{rank}"),
            DatumKind::Levi { parent, subset } => {
                let s: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
                format!("{parent}[{}]", s.join(","))
            }
        }
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.0.cartan
    }

    pub fn cartan_inverse(&self) -> &RatMatrix {
        &self.0.cartan_inv
    }

    pub fn lattice_basis(&self) -> &IntMatrix {
        &self.0.lattice_basis
    }

    pub fn is_simply_connected_form(&self) -> bool {
        self.0.lattice_basis == IntMatrix::identity(self.rank())
    }

    /// `(α_i, α_i) / 2` for each simple root; 1 on short roots.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.0.symmetrizer
    }

    /// Gram matrix of the invariant inner product in fundamental-weight
    /// coordinates.
    pub fn gram(&self) -> &RatMatrix {
        &self.0.gram
    }

    pub fn inner_product(&self, x: &Weight, y: &Weight) -> BigRational {
        self.0.gram.bilinear(&x.0, &y.0)
    }

    /// Connected components of the Dynkin diagram.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.0.components
    }

    pub fn is_simple(&self) -> bool {
        self.0.components.len() == 1
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: w.rank() });
        }
        Ok(())
    }

    /// Simple root `α_i` (0-based) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.0.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// Positive roots, sorted by height then coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.0.positive_roots
    }

    /// Simple-root coefficients of the positive roots, parallel to
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.0.root_coeffs
    }

    /// The highest root; only defined for an irreducible root system.
    pub fn highest_root(&self) -> Result<Weight> {
        if !self.is_simple() {
            return Err(Error::Unsupported(format!("{} is not irreducible", self.label())));
        }
        // roots are sorted by height and the highest root is the unique root
        // of maximal height
        Ok(self.0.positive_roots.last().expect("nonempty root system").clone())
    }

    /// Coordinates of `λ` in the simple-root basis.
    pub fn root_coordinates(&self, lambda: &Weight) -> Vec<BigRational> {
        self.0.cartan_inv.apply(&lambda.0)
    }

    /// Sum of the simple-root coordinates of `λ`.
    pub fn weight_height(&self, lambda: &Weight) -> RationalHeight {
        debug_assert_eq!(lambda.rank(), self.rank());
        let h = self
            .0
            .height_row
            .iter()
            .zip(&lambda.0)
            .filter(|(_, &x)| x != 0)
            .fold(BigRational::zero(), |acc, (r, &x)| acc + r * BigInt::from(x));
        RationalHeight(h)
    }

    /// `s_i(λ) = λ - ⟨λ, α_i^∨⟩ α_i`
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.0[i];
        if c == 0 {
            return lambda.clone();
        }
        Weight(lambda.0.iter().enumerate().map(|(k, &x)| x - c * self.0.cartan[k][i]).collect())
    }

    /// Dual reflection on a cocharacter given in simple-coroot coordinates:
    /// `s_i(λ) = λ - ⟨α_i, λ⟩ α_i^∨`.
    pub fn reflect_coweight(&self, i: usize, coweight: &[i64]) -> Vec<i64> {
        let pairing: i64 = (0..self.rank()).map(|k| self.0.cartan[k][i] * coweight[k]).sum();
        let mut out = coweight.to_vec();
        out[i] -= pairing;
        out
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    /// The dominant weight in the Weyl orbit of `λ`.
    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut w = lambda.clone();
        while let Some(i) = w.0.iter().position(|&x| x < 0) {
            w = self.reflect(i, &w);
        }
        w
    }

    /// Weyl orbit of `λ`, refusing to build orbits larger than `cap`.
    pub fn weyl_orbit(&self, lambda: &Weight, cap: usize) -> Result<BTreeSet<Weight>> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w.0[i] == 0 {
                    continue;
                }
                let r = self.reflect(i, &w);
                if seen.insert(r.clone()) {
                    if seen.len() > cap {
                        return Err(Error::guard("Weyl orbit size", seen.len() as u128, cap as u128));
                    }
                    queue.push_back(r);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Size of the Weyl orbit of a dominant weight, without enumerating it:
    /// `|W| / |W_λ|` where `W_λ` is the parabolic subgroup fixing `λ`.
    pub fn orbit_size(&self, lambda: &Weight) -> u128 {
        let dominant = self.dominant_representative(lambda);
        let full = weyl_group_order(self.cartan());
        let fixed: Vec<usize> = (0..self.rank()).filter(|&i| dominant.0[i] == 0).collect();
        let sub: Vec<Vec<i64>> =
            fixed.iter().map(|&i| fixed.iter().map(|&j| self.0.cartan[i][j]).collect()).collect();
        full / weyl_group_order(&sub)
    }

    /// `μ ≤ λ`: the difference `λ - μ` is a nonnegative integral
    /// combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.root_coordinates(&lambda.sub(mu))
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Whether `λ - μ` lies in the root lattice.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_coordinates(w).iter().all(|c| c.is_integer())
    }

    /// Coordinates of a weight in the character-lattice basis, or `None`
    /// when the weight is not a character of this form.
    pub fn lattice_coordinates(&self, w: &Weight) -> Option<Vec<i64>> {
        self.0
            .lattice_inv
            .apply(&w.0)
            .into_iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    /// Coxeter number `h = 2|R⁺| / rank` (irreducible systems only).
    pub fn coxeter_number(&self) -> Option<usize> {
        self.is_simple().then(|| 2 * self.0.positive_roots.len() / self.rank())
    }
}

fn components_of(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Integers `d_i` with `d_i c_ij = d_j c_ji`, smallest equal to 1 on each
/// component.
fn symmetrizer_of(cartan: &[Vec<i64>], components: &[Vec<usize>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for comp in components {
        d[comp[0]] = Some(BigRational::one());
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * BigInt::from(cartan[i][j]) / BigInt::from(cartan[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    let mut out = vec![0i64; n];
    for comp in components {
        let lcm = comp.iter().fold(BigInt::one(), |acc, &i| acc.lcm(d[i].as_ref().unwrap().denom()));
        let ints: Vec<BigInt> =
            comp.iter().map(|&i| (d[i].as_ref().unwrap() * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, x) in comp.iter().zip(ints) {
            out[i] = (x / &g).to_i64().expect("small symmetrizer");
        }
    }
    out
}

/// Positive roots in simple-root coordinates, by height-layered closure
/// under root strings.
fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut set: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut down = 0;
                loop {
                    let mut g = beta.clone();
                    g[i] -= down + 1;
                    if !set.contains(&g) {
                        break;
                    }
                    down += 1;
                }
                if down - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| a.cmp(b)));
    all
}

/// Order of the Weyl group of a (possibly reducible or empty) Cartan
/// matrix: the product of the degrees over all components.
fn weyl_group_order(cartan: &[Vec<i64>]) -> u128 {
    if cartan.is_empty() {
        return 1;
    }
    components_of(cartan)
        .iter()
        .map(|comp| {
            let sub: Vec<Vec<i64>> =
                comp.iter().map(|&i| comp.iter().map(|&j| cartan[i][j]).collect()).collect();
            let roots = positive_root_coefficients(&sub);
            exponent_product(&roots, sub.len())
        })
        .product()
}

/// `Π (m_i + 1)` where `m_i` are the exponents, read off from the
/// height distribution of the positive roots (the partition dual to it).
fn exponent_product(roots: &[Vec<i64>], rank: usize) -> u128 {
    let max_h = roots.iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(0) as usize;
    let mut count = vec![0usize; max_h + 2];
    for r in roots {
        count[r.iter().sum::<i64>() as usize] += 1;
    }
    debug_assert_eq!(count[1], rank);
    // the number of exponents ≥ k equals the number of roots of height k
    let mut product: u128 = 1;
    for k in 1..=max_h {
        let ge_k = count[k];
        let ge_next = count[k + 1];
        // exponents exactly equal to k
        let eq = ge_k - ge_next;
        product *= ((k + 1) as u128).pow(eq as u32);
    }
    product
}
