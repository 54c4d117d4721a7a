use serde::{Deserialize, Serialize};

/// Size guards for the enumerations that can blow up with rank.
///
/// Exceeding any of them is reported as [`Error::GuardExceeded`]
/// (`crate::Error`); nothing is ever sampled or truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest Weyl orbit that will be materialised.
    pub max_orbit: usize,
    /// Largest representation dimension that will be expanded into weights.
    pub max_dimension: u64,
    /// Largest number of candidate character subsets for torsion primes.
    pub max_subsets: u64,
    /// Largest number of candidate faces in the minimal-norm search.
    pub max_faces: u64,
}

impl Limits {
    /// All guards set to the same cap.
    pub fn uniform(cap: u64) -> Self {
        Limits {
            max_orbit: usize::try_from(cap).unwrap_or(usize::MAX),
            max_dimension: cap,
            max_subsets: cap,
            max_faces: cap,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_orbit: 1_000_000,
            max_dimension: 2_000_000,
            max_subsets: 5_000_000,
            max_faces: 5_000_000,
        }
    }
}
