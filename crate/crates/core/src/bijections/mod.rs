//! Weight-preserving bijections between classes of partitions.
//!
//! * [`f_bijection`]: slide insertion `P_a × P_b → P_{a+b} × R_{b,a}`;
//! * [`b_bijection`]: pairs `(λ, i)` with `i` occurring `i` times ↔
//!   partitions with a 0-fixed first-column hook at a part `i`;
//! * [`mex_map`]: `-1`-fixed hooks at a part `k` ↔ partitions counted by
//!   `M_k`, adding `binom(k, 2)` to the weight.
//!
//! Every map has a `*_traced` variant returning a [`BijectionRecord`] with the
//! intermediate pieces, used by the CLI audit output.

mod fixed_hook;
mod insertion;
mod mex;

pub use fixed_hook::{b_bijection, b_bijection_traced, b_inverse, b_inverse_traced};
pub use insertion::{f_bijection, f_bijection_traced, f_inverse, f_inverse_traced, insert_part, SlideTrace};
pub use mex::{mex_map, mex_map_inverse, mex_map_inverse_traced, mex_map_traced};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{Partition, PartitionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("cannot insert a part of size {0}; inserted parts must be positive")]
    NonPositiveInsert(i64),
    #[error("{name} has {len} parts but at most {max} are allowed")]
    TooManyParts { name: &'static str, len: usize, max: usize },
    #[error("{name} has a part {part} larger than {max}")]
    PartTooLarge { name: &'static str, part: u32, max: u32 },
    #[error("part {part} occurs {found} times, expected exactly {part}")]
    MultiplicityMismatch { part: u32, found: usize },
    #[error("partition has no {0}-fixed first-column hook")]
    NoFixedHook(i64),
    #[error("partition has {found} parts, expected {expected}")]
    PartCount { expected: usize, found: usize },
    #[error("mex is {found}, expected {expected}")]
    MexMismatch { expected: u32, found: u32 },
    #[error("{smaller} parts below {k} but only {larger} above it; need below <= above - 1")]
    PartCountInequality { k: u32, larger: usize, smaller: usize },
    #[error("slide counts are not a partition: {0:?}")]
    SlidesNotPartition(Vec<usize>),
    #[error("inconsistent trace: {0}")]
    InconsistentTrace(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Either one partition or an ordered pair, in the canonical JSON format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Single(Partition),
    Pair(Partition, Partition),
}

impl std::fmt::Display for Payload {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Payload::Single(p) => write!(f, "{p}"),
            Payload::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intermediates {
    pub tau: Option<Partition>,
    pub epsilon_prime: Option<Partition>,
    pub gamma: Option<Partition>,
    pub rho: Option<Partition>,
    pub k: Option<u32>,
    pub s: Option<usize>,
}

/// Audit trail of one application of a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionRecord {
    pub map: String,
    pub input: Payload,
    pub i_or_k: Option<u32>,
    pub intermediates: Intermediates,
    pub output: Payload,
}

impl BijectionRecord {
    pub(crate) fn single_output(&self) -> Partition {
        match &self.output {
            Payload::Single(p) => p.clone(),
            Payload::Pair(..) => unreachable!("map {} has a single output", self.map),
        }
    }

    pub(crate) fn pair_output(&self) -> (Partition, Partition) {
        match &self.output {
            Payload::Pair(a, b) => (a.clone(), b.clone()),
            Payload::Single(_) => unreachable!("map {} has a pair output", self.map),
        }
    }
}
