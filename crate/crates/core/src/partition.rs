//! Integer partitions, their Young-diagram hook lengths, and the part
//! statistics used throughout the crate.
//!
//! Positions are 1-based everywhere: `part(1)` is the largest part and
//! `hook_length(i, j)` addresses row `i`, column `j` of the diagram.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part at position {index} is {value}; parts must be positive")]
    NonPositive { index: usize, value: i64 },
    #[error("part at position {index} is too large ({value})")]
    TooLarge { index: usize, value: i64 },
    #[error("parts increase at position {index}: {left} < {right}")]
    Increasing { index: usize, left: i64, right: i64 },
    #[error("box ({row}, {col}) lies outside the Young diagram")]
    OutsideDiagram { row: usize, col: usize },
    #[error("hook sequence is not strictly decreasing at position {index}")]
    BadHookSequence { index: usize },
    #[error("malformed partition text: {0}")]
    Parse(String),
}

/// A finite nonincreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

/// An `h`-fixed hook: position `s` with `h_{s,1} = s + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedHookReport {
    pub position: usize,
    pub hook: u32,
    pub offset: i64,
    pub part: u32,
}

impl Partition {
    /// Validates `parts`, which must already be nonincreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (idx, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::NonPositive { index: idx + 1, value: 0 });
            }
        }
        for (idx, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::Increasing { index: idx + 1, left: w[0].into(), right: w[1].into() });
            }
        }
        Ok(Self { parts })
    }

    /// Validating constructor for signed input such as parsed JSON.
    pub fn from_ints<I: IntoIterator<Item = i64>>(ints: I) -> Result<Self, PartitionError> {
        let mut parts = Vec::new();
        for (idx, v) in ints.into_iter().enumerate() {
            if v <= 0 {
                return Err(PartitionError::NonPositive { index: idx + 1, value: v });
            }
            let p = u32::try_from(v).map_err(|_| PartitionError::TooLarge { index: idx + 1, value: v })?;
            parts.push(p);
        }
        Self::new(parts)
    }

    /// Drops zero entries from a nonincreasing sequence, as produced by
    /// padded internal computations.
    pub(crate) fn from_padded(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Sum of the parts, `n`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts, `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part in row `i` (1-based).
    pub fn part(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|idx| self.parts.get(idx).copied())
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Self {
        let width = self.largest_part() as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self { parts: conj }
    }

    /// Length of column `j`, i.e. `λ'_j`.
    pub fn column_length(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.partition_point(|&p| p as usize >= j)
    }

    /// `h_{i,j} = λ_i + λ'_j − i − j + 1` for a box `(i, j)` of the diagram.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<u32, PartitionError> {
        match self.part(i) {
            Some(p) if j >= 1 && j <= p as usize => {
                let h = p as usize + self.column_length(j) + 1 - i - j;
                Ok(h as u32)
            }
            _ => Err(PartitionError::OutsideDiagram { row: i, col: j }),
        }
    }

    /// First-column hook lengths `(h_{1,1}, …, h_{t,1})`, i.e. `λ_i + t − i`.
    /// Strictly decreasing; these are the beta-numbers of the partition.
    pub fn first_column_hooks(&self) -> Vec<u32> {
        let t = self.parts.len();
        self.parts.iter().enumerate().map(|(idx, &p)| p + (t - idx - 1) as u32).collect()
    }

    /// Inverse of [`first_column_hooks`](Self::first_column_hooks).
    pub fn from_first_column_hooks(hooks: &[u32]) -> Result<Self, PartitionError> {
        let t = hooks.len();
        let mut parts = Vec::with_capacity(t);
        for (idx, &b) in hooks.iter().enumerate() {
            let shift = (t - idx - 1) as u32;
            if b <= shift || (idx > 0 && hooks[idx - 1] <= b) {
                return Err(PartitionError::BadHookSequence { index: idx + 1 });
            }
            parts.push(b - shift);
        }
        Self::new(parts)
    }

    /// The unique position `s` with `h_{s,1} = s + h`, if any.
    pub fn find_h_fixed_hook(&self, h: i64) -> Option<FixedHookReport> {
        let t = self.parts.len() as i64;
        // h_{s,1} - s = λ_s + t - 2s is strictly decreasing in s.
        let (mut lo, mut hi) = (1i64, t);
        while lo <= hi {
            let s = (lo + hi) / 2;
            let part = self.parts[(s - 1) as usize];
            let diff = i64::from(part) + t - 2 * s;
            match diff.cmp(&h) {
                std::cmp::Ordering::Equal => {
                    return Some(FixedHookReport {
                        position: s as usize,
                        hook: (i64::from(part) + t - s) as u32,
                        offset: h,
                        part,
                    })
                }
                std::cmp::Ordering::Greater => lo = s + 1,
                std::cmp::Ordering::Less => hi = s - 1,
            }
        }
        None
    }

    /// Smallest `i` with `λ_i = i + h`.
    pub fn find_h_fixed_point(&self, h: i64) -> Option<usize> {
        self.parts.iter().enumerate().find(|&(idx, &p)| i64::from(p) == idx as i64 + 1 + h).map(|(idx, _)| idx + 1)
    }

    /// Least positive integer that is not a part.
    pub fn mex(&self) -> u32 {
        let mut m = 1;
        for &p in self.parts.iter().rev() {
            if p == m {
                m += 1;
            } else if p > m {
                break;
            }
        }
        m
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        let hi = self.parts.partition_point(|&p| p > i);
        let lo = self.parts.partition_point(|&p| p >= i);
        lo - hi
    }

    /// Part sizes `i` occurring exactly `i` times.
    pub fn parts_equal_to_multiplicity(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        let mut idx = 0;
        while idx < self.parts.len() {
            let p = self.parts[idx];
            let run = self.parts[idx..].iter().take_while(|&&q| q == p).count();
            if run == p as usize {
                out.insert(p);
            }
            idx += run;
        }
        out
    }

    pub fn count_larger_than(&self, k: u32) -> usize {
        self.parts.partition_point(|&p| p > k)
    }

    pub fn count_smaller_than(&self, k: u32) -> usize {
        self.parts.len() - self.parts.partition_point(|&p| p >= k)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ints: Vec<i64> = serde_json::from_str(s.trim()).map_err(|e| PartitionError::Parse(e.to_string()))?;
        Self::from_ints(ints)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ints = Vec::<i64>::deserialize(deserializer)?;
        Self::from_ints(ints).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building partitions in tests and examples; panics on
/// invalid input.
#[macro_export]
macro_rules! partition {
    ($($p:expr),* $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),*]).expect("valid partition literal")
    };
}

/// Streams partitions of `n` (optionally with parts bounded by `max_part`)
/// in descending lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    prefix: Option<u32>,
}

impl Partitions {
    fn bounded(n: u32, max_part: u32) -> Self {
        let current = if n == 0 {
            Some(Vec::new())
        } else if max_part == 0 {
            None
        } else {
            let mut parts = vec![max_part; (n / max_part) as usize];
            if !n.is_multiple_of(max_part) {
                parts.push(n % max_part);
            }
            Some(parts)
        };
        Self { current, prefix: None }
    }

    /// Partitions of `n` whose largest part is exactly `m`; the shards for
    /// `m = 1..=n` cover all partitions of `n > 0` exactly once.
    pub fn with_largest_part(n: u32, m: u32) -> Self {
        if m == 0 || m > n {
            return Self { current: None, prefix: None };
        }
        let mut it = Self::bounded(n - m, m);
        it.prefix = Some(m);
        it
    }

    fn advance(parts: &mut Vec<u32>) -> bool {
        let mut ones = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let size = *last;
        let mut rem = ones + 1;
        while rem > 0 {
            let p = rem.min(size);
            parts.push(p);
            rem -= p;
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.as_mut()?;
        let mut out = Vec::with_capacity(parts.len() + 1);
        out.extend(self.prefix);
        out.extend_from_slice(parts);
        if !Self::advance(parts) {
            self.current = None;
        }
        Some(Partition { parts: out })
    }
}

/// Every partition of `n` exactly once, in descending lexicographic order.
pub fn generate_partitions(n: u32) -> Partitions {
    Partitions::bounded(n, n)
}
