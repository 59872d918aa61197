//! Brute-force counters over all partitions of each `n`.
//!
//! Nothing here touches [`crate::qseries`]: every count comes from walking
//! the partitions themselves, so the tables can serve as ground truth for the
//! generating functions. Each sweep is checked against `p(n)` from the
//! pentagonal recurrence before it is returned.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::partition::{Partition, Partitions};

/// Parameters a statistic was computed with.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<i64>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn h(h: i64) -> Self {
        Self { h: Some(h), ..Self::default() }
    }

    pub fn k(k: i64) -> Self {
        Self { k: Some(k), ..Self::default() }
    }

    pub fn hk(h: i64, k: i64) -> Self {
        Self { h: Some(h), k: Some(k), ..Self::default() }
    }
}

/// Exact counts `n ↦ value` for every `n` in `0..=n_max`, zeros included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub statistic: String,
    pub params: Params,
    pub values: BTreeMap<u32, u64>,
}

impl CountTable {
    pub fn get(&self, n: u32) -> Option<u64> {
        self.values.get(&n).copied()
    }

    /// Value at `n`, or 0 for negative `n`; panics beyond the computed range.
    pub fn at(&self, n: i64) -> u64 {
        if n < 0 {
            return 0;
        }
        self.get(n as u32).unwrap_or_else(|| panic!("{} not computed at n = {n}", self.statistic))
    }

    pub fn n_max(&self) -> u32 {
        self.values.keys().next_back().copied().unwrap_or(0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in &self.values {
            writeln!(out, "{n},{c}").unwrap();
        }
        out
    }

    /// OEIS b-file lines `index value`, the first entry getting index `offset`.
    pub fn to_bfile(&self, offset: i64) -> String {
        let mut out = String::new();
        for (idx, c) in self.values.values().enumerate() {
            writeln!(out, "{} {c}", offset + idx as i64).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("count tables serialize")
    }
}

/// `p(0..=n_max)` from Euler's pentagonal recurrence, in `u64`.
pub fn partition_counts(n_max: u32) -> Vec<u64> {
    let n_max = n_max as usize;
    let mut p = vec![0u64; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut acc: i128 = 0;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1] as i128;
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2] as i128;
            }
        }
        p[n] = u64::try_from(acc).expect("p(n) fits in u64");
    }
    p
}

/// Sums `f` over every partition of each `n ≤ n_max`.
pub fn tabulate<F>(statistic: &str, params: Params, n_max: u32, f: F) -> CountTable
where
    F: Fn(&Partition) -> u64 + Sync,
{
    let shards: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (1..=n).map(move |m| (n, m))).collect();
    let partial: Vec<(u32, u64, u64)> = shards
        .into_par_iter()
        .map(|(n, m)| {
            let (mut total, mut seen) = (0u64, 0u64);
            for p in Partitions::with_largest_part(n, m) {
                total += f(&p);
                seen += 1;
            }
            (n, total, seen)
        })
        .collect();

    let mut values: BTreeMap<u32, u64> = BTreeMap::new();
    let mut seen: BTreeMap<u32, u64> = BTreeMap::new();
    values.insert(0, f(&Partition::empty()));
    seen.insert(0, 1);
    for (n, total, count) in partial {
        *values.entry(n).or_default() += total;
        *seen.entry(n).or_default() += count;
    }
    let expected = partition_counts(n_max);
    for (n, count) in &seen {
        assert_eq!(*count, expected[*n as usize], "enumeration of n = {n} is incomplete");
    }
    CountTable { statistic: statistic.to_string(), params, values }
}

/// Partitions of `n` with an `h`-fixed first-column hook.
pub fn count_fixed_hooks(h: i64, n_max: u32) -> CountTable {
    tabulate("fixed-hooks", Params::h(h), n_max, |p| p.find_h_fixed_hook(h).is_some() as u64)
}

/// `Σ_{λ ⊢ n}` of the number of part sizes `i` that occur exactly `i` times.
pub fn count_parts_eq_mult(n_max: u32) -> CountTable {
    tabulate("parts-eq-mult", Params::none(), n_max, |p| p.parts_equal_to_multiplicity().len() as u64)
}

/// Partitions of `n` in which `i` occurs exactly `i` times.
pub fn count_parts_eq_mult_of_size(i: u32, n_max: u32) -> CountTable {
    let params = Params { i: Some(i64::from(i)), ..Params::default() };
    tabulate("parts-eq-mult-of-size", params, n_max, |p| (p.multiplicity(i) == i as usize) as u64)
}

/// Partitions of `n` whose `h`-fixed hook sits on a part of size `k`.
pub fn count_h_fixed_by_part(h: i64, k: i64, n_max: u32) -> CountTable {
    tabulate("h-fixed-by-part", Params::hk(h, k), n_max, |p| {
        p.find_h_fixed_hook(h).is_some_and(|r| i64::from(r.part) == k) as u64
    })
}

/// Partitions of `n` whose `h`-fixed hook has length `k`.
pub fn count_h_fixed_by_hook(h: i64, k: i64, n_max: u32) -> CountTable {
    tabulate("h-fixed-by-hook", Params::hk(h, k), n_max, |p| {
        p.find_h_fixed_hook(h).is_some_and(|r| i64::from(r.hook) == k) as u64
    })
}

/// Partitions of `n` with a first-column hook of length `k` (at most one,
/// since first-column hooks are distinct).
pub fn count_first_column_k_hooks(k: i64, n_max: u32) -> CountTable {
    tabulate("first-column-k-hooks", Params::k(k), n_max, |p| {
        let t = p.len() as i64;
        p.parts().iter().enumerate().any(|(idx, &part)| i64::from(part) + t - idx as i64 - 1 == k) as u64
    })
}

fn mex_predicate(p: &Partition, slack: i64, k: i64) -> bool {
    let k = match u32::try_from(k) {
        Ok(k) => k,
        Err(_) => return false,
    };
    p.mex() == k && slack + p.count_larger_than(k) as i64 > p.count_smaller_than(k) as i64
}

/// `M_k(n)`: mex `k` and more parts above `k` than below it.
pub fn count_mex_class(k: i64, n_max: u32) -> CountTable {
    tabulate("mex-class", Params::k(k), n_max, |p| mex_predicate(p, 0, k) as u64)
}

/// Partitions of `n` with mex `k` and `h + 1 + #(parts > k) > #(parts < k)`,
/// indexed by their own weight.
pub fn count_generalized_mex(h: i64, k: i64, n_max: u32) -> CountTable {
    tabulate("generalized-mex", Params::hk(h, k), n_max, |p| mex_predicate(p, h + 1, k) as u64)
}

/// Partitions of `n` in which 1 occurs exactly `h + 1` times (`h ≥ -1`).
pub fn count_ones_exact(h: i64, n_max: u32) -> Option<CountTable> {
    let times = usize::try_from(h + 1).ok()?;
    Some(tabulate("ones-exact", Params::h(h), n_max, |p| (p.multiplicity(1) == times) as u64))
}

/// Partitions of `n` with exactly one part 1 and at least `1 - h` parts,
/// indexed by their own weight.
pub fn count_ones_single_with_length(h: i64, n_max: u32) -> CountTable {
    tabulate("ones-single-with-length", Params::h(h), n_max, |p| {
        (p.multiplicity(1) == 1 && p.len() as i64 >= 1 - h) as u64
    })
}

/// Pairs `(λ, μ)` with at most `a` and `b` parts and `|λ| + |μ| = n`.
pub fn count_bounded_pairs(a: usize, b: usize, n_max: u32) -> CountTable {
    let with_a = tabulate("bounded-length", Params::none(), n_max, |p| (p.len() <= a) as u64);
    let with_b = tabulate("bounded-length", Params::none(), n_max, |p| (p.len() <= b) as u64);
    let values = (0..=n_max).map(|n| (n, (0..=n).map(|m| with_a.values[&m] * with_b.values[&(n - m)]).sum())).collect();
    let params = Params { h: Some(a as i64), k: Some(b as i64), i: None };
    CountTable { statistic: "bounded-pairs".into(), params, values }
}

/// Both ones statistics: the exact-multiplicity one (absent for `h < -1`)
/// and the length-constrained one.
pub fn count_ones_statistics(h: i64, n_max: u32) -> (Option<CountTable>, CountTable) {
    (count_ones_exact(h, n_max), count_ones_single_with_length(h, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(t: &CountTable, from: u32, to: u32) -> Vec<u64> {
        (from..=to).map(|n| t.get(n).unwrap()).collect()
    }

    #[test]
    fn partition_counts_small() {
        assert_eq!(partition_counts(10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partition_counts(100)[100], 190_569_292);
    }

    #[test]
    fn fixed_hook_counts() {
        let t = count_fixed_hooks(0, 9);
        assert_eq!(values(&t, 0, 5), vec![0, 1, 0, 1, 2, 3]);
        assert_eq!(t.get(9), Some(12));
    }

    #[test]
    fn parts_equal_to_multiplicity() {
        let t = count_parts_eq_mult(9);
        assert_eq!(t.get(9), Some(12));
        assert_eq!(t.get(5), Some(3));
        assert_eq!(t.get(2), Some(0));
        let split: Vec<u64> = (1..=3).map(|i| count_parts_eq_mult_of_size(i, 9).get(9).unwrap()).collect();
        assert_eq!(split, vec![7, 4, 1]);
    }

    #[test]
    fn part_and_hook_counts() {
        assert_eq!(count_h_fixed_by_part(0, 1, 4).get(4), Some(1));
        assert_eq!(count_h_fixed_by_part(-1, 1, 5).get(5), Some(2));
        assert_eq!(count_h_fixed_by_hook(-1, 1, 5).get(5), Some(1));
        assert_eq!(count_first_column_k_hooks(1, 5).get(5), Some(5));
    }

    #[test]
    fn mex_counts() {
        let m1 = count_mex_class(1, 5);
        assert_eq!(values(&m1, 0, 5), vec![0, 0, 1, 1, 2, 2]);
        assert_eq!(count_generalized_mex(-1, 3, 20).values, count_mex_class(3, 20).values);
    }

    #[test]
    fn ones_counts() {
        let (exact, single) = count_ones_statistics(0, 30);
        let exact = exact.unwrap();
        assert_eq!(exact.get(4), Some(1));
        assert_eq!(exact.values, single.values);
        assert_eq!(count_ones_exact(-1, 0).unwrap().get(0), Some(1));
        assert_eq!(count_fixed_hooks(-1, 0).get(0), Some(0));
        assert!(count_ones_exact(-2, 3).is_none());
    }

    #[test]
    fn serialization() {
        let t = count_fixed_hooks(0, 3);
        assert_eq!(t.to_csv(), "n,count\n0,0\n1,1\n2,0\n3,1\n");
        assert_eq!(t.to_bfile(1), "1 0\n2 1\n3 0\n4 1\n");
        let back: CountTable = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t);
    }
}
