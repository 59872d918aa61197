//! Cross-checks of generating-function coefficients against brute-force
//! counts and bijection image counts.
//!
//! Each identity runs over a parameter grid; every grid cell compares a
//! reference column (an [`oracle`](crate::oracle) count) with one or more
//! other columns for `n` up to `min(n_max, order)` and records the first
//! divergence, if any.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::{b_bijection, f_bijection, mex_map};
use crate::oracle::{self, CountTable};
use crate::partition::{generate_partitions, Partition};
use crate::qseries::{self, choose2, Series};

/// The identities that can be verified, keyed by their external ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    FixedHookCount,
    InsertionProduct,
    FixedHookByPart,
    OnesExact,
    OnesWithLength,
    GeneralizedMex,
    MexClass,
    FixedHookByLength,
    AllFixedHooks,
    FirstColumnHooks,
    PentagonalTruncation,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::FixedHookCount,
        Identity::InsertionProduct,
        Identity::FixedHookByPart,
        Identity::OnesExact,
        Identity::OnesWithLength,
        Identity::GeneralizedMex,
        Identity::MexClass,
        Identity::FixedHookByLength,
        Identity::AllFixedHooks,
        Identity::FirstColumnHooks,
        Identity::PentagonalTruncation,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::FixedHookCount => "thm2.1",
            Identity::InsertionProduct => "prop2.2",
            Identity::FixedHookByPart => "thm3.2",
            Identity::OnesExact => "thm3.3",
            Identity::OnesWithLength => "thm3.4",
            Identity::GeneralizedMex => "thm3.5",
            Identity::MexClass => "cor3.6",
            Identity::FixedHookByLength => "thm4.1",
            Identity::AllFixedHooks => "thm4.2",
            Identity::FirstColumnHooks => "thm4.3",
            Identity::PentagonalTruncation => "pentagonal-truncation",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.id() == id)
    }

    pub fn summary(self) -> &'static str {
        match self {
            Identity::FixedHookCount => "0-fixed hooks = parts equal to their multiplicity",
            Identity::InsertionProduct => "1/((q)_a (q)_b) = [a+b over b]/(q)_{a+b} via slide insertion",
            Identity::FixedHookByPart => "h-fixed hooks at a part of size k",
            Identity::OnesExact => "h-fixed hooks at a part 1 = 1 occurring exactly h+1 times",
            Identity::OnesWithLength => "h-fixed hooks at a part 1 = single 1 and length >= 1-h, at n-h",
            Identity::GeneralizedMex => "h-fixed hooks at part k = shifted generalized mex class",
            Identity::MexClass => "M_k(n) = -1-fixed hooks at part k in partitions of n-binom(k,2)",
            Identity::FixedHookByLength => "h-fixed hooks of length k",
            Identity::AllFixedHooks => "all h-fixed hooks, both summation orders",
            Identity::FirstColumnHooks => "first-column k-hooks = sum over h of h-fixed hooks of length k",
            Identity::PentagonalTruncation => "(-1)^(k+1) truncated pentagonal sum = M_k(n)",
        }
    }

    fn uses_h(self) -> bool {
        matches!(
            self,
            Identity::FixedHookByPart
                | Identity::OnesExact
                | Identity::OnesWithLength
                | Identity::GeneralizedMex
                | Identity::FixedHookByLength
                | Identity::AllFixedHooks
        )
    }

    fn uses_k(self) -> bool {
        matches!(
            self,
            Identity::FixedHookByPart
                | Identity::GeneralizedMex
                | Identity::MexClass
                | Identity::FixedHookByLength
                | Identity::FirstColumnHooks
                | Identity::PentagonalTruncation
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub n_max: u32,
    pub order: i64,
    pub h: Option<i64>,
    pub k: Option<i64>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { n_max: 30, order: 60, h: None, k: None, a: None, b: None }
    }
}

pub const H_GRID: std::ops::RangeInclusive<i64> = -3..=3;
pub const K_GRID: std::ops::RangeInclusive<i64> = 1..=5;
pub const AB_GRID: std::ops::RangeInclusive<usize> = 0..=5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub n: i64,
    pub source: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<usize>,
}

impl fmt::Display for CellParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(h) = self.h {
            parts.push(format!("h={h}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(a) = self.a {
            parts.push(format!("a={a}"));
        }
        if let Some(b) = self.b {
            parts.push(format!("b={b}"));
        }
        if parts.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

/// One grid cell. `status` is `Mismatch` exactly when `divergence` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub params: CellParams,
    pub range: (i64, i64),
    pub reference: String,
    pub compared: Vec<String>,
    pub values: Vec<u64>,
    pub status: Status,
    pub divergence: Option<Divergence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Cell {
    /// Reference value at `n`, if `n` is in range.
    pub fn value_at(&self, n: i64) -> Option<u64> {
        let (lo, hi) = self.range;
        (lo..=hi).contains(&n).then(|| self.values[(n - lo) as usize])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub h: Vec<i64>,
    pub k: Vec<i64>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub summary: String,
    pub n_max: u32,
    pub order: i64,
    pub grid: Grid,
    pub cells: Vec<Cell>,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.cells.iter().all(|c| c.status == Status::Match)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.status == Status::Mismatch)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.identity, self.summary)?;
        for c in &self.cells {
            let (lo, hi) = c.range;
            match &c.divergence {
                None => write!(f, "  [{}] match  n={lo}..{hi}", c.params)?,
                Some(d) => write!(
                    f,
                    "  [{}] MISMATCH n={}: {} = {}, {} = {}",
                    c.params, d.n, c.reference, d.expected, d.source, d.actual
                )?,
            }
            if let Some(note) = &c.note {
                write!(f, "  ({note})")?;
            }
            writeln!(f)?;
        }
        let bad = self.mismatches().count();
        write!(f, "{}: {} cells, {} mismatched", if bad == 0 { "OK" } else { "FAIL" }, self.cells.len(), bad)
    }
}

struct Column {
    name: String,
    values: Vec<BigInt>,
}

impl Column {
    fn new(name: impl Into<String>, lo: i64, hi: i64, f: impl Fn(i64) -> BigInt) -> Self {
        Self { name: name.into(), values: (lo..=hi).map(f).collect() }
    }

    fn table(name: impl Into<String>, lo: i64, hi: i64, t: &CountTable, shift: i64) -> Self {
        Self::new(name, lo, hi, |n| BigInt::from(t.at(n + shift)))
    }

    fn series(name: impl Into<String>, lo: i64, hi: i64, s: &Series) -> Self {
        Self::new(name, lo, hi, |n| s.coeff(n))
    }
}

fn compare(params: CellParams, lo: i64, hi: i64, reference: Column, others: Vec<Column>, note: Option<String>) -> Cell {
    let mut divergence = None;
    'outer: for (idx, n) in (lo..=hi).enumerate() {
        for col in &others {
            if col.values[idx] != reference.values[idx] {
                divergence = Some(Divergence {
                    n,
                    source: col.name.clone(),
                    expected: reference.values[idx].to_string(),
                    actual: col.values[idx].to_string(),
                });
                break 'outer;
            }
        }
    }
    let values = reference.values.iter().map(|v| u64::try_from(v).expect("oracle counts are nonnegative")).collect();
    Cell {
        params,
        range: (lo, hi),
        reference: reference.name,
        compared: others.into_iter().map(|c| c.name).collect(),
        values,
        status: if divergence.is_some() { Status::Mismatch } else { Status::Match },
        divergence,
        note,
    }
}

fn hk(h: i64, k: i64) -> CellParams {
    CellParams { h: Some(h), k: Some(k), ..CellParams::default() }
}

fn only_h(h: i64) -> CellParams {
    CellParams { h: Some(h), ..CellParams::default() }
}

fn only_k(k: i64) -> CellParams {
    CellParams { k: Some(k), ..CellParams::default() }
}

fn upto(n: i64) -> u32 {
    n.max(0) as u32
}

/// Distinct `B(λ, i)` over all admissible `(λ, i)` with `λ ⊢ n` whose image
/// has a 0-fixed hook at a part equal to `i`.
pub fn b_image_count(n: u32) -> u64 {
    let images: BTreeSet<Partition> = generate_partitions(n)
        .flat_map(|lam| {
            lam.parts_equal_to_multiplicity()
                .into_iter()
                .filter_map(|i| {
                    let mu = b_bijection(&lam, i).ok()?;
                    let hook = mu.find_h_fixed_hook(0)?;
                    (hook.part == i && mu.weight() == u64::from(n)).then_some(mu)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    images.len() as u64
}

/// Distinct images of `mex_map` over partitions of `n - binom(k, 2)` with a
/// `-1`-fixed hook at a part `k`, kept only if they lie in the `M_k` class.
pub fn mex_image_count(k: i64, n: i64) -> u64 {
    let base = n - choose2(k);
    if base < 0 {
        return 0;
    }
    let images: BTreeSet<Partition> = generate_partitions(base as u32)
        .filter(|lam| lam.find_h_fixed_hook(-1).is_some_and(|r| i64::from(r.part) == k))
        .filter_map(|lam| mex_map(&lam).ok())
        .filter(|mu| {
            let ku = k as u32;
            mu.weight() as i64 == n && mu.mex() == ku && mu.count_larger_than(ku) > mu.count_smaller_than(ku)
        })
        .collect();
    images.len() as u64
}

/// Distinct `F_{a,b}` images `(ν, ρ)` with `|ν| + |ρ| = n`, over all pairs
/// with at most `a` and `b` parts.
pub fn f_image_count(a: usize, b: usize, n: u32) -> u64 {
    let mut images = BTreeSet::new();
    for m in 0..=n {
        let lams: Vec<Partition> = generate_partitions(m).filter(|p| p.len() <= a).collect();
        let mus: Vec<Partition> = generate_partitions(n - m).filter(|p| p.len() <= b).collect();
        for lam in &lams {
            for mu in &mus {
                if let Ok((nu, rho)) = f_bijection(a, b, lam, mu) {
                    if nu.weight() + rho.weight() == u64::from(n) {
                        images.insert((nu, rho));
                    }
                }
            }
        }
    }
    images.len() as u64
}

pub fn verify(identity: Identity, config: &VerifyConfig) -> VerificationReport {
    let hs: Vec<i64> = match (identity.uses_h(), config.h) {
        (false, _) => Vec::new(),
        (true, Some(h)) => vec![h],
        (true, None) if identity == Identity::OnesExact => (-1..=*H_GRID.end()).collect(),
        (true, None) => H_GRID.collect(),
    };
    let ks: Vec<i64> = match (identity.uses_k(), config.k) {
        (false, _) => Vec::new(),
        (true, Some(k)) => vec![k],
        (true, None) => K_GRID.collect(),
    };
    let (as_, bs): (Vec<usize>, Vec<usize>) = if identity == Identity::InsertionProduct {
        (
            config.a.map_or_else(|| AB_GRID.collect(), |a| vec![a]),
            config.b.map_or_else(|| AB_GRID.collect(), |b| vec![b]),
        )
    } else {
        (Vec::new(), Vec::new())
    };
    let hi = i64::from(config.n_max).min(config.order);
    let order = config.order;

    let cells: Vec<Cell> = match identity {
        Identity::FixedHookCount => fixed_hook_count(hi, order),
        Identity::InsertionProduct => {
            let pairs: Vec<(usize, usize)> = as_.iter().flat_map(|&a| bs.iter().map(move |&b| (a, b))).collect();
            pairs.into_par_iter().map(|(a, b)| insertion_product(a, b, hi, order)).collect()
        }
        Identity::FixedHookByPart => {
            let mut cells: Vec<Cell> = grid(&hs, &ks).into_par_iter().map(|(h, k)| by_part(h, k, hi, order)).collect();
            cells.extend(hs.par_iter().map(|&h| by_part_total(h, hi, order)).collect::<Vec<_>>());
            cells
        }
        Identity::OnesExact => hs.par_iter().flat_map(|&h| ones_exact(h, hi, order)).collect(),
        Identity::OnesWithLength => hs.par_iter().map(|&h| ones_with_length(h, hi, order)).collect(),
        Identity::GeneralizedMex => {
            grid(&hs, &ks).into_par_iter().map(|(h, k)| generalized_mex(h, k, hi, order)).collect()
        }
        Identity::MexClass => ks.par_iter().map(|&k| mex_class(k, hi, order)).collect(),
        Identity::FixedHookByLength => {
            grid(&hs, &ks).into_par_iter().filter(|&(h, k)| h < k).map(|(h, k)| by_hook(h, k, hi, order)).collect()
        }
        Identity::AllFixedHooks => hs.par_iter().map(|&h| all_fixed(h, hi, order)).collect(),
        Identity::FirstColumnHooks => ks.par_iter().map(|&k| first_column(k, hi, order)).collect(),
        Identity::PentagonalTruncation => ks.par_iter().map(|&k| pentagonal(k, hi, order)).collect(),
    };

    VerificationReport {
        identity: identity.id().to_string(),
        summary: identity.summary().to_string(),
        n_max: config.n_max,
        order,
        grid: Grid { h: hs, k: ks, a: as_, b: bs },
        cells,
    }
}

fn grid(hs: &[i64], ks: &[i64]) -> Vec<(i64, i64)> {
    hs.iter().flat_map(|&h| ks.iter().map(move |&k| (h, k))).collect()
}

fn fixed_hook_count(hi: i64, order: i64) -> Vec<Cell> {
    let f = oracle::count_fixed_hooks(0, upto(hi));
    let mult = oracle::count_parts_eq_mult(upto(hi));
    let single = qseries::gf_fixed_hooks(order);
    let double = qseries::gf_fixed_hooks_double_sum(order);
    let images: Vec<u64> = (0..=hi).into_par_iter().map(|n| b_image_count(n as u32)).collect();
    let cell = compare(
        CellParams::default(),
        0,
        hi,
        Column::table("oracle fixed hooks", 0, hi, &f, 0),
        vec![
            Column::table("oracle parts equal to multiplicity", 0, hi, &mult, 0),
            Column::series("gf single sum", 0, hi, &single),
            Column::series("gf double sum", 0, hi, &double),
            Column::new("B image count", 0, hi, |n| BigInt::from(images[n as usize])),
        ],
        None,
    );
    vec![cell]
}

fn insertion_product(a: usize, b: usize, hi: i64, order: i64) -> Cell {
    let pairs = oracle::count_bounded_pairs(a, b, upto(hi));
    let left = &qseries::inv_finite_pochhammer(a as i64, order) * &qseries::inv_finite_pochhammer(b as i64, order);
    let right =
        &qseries::q_binomial((a + b) as i64, b as i64, order) * &qseries::inv_finite_pochhammer((a + b) as i64, order);
    let images: Vec<u64> = (0..=hi).into_par_iter().map(|n| f_image_count(a, b, n as u32)).collect();
    compare(
        CellParams { a: Some(a), b: Some(b), ..CellParams::default() },
        0,
        hi,
        Column::table("oracle bounded pairs", 0, hi, &pairs, 0),
        vec![
            Column::series("1/((q)_a (q)_b)", 0, hi, &left),
            Column::series("[a+b over b]/(q)_{a+b}", 0, hi, &right),
            Column::new("F image count", 0, hi, |n| BigInt::from(images[n as usize])),
        ],
        None,
    )
}

fn by_part(h: i64, k: i64, hi: i64, order: i64) -> Cell {
    let t = oracle::count_h_fixed_by_part(h, k, upto(hi));
    let s = qseries::gf_h_fixed_part_k(h, k, order).expect("k in grid is positive");
    compare(hk(h, k), 0, hi, Column::table("oracle by part", 0, hi, &t, 0), vec![Column::series("gf", 0, hi, &s)], None)
}

fn by_part_total(h: i64, hi: i64, order: i64) -> Cell {
    let t = oracle::count_fixed_hooks(h, upto(hi));
    let parts: Vec<CountTable> = (1..=hi.max(1)).map(|k| oracle::count_h_fixed_by_part(h, k, upto(hi))).collect();
    let s = qseries::gf_all_h_fixed_by_parts(h, order);
    compare(
        only_h(h),
        0,
        hi,
        Column::table("oracle fixed hooks", 0, hi, &t, 0),
        vec![
            Column::new("oracle sum over k of by part", 0, hi, |n| {
                BigInt::from(parts.iter().map(|p| p.at(n)).sum::<u64>())
            }),
            Column::series("gf sum over k", 0, hi, &s),
        ],
        Some("all part sizes".into()),
    )
}

fn ones_exact(h: i64, hi: i64, order: i64) -> Vec<Cell> {
    let part = oracle::count_h_fixed_by_part(h, 1, upto(hi));
    let Some(ones) = oracle::count_ones_exact(h, upto(hi)) else {
        return Vec::new();
    };
    let s = qseries::gf_ones_exact(h, order).expect("h >= -1 here");
    if h != -1 {
        return vec![compare(
            only_h(h),
            0,
            hi,
            Column::table("oracle by part 1", 0, hi, &part, 0),
            vec![Column::table("oracle ones exact", 0, hi, &ones, 0), Column::series("gf", 0, hi, &s)],
            None,
        )];
    }
    let lo = 1.min(hi);
    let main = compare(
        only_h(h),
        lo,
        hi,
        Column::table("oracle by part 1", lo, hi, &part, 0),
        vec![Column::table("oracle ones exact", lo, hi, &ones, 0), Column::series("gf", lo, hi, &s)],
        Some("n = 0 checked separately".into()),
    );
    let exception = compare(
        only_h(h),
        0,
        0,
        Column::table("oracle by part 1", 0, 0, &part, 0),
        vec![
            Column::series("gf", 0, 0, &s),
            Column::new("oracle ones exact less the empty partition", 0, 0, |n| BigInt::from(ones.at(n)) - 1),
        ],
        Some(format!(
            "exception at n = 0: the empty partition has no 1s ({} counted) but no -1-fixed hook",
            ones.at(0)
        )),
    );
    vec![exception, main]
}

fn ones_with_length(h: i64, hi: i64, order: i64) -> Cell {
    let part = oracle::count_h_fixed_by_part(h, 1, upto(hi));
    let single = oracle::count_ones_single_with_length(h, upto(hi - h));
    let shifted = qseries::gf_ones_shifted(h, order);
    let direct = qseries::gf_h_fixed_part_k(h, 1, order).expect("k = 1");
    compare(
        only_h(h),
        0,
        hi,
        Column::table("oracle by part 1", 0, hi, &part, 0),
        vec![
            Column::table("oracle single 1 with length at n-h", 0, hi, &single, -h),
            Column::series("gf shifted", 0, hi, &shifted),
            Column::series("gf by part 1", 0, hi, &direct),
        ],
        None,
    )
}

fn generalized_mex(h: i64, k: i64, hi: i64, order: i64) -> Cell {
    let shift = choose2(k) - (h + 1);
    let part = oracle::count_h_fixed_by_part(h, k, upto(hi));
    let mex = oracle::count_generalized_mex(h, k, upto(hi + shift));
    let s = qseries::gf_generalized_mex(h, k, order).expect("k in grid is positive");
    compare(
        hk(h, k),
        0,
        hi,
        Column::table("oracle by part", 0, hi, &part, 0),
        vec![
            Column::table("oracle generalized mex at n+binom(k,2)-h-1", 0, hi, &mex, shift),
            Column::series("gf", 0, hi, &s),
        ],
        None,
    )
}

fn mex_class(k: i64, hi: i64, order: i64) -> Cell {
    let c = choose2(k);
    let m = oracle::count_mex_class(k, upto(hi));
    let part = oracle::count_h_fixed_by_part(-1, k, upto(hi - c));
    let s = qseries::gf_mex_class(k, order).expect("k in grid is positive");
    let shifted_part = qseries::gf_h_fixed_part_k(-1, k, order - c).expect("k in grid is positive").shift(c);
    let images: Vec<u64> = (0..=hi).into_par_iter().map(|n| mex_image_count(k, n)).collect();
    compare(
        only_k(k),
        0,
        hi,
        Column::table("oracle M_k", 0, hi, &m, 0),
        vec![
            Column::table("oracle -1-fixed by part k at n-binom(k,2)", 0, hi, &part, -c),
            Column::series("gf M_k", 0, hi, &s),
            Column::series("q^binom(k,2) gf by part", 0, hi, &shifted_part),
            Column::new("mex map image count", 0, hi, |n| BigInt::from(images[n as usize])),
        ],
        None,
    )
}

fn by_hook(h: i64, k: i64, hi: i64, order: i64) -> Cell {
    let t = oracle::count_h_fixed_by_hook(h, k, upto(hi));
    let s = qseries::gf_h_fixed_hook_k(h, k, order).expect("h < k here");
    compare(hk(h, k), 0, hi, Column::table("oracle by hook", 0, hi, &t, 0), vec![Column::series("gf", 0, hi, &s)], None)
}

fn all_fixed(h: i64, hi: i64, order: i64) -> Cell {
    let t = oracle::count_fixed_hooks(h, upto(hi));
    let mut cols = vec![
        Column::series("gf by hook length", 0, hi, &qseries::gf_all_h_fixed(h, order)),
        Column::series("gf by part size", 0, hi, &qseries::gf_all_h_fixed_by_part_size(h, order)),
    ];
    if h == -1 {
        cols.push(Column::series("sum of shifted M_l", 0, hi, &qseries::gf_all_minus_one_fixed_by_mex(order)));
    }
    compare(only_h(h), 0, hi, Column::table("oracle fixed hooks", 0, hi, &t, 0), cols, None)
}

fn first_column(k: i64, hi: i64, order: i64) -> Cell {
    let t = oracle::count_first_column_k_hooks(k, upto(hi));
    let direct = qseries::gf_first_column_k_hooks(k, order).expect("k in grid is positive");
    let summed = qseries::gf_first_column_k_hooks_by_offsets(k, order).expect("k in grid is positive");
    compare(
        only_k(k),
        0,
        hi,
        Column::table("oracle first-column k-hooks", 0, hi, &t, 0),
        vec![Column::series("gf product", 0, hi, &direct), Column::series("gf sum over h", 0, hi, &summed)],
        None,
    )
}

fn pentagonal(k: i64, hi: i64, order: i64) -> Cell {
    let m = oracle::count_mex_class(k, upto(hi));
    let sign = if k % 2 == 1 { BigInt::from(1) } else { BigInt::from(-1) };
    let s = qseries::gf_mex_class(k, order).expect("k in grid is positive");
    let lo = 1.min(hi);
    compare(
        only_k(k),
        lo,
        hi,
        Column::table("oracle M_k", lo, hi, &m, 0),
        vec![
            Column::new("(-1)^(k+1) truncated pentagonal sum", lo, hi, |n| {
                &sign * qseries::truncated_pentagonal(k as usize, n as usize)
            }),
            Column::series("gf M_k", lo, hi, &s),
        ],
        Some("from n = 1; at n = 0 the truncated sum is p(0) = 1".into()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in Identity::ALL {
            assert_eq!(Identity::from_id(t.id()), Some(t));
        }
        assert_eq!(Identity::from_id("thm9.9"), None);
    }

    #[test]
    fn fixed_hook_count_small() {
        let config = VerifyConfig { n_max: 12, order: 20, ..VerifyConfig::default() };
        let report = verify(Identity::FixedHookCount, &config);
        assert!(report.all_match(), "{report}");
        assert_eq!(report.cells[0].value_at(9), Some(12));
    }

    #[test]
    fn mismatch_iff_divergence() {
        let bad = compare(
            CellParams::default(),
            0,
            2,
            Column::new("a", 0, 2, BigInt::from),
            vec![Column::new("b", 0, 2, |n| BigInt::from(n.min(1)))],
            None,
        );
        assert_eq!(bad.status, Status::Mismatch);
        let d = bad.divergence.unwrap();
        assert_eq!((d.n, d.expected.as_str(), d.actual.as_str()), (2, "2", "1"));
    }

    #[test]
    fn ones_exception_is_annotated() {
        let config = VerifyConfig { n_max: 10, order: 20, h: Some(-1), ..VerifyConfig::default() };
        let report = verify(Identity::OnesExact, &config);
        assert!(report.all_match(), "{report}");
        assert!(report.cells[0].note.as_deref().unwrap().contains("n = 0"));
    }
}
