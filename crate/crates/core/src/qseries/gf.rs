//! Generating functions for fixed first-column hooks and the related
//! multiplicity and mex statistics.
//!
//! Every constructor returns a series exact up to the requested `order`.
//! Infinite sums are cut through [`SumSpec`], whose per-term lower bound on
//! the exponent is derived from the summand and checked to be increasing.

use super::products::{inv_finite_pochhammer, q_binomial};
use super::{Series, SeriesError};

/// `binom(k, 2)`.
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// One summation index of an infinite (or finite) sum of series.
#[derive(Debug, Clone)]
pub struct SumSpec<F> {
    pub index: &'static str,
    pub start: i64,
    /// Inclusive upper bound for finite sums.
    pub end: Option<i64>,
    /// Lower bound for the smallest exponent in the term at a given index;
    /// must be strictly increasing in the index for unbounded sums.
    pub min_exponent: F,
}

impl<F: Fn(i64) -> i64> SumSpec<F> {
    pub fn new(index: &'static str, start: i64, min_exponent: F) -> Self {
        Self { index, start, end: None, min_exponent }
    }

    pub fn up_to(mut self, end: i64) -> Self {
        self.end = Some(end);
        self
    }

    /// Indices whose terms can reach an exponent `<= order`.
    pub fn indices(&self, order: i64) -> Vec<i64> {
        let mut out = Vec::new();
        let mut prev: Option<i64> = None;
        let mut idx = self.start;
        loop {
            if self.end.is_some_and(|end| idx > end) {
                break;
            }
            let lo = (self.min_exponent)(idx);
            if self.end.is_none() {
                if let Some(p) = prev {
                    assert!(lo > p, "exponent bound for index {} is not increasing at {idx}", self.index);
                }
                if lo > order {
                    break;
                }
            }
            if lo <= order {
                out.push(idx);
            }
            prev = Some(lo);
            idx += 1;
        }
        out
    }

    pub fn materialize(&self, order: i64, term: impl Fn(i64) -> Series) -> Series {
        self.indices(order).into_iter().fold(Series::zero(order), |acc, idx| &acc + &term(idx))
    }
}

/// `q^exponent [a over b]_q / ((q)_{m_1} (q)_{m_2} …)` exact up to `order`.
fn summand(exponent: i64, binom: Option<(i64, i64)>, pochhammers: &[i64], order: i64) -> Series {
    let mut s = match binom {
        Some((a, b)) => q_binomial(a, b, order - exponent).shift(exponent),
        None => Series::monomial(exponent, order),
    };
    for &m in pochhammers {
        s.div_finite_pochhammer(m);
    }
    s
}

fn positive(name: &str, k: i64) -> Result<(), SeriesError> {
    if k < 1 {
        Err(SeriesError::Domain(format!("{name} must be >= 1, got {k}")))
    } else {
        Ok(())
    }
}

/// Partitions with a 0-fixed first-column hook, via
/// `Σ_{T>=0} q^{(T+1)^2} (1 - q^{T+1}) / (q)_∞`.
pub fn gf_fixed_hooks(order: i64) -> Series {
    let numerator = SumSpec::new("T", 0, |t| (t + 1) * (t + 1)).materialize(order, |t| {
        let e = (t + 1) * (t + 1);
        &Series::monomial(e, order) - &Series::monomial(e + t + 1, order)
    });
    let mut s = numerator;
    for j in 1..=order.max(0) {
        s.div_one_minus_q_pow(j as usize);
    }
    s
}

/// The same count summed over the number of parts `k` and the number `j` of
/// parts below the hook:
/// `Σ_{k>=1} Σ_{j>=0} q^{k^2-3kj+2j^2+j} / ((q)_{k-2j-1} (q)_j)`.
pub fn gf_fixed_hooks_double_sum(order: i64) -> Series {
    // With T = k-2j-1 >= 0 the exponent is (T+1)^2 + (T+2)j >= T+1+2j = k.
    SumSpec::new("k", 1, |k| k).materialize(order, |k| {
        SumSpec::new("j", 0, |j| j)
            .up_to((k - 1) / 2)
            .materialize(order, |j| summand(k * k - 3 * k * j + 2 * j * j + j, None, &[k - 2 * j - 1, j], order))
    })
}

/// Partitions with an `h`-fixed hook at a part of size `k`:
/// `Σ_{s>=max(k-h,1)} q^{(k+1)(s-1)+h+1} [s+h-1 over k-1]_q / (q)_{s-1}`.
pub fn gf_h_fixed_part_k(h: i64, k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    let start = (k - h).max(1);
    Ok(SumSpec::new("s", start, |s| (k + 1) * (s - 1) + h + 1)
        .materialize(order, |s| summand((k + 1) * (s - 1) + h + 1, Some((s + h - 1, k - 1)), &[s - 1], order)))
}

/// `q^{h+1} / (q^2; q)_∞`, less its constant term when `h = -1`: partitions
/// in which 1 occurs exactly `h + 1` times, with the empty partition
/// excluded at `h = -1`.
pub fn gf_ones_exact(h: i64, order: i64) -> Result<Series, SeriesError> {
    if h < -1 {
        return Err(SeriesError::Domain(format!("h must be >= -1, got {h}")));
    }
    let mut s = tail_from_two(order - (h + 1)).shift(h + 1);
    if h == -1 {
        s = &s - &Series::one(order);
    }
    Ok(s)
}

fn tail_from_two(order: i64) -> Series {
    let mut s = Series::one(order);
    for j in 2..=order {
        s.div_one_minus_q_pow(j as usize);
    }
    s
}

/// `q^{h+1} (1/(q^2;q)_∞ - Σ_{m=0}^{-h-1} q^{2m}/(q)_m)`, valid for every `h`.
pub fn gf_ones_shifted(h: i64, order: i64) -> Series {
    let inner_order = order - (h + 1);
    let correction = SumSpec::new("m", 0, |m| 2 * m)
        .up_to(-h - 1)
        .materialize(inner_order, |m| summand(2 * m, None, &[m], inner_order));
    (&tail_from_two(inner_order) - &correction).shift(h + 1)
}

/// The mex class `M_k`: partitions with mex `k` having more parts above `k`
/// than below it,
/// `Σ_{n>=k} q^{binom(k,2)+(k+1)n} [n-1 over k-1]_q / (q)_n`.
pub fn gf_mex_class(k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    let base = choose2(k);
    Ok(SumSpec::new("n", k, |n| base + (k + 1) * n)
        .materialize(order, |n| summand(base + (k + 1) * n, Some((n - 1, k - 1)), &[n], order)))
}

/// The `h`-fixed-hook-at-part-`k` count rewritten as a mex class:
/// `q^{h+1-binom(k,2)} Σ_s q^{(k+1)(s-1)+binom(k,2)} [s+h-1 over k-1]_q / (q)_{s-1}`.
/// The inner sum enumerates partitions with mex `k` where
/// `h + 1 + #(parts > k) > #(parts < k)`; the prefactor may be a negative power.
pub fn gf_generalized_mex(h: i64, k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    let shift = h + 1 - choose2(k);
    Ok(gf_generalized_mex_inner(h, k, order - shift)?.shift(shift))
}

/// Inner sum of [`gf_generalized_mex`], i.e. the mex-class partitions counted
/// by their own weight.
pub fn gf_generalized_mex_inner(h: i64, k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    let base = choose2(k);
    let start = (k - h).max(1);
    Ok(SumSpec::new("s", start, |s| (k + 1) * (s - 1) + base)
        .materialize(order, |s| summand((k + 1) * (s - 1) + base, Some((s + h - 1, k - 1)), &[s - 1], order)))
}

/// Partitions whose `h`-fixed hook has length exactly `k` (place `s = k-h`):
/// `Σ_{l=1}^{k} q^{k+l(k-h-1)} [k-1 over l-1]_q / (q)_{k-h-1}`.
pub fn gf_h_fixed_hook_k(h: i64, k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    if h >= k {
        return Err(SeriesError::Domain(format!("an {h}-fixed hook cannot have length {k}")));
    }
    Ok(hook_k_terms(h, k, order))
}

fn hook_k_terms(h: i64, k: i64, order: i64) -> Series {
    SumSpec::new("l", 1, |l| k + l * (k - h - 1))
        .up_to(k)
        .materialize(order, |l| summand(k + l * (k - h - 1), Some((k - 1, l - 1)), &[k - h - 1], order))
}

/// Partitions with an `h`-fixed hook of any length:
/// `Σ_{k>=1} Σ_{l=1}^{k} q^{k+l(k-h-1)} [k-1 over l-1]_q / (q)_{k-h-1}`.
pub fn gf_all_h_fixed(h: i64, order: i64) -> Series {
    // Terms with k <= h vanish; from k = h+1 on the l = 1 exponent 2k-h-1 grows.
    let start = (h + 1).max(1);
    SumSpec::new("k", start, |k| 2 * k - h - 1).materialize(order, |k| hook_k_terms(h, k, order))
}

/// The same count with the sums exchanged:
/// `Σ_{l>=1} q^{-l(h+1)} Σ_{k>=l} q^{(l+1)k} [k-1 over l-1]_q / (q)_{k-h-1}`.
pub fn gf_all_h_fixed_by_part_size(h: i64, order: i64) -> Series {
    // Each term has exponent k + l(k-h-1) >= k >= l.
    SumSpec::new("l", 1, |l| l).materialize(order, |l| {
        let start = l.max(h + 1);
        SumSpec::new("k", start, |k| k + l * (k - h - 1))
            .materialize(order, |k| summand(k + l * (k - h - 1), Some((k - 1, l - 1)), &[k - h - 1], order))
    })
}

/// `Σ_{k>=1} gf_h_fixed_part_k(h, k)`.
pub fn gf_all_h_fixed_by_parts(h: i64, order: i64) -> Series {
    // For k <= h every term starts at q^{h+1}; beyond that at q^{k(k-h)}.
    let mut acc = Series::zero(order);
    for k in 1..=h.max(0) {
        acc = &acc + &gf_h_fixed_part_k(h, k, order).expect("k >= 1");
    }
    let start = (h + 1).max(1);
    let tail = SumSpec::new("k", start, |k| k * (k - h))
        .materialize(order, |k| gf_h_fixed_part_k(h, k, order).expect("k >= 1"));
    &acc + &tail
}

/// `Σ_{l>=1} q^{-binom(l,2)} M_l(q)`, the `h = -1` case of [`gf_all_h_fixed`].
pub fn gf_all_minus_one_fixed_by_mex(order: i64) -> Series {
    // q^{-binom(l,2)} M_l starts at q^{l(l+1)}.
    SumSpec::new("l", 1, |l| l * (l + 1)).materialize(order, |l| {
        let c = choose2(l);
        gf_mex_class(l, order + c).expect("l >= 1").shift(-c)
    })
}

/// Number of first-column hooks of length `k` over all partitions:
/// `q^k / (q^k; q)_∞ · Σ_{l=1}^{k} 1/(q)_{k-l}`.
pub fn gf_first_column_k_hooks(k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    let inner_order = order - k;
    let mut s =
        (1..=k).map(|l| inv_finite_pochhammer(k - l, inner_order)).fold(Series::zero(inner_order), |acc, t| &acc + &t);
    for j in k..=inner_order {
        s.div_one_minus_q_pow(j as usize);
    }
    Ok(s.shift(k))
}

/// `Σ_{h<=k-1} gf_h_fixed_hook_k(h, k)`.
pub fn gf_first_column_k_hooks_by_offsets(k: i64, order: i64) -> Result<Series, SeriesError> {
    positive("k", k)?;
    // Index H = k-1-h >= 0; the l = 1 term starts at q^{k+H}.
    Ok(SumSpec::new("H", 0, |big_h| k + big_h).materialize(order, |big_h| hook_k_terms(k - 1 - big_h, k, order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(s: &Series, from: i64, to: i64) -> Vec<i64> {
        s.coeff_range(from, to).unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn sum_spec_stops_at_order() {
        let spec = SumSpec::new("s", 1, |s| s * s);
        assert_eq!(spec.indices(10), vec![1, 2, 3]);
        let finite = SumSpec::new("m", 0, |m| 2 * m).up_to(-1);
        assert!(finite.indices(10).is_empty());
    }

    #[test]
    #[should_panic(expected = "not increasing")]
    fn sum_spec_rejects_non_increasing_bound() {
        SumSpec::new("x", 0, |_| 0).indices(5);
    }

    #[test]
    fn fixed_hooks_small_coefficients() {
        let s = gf_fixed_hooks(12);
        assert_eq!(ints(&s, 0, 5), [0, 1, 0, 1, 2, 3]);
        assert_eq!(s.coeff(9), BigInt::from(12));
        assert_eq!(gf_fixed_hooks_double_sum(12), s);
    }

    #[test]
    fn fixed_part_examples() {
        assert_eq!(gf_h_fixed_part_k(0, 1, 10).unwrap().coeff(4), BigInt::from(1));
        assert_eq!(gf_h_fixed_part_k(0, 9, 10).unwrap().coeff(9), BigInt::from(0));
        assert!(gf_h_fixed_part_k(0, 0, 10).is_err());
    }

    #[test]
    fn ones_examples() {
        assert_eq!(gf_ones_exact(0, 8).unwrap().coeff(4), BigInt::from(1));
        assert_eq!(gf_ones_exact(-1, 8).unwrap().coeff(0), BigInt::from(0));
        assert_eq!(gf_ones_exact(1, 8).unwrap().coeff(2), BigInt::from(1));
        assert!(gf_ones_exact(-2, 8).is_err());
        // partitions of 5 with at least 3 parts and exactly one 1: only (2,2,1)
        assert_eq!(gf_ones_shifted(-2, 8).coeff(3), BigInt::from(1));
        for h in 0..3 {
            assert_eq!(gf_ones_shifted(h, 20), gf_ones_exact(h, 20).unwrap());
        }
        let diff = &gf_ones_shifted(-1, 20) - &gf_ones_exact(-1, 20).unwrap();
        assert!(diff.is_zero());
    }

    #[test]
    fn mex_class_examples() {
        let m1 = gf_mex_class(1, 10).unwrap();
        assert_eq!(ints(&m1, 0, 5), [0, 0, 1, 1, 2, 2]);
        assert_eq!(gf_mex_class(2, 10).unwrap().coeff(7), BigInt::from(1));
    }

    #[test]
    fn generalized_mex_reduces_to_mex_class() {
        for k in 1..=5 {
            let c = choose2(k);
            let lhs = gf_generalized_mex(-1, k, 30).unwrap();
            let rhs = gf_mex_class(k, 30 + c).unwrap().shift(-c);
            assert_eq!(lhs, rhs, "k = {k}");
            assert_eq!(lhs, gf_h_fixed_part_k(-1, k, 30).unwrap(), "k = {k}");
        }
        assert_eq!(gf_generalized_mex(0, 1, 10).unwrap().coeff(4), BigInt::from(1));
    }

    #[test]
    fn hook_k_examples() {
        let s = gf_h_fixed_hook_k(0, 1, 10).unwrap();
        assert_eq!(ints(&s, 0, 10), [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(gf_h_fixed_hook_k(3, 3, 10).is_err());
        let summed = SumSpec::new("k", 1, |k| k).materialize(25, |k| gf_h_fixed_hook_k(0, k, 25).unwrap());
        assert_eq!(summed, gf_fixed_hooks(25));
    }

    #[test]
    fn all_h_fixed_routes_agree() {
        for h in -3..=3 {
            let a = gf_all_h_fixed(h, 30);
            assert_eq!(a, gf_all_h_fixed_by_parts(h, 30), "h = {h}");
            assert_eq!(a, gf_all_h_fixed_by_part_size(h, 30), "h = {h}");
        }
        assert_eq!(gf_all_h_fixed(-1, 30), gf_all_minus_one_fixed_by_mex(30));
        assert_eq!(ints(&gf_all_h_fixed(0, 10), 1, 5), [1, 0, 1, 2, 3]);
        assert!(gf_all_h_fixed(-6, 5).coeff(5).eq(&BigInt::from(0)));
    }

    #[test]
    fn first_column_hooks() {
        let k1 = gf_first_column_k_hooks(1, 10).unwrap();
        assert_eq!(k1.coeff(5), BigInt::from(5));
        assert_eq!(k1.coeff(1), BigInt::from(1));
        for k in 1..=5 {
            assert_eq!(
                gf_first_column_k_hooks(k, 30).unwrap(),
                gf_first_column_k_hooks_by_offsets(k, 30).unwrap(),
                "k = {k}"
            );
        }
    }
}
