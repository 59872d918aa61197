use hooklab::oracle;
use hooklab::qseries::*;
use num_bigint::BigInt;

const N: i64 = 60;

fn assert_same(left: &Series, right: &Series) {
    assert_eq!(left.first_divergence(right), None, "left {left}\nright {right}");
}

#[test]
fn pochhammer_sum_is_a_tail_product() {
    for t in 0..=10i64 {
        let sum = (0..=N)
            .map(|j| inv_finite_pochhammer(j, N).shift((t + 2) * j).truncate(N).unwrap())
            .fold(Series::zero(N), |acc, s| &acc + &s);
        assert_same(&sum, &inv_pochhammer_tail((t + 2) as u32, N));
    }
}

#[test]
fn euler_inverse() {
    assert_same(&(&pentagonal_series(N) * &inv_pochhammer_tail(1, N)), &Series::one(N));
}

#[test]
fn summing_over_part_sizes_gives_all_fixed_hooks() {
    for h in -3..=3 {
        assert_same(&gf_all_h_fixed_by_parts(h, N), &gf_all_h_fixed(h, N));
    }
}

#[test]
fn coefficients_are_nonnegative() {
    let mut all = vec![gf_fixed_hooks(N), gf_fixed_hooks_double_sum(N), gf_all_minus_one_fixed_by_mex(N)];
    for h in -3..=3 {
        all.push(gf_all_h_fixed(h, N));
        all.push(gf_ones_shifted(h, N));
        for k in 1..=5 {
            all.push(gf_h_fixed_part_k(h, k, N).unwrap());
            all.push(gf_generalized_mex(h, k, N).unwrap());
            if h < k {
                all.push(gf_h_fixed_hook_k(h, k, N).unwrap());
            }
        }
    }
    for k in 1..=5 {
        all.push(gf_mex_class(k, N).unwrap());
        all.push(gf_first_column_k_hooks(k, N).unwrap());
    }
    assert!(all.iter().all(Series::is_nonnegative));
}

#[test]
fn truncation_sign_matches_mex_class() {
    for k in 1..=5i64 {
        let m = gf_mex_class(k, N).unwrap();
        let sign = if k % 2 == 1 { 1 } else { -1 };
        for n in 1..=N {
            assert_eq!(BigInt::from(sign) * truncated_pentagonal(k as usize, n as usize), m.coeff(n), "k={k} n={n}");
        }
    }
    assert_eq!(truncated_pentagonal(1, 5), BigInt::from(2));
}

#[test]
fn partition_numbers_match_the_oracle_recurrence() {
    let ours = partition_numbers(200);
    let oracle = oracle::partition_counts(200);
    for (a, b) in ours.iter().zip(&oracle) {
        assert_eq!(*a, BigInt::from(*b));
    }
    assert_eq!(partition_numbers(500)[500].to_string(), "2300165032574323995027");
}

#[test]
fn ones_shifted_small_h() {
    // Weight 5 = 3 - h: only (2,2,1) has a single 1 and at least three parts.
    assert_eq!(gf_ones_shifted(-2, 10).coeff(3), BigInt::from(1));
    assert_eq!(oracle::count_ones_single_with_length(-2, 5).get(5), Some(1));
}

#[test]
fn series_json_keeps_big_coefficients() {
    let s = inv_pochhammer_tail(1, 400);
    let text = serde_json::to_string(&s).unwrap();
    let back: Series = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
    assert!(text.contains("\"6727090051741041926\""));
}
