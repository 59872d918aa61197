//! q-Pochhammer products, Gaussian binomials and Euler's pentagonal series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Series;

/// `1 / (q^a; q)_∞`: partitions whose parts are all at least `a`.
pub fn inv_pochhammer_tail(a: u32, order: i64) -> Series {
    assert!(a >= 1, "tail product needs a >= 1");
    let mut s = Series::one(order);
    for j in (a as i64)..=order {
        s.div_one_minus_q_pow(j as usize);
    }
    s
}

/// `1 / (q; q)_n`: partitions with parts at most `n`. Zero for `n < 0`.
pub fn inv_finite_pochhammer(n: i64, order: i64) -> Series {
    let mut s = Series::one(order);
    s.div_finite_pochhammer(n);
    s
}

/// Gaussian binomial `[a over b]_q`, a polynomial of degree `b(a-b)`;
/// zero unless `0 <= b <= a`.
pub fn q_binomial(a: i64, b: i64, order: i64) -> Series {
    if b < 0 || a < 0 || b > a {
        return Series::zero(order);
    }
    let b = b.min(a - b);
    let mut s = Series::one(order);
    // prod_{i=1}^{b} (1 - q^{a-b+i}) / (1 - q^i)
    for i in 1..=b {
        s.mul_one_minus_q_pow((a - b + i) as usize);
        s.div_one_minus_q_pow(i as usize);
    }
    s
}

/// `(q; q)_∞ = Σ_{n ∈ Z} (-1)^n q^{n(3n-1)/2}`.
pub fn pentagonal_series(order: i64) -> Series {
    let mut coeffs = vec![BigInt::zero(); (order.max(-1) + 1) as usize];
    for m in 0i64.. {
        // n = m and n = -m give m(3m-1)/2 <= m(3m+1)/2
        let low = m * (3 * m - 1) / 2;
        if low > order {
            break;
        }
        let sign = if m % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        coeffs[low as usize] = sign.clone();
        let high = m * (3 * m + 1) / 2;
        if m > 0 && high <= order {
            coeffs[high as usize] = sign;
        }
    }
    Series::from_coeffs(0, order, coeffs)
}

/// `p(0), …, p(n_max)` from the pentagonal number recurrence.
pub fn partition_numbers(n_max: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    p.push(BigInt::one());
    for n in 1..=n_max {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let add = j % 2 == 1;
            for g in [g1, g2] {
                if g <= n {
                    if add {
                        acc += &p[n - g];
                    } else {
                        acc -= &p[n - g];
                    }
                }
            }
        }
        p.push(acc);
    }
    p
}

/// The first `2 * terms` terms of the pentagonal recurrence, counting the
/// leading `p(n)`:
/// `Σ_{j=0}^{terms-1} (-1)^j [p(n - j(3j+1)/2) - p(n - (j+1)(3j+2)/2)]`.
pub fn truncated_pentagonal(terms: usize, n: usize) -> BigInt {
    let p = partition_numbers(n);
    let at = |m: usize| -> BigInt {
        if m <= n {
            p[n - m].clone()
        } else {
            BigInt::zero()
        }
    };
    let mut acc = BigInt::zero();
    for j in 0..terms {
        let pair = at(j * (3 * j + 1) / 2) - at((j + 1) * (3 * j + 2) / 2);
        if j % 2 == 0 {
            acc += pair;
        } else {
            acc -= pair;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series, from: i64, to: i64) -> Vec<i64> {
        s.coeff_range(from, to).unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn tail_products() {
        let all = inv_pochhammer_tail(1, 10);
        assert_eq!(ints(&all, 0, 10), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(inv_pochhammer_tail(2, 10).coeff(5), BigInt::from(2));
        assert_eq!(inv_pochhammer_tail(11, 10), Series::one(10));
    }

    #[test]
    fn finite_products() {
        assert_eq!(inv_finite_pochhammer(0, 8), Series::one(8));
        assert_eq!(ints(&inv_finite_pochhammer(1, 8), 0, 8), [1; 9]);
        assert_eq!(inv_finite_pochhammer(2, 8).coeff(4), BigInt::from(3));
        assert!(inv_finite_pochhammer(-2, 8).is_zero());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(ints(&q_binomial(2, 1, 6), 0, 6), [1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(ints(&q_binomial(4, 2, 6), 0, 6), [1, 1, 2, 1, 1, 0, 0]);
        assert_eq!(q_binomial(7, 0, 6), Series::one(6));
        assert_eq!(q_binomial(7, 7, 6), Series::one(6));
        assert!(q_binomial(3, 4, 6).is_zero());
        assert!(q_binomial(3, -1, 6).is_zero());
        // [6 over 3] has degree 9 and is palindromic
        let b = q_binomial(6, 3, 12);
        assert_eq!(ints(&b, 0, 12), [1, 1, 2, 3, 3, 3, 3, 2, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn pentagonal_signs() {
        let s = pentagonal_series(15);
        assert_eq!(ints(&s, 0, 15), [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]);
    }

    #[test]
    fn recurrence_values() {
        let p = partition_numbers(10);
        assert_eq!(p[5], BigInt::from(7));
        assert_eq!(p[10], BigInt::from(42));
        assert_eq!(partition_numbers(100)[100], "190569292".parse::<BigInt>().unwrap());
        assert_eq!(truncated_pentagonal(1, 5), BigInt::from(2));
        // p(7) - p(6) - p(5) + p(2) = 15 - 11 - 7 + 2
        assert_eq!(truncated_pentagonal(2, 7), BigInt::from(-1));
    }
}
