use hooklab::bijections::{b_bijection, b_inverse, f_bijection, f_inverse, insert_part, mex_map, mex_map_inverse};
use hooklab::{generate_partitions, Partition};
use proptest::prelude::*;

fn sorted(mut parts: Vec<u32>) -> Partition {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(sorted)
}

/// `(λ, i)` with `i` occurring exactly `i` times.
fn b_domain() -> impl Strategy<Value = (Partition, u32)> {
    (1u32..=5).prop_flat_map(|i| {
        let big = prop::collection::vec(i + 1..=i + 8, 0..=6);
        let small = if i > 1 { prop::collection::vec(1..i, 0..=8).boxed() } else { Just(Vec::new()).boxed() };
        (big, small).prop_map(move |(big, small)| {
            let mut parts = big;
            parts.extend(std::iter::repeat_n(i, i as usize));
            parts.extend(small);
            (sorted(parts), i)
        })
    })
}

/// Partitions in the `M_k` class, with their `k`.
fn mex_class() -> impl Strategy<Value = (Partition, u32)> {
    (1u32..=5)
        .prop_flat_map(|k| {
            let large = prop::collection::vec(k + 1..=k + 10, 1..=8);
            let extra = if k > 1 { prop::collection::vec(1..k, 0..=6).boxed() } else { Just(Vec::new()).boxed() };
            (Just(k), large, extra)
        })
        .prop_filter_map("more parts above k than below", |(k, large, extra)| {
            let below = (k - 1) as usize + extra.len();
            (large.len() > below).then(|| {
                let mut parts = large;
                parts.extend(1..k);
                parts.extend(extra);
                (sorted(parts), k)
            })
        })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(10, 12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn first_column_hooks_determine_the_partition(p in partition(10, 12)) {
        let hooks = p.first_column_hooks();
        prop_assert!(hooks.windows(2).all(|w| w[0] > w[1]));
        for (idx, &hk) in hooks.iter().enumerate() {
            prop_assert_eq!(p.hook_length(idx + 1, 1).unwrap(), hk);
        }
        prop_assert_eq!(Partition::from_first_column_hooks(&hooks).unwrap(), p.clone());
        prop_assert!(p.mex() as usize <= p.len() + 1);
    }

    #[test]
    fn fixed_hooks_match_a_linear_scan(p in partition(10, 12), h in -6i64..=6) {
        let t = p.len();
        let hits: Vec<usize> = (1..=t)
            .filter(|&s| i64::from(p.hook_length(s, 1).unwrap()) == s as i64 + h)
            .collect();
        prop_assert!(hits.len() <= 1);
        prop_assert_eq!(p.find_h_fixed_hook(h).map(|r| r.position), hits.first().copied());
    }

    #[test]
    fn insertion_preserves_weight(p in partition(8, 10), r in 1i64..=20) {
        let trace = insert_part(&p, r).unwrap();
        prop_assert_eq!(p.weight() + r as u64, trace.result.weight() + trace.slides as u64);
        prop_assert_eq!(trace.result.len(), p.len() + 1);
    }

    #[test]
    fn f_round_trips(a in 0usize..=6, b in 0usize..=6, seed_l in partition(6, 9), seed_m in partition(6, 9)) {
        let lam = Partition::new(seed_l.parts().iter().copied().take(a).collect()).unwrap();
        let mu = Partition::new(seed_m.parts().iter().copied().take(b).collect()).unwrap();
        let (nu, rho) = f_bijection(a, b, &lam, &mu).unwrap();
        prop_assert_eq!(nu.weight() + rho.weight(), lam.weight() + mu.weight());
        prop_assert!(nu.len() <= a + b);
        prop_assert!(rho.len() <= b && rho.largest_part() as usize <= a);
        prop_assert_eq!(f_inverse(a, b, &nu, &rho).unwrap(), (lam, mu));
    }

    #[test]
    fn b_round_trips((lam, i) in b_domain()) {
        let mu = b_bijection(&lam, i).unwrap();
        prop_assert_eq!(mu.weight(), lam.weight());
        let hook = mu.find_h_fixed_hook(0).unwrap();
        prop_assert_eq!(hook.part, i);
        prop_assert_eq!(b_inverse(&mu).unwrap(), (lam, i));
    }

    #[test]
    fn mex_map_round_trips((mu, k) in mex_class()) {
        let lam = mex_map_inverse(&mu, k).unwrap();
        let hook = lam.find_h_fixed_hook(-1).unwrap();
        prop_assert_eq!(hook.part, k);
        prop_assert_eq!(lam.weight() + u64::from(k * (k - 1) / 2), mu.weight());
        prop_assert_eq!(mex_map(&lam).unwrap(), mu);
    }
}

#[test]
fn generation_matches_spot_values() {
    let four: Vec<String> = generate_partitions(4).map(|p| p.to_string()).collect();
    assert_eq!(four, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    assert_eq!(generate_partitions(0).collect::<Vec<_>>(), vec![Partition::empty()]);
    assert_eq!(generate_partitions(9).count(), 30);
}

#[test]
fn conjugation_is_an_involution_exhaustively() {
    for n in 0..=20 {
        for p in generate_partitions(n) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
}
